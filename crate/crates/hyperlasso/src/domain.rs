use serde::{Deserialize, Serialize};

/// A point in ambient coordinates. The interval uses only the first
/// coordinate, the disc the first two, sphere and cube all three.
pub type Point = [f64; 3];

/// Tolerance for domain-membership checks on evaluation points.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

/// The four supported regions, each carrying its reference measure:
/// `dx` on `[-1,1]`, `dx/pi` on the unit disc, the surface measure on the
/// unit sphere, and the normalized product Chebyshev measure on `[-1,1]^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Interval,
    Disc,
    Sphere,
    Cube,
}

impl Domain {
    /// Total measure `V` of the region.
    pub fn volume(self) -> f64 {
        match self {
            Domain::Interval => 2.0,
            Domain::Disc => 1.0,
            Domain::Sphere => 4.0 * std::f64::consts::PI,
            Domain::Cube => 1.0,
        }
    }

    /// Dimension of the space of polynomials of total degree at most `l`
    /// restricted to the region.
    pub fn dimension(self, l: u32) -> usize {
        let l = l as usize;
        match self {
            Domain::Interval => l + 1,
            Domain::Disc => (l + 1) * (l + 2) / 2,
            Domain::Sphere => (l + 1) * (l + 1),
            Domain::Cube => (l + 1) * (l + 2) * (l + 3) / 6,
        }
    }

    /// Membership test with tolerance [`MEMBERSHIP_TOL`]. Boundary points are
    /// inside.
    pub fn contains(self, p: Point) -> bool {
        let t = MEMBERSHIP_TOL;
        match self {
            Domain::Interval => p[0].abs() <= 1.0 + t,
            Domain::Disc => p[0] * p[0] + p[1] * p[1] <= 1.0 + t,
            Domain::Sphere => {
                let r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
                (r2.sqrt() - 1.0).abs() <= t
            }
            Domain::Cube => p.iter().all(|c| c.abs() <= 1.0 + t),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Domain::Interval => "interval",
            Domain::Disc => "disc",
            Domain::Sphere => "sphere",
            Domain::Cube => "cube",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn volumes() {
        assert_abs_diff_eq!(Domain::Interval.volume(), 2.0);
        assert_abs_diff_eq!(Domain::Disc.volume(), 1.0);
        assert_abs_diff_eq!(Domain::Sphere.volume(), 4.0 * std::f64::consts::PI);
        assert_abs_diff_eq!(Domain::Cube.volume(), 1.0);
    }

    #[test]
    fn dimensions_match_per_domain_formulas() {
        assert_eq!(Domain::Interval.dimension(250), 251);
        assert_eq!(Domain::Disc.dimension(16), 153);
        assert_eq!(Domain::Sphere.dimension(15), 256);
        assert_eq!(Domain::Cube.dimension(50), 23_426);
        assert_eq!(Domain::Cube.dimension(0), 1);
    }

    #[test]
    fn membership_allows_boundary() {
        assert!(Domain::Cube.contains([1.0, 1.0, 1.0]));
        assert!(Domain::Interval.contains([-1.0, 0.0, 0.0]));
        assert!(!Domain::Interval.contains([1.1, 0.0, 0.0]));
        assert!(Domain::Sphere.contains([0.0, 0.0, 1.0]));
        assert!(!Domain::Sphere.contains([0.0, 0.0, 0.9]));
        assert!(!Domain::Disc.contains([0.9, 0.9, 0.0]));
    }
}
