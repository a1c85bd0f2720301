use std::f64::consts::{PI, SQRT_2};

use crate::domain::{Domain, Point};
use crate::error::{Error, Result};

/// Indexed orthonormal polynomial basis of `P_L` on one of the four domains.
///
/// Element ordering is graded by total degree with fixed, documented tie
/// breaks; coefficient vectors and output files depend on it:
/// - interval: Legendre degree `l = 0..=L`;
/// - disc: ridge elements `(m, k)`, degree `m = 0..=L` outer, angle index
///   `k = 0..=m` inner;
/// - sphere: harmonics of degree `l` occupy the block `l^2..(l+1)^2` in order
///   `m = -l..=l` (sine terms, zonal, cosine terms);
/// - cube: exponent triples sorted by `(l1+l2+l3, l1, l2)`.
#[derive(Debug, Clone)]
pub struct BasisSet {
    domain: Domain,
    degree_cap: u32,
    element_degree: Vec<u32>,
    kind: BasisKind,
}

#[derive(Debug, Clone)]
enum BasisKind {
    Legendre,
    /// Per-element ridge direction `(cos a, sin a)` and degree `m`.
    Ridge(Vec<(f64, f64, u32)>),
    SphericalHarmonic,
    /// Exponent triple per element.
    ChebyshevProduct(Vec<[u16; 3]>),
}

/// Cheap identity token used to check coefficient/basis alignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisId {
    domain: Domain,
    degree_cap: u32,
    size: usize,
}

/// Dimension of `P_L` on the domain.
pub fn dimension(domain: Domain, l: u32) -> usize {
    domain.dimension(l)
}

/// Normalized Legendre basis `p_l = sqrt((2l+1)/2) P_l` on `[-1, 1]`,
/// orthonormal for the weight `1`.
pub fn legendre_basis(l: u32) -> BasisSet {
    BasisSet {
        domain: Domain::Interval,
        degree_cap: l,
        element_degree: (0..=l).collect(),
        kind: BasisKind::Legendre,
    }
}

/// Logan-Shepp ridge basis on the unit disc: for each degree `m` the `m + 1`
/// elements `U_m(x1 cos(k pi/(m+1)) + x2 sin(k pi/(m+1)))`, `k = 0..=m`,
/// with `U_m` the Chebyshev polynomial of the second kind. Orthonormal for
/// the measure `dx/pi`; the normalization is pinned by the discrete Gram
/// identity against [`crate::quadrature::disc_rule`].
pub fn ridge_basis(l: u32) -> BasisSet {
    let mut elems = Vec::with_capacity(Domain::Disc.dimension(l));
    let mut degs = Vec::with_capacity(elems.capacity());
    for m in 0..=l {
        for k in 0..=m {
            let a = k as f64 * PI / (m as f64 + 1.0);
            elems.push((a.cos(), a.sin(), m));
            degs.push(m);
        }
    }
    BasisSet {
        domain: Domain::Disc,
        degree_cap: l,
        element_degree: degs,
        kind: BasisKind::Ridge(elems),
    }
}

/// Real spherical harmonics `Y_{l,k}`, `l = 0..=L`, `2l + 1` per degree,
/// orthonormal for the (unnormalized) surface measure. Evaluated with the
/// fully normalized forward recurrence on the associated Legendre functions.
pub fn spherical_harmonic_basis(l: u32) -> BasisSet {
    let mut degs = Vec::with_capacity(Domain::Sphere.dimension(l));
    for ll in 0..=l {
        degs.extend(std::iter::repeat(ll).take(2 * ll as usize + 1));
    }
    BasisSet {
        domain: Domain::Sphere,
        degree_cap: l,
        element_degree: degs,
        kind: BasisKind::SphericalHarmonic,
    }
}

/// Product Chebyshev basis on `[-1,1]^3` over the total-degree index set
/// `l1 + l2 + l3 <= L`, with factors `sqrt(2) cos(k arccos x)` for `k > 0`
/// and `1` for `k = 0`. Orthonormal for the normalized product Chebyshev
/// measure.
pub fn chebyshev_product_basis(l: u32) -> BasisSet {
    let mut exps = Vec::with_capacity(Domain::Cube.dimension(l));
    let mut degs = Vec::with_capacity(exps.capacity());
    for total in 0..=l {
        for l1 in 0..=total {
            for l2 in 0..=(total - l1) {
                let l3 = total - l1 - l2;
                exps.push([l1 as u16, l2 as u16, l3 as u16]);
                degs.push(total);
            }
        }
    }
    BasisSet {
        domain: Domain::Cube,
        degree_cap: l,
        element_degree: degs,
        kind: BasisKind::ChebyshevProduct(exps),
    }
}

impl BasisSet {
    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    /// Number of elements `d = dim P_L`.
    pub fn size(&self) -> usize {
        self.element_degree.len()
    }

    /// Total degree of each element, non-decreasing.
    pub fn element_degree(&self) -> &[u32] {
        &self.element_degree
    }

    pub fn id(&self) -> BasisId {
        BasisId {
            domain: self.domain,
            degree_cap: self.degree_cap,
            size: self.size(),
        }
    }

    /// Exponent triples for the cube basis, `None` for other domains.
    pub fn cube_exponents(&self) -> Option<&[[u16; 3]]> {
        match &self.kind {
            BasisKind::ChebyshevProduct(e) => Some(e),
            _ => None,
        }
    }

    /// Evaluates every element at `point`, in basis order.
    pub fn eval_all(&self, point: Point) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.size()];
        self.eval_into(point, &mut out)?;
        Ok(out)
    }

    /// Evaluation into a caller-provided buffer of length `size()`.
    pub fn eval_into(&self, point: Point, out: &mut [f64]) -> Result<()> {
        if out.len() != self.size() {
            return Err(Error::invalid(format!(
                "output buffer has length {}, basis has {} elements",
                out.len(),
                self.size()
            )));
        }
        if !self.domain.contains(point) {
            return Err(Error::invalid(format!(
                "point ({}, {}, {}) is outside the {}",
                point[0],
                point[1],
                point[2],
                self.domain.name()
            )));
        }
        match &self.kind {
            BasisKind::Legendre => eval_legendre(self.degree_cap, point[0], out),
            BasisKind::Ridge(elems) => eval_ridge(elems, point, out),
            BasisKind::SphericalHarmonic => eval_harmonics(self.degree_cap, point, out),
            BasisKind::ChebyshevProduct(exps) => {
                eval_chebyshev_product(self.degree_cap, exps, point, out)
            }
        }
        Ok(())
    }
}

fn eval_legendre(l: u32, x: f64, out: &mut [f64]) {
    let x = x.clamp(-1.0, 1.0);
    let mut p0 = 1.0;
    let mut p1 = x;
    out[0] = (0.5f64).sqrt();
    if l >= 1 {
        out[1] = (1.5f64).sqrt() * x;
    }
    for k in 1..l as usize {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
        out[k + 1] = ((2.0 * (kf + 1.0) + 1.0) / 2.0).sqrt() * p2;
    }
}

fn eval_ridge(elems: &[(f64, f64, u32)], point: Point, out: &mut [f64]) {
    for (slot, &(c, s, m)) in out.iter_mut().zip(elems) {
        let t = (point[0] * c + point[1] * s).clamp(-1.0, 1.0);
        // U_m(t) by the second-kind recurrence
        let mut u0 = 1.0;
        let mut u1 = 2.0 * t;
        *slot = match m {
            0 => u0,
            1 => u1,
            _ => {
                for _ in 1..m {
                    let u2 = 2.0 * t * u1 - u0;
                    u0 = u1;
                    u1 = u2;
                }
                u1
            }
        };
    }
}

fn eval_harmonics(l: u32, point: Point, out: &mut [f64]) {
    let lmax = l as usize;
    let z = point[2].clamp(-1.0, 1.0);
    let phi = point[1].atan2(point[0]);
    let sin_theta = (1.0 - z * z).max(0.0).sqrt();
    // fully normalized associated Legendre recurrence, seeded at
    // Pbar_00 = 1/sqrt(4 pi); Y_{l,0} = Pbar_{l,0}, Y_{l,+-m} uses sqrt(2)
    let mut pmm = 1.0 / (4.0 * PI).sqrt();
    for m in 0..=lmax {
        if m > 0 {
            pmm *= sin_theta * ((2.0 * m as f64 + 1.0) / (2.0 * m as f64)).sqrt();
        }
        let (cos_m, sin_m) = if m == 0 {
            (1.0, 0.0)
        } else {
            let a = m as f64 * phi;
            (a.cos(), a.sin())
        };
        let mut put = |ll: usize, p: f64| {
            let base = ll * ll;
            if m == 0 {
                out[base + ll] = p;
            } else {
                out[base + ll + m] = SQRT_2 * p * cos_m;
                out[base + ll - m] = SQRT_2 * p * sin_m;
            }
        };
        put(m, pmm);
        if m == lmax {
            break;
        }
        let mut prev = pmm;
        let mut cur = (2.0 * m as f64 + 3.0).sqrt() * z * pmm;
        put(m + 1, cur);
        for ll in (m + 2)..=lmax {
            let lf = ll as f64;
            let mf = m as f64;
            let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
            let b = (((2.0 * lf + 1.0) * ((lf - 1.0) * (lf - 1.0) - mf * mf))
                / ((2.0 * lf - 3.0) * (lf * lf - mf * mf)))
                .sqrt();
            let next = a * z * cur - b * prev;
            prev = cur;
            cur = next;
            put(ll, cur);
        }
    }
}

fn eval_chebyshev_product(l: u32, exps: &[[u16; 3]], point: Point, out: &mut [f64]) {
    // per-axis values T~_k(x_s), k = 0..=L
    let n = l as usize + 1;
    let mut axis = [vec![0.0f64; n], vec![0.0f64; n], vec![0.0f64; n]];
    for (s, vals) in axis.iter_mut().enumerate() {
        let x = point[s].clamp(-1.0, 1.0);
        let mut t0 = 1.0;
        let mut t1 = x;
        vals[0] = 1.0;
        if n > 1 {
            vals[1] = SQRT_2 * x;
        }
        for k in 2..n {
            let t2 = 2.0 * x * t1 - t0;
            t0 = t1;
            t1 = t2;
            vals[k] = SQRT_2 * t2;
        }
    }
    for (slot, e) in out.iter_mut().zip(exps) {
        *slot = axis[0][e[0] as usize] * axis[1][e[1] as usize] * axis[2][e[2] as usize];
    }
}
