use std::f64::consts::PI;
use std::fmt;
use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::basis::BasisSet;
use crate::domain::{Domain, Point};
use crate::error::{Error, Result};

/// Positive-weight quadrature rule on one of the four domains, exact for all
/// polynomials up to `exactness_degree` under the domain's measure.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    domain: Domain,
    nodes: Vec<Point>,
    weights: Vec<f64>,
    exactness_degree: u32,
    grid: Option<CubeGrid>,
}

/// Tensor structure of the cube rule: all nodes lie on the grid
/// `C x C x C` with `C = {cos(k*pi/m), k=0..m}`, and the weights factor per
/// axis. Kept so coefficient computation and grid evaluation can run as three
/// nested one-dimensional cosine sums instead of a full matrix product.
#[derive(Debug, Clone)]
pub struct CubeGrid {
    /// `m = L + 1`; the 1-D grid has `m + 1` points.
    pub m: usize,
    /// The 1-D Chebyshev-Lobatto points `cos(k*pi/m)`, `k = 0..=m`.
    pub axis_points: Vec<f64>,
    /// Grid index triple of each node, aligned with `nodes`.
    pub triples: Vec<[u16; 3]>,
}

impl QuadratureRule {
    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn exactness_degree(&self) -> u32 {
        self.exactness_degree
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Tensor-grid structure, present only for rules built by [`cube_rule`].
    pub fn cube_grid(&self) -> Option<&CubeGrid> {
        self.grid.as_ref()
    }

    fn validate(self) -> Result<Self> {
        debug_assert!(self.weights.iter().all(|&w| w > 0.0));
        let sum: f64 = kahan_sum(self.weights.iter().copied());
        let v = self.domain.volume();
        if (sum - v).abs() > 1e-10 * v.max(1.0) {
            return Err(Error::Validation(format!(
                "weights of the {} rule sum to {sum:.15e}, expected volume {v:.15e}",
                self.domain.name()
            )));
        }
        Ok(self)
    }
}

fn kahan_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut c = 0.0;
    for v in values {
        let y = v - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` for weight function 1.
///
/// Nodes are found by Newton iteration on the three-term Legendre recurrence
/// from the Chebyshev-angle initial guesses; accurate to machine precision
/// for `n` up to at least 1000.
pub(crate) fn gauss_legendre_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let half = n / 2;
    for i in 0..(n + 1) / 2 {
        // initial guess for the (i+1)-th root in descending order
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-15 {
                let (p2, d2) = legendre_with_derivative(n, x);
                x -= p2 / d2;
                dp = legendre_with_derivative(n, x).1;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // roots come out in descending order; store ascending and mirror
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[half] = 0.0;
        let (_, d) = legendre_with_derivative(n, 0.0);
        weights[half] = 2.0 / (d * d);
    }
    (nodes, weights)
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let d = if (1.0 - x * x).abs() < 1e-300 {
        // endpoints: P_n'(+-1) = (+-1)^{n-1} n(n+1)/2
        let s = if n % 2 == 0 { x } else { 1.0 };
        s * (n * (n + 1)) as f64 / 2.0
    } else {
        (n as f64) * (x * p1 - p0) / (x * x - 1.0)
    };
    (p1, d)
}

/// `n`-point Gauss-Legendre rule on `[-1, 1]`, exact through degree `2n - 1`.
pub fn gauss_legendre_rule(n: usize) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::invalid("gauss_legendre_rule requires n >= 1"));
    }
    let (xs, ws) = gauss_legendre_nodes(n);
    QuadratureRule {
        domain: Domain::Interval,
        nodes: xs.iter().map(|&x| [x, 0.0, 0.0]).collect(),
        weights: ws,
        exactness_degree: (2 * n - 1) as u32,
        grid: None,
    }
    .validate()
}

/// Product rule on the unit disc for the measure `dx/pi`: the `(n+1)`-point
/// Gauss-Legendre rule mapped to `[0, 1]` in the radius crossed with the
/// `(2n+1)`-point trapezoidal rule in the azimuth. Exact through degree `2n`.
pub fn disc_rule(n: usize) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::invalid("disc_rule requires N >= 1"));
    }
    let (xs, ws) = gauss_legendre_nodes(n + 1);
    let m = 2 * n + 1;
    let mut nodes = Vec::with_capacity((n + 1) * m);
    let mut weights = Vec::with_capacity((n + 1) * m);
    for (x, w) in xs.iter().zip(&ws) {
        let r = 0.5 * (x + 1.0);
        let wr = 0.5 * w;
        for k in 0..m {
            let theta = 2.0 * PI * k as f64 / m as f64;
            nodes.push([r * theta.cos(), r * theta.sin(), 0.0]);
            weights.push(wr * (2.0 / m as f64) * r);
        }
    }
    QuadratureRule {
        domain: Domain::Disc,
        nodes,
        weights,
        exactness_degree: (2 * n) as u32,
        grid: None,
    }
    .validate()
}

/// Product rule on the unit sphere: `(l+1)`-point Gauss-Legendre in
/// `z = cos(theta)` crossed with `2l+1` equispaced azimuth points, scaled to
/// the surface measure. Exact through degree `2l`; weights sum to `4*pi`.
pub fn sphere_product_rule(l: u32) -> Result<QuadratureRule> {
    let nz = l as usize + 1;
    let m = 2 * l as usize + 1;
    let (zs, ws) = gauss_legendre_nodes(nz);
    let mut nodes = Vec::with_capacity(nz * m);
    let mut weights = Vec::with_capacity(nz * m);
    for (z, w) in zs.iter().zip(&ws) {
        let s = (1.0 - z * z).max(0.0).sqrt();
        for k in 0..m {
            let phi = 2.0 * PI * k as f64 / m as f64;
            nodes.push([s * phi.cos(), s * phi.sin(), *z]);
            weights.push(w * 2.0 * PI / m as f64);
        }
    }
    QuadratureRule {
        domain: Domain::Sphere,
        nodes,
        weights,
        exactness_degree: 2 * l,
        grid: None,
    }
    .validate()
}

/// Reads a spherical `t`-design from a plain-text file: one point per line,
/// three whitespace-separated coordinates; blank lines and lines starting
/// with `#` are ignored. Points must be unit vectors within `1e-8` and are
/// renormalized exactly on load. The equal-weight rule is then verified:
/// every spherical harmonic of degree `1..=t` must integrate to zero within
/// `tol`, otherwise loading fails with the worst offending harmonic.
pub fn load_t_design(path: impl AsRef<Path>, t: u32) -> Result<QuadratureRule> {
    load_t_design_with_tol(path, t, 1e-10)
}

pub fn load_t_design_with_tol(path: impl AsRef<Path>, t: u32, tol: f64) -> Result<QuadratureRule> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut nodes: Vec<Point> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut coords = [0.0f64; 3];
        let mut parts = line.split_whitespace();
        for c in coords.iter_mut() {
            let tok = parts.next().ok_or_else(|| Error::Parse {
                path: path.to_path_buf(),
                line: lineno + 1,
                message: "expected three coordinates".into(),
            })?;
            *c = tok.parse().map_err(|_| Error::Parse {
                path: path.to_path_buf(),
                line: lineno + 1,
                message: format!("not a number: {tok:?}"),
            })?;
        }
        if parts.next().is_some() {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                line: lineno + 1,
                message: "more than three coordinates".into(),
            });
        }
        let norm = (coords[0] * coords[0] + coords[1] * coords[1] + coords[2] * coords[2]).sqrt();
        if (norm - 1.0).abs() > 1e-8 {
            return Err(Error::Validation(format!(
                "{}:{}: point has norm {norm:.12}, expected a unit vector",
                path.display(),
                lineno + 1
            )));
        }
        nodes.push([coords[0] / norm, coords[1] / norm, coords[2] / norm]);
    }
    if nodes.is_empty() {
        return Err(Error::Validation(format!(
            "{}: no points found",
            path.display()
        )));
    }
    let n = nodes.len();
    let w = 4.0 * PI / n as f64;
    let rule = QuadratureRule {
        domain: Domain::Sphere,
        nodes,
        weights: vec![w; n],
        exactness_degree: t,
        grid: None,
    }
    .validate()?;

    // Moment test of the design property: integrating Y_{l,k} for l >= 1
    // must give zero. Degree 0 is Sum(w)=4*pi, already checked above.
    if t >= 1 {
        let basis = crate::basis::spherical_harmonic_basis(t);
        let mut worst = (0.0f64, 0usize);
        let mut moments = vec![0.0f64; basis.size()];
        let mut buf = vec![0.0f64; basis.size()];
        for (node, wj) in rule.nodes.iter().zip(&rule.weights) {
            basis.eval_into(*node, &mut buf)?;
            for (m, v) in moments.iter_mut().zip(&buf) {
                *m += wj * v;
            }
        }
        for (idx, m) in moments.iter().enumerate().skip(1) {
            if m.abs() > worst.0 {
                worst = (m.abs(), idx);
            }
        }
        if worst.0 > tol {
            let deg = basis.element_degree()[worst.1];
            return Err(Error::Exactness {
                what: format!("harmonic #{} (degree {})", worst.1, deg),
                residual: worst.0,
                tol,
            });
        }
    }
    Ok(rule)
}

/// Cubature in `[-1,1]^3` for the normalized product Chebyshev measure.
///
/// Nodes are the union of the even-index and odd-index subgrids of the
/// Chebyshev-Lobatto tensor grid with `m = l + 1`:
/// `(C^E)^3 u (C^O)^3`. The weight of a node is `4/(l+1)^3` times 1, 1/2,
/// 1/4 or 1/8 according to how many of its coordinates lie on the boundary
/// (interior/face/edge/vertex). Exact through degree `2l`.
pub fn cube_rule(l: u32) -> Result<QuadratureRule> {
    if l == 0 {
        return Err(Error::invalid("cube_rule requires L >= 1"));
    }
    let m = l as usize + 1;
    if m > u16::MAX as usize {
        return Err(Error::invalid("cube_rule degree too large"));
    }
    let axis_points: Vec<f64> = (0..=m).map(|k| (k as f64 * PI / m as f64).cos()).collect();
    let evens: Vec<u16> = (0..=m as u16).step_by(2).collect();
    let odds: Vec<u16> = (1..=m as u16).step_by(2).collect();
    let mut triples = Vec::with_capacity(evens.len().pow(3) + odds.len().pow(3));
    for set in [&evens, &odds] {
        for &i in set.iter() {
            for &j in set.iter() {
                for &k in set.iter() {
                    triples.push([i, j, k]);
                }
            }
        }
    }
    let base = 4.0 / (m as f64).powi(3);
    let mut nodes = Vec::with_capacity(triples.len());
    let mut weights = Vec::with_capacity(triples.len());
    for &[i, j, k] in &triples {
        nodes.push([
            axis_points[i as usize],
            axis_points[j as usize],
            axis_points[k as usize],
        ]);
        let boundary = [i, j, k]
            .iter()
            .filter(|&&q| q == 0 || q as usize == m)
            .count();
        weights.push(base * 0.5f64.powi(boundary as i32));
    }
    QuadratureRule {
        domain: Domain::Cube,
        nodes,
        weights,
        exactness_degree: 2 * l,
        grid: Some(CubeGrid {
            m,
            axis_points,
            triples,
        }),
    }
    .validate()
}

/// Applies the rule to `f`: returns the weighted node sum.
pub fn integrate(rule: &QuadratureRule, f: impl Fn(Point) -> f64) -> Result<f64> {
    let mut sum = 0.0;
    let mut c = 0.0;
    for (index, (node, w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        let v = f(*node);
        if !v.is_finite() {
            return Err(Error::NonFinite { index });
        }
        let y = w * v - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// Result of a discrete Gram check `<p_i, p_j>_N` against the identity.
#[derive(Debug, Clone, Copy)]
pub struct ExactnessReport {
    pub max_deviation: f64,
    /// Basis indices of the worst entry.
    pub worst_pair: (usize, usize),
    pub tol: f64,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tol
    }
}

impl fmt::Display for ExactnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max |Gram - I| = {:.3e} at ({}, {}) [tol {:.1e}: {}]",
            self.max_deviation,
            self.worst_pair.0,
            self.worst_pair.1,
            self.tol,
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Computes the full discrete Gram matrix of `basis` under `rule` and
/// returns the largest absolute deviation from the identity.
///
/// Requires `2 * degree_cap <= exactness_degree` so that the Gram matrix is
/// the identity in exact arithmetic. For cube rules the Gram factors per
/// axis over the two subgrids, which avoids forming the `N x d` value
/// matrix; all other domains accumulate it streaming over nodes.
pub fn verify_exactness(
    rule: &QuadratureRule,
    basis: &BasisSet,
    tol: f64,
) -> Result<ExactnessReport> {
    if basis.domain() != rule.domain() {
        return Err(Error::invalid(format!(
            "basis domain {} does not match rule domain {}",
            basis.domain().name(),
            rule.domain().name()
        )));
    }
    if 2 * basis.degree_cap() > rule.exactness_degree() {
        return Err(Error::invalid(format!(
            "Gram check needs exactness degree >= {}, rule has {}",
            2 * basis.degree_cap(),
            rule.exactness_degree()
        )));
    }
    if let (Some(grid), Some(exps)) = (rule.cube_grid(), basis.cube_exponents()) {
        return Ok(cube_gram_deviation(rule, grid, exps, tol));
    }

    let d = basis.size();
    let n = rule.len();
    // Node-major accumulation of the lower triangle, parallel over node
    // chunks with a fixed combination order.
    let chunk = 1 + n / (4 * rayon::current_num_threads().max(1));
    let partials: Vec<Vec<f64>> = rule
        .nodes
        .par_chunks(chunk)
        .zip(rule.weights.par_chunks(chunk))
        .map(|(nodes, ws)| {
            let mut tri = vec![0.0f64; d * (d + 1) / 2];
            let mut vals = vec![0.0f64; d];
            for (node, &w) in nodes.iter().zip(ws) {
                basis
                    .eval_into(*node, &mut vals)
                    .expect("rule node must lie in the domain");
                let mut idx = 0;
                for i in 0..d {
                    let wi = w * vals[i];
                    for vj in &vals[..=i] {
                        tri[idx] += wi * vj;
                        idx += 1;
                    }
                }
            }
            tri
        })
        .collect();
    let mut gram = vec![0.0f64; d * (d + 1) / 2];
    for part in partials {
        for (g, p) in gram.iter_mut().zip(part) {
            *g += p;
        }
    }
    let mut worst = (0.0f64, (0usize, 0usize));
    let mut idx = 0;
    for i in 0..d {
        for j in 0..=i {
            let target = if i == j { 1.0 } else { 0.0 };
            let dev = (gram[idx] - target).abs();
            if dev > worst.0 {
                worst = (dev, (i, j));
            }
            idx += 1;
        }
    }
    Ok(ExactnessReport {
        max_deviation: worst.0,
        worst_pair: worst.1,
        tol,
    })
}

/// Gram deviation for the cube rule using per-axis factorization: for basis
/// elements `a`, `b`,
/// `<p_a, p_b>_N = (4/m^3) * (prod_s GE[a_s][b_s] + prod_s GO[a_s][b_s])`
/// where `GE`/`GO` are the one-dimensional half-grid Gram factors.
fn cube_gram_deviation(
    rule: &QuadratureRule,
    grid: &CubeGrid,
    exps: &[[u16; 3]],
    tol: f64,
) -> ExactnessReport {
    let m = grid.m;
    let lmax = exps.iter().flatten().copied().max().unwrap_or(0) as usize;
    let half_gram = |parity: usize| -> Vec<f64> {
        let ks: Vec<usize> = (parity..=m).step_by(2).collect();
        // T[a][col] over half-grid points; on the grid the angle is exact,
        // so evaluate cos(a*theta) directly
        let mut t = vec![vec![0.0f64; ks.len()]; lmax + 1];
        for (col, &k) in ks.iter().enumerate() {
            let theta = k as f64 * PI / m as f64;
            for (a, row) in t.iter_mut().enumerate() {
                row[col] = if a == 0 {
                    1.0
                } else {
                    std::f64::consts::SQRT_2 * (a as f64 * theta).cos()
                };
            }
        }
        let mut g = vec![0.0f64; (lmax + 1) * (lmax + 1)];
        for a in 0..=lmax {
            for b in 0..=lmax {
                let mut s = 0.0;
                for (col, &k) in ks.iter().enumerate() {
                    let c = if k == 0 || k == m { 0.5 } else { 1.0 };
                    s += c * t[a][col] * t[b][col];
                }
                g[a * (lmax + 1) + b] = s;
            }
        }
        g
    };
    let ge = half_gram(0);
    let go = half_gram(1);
    let stride = lmax + 1;
    let scale = 4.0 / (m as f64).powi(3);
    let d = exps.len();
    let worst = (0..d)
        .into_par_iter()
        .map(|i| {
            let [a1, a2, a3] = exps[i];
            let (a1, a2, a3) = (a1 as usize, a2 as usize, a3 as usize);
            let mut local = (0.0f64, (0usize, 0usize));
            for (j, &[b1, b2, b3]) in exps.iter().enumerate().take(i + 1) {
                let (b1, b2, b3) = (b1 as usize, b2 as usize, b3 as usize);
                let pe = ge[a1 * stride + b1] * ge[a2 * stride + b2] * ge[a3 * stride + b3];
                let po = go[a1 * stride + b1] * go[a2 * stride + b2] * go[a3 * stride + b3];
                let target = if i == j { 1.0 } else { 0.0 };
                let dev = (scale * (pe + po) - target).abs();
                if dev > local.0 {
                    local = (dev, (i, j));
                }
            }
            local
        })
        .reduce(
            || (0.0, (0, 0)),
            |a, b| if a.0 >= b.0 { a } else { b },
        );
    ExactnessReport {
        max_deviation: worst.0,
        worst_pair: worst.1,
        tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn gauss_legendre_small_rules() {
        let r1 = gauss_legendre_rule(1).unwrap();
        assert_eq!(r1.len(), 1);
        assert_abs_diff_eq!(r1.nodes()[0][0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r1.weights()[0], 2.0, epsilon = 1e-15);

        let r2 = gauss_legendre_rule(2).unwrap();
        let s = 1.0 / 3.0f64.sqrt();
        assert_abs_diff_eq!(r2.nodes()[0][0], -s, epsilon = 1e-15);
        assert_abs_diff_eq!(r2.nodes()[1][0], s, epsilon = 1e-15);
        assert_abs_diff_eq!(r2.weights()[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r2.weights()[1], 1.0, epsilon = 1e-15);
        // exactness through degree 3: integral of x^2 is 2/3
        let v = integrate(&r2, |p| p[0] * p[0]).unwrap();
        assert_abs_diff_eq!(v, 2.0 / 3.0, epsilon = 1e-14);
    }

    #[test]
    fn gauss_legendre_rejects_zero() {
        assert!(matches!(
            gauss_legendre_rule(0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn gauss_legendre_nodes_symmetric_increasing() {
        for n in [3usize, 10, 37, 300] {
            let (xs, ws) = gauss_legendre_nodes(n);
            for i in 1..n {
                assert!(xs[i] > xs[i - 1]);
            }
            for i in 0..n {
                assert_abs_diff_eq!(xs[i], -xs[n - 1 - i], epsilon = 1e-14);
                assert_abs_diff_eq!(ws[i], ws[n - 1 - i], epsilon = 1e-14);
                assert!(xs[i].abs() < 1.0);
                assert!(ws[i] > 0.0);
            }
        }
    }

    #[test]
    fn gauss_legendre_quartic() {
        let r = gauss_legendre_rule(3).unwrap();
        let v = integrate(&r, |p| p[0].powi(4)).unwrap();
        assert_abs_diff_eq!(v, 2.0 / 5.0, epsilon = 1e-14);
    }

    #[test]
    fn integrate_zero_function() {
        let r = disc_rule(4).unwrap();
        assert_eq!(integrate(&r, |_| 0.0).unwrap(), 0.0);
    }

    #[test]
    fn integrate_rejects_non_finite() {
        let r = gauss_legendre_rule(4).unwrap();
        let e = integrate(&r, |p| 1.0 / (p[0] - p[0])).unwrap_err();
        assert!(matches!(e, Error::NonFinite { .. }));
    }

    #[test]
    fn disc_rule_counts_and_moments() {
        let r = disc_rule(1).unwrap();
        assert_eq!(r.len(), 6);
        let r = disc_rule(2).unwrap();
        assert_eq!(r.len(), 15);
        assert_abs_diff_eq!(integrate(&r, |_| 1.0).unwrap(), 1.0, epsilon = 1e-14);
        // (1/pi) * Int r^2 cos^2(theta) r dtheta dr = 1/4
        let v = integrate(&r, |p| p[0] * p[0]).unwrap();
        assert_abs_diff_eq!(v, 0.25, epsilon = 1e-14);
    }

    #[test]
    fn disc_integrate_self_convergence() {
        let f = |p: Point| {
            let r2 = p[0] * p[0] + p[1] * p[1];
            (1.0 - r2) * (p[0] * p[1].cos()).exp()
        };
        let coarse = integrate(&disc_rule(16).unwrap(), f).unwrap();
        let fine = integrate(&disc_rule(64).unwrap(), f).unwrap();
        assert!(coarse.is_finite());
        assert!((coarse - fine).abs() < 1e-6, "coarse={coarse} fine={fine}");
    }

    #[test]
    fn sphere_product_rule_moments() {
        let r = sphere_product_rule(4).unwrap();
        assert_abs_diff_eq!(
            integrate(&r, |_| 1.0).unwrap(),
            4.0 * PI,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(integrate(&r, |p| p[2]).unwrap(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(
            integrate(&r, |p| p[2] * p[2]).unwrap(),
            4.0 * PI / 3.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn cube_rule_structure() {
        let r = cube_rule(50).unwrap();
        assert_eq!(r.len(), 35_152);
        assert_abs_diff_eq!(integrate(&r, |_| 1.0).unwrap(), 1.0, epsilon = 1e-10);
        let base = 4.0 / 51.0f64.powi(3);
        // interior node weight
        let grid = r.cube_grid().unwrap();
        let m = grid.m as u16;
        let mut counts = [0usize; 4];
        for (t, &w) in grid.triples.iter().zip(r.weights()) {
            let b = t.iter().filter(|&&q| q == 0 || q == m).count();
            counts[b] += 1;
            assert_abs_diff_eq!(w, base * 0.5f64.powi(b as i32), epsilon = 1e-18);
        }
        // interior + face + edge + vertex partitions the node set
        assert_eq!(counts.iter().sum::<usize>(), r.len());
        assert!(counts.iter().all(|&c| c > 0));
    }

    #[test]
    fn exactness_precondition() {
        let rule = gauss_legendre_rule(1).unwrap(); // exactness 1
        let basis = crate::basis::legendre_basis(2);
        assert!(matches!(
            verify_exactness(&rule, &basis, 1e-8),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn single_point_design_integrates_constants() {
        let dir = std::env::temp_dir().join("hyperlasso_t0_design.txt");
        std::fs::write(&dir, "# one point\n0 0 1\n").unwrap();
        let rule = load_t_design(&dir, 0).unwrap();
        assert_eq!(rule.len(), 1);
        assert_abs_diff_eq!(rule.weights()[0], 4.0 * PI, epsilon = 1e-12);
        assert_abs_diff_eq!(
            integrate(&rule, |_| 1.0).unwrap(),
            4.0 * PI,
            epsilon = 1e-12
        );
    }
}
