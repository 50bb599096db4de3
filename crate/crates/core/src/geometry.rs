//! Manifold models (unit spheres, flat tori), geodesic distances, submanifolds,
//! tubular neighborhoods, and quadrature grids.
//!
//! Everything downstream integrates against the grids built here, so the rules
//! are chosen to be exact where exactness is cheap: Gauss–Legendre in cos θ on
//! the sphere (exact for the polynomial degrees the spectral module uses) and
//! uniform tensor grids on tori (exact for trigonometric polynomials below
//! Nyquist). Tube membership is a sharp indicator; a grid that cannot resolve a
//! tube is an error, not a silent bias.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Compensated (Kahan) accumulator so quadrature sums are reproducible for a
/// fixed evaluation order.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum
    }
}

/// Wrapped (periodic) distance between two scalar coordinates.
#[inline]
pub fn wrap_distance(x: f64, y: f64, period: f64) -> f64 {
    let r = (x - y).rem_euclid(period);
    r.min(period - r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ManifoldKind {
    UnitSphere,
    FlatTorus,
}

/// A model manifold: the unit sphere Sⁿ ⊂ Rⁿ⁺¹ or a flat torus Tⁿ with the
/// given periods.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifoldModel {
    pub kind: ManifoldKind,
    /// Intrinsic dimension n ≥ 1.
    pub dim: usize,
    /// Periods per axis (tori only; empty for spheres).
    pub periods: Vec<f64>,
    /// Riemannian volume: area(Sⁿ) or ∏ periods.
    pub total_volume: f64,
}

/// Surface area of the unit n-sphere, 2 π^{(n+1)/2} / Γ((n+1)/2).
pub fn sphere_area(n: usize) -> f64 {
    let half = (n as f64 + 1.0) / 2.0;
    (std::f64::consts::LN_2 + half * std::f64::consts::PI.ln()
        - statrs::function::gamma::ln_gamma(half))
    .exp()
}

impl ManifoldModel {
    pub fn unit_sphere(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("sphere dimension must be ≥ 1".into()));
        }
        Ok(Self {
            kind: ManifoldKind::UnitSphere,
            dim: n,
            periods: Vec::new(),
            total_volume: sphere_area(n),
        })
    }

    pub fn flat_torus(periods: &[f64]) -> Result<Self> {
        if periods.is_empty() {
            return Err(Error::InvalidParameter("torus needs at least one period".into()));
        }
        if periods.iter().any(|&p| !(p > 0.0) || !p.is_finite()) {
            return Err(Error::InvalidParameter("torus periods must be positive".into()));
        }
        Ok(Self {
            kind: ManifoldKind::FlatTorus,
            dim: periods.len(),
            periods: periods.to_vec(),
            total_volume: periods.iter().product(),
        })
    }

    /// Unit-period torus of dimension n.
    pub fn unit_torus(n: usize) -> Result<Self> {
        Self::flat_torus(&vec![1.0; n])
    }

    /// Dimension of the ambient coordinate vector a point carries:
    /// n+1 for Sⁿ, n for Tⁿ.
    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            ManifoldKind::UnitSphere => self.dim + 1,
            ManifoldKind::FlatTorus => self.dim,
        }
    }

    fn check_point(&self, p: &[f64]) -> Result<()> {
        if p.len() != self.ambient_dim() {
            return Err(Error::OffManifold(format!(
                "expected {} coordinates, got {}",
                self.ambient_dim(),
                p.len()
            )));
        }
        if p.iter().any(|x| !x.is_finite()) {
            return Err(Error::OffManifold("non-finite coordinate".into()));
        }
        if self.kind == ManifoldKind::UnitSphere {
            let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
            if (norm - 1.0).abs() > 1e-12 {
                return Err(Error::OffManifold(format!("|p| = {norm}, not unit to 1e-12")));
            }
        }
        Ok(())
    }

    /// Geodesic distance between two points. Symmetric, and exactly zero for
    /// bitwise-identical inputs.
    pub fn geodesic_distance(&self, p: &[f64], q: &[f64]) -> Result<f64> {
        self.check_point(p)?;
        self.check_point(q)?;
        if p == q {
            return Ok(0.0);
        }
        match self.kind {
            ManifoldKind::UnitSphere => {
                let dot: f64 = p.iter().zip(q).map(|(a, b)| a * b).sum();
                Ok(dot.clamp(-1.0, 1.0).acos())
            }
            ManifoldKind::FlatTorus => {
                let mut s = 0.0;
                for i in 0..self.dim {
                    let d = wrap_distance(p[i], q[i], self.periods[i]);
                    s += d * d;
                }
                Ok(s.sqrt())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubmanifoldKind {
    /// Great k-subsphere {x' = 0} of Sⁿ, x' the last n−k ambient coordinates.
    GreatSubsphere { k: usize },
    /// The two poles ±e_{n+1} of Sⁿ (dimension 0; used by the zonal
    /// saturation experiment only).
    PolePair,
    /// Subtorus fixing the masked coordinates to 0.
    SubTorus { mask: Vec<bool> },
}

/// A submanifold Σᵏ compatible with a given manifold model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubmanifoldSpec {
    pub kind: SubmanifoldKind,
    /// Dimension k.
    pub dim: usize,
    /// Codimension n − k.
    pub codim: usize,
}

impl SubmanifoldSpec {
    pub fn great_subsphere(manifold: &ManifoldModel, k: usize) -> Result<Self> {
        if manifold.kind != ManifoldKind::UnitSphere {
            return Err(Error::IncompatibleSubmanifold(
                "great subsphere requires a sphere".into(),
            ));
        }
        let n = manifold.dim;
        if k < 1 || k > n.saturating_sub(1) {
            return Err(Error::IncompatibleSubmanifold(format!(
                "great subsphere needs 1 ≤ k ≤ n−1, got k = {k}, n = {n}"
            )));
        }
        Ok(Self { kind: SubmanifoldKind::GreatSubsphere { k }, dim: k, codim: n - k })
    }

    /// The equator circle of S² (the k = 1 great subsphere).
    pub fn equator(manifold: &ManifoldModel) -> Result<Self> {
        Self::great_subsphere(manifold, 1)
    }

    pub fn pole_pair(manifold: &ManifoldModel) -> Result<Self> {
        if manifold.kind != ManifoldKind::UnitSphere {
            return Err(Error::IncompatibleSubmanifold("pole pair requires a sphere".into()));
        }
        Ok(Self { kind: SubmanifoldKind::PolePair, dim: 0, codim: manifold.dim })
    }

    pub fn sub_torus(manifold: &ManifoldModel, mask: &[bool]) -> Result<Self> {
        if manifold.kind != ManifoldKind::FlatTorus {
            return Err(Error::IncompatibleSubmanifold("subtorus requires a torus".into()));
        }
        if mask.len() != manifold.dim {
            return Err(Error::IncompatibleSubmanifold(format!(
                "mask length {} vs torus dimension {}",
                mask.len(),
                manifold.dim
            )));
        }
        let fixed = mask.iter().filter(|&&b| b).count();
        if fixed == 0 || fixed == manifold.dim {
            return Err(Error::IncompatibleSubmanifold(
                "subtorus must fix at least one and not all coordinates".into(),
            ));
        }
        Ok(Self {
            kind: SubmanifoldKind::SubTorus { mask: mask.to_vec() },
            dim: manifold.dim - fixed,
            codim: fixed,
        })
    }

    fn check_compatible(&self, manifold: &ManifoldModel) -> Result<()> {
        let ok = match &self.kind {
            SubmanifoldKind::GreatSubsphere { k } => {
                manifold.kind == ManifoldKind::UnitSphere && *k + 1 <= manifold.dim
            }
            SubmanifoldKind::PolePair => manifold.kind == ManifoldKind::UnitSphere,
            SubmanifoldKind::SubTorus { mask } => {
                manifold.kind == ManifoldKind::FlatTorus && mask.len() == manifold.dim
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IncompatibleSubmanifold(format!("{:?} on {:?}", self.kind, manifold.kind)))
        }
    }

    /// Geodesic distance from p to the submanifold.
    pub fn distance_to(&self, manifold: &ManifoldModel, p: &[f64]) -> Result<f64> {
        self.check_compatible(manifold)?;
        manifold.check_point(p)?;
        match &self.kind {
            SubmanifoldKind::GreatSubsphere { k } => {
                // d(p, Σ) = arcsin |x'| with x' the normal ambient block.
                let normal_sq: f64 = p[k + 1..].iter().map(|x| x * x).sum();
                Ok(normal_sq.sqrt().clamp(0.0, 1.0).asin())
            }
            SubmanifoldKind::PolePair => {
                let z = p[manifold.dim].clamp(-1.0, 1.0);
                let theta = z.acos();
                Ok(theta.min(std::f64::consts::PI - theta))
            }
            SubmanifoldKind::SubTorus { mask } => {
                let mut s = 0.0;
                for (i, &fixed) in mask.iter().enumerate() {
                    if fixed {
                        let d = wrap_distance(p[i], 0.0, manifold.periods[i]);
                        s += d * d;
                    }
                }
                Ok(s.sqrt())
            }
        }
    }
}

/// Free-function forms mirroring the operation contracts.
pub fn geodesic_distance(manifold: &ManifoldModel, p: &[f64], q: &[f64]) -> Result<f64> {
    manifold.geodesic_distance(p, q)
}

pub fn distance_to_submanifold(
    manifold: &ManifoldModel,
    submanifold: &SubmanifoldSpec,
    p: &[f64],
) -> Result<f64> {
    submanifold.distance_to(manifold, p)
}

/// Gauss–Legendre nodes (ascending) and weights on [−1, 1], by Newton
/// iteration on the Legendre recurrence. Accurate to ~1e−15 for the sizes
/// used here.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and P_n' at x.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Quadrature nodes and positive weights realizing the volume form dv_g.
#[derive(Debug, Clone)]
pub struct QuadratureGrid {
    manifold: ManifoldModel,
    /// Flat node storage, stride = ambient_dim.
    nodes: Vec<f64>,
    weights: Vec<f64>,
    resolution: Vec<usize>,
    /// Colatitude axis (sphere grids; ascending θ) for structured access.
    theta_nodes: Vec<f64>,
}

impl QuadratureGrid {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    #[inline]
    pub fn node(&self, i: usize) -> &[f64] {
        let d = self.manifold.ambient_dim();
        &self.nodes[i * d..(i + 1) * d]
    }

    #[inline]
    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    pub fn manifold(&self) -> &ManifoldModel {
        &self.manifold
    }

    pub fn resolution(&self) -> &[usize] {
        &self.resolution
    }

    /// Colatitude nodes of a sphere grid (empty for tori).
    pub fn theta_nodes(&self) -> &[f64] {
        &self.theta_nodes
    }

    /// Compensated quadrature of a scalar function over the manifold.
    pub fn integrate<F: Fn(&[f64]) -> f64>(&self, f: F) -> f64 {
        let mut acc = KahanSum::new();
        for i in 0..self.len() {
            acc.add(self.weights[i] * f(self.node(i)));
        }
        acc.total()
    }

    /// Largest spherical-harmonic degree whose products this grid integrates
    /// exactly (Gram exactness), or the largest torus frequency per the same
    /// criterion.
    pub fn max_exact_degree(&self) -> usize {
        match self.manifold.kind {
            ManifoldKind::UnitSphere => {
                let n_theta = self.resolution[0];
                let n_phi = if self.resolution.len() > 1 { self.resolution[1] } else { 1 };
                (n_theta.saturating_sub(1)).min(n_phi.saturating_sub(1) / 2)
            }
            ManifoldKind::FlatTorus => {
                self.resolution.iter().map(|&n| n.saturating_sub(1) / 2).min().unwrap_or(0)
            }
        }
    }
}

/// Build a quadrature grid.
///
/// * S¹: `resolution = [n]`, uniform in angle.
/// * S²: `resolution = [n_theta, n_phi]`, Gauss–Legendre in cos θ × uniform φ.
/// * Tⁿ: `resolution = [n_1, …, n_n]`, uniform tensor product.
///
/// Spheres of dimension ≥ 3 carry no grid; only the closed-form eigenfunction
/// families are supported there.
pub fn build_grid(manifold: &ManifoldModel, resolution: &[usize]) -> Result<QuadratureGrid> {
    if resolution.iter().any(|&n| n == 0) {
        return Err(Error::InvalidParameter("grid resolution must be positive per axis".into()));
    }
    match manifold.kind {
        ManifoldKind::UnitSphere if manifold.dim == 1 => {
            if resolution.len() != 1 {
                return Err(Error::InvalidParameter("S¹ grid takes one resolution entry".into()));
            }
            let n = resolution[0];
            let w = 2.0 * std::f64::consts::PI / n as f64;
            let mut nodes = Vec::with_capacity(2 * n);
            for i in 0..n {
                let a = w * i as f64;
                nodes.push(a.cos());
                nodes.push(a.sin());
            }
            Ok(QuadratureGrid {
                manifold: manifold.clone(),
                nodes,
                weights: vec![w; n],
                resolution: resolution.to_vec(),
                theta_nodes: Vec::new(),
            })
        }
        ManifoldKind::UnitSphere if manifold.dim == 2 => {
            if resolution.len() != 2 {
                return Err(Error::InvalidParameter(
                    "S² grid takes [n_theta, n_phi] resolution".into(),
                ));
            }
            let (n_theta, n_phi) = (resolution[0], resolution[1]);
            let (z, wz) = gauss_legendre(n_theta);
            let phi_w = 2.0 * std::f64::consts::PI / n_phi as f64;
            let mut nodes = Vec::with_capacity(3 * n_theta * n_phi);
            let mut weights = Vec::with_capacity(n_theta * n_phi);
            // Descending z = ascending θ.
            let mut theta_nodes = Vec::with_capacity(n_theta);
            for it in (0..n_theta).rev() {
                let cos_t = z[it];
                let sin_t = (1.0 - cos_t * cos_t).max(0.0).sqrt();
                theta_nodes.push(cos_t.acos());
                for ip in 0..n_phi {
                    let phi = phi_w * ip as f64;
                    nodes.push(sin_t * phi.cos());
                    nodes.push(sin_t * phi.sin());
                    nodes.push(cos_t);
                    weights.push(wz[it] * phi_w);
                }
            }
            Ok(QuadratureGrid {
                manifold: manifold.clone(),
                nodes,
                weights,
                resolution: resolution.to_vec(),
                theta_nodes,
            })
        }
        ManifoldKind::UnitSphere => Err(Error::Unsupported(
            "grids on Sⁿ, n ≥ 3, are not provided; use the closed-form families".into(),
        )),
        ManifoldKind::FlatTorus => {
            if resolution.len() != manifold.dim {
                return Err(Error::InvalidParameter(format!(
                    "torus grid needs {} resolution entries",
                    manifold.dim
                )));
            }
            let n_total: usize = resolution.iter().product();
            let cell: f64 = manifold
                .periods
                .iter()
                .zip(resolution)
                .map(|(p, &n)| p / n as f64)
                .product();
            let d = manifold.dim;
            let mut nodes = Vec::with_capacity(n_total * d);
            let mut idx = vec![0usize; d];
            for _ in 0..n_total {
                for axis in 0..d {
                    nodes.push(manifold.periods[axis] * idx[axis] as f64 / resolution[axis] as f64);
                }
                // Odometer increment.
                for axis in (0..d).rev() {
                    idx[axis] += 1;
                    if idx[axis] < resolution[axis] {
                        break;
                    }
                    idx[axis] = 0;
                }
            }
            Ok(QuadratureGrid {
                manifold: manifold.clone(),
                nodes,
                weights: vec![cell; n_total],
                resolution: resolution.to_vec(),
                theta_nodes: Vec::new(),
            })
        }
    }
}

/// The tubular neighborhood N_{αh^{1/2}} of a submanifold: points with
/// d(p, Σ) < half_width, half_width = α·√h.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Tube {
    pub alpha: f64,
    pub h: f64,
    pub half_width: f64,
    pub submanifold: SubmanifoldSpec,
}

impl Tube {
    pub fn new(alpha: f64, h: f64, submanifold: SubmanifoldSpec) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidParameter(format!("alpha must be in (0, 1], got {alpha}")));
        }
        if !(h > 0.0 && h <= 1.0) {
            return Err(Error::InvalidParameter(format!("h must be in (0, 1], got {h}")));
        }
        Ok(Self { alpha, h, half_width: alpha * h.sqrt(), submanifold })
    }

    /// Sharp membership indicator: d(p, Σ) < β.
    pub fn contains(&self, manifold: &ManifoldModel, p: &[f64]) -> Result<bool> {
        Ok(self.submanifold.distance_to(manifold, p)? < self.half_width)
    }
}

/// Require ≥ `min_nodes` grid nodes across the tube in each normal direction.
pub(crate) fn check_tube_resolution(grid: &QuadratureGrid, tube: &Tube) -> Result<()> {
    const MIN_NODES: usize = 4;
    let beta = tube.half_width;
    let m = grid.manifold();
    let short = |count: usize, axis: &str| {
        Err(Error::UnderResolved(format!(
            "tube of half-width {beta:.3e} covers only {count} node(s) along {axis}; need ≥ {MIN_NODES}"
        )))
    };
    match (&m.kind, &tube.submanifold.kind) {
        (ManifoldKind::UnitSphere, SubmanifoldKind::GreatSubsphere { .. }) if m.dim == 2 => {
            let half_pi = std::f64::consts::FRAC_PI_2;
            let (lo, hi) = ((half_pi - beta).max(0.0), (half_pi + beta).min(std::f64::consts::PI));
            let count = grid.theta_nodes.iter().filter(|&&t| t > lo && t < hi).count();
            if count < MIN_NODES {
                return short(count, "colatitude");
            }
            Ok(())
        }
        (ManifoldKind::UnitSphere, SubmanifoldKind::PolePair) if m.dim == 2 => {
            let pi = std::f64::consts::PI;
            let north = grid.theta_nodes.iter().filter(|&&t| t < beta).count();
            let south = grid.theta_nodes.iter().filter(|&&t| t > pi - beta).count();
            if north.min(south) < MIN_NODES {
                return short(north.min(south), "colatitude near the poles");
            }
            Ok(())
        }
        (ManifoldKind::FlatTorus, SubmanifoldKind::SubTorus { mask }) => {
            for (axis, &fixed) in mask.iter().enumerate() {
                if !fixed {
                    continue;
                }
                let (n, p) = (grid.resolution[axis], m.periods[axis]);
                let count = (0..n)
                    .filter(|&k| wrap_distance(p * k as f64 / n as f64, 0.0, p) < beta)
                    .count();
                if count < MIN_NODES {
                    return short(count, &format!("axis {axis}"));
                }
            }
            Ok(())
        }
        (mk, sk) => Err(Error::Unsupported(format!(
            "tube resolution rule not defined for {sk:?} on {mk:?}"
        ))),
    }
}

/// Quadrature volume of a tube (sum of the sharp indicator).
pub fn tube_volume(manifold: &ManifoldModel, tube: &Tube, grid: &QuadratureGrid) -> Result<f64> {
    tube.submanifold.check_compatible(manifold)?;
    if grid.manifold() != manifold {
        return Err(Error::InvalidParameter("grid built for a different manifold".into()));
    }
    check_tube_resolution(grid, tube)?;
    let mut acc = KahanSum::new();
    for i in 0..grid.len() {
        if tube.submanifold.distance_to(manifold, grid.node(i))? < tube.half_width {
            acc.add(grid.weight(i));
        }
    }
    Ok(acc.total())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_sphere_point(rng: &mut impl Rng) -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..3).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if n > 1e-3 {
                return v.iter().map(|x| x / n).collect();
            }
        }
    }

    #[test]
    fn sphere_area_formula() {
        assert!((sphere_area(1) - 2.0 * PI).abs() < 1e-12);
        assert!((sphere_area(2) - 4.0 * PI).abs() < 1e-12);
        // area(S³) = 2π².
        assert!((sphere_area(3) - 2.0 * PI * PI).abs() < 1e-11);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(8);
        // Degree 15 is exact for an 8-point rule.
        let quad: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(14)).sum();
        assert!((quad - 2.0 / 15.0).abs() < 1e-14);
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn sphere_grid_weights_sum_to_area() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let grid = build_grid(&s2, &[64, 128]).unwrap();
        let total: f64 = (0..grid.len()).map(|i| grid.weight(i)).sum();
        assert!((total - 4.0 * PI).abs() / (4.0 * PI) < 1e-10);
        assert!((0..grid.len()).all(|i| grid.weight(i) > 0.0));
    }

    #[test]
    fn torus_grid_weights_sum_to_volume() {
        let t2 = ManifoldModel::unit_torus(2).unwrap();
        let grid = build_grid(&t2, &[64, 64]).unwrap();
        let total: f64 = (0..grid.len()).map(|i| grid.weight(i)).sum();
        assert!((total - 1.0).abs() < 1e-12);

        let t2p = ManifoldModel::flat_torus(&[2.0, 0.5]).unwrap();
        let grid = build_grid(&t2p, &[32, 16]).unwrap();
        let total: f64 = (0..grid.len()).map(|i| grid.weight(i)).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cos_squared_integral_closed_form() {
        // Closed-form oracle: ∫_{S²} cos²θ dv = 4π/3.
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let grid = build_grid(&s2, &[64, 128]).unwrap();
        let quad = grid.integrate(|p| p[2] * p[2]);
        let exact = 4.0 * PI / 3.0;
        assert!((quad - exact).abs() / exact < 1e-10);
    }

    #[test]
    fn sphere_distances() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let north = [0.0, 0.0, 1.0];
        let south = [0.0, 0.0, -1.0];
        assert!((s2.geodesic_distance(&north, &south).unwrap() - PI).abs() < 1e-14);
        assert_eq!(s2.geodesic_distance(&north, &north).unwrap(), 0.0);
        let p = [1.0, 0.0, 0.0];
        assert!((s2.geodesic_distance(&north, &p).unwrap() - PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn torus_wrap_distance() {
        let t1 = ManifoldModel::unit_torus(1).unwrap();
        let d = t1.geodesic_distance(&[0.1], &[0.9]).unwrap();
        assert!((d - 0.2).abs() < 1e-14);
    }

    #[test]
    fn off_manifold_is_rejected() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let bad = [0.5, 0.0, 0.0];
        assert!(matches!(
            s2.geodesic_distance(&bad, &[0.0, 0.0, 1.0]),
            Err(Error::OffManifold(_))
        ));
    }

    #[test]
    fn distance_symmetry_and_triangle_inequality() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..1000 {
            let (p, q, r) = (
                random_sphere_point(&mut rng),
                random_sphere_point(&mut rng),
                random_sphere_point(&mut rng),
            );
            let dpq = s2.geodesic_distance(&p, &q).unwrap();
            let dqp = s2.geodesic_distance(&q, &p).unwrap();
            assert_eq!(dpq, dqp);
            let dpr = s2.geodesic_distance(&p, &r).unwrap();
            let drq = s2.geodesic_distance(&r, &q).unwrap();
            assert!(dpq <= dpr + drq + 1e-12);
        }
    }

    #[test]
    fn equator_distance_cases() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let eq = SubmanifoldSpec::equator(&s2).unwrap();
        assert!((eq.distance_to(&s2, &[0.0, 0.0, 1.0]).unwrap() - PI / 2.0).abs() < 1e-14);
        assert_eq!(eq.distance_to(&s2, &[1.0, 0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(eq.dim, 1);
        assert_eq!(eq.codim, 1);
    }

    #[test]
    fn subtorus_distance_matches_dense_sampling_oracle() {
        let t2 = ManifoldModel::unit_torus(2).unwrap();
        let sigma = SubmanifoldSpec::sub_torus(&t2, &[true, false]).unwrap();
        let p = [0.3, 0.7];
        let direct = sigma.distance_to(&t2, &p).unwrap();
        assert!((direct - 0.3).abs() < 1e-14);
        // Brute-force min over 10⁴ sampled points of Σ = {x = 0}.
        let mut best = f64::INFINITY;
        for i in 0..10_000 {
            let q = [0.0, i as f64 / 10_000.0];
            best = best.min(t2.geodesic_distance(&p, &q).unwrap());
        }
        assert!((direct - best).abs() < 1e-6);
    }

    #[test]
    fn pole_pair_distance() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let poles = SubmanifoldSpec::pole_pair(&s2).unwrap();
        assert_eq!(poles.distance_to(&s2, &[0.0, 0.0, 1.0]).unwrap(), 0.0);
        assert!((poles.distance_to(&s2, &[1.0, 0.0, 0.0]).unwrap() - PI / 2.0).abs() < 1e-14);
        let p = [0.0, (1.0f64 - 0.9f64 * 0.9).sqrt(), -0.9];
        let expected = (0.9f64).acos(); // distance to the south pole
        assert!((poles.distance_to(&s2, &p).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn incompatible_submanifold_is_rejected() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let t2 = ManifoldModel::unit_torus(2).unwrap();
        let sigma = SubmanifoldSpec::sub_torus(&t2, &[true, false]).unwrap();
        assert!(matches!(
            sigma.distance_to(&s2, &[0.0, 0.0, 1.0]),
            Err(Error::IncompatibleSubmanifold(_))
        ));
        assert!(SubmanifoldSpec::great_subsphere(&s2, 2).is_err());
        assert!(SubmanifoldSpec::sub_torus(&t2, &[true, true]).is_err());
    }

    #[test]
    fn equator_band_volume() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let eq = SubmanifoldSpec::equator(&s2).unwrap();
        let grid = build_grid(&s2, &[1024, 8]).unwrap();
        // β = 0.2 via α = 0.2, h = 1: band area 4π sin β.
        let tube = Tube::new(0.2, 1.0, eq.clone()).unwrap();
        let vol = tube_volume(&s2, &tube, &grid).unwrap();
        let exact = 4.0 * PI * 0.2f64.sin();
        assert!((vol - exact).abs() / exact < 0.02, "vol = {vol}, exact = {exact}");
        // β ≥ π/2 covers the whole sphere (α·√h maxes out at 1, so set the
        // width directly).
        let mut wide = Tube::new(1.0, 1.0, eq).unwrap();
        wide.half_width = PI / 2.0 + 1e-9;
        let vol = tube_volume(&s2, &wide, &grid).unwrap();
        assert!((vol - 4.0 * PI).abs() / (4.0 * PI) < 1e-12);
    }

    #[test]
    fn torus_strip_volume() {
        let t2 = ManifoldModel::unit_torus(2).unwrap();
        let sigma = SubmanifoldSpec::sub_torus(&t2, &[true, false]).unwrap();
        let grid = build_grid(&t2, &[1000, 4]).unwrap();
        let tube = Tube::new(0.1, 1.0, sigma).unwrap();
        let vol = tube_volume(&t2, &tube, &grid).unwrap();
        assert!((vol - 0.2).abs() / 0.2 < 0.02, "vol = {vol}");
    }

    #[test]
    fn tube_volume_monotone_in_width() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let eq = SubmanifoldSpec::equator(&s2).unwrap();
        let grid = build_grid(&s2, &[512, 8]).unwrap();
        let mut last = 0.0;
        for &alpha in &[0.1, 0.2, 0.4, 0.8] {
            let tube = Tube::new(alpha, 0.64, eq.clone()).unwrap();
            let vol = tube_volume(&s2, &tube, &grid).unwrap();
            assert!(vol >= last);
            last = vol;
        }
    }

    #[test]
    fn thin_equator_band_matches_flat_area() {
        // tube_volume(β) / (2β · 2π) → 1 as β → 0; β = 0.05 within 5%.
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let eq = SubmanifoldSpec::equator(&s2).unwrap();
        let grid = build_grid(&s2, &[2048, 8]).unwrap();
        let tube = Tube::new(0.05, 1.0, eq).unwrap();
        let vol = tube_volume(&s2, &tube, &grid).unwrap();
        let flat = 2.0 * 0.05 * 2.0 * PI;
        assert!((vol / flat - 1.0).abs() < 0.05);
    }

    #[test]
    fn under_resolved_tube_is_an_error() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let eq = SubmanifoldSpec::equator(&s2).unwrap();
        let grid = build_grid(&s2, &[16, 8]).unwrap();
        let tube = Tube::new(0.01, 0.01, eq).unwrap();
        assert!(matches!(tube_volume(&s2, &tube, &grid), Err(Error::UnderResolved(_))));
    }

    #[test]
    fn tube_parameters_validated() {
        let s2 = ManifoldModel::unit_sphere(2).unwrap();
        let eq = SubmanifoldSpec::equator(&s2).unwrap();
        assert!(Tube::new(0.0, 0.5, eq.clone()).is_err());
        assert!(Tube::new(1.5, 0.5, eq.clone()).is_err());
        assert!(Tube::new(0.5, 0.0, eq.clone()).is_err());
        let t = Tube::new(0.25, 0.04, eq).unwrap();
        assert_eq!(t.half_width, 0.25 * 0.04f64.sqrt());
    }
}
