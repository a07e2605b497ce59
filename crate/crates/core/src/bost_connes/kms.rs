//! Truncated partition functions and KMS state values.
//!
//! Everything here is floating point with explicit truncation bounds. For
//! the tail `Σ_{N(r) > B} N(r)^{-β}` write `A(t)` for the number of class
//! representatives of norm `≤ t` and `U(t) ≥ A(t)`; partial summation gives
//!
//! ```text
//! tail = β ∫_B^∞ A(t) t^{-β-1} dt - A(B) B^{-β}
//!      ≤ β ∫_B^∞ U(t) t^{-β-1} dt - A(B) B^{-β}.
//! ```
//!
//! `U` comes from counting lattice points in a disc: each point owns a
//! fundamental cell, and all cells of points in the disc of radius `√t`
//! fit in the disc of radius `√t + (cell radius)`.

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement, RingKind};
use crate::scalar::Scalar;
use crate::star::AlgebraElement;

use super::galois::{pi_alpha_apply, GaloisParameter};
use super::orbits::bc_units;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KmsConfig {
    pub beta: f64,
    /// Norm cutoff `B`.
    pub trunc: u64,
}

impl KmsConfig {
    pub fn new(beta: f64, trunc: u64) -> Result<Self> {
        if beta.is_nan() || beta <= 1.0 {
            return Err(Error::DivergentSeries(beta));
        }
        if trunc < 2 {
            return Err(Error::DegenerateInput(format!("truncation bound {trunc} < 2")));
        }
        Ok(KmsConfig { beta, trunc })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaPartial {
    pub value: f64,
    pub tail_bound: f64,
    /// Number of class representatives summed.
    pub count: usize,
}

/// `U(t) = Σ c_s t^s` as `(s, c_s)` pairs.
fn count_majorant(ring: &Ring) -> Vec<(f64, f64)> {
    use std::f64::consts::{PI, SQRT_2};
    match ring.kind() {
        RingKind::Integers => vec![(1.0, 1.0)],
        // (π(√t + √2/2)² - 1)/4, cells are unit squares
        RingKind::GaussianIntegers => {
            vec![(1.0, PI / 4.0), (0.5, PI * SQRT_2 / 4.0), (0.0, PI / 8.0 - 0.25)]
        }
        // (π(√t + 1/√3)²/(√3/2) - 1)/6, cells are hexagons of circumradius 1/√3
        RingKind::EisensteinIntegers => {
            let k = 2.0 * PI / 3f64.sqrt() / 6.0;
            let r = 1.0 / 3f64.sqrt();
            vec![(1.0, k), (0.5, 2.0 * r * k), (0.0, r * r * k - 1.0 / 6.0)]
        }
        RingKind::PolynomialsOverFq(_) => unreachable!("rejected by bc_units"),
    }
}

fn reps(ring: &Ring, bound: u64) -> Vec<(RingElement, f64)> {
    ring.canonical_elements_up_to_norm(bound)
        .into_iter()
        .map(|r| {
            let n = ring.norm_u64(&r) as f64;
            (r, n)
        })
        .collect()
}

fn tail_bound(ring: &Ring, beta: f64, bound: u64, count: usize) -> f64 {
    let b = bound as f64;
    if ring.kind() == RingKind::Integers {
        // A(B) = B exactly
        return b.powf(1.0 - beta) / (beta - 1.0);
    }
    let integral: f64 = count_majorant(ring)
        .into_iter()
        .map(|(s, c)| beta * c * b.powf(s - beta) / (beta - s))
        .sum();
    (integral - count as f64 * b.powf(-beta)).max(0.0)
}

/// `Σ N(r)^{-β}` over class representatives with `N(r) ≤ B`, and a bound on
/// the omitted tail.
pub fn zeta_partial(ring: &Ring, beta: f64, bound: u64) -> Result<ZetaPartial> {
    bc_units(ring)?;
    let cfg = KmsConfig::new(beta, bound)?;
    let reps = reps(ring, cfg.trunc);
    let value = reps.iter().map(|(_, n)| n.powf(-beta)).sum();
    Ok(ZetaPartial { value, tail_bound: tail_bound(ring, beta, bound, reps.len()), count: reps.len() })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KmsValue {
    pub value: f64,
    pub error_bound: f64,
}

/// Relative slack for the floating-point summation itself.
const FLOAT_SLACK: f64 = 1e-12;

/// `φ_{β,α}(x) ≈ T_B / Z_B` with `T_B = Σ_{N(r) ≤ B} <ξ_r, π_α(x) ξ_r> N(r)^{-β}`.
///
/// With `C` the sum of `|coefficients|` and `τ` the zeta tail bound,
/// `|T - T_B| ≤ Cτ` and `0 ≤ Z - Z_B ≤ τ`, so
/// `|T/Z - T_B/Z_B| ≤ (Cτ + |T_B| τ / Z_B) / Z_B`. Only the real part is
/// returned; it is the whole value for self-adjoint `x`.
pub fn kms_value(x: &AlgebraElement, cfg: &KmsConfig, alpha: &GaloisParameter) -> Result<KmsValue> {
    let ring = x.ring();
    bc_units(ring)?;
    let cfg = KmsConfig::new(cfg.beta, cfg.trunc)?;
    let reps = reps(ring, cfg.trunc);
    let mut z = 0.0;
    let (mut t_re, mut t_im) = (0.0, 0.0);
    for (r, n) in &reps {
        let w = n.powf(-cfg.beta);
        z += w;
        let diag = pi_alpha_apply(x, alpha, r)?
            .into_iter()
            .filter(|(_, s)| s == r)
            .fold(Scalar::zero(), |acc, (v, _)| acc + v);
        if !diag.is_zero() {
            let (re, im) = diag.scale_f64(w);
            t_re += re;
            t_im += im;
        }
    }
    let tau = tail_bound(ring, cfg.beta, cfg.trunc, reps.len());
    let c: f64 = x.terms().values().map(|v| v.norm_sq_f64().sqrt()).sum();
    let t_abs = t_re.hypot(t_im);
    let error_bound = (c * tau + t_abs * tau / z) / z + FLOAT_SLACK * (1.0 + c);
    Ok(KmsValue { value: t_re / z, error_bound })
}

/// `|φ(a σ_{iβ}(b)) - φ(b a)|` and the sum of the truncation bounds of both
/// sides. `σ_{iβ}` scales `s_m* p s_{m'}` by `N(m)^β N(m')^{-β}`.
pub fn kms_residual(
    a: &AlgebraElement,
    b: &AlgebraElement,
    cfg: &KmsConfig,
    alpha: &GaloisParameter,
) -> Result<(f64, f64)> {
    let ring = a.ring();
    let mut lhs = 0.0;
    let mut bound = 0.0;
    for (t, v) in b.terms() {
        let weight = (ring.norm_u64(t.m()) as f64).powf(cfg.beta) * (ring.norm_u64(t.mp()) as f64).powf(-cfg.beta);
        let term = AlgebraElement::from_terms(ring, [(t.clone(), v.clone())]);
        let k = kms_value(&(a * &term), cfg, alpha)?;
        lhs += weight * k.value;
        bound += weight * k.error_bound;
    }
    let rhs = kms_value(&(b * a), cfg, alpha)?;
    Ok(((lhs - rhs.value).abs(), bound + rhs.error_bound))
}
