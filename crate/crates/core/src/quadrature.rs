//! Gauss–Hermite and Gauss–Laguerre rules for numeric cross-checks.
//!
//! Nodes are zeros of the orthonormal polynomial of the requested order. They
//! are located order by order: the zeros of p_{m−1} split the Gershgorin
//! interval of the Jacobi matrix into m brackets, each holding exactly one
//! zero of p_m, which safeguarded Newton then refines. Weights are the
//! Christoffel numbers `1 / Σ_{k<m} p_k(x)²`.

use std::f64::consts::PI;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{specialize_g, MomentValue, Poly, Rational, XPoly};

pub const MAX_NEWTON_ITERATIONS: usize = 200;
pub const NEWTON_STEP_TOLERANCE: f64 = 1e-15;
pub const RESIDUAL_TOLERANCE: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum RuleKind {
    /// weight e^{−x²} on ℝ
    GaussHermite,
    /// weight x^α e^{−x} on (0, ∞)
    GaussLaguerre { alpha: f64 },
}

impl RuleKind {
    /// Three-term recurrence `x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k−1}`
    /// of the orthonormal family.
    fn recurrence(&self, k: usize) -> (f64, f64) {
        let kf = k as f64;
        match *self {
            RuleKind::GaussHermite => (0.0, (kf / 2.0).sqrt()),
            RuleKind::GaussLaguerre { alpha } => {
                (2.0 * kf + alpha + 1.0, (kf * (kf + alpha)).sqrt())
            }
        }
    }

    fn total_mass(&self) -> f64 {
        match *self {
            RuleKind::GaussHermite => PI.sqrt(),
            RuleKind::GaussLaguerre { alpha } => gamma(alpha + 1.0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadRule {
    pub kind: RuleKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Values and derivatives of the orthonormal p_0..=p_m at x.
fn orthonormal(kind: &RuleKind, m: usize, x: f64, p0: f64) -> (Vec<f64>, f64) {
    let mut vals = Vec::with_capacity(m + 1);
    let (mut prev, mut cur) = (0.0, p0);
    let (mut dprev, mut dcur) = (0.0, 0.0);
    vals.push(cur);
    for k in 0..m {
        let (a, b) = kind.recurrence(k);
        let (_, b_next) = kind.recurrence(k + 1);
        let next = ((x - a) * cur - b * prev) / b_next;
        let dnext = (cur + (x - a) * dcur - b * dprev) / b_next;
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
        vals.push(cur);
    }
    (vals, dcur)
}

impl QuadRule {
    pub fn build(kind: RuleKind, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("rule order must be at least 1".into()));
        }
        if let RuleKind::GaussLaguerre { alpha } = kind {
            if alpha.is_nan() || alpha <= -1.0 || !alpha.is_finite() {
                return Err(Error::Precondition(format!(
                    "Laguerre parameter must exceed -1, got {alpha}"
                )));
            }
        }
        let p0 = 1.0 / kind.total_mass().sqrt();

        // Gershgorin bounds of the m×m Jacobi matrix contain every zero
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for k in 0..m {
            let (a, b) = kind.recurrence(k);
            let b_next = if k + 1 < m {
                kind.recurrence(k + 1).1
            } else {
                0.0
            };
            lo = lo.min(a - b - b_next);
            hi = hi.max(a + b + b_next);
        }
        let pad = 1e-8 * (1.0 + lo.abs().max(hi.abs()));
        let (lo, hi) = (lo - pad, hi + pad);

        let mut zeros: Vec<f64> = Vec::new();
        for order in 1..=m {
            let mut edges = Vec::with_capacity(order + 1);
            edges.push(lo);
            edges.extend_from_slice(&zeros);
            edges.push(hi);
            let mut next = Vec::with_capacity(order);
            for (i, w) in edges.windows(2).enumerate() {
                let x = refine_zero(&kind, order, p0, w[0], w[1])
                    .ok_or(Error::Convergence { index: i, order })?;
                next.push(x);
            }
            zeros = next;
        }

        let mut weights = Vec::with_capacity(m);
        for (i, &x) in zeros.iter().enumerate() {
            let (vals, dm) = orthonormal(&kind, m, x, p0);
            let scale = dm.abs() * (1.0 + x.abs());
            if vals[m].abs() > RESIDUAL_TOLERANCE * scale {
                return Err(Error::Convergence { index: i, order: m });
            }
            let sum: f64 = vals[..m].iter().map(|v| v * v).sum();
            weights.push(1.0 / sum);
        }
        Ok(QuadRule {
            kind,
            nodes: zeros,
            weights,
        })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Highest polynomial degree the rule integrates exactly.
    pub fn exact_degree(&self) -> usize {
        2 * self.order() - 1
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Safeguarded Newton on the bracket `(lo, hi)` holding one sign change.
fn refine_zero(kind: &RuleKind, order: usize, p0: f64, lo: f64, hi: f64) -> Option<f64> {
    let eval = |x: f64| {
        let (vals, d) = orthonormal(kind, order, x, p0);
        (vals[order], d)
    };
    let (mut a, mut b) = (lo, hi);
    let (fa, _) = eval(a);
    let mut sign_a = fa.signum();
    let mut x = 0.5 * (a + b);
    for _ in 0..MAX_NEWTON_ITERATIONS {
        let (f, d) = eval(x);
        if f == 0.0 {
            return Some(x);
        }
        if f.signum() == sign_a {
            a = x;
            sign_a = f.signum();
        } else {
            b = x;
        }
        let newton = x - f / d;
        let next = if d != 0.0 && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
        let step = (next - x).abs();
        x = next;
        if step < NEWTON_STEP_TOLERANCE * (1.0 + x.abs())
            || (b - a) < NEWTON_STEP_TOLERANCE * (1.0 + x.abs())
        {
            return Some(x);
        }
    }
    None
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(z) for real z. Positive integers and half-integers go through the exact
/// recurrence down to Γ(1) = 1 or Γ(½) = √π; everything else uses a Lanczos
/// approximation (g = 7, 9 terms) with reflection below ½.
pub fn gamma(z: f64) -> f64 {
    let twice = 2.0 * z;
    if z > 0.0 && twice == twice.round() && z <= 171.0 {
        let (mut acc, mut t) = if twice as i64 % 2 == 0 {
            (1.0, 1.0)
        } else {
            (PI.sqrt(), 0.5)
        };
        while t < z {
            acc *= t;
            t += 1.0;
        }
        return acc;
    }
    if z < 0.5 {
        return PI / ((PI * z).sin() * gamma(1.0 - z));
    }
    let z = z - 1.0;
    let mut sum = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * sum
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Numeric value of a symbolic moment at `g = gval`.
pub fn evaluate_moment(v: &MomentValue, gval: &Rational) -> f64 {
    let g = rational_to_f64(gval);
    rational_to_f64(&v.one.eval(gval))
        + rational_to_f64(&v.sqrt_pi.eval(gval)) * PI.sqrt()
        + rational_to_f64(&v.gamma_g_half.eval(gval)) * gamma(g + 0.5)
}

fn horner_f64(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Quadrature image of an exact inner product at `g = gval`.
///
/// Gauss–Hermite integrates `p q e^{−x²}` over ℝ. Gauss–Laguerre with
/// `α = gval − ½` integrates `p q x^{2g} e^{−x²}` over (0, ∞) after the
/// substitution η = x², which leaves a factor ½ and requires `p q` to be even.
pub fn numeric_inner_product(
    p: &XPoly,
    q: &XPoly,
    gval: &Rational,
    rule: &QuadRule,
) -> Result<f64> {
    let prod: Poly<Rational> = &specialize_g(p, gval) * &specialize_g(q, gval);
    let deg = prod.degree().unwrap_or(0);
    match rule.kind {
        RuleKind::GaussHermite => {
            if deg > rule.exact_degree() {
                return Err(Error::Precondition(format!(
                    "degree {deg} exceeds rule exactness {}",
                    rule.exact_degree()
                )));
            }
            let coeffs: Vec<f64> = prod.coeffs().iter().map(rational_to_f64).collect();
            Ok(rule.integrate(|x| horner_f64(&coeffs, x)))
        }
        RuleKind::GaussLaguerre { alpha } => {
            let expected_alpha = rational_to_f64(gval) - 0.5;
            if (alpha - expected_alpha).abs() > 1e-14 * (1.0 + alpha.abs()) {
                return Err(Error::Precondition(format!(
                    "Laguerre rule has alpha {alpha}, weight needs {expected_alpha}"
                )));
            }
            if !prod.is_even() {
                return Err(Error::Precondition(
                    "integrand must be even for the x^(2g) weight".into(),
                ));
            }
            if deg / 2 > rule.exact_degree() {
                return Err(Error::Precondition(format!(
                    "degree {} in x^2 exceeds rule exactness {}",
                    deg / 2,
                    rule.exact_degree()
                )));
            }
            let coeffs: Vec<f64> = prod
                .coeffs()
                .iter()
                .step_by(2)
                .map(rational_to_f64)
                .collect();
            Ok(0.5 * rule.integrate(|eta| horner_f64(&coeffs, eta)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::laguerre_radial;
    use crate::exact::{gconst, int, rat};

    #[test]
    fn hermite_two_point() {
        let r = QuadRule::build(RuleKind::GaussHermite, 2).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((r.nodes[0] + h).abs() < 1e-15);
        assert!((r.nodes[1] - h).abs() < 1e-15);
        for w in &r.weights {
            assert!((w - PI.sqrt() / 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn one_point_rules() {
        let r = QuadRule::build(RuleKind::GaussHermite, 1).unwrap();
        assert!(r.nodes[0].abs() < 1e-15);
        assert!((r.weights[0] - PI.sqrt()).abs() < 1e-15);
        let r = QuadRule::build(RuleKind::GaussLaguerre { alpha: 0.0 }, 1).unwrap();
        assert!((r.nodes[0] - 1.0).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bad_parameters() {
        assert!(QuadRule::build(RuleKind::GaussHermite, 0).is_err());
        assert!(QuadRule::build(RuleKind::GaussLaguerre { alpha: -1.0 }, 3).is_err());
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(5.0), 24.0);
        assert!((gamma(0.5) - PI.sqrt()).abs() < 1e-15);
        assert!((gamma(2.5) - 0.75 * PI.sqrt()).abs() < 1e-15);
        // Γ(1/3) to 17 digits
        assert!((gamma(1.0 / 3.0) / 2.678_938_534_707_747_6 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn numeric_examples() {
        let g = rat(3, 2);
        let lag = QuadRule::build(RuleKind::GaussLaguerre { alpha: 1.0 }, 4).unwrap();
        let one = XPoly::one();
        assert!((numeric_inner_product(&one, &one, &g, &lag).unwrap() - 0.5).abs() < 1e-14);
        let l1 = laguerre_radial(1);
        assert!((numeric_inner_product(&l1, &l1, &g, &lag).unwrap() - 1.0).abs() < 1e-13);
        let gh = QuadRule::build(RuleKind::GaussHermite, 3).unwrap();
        let h2 = crate::classical::hermite(2);
        assert!(numeric_inner_product(&one, &h2, &g, &gh).unwrap().abs() < 1e-12);
        // insufficient order
        let small = QuadRule::build(RuleKind::GaussHermite, 1).unwrap();
        assert!(numeric_inner_product(&h2, &h2, &g, &small).is_err());
        let odd = XPoly::var();
        assert!(numeric_inner_product(&odd, &one, &g, &lag).is_err());
        assert!(numeric_inner_product(&one, &one, &int(3), &lag).is_err());
    }

    #[test]
    fn evaluates_units() {
        let v = &MomentValue::sqrt_pi(gconst(int(2))) + &MomentValue::gamma_g_half(gconst(int(1)));
        let got = evaluate_moment(&v, &rat(3, 2));
        assert!((got - (2.0 * PI.sqrt() + 1.0)).abs() < 1e-14);
    }
}
