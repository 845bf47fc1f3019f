//! Free-oscillator operators acting on polynomial parts.
//!
//! Everything here is conjugated by the ground state e^{-x²/2} and rescaled to
//! avoid √2:
//!
//! * `A₋ = d/dx` (lowering), `A₋ Hₙ = 2n Hₙ₋₁`
//! * `A₊ = -d/dx + 2x` (raising), `A₊ Hₙ = Hₙ₊₁`
//! * `Ñ = ½ A₊ A₋ = x d/dx - ½ d²/dx²`, `Ñ Hₙ = n Hₙ`
//! * `ã² = ½ d²/dx²`
//!
//! `b̃ = (Ñ+1)⁻¹ ã²` and `b̃′ = (Ñ+2)⁻¹ ã²`; `a²` is applied first.

use crate::classical::hermite;
use crate::combinat::{factorial_q, pow2, sign};
use crate::exact::{gscalar_pochhammer, int, rat, GScalar, Rational, XPoly};

/// Which lowering pair operator the ₁F₀ series is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairLowering {
    /// `b̃ = (Ñ+1)⁻¹ ã²`
    B,
    /// `b̃′ = (Ñ+2)⁻¹ ã²`
    BPrime,
}

impl PairLowering {
    fn shift(self) -> u32 {
        match self {
            PairLowering::B => 1,
            PairLowering::BPrime => 2,
        }
    }

    pub fn apply(self, p: &XPoly) -> XPoly {
        let half_second = p.derivative().derivative().scale_rational(&rat(1, 2));
        solve_shifted_number(&half_second, self.shift())
    }
}

pub fn op_lower(p: &XPoly) -> XPoly {
    p.derivative()
}

pub fn op_raise(p: &XPoly) -> XPoly {
    &p.shift_up(1).scale_rational(&int(2)) - &p.derivative()
}

pub fn op_number(p: &XPoly) -> XPoly {
    let d = p.derivative();
    &d.shift_up(1) - &d.derivative().scale_rational(&rat(1, 2))
}

/// Solves `(Ñ + s) q = p` by back-substitution in the monomial basis.
///
/// `Ñ xᵏ = k xᵏ - k(k-1)/2 x^{k-2}`, so the operator is triangular with
/// diagonal `k + s`, and `q_k = (p_k + (k+2)(k+1)/2 q_{k+2}) / (k + s)`.
///
/// # Panics
///
/// If `s == 0`.
pub fn solve_shifted_number(p: &XPoly, s: u32) -> XPoly {
    assert!(s >= 1, "Ñ + s is only invertible for s >= 1");
    let Some(deg) = p.degree() else {
        return XPoly::zero();
    };
    let mut q = vec![GScalar::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let mut acc = p.coeff(k);
        if k + 2 <= deg {
            let w = int(((k + 2) * (k + 1) / 2) as i64);
            acc += &q[k + 2].scale_rational(&w);
        }
        q[k] = acc.scale_rational(&rat(1, (k as i64) + s as i64));
    }
    XPoly::new(q)
}

/// Expands `p` in the Hermite basis; entry k multiplies Hₖ.
pub fn hermite_expansion(p: &XPoly) -> Vec<GScalar> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let mut rest = p.clone();
    let mut out = vec![GScalar::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let c = rest.coeff(k).scale_rational(&(rat(1, 1) / pow2(k)));
        if !c.is_zero() {
            rest -= &hermite(k).scale(&c);
            out[k] = c;
        }
    }
    debug_assert!(rest.is_zero());
    out
}

pub fn from_hermite_expansion(coeffs: &[GScalar]) -> XPoly {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| hermite(k).scale(c))
        .sum()
}

/// Same contract as [`solve_shifted_number`] via the Hermite eigenbasis of Ñ.
pub fn solve_shifted_number_hermite_basis(p: &XPoly, s: u32) -> XPoly {
    let expanded: Vec<GScalar> = hermite_expansion(p)
        .into_iter()
        .enumerate()
        .map(|(k, c)| c.scale_rational(&rat(1, k as i64 + s as i64)))
        .collect();
    from_hermite_expansion(&expanded)
}

pub fn op_b(p: &XPoly) -> XPoly {
    PairLowering::B.apply(p)
}

pub fn op_bprime(p: &XPoly) -> XPoly {
    PairLowering::BPrime.apply(p)
}

pub fn op_b_power(p: &XPoly, k: usize) -> XPoly {
    let mut out = p.clone();
    for _ in 0..k {
        if out.is_zero() {
            break;
        }
        out = op_b(&out);
    }
    out
}

/// `₁F₀(base; −b̃) p = Σ_k ((base)_k / k!) (−1)^k b̃^k p`, summed up to
/// `k = ⌈deg p / 2⌉` where the series has already terminated.
///
/// Applying the series to odd-degree input with [`PairLowering::B`] is well
/// defined but has no counterpart in the oscillator picture.
pub fn op_hyp1f0(p: &XPoly, base: &GScalar, lowering: PairLowering) -> XPoly {
    let Some(deg) = p.degree() else {
        return XPoly::zero();
    };
    let terms = deg.div_ceil(2);
    let mut power = p.clone();
    let mut poch = GScalar::one();
    let mut sum = p.clone();
    for k in 1..=terms {
        power = lowering.apply(&power);
        poch = &poch * &(base + &GScalar::constant(int(k as i64 - 1)));
        let coeff = poch.scale_rational(&(sign(k) / factorial_q(k)));
        sum += &power.scale(&coeff);
    }
    debug_assert_eq!(poch, gscalar_pochhammer(base, terms));
    sum
}

/// Hₙ / 2ⁿ, the monic Hermite polynomial.
pub fn monic_hermite(n: usize) -> XPoly {
    hermite(n).scale_rational(&(Rational::from_integer(1.into()) / pow2(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::laguerre_radial;
    use crate::exact::{g, g_plus, gconst};

    fn c(n: i64) -> GScalar {
        gconst(int(n))
    }

    #[test]
    fn lower_examples() {
        assert_eq!(op_lower(&hermite(2)), XPoly::new(vec![c(0), c(8)]));
        assert_eq!(op_lower(&XPoly::one()), XPoly::zero());
        assert_eq!(op_lower(&hermite(4)), hermite(3).scale_rational(&int(8)));
    }

    #[test]
    fn raise_examples() {
        assert_eq!(op_raise(&hermite(0)), hermite(1));
        assert_eq!(op_raise(&hermite(1)), hermite(2));
        assert_eq!(op_raise(&hermite(2)), hermite(3));
    }

    #[test]
    fn number_examples() {
        assert_eq!(op_number(&XPoly::one()), XPoly::zero());
        assert_eq!(op_number(&hermite(2)), XPoly::new(vec![c(-4), c(0), c(8)]));
        // xᵏ → k xᵏ − k(k−1)/2 x^{k−2}
        let x5 = XPoly::monomial(c(1), 5);
        assert_eq!(
            op_number(&x5),
            &XPoly::monomial(c(5), 5) - &XPoly::monomial(c(10), 3)
        );
    }

    #[test]
    fn shifted_number_examples() {
        assert_eq!(solve_shifted_number(&XPoly::one(), 1), XPoly::one());
        let x2 = XPoly::monomial(c(1), 2);
        let third = gconst(rat(1, 3));
        assert_eq!(
            solve_shifted_number(&x2, 1),
            XPoly::new(vec![third.clone(), c(0), third])
        );
        assert_eq!(
            solve_shifted_number(&hermite(2), 1),
            hermite(2).scale_rational(&rat(1, 3))
        );
    }

    #[test]
    fn shifted_number_routes_agree_on_hermite_sums() {
        let p = &hermite(7).scale(&g()) + &hermite(4).scale_rational(&rat(-5, 2));
        for s in 1..=3 {
            let q = solve_shifted_number(&p, s);
            assert_eq!(q, solve_shifted_number_hermite_basis(&p, s));
            let back = &op_number(&q) + &q.scale_rational(&int(s as i64));
            assert_eq!(back, p);
        }
    }

    #[test]
    fn b_examples() {
        assert!(op_b(&hermite(0)).is_zero());
        assert!(op_b(&hermite(1)).is_zero());
        assert_eq!(op_b(&hermite(2)), hermite(0).scale_rational(&int(4)));
        assert_eq!(op_b(&hermite(4)), hermite(2).scale_rational(&int(8)));
    }

    #[test]
    fn b_power_examples() {
        let h4 = monic_hermite(4);
        assert_eq!(op_b_power(&h4, 2), hermite(0).scale_rational(&int(2)));
        assert!(op_b_power(&hermite(4), 3).is_zero());
        assert_eq!(op_b_power(&h4, 0), h4);
    }

    #[test]
    fn bprime_on_odd_hermite() {
        // b′ H_{2n+1} = 4n H_{2n-1}
        for n in 0..=6 {
            let got = op_bprime(&hermite(2 * n + 1));
            if n == 0 {
                assert!(got.is_zero());
            } else {
                assert_eq!(got, hermite(2 * n - 1).scale_rational(&int(4 * n as i64)));
            }
        }
    }

    #[test]
    fn hyp1f0_examples() {
        assert_eq!(op_hyp1f0(&hermite(0), &g(), PairLowering::B), XPoly::one());
        let got = op_hyp1f0(&monic_hermite(2), &g(), PairLowering::B);
        assert_eq!(got, XPoly::new(vec![-&g_plus(rat(1, 2)), c(0), c(1)]));
        let got = op_hyp1f0(&monic_hermite(4), &g(), PairLowering::B);
        assert_eq!(got, laguerre_radial(2).scale_rational(&int(2)));
    }
}
