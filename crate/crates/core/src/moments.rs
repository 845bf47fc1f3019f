//! Exact inner products, Gram matrices and the three auxiliary identities.

use rayon::prelude::*;

use crate::classical::{hermite, laguerre_radial};
use crate::combinat::{binomial_q, factorial, factorial_q, pow2, sign};
use crate::error::{Error, Result};
use crate::exact::{
    g, g_plus, gconst, gscalar_pochhammer, int, rat, GScalar, MomentValue, Rational, XPoly,
};
use crate::report::VerifyReport;
use crate::transforms::{laguerre_from_hermite_even, Route};

/// Integration weight for [`inner_product`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Weight {
    /// e^{−x²} on (0, ∞)
    GaussHalfLine,
    /// e^{−x²} on ℝ
    GaussFullLine,
    /// x^{2g} e^{−x²} on (0, ∞)
    WeightedG,
}

/// `(2k)! / (4ᵏ k!)`, i.e. `Γ(k+½)/√π`.
fn half_integer_gamma_ratio(k: usize) -> Rational {
    Rational::new(factorial(2 * k), factorial(k)) / pow2(2 * k)
}

/// `∫ xʲ w(x) dx`.
pub fn moment(weight: Weight, j: usize) -> Result<MomentValue> {
    let k = j / 2;
    let even = j.is_multiple_of(2);
    Ok(match (weight, even) {
        (Weight::GaussHalfLine, true) => {
            MomentValue::sqrt_pi(gconst(half_integer_gamma_ratio(k) * rat(1, 2)))
        }
        (Weight::GaussHalfLine, false) => MomentValue::scalar(gconst(factorial_q(k) * rat(1, 2))),
        (Weight::GaussFullLine, true) => MomentValue::sqrt_pi(gconst(half_integer_gamma_ratio(k))),
        (Weight::GaussFullLine, false) => MomentValue::zero(),
        (Weight::WeightedG, true) => MomentValue::gamma_g_half(
            gscalar_pochhammer(&g_plus(rat(1, 2)), k).scale_rational(&rat(1, 2)),
        ),
        (Weight::WeightedG, false) => {
            return Err(Error::UnsupportedMoment(format!(
                "odd power x^{j} against x^(2g) e^(-x^2)"
            )))
        }
    })
}

/// `∫ p(x) q(x) w(x) dx`; coefficients are real so no conjugation is needed.
pub fn inner_product(p: &XPoly, q: &XPoly, weight: Weight) -> Result<MomentValue> {
    let prod = p * q;
    if weight == Weight::WeightedG && !prod.is_even() {
        return Err(Error::UnsupportedMoment(
            "product has odd powers under the x^(2g) weight".into(),
        ));
    }
    let mut acc = MomentValue::zero();
    for (j, c) in prod.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc += &moment(weight, j)?.scale(c);
    }
    Ok(acc)
}

pub type Gram = Vec<Vec<MomentValue>>;

fn gram_of(polys: &[XPoly], weight: Weight) -> Result<Gram> {
    polys
        .par_iter()
        .map(|p| polys.iter().map(|q| inner_product(p, q, weight)).collect())
        .collect()
}

/// Gram matrix of `L_n^{(g−½)}(x²)` under x^{2g} e^{−x²} for n ≤ max_n.
pub fn gram_radial(max_n: usize) -> Gram {
    let polys: Vec<XPoly> = (0..=max_n).map(laguerre_radial).collect();
    gram_of(&polys, Weight::WeightedG).expect("radial polynomials are even")
}

/// Gram matrix of the polynomial parts of Fₙ, built from even Hermite sums.
pub fn gram_f(max_n: usize) -> Gram {
    let polys: Vec<XPoly> = (0..=max_n)
        .map(|n| laguerre_from_hermite_even(n, Route::DirectSum))
        .collect();
    gram_of(&polys, Weight::WeightedG).expect("F polynomials are even")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HermiteGram {
    HalfLineEven,
    HalfLineOdd,
    FullLine,
}

pub fn gram_hermite(kind: HermiteGram, max_n: usize) -> Gram {
    let (degree, weight): (fn(usize) -> usize, _) = match kind {
        HermiteGram::HalfLineEven => (|n| 2 * n, Weight::GaussHalfLine),
        HermiteGram::HalfLineOdd => (|n| 2 * n + 1, Weight::GaussHalfLine),
        HermiteGram::FullLine => (|n| n, Weight::GaussFullLine),
    };
    let polys: Vec<XPoly> = (0..=max_n).map(|n| hermite(degree(n))).collect();
    gram_of(&polys, weight).expect("Gaussian weights accept every power")
}

/// `((g+½)ₙ / (2 n!)) Γ(g+½)`.
pub fn radial_norm(n: usize) -> MomentValue {
    MomentValue::gamma_g_half(
        gscalar_pochhammer(&g_plus(rat(1, 2)), n).scale_rational(&(rat(1, 2) / factorial_q(n))),
    )
}

/// `½ n! (g+½)ₙ Γ(g+½)`.
pub fn f_norm(n: usize) -> MomentValue {
    MomentValue::gamma_g_half(
        gscalar_pochhammer(&g_plus(rat(1, 2)), n).scale_rational(&(rat(1, 2) * factorial_q(n))),
    )
}

pub fn hermite_norm(kind: HermiteGram, n: usize) -> MomentValue {
    let c = match kind {
        HermiteGram::HalfLineEven => factorial_q(2 * n) * pow2(2 * n) * rat(1, 2),
        HermiteGram::HalfLineOdd => factorial_q(2 * n + 1) * pow2(2 * n),
        HermiteGram::FullLine => factorial_q(n) * pow2(n),
    };
    MomentValue::sqrt_pi(gconst(c))
}

/// Diagonal expected from `norm`, zeros elsewhere.
pub fn diagonal(max_n: usize, norm: impl Fn(usize) -> MomentValue) -> Gram {
    (0..=max_n)
        .map(|m| {
            (0..=max_n)
                .map(|n| if m == n { norm(n) } else { MomentValue::zero() })
                .collect()
        })
        .collect()
}

/// Entrywise checks of a computed Gram matrix against an expected one.
pub fn gram_reports(identity: &str, expected: &Gram, got: &Gram) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for (m, (erow, grow)) in expected.iter().zip(got).enumerate() {
        for (n, (e, v)) in erow.iter().zip(grow).enumerate() {
            out.push(VerifyReport::compare(identity, &[m, n], e, v));
        }
    }
    out
}

/// `(Fₘ,Fₙ)′ = (−1)^{m+n} m! n! (φᴸₘ,φᴸₙ)′` entrywise.
pub fn rescaling_consistency(f: &Gram, radial: &Gram) -> Vec<VerifyReport> {
    let scaled: Gram = radial
        .iter()
        .enumerate()
        .map(|(m, row)| {
            row.iter()
                .enumerate()
                .map(|(n, v)| {
                    let c = sign(m + n) * factorial_q(m) * factorial_q(n);
                    v.scale(&gconst(c))
                })
                .collect()
        })
        .collect();
    gram_reports("gram_f_rescaling", &scaled, f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuxIdentity {
    /// `Σ_{k≤n} (g)ₖ/k! = (g+1)ₙ/n!`, indices `[n]`
    Id1,
    /// the binomial/double-factorial resummation, indices `[m, l]` with `l ≤ m`
    Id2,
    /// the double alternating sum giving `δₘₙ n!/(g+½)ₙ`, indices `[m, n]`
    Id3,
}

/// Checks one instance of an auxiliary identity exactly in Q[g].
///
/// The third identity is compared after multiplying both sides by `(g+½)ₙ`,
/// which makes every term polynomial.
pub fn identity_check(which: AuxIdentity, indices: &[usize]) -> Result<VerifyReport> {
    let gh = g_plus(rat(1, 2));
    match (which, indices) {
        (AuxIdentity::Id1, &[n]) => {
            let lhs: GScalar = (0..=n)
                .map(|k| gscalar_pochhammer(&g(), k).scale_rational(&(rat(1, 1) / factorial_q(k))))
                .sum();
            let rhs = gscalar_pochhammer(&g_plus(int(1)), n)
                .scale_rational(&(rat(1, 1) / factorial_q(n)));
            Ok(VerifyReport::compare("id1", indices, &rhs, &lhs))
        }
        (AuxIdentity::Id2, &[m, l]) if l <= m => {
            let lhs: GScalar = (0..=m - l)
                .map(|k| {
                    let c = binomial_q(m, k)
                        * Rational::new(factorial(2 * (m - k)), factorial(m - k - l))
                        / pow2(2 * (m - k));
                    gscalar_pochhammer(&g(), k).scale_rational(&c)
                })
                .sum();
            let c = factorial_q(2 * l) / pow2(2 * l) * binomial_q(m, l);
            // (g+½)_m / (g+½)_l = (g+½+l)_{m−l}
            let rhs = gscalar_pochhammer(&(&gh + &gconst(int(l as i64))), m - l).scale_rational(&c);
            Ok(VerifyReport::compare("id2", indices, &rhs, &lhs))
        }
        (AuxIdentity::Id3, &[m, n]) => Ok(id3_report(m, n, &id3_inner(m, n))),
        _ => Err(Error::Index(format!(
            "{which:?} does not accept indices {indices:?}"
        ))),
    }
}

/// `Σ_{l1} (−1)^{l1} C(m,l1) (g+½+l1)_{l2}` for every `l2 ≤ max_l2`.
fn id3_inner(m: usize, max_l2: usize) -> Vec<GScalar> {
    let gh = g_plus(rat(1, 2));
    let mut inner = vec![GScalar::zero(); max_l2 + 1];
    for l1 in 0..=m {
        let c = sign(l1) * binomial_q(m, l1);
        let start = &gh + &gconst(int(l1 as i64));
        for (l2, slot) in inner.iter_mut().enumerate() {
            *slot += &gscalar_pochhammer(&start, l2).scale_rational(&c);
        }
    }
    inner
}

fn id3_report(m: usize, n: usize, inner: &[GScalar]) -> VerifyReport {
    let gh = g_plus(rat(1, 2));
    let lhs: GScalar = inner[..=n]
        .iter()
        .enumerate()
        .map(|(l2, s)| {
            // (g+½)ₙ / (g+½)_{l2} = (g+½+l2)_{n−l2}
            let start = &gh + &gconst(int(l2 as i64));
            let cleared = gscalar_pochhammer(&start, n - l2);
            (s * &cleared).scale_rational(&(sign(l2) * binomial_q(n, l2)))
        })
        .sum();
    let rhs = if m == n {
        gconst(factorial_q(n))
    } else {
        GScalar::zero()
    };
    VerifyReport::compare("id3", &[m, n], &rhs, &lhs)
}

/// The third identity for fixed `m` and every `n ≤ max_n`, sharing the inner sums.
pub fn id3_row(m: usize, max_n: usize) -> Vec<VerifyReport> {
    let inner = id3_inner(m, max_n);
    (0..=max_n).map(|n| id3_report(m, n, &inner)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moment_examples() {
        assert_eq!(
            moment(Weight::GaussHalfLine, 0).unwrap(),
            MomentValue::sqrt_pi(gconst(rat(1, 2)))
        );
        assert_eq!(
            moment(Weight::WeightedG, 0).unwrap(),
            MomentValue::gamma_g_half(gconst(rat(1, 2)))
        );
        assert_eq!(
            moment(Weight::WeightedG, 2).unwrap(),
            MomentValue::gamma_g_half(g_plus(rat(1, 2)).scale_rational(&rat(1, 2)))
        );
        assert_eq!(
            moment(Weight::GaussHalfLine, 5).unwrap(),
            MomentValue::scalar(gconst(int(1)))
        );
        assert!(moment(Weight::GaussFullLine, 3).unwrap().is_zero());
        assert!(matches!(
            moment(Weight::WeightedG, 1),
            Err(Error::UnsupportedMoment(_))
        ));
    }

    #[test]
    fn inner_product_examples() {
        let one = XPoly::one();
        assert_eq!(
            inner_product(&one, &one, Weight::WeightedG).unwrap(),
            MomentValue::gamma_g_half(gconst(rat(1, 2)))
        );
        assert!(
            inner_product(&hermite(0), &hermite(2), Weight::GaussFullLine)
                .unwrap()
                .is_zero()
        );
        let x = XPoly::var();
        assert_eq!(
            inner_product(&x, &x, Weight::GaussHalfLine).unwrap(),
            MomentValue::sqrt_pi(gconst(rat(1, 4)))
        );
        assert!(inner_product(&x, &one, Weight::WeightedG).is_err());
    }

    #[test]
    fn gram_small() {
        let r = gram_radial(1);
        assert_eq!(r[0][0], MomentValue::gamma_g_half(gconst(rat(1, 2))));
        assert!(r[0][1].is_zero());
        assert_eq!(
            r[1][1],
            MomentValue::gamma_g_half(g_plus(rat(1, 2)).scale_rational(&rat(1, 2)))
        );
        let f = gram_f(2);
        assert_eq!(f[0][0], MomentValue::gamma_g_half(gconst(rat(1, 2))));
        assert_eq!(f[1][1], r[1][1]);
        assert!(f[2][1].is_zero());
    }

    #[test]
    fn hermite_gram_small() {
        let e = gram_hermite(HermiteGram::HalfLineEven, 1);
        assert_eq!(e[0][0], MomentValue::sqrt_pi(gconst(rat(1, 2))));
        let o = gram_hermite(HermiteGram::HalfLineOdd, 0);
        assert_eq!(o[0][0], MomentValue::sqrt_pi(gconst(int(1))));
        let fl = gram_hermite(HermiteGram::FullLine, 1);
        assert_eq!(fl[1][1], MomentValue::sqrt_pi(gconst(int(2))));
        assert!(fl[0][1].is_zero());
    }

    #[test]
    fn identity_examples() {
        assert!(identity_check(AuxIdentity::Id1, &[1]).unwrap().pass);
        for m in 0..=5 {
            assert!(identity_check(AuxIdentity::Id2, &[m, m]).unwrap().pass);
        }
        assert!(identity_check(AuxIdentity::Id3, &[0, 1]).unwrap().pass);
        assert!(identity_check(AuxIdentity::Id2, &[1, 2]).is_err());
        assert!(identity_check(AuxIdentity::Id3, &[1]).is_err());
    }
}
