//! Hermite ↔ Laguerre transforms and polynomial-level eigen checks.
//!
//! Notation below: `L̂ₙ = (−1)ⁿ n! L_n^{(g−½)}(x²)`, `Ĥₙ = Hₙ/2ⁿ`, and for odd
//! degree `Ĥ_{2n+1}/x = H_{2n+1} / (2^{2n+1} x)`.

use std::fmt;
use std::str::FromStr;

use crate::classical::{hermite, laguerre, laguerre_radial};
use crate::combinat::{binomial_q, factorial_q, falling, pow2, sign};
use crate::error::{Error, Result};
use crate::exact::{
    g, g_degree, g_plus, gconst, gscalar_pochhammer, int, rat, xpoly_divide_by_x,
    xpoly_substitute_eta_to_x2, GScalar, Rational, XPoly,
};
use crate::oscillator::{monic_hermite, op_hyp1f0, op_number, PairLowering};
use crate::report::VerifyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    LaguerreFromEven,
    LaguerreFromOdd,
    EvenFromLaguerre,
    OddFromLaguerreV1,
    OddFromLaguerreV2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Route {
    #[default]
    DirectSum,
    OperatorSeries,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TransformSpec {
    pub direction: Direction,
    pub route: Route,
}

impl TransformSpec {
    /// Only the Laguerre-producing directions have an operator route.
    pub fn apply(&self, n: usize) -> Result<XPoly> {
        use Direction::*;
        match (self.direction, self.route) {
            (LaguerreFromEven, route) => Ok(laguerre_from_hermite_even(n, route)),
            (LaguerreFromOdd, route) => laguerre_from_hermite_odd(n, route),
            (_, Route::OperatorSeries) => Err(Error::Precondition(format!(
                "direction {} has no operator route",
                self.direction
            ))),
            (EvenFromLaguerre, _) => Ok(hermite_from_laguerre(n, HermiteVariant::Even)),
            (OddFromLaguerreV1, _) => Ok(hermite_from_laguerre(n, HermiteVariant::OddV1)),
            (OddFromLaguerreV2, _) => Ok(hermite_from_laguerre(n, HermiteVariant::OddV2)),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::LaguerreFromEven => "laguerre-from-even",
            Direction::LaguerreFromOdd => "laguerre-from-odd",
            Direction::EvenFromLaguerre => "even-from-laguerre",
            Direction::OddFromLaguerreV1 => "odd-from-laguerre-v1",
            Direction::OddFromLaguerreV2 => "odd-from-laguerre-v2",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "laguerre-from-even" => Direction::LaguerreFromEven,
            "laguerre-from-odd" => Direction::LaguerreFromOdd,
            "even-from-laguerre" => Direction::EvenFromLaguerre,
            "odd-from-laguerre-v1" => Direction::OddFromLaguerreV1,
            "odd-from-laguerre-v2" => Direction::OddFromLaguerreV2,
            _ => return Err(Error::Parse(format!("unknown direction {s:?}"))),
        })
    }
}

/// Coefficient of Ĥ_{2(n−k)} in L̂ₙ: `(−1)ᵏ C(n,k) (g)ₖ`.
fn even_forward_coeff(n: usize, k: usize) -> GScalar {
    gscalar_pochhammer(&g(), k).scale_rational(&(sign(k) * binomial_q(n, k)))
}

/// Coefficient of Ĥ_{2(n−k)+1}/x in L̂ₙ: `(−1)ᵏ C(n,k) (g−1)ₖ`.
fn odd_forward_coeff(n: usize, k: usize) -> GScalar {
    gscalar_pochhammer(&g_plus(int(-1)), k).scale_rational(&(sign(k) * binomial_q(n, k)))
}

/// `H_{2m+1} / (2^{2m+1} x)`.
pub fn odd_hermite_over_x(m: usize) -> XPoly {
    xpoly_divide_by_x(&monic_hermite(2 * m + 1)).expect("odd Hermite has no constant term")
}

/// `(−1)ⁿ n! L_n^{(g−½)}(x²)` from even-degree Hermite polynomials.
pub fn laguerre_from_hermite_even(n: usize, route: Route) -> XPoly {
    match route {
        Route::DirectSum => (0..=n)
            .map(|k| monic_hermite(2 * (n - k)).scale(&even_forward_coeff(n, k)))
            .sum(),
        Route::OperatorSeries => op_hyp1f0(&monic_hermite(2 * n), &g(), PairLowering::B),
    }
}

/// `(−1)ⁿ n! L_n^{(g−½)}(x²)` from odd-degree Hermite polynomials.
pub fn laguerre_from_hermite_odd(n: usize, route: Route) -> Result<XPoly> {
    match route {
        Route::DirectSum => Ok((0..=n)
            .map(|k| odd_hermite_over_x(n - k).scale(&odd_forward_coeff(n, k)))
            .sum()),
        Route::OperatorSeries => {
            let series = op_hyp1f0(
                &monic_hermite(2 * n + 1),
                &g_plus(int(-1)),
                PairLowering::BPrime,
            );
            xpoly_divide_by_x(&series)
        }
    }
}

/// `(−1)ⁿ n! L_n^{(g−½)}(x²)` straight from the Laguerre definition.
pub fn scaled_laguerre_radial(n: usize) -> XPoly {
    laguerre_radial(n).scale_rational(&(sign(n) * factorial_q(n)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HermiteVariant {
    Even,
    OddV1,
    OddV2,
}

/// Inverse transforms. `Even` gives Ĥ_{2n}; the odd variants give
/// Ĥ_{2n+1}/x, with `OddV2` the g → g+1 shifted form over L^{(g+½)}.
pub fn hermite_from_laguerre(n: usize, variant: HermiteVariant) -> XPoly {
    let (offset, alpha) = match variant {
        HermiteVariant::Even => (1, g_plus(rat(-1, 2))),
        HermiteVariant::OddV1 => (0, g_plus(rat(-1, 2))),
        HermiteVariant::OddV2 => (1, g_plus(rat(1, 2))),
    };
    (0..=n)
        .map(|k| {
            let start = g_plus(int(offset - k as i64));
            let coeff = gscalar_pochhammer(&start, k)
                .scale_rational(&(binomial_q(n, k) * sign(n - k) * factorial_q(n - k)));
            xpoly_substitute_eta_to_x2(&laguerre(n - k, &alpha)).scale(&coeff)
        })
        .sum()
}

/// Inverse even coefficient: Ĥ_{2n} = Σ_k `C(n,k) (g+1−k)ₖ` L̂_{n−k}.
fn even_inverse_coeff(n: usize, k: usize) -> GScalar {
    gscalar_pochhammer(&g_plus(int(1 - k as i64)), k).scale_rational(&binomial_q(n, k))
}

/// Inverse odd coefficient: Ĥ_{2n+1}/x = Σ_k `C(n,k) (g−k)ₖ` L̂_{n−k}.
fn odd_inverse_coeff(n: usize, k: usize) -> GScalar {
    gscalar_pochhammer(&g_plus(int(-(k as i64))), k).scale_rational(&binomial_q(n, k))
}

/// Composes the forward and inverse coefficient tables without touching x.
///
/// Entry m of the result is the coefficient of the degree-(n−m) basis element
/// after mapping back; a true inverse pair gives `[1, 0, …, 0]`.
fn compose_tables(
    n: usize,
    outer: impl Fn(usize, usize) -> GScalar,
    inner: impl Fn(usize, usize) -> GScalar,
) -> Vec<GScalar> {
    let outer_row: Vec<GScalar> = (0..=n).map(|k| outer(n, k)).collect();
    let inner_rows: Vec<Vec<GScalar>> = (0..=n)
        .map(|k| (0..=n - k).map(|j| inner(n - k, j)).collect())
        .collect();
    (0..=n)
        .map(|m| (0..=m).map(|k| &outer_row[k] * &inner_rows[k][m - k]).sum())
        .collect()
}

fn unit_vector(n: usize) -> Vec<GScalar> {
    let mut v = vec![GScalar::zero(); n + 1];
    v[0] = GScalar::one();
    v
}

/// Checks that the forward and inverse transforms of one parity compose to the
/// identity in both orders.
pub fn round_trip_check(n: usize, odd: bool) -> Vec<VerifyReport> {
    type Table = fn(usize, usize) -> GScalar;
    let (fwd, inv): (Table, Table) = if odd {
        (odd_forward_coeff, odd_inverse_coeff)
    } else {
        (even_forward_coeff, even_inverse_coeff)
    };
    let tag = if odd { "odd" } else { "even" };
    let expected = unit_vector(n);
    vec![
        VerifyReport::compare(
            format!("round_trip_{tag}_hermite"),
            &[n],
            &expected,
            &compose_tables(n, inv, fwd),
        ),
        VerifyReport::compare(
            format!("round_trip_{tag}_laguerre"),
            &[n],
            &expected,
            &compose_tables(n, fwd, inv),
        ),
    ]
}

/// The classical g = 0 formulas relating Hermite to L^{(∓½)}.
pub fn classic_g0_check(n: usize, odd: bool) -> VerifyReport {
    let scale = sign(n) * factorial_q(n);
    let (name, expected, classical) = if !odd {
        let classical = xpoly_substitute_eta_to_x2(&laguerre(n, &gconst(rat(-1, 2))))
            .scale_rational(&(scale * pow2(2 * n)));
        ("classic_g0_even", hermite(2 * n), classical)
    } else {
        let classical = xpoly_substitute_eta_to_x2(&laguerre(n, &gconst(rat(1, 2))))
            .shift_up(1)
            .scale_rational(&(scale * pow2(2 * n + 1)));
        ("classic_g0_odd", hermite(2 * n + 1), classical)
    };
    VerifyReport::compare(name, &[n], &expected, &classical)
}

/// Radial Hamiltonian on stripped polynomial parts:
/// `A_g p = −p″ + 2x p′ − (2g/x) p′`.
pub fn radial_operator_apply(p: &XPoly) -> Result<XPoly> {
    let d = p.derivative();
    let centrifugal = xpoly_divide_by_x(&d)?.scale(&g().scale_rational(&int(2)));
    Ok(&(&d.shift_up(1).scale_rational(&int(2)) - &d.derivative()) - &centrifugal)
}

pub fn eigencheck_radial(n: usize) -> VerifyReport {
    let l = laguerre_radial(n);
    let expected = l.scale_rational(&int(4 * n as i64));
    match radial_operator_apply(&l) {
        Ok(got) => VerifyReport::compare("eigen_radial", &[n], &expected, &got),
        Err(e) => VerifyReport::errored("eigen_radial", &[n], e),
    }
}

pub fn eigencheck_harmonic(n: usize) -> VerifyReport {
    let h = hermite(n);
    let expected = h.scale_rational(&int(2 * n as i64));
    let got = op_number(&h).scale_rational(&int(2));
    VerifyReport::compare("eigen_harmonic", &[n], &expected, &got)
}

/// `Σ_{k=0}^n (−1)ᵏ n!/(n−k)! Ĥ_{2(n−k)}`, shared by the two identities below.
fn falling_even_sum(n: usize) -> XPoly {
    (0..=n)
        .map(|k| {
            let c = sign(k) * Rational::from_integer(falling(n, k));
            monic_hermite(2 * (n - k)).scale_rational(&c)
        })
        .sum()
}

pub fn hodd_byeven_check(n: usize) -> VerifyReport {
    match xpoly_divide_by_x(&monic_hermite(2 * n + 1)) {
        Ok(lhs) => VerifyReport::compare("hodd_byeven", &[n], &falling_even_sum(n), &lhs),
        Err(e) => VerifyReport::errored("hodd_byeven", &[n], e),
    }
}

/// `(1/x) d/dx` of `e^{−x²/2} Ĥ_{2n}` has polynomial part `Ĥ′_{2n}/x − Ĥ_{2n}`.
pub fn phi_ratio_identity_check(n: usize) -> VerifyReport {
    let h = monic_hermite(2 * n);
    let lhs = match xpoly_divide_by_x(&h.derivative()) {
        Ok(q) => &q - &h,
        Err(e) => return VerifyReport::errored("phi_ratio", &[n], e),
    };
    let rhs = &falling_even_sum(n).scale_rational(&int(-2)) + &h;
    VerifyReport::compare("phi_ratio", &[n], &rhs, &lhs)
}

/// Both routes of both parities against the Laguerre definition.
pub fn laguerre_transform_checks(n: usize) -> Vec<VerifyReport> {
    let expected = scaled_laguerre_radial(n);
    let mut out = vec![
        VerifyReport::compare(
            "laguerre_from_even_direct",
            &[n],
            &expected,
            &laguerre_from_hermite_even(n, Route::DirectSum),
        ),
        VerifyReport::compare(
            "laguerre_from_even_operator",
            &[n],
            &expected,
            &laguerre_from_hermite_even(n, Route::OperatorSeries),
        ),
    ];
    for (name, route) in [
        ("laguerre_from_odd_direct", Route::DirectSum),
        ("laguerre_from_odd_operator", Route::OperatorSeries),
    ] {
        out.push(match laguerre_from_hermite_odd(n, route) {
            Ok(got) => VerifyReport::compare(name, &[n], &expected, &got),
            Err(e) => VerifyReport::errored(name, &[n], e),
        });
    }
    let lead = expected.coeff(2 * n);
    out.push(VerifyReport::compare(
        "laguerre_scaled_monic",
        &[n],
        &GScalar::one(),
        &lead,
    ));
    out
}

/// Inverse transforms against the Hermite definition, plus g-independence.
pub fn inverse_transform_checks(n: usize) -> Vec<VerifyReport> {
    let even = hermite_from_laguerre(n, HermiteVariant::Even);
    let v1 = hermite_from_laguerre(n, HermiteVariant::OddV1);
    let v2 = hermite_from_laguerre(n, HermiteVariant::OddV2);
    let odd_expected = odd_hermite_over_x(n);
    let g_free = |p: &XPoly| g_degree(p).unwrap_or(0) == 0;
    vec![
        VerifyReport::compare("inverse_even", &[n], &monic_hermite(2 * n), &even),
        VerifyReport::compare("inverse_odd_v1", &[n], &odd_expected, &v1),
        VerifyReport::compare("inverse_odd_v2", &[n], &odd_expected, &v2),
        VerifyReport::compare("inverse_odd_v1_eq_v2", &[n], &v1, &v2),
        VerifyReport::with_verdict(
            "inverse_g_free",
            &[n],
            g_free(&even) && g_free(&v1) && g_free(&v2),
            serde_json::json!(0),
            serde_json::json!([g_degree(&even), g_degree(&v1), g_degree(&v2)]),
        ),
    ]
}
