//! Exact arithmetic: rationals, the coupling ring Q[g], polynomials in x over
//! Q[g], and symbolic moment values.

mod json;
mod moment;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use json::{
    gscalar_from_json, moment_from_json, moment_matrix_from_json, parse_rational,
    rational_from_json, xpoly_from_json, ToJson,
};
pub use moment::MomentValue;
pub use poly::{Coefficient, Poly};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Polynomial in the coupling constant g with rational coefficients.
pub type GScalar = Poly<Rational>;

/// Polynomial in x with coefficients in Q[g].
pub type XPoly = Poly<GScalar>;

/// Polynomial in the abstract variable η = x², same layout as [`XPoly`].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EtaPoly(pub XPoly);

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The coupling constant g as an element of Q[g].
pub fn g() -> GScalar {
    GScalar::var()
}

/// `g + c`.
pub fn g_plus(c: Rational) -> GScalar {
    GScalar::new(vec![c, Rational::one()])
}

pub fn gconst(c: Rational) -> GScalar {
    GScalar::constant(c)
}

type PochhammerCache = RwLock<HashMap<Rational, Vec<GScalar>>>;

fn shifted_g_cache() -> &'static PochhammerCache {
    static CACHE: OnceLock<PochhammerCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `(g+c)_k`, memoized per offset `c`.
fn shifted_g_pochhammer(c: &Rational, k: usize) -> GScalar {
    if let Some(row) = shifted_g_cache().read().expect("cache poisoned").get(c) {
        if let Some(v) = row.get(k) {
            return v.clone();
        }
    }
    let mut cache = shifted_g_cache().write().expect("cache poisoned");
    let row = cache
        .entry(c.clone())
        .or_insert_with(|| vec![GScalar::one()]);
    while row.len() <= k {
        let j = row.len() - 1;
        let factor = g_plus(c + Rational::from_integer(BigInt::from(j)));
        let next = &row[j] * &factor;
        row.push(next);
    }
    row[k].clone()
}

/// Rising factorial `(start)_k = start (start+1) ... (start+k-1)`; `k = 0` gives 1.
pub fn gscalar_pochhammer(start: &GScalar, k: usize) -> GScalar {
    if start.degree() == Some(1) && start.coeff(1).is_one() {
        return shifted_g_pochhammer(&start.coeff(0), k);
    }
    let mut acc = GScalar::one();
    let mut factor = start.clone();
    let step = GScalar::one();
    for _ in 0..k {
        acc = &acc * &factor;
        factor += &step;
    }
    acc
}

/// Rising factorial of a rational.
pub fn rational_pochhammer(start: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = start.clone();
    for _ in 0..k {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

pub fn gscalar_eval(s: &GScalar, gval: &Rational) -> Rational {
    s.eval(gval)
}

/// Evaluates `p` at `g = gval`, `x = xval`.
pub fn xpoly_eval(p: &XPoly, gval: &Rational, xval: &Rational) -> Rational {
    specialize_g(p, gval).eval(xval)
}

/// Substitutes a value for g, leaving a polynomial in x over Q.
pub fn specialize_g(p: &XPoly, gval: &Rational) -> Poly<Rational> {
    p.map(|c| c.eval(gval))
}

/// Substitutes a value for g but keeps the Q[g][x] representation.
pub fn specialize_g_xpoly(p: &XPoly, gval: &Rational) -> XPoly {
    p.map(|c| GScalar::constant(c.eval(gval)))
}

/// Formal derivative with respect to x.
pub fn xpoly_derivative(p: &XPoly) -> XPoly {
    p.derivative()
}

/// Returns `q` with `x q = p`.
pub fn xpoly_divide_by_x(p: &XPoly) -> Result<XPoly> {
    match p.coeffs().first() {
        None => Ok(XPoly::zero()),
        Some(c0) if !c0.is_zero() => Err(Error::NotDivisibleByX),
        Some(_) => Ok(XPoly::new(p.coeffs()[1..].to_vec())),
    }
}

/// Rewrites every η^k as x^{2k}.
pub fn xpoly_substitute_eta_to_x2(p: &EtaPoly) -> XPoly {
    let src = p.0.coeffs();
    if src.is_empty() {
        return XPoly::zero();
    }
    let mut coeffs = vec![GScalar::zero(); 2 * src.len() - 1];
    for (k, c) in src.iter().enumerate() {
        coeffs[2 * k] = c.clone();
    }
    XPoly::new(coeffs)
}

/// Largest power of g appearing in any coefficient, `None` for zero.
pub fn g_degree(p: &XPoly) -> Option<usize> {
    p.coeffs().iter().filter_map(|c| c.degree()).max()
}

impl EtaPoly {
    pub fn coeffs(&self) -> &[GScalar] {
        self.0.coeffs()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }
}

fn write_terms<T>(
    f: &mut fmt::Formatter<'_>,
    terms: impl DoubleEndedIterator<Item = (usize, T)>,
    var: &str,
    render: impl Fn(&T, usize) -> (bool, String),
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms.rev() {
        let (negative, body) = render(&c, k);
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let term = match (body.is_empty(), mono.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => mono,
            (false, true) => body,
            (false, false) => format!("{body}*{mono}"),
        };
        match (first, negative) {
            (true, true) => write!(f, "-{term}")?,
            (true, false) => write!(f, "{term}")?,
            (false, true) => write!(f, " - {term}")?,
            (false, false) => write!(f, " + {term}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn render_rational(c: &Rational, k: usize) -> (bool, String) {
    let abs = c.abs();
    let body = if abs.is_one() && k > 0 {
        String::new()
    } else {
        abs.to_string()
    };
    (c.is_negative(), body)
}

impl fmt::Display for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c));
        write_terms(f, terms, "g", |c, k| render_rational(c, k))
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero());
        write_terms(f, terms, "x", |c, k| {
            let nonzero: Vec<_> = c
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, r)| !Zero::is_zero(*r))
                .collect();
            if let [(gk, r)] = nonzero[..] {
                let (neg, mut body) = render_rational(r, gk + k);
                if gk > 0 {
                    let gm = if gk == 1 {
                        "g".to_string()
                    } else {
                        format!("g^{gk}")
                    };
                    body = if body.is_empty() {
                        gm
                    } else {
                        format!("{body}*{gm}")
                    };
                }
                (neg, body)
            } else {
                (false, format!("({c})"))
            }
        })
    }
}

impl fmt::Display for EtaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.to_string();
        write!(f, "{}", s.replace('x', "eta"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(cs: &[(i64, i64)]) -> GScalar {
        GScalar::new(cs.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    fn xp(cs: &[GScalar]) -> XPoly {
        XPoly::new(cs.to_vec())
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(gscalar_pochhammer(&g(), 0), GScalar::one());
        assert_eq!(gscalar_pochhammer(&g(), 2), gs(&[(0, 1), (1, 1), (1, 1)]));
        assert_eq!(
            gscalar_pochhammer(&g_plus(rat(1, 2)), 2),
            gs(&[(3, 4), (2, 1), (1, 1)])
        );
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = gs(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.coeffs().len(), 1);
        assert_eq!(gs(&[(0, 1)]).degree(), None);
        assert!(gs(&[]).is_zero());
    }

    #[test]
    fn derivative_examples() {
        let c = |n| gconst(int(n));
        assert_eq!(xpoly_derivative(&XPoly::one()), XPoly::zero());
        assert_eq!(
            xpoly_derivative(&xp(&[c(-2), c(0), c(4)])),
            xp(&[c(0), c(8)])
        );
        assert_eq!(
            xpoly_derivative(&xp(&[c(0), c(-12), c(0), c(8)])),
            xp(&[c(-12), c(0), c(24)])
        );
    }

    #[test]
    fn divide_by_x_examples() {
        let c = |n| gconst(int(n));
        assert_eq!(xpoly_divide_by_x(&xp(&[c(0), c(2)])).unwrap(), xp(&[c(2)]));
        assert_eq!(
            xpoly_divide_by_x(&xp(&[c(0), c(-12), c(0), c(8)])).unwrap(),
            xp(&[c(-12), c(0), c(8)])
        );
        assert!(matches!(
            xpoly_divide_by_x(&XPoly::one()),
            Err(Error::NotDivisibleByX)
        ));
        assert_eq!(xpoly_divide_by_x(&XPoly::zero()).unwrap(), XPoly::zero());
    }

    #[test]
    fn substitute_examples() {
        let c = |n| gconst(int(n));
        let one = EtaPoly(XPoly::one());
        assert_eq!(xpoly_substitute_eta_to_x2(&one), XPoly::one());
        let l1 = EtaPoly(xp(&[g_plus(rat(1, 2)), c(-1)]));
        assert_eq!(
            xpoly_substitute_eta_to_x2(&l1),
            xp(&[g_plus(rat(1, 2)), c(0), c(-1)])
        );
        let eta2 = EtaPoly(xp(&[c(0), c(0), c(1)]));
        assert_eq!(xpoly_substitute_eta_to_x2(&eta2), XPoly::monomial(c(1), 4));
    }

    #[test]
    fn eval_examples() {
        let s = gs(&[(0, 1), (1, 1), (1, 1)]);
        assert_eq!(gscalar_eval(&s, &int(0)), int(0));
        assert_eq!(gscalar_eval(&s, &rat(3, 2)), rat(15, 4));
        let h2 = xp(&[gconst(int(-2)), GScalar::zero(), gconst(int(4))]);
        assert_eq!(xpoly_eval(&h2, &rat(7, 3), &int(1)), int(2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(gs(&[(3, 4), (2, 1), (1, 1)]).to_string(), "g^2 + 2*g + 3/4");
        assert_eq!(gs(&[(-1, 2), (-1, 1)]).to_string(), "-g - 1/2");
        assert_eq!(GScalar::zero().to_string(), "0");
        let p = xp(&[g_plus(rat(1, 2)), GScalar::zero(), gconst(int(-1))]);
        assert_eq!(p.to_string(), "-x^2 + (g + 1/2)");
        let q = xp(&[gs(&[(0, 1), (-2, 1)]), gconst(int(3))]);
        assert_eq!(q.to_string(), "3*x - 2*g");
    }
}
