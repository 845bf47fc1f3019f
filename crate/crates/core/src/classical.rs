//! Hermite and Laguerre generators.

use num_bigint::BigInt;

use crate::combinat::{factorial, factorial_q, pow2, sign};
use crate::error::{Error, Result};
use crate::exact::{
    g_plus, gconst, gscalar_pochhammer, int, rat, rational_pochhammer, xpoly_substitute_eta_to_x2,
    EtaPoly, GScalar, Rational, XPoly,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyFamily {
    Hermite,
    LaguerreRadial,
}

impl PolyFamily {
    pub fn generate(self, n: usize) -> XPoly {
        match self {
            PolyFamily::Hermite => hermite(n),
            PolyFamily::LaguerreRadial => laguerre_radial(n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

fn rational_xpoly(coeffs: Vec<Rational>) -> XPoly {
    XPoly::new(coeffs.into_iter().map(gconst).collect())
}

/// Hᵢ(x) from the explicit finite sum
/// `n! Σ_k (-1)^k (2x)^{n-2k} / (k! (n-2k)!)`.
pub fn hermite(n: usize) -> XPoly {
    let mut coeffs = vec![int(0); n + 1];
    let nf = factorial(n);
    for k in 0..=n / 2 {
        let p = n - 2 * k;
        let denom = factorial(k) * factorial(p);
        coeffs[p] = sign(k) * pow2(p) * Rational::new(nf.clone(), denom);
    }
    rational_xpoly(coeffs)
}

/// Hᵢ(x) from `H_{n+1} = 2x H_n - 2n H_{n-1}`.
pub fn hermite_by_recurrence(n: usize) -> XPoly {
    let two_x = XPoly::monomial(gconst(int(2)), 1);
    let mut prev = XPoly::zero();
    let mut cur = XPoly::one();
    for k in 0..n {
        let next = &(&two_x * &cur) - &prev.scale_rational(&int(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Closed-form coefficient of x^{2k} in H_{2n} (even) or x^{2k+1} in H_{2n+1} (odd).
pub fn hermite_coeff(n: usize, k: usize, parity: Parity) -> Result<Rational> {
    if k > n {
        return Err(Error::Index(format!("hermite_coeff: k = {k} > n = {n}")));
    }
    let (top, low) = match parity {
        Parity::Even => (2 * n, 2 * k),
        Parity::Odd => (2 * n + 1, 2 * k + 1),
    };
    Ok(sign(n - k) * pow2(low) * Rational::new(factorial(top), factorial(low) * factorial(n - k)))
}

/// Hᵢ(x) assembled from the closed-form parity coefficients.
pub fn hermite_from_coeffs(n: usize) -> XPoly {
    let (half, parity, offset) = if n.is_multiple_of(2) {
        (n / 2, Parity::Even, 0)
    } else {
        (n / 2, Parity::Odd, 1)
    };
    let mut coeffs = vec![int(0); n + 1];
    for k in 0..=half {
        coeffs[2 * k + offset] = hermite_coeff(half, k, parity).expect("k <= half");
    }
    rational_xpoly(coeffs)
}

/// L_n^{(α)}(η) = (1/n!) Σ_k ((-n)_k / k!) (α+k+1)_{n-k} η^k.
pub fn laguerre(n: usize, alpha: &GScalar) -> EtaPoly {
    let neg_n = Rational::from_integer(BigInt::from(-(n as i64)));
    let inv_nf = rat(1, 1) / factorial_q(n);
    let coeffs = (0..=n)
        .map(|k| {
            let scalar = rational_pochhammer(&neg_n, k) / factorial_q(k) * &inv_nf;
            let start = alpha + &gconst(int(k as i64 + 1));
            gscalar_pochhammer(&start, n - k).scale_rational(&scalar)
        })
        .collect();
    EtaPoly(XPoly::new(coeffs))
}

/// L_n^{(g-½)}(x²).
pub fn laguerre_radial(n: usize) -> XPoly {
    xpoly_substitute_eta_to_x2(&laguerre(n, &g_plus(rat(-1, 2))))
}
