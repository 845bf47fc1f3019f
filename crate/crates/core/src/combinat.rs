//! Exact factorials and binomials with a process-wide memo table.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::Rational;

fn table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

pub fn factorial(n: usize) -> BigInt {
    if let Some(v) = table().read().unwrap().get(n) {
        return v.clone();
    }
    let mut t = table().write().unwrap();
    while t.len() <= n {
        let next = t.last().unwrap() * BigInt::from(t.len());
        t.push(next);
    }
    t[n].clone()
}

/// `n! / (n-k)!`, zero when `k > n`.
pub fn falling(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / factorial(n - k)
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn factorial_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

pub fn binomial_q(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

pub fn pow2(e: usize) -> Rational {
    Rational::from_integer(BigInt::one() << e)
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    Rational::from_integer(BigInt::from(if k.is_multiple_of(2) { 1 } else { -1 }))
}
