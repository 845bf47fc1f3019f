use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use super::{Coefficient, GScalar};
use crate::error::{Error, Result};

/// `one + sqrt_pi * √π + gamma_g_half * Γ(g+½)` with coefficients in Q[g].
///
/// The transcendental units are never combined numerically here.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MomentValue {
    pub one: GScalar,
    pub sqrt_pi: GScalar,
    pub gamma_g_half: GScalar,
}

impl MomentValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: GScalar) -> Self {
        MomentValue {
            one: c,
            ..Self::default()
        }
    }

    pub fn sqrt_pi(c: GScalar) -> Self {
        MomentValue {
            sqrt_pi: c,
            ..Self::default()
        }
    }

    pub fn gamma_g_half(c: GScalar) -> Self {
        MomentValue {
            gamma_g_half: c,
            ..Self::default()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.one.is_zero() && self.sqrt_pi.is_zero() && self.gamma_g_half.is_zero()
    }

    /// True when only the `one` component is nonzero (or the value is zero).
    pub fn is_scalar(&self) -> bool {
        self.sqrt_pi.is_zero() && self.gamma_g_half.is_zero()
    }

    pub fn scale(&self, c: &GScalar) -> Self {
        MomentValue {
            one: &self.one * c,
            sqrt_pi: &self.sqrt_pi * c,
            gamma_g_half: &self.gamma_g_half * c,
        }
    }

    /// Product, defined only when one factor is a plain Q[g] scalar.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.is_scalar() {
            Ok(other.scale(&self.one))
        } else if other.is_scalar() {
            Ok(self.scale(&other.one))
        } else {
            Err(Error::UnitProduct)
        }
    }
}

impl AddAssign<&MomentValue> for MomentValue {
    fn add_assign(&mut self, rhs: &MomentValue) {
        self.one += &rhs.one;
        self.sqrt_pi += &rhs.sqrt_pi;
        self.gamma_g_half += &rhs.gamma_g_half;
    }
}

impl Add for &MomentValue {
    type Output = MomentValue;
    fn add(self, rhs: &MomentValue) -> MomentValue {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MomentValue {
    type Output = MomentValue;
    fn sub(self, rhs: &MomentValue) -> MomentValue {
        self + &(-rhs)
    }
}

impl Neg for &MomentValue {
    type Output = MomentValue;
    fn neg(self) -> MomentValue {
        MomentValue {
            one: self.one.neg_ref(),
            sqrt_pi: self.sqrt_pi.neg_ref(),
            gamma_g_half: self.gamma_g_half.neg_ref(),
        }
    }
}

impl fmt::Display for MomentValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [
            (&self.one, ""),
            (&self.sqrt_pi, "sqrt(pi)"),
            (&self.gamma_g_half, "Gamma(g+1/2)"),
        ]
        .into_iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, unit)| {
            let terms = c.coeffs().iter().filter(|r| !r.is_zero_elem()).count();
            match (unit.is_empty(), terms > 1) {
                (true, _) => c.to_string(),
                (false, true) => format!("({c})*{unit}"),
                (false, false) if *c == GScalar::one() => unit.to_string(),
                (false, false) => format!("{c}*{unit}"),
            }
        })
        .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
