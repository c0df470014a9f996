//! Ground rings and the field arithmetic used by elimination.

use alloc::format;
use alloc::string::ToString;
use core::fmt;

use super::rational::{inv_mod, mul_mod, Rational};
use crate::{Error, Result};

/// The ground ring of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarDomain {
    Rationals,
    /// Integers modulo a prime, checked at construction.
    PrimeField(u64),
    Integers,
}

impl ScalarDomain {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        // products of residues must fit comfortably in u128 and the
        // residues themselves in i64 for conversion back to Rational
        if p > (1 << 62) {
            return Err(Error::InvalidInput(format!("prime {p} is too large")));
        }
        Ok(ScalarDomain::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, ScalarDomain::Integers)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            ScalarDomain::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Bring a scalar into canonical form for this domain.
    pub fn reduce(&self, x: &Rational) -> Result<Rational> {
        match self {
            ScalarDomain::Rationals => Ok(x.clone()),
            ScalarDomain::PrimeField(p) => x
                .residue(*p)
                .map(|r| Rational::from_int(r as i64))
                .ok_or_else(|| Error::NotRepresentable(x.to_string(), self.to_string())),
            ScalarDomain::Integers => {
                if x.is_integer() {
                    Ok(x.clone())
                } else {
                    Err(Error::NotRepresentable(x.to_string(), self.to_string()))
                }
            }
        }
    }

    pub fn is_zero(&self, x: &Rational) -> bool {
        match self {
            ScalarDomain::PrimeField(p) => x.residue(*p) == Some(0),
            _ => x.is_zero(),
        }
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::Rationals => write!(f, "q"),
            ScalarDomain::PrimeField(p) => write!(f, "zp:{p}"),
            ScalarDomain::Integers => write!(f, "z"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Field arithmetic with an explicit context, so `F_p` can carry its modulus.
pub(crate) trait Field {
    type E: Clone + PartialEq + fmt::Debug;

    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn lift(&self, x: &Rational) -> Result<Self::E>;
    fn lower(&self, a: &Self::E) -> Rational;
}

#[derive(Clone, Copy)]
pub(crate) struct QField;

impl Field for QField {
    type E = Rational;

    fn one(&self) -> Rational {
        Rational::ONE
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Rational {
        a.recip()
    }
    fn lift(&self, x: &Rational) -> Result<Rational> {
        Ok(x.clone())
    }
    fn lower(&self, a: &Rational) -> Rational {
        a.clone()
    }
}

#[derive(Clone, Copy)]
pub(crate) struct FpField(pub u64);

impl Field for FpField {
    type E = u64;

    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.0)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        inv_mod(*a, self.0)
    }
    fn lift(&self, x: &Rational) -> Result<u64> {
        x.residue(self.0).ok_or_else(|| {
            Error::NotRepresentable(x.to_string(), ScalarDomain::PrimeField(self.0).to_string())
        })
    }
    fn lower(&self, a: &u64) -> Rational {
        Rational::from_int(*a as i64)
    }
}

/// Run `$body` with `$f` bound to the field matching `$dom`.
macro_rules! with_field {
    ($dom:expr, $f:ident => $body:expr) => {
        match $dom {
            $crate::linalg::ScalarDomain::Rationals => {
                let $f = $crate::linalg::field::QField;
                $body
            }
            $crate::linalg::ScalarDomain::PrimeField(p) => {
                let $f = $crate::linalg::field::FpField(p);
                $body
            }
            $crate::linalg::ScalarDomain::Integers => Err($crate::Error::DomainNotField),
        }
    };
}
pub(crate) use with_field;
