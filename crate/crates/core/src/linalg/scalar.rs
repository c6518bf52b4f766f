//! Exact scalars: arbitrary-precision rationals and prime fields F_p.
//!
//! Every value is kept in canonical form at all times: rationals in lowest
//! terms with positive denominator (guaranteed by `num-rational`), prime
//! field elements as residues in `[0, p)`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The base field of a computation: the rationals, or F_p for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Q(BigRational::zero()),
            FieldSpec::Prime { p } => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Q(BigRational::one()),
            FieldSpec::Prime { p } => Scalar::Fp { v: 1, p: *p },
        }
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Q(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime { p } => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { v: r, p: *p }
            }
        }
    }

    /// Parse the scalar text syntax: rationals as "a/b" or "a", prime field
    /// elements as decimal residues.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a, b),
                    None => (s, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad rational {s:?}")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad rational {s:?}")))?;
                if den.is_zero() {
                    return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Q(BigRational::new(num, den)))
            }
            FieldSpec::Prime { .. } => {
                let n: i64 = s
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad residue {s:?}")))?;
                Ok(self.from_integer(n))
            }
        }
    }

    /// Uniform random nonzero-biased scalar; over Q a small integer.
    pub fn random_scalar<R: Rng>(&self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::Rational => self.from_integer(rng.gen_range(-9i64..=9)),
            FieldSpec::Prime { p } => Scalar::Fp {
                v: rng.gen_range(0..*p),
                p: *p,
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element. Prime-field values carry their modulus so that
/// scalars are self-contained; mixing moduli is a programming error and
/// panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // extended Euclid; a != 0 mod p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "attempted to invert a noninvertible residue");
    t.rem_euclid(p as i128) as u64
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rational,
            Scalar::Fp { p, .. } => FieldSpec::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: (a + b) % p,
                p: *p,
            },
            _ => panic!("scalar field mismatch in add"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: fp_mul(*a, *b, *p),
                p: *p,
            },
            _ => panic!("scalar field mismatch in mul"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v: 0, p } => Scalar::Fp { v: 0, p: *p },
            Scalar::Fp { v, p } => Scalar::Fp { v: p - v, p: *p },
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => {
                assert!(!a.is_zero(), "attempted to invert zero");
                Scalar::Q(a.recip())
            }
            Scalar::Fp { v, p } => {
                assert!(*v != 0, "attempted to invert zero");
                Scalar::Fp {
                    v: fp_inv(*v, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else if q.denom().is_negative() {
                    // num-rational keeps denominators positive; defensive only
                    write!(f, "{}/{}", -q.numer(), -q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing_and_canonical_form() {
        let f = FieldSpec::Rational;
        let half = f.parse_scalar("2/4").unwrap();
        assert_eq!(half.to_string(), "1/2");
        let neg = f.parse_scalar("3/-6").unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        assert_eq!(f.parse_scalar("7").unwrap().to_string(), "7");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(101).unwrap();
        let a = f.from_integer(-1);
        assert_eq!(a.to_string(), "100");
        let inv = f.from_integer(2).inv();
        assert_eq!(inv.mul(&f.from_integer(2)), f.one());
        assert!(FieldSpec::prime(100).is_err());
    }

    #[test]
    fn inverse_round_trip_over_q() {
        let f = FieldSpec::Rational;
        let x = f.parse_scalar("-7/3").unwrap();
        assert_eq!(x.mul(&x.inv()), f.one());
    }
}
