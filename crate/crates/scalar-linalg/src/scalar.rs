//! Exact field elements: arbitrary-precision rationals and `F_p` scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The ground field of a computation: `Q` or `F_p` for a prime `p`.
///
/// Every matrix, subspace and category carries exactly one `Field`; mixing
/// scalars from different fields is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    /// The rational numbers, with arbitrary-precision arithmetic.
    Rational,
    /// The prime field `F_p`. The modulus is assumed prime; use
    /// [`Field::prime`] to construct with a primality check.
    Fp(u64),
}

impl Field {
    /// Builds `F_p`, verifying that `p` is prime.
    pub fn prime(p: u64) -> Result<Field, String> {
        if is_prime(p) {
            Ok(Field::Fp(p))
        } else {
            Err(format!("{p} is not prime"))
        }
    }

    /// The characteristic: 0 for `Q`, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Fp(p) => *p,
        }
    }

    /// The zero element of this field.
    pub fn zero(&self) -> Scalar {
        Scalar::zero(*self)
    }

    /// The unit element of this field.
    pub fn one(&self) -> Scalar {
        Scalar::one(*self)
    }

    /// The image of the integer `n` in this field.
    pub fn from_i64(&self, n: i64) -> Scalar {
        Scalar::from_i64(*self, n)
    }

    /// Whether the integer `n` maps to an invertible element (used for the
    /// "`|G|` invertible in `k`" hypotheses).
    pub fn invertible_i64(&self, n: i64) -> bool {
        !self.from_i64(n).is_zero()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
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

/// An exact scalar in a fixed [`Field`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    /// A rational number (always stored in reduced form).
    Rat(BigRational),
    /// A residue `v` in `[0, p)` of the prime field `F_p`.
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rat(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p, v: 0 },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rat(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { p, v: 1 % p },
        }
    }

    pub fn from_i64(field: Field, n: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, v: r }
            }
        }
    }

    /// A rational `num/den` (panics if `den == 0` or the field is finite).
    pub fn rational(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { p, v } => *v == 1 % *p,
        }
    }

    /// The multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: mod_inv(*v, *p),
            },
        })
    }

    /// Exact division; panics on division by zero (a logic error upstream).
    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }

    fn check_same_field(&self, other: &Scalar) {
        assert!(
            self.field() == other.field(),
            "mixed-field scalar arithmetic: {} vs {}",
            self.field(),
            other.field()
        );
    }
}

/// Inverse of `v` mod prime `p` via the extended Euclidean algorithm.
fn mod_inv(v: u64, p: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, v as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{v} is not invertible mod {p}");
    t.rem_euclid(p as i128) as u64
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", r.numer().magnitude(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}
