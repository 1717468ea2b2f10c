//! Scalar and field traits used by the linear algebra and by linear
//! combinations of generators.
//!
//! Everything downstream is written against [`Scalar`] / [`Field`], so the
//! same elimination code runs over exact rationals and over prime fields.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A commutative ring element with the operations the complexes need.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;
}

/// A [`Scalar`] in which every non-zero element is invertible.
pub trait Field: Scalar + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for BigRational {}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

/// Integers usable by fraction-free elimination.
pub trait EuclideanScalar: Scalar + Integer + Signed {
    fn bit_length(&self) -> u64;
}

impl EuclideanScalar for BigInt {
    fn bit_length(&self) -> u64 {
        self.bits()
    }
}

impl EuclideanScalar for i64 {
    fn bit_length(&self) -> u64 {
        64 - self.unsigned_abs().leading_zeros() as u64
    }
}

impl EuclideanScalar for i128 {
    fn bit_length(&self) -> u64 {
        128 - self.unsigned_abs().leading_zeros() as u64
    }
}

/// Element of the prime field `Z/P`. `P` must be a prime below `2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Reduction of an integer.
    pub fn from_bigint(v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(P));
        Fp(r.to_u64().expect("residue fits in u64"))
    }

    /// Reduction of a rational; `None` when `P` divides the denominator.
    pub fn from_rational(q: &BigRational) -> Option<Self> {
        let den = Self::from_bigint(q.denom());
        if den.is_zero() {
            return None;
        }
        Some(Self::from_bigint(q.numer()) / den)
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero in Z/{P}");
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
}

impl<const P: u64> Field for Fp<P> {}
