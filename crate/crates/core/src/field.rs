//! Prime fields F_p for the supported moduli p ∈ {2, 3, 5, 7}.
//!
//! Every algorithm in the crate is generic over [`PrimeField`]; the four
//! concrete fields are exported at the crate root as [`crate::F2`],
//! [`crate::F3`], [`crate::F5`] and [`crate::F7`].

use std::fmt;
use std::hash::Hash;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{Inv, One, Pow, Zero};

/// Moduli the crate is instantiated for.
pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

/// A prime field F_p with a small modulus.
///
/// Frobenius is the identity on F_p, so `x.pow(P) == x` for every element;
/// the p-map of a restricted Lie algebra over such a field is therefore
/// additive *and* scalar-fixing on abelian restricted subalgebras.
pub trait PrimeField:
    Copy
    + Eq
    + Ord
    + Hash
    + Default
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Pow<u32, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Sum
    + Product
{
    /// The characteristic.
    const P: u32;

    fn from_u64(v: u64) -> Self;

    fn from_i64(v: i64) -> Self {
        let p = Self::P as i64;
        Self::from_u64(v.rem_euclid(p) as u64)
    }

    /// Canonical representative in `[0, P)`.
    fn residue(self) -> u32;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(self) -> Option<Self>;

    /// All field elements in residue order `0, 1, ..., P-1`.
    fn elements() -> FieldElements<Self> {
        FieldElements { next: 0, _marker: std::marker::PhantomData }
    }
}

/// Iterator over all elements of a prime field.
#[derive(Clone, Debug)]
pub struct FieldElements<F> {
    next: u32,
    _marker: std::marker::PhantomData<F>,
}

impl<F: PrimeField> Iterator for FieldElements<F> {
    type Item = F;

    fn next(&mut self) -> Option<F> {
        if self.next >= F::P {
            return None;
        }
        let v = F::from_u64(self.next as u64);
        self.next += 1;
        Some(v)
    }
}

/// Whether `p` is one of the moduli the crate supports.
pub fn is_supported_prime(p: u32) -> bool {
    SUPPORTED_PRIMES.contains(&p)
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// An element of F_P stored as its residue.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp<const P: u32>(u8);

impl<const P: u32> Fp<P> {
    const MODULUS_OK: () = assert!(P == 2 || P == 3 || P == 5 || P == 7, "unsupported modulus");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::MODULUS_OK;
        Fp((v % P as u64) as u8)
    }
}

impl<const P: u32> PrimeField for Fp<P> {
    const P: u32 = P;

    #[inline]
    fn from_u64(v: u64) -> Self {
        Self::new(v)
    }

    #[inline]
    fn residue(self) -> u32 {
        self.0 as u32
    }

    fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // x^(p-2) by Fermat
        Some(self.pow(P - 2))
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u32 + rhs.0 as u32;
        Fp(if s >= P { s - P } else { s } as u8)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        let s = self.0 as u32 + P - rhs.0 as u32;
        Fp(if s >= P { s - P } else { s } as u8)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u32 * rhs.0 as u32) % P) as u8)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp((P - self.0 as u32) as u8)
        }
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in F_p")
    }
}

impl<const P: u32> Inv for Fp<P> {
    type Output = Self;
    fn inv(self) -> Self {
        self.inverse().expect("zero has no inverse")
    }
}

impl<const P: u32> Pow<u32> for Fp<P> {
    type Output = Self;
    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    #[inline]
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Sum for Fp<P> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<const P: u32> Product for Fp<P> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3, F5, F7};

    fn field_axioms<F: PrimeField>() {
        for a in F::elements() {
            assert_eq!(a.pow(F::P), a, "Frobenius is the identity");
            if !a.is_zero() {
                assert_eq!(a * a.inverse().unwrap(), F::one());
            }
            for b in F::elements() {
                assert_eq!(a + b, b + a);
                assert_eq!((a - b) + b, a);
                assert_eq!(a * b, b * a);
                for c in F::elements() {
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn axioms_hold_for_all_supported_moduli() {
        field_axioms::<F2>();
        field_axioms::<F3>();
        field_axioms::<F5>();
        field_axioms::<F7>();
    }

    #[test]
    fn negative_integers_reduce() {
        assert_eq!(F5::from_i64(-2).residue(), 3);
        assert_eq!(F7::from_i64(-14).residue(), 0);
        assert_eq!(F3::elements().count(), 3);
    }

    #[test]
    fn primality() {
        assert!(is_prime(7));
        assert!(!is_prime(4));
        assert!(!is_prime(1));
        assert!(is_supported_prime(5));
        assert!(!is_supported_prime(11));
    }
}
