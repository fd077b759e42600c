//! Small helpers on coordinate slices.

use crate::field::PrimeField;

pub fn zeros<F: PrimeField>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

pub fn unit<F: PrimeField>(n: usize, i: usize) -> Vec<F> {
    let mut v = zeros(n);
    v[i] = F::one();
    v
}

pub fn is_zero<F: PrimeField>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `acc += c * v`
#[inline]
pub fn axpy<F: PrimeField>(acc: &mut [F], c: F, v: &[F]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        *a += c * x;
    }
}

pub fn add<F: PrimeField>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub fn sub<F: PrimeField>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

pub fn scale<F: PrimeField>(c: F, v: &[F]) -> Vec<F> {
    v.iter().map(|&x| c * x).collect()
}

/// Coordinates `digits` of `index` in base p, least significant first.
pub fn from_index<F: PrimeField>(mut index: u64, len: usize) -> Vec<F> {
    let p = F::P as u64;
    (0..len)
        .map(|_| {
            let d = index % p;
            index /= p;
            F::from_u64(d)
        })
        .collect()
}

/// `p^len`, or `None` on overflow.
pub fn count<F: PrimeField>(len: usize) -> Option<u64> {
    (F::P as u64).checked_pow(len as u32)
}
