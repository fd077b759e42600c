use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::field::PrimeField;
use crate::linalg::vector;

/// An element of a restricted Lie algebra, given by its coordinates in the
/// algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element<F> {
    coords: Vec<F>,
}

impl<F: PrimeField> Element<F> {
    pub fn new(coords: Vec<F>) -> Self {
        Element { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Element { coords: vector::zeros(dim) }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        Element { coords: vector::unit(dim, i) }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Element { coords: coords.iter().map(|&c| F::from_i64(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.coords)
    }

    pub fn scale(&self, c: F) -> Self {
        Element { coords: vector::scale(c, &self.coords) }
    }

    pub fn axpy(&mut self, c: F, other: &Self) {
        vector::axpy(&mut self.coords, c, &other.coords);
    }
}

impl<F: PrimeField> From<Vec<F>> for Element<F> {
    fn from(coords: Vec<F>) -> Self {
        Element { coords }
    }
}

impl<F: PrimeField> AsRef<[F]> for Element<F> {
    fn as_ref(&self) -> &[F] {
        &self.coords
    }
}

impl<F: PrimeField> Add for &Element<F> {
    type Output = Element<F>;
    fn add(self, rhs: &Element<F>) -> Element<F> {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element { coords: vector::add(&self.coords, &rhs.coords) }
    }
}

impl<F: PrimeField> Add for Element<F> {
    type Output = Element<F>;
    fn add(self, rhs: Element<F>) -> Element<F> {
        &self + &rhs
    }
}

impl<F: PrimeField> Sub for &Element<F> {
    type Output = Element<F>;
    fn sub(self, rhs: &Element<F>) -> Element<F> {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element { coords: vector::sub(&self.coords, &rhs.coords) }
    }
}

impl<F: PrimeField> Sub for Element<F> {
    type Output = Element<F>;
    fn sub(self, rhs: Element<F>) -> Element<F> {
        &self - &rhs
    }
}

impl<F: PrimeField> Neg for &Element<F> {
    type Output = Element<F>;
    fn neg(self) -> Element<F> {
        Element { coords: self.coords.iter().map(|&c| -c).collect() }
    }
}

impl<F: fmt::Debug> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}
