//! Runtime choice of the prime field.

use crate::algebra::{RestrictedLieAlgebra, ValidationReport};
use crate::{F2, F3, F5, F7};

/// A restricted Lie algebra over one of the supported prime fields.
#[derive(Clone, Debug)]
pub enum AnyAlgebra {
    F2(RestrictedLieAlgebra<F2>),
    F3(RestrictedLieAlgebra<F3>),
    F5(RestrictedLieAlgebra<F5>),
    F7(RestrictedLieAlgebra<F7>),
}

/// Evaluates `$body` with `$g` bound to the concrete algebra inside an
/// [`AnyAlgebra`].
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            $crate::dispatch::AnyAlgebra::F2($g) => $body,
            $crate::dispatch::AnyAlgebra::F3($g) => $body,
            $crate::dispatch::AnyAlgebra::F5($g) => $body,
            $crate::dispatch::AnyAlgebra::F7($g) => $body,
        }
    };
}

impl AnyAlgebra {
    pub fn p(&self) -> u32 {
        match self {
            AnyAlgebra::F2(_) => 2,
            AnyAlgebra::F3(_) => 3,
            AnyAlgebra::F5(_) => 5,
            AnyAlgebra::F7(_) => 7,
        }
    }

    pub fn dim(&self) -> usize {
        with_algebra!(self, g => g.dim())
    }

    pub fn name(&self) -> &str {
        with_algebra!(self, g => g.name())
    }

    pub fn labels(&self) -> &[String] {
        with_algebra!(self, g => g.labels())
    }

    pub fn validate(&self) -> ValidationReport {
        with_algebra!(self, g => g.validate())
    }

    pub fn renamed(self, name: impl Into<String>) -> Self {
        let name = name.into();
        match self {
            AnyAlgebra::F2(g) => AnyAlgebra::F2(g.with_name(name)),
            AnyAlgebra::F3(g) => AnyAlgebra::F3(g.with_name(name)),
            AnyAlgebra::F5(g) => AnyAlgebra::F5(g.with_name(name)),
            AnyAlgebra::F7(g) => AnyAlgebra::F7(g.with_name(name)),
        }
    }
}

macro_rules! from_algebra {
    ($($f:ident),*) => {$(
        impl From<RestrictedLieAlgebra<$f>> for AnyAlgebra {
            fn from(g: RestrictedLieAlgebra<$f>) -> Self {
                AnyAlgebra::$f(g)
            }
        }
    )*};
}

from_algebra!(F2, F3, F5, F7);
