//! Scalar abstraction over `f64` and a multiplication-counting wrapper.
//!
//! The solver kernels are generic over [`Scalar`] so that the same code path
//! can run either on plain `f64` or on [`Counted`], which bumps a thread-local
//! counter on every multiplication and division.

use std::cell::Cell;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Scalar:
    Copy
    + PartialOrd
    + PartialEq
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn abs(self) -> Self {
        if self < Self::zero() {
            -self
        } else {
            self
        }
    }
}

impl Scalar for f64 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
}

thread_local! {
    static MULT_COUNT: Cell<u64> = const { Cell::new(0) };
}

#[inline]
fn bump() {
    MULT_COUNT.with(|c| c.set(c.get() + 1));
}

/// Runs `f` with the multiplication counter reset, returning its result and
/// the number of [`Counted`] multiplications/divisions it performed.
///
/// The counter is thread-local, so concurrent solves on different threads do
/// not interfere.
pub fn with_mult_count<R>(f: impl FnOnce() -> R) -> (R, u64) {
    MULT_COUNT.with(|c| c.set(0));
    let out = f();
    let n = MULT_COUNT.with(|c| c.get());
    (out, n)
}

/// An `f64` that counts every multiplication and division it takes part in.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Counted(pub f64);

impl Add for Counted {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Counted(self.0 + rhs.0)
    }
}

impl Sub for Counted {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Counted(self.0 - rhs.0)
    }
}

impl Mul for Counted {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        bump();
        Counted(self.0 * rhs.0)
    }
}

impl Div for Counted {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        bump();
        Counted(self.0 / rhs.0)
    }
}

impl Neg for Counted {
    type Output = Self;
    fn neg(self) -> Self {
        Counted(-self.0)
    }
}

impl Scalar for Counted {
    #[inline]
    fn from_f64(x: f64) -> Self {
        Counted(x)
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self.0
    }
}
