//! A common interface over `L` and `L̂` so presentations can be evaluated in
//! either algebra.

use std::fmt::Display;

use crate::central_extension::{LElem, LHatElem};
use crate::scalar::Scalar;

pub trait LieElement: Clone + PartialEq + Display + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
    fn bracket(&self, other: &Self) -> Self;
}

macro_rules! impl_lie_element {
    ($ty:ty) => {
        impl LieElement for $ty {
            fn zero() -> Self {
                <$ty>::zero()
            }
            fn is_zero(&self) -> bool {
                <$ty>::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn scale(&self, s: &Scalar) -> Self {
                <$ty>::scale(self, s)
            }
            fn bracket(&self, other: &Self) -> Self {
                <$ty>::bracket(self, other)
            }
        }
    };
}

impl_lie_element!(LElem);
impl_lie_element!(LHatElem);
