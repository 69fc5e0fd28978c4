//! The small interface every target category implements.

use std::fmt;
use std::hash::Hash;
use thiserror::Error;

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("shape mismatch: codomain {cod} against domain {dom}")]
pub struct ShapeMismatch {
    pub cod: usize,
    pub dom: usize,
}

/// Morphisms of a strict tensor category with objects in ℕ.
///
/// `then` is diagrammatic composition (`a.then(b)` is `a` followed by `b`).
pub trait Morphism: Clone + Eq + Hash + fmt::Debug + fmt::Display {
    fn dom(&self) -> usize;
    fn cod(&self) -> usize;
    fn identity(n: usize) -> Self;
    fn beside(&self, other: &Self) -> Self;

    /// Composition together with the number of components that closed off
    /// in the middle. Zero for anything without loops.
    fn then_counted(&self, next: &Self) -> Result<(Self, usize), ShapeMismatch>;

    fn then(&self, next: &Self) -> Result<Self, ShapeMismatch> {
        self.then_counted(next).map(|(r, _)| r)
    }
}

/// Categories with an involution swapping domain and codomain.
pub trait Involutive: Morphism {
    fn star(&self) -> Self;
}

pub(crate) fn check_shape(cod: usize, dom: usize) -> Result<(), ShapeMismatch> {
    if cod == dom {
        Ok(())
    } else {
        Err(ShapeMismatch { cod, dom })
    }
}
