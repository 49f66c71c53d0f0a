//! Error type shared across the core crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    /// A dimension or shape constraint between inputs was violated.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Structure constants fail antisymmetry or the Jacobi identity.
    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    /// A map that was required to act by derivations does not; `action_index`
    /// is the offending acting basis element, `(i, j)` the bracket pair.
    #[error("action matrix {action_index} is not a derivation: fails on bracket pair ({i}, {j})")]
    NotADerivation { action_index: usize, i: usize, j: usize },

    /// A purported module action fails the bracket-compatibility equation.
    #[error("action is not a homomorphism: fails on basis pair ({i}, {j})")]
    NotAHomomorphism { i: usize, j: usize },

    /// A claimed semisimple/solvable splitting of a basis fails one of its
    /// defining conditions.
    #[error("invalid splitting: {0}")]
    InvalidSplit(String),

    /// A bilinear map that was required to be a biderivation is not; the
    /// witness names the identity slot (0 = second argument, 1 = first) and
    /// the basis triple where the defect appears.
    #[error("map is not a biderivation: slot {slot} fails at basis triple ({x}, {y}, {z})")]
    NotABiderivation { slot: usize, x: usize, y: usize, z: usize },

    /// A construction required values inside the solvable radical part but a
    /// basis pair produced a component outside it.
    #[error("value at basis pair ({i}, {j}) leaves the radical summand")]
    ValueOutsideRadical { i: usize, j: usize },

    /// A cocycle that should be a coboundary (semisimple acting on a
    /// finite-dimensional module) turned out inconsistent; indicates the input
    /// was not actually a cocycle for the given action.
    #[error("no primitive found: the linear system for cocycle {index} is inconsistent")]
    NoPrimitive { index: usize },

    /// Split structure was requested on an algebra without one attached.
    #[error("algebra {0:?} carries no semisimple/radical splitting")]
    MissingSplit(String),

    /// Named fixture lookup failed.
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    /// Input file or inline data failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// Anything requiring a perfect algebra received a non-perfect one.
    #[error("algebra {0:?} is not perfect")]
    NotPerfect(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
