//! Exact computation of derivation, cocycle and biderivation spaces of
//! finite-dimensional Lie algebras over the rationals.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`]: dense rational matrices, reduced echelon form, nullspaces.
//! - [`algebra`]: Lie algebras given by structure constants, representations,
//!   Killing form, radical, semisimple/solvable splittings.
//! - [`cohomology`]: derivation spaces, cocycles/coboundaries in degree one,
//!   explicit primitives over semisimple algebras.
//! - [`bider`]: spaces of (symmetric) biderivations with module values, plus
//!   pointwise checkers and an independent naive oracle.
//! - [`constructions`]: stock algebras and modules, semidirect products, the
//!   module-extension construction, radical reductions, recipe products, and
//!   the named fixture catalog.
//! - [`fgdelta`]: the three-block normal form of radical-valued symmetric
//!   biderivations on a split algebra, with condition checking.
//! - [`io`]: exact JSON file formats for all of the above.
//!
//! Every computation is deterministic: pivoting is positional, bases are
//! reduced echelon forms, and serialization has a fixed field order.

pub mod algebra;
pub mod bider;
pub mod cohomology;
pub mod constructions;
pub mod error;
pub mod fgdelta;
pub mod io;
pub mod linalg;

pub use algebra::{LieAlgebra, Representation, SplitAlgebra};
pub use bider::{BilinearMap, SpaceReport};
pub use cohomology::{LinearMapToModule, SplitDerivation};
pub use constructions::{ExtensionResult, Fixture};
pub use error::{CoreError, Result};
pub use fgdelta::FgDelta;
pub use linalg::{Matrix, Rational, Subspace};
