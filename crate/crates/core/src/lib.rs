//! Noncommutative rewriting over Q(j)(q) for Z3-graded algebras: the
//! h-superplane, its differential calculus and the matching supergroup.
//!
//! Every algebra is a [`rewrite::Presentation`]: a generator alphabet with
//! Z3 grades, oriented relations over the coefficient field Q(j)(q) and a
//! weighted lexicographic term order. Identities are checked by reducing
//! both sides to normal form.

pub mod calculus;
pub mod error;
pub mod expr;
pub mod format;
pub mod freealg;
pub mod names;
pub mod presets;
pub mod report;
pub mod rewrite;
pub mod scalar;
pub mod serial;
pub mod supergroup;
pub mod verify;

pub use error::{Error, Result};
pub use freealg::{Alphabet, DImage, GeneratorInfo, GradedHom, Grade, Poly, Sym, Word};
pub use report::{Check, Report};
pub use rewrite::{Presentation, QBinding, Reducer, RewriteRule, TermOrder};
pub use scalar::{CycloRational, Scalar};
