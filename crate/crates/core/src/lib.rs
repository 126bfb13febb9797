//! Explicit (2,3)-generator pairs for the classical groups Sp6(q) (q even), Omega7(q)
//! (q odd) and SU7(q^2), together with the exact linear algebra, form computations and
//! stabilizer-chain machinery used to certify them.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod certify;
pub mod error;
pub mod field;
pub mod forms;
pub mod generators;
pub mod groupcalc;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod snf;
pub mod sweep;
pub mod table;

pub use error::{Error, Result};
pub use field::{Elem, FieldElem, FieldRef, FieldSpec};
pub use generators::{Family, GeneratorPair};
pub use matrix::Matrix;
pub use poly::Poly;
