//! Exact computation of minimal graded free resolutions over polynomial
//! rings and of the characters of finite group actions on their Betti
//! spaces.

pub mod budget;
pub mod character;
pub mod equivariant;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod problem;
pub mod render;
pub mod resolution;
pub mod ring;
pub mod unipoly;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{LinearSubstitution, Polynomial};
pub use ring::{Ring, RingContext};
