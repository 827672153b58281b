//! Exact enumeration of the combinatorial classes of monic centered
//! polynomial vector fields of degree `d`.
//!
//! A class is encoded by typed non-crossing pairs on the indices
//! `0 ..= 2d - 3`: round pairs are homoclinic separatrices and square pairs
//! are transversals of αω zones. The crate converts between the
//! separatrix and transversal disk models, parses and generates the
//! bracket language, counts classes exactly by degree, dimension and type,
//! evaluates the limiting constants, and counts classes up to rotation.
//!
//! ```
//! use vfcomb::{bracket, counting};
//!
//! let config = bracket::parse("(01)[23]").unwrap();
//! assert_eq!(config.degree(), 3);
//! assert_eq!(counting::c_total(3).unwrap(), 17u32.into());
//! ```

pub mod asymptotics;
pub mod bracket;
pub mod cells;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod model;
pub mod moduli;
pub mod surd;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

pub use bracket::{parse, render, ParseError};
pub use cells::{CellKind, CellReport};
pub use error::{Error, Result};
pub use model::{
    Invariants, Pair, PairKind, PairingConfig, SeparatrixData, TransversalData, ValidationReport,
};
pub use surd::Surd5;
