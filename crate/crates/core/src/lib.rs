pub mod adele;
pub mod bost_connes;
pub mod affine;
pub mod coset;
pub mod error;
pub mod expr;
pub mod oracle;
pub mod ring;
pub mod sample;
pub mod scalar;
pub mod star;

pub use affine::PartialAffineMap;
pub use coset::{Coset, IndicatorCombination};
pub use error::{Error, Result};
pub use ring::{CrtReport, CrtSplit, Factorization, Fraction, Ring, RingElement, RingKind};
pub use scalar::Scalar;
pub use star::{AlgebraElement, ExpectationMode, Generator, Monomial};
pub use expr::parse_expression;
