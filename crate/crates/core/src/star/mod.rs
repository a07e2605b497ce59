//! The dense *-subalgebra spanned by the words `s_m* p_c u^k s_{m'}`.

mod element;
mod expectation;
mod monomial;
mod relations;
mod separate;

pub use element::{AlgebraElement, Generator};
pub use expectation::ExpectationMode;
pub use monomial::{AffineKey, Monomial};
pub use relations::{verify_defining_relations, RelationCheck, RelationsReport};
pub use separate::{choose_separating, compress_phi, pi_witness, SeparatingFamily, Witness};
