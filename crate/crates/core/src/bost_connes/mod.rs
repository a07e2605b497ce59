//! The Bost–Connes presentation over `Z`, `Z[i]` and `Z[w]`: projections
//! `f(m, n)` indexed by unit orbits of residues, isometries `s_p`, the
//! representations `π_α` on `ℓ²` of ideal classes, and truncated KMS states.
//!
//! Everything is realized inside the regular algebra of the ring, where
//! `f(m, n) = Σ_{l ∈ n} p_{l+(m)}`.

mod galois;
mod kms;
mod orbits;

pub use galois::{pi_alpha_apply, GaloisParameter};
pub use kms::{kms_residual, kms_value, zeta_partial, KmsConfig, KmsValue, ZetaPartial};
pub use orbits::{bc_f, bc_f_by_rep, bc_relations_check, bc_s, bc_units, orbit_of, unit_orbits, UnitOrbit};
