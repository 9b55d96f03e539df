//! Reproduction of proof certificates: coefficient elimination for
//! palindromic factors, sign certificates over the count polyhedron,
//! root-location sign tables and residue tables modulo 3.

mod elim;
mod mpoly;
mod residue;
mod sign;
mod tables;

pub use elim::{residual_system, residual_system_for, ElimSystem, ElimSystemRepr, UNKNOWN_NAMES};
pub use mpoly::{parse_mpoly, MPoly};
pub use residue::{
    compare_residue_table, no_small_palindromic_factor, residue_tables, ExclusionVerdict, FactorExclusion, ResidueRow,
    ResidueTable, Specialization, Verdict, RESIDUE_ROWS,
};
pub use sign::{sign_certificate, sign_on_nonnegative, Parity, RegionEvidence, SignCertificate};
pub use tables::{
    kempner_quarter, quadratic_residual, verify_root_location_tables, RootTableReport, SignRow, SignTable, TablePoint,
};

#[cfg(test)]
mod tests;
