//! The explicit minimal free resolution `L_•` of a transversal ideal.
//!
//! `C_q` has basis `ξ ⊗ δ`: `ξ` picks `t + q` variables spread over `s`
//! rows (`r_v ≥ 1` columns in row `v`), and `δ` marks `s − t + 1` of those
//! rows. `L_q` is `C_q` modulo the span `K_q` of alternating marker sums;
//! representatives are the `δ` that contain the last row. The differential
//! drops one column from a row with `r_v ≥ 2` (`Δ_v`), or drops a marked
//! singleton row with its marker (`Λ`), and `L_0 → I_t(D)` sends `ξ` to the
//! product of its variables.

mod certify;
mod complex;
mod dg;
mod label;

pub use certify::{
    certify_complex, certify_resolution, check_d_squared, check_minimality, check_random_points, check_ranks,
    check_strand_exactness, strand_reduction, Certificate, CertifyOptions, CheckKind, CheckResult, DEFAULT_MAX_M,
    EVALUATION_PRIME,
};
pub use complex::{normalize, raw_boundary, BoundaryEntry, FreeComplex, RawTerm, SignConvention, TermOrigin};
pub use dg::{check_dg_axioms, dg_multiply, DgAlgebra, DgElement, DgMonomial};
pub use label::{enumerate_basis, BasisLabel};
