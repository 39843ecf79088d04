//! Finite-truncation checks of the structure of `Pol(ℝ²ⁿ) ⊗ 𝒮` under the
//! symplectic Dirac and twistor operators.
//!
//! Kernel statements are exact on every sector: the codomain sector always
//! contains the full image, so a truncated kernel is the true kernel cut
//! down to the sector. Statements that a sum fills a space need a q-degree
//! margin, recorded per check.

mod identities;
mod report;
mod spaces;
mod suite;
mod verify;

pub use identities::{
    random_spinor, sl2_failures, verify_clifford, verify_intertwining, verify_sl2, verify_twistor_factorization,
    CLIFFORD_SAMPLES,
};
pub use report::{sort_reports, VerificationReport, MAX_WITNESSES};
pub use spaces::{
    basis, dirac_squared_kernel, monogenics, raise, raised_monogenics, twistor_kernel, twistor_monogenics,
};
pub use suite::{run_suite, run_suites, JobParams, Suite, CLIFFORD_SEED};
pub use verify::{
    example_raised, verify_composition_series, verify_constant_lemma, verify_example, verify_prolongation,
    verify_theorem, verify_tower_lemma, verify_triangle, EXAMPLE_SPINOR, EXAMPLE_TWISTOR,
};
