//! The quantum matrix algebra `M_q(n)` and its quotient `O_q(SL_n)`.

mod algebra;
mod element;
mod expmat;
mod exterior;
mod frobenius;
mod hopf;
mod rewrite;
mod theorem;

pub use algebra::{subsets, QAlgebra};
pub use element::QElement;
pub use expmat::{ExpMatrix, GrLex, MAX_RANK};
pub use exterior::{coaction, coaction_violations, exterior_trace, exterior_trace_report, ExtElement, ExteriorConvention};
pub use frobenius::{check_eta_qmatrix, eta_qmatrix_report, frobenius_m, RelationCheck, RelationKind};
pub use hopf::{
    antipode_axiom_report, antipode_failures, antipode_gen, hopf_counit, hopf_delta, TensorElement,
};
pub use rewrite::straighten_random_order;
pub use theorem::{
    check_main_theorem_preconditions, dk_monomial_rank, frobenius_minor_failures,
    main_theorem_report, verify_main_theorem, MainTheoremOutcome,
};
