//! Toric ideals of monomial projections of Veronese varieties.
//!
//! The crate computes the degrees of minimal binomial generators of toric
//! ideals `I_Omega` through fiber connectivity, decides quadratic generation
//! for projections arising from invariants of finite diagonal abelian
//! groups, and searches for term orders giving quadratic Groebner bases.

pub mod binomial;
pub mod citation;
mod error;
pub mod families;
pub mod fibers;
pub mod groebner;
pub mod group;
pub mod hilbert;
pub mod monomial;
pub mod scenario;
pub mod surface;
pub mod survey;

pub use binomial::{rho, Binomial};
pub use citation::Citation;
pub use error::{Error, Result};
pub use families::{
    koszul_label, quadratic_label, FamilySpec, Property, TheoremVerdict, VerdictStatus,
};
pub use fibers::{
    factorizations, fiber_components, fibers, generator_table, ik_sequence_witness, is_quadratic,
    minimal_generator_table, BoundSource, Factorization, Fiber, GeneratorTable, IkSequence,
    Quadraticity, TableOptions,
};
pub use groebner::buchberger::{
    buchberger, quadratic_gb, Buchberger, BuchbergerOptions, GroebnerBasis, OrientedBinomial,
    RunStatus,
};
pub use groebner::certificate::{
    veronese_subalgebra_certificate, CertificateCase, GQuadraticCertificate,
};
pub use groebner::lift::{lift_omega, lift_order, psi};
pub use groebner::order::{OrderKind, OrderSpec, TermOrder};
pub use groebner::rc::{rc_table, rc_term_order, RcEntry, RcOrder};
pub use groebner::search::{search_quadratic_order, SearchOptions, SearchOutcome, SearchReport};
pub use groebner::toric_generators;
pub use group::{h_vector_group, CyclicFactor, DiagonalGroup, GroupHVector, Validation};
pub use hilbert::{
    h_polynomial, hilbert_function, is_2_normal, is_2_normality_witness, TwoNormality,
};
pub use monomial::{
    binomial, enumerate_degree, enumerate_support_bounded, multiset_count, Monomial, MonomialSet,
    SetOrigin,
};
pub use scenario::{run_scenario, scenario_names, Overall, ScenarioReport, ScenarioStep};
pub use surface::{
    koszul_verdict_surface, surface_lambda_decomposition, surface_normal_form,
    surface_quadraticity, KoszulSurfaceVerdict, SurfaceCriterionReport, SurfaceNormalForm,
    SurfaceRule, SurfaceVerdict,
};
pub use survey::{
    conjecture1_check, conjecture2_check, csv_digest, survey_groups, Conjecture1Outcome, GqSearch,
    SurveyOptions, SurveyRow,
};
