//! Finite connectivity systems `(X, f)` with symmetric submodular `f`.
//!
//! - [`system`]: dense-table systems, graph cut and boundary functions, and
//!   exhaustive validation of symmetry and submodularity.
//! - [`families`]: set families and the single-ideal (IB, IH, SIS, IW, IE)
//!   and linear-obstacle (O1, O2, O3) axioms, with witnesses.
//! - [`search`]: k-efficient sets, family enumeration, exact linear-width
//!   (subset DP plus an `n!` oracle) and the single-ideal search.
//! - [`verify`]: harnesses that cross-check the above and emit JSON reports.
//!
//! Subsets are `u32` bitmasks, bit `i` standing for element `i`.

pub mod corpus;
pub mod error;
pub mod families;
pub mod guards;
pub mod instance;
pub mod report;
pub mod search;
pub mod subset;
pub mod system;
pub mod verify;

pub use error::{Error, Result};
pub use families::{
    check_ib, check_ie, check_ih, check_iw, check_o1, check_o2, check_o3, check_sis, is_linear_obstacle,
    is_single_ideal, FamilyFile, IhVariant, ReportMode, SetFamily, Verdict,
};
pub use guards::Guards;
pub use instance::InstanceFile;
pub use report::{AxiomId, AxiomReport};
pub use search::{
    efficient_sets, enumerate_families, find_single_ideal_with_ie, linear_width, linear_width_bruteforce, Ordering,
    WidthResult,
};
pub use subset::{ElementId, Subset};
pub use system::{
    make_explicit, make_graph_boundary, make_graph_cut, validate_symmetric_submodular, ConnectivitySystem, Graph,
    Provenance,
};
pub use verify::{
    check_lemma1, duality_check, precondition_singletons, theorem1_crosscheck, Outcome, VerificationReport,
};
