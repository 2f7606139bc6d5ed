//! Pruned lattice path (PLP) specifications and their presentations.

pub mod classify;
pub mod path;
pub mod represent;
pub mod spec;

pub use classify::{classify, family_label, is_lp, Family};
pub use path::{spec_between_paths, transversal_power, LatticePath, TransversalPresentation};
pub use represent::{candidate_spec, is_lp_representable, is_plp_representable, Representation};
pub use spec::{PlpSpec, DEFAULT_MAX_BASES};
