//! Discrete polymatroids given by explicit base sets or by pruned lattice
//! path (PLP) inequality systems, together with their polymatroidal ideals.
//!
//! The crate has two layers. The combinatorial layer ([`exchange`],
//! [`rank`], [`sorting`], [`plp`]) works with base sets and specs. The
//! algebraic layer ([`ideal`], [`formulas`], [`gorenstein`]) evaluates
//! closed-form invariants of PLP ideals and the brute-force oracles used to
//! check them.

pub mod corpus;
pub mod error;
pub mod exchange;
pub mod format;
pub mod formulas;
pub mod gorenstein;
pub mod ideal;
pub mod plp;
pub mod rank;
pub mod sorting;
pub mod vector;

pub use error::{Error, Result};
pub use exchange::{check_exchange, is_base_set, Counterexample, ExchangeKind};
pub use ideal::{MonomialIdeal, PrimaryComponent};
pub use plp::{classify, Family, LatticePath, PlpSpec, TransversalPresentation};
pub use rank::{closed_inseparable_subsets, rank_function, RankFunction};
pub use sorting::{
    exchange_fiber_connected, is_sortable, sign_sequence, sort_pair, sorted_count_equals_sumset,
    SignSequence,
};
pub use vector::{k_fold_sumset, polymatroidal_sum, BaseSet, ExponentVector, Subset};
