//! Exact arithmetic for finite-index subgroups of lexicographically ordered
//! integer lattices, the monomial blow-up transforms defined over them, and
//! the numeric invariants of valuation extensions built from both.
//!
//! The crate is split along the objects it computes with:
//!
//! - [`LexVector`] and [`Subgroup`]: points of `Z^n` under the lexicographic
//!   order (coordinate 0 most significant) and finite-index subgroups in
//!   column Hermite normal form, with the group index, initial index,
//!   smallest positive elements, semigroup coset covers, quotient invariant
//!   factors and nested-chain multiplicativity.
//! - [`Frame`], [`Monomial`] and [`PmtStep`]: regular-parameter frames with
//!   unimodular value matrices, primitive monoidal transforms, and the
//!   divisibility-normalizing transform sequences [`make_divisible`] and
//!   [`reduce_fraction_supports`], plus the rank-2 relation normal forms.
//! - [`ExtensionRecord`], [`statement_profile`] and [`family_check`]: the
//!   classical invariants e, f, d and epsilon of a valuation extension and
//!   the statement diagram they decide.
//! - [`oracle`]: deliberately naive brute-force reference implementations,
//!   kept independent of the fast paths, used as ground truth by the tests
//!   and the `verify` commands of the CLI.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to use concurrently without
//! synchronization.
//!
//! Integer arithmetic is arbitrary precision throughout; there is no
//! floating point anywhere in this crate.

// Index loops over matrix rows and columns stay as loops: most of them read
// one row while writing another, which iterator rewrites only obscure.
#![allow(clippy::needless_range_loop)]

mod divide;
mod extension;
mod family;
pub mod fixtures;
mod frame;
mod lex;
pub mod oracle;
mod relation;
mod snf;
mod subgroup;
pub mod wire;

pub use divide::{
    make_divisible, reduce_fraction_supports, DivisionOutcome, FractionCertificate,
    DEFAULT_PMT_BUDGET,
};
pub use extension::{
    statement_profile, ExtensionError, ExtensionRecord, ExternalAssertions, ProfileWitnesses,
    StatementProfile, Truth, ValueGroupModel,
};
pub use family::{family_check, Arrow, ArrowViolation, FamilyReport};
pub use frame::{BlowupError, DivisionTrace, Frame, Monomial, PmtStep};
pub use lex::{lex_compare, GroupError, LexVector};
pub use relation::{paired_step_rank1, rank2_normalize, NormalizedRelation, Rank1State, Relation2};
pub use subgroup::{epsilon_chain, CosetCover, EpsilonChain, QuotientStructure, Subgroup};
