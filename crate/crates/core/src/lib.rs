//! Epistemic states over finite propositional signatures.
//!
//! The crate models belief sets, ranking functions (OCFs), and total
//! preorders on worlds, all represented semantically through their model
//! sets. On top of that substrate it provides:
//!
//! - [`transform`]: bijections between universes ("model transformations")
//!   and their liftings to worlds, formulas, conditionals, belief sets,
//!   OCFs, and TPOs;
//! - [`change`]: belief change operators (natural/lexicographic revision,
//!   three contraction flavours, expansion, trivial update, Dalal revision);
//! - [`inference`]: inductive inference from conditional belief bases
//!   (p-entailment, system Z, lexicographic inference);
//! - [`splitting`]: syntax splitting detection and discovery, including
//!   splittings that only appear after a model transformation;
//! - [`harness`]: postulate checkers for language independence and for the
//!   relevance postulates (P) and its transformation-aware generalisation.
//!
//! Signatures are capped at 16 atoms so every operation may enumerate the
//! universe exhaustively. All values are immutable after construction and
//! every operation is a pure function, so values can be shared freely
//! between threads.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod bits;
mod error;

pub mod change;
pub mod harness;
pub mod inference;
pub mod logic;
pub mod splitting;
pub mod state;
pub mod transform;

pub use error::{Error, Result};
pub use logic::{BeliefSet, Conditional, ConditionalEval, Formula, Signature, World};
pub use state::{Rank, RankingFunction, TotalPreorder};
pub use transform::{ModelTransformation, Transformable};
