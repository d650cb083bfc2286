//! Belief change operators.
//!
//! The preorder operators rearrange layers and look at nothing but each
//! world's layer position and whether it models the input formula; the
//! belief set operators look only at membership in the two model sets.
//! Dalal revision is the exception: it counts differently valued atoms,
//! which makes it sensitive to the encoding of worlds.

use alloc::vec::Vec;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::logic::{BeliefSet, Formula};
use crate::state::TotalPreorder;

/// Revision flavours for total preorders.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RevisionMode {
    /// Only the best input models move: they become the sole layer 0.
    Natural,
    /// Every input model moves below every non-model, blocks keep their
    /// internal order.
    Lexicographic,
}

/// Contraction flavours for total preorders.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContractionMode {
    /// Layer 0 grows by the best counter-models.
    Natural,
    /// Layer 0 as in natural, then all remaining counter-models, then all
    /// remaining models.
    Moderate,
    /// The i-th layer is the union of the i-th model block and the i-th
    /// counter-model block.
    Lexicographic,
}

/// Revises a preorder so that the result accepts `(a | top)`.
///
/// Fails on an unsatisfiable input: a degenerate revision should be visible,
/// not absorbed.
pub fn revise(t: &TotalPreorder, a: &Formula, mode: RevisionMode) -> Result<TotalPreorder> {
    if t.signature() != a.signature() {
        return Err(Error::SignatureMismatch);
    }
    if !a.is_satisfiable() {
        return Err(Error::UnsatisfiableInput);
    }
    let models = a.bits();
    let layers = match mode {
        RevisionMode::Natural => {
            let best = min_set(t, models);
            let mut layers = Vec::with_capacity(t.layer_count() + 1);
            layers.push(best.clone());
            push_nonempty(&mut layers, t.layer_bits().iter().map(|l| l.minus(&best)));
            layers
        }
        RevisionMode::Lexicographic => {
            let mut layers = Vec::new();
            push_nonempty(&mut layers, t.layer_bits().iter().map(|l| l.and(models)));
            push_nonempty(&mut layers, t.layer_bits().iter().map(|l| l.minus(models)));
            layers
        }
    };
    TotalPreorder::from_layer_bits(t.signature(), layers)
}

/// Contracts a preorder so that `a` is no longer accepted: some
/// counter-model of `a` ends up in layer 0.
///
/// Fails on a tautology, which has no counter-models to promote.
pub fn contract(t: &TotalPreorder, a: &Formula, mode: ContractionMode) -> Result<TotalPreorder> {
    if t.signature() != a.signature() {
        return Err(Error::SignatureMismatch);
    }
    if a.is_tautology() {
        return Err(Error::TautologicalInput);
    }
    let counter = a.bits().not();
    let layers = match mode {
        ContractionMode::Natural => {
            let zero = t.layer_bits()[0].or(&min_set(t, &counter));
            let mut layers = Vec::with_capacity(t.layer_count());
            layers.push(zero.clone());
            push_nonempty(&mut layers, t.layer_bits().iter().map(|l| l.minus(&zero)));
            layers
        }
        ContractionMode::Moderate => {
            let zero = t.layer_bits()[0].or(&min_set(t, &counter));
            let mut layers = Vec::new();
            layers.push(zero.clone());
            push_nonempty(
                &mut layers,
                t.layer_bits().iter().map(|l| l.and(&counter).minus(&zero)),
            );
            push_nonempty(
                &mut layers,
                t.layer_bits().iter().map(|l| l.minus(&counter).minus(&zero)),
            );
            layers
        }
        ContractionMode::Lexicographic => {
            let a_blocks: Vec<Bits> = nonempty(t.layer_bits().iter().map(|l| l.minus(&counter)));
            let na_blocks: Vec<Bits> = nonempty(t.layer_bits().iter().map(|l| l.and(&counter)));
            let mut layers = Vec::with_capacity(a_blocks.len().max(na_blocks.len()));
            for i in 0..a_blocks.len().max(na_blocks.len()) {
                let layer = match (a_blocks.get(i), na_blocks.get(i)) {
                    (Some(a), Some(n)) => a.or(n),
                    (Some(a), None) => a.clone(),
                    (None, Some(n)) => n.clone(),
                    (None, None) => unreachable!(),
                };
                layers.push(layer);
            }
            layers
        }
    };
    TotalPreorder::from_layer_bits(t.signature(), layers)
}

/// The worlds of `set` in the lowest layer of `t` that meets `set`.
fn min_set(t: &TotalPreorder, set: &Bits) -> Bits {
    for layer in t.layer_bits() {
        let hit = layer.and(set);
        if !hit.is_empty() {
            return hit;
        }
    }
    Bits::empty(set.len())
}

fn push_nonempty(out: &mut Vec<Bits>, iter: impl Iterator<Item = Bits>) {
    out.extend(iter.filter(|l| !l.is_empty()));
}

fn nonempty(iter: impl Iterator<Item = Bits>) -> Vec<Bits> {
    iter.filter(|l| !l.is_empty()).collect()
}

/// Expansion `K + A`: the closure of `K ∪ {A}`, i.e. the intersection of
/// the model sets. The result may be inconsistent.
pub fn expand(k: &BeliefSet, a: &Formula) -> Result<BeliefSet> {
    if k.signature() != a.signature() {
        return Err(Error::SignatureMismatch);
    }
    Ok(BeliefSet::from_bits(k.signature(), k.bits().and(a.bits())))
}

/// Trivial update: expansion when consistent with `K`, otherwise `Cn(A)`.
pub fn trivial_update(k: &BeliefSet, a: &Formula) -> Result<BeliefSet> {
    if k.signature() != a.signature() {
        return Err(Error::SignatureMismatch);
    }
    if !a.is_satisfiable() {
        return Err(Error::UnsatisfiableInput);
    }
    let both = k.bits().and(a.bits());
    let models = if both.is_empty() {
        a.bits().clone()
    } else {
        both
    };
    Ok(BeliefSet::from_bits(k.signature(), models))
}

/// Dalal revision: the models of `A` at minimal Hamming distance from the
/// models of `K`, where the distance between two worlds is the number of
/// differently valued atoms.
pub fn dalal_revise(k: &BeliefSet, a: &Formula) -> Result<BeliefSet> {
    if k.signature() != a.signature() {
        return Err(Error::SignatureMismatch);
    }
    if !k.is_consistent() {
        return Err(Error::InconsistentBeliefSet);
    }
    if !a.is_satisfiable() {
        return Err(Error::UnsatisfiableInput);
    }
    let mut best = u32::MAX;
    let mut models = Bits::empty(k.bits().len());
    for wa in a.bits().iter() {
        let mut dist = u32::MAX;
        for wk in k.bits().iter() {
            dist = dist.min((wa ^ wk).count_ones());
        }
        if dist < best {
            best = dist;
            models = Bits::empty(k.bits().len());
        }
        if dist == best {
            models.insert(wa);
        }
    }
    Ok(BeliefSet::from_bits(k.signature(), models))
}
