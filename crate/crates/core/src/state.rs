//! Ranking functions (OCFs) and total preorders on worlds.
//!
//! Both model the plausibility structure of an epistemic state: an OCF maps
//! every world to a rank in `N ∪ {∞}` with at least one world at rank 0, a
//! total preorder stores an ordered list of layers (layer 0 = most
//! plausible). A conditional `(B | A)` is accepted when its verification is
//! strictly more plausible than its falsification.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::logic::{project_index, Conditional, Formula, Signature, World};

/// A plausibility rank: a non-negative integer or infinity.
///
/// Ordered with `Infinite` greatest; addition saturates at infinity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Rank {
    Finite(u64),
    Infinite,
}

impl Rank {
    pub const ZERO: Rank = Rank::Finite(0);

    pub fn is_finite(&self) -> bool {
        matches!(self, Rank::Finite(_))
    }
}

impl PartialOrd for Rank {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rank {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        use Rank::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => core::cmp::Ordering::Less,
            (Infinite, Finite(_)) => core::cmp::Ordering::Greater,
            (Infinite, Infinite) => core::cmp::Ordering::Equal,
        }
    }
}

impl core::ops::Add for Rank {
    type Output = Rank;

    fn add(self, rhs: Rank) -> Rank {
        match (self, rhs) {
            (Rank::Finite(a), Rank::Finite(b)) => Rank::Finite(a.saturating_add(b)),
            _ => Rank::Infinite,
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(n) => write!(f, "{n}"),
            Rank::Infinite => f.write_str("inf"),
        }
    }
}

/// An ordinal conditional function: a total map from worlds to ranks with
/// `κ⁻¹(0) ≠ ∅`. Lower rank means more plausible.
#[derive(Clone, PartialEq, Eq)]
pub struct RankingFunction {
    sig: Signature,
    ranks: Vec<Rank>,
}

impl RankingFunction {
    /// `ranks[i]` is the rank of the world with index `i`.
    pub fn new(sig: &Signature, ranks: Vec<Rank>) -> Result<RankingFunction> {
        if ranks.len() as u64 != sig.world_count() {
            return Err(Error::WrongRankCount {
                expected: sig.world_count(),
                got: ranks.len() as u64,
            });
        }
        if !ranks.contains(&Rank::ZERO) {
            return Err(Error::NoRankZeroWorld);
        }
        Ok(RankingFunction {
            sig: sig.clone(),
            ranks,
        })
    }

    pub fn from_fn(sig: &Signature, mut rank: impl FnMut(&World) -> Rank) -> Result<Self> {
        let ranks = sig.worlds().map(|w| rank(&w)).collect();
        RankingFunction::new(sig, ranks)
    }

    /// The uniform ranking `κ ≡ 0`.
    pub fn uniform(sig: &Signature) -> RankingFunction {
        RankingFunction {
            sig: sig.clone(),
            ranks: alloc::vec![Rank::ZERO; sig.world_count() as usize],
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn rank_of(&self, w: &World) -> Result<Rank> {
        if w.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(self.ranks[w.index() as usize])
    }

    pub(crate) fn rank_of_index(&self, index: u64) -> Rank {
        self.ranks[index as usize]
    }

    pub(crate) fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub(crate) fn min_over(&self, worlds: &Bits) -> Rank {
        worlds
            .iter()
            .map(|i| self.ranks[i as usize])
            .min()
            .unwrap_or(Rank::Infinite)
    }

    /// `κ(A) = min { κ(ω) | ω ⊨ A }`, infinity when `A` is unsatisfiable.
    pub fn rank_of_formula(&self, f: &Formula) -> Result<Rank> {
        if f.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(self.min_over(f.bits()))
    }

    /// `κ ⊨ (B | A)` iff `κ(A ∧ B) < κ(A ∧ ¬B)`.
    pub fn accepts(&self, c: &Conditional) -> Result<bool> {
        if c.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(self.min_over(&c.verification_bits()) < self.min_over(&c.falsification_bits()))
    }

    /// Marginal ranking over the atoms at the given positions: the rank of a
    /// sub-world is the minimum rank among the full worlds extending it.
    pub fn marginal(&self, cell: &[usize]) -> Result<RankingFunction> {
        let sub = self.sig.sub_signature(cell)?;
        let mut sorted = cell.to_vec();
        sorted.sort_unstable();
        let n = self.sig.atom_count();
        let mut ranks = alloc::vec![Rank::Infinite; sub.world_count() as usize];
        for (i, &r) in self.ranks.iter().enumerate() {
            let j = project_index(i as u64, n, &sorted) as usize;
            if r < ranks[j] {
                ranks[j] = r;
            }
        }
        RankingFunction::new(&sub, ranks)
    }
}

impl fmt::Display for RankingFunction {
    /// One line per occupied rank: `<rank>: <world>[, <world>]*`, ranks
    /// ascending with `inf` last, worlds ascending within a line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut finite: Vec<u64> = self
            .ranks
            .iter()
            .filter_map(|r| match r {
                Rank::Finite(n) => Some(*n),
                Rank::Infinite => None,
            })
            .collect();
        finite.sort_unstable();
        finite.dedup();
        let mut first_line = true;
        let mut line = |f: &mut fmt::Formatter<'_>, rank: Rank| -> fmt::Result {
            if !first_line {
                f.write_str("\n")?;
            }
            first_line = false;
            write!(f, "{rank}: ")?;
            let mut first = true;
            for w in self.sig.worlds() {
                if self.ranks[w.index() as usize] == rank {
                    if !first {
                        f.write_str(", ")?;
                    }
                    first = false;
                    write!(f, "{w}")?;
                }
            }
            Ok(())
        };
        for r in finite {
            line(f, Rank::Finite(r))?;
        }
        if self.ranks.contains(&Rank::Infinite) {
            line(f, Rank::Infinite)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RankingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RankingFunction over [{}]:\n{self}", self.sig)
    }
}

/// A total preorder on worlds, stored as an ordered partition into layers.
///
/// Layer 0 holds the most plausible worlds; `ω ⪯ ω′` iff the layer index of
/// `ω` is at most that of `ω′`. Totality, reflexivity, and transitivity are
/// consequences of the encoding.
#[derive(Clone, PartialEq, Eq)]
pub struct TotalPreorder {
    sig: Signature,
    layers: Vec<Bits>,
    layer_of: Vec<u32>,
}

impl TotalPreorder {
    pub fn from_layers(sig: &Signature, layers: Vec<Vec<World>>) -> Result<TotalPreorder> {
        let mut bit_layers = Vec::with_capacity(layers.len());
        for layer in layers {
            let mut bits = Bits::empty(sig.world_count());
            for w in layer {
                if w.signature() != sig {
                    return Err(Error::SignatureMismatch);
                }
                bits.insert(w.index());
            }
            bit_layers.push(bits);
        }
        TotalPreorder::from_layer_bits(sig, bit_layers)
    }

    pub(crate) fn from_layer_bits(sig: &Signature, layers: Vec<Bits>) -> Result<TotalPreorder> {
        let mut layer_of = alloc::vec![u32::MAX; sig.world_count() as usize];
        for (li, layer) in layers.iter().enumerate() {
            if layer.is_empty() {
                return Err(Error::InvalidLayers(format!("layer {li} is empty")));
            }
            for w in layer.iter() {
                if layer_of[w as usize] != u32::MAX {
                    return Err(Error::InvalidLayers(format!(
                        "world {w} occurs in two layers"
                    )));
                }
                layer_of[w as usize] = li as u32;
            }
        }
        if layer_of.contains(&u32::MAX) {
            return Err(Error::InvalidLayers(
                "layers do not cover the universe".to_string(),
            ));
        }
        Ok(TotalPreorder {
            sig: sig.clone(),
            layers,
            layer_of,
        })
    }

    /// Builds the preorder that orders worlds by the given scores.
    /// Scores are compacted into consecutive layers.
    pub fn from_scores(sig: &Signature, scores: &[u64]) -> Result<TotalPreorder> {
        if scores.len() as u64 != sig.world_count() {
            return Err(Error::InvalidLayers(format!(
                "expected {} scores, got {}",
                sig.world_count(),
                scores.len()
            )));
        }
        let mut distinct: Vec<u64> = scores.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let mut layers = alloc::vec![Bits::empty(sig.world_count()); distinct.len()];
        for (w, s) in scores.iter().enumerate() {
            let li = distinct.binary_search(s).expect("score present");
            layers[li].insert(w as u64);
        }
        TotalPreorder::from_layer_bits(sig, layers)
    }

    /// Groups worlds by rank, ascending; worlds of infinite rank form the
    /// final layer when present.
    pub fn from_ranking(k: &RankingFunction) -> TotalPreorder {
        let sig = k.signature();
        let mut finite: Vec<u64> = k
            .ranks()
            .iter()
            .filter_map(|r| match r {
                Rank::Finite(n) => Some(*n),
                Rank::Infinite => None,
            })
            .collect();
        finite.sort_unstable();
        finite.dedup();
        let has_inf = k.ranks().contains(&Rank::Infinite);
        let mut layers =
            alloc::vec![Bits::empty(sig.world_count()); finite.len() + usize::from(has_inf)];
        for (w, r) in k.ranks().iter().enumerate() {
            let li = match r {
                Rank::Finite(n) => finite.binary_search(n).expect("rank present"),
                Rank::Infinite => finite.len(),
            };
            layers[li].insert(w as u64);
        }
        TotalPreorder::from_layer_bits(sig, layers).expect("ranking covers the universe")
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn layer(&self, index: usize) -> impl Iterator<Item = World> + '_ {
        self.layers[index]
            .iter()
            .map(move |i| World::from_index(&self.sig, i).expect("layer worlds are in range"))
    }

    pub fn layer_sizes(&self) -> Vec<u64> {
        self.layers.iter().map(Bits::count).collect()
    }

    pub fn layer_index_of(&self, w: &World) -> Result<usize> {
        if w.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(self.layer_of[w.index() as usize] as usize)
    }

    pub(crate) fn layer_of_slice(&self) -> &[u32] {
        &self.layer_of
    }

    pub(crate) fn layer_bits(&self) -> &[Bits] {
        &self.layers
    }

    /// `ω ⪯ ω′`.
    pub fn le(&self, w1: &World, w2: &World) -> Result<bool> {
        Ok(self.layer_index_of(w1)? <= self.layer_index_of(w2)?)
    }

    pub(crate) fn min_layer_over(&self, worlds: &Bits) -> Option<usize> {
        worlds
            .iter()
            .map(|i| self.layer_of[i as usize] as usize)
            .min()
    }

    /// Layer index of the most plausible model, `None` for unsatisfiable.
    pub fn min_layer_of_formula(&self, f: &Formula) -> Result<Option<usize>> {
        if f.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(self.min_layer_over(f.bits()))
    }

    /// `⪯ ⊨ (B | A)` iff the best `A ∧ B` world is strictly below every
    /// best `A ∧ ¬B` world (an unsatisfiable side counts as infinitely far).
    pub fn accepts(&self, c: &Conditional) -> Result<bool> {
        if c.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        let ver = self.min_layer_over(&c.verification_bits());
        let fal = self.min_layer_over(&c.falsification_bits());
        Ok(match (ver, fal) {
            (Some(v), Some(f)) => v < f,
            (Some(_), None) => true,
            (None, _) => false,
        })
    }
}

impl fmt::Display for TotalPreorder {
    /// One line per layer: `<layer-index>: <world>[, <world>]*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (li, layer) in self.layers.iter().enumerate() {
            if li > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{li}: ")?;
            for (k, w) in layer.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                let world = World::from_index(&self.sig, w).expect("in range");
                write!(f, "{world}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TotalPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TotalPreorder over [{}]:\n{self}", self.sig)
    }
}
