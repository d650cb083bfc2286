//! Model transformations: bijections between equal-sized universes.
//!
//! A transformation is stored extensionally as a table over world indices
//! and lifts pointwise to every object kind: worlds, formulas (elementwise
//! on the model set), conditionals (both sides), belief sets, ranking
//! functions (`κ'(φ(ω)) = κ(ω)`), and total preorders (layer structure
//! carried along the bijection). Transformations between universes of
//! different sizes do not exist.

use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::logic::{BeliefSet, Conditional, Formula, Signature, World};
use crate::state::{RankingFunction, TotalPreorder};

/// A bijection between the universes of two equal-sized signatures.
#[derive(Clone, PartialEq, Eq)]
pub struct ModelTransformation {
    source: Signature,
    target: Signature,
    table: Vec<u64>,
}

impl ModelTransformation {
    /// `table[i]` is the target index of the source world with index `i`.
    pub fn new(source: &Signature, target: &Signature, table: Vec<u64>) -> Result<Self> {
        if source.atom_count() != target.atom_count() {
            return Err(Error::SizeMismatch);
        }
        let m = source.world_count();
        if table.len() as u64 != m {
            return Err(Error::NotABijection);
        }
        let mut seen = Bits::empty(m);
        for &t in &table {
            if t >= m || seen.contains(t) {
                return Err(Error::NotABijection);
            }
            seen.insert(t);
        }
        Ok(ModelTransformation {
            source: source.clone(),
            target: target.clone(),
            table,
        })
    }

    /// Builds a transformation from explicit world pairs; the pairs must
    /// cover the source universe exactly once and hit every target world.
    pub fn from_pairs(
        source: &Signature,
        target: &Signature,
        pairs: &[(World, World)],
    ) -> Result<Self> {
        if source.atom_count() != target.atom_count() {
            return Err(Error::SizeMismatch);
        }
        let m = source.world_count();
        if pairs.len() as u64 != m {
            return Err(Error::NotABijection);
        }
        let mut table = alloc::vec![u64::MAX; m as usize];
        for (from, to) in pairs {
            if from.signature() != source || to.signature() != target {
                return Err(Error::SignatureMismatch);
            }
            if table[from.index() as usize] != u64::MAX {
                return Err(Error::NotABijection);
            }
            table[from.index() as usize] = to.index();
        }
        ModelTransformation::new(source, target, table)
    }

    pub fn identity(sig: &Signature) -> Self {
        ModelTransformation {
            source: sig.clone(),
            target: sig.clone(),
            table: (0..sig.world_count()).collect(),
        }
    }

    /// The transformation induced by a bijective atom renaming: the world
    /// image assigns to `σ(a)` whatever the source world assigns to `a`.
    pub fn from_renaming<'a, I>(source: &Signature, target: &Signature, renaming: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        if source.atom_count() != target.atom_count() {
            return Err(Error::SizeMismatch);
        }
        let n = source.atom_count();
        let mut image = alloc::vec![usize::MAX; n];
        let mut hit = alloc::vec![false; n];
        for (from, to) in renaming {
            let i = source
                .atom_index(from)
                .ok_or_else(|| Error::UnknownAtom {
                    name: from.into(),
                    position: 0,
                })?;
            let j = target
                .atom_index(to)
                .ok_or_else(|| Error::UnknownAtom {
                    name: to.into(),
                    position: 0,
                })?;
            if image[i] != usize::MAX || hit[j] {
                return Err(Error::NotABijection);
            }
            image[i] = j;
            hit[j] = true;
        }
        if image.contains(&usize::MAX) {
            return Err(Error::NotABijection);
        }
        let table = (0..source.world_count())
            .map(|w| {
                let mut out = 0u64;
                for (i, &j) in image.iter().enumerate() {
                    out |= ((w >> (n - 1 - i)) & 1) << (n - 1 - j);
                }
                out
            })
            .collect();
        ModelTransformation::new(source, target, table)
    }

    /// A uniformly random bijection, deterministic in the seed.
    pub fn random(source: &Signature, target: &Signature, seed: u64) -> Result<Self> {
        if source.atom_count() != target.atom_count() {
            return Err(Error::SizeMismatch);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut table: Vec<u64> = (0..source.world_count()).collect();
        // Fisher-Yates with rejection sampling for unbiased indices
        for i in (1..table.len()).rev() {
            let j = uniform_below(&mut rng, (i + 1) as u64) as usize;
            table.swap(i, j);
        }
        ModelTransformation::new(source, target, table)
    }

    /// All bijections between the two universes in lexicographic table
    /// order, starting from the identity pairing. Only available for
    /// universes of at most 8 worlds (40320 bijections).
    pub fn enumerate(source: &Signature, target: &Signature) -> Result<Transformations> {
        if source.atom_count() != target.atom_count() {
            return Err(Error::SizeMismatch);
        }
        if source.world_count() > 8 {
            return Err(Error::UniverseTooLarge {
                worlds: source.world_count(),
                max: 8,
            });
        }
        Ok(Transformations {
            source: source.clone(),
            target: target.clone(),
            next: Some((0..source.world_count()).collect()),
        })
    }

    pub fn source(&self) -> &Signature {
        &self.source
    }

    pub fn target(&self) -> &Signature {
        &self.target
    }

    pub(crate) fn map_index(&self, index: u64) -> u64 {
        self.table[index as usize]
    }

    /// `compose(outer, inner)` is the transformation `outer ∘ inner`.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if inner.target != outer.source {
            return Err(Error::CompositionMismatch);
        }
        let table = inner.table.iter().map(|&i| outer.table[i as usize]).collect();
        Ok(ModelTransformation {
            source: inner.source.clone(),
            target: outer.target.clone(),
            table,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut table = alloc::vec![0u64; self.table.len()];
        for (i, &t) in self.table.iter().enumerate() {
            table[t as usize] = i as u64;
        }
        ModelTransformation {
            source: self.target.clone(),
            target: self.source.clone(),
            table,
        }
    }

    /// The image of `x` under this transformation.
    pub fn apply<T: Transformable>(&self, x: &T) -> Result<T> {
        x.transformed(self)
    }

    pub(crate) fn map_bits(&self, bits: &Bits) -> Bits {
        Bits::from_indices(bits.len(), bits.iter().map(|i| self.table[i as usize]))
    }
}

fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let x = rng.next_u64();
        if x >= threshold {
            return x % bound;
        }
    }
}

/// Iterator over all bijections in lexicographic table order.
pub struct Transformations {
    source: Signature,
    target: Signature,
    next: Option<Vec<u64>>,
}

impl Iterator for Transformations {
    type Item = ModelTransformation;

    fn next(&mut self) -> Option<ModelTransformation> {
        let table = self.next.take()?;
        let out = ModelTransformation {
            source: self.source.clone(),
            target: self.target.clone(),
            table: table.clone(),
        };
        self.next = next_permutation(table);
        Some(out)
    }
}

fn next_permutation(mut v: Vec<u64>) -> Option<Vec<u64>> {
    if v.len() < 2 {
        return None;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

/// Values that a model transformation lifts to.
pub trait Transformable: Sized {
    /// The image of `self` under `phi`; fails when `self` does not live
    /// over `phi`'s source signature.
    fn transformed(&self, phi: &ModelTransformation) -> Result<Self>;
}

impl Transformable for World {
    fn transformed(&self, phi: &ModelTransformation) -> Result<World> {
        if self.signature() != &phi.source {
            return Err(Error::SignatureMismatch);
        }
        World::from_index(&phi.target, phi.map_index(self.index()))
    }
}

impl Transformable for Formula {
    fn transformed(&self, phi: &ModelTransformation) -> Result<Formula> {
        if self.signature() != &phi.source {
            return Err(Error::SignatureMismatch);
        }
        Ok(Formula::from_bits(&phi.target, phi.map_bits(self.bits())))
    }
}

impl Transformable for Conditional {
    fn transformed(&self, phi: &ModelTransformation) -> Result<Conditional> {
        Conditional::new(
            self.antecedent().transformed(phi)?,
            self.consequent().transformed(phi)?,
        )
    }
}

impl Transformable for BeliefSet {
    fn transformed(&self, phi: &ModelTransformation) -> Result<BeliefSet> {
        if self.signature() != &phi.source {
            return Err(Error::SignatureMismatch);
        }
        Ok(BeliefSet::from_bits(&phi.target, phi.map_bits(self.bits())))
    }
}

impl Transformable for RankingFunction {
    fn transformed(&self, phi: &ModelTransformation) -> Result<RankingFunction> {
        if self.signature() != &phi.source {
            return Err(Error::SignatureMismatch);
        }
        let mut ranks = alloc::vec![crate::state::Rank::ZERO; self.ranks().len()];
        for (i, &r) in self.ranks().iter().enumerate() {
            ranks[phi.map_index(i as u64) as usize] = r;
        }
        RankingFunction::new(&phi.target, ranks)
    }
}

impl Transformable for TotalPreorder {
    fn transformed(&self, phi: &ModelTransformation) -> Result<TotalPreorder> {
        if self.signature() != &phi.source {
            return Err(Error::SignatureMismatch);
        }
        let layers = self.layer_bits().iter().map(|l| phi.map_bits(l)).collect();
        TotalPreorder::from_layer_bits(&phi.target, layers)
    }
}

impl fmt::Display for ModelTransformation {
    /// `from:`/`to:` header followed by one `<world> -> <world>` line per
    /// source world in ascending index order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "from: {}", self.source)?;
        write!(f, "to: {}", self.target)?;
        for w in self.source.worlds() {
            let img = World::from_index(&self.target, self.map_index(w.index()))
                .expect("table entries are in range");
            write!(f, "\n{w} -> {img}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ModelTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModelTransformation {{\n{self}\n}}")
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::state::fixtures::{sig_abc, sig_xyz};

    /// The eight world pairs of the running three-atom example.
    pub const PHI_ABC_XYZ: [(&str, &str); 8] = [
        ("a b c", "!x !y !z"),
        ("!a b c", "x y !z"),
        ("a b !c", "x !y z"),
        ("!a b !c", "!x !y z"),
        ("a !b c", "x y z"),
        ("!a !b c", "!x y z"),
        ("a !b !c", "!x y !z"),
        ("!a !b !c", "x !y !z"),
    ];

    pub fn phi_abc_to_xyz() -> ModelTransformation {
        let source = sig_abc();
        let target = sig_xyz();
        let pairs: Vec<(World, World)> = PHI_ABC_XYZ
            .iter()
            .map(|(f, t)| {
                (
                    World::parse(f, &source).unwrap(),
                    World::parse(t, &target).unwrap(),
                )
            })
            .collect();
        ModelTransformation::from_pairs(&source, &target, &pairs).unwrap()
    }
}
