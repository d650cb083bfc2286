//! Inductive inference from conditional belief bases: p-entailment,
//! system Z, and lexicographic inference.
//!
//! All three are driven by tolerance: a conditional is tolerated by a set
//! when some world verifies it while falsifying no member. Iterated
//! tolerance stratifies a base into the Z-partition; the base is
//! inconsistent when a non-empty remainder has no tolerated member.
//! Conditionals with an unsatisfiable antecedent are vacuously accepted:
//! they sit in the lowest stratum and never block anything.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::logic::{Conditional, Formula, Signature};
use crate::state::{Rank, RankingFunction, TotalPreorder};
use crate::transform::{ModelTransformation, Transformable};

/// A finite set of conditionals over one signature; duplicates are dropped,
/// keeping first occurrences.
#[derive(Clone, PartialEq, Eq)]
pub struct BeliefBase {
    sig: Signature,
    conditionals: Vec<Conditional>,
    masks: Vec<(Bits, Bits)>,
}

impl BeliefBase {
    pub fn new<I>(sig: &Signature, conditionals: I) -> Result<BeliefBase>
    where
        I: IntoIterator<Item = Conditional>,
    {
        let mut kept: Vec<Conditional> = Vec::new();
        for c in conditionals {
            if c.signature() != sig {
                return Err(Error::SignatureMismatch);
            }
            if !kept.contains(&c) {
                kept.push(c);
            }
        }
        let masks = kept
            .iter()
            .map(|c| (c.verification_bits(), c.falsification_bits()))
            .collect();
        Ok(BeliefBase {
            sig: sig.clone(),
            conditionals: kept,
            masks,
        })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn conditionals(&self) -> &[Conditional] {
        &self.conditionals
    }

    pub fn len(&self) -> usize {
        self.conditionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conditionals.is_empty()
    }

    pub(crate) fn masks(&self) -> &[(Bits, Bits)] {
        &self.masks
    }

    /// Whether a tolerance partition exists.
    pub fn is_consistent(&self) -> bool {
        let refs: Vec<(&Bits, &Bits)> = self.masks.iter().map(|(v, f)| (v, f)).collect();
        consistent(&refs, self.sig.world_count())
    }

    /// Greedy tolerance stratification: the lowest stratum collects every
    /// conditional tolerated by the whole base (and every vacuous one), then
    /// the remainder is stratified recursively. `None` means no partition
    /// exists, i.e. the base is inconsistent.
    pub fn z_partition(&self) -> Option<ZPartition> {
        let labels = stratify(&self.masks, self.sig.world_count())?;
        let levels = labels.iter().map(|&l| l + 1).max().unwrap_or(0) as usize;
        let mut strata = alloc::vec![Vec::new(); levels];
        for (i, &l) in labels.iter().enumerate() {
            strata[l as usize].push(self.conditionals[i].clone());
        }
        Some(ZPartition { strata })
    }

    /// The system Z ranking: a world that falsifies nothing has rank 0,
    /// otherwise 1 plus the highest stratum it falsifies into.
    pub fn z_ranking(&self) -> Result<RankingFunction> {
        let labels =
            stratify(&self.masks, self.sig.world_count()).ok_or(Error::InconsistentBase)?;
        let mut ranks = alloc::vec![Rank::ZERO; self.sig.world_count() as usize];
        for (i, (_, fal)) in self.masks.iter().enumerate() {
            let candidate = Rank::Finite(labels[i] as u64 + 1);
            for w in fal.iter() {
                if ranks[w as usize] < candidate {
                    ranks[w as usize] = candidate;
                }
            }
        }
        RankingFunction::new(&self.sig, ranks)
    }

    /// The lexicographic preorder: worlds ordered by their per-stratum
    /// falsification counts, most specific stratum first.
    pub fn lex_preorder(&self) -> Result<TotalPreorder> {
        let labels =
            stratify(&self.masks, self.sig.world_count()).ok_or(Error::InconsistentBase)?;
        let levels = labels.iter().map(|&l| l + 1).max().unwrap_or(0) as usize;
        let mut groups: BTreeMap<Vec<u32>, Vec<u64>> = BTreeMap::new();
        for w in 0..self.sig.world_count() {
            let mut violations = alloc::vec![0u32; levels];
            for (i, (_, fal)) in self.masks.iter().enumerate() {
                if fal.contains(w) {
                    // most specific stratum goes in front
                    violations[levels - 1 - labels[i] as usize] += 1;
                }
            }
            groups.entry(violations).or_default().push(w);
        }
        let layers = groups
            .into_values()
            .map(|ws| Bits::from_indices(self.sig.world_count(), ws))
            .collect();
        TotalPreorder::from_layer_bits(&self.sig, layers)
    }

    /// Whether `k` accepts every member, with vacuous acceptance for
    /// conditionals whose antecedent is unsatisfiable.
    pub fn accepted_by(&self, k: &RankingFunction) -> Result<bool> {
        if k.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        for (ver, fal) in &self.masks {
            if ver.is_empty() && fal.is_empty() {
                continue;
            }
            if !(k.min_over(ver) < k.min_over(fal)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Transformable for BeliefBase {
    fn transformed(&self, phi: &ModelTransformation) -> Result<BeliefBase> {
        let conditionals: Result<Vec<Conditional>> = self
            .conditionals
            .iter()
            .map(|c| c.transformed(phi))
            .collect();
        BeliefBase::new(phi.target(), conditionals?)
    }
}

impl fmt::Display for BeliefBase {
    /// One conditional per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.conditionals.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BeliefBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BeliefBase over [{}]:\n{self}", self.sig)
    }
}

/// The tolerance stratification of a belief base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPartition {
    strata: Vec<Vec<Conditional>>,
}

impl ZPartition {
    pub fn strata(&self) -> &[Vec<Conditional>] {
        &self.strata
    }

    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    /// The Z-rank of a conditional, when it belongs to the base.
    pub fn stratum_of(&self, c: &Conditional) -> Option<usize> {
        self.strata.iter().position(|s| s.contains(c))
    }
}

/// Whether some world verifies `c` while falsifying no member of `base`.
pub fn tolerates(base: &[Conditional], c: &Conditional) -> Result<bool> {
    let sig = c.signature();
    let mut blocked = Bits::empty(sig.world_count());
    for member in base {
        if member.signature() != sig {
            return Err(Error::SignatureMismatch);
        }
        blocked.or_assign(&member.falsification_bits());
    }
    Ok(c.verification_bits().intersects(&blocked.not()))
}

/// Stratum label per conditional, or `None` when the base is inconsistent.
/// Vacuous conditionals (unsatisfiable antecedent) are labelled 0.
pub(crate) fn stratify(pairs: &[(Bits, Bits)], universe: u64) -> Option<Vec<u32>> {
    let mut labels = alloc::vec![0u32; pairs.len()];
    let mut alive: Vec<usize> = (0..pairs.len())
        .filter(|&i| !(pairs[i].0.is_empty() && pairs[i].1.is_empty()))
        .collect();
    let mut level = 0u32;
    while !alive.is_empty() {
        let mut blocked = Bits::empty(universe);
        for &i in &alive {
            blocked.or_assign(&pairs[i].1);
        }
        let safe = blocked.not();
        let before = alive.len();
        alive.retain(|&i| {
            if pairs[i].0.intersects(&safe) {
                labels[i] = level;
                false
            } else {
                true
            }
        });
        if alive.len() == before {
            return None;
        }
        level += 1;
    }
    Some(labels)
}

/// Early-exit consistency check over `(verification, falsification)` pairs.
pub(crate) fn consistent(pairs: &[(&Bits, &Bits)], universe: u64) -> bool {
    let mut alive: Vec<usize> = (0..pairs.len())
        .filter(|&i| !(pairs[i].0.is_empty() && pairs[i].1.is_empty()))
        .collect();
    while !alive.is_empty() {
        let mut blocked = Bits::empty(universe);
        for &i in &alive {
            blocked.or_assign(pairs[i].1);
        }
        let safe = blocked.not();
        let before = alive.len();
        alive.retain(|&i| !pairs[i].0.intersects(&safe));
        if alive.len() == before {
            return false;
        }
    }
    true
}

/// Acceptance of the query `(b | a)` given as the mask pair
/// `(a ∧ b, a ∧ ¬b)`; an unsatisfiable antecedent is vacuously accepted.
pub(crate) fn ranking_query(k: &RankingFunction, ver: &Bits, fal: &Bits) -> bool {
    if ver.is_empty() && fal.is_empty() {
        return true;
    }
    k.min_over(ver) < k.min_over(fal)
}

pub(crate) fn preorder_query(t: &TotalPreorder, ver: &Bits, fal: &Bits) -> bool {
    if ver.is_empty() && fal.is_empty() {
        return true;
    }
    match (t.min_layer_over(ver), t.min_layer_over(fal)) {
        (Some(v), Some(f)) => v < f,
        (Some(_), None) => true,
        (None, _) => false,
    }
}

/// P-entailment of the query `(b | a)` given base mask pairs: the base
/// extended by `(¬b | a)` must be inconsistent. `ver`/`fal` are the query's
/// `a ∧ b` / `a ∧ ¬b`; an unsatisfiable antecedent is vacuously entailed.
pub(crate) fn p_query(pairs: &[(Bits, Bits)], ver: &Bits, fal: &Bits, universe: u64) -> bool {
    if ver.is_empty() && fal.is_empty() {
        return true;
    }
    let mut refs: Vec<(&Bits, &Bits)> = pairs.iter().map(|(v, f)| (v, f)).collect();
    // the negated query: (¬b | a) verifies where (b | a) falsifies
    refs.push((fal, ver));
    !consistent(&refs, universe)
}

/// An inductive inference method.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InferenceMethod {
    PEntailment,
    SystemZ,
    Lexicographic,
}

impl InferenceMethod {
    pub const ALL: [InferenceMethod; 3] = [
        InferenceMethod::PEntailment,
        InferenceMethod::SystemZ,
        InferenceMethod::Lexicographic,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            InferenceMethod::PEntailment => "p",
            InferenceMethod::SystemZ => "z",
            InferenceMethod::Lexicographic => "lex",
        }
    }
}

impl core::str::FromStr for InferenceMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<InferenceMethod> {
        match s {
            "p" => Ok(InferenceMethod::PEntailment),
            "z" => Ok(InferenceMethod::SystemZ),
            "lex" => Ok(InferenceMethod::Lexicographic),
            other => Err(Error::UnknownOperator(String::from(other))),
        }
    }
}

impl fmt::Display for InferenceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether `a |~ b` under the chosen method. An unsatisfiable `a` is
/// entailed by convention; system Z and lexicographic inference require a
/// consistent base.
pub fn infer(base: &BeliefBase, a: &Formula, b: &Formula, method: InferenceMethod) -> Result<bool> {
    if a.signature() != base.signature() || b.signature() != base.signature() {
        return Err(Error::SignatureMismatch);
    }
    let ver = a.bits().and(b.bits());
    let fal = a.bits().minus(b.bits());
    match method {
        InferenceMethod::PEntailment => Ok(p_query(
            base.masks(),
            &ver,
            &fal,
            base.signature().world_count(),
        )),
        InferenceMethod::SystemZ => Ok(ranking_query(&base.z_ranking()?, &ver, &fal)),
        InferenceMethod::Lexicographic => Ok(preorder_query(&base.lex_preorder()?, &ver, &fal)),
    }
}

/// Result of checking direct inference and trivial vacuity.
#[derive(Clone, Debug)]
pub struct DiTvReport {
    pub method: InferenceMethod,
    pub di_checked: usize,
    pub di_violations: Vec<Conditional>,
    pub tv_checked: usize,
    pub tv_violations: Vec<(Formula, Formula)>,
    /// Set when the base is inconsistent and the method needs a ranking;
    /// direct inference is skipped in that case.
    pub di_skipped_inconsistent: bool,
}

impl DiTvReport {
    pub fn holds(&self) -> bool {
        self.di_violations.is_empty() && self.tv_violations.is_empty()
    }
}

/// Direct inference is checked on every member of `base`; trivial vacuity
/// is checked on the empty base over the given query pairs: the empty base
/// must infer exactly the classical entailments.
pub fn check_di_tv(
    method: InferenceMethod,
    base: &BeliefBase,
    tv_pairs: &[(Formula, Formula)],
) -> Result<DiTvReport> {
    let mut report = DiTvReport {
        method,
        di_checked: 0,
        di_violations: Vec::new(),
        tv_checked: 0,
        tv_violations: Vec::new(),
        di_skipped_inconsistent: false,
    };
    let needs_ranking = method != InferenceMethod::PEntailment;
    if needs_ranking && !base.is_consistent() {
        report.di_skipped_inconsistent = true;
    } else {
        for c in base.conditionals() {
            report.di_checked += 1;
            if !infer(base, c.antecedent(), c.consequent(), method)? {
                report.di_violations.push(c.clone());
            }
        }
    }
    let empty = BeliefBase::new(base.signature(), [])?;
    for (a, b) in tv_pairs {
        report.tv_checked += 1;
        if infer(&empty, a, b, method)? != a.entails(b)? {
            report.tv_violations.push((a.clone(), b.clone()));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::World;
    use alloc::vec;

    fn sig_pbf() -> Signature {
        Signature::new(["p", "b", "f"]).unwrap()
    }

    fn f(text: &str, sig: &Signature) -> Formula {
        Formula::parse(text, sig).unwrap()
    }

    fn c(text: &str, sig: &Signature) -> Conditional {
        Conditional::parse(text, sig).unwrap()
    }

    /// birds fly, penguins are birds, penguins do not fly
    fn penguin_base() -> BeliefBase {
        let sig = sig_pbf();
        BeliefBase::new(
            &sig,
            [c("(f | b)", &sig), c("(b | p)", &sig), c("(!f | p)", &sig)],
        )
        .unwrap()
    }

    /// Brute-force reimplementation over raw truth assignments, independent
    /// of the bitset machinery: worlds are `(p, b, f)` triples.
    mod oracle {
        pub type W = (bool, bool, bool);
        pub type Pred = fn(W) -> bool;

        pub fn worlds() -> [W; 8] {
            let mut out = [(false, false, false); 8];
            let mut i = 0;
            for p in [false, true] {
                for b in [false, true] {
                    for f in [false, true] {
                        out[i] = (p, b, f);
                        i += 1;
                    }
                }
            }
            out
        }

        #[derive(Clone, Copy)]
        pub struct Cond {
            pub ante: Pred,
            pub cons: Pred,
        }

        impl Cond {
            pub fn verifies(&self, w: W) -> bool {
                (self.ante)(w) && (self.cons)(w)
            }
            pub fn falsifies(&self, w: W) -> bool {
                (self.ante)(w) && !(self.cons)(w)
            }
        }

        pub fn tolerated(base: &[Cond], c: Cond) -> bool {
            worlds()
                .iter()
                .any(|&w| c.verifies(w) && base.iter().all(|m| !m.falsifies(w)))
        }

        /// stratum per conditional, or None when inconsistent
        pub fn partition(base: &[Cond]) -> Option<alloc::vec::Vec<usize>> {
            let mut label = alloc::vec![usize::MAX; base.len()];
            let mut level = 0;
            loop {
                let alive: alloc::vec::Vec<usize> = (0..base.len())
                    .filter(|&i| label[i] == usize::MAX)
                    .collect();
                if alive.is_empty() {
                    return Some(label);
                }
                let members: alloc::vec::Vec<Cond> =
                    alive.iter().map(|&i| base[i]).collect();
                let tolerated_now: alloc::vec::Vec<usize> = alive
                    .iter()
                    .copied()
                    .filter(|&i| tolerated(&members, base[i]))
                    .collect();
                if tolerated_now.is_empty() {
                    return None;
                }
                for i in tolerated_now {
                    label[i] = level;
                }
                level += 1;
            }
        }

        pub fn z_rank(base: &[Cond], labels: &[usize], w: W) -> u64 {
            base.iter()
                .enumerate()
                .filter(|(_, c)| c.falsifies(w))
                .map(|(i, _)| labels[i] as u64 + 1)
                .max()
                .unwrap_or(0)
        }
    }

    #[test]
    fn tolerance_matches_oracle_on_named_cases() {
        let sig = sig_pbf();
        // a bird that is not a penguin verifies (!f | p)? no — need p true.
        // base {(f|b)}, query (!f|p): the world p !b !f verifies the query
        // and falsifies nothing
        let base = [c("(f | b)", &sig)];
        assert!(tolerates(&base, &c("(!f | p)", &sig)).unwrap());

        let fly: oracle::Cond = oracle::Cond {
            ante: |w| w.1,
            cons: |w| w.2,
        };
        let nofly_p: oracle::Cond = oracle::Cond {
            ante: |w| w.0,
            cons: |w| !w.2,
        };
        assert!(oracle::tolerated(&[fly], nofly_p));

        // nothing verifies a conditional with unsatisfiable A ∧ B
        let base2 = [c("(f | b)", &sig), c("(bot | p)", &sig)];
        assert!(!tolerates(&base2, &c("(bot | p)", &sig)).unwrap());

        // empty base: tolerance is satisfiability of A ∧ B
        assert!(tolerates(&[], &c("(f | b & p)", &sig)).unwrap());
        assert!(!tolerates(&[], &c("(!f | f & b)", &sig)).unwrap());
    }

    #[test]
    fn penguin_partition_matches_oracle() {
        let sig = sig_pbf();
        let base = penguin_base();
        let zp = base.z_partition().expect("penguin base is consistent");
        assert_eq!(zp.len(), 2);
        assert_eq!(zp.strata()[0], vec![c("(f | b)", &sig)]);
        assert_eq!(
            zp.strata()[1],
            vec![c("(b | p)", &sig), c("(!f | p)", &sig)]
        );

        let oracle_base = [
            oracle::Cond {
                ante: |w| w.1,
                cons: |w| w.2,
            },
            oracle::Cond {
                ante: |w| w.0,
                cons: |w| w.1,
            },
            oracle::Cond {
                ante: |w| w.0,
                cons: |w| !w.2,
            },
        ];
        let labels = oracle::partition(&oracle_base).unwrap();
        assert_eq!(labels, vec![0, 1, 1]);
    }

    #[test]
    fn penguin_ranking_matches_oracle() {
        let sig = sig_pbf();
        let base = penguin_base();
        let k = base.z_ranking().unwrap();

        let oracle_base = [
            oracle::Cond {
                ante: |w| w.1,
                cons: |w| w.2,
            },
            oracle::Cond {
                ante: |w| w.0,
                cons: |w| w.1,
            },
            oracle::Cond {
                ante: |w| w.0,
                cons: |w| !w.2,
            },
        ];
        let labels = oracle::partition(&oracle_base).unwrap();
        for (i, &w) in oracle::worlds().iter().enumerate() {
            assert_eq!(
                k.rank_of(&World::from_index(&sig, i as u64).unwrap()).unwrap(),
                Rank::Finite(oracle::z_rank(&oracle_base, &labels, w)),
                "rank of world {i}"
            );
        }

        // frozen named values
        let expect = [
            ("!p b f", 0u64),
            ("!p b !f", 1),
            ("p b f", 2),
            ("p b !f", 1),
        ];
        for (text, rank) in expect {
            assert_eq!(
                k.rank_of(&World::parse(text, &sig).unwrap()).unwrap(),
                Rank::Finite(rank),
                "rank of {text}"
            );
        }
        assert!(base.accepted_by(&k).unwrap());
    }

    #[test]
    fn empty_and_conflicting_bases() {
        let sig = sig_pbf();
        let empty = BeliefBase::new(&sig, []).unwrap();
        assert!(empty.z_partition().unwrap().is_empty());
        assert_eq!(empty.z_ranking().unwrap(), RankingFunction::uniform(&sig));

        let conflict =
            BeliefBase::new(&sig, [c("(b | p)", &sig), c("(!b | p)", &sig)]).unwrap();
        assert!(conflict.z_partition().is_none());
        assert!(!conflict.is_consistent());
        assert_eq!(conflict.z_ranking(), Err(Error::InconsistentBase));

        // a conditional with unsatisfiable antecedent is vacuous
        let vacuous = BeliefBase::new(&sig, [c("(b | bot)", &sig)]).unwrap();
        let zp = vacuous.z_partition().unwrap();
        assert_eq!(zp.len(), 1);
        assert!(vacuous.accepted_by(&vacuous.z_ranking().unwrap()).unwrap());

        // but an unverifiable conditional with satisfiable antecedent is not
        let broken = BeliefBase::new(&sig, [c("(bot | p)", &sig)]).unwrap();
        assert!(broken.z_partition().is_none());
    }

    #[test]
    fn penguin_inferences() {
        let sig = sig_pbf();
        let base = penguin_base();
        for method in InferenceMethod::ALL {
            assert!(
                infer(&base, &f("p", &sig), &f("!f", &sig), method).unwrap(),
                "p |~ !f under {method}"
            );
            assert!(
                infer(&base, &f("b", &sig), &f("f", &sig), method).unwrap(),
                "b |~ f under {method}"
            );
        }
        // penguins that are not birds: lexicographic inference still
        // concludes they do not fly, system Z and p-entailment do not
        let a = f("p & !b", &sig);
        let nf = f("!f", &sig);
        assert!(!infer(&base, &a, &nf, InferenceMethod::SystemZ).unwrap());
        assert!(!infer(&base, &a, &nf, InferenceMethod::PEntailment).unwrap());
        assert!(infer(&base, &a, &nf, InferenceMethod::Lexicographic).unwrap());
    }

    #[test]
    fn lex_preorder_layers_for_penguin_base() {
        // violation vectors (most specific stratum first):
        // (0,0) < (0,1) < (1,0) < (2,0)
        let base = penguin_base();
        let t = base.lex_preorder().unwrap();
        assert_eq!(t.layer_sizes(), vec![3, 2, 2, 1]);
        let sig = sig_pbf();
        let layer_of = |text: &str| {
            t.layer_index_of(&World::parse(text, &sig).unwrap())
                .unwrap()
        };
        assert_eq!(layer_of("!p b f"), 0);
        assert_eq!(layer_of("!p !b f"), 0);
        assert_eq!(layer_of("!p !b !f"), 0);
        assert_eq!(layer_of("!p b !f"), 1);
        assert_eq!(layer_of("p b !f"), 1);
        assert_eq!(layer_of("p b f"), 2);
        assert_eq!(layer_of("p !b !f"), 2);
        assert_eq!(layer_of("p !b f"), 3);
    }

    #[test]
    fn unsatisfiable_antecedent_is_vacuously_inferred() {
        let sig = sig_pbf();
        let base = penguin_base();
        for method in InferenceMethod::ALL {
            assert!(infer(&base, &f("bot", &sig), &f("f", &sig), method).unwrap());
            assert!(infer(&base, &f("p & !p", &sig), &f("bot", &sig), method).unwrap());
        }
    }

    #[test]
    fn empty_base_infers_exactly_classical_entailment() {
        let sig = Signature::new(["a", "b"]).unwrap();
        let empty = BeliefBase::new(&sig, []).unwrap();
        let formulas: Vec<Formula> = (0..16u64)
            .map(|mask| {
                Formula::from_worlds(
                    &sig,
                    (0..4u64)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| World::from_index(&sig, i).unwrap()),
                )
                .unwrap()
            })
            .collect();
        for a in &formulas {
            for b in &formulas {
                let classical = a.entails(b).unwrap();
                for method in InferenceMethod::ALL {
                    assert_eq!(
                        infer(&empty, a, b, method).unwrap(),
                        classical,
                        "TV boundary at ({b} | {a}) under {method}"
                    );
                }
            }
        }
    }

    #[test]
    fn di_and_tv_reports() {
        let sig = sig_pbf();
        let base = penguin_base();
        let tv_pairs = [
            (f("p", &sig), f("p | b", &sig)),
            (f("p & b", &sig), f("f", &sig)),
            (f("bot", &sig), f("f", &sig)),
        ];
        for method in InferenceMethod::ALL {
            let report = check_di_tv(method, &base, &tv_pairs).unwrap();
            assert!(report.holds(), "DI/TV under {method}");
            assert_eq!(report.di_checked, 3);
            assert_eq!(report.tv_checked, 3);
        }

        let conflict =
            BeliefBase::new(&sig, [c("(b | p)", &sig), c("(!b | p)", &sig)]).unwrap();
        let report = check_di_tv(InferenceMethod::SystemZ, &conflict, &tv_pairs).unwrap();
        assert!(report.di_skipped_inconsistent);
        assert_eq!(report.di_checked, 0);
        // p-entailment stays total: an inconsistent base entails everything
        let report = check_di_tv(InferenceMethod::PEntailment, &conflict, &tv_pairs).unwrap();
        assert!(!report.di_skipped_inconsistent);
        assert!(report.di_violations.is_empty());
    }

    #[test]
    fn p_entailment_within_z_and_lex_on_small_bases() {
        // every p-entailed query is z- and lex-entailed; exhaustive over
        // single-conditional bases and a sample of queries at |Σ|=2
        let sig = Signature::new(["a", "b"]).unwrap();
        let formulas: Vec<Formula> = (0..16u64)
            .map(|mask| {
                Formula::from_worlds(
                    &sig,
                    (0..4u64)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| World::from_index(&sig, i).unwrap()),
                )
                .unwrap()
            })
            .collect();
        for ante in &formulas {
            for cons in &formulas {
                let base = BeliefBase::new(
                    &sig,
                    [Conditional::new(ante.clone(), cons.clone()).unwrap()],
                )
                .unwrap();
                if !base.is_consistent() {
                    continue;
                }
                for qa in &formulas {
                    for qb in &formulas {
                        if infer(&base, qa, qb, InferenceMethod::PEntailment).unwrap() {
                            assert!(
                                infer(&base, qa, qb, InferenceMethod::SystemZ).unwrap(),
                                "p ⊆ z at base ({cons}|{ante}), query ({qb}|{qa})"
                            );
                            assert!(
                                infer(&base, qa, qb, InferenceMethod::Lexicographic).unwrap(),
                                "p ⊆ lex at base ({cons}|{ante}), query ({qb}|{qa})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn duplicate_conditionals_are_dropped() {
        let sig = sig_pbf();
        let base = BeliefBase::new(
            &sig,
            [c("(f | b)", &sig), c("(f | b)", &sig), c("(b | p)", &sig)],
        )
        .unwrap();
        assert_eq!(base.len(), 2);
    }

    #[test]
    fn partition_minimality() {
        // each conditional is tolerated by the union of its own and higher
        // strata, and sits in the lowest such stratum
        let base = penguin_base();
        let zp = base.z_partition().unwrap();
        for (i, stratum) in zp.strata().iter().enumerate() {
            let upper: Vec<Conditional> = zp.strata()[i..].concat();
            for cond in stratum {
                assert!(tolerates(&upper, cond).unwrap());
            }
            if i > 0 {
                let from_prev: Vec<Conditional> = zp.strata()[i - 1..].concat();
                for cond in stratum {
                    assert!(!tolerates(&from_prev, cond).unwrap());
                }
            }
        }
    }
}
