//! Propositional substrate: signatures, worlds, and formulas represented by
//! their model sets.
//!
//! A formula is held in canonical disjunctive normal form, i.e. as the set
//! of its models over a fixed signature. Parsing therefore evaluates the
//! input text once against every world and discards the syntax; two formulas
//! are equal exactly when their model sets are equal. Belief sets are
//! deductively closed theories and carry the same representation.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Largest supported signature; operations enumerate all `2^n` worlds.
pub const MAX_ATOMS: usize = 16;

/// A finite, ordered set of distinct atom names.
///
/// Cheap to clone; equality compares atom lists.
#[derive(Clone)]
pub struct Signature(Arc<Vec<String>>);

impl Signature {
    /// Builds a signature from atom names, keeping the given order.
    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(Error::EmptySignature);
        }
        if atoms.len() > MAX_ATOMS {
            return Err(Error::SignatureTooLarge {
                atoms: atoms.len(),
                max: MAX_ATOMS,
            });
        }
        for (i, name) in atoms.iter().enumerate() {
            if !is_identifier(name) || name == "top" || name == "bot" {
                return Err(Error::InvalidAtomName(name.clone()));
            }
            if atoms[..i].contains(name) {
                return Err(Error::DuplicateAtom(name.clone()));
            }
        }
        Ok(Signature(Arc::new(atoms)))
    }

    pub fn atom_count(&self) -> usize {
        self.0.len()
    }

    /// Number of worlds, `2^|sig|`.
    pub fn world_count(&self) -> u64 {
        1u64 << self.0.len()
    }

    pub fn atom(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|a| a == name)
    }

    /// Sub-signature over the given atom positions (kept in signature order).
    pub fn sub_signature(&self, cell: &[usize]) -> Result<Signature> {
        if cell.is_empty() {
            return Err(Error::EmptyCell);
        }
        let mut sorted = cell.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != cell.len() || *sorted.last().unwrap() >= self.atom_count() {
            return Err(Error::InvalidPartition("bad atom positions".to_string()));
        }
        Signature::new(sorted.iter().map(|&i| self.atom(i)))
    }

    /// All worlds of the universe in ascending index order.
    pub fn worlds(&self) -> impl Iterator<Item = World> + '_ {
        (0..self.world_count()).map(move |i| World {
            sig: self.clone(),
            index: i,
        })
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Signature {}

impl core::hash::Hash for Signature {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature{:?}", self.0)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(a)?;
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Bit positions: atom 0 occupies the most significant bit of the world
/// index, so ascending indices read like a truth table with the first atom
/// varying slowest.
fn atom_bit(n: usize, atom: usize) -> u32 {
    (n - 1 - atom) as u32
}

/// Projects a world index onto the given atom positions (ascending order).
pub(crate) fn project_index(index: u64, n: usize, cell: &[usize]) -> u64 {
    let m = cell.len();
    let mut out = 0;
    for (j, &a) in cell.iter().enumerate() {
        out |= ((index >> atom_bit(n, a)) & 1) << atom_bit(m, j);
    }
    out
}

/// Places a sub-world's bits at the given atom positions, zeros elsewhere.
pub(crate) fn scatter_index(sub: u64, n: usize, cell: &[usize]) -> u64 {
    let m = cell.len();
    let mut out = 0;
    for (j, &a) in cell.iter().enumerate() {
        out |= ((sub >> atom_bit(m, j)) & 1) << atom_bit(n, a);
    }
    out
}

/// A truth assignment over a signature, canonically encoded as an index in
/// `[0, 2^|sig|)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct World {
    sig: Signature,
    index: u64,
}

impl World {
    pub fn from_index(sig: &Signature, index: u64) -> Result<World> {
        if index >= sig.world_count() {
            return Err(Error::WorldIndexOutOfRange {
                index,
                universe: sig.world_count(),
            });
        }
        Ok(World {
            sig: sig.clone(),
            index,
        })
    }

    /// Parses the world literal format: every atom of the signature in
    /// order, plain or `!`-prefixed, whitespace-separated, e.g. `a !b c`.
    pub fn parse(text: &str, sig: &Signature) -> Result<World> {
        parse::world(text, sig)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Truth value this world assigns to the atom at `position`.
    pub fn truth(&self, position: usize) -> bool {
        (self.index >> atom_bit(self.sig.atom_count(), position)) & 1 == 1
    }

    /// Whether this world is a model of the formula.
    pub fn satisfies(&self, f: &Formula) -> Result<bool> {
        if self.sig != f.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(f.models.contains(self.index))
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.sig.atom_count() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if !self.truth(i) {
                f.write_str("!")?;
            }
            f.write_str(self.sig.atom(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "World({self})")
    }
}

/// A propositional formula, represented by its set of models.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Formula {
    sig: Signature,
    models: Bits,
}

impl Formula {
    /// Parses formula text against the signature.
    ///
    /// Grammar: atoms `[a-zA-Z_][a-zA-Z0-9_]*`, `!` negation, `&`
    /// conjunction, `|` disjunction, `->` implication, `<->` equivalence,
    /// `top`, `bot`, parentheses. Precedence `! > & > | > -> > <->`,
    /// implications associate to the right.
    pub fn parse(text: &str, sig: &Signature) -> Result<Formula> {
        parse::formula(text, sig)
    }

    pub fn top(sig: &Signature) -> Formula {
        Formula {
            sig: sig.clone(),
            models: Bits::full(sig.world_count()),
        }
    }

    pub fn bottom(sig: &Signature) -> Formula {
        Formula {
            sig: sig.clone(),
            models: Bits::empty(sig.world_count()),
        }
    }

    pub fn atom(sig: &Signature, name: &str) -> Result<Formula> {
        let position = sig
            .atom_index(name)
            .ok_or_else(|| Error::UnknownAtom {
                name: name.to_string(),
                position: 0,
            })?;
        let n = sig.atom_count();
        let mut models = Bits::empty(sig.world_count());
        for i in 0..sig.world_count() {
            if (i >> atom_bit(n, position)) & 1 == 1 {
                models.insert(i);
            }
        }
        Ok(Formula {
            sig: sig.clone(),
            models,
        })
    }

    pub fn from_worlds<I>(sig: &Signature, worlds: I) -> Result<Formula>
    where
        I: IntoIterator<Item = World>,
    {
        let mut models = Bits::empty(sig.world_count());
        for w in worlds {
            if w.sig != *sig {
                return Err(Error::SignatureMismatch);
            }
            models.insert(w.index);
        }
        Ok(Formula {
            sig: sig.clone(),
            models,
        })
    }

    pub(crate) fn from_bits(sig: &Signature, models: Bits) -> Formula {
        debug_assert_eq!(models.len(), sig.world_count());
        Formula {
            sig: sig.clone(),
            models,
        }
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.models
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn models(&self) -> impl Iterator<Item = World> + '_ {
        self.models.iter().map(move |i| World {
            sig: self.sig.clone(),
            index: i,
        })
    }

    pub fn model_count(&self) -> u64 {
        self.models.count()
    }

    pub fn is_satisfiable(&self) -> bool {
        !self.models.is_empty()
    }

    pub fn is_tautology(&self) -> bool {
        self.models.count() == self.sig.world_count()
    }

    pub fn negated(&self) -> Formula {
        Formula {
            sig: self.sig.clone(),
            models: self.models.not(),
        }
    }

    pub fn and(&self, other: &Formula) -> Result<Formula> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(Formula {
            sig: self.sig.clone(),
            models: self.models.and(&other.models),
        })
    }

    pub fn or(&self, other: &Formula) -> Result<Formula> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(Formula {
            sig: self.sig.clone(),
            models: self.models.or(&other.models),
        })
    }

    /// Whether every model of `self` is a model of `other`.
    pub fn entails(&self, other: &Formula) -> Result<bool> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(self.models.subset_of(&other.models))
    }
}

impl fmt::Display for Formula {
    /// Canonical disjunctive normal form: worlds in ascending index order,
    /// literals in signature order; `top` and `bot` for the extremes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.models.is_empty() {
            return f.write_str("bot");
        }
        if self.is_tautology() {
            return f.write_str("top");
        }
        let n = self.sig.atom_count();
        for (k, index) in self.models.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            f.write_str("(")?;
            for i in 0..n {
                if i > 0 {
                    f.write_str(" & ")?;
                }
                if (index >> atom_bit(n, i)) & 1 == 0 {
                    f.write_str("!")?;
                }
                f.write_str(self.sig.atom(i))?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula({self})")
    }
}

/// A deductively closed theory, determined by its model set.
///
/// The inconsistent theory (empty model set) is a first-class value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BeliefSet {
    sig: Signature,
    models: Bits,
}

impl BeliefSet {
    /// The theory of a set of worlds: all formulas true in every member.
    pub fn theory<I>(sig: &Signature, worlds: I) -> Result<BeliefSet>
    where
        I: IntoIterator<Item = World>,
    {
        let f = Formula::from_worlds(sig, worlds)?;
        Ok(BeliefSet {
            sig: f.sig,
            models: f.models,
        })
    }

    /// Deductive closure of a list of formulas: the model set is the
    /// intersection of the members' model sets. An empty list yields the
    /// tautology theory.
    pub fn closure_of(sig: &Signature, formulas: &[Formula]) -> Result<BeliefSet> {
        let mut models = Bits::full(sig.world_count());
        for f in formulas {
            if f.sig != *sig {
                return Err(Error::SignatureMismatch);
            }
            models = models.and(&f.models);
        }
        Ok(BeliefSet {
            sig: sig.clone(),
            models,
        })
    }

    pub fn from_formula(f: &Formula) -> BeliefSet {
        BeliefSet {
            sig: f.sig.clone(),
            models: f.models.clone(),
        }
    }

    pub(crate) fn from_bits(sig: &Signature, models: Bits) -> BeliefSet {
        debug_assert_eq!(models.len(), sig.world_count());
        BeliefSet {
            sig: sig.clone(),
            models,
        }
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.models
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn models(&self) -> impl Iterator<Item = World> + '_ {
        self.models.iter().map(move |i| World {
            sig: self.sig.clone(),
            index: i,
        })
    }

    pub fn model_count(&self) -> u64 {
        self.models.count()
    }

    pub fn is_consistent(&self) -> bool {
        !self.models.is_empty()
    }

    /// Membership: a formula belongs to the theory iff it holds in every
    /// model of the theory.
    pub fn contains(&self, f: &Formula) -> Result<bool> {
        if self.sig != f.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(self.models.subset_of(&f.models))
    }

    /// The characteristic formula of the theory (its CDNF).
    pub fn to_formula(&self) -> Formula {
        Formula {
            sig: self.sig.clone(),
            models: self.models.clone(),
        }
    }
}

impl fmt::Display for BeliefSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_formula().fmt(f)
    }
}

impl fmt::Debug for BeliefSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BeliefSet({self})")
    }
}

/// A defeasible rule "if A then usually B", written `(B | A)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Conditional {
    antecedent: Formula,
    consequent: Formula,
}

/// Three-valued evaluation of a conditional at a world.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConditionalEval {
    /// The world satisfies antecedent and consequent.
    Verifies,
    /// The world satisfies the antecedent but not the consequent.
    Falsifies,
    /// The world does not satisfy the antecedent.
    NotApplicable,
}

impl Conditional {
    pub fn new(antecedent: Formula, consequent: Formula) -> Result<Conditional> {
        if antecedent.sig != consequent.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(Conditional {
            antecedent,
            consequent,
        })
    }

    /// Parses `(B | A)` where the conditional bar is the single
    /// parenthesis-free `|` of the line; B and A use the formula grammar.
    pub fn parse(text: &str, sig: &Signature) -> Result<Conditional> {
        parse::conditional(text, sig)
    }

    pub fn antecedent(&self) -> &Formula {
        &self.antecedent
    }

    pub fn consequent(&self) -> &Formula {
        &self.consequent
    }

    pub fn signature(&self) -> &Signature {
        &self.antecedent.sig
    }

    pub fn evaluate(&self, w: &World) -> Result<ConditionalEval> {
        if w.sig != self.antecedent.sig {
            return Err(Error::SignatureMismatch);
        }
        if !self.antecedent.models.contains(w.index) {
            Ok(ConditionalEval::NotApplicable)
        } else if self.consequent.models.contains(w.index) {
            Ok(ConditionalEval::Verifies)
        } else {
            Ok(ConditionalEval::Falsifies)
        }
    }

    /// Models of `A & B`.
    pub(crate) fn verification_bits(&self) -> Bits {
        self.antecedent.models.and(&self.consequent.models)
    }

    /// Models of `A & !B`.
    pub(crate) fn falsification_bits(&self) -> Bits {
        self.antecedent.models.minus(&self.consequent.models)
    }
}

impl fmt::Display for Conditional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(f: &mut fmt::Formatter<'_>, x: &Formula) -> fmt::Result {
            // keep the conditional bar the unique top-level `|`
            if x.model_count() >= 2 && !x.is_tautology() {
                write!(f, "({x})")
            } else {
                write!(f, "{x}")
            }
        }
        f.write_str("(")?;
        side(f, &self.consequent)?;
        f.write_str(" | ")?;
        side(f, &self.antecedent)?;
        f.write_str(")")
    }
}

impl fmt::Debug for Conditional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Conditional{self}")
    }
}

mod parse {
    use super::*;

    #[derive(Clone, PartialEq, Debug)]
    enum Tok {
        Ident(String),
        Bang,
        Amp,
        Pipe,
        Arrow,
        Iff,
        LParen,
        RParen,
    }

    fn err(position: usize, message: &str) -> Error {
        Error::Syntax {
            position,
            message: message.to_string(),
        }
    }

    fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
        let bytes = text.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\r' | '\n' => i += 1,
                '!' => {
                    toks.push((i, Tok::Bang));
                    i += 1;
                }
                '&' => {
                    toks.push((i, Tok::Amp));
                    i += 1;
                }
                '|' => {
                    toks.push((i, Tok::Pipe));
                    i += 1;
                }
                '(' => {
                    toks.push((i, Tok::LParen));
                    i += 1;
                }
                ')' => {
                    toks.push((i, Tok::RParen));
                    i += 1;
                }
                '-' => {
                    if bytes.get(i + 1) == Some(&b'>') {
                        toks.push((i, Tok::Arrow));
                        i += 2;
                    } else {
                        return Err(err(i, "expected `->`"));
                    }
                }
                '<' => {
                    if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                        toks.push((i, Tok::Iff));
                        i += 3;
                    } else {
                        return Err(err(i, "expected `<->`"));
                    }
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < bytes.len()
                        && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    toks.push((start, Tok::Ident(text[start..i].to_string())));
                }
                _ => return Err(err(i, "unexpected character")),
            }
        }
        Ok(toks)
    }

    struct Parser<'a> {
        toks: Vec<(usize, Tok)>,
        pos: usize,
        sig: &'a Signature,
        end: usize,
    }

    impl<'a> Parser<'a> {
        fn peek(&self) -> Option<&Tok> {
            self.toks.get(self.pos).map(|(_, t)| t)
        }

        fn bump(&mut self) -> Option<(usize, Tok)> {
            let t = self.toks.get(self.pos).cloned();
            self.pos += 1;
            t
        }

        fn eat(&mut self, want: &Tok, what: &str) -> Result<()> {
            match self.bump() {
                Some((_, t)) if t == *want => Ok(()),
                Some((p, _)) => Err(err(p, what)),
                None => Err(err(self.end, what)),
            }
        }

        fn iff(&mut self) -> Result<Bits> {
            let lhs = self.implication()?;
            if self.peek() == Some(&Tok::Iff) {
                self.bump();
                let rhs = self.iff()?;
                return Ok(lhs.and(&rhs).or(&lhs.not().and(&rhs.not())));
            }
            Ok(lhs)
        }

        fn implication(&mut self) -> Result<Bits> {
            let lhs = self.disjunction()?;
            if self.peek() == Some(&Tok::Arrow) {
                self.bump();
                let rhs = self.implication()?;
                return Ok(lhs.not().or(&rhs));
            }
            Ok(lhs)
        }

        fn disjunction(&mut self) -> Result<Bits> {
            let mut acc = self.conjunction()?;
            while self.peek() == Some(&Tok::Pipe) {
                self.bump();
                acc = acc.or(&self.conjunction()?);
            }
            Ok(acc)
        }

        fn conjunction(&mut self) -> Result<Bits> {
            let mut acc = self.negation()?;
            while self.peek() == Some(&Tok::Amp) {
                self.bump();
                acc = acc.and(&self.negation()?);
            }
            Ok(acc)
        }

        fn negation(&mut self) -> Result<Bits> {
            if self.peek() == Some(&Tok::Bang) {
                self.bump();
                return Ok(self.negation()?.not());
            }
            self.atomic()
        }

        fn atomic(&mut self) -> Result<Bits> {
            match self.bump() {
                Some((_, Tok::LParen)) => {
                    let inner = self.iff()?;
                    self.eat(&Tok::RParen, "expected `)`")?;
                    Ok(inner)
                }
                Some((p, Tok::Ident(name))) => match name.as_str() {
                    "top" => Ok(Bits::full(self.sig.world_count())),
                    "bot" => Ok(Bits::empty(self.sig.world_count())),
                    _ => match self.sig.atom_index(&name) {
                        Some(i) => Ok(Formula::atom(self.sig, self.sig.atom(i))
                            .expect("atom exists")
                            .models),
                        None => Err(Error::UnknownAtom { name, position: p }),
                    },
                },
                Some((p, _)) => Err(err(p, "expected formula")),
                None => Err(err(self.end, "unexpected end of input")),
            }
        }
    }

    pub(super) fn formula(text: &str, sig: &Signature) -> Result<Formula> {
        let mut parser = Parser {
            toks: tokenize(text)?,
            pos: 0,
            sig,
            end: text.len(),
        };
        let models = parser.iff()?;
        if let Some((p, _)) = parser.toks.get(parser.pos) {
            return Err(err(*p, "trailing input after formula"));
        }
        Ok(Formula::from_bits(sig, models))
    }

    /// `(B | A)`: the split happens at the unique parenthesis-free `|`.
    pub(super) fn conditional(text: &str, sig: &Signature) -> Result<Conditional> {
        let trimmed = text.trim();
        let offset = text.len() - text.trim_start().len();
        if !trimmed.starts_with('(') || !trimmed.ends_with(')') {
            return Err(err(offset, "conditional must be written `(B | A)`"));
        }
        let inner = &trimmed[1..trimmed.len() - 1];
        let inner_offset = offset + 1;
        let mut depth = 0usize;
        let mut split = None;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    if depth == 0 {
                        return Err(err(inner_offset + i, "unbalanced parentheses"));
                    }
                    depth -= 1;
                }
                '|' if depth == 0 => {
                    if split.is_some() {
                        return Err(err(
                            inner_offset + i,
                            "ambiguous conditional: parenthesize the sides",
                        ));
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        let split =
            split.ok_or_else(|| err(inner_offset, "conditional must contain a top-level `|`"))?;
        let consequent = formula(&inner[..split], sig)?;
        let antecedent = formula(&inner[split + 1..], sig)?;
        Conditional::new(antecedent, consequent)
    }

    pub(super) fn world(text: &str, sig: &Signature) -> Result<World> {
        let toks = tokenize(text)?;
        let n = sig.atom_count();
        let mut index = 0u64;
        let mut pos = 0usize;
        for atom in 0..n {
            let mut value = true;
            if let Some((_, Tok::Bang)) = toks.get(pos) {
                value = false;
                pos += 1;
            }
            match toks.get(pos) {
                Some((p, Tok::Ident(name))) => {
                    if name != sig.atom(atom) {
                        return Err(err(
                            *p,
                            "world literal must list the signature atoms in order",
                        ));
                    }
                    pos += 1;
                }
                Some((p, _)) => return Err(err(*p, "expected atom")),
                None => return Err(err(text.len(), "world literal ended early")),
            }
            if value {
                index |= 1 << atom_bit(n, atom);
            }
        }
        if let Some((p, _)) = toks.get(pos) {
            return Err(err(*p, "trailing input after world literal"));
        }
        World::from_index(sig, index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig_ab() -> Signature {
        Signature::new(["a", "b"]).unwrap()
    }

    fn f(text: &str, sig: &Signature) -> Formula {
        Formula::parse(text, sig).unwrap()
    }

    fn w(text: &str, sig: &Signature) -> World {
        World::parse(text, sig).unwrap()
    }

    #[test]
    fn signature_validation() {
        assert_eq!(Signature::new(Vec::<String>::new()), Err(Error::EmptySignature));
        assert!(matches!(
            Signature::new(["a", "a"]),
            Err(Error::DuplicateAtom(_))
        ));
        assert!(matches!(
            Signature::new(["top"]),
            Err(Error::InvalidAtomName(_))
        ));
        assert!(matches!(
            Signature::new(["1x"]),
            Err(Error::InvalidAtomName(_))
        ));
        let too_many: Vec<String> = (0..17).map(|i| alloc::format!("x{i}")).collect();
        assert!(matches!(
            Signature::new(too_many),
            Err(Error::SignatureTooLarge { .. })
        ));
    }

    #[test]
    fn parse_xor_formula() {
        let sig = sig_ab();
        let xor = f("(a & !b) | (!a & b)", &sig);
        let expected = Formula::from_worlds(&sig, [w("a !b", &sig), w("!a b", &sig)]).unwrap();
        assert_eq!(xor, expected);
        assert_eq!(xor.model_count(), 2);
    }

    #[test]
    fn parse_top_and_contradiction() {
        let sig = sig_ab();
        assert_eq!(f("top", &sig).model_count(), 4);
        assert_eq!(f("a & !a", &sig).model_count(), 0);
        assert!(!f("a & !a", &sig).is_satisfiable());
    }

    #[test]
    fn parse_precedence_and_associativity() {
        let sig = Signature::new(["a", "b", "c"]).unwrap();
        assert_eq!(f("a -> b -> c", &sig), f("a -> (b -> c)", &sig));
        assert_eq!(f("!a & b | c", &sig), f("((!a) & b) | c", &sig));
        assert_eq!(f("a | b -> c", &sig), f("(a | b) -> c", &sig));
        assert_eq!(f("a <-> b -> c", &sig), f("a <-> (b -> c)", &sig));
        assert_eq!(f("a <-> b", &sig), f("(a & b) | (!a & !b)", &sig));
    }

    #[test]
    fn parse_errors_report_positions() {
        let sig = sig_ab();
        match Formula::parse("a & c", &sig) {
            Err(Error::UnknownAtom { name, position }) => {
                assert_eq!(name, "c");
                assert_eq!(position, 4);
            }
            other => panic!("expected unknown atom, got {other:?}"),
        }
        match Formula::parse("a &", &sig) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(Formula::parse("a ) b", &sig).is_err());
    }

    #[test]
    fn models_relation() {
        let sig = sig_ab();
        let xor = f("(a & !b) | (!a & b)", &sig);
        assert!(w("a !b", &sig).satisfies(&xor).unwrap());
        assert!(!w("a b", &sig).satisfies(&xor).unwrap());
        for world in sig.worlds() {
            assert!(world.satisfies(&Formula::top(&sig)).unwrap());
            assert!(!world.satisfies(&Formula::bottom(&sig)).unwrap());
        }
        let other = Signature::new(["x", "y"]).unwrap();
        assert_eq!(
            w("x y", &other).satisfies(&xor),
            Err(Error::SignatureMismatch)
        );
    }

    #[test]
    fn entailment() {
        let sig = sig_ab();
        assert!(f("a & b", &sig).entails(&f("a", &sig)).unwrap());
        assert!(!f("a", &sig).entails(&f("a & b", &sig)).unwrap());
        assert!(f("bot", &sig).entails(&f("a & !a", &sig)).unwrap());
        // mutual entailment coincides with equality of model sets
        let g = f("!(!a)", &sig);
        let h = f("a", &sig);
        assert!(g.entails(&h).unwrap() && h.entails(&g).unwrap());
        assert_eq!(g, h);
    }

    #[test]
    fn theory_of_worlds() {
        let sig = Signature::new(["c", "d"]).unwrap();
        let k = BeliefSet::theory(&sig, [w("c d", &sig), w("!c d", &sig)]).unwrap();
        assert_eq!(k, BeliefSet::from_formula(&f("d", &sig)));
        assert!(k.contains(&f("d", &sig)).unwrap());
        assert!(!k.contains(&f("c", &sig)).unwrap());

        let taut = BeliefSet::theory(&sig, sig.worlds()).unwrap();
        assert!(taut.contains(&f("top", &sig)).unwrap());
        assert!(!taut.contains(&f("d", &sig)).unwrap());

        let inconsistent = BeliefSet::theory(&sig, []).unwrap();
        assert!(inconsistent.contains(&f("bot", &sig)).unwrap());
        assert!(!inconsistent.is_consistent());
    }

    #[test]
    fn closure_intersects_models() {
        let sig = sig_ab();
        let k = BeliefSet::closure_of(&sig, &[f("(a & !b) | (!a & b)", &sig)]).unwrap();
        assert_eq!(k.model_count(), 2);

        let empty = BeliefSet::closure_of(&sig, &[]).unwrap();
        assert!(empty.is_consistent());
        assert_eq!(empty.model_count(), 4);

        let contradiction =
            BeliefSet::closure_of(&sig, &[f("a", &sig), f("!a", &sig)]).unwrap();
        assert!(!contradiction.is_consistent());
    }

    #[test]
    fn conditional_three_valued_evaluation() {
        let sig = sig_ab();
        let c = Conditional::new(f("a", &sig), f("b", &sig)).unwrap();
        assert_eq!(c.evaluate(&w("a b", &sig)).unwrap(), ConditionalEval::Verifies);
        assert_eq!(
            c.evaluate(&w("a !b", &sig)).unwrap(),
            ConditionalEval::Falsifies
        );
        assert_eq!(
            c.evaluate(&w("!a b", &sig)).unwrap(),
            ConditionalEval::NotApplicable
        );
        // the three cases partition the universe
        for world in sig.worlds() {
            let _ = c.evaluate(&world).unwrap();
        }
    }

    #[test]
    fn conditional_parse_and_display() {
        let sig = sig_ab();
        let c = Conditional::parse("(b | a)", &sig).unwrap();
        assert_eq!(c.antecedent(), &f("a", &sig));
        assert_eq!(c.consequent(), &f("b", &sig));

        let c2 = Conditional::parse("((a & b) | (a | b))", &sig).unwrap();
        assert_eq!(c2.antecedent(), &f("a | b", &sig));

        // round-trip through Display
        let printed = alloc::format!("{c2}");
        let reparsed = Conditional::parse(&printed, &sig).unwrap();
        assert_eq!(c2, reparsed);

        assert!(Conditional::parse("(a | b | a)", &sig).is_err());
        assert!(Conditional::parse("b | a", &sig).is_err());
    }

    #[test]
    fn cdnf_printing_is_canonical() {
        let sig = sig_ab();
        let xor = f("(!a & b) | (a & !b)", &sig);
        assert_eq!(alloc::format!("{xor}"), "(!a & b) | (a & !b)");
        assert_eq!(alloc::format!("{}", f("top", &sig)), "top");
        assert_eq!(alloc::format!("{}", f("a & !a", &sig)), "bot");
        // printing round-trips
        let reparsed = f(&alloc::format!("{xor}"), &sig);
        assert_eq!(reparsed, xor);
    }

    #[test]
    fn world_literals_round_trip() {
        let sig = Signature::new(["x", "y", "z"]).unwrap();
        for world in sig.worlds() {
            let text = alloc::format!("{world}");
            assert_eq!(World::parse(&text, &sig).unwrap(), world);
        }
        assert!(World::parse("x y", &sig).is_err());
        assert!(World::parse("y x z", &sig).is_err());
        assert!(World::parse("x y z w", &sig).is_err());
    }

    #[test]
    fn world_index_convention() {
        // atom 0 is the most significant bit
        let sig = sig_ab();
        assert_eq!(w("!a !b", &sig).index(), 0);
        assert_eq!(w("!a b", &sig).index(), 1);
        assert_eq!(w("a !b", &sig).index(), 2);
        assert_eq!(w("a b", &sig).index(), 3);
        assert!(w("a !b", &sig).truth(0));
        assert!(!w("a !b", &sig).truth(1));
    }

    #[test]
    fn projection_and_scatter() {
        // over {a,b,c}: project ab!c onto {a,c} gives a!c
        let idx = 0b110u64; // a b !c
        assert_eq!(project_index(idx, 3, &[0, 2]), 0b10);
        assert_eq!(project_index(idx, 3, &[1]), 0b1);
        assert_eq!(scatter_index(0b10, 3, &[0, 2]), 0b100);
        let combined = scatter_index(0b1, 3, &[1]) | scatter_index(0b10, 3, &[0, 2]);
        assert_eq!(combined, idx);
    }
}
