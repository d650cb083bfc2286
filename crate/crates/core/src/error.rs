use alloc::string::String;
use core::fmt;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by constructors and operations.
///
/// Every operation that combines two values checks that they live over the
/// same signature; `SignatureMismatch` is the common failure mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A signature needs at least one atom.
    EmptySignature,
    /// Signatures are capped so the universe stays exhaustively enumerable.
    SignatureTooLarge { atoms: usize, max: usize },
    /// Atom names must be unique within a signature.
    DuplicateAtom(String),
    /// Atom names must be identifiers and must not shadow `top`/`bot`.
    InvalidAtomName(String),
    /// The operands live over different signatures.
    SignatureMismatch,
    /// A world index outside `[0, 2^|sig|)`.
    WorldIndexOutOfRange { index: u64, universe: u64 },
    /// Formula or world text failed to parse; `position` is a byte offset.
    Syntax { position: usize, message: String },
    /// An atom in the input does not occur in the signature.
    UnknownAtom { name: String, position: usize },
    /// A ranking function must map at least one world to rank 0.
    NoRankZeroWorld,
    /// A ranking function must rank every world of the universe.
    WrongRankCount { expected: u64, got: u64 },
    /// Total preorder layers must partition the universe into non-empty sets.
    InvalidLayers(String),
    /// Signature partition cells must be disjoint, non-empty, and covering.
    InvalidPartition(String),
    /// A transformation table must be a bijection between the universes.
    NotABijection,
    /// Model transformations require equal-sized signatures.
    SizeMismatch,
    /// `compose(outer, inner)` requires `inner.target() == outer.source()`.
    CompositionMismatch,
    /// An exhaustive search was requested above its documented size bound.
    UniverseTooLarge { worlds: u64, max: u64 },
    /// Revision or update input must be satisfiable.
    UnsatisfiableInput,
    /// Contraction input must not be a tautology.
    TautologicalInput,
    /// The operation requires a consistent belief set.
    InconsistentBeliefSet,
    /// The operation requires a belief base with a tolerance partition.
    InconsistentBase,
    /// A partition cell (or marginalization target) must be non-empty.
    EmptyCell,
    /// `find_splitting` sizes must be positive and sum to the signature size.
    InvalidSizes,
    /// An operator or method identifier that the harness does not know.
    UnknownOperator(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySignature => write!(f, "signature must contain at least one atom"),
            Error::SignatureTooLarge { atoms, max } => {
                write!(f, "signature has {atoms} atoms, maximum is {max}")
            }
            Error::DuplicateAtom(name) => write!(f, "duplicate atom `{name}` in signature"),
            Error::InvalidAtomName(name) => write!(f, "invalid atom name `{name}`"),
            Error::SignatureMismatch => write!(f, "operands live over different signatures"),
            Error::WorldIndexOutOfRange { index, universe } => {
                write!(f, "world index {index} outside universe of size {universe}")
            }
            Error::Syntax { position, message } => {
                write!(f, "syntax error at byte {position}: {message}")
            }
            Error::UnknownAtom { name, position } => {
                write!(f, "unknown atom `{name}` at byte {position}")
            }
            Error::NoRankZeroWorld => write!(f, "ranking function has no world of rank 0"),
            Error::WrongRankCount { expected, got } => {
                write!(f, "expected {expected} world ranks, got {got}")
            }
            Error::InvalidLayers(msg) => write!(f, "invalid preorder layers: {msg}"),
            Error::InvalidPartition(msg) => write!(f, "invalid signature partition: {msg}"),
            Error::NotABijection => write!(f, "transformation table is not a bijection"),
            Error::SizeMismatch => {
                write!(f, "model transformations require equal-sized signatures")
            }
            Error::CompositionMismatch => {
                write!(f, "composition requires inner target to equal outer source")
            }
            Error::UniverseTooLarge { worlds, max } => {
                write!(f, "universe of {worlds} worlds exceeds search bound {max}")
            }
            Error::UnsatisfiableInput => write!(f, "input formula is unsatisfiable"),
            Error::TautologicalInput => write!(f, "input formula is a tautology"),
            Error::InconsistentBeliefSet => write!(f, "belief set is inconsistent"),
            Error::InconsistentBase => write!(f, "belief base admits no tolerance partition"),
            Error::EmptyCell => write!(f, "cell must contain at least one atom"),
            Error::InvalidSizes => write!(f, "cell sizes must be positive and cover the signature"),
            Error::UnknownOperator(name) => write!(f, "unknown operator `{name}`"),
        }
    }
}

impl core::error::Error for Error {}
