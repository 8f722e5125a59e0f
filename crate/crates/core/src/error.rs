use crate::cyclic::{CyclicPermutation, Transposition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cyclic word is empty")]
    EmptyWord,
    #[error("cyclic word has {0} symbols; at most {max} are supported", max = crate::cyclic::MAX_SYMBOLS)]
    TooManySymbols(usize),
    #[error("symbol {0} is out of range")]
    SymbolOutOfRange(u8),
    #[error("symbol {0} occurs more than once")]
    DuplicateSymbol(u8),
    #[error("invalid symbol character {0:?}")]
    InvalidSymbolChar(char),
    #[error("a transposition needs two distinct symbols, got {0} twice")]
    DegenerateTransposition(u8),
    #[error("symbol {0} does not occur in the cyclic permutation")]
    SymbolNotPresent(u8),
    #[error("transposition {transposition} cannot be applied to {permutation}: symbols are not adjacent")]
    NotApplicable {
        transposition: Transposition,
        permutation: CyclicPermutation,
    },
    #[error("relabelling is not a bijection")]
    NotBijective,
    #[error("symbol {0} is outside the domain of the relabelling")]
    SymbolOutOfDomain(u8),

    #[error("{0} is not a rotation of the five black vertices")]
    NotWhiteRotation(CyclicPermutation),
    #[error("matrix shape mismatch: expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("drawing is not clean")]
    NotClean,
    #[error("rotation classes {first} and {second} do not cross uniformly")]
    InconsistentClassLabels {
        first: CyclicPermutation,
        second: CyclicPermutation,
    },
    #[error("key vertex {0} occurs more than once")]
    DuplicateKeyVertex(CyclicPermutation),
    #[error("label {0} is outside 0..=4")]
    LabelOutOfRange(u32),
    #[error("label matrix is not symmetric at ({0}, {1})")]
    AsymmetricLabels(usize, usize),

    #[error("drawing has {crossings} crossings, optimal is {optimal}")]
    NotOptimal { crossings: u64, optimal: u64 },
    #[error("white vertex count {0} is odd")]
    OddWhiteCount(usize),
    #[error("no reverse pair of rotations can be superimposed on this drawing")]
    NoCompatibleAntipodalPair,
    #[error("antipodal-free residual on {0} white vertices matches no D_(r,s)")]
    UnidentifiedResidual(usize),
}
