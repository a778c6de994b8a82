use alloc::string::String;

/// Errors raised by constructors and by operations whose preconditions fail.
/// Axiom checkers never error; they return itemized reports instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("malformed scalar {0:?}")]
    BadScalar(String),
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("ideal is not stable under the coaction: {0}")]
    NotStable(String),
    #[error("quotient by the whole algebra collapses the unit")]
    UnitCollapse,
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("not an algebra morphism: {0}")]
    NotAlgebraMorphism(String),
    #[error("not a Hopf algebra morphism: {0}")]
    NotHopfMorphism(String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("not a Hopf subalgebra: {0}")]
    NotHopfSubalgebra(String),
    #[error("unsupported over {0}: cosemisimplicity is only decided in characteristic 0")]
    UnsupportedField(String),
    #[error("subalgebra is not contained in the coinvariants")]
    NotCoinvariant,
    #[error("canonical map is not surjective (rank {rank}, target dimension {target})")]
    NotSurjective { rank: usize, target: usize },
    #[error("element is not in the kernel of multiplication")]
    NotInKernel,
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("grading is not multiplicative: e{0}·e{1} has a component on e{2} of the wrong degree")]
    NonMultiplicativeGrading(usize, usize, usize),
    #[error("characteristic 2 is not allowed here")]
    CharacteristicTwo,
    #[error("bad root of unity: {0}")]
    BadRoot(String),
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("seed incompatibility: {0}")]
    SeedIncompatible(String),
    #[error("missing witness: {0}")]
    MissingWitness(String),
}
