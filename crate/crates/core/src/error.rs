use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix data has {got} entries, expected {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, got: usize },

    #[error("resultant of two zero polynomials is undefined")]
    BothZero,

    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("divisor must have leading coefficient +1 or -1")]
    NonMonicDivisor,

    #[error("n must be at least 1")]
    ZeroModulus,

    #[error("0/0 is not a rational number")]
    IndeterminateRational,

    #[error("cannot parse {0:?} as a rational (expected p/q, an integer, or inf)")]
    ParseRational(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("zero exponent on generator {0}")]
    ZeroExponent(usize),

    #[error("generator {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },

    #[error("the rewritten cyclic relator requires s != 0")]
    ZeroTwist,

    #[error("the cyclic route requires the second coefficient to be 1/s, got {0}")]
    NotCyclicCoefficient(String),

    #[error("({0}, {1}) are not coprime")]
    NotCoprime(i64, i64),

    #[error("b({0},{1}) is a two-component link; only knots (odd alpha) are supported here")]
    NotAKnotTwoBridge(i64, i64),

    #[error("empty Conway form")]
    EmptyConwayForm,

    #[error("invalid braid letter {0:?} (expected one of 1, -1, 2, -2)")]
    BadBraidLetter(String),

    #[error("braid closure is not a knot: permutation {permutation:?} has cycle type {cycle_type:?}")]
    BraidNotKnot {
        permutation: [usize; 3],
        cycle_type: Vec<usize>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
