//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("root of unity order {order} does not divide cyclotomic modulus {modulus}")]
    IncompatibleModulus { order: u64, modulus: u64 },
    #[error("cyclotomic modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("zero or negative exponent step in geometric factor (C = {0})")]
    ZeroDenominatorPattern(String),
    #[error("exponent {exponent} is not a multiple of 1/{step}")]
    OffGrid { exponent: String, step: u64 },
    #[error("series term at {exponent} falls below the truncation window")]
    BelowWindow { exponent: String },
    #[error("window does not contain the support with a guard margin of 1")]
    InsufficientGuard,
    #[error("nonzero coefficient {coeff} at {exponent} outside the certified support")]
    TruncationLeak { exponent: String, coeff: String },
    #[error("averaged coefficient {coeff} at {exponent} has denominator not dividing the group order {order}")]
    BadAveragedDenominator {
        exponent: String,
        coeff: String,
        order: u64,
    },
    #[error("sector multiplicity {value} at exponent {exponent} is not a non-negative integer")]
    BadSectorMultiplicity { exponent: String, value: String },
    #[error("generator {element} is not special linear (angle sum {sum} is not an integer)")]
    NotSpecialLinear { element: String, sum: String },
    #[error("group closure exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("angle denominator exceeds the supported bound")]
    DenominatorTooLarge,
    #[error("coordinate index {index} out of range for dimension {n}")]
    BadCoordinate { index: usize, n: usize },
    #[error("subset {sub:#b} is not contained in {sup:#b}")]
    NotNested { sub: u32, sup: u32 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomial has no terms")]
    EmptyPolynomial,
    #[error("polynomial is not weighted homogeneous (inconsistent degree equations)")]
    NotWeightedHomogeneous,
    #[error("weights are underdetermined; free coordinates: {free:?}")]
    AmbiguousWeights { free: Vec<usize> },
    #[error("weight w_{index} = {value} is outside (0, 1)")]
    InvalidWeight { index: usize, value: String },
    #[error("polynomial is not invariant: element {element} moves monomial {monomial}")]
    NotInvariant { element: String, monomial: String },
    #[error("Milnor number {value} is not a positive integer; invalid weight system")]
    InvalidMilnor { value: String },
    #[error("Hodge sign violation at (p, q) = ({p}, {q}): coefficient {coeff}")]
    HodgeSign { p: String, q: String, coeff: String },
    #[error("{name}: routes disagree ({left} vs {right})")]
    RouteMismatch {
        name: String,
        left: String,
        right: String,
    },
    #[error("a = {a} is divisible by r = {r}; cotangent term undefined")]
    DedekindDomain { a: i64, r: u64 },
    #[error("alpha = ({0}, {1}, {2}) is not hyperbolic (1/a1 + 1/a2 + 1/a3 >= 1)")]
    NotHyperbolic(u64, u64, u64),
    #[error("gamma value {alpha}/{index} for coordinate {coord} is not an integer")]
    NonIntegralGamma { alpha: u64, index: u64, coord: usize },
}
