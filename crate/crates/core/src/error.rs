use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("not divisible by t")]
    NotDivisibleByT,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not symplectic: generator {0} does not preserve the form")]
    NotSymplectic(usize),
    #[error("group not finite within bound {0}")]
    GroupTooLarge(usize),
    #[error("element is not a symplectic reflection")]
    NotAReflection,
    #[error("symplectically reducible action; m_i undefined for orbit {0}")]
    ReducibleAction(usize),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("unknown coset {0}")]
    UnknownCoset(usize),
    #[error("element is not H-invariant")]
    NotInvariant,
    #[error("matrix-unit relations fail: {0}")]
    MatrixUnits(String),
    #[error("action is not by automorphisms: {0}")]
    NotAutomorphism(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("Leibniz rule fails: {0}")]
    NotDerivation(String),
    #[error("bimodule axioms fail: {0}")]
    BimoduleAxioms(String),
    #[error("algebra mismatch")]
    AlgebraMismatch,
    #[error("inputs not central at t=0")]
    NotCentral,
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("invalid root data: {0}")]
    RootData(String),
    #[error("no consistent conversion scalar: {0}")]
    Convention(String),
    #[error("invalid representation: {0}")]
    Representation(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("base point not in the required stratum: {0}")]
    BadBasePoint(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
