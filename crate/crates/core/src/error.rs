use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("not a polynomial in q: {0}")]
    NotPolynomial(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown algebra `{0}` (expected A2, C2 or G2)")]
    UnknownAlgebra(String),
    #[error("generator index t_{{{row}{col}}} out of range for a {size}x{size} matrix")]
    GeneratorIndex { row: usize, col: usize, size: usize },
    #[error("tuple {tuple:?} has length {len}, expected {expected}")]
    TupleLength { tuple: Vec<i32>, len: usize, expected: usize },
    #[error("empty weight block {0:?}")]
    EmptyBlock((i32, i32)),
    #[error("sigma image is not diagonal: {0}")]
    SigmaNotDiagonal(String),
    #[error("linear system for block {block:?} is rank deficient (rank {rank} < {cols})")]
    RankDeficient { block: (i32, i32), rank: usize, cols: usize },
    #[error("linear system for block {block:?} is inconsistent")]
    Inconsistent { block: (i32, i32) },
    #[error("slot typing contradiction: {0}")]
    SlotTyping(String),
    #[error("{0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
