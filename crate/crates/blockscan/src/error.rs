use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty set")]
    EmptySet,
    #[error("negative element {0}")]
    NegativeElement(i64),
    #[error("universe bound exceeded: need {needed} bits, cap is {cap}")]
    UniverseExceeded { needed: u64, cap: u64 },
    #[error("ap_difference is undefined for a singleton")]
    SingletonDifference,
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("below threshold: {0}")]
    BelowThreshold(String),
    #[error("family ordering violated: {0}")]
    FamilyOrdering(String),
    #[error("set is contained in an arithmetic progression with difference {0} > 1")]
    NotPrimitive(u64),
    #[error("element {element} outside box [0,{bound}]")]
    OutsideBox { element: u64, bound: u64 },
    #[error("family size mismatch: expected {expected}, got {got}")]
    FamilySize { expected: usize, got: usize },
    #[error("enumeration cap exceeded: {count} items, cap is {cap}")]
    CapExceeded { count: u128, cap: u64 },
    #[error("rejection budget exhausted: spec unsatisfiable or nearly so")]
    RejectionBudget,
    #[error("bad instance: {0}")]
    BadInstance(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
