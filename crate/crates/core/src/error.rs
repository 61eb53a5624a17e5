use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("subset is not a subgroup: {0}")]
    NotClosed(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown generator `{name}`")]
    UnknownGenerator { name: String, line: usize, col: usize },
    #[error("presentation declares no generators")]
    EmptyGenerators,
    #[error("coset enumeration exceeded the limit of {limit} cosets")]
    CosetLimit { limit: usize },
    #[error("subgroup enumeration exceeded the limit of {limit} subgroups")]
    SubgroupLimit { limit: usize },
    #[error("subset of the lattice is not a sublattice")]
    NotSublattice,
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}
