use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("invalid group spec `{0}`")]
    InvalidGroup(String),

    #[error("simple reflection index {index} out of range (semisimple rank {rank})")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("subspace basis is linearly dependent")]
    DependentBasis,

    #[error("expected a polytope, got a polyhedron with recession directions")]
    NotPolytope,

    #[error("expected a cone (apex at the origin)")]
    NotCone,

    #[error("root systems differ: {0} vs {1}")]
    MismatchedGroups(String, String),

    #[error("{0}")]
    Domain(String),

    /// A case outside the implemented theory; `needs` names the missing result.
    #[error("unsupported case: {what}; would need {needs}")]
    Unsupported { what: String, needs: String },
}

impl Error {
    pub fn is_unsupported(&self) -> bool {
        matches!(self, Error::Unsupported { .. })
    }

    pub(crate) fn shape(expected: usize, found: usize) -> Self {
        Error::Shape { expected, found }
    }

    pub(crate) fn unsupported(what: impl Into<String>, needs: impl Into<String>) -> Self {
        Error::Unsupported {
            what: what.into(),
            needs: needs.into(),
        }
    }
}
