use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate tetrahedron{}: det J = {det:e}", tet.map(|t| format!(" {t}")).unwrap_or_default())]
    DegenerateTet { tet: Option<usize>, det: f64 },

    #[error("element construction failed: {0}")]
    Element(String),

    #[error("solver did not converge after {iterations} iterations (relative residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("system matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
