//! Error type shared by the library and the CLI.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed CSV content. `row` and `col` are 1-based positions in the file.
    #[error("{path}: row {row}, column {col}: {message}")]
    Parse {
        path: PathBuf,
        row: usize,
        col: usize,
        message: String,
    },

    /// A neighborhood whose centered span has lower rank than the requested
    /// tangent dimension. Carries the achieved rank so callers can diagnose
    /// duplicate or collinear neighbors.
    #[error("degenerate neighborhood at point {point}: centered rank {rank} < required {required}")]
    DegenerateNeighborhood {
        point: usize,
        rank: usize,
        required: usize,
    },

    #[error("numeric error: {0}")]
    Numeric(String),

    /// Neighbor graph with more than one connected component. Sizes are
    /// reported largest first.
    #[error("graph is disconnected: component sizes {sizes:?}")]
    DisconnectedGraph { sizes: Vec<usize> },

    /// Wraps an error with the pipeline stage it came from.
    #[error("{stage} stage: {source}")]
    Stage {
        stage: &'static str,
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn stage(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |source| Error::Stage {
            stage,
            source: Box::new(source),
        }
    }

    /// Process exit code used by the CLI: 2 invalid arguments, 3 data/parse,
    /// 4 numeric/degeneracy, 5 disconnected graph.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::InvalidArgument(_) => 2,
            Error::Io { .. } | Error::Parse { .. } => 3,
            Error::DegenerateNeighborhood { .. } | Error::Numeric(_) => 4,
            Error::DisconnectedGraph { .. } => 5,
            Error::Stage { source, .. } => source.exit_code(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_category() {
        assert_eq!(Error::InvalidArgument("x".into()).exit_code(), 2);
        assert_eq!(
            Error::DegenerateNeighborhood {
                point: 0,
                rank: 1,
                required: 2
            }
            .exit_code(),
            4
        );
        assert_eq!(
            Error::DisconnectedGraph { sizes: vec![3, 2] }.exit_code(),
            5
        );
    }

    #[test]
    fn stage_wrapper_preserves_exit_code_and_labels_message() {
        let err = Error::stage("tangent")(Error::InvalidArgument("k too small".into()));
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("tangent stage"));
        assert!(err.to_string().contains("k too small"));
    }
}
