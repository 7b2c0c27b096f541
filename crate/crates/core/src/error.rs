use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An evaluation point did not supply a value for every variable in use.
    #[error("point has {supplied} coordinates but the polynomial uses x{needed}")]
    Dimension { needed: usize, supplied: usize },

    /// Invalid parameters or names supplied by the caller.
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
