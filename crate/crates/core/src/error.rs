use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid multiset: {0}")]
    InvalidMultiset(String),

    #[error("pattern not contained in multiset")]
    NotContained,

    #[error("invalid family index: strand {strand}, t={t}")]
    InvalidIndex { strand: usize, t: u64 },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("unknown built-in pair `{0}`")]
    UnknownPair(String),

    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed pair document: {0}")]
    Document(#[from] serde_json::Error),
}
