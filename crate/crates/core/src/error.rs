use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("improper set system")]
    Improper,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("ground set of size {0} exceeds the 64-element limit")]
    GroundSetTooLarge(usize),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("subset {mask:#b} is not contained in a ground set of size {n}")]
    MaskOutOfRange { mask: u64, n: usize },
    #[error("stratum offset {offset} exceeds width {width}")]
    StratumOutOfRange { offset: usize, width: usize },
    #[error("ground sets share element `{0}`; rename before taking the direct sum")]
    NameCollision(String),
    #[error("ground set of size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("the identity word has no entry in the width-change table")]
    IdentityWord,
    #[error("word `{0}` is not supported here")]
    UnsupportedWord(String),
    #[error("set system is not a vf-safe delta-matroid")]
    NotVfSafe,
    #[error("set system is not normal")]
    NotNormal,
    #[error("not binary")]
    NotBinary,
    #[error("{vertices} vertices but a {matrix}x{matrix} matrix")]
    DimensionMismatch { vertices: usize, matrix: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("chord diagram: {0}")]
    BadDiagram(String),
    #[error("{what} of size {n} is too large for exhaustive enumeration (max {max})")]
    TooLargeToEnumerate { what: &'static str, n: usize, max: usize },
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("sampling requires an explicit seed")]
    MissingSeed,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
