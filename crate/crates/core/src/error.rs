use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {degree} outside supported range {min}..={max}")]
    DegreeOutOfRange {
        degree: usize,
        min: usize,
        max: usize,
    },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid label `{0}`: labels must be non-empty, unique and free of whitespace and '#'")]
    InvalidLabel(String),

    #[error("table is not {expected}x{expected} with entries below {expected}")]
    BadShape { expected: usize },

    #[error("not closed: {line} {index} is not a permutation of the elements")]
    NotClosed { line: &'static str, index: usize },

    #[error("no identity element")]
    NoIdentity,

    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: String },

    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: String, b: String, c: String },

    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("adjoint action is not injective: elements {a} and {b} have the same image")]
    AdjointNotInjective { a: String, b: String },

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("generating set reaches only {reachable} of {order} elements")]
    DoesNotGenerate { reachable: usize, order: usize },

    #[error("series of length {len} is shorter than the pattern length {needed}")]
    SeriesTooShort { len: usize, needed: usize },

    #[error("sample {index} is not finite")]
    InvalidSample { index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("series are defined over different groups")]
    GroupMismatch,

    #[error("window {window} exceeds series length {len}")]
    WindowTooLarge { window: usize, len: usize },

    #[error("observed distance {value} is not in the admissible support")]
    UnexpectedDistance { value: f64 },

    #[error("trajectory diverged at step {step}")]
    Diverged { step: usize },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }

    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::Parse { .. } => "Parse",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::BadShape { .. } => "BadShape",
            Error::NotClosed { .. } => "NotClosed",
            Error::NoIdentity => "NoIdentity",
            Error::NoInverse { .. } => "NoInverse",
            Error::NotAssociative { .. } => "NotAssociative",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::AdjointNotInjective { .. } => "AdjointNotInjective",
            Error::InvalidEmbedding(_) => "InvalidEmbedding",
            Error::Unsupported(_) => "Unsupported",
            Error::DoesNotGenerate { .. } => "DoesNotGenerate",
            Error::SeriesTooShort { .. } => "SeriesTooShort",
            Error::InvalidSample { .. } => "InvalidSample",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::GroupMismatch => "GroupMismatch",
            Error::WindowTooLarge { .. } => "WindowTooLarge",
            Error::UnexpectedDistance { .. } => "UnexpectedDistance",
            Error::Diverged { .. } => "Diverged",
            Error::Format { .. } => "Format",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
            Error::Csv(_) => "Csv",
        }
    }

    /// Process exit status used by the command-line tool.
    ///
    /// 2 for malformed input, 3 for structural validation failures,
    /// 4 for everything that goes wrong while running a pipeline.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::Format { .. }
            | Error::InvalidPermutation(_)
            | Error::InvalidParameter(_)
            | Error::DegreeOutOfRange { .. }
            | Error::UnknownLabel(_)
            | Error::Json(_)
            | Error::Csv(_) => 2,
            Error::BadShape { .. }
            | Error::InvalidLabel(_)
            | Error::NotClosed { .. }
            | Error::NoIdentity
            | Error::NoInverse { .. }
            | Error::NotAssociative { .. }
            | Error::DoesNotGenerate { .. }
            | Error::AdjointNotInjective { .. }
            | Error::InvalidEmbedding(_) => 3,
            _ => 4,
        }
    }
}
