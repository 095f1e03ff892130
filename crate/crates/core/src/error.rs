use thiserror::Error;

use crate::model::ModelDefect;
use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unknown world '{0}'")]
    UnknownWorld(String),

    #[error("invalid model: {}", join_defects(.0))]
    InvalidModel(Vec<ModelDefect>),

    #[error("'{0}' is not a negation-word over the single variable p")]
    NotAnNFormula(String),

    /// A word whose signature is not among the fifteen class signatures.
    #[error("signature {signature} of {word} matches no known class")]
    CensusInconsistency { word: String, signature: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_defects(defects: &[ModelDefect]) -> String {
    defects
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
