use thiserror::Error;

use crate::tree::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot decompose the leaf tree")]
    DecomposeLeaf,

    #[error("alphabet must contain at least one label")]
    EmptyAlphabet,

    #[error("invalid label {0:?}: labels are nonempty strings over [A-Za-z0-9_]")]
    InvalidLabel(String),

    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },

    #[error("edge {0} is not an internal edge of the tree")]
    InvalidEdge(String),

    #[error("cut is not admissible")]
    NotAdmissible,

    #[error("operation is undefined on the leaf tree")]
    LeafInput,

    #[error("unknown label {0}")]
    UnknownLabel(Label),
}
