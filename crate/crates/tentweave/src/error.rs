use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Parity-lexicographic comparison of a finite word with an infinite
    /// sequence, or of two finite words of different length.
    #[error("cannot compare {0}")]
    MixedLength(String),

    #[error("kneading prefix of depth {have} is too short, need {need}")]
    InsufficientDepth { have: usize, need: usize },

    #[error("slope {0} lies outside (sqrt(2), 2]")]
    SlopeOutOfRange(f64),

    #[error("orbit returns to the critical point at step {step} but periodicity could not be confirmed")]
    UnresolvedCriticalHit { step: usize },

    #[error("word {0} is not admissible")]
    NotAdmissible(String),

    #[error("tau is infinite on that side; no neighbour exists")]
    TauInfinite,

    #[error("operation requires an exact eventually periodic kneading sequence")]
    NotFiniteOrbit,

    #[error("point is not an endpoint")]
    NotEndpoint,

    #[error("height parameter {0} lies outside (0, 1/2)")]
    QOutOfRange(String),

    #[error("wrong height class: {0}")]
    WrongClass(String),

    #[error("kneading sequence does not fit any height class")]
    Unclassified,

    #[error("backward word is unrealizable: interval became empty")]
    EmptyInterval,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
