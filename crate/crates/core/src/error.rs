use thiserror::Error;

/// Which branch-curve character went negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Character {
    Degree,
    Nodes,
    Cusps,
    TurningPoints,
}

impl std::fmt::Display for Character {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Character::Degree => "degree",
            Character::Nodes => "nodes",
            Character::Cusps => "cusps",
            Character::TurningPoints => "turning points",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid surface classes: {0}")]
    InvalidSurface(String),

    #[error("branch degree b = {b} is odd, so b^2/2 is not an integer")]
    NonIntegralNodeCount { b: i128 },

    #[error("negative {which} ({value}): outside the nodes-and-cusps regime")]
    NegativeCharacter { which: Character, value: i128 },

    #[error("{0} is not an even integer")]
    NonIntegral(i128),

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("malformed complex: {0}")]
    MalformedComplex(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
