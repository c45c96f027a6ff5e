use std::fmt;

/// Exponent coordinates of a coefficient, used to report where two series
/// first disagree. `u` is a doubled exponent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Location {
    pub q: Option<i64>,
    pub y: Option<i64>,
    pub u: Option<i64>,
    pub v: Option<i64>,
}

impl Location {
    pub fn q(q: i64) -> Self {
        Location {
            q: Some(q),
            ..Default::default()
        }
    }

    pub fn with_y(mut self, y: i64) -> Self {
        self.y = Some(y);
        self
    }

    pub fn with_u(mut self, doubled: i64) -> Self {
        self.u = Some(doubled);
        self
    }

    pub fn with_v(mut self, v: i64) -> Self {
        self.v = Some(v);
        self
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(v) = self.v {
            parts.push(format!("v^{v}"));
        }
        if let Some(q) = self.q {
            parts.push(format!("q^{q}"));
        }
        if let Some(y) = self.y {
            parts.push(format!("y^{y}"));
        }
        if let Some(u) = self.u {
            if u % 2 == 0 {
                parts.push(format!("u^{}", u / 2));
            } else {
                parts.push(format!("u^{u}/2"));
            }
        }
        if parts.is_empty() {
            f.write_str("(constant)")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("leading coefficient is not a unit")]
    NonUnitLeading,
    #[error("operation needs a finite truncation order")]
    UnboundedOrder,
    #[error("bad constant term for {0}")]
    BadConstantTerm(&'static str),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("internal non-exact division: {0}")]
    InternalNonExactDivision(String),
    #[error("non-exact division: {0}")]
    NonExactDivision(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("moduli space is empty (expected dimension {0})")]
    NegativeDim(i64),
    #[error("{what}: mismatch at {at}")]
    Mismatch { what: String, at: Location },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("validation failure: {0}")]
    ValidationFailure(String),
}

impl Error {
    pub fn mismatch(what: impl Into<String>, at: Location) -> Self {
        Error::Mismatch {
            what: what.into(),
            at,
        }
    }

    /// True for errors that mean an identity failed, as opposed to bad input.
    pub fn is_identity_failure(&self) -> bool {
        matches!(
            self,
            Error::NotDivisible(_)
                | Error::InternalNonExactDivision(_)
                | Error::NonExactDivision(_)
                | Error::Mismatch { .. }
                | Error::NoSolution(_)
                | Error::ValidationFailure(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
