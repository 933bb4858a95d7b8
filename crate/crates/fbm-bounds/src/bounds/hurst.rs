use crate::error::{Error, Result};

/// A validated Hurst index, strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Hurst(f64);

impl Hurst {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 && value < 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::Domain(format!(
                "Hurst index must lie strictly inside (0, 1), got {value}"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// True when H ≤ 1/2 (the regime of the subdiffusive bounds).
    pub fn is_subdiffusive(self) -> bool {
        self.0 <= 0.5
    }

    /// True when H ≥ 1/2 (the regime of the superdiffusive bounds).
    pub fn is_superdiffusive(self) -> bool {
        self.0 >= 0.5
    }
}

impl std::fmt::Display for Hurst {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<f64> for Hurst {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}
