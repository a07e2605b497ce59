use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::element::AlgebraElement;

/// Which part of the affine group is averaged out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExpectationMode {
    /// Keep terms acting as `r ↦ r`.
    Full,
    /// Keep terms acting as `r ↦ r + b`.
    Multiplicative,
    /// On translation terms, keep `b = 0`.
    Additive,
}

impl std::str::FromStr for ExpectationMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(ExpectationMode::Full),
            "multiplicative" => Ok(ExpectationMode::Multiplicative),
            "additive" => Ok(ExpectationMode::Additive),
            _ => Err(Error::DomainError(format!("unknown expectation mode {s:?}"))),
        }
    }
}

impl AlgebraElement {
    /// Exact component extraction: a word survives iff its affine part is
    /// fixed by the averaging.
    pub fn expectation(&self, mode: ExpectationMode) -> Result<AlgebraElement> {
        let ring = self.ring().clone();
        match mode {
            ExpectationMode::Full => Ok(self.filter(|t| t.is_diagonal(&ring))),
            ExpectationMode::Multiplicative => Ok(self.filter(|t| t.has_unit_slope(&ring))),
            ExpectationMode::Additive => {
                if let Some((t, _)) = self.terms().iter().find(|(t, _)| !t.has_unit_slope(&ring)) {
                    return Err(Error::DomainError(format!(
                        "additive expectation needs translation terms only, got {}",
                        t.show(&ring)
                    )));
                }
                Ok(self.filter(|t| ring.is_zero(t.k())))
            }
        }
    }
}
