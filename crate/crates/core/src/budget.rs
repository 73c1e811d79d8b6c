//! Size and degree guards for Groebner basis computations.
//!
//! The process-wide budget starts at [`Budget::default`] and can be replaced
//! with [`Budget::set_global`]; every basis computation reads it once on entry.

use std::sync::RwLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of polynomials ever added to a basis under construction.
    pub max_basis: usize,
    /// Maximum total degree of any polynomial entering a basis.
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_basis: 5000, max_degree: 1024 }
    }
}

static GLOBAL: RwLock<Option<Budget>> = RwLock::new(None);

impl Budget {
    pub fn global() -> Budget {
        GLOBAL.read().map(|b| b.unwrap_or_default()).unwrap_or_default()
    }

    pub fn set_global(budget: Budget) {
        if let Ok(mut slot) = GLOBAL.write() {
            *slot = Some(budget);
        }
    }

    /// Parses overrides of the form `max_degree=300,max_basis=2000`.
    /// Keys absent from the string keep their default values.
    pub fn parse(spec: &str) -> Result<Budget> {
        let mut budget = Budget::default();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| Error::Parse {
                col: 0,
                msg: format!("expected key=value in budget override, got `{part}`"),
            })?;
            let bad = || Error::Parse { col: 0, msg: format!("bad budget value `{value}`") };
            match key.trim() {
                "max_degree" | "degree" => budget.max_degree = value.trim().parse().map_err(|_| bad())?,
                "max_basis" | "size" => budget.max_basis = value.trim().parse().map_err(|_| bad())?,
                other => {
                    return Err(Error::Parse { col: 0, msg: format!("unknown budget key `{other}`") })
                }
            }
        }
        Ok(budget)
    }

    pub(crate) fn check(&self, basis_len: usize, degree: u32) -> Result<()> {
        if basis_len > self.max_basis {
            return Err(Error::ResourceLimit(format!(
                "basis grew past {} elements",
                self.max_basis
            )));
        }
        if degree > self.max_degree {
            return Err(Error::ResourceLimit(format!(
                "polynomial of degree {degree} exceeds the degree guard {}",
                self.max_degree
            )));
        }
        Ok(())
    }
}
