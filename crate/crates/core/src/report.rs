//! Pass/fail reports for exact identity checks.

use std::fmt;

use serde::Serialize;

use crate::exactnum::{QuadExt, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    /// Evaluated but depends on a convention choice; not counted as a failure.
    Flagged,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub status: Status,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.status != Status::Fails
    }
}

/// Ordered list of identity outcomes.
///
/// A report can carry an injected fault: the named identity gets its left
/// side perturbed before comparison, which lets harnesses confirm that a
/// broken identity is actually reported.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: Vec<IdentityCheck>,
    #[serde(skip)]
    fault: Option<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_fault(fault: Option<&str>) -> Self {
        Report {
            checks: Vec::new(),
            fault: fault.map(str::to_owned),
        }
    }

    fn faulted(&self, id: &str) -> bool {
        self.fault.as_deref() == Some(id)
    }

    pub fn record(&mut self, id: &'static str, holds: bool) {
        let holds = holds != self.faulted(id);
        let status = if holds { Status::Holds } else { Status::Fails };
        self.checks.push(IdentityCheck { id, status });
    }

    pub fn flag(&mut self, id: &'static str) {
        self.checks.push(IdentityCheck {
            id,
            status: Status::Flagged,
        });
    }

    pub fn eq(&mut self, id: &'static str, lhs: &Rational, rhs: &Rational) {
        let holds = if self.faulted(id) {
            &(lhs + Rational::from_integer(1.into())) == rhs
        } else {
            lhs == rhs
        };
        self.checks.push(IdentityCheck {
            id,
            status: if holds { Status::Holds } else { Status::Fails },
        });
    }

    pub fn eq_ext(&mut self, id: &'static str, lhs: &QuadExt, rhs: &QuadExt) {
        let holds = match lhs.checked_sub(rhs) {
            Ok(diff) if self.faulted(id) => (&diff + &QuadExt::embed(Rational::from_integer(1.into()), lhs)).is_zero(),
            Ok(diff) => diff.is_zero(),
            Err(_) => false,
        };
        self.checks.push(IdentityCheck {
            id,
            status: if holds { Status::Holds } else { Status::Fails },
        });
    }

    pub fn eq_pair(&mut self, id: &'static str, lhs: (&Rational, &Rational), rhs: (&Rational, &Rational)) {
        let holds = if self.faulted(id) {
            (lhs.0 + Rational::from_integer(1.into()), lhs.1.clone()) == (rhs.0.clone(), rhs.1.clone())
        } else {
            lhs == rhs
        };
        self.checks.push(IdentityCheck {
            id,
            status: if holds { Status::Holds } else { Status::Fails },
        });
    }

    /// Componentwise equality; a fault perturbs the first component.
    pub fn eq_all(&mut self, id: &'static str, lhs: &[Rational], rhs: &[Rational]) {
        let mut lhs = lhs.to_vec();
        if self.faulted(id) {
            if let Some(first) = lhs.first_mut() {
                *first += Rational::from_integer(1.into());
            }
        }
        let holds = lhs.as_slice() == rhs;
        self.checks.push(IdentityCheck {
            id,
            status: if holds { Status::Holds } else { Status::Fails },
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.failures().next().map(|c| c.id)
    }

    pub fn status_of(&self, id: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.id == id).map(|c| c.status)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Holds => "holds",
                Status::Fails => "FAILS",
                Status::Flagged => "flagged",
            };
            writeln!(f, "{:<40} {}", c.id, tag)?;
        }
        Ok(())
    }
}
