//! Validation reports.
//!
//! Every checker in the crate returns a [`Report`]: an ordered list of law
//! violations, empty exactly when the checked structure satisfies all of its
//! laws. A violation records the law, where it failed (an object, a tuple of
//! objects, a morphism pair) and the two sides of the failing equation.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Rendering of a side of an equation whose composite does not exist.
pub const UNDEFINED: &str = "<undefined>";

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    pub fn new(
        law: impl Into<String>,
        at: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        Violation {
            law: law.into(),
            at: at.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: {} != {}",
            self.law, self.at, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn violation(
        &mut self,
        law: impl Into<String>,
        at: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) {
        self.push(Violation::new(law, at, lhs, rhs));
    }

    /// Appends `other`, prefixing each law name with `scope/`.
    pub fn absorb(&mut self, scope: &str, other: Report) {
        for mut v in other.violations {
            v.law = format!("{scope}/{}", v.law);
            self.violations.push(v);
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    pub fn has_law(&self, needle: &str) -> bool {
        self.violations.iter().any(|v| v.law.contains(needle))
    }

    pub fn into_result(self) -> Result<(), Report> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(self)
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromIterator<Violation> for Report {
    fn from_iter<I: IntoIterator<Item = Violation>>(iter: I) -> Self {
        Report {
            violations: iter.into_iter().collect(),
        }
    }
}
