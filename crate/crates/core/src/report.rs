//! Pass/fail reports with counterexample witnesses.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::scalar::Scalar;
use crate::tensorlin::LinearMap;

fn scalars_as_strings<S: Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// The first failing basis tuple of an identity and the residual `lhs - rhs` there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<String>,
    #[serde(serialize_with = "scalars_as_strings")]
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Report {
        Report {
            suite: suite.into(),
            passed: true,
            verdicts: Vec::new(),
        }
    }

    fn push(&mut self, verdict: Verdict) {
        self.passed &= verdict.passed;
        self.verdicts.push(verdict);
    }

    /// Records the identity `lhs = rhs`, with a witness on failure.
    pub fn identity(&mut self, name: impl Into<String>, lhs: &LinearMap, rhs: &LinearMap) -> Result<bool> {
        let witness = lhs.first_difference(rhs)?.map(|(col, residual)| Witness {
            tuple: lhs.domain().tuple(col),
            residual,
        });
        let passed = witness.is_none();
        self.push(Verdict {
            name: name.into(),
            passed,
            witness,
            detail: None,
        });
        Ok(passed)
    }

    /// Records `map = 0`.
    pub fn vanishes(&mut self, name: impl Into<String>, map: &LinearMap) -> Result<bool> {
        let zero = LinearMap::zero(map.field(), map.domain(), map.codomain());
        self.identity(name, map, &zero)
    }

    pub fn flag(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) -> bool {
        self.push(Verdict {
            name: name.into(),
            passed,
            witness: None,
            detail,
        });
        passed
    }

    /// Appends another report's verdicts, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut v in other.verdicts {
            v.name = format!("{prefix}/{}", v.name);
            self.push(v);
        }
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    /// Whether the named verdict exists and passed.
    pub fn holds(&self, name: &str) -> bool {
        self.verdict(name).is_some_and(|v| v.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.name)?;
        if let Some(w) = &self.witness {
            let residual: Vec<String> = w.residual.iter().map(ToString::to_string).collect();
            write!(f, " at ({}) residual [{}]", w.tuple.join(", "), residual.join(", "))?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.suite, if self.passed { "PASS" } else { "FAIL" })?;
        for v in &self.verdicts {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}
