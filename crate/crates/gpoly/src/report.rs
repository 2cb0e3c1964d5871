//! Structured pass/fail reporting for identity checks.
//!
//! Every verification routine in this crate returns a [`Report`]: a named
//! list of check lines, one per assertion, each recording the subject that
//! was checked and — on failure — the exact ring values of both sides.
//! Reports serialize to JSON for machine consumption and implement
//! [`std::fmt::Display`] for human-readable summaries.

use serde::Serialize;
use std::fmt;

/// One verified assertion: a subject line, a verdict, and (on failure) the
/// exact values of the two sides that were compared.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    /// What was checked, e.g. a graph name and the identity instance.
    pub subject: String,
    /// Whether the assertion held exactly.
    pub passed: bool,
    /// Left-hand value, recorded only when the assertion failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    /// Right-hand value, recorded only when the assertion failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

/// A named collection of check lines produced by one verification run.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    /// Name of the verification that produced this report.
    pub name: String,
    /// The individual assertions, in the order they were checked.
    pub lines: Vec<CheckLine>,
}

impl Report {
    /// Creates an empty report with the given name.
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            lines: Vec::new(),
        }
    }

    /// Records a bare boolean assertion.
    pub fn check(&mut self, subject: impl Into<String>, passed: bool) {
        self.lines.push(CheckLine {
            subject: subject.into(),
            passed,
            lhs: None,
            rhs: None,
        });
    }

    /// Records an exact equality assertion; on failure both sides are
    /// captured via their display forms.
    pub fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        subject: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) {
        let passed = lhs == rhs;
        self.lines.push(CheckLine {
            subject: subject.into(),
            passed,
            lhs: if passed { None } else { Some(lhs.to_string()) },
            rhs: if passed { None } else { Some(rhs.to_string()) },
        });
    }

    /// Records a boolean assertion, attaching both sides' display forms on
    /// failure (for checks that are not plain equalities, e.g. inequalities
    /// or congruences where the raw values still aid debugging).
    pub fn check_with_values<L: fmt::Display, R: fmt::Display>(
        &mut self,
        subject: impl Into<String>,
        passed: bool,
        lhs: &L,
        rhs: &R,
    ) {
        self.lines.push(CheckLine {
            subject: subject.into(),
            passed,
            lhs: if passed { None } else { Some(lhs.to_string()) },
            rhs: if passed { None } else { Some(rhs.to_string()) },
        });
    }

    /// True when every line passed (an empty report passes).
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|line| line.passed)
    }

    /// Number of passing lines.
    pub fn num_passed(&self) -> usize {
        self.lines.iter().filter(|line| line.passed).count()
    }

    /// Number of failing lines.
    pub fn num_failed(&self) -> usize {
        self.lines.len() - self.num_passed()
    }

    /// Appends all lines of `other`, prefixing their subjects with the
    /// other report's name when it differs from this one's.
    pub fn merge(&mut self, other: Report) {
        let prefix = if other.name == self.name || other.name.is_empty() {
            None
        } else {
            Some(other.name)
        };
        for mut line in other.lines {
            if let Some(ref p) = prefix {
                line.subject = format!("{p}: {}", line.subject);
            }
            self.lines.push(line);
        }
    }

    /// The failing lines, for compact error output.
    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|line| !line.passed)
    }

    /// Serializes the report to pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}/{} checks passed",
            self.name,
            self.num_passed(),
            self.lines.len()
        )?;
        for line in &self.lines {
            let mark = if line.passed { "ok " } else { "FAIL" };
            write!(f, "  [{mark}] {}", line.subject)?;
            if !line.passed {
                if let (Some(lhs), Some(rhs)) = (&line.lhs, &line.rhs) {
                    write!(f, "  lhs = {lhs}  rhs = {rhs}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_tracks_pass_and_fail() {
        let mut r = Report::new("demo");
        r.check("trivial truth", true);
        r.check_eq("equal ints", &3, &3);
        assert!(r.passed());
        r.check_eq("unequal ints", &3, &4);
        assert!(!r.passed());
        assert_eq!(r.num_passed(), 2);
        assert_eq!(r.num_failed(), 1);
        let fail = r.failures().next().unwrap();
        assert_eq!(fail.lhs.as_deref(), Some("3"));
        assert_eq!(fail.rhs.as_deref(), Some("4"));
    }

    #[test]
    fn merge_prefixes_foreign_subjects() {
        let mut base = Report::new("outer");
        base.check("own line", true);
        let mut inner = Report::new("inner");
        inner.check("sub line", true);
        base.merge(inner);
        assert_eq!(base.lines[1].subject, "inner: sub line");
        assert!(base.passed());
    }

    #[test]
    fn json_round_trip_shape() {
        let mut r = Report::new("j");
        r.check_eq("x", &1, &2);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["name"], "j");
        assert_eq!(v["lines"][0]["passed"], false);
        assert_eq!(v["lines"][0]["lhs"], "1");
    }
}
