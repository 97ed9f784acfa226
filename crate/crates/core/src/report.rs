use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::arith::{render_rational, ExactRational};

/// One checked index: the value produced by the pipeline under test and
/// the value it is compared against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub index: u64,
    pub expected: ExactRational,
    pub computed: ExactRational,
    pub pass: bool,
}

impl ReportEntry {
    /// Passes iff the two values are equal.
    pub fn compare(index: u64, expected: ExactRational, computed: ExactRational) -> Self {
        let pass = expected == computed;
        Self {
            index,
            expected,
            computed,
            pass,
        }
    }
}

/// Outcome of a verification run, in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    label: String,
    entries: Vec<ReportEntry>,
    overall_pass: bool,
}

impl VerificationReport {
    /// Entries are kept in the order given.
    pub fn new(label: impl Into<String>, entries: Vec<ReportEntry>) -> Self {
        let overall_pass = entries.iter().all(|e| e.pass);
        Self {
            label: label.into(),
            entries,
            overall_pass,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn entries(&self) -> &[ReportEntry] {
        &self.entries
    }

    pub fn overall_pass(&self) -> bool {
        self.overall_pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

// {label, overallPass, entries: [{n, lhs, rhs, pass}]}; `lhs` is the
// computed side, `rhs` the expected side.
impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            n: u64,
            lhs: String,
            rhs: String,
            pass: bool,
        }
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|e| Entry {
                n: e.index,
                lhs: render_rational(&e.computed),
                rhs: render_rational(&e.expected),
                pass: e.pass,
            })
            .collect();
        let mut s = serializer.serialize_struct("VerificationReport", 3)?;
        s.serialize_field("label", &self.label)?;
        s.serialize_field("overallPass", &self.overall_pass)?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}
