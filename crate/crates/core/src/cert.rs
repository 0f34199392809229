use serde::Serialize;

/// Outcome of an exhaustive sweep over a finite family of identities.
///
/// `cases` counts the individual identity instances checked; `counterexample`
/// holds a rendering of the earliest failing instance in sweep order, so a
/// failing certificate is reproducible.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub label: String,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl Certificate {
    pub fn new(label: impl Into<String>, cases: u64, counterexample: Option<String>) -> Self {
        Certificate { label: label.into(), cases, counterexample }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: pass ({} cases)", self.label, self.cases),
            Some(c) => write!(f, "{}: FAIL after {} cases: {}", self.label, self.cases, c),
        }
    }
}
