use serde::Serialize;

/// The JSON object printed by `solve`. Every field is always present so the
/// shape does not depend on the verdict; see `docs/report.schema.json`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub verdict: Verdict,
    /// `χ_d^=` when computed and finite.
    pub chi: Option<usize>,
    /// Known `[lower, upper]` bounds when only an interval is known.
    pub bounds: Option<[usize; 2]>,
    /// Colors per vertex, when a coloring was found.
    pub witness: Option<Vec<usize>>,
    /// Palette size of the witness.
    pub k: Option<usize>,
    pub d: usize,
    pub algorithm: String,
    pub elapsed_ms: f64,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Infinite,
    Unknown,
}
