//! Machine-readable check reports.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ProxyPass,
    Skipped,
    Error,
    OverBudget,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ProxyPass => "proxy-pass",
            Verdict::Skipped => "skipped",
            Verdict::Error => "error",
            Verdict::OverBudget => "over-budget",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub coeff: String,
    pub slots: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub level: String,
    pub verdict: Verdict,
    pub residual_terms: usize,
    pub witnesses: Vec<Witness>,
    pub millis: u64,
    pub basis_size: usize,
    pub peak_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn new(id: &str, level: &str) -> CheckReport {
        CheckReport {
            id: id.to_string(),
            level: level.to_string(),
            verdict: Verdict::Skipped,
            residual_terms: 0,
            witnesses: Vec::new(),
            millis: 0,
            basis_size: 0,
            peak_terms: 0,
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::ProxyPass | Verdict::Skipped)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverageRow {
    pub id: String,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub seed: u64,
    pub entries: Vec<CheckReport>,
    pub coverage: Vec<CoverageRow>,
    pub missing: Vec<String>,
}

impl RunReport {
    /// Coverage table over the required ids; rows for ids that were not run
    /// this time read "skipped". `missing` stays empty as long as the corpus
    /// is complete.
    pub fn build(seed: u64, mut entries: Vec<CheckReport>) -> RunReport {
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        let mut coverage = Vec::new();
        let mut missing = Vec::new();
        let known: Vec<String> = match corpus::entries() {
            Ok(es) => es.iter().map(|e| e.id.clone()).collect(),
            Err(_) => Vec::new(),
        };
        for id in corpus::required_ids() {
            if !known.iter().any(|k| k == id) {
                missing.push(id.to_string());
                continue;
            }
            let verdict = entries
                .iter()
                .find(|r| r.id == id)
                .map(|r| r.verdict.as_str().to_string())
                .unwrap_or_else(|| "skipped".to_string());
            coverage.push(CoverageRow { id: id.to_string(), verdict });
        }
        RunReport { seed, entries, coverage, missing }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.entries {
            s.push_str(&format!(
                "{:<28} {:<12} {:<11} residual={:<6} basis={:<4} peak={:<8} {}ms{}\n",
                r.id,
                r.level,
                r.verdict.as_str(),
                r.residual_terms,
                r.basis_size,
                r.peak_terms,
                r.millis,
                r.note.as_ref().map(|n| format!("  [{}]", n)).unwrap_or_default(),
            ));
        }
        let pass = self.entries.iter().filter(|r| r.passed()).count();
        s.push_str(&format!("{}/{} entries pass\n", pass, self.entries.len()));
        if !self.missing.is_empty() {
            s.push_str(&format!("MISSING corpus ids: {:?}\n", self.missing));
        }
        s
    }

    pub fn all_expected_pass(&self) -> bool {
        self.missing.is_empty() && self.entries.iter().all(|r| r.passed())
    }
}
