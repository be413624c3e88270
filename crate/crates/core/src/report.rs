//! The report document written by `verify`, in JSON, CSV or a plain table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::{CampaignConfig, CampaignResult, CampaignSummary};
use crate::record::{Status, VerificationRecord};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub config: CampaignConfig,
    pub records: Vec<VerificationRecord>,
    pub summary: CampaignSummary,
    /// One message per proof-backed claim with a violated record.
    pub flags: Vec<String>,
}

/// Process exit status implied by a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Clean,
    StatedViolated,
    ProofBackedViolated,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Clean => 0,
            Verdict::StatedViolated => 1,
            Verdict::ProofBackedViolated => 2,
        }
    }
}

impl ReportDocument {
    pub fn new(config: CampaignConfig, result: CampaignResult) -> Self {
        let flags = result
            .summary
            .violated_proof_backed
            .iter()
            .map(|id| format!("proof-backed claim `{id}` violated: implementation bug"))
            .collect();
        Self {
            version: env!("CARGO_PKG_VERSION").to_owned(),
            config,
            records: result.records,
            summary: result.summary,
            flags,
        }
    }

    pub fn verdict(&self) -> Verdict {
        if !self.summary.violated_proof_backed.is_empty() {
            Verdict::ProofBackedViolated
        } else if !self.summary.violated_stated_only.is_empty() {
            Verdict::StatedViolated
        } else {
            Verdict::Clean
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialization(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Records only, one row each; empty cells for missing values.
    pub fn to_csv(&self) -> Result<String> {
        records_to_csv(&self.records)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<14} {:<8} {:>8} {:>8} {:>7} {:>6} {:>13} {:>13} {:>13} {:<17} exact",
            "claim", "function", "a", "b", "lambda", "q", "lhs", "rhs", "margin", "status"
        );
        let num = |v: Option<f64>, w: usize| match v {
            Some(x) => format!("{x:>w$.6e}"),
            None => format!("{:>w$}", "-"),
        };
        let short = |v: Option<f64>| v.map_or("-".to_owned(), |x| format!("{x:.4}"));
        for r in &self.records {
            let _ = writeln!(
                out,
                "{:<14} {:<8} {:>8} {:>8} {:>7} {:>6} {} {} {} {:<17} {}",
                r.claim,
                r.function,
                format!("{:.4}", r.a),
                format!("{:.4}", r.b),
                short(r.lambda),
                short(r.q),
                num(r.lhs, 13),
                num(r.rhs, 13),
                num(r.margin, 13),
                r.status.as_str(),
                r.exact
            );
        }
        let _ = writeln!(out);
        for c in &self.summary.claims {
            let counts: Vec<String> = Status::ALL
                .iter()
                .map(|s| format!("{}={}", s.as_str(), c.counts[s.as_str()]))
                .collect();
            let _ = writeln!(
                out,
                "{:<14} {:<13} min_margin={} {}",
                c.claim,
                c.provenance,
                c.min_margin.map_or("-".to_owned(), |m| format!("{m:.6e}")),
                counts.join(" ")
            );
        }
        for flag in &self.flags {
            let _ = writeln!(out, "FLAG: {flag}");
        }
        out
    }
}

pub fn records_to_csv(records: &[VerificationRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if records.is_empty() {
        w.write_record([
            "claim", "function", "a", "b", "lambda", "q", "lhs", "rhs", "margin", "status", "exact",
        ])
        .map_err(|e| Error::Serialization(e.to_string()))?;
    }
    for r in records {
        w.serialize(r)
            .map_err(|e| Error::Serialization(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Serialization(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialization(e.to_string()))
}

pub fn records_from_csv(text: &str) -> Result<Vec<VerificationRecord>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::run_campaign;
    use crate::oracle::rational;

    fn report() -> ReportDocument {
        let config = CampaignConfig {
            claims: vec!["prop1-stated".into(), "thm5".into(), "hh".into()],
            functions: vec!["poly3".into(), "bump".into()],
            q_grid: vec![rational(1, 1), rational(2, 1)],
            ..CampaignConfig::default()
        };
        let result = run_campaign(&config).unwrap();
        ReportDocument::new(config, result)
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let r = report();
        let text = r.to_json().unwrap();
        let back = ReportDocument::from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json().unwrap(), text);
    }

    #[test]
    fn csv_matches_json_records() {
        let r = report();
        assert_eq!(records_from_csv(&r.to_csv().unwrap()).unwrap(), r.records);
        assert_eq!(
            records_from_csv(&records_to_csv(&[]).unwrap()).unwrap(),
            vec![]
        );
    }

    #[test]
    fn verdict_and_table() {
        let r = report();
        assert_eq!(r.verdict(), Verdict::StatedViolated);
        assert_eq!(r.verdict().exit_code(), 1);
        assert!(r.flags.is_empty());
        let table = r.to_table();
        assert!(table.contains("prop1-stated") && table.contains("violated"));
    }
}
