use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// One line of a JSONL run log.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub id: String,
    pub seed: u64,
    pub subject: String,
    pub depth: usize,
    pub rep_estimate: Option<String>,
    pub rep_exact: Option<String>,
    pub lambda_head: Vec<String>,
    pub violations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_bar: Option<f64>,
}

impl RunRecord {
    pub fn estimate_f64(&self) -> Option<f64> {
        self.rep_estimate.as_deref().and_then(|s| s.parse().ok())
    }

    pub fn exact_f64(&self) -> Option<f64> {
        self.rep_exact.as_deref().and_then(|s| s.parse().ok())
    }
}

pub fn run_id(seed: u64, index: usize) -> String {
    format!("{seed:016x}-{index:05}")
}

pub fn write_jsonl(records: &[RunRecord], mut out: impl Write) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_jsonl(text: &str) -> Result<Vec<RunRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Ok(serde_json::from_str(l)?))
        .collect()
}

/// `subject,depth,estimate,exact,abs_err`
pub fn write_summary_csv(records: &[RunRecord], mut out: impl Write) -> Result<()> {
    writeln!(out, "subject,depth,estimate,exact,abs_err")?;
    for r in records {
        let err = match (r.estimate_f64(), r.exact_f64()) {
            (Some(e), Some(x)) => format!("{:.6e}", (e - x).abs()),
            _ => String::new(),
        };
        writeln!(
            out,
            "{},{},{},{},{}",
            csv_field(&r.subject),
            r.depth,
            r.rep_estimate.as_deref().unwrap_or(""),
            r.rep_exact.as_deref().unwrap_or(""),
            err
        )?;
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_round_trip() {
        let r = RunRecord {
            id: run_id(5, 2),
            seed: 5,
            subject: "(ab)".into(),
            depth: 40,
            rep_estimate: Some("1.472136".into()),
            rep_exact: Some("1.472136".into()),
            lambda_head: vec!["1".into(), "2".into()],
            violations: vec![],
            error_bar: Some(0.0),
        };
        let mut buf = Vec::new();
        write_jsonl(std::slice::from_ref(&r), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("{\"id\":\"0000000000000005-00002\",\"seed\":5,\"subject\""));
        assert_eq!(read_jsonl(&text).unwrap(), vec![r.clone()]);
        let mut csv = Vec::new();
        write_summary_csv(&[r], &mut csv).unwrap();
        assert_eq!(
            String::from_utf8(csv).unwrap(),
            "subject,depth,estimate,exact,abs_err\n(ab),40,1.472136,1.472136,0.000000e0\n"
        );
    }
}
