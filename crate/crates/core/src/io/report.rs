use std::fmt::Write as _;

use crate::verify::VerdictReport;

/// One line per verdict: `verdict id space=<digest> n= k= [witness]`.
pub fn render_text(reports: &[VerdictReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let digest = r.space_digest.get(..16).unwrap_or(&r.space_digest);
        let _ = write!(
            out,
            "{:<20} {} space={digest} n={} k={}",
            r.verdict.as_str(),
            r.property,
            r.n,
            r.k
        );
        if let Some(w) = &r.witness {
            let _ = write!(out, " witness: {w}");
        }
        if let Some(ms) = r.runtime_ms {
            let _ = write!(out, " runtime_ms={ms}");
        }
        out.push('\n');
    }
    out
}

/// One JSON object per line.
pub fn render_json(reports: &[VerdictReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        out.push('\n');
    }
    out
}
