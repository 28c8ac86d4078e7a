use std::fmt::Write as _;

use crate::args::Format;
use crate::record::{OutputRecord, Payload, Query};

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("csv output is not UTF-8")]
    Utf8,
}

pub fn render(record: &OutputRecord, format: Format) -> Result<String, RenderError> {
    match format {
        Format::Text => Ok(render_text(record)),
        Format::Json => {
            let mut out = serde_json::to_string_pretty(record)?;
            out.push('\n');
            Ok(out)
        }
        Format::Csv => render_csv(record),
        Format::Latex => Ok(render_latex(record)),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn sign_str(sign: i8) -> &'static str {
    if sign >= 0 {
        "+"
    } else {
        "-"
    }
}

/// Header and rows shared by the CSV and LaTeX renderers.
fn table(payload: &Payload) -> (Vec<&'static str>, Vec<Vec<String>>) {
    match payload {
        Payload::Labels {
            labels,
            orientations,
            ..
        } => match orientations {
            Some(o) => (
                vec!["label", "orientation"],
                labels
                    .iter()
                    .zip(o)
                    .map(|(l, o)| vec![l.clone(), o.clone().unwrap_or_default()])
                    .collect(),
            ),
            None => (
                vec!["label"],
                labels.iter().map(|l| vec![l.clone()]).collect(),
            ),
        },
        Payload::Count { count, .. } => (vec!["count"], vec![vec![count.to_string()]]),
        Payload::Membership { member, violation } => (
            vec!["member", "violation"],
            vec![vec![
                yes_no(*member).into(),
                violation.clone().unwrap_or_default(),
            ]],
        ),
        Payload::AValues { a_values } => (
            vec!["element", "length", "a"],
            a_values
                .iter()
                .map(|r| vec![r.element.clone(), r.length.to_string(), r.a.to_string()])
                .collect(),
        ),
        Payload::HTable { h } => (
            vec!["x", "y", "z", "h"],
            h.iter()
                .map(|r| vec![r.x.clone(), r.y.clone(), r.z.clone(), r.h.clone()])
                .collect(),
        ),
        Payload::PhiIdentity {
            e,
            factorization_holds,
            negation_holds,
            sign,
            lhs_degree,
            rhs_degree,
        } => (
            vec![
                "e",
                "factorization_holds",
                "negation_holds",
                "sign",
                "lhs_degree",
                "rhs_degree",
            ],
            vec![vec![
                e.to_string(),
                yes_no(*factorization_holds).into(),
                negation_holds
                    .map(|b| yes_no(b).to_string())
                    .unwrap_or_default(),
                sign.map(|s| sign_str(s).to_string()).unwrap_or_default(),
                lhs_degree.to_string(),
                rhs_degree.to_string(),
            ]],
        ),
        Payload::E { e } => (
            vec!["e"],
            vec![vec![e
                .map(|e| e.to_string())
                .unwrap_or_else(|| "NONE".into())]],
        ),
    }
}

fn render_text(record: &OutputRecord) -> String {
    let mut out = String::new();
    match &record.result {
        Payload::Labels { labels, .. } => {
            for l in labels {
                out.push_str(l);
                out.push('\n');
            }
        }
        Payload::Count { count, .. } => {
            let _ = writeln!(out, "{count}");
        }
        Payload::Membership { member, violation } => {
            let _ = writeln!(out, "{}", yes_no(*member));
            if let Some(v) = violation {
                let _ = writeln!(out, "reason: {v}");
            }
        }
        Payload::AValues { a_values } => {
            for r in a_values {
                let _ = writeln!(out, "{} → {}", r.element, r.a);
            }
        }
        Payload::HTable { h } => {
            for r in h {
                let _ = writeln!(out, "{} {} {} {}", r.x, r.y, r.z, r.h);
            }
        }
        Payload::PhiIdentity {
            e,
            factorization_holds,
            negation_holds,
            sign,
            lhs_degree,
            rhs_degree,
        } => {
            let _ = writeln!(out, "e = {e}");
            let _ = writeln!(out, "factorization: {}", yes_no(*factorization_holds));
            if let Some(n) = negation_holds {
                let _ = writeln!(out, "negation: {}", yes_no(*n));
            }
            if let Some(s) = sign {
                let _ = writeln!(out, "sign: {}", sign_str(*s));
            }
            let _ = writeln!(out, "degrees: {lhs_degree} = {rhs_degree}");
        }
        Payload::E { e } => match e {
            Some(e) => {
                let _ = writeln!(out, "e = {e}");
            }
            None => out.push_str("e = NONE (semisimple)\n"),
        },
    }
    out
}

fn render_csv(record: &OutputRecord) -> Result<String, RenderError> {
    let (header, rows) = table(&record.result);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| RenderError::Csv(e.into_error().into()))?;
    String::from_utf8(bytes).map_err(|_| RenderError::Utf8)
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '{' => out.push_str("\\{"),
            '}' => out.push_str("\\}"),
            '|' => out.push_str("\\textbar{}"),
            '_' => out.push_str("\\_"),
            '&' => out.push_str("\\&"),
            '%' => out.push_str("\\%"),
            '$' => out.push_str("\\$"),
            '#' => out.push_str("\\#"),
            '\\' => out.push_str("\\textbackslash{}"),
            '~' => out.push_str("\\textasciitilde{}"),
            '^' => out.push_str("\\textasciicircum{}"),
            '→' => out.push_str("$\\to$"),
            _ => out.push(ch),
        }
    }
    out
}

fn caption(command: &str, q: &Query) -> String {
    let mut parts = Vec::new();
    if let Some(t) = &q.family {
        parts.push(format!("type {t}"));
    }
    if let Some(n) = q.n {
        parts.push(format!("n = {n}"));
    }
    if let Some(e) = q.e {
        parts.push(format!("e = {e}"));
    }
    if let Some(p) = q.characteristic {
        parts.push(format!("char {p}"));
    }
    if q.irr == Some(true) {
        parts.push("irr".into());
    }
    if let Some(w) = &q.weights {
        parts.push(format!("weights {w}"));
    }
    if let Some(mp) = &q.mp {
        parts.push(format!("mp {mp}"));
    }
    if let Some(g) = &q.group {
        parts.push(format!("group {g}"));
    }
    if q.dump_h == Some(true) {
        parts.push("dump-h".into());
    }
    if let Some(m) = q.order {
        parts.push(format!("order {m}"));
    }
    if parts.is_empty() {
        command.to_string()
    } else {
        format!("{command}: {}", parts.join(", "))
    }
}

fn render_latex(record: &OutputRecord) -> String {
    let (header, rows) = table(&record.result);
    let mut out = String::new();
    out.push_str("\\begin{table}[ht]\n\\centering\n");
    let _ = writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(header.len()));
    out.push_str("\\hline\n");
    let head: Vec<String> = header.iter().map(|h| latex_escape(h)).collect();
    let _ = writeln!(out, "{} \\\\", head.join(" & "));
    out.push_str("\\hline\n");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| latex_escape(c)).collect();
        let _ = writeln!(out, "{} \\\\", cells.join(" & "));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    let _ = writeln!(
        out,
        "\\caption{{{}}}",
        latex_escape(&caption(record.command, &record.query))
    );
    out.push_str("\\end{table}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::AValueRow;

    fn labels(orientations: Option<Vec<Option<String>>>) -> OutputRecord {
        OutputRecord::new(
            "basic-set",
            Query {
                family: Some("D".into()),
                n: Some(2),
                e: Some(2),
                characteristic: Some(0),
                irr: Some(false),
                ..Query::default()
            },
            Payload::Labels {
                labels: vec!["{[2],[]}".into(), "([1],+)".into()],
                orientations,
                degenerate_rank: true,
            },
        )
    }

    #[test]
    fn csv_quotes_commas() {
        let out = render(&labels(None), Format::Csv).unwrap();
        assert_eq!(out, "label\n\"{[2],[]}\"\n\"([1],+)\"\n");
        let out = render(&labels(Some(vec![Some("both".into()), None])), Format::Csv).unwrap();
        assert_eq!(out, "label,orientation\n\"{[2],[]}\",both\n\"([1],+)\",\n");
    }

    #[test]
    fn latex_escapes_and_captions() {
        let out = render(&labels(None), Format::Latex).unwrap();
        assert!(out.contains("\\{[2],[]\\} \\\\\n"));
        assert!(out.contains("\\caption{basic-set: type D, n = 2, e = 2, char 0}"));
        assert!(out.starts_with("\\begin{table}"));
    }

    #[test]
    fn a_value_table() {
        let rec = OutputRecord::new(
            "afunction",
            Query::default(),
            Payload::AValues {
                a_values: vec![AValueRow {
                    element: "e".into(),
                    length: 0,
                    a: 0,
                }],
            },
        );
        assert_eq!(render(&rec, Format::Text).unwrap(), "e → 0\n");
        assert_eq!(
            render(&rec, Format::Csv).unwrap(),
            "element,length,a\ne,0,0\n"
        );
    }

    #[test]
    fn json_is_tagged() {
        let out = render(&labels(None), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["kind"], "labels");
        assert_eq!(v["canonical_order"], true);
        assert_eq!(v["query"]["type"], "D");
    }
}
