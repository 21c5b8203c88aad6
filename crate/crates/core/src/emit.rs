//! Markdown, CSV and JSON renderings of tables and reports.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{CatalogReport, OrbitRecord, TableRow, VerificationReport};
use crate::error::{Error, Result};
use crate::picard::DivisorClass;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Parse { token: s.to_string(), reason: "expected json, csv or md".into() }),
        }
    }
}

/// One printed row: a class together with its orbit data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowView {
    pub stratum: String,
    pub rep: DivisorClass,
    pub notation: String,
    pub u: u64,
    pub ell: u64,
    pub s_set: Vec<i64>,
    pub flags: Vec<&'static str>,
}

impl RowView {
    pub fn from_record(r: &OrbitRecord, display: DivisorClass) -> Self {
        let f = &r.flags;
        let flags = [
            (f.effective, "effective"),
            (f.initialized, "initialized"),
            (f.nef, "nef"),
            (f.ell == 0, "acm"),
            (f.ulrich, "ulrich"),
            (f.weakly_ulrich, "weakly-ulrich"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect();
        RowView {
            stratum: format!("({},{})", r.self_intersection, r.degree),
            rep: display,
            notation: display.paper_notation(),
            u: r.u,
            ell: f.ell,
            s_set: f.s_set.clone(),
            flags,
        }
    }

    pub fn from_table_row(row: &TableRow) -> Self {
        RowView::from_record(&row.record, row.display)
    }
}

pub fn set_text(s: &[i64]) -> String {
    let inner: Vec<String> = s.iter().map(i64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Consistency(format!("csv output failed: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Consistency(format!("csv output failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn markdown(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    out
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("values serialize") + "\n"
}

const ROW_HEADER: [&str; 7] = ["stratum", "rep-json", "rep-paper-notation", "u", "ell", "s_set", "flags"];

pub fn rows(views: &[RowView], format: Format) -> Result<String> {
    let cells = views.iter().map(|v| {
        vec![
            v.stratum.clone(),
            v.rep.to_json(),
            v.notation.clone(),
            v.u.to_string(),
            v.ell.to_string(),
            set_text(&v.s_set),
            v.flags.join(";"),
        ]
    });
    Ok(match format {
        Format::Json => json(views),
        Format::Csv => csv_text(&ROW_HEADER, cells)?,
        Format::Markdown => markdown(&ROW_HEADER, cells),
    })
}

pub fn table(rows_in: &[TableRow], format: Format) -> Result<String> {
    let views: Vec<RowView> = rows_in.iter().map(RowView::from_table_row).collect();
    rows(&views, format)
}

pub fn report(r: &VerificationReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => json(r),
        Format::Csv => csv_text(
            &["statement", "bounds", "orbits", "classes", "counterexample", "detail"],
            std::iter::once(vec![
                r.statement.clone(),
                r.bounds.clone(),
                r.orbits_checked.to_string(),
                r.classes_checked.to_string(),
                String::new(),
                if r.success() { "ok".into() } else { format!("{} counterexamples", r.counterexamples.len()) },
            ])
            .chain(r.counterexamples.iter().map(|c| {
                vec![
                    r.statement.clone(),
                    r.bounds.clone(),
                    String::new(),
                    String::new(),
                    c.class.paper_notation(),
                    c.detail.clone(),
                ]
            })),
        )?,
        Format::Markdown => {
            let mut out = format!(
                "**{}** ({}): {}\n\n- orbits checked: {}\n- classes checked: {}\n",
                r.statement,
                r.bounds,
                if r.success() { "holds" } else { "FAILS" },
                r.orbits_checked,
                r.classes_checked
            );
            for note in &r.notes {
                let _ = writeln!(out, "- {note}");
            }
            for c in &r.counterexamples {
                let _ = writeln!(out, "- counterexample `{}`: {}", c.class.paper_notation(), c.detail);
            }
            out
        }
    })
}

pub fn catalog(reports: &[CatalogReport], format: Format) -> Result<String> {
    let header = ["degree", "configuration", "class", "ell", "s_set", "initialized", "status"];
    let cells = reports.iter().map(|r| {
        vec![
            r.degree.to_string(),
            r.entry.description.clone(),
            r.class.paper_notation(),
            r.ell.to_string(),
            set_text(&r.s_set),
            r.initialized.to_string(),
            if r.passed() { "ok".into() } else { "MISMATCH".into() },
        ]
    });
    Ok(match format {
        Format::Json => json(reports),
        Format::Csv => csv_text(&header, cells)?,
        Format::Markdown => markdown(&header, cells),
    })
}

/// `(ell, d, holds)` triples.
pub fn truth_table(entries: &[(i64, i64, bool)], format: Format) -> Result<String> {
    #[derive(Serialize)]
    struct Entry {
        ell: i64,
        d: i64,
        holds: bool,
    }
    let header = ["ell", "d", "holds"];
    let cells = entries.iter().map(|&(l, d, h)| vec![l.to_string(), d.to_string(), h.to_string()]);
    Ok(match format {
        Format::Json => {
            let v: Vec<Entry> = entries.iter().map(|&(ell, d, holds)| Entry { ell, d, holds }).collect();
            json(&v)
        }
        Format::Csv => csv_text(&header, cells)?,
        Format::Markdown => markdown(&header, cells),
    })
}
