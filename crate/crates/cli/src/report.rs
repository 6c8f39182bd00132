//! Rendering of analysis reports.
//!
//! Field order is fixed, decimals are exact round-half-even to six places,
//! and lines end in LF, so identical inputs give byte-identical documents.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use sboxforge::{AnalysisReport, PropertyStats};

pub const PLACES: u32 = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub fn render(report: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Text => render_text(report),
        Format::Json => render_json(report),
    }
}

/// Stats fields in output order. `nl` omits `sd`, matching the nonlinearity
/// columns of the usual comparison tables.
fn stats_fields(s: &PropertyStats, with_sd: bool) -> Vec<(&'static str, String)> {
    let mut fields = vec![
        ("min", s.min_text(PLACES)),
        ("max", s.max_text(PLACES)),
        ("avg", s.avg_text(PLACES)),
    ];
    if with_sd {
        fields.push(("sd", s.sd_text(PLACES)));
    }
    fields
}

fn families(r: &AnalysisReport) -> [(&'static str, &PropertyStats, bool); 4] {
    [
        ("nl", &r.nl, false),
        ("sac", &r.sac, true),
        ("bic_nl", &r.bic_nl, true),
        ("bic_sac", &r.bic_sac, true),
    ]
}

fn join(set: &BTreeSet<u32>, sep: &str) -> String {
    set.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

fn bound_text(r: &AnalysisReport) -> String {
    r.nl_bound
        .map_or_else(|| "none".to_string(), |b| b.to_string())
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", r.n);
    let _ = writeln!(out, "bijective: {}", r.bijective);
    let _ = writeln!(out, "fixed_points: [{}]", join(&r.fixed_points.fixed, ", "));
    let _ = writeln!(
        out,
        "reverse_fixed_points: [{}]",
        join(&r.fixed_points.reverse_fixed, ", ")
    );
    for (name, stats, with_sd) in families(r) {
        let cells: Vec<String> = stats_fields(stats, with_sd)
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "{name}: {}", cells.join(" "));
        if name == "nl" {
            let _ = writeln!(out, "nl_bound: {}", bound_text(r));
        }
    }
    out
}

pub fn render_json(r: &AnalysisReport) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"n\": {},", r.n);
    let _ = writeln!(out, "  \"bijective\": {},", r.bijective);
    let _ = writeln!(
        out,
        "  \"fixed_points\": [{}],",
        join(&r.fixed_points.fixed, ", ")
    );
    let _ = writeln!(
        out,
        "  \"reverse_fixed_points\": [{}],",
        join(&r.fixed_points.reverse_fixed, ", ")
    );
    let fams = families(r);
    for (idx, (name, stats, with_sd)) in fams.iter().enumerate() {
        let body: Vec<String> = stats_fields(stats, *with_sd)
            .into_iter()
            .map(|(k, v)| format!("\"{k}\": {v}"))
            .collect();
        let comma = if idx + 1 < fams.len() { "," } else { "" };
        let _ = writeln!(out, "  \"{name}\": {{{}}}{comma}", body.join(", "));
        if *name == "nl" {
            let bound = r
                .nl_bound
                .map_or_else(|| "null".to_string(), |b| b.to_string());
            let _ = writeln!(out, "  \"nl_bound\": {bound},");
        }
    }
    out.push_str("}\n");
    out
}
