//! Bijectivity, nonlinearity, SAC and BIC measurements of an s-box, and
//! the report used to compare a clone against its seed.

mod avalanche;
mod boolean;
mod stats;
mod walsh;

pub use avalanche::{
    bic_nonlinearity_stats, bic_nonlinearity_stats_with, bic_sac_pair_counts, bic_sac_stats,
    bic_sac_stats_with, sac_dependence_matrix, sac_dependence_matrix_with, sac_stats,
    sac_stats_with, sbox_nonlinearity_stats, sbox_nonlinearity_stats_with, DependenceMatrix,
};
pub use boolean::{component_function, is_bijective_strict, BooleanFunctionTable};
pub use stats::{Fraction, PropertyStats};
pub use walsh::{max_balanced_nonlinearity, nonlinearity, walsh_spectrum, WalshSpectrum};

use crate::cloning::{find_fixed_points, FixedPointReport};
use crate::exec::Exec;
use crate::sbox::SBox;

/// Tolerance for the rational-valued statistics in [`compare_reports`].
pub const RATIONAL_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub n: u32,
    pub bijective: bool,
    pub fixed_points: FixedPointReport,
    /// Balanced-function nonlinearity bound for this n; `None` for n < 3.
    pub nl_bound: Option<u64>,
    pub nl: PropertyStats,
    pub sac: PropertyStats,
    pub bic_nl: PropertyStats,
    pub bic_sac: PropertyStats,
}

pub fn analyze(s: &SBox) -> AnalysisReport {
    analyze_with(s, Exec::default())
}

pub fn analyze_with(s: &SBox, exec: Exec) -> AnalysisReport {
    AnalysisReport {
        n: s.n(),
        bijective: is_bijective_strict(s),
        fixed_points: find_fixed_points(s),
        nl_bound: max_balanced_nonlinearity(s.n()).ok(),
        nl: sbox_nonlinearity_stats_with(s, exec),
        sac: sac_stats_with(s, exec),
        bic_nl: bic_nonlinearity_stats_with(s, exec),
        bic_sac: bic_sac_stats_with(s, exec),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDiff {
    pub field: String,
    pub left: String,
    pub right: String,
}

/// Fields on which two reports disagree, in report order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReportDiff {
    pub differences: Vec<FieldDiff>,
}

impl ReportDiff {
    pub fn is_equal(&self) -> bool {
        self.differences.is_empty()
    }

    /// Distinct top-level groups that differ, e.g. `["nl", "sac"]`.
    pub fn groups(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for d in &self.differences {
            let g = d.field.split('.').next().unwrap_or(&d.field);
            if !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }

    fn push(&mut self, field: String, left: String, right: String) {
        self.differences.push(FieldDiff { field, left, right });
    }
}

/// Compares the criteria preserved by cloning: width, bijectivity and the
/// four stats families. Integer-valued families (nl, bic_nl) must match
/// exactly; sac and bic_sac within [`RATIONAL_TOLERANCE`]. Fixed points are
/// not compared.
pub fn compare_reports(a: &AnalysisReport, b: &AnalysisReport) -> ReportDiff {
    let mut diff = ReportDiff::default();
    if a.n != b.n {
        diff.push("n".into(), a.n.to_string(), b.n.to_string());
    }
    if a.bijective != b.bijective {
        diff.push(
            "bijective".into(),
            a.bijective.to_string(),
            b.bijective.to_string(),
        );
    }
    compare_exact(&mut diff, "nl", &a.nl, &b.nl);
    compare_tolerant(&mut diff, "sac", &a.sac, &b.sac);
    compare_exact(&mut diff, "bic_nl", &a.bic_nl, &b.bic_nl);
    compare_tolerant(&mut diff, "bic_sac", &a.bic_sac, &b.bic_sac);
    diff
}

fn compare_exact(diff: &mut ReportDiff, group: &str, a: &PropertyStats, b: &PropertyStats) {
    let fields: [(&str, Fraction, Fraction); 4] = [
        ("min", a.min_exact(), b.min_exact()),
        ("max", a.max_exact(), b.max_exact()),
        ("avg", a.avg_exact(), b.avg_exact()),
        ("var", a.variance_exact(), b.variance_exact()),
    ];
    for (name, x, y) in fields {
        if x.num * y.den != y.num * x.den {
            let (field, l, r) = if name == "var" {
                ("sd", a.sd_text(6), b.sd_text(6))
            } else {
                (name, x.to_fixed(6), y.to_fixed(6))
            };
            diff.push(format!("{group}.{field}"), l, r);
        }
    }
}

fn compare_tolerant(diff: &mut ReportDiff, group: &str, a: &PropertyStats, b: &PropertyStats) {
    let fields = [
        ("min", a.min(), b.min()),
        ("max", a.max(), b.max()),
        ("avg", a.avg(), b.avg()),
        ("sd", a.sd(), b.sd()),
    ];
    for (name, x, y) in fields {
        if (x - y).abs() > RATIONAL_TOLERANCE {
            diff.push(
                format!("{group}.{name}"),
                format!("{x:.6}"),
                format!("{y:.6}"),
            );
        }
    }
}
