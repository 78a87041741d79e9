//! Text, CSV, JSON and SVG rendering. All output here is byte-stable for
//! identical inputs: fixed orders, fixed float precision.

use std::fmt::Write;

use newtonineq::esf::{EsfSequence, PNorm};
use newtonineq::ineq::WedgeRow;
use newtonineq::roots::InterlaceReport;
use newtonineq::scalar::{rational_to_string, to_decimal_string, Rational};
use newtonineq::search::SearchResult;
use serde_json::json;

use crate::CheckRow;

fn scalar(r: &Rational, decimal: Option<usize>) -> String {
    match decimal {
        Some(digits) => to_decimal_string(r, digits),
        None => rational_to_string(r),
    }
}

/// The `e`, `E` and `P` rows of a sequence. Formal odd entries print as
/// `c*t`; the mean row is undefined in that mode.
pub fn esf_tables(seq: &EsfSequence, decimal: Option<usize>) -> String {
    let n = seq.n();
    let mut out = String::new();
    writeln!(out, "n: {n}").unwrap();
    if let Some(tau) = seq.formal_tau() {
        writeln!(
            out,
            "tau: {} (odd entries scale with t, t^2 = tau)",
            scalar(tau, decimal)
        )
        .unwrap();
    }
    let entry = |k: usize| -> String {
        if seq.is_formal() && k % 2 == 1 {
            format!("{}*t", scalar(&seq.raw()[k], decimal))
        } else {
            scalar(&seq.raw()[k], decimal)
        }
    };
    writeln!(
        out,
        "e: {}",
        (0..=n).map(entry).collect::<Vec<_>>().join(" ")
    )
    .unwrap();
    if seq.is_formal() {
        writeln!(out, "E: (undefined in formal-tau mode)").unwrap();
    } else {
        writeln!(
            out,
            "E: {}",
            (0..=n)
                .map(|k| scalar(&seq.mean_e(k).expect("k in range"), decimal))
                .collect::<Vec<_>>()
                .join(" ")
        )
        .unwrap();
    }
    writeln!(
        out,
        "P: {}",
        (0..=n)
            .map(|k| match seq.norm_p(k).expect("k in range") {
                PNorm::Exact(v) => scalar(&v, decimal),
                PNorm::FormalOddScale(c) => format!("{}*t", scalar(&c, decimal)),
            })
            .collect::<Vec<_>>()
            .join(" ")
    )
    .unwrap();
    out
}

/// CSV report, one row per checked instance, ordered by (family, k, l).
pub fn check_csv(rows: &[CheckRow]) -> String {
    let mut out = String::from("family,n,k,l,lhs,rhs,constant_num,constant_den,holds,margin\n");
    for row in rows {
        let r = &row.report;
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.family,
            r.n,
            r.k,
            r.l,
            rational_to_string(&r.lhs),
            rational_to_string(&r.rhs),
            r.constant.numer(),
            r.constant.denom(),
            r.holds,
            rational_to_string(&r.margin),
        )
        .unwrap();
    }
    out
}

pub fn lemma23_json(index: usize, n: usize, report: &InterlaceReport) -> String {
    let mut flags = Vec::new();
    if report.odd_part_zero {
        flags.push("odd_part_zero");
    }
    if report.odd_degree_deficit {
        flags.push("odd_degree_deficit");
    }
    json!({
        "index": index,
        "n": n,
        "all_real_even": report.even_all_real,
        "all_real_odd": report.odd_all_real,
        "interlace": report.interlaces,
        "degenerate_flags": flags,
        "pass": report.pass,
    })
    .to_string()
}

pub fn wedge_csv(rows: &[WedgeRow]) -> String {
    let mut out = String::from("lambda,theta_radians,x,y\n");
    for row in rows {
        writeln!(
            out,
            "{},{:.12},{:.12},{:.12}",
            rational_to_string(&row.lambda),
            row.theta_radians,
            row.x,
            row.y
        )
        .unwrap();
    }
    out
}

pub fn search_json(result: &SearchResult) -> String {
    let witness: serde_json::Value =
        serde_json::from_str(&result.witness.to_json()).expect("valid witness json");
    json!({
        "key": result.key(),
        "family": result.family.tag(),
        "n": result.n,
        "k": result.k,
        "l": result.l,
        "h": result.h,
        "best_ratio": result.best_ratio,
        "iterations": result.iterations,
        "budget": result.budget,
        "seed": result.seed,
        "progress": result.progress,
        "witness": witness,
    })
    .to_string()
}

// Fixed SVG geometry: one 420x420 panel per wedge, axes at the panel
// center, wedge radius 160px. Illustrative, not data-bearing.
const PANEL: f64 = 420.0;
const AXIS: f64 = 190.0;
const RADIUS: f64 = 160.0;

pub fn wedge_svg(lambdas: &[Rational]) -> String {
    use num_traits::ToPrimitive;
    let width = PANEL * lambdas.len() as f64;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{PANEL:.0}" viewBox="0 0 {width:.0} {PANEL:.0}">"#
    )
    .unwrap();
    for (i, lambda) in lambdas.iter().enumerate() {
        let cx = PANEL * i as f64 + PANEL / 2.0;
        let cy = PANEL / 2.0;
        let theta = lambda.to_f64().unwrap().sqrt().min(1.0).acos();
        let (sin, cos) = theta.sin_cos();
        let (x_edge, y_up, y_down) = (cx + RADIUS * cos, cy - RADIUS * sin, cy + RADIUS * sin);
        if sin > 1e-12 {
            writeln!(
                out,
                r##"  <path d="M {cx:.4} {cy:.4} L {x_edge:.4} {y_up:.4} A {RADIUS:.4} {RADIUS:.4} 0 0 1 {x_edge:.4} {y_down:.4} Z" fill="#9ecae1" stroke="#3182bd" stroke-width="1"/>"##
            )
            .unwrap();
        } else {
            writeln!(
                out,
                r##"  <line x1="{cx:.4}" y1="{cy:.4}" x2="{:.4}" y2="{cy:.4}" stroke="#3182bd" stroke-width="2"/>"##,
                cx + RADIUS
            )
            .unwrap();
        }
        writeln!(
            out,
            r#"  <line x1="{:.4}" y1="{cy:.4}" x2="{:.4}" y2="{cy:.4}" stroke="black" stroke-width="1"/>"#,
            cx - AXIS,
            cx + AXIS
        )
        .unwrap();
        writeln!(
            out,
            r#"  <line x1="{cx:.4}" y1="{:.4}" x2="{cx:.4}" y2="{:.4}" stroke="black" stroke-width="1"/>"#,
            cy - AXIS,
            cy + AXIS
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{:.4}" y="{:.4}" font-size="14">Re(z)</text>"#,
            cx + AXIS - 38.0,
            cy - 8.0
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{:.4}" y="{:.4}" font-size="14">Im(z)</text>"#,
            cx + 8.0,
            cy - AXIS + 14.0
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{:.4}" y="{:.4}" font-size="14" text-anchor="middle">|arg(z)| &lt;= acos(sqrt({}))</text>"#,
            cx,
            PANEL - 12.0,
            rational_to_string(lambda)
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}
