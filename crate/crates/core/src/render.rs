//! Text renderings of chart data shared by the command line and tests.

use crate::graded_ring::{ChartCell, Presentation, Window};
use crate::ro_grade::RODegree;

/// `Z^r + (Z/2)^s`, or `0`.
pub fn structure(cell: &ChartCell) -> String {
    let mut parts = Vec::new();
    if !cell.free.is_empty() {
        parts.push(format!("Z^{}", cell.free.len()));
    }
    if !cell.torsion.is_empty() {
        parts.push(format!("(Z/2)^{}", cell.torsion.len()));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// One-line description of a cell, e.g. `Z^1, basis: u2s^2`.
pub fn group_line(p: &Presentation, cell: &ChartCell) -> String {
    let all: Vec<String> = cell.basis().map(|x| p.format_element(x)).collect();
    if all.is_empty() {
        return "0".into();
    }
    format!("{}, basis: {}", structure(cell), all.join(", "))
}

/// CSV with one row per degree of `window`, sorted by `(a, b)`.
pub fn chart_csv(p: &Presentation, window: &Window) -> String {
    let empty = ChartCell::default();
    let join = |v: &[crate::Element]| v.iter().map(|x| p.format_element(x)).collect::<Vec<_>>().join(";");
    let mut out = String::from("a,b,free_rank,torsion2_rank,free_basis,torsion_basis\n");
    for (a, b) in window.degrees() {
        let cell = p.chart.cell(&RODegree::new(a, b)).unwrap_or(&empty);
        out.push_str(&format!(
            "{a},{b},{},{},{},{}\n",
            cell.free.len(),
            cell.torsion.len(),
            join(&cell.free),
            join(&cell.torsion)
        ));
    }
    out
}

/// The `(a, b)` lattice with `b` increasing upwards: `Z` free, `2` torsion,
/// `*` both, `.` zero.
pub fn chart_ascii(p: &Presentation, window: &Window) -> String {
    let mut out = String::new();
    for b in (window.bmin..=window.bmax).rev() {
        out.push_str(&format!("{b:>4} "));
        for a in window.amin..=window.amax {
            let glyph = match p.chart.cell(&RODegree::new(a, b)) {
                Ok(c) if !c.free.is_empty() && !c.torsion.is_empty() => '*',
                Ok(c) if !c.free.is_empty() => 'Z',
                Ok(c) if !c.torsion.is_empty() => '2',
                _ => '.',
            };
            out.push(glyph);
        }
        out.push('\n');
    }
    out.push_str(&format!("     a = {}..{}\n", window.amin, window.amax));
    out
}
