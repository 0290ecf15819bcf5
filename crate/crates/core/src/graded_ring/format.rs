//! Line-oriented presentation files.
//!
//! ```text
//! # comment
//! ID kR
//! INVERT 3
//! GEN ub DEG 1+1s TORSION 0
//! GEN u2s DEG 2-2s TORSION 0 INV
//! DEF v0(m) = 2*u2s^m
//! REL as^3*ub = 0
//! WINDOW -12 12 -12 12
//! CHART 0-1s FREE - TORSION as
//! ```

use num_traits::One;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::expr::{self, ElementExpr, ExpArg};
use crate::ro_grade::RODegree;

use super::{ChartCell, ChartData, Definition, Element, GeneratorSymbol, Monomial, Presentation, Window};

fn corrupt(line_no: usize, msg: impl std::fmt::Display) -> Error {
    Error::CorruptData(format!("line {line_no}: {msg}"))
}

/// Raw product of generator powers, with no rewriting.
fn raw_monomial(e: &ElementExpr, p: &Presentation) -> Result<Monomial> {
    match e {
        ElementExpr::Sym(s) => p
            .generator_index(s)
            .map(|g| Monomial::var(g, 1))
            .ok_or_else(|| Error::UnknownGenerator(s.clone())),
        ElementExpr::Pow(b, ExpArg::Int(n)) => Ok(raw_monomial(b, p)?.pow(*n)),
        ElementExpr::Mul(x, y) => Ok(raw_monomial(x, p)?.mul(&raw_monomial(y, p)?)),
        ElementExpr::Num(c) if c.is_one() => Ok(Monomial::one()),
        _ => Err(Error::CorruptData(format!("relation left side `{e}` is not a monomial"))),
    }
}

pub(super) fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Presentation::new("");
    let mut chart_lines: Vec<(usize, String)> = Vec::new();
    let mut window = None;
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match kw {
            "ID" => p.id = rest.to_string(),
            "INVERT" => {
                let k: i64 = rest.parse().map_err(|_| corrupt(n, "bad INVERT"))?;
                if k == 0 {
                    return Err(Error::ZeroInversion);
                }
                p.add_inverted(k);
            }
            "GEN" => {
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() < 5 || f[1] != "DEG" || f[3] != "TORSION" {
                    return Err(corrupt(n, "expected GEN <name> DEG <deg> TORSION <0|2> [INV]"));
                }
                let degree: RODegree = f[2].parse().map_err(|e| corrupt(n, e))?;
                let torsion_order: u8 = f[4].parse().map_err(|_| corrupt(n, "bad torsion order"))?;
                let invertible = match f.get(5) {
                    None => false,
                    Some(&"INV") => true,
                    Some(x) => return Err(corrupt(n, format!("unexpected `{x}`"))),
                };
                p.add_generator(GeneratorSymbol {
                    name: f[0].to_string(),
                    degree,
                    torsion_order,
                    invertible,
                })
                .map_err(|e| corrupt(n, e))?;
            }
            "DEF" => {
                let (head, body) = rest.split_once('=').ok_or_else(|| corrupt(n, "expected DEF name = expr"))?;
                let head = head.trim();
                let (name, param) = match head.split_once('(') {
                    Some((name, tail)) => {
                        let param = tail.strip_suffix(')').ok_or_else(|| corrupt(n, "bad family head"))?;
                        (name.trim().to_string(), Some(param.trim().to_string()))
                    }
                    None => (head.to_string(), None),
                };
                let body = expr::parse(body).map_err(|e| corrupt(n, e))?;
                p.add_definition(Definition { name, param, body }).map_err(|e| corrupt(n, e))?;
            }
            "REL" => {
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| corrupt(n, "expected REL lhs = rhs"))?;
                let lhs = raw_monomial(&expr::parse(lhs).map_err(|e| corrupt(n, e))?, &p).map_err(|e| corrupt(n, e))?;
                let rhs = p.eval(rhs).map_err(|e| corrupt(n, e))?;
                let ldeg = p.monomial_degree(&lhs)?;
                if !rhs.is_zero() && rhs.degree != ldeg {
                    return Err(corrupt(n, format!("relation is not homogeneous ({ldeg} vs {})", rhs.degree)));
                }
                p.add_relation(lhs, rhs.terms).map_err(|e| corrupt(n, e))?;
            }
            "TRUNCATE" => {
                let f: Vec<&str> = rest.split_whitespace().collect();
                let (Some(name), Some(lo), 2) = (f.first(), f.get(1), f.len()) else {
                    return Err(corrupt(n, "expected TRUNCATE <generator> <min exponent>"));
                };
                let g = p.generator_index(name).ok_or_else(|| corrupt(n, format!("unknown generator `{name}`")))?;
                let lo: i64 = lo.parse().map_err(|_| corrupt(n, "bad exponent"))?;
                p.truncation = Some((g, lo));
            }
            "WINDOW" => {
                let v: Vec<i64> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| corrupt(n, "bad WINDOW")))
                    .collect::<Result<_>>()?;
                if v.len() != 4 {
                    return Err(corrupt(n, "WINDOW takes four integers"));
                }
                window = Some(Window::new(v[0], v[1], v[2], v[3]));
            }
            "CHART" => chart_lines.push((n, rest.to_string())),
            other => return Err(corrupt(n, format!("unknown directive `{other}`"))),
        }
    }
    let window = window.ok_or_else(|| Error::CorruptData("missing WINDOW".into()))?;
    let mut chart = ChartData::new(window);
    for (n, rest) in chart_lines {
        let (deg, cell) = parse_chart_line(&rest, &p).map_err(|e| corrupt(n, e))?;
        let (a, b) = deg.to_i64_pair().ok_or_else(|| corrupt(n, "degree too large"))?;
        if !window.contains_pair(a, b) {
            return Err(corrupt(n, format!("cell {deg} outside window")));
        }
        chart.set_cell(a, b, cell);
    }
    p.chart = chart;
    p.check_confluence()?;
    p.validate_chart()?;
    Ok(p)
}

fn parse_chart_line(rest: &str, p: &Presentation) -> Result<(RODegree, ChartCell)> {
    let bad = || Error::CorruptData("expected CHART <deg> FREE <list> TORSION <list>".into());
    let (deg, tail) = rest.split_once(" FREE ").ok_or_else(bad)?;
    let (free, torsion) = tail.split_once(" TORSION ").ok_or_else(bad)?;
    let deg: RODegree = deg.trim().parse()?;
    let list = |s: &str| -> Result<Vec<Element>> {
        let s = s.trim();
        if s == "-" {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|item| {
                let x = p.eval(item)?;
                if x.degree != deg {
                    return Err(Error::CorruptData(format!("`{}` has degree {}, not {deg}", item.trim(), x.degree)));
                }
                Ok(x)
            })
            .collect()
    };
    Ok((
        deg.clone(),
        ChartCell {
            free: list(free)?,
            torsion: list(torsion)?,
        },
    ))
}

pub(super) fn write_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    out.push_str(&format!("ID {}\n", p.id));
    for k in p.inverted_integers() {
        out.push_str(&format!("INVERT {k}\n"));
    }
    for g in p.generators() {
        out.push_str(&format!(
            "GEN {} DEG {} TORSION {}{}\n",
            g.name,
            g.degree,
            g.torsion_order,
            if g.invertible { " INV" } else { "" }
        ));
    }
    for d in p.definitions() {
        match &d.param {
            Some(q) => out.push_str(&format!("DEF {}({q}) = {}\n", d.name, d.body)),
            None => out.push_str(&format!("DEF {} = {}\n", d.name, d.body)),
        }
    }
    for r in p.relations() {
        let deg = p.monomial_degree(&r.lhs).expect("relation over p");
        let rhs = Element {
            degree: deg,
            terms: r.rhs.clone(),
        };
        out.push_str(&format!("REL {} = {}\n", p.format_monomial(&r.lhs), format_raw(p, &rhs)));
    }
    if let Some((g, lo)) = p.truncation {
        out.push_str(&format!("TRUNCATE {} {lo}\n", p.generator(g).name));
    }
    let w = p.chart.window;
    out.push_str(&format!("WINDOW {} {} {} {}\n", w.amin, w.amax, w.bmin, w.bmax));
    for ((a, b), cell) in p.chart.cells() {
        out.push_str(&chart_line(p, &RODegree::new(a, b), cell));
        out.push('\n');
    }
    out
}

// Relation right sides are printed without family abbreviations so they
// re-parse identically regardless of definition order.
fn format_raw(p: &Presentation, x: &Element) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (m, c)) in x.terms.iter().enumerate() {
        let mono = p.format_monomial(m);
        let neg = num_traits::Signed::is_negative(c);
        let mag: Coeff = num_traits::Signed::abs(c);
        if i > 0 {
            s.push_str(if neg { " - " } else { " + " });
        } else if neg {
            s.push('-');
        }
        if mag.is_one() {
            s.push_str(&mono);
        } else if mono == "1" {
            s.push_str(&crate::coeff::format(&mag));
        } else {
            s.push_str(&format!("{}*{}", crate::coeff::format(&mag), mono));
        }
    }
    s
}

pub(crate) fn chart_line(p: &Presentation, d: &RODegree, cell: &ChartCell) -> String {
    let list = |v: &[Element]| {
        if v.is_empty() {
            "-".to_string()
        } else {
            v.iter().map(|x| p.format_element(x)).collect::<Vec<_>>().join(",")
        }
    };
    format!("CHART {d} FREE {} TORSION {}", list(&cell.free), list(&cell.torsion))
}

