//! The built-in spectra, their underlying rings, localization and the
//! restriction to underlying homotopy.

pub mod model;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed};

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::graded_ring::{ChartCell, Element, GeneratorSymbol, Monomial, Presentation};
use crate::ro_grade::RODegree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectrumId {
    /// Connective Real K-theory `kR`.
    KRConnective,
    KR,
    /// Connective `tmf1(3)`.
    Tmf13,
    TMF13,
}

impl SpectrumId {
    pub const ALL: [SpectrumId; 4] = [
        SpectrumId::KRConnective,
        SpectrumId::KR,
        SpectrumId::Tmf13,
        SpectrumId::TMF13,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpectrumId::KRConnective => "kR",
            SpectrumId::KR => "KR",
            SpectrumId::Tmf13 => "tmf13",
            SpectrumId::TMF13 => "TMF13",
        }
    }

    pub fn is_periodic(self) -> bool {
        matches!(self, SpectrumId::KR | SpectrumId::TMF13)
    }

    pub fn is_tmf(self) -> bool {
        matches!(self, SpectrumId::Tmf13 | SpectrumId::TMF13)
    }

    /// Name of the C₂-fixed points' homotopy.
    pub fn fixed_name(self) -> &'static str {
        match self {
            SpectrumId::KRConnective => "ko",
            SpectrumId::KR => "KO",
            SpectrumId::Tmf13 => "tmf0(3)",
            SpectrumId::TMF13 => "TMF0(3)",
        }
    }

    /// Shipped data file, relative to the crate's `data/` directory.
    pub fn file_name(self, underlying: bool) -> &'static str {
        match (self, underlying) {
            (SpectrumId::KRConnective, false) => "kr_connective.pres",
            (SpectrumId::KR, false) => "kr_periodic.pres",
            (SpectrumId::Tmf13, false) => "tmf13_connective.pres",
            (SpectrumId::TMF13, false) => "tmf13_periodic.pres",
            (SpectrumId::KRConnective, true) => "ku.pres",
            (SpectrumId::KR, true) => "ku_periodic.pres",
            (SpectrumId::Tmf13, true) => "tmf1_3.pres",
            (SpectrumId::TMF13, true) => "tmf1_3_periodic.pres",
        }
    }

    pub fn shipped_text(self, underlying: bool) -> &'static str {
        match (self, underlying) {
            (SpectrumId::KRConnective, false) => include_str!("../../data/kr_connective.pres"),
            (SpectrumId::KR, false) => include_str!("../../data/kr_periodic.pres"),
            (SpectrumId::Tmf13, false) => include_str!("../../data/tmf13_connective.pres"),
            (SpectrumId::TMF13, false) => include_str!("../../data/tmf13_periodic.pres"),
            (SpectrumId::KRConnective, true) => include_str!("../../data/ku.pres"),
            (SpectrumId::KR, true) => include_str!("../../data/ku_periodic.pres"),
            (SpectrumId::Tmf13, true) => include_str!("../../data/tmf1_3.pres"),
            (SpectrumId::TMF13, true) => include_str!("../../data/tmf1_3_periodic.pres"),
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SpectrumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpectrumId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "kR" => Ok(SpectrumId::KRConnective),
            "KR" => Ok(SpectrumId::KR),
            "tmf13" | "tmf1(3)" => Ok(SpectrumId::Tmf13),
            "TMF13" | "TMF1(3)" => Ok(SpectrumId::TMF13),
            other => Err(Error::CorruptData(format!("unknown spectrum `{other}`"))),
        }
    }
}

type Cached = OnceLock<Result<Arc<Presentation>>>;
static EQUIVARIANT: [Cached; 4] = [const { OnceLock::new() }; 4];
static UNDERLYING: [Cached; 4] = [const { OnceLock::new() }; 4];

const CLOSURE_SAMPLES: usize = 256;
const CLOSURE_SEED: u64 = 0xC2;

fn load(id: SpectrumId, underlying: bool) -> Result<Arc<Presentation>> {
    let mut p = Presentation::from_text(id.shipped_text(underlying))?;
    p.check_closure(CLOSURE_SAMPLES, CLOSURE_SEED)?;
    if !underlying {
        p.family = Some(id.name().to_string());
    }
    Ok(Arc::new(p))
}

/// The shipped presentation of `id`, parsed and checked once per process.
pub fn builtin(id: SpectrumId) -> Result<Arc<Presentation>> {
    EQUIVARIANT[id.index()].get_or_init(|| load(id, false)).clone()
}

/// The underlying (non-equivariant) ring of `id`, graded in degrees `(n, 0)`.
pub fn underlying(id: SpectrumId) -> Result<Arc<Presentation>> {
    UNDERLYING[id.index()].get_or_init(|| load(id, true)).clone()
}

/// The built-in family a presentation derives from.
pub fn family_of(p: &Presentation) -> Option<SpectrumId> {
    p.family.as_deref().and_then(|f| f.parse().ok())
}

/// The chart cell at `d`, falling back to the closed-form model outside the
/// window when `p` is (a base change of) a built-in spectrum.
pub fn cell_at(p: &Presentation, d: &RODegree) -> Result<ChartCell> {
    if let Ok(cell) = p.chart.cell(d) {
        return Ok(cell.clone());
    }
    let (a, b) = d.to_i64_pair().ok_or_else(|| Error::OutsideWindow(d.clone()))?;
    match family_of(p) {
        Some(id) => Ok(model::cell(id, false, p, a, b)),
        None => Err(Error::OutsideWindow(d.clone())),
    }
}

/// Image of each generator under restriction to underlying homotopy.
fn lift_image(name: &str) -> Option<&'static str> {
    Some(match name {
        "as" => "0",
        "ub" => "u",
        "u2s" => "1",
        "a1b" => "a1",
        "a3b" => "a3",
        "Db" => "D",
        _ => return None,
    })
}

/// Restriction `res: π_★ E → π_* e` along `C₂/e → pt`, as a ring map.
#[derive(Clone, Debug)]
pub struct Restriction {
    underlying: Presentation,
    images: Vec<Element>,
}

impl Restriction {
    pub fn new(p: &Presentation) -> Result<Self> {
        let id = family_of(p).ok_or_else(|| Error::CorruptData(format!("`{}` has no underlying ring", p.id)))?;
        let mut und = (*underlying(id)?).clone();
        for &k in p.inverted_integers() {
            und.add_inverted(k);
        }
        let images = p
            .generators()
            .iter()
            .map(|g| {
                let text = lift_image(&g.name).ok_or_else(|| Error::UnknownGenerator(g.name.clone()))?;
                und.eval(text)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Restriction { underlying: und, images })
    }

    pub fn underlying(&self) -> &Presentation {
        &self.underlying
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        let und = &self.underlying;
        let target = RODegree::new(x.degree.underlying_degree(), 0);
        let mut terms = Vec::new();
        for (m, c) in &x.terms {
            let mut img = und.scalar(c.clone());
            for &(g, e) in m.entries() {
                let pw = und.pow(&self.images[g as usize], e)?;
                img = und.mul(&img, &pw);
                if img.is_zero() {
                    break;
                }
            }
            terms.extend(img.terms);
        }
        Ok(und.element_from_terms(target, terms))
    }
}

pub fn restriction(x: &Element, p: &Presentation) -> Result<Element> {
    Restriction::new(p)?.apply(x)
}

/// `p[1/k]`. Inverting an even integer discards all 2-torsion.
pub fn invert_integer(p: &Presentation, k: i64) -> Result<Presentation> {
    if k == 0 {
        return Err(Error::ZeroInversion);
    }
    let mut q = p.clone();
    if p.is_inverted(k) {
        return Ok(q);
    }
    q.add_inverted(k.abs());
    q.id = format!("{}[1/{}]", p.id, k.abs());
    if k % 2 == 0 {
        for cell in q.chart.cells_mut() {
            cell.torsion.clear();
        }
        q.chart.retain(|_, _| true);
    }
    Ok(q)
}

/// Inverts a generator of infinite order.
pub fn localize_generator(p: &Presentation, name: &str) -> Result<Presentation> {
    let g = p.generator_index(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
    if p.generator(g).is_torsion() {
        return Err(Error::TorsionLocalization(name.to_string()));
    }
    if p.generator(g).invertible {
        return Ok(p.clone());
    }
    let mut q = p.clone();
    q.set_invertible(g);
    for r in q.take_relations() {
        q.add_relation(r.lhs, r.rhs)?;
    }
    finish_localization(p, q, &p.generator_element(g), name)
}

/// Adjoins an inverse to a homogeneous element of infinite order, naming the
/// inverted element `name`.
pub fn localize_element(p: &Presentation, name: &str, expr: &str) -> Result<Presentation> {
    let x = p.eval(expr)?;
    if x.is_zero() || !p.split_torsion(&x).1.is_zero() {
        return Err(Error::TorsionLocalization(expr.trim().to_string()));
    }
    if x.terms.len() == 1 {
        if let Some((m, c)) = x.single_term() {
            if let [(g, 1)] = m.entries() {
                if c.is_one() {
                    return localize_generator(p, &p.generator(*g).name.clone());
                }
            }
        }
    }
    let primes = p.inverted_primes();
    let is_unit = |c: &Coeff| {
        let n = c.numer().abs();
        coeff::denominator_allowed(&Coeff::from_integer(n).recip(), &primes)
    };
    // Orientation: largest exponent of the last generator first.
    let rev = |m: &Monomial| m.entries().iter().rev().copied().collect::<Vec<_>>();
    let (lead, lc) = x
        .terms
        .iter()
        .filter(|(m, c)| is_unit(c) && m.entries().iter().all(|&(g, _)| !p.generator(g).invertible))
        .max_by(|(m1, _), (m2, _)| rev(m1).cmp(&rev(m2)))
        .ok_or_else(|| Error::CorruptData(format!("`{}` has no monomial with unit coefficient", expr.trim())))?;
    let mut q = p.clone();
    q.remove_definition(name);
    let gid = q.add_generator(GeneratorSymbol {
        name: name.to_string(),
        degree: x.degree.clone(),
        torsion_order: 0,
        invertible: true,
    })?;
    let inv = lc.recip();
    let mut rhs = BTreeMap::new();
    rhs.insert(Monomial::var(gid, 1), inv.clone());
    for (m, c) in &x.terms {
        if m != lead {
            rhs.insert(m.clone(), -(c * &inv));
        }
    }
    let mut rules = vec![(lead.clone(), rhs)];
    rules.extend(q.take_relations().into_iter().map(|r| (r.lhs, r.rhs)));
    for (l, r) in rules {
        q.add_relation(l, r)?;
    }
    q.truncation = Some((gid, -1));
    finish_localization(p, q, &x, name)
}

/// Shared tail of localization at `x` (an element of `p`): kill the
/// `x`-power torsion, then translate the chart one step along `x^-1`.
fn finish_localization(p: &Presentation, mut q: Presentation, x: &Element, name: &str) -> Result<Presentation> {
    let gid = q.generator_index(name).expect("inverted generator present");
    let mut killed: Vec<Monomial> = Vec::new();
    for (_, cell) in p.chart.cells() {
        for t in cell.basis() {
            let xt = p.mul(x, t);
            if !(xt.is_zero() || p.mul(x, &xt).is_zero()) {
                continue;
            }
            if let Some((m, _)) = t.single_term() {
                let core = Monomial::from_pairs(
                    m.entries().iter().copied().filter(|&(g, _)| !q.generator(g).invertible),
                );
                killed.push(core);
            }
        }
    }
    killed.sort();
    killed.dedup();
    let minimal: Vec<Monomial> = killed
        .iter()
        .filter(|m| !killed.iter().any(|n| n != *m && m.divisible_by(n)))
        .cloned()
        .collect();
    for m in minimal {
        q.add_relation(m, BTreeMap::new())?;
    }
    q.check_confluence()?;

    let ginv = q.pow(&q.generator_element(gid), -1)?;
    let window = p.chart.window;
    let mut chart = crate::graded_ring::ChartData::new(window);
    for (a, b) in window.degrees() {
        let d = RODegree::new(a, b);
        let mut gens: Vec<Element> = p.chart.cell(&d)?.basis().map(|e| q.normal_form(e)).collect();
        let src = &d + &x.degree;
        if window.contains(&src) {
            for e in p.chart.cell(&src)?.basis() {
                gens.push(q.mul(&ginv, &q.normal_form(e)));
            }
        }
        gens.retain(|e| !e.is_zero());
        chart.set_cell(a, b, ChartCell::span(&q, gens));
    }
    q.chart = chart;
    q.id = format!("{}[{}^-1]", p.id, name);
    q.family = match (family_of(p), name) {
        (Some(SpectrumId::KRConnective), "ub") => Some(SpectrumId::KR.name().into()),
        (Some(SpectrumId::Tmf13), "Db") => Some(SpectrumId::TMF13.name().into()),
        (Some(id), _) if id.is_periodic() => Some(id.name().into()),
        _ => None,
    };
    q.validate_chart()?;
    Ok(q)
}

/// Whether restriction `π_{n(1+σ)} E → π_{2n} e` is an isomorphism.
pub fn strong_even_check(p: &Presentation, n: i64) -> Result<bool> {
    let cell = p.chart.cell(&RODegree::diagonal(n))?;
    if !cell.torsion.is_empty() {
        return Ok(false);
    }
    let res = Restriction::new(p)?;
    let und = res.underlying();
    let target = und.chart.cell(&RODegree::new(2 * n, 0))?;
    let images = cell.free.iter().map(|b| res.apply(b)).collect::<Result<Vec<_>>>()?;
    let image_span = ChartCell::span(und, images.iter().cloned());
    Ok(image_span.free.len() == cell.free.len()
        && images.iter().all(|y| target.contains(und, y))
        && target.basis().all(|y| image_span.contains(und, y)))
}

/// Result of transporting a class of degree `n - nσ` to integer degree `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transport {
    pub element: Element,
    pub target: RODegree,
    pub free_rank: usize,
    pub torsion_rank: usize,
}

/// Multiplication by `carrier^n`, where the carrier (`ub` or `a1b`) has
/// degree `1 + σ`.
pub fn fixed_point_transport(x: &Element, n: i64, p: &Presentation) -> Result<Transport> {
    let want = RODegree::antidiagonal(n);
    if x.degree != want {
        return Err(Error::DegreeMismatch(x.degree.clone(), want));
    }
    let carrier = ["ub", "a1b"]
        .iter()
        .find_map(|c| p.generator_index(c))
        .ok_or_else(|| Error::UnknownGenerator("ub".into()))?;
    let y = p.mul(&p.pow(&p.generator_element(carrier), n)?, x);
    let target = RODegree::new(2 * n, 0);
    let cell = cell_at(p, &target)?;
    Ok(Transport {
        element: y,
        target,
        free_rank: cell.free.len(),
        torsion_rank: cell.torsion.len(),
    })
}

/// Integer-graded homotopy of the C₂-fixed points, read off the chart row
/// `b = 0`, with the exponent `n` of the ψᵏ eigenvalue `kⁿ` in degree `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedRingData {
    pub name: &'static str,
    pub degrees: BTreeMap<i64, FixedDegree>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedDegree {
    pub free_rank: usize,
    pub torsion_rank: usize,
    pub psi_exponent: i64,
}

pub fn fixed_ring_data(id: SpectrumId, halves: std::ops::RangeInclusive<i64>) -> Result<FixedRingData> {
    let p = builtin(id)?;
    let mut degrees = BTreeMap::new();
    for n in halves {
        let cell = cell_at(&p, &RODegree::new(2 * n, 0))?;
        degrees.insert(
            2 * n,
            FixedDegree {
                free_rank: cell.free.len(),
                torsion_rank: cell.torsion.len(),
                psi_exponent: n,
            },
        );
    }
    Ok(FixedRingData {
        name: id.fixed_name(),
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data_path(name: &str) -> std::path::PathBuf {
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
    }

    #[test]
    fn shipped_files_match_model() {
        let regen = std::env::var_os("REGENERATE_CHARTS").is_some();
        for id in SpectrumId::ALL {
            for und in [false, true] {
                let text = model::file_text(id, und);
                let path = data_path(id.file_name(und));
                if regen {
                    std::fs::write(&path, &text).unwrap();
                } else {
                    assert_eq!(id.shipped_text(und), text, "{} is stale", path.display());
                }
            }
        }
    }

    #[test]
    fn builtins_load() {
        for id in SpectrumId::ALL {
            let p = builtin(id).unwrap();
            assert_eq!(p.id, id.name());
            underlying(id).unwrap();
        }
    }

    #[test]
    fn parse_ids() {
        for id in SpectrumId::ALL {
            assert_eq!(id.name().parse::<SpectrumId>().unwrap(), id);
        }
        assert!("ko".parse::<SpectrumId>().is_err());
    }
}
