//! Executable replay of the argument determining ψᵏ, checked over a window.
//!
//! Each check yields one [`CheckResult`]; a run collects them in a fixed
//! order so that reports are byte-identical across runs.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

use crate::adams::{self, AdamsOperation};
use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::graded_ring::{ChartCell, Element, Presentation, Window};
use crate::ro_grade::RODegree;
use crate::spectra::{self, Restriction, SpectrumId};

pub const DEFAULT_KS: [i64; 5] = [-1, 2, 3, 5, 7];
pub const COMPOSITION_PAIRS: [(i64, i64); 3] = [(3, 5), (-1, 3), (-1, -1)];
pub const HOMOMORPHISM_SAMPLES: usize = 1000;
pub const SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Warn,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Warn => "warn",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// Counterexample on failure, a short summary otherwise.
    pub witness: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, status: Status, witness: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status,
            witness: witness.into(),
        }
    }

    fn scoped(mut self, scope: &str) -> Self {
        self.name = format!("{scope}/{}", self.name);
        self
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CHECK {} {}", self.name, self.status)?;
        if !self.witness.is_empty() {
            write!(f, " {}", self.witness)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn warnings(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Warn).count()
    }

    pub fn find(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One `CHECK` line per result.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }

    pub fn summary(&self) -> String {
        let fails = self.failures().count();
        format!(
            "{} checks, {} passed, {} failed, {} warned",
            self.checks.len(),
            self.checks.len() - fails - self.warnings(),
            fails,
            self.warnings()
        )
    }
}

fn verdict(name: &str, checked: usize, bad: Option<String>) -> CheckResult {
    match bad {
        Some(w) => CheckResult::new(name, Status::Fail, w),
        None => CheckResult::new(name, Status::Pass, format!("checked={checked}")),
    }
}

/// Basis elements of `p`'s chart inside `window`.
fn basis_in(p: &Presentation, window: &Window) -> Vec<Element> {
    p.chart
        .cells()
        .filter(|((a, b), _)| window.contains_pair(*a, *b))
        .flat_map(|(_, c)| c.basis().cloned().collect::<Vec<_>>())
        .collect()
}

/// ψᵏ fixes `1` and `a_σ` (and hence each power of `a_σ`).
pub fn check_unit_linearity(op: &AdamsOperation) -> CheckResult {
    let p = op.presentation();
    let mut checked = 0;
    let mut gens = vec![p.one()];
    if let Some(g) = p.generator_index("as") {
        for n in 1..=8 {
            gens.push(p.monomial(crate::graded_ring::Monomial::var(g, n)));
        }
    }
    for x in gens {
        checked += 1;
        let y = op.apply(&x);
        if y != x {
            return verdict(
                "unit_linearity",
                checked,
                Some(format!("psi({}) = {}", p.format_element(&x), p.format_element(&y))),
            );
        }
    }
    verdict("unit_linearity", checked, None)
}

/// `res ∘ ψᵏ = ψᵏ ∘ res` on every basis element of the diagonal cells.
pub fn check_restriction_compat(op: &AdamsOperation, window: &Window) -> Result<CheckResult> {
    let p = op.presentation();
    let res = Restriction::new(p)?;
    let mut checked = 0;
    for n in window.amin.max(window.bmin)..=window.amax.min(window.bmax) {
        let Ok(cell) = p.chart.cell(&RODegree::diagonal(n)) else { continue };
        for x in cell.basis() {
            checked += 1;
            let lhs = res.apply(&op.apply(x))?;
            let rhs = adams::underlying_psi(op.k, &res.apply(x)?, res.underlying())?;
            if lhs != rhs {
                let u = res.underlying();
                return Ok(verdict(
                    "restriction_compat",
                    checked,
                    Some(format!("x={} res(psi x)={} psi(res x)={}", p.format_element(x), u.format_element(&lhs), u.format_element(&rhs))),
                ));
            }
        }
    }
    Ok(verdict("restriction_compat", checked, None))
}

/// Every diagonal cell in the window restricts isomorphically.
pub fn check_strong_even(p: &Presentation, window: &Window) -> Result<CheckResult> {
    let mut checked = 0;
    for n in window.amin.max(window.bmin)..=window.amax.min(window.bmax) {
        if !p.chart.window.contains(&RODegree::diagonal(n)) {
            continue;
        }
        checked += 1;
        if !spectra::strong_even_check(p, n)? {
            return Ok(verdict("strong_even", checked, Some(format!("n={n}"))));
        }
    }
    Ok(verdict("strong_even", checked, None))
}

/// Every free basis class sits in even underlying degree.
pub fn check_parity(p: &Presentation, window: &Window) -> CheckResult {
    let mut checked = 0;
    for x in basis_in(p, window) {
        if !p.split_torsion(&x).0.is_zero() {
            checked += 1;
            if x.degree.half_total().is_err() {
                return verdict(
                    "parity",
                    checked,
                    Some(format!("{} in degree {}", p.format_element(&x), x.degree)),
                );
            }
        }
    }
    verdict("parity", checked, None)
}

/// `ψᵏ` by generator images agrees with the closed form on every basis
/// element in the window.
pub fn check_formula_window(op: &AdamsOperation, window: &Window) -> Result<CheckResult> {
    let p = op.presentation();
    let basis = basis_in(p, window);
    for x in &basis {
        let by_images = op.apply(x);
        let by_formula = adams::formula_image(op.k, x, p)?;
        if by_images != by_formula {
            return Ok(CheckResult::new(
                "formula_window",
                Status::Fail,
                format!(
                    "x={} images={} formula={}",
                    p.format_element(x),
                    p.format_element(&by_images),
                    p.format_element(&by_formula)
                ),
            ));
        }
    }
    Ok(verdict("formula_window", basis.len(), None))
}

/// `ψᵏ∘ψˡ = ψᵏˡ` on the window. Needs `k·l` inverted in `p`.
pub fn check_composition(k: i64, l: i64, p: &Arc<Presentation>, window: &Window) -> Result<CheckResult> {
    let name = format!("composition({k},{l})");
    let composed = adams::compose(&adams::make_adams(k, p)?, &adams::make_adams(l, p)?)?;
    let direct = adams::make_adams(k * l, p)?;
    let basis = basis_in(p, window);
    for x in &basis {
        let (c, d) = (composed.apply(x), direct.apply(x));
        if c != d {
            return Ok(CheckResult::new(
                name,
                Status::Fail,
                format!("x={} composed={} direct={}", p.format_element(x), p.format_element(&c), p.format_element(&d)),
            ));
        }
    }
    Ok(verdict(&name, basis.len(), None))
}

/// Random products and sums of basis elements: ψᵏ is a ring map.
pub fn check_homomorphism(op: &AdamsOperation, window: &Window, samples: usize, seed: u64) -> CheckResult {
    let p = op.presentation();
    let basis = basis_in(p, window);
    if basis.is_empty() {
        return verdict("homomorphism", 0, None);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = &basis[rng.gen_range(0..basis.len())];
        let y = &basis[rng.gen_range(0..basis.len())];
        let lhs = op.apply(&p.mul(x, y));
        let rhs = p.mul(&op.apply(x), &op.apply(y));
        if lhs != rhs {
            return CheckResult::new(
                "homomorphism",
                Status::Fail,
                format!("x={} y={} (product)", p.format_element(x), p.format_element(y)),
            );
        }
        let cell = p.chart.cell(&x.degree).expect("basis degree in window");
        let z = random_combination(p, cell, &mut rng);
        let sum = p.add(x, &z).expect("same degree");
        let lhs = op.apply(&sum);
        let rhs = p.add(&op.apply(x), &op.apply(&z)).expect("same degree");
        if lhs != rhs {
            return CheckResult::new(
                "homomorphism",
                Status::Fail,
                format!("x={} z={} (sum)", p.format_element(x), p.format_element(&z)),
            );
        }
    }
    verdict("homomorphism", samples, None)
}

fn random_combination(p: &Presentation, cell: &ChartCell, rng: &mut impl Rng) -> Element {
    let mut acc: Option<Element> = None;
    for b in cell.basis() {
        let c = rng.gen_range(-3i64..=3);
        let t = p.scale_int(b, c);
        acc = Some(match acc {
            Some(a) => p.add(&a, &t).expect("same degree"),
            None => t,
        });
    }
    acc.expect("nonempty cell")
}

/// Outcome of cancelling an auxiliary class against torsion-free fixed-point
/// homotopy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfpDeduction {
    /// `e` with `ψᵏ(x) = kᵉ·x`.
    pub exponent: BigInt,
    pub scalar: Coeff,
    pub target: RODegree,
    /// Exponent of `aux`, read off through restriction.
    pub aux_exponent: BigInt,
}

/// Deduce `ψᵏ(x) = kᵉ·x` from `ψᵏ(aux·x) = kⁿ·aux·x` in the torsion-free
/// group `π_{2n}` and `ψᵏ(aux) = kᵐ·aux`, where `aux` lies on the diagonal
/// `m(1+σ)` so that its image is read off the underlying ring.
pub fn hfp_deduce(k: i64, x: &Element, aux: &Element, p: &Presentation) -> Result<HfpDeduction> {
    if k == 0 {
        return Err(Error::ZeroInversion);
    }
    let m = aux.degree.a.clone();
    if aux.degree.b != m {
        return Err(Error::DegreeMismatch(aux.degree.clone(), RODegree::new(m.clone(), m)));
    }
    let mi: i64 = (&m).try_into().map_err(|_| Error::OutsideWindow(aux.degree.clone()))?;
    if !spectra::strong_even_check(p, mi)? {
        return Err(Error::CorruptData(format!("restriction is not injective in degree {}", aux.degree)));
    }
    let y = p.mul(aux, x);
    if y.is_zero() {
        return Err(Error::ZeroProduct);
    }
    if y.degree.b != BigInt::from(0) {
        return Err(Error::DegreeMismatch(y.degree.clone(), RODegree::new(y.degree.a.clone(), 0)));
    }
    let target = y.degree.clone();
    let n = y.degree.half_total()?;
    let tcell = spectra::cell_at(p, &target)?;
    if !tcell.torsion.is_empty() {
        return Err(Error::TorsionTarget(target));
    }
    let scell = spectra::cell_at(p, &x.degree)?;
    let images: Vec<Element> = scell.basis().map(|b| p.mul(aux, b)).collect();
    if !scell.torsion.is_empty() || ChartCell::span(p, images.clone()).free.len() != scell.free.len() {
        return Err(Error::NotInjective(target));
    }
    let e = &n - &m;
    Ok(HfpDeduction {
        scalar: coeff::pow(k, &e),
        exponent: e,
        target,
        aux_exponent: m,
    })
}

/// Classes replayed for each spectrum, each with auxiliary classes to try
/// in order; the first whose product lands in a torsion-free target is used.
pub fn hfp_plan(id: SpectrumId) -> Vec<(String, Vec<String>)> {
    let mut plan = Vec::new();
    let (carrier, period, period_aux) = if id.is_tmf() {
        ("a1b", "u2s^4", "a1b^8")
    } else {
        ("ub", "u2s^2", "ub^4")
    };
    plan.push((period.to_string(), vec![period_aux.to_string()]));
    let lo = if id.is_periodic() { -6 } else { 0 };
    for m in lo..=6 {
        let mut aux = Vec::new();
        if m >= 0 || id == SpectrumId::KR {
            aux.push(format!("{carrier}^{}", 2 * m));
        }
        if id == SpectrumId::TMF13 {
            for t in 1..=2 {
                if 2 * m + 12 * t >= 0 {
                    aux.push(format!("{carrier}^{}*Db^-{t}", 2 * m + 12 * t));
                }
            }
        }
        plan.push((format!("v0({m})"), aux));
    }
    if id.is_tmf() {
        plan.push(("a1_1".into(), vec!["a1b^3".into()]));
        plan.push(("a1_1".into(), vec!["a3b".into()]));
    }
    plan
}

/// `v0(m) = v0(m - s)·period`, used when every auxiliary product of
/// `v0(m)` lands in a degree with torsion.
fn periodic_factor(xs: &str, period: &str) -> Option<String> {
    let m: i64 = xs.strip_prefix("v0(")?.strip_suffix(')')?.parse().ok()?;
    let shift: i64 = period.strip_prefix("u2s^")?.parse().ok()?;
    let down = if m >= 0 { m - shift } else { m + shift };
    Some(format!("v0({down})"))
}

pub fn check_hfp(op: &AdamsOperation, id: SpectrumId) -> Vec<CheckResult> {
    let p = op.presentation();
    let plan = hfp_plan(id);
    let period = plan[0].0.clone();
    let mut resolved: BTreeMap<String, BigInt> = BTreeMap::new();
    let mut out = Vec::new();
    for (xs, auxes) in plan {
        let name = match auxes.as_slice() {
            [only] => format!("hfp[{xs} via {only}]"),
            _ => format!("hfp[{xs}]"),
        };
        let run = |resolved: &BTreeMap<String, BigInt>| -> Result<(BigInt, String)> {
            let x = p.parse_element(&xs)?;
            let mut last = Error::ZeroProduct;
            let mut found = None;
            for auxs in &auxes {
                let aux = p.parse_element(auxs)?;
                match hfp_deduce(op.k, &x, &aux, p) {
                    Ok(d) => {
                        let via = if auxes.len() > 1 { format!("via {auxs} ") } else { String::new() };
                        found = Some((d.exponent, via));
                        break;
                    }
                    Err(e) => last = e,
                }
            }
            let (e, via) = match (found, &last) {
                (Some(f), _) => f,
                (None, Error::TorsionTarget(t)) => {
                    // Multiplicativity: both factors were deduced earlier.
                    let lower = periodic_factor(&xs, &period).ok_or(last.clone())?;
                    let (Some(e1), Some(e2)) = (resolved.get(&lower), resolved.get(&period)) else {
                        return Err(last);
                    };
                    (e1 + e2, format!("target {t} has torsion; {xs} = {lower}*{period} "))
                }
                (None, _) => return Err(last),
            };
            let expected = x.degree.half_total()?;
            if e != expected {
                return Err(Error::CorruptData(format!("{via}deduced e={e}, formula e={expected}")));
            }
            let image = op.apply(&x);
            if image != p.scale(&x, &coeff::pow(op.k, &e)) {
                return Err(Error::CorruptData(format!(
                    "{via}deduced e={e} but images give {}",
                    p.format_element(&image)
                )));
            }
            let witness = format!("{via}e={e}");
            Ok((e, witness))
        };
        match run(&resolved) {
            Ok((e, witness)) => {
                resolved.insert(xs.clone(), e);
                out.push(CheckResult::new(&name, Status::Pass, witness));
            }
            Err(err) => out.push(CheckResult::new(&name, Status::Fail, err.to_string())),
        }
    }
    out
}

/// Note on `ā₁(1) = ā₁u_{2σ}²`: it has degree `5 - 3σ`, so it is scaled by
/// `k`, not fixed.
fn a1_1_note() -> CheckResult {
    CheckResult::new(
        "tmf/a1_1",
        Status::Warn,
        "a1_1 = a1b*u2s^2 in degree 5-3s is not fixed: psi^k(a1_1) = k*a1_1",
    )
}

/// Full suite for the given spectra and values of `k`.
pub fn run_suite(ids: &[SpectrumId], ks: &[i64], window: &Window) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let mut seen_tmf = false;
    for &id in ids {
        let base = spectra::builtin(id)?;
        let scope = id.name();
        report.checks.push(check_parity(&base, window).scoped(scope));
        report.checks.push(check_strong_even(&base, window)?.scoped(scope));
        for &k in ks {
            let p = Arc::new(spectra::invert_integer(&base, k)?);
            let op = adams::make_adams(k, &p)?;
            let scope = format!("{}/k={k}", id.name());
            report.checks.push(check_unit_linearity(&op).scoped(&scope));
            report.checks.push(check_restriction_compat(&op, window)?.scoped(&scope));
            report.checks.push(check_formula_window(&op, window)?.scoped(&scope));
            report
                .checks
                .push(check_homomorphism(&op, window, HOMOMORPHISM_SAMPLES, SEED ^ k as u64).scoped(&scope));
            report.checks.extend(check_hfp(&op, id).into_iter().map(|c| c.scoped(&scope)));
        }
        for (k, l) in COMPOSITION_PAIRS {
            let p = Arc::new(spectra::invert_integer(&base, k * l)?);
            report.checks.push(check_composition(k, l, &p, window)?.scoped(scope));
        }
        seen_tmf |= id.is_tmf();
    }
    if seen_tmf {
        report.checks.push(a1_1_note());
    }
    Ok(report)
}

/// Exit status for a finished run: `0` all pass, `1` some check failed.
pub fn exit_code(report: &VerificationReport) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

/// Counts of results by status, keyed by status name.
pub fn tally(report: &VerificationReport) -> BTreeMap<String, usize> {
    let mut t = BTreeMap::new();
    for c in &report.checks {
        *t.entry(c.status.to_string()).or_insert(0) += 1;
    }
    t
}
