use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::ro_grade::RODegree;

use super::{Element, Monomial, Presentation};

/// Closed degree box `amin ≤ a ≤ amax`, `bmin ≤ b ≤ bmax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Window {
    pub amin: i64,
    pub amax: i64,
    pub bmin: i64,
    pub bmax: i64,
}

impl Window {
    pub fn new(amin: i64, amax: i64, bmin: i64, bmax: i64) -> Self {
        Window { amin, amax, bmin, bmax }
    }

    pub fn symmetric(n: i64) -> Self {
        Window::new(-n, n, -n, n)
    }

    pub fn contains(&self, d: &RODegree) -> bool {
        match d.to_i64_pair() {
            Some((a, b)) => self.contains_pair(a, b),
            None => false,
        }
    }

    pub fn contains_pair(&self, a: i64, b: i64) -> bool {
        (self.amin..=self.amax).contains(&a) && (self.bmin..=self.bmax).contains(&b)
    }

    pub fn is_within(&self, outer: &Window) -> bool {
        outer.amin <= self.amin && self.amax <= outer.amax && outer.bmin <= self.bmin && self.bmax <= outer.bmax
    }

    /// All degrees, sorted by `(a, b)`.
    pub fn degrees(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.amin..=self.amax).flat_map(move |a| (self.bmin..=self.bmax).map(move |b| (a, b)))
    }

    /// Parses `AMIN:AMAX,BMIN:BMAX` or a bare `N` for `|a|,|b| ≤ N`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("malformed window `{s}`, expected AMIN:AMAX,BMIN:BMAX"),
        };
        let s = s.trim();
        if let Ok(n) = s.parse::<i64>() {
            return Ok(Window::symmetric(n.abs()));
        }
        let (ra, rb) = s.split_once(',').ok_or_else(bad)?;
        let range = |r: &str| -> Result<(i64, i64)> {
            let (lo, hi) = r.trim().split_once(':').ok_or_else(bad)?;
            Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
        };
        let (amin, amax) = range(ra)?;
        let (bmin, bmax) = range(rb)?;
        if amin > amax || bmin > bmax {
            return Err(bad());
        }
        Ok(Window::new(amin, amax, bmin, bmax))
    }
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{},{}:{}", self.amin, self.amax, self.bmin, self.bmax)
    }
}

/// Basis of one degree: free summands and ℤ/2 summands.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChartCell {
    pub free: Vec<Element>,
    pub torsion: Vec<Element>,
}

static EMPTY: ChartCell = ChartCell {
    free: Vec::new(),
    torsion: Vec::new(),
};

impl ChartCell {
    pub fn is_empty(&self) -> bool {
        self.free.is_empty() && self.torsion.is_empty()
    }

    pub fn basis(&self) -> impl Iterator<Item = &Element> {
        self.free.iter().chain(self.torsion.iter())
    }

    /// Membership of a normalized element in the span of this cell. Both
    /// lists are in echelon form: leading (smallest) monomials strictly
    /// increase, so elimination in list order decides membership.
    pub fn contains(&self, p: &Presentation, x: &Element) -> bool {
        let primes = p.inverted_primes();
        let (mut free, mut tors): (Terms, Terms) = x
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .partition(|(m, _)| !p.monomial_is_torsion(m));
        for row in &self.free {
            let Some((lead, lc)) = row.terms.iter().next() else { continue };
            if let Some(c) = free.get(lead) {
                let lambda = c / lc;
                if !coeff::denominator_allowed(&lambda, &primes) {
                    return false;
                }
                axpy(&mut free, &-lambda, &row.terms);
            }
        }
        for row in &self.torsion {
            let Some((lead, _)) = row.terms.iter().next() else { continue };
            if tors.contains_key(lead) {
                xor(&mut tors, &row.terms);
            }
        }
        free.is_empty() && tors.values().all(|c| coeff::mod2(c) == Some(false))
    }

    /// Echelon basis of the subgroup generated by `gens` (normalized, all of
    /// degree `degree`) over ℤ[1/N], N the inverted integers of `p`.
    pub fn span(p: &Presentation, gens: impl IntoIterator<Item = Element>) -> ChartCell {
        let primes = p.inverted_primes();
        let mut free_rows = Vec::new();
        let mut tors_rows = Vec::new();
        let mut degree = None;
        for g in gens {
            degree.get_or_insert_with(|| g.degree.clone());
            let (f, t) = p.split_torsion(&g);
            if !f.is_zero() {
                free_rows.push(f.terms);
            }
            let t: Terms = t.terms.into_iter().filter(|(_, c)| coeff::mod2(c) == Some(true)).collect();
            if !t.is_empty() {
                tors_rows.push(t);
            }
        }
        let Some(degree) = degree else { return ChartCell::default() };
        let wrap = |rows: Vec<Terms>| {
            rows.into_iter()
                .map(|terms| Element { degree: degree.clone(), terms })
                .collect()
        };
        ChartCell {
            free: wrap(echelon_free(free_rows, &primes)),
            torsion: wrap(echelon_mod2(tors_rows)),
        }
    }
}

type Terms = BTreeMap<Monomial, Coeff>;

fn axpy(acc: &mut Terms, lambda: &Coeff, row: &Terms) {
    for (m, c) in row {
        let e = acc.entry(m.clone()).or_insert_with(Coeff::zero);
        *e += lambda * c;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

fn xor(acc: &mut Terms, row: &Terms) {
    for m in row.keys() {
        if acc.remove(m).is_none() {
            acc.insert(m.clone(), Coeff::one());
        }
    }
}

/// Part of `|n|` prime to the inverted primes.
fn strip(n: &BigInt, primes: &[i64]) -> BigInt {
    let mut n = n.abs();
    for &q in primes {
        let q = BigInt::from(q);
        while !n.is_zero() && (&n % &q).is_zero() {
            n /= &q;
        }
    }
    n
}

/// Rescales `row` by a unit of ℤ[1/N] so its entry at `lead` is a positive
/// integer prime to N.
fn normalize(row: &mut Terms, lead: &Monomial, primes: &[i64]) {
    let e = row[lead].clone();
    let target = Coeff::from_integer(strip(e.numer(), primes));
    let u = target / e;
    for c in row.values_mut() {
        *c *= &u;
    }
}

fn echelon_free(mut rows: Vec<Terms>, primes: &[i64]) -> Vec<Terms> {
    let mut out: Vec<Terms> = Vec::new();
    loop {
        rows.retain(|r| !r.is_empty());
        let Some(lead) = rows.iter().filter_map(|r| r.keys().next()).min().cloned() else { break };
        let (mut active, rest): (Vec<Terms>, Vec<Terms>) =
            rows.into_iter().partition(|r| r.keys().next() == Some(&lead));
        rows = rest;
        for r in &mut active {
            normalize(r, &lead, primes);
        }
        while active.len() > 1 {
            active.sort_by(|x, y| x[&lead].cmp(&y[&lead]));
            let pivot = active[0].clone();
            let pv = pivot[&lead].to_integer();
            for r in active.iter_mut().skip(1) {
                let q = r[&lead].to_integer().div_floor(&pv);
                axpy(r, &-Coeff::from_integer(q), &pivot);
            }
            let (keep, moved): (Vec<Terms>, Vec<Terms>) =
                active.into_iter().partition(|r| r.contains_key(&lead));
            rows.extend(moved);
            active = keep;
            for r in active.iter_mut().skip(1) {
                normalize(r, &lead, primes);
            }
        }
        out.extend(active);
    }
    back_reduce(&mut out, |x, lead, row| {
        let lambda = &x[lead] / &row[lead];
        coeff::denominator_allowed(&lambda, primes).then_some(lambda)
    });
    out
}

fn echelon_mod2(mut rows: Vec<Terms>) -> Vec<Terms> {
    let mut out: Vec<Terms> = Vec::new();
    loop {
        rows.retain(|r| !r.is_empty());
        let Some(lead) = rows.iter().filter_map(|r| r.keys().next()).min().cloned() else { break };
        let idx = rows.iter().position(|r| r.keys().next() == Some(&lead)).expect("lead row");
        let pivot = rows.swap_remove(idx);
        for r in &mut rows {
            if r.contains_key(&lead) {
                xor(r, &pivot);
            }
        }
        out.push(pivot);
    }
    for i in (0..out.len()).rev() {
        let (head, tail) = out.split_at_mut(i + 1);
        for row in tail.iter() {
            let lead = row.keys().next().expect("nonzero row");
            for x in head.iter_mut() {
                if x.contains_key(lead) {
                    xor(x, row);
                }
            }
        }
    }
    out
}

/// Clears entries above later pivots where the quotient is a ring element.
fn back_reduce(rows: &mut [Terms], quotient: impl Fn(&Terms, &Monomial, &Terms) -> Option<Coeff>) {
    for j in (1..rows.len()).rev() {
        let (head, tail) = rows.split_at_mut(j);
        let row = &tail[0];
        let lead = row.keys().next().expect("nonzero row").clone();
        for x in head.iter_mut() {
            if x.contains_key(&lead) {
                if let Some(lambda) = quotient(x, &lead, row) {
                    axpy(x, &-lambda, row);
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChartData {
    pub window: Window,
    cells: BTreeMap<(i64, i64), ChartCell>,
}

impl ChartData {
    pub fn new(window: Window) -> Self {
        ChartData {
            window,
            cells: BTreeMap::new(),
        }
    }

    pub fn cell(&self, d: &RODegree) -> Result<&ChartCell> {
        let (a, b) = d
            .to_i64_pair()
            .filter(|&(a, b)| self.window.contains_pair(a, b))
            .ok_or_else(|| Error::OutsideWindow(d.clone()))?;
        Ok(self.cells.get(&(a, b)).unwrap_or(&EMPTY))
    }

    pub fn cell_mut(&mut self, a: i64, b: i64) -> &mut ChartCell {
        self.cells.entry((a, b)).or_default()
    }

    pub fn set_cell(&mut self, a: i64, b: i64, cell: ChartCell) {
        if cell.is_empty() {
            self.cells.remove(&(a, b));
        } else {
            self.cells.insert((a, b), cell);
        }
    }

    /// Nonempty cells sorted by `(a, b)`.
    pub fn cells(&self) -> impl Iterator<Item = ((i64, i64), &ChartCell)> {
        self.cells.iter().map(|(k, v)| (*k, v))
    }

    pub fn cells_mut(&mut self) -> impl Iterator<Item = &mut ChartCell> {
        self.cells.values_mut()
    }

    pub fn retain(&mut self, f: impl Fn(&(i64, i64), &ChartCell) -> bool) {
        self.cells.retain(|k, v| f(k, v) && !v.is_empty());
    }
}
