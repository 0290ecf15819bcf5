//! Presented RO(C₂)-graded commutative rings with ℤ and ℤ/2 coefficients.
//!
//! A [`Presentation`] describes an *ambient* ring: Laurent monomials in its
//! generators (negative exponents only on generators flagged invertible),
//! modulo oriented rewrite rules. Coefficients are exact rationals in
//! ℤ[1/N]; monomials containing a 2-torsion generator carry coefficients in
//! ℤ/2. The homotopy classes themselves form a subgroup of the ambient ring
//! in each degree; the [`ChartData`] lists a basis of that subgroup for every
//! degree in the window, each basis element being a single monomial times its
//! lattice generator (`1` or `2` on free monomials).
//!
//! The product is strictly commutative: every free generator used by the
//! built-in models has even underlying dimension and every class of odd
//! total dimension is 2-torsion, so Koszul signs are invisible.

mod chart;
mod format;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::expr::{self, ElementExpr};
use crate::ro_grade::RODegree;

pub use chart::{ChartCell, ChartData, Window};
pub(crate) use format::chart_line;

pub type GenId = u16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSymbol {
    pub name: String,
    pub degree: RODegree,
    /// `0` for infinite order, `2` for 2-torsion.
    pub torsion_order: u8,
    pub invertible: bool,
}

impl GeneratorSymbol {
    pub fn is_torsion(&self) -> bool {
        self.torsion_order == 2
    }
}

/// Sparse exponent vector, sorted by generator index, zero entries absent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(GenId, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn var(g: GenId, e: i64) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(g, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (GenId, i64)>) -> Self {
        let mut m = Monomial::one();
        for (g, e) in pairs {
            m = m.mul(&Monomial::var(g, e));
        }
        m
    }

    pub fn exponent(&self, g: GenId) -> i64 {
        self.0
            .iter()
            .find(|(h, _)| *h == g)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn entries(&self) -> &[(GenId, i64)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                let e = a[i].1.checked_add(b[j].1).expect("exponent overflow");
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    pub fn pow(&self, n: i64) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter(|_| n != 0)
                .map(|&(g, e)| (g, e.checked_mul(n).expect("exponent overflow")))
                .collect(),
        )
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// Divisibility by a pattern with positive exponents.
    pub fn divisible_by(&self, pattern: &Monomial) -> bool {
        pattern.0.iter().all(|&(g, e)| self.exponent(g) >= e)
    }

    pub fn without(&self, g: GenId) -> (Monomial, i64) {
        let e = self.exponent(g);
        (Monomial(self.0.iter().copied().filter(|(h, _)| *h != g).collect()), e)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let gens: BTreeSet<GenId> = self.0.iter().chain(other.0.iter()).map(|(g, _)| *g).collect();
        Monomial::from_pairs(gens.into_iter().map(|g| (g, self.exponent(g).max(other.exponent(g)))))
    }

    pub fn shares_generator(&self, other: &Monomial) -> bool {
        self.0.iter().any(|(g, _)| other.exponent(*g) != 0)
    }
}

/// A homogeneous element: a finite combination of monomials of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub degree: RODegree,
    pub terms: BTreeMap<Monomial, Coeff>,
}

impl Element {
    pub fn zero(degree: RODegree) -> Self {
        Element {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single `(monomial, coefficient)` pair, if there is exactly one.
    pub fn single_term(&self) -> Option<(&Monomial, &Coeff)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }
}

/// Oriented rule `lhs → rhs`. An empty `rhs` kills every multiple of `lhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Monomial,
    pub rhs: BTreeMap<Monomial, Coeff>,
}

/// Named abbreviation; `param` is set for families such as `v0(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub name: String,
    pub param: Option<String>,
    pub body: ElementExpr,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub id: String,
    generators: Vec<GeneratorSymbol>,
    definitions: Vec<Definition>,
    relations: Vec<Relation>,
    pub chart: ChartData,
    /// Built-in family this presentation derives from, if any.
    pub family: Option<String>,
    /// `(g, e)`: cells only list monomials with `g`-exponent at least `e`;
    /// terms below that are not checked for membership.
    pub truncation: Option<(GenId, i64)>,
    inverted: BTreeSet<i64>,
    /// Families printed atomically: `(name, generator, coefficient)` for a
    /// body of the form `c*g^param`.
    print_families: Vec<(String, GenId, Coeff)>,
}

impl Presentation {
    pub fn new(id: impl Into<String>) -> Self {
        Presentation {
            id: id.into(),
            generators: Vec::new(),
            definitions: Vec::new(),
            relations: Vec::new(),
            chart: ChartData::default(),
            family: None,
            truncation: None,
            inverted: BTreeSet::new(),
            print_families: Vec::new(),
        }
    }

    pub fn from_text(text: &str) -> Result<Self> {
        format::parse_presentation(text)
    }

    pub fn to_text(&self) -> String {
        format::write_presentation(self)
    }

    pub fn generators(&self) -> &[GeneratorSymbol] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn definitions(&self) -> &[Definition] {
        &self.definitions
    }

    pub fn inverted_integers(&self) -> &BTreeSet<i64> {
        &self.inverted
    }

    pub fn inverted_primes(&self) -> Vec<i64> {
        let mut ps: BTreeSet<i64> = BTreeSet::new();
        for &k in &self.inverted {
            ps.extend(coeff::prime_factors(k));
        }
        ps.into_iter().collect()
    }

    pub fn two_inverted(&self) -> bool {
        self.inverted.iter().any(|k| k % 2 == 0)
    }

    pub fn is_inverted(&self, k: i64) -> bool {
        let ps = self.inverted_primes();
        coeff::prime_factors(k).iter().all(|p| ps.contains(p))
    }

    pub(crate) fn add_inverted(&mut self, k: i64) {
        self.inverted.insert(k);
    }

    pub fn add_generator(&mut self, g: GeneratorSymbol) -> Result<GenId> {
        if self.generator_index(&g.name).is_some() || self.definition(&g.name, false).is_some() {
            return Err(Error::CorruptData(format!("duplicate generator `{}`", g.name)));
        }
        if g.invertible && g.is_torsion() {
            return Err(Error::CorruptData(format!(
                "invertible generator `{}` must have infinite order",
                g.name
            )));
        }
        if g.torsion_order != 0 && g.torsion_order != 2 {
            return Err(Error::CorruptData(format!("unsupported torsion order on `{}`", g.name)));
        }
        self.generators.push(g);
        Ok((self.generators.len() - 1) as GenId)
    }

    pub(crate) fn set_invertible(&mut self, g: GenId) {
        self.generators[g as usize].invertible = true;
    }

    pub fn add_definition(&mut self, d: Definition) -> Result<()> {
        if self.generator_index(&d.name).is_some() {
            return Err(Error::CorruptData(format!("`{}` is already a generator", d.name)));
        }
        if let Some(param) = &d.param {
            if let ElementExpr::Mul(c, pw) = &d.body {
                if let (ElementExpr::Num(c), ElementExpr::Pow(base, expr::ExpArg::Param(q))) = (&**c, &**pw) {
                    if let ElementExpr::Sym(g) = &**base {
                        if let (Some(gid), true) = (self.generator_index(g), q == param) {
                            self.print_families.push((d.name.clone(), gid, c.clone()));
                        }
                    }
                }
            }
        }
        self.definitions.retain(|e| e.name != d.name);
        self.definitions.push(d);
        Ok(())
    }

    pub(crate) fn remove_definition(&mut self, name: &str) {
        self.definitions.retain(|d| d.name != name);
    }

    /// Adds an oriented rule. Invertible generators are divided out of the
    /// left side so that matching is plain divisibility.
    pub fn add_relation(&mut self, lhs: Monomial, rhs: BTreeMap<Monomial, Coeff>) -> Result<()> {
        let mut l = Monomial::one();
        let mut shift = Monomial::one();
        for &(g, e) in lhs.entries() {
            if self.generators[g as usize].invertible {
                shift = shift.mul(&Monomial::var(g, -e));
            } else if e < 0 {
                return Err(Error::CorruptData("negative exponent on non-invertible generator".into()));
            } else {
                l = l.mul(&Monomial::var(g, e));
            }
        }
        if l.is_one() {
            if rhs.is_empty() {
                return Err(Error::CorruptData("relation kills the unit".into()));
            }
            return Err(Error::CorruptData("relation left side reduces to a unit".into()));
        }
        let rhs = rhs.into_iter().map(|(m, c)| (m.mul(&shift), c)).collect();
        let rel = Relation { lhs: l, rhs };
        if !self.relations.contains(&rel) {
            self.relations.push(rel);
        }
        Ok(())
    }

    pub(crate) fn take_relations(&mut self) -> Vec<Relation> {
        std::mem::take(&mut self.relations)
    }

    pub fn generator_index(&self, name: &str) -> Option<GenId> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .map(|i| i as GenId)
    }

    pub fn generator(&self, g: GenId) -> &GeneratorSymbol {
        &self.generators[g as usize]
    }

    pub fn definition(&self, name: &str, family: bool) -> Option<(Option<String>, ElementExpr)> {
        self.definitions
            .iter()
            .find(|d| d.name == name && d.param.is_some() == family)
            .map(|d| (d.param.clone(), d.body.clone()))
    }

    pub fn generator_element(&self, g: GenId) -> Element {
        let m = Monomial::var(g, 1);
        self.element_from_terms(self.generator(g).degree.clone(), [(m, Coeff::one())])
    }

    pub fn one(&self) -> Element {
        self.scalar(Coeff::one())
    }

    pub fn scalar(&self, c: Coeff) -> Element {
        self.element_from_terms(RODegree::zero(), [(Monomial::one(), c)])
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Result<RODegree> {
        let mut d = RODegree::zero();
        for &(g, e) in m.entries() {
            let gen = self
                .generators
                .get(g as usize)
                .ok_or_else(|| Error::UnknownGenerator(format!("#{g}")))?;
            d = &d + &gen.degree.scale(&BigInt::from(e));
        }
        Ok(d)
    }

    pub fn monomial_is_torsion(&self, m: &Monomial) -> bool {
        m.entries().iter().any(|(g, _)| self.generator(*g).is_torsion())
    }

    pub fn monomial(&self, m: Monomial) -> Element {
        let d = self.monomial_degree(&m).expect("monomial over this presentation");
        self.element_from_terms(d, [(m, Coeff::one())])
    }

    /// Builds an element from raw terms and brings it to normal form.
    pub fn element_from_terms(
        &self,
        degree: RODegree,
        terms: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Element {
        Element {
            degree,
            terms: self.reduce(terms),
        }
    }

    fn first_rule(&self, m: &Monomial) -> Option<&Relation> {
        self.relations.iter().find(|r| m.divisible_by(&r.lhs))
    }

    /// Worklist rewriting followed by torsion coefficient reduction.
    fn reduce(&self, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> BTreeMap<Monomial, Coeff> {
        let mut work: Vec<(Monomial, Coeff)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        while let Some((m, c)) = work.pop() {
            match self.first_rule(&m) {
                Some(rule) => {
                    let rest = m.mul(&rule.lhs.inverse());
                    for (rm, rc) in &rule.rhs {
                        work.push((rest.mul(rm), &c * rc));
                    }
                }
                None => *acc.entry(m).or_insert_with(Coeff::zero) += c,
            }
        }
        let two_inv = self.two_inverted();
        acc.into_iter()
            .filter_map(|(m, c)| {
                if self.monomial_is_torsion(&m) {
                    if two_inv {
                        return None;
                    }
                    match coeff::mod2(&c) {
                        Some(true) => Some((m, Coeff::one())),
                        Some(false) => None,
                        None => {
                            debug_assert!(false, "even denominator on a torsion monomial");
                            None
                        }
                    }
                } else if c.is_zero() {
                    None
                } else {
                    Some((m, c))
                }
            })
            .collect()
    }

    pub fn normal_form(&self, x: &Element) -> Element {
        Element {
            degree: x.degree.clone(),
            terms: self.reduce(x.terms.iter().map(|(m, c)| (m.clone(), c.clone()))),
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.degree != y.degree {
            return Err(Error::DegreeMismatch(x.degree.clone(), y.degree.clone()));
        }
        let terms = x.terms.iter().chain(y.terms.iter()).map(|(m, c)| (m.clone(), c.clone()));
        Ok(self.element_from_terms(x.degree.clone(), terms))
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element> {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.scale(x, &-Coeff::one())
    }

    pub fn scale(&self, x: &Element, c: &Coeff) -> Element {
        let terms = x.terms.iter().map(|(m, d)| (m.clone(), d * c));
        self.element_from_terms(x.degree.clone(), terms)
    }

    pub fn scale_int(&self, x: &Element, n: i64) -> Element {
        self.scale(x, &coeff::int(n))
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut terms = Vec::with_capacity(x.terms.len() * y.terms.len());
        for (m1, c1) in &x.terms {
            for (m2, c2) in &y.terms {
                terms.push((m1.mul(m2), c1 * c2));
            }
        }
        self.element_from_terms(&x.degree + &y.degree, terms)
    }

    /// `x^n`; negative `n` needs `x` to be a unit monomial term.
    pub fn pow(&self, x: &Element, n: i64) -> Result<Element> {
        if n >= 0 {
            let mut acc = self.one();
            for _ in 0..n {
                acc = self.mul(&acc, x);
            }
            return Ok(acc);
        }
        let (m, c) = x.single_term().ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: "only single monomials can be raised to negative powers".into(),
        })?;
        for &(g, _) in m.entries() {
            if !self.generator(g).invertible {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: format!("`{}` is not invertible", self.generator(g).name),
                });
            }
        }
        let inv = Element {
            degree: -&x.degree,
            terms: [(m.inverse(), c.recip())].into_iter().collect(),
        };
        let inv = self.normal_form(&inv);
        self.pow(&inv, -n)
    }

    pub fn equals(&self, x: &Element, y: &Element) -> Result<bool> {
        if x.degree != y.degree {
            return Err(Error::DegreeMismatch(x.degree.clone(), y.degree.clone()));
        }
        Ok(self.normal_form(x).terms == self.normal_form(y).terms)
    }

    pub fn is_torsion(&self, x: &Element) -> bool {
        self.scale_int(x, 2).is_zero()
    }

    /// Splits into the part on free monomials and the part on torsion ones.
    pub fn split_torsion(&self, x: &Element) -> (Element, Element) {
        let (t, f): (BTreeMap<_, _>, BTreeMap<_, _>) = x
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .partition(|(m, _)| self.monomial_is_torsion(m));
        (
            Element { degree: x.degree.clone(), terms: f },
            Element { degree: x.degree.clone(), terms: t },
        )
    }

    pub fn group_structure(&self, d: &RODegree) -> Result<(usize, usize)> {
        let cell = self.chart.cell(d)?;
        Ok((cell.free.len(), cell.torsion.len()))
    }

    /// Whether a normalized element is a class, i.e. lies in the span of its
    /// chart cell. Degrees outside the window are not checked.
    pub fn in_span(&self, x: &Element) -> bool {
        let Ok(cell) = self.chart.cell(&x.degree) else { return true };
        match self.truncation {
            Some((g, lo)) => {
                let listed = Element {
                    degree: x.degree.clone(),
                    terms: x.terms.iter().filter(|(m, _)| m.exponent(g) >= lo).map(|(m, c)| (m.clone(), c.clone())).collect(),
                };
                cell.contains(self, &listed)
            }
            None => cell.contains(self, x),
        }
    }

    /// Parses an expression, normalizes it and checks it is a class.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let x = self.normal_form(&expr::eval_str(text, self)?);
        if !self.in_span(&x) {
            return Err(Error::NotAClass(text.trim().to_string(), x.degree));
        }
        Ok(x)
    }

    /// Ambient evaluation without the class check.
    pub fn eval(&self, text: &str) -> Result<Element> {
        Ok(self.normal_form(&expr::eval_str(text, self)?))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.entries()
            .iter()
            .map(|&(g, e)| {
                let name = &self.generator(g).name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// One term without sign handling: `(|c|, body)`.
    fn format_term(&self, m: &Monomial, c: &Coeff) -> (Coeff, String) {
        for (fam, g, base) in &self.print_families {
            let e = m.exponent(*g);
            if e % 2 != 0 && (c / base).is_integer() {
                let (rest, _) = m.without(*g);
                let mut body = format!("{fam}({e})");
                if !rest.is_one() {
                    body.push('*');
                    body.push_str(&self.format_monomial(&rest));
                }
                return ((c / base).abs(), body);
            }
        }
        (c.abs(), self.format_monomial(m))
    }

    pub fn format_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in x.terms.iter().enumerate() {
            let (mag, body) = self.format_term(m, c);
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&coeff::format(&mag));
            } else {
                out.push_str(&coeff::format(&mag));
                out.push('*');
                out.push_str(&body);
            }
        }
        out
    }

    /// Critical-pair test: every overlap of two rule left sides reduces to
    /// the same normal form whichever rule fires first.
    pub fn check_confluence(&self) -> Result<()> {
        for (i, r1) in self.relations.iter().enumerate() {
            for r2 in &self.relations[i + 1..] {
                if !r1.lhs.shares_generator(&r2.lhs) {
                    continue;
                }
                let l = r1.lhs.lcm(&r2.lhs);
                let step = |r: &Relation| {
                    let rest = l.mul(&r.lhs.inverse());
                    self.reduce(r.rhs.iter().map(|(m, c)| (rest.mul(m), c.clone())))
                };
                if step(r1) != step(r2) {
                    return Err(Error::NonConfluentRelations(format!(
                        "overlap {} of `{}` and `{}`",
                        self.format_monomial(&l),
                        self.format_monomial(&r1.lhs),
                        self.format_monomial(&r2.lhs)
                    )));
                }
            }
        }
        Ok(())
    }

    /// All basis elements in the chart, sorted by degree then position.
    pub fn chart_basis(&self) -> Vec<Element> {
        self.chart
            .cells()
            .flat_map(|(_, c)| c.free.iter().chain(c.torsion.iter()).cloned())
            .collect()
    }

    /// Load-time validation of the chart against the generators and rules.
    pub fn validate_chart(&self) -> Result<()> {
        for (d, cell) in self.chart.cells() {
            let deg = RODegree::from(d);
            if !self.chart.window.contains(&deg) {
                return Err(Error::CorruptData(format!("cell {deg} outside window")));
            }
            for (torsion, list) in [(false, &cell.free), (true, &cell.torsion)] {
                let mut prev: Option<&Monomial> = None;
                for b in list {
                    let shown = self.format_element(b);
                    let (lead, lc) = b
                        .terms
                        .iter()
                        .next()
                        .ok_or_else(|| Error::CorruptData(format!("zero basis entry at {deg}")))?;
                    if b.degree != deg {
                        return Err(Error::CorruptData(format!("basis entry {shown} is not in degree {deg}")));
                    }
                    for m in b.terms.keys() {
                        if self.monomial_degree(m)? != deg {
                            return Err(Error::CorruptData(format!("basis entry {shown} is not in degree {deg}")));
                        }
                        if self.monomial_is_torsion(m) != torsion {
                            return Err(Error::CorruptData(format!(
                                "basis entry {shown} at {deg} listed in the wrong summand"
                            )));
                        }
                    }
                    if !lc.is_positive() {
                        return Err(Error::CorruptData(format!("nonpositive leading coefficient in {shown}")));
                    }
                    if prev.is_some_and(|p| p >= lead) {
                        return Err(Error::CorruptData(format!("basis at {deg} is not in echelon order")));
                    }
                    prev = Some(lead);
                    if self.normal_form(b) != *b {
                        return Err(Error::CorruptData(format!("basis entry {shown} at {deg} is not in normal form")));
                    }
                }
            }
            if self.two_inverted() && !cell.torsion.is_empty() {
                return Err(Error::CorruptData(format!("torsion at {deg} with 2 inverted")));
            }
        }
        Ok(())
    }

    /// Multiplicative closure of the chart: products of sampled basis pairs
    /// that land in the window must lie in the span of the target cell.
    pub fn check_closure(&self, samples: usize, seed: u64) -> Result<()> {
        use rand::{Rng, SeedableRng};
        let basis = self.chart_basis();
        if basis.is_empty() {
            return Ok(());
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = &basis[rng.gen_range(0..basis.len())];
            let y = &basis[rng.gen_range(0..basis.len())];
            let z = self.mul(x, y);
            if !self.in_span(&z) {
                return Err(Error::CorruptData(format!(
                    "({}) * ({}) = {} leaves the chart span at {}",
                    self.format_element(x),
                    self.format_element(y),
                    self.format_element(&z),
                    z.degree
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(g, e)| format!("#{g}^{e}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests;
