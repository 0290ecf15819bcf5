//! Closed-form description of the additive structure of the four built-in
//! rings, used to produce the shipped chart files and to answer fixed-ring
//! queries outside the chart window.
//!
//! Every class is a single ambient monomial times a lattice generator:
//!
//! * `kR`, `KR`: monomials `as^n ub^j u2s^m`, degree `(j+2m, j-2m-n)`.
//! * `tmf13`: monomials `as^n a1b^i a3b^j u2s^m`.
//! * `TMF13`: monomials `as^n a1b^i a3b^j Db^k u2s^m` with `j < 4`; cells are
//!   truncated to `k ≥ -1` since every degree has infinite rank.
//!
//! Chart drawing conventions: the kR chart is drawn at half scale, so the
//! class of degree `(a, b)` sits at grid point `(a/2, b/2)`; the tmf13 chart
//! uses one grid step per 8 degree units along the `u2s^4` diagonal, so
//! `u2s^(4l)` sits at `(l, -l)` and `a1b` at `(1/8, 1/8)`.

use std::collections::BTreeMap;

use crate::coeff::{self, Coeff};
use crate::graded_ring::{ChartCell, ChartData, Element, GenId, Monomial, Presentation, Window};
use crate::ro_grade::RODegree;

use super::SpectrumId;

const MAX_AS: i64 = 96;

/// A class: monomial plus lattice generator (`None` for ℤ/2 summands).
type Class = (Monomial, Option<i64>);

fn div_exact(x: i64, d: i64) -> Option<i64> {
    (x.rem_euclid(d) == 0).then(|| x.div_euclid(d))
}

fn kr_cell(connective: bool, a: i64, b: i64) -> Vec<Class> {
    const AS: GenId = 0;
    const UB: GenId = 1;
    const U: GenId = 2;
    let mut out = Vec::new();
    for n in 0..=MAX_AS {
        let (Some(j), Some(m)) = (div_exact(a + b + n, 2), div_exact(a - b - n, 4)) else {
            continue;
        };
        if connective && j < 0 {
            continue;
        }
        let mono = Monomial::from_pairs([(AS, n), (UB, j), (U, m)]);
        let even = m % 2 == 0;
        if n == 0 {
            let unit = even && (!connective || m >= 0 || j >= 1);
            out.push((mono, Some(if unit { 1 } else { 2 })));
        } else if even {
            let ok = if connective && j == 0 { m >= 0 } else { n <= 2 };
            if ok {
                out.push((mono, None));
            }
        }
    }
    out
}

fn tmf_free_coeff(i: i64, m: i64) -> i64 {
    if m < 0 || m % 2 != 0 {
        2
    } else if m % 4 == 0 || i >= 1 {
        1
    } else {
        2
    }
}

fn tmf_torsion_ok(localized: bool, n: i64, i: i64, j: i64, m: i64) -> bool {
    if m % 2 != 0 {
        return false;
    }
    let quarter = m % 4 == 0;
    if localized {
        match n {
            1 | 2 => (m >= 0 && quarter) || i >= 1,
            3..=6 => i == 0 && quarter,
            _ => false,
        }
    } else if i >= 1 {
        n <= 2
    } else if m >= 0 {
        quarter && (j == 0 || n <= 6)
    } else {
        quarter && j >= 1 && (3..=6).contains(&n)
    }
}

fn tmf_cell(localized: bool, a: i64, b: i64) -> Vec<Class> {
    const AS: GenId = 0;
    const A1: GenId = 1;
    const A3: GenId = 2;
    const U: GenId = 3;
    const D: GenId = 4;
    let mut out = Vec::new();
    for n in 0..=MAX_AS {
        let (Some(s), Some(m)) = (div_exact(a + b + n, 2), div_exact(a - b - n, 4)) else {
            continue;
        };
        let mut triples = Vec::new();
        if localized {
            for k in -1..=s.div_euclid(12) {
                for j in 0..4 {
                    let i = s - 12 * k - 3 * j;
                    if i >= 0 {
                        triples.push((i, j, k));
                    }
                }
            }
        } else if s >= 0 {
            for j in 0..=s / 3 {
                triples.push((s - 3 * j, j, 0));
            }
        }
        for (i, j, k) in triples {
            let mono = Monomial::from_pairs([(AS, n), (A1, i), (A3, j), (U, m), (D, k)]);
            if n == 0 {
                out.push((mono, Some(tmf_free_coeff(i, m))));
            } else if tmf_torsion_ok(localized, n, i, j, m) {
                out.push((mono, None));
            }
        }
    }
    out
}

/// Underlying rings: `ku`, `KU`, `tmf1(3)`, `TMF1(3)` in degrees `(a, 0)`.
fn underlying_cell(id: SpectrumId, a: i64) -> Vec<Class> {
    if a % 2 != 0 {
        return Vec::new();
    }
    let s = a / 2;
    match id {
        SpectrumId::KRConnective if s < 0 => Vec::new(),
        SpectrumId::KRConnective | SpectrumId::KR => vec![(Monomial::var(0, s), Some(1))],
        SpectrumId::Tmf13 => {
            if s < 0 {
                return Vec::new();
            }
            (0..=s / 3)
                .map(|j| (Monomial::from_pairs([(0, s - 3 * j), (1, j)]), Some(1)))
                .collect()
        }
        SpectrumId::TMF13 => {
            let mut v = Vec::new();
            for k in -1..=s.div_euclid(12) {
                for j in 0..4 {
                    let i = s - 12 * k - 3 * j;
                    if i >= 0 {
                        v.push((Monomial::from_pairs([(0, i), (1, j), (2, k)]), Some(1)));
                    }
                }
            }
            v
        }
    }
}

fn classes(id: SpectrumId, underlying: bool, a: i64, b: i64) -> Vec<Class> {
    if underlying {
        return if b == 0 { underlying_cell(id, a) } else { Vec::new() };
    }
    match id {
        SpectrumId::KRConnective => kr_cell(true, a, b),
        SpectrumId::KR => kr_cell(false, a, b),
        SpectrumId::Tmf13 => tmf_cell(false, a, b),
        SpectrumId::TMF13 => tmf_cell(true, a, b),
    }
}

/// Cell of the model at `(a, b)`, expressed over `p`'s generators.
pub fn cell(id: SpectrumId, underlying: bool, p: &Presentation, a: i64, b: i64) -> ChartCell {
    let deg = RODegree::new(a, b);
    let mut free = BTreeMap::new();
    let mut torsion = BTreeMap::new();
    for (m, lattice) in classes(id, underlying, a, b) {
        match lattice {
            Some(c) => {
                free.insert(m, c);
            }
            None if !p.two_inverted() => {
                torsion.insert(m, ());
            }
            None => {}
        }
    }
    let elem = |m: Monomial, c: Coeff| Element {
        degree: deg.clone(),
        terms: [(m, c)].into_iter().collect(),
    };
    ChartCell {
        free: free.into_iter().map(|(m, c)| elem(m, coeff::int(c))).collect(),
        torsion: torsion.into_keys().map(|m| elem(m, coeff::int(1))).collect(),
    }
}

pub fn chart(id: SpectrumId, underlying: bool, p: &Presentation, window: Window) -> ChartData {
    let mut chart = ChartData::new(window);
    for (a, b) in window.degrees() {
        chart.set_cell(a, b, cell(id, underlying, p, a, b));
    }
    chart
}

pub const EQUIVARIANT_WINDOW: Window = Window {
    amin: -12,
    amax: 12,
    bmin: -12,
    bmax: 12,
};

pub const UNDERLYING_WINDOW: Window = Window {
    amin: -24,
    amax: 24,
    bmin: 0,
    bmax: 0,
};

/// Header (generators, definitions, relations) of each shipped file.
pub fn header(id: SpectrumId, underlying: bool) -> &'static str {
    match (id, underlying) {
        (SpectrumId::KRConnective, false) => KR_CONNECTIVE_HEADER,
        (SpectrumId::KR, false) => KR_HEADER,
        (SpectrumId::Tmf13, false) => TMF_CONNECTIVE_HEADER,
        (SpectrumId::TMF13, false) => TMF_HEADER,
        (SpectrumId::KRConnective, true) => KU_CONNECTIVE_HEADER,
        (SpectrumId::KR, true) => KU_HEADER,
        (SpectrumId::Tmf13, true) => TMF_E_CONNECTIVE_HEADER,
        (SpectrumId::TMF13, true) => TMF_E_HEADER,
    }
}

/// Full file text: header followed by the generated chart.
pub fn file_text(id: SpectrumId, underlying: bool) -> String {
    let head = header(id, underlying);
    let window = if underlying { UNDERLYING_WINDOW } else { EQUIVARIANT_WINDOW };
    let mut text = String::from(head);
    text.push_str(&format!(
        "WINDOW {} {} {} {}\n",
        window.amin, window.amax, window.bmin, window.bmax
    ));
    let p = Presentation::from_text(&text).expect("header parses");
    let chart = chart(id, underlying, &p, window);
    for ((a, b), c) in chart.cells() {
        text.push_str(&crate::graded_ring::chart_line(&p, &RODegree::new(a, b), c));
        text.push('\n');
    }
    text
}

const KR_CONNECTIVE_HEADER: &str = "\
# Connective Real K-theory kR, C2-fixed level.
#
# Ambient ring Z[as, ub, u2s^(+-1)]/(2as, as^3*ub). u2s is the Euler-like
# class of degree 2-2s; only the listed multiples of its powers are classes:
#   free  ub^j*u2s^m        generator 1 if m even and (m >= 0 or j >= 1), else 2
#                           (2*u2s^m is written v0(m))
#   Z/2   as^n*u2s^m        m even, m >= 0, any n >= 1 (the as-towers)
#   Z/2   as^n*ub^j*u2s^m   j >= 1, n in {1, 2}, m even
# Chart position of degree (a, b) is (a/2, b/2). Negative-cone Z/2 columns
# that are not products of these classes are not modeled.
ID kR
GEN as DEG 0-1s TORSION 2
GEN ub DEG 1+1s TORSION 0
GEN u2s DEG 2-2s TORSION 0 INV
DEF v0(m) = 2*u2s^m
REL as^3*ub = 0
";

const KR_HEADER: &str = "\
# Periodic Real K-theory KR = kR[ub^-1], C2-fixed level.
#
# Ambient ring Z[as, ub^(+-1), u2s^(+-1)]/(2as, as^3):
#   free  ub^j*u2s^m        generator 1 if m even, 2 if m odd (v0(m))
#   Z/2   as^n*ub^j*u2s^m   n in {1, 2}, m even
# Degree (a, b) carries KO_(a-b) shifted by ub^b.
ID KR
GEN as DEG 0-1s TORSION 2
GEN ub DEG 1+1s TORSION 0 INV
GEN u2s DEG 2-2s TORSION 0 INV
DEF v0(m) = 2*u2s^m
REL as^3 = 0
";

const TMF_CONNECTIVE_HEADER: &str = "\
# Connective tmf1(3) with Z[1/3] coefficients, C2-fixed level.
#
# Ambient ring Z[1/3][as, a1b, a3b, u2s^(+-1)]/(2as, as^3*a1b, as^7*a3b):
#   free  a1b^i*a3b^j*u2s^m   generator 1 if m >= 0 and (m = 0 mod 4, or
#                             m = 2 mod 4 and i >= 1), else 2 (v0(m) multiples)
#   Z/2   i >= 1: n in {1, 2}, m even
#         i = 0, m >= 0, m = 0 mod 4: j = 0 any n, j >= 1 n <= 6
#         i = 0, m < 0, m = 0 mod 4: j >= 1, 3 <= n <= 6
# a1_1 = a1b*u2s^2 and Db = a3b^3*(a1b^3 - 27*a3b).
# Chart position of u2s^(4l) is (l, -l); a1b sits at (1/8, 1/8).
ID tmf13
INVERT 3
GEN as DEG 0-1s TORSION 2
GEN a1b DEG 1+1s TORSION 0
GEN a3b DEG 3+3s TORSION 0
GEN u2s DEG 2-2s TORSION 0 INV
DEF v0(m) = 2*u2s^m
DEF a1_1 = a1b*u2s^2
DEF Db = a3b^3*a1b^3 - 27*a3b^4
REL as^3*a1b = 0
REL as^7*a3b = 0
";

const TMF_HEADER: &str = "\
# TMF1(3) = tmf1(3)[Db^-1] with Z[1/3] coefficients, C2-fixed level.
#
# Db is adjoined as an invertible generator and a3b^4 is rewritten through
# Db = a3b^3*a1b^3 - 27*a3b^4. Normal monomials have a3b-exponent < 4.
#   free  as in tmf13 (generator 2 on i = 0, m = 2 mod 4 and on m odd or < 0)
#   Z/2   n in {1, 2}: m even, and i >= 1 unless m >= 0, m = 0 mod 4
#         3 <= n <= 6: i = 0, m = 0 mod 4
# Each degree has infinite rank; cells list the part with Db-exponent >= -1.
ID TMF13
INVERT 3
GEN as DEG 0-1s TORSION 2
GEN a1b DEG 1+1s TORSION 0
GEN a3b DEG 3+3s TORSION 0
GEN u2s DEG 2-2s TORSION 0 INV
GEN Db DEG 12+12s TORSION 0 INV
DEF v0(m) = 2*u2s^m
DEF a1_1 = a1b*u2s^2
REL a3b^4 = 1/27*a1b^3*a3b^3 - 1/27*Db
REL as^3*a1b = 0
REL as^7 = 0
TRUNCATE Db -1
";

const KU_CONNECTIVE_HEADER: &str = "\
# Underlying ring of kR: pi_* ku = Z[u], |u| = 2.
ID ku
GEN u DEG 2+0s TORSION 0
";

const KU_HEADER: &str = "\
# Underlying ring of KR: pi_* KU = Z[u^(+-1)], |u| = 2.
ID KU
GEN u DEG 2+0s TORSION 0 INV
";

const TMF_E_CONNECTIVE_HEADER: &str = "\
# Underlying ring of tmf13: Z[1/3][a1, a3], |a1| = 2, |a3| = 6.
ID tmf1(3)
INVERT 3
GEN a1 DEG 2+0s TORSION 0
GEN a3 DEG 6+0s TORSION 0
DEF D = a3^3*a1^3 - 27*a3^4
";

const TMF_E_HEADER: &str = "\
# Underlying ring of TMF13: Z[1/3][a1, a3, D^-1], D = a3^3*(a1^3 - 27*a3).
# Cells list the part with D-exponent >= -1.
ID TMF1(3)
INVERT 3
GEN a1 DEG 2+0s TORSION 0
GEN a3 DEG 6+0s TORSION 0
GEN D DEG 24+0s TORSION 0 INV
REL a3^4 = 1/27*a1^3*a3^3 - 1/27*D
TRUNCATE D -1
";
