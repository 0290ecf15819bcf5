use proptest::prelude::*;

use super::*;

const TOY: &str = "\
ID toy
GEN t DEG 0-1s TORSION 2
GEN x DEG 1+1s TORSION 0
GEN y DEG 2-2s TORSION 0 INV
REL t^3*x = 0
WINDOW -4 4 -4 4
CHART 0-1s FREE - TORSION t
CHART 1+1s FREE x TORSION -
CHART 1+0s FREE - TORSION t*x
";

fn toy() -> Presentation {
    Presentation::from_text(TOY).unwrap()
}

#[test]
fn torsion_coefficients_reduce_mod_two() {
    let p = toy();
    assert!(p.eval("2*t").unwrap().is_zero());
    assert_eq!(p.eval("3*t").unwrap(), p.eval("t").unwrap());
    assert!(p.equals(&p.eval("t").unwrap(), &p.eval("3*t").unwrap()).unwrap());
    assert!(p.is_torsion(&p.eval("t*x").unwrap()));
    assert!(!p.is_torsion(&p.eval("x").unwrap()));
}

#[test]
fn kill_rule_applies_to_multiples() {
    let p = toy();
    assert!(p.eval("t^3*x^2*y").unwrap().is_zero());
    assert!(!p.eval("t^3*y").unwrap().is_zero());
}

#[test]
fn invertible_generators_cancel() {
    let p = toy();
    assert_eq!(p.eval("y*y^-1").unwrap(), p.one());
    assert!(p.eval("x^-1").is_err());
}

#[test]
fn degree_mismatch_is_reported() {
    let p = toy();
    let x = p.eval("x").unwrap();
    let t = p.eval("t").unwrap();
    assert!(matches!(p.add(&x, &t), Err(Error::DegreeMismatch(..))));
    assert!(matches!(p.eval("x + t"), Err(Error::HeterogeneousExpr(..))));
}

#[test]
fn class_check() {
    let p = toy();
    assert!(p.parse_element("x").is_ok());
    assert!(matches!(p.parse_element("1/3*x"), Err(_)));
    assert_eq!(p.group_structure(&RODegree::new(1, 0)).unwrap(), (0, 1));
    assert!(matches!(p.group_structure(&RODegree::new(9, 0)), Err(Error::OutsideWindow(_))));
}

#[test]
fn non_confluent_rules_rejected() {
    let text = "ID bad\nGEN x DEG 2+0s TORSION 0\nGEN y DEG 4+0s TORSION 0\n\
                REL x^2 = y\nREL x*y = 0\nWINDOW 0 0 0 0\n";
    assert!(matches!(Presentation::from_text(text), Err(Error::NonConfluentRelations(_))));
}

#[test]
fn bad_chart_rejected() {
    let wrong_summand = TOY.replace("CHART 0-1s FREE - TORSION t", "CHART 0-1s FREE t TORSION -");
    assert!(matches!(Presentation::from_text(&wrong_summand), Err(Error::CorruptData(_))));
    let reducible = TOY.replace("TORSION t*x", "TORSION t*x, t^3*x");
    assert!(Presentation::from_text(&reducible).is_err());
}

#[test]
fn text_round_trip() {
    let p = toy();
    let q = Presentation::from_text(&p.to_text()).unwrap();
    assert_eq!(q.to_text(), p.to_text());
}

#[test]
fn span_echelon() {
    let p = toy();
    let y2 = p.eval("y^2").unwrap();
    let d = y2.degree.clone();
    let gens = [p.scale_int(&y2, 4), p.scale_int(&y2, 6)];
    let cell = ChartCell::span(&p, gens);
    assert_eq!(cell.free, vec![p.scale_int(&y2, 2)]);
    assert!(cell.contains(&p, &p.scale_int(&y2, 10)));
    assert!(!cell.contains(&p, &y2));
    assert_eq!(cell.free[0].degree, d);
}

fn arb_monomial() -> impl Strategy<Value = String> {
    (0i64..4, 0i64..4, -3i64..4).prop_map(|(a, b, c)| format!("t^{a}*x^{b}*y^{c}"))
}

proptest! {
    #[test]
    fn normal_form_idempotent(m in arb_monomial(), c in -5i64..6) {
        let p = toy();
        let x = p.eval(&format!("{c}*{m}")).unwrap();
        prop_assert_eq!(p.normal_form(&x), x);
    }

    #[test]
    fn product_is_homogeneous(m1 in arb_monomial(), m2 in arb_monomial()) {
        let p = toy();
        let x = p.eval(&m1).unwrap();
        let y = p.eval(&m2).unwrap();
        let z = p.mul(&x, &y);
        prop_assert_eq!(&z.degree, &(&x.degree + &y.degree));
        for m in z.terms.keys() {
            prop_assert_eq!(p.monomial_degree(m).unwrap(), z.degree.clone());
        }
        prop_assert_eq!(z, p.mul(&y, &x));
    }
}
