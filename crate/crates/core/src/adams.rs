//! Stable Adams operations ψᵏ on a presentation where `k` is inverted.
//!
//! ψᵏ is a ring map, so it is determined by the images of the generators:
//!
//! | generator        | image          |
//! |------------------|----------------|
//! | `as`             | `as`           |
//! | `u2s`            | `u2s`          |
//! | `ub`, `a1b`      | `k·g`          |
//! | `a3b`            | `k³·a3b`       |
//! | `Db`             | `k¹²·Db`       |
//!
//! The closed form is `ψᵏ(x) = k^((a+b)/2)·x` on free classes of degree
//! `a + bσ` and the identity on 2-torsion.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::coeff;
use crate::error::{Error, Result};
use crate::graded_ring::{Element, Presentation};
use crate::ro_grade::RODegree;

/// Exponent `w` with `ψᵏ(g) = k^w·g`.
fn image_weight(name: &str) -> Option<i64> {
    Some(match name {
        "as" | "u2s" => 0,
        "ub" | "a1b" => 1,
        "a3b" => 3,
        "Db" => 12,
        _ => return None,
    })
}

#[derive(Clone, Debug)]
pub struct AdamsOperation {
    pub k: i64,
    presentation: Arc<Presentation>,
    images: Vec<Element>,
}

impl AdamsOperation {
    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn generator_images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, x: &Element) -> Element {
        let p = &*self.presentation;
        let mut terms = Vec::new();
        for (m, c) in &x.terms {
            let mut img = p.scalar(c.clone());
            for &(g, e) in m.entries() {
                let pw = p.pow(&self.images[g as usize], e).expect("generator images are invertible");
                img = p.mul(&img, &pw);
            }
            terms.extend(img.terms);
        }
        p.element_from_terms(x.degree.clone(), terms)
    }
}

/// ψᵏ on `p`. Requires `k ≠ 0` and `k` inverted in `p`.
pub fn make_adams(k: i64, p: &Arc<Presentation>) -> Result<AdamsOperation> {
    if k == 0 {
        return Err(Error::ZeroInversion);
    }
    if !p.is_inverted(k) {
        return Err(Error::NotInverted(k));
    }
    let images = p
        .generators()
        .iter()
        .enumerate()
        .map(|(g, sym)| {
            let w = if sym.is_torsion() {
                0
            } else {
                image_weight(&sym.name).ok_or_else(|| Error::UnknownGenerator(sym.name.clone()))?
            };
            let x = p.generator_element(g as u16);
            Ok(p.scale(&x, &coeff::pow(k, &BigInt::from(w))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AdamsOperation {
        k,
        presentation: p.clone(),
        images,
    })
}

pub fn apply(op: &AdamsOperation, x: &Element) -> Element {
    op.apply(x)
}

/// `ψᵏ(x)` from the closed form: `k^((a+b)/2)·x` on free classes, identity
/// on 2-torsion.
pub fn formula_image(k: i64, x: &Element, p: &Presentation) -> Result<Element> {
    if k == 0 {
        return Err(Error::ZeroInversion);
    }
    if !p.is_inverted(k) {
        return Err(Error::NotInverted(k));
    }
    let x = p.normal_form(x);
    let (free, torsion) = p.split_torsion(&x);
    if free.is_zero() {
        return Ok(x);
    }
    let e = match x.degree.half_total() {
        Ok(e) => e,
        Err(_) if !torsion.is_zero() => return Err(Error::MixedElement(x.degree.clone())),
        Err(err) => return Err(err.into()),
    };
    let scaled = p.scale(&free, &coeff::pow(k, &e));
    p.add(&scaled, &torsion)
}

/// `op1 ∘ op2`, which is `ψ^(k1·k2)`.
pub fn compose(op1: &AdamsOperation, op2: &AdamsOperation) -> Result<AdamsOperation> {
    let (p1, p2) = (&op1.presentation, &op2.presentation);
    if !Arc::ptr_eq(p1, p2) && (p1.id != p2.id || p1.generators() != p2.generators()) {
        return Err(Error::SpectrumMismatch(p1.id.clone(), p2.id.clone()));
    }
    Ok(AdamsOperation {
        k: op1.k * op2.k,
        presentation: p1.clone(),
        images: op2.images.iter().map(|y| op1.apply(y)).collect(),
    })
}

/// Underlying ψᵏ: multiplication by `kⁿ` on `π_{2n}`, extended from
/// `ψᵏ(g) = k^(|g|/2)·g`.
pub fn underlying_psi(k: i64, x: &Element, und: &Presentation) -> Result<Element> {
    if !und.is_inverted(k) {
        return Err(Error::NotInverted(k));
    }
    let mut terms = Vec::new();
    for (m, c) in &x.terms {
        let mut w = BigInt::from(0);
        for &(g, e) in m.entries() {
            let d = &und.generator(g).degree;
            w += RODegree::new(d.a.clone(), 0).half_total()? * e;
        }
        terms.push((m.clone(), c * coeff::pow(k, &w)));
    }
    Ok(und.element_from_terms(x.degree.clone(), terms))
}
