//! Canonical text rendering of monomials, polynomials and vectors.

use crate::field::FieldElem;
use crate::monomial::Exponent;
use crate::poly::Poly;

/// `x^2*d`, or `1` for the zero exponent.
pub fn monomial(e: &Exponent, names: &[String]) -> String {
    let parts: Vec<String> = e
        .as_slice()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| match k {
            1 => names[i].clone(),
            _ => format!("{}^{}", names[i], k),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Renders `(coefficient, exponent)` pairs already in display order.
pub fn terms<'a>(
    terms: impl IntoIterator<Item = (&'a FieldElem, &'a Exponent)>,
    names: &[String],
) -> String {
    let mut out = String::new();
    for (k, (c, e)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if e.is_zero() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&monomial(e, names));
        } else {
            out.push_str(&format!("{}*{}", a, monomial(e, names)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn poly(f: &Poly, names: &[String]) -> String {
    terms(f.terms().iter().map(|t| (&t.coeff, &t.exp)), names)
}

/// `[ g1, g2 ]`, or `[ ]` when empty.
pub fn list(items: &[String]) -> String {
    if items.is_empty() {
        "[ ]".to_string()
    } else {
        format!("[ {} ]", items.join(", "))
    }
}
