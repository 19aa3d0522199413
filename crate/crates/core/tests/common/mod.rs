//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use solvkit::frontend::{run_script, Options};
use solvkit::{
    validate_algebra, AlgebraDef, Exponent, Field, FieldElem, OrderDescriptor, Poly,
    ValidatedAlgebra,
};

pub const Q: Field = Field::Rational;

pub fn c(n: i64) -> FieldElem {
    Q.from_i64(n)
}

pub fn frac(n: i64, d: i64) -> FieldElem {
    Q.from_ratio(&BigInt::from(n), &BigInt::from(d)).unwrap()
}

pub fn e(v: &[u32]) -> Exponent {
    Exponent::from_slice(v)
}

pub fn weyl() -> ValidatedAlgebra {
    validate_algebra(
        AlgebraDef::new(["x", "d"], Q, OrderDescriptor::deglex(2)).relation(
            1,
            0,
            c(1),
            [(c(1), e(&[0, 0]))],
        ),
    )
    .unwrap()
}

/// `h_1(q)` on generators `y, z, x`: `xy = q^{-1} yx + z`, `xz = q zx`, `zy = q yz`.
pub fn q_heisenberg_def(q: i64) -> AlgebraDef {
    q_heisenberg_over(Q, q)
}

pub fn q_heisenberg_over(field: Field, q: i64) -> AlgebraDef {
    let (one, q) = (field.one(), field.from_i64(q));
    AlgebraDef::new(["y", "z", "x"], field, OrderDescriptor::deglex(3))
        .relation(1, 0, q.clone(), [])
        .relation(2, 0, q.inv(), [(one.clone(), e(&[0, 1, 0]))])
        .relation(2, 1, q, [])
}

/// The additive analogue `A_1(q)`: `yx = q xy + 1`.
pub fn additive_q_def(q: i64) -> AlgebraDef {
    AlgebraDef::new(["x", "y"], Q, OrderDescriptor::deglex(2)).relation(
        1,
        0,
        c(q),
        [(c(1), e(&[0, 0]))],
    )
}

pub fn commutative(names: &[&str], order: OrderDescriptor) -> ValidatedAlgebra {
    validate_algebra(AlgebraDef::commutative(names.iter().copied(), Q, order)).unwrap()
}

/// `yx = 2xy`, `zy = yz`, `zx = xz + y`: the overlap `zyx` does not resolve.
pub fn inconsistent_def() -> AlgebraDef {
    AlgebraDef::new(["x", "y", "z"], Q, OrderDescriptor::lex(3))
        .relation(1, 0, c(2), [])
        .relation(2, 1, c(1), [])
        .relation(2, 0, c(1), [(c(1), e(&[0, 1, 0]))])
}

/// `K[a1, a2, a3]` under lex with `a3 a1 = a1 a3 + a2^2 a3 + a2`, all else commuting.
pub fn three_generator_def() -> AlgebraDef {
    AlgebraDef::new(["a1", "a2", "a3"], Q, OrderDescriptor::lex(3))
        .relation(1, 0, c(1), [])
        .relation(2, 1, c(1), [])
        .relation(2, 0, c(1), [(c(1), e(&[0, 2, 1])), (c(1), e(&[0, 1, 0]))])
}

pub fn random_poly(
    alg: &ValidatedAlgebra,
    rng: &mut impl Rng,
    terms: usize,
    max_exp: u32,
    coeff: i64,
) -> Poly {
    let n = alg.n();
    alg.poly((0..terms).map(|_| {
        let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        (c(rng.gen_range(-coeff..=coeff)), e(&v))
    }))
}

pub fn rational(x: &FieldElem) -> BigRational {
    match x {
        FieldElem::Rational(q) => q.clone(),
        FieldElem::Prime { value, .. } => BigRational::from_integer(BigInt::from(*value)),
    }
}

// --- commutative polynomials, independent of the library -----------------

/// Exponent vector → coefficient; zero coefficients are never stored.
pub type CPoly = BTreeMap<Vec<u32>, BigRational>;

pub fn to_cpoly(f: &Poly) -> CPoly {
    f.terms()
        .iter()
        .map(|t| (t.exp.as_slice().to_vec(), rational(&t.coeff)))
        .collect()
}

pub fn from_cpoly(alg: &ValidatedAlgebra, f: &CPoly) -> Poly {
    alg.poly(
        f.iter()
            .map(|(v, q)| (Q.from_ratio(q.numer(), q.denom()).unwrap(), e(v))),
    )
}

fn add_term(acc: &mut CPoly, v: Vec<u32>, q: BigRational) {
    let slot = acc.entry(v.clone()).or_insert_with(BigRational::zero);
    *slot += q;
    if slot.is_zero() {
        acc.remove(&v);
    }
}

/// Schoolbook product: exponents add, coefficients multiply.
pub fn cmul(f: &CPoly, g: &CPoly) -> CPoly {
    let mut acc = CPoly::new();
    for (a, p) in f {
        for (b, q) in g {
            let v = a.iter().zip(b).map(|(x, y)| x + y).collect();
            add_term(&mut acc, v, p * q);
        }
    }
    acc
}

pub fn csub(f: &CPoly, g: &CPoly) -> CPoly {
    let mut acc = f.clone();
    for (v, q) in g {
        add_term(&mut acc, v.clone(), -q.clone());
    }
    acc
}

/// Pure lex with the first variable largest: the derived `Ord` on `Vec<u32>`.
fn lead(f: &CPoly) -> Option<(&Vec<u32>, &BigRational)> {
    f.iter().next_back()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn shift(f: &CPoly, by: &[u32], q: &BigRational) -> CPoly {
    f.iter()
        .map(|(v, p)| (v.iter().zip(by).map(|(x, y)| x + y).collect(), p * q))
        .collect()
}

/// Full reduction of `f` by `gs` under lex.
pub fn creduce(f: &CPoly, gs: &[CPoly]) -> CPoly {
    let mut f = f.clone();
    let mut rem = CPoly::new();
    while let Some((v, q)) = lead(&f).map(|(v, q)| (v.clone(), q.clone())) {
        let divisor = gs.iter().find(|g| divides(lead(g).unwrap().0, &v));
        match divisor {
            Some(g) => {
                let (gv, gq) = lead(g).unwrap();
                let m: Vec<u32> = v.iter().zip(gv).map(|(x, y)| x - y).collect();
                f = csub(&f, &shift(g, &m, &(&q / gq)));
            }
            None => {
                f.remove(&v);
                rem.insert(v, q);
            }
        }
    }
    rem
}

/// Textbook Buchberger under lex, no criteria.
pub fn cbuchberger(gens: &[CPoly]) -> Vec<CPoly> {
    let mut g: Vec<CPoly> = gens.iter().filter(|f| !f.is_empty()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (a, p) = lead(&g[i]).unwrap();
        let (b, q) = lead(&g[j]).unwrap();
        let l: Vec<u32> = a.iter().zip(b).map(|(x, y)| *x.max(y)).collect();
        let ma: Vec<u32> = l.iter().zip(a).map(|(x, y)| x - y).collect();
        let mb: Vec<u32> = l.iter().zip(b).map(|(x, y)| x - y).collect();
        let s = csub(
            &shift(&g[i], &ma, &p.recip()),
            &shift(&g[j], &mb, &q.recip()),
        );
        let r = creduce(&s, &g);
        if !r.is_empty() {
            g.push(r);
            let k = g.len() - 1;
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    g
}

/// Elements of a lex basis free of the variables in `drop`.
pub fn celiminate(gens: &[CPoly], drop: &[usize]) -> Vec<CPoly> {
    cbuchberger(gens)
        .into_iter()
        .filter(|f| f.keys().all(|v| drop.iter().all(|&k| v[k] == 0)))
        .collect()
}

// --- univariate polynomials: coefficient of x^k at index k -----------------

pub type UPoly = Vec<BigRational>;

fn trim(mut f: UPoly) -> UPoly {
    while f.last().is_some_and(|q| q.is_zero()) {
        f.pop();
    }
    f
}

fn urem(f: &UPoly, g: &UPoly) -> UPoly {
    let mut f = trim(f.clone());
    let g = trim(g.clone());
    let lg = g.last().unwrap().clone();
    while f.len() >= g.len() {
        let q = f.last().unwrap() / &lg;
        let off = f.len() - g.len();
        for (k, b) in g.iter().enumerate() {
            f[off + k] -= &q * b;
        }
        f = trim(f);
    }
    f
}

fn umul(f: &UPoly, g: &UPoly) -> UPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

fn udiv_exact(f: &UPoly, g: &UPoly) -> UPoly {
    let mut f = trim(f.clone());
    let lg = g.last().unwrap().clone();
    let mut q = vec![BigRational::zero(); f.len().saturating_sub(g.len()) + 1];
    while !f.is_empty() && f.len() >= g.len() {
        let c = f.last().unwrap() / &lg;
        let off = f.len() - g.len();
        for (k, b) in g.iter().enumerate() {
            f[off + k] -= &c * b;
        }
        q[off] = c;
        f = trim(f);
    }
    assert!(f.is_empty(), "inexact division");
    trim(q)
}

pub fn umonic(f: &UPoly) -> UPoly {
    let f = trim(f.clone());
    match f.last().cloned() {
        Some(l) => f.iter().map(|q| q / &l).collect(),
        None => f,
    }
}

/// Euclid's algorithm.
pub fn ugcd(f: &UPoly, g: &UPoly) -> UPoly {
    let (mut a, mut b) = (trim(f.clone()), trim(g.clone()));
    while !b.is_empty() {
        let r = urem(&a, &b);
        a = b;
        b = r;
    }
    umonic(&a)
}

pub fn ulcm(f: &UPoly, g: &UPoly) -> UPoly {
    umonic(&udiv_exact(&umul(f, g), &ugcd(f, g)))
}

/// Reads a polynomial of a one-generator algebra.
pub fn to_upoly(f: &Poly) -> UPoly {
    let mut out = Vec::new();
    for t in f.terms() {
        let k = t.exp.get(0) as usize;
        if out.len() <= k {
            out.resize(k + 1, BigRational::zero());
        }
        out[k] = rational(&t.coeff);
    }
    trim(out)
}

// --- the Weyl algebra acting on K[x] ---------------------------------------

fn derivative(p: &UPoly) -> UPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, q)| q * BigRational::from_integer(BigInt::from(k)))
        .collect()
}

/// Applies `Σ c x^a d^b` to `p`: differentiate `b` times, then multiply by `x^a`.
pub fn weyl_apply(f: &Poly, p: &UPoly) -> UPoly {
    let mut out: UPoly = Vec::new();
    for t in f.terms() {
        let (a, b) = (t.exp.get(0) as usize, t.exp.get(1));
        let mut q = p.clone();
        for _ in 0..b {
            q = derivative(&q);
        }
        let q = trim(q);
        if q.is_empty() {
            continue;
        }
        if out.len() < q.len() + a {
            out.resize(q.len() + a, BigRational::zero());
        }
        let coeff = rational(&t.coeff);
        for (k, v) in q.iter().enumerate() {
            out[k + a] += &coeff * v;
        }
    }
    trim(out)
}

pub fn random_upoly(rng: &mut impl Rng, degree: usize) -> UPoly {
    trim(
        (0..=degree)
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-9i64..=9))))
            .collect(),
    )
}

// --- bundled scripts --------------------------------------------------------

pub fn scripts_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scripts")
}

pub fn scripts() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(scripts_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "solv"))
        .collect();
    out.sort();
    out
}

/// stdout, then stderr and the exit status when present.
pub fn transcript(script: &Path) -> String {
    let src = std::fs::read_to_string(script).unwrap();
    let t = run_script(&src, &Options::default());
    let mut s = t.stdout;
    if !t.stderr.is_empty() {
        s.push_str("-- stderr --\n");
        s.push_str(&t.stderr);
    }
    if t.exit_code != 0 {
        s.push_str(&format!("-- exit {} --\n", t.exit_code));
    }
    s
}

pub fn golden_path(script: &Path) -> PathBuf {
    script.with_extension("golden")
}
