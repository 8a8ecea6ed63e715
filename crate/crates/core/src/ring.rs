//! Standard-graded monomial quotient rings `k[x1..xn]/I` and their reduced
//! elements. Reduction is divisibility testing against the ideal generators.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::exactla::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("elements belong to different rings")]
    Mismatch,
    #[error("monomial has {got} exponents, ring has {expected} variables")]
    Arity { expected: usize, got: usize },
    #[error("the ideal contains 1")]
    UnitIdeal,
    #[error("a ring needs at least one variable")]
    NoVariables,
    #[error("bad variable name `{0}`")]
    BadName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("element is not homogeneous")]
    Inhomogeneous,
}

/// Exponent vector. Ordered lexicographically with `x1 > x2 > ...`, so that a
/// sorted list starts with the lex-largest monomial (`x^2, xy, y^2`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Index of the variable when this is a pure power `x_i^e`, e ≥ 1.
    pub fn pure_power_of(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..self.0.len()).filter(|&i| self.0[i] > 0).collect();
        (nz.len() == 1).then(|| nz[0])
    }

    pub fn format(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// All exponent vectors of total degree `d` in `n` variables, lex-largest first.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(n: usize, d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d as u32);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u32);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Minimal generators of the monomial ideal, no generator dividing another,
/// sorted lex-largest first.
pub fn normalize_ideal(monomials: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = monomials.to_vec();
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort();
    kept
}

/// Monomial basis of one graded component.
#[derive(Debug)]
pub struct DegreeBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }
    pub fn len(&self) -> usize {
        self.monomials.len()
    }
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
    /// Position of a reduced monomial; `None` means the monomial is zero in R.
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

#[derive(Debug)]
struct RingInner {
    vars: Vec<String>,
    field: Field,
    ideal: Vec<Monomial>,
    artinian: bool,
    socle_bound: Option<usize>,
    cache: RwLock<Vec<Arc<DegreeBasis>>>,
}

/// `k[x1..xn]/I` with `I` monomial. Cheap to clone; clones share caches.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.vars == other.0.vars && self.0.field == other.0.field && self.0.ideal == other.0.ideal)
    }
}
impl Eq for Ring {}

fn valid_name(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

/// Whether `m` is zero modulo the ideal.
fn in_ideal(ideal: &[Monomial], m: &Monomial) -> bool {
    ideal.iter().any(|g| g.divides(m))
}

impl Ring {
    pub fn new(vars: &[&str], field: Field, ideal: &[Monomial]) -> Result<Ring, RingError> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        Ring::from_names(vars, field, ideal)
    }

    pub fn from_names(vars: Vec<String>, field: Field, ideal: &[Monomial]) -> Result<Ring, RingError> {
        if vars.is_empty() {
            return Err(RingError::NoVariables);
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(RingError::BadName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateName(v.clone()));
            }
        }
        let n = vars.len();
        for m in ideal {
            if m.nvars() != n {
                return Err(RingError::Arity { expected: n, got: m.nvars() });
            }
            if m.is_one() {
                return Err(RingError::UnitIdeal);
            }
        }
        let ideal = normalize_ideal(ideal);
        let artinian = (0..n).all(|i| ideal.iter().any(|g| g.pure_power_of() == Some(i)));
        let socle_bound = artinian.then(|| {
            (0..)
                .find(|&d| monomials_of_degree(n, d).iter().all(|m| in_ideal(&ideal, m)))
                .expect("artinian ring has a vanishing component")
        });
        Ok(Ring(Arc::new(RingInner { vars, field, ideal, artinian, socle_bound, cache: RwLock::new(Vec::new()) })))
    }

    /// Polynomial ring with all variables named.
    pub fn polynomial(vars: &[&str], field: Field) -> Result<Ring, RingError> {
        Ring::new(vars, field, &[])
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }
    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }
    pub fn field(&self) -> Field {
        self.0.field
    }
    pub fn ideal(&self) -> &[Monomial] {
        &self.0.ideal
    }
    pub fn is_artinian(&self) -> bool {
        self.0.artinian
    }
    /// Smallest `d` with `R_d = 0`, for Artinian rings.
    pub fn socle_bound(&self) -> Option<usize> {
        self.0.socle_bound
    }

    /// Same ideal over another field.
    pub fn with_field(&self, field: Field) -> Ring {
        Ring::from_names(self.0.vars.clone(), field, &self.0.ideal).expect("valid ring stays valid")
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn is_zero_monomial(&self, m: &Monomial) -> bool {
        in_ideal(&self.0.ideal, m)
    }

    /// Basis of `R_d`. Negative degrees have an empty basis.
    pub fn basis(&self, d: i64) -> Arc<DegreeBasis> {
        if d < 0 {
            return Arc::new(DegreeBasis { monomials: Vec::new(), index: HashMap::new() });
        }
        let d = d as usize;
        if let Some(b) = self.0.cache.read().expect("basis cache poisoned").get(d) {
            return b.clone();
        }
        let mut cache = self.0.cache.write().expect("basis cache poisoned");
        while cache.len() <= d {
            let e = cache.len();
            let monomials: Vec<Monomial> = if self.0.socle_bound.is_some_and(|s| e >= s) {
                Vec::new()
            } else {
                monomials_of_degree(self.nvars(), e).into_iter().filter(|m| !self.is_zero_monomial(m)).collect()
            };
            let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
            cache.push(Arc::new(DegreeBasis { monomials, index }));
        }
        cache[d].clone()
    }

    pub fn degree_basis(&self, d: usize) -> Vec<Monomial> {
        self.basis(d as i64).monomials.clone()
    }

    pub fn hilbert_value(&self, d: i64) -> usize {
        self.basis(d).len()
    }

    /// Largest degree of an ideal generator (0 for the polynomial ring).
    pub fn max_ideal_degree(&self) -> usize {
        self.0.ideal.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.format(&self.0.vars)
    }
}

/// Reduced element of a ring: no zero coefficients, no monomial in the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElem {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl RingElem {
    pub fn zero(ring: &Ring) -> RingElem {
        RingElem { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> RingElem {
        RingElem::monomial(ring, Monomial::one(ring.nvars()), ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Scalar) -> RingElem {
        RingElem::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn var(ring: &Ring, i: usize) -> RingElem {
        RingElem::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Scalar) -> RingElem {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !ring.field().is_zero(&c) && !ring.is_zero_monomial(&m) {
            terms.insert(m, c);
        }
        RingElem { ring: ring.clone(), terms }
    }

    /// Sums up the terms, dropping reducible monomials and zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(ring: &Ring, terms: I) -> Result<RingElem, RingError> {
        let f = ring.field();
        let mut out: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(RingError::Arity { expected: ring.nvars(), got: m.nvars() });
            }
            if ring.is_zero_monomial(&m) || f.is_zero(&c) {
                continue;
            }
            let e = out.entry(m).or_insert_with(|| f.zero());
            *e = f.add(e, &c);
        }
        out.retain(|_, c| !f.is_zero(c));
        Ok(RingElem { ring: ring.clone(), terms: out })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.terms.keys().next().map(|m| m.degree())
        }
    }

    fn check(&self, other: &RingElem) -> Result<(), RingError> {
        if self.ring != other.ring {
            Err(RingError::Mismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.check(other)?;
        let f = self.ring.field();
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(m.clone()).or_insert_with(|| f.zero());
            *e = f.add(e, c);
        }
        terms.retain(|_, c| !f.is_zero(c));
        Ok(RingElem { ring: self.ring.clone(), terms })
    }

    pub fn neg(&self) -> RingElem {
        let f = self.ring.field();
        RingElem { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect() }
    }

    pub fn sub(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> RingElem {
        let f = self.ring.field();
        if f.is_zero(c) {
            return RingElem::zero(&self.ring);
        }
        RingElem { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, c))).collect() }
    }

    pub fn mul(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.check(other)?;
        let f = self.ring.field();
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                if self.ring.is_zero_monomial(&m) {
                    continue;
                }
                let e = terms.entry(m).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(c1, c2));
            }
        }
        terms.retain(|_, c| !f.is_zero(c));
        Ok(RingElem { ring: self.ring.clone(), terms })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> RingElem {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| (t.mul(m), c.clone()))
            .filter(|(t, _)| !self.ring.is_zero_monomial(t))
            .collect();
        RingElem { ring: self.ring.clone(), terms }
    }

    /// The same polynomial in another ring with the same variables; reducible
    /// terms vanish.
    pub fn transfer(&self, ring: &Ring) -> Result<RingElem, RingError> {
        RingElem::from_terms(ring, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        let mut first = true;
        for (m, c) in &self.terms {
            let s = field.format(c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = self.ring.format_monomial(m);
            match (mag.as_str(), m.is_one()) {
                (_, true) => write!(f, "{mag}")?,
                ("1", false) => write!(f, "{mono}")?,
                _ => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn burch_ring() -> Ring {
        Ring::new(
            &["x", "y", "z", "w"],
            Field::DEFAULT,
            &[mono(&[3, 0, 0, 0]), mono(&[2, 1, 0, 0]), mono(&[1, 2, 0, 0]), mono(&[0, 3, 0, 0]), mono(&[1, 0, 0, 1])],
        )
        .unwrap()
    }

    #[test]
    fn normalize() {
        assert_eq!(normalize_ideal(&[mono(&[2, 0]), mono(&[2, 1])]), vec![mono(&[2, 0])]);
        let g = vec![mono(&[3, 0, 0, 0]), mono(&[2, 1, 0, 0]), mono(&[1, 2, 0, 0]), mono(&[1, 0, 0, 1]), mono(&[0, 3, 0, 0])];
        assert_eq!(normalize_ideal(&g), g);
        assert!(normalize_ideal(&[]).is_empty());
    }

    #[test]
    fn degree_bases() {
        let r = Ring::new(&["x", "y"], Field::DEFAULT, &[mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]).unwrap();
        assert_eq!(r.degree_basis(1), vec![mono(&[1, 0]), mono(&[0, 1])]);
        assert!(r.degree_basis(2).is_empty());
        assert_eq!(burch_ring().degree_basis(3).len(), 12);
        let uv = Ring::new(&["u", "v"], Field::DEFAULT, &[mono(&[1, 1])]).unwrap();
        assert_eq!(uv.degree_basis(4), vec![mono(&[4, 0]), mono(&[0, 4])]);
    }

    #[test]
    fn products() {
        let r = Ring::new(&["x", "y"], Field::DEFAULT, &[mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]).unwrap();
        let x = RingElem::var(&r, 0);
        let y = RingElem::var(&r, 1);
        assert!(x.mul(&y).unwrap().is_zero());
        let uv = Ring::new(&["u", "v"], Field::DEFAULT, &[mono(&[1, 1])]).unwrap();
        let u = RingElem::var(&uv, 0);
        let v = RingElem::var(&uv, 1);
        let p = u.mul(&u.add(&v).unwrap()).unwrap();
        assert_eq!(p, RingElem::monomial(&uv, mono(&[2, 0]), Field::DEFAULT.one()));
        assert_eq!(RingElem::one(&uv).mul(&p).unwrap(), p);
        assert_eq!(p.to_string(), "u^2");
        assert_eq!(u.sub(&v).unwrap().scale(&Field::DEFAULT.from_i64(3)).to_string(), "3*u - 3*v");
        let other = Ring::polynomial(&["u", "v"], Field::Rational).unwrap();
        assert_eq!(u.mul(&RingElem::var(&other, 0)), Err(RingError::Mismatch));
    }

    #[test]
    fn hilbert_values() {
        let uv = Ring::new(&["u", "v"], Field::DEFAULT, &[mono(&[1, 1])]).unwrap();
        assert_eq!(uv.hilbert_value(0), 1);
        assert!((1..8).all(|d| uv.hilbert_value(d) == 2));
        let x3 = Ring::new(&["x"], Field::DEFAULT, &[mono(&[3])]).unwrap();
        assert_eq!((0..5).map(|d| x3.hilbert_value(d)).collect::<Vec<_>>(), vec![1, 1, 1, 0, 0]);
        let k = Ring::new(&["x", "y"], Field::DEFAULT, &[mono(&[1, 0]), mono(&[0, 1])]).unwrap();
        assert_eq!((0..3).map(|d| k.hilbert_value(d)).collect::<Vec<_>>(), vec![1, 0, 0]);
    }

    #[test]
    fn profiles() {
        let r = Ring::new(&["x", "y"], Field::DEFAULT, &[mono(&[2, 0]), mono(&[0, 2])]).unwrap();
        assert!(r.is_artinian());
        assert_eq!(r.socle_bound(), Some(3));
        let uv = Ring::new(&["u", "v"], Field::DEFAULT, &[mono(&[1, 1])]).unwrap();
        assert!(!uv.is_artinian());
        assert_eq!(uv.socle_bound(), None);
        let x3 = Ring::new(&["x"], Field::DEFAULT, &[mono(&[3])]).unwrap();
        assert_eq!(x3.socle_bound(), Some(3));
        assert!(!burch_ring().is_artinian());
    }

    #[test]
    fn rejects_bad_rings() {
        assert_eq!(Ring::new(&["x"], Field::DEFAULT, &[mono(&[0])]).unwrap_err(), RingError::UnitIdeal);
        assert!(matches!(Ring::new(&["x", "x"], Field::DEFAULT, &[]), Err(RingError::DuplicateName(_))));
        assert!(matches!(Ring::new(&["1x"], Field::DEFAULT, &[]), Err(RingError::BadName(_))));
    }
}
