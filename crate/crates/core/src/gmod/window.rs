//! Graded submodules realized degree by degree up to a bound.
//!
//! A window stores, for each degree `d` from the ambient's lowest cover degree
//! up to `hi`, the preimage of `N_d` in `(F0)_d`. The image of the
//! presentation is always included, so equality of windows is equality of
//! row spaces.

use crate::exactla::{Matrix, Scalar, Subspace};
use crate::gmod::module::Module;
use crate::gmod::ModError;
use crate::ring::{Monomial, RingElem};

#[derive(Clone, Debug)]
pub struct SubmoduleWindow {
    ambient: Module,
    lo: i64,
    hi: i64,
    comps: Vec<Subspace>,
}

/// Certified finite length of a quotient `X/N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteLength {
    /// Highest nonzero degree; `None` when the quotient is zero.
    pub top: Option<i64>,
    /// The degree whose vanishing certified it.
    pub vanishing_degree: i64,
}

fn lowest(x: &Module) -> i64 {
    x.min_degree().unwrap_or(0)
}

fn var_monomials(x: &Module) -> Vec<Monomial> {
    let n = x.ring().nvars();
    (0..n).map(|i| Monomial::var(n, i)).collect()
}

/// Coordinates of a homogeneous cover vector, with its degree.
pub fn vector_coords(x: &Module, elems: &[RingElem]) -> Result<Option<(i64, Vec<Scalar>)>, ModError> {
    match x.cover().element_degree(elems)? {
        None => Ok(None),
        Some(d) => Ok(Some((d, x.cover().coords_at(elems, d)?))),
    }
}

impl SubmoduleWindow {
    fn build(ambient: &Module, hi: i64, mut f: impl FnMut(i64, &[Subspace]) -> Subspace) -> SubmoduleWindow {
        let lo = lowest(ambient);
        let mut comps: Vec<Subspace> = Vec::new();
        let mut d = lo;
        while d <= hi {
            let c = f(d, &comps);
            comps.push(c);
            d += 1;
        }
        SubmoduleWindow { ambient: ambient.clone(), lo, hi, comps }
    }

    /// The zero submodule.
    pub fn zero(x: &Module, hi: i64) -> SubmoduleWindow {
        SubmoduleWindow::build(x, hi, |d, _| (*x.rel_space(d)).clone())
    }

    /// The whole module.
    pub fn full(x: &Module, hi: i64) -> SubmoduleWindow {
        SubmoduleWindow::build(x, hi, |d, _| Subspace::full(x.ring().field(), x.cover().dim(d)))
    }

    /// Submodule generated by homogeneous cover vectors, exact in every
    /// degree up to `hi`.
    pub fn span_closure(x: &Module, gens: &[Vec<RingElem>], hi: i64) -> Result<SubmoduleWindow, ModError> {
        let mut coords = Vec::new();
        for g in gens {
            if let Some(c) = vector_coords(x, g)? {
                coords.push(c);
            }
        }
        Ok(SubmoduleWindow::span_closure_coords(x, &coords, hi))
    }

    /// As `span_closure`, generators given as `(degree, cover coordinates)`.
    pub fn span_closure_coords(x: &Module, gens: &[(i64, Vec<Scalar>)], hi: i64) -> SubmoduleWindow {
        let vars = var_monomials(x);
        let lo = lowest(x);
        let field = x.ring().field();
        SubmoduleWindow::build(x, hi, |d, prev| {
            let mut vectors: Vec<Vec<Scalar>> = x.rel_space(d).basis().to_vec();
            vectors.extend(gens.iter().filter(|(e, _)| *e == d).map(|(_, v)| v.clone()));
            if d > lo {
                let below = &prev[(d - 1 - lo) as usize];
                vectors.extend(shift_all(x, d - 1, below, &vars));
            }
            Subspace::span(field, x.cover().dim(d), vectors)
        })
    }

    pub fn ambient(&self) -> &Module {
        &self.ambient
    }
    pub fn lo(&self) -> i64 {
        self.lo
    }
    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// Preimage of `N_d` in `(F0)_d`. Degrees below the window are zero;
    /// degrees above it are not known.
    pub fn component(&self, d: i64) -> Subspace {
        if d < self.lo {
            return Subspace::zero(self.ambient.ring().field(), self.ambient.cover().dim(d));
        }
        assert!(d <= self.hi, "degree {d} outside window (bound {})", self.hi);
        self.comps[(d - self.lo) as usize].clone()
    }

    fn comp_ref(&self, d: i64) -> Option<&Subspace> {
        (d >= self.lo && d <= self.hi).then(|| &self.comps[(d - self.lo) as usize])
    }

    /// `dim_k N_d`.
    pub fn dim(&self, d: i64) -> usize {
        self.comp_ref(d).map_or(0, |c| c.rank() - self.ambient.rel_space(d).rank())
    }

    /// `dim_k (X/N)_d`.
    pub fn codim(&self, d: i64) -> usize {
        self.comp_ref(d).map_or_else(|| self.ambient.dim(d), |c| c.quotient_dim())
    }

    pub fn contains(&self, d: i64, v: &[Scalar]) -> bool {
        match self.comp_ref(d) {
            Some(c) => c.contains(v),
            None => self.ambient.is_zero_element(d, v),
        }
    }

    /// Same submodule, window cut down to `hi`.
    pub fn restrict(&self, hi: i64) -> SubmoduleWindow {
        let hi = hi.min(self.hi);
        let keep = (hi - self.lo + 1).max(0) as usize;
        SubmoduleWindow { ambient: self.ambient.clone(), lo: self.lo, hi, comps: self.comps[..keep].to_vec() }
    }

    fn check_same(&self, other: &SubmoduleWindow) -> Result<(), ModError> {
        if std::sync::Arc::ptr_eq(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(ModError::AmbientMismatch)
        }
    }

    pub fn sum(&self, other: &SubmoduleWindow) -> Result<SubmoduleWindow, ModError> {
        self.check_same(other)?;
        let hi = self.hi.min(other.hi);
        Ok(SubmoduleWindow::build(&self.ambient, hi, |d, _| {
            self.comp_ref(d).expect("in window").sum(other.comp_ref(d).expect("in window"))
        }))
    }

    pub fn intersection(&self, other: &SubmoduleWindow) -> Result<SubmoduleWindow, ModError> {
        self.check_same(other)?;
        let hi = self.hi.min(other.hi);
        Ok(SubmoduleWindow::build(&self.ambient, hi, |d, _| {
            self.comp_ref(d).expect("in window").intersection(other.comp_ref(d).expect("in window"))
        }))
    }

    /// `mN`, valid on the same window.
    pub fn m_multiple(&self) -> SubmoduleWindow {
        self.m_multiple_to(self.hi)
    }

    /// `mN` one degree past the window, which `N` up to `hi` determines.
    pub fn m_multiple_extended(&self) -> SubmoduleWindow {
        self.m_multiple_to(self.hi + 1)
    }

    fn m_multiple_to(&self, hi: i64) -> SubmoduleWindow {
        let vars = var_monomials(&self.ambient);
        let x = &self.ambient;
        SubmoduleWindow::build(x, hi, |d, _| {
            let mut vectors: Vec<Vec<Scalar>> = x.rel_space(d).basis().to_vec();
            if let Some(below) = self.comp_ref(d - 1) {
                vectors.extend(shift_all(x, d - 1, below, &vars));
            }
            Subspace::span(x.ring().field(), x.cover().dim(d), vectors)
        })
    }

    /// `JN` for homogeneous ideal generators `J` of positive degree.
    pub fn ideal_multiple(&self, ideal: &[RingElem]) -> Result<SubmoduleWindow, ModError> {
        let gens = homogeneous_gens(ideal)?;
        let x = &self.ambient;
        Ok(SubmoduleWindow::build(x, self.hi, |d, _| {
            let mut vectors: Vec<Vec<Scalar>> = x.rel_space(d).basis().to_vec();
            for (g, e) in &gens {
                if let Some(below) = self.comp_ref(d - e) {
                    for b in below.basis() {
                        vectors.push(x.cover().mul_elem(d - e, b, g, *e));
                    }
                }
            }
            Subspace::span(x.ring().field(), x.cover().dim(d), vectors)
        }))
    }

    /// `(N :_X J)`; the window shrinks by the largest generator degree.
    pub fn colon(&self, ideal: &[RingElem]) -> Result<SubmoduleWindow, ModError> {
        let gens = homogeneous_gens(ideal)?;
        let shrink = gens.iter().map(|(_, e)| *e).max().unwrap_or(0);
        let x = &self.ambient;
        let field = x.ring().field();
        Ok(SubmoduleWindow::build(x, self.hi - shrink, |d, _| {
            let dim = x.cover().dim(d);
            if gens.is_empty() {
                return Subspace::full(field, dim);
            }
            // Stack the maps v ↦ g·v mod N_{d+deg g}; the colon is their common kernel.
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            let units: Vec<Vec<Scalar>> = (0..dim)
                .map(|i| {
                    let mut v = vec![field.zero(); dim];
                    v[i] = field.one();
                    v
                })
                .collect();
            for (g, e) in &gens {
                let target = self.comp_ref(d + e).expect("colon target inside window");
                let images: Vec<Vec<Scalar>> =
                    units.iter().map(|u| target.quotient_coords(&x.cover().mul_elem(d, u, g, *e))).collect();
                let q = target.quotient_dim();
                for r in 0..q {
                    rows.push(images.iter().map(|c| c[r].clone()).collect());
                }
            }
            let m = Matrix::from_rows(field, dim, rows).expect("rows have the source dimension");
            Subspace::span(field, dim, m.kernel_vectors())
        }))
    }

    /// `(N :_X m)`.
    pub fn colon_m(&self) -> SubmoduleWindow {
        let ring = self.ambient.ring();
        let vars: Vec<RingElem> = (0..ring.nvars()).map(|i| RingElem::var(ring, i)).collect();
        self.colon(&vars).expect("variables are homogeneous of degree 1")
    }

    /// `{v : x·v ∈ N}`.
    pub fn colon_by_element(&self, x: &RingElem) -> Result<SubmoduleWindow, ModError> {
        if !x.is_zero() && !x.is_homogeneous() {
            return Err(ModError::Inhomogeneous);
        }
        self.colon(std::slice::from_ref(x))
    }

    /// Whether `self ⊆ other` on the common window.
    pub fn is_subset_of(&self, other: &SubmoduleWindow) -> bool {
        self.first_excess(other, self.hi.min(other.hi)).is_none()
    }

    /// Lowest degree `d ≤ upto` where `self_d ⊄ other_d`, with an element of
    /// `self_d` outside `other_d` (reduced modulo the relations).
    pub fn first_excess(&self, other: &SubmoduleWindow, upto: i64) -> Option<(i64, Vec<Scalar>)> {
        let mut d = self.lo;
        while d <= upto {
            if let (Some(a), Some(b)) = (self.comp_ref(d), other.comp_ref(d)) {
                if let Some(v) = a.basis().iter().find(|v| !b.contains(v)) {
                    return Some((d, self.ambient.rel_space(d).reduce(v)));
                }
            }
            d += 1;
        }
        None
    }

    /// Whether both windows agree in all degrees up to `upto`.
    pub fn equal_upto(&self, other: &SubmoduleWindow, upto: i64) -> bool {
        (self.lo..=upto).all(|d| self.comp_ref(d) == other.comp_ref(d))
    }

    /// Cover vectors of a minimal generating set, degree by degree: a basis
    /// of `N_d` modulo `(mN)_d`, canonical (reduced echelon) in each degree.
    pub fn minimal_generators(&self) -> Vec<(i64, Vec<Scalar>)> {
        let mn = self.m_multiple();
        let mut out = Vec::new();
        for d in self.lo..=self.hi {
            let n = self.comp_ref(d).expect("in window");
            let low = mn.comp_ref(d).expect("in window");
            if n.rank() == low.rank() {
                continue;
            }
            let reduced: Vec<Vec<Scalar>> = n.basis().iter().map(|v| low.reduce(v)).collect();
            let s = Subspace::span(self.ambient.ring().field(), n.ambient_dim(), reduced);
            out.extend(s.basis().iter().map(|v| (d, v.clone())));
        }
        out
    }

    /// Minimal generators as vectors of ring elements.
    pub fn generator_elements(&self) -> Vec<Vec<RingElem>> {
        self.minimal_generators().into_iter().map(|(d, v)| self.ambient.cover().elements_at(d, &v)).collect()
    }

    /// Number of minimal generators found in the window.
    pub fn generator_count(&self) -> usize {
        self.minimal_generators().len()
    }

    /// Finite-length certificate for `X/N`: some `d` above the generator
    /// degrees of `X` with `(X/N)_d = 0` forces all later components to vanish.
    pub fn quotient_finite_length(&self) -> Option<FiniteLength> {
        let g = self.ambient.max_generator_degree()?;
        let first = (g + 1).max(self.lo);
        let vanishing_degree = (first..=self.hi).find(|&d| self.codim(d) == 0)?;
        let top = (self.lo..vanishing_degree).rev().find(|&d| self.codim(d) > 0);
        Some(FiniteLength { top, vanishing_degree })
    }

    /// Whether `N` is zero in every degree of the window.
    pub fn is_zero(&self) -> bool {
        (self.lo..=self.hi).all(|d| self.dim(d) == 0)
    }

    /// Annihilator of the submodule inside `R`, degrees up to `hi`:
    /// `r` with `r·v ∈ relations` for every `v` in the window.
    pub fn annihilator(&self, hi: i64) -> SubmoduleWindow {
        let ring = self.ambient.ring();
        let r = crate::gmod::module::PresentedModule::ring_module(ring);
        let field = ring.field();
        let x = &self.ambient;
        SubmoduleWindow::build(&r, hi, |e, _| {
            let basis = ring.basis(e);
            let dim = basis.len();
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for d in self.lo..=self.hi {
                let n = self.comp_ref(d).expect("in window");
                let rel = x.rel_space(d + e);
                for v in n.basis() {
                    if x.rel_space(d).contains(v) {
                        continue;
                    }
                    let images: Vec<Vec<Scalar>> = basis
                        .monomials()
                        .iter()
                        .map(|m| rel.quotient_coords(&x.cover().mul_monomial(d, v, m)))
                        .collect();
                    for k in 0..rel.quotient_dim() {
                        rows.push(images.iter().map(|c| c[k].clone()).collect());
                    }
                }
            }
            if rows.is_empty() {
                return Subspace::full(field, dim);
            }
            let m = Matrix::from_rows(field, dim, rows).expect("rows have the source dimension");
            Subspace::span(field, dim, m.kernel_vectors())
        })
    }

    /// Display of the submodule's elements in degree `d`.
    pub fn format_vector(&self, d: i64, v: &[Scalar]) -> String {
        format_cover_vector(&self.ambient, d, v)
    }
}

/// `(x, y, ...)` for vectors, or the bare entry for rank one.
pub fn format_cover_vector(x: &Module, d: i64, v: &[Scalar]) -> String {
    let elems = x.cover().elements_at(d, v);
    if elems.len() == 1 {
        elems[0].to_string()
    } else {
        format!("({})", elems.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "))
    }
}

fn shift_all(x: &Module, d: i64, space: &Subspace, vars: &[Monomial]) -> Vec<Vec<Scalar>> {
    let cover = x.cover();
    let target_dim = cover.dim(d + 1);
    let mut out = Vec::new();
    for m in vars {
        let map = cover.shift_map(d, m);
        for b in space.basis() {
            out.push(cover.apply_shift(&map, b, target_dim));
        }
    }
    out
}

/// Nonzero generators with their degrees; degree 0 and inhomogeneous ones
/// are rejected.
fn homogeneous_gens(ideal: &[RingElem]) -> Result<Vec<(RingElem, i64)>, ModError> {
    let mut out = Vec::new();
    for g in ideal {
        if g.is_zero() {
            continue;
        }
        let e = g.degree().ok_or(ModError::Inhomogeneous)?;
        if e == 0 {
            return Err(ModError::DegreeZeroGenerator);
        }
        out.push((g.clone(), e as i64));
    }
    Ok(out)
}
