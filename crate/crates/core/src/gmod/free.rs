//! Graded free modules `⊕ R(-a_j)` and homogeneous maps between them.
//!
//! The degree-`d` component of a free module is coordinatized block by block:
//! generator `j` contributes the monomial basis of `R_{d - a_j}`.

use crate::exactla::{Matrix, Scalar, Subspace};
use crate::gmod::ModError;
use crate::ring::{Monomial, Ring, RingElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: Ring,
    degrees: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: &Ring, degrees: Vec<i64>) -> FreeModule {
        FreeModule { ring: ring.clone(), degrees }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
    pub fn min_degree(&self) -> Option<i64> {
        self.degrees.iter().copied().min()
    }
    pub fn max_degree(&self) -> Option<i64> {
        self.degrees.iter().copied().max()
    }

    /// Block start of every generator in degree `d`, plus the total at the end.
    pub fn offsets(&self, d: i64) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.rank() + 1);
        let mut acc = 0;
        out.push(0);
        for &a in &self.degrees {
            acc += self.ring.hilbert_value(d - a);
            out.push(acc);
        }
        out
    }

    pub fn dim(&self, d: i64) -> usize {
        self.degrees.iter().map(|&a| self.ring.hilbert_value(d - a)).sum()
    }

    /// `(generator, monomial)` of every coordinate in degree `d`.
    pub fn basis_labels(&self, d: i64) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for (j, &a) in self.degrees.iter().enumerate() {
            for m in self.ring.basis(d - a).monomials() {
                out.push((j, m.clone()));
            }
        }
        out
    }

    /// Where multiplication by `m` sends each coordinate of degree `d`
    /// (`None` when the product vanishes).
    pub fn shift_map(&self, d: i64, m: &Monomial) -> Vec<Option<usize>> {
        let e = m.degree() as i64;
        let target = self.offsets(d + e);
        let mut out = Vec::with_capacity(self.dim(d));
        for (j, &a) in self.degrees.iter().enumerate() {
            let src = self.ring.basis(d - a);
            let dst = self.ring.basis(d + e - a);
            for mono in src.monomials() {
                out.push(dst.index_of(&mono.mul(m)).map(|i| target[j] + i));
            }
        }
        out
    }

    pub fn apply_shift(&self, map: &[Option<usize>], v: &[Scalar], target_dim: usize) -> Vec<Scalar> {
        let f = self.ring.field();
        let mut out = vec![f.zero(); target_dim];
        for (c, t) in v.iter().zip(map) {
            if let Some(t) = t {
                if !f.is_zero(c) {
                    out[*t] = f.add(&out[*t], c);
                }
            }
        }
        out
    }

    pub fn mul_monomial(&self, d: i64, v: &[Scalar], m: &Monomial) -> Vec<Scalar> {
        let map = self.shift_map(d, m);
        self.apply_shift(&map, v, self.dim(d + m.degree() as i64))
    }

    /// `r·v` for a homogeneous `r` of degree `e` (`r` may be zero).
    pub fn mul_elem(&self, d: i64, v: &[Scalar], r: &RingElem, e: i64) -> Vec<Scalar> {
        let f = self.ring.field();
        let dim = self.dim(d + e);
        let mut out = vec![f.zero(); dim];
        for (m, c) in r.terms() {
            let part = self.mul_monomial(d, v, m);
            for (o, p) in out.iter_mut().zip(part) {
                if !f.is_zero(&p) {
                    *o = f.add(o, &f.mul(c, &p));
                }
            }
        }
        out
    }

    /// Degree of a homogeneous vector (`None` for the zero vector).
    pub fn element_degree(&self, elems: &[RingElem]) -> Result<Option<i64>, ModError> {
        if elems.len() != self.rank() {
            return Err(ModError::Arity { expected: self.rank(), got: elems.len() });
        }
        let mut deg = None;
        for (e, &a) in elems.iter().zip(&self.degrees) {
            if e.is_zero() {
                continue;
            }
            if e.ring() != &self.ring {
                return Err(ModError::RingMismatch);
            }
            let d = e.degree().ok_or(ModError::Inhomogeneous)? as i64 + a;
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return Err(ModError::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Coordinates of a vector known to be homogeneous of degree `d`.
    pub fn coords_at(&self, elems: &[RingElem], d: i64) -> Result<Vec<Scalar>, ModError> {
        if let Some(e) = self.element_degree(elems)? {
            if e != d {
                return Err(ModError::Inhomogeneous);
            }
        }
        let f = self.ring.field();
        let offsets = self.offsets(d);
        let mut out = vec![f.zero(); offsets[self.rank()]];
        for (j, (e, &a)) in elems.iter().zip(&self.degrees).enumerate() {
            let basis = self.ring.basis(d - a);
            for (m, c) in e.terms() {
                let i = basis.index_of(m).expect("reduced element has basis monomials");
                out[offsets[j] + i] = c.clone();
            }
        }
        Ok(out)
    }

    /// Vector of ring elements for coordinates in degree `d`.
    pub fn elements_at(&self, d: i64, v: &[Scalar]) -> Vec<RingElem> {
        let offsets = self.offsets(d);
        (0..self.rank())
            .map(|j| {
                let basis = self.ring.basis(d - self.degrees[j]);
                let terms = basis
                    .monomials()
                    .iter()
                    .enumerate()
                    .map(|(i, m)| (m.clone(), v[offsets[j] + i].clone()));
                RingElem::from_terms(&self.ring, terms).expect("basis monomials have the ring's arity")
            })
            .collect()
    }

    /// Unit vector of generator `j` (degree `a_j`).
    pub fn generator(&self, j: usize) -> Vec<Scalar> {
        let f = self.ring.field();
        let d = self.degrees[j];
        let offsets = self.offsets(d);
        let mut v = vec![f.zero(); offsets[self.rank()]];
        v[offsets[j]] = f.one();
        v
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut degrees = self.degrees.clone();
        degrees.extend(&other.degrees);
        FreeModule::new(&self.ring, degrees)
    }

    /// Coordinates of `v ∈ self_d` inside `self ⊕ other` (or `other ⊕ self`
    /// when `first` is false).
    pub fn embed_into_sum(&self, other: &FreeModule, d: i64, v: &[Scalar], first: bool) -> Vec<Scalar> {
        let f = self.ring.field();
        let pad = vec![f.zero(); other.dim(d)];
        if first {
            v.iter().cloned().chain(pad).collect()
        } else {
            pad.into_iter().chain(v.iter().cloned()).collect()
        }
    }
}

/// A homogeneous map of free modules, stored column by column: column `j`
/// is the image of source generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: FreeModule,
    target: FreeModule,
    columns: Vec<Vec<RingElem>>,
    col_coords: Vec<Vec<Scalar>>,
}

impl ModuleMap {
    pub fn new(source: FreeModule, target: FreeModule, columns: Vec<Vec<RingElem>>) -> Result<ModuleMap, ModError> {
        if columns.len() != source.rank() {
            return Err(ModError::Arity { expected: source.rank(), got: columns.len() });
        }
        let mut col_coords = Vec::with_capacity(columns.len());
        for (col, &a) in columns.iter().zip(source.degrees()) {
            col_coords.push(target.coords_at(col, a)?);
        }
        Ok(ModuleMap { source, target, columns, col_coords })
    }

    /// From images given as coordinate vectors at the source degrees.
    pub fn from_coords(source: FreeModule, target: FreeModule, col_coords: Vec<Vec<Scalar>>) -> ModuleMap {
        let columns = col_coords.iter().zip(source.degrees()).map(|(c, &a)| target.elements_at(a, c)).collect();
        ModuleMap { source, target, columns, col_coords }
    }

    pub fn zero(source: FreeModule, target: FreeModule) -> ModuleMap {
        let cols = source.degrees().iter().map(|&a| vec![target.ring().field().zero(); target.dim(a)]).collect();
        ModuleMap::from_coords(source, target, cols)
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }
    pub fn target(&self) -> &FreeModule {
        &self.target
    }
    pub fn columns(&self) -> &[Vec<RingElem>] {
        &self.columns
    }
    pub fn column_coords(&self) -> &[Vec<Scalar>] {
        &self.col_coords
    }

    /// Entry in row `i` (target generator), column `j` (source generator).
    pub fn entry(&self, i: usize, j: usize) -> &RingElem {
        &self.columns[j][i]
    }

    pub fn entries(&self) -> impl Iterator<Item = &RingElem> {
        self.columns.iter().flatten()
    }

    /// No unit entries: every nonzero entry has positive degree.
    pub fn is_minimal(&self) -> bool {
        self.entries().all(|e| e.is_zero() || e.degree().is_some_and(|d| d > 0))
    }

    /// Matrix of the map `source_d → target_d`.
    pub fn matrix_at(&self, d: i64) -> Matrix {
        let ring = self.source.ring();
        let f = ring.field();
        let rows = self.target.dim(d);
        let src_offsets = self.source.offsets(d);
        let tgt_offsets = self.target.offsets(d);
        let mut m = Matrix::zeros(f, rows, src_offsets[self.source.rank()]);
        for (j, &a) in self.source.degrees().iter().enumerate() {
            let shifts = ring.basis(d - a);
            if shifts.is_empty() {
                continue;
            }
            // Nonzero coordinates of column j, labelled by (target generator, monomial).
            let labels = self.target.basis_labels(a);
            let nz: Vec<(usize, &Monomial, &Scalar)> = self.col_coords[j]
                .iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .map(|(i, c)| (labels[i].0, &labels[i].1, c))
                .collect();
            for (s, mu) in shifts.monomials().iter().enumerate() {
                let col = src_offsets[j] + s;
                for &(k, nu, c) in &nz {
                    let prod = mu.mul(nu);
                    if let Some(i) = ring.basis(d - self.target.degrees()[k]).index_of(&prod) {
                        let row = tgt_offsets[k] + i;
                        let v = f.add(m.get(row, col), c);
                        m.set(row, col, v);
                    }
                }
            }
        }
        m
    }

    pub fn image_at(&self, d: i64) -> Subspace {
        let m = self.matrix_at(d);
        Subspace::span(m.field(), m.rows(), m.columns())
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap, ModError> {
        if other.target != self.source {
            return Err(ModError::RingMismatch);
        }
        let cols = other
            .col_coords
            .iter()
            .zip(other.source.degrees())
            .map(|(c, &a)| self.matrix_at(a).mul_vec(c).expect("dimensions agree"))
            .collect();
        Ok(ModuleMap::from_coords(other.source.clone(), self.target.clone(), cols))
    }
}
