//! Finitely presented graded modules `coker(F1 → F0)`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::exactla::{Scalar, Subspace};
use crate::gmod::free::{FreeModule, ModuleMap};
use crate::gmod::ModError;
use crate::ring::{Monomial, Ring, RingElem};

/// `coker(relations)`. Elements are represented by vectors in the cover `F0`.
#[derive(Debug)]
pub struct PresentedModule {
    relations: ModuleMap,
    complete: bool,
    rel_cache: RwLock<HashMap<i64, Arc<Subspace>>>,
}

pub type Module = Arc<PresentedModule>;

/// `X_d` as a quotient of `(F0)_d`: the relation subspace and the unit
/// coordinates spanning a complement.
#[derive(Clone, Debug)]
pub struct ComponentSpace {
    pub degree: i64,
    pub relations: Arc<Subspace>,
    pub basis: Vec<usize>,
}

impl ComponentSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Degree of a column: the common value of `deg(entry) + deg(target generator)`.
fn column_degree(target: &FreeModule, col: &[RingElem]) -> Result<Option<i64>, ModError> {
    target.element_degree(col)
}

impl PresentedModule {
    /// Module presented by `map`. `complete` records whether the relations are
    /// known to generate the whole relation module.
    pub fn with_relations(relations: ModuleMap, complete: bool) -> Module {
        Arc::new(PresentedModule { relations, complete, rel_cache: RwLock::new(HashMap::new()) })
    }

    pub fn coker(relations: ModuleMap) -> Module {
        PresentedModule::with_relations(relations, true)
    }

    pub fn free(ring: &Ring, degrees: Vec<i64>) -> Module {
        let cover = FreeModule::new(ring, degrees);
        PresentedModule::coker(ModuleMap::zero(FreeModule::new(ring, Vec::new()), cover))
    }

    /// The ring as a module over itself.
    pub fn ring_module(ring: &Ring) -> Module {
        PresentedModule::free(ring, vec![0])
    }

    /// Cokernel of the matrix whose columns are given; column degrees are
    /// inferred and zero columns dropped.
    pub fn coker_of(ring: &Ring, cover_degrees: Vec<i64>, columns: Vec<Vec<RingElem>>) -> Result<Module, ModError> {
        let cover = FreeModule::new(ring, cover_degrees);
        let mut degs = Vec::new();
        let mut kept = Vec::new();
        for col in columns {
            if let Some(d) = column_degree(&cover, &col)? {
                degs.push(d);
                kept.push(col);
            }
        }
        let map = ModuleMap::new(FreeModule::new(ring, degs), cover, kept)?;
        Ok(PresentedModule::coker(map))
    }

    /// `R/J` for homogeneous generators `J`.
    pub fn cyclic(ring: &Ring, ideal: &[RingElem]) -> Result<Module, ModError> {
        PresentedModule::coker_of(ring, vec![0], ideal.iter().map(|g| vec![g.clone()]).collect())
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(ring: &Ring) -> Module {
        let vars: Vec<RingElem> = (0..ring.nvars()).map(|i| RingElem::var(ring, i)).collect();
        PresentedModule::cyclic(ring, &vars).expect("variables are homogeneous")
    }

    /// `X / <gens>` with the generators given as vectors over the cover.
    pub fn quotient(x: &Module, gens: &[Vec<RingElem>]) -> Result<Module, ModError> {
        let mut columns = x.relations.columns().to_vec();
        columns.extend(gens.iter().cloned());
        let mut m = (*PresentedModule::coker_of(x.ring(), x.cover().degrees().to_vec(), columns)?).clone_shallow();
        m.complete = x.complete;
        Ok(Arc::new(m))
    }

    /// `A ⊕ B`.
    pub fn direct_sum(a: &Module, b: &Module) -> Result<Module, ModError> {
        let ring = a.ring();
        if b.ring() != ring {
            return Err(ModError::RingMismatch);
        }
        let cover = a.cover().direct_sum(b.cover());
        let zero_a = vec![RingElem::zero(ring); a.cover().rank()];
        let zero_b = vec![RingElem::zero(ring); b.cover().rank()];
        let mut cols = Vec::new();
        for c in a.relations.columns() {
            cols.push(c.iter().cloned().chain(zero_b.iter().cloned()).collect());
        }
        for c in b.relations.columns() {
            cols.push(zero_a.iter().cloned().chain(c.iter().cloned()).collect());
        }
        let src = a.relations.source().direct_sum(b.relations.source());
        let map = ModuleMap::new(src, cover, cols)?;
        Ok(PresentedModule::with_relations(map, a.complete && b.complete))
    }

    /// `A ⊗ B`, presented by `(ψ ⊗ 1, 1 ⊗ φ)` on `G0 ⊗ F0`.
    pub fn tensor(a: &Module, b: &Module) -> Result<Module, ModError> {
        let ring = a.ring();
        if b.ring() != ring {
            return Err(ModError::RingMismatch);
        }
        let (g0, f0) = (a.cover(), b.cover());
        let degrees: Vec<i64> =
            g0.degrees().iter().flat_map(|&x| f0.degrees().iter().map(move |&y| x + y)).collect();
        let idx = |g: usize, f: usize| g * f0.rank() + f;
        let n = degrees.len();
        let mut cols = Vec::new();
        for col in a.relations.columns() {
            for f in 0..f0.rank() {
                let mut c = vec![RingElem::zero(ring); n];
                for (g, e) in col.iter().enumerate() {
                    c[idx(g, f)] = e.clone();
                }
                cols.push(c);
            }
        }
        for g in 0..g0.rank() {
            for col in b.relations.columns() {
                let mut c = vec![RingElem::zero(ring); n];
                for (f, e) in col.iter().enumerate() {
                    c[idx(g, f)] = e.clone();
                }
                cols.push(c);
            }
        }
        let m = PresentedModule::coker_of(ring, degrees, cols)?;
        let mut m = m.clone_shallow();
        m.complete = a.complete && b.complete;
        Ok(Arc::new(m))
    }

    fn clone_shallow(&self) -> PresentedModule {
        PresentedModule { relations: self.relations.clone(), complete: self.complete, rel_cache: RwLock::new(HashMap::new()) }
    }

    pub fn ring(&self) -> &Ring {
        self.relations.target().ring()
    }
    pub fn cover(&self) -> &FreeModule {
        self.relations.target()
    }
    pub fn relations(&self) -> &ModuleMap {
        &self.relations
    }
    /// Whether the relations are known to be all of them.
    pub fn is_complete(&self) -> bool {
        self.complete
    }
    /// No relation has a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.relations.is_minimal()
    }

    /// Lowest cover degree; `X_d = 0` below it.
    pub fn min_degree(&self) -> Option<i64> {
        self.cover().min_degree()
    }

    /// Highest cover degree; `X` is generated in degrees up to it.
    pub fn max_generator_degree(&self) -> Option<i64> {
        self.cover().max_degree()
    }

    /// Per-variable thresholds `T` for a module of the form `⊕ R/J_j(-c_j)`
    /// with monomial ideals `J_j` and `c_j ≥ 0`, given by a complete
    /// presentation whose columns are single terms. Give generator `j` the
    /// multidegree `c_j e_1`. Then `M_β` and `M_{β-e_k}` are identified,
    /// compatibly with multiplication by monomials, once `β_k > T_k`: every
    /// membership test `x^{β-c_j} ∈ I + J_j` reads the `k`-th exponent only
    /// through comparisons with exponents `g_k ≤ T_k - c_{j,k}`.
    pub fn monomial_thresholds(&self) -> Option<Vec<i64>> {
        if !self.complete {
            return None;
        }
        let ring = self.ring();
        let n = ring.nvars();
        let degs = self.cover().degrees();
        if degs.iter().any(|&c| c < 0) {
            return None;
        }
        let mut rows: Vec<Vec<Monomial>> = vec![ring.ideal().to_vec(); degs.len()];
        for col in self.relations.columns() {
            let nz: Vec<usize> = (0..col.len()).filter(|&i| !col[i].is_zero()).collect();
            match nz.as_slice() {
                [] => {}
                [j] if col[*j].terms().len() == 1 => rows[*j].push(col[*j].terms().keys().next().expect("one term").clone()),
                _ => return None,
            }
        }
        let mut t = vec![0i64; n];
        for (j, mons) in rows.iter().enumerate() {
            for (k, tk) in t.iter_mut().enumerate() {
                let shift = if k == 0 { degs[j] } else { 0 };
                let top = mons.iter().map(|m| m.exponents()[k] as i64).max().unwrap_or(0);
                *tk = (*tk).max(shift + top);
            }
        }
        Some(t)
    }

    pub fn rel_space(&self, d: i64) -> Arc<Subspace> {
        if let Some(s) = self.rel_cache.read().expect("relation cache poisoned").get(&d) {
            return s.clone();
        }
        let s = Arc::new(self.relations.image_at(d));
        self.rel_cache.write().expect("relation cache poisoned").insert(d, s.clone());
        s
    }

    pub fn component_space(&self, d: i64) -> ComponentSpace {
        let relations = self.rel_space(d);
        let basis = relations.complement_indices();
        ComponentSpace { degree: d, relations, basis }
    }

    pub fn dim(&self, d: i64) -> usize {
        self.rel_space(d).quotient_dim()
    }

    /// Quotient coordinates of a cover vector of degree `d`.
    pub fn quotient_coords(&self, d: i64, v: &[Scalar]) -> Vec<Scalar> {
        self.rel_space(d).quotient_coords(v)
    }

    /// Cover vector representing the quotient coordinate vector `q`.
    pub fn lift(&self, d: i64, q: &[Scalar]) -> Vec<Scalar> {
        let rel = self.rel_space(d);
        let f = self.ring().field();
        let mut v = vec![f.zero(); rel.ambient_dim()];
        for (c, i) in q.iter().zip(rel.complement_indices()) {
            v[i] = c.clone();
        }
        v
    }

    /// Whether the element is zero in the module.
    pub fn is_zero_element(&self, d: i64, v: &[Scalar]) -> bool {
        self.rel_space(d).contains(v)
    }

    /// Basis labels of `X_d` in human form, e.g. `x*y e1`.
    pub fn basis_names(&self, d: i64) -> Vec<String> {
        let labels = self.cover().basis_labels(d);
        let comp = self.component_space(d);
        comp.basis
            .iter()
            .map(|&i| {
                let (j, m): &(usize, Monomial) = &labels[i];
                let mono = self.ring().format_monomial(m);
                if self.cover().rank() == 1 {
                    mono
                } else {
                    format!("{mono}*e{}", j + 1)
                }
            })
            .collect()
    }
}
