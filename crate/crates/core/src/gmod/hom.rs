//! Homomorphism spaces, trace submodules and presentations of submodules.

use crate::exactla::{Matrix, Scalar};
use crate::gmod::certify::{Certificate, Verdict, Witness};
use crate::gmod::free::{FreeModule, ModuleMap};
use crate::gmod::kernel::{kernel_generators, monomial_kernel_bound, project_columns};
use crate::gmod::module::{Module, PresentedModule};
use crate::gmod::window::{format_cover_vector, SubmoduleWindow};
use crate::gmod::ModError;
use crate::ring::{Ring, RingElem};

/// `Hom(M, X)_d`. Each basis element is stored as the list of images of the
/// generators of `M`, as cover vectors of `X` in degrees `a_j + d`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub degree: i64,
    pub basis: Vec<Vec<Vec<Scalar>>>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Degree-`d` homomorphisms `M → X`: assignments of the generators of `M`
/// that send every relation to zero.
pub fn hom_space(m: &Module, x: &Module, d: i64) -> Result<HomSpace, ModError> {
    if m.ring() != x.ring() {
        return Err(ModError::RingMismatch);
    }
    let field = x.ring().field();
    let gens = m.cover().degrees();
    // Unknowns: quotient coordinates of X_{a_j + d}, block by block.
    let comps: Vec<_> = gens.iter().map(|&a| x.component_space(a + d)).collect();
    let mut offsets = vec![0];
    for c in &comps {
        offsets.push(offsets.last().copied().unwrap_or(0) + c.dim());
    }
    let n = *offsets.last().unwrap_or(&0);
    if n == 0 {
        return Ok(HomSpace { degree: d, basis: Vec::new() });
    }
    let lift = |j: usize, k: usize| -> Vec<Scalar> {
        let mut q = vec![field.zero(); comps[j].dim()];
        q[k] = field.one();
        x.lift(gens[j] + d, &q)
    };
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (col, &b) in m.relations().columns().iter().zip(m.relations().source().degrees()) {
        let target = b + d;
        let qdim = x.dim(target);
        if qdim == 0 {
            continue;
        }
        let mut images: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        for (j, entry) in col.iter().enumerate() {
            for k in 0..comps[j].dim() {
                if entry.is_zero() {
                    images.push(vec![field.zero(); qdim]);
                    continue;
                }
                let v = x.cover().mul_elem(gens[j] + d, &lift(j, k), entry, b - gens[j]);
                images.push(x.quotient_coords(target, &v));
            }
        }
        for r in 0..qdim {
            rows.push(images.iter().map(|c| c[r].clone()).collect());
        }
    }
    let kernel = if rows.is_empty() {
        (0..n)
            .map(|i| {
                let mut v = vec![field.zero(); n];
                v[i] = field.one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(field, n, rows).expect("rows have the unknown count").kernel_vectors()
    };
    let basis = kernel
        .into_iter()
        .map(|q| {
            (0..gens.len())
                .map(|j| x.lift(gens[j] + d, &q[offsets[j]..offsets[j + 1]]))
                .collect()
        })
        .collect();
    Ok(HomSpace { degree: d, basis })
}

/// `τ_M(X)`, the sum of the images of all homomorphisms `M → X`, up to `hi`.
pub fn trace_window(m: &Module, x: &Module, hi: i64) -> Result<SubmoduleWindow, ModError> {
    let (Some(lo_m), Some(hi_m)) = (m.min_degree(), m.max_generator_degree()) else {
        return Ok(SubmoduleWindow::zero(x, hi));
    };
    let Some(lo_x) = x.min_degree() else {
        return Ok(SubmoduleWindow::zero(x, hi));
    };
    let mut gens = Vec::new();
    for d in (lo_x - hi_m)..=(hi - lo_m) {
        let h = hom_space(m, x, d)?;
        for phi in &h.basis {
            for (j, v) in phi.iter().enumerate() {
                let e = m.cover().degrees()[j] + d;
                if e <= hi && !x.is_zero_element(e, v) {
                    gens.push((e, v.clone()));
                }
            }
        }
    }
    Ok(SubmoduleWindow::span_closure_coords(x, &gens, hi))
}

/// The submodule generated by `gens` (cover vectors of `X`) as a module in
/// its own right. The relations are the kernel generators of `⊕ R(-c_i) → X`
/// up to a degree that is provably enough over Artinian rings and for
/// monomial generators of a monomial module; otherwise up to `fallback` and marked incomplete.
pub fn presentation_of(x: &Module, gens: &[(i64, Vec<Scalar>)], fallback: i64) -> Result<Module, ModError> {
    let ring = x.ring();
    let g = FreeModule::new(ring, gens.iter().map(|(c, _)| *c).collect());
    let to_x = ModuleMap::from_coords(g.clone(), x.cover().clone(), gens.iter().map(|(_, v)| v.clone()).collect());
    let lo = g.min_degree().unwrap_or(0);
    let maxc = g.max_degree().unwrap_or(0);
    let (bound, complete) = match ring.socle_bound() {
        Some(s) => (maxc + s as i64 - 1, x.is_complete()),
        None => match x.monomial_thresholds().and_then(|_| monomial_kernel_bound(&with_relations(&to_x, x))) {
            Some(b) => (b, true),
            None => (fallback, false),
        },
    };
    let kernel = kernel_generators(&g, lo, bound, |d| project_columns(&to_x.matrix_at(d), &x.rel_space(d)));
    let src = FreeModule::new(ring, kernel.iter().map(|(d, _)| *d).collect());
    let rel = ModuleMap::from_coords(src, g, kernel.into_iter().map(|(_, v)| v).collect());
    Ok(PresentedModule::with_relations(rel, complete))
}

/// `[gens | relations of X]` into the cover of `X`. Its kernel projects onto
/// the kernel of `gens → X`, so kernel degree bounds carry over.
fn with_relations(to_x: &ModuleMap, x: &Module) -> ModuleMap {
    let rel = x.relations();
    let src = to_x.source().direct_sum(rel.source());
    let mut cols = to_x.column_coords().to_vec();
    cols.extend(rel.column_coords().iter().cloned());
    ModuleMap::from_coords(src, x.cover().clone(), cols)
}

/// The window's minimal generators, presented as a module.
pub fn window_module(n: &SubmoduleWindow) -> Result<Module, ModError> {
    presentation_of(n.ambient(), &n.minimal_generators(), n.hi())
}

/// The maximal ideal `m = (x_1, ..., x_n)` as a module.
pub fn maximal_ideal_module(ring: &Ring) -> Module {
    let r = PresentedModule::ring_module(ring);
    let gens: Vec<(i64, Vec<Scalar>)> = (0..ring.nvars())
        .filter_map(|i| {
            let v = RingElem::var(ring, i);
            (!v.is_zero()).then(|| (1, r.cover().coords_at(&[v], 1).expect("variables have degree one")))
        })
        .collect();
    presentation_of(&r, &gens, 2).expect("variables give a valid presentation")
}

/// Whether `N` is isomorphic to a Burch submodule of some module, tested as
/// `τ_m(N) ⊄ mN`. A difference is exact; containment is exact once the
/// window covers the generator degrees of `N` and both presentations are
/// complete.
pub fn burch_embeddable(n: &Module, d: i64) -> Result<Certificate, ModError> {
    let m = maximal_ideal_module(n.ring());
    let tau = trace_window(&m, n, d)?;
    let mn = SubmoduleWindow::full(n, d).m_multiple();
    let excess = tau.first_excess(&mn, d);
    let certified = m.is_complete() && n.is_complete() && n.max_generator_degree().is_none_or(|g| d >= g);
    let verdict = match (&excess, certified) {
        (Some(_), _) => Verdict::Holds,
        (None, true) => Verdict::Fails,
        (None, false) => Verdict::FailsInWindow,
    };
    let witness = excess.map(|(e, v)| Witness { degree: e, element: format_cover_vector(n, e, &v), coords: v });
    Ok(Certificate { verdict, witness, window: d, needed_window: n.max_generator_degree() })
}
