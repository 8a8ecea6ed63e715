//! Truncated minimal graded free resolutions, Betti tables, Tor and Ext.
//!
//! Generators of `F_i` are found degree by degree up to the window `D`.
//! Alongside, each `F_i` carries a proven upper bound `b_i` on its generator
//! degrees when one is available; `F_i` is *complete* when `b_i ≤ D`, and
//! only complete free modules feed exact "vanishes in every degree" claims.
//!
//! Bounds used:
//! - `b_0` is the top minimal generator degree of `M`;
//! - `b_1 ≤ max(b_0, top relation degree)` when the presentation of `M` is
//!   known to be complete;
//! - over an Artinian ring with `R_s = 0`, `b_{i+1} ≤ b_i + s - 1`;
//! - when `F_i` is complete and `∂_i` has monomial columns with one nonzero
//!   entry each, the divided-lcm syzygies bound `b_{i+1}`.

use serde::Serialize;
use thiserror::Error;

use crate::exactla::{Matrix, Scalar};
use crate::gmod::free::{FreeModule, ModuleMap};
use crate::gmod::kernel::{kernel_generators, monomial_kernel_bound, project_columns};
use crate::gmod::module::{Module, PresentedModule};
use crate::gmod::window::{FiniteLength, SubmoduleWindow};
use crate::gmod::ModError;
use crate::ring::Ring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolveError {
    #[error("window {window} is below the generator degree {needed} of the module")]
    WindowBelowGenerators { window: i64, needed: i64 },
    #[error("no certification route: {0}")]
    NoCertificate(String),
    #[error("insufficient window {window}: full certificate needs D = {needed}")]
    InsufficientWindow { window: i64, needed: i64 },
    #[error(transparent)]
    Module(#[from] ModError),
}

/// `F_t → ... → F_1 → F_0 → M`, minimal, exact in degrees up to `window`.
#[derive(Clone, Debug)]
pub struct Resolution {
    module: Module,
    window: i64,
    free: Vec<FreeModule>,
    /// `maps[i-1]` is `∂_i : F_i → F_{i-1}`.
    maps: Vec<ModuleMap>,
    augmentation: ModuleMap,
    bounds: Vec<Option<i64>>,
}

fn max_or(v: &[i64], empty: i64) -> i64 {
    v.iter().copied().max().unwrap_or(empty)
}

/// Top degree of a module certified finite length by the vanishing rule,
/// searching up to `limit`. `Some(None)` is the zero module.
pub fn finite_length(m: &Module, limit: i64) -> Option<FiniteLength> {
    if m.cover().rank() == 0 {
        return Some(FiniteLength { top: None, vanishing_degree: 0 });
    }
    SubmoduleWindow::zero(m, limit).quotient_finite_length()
}

/// A generous search limit for [`finite_length`].
fn length_search_limit(m: &Module) -> i64 {
    let g = m.max_generator_degree().unwrap_or(0);
    match m.ring().socle_bound() {
        Some(s) => g + s as i64,
        None => g + 12,
    }
}

pub fn module_finite_length(m: &Module) -> Option<FiniteLength> {
    finite_length(m, length_search_limit(m))
}

/// Minimal generators of `M` as cover vectors.
pub fn minimal_generators(m: &Module) -> Vec<(i64, Vec<Scalar>)> {
    match m.max_generator_degree() {
        None => Vec::new(),
        Some(g) => SubmoduleWindow::full(m, g).minimal_generators(),
    }
}

impl Resolution {
    /// Minimal resolution of `M` through `F_t`, generators up to degree `window`.
    pub fn compute(m: &Module, t: usize, window: i64) -> Result<Resolution, ResolveError> {
        let ring = m.ring().clone();
        let gens = minimal_generators(m);
        let g0 = max_or(&gens.iter().map(|(d, _)| *d).collect::<Vec<_>>(), i64::MIN / 4);
        if window < g0 {
            return Err(ResolveError::WindowBelowGenerators { window, needed: g0 });
        }
        let f0 = FreeModule::new(&ring, gens.iter().map(|(d, _)| *d).collect());
        let augmentation =
            ModuleMap::from_coords(f0.clone(), m.cover().clone(), gens.into_iter().map(|(_, v)| v).collect());
        let socle = ring.socle_bound().map(|s| s as i64);
        let mut bounds = vec![Some(g0)];
        let mut free = vec![f0];
        let mut maps: Vec<ModuleMap> = Vec::new();
        for i in 0..t {
            let src = &free[i];
            let lo = src.min_degree().unwrap_or(0);
            let kernel = if src.rank() == 0 {
                Vec::new()
            } else if i == 0 {
                kernel_generators(src, lo, window, |d| project_columns(&augmentation.matrix_at(d), &m.rel_space(d)))
            } else {
                let prev = &maps[i - 1];
                kernel_generators(src, lo, window, |d| prev.matrix_at(d))
            };
            let next = FreeModule::new(&ring, kernel.iter().map(|(d, _)| *d).collect());
            let map = ModuleMap::from_coords(next.clone(), src.clone(), kernel.into_iter().map(|(_, v)| v).collect());
            // Bound on the generators of F_{i+1}.
            let bi = bounds[i];
            let complete_i = bi.is_some_and(|b| b <= window);
            let mut candidates = Vec::new();
            if src.rank() == 0 && complete_i {
                candidates.push(i64::MIN / 4);
            }
            if let (Some(s), Some(b)) = (socle, bi) {
                candidates.push(b + s - 1);
            }
            if i == 0 && m.is_complete() {
                let rel = max_or(m.relations().source().degrees(), i64::MIN / 4);
                candidates.push(g0.max(rel));
            }
            if i > 0 && complete_i {
                if let Some(b) = monomial_kernel_bound(&maps[i - 1]) {
                    candidates.push(b);
                }
            }
            bounds.push(candidates.into_iter().min());
            free.push(next);
            maps.push(map);
        }
        Ok(Resolution { module: m.clone(), window, free, maps, augmentation, bounds })
    }

    pub fn module(&self) -> &Module {
        &self.module
    }
    pub fn ring(&self) -> &Ring {
        self.module.ring()
    }
    pub fn window(&self) -> i64 {
        self.window
    }
    /// Homological length computed: `F_0..F_t`.
    pub fn length(&self) -> usize {
        self.maps.len()
    }
    pub fn free_module(&self, i: usize) -> &FreeModule {
        &self.free[i]
    }
    /// `∂_i : F_i → F_{i-1}` for `1 ≤ i ≤ t`.
    pub fn differential(&self, i: usize) -> &ModuleMap {
        &self.maps[i - 1]
    }
    pub fn augmentation(&self) -> &ModuleMap {
        &self.augmentation
    }
    /// Proven bound on the generator degrees of `F_i`, if one is known.
    pub fn generator_bound(&self, i: usize) -> Option<i64> {
        self.bounds.get(i).copied().flatten()
    }
    /// Whether every generator of `F_i` is present.
    pub fn is_complete(&self, i: usize) -> bool {
        self.generator_bound(i).is_some_and(|b| b <= self.window)
    }
    pub fn betti(&self, i: usize) -> usize {
        self.free[i].rank()
    }

    /// Replaces `∂_i` (used by the harness self-test to plant a broken resolution).
    pub fn replace_differential(&mut self, i: usize, map: ModuleMap) {
        self.maps[i - 1] = map;
    }

    pub fn betti_table(&self) -> BettiTable {
        let rows = (0..=self.length())
            .map(|i| {
                let mut degs = self.free[i].degrees().to_vec();
                degs.sort_unstable();
                let mut entries: Vec<(i64, usize)> = Vec::new();
                for d in degs {
                    match entries.last_mut() {
                        Some((e, c)) if *e == d => *c += 1,
                        _ => entries.push((d, 1)),
                    }
                }
                BettiRow { i, entries, complete: self.is_complete(i), complete_through: self.window }
            })
            .collect();
        BettiTable { rows }
    }

    /// `∂_i ∘ ∂_{i+1} = 0` and the augmentation kills `∂_1`, checked on the
    /// generators.
    pub fn check_complex(&self) -> bool {
        let m = &self.module;
        if let Some(d1) = self.maps.first() {
            let composite = d1.column_coords().iter().zip(d1.source().degrees()).all(|(c, &a)| {
                let v = self.augmentation.matrix_at(a).mul_vec(c).expect("dimensions agree");
                m.is_zero_element(a, &v)
            });
            if !composite {
                return false;
            }
        }
        self.maps.windows(2).all(|w| match w[0].compose(&w[1]) {
            Ok(c) => c.column_coords().iter().all(|v| v.iter().all(|x| x == &self.ring().field().zero())),
            Err(_) => false,
        })
    }

    /// No differential entry is a unit.
    pub fn check_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.is_minimal())
    }

    /// Homology of the truncated complex at `F_i` (`1 ≤ i < t`) in degree `d`,
    /// and at `F_0` the failure of `F_0 → M` to be onto with kernel `im ∂_1`.
    pub fn homology_dim(&self, i: usize, d: i64) -> usize {
        let dim = self.free[i].dim(d);
        if dim == 0 {
            return 0;
        }
        let kernel = if i == 0 {
            let m = project_columns(&self.augmentation.matrix_at(d), &self.module.rel_space(d));
            dim - m.rank()
        } else {
            dim - self.maps[i - 1].matrix_at(d).rank()
        };
        let image = self.maps.get(i).map_or(0, |m| m.matrix_at(d).rank());
        kernel - image
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub i: usize,
    /// `(degree, count)` pairs.
    pub entries: Vec<(i64, usize)>,
    /// All generators of `F_i` are present (otherwise only those of degree
    /// up to `complete_through`).
    pub complete: bool,
    pub complete_through: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub rows: Vec<BettiRow>,
}

impl BettiTable {
    pub fn total(&self, i: usize) -> usize {
        self.rows.get(i).map_or(0, |r| r.entries.iter().map(|(_, c)| c).sum())
    }
    pub fn totals(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.entries.iter().map(|(_, c)| c).sum()).collect()
    }
}

pub fn minimal_resolution(m: &Module, t: usize, window: i64) -> Result<Resolution, ResolveError> {
    Resolution::compute(m, t, window)
}

pub fn betti_table(m: &Module, t: usize, window: i64) -> Result<BettiTable, ResolveError> {
    Ok(Resolution::compute(m, t, window)?.betti_table())
}

// ---------------------------------------------------------------- Tor and Ext

/// One homological degree of a Tor or Ext report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyRow {
    pub i: usize,
    /// `(degree, dimension)`; `None` marks a degree whose value is not certified.
    pub entries: Vec<(i64, Option<usize>)>,
    /// Every degree outside `entries` is certified zero.
    pub full: bool,
}

impl HomologyRow {
    /// `Some(true)` when certified zero in every degree, `Some(false)` when a
    /// certified nonzero entry exists, `None` otherwise.
    pub fn vanishes(&self) -> Option<bool> {
        if self.entries.iter().any(|(_, v)| v.is_some_and(|v| v > 0)) {
            Some(false)
        } else if self.full && self.entries.iter().all(|(_, v)| v.is_some()) {
            Some(true)
        } else {
            None
        }
    }

    /// Zero in every certified degree (which may not be all of them).
    pub fn zero_in_window(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.is_none_or(|v| v == 0))
    }

    /// Lowest degree with a certified nonzero value.
    pub fn witness_degree(&self) -> Option<i64> {
        self.entries.iter().find(|(_, v)| v.is_some_and(|v| v > 0)).map(|(d, _)| *d)
    }

    pub fn total(&self) -> usize {
        self.entries.iter().filter_map(|(_, v)| *v).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub window: i64,
    pub rows: Vec<HomologyRow>,
}

impl HomologyReport {
    pub fn row(&self, i: usize) -> &HomologyRow {
        &self.rows[i]
    }
    pub fn vanishes(&self, i: usize) -> Option<bool> {
        self.rows.get(i).and_then(|r| r.vanishes())
    }
}

pub type TorReport = HomologyReport;
pub type ExtReport = HomologyReport;

fn unit(field: crate::exactla::Field, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

/// `∂ ⊗ N` in degree `d`: `⊕_j N_{d-a_j} → ⊕_k N_{d-c_k}`.
fn tensor_matrix(map: &ModuleMap, n: &Module, d: i64) -> Matrix {
    let field = n.ring().field();
    let src = map.source().degrees();
    let tgt = map.target().degrees();
    let tdims: Vec<usize> = tgt.iter().map(|&c| n.dim(d - c)).collect();
    let rows: usize = tdims.iter().sum();
    let mut cols = Vec::new();
    for (j, &a) in src.iter().enumerate() {
        let sd = n.dim(d - a);
        for q in 0..sd {
            let v = n.lift(d - a, &unit(field, sd, q));
            let mut col = Vec::with_capacity(rows);
            for (k, &c) in tgt.iter().enumerate() {
                let e = map.entry(k, j);
                if tdims[k] == 0 {
                    continue;
                }
                if e.is_zero() {
                    col.extend(std::iter::repeat_n(field.zero(), tdims[k]));
                } else {
                    let w = n.cover().mul_elem(d - a, &v, e, a - c);
                    col.extend(n.quotient_coords(d - c, &w));
                }
            }
            cols.push(col);
        }
    }
    Matrix::from_columns(field, rows, &cols)
}

/// `Hom(∂, N)` in degree `d`: `⊕_k N_{d+c_k} → ⊕_j N_{d+a_j}`, `φ ↦ φ∘∂`.
fn hom_matrix(map: &ModuleMap, n: &Module, d: i64) -> Matrix {
    let field = n.ring().field();
    let src = map.source().degrees();
    let tgt = map.target().degrees();
    let sdims: Vec<usize> = src.iter().map(|&a| n.dim(d + a)).collect();
    let rows: usize = sdims.iter().sum();
    let mut cols = Vec::new();
    for (k, &c) in tgt.iter().enumerate() {
        let kd = n.dim(d + c);
        for q in 0..kd {
            let v = n.lift(d + c, &unit(field, kd, q));
            let mut col = Vec::with_capacity(rows);
            for (j, &a) in src.iter().enumerate() {
                if sdims[j] == 0 {
                    continue;
                }
                let e = map.entry(k, j);
                if e.is_zero() {
                    col.extend(std::iter::repeat_n(field.zero(), sdims[j]));
                } else {
                    let w = n.cover().mul_elem(d + c, &v, e, a - c);
                    col.extend(n.quotient_coords(d + a, &w));
                }
            }
            cols.push(col);
        }
    }
    Matrix::from_columns(field, rows, &cols)
}

fn tor_entry(res: &Resolution, n: &Module, i: usize, d: i64) -> usize {
    let dim: usize = res.free[i].degrees().iter().map(|&a| n.dim(d - a)).sum();
    if dim == 0 {
        return 0;
    }
    let out = if i == 0 { 0 } else { tensor_matrix(&res.maps[i - 1], n, d).rank() };
    let inc = tensor_matrix(&res.maps[i], n, d).rank();
    dim - out - inc
}

fn ext_entry(res: &Resolution, n: &Module, i: usize, d: i64) -> usize {
    let dim: usize = res.free[i].degrees().iter().map(|&a| n.dim(d + a)).sum();
    if dim == 0 {
        return 0;
    }
    let out = hom_matrix(&res.maps[i], n, d).rank();
    let inc = if i == 0 { 0 } else { hom_matrix(&res.maps[i - 1], n, d).rank() };
    dim - out - inc
}

/// `Tor_i(M, N)_d` for `i ≤ imax` from a resolution of `M` through `F_{imax+1}`.
pub fn tor_from(res: &Resolution, n: &Module, imax: usize) -> Result<TorReport, ResolveError> {
    check_rings(res, n)?;
    let window = res.window;
    let fl = module_finite_length(n);
    let nlo = n.min_degree();
    let rows = (0..=imax)
        .map(|i| {
            let degs = res.free[i].degrees();
            let (Some(nlo), Some(alo)) = (nlo, degs.iter().copied().min()) else {
                return HomologyRow { i, entries: Vec::new(), full: res.is_complete(i) && res.is_complete(i + 1) };
            };
            let exact_all = res.is_complete(i) && res.is_complete(i + 1);
            let boxed = if exact_all && fl.is_none() { tor_box_top(res, n, i) } else { None };
            let full = exact_all && (fl.is_some() || boxed.is_some());
            let hi = match (full, fl.and_then(|f| f.top), boxed) {
                (true, _, Some(b)) => b.max(window + nlo),
                (true, Some(e), _) => max_or(degs, alo) + e,
                (true, None, _) => alo - 1,
                _ => window + nlo,
            };
            let entries = (alo + nlo..=hi).map(|d| (d, Some(tor_entry(res, n, i, d)))).collect();
            HomologyRow { i, entries, full: full || fl.is_some_and(|f| f.top.is_none()) }
        })
        .collect();
    Ok(HomologyReport { window, rows })
}

/// `Ext^i(M, N)_d` for `i ≤ imax` from a resolution of `M` through `F_{imax+1}`.
pub fn ext_from(res: &Resolution, n: &Module, imax: usize) -> Result<ExtReport, ResolveError> {
    check_rings(res, n)?;
    let window = res.window;
    let fl = module_finite_length(n);
    let nlo = n.min_degree();
    let rows = (0..=imax)
        .map(|i| {
            let degs = res.free[i].degrees();
            let (Some(nlo), Some(alo), Some(ahi)) = (nlo, degs.iter().copied().min(), degs.iter().copied().max()) else {
                return HomologyRow { i, entries: Vec::new(), full: res.is_complete(i) && res.is_complete(i + 1) };
            };
            let exact_all = res.is_complete(i) && res.is_complete(i + 1);
            match fl {
                Some(FiniteLength { top: None, .. }) => HomologyRow { i, entries: Vec::new(), full: true },
                Some(FiniteLength { top: Some(e), .. }) => {
                    let entries = (nlo - ahi..=e - alo)
                        .map(|d| (d, (exact_all || d >= e - window).then(|| ext_entry(res, n, i, d))))
                        .collect();
                    HomologyRow { i, entries, full: exact_all }
                }
                None => match (exact_all, ext_box_top(res, n)) {
                    (true, Some(top)) => {
                        let entries = (nlo - ahi..=top.max(window - alo)).map(|d| (d, Some(ext_entry(res, n, i, d)))).collect();
                        HomologyRow { i, entries, full: true }
                    }
                    _ => {
                        let entries = (nlo - ahi..=window - alo)
                            .map(|d| (d, exact_all.then(|| ext_entry(res, n, i, d))))
                            .collect();
                        HomologyRow { i, entries, full: false }
                    }
                },
            }
        })
        .collect();
    Ok(HomologyReport { window, rows })
}

// Multidegree box for monomial modules. When `M` and `N` are both of the
// form `⊕ R/J_j(-c_j)` (see `PresentedModule::monomial_thresholds`), the
// minimal resolution of `M` is multigraded with generator multidegrees
// `a ≥ 0`, `a_k ≤ |a|`. A component `(F_j ⊗ N)_α = ⊕ N_{α-a}` only changes
// with `α_k` while `α_k - a_k ≤ T_k(N)`, so the Tor complex in degree `α` is
// isomorphic to the one in `α - e_k` once `α_k > T_k + B`, with `B` the top
// generator degree of `F_{i-1}, F_i, F_{i+1}`. Every multidegree reduces to
// the box `0 ≤ α ≤ T + B`, whose total degrees are at most `Σ (T_k + B)`.
// For Ext, `Hom(F_j, N)_α = ⊕ N_{α+a}` and the box is `α ≤ T`.

fn tor_box_top(res: &Resolution, n: &Module, i: usize) -> Option<i64> {
    res.module.monomial_thresholds()?;
    let t = n.monomial_thresholds()?;
    let b = (i.saturating_sub(1)..=i + 1)
        .filter_map(|j| res.free.get(j).and_then(|f| f.max_degree()))
        .max()
        .unwrap_or(0);
    Some(t.iter().map(|tk| tk + b).sum())
}

fn ext_box_top(res: &Resolution, n: &Module) -> Option<i64> {
    res.module.monomial_thresholds()?;
    Some(n.monomial_thresholds()?.iter().sum())
}

fn check_rings(res: &Resolution, n: &Module) -> Result<(), ResolveError> {
    if res.ring() != n.ring() {
        return Err(ModError::RingMismatch.into());
    }
    Ok(())
}

pub fn tor_dims(m: &Module, n: &Module, imax: usize, window: i64) -> Result<TorReport, ResolveError> {
    let res = Resolution::compute(m, imax + 1, window)?;
    tor_from(&res, n, imax)
}

pub fn ext_dims(m: &Module, n: &Module, imax: usize, window: i64) -> Result<ExtReport, ResolveError> {
    let res = Resolution::compute(m, imax + 1, window)?;
    ext_from(&res, n, imax)
}

/// The window after which every `F_i` with `i ≤ imax + 1` is complete.
///
/// Over an Artinian ring this is `g_0 + (imax+1)(s-1) + top(N)`. Otherwise
/// `N` must have certified finite length or both modules must be monomial
/// (sums of cyclic modules by monomial ideals), and the window is grown until the
/// proven generator bounds of the resolution of `M` fall inside it.
pub fn suggest_window(m: &Module, n: &Module, imax: usize) -> Result<i64, ResolveError> {
    let g0 = minimal_generators(m).iter().map(|(d, _)| *d).max().unwrap_or(0);
    let top = module_finite_length(n);
    if let Some(s) = m.ring().socle_bound() {
        let e = top.and_then(|f| f.top).unwrap_or(0);
        return Ok(g0 + (imax as i64 + 1) * (s as i64 - 1) + e);
    }
    let monomial = m.monomial_thresholds().is_some() && n.monomial_thresholds().is_some();
    if top.is_none() && !monomial {
        return Err(ResolveError::NoCertificate(
            "the ring is not Artinian and the second module is neither certified finite length nor monomial".into(),
        ));
    }
    let mut window = g0;
    for _ in 0..64 {
        let res = Resolution::compute(m, imax + 1, window)?;
        // A missing bound can appear once the free module before it is complete.
        let mut need = window;
        let mut missing = None;
        for i in 0..=imax + 1 {
            match res.generator_bound(i) {
                Some(b) => need = need.max(b),
                None => {
                    missing = Some(i);
                    break;
                }
            }
        }
        match missing {
            None if need <= window => return Ok(window),
            Some(i) if need <= window => {
                return Err(ResolveError::NoCertificate(format!(
                    "no generator-degree bound for F_{i} of the resolution"
                )))
            }
            _ => window = need,
        }
    }
    Err(ResolveError::NoCertificate("generator bounds did not stabilize".into()))
}

/// Tor with the window chosen by [`suggest_window`]; every row is certified
/// in all degrees.
pub fn tor_auto(m: &Module, n: &Module, imax: usize) -> Result<TorReport, ResolveError> {
    tor_dims(m, n, imax, suggest_window(m, n, imax)?)
}

pub fn ext_auto(m: &Module, n: &Module, imax: usize) -> Result<ExtReport, ResolveError> {
    ext_dims(m, n, imax, suggest_window(m, n, imax)?)
}

/// Fails with the required window when row `i` lacks a full certificate.
pub fn require_full(report: &HomologyReport, i: usize, needed: i64) -> Result<bool, ResolveError> {
    report
        .vanishes(i)
        .ok_or(ResolveError::InsufficientWindow { window: report.window, needed })
}

// ---------------------------------------------------------------- pd and entries

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PdVerdict {
    Free,
    /// `pd M = p`.
    Finite { pd: usize },
    /// `β_1 > 0`; the Betti numbers found are the witness.
    Nonfree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PdReport {
    pub verdict: PdVerdict,
    pub betti: Vec<usize>,
    /// The verdict is exact (not only a statement about the window).
    pub certified: bool,
}

pub fn pd_probe(m: &Module, t: usize, window: i64) -> Result<PdReport, ResolveError> {
    let res = Resolution::compute(m, t.max(1), window)?;
    let betti: Vec<usize> = (0..=res.length()).map(|i| res.betti(i)).collect();
    if betti[1] > 0 {
        // Over an Artinian ring a nonfree module has infinite projective dimension.
        if m.ring().is_artinian() {
            return Ok(PdReport { verdict: PdVerdict::Nonfree, betti, certified: true });
        }
        if let Some(p) = (1..=res.length()).find(|&p| p < res.length() && betti[p + 1] == 0 && res.is_complete(p + 1)) {
            return Ok(PdReport { verdict: PdVerdict::Finite { pd: p }, betti, certified: true });
        }
        return Ok(PdReport { verdict: PdVerdict::Nonfree, betti, certified: true });
    }
    Ok(PdReport { verdict: PdVerdict::Free, betti, certified: res.is_complete(1) })
}

/// `I_1(∂)`: the ideal generated by the entries of `∂`, up to degree `hi`.
pub fn entry_ideal(map: &ModuleMap, hi: i64) -> SubmoduleWindow {
    let ring = map.source().ring();
    let r = PresentedModule::ring_module(ring);
    let gens: Vec<Vec<crate::ring::RingElem>> = map.entries().filter(|e| !e.is_zero()).map(|e| vec![e.clone()]).collect();
    SubmoduleWindow::span_closure(&r, &gens, hi).expect("matrix entries are homogeneous")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmod::tests::{burch_ring, ideal_window, poly, ring};

    fn totals(m: &Module, t: usize, d: i64) -> Vec<usize> {
        betti_table(m, t, d).unwrap().totals()
    }

    #[test]
    fn residue_field_resolutions() {
        let x2 = ring(&["x"], &["x^2"]);
        let k = PresentedModule::residue_field(&x2);
        assert_eq!(totals(&k, 5, 6), vec![1; 6]);
        let xy = ring(&["x", "y"], &["x*y"]);
        let k = PresentedModule::residue_field(&xy);
        assert_eq!(totals(&k, 4, 6), vec![1, 2, 2, 2, 2]);
        let r = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let k = PresentedModule::residue_field(&r);
        assert_eq!(totals(&k, 4, 5), vec![1, 2, 4, 8, 16]);
        let res = Resolution::compute(&k, 4, 5).unwrap();
        assert!(res.check_complex() && res.check_minimal());
        assert!((0..=4).all(|i| res.is_complete(i)));
    }

    #[test]
    fn free_and_periodic() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        let f = PresentedModule::free(&r, vec![0, 0]);
        assert_eq!(totals(&f, 3, 4), vec![2, 0, 0, 0]);
        let uv = ring(&["u", "v"], &["u*v"]);
        let ru = PresentedModule::cyclic(&uv, &[poly(&uv, "u")]).unwrap();
        let res = Resolution::compute(&ru, 5, 6).unwrap();
        assert_eq!(res.betti_table().totals(), vec![1; 6]);
        assert!((0..=5).all(|i| res.is_complete(i)));
        assert!(res.check_complex());
        for i in 1..5 {
            for d in 0..=6 {
                assert_eq!(res.homology_dim(i, d), 0);
            }
        }
    }

    #[test]
    fn non_minimal_presentation_is_minimalized() {
        let r = ring(&["x"], &["x^3"]);
        // coker of [1, x ; 0, x^2] on generators of degree 0 and 0... use a unit entry.
        let m = PresentedModule::coker_of(&r, vec![0, 1], vec![vec![poly(&r, "x"), poly(&r, "1")]]).unwrap();
        let res = Resolution::compute(&m, 3, 5).unwrap();
        assert_eq!(res.betti(0), 1);
        assert!(res.check_minimal());
    }

    #[test]
    fn entry_ideals() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        let k = PresentedModule::residue_field(&r);
        let res = Resolution::compute(&k, 2, 4).unwrap();
        let i1 = entry_ideal(res.differential(1), 3);
        assert!(i1.equal_upto(&ideal_window(&r, &["x", "y"], 3), 3));
        let z = ModuleMap::zero(FreeModule::new(&r, vec![1]), FreeModule::new(&r, vec![0]));
        assert!(entry_ideal(&z, 3).is_zero());
    }

    #[test]
    fn tor_examples() {
        let uv = ring(&["u", "v"], &["u*v"]);
        let ru = PresentedModule::cyclic(&uv, &[poly(&uv, "u")]).unwrap();
        let rv = PresentedModule::cyclic(&uv, &[poly(&uv, "v")]).unwrap();
        let t = tor_dims(&ru, &rv, 2, 6).unwrap();
        assert!(t.row(1).zero_in_window());
        // Both are monomial, so the multidegree box certifies all degrees.
        assert_eq!(t.vanishes(1), Some(true));
        assert_eq!(t.vanishes(0), Some(false));
        // Oracle: Tor_1(R/I, R/J) = (I ∩ J)/IJ; here (u) ∩ (u^2) = (u^2) and
        // (u)(u^2) = (u^3), so the quotient is k in degree 2.
        let ru2 = PresentedModule::cyclic(&uv, &[poly(&uv, "u^2")]).unwrap();
        let t = tor_auto(&ru, &ru2, 1).unwrap();
        assert_eq!(t.vanishes(1), Some(false));
        assert_eq!(t.row(1).entries.iter().filter(|e| e.1 != Some(0)).collect::<Vec<_>>(), vec![&(2, Some(1))]);
        let r = PresentedModule::ring_module(&uv);
        let t = tor_dims(&ru, &r, 2, 6).unwrap();
        assert!(t.row(1).zero_in_window() && t.row(2).zero_in_window());
        assert!(t.row(0).entries.iter().all(|&(d, v)| v == Some(ru.dim(d))));
    }

    #[test]
    fn example_83_tor() {
        let r = burch_ring();
        let x = PresentedModule::ring_module(&r);
        let gens: Vec<_> = ["x*y", "y^2", "z", "w"].iter().map(|s| vec![poly(&r, s)]).collect();
        let q = PresentedModule::quotient(&x, &gens).unwrap();
        let m = PresentedModule::cyclic(&r, &[poly(&r, "x^2")]).unwrap();
        let d = suggest_window(&m, &q, 2).unwrap();
        let t = tor_dims(&m, &q, 2, d).unwrap();
        assert_eq!(t.vanishes(1), Some(true));
        assert_eq!(t.vanishes(2), Some(false));
        let res = Resolution::compute(&m, 3, d).unwrap();
        assert_eq!(res.betti_table().totals()[..3], [1, 1, 3]);
        // Tor_1(R/w, N) = Tor_2(R/w, X/N) and Tor_2(R/w, N) = Tor_3(R/w, X/N).
        // Both are nonzero: xy ∈ N is killed by w and is not in xN = (xz).
        let rw = PresentedModule::cyclic(&r, &[poly(&r, "w")]).unwrap();
        let t = tor_auto(&rw, &q, 3).unwrap();
        assert_eq!(t.vanishes(2), Some(false));
        assert_eq!(t.row(2).witness_degree(), Some(3));
        assert_eq!(t.vanishes(3), Some(false));
        let n = crate::gmod::hom::window_module(&ideal_window(&r, &["x*y", "y^2", "z", "w"], 6)).unwrap();
        let direct = tor_dims(&rw, &n, 2, 7).unwrap();
        assert_eq!(direct.row(1).witness_degree(), Some(3));
        for d in 2..=5 {
            let shifted = t.row(2).entries.iter().find(|e| e.0 == d).and_then(|e| e.1).unwrap_or(0);
            let here = direct.row(1).entries.iter().find(|e| e.0 == d).and_then(|e| e.1).unwrap();
            assert_eq!(shifted, here);
        }
    }

    #[test]
    fn ext_examples() {
        let x2 = ring(&["x"], &["x^2"]);
        let k = PresentedModule::residue_field(&x2);
        let e = ext_auto(&k, &k, 2).unwrap();
        assert_eq!(e.row(1).total(), 1);
        assert_eq!(e.vanishes(1), Some(false));
        let r = PresentedModule::ring_module(&x2);
        let e = ext_auto(&r, &k, 1).unwrap();
        assert_eq!(e.row(0).total(), 1);
        assert_eq!(e.vanishes(1), Some(true));
        let uv = ring(&["u", "v"], &["u*v"]);
        let ru = PresentedModule::cyclic(&uv, &[poly(&uv, "u")]).unwrap();
        let e = ext_dims(&ru, &ru, 1, 6).unwrap();
        assert_eq!(e.vanishes(1), Some(true));
        assert!(e.row(1).entries.iter().all(|(_, v)| v.is_some()));
        // Hom(R/u, R/u) = R/u: one dimension in every degree of the box.
        assert!(e.row(0).entries.iter().filter(|(d, _)| *d >= 0).all(|(_, v)| *v == Some(1)));
        // Ext^1(R/u, R/v) = (0 :_{R/v} v)(1) / u(R/v), a copy of k.
        let rv = PresentedModule::cyclic(&uv, &[poly(&uv, "v")]).unwrap();
        assert_eq!(ext_auto(&ru, &rv, 1).unwrap().vanishes(1), Some(false));
    }

    #[test]
    fn windows_and_probes() {
        let x2 = ring(&["x"], &["x^2"]);
        let k = PresentedModule::residue_field(&x2);
        assert_eq!(suggest_window(&k, &k, 3).unwrap(), 4);
        let x3 = ring(&["x"], &["x^3"]);
        let k3 = PresentedModule::residue_field(&x3);
        assert_eq!(suggest_window(&k3, &k3, 2).unwrap(), 6);
        assert_eq!(suggest_window(&k3, &k3, 0).unwrap(), 2);
        let uv = ring(&["u", "v"], &["u*v"]);
        let r = PresentedModule::ring_module(&uv);
        // R/(u+v) ⊕ R: infinite length, and not a monomial module.
        let sum = PresentedModule::coker_of(&uv, vec![0, 0], vec![vec![poly(&uv, "u + v"), poly(&uv, "0")]]).unwrap();
        assert!(matches!(suggest_window(&r, &sum, 1), Err(ResolveError::NoCertificate(_))));
        assert!(suggest_window(&r, &r, 1).is_ok());
        let r2 = PresentedModule::free(&uv, vec![0, 0]);
        assert_eq!(pd_probe(&r2, 3, 4).unwrap().verdict, PdVerdict::Free);
        let ru = PresentedModule::cyclic(&uv, &[poly(&uv, "u")]).unwrap();
        let p = pd_probe(&ru, 4, 5).unwrap();
        assert_eq!(p.verdict, PdVerdict::Nonfree);
        assert_eq!(p.betti, vec![1; 5]);
        let p = pd_probe(&k, 3, 4).unwrap();
        assert_eq!(p.verdict, PdVerdict::Nonfree);
        assert!(p.betti.iter().all(|&b| b > 0));
    }
}
