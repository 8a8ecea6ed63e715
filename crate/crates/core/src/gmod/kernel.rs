//! Degreewise minimal generators of kernels, shared by presentations of
//! submodules and by resolutions.

use crate::exactla::{Matrix, Scalar, Subspace};
use crate::gmod::free::{FreeModule, ModuleMap};
use crate::ring::Monomial;

/// Minimal generators of the kernel of a degree-preserving map out of
/// `source`, for degrees `lo..=hi`. `matrix_at(d)` is the map on `source_d`.
///
/// In each degree the new generators are a reduced echelon basis of
/// `K_d` modulo the variable multiples of `K_{d-1}`, so the output is
/// deterministic and every generator of degree `≤ hi` is found.
pub fn kernel_generators(
    source: &FreeModule,
    lo: i64,
    hi: i64,
    mut matrix_at: impl FnMut(i64) -> Matrix,
) -> Vec<(i64, Vec<Scalar>)> {
    let ring = source.ring();
    let field = ring.field();
    let n = ring.nvars();
    let vars: Vec<Monomial> = (0..n).map(|i| Monomial::var(n, i)).collect();
    let mut out = Vec::new();
    let mut prev: Option<Subspace> = None;
    let mut d = lo;
    while d <= hi {
        let dim = source.dim(d);
        if dim == 0 {
            prev = None;
            d += 1;
            continue;
        }
        let kernel = Subspace::span(field, dim, matrix_at(d).kernel_vectors());
        let mut lower = Vec::new();
        if let Some(p) = &prev {
            for m in &vars {
                let map = source.shift_map(d - 1, m);
                for b in p.basis() {
                    lower.push(source.apply_shift(&map, b, dim));
                }
            }
        }
        let lower = Subspace::span(field, dim, lower);
        if kernel.rank() > lower.rank() {
            let reduced: Vec<Vec<Scalar>> = kernel.basis().iter().map(|v| lower.reduce(v)).collect();
            let fresh = Subspace::span(field, dim, reduced);
            out.extend(fresh.basis().iter().map(|v| (d, v.clone())));
        }
        prev = Some(kernel);
        d += 1;
    }
    out
}

/// Applies a quotient-coordinate projection to every column of `m`.
pub fn project_columns(m: &Matrix, rel: &Subspace) -> Matrix {
    let cols: Vec<Vec<Scalar>> = m.columns().iter().map(|c| rel.quotient_coords(c)).collect();
    Matrix::from_columns(m.field(), rel.quotient_dim(), &cols)
}

/// Upper bound on the generator degrees of `ker(map)` when every column has
/// at most one nonzero entry and that entry is a scalar times a monomial.
///
/// Columns sharing a row form a row of monomials `μ_j`; over the polynomial
/// ring the syzygies of `μ_j` together with the ideal generators `g` are
/// generated by the pairwise divided-lcm relations, and projecting them gives
/// kernel generators of degree `b + deg lcm(μ_j, μ_j')` and
/// `b + deg lcm(μ_j, g)`, where `b` is the row's degree. Zero columns are
/// kernel generators themselves. Returns `None` when the shape does not fit.
pub fn monomial_kernel_bound(map: &ModuleMap) -> Option<i64> {
    let ring = map.source().ring();
    let src = map.source().degrees();
    let tgt = map.target().degrees();
    let mut bound = src.iter().copied().min().unwrap_or(0) - 1;
    let mut rows: Vec<Vec<Monomial>> = vec![Vec::new(); tgt.len()];
    for (j, col) in map.columns().iter().enumerate() {
        let nz: Vec<usize> = (0..col.len()).filter(|&i| !col[i].is_zero()).collect();
        match nz.as_slice() {
            [] => bound = bound.max(src[j]),
            [k] => {
                let e = &col[*k];
                if e.terms().len() != 1 {
                    return None;
                }
                rows[*k].push(e.terms().keys().next().expect("one term").clone());
            }
            _ => return None,
        }
    }
    for (k, mons) in rows.iter().enumerate() {
        let b = tgt[k];
        for (a, m) in mons.iter().enumerate() {
            for m2 in &mons[a + 1..] {
                bound = bound.max(b + m.lcm(m2).degree() as i64);
            }
            for g in ring.ideal() {
                bound = bound.max(b + m.lcm(g).degree() as i64);
            }
        }
    }
    Some(bound)
}
