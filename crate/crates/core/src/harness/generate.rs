//! Seeded random instances over Artinian monomial quotient rings.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactla::Field;
use crate::gmod::module::Module;
use crate::gmod::window::SubmoduleWindow;
use crate::instance::{parse_instance, Instance};
use crate::resolve::suggest_window;
use crate::ring::{monomials_of_degree, normalize_ideal, Monomial, Ring, RingElem};

/// Homological degrees covered by the property suite.
pub const SUITE_IMAX: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AmbientKind {
    Ring,
    RingSquared,
    Cokernel,
}

/// Everything needed to rebuild an instance. `text` is an instance file
/// defining `X`, its submodule `N`, `Q = X/N`, `NN` (the module `N`) and `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceSpec {
    pub seed: u64,
    pub nvars: usize,
    pub socle_bound: usize,
    pub ambient: AmbientKind,
    pub text: String,
    pub window: i64,
    pub imax: usize,
}

/// The built objects of an [`InstanceSpec`].
#[derive(Clone, Debug)]
pub struct Built {
    pub ring: Ring,
    pub x: Module,
    /// `N` as a window, exact up to `hi`.
    pub n: SubmoduleWindow,
    pub hi: i64,
    pub n_module: Module,
    pub quotient: Module,
    pub m: Module,
}

impl InstanceSpec {
    pub fn build(&self) -> Built {
        let inst: Instance = parse_instance(&self.text)
            .and_then(|f| f.build())
            .expect("generated instance files are valid");
        let x = inst.module("X").expect("X").clone();
        // X vanishes from its top generator degree plus the socle bound on.
        let hi = x.max_generator_degree().unwrap_or(0) + self.socle_bound as i64 + 2;
        Built {
            ring: inst.ring.clone(),
            n: inst.window("N", hi).expect("N"),
            hi,
            n_module: inst.module("NN").expect("NN").clone(),
            quotient: inst.module("Q").expect("Q").clone(),
            m: inst.module("M").expect("M").clone(),
            x,
        }
    }
}

const VARS: [&str; 3] = ["x", "y", "z"];

fn random_coefficient(rng: &mut ChaCha8Rng, field: Field) -> i64 {
    let c = rng.gen_range(1..=3);
    let c = if rng.gen_bool(0.3) { -c } else { c };
    if field.is_zero(&field.from_i64(c)) {
        1
    } else {
        c
    }
}

/// A homogeneous form of degree `d` with one or two terms; zero when `R_d = 0`.
fn random_form(rng: &mut ChaCha8Rng, ring: &Ring, d: usize) -> RingElem {
    let basis = ring.degree_basis(d);
    if basis.is_empty() {
        return RingElem::zero(ring);
    }
    let terms = rng.gen_range(1..=2.min(basis.len()));
    let picked: Vec<&Monomial> = basis.choose_multiple(rng, terms).collect();
    let field = ring.field();
    let pairs = picked.into_iter().map(|m| (m.clone(), field.from_i64(random_coefficient(rng, field))));
    RingElem::from_terms(ring, pairs).expect("terms share a degree")
}

/// Like [`random_form`], but zero with probability `p_zero`.
fn maybe_form(rng: &mut ChaCha8Rng, ring: &Ring, d: usize, p_zero: f64) -> RingElem {
    if rng.gen_bool(p_zero) {
        RingElem::zero(ring)
    } else {
        random_form(rng, ring, d)
    }
}

fn vector_text(v: &[RingElem]) -> String {
    if v.len() == 1 {
        v[0].to_string()
    } else {
        format!("({})", v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "))
    }
}

fn matrix_text(rows: &[Vec<RingElem>]) -> String {
    let rows: Vec<String> =
        rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")).collect();
    format!("[ {} ]", rows.join(" ; "))
}

/// Deterministic per seed: an Artinian ring in 2 or 3 variables with
/// `R_s = 0` for `s ∈ {3,4,5}`, an ambient `X ∈ {R, R², coker 2×2}`, up to
/// three generators of `N` in degrees 1 and 2, and a cyclic or two-generated
/// cokernel `M`.
pub fn generate_instance(seed: u64) -> InstanceSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nvars = rng.gen_range(2..=3usize);
    let s = rng.gen_range(3..=5usize);
    let field = Field::DEFAULT;
    let vars = &VARS[..nvars];
    let mut ideal: Vec<Monomial> = monomials_of_degree(nvars, s);
    for _ in 0..rng.gen_range(0..=2) {
        let d = rng.gen_range(2..s);
        let cands = monomials_of_degree(nvars, d);
        ideal.push(cands.choose(&mut rng).expect("nonempty").clone());
    }
    let ideal = normalize_ideal(&ideal);
    let ring = Ring::new(vars, field, &ideal).expect("valid ring");
    let ideal_text: Vec<String> = ring.ideal().iter().map(|m| ring.format_monomial(m)).collect();
    let mut text = format!("ring VARS = {} ; char = 32003 ; ideal = {}\n", vars.join(","), ideal_text.join(", "));

    let ambient = *[AmbientKind::Ring, AmbientKind::RingSquared, AmbientKind::Cokernel].choose(&mut rng).expect("nonempty");
    let rank = match ambient {
        AmbientKind::Ring => 1,
        _ => 2,
    };
    match ambient {
        AmbientKind::Ring => text.push_str("module X = free deg 0\n"),
        AmbientKind::RingSquared => text.push_str("module X = free deg 0,0\n"),
        AmbientKind::Cokernel => {
            let rows: Vec<Vec<RingElem>> =
                (0..2).map(|_| (0..2).map(|_| maybe_form(&mut rng, &ring, 1, 0.3)).collect()).collect();
            text.push_str(&format!("module X = coker deg 0,0 {}\n", matrix_text(&rows)));
        }
    }

    let count = *[1, 2, 2, 3, 3].choose(&mut rng).expect("nonempty");
    let mut gens = Vec::new();
    while gens.len() < count {
        let d = if rng.gen_bool(0.65) { 1 } else { 2 };
        let v: Vec<RingElem> = (0..rank).map(|_| maybe_form(&mut rng, &ring, d, if rank == 1 { 0.0 } else { 0.4 })).collect();
        if v.iter().any(|e| !e.is_zero()) {
            gens.push(vector_text(&v));
        }
    }
    text.push_str(&format!("submodule N of X = {}\n", gens.join(", ")));
    text.push_str("module Q = quotient X by N\nmodule NN = image N\n");

    let mgens = rng.gen_range(1..=2usize);
    let mrels = rng.gen_range(1..=2usize);
    let mut cols: Vec<Vec<RingElem>> = Vec::new();
    while cols.len() < mrels {
        let d = rng.gen_range(1..=2usize);
        let col: Vec<RingElem> = (0..mgens).map(|_| maybe_form(&mut rng, &ring, d, 0.3)).collect();
        if col.iter().any(|e| !e.is_zero()) {
            cols.push(col);
        }
    }
    let rows: Vec<Vec<RingElem>> = (0..mgens).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let degs = vec!["0"; mgens].join(",");
    text.push_str(&format!("module M = coker deg {degs} {}\n", matrix_text(&rows)));

    let mut spec = InstanceSpec { seed, nvars, socle_bound: s, ambient, text, window: 0, imax: SUITE_IMAX };
    let built = spec.build();
    spec.window = suggest_window(&built.m, &built.quotient, SUITE_IMAX).expect("Artinian rings always certify");
    spec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        assert_eq!(generate_instance(7), generate_instance(7));
        assert_ne!(generate_instance(7).text, generate_instance(8).text);
    }

    #[test]
    fn rings_are_artinian_and_singular() {
        for seed in 0..20 {
            let spec = generate_instance(seed);
            let b = spec.build();
            assert!(b.ring.is_artinian());
            assert!(b.ring.socle_bound().unwrap() <= spec.socle_bound);
            assert_eq!(b.ring.hilbert_value(1), spec.nvars, "R is never a field");
            assert!(b.m.dim(0) > 0);
        }
    }
}
