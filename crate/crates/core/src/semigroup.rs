//! Numerical semigroups and their relative ideals `E + H`.
//!
//! A monomial fractional ideal of the semigroup ring `k[[H]]` is determined
//! by its exponent set, which is a relative ideal: a set `I ⊂ Z` with
//! `I + H ⊆ I` and a minimum. Products of ideals become sums of sets and
//! colons become set colons `I - J = {z : z + J ⊆ I}`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("no generators given")]
    Empty,
    #[error("generators must be positive")]
    NonPositive,
    #[error("generators have gcd {0}, expected 1")]
    Gcd(u64),
    #[error("{0} is not in the semigroup")]
    NotMember(i64),
    #[error("generator list is empty")]
    EmptyIdeal,
    #[error("the two surjection tests disagree for {0:?}")]
    RouteDisagreement(Vec<u64>),
    #[error("bad generator list `{0}`")]
    Parse(String),
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Least element of `⟨gens⟩` in every residue class mod `m` (shortest paths
/// on the residues, an edge `r → r + g` costing `g`). `None` for classes the
/// generators never reach.
fn least_per_residue(gens: &[u64], m: u64) -> Vec<Option<u64>> {
    let m = m as usize;
    let mut dist: Vec<Option<u64>> = vec![None; m];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &g in gens {
            let s = (r + (g as usize % m)) % m;
            let nd = d + g;
            if dist[s].is_none_or(|old| nd < old) {
                dist[s] = Some(nd);
                heap.push(Reverse((nd, s)));
            }
        }
    }
    dist
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    /// Apéry set with respect to the multiplicity, indexed by residue.
    apery: Vec<u64>,
    frobenius: i64,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, with the generating set minimalized.
    pub fn new(gens: &[u64]) -> Result<NumericalSemigroup, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::NonPositive);
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::Gcd(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        // a is redundant iff the earlier kept generators reach it.
        let mut kept: Vec<u64> = Vec::new();
        for &a in &sorted {
            let redundant = !kept.is_empty()
                && least_per_residue(&kept, kept[0])[(a % kept[0]) as usize].is_some_and(|w| w <= a);
            if !redundant {
                kept.push(a);
            }
        }
        let m = kept[0];
        let apery: Vec<u64> = least_per_residue(&kept, m).into_iter().map(|w| w.expect("gcd 1 reaches every residue")).collect();
        let frobenius = *apery.iter().max().expect("nonempty") as i64 - m as i64;
        Ok(NumericalSemigroup { gens: kept, apery, frobenius })
    }

    /// Parses `9,10,61,62`.
    pub fn parse(text: &str) -> Result<NumericalSemigroup, SemigroupError> {
        let gens: Result<Vec<u64>, _> = text.split(',').map(|s| s.trim().parse::<u64>()).collect();
        NumericalSemigroup::new(&gens.map_err(|_| SemigroupError::Parse(text.to_string()))?)
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }
    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }
    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && n as u64 >= self.apery[(n as u64 % self.multiplicity()) as usize]
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius).filter(|&n| !self.contains(n)).collect()
    }

    /// Membership table for `0..=F + max(gens)`.
    pub fn membership_table(&self) -> Vec<bool> {
        let top = self.frobenius + *self.gens.last().expect("nonempty") as i64;
        (0..=top).map(|n| self.contains(n)).collect()
    }

    /// Least element of `H` in each residue class mod `m`, for `m ∈ H`.
    pub fn apery(&self, m: i64) -> Result<Vec<i64>, SemigroupError> {
        if m <= 0 || !self.contains(m) {
            return Err(SemigroupError::NotMember(m));
        }
        Ok(least_per_residue(&self.gens, m as u64).into_iter().map(|w| w.expect("gcd 1") as i64).collect())
    }

    /// Pseudo-Frobenius numbers: gaps `f` with `f + a_i ∈ H` for every generator.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        self.gaps().into_iter().filter(|&f| self.gens.iter().all(|&a| self.contains(f + a as i64))).collect()
    }

    /// The same set through the maximal elements of the Apéry set under
    /// `w ≤_H w'` iff `w' - w ∈ H`.
    pub fn pseudo_frobenius_via_apery(&self) -> Vec<i64> {
        let m = self.multiplicity() as i64;
        let ap: Vec<i64> = self.apery.iter().map(|&w| w as i64).collect();
        let mut out: Vec<i64> = ap
            .iter()
            .filter(|&&w| w != 0 && ap.iter().all(|&v| v == w || !self.contains(v - w)))
            .map(|&w| w - m)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn type_number(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// `H = N` counts as symmetric: its semigroup ring is regular.
    pub fn is_symmetric(&self) -> bool {
        self.frobenius < 0 || self.pseudo_frobenius() == vec![self.frobenius]
    }

    pub fn profile(&self) -> Profile {
        Profile {
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            minimal_multiplicity: self.multiplicity() as usize == self.embedding_dimension(),
            symmetric: self.is_symmetric(),
        }
    }

    /// `H` as an ideal of itself.
    pub fn whole(&self) -> RelativeIdeal<'_> {
        RelativeIdeal::new(self, &[0]).expect("nonempty")
    }

    /// The maximal ideal `H ∖ {0}`, generated by the minimal generators.
    pub fn maximal_ideal(&self) -> RelativeIdeal<'_> {
        let gens: Vec<i64> = self.gens.iter().map(|&a| a as i64).collect();
        RelativeIdeal::new(self, &gens).expect("nonempty")
    }

    /// `K = {F - z : z ∉ H}`: the gaps reflected through `F`, plus every
    /// integer above `F`.
    pub fn canonical_ideal(&self) -> RelativeIdeal<'_> {
        let f = self.frobenius;
        let mut gens: Vec<i64> = self.gaps().iter().map(|g| f - g).collect();
        gens.extend((f + 1)..=(f + self.multiplicity() as i64));
        RelativeIdeal::new(self, &gens).expect("nonempty")
    }

    /// Whether some surjection `m^n → m†` exists, decided twice: through the
    /// pseudo-Frobenius numbers (`f + a_i = a_j` for every `f`) and through
    /// the colon `(2M - M) = M`.
    pub fn surjection_criterion(&self) -> Result<Surjection, SemigroupError> {
        let gens: Vec<i64> = self.gens.iter().map(|&a| a as i64).collect();
        let via_pf = self
            .pseudo_frobenius()
            .iter()
            .all(|f| gens.iter().any(|a| gens.contains(&(f + a))));
        let m = self.maximal_ideal();
        let via_colon = m.add(&m).colon(&m) == m;
        if via_pf != via_colon {
            return Err(SemigroupError::RouteDisagreement(self.gens.clone()));
        }
        Ok(Surjection { verdict: via_pf, via_pf, via_colon })
    }

    /// The canonical trace `K + (H - K)`.
    pub fn canonical_trace(&self) -> RelativeIdeal<'_> {
        let k = self.canonical_ideal();
        k.add(&self.whole().colon(&k))
    }

    pub fn is_nearly_gorenstein(&self) -> bool {
        self.maximal_ideal().is_subset_of(&self.canonical_trace())
    }

    /// `m† = K - M`.
    pub fn maximal_ideal_dual(&self) -> RelativeIdeal<'_> {
        self.canonical_ideal().colon(&self.maximal_ideal())
    }

    /// Whether `m†` is a translate of `M`.
    pub fn is_self_dual(&self) -> bool {
        self.maximal_ideal_dual().is_translate_of(&self.maximal_ideal())
    }

    pub fn report(&self) -> Result<SemigroupReport, SemigroupError> {
        let s = self.surjection_criterion()?;
        Ok(SemigroupReport {
            generators: self.gens.clone(),
            frobenius: self.frobenius,
            gaps: self.gaps(),
            pseudo_frobenius: self.pseudo_frobenius(),
            profile: self.profile(),
            surjection: s,
            nearly_gorenstein: self.is_nearly_gorenstein(),
            self_dual: self.is_self_dual(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub multiplicity: u64,
    pub embedding_dimension: usize,
    pub minimal_multiplicity: bool,
    pub symmetric: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Surjection {
    pub verdict: bool,
    pub via_pf: bool,
    pub via_colon: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupReport {
    pub generators: Vec<u64>,
    pub frobenius: i64,
    pub gaps: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    pub profile: Profile,
    pub surjection: Surjection,
    pub nearly_gorenstein: bool,
    pub self_dual: bool,
}

/// `E + H`, stored by its minimal generators (no generator lies in another
/// generator plus `H`).
#[derive(Clone, Debug)]
pub struct RelativeIdeal<'a> {
    owner: &'a NumericalSemigroup,
    gens: Vec<i64>,
}

impl PartialEq for RelativeIdeal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.owner == other.owner && self.gens == other.gens
    }
}

impl<'a> RelativeIdeal<'a> {
    pub fn new(owner: &'a NumericalSemigroup, gens: &[i64]) -> Result<RelativeIdeal<'a>, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyIdeal);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut kept: Vec<i64> = Vec::new();
        for e in sorted {
            if !kept.iter().any(|&k| owner.contains(e - k)) {
                kept.push(e);
            }
        }
        Ok(RelativeIdeal { owner, gens: kept })
    }

    pub fn generators(&self) -> &[i64] {
        &self.gens
    }
    pub fn min(&self) -> i64 {
        self.gens[0]
    }

    pub fn contains(&self, z: i64) -> bool {
        self.gens.iter().any(|&e| self.owner.contains(z - e))
    }

    /// Every integer from here on is a member.
    pub fn stable_from(&self) -> i64 {
        self.min() + self.owner.frobenius + 1
    }

    pub fn add(&self, other: &RelativeIdeal<'a>) -> RelativeIdeal<'a> {
        let sums: Vec<i64> = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a + b)).collect();
        RelativeIdeal::new(self.owner, &sums).expect("nonempty")
    }

    /// `self - other = {z : z + other ⊆ self}`.
    ///
    /// `z + other ⊆ self` iff `z + g ∈ self` for the generators `g` of
    /// `other`, since `self + H ⊆ self`. Taking `g = min(other)` forces
    /// `z ≥ min(self) - min(other)`. Conversely every `z ≥ z0 = min(self) -
    /// min(other) + F + 1` qualifies, because then `z + g ≥ min(self) + F + 1`
    /// and `self` contains every integer past that point. So the scan below
    /// is exact, and including `z0 .. z0 + a_1 - 1` generates the whole tail.
    pub fn colon(&self, other: &RelativeIdeal<'a>) -> RelativeIdeal<'a> {
        let lo = self.min() - other.min();
        let z0 = lo + self.owner.frobenius + 1;
        let top = z0 + self.owner.multiplicity() as i64 - 1;
        let members: Vec<i64> =
            (lo..=top).filter(|&z| other.gens.iter().all(|&g| self.contains(z + g))).collect();
        RelativeIdeal::new(self.owner, &members).expect("the tail always qualifies")
    }

    pub fn is_subset_of(&self, other: &RelativeIdeal<'a>) -> bool {
        self.gens.iter().all(|&e| other.contains(e))
    }

    pub fn translate(&self, c: i64) -> RelativeIdeal<'a> {
        RelativeIdeal { owner: self.owner, gens: self.gens.iter().map(|e| e + c).collect() }
    }

    /// Whether `self = c + other` for some integer `c`.
    pub fn is_translate_of(&self, other: &RelativeIdeal<'a>) -> bool {
        self.translate(other.min() - self.min()) == *other
    }
}

/// All numerical semigroups with at most `max_gen` minimal generators, each
/// at most `max_val`, in lexicographic order of the generator lists. `⟨1⟩`
/// is included.
pub fn enumerate(max_gen: usize, max_val: u64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    let mut stack: Vec<u64> = Vec::new();
    fn rec(start: u64, max_gen: usize, max_val: u64, stack: &mut Vec<u64>, out: &mut Vec<NumericalSemigroup>) {
        for a in start..=max_val {
            stack.push(a);
            let minimal = stack.len() == 1
                || !least_per_residue(&stack[..stack.len() - 1], stack[0])[(a % stack[0]) as usize].is_some_and(|w| w <= a);
            if minimal {
                let g = stack.iter().fold(0, |acc, &x| gcd(acc, x));
                if g == 1 {
                    out.push(NumericalSemigroup::new(stack).expect("gcd 1"));
                }
                if stack.len() < max_gen {
                    rec(a + 1, max_gen, max_val, stack, out);
                }
            }
            stack.pop();
        }
    }
    rec(1, max_gen, max_val, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    /// Membership by brute force: sums of generators up to `n`.
    fn brute_members(g: &[u64], n: i64) -> Vec<bool> {
        let mut ok = vec![false; (n + 1) as usize];
        ok[0] = true;
        for i in 1..=n as usize {
            ok[i] = g.iter().any(|&a| a as usize <= i && ok[i - a as usize]);
        }
        ok
    }

    #[test]
    fn construction() {
        let s = h(&[2, 3]);
        assert_eq!((s.frobenius(), s.gaps()), (1, vec![1]));
        assert_eq!(h(&[9, 10, 61, 62]).generators(), &[9, 10, 61, 62]);
        let one = h(&[1]);
        assert_eq!((one.frobenius(), one.gaps()), (-1, vec![]));
        assert_eq!(h(&[6, 4, 2, 5, 10]).generators(), &[2, 5]);
        assert_eq!(NumericalSemigroup::new(&[4, 6]), Err(SemigroupError::Gcd(2)));
        let s = h(&[5, 7, 9]);
        let table = s.membership_table();
        assert_eq!(table, brute_members(&[5, 7, 9], table.len() as i64 - 1));
    }

    #[test]
    fn apery_sets() {
        assert_eq!(h(&[3, 5]).apery(3).unwrap(), vec![0, 10, 5]);
        assert_eq!(h(&[2, 3]).apery(2).unwrap(), vec![0, 3]);
        assert_eq!(h(&[1]).apery(1).unwrap(), vec![0]);
        assert_eq!(h(&[3, 5]).apery(4), Err(SemigroupError::NotMember(4)));
    }

    #[test]
    fn pseudo_frobenius_numbers() {
        let e = h(&[9, 10, 61, 62]);
        assert_eq!(e.pseudo_frobenius(), vec![51, 52, 53]);
        assert_eq!(h(&[2, 3]).pseudo_frobenius(), vec![1]);
        assert_eq!(h(&[4, 5, 6]).pseudo_frobenius(), vec![7]);
        for s in enumerate(3, 12) {
            assert_eq!(s.pseudo_frobenius(), s.pseudo_frobenius_via_apery(), "{:?}", s.generators());
        }
    }

    #[test]
    fn profiles() {
        let p = h(&[9, 10, 61, 62]).profile();
        assert_eq!((p.multiplicity, p.embedding_dimension, p.minimal_multiplicity), (9, 4, false));
        assert!(h(&[2, 3]).profile().symmetric);
        let p = h(&[3, 4, 5]).profile();
        assert!(p.minimal_multiplicity && !p.symmetric);
        assert!(h(&[1]).profile().symmetric);
    }

    #[test]
    fn ideal_arithmetic() {
        for g in [&[2u64, 3][..], &[3, 4, 5], &[9, 10, 61, 62], &[5, 7, 9]] {
            let s = h(g);
            let k = s.canonical_ideal();
            assert_eq!(k.colon(&k), s.whole());
            let i = s.maximal_ideal();
            assert_eq!(i.add(&s.whole()), i);
        }
        let s = h(&[2, 3]);
        let m = s.maximal_ideal();
        assert_eq!(m.add(&m).colon(&m), m);
    }

    #[test]
    fn canonical_ideals() {
        let s = h(&[2, 3]);
        assert_eq!(s.canonical_ideal(), s.whole());
        assert_eq!(h(&[3, 4, 5]).canonical_ideal().generators(), &[0, 1]);
        let one = h(&[1]);
        assert_eq!(one.canonical_ideal(), one.whole());
    }

    #[test]
    fn surjection_examples() {
        assert!(h(&[9, 10, 61, 62]).surjection_criterion().unwrap().verdict);
        assert!(h(&[2, 3]).surjection_criterion().unwrap().verdict);
        assert!(!h(&[4, 5, 6]).surjection_criterion().unwrap().verdict);
    }

    #[test]
    fn nearly_gorenstein_and_self_dual() {
        let e = h(&[9, 10, 61, 62]);
        assert!(!e.is_nearly_gorenstein());
        assert!(!e.is_self_dual());
        assert!(h(&[2, 3]).is_nearly_gorenstein());
        assert!(h(&[3, 4, 5]).is_nearly_gorenstein());
        let s = h(&[2, 3]);
        assert_eq!(s.maximal_ideal_dual().generators(), &[0, 1]);
        assert!(s.is_self_dual());
        assert!(h(&[1]).is_self_dual());
    }

    #[test]
    fn colon_matches_brute_force() {
        // Oracle: test membership of each z directly against a long prefix of J.
        let s = h(&[4, 6, 9]);
        let i = RelativeIdeal::new(&s, &[2, 5]).unwrap();
        let j = RelativeIdeal::new(&s, &[0, 3]).unwrap();
        let c = i.colon(&j);
        for z in -40..60 {
            let brute = (-10..80).filter(|&y| j.contains(y)).all(|y| i.contains(z + y));
            assert_eq!(c.contains(z), brute, "z = {z}");
        }
    }

    #[test]
    fn enumeration_counts() {
        // Numerical semigroups with all minimal generators at most 5.
        let all = enumerate(5, 5);
        assert!(all.iter().all(|s| s.generators().iter().all(|&a| a <= 5)));
        assert_eq!(all.first().unwrap().generators(), &[1]);
        assert!(all.iter().any(|s| s.generators() == [3, 4, 5]));
    }
}
