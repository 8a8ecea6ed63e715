//! Exact dense linear algebra over a prime field or the rationals.
//!
//! Everything above this module reduces its questions to kernels, ranks and
//! membership. Prime-field elimination runs on plain `u64` residues; rational
//! elimination runs on big rationals.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("field mismatch")]
    FieldMismatch,
}

/// The coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Prime(u32),
    Rational,
}

/// A field element in canonical form: `Mod(v)` with `v < p`, or a reduced
/// fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u32),
    Rat(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

impl Field {
    pub const DEFAULT: Field = Field::Prime(32003);

    pub fn prime(p: u64) -> Result<Field, LinAlgError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(0),
            Field::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(1),
            Field::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod(v.rem_euclid(*p as i64) as u32),
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => {
                let r = v % BigInt::from(*p);
                let r = if r.is_negative() { r + BigInt::from(*p) } else { r };
                Scalar::Mod(r.to_u32().unwrap_or(0))
            }
            Field::Rational => Scalar::Rat(BigRational::from_integer(v.clone())),
        }
    }

    /// `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, LinAlgError> {
        match self {
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                let inv = self.inv(&d).ok_or(LinAlgError::ZeroDenominator)?;
                Ok(self.mul(&self.from_bigint(num), &inv))
            }
            Field::Rational => {
                if den.is_zero() {
                    return Err(LinAlgError::ZeroDenominator);
                }
                Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone())))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 1,
            Scalar::Rat(q) => q.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            (_, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            (_, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (_, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => {
                Some(Scalar::Mod(inv_mod(*x as u64, *p as u64) as u32))
            }
            (_, Scalar::Rat(x)) => Some(Scalar::Rat(x.recip())),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    /// Human form: symmetric residues for prime fields (`-1` instead of `p-1`).
    pub fn format(&self, a: &Scalar) -> String {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => {
                if *x > p / 2 {
                    format!("-{}", p - x)
                } else {
                    x.to_string()
                }
            }
            (_, Scalar::Rat(q)) => q.to_string(),
            (_, s) => format!("{s:?}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinAlgError> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinAlgError::Dimension { expected: cols, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { field, rows: r, cols, data })
    }

    pub fn from_i64(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Matrix::from_rows(field, cols, rows).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, nrows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, nrows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), nrows, "column length");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinAlgError::Dimension { expected: self.cols, got: other.rows });
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::Dimension { expected: self.cols, got: v.len() });
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect())
    }

    pub fn rref(&self) -> Rref {
        let (data, pivots) = eliminate(self.field, self.rows, self.cols, self.data.clone());
        Rref { reduced: Matrix { field: self.field, rows: self.rows, cols: self.cols, data }, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Columns form a basis of the null space; one column per free variable,
    /// in increasing free-column order.
    pub fn kernel_basis(&self) -> Matrix {
        let columns = self.kernel_vectors();
        Matrix::from_columns(self.field, self.cols, &columns)
    }

    /// Null space basis as a list of vectors.
    pub fn kernel_vectors(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let r = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &r.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in r.pivots.iter().enumerate() {
                let e = r.reduced.get(i, free);
                if !f.is_zero(e) {
                    v[p] = f.neg(e);
                }
            }
            out.push(v);
        }
        out
    }

    /// Some `c` with `A·c = v`, or `None` when `v` is outside the column span.
    /// Free variables are set to zero.
    pub fn membership(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
        if v.len() != self.rows {
            return Err(LinAlgError::Dimension { expected: self.rows, got: v.len() });
        }
        let f = self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, v[i].clone());
        }
        let r = aug.rref();
        if r.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut c = vec![f.zero(); self.cols];
        for (i, &p) in r.pivots.iter().enumerate() {
            c[p] = r.reduced.get(i, self.cols).clone();
        }
        Ok(Some(c))
    }
}

// Gauss-Jordan elimination. Prime fields take a u64 fast path.
fn eliminate(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> (Vec<Scalar>, Vec<usize>) {
    match field {
        Field::Prime(p) => {
            let mut m: Vec<u64> = data
                .iter()
                .map(|s| match s {
                    Scalar::Mod(v) => *v as u64,
                    _ => panic!("rational entry in prime-field matrix"),
                })
                .collect();
            let pivots = eliminate_mod(&mut m, rows, cols, p as u64);
            (m.into_iter().map(|v| Scalar::Mod(v as u32)).collect(), pivots)
        }
        Field::Rational => {
            let mut m: Vec<BigRational> = data
                .into_iter()
                .map(|s| match s {
                    Scalar::Rat(q) => q,
                    _ => panic!("residue entry in rational matrix"),
                })
                .collect();
            let pivots = eliminate_rat(&mut m, rows, cols);
            (m.into_iter().map(Scalar::Rat).collect(), pivots)
        }
    }
}

pub(crate) fn eliminate_mod(m: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else { continue };
        if pr != r {
            for j in 0..cols {
                m.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(m[r * cols + c], p);
        for j in c..cols {
            m[r * cols + j] = m[r * cols + j] * inv % p;
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m[i * cols + c];
            if factor == 0 {
                continue;
            }
            let neg = p - factor;
            for j in c..cols {
                let a = m[r * cols + j];
                if a != 0 {
                    m[i * cols + j] = (m[i * cols + j] + neg * a) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn eliminate_rat(m: &mut [BigRational], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else { continue };
        if pr != r {
            for j in 0..cols {
                m.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = m[r * cols + c].recip();
        for j in c..cols {
            m[r * cols + j] = &m[r * cols + j] * &inv;
        }
        for i in 0..rows {
            if i == r || m[i * cols + c].is_zero() {
                continue;
            }
            let factor = m[i * cols + c].clone();
            for j in c..cols {
                if m[r * cols + j].is_zero() {
                    continue;
                }
                let delta = &factor * &m[r * cols + j];
                m[i * cols + j] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A subspace of `field^dim`, stored as its reduced row-echelon basis.
/// Equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, dim: usize) -> Subspace {
        Subspace { field, dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, dim: usize) -> Subspace {
        let basis = (0..dim)
            .map(|i| {
                let mut v = vec![field.zero(); dim];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace { field, dim, basis, pivots: (0..dim).collect() }
    }

    pub fn span<I: IntoIterator<Item = Vec<Scalar>>>(field: Field, dim: usize, vectors: I) -> Subspace {
        let rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Subspace::zero(field, dim);
        }
        let m = Matrix::from_rows(field, dim, rows).expect("vector length differs from ambient dimension");
        let r = m.rref();
        let basis = (0..r.rank()).map(|i| r.reduced.row(i).to_vec()).collect();
        Subspace { field, dim, basis, pivots: r.pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }
    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim, "vector length");
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *o = f.sub(o, &f.mul(&c, r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.field, self.dim, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.dim);
        }
        // x = sum c_i u_i lies in `other` iff sum c_i reduce(u_i) = 0.
        let reduced: Vec<Vec<Scalar>> = self.basis.iter().map(|u| other.reduce(u)).collect();
        let m = Matrix::from_columns(self.field, self.dim, &reduced);
        let f = self.field;
        let vectors = m.kernel_vectors().into_iter().map(|c| {
            let mut x = vec![f.zero(); self.dim];
            for (ci, u) in c.iter().zip(&self.basis) {
                if f.is_zero(ci) {
                    continue;
                }
                for (xj, uj) in x.iter_mut().zip(u) {
                    *xj = f.add(xj, &f.mul(ci, uj));
                }
            }
            x
        });
        Subspace::span(f, self.dim, vectors)
    }

    /// Coordinates that index a basis of the quotient (the non-pivot columns).
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.dim).filter(|&i| !is_pivot[i]).collect()
    }

    /// Coordinates of the class of `v` in the quotient, w.r.t. the unit
    /// vectors on `complement_indices`.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.reduce(v);
        self.complement_indices().into_iter().map(|i| r[i].clone()).collect()
    }

    pub fn quotient_dim(&self) -> usize {
        self.dim - self.rank()
    }
}
