//! Exact sparse elimination over ℚ(i).
//!
//! Rows are cleared of denominators and reduced fraction-free over the
//! Gaussian integers, dividing out the integer content after every step.
//! Columns that never share a row fall into independent blocks, which are
//! eliminated in parallel.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::matrix::{SparseMatrix, SparseVec};
use crate::arith::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn mul(&self, o: &GInt) -> GInt {
        GInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn sub(&self, o: &GInt) -> GInt {
        GInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn div_int(&self, g: &BigInt) -> GInt {
        GInt { re: &self.re / g, im: &self.im / g }
    }

    fn to_gr(&self) -> GaussianRational {
        GaussianRational::new(BigRational::from_integer(self.re.clone()), BigRational::from_integer(self.im.clone()))
    }
}

pub(crate) type IntRow = Vec<(usize, GInt)>;

/// Scales a rational row to a primitive Gaussian-integer row.
pub(crate) fn int_row(v: &[(usize, GaussianRational)]) -> IntRow {
    let l = v.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(&c.denom_lcm()));
    let row = v
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let re = c.re().numer() * (&l / c.re().denom());
            let im = c.im().numer() * (&l / c.im().denom());
            (*k, GInt { re, im })
        })
        .collect();
    primitive(row)
}

fn primitive(mut row: IntRow) -> IntRow {
    let mut g = BigInt::zero();
    for (_, c) in &row {
        g = g.gcd(&c.re).gcd(&c.im);
        if g.is_one() {
            return row;
        }
    }
    if !g.is_zero() {
        for (_, c) in row.iter_mut() {
            *c = c.div_int(&g);
        }
    }
    row
}

/// `a·row − b·piv`, where `b` is the entry of `row` at the pivot's lead `col`
/// and `a` the pivot's lead; the entry at `col` cancels.
fn eliminate(row: &IntRow, piv: &IntRow, col: usize) -> IntRow {
    let a = &piv[0].1;
    let b = match row.binary_search_by_key(&col, |e| e.0) {
        Ok(k) => &row[k].1,
        Err(_) => return row.clone(),
    };
    let g = a.re.gcd(&a.im).gcd(&b.re).gcd(&b.im);
    let (a, b) = (a.div_int(&g), b.div_int(&g));
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let take_row = j >= piv.len() || (i < row.len() && row[i].0 < piv[j].0);
        let take_piv = i >= row.len() || (j < piv.len() && piv[j].0 < row[i].0);
        let (k, v) = if take_row {
            let e = (row[i].0, row[i].1.mul(&a));
            i += 1;
            e
        } else if take_piv {
            let e = (piv[j].0, GInt { re: BigInt::zero(), im: BigInt::zero() }.sub(&piv[j].1.mul(&b)));
            j += 1;
            e
        } else {
            let e = (row[i].0, row[i].1.mul(&a).sub(&piv[j].1.mul(&b)));
            i += 1;
            j += 1;
            e
        };
        if !v.is_zero() {
            out.push((k, v));
        }
    }
    primitive(out)
}

/// Row echelon form with distinct leading (minimal) columns.
#[derive(Debug, Clone, Default)]
pub(crate) struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn len(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces the leading entry until it is not a pivot column; zero iff
    /// `row` lies in the span.
    pub(crate) fn reduce(&self, mut row: IntRow) -> IntRow {
        while let Some(&(c, _)) = row.first() {
            match self.pivots.get(&c) {
                Some(p) => row = eliminate(&row, p, c),
                None => break,
            }
        }
        row
    }

    /// Adds a row; returns whether the rank grew.
    pub(crate) fn insert(&mut self, row: IntRow) -> bool {
        let row = self.reduce(row);
        match row.first() {
            Some(&(c, _)) => {
                self.pivots.insert(c, row);
                true
            }
            None => false,
        }
    }

    /// Reduced row echelon form, leads normalised to 1, in increasing lead order.
    pub(crate) fn into_rref(self) -> Vec<SparseVec> {
        let leads: Vec<usize> = self.pivots.keys().copied().collect();
        let mut done: BTreeMap<usize, IntRow> = BTreeMap::new();
        for (c, mut row) in self.pivots.into_iter().rev() {
            let targets: Vec<usize> = row.iter().skip(1).map(|e| e.0).filter(|k| done.contains_key(k)).collect();
            for k in targets {
                row = eliminate(&row, &done[&k], k);
            }
            done.insert(c, row);
        }
        leads
            .iter()
            .map(|c| {
                let row = &done[c];
                let lead = row[0].1.to_gr().inv().expect("nonzero lead");
                row.iter().map(|(k, v)| (*k, &v.to_gr() * &lead)).collect()
            })
            .collect()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Splits the columns `0..width` into classes linked through shared rows.
/// Returns the classes (sorted columns) and, per class, the rows whose
/// support lies in it.
fn blocks(rows: &[SparseVec], width: usize) -> Vec<(Vec<usize>, Vec<&SparseVec>)> {
    let mut parent: Vec<usize> = (0..width).collect();
    for row in rows {
        if let Some(&(first, _)) = row.first() {
            let root = find(&mut parent, first);
            for (k, _) in row.iter().skip(1) {
                let r = find(&mut parent, *k);
                if r != root {
                    parent[r] = root;
                }
            }
        }
    }
    let mut class_of = vec![usize::MAX; width];
    let mut classes: Vec<(Vec<usize>, Vec<&SparseVec>)> = Vec::new();
    for c in 0..width {
        let r = find(&mut parent, c);
        if class_of[r] == usize::MAX {
            class_of[r] = classes.len();
            classes.push((Vec::new(), Vec::new()));
        }
        class_of[c] = class_of[r];
        classes[class_of[c]].0.push(c);
    }
    for row in rows {
        if let Some(&(first, _)) = row.first() {
            classes[class_of[first]].1.push(row);
        }
    }
    classes
}

fn local_rows(cols: &[usize], rows: &[&SparseVec], reversed: bool) -> Vec<IntRow> {
    let last = cols.len() - 1;
    rows.iter()
        .map(|row| {
            let mut r = int_row(row);
            for (k, _) in r.iter_mut() {
                let local = cols.binary_search(k).expect("column in block");
                *k = if reversed { last - local } else { local };
            }
            if reversed {
                r.reverse();
            }
            r
        })
        .collect()
}

const P: u64 = 998_244_353;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn rational_mod(r: &BigRational) -> Option<u64> {
    let p = BigInt::from(P);
    let num = r.numer().mod_floor(&p);
    let den = r.denom().mod_floor(&p);
    let den: u64 = den.try_into().ok()?;
    if den == 0 {
        return None;
    }
    let num: u64 = num.try_into().ok()?;
    Some(num * pow_mod(den, P - 2) % P)
}

/// Rank of a block over `F_p` with `i ↦ √−1 mod p`. Reduction mod p can only
/// lower the rank, so full rank here is full rank over ℚ(i). `None` when a
/// denominator vanishes mod p.
fn block_rank_mod_p(cols: &[usize], rows: &[&SparseVec]) -> Option<usize> {
    let sqrt_m1 = pow_mod(3, (P - 1) / 4);
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for row in rows {
        let mut r: Vec<(usize, u64)> = Vec::with_capacity(row.len());
        for (k, c) in row.iter() {
            let v = (rational_mod(c.re())? + rational_mod(c.im())? * sqrt_m1) % P;
            if v != 0 {
                r.push((cols.binary_search(k).expect("column in block"), v));
            }
        }
        while let Some(&(c, lead)) = r.first() {
            let Some(piv) = pivots.get(&c) else { break };
            // piv is monic
            let mut out = Vec::with_capacity(r.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            while i < r.len() || j < piv.len() {
                if j >= piv.len() || (i < r.len() && r[i].0 < piv[j].0) {
                    out.push(r[i]);
                    i += 1;
                } else if i >= r.len() || piv[j].0 < r[i].0 {
                    out.push((piv[j].0, (P - lead * piv[j].1 % P) % P));
                    j += 1;
                } else {
                    let v = (r[i].1 + P - lead * piv[j].1 % P) % P;
                    if v != 0 {
                        out.push((r[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            r = out;
        }
        if let Some(&(c, lead)) = r.first() {
            let inv = pow_mod(lead, P - 2);
            for e in r.iter_mut() {
                e.1 = e.1 * inv % P;
            }
            pivots.insert(c, r);
            if pivots.len() == cols.len() {
                break;
            }
        }
    }
    Some(pivots.len())
}

fn block_rank(cols: &[usize], rows: &[&SparseVec]) -> usize {
    if block_rank_mod_p(cols, rows) == Some(cols.len()) {
        return cols.len();
    }
    let mut ech = Echelon::new();
    for r in local_rows(cols, rows, false) {
        ech.insert(r);
        if ech.len() == cols.len() {
            break;
        }
    }
    ech.len()
}

pub fn rank(m: &SparseMatrix) -> usize {
    blocks(m.row_vectors(), m.cols()).par_iter().map(|(cols, rows)| block_rank(cols, rows)).sum()
}

fn block_kernel(cols: &[usize], rows: &[&SparseVec]) -> Vec<SparseVec> {
    let width = cols.len();
    // forward order fills in far less; settle the injective case with it
    if block_rank(cols, rows) == width {
        return Vec::new();
    }
    let last = width - 1;
    let mut ech = Echelon::new();
    for r in local_rows(cols, rows, true) {
        ech.insert(r);
        if ech.len() == width {
            return Vec::new();
        }
    }
    let rref = ech.into_rref();
    let mut pivot_of = vec![None; width];
    for (p, row) in rref.iter().enumerate() {
        pivot_of[row[0].0] = Some(p);
    }
    // entries −R_p[f] collected per free column f
    let mut kernel: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for f in (0..width).filter(|&f| pivot_of[f].is_none()) {
        kernel.insert(f, vec![(f, GaussianRational::one())]);
    }
    for row in &rref {
        let p = row[0].0;
        for (f, v) in row.iter().skip(1) {
            if let Some(vec) = kernel.get_mut(f) {
                vec.push((p, -v));
            }
        }
    }
    kernel
        .into_values()
        .map(|v| {
            let mut out: SparseVec = v.into_iter().map(|(k, c)| (cols[last - k], c)).collect();
            out.sort_by_key(|e| e.0);
            out
        })
        .collect()
}

/// Canonical basis of `ker m`: reduced echelon with the smallest index of
/// each vector as its lead, normalised to 1.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let mut out: Vec<SparseVec> =
        blocks(m.row_vectors(), m.cols()).par_iter().flat_map_iter(|(cols, rows)| block_kernel(cols, rows)).collect();
    out.sort_by_key(|v| v[0].0);
    out
}

fn block_span(cols: &[usize], rows: &[&SparseVec]) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for r in local_rows(cols, rows, false) {
        ech.insert(r);
        if ech.len() == cols.len() {
            break;
        }
    }
    ech.into_rref().into_iter().map(|v| v.into_iter().map(|(k, c)| (cols[k], c)).collect()).collect()
}

/// Canonical basis (reduced echelon, lead = smallest index) of the span.
pub fn canonical_span(vectors: &[SparseVec], width: usize) -> Vec<SparseVec> {
    let mut out: Vec<SparseVec> =
        blocks(vectors, width).par_iter().flat_map_iter(|(cols, rows)| block_span(cols, rows)).collect();
    out.sort_by_key(|v| v[0].0);
    out
}

/// Whether `v` lies in the span of the canonical basis `basis`.
pub(crate) fn in_canonical_span(basis: &[SparseVec], v: &SparseVec) -> bool {
    // reduce against leads of a reduced echelon basis
    let mut rest: BTreeMap<usize, GaussianRational> = v.iter().cloned().collect();
    for b in basis {
        let lead = b[0].0;
        if let Some(c) = rest.get(&lead).cloned() {
            for (k, x) in b {
                let e = rest.entry(*k).or_insert_with(GaussianRational::zero);
                *e -= &(&c * x);
                if e.is_zero() {
                    rest.remove(k);
                }
            }
        }
    }
    rest.is_empty()
}
