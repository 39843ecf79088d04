//! Independent dense oracle: brute-force monomial enumeration, operators
//! evaluated through primitive words, and plain Gaussian elimination over
//! ℚ(i) on dense matrices.
#![allow(dead_code)]

use std::collections::BTreeMap;

use sympspin_core::operators::dirac::{dirac_operator, raising_operator, twistor_operator};
use sympspin_core::operators::LinearOperator;
use sympspin_core::{GaussianRational, SpinorMonomial, SpinorPoly};

/// Every monomial with x-degree `h`, q-degree `≤ q` and the given parity
/// (`None` for both), found by counting through all exponent tuples.
pub fn brute_monomials(n: usize, h: u32, q: u32, parity: Option<u32>) -> Vec<SpinorMonomial> {
    let vars = 3 * n;
    let cap = h.max(q) + 1;
    let mut out = Vec::new();
    let mut e = vec![0u32; vars];
    loop {
        let xd: u32 = e[..2 * n].iter().sum();
        let qd: u32 = e[2 * n..].iter().sum();
        if xd == h && qd <= q && parity.is_none_or(|p| qd % 2 == p) {
            out.push(SpinorMonomial::new(e[..2 * n].to_vec(), e[2 * n..].to_vec()));
        }
        let mut k = 0;
        loop {
            if k == vars {
                return out;
            }
            e[k] += 1;
            if e[k] < cap {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// Rank over ℚ(i) by dense elimination.
pub fn dense_rank(mut rows: Vec<Vec<GaussianRational>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        let pivot: Vec<GaussianRational> = rows[rank].iter().map(|v| v * &inv).collect();
        let support: Vec<usize> = (c..cols).filter(|&k| !pivot[k].is_zero()).collect();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = rows[r][c].clone();
            for &k in &support {
                let d = &f * &pivot[k];
                rows[r][k] -= &d;
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Dense matrix of the stacked operators on `domain`; rows are whatever
/// monomials the images produce.
pub fn dense_matrix(ops: &[LinearOperator], domain: &[SpinorMonomial]) -> Vec<Vec<GaussianRational>> {
    let mut rows: BTreeMap<(usize, SpinorMonomial), Vec<GaussianRational>> = BTreeMap::new();
    for (c, m) in domain.iter().enumerate() {
        for (k, op) in ops.iter().enumerate() {
            let img = op.apply(&SpinorPoly::monomial(m.clone())).unwrap();
            for (mm, v) in img.terms() {
                rows.entry((k, mm.clone())).or_insert_with(|| vec![GaussianRational::zero(); domain.len()])[c] =
                    v.clone();
            }
        }
    }
    rows.into_values().collect()
}

pub fn kernel_dim(ops: &[LinearOperator], domain: &[SpinorMonomial]) -> usize {
    domain.len() - dense_rank(dense_matrix(ops, domain), domain.len())
}

pub fn dirac(n: usize) -> Vec<LinearOperator> {
    vec![dirac_operator(n)]
}

pub fn dirac_squared(n: usize) -> Vec<LinearOperator> {
    let d = dirac_operator(n);
    vec![d.compose(&d).unwrap()]
}

pub fn twistor(n: usize) -> Vec<LinearOperator> {
    (1..=2 * n).map(|l| twistor_operator(l, n).unwrap()).collect()
}

pub fn twistor_and_dirac(n: usize) -> Vec<LinearOperator> {
    let mut ops = twistor(n);
    ops.push(dirac_operator(n));
    ops
}

/// Rank of `X_s` on the given monomials.
pub fn raising_rank(n: usize, domain: &[SpinorMonomial]) -> usize {
    dense_rank(dense_matrix(&[raising_operator(n)], domain), domain.len())
}

/// `dim X_s(Ker D_s)` for the domain, via the image of a kernel basis.
pub fn raised_kernel_dim(n: usize, domain: &[SpinorMonomial]) -> usize {
    // Ker D_s has dimension k; X_s is injective, so the image has dimension k
    // exactly when rank X_s on the domain is full.
    let k = kernel_dim(&dirac(n), domain);
    assert_eq!(raising_rank(n, domain), domain.len());
    k
}
