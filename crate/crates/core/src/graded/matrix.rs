use std::sync::Arc;

use rayon::prelude::*;

use super::sector::{enumerate_basis, GradedBasis};
use crate::arith::{GaussianRational, SpinorPoly};
use crate::error::{Error, Result};
use crate::operators::SpinorOperator;

/// A sparse vector as `(index, value)` pairs with increasing indices and no zeros.
pub type SparseVec = Vec<(usize, GaussianRational)>;

/// Row-major sparse matrix over ℚ(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|k| vec![(k, GaussianRational::one())]).collect();
        Self { rows: n, cols: n, data }
    }

    /// Builds from column vectors (each sorted by row index).
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut data = vec![Vec::new(); rows];
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                data[*r].push((c, v.clone()));
            }
        }
        Self { rows, cols: columns.len(), data }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        Self { rows: rows.len(), cols, data: rows }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, GaussianRational)] {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> GaussianRational {
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => GaussianRational::zero(),
        }
    }

    /// Stacks matrices with equal column counts.
    pub fn vstack(blocks: &[SparseMatrix]) -> Result<Self> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: b.cols });
            }
            data.extend(b.data.iter().cloned());
        }
        Ok(Self { rows: data.len(), cols, data })
    }

    /// `M v` for a sparse vector `v`.
    pub fn mul_vec(&self, v: &[(usize, GaussianRational)]) -> SparseVec {
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = GaussianRational::zero();
            let (mut a, mut b) = (0, 0);
            while a < row.len() && b < v.len() {
                match row[a].0.cmp(&v[b].0) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        acc += &(&row[a].1 * &v[b].1);
                        a += 1;
                        b += 1;
                    }
                }
            }
            if !acc.is_zero() {
                out.push((r, acc));
            }
        }
        out
    }
}

/// Coordinates of `s` in `basis`, or the offending monomial.
pub fn coordinates(s: &SpinorPoly, basis: &GradedBasis) -> Result<SparseVec> {
    let mut out = Vec::with_capacity(s.len());
    for (m, c) in s.terms() {
        let k = basis.index_of(m).ok_or_else(|| Error::ImageOutsideCodomain { monomial: m.to_string() })?;
        out.push((k, c.clone()));
    }
    out.sort_by_key(|e| e.0);
    Ok(out)
}

/// The polynomial with coordinates `v` in `basis`.
pub fn to_poly(v: &[(usize, GaussianRational)], basis: &GradedBasis) -> SpinorPoly {
    let mut out = SpinorPoly::zero(basis.spec().n);
    for (k, c) in v {
        out.add_term(basis.get(*k).clone(), c);
    }
    out
}

fn check_grading(op: &dyn SpinorOperator, domain: &GradedBasis, codomain: &GradedBasis) -> Result<()> {
    let d = domain.spec();
    let c = codomain.spec();
    if op.rank() != d.n || c.n != d.n {
        return Err(Error::RankMismatch { left: op.rank(), right: d.n });
    }
    let g = op.grading()?;
    let h = i64::from(d.h) + i64::from(g.x_shift);
    if h != i64::from(c.h) {
        return Err(Error::SectorMismatch(format!(
            "{} maps h={} to h={h}, codomain has h={}",
            op.label(),
            d.h,
            c.h
        )));
    }
    let image_parity = if g.flips_parity { d.parity.flip() } else { d.parity };
    if !image_parity.within(c.parity) {
        return Err(Error::SectorMismatch(format!(
            "{} sends {} parity to {image_parity}, codomain is {}",
            op.label(),
            d.parity,
            c.parity
        )));
    }
    Ok(())
}

/// Matrix of `op` from `domain` to `codomain` (columns indexed by the domain).
///
/// The codomain need not contain the whole image sector; an image monomial
/// outside it is reported as [`Error::ImageOutsideCodomain`].
pub fn operator_matrix(op: &dyn SpinorOperator, domain: &GradedBasis, codomain: &GradedBasis) -> Result<SparseMatrix> {
    check_grading(op, domain, codomain)?;
    let columns: Vec<SparseVec> = domain
        .monomials()
        .par_iter()
        .map(|m| coordinates(&op.apply(&SpinorPoly::monomial(m.clone()))?, codomain))
        .collect::<Result<_>>()?;
    Ok(SparseMatrix::from_columns(codomain.len(), &columns))
}

/// Matrix of `op` into the image sector of its declared grading. When that
/// sector would have negative x-degree the map is zero and the result has no rows.
pub fn operator_matrix_auto(
    op: &dyn SpinorOperator,
    domain: &GradedBasis,
) -> Result<(Option<Arc<GradedBasis>>, SparseMatrix)> {
    match domain.spec().image(op.grading()?) {
        None => Ok((None, SparseMatrix::zero(0, domain.len()))),
        Some(spec) => {
            let codomain = Arc::new(enumerate_basis(spec));
            let m = operator_matrix(op, domain, &codomain)?;
            Ok((Some(codomain), m))
        }
    }
}
