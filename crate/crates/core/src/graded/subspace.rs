use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::elim::{canonical_span, in_canonical_span, kernel_basis};
use super::matrix::{coordinates, operator_matrix, operator_matrix_auto, to_poly, SparseMatrix, SparseVec};
use super::sector::{enumerate_basis, GradedBasis, SectorSpec};
use crate::arith::{parse_spinor, GaussianRational, SpinorMonomial, SpinorPoly};
use crate::error::{Error, Result};
use crate::operators::SpinorOperator;

/// A subspace of a sector, held in canonical form: reduced row echelon with
/// respect to increasing basis order, each vector led by its smallest
/// monomial with coefficient 1. Two subspaces are equal iff their vectors are.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    ambient: Arc<GradedBasis>,
    vectors: Vec<SparseVec>,
}

/// Plain-text form of a subspace: dense coefficient rows over the listed monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceDocument {
    pub ambient: SectorSpec,
    pub monomials: Vec<String>,
    pub vectors: Vec<Vec<String>>,
}

impl SubspaceBasis {
    pub fn from_span(ambient: Arc<GradedBasis>, vectors: &[SparseVec]) -> Self {
        let vectors = canonical_span(vectors, ambient.len());
        Self { ambient, vectors }
    }

    pub fn from_polys(ambient: Arc<GradedBasis>, polys: &[SpinorPoly]) -> Result<Self> {
        let coords = polys.iter().map(|p| coordinates(p, &ambient)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_span(ambient, &coords))
    }

    pub fn zero(ambient: Arc<GradedBasis>) -> Self {
        Self { ambient, vectors: Vec::new() }
    }

    pub fn full(ambient: Arc<GradedBasis>) -> Self {
        let vectors = (0..ambient.len()).map(|k| vec![(k, GaussianRational::one())]).collect();
        Self { ambient, vectors }
    }

    /// Kernel of a matrix whose columns are indexed by `ambient`.
    pub fn kernel(ambient: Arc<GradedBasis>, m: &SparseMatrix) -> Result<Self> {
        if m.cols() != ambient.len() {
            return Err(Error::DimensionMismatch { expected: ambient.len(), got: m.cols() });
        }
        Ok(Self { vectors: kernel_basis(m), ambient })
    }

    pub fn ambient(&self) -> &Arc<GradedBasis> {
        &self.ambient
    }

    pub fn spec(&self) -> SectorSpec {
        self.ambient.spec()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    pub fn to_polys(&self) -> Vec<SpinorPoly> {
        self.vectors.iter().map(|v| to_poly(v, &self.ambient)).collect()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.spec() != other.spec() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let all: Vec<SparseVec> = self.vectors.iter().chain(&other.vectors).cloned().collect();
        Ok(Self::from_span(self.ambient.clone(), &all))
    }

    /// Intersection by the Zassenhaus construction: echelonise the rows
    /// `[a | a]`, `[b | 0]`; rows led in the right half span `A ∩ B`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let n = self.ambient.len();
        let mut rows: Vec<SparseVec> = Vec::with_capacity(self.dim() + other.dim());
        for a in &self.vectors {
            let mut r = a.clone();
            r.extend(a.iter().map(|(k, c)| (n + k, c.clone())));
            rows.push(r);
        }
        rows.extend(other.vectors.iter().cloned());
        let right: Vec<SparseVec> = canonical_span(&rows, 2 * n)
            .into_iter()
            .filter(|r| r[0].0 >= n)
            .map(|r| r.into_iter().map(|(k, c)| (k - n, c)).collect())
            .collect();
        Ok(Self::from_span(self.ambient.clone(), &right))
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.vectors.par_iter().all(|v| in_canonical_span(&self.vectors, v)))
    }

    /// The basis vectors of `other` lying outside `self`, as spinors.
    pub fn outside(&self, other: &Self) -> Result<Vec<SpinorPoly>> {
        self.check_ambient(other)?;
        let missing: Vec<&SparseVec> =
            other.vectors.par_iter().filter(|v| !in_canonical_span(&self.vectors, v)).collect();
        Ok(missing.into_iter().map(|v| to_poly(v, &other.ambient)).collect())
    }

    pub fn contains_poly(&self, p: &SpinorPoly) -> Result<bool> {
        Ok(in_canonical_span(&self.vectors, &coordinates(p, &self.ambient)?))
    }

    /// The same subspace viewed inside a larger sector.
    pub fn embed(&self, target: Arc<GradedBasis>) -> Result<Self> {
        if !self.spec().is_subsector_of(&target.spec()) {
            return Err(Error::SectorMismatch(format!("{} does not embed in {}", self.spec(), target.spec())));
        }
        // the basis order is global, so the index map is increasing and
        // canonical form survives
        let map: Vec<usize> = self
            .ambient
            .monomials()
            .iter()
            .map(|m| target.index_of(m).expect("subsector monomial"))
            .collect();
        let vectors = self.vectors.iter().map(|v| v.iter().map(|(k, c)| (map[*k], c.clone())).collect()).collect();
        Ok(Self { ambient: target, vectors })
    }

    /// Image under `op`, inside `codomain`.
    pub fn image(&self, op: &dyn SpinorOperator, codomain: Arc<GradedBasis>) -> Result<Self> {
        let m = operator_matrix(op, &self.ambient, &codomain)?;
        let images: Vec<SparseVec> = self.vectors.par_iter().map(|v| m.mul_vec(v)).collect();
        Ok(Self::from_span(codomain, &images))
    }

    /// The part of `self` annihilated by every operator in `ops`.
    pub fn kernel_within(&self, ops: &[&dyn SpinorOperator]) -> Result<Self> {
        let mut rows_by_op = Vec::new();
        for op in ops {
            let (_, m) = operator_matrix_auto(*op, &self.ambient)?;
            // columns: coefficients on self.vectors
            let cols: Vec<SparseVec> = self.vectors.par_iter().map(|v| m.mul_vec(v)).collect();
            rows_by_op.push(SparseMatrix::from_columns(m.rows(), &cols));
        }
        let stacked = SparseMatrix::vstack(&rows_by_op)?;
        let combos = kernel_basis(&stacked);
        let vectors: Vec<SparseVec> = combos.iter().map(|c| self.combine(c)).collect();
        Ok(Self::from_span(self.ambient.clone(), &vectors))
    }

    fn combine(&self, coeffs: &[(usize, GaussianRational)]) -> SparseVec {
        let mut acc: std::collections::BTreeMap<usize, GaussianRational> = Default::default();
        for (k, c) in coeffs {
            for (j, x) in &self.vectors[*k] {
                let e = acc.entry(*j).or_insert_with(GaussianRational::zero);
                *e += &(c * x);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    pub fn document(&self) -> SubspaceDocument {
        let dim = self.ambient.len();
        let vectors = self
            .vectors
            .iter()
            .map(|v| {
                let mut dense = vec!["0".to_string(); dim];
                for (k, c) in v {
                    dense[*k] = c.to_string();
                }
                dense
            })
            .collect();
        SubspaceDocument {
            ambient: self.spec(),
            monomials: self.ambient.monomials().iter().map(SpinorMonomial::to_string).collect(),
            vectors,
        }
    }

    /// Rebuilds a subspace from its document; the span is re-canonicalised.
    pub fn from_document(doc: &SubspaceDocument) -> Result<Self> {
        let ambient = Arc::new(enumerate_basis(doc.ambient));
        let listed: Vec<String> = ambient.monomials().iter().map(SpinorMonomial::to_string).collect();
        if listed != doc.monomials {
            return Err(Error::Document("monomial list does not match the ambient sector".into()));
        }
        let n = doc.ambient.n;
        let mut vectors = Vec::with_capacity(doc.vectors.len());
        for row in &doc.vectors {
            if row.len() != ambient.len() {
                return Err(Error::DimensionMismatch { expected: ambient.len(), got: row.len() });
            }
            let mut v = Vec::new();
            for (k, text) in row.iter().enumerate() {
                let p = parse_spinor(text, n)?;
                if p.terms().any(|(m, _)| !m.is_one()) {
                    return Err(Error::Document(format!("coefficient {text:?} is not a constant")));
                }
                let c = p.coeff(&SpinorMonomial::one(n));
                if !c.is_zero() {
                    v.push((k, c));
                }
            }
            vectors.push(v);
        }
        Ok(Self::from_span(ambient, &vectors))
    }
}

impl PartialEq for SubspaceBasis {
    fn eq(&self, other: &Self) -> bool {
        self.spec() == other.spec() && self.vectors == other.vectors
    }
}

impl Eq for SubspaceBasis {}

/// Common kernel of `ops` on the sector `domain`.
pub fn joint_kernel(ops: &[&dyn SpinorOperator], domain: Arc<GradedBasis>) -> Result<SubspaceBasis> {
    let mats = ops
        .iter()
        .map(|op| operator_matrix_auto(*op, &domain).map(|(_, m)| m))
        .collect::<Result<Vec<_>>>()?;
    if mats.is_empty() {
        return Ok(SubspaceBasis::full(domain));
    }
    SubspaceBasis::kernel(domain, &SparseMatrix::vstack(&mats)?)
}
