use std::sync::Arc;

use proptest::prelude::*;
use sympspin_core::analysis::monogenics;
use sympspin_core::graded::{
    canonical_span, enumerate_basis, kernel_basis, operator_matrix_auto, rank, Parity, SectorSpec, SparseMatrix,
    SparseVec, SubspaceBasis,
};
use sympspin_core::operators::metaplectic::all_generators;
use sympspin_core::operators::{apply_ds, mp_generator, Named, NamedOperator, SpinorOperator};
use sympspin_core::{parse_spinor, GaussianRational, SpinorMonomial, SpinorPoly};

fn coeff() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| GaussianRational::from_parts(a, b, c, d))
}

fn poly(n: usize) -> impl Strategy<Value = SpinorPoly> {
    let term = (prop::collection::vec(0u32..=2, 2 * n), prop::collection::vec(0u32..=2, n), coeff());
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut p = SpinorPoly::zero(n);
        for (x, q, c) in terms {
            p.add_term(SpinorMonomial::new(x, q), &c);
        }
        p
    })
}

/// Random sparse matrix with small Gaussian-integer entries.
fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = SparseMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec((0..c, -2i64..=2, -1i64..=1), 0..=3), r).prop_map(move |rows| {
            let rows = rows
                .into_iter()
                .map(|entries| {
                    let mut v: SparseVec = Vec::new();
                    let mut sorted = entries;
                    sorted.sort_by_key(|e| e.0);
                    sorted.dedup_by_key(|e| e.0);
                    for (k, a, b) in sorted {
                        let g = GaussianRational::from_parts(a, 1, b, 1);
                        if !g.is_zero() {
                            v.push((k, g));
                        }
                    }
                    v
                })
                .collect();
            SparseMatrix::from_rows(c, rows)
        })
    })
}

fn vectors(width: usize, max: usize) -> impl Strategy<Value = Vec<SparseVec>> {
    prop::collection::vec(prop::collection::vec((0..width, -2i64..=2, -1i64..=1), 1..=3), 0..=max).prop_map(|vs| {
        vs.into_iter()
            .map(|entries| {
                let mut e = entries;
                e.sort_by_key(|t| t.0);
                e.dedup_by_key(|t| t.0);
                e.into_iter()
                    .filter(|t| t.1 != 0 || t.2 != 0)
                    .map(|(k, a, b)| (k, GaussianRational::from_parts(a, 1, b, 1)))
                    .collect()
            })
            .collect()
    })
}

fn small_ambient() -> Arc<sympspin_core::graded::GradedBasis> {
    Arc::new(enumerate_basis(SectorSpec::new(1, 1, 3, Parity::Both)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(2), b in poly(2), c in poly(2)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&SpinorPoly::one(2)).unwrap(), a.clone());
    }

    #[test]
    fn field_inverse(c in coeff()) {
        prop_assume!(!c.is_zero());
        prop_assert!((&c * &c.inv().unwrap()).is_one());
    }

    #[test]
    fn parse_format_round_trip(p in poly(2)) {
        let text = p.to_string();
        let back = parse_spinor(&text, 2).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn rank_plus_nullity(m in matrix(8, 10)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).is_empty());
            prop_assert!(v[0].1.is_one());
        }
    }

    #[test]
    fn kernel_is_independent_of_row_and_column_order(m in matrix(8, 10), seed in any::<u64>()) {
        let c = m.cols();
        // a deterministic permutation of the columns from the seed
        let mut perm: Vec<usize> = (0..c).collect();
        let mut s = seed;
        for i in (1..c).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut rows: Vec<SparseVec> = m
            .row_vectors()
            .iter()
            .map(|r| {
                let mut v: SparseVec = r.iter().map(|(k, x)| (perm[*k], x.clone())).collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        rows.reverse();
        let shuffled = SparseMatrix::from_rows(c, rows);
        let mut inverse = vec![0; c];
        for (k, &p) in perm.iter().enumerate() {
            inverse[p] = k;
        }
        let back: Vec<SparseVec> = kernel_basis(&shuffled)
            .into_iter()
            .map(|v| {
                let mut w: SparseVec = v.into_iter().map(|(k, x)| (inverse[k], x)).collect();
                w.sort_by_key(|e| e.0);
                w
            })
            .collect();
        prop_assert_eq!(canonical_span(&back, c), kernel_basis(&m));
    }

    #[test]
    fn subspace_lattice(a in vectors(8, 4), b in vectors(8, 4), c in vectors(8, 4)) {
        let amb = small_ambient();
        prop_assume!(amb.len() == 8);
        let a = SubspaceBasis::from_span(amb.clone(), &a);
        let b = SubspaceBasis::from_span(amb.clone(), &b);
        let c = SubspaceBasis::from_span(amb.clone(), &c);
        let zero = SubspaceBasis::zero(amb.clone());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        prop_assert_eq!(a.sum(&zero).unwrap(), a.clone());
        let sum = a.sum(&b).unwrap();
        let cap = a.intersect(&b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), sum.dim() + cap.dim());
        prop_assert!(a.contains(&cap).unwrap() && b.contains(&cap).unwrap());
        prop_assert!(sum.contains(&a).unwrap() && sum.contains(&b).unwrap());
        // modular law with a ⊆ a + c
        let ac = a.sum(&c).unwrap();
        prop_assert_eq!(a.sum(&b.intersect(&ac).unwrap()).unwrap(), a.sum(&b).unwrap().intersect(&ac).unwrap());
    }
}

/// Every declared grading fits: assembling into the image sector never
/// meets a monomial outside it.
#[test]
fn declared_gradings_hold_on_all_sectors() {
    for n in 1..=2 {
        let mut ops: Vec<Box<dyn SpinorOperator>> = vec![
            Box::new(NamedOperator::dirac(n)),
            Box::new(NamedOperator::raising(n)),
            Box::new(NamedOperator::euler(n)),
            Box::new(NamedOperator::dirac_squared(n)),
        ];
        for l in 1..=2 * n {
            ops.push(Box::new(NamedOperator::new(n, Named::Clifford(l))));
            ops.push(Box::new(NamedOperator::new(n, Named::Twistor(l))));
        }
        for (k, j, l) in all_generators(n) {
            ops.push(Box::new(mp_generator(k, j, l, n).unwrap()));
        }
        for h in 0..=3 {
            for q in 0..=3 {
                for p in [Parity::Even, Parity::Odd] {
                    let b = enumerate_basis(SectorSpec::new(n, h, q, p));
                    for op in &ops {
                        operator_matrix_auto(op.as_ref(), &b).unwrap_or_else(|e| panic!("{} on {}: {e}", op.label(), b.spec()));
                    }
                }
            }
        }
    }
}

/// A kernel computed at bound `Q` is the kernel at `Q + 2` cut down to
/// q-degree `≤ Q`, and each vector is killed by the symbolic operator.
#[test]
fn truncated_kernels_are_restrictions() {
    for n in 1..=2 {
        for h in 0..=3 {
            for q in 0..=3 {
                let spec = SectorSpec::new(n, h, q, Parity::Both);
                let small = monogenics(spec).unwrap();
                for p in small.to_polys() {
                    assert!(apply_ds(&p).is_zero());
                }
                let big = monogenics(spec.with_q_bound(q + 2)).unwrap();
                let coords = SubspaceBasis::full(small.ambient().clone()).embed(big.ambient().clone()).unwrap();
                assert_eq!(small.embed(big.ambient().clone()).unwrap(), big.intersect(&coords).unwrap(), "{spec}");
            }
        }
    }
}
