//! Kernel dimensions of the sparse engine against the dense oracle, and the
//! frozen values the oracle produced for the documented examples.

mod common;

use common::*;
use sympspin_core::analysis::{dirac_squared_kernel, monogenics, raised_monogenics, twistor_kernel, twistor_monogenics};
use sympspin_core::graded::{enumerate_basis, operator_matrix_auto, rank, Parity, SectorSpec};
use sympspin_core::operators::NamedOperator;

fn both(n: usize, h: u32, q: u32) -> SectorSpec {
    SectorSpec::new(n, h, q, Parity::Both)
}

fn parity_code(p: Parity) -> Option<u32> {
    match p {
        Parity::Even => Some(0),
        Parity::Odd => Some(1),
        Parity::Both => None,
    }
}

fn domain(spec: SectorSpec) -> Vec<sympspin_core::SpinorMonomial> {
    brute_monomials(spec.n, spec.h, spec.q_bound, parity_code(spec.parity))
}

#[test]
fn brute_enumeration_matches_basis() {
    for n in 1..=2 {
        for h in 0..=3 {
            for q in 0..=4 {
                for p in [Parity::Even, Parity::Odd, Parity::Both] {
                    let spec = SectorSpec::new(n, h, q, p);
                    let mut brute = domain(spec);
                    brute.sort();
                    assert_eq!(brute, enumerate_basis(spec).monomials(), "{spec}");
                }
            }
        }
    }
}

#[test]
fn frozen_monogenic_dimensions() {
    assert_eq!(kernel_dim(&dirac(1), &domain(both(1, 1, 3))), 3);
    assert_eq!(monogenics(both(1, 1, 3)).unwrap().dim(), 3);
    assert_eq!(kernel_dim(&dirac(2), &domain(both(2, 2, 2))), 20);
    assert_eq!(monogenics(both(2, 2, 2)).unwrap().dim(), 20);
}

#[test]
fn frozen_raising_rank() {
    let spec = both(1, 0, 1);
    assert_eq!(raising_rank(1, &domain(spec)), 2);
    let (_, m) = operator_matrix_auto(&NamedOperator::raising(1), &enumerate_basis(spec)).unwrap();
    assert_eq!(rank(&m), 2);
}

#[test]
fn frozen_twistor_kernels() {
    // n = 1, h = 2: dimension of X_s M_1 from Q − 1
    let rank_one = [0, 1, 1, 2, 3];
    for (q, &d) in rank_one.iter().enumerate() {
        let spec = both(1, 2, q as u32);
        assert_eq!(kernel_dim(&twistor(1), &domain(spec)), d);
        let kt = twistor_kernel(spec).unwrap();
        assert_eq!(kt.dim(), d);
        assert_eq!(kt, raised_monogenics(spec).unwrap());
    }
    for q in 0..=4 {
        let spec = both(2, 2, q);
        assert_eq!(kernel_dim(&twistor(2), &domain(spec)), 0);
        assert_eq!(twistor_kernel(spec).unwrap().dim(), 0);
    }
}

#[test]
fn frozen_prolongation_dimensions() {
    for (spec, kt, kd2) in [(both(2, 1, 2), 3, 24), (both(1, 3, 4), 2, 6)] {
        assert_eq!(kernel_dim(&twistor(spec.n), &domain(spec)), kt);
        assert_eq!(kernel_dim(&dirac_squared(spec.n), &domain(spec)), kd2);
        let t = twistor_kernel(spec).unwrap();
        let d2 = dirac_squared_kernel(spec).unwrap();
        assert_eq!((t.dim(), d2.dim()), (kt, kd2));
        assert!(d2.contains(&t).unwrap());
    }
}

#[test]
fn frozen_constant_lemma_dimensions() {
    for (spec, d) in [(both(2, 0, 3), 10), (both(2, 1, 3), 0), (both(1, 2, 3), 0)] {
        assert_eq!(kernel_dim(&twistor_and_dirac(spec.n), &domain(spec)), d);
        assert_eq!(twistor_monogenics(spec).unwrap().dim(), d);
    }
}

#[test]
fn frozen_composition_series_dimensions() {
    // (Ker D, Ker D², X_s Ker D from one step down, Ker D² at Q − 2)
    for (spec, dims) in [(both(1, 1, 4), [4, 10, 4, 6]), (both(2, 2, 4), [66, 122, 25, 45])] {
        let n = spec.n;
        let below = SectorSpec::new(n, spec.h - 1, spec.q_bound - 1, Parity::Both);
        let oracle = [
            kernel_dim(&dirac(n), &domain(spec)),
            kernel_dim(&dirac_squared(n), &domain(spec)),
            raised_kernel_dim(n, &domain(below)),
            kernel_dim(&dirac_squared(n), &domain(spec.with_q_bound(spec.q_bound - 2))),
        ];
        assert_eq!(oracle, dims);
        let engine = [
            monogenics(spec).unwrap().dim(),
            dirac_squared_kernel(spec).unwrap().dim(),
            raised_monogenics(spec).unwrap().dim(),
            dirac_squared_kernel(spec.with_q_bound(spec.q_bound - 2)).unwrap().dim(),
        ];
        assert_eq!(engine, dims);
    }
}

#[test]
fn frozen_triangle_dimensions() {
    for (spec, dims) in [(both(1, 2, 5), vec![4, 4, 4]), (both(2, 1, 4), vec![39, 10])] {
        let (n, h, q) = (spec.n, spec.h, spec.q_bound);
        let oracle: Vec<usize> =
            (0..=h).map(|j| kernel_dim(&dirac(n), &brute_monomials(n, h - j, q - j, None))).collect();
        assert_eq!(oracle, dims);
        let engine: Vec<usize> = (0..=h).map(|j| monogenics(both(n, h - j, q - j)).unwrap().dim()).collect();
        assert_eq!(engine, dims);
    }
}

#[test]
fn frozen_theorem_patterns() {
    for (n, q, dims) in [(2, 4, vec![15, 10, 0, 0]), (3, 3, vec![20, 10, 0]), (1, 4, vec![5, 4, 3, 2])] {
        for (h, &d) in dims.iter().enumerate() {
            let spec = both(n, h as u32, q);
            assert_eq!(kernel_dim(&twistor(n), &domain(spec)), d, "{spec}");
            assert_eq!(twistor_kernel(spec).unwrap().dim(), d, "{spec}");
        }
    }
}

/// Every kernel the suites use, on the whole grid `n ≤ 2`, `h ≤ 3`, `Q ≤ 5`,
/// each parity, against the oracle.
#[test]
fn kernel_dimensions_agree_with_oracle() {
    for n in 1..=2 {
        for h in 0..=3 {
            for q in 0..=5 {
                for p in [Parity::Even, Parity::Odd] {
                    let spec = SectorSpec::new(n, h, q, p);
                    let dom = domain(spec);
                    assert_eq!(monogenics(spec).unwrap().dim(), kernel_dim(&dirac(n), &dom), "Ds {spec}");
                    assert_eq!(
                        dirac_squared_kernel(spec).unwrap().dim(),
                        kernel_dim(&dirac_squared(n), &dom),
                        "Ds^2 {spec}"
                    );
                    assert_eq!(twistor_kernel(spec).unwrap().dim(), kernel_dim(&twistor(n), &dom), "Ts {spec}");
                    let (_, m) = operator_matrix_auto(&NamedOperator::raising(n), &enumerate_basis(spec)).unwrap();
                    assert_eq!(rank(&m), raising_rank(n, &dom), "Xs {spec}");
                }
            }
        }
    }
}
