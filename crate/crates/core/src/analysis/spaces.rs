use std::sync::Arc;

use crate::error::Result;
use crate::graded::{enumerate_basis, joint_kernel, GradedBasis, SectorSpec, SubspaceBasis};
use crate::operators::{NamedOperator, SpinorOperator};

pub fn basis(spec: SectorSpec) -> Arc<GradedBasis> {
    Arc::new(enumerate_basis(spec))
}

/// Symplectic monogenics: the kernel of `D_s` on a sector.
pub fn monogenics(spec: SectorSpec) -> Result<SubspaceBasis> {
    joint_kernel(&[&NamedOperator::dirac(spec.n)], basis(spec))
}

/// Joint kernel of the `2n` components of `T_s`.
pub fn twistor_kernel(spec: SectorSpec) -> Result<SubspaceBasis> {
    let comps = NamedOperator::twistor_components(spec.n);
    let ops: Vec<&dyn SpinorOperator> = comps.iter().map(|c| c as &dyn SpinorOperator).collect();
    joint_kernel(&ops, basis(spec))
}

pub fn dirac_squared_kernel(spec: SectorSpec) -> Result<SubspaceBasis> {
    joint_kernel(&[&NamedOperator::dirac_squared(spec.n)], basis(spec))
}

/// `Ker T_s ∩ Ker D_s` as one stacked kernel.
pub fn twistor_monogenics(spec: SectorSpec) -> Result<SubspaceBasis> {
    let mut ops = NamedOperator::twistor_components(spec.n);
    ops.push(NamedOperator::dirac(spec.n));
    let ops: Vec<&dyn SpinorOperator> = ops.iter().map(|c| c as &dyn SpinorOperator).collect();
    joint_kernel(&ops, basis(spec))
}

/// `X_s(sub)` inside the sector `(h+1, Q+1, flipped parity)`.
pub fn raise(sub: &SubspaceBasis) -> Result<SubspaceBasis> {
    let op = NamedOperator::raising(sub.spec().n);
    let target = sub.spec().image(op.grading()?).expect("raising never lowers degree");
    sub.image(&op, basis(target))
}

/// `X_s(M_{h−1})` computed from the sector one step down, landing in `spec`.
/// Empty when `Q = 0` or `h = 0`.
pub fn raised_monogenics(spec: SectorSpec) -> Result<SubspaceBasis> {
    if spec.h == 0 || spec.q_bound == 0 {
        return Ok(SubspaceBasis::zero(basis(spec)));
    }
    let below = SectorSpec { h: spec.h - 1, q_bound: spec.q_bound - 1, parity: spec.parity.flip(), ..spec };
    raise(&monogenics(below)?)
}
