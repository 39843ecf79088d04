use std::collections::BTreeSet;

use super::report::VerificationReport;
use super::spaces::{
    basis, dirac_squared_kernel, monogenics, raise, raised_monogenics, twistor_kernel, twistor_monogenics,
};
use crate::arith::{parse_spinor, SpinorPoly};
use crate::error::Result;
use crate::graded::{operator_matrix_auto, rank, Parity, SectorSpec, SubspaceBasis};
use crate::operators::{apply_ds, apply_ts, apply_xs, NamedOperator, SpinorOperator};

/// The spinor of the worked rank-two example.
pub const EXAMPLE_SPINOR: &str = "-i*x1*x2 + x1*x4 + x2*x3 + i*x3*x4";

/// Its expected twistor components 1 and 2 after raising.
pub const EXAMPLE_TWISTOR: [&str; 2] = ["q2*(x2 + i*x4)^2", "q1*(x1 + i*x3)^2"];

fn twistor_ops(n: usize) -> Vec<NamedOperator> {
    NamedOperator::twistor_components(n)
}

fn as_dyn(ops: &[NamedOperator]) -> Vec<&dyn SpinorOperator> {
    ops.iter().map(|o| o as &dyn SpinorOperator).collect()
}

/// `dim(a ∩ b)`, skipping the intersection when `b ⊆ a`.
fn overlap_dim(a: &SubspaceBasis, b: &SubspaceBasis, missing: usize) -> Result<usize> {
    if missing == 0 {
        Ok(b.dim())
    } else {
        Ok(a.intersect(b)?.dim())
    }
}

/// `Ker T_s ⊆ Ker D_s²` on one sector, checked on the matrices and again
/// by applying `D_s` twice symbolically.
pub fn verify_prolongation(spec: SectorSpec) -> Result<VerificationReport> {
    let kt = twistor_kernel(spec)?;
    let kd2 = dirac_squared_kernel(spec)?;
    let mut r = VerificationReport::new("prolongation", spec);
    let outside = kd2.outside(&kt)?;
    for p in &outside {
        r.witness(format!("in Ker(Ts) but not Ker(Ds^2): {p}"));
    }
    for p in kt.to_polys() {
        if !apply_ds(&apply_ds(&p)).is_zero() {
            r.witness(format!("Ds^2 nonzero on {p}"));
        }
    }
    let observed = overlap_dim(&kd2, &kt, outside.len())?;
    Ok(r.dims(kt.dim(), observed).detail("dimKerTs", kt.dim()).detail("dimKerDs2", kd2.dim()).finish())
}

/// `Ker T_s ∩ Ker D_s` is the whole sector at `h = 0` and zero otherwise.
pub fn verify_constant_lemma(spec: SectorSpec) -> Result<VerificationReport> {
    let k = twistor_monogenics(spec)?;
    let mut r = VerificationReport::new("constant-lemma", spec);
    let expected = if spec.h == 0 {
        for p in k.outside(&SubspaceBasis::full(k.ambient().clone()))? {
            r.witness(format!("x-constant outside Ker(Ts) ∩ Ker(Ds): {p}"));
        }
        spec.dimension()
    } else {
        for p in k.to_polys() {
            r.witness(format!("nonzero element of Ker(Ts) ∩ Ker(Ds): {p}"));
        }
        0
    };
    Ok(r.dims(expected, k.dim()).finish())
}

/// `X_s M_h ⊆ Ker T_s` for every `h` when `n = 1`; for `n > 1` only at
/// `h = 0`, and for `h ≥ 1` no nonzero element of `X_s M_h` is a twistor
/// spinor. `spec` is the sector of `M_h`.
pub fn verify_tower_lemma(spec: SectorSpec) -> Result<VerificationReport> {
    let m = monogenics(spec)?;
    let xm = raise(&m)?;
    let ops = twistor_ops(spec.n);
    let inside = xm.kernel_within(&as_dyn(&ops))?;
    let mut r = VerificationReport::new("tower-lemma", spec);
    let expected = if spec.n == 1 || spec.h == 0 {
        for p in xm.to_polys() {
            if apply_ts(&p).iter().any(|c| !c.is_zero()) {
                r.witness(format!("Ts nonzero on {p}"));
            }
        }
        xm.dim()
    } else {
        for p in inside.to_polys() {
            r.witness(format!("twistor spinor in X_s M_{}: {p}", spec.h));
        }
        0
    };
    Ok(r.dims(expected, inside.dim()).detail("dimMonogenics", m.dim()).detail("dimRaised", xm.dim()).finish())
}

/// `Ker D_s² = Ker D_s ⊕ X_s(Ker D_s)` on one sector.
///
/// The inclusions and the directness are exact on `(h, Q)`. Completeness
/// holds only where the truncation is faithful: `s ∈ Ker D_s²` of q-degree
/// `≤ Q − 2` splits as `(s − X_s m) + X_s m` with `m = i D_s s / (h − 1 + n)`,
/// and both parts stay inside `(h, Q)`.
pub fn verify_composition_series(spec: SectorSpec) -> Result<VerificationReport> {
    let k1 = monogenics(spec)?;
    let k2 = dirac_squared_kernel(spec)?;
    let xm = raised_monogenics(spec)?;
    let mut r = VerificationReport::new("composition-series", spec);
    for p in k2.outside(&k1)? {
        r.witness(format!("in Ker(Ds) but not Ker(Ds^2): {p}"));
    }
    for p in k2.outside(&xm)? {
        r.witness(format!("in X_s Ker(Ds) but not Ker(Ds^2): {p}"));
    }
    let cap = k1.intersect(&xm)?;
    for p in cap.to_polys() {
        r.witness(format!("in Ker(Ds) ∩ X_s Ker(Ds): {p}"));
    }
    let (expected, observed) = if spec.q_bound >= 2 {
        let faithful = dirac_squared_kernel(spec.with_q_bound(spec.q_bound - 2))?.embed(k2.ambient().clone())?;
        let sum = k1.sum(&xm)?;
        let missing = sum.outside(&faithful)?;
        for p in &missing {
            r.witness(format!("in Ker(Ds^2) but not Ker(Ds) + X_s Ker(Ds): {p}"));
        }
        r = r.detail("faithfulQ", (spec.q_bound - 2) as usize);
        (faithful.dim(), overlap_dim(&sum, &faithful, missing.len())?)
    } else {
        (0, 0)
    };
    Ok(r.dims(expected, observed)
        .detail("dimKerDs", k1.dim())
        .detail("dimKerDs2", k2.dim())
        .detail("dimRaised", xm.dim())
        .detail("dimIntersection", cap.dim())
        .finish())
}

/// Howe triangle at homogeneity `h`: the summands `X_s^j M_{h−j}`, `0 ≤ j ≤ h`,
/// with `M_{h−j}` taken on `(h−j, Q−j)`.
///
/// Checks that `X_s` has full column rank on every sector it is applied to,
/// that the summands are independent, and that they fill the faithful
/// sub-sector of q-degree `≤ Q − 2h`.
pub fn verify_triangle(spec: SectorSpec) -> Result<VerificationReport> {
    let (h, q) = (spec.h, spec.q_bound);
    let target = basis(spec);
    let mut r = VerificationReport::new("triangle", spec);
    let mut raised_from = BTreeSet::new();
    let mut summands = Vec::new();
    for j in 0..=h {
        if j > q {
            summands.push(SubspaceBasis::zero(target.clone()));
            continue;
        }
        let base = SectorSpec { h: h - j, q_bound: q - j, parity: spec.parity.flip_times(j), ..spec };
        let mut cur = monogenics(base)?;
        r = r.detail(&format!("dimM{}", h - j), cur.dim());
        for _ in 0..j {
            raised_from.insert(cur.spec());
            let before = cur.dim();
            cur = raise(&cur)?;
            if cur.dim() != before {
                r.witness(format!("X_s loses dimension on a summand from {}", base));
            }
        }
        r = r.detail(&format!("dimSummand{j}"), cur.dim());
        summands.push(cur);
    }

    let xs = NamedOperator::raising(spec.n);
    for s in &raised_from {
        let dom = basis(*s);
        let (_, m) = operator_matrix_auto(&xs, &dom)?;
        let rk = rank(&m);
        if rk != dom.len() {
            r.witness(format!("X_s not injective on {s}: rank {rk} < {}", dom.len()));
        }
    }

    let mut total = summands[0].clone();
    for (j, t) in summands.iter().enumerate().skip(1) {
        for p in total.intersect(t)?.to_polys() {
            r.witness(format!("summand {j} meets the earlier ones in {p}"));
        }
        total = total.sum(t)?;
    }

    let (expected, observed) = if q >= 2 * h {
        let faithful = SubspaceBasis::full(basis(spec.with_q_bound(q - 2 * h))).embed(target)?;
        let missing = total.outside(&faithful)?;
        for p in &missing {
            r.witness(format!("not reached by the triangle: {p}"));
        }
        (faithful.dim(), overlap_dim(&total, &faithful, missing.len())?)
    } else {
        (0, 0)
    };
    Ok(r.dims(expected, observed).detail("dimSum", total.dim()).detail("sectorDim", spec.dimension()).finish())
}

/// The kernel theorem at one homogeneity: `Ker T_s` is the whole sector at
/// `h = 0`; `X_s M_{h−1}` when `n = 1` or `h = 1`; zero otherwise.
/// Compared as canonical subspaces.
pub fn verify_theorem(spec: SectorSpec) -> Result<VerificationReport> {
    let kt = twistor_kernel(spec)?;
    let expected = if spec.h == 0 {
        SubspaceBasis::full(kt.ambient().clone())
    } else if spec.n == 1 || spec.h == 1 {
        raised_monogenics(spec)?
    } else {
        SubspaceBasis::zero(kt.ambient().clone())
    };
    let mut r = VerificationReport::new("theorem", spec);
    for p in expected.outside(&kt)? {
        r.witness(format!("in Ker(Ts) only: {p}"));
    }
    for p in kt.outside(&expected)? {
        r.witness(format!("expected but not in Ker(Ts): {p}"));
    }
    r.equal_as_subspaces = kt == expected;
    Ok(r.dims(expected.dim(), kt.dim()).finish())
}

/// Regression on the worked example: `D_s s = 0`, `s` lies in the computed
/// monogenics, and components 1, 2 of `T_s X_s s` are the displayed squares.
pub fn verify_example() -> Result<Vec<VerificationReport>> {
    let n = 2;
    let s = parse_spinor(EXAMPLE_SPINOR, n)?;
    let spec = SectorSpec::new(n, 2, 0, Parity::Even);

    let mut dirac = VerificationReport::new("example.dirac", spec);
    let ds = apply_ds(&s);
    if !ds.is_zero() {
        dirac.witness(format!("Ds s = {ds}"));
    }
    let m = monogenics(spec)?;
    let member = m.contains_poly(&s)?;
    if !member {
        dirac.witness(format!("not in the computed monogenics: {s}"));
    }
    let dirac = dirac.dims(1, usize::from(member && ds.is_zero())).detail("dimMonogenics", m.dim()).finish();

    let xs = apply_xs(&s);
    let comps = apply_ts(&xs);
    let mut twistor = VerificationReport::new("example.twistor", SectorSpec::new(n, 3, 1, Parity::Odd));
    let mut matched = 0;
    for (k, want) in EXAMPLE_TWISTOR.iter().enumerate() {
        let want = parse_spinor(want, n)?;
        if comps[k] == want {
            matched += 1;
        } else {
            twistor.witness(format!("component {}: {} != {want}", k + 1, comps[k]));
        }
    }
    let nonzero = comps.iter().filter(|c| !c.is_zero()).count();
    let twistor = twistor.dims(2, matched).detail("nonzeroComponents", nonzero).finish();
    Ok(vec![dirac, twistor])
}

/// Spinor text of the example image `X_s s`, as fed to the CLI.
pub fn example_raised() -> SpinorPoly {
    apply_xs(&parse_spinor(EXAMPLE_SPINOR, 2).expect("example parses"))
}
