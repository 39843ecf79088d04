use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::VerificationReport;
use super::spaces::basis;
use crate::arith::{GaussianRational, SpinorMonomial, SpinorPoly};
use crate::error::Result;
use crate::graded::{Parity, SectorSpec};
use crate::operators::metaplectic::{all_generators, omega};
use crate::operators::{apply_ds, apply_es, apply_ts, apply_xs, clifford, mp_generator};

/// The three `sl(2)` relations on a single spinor:
/// `[E_s+n, X_s] = X_s`, `[E_s+n, D_s] = −D_s`, `[X_s, D_s] = i(E_s+n)`.
pub fn sl2_failures(s: &SpinorPoly) -> Vec<&'static str> {
    let n = s.rank() as i64;
    let i = GaussianRational::i();
    let shifted_euler = |p: &SpinorPoly| apply_es(p).add(&p.scale(&GaussianRational::from_integer(n))).expect("rank");
    let comm = |a: &dyn Fn(&SpinorPoly) -> SpinorPoly, b: &dyn Fn(&SpinorPoly) -> SpinorPoly| {
        a(&b(s)).sub(&b(&a(s))).expect("rank")
    };
    let mut out = Vec::new();
    if comm(&shifted_euler, &apply_xs) != apply_xs(s) {
        out.push("[Es+n,Xs] = Xs");
    }
    if comm(&shifted_euler, &apply_ds) != apply_ds(s).neg() {
        out.push("[Es+n,Ds] = -Ds");
    }
    if comm(&apply_xs, &apply_ds) != shifted_euler(s).scale(&i) {
        out.push("[Xs,Ds] = i(Es+n)");
    }
    out
}

/// The `sl(2)` relations on every basis monomial of a sector.
pub fn verify_sl2(spec: SectorSpec) -> Result<VerificationReport> {
    let b = basis(spec);
    let failures: Vec<(SpinorMonomial, Vec<&str>)> = b
        .monomials()
        .par_iter()
        .map(|m| (m.clone(), sl2_failures(&SpinorPoly::monomial(m.clone()))))
        .filter(|(_, f)| !f.is_empty())
        .collect();
    let mut r = VerificationReport::new("sl2", spec);
    for (m, f) in &failures {
        r.witness(format!("{m}: {}", f.join(", ")));
    }
    Ok(r.dims(b.len(), b.len() - failures.len()).finish())
}

/// Every metaplectic generator commutes with `D_s` and `X_s` on every basis
/// monomial of a sector.
pub fn verify_intertwining(spec: SectorSpec) -> Result<VerificationReport> {
    let n = spec.n;
    let b = basis(spec);
    let gens = all_generators(n)
        .into_iter()
        .map(|(k, j, l)| Ok(((k, j, l), mp_generator(k, j, l, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::new();
    for ((kind, j, l), g) in &gens {
        for m in b.monomials() {
            checks.push((*kind, *j, *l, g, m));
        }
    }
    let failures: Vec<String> = checks
        .par_iter()
        .map(|(kind, j, l, g, m)| {
            let s = SpinorPoly::monomial((*m).clone());
            let gd = g.apply(&apply_ds(&s))?.sub(&apply_ds(&g.apply(&s)?))?;
            let gx = g.apply(&apply_xs(&s))?.sub(&apply_xs(&g.apply(&s)?))?;
            Ok((!gd.is_zero() || !gx.is_zero()).then(|| format!("mp({kind},{j},{l}) on {m}")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut r = VerificationReport::new("intertwining", spec);
    for f in &failures {
        r.witness(f.clone());
    }
    Ok(r.dims(checks.len(), checks.len() - failures.len()).detail("generators", gens.len()).finish())
}

/// A random spinor of rank `n` with small exponents and coefficients.
pub fn random_spinor<R: Rng>(rng: &mut R, n: usize) -> SpinorPoly {
    let terms = rng.gen_range(1..=5);
    let mut s = SpinorPoly::zero(n);
    for _ in 0..terms {
        let x = (0..2 * n).map(|_| rng.gen_range(0..=2)).collect();
        let q = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let c = GaussianRational::from_parts(
            rng.gen_range(-5..=5),
            rng.gen_range(1..=4),
            rng.gen_range(-5..=5),
            rng.gen_range(1..=4),
        );
        s.add_term(SpinorMonomial::new(x, q), &c);
    }
    s
}

pub const CLIFFORD_SAMPLES: usize = 50;

fn samples(n: usize, seed: u64) -> Vec<SpinorPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    (0..CLIFFORD_SAMPLES).map(|_| random_spinor(&mut rng, n)).collect()
}

/// `e_a·e_b·s − e_b·e_a·s = −i ω(e_a, e_b) s` for every pair of directions,
/// on seeded random spinors.
pub fn verify_clifford(n: usize, seed: u64) -> Result<VerificationReport> {
    let spinors = samples(n, seed);
    let minus_i = -GaussianRational::i();
    let mut checks = 0;
    let mut r = VerificationReport::new("clifford", SectorSpec::new(n, 0, 0, Parity::Both));
    for a in 1..=2 * n {
        for b in 1..=2 * n {
            let w = omega(a - 1, b - 1, n);
            for s in &spinors {
                checks += 1;
                let lhs = clifford(a, &clifford(b, s)?)?.sub(&clifford(b, &clifford(a, s)?)?)?;
                let rhs = s.scale(&minus_i.scale_int(w));
                if lhs != rhs {
                    r.witness(format!("e{a} e{b} on {s}"));
                }
            }
        }
    }
    let failed = r.witnesses.len() + r.details.get("witnessesOmitted").copied().unwrap_or(0);
    Ok(r.dims(checks, checks - failed).detail("samples", CLIFFORD_SAMPLES).finish())
}

/// `Σ_{m,l} ω^{ml} e_m · (T_s s)_l = 0`: the twistor operator takes values
/// in the kernel of Clifford contraction.
pub fn verify_twistor_factorization(n: usize, seed: u64) -> Result<VerificationReport> {
    let spinors = samples(n, seed);
    let mut r = VerificationReport::new("clifford.twistor-factorization", SectorSpec::new(n, 0, 0, Parity::Both));
    let mut ok = 0;
    for s in &spinors {
        let t = apply_ts(s);
        let mut acc = SpinorPoly::zero(n);
        for j in 1..=n {
            // ω^{j,n+j} = 1, ω^{n+j,j} = −1
            acc = acc.add(&clifford(j, &t[n + j - 1])?)?.sub(&clifford(n + j, &t[j - 1])?)?;
        }
        if acc.is_zero() {
            ok += 1;
        } else {
            r.witness(format!("contraction {acc} on {s}"));
        }
    }
    Ok(r.dims(spinors.len(), ok).finish())
}
