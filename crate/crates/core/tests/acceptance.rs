//! Acceptance suite: twelve criteria, each checked in exact arithmetic and
//! reported as one PASS/FAIL line. Exits nonzero if any criterion fails.

mod oracle;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use uqrs_core::linalg::Matrix;
use uqrs_core::rmatrix::{
    build_r, build_r_z, build_r_z_affine, build_r_z_direct, check_braid_constant, check_min_poly,
    check_module_morphism, check_ybe_spectral, yang_baxterize, YBE_GRID,
};
use uqrs_core::scalars::{Params, QFunc, RatFunc, Sampled, Scalar, Symbolic};
use uqrs_core::uqrs::{check_defining_relations, hopf_antipode_check, natural_rep, Weight};
use uqrs_core::wedge::{build_wedge_module, spectral_projector_check, verify_fundamental};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sample_points() -> Vec<Sampled> {
    [(2, 3), (3, 5), (5, 2)].into_iter().map(|(r, s)| Sampled::from_ints(r, s).unwrap()).collect()
}

fn failures<F: Scalar>(report: &uqrs_core::report::Report<F>) -> String {
    report.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join(", ")
}

fn relations() -> Outcome {
    let start = Instant::now();
    for n in 2..=4 {
        let report = check_defining_relations(&Symbolic, &natural_rep(&Symbolic, n).unwrap());
        ensure(report.passed(), || format!("symbolic n={n}: {}", failures(&report)))?;
    }
    for p in sample_points() {
        for n in 5..=6 {
            let report = check_defining_relations(&p, &natural_rep(&p, n).unwrap());
            ensure(report.passed(), || format!("sampled {p:?} n={n}: {}", failures(&report)))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok("symbolic n=2..4, sampled n=5,6 at three points".into())
}

fn min_poly() -> Outcome {
    let (r, s) = (RatFunc::r(), RatFunc::s());
    for n in 2..=4 {
        let lib = build_r(&Symbolic, n);
        ensure(oracle::to_dense(&lib) == oracle::r_matrix(n, &r, &s), || format!("R differs from oracle, n={n}"))?;
        let report = check_min_poly(&Symbolic, n);
        ensure(report.passed(), || format!("n={n}: {}", failures(&report)))?;
        // the oracle's own product (R − I)(R + rs⁻¹ I)
        let q = Symbolic.ratio();
        let dense = oracle::r_matrix(n, &r, &s);
        let shifted = |c: &RatFunc| {
            let mut m = dense.clone();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = row[i].clone() - c;
            }
            m
        };
        let prod = oracle::mul(&shifted(&RatFunc::one()), &shifted(&-q));
        ensure(prod.iter().flatten().all(RatFunc::is_zero), || format!("oracle product nonzero, n={n}"))?;
    }
    Ok("symbolic n=2..4, both factors necessary".into())
}

fn braid() -> Outcome {
    for n in 2..=3 {
        let report = check_braid_constant(&Symbolic, n);
        ensure(report.passed(), || format!("symbolic n={n}: {}", failures(&report)))?;
    }
    let report = check_braid_constant(&Sampled::default(), 4);
    ensure(report.passed(), || format!("sampled n=4: {}", failures(&report)))?;
    Ok("R1R2R1=R2R1R2 and R1R3=R3R1, symbolic n=2,3, sampled n=4".into())
}

/// Each entry of `R_1(z) R_2(zw) R_1(w)` is a sum of products of one entry of
/// each factor. `R(x)` is affine in `x`, so `R_1(z)` and `R_2(z)` contribute
/// degree ≤ 1 in `z` and `R_2(zw)` degree ≤ 1 in each of `z` and `w`: both
/// sides have degree ≤ 2 in `z` and in `w`. A polynomial of degree ≤ 2 in
/// each variable vanishing on a 3×3 grid of distinct points is zero, so the
/// 4×4 grid certifies the identity.
fn spectral_ybe() -> Outcome {
    ensure(YBE_GRID.len() == 4, || "grid must have four points".into())?;
    let start = Instant::now();
    for n in 2..=3 {
        let report = check_ybe_spectral(&Symbolic, n).map_err(|e| e.to_string())?;
        ensure(report.passed() && report.checks.len() == 16, || format!("symbolic n={n}: {}", failures(&report)))?;
    }
    let symbolic = start.elapsed();
    ensure(symbolic < Duration::from_secs(60), || format!("symbolic run took {symbolic:?}"))?;
    let report = check_ybe_spectral(&Sampled::default(), 4).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("sampled n=4: {}", failures(&report)))?;
    Ok(format!("grid {{1,2,3,5}}^2, symbolic n=2,3 in {symbolic:.2?}, sampled n=4"))
}

fn r_z_constructions() -> Outcome {
    let one = RatFunc::one();
    for n in 1..=4 {
        let r = build_r(&Symbolic, n);
        let direct = build_r_z_direct(&Symbolic, n);
        ensure(direct.eval(&RatFunc::zero()) == r && direct.a == r, || format!("R(0) != R, n={n}"))?;
        let ybz = yang_baxterize(&r, &-Symbolic.ratio(), &one).map_err(|e| e.to_string())?;
        let affine = build_r_z_affine(&Symbolic, n);
        ensure(direct == ybz, || format!("direct vs Yang-Baxterization differ, n={n}"))?;
        ensure(direct == affine, || format!("direct vs (1-z)R - z(q-1)I differ, n={n}"))?;
        build_r_z(&Symbolic, n).map_err(|e| e.to_string())?;
    }
    Ok("R(0)=R, three constructions agree symbolically for n=1..4".into())
}

/// `R_q(z)` built from its action on `v_i ⊗ v_j`, as coefficients of `z^0` and `z^1`.
fn jimbo_oracle(n: usize) -> (oracle::Dense<QFunc>, oracle::Dense<QFunc>) {
    let q = QFunc::q();
    let q2 = &q * &q;
    let (mut a, mut b) = (oracle::zeros(n * n, n * n), oracle::zeros(n * n, n * n));
    for i in 1..=n {
        for j in 1..=n {
            let col = oracle::index(n, &[i, j]);
            if i == j {
                a[col][col] = QFunc::one();
                b[col][col] = -q2.clone();
                continue;
            }
            let swapped = oracle::index(n, &[j, i]);
            a[swapped][col] = q.clone();
            b[swapped][col] = -q.clone();
            if i > j {
                a[col][col] = QFunc::one() - &q2;
            } else {
                b[col][col] = QFunc::one() - &q2;
            }
        }
    }
    (a, b)
}

fn jimbo() -> Outcome {
    for n in 2..=3 {
        let rz = build_r_z(&Symbolic, n).map_err(|e| e.to_string())?;
        let specialize = |m: &Matrix<RatFunc>| m.try_map(RatFunc::specialize_jimbo).map_err(|e| e.to_string());
        let (a, b) = (specialize(&rz.a)?, specialize(&rz.b)?);
        let (oa, ob) = jimbo_oracle(n);
        ensure(oracle::to_dense(&a) == oa && oracle::to_dense(&b) == ob, || format!("mismatch, n={n}"))?;
    }
    Ok("r -> q, s -> 1/q matches the one-parameter R(z), n=2,3".into())
}

fn prop41() -> Outcome {
    let mut dims = Vec::new();
    for n in 2..=4 {
        let report = spectral_projector_check(&Symbolic, n).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("n={n}: {}", failures(&report)))?;
        // dense rank oracle at a sample point
        let p = Sampled::default();
        let rz = build_r_z(&p, n).map_err(|e| e.to_string())?;
        let rank_q = oracle::rank(&oracle::to_dense(&rz.eval(&p.ratio())));
        let rank_q_inv = oracle::rank(&oracle::to_dense(&rz.eval(&p.ratio().inv().unwrap())));
        ensure(rank_q == n * (n + 1) / 2 && rank_q_inv == n * (n - 1) / 2, || {
            format!("oracle ranks {rank_q}, {rank_q_inv} for n={n}")
        })?;
        dims.push(format!("{rank_q}+{rank_q_inv}"));
    }
    Ok(format!("four subspace equalities, n=2..4 (ranks {})", dims.join(", ")))
}

fn wedge_dims() -> Outcome {
    let start = Instant::now();
    let p = Sampled::default();
    let mut n6k3 = Duration::ZERO;
    for n in 2..=6 {
        for k in 0..=n + 1 {
            let t = Instant::now();
            let m = build_wedge_module(&p, n, k).map_err(|e| format!("n={n} k={k}: {e}"))?;
            if (n, k) == (6, 3) {
                n6k3 = t.elapsed();
            }
            let want = oracle::binomial(n, k);
            ensure(m.dim() == want, || format!("sampled n={n} k={k}: dim {} != {want}", m.dim()))?;
            if n.pow(k as u32) <= 216 && k >= 1 {
                let dense = oracle::wedge_dim(n, k, &p.s());
                ensure(dense == want, || format!("dense oracle n={n} k={k}: {dense}"))?;
            }
        }
    }
    ensure(n6k3 < Duration::from_secs(120), || format!("n=6 k=3 took {n6k3:?}"))?;
    for n in 2..=4 {
        for k in 0..=3 {
            let m = build_wedge_module(&Symbolic, n, k).map_err(|e| format!("symbolic n={n} k={k}: {e}"))?;
            let want = oracle::binomial(n, k);
            ensure(m.dim() == want, || format!("symbolic n={n} k={k}: dim {} != {want}", m.dim()))?;
        }
    }
    Ok(format!("sampled n=2..6 k=0..n+1, symbolic n<=4 k<=3; n=6 k=3 in {n6k3:.2?}, all in {:.2?}", start.elapsed()))
}

fn fundamental_for<P: Params>(p: &P, n: usize, k: usize) -> Result<(), String> {
    let m = build_wedge_module(p, n, k).map_err(|e| format!("n={n} k={k}: {e}"))?;
    let report = verify_fundamental(p, &m).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("n={n} k={k}: {}", failures(&report)))?;
    // independent weight multiset
    let expected: Vec<Vec<usize>> = oracle::subsets(n, k);
    ensure(m.labels() == expected.as_slice(), || format!("labels n={n} k={k}"))?;
    let weights = uqrs_core::uqrs::basis_weights(p, m.induced()).map_err(|e| e.to_string())?;
    for (w, t) in weights.iter().zip(&expected) {
        let mut coords = vec![0i64; n];
        for &i in t {
            coords[i - 1] += 1;
        }
        ensure(*w == Weight { coords }, || format!("weight of {t:?} for n={n} k={k}"))?;
    }
    Ok(())
}

fn fundamental() -> Outcome {
    let p = Sampled::default();
    for n in 2..=6 {
        for k in 0..=n {
            fundamental_for(&p, n, k)?;
        }
    }
    for n in 2..=4 {
        for k in 0..=3.min(n) {
            fundamental_for(&Symbolic, n, k)?;
        }
    }
    Ok("highest vector, weights, multiplicity one, cyclicity: sampled n<=6, symbolic n<=4 k<=3".into())
}

fn module_morphism() -> Outcome {
    for n in 2..=3 {
        for k in 2..=3 {
            let report = check_module_morphism(&Symbolic, n, k).map_err(|e| e.to_string())?;
            ensure(report.passed(), || format!("n={n} k={k}: {}", failures(&report)))?;
        }
    }
    Ok("R_i commutes with all generators, symbolic n,k in {2,3}".into())
}

fn hopf() -> Outcome {
    for n in 2..=5 {
        let report = hopf_antipode_check(&natural_rep(&Symbolic, n).unwrap());
        ensure(report.passed(), || format!("n={n}: {}", failures(&report)))?;
    }
    Ok("antipode axioms on all generators, symbolic n=2..5".into())
}

fn straightening() -> Outcome {
    let m = build_wedge_module(&Symbolic, 3, 3).map_err(|e| e.to_string())?;
    let minus_s_inv = -RatFunc::s().inv().unwrap();
    for perm in oracle::permutations(&[1, 2, 3]) {
        let got = m.straighten(&perm).map_err(|e| e.to_string())?;
        let coeff = (0..oracle::inversions(&perm)).fold(RatFunc::one(), |acc, _| acc * &minus_s_inv);
        let want = uqrs_core::linalg::SparseVec::from_entries([(0, coeff)]);
        ensure(got == want, || format!("{perm:?}: got {got:?}"))?;
    }
    Ok("all 6 permutations of (1,2,3) match (-1/s)^inversions".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("defining relations", relations),
        ("minimal polynomial", min_poly),
        ("braid relations", braid),
        ("spectral Yang-Baxter equation", spectral_ybe),
        ("R(z) constructions", r_z_constructions),
        ("one-parameter specialization", jimbo),
        ("special values of R(z)", prop41),
        ("wedge dimensions", wedge_dims),
        ("fundamental modules", fundamental),
        ("module morphism", module_morphism),
        ("Hopf antipode", hopf),
        ("straightening", straightening),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{elapsed:.2?}]", k + 1),
            Err(why) => {
                all = false;
                println!("criterion {:>2} FAIL {name}: {why} [{elapsed:.2?}]", k + 1);
            }
        }
    }
    if all {
        println!("acceptance: all 12 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
