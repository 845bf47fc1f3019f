//! End-to-end acceptance criteria. Runs sequentially so each runtime budget is
//! measured in isolation, and prints one PASS/FAIL line per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use oscpoly::combinat::{factorial_q, pow2, sign};
use oscpoly::exact::{g_degree, g_plus, gconst, gscalar_pochhammer, int, rat, xpoly_divide_by_x};
use oscpoly::moments::{
    gram_f, gram_hermite, gram_radial, id3_row, identity_check, AuxIdentity, HermiteGram,
};
use oscpoly::oscillator::{monic_hermite, op_b, op_lower, op_number, op_raise};
use oscpoly::quadrature::{numeric_inner_product, QuadRule, RuleKind};
use oscpoly::transforms::{
    hermite_from_laguerre, laguerre_from_hermite_even, laguerre_from_hermite_odd,
    radial_operator_apply, HermiteVariant, Route,
};
use oscpoly::{hermite, laguerre, laguerre_radial, GScalar, MomentValue, Rational, XPoly};
use statrs::function::gamma::gamma;

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn q(r: Rational) -> GScalar {
    gconst(r)
}

/// (−1)ⁿ n! L_n^{(g−½)}(x²) straight from the Laguerre definition.
fn scaled_laguerre(n: usize) -> XPoly {
    laguerre_radial(n).scale_rational(&(sign(n) * factorial_q(n)))
}

fn c1_even_transform() -> Outcome {
    for n in 0..=32 {
        let want = scaled_laguerre(n);
        ensure(
            laguerre_from_hermite_even(n, Route::DirectSum) == want,
            || format!("direct sum differs at n = {n}"),
        )?;
        ensure(
            laguerre_from_hermite_even(n, Route::OperatorSeries) == want,
            || format!("operator series differs at n = {n}"),
        )?;
    }
    Ok(())
}

fn c2_odd_transform() -> Outcome {
    for n in 0..=32 {
        let want = scaled_laguerre(n);
        for route in [Route::DirectSum, Route::OperatorSeries] {
            let got = laguerre_from_hermite_odd(n, route).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("{route:?} differs at n = {n}"))?;
        }
    }
    Ok(())
}

fn c3_inverse_transforms() -> Outcome {
    for n in 0..=32 {
        let even = hermite(2 * n).scale_rational(&(int(1) / pow2(2 * n)));
        let odd = xpoly_divide_by_x(&hermite(2 * n + 1))
            .map_err(|e| e.to_string())?
            .scale_rational(&(int(1) / pow2(2 * n + 1)));
        let e = hermite_from_laguerre(n, HermiteVariant::Even);
        let v1 = hermite_from_laguerre(n, HermiteVariant::OddV1);
        let v2 = hermite_from_laguerre(n, HermiteVariant::OddV2);
        ensure(e == even, || format!("even inverse differs at n = {n}"))?;
        ensure(v1 == odd, || {
            format!("odd inverse (first form) differs at n = {n}")
        })?;
        ensure(v2 == odd, || {
            format!("odd inverse (second form) differs at n = {n}")
        })?;
        ensure(v1 == v2, || format!("odd variants differ at n = {n}"))?;
        for p in [&e, &v1, &v2] {
            ensure(g_degree(p).unwrap_or(0) == 0, || {
                format!("g appears at n = {n}")
            })?;
        }
    }
    Ok(())
}

fn c4_g_zero() -> Outcome {
    for n in 0..=32 {
        let s = sign(n) * factorial_q(n);
        let l_minus = laguerre(n, &q(rat(-1, 2))).0;
        let l_plus = laguerre(n, &q(rat(1, 2))).0;
        // η → x² by spreading coefficients onto even powers
        let spread = |p: &XPoly, shift: usize| {
            let mut c = vec![GScalar::zero(); 2 * p.coeffs().len() + shift];
            for (k, v) in p.coeffs().iter().enumerate() {
                c[2 * k + shift] = v.clone();
            }
            XPoly::new(c)
        };
        let even = spread(&l_minus, 0).scale_rational(&(s.clone() * pow2(2 * n)));
        let odd = spread(&l_plus, 1).scale_rational(&(s * pow2(2 * n + 1)));
        ensure(hermite(2 * n) == even, || {
            format!("even formula fails at n = {n}")
        })?;
        ensure(hermite(2 * n + 1) == odd, || {
            format!("odd formula fails at n = {n}")
        })?;
    }
    Ok(())
}

fn c5_eigen() -> Outcome {
    for n in 0..=32 {
        let l = laguerre_radial(n);
        let got = radial_operator_apply(&l).map_err(|e| e.to_string())?;
        ensure(got == l.scale_rational(&int(4 * n as i64)), || {
            format!("radial eigenvalue fails at n = {n}")
        })?;
        let h = hermite(n);
        ensure(
            op_number(&h).scale_rational(&int(2)) == h.scale_rational(&int(2 * n as i64)),
            || format!("harmonic eigenvalue fails at n = {n}"),
        )?;
    }
    Ok(())
}

/// Σ_k (−1)ᵏ n!/(n−k)! Ĥ_{2(n−k)}
fn alternating_even_sum(n: usize) -> XPoly {
    (0..=n)
        .map(|k| {
            monic_hermite(2 * (n - k))
                .scale_rational(&(sign(k) * factorial_q(n) / factorial_q(n - k)))
        })
        .sum()
}

fn c6_ladders() -> Outcome {
    for n in 0..=32 {
        let h = hermite(n);
        if n >= 1 {
            let lower = hermite(n - 1).scale_rational(&int(2 * n as i64));
            ensure(h.derivative() == lower, || {
                format!("dH/dx fails at n = {n}")
            })?;
            ensure(op_lower(&h) == lower, || {
                format!("lowering fails at n = {n}")
            })?;
        }
        ensure(op_raise(&h) == hermite(n + 1), || {
            format!("raising fails at n = {n}")
        })?;
        ensure(op_number(&h) == h.scale_rational(&int(n as i64)), || {
            format!("number operator fails at n = {n}")
        })?;

        let mut cur = monic_hermite(2 * n);
        for k in 0..=n + 1 {
            let want = if k <= n {
                monic_hermite(2 * (n - k)).scale_rational(&(factorial_q(n) / factorial_q(n - k)))
            } else {
                XPoly::zero()
            };
            ensure(cur == want, || format!("b^k fails at n = {n}, k = {k}"))?;
            cur = op_b(&cur);
        }

        let sum = alternating_even_sum(n);
        let odd_over_x = xpoly_divide_by_x(&monic_hermite(2 * n + 1)).map_err(|e| e.to_string())?;
        ensure(odd_over_x == sum, || {
            format!("odd-by-even fails at n = {n}")
        })?;

        let he = monic_hermite(2 * n);
        let lhs = &xpoly_divide_by_x(&he.derivative()).map_err(|e| e.to_string())? - &he;
        let rhs = &sum.scale_rational(&int(-2)) + &he;
        ensure(lhs == rhs, || {
            format!("(1/x)d/dx identity fails at n = {n}")
        })?;
    }
    Ok(())
}

fn c7_identities() -> Outcome {
    let mut counts = [0usize; 3];
    for n in 0..=24 {
        let r = identity_check(AuxIdentity::Id1, &[n]).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("id1 fails at n = {n}"))?;
        counts[0] += 1;
    }
    for m in 0..=24 {
        for l in 0..=m {
            let r = identity_check(AuxIdentity::Id2, &[m, l]).map_err(|e| e.to_string())?;
            ensure(r.pass, || format!("id2 fails at (m, l) = ({m}, {l})"))?;
            counts[1] += 1;
        }
    }
    for m in 0..=24 {
        for r in id3_row(m, 24) {
            ensure(r.pass, || format!("id3 fails at {:?}", r.indices))?;
            counts[2] += 1;
        }
    }
    ensure(counts == [25, 325, 625], || {
        format!("unexpected instance counts {counts:?}")
    })
}

fn check_diagonal(
    name: &str,
    m: &[Vec<MomentValue>],
    norm: impl Fn(usize) -> MomentValue,
) -> Outcome {
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let want = if i == j { norm(i) } else { MomentValue::zero() };
            ensure(*v == want, || {
                format!("{name} entry ({i}, {j}) is {v}, expected {want}")
            })?;
        }
    }
    Ok(())
}

fn c8_orthogonality() -> Outcome {
    let gh = g_plus(rat(1, 2));
    let radial = gram_radial(12);
    let f = gram_f(12);
    check_diagonal("radial", &radial, |n| {
        MomentValue::gamma_g_half(
            gscalar_pochhammer(&gh, n).scale_rational(&(rat(1, 2) / factorial_q(n))),
        )
    })?;
    check_diagonal("F", &f, |n| {
        MomentValue::gamma_g_half(
            gscalar_pochhammer(&gh, n).scale_rational(&(rat(1, 2) * factorial_q(n))),
        )
    })?;
    for m in 0..=12 {
        for n in 0..=12 {
            let c = sign(m + n) * factorial_q(m) * factorial_q(n);
            ensure(f[m][n] == radial[m][n].scale(&q(c)), || {
                format!("rescaling fails at ({m}, {n})")
            })?;
        }
    }
    check_diagonal(
        "half-line even Hermite",
        &gram_hermite(HermiteGram::HalfLineEven, 16),
        |n| MomentValue::sqrt_pi(q(factorial_q(2 * n) * pow2(2 * n) / int(2))),
    )?;
    check_diagonal(
        "half-line odd Hermite",
        &gram_hermite(HermiteGram::HalfLineOdd, 16),
        |n| MomentValue::sqrt_pi(q(factorial_q(2 * n + 1) * pow2(2 * n))),
    )?;
    check_diagonal(
        "full-line Hermite",
        &gram_hermite(HermiteGram::FullLine, 16),
        |n| MomentValue::sqrt_pi(q(factorial_q(n) * pow2(n))),
    )
}

fn fact(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

type Family<'a> = (
    &'a str,
    &'a Vec<XPoly>,
    &'a QuadRule,
    &'a dyn Fn(usize) -> f64,
);

fn c9_quadrature() -> Outcome {
    let pi_sqrt = std::f64::consts::PI.sqrt();
    let rule = QuadRule::build(RuleKind::GaussHermite, 2).map_err(|e| e.to_string())?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ensure(
        (rule.nodes[0] + h).abs() < 1e-13
            && (rule.nodes[1] - h).abs() < 1e-13
            && rule
                .weights
                .iter()
                .all(|w| (w - pi_sqrt / 2.0).abs() < 1e-13),
        || format!("2-point rule is {:?} / {:?}", rule.nodes, rule.weights),
    )?;

    let n_max = 8;
    let radial: Vec<XPoly> = (0..=n_max).map(laguerre_radial).collect();
    let fpolys: Vec<XPoly> = (0..=n_max).map(scaled_laguerre).collect();
    let herm: Vec<XPoly> = (0..=n_max).map(hermite).collect();
    let gh_rule = QuadRule::build(RuleKind::GaussHermite, n_max + 1).map_err(|e| e.to_string())?;
    for (p, qd) in [(3, 2), (5, 2), (7, 4)] {
        let gv = p as f64 / qd as f64;
        let gval = rat(p, qd);
        let gl_rule = QuadRule::build(RuleKind::GaussLaguerre { alpha: gv - 0.5 }, n_max + 1)
            .map_err(|e| e.to_string())?;
        // diagonals from the Gamma function directly
        let radial_norm = |n: usize| gamma(gv + 0.5 + n as f64) / (2.0 * fact(n));
        let f_norm = |n: usize| 0.5 * fact(n) * gamma(gv + 0.5 + n as f64);
        let herm_norm = |n: usize| 2f64.powi(n as i32) * fact(n) * pi_sqrt;
        let families: [Family; 3] = [
            ("radial", &radial, &gl_rule, &radial_norm),
            ("F", &fpolys, &gl_rule, &f_norm),
            ("full-line Hermite", &herm, &gh_rule, &herm_norm),
        ];
        for (name, polys, rule, norm) in families {
            for m in 0..=n_max {
                for n in 0..=n_max {
                    let got = numeric_inner_product(&polys[m], &polys[n], &gval, rule)
                        .map_err(|e| e.to_string())?;
                    let (want, tol) = if m == n {
                        (norm(n), 1e-9 * norm(n))
                    } else {
                        (0.0, 1e-9 * (norm(m) * norm(n)).sqrt())
                    };
                    ensure((got - want).abs() <= tol, || {
                        format!("{name} at g = {p}/{qd}, ({m}, {n}): {got} vs {want}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn c10_full_suite() -> Outcome {
    let status = Command::new(env!("CARGO_BIN_EXE_oscpoly"))
        .args([
            "verify", "--suite", "all", "--max-n", "12", "--format", "json",
        ])
        .env_remove("OSCPOLY_MAX_N")
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&status.stdout);
    let totals = stdout.lines().last().unwrap_or("").to_string();
    ensure(status.status.code() == Some(0), || {
        format!("exit status {:?}, totals {totals}", status.status.code())
    })
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "even-degree Hermite to Laguerre transform, n <= 32",
            c1_even_transform,
            Duration::from_secs(10),
        ),
        (
            "odd-degree Hermite to Laguerre transform, n <= 32",
            c2_odd_transform,
            Duration::from_secs(10),
        ),
        (
            "inverse transforms, n <= 32",
            c3_inverse_transforms,
            Duration::from_secs(10),
        ),
        (
            "g = 0 classical formulas, n <= 32",
            c4_g_zero,
            Duration::from_secs(2),
        ),
        (
            "radial and harmonic eigenvalues, n <= 32",
            c5_eigen,
            Duration::from_secs(5),
        ),
        (
            "ladder and b-operator relations, n <= 32",
            c6_ladders,
            Duration::from_secs(10),
        ),
        (
            "parametric identities, indices <= 24",
            c7_identities,
            Duration::from_secs(10),
        ),
        (
            "exact Gram matrices",
            c8_orthogonality,
            Duration::from_secs(30),
        ),
        (
            "quadrature cross-check",
            c9_quadrature,
            Duration::from_secs(5),
        ),
        (
            "verify --suite all --max-n 12",
            c10_full_suite,
            Duration::from_secs(120),
        ),
    ];
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= budget => Ok(()),
            Ok(()) => Err(format!("over budget ({budget:?})")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("criterion {:>2}: PASS {name} [{elapsed:.2?}]", i + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {:>2}: FAIL {name} [{elapsed:.2?}] {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
