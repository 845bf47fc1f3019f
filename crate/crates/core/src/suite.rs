//! Verification sweeps over every identity family.
//!
//! Each suite is a fixed sequence of check groups. Checks inside a group run
//! on the rayon pool; results always come back in index order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use crate::classical::{
    hermite, hermite_by_recurrence, hermite_from_coeffs, laguerre, laguerre_radial,
};
use crate::combinat::{factorial_q, falling, pow2, sign};
use crate::error::Error;
use crate::exact::{g, gconst, int, rat, GScalar, Rational, XPoly};
use crate::moments::{
    diagonal, f_norm, gram_f, gram_hermite, gram_radial, gram_reports, hermite_norm, id3_row,
    identity_check, radial_norm, rescaling_consistency, AuxIdentity, Gram, HermiteGram,
};
use crate::oscillator::{
    monic_hermite, op_b, op_bprime, op_lower, op_number, op_raise, solve_shifted_number,
    solve_shifted_number_hermite_basis,
};
use crate::quadrature::{evaluate_moment, numeric_inner_product, QuadRule, RuleKind};
use crate::report::VerifyReport;
use crate::transforms::{
    classic_g0_check, eigencheck_harmonic, eigencheck_radial, hodd_byeven_check,
    inverse_transform_checks, laguerre_from_hermite_even, laguerre_transform_checks,
    phi_ratio_identity_check, round_trip_check, Route,
};

/// Relative tolerance for numeric Gram diagonals and the off-diagonal scale.
pub const CROSS_CHECK_TOLERANCE: f64 = 1e-9;
/// Relative tolerance for monomial exactness of a quadrature rule.
pub const EXACTNESS_TOLERANCE: f64 = 1e-11;
/// Absolute tolerance on the 2-point Gauss–Hermite nodes and weights.
pub const GH2_TOLERANCE: f64 = 1e-13;
/// Largest index used by the floating-point cross-check.
pub const QUADRATURE_MAX_N: usize = 8;
/// Coupling values used by the floating-point cross-check.
pub const QUADRATURE_G_VALUES: [(i64, i64); 3] = [(3, 2), (5, 2), (7, 4)];

pub const DEFAULT_MAX_N: usize = 32;

/// A named sweep over all indices up to the cap.
type Group = fn(usize) -> Vec<VerifyReport>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Ladders,
    Transforms,
    Eigen,
    Gram,
    Identities,
    Quadrature,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Ladders,
        Suite::Transforms,
        Suite::Eigen,
        Suite::Gram,
        Suite::Identities,
        Suite::Quadrature,
    ];

    fn groups(self) -> Vec<(&'static str, Group)> {
        match self {
            Suite::Ladders => vec![
                ("hermite_routes", hermite_route_checks),
                ("ladders", ladder_checks),
                ("shifted_number", shifted_number_checks),
                ("b_action", b_action_checks),
                ("b_power", b_power_checks),
                ("hodd_byeven", |n| {
                    par_indices(n, |k| vec![hodd_byeven_check(k)])
                }),
                ("phi_ratio", |n| {
                    par_indices(n, |k| vec![phi_ratio_identity_check(k)])
                }),
                ("monic", monic_checks),
            ],
            Suite::Transforms => vec![
                ("laguerre_transforms", |n| {
                    par_indices(n, laguerre_transform_checks)
                }),
                ("inverse_transforms", |n| {
                    par_indices(n, inverse_transform_checks)
                }),
                ("round_trip", |n| {
                    par_indices(n, |k| {
                        let mut v = round_trip_check(k, false);
                        v.extend(round_trip_check(k, true));
                        v
                    })
                }),
                ("classic_g0", |n| {
                    par_indices(n, |k| {
                        vec![classic_g0_check(k, false), classic_g0_check(k, true)]
                    })
                }),
            ],
            Suite::Eigen => vec![
                ("eigen_radial", |n| {
                    par_indices(n, |k| vec![eigencheck_radial(k)])
                }),
                ("eigen_harmonic", |n| {
                    par_indices(n, |k| vec![eigencheck_harmonic(k)])
                }),
            ],
            Suite::Gram => vec![
                ("gram_radial_f", radial_f_gram_checks),
                ("gram_hermite", hermite_gram_checks),
            ],
            Suite::Identities => vec![
                ("id1", |n| {
                    par_indices(n, |k| vec![aux(AuxIdentity::Id1, &[k])])
                }),
                ("id2", |n| {
                    par_indices(n, |m| {
                        (0..=m).map(|l| aux(AuxIdentity::Id2, &[m, l])).collect()
                    })
                }),
                ("id3", |n| par_indices(n, |m| id3_row(m, n))),
            ],
            Suite::Quadrature => vec![
                ("gauss_hermite_2", |_| gh2_checks()),
                ("rule_exactness", |_| exactness_checks()),
                ("gram_cross_check", cross_checks),
            ],
            Suite::All => Suite::EACH.iter().flat_map(|s| s.groups()).collect(),
        }
    }

    /// Runs every group, handing each group's reports to `sink` as it finishes.
    pub fn run(self, max_n: usize, mut sink: impl FnMut(&str, Vec<VerifyReport>)) {
        for (name, group) in self.groups() {
            sink(name, group(max_n));
        }
    }

    pub fn collect(self, max_n: usize) -> Vec<VerifyReport> {
        let mut out = Vec::new();
        self.run(max_n, |_, r| out.extend(r));
        out
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Ladders => "ladders",
            Suite::Transforms => "transforms",
            Suite::Eigen => "eigen",
            Suite::Gram => "gram",
            Suite::Identities => "identities",
            Suite::Quadrature => "quadrature",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::EACH
            .iter()
            .chain(&[Suite::All])
            .find(|v| v.to_string() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

fn par_indices(
    max_n: usize,
    f: impl Fn(usize) -> Vec<VerifyReport> + Sync + Send,
) -> Vec<VerifyReport> {
    (0..=max_n).into_par_iter().flat_map_iter(f).collect()
}

fn aux(which: AuxIdentity, idx: &[usize]) -> VerifyReport {
    identity_check(which, idx)
        .unwrap_or_else(|e| VerifyReport::errored(format!("{which:?}").to_lowercase(), idx, e))
}

fn hermite_route_checks(max_n: usize) -> Vec<VerifyReport> {
    par_indices(2 * max_n + 1, |n| {
        let h = hermite(n);
        vec![
            VerifyReport::compare("hermite_recurrence", &[n], &h, &hermite_by_recurrence(n)),
            VerifyReport::compare("hermite_parity_coeffs", &[n], &h, &hermite_from_coeffs(n)),
        ]
    })
}

/// Deterministic mixed-degree polynomial with g-dependent coefficients.
fn probe_poly(n: usize) -> XPoly {
    XPoly::new(
        (0..=n)
            .map(|j| {
                let c = rat(j as i64 + 1, (j % 5) as i64 + 2);
                GScalar::monomial(c, j % 3)
            })
            .collect(),
    )
}

fn ladder_checks(max_n: usize) -> Vec<VerifyReport> {
    par_indices(max_n, |n| {
        let h = hermite(n);
        let mut out = vec![
            VerifyReport::compare(
                "lower",
                &[n],
                &hermite(n.saturating_sub(1)).scale_rational(&int(2 * n as i64)),
                &op_lower(&h),
            ),
            VerifyReport::compare("raise", &[n], &hermite(n + 1), &op_raise(&h)),
            VerifyReport::compare(
                "number",
                &[n],
                &h.scale_rational(&int(n as i64)),
                &op_number(&h),
            ),
        ];
        let p = probe_poly(n);
        out.push(VerifyReport::compare(
            "number_factorization",
            &[n],
            &op_raise(&op_lower(&p)).scale_rational(&rat(1, 2)),
            &op_number(&p),
        ));
        out
    })
}

fn shifted_number_checks(max_n: usize) -> Vec<VerifyReport> {
    par_indices(max_n, |n| {
        let p = &probe_poly(n) + &hermite(n).scale(&g());
        [1u32, 2]
            .into_iter()
            .flat_map(|s| {
                let q = solve_shifted_number(&p, s);
                let back = &op_number(&q) + &q.scale_rational(&int(s as i64));
                [
                    VerifyReport::compare("shifted_inverse", &[n, s as usize], &p, &back),
                    VerifyReport::compare(
                        "shifted_inverse_routes",
                        &[n, s as usize],
                        &solve_shifted_number_hermite_basis(&p, s),
                        &q,
                    ),
                ]
            })
            .collect()
    })
}

fn b_action_checks(max_n: usize) -> Vec<VerifyReport> {
    par_indices(max_n, |n| {
        // b̃ H_{2n} = 4n H_{2n−2}, b̃′ H_{2n+1} = 4n H_{2n−1}, and both kill degree < 2
        let (even, odd) = if n == 0 {
            (XPoly::zero(), XPoly::zero())
        } else {
            let c = int(4 * n as i64);
            (
                hermite(2 * n - 2).scale_rational(&c),
                hermite(2 * n - 1).scale_rational(&c),
            )
        };
        let mut out = vec![
            VerifyReport::compare("b_even", &[n], &even, &op_b(&hermite(2 * n))),
            VerifyReport::compare("bprime_odd", &[n], &odd, &op_bprime(&hermite(2 * n + 1))),
        ];
        if n == 0 {
            out.push(VerifyReport::compare(
                "b_h1",
                &[1],
                &XPoly::zero(),
                &op_b(&hermite(1)),
            ));
        }
        out
    })
}

/// bᵏ Ĥ_{2n} = n!/(n−k)! Ĥ_{2(n−k)} for k ≤ n, and zero beyond.
fn b_power_checks(max_n: usize) -> Vec<VerifyReport> {
    par_indices(max_n, |n| {
        let mut out = Vec::with_capacity(n + 2);
        let mut cur = monic_hermite(2 * n);
        for k in 0..=n + 1 {
            let expected = if k <= n {
                monic_hermite(2 * (n - k)).scale_rational(&Rational::from_integer(falling(n, k)))
            } else {
                XPoly::zero()
            };
            out.push(VerifyReport::compare("b_power", &[n, k], &expected, &cur));
            cur = op_b(&cur);
        }
        out
    })
}

fn monic_checks(max_n: usize) -> Vec<VerifyReport> {
    par_indices(max_n, |n| {
        let h_lead = hermite(n).leading().cloned().unwrap_or_default();
        let l = laguerre(n, &crate::exact::g_plus(rat(-1, 2)));
        let l_lead =
            l.0.leading()
                .map(|c| c.scale_rational(&(sign(n) * factorial_q(n))))
                .unwrap_or_default();
        vec![
            VerifyReport::compare("hermite_monic", &[n], &gconst(pow2(n)), &h_lead),
            VerifyReport::compare("laguerre_monic", &[n], &GScalar::one(), &l_lead),
        ]
    })
}

fn radial_f_gram_checks(max_n: usize) -> Vec<VerifyReport> {
    let radial = gram_radial(max_n);
    let f = gram_f(max_n);
    let mut out = gram_reports("gram_radial", &diagonal(max_n, radial_norm), &radial);
    out.extend(gram_reports("gram_f", &diagonal(max_n, f_norm), &f));
    out.extend(rescaling_consistency(&f, &radial));
    out
}

fn hermite_gram_checks(max_n: usize) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for (name, kind) in [
        ("gram_hermite_half_even", HermiteGram::HalfLineEven),
        ("gram_hermite_half_odd", HermiteGram::HalfLineOdd),
        ("gram_hermite_full", HermiteGram::FullLine),
    ] {
        let got = gram_hermite(kind, max_n);
        out.extend(gram_reports(
            name,
            &diagonal(max_n, |n| hermite_norm(kind, n)),
            &got,
        ));
    }
    out
}

fn gh2_checks() -> Vec<VerifyReport> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let w = std::f64::consts::PI.sqrt() / 2.0;
    match QuadRule::build(RuleKind::GaussHermite, 2) {
        Ok(rule) => {
            let ok = rule.nodes.len() == 2
                && (rule.nodes[0] + h).abs() < GH2_TOLERANCE
                && (rule.nodes[1] - h).abs() < GH2_TOLERANCE
                && rule.weights.iter().all(|x| (x - w).abs() < GH2_TOLERANCE);
            vec![VerifyReport::with_verdict(
                "gauss_hermite_2",
                &[2],
                ok,
                json!({"nodes": [-h, h], "weights": [w, w]}),
                json!({"nodes": rule.nodes, "weights": rule.weights}),
            )]
        }
        Err(e) => vec![VerifyReport::errored("gauss_hermite_2", &[2], e)],
    }
}

fn close(identity: &str, idx: &[usize], expected: f64, got: f64, tol: f64) -> VerifyReport {
    VerifyReport::with_verdict(
        identity,
        idx,
        (got - expected).abs() <= tol,
        json!(expected),
        json!(got),
    )
}

/// Every monomial up to the exactness degree, for a few rule orders.
fn exactness_checks() -> Vec<VerifyReport> {
    let orders = [1usize, 2, 3, 5, 8, 12];
    orders
        .par_iter()
        .flat_map_iter(|&m| {
            let mut out = Vec::new();
            match QuadRule::build(RuleKind::GaussHermite, m) {
                Ok(rule) => {
                    for j in 0..=rule.exact_degree() {
                        let x_j = XPoly::monomial(GScalar::one(), j);
                        let exact = crate::moments::inner_product(
                            &x_j,
                            &XPoly::one(),
                            crate::moments::Weight::GaussFullLine,
                        )
                        .expect("full-line moments always exist");
                        let even_j = j + j % 2;
                        let scale = evaluate_moment(
                            &crate::moments::moment(crate::moments::Weight::GaussFullLine, even_j)
                                .expect("even moment"),
                            &int(0),
                        );
                        let want = evaluate_moment(&exact, &int(0));
                        let got = numeric_inner_product(&x_j, &XPoly::one(), &int(0), &rule);
                        out.push(match got {
                            Ok(v) => close(
                                "exactness_hermite",
                                &[m, j],
                                want,
                                v,
                                EXACTNESS_TOLERANCE * scale,
                            ),
                            Err(e) => VerifyReport::errored("exactness_hermite", &[m, j], e),
                        });
                    }
                }
                Err(e) => out.push(VerifyReport::errored("exactness_hermite", &[m], e)),
            }
            for &(p, q) in &QUADRATURE_G_VALUES {
                let gval = rat(p, q);
                let alpha = p as f64 / q as f64 - 0.5;
                match QuadRule::build(RuleKind::GaussLaguerre { alpha }, m) {
                    Ok(rule) => {
                        for j in 0..=rule.exact_degree() {
                            let x_2j = XPoly::monomial(GScalar::one(), 2 * j);
                            let exact =
                                crate::moments::moment(crate::moments::Weight::WeightedG, 2 * j)
                                    .expect("even weighted moment");
                            let want = evaluate_moment(&exact, &gval);
                            let got = numeric_inner_product(&x_2j, &XPoly::one(), &gval, &rule);
                            out.push(match got {
                                Ok(v) => close(
                                    "exactness_laguerre",
                                    &[m, j],
                                    want,
                                    v,
                                    EXACTNESS_TOLERANCE * want.abs(),
                                ),
                                Err(e) => VerifyReport::errored("exactness_laguerre", &[m, j], e),
                            });
                        }
                    }
                    Err(e) => out.push(VerifyReport::errored("exactness_laguerre", &[m], e)),
                }
            }
            out
        })
        .collect()
}

type CrossFamily<'a> = (
    &'a str,
    &'a Vec<XPoly>,
    &'a Gram,
    &'a Result<QuadRule, Error>,
);

/// Numeric Gram entries against exact ones evaluated at each test coupling.
fn cross_checks(max_n: usize) -> Vec<VerifyReport> {
    let n_max = max_n.min(QUADRATURE_MAX_N);
    let radial_exact = gram_radial(n_max);
    let f_exact = gram_f(n_max);
    let full_exact = gram_hermite(HermiteGram::FullLine, n_max);
    let radial: Vec<XPoly> = (0..=n_max).map(laguerre_radial).collect();
    let fpolys: Vec<XPoly> = (0..=n_max)
        .map(|n| laguerre_from_hermite_even(n, Route::DirectSum))
        .collect();
    let herm: Vec<XPoly> = (0..=n_max).map(hermite).collect();
    // order n_max + 1 integrates degree 2 n_max in η and in x exactly
    let order = n_max + 1;
    let gh = QuadRule::build(RuleKind::GaussHermite, order);

    let mut out = Vec::new();
    for &(p, q) in &QUADRATURE_G_VALUES {
        let gval = rat(p, q);
        let alpha = p as f64 / q as f64 - 0.5;
        let gl = QuadRule::build(RuleKind::GaussLaguerre { alpha }, order);
        let families: [CrossFamily; 3] = [
            ("cross_radial", &radial, &radial_exact, &gl),
            ("cross_f", &fpolys, &f_exact, &gl),
            ("cross_hermite_full", &herm, &full_exact, &gh),
        ];
        for (name, polys, exact, rule) in families {
            let rule = match rule {
                Ok(r) => r,
                Err(e) => {
                    out.push(VerifyReport::errored(name, &[], e.clone()));
                    continue;
                }
            };
            let diag: Vec<f64> = (0..=n_max)
                .map(|n| evaluate_moment(&exact[n][n], &gval))
                .collect();
            let entries: Vec<VerifyReport> = (0..=n_max)
                .into_par_iter()
                .flat_map_iter(|m| {
                    let gval = gval.clone();
                    let diag = &diag;
                    (0..=n_max).map(move |n| {
                        let idx = [m, n, p as usize, q as usize];
                        let want = evaluate_moment(&exact[m][n], &gval);
                        let tol = if m == n {
                            CROSS_CHECK_TOLERANCE * want.abs()
                        } else {
                            CROSS_CHECK_TOLERANCE * (diag[m] * diag[n]).abs().sqrt()
                        };
                        match numeric_inner_product(&polys[m], &polys[n], &gval, rule) {
                            Ok(v) => close(name, &idx, want, v, tol),
                            Err(e) => VerifyReport::errored(name, &idx, e),
                        }
                    })
                })
                .collect();
            out.extend(entries);
        }
    }
    out
}
