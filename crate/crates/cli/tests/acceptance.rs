// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one PASS/FAIL line per criterion with the
//! measured value and its pinned tolerance; exits non-zero on any failure.
//!
//! Run with `cargo test -p collisim-cli --test acceptance`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::ffi::OsString;
use std::process::ExitCode;
use std::time::Instant;

use collisim::dynamics::{
    collide_once_exact, collide_pair_analytic, collide_pair_exact, equal_eps_step, ghz_evolve,
    ghz_evolve_exact, same_channel_rate, single_collision_map, step_coefficients,
    truncated_step_map, EnvState,
};
use collisim::environment::{correlated_pair_state, product_env_mixed, product_env_pure};
use collisim::infometrics::{entanglement_after_two, entropy_monotonicity_check};
use collisim::{
    affine_from_channel, analyze_point, kraus_from_choi, markovianity_scan, trace_distance,
    BlochAngles, ChannelPair, CorrelatedPairSpec, DensityMatrix, GhzChainSpec, KrausChannel,
    QubitChannel, Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ETA: f64 = 1.0;
const TAU: f64 = FRAC_PI_2;
const CP_TOL: f64 = 1e-12;

struct Line {
    id: &'static str,
    name: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Default)]
struct Report {
    lines: Vec<Line>,
}

impl Report {
    /// `measured <= tolerance`.
    fn bound(&mut self, id: &'static str, name: &'static str, measured: f64, tolerance: f64) {
        self.lines.push(Line {
            id,
            name,
            pass: measured <= tolerance,
            detail: format!("measured={measured:.3e} tolerance={tolerance:.3e}"),
        });
    }

    fn count(&mut self, id: &'static str, name: &'static str, violations: usize, checked: usize) {
        self.lines.push(Line {
            id,
            name,
            pass: violations == 0 && checked > 0,
            detail: format!("violations={violations} checked={checked}"),
        });
    }

    fn error(&mut self, id: &'static str, name: &'static str, err: impl std::fmt::Display) {
        self.lines.push(Line {
            id,
            name,
            pass: false,
            detail: format!("error: {err}"),
        });
    }

    fn run(&mut self, id: &'static str, name: &'static str, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            self.error(id, name, e);
        }
    }
}

fn max(acc: &mut f64, x: f64) {
    *acc = acc.max(x);
}

fn angles(rng: &mut ChaCha8Rng) -> BlochAngles<f64> {
    BlochAngles::new(rng.gen_range(0.0..PI), rng.gen_range(0.0..2.0 * PI))
}

fn mixed(rng: &mut ChaCha8Rng) -> Result<DensityMatrix<f64>> {
    let b = angles(rng).bloch();
    let r: f64 = rng.gen_range(0.0..1.0);
    DensityMatrix::from_bloch([r * b[0], r * b[1], r * b[2]])
}

/// Analytic single- and two-collision states against unitary evolution
/// followed by partial traces.
fn oracle_equivalence(r: &mut Report) -> Result<()> {
    const DRAWS: usize = 64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c0111de);
    let start = Instant::now();
    let mut worst = 0.0;
    for _ in 0..DRAWS {
        let rho = if rng.gen_bool(0.5) { angles(&mut rng).density() } else { mixed(&mut rng)? };
        let spec = CorrelatedPairSpec::new(
            rng.gen_range(0.0..0.3),
            rng.gen_range(0.0..0.3),
            rng.gen_range(0.0..=1.0),
        )?;
        let pair = ChannelPair::canonical(rng.gen_range(0.0..=1.0))?;
        let sigmas = pair.sigmas();
        let eps = spec.epsilons();

        let once = single_collision_map(rho.matrix(), &eps, &sigmas)?;
        for env in [
            EnvState::Mixed(product_env_mixed(&eps, 3)?),
            EnvState::Pure(product_env_pure(&eps, 3)?),
        ] {
            max(&mut worst, once.distance(collide_once_exact(&rho, &env, &sigmas, ETA, TAU)?.matrix()));
        }
        let analytic = collide_pair_analytic(&rho, &spec, pair.sigma1(), pair.sigma2())?;
        let exact = collide_pair_exact(&rho, &EnvState::Pure(correlated_pair_state(&spec)?), &sigmas, ETA, TAU)?;
        max(&mut worst, analytic.rho1.matrix().distance(exact.rho1.matrix()));
        max(&mut worst, analytic.rho2.matrix().distance(exact.rho2.matrix()));
        max(&mut worst, analytic.correction.distance(&exact.correction));
    }
    let elapsed = start.elapsed().as_secs_f64();
    r.bound("1a", "oracle equivalence, Frobenius over 64 draws", worst, 1e-12);
    r.bound("1b", "oracle equivalence runtime [s]", elapsed, 5.0);
    Ok(())
}

/// Dominant Choi eigenvalue of the intermediate map across Q.
fn intermediate_map_scan(r: &mut Report) -> Result<()> {
    let (a, e1, e2) = (0.05, 0.01, 0.02);
    let qs: Vec<f64> = (0..=200).map(|k| -1.0 + 2.0 * k as f64 / 200.0).collect();
    let start = Instant::now();
    let rows = markovianity_scan(&[a], &qs, e1, e2, CP_TOL);
    let elapsed = start.elapsed().as_secs_f64();

    let mut sign_violations = 0;
    let mut at_zero = f64::NAN;
    let mut rel_dev = 0.0;
    for row in &rows {
        let p = row.outcome.as_ref().map_err(Clone::clone)?;
        let q = row.correlation;
        if (p.min_eigenvalue < -CP_TOL) != (q > 0.0) {
            sign_violations += 1;
        }
        if q == 0.0 {
            at_zero = p.min_eigenvalue;
        }
        if q.abs() >= 0.1 {
            let stated = -8.0 * a * q * e1 * e2;
            max(&mut rel_dev, (p.min_eigenvalue - stated).abs() / stated.abs());
        }
    }
    r.count("2a", "lambda_min < 0 exactly when Q > 0 (201 points)", sign_violations, rows.len());
    r.bound("2b", "-lambda_min at Q = 0", -at_zero, 1e-12);
    r.bound("2c", "|lambda_min + 8aQ e1 e2| / |8aQ e1 e2| for |Q| >= 0.1", rel_dev, 0.5);
    r.bound("2d", "scan runtime [s]", elapsed, 10.0);
    Ok(())
}

/// Commuting channels: the intermediate map is CP for every Q, with the
/// expected effective rate.
fn commuting_channels(r: &mut Report) -> Result<()> {
    let mut negativity = f64::NEG_INFINITY;
    let mut rate_dev = 0.0;
    for &(e1, e2) in &[(0.01, 0.02), (0.05, 0.1), (0.1, 0.05), (0.2, 0.2), (0.0, 0.15), (0.2, 0.1)] {
        for k in 0..=40 {
            let q = -1.0 + 0.05 * k as f64;
            let p = analyze_point(0.0, q, e1, e2, CP_TOL)?;
            max(&mut negativity, -p.verdict.min_eigenvalue);
            let g = (1.0 - p.step.lambda[0][0]) / 2.0;
            let expected = same_channel_rate(e1, e2, e1, e2, q)?;
            max(&mut rate_dev, ((g - expected) / expected).abs());
        }
    }
    r.bound("3a", "a = 0: -lambda_min over Q and eps <= 0.2", negativity, CP_TOL);
    r.bound("3b", "a = 0: relative error of effective rate", rate_dev, 1e-8);
    Ok(())
}

/// Closed-form equal-eps step against the divided map applied to rho1.
fn equal_eps_step_check(r: &mut Report) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0;
    let mut sign_violations = 0;
    let mut checked = 0;
    for &a in &[0.05, 0.25, 0.5, 0.75, 1.0] {
        for &eps in &[0.005, 0.01, 0.05, 0.1] {
            for &q in &[0.0, 0.25, 0.5, 0.75, 1.0] {
                let correlation = 2.0 * q - 1.0;
                let p = analyze_point(a, correlation, eps, eps, CP_TOL)?;
                let rho1 = mixed(&mut rng)?;
                let step = equal_eps_step(&rho1, a, eps, q)?;
                max(&mut worst, step.matrix().distance(&p.step.apply(rho1.matrix())?));

                let c1 = step_coefficients(a, eps, q)?.c1;
                let expected = if correlation == 0.0 { 0.0 } else { correlation.signum() };
                let got = if c1 == 0.0 { 0.0 } else { c1.signum() };
                if got != expected {
                    sign_violations += 1;
                }
                checked += 1;
            }
        }
    }
    r.bound("4a", "equal-eps step vs divided map, Frobenius", worst, 1e-12);
    r.count("4b", "sign(C1) = sign(Q) for a > 0", sign_violations, checked);
    Ok(())
}

fn truncated_expansion(r: &mut Report) -> Result<()> {
    let eps = 1e-3;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0;
    for &a in &[0.0, 0.05, 0.5, 1.0] {
        for &q in &[-1.0, -0.5, 0.0, 0.5, 1.0] {
            let spec = CorrelatedPairSpec::with_correlation(eps, eps, q)?;
            let pair = ChannelPair::canonical(a)?;
            let rho = mixed(&mut rng)?;
            let out = collide_pair_analytic(&rho, &spec, pair.sigma1(), pair.sigma2())?;
            let approx = truncated_step_map(out.rho1.matrix(), a, eps, q)?;
            max(&mut worst, out.rho2.matrix().distance(&approx));
        }
    }
    r.bound("5", "second-order expansion at eps = 1e-3, Frobenius", worst, 10.0 * eps * eps * eps);
    Ok(())
}

/// No entropy decrease and no trace-distance revival for eps <= 0.2.
fn information_flow(r: &mut Report) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut entropy_violations = 0;
    let mut checked = 0;
    let mut revival = 0.0;
    for &(e1, e2) in &[(0.01, 0.02), (0.05, 0.05), (0.1, 0.2), (0.2, 0.2)] {
        for &a in &[0.0, 0.05, 0.5, 1.0] {
            for &q in &[-1.0, -0.5, 0.0, 0.5, 1.0] {
                let spec = CorrelatedPairSpec::with_correlation(e1, e2, q)?;
                let pair = ChannelPair::canonical(a)?;
                for _ in 0..4 {
                    let rho = angles(&mut rng).density();
                    let report = entropy_monotonicity_check(&rho, &spec, a, 6)?;
                    if !report.monotone {
                        entropy_violations += 1;
                    }
                    checked += 1;

                    let other = mixed(&mut rng)?;
                    let s1 = collide_pair_analytic(&rho, &spec, pair.sigma1(), pair.sigma2())?;
                    let o1 = collide_pair_analytic(&other, &spec, pair.sigma1(), pair.sigma2())?;
                    let d0 = trace_distance(&rho, &other)?;
                    let d1 = trace_distance(&s1.rho1, &o1.rho1)?;
                    let d2 = trace_distance(&s1.rho2, &o1.rho2)?;
                    max(&mut revival, d1 - d0);
                    max(&mut revival, d2 - d1);
                }
            }
        }
    }
    r.count("6a", "entropy non-decreasing over 6 collisions", entropy_violations, checked);
    r.bound("6b", "trace-distance increase (d1 - d0, d2 - d1)", revival, 1e-10);
    Ok(())
}

/// Sign of the correlation-induced entanglement change.
fn entanglement_sign(r: &mut Report) -> Result<()> {
    let mut sign_violations = 0;
    let mut checked = 0;
    let mut at_zero = 0.0;
    // a = 1 in the xz-plane; a = 0 away from the poles.
    let cases: [(f64, f64, f64, &[f64], f64); 2] = [
        (1.0, 0.01, 0.01, &[0.3, PI / 4.0, FRAC_PI_2, 2.0, 3.0 * PI / 4.0], 0.0),
        (0.0, 0.01, 0.02, &[0.4, PI / 4.0, FRAC_PI_2, 2.3], 0.0),
    ];
    for &(a, e1, e2, thetas, phi) in &cases {
        for &theta in thetas {
            let ang = BlochAngles::new(theta, phi);
            for &q in &[-1.0, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0] {
                let spec = CorrelatedPairSpec::with_correlation(e1, e2, q)?;
                let d = entanglement_after_two(ang, &spec, a)?.delta_e;
                if q == 0.0 {
                    max(&mut at_zero, d.abs());
                    continue;
                }
                if d == 0.0 || d.signum() != -q.signum() {
                    sign_violations += 1;
                }
                checked += 1;
            }
        }
    }
    r.count("7a", "sign(dE) = -sign(Q) at a = 1 (xz-plane) and a = 0 (off poles)", sign_violations, checked);
    r.bound("7b", "|dE| at Q = 0", at_zero, 1e-12);
    Ok(())
}

fn ghz_chain(r: &mut Report) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut even = 0.0;
    let mut odd = 0.0;
    let mut exact = 0.0;
    for &probs in &[[0.9, 0.05, 0.05], [0.5, 0.3, 0.2], [0.0, 0.5, 0.5]] {
        for &a in &[0.0, 0.3, 1.0] {
            let pair = ChannelPair::canonical(a)?;
            let sigmas = pair.sigmas();
            let rho = mixed(&mut rng)?;
            let eps = collisim::EpsilonVector::new(probs[1..].to_vec())?;
            let one = single_collision_map(rho.matrix(), &eps, &sigmas)?;
            for n in 0..=8 {
                let spec = GhzChainSpec::new(probs.to_vec(), n)?;
                let out = ghz_evolve(&rho, &spec, &sigmas)?;
                if n % 2 == 0 {
                    max(&mut even, out.matrix().max_distance(rho.matrix()));
                } else {
                    max(&mut odd, out.matrix().distance(&one));
                }
                if n <= 4 {
                    let chain = ghz_evolve_exact(&rho, &spec, &sigmas, ETA, TAU)?;
                    max(&mut exact, out.matrix().distance(chain.matrix()));
                    if n % 2 == 0 {
                        max(&mut even, chain.matrix().max_distance(rho.matrix()));
                    }
                }
            }
        }
    }
    r.bound("8a", "GHZ chain, even n returns the initial state (max entry)", even, 1e-14);
    r.bound("8b", "GHZ chain, odd n equals one collision (Frobenius)", odd, 1e-14);
    r.bound("8c", "GHZ closed form vs explicit chain for n <= 4", exact, 1e-12);
    Ok(())
}

fn kraus_structure(r: &mut Report) -> Result<()> {
    let qs: Vec<f64> = (0..=200).map(|k| -1.0 + 2.0 * k as f64 / 200.0).collect();
    let mut worst = 0.0;
    let mut wrong_count = 0;
    let mut non_cp = 0;
    for &a in &[0.05, 0.5, 1.0] {
        for &q in &qs {
            let p = analyze_point(a, q, 0.01, 0.02, CP_TOL)?;
            let channel = KrausChannel { terms: kraus_from_choi(&p.choi)? };
            max(&mut worst, affine_from_channel(&channel)?.max_distance(&p.step));
            if !p.verdict.is_cp {
                non_cp += 1;
                let negatives = channel.terms.iter().filter(|t| t.weight < -CP_TOL).count();
                if negatives != 1 {
                    wrong_count += 1;
                }
            }
        }
    }
    r.bound("9a", "Kraus round trip of the intermediate map (max entry)", worst, 1e-10);
    r.count("9b", "exactly one negative Kraus weight at non-CP points", wrong_count, non_cp);
    Ok(())
}

fn capture(args: &[&str], out: &std::path::Path) -> std::result::Result<Vec<u8>, String> {
    let mut argv: Vec<OsString> = std::iter::once("collisim").chain(args.iter().copied()).map(Into::into).collect();
    argv.push("--out".into());
    argv.push(out.into());
    let mut sink = Vec::new();
    let code = collisim_cli::run_with(&argv, &mut sink);
    if code != collisim_cli::EXIT_OK {
        return Err(format!("{args:?} exited with {code}"));
    }
    std::fs::read(out).map_err(|e| e.to_string())
}

fn cli_determinism(r: &mut Report) {
    let cases: [&[&str]; 6] = [
        &["single-step", "--a", "0.7", "--theta", "1.1", "--phi", "0.3"],
        &["two-step", "--Q", "0.8", "--a", "1"],
        &["markov-scan", "--a-grid", "0:1:5", "--Q-grid", "-1:1:41"],
        &["delta-e", "--theta-grid", "0:pi:9", "--Q-grid", "-1:1:9"],
        &["ghz", "--n-max", "6"],
        &["validate", "--draws", "16"],
    ];
    let dir = std::env::temp_dir().join(format!("collisim-acceptance-{}", std::process::id()));
    let mut differing = 0;
    let mut failures = Vec::new();
    for (k, args) in cases.iter().enumerate() {
        let first = capture(args, &dir.join(format!("{k}-a.csv")));
        let second = capture(args, &dir.join(format!("{k}-b.csv")));
        match (first, second) {
            (Ok(x), Ok(y)) if x == y && !x.is_empty() => {}
            (Ok(_), Ok(_)) => differing += 1,
            (Err(e), _) | (_, Err(e)) => failures.push(e),
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    if let Some(e) = failures.first() {
        r.error("10", "CLI output byte-identical across runs", e);
    } else {
        r.count("10", "CLI output byte-identical across runs", differing, cases.len());
    }
}

fn main() -> ExitCode {
    let mut r = Report::default();
    r.run("1", "oracle equivalence", oracle_equivalence);
    r.run("2", "intermediate-map scan", intermediate_map_scan);
    r.run("3", "commuting channels", commuting_channels);
    r.run("4", "equal-eps step", equal_eps_step_check);
    r.run("5", "second-order expansion", truncated_expansion);
    r.run("6", "information flow", information_flow);
    r.run("7", "entanglement change", entanglement_sign);
    r.run("8", "GHZ chain", ghz_chain);
    r.run("9", "Kraus structure", kraus_structure);
    cli_determinism(&mut r);

    let failed = r.lines.iter().filter(|l| !l.pass).count();
    for l in &r.lines {
        let status = if l.pass { "PASS" } else { "FAIL" };
        println!("{status} [{:>3}] {}: {}", l.id, l.name, l.detail);
    }
    println!("acceptance: {} passed, {failed} failed", r.lines.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
