// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! One function per subcommand, each producing a [`Table`].

use std::f64::consts::FRAC_PI_2;

use collisim::dynamics::{
    collide_once_analytic, collide_once_exact, collide_pair_analytic, collide_pair_exact,
    ghz_evolve, ghz_evolve_exact, EnvState,
};
use collisim::environment::{correlated_pair_state, product_env_mixed};
use collisim::infometrics::{delta_e_sweep, DeltaEConfig};
use collisim::{
    markovianity_scan, von_neumann_entropy, BlochAngles, ChannelPair, CorrelatedPairSpec,
    DensityMatrix, EpsilonVector, GhzChainSpec, Result,
};

use crate::args::{DeltaEArgs, GhzArgs, MarkovScanArgs, SingleStepArgs, TwoStepArgs};
use crate::output::{float, Table};

const ETA: f64 = 1.0;
const TAU: f64 = FRAC_PI_2;

/// A finished table; `fatal` is set when a single-point run hit a domain
/// error (the table then carries the message in its `error` column).
#[derive(Debug)]
pub struct Outcome {
    pub table: Table,
    pub fatal: Option<String>,
}

impl Outcome {
    fn ok(table: Table) -> Self {
        Self { table, fatal: None }
    }
}

fn floats(xs: &[f64]) -> Vec<String> {
    xs.iter().map(|&x| float(x)).collect()
}

fn blanks(n: usize) -> Vec<String> {
    vec![String::new(); n]
}

fn bloch(rho: &DensityMatrix<f64>) -> [f64; 3] {
    rho.bloch().expect("qubit state")
}

/// Finish a single-point row: values on success, blanks and the message on
/// failure.
fn single_point(mut table: Table, lead: Vec<String>, width: usize, result: Result<Vec<f64>>) -> Outcome {
    match result {
        Ok(values) => {
            let mut row = lead;
            row.extend(floats(&values));
            row.push(String::new());
            table.push(row);
            Outcome::ok(table)
        }
        Err(e) => {
            let mut row = lead;
            row.extend(blanks(width));
            row.push(e.to_string());
            table.push(row);
            Outcome {
                table,
                fatal: Some(e.to_string()),
            }
        }
    }
}

pub fn single_step(args: &SingleStepArgs) -> Outcome {
    let table = Table::new(&[
        "a", "eps1", "eps2", "theta", "phi", "x0", "y0", "z0", "x1", "y1", "z1", "entropy0",
        "entropy1", "exact_deviation", "error",
    ]);
    let lead = floats(&[args.a, args.eps1, args.eps2, args.theta, args.phi]);
    let result = (|| {
        let pair = ChannelPair::canonical(args.a)?;
        let eps = EpsilonVector::new(vec![args.eps1, args.eps2])?;
        let rho0 = BlochAngles::new(args.theta, args.phi).density();
        let rho1 = collide_once_analytic(&rho0, &eps, &pair.sigmas())?;
        let env = EnvState::Mixed(product_env_mixed(&eps, 3)?);
        let exact = collide_once_exact(&rho0, &env, &pair.sigmas(), ETA, TAU)?;
        let [x0, y0, z0] = bloch(&rho0);
        let [x1, y1, z1] = bloch(&rho1);
        Ok(vec![
            x0,
            y0,
            z0,
            x1,
            y1,
            z1,
            von_neumann_entropy(&rho0),
            von_neumann_entropy(&rho1),
            rho1.matrix().distance(exact.matrix()),
        ])
    })();
    single_point(table, lead, 9, result)
}

pub fn two_step(args: &TwoStepArgs) -> Outcome {
    let table = Table::new(&[
        "a", "eps1", "eps2", "q", "Q", "theta", "phi", "x1", "y1", "z1", "x2", "y2", "z2",
        "correction_norm", "exact_deviation", "entropy1", "entropy2", "error",
    ]);
    let correlation = args.correlation.correlation();
    let q = (correlation + 1.0) / 2.0;
    let lead = floats(&[args.a, args.eps1, args.eps2, q, correlation, args.theta, args.phi]);
    let result = (|| {
        let pair = ChannelPair::canonical(args.a)?;
        let spec = CorrelatedPairSpec::with_correlation(args.eps1, args.eps2, correlation)?;
        let rho0 = BlochAngles::new(args.theta, args.phi).density();
        let out = collide_pair_analytic(&rho0, &spec, pair.sigma1(), pair.sigma2())?;
        let env = EnvState::Pure(correlated_pair_state(&spec)?);
        let exact = collide_pair_exact(&rho0, &env, &pair.sigmas(), ETA, TAU)?;
        let [x1, y1, z1] = bloch(&out.rho1);
        let [x2, y2, z2] = bloch(&out.rho2);
        Ok(vec![
            x1,
            y1,
            z1,
            x2,
            y2,
            z2,
            out.correction.frobenius_norm(),
            out.rho2.matrix().distance(exact.rho2.matrix()),
            von_neumann_entropy(&out.rho1),
            von_neumann_entropy(&out.rho2),
        ])
    })();
    single_point(table, lead, 10, result)
}

pub fn markov_scan(args: &MarkovScanArgs) -> Outcome {
    let mut table = Table::new(&[
        "Q", "a", "eps1", "eps2", "min_eigenvalue", "is_cp", "negative_count", "error",
    ]);
    let a_grid = args.a_grid.as_ref().map_or_else(|| vec![args.a], |g| g.0.clone());
    for row in markovianity_scan(&a_grid, &args.q_grid.0, args.eps1, args.eps2, args.cp_tol) {
        let mut fields = floats(&[row.correlation, row.a, row.eps1, row.eps2]);
        match row.outcome {
            Ok(p) => fields.extend([
                float(p.min_eigenvalue),
                p.is_cp.to_string(),
                p.negative_count.to_string(),
                String::new(),
            ]),
            Err(e) => {
                fields.extend(blanks(3));
                fields.push(e.to_string());
            }
        }
        table.push(fields);
    }
    Outcome::ok(table)
}

pub fn delta_e(args: &DeltaEArgs) -> Outcome {
    let mut table = Table::new(&[
        "theta", "phi", "Q", "a", "eps1", "eps2", "E", "E0", "deltaE", "error",
    ]);
    let config = DeltaEConfig {
        thetas: args.theta_grid.0.clone(),
        phis: args.phi_grid.0.clone(),
        correlations: args.q_grid.0.clone(),
        a: args.a,
        eps1: args.eps1,
        eps2: args.eps2,
    };
    for rec in delta_e_sweep(&config) {
        let mut fields = floats(&[
            rec.angles.theta,
            rec.angles.phi,
            rec.correlation,
            args.a,
            args.eps1,
            args.eps2,
        ]);
        match rec.outcome {
            Ok(p) => {
                fields.extend(floats(&[p.e, p.e0, p.delta_e]));
                fields.push(String::new());
            }
            Err(e) => {
                fields.extend(blanks(3));
                fields.push(e.to_string());
            }
        }
        table.push(fields);
    }
    Outcome::ok(table)
}

pub fn ghz(args: &GhzArgs) -> Outcome {
    let mut table = Table::new(&["n", "x", "y", "z", "entropy", "exact_deviation", "error"]);
    let rho0 = BlochAngles::new(args.theta, args.phi).density();
    let mut fatal = None;
    for n in 0..=args.n_max {
        let result = (|| {
            let pair = ChannelPair::canonical(args.a)?;
            let spec = GhzChainSpec::new(args.probs.0.clone(), n)?;
            let rho = ghz_evolve(&rho0, &spec, &pair.sigmas())?;
            let deviation = if n <= args.exact_max {
                let exact = ghz_evolve_exact(&rho0, &spec, &pair.sigmas(), ETA, TAU)?;
                float(rho.matrix().distance(exact.matrix()))
            } else {
                String::new()
            };
            let [x, y, z] = bloch(&rho);
            Ok::<_, collisim::Error>((vec![x, y, z, von_neumann_entropy(&rho)], deviation))
        })();
        let mut fields = vec![n.to_string()];
        match result {
            Ok((values, deviation)) => {
                fields.extend(floats(&values));
                fields.push(deviation);
                fields.push(String::new());
            }
            Err(e) => {
                fields.extend(blanks(5));
                fields.push(e.to_string());
                fatal.get_or_insert(e.to_string());
            }
        }
        table.push(fields);
    }
    Outcome { table, fatal }
}
