// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line schema.
//!
//! Numeric flags accept π forms (`pi/2`); grids are `start:stop:count`,
//! inclusive. Any long flag can also be set as `name = value` in a
//! `--config` file; flags given on the command line win.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::grid::{grid_arg, list_arg, parse_number, Grid};

#[derive(Debug, Parser)]
#[command(name = "collisim", version, about = "Collisional-model simulations with deterministic CSV output")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One collision: analytic map vs. exact unitary evolution.
    SingleStep(SingleStepArgs),
    /// Two collisions with a correlated pair and the correlation correction.
    TwoStep(TwoStepArgs),
    /// CP test of the intermediate map over an (a, Q) grid.
    MarkovScan(MarkovScanArgs),
    /// Entanglement difference ΔE over initial states and Q.
    DeltaE(DeltaEArgs),
    /// Evolution through a perfectly correlated (GHZ) chain.
    Ghz(GhzArgs),
    /// Built-in invariant checks; one pass/fail row per invariant.
    Validate(ValidateArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::SingleStep(_) => "single-step",
            Command::TwoStep(_) => "two-step",
            Command::MarkovScan(_) => "markov-scan",
            Command::DeltaE(_) => "delta-e",
            Command::Ghz(_) => "ghz",
            Command::Validate(_) => "validate",
        }
    }

    pub fn io(&self) -> &IoArgs {
        match self {
            Command::SingleStep(a) => &a.io,
            Command::TwoStep(a) => &a.io,
            Command::MarkovScan(a) => &a.io,
            Command::DeltaE(a) => &a.io,
            Command::Ghz(a) => &a.io,
            Command::Validate(a) => &a.io,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct IoArgs {
    /// key=value file of flag values [default: none]
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output CSV [default: $COLLISIM_OUT/<subcommand>.csv if set, else stdout]
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// `q` or `Q = 2q − 1`; at most one of them.
#[derive(Debug, Clone, Copy, Args)]
pub struct CorrelationArgs {
    /// Pair parameter q in [0, 1] [default: 0.5]
    #[arg(long = "q", value_parser = parse_number, allow_hyphen_values = true, conflicts_with = "Q")]
    pub q: Option<f64>,
    /// Correlation factor Q = 2q - 1 in [-1, 1] [default: 0]
    #[arg(long = "Q", id = "Q", value_parser = parse_number, allow_hyphen_values = true)]
    pub big_q: Option<f64>,
}

impl CorrelationArgs {
    pub fn correlation(&self) -> f64 {
        match (self.q, self.big_q) {
            (_, Some(c)) => c,
            (Some(q), None) => 2.0 * q - 1.0,
            (None, None) => 0.0,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SingleStepArgs {
    /// Probability that channel 1 acts
    #[arg(long, default_value = "0.01", value_parser = parse_number, allow_hyphen_values = true)]
    pub eps1: f64,
    /// Probability that channel 2 acts
    #[arg(long, default_value = "0.02", value_parser = parse_number, allow_hyphen_values = true)]
    pub eps2: f64,
    /// Mixing of the first channel, σ₁ = √a σx + √(1−a) σz
    #[arg(long, default_value = "0.05", value_parser = parse_number, allow_hyphen_values = true)]
    pub a: f64,
    /// Polar angle of the initial pure state
    #[arg(long, default_value = "pi/2", value_parser = parse_number, allow_hyphen_values = true)]
    pub theta: f64,
    /// Azimuth of the initial pure state
    #[arg(long, default_value = "0", value_parser = parse_number, allow_hyphen_values = true)]
    pub phi: f64,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TwoStepArgs {
    /// Probability that channel 1 acts
    #[arg(long, default_value = "0.01", value_parser = parse_number, allow_hyphen_values = true)]
    pub eps1: f64,
    /// Probability that channel 2 acts
    #[arg(long, default_value = "0.02", value_parser = parse_number, allow_hyphen_values = true)]
    pub eps2: f64,
    #[command(flatten)]
    pub correlation: CorrelationArgs,
    /// Mixing of the first channel, σ₁ = √a σx + √(1−a) σz
    #[arg(long, default_value = "0.05", value_parser = parse_number, allow_hyphen_values = true)]
    pub a: f64,
    /// Polar angle of the initial pure state
    #[arg(long, default_value = "pi/2", value_parser = parse_number, allow_hyphen_values = true)]
    pub theta: f64,
    /// Azimuth of the initial pure state
    #[arg(long, default_value = "0", value_parser = parse_number, allow_hyphen_values = true)]
    pub phi: f64,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args)]
pub struct MarkovScanArgs {
    /// Mixing parameter (used when --a-grid is absent)
    #[arg(long, default_value = "0.05", value_parser = parse_number, allow_hyphen_values = true)]
    pub a: f64,
    /// Grid over a, start:stop:count [default: the single value --a]
    #[arg(long = "a-grid", value_parser = grid_arg, allow_hyphen_values = true)]
    pub a_grid: Option<Grid>,
    /// Probability that channel 1 acts
    #[arg(long, default_value = "0.01", value_parser = parse_number, allow_hyphen_values = true)]
    pub eps1: f64,
    /// Probability that channel 2 acts
    #[arg(long, default_value = "0.02", value_parser = parse_number, allow_hyphen_values = true)]
    pub eps2: f64,
    /// Grid over the correlation factor Q
    #[arg(long = "Q-grid", id = "Q-grid", default_value = "-1:1:201", value_parser = grid_arg, allow_hyphen_values = true)]
    pub q_grid: Grid,
    /// Choi eigenvalues above -tol count as non-negative
    #[arg(long = "cp-tol", default_value = "1e-12", value_parser = parse_number)]
    pub cp_tol: f64,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DeltaEArgs {
    /// Mixing parameter
    #[arg(long, default_value = "1", value_parser = parse_number, allow_hyphen_values = true)]
    pub a: f64,
    /// Probability that channel 1 acts
    #[arg(long, default_value = "0.01", value_parser = parse_number, allow_hyphen_values = true)]
    pub eps1: f64,
    /// Probability that channel 2 acts
    #[arg(long, default_value = "0.01", value_parser = parse_number, allow_hyphen_values = true)]
    pub eps2: f64,
    /// Grid over the polar angle of the initial state
    #[arg(long = "theta-grid", default_value = "0:pi:17", value_parser = grid_arg, allow_hyphen_values = true)]
    pub theta_grid: Grid,
    /// Grid over the azimuth of the initial state
    #[arg(long = "phi-grid", default_value = "0", value_parser = grid_arg, allow_hyphen_values = true)]
    pub phi_grid: Grid,
    /// Grid over the correlation factor Q
    #[arg(long = "Q-grid", id = "Q-grid", default_value = "-1:1:21", value_parser = grid_arg, allow_hyphen_values = true)]
    pub q_grid: Grid,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GhzArgs {
    /// Level probabilities p0,p1,p2 of the chain
    #[arg(long, default_value = "0.9,0.05,0.05", value_parser = list_arg)]
    pub probs: Grid,
    /// Largest number of collisions
    #[arg(long = "n-max", default_value = "6")]
    pub n_max: usize,
    /// Also run the explicit chain (dimension 2·3ⁿ) up to this n
    #[arg(long = "exact-max", default_value = "4")]
    pub exact_max: usize,
    /// Mixing of the first channel
    #[arg(long, default_value = "0.05", value_parser = parse_number, allow_hyphen_values = true)]
    pub a: f64,
    /// Polar angle of the initial pure state
    #[arg(long, default_value = "pi/2", value_parser = parse_number, allow_hyphen_values = true)]
    pub theta: f64,
    /// Azimuth of the initial pure state
    #[arg(long, default_value = "0", value_parser = parse_number, allow_hyphen_values = true)]
    pub phi: f64,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    /// Seed for the random parameter draws
    #[arg(long, default_value = "2026")]
    pub seed: u64,
    /// Random draws per oracle check
    #[arg(long, default_value = "64")]
    pub draws: usize,
    #[command(flatten)]
    pub io: IoArgs,
}
