// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Numbers and `start:stop:count` grids on the command line.

use std::f64::consts::PI;

/// A float, optionally written in terms of π: `pi`, `-pi/4`, `3pi/2`,
/// `0.5*pi`.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let t: String = s.trim().to_ascii_lowercase().chars().filter(|c| !c.is_whitespace()).collect();
    if let Ok(x) = t.parse::<f64>() {
        return Ok(x);
    }
    let Some((coef, rest)) = t.split_once("pi") else {
        return Err(format!("not a number: {s:?}"));
    };
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let c = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| format!("bad coefficient in {s:?}"))?,
    };
    let value = if rest.is_empty() {
        c * PI
    } else {
        let den = rest
            .strip_prefix('/')
            .and_then(|d| d.parse::<f64>().ok())
            .ok_or_else(|| format!("not a number: {s:?}"))?;
        c * PI / den
    };
    Ok(value)
}

/// Inclusive evenly spaced grid. A bare number is a one-point grid.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [x] => Ok(vec![parse_number(x)?]),
        [start, stop, count] => {
            let start = parse_number(start)?;
            let stop = parse_number(stop)?;
            let count: usize = count
                .trim()
                .parse()
                .map_err(|_| format!("grid count must be a positive integer in {s:?}"))?;
            if count == 0 {
                return Err(format!("grid count must be at least 1 in {s:?}"));
            }
            if !start.is_finite() || !stop.is_finite() {
                return Err(format!("grid bounds must be finite in {s:?}"));
            }
            if count == 1 {
                return Ok(vec![start]);
            }
            let span = stop - start;
            let last = (count - 1) as f64;
            Ok((0..count)
                .map(|k| if k == count - 1 { stop } else { start + span * k as f64 / last })
                .collect())
        }
        _ => Err(format!("expected start:stop:count, got {s:?}")),
    }
}

/// A parsed grid or list, kept as one clap value.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<f64>);

pub fn grid_arg(s: &str) -> Result<Grid, String> {
    parse_grid(s).map(Grid)
}

pub fn list_arg(s: &str) -> Result<Grid, String> {
    parse_list(s).map(Grid)
}

/// Comma-separated list of numbers.
pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(parse_number).collect()
}
