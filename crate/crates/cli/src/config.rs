// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! `key = value` config files, layered under command-line flags.

use std::collections::HashSet;
use std::ffi::OsString;
use std::path::Path;

/// Entries in file order. Blank lines and `#` comments are skipped; a key
/// may appear once.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
        let key = key.trim().trim_start_matches("--").to_string();
        let value = value.trim().to_string();
        if key.is_empty() || value.is_empty() {
            return Err(format!("line {}: empty key or value", lineno + 1));
        }
        if !seen.insert(key.clone()) {
            return Err(format!("line {}: duplicate key {key:?}", lineno + 1));
        }
        entries.push((key, value));
    }
    Ok(entries)
}

pub fn read_config(path: &Path) -> Result<Vec<(String, String)>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
    parse_config(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Splice file entries in front of the user's flags. Keys already given on
/// the command line are dropped; `q` and `Q` count as one setting.
pub fn layered_argv(
    argv: &[OsString],
    entries: &[(String, String)],
    known: &HashSet<String>,
    given: &HashSet<String>,
) -> Result<Vec<OsString>, String> {
    let correlation_given = given.contains("q") || given.contains("Q");
    let mut out: Vec<OsString> = argv.iter().take(2).cloned().collect();
    for (key, value) in entries {
        if key == "config" || !known.contains(key) {
            return Err(format!("config file: unknown key {key:?}"));
        }
        let is_correlation = key == "q" || key == "Q";
        if given.contains(key) || (is_correlation && correlation_given) {
            continue;
        }
        out.push(format!("--{key}={value}").into());
    }
    out.extend(argv.iter().skip(2).cloned());
    Ok(out)
}
