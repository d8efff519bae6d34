// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    std::process::exit(collisim_cli::run(std::env::args_os()));
}
