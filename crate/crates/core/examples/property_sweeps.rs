// Runs the identity sweeps against independent oracles.
//
// `cargo run --release --example property_sweeps`

use spinfib::verify::{check_literal_gap, run_suite, Suite};
use spinfib::Grid;

pub fn run_example() -> spinfib::Result<()> {
    let grid = Grid::default();
    for suite in [Suite::Identities, Suite::WeightedSums, Suite::GridSums] {
        for r in run_suite(&grid, suite, 30) {
            let mark = if r.passed() { "ok  " } else { "FAIL" };
            println!("{mark} [{suite}] {} ({} cases)", r.name, r.checked);
        }
    }
    let gap = check_literal_gap(&grid, 12);
    println!("{}: {:?}", gap.name, gap.notes);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("property_sweeps");
}
