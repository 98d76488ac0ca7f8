// Splits a spin-function cell into two `F^b_a` terms and shows where the
// literal case-ii expression goes wrong.
//
// `cargo run --example spin_decomposition`

use spinfib::{BoundaryConvention, DecompositionVariant, Grid, GridIndex, SpinSeeds};

pub fn run_example() -> spinfib::Result<()> {
    let grid = Grid::default();
    let seeds: SpinSeeds = "2,1,3,4".parse().expect("valid seeds");

    for (m, n) in [(7, 2), (9, 3), (3, 5), (2, 9)] {
        let idx = GridIndex::new(m, n);
        let truth = grid.eval_recurrence(&seeds, idx, BoundaryConvention::BWins)?;
        let corrected = grid.decompose(&seeds, idx, DecompositionVariant::Corrected)?;
        let literal = grid.decompose(&seeds, idx, DecompositionVariant::Literal)?;
        print!("H({m},{n}) = {truth}  corrected {corrected}  literal {literal}");
        if m + 2 <= n {
            print!("  predicted gap {}", grid.literal_gap(&seeds, idx)?);
        }
        println!();
    }

    match grid.decompose(
        &seeds,
        GridIndex::new(4, 5),
        DecompositionVariant::Corrected,
    ) {
        Err(e) => println!("(4,5): {e}"),
        Ok(_) => unreachable!("near-diagonal cells are rejected"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("spin_decomposition");
}
