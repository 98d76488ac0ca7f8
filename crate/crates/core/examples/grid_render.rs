// Renders the double-recurrence grid for a few seed quadruples and
// boundary conventions.
//
// `cargo run --example grid_render`

use spinfib::{BoundaryConvention, Grid, GridIndex, SpinSeeds};

fn print(rows: &[Vec<spinfib::Integer>]) {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for row in rows.iter().rev() {
        let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        println!("  {}", line.join(" "));
    }
}

pub fn run_example() -> spinfib::Result<()> {
    let grid = Grid::default();

    println!("seeds 0,1,1,1 (double-recurrence Fibonacci numbers):");
    print(&grid.render(&SpinSeeds::fibonacci(), 7, BoundaryConvention::BWins)?);
    println!("F(7,4) = {}", spinfib::double_fib(7, 4)?);

    let seeds: SpinSeeds = "2,1,3,4".parse().expect("valid seeds");
    for conv in BoundaryConvention::EVERY {
        println!("seeds {seeds}, {conv}:");
        print(&grid.render(&seeds, 5, conv)?);
    }

    let idx = GridIndex::new(40, 25);
    println!(
        "H(40,25) for {seeds}: recurrence {}, closed form {}",
        grid.eval_recurrence(&seeds, idx, BoundaryConvention::BWins)?,
        grid.eval_closed(&seeds, idx)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("grid_render");
}
