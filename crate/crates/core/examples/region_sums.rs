// Weighted GFS sums and triangle/square sums over the grid.
//
// `cargo run --example region_sums`

use spinfib::sums::{closed_form_sum, region_sum_cancellable};
use spinfib::{
    square_sum_closed, sum_sequence, triangle_sum_closed, weighted_gfs_sum_closed,
    BoundaryConvention, Grid, Integer, Region, SpinSeeds,
};
use std::sync::atomic::AtomicBool;

pub fn run_example() -> spinfib::Result<()> {
    let grid = Grid::default();
    let k = grid.kernel();
    let fib = SpinSeeds::fibonacci();
    let bw = BoundaryConvention::BWins;

    let (g0, g1) = (Integer::from(-2), Integer::from(3));
    let direct: Integer = (0..=30)
        .map(|i| Integer::from(i) * k.gfs_term(&g0, &g1, i).unwrap())
        .sum();
    println!(
        "sum i G(i), G = GFS(-2,3), n = 30: closed {} direct {direct}",
        weighted_gfs_sum_closed(k, &g0, &g1, 30)?
    );

    for m in [3, 10, 100] {
        println!(
            "m = {m}: triangle {} square {}",
            triangle_sum_closed(k, m)?,
            square_sum_closed(k, m)?
        );
    }

    for region in Region::ALL {
        let seq = sum_sequence(&grid, &fib, region, 8, bw)?;
        let seq: Vec<String> = seq.iter().map(ToString::to_string).collect();
        let closed = match closed_form_sum(k, &fib, region, 7) {
            Some(v) => format!(" (closed form at 7: {})", v?),
            None => String::new(),
        };
        println!("{region:>13}: {}{closed}", seq.join(", "));
    }

    // a raised flag stops a long sum at the next diagonal
    let stop = AtomicBool::new(true);
    let seeds: SpinSeeds = "1,1,0,0".parse().expect("valid seeds");
    match region_sum_cancellable(&grid, &seeds, Region::FullSquare, 1500, bw, Some(&stop)) {
        Err(e) => println!("1500x1500 square sum: {e}"),
        Ok(v) => println!("1500x1500 square sum: {v}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("region_sums");
}
