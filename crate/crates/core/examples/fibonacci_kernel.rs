// Fast-doubling Fibonacci, Lucas and generalized Fibonacci terms.
//
// `cargo run --release --example fibonacci_kernel`

use std::time::Instant;

use spinfib::fib::decimal_digits;
use spinfib::{FibKernel, Integer};

pub fn run_example() -> spinfib::Result<()> {
    let k = FibKernel::default();

    for n in [-6, -1, 0, 1, 10, 90] {
        println!("F({n}) = {}", k.fib(n)?);
    }
    println!("L(10) = {}", k.lucas(10)?);

    // GFS(2, 1) is the Lucas sequence
    let (g0, g1) = (Integer::from(2), Integer::from(1));
    let terms: Vec<String> = (0..8)
        .map(|n| k.gfs_term(&g0, &g1, n).map(|t| t.to_string()))
        .collect::<Result<_, _>>()?;
    println!("GFS(2,1): {}", terms.join(", "));

    println!("sum F(j) F(10-j) = {}", k.fib_convolution(10)?);
    println!("sum i F(i), i <= 6 = {}", k.weighted_fib_sum(6)?);

    let start = Instant::now();
    let big = k.fib(1_000_000)?;
    println!(
        "F(1000000) has {} digits ({:.1} ms)",
        decimal_digits(&big),
        start.elapsed().as_secs_f64() * 1e3
    );

    match k.fib(20_000_000) {
        Err(e) => println!("refused: {e}"),
        Ok(_) => unreachable!("index above the default cap"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fibonacci_kernel");
}
