//! Exact evaluation of double-recurrence Fibonacci numbers and spin functions.
//!
//! A spin function is a grid `H(m, n)` obeying
//! `H(m, n) = H(m-1, n-1) + H(m-2, n-2)` whose rows and columns 0 and 1 are
//! Fibonacci-like sequences seeded by `[a, b, c, d]`. The seeds `[0, 1, 1, 1]`
//! give the double-recurrence Fibonacci numbers
//! `F(m, n) = F_k F_{|m-n|+2} + F_{k-1} F_{|m-n|}`, `k = min(m, n)`.
//!
//! * [`fib`]: fast-doubling Fibonacci/Lucas/GFS kernel.
//! * [`grid`]: recurrence and closed-form grid evaluation.
//! * [`sums`]: closed-form and direct region sums.
//! * [`oeis`]: b-file parsing, fetching and the catalogue audit.
//! * [`verify`]: property sweeps against independent oracles.
//! * [`cli`]: the `spinfib` command line.
//!
//! All values are [`num_bigint::BigInt`]; nothing is ever rounded.

pub mod cli;
mod decimal;
pub mod error;
pub mod fib;
pub mod grid;
pub mod oeis;
pub mod sums;
pub mod verify;

pub use error::{Error, Result};
pub use fib::{fib, fib_convolution, fib_pair, gfs_term, lucas, weighted_fib_sum, FibKernel};
pub use grid::{double_fib, BoundaryConvention, DecompositionVariant, Grid, GridIndex, SpinSeeds};
pub use num_bigint::BigInt as Integer;
pub use sums::{
    region_sum, square_sum_closed, sum_sequence, triangle_sum_closed, weighted_gfs_sum_closed,
    Region,
};
