//! Sums over the grid: weighted GFS sums, the closed forms for the Fibonacci
//! triangle and square, and direct region sums for arbitrary seeds.
//!
//! Closed forms divide by 5; the division is always checked and a remainder
//! is reported as [`Error::NotDivisible`].

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fib::{exact_div, FibKernel};
use crate::grid::{BoundaryConvention, Grid, GridIndex, SpinSeeds};

/// Index set of a grid sum bounded by `n`. `(i, j)` is the cell `H(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    /// `0 <= j < i <= n`
    LowerStrict,
    /// `0 <= i <= j <= n`
    UpperInclDiag,
    /// `0 <= j <= i <= n`
    LowerInclDiag,
    /// `0 <= i, j <= n`
    FullSquare,
}

impl Region {
    pub const ALL: [Region; 4] = [
        Region::LowerStrict,
        Region::UpperInclDiag,
        Region::LowerInclDiag,
        Region::FullSquare,
    ];

    pub fn contains(self, i: u64, j: u64) -> bool {
        match self {
            Region::LowerStrict => j < i,
            Region::UpperInclDiag => i <= j,
            Region::LowerInclDiag => j <= i,
            Region::FullSquare => true,
        }
    }

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            Region::LowerStrict => "lower-strict",
            Region::UpperInclDiag => "upper-incl",
            Region::LowerInclDiag => "triangle-incl",
            Region::FullSquare => "square",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Region {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Region::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| {
                format!("unknown region {s:?} (lower-strict, upper-incl, triangle-incl, square)")
            })
    }
}

/// `sum_{i=1..n} i G(i) = n G(n+2) - G(n+3) + G(3)` for `G = GFS(g0, g1)`.
pub fn weighted_gfs_sum_closed(
    kernel: &FibKernel,
    g0: &BigInt,
    g1: &BigInt,
    n: i64,
) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let term = |k: i64| kernel.gfs_term(g0, g1, k);
    Ok(BigInt::from(n) * term(n + 2)? - term(n + 3)? + term(3)?)
}

/// `m L_{m+3} - L_{m+4} + 2 F_{m+2}`, the common factor of both closed forms.
/// Always a multiple of 5.
pub fn fibonacci_sum_core(kernel: &FibKernel, m: i64) -> Result<BigInt> {
    if m < 0 {
        return Err(Error::NegativeIndex(m));
    }
    Ok(
        BigInt::from(m) * kernel.lucas(m + 3)? - kernel.lucas(m + 4)?
            + BigInt::from(2) * kernel.fib(m + 2)?,
    )
}

/// Sum of `F(i, j)` over `0 <= j <= i <= m`:
/// `(2/5)(m L_{m+3} - L_{m+4} + 2 F_{m+2}) + 2`.
pub fn triangle_sum_closed(kernel: &FibKernel, m: i64) -> Result<BigInt> {
    let core = fibonacci_sum_core(kernel, m)?;
    Ok(exact_div(core * 2, 5, "m*L_{m+3} - L_{m+4} + 2F_{m+2}")? + 2)
}

/// Sum of `F(i, j)` over the square `0 <= i, j <= m`:
/// `(4/5)(m L_{m+3} - L_{m+4} + 2 F_{m+2}) - F_{m+2} + 5`.
pub fn square_sum_closed(kernel: &FibKernel, m: i64) -> Result<BigInt> {
    let core = fibonacci_sum_core(kernel, m)?;
    Ok(exact_div(core * 4, 5, "m*L_{m+3} - L_{m+4} + 2F_{m+2}")? - kernel.fib(m + 2)? + 5)
}

/// Closed forms exist only for the Fibonacci seeds on the two regions below.
pub fn closed_form_sum(
    kernel: &FibKernel,
    seeds: &SpinSeeds,
    region: Region,
    n: i64,
) -> Option<Result<BigInt>> {
    if *seeds != SpinSeeds::fibonacci() {
        return None;
    }
    match region {
        Region::LowerInclDiag => Some(triangle_sum_closed(kernel, n)),
        Region::FullSquare => Some(square_sum_closed(kernel, n)),
        _ => None,
    }
}

fn check_cancel(cancel: Option<&AtomicBool>) -> Result<()> {
    match cancel {
        Some(flag) if flag.load(Ordering::Relaxed) => Err(Error::Cancelled),
        _ => Ok(()),
    }
}

fn check_n(grid: &Grid, n: i64) -> Result<u64> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let n = n as u64;
    if n > grid.bound() {
        return Err(Error::GridBound {
            m: n,
            n,
            bound: grid.bound(),
        });
    }
    Ok(n)
}

/// Visits every cell with `max(i, j) <= n` once, diagonal by diagonal.
fn for_each_cell(
    grid: &Grid,
    seeds: &SpinSeeds,
    n: u64,
    conv: BoundaryConvention,
    cancel: Option<&AtomicBool>,
    mut visit: impl FnMut(GridIndex, BigInt),
) -> Result<()> {
    let n = n as i64;
    for offset in -n..=n {
        check_cancel(cancel)?;
        let gap = offset.unsigned_abs();
        let len = (n as u64 - gap + 1) as usize;
        for (t, v) in grid.diagonal(seeds, offset, conv).take(len).enumerate() {
            let t = t as u64;
            let idx = if offset >= 0 {
                GridIndex::new(t + gap, t)
            } else {
                GridIndex::new(t, t + gap)
            };
            visit(idx, v);
        }
    }
    Ok(())
}

/// Direct sum of the recurrence grid over `region` with bound `n`.
pub fn region_sum(
    grid: &Grid,
    seeds: &SpinSeeds,
    region: Region,
    n: i64,
    conv: BoundaryConvention,
) -> Result<BigInt> {
    region_sum_cancellable(grid, seeds, region, n, conv, None)
}

/// [`region_sum`] that polls `cancel` once per diagonal.
pub fn region_sum_cancellable(
    grid: &Grid,
    seeds: &SpinSeeds,
    region: Region,
    n: i64,
    conv: BoundaryConvention,
    cancel: Option<&AtomicBool>,
) -> Result<BigInt> {
    let n = check_n(grid, n)?;
    let mut total = BigInt::zero();
    for_each_cell(grid, seeds, n, conv, cancel, |idx, v| {
        if region.contains(idx.m, idx.n) {
            total += v;
        }
    })?;
    Ok(total)
}

/// `[region_sum(n) for n in 0..count]`, computed in one pass over the grid.
pub fn sum_sequence(
    grid: &Grid,
    seeds: &SpinSeeds,
    region: Region,
    count: i64,
    conv: BoundaryConvention,
) -> Result<Vec<BigInt>> {
    sum_sequence_cancellable(grid, seeds, region, count, conv, None)
}

pub fn sum_sequence_cancellable(
    grid: &Grid,
    seeds: &SpinSeeds,
    region: Region,
    count: i64,
    conv: BoundaryConvention,
    cancel: Option<&AtomicBool>,
) -> Result<Vec<BigInt>> {
    if count < 1 {
        return Err(Error::SizeBound {
            size: count,
            min: 1,
            max: grid.bound() as i64 + 1,
        });
    }
    let last = check_n(grid, count - 1)?;
    // shells[k] collects the region's cells with max(i, j) == k
    let mut shells = vec![BigInt::zero(); count as usize];
    for_each_cell(grid, seeds, last, conv, cancel, |idx, v| {
        if region.contains(idx.m, idx.n) {
            shells[idx.m.max(idx.n) as usize] += v;
        }
    })?;
    let mut running = BigInt::zero();
    Ok(shells
        .into_iter()
        .map(|s| {
            running += s;
            running.clone()
        })
        .collect())
}
