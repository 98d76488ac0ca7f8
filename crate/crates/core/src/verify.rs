//! Property sweeps comparing every closed form against an independent oracle.
//!
//! Oracles here never call the fast-doubling kernel for the quantity under
//! test: Fibonacci values come from plain forward/backward iteration, grid
//! values from the diagonal recurrence, and sums from explicit loops.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::fib::{fast_doubling, FibKernel};
use crate::grid::{BoundaryConvention, DecompositionVariant, Grid, GridIndex, SpinSeeds};
use crate::sums::{
    fibonacci_sum_core, square_sum_closed, sum_sequence, triangle_sum_closed,
    weighted_gfs_sum_closed, Region,
};

/// Outcome of one property sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub checked: u64,
    /// First counterexample in sweep order.
    pub failure: Option<String>,
    /// Informational findings that do not affect the verdict.
    pub notes: Vec<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn with_note(mut self, note: String) -> Self {
        self.notes.push(note);
        self
    }
}

/// Fibonacci numbers on `[lo, hi]` by iteration only.
#[derive(Clone, Debug)]
pub struct NaiveFib {
    lo: i64,
    values: Vec<BigInt>,
}

impl NaiveFib {
    pub fn new(lo: i64, hi: i64) -> Self {
        let lo = lo.min(0);
        let hi = hi.max(1);
        let mut forward = vec![BigInt::zero(), BigInt::from(1)];
        for k in 2..=hi as usize {
            let next = &forward[k - 1] + &forward[k - 2];
            forward.push(next);
        }
        // F_n = F_{n+2} - F_{n+1}, walking down from F_1, F_0.
        let mut backward = Vec::new();
        let (mut f1, mut f0) = (BigInt::from(1), BigInt::zero());
        for _ in lo..0 {
            let prev = &f1 - &f0;
            f1 = std::mem::replace(&mut f0, prev.clone());
            backward.push(prev);
        }
        backward.reverse();
        backward.extend(forward);
        NaiveFib {
            lo,
            values: backward,
        }
    }

    pub fn get(&self, n: i64) -> &BigInt {
        &self.values[(n - self.lo) as usize]
    }
}

fn sweep<T>(
    name: &str,
    cases: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> Result<Option<String>>,
) -> PropertyResult {
    let mut checked = 0;
    let mut failure = None;
    for case in cases {
        checked += 1;
        match check(&case) {
            Ok(None) => {}
            Ok(Some(msg)) => {
                failure = Some(msg);
                break;
            }
            Err(e) => {
                failure = Some(format!("error: {e}"));
                break;
            }
        }
    }
    PropertyResult {
        name: name.to_owned(),
        checked,
        failure,
        notes: Vec::new(),
    }
}

/// Parallel sweep; the reported counterexample is the first in case order.
fn par_sweep<T: Sync>(
    name: &str,
    cases: &[T],
    check: impl Fn(&T) -> Result<Option<String>> + Sync,
) -> PropertyResult {
    let failure = cases.par_iter().find_map_first(|c| match check(c) {
        Ok(None) => None,
        Ok(Some(msg)) => Some(msg),
        Err(e) => Some(format!("error: {e}")),
    });
    PropertyResult {
        name: name.to_owned(),
        checked: cases.len() as u64,
        failure,
        notes: Vec::new(),
    }
}

fn cells(max: u64) -> impl Iterator<Item = (u64, u64)> {
    (0..=max).flat_map(move |m| (0..=max).map(move |n| (m, n)))
}

fn mismatch(what: impl fmt::Display, lhs: &BigInt, rhs: &BigInt) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: {lhs} != {rhs}"))
}

// ---------------------------------------------------------------- grid

/// Closed form of `F(m, n)` against both the recurrence and string reduction.
pub fn check_double_fib_closed(grid: &Grid, max: u64) -> PropertyResult {
    let seeds = SpinSeeds::fibonacci();
    let cases: Vec<(u64, u64)> = cells(max).collect();
    par_sweep(
        "double_fib = recurrence = string reduction",
        &cases,
        |&(m, n)| {
            let idx = GridIndex::new(m, n);
            let closed = grid.double_fib(m, n)?;
            let rec = grid.eval_recurrence(&seeds, idx, BoundaryConvention::BWins)?;
            let reduced = grid.eval_closed(&seeds, idx)?;
            Ok(mismatch(format!("F({m},{n}) vs recurrence"), &closed, &rec)
                .or_else(|| mismatch(format!("F({m},{n}) vs string reduction"), &closed, &reduced)))
        },
    )
}

pub fn check_double_fib_symmetry(grid: &Grid, max: u64) -> PropertyResult {
    let swapped = sweep("F(m,n) = F(n,m)", cells(max), |&(m, n)| {
        Ok(mismatch(
            format!("F({m},{n}) vs F({n},{m})"),
            &grid.double_fib(m, n)?,
            &grid.double_fib(n, m)?,
        ))
    });
    if !swapped.passed() {
        return swapped;
    }
    let cases = (0..=max).flat_map(|k| (0..=k / 2).map(move |i| (k, i)));
    let reflected = sweep("F(k,i) = F(k,k-i)", cases, |&(k, i)| {
        Ok(mismatch(
            format!("F({k},{i}) vs F({k},{})", k - i),
            &grid.double_fib(k, i)?,
            &grid.double_fib(k, k - i)?,
        ))
    });
    PropertyResult {
        name: "symmetry: F(m,n) = F(n,m) and F(k,i) = F(k,k-i)".into(),
        checked: swapped.checked + reflected.checked,
        failure: reflected.failure,
        notes: Vec::new(),
    }
}

fn seed_cells(max: u64) -> Vec<(SpinSeeds, u64, u64)> {
    SpinSeeds::small_sweep()
        .flat_map(|s| cells(max).map(move |(m, n)| (s.clone(), m, n)))
        .collect()
}

/// String reduction against the recurrence for all seeds in `{0..3}^4`.
pub fn check_spin_closed(grid: &Grid, max: u64) -> PropertyResult {
    let cases = seed_cells(max);
    par_sweep(
        "spin string reduction = recurrence (b-wins)",
        &cases,
        |(s, m, n)| {
            let idx = GridIndex::new(*m, *n);
            Ok(mismatch(
                format!("seeds [{s}] cell ({m},{n})"),
                &grid.eval_closed(s, idx)?,
                &grid.eval_recurrence(s, idx, BoundaryConvention::BWins)?,
            ))
        },
    )
}

fn off_diagonal_cases(max: u64) -> Vec<(SpinSeeds, u64, u64)> {
    seed_cells(max)
        .into_iter()
        .filter(|(_, m, n)| m.abs_diff(*n) >= 2)
        .collect()
}

/// Corrected decomposition against the recurrence wherever `|m - n| >= 2`.
pub fn check_decomposition(grid: &Grid, max: u64) -> PropertyResult {
    let cases = off_diagonal_cases(max);
    par_sweep(
        "corrected decomposition = recurrence",
        &cases,
        |(s, m, n)| {
            let idx = GridIndex::new(*m, *n);
            Ok(mismatch(
                format!("seeds [{s}] cell ({m},{n})"),
                &grid.decompose(s, idx, DecompositionVariant::Corrected)?,
                &grid.eval_recurrence(s, idx, BoundaryConvention::BWins)?,
            ))
        },
    )
}

/// The literal case-ii expression misses the true value by exactly
/// `(b - d) F_{m-2} F_{n-m}`; counts the cells where that gap is nonzero.
pub fn check_literal_gap(grid: &Grid, max: u64) -> PropertyResult {
    let cases: Vec<_> = off_diagonal_cases(max)
        .into_iter()
        .filter(|(_, m, n)| m < n)
        .collect();
    let naive = NaiveFib::new(-2, max as i64 + 2);
    let gaps: Vec<Result<(BigInt, BigInt)>> = cases
        .par_iter()
        .map(|(s, m, n)| {
            let idx = GridIndex::new(*m, *n);
            let literal = grid.decompose(s, idx, DecompositionVariant::Literal)?;
            let truth = grid.eval_recurrence(s, idx, BoundaryConvention::BWins)?;
            let predicted =
                (&s.b - &s.d) * naive.get(*m as i64 - 2) * naive.get(*n as i64 - *m as i64);
            Ok((literal - truth, predicted))
        })
        .collect();
    let mut diverging = 0u64;
    let mut failure = None;
    for ((s, m, n), gap) in cases.iter().zip(gaps) {
        match gap {
            Ok((actual, predicted)) => {
                if !actual.is_zero() {
                    diverging += 1;
                }
                if actual != predicted {
                    failure = Some(format!(
                        "seeds [{s}] cell ({m},{n}): gap {actual}, predicted {predicted}"
                    ));
                    break;
                }
                if (s.b == s.d || *m == 2) && !actual.is_zero() {
                    failure = Some(format!("seeds [{s}] cell ({m},{n}): expected no gap"));
                    break;
                }
            }
            Err(e) => {
                failure = Some(format!("error: {e}"));
                break;
            }
        }
    }
    PropertyResult {
        name: "literal case ii gap = (b-d) F_{m-2} F_{n-m}".into(),
        checked: cases.len() as u64,
        failure,
        notes: Vec::new(),
    }
    .with_note(format!(
        "literal case ii differs from the recurrence on {diverging} of {} cells with m <= n-2",
        cases.len()
    ))
}

/// The main diagonal is the GFS `(a, c)` under either convention.
pub fn check_diagonal(grid: &Grid, max: u64) -> PropertyResult {
    let cases: Vec<(SpinSeeds, u64)> = SpinSeeds::small_sweep()
        .flat_map(|s| (0..=max).map(move |m| (s.clone(), m)))
        .collect();
    par_sweep("H(m,m) = GFS(a,c)(m)", &cases, |(s, m)| {
        // iterate the diagonal GFS directly
        let (mut g0, mut g1) = (s.a.clone(), s.c.clone());
        for _ in 0..*m {
            let next = &g0 + &g1;
            g0 = std::mem::replace(&mut g1, next);
        }
        for conv in BoundaryConvention::ALL {
            let v = grid.eval_recurrence(s, GridIndex::new(*m, *m), conv)?;
            if let Some(msg) = mismatch(format!("seeds [{s}] H({m},{m}) {conv}"), &v, &g0) {
                return Ok(Some(msg));
            }
        }
        Ok(None)
    })
}

pub fn check_f_ab_recurrence(grid: &Grid, max: u64) -> PropertyResult {
    let cases: Vec<(i64, i64, u64, u64)> = (0..=3)
        .flat_map(|a| (0..=3).map(move |b| (a, b)))
        .flat_map(|(a, b)| cells(max).map(move |(m, n)| (a, b, m, n)))
        .collect();
    par_sweep(
        "F^b_a(m+2,n+2) = F^b_a(m+1,n+1) + F^b_a(m,n)",
        &cases,
        |&(a, b, m, n)| {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let lhs = grid.f_ab(&a, &b, m + 2, n + 2)?;
            let rhs = grid.f_ab(&a, &b, m + 1, n + 1)? + grid.f_ab(&a, &b, m, n)?;
            Ok(mismatch(format!("a={a} b={b} ({m},{n})"), &lhs, &rhs))
        },
    )
}

// ---------------------------------------------------------------- sums

/// Weighted GFS sum closed form against `sum i G(i)` for `g0, g1 in -3..=3`.
pub fn check_weighted_gfs(kernel: &FibKernel, max: u64) -> PropertyResult {
    let cases: Vec<(i64, i64)> = (-3..=3)
        .flat_map(|g0| (-3..=3).map(move |g1| (g0, g1)))
        .collect();
    let max = max.max(1) as i64;
    let result = par_sweep(
        "sum i G(i) = n G(n+2) - G(n+3) + G(3)",
        &cases,
        |&(g0, g1)| {
            let (g0, g1) = (BigInt::from(g0), BigInt::from(g1));
            let (mut prev, mut cur) = (g0.clone(), g1.clone());
            let mut direct = BigInt::zero();
            for n in 1..=max {
                // cur = G(n)
                direct += BigInt::from(n) * &cur;
                let closed = weighted_gfs_sum_closed(kernel, &g0, &g1, n)?;
                if let Some(msg) = mismatch(format!("g0={g0} g1={g1} n={n}"), &closed, &direct) {
                    return Ok(Some(msg));
                }
                let next = &prev + &cur;
                prev = std::mem::replace(&mut cur, next);
            }
            Ok(None)
        },
    );
    PropertyResult {
        checked: result.checked * max as u64,
        ..result
    }
}

/// Triangle and square closed forms against direct region sums of the grid.
pub fn check_grid_sums(grid: &Grid, max: u64) -> PropertyResult {
    let seeds = SpinSeeds::fibonacci();
    let count = max as i64 + 1;
    let bw = BoundaryConvention::BWins;
    let direct = [Region::LowerInclDiag, Region::FullSquare]
        .par_iter()
        .map(|&r| sum_sequence(grid, &seeds, r, count, bw))
        .collect::<Result<Vec<_>>>();
    let direct = match direct {
        Ok(d) => d,
        Err(e) => {
            return PropertyResult {
                name: "triangle/square closed forms = direct sums".into(),
                checked: 0,
                failure: Some(format!("error: {e}")),
                notes: Vec::new(),
            }
        }
    };
    let kernel = grid.kernel();
    sweep(
        "triangle/square closed forms = direct sums",
        0..count,
        |&m| {
            let tri = triangle_sum_closed(kernel, m)?;
            let sq = square_sum_closed(kernel, m)?;
            Ok(
                mismatch(format!("triangle m={m}"), &tri, &direct[0][m as usize])
                    .or_else(|| mismatch(format!("square m={m}"), &sq, &direct[1][m as usize])),
            )
        },
    )
}

/// `square = 2 triangle - sum_{i<=m} F_i`.
pub fn check_square_triangle_relation(kernel: &FibKernel, max: u64) -> PropertyResult {
    let naive = NaiveFib::new(0, max as i64);
    let mut diag = BigInt::zero();
    sweep("square = 2 triangle - diagonal", 0..=max as i64, |&m| {
        diag += naive.get(m);
        let lhs = square_sum_closed(kernel, m)?;
        let rhs = triangle_sum_closed(kernel, m)? * 2 - &diag;
        Ok(mismatch(format!("m={m}"), &lhs, &rhs))
    })
}

pub fn check_divisibility(kernel: &FibKernel, max: u64) -> PropertyResult {
    sweep(
        "5 | m L_{m+3} - L_{m+4} + 2 F_{m+2}",
        0..=max as i64,
        |&m| {
            let core = fibonacci_sum_core(kernel, m)?;
            let r = &core % BigInt::from(5);
            Ok((!r.is_zero()).then(|| format!("m={m}: remainder {r}")))
        },
    )
}

/// Lower-incl sums split into lower-strict plus the GFS `(a, c)` diagonal.
pub fn check_diagonal_split(grid: &Grid, max: u64) -> PropertyResult {
    let seeds: Vec<SpinSeeds> = crate::oeis::table_cells()
        .into_iter()
        .map(|c| c.seeds)
        .chain([SpinSeeds::new(2, 1, 3, 4), SpinSeeds::new(-3, 5, 0, 2)])
        .collect();
    let cases: Vec<(SpinSeeds, BoundaryConvention)> = seeds
        .into_iter()
        .flat_map(|s| BoundaryConvention::ALL.map(|c| (s.clone(), c)))
        .collect();
    let count = max as i64 + 1;
    par_sweep(
        "lower-incl = lower-strict + diagonal GFS(a,c)",
        &cases,
        |(s, conv)| {
            let incl = sum_sequence(grid, s, Region::LowerInclDiag, count, *conv)?;
            let strict = sum_sequence(grid, s, Region::LowerStrict, count, *conv)?;
            let (mut g0, mut g1) = (s.a.clone(), s.c.clone());
            let mut diag = BigInt::zero();
            for m in 0..count as usize {
                diag += &g0;
                let next = &g0 + &g1;
                g0 = std::mem::replace(&mut g1, next);
                let rhs = &strict[m] + &diag;
                if let Some(msg) = mismatch(format!("seeds [{s}] {conv} m={m}"), &incl[m], &rhs) {
                    return Ok(Some(msg));
                }
            }
            Ok(None)
        },
    )
}

// ---------------------------------------------------------------- scalar identities

pub fn check_fib_recurrence(kernel: &FibKernel, max: u64) -> PropertyResult {
    let max = max as i64;
    sweep("F(n+2) = F(n+1) + F(n)", -max..=max, |&n| {
        let rhs = kernel.fib(n + 1)? + kernel.fib(n)?;
        Ok(mismatch(format!("n={n}"), &kernel.fib(n + 2)?, &rhs))
    })
}

pub fn check_negative_extension(kernel: &FibKernel, max: u64) -> PropertyResult {
    let naive = NaiveFib::new(-(max as i64), 0);
    sweep("F(-n) matches backward iteration", 0..=max as i64, |&n| {
        Ok(mismatch(format!("n={n}"), &kernel.fib(-n)?, naive.get(-n)))
    })
}

pub fn check_lucas_identity(kernel: &FibKernel, max: u64) -> PropertyResult {
    sweep("L(n-1) + L(n+1) = 5 F(n)", 1..=max as i64, |&n| {
        let lhs = kernel.lucas(n - 1)? + kernel.lucas(n + 1)?;
        Ok(mismatch(format!("n={n}"), &lhs, &(kernel.fib(n)? * 5)))
    })
}

pub fn check_addition_law(kernel: &FibKernel, max: u64) -> PropertyResult {
    let max = max as i64;
    let naive = NaiveFib::new(-1, max + 1);
    let cases = (0..=max).flat_map(|i| (0..=i).map(move |j| (i, j)));
    sweep("F(i) = F(j) F(i-j+1) + F(j-1) F(i-j)", cases, |&(i, j)| {
        let rhs =
            kernel.fib(j)? * kernel.fib(i - j + 1)? + kernel.fib(j - 1)? * kernel.fib(i - j)?;
        Ok(mismatch(format!("i={i} j={j}"), naive.get(i), &rhs))
    })
}

pub fn check_partial_sums(kernel: &FibKernel, max: u64) -> PropertyResult {
    let naive = NaiveFib::new(0, max as i64);
    let mut acc = BigInt::zero();
    sweep("sum F(i) = F(n+2) - 1", 1..=max as i64, |&n| {
        acc += naive.get(n);
        Ok(mismatch(format!("n={n}"), &acc, &(kernel.fib(n + 2)? - 1)))
    })
}

pub fn check_weighted_fib(kernel: &FibKernel, max: u64) -> PropertyResult {
    let naive = NaiveFib::new(0, max as i64);
    let mut acc = BigInt::zero();
    sweep("sum i F(i) = n F(n+2) - F(n+3) + 2", 1..=max as i64, |&n| {
        acc += naive.get(n) * n;
        Ok(mismatch(
            format!("n={n}"),
            &kernel.weighted_fib_sum(n)?,
            &acc,
        ))
    })
}

pub fn check_fast_doubling(max: u64) -> PropertyResult {
    let naive = NaiveFib::new(0, max as i64 + 1);
    sweep("fast doubling = iteration", 0..=max as i64, |&n| {
        let (f, g) = fast_doubling(n as u64);
        Ok(mismatch(format!("F({n})"), &f, naive.get(n))
            .or_else(|| mismatch(format!("F({})", n + 1), &g, naive.get(n + 1))))
    })
}

pub fn check_convolution(kernel: &FibKernel, max: u64) -> PropertyResult {
    let naive = NaiveFib::new(0, max as i64);
    sweep(
        "sum F(j) F(i-j) = (i L(i) - F(i)) / 5",
        0..=max as i64,
        |&i| {
            let direct: BigInt = (0..=i).map(|j| naive.get(j) * naive.get(i - j)).sum();
            Ok(mismatch(
                format!("i={i}"),
                &kernel.fib_convolution(i)?,
                &direct,
            ))
        },
    )
}

pub fn check_gfs_recurrence(kernel: &FibKernel, max: u64) -> PropertyResult {
    let cases = (-3..=3i64)
        .flat_map(|g0| (-3..=3i64).map(move |g1| (g0, g1)))
        .flat_map(|(g0, g1)| (0..=max as i64).map(move |n| (g0, g1, n)));
    sweep("G(n+2) = G(n+1) + G(n)", cases, |&(g0, g1, n)| {
        let (g0, g1) = (BigInt::from(g0), BigInt::from(g1));
        let lhs = kernel.gfs_term(&g0, &g1, n + 2)?;
        let rhs = kernel.gfs_term(&g0, &g1, n + 1)? + kernel.gfs_term(&g0, &g1, n)?;
        Ok(mismatch(format!("g0={g0} g1={g1} n={n}"), &lhs, &rhs))
    })
}

// ---------------------------------------------------------------- suites

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Closed form of the double-recurrence Fibonacci numbers.
    ClosedForm,
    /// String reduction and the two-kernel decomposition for spin functions.
    Decomposition,
    /// Weighted GFS sums.
    WeightedSums,
    /// Triangle and square sums.
    GridSums,
    /// Scalar Fibonacci/Lucas identities.
    Identities,
    All,
}

impl Suite {
    pub const NAMES: [(&'static str, Suite); 6] = [
        ("prop1", Suite::ClosedForm),
        ("prop3", Suite::Decomposition),
        ("prop4", Suite::WeightedSums),
        ("prop5", Suite::GridSums),
        ("identities", Suite::Identities),
        ("all", Suite::All),
    ];

    pub fn name(self) -> &'static str {
        Suite::NAMES
            .iter()
            .find(|(_, s)| *s == self)
            .map(|(n, _)| *n)
            .expect("every suite is named")
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::NAMES
            .iter()
            .find(|(n, _)| *n == s)
            .map(|(_, suite)| *suite)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Runs a suite with every sweep bounded by `max`.
pub fn run_suite(grid: &Grid, suite: Suite, max: u64) -> Vec<PropertyResult> {
    let kernel = grid.kernel();
    match suite {
        Suite::ClosedForm => vec![
            check_double_fib_closed(grid, max),
            check_double_fib_symmetry(grid, max),
        ],
        Suite::Decomposition => vec![
            check_spin_closed(grid, max),
            check_decomposition(grid, max),
            check_literal_gap(grid, max),
            check_diagonal(grid, max),
            check_f_ab_recurrence(grid, max),
        ],
        Suite::WeightedSums => vec![check_weighted_gfs(kernel, max)],
        Suite::GridSums => vec![
            check_grid_sums(grid, max),
            check_square_triangle_relation(kernel, max),
            check_divisibility(kernel, max),
            check_diagonal_split(grid, max),
        ],
        Suite::Identities => vec![
            check_fib_recurrence(kernel, max),
            check_negative_extension(kernel, max),
            check_lucas_identity(kernel, max),
            check_addition_law(kernel, max),
            check_partial_sums(kernel, max),
            check_weighted_fib(kernel, max),
            check_fast_doubling(max),
            check_convolution(kernel, max),
            check_gfs_recurrence(kernel, max),
        ],
        Suite::All => [
            Suite::ClosedForm,
            Suite::Decomposition,
            Suite::WeightedSums,
            Suite::GridSums,
            Suite::Identities,
        ]
        .into_iter()
        .flat_map(|s| run_suite(grid, s, max))
        .collect(),
    }
}
