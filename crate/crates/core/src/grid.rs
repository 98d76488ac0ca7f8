//! The double-recurrence grid `H(m, n) = H(m-1, n-1) + H(m-2, n-2)`.
//!
//! A spin function is fixed by four seeds `[a, b, c, d]`:
//!
//! * row 0 and column 0 carry the GFS `(a, b)`,
//! * row 1 and column 1 carry the GFS `(d, c)`,
//! * the main diagonal is then forced to be the GFS `(a, c)`.
//!
//! The cells `(1, 0)` and `(0, 1)` sit on both an axis string (value `b`) and
//! a 1-string (value `d`). [`BoundaryConvention`] picks which one the grid
//! stores there. With [`BoundaryConvention::BWins`] `d` is only a virtual seed
//! of the 1-strings, and that is the convention under which the string
//! reduction in [`Grid::eval_closed`] agrees with the recurrence everywhere.
//!
//! Every cell only depends on the cells of its own diagonal, so the recurrence
//! evaluator walks one diagonal from the boundary instead of filling a table.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fib::FibKernel;

/// Default per-axis bound for the recurrence evaluator.
pub const DEFAULT_GRID_BOUND: u64 = 2000;
/// Largest grid that [`Grid::render`] will materialize.
pub const MAX_RENDER_SIZE: u64 = 500;

/// The quadruple `[a, b, c, d]` seeding a spin function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpinSeeds {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl SpinSeeds {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        SpinSeeds {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    /// Seeds `[0, 1, 1, 1]`, giving the double-recurrence Fibonacci numbers.
    pub fn fibonacci() -> Self {
        SpinSeeds::new(0, 1, 1, 1)
    }

    /// Seeds of the row-0 / column-0 string, as `(G(0), G(1))`.
    pub fn axis_string(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }

    /// Seeds of the row-1 / column-1 string.
    pub fn one_string(&self) -> (&BigInt, &BigInt) {
        (&self.d, &self.c)
    }

    /// Seeds of the main diagonal.
    pub fn diagonal_string(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.c)
    }

    /// All 256 quadruples with entries in `0..=3`, in lexicographic order.
    pub fn small_sweep() -> impl Iterator<Item = SpinSeeds> {
        (0..256u32).map(|k| {
            let digit = |shift: u32| i64::from((k >> shift) & 3);
            SpinSeeds::new(digit(6), digit(4), digit(2), digit(0))
        })
    }
}

/// Serialized as `["a", "b", "c", "d"]` with decimal-string entries.
impl Serialize for SpinSeeds {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(4))?;
        for v in [&self.a, &self.b, &self.c, &self.d] {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }
}

impl fmt::Display for SpinSeeds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for SpinSeeds {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(format!(
                "expected four comma-separated integers a,b,c,d, got {s:?}"
            ));
        }
        let mut values = Vec::with_capacity(4);
        for p in parts {
            let v: BigInt = p
                .parse()
                .map_err(|_| format!("seed {p:?} is not an integer"))?;
            values.push(v);
        }
        let d = values.pop().unwrap();
        let c = values.pop().unwrap();
        let b = values.pop().unwrap();
        let a = values.pop().unwrap();
        Ok(SpinSeeds { a, b, c, d })
    }
}

/// A grid cell `(m, n)`; `m` is the horizontal coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridIndex {
    pub m: u64,
    pub n: u64,
}

impl GridIndex {
    pub fn new(m: u64, n: u64) -> Self {
        GridIndex { m, n }
    }
}

/// Value stored at the conflicting cells `(1, 0)` and `(0, 1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryConvention {
    /// The axis strings win: both cells hold `b`.
    #[default]
    BWins,
    /// The 1-string seeds win: both cells hold `d`.
    DWins,
    /// No conflict: the `m` axis carries `GFS(a, b)` and `GFS(d, c)`, the `n`
    /// axis carries `GFS(a, d)` and `GFS(b, c)`, so `(1, 0) = b` and
    /// `(0, 1) = d`. Cells with `n > m` are those of the b-wins grid for the
    /// seeds `[a, d, c, b]`.
    Crossed,
}

impl BoundaryConvention {
    /// The two conventions that keep the grid symmetric.
    pub const ALL: [BoundaryConvention; 2] = [BoundaryConvention::BWins, BoundaryConvention::DWins];

    pub const EVERY: [BoundaryConvention; 3] = [
        BoundaryConvention::BWins,
        BoundaryConvention::DWins,
        BoundaryConvention::Crossed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundaryConvention::BWins => "b-wins",
            BoundaryConvention::DWins => "d-wins",
            BoundaryConvention::Crossed => "crossed",
        }
    }

    /// Whether `H(m, n) = H(n, m)` for every seed quadruple.
    pub fn is_symmetric(self) -> bool {
        self != BoundaryConvention::Crossed
    }

    /// Seed strings governing cells on the `n > m` side (when `upper`) or
    /// the `n <= m` side, plus the value of the cell next to the corner.
    fn strings(self, seeds: &SpinSeeds, upper: bool) -> (&BigInt, &BigInt, &BigInt) {
        match (self, upper) {
            (BoundaryConvention::Crossed, true) => (&seeds.d, &seeds.b, &seeds.d),
            (BoundaryConvention::DWins, _) => (&seeds.b, &seeds.d, &seeds.d),
            _ => (&seeds.b, &seeds.d, &seeds.b),
        }
    }
}

impl fmt::Display for BoundaryConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which case-ii expression [`Grid::decompose`] uses when `m <= n - 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionVariant {
    /// `F^c_{a+b}(n-1, m) + F^d_b(n-2, m)`, the mirror image of case i.
    #[default]
    Corrected,
    /// `F^c_{a+d}(n-1, m) + F^b_d(n-2, m)`. Off by `(b-d) F_{m-2} F_{n-m}`.
    Literal,
}

/// Iterates a GFS from its two seeds without touching the Fibonacci kernel.
fn gfs_iterate(g0: &BigInt, g1: &BigInt, n: u64) -> BigInt {
    if n == 0 {
        return g0.clone();
    }
    let mut prev = g0.clone();
    let mut cur = g1.clone();
    for _ in 1..n {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Walks one diagonal of the grid by the two-step recurrence.
///
/// Yields the diagonal's cells in order of increasing `min(m, n)`, starting at
/// the boundary.
#[derive(Clone, Debug)]
pub struct DiagonalWalk {
    pending: [Option<BigInt>; 2],
    prev: BigInt,
    cur: BigInt,
    started: bool,
}

impl DiagonalWalk {
    fn new(first: BigInt, second: BigInt) -> Self {
        DiagonalWalk {
            pending: [Some(first), Some(second)],
            prev: BigInt::zero(),
            cur: BigInt::zero(),
            started: false,
        }
    }
}

impl Iterator for DiagonalWalk {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        if !self.started {
            if let Some(v) = self.pending[0].take() {
                self.prev = v.clone();
                return Some(v);
            }
            let v = self.pending[1].take().expect("second seed");
            self.cur = v.clone();
            self.started = true;
            return Some(v);
        }
        let next = &self.prev + &self.cur;
        self.prev = std::mem::replace(&mut self.cur, next.clone());
        Some(next)
    }
}

/// Grid evaluator with configurable bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    kernel: FibKernel,
    bound: u64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            kernel: FibKernel::default(),
            bound: DEFAULT_GRID_BOUND,
        }
    }
}

fn to_index(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::IndexOutOfBounds {
        index: i64::MAX,
        max: v,
    })
}

impl Grid {
    pub fn new(kernel: FibKernel, bound: u64) -> Self {
        Grid { kernel, bound }
    }

    pub fn kernel(&self) -> &FibKernel {
        &self.kernel
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    fn check_bound(&self, idx: GridIndex) -> Result<()> {
        if idx.m > self.bound || idx.n > self.bound {
            return Err(Error::GridBound {
                m: idx.m,
                n: idx.n,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// Double-recurrence Fibonacci number `F(m, n)` in closed form:
    /// `F_k F_{|m-n|+2} + F_{k-1} F_{|m-n|}` with `k = min(m, n)`.
    pub fn double_fib(&self, m: u64, n: u64) -> Result<BigInt> {
        let k = to_index(m.min(n))?;
        let gap = to_index(m.abs_diff(n))?;
        let f = &self.kernel;
        Ok(f.fib(k)? * f.fib(gap + 2)? + f.fib(k - 1)? * f.fib(gap)?)
    }

    /// Value of a cell with `min(m, n) <= 1`, from the seed strings alone.
    fn boundary_cell(seeds: &SpinSeeds, m: u64, n: u64, conv: BoundaryConvention) -> BigInt {
        let (lo, hi) = (m.min(n), m.max(n));
        debug_assert!(lo <= 1);
        let (b, d, corner) = conv.strings(seeds, n > m);
        match (lo, hi) {
            (0, 0) => seeds.a.clone(),
            (0, 1) => corner.clone(),
            (0, x) => gfs_iterate(&seeds.a, b, x),
            (_, x) => gfs_iterate(d, &seeds.c, x),
        }
    }

    /// Walks the diagonal `m - n = offset` from the boundary outwards.
    pub fn diagonal(
        &self,
        seeds: &SpinSeeds,
        offset: i64,
        conv: BoundaryConvention,
    ) -> DiagonalWalk {
        let gap = offset.unsigned_abs();
        let (first, second) = if offset >= 0 {
            (
                Self::boundary_cell(seeds, gap, 0, conv),
                Self::boundary_cell(seeds, gap + 1, 1, conv),
            )
        } else {
            (
                Self::boundary_cell(seeds, 0, gap, conv),
                Self::boundary_cell(seeds, 1, gap + 1, conv),
            )
        };
        DiagonalWalk::new(first, second)
    }

    /// `H(m, n)` by walking the cell's diagonal with the recurrence.
    pub fn eval_recurrence(
        &self,
        seeds: &SpinSeeds,
        idx: GridIndex,
        conv: BoundaryConvention,
    ) -> Result<BigInt> {
        self.check_bound(idx)?;
        let (lo, hi) = (idx.m.min(idx.n), idx.m.max(idx.n));
        if lo <= 1 {
            return Ok(Self::boundary_cell(seeds, idx.m, idx.n, conv));
        }
        let offset = to_index(hi - lo)?;
        let offset = if idx.n > idx.m { -offset } else { offset };
        Ok(self
            .diagonal(seeds, offset, conv)
            .nth(lo as usize)
            .expect("diagonal walk is infinite"))
    }

    /// `H(m, n)` by string reduction: `F_k G_{dc}(|m-n|+1) + F_{k-1} G_{ab}(|m-n|)`
    /// with `k = min(m, n)`, each GFS term expanded over Fibonacci numbers.
    ///
    /// Matches [`Grid::eval_recurrence`] under [`BoundaryConvention::BWins`]
    /// on every cell.
    pub fn eval_closed(&self, seeds: &SpinSeeds, idx: GridIndex) -> Result<BigInt> {
        let f = &self.kernel;
        let k = to_index(idx.m.min(idx.n))?;
        let gap = to_index(idx.m.abs_diff(idx.n))?;
        let one = f.gfs_term(&seeds.d, &seeds.c, gap + 1)?;
        let axis = f.gfs_term(&seeds.a, &seeds.b, gap)?;
        Ok(f.fib(k)? * one + f.fib(k - 1)? * axis)
    }

    /// `F^b_a(m, n) = b F_n F_{|m-n|+2} + a F_{n-1} F_{|m-n|}`.
    pub fn f_ab(&self, a: &BigInt, b: &BigInt, m: u64, n: u64) -> Result<BigInt> {
        let f = &self.kernel;
        let n_i = to_index(n)?;
        let gap = to_index(m.abs_diff(n))?;
        Ok(b * f.fib(n_i)? * f.fib(gap + 2)? + a * f.fib(n_i - 1)? * f.fib(gap)?)
    }

    /// Splits `H(m, n)` into two `F^b_a` kernels. Requires `|m - n| >= 2`;
    /// near-diagonal cells should go through [`Grid::eval_closed`].
    pub fn decompose(
        &self,
        seeds: &SpinSeeds,
        idx: GridIndex,
        variant: DecompositionVariant,
    ) -> Result<BigInt> {
        let GridIndex { m, n } = idx;
        if m.abs_diff(n) < 2 {
            return Err(Error::Domain(format!(
                "decomposition requires |m - n| >= 2, got (m, n) = ({m}, {n})"
            )));
        }
        let SpinSeeds { a, b, c, d } = seeds;
        if n + 2 <= m {
            return Ok(self.f_ab(&(a + b), c, m - 1, n)? + self.f_ab(b, d, m - 2, n)?);
        }
        match variant {
            DecompositionVariant::Corrected => {
                Ok(self.f_ab(&(a + b), c, n - 1, m)? + self.f_ab(b, d, n - 2, m)?)
            }
            DecompositionVariant::Literal => {
                Ok(self.f_ab(&(a + d), c, n - 1, m)? + self.f_ab(d, b, n - 2, m)?)
            }
        }
    }

    /// Predicted `Literal - true` difference for `m <= n - 2`:
    /// `(b - d) F_{m-2} F_{n-m}`.
    pub fn literal_gap(&self, seeds: &SpinSeeds, idx: GridIndex) -> Result<BigInt> {
        let m = to_index(idx.m)?;
        let n = to_index(idx.n)?;
        Ok((&seeds.b - &seeds.d) * self.kernel.fib(m - 2)? * self.kernel.fib(n - m)?)
    }

    /// The `(size+1) x (size+1)` grid as `rows[n][m]`: row 0 is the bottom
    /// row of the usual picture.
    pub fn render(
        &self,
        seeds: &SpinSeeds,
        size: i64,
        conv: BoundaryConvention,
    ) -> Result<Vec<Vec<BigInt>>> {
        if !(1..=MAX_RENDER_SIZE as i64).contains(&size) {
            return Err(Error::SizeBound {
                size,
                min: 1,
                max: MAX_RENDER_SIZE as i64,
            });
        }
        let side = size as usize + 1;
        let mut rows = vec![vec![BigInt::zero(); side]; side];
        for offset in -(size)..=size {
            let gap = offset.unsigned_abs() as usize;
            for (t, v) in self
                .diagonal(seeds, offset, conv)
                .take(side - gap)
                .enumerate()
            {
                let (m, n) = if offset >= 0 {
                    (t + gap, t)
                } else {
                    (t, t + gap)
                };
                rows[n][m] = v;
            }
        }
        Ok(rows)
    }
}

pub fn double_fib(m: u64, n: u64) -> Result<BigInt> {
    Grid::default().double_fib(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ix(m: u64, n: u64) -> GridIndex {
        GridIndex::new(m, n)
    }

    /// The first 8x8 double-recurrence Fibonacci numbers, top row first.
    pub(crate) const REFERENCE_GRID: [[i64; 8]; 8] = [
        [13, 21, 18, 19, 19, 18, 21, 13],
        [8, 13, 11, 12, 11, 13, 8, 21],
        [5, 8, 7, 7, 8, 5, 13, 18],
        [3, 5, 4, 5, 3, 8, 11, 19],
        [2, 3, 3, 2, 5, 7, 12, 19],
        [1, 2, 1, 3, 4, 7, 11, 18],
        [1, 1, 2, 3, 5, 8, 13, 21],
        [0, 1, 1, 2, 3, 5, 8, 13],
    ];

    #[test]
    fn crossed_boundary_has_no_conflict() {
        let g = Grid::default();
        let s: SpinSeeds = "2,1,3,4".parse().unwrap();
        let cr = BoundaryConvention::Crossed;
        assert_eq!(g.eval_recurrence(&s, ix(1, 0), cr).unwrap(), big(1));
        assert_eq!(g.eval_recurrence(&s, ix(0, 1), cr).unwrap(), big(4));
        for k in 0..12 {
            assert_eq!(
                g.eval_recurrence(&s, ix(0, k), cr).unwrap(),
                gfs_iterate(&s.a, &s.d, k)
            );
            assert_eq!(
                g.eval_recurrence(&s, ix(1, k), cr).unwrap(),
                gfs_iterate(&s.b, &s.c, k)
            );
            assert_eq!(
                g.eval_recurrence(&s, ix(k, 0), cr).unwrap(),
                gfs_iterate(&s.a, &s.b, k)
            );
            assert_eq!(
                g.eval_recurrence(&s, ix(k, 1), cr).unwrap(),
                gfs_iterate(&s.d, &s.c, k)
            );
        }
    }

    #[test]
    fn crossed_upper_side_is_swapped_b_wins() {
        let g = Grid::default();
        for s in SpinSeeds::small_sweep() {
            let swapped = SpinSeeds::new(s.a.clone(), s.d.clone(), s.c.clone(), s.b.clone());
            for m in 0..14 {
                for n in 0..14 {
                    let (src, at) = if n > m {
                        (&swapped, ix(m, n))
                    } else {
                        (&s, ix(m, n))
                    };
                    assert_eq!(
                        g.eval_recurrence(&s, at, BoundaryConvention::Crossed)
                            .unwrap(),
                        g.eval_recurrence(src, at, BoundaryConvention::BWins)
                            .unwrap(),
                        "seeds {s} at ({m},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn double_fib_examples() {
        assert_eq!(double_fib(7, 4).unwrap(), big(19));
        assert_eq!(double_fib(0, 0).unwrap(), big(0));
        assert_eq!(double_fib(6, 3).unwrap(), big(12));
        assert_eq!(double_fib(5, 5).unwrap(), big(5));
    }

    #[test]
    fn recurrence_examples() {
        let g = Grid::default();
        let bw = BoundaryConvention::BWins;
        assert_eq!(
            g.eval_recurrence(&SpinSeeds::fibonacci(), ix(7, 4), bw)
                .unwrap(),
            big(19)
        );
        let s = SpinSeeds::new(2, 1, 3, 4);
        assert_eq!(g.eval_recurrence(&s, ix(4, 2), bw).unwrap(), big(13));
        for conv in BoundaryConvention::ALL {
            assert_eq!(g.eval_recurrence(&s, ix(0, 0), conv).unwrap(), big(2));
        }
        assert_eq!(
            g.eval_recurrence(&s, ix(1, 0), BoundaryConvention::DWins)
                .unwrap(),
            big(4)
        );
        assert_eq!(
            g.eval_recurrence(&s, ix(0, 1), BoundaryConvention::BWins)
                .unwrap(),
            big(1)
        );
    }

    #[test]
    fn recurrence_respects_bound() {
        let g = Grid::new(FibKernel::default(), 10);
        let s = SpinSeeds::fibonacci();
        assert!(g
            .eval_recurrence(&s, ix(10, 10), BoundaryConvention::BWins)
            .is_ok());
        assert!(matches!(
            g.eval_recurrence(&s, ix(11, 3), BoundaryConvention::BWins),
            Err(Error::GridBound { .. })
        ));
    }

    #[test]
    fn closed_examples() {
        let g = Grid::default();
        let s = SpinSeeds::new(2, 1, 3, 4);
        assert_eq!(g.eval_closed(&s, ix(4, 2)).unwrap(), big(13));
        assert_eq!(g.eval_closed(&s, ix(2, 5)).unwrap(), big(21));
        assert_eq!(
            g.eval_closed(&SpinSeeds::fibonacci(), ix(7, 4)).unwrap(),
            big(19)
        );
    }

    #[test]
    fn f_ab_examples() {
        let g = Grid::default();
        assert_eq!(g.f_ab(&big(1), &big(1), 6, 4).unwrap(), big(11));
        assert_eq!(g.f_ab(&big(1), &big(1), 5, 4).unwrap(), big(8));
        for m in 0..20u64 {
            let expected = big(7) * crate::fib::fib(m as i64).unwrap();
            assert_eq!(g.f_ab(&big(7), &big(-3), m, 0).unwrap(), expected);
        }
    }

    #[test]
    fn decompose_examples() {
        let g = Grid::default();
        let s = SpinSeeds::new(2, 1, 3, 4);
        assert_eq!(g.f_ab(&big(3), &big(3), 3, 2).unwrap(), big(9));
        assert_eq!(g.f_ab(&big(1), &big(4), 2, 2).unwrap(), big(4));
        assert_eq!(
            g.decompose(&s, ix(4, 2), DecompositionVariant::Corrected)
                .unwrap(),
            big(13)
        );
        assert_eq!(
            g.decompose(&s, ix(3, 5), DecompositionVariant::Corrected)
                .unwrap(),
            big(23)
        );
        assert_eq!(
            g.decompose(&s, ix(3, 5), DecompositionVariant::Literal)
                .unwrap(),
            big(20)
        );
        assert_eq!(g.literal_gap(&s, ix(3, 5)).unwrap(), big(-3));
    }

    #[test]
    fn decompose_rejects_near_diagonal() {
        let g = Grid::default();
        let s = SpinSeeds::fibonacci();
        for (m, n) in [(3, 3), (4, 3), (3, 4), (0, 1), (0, 0)] {
            assert!(matches!(
                g.decompose(&s, ix(m, n), DecompositionVariant::Corrected),
                Err(Error::Domain(_))
            ));
        }
    }

    #[test]
    fn render_matches_reference_grid() {
        let g = Grid::default();
        let rows = g
            .render(&SpinSeeds::fibonacci(), 7, BoundaryConvention::BWins)
            .unwrap();
        for (k, expected_row) in REFERENCE_GRID.iter().enumerate() {
            let n = 7 - k;
            let got: Vec<BigInt> = rows[n].clone();
            let want: Vec<BigInt> = expected_row.iter().map(|&v| big(v)).collect();
            assert_eq!(got, want, "row n = {n}");
        }
    }

    #[test]
    fn render_small_and_bounds() {
        let g = Grid::default();
        let rows = g
            .render(&SpinSeeds::fibonacci(), 1, BoundaryConvention::BWins)
            .unwrap();
        assert_eq!(rows, vec![vec![big(0), big(1)], vec![big(1), big(1)]]);
        let s = SpinSeeds::new(5, 6, 7, 8);
        let rows = g.render(&s, 1, BoundaryConvention::BWins).unwrap();
        assert_eq!(rows, vec![vec![big(5), big(6)], vec![big(6), big(7)]]);
        let rows = g.render(&s, 1, BoundaryConvention::DWins).unwrap();
        assert_eq!(rows, vec![vec![big(5), big(8)], vec![big(8), big(7)]]);
        assert!(g.render(&s, 0, BoundaryConvention::BWins).is_err());
        assert!(g.render(&s, 501, BoundaryConvention::BWins).is_err());
    }

    #[test]
    fn seeds_parse() {
        let s: SpinSeeds = "2, 1,3,-4".parse().unwrap();
        assert_eq!(s, SpinSeeds::new(2, 1, 3, -4));
        assert_eq!(s.to_string(), "2,1,3,-4");
        assert!("x".parse::<SpinSeeds>().is_err());
        assert!("1,2,3".parse::<SpinSeeds>().is_err());
        assert!("1,2,3,z".parse::<SpinSeeds>().is_err());
        assert_eq!(SpinSeeds::small_sweep().count(), 256);
    }

    #[test]
    fn f_ab_is_a_double_recurrence() {
        let g = Grid::default();
        for a in 0..=3 {
            for b in 0..=3 {
                let (a, b) = (big(a), big(b));
                for m in 0..=100u64 {
                    for n in 0..=100u64 {
                        let lhs = g.f_ab(&a, &b, m + 2, n + 2).unwrap();
                        let rhs =
                            g.f_ab(&a, &b, m + 1, n + 1).unwrap() + g.f_ab(&a, &b, m, n).unwrap();
                        assert_eq!(lhs, rhs, "a={a} b={b} m={m} n={n}");
                    }
                }
            }
        }
    }
}
