//! The table of seed quadruples whose region sums are catalogued in the OEIS,
//! and the machinery that checks each entry against sequence data.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{BoundaryConvention, Grid, SpinSeeds};
use crate::oeis::bfile::{ANumber, SequenceRecord};
use crate::oeis::fetch::{OeisClient, DEFAULT_PARALLELISM};
use crate::sums::{sum_sequence, Region};

/// Shifts tried when the claimed one does not fit.
pub const SHIFT_SCAN: std::ops::RangeInclusive<i64> = -3..=12;
/// Fewest overlapping terms that count as evidence either way.
pub const MIN_OVERLAP: usize = 5;
pub const MIN_COUNT: i64 = 5;

/// One populated table entry: the sum of `H` over `region` at bound `n`
/// is claimed to equal `anumber(n + shift)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub row: usize,
    pub seeds: SpinSeeds,
    pub region: Region,
    pub anumber: ANumber,
    pub claimed_shift: i64,
}

const COLUMNS: [Region; 3] = [
    Region::LowerStrict,
    Region::UpperInclDiag,
    Region::FullSquare,
];

type Entry = Option<(&'static str, i64)>;

/// Rows as printed: seeds, then the lower-strict, upper-incl and square columns.
const TABLE: [([i64; 4], [Entry; 3]); 14] = [
    (
        [0, 0, 0, 1],
        [
            Some(("A006478", 0)),
            Some(("A001629", 1)),
            Some(("A006478", 1)),
        ],
    ),
    (
        [0, 0, 1, 0],
        [Some(("A002940", -2)), Some(("A006478", 1)), None],
    ),
    ([0, 0, 1, 1], [None, Some(("A122491", 2)), None]),
    (
        [0, 1, 0, 0],
        [
            Some(("A001629", 1)),
            Some(("A006478", 0)),
            Some(("A006478", 1)),
        ],
    ),
    (
        [0, 1, 0, 1],
        [
            Some(("A006478", 1)),
            Some(("A006478", 1)),
            Some(("A178523", 1)),
        ],
    ),
    (
        [0, 1, 1, 0],
        [Some(("A014286", 0)), Some(("A002940", -1)), None],
    ),
    ([0, 1, 1, 1], [None, Some(("A178523", 1)), None]),
    (
        [1, 0, 0, 0],
        [Some(("A001629", 0)), Some(("A010049", 1)), None],
    ),
    (
        [1, 0, 0, 1],
        [Some(("A122491", 1)), Some(("A001629", 2)), None],
    ),
    ([1, 0, 1, 0], [Some(("A178523", 0)), None, None]),
    ([1, 0, 1, 1], [None, Some(("A006478", 2)), None]),
    (
        [1, 1, 0, 0],
        [Some(("A006478", 1)), Some(("A190062", 1)), None],
    ),
    ([1, 1, 1, 0], [Some(("A002940", -1)), None, None]),
    ([1, 1, 1, 1], [None, Some(("A014286", 11)), None]),
];

/// The 25 populated cells in row-major order.
pub fn table_cells() -> Vec<TableCell> {
    let mut cells = Vec::new();
    for (row, ([a, b, c, d], entries)) in TABLE.iter().enumerate() {
        for (region, entry) in COLUMNS.iter().zip(entries) {
            if let Some((anum, shift)) = entry {
                cells.push(TableCell {
                    row,
                    seeds: SpinSeeds::new(*a, *b, *c, *d),
                    region: *region,
                    anumber: ANumber::new(anum).expect("table A-numbers are well formed"),
                    claimed_shift: *shift,
                });
            }
        }
    }
    cells
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Mismatch,
    ShiftFound,
}

/// First disagreement at the claimed shift: our sum at `n` against the
/// sequence term at `n + shift`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub n: i64,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub expected: BigInt,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub actual: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchReport {
    pub row_seeds: SpinSeeds,
    pub region: Region,
    pub anumber: ANumber,
    pub claimed_shift: i64,
    pub convention: BoundaryConvention,
    pub compared_count: usize,
    pub verdict: Verdict,
    pub found_shift: Option<i64>,
    pub first_divergence: Option<Divergence>,
}

impl MatchReport {
    /// Shift under which the data matched, if any.
    pub fn matching_shift(&self) -> Option<i64> {
        match self.verdict {
            Verdict::Match => Some(self.claimed_shift),
            Verdict::ShiftFound => self.found_shift,
            Verdict::Mismatch => None,
        }
    }
}

struct Comparison {
    compared: usize,
    divergence: Option<Divergence>,
}

fn compare_at(computed: &[BigInt], record: &SequenceRecord, shift: i64) -> Comparison {
    let mut compared = 0;
    let mut divergence = None;
    for (n, actual) in computed.iter().enumerate() {
        let n = n as i64;
        let Some(expected) = record.get(n + shift) else {
            continue;
        };
        compared += 1;
        if divergence.is_none() && expected != actual {
            divergence = Some(Divergence {
                n,
                expected: expected.clone(),
                actual: actual.clone(),
            });
        }
    }
    Comparison {
        compared,
        divergence,
    }
}

/// Compares precomputed sums (index `n` = bound) against a sequence record.
pub fn compare_sums(
    cell: &TableCell,
    convention: BoundaryConvention,
    computed: &[BigInt],
    record: &SequenceRecord,
) -> Result<MatchReport> {
    let claimed = compare_at(computed, record, cell.claimed_shift);
    if claimed.compared < MIN_OVERLAP {
        return Err(Error::InsufficientOverlap {
            anumber: record.anumber.to_string(),
            found: claimed.compared,
            needed: MIN_OVERLAP,
        });
    }
    let mut report = MatchReport {
        row_seeds: cell.seeds.clone(),
        region: cell.region,
        anumber: cell.anumber.clone(),
        claimed_shift: cell.claimed_shift,
        convention,
        compared_count: claimed.compared,
        verdict: Verdict::Match,
        found_shift: None,
        first_divergence: None,
    };
    if claimed.divergence.is_none() {
        return Ok(report);
    }
    report.first_divergence = claimed.divergence;
    let fits: Vec<(i64, usize)> = SHIFT_SCAN
        .filter(|&s| s != cell.claimed_shift)
        .map(|s| (s, compare_at(computed, record, s)))
        .filter(|(_, c)| c.compared >= MIN_OVERLAP && c.divergence.is_none())
        .map(|(s, c)| (s, c.compared))
        .collect();
    if let [(shift, compared)] = fits[..] {
        report.verdict = Verdict::ShiftFound;
        report.found_shift = Some(shift);
        report.compared_count = compared;
    } else {
        report.verdict = Verdict::Mismatch;
    }
    Ok(report)
}

/// Checks one table entry: computes `count` region sums and compares them
/// with the sequence data.
pub fn check_table_row(
    client: &OeisClient,
    grid: &Grid,
    cell: &TableCell,
    count: i64,
    convention: BoundaryConvention,
) -> Result<MatchReport> {
    check_count(count)?;
    let record = client.fetch_record(&cell.anumber)?;
    let computed = sum_sequence(grid, &cell.seeds, cell.region, count, convention)?;
    compare_sums(cell, convention, &computed, &record)
}

fn check_count(count: i64) -> Result<()> {
    if count < MIN_COUNT {
        return Err(Error::SizeBound {
            size: count,
            min: MIN_COUNT,
            max: i64::MAX,
        });
    }
    Ok(())
}

/// Outcome for one table cell under one convention.
#[derive(Debug)]
pub struct CellOutcome {
    pub cell: TableCell,
    pub convention: BoundaryConvention,
    pub result: Result<MatchReport>,
}

/// Checks every populated table cell under `convention`; per-cell failures
/// are collected, not propagated.
pub fn run_full_table(
    client: &OeisClient,
    grid: &Grid,
    count: i64,
    convention: BoundaryConvention,
) -> Result<Vec<CellOutcome>> {
    run_full_table_conventions(client, grid, count, &[convention])
}

/// [`run_full_table`] for several conventions, fetching each sequence once.
/// Output is cell-major, conventions in the given order.
pub fn run_full_table_conventions(
    client: &OeisClient,
    grid: &Grid,
    count: i64,
    conventions: &[BoundaryConvention],
) -> Result<Vec<CellOutcome>> {
    check_count(count)?;
    let cells = table_cells();
    let mut anumbers: Vec<ANumber> = cells.iter().map(|c| c.anumber.clone()).collect();
    anumbers.sort();
    anumbers.dedup();
    let fetched = client.fetch_many(&anumbers, DEFAULT_PARALLELISM);
    let records: Vec<(ANumber, Result<SequenceRecord>)> =
        anumbers.into_iter().zip(fetched).collect();

    let mut out = Vec::new();
    for cell in cells {
        let record = &records
            .iter()
            .find(|(a, _)| *a == cell.anumber)
            .expect("every A-number was fetched")
            .1;
        for &convention in conventions {
            let result = match record {
                Ok(record) => sum_sequence(grid, &cell.seeds, cell.region, count, convention)
                    .and_then(|computed| compare_sums(&cell, convention, &computed, record)),
                Err(e) => Err(e.clone()),
            };
            out.push(CellOutcome {
                cell: cell.clone(),
                convention,
                result,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oeis::fetch::FixtureStore;

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cell(shift: i64) -> TableCell {
        TableCell {
            row: 0,
            seeds: SpinSeeds::fibonacci(),
            region: Region::FullSquare,
            anumber: ANumber::new("A000045").unwrap(),
            claimed_shift: shift,
        }
    }

    fn fib_record() -> SequenceRecord {
        SequenceRecord {
            anumber: ANumber::new("A000045").unwrap(),
            offset: 0,
            terms: bigs(&[0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]),
        }
    }

    #[test]
    fn table_has_25_cells() {
        let cells = table_cells();
        assert_eq!(cells.len(), 25);
        assert_eq!(cells[0].anumber.as_str(), "A006478");
        assert_eq!(cells[24].claimed_shift, 11);
        assert!(cells.windows(2).all(|w| w[0].row <= w[1].row));
    }

    #[test]
    fn verdicts() {
        let bw = BoundaryConvention::BWins;
        let computed = bigs(&[1, 1, 2, 3, 5, 8, 13, 21]);
        let r = compare_sums(&cell(1), bw, &computed, &fib_record()).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert!(r.first_divergence.is_none());
        assert_eq!(r.compared_count, 8);

        let r = compare_sums(&cell(0), bw, &computed, &fib_record()).unwrap();
        assert_eq!(r.verdict, Verdict::ShiftFound);
        assert_eq!(r.found_shift, Some(1));
        assert_eq!(r.matching_shift(), Some(1));
        let div = r.first_divergence.unwrap();
        assert_eq!(
            (div.n, div.expected, div.actual),
            (0, BigInt::from(0), BigInt::from(1))
        );

        let zeros = bigs(&[0, 0, 0, 0, 0]);
        let r = compare_sums(&cell(0), bw, &zeros, &fib_record()).unwrap();
        assert_eq!(r.verdict, Verdict::Mismatch);
        assert_eq!(r.found_shift, None);
    }

    #[test]
    fn too_little_overlap() {
        let computed = bigs(&[1, 1, 2, 3, 5, 8]);
        assert!(matches!(
            compare_sums(
                &cell(11),
                BoundaryConvention::BWins,
                &computed,
                &fib_record()
            ),
            Err(Error::InsufficientOverlap { found: 3, .. })
        ));
    }

    #[test]
    fn zero_seeds_mismatch_fibonacci() {
        let c = TableCell {
            seeds: SpinSeeds::new(0, 0, 0, 0),
            region: Region::UpperInclDiag,
            ..cell(0)
        };
        let r = check_table_row(
            &OeisClient::offline(),
            &Grid::default(),
            &c,
            5,
            BoundaryConvention::BWins,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Mismatch);
    }

    #[test]
    fn count_precondition() {
        let r = check_table_row(
            &OeisClient::offline(),
            &Grid::default(),
            &cell(0),
            4,
            BoundaryConvention::BWins,
        );
        assert!(matches!(r, Err(Error::SizeBound { .. })));
    }

    #[test]
    fn empty_store_aggregates_errors() {
        let client = OeisClient::offline().fixtures(FixtureStore::Empty);
        let out = run_full_table(&client, &Grid::default(), 5, BoundaryConvention::BWins).unwrap();
        assert_eq!(out.len(), 25);
        assert!(out
            .iter()
            .all(|o| matches!(o.result, Err(Error::FixtureMissing(_)))));
    }
}
