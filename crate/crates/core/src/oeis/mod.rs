//! OEIS b-file handling and the audit of catalogued region sums.

mod bfile;
mod fetch;
mod table;

pub use bfile::{parse_bfile, ANumber, SequenceRecord};
pub use fetch::{
    FetchMode, FixtureStore, OeisClient, BASE_URL_ENV, CACHE_DIR_ENV, DEFAULT_BASE_URL,
    DEFAULT_PARALLELISM, DEFAULT_SIZE_CAP,
};
pub use table::{
    check_table_row, compare_sums, run_full_table, run_full_table_conventions, table_cells,
    CellOutcome, Divergence, MatchReport, TableCell, Verdict, MIN_COUNT, MIN_OVERLAP, SHIFT_SCAN,
};
