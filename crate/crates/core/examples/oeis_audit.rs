// Audits the catalogue of region sums against bundled OEIS b-files.
//
// `cargo run --example oeis_audit`
//
// Set `SPINFIB_OEIS_BASE` / `SPINFIB_CACHE_DIR` and swap in
// `OeisClient::with_mode(FetchMode::Online)` to check against live data.

use std::collections::BTreeMap;

use spinfib::oeis::{parse_bfile, run_full_table_conventions, ANumber, OeisClient, Verdict};
use spinfib::{BoundaryConvention, Grid};

pub fn run_example() -> spinfib::Result<()> {
    let record = parse_bfile(ANumber::new("A000045")?, b"# Fibonacci\n5 5\n6 8\n7 13\n")?;
    println!(
        "parsed {} terms from offset {}",
        record.terms.len(),
        record.offset
    );

    let client = OeisClient::offline();
    let grid = Grid::default();
    let outcomes = run_full_table_conventions(&client, &grid, 20, &BoundaryConvention::EVERY)?;

    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    for o in &outcomes {
        let key = match &o.result {
            Ok(r) => format!("{} {:?}", o.convention, r.verdict),
            Err(_) => format!("{} no data", o.convention),
        };
        *tally.entry(key).or_default() += 1;
    }
    for (k, v) in &tally {
        println!("{k:>24}: {v}");
    }

    for o in outcomes
        .iter()
        .filter(|o| o.convention == BoundaryConvention::Crossed)
    {
        let c = &o.cell;
        let status = match &o.result {
            Ok(r) if r.verdict == Verdict::Mismatch => "MISMATCH".to_string(),
            Ok(r) if r.verdict == Verdict::ShiftFound => {
                format!("shift n{:+}", r.found_shift.unwrap_or_default())
            }
            Ok(_) => continue,
            Err(e) => e.to_string(),
        };
        println!(
            "[{}] {} {}(n{:+}): {status}",
            c.seeds, c.region, c.anumber, c.claimed_shift
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("oeis_audit");
}
