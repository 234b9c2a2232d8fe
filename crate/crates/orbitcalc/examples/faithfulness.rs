//! The faithfulness checker: witness data for every dual orbit of a block,
//! with the three certified conditions, plus the shipped exceptional tables.

use orbitcalc::faithful::{
    blocks_for, check_faithful, check_faithful_exceptional, exceptional_table, orbits_in_block,
    SeriesKind,
};

fn main() {
    for kind in [SeriesKind::Sp, SeriesKind::SpinOdd] {
        let size = if kind == SeriesKind::Sp { 8 } else { 7 };
        for block in blocks_for(kind, size).unwrap() {
            for orbit in orbits_in_block(&block).unwrap() {
                let report = check_faithful(&orbit, &block).unwrap();
                println!(
                    "{kind:?} N={size} block {} orbit {}: {}",
                    block.index,
                    orbit,
                    if report.overall { "faithful" } else { "NOT faithful" }
                );
                assert!(report.overall);
            }
        }
    }

    // E6 and E7 orbits needing a non-default witness come from the tables.
    let table = exceptional_table("E7").unwrap();
    println!("E7 table: {} rows", table.rows.len());
    let cert = check_faithful_exceptional("E7", "D6").unwrap();
    println!("E7 D6 certificate: {cert:?}");
}
