//! Symbol calculus: symbols of bipartitions, defect and rank invariants,
//! special representatives, and the defect-raising map.

use orbitcalc::partition::Partition;
use orbitcalc::symbol::{bipartitions_of, Bipartition, Symbol};

fn main() {
    let bip = Bipartition::new(Partition::new([2, 1]), Partition::new([1]));
    let s = Symbol::from_bipartition(1, 0, &bip, 1);
    println!("symbol of {bip} at defect 1: {s}");
    println!("rank {}  defect {}", s.rank(), s.defect());
    assert_eq!(s.bipartition(), bip);

    // The special symbol sorts all entries into interlacing rows; it is
    // the distinguished member of the symbol's similarity class.
    let sp = s.special().unwrap();
    println!("special: {sp}");
    assert_eq!(sp.rank(), s.rank());

    // The defect-raising map adds one to the defect and preserves entry
    // sums up to the shift rule.
    let raised = sp.shriek().unwrap();
    println!("raised: {raised}  defect {}", raised.defect());
    assert_eq!(raised.defect(), sp.defect() + 1);

    // Symbols of a fixed defect and rank biject with bipartitions.
    let n = 3;
    let all: Vec<Symbol> = bipartitions_of(n)
        .into_iter()
        .map(|b| Symbol::from_bipartition(1, 0, &b, 1))
        .collect();
    println!("{} symbols of rank {n} at defect 1", all.len());
    for s in &all {
        assert_eq!(s.rank(), n as i64);
    }
}
