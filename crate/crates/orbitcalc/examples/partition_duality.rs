//! Partition combinatorics: membership, collapse, and the duality map on
//! nilpotent orbits of the classical groups.

use orbitcalc::partition::{collapse, dbv, is_member, members_of, ClassicalType, Partition};

fn main() {
    // (4,4,1) is a valid so(9) orbit; (5,4) is not (even parts must have
    // even multiplicity) and collapses to the largest dominated member.
    let good = Partition::new([4, 4, 1]);
    assert!(is_member(&good, ClassicalType::B));
    let bad = Partition::new([5, 4]);
    assert!(!is_member(&bad, ClassicalType::B));
    println!("B-collapse of {bad} = {}", collapse(&bad, ClassicalType::B).unwrap());

    // Duality sends an so(2n+1) orbit to an sp(2n) orbit and reverses the
    // closure order.
    for lam in members_of(7, ClassicalType::B) {
        println!("d({lam}) = {}", dbv(&lam, ClassicalType::B).unwrap());
    }
    let orbits = members_of(7, ClassicalType::B);
    for a in &orbits {
        for b in &orbits {
            if a.dominance_leq(b) {
                let (da, db) = (
                    dbv(a, ClassicalType::B).unwrap(),
                    dbv(b, ClassicalType::B).unwrap(),
                );
                assert!(db.dominance_leq(&da));
            }
        }
    }
    println!("order reversal checked on all so(7) orbits");
}
