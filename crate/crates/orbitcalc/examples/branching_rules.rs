//! Branching: Littlewood-Richardson coefficients, restriction multiplicities
//! for products of hyperoctahedral groups, and truncated induction.

use orbitcalc::branching::{bip_restriction_mult, j_induce_classical, lr_coefficient};
use orbitcalc::partition::Partition;
use orbitcalc::symbol::{bipartitions_of, Bipartition, Symbol};

fn main() {
    // A classical LR computation: c^{(3,2,1)}_{(2,1),(2,1)} = 2.
    let c = lr_coefficient(
        &Partition::new([2, 1]),
        &Partition::new([2, 1]),
        &Partition::new([3, 2, 1]),
    );
    println!("LR coefficient = {c}");
    assert_eq!(c, 2);

    // Restriction multiplicities from W_n to W_k x W_{n-k} multiply two LR
    // coefficients; total multiplicity over all splits equals the product
    // of binomials forced by dimension counting in small cases.
    let f = Bipartition::new(Partition::new([2]), Partition::new([1]));
    let mut total = 0u64;
    for k in 0..=3u32 {
        for b1 in bipartitions_of(k) {
            for b2 in bipartitions_of(3 - k) {
                let m = bip_restriction_mult(&f, &b1, &b2);
                if m > 0 {
                    println!("{f} | {b1} x {b2} : {m}");
                    total += m;
                }
            }
        }
    }
    println!("total = {total}");

    // Truncated induction of a pair of symbols adds entry sequences.
    let s1 = Symbol::from_bipartition(1, 0, &Bipartition::new(Partition::new([1]), Partition::empty()), 1);
    let s2 = Symbol::from_bipartition(1, 0, &Bipartition::new(Partition::empty(), Partition::new([1])), 1);
    let j = j_induce_classical(&[s1, s2]).unwrap();
    println!("j-induced symbol: {j}  rank {}", j.rank());
}
