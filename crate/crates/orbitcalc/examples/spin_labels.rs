//! Labels for the genuine spin blocks: the decomposition of a rather-odd
//! partition, its symbol, and the attached Weyl-group label.

use orbitcalc::partition::{rather_odd_of, Partition};
use orbitcalc::spin::{
    d_partition, dbv_rather_odd, rho_closed, rho_recursive, spin_symbol, SpinDecomposition,
};

fn main() {
    let lam = Partition::new([12, 12, 12, 12, 12, 12, 15, 7, 5, 2, 2, 2, 2]);
    let dec = SpinDecomposition::of(&lam).unwrap();
    println!("lambda = {lam}");
    println!("q = {:?}", dec.q);
    println!("r = {:?}", dec.r);
    println!("epsilon = {:?}", dec.epsilon);
    println!("delta = {:?}", dec.delta);
    println!("d = {}", d_partition(&lam));
    println!("symbol = {}", spin_symbol(&lam).unwrap());
    println!("rho = {}", rho_closed(&lam).unwrap());

    // The closed form agrees with the recursion, and the duality of a
    // rather-odd partition splits off a doubled half.
    for n in 1..=14u32 {
        for lam in rather_odd_of(n) {
            assert_eq!(rho_closed(&lam).unwrap(), rho_recursive(&lam).unwrap());
            dbv_rather_odd(&lam).unwrap();
        }
    }
    println!("closed form matches the recursion for all rather-odd partitions up to 14");
}
