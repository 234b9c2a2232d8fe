//! The headline formulas: the canonical unramified wavefront set of the
//! dual of a representation with a given parameter orbit, and the general
//! lower bound in the Achar order.

use orbitcalc::duality::DualType;
use orbitcalc::partition::{members_of, ClassicalType, Partition};
use orbitcalc::wavefront::{wavefront_of_az, wfbound_check};

fn main() {
    // The worked Sp(4) computation.
    let r = wavefront_of_az(DualType::C, 2, &Partition::new([2, 2])).unwrap();
    println!("orbit (2,2) of sp(4): KWF = (sat {}, dual {})", r.kwf.sat, r.kwf.dual);
    println!("wavefront orbit: {}", r.barkwf);
    assert_eq!(r.barkwf, Partition::new([3, 1, 1]));

    // Across all sp(6) orbits: the projection identity and the bound.
    for orbit in members_of(6, ClassicalType::C) {
        let w = wavefront_of_az(DualType::C, 3, &orbit).unwrap();
        assert_eq!(w.barkwf, w.kwf.sat);
        assert!(wfbound_check(DualType::C, 3, &orbit, &w.kwf).unwrap());
        println!("{orbit} -> {}", w.barkwf);
    }
}
