//! The orbit-poset model for the canonical quotient: pseudo-Levi orbit
//! data, their saturations and duals, and the partial order.

use orbitcalc::duality::{
    d_a_one, ds, leq_a, lift_class, saturate, DualType, Factor, FactorType, PseudoLeviOrbit,
};
use orbitcalc::partition::Partition;

fn main() {
    // A two-factor datum in the dual of so(9).
    let j = PseudoLeviOrbit::new(
        DualType::B,
        4,
        vec![
            Factor::new(FactorType::C, 1, Partition::new([2])),
            Factor::new(FactorType::C, 3, Partition::new([2, 2, 1, 1])),
        ],
    )
    .unwrap();
    println!("saturation: {}", saturate(&j).unwrap());
    println!("dual-side orbit: {}", ds(&j).unwrap());
    let class = lift_class(&j).unwrap();
    println!("lifted class: sat {}  dual {}", class.sat, class.dual);

    // The class of (regular orbit, trivial) is the minimum of the Achar
    // order: zero saturation, regular dual side.
    let bottom = d_a_one(DualType::B, 4, &Partition::new([9])).unwrap();
    println!("d_A((9), 1) = (sat {}, dual {})", bottom.sat, bottom.dual);
    assert!(leq_a(&bottom, &class));

    // A sandwich datum with a twisted linear middle factor.
    let s = PseudoLeviOrbit::new(
        DualType::B,
        3,
        vec![
            Factor::new(FactorType::C, 0, Partition::empty()),
            Factor::new(FactorType::A, 2, Partition::new([1, 1, 1])),
            Factor::new(FactorType::C, 0, Partition::empty()),
        ],
    )
    .unwrap();
    println!("sandwich dual-side orbit: {}", ds(&s).unwrap());
}
