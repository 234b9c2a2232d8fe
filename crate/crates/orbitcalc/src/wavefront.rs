//! Top-level wavefront formulas: the canonical unramified wavefront set of
//! the dual of a representation with a given parameter orbit, and the
//! associated lower bound check in the Achar order.

use serde::{Deserialize, Serialize};

use crate::duality::{d_a_one, leq_a, AcharClass, DualType};
use crate::partition::Partition;
use crate::Result;

/// The wavefront data attached to a dual-group nilpotent orbit: the
/// canonical unramified wavefront set as an Achar class, and its first
/// projection, the nilpotent-cone wavefront orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WavefrontResult {
    /// The dual group, recorded by Cartan type and rank.
    pub dual_type: DualType,
    pub rank: u32,
    /// The input orbit of the dual group.
    pub orbit: Partition,
    /// The canonical unramified wavefront set.
    pub kwf: AcharClass,
    /// The wavefront orbit in the nilpotent cone; always equals `kwf.sat`.
    pub barkwf: Partition,
}

/// The wavefront set of the dual of a representation whose parameter has
/// the given dual-group orbit. The caller supplies the orbit of the dual
/// itself; real infinitesimal character is the caller's mathematical
/// responsibility.
pub fn wavefront_of_az(dual_type: DualType, rank: u32, orbit: &Partition) -> Result<WavefrontResult> {
    let kwf = d_a_one(dual_type, rank, orbit)?;
    let barkwf = kwf.sat.clone();
    Ok(WavefrontResult {
        dual_type,
        rank,
        orbit: orbit.clone(),
        kwf,
        barkwf,
    })
}

/// The general lower bound: the class of (orbit, trivial) is below any
/// admissible wavefront candidate in the Achar order.
pub fn wfbound_check(
    dual_type: DualType,
    rank: u32,
    orbit: &Partition,
    candidate: &AcharClass,
) -> Result<bool> {
    Ok(leq_a(&d_a_one(dual_type, rank, orbit)?, candidate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{dbv, partitions_of, ClassicalType, Partition};

    fn orbits(t: DualType, rank: u32) -> Vec<Partition> {
        let ct = match t {
            DualType::A => None,
            DualType::B => Some(ClassicalType::B),
            DualType::C => Some(ClassicalType::C),
            DualType::D => Some(ClassicalType::D),
        };
        partitions_of(t.dual_size(rank))
            .into_iter()
            .filter(|p| ct.map_or(true, |c| crate::partition::is_member(p, c)))
            .collect()
    }

    #[test]
    fn sp4_worked_example() {
        let r = wavefront_of_az(DualType::C, 2, &Partition::new([2, 2])).unwrap();
        assert_eq!(r.kwf.sat, Partition::new([3, 1, 1]));
        assert_eq!(r.kwf.dual, Partition::new([2, 2]));
        assert_eq!(r.barkwf, Partition::new([3, 1, 1]));
    }

    #[test]
    fn regular_and_zero_orbits() {
        // The regular orbit maps to the zero wavefront orbit and the zero
        // orbit to the regular one.
        let reg = Partition::new([5]);
        let zero = Partition::new([1, 1, 1, 1, 1]);
        let r = wavefront_of_az(DualType::B, 2, &reg).unwrap();
        assert_eq!(r.barkwf, Partition::new([1, 1, 1, 1]));
        let z = wavefront_of_az(DualType::B, 2, &zero).unwrap();
        assert_eq!(z.barkwf, Partition::new([4]));
    }

    #[test]
    fn projection_and_duality_consistency() {
        for t in [DualType::A, DualType::B, DualType::C, DualType::D] {
            for rank in 1..=4u32 {
                for orbit in orbits(t, rank) {
                    let r = wavefront_of_az(t, rank, &orbit).unwrap();
                    assert_eq!(r.barkwf, r.kwf.sat);
                    let expected = match t {
                        DualType::A => orbit.transpose(),
                        DualType::B => dbv(&orbit, ClassicalType::B).unwrap(),
                        DualType::C => dbv(&orbit, ClassicalType::C).unwrap(),
                        DualType::D => dbv(&orbit, ClassicalType::D).unwrap(),
                    };
                    assert_eq!(r.barkwf, expected);
                }
            }
        }
    }

    #[test]
    fn bound_reflexive_and_order_reversing() {
        for t in [DualType::B, DualType::C, DualType::D] {
            for rank in 1..=4u32 {
                let all = orbits(t, rank);
                for o1 in &all {
                    let r1 = wavefront_of_az(t, rank, o1).unwrap();
                    assert!(wfbound_check(t, rank, o1, &r1.kwf).unwrap());
                    // The bound is order-reversing: the class of a smaller
                    // orbit is an admissible candidate for a larger one.
                    for o2 in &all {
                        if o2.dominance_leq(o1) {
                            let r2 = wavefront_of_az(t, rank, o2).unwrap();
                            assert!(wfbound_check(t, rank, o1, &r2.kwf).unwrap());
                        }
                    }
                }
            }
        }
    }
}
