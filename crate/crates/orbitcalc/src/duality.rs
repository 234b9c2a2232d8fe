//! Duality maps between nilpotent orbits: the partition duality d, the
//! pseudo-Levi duality d_S computed through j-induced s-symbols, saturation,
//! and the Achar-class model of the canonical-quotient orbit poset with its
//! order and the lift map.
//!
//! - [`saturate`]: ambient collapse of the union of factor orbits
//! - [`ds`]: the dual-side orbit of a pseudo-Levi datum
//! - [`d_a_one`]: the Achar class of (O-dual, trivial local system)
//! - [`lift_class`]: the complete-invariant pair (saturation, d_S)
//! - [`leq_a`]: the Achar order on classes

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::finite::{family_symbol_from_orbit, Series};
use crate::partition::{collapse, dbv, is_member, ClassicalType, Partition};
use crate::springer::{p1, Group, Pair};
use crate::symbol::Symbol;
use crate::{Error, Result};

/// The type of the dual group whose orbits index Achar classes: A is
/// sl(rank + 1), B is so(2 rank + 1), C is sp(2 rank), D is so(2 rank).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DualType {
    A,
    B,
    C,
    D,
}

impl DualType {
    /// Size of partitions labeling orbits of the dual group.
    pub fn dual_size(self, rank: u32) -> u32 {
        match self {
            DualType::A => rank + 1,
            DualType::B => 2 * rank + 1,
            DualType::C => 2 * rank,
            DualType::D => 2 * rank,
        }
    }

    /// Size and type of partitions on the saturation side.
    fn sat_side(self, rank: u32) -> (u32, Option<ClassicalType>) {
        match self {
            DualType::A => (rank + 1, None),
            // The dual of so(2n+1) has symplectic orbits, and conversely.
            DualType::B => (2 * rank, Some(ClassicalType::C)),
            DualType::C => (2 * rank + 1, Some(ClassicalType::B)),
            DualType::D => (2 * rank, Some(ClassicalType::D)),
        }
    }

    fn dual_member(self, p: &Partition) -> bool {
        match self {
            DualType::A => true,
            DualType::B => is_member(p, ClassicalType::B),
            DualType::C => is_member(p, ClassicalType::C),
            DualType::D => is_member(p, ClassicalType::D),
        }
    }
}

/// A simple factor of a pseudo-Levi subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorType {
    /// A_k (Dynkin rank k; orbits are partitions of k + 1).
    A,
    B,
    C,
    D,
}

/// One factor with its nilpotent orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub factor_type: FactorType,
    pub rank: u32,
    pub orbit: Partition,
}

impl Factor {
    pub fn new(factor_type: FactorType, rank: u32, orbit: Partition) -> Factor {
        Factor { factor_type, rank, orbit }
    }

    fn orbit_size(&self) -> u32 {
        match self.factor_type {
            FactorType::A => self.rank + 1,
            FactorType::B => 2 * self.rank + 1,
            FactorType::C | FactorType::D => 2 * self.rank,
        }
    }

    fn orbit_ok(&self) -> bool {
        if self.orbit.size() != self.orbit_size() as u64 {
            return false;
        }
        match self.factor_type {
            FactorType::A => true,
            FactorType::B => is_member(&self.orbit, ClassicalType::B),
            FactorType::C => is_member(&self.orbit, ClassicalType::C),
            FactorType::D => is_member(&self.orbit, ClassicalType::D),
        }
    }
}

/// A pseudo-Levi subgroup of the ambient group with a nilpotent orbit on
/// each simple factor. The ambient group is described from the dual side:
/// `dual_type`/`rank` name the dual group whose orbits the map [`ds`]
/// produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoLeviOrbit {
    pub dual_type: DualType,
    pub rank: u32,
    pub factors: Vec<Factor>,
}

/// The supported factor shapes, after inserting rank-zero complements for
/// single-factor (whole-group and edge-case) data.
enum Shape {
    /// C_m x C_{n-m} in ambient affine C (dual type B).
    CC(Factor, Factor),
    /// D_m x B_{n-m} in ambient affine B (dual type C).
    DB(Factor, Factor),
    /// D_m x D_{n-m} in ambient affine D (dual type D).
    DD(Factor, Factor),
    /// C_m x A_{k-1} x C_m or D_m x A_{k-1} x D_m (dual types B and D).
    /// The third slot is the second outer factor; validation has already
    /// checked that it matches the first, so reduction only reads the first.
    Sandwich(Factor, Factor, #[allow(dead_code)] Factor),
    /// r copies of A_{k-1} in ambient affine A.
    AllA(Vec<Factor>),
    /// A corank-one B or D factor standing in for a D_1 x (...) shape whose
    /// D_1 is read as empty: d_S factors through saturation to the whole
    /// group.
    Edge(ClassicalType),
}

impl PseudoLeviOrbit {
    pub fn new(dual_type: DualType, rank: u32, factors: Vec<Factor>) -> Result<PseudoLeviOrbit> {
        let p = PseudoLeviOrbit { dual_type, rank, factors };
        p.shape()?;
        Ok(p)
    }

    fn shape_error(&self) -> Error {
        let desc: Vec<String> = self
            .factors
            .iter()
            .map(|f| format!("{:?}{}", f.factor_type, f.rank))
            .collect();
        Error::UnsupportedShape(format!(
            "factor shape {} is not supported in ambient dual type {:?} rank {}",
            desc.join("x"),
            self.dual_type,
            self.rank
        ))
    }

    fn shape(&self) -> Result<Shape> {
        for f in &self.factors {
            if !f.orbit_ok() {
                return Err(Error::InvalidInput(format!(
                    "orbit {} is not valid for factor {:?}{}",
                    f.orbit, f.factor_type, f.rank
                )));
            }
        }
        let n = self.rank;
        let trivial = |t: FactorType| Factor::new(t, 0, Partition::new(Vec::<u32>::new()));
        use FactorType as F;
        let ts: Vec<FactorType> = self.factors.iter().map(|f| f.factor_type).collect();
        match self.dual_type {
            DualType::A => {
                if !ts.is_empty() && ts.iter().all(|&t| t == F::A) {
                    let total: u32 = self.factors.iter().map(|f| f.rank + 1).sum();
                    if total == n + 1 {
                        return Ok(Shape::AllA(self.factors.clone()));
                    }
                }
                Err(self.shape_error())
            }
            DualType::B => match ts.as_slice() {
                [F::C] if self.factors[0].rank == n => Ok(Shape::CC(
                    self.factors[0].clone(),
                    trivial(F::C),
                )),
                [F::C, F::C] if self.factors[0].rank + self.factors[1].rank == n => Ok(
                    Shape::CC(self.factors[0].clone(), self.factors[1].clone()),
                ),
                [F::C, F::A, F::C]
                    if self.factors[0].rank == self.factors[2].rank
                        && 2 * self.factors[0].rank + self.factors[1].rank + 1 == n =>
                {
                    Ok(Shape::Sandwich(
                        self.factors[0].clone(),
                        self.factors[1].clone(),
                        self.factors[2].clone(),
                    ))
                }
                _ => Err(self.shape_error()),
            },
            DualType::C => match ts.as_slice() {
                [F::B] if self.factors[0].rank == n => Ok(Shape::DB(
                    trivial(F::D),
                    self.factors[0].clone(),
                )),
                // The D_1 edge cases enter as a bare B_{n-1} factor.
                [F::B] if self.factors[0].rank + 1 == n => Ok(Shape::Edge(ClassicalType::B)),
                [F::D, F::B] if self.factors[0].rank + self.factors[1].rank == n => Ok(
                    Shape::DB(self.factors[0].clone(), self.factors[1].clone()),
                ),
                _ => Err(self.shape_error()),
            },
            DualType::D => match ts.as_slice() {
                [F::D] if self.factors[0].rank == n => Ok(Shape::DD(
                    self.factors[0].clone(),
                    trivial(F::D),
                )),
                [F::D] if self.factors[0].rank + 1 == n => Ok(Shape::Edge(ClassicalType::D)),
                [F::D, F::D] if self.factors[0].rank + self.factors[1].rank == n => Ok(
                    Shape::DD(self.factors[0].clone(), self.factors[1].clone()),
                ),
                [F::D, F::A, F::D]
                    if self.factors[0].rank == self.factors[2].rank
                        && 2 * self.factors[0].rank + self.factors[1].rank + 1 == n =>
                {
                    Ok(Shape::Sandwich(
                        self.factors[0].clone(),
                        self.factors[1].clone(),
                        self.factors[2].clone(),
                    ))
                }
                _ => Err(self.shape_error()),
            },
        }
    }
}

/// An element of the orbit poset for the canonical quotient, recorded by
/// its complete invariant: the saturation in the group's own nilpotent cone
/// and the dual-side orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcharClass {
    pub sat: Partition,
    pub dual: Partition,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tags: BTreeMap<String, String>,
}

impl AcharClass {
    pub fn new(sat: Partition, dual: Partition) -> AcharClass {
        AcharClass { sat, dual, tags: BTreeMap::new() }
    }
}

/// Union of all factor-orbit contributions, with A-factors in a classical
/// ambient group contributing twice.
fn contributions(p: &PseudoLeviOrbit) -> Vec<Partition> {
    let mut out = Vec::new();
    for f in &p.factors {
        out.push(f.orbit.clone());
        if f.factor_type == FactorType::A && p.dual_type != DualType::A {
            out.push(f.orbit.clone());
        }
    }
    out
}

/// Saturate the pseudo-Levi orbit into the ambient nilpotent cone: union
/// the contributions, pad with ones to the ambient size, and collapse.
pub fn saturate(p: &PseudoLeviOrbit) -> Result<Partition> {
    p.shape()?;
    let (size, ambient) = p.dual_type.sat_side(p.rank);
    let mut u = Partition::new(Vec::<u32>::new());
    for c in contributions(p) {
        u = u.union(&c);
    }
    let have = u.size();
    if have > size as u64 {
        return Err(Error::InvalidInput(format!(
            "factor orbits total {have}, larger than the ambient size {size}"
        )));
    }
    let mut parts = u.parts().to_vec();
    parts.extend(std::iter::repeat(1).take((size as u64 - have) as usize));
    let padded = Partition::new(parts);
    match ambient {
        Some(t) => collapse(&padded, t),
        None => Ok(padded),
    }
}

/// The special symbol of the family with the given wavefront orbit, for a
/// classical factor of the reductive quotient.
pub(crate) fn factor_symbol(f: &Factor) -> Result<Symbol> {
    let (series, t, back) = match f.factor_type {
        FactorType::B => (Series::B, ClassicalType::B, ClassicalType::C),
        FactorType::C => (Series::C, ClassicalType::C, ClassicalType::B),
        FactorType::D => (Series::D, ClassicalType::D, ClassicalType::D),
        FactorType::A => {
            return Err(Error::UnsupportedShape(
                "A-type factors have no symbol; reduce the sandwich shape first".into(),
            ))
        }
    };
    // d_S only sees the special closure of the orbit (the double dual), so
    // pass that to the family lookup.
    let special = dbv(&dbv(&f.orbit, t)?, back)?;
    family_symbol_from_orbit(series, f.rank, &special)
}

/// The dual-side orbit d_S of the pseudo-Levi datum: the orbit whose
/// trivial-local-system Springer representation is the j-induced
/// representation of the factor families. Computed by summing the factor
/// family symbols and reading the orbit off the special sum.
pub fn ds(p: &PseudoLeviOrbit) -> Result<Partition> {
    match p.shape()? {
        Shape::AllA(factors) => {
            // j-induction in type A transposes the union of the labels.
            let mut u = Partition::new(Vec::<u32>::new());
            for f in &factors {
                u = u.union(&f.orbit);
            }
            Ok(u.transpose())
        }
        Shape::CC(f1, f2) => {
            let s = factor_symbol(&f1)?.add(&factor_symbol(&f2)?)?.special()?;
            let fake = Pair::Symbolic { symbol: s, tag: None };
            p1(Group::SO(p.dual_type.dual_size(p.rank)), &fake)
        }
        Shape::DD(f1, f2) => {
            let s = factor_symbol(&f1)?.add(&factor_symbol(&f2)?)?.special()?;
            let fake = Pair::Symbolic { symbol: s, tag: None };
            p1(Group::SO(p.dual_type.dual_size(p.rank)), &fake)
        }
        Shape::DB(f1, f2) => {
            // The D-factor symbol passes through the defect-raising map so
            // that the sum has the symplectic parameters. It enters in the
            // co-special (flipped) arrangement, which is the one the
            // defect-raising map matches with the special interlacing on
            // the other side.
            let s1 = factor_symbol(&f1)?.flip()?.shriek()?;
            let s = s1.add(&factor_symbol(&f2)?)?.special()?;
            let fake = Pair::Symbolic { symbol: s, tag: None };
            p1(Group::Sp(p.rank), &fake)
        }
        Shape::Edge(t) => {
            // d_S through a corank-one factor agrees with d_S of the whole
            // group applied to the saturated orbit.
            dbv(&saturate(p)?, t)
        }
        Shape::Sandwich(f1, mid, _) => {
            // (mu, nu, mu) on X_m x A x X_m saturates like (mu, nu u nu u mu)
            // on X_m x X_{n-m}; d_S factors through the same reduction.
            let big = f1
                .orbit
                .union(&mid.orbit)
                .union(&mid.orbit);
            let t = f1.factor_type;
            let reduced = PseudoLeviOrbit::new(
                p.dual_type,
                p.rank,
                vec![
                    f1.clone(),
                    Factor::new(t, p.rank - f1.rank, big),
                ],
            )?;
            ds(&reduced)
        }
    }
}

/// The Achar class of (O-dual, trivial): saturation d(O-dual) paired with
/// O-dual itself.
pub fn d_a_one(dual_type: DualType, rank: u32, dual_orbit: &Partition) -> Result<AcharClass> {
    if dual_orbit.size() != dual_type.dual_size(rank) as u64 || !dual_type.dual_member(dual_orbit) {
        return Err(Error::InvalidInput(format!(
            "{dual_orbit} is not a nilpotent orbit of the dual group (type {dual_type:?}, rank {rank})"
        )));
    }
    let sat = match dual_type {
        DualType::A => dual_orbit.transpose(),
        DualType::B => dbv(dual_orbit, ClassicalType::B)?,
        DualType::C => dbv(dual_orbit, ClassicalType::C)?,
        DualType::D => dbv(dual_orbit, ClassicalType::D)?,
    };
    Ok(AcharClass::new(sat, dual_orbit.clone()))
}

/// The lift map: the Achar class (saturation, d_S) of a pseudo-Levi datum.
pub fn lift_class(p: &PseudoLeviOrbit) -> Result<AcharClass> {
    Ok(AcharClass::new(saturate(p)?, ds(p)?))
}

/// The Achar order: dominance on saturations and reverse dominance on
/// dual-side orbits.
pub fn leq_a(c1: &AcharClass, c2: &AcharClass) -> bool {
    c1.sat.dominance_leq(&c2.sat) && c2.dual.dominance_leq(&c1.dual)
}
