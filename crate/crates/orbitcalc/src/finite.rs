//! Unipotent representations of finite classical groups.
//!
//! Covers the six series of simple groups arising in reductive quotients of
//! classical p-adic groups: split and twisted type A, odd orthogonal,
//! symplectic, and split and twisted even orthogonal. For each series the
//! module provides:
//!
//! - [`enumerate_unipotent`]: the full parameter list (partitions in type A,
//!   row-unordered symbol classes otherwise, with the degenerate doubling in
//!   split even type)
//! - [`kawanaka_wf`]: the Kawanaka wavefront set of a representation
//! - [`family_of`] / [`families`]: families and their bijection with special
//!   orbits
//! - [`hc_series`]: Harish-Chandra series index and relative Weyl group
//!   label
//! - [`family_symbol_from_orbit`]: the inverse of the family/special-orbit
//!   bijection

use serde::{Deserialize, Serialize};

use crate::partition::{collapse, ClassicalType, Partition};
use crate::symbol::{
    beta_from_partition, partition_from_beta, symbols_with, BetaSet, Bipartition, DLabel, Symbol,
};
use crate::{Error, Result};

/// The six finite series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "2A")]
    TwistedA,
    #[serde(rename = "B")]
    B,
    #[serde(rename = "C")]
    C,
    #[serde(rename = "D")]
    D,
    #[serde(rename = "2D")]
    TwistedD,
}

impl std::fmt::Display for Series {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::TwistedA => "2A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::TwistedD => "2D",
        };
        write!(f, "{s}")
    }
}

/// A finite group form: a series together with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteGroupForm {
    pub series: Series,
    pub rank: u32,
}

/// The two representations attached to a degenerate defect-zero symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DegenerateTag {
    I,
    II,
}

/// A unipotent representation, labeled by a partition (type A series) or a
/// row-unordered symbol class (other series).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentRep {
    pub series: Series,
    pub rank: u32,
    pub partition: Option<Partition>,
    pub symbol: Option<Symbol>,
    pub tag: Option<DegenerateTag>,
}

impl UnipotentRep {
    fn from_partition(form: FiniteGroupForm, lambda: Partition) -> UnipotentRep {
        UnipotentRep {
            series: form.series,
            rank: form.rank,
            partition: Some(lambda),
            symbol: None,
            tag: None,
        }
    }

    fn from_symbol(form: FiniteGroupForm, s: Symbol, tag: Option<DegenerateTag>) -> UnipotentRep {
        UnipotentRep {
            series: form.series,
            rank: form.rank,
            partition: None,
            symbol: Some(s),
            tag,
        }
    }

    fn partition(&self) -> Result<&Partition> {
        self.partition
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("expected a partition-labeled representation".into()))
    }

    fn symbol(&self) -> Result<&Symbol> {
        self.symbol
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("expected a symbol-labeled representation".into()))
    }
}

/// The defects occurring for a series: odd positive for B/C, multiples of 4
/// for split D, 2 mod 4 for twisted D.
fn defects(series: Series, rank: u32) -> Vec<i64> {
    let start: i64 = match series {
        Series::B | Series::C => 1,
        Series::D => 0,
        Series::TwistedD => 2,
        _ => return Vec::new(),
    };
    let step: i64 = match series {
        Series::B | Series::C => 2,
        _ => 4,
    };
    let mut out = Vec::new();
    let mut d = start;
    while crate::symbol::delta(1, 0, d) <= rank as i64 {
        out.push(d);
        d += step;
    }
    out
}

/// All unipotent representations of the given form.
pub fn enumerate_unipotent(form: FiniteGroupForm) -> Result<Vec<UnipotentRep>> {
    let n = form.rank;
    match form.series {
        Series::A | Series::TwistedA => Ok(crate::partition::partitions_of(n)
            .into_iter()
            .map(|lam| UnipotentRep::from_partition(form, lam))
            .collect()),
        Series::B | Series::C | Series::D | Series::TwistedD => {
            let mut out = Vec::new();
            for d in defects(form.series, n) {
                for s in symbols_with(1, 0, d, n as i64) {
                    if d == 0 {
                        // Defect zero: keep one representative per flip
                        // orbit, doubling the degenerate ones.
                        let u = s.underline();
                        if u != s {
                            continue;
                        }
                        if s.top() == s.bottom() {
                            out.push(UnipotentRep::from_symbol(
                                form,
                                s.clone(),
                                Some(DegenerateTag::I),
                            ));
                            out.push(UnipotentRep::from_symbol(form, s, Some(DegenerateTag::II)));
                        } else {
                            out.push(UnipotentRep::from_symbol(form, s, None));
                        }
                    } else {
                        out.push(UnipotentRep::from_symbol(form, s, None));
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Beta-set from the strictly increasing union of 2X+c1 and 2Y+c2.
fn doubled_beta(x: &[u32], cx: u32, y: &[u32], cy: u32) -> BetaSet {
    let mut entries: Vec<u32> = x
        .iter()
        .map(|&e| 2 * e + cx)
        .chain(y.iter().map(|&e| 2 * e + cy))
        .collect();
    entries.sort_unstable();
    BetaSet::new(entries).expect("doubled rows interleave strictly")
}

/// The Kawanaka wavefront set of a unipotent representation. Constant on
/// families: it only depends on the special symbol of the class.
pub fn kawanaka_wf(rep: &UnipotentRep) -> Result<Partition> {
    match rep.series {
        Series::A | Series::TwistedA => Ok(rep.partition()?.transpose()),
        _ => {
            let sp = rep.symbol()?.special()?;
            kawanaka_wf_of_special(rep.series, &sp)
        }
    }
}

/// The special orbit attached to a family, from its special symbol.
pub fn kawanaka_wf_of_special(series: Series, sp: &Symbol) -> Result<Partition> {
    let (x, y) = (sp.top(), sp.bottom());
    match series {
        Series::B => Ok(partition_from_beta(&doubled_beta(x, 1, y, 0)).transpose()),
        Series::C => Ok(partition_from_beta(&doubled_beta(x, 0, y, 1)).transpose()),
        Series::D | Series::TwistedD => {
            let t = partition_from_beta(&doubled_beta(x, 1, y, 0)).transpose();
            collapse(&t, ClassicalType::D)
        }
        _ => Err(Error::InvalidInput(
            "type A families are labeled by partitions, not symbols".into(),
        )),
    }
}

/// A family identifier: the parameter itself in type A (families are
/// singletons there), the special symbol of the class otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyId {
    Singleton(Partition),
    Special(Symbol),
}

pub fn family_of(rep: &UnipotentRep) -> Result<FamilyId> {
    match rep.series {
        Series::A | Series::TwistedA => Ok(FamilyId::Singleton(rep.partition()?.clone())),
        _ => Ok(FamilyId::Special(rep.symbol()?.special()?)),
    }
}

/// All families of the form, each with its special orbit (the Kawanaka
/// wavefront set common to the family).
pub fn families(form: FiniteGroupForm) -> Result<Vec<(FamilyId, Partition)>> {
    let mut out: Vec<(FamilyId, Partition)> = Vec::new();
    for rep in enumerate_unipotent(form)? {
        let id = family_of(&rep)?;
        if out.iter().all(|(seen, _)| seen != &id) {
            let wf = kawanaka_wf(&rep)?;
            out.push((id, wf));
        }
    }
    Ok(out)
}

/// Inverse of the family/special-orbit bijection: the special symbol whose
/// Kawanaka wavefront set is the given special orbit.
pub fn family_symbol_from_orbit(series: Series, rank: u32, orbit: &Partition) -> Result<Symbol> {
    let mut seen: Vec<Symbol> = Vec::new();
    for d in defects(series, rank) {
        for s in symbols_with(1, 0, d, rank as i64) {
            let sp = s.special()?;
            if seen.contains(&sp) {
                continue;
            }
            seen.push(sp.clone());
            if &kawanaka_wf_of_special(series, &sp)? == orbit {
                return Ok(sp);
            }
        }
    }
    Err(Error::InvalidInput(format!(
        "{orbit} is not a special orbit for series {series} rank {rank}"
    )))
}

/// Harish-Chandra series data: the cuspidal-support index r, the relative
/// Weyl group label, and its rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcSeries {
    pub r: u32,
    pub weyl_rank: u32,
    pub bipartition: Option<Bipartition>,
    pub partition: Option<Partition>,
}

/// Number of boxes of lambda with odd hook length minus the number with
/// even hook length.
fn hook_imbalance(lambda: &Partition) -> i64 {
    let t = lambda.transpose();
    let mut diff = 0i64;
    for i in 0..lambda.len() {
        for j in 0..lambda.part(i) {
            let hook = (lambda.part(i) - j - 1) + (t.part(j as usize) - i as u32 - 1) + 1;
            diff += if hook % 2 == 1 { 1 } else { -1 };
        }
    }
    diff
}

/// The Harish-Chandra series of a unipotent representation.
pub fn hc_series(rep: &UnipotentRep) -> Result<HcSeries> {
    let n = rep.rank;
    match rep.series {
        Series::A => Ok(HcSeries {
            r: 0,
            weyl_rank: n,
            bipartition: None,
            partition: Some(rep.partition()?.clone()),
        }),
        Series::TwistedA => {
            let lambda = rep.partition()?;
            let imbalance = hook_imbalance(lambda);
            // Solve imbalance = s(s+1)/2 for s >= 0.
            let mut s = 0i64;
            while s * (s + 1) / 2 < imbalance {
                s += 1;
            }
            if s * (s + 1) / 2 != imbalance {
                return Err(Error::InvalidInput(format!(
                    "hook imbalance {imbalance} of {lambda} is not triangular"
                )));
            }
            // Odd-length beta-set, split by parity.
            let len = if lambda.len() % 2 == 1 { lambda.len() } else { lambda.len() + 1 };
            let z = beta_from_partition(lambda, len)?;
            let xs: Vec<u32> = z.entries().iter().filter(|&&e| e % 2 == 0).map(|&e| e / 2).collect();
            let ys: Vec<u32> =
                z.entries().iter().filter(|&&e| e % 2 == 1).map(|&e| (e - 1) / 2).collect();
            let px = partition_from_beta(&BetaSet::new(xs)?);
            let py = partition_from_beta(&BetaSet::new(ys)?);
            let bip = if s % 2 == 0 {
                Bipartition::new(px, py)
            } else {
                Bipartition::new(py, px)
            };
            let weyl_rank = (n as i64 - s * (s + 1) / 2) as u32 / 2;
            Ok(HcSeries {
                r: s as u32,
                weyl_rank,
                bipartition: Some(bip),
                partition: None,
            })
        }
        Series::B | Series::C | Series::D | Series::TwistedD => {
            let s = rep.symbol()?;
            let d = s.defect();
            let r = match rep.series {
                Series::B | Series::C => (d - 1) / 2,
                _ => d / 2,
            } as u32;
            let weyl_rank = match rep.series {
                Series::B | Series::C => n - r * r - r,
                _ => n - r * r,
            };
            let bip = match s.d_label()? {
                DLabel::Ordered(b) => b,
                DLabel::Unordered(u) => Bipartition::new(u.first, u.second),
            };
            Ok(HcSeries {
                r,
                weyl_rank,
                bipartition: Some(bip),
                partition: None,
            })
        }
    }
}
