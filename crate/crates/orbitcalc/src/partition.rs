//! Partitions and exact partition arithmetic.
//!
//! - [`Partition`]: canonical non-increasing sequence of positive integers
//! - [`Partition::dominance_leq`]: the dominance order via prefix sums
//! - [`Partition::transpose`], [`Partition::union`], [`Partition::diff`]
//! - [`ClassicalType`] membership tests and the B/C/D collapse
//! - [`dbv`]: the Barbasch-Vogan-Spaltenstein duality on B/C/D-partitions
//!
//! Partitions serialize as plain JSON arrays in non-increasing order.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A partition: a non-increasing sequence of positive integers.
///
/// The canonical form stores no zero parts; all equality is on canonical
/// forms. Constructors accept parts in any order (sources sometimes list
/// partitions non-decreasingly) and normalize.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

impl Partition {
    /// Build a partition from parts in any order; zeros are stripped.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from possibly-negative entries, failing on negatives.
    pub fn try_from_signed<I: IntoIterator<Item = i64>>(parts: I) -> Result<Self> {
        let mut out = Vec::new();
        for p in parts {
            if p < 0 {
                return Err(Error::NotAPartition(format!("negative part {p}")));
            }
            if p > 0 {
                out.push(p as u32);
            }
        }
        Ok(Partition::new(out))
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|lambda|`: the sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `#lambda`: the number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True iff there are no parts.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), padded with zeros.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of `x` as a part.
    pub fn multiplicity(&self, x: u32) -> usize {
        self.parts.iter().filter(|&&p| p == x).count()
    }

    /// Height of `x`: the number of parts `>= x`.
    pub fn height(&self, x: u32) -> usize {
        self.parts.iter().filter(|&&p| p >= x).count()
    }

    /// Dominance order: `self <= other` iff every prefix sum of `self` is at
    /// most the corresponding prefix sum of `other` (zero-padded). Note this
    /// compares sequences of possibly different sizes; for partitions of the
    /// same integer it is the usual dominance order.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        dominance_leq_seqs(
            &self.parts.iter().map(|&p| p as i64).collect::<Vec<_>>(),
            &other.parts.iter().map(|&p| p as i64).collect::<Vec<_>>(),
        )
    }

    /// The transpose (conjugate) partition.
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 1..=cols {
            out.push(self.height(c as u32) as u32);
        }
        Partition { parts: out }
    }

    /// Union by adding multiplicities (merge of sorted part lists).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// True iff `other` is a sub-multiset of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .collect::<std::collections::HashSet<_>>()
            .iter()
            .all(|&&x| other.multiplicity(x) <= self.multiplicity(x))
    }

    /// Multiset difference `self \ other`; errors if `other` is not contained.
    pub fn diff(&self, other: &Partition) -> Result<Partition> {
        if !self.contains(other) {
            return Err(Error::InvalidInput(format!(
                "{other} is not a sub-multiset of {self}"
            )));
        }
        let mut remaining = self.parts.clone();
        for &x in other.parts() {
            let pos = remaining.iter().position(|&p| p == x).unwrap();
            remaining.remove(pos);
        }
        Ok(Partition::new(remaining))
    }

    /// `lambda^+`: add one box to the largest part (of the empty partition:
    /// the single part 1).
    pub fn plus(&self) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(1);
        } else {
            parts[0] += 1;
        }
        Partition { parts }
    }

    /// `lambda^-`: remove one box from the smallest part.
    ///
    /// Errors on the empty partition.
    pub fn minus(&self) -> Result<Partition> {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            None => Err(Error::InvalidInput(
                "cannot remove a box from the empty partition".into(),
            )),
            Some(last) => {
                *last -= 1;
                Ok(Partition::new(parts))
            }
        }
    }

    /// All parts even, each with even multiplicity.
    pub fn is_very_even(&self) -> bool {
        self.distinct_parts()
            .iter()
            .all(|&x| x % 2 == 0 && self.multiplicity(x) % 2 == 0)
    }

    /// Even parts with even multiplicity; odd parts with multiplicity <= 1.
    pub fn is_rather_odd(&self) -> bool {
        self.distinct_parts().iter().all(|&x| {
            if x % 2 == 0 {
                self.multiplicity(x) % 2 == 0
            } else {
                self.multiplicity(x) <= 1
            }
        })
    }

    /// The distinct part values, descending.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut out = self.parts.clone();
        out.dedup();
        out
    }

    /// Halve all multiplicities; errors if some multiplicity is odd.
    pub fn halve_multiplicities(&self) -> Result<Partition> {
        let mut out = Vec::with_capacity(self.parts.len() / 2);
        let mut i = 0;
        while i < self.parts.len() {
            if i + 1 >= self.parts.len() || self.parts[i] != self.parts[i + 1] {
                return Err(Error::InvalidInput(format!(
                    "{self} does not have all multiplicities even"
                )));
            }
            out.push(self.parts[i]);
            i += 2;
        }
        Ok(Partition { parts: out })
    }
}

/// Dominance comparison of raw integer sequences, zero-padded on the right.
///
/// This is the prefix-sum order on sequences; it is used both for partitions
/// and for the non-decreasing sequences arising from linear presentations of
/// symbols (those are compared after reversing to non-increasing order by the
/// caller when needed -- this function compares positionally as given).
pub fn dominance_leq_seqs(a: &[i64], b: &[i64]) -> bool {
    let n = a.len().max(b.len());
    let mut pa = 0i64;
    let mut pb = 0i64;
    for i in 0..n {
        pa += a.get(i).copied().unwrap_or(0);
        pb += b.get(i).copied().unwrap_or(0);
        if pa > pb {
            return false;
        }
    }
    true
}

/// The three classical families of partition-classified nilpotent orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalType {
    /// Odd orthogonal: partitions of 2n+1, even parts with even multiplicity.
    B,
    /// Symplectic: partitions of 2n, odd parts with even multiplicity.
    C,
    /// Even orthogonal: partitions of 2n, even parts with even multiplicity.
    D,
}

impl ClassicalType {
    /// Parity required of `|lambda|` (0 = even, 1 = odd).
    pub fn size_parity(self) -> u64 {
        match self {
            ClassicalType::B => 1,
            ClassicalType::C | ClassicalType::D => 0,
        }
    }

    /// The part parity that is constrained to even multiplicity
    /// (0 = even parts constrained, 1 = odd parts constrained).
    fn constrained_parity(self) -> u32 {
        match self {
            ClassicalType::B | ClassicalType::D => 0,
            ClassicalType::C => 1,
        }
    }
}

impl std::fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Membership of `lambda` in the B/C/D partition set (size parity and the
/// even-multiplicity rule for the constrained parity).
pub fn is_member(lambda: &Partition, t: ClassicalType) -> bool {
    lambda.size() % 2 == t.size_parity()
        && lambda
            .distinct_parts()
            .iter()
            .all(|&x| x % 2 != t.constrained_parity() || lambda.multiplicity(x) % 2 == 0)
}

/// The X-collapse: the unique dominance-largest X-partition below `lambda`.
///
/// Constructive algorithm: while some part of the constrained parity has odd
/// multiplicity, take the largest such value `q`, remove a box from its last
/// occurrence, and add a box to the first later position whose part is
/// strictly smaller than `q - 1` (padding with a zero part if necessary).
pub fn collapse(lambda: &Partition, t: ClassicalType) -> Result<Partition> {
    if lambda.size() % 2 != t.size_parity() {
        return Err(Error::SizeParity(format!(
            "|{lambda}| = {} has the wrong parity for type {t}",
            lambda.size()
        )));
    }
    let parity = t.constrained_parity();
    let mut parts: Vec<u32> = lambda.parts().to_vec();
    loop {
        let bad = parts
            .iter()
            .filter(|&&p| p % 2 == parity)
            .find(|&&q| parts.iter().filter(|&&p| p == q).count() % 2 == 1)
            .copied();
        let q = match bad {
            None => break,
            Some(q) => q,
        };
        // Last occurrence of q loses a box...
        let i = parts.iter().rposition(|&p| p == q).unwrap();
        parts[i] -= 1;
        // ...and the first later part strictly below q-1 gains one.
        match (i + 1..parts.len()).find(|&j| parts[j] < q - 1) {
            Some(j) => parts[j] += 1,
            None => parts.push(1),
        }
    }
    let out = Partition::new(parts);
    debug_assert!(is_member(&out, t));
    debug_assert!(out.dominance_leq(lambda));
    Ok(out)
}

/// The Barbasch-Vogan-Spaltenstein dual of an X-partition:
/// B -> C via `((lambda^t)^-)_C`, C -> B via `((lambda^t)^+)_B`,
/// D -> D via `(lambda^t)_D`.
pub fn dbv(lambda: &Partition, t: ClassicalType) -> Result<Partition> {
    if !is_member(lambda, t) {
        return Err(Error::NotMember(format!(
            "{lambda} is not a {t}-partition"
        )));
    }
    let lt = lambda.transpose();
    match t {
        ClassicalType::B => collapse(&lt.minus()?, ClassicalType::C),
        ClassicalType::C => collapse(&lt.plus(), ClassicalType::B),
        ClassicalType::D => collapse(&lt, ClassicalType::D),
    }
}

/// All partitions of `n`, in no particular order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All X-partitions of `n`.
pub fn members_of(n: u32, t: ClassicalType) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| is_member(p, t))
        .collect()
}

/// All rather-odd partitions of `n`.
pub fn rather_odd_of(n: u32) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(Partition::is_rather_odd)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn dominance_basics() {
        assert!(p(&[2, 1, 1]).dominance_leq(&p(&[3, 1])));
        assert!(p(&[3, 1]).dominance_leq(&p(&[3, 1])));
        assert!(!p(&[3, 1]).dominance_leq(&p(&[2, 2])));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[4, 2, 1]).transpose(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(lam.transpose().transpose(), lam);
            }
        }
    }

    #[test]
    fn union_examples() {
        assert_eq!(p(&[3, 1]).union(&p(&[2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[3, 1]).union(&Partition::empty()), p(&[3, 1]));
        assert_eq!(p(&[2, 1]).union(&p(&[3, 1])), p(&[3, 1]).union(&p(&[2, 1])));
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&p(&[3, 3]), ClassicalType::C));
        // Odd parts must have even multiplicity in type C; the part 1 appears
        // twice here, so this is a valid C-partition.
        assert!(is_member(&p(&[2, 1, 1]), ClassicalType::C));
        assert!(is_member(&p(&[2, 2, 1]), ClassicalType::B));
        assert!(!is_member(&p(&[2, 1]), ClassicalType::B));
        assert!(!is_member(&p(&[3, 1, 1, 1]), ClassicalType::C));
    }

    #[test]
    fn very_even_rather_odd() {
        assert!(p(&[4, 4, 2, 2]).is_very_even());
        assert!(!p(&[4, 2, 2]).is_very_even());
        assert!(p(&[12, 12, 5, 3]).is_rather_odd());
        assert!(!p(&[1, 1]).is_rather_odd());
        assert!(Partition::empty().is_very_even());
        assert!(Partition::empty().is_rather_odd());
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(
            collapse(&p(&[5, 1]), ClassicalType::C).unwrap(),
            p(&[4, 2])
        );
        assert_eq!(
            collapse(&p(&[3, 2, 2, 1]), ClassicalType::C).unwrap(),
            p(&[2, 2, 2, 2])
        );
        // Idempotence on members.
        for n in [4u32, 6] {
            for t in [ClassicalType::C, ClassicalType::D] {
                for lam in members_of(n, t) {
                    assert_eq!(collapse(&lam, t).unwrap(), lam);
                }
            }
        }
        assert!(collapse(&p(&[3, 1]), ClassicalType::B).is_err());
    }

    /// Brute-force oracle: the dominance-maximum over all members below
    /// `lambda`, which must exist and be unique.
    fn collapse_oracle(lambda: &Partition, t: ClassicalType) -> Partition {
        let below: Vec<Partition> = members_of(lambda.size() as u32, t)
            .into_iter()
            .filter(|mu| mu.dominance_leq(lambda))
            .collect();
        let max = below
            .iter()
            .filter(|mu| below.iter().all(|nu| nu.dominance_leq(mu)))
            .collect::<Vec<_>>();
        assert_eq!(max.len(), 1, "no unique max below {lambda} in type {t}");
        max[0].clone()
    }

    #[test]
    fn collapse_matches_oracle_small() {
        for n in 0..=9u32 {
            for lam in partitions_of(n) {
                for t in [ClassicalType::B, ClassicalType::C, ClassicalType::D] {
                    if lam.size() % 2 != t.size_parity() {
                        continue;
                    }
                    assert_eq!(
                        collapse(&lam, t).unwrap(),
                        collapse_oracle(&lam, t),
                        "collapse({lam}, {t})"
                    );
                }
            }
        }
    }

    #[test]
    fn dbv_examples() {
        assert_eq!(dbv(&p(&[3, 1, 1]), ClassicalType::B).unwrap(), p(&[2, 2]));
        assert_eq!(dbv(&p(&[2, 2]), ClassicalType::C).unwrap(), p(&[3, 1, 1]));
        assert_eq!(
            dbv(&p(&[3, 1]), ClassicalType::D).unwrap(),
            p(&[1, 1, 1, 1])
        );
        assert!(dbv(&p(&[2, 1, 1]), ClassicalType::B).is_err());
    }

    #[test]
    fn dbv_order_reversing_and_stable() {
        for (n, t) in [
            (8u32, ClassicalType::C),
            (8, ClassicalType::D),
            (9, ClassicalType::B),
        ] {
            let members = members_of(n, t);
            for a in &members {
                let da = dbv(a, t).unwrap();
                // d o d o d = d (stability on the special locus).
                let tt = match t {
                    ClassicalType::B => ClassicalType::C,
                    ClassicalType::C => ClassicalType::B,
                    ClassicalType::D => ClassicalType::D,
                };
                let dda = dbv(&da, tt).unwrap();
                assert_eq!(dbv(&dda, t).unwrap(), da);
                for b in &members {
                    if a.dominance_leq(b) {
                        assert!(dbv(b, t).unwrap().dominance_leq(&da));
                    }
                }
            }
        }
    }

    #[test]
    fn union_dominance_lemma_small() {
        // For partitions a1 <= a2 and b1 <= b2: a1 u b1 <= a2 u b2.
        for n in 0..=5u32 {
            for m in 0..=5u32 {
                let ps_n = partitions_of(n);
                let ps_m = partitions_of(m);
                for a1 in &ps_n {
                    for a2 in &ps_n {
                        if !a1.dominance_leq(a2) {
                            continue;
                        }
                        for b1 in &ps_m {
                            for b2 in &ps_m {
                                if b1.dominance_leq(b2) {
                                    assert!(a1.union(b1).dominance_leq(&a2.union(b2)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn diff_and_contains() {
        let lam = p(&[4, 2, 2, 1]);
        assert!(lam.contains(&p(&[2, 1])));
        assert_eq!(lam.diff(&p(&[2, 1])).unwrap(), p(&[4, 2]));
        assert!(lam.diff(&p(&[3])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let lam = p(&[4, 2, 1]);
        let s = serde_json::to_string(&lam).unwrap();
        assert_eq!(s, "[4,2,1]");
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, lam);
        // Non-decreasing input normalizes.
        let back: Partition = serde_json::from_str("[1,2,4]").unwrap();
        assert_eq!(back, lam);
    }
}
