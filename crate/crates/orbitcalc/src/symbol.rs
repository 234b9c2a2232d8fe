//! Beta-sets and the two-row symbol calculus.
//!
//! A symbol is a pair of rows (X, Y) of non-negative integers with gap
//! parameters (a, b): consecutive entries in a row differ by at least a+b,
//! and the bottom row starts at b or higher. Symbols are considered up to
//! shift; the canonical representative is the shift-minimal one. On top of
//! the basic invariants (defect, content, rank) this module implements:
//!
//! - the bijection to bipartitions (`bipartition` / `from_bipartition`)
//! - the unordered variant through the underline normal form (`d_label`)
//! - special symbols and similarity classes (`special`, `similar`)
//! - the defect-shifting map `shriek` (S -> S^!) and the doubling map
//!   `tilde` (S -> (2X, 2Y+1)^sp)
//! - canonical linear presentations (Z*, eps*)
//! - entrywise addition of shift-aligned symbols

use serde::{Deserialize, Serialize};

use crate::partition::{dominance_leq_seqs, Partition};
use crate::{Error, Result};

/// A strictly increasing sequence of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct BetaSet {
    entries: Vec<u32>,
}

impl TryFrom<Vec<u32>> for BetaSet {
    type Error = Error;
    fn try_from(entries: Vec<u32>) -> Result<Self> {
        BetaSet::new(entries)
    }
}

impl From<BetaSet> for Vec<u32> {
    fn from(x: BetaSet) -> Self {
        x.entries
    }
}

impl BetaSet {
    /// Validates strict monotonicity.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "beta-set entries must strictly increase: {entries:?}"
            )));
        }
        Ok(BetaSet { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
}

/// The partition associated to a beta-set: (x_1 - 0, x_2 - 1, ...).
pub fn partition_from_beta(x: &BetaSet) -> Partition {
    Partition::new(
        x.entries
            .iter()
            .enumerate()
            .map(|(i, &e)| e - i as u32),
    )
}

/// The beta-set of the given length associated to a partition: pad with
/// zeros to `length` parts, sort non-decreasing, add (0, 1, 2, ...).
pub fn beta_from_partition(lambda: &Partition, length: usize) -> Result<BetaSet> {
    if length < lambda.len() {
        return Err(Error::InvalidInput(format!(
            "beta-set length {length} is too small for {lambda}"
        )));
    }
    let mut asc: Vec<u32> = vec![0; length - lambda.len()];
    asc.extend(lambda.parts().iter().rev());
    BetaSet::new(
        asc.iter()
            .enumerate()
            .map(|(i, &p)| p + i as u32)
            .collect(),
    )
}

/// The correction term Delta^{a,b}_d relating rank and relative rank.
pub fn delta(a: u32, b: u32, d: i64) -> i64 {
    let ab = (a + b) as i64;
    ab * ((d * d) / 4) - (b as i64) * d.div_euclid(2)
}

/// Dominance comparison of two integer multisets: `a >= b` iff after sorting
/// both in non-increasing order, every prefix sum of `a` is at least the
/// corresponding prefix sum of `b`. This is the order used on symbol rows,
/// linear presentations, and s-symbols "viewed as non-decreasing sequences".
pub fn multiset_dominance_geq(a: &[i64], b: &[i64]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    dominance_leq_seqs(&b, &a)
}

/// A pair of partitions with |alpha| + |beta| = n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta }
    }

    pub fn empty() -> Self {
        Bipartition::new(Partition::empty(), Partition::empty())
    }

    pub fn size(&self) -> u64 {
        self.alpha.size() + self.beta.size()
    }

    pub fn flip(&self) -> Bipartition {
        Bipartition::new(self.beta.clone(), self.alpha.clone())
    }
}

impl std::fmt::Display for Bipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}", self.alpha, self.beta)
    }
}

/// A Z2-orbit of bipartitions; `degenerate` marks the fixed points
/// (alpha = beta). Stored with the canonical order given by the underline
/// rule that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnorderedBipartition {
    pub first: Partition,
    pub second: Partition,
    pub degenerate: bool,
}

/// The image of the unordered-rows bijection: ordered for nonzero defect,
/// unordered (with degeneracy flag) for defect zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DLabel {
    Ordered(Bipartition),
    Unordered(UnorderedBipartition),
}

/// A two-row symbol with gap parameters (a, b). Rows are stored ascending.
///
/// Equality is representative equality; use [`Symbol::canonical`] (or the
/// canonicalizing constructor [`Symbol::new`]) before comparing shift
/// classes. JSON serialization always emits the canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    a: u32,
    b: u32,
    top: Vec<u32>,
    bottom: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct SymbolRepr {
    a: u32,
    b: u32,
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let c = self.canonical();
        SymbolRepr {
            a: c.a,
            b: c.b,
            top: c.top,
            bottom: c.bottom,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SymbolRepr::deserialize(d)?;
        Symbol::new(r.a, r.b, r.top, r.bottom).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for Symbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?},{:?})", self.top, self.bottom)
    }
}

impl Symbol {
    /// Validating, canonicalizing constructor.
    pub fn new(a: u32, b: u32, top: Vec<u32>, bottom: Vec<u32>) -> Result<Symbol> {
        Ok(Symbol::new_raw(a, b, top, bottom)?.canonical())
    }

    /// Validating constructor that keeps the given representative.
    pub fn new_raw(a: u32, b: u32, top: Vec<u32>, bottom: Vec<u32>) -> Result<Symbol> {
        let gap = a + b;
        for row in [&top, &bottom] {
            if row.windows(2).any(|w| w[1] < w[0] + gap) {
                return Err(Error::InvalidSymbol(format!(
                    "row {row:?} violates the gap condition for (a,b)=({a},{b})"
                )));
            }
        }
        if let Some(&y1) = bottom.first() {
            if y1 < b {
                return Err(Error::InvalidSymbol(format!(
                    "bottom row must start at {b} or higher, got {y1}"
                )));
            }
        }
        Ok(Symbol { a, b, top, bottom })
    }

    /// The all-zero symbol with parameters (0,0): the identity for `add`.
    pub fn zeros(r: usize, s: usize) -> Symbol {
        Symbol {
            a: 0,
            b: 0,
            top: vec![0; r],
            bottom: vec![0; s],
        }
    }

    pub fn params(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// d(S) = |X| - |Y|.
    pub fn defect(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// |S| = |X| + |Y|.
    pub fn content(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    fn entry_sum(&self) -> i64 {
        self.top.iter().chain(&self.bottom).map(|&e| e as i64).sum()
    }

    /// The rank r(S): entry sum minus a triangular correction.
    pub fn rank(&self) -> i64 {
        let m = self.content() as i64;
        self.entry_sum() - ((self.a + self.b) as i64) * ((m - 1) * (m - 1) / 4)
            - (self.b as i64) * (m / 2)
    }

    /// The relative rank m(S) = r(S) - Delta^{a,b}_d.
    pub fn relative_rank(&self) -> i64 {
        self.rank() - delta(self.a, self.b, self.defect())
    }

    /// All entries of both rows, sorted ascending (as a multiset).
    pub fn entries_sorted(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        v.sort_unstable();
        v
    }

    /// The shift ({0} u (X+a+b), {b} u (Y+a+b)).
    pub fn shift(&self) -> Symbol {
        let gap = self.a + self.b;
        let mut top = vec![0];
        top.extend(self.top.iter().map(|&x| x + gap));
        let mut bottom = vec![self.b];
        bottom.extend(self.bottom.iter().map(|&y| y + gap));
        Symbol {
            a: self.a,
            b: self.b,
            top,
            bottom,
        }
    }

    /// The shift-minimal representative.
    pub fn canonical(&self) -> Symbol {
        let mut s = self.clone();
        while !s.top.is_empty()
            && !s.bottom.is_empty()
            && s.top[0] == 0
            && s.bottom[0] == s.b
            && s.top[1..].iter().all(|&x| x >= s.a + s.b)
            && s.bottom[1..].iter().all(|&y| y >= s.a + s.b + s.b)
        {
            let gap = s.a + s.b;
            s.top = s.top[1..].iter().map(|&x| x - gap).collect();
            s.bottom = s.bottom[1..].iter().map(|&y| y - gap).collect();
        }
        s
    }

    pub fn is_canonical(&self) -> bool {
        self == &self.canonical()
    }

    /// Shift upward until the content is exactly `c`.
    pub fn with_content(&self, c: usize) -> Result<Symbol> {
        let mut s = self.clone();
        if c < s.content() || (c - s.content()) % 2 != 0 {
            return Err(Error::SymbolMismatch(format!(
                "cannot shift {s} from content {} to {c}",
                s.content()
            )));
        }
        while s.content() < c {
            s = s.shift();
        }
        Ok(s)
    }

    /// Swap the rows. Errors if the former top row cannot serve as a bottom
    /// row (only possible when b > 0).
    pub fn flip(&self) -> Result<Symbol> {
        Symbol::new_raw(self.a, self.b, self.bottom.clone(), self.top.clone())
    }

    /// Special: defect in {0,1} and the rows interlace
    /// (x_1 <= y_1 <= x_2 <= ...).
    pub fn is_special(&self) -> bool {
        if !matches!(self.defect(), 0 | 1) {
            return false;
        }
        for i in 0..self.bottom.len() {
            if self.top[i] > self.bottom[i] {
                return false;
            }
            if i + 1 < self.top.len() && self.bottom[i] > self.top[i + 1] {
                return false;
            }
        }
        true
    }

    /// The unique special symbol similar to this one: interlace the sorted
    /// entry multiset at defect 0 or 1 (by content parity). Errors if the
    /// interlaced arrangement is not a valid symbol (cannot happen for the
    /// parameter values arising in practice).
    pub fn special(&self) -> Result<Symbol> {
        let entries = self.entries_sorted();
        let top: Vec<u32> = entries.iter().copied().step_by(2).collect();
        let bottom: Vec<u32> = entries.iter().copied().skip(1).step_by(2).collect();
        let s = Symbol::new_raw(self.a, self.b, top, bottom).map_err(|e| {
            Error::InvalidSymbol(format!("no special arrangement for {self}: {e}"))
        })?;
        debug_assert!(s.is_special());
        Ok(s.canonical())
    }

    /// Similarity: same parameters and rank, and shift-aligned entry
    /// multisets coincide.
    pub fn similar(&self, other: &Symbol) -> Result<bool> {
        if self.params() != other.params() {
            return Err(Error::SymbolMismatch(format!(
                "parameter mismatch: {:?} vs {:?}",
                self.params(),
                other.params()
            )));
        }
        if self.rank() != other.rank() {
            return Err(Error::SymbolMismatch(format!(
                "rank mismatch: {} vs {}",
                self.rank(),
                other.rank()
            )));
        }
        let (mut s1, mut s2) = (self.canonical(), other.canonical());
        while s1.content() < s2.content() {
            s1 = s1.shift();
        }
        while s2.content() < s1.content() {
            s2 = s2.shift();
        }
        Ok(s1.entries_sorted() == s2.entries_sorted())
    }

    /// The bipartition of the symbol: subtract the base (0, a+b, 2(a+b), ...)
    /// from the top row and (b, b+(a+b), ...) from the bottom row.
    pub fn bipartition(&self) -> Bipartition {
        let gap = self.a + self.b;
        let alpha = Partition::new(
            self.top
                .iter()
                .enumerate()
                .map(|(j, &x)| x - (j as u32) * gap),
        );
        let beta = Partition::new(
            self.bottom
                .iter()
                .enumerate()
                .map(|(j, &y)| y - self.b - (j as u32) * gap),
        );
        Bipartition::new(alpha, beta)
    }

    /// Inverse of [`Symbol::bipartition`] at the prescribed defect, with the
    /// shortest rows accommodating both partitions. Returns the canonical
    /// representative.
    pub fn from_bipartition(a: u32, b: u32, bip: &Bipartition, d: i64) -> Symbol {
        let la = bip.alpha.len() as i64;
        let lb = bip.beta.len() as i64;
        let s = lb.max(la - d).max(-d).max(0);
        let r = s + d;
        let gap = a + b;
        let pad = |p: &Partition, len: i64| -> Vec<u32> {
            let mut asc = vec![0u32; (len as usize).saturating_sub(p.len())];
            asc.extend(p.parts().iter().rev());
            asc
        };
        let top: Vec<u32> = pad(&bip.alpha, r)
            .iter()
            .enumerate()
            .map(|(j, &x)| x + (j as u32) * gap)
            .collect();
        let bottom: Vec<u32> = pad(&bip.beta, s)
            .iter()
            .enumerate()
            .map(|(j, &y)| y + b + (j as u32) * gap)
            .collect();
        let sym = Symbol { a, b, top, bottom };
        debug_assert_eq!(sym.defect(), d);
        debug_assert_eq!(&sym.bipartition(), bip);
        sym.canonical()
    }

    /// The underline normal form of a b = 0 symbol: the larger row on top
    /// (for defect 0, the row with the larger entry sum on top).
    pub fn underline(&self) -> Symbol {
        let flip = match self.defect() {
            0 => {
                let st: i64 = self.top.iter().map(|&x| x as i64).sum();
                let sb: i64 = self.bottom.iter().map(|&y| y as i64).sum();
                st < sb
            }
            d => d < 0,
        };
        if flip {
            Symbol {
                a: self.a,
                b: self.b,
                top: self.bottom.clone(),
                bottom: self.top.clone(),
            }
        } else {
            self.clone()
        }
    }

    /// The unordered-rows label: bipartition of the underline form; for
    /// defect 0 an unordered bipartition with a degeneracy flag.
    ///
    /// Requires b = 0.
    pub fn d_label(&self) -> Result<DLabel> {
        if self.b != 0 {
            return Err(Error::SymbolMismatch(format!(
                "row-unordered labels require b = 0, got b = {}",
                self.b
            )));
        }
        let u = self.underline();
        let bip = u.bipartition();
        if self.defect() == 0 {
            let degenerate = {
                let c = self.canonical();
                c.top == c.bottom
            };
            Ok(DLabel::Unordered(UnorderedBipartition {
                first: bip.alpha,
                second: bip.beta,
                degenerate,
            }))
        } else {
            Ok(DLabel::Ordered(bip))
        }
    }

    /// S^! = ({0} u (X+1), Y+1): maps (a,b) = (1,0) symbols of defect d to
    /// (0,1) symbols of defect d+1, preserving the bipartition.
    pub fn shriek(&self) -> Result<Symbol> {
        if self.params() != (1, 0) {
            return Err(Error::SymbolMismatch(format!(
                "the ! map needs an (a,b) = (1,0) symbol, got {:?}",
                self.params()
            )));
        }
        let mut top = vec![0];
        top.extend(self.top.iter().map(|&x| x + 1));
        let bottom: Vec<u32> = self.bottom.iter().map(|&y| y + 1).collect();
        Symbol::new_raw(0, 1, top, bottom)
    }

    /// The canonical linear presentation (Z*, eps*): entries sorted
    /// ascending, ties resolved top row first; eps marks bottom-row entries.
    ///
    /// Requires b = 0 and a > 0 (which makes the presentation unique).
    pub fn linear_presentation(&self) -> Result<(Vec<u32>, Vec<u8>)> {
        if self.b != 0 || self.a == 0 {
            return Err(Error::SymbolMismatch(format!(
                "canonical linear presentations require a > 0, b = 0, got {:?}",
                self.params()
            )));
        }
        let mut tagged: Vec<(u32, u8)> = self
            .top
            .iter()
            .map(|&x| (x, 0u8))
            .chain(self.bottom.iter().map(|&y| (y, 1u8)))
            .collect();
        tagged.sort_unstable();
        Ok((
            tagged.iter().map(|&(z, _)| z).collect(),
            tagged.iter().map(|&(_, e)| e).collect(),
        ))
    }

    /// Reassemble a symbol from a linear presentation.
    pub fn from_linear(a: u32, b: u32, z: &[u32], eps: &[u8]) -> Result<Symbol> {
        if z.len() != eps.len() {
            return Err(Error::InvalidInput(
                "linear presentation length mismatch".into(),
            ));
        }
        let top: Vec<u32> = z
            .iter()
            .zip(eps)
            .filter(|&(_, &e)| e == 0)
            .map(|(&v, _)| v)
            .collect();
        let bottom: Vec<u32> = z
            .iter()
            .zip(eps)
            .filter(|&(_, &e)| e == 1)
            .map(|(&v, _)| v)
            .collect();
        Symbol::new_raw(a, b, top, bottom)
    }

    /// S-tilde = (2X, 2Y+1)^sp, a special s-symbol attached to an a-symbol.
    pub fn tilde(&self) -> Result<Symbol> {
        if self.params() != (1, 0) {
            return Err(Error::SymbolMismatch(format!(
                "the tilde map needs an (a,b) = (1,0) symbol, got {:?}",
                self.params()
            )));
        }
        let top: Vec<u32> = self.top.iter().map(|&x| 2 * x).collect();
        let bottom: Vec<u32> = self.bottom.iter().map(|&y| 2 * y + 1).collect();
        Symbol::new_raw(2, 0, top, bottom)?.special()
    }

    /// Entrywise sum of shift-aligned representatives. The parameters add;
    /// the defects must agree. The result is canonicalized.
    pub fn add(&self, other: &Symbol) -> Result<Symbol> {
        if self.defect() != other.defect() {
            return Err(Error::SymbolMismatch(format!(
                "unalignable defects {} vs {}",
                self.defect(),
                other.defect()
            )));
        }
        let c = self.content().max(other.content());
        let s1 = self.with_content(c)?;
        let s2 = other.with_content(c)?;
        let top: Vec<u32> = s1.top.iter().zip(&s2.top).map(|(&x, &y)| x + y).collect();
        let bottom: Vec<u32> = s1
            .bottom
            .iter()
            .zip(&s2.bottom)
            .map(|(&x, &y)| x + y)
            .collect();
        Ok(Symbol::new_raw(self.a + other.a, self.b + other.b, top, bottom)?.canonical())
    }
}

/// All canonical symbols with the given parameters, defect, and rank
/// (enumerated through the bipartition bijection).
pub fn symbols_with(a: u32, b: u32, d: i64, rank: i64) -> Vec<Symbol> {
    let m = rank - delta(a, b, d);
    if m < 0 {
        return Vec::new();
    }
    bipartitions_of(m as u32)
        .into_iter()
        .map(|bip| Symbol::from_bipartition(a, b, &bip, d))
        .collect()
}

/// All bipartitions of n.
pub fn bipartitions_of(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for i in 0..=n {
        for alpha in crate::partition::partitions_of(i) {
            for beta in crate::partition::partitions_of(n - i) {
                out.push(Bipartition::new(alpha.clone(), beta));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(a: u32, b: u32, top: &[u32], bottom: &[u32]) -> Symbol {
        Symbol::new_raw(a, b, top.to_vec(), bottom.to_vec()).unwrap()
    }

    #[test]
    fn beta_round_trip() {
        let x = BetaSet::new(vec![1, 3, 6]).unwrap();
        assert_eq!(partition_from_beta(&x), Partition::new([4, 2, 1]));
        assert_eq!(
            partition_from_beta(&BetaSet::new(vec![0, 1, 2]).unwrap()),
            Partition::empty()
        );
        assert_eq!(
            partition_from_beta(&BetaSet::new(vec![2, 5]).unwrap()),
            Partition::new([4, 2])
        );
        let lam = Partition::new([4, 2, 1]);
        assert_eq!(beta_from_partition(&lam, 3).unwrap(), x);
        for len in 3..8 {
            let b = beta_from_partition(&lam, len).unwrap();
            assert_eq!(partition_from_beta(&b), lam);
        }
        assert!(beta_from_partition(&lam, 2).is_err());
    }

    #[test]
    fn rank_defect_shift_invariance() {
        for s in [sym(1, 0, &[0, 2], &[1]), sym(1, 1, &[0, 3], &[2]), sym(2, 0, &[1, 3], &[0, 2])] {
            let sh = s.shift();
            assert_eq!(sh.rank(), s.rank());
            assert_eq!(sh.defect(), s.defect());
            assert_eq!(sh.canonical(), s.canonical());
            assert!(s.canonical().is_canonical());
        }
    }

    #[test]
    fn relative_rank_via_binomials() {
        // m(S) independently: entry sum - (a+b)(C(r,2)+C(s,2)) - b s.
        for s in [
            sym(1, 0, &[0, 2, 5], &[1]),
            sym(1, 1, &[0, 3], &[2]),
            sym(2, 0, &[1, 3, 7], &[0, 2]),
            sym(0, 1, &[1, 2], &[1, 3]),
        ] {
            let (a, b) = s.params();
            let (r, c) = (s.top().len() as i64, s.bottom().len() as i64);
            let direct = s.entries_sorted().iter().map(|&e| e as i64).sum::<i64>()
                - ((a + b) as i64) * (r * (r - 1) / 2 + c * (c - 1) / 2)
                - (b as i64) * c;
            assert_eq!(s.relative_rank(), direct, "m(S) for {s}");
        }
    }

    #[test]
    fn special_examples() {
        let s = sym(1, 0, &[0, 2], &[1]);
        assert!(s.is_special());
        assert_eq!(s.special().unwrap(), s);
        let t = sym(1, 0, &[2], &[0]);
        assert_eq!(t.special().unwrap(), sym(1, 0, &[0], &[2]));
        assert!(t.special().unwrap().is_special());
        assert!(s.similar(&s.special().unwrap()).unwrap());
    }

    #[test]
    fn similarity_classes_contain_one_special() {
        // Every similarity class of (1,0)-symbols of rank 3, odd defect,
        // contains exactly one special symbol.
        let mut all = Vec::new();
        for d in [-3i64, -1, 1, 3] {
            all.extend(symbols_with(1, 0, d, 3));
        }
        let specials: Vec<&Symbol> = all.iter().filter(|s| s.is_special()).collect();
        for s in &all {
            let sp = s.special().unwrap();
            assert!(specials.iter().any(|t| **t == sp));
        }
        for sp in &specials {
            // No two distinct specials are similar.
            for sp2 in &specials {
                if sp != sp2 {
                    assert!(!sp.similar(sp2).unwrap());
                }
            }
        }
    }

    #[test]
    fn bipartition_round_trip() {
        for d in [-2i64, -1, 0, 1, 2, 3] {
            for bip in bipartitions_of(4) {
                let s = Symbol::from_bipartition(1, 0, &bip, d);
                assert_eq!(s.defect(), d);
                assert_eq!(s.bipartition(), bip);
                assert_eq!(s.relative_rank(), 4);
            }
        }
    }

    #[test]
    fn shriek_properties() {
        let s = sym(1, 0, &[0], &[]);
        assert_eq!(s.shriek().unwrap(), sym(0, 1, &[0, 1], &[]));
        for bip in bipartitions_of(3) {
            for d in [-1i64, 0, 1, 2] {
                let s = Symbol::from_bipartition(1, 0, &bip, d);
                let sh = s.shriek().unwrap();
                assert_eq!(sh.defect(), d + 1);
                assert_eq!(sh.bipartition(), s.bipartition());
            }
        }
    }

    #[test]
    fn linear_presentation_examples() {
        let s = sym(1, 0, &[1], &[0]);
        let (z, e) = s.linear_presentation().unwrap();
        assert_eq!(z, vec![0, 1]);
        assert_eq!(e, vec![1, 0]);
        let back = Symbol::from_linear(1, 0, &z, &e).unwrap();
        assert_eq!(back, s);
        // Ties put the top row first.
        let t = sym(1, 0, &[1, 3], &[1]);
        let (z, e) = t.linear_presentation().unwrap();
        assert_eq!(z, vec![1, 1, 3]);
        assert_eq!(e, vec![0, 1, 0]);
    }

    #[test]
    fn tilde_examples() {
        let s = sym(1, 0, &[1], &[0]);
        // 2X = (2), 2Y+1 = (1); special arrangement of {1,2} is ((1),(2)).
        assert_eq!(s.tilde().unwrap(), sym(2, 0, &[1], &[2]));
        let (z, e) = s.linear_presentation().unwrap();
        let expect: Vec<u32> = z.iter().zip(&e).map(|(&z, &e)| 2 * z + e as u32).collect();
        assert_eq!(s.tilde().unwrap().linear_presentation().unwrap().0, expect);
    }

    #[test]
    fn add_examples() {
        let s = sym(1, 0, &[0, 2], &[1]);
        let sum = s.add(&s).unwrap();
        assert_eq!(sum, sym(2, 0, &[0, 4], &[2]));
        assert_eq!(sum.params(), (2, 0));
        // Identity: adding a zero symbol of matching row lengths.
        let z = Symbol::zeros(2, 1);
        let t = s.add(&z).unwrap();
        assert_eq!(t.top(), s.top());
        assert_eq!(t.bottom(), s.bottom());
        assert_eq!(t.params(), (1, 0));
        // Alignment across different contents.
        let u = sym(1, 0, &[1], &[]).shift();
        let v = sym(1, 0, &[2], &[]);
        assert_eq!(u.add(&v).unwrap(), sym(2, 0, &[3], &[]));
        assert!(s.add(&sym(1, 0, &[0, 1, 2], &[])).is_err());
    }

    #[test]
    fn underline_and_d_label() {
        let s = sym(1, 0, &[1], &[0, 2]);
        let u = s.underline();
        assert_eq!(u.top(), &[0, 2]);
        assert_eq!(u.bottom(), &[1]);
        match s.d_label().unwrap() {
            DLabel::Ordered(bip) => {
                assert_eq!(bip.alpha, Partition::new([1]));
                assert_eq!(bip.beta, Partition::new([1]));
            }
            _ => panic!("nonzero defect must give an ordered label"),
        }
        let t = sym(1, 0, &[0, 2], &[0, 2]);
        match t.d_label().unwrap() {
            DLabel::Unordered(u) => {
                assert!(u.degenerate);
                assert_eq!(u.first, u.second);
            }
            _ => panic!("defect zero must give an unordered label"),
        }
    }

    #[test]
    fn multiset_dominance() {
        assert!(multiset_dominance_geq(&[0, 2, 3], &[0, 3, 2]));
        assert!(multiset_dominance_geq(&[0, 2, 3], &[3, 0, 2]));
        assert!(multiset_dominance_geq(&[1, 2], &[1, 2]));
        assert!(!multiset_dominance_geq(&[1, 1, 2], &[0, 1, 3]));
    }

    #[test]
    fn json_round_trip() {
        let s = sym(1, 0, &[0, 2], &[1]).shift();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"a":1,"b":0,"top":[0,2],"bottom":[1]}"#);
        let back: Symbol = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s.canonical());
    }
}
