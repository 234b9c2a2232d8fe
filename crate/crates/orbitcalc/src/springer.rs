//! The generalized Springer correspondence for the classical simply
//! connected groups.
//!
//! Pairs (orbit, equivariant local system) are parameterized per group:
//! partitions with a cyclic-group character for SL(N), (2,0)-symbol classes
//! for SO(N), (1,1)-symbols for Sp(2n), and rather-odd partitions (the
//! non-SO-equivariant part, doubled when N is even) for Spin(N). The
//! correspondence sends each pair to a block (a cuspidal datum) and an
//! irreducible representation of the block's relative Weyl group.
//!
//! - [`enumerate_pairs`]: all pairs for a group
//! - [`p1`]: the orbit underlying a pair
//! - [`springer_rep`] / [`springer_inverse`]: the correspondence and its
//!   inverse

use serde::{Deserialize, Serialize};

use crate::finite::DegenerateTag;
use crate::partition::{partitions_of, rather_odd_of, Partition};
use crate::spin::{d_partition, rho_via_tilde};
use crate::symbol::{symbols_with, Bipartition, DLabel, Symbol, UnorderedBipartition};
use crate::{Error, Result};

/// A classical simply connected group. `SO` is included as the relevant
/// intermediate form: its pairs form the SO-equivariant part of the Spin
/// correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    /// SL(N).
    SL(u32),
    /// SO(N), N odd or even.
    SO(u32),
    /// Sp(2n), stored by n.
    Sp(u32),
    /// Spin(N); only the non-SO-equivariant pairs live here.
    Spin(u32),
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Group::SL(n) => write!(f, "SL({n})"),
            Group::SO(n) => write!(f, "SO({n})"),
            Group::Sp(n) => write!(f, "Sp({})", 2 * n),
            Group::Spin(n) => write!(f, "Spin({n})"),
        }
    }
}

/// A pair (orbit, local system) in the group's parameterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pair {
    /// SL: a partition of N and a character index 0 <= chi < gcd(lambda).
    Sl { lambda: Partition, chi: u32 },
    /// SO/Sp: a symbol, with a tag for the degenerate defect-zero classes.
    Symbolic { symbol: Symbol, tag: Option<DegenerateTag> },
    /// Spin: a rather-odd partition; the tag distinguishes the two copies
    /// when N is even.
    Spin { lambda: Partition, tag: Option<DegenerateTag> },
}

/// A block of the correspondence (a cuspidal datum) with its relative Weyl
/// group rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    /// The block index: r for SL/SO/Sp, d for Spin.
    pub r: i64,
    /// SL only: the primitive character a/r (gcd(a, r) = 1) of the datum.
    pub chi: Option<u32>,
    /// Spin with N even only: which of the two cuspidal data.
    pub tag: Option<DegenerateTag>,
    /// Rank of the relative Weyl group.
    pub weyl_rank: u32,
}

/// The Weyl-group label attached to a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Label {
    Partition(Partition),
    Bipartition(Bipartition),
    Unordered(UnorderedBipartition),
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn gcd_of(lambda: &Partition) -> u64 {
    lambda.parts().iter().fold(0, |acc, &p| gcd(acc, p as u64))
}

/// Defects of the symbol classes for SO(N) and Sp(2n).
fn so_defects(n_rank: u32, odd: bool) -> Vec<i64> {
    let mut out = Vec::new();
    let mut d = if odd { 1 } else { 0 };
    while crate::symbol::delta(2, 0, d) <= n_rank as i64 {
        out.push(d);
        d += 2;
    }
    out
}

fn sp_defects(n: u32) -> Vec<i64> {
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        let mut d = sign;
        while crate::symbol::delta(1, 1, d) <= n as i64 {
            out.push(d);
            d += 2 * sign;
        }
    }
    out.sort_unstable();
    out
}

#[cfg_attr(not(test), allow(dead_code))]
fn spin_block_ds(cap_n: u32) -> Vec<i64> {
    let n = cap_n as i64;
    let mut out = Vec::new();
    for d in -n..=n {
        if d.rem_euclid(4) == n.rem_euclid(4) && d * (2 * d - 1) <= n {
            out.push(d);
        }
    }
    out
}

/// All pairs (orbit, local system) for the group.
pub fn enumerate_pairs(g: Group) -> Result<Vec<Pair>> {
    match g {
        Group::SL(cap_n) => {
            let mut out = Vec::new();
            for lambda in partitions_of(cap_n) {
                let d = gcd_of(&lambda) as u32;
                for chi in 0..d.max(1) {
                    out.push(Pair::Sl { lambda: lambda.clone(), chi });
                }
            }
            Ok(out)
        }
        Group::SO(cap_n) => {
            let n = cap_n / 2;
            let mut out = Vec::new();
            for d in so_defects(n, cap_n % 2 == 1) {
                for s in symbols_with(2, 0, d, n as i64) {
                    if d == 0 {
                        if s.underline() != s {
                            continue;
                        }
                        if s.top() == s.bottom() {
                            out.push(Pair::Symbolic { symbol: s.clone(), tag: Some(DegenerateTag::I) });
                            out.push(Pair::Symbolic { symbol: s, tag: Some(DegenerateTag::II) });
                        } else {
                            out.push(Pair::Symbolic { symbol: s, tag: None });
                        }
                    } else {
                        out.push(Pair::Symbolic { symbol: s, tag: None });
                    }
                }
            }
            Ok(out)
        }
        Group::Sp(n) => {
            let mut out = Vec::new();
            for d in sp_defects(n) {
                for s in symbols_with(1, 1, d, n as i64) {
                    out.push(Pair::Symbolic { symbol: s, tag: None });
                }
            }
            Ok(out)
        }
        Group::Spin(cap_n) => {
            let mut out = Vec::new();
            for lambda in rather_odd_of(cap_n) {
                if cap_n % 2 == 0 {
                    out.push(Pair::Spin { lambda: lambda.clone(), tag: Some(DegenerateTag::I) });
                    out.push(Pair::Spin { lambda, tag: Some(DegenerateTag::II) });
                } else {
                    out.push(Pair::Spin { lambda, tag: None });
                }
            }
            Ok(out)
        }
    }
}

/// The partition of a sorted entry multiset: subtract (0, 1, 2, ...) from
/// the ascending entries.
fn pee(mut entries: Vec<i64>) -> Result<Partition> {
    entries.sort_unstable();
    Partition::try_from_signed(
        entries
            .iter()
            .enumerate()
            .map(|(i, &e)| e - i as i64)
            .collect::<Vec<_>>(),
    )
}

/// The orbit of an SO pair: the beta-set 2(X - z) + 1 union 2(Y - z) of the
/// canonical special representative, read off positionally.
fn p1_so(sp: &Symbol) -> Result<Partition> {
    let entries: Vec<i64> = sp
        .top()
        .iter()
        .enumerate()
        .map(|(j, &x)| 2 * (x as i64 - 2 * j as i64) + 1 + 2 * j as i64)
        .chain(
            sp.bottom()
                .iter()
                .enumerate()
                .map(|(j, &y)| 2 * (y as i64 - 2 * j as i64) + 2 * j as i64),
        )
        .collect();
    pee(entries)
}

/// The orbit underlying a pair.
pub fn p1(g: Group, pair: &Pair) -> Result<Partition> {
    match (g, pair) {
        (Group::SL(_), Pair::Sl { lambda, .. }) => Ok(lambda.clone()),
        (Group::Spin(_), Pair::Spin { lambda, .. }) => Ok(lambda.clone()),
        (Group::SO(_), Pair::Symbolic { symbol, .. }) => p1_so(&symbol.special()?),
        (Group::Sp(_), Pair::Symbolic { symbol, .. }) => {
            // Beta-set 2(X - z) union 2(Y - z) + 1 of the canonical special
            // representative, against the symbol's own row bases.
            let sp = symbol.special()?;
            let entries: Vec<i64> = sp
                .top()
                .iter()
                .enumerate()
                .map(|(j, &x)| 2 * x as i64 - 2 * j as i64)
                .chain(
                    sp.bottom()
                        .iter()
                        .enumerate()
                        .map(|(j, &y)| 2 * y as i64 - 2 * j as i64 - 1),
                )
                .collect();
            pee(entries)
        }
        _ => Err(Error::InvalidInput(format!("pair does not belong to {g}"))),
    }
}

/// The block and Weyl-group label of a pair.
pub fn springer_rep(g: Group, pair: &Pair) -> Result<(Block, Label)> {
    match (g, pair) {
        (Group::SL(cap_n), Pair::Sl { lambda, chi }) => {
            let d = gcd_of(lambda).max(1);
            if *chi as u64 >= d && !(d == 1 && *chi == 0) {
                return Err(Error::InvalidInput(format!(
                    "character index {chi} out of range for gcd {d}"
                )));
            }
            // Order of the character j of Z_d, and its primitive form a/r.
            let r = d / gcd(*chi as u64, d).max(1);
            let r = if *chi == 0 { 1 } else { r };
            let a = if *chi == 0 { 0 } else { *chi as u64 / (d / r) };
            let scaled = Partition::new(
                lambda.parts().iter().map(|&p| p / r as u32).collect::<Vec<_>>(),
            );
            Ok((
                Block {
                    r: r as i64,
                    chi: Some(a as u32),
                    tag: None,
                    weyl_rank: cap_n / r as u32,
                },
                Label::Partition(scaled),
            ))
        }
        (Group::SO(cap_n), Pair::Symbolic { symbol, tag }) => {
            let d = symbol.defect();
            let r = d;
            let weyl_rank = ((cap_n as i64 - r * r) / 2) as u32;
            let label = match symbol.d_label()? {
                DLabel::Ordered(b) => Label::Bipartition(b),
                DLabel::Unordered(mut u) => {
                    // Degenerate labels keep the pair's tag so the two
                    // representations stay distinguishable.
                    u.degenerate = u.degenerate && tag.is_some();
                    Label::Unordered(u)
                }
            };
            Ok((Block { r, chi: None, tag: *tag, weyl_rank }, label))
        }
        (Group::Sp(n), Pair::Symbolic { symbol, .. }) => {
            let d = symbol.defect();
            let r = if d >= 0 { d - 1 } else { -d };
            let weyl_rank = (n as i64 - r * (r + 1) / 2) as u32;
            let bip = symbol.bipartition();
            let bip = if d >= 0 { bip } else { bip.flip() };
            Ok((
                Block { r, chi: None, tag: None, weyl_rank },
                Label::Bipartition(bip),
            ))
        }
        (Group::Spin(cap_n), Pair::Spin { lambda, tag }) => {
            let d = d_partition(lambda);
            let weyl_rank = ((cap_n as i64 - d * (2 * d - 1)) / 4) as u32;
            Ok((
                Block { r: d, chi: None, tag: *tag, weyl_rank },
                Label::Bipartition(rho_via_tilde(lambda)?),
            ))
        }
        _ => Err(Error::InvalidInput(format!("pair does not belong to {g}"))),
    }
}

/// Inverse of the correspondence: reconstruct the pair from block and label.
pub fn springer_inverse(g: Group, block: &Block, label: &Label) -> Result<Pair> {
    match (g, label) {
        (Group::SL(_), Label::Partition(nu)) => {
            let r = block.r as u64;
            let lambda = Partition::new(
                nu.parts().iter().map(|&p| p * r as u32).collect::<Vec<_>>(),
            );
            let d = gcd_of(&lambda);
            let a = block.chi.unwrap_or(0) as u64;
            let chi = if r == 1 { 0 } else { a * d / r };
            Ok(Pair::Sl { lambda, chi: chi as u32 })
        }
        (Group::SO(_), Label::Bipartition(bip)) => {
            let d = block.r;
            let symbol = symbol_from_d_label(2, bip, d);
            Ok(Pair::Symbolic { symbol, tag: None })
        }
        (Group::SO(_), Label::Unordered(u)) => {
            let bip = Bipartition::new(u.first.clone(), u.second.clone());
            let symbol = symbol_from_d_label(2, &bip, 0).underline();
            let tag = if u.first == u.second { Some(block.tag.unwrap_or(DegenerateTag::I)) } else { None };
            Ok(Pair::Symbolic { symbol, tag })
        }
        (Group::Sp(_), Label::Bipartition(bip)) => {
            let d = if block.r % 2 == 0 { block.r + 1 } else { -block.r };
            let bip = if d >= 0 { bip.clone() } else { bip.flip() };
            let symbol = Symbol::from_bipartition(1, 1, &bip, d);
            Ok(Pair::Symbolic { symbol, tag: None })
        }
        (Group::Spin(cap_n), Label::Bipartition(bip)) => {
            for lambda in rather_odd_of(cap_n) {
                if d_partition(&lambda) == block.r && &rho_via_tilde(&lambda)? == bip {
                    return Ok(Pair::Spin { lambda, tag: block.tag });
                }
            }
            Err(Error::InvalidInput(format!(
                "no rather-odd partition matches block d={} and label {bip}",
                block.r
            )))
        }
        _ => Err(Error::InvalidInput(format!("label does not fit {g}"))),
    }
}

/// Rebuild a b = 0 symbol from its row-unordered bipartition at a defect.
fn symbol_from_d_label(a: u32, bip: &Bipartition, d: i64) -> Symbol {
    // The unordered-rows map subtracts the same base (0, a, 2a, ...) from
    // both rows of the underline form.
    let la = bip.alpha.len() as i64;
    let lb = bip.beta.len() as i64;
    let s = lb.max(la - d).max(-d).max(0);
    let r = s + d;
    let pad = |p: &Partition, len: i64| -> Vec<u32> {
        let mut asc = vec![0u32; (len as usize).saturating_sub(p.len())];
        asc.extend(p.parts().iter().rev());
        asc
    };
    let top: Vec<u32> = pad(&bip.alpha, r)
        .iter()
        .enumerate()
        .map(|(j, &x)| x + a * j as u32)
        .collect();
    let bottom: Vec<u32> = pad(&bip.beta, s)
        .iter()
        .enumerate()
        .map(|(j, &y)| y + a * j as u32)
        .collect();
    Symbol::new_raw(a, 0, top, bottom)
        .expect("row-unordered label reassembly")
        .canonical()
}
