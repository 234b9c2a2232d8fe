//! Branching multiplicities for symmetric and hyperoctahedral groups.
//!
//! - [`lr_coefficient`]: Littlewood-Richardson coefficients by lattice-word
//!   enumeration of skew tableaux, with a process-wide memo table
//! - [`bip_restriction_mult`]: restriction multiplicities for
//!   bipartition-labeled hyperoctahedral representations, as a product of
//!   two LR coefficients
//! - [`j_induce_classical`] / [`j_induce_spin`]: the s-symbol of a
//!   j-induced representation — the special symbol of an entrywise sum in
//!   the classical case, and the sequence 2 S^{1,sp} + tilde(S^2) - z in
//!   the spin case

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::partition::Partition;
use crate::symbol::{Bipartition, Symbol};
use crate::{Error, Result};

/// The Littlewood-Richardson coefficient c^gamma_{alpha,beta}: the number of
/// semistandard skew tableaux of shape gamma/alpha and content beta whose
/// reverse reading word is a lattice word. Returns 0 on size mismatch or if
/// alpha is not contained in gamma.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if alpha.size() + beta.size() != gamma.size() || (0..alpha.len()).any(|i| alpha.part(i) > gamma.part(i))
    {
        return 0;
    }
    static MEMO: OnceLock<Mutex<HashMap<(Vec<u32>, Vec<u32>, Vec<u32>), u64>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (
        alpha.parts().to_vec(),
        beta.parts().to_vec(),
        gamma.parts().to_vec(),
    );
    if let Some(&v) = memo.lock().unwrap().get(&key) {
        return v;
    }
    let v = count_lr_tableaux(alpha, beta, gamma);
    memo.lock().unwrap().insert(key, v);
    v
}

fn count_lr_tableaux(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    let rows = gamma.len();
    let k = beta.len();
    // Cells in reverse reading order: rows top to bottom, right to left
    // within each row. The lattice condition can then be checked greedily.
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = alpha.part(r);
        let hi = gamma.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: HashMap<(usize, u32), u32> = HashMap::new();
    let mut counts = vec![0u32; k + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, u32)],
        grid: &mut HashMap<(usize, u32), u32>,
        counts: &mut [u32],
        alpha: &Partition,
        beta: &Partition,
        gamma: &Partition,
        k: usize,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 1..=k as u32 {
            if counts[v as usize] >= beta.part(v as usize - 1) {
                continue;
            }
            // Lattice word: value v may not outnumber v-1 at any prefix.
            if v > 1 && counts[v as usize] >= counts[v as usize - 1] {
                continue;
            }
            // Weakly increasing along the row.
            if c + 1 < gamma.part(r) {
                if let Some(&right) = grid.get(&(r, c + 1)) {
                    if v > right {
                        continue;
                    }
                }
            }
            // Strictly increasing down each column (no constraint when the
            // cell above lies in the alpha region).
            if r > 0 && c >= alpha.part(r - 1) && c < gamma.part(r - 1) {
                match grid.get(&(r - 1, c)) {
                    Some(&above) if v > above => {}
                    _ => continue,
                }
            }
            grid.insert((r, c), v);
            counts[v as usize] += 1;
            total += rec(idx + 1, cells, grid, counts, alpha, beta, gamma, k);
            counts[v as usize] -= 1;
            grid.remove(&(r, c));
        }
        total
    }
    rec(0, &cells, &mut grid, &mut counts, alpha, beta, gamma, k)
}

/// The multiplicity of F1 x F2 in the restriction of the
/// bipartition-labeled representation F to the subgroup of split ranks
/// (|F1|, |F2|): a product of one LR coefficient per row.
pub fn bip_restriction_mult(f: &Bipartition, f1: &Bipartition, f2: &Bipartition) -> u64 {
    lr_coefficient(&f1.alpha, &f2.alpha, &f.alpha) * lr_coefficient(&f1.beta, &f2.beta, &f.beta)
}

/// The s-symbol of the j-induced representation in the classical cases: the
/// special symbol of the entrywise sum of the special input symbols.
pub fn j_induce_classical(parts: &[Symbol]) -> Result<Symbol> {
    let mut it = parts.iter();
    let first = it
        .next()
        .ok_or_else(|| Error::InvalidInput("j-induction needs at least one symbol".into()))?;
    let mut acc = first.clone();
    for s in it {
        acc = acc.add(s)?;
    }
    acc.special()
}

/// The sorted-entry sequence Z* of the j-induced s-symbol in the spin case:
/// 2 S^{1,sp} + tilde(S^2) - z, where the symbols enter through their sorted
/// entry multisets and z = (0, 1, 2, ...).
pub fn j_induce_spin(s1sp: &Symbol, s2: &Symbol) -> Result<Vec<i64>> {
    // Align the two (1,0)-symbols first: the doubling map does not commute
    // with shifts, so S^2 must be brought to the common content before it.
    let c = s1sp.content().max(s2.content());
    let a = s1sp.with_content(c)?;
    let b = s2.with_content(c)?;
    let t = b.tilde()?.with_content(c)?;
    let ea = a.entries_sorted();
    let eb = t.entries_sorted();
    Ok(ea
        .iter()
        .zip(&eb)
        .enumerate()
        .map(|(i, (&x, &y))| 2 * x as i64 + y as i64 - i as i64)
        .collect())
}
