//! Spin-group partition combinatorics.
//!
//! For rather-odd partitions lambda (odd parts all distinct) this module
//! computes the bipartition rho(lambda) three ways — the original eight-case
//! recursion, the simplified four-case recursion rho-tilde, and a closed
//! formula via residue slices — together with the associated (2,0)-symbol
//! and an explicit description of the duality d_BV on rather-odd partitions.
//!
//! - [`d_int`] / [`d_partition`]: the mod-4 sign d(m) and d(lambda)
//! - [`rho_recursive`], [`rho_tilde`], [`rho_closed`]
//! - [`spin_symbol`]: the symbol whose canonical linear presentation is
//!   (q + z - delta, epsilon)
//! - [`dbv_rather_odd`] / [`half_dbv`]: d_BV by the explicit multiplicity
//!   formula, and its halving

use crate::partition::Partition;
use crate::symbol::{Bipartition, Symbol};
use crate::{Error, Result};

/// d(m): 0 for even m, +1 for m = 1 mod 4, -1 for m = 3 mod 4.
pub fn d_int(m: i64) -> i64 {
    match m.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// d(lambda) = sum of d over the parts.
pub fn d_partition(lambda: &Partition) -> i64 {
    lambda.parts().iter().map(|&p| d_int(p as i64)).sum()
}

fn require_rather_odd(lambda: &Partition) -> Result<()> {
    if !lambda.is_rather_odd() {
        return Err(Error::NotMember(format!("{lambda} is not rather odd")));
    }
    Ok(())
}

/// Parts of lambda in non-decreasing order.
fn ascending(lambda: &Partition) -> Vec<u32> {
    lambda.parts().iter().rev().copied().collect()
}

fn append(p: &Partition, r: i64) -> Partition {
    debug_assert!(r >= 0, "negative part {r} appended to {p}");
    let mut parts = p.parts().to_vec();
    parts.push(r as u32);
    Partition::new(parts)
}

/// The eight-case recursion for rho(lambda).
pub fn rho_recursive(lambda: &Partition) -> Result<Bipartition> {
    require_rather_odd(lambda)?;
    Ok(rho_rec(&ascending(lambda)))
}

fn rho_rec(asc: &[u32]) -> Bipartition {
    let m = asc.len();
    if m == 0 {
        return Bipartition::empty();
    }
    let top = asc[m - 1] as i64;
    // An even largest part has even multiplicity, so the last two parts are
    // equal and both get peeled.
    let mu = if top % 2 == 0 { &asc[..m - 2] } else { &asc[..m - 1] };
    let dmu: i64 = mu.iter().map(|&p| d_int(p as i64)).sum();
    let Bipartition { alpha: gamma, beta: delta } = rho_rec(mu);
    let (alpha, beta) = match d_int(top) {
        0 => {
            let r = (top + 2) / 4 - dmu;
            let s = top / 4 + dmu;
            if dmu > 0 {
                (append(&gamma, r), append(&delta, s))
            } else {
                (append(&gamma, s), append(&delta, r))
            }
        }
        1 => {
            let r = (top - 1) / 4 - dmu;
            match dmu.cmp(&0) {
                std::cmp::Ordering::Greater => (append(&gamma, r), delta),
                std::cmp::Ordering::Equal => (append(&delta, r), gamma),
                std::cmp::Ordering::Less => (gamma, append(&delta, r)),
            }
        }
        _ => {
            let r = (top - 3) / 4 + dmu;
            match dmu.cmp(&1) {
                std::cmp::Ordering::Greater => (gamma, append(&delta, r)),
                std::cmp::Ordering::Equal => (append(&delta, r), gamma),
                std::cmp::Ordering::Less => (append(&gamma, r), delta),
            }
        }
    };
    Bipartition::new(alpha, beta)
}

/// The simplified recursion: rho(lambda) equals rho-tilde or its flip,
/// depending on the sign of d(lambda).
pub fn rho_tilde(lambda: &Partition) -> Result<Bipartition> {
    require_rather_odd(lambda)?;
    Ok(rho_tilde_rec(&ascending(lambda)))
}

fn rho_tilde_rec(asc: &[u32]) -> Bipartition {
    let m = asc.len();
    if m == 0 {
        return Bipartition::empty();
    }
    let top = asc[m - 1] as i64;
    let mu = if top % 2 == 0 { &asc[..m - 2] } else { &asc[..m - 1] };
    let d: i64 = mu.iter().map(|&p| d_int(p as i64)).sum();
    let q = top / 4;
    let Bipartition { alpha: gamma, beta: delta } = rho_tilde_rec(mu);
    let (alpha, beta) = match top.rem_euclid(4) {
        0 => (append(&gamma, q - d), append(&delta, q + d)),
        1 => (append(&gamma, q - d), delta),
        2 => (append(&gamma, q - d + 1), append(&delta, q + d)),
        _ => (gamma, append(&delta, q + d)),
    };
    Bipartition::new(alpha, beta)
}

/// rho(lambda) computed through rho-tilde and the flip rule.
pub fn rho_via_tilde(lambda: &Partition) -> Result<Bipartition> {
    let t = rho_tilde(lambda)?;
    Ok(if d_partition(lambda) > 0 { t } else { t.flip() })
}

/// The closed formula for rho(lambda): residue slices of q-values shifted by
/// the running sums D, with the even-residue slices halved.
pub fn rho_closed(lambda: &Partition) -> Result<Bipartition> {
    require_rather_odd(lambda)?;
    let asc = ascending(lambda);
    // Per-position data: q-value, residue, prefix sum D_i of d over j < i.
    let mut run = 0i64;
    let mut slices: [Vec<(i64, i64)>; 4] = Default::default();
    for &p in &asc {
        let p = p as i64;
        slices[(p % 4) as usize].push((p / 4, run));
        run += d_int(p);
    }
    // Halve the even-residue slices: their entries pair up.
    let underline = |s: &[(i64, i64)]| -> Vec<(i64, i64)> {
        debug_assert!(s.len() % 2 == 0);
        debug_assert!(s.chunks(2).all(|c| c[0] == c[1]));
        s.iter().copied().step_by(2).collect()
    };
    let u0 = underline(&slices[0]);
    let u2 = underline(&slices[2]);
    let plus: Vec<i64> = u0
        .iter()
        .map(|&(q, d)| q - d)
        .chain(slices[1].iter().map(|&(q, d)| q - d))
        .chain(u2.iter().map(|&(q, d)| q + 1 - d))
        .collect();
    let minus: Vec<i64> = u0
        .iter()
        .map(|&(q, d)| q + d)
        .chain(slices[3].iter().map(|&(q, d)| q + d))
        .chain(u2.iter().map(|&(q, d)| q + d))
        .collect();
    let first = Partition::try_from_signed(plus)?;
    let second = Partition::try_from_signed(minus)?;
    Ok(if d_partition(lambda) > 0 {
        Bipartition::new(first, second)
    } else {
        Bipartition::new(second, first)
    })
}

/// The block data (q, r, epsilon, delta) of a rather-odd partition, indexed
/// along the parts in non-decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinDecomposition {
    pub q: Vec<i64>,
    pub r: Vec<i64>,
    pub epsilon: Vec<u8>,
    pub delta: Vec<u8>,
}

impl SpinDecomposition {
    pub fn of(lambda: &Partition) -> Result<SpinDecomposition> {
        require_rather_odd(lambda)?;
        let asc = ascending(lambda);
        let mut out = SpinDecomposition {
            q: Vec::new(),
            r: Vec::new(),
            epsilon: Vec::new(),
            delta: Vec::new(),
        };
        let mut i = 0;
        while i < asc.len() {
            let v = asc[i] as i64;
            let mult = asc[i..].iter().take_while(|&&p| p as i64 == v).count();
            let r = v % 4;
            for j in 0..mult {
                out.q.push(v / 4);
                out.r.push(r);
                out.epsilon.push(match r {
                    0 => (j % 2) as u8,
                    1 => 0,
                    2 => ((j + 1) % 2) as u8,
                    _ => 1,
                });
                out.delta.push(if r == 0 { (j % 2) as u8 } else { 0 });
            }
            i += mult;
        }
        Ok(out)
    }
}

/// The (2,0)-symbol of a rather-odd partition: the symbol with canonical
/// linear presentation (q + z - delta, epsilon), where z = (0, 1, 2, ...).
pub fn spin_symbol(lambda: &Partition) -> Result<Symbol> {
    let dec = SpinDecomposition::of(lambda)?;
    let z: Vec<u32> = dec
        .q
        .iter()
        .zip(&dec.delta)
        .enumerate()
        .map(|(i, (&q, &d))| (q + i as i64 - d as i64) as u32)
        .collect();
    Symbol::from_linear(2, 0, &z, &dec.epsilon)
}

/// d_BV(lambda) for rather-odd lambda by the explicit multiplicity formula:
/// part A_i (the tail multiplicity sum) occurs with multiplicity
/// lambda_i - lambda_{i-1} + delta_i, where delta corrects around the odd
/// parts in alternating pairs.
pub fn dbv_rather_odd(lambda: &Partition) -> Result<Partition> {
    require_rather_odd(lambda)?;
    // Distinct values ascending with multiplicities.
    let mut values: Vec<u32> = Vec::new();
    let mut mults: Vec<i64> = Vec::new();
    for &p in lambda.parts().iter().rev() {
        if values.last() == Some(&p) {
            *mults.last_mut().unwrap() += 1;
        } else {
            values.push(p);
            mults.push(1);
        }
    }
    let k = values.len();
    // Tail sums A_i and successive differences.
    let mut tails = vec![0i64; k];
    let mut acc = 0;
    for i in (0..k).rev() {
        acc += mults[i];
        tails[i] = acc;
    }
    let diffs: Vec<i64> = (0..k)
        .map(|i| values[i] as i64 - if i > 0 { values[i - 1] as i64 } else { 0 })
        .collect();
    // The correction: the i-th odd value contributes -+1 / +-1 at its
    // position and the next one (dropped at the top end).
    let odd_positions: Vec<usize> = (0..k).filter(|&i| values[i] % 2 == 1).collect();
    let mut delta = vec![0i64; k];
    for (i, &pos) in odd_positions.iter().enumerate() {
        let (at, next) = if i % 2 == 0 { (-1, 1) } else { (1, -1) };
        delta[pos] += at;
        if pos + 1 < k {
            delta[pos + 1] += next;
        }
    }
    let mut parts = Vec::new();
    for i in 0..k {
        let m = diffs[i] + delta[i];
        debug_assert!(m >= 0);
        for _ in 0..m {
            parts.push(tails[i] as u32);
        }
    }
    Ok(Partition::new(parts))
}

/// The half of d_BV(lambda): the partition h with h u h = d_BV(lambda).
pub fn half_dbv(lambda: &Partition) -> Result<Partition> {
    dbv_rather_odd(lambda)?.halve_multiplicities()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{rather_odd_of, ClassicalType};
    use crate::symbol::DLabel;

    fn worked_example() -> Partition {
        Partition::new([2, 2, 2, 2, 5, 7, 12, 12, 12, 12, 12, 12, 15])
    }

    #[test]
    fn d_values() {
        assert_eq!(d_int(5), 1);
        assert_eq!(d_int(7), -1);
        assert_eq!(d_int(12), 0);
        assert_eq!(d_partition(&Partition::empty()), 0);
        assert_eq!(d_partition(&worked_example()), -1);
    }

    #[test]
    fn rho_base_cases() {
        assert_eq!(rho_recursive(&Partition::empty()).unwrap(), Bipartition::empty());
        assert_eq!(rho_recursive(&Partition::new([1])).unwrap(), Bipartition::empty());
        assert!(rho_recursive(&Partition::new([1, 1])).is_err());
    }

    #[test]
    fn rho_worked_example() {
        let lam = worked_example();
        let expected = Bipartition::new(
            Partition::new([3, 3, 3, 3, 2]),
            Partition::new([3, 3, 3, 1, 1, 1]),
        );
        assert_eq!(rho_recursive(&lam).unwrap(), expected);
        assert_eq!(rho_closed(&lam).unwrap(), expected);
        assert_eq!(rho_via_tilde(&lam).unwrap(), expected);
        let tilde = rho_tilde(&lam).unwrap();
        assert_eq!(tilde.alpha, Partition::new([3, 3, 3, 1, 1, 1]));
        assert_eq!(tilde.beta, Partition::new([3, 3, 3, 3, 2]));
    }

    #[test]
    fn rho_closed_equals_recursive_small() {
        for n in 0..=18 {
            for lam in rather_odd_of(n) {
                let rec = rho_recursive(&lam).unwrap();
                assert_eq!(rho_closed(&lam).unwrap(), rec, "closed form for {lam}");
                assert_eq!(rho_via_tilde(&lam).unwrap(), rec, "tilde route for {lam}");
                let d = d_partition(&lam);
                let expect = (n as i64 - d * (2 * d - 1)) / 4;
                assert_eq!(rec.size() as i64, expect, "size of rho({lam})");
            }
        }
    }

    #[test]
    fn decomposition_worked_example() {
        let dec = SpinDecomposition::of(&worked_example()).unwrap();
        assert_eq!(dec.q, vec![0, 0, 0, 0, 1, 1, 3, 3, 3, 3, 3, 3, 3]);
        assert_eq!(dec.r, vec![2, 2, 2, 2, 1, 3, 0, 0, 0, 0, 0, 0, 3]);
        assert_eq!(dec.epsilon, vec![1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1]);
        assert_eq!(dec.delta, vec![0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0]);
    }

    #[test]
    fn spin_symbol_worked_example() {
        let s = spin_symbol(&worked_example()).unwrap();
        assert_eq!(s.top(), &[1, 3, 5, 9, 11, 13]);
        assert_eq!(s.bottom(), &[0, 2, 6, 9, 11, 13, 15]);
        let (z, _) = s.linear_presentation().unwrap();
        assert_eq!(z, vec![0, 1, 2, 3, 5, 6, 9, 9, 11, 11, 13, 13, 15]);
    }

    #[test]
    fn spin_symbol_single_box() {
        let s = spin_symbol(&Partition::new([1])).unwrap();
        assert_eq!(s.top(), &[0]);
        assert!(s.bottom().is_empty());
    }

    #[test]
    fn spin_symbol_matches_rho_tilde() {
        for n in 0..=18 {
            for lam in rather_odd_of(n) {
                let s = spin_symbol(&lam).unwrap();
                assert_eq!(s.defect(), d_partition(&lam), "defect for {lam}");
                // The construction must reproduce its own canonical
                // presentation.
                let dec = SpinDecomposition::of(&lam).unwrap();
                let (z, e) = s.linear_presentation().unwrap();
                assert_eq!(e, dec.epsilon, "presentation flags for {lam}");
                assert_eq!(z.len(), dec.q.len());
                let bip = s.bipartition();
                let tilde = rho_tilde(&lam).unwrap();
                assert_eq!(bip, tilde, "B(spin_symbol) for {lam}");
            }
        }
    }

    #[test]
    fn dbv_formula_matches_direct() {
        for n in 1..=18u32 {
            let t = if n % 2 == 1 { ClassicalType::B } else { ClassicalType::D };
            for lam in rather_odd_of(n) {
                let direct = crate::partition::dbv(&lam, t).unwrap();
                let formula = dbv_rather_odd(&lam).unwrap();
                assert_eq!(formula, direct, "d_BV({lam})");
                let h = half_dbv(&lam).unwrap();
                assert_eq!(h.union(&h), formula, "half doubles back for {lam}");
            }
        }
    }

    #[test]
    fn dbv_small_example() {
        let lam = Partition::new([3, 1]);
        assert_eq!(
            dbv_rather_odd(&lam).unwrap(),
            crate::partition::dbv(&lam, ClassicalType::D).unwrap()
        );
    }

    #[test]
    fn symbol_d_label_shape() {
        // The spin symbol of the single part (5) has defect 1, so its
        // row-unordered label is ordered.
        let s = spin_symbol(&Partition::new([5])).unwrap();
        assert!(matches!(s.d_label().unwrap(), DLabel::Ordered(_)));
    }
}
