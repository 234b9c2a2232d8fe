//! Acceptance suite: ten end-to-end checks, one per headline capability.
//! Each test prints a single machine-greppable pass/fail line; independent
//! oracles (brute-force search, Murnaghan-Nakayama character arithmetic)
//! are implemented here from scratch rather than reusing library code.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use orbitcalc::branching::bip_restriction_mult;
use orbitcalc::duality::{d_a_one, leq_a, DualType};
use orbitcalc::faithful::{blocks_for, check_faithful, orbits_in_block, SeriesKind};
use orbitcalc::faithful::exceptional_table;
use orbitcalc::partition::{
    collapse, dbv, members_of, partitions_of, rather_odd_of, ClassicalType, Partition,
};
use orbitcalc::spin::{
    dbv_rather_odd, half_dbv, rho_closed, rho_recursive, rho_tilde, rho_via_tilde,
    spin_symbol, SpinDecomposition,
};
use orbitcalc::symbol::{bipartitions_of, Bipartition, Symbol};

fn report(number: u32, name: &str, ok: bool) {
    println!(
        "acceptance {:02} {}: {}",
        number,
        name,
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {number} ({name}) failed");
}

#[test]
fn a01_spin_worked_example() {
    let lam = Partition::new([2, 2, 2, 2, 5, 7, 12, 12, 12, 12, 12, 12, 15]);
    let dec = SpinDecomposition::of(&lam).unwrap();
    let mut ok = dec.q == vec![0, 0, 0, 0, 1, 1, 3, 3, 3, 3, 3, 3, 3];
    ok &= dec.r == vec![2, 2, 2, 2, 1, 3, 0, 0, 0, 0, 0, 0, 3];
    ok &= dec.epsilon == vec![1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1];
    ok &= dec.delta == vec![0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0];
    let lin: Vec<i64> = dec
        .q
        .iter()
        .enumerate()
        .map(|(i, &q)| q + i as i64 - dec.delta[i] as i64)
        .collect();
    ok &= lin == vec![0, 1, 2, 3, 5, 6, 9, 9, 11, 11, 13, 13, 15];
    let symbol = spin_symbol(&lam).unwrap();
    let expected =
        Symbol::new(2, 0, vec![1, 3, 5, 9, 11, 13], vec![0, 2, 6, 9, 11, 13, 15]).unwrap();
    ok &= symbol.canonical() == expected.canonical();
    let rt = rho_tilde(&lam).unwrap();
    ok &= rt
        == Bipartition::new(
            Partition::new([3, 3, 3, 1, 1, 1]),
            Partition::new([3, 3, 3, 3, 2]),
        );
    ok &= rho_via_tilde(&lam).unwrap() == rt.flip();
    report(1, "worked spin example", ok);
}

#[test]
fn a02_rho_closed_form() {
    let mut cases = 0u64;
    let mut ok = true;
    for n in 1..=30u32 {
        for lam in rather_odd_of(n) {
            cases += 1;
            ok &= rho_closed(&lam).unwrap() == rho_recursive(&lam).unwrap();
        }
    }
    report(2, &format!("rho closed form ({cases} cases)"), ok && cases > 500);
}

#[test]
fn a03_spin_symbol_bipartition() {
    let mut ok = true;
    for n in 1..=30u32 {
        for lam in rather_odd_of(n) {
            let s = spin_symbol(&lam).unwrap();
            ok &= s.bipartition() == rho_tilde(&lam).unwrap();
            // The decomposition vectors assemble the canonical linear
            // presentation of the symbol.
            let dec = SpinDecomposition::of(&lam).unwrap();
            let lin: Vec<u32> = dec
                .q
                .iter()
                .enumerate()
                .map(|(i, &q)| (q + i as i64 - dec.delta[i] as i64) as u32)
                .collect();
            let eps: Vec<u8> = dec.epsilon.clone();
            let (zc, ec) = s.canonical().linear_presentation().unwrap();
            ok &= zc == lin && ec == eps;
        }
    }
    report(3, "spin symbol and its label", ok);
}

#[test]
fn a04_rather_odd_duality_split() {
    let mut ok = true;
    for n in 1..=30u32 {
        let t = if n % 2 == 1 { ClassicalType::B } else { ClassicalType::D };
        for lam in rather_odd_of(n) {
            let dro = dbv_rather_odd(&lam).unwrap();
            ok &= dro == dbv(&lam, t).unwrap();
            let h = half_dbv(&lam).unwrap();
            ok &= h.union(&h) == dro;
        }
    }
    report(4, "rather-odd duality splits in half", ok);
}

#[test]
fn a05_collapse_brute_force() {
    let mut ok = true;
    for t in [ClassicalType::B, ClassicalType::C, ClassicalType::D] {
        let start = if t == ClassicalType::B { 1 } else { 2 };
        for n in (start..=16u32).step_by(2) {
            let members = members_of(n, t);
            for lam in partitions_of(n) {
                let c = collapse(&lam, t).unwrap();
                // Brute force: the unique dominance-largest member below lam.
                let below: Vec<&Partition> = members
                    .iter()
                    .filter(|m| m.dominance_leq(&lam))
                    .collect();
                let max = below
                    .iter()
                    .find(|m| below.iter().all(|o| o.dominance_leq(m)))
                    .expect("a member below every partition exists");
                ok &= c == **max;
            }
        }
    }
    report(5, "collapse equals brute-force maximum", ok);
}

fn random_partition(rng: &mut StdRng, max_size: u32) -> Partition {
    let size = rng.gen_range(0..=max_size);
    let mut left = size;
    let mut parts = Vec::new();
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    Partition::new(parts)
}

/// Suffix sums of an ascending sequence, compared entrywise: the canonical
/// (sorted) arrangement should weakly dominate all others from the top.
fn suffix_dominates(a: &[i64], b: &[i64]) -> bool {
    assert_eq!(a.len(), b.len());
    let (mut sa, mut sb) = (0i64, 0i64);
    for i in (0..a.len()).rev() {
        sa += a[i];
        sb += b[i];
        if sa < sb {
            return false;
        }
    }
    true
}

#[test]
fn a06_union_dominance_and_symbol_lemmas() {
    let mut rng = StdRng::seed_from_u64(6);
    let mut ok = true;

    // Union monotonicity: exhaustive at small sizes.
    for a in 0..=6u32 {
        for b in 0..=6u32 {
            let pa = partitions_of(a);
            let pb = partitions_of(b);
            for a1 in &pa {
                for a2 in &pa {
                    if !a1.dominance_leq(a2) {
                        continue;
                    }
                    for b1 in &pb {
                        for b2 in &pb {
                            if b1.dominance_leq(b2) {
                                ok &= a1.union(b1).dominance_leq(&a2.union(b2));
                            }
                        }
                    }
                }
            }
        }
    }
    // ... and randomized at larger sizes.
    let mut done = 0;
    while done < 10_000 {
        let a1 = random_partition(&mut rng, 12);
        let a2 = random_partition(&mut rng, 12);
        let b1 = random_partition(&mut rng, 12);
        let b2 = random_partition(&mut rng, 12);
        if a1.size() != a2.size() || b1.size() != b2.size() {
            continue;
        }
        if a1.dominance_leq(&a2) && b1.dominance_leq(&b2) {
            ok &= a1.union(&b1).dominance_leq(&a2.union(&b2));
            done += 1;
        }
    }

    // The canonical linear presentation maximizes Z + eps among all
    // presentations of a one-row-increment symbol.
    let mut lin_cases = 0u64;
    for n in 0..=4u32 {
        for bip in bipartitions_of(n) {
            for d in [1i64, 3] {
                let s = Symbol::from_bipartition(1, 0, &bip, d);
                let (z, e) = s.linear_presentation().unwrap();
                let canon: Vec<i64> =
                    z.iter().zip(&e).map(|(&zi, &ei)| zi as i64 + ei as i64).collect();
                // Every presentation is a shuffle of the two rows.
                let top: Vec<u32> = s.canonical().top().to_vec();
                let bottom: Vec<u32> = s.canonical().bottom().to_vec();
                let len = top.len() + bottom.len();
                for mask in 0u32..(1 << len) {
                    if mask.count_ones() as usize != bottom.len() {
                        continue;
                    }
                    let (mut i, mut j) = (0usize, 0usize);
                    let mut other = Vec::new();
                    for pos in 0..len {
                        if mask >> pos & 1 == 1 {
                            other.push(bottom[j] as i64 + 1);
                            j += 1;
                        } else {
                            other.push(top[i] as i64);
                            i += 1;
                        }
                    }
                    lin_cases += 1;
                    ok &= suffix_dominates(&canon, &other);
                }
            }
        }
    }
    // Randomized presentations of random symbols.
    for _ in 0..10_000 {
        let n = rng.gen_range(0..=6u32);
        let bip_list = bipartitions_of(n);
        let bip = &bip_list[rng.gen_range(0..bip_list.len())];
        let d = [1i64, 3, 5][rng.gen_range(0..3)];
        let s = Symbol::from_bipartition(1, 0, &bip, d).canonical();
        let (z, e) = s.linear_presentation().unwrap();
        let canon: Vec<i64> = z.iter().zip(&e).map(|(&zi, &ei)| zi as i64 + ei as i64).collect();
        let (top, bottom) = (s.top().to_vec(), s.bottom().to_vec());
        // Random shuffle of the rows.
        let len = top.len() + bottom.len();
        let mut slots: Vec<bool> = (0..len).map(|i| i < bottom.len()).collect();
        for i in (1..len).rev() {
            let j = rng.gen_range(0..=i);
            slots.swap(i, j);
        }
        let (mut i, mut j) = (0usize, 0usize);
        let mut other = Vec::new();
        for &is_bottom in &slots {
            if is_bottom {
                other.push(bottom[j] as i64 + 1);
                j += 1;
            } else {
                other.push(top[i] as i64);
                i += 1;
            }
        }
        ok &= suffix_dominates(&canon, &other);
    }

    // Doubling a symbol doubles its canonical presentation: the sorted
    // entries of the doubled symbol are exactly 2Z + eps.
    let mut tilde_cases = 0u64;
    for n in 0..=6u32 {
        for bip in bipartitions_of(n) {
            for d in [1i64, 3] {
                let s = Symbol::from_bipartition(1, 0, &bip, d);
                let (z, e) = s.linear_presentation().unwrap();
                let doubled: Vec<u32> =
                    z.iter().zip(&e).map(|(&zi, &ei)| 2 * zi + ei as u32).collect();
                let t = s.tilde().unwrap();
                let (zt, _) = t.linear_presentation().unwrap();
                tilde_cases += 1;
                ok &= zt == doubled;
            }
        }
    }
    report(
        6,
        &format!("union dominance and symbol lemmas ({lin_cases}+{tilde_cases} symbol cases)"),
        ok,
    );
}

#[test]
fn a07_faithfulness_small_rank() {
    let start = std::time::Instant::now();
    let mut ok = true;
    let mut checked = 0u64;
    let families: Vec<(SeriesKind, Vec<u32>)> = vec![
        (SeriesKind::Sl, (2..=7).collect()),
        (SeriesKind::SoOdd, (1..=6).map(|n| 2 * n + 1).collect()),
        (SeriesKind::SoEven, (2..=6).map(|n| 2 * n).collect()),
        (SeriesKind::Sp, (1..=6).map(|n| 2 * n).collect()),
        (SeriesKind::SpinOdd, (1..=6).map(|n| 2 * n + 1).collect()),
        (SeriesKind::SpinEven, (2..=6).map(|n| 2 * n).collect()),
    ];
    for (kind, sizes) in families {
        for size in sizes {
            for block in blocks_for(kind, size).unwrap() {
                for orbit in orbits_in_block(&block).unwrap() {
                    let r = check_faithful(&orbit, &block).unwrap();
                    if !r.overall {
                        eprintln!("not faithful: {kind:?} N={size} block {} orbit {orbit}", block.index);
                    }
                    ok &= r.overall;
                    checked += 1;
                }
            }
        }
    }
    let secs = start.elapsed().as_secs();
    report(
        7,
        &format!("faithfulness for {checked} classical (orbit, block) pairs in {secs}s"),
        ok && secs < 600,
    );
}

#[test]
fn a08_exceptional_tables() {
    let mut ok = true;
    for (group, file) in [("E6", "tables_e6.json"), ("E7", "tables_e7.json")] {
        let table = exceptional_table(group).unwrap();
        let emitted = serde_json::to_string_pretty(&table).unwrap() + "\n";
        let path = format!("{}/../../data/{file}", env!("CARGO_MANIFEST_DIR"));
        let on_disk = std::fs::read_to_string(path).unwrap();
        ok &= emitted == on_disk;
    }
    // Spot-check the headline row.
    let e7 = exceptional_table("E7").unwrap();
    let d6 = e7.rows.iter().find(|r| r.orbit == "D6").unwrap();
    ok &= d6.quotient == "2A7" && d6.wf == vec![vec![2, 2, 2, 2]];
    report(8, "exceptional witness tables round-trip", ok);
}

#[test]
fn a09_wavefront_projection_and_order() {
    let mut ok = true;
    for t in [DualType::A, DualType::B, DualType::C, DualType::D] {
        for rank in 1..=8u32 {
            let ct = match t {
                DualType::A => None,
                DualType::B => Some(ClassicalType::B),
                DualType::C => Some(ClassicalType::C),
                DualType::D => Some(ClassicalType::D),
            };
            let orbits: Vec<Partition> = match ct {
                None => partitions_of(t.dual_size(rank)),
                Some(c) => members_of(t.dual_size(rank), c),
            };
            for o in &orbits {
                let class = d_a_one(t, rank, o).unwrap();
                let expected = match ct {
                    None => o.transpose(),
                    Some(c) => dbv(o, c).unwrap(),
                };
                ok &= class.sat == expected && class.dual == *o;
            }
            for o1 in &orbits {
                for o2 in &orbits {
                    if o1.dominance_leq(o2) {
                        let (c1, c2) = (d_a_one(t, rank, o1).unwrap(), d_a_one(t, rank, o2).unwrap());
                        ok &= leq_a(&c2, &c1);
                    }
                }
            }
        }
    }
    report(9, "wavefront projection and order reversal", ok);
}

// ---- independent hyperoctahedral character oracle -------------------------

/// Character of the symmetric group via the Murnaghan-Nakayama rule, on the
/// beta-set of the partition.
fn sn_char(lambda: &Partition, mu: &[u32]) -> i64 {
    let l = lambda.len().max(1);
    let beta: Vec<i64> = (0..l)
        .map(|i| lambda.part(i) as i64 + (l - 1 - i) as i64)
        .collect();
    mn(&beta, mu)
}

fn mn(beta: &[i64], mu: &[u32]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let k = k as i64;
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.to_vec();
        next[i] = b - k;
        total += sign * mn(&next, rest);
    }
    total
}

/// Centralizer order of a signed-permutation class with positive cycle type
/// `pi` and negative cycle type `sigma`.
fn cent(pi: &Partition, sigma: &Partition) -> i64 {
    let one = |p: &Partition| -> i64 {
        let mut z = 1i64;
        for &v in p.distinct_parts().iter() {
            let m = p.multiplicity(v) as i64;
            z *= (2 * v as i64).pow(p.multiplicity(v) as u32);
            z *= (1..=m).product::<i64>();
        }
        z
    };
    one(pi) * one(sigma)
}

/// All multiset splits of a partition into an ordered pair.
fn splits(p: &Partition) -> Vec<(Partition, Partition)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for &v in p.distinct_parts().iter() {
        let m = p.multiplicity(v);
        let mut next = Vec::new();
        for (a, b) in out {
            for take in 0..=m {
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                a2.extend(std::iter::repeat(v).take(take));
                b2.extend(std::iter::repeat(v).take(m - take));
                next.push((a2, b2));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(a, b)| (Partition::new(a), Partition::new(b)))
        .collect()
}

/// Character of the hyperoctahedral group labeled by a bipartition,
/// evaluated on the class (pi, sigma), via induction from the two-block
/// subgroup with a sign twist on the second block.
fn wn_char(label: &Bipartition, pi: &Partition, sigma: &Partition) -> i64 {
    let a = label.alpha.size();
    let zg = cent(pi, sigma);
    let mut total = 0i64;
    for (nu_p, tau_p) in splits(pi) {
        for (nu_m, tau_m) in splits(sigma) {
            if nu_p.size() + nu_m.size() != a {
                continue;
            }
            let zh = cent(&nu_p, &nu_m) * cent(&tau_p, &tau_m);
            assert_eq!(zg % zh, 0);
            let mut mu1: Vec<u32> = nu_p.parts().to_vec();
            mu1.extend(nu_m.parts());
            mu1.sort_unstable_by(|x, y| y.cmp(x));
            let mut mu2: Vec<u32> = tau_p.parts().to_vec();
            mu2.extend(tau_m.parts());
            mu2.sort_unstable_by(|x, y| y.cmp(x));
            let sign = if tau_m.len() % 2 == 0 { 1 } else { -1 };
            total += (zg / zh)
                * sn_char(&label.alpha, &mu1)
                * sn_char(&label.beta, &mu2)
                * sign;
        }
    }
    total
}

/// Order of the hyperoctahedral group of rank n.
fn wn_order(n: u32) -> i64 {
    (1..=n as i64).product::<i64>() * (1i64 << n)
}

#[test]
fn a10_branching_against_characters() {
    let mut ok = true;
    let mut cases = 0u64;
    for n in 0..=5u32 {
        for k in 0..=n {
            let classes_k: Vec<(Partition, Partition)> = (0..=k)
                .flat_map(|a| {
                    partitions_of(a)
                        .into_iter()
                        .flat_map(move |p| {
                            partitions_of(k - a).into_iter().map(move |q| (p.clone(), q))
                        })
                })
                .collect();
            let classes_rest: Vec<(Partition, Partition)> = (0..=(n - k))
                .flat_map(|a| {
                    partitions_of(a)
                        .into_iter()
                        .flat_map(move |p| {
                            partitions_of(n - k - a)
                                .into_iter()
                                .map(move |q| (p.clone(), q))
                        })
                })
                .collect();
            let h_order = (wn_order(k) * wn_order(n - k)) as i128;
            for f in bipartitions_of(n) {
                for f1 in bipartitions_of(k) {
                    for f2 in bipartitions_of(n - k) {
                        // Inner product of the restriction with f1 x f2 over
                        // the classes of the product group.
                        let mut sum: i128 = 0;
                        for (p1, s1) in &classes_k {
                            for (p2, s2) in &classes_rest {
                                let pi = p1.union(p2);
                                let sigma = s1.union(s2);
                                let size = (wn_order(k) / cent(p1, s1)) as i128
                                    * (wn_order(n - k) / cent(p2, s2)) as i128;
                                sum += size
                                    * wn_char(&f, &pi, &sigma) as i128
                                    * wn_char(&f1, p1, s1) as i128
                                    * wn_char(&f2, p2, s2) as i128;
                            }
                        }
                        assert_eq!(sum % h_order, 0);
                        let brute = (sum / h_order) as u64;
                        ok &= brute == bip_restriction_mult(&f, &f1, &f2);
                        cases += 1;
                    }
                }
            }
        }
    }
    report(10, &format!("branching against characters ({cases} cases)"), ok);
}
