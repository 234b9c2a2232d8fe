//! Unipotent representations of the finite classical groups: enumeration,
//! families, Kawanaka wavefront sets, and Harish-Chandra series.

use orbitcalc::finite::{
    enumerate_unipotent, families, hc_series, kawanaka_wf, FiniteGroupForm, Series,
};

fn main() {
    let form = FiniteGroupForm { series: Series::B, rank: 2 };
    let reps = enumerate_unipotent(form).unwrap();
    println!("{} unipotent representations of SO(5, q):", reps.len());
    for rep in &reps {
        let wf = kawanaka_wf(rep).unwrap();
        let hc = hc_series(rep).unwrap();
        let label = rep
            .symbol
            .as_ref()
            .map(|s| s.to_string())
            .or_else(|| rep.partition.as_ref().map(|p| p.to_string()))
            .unwrap_or_default();
        println!("  {label}: wavefront {wf}, series r = {}", hc.r);
    }

    // The wavefront set is constant on families.
    let fams = families(form).unwrap();
    println!("{} families", fams.len());
    for (id, wf) in &fams {
        println!("  family {id:?} -> {wf}");
    }
}
