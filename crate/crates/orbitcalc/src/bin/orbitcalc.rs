//! Command-line interface: each subcommand is a thin wrapper over one
//! library entry point, with `--json` switching to machine-readable output.
//! Domain errors exit with code 2 and a machine-readable error object.

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use orbitcalc::duality::{
    d_a_one, lift_class, DualType, Factor, FactorType, PseudoLeviOrbit,
};
use orbitcalc::faithful::{
    blocks_for, check_faithful, check_faithful_exceptional, exceptional_table, orbits_in_block,
    BlockId, SeriesKind,
};
use orbitcalc::finite::{hc_series, kawanaka_wf, DegenerateTag, Series, UnipotentRep};
use orbitcalc::partition::{collapse, ClassicalType, Partition};
use orbitcalc::spin::{d_partition, rho_via_tilde, rho_tilde, spin_symbol, SpinDecomposition};
use orbitcalc::springer::{p1, springer_rep, Group, Pair};
use orbitcalc::symbol::{Bipartition, Symbol};
use orbitcalc::wavefront::wavefront_of_az;
use orbitcalc::{Error, Result};

#[derive(Parser)]
#[command(name = "orbitcalc", version, about = "Exact combinatorics of nilpotent orbits and unipotent representations")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    let t = s.trim();
    if t.is_empty() || t == "-" {
        return Ok(Partition::empty());
    }
    t.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| e.to_string()))
        .collect::<std::result::Result<Vec<u32>, _>>()
        .map(Partition::new)
}

fn parse_classical_type(s: &str) -> std::result::Result<ClassicalType, String> {
    match s {
        "B" | "b" => Ok(ClassicalType::B),
        "C" | "c" => Ok(ClassicalType::C),
        "D" | "d" => Ok(ClassicalType::D),
        _ => Err(format!("unknown classical type {s} (expected B, C, or D)")),
    }
}

fn parse_dual_type(s: &str) -> std::result::Result<DualType, String> {
    match s {
        "A" | "a" => Ok(DualType::A),
        "B" | "b" => Ok(DualType::B),
        "C" | "c" => Ok(DualType::C),
        "D" | "d" => Ok(DualType::D),
        _ => Err(format!("unknown dual type {s} (expected A, B, C, or D)")),
    }
}

fn parse_series(s: &str) -> std::result::Result<Series, String> {
    match s {
        "A" => Ok(Series::A),
        "2A" => Ok(Series::TwistedA),
        "B" => Ok(Series::B),
        "C" => Ok(Series::C),
        "D" => Ok(Series::D),
        "2D" => Ok(Series::TwistedD),
        _ => Err(format!("unknown series {s} (expected A, 2A, B, C, D, or 2D)")),
    }
}

fn parse_tag(s: &str) -> std::result::Result<DegenerateTag, String> {
    match s {
        "I" | "i" | "1" => Ok(DegenerateTag::I),
        "II" | "ii" | "2" => Ok(DegenerateTag::II),
        _ => Err(format!("unknown tag {s} (expected I or II)")),
    }
}

fn parse_kind(s: &str) -> std::result::Result<SeriesKind, String> {
    match s {
        "sl" => Ok(SeriesKind::Sl),
        "so-odd" => Ok(SeriesKind::SoOdd),
        "so-even" => Ok(SeriesKind::SoEven),
        "sp" => Ok(SeriesKind::Sp),
        "spin-odd" => Ok(SeriesKind::SpinOdd),
        "spin-even" => Ok(SeriesKind::SpinEven),
        _ => Err(format!(
            "unknown series kind {s} (expected sl, so-odd, so-even, sp, spin-odd, or spin-even)"
        )),
    }
}

/// One pseudo-Levi factor, written TYPE RANK ':' ORBIT, e.g. `C2:2,2` or `A2:1,1,1`.
fn parse_factor(s: &str) -> std::result::Result<Factor, String> {
    let (head, orbit) = s
        .split_once(':')
        .ok_or_else(|| format!("factor {s} must look like C2:2,2"))?;
    let (t, rank) = head.split_at(1);
    let factor_type = match t {
        "A" | "a" => FactorType::A,
        "B" | "b" => FactorType::B,
        "C" | "c" => FactorType::C,
        "D" | "d" => FactorType::D,
        _ => return Err(format!("unknown factor type {t}")),
    };
    let rank: u32 = rank.parse().map_err(|e| format!("bad factor rank: {e}"))?;
    Ok(Factor::new(factor_type, rank, parse_partition(orbit)?))
}

#[derive(Args)]
struct RepArgs {
    /// Finite series: A, 2A, B, C, D, or 2D.
    #[arg(long, value_parser = parse_series)]
    series: Series,
    /// Rank of the group.
    #[arg(long)]
    rank: u32,
    /// Partition label (series A and 2A).
    #[arg(long, value_parser = parse_partition)]
    partition: Option<Partition>,
    /// First row of the bipartition label (series B, C, D, 2D).
    #[arg(long, value_parser = parse_partition)]
    alpha: Option<Partition>,
    /// Second row of the bipartition label.
    #[arg(long, value_parser = parse_partition)]
    beta: Option<Partition>,
    /// Symbol defect of the block the label attaches to.
    #[arg(long)]
    defect: Option<i64>,
    /// Tag (I or II) for degenerate defect-zero classes.
    #[arg(long, value_parser = parse_tag)]
    tag: Option<DegenerateTag>,
}

impl RepArgs {
    fn build(&self) -> Result<UnipotentRep> {
        let symbol = match (&self.alpha, &self.beta) {
            (None, None) => None,
            (a, b) => {
                let bip = Bipartition::new(
                    a.clone().unwrap_or_else(Partition::empty),
                    b.clone().unwrap_or_else(Partition::empty),
                );
                let default_defect = match self.series {
                    Series::B | Series::C => 1,
                    Series::D => 0,
                    Series::TwistedD => 2,
                    _ => {
                        return Err(Error::InvalidInput(
                            "series A and 2A take --partition, not --alpha/--beta".into(),
                        ))
                    }
                };
                Some(Symbol::from_bipartition(
                    1,
                    0,
                    &bip,
                    self.defect.unwrap_or(default_defect),
                ))
            }
        };
        if symbol.is_none() && self.partition.is_none() {
            return Err(Error::InvalidInput(
                "give either --partition or --alpha/--beta".into(),
            ));
        }
        Ok(UnipotentRep {
            series: self.series,
            rank: self.rank,
            partition: self.partition.clone(),
            symbol,
            tag: self.tag,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Duality of a nilpotent orbit: the dual orbit in the dual group's cone.
    Dual {
        /// Dual group type: A, B, C, or D.
        #[arg(long, value_parser = parse_dual_type)]
        dual_type: DualType,
        /// Rank of the dual group.
        #[arg(long)]
        rank: u32,
        /// Orbit of the dual group, as a comma-separated partition.
        #[arg(long, value_parser = parse_partition)]
        orbit: Partition,
    },
    /// The X-collapse of a partition: largest type-X partition it dominates.
    Collapse {
        /// Classical type: B, C, or D.
        #[arg(long = "type", value_parser = parse_classical_type)]
        classical_type: ClassicalType,
        /// The partition to collapse.
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
    },
    /// Symbol calculus: build the symbol of a bipartition and report its
    /// invariants and special representative.
    Symbol {
        /// First row of the bipartition.
        #[arg(long, value_parser = parse_partition, default_value = "")]
        alpha: Partition,
        /// Second row of the bipartition.
        #[arg(long, value_parser = parse_partition, default_value = "")]
        beta: Partition,
        /// Defect of the symbol.
        #[arg(long, default_value_t = 1)]
        defect: i64,
        /// Row-increment parameters a,b of the symbol family.
        #[arg(long, default_value = "1,0")]
        params: String,
    },
    /// The spin label of a rather-odd partition: decomposition vectors, the
    /// associated symbol, and the labels attached through it.
    SpinRho {
        /// A rather-odd partition.
        #[arg(long, value_parser = parse_partition)]
        orbit: Partition,
    },
    /// Kawanaka wavefront set of a unipotent representation.
    Kawanaka(RepArgs),
    /// The orbit attached to a pair by the generalized Springer map.
    Springer {
        /// Group family: SL, SO, Sp, or Spin.
        #[arg(long)]
        group: String,
        /// N for SL(N)/SO(N)/Spin(N); n for Sp(2n).
        #[arg(long)]
        size: u32,
        /// Orbit partition (SL and Spin pairs).
        #[arg(long, value_parser = parse_partition)]
        orbit: Option<Partition>,
        /// Character index chi (SL pairs).
        #[arg(long)]
        chi: Option<u32>,
        /// First row of the symbol (SO/Sp pairs).
        #[arg(long, value_parser = parse_partition)]
        alpha: Option<Partition>,
        /// Second row of the symbol (SO/Sp pairs).
        #[arg(long, value_parser = parse_partition)]
        beta: Option<Partition>,
        /// Symbol defect (SO/Sp pairs).
        #[arg(long)]
        defect: Option<i64>,
        /// Tag for degenerate classes.
        #[arg(long, value_parser = parse_tag)]
        tag: Option<DegenerateTag>,
    },
    /// Harish-Chandra series of a unipotent representation.
    HcSeries(RepArgs),
    /// The Achar class lifted from a pseudo-Levi orbit datum.
    Lift {
        /// Ambient dual group type: A, B, C, or D.
        #[arg(long, value_parser = parse_dual_type)]
        dual_type: DualType,
        /// Rank of the ambient dual group.
        #[arg(long)]
        rank: u32,
        /// Factors, each TYPE RANK ':' ORBIT (repeatable), e.g. --factor C2:2,2.
        #[arg(long = "factor", value_parser = parse_factor, required = true)]
        factors: Vec<Factor>,
    },
    /// The faithfulness check for a dual orbit and a block.
    Faithful {
        /// Classical series kind: sl, so-odd, so-even, sp, spin-odd, spin-even.
        #[arg(long, value_parser = parse_kind, conflicts_with = "group")]
        kind: Option<SeriesKind>,
        /// Partition size N of the dual orbits.
        #[arg(long)]
        size: Option<u32>,
        /// Block index (defect r or d).
        #[arg(long)]
        block: Option<i64>,
        /// SL only: primitive character numerator.
        #[arg(long)]
        chi: Option<u32>,
        /// The dual orbit (classical) or the orbit name (exceptional). When
        /// omitted for a classical block, all orbits of the block are checked.
        #[arg(long)]
        orbit: Option<String>,
        /// Exceptional group: E6 or E7.
        #[arg(long)]
        group: Option<String>,
    },
    /// The canonical unramified wavefront set of the dual of a
    /// representation with the given parameter orbit.
    Wavefront {
        /// Dual group type: A, B, C, or D.
        #[arg(long, value_parser = parse_dual_type)]
        dual_type: DualType,
        /// Rank of the dual group.
        #[arg(long)]
        rank: u32,
        /// Nilpotent orbit of the dual group.
        #[arg(long, value_parser = parse_partition)]
        orbit: Partition,
    },
    /// Print the shipped exceptional witness tables.
    Tables {
        /// E6 or E7; omit to print both.
        #[arg(long)]
        group: Option<String>,
    },
}

fn pvec(p: &Partition) -> Vec<u32> {
    p.parts().to_vec()
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Dual { dual_type, rank, orbit } => {
            let class = d_a_one(*dual_type, *rank, orbit)?;
            if cli.json {
                println!("{}", json!({ "orbit": pvec(orbit), "dual": pvec(&class.sat) }));
            } else {
                println!("dual of {orbit} (type {dual_type:?}, rank {rank}): {}", class.sat);
            }
        }
        Command::Collapse { classical_type, partition } => {
            let c = collapse(partition, *classical_type)?;
            if cli.json {
                println!("{}", json!({ "input": pvec(partition), "collapse": pvec(&c) }));
            } else {
                println!("{classical_type:?}-collapse of {partition}: {c}");
            }
        }
        Command::Symbol { alpha, beta, defect, params } => {
            let (a, b) = params
                .split_once(',')
                .and_then(|(x, y)| Some((x.trim().parse::<u32>().ok()?, y.trim().parse::<u32>().ok()?)))
                .ok_or_else(|| Error::InvalidInput(format!("bad --params {params}")))?;
            let bip = Bipartition::new(alpha.clone(), beta.clone());
            let s = Symbol::from_bipartition(a, b, &bip, *defect);
            let special = s.special()?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "symbol": s,
                        "defect": s.defect(),
                        "rank": s.rank(),
                        "special": special,
                    })
                );
            } else {
                println!("symbol {s}");
                println!("defect {}  rank {}", s.defect(), s.rank());
                println!("special {special}");
            }
        }
        Command::SpinRho { orbit } => {
            let dec = SpinDecomposition::of(orbit)?;
            let d = d_partition(orbit);
            let s = spin_symbol(orbit)?;
            let rt = rho_tilde(orbit)?;
            let rho = rho_via_tilde(orbit)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "orbit": pvec(orbit),
                        "d": d,
                        "q": dec.q,
                        "r": dec.r,
                        "epsilon": dec.epsilon,
                        "delta": dec.delta,
                        "symbol": s,
                        "rho_tilde": rt,
                        "rho": rho,
                    })
                );
            } else {
                println!("orbit {orbit}: d = {d}");
                println!("q = {:?}  r = {:?}", dec.q, dec.r);
                println!("epsilon = {:?}  delta = {:?}", dec.epsilon, dec.delta);
                println!("symbol {s}");
                println!("rho~ = {rt}");
                println!("rho  = {rho}");
            }
        }
        Command::Kawanaka(rep) => {
            let rep = rep.build()?;
            let wf = kawanaka_wf(&rep)?;
            if cli.json {
                println!("{}", json!({ "wf": pvec(&wf) }));
            } else {
                println!("Kawanaka wavefront set: {wf}");
            }
        }
        Command::Springer { group, size, orbit, chi, alpha, beta, defect, tag } => {
            let g = match group.as_str() {
                "SL" | "sl" => Group::SL(*size),
                "SO" | "so" => Group::SO(*size),
                "Sp" | "sp" => Group::Sp(*size),
                "Spin" | "spin" => Group::Spin(*size),
                _ => return Err(Error::InvalidInput(format!("unknown group {group}"))),
            };
            let pair = match g {
                Group::SL(_) => Pair::Sl {
                    lambda: orbit
                        .clone()
                        .ok_or_else(|| Error::InvalidInput("SL pairs need --orbit".into()))?,
                    chi: chi.unwrap_or(0),
                },
                Group::SO(n) => {
                    let bip = Bipartition::new(
                        alpha.clone().unwrap_or_else(Partition::empty),
                        beta.clone().unwrap_or_else(Partition::empty),
                    );
                    let dd = defect.unwrap_or(if n % 2 == 1 { 1 } else { 0 });
                    Pair::Symbolic {
                        symbol: Symbol::from_bipartition(2, 0, &bip, dd),
                        tag: *tag,
                    }
                }
                Group::Sp(_) => {
                    let bip = Bipartition::new(
                        alpha.clone().unwrap_or_else(Partition::empty),
                        beta.clone().unwrap_or_else(Partition::empty),
                    );
                    Pair::Symbolic {
                        symbol: Symbol::from_bipartition(1, 1, &bip, defect.unwrap_or(1)),
                        tag: *tag,
                    }
                }
                Group::Spin(_) => Pair::Spin {
                    lambda: orbit
                        .clone()
                        .ok_or_else(|| Error::InvalidInput("Spin pairs need --orbit".into()))?,
                    tag: *tag,
                },
            };
            let image = p1(g, &pair)?;
            let (block, label) = springer_rep(g, &pair)?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "orbit": pvec(&image), "block": block, "label": label })
                );
            } else {
                println!("orbit {image}");
                println!("block r = {}, weyl rank {}", block.r, block.weyl_rank);
            }
        }
        Command::HcSeries(rep) => {
            let rep = rep.build()?;
            let hc = hc_series(&rep)?;
            if cli.json {
                println!("{}", serde_json::to_string(&hc).unwrap());
            } else {
                println!("Harish-Chandra series: r = {}, relative Weyl rank {}", hc.r, hc.weyl_rank);
                if let Some(b) = &hc.bipartition {
                    println!("label {b}");
                }
                if let Some(p) = &hc.partition {
                    println!("label {p}");
                }
            }
        }
        Command::Lift { dual_type, rank, factors } => {
            let p = PseudoLeviOrbit::new(*dual_type, *rank, factors.clone())?;
            let class = lift_class(&p)?;
            if cli.json {
                println!("{}", serde_json::to_string(&class).unwrap());
            } else {
                println!("lift: sat {}  dual {}", class.sat, class.dual);
            }
        }
        Command::Faithful { kind, size, block, chi, orbit, group } => {
            if let Some(group) = group {
                let name = orbit
                    .clone()
                    .ok_or_else(|| Error::InvalidInput("exceptional checks need --orbit NAME".into()))?;
                let cert = check_faithful_exceptional(group, &name)?;
                if cli.json {
                    println!("{}", serde_json::to_string(&cert).unwrap());
                } else {
                    println!("{group} {name}: {cert:?}");
                }
                return Ok(());
            }
            let kind = kind.ok_or_else(|| Error::InvalidInput("give --kind or --group".into()))?;
            let size = size.ok_or_else(|| Error::InvalidInput("classical checks need --size".into()))?;
            let blocks = match block {
                Some(b) => vec![BlockId { kind, size, index: *b, chi: *chi }],
                None => blocks_for(kind, size)?,
            };
            let mut reports = Vec::new();
            for b in &blocks {
                let orbits = match orbit {
                    Some(o) => vec![parse_partition(o).map_err(Error::InvalidInput)?],
                    None => orbits_in_block(b)?,
                };
                for o in orbits {
                    reports.push(check_faithful(&o, b)?);
                }
            }
            if cli.json {
                println!("{}", serde_json::to_string(&reports).unwrap());
            } else {
                for r in &reports {
                    println!(
                        "block {} orbit {}: {}",
                        r.block.index,
                        r.orbit,
                        if r.overall { "faithful" } else { "NOT faithful" }
                    );
                }
            }
        }
        Command::Wavefront { dual_type, rank, orbit } => {
            let r = wavefront_of_az(*dual_type, *rank, orbit)?;
            if cli.json {
                println!("{}", json!({ "kwf": r.kwf, "barkwf": pvec(&r.barkwf) }));
            } else {
                println!("KWF: sat {}  dual {}", r.kwf.sat, r.kwf.dual);
                println!("wavefront orbit: {}", r.barkwf);
            }
        }
        Command::Tables { group } => {
            let groups: Vec<&str> = match group.as_deref() {
                Some(g) => vec![g],
                None => vec!["E6", "E7"],
            };
            for g in groups {
                let table = exceptional_table(g)?;
                if cli.json {
                    println!("{}", serde_json::to_string_pretty(&table).unwrap());
                } else {
                    println!("{} ({} rows)", table.group, table.rows.len());
                    for row in &table.rows {
                        println!("  {} -> {}  wf {:?}", row.orbit, row.quotient, row.wf);
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        let obj = json!({ "error": { "code": e.code(), "message": e.to_string() } });
        if cli.json {
            println!("{obj}");
        } else {
            eprintln!("{obj}");
        }
        std::process::exit(2);
    }
}
