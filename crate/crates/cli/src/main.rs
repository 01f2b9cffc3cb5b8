//! `z4wb`: command-line workbench over the z4codes engine.
//!
//! Exit codes: 0 when every check passes, 1 on a mismatch or error, 2 when
//! a verdict is left open by a search budget.

mod records;
mod store;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use z4codes::classify::{self, AugmentationDag, Status, StatusPolicy};
use z4codes::equiv::canonical_form;
use z4codes::gf2core::parse_bits;
use z4codes::lifts::{decide_realizability, DecideOptions, LiftSpace, RealizabilityVerdict};
use z4codes::moonshine::{self, MoonshineStatus};
use z4codes::named::named_code;
use z4codes::neighbor::{augment_extremal, deaugment_extremal};
use z4codes::registry::{self, fig1_code, COUNTS, NONREALIZABLE_CODES};
use z4codes::{BinaryCode, Z4Code};

use records::{Emitter, ResultRecord};

#[derive(Parser, Debug)]
#[command(name = "z4wb", version, about = "Residue codes of extremal Type II Z4-codes of length 24")]
struct Cli {
    /// Directory holding the classification database.
    #[arg(long, global = true, env = "Z4WB_CACHE", default_value = "z4wb-data")]
    out: PathBuf,
    /// Seed for randomized lift searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Re-check published data.
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// Classify all candidate residue codes and write the database.
    Classify,
    /// Lift space of a binary code and its realizability verdict.
    Lifts {
        codefile: PathBuf,
        #[arg(long, default_value_t = z4codes::lifts::DEFAULT_CAP)]
        cap: usize,
        #[arg(long, default_value_t = z4codes::lifts::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Weight-4 augmentation of an extremal code.
    Augment { z4file: PathBuf, vector: String },
    /// Weight-4 de-augmentation of an extremal code.
    Deaugment { z4file: PathBuf, vector: String },
    /// Extended doubling of a binary code.
    Double { codefile: PathBuf },
    /// Moonshine status of a length-48 code or of the doubling of a length-24 code.
    Moonshine { codefile: PathBuf },
    /// Canonical form and automorphism group order.
    Canon { codefile: PathBuf },
    /// Summary of the classification database.
    Report,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Fig1,
    Appendix,
    Table2Chains,
    Prop411,
    All,
}

/// Outcome of a command, mapped onto the exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Outcome {
    Pass,
    Open,
    Mismatch,
}

impl Outcome {
    fn worst(self, other: Outcome) -> Outcome {
        self.max(other)
    }

    fn code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Mismatch => 1,
            Outcome::Open => 2,
        }
    }

    fn of(ok: bool) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Mismatch
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Emitter::stdout(cli.seed);
    match run(&cli, &mut out) {
        Ok(o) => ExitCode::from(o.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli, out: &mut Emitter) -> Result<Outcome> {
    match &cli.cmd {
        Cmd::Verify { target } => verify(cli, *target, out),
        Cmd::Classify => cmd_classify(cli, out),
        Cmd::Lifts {
            codefile,
            cap,
            budget,
        } => cmd_lifts(codefile, *cap, *budget, cli.seed, out),
        Cmd::Augment { z4file, vector } => cmd_neighbor(z4file, vector, true, out),
        Cmd::Deaugment { z4file, vector } => cmd_neighbor(z4file, vector, false, out),
        Cmd::Double { codefile } => cmd_double(codefile, out),
        Cmd::Moonshine { codefile } => cmd_moonshine(cli, codefile, out),
        Cmd::Canon { codefile } => cmd_canon(codefile, out),
        Cmd::Report => cmd_report(cli),
    }
}

fn read_binary(path: &Path) -> Result<BinaryCode> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(BinaryCode::from_text(&text)?)
}

fn read_z4(path: &Path) -> Result<Z4Code> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Z4Code::from_text(&text)?)
}

fn policy(seed: u64) -> StatusPolicy {
    StatusPolicy {
        decide: DecideOptions {
            seed,
            ..DecideOptions::default()
        },
    }
}

/// Loads the database, building it first if absent.
fn dag(cli: &Cli) -> Result<AugmentationDag> {
    if let Some(d) = store::load(&cli.out)? {
        return Ok(d);
    }
    eprintln!("building classification in {}", cli.out.display());
    let d = classify::classify(policy(cli.seed))?;
    store::save(&cli.out, &d, cli.seed)?;
    Ok(d)
}

fn verify(cli: &Cli, target: Target, out: &mut Emitter) -> Result<Outcome> {
    Ok(match target {
        Target::Fig1 => verify_fig1(out)?,
        Target::Appendix => verify_appendix(out)?,
        Target::Table2Chains => verify_chains(cli, out)?,
        Target::Prop411 => verify_decomposable(cli, out)?,
        Target::All => verify_fig1(out)?
            .worst(verify_appendix(out)?)
            .worst(verify_chains(cli, out)?)
            .worst(verify_decomposable(cli, out)?),
    })
}

fn verify_fig1(out: &mut Emitter) -> Result<Outcome> {
    let c = fig1_code();
    let type2 = c.is_type2();
    let extremal = c.is_extremal();
    let res = c.residue();
    let ok = type2 && extremal && res.dim() == 6 && res.min_weight()? == 8;
    out.emit(ResultRecord::new(
        "fig1",
        "extremal-type-ii",
        ok,
        serde_json::json!({
            "type2": type2,
            "min_euclidean_weight_16": extremal,
            "residue_dim": res.dim(),
            "residue_min_weight": res.min_weight()?,
            "code": c.to_text(),
        }),
    ))?;
    Ok(Outcome::of(ok))
}

fn verify_appendix(out: &mut Emitter) -> Result<Outcome> {
    let mut all = true;
    let mut canon = Vec::new();
    for (i, label) in registry::APPENDIX_LABELS.iter().enumerate() {
        let c = registry::appendix_code(i)?;
        let r = c.residue();
        let cert = canonical_form(&r)?;
        let expected = canonical_form(&named_code(label)?)?;
        let ok = c.is_extremal()
            && r.is_self_dual()
            && r.is_doubly_even()
            && cert.canonical == expected.canonical;
        all &= ok;
        canon.push(cert.canonical);
        out.emit(ResultRecord::new(
            &format!("appendix/{label}"),
            "extremal-with-self-dual-residue",
            ok,
            serde_json::json!({ "label": label, "code": c.to_text() }),
        ))?;
    }
    let g24 = canonical_form(&named_code("g24")?)?.canonical;
    let d24 = canonical_form(&named_code("d24")?)?.canonical;
    let distinct = (0..canon.len()).all(|i| (i + 1..canon.len()).all(|j| canon[i] != canon[j]))
        && canon.iter().all(|c| *c != g24 && *c != d24);
    out.emit(ResultRecord::new(
        "appendix",
        "residues-pairwise-inequivalent",
        distinct,
        serde_json::json!({ "count": canon.len() }),
    ))?;
    Ok(Outcome::of(all && distinct))
}

fn verify_chains(cli: &Cli, out: &mut Emitter) -> Result<Outcome> {
    let d = dag(cli)?;
    let ws = classify::realizable_chain_witnesses(&d)?;
    for w in &ws {
        out.emit(ResultRecord::new(
            &w.name,
            "extremal-witness",
            true,
            serde_json::json!({
                "parent": w.parent,
                "vectors": w.vectors,
                "vector_weights": w.vector_weights,
                "weight4_augmentation_refused": w.augmentation_refused,
                "provenance": w.provenance,
                "witness": w.witness.to_text(),
            }),
        ))?;
    }
    Ok(Outcome::of(ws.len() == registry::REALIZABLE_CODES.len()))
}

fn verify_decomposable(cli: &Cli, out: &mut Emitter) -> Result<Outcome> {
    let mut ok = true;
    for id in moonshine::decomposable_identities()? {
        let pass = id.holds && id.coset_min_weight == 8;
        ok &= pass;
        out.emit(ResultRecord::new(
            &id.name,
            "weight8-augmentation-identity",
            pass,
            serde_json::json!({
                "coset_min_weight": id.coset_min_weight,
                "dim": id.target_dim,
                "xi": z4codes::gf2core::bits_to_string(id.xi, 48),
            }),
        ))?;
    }
    // moonshine status of the two starting doublings
    let d = dag(cli)?;
    let e = moonshine::e8();
    for (name, b) in [
        ("e8+e8+e8", e.direct_sum(&e)?.direct_sum(&e)?),
        ("d16++e8", moonshine::d16_plus().direct_sum(&e)?),
    ] {
        let s = moonshine::doubling_status(&b, &d)?;
        ok &= s.is_moonshine();
        out.emit(ResultRecord::new(
            &format!("D({name})"),
            "moonshine-doubling",
            s.is_moonshine(),
            serde_json::json!({ "status": verdict_name(&s) }),
        ))?;
    }
    Ok(Outcome::of(ok))
}

fn verdict_name(s: &MoonshineStatus) -> &'static str {
    match s {
        MoonshineStatus::Moonshine(_) => "moonshine",
        MoonshineStatus::NotMoonshine(_) => "not-moonshine",
        MoonshineStatus::Unknown => "unknown",
    }
}

fn cmd_classify(cli: &Cli, out: &mut Emitter) -> Result<Outcome> {
    let d = classify::classify(policy(cli.seed))?;
    store::save(&cli.out, &d, cli.seed)?;
    let grid = d.table();
    print_grid(&grid);
    let report = classify::check_realizability_theorem(&d);
    let unknown = d
        .nodes
        .iter()
        .filter(|n| matches!(n.status, Status::Unknown { .. }))
        .count();
    let ok = grid.as_slice() == COUNTS.as_slice() && report.holds();
    out.emit(ResultRecord::new(
        "classification",
        "table",
        ok,
        serde_json::json!({ "grid": grid, "unknown": unknown, "theorem": report }),
    ))?;
    Ok(if unknown > 0 {
        Outcome::Open
    } else {
        Outcome::of(ok)
    })
}

fn print_grid(grid: &[(usize, usize, usize, usize, usize, usize)]) {
    eprintln!("  k  total  R8  R4  N8  N4");
    for &(k, t, r8, r4, n8, n4) in grid {
        eprintln!("{k:>3} {t:>6} {r8:>3} {r4:>3} {n8:>3} {n4:>3}");
    }
    let total: usize = grid.iter().map(|r| r.1).sum();
    eprintln!("total {total}");
}

fn cmd_lifts(path: &Path, cap: usize, budget: u64, seed: u64, out: &mut Emitter) -> Result<Outcome> {
    let code = read_binary(path)?;
    let space = LiftSpace::new(&code)?;
    let verdict = decide_realizability(&space, DecideOptions { cap, budget, seed })?;
    let summary = space.summary();
    let (name, outcome, witness) = match &verdict {
        RealizabilityVerdict::Realizable { witness, .. } => {
            ("realizable", Outcome::Pass, Some(witness.to_text()))
        }
        RealizabilityVerdict::NonRealizable { .. } => ("non-realizable", Outcome::Pass, None),
        RealizabilityVerdict::Unknown { .. } => ("unknown", Outcome::Open, None),
    };
    out.emit(ResultRecord::new(
        &path.display().to_string(),
        "realizability",
        outcome == Outcome::Pass,
        serde_json::json!({
            "space": summary,
            "verdict": name,
            "detail": verdict_detail(&verdict),
            "witness": witness,
        }),
    ))?;
    Ok(outcome)
}

fn verdict_detail(v: &RealizabilityVerdict) -> serde_json::Value {
    match v {
        RealizabilityVerdict::Realizable { point, .. } => serde_json::json!({ "point": point }),
        RealizabilityVerdict::NonRealizable { classes_checked } => {
            serde_json::json!({ "classes_checked": classes_checked })
        }
        RealizabilityVerdict::Unknown { budget, seed } => {
            serde_json::json!({ "budget": budget, "seed": seed })
        }
    }
}

fn cmd_neighbor(path: &Path, vector: &str, up: bool, out: &mut Emitter) -> Result<Outcome> {
    let code = read_z4(path)?;
    let vector = vector.trim();
    if vector.len() != code.len() {
        bail!("vector has length {}, code has length {}", vector.len(), code.len());
    }
    let a = parse_bits(vector)?;
    let (claim, res) = if up {
        ("augment", augment_extremal(&code, a).map(|(c, w)| (c, serde_json::to_value(w))))
    } else {
        ("deaugment", deaugment_extremal(&code, a).map(|(c, w)| (c, serde_json::to_value(w))))
    };
    let (new, witness) = match res {
        Ok(x) => x,
        Err(e) => bail!("{claim} refused: {e}"),
    };
    out.emit(ResultRecord::new(
        &path.display().to_string(),
        claim,
        true,
        serde_json::json!({ "witness": witness?, "code": new.to_text() }),
    ))?;
    Ok(Outcome::Pass)
}

fn cmd_double(path: &Path, out: &mut Emitter) -> Result<Outcome> {
    let code = read_binary(path)?;
    let d = moonshine::doubling(&code)?;
    out.emit(ResultRecord::new(
        &path.display().to_string(),
        "doubling",
        true,
        serde_json::json!({
            "triply_even": d.is_triply_even(),
            "dim": d.dim(),
            "code": d.to_text(),
        }),
    ))?;
    Ok(Outcome::Pass)
}

fn cmd_moonshine(cli: &Cli, path: &Path, out: &mut Emitter) -> Result<Outcome> {
    let code = read_binary(path)?;
    let status = match code.len() {
        24 => moonshine::doubling_status(&code, &dag(cli)?)?,
        48 => moonshine::moonshine_candidate_check(&code)?.status,
        n => bail!("expected length 24 or 48, got {n}"),
    };
    out.emit(ResultRecord::new(
        &path.display().to_string(),
        "moonshine",
        !matches!(status, MoonshineStatus::Unknown),
        serde_json::json!({ "verdict": verdict_name(&status), "status": status }),
    ))?;
    Ok(match status {
        MoonshineStatus::Unknown => Outcome::Open,
        _ => Outcome::Pass,
    })
}

fn cmd_canon(path: &Path, out: &mut Emitter) -> Result<Outcome> {
    let code = read_binary(path)?;
    let cert = canonical_form(&code)?;
    out.emit(ResultRecord::new(
        &path.display().to_string(),
        "canonical-form",
        true,
        serde_json::json!({
            "canonical": cert.canonical.to_text(),
            "witness": cert.witness.images(),
            "aut_order": cert.aut_order.to_string(),
        }),
    ))?;
    Ok(Outcome::Pass)
}

fn cmd_report(cli: &Cli) -> Result<Outcome> {
    let Some(d) = store::load(&cli.out)? else {
        bail!("no database in {}; run `z4wb classify` first", cli.out.display());
    };
    println!("Classification of doubly even [24,k] codes containing 1 with dual distance >= 4");
    println!();
    let grid = d.table();
    println!("  k  total  R8  R4  N8  N4");
    for &(k, t, r8, r4, n8, n4) in &grid {
        println!("{k:>3} {t:>6} {r8:>3} {r4:>3} {n8:>3} {n4:>3}");
    }
    let real = d.nodes.iter().filter(|n| n.status.is_realizable()).count();
    let nonreal = d.nodes.iter().filter(|n| n.status.is_nonrealizable()).count();
    println!("total {}  realizable {real}  non-realizable {nonreal}", d.nodes.len());
    println!();
    println!("Realizable codes with minimum weight 8");
    for (i, n) in d.nodes.iter().enumerate() {
        if n.min_weight == 8 && n.status.is_realizable() {
            println!(
                "  #{i:<4} k={:<3} |Aut|={:<12} {}",
                n.dim,
                n.aut_order,
                n.label.as_deref().unwrap_or("-")
            );
        }
    }
    println!();
    println!("Maximal non-realizable codes");
    for i in classify::maximal_nonrealizable(&d) {
        let n = &d.nodes[i];
        let (m, classes) = match n.status {
            Status::NonRealizable { m, classes_checked } => (m, classes_checked),
            _ => unreachable!(),
        };
        let expected = n
            .label
            .as_deref()
            .and_then(|l| NONREALIZABLE_CODES.iter().find(|r| r.0 == l));
        println!(
            "  #{i:<4} k={:<3} d={} m={m:<3} N={classes:<6} {}{}",
            n.dim,
            n.min_weight,
            n.label.as_deref().unwrap_or("-"),
            expected
                .map(|r| format!(" (published m={}, N={})", r.2, r.3))
                .unwrap_or_default()
        );
    }
    println!();
    println!("Moonshine status of doublings");
    let (mut yes, mut no, mut open) = (0, 0, 0);
    let mut lines = Vec::new();
    for n in &d.nodes {
        let s = moonshine::doubling_status(&n.canonical, &d)?;
        match s {
            MoonshineStatus::Moonshine(_) => yes += 1,
            MoonshineStatus::NotMoonshine(_) => no += 1,
            MoonshineStatus::Unknown => open += 1,
        }
        if n.min_weight == 8 && n.label.is_some() {
            lines.push(format!(
                "  D({}) {}",
                n.label.as_deref().unwrap_or("-"),
                verdict_name(&s)
            ));
        }
    }
    for l in lines {
        println!("{l}");
    }
    println!("moonshine {yes}  not moonshine {no}  unknown {open}");
    Ok(if open > 0 { Outcome::Open } else { Outcome::Pass })
}
