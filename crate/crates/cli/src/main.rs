mod cache;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bks_core::bases::{build_ortho_graph, enumerate_maximal_bases, read_bases_text, write_bases_text};
use bks_core::claims::{proof_bases, reproduce, Artifacts};
use bks_core::coloring::{check_colorable, export_cnf, KsInstance, OrthoScope};
use bks_core::config::magic_configuration;
use bks_core::geometry::{geometry_report, render_text};
use bks_core::magic::verify_magic;
use bks_core::metrics::{distance_spectrum, histogram_svg, write_histogram_csv};
use bks_core::rays::state_ray_table;
use bks_core::search::{search_small_proof, SearchParams};
use bks_core::symmetry::{automorphism_group, build_overlap_graph};
use bks_core::{config, BasisSet, RayTable};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cache::Cache;
use output::{Format, Output};

#[derive(Parser)]
#[command(name = "bks5", version, about = "Five-qubit Bell-Kochen-Specker proofs, rebuilt and checked")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for randomized steps; recorded in their output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output directory.
    #[arg(long, global = true, default_value = "bks5-out")]
    out: PathBuf,

    /// Output formats to emit, comma separated.
    #[arg(long, global = true, value_enum, value_delimiter = ',', default_value = "csv,json,svg,txt")]
    format: Vec<Format>,

    /// Directory caching the basis enumeration.
    #[arg(long, global = true, env = "BKS5_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify the 160-ray table, or check the magic configuration.
    Rays {
        #[arg(long, value_enum, default_value = "state")]
        config: ConfigKind,
        /// Ray CSV to compare against the rebuilt table.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Enumerate all complete orthogonal bases.
    Bases,
    /// Decide colorability of a basis set.
    Color {
        #[arg(long, default_value = "21")]
        bases: BasisChoice,
        #[arg(long, value_enum, default_value = "all-pairs")]
        scope: ScopeArg,
    },
    /// Randomized search for a small non-colorable subset.
    Search {
        #[arg(long, default_value_t = 16)]
        budget: usize,
        #[arg(long, default_value_t = 30)]
        max_size: usize,
        #[arg(long, value_enum, default_value = "all-pairs")]
        scope: ScopeArg,
    },
    /// Exact Hilbert-Schmidt distance spectrum.
    Distances {
        #[arg(long, default_value = "21")]
        bases: BasisChoice,
    },
    /// Spans, intersections and generator systems of the five sets.
    Geometry,
    /// Automorphism group of the overlap graph of the 21 printed bases.
    Symmetry,
    /// Run the whole pipeline and print a pass/fail checklist.
    Reproduce {
        #[arg(long, default_value_t = 16)]
        budget: usize,
        #[arg(long, default_value_t = 30)]
        max_size: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConfigKind {
    /// The five commuting sets whose joint eigenrays form the table.
    State,
    /// The five operator sets with contradictory product signs.
    Magic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    AllPairs,
    WithinBases,
}

impl From<ScopeArg> for OrthoScope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::AllPairs => OrthoScope::AllPairs,
            ScopeArg::WithinBases => OrthoScope::WithinBases,
        }
    }
}

/// `21` (printed proof), `all`, `blocks`, or a path to a basis text file.
#[derive(Clone, Debug)]
enum BasisChoice {
    Proof,
    All,
    Blocks,
    File(PathBuf),
}

impl std::str::FromStr for BasisChoice {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "21" | "proof" => BasisChoice::Proof,
            "all" | "661" => BasisChoice::All,
            "blocks" => BasisChoice::Blocks,
            other => BasisChoice::File(other.into()),
        })
    }
}

impl BasisChoice {
    fn name(&self) -> String {
        match self {
            BasisChoice::Proof => "21".into(),
            BasisChoice::All => "all".into(),
            BasisChoice::Blocks => "blocks".into(),
            BasisChoice::File(p) => p
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("custom")
                .to_string(),
        }
    }
}

struct Ctx {
    out: Output,
    seed: u64,
    cache: Option<Cache>,
}

impl Ctx {
    fn all_bases(&self, table: &RayTable) -> Result<Vec<BasisSet>> {
        if let Some(cache) = &self.cache {
            if let Some(b) = cache.load(table)? {
                eprintln!("using cached bases from {}", cache.dir().display());
                return Ok(b);
            }
        }
        let bases = enumerate_maximal_bases(&build_ortho_graph(table));
        if let Some(cache) = &self.cache {
            cache.store(table, &bases)?;
        }
        Ok(bases)
    }

    fn bases(&self, table: &RayTable, choice: &BasisChoice) -> Result<Vec<BasisSet>> {
        Ok(match choice {
            BasisChoice::Proof => proof_bases(),
            BasisChoice::All => self.all_bases(table)?,
            BasisChoice::Blocks => table
                .blocks
                .iter()
                .map(|b| BasisSet::new((b.first_id..=b.last_id).collect()))
                .collect(),
            BasisChoice::File(p) => {
                let f = fs::File::open(p).with_context(|| format!("opening {}", p.display()))?;
                read_bases_text(std::io::BufReader::new(f))?
            }
        })
    }
}

#[derive(Serialize)]
struct Certificate<'a> {
    bases: String,
    scope: OrthoScope,
    seed: u64,
    ray_count: usize,
    basis_count: usize,
    ortho_pairs: usize,
    result: &'a bks_core::coloring::ColoringResult,
}

#[derive(Serialize)]
struct SearchOutput<'a> {
    seed: u64,
    budget: usize,
    max_size: usize,
    scope: OrthoScope,
    candidate: &'a bks_core::search::ProofCandidate,
    bases: Vec<&'a BasisSet>,
}

fn cmd_rays(ctx: &Ctx, config: ConfigKind, golden: Option<PathBuf>) -> Result<bool> {
    if let ConfigKind::Magic = config {
        let report = verify_magic(&magic_configuration())?;
        let p = ctx.out.write_json("magic.json", &report)?;
        println!(
            "operators={} each_twice={} sign_product={:?} contradiction={}",
            report.distinct_operators, report.each_occurs_twice, report.sign_product, report.parity_contradiction
        );
        println!("wrote {}", p.display());
        return Ok(report.parity_contradiction);
    }
    let table = state_ray_table().context("building the ray table")?;
    if ctx.out.wants(Format::Csv) {
        let mut csv = Vec::new();
        table.write_csv(&mut csv)?;
        ctx.out.write("rays.csv", &csv)?;
    }
    if ctx.out.wants(Format::Json) {
        ctx.out.write_json("rays.json", &table)?;
    }
    println!("rays={} blocks={}", table.len(), table.blocks.len());
    if let Some(path) = golden {
        let f = fs::File::open(&path).with_context(|| format!("opening {}", path.display()))?;
        let reference = RayTable::read_csv(std::io::BufReader::new(f))
            .with_context(|| format!("reading golden file {}", path.display()))?;
        if let Some(id) = table.first_difference(&reference) {
            let show = |t: &RayTable| t.ray(id).map(|r| r.to_string()).unwrap_or_else(|_| "<missing>".into());
            eprintln!("golden mismatch at ray {id}");
            eprintln!("- golden:  {}", show(&reference));
            eprintln!("+ rebuilt: {}", show(&table));
            return Ok(false);
        }
        println!("golden match: {}", path.display());
    }
    Ok(true)
}

fn cmd_bases(ctx: &Ctx) -> Result<bool> {
    let table = state_ray_table()?;
    let bases = ctx.all_bases(&table)?;
    let mut text = Vec::new();
    write_bases_text(&bases, &mut text)?;
    ctx.out.write("bases.txt", &text)?;
    if ctx.out.wants(Format::Json) {
        ctx.out.write_json("bases.json", &bases)?;
    }
    println!("bases={}", bases.len());
    Ok(true)
}

fn cmd_color(ctx: &Ctx, choice: &BasisChoice, scope: ScopeArg) -> Result<bool> {
    let table = state_ray_table()?;
    let bases = ctx.bases(&table, choice)?;
    let inst = KsInstance::with_scope(&table, &bases, scope.into())?;
    let result = check_colorable(&inst);
    let name = choice.name();
    let cert = Certificate {
        bases: name.clone(),
        scope: scope.into(),
        seed: ctx.seed,
        ray_count: inst.ray_ids.len(),
        basis_count: bases.len(),
        ortho_pairs: inst.ortho_pairs.len(),
        result: &result,
    };
    ctx.out.write_json(&format!("color-{name}.json"), &cert)?;
    if ctx.out.wants(Format::Cnf) {
        ctx.out.write(&format!("color-{name}.cnf"), export_cnf(&inst).as_bytes())?;
    }
    let status = if result.is_colorable() { "colorable" } else { "non_colorable" };
    println!(
        "{status} bases={} rays={} nodes={} propagations={}",
        bases.len(),
        inst.ray_ids.len(),
        result.stats.nodes,
        result.stats.propagations
    );
    Ok(true)
}

fn cmd_search(ctx: &Ctx, budget: usize, max_size: usize, scope: ScopeArg) -> Result<bool> {
    let table = state_ray_table()?;
    let all = ctx.all_bases(&table)?;
    let params = SearchParams {
        seed: ctx.seed,
        max_size,
        budget,
        scope: scope.into(),
    };
    let cand = search_small_proof(&table, &all, &params)?;
    let out = SearchOutput {
        seed: ctx.seed,
        budget,
        max_size,
        scope: scope.into(),
        bases: cand.basis_indices.iter().map(|&i| &all[i]).collect(),
        candidate: &cand,
    };
    ctx.out.write_json("search.json", &out)?;
    println!(
        "status={:?} size={} restart={:?} seed={}",
        cand.status,
        cand.basis_indices.len(),
        cand.restart,
        ctx.seed
    );
    Ok(true)
}

fn cmd_distances(ctx: &Ctx, choice: &BasisChoice) -> Result<bool> {
    let table = state_ray_table()?;
    let bases = ctx.bases(&table, choice)?;
    let spectrum = distance_spectrum(&table, &bases)?;
    let name = choice.name();
    let mut csv = Vec::new();
    write_histogram_csv(&spectrum, &mut csv)?;
    ctx.out.write(&format!("distances-{name}.csv"), &csv)?;
    if ctx.out.wants(Format::Json) {
        ctx.out.write_json(&format!("distances-{name}.json"), &spectrum)?;
    }
    if ctx.out.wants(Format::Svg) {
        let title = format!("Hilbert-Schmidt distances between {} bases", bases.len());
        ctx.out.write(&format!("distances-{name}.svg"), histogram_svg(&spectrum, &title).as_bytes())?;
    }
    println!(
        "bases={} pairs={} distinct_D={}",
        bases.len(),
        spectrum.pair_count(),
        spectrum.distinct_values()
    );
    for (v, c) in spectrum.by_multiplicity().iter().take(3) {
        println!("  D2={v} count={c}");
    }
    Ok(true)
}

fn cmd_geometry(ctx: &Ctx) -> Result<bool> {
    let report = geometry_report(&config::state_configuration())?;
    ctx.out.write_json("geometry.json", &report)?;
    let text = render_text(&report);
    ctx.out.write("geometry.txt", text.as_bytes())?;
    print!("{text}");
    Ok(true)
}

fn cmd_symmetry(ctx: &Ctx) -> Result<bool> {
    let g = build_overlap_graph(&proof_bases());
    let plain = automorphism_group(&g.unweighted());
    let weighted = automorphism_group(&g);
    ctx.out.write("overlap-21.edges", g.edge_list_text().as_bytes())?;
    ctx.out.write_json("overlap-21.json", &g)?;
    #[derive(Serialize)]
    struct Report<'a> {
        unweighted: &'a bks_core::symmetry::AutGroupReport,
        weighted_order: String,
    }
    ctx.out.write_json(
        "symmetry.json",
        &Report {
            unweighted: &plain,
            weighted_order: weighted.order.to_string(),
        },
    )?;
    println!("edges={} aut_order={} weighted_order={}", g.edges().len(), plain.order, weighted.order);
    if let Some(s) = &plain.structure {
        println!(
            "normal_elementary_abelian={} quotient_order={} quotient_cyclic={}",
            s.normal_elementary_abelian_order, s.quotient_order, s.quotient_cyclic
        );
    }
    Ok(true)
}

fn cmd_reproduce(ctx: &Ctx, budget: usize, max_size: usize) -> Result<bool> {
    let table = state_ray_table()?;
    let all = ctx.all_bases(&table)?;
    let art = Artifacts::build(Some(all))?;
    let params = SearchParams {
        seed: ctx.seed,
        budget,
        max_size,
        ..SearchParams::default()
    };
    let claims = reproduce(&art, &params)?;
    for c in &claims {
        println!("{c}");
    }
    #[derive(Serialize)]
    struct Summary<'a> {
        seed: u64,
        budget: usize,
        max_size: usize,
        claims: &'a [bks_core::claims::Claim],
    }
    ctx.out.write_json(
        "claims.json",
        &Summary {
            seed: ctx.seed,
            budget,
            max_size,
            claims: &claims,
        },
    )?;
    let failed = claims.iter().filter(|c| !c.pass).count();
    println!("{} checks, {failed} failed", claims.len());
    Ok(failed == 0)
}

fn run(cli: Cli) -> Result<bool> {
    if cli.format.is_empty() {
        bail!("no output format selected");
    }
    let ctx = Ctx {
        out: Output {
            dir: cli.out,
            formats: cli.format,
        },
        seed: cli.seed,
        cache: cli.cache_dir.map(Cache::new),
    };
    match cli.command {
        Command::Rays { config, golden } => cmd_rays(&ctx, config, golden),
        Command::Bases => cmd_bases(&ctx),
        Command::Color { bases, scope } => cmd_color(&ctx, &bases, scope),
        Command::Search {
            budget,
            max_size,
            scope,
        } => cmd_search(&ctx, budget, max_size, scope),
        Command::Distances { bases } => cmd_distances(&ctx, &bases),
        Command::Geometry => cmd_geometry(&ctx),
        Command::Symmetry => cmd_symmetry(&ctx),
        Command::Reproduce { budget, max_size } => cmd_reproduce(&ctx, budget, max_size),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
