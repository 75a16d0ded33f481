//! `welldom`: check wellness properties, build and verify the gadget
//! reductions, enumerate solution families, compute chain parameters, and
//! generate seeded random instances.
//!
//! Exit codes: 0 = well / all trials passed / success, 1 = not well / some
//! trial failed, 2 = error (parse failure, violated precondition, cap).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use welldom::enumerate::{Enumerator, InstanceRef, SolutionKind};
use welldom::reductions::{
    self, CorrespondenceReport, NeighborhoodMode, ReductionOutput, TotalDominationVariant,
};
use welldom::{chain, gen, io, wellness, Graph, Hypergraph, WellnessProperty};

#[derive(Parser)]
#[command(name = "welldom", version, about = "Wellness checkers, reductions, and verifiers for domination, covering, and hitting-set problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    #[default]
    Human,
    Record,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a wellness property of an instance file.
    Check {
        /// One of: well-covered, well-dominated, well-total-dominated,
        /// well-hitting-set, well-set-cover, well-hitting-set-cover.
        property: String,
        file: PathBuf,
        /// Enumeration cap on the ground-set size.
        #[arg(long, default_value_t = welldom::enumerate::DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
    },
    /// Build a gadget or translation from an instance file.
    Reduce {
        /// One of: hs-to-wtd, hs-to-wd, vc-to-hs, dom-to-hs.
        reduction: String,
        file: PathBuf,
        /// Clique-cover size for hs-to-wd (some minimal hitting-set size, >= 2).
        #[arg(long)]
        k: Option<usize>,
        /// Gadget variant for hs-to-wtd: plain or split.
        #[arg(long, default_value = "plain")]
        variant: String,
        /// Neighborhood mode for dom-to-hs: closed or open.
        #[arg(long, default_value = "closed")]
        mode: String,
        /// Write the gadget here (role sidecar at <out>.roles) instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a seeded random correspondence experiment for one theorem.
    Verify {
        /// One of: total-domination, well-domination.
        theorem: String,
        /// Number of valid trials.
        #[arg(long, default_value_t = 100)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-universe", default_value_t = 7)]
        max_universe: usize,
        #[arg(long = "max-sets", default_value_t = 6)]
        max_sets: usize,
        /// Enumeration cap; well-domination gadgets can reach 38 vertices at
        /// the default bounds.
        #[arg(long, default_value_t = 48)]
        cap: usize,
        /// Negative-control hook: drop one gadget edge before verification.
        #[arg(long, hide = true)]
        mutate: bool,
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
    },
    /// List the complete solution family of one kind.
    Enumerate {
        /// A family kind, e.g. minimal-dominating-sets or minimal-hitting-sets.
        kind: String,
        file: PathBuf,
        #[arg(long, default_value_t = welldom::enumerate::DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
    },
    /// Print the chain parameters `gamma Gamma iota alpha` of a graph.
    Params {
        file: PathBuf,
        #[arg(long, default_value_t = welldom::enumerate::DEFAULT_CAP)]
        cap: usize,
    },
    /// Emit a seed-deterministic random instance.
    Gen {
        /// One of: hyper, graph.
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Universe size for hyper.
        #[arg(long, default_value_t = 5)]
        elements: usize,
        /// Family size for hyper.
        #[arg(long, default_value_t = 4)]
        sets: usize,
        /// Vertex count for graph.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Edge probability for graph.
        #[arg(long = "edge-prob", default_value_t = 0.5)]
        edge_prob: f64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn enumerator(cap: usize) -> Result<Enumerator> {
    if cap == 0 {
        bail!("--cap must be at least 1");
    }
    Ok(Enumerator::with_cap(cap))
}

fn load_instance(path: &Path) -> Result<io::Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(io::parse_instance(&text)?)
}

fn load_graph(path: &Path) -> Result<Graph> {
    Ok(load_instance(path)?.into_graph()?)
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph> {
    Ok(load_instance(path)?.into_hypergraph()?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check {
            property,
            file,
            cap,
            output,
        } => cmd_check(&property, &file, cap, output),
        Command::Reduce {
            reduction,
            file,
            k,
            variant,
            mode,
            out,
        } => cmd_reduce(&reduction, &file, k, &variant, &mode, out.as_deref()),
        Command::Verify {
            theorem,
            random,
            seed,
            max_universe,
            max_sets,
            cap,
            mutate,
            output,
        } => cmd_verify(&theorem, random, seed, max_universe, max_sets, cap, mutate, output),
        Command::Enumerate {
            kind,
            file,
            cap,
            output,
        } => cmd_enumerate(&kind, &file, cap, output),
        Command::Params { file, cap } => cmd_params(&file, cap),
        Command::Gen {
            kind,
            seed,
            elements,
            sets,
            n,
            edge_prob,
        } => cmd_gen(&kind, seed, elements, sets, n, edge_prob),
    }
}

fn cmd_check(property: &str, file: &Path, cap: usize, output: OutputMode) -> Result<ExitCode> {
    let property = WellnessProperty::from_tag(property)
        .ok_or_else(|| anyhow!("unknown property {property:?}"))?;
    let e = enumerator(cap)?;
    let instance = load_instance(file)?;
    let instance_ref = match &instance {
        io::Instance::Graph(g) => InstanceRef::Graph(g),
        io::Instance::Hypergraph(h) => InstanceRef::Hypergraph(h),
    };
    let report = wellness::check(property, instance_ref, &e)?;
    match output {
        OutputMode::Human => println!("{report}"),
        OutputMode::Record => println!("{}", report.record_line()),
    }
    Ok(ExitCode::from(if report.is_well() { 0 } else { 1 }))
}

fn write_gadget(out: Option<&Path>, gadget: &ReductionOutput) -> Result<()> {
    let graph_text = io::write_graph(&gadget.graph);
    let roles = gadget.role_table();
    match out {
        Some(path) => {
            fs::write(path, graph_text).with_context(|| format!("writing {}", path.display()))?;
            let mut role_path = path.as_os_str().to_owned();
            role_path.push(".roles");
            let role_path = PathBuf::from(role_path);
            fs::write(&role_path, roles)
                .with_context(|| format!("writing {}", role_path.display()))?;
            eprintln!("wrote {} and {}", path.display(), role_path.display());
        }
        None => {
            print!("{graph_text}");
            print!("{roles}");
        }
    }
    Ok(())
}

fn write_hyper(out: Option<&Path>, h: &Hypergraph) -> Result<()> {
    let text = io::write_hypergraph(h);
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_reduce(
    reduction: &str,
    file: &Path,
    k: Option<usize>,
    variant: &str,
    mode: &str,
    out: Option<&Path>,
) -> Result<ExitCode> {
    match reduction {
        "hs-to-wtd" => {
            let variant = TotalDominationVariant::from_tag(variant)
                .ok_or_else(|| anyhow!("unknown variant {variant:?}"))?;
            let h = load_hypergraph(file)?;
            let gadget = reductions::hitting_set_to_total_domination(&h, variant)?;
            write_gadget(out, &gadget)?;
        }
        "hs-to-wd" => {
            let k = k.ok_or_else(|| anyhow!("hs-to-wd requires --k"))?;
            let h = load_hypergraph(file)?;
            let gadget = reductions::hitting_set_to_domination(&h, k)?;
            write_gadget(out, &gadget)?;
        }
        "vc-to-hs" => {
            let g = load_graph(file)?;
            write_hyper(out, &reductions::vertex_cover_to_hitting_set(&g)?)?;
        }
        "dom-to-hs" => {
            let mode = NeighborhoodMode::from_tag(mode)
                .ok_or_else(|| anyhow!("unknown mode {mode:?}"))?;
            let g = load_graph(file)?;
            write_hyper(out, &reductions::domination_to_hitting_set(&g, mode)?)?;
        }
        other => bail!("unknown reduction {other:?}"),
    }
    Ok(ExitCode::SUCCESS)
}

/// Rebuilds a graph without one edge; the negative-control hook uses it to
/// damage a gadget before verification.
fn drop_edge(g: &Graph, drop: (usize, usize)) -> Graph {
    Graph::from_edges(
        g.n(),
        g.edges().into_iter().filter(|&e| e != drop && e != (drop.1, drop.0)),
    )
    .expect("remaining edges stay valid")
}

enum Theorem {
    TotalDomination,
    WellDomination,
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    theorem: &str,
    random: usize,
    seed: u64,
    max_universe: usize,
    max_sets: usize,
    cap: usize,
    mutate: bool,
    output: OutputMode,
) -> Result<ExitCode> {
    let theorem = match theorem {
        "total-domination" => Theorem::TotalDomination,
        "well-domination" => Theorem::WellDomination,
        other => bail!("unknown theorem {other:?}"),
    };
    let e = enumerator(cap)?;
    let mut passed = 0usize;
    let mut failed = 0usize;
    let mut first_failure: Option<(usize, String, CorrespondenceReport)> = None;

    let (trials, rejected): (Vec<(Hypergraph, Option<usize>)>, usize) = match theorem {
        Theorem::TotalDomination => {
            let (instances, rejected) =
                gen::sample_total_domination_instances(seed, random, max_universe, max_sets);
            (instances.into_iter().map(|h| (h, None)).collect(), rejected)
        }
        Theorem::WellDomination => {
            let (instances, rejected) =
                gen::sample_well_domination_instances(seed, random, max_universe, max_sets);
            (
                instances.into_iter().map(|(h, k)| (h, Some(k))).collect(),
                rejected,
            )
        }
    };

    for (trial, (h, k)) in trials.iter().enumerate() {
        let report = match theorem {
            Theorem::TotalDomination => {
                let gadget = reductions::hitting_set_to_total_domination(
                    h,
                    TotalDominationVariant::Plain,
                )?;
                let graph = if mutate {
                    // detach the hub from the first element vertex
                    drop_edge(&gadget.graph, (0, 2))
                } else {
                    gadget.graph
                };
                let source = e.minimal_hitting_sets(h)?;
                let target = e.minimal_total_dominating_sets(&graph)?;
                reductions::verify_size_correspondence(&source, &target, 1)
            }
            Theorem::WellDomination => {
                let k = k.expect("well-domination trials carry k");
                let gadget = reductions::hitting_set_to_domination(h, k)?;
                let graph = if mutate {
                    // detach the apex from the first element vertex
                    drop_edge(&gadget.graph, (0, 1))
                } else {
                    gadget.graph
                };
                let source = e.minimal_hitting_sets(h)?;
                let target = e.minimal_dominating_sets(&graph)?;
                reductions::verify_well_domination_sizes(&source, &target, k)
            }
        };
        if report.matched {
            passed += 1;
        } else {
            failed += 1;
            if first_failure.is_none() {
                first_failure = Some((trial, io::write_hypergraph(h), report));
            }
        }
    }

    let theorem_tag = match theorem {
        Theorem::TotalDomination => "total-domination",
        Theorem::WellDomination => "well-domination",
    };
    match output {
        OutputMode::Human => {
            println!(
                "verify {theorem_tag}: {passed}/{} passed, {failed} failed, {rejected} rejected draws (seed {seed})",
                trials.len(),
            );
        }
        OutputMode::Record => {
            println!(
                "verify {theorem_tag} {} {passed} {failed} {rejected} {seed}",
                trials.len(),
            );
        }
    }
    if let Some((trial, instance_text, report)) = &first_failure {
        println!("first counterexample at trial {trial}: {}", report.record_line());
        for line in instance_text.lines() {
            println!("  {line}");
        }
    }
    Ok(ExitCode::from(if failed == 0 { 0 } else { 1 }))
}

fn parse_kind(kind: &str) -> Option<SolutionKind> {
    SolutionKind::from_tag(kind).or_else(|| SolutionKind::from_tag(kind.trim_end_matches('s')))
}

fn cmd_enumerate(kind: &str, file: &Path, cap: usize, output: OutputMode) -> Result<ExitCode> {
    let kind = parse_kind(kind).ok_or_else(|| anyhow!("unknown family kind {kind:?}"))?;
    let e = enumerator(cap)?;
    let instance = load_instance(file)?;
    let instance_ref = match &instance {
        io::Instance::Graph(g) => InstanceRef::Graph(g),
        io::Instance::Hypergraph(h) => InstanceRef::Hypergraph(h),
    };
    let family = e.family(kind, instance_ref)?;
    let display = |s: &[usize]| -> String {
        if s.is_empty() {
            return "{}".to_string();
        }
        match (&instance, kind) {
            (io::Instance::Hypergraph(h), SolutionKind::MinimalHittingSet) => s
                .iter()
                .map(|&i| h.element_name(i).to_string())
                .collect::<Vec<_>>()
                .join(","),
            _ => s.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
        }
    };
    match output {
        OutputMode::Human => {
            let sizes = family
                .size_values()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            println!(
                "{} family ({} solutions, sizes {}):",
                kind.tag(),
                family.len(),
                if sizes.is_empty() { "-".to_string() } else { sizes },
            );
            for s in family.solutions() {
                println!("{{{}}}", display(s));
            }
        }
        OutputMode::Record => {
            println!("family {} {} {}", kind.tag(), family.fingerprint(), family.len());
            for s in family.solutions() {
                println!("s {}", display(s));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_params(file: &Path, cap: usize) -> Result<ExitCode> {
    let e = enumerator(cap)?;
    let g = load_graph(file)?;
    println!("{}", chain::chain_parameters(&g, &e)?.record_line());
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(
    kind: &str,
    seed: u64,
    elements: usize,
    sets: usize,
    n: usize,
    edge_prob: f64,
) -> Result<ExitCode> {
    let mut rng = gen::trial_rng(seed, 0);
    match kind {
        "hyper" => {
            if elements == 0 {
                bail!("--elements must be at least 1");
            }
            let h = gen::random_hypergraph_with(&mut rng, elements, sets);
            print!("{}", io::write_hypergraph(&h));
        }
        "graph" => {
            if !(0.0..=1.0).contains(&edge_prob) {
                bail!("--edge-prob must lie in [0, 1]");
            }
            let g = gen::random_graph(&mut rng, n, edge_prob);
            print!("{}", io::write_graph(&g));
        }
        other => bail!("unknown generator kind {other:?}"),
    }
    Ok(ExitCode::SUCCESS)
}
