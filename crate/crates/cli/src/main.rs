//! Command-line front end: generators, validators, oracles and extractors
//! wired to files (graph6 + witness JSON), with a stable exit-code contract.
//!
//! Exit codes: 0 success / valid / found; 1 invalid witness, failed check or
//! nothing found; 2 input, parse, fingerprint or precondition errors;
//! 3 node budget exhausted; 4 exact-treewidth cap exceeded; 10..14 the
//! extraction outcomes (primary structure, secondary structure, embedding,
//! pinch witness, bound not met).

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use pinchkit::extract::{self, BoundMode, ExtractError, ExtractionResult};
use pinchkit::generators as gen;
use pinchkit::graph::{Fingerprint, Graph};
use pinchkit::oracles;
use pinchkit::structures::Constellation;
use pinchkit::witness::{
    validate_witness, ConstellationParams, NoParams, PinchParams, Witness, WitnessBody,
    WitnessError,
};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_CAP: u8 = 4;
const EXIT_PRIMARY: u8 = 10;
const EXIT_SECONDARY: u8 = 11;
const EXIT_EMBEDDING: u8 = 12;
const EXIT_PINCH: u8 = 13;
const EXIT_BOUND_NOT_MET: u8 = 14;

#[derive(Parser)]
#[command(
    name = "pinchkit",
    about = "generators, validators, oracles and extractors for graph structure certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family instance (graph6 plus witness sidecar).
    Gen(GenArgs),
    /// Replay a saved generation config byte-for-byte.
    Replay {
        #[arg(long)]
        config: PathBuf,
    },
    /// Check a witness file against a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Search for structures: pinch witnesses, induced patterns,
    /// subdivisions, or basic obstructions.
    Find(FindArgs),
    /// Treewidth: exact (capped), min-fill upper bound, or a lower bound
    /// from a minor-model witness.
    Tw(TwArgs),
    /// Run a witness-producing extraction on a graph (plus constellation input).
    Extract(ExtractArgs),
    /// Certify the structural properties of an array witness.
    Certify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        array: PathBuf,
        /// Vertex budget for the subdivision check.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Output prefix; writes <out>.g6 and, when the family carries a
    /// witness, <out>.witness.json.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also write a DOT rendering to <out>.dot.
    #[arg(long, global = true, default_value_t = false)]
    dot: bool,
    /// Save the resolved run config (for `replay`).
    #[arg(long, global = true)]
    save_config: Option<PathBuf>,
}

#[derive(Subcommand, Serialize, Deserialize, Clone)]
#[serde(tag = "family", rename_all = "kebab-case")]
enum Family {
    Complete {
        #[arg(long)]
        t: usize,
    },
    Biclique {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    Grid {
        #[arg(long)]
        t: usize,
    },
    Wall {
        #[arg(long)]
        t: usize,
    },
    Subdivision {
        /// Base graph (graph6 file).
        #[arg(long)]
        base: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Pd {
        #[arg(long)]
        s: usize,
    },
    PdExpansion {
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 3)]
        max_extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Array {
        #[arg(long)]
        s: usize,
        #[arg(long = "h")]
        h: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Constellation {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 4)]
        min_len: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = false)]
        plain: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Family {
    fn default_prefix(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "complete",
            Family::Biclique { .. } => "biclique",
            Family::Grid { .. } => "grid",
            Family::Wall { .. } => "wall",
            Family::Subdivision { .. } => "subdivision",
            Family::Pd { .. } => "pd",
            Family::PdExpansion { .. } => "pd-expansion",
            Family::Array { .. } => "array",
            Family::Constellation { .. } => "constellation",
        }
    }
}

#[derive(Args)]
struct FindArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Search for a (c,h)-pinch witness.
    #[arg(long, num_args = 2, value_names = ["C", "H"])]
    pinch: Option<Vec<usize>>,
    /// Search for an induced copy of a pattern (name like K4, K2,3, C5,
    /// P4, W4, G4, or a graph6 file).
    #[arg(long)]
    induced: Option<String>,
    /// Search for an induced subdivision of a pattern.
    #[arg(long)]
    subdivision: Option<String>,
    /// Cap on unsubdivided pattern edges for --subdivision.
    #[arg(long)]
    max_unsubdivided: Option<usize>,
    /// Search for a t-basic obstruction at this level.
    #[arg(long)]
    clean: Option<usize>,
    /// Vertex budget for subdivision-shaped searches (env PINCHKIT_BUDGET).
    #[arg(long)]
    budget: Option<usize>,
    /// Search-tree node budget for the induced-pattern search.
    #[arg(long)]
    node_budget: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TwArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = false)]
    exact: bool,
    #[arg(long, default_value_t = false)]
    upper: bool,
    /// Minor-model witness file for a certified lower bound.
    #[arg(long)]
    lower_model: Option<PathBuf>,
    /// Vertex cap for the exact solver.
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExtractArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Constellation witness JSON (required by l42, l43, l44, array).
    #[arg(long)]
    constellation: Option<PathBuf>,
    /// One of: ramsey, l42, l43, l44, array.
    #[arg(long)]
    lemma: String,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long = "h")]
    hollow: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Accept under-bound inputs; a failed run reports bound-not-met
    /// instead of erroring.
    #[arg(long, default_value_t = false)]
    relaxed: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Replay { config } => {
            let text = std::fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let args: RunConfig = serde_json::from_str(&text).context("parsing run config")?;
            cmd_gen(args.into_args())
        }
        Command::Validate { graph, witness } => cmd_validate(&graph, &witness),
        Command::Find(args) => cmd_find(args),
        Command::Tw(args) => cmd_tw(args),
        Command::Extract(args) => cmd_extract(args),
        Command::Certify {
            graph,
            array,
            budget,
            out,
        } => cmd_certify(&graph, &array, budget, out.as_deref()),
    }
}

/// Everything needed to reproduce a generation run byte-for-byte.
#[derive(Serialize, Deserialize)]
struct RunConfig {
    schema_version: u32,
    #[serde(flatten)]
    family: Family,
    out: PathBuf,
    dot: bool,
}

impl RunConfig {
    fn into_args(self) -> GenArgs {
        GenArgs {
            family: self.family,
            out: Some(self.out),
            dot: self.dot,
            save_config: None,
        }
    }
}

fn atomic_write(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| anyhow!("{} is empty", path.display()))?;
    Ok(pinchkit::graph6_parse(line)?)
}

fn read_witness(path: &Path) -> Result<Witness> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Witness::from_json(&text)?)
}

fn default_budget() -> usize {
    std::env::var("PINCHKIT_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(64)
}

fn default_node_budget() -> u64 {
    std::env::var("PINCHKIT_NODE_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(200_000_000)
}

/// Named patterns: K<t>, K<a>,<b>, C<n>, P<n>, W<t>, G<t>, or a graph6 file.
fn parse_pattern(spec: &str) -> Result<Graph> {
    let named = |spec: &str| -> Option<Result<Graph>> {
        let (head, rest) = spec.split_at(1);
        let build = |r: Result<Graph, gen::GenError>| r.map_err(Into::into);
        match head {
            "K" | "k" => {
                if let Some((a, b)) = rest.split_once(',') {
                    let (a, b) = (a.parse().ok()?, b.parse().ok()?);
                    Some(build(gen::gen_biclique(a, b)))
                } else {
                    let t = rest.parse().ok()?;
                    Some(build(gen::gen_complete(t)))
                }
            }
            "C" | "c" => Some(build(gen::gen_cycle(rest.parse().ok()?))),
            "P" | "p" => Some(build(gen::gen_path(rest.parse().ok()?))),
            "W" | "w" => Some(build(gen::gen_wall(rest.parse().ok()?))),
            "G" | "g" => Some(build(gen::gen_grid(rest.parse().ok()?))),
            _ => None,
        }
    };
    if !spec.is_empty() && spec.len() <= 8 {
        if let Some(r) = named(spec) {
            return r;
        }
    }
    read_graph(Path::new(spec))
}

fn cmd_gen(args: GenArgs) -> Result<u8> {
    let prefix = args
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(args.family.default_prefix()));
    let (graph, witness): (Graph, Option<WitnessBody>) = match &args.family {
        Family::Complete { t } => (gen::gen_complete(*t)?, None),
        Family::Biclique { a, b } => (gen::gen_biclique(*a, *b)?, None),
        Family::Grid { t } => (gen::gen_grid(*t)?, None),
        Family::Wall { t } => (gen::gen_wall(*t)?, None),
        Family::Subdivision {
            base,
            max_extra,
            seed,
        } => {
            use rand::SeedableRng;
            let base_graph = read_graph(base)?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            let spec = gen::SubdivisionSpec::random(&base_graph, *max_extra, &mut rng);
            let (g, map) = gen::gen_subdivision(&base_graph, &spec)?;
            let payload = pinchkit::oracles::SubdivisionEmbedding {
                base: base_graph,
                branch: map.branch,
                edge_paths: map.edge_paths,
            };
            (
                g,
                Some(WitnessBody::SubdivisionEmbedding {
                    parameters: NoParams {},
                    payload,
                }),
            )
        }
        Family::Pd { s } => {
            let (g, arr) = gen::gen_pd(*s)?;
            (
                g,
                Some(WitnessBody::Array {
                    parameters: NoParams {},
                    payload: arr,
                }),
            )
        }
        Family::PdExpansion { s, max_extra, seed } => {
            let (g, arr) = gen::gen_pd_expansion_random(*s, *max_extra, *seed)?;
            (
                g,
                Some(WitnessBody::Array {
                    parameters: NoParams {},
                    payload: arr,
                }),
            )
        }
        Family::Array { s, h, seed } => {
            let (g, arr) = gen::gen_array_random(*s, *h, *seed)?;
            (
                g,
                Some(WitnessBody::Array {
                    parameters: NoParams {},
                    payload: arr,
                }),
            )
        }
        Family::Constellation {
            s,
            l,
            d,
            min_len,
            max_len,
            plain,
            seed,
        } => {
            let (g, c) = gen::gen_random_constellation(*s, *l, (*min_len, *max_len), *d, *plain, *seed)?;
            (
                g,
                Some(WitnessBody::Constellation {
                    parameters: ConstellationParams {
                        plain: *plain,
                        meager: Some(*d),
                        hollow: None,
                    },
                    payload: c,
                }),
            )
        }
    };

    let g6_path = prefix.with_extension("g6");
    atomic_write(&g6_path, &format!("{}\n", pinchkit::graph6_emit(&graph)?))?;
    println!(
        "wrote {} ({} vertices, {} edges)",
        g6_path.display(),
        graph.vertex_count(),
        graph.edge_count()
    );
    if let Some(body) = witness {
        // arrays also carry their canonical minor model, for `tw
        // --lower-model`
        if let WitnessBody::Array { payload, .. } = &body {
            let model = payload.biclique_minor_model();
            let mw = Witness::new(
                &graph,
                WitnessBody::MinorModel {
                    parameters: NoParams {},
                    payload: model,
                },
            );
            let path = prefix.with_extension("model.json");
            atomic_write(&path, &mw.to_json()?)?;
            println!("wrote {}", path.display());
        }
        let w = Witness::new(&graph, body);
        let path = prefix.with_extension("witness.json");
        atomic_write(&path, &w.to_json()?)?;
        println!("wrote {}", path.display());
    }
    if args.dot {
        let path = prefix.with_extension("dot");
        atomic_write(&path, &pinchkit::dot_emit(&graph, None))?;
        println!("wrote {}", path.display());
    }
    if let Some(cfg_path) = &args.save_config {
        let cfg = RunConfig {
            schema_version: 1,
            family: args.family.clone(),
            out: prefix.clone(),
            dot: args.dot,
        };
        atomic_write(cfg_path, &serde_json::to_string_pretty(&cfg)?)?;
        println!("wrote {}", cfg_path.display());
    }
    Ok(EXIT_OK)
}

fn cmd_validate(graph: &Path, witness: &Path) -> Result<u8> {
    let g = read_graph(graph)?;
    let text = std::fs::read_to_string(witness)
        .with_context(|| format!("reading {}", witness.display()))?;
    // extraction result documents carry their certificate inline; lift it
    // into a regular witness envelope first
    let w = match Witness::from_json(&text) {
        Ok(w) => w,
        Err(WitnessError::Json(_)) => {
            let doc: ExtractionDoc = serde_json::from_str(&text)
                .context("file is neither a witness nor an extraction result")?;
            match extraction_witness(&g, doc)? {
                Lifted::Witness(w) => w,
                Lifted::Decided(code) => return Ok(code),
            }
        }
        Err(e) => return Err(e.into()),
    };
    match validate_witness(&g, &w) {
        Ok(()) => {
            println!("valid: {} witness", w.body.kind());
            Ok(EXIT_OK)
        }
        Err(WitnessError::Invalid(v)) => {
            println!("invalid: clause {} violated: {}", v.clause, v.detail);
            Ok(EXIT_INVALID)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(EXIT_INPUT)
        }
    }
}

enum Lifted {
    Witness(Witness),
    Decided(u8),
}

/// Converts an extraction document into the equivalent witness envelope.
/// Clique/stable outcomes are checked directly; a bound-not-met outcome
/// carries no certificate.
fn extraction_witness(g: &Graph, doc: ExtractionDoc) -> Result<Lifted> {
    if doc.schema_version != pinchkit::witness::SCHEMA_VERSION {
        bail!("unsupported schema_version {}", doc.schema_version);
    }
    let body = match doc.result {
        ExtractionResult::Alignment { alignment } => WitnessBody::Alignment {
            parameters: NoParams {},
            payload: alignment,
        },
        ExtractionResult::Constellation {
            constellation,
            plain,
        } => WitnessBody::Constellation {
            parameters: ConstellationParams {
                plain,
                meager: None,
                hollow: None,
            },
            payload: constellation,
        },
        ExtractionResult::Array { array } => WitnessBody::Array {
            parameters: NoParams {},
            payload: array,
        },
        ExtractionResult::Embedding { embedding } => WitnessBody::Embedding {
            parameters: NoParams {},
            payload: embedding,
        },
        ExtractionResult::Pinch { pinch, c, h } => WitnessBody::Pinch {
            parameters: PinchParams { c, h },
            payload: pinch,
        },
        ExtractionResult::Clique { vertices } => {
            let ok = vertices
                .iter()
                .enumerate()
                .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            println!(
                "{}: clique outcome on {:?}",
                if ok { "valid" } else { "invalid" },
                vertices
            );
            return Ok(Lifted::Decided(if ok { EXIT_OK } else { EXIT_INVALID }));
        }
        ExtractionResult::Stable { vertices } => {
            let ok = vertices
                .iter()
                .enumerate()
                .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
            println!(
                "{}: stable-set outcome on {:?}",
                if ok { "valid" } else { "invalid" },
                vertices
            );
            return Ok(Lifted::Decided(if ok { EXIT_OK } else { EXIT_INVALID }));
        }
        ExtractionResult::BoundNotMet { reason } => {
            println!("no certificate: bound not met ({reason})");
            return Ok(Lifted::Decided(EXIT_INVALID));
        }
    };
    let mut w = Witness::new(g, body);
    w.graph_fingerprint = doc.graph_fingerprint;
    Ok(Lifted::Witness(w))
}

fn write_or_print(out: Option<&Path>, payload: &str) -> Result<()> {
    match out {
        Some(p) => atomic_write(p, payload),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn cmd_find(args: FindArgs) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let queries = [
        args.pinch.is_some(),
        args.induced.is_some(),
        args.subdivision.is_some(),
        args.clean.is_some(),
    ];
    if queries.iter().filter(|&&q| q).count() != 1 {
        bail!("exactly one of --pinch, --induced, --subdivision, --clean is required");
    }

    if let Some(ph) = &args.pinch {
        let (c, h) = (ph[0], ph[1]);
        if c == 0 || h == 0 {
            bail!("pinch parameters start at 1");
        }
        return match oracles::find_pinch_witness(&g, c, h) {
            Some(w) => {
                let doc = Witness::new(
                    &g,
                    WitnessBody::Pinch {
                        parameters: PinchParams { c, h },
                        payload: w,
                    },
                );
                write_or_print(args.out.as_deref(), &doc.to_json()?)?;
                Ok(EXIT_OK)
            }
            None => {
                println!("none: the graph is ({c},{h})-pinched");
                Ok(EXIT_INVALID)
            }
        };
    }

    if let Some(spec) = &args.induced {
        let pattern = parse_pattern(spec)?;
        let budget = args.node_budget.unwrap_or_else(default_node_budget);
        return match oracles::find_induced_embedding(&g, &pattern, budget) {
            oracles::SearchResult::Found(w) => {
                let doc = Witness::new(
                    &g,
                    WitnessBody::Embedding {
                        parameters: NoParams {},
                        payload: w,
                    },
                );
                write_or_print(args.out.as_deref(), &doc.to_json()?)?;
                Ok(EXIT_OK)
            }
            oracles::SearchResult::NoneExhaustive => {
                println!("none: no induced copy exists");
                Ok(EXIT_INVALID)
            }
            oracles::SearchResult::BudgetExhausted => {
                eprintln!("node budget ({budget}) exhausted before the search completed");
                Ok(EXIT_BUDGET)
            }
        };
    }

    if let Some(spec) = &args.subdivision {
        let pattern = parse_pattern(spec)?;
        let budget = args.budget.unwrap_or_else(default_budget);
        let cap = args.max_unsubdivided.unwrap_or(usize::MAX);
        return match oracles::subdivision::find_induced_subdivision_capped(
            &g, &pattern, budget, cap,
        ) {
            oracles::BoundedSearch::Found(w) => {
                let doc = Witness::new(
                    &g,
                    WitnessBody::SubdivisionEmbedding {
                        parameters: NoParams {},
                        payload: w,
                    },
                );
                write_or_print(args.out.as_deref(), &doc.to_json()?)?;
                Ok(EXIT_OK)
            }
            oracles::BoundedSearch::NoneWithinBudget => {
                println!("none-within-budget: no induced subdivision on <= {budget} vertices");
                Ok(EXIT_INVALID)
            }
        };
    }

    let t = args.clean.expect("query arity checked");
    let budget = args.budget.unwrap_or_else(default_budget);
    match oracles::is_t_clean_bounded(&g, t, budget) {
        oracles::CleanVerdict::CleanWithinBudget { budget } => {
            println!("clean-within-budget: no {t}-basic obstruction on <= {budget} vertices");
            Ok(EXIT_INVALID)
        }
        oracles::CleanVerdict::Obstruction(b) => {
            let body = match *b {
                oracles::BasicObstruction::Clique(w) | oracles::BasicObstruction::Biclique(w) => {
                    WitnessBody::Embedding {
                        parameters: NoParams {},
                        payload: w,
                    }
                }
                oracles::BasicObstruction::WallSubdivision(w) => {
                    WitnessBody::SubdivisionEmbedding {
                        parameters: NoParams {},
                        payload: w,
                    }
                }
                oracles::BasicObstruction::LineOfWallSubdivision(w) => {
                    WitnessBody::LineSubdivisionEmbedding {
                        parameters: NoParams {},
                        payload: w,
                    }
                }
            };
            let doc = Witness::new(&g, body);
            write_or_print(args.out.as_deref(), &doc.to_json()?)?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_tw(args: TwArgs) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let modes = [args.exact, args.upper, args.lower_model.is_some()];
    if modes.iter().filter(|&&m| m).count() != 1 {
        bail!("exactly one of --exact, --upper, --lower-model is required");
    }
    // the certificate written to --out is always a plain witness envelope,
    // so `validate` can consume it directly
    let witness = if args.exact {
        let cap = args.cap.unwrap_or(oracles::TW_DEFAULT_CAP);
        match oracles::treewidth_exact(&g, cap) {
            Ok((w, td)) => {
                println!("treewidth {w}");
                Witness::new(
                    &g,
                    WitnessBody::TreeDecomposition {
                        parameters: NoParams {},
                        payload: td,
                    },
                )
            }
            Err(e @ oracles::TwError::CapExceeded(..)) => {
                eprintln!("{e}");
                return Ok(EXIT_CAP);
            }
            Err(e) => bail!(e.to_string()),
        }
    } else if args.upper {
        let (w, td) = oracles::treewidth_upper_minfill(&g);
        println!("treewidth <= {w}");
        Witness::new(
            &g,
            WitnessBody::TreeDecomposition {
                parameters: NoParams {},
                payload: td,
            },
        )
    } else {
        let path = args.lower_model.as_ref().expect("mode arity checked");
        let w = read_witness(path)?;
        if w.graph_fingerprint != g.fingerprint() {
            eprintln!("error: model witness cites a different graph");
            return Ok(EXIT_INPUT);
        }
        let WitnessBody::MinorModel { payload, .. } = &w.body else {
            bail!("--lower-model expects a minor_model witness");
        };
        match oracles::treewidth_lower_via_minor(&g, payload) {
            Ok(bound) => {
                println!("treewidth >= {bound}");
                w
            }
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(EXIT_INPUT);
            }
        }
    };
    if let Some(out) = &args.out {
        atomic_write(out, &witness.to_json()?)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize, Deserialize)]
struct ExtractionDoc {
    schema_version: u32,
    graph_fingerprint: Fingerprint,
    lemma: String,
    #[serde(flatten)]
    result: ExtractionResult,
}

fn need(name: &'static str, v: Option<usize>) -> Result<usize> {
    v.ok_or_else(|| anyhow!("--{name} is required for this lemma"))
}

fn read_constellation(args: &ExtractArgs, g: &Graph) -> Result<Constellation> {
    let path = args
        .constellation
        .as_ref()
        .ok_or_else(|| anyhow!("--constellation is required for this lemma"))?;
    let w = read_witness(path)?;
    if w.graph_fingerprint != g.fingerprint() {
        bail!("constellation witness cites a different graph");
    }
    match w.body {
        WitnessBody::Constellation { payload, .. } => Ok(payload),
        WitnessBody::Array { payload, .. } => Ok(payload.constellation()),
        other => bail!("expected a constellation witness, found {}", other.kind()),
    }
}

/// Folds an extractor result into (serializable outcome, exit code):
/// bound-not-met is a reported outcome, every other extraction error is an
/// input error.
fn settle(
    run: Result<(ExtractionResult, u8), ExtractError>,
) -> Result<Option<(ExtractionResult, u8)>> {
    match run {
        Ok(rc) => Ok(Some(rc)),
        Err(ExtractError::BoundNotMet(reason)) => {
            eprintln!("bound not met and no alternative found: {reason}");
            Ok(Some((
                ExtractionResult::BoundNotMet { reason },
                EXIT_BOUND_NOT_MET,
            )))
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(None)
        }
    }
}

fn cmd_extract(args: ExtractArgs) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let mode = if args.relaxed {
        BoundMode::Relaxed
    } else {
        BoundMode::Strict
    };
    let settled = match args.lemma.as_str() {
        "ramsey" => {
            let c = need("c", args.c)?;
            let s = need("s", args.s)?;
            settle(extract::ramsey_clique_or_stable(&g, c, s).map(|out| match out {
                extract::RamseyOutcome::Clique(vertices) => {
                    (ExtractionResult::Clique { vertices }, EXIT_PRIMARY)
                }
                extract::RamseyOutcome::Stable(vertices) => {
                    (ExtractionResult::Stable { vertices }, EXIT_SECONDARY)
                }
            }))?
        }
        "l42" => {
            let a = need("a", args.a)?;
            let d = need("d", args.d)?;
            let s = need("s", args.s)?;
            let l = need("l", args.l)?;
            let c0 = read_constellation(&args, &g)?;
            settle(
                extract::alignment_or_constellation(&g, &c0, a, d, s, l, mode).map(
                    |out| match out {
                        extract::AlignOrConst::Alignment(alignment) => {
                            (ExtractionResult::Alignment { alignment }, EXIT_PRIMARY)
                        }
                        extract::AlignOrConst::Constellation(constellation) => (
                            ExtractionResult::Constellation {
                                constellation,
                                plain: true,
                            },
                            EXIT_SECONDARY,
                        ),
                    },
                ),
            )?
        }
        "l43" => {
            let a = need("a", args.a)?;
            let c = need("c", args.c)?;
            let d = need("d", args.d)?;
            let h = need("h", args.hollow)?;
            let c0 = read_constellation(&args, &g)?;
            settle(
                extract::pinched_alignment_or_witness(&g, &c0, a, c, d, h, mode).map(|out| {
                    match out {
                        extract::AlignOrPinch::Alignment(alignment) => {
                            (ExtractionResult::Alignment { alignment }, EXIT_PRIMARY)
                        }
                        extract::AlignOrPinch::Pinch(pinch) => {
                            (ExtractionResult::Pinch { pinch, c, h }, EXIT_PINCH)
                        }
                    }
                }),
            )?
        }
        "l44" => {
            let l = need("l", args.l)?;
            let t = need("t", args.t)?;
            let c0 = read_constellation(&args, &g)?;
            settle(extract::meager_or_biclique(&g, &c0, l, t, mode).map(|out| match out {
                extract::MeagerOrBiclique::Meager(constellation) => {
                    let plain = pinchkit::structures::validate_constellation(
                        &g,
                        &constellation,
                        true,
                    )
                    .is_ok();
                    (
                        ExtractionResult::Constellation {
                            constellation,
                            plain,
                        },
                        EXIT_PRIMARY,
                    )
                }
                extract::MeagerOrBiclique::Embedding(embedding) => {
                    (ExtractionResult::Embedding { embedding }, EXIT_EMBEDDING)
                }
            }))?
        }
        "array" => {
            let c = need("c", args.c)?;
            let h = need("h", args.hollow)?;
            let s = need("s", args.s)?;
            let t = need("t", args.t)?;
            let c0 = read_constellation(&args, &g)?;
            settle(
                extract::array_or_witness(&g, &c0, c, h, s, t, mode).map(|out| match out {
                    extract::ArrayOutcome::Array(array) => {
                        (ExtractionResult::Array { array }, EXIT_PRIMARY)
                    }
                    extract::ArrayOutcome::Embedding(embedding) => {
                        (ExtractionResult::Embedding { embedding }, EXIT_EMBEDDING)
                    }
                    extract::ArrayOutcome::Pinch(pinch) => {
                        (ExtractionResult::Pinch { pinch, c, h }, EXIT_PINCH)
                    }
                }),
            )?
        }
        other => bail!("unknown lemma {other:?}: use ramsey, l42, l43, l44 or array"),
    };
    let Some((result, code)) = settled else {
        return Ok(EXIT_INPUT);
    };
    let doc = ExtractionDoc {
        schema_version: 1,
        graph_fingerprint: g.fingerprint(),
        lemma: args.lemma.clone(),
        result,
    };
    let text = serde_json::to_string_pretty(&doc)?;
    match &args.out {
        Some(p) => atomic_write(p, &text)?,
        None => println!("{text}"),
    }
    Ok(code)
}

fn cmd_certify(
    graph: &Path,
    array: &Path,
    budget: Option<usize>,
    out: Option<&Path>,
) -> Result<u8> {
    let g = read_graph(graph)?;
    let w = read_witness(array)?;
    if w.graph_fingerprint != g.fingerprint() {
        eprintln!("error: array witness cites a different graph");
        return Ok(EXIT_INPUT);
    }
    let WitnessBody::Array { payload, .. } = &w.body else {
        bail!("--array expects an array witness");
    };
    let budget = budget.unwrap_or_else(default_budget);
    let report = match extract::certify_array_properties(&g, payload, budget) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(EXIT_INVALID);
        }
    };
    for check in &report.checks {
        let verdict = if check.passed { "pass" } else { "FAIL" };
        let scope = check
            .budget
            .map(|b| format!(" (budget {b})"))
            .unwrap_or_default();
        println!("{verdict}: {}{scope} - {}", check.name, check.detail);
    }
    println!(
        "treewidth lower bound {} on {} vertices; overall: {}",
        report.treewidth_lower_bound,
        report.vertex_count,
        if report.all_passed { "pass" } else { "FAIL" }
    );
    if let Some(p) = out {
        atomic_write(p, &serde_json::to_string_pretty(&report)?)?;
    }
    Ok(if report.all_passed {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}
