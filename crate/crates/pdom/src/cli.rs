//! Argument definitions and command dispatch for the `pdom` binary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pdom_core::{
    all_gamma_p_sets, coverage_target, gamma_p, graph6, influencing_set, Graph, Proportion,
    VertexSet,
};

use crate::dot::to_dot;
use crate::records::*;
use crate::scan::{read_graph6_family, scan_enumerated, scan_family};
use crate::{edgelist, genspec, AppError};

#[derive(Debug, Parser)]
#[command(
    name = "pdom",
    version,
    about = "Exact partial domination on small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum p-dominating set size and the lexicographically first witness.
    Gamma {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_p)]
        p: Proportion,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Union of all minimum p-dominating sets.
    Influence {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_p, required_unless_present = "all_p", conflicts_with = "all_p")]
        p: Option<Proportion>,
        /// Every p = k/n, k = 1..n, followed by the intersection.
        #[arg(long)]
        all_p: bool,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// All minimum p-dominating sets, in lexicographic order.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_p)]
        p: Proportion,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Checks gamma_p(G x H) >= gamma_p(G) * gamma_p(H) over every pair of a family.
    Scan {
        #[arg(long, required_unless_present = "graphs", conflicts_with = "graphs")]
        max_order: Option<usize>,
        #[arg(long, value_parser = parse_p, default_value = "1/2")]
        p: Proportion,
        /// Enumerate all graphs, not only connected ones.
        #[arg(long)]
        include_disconnected: bool,
        /// A graph6 file, one graph per line.
        #[arg(long, value_name = "FILE", conflicts_with = "include_disconnected")]
        graphs: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Cartesian product of two graphs, as graph6 or DOT.
    Product {
        #[command(flatten)]
        first: Input,
        #[command(flatten)]
        second: SecondInput,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Generator spec such as path:6, complete-bipartite:4,2 or fig2.
    #[arg(long)]
    pub gen: Option<String>,
    #[arg(long)]
    pub g6: Option<String>,
    /// A graph6 file (.g6) or an edge list (anything else).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SecondInput {
    #[arg(long)]
    pub gen2: Option<String>,
    #[arg(long)]
    pub g62: Option<String>,
    #[arg(long)]
    pub file2: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Records,
    Dot,
}

/// What a successful run found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A scan reported at least one failing pair.
    Failures,
}

fn parse_p(text: &str) -> Result<Proportion, String> {
    text.parse().map_err(|e: pdom_core::Error| e.to_string())
}

fn read(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path).map_err(|source| AppError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn load(
    gen: &Option<String>,
    g6: &Option<String>,
    file: &Option<PathBuf>,
) -> Result<Graph, AppError> {
    let graph = match (gen, g6, file) {
        (Some(spec), _, _) => genspec::generate(spec)?,
        (_, Some(text), _) => graph6::decode(text)?,
        (_, _, Some(path)) => {
            let text = read(path)?;
            if path.extension().is_some_and(|e| e == "g6") {
                graph6::decode(text.lines().find(|l| !l.trim().is_empty()).unwrap_or(""))?
            } else {
                edgelist::parse(&text)?
            }
        }
        _ => return Err(AppError::Usage("no graph input given".into())),
    };
    Ok(graph)
}

impl Input {
    pub fn load(&self) -> Result<Graph, AppError> {
        load(&self.gen, &self.g6, &self.file)
    }
}

impl SecondInput {
    pub fn load(&self) -> Result<Graph, AppError> {
        load(&self.gen2, &self.g62, &self.file2)
    }
}

fn no_dot(format: Format, command: &str) -> Result<(), AppError> {
    if format == Format::Dot {
        return Err(AppError::Usage(format!("{command} has no DOT output")));
    }
    Ok(())
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<Status, AppError> {
    match &cli.command {
        Command::Gamma { input, p, format } => {
            let g = input.load()?;
            let result = gamma_p(&g, *p);
            let covered = g.closed_neighborhood_of_set(result.witness)?.len();
            let target = coverage_target(g.order(), *p);
            match format {
                Format::Human => {
                    writeln!(out, "gamma_p = {}", result.gamma_p)?;
                    writeln!(out, "witness = {}", result.witness)?;
                    writeln!(out, "covered = {covered}/{} (target {target})", g.order())?;
                }
                Format::Records => {
                    writeln!(out, "{GAMMA_HEADER}")?;
                    writeln!(
                        out,
                        "{}\t{p}\t{}\t{}\t{covered}\t{target}",
                        g.order(),
                        result.gamma_p,
                        set_field(result.witness)
                    )?;
                }
                Format::Dot => write!(out, "{}", to_dot(&g, result.witness))?,
            }
        }
        Command::Influence {
            input,
            p,
            all_p,
            format,
        } => {
            no_dot(*format, "influence")?;
            let g = input.load()?;
            let n = g.order();
            let proportions: Vec<Proportion> = match p {
                Some(p) => vec![*p],
                None if *all_p => (1..=n)
                    .map(|k| Proportion::of_order(k, n))
                    .collect::<Result<_, _>>()?,
                None => unreachable!("clap requires --p or --all-p"),
            };
            if *format == Format::Records {
                writeln!(out, "{INFLUENCE_HEADER}")?;
            }
            let mut common = g.vertices();
            for p in proportions {
                let set = influencing_set(&g, p);
                common = common.intersection(set);
                match format {
                    Format::Records => writeln!(out, "influence\t{p}\t{}", set_field(set))?,
                    _ => writeln!(out, "p = {p}: {set}")?,
                }
            }
            if *all_p {
                match format {
                    Format::Records => writeln!(out, "intersection\t-\t{}", set_field(common))?,
                    _ => writeln!(out, "intersection: {common}")?,
                }
            }
        }
        Command::Enumerate { input, p, format } => {
            no_dot(*format, "enumerate")?;
            let g = input.load()?;
            let family = all_gamma_p_sets(&g, *p);
            match format {
                Format::Records => {
                    writeln!(out, "{ENUMERATE_HEADER}")?;
                    for s in &family.sets {
                        writeln!(out, "{}\t{}", family.size, set_field(*s))?;
                    }
                }
                _ => {
                    writeln!(out, "# gamma_p = {}, sets = {}", family.size, family.len())?;
                    for s in &family.sets {
                        writeln!(out, "{s}")?;
                    }
                }
            }
        }
        Command::Scan {
            max_order,
            p,
            include_disconnected,
            graphs,
            format,
        } => {
            no_dot(*format, "scan")?;
            let summary = match (graphs, max_order) {
                (Some(path), _) => scan_family(
                    read_graph6_family(&read(path)?)?,
                    *p,
                    pdom_core::conjecture::Regime::Supplied,
                )?,
                (None, Some(max)) => scan_enumerated(*max, *p, !include_disconnected)?,
                (None, None) => unreachable!("clap requires --max-order or --graphs"),
            };
            match format {
                Format::Records => {
                    writeln!(out, "{SCAN_HEADER}")?;
                    for r in &summary.failures {
                        writeln!(out, "{}", scan_record(r))?;
                    }
                    writeln!(out, "# {}", summary_line(&summary))?;
                }
                _ => {
                    for r in &summary.failures {
                        let witness = r.witness.unwrap_or(VertexSet::EMPTY);
                        writeln!(
                            out,
                            "FAIL {} x {}: gamma_p = {} < {} * {}, witness {witness}",
                            r.g6_g, r.g6_h, r.gp_product, r.gp_g, r.gp_h
                        )?;
                    }
                    writeln!(out, "{}", summary_line(&summary))?;
                }
            }
            if !summary.failures.is_empty() {
                return Ok(Status::Failures);
            }
        }
        Command::Product { first, second, dot } => {
            let product = first.load()?.cartesian_product(&second.load()?)?;
            if *dot {
                write!(out, "{}", to_dot(&product, VertexSet::EMPTY))?;
            } else {
                writeln!(out, "{}", graph6::encode(&product))?;
            }
        }
    }
    Ok(Status::Ok)
}
