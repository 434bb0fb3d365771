//! `signed-bounds` command-line tool.
//!
//! Exit codes: 0 success, 1 property violated or homomorphism absent
//! (or undecided within the node budget), 2 usage or input errors.

mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use signed_bounds::format::{
    parse_sg, to_dot, write_graph, write_hom_witness, write_packing, write_sg,
};
use signed_bounds::{
    find_graph_hom, find_signed_hom, find_signed_hom_to, is_clique, max_clique, odd_girth,
    packing_to_spc, refined_odd_power, signed_bipartite_power, unbalanced_girth, walk_power, Case,
    CubeSpec, Error, SearchOutcome, SearchResult, SignedGraph, SignedTarget,
};

#[derive(Parser)]
#[command(
    name = "signed-bounds",
    version,
    about = "Planar odd-girth and signed bipartite bound constructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    Odd,
    Bipartite,
}

impl From<CaseArg> for Case {
    fn from(c: CaseArg) -> Case {
        match c {
            CaseArg::Odd => Case::Odd,
            CaseArg::Bipartite => Case::Signed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the extremal planar construction and its certificate.
    Construct {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        k: usize,
        /// Number of steps (default 2k-1, the full construction).
        #[arg(long)]
        steps: Option<usize>,
        /// Write the graph here and the certificate to `<out>.cert`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Walk-power (--k), refined odd power (--k --refined) or signed
    /// bipartite power (--signed --r).
    Power {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, conflicts_with_all = ["r", "signed"], required_unless_present = "r")]
        k: Option<usize>,
        #[arg(long, requires = "signed")]
        r: Option<usize>,
        #[arg(long, requires = "r")]
        signed: bool,
        #[arg(long, requires = "k")]
        refined: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild a construction and check every claim about it.
    VerifyPaper {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Odd girth of the underlying graph and unbalanced girth.
    Girth {
        #[arg(long)]
        input: PathBuf,
    },
    /// Maximum clique, or check that a vertex set is a clique.
    Clique {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated vertex list to check instead of searching.
        #[arg(long, value_delimiter = ',')]
        verify: Option<Vec<usize>>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Generate a projective cube: pc:<d> or spc:<d>.
    Cube {
        spec: CubeSpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a homomorphism. TARGET is a file, pc:<d> or spc:<d>.
    Hom {
        source: PathBuf,
        target: String,
        /// Decide maps to spc:<d> through the edge-packing characterisation.
        #[arg(long)]
        packing: bool,
        /// Ignore signs and search for a plain graph homomorphism.
        #[arg(long)]
        plain: bool,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the witness here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a graph file to another format.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, required = true)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure with its exit code.
struct Exit {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit {
        code: 2,
        msg: msg.into(),
    }
}

fn failed(msg: impl Into<String>) -> Exit {
    Exit {
        code: 1,
        msg: msg.into(),
    }
}

/// Parameter and input errors are usage errors; anything else means a
/// checked property did not hold.
fn classify(e: Error) -> Exit {
    match e {
        Error::InvalidParameter(_) | Error::Parse { .. } | Error::InfeasibleLengths(_) => {
            usage(e.to_string())
        }
        _ => failed(e.to_string()),
    }
}

type CmdResult = Result<(), Exit>;

fn read_signed(path: &Path) -> Result<SignedGraph, Exit> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_sg(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> CmdResult {
    match out {
        Some(p) => {
            fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_construct(case: CaseArg, k: usize, steps: Option<usize>, out: Option<PathBuf>) -> CmdResult {
    if k < 2 {
        return Err(usage(format!("k must be >= 2, got {k}")));
    }
    let steps = steps.unwrap_or(2 * k - 1);
    let state = match case {
        CaseArg::Odd => signed_bounds::odd_construction(k, steps),
        CaseArg::Bipartite => signed_bounds::signed_construction(k, steps),
    }
    .map_err(classify)?;
    let cert = state.certificate();
    match out {
        Some(path) => {
            emit(Some(&path), &write_sg(state.host()))?;
            let mut sidecar = path.into_os_string();
            sidecar.push(".cert");
            emit(Some(Path::new(&sidecar)), &cert)
        }
        None => {
            let commented: String = cert.lines().map(|l| format!("# {l}\n")).collect();
            emit(None, &format!("{commented}{}", write_sg(state.host())))
        }
    }
}

fn cmd_power(
    input: &Path,
    k: Option<usize>,
    r: Option<usize>,
    refined: bool,
    out: Option<PathBuf>,
) -> CmdResult {
    let sg = read_signed(input)?;
    let power = match (k, r) {
        (Some(k), _) if refined => refined_odd_power(sg.graph(), k),
        (Some(k), _) => walk_power(sg.graph(), k),
        (None, Some(r)) => signed_bipartite_power(&sg, r),
        (None, None) => return Err(usage("one of --k or --r is required")),
    };
    let power = power.map_err(|e| match e {
        Error::GirthPrecondition { .. } | Error::NotBipartite => failed(e.to_string()),
        e => classify(e),
    })?;
    emit(out.as_deref(), &write_graph(&power))
}

fn cmd_girth(input: &Path) -> CmdResult {
    let sg = read_signed(input)?;
    println!("odd girth {}", odd_girth(sg.graph()));
    println!("unbalanced girth {}", unbalanced_girth(&sg));
    Ok(())
}

fn cmd_clique(input: &Path, verify: Option<Vec<usize>>, budget: Option<u64>) -> CmdResult {
    let g = read_signed(input)?.into_graph();
    match verify {
        Some(set) => {
            if let Some(&v) = set.iter().find(|&&v| v >= g.vertex_count()) {
                return Err(usage(format!("vertex {v} out of range")));
            }
            if is_clique(&g, &set) {
                println!("clique of size {}", set.len());
                Ok(())
            } else {
                let (u, v) = signed_bounds::clique::missing_pair(&g, &set).expect("not a clique");
                Err(failed(format!(
                    "not a clique: {u} and {v} are not adjacent"
                )))
            }
        }
        None => {
            let found = max_clique(&g, budget);
            print!("{}", found.certificate);
            println!("nodes {}", found.nodes);
            Ok(())
        }
    }
}

fn cmd_cube(spec: CubeSpec, out: Option<PathBuf>) -> CmdResult {
    let sg = spec.build().map_err(classify)?;
    emit(out.as_deref(), &write_sg(&sg))
}

fn report<T>(
    result: SearchResult<T>,
    render: impl FnOnce(&T) -> String,
    out: Option<PathBuf>,
) -> CmdResult {
    match result.outcome {
        SearchOutcome::Found(w) => {
            emit(out.as_deref(), &render(&w))?;
            eprintln!("found after {} nodes", result.nodes);
            Ok(())
        }
        SearchOutcome::Absent => Err(failed(format!(
            "no homomorphism exists (search complete after {} nodes)",
            result.nodes
        ))),
        SearchOutcome::Unknown => Err(failed(format!(
            "unknown: node budget exhausted after {} nodes",
            result.nodes
        ))),
    }
}

fn cmd_hom(
    source: &Path,
    target: &str,
    packing: bool,
    plain: bool,
    budget: Option<u64>,
    out: Option<PathBuf>,
) -> CmdResult {
    let sg = read_signed(source)?;
    let cube: Option<CubeSpec> = target
        .contains(':')
        .then(|| target.parse())
        .transpose()
        .map_err(classify)?;
    if packing {
        let spec = cube
            .filter(|c| c.signed)
            .ok_or_else(|| usage("--packing needs an spc:<d> target"))?;
        let result = packing_to_spc(&sg, spec.dimension, budget).map_err(|e| match e {
            Error::Inconsistent => usage("--packing needs a consistent signed graph"),
            e => classify(e),
        })?;
        return report(result, write_packing, out);
    }
    match cube {
        Some(spec) if !spec.signed || plain => {
            let h = if spec.signed {
                spec.build().map_err(classify)?.into_graph()
            } else {
                signed_bounds::projective_cube(spec.dimension).map_err(classify)?
            };
            report(
                find_graph_hom(sg.graph(), &h, budget),
                write_hom_witness,
                out,
            )
        }
        Some(spec) => {
            let t = SignedTarget::projective_cube(spec.dimension).map_err(classify)?;
            report(find_signed_hom_to(&sg, &t, budget), write_hom_witness, out)
        }
        None => {
            let sh = read_signed(Path::new(target))?;
            let result = if plain {
                find_graph_hom(sg.graph(), sh.graph(), budget)
            } else {
                find_signed_hom(&sg, &sh, budget)
            };
            report(result, write_hom_witness, out)
        }
    }
}

fn cmd_export(input: &Path, out: Option<PathBuf>) -> CmdResult {
    let sg = read_signed(input)?;
    emit(out.as_deref(), &to_dot(&sg))
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Construct {
            case,
            k,
            steps,
            out,
        } => cmd_construct(case, k, steps, out),
        Command::Power {
            input,
            k,
            r,
            signed: _,
            refined,
            out,
        } => cmd_power(&input, k, r, refined, out),
        Command::VerifyPaper { case, k, json } => verify::run(case.into(), k, json),
        Command::Girth { input } => cmd_girth(&input),
        Command::Clique {
            input,
            verify,
            budget,
        } => cmd_clique(&input, verify, budget),
        Command::Cube { spec, out } => cmd_cube(spec, out),
        Command::Hom {
            source,
            target,
            packing,
            plain,
            budget,
            out,
        } => cmd_hom(&source, &target, packing, plain, budget, out),
        Command::Export { input, dot: _, out } => cmd_export(&input, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit { code, msg }) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_valid() {
        Cli::command().debug_assert();
    }
}
