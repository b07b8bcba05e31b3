use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use toric_rigidity::certificate::{auto_certify_monotone, hf_lower_bound_tr, verify};
use toric_rigidity::floer::hf_detailed;
use toric_rigidity::io::corpus::{self, CorpusSource};
use toric_rigidity::io::report::{corpus_table, polytope_info};
use toric_rigidity::io::{parse_point, parse_slice_spec, render_svg, CertificateDocument, DocumentError, PolytopeDocument, SliceDocument, Style};
use toric_rigidity::polytope::{product, Polytope};
use toric_rigidity::probes::probe_scan;
use toric_rigidity::reduction::{reduce, AffineReduction};

#[derive(Parser)]
#[command(name = "toric-rigidity", version, about = "Floer numbers, reductions and intersection certificates for toric moment polytopes")]
struct Cli {
    /// Colorize terminal output.
    #[arg(long, value_enum, default_value_t = Color::Auto, global = true)]
    color: Color,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Color {
    Auto,
    Always,
    Never,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, facets, vertices, flags and equidistant point.
    Info { polytope: PathBuf },
    /// The combinatorial Floer number HF(P).
    Hf {
        polytope: PathBuf,
        /// Also print the real-part intersection bound with its caveat.
        #[arg(long)]
        tr_bound: bool,
    },
    /// Cartesian product of two polytopes.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Reduce along an affine slice `A;…@x0` or a slice file.
    Reduce {
        ambient: PathBuf,
        #[arg(long)]
        slice: String,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Verify a certificate. Exit 0 on success, 1 if verification fails, 2 on malformed input.
    Certify { certificate: PathBuf },
    /// Certificate for the centered fiber of a monotone Delzant polytope.
    AutoCertify {
        polytope: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Search for a probe displacing the fiber over a point.
    Probe {
        polytope: PathBuf,
        /// Comma-separated rationals, e.g. `-1/2,0`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Largest |wᵢ| for probe directions.
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// SVG picture of a 2-dimensional polytope.
    Render {
        polytope: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// The bundled corpus of worked examples.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Run every golden case and print expected against computed values.
    Run {
        /// Read the corpus from a directory instead of the built-in copy.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// List the built-in corpus files.
    List,
}

/// Input that could not be parsed or does not describe a valid object.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Malformed(String);

/// Reads a file, falling back to the built-in corpus by file name.
fn read_input(path: &Path) -> Result<String> {
    match std::fs::read_to_string(path) {
        Ok(text) => Ok(text),
        Err(e) => {
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
            corpus::embedded(name)
                .map(str::to_string)
                .ok_or_else(|| Malformed(format!("{}: {e}", path.display())).into())
        }
    }
}

fn malformed(path: &Path, e: DocumentError) -> anyhow::Error {
    Malformed(format!("{}:{e}", path.display())).into()
}

fn load_polytope(path: &Path) -> Result<(PolytopeDocument, Polytope)> {
    let doc = PolytopeDocument::from_json(&read_input(path)?).map_err(|e| malformed(path, e))?;
    let p = doc.to_polytope().map_err(|e| malformed(path, e))?;
    Ok((doc, p))
}

fn load_slice(spec: &str) -> Result<AffineReduction> {
    let path = Path::new(spec);
    if spec.ends_with(".json") || path.exists() {
        let doc = SliceDocument::from_json(&read_input(path)?).map_err(|e| malformed(path, e))?;
        return doc.to_slice().map_err(|e| malformed(path, e));
    }
    parse_slice_spec(spec).map_err(|e| Malformed(format!("--slice: {e}")).into())
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn display_name(doc: &PolytopeDocument, path: &Path) -> String {
    if doc.name.is_empty() {
        path.file_stem().and_then(|s| s.to_str()).unwrap_or("polytope").to_string()
    } else {
        doc.name.clone()
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let style = Style {
        color: match cli.color {
            Color::Always => true,
            Color::Never => false,
            Color::Auto => std::io::stdout().is_terminal(),
        },
    };
    match cli.command {
        Command::Info { polytope } => {
            let (doc, p) = load_polytope(&polytope)?;
            print!("{}", polytope_info(&display_name(&doc, &polytope), &p, style));
            if let Some(c) = &doc.citation {
                println!("note: {c}");
            }
        }
        Command::Hf { polytope, tr_bound } => {
            let (_, p) = load_polytope(&polytope)?;
            let r = hf_detailed(&p)?;
            println!("{}", r.value);
            if let Some(sq) = r.square {
                println!("d = {} is odd; via P×P: nullity {}, rank {}", p.facet_count(), sq.nullity, sq.rank);
            }
            if tr_bound {
                let b = hf_lower_bound_tr(&p)?;
                println!("♯(ψ(R_P) ⋔ T_P) ≥ {}", b.bound);
                println!("caveat: {}", b.caveat);
            }
        }
        Command::Product { first, second, o } => {
            let (d1, p1) = load_polytope(&first)?;
            let (d2, p2) = load_polytope(&second)?;
            let name = format!("{} × {}", display_name(&d1, &first), display_name(&d2, &second));
            emit(o.as_deref(), &PolytopeDocument::from_polytope(&name, &product(&p1, &p2)).to_json())?;
        }
        Command::Reduce { ambient, slice, o } => {
            let (doc, p) = load_polytope(&ambient)?;
            let s = load_slice(&slice)?;
            let reduced = reduce(&p, &s)?;
            let name = format!("{} reduced along {s}", display_name(&doc, &ambient));
            emit(o.as_deref(), &PolytopeDocument::from_polytope(&name, &reduced).to_json())?;
        }
        Command::Certify { certificate } => {
            let doc = CertificateDocument::from_json(&read_input(&certificate)?).map_err(|e| malformed(&certificate, e))?;
            let cert = doc.to_certificate().map_err(|e| malformed(&certificate, e))?;
            if !doc.name.is_empty() {
                println!("{}", style.bold(&doc.name));
            }
            if let Some(c) = &doc.citation {
                println!("note: {c}");
            }
            match verify(&cert) {
                Ok(claim) => {
                    print!("{claim}");
                    println!("{} bound {}", style.good("verified:"), claim.bound);
                }
                Err(e) => {
                    println!("{} {e}", style.bad("verification failed:"));
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::AutoCertify { polytope, o } => {
            let (doc, p) = load_polytope(&polytope)?;
            let cert = auto_certify_monotone(&p)?;
            let claim = verify(&cert)?;
            let mut out = CertificateDocument::from_certificate(&display_name(&doc, &polytope), &cert);
            out.citation = Some(format!("centered reduction of a weighted projective space; TT bound {}", claim.bound));
            emit(o.as_deref(), &out.to_json())?;
        }
        Command::Probe { polytope, point, bound } => {
            let (_, p) = load_polytope(&polytope)?;
            let u = parse_point(&point).map_err(|e| Malformed(format!("--point: {e}")))?;
            if u.len() != p.dim() {
                bail!(Malformed(format!("--point has {} coordinates, polytope has dimension {}", u.len(), p.dim())));
            }
            if !p.contains_in_interior(&u) {
                bail!(Malformed(format!("--point ({point}) is not in the interior")));
            }
            match probe_scan(&p, &u, bound) {
                Some(hit) => println!("{} {hit}", style.bad("displaceable:")),
                None => println!("{} no probe with directions in [−{bound}, {bound}]ⁿ displaces ({point})", style.good("not displaced:")),
            }
        }
        Command::Render { polytope, o } => {
            let (doc, p) = load_polytope(&polytope)?;
            let marked = doc.marked_points().map_err(|e| malformed(&polytope, e))?;
            let svg = render_svg(&p, &display_name(&doc, &polytope), &marked).map_err(|e| Malformed(e.to_string()))?;
            emit(o.as_deref(), &svg)?;
        }
        Command::Corpus { action } => match action {
            CorpusAction::Run { dir } => {
                let source = match &dir {
                    Some(d) => CorpusSource::Directory(d),
                    None => CorpusSource::Embedded,
                };
                let report = corpus::run_corpus(&source).map_err(Malformed)?;
                print!("{}", corpus_table(&report, style.color));
                if !report.all_pass() {
                    return Ok(ExitCode::from(1));
                }
            }
            CorpusAction::List => {
                for (kind, files) in corpus::inventory() {
                    println!("{kind}:");
                    for f in files {
                        println!("  {f}");
                    }
                }
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Malformed>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
