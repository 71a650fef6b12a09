use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use assoc_core::export::{OutputDocument, PolytopeKind};
use assoc_core::verify::{all_passed, verify_with, Perturbation, VerifyOptions};
use assoc_core::{
    barycenter, enumerate_symmetric_triangulations, enumerate_triangulations, hl_vertex,
    orbit_partition, Orientation,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Vertex sets, dihedral orbits and exact centroids of permutahedra,
/// associahedra and cyclohedra.
#[derive(Parser, Debug)]
#[command(name = "assoc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List triangulations of the (N+2)-gon, one diagonal list per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only centrally symmetric triangulations (N must be even).
        #[arg(long)]
        symmetric: bool,
    },
    /// Print vertex coordinates, one per line.
    Vertices(Selection),
    /// Orbit decomposition under the dihedral group.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        up: String,
    },
    /// Exact centroid as p/q per coordinate.
    Barycenter(Selection),
    /// Run the exhaustive identity checks; exit 1 if any fails.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Print reports as JSON lines.
        #[arg(long)]
        json: bool,
        /// Add 1 to one coordinate: N:TRIANGULATION:COORDINATE (zero-based
        /// indices).
        #[arg(long, value_name = "N:T:C")]
        inject_fault: Option<String>,
    },
    /// Write a JSON or CSV document.
    Export {
        #[command(flatten)]
        selection: Selection,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        /// Include the orbit decomposition (JSON only).
        #[arg(long)]
        orbits: bool,
    },
}

#[derive(Args, Debug)]
struct Selection {
    /// Ambient dimension; the polygon has N+2 vertices.
    #[arg(long)]
    n: usize,
    /// Comma separated up-set, e.g. 2,4. Empty means canonical.
    #[arg(long, default_value = "")]
    up: String,
    #[arg(long = "type", value_enum, default_value_t = Family::A)]
    family: Family,
    #[arg(long, value_enum, default_value_t = Shape::Associahedron)]
    kind: Shape,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    A,
    B,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// Associahedron (type a) or cyclohedron (type b).
    Associahedron,
    Permutahedron,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Verification,
    Io(String),
    ClosedPipe,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::ClosedPipe
        } else {
            Failure::Io(e.to_string())
        }
    }
}

impl From<assoc_core::Error> for Failure {
    fn from(e: assoc_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = BufWriter::new(io::stdout().lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush().map_err(Failure::from);
    match result.and(flushed) {
        Ok(()) | Err(Failure::ClosedPipe) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate { n, symmetric } => {
            let ts = if symmetric {
                if n % 2 == 1 {
                    return Err(Failure::Usage(format!(
                        "--symmetric needs an even n, got {n}"
                    )));
                }
                enumerate_symmetric_triangulations(n / 2)?
            } else {
                enumerate_triangulations(n)?
            };
            for t in ts {
                writeln!(out, "{t}")?;
            }
        }
        Command::Vertices(sel) => {
            for v in document(&sel, false)?.points() {
                writeln!(out, "{v}")?;
            }
        }
        Command::Barycenter(sel) => {
            writeln!(out, "{}", document(&sel, false)?.centroid.join(" "))?;
        }
        Command::Orbits { n, up } => {
            let o = Orientation::parse(n, &up)?;
            let ts = enumerate_triangulations(n)?;
            let orbits = orbit_partition(&ts)?;
            writeln!(out, "# n={n} up={{{o}}} orbits={}", orbits.len())?;
            for orbit in orbits {
                let points = orbit
                    .members
                    .iter()
                    .map(|t| hl_vertex(&o, t))
                    .collect::<assoc_core::Result<Vec<_>>>()?;
                writeln!(
                    out,
                    "orbit {} size={} stabilizer={} centroid={}",
                    orbit.representative(),
                    orbit.len(),
                    orbit.stabilizer_order,
                    barycenter(&points)?
                )?;
                for (t, p) in orbit.members.iter().zip(&points) {
                    writeln!(out, "  {t} {p}")?;
                }
            }
        }
        Command::Verify {
            max_n,
            jobs,
            json,
            inject_fault,
        } => {
            let perturbation = inject_fault.as_deref().map(parse_fault).transpose()?;
            let opts = VerifyOptions {
                max_n,
                jobs,
                perturbation,
            };
            let reports = verify_with(&opts)?;
            for r in &reports {
                if json {
                    let line = serde_json::to_string(r).map_err(|e| Failure::Io(e.to_string()))?;
                    writeln!(out, "{line}")?;
                } else {
                    writeln!(out, "{r}")?;
                }
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            eprintln!("{} checks, {failed} failed", reports.len());
            if !all_passed(&reports) {
                return Err(Failure::Verification);
            }
        }
        Command::Export {
            selection,
            format,
            out: path,
            orbits,
        } => {
            if orbits && format == Format::Csv {
                return Err(Failure::Usage("--orbits needs --format json".to_string()));
            }
            let doc = document(&selection, orbits)?;
            let body = match format {
                Format::Json => doc.to_json()?,
                Format::Csv => doc.to_csv()?,
            };
            fs::write(&path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(())
}

/// Maps the CLI selection to a document. For type b, `--n` is the ambient
/// dimension `2r` and the document carries the rank `r`.
fn document(sel: &Selection, with_orbits: bool) -> Result<OutputDocument, Failure> {
    let orientation = Orientation::parse(sel.n, &sel.up)?;
    let up: Vec<usize> = orientation.up_set().iter().copied().collect();
    let (kind, rank) = match sel.family {
        Family::A => {
            let kind = match sel.kind {
                Shape::Associahedron => PolytopeKind::Associahedron,
                Shape::Permutahedron => PolytopeKind::PermutahedronA,
            };
            (kind, sel.n)
        }
        Family::B => {
            if sel.n % 2 == 1 {
                return Err(Failure::Usage(format!(
                    "--type b needs an even n, got {}",
                    sel.n
                )));
            }
            let kind = match sel.kind {
                Shape::Associahedron => PolytopeKind::Cyclohedron,
                Shape::Permutahedron => PolytopeKind::PermutahedronB,
            };
            (kind, sel.n / 2)
        }
    };
    Ok(OutputDocument::build(kind, rank, &up, with_orbits)?)
}

fn parse_fault(s: &str) -> Result<Perturbation, Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    let nums = parts
        .iter()
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>();
    match (parts.len(), nums) {
        (3, Ok(v)) => Ok(Perturbation {
            n: v[0],
            triangulation: v[1],
            coordinate: v[2],
        }),
        _ => Err(Failure::Usage(format!(
            "--inject-fault expects N:T:C, got '{s}'"
        ))),
    }
}
