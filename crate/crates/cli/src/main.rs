//! `relfree`: exact computations with automorphisms of free abelian groups
//! and with words in free metabelian groups. Every subcommand prints a human
//! summary by default and machine-readable JSON with `--json`.
//!
//! Exit codes: 0 on success, 1 on bad input, 2 when a computed check that is
//! expected to pass comes out false.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use relfree::grpext::{eval_in_wreath, lcs_witness};
use relfree::intlinalg::{smith_normal_form, IntMatrix};
use relfree::lift::lift_matrix;
use relfree::metabelian::{magnus, FailingCoordinate, VerbalVerdict};
use relfree::spectra::{commutator_lattice_index, is_quasi_unipotent, spectrum_free_automorphism};
use relfree::words::{parse_word, Word};

use relfree_cli::report::{ReportParams, SkeletonReport};

#[derive(Parser)]
#[command(
    name = "relfree",
    version,
    about = "Exact computations with integer matrices, free metabelian groups, and wreath products",
    after_help = "Set RELFREE_WIDTH to change the wrap width of textual output (default 96)."
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form S = U*M*V with unimodular transforms
    Snf(MatrixSource),
    /// Characteristic polynomial det(xI - M)
    Charpoly(MatrixSource),
    /// Test whether some eigenvalue is a root of unity
    QuasiUnipotent(MatrixSource),
    /// Construct a unimodular matrix with no root-of-unity eigenvalue
    SpecfreeAuto {
        /// matrix size, at least 2
        #[arg(long)]
        n: usize,
    },
    /// Index of the sublattice m(M^k - I)Z^n in Z^n
    CommutatorIndex {
        /// use the built-in spectrum-free matrix of this size
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        source: OptionalMatrixSource,
        /// scale factor of the sublattice
        #[arg(long)]
        m: i64,
        /// power of the matrix
        #[arg(long)]
        k: i64,
    },
    /// Parse a word, freely reduce it, and abelianize it
    Word {
        /// number of generators
        #[arg(long)]
        rank: usize,
        /// word text, e.g. "[x1,x2]^3 (x1 x2^-1)^2"
        #[arg(long)]
        word: String,
    },
    /// Canonical form and triviality in a free metabelian quotient
    Metabelian {
        /// number of generators
        #[arg(long)]
        rank: usize,
        /// coefficient modulus: 0 for integer coefficients, k >= 2 for mod k
        #[arg(long = "mod", default_value_t = 0)]
        modulus: u64,
        /// word text
        #[arg(long)]
        word: String,
    },
    /// Evaluate in Z_k wr Z or list lower central series witnesses
    Wreath {
        /// exponent of the base group, at least 2
        #[arg(long)]
        base: u64,
        /// emit the lower central series witness of this depth
        #[arg(long, conflicts_with = "word")]
        depth: Option<i64>,
        /// evaluate this rank-2 word under x1 -> lamp, x2 -> shift
        #[arg(long)]
        word: Option<String>,
    },
    /// Lift a unimodular matrix to a free-group substitution
    Lift(MatrixSource),
    /// Run the end-to-end report and verify every section
    Report {
        /// matrix size and word rank, at least 2
        #[arg(long)]
        n: usize,
        /// prime exponent of the wreath base group
        #[arg(long)]
        p: u64,
        /// lower central series depth to certify
        #[arg(long)]
        depth: i64,
        /// largest sublattice scale in the index table
        #[arg(long, default_value_t = 3)]
        m_max: i64,
        /// largest matrix power in the index table
        #[arg(long, default_value_t = 6)]
        k_max: i64,
        /// random words per sampled check
        #[arg(long, default_value_t = 12)]
        samples: usize,
        /// seed of the deterministic sample stream
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MatrixSource {
    /// matrix rows, e.g. "0,-1;1,3" (rows split by ';', entries by ',')
    #[arg(long)]
    matrix: Option<String>,
    /// path of a JSON file holding an array of integer rows
    #[arg(long)]
    matrix_file: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalMatrixSource {
    /// matrix rows, e.g. "0,-1;1,3"
    #[arg(long)]
    matrix: Option<String>,
    /// path of a JSON file holding an array of integer rows
    #[arg(long)]
    matrix_file: Option<PathBuf>,
}

fn load_matrix(text: Option<&String>, file: Option<&PathBuf>) -> Result<IntMatrix, String> {
    if let Some(text) = text {
        return IntMatrix::parse_compact(text).map_err(|e| e.to_string());
    }
    let path = file.expect("argument parser guarantees one source");
    let raw = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: Value = serde_json::from_str(&raw)
        .map_err(|e| format!("invalid JSON in {}: {e}", path.display()))?;
    IntMatrix::from_json(&value).map_err(|e| e.to_string())
}

impl MatrixSource {
    fn load(&self) -> Result<IntMatrix, String> {
        load_matrix(self.matrix.as_ref(), self.matrix_file.as_ref())
    }
}

/// What a subcommand produced: both renderings plus whether every computed
/// check passed (`ok = false` exits with code 2).
struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn plain(json: Value, text: String) -> Output {
        Output {
            json,
            text,
            ok: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let json_mode = cli.json;
    match run(cli.command) {
        Ok(out) => {
            let rendered = if json_mode {
                serde_json::to_string_pretty(&out.json).unwrap()
            } else {
                out.text
            };
            emit(&rendered);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Print to stdout, swallowing broken-pipe errors so `relfree ... | head`
/// exits quietly.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn output_width() -> usize {
    std::env::var("RELFREE_WIDTH")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|w| *w >= 20)
        .unwrap_or(96)
}

fn show_word(w: &Word) -> String {
    if w.is_identity() {
        "1".to_string()
    } else {
        w.to_string()
    }
}

fn verdict_line(v: &VerbalVerdict) -> String {
    match v.failing_coordinate {
        None => "trivial: true".to_string(),
        Some(FailingCoordinate::Abelianization) => {
            "trivial: false (nonzero exponent sum)".to_string()
        }
        Some(FailingCoordinate::Fox(i)) => {
            format!("trivial: false (fox derivative {i} is nonzero)")
        }
    }
}

fn run(command: Command) -> Result<Output, String> {
    match command {
        Command::Snf(source) => {
            let m = source.load()?;
            let d = smith_normal_form(&m);
            let factors: Vec<String> = d
                .invariant_factors()
                .iter()
                .map(|f| f.to_string())
                .collect();
            let text = format!(
                "smith normal form:\n{}\ninvariant factors: [{}]\nrow transform:\n{}\ncolumn transform:\n{}",
                d.s(),
                factors.join(", "),
                d.u(),
                d.v()
            );
            Ok(Output::plain(
                json!({
                    "s": d.s().to_json(),
                    "u": d.u().to_json(),
                    "v": d.v().to_json(),
                    "invariant_factors": factors,
                    "rank": d.rank(),
                }),
                text,
            ))
        }
        Command::Charpoly(source) => {
            let m = source.load()?;
            let p = m.char_poly();
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            Ok(Output::plain(
                json!({ "char_poly": p.to_string(), "coefficients": coeffs }),
                p.to_string(),
            ))
        }
        Command::QuasiUnipotent(source) => {
            let m = source.load()?;
            let report = is_quasi_unipotent(&m);
            let mut text = format!("quasi-unipotent: {}", report.quasi_unipotent);
            if !report.witnesses.is_empty() {
                let orders: Vec<String> = report
                    .witnesses
                    .iter()
                    .map(|(k, _)| k.to_string())
                    .collect();
                text.push_str(&format!("\nroot-of-unity orders: {}", orders.join(", ")));
            }
            Ok(Output::plain(
                json!({ "char_poly": m.char_poly().to_string(), "spectrum": report.to_json() }),
                text,
            ))
        }
        Command::SpecfreeAuto { n } => {
            let m = spectrum_free_automorphism(n).map_err(|e| e.to_string())?;
            let report = is_quasi_unipotent(&m);
            let text = format!(
                "{}\ndeterminant: {}\nchar poly: {}\nquasi-unipotent: {}",
                m,
                m.determinant(),
                m.char_poly(),
                report.quasi_unipotent
            );
            Ok(Output::plain(
                json!({
                    "n": n,
                    "matrix": m.to_json(),
                    "determinant": m.determinant().to_string(),
                    "char_poly": m.char_poly().to_string(),
                    "spectrum": report.to_json(),
                }),
                text,
            ))
        }
        Command::CommutatorIndex { n, source, m, k } => {
            let phi = match (n, &source.matrix, &source.matrix_file) {
                (Some(n), None, None) => {
                    spectrum_free_automorphism(n).map_err(|e| e.to_string())?
                }
                (None, text, file) if text.is_some() || file.is_some() => {
                    load_matrix(text.as_ref(), file.as_ref())?
                }
                _ => return Err("provide exactly one of --n or --matrix/--matrix-file".to_string()),
            };
            let index = commutator_lattice_index(&phi, m, k).map_err(|e| e.to_string())?;
            Ok(Output::plain(
                json!({
                    "matrix": phi.to_json(),
                    "m": m,
                    "k": k,
                    "index": index.to_string(),
                    "finite": index.is_finite(),
                }),
                format!("index: {index}"),
            ))
        }
        Command::Word { rank, word } => {
            let w = parse_word(&word, rank).map_err(|e| e.to_string())?;
            let ab = w.abelianize();
            let text = format!(
                "reduced: {}\nlength: {}\nabelianization: {:?}",
                show_word(&w),
                w.len(),
                ab
            );
            Ok(Output::plain(
                json!({
                    "rank": rank,
                    "reduced": w.to_string(),
                    "length": w.len(),
                    "identity": w.is_identity(),
                    "abelianization": ab,
                }),
                text,
            ))
        }
        Command::Metabelian {
            rank,
            modulus,
            word,
        } => {
            let w = parse_word(&word, rank).map_err(|e| e.to_string())?;
            let el = magnus(&w, modulus).map_err(|e| e.to_string())?;
            let verdict = el.verdict();
            let mut text = format!("exponent vector: {:?}\nfox derivatives:", el.ab());
            for (i, f) in el.fox().iter().enumerate() {
                text.push_str(&format!("\n  d{}: {}", i + 1, f));
            }
            text.push('\n');
            text.push_str(&verdict_line(&verdict));
            Ok(Output::plain(
                json!({ "element": el.to_json(), "verdict": verdict.to_json() }),
                text,
            ))
        }
        Command::Wreath { base, depth, word } => match (depth, word) {
            (Some(depth), None) => {
                let w = lcs_witness(base, depth).map_err(|e| e.to_string())?;
                Ok(Output::plain(
                    json!({ "depth": depth, "element": w.to_json() }),
                    format!("depth {depth}: {w}"),
                ))
            }
            (None, Some(word)) => {
                let parsed = parse_word(&word, 2).map_err(|e| e.to_string())?;
                let el = eval_in_wreath(&parsed, base).map_err(|e| e.to_string())?;
                Ok(Output::plain(
                    json!({ "word": parsed.to_string(), "element": el.to_json(), "identity": el.is_identity() }),
                    format!("{el}\nidentity: {}", el.is_identity()),
                ))
            }
            _ => Err("provide exactly one of --depth or --word".to_string()),
        },
        Command::Lift(source) => {
            let m = source.load()?;
            let lifted = lift_matrix(&m).map_err(|e| e.to_string())?;
            let lines: Vec<String> = lifted
                .images()
                .iter()
                .enumerate()
                .map(|(i, img)| format!("x{} -> {}", i + 1, show_word(img)))
                .collect();
            Ok(Output::plain(
                json!({ "matrix": m.to_json(), "images": lifted.to_json() }),
                lines.join("\n"),
            ))
        }
        Command::Report {
            n,
            p,
            depth,
            m_max,
            k_max,
            samples,
            seed,
        } => {
            let params = ReportParams {
                n,
                p,
                depth,
                m_max,
                k_max,
                samples,
                seed,
            };
            let report = SkeletonReport::build(&params)?;
            Ok(Output {
                json: report.to_json(),
                text: report.render(output_width()),
                ok: report.pass,
            })
        }
    }
}
