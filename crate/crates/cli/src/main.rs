//! `rookposet`: command-line front end for the rook-placement posets.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rookposet::roots::parse_roots;
use rookposet::{
    build_poset, enumerate_placements, involution_of, kerov_map, leq_placement, predecessors,
    r_matrix, rank_general, rank_orthogonal, render_board, BoardStyle, DotOptions, Error, Kind,
    RookPlacement, Suite,
};

#[derive(Parser, Debug)]
#[command(
    name = "rookposet",
    version,
    about = "Posets of rook placements in the root system A_{n-1}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every placement of R(n) or I(n).
    Enumerate {
        #[command(flatten)]
        common: Common,
    },
    /// Compare two placements under the rank-matrix order.
    Compare {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Immediate predecessors of a placement, with the move that produces each.
    Covers {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Hasse diagram of R(n) or I(n) as DOT (default) or JSON.
    Hasse {
        #[command(flatten)]
        common: Common,
        /// Label nodes with their rank and layer them by rank.
        #[arg(long)]
        ranks: bool,
    },
    /// Kerov image K(D) in I(2n-2) and its involution.
    Kerov {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Rank of a placement in R(n) or I(n).
    Rank {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Run a verification suite against the brute-force oracles.
    Verify {
        #[command(flatten)]
        common: Common,
        /// covers-general, covers-orthogonal, kerov, graded, bruhat, counts, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest ambient size to check (overrides the suite default).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Draw a placement on the chessboard.
    Render {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        /// Draw rooks as ⊗ instead of X.
        #[arg(long)]
        unicode: bool,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Ambient size n of A_{n-1}.
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// general (R(n)) or orthogonal (I(n)).
    #[arg(long, default_value = "general")]
    kind: Kind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn need_n(common: &Common) -> Result<usize, Error> {
    if common.n == 0 {
        return Err(Error::Parse {
            token: "--n".into(),
            reason: "a positive --n is required".into(),
        });
    }
    Ok(common.n)
}

fn placement(text: &str, common: &Common) -> Result<RookPlacement, Error> {
    let d = RookPlacement::parse(text, need_n(common)?)?;
    if common.kind == Kind::Orthogonal {
        d.require_orthogonal()?;
    }
    Ok(d)
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("JSON values serialize") + "\n"
}

fn run(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Enumerate { common } => {
            let list = enumerate_placements(need_n(common)?, common.kind)?;
            Ok(Outcome::ok(match common.format {
                Format::Json => pretty(json!(list)),
                _ => {
                    let mut out = format!(
                        "# {} {}: {} placements\n",
                        common.kind,
                        common.n,
                        list.len()
                    );
                    for d in &list {
                        out.push_str(&format!("{d}\n"));
                    }
                    out
                }
            }))
        }
        Command::Compare { common, a, b } => {
            let (a, b) = (placement(a, common)?, placement(b, common)?);
            let (ab, ba) = (leq_placement(&a, &b)?, leq_placement(&b, &a)?);
            let verdict = match (ab, ba) {
                (true, true) => "a = b",
                (true, false) => "a ≤ b",
                (false, true) => "a ≥ b",
                (false, false) => "a, b incomparable",
            };
            let (ra, rb) = (r_matrix(&a), r_matrix(&b));
            Ok(Outcome::ok(match common.format {
                Format::Json => pretty(json!({
                    "verdict": verdict, "a_leq_b": ab, "b_leq_a": ba, "r_a": ra, "r_b": rb,
                })),
                _ => format!("{verdict}\nR_a:\n{ra}R_b:\n{rb}"),
            }))
        }
        Command::Covers { common, d } => {
            let d = placement(d, common)?;
            let all = rookposet::moves::moves(&d, common.kind)?;
            let preds = predecessors(&d, common.kind)?;
            Ok(Outcome::ok(match common.format {
                Format::Json => pretty(json!({
                    "placement": d.to_string(),
                    "kind": common.kind,
                    "moves": all,
                    "predecessors": preds.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut out = format!("# {} immediate predecessors of {{{d}}}\n", preds.len());
                    for m in &all {
                        out.push_str(&format!("{m}\n"));
                    }
                    out
                }
            }))
        }
        Command::Hasse { common, ranks } => {
            let poset = build_poset(need_n(common)?, common.kind)?;
            Ok(Outcome::ok(match common.format {
                Format::Json => pretty(poset.to_json()),
                _ => poset.export_dot(&DotOptions {
                    rank_labels: *ranks,
                    rank_layers: *ranks,
                }),
            }))
        }
        Command::Kerov { common, d: text } => {
            let n = need_n(common)?;
            let d = RookPlacement::parse(text, n)?;
            let image = kerov_map(&d)?;
            let w = involution_of(&image)?;
            // Root-by-root image, in the order the roots were given.
            let in_order: Vec<String> = parse_roots(text)?
                .into_iter()
                .map(|r| rookposet::kerov::kerov_root(r).to_string())
                .collect();
            Ok(Outcome::ok(match common.format {
                Format::Json => pretty(json!({
                    "source": d, "image": image, "involution": w,
                })),
                _ => format!("{}\nw = {w}\n", in_order.join(";")),
            }))
        }
        Command::Rank { common, d } => {
            let d = placement(d, common)?;
            let rho = match common.kind {
                Kind::General => rank_general(&d)?,
                Kind::Orthogonal => rank_orthogonal(&d)?,
            };
            Ok(Outcome::ok(format!("{rho}\n")))
        }
        Command::Verify {
            common,
            suite,
            max_n,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let mut reports = Vec::new();
            for s in suites {
                if let Some(m) = *max_n {
                    if m > s.default_max_n() {
                        eprintln!(
                            "warning: --max-n {m} exceeds the default {} for {s}; this may take a long time",
                            s.default_max_n()
                        );
                    }
                }
                reports.push(s.run(*max_n)?);
            }
            let ok = reports.iter().all(|r| r.passed());
            let text = match common.format {
                Format::Json => pretty(json!(reports)),
                _ => reports.iter().map(|r| format!("{r}\n")).collect(),
            };
            Ok(Outcome { text, ok })
        }
        Command::Render { common, d, unicode } => {
            let d = placement(d, common)?;
            let style = if *unicode {
                BoardStyle::Unicode
            } else {
                BoardStyle::Ascii
            };
            Ok(Outcome::ok(render_board(&d, style)))
        }
    }
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Enumerate { common }
        | Command::Compare { common, .. }
        | Command::Covers { common, .. }
        | Command::Hasse { common, .. }
        | Command::Kerov { common, .. }
        | Command::Rank { common, .. }
        | Command::Verify { common, .. }
        | Command::Render { common, .. } => common,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &common(&cli.command).out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.text),
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
