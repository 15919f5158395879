//! `legkit`: command-line access to the front evaluators.

mod error;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use legendrian_core::front::{random_moves, ComponentMap, FrontFile, Move, StabilizeFlavor};
use legendrian_core::legskein::{LegSkein, LegSkeinOptions};
use legendrian_core::rulings::{enumerate_oriented_rulings, enumerate_rulings, oriented_ruling_polynomial, ruling_polynomial};
use legendrian_core::toposkein::{b_of, homfly_h, homfly_p, kauffman_d, kauffman_f, q_of};
use legendrian_core::{OrientedFront, PlanarDiagram};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use error::CliError;
use report::{verify_front, Check, VerificationReport};

/// Diagrams above this many crossings need `--force`.
const CROSSING_LIMIT: usize = 14;

#[derive(Parser)]
#[command(name = "legkit", version, about = "Ruling polynomials and skein invariants of Legendrian fronts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a .front file parses and closes up.
    Validate { path: PathBuf },
    /// Print c, cr, w, beta and r as JSON.
    Invariants {
        path: PathBuf,
        #[command(flatten)]
        orient: OrientArg,
    },
    /// Count rulings and print the ruling polynomial.
    Rulings {
        path: PathBuf,
        /// Only rulings whose switches are positive crossings.
        #[arg(long)]
        oriented: bool,
        /// Also print every ruling's switch set.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        orient: OrientArg,
        #[arg(long)]
        force: bool,
    },
    /// Evaluate one polynomial.
    Poly {
        path: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        /// Print the Dubrovnik D or regular-isotopy H instead of F or P.
        #[arg(long)]
        regular: bool,
        /// Dump the legskein reduction trace to stderr as JSON lines.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        orient: OrientArg,
        #[arg(long)]
        force: bool,
    },
    /// Cross-check the evaluators on every .front file of a directory.
    Verify {
        dir: PathBuf,
        #[arg(long, value_enum, default_value = "3.1")]
        theorem: Check,
        #[arg(long)]
        json: bool,
        /// Add per-front wall-clock times (output is then not reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        force: bool,
    },
    /// Apply Legendrian moves and print the resulting front.
    Moves {
        path: PathBuf,
        /// A move as rule@site, e.g. commute@2 or type2-insert:above@0.
        #[arg(long, conflicts_with_all = ["random", "list"])]
        apply: Option<Move>,
        /// Apply this many randomly drawn moves.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// List the applicable moves instead.
        #[arg(long)]
        list: bool,
    },
    /// Insert a zig-zag on a strand segment.
    Stabilize {
        path: PathBuf,
        /// Segment as slice:position, both counted as in the word; slice k
        /// sits after the first k letters.
        #[arg(long, value_parser = parse_site)]
        site: Option<(usize, usize)>,
        #[arg(long, value_enum, default_value = "up")]
        flavor: Flavor,
    },
}

#[derive(clap::Args)]
struct OrientArg {
    /// Per-component orientation, e.g. 1=+,2=-; overrides the file header.
    #[arg(long)]
    orient: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Ruling,
    Oruling,
    #[value(name = "B-leg")]
    BLeg,
    #[value(name = "B-topo")]
    BTopo,
    #[value(name = "Q")]
    Q,
    Kauffman,
    Homfly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Flavor {
    Up,
    Down,
}

fn parse_site(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected slice:position, got {s:?}"))?;
    let slice = a.trim().parse().map_err(|e| format!("bad slice: {e}"))?;
    let position = b.trim().parse().map_err(|e| format!("bad position: {e}"))?;
    Ok((slice, position))
}

fn load(path: &Path, orient: Option<&OrientArg>) -> Result<FrontFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let mut file = FrontFile::parse(&text).map_err(|e| CliError::front(path.to_path_buf(), &text, e))?;
    if let Some(spec) = orient.and_then(|o| o.orient.as_deref()) {
        let header = format!("orient: {spec}\n{}", file.word);
        file = FrontFile::parse(&header).map_err(|e| CliError::front(path.to_path_buf(), &header, e))?;
    }
    Ok(file)
}

fn oriented(file: &FrontFile) -> OrientedFront {
    OrientedFront::new(&file.word, &file.reversed)
}

fn size_check(path: &Path, file: &FrontFile, force: bool) -> Result<(), CliError> {
    let crossings = file.word.crossing_count();
    if crossings > CROSSING_LIMIT && !force {
        return Err(CliError::TooLarge { path: path.to_path_buf(), crossings, limit: CROSSING_LIMIT });
    }
    Ok(())
}

fn json_line(value: serde_json::Value) -> String {
    serde_json::to_string(&value).expect("json values serialize") + "\n"
}

/// Text printed on success and the exit code.
fn run(cli: Cli) -> Result<(String, ExitCode), CliError> {
    let ok = |s: String| Ok((s, ExitCode::SUCCESS));
    match cli.command {
        Command::Validate { path } => {
            let file = load(&path, None)?;
            let w = &file.word;
            ok(format!(
                "ok: {} letters, {} left cusps, {} crossings, {} components\n",
                w.len(),
                w.left_cusps(),
                w.crossing_count(),
                ComponentMap::of(w).count()
            ))
        }
        Command::Invariants { path, orient } => {
            let file = load(&path, Some(&orient))?;
            let inv = oriented(&file).invariants();
            ok(json_line(json!({
                "schema": 1, "c": inv.c, "cr": inv.cr, "w": inv.w, "beta": inv.beta, "r": inv.r,
            })))
        }
        Command::Rulings { path, oriented: want_oriented, list, json, orient, force } => {
            let file = load(&path, Some(&orient))?;
            size_check(&path, &file, force)?;
            let (rulings, poly) = if want_oriented {
                let of = oriented(&file);
                (enumerate_oriented_rulings(&of), oriented_ruling_polynomial(&of))
            } else {
                (enumerate_rulings(&file.word), ruling_polynomial(&file.word))
            };
            if json {
                let mut v = json!({ "schema": 1, "count": rulings.len(), "polynomial": poly });
                if list {
                    v["rulings"] = json!(rulings);
                }
                return ok(json_line(v));
            }
            let mut out = String::new();
            if list {
                for r in &rulings {
                    let s: Vec<String> = r.switches().iter().map(usize::to_string).collect();
                    out.push_str(&format!("{{{}}}\n", s.join(", ")));
                }
            }
            out.push_str(&format!("{} rulings\n{poly}\n", rulings.len()));
            ok(out)
        }
        Command::Poly { path, which, regular, trace, json, orient, force } => {
            let file = load(&path, Some(&orient))?;
            size_check(&path, &file, force)?;
            let w = &file.word;
            let of = oriented(&file);
            let text = match which {
                Which::Ruling => ruling_polynomial(w).to_string(),
                Which::Oruling => oriented_ruling_polynomial(&of).to_string(),
                Which::BLeg => {
                    let mut ev = LegSkein::new(LegSkeinOptions { trace, ..LegSkeinOptions::from_env() });
                    let value = ev.evaluate(w);
                    if trace {
                        eprint!("{}", ev.trace().to_json_lines());
                    }
                    value?.to_string()
                }
                Which::BTopo => b_of(w)?.to_string(),
                Which::Q => q_of(&of)?.to_string(),
                Which::Kauffman if regular => kauffman_d(&PlanarDiagram::from_front(&of))?.to_string(),
                Which::Kauffman => kauffman_f(&of)?.to_string(),
                Which::Homfly if regular => homfly_h(&PlanarDiagram::from_front(&of))?.to_string(),
                Which::Homfly => homfly_p(&of)?.to_string(),
            };
            if json {
                let name = which.to_possible_value().expect("no skipped variants").get_name().to_string();
                return ok(json_line(json!({ "schema": 1, "which": name, "regular": regular, "polynomial": text })));
            }
            ok(text + "\n")
        }
        Command::Verify { dir, theorem, json, timing, force } => {
            let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir)
                .map_err(|source| CliError::Io { path: dir.clone(), source })?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "front"))
                .collect();
            paths.sort();
            if paths.is_empty() {
                return Err(CliError::Usage(format!("{}: no .front files", dir.display())));
            }
            let mut records = Vec::new();
            for p in &paths {
                let file = load(p, None)?;
                size_check(p, &file, force)?;
                let id = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                records.push(verify_front(&id, &file, timing)?);
            }
            let report = VerificationReport::new(theorem, records);
            let out = if json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.render_text(theorem)
            };
            let code = if report.all_agree { ExitCode::SUCCESS } else { ExitCode::from(1) };
            Ok((out, code))
        }
        Command::Moves { path, apply, random, seed, list } => {
            let file = load(&path, None)?;
            let of = oriented(&file);
            if list {
                let moves: Vec<String> = file.word.applicable_moves().into_iter().flatten().map(|m| m.to_string()).collect();
                return ok(moves.join("\n") + "\n");
            }
            let (moved, applied) = match (apply, random) {
                (Some(mv), _) => (of.apply_move(mv)?, vec![mv]),
                (None, Some(n)) => random_moves(&of, n, &mut ChaCha8Rng::seed_from_u64(seed)),
                (None, None) => return Err(CliError::Usage("moves needs --apply, --random or --list".into())),
            };
            let names: Vec<String> = applied.iter().map(Move::to_string).collect();
            let out = FrontFile { word: moved.word().clone(), reversed: moved.reversed().to_vec() };
            ok(format!("# moves: {}\n{}", names.join(" "), out.render()))
        }
        Command::Stabilize { path, site, flavor } => {
            let file = load(&path, None)?;
            let of = oriented(&file);
            let (slice, position) = match site.or_else(|| file.word.first_segment()) {
                Some(s) => s,
                None => return Err(CliError::Usage("the empty front has no segment to stabilize".into())),
            };
            let flavor = match flavor {
                Flavor::Up => StabilizeFlavor::Up,
                Flavor::Down => StabilizeFlavor::Down,
            };
            let s = of.stabilize(slice, position, flavor)?;
            ok(FrontFile { word: s.word().clone(), reversed: s.reversed().to_vec() }.render())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(2)
        }
    }
}
