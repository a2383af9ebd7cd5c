use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use amalgam_order::harness::report::serialize_reports;
use amalgam_order::{
    load_tower, parse_word, run_suite, ConvexLadder, Element, Error, Group, OrderedGroup, PropertyId,
    SuiteConfig, Verdict,
};

#[derive(Parser, Debug)]
#[command(name = "amalgam-order", version, about = "Query isolated orderings on amalgamated free products")]
struct Cli {
    /// Tower definition file.
    #[arg(long, global = true)]
    tower: Option<PathBuf>,
    /// Group to work in; defaults to the last group declared in the tower.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Ball radius for ball-check (default 4, or 3 for nested amalgams).
    #[arg(long, global = true)]
    radius: Option<usize>,
    /// Search limit for convex.
    #[arg(long, global = true, default_value_t = 8)]
    limit: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Not supported: the variant is part of a group's construction.
    #[arg(long, global = true)]
    variant_override: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print LT, EQ or GT.
    Compare { u: String, v: String },
    /// Print NEG, ZERO or POS.
    Sign { word: String },
    /// Print the words in ascending order, on one line.
    Sort {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Print the reduced form of a word.
    NormalForm { word: String },
    /// Print the filtration level of a word.
    Level { word: String },
    /// Print the subgroup floor and ceiling of a word.
    Floor { word: String },
    /// Print the minimal positive element.
    Minpos,
    /// Print the characteristic positive set, one element per line.
    Charset,
    /// Run property suites on a ball; exits 1 if any fails.
    BallCheck {
        /// Suite to run (repeatable); all suites when omitted.
        #[arg(long = "suite")]
        suites: Vec<PropertyId>,
        /// Largest ball to enumerate.
        #[arg(long, default_value_t = 200_000)]
        cap: usize,
    },
    /// Hull membership in the convex hull of the powers of SEED, one verdict per word.
    Convex {
        seed_word: String,
        #[arg(required = true)]
        words: Vec<String>,
        /// Decide through the subgroup floor instead of directly.
        #[arg(long)]
        via_floor: bool,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Engine(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn word(text: &str, group: &Group) -> Result<Element, Failure> {
    parse_word(text, group).map_err(|e| Failure::usage(format!("word `{text}`: {e}")))
}

fn symbol(o: Ordering, names: [&'static str; 3]) -> &'static str {
    match o {
        Ordering::Less => names[0],
        Ordering::Equal => names[1],
        Ordering::Greater => names[2],
    }
}

fn run(cli: Cli) -> Result<(Vec<String>, bool), Failure> {
    if cli.variant_override.is_some() {
        return Err(Failure::usage(
            "--variant-override is not supported: the variant is fixed when the amalgam is declared",
        ));
    }
    let path = cli
        .tower
        .as_ref()
        .ok_or_else(|| Failure::usage("missing --tower <path>"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let tower = load_tower(&text).map_err(|d| Failure::usage(format!("{}:{d}", path.display())))?;
    let group = match &cli.group {
        Some(id) => tower.group(id).ok_or_else(|| {
            let known: Vec<&str> = tower.group_ids().collect();
            Failure::usage(format!("no group `{id}` in the tower (groups: {})", known.join(", ")))
        })?,
        None => tower.last_group().expect("a loaded tower has a group"),
    };
    let g = group;
    let mut out = Vec::new();
    let mut ok = true;
    match &cli.command {
        Command::Compare { u, v } => {
            let o = g.try_compare(&word(u, g)?, &word(v, g)?)?;
            out.push(symbol(o, ["LT", "EQ", "GT"]).to_string());
        }
        Command::Sign { word: w } => {
            let o = g.sign(&word(w, g)?)?;
            out.push(symbol(o, ["NEG", "ZERO", "POS"]).to_string());
        }
        Command::Sort { words } => {
            let mut parsed = words
                .iter()
                .map(|w| Ok((w.as_str(), word(w, g)?)))
                .collect::<Result<Vec<_>, Failure>>()?;
            let mut failure = None;
            parsed.sort_by(|a, b| {
                g.compare(&a.1, &b.1).unwrap_or_else(|e| {
                    failure.get_or_insert(e);
                    Ordering::Equal
                })
            });
            if let Some(e) = failure {
                return Err(e.into());
            }
            out.push(parsed.iter().map(|(w, _)| *w).collect::<Vec<_>>().join(" "));
        }
        Command::NormalForm { word: w } => out.push(g.render(&word(w, g)?)),
        Command::Level { word: w } => {
            let x = g.require_amalgam()?;
            out.push(x.level(&word(w, g)?).to_string());
        }
        Command::Floor { word: w } => {
            let x = g.require_amalgam()?;
            let e = word(w, g)?;
            out.push(format!("{} {}", g.render(&x.a_floor(&e)?), g.render(&x.a_ceil(&e)?)));
        }
        Command::Minpos => out.push(g.render(&g.require_min_positive()?)),
        Command::Charset => {
            let cs = g
                .char_set()
                .ok_or_else(|| Error::MissingCharSet("the group has no characteristic set".into()))?;
            out.extend(cs.iter().map(|c| g.render(c)));
        }
        Command::BallCheck { suites, cap } => {
            let nested = g.as_amalgam().is_some_and(|x| {
                x.factor(amalgam_order::Side::Left).as_amalgam().is_some()
                    || x.factor(amalgam_order::Side::Right).as_amalgam().is_some()
            });
            let config = SuiteConfig {
                radius: cli.radius.unwrap_or(if nested { 3 } else { 4 }),
                seed: cli.seed,
                cap: *cap,
                ..SuiteConfig::default()
            };
            let which = if suites.is_empty() {
                PropertyId::ALL.to_vec()
            } else {
                suites.clone()
            };
            let reports = run_suite(g, &config, &which)?;
            ok = reports.iter().all(|r| r.passed());
            out.push(serialize_reports(&reports).trim_end().to_string());
        }
        Command::Convex {
            seed_word,
            words,
            via_floor,
        } => {
            let ladder = ConvexLadder::new(g.clone(), word(seed_word, g)?, cli.limit)?;
            for w in words {
                let e = word(w, g)?;
                let v = if *via_floor {
                    ladder.member_via_floor(&e)?
                } else {
                    ladder.member(&e)?
                };
                out.push(match v {
                    Verdict::In(n) => format!("IN {n}"),
                    Verdict::Unknown { .. } => "UNKNOWN".to_string(),
                });
            }
        }
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok((lines, ok)) => {
            for l in lines {
                println!("{l}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
