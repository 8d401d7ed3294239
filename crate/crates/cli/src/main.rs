use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use freebraid::moves::format_history;
use freebraid::normalform::irreducible_form_tracked;
use freebraid::scenario::{BETA_PRIME, BETA_PRIME_ADDED};
use freebraid::{
    bracket, canonical_code, chord_diagram, closure_components, f_equal, oracle_equal, parse_any, permutation, render,
    scenario_beta_prime, scenario_brunnian, scramble, strongly_equal, BraidWord, Error, MoveSet, OracleVerdict, Parity,
    RenderFormat, Scheme,
};
use serde_json::json;

/// Free braid words: parities, the parity bracket and normal forms.
///
/// WORD arguments are given inline (`"n=3; z1 t2"`), as `@path`, or as `-` /
/// omitted to read standard input. JSON words are accepted everywhere.
#[derive(Parser)]
#[command(name = "freebraid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct One {
    word: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Two {
    first: String,
    second: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WithParity {
    word: Option<String>,
    #[arg(long, default_value = "gaussian")]
    parity: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and print a word in normal text form.
    Parse(One),
    /// Endpoint permutation.
    Perm(One),
    /// Components of the closure.
    Closure(One),
    /// Gauss sequence and chord linking counts of the closure.
    Chords(One),
    /// Parity of each classical crossing.
    Parity(WithParity),
    /// Delete the even classical letters.
    Bracket(WithParity),
    /// Bigon-reduced form.
    Reduce(One),
    /// Canonical code of the crossing graph.
    Canon(One),
    /// Equality in F_n.
    EqF(Two),
    /// Equivalence by all F_n moves except the classical second move.
    EqStrong(Two),
    /// Try to certify two words as different free braids by their brackets.
    Distinguish {
        first: String,
        second: String,
        #[arg(long, default_value = "gaussian")]
        parity: String,
        #[arg(long)]
        json: bool,
    },
    /// Seeded random walk over moves.
    Scramble {
        word: Option<String>,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        max_length: usize,
        #[arg(long, default_value = "fb")]
        moveset: String,
        /// Also print the applied moves.
        #[arg(long)]
        history: bool,
        #[arg(long)]
        json: bool,
    },
    /// Breadth-first search for a move path between two words.
    Oracle {
        first: String,
        second: String,
        #[arg(long, default_value = "fb")]
        moveset: String,
        #[arg(long, default_value_t = 8)]
        bound: usize,
        #[arg(long, default_value_t = 1_000_000)]
        node_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Draw a word, one letter per row.
    Render {
        word: Option<String>,
        #[arg(long, default_value = "ascii")]
        format: String,
    },
    /// Built-in experiments.
    #[command(subcommand)]
    Scenario(ScenarioCommand),
}

#[derive(Subcommand)]
enum ScenarioCommand {
    /// Checks on the 9-strand Brunnian braid.
    Brunnian {
        #[arg(long)]
        json: bool,
    },
    /// Parities of the two added crossings of a 10-strand extension and its bracket.
    BetaPrime {
        word: Option<String>,
        /// Use the reference reconstruction shipped with the library.
        #[arg(long, conflicts_with = "word")]
        reference: bool,
        /// Positions of the added crossings, e.g. `38,42`; defaults to the last two classical letters.
        #[arg(long, value_delimiter = ',', num_args = 2)]
        added: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
    },
}

/// Failures that are the caller's fault in the sense of bad syntax.
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax(_)
            | Error::IndexOutOfRange { .. }
            | Error::InvalidPermutation(_)
            | Error::InvalidPartition(_)
            | Error::InvalidScheme(_)
    )
}

struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        let code = match err.downcast_ref::<Error>() {
            Some(e) if !is_usage(e) => 2,
            _ => 1,
        };
        Failure { code, err }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::new(e).into()
    }
}

fn read_source(arg: Option<&str>) -> anyhow::Result<String> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
        Some(a) => match a.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
            None => Ok(a.to_string()),
        },
    }
}

fn word(arg: Option<&str>) -> Result<BraidWord, Failure> {
    let text = read_source(arg)?;
    Ok(parse_any(&text)?)
}

fn words(first: &str, second: &str) -> Result<(BraidWord, BraidWord), Failure> {
    if first == "-" && second == "-" {
        return Err(anyhow!("only one word can come from standard input").into());
    }
    Ok((word(Some(first))?, word(Some(second))?))
}

fn scheme(s: &str) -> Result<Scheme, Failure> {
    Ok(s.parse::<Scheme>()?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "equal"
    } else {
        "not equal"
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Parse(a) => {
            let w = word(a.word.as_deref())?;
            if a.json {
                println!("{}", w.serialize(freebraid::Format::Json));
            } else {
                println!("{w}");
            }
        }
        Command::Perm(a) => {
            let p = permutation(&word(a.word.as_deref())?);
            if a.json {
                println!("{}", json!({ "images": p.images(), "cyclic": p.is_cyclic() }));
            } else {
                println!("{p}");
            }
        }
        Command::Closure(a) => {
            let c = closure_components(&word(a.word.as_deref())?);
            if a.json {
                println!("{}", json!({ "components": c.components, "cycles": c.cycles }));
            } else {
                println!("components: {}", c.components);
                for cycle in &c.cycles {
                    let s: Vec<String> = cycle.iter().map(|k| k.to_string()).collect();
                    println!("({})", s.join(" "));
                }
            }
        }
        Command::Chords(a) => {
            let d = chord_diagram(&word(a.word.as_deref())?)?;
            let mut links = Vec::new();
            for c in d.chords() {
                links.push((c, d.linking_count(c)?));
            }
            if a.json {
                let chords: Vec<_> = links.iter().map(|(c, k)| json!({ "crossing": c, "linked": k })).collect();
                println!("{}", json!({ "gauss_sequence": d.gauss_sequence(), "chords": chords }));
            } else {
                let s: Vec<String> = d.gauss_sequence().iter().map(|c| c.to_string()).collect();
                println!("sequence: {}", s.join(" "));
                for (c, k) in links {
                    println!("{c}: linked with {k}");
                }
            }
        }
        Command::Parity(a) => {
            let w = word(a.word.as_deref())?;
            let values = scheme(&a.parity)?.assign(&w)?;
            if a.json {
                let v: Vec<_> = values
                    .values()
                    .iter()
                    .map(|(p, z)| json!({ "position": p, "letter": w.letters()[*p].to_string(), "parity": z.to_string() }))
                    .collect();
                println!("{}", json!({ "scheme": values.scheme(), "parities": v }));
            } else {
                for (p, z) in values.values() {
                    println!("{p} {} {z}", w.letters()[*p]);
                }
            }
        }
        Command::Bracket(a) => {
            let w = word(a.word.as_deref())?;
            let b = bracket(&w, &scheme(&a.parity)?)?;
            if a.json {
                println!("{}", json!({ "word": b.word.to_string(), "kept_positions": b.kept_positions }));
            } else {
                println!("{}", b.word);
            }
        }
        Command::Reduce(a) => {
            let (w, kept) = irreducible_form_tracked(&word(a.word.as_deref())?);
            if a.json {
                println!("{}", json!({ "word": w.to_string(), "kept_positions": kept }));
            } else {
                println!("{w}");
            }
        }
        Command::Canon(a) => {
            let code = canonical_code(&word(a.word.as_deref())?);
            if a.json {
                println!("{}", serde_json::to_string(&code).expect("plain data"));
            } else {
                println!("{code}");
            }
        }
        Command::EqF(a) => {
            let (x, y) = words(&a.first, &a.second)?;
            let eq = f_equal(&x, &y)?;
            if a.json {
                println!("{}", json!({ "equal": eq }));
            } else {
                println!("{}", yes_no(eq));
            }
        }
        Command::EqStrong(a) => {
            let (x, y) = words(&a.first, &a.second)?;
            let eq = strongly_equal(&x, &y)?;
            if a.json {
                println!("{}", json!({ "equal": eq }));
            } else {
                println!("{}", yes_no(eq));
            }
        }
        Command::Distinguish { first, second, parity, json } => {
            let (x, y) = words(&first, &second)?;
            let s = scheme(&parity)?;
            let cx = canonical_code(&freebraid::irreducible_form(&bracket(&x, &s)?.word));
            let cy = canonical_code(&freebraid::irreducible_form(&bracket(&y, &s)?.word));
            let verdict = if x.strands() != y.strands() || cx != cy {
                "not equivalent (certified by parity bracket)"
            } else {
                "inconclusive"
            };
            if json {
                println!(
                    "{}",
                    json!({ "first": cx.to_string(), "second": cy.to_string(), "differ": cx != cy, "verdict": verdict })
                );
            } else {
                println!("first bracket:\n{cx}\nsecond bracket:\n{cy}\n{verdict}");
            }
        }
        Command::Scramble { word: arg, steps, seed, max_length, moveset, history, json } => {
            let w = word(arg.as_deref())?;
            let moveset: MoveSet = moveset.parse()?;
            let s = scramble(&w, steps, moveset, seed, max_length);
            if json {
                let h: Vec<String> = s.history.iter().map(|m| m.to_string()).collect();
                println!("{}", json!({ "word": s.word.to_string(), "history": h }));
            } else {
                println!("{}", s.word);
                if history {
                    print!("{}", format_history(&s.history));
                }
            }
        }
        Command::Oracle { first, second, moveset, bound, node_cap, json } => {
            let (x, y) = words(&first, &second)?;
            let moveset: MoveSet = moveset.parse()?;
            let v = match oracle_equal(&x, &y, moveset, bound, node_cap)? {
                OracleVerdict::Equal => "equal",
                OracleVerdict::NotFoundWithinBound => "not found within bound",
                OracleVerdict::CapExceeded => "node cap exceeded",
            };
            if json {
                println!("{}", json!({ "verdict": v }));
            } else {
                println!("{v}");
            }
        }
        Command::Render { word: arg, format } => {
            let f: RenderFormat = format.parse()?;
            print!("{}", render(&word(arg.as_deref())?, f));
        }
        Command::Scenario(ScenarioCommand::Brunnian { json }) => {
            let r = scenario_brunnian();
            if json {
                println!("{}", r.to_json());
            } else {
                print!("{r}");
            }
        }
        Command::Scenario(ScenarioCommand::BetaPrime { word: arg, reference, added, json }) => {
            let (w, added) = if reference {
                (parse_any(BETA_PRIME)?, Some(added.map_or(BETA_PRIME_ADDED, |a| [a[0], a[1]])))
            } else {
                (word(arg.as_deref())?, added.map(|a| [a[0], a[1]]))
            };
            let r = scenario_beta_prime(&w, added)?;
            if json {
                println!("{}", r.to_json());
            } else {
                print!("{r}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}
