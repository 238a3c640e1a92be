use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bfa_core::complexity::{bounds_report, exhaustive, BoundsConfig};
use bfa_core::convert::{
    bfa_to_afa, bfa_to_dfa, bfa_to_mnfa, determinize, dfa_to_afa_of_reverse, dfa_to_bfa_of_reverse,
    mnfa_to_bfa, mnfa_to_nfa,
};
use bfa_core::format::{parse_automaton, print_automaton};
use bfa_core::machines::{classify_machine, Automaton, Dfa, Mnfa};
use bfa_core::ops::{self, Model, OperationKind};
use bfa_core::oracle::{equivalent, minimize};
use bfa_core::witnesses::WitnessId;
use bfa_core::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_BOUND_CHECK: u8 = 4;

#[derive(Parser)]
#[command(
    name = "bfa",
    version,
    about = "Boolean and alternating finite automata toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a witness automaton.
    Witness {
        /// fig1, maslov-a, maslov-b, hf-concat-a, hf-concat-b, palmovsky,
        /// unary-union-k, unary-union-l, unary-union-l-padded
        id: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Apply a regular operation.
    Apply {
        operation: String,
        #[arg(long, value_enum, default_value = "bfa")]
        model: ModelArg,
        /// First operand; `-` or absent reads stdin.
        a: Option<PathBuf>,
        /// Second operand of binary operations.
        b: Option<PathBuf>,
    },
    /// Convert between models.
    Convert {
        #[arg(value_enum)]
        target: Target,
        input: Option<PathBuf>,
    },
    /// Print the minimal DFA.
    Minimize { input: Option<PathBuf> },
    /// Compare two automata by language.
    Equiv { a: PathBuf, b: PathBuf },
    /// Decide membership; the empty argument is the empty word.
    Accept { input: PathBuf, word: String },
    /// Print the state count and the most specific model.
    States { input: Option<PathBuf> },
    /// Print the bounds report as TSV.
    BoundsTable {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        min: usize,
        /// Comma-separated operation names; all by default.
        #[arg(long, value_delimiter = ',')]
        ops: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimal DFA sizes over all binary BFAs with `n` states.
    Exhaustive {
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Bfa,
    Afa,
}

// variant names are the command-line values
#[allow(clippy::enum_variant_names)]
#[derive(Clone, Copy, ValueEnum)]
enum Target {
    ToMnfa,
    ToNfa,
    ToDfa,
    ToBfa,
    ToBfaOfReverse,
    ToAfaOfReverse,
    ToAfa,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Syntax { .. } | Error::VariableOutOfRange { .. } => {
                EXIT_PARSE
            }
            Error::BoundCheck(_) | Error::HalfFinalInfeasible { .. } => EXIT_BOUND_CHECK,
            _ => EXIT_PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<Automaton, Failure> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| Failure {
            code: EXIT_PARSE,
            message: format!("{}: {e}", p.display()),
        })?,
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(|e| Failure {
                code: EXIT_PARSE,
                message: format!("stdin: {e}"),
            })?;
            text
        }
    };
    Ok(parse_automaton(&text)?)
}

fn to_mnfa(x: &Automaton) -> Mnfa {
    match x {
        Automaton::Bfa(a) => bfa_to_mnfa(a),
        Automaton::Mnfa(m) => m.clone(),
        Automaton::Dfa(d) => d.to_mnfa(),
    }
}

fn to_dfa(x: &Automaton) -> Dfa {
    match x {
        Automaton::Bfa(a) => bfa_to_dfa(a),
        Automaton::Mnfa(m) => determinize(m),
        Automaton::Dfa(d) => d.clone(),
    }
}

fn convert(target: Target, x: &Automaton) -> Result<Automaton, Failure> {
    Ok(match target {
        Target::ToMnfa => Automaton::Mnfa(to_mnfa(x)),
        Target::ToNfa => Automaton::Mnfa(mnfa_to_nfa(&to_mnfa(x))),
        Target::ToDfa => Automaton::Dfa(to_dfa(x)),
        Target::ToBfa => match x {
            Automaton::Bfa(a) => Automaton::Bfa(a.clone()),
            Automaton::Mnfa(m) => Automaton::Bfa(mnfa_to_bfa(m)?),
            Automaton::Dfa(d) => Automaton::Bfa(mnfa_to_bfa(&d.to_mnfa())?),
        },
        Target::ToBfaOfReverse => Automaton::Bfa(dfa_to_bfa_of_reverse(&to_dfa(x))),
        Target::ToAfaOfReverse => Automaton::Bfa(dfa_to_afa_of_reverse(&to_dfa(x))?),
        Target::ToAfa => Automaton::Bfa(bfa_to_afa(&x.to_bfa()?)?),
    })
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Witness { id, m, n } => {
            let id: WitnessId = id.parse().map_err(|e: Error| usage(e.to_string()))?;
            let size = n.or(m).ok_or_else(|| usage("witness needs --m or --n"))?;
            Ok(print_automaton(&id.build(size)?))
        }
        Command::Apply {
            operation,
            model,
            a,
            b,
        } => {
            let kind: OperationKind = operation.parse().map_err(|e: Error| usage(e.to_string()))?;
            let model = match model {
                ModelArg::Bfa => Model::Bfa,
                ModelArg::Afa => Model::Afa,
            };
            if kind.is_binary() && b.is_none() {
                return Err(usage(format!("{kind} needs two operands")));
            }
            let first = read_input(a.as_ref())?.to_bfa()?;
            let second = match &b {
                Some(p) => Some(read_input(Some(p))?.to_bfa()?),
                None => None,
            };
            let out = ops::apply(kind, model, &first, second.as_ref())?;
            Ok(print_automaton(&Automaton::Bfa(out)))
        }
        Command::Convert { target, input } => {
            let x = read_input(input.as_ref())?;
            Ok(print_automaton(&convert(target, &x)?))
        }
        Command::Minimize { input } => {
            let x = read_input(input.as_ref())?;
            Ok(print_automaton(&Automaton::Dfa(
                minimize(&to_dfa(&x)).into_inner(),
            )))
        }
        Command::Equiv { a, b } => {
            let (x, y) = (read_input(Some(&a))?, read_input(Some(&b))?);
            let same = equivalent(&to_dfa(&x), &to_dfa(&y))?;
            Ok(format!(
                "{}\n",
                if same { "equivalent" } else { "different" }
            ))
        }
        Command::Accept { input, word } => {
            let x = read_input(Some(&input))?;
            Ok(format!(
                "{}\n",
                if x.accepts(&word)? {
                    "accepted"
                } else {
                    "rejected"
                }
            ))
        }
        Command::States { input } => {
            let x = read_input(input.as_ref())?;
            Ok(format!(
                "{}\t{}\n",
                x.states(),
                classify_machine(&x).most_specific()
            ))
        }
        Command::BoundsTable {
            max_m,
            max_n,
            min,
            ops,
            seed,
        } => {
            let operations = match ops {
                Some(names) => names
                    .iter()
                    .map(|s| s.parse::<OperationKind>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| usage(e.to_string()))?,
                None => OperationKind::ALL.to_vec(),
            };
            let config = BoundsConfig {
                operations,
                min_size: min,
                max_m,
                max_n,
                seed,
            };
            Ok(bounds_report(&config)?.to_tsv())
        }
        Command::Exhaustive { n } => {
            let summary = exhaustive(n)?;
            let mut out = format!(
                "states\t{}\nautomata\t{}\nceiling\t{}\nmax\t{}\nat_ceiling\t{}\n",
                summary.states,
                summary.automata,
                summary.ceiling(),
                summary.max_size(),
                summary.at_ceiling()
            );
            for (size, count) in &summary.histogram {
                out.push_str(&format!("size {size}\t{count}\n"));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
