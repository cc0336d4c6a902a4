//! Command-line front-end for `keralapi`.
//!
//! [`execute`] runs one command line and returns its exit code and output,
//! so the binary and the tests share a single code path.

pub mod args;
pub mod render;
pub mod reproduce;

use clap::error::ErrorKind;
use clap::Parser;
use keralapi::numerals::{
    decode_bhutasamkhya, decode_katapayadi, encode_katapayadi, tokenize, BhutasamkhyaLexicon,
};
use keralapi::reference::{matching_decimal_places, true_circumference};
use keralapi::sqrt::isqrt_nearest;
use keralapi::{
    build_ledger, circumference, fixed_point, isqrt, isqrt_traced, scan_range, sqrt_scaled,
    vanish_onset, Policy, RoundingMode,
};
use num_traits::Signed;

use crate::args::{Cli, Command, RoundArg, SystemArg};
use crate::render::{render_trace, results_grid, varman_grid, Cell, Column, Grid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(keralapi::Error),
}

impl From<keralapi::Error> for Failure {
    fn from(e: keralapi::Error) -> Self {
        Failure::Domain(e)
    }
}

/// Runs `argv` (without the program name) and returns `(exit_code, stdout, stderr)`.
pub fn execute<I, S>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let full = std::iter::once(std::ffi::OsString::from("keralapi"))
        .chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    (EXIT_OK, text, String::new())
                }
                _ => (EXIT_USAGE, String::new(), text),
            };
        }
    };
    match run(cli.command) {
        Ok(out) => (EXIT_OK, out, String::new()),
        Err(Failure::Usage(msg)) => (EXIT_USAGE, String::new(), format!("error: {msg}\n")),
        Err(Failure::Domain(e)) => (EXIT_DOMAIN, String::new(), format!("error: {e}\n")),
    }
}

fn single_row(pairs: Vec<(&str, Cell)>) -> Grid {
    let (keys, cells): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    Grid {
        columns: keys.iter().map(|k| Column::new(k, k)).collect(),
        rows: vec![cells],
        ..Grid::default()
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Sqrt(a) => {
            if let Some(digits) = a.frac_digits {
                let s = sqrt_scaled(&a.n, digits)?;
                let value = keralapi::exact::decimal_string(&s.to_ratio(), digits);
                let error = keralapi::exact::decimal_string(&s.error_bound(), digits);
                return Ok(single_row(vec![
                    ("n", Cell::Int(a.n)),
                    ("sqrt", Cell::Text(value)),
                    ("error_bound", Cell::Text(error)),
                ])
                .render(a.format));
            }
            if a.trace {
                return Ok(render_trace(&isqrt_traced(&a.n)?, a.format));
            }
            let grid = match a.round {
                RoundArg::Floor => {
                    let (root, rem) = isqrt(&a.n)?;
                    single_row(vec![
                        ("n", Cell::Int(a.n)),
                        ("root", Cell::Int(root)),
                        ("remainder", Cell::Int(rem)),
                    ])
                }
                RoundArg::Nearest => {
                    let root = isqrt_nearest(&a.n)?;
                    single_row(vec![("n", Cell::Int(a.n)), ("root", Cell::Int(root))])
                }
            };
            Ok(grid.render(a.format))
        }
        Command::Varman(a) => {
            let policy = a.policy.single().map_err(Failure::Usage)?;
            let ledger = build_ledger(&a.diameter, policy, a.terms)?;
            let c = ledger.circumference()?;
            if a.ledger {
                Ok(render::ledger_grid(&ledger).render(a.format))
            } else {
                Ok(varman_grid(&ledger, &c).render(a.format))
            }
        }
        Command::Circumference(a) => {
            let formula = a.formula.formula().map_err(Failure::Usage)?;
            let policy = a.policy.single().map_err(Failure::Usage)?;
            let r = circumference(formula, &a.formula.diameter, a.terms, policy)?;
            Ok(results_grid(&[r]).render(a.format))
        }
        Command::Scan(a) => {
            let formula = a.formula.formula().map_err(Failure::Usage)?;
            let mut results = Vec::new();
            for policy in a.policy.policies() {
                results.extend(scan_range(
                    formula,
                    &a.formula.diameter,
                    policy,
                    a.from,
                    a.to,
                )?);
            }
            Ok(results_grid(&results).render(a.format))
        }
        Command::FixedPoint(a) => {
            let formula = a.formula.formula().map_err(Failure::Usage)?;
            let policy = a.policy.single().map_err(Failure::Usage)?;
            let report = fixed_point(formula, &a.formula.diameter, policy, a.window, a.max_terms)?;
            Ok(render::report_grid(&[report]).render(a.format))
        }
        Command::Onset(a) => {
            let formula = a.formula.formula().map_err(Failure::Usage)?;
            let policy = match a.policy {
                RoundArg::Floor => Policy::FloorEachOp,
                RoundArg::Nearest => Policy::NearestEachOp,
            };
            Ok(format!(
                "{}\n",
                vanish_onset(formula, &a.formula.diameter, policy)?
            ))
        }
        Command::Decode(a) => {
            let text = a.tokens.join(" ");
            let value = match a.system {
                SystemArg::Katapayadi => {
                    if a.lexicon.is_some() {
                        return Err(Failure::Usage(
                            "--lexicon only applies to bhutasamkhya".to_string(),
                        ));
                    }
                    decode_katapayadi(&tokenize(&text)?)?
                }
                SystemArg::Bhutasamkhya => {
                    let mut lexicon = BhutasamkhyaLexicon::seed();
                    if let Some(path) = &a.lexicon {
                        lexicon.extend(BhutasamkhyaLexicon::load(path)?);
                    }
                    let words: Vec<&str> = text.split_whitespace().collect();
                    decode_bhutasamkhya(&words, &lexicon)?
                }
            };
            Ok(format!("{value}\n"))
        }
        Command::Encode(a) => {
            let tokens = encode_katapayadi(&a.n)?;
            let text: Vec<String> = tokens.iter().map(ToString::to_string).collect();
            Ok(text.join(" ") + "\n")
        }
        Command::Compare(a) => {
            let truth = true_circumference(&a.diameter, RoundingMode::NearestHalfUp)?;
            let places = matching_decimal_places(&a.circumference, &a.diameter)?;
            let error = &a.circumference - &truth;
            let signed = if error.is_positive() {
                format!("+{error}")
            } else {
                error.to_string()
            };
            Ok(single_row(vec![
                ("circumference", Cell::Int(a.circumference)),
                ("diameter", Cell::Int(a.diameter)),
                ("true_circumference", Cell::Int(truth)),
                ("error", Cell::Text(signed)),
                ("matching_places", Cell::Count(places.into())),
            ])
            .render(a.format))
        }
        Command::Reproduce(a) => Ok(reproduce::table(a.table)?.render(a.format)),
    }
}
