//! The `dsnum` command line.
//!
//! ```text
//! dsnum convert --radix <spec> (--to-ds <int> | --to-int <numeral>)
//! dsnum add --radix <spec> <numeral> <numeral> [--trace]
//! dsnum table --which {1|2|3}
//! dsnum tree --radix <spec> [--dot | --csv]
//! dsnum selftest
//! ```
//!
//! A radix spec is either uniform, `10x3` for three levels of base 10, or an
//! explicit list `4,5,2,6` with `k_1` first. Exit codes: 0 on success, 1 for
//! a domain error, 2 for a usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::arithmetic::{add, add_traced};
use crate::codec::{encode, ConversionRecord, FamilyNumeral};
use crate::error::Error;
use crate::notation::{format, parse, Style};
use crate::radix::{PlaceValueSet, RadixSequence};
use crate::selftest;
use crate::tables::{self, OutputFormat};
use crate::tree;

/// Parses `10x3` (uniform) or `4,5,2,6` (explicit, `k_1` first).
pub fn parse_radix_spec(spec: &str) -> Result<RadixSequence, String> {
    let spec = spec.trim();
    let number = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("'{s}' is not a positive integer"))
    };
    if let Some((k, r)) = spec.split_once(['x', 'X']) {
        let k = number(k)?;
        let r = number(r)? as usize;
        return RadixSequence::uniform(k, r).map_err(|e| e.to_string());
    }
    let ks = spec.split(',').map(number).collect::<Result<Vec<_>, _>>()?;
    RadixSequence::new(ks).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "dsnum", version, about = "Distance-sensitive numeral systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NumeralStyle {
    Bare,
    Subscripted,
    Parenthesized,
}

impl From<NumeralStyle> for Style {
    fn from(s: NumeralStyle) -> Self {
        match s {
            NumeralStyle::Bare => Style::Bare,
            NumeralStyle::Subscripted => Style::Subscripted,
            NumeralStyle::Parenthesized => Style::Parenthesized,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a natural number to a numeral or back.
    Convert {
        #[arg(long, value_parser = parse_radix_spec)]
        radix: RadixSequence,
        /// Natural number to encode.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "to_int", conflicts_with = "to_int")]
        to_ds: Option<String>,
        /// Numeral to evaluate.
        #[arg(long)]
        to_int: Option<String>,
        /// How to print an encoded numeral.
        #[arg(long, value_enum, default_value_t = NumeralStyle::Bare)]
        style: NumeralStyle,
        #[command(flatten)]
        output: Output,
    },
    /// Add two numerals digit by digit.
    Add {
        #[arg(long, value_parser = parse_radix_spec)]
        radix: RadixSequence,
        a: String,
        b: String,
        /// Print the rule-by-rule worked layout.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = NumeralStyle::Bare)]
        style: NumeralStyle,
        #[command(flatten)]
        output: Output,
    },
    /// Regenerate a reference table.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[command(flatten)]
        output: Output,
    },
    /// Export the rooted symmetric tree.
    Tree {
        #[arg(long, value_parser = parse_radix_spec)]
        radix: RadixSequence,
        /// DOT graph text (the default).
        #[arg(long, conflicts_with = "csv")]
        dot: bool,
        /// `rank,numeral` pairs.
        #[arg(long)]
        csv: bool,
    },
    /// Run the exhaustive small-system suites.
    Selftest,
}

/// Runs the command line on `argv` (program name first). Returns the exit
/// code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn write_text(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::invalid(format!("cannot write output: {e}")))
}

fn numeral_text(x: &FamilyNumeral, style: Style) -> Result<String, Error> {
    // bare style falls back to the subscript below the top level
    match format(x, style) {
        Err(_) if style == Style::Bare => format(x, Style::Subscripted),
        other => other,
    }
}

fn record_json(x: &FamilyNumeral) -> String {
    let mut s = serde_json::to_string(&ConversionRecord::from(x)).expect("serializable record");
    s.push('\n');
    s
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Convert {
            radix,
            to_ds,
            to_int,
            style,
            output,
        } => {
            let system = PlaceValueSet::new(radix);
            let format_kind = OutputFormat::from(output.format);
            let text = match (to_ds, to_int) {
                (Some(value), _) => {
                    let value = value.trim();
                    if value.starts_with('-') {
                        return Err(Error::invalid(format!(
                            "{value} is negative; only naturals are representable"
                        )));
                    }
                    let m: BigUint = value
                        .parse()
                        .map_err(|_| Error::invalid(format!("'{value}' is not a natural number")))?;
                    let rep = encode(&m, &system)?;
                    match format_kind {
                        OutputFormat::Json => record_json(rep.numeral()),
                        _ => format!("{}\n", numeral_text(rep.numeral(), style.into())?),
                    }
                }
                (None, Some(text)) => {
                    let numeral = parse(&text, &system)?;
                    match format_kind {
                        OutputFormat::Json => record_json(&numeral),
                        _ => format!("{}\n", numeral.value()),
                    }
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            write_text(out, &text)?;
            Ok(0)
        }
        Command::Add {
            radix,
            a,
            b,
            trace,
            style,
            output,
        } => {
            let system = PlaceValueSet::new(radix);
            let (a, b) = (parse(&a, &system)?, parse(&b, &system)?);
            let sum = if trace {
                let (sum, trace) = add_traced(&a, &b)?;
                write_text(out, &trace.to_string())?;
                sum
            } else {
                add(&a, &b)?
            };
            let text = match OutputFormat::from(output.format) {
                OutputFormat::Json => record_json(sum.numeral()),
                _ => format!("{}\n", numeral_text(sum.numeral(), style.into())?),
            };
            write_text(out, &text)?;
            Ok(0)
        }
        Command::Table { which, output } => {
            let text = tables::render(which, output.format.into())
                .ok_or_else(|| Error::invalid(format!("no table {which}")))?;
            write_text(out, &text)?;
            Ok(0)
        }
        Command::Tree { radix, dot: _, csv } => {
            let text = if csv {
                tree::export_csv(&radix)?
            } else {
                tree::export_dot(&radix)?
            };
            write_text(out, &text)?;
            Ok(0)
        }
        Command::Selftest => {
            let reports = selftest::run_all();
            let mut failed = false;
            for report in &reports {
                let status = if report.passed() { "PASS" } else { "FAIL" };
                failed |= !report.passed();
                write_text(
                    out,
                    &format!("{status} {} ({} cases)\n", report.name, report.cases),
                )?;
                for failure in &report.failures {
                    write_text(out, &format!("    {failure}\n"))?;
                }
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("dsnum").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn radix_specs() {
        assert_eq!(parse_radix_spec("10x3").unwrap().ks(), &[10, 10, 10]);
        assert_eq!(parse_radix_spec("4,5,2,6").unwrap().ks(), &[4, 5, 2, 6]);
        assert_eq!(parse_radix_spec("7").unwrap().ks(), &[7]);
        assert!(parse_radix_spec("0,3").is_err());
        assert!(parse_radix_spec("10x0").is_err());
        assert!(parse_radix_spec("a,b").is_err());
    }

    #[test]
    fn convert_both_ways() {
        assert_eq!(run_args(&["convert", "--radix", "4,5,2,6", "--to-ds", "70"]).1, "103\n");
        assert_eq!(run_args(&["convert", "--radix", "10x2", "--to-int", "9"]).1, "99\n");
    }
}
