use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use d4syl::characters::CharTable;
use d4syl::conjugacy::ClassCensus;
use d4syl::export::{write_classes_csv, write_json, write_table_csv, ClassList, Metadata, TableExport};
use d4syl::group::{format_element, group_order, parse_element};
use d4syl::verify::{self, VerificationReport};
use d4syl::{build_tower, prime_power, Error, FieldTowerCtx};

#[derive(Parser)]
#[command(
    name = "d4syl",
    version,
    about = "Classes and characters of the Sylow p-subgroup of 3D4(q^3)"
)]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "D4SYL_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArgs {
    /// Field order q = p^k.
    #[arg(long, short, required_unless_present = "p", conflicts_with_all = ["p", "k"])]
    q: Option<u64>,

    /// Characteristic, as an alternative to -q.
    #[arg(long, short)]
    p: Option<u32>,

    /// Degree of F_q over F_p, used with -p.
    #[arg(long, short, requires = "p", default_value_t = 1)]
    k: u32,

    /// Coefficients of the monic polynomial defining F_q over F_p, constant first.
    #[arg(long, value_delimiter = ',')]
    f: Option<Vec<u32>>,

    /// Coefficients of the monic cubic over F_q, as F_q indices, constant first.
    #[arg(long, value_delimiter = ',')]
    g: Option<Vec<u32>>,
}

impl FieldArgs {
    fn tower(&self) -> d4syl::Result<FieldTowerCtx> {
        let (p, k) = match (self.q, self.p) {
            (Some(q), _) => prime_power(q)?,
            (None, Some(p)) => (p, self.k),
            (None, None) => return Err(Error::InvalidOrder(0)),
        };
        build_tower(p, k, self.f.as_deref(), self.g.as_deref())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print the field tower and the group and table sizes.
    Info {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// List the conjugacy classes.
    Classes {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Compare the list against a brute-force orbit partition.
        #[arg(long)]
        check_census: bool,
    },
    /// Find the class of an element written as x(t1;t2;t3;t4;t5;t6).
    ClassOf {
        #[command(flatten)]
        field: FieldArgs,
        element: String,
    },
    /// Compute the full character table.
    Table {
        #[command(flatten)]
        field: FieldArgs,
        /// Defaults to the extension of the output file, else JSON.
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        /// Check orthogonality on every pair instead of a sample (the default only for q = 3).
        #[arg(long)]
        full: bool,
        /// Rows and columns sampled for orthogonality.
        #[arg(long, default_value_t = verify::DEFAULT_SAMPLE)]
        sample: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the enumeration-based oracles.
        #[arg(long)]
        oracles: bool,
        /// Emit the reports as JSON.
        #[arg(long)]
        json: bool,
    },
}

fn output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn io_err(e: io::Error) -> Error {
    Error::Output(e.to_string())
}

fn run(command: Command) -> d4syl::Result<bool> {
    match command {
        Command::Info { field } => {
            let ctx = field.tower()?;
            let m = Metadata::new(&ctx);
            println!("p = {}, k = {}, q = {}", m.p, m.k, m.q);
            println!("f = {:?}, g = {:?}, eta = {}", m.f, m.g, ctx.fmt_fq3(ctx.eta()));
            println!("theta(b) = {}", m.theta);
            match group_order(&ctx) {
                Some(n) => println!("|U| = {n}"),
                None => println!("|U| = {}^12", ctx.q()),
            }
            let n = verify::count_poly_total().eval(ctx.q() as i128);
            println!("classes = characters = {n}");
            Ok(true)
        }
        Command::Classes {
            field,
            format,
            out,
            check_census,
        } => {
            let ctx = field.tower()?;
            let census = ClassCensus::new(&ctx);
            if check_census {
                let report = verify::verify_class_census(&ctx, &census, None)?;
                eprintln!("{report}");
                if !report.passed {
                    return Ok(false);
                }
            }
            let mut w = output(&out).map_err(io_err)?;
            match format {
                Format::Json => write_json(&ClassList::new(&ctx, census.classes()), &mut w)?,
                Format::Csv => write_classes_csv(&ctx, census.classes(), &mut w)?,
                Format::Text => {
                    for c in census.classes() {
                        writeln!(
                            w,
                            "{:>6} {:<7} {:>10} {}",
                            c.index,
                            c.family.name(),
                            c.size,
                            format_element(&ctx, &c.rep)
                        )
                        .map_err(io_err)?;
                    }
                }
            }
            w.flush().map_err(io_err)?;
            Ok(true)
        }
        Command::ClassOf { field, element } => {
            let ctx = field.tower()?;
            let x = parse_element(&ctx, &element)?;
            let census = ClassCensus::new(&ctx);
            let c = census.class_of(&ctx, &x)?;
            println!(
                "{} {} size {} rep {}",
                c.index,
                c.family.name(),
                c.size,
                format_element(&ctx, &c.rep)
            );
            Ok(true)
        }
        Command::Table { field, format, out } => {
            let ctx = field.tower()?;
            let census = ClassCensus::new(&ctx);
            let table = CharTable::build(&ctx, &census)?;
            let format = format.unwrap_or_else(|| match out.as_ref().and_then(|p| p.extension()) {
                Some(ext) if ext.eq_ignore_ascii_case("csv") => Format::Csv,
                _ => Format::Json,
            });
            let mut w = output(&out).map_err(io_err)?;
            match format {
                Format::Json => write_json(&TableExport::new(&ctx, &table), &mut w)?,
                Format::Csv | Format::Text => write_table_csv(&ctx, &table, &mut w)?,
            }
            w.flush().map_err(io_err)?;
            Ok(true)
        }
        Command::Verify {
            field,
            full,
            sample,
            seed,
            oracles,
            json,
        } => {
            let ctx = field.tower()?;
            let census = ClassCensus::new(&ctx);
            let exhaustive = full || ctx.q() == 3;
            let mut reports: Vec<VerificationReport> = Vec::new();
            let qs: Vec<u64> = [3, 5, 7].into_iter().filter(|&q| q <= ctx.q() as u64).collect();
            reports.push(verify::verify_counts(&qs)?);
            reports.push(verify::verify_degree_identity(&ctx));
            reports.extend(verify::verify_orthogonality(
                &ctx,
                &census,
                (!exhaustive).then_some(sample),
                seed,
            )?);
            if oracles {
                match oracle_reports(&ctx, &census) {
                    Ok(r) => reports.extend(r),
                    Err(e @ Error::TooLarge { .. }) => eprintln!("SKIP oracles: {e}"),
                    Err(e) => return Err(e),
                }
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).map_err(|e| Error::Output(e.to_string()))?
                );
            } else {
                reports.iter().for_each(|r| println!("{r}"));
            }
            Ok(reports.iter().all(|r| r.passed))
        }
    }
}

fn oracle_reports(ctx: &FieldTowerCtx, census: &ClassCensus) -> d4syl::Result<Vec<VerificationReport>> {
    d4syl::group::checked_order(ctx, None)?;
    let table = CharTable::build(ctx, census)?;
    let mut reports = verify::verify_against_oracles(ctx, census, &table)?;
    reports.push(verify::verify_field_properties(ctx));
    reports.push(verify::verify_group_axioms(ctx, 100_000, 100_000, 0)?);
    Ok(reports)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Error::Output(m)) if m.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
