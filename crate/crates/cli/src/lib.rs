//! Argument parsing and dispatch for the `runsort` binary.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use runsort::bijections;
use runsort::counting::{self, TableKind};
use runsort::generation;
use runsort::verify::{self, Suite};
use runsort::{Error, Permutation, RgfWord, SetPartition};
use serde_json::{json, Number, Value};

/// Largest `n` for one- and two-dimensional tables.
pub const COUNT_MAX_N: usize = 500;
/// Largest `n` for the three-dimensional `a` table.
pub const A_TABLE_MAX_N: usize = 60;
/// Largest truncation order per series variable.
pub const SERIES_MAX_ORDER: usize = 16;

#[derive(Debug, Parser)]
#[command(
    name = "runsort",
    version,
    about = "Run-sorted permutations, set partitions and their counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a counting table.
    Count {
        #[arg(long, value_enum)]
        table: Table,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Enumerate run-sorted permutations or set partitions.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Number of runs (rsp) or blocks (partitions).
        #[arg(long)]
        k: Option<usize>,
        /// Number of right-to-left minima (rsp only).
        #[arg(long)]
        rlmin: Option<usize>,
        #[arg(long, value_enum, default_value_t = Class::All)]
        class: Class,
        #[arg(long, value_enum, default_value_t = Engine::Dp)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Apply a bijection to one object.
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[arg(long)]
        input: String,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Expand the generating function over a coefficient box.
    Series {
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        #[arg(long)]
        nz: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Run property suites against brute force.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Table {
    R,
    H,
    A,
    L,
    Bell,
    Stirling,
    Ncmf,
}

impl From<Table> for TableKind {
    fn from(t: Table) -> Self {
        match t {
            Table::R => TableKind::R,
            Table::H => TableKind::H,
            Table::A => TableKind::A,
            Table::L => TableKind::L,
            Table::Bell => TableKind::Bell,
            Table::Stirling => TableKind::Stirling2,
            Table::Ncmf => TableKind::Ncmf,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Rsp,
    Partitions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    All,
    MergingFree,
    Separated,
    NoncrossingMf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Dp,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Bijection {
    Prop0,
    Prop0Inv,
    Alpha,
    Beta,
    Phi,
    Psi,
    PsiInv,
    Theta,
    ThetaInv,
    Extend,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Core,
    Bijections,
    Counts,
    Generation,
    Egf,
}

impl SuiteArg {
    fn suite(self) -> Option<Suite> {
        match self {
            SuiteArg::All => None,
            SuiteArg::Core => Some(Suite::Core),
            SuiteArg::Bijections => Some(Suite::Bijections),
            SuiteArg::Counts => Some(Suite::Counts),
            SuiteArg::Generation => Some(Suite::Generation),
            SuiteArg::Egf => Some(Suite::Egf),
        }
    }
}

enum Failure {
    Domain(String),
    Usage(String),
    Io(std::io::Error),
    /// Verification ran but some property failed.
    Unverified,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` (including the program name), runs the command and returns
/// the exit code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Unverified) => 1,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Count { table, n, format } => count(table, n, format, out),
        Command::Gen {
            family,
            n,
            k,
            rlmin,
            class,
            engine,
            format,
        } => match family {
            Family::Rsp => {
                if class != Class::All {
                    return Err(Failure::Usage("--class applies to partitions only".into()));
                }
                gen_rsp(n, k, rlmin, engine, format, out)
            }
            Family::Partitions => {
                if rlmin.is_some() {
                    return Err(Failure::Usage("--rlmin applies to rsp only".into()));
                }
                if engine != Engine::Dp {
                    return Err(Failure::Usage("--engine applies to rsp only".into()));
                }
                gen_partitions(n, k, class, format, out)
            }
        },
        Command::Map { bijection, input, i } => map(bijection, &input, i, out),
        Command::Series { nx, ny, nz, format } => series(nx, ny, nz, format, out),
        Command::Verify { suite, nmax } => {
            let outcomes = verify::run(suite.suite(), nmax);
            let mut ok = true;
            for o in &outcomes {
                writeln!(out, "{o}")?;
                ok &= o.passed();
            }
            let passed = outcomes.iter().filter(|o| o.passed()).count();
            writeln!(out, "{passed}/{} properties passed", outcomes.len())?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Unverified)
            }
        }
    }
}

fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<(), Error> {
    if value < min || value > max {
        Err(Error::OutOfRange { what, value, min, max })
    } else {
        Ok(())
    }
}

fn big(x: &BigUint) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
}

fn join(values: &[BigUint]) -> String {
    values.iter().map(BigUint::to_string).collect::<Vec<_>>().join(" ")
}

/// Row label and values, in the order they are printed.
type Row = (usize, Vec<BigUint>);

fn table_rows(table: Table, nmax: usize) -> Result<Vec<Row>, Error> {
    let t = counting::table(table.into(), nmax);
    let rows = match table {
        Table::R | Table::H => (1..=nmax)
            .map(|n| (n, (1..=n).map(|k| t.get(&[n, k])).collect()))
            .collect(),
        Table::Stirling => (0..=nmax)
            .map(|n| (n, (0..=n).map(|k| t.get(&[n, k])).collect()))
            .collect(),
        Table::Bell => (0..=nmax).map(|n| (n, vec![t.get(&[n])])).collect(),
        Table::L => (1..=nmax).map(|n| (n, vec![t.get(&[n])])).collect(),
        Table::Ncmf => (1..=nmax)
            .map(|n| counting::ncmf_polynomial(n).map(|p| (n, p)))
            .collect::<Result<_, _>>()?,
        Table::A => unreachable!("paged separately"),
    };
    Ok(rows)
}

fn count(table: Table, n: usize, format: Format, out: &mut dyn Write) -> Outcome {
    let limit = if table == Table::A { A_TABLE_MAX_N } else { COUNT_MAX_N };
    if n > limit {
        return Err(Error::SizeLimit {
            operation: "count",
            n,
            limit,
        }
        .into());
    }
    check_range("n", n, 1, limit)?;
    let kind = TableKind::from(table);
    if table == Table::A {
        let t = counting::a_table(n);
        let pages: Vec<(usize, Vec<Row>)> = (1..=n)
            .map(|m| {
                (
                    m,
                    (1..=m)
                        .map(|k| (k, (1..=m).map(|r| t.get(&[m, k, r])).collect()))
                        .collect(),
                )
            })
            .collect();
        match format {
            Format::Tsv => {
                writeln!(out, "# a(n,k,r): one section per n, rows k, columns r = 1..n")?;
                for (m, rows) in &pages {
                    writeln!(out, "n={m}")?;
                    for (k, values) in rows {
                        writeln!(out, "{k}: {}", join(values))?;
                    }
                }
            }
            Format::Json => {
                let sections: Vec<Value> = pages
                    .iter()
                    .map(|(m, rows)| {
                        let rows: Vec<Value> = rows
                            .iter()
                            .map(|(k, v)| json!({ "k": k, "values": v.iter().map(big).collect::<Vec<_>>() }))
                            .collect();
                        json!({ "n": m, "rows": rows })
                    })
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "table": kind.to_string(), "n": n, "sections": sections })
                )?;
            }
        }
        return Ok(());
    }
    let rows = table_rows(table, n)?;
    match format {
        Format::Tsv => {
            let header = match table {
                Table::R => "# r(n,k): rows n, columns k = 1..n",
                Table::H => "# h(n,r): rows n, columns r = 1..n",
                Table::Stirling => "# S(n,k): rows n, columns k = 0..n",
                Table::Bell => "# b(n)",
                Table::L => "# l(n)",
                Table::Ncmf => "# C(n-1, 2(t-1)): rows n, columns t = 1, 2, ...",
                Table::A => unreachable!(),
            };
            writeln!(out, "{header}")?;
            for (m, values) in &rows {
                writeln!(out, "{m}: {}", join(values))?;
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(m, v)| json!({ "n": m, "values": v.iter().map(big).collect::<Vec<_>>() }))
                .collect();
            writeln!(out, "{}", json!({ "table": kind.to_string(), "n": n, "rows": rows }))?;
        }
    }
    Ok(())
}

fn write_cells(cells: &[(Option<String>, Vec<String>)], format: Format, out: &mut dyn Write) -> Outcome {
    match format {
        Format::Tsv => {
            for (header, items) in cells {
                if let Some(h) = header {
                    writeln!(out, "{h}")?;
                }
                for item in items {
                    writeln!(out, "{item}")?;
                }
            }
        }
        Format::Json => {
            let arrays: Vec<&Vec<String>> = cells.iter().map(|(_, items)| items).collect();
            writeln!(out, "{}", serde_json::to_string(&arrays).expect("strings serialise"))?;
        }
    }
    Ok(())
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn gen_rsp(
    n: usize,
    k: Option<usize>,
    rlmin: Option<usize>,
    engine: Engine,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    let by_runs = || match engine {
        Engine::Dp => generation::generate_rsp(n),
        Engine::Oracle => generation::oracle_rsp(n),
    };
    let cells: Vec<(Option<String>, Vec<String>)> = match (k, rlmin) {
        (None, None) => {
            let family = by_runs()?;
            (1..=n.div_ceil(2))
                .map(|k| (Some(format!("k={k}")), strings(family.cell(k))))
                .collect()
        }
        (Some(k), None) => vec![(None, strings(by_runs()?.cell(k)))],
        (None, Some(r)) => {
            let family = match engine {
                Engine::Dp => generation::generate_rsp_by_rlmin(n)?,
                Engine::Oracle => generation::oracle_rsp(n)?,
            };
            let items: Vec<&Permutation> = match engine {
                Engine::Dp => family.cell(r).iter().collect(),
                Engine::Oracle => family.iter().filter(|p| p.rlmin_count() == r).collect(),
            };
            vec![(None, strings(&items))]
        }
        (Some(k), Some(r)) => {
            let family = by_runs()?;
            let items: Vec<&Permutation> = family.cell(k).iter().filter(|p| p.rlmin_count() == r).collect();
            vec![(None, strings(&items))]
        }
    };
    write_cells(&cells, format, out)
}

fn gen_partitions(n: usize, k: Option<usize>, class: Class, format: Format, out: &mut dyn Write) -> Outcome {
    let family = match class {
        Class::All => generation::generate_set_partitions(n)?,
        Class::MergingFree => generation::generate_merging_free(n)?,
        Class::Separated => generation::generate_separated(n)?,
        Class::NoncrossingMf => generation::generate_ncmf(n)?,
    };
    let items: Vec<&SetPartition> = family
        .iter()
        .filter(|p| k.map_or(true, |k| p.block_count() == k))
        .collect();
    write_cells(&[(None, strings(&items))], format, out)
}

fn need_i(bijection: Bijection, i: Option<usize>) -> Result<usize, Failure> {
    i.ok_or_else(|| Failure::Usage(format!("--i is required for {}", bijection_name(bijection))))
}

fn bijection_name(b: Bijection) -> String {
    b.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn map(bijection: Bijection, input: &str, i: Option<usize>, out: &mut dyn Write) -> Outcome {
    use Bijection::*;
    if i.is_some() && !matches!(bijection, Phi | Psi | Extend) {
        return Err(Failure::Usage(format!(
            "--i is not used by {}",
            bijection_name(bijection)
        )));
    }
    let text = match bijection {
        Prop0 => bijections::prop0_forward(&input.parse::<SetPartition>()?).to_string(),
        Prop0Inv => bijections::prop0_inverse(&input.parse::<Permutation>()?)?.to_string(),
        Alpha => bijections::alpha(&input.parse::<RgfWord>()?).to_string(),
        Beta => bijections::beta(&input.parse::<RgfWord>()?)?.to_string(),
        Phi => bijections::phi(need_i(bijection, i)?, &input.parse::<Permutation>()?)?.to_string(),
        Psi => bijections::psi(need_i(bijection, i)?, &input.parse::<Permutation>()?)?.to_string(),
        PsiInv => {
            let (j, pi) = bijections::psi_inverse(&input.parse::<Permutation>()?)?;
            format!("{j}\t{pi}")
        }
        Theta => bijections::theta(&input.parse::<SetPartition>()?)?.to_string(),
        ThetaInv => bijections::theta_inverse(&input.parse::<Permutation>()?)?.to_string(),
        Extend => bijections::canonical_extend(need_i(bijection, i)?, &input.parse::<RgfWord>()?)?.to_string(),
    };
    writeln!(out, "{text}")?;
    Ok(())
}

fn series(nx: usize, ny: usize, nz: usize, format: Format, out: &mut dyn Write) -> Outcome {
    check_range("nx", nx, 0, SERIES_MAX_ORDER)?;
    check_range("ny", ny, 1, SERIES_MAX_ORDER)?;
    check_range("nz", nz, 1, SERIES_MAX_ORDER)?;
    let s = runsort::series::egf_rhs(nx, ny, nz)?;
    let cell = |m, k, r| s.scaled_coeff([m, k, r]).to_string();
    match format {
        Format::Tsv => {
            writeln!(
                out,
                "# m! [x^m y^k z^r]: one section per m, rows k = 0..{ny}, columns r = 0..{nz}"
            )?;
            for m in 0..=nx {
                writeln!(out, "m={m}")?;
                for k in 0..=ny {
                    let row: Vec<String> = (0..=nz).map(|r| cell(m, k, r)).collect();
                    writeln!(out, "{k}: {}", row.join(" "))?;
                }
            }
        }
        Format::Json => {
            let value = |m, k, r| {
                let c: String = cell(m, k, r);
                c.parse::<Number>().map(Value::Number).unwrap_or(Value::String(c))
            };
            let pages: Vec<Value> = (0..=nx)
                .map(|m| {
                    let rows: Vec<Value> = (0..=ny)
                        .map(|k| Value::Array((0..=nz).map(|r| value(m, k, r)).collect()))
                        .collect();
                    json!({ "m": m, "rows": rows })
                })
                .collect();
            writeln!(out, "{}", json!({ "nx": nx, "ny": ny, "nz": nz, "pages": pages }))?;
        }
    }
    Ok(())
}
