use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motzkin::format::{self, parse_rat};
use motzkin::{check, oeis, Error};
use motzkin_core::oracle::{enumerate_restricted, enumerate_unbounded, Restriction, MAX_LENGTH};
use motzkin_core::series::kernel::closed_form_total_with;
use motzkin_core::{
    build_automaton, dp_count, dp_series, from_bargraph, to_bargraph, Assignment, Bargraph, PathWord, Rat, Series,
    Variant,
};

/// Counting DP bound for `count`.
const MAX_COUNT_N: usize = 64;

#[derive(Parser)]
#[command(name = "motzkin", version, about = "Plain and skew Motzkin paths counted by peaks (UD) and valleys (DU)")]
#[command(after_help = "Throughout, t (tau) marks a peak UD and s (sigma) marks a valley DU.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count paths of length N by end level, peaks and valleys.
    Count(CountArgs),
    /// Expand the total generating function, optionally specialized.
    Series(SeriesArgs),
    /// List paths of length N.
    Paths(PathsArgs),
    /// Convert between a cornerless excursion and its bargraph.
    Bargraph(BargraphArgs),
    /// Cross-check brute force, DP, closed form and the bargraph bijection.
    Check(CheckArgs),
    /// Compare a specialization with a known integer sequence.
    #[command(after_help = oeis::help_text())]
    Oeis(OeisArgs),
    /// Print the layered automaton as JSON.
    Automaton(AutomatonArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesFormat {
    /// list when u, sigma and tau are all fixed, otherwise text.
    Auto,
    /// One line per power of z.
    Text,
    Json,
    /// Comma-separated coefficients; all variables must be fixed.
    List,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Dp,
    Closed,
    /// Run both and print only their differences.
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathClassArg {
    All,
    Excursion,
    Cornerless,
    Peakless,
    Valleyless,
}

/// A rational value, or `sym` to keep the variable.
#[derive(Clone, Debug)]
struct Value(Option<Rat>);

fn parse_value(text: &str) -> Result<Value, String> {
    if text.eq_ignore_ascii_case("sym") {
        return Ok(Value(None));
    }
    parse_rat(text).map(|r| Value(Some(r))).map_err(|e| e.to_string())
}

fn parse_variant(text: &str) -> Result<Variant, String> {
    text.parse()
}

#[derive(Args)]
struct VariantArg {
    /// plain or skew
    #[arg(long, default_value = "plain", value_parser = parse_variant)]
    variant: Variant,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    variant: VariantArg,
    /// Path length.
    #[arg(long)]
    n: usize,
    /// Keep only paths ending at this level.
    #[arg(long)]
    end_level: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: TableFormat,
}

#[derive(Args)]
struct SeriesArgs {
    #[command(flatten)]
    variant: VariantArg,
    /// Truncation order [default: $MOTZKIN_ORDER or 24]
    #[arg(long)]
    order: Option<usize>,
    /// Value for u (end level), or "sym".
    #[arg(long, default_value = "sym", value_parser = parse_value)]
    u: Value,
    /// Value for sigma (valleys DU), or "sym".
    #[arg(long, default_value = "sym", value_parser = parse_value)]
    sigma: Value,
    /// Value for tau (peaks UD), or "sym".
    #[arg(long, default_value = "sym", value_parser = parse_value)]
    tau: Value,
    #[arg(long, value_enum, default_value = "closed")]
    engine: Engine,
    #[arg(long, value_enum, default_value = "auto")]
    format: SeriesFormat,
}

#[derive(Args)]
struct PathsArgs {
    #[command(flatten)]
    variant: VariantArg,
    /// Path length.
    #[arg(long)]
    n: usize,
    /// excursion: ends at level 0. cornerless, peakless and valleyless are
    /// excursions unless --open is given.
    #[arg(long, value_enum, default_value = "all")]
    class: PathClassArg,
    /// With cornerless, peakless or valleyless: allow any end level.
    #[arg(long)]
    open: bool,
    /// Print the words (the default).
    #[arg(long, conflicts_with = "count_only")]
    list: bool,
    /// Print only the number of paths.
    #[arg(long)]
    count_only: bool,
    /// Allow lengths beyond the enumeration bound.
    #[arg(long)]
    unbounded: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BargraphArgs {
    /// A cornerless plain excursion, e.g. HUHD.
    #[arg(long)]
    path: Option<String>,
    /// Positive column heights, e.g. 2,1,3.
    #[arg(long)]
    columns: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    variant: VariantArg,
    /// Largest length checked (at most 14 plain, 12 skew).
    #[arg(long, default_value_t = 10)]
    max_n: usize,
}

#[derive(Args)]
struct OeisArgs {
    /// Sequence id, e.g. A001006.
    #[arg(long)]
    id: String,
    /// Number of terms to compare [default: all embedded terms]
    #[arg(long)]
    terms: Option<usize>,
    /// Also download the OEIS b-file and compare against it.
    #[arg(long)]
    fetch: bool,
}

#[derive(Args)]
struct AutomatonArgs {
    #[command(flatten)]
    variant: VariantArg,
    /// Highest level kept.
    #[arg(long, default_value_t = 3)]
    cap: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Count(a) => count(a, &mut out),
        Command::Series(a) => series(a, &mut out),
        Command::Paths(a) => paths(a, &mut out),
        Command::Bargraph(a) => bargraph(a, &mut out),
        Command::Check(a) => run_check(a, &mut out),
        Command::Oeis(a) => compare_oeis(a, &mut out),
        Command::Automaton(a) => automaton(a, &mut out),
    };
    let flushed = out.flush();
    match result.and(flushed.map_err(Error::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn count(a: CountArgs, out: &mut impl Write) -> Result<(), Error> {
    if a.n > MAX_COUNT_N {
        return Err(Error::Usage(format!("--n {} exceeds the bound {MAX_COUNT_N}", a.n)));
    }
    let table = dp_count(a.n, a.variant.variant);
    let rows = format::rows(table.row(a.n, a.end_level));
    match a.format {
        TableFormat::Text => format::write_text(&rows, out)?,
        TableFormat::Csv => format::write_csv(&rows, out)?,
        TableFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &format::table_to_json(&table, rows))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn series_by(engine: Engine, variant: Variant, order: usize, a: &SeriesArgs) -> Result<Series, Error> {
    let at = Assignment::new(a.u.0.clone(), a.sigma.0.clone(), a.tau.0.clone());
    Ok(match engine {
        Engine::Dp => dp_series(order, variant).specialize(&at),
        _ => closed_form_total_with(variant, order, at.sigma.clone(), at.tau.clone())?
            .specialize(&Assignment { u: at.u, ..Default::default() }),
    })
}

fn series(a: SeriesArgs, out: &mut impl Write) -> Result<(), Error> {
    let variant = a.variant.variant;
    let order = match a.order {
        Some(n) => n,
        None => motzkin::default_order()?,
    };
    if a.engine == Engine::Both {
        let dp = series_by(Engine::Dp, variant, order, &a)?;
        let cf = series_by(Engine::Closed, variant, order, &a)?;
        if let Some(k) = cf.first_difference(&dp) {
            writeln!(out, "z^{k}: closed {} dp {}", cf.coeff(k), dp.coeff(k))?;
            return Err(Error::Verification(format!("engines differ first at z^{k}")));
        }
        eprintln!("engines agree to z^{order}");
        return Ok(());
    }
    let s = series_by(a.engine, variant, order, &a)?;
    let fixed = a.u.0.is_some() && a.sigma.0.is_some() && a.tau.0.is_some();
    let format = match a.format {
        SeriesFormat::Auto if fixed => SeriesFormat::List,
        SeriesFormat::Auto => SeriesFormat::Text,
        f => f,
    };
    match format {
        SeriesFormat::Text | SeriesFormat::Auto => writeln!(out, "{s}")?,
        SeriesFormat::Json => {
            serde_json::to_writer(&mut *out, &format::series_to_json(&s))?;
            writeln!(out)?;
        }
        SeriesFormat::List => {
            let coeffs = s
                .constant_coeffs()
                .ok_or_else(|| Error::Usage("--format list needs --u, --sigma and --tau all fixed".into()))?;
            let shown: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", shown.join(","))?;
        }
    }
    Ok(())
}

fn paths(a: PathsArgs, out: &mut impl Write) -> Result<(), Error> {
    let variant = a.variant.variant;
    let open = a.open || a.class == PathClassArg::All;
    if a.open && a.class == PathClassArg::Excursion {
        return Err(Error::Usage("--open cannot be combined with --class excursion".into()));
    }
    let restriction = Restriction {
        forbid_ud: matches!(a.class, PathClassArg::Cornerless | PathClassArg::Peakless),
        forbid_du: matches!(a.class, PathClassArg::Cornerless | PathClassArg::Valleyless),
        excursions_only: !open,
    };
    let words: Box<dyn Iterator<Item = PathWord>> = if a.n > MAX_LENGTH && a.unbounded {
        Box::new(enumerate_unbounded(a.n, variant, restriction))
    } else {
        Box::new(enumerate_restricted(a.n, variant, restriction)?)
    };
    let mut words: Vec<String> = words.map(|w| w.to_string()).collect();
    words.sort();
    if !a.count_only {
        for w in &words {
            writeln!(out, "{w}")?;
        }
    }
    writeln!(out, "{} paths", words.len())?;
    Ok(())
}

fn bargraph(a: BargraphArgs, out: &mut impl Write) -> Result<(), Error> {
    if let Some(text) = a.path {
        let word: PathWord = text.parse()?;
        let b = to_bargraph(&word)?;
        writeln!(out, "{b}")?;
        writeln!(out, "semiperimeter {}", b.semiperimeter())?;
    } else if let Some(text) = a.columns {
        let b: Bargraph = text.parse()?;
        let word = from_bargraph(&b)?;
        writeln!(out, "{word}")?;
        writeln!(out, "semiperimeter {}", b.semiperimeter())?;
    }
    Ok(())
}

fn run_check(a: CheckArgs, out: &mut impl Write) -> Result<(), Error> {
    let variant = a.variant.variant;
    let results = check::run(variant, a.max_n)?;
    writeln!(out, "check {variant} up to n = {}", a.max_n)?;
    for r in &results {
        writeln!(out, "{r}")?;
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        writeln!(out, "FAIL ({failed} of {} suites)", results.len())?;
        return Err(Error::Verification(format!("{failed} suite(s) failed")));
    }
    writeln!(out, "PASS (all suites)")?;
    Ok(())
}

fn join(v: &[num_bigint::BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn compare_oeis(a: OeisArgs, out: &mut impl Write) -> Result<(), Error> {
    let anchor = oeis::anchor(&a.id)?;
    let terms = a.terms.unwrap_or(anchor.terms.len());
    if terms == 0 {
        return Err(Error::Usage("--terms must be positive".into()));
    }
    let computed = anchor.compute(terms)?;
    writeln!(out, "{}: {}", anchor.id, anchor.describe())?;
    writeln!(out, "  {}", anchor.note)?;
    writeln!(out, "computed: {}", join(&computed))?;

    let embedded: Vec<num_bigint::BigInt> = anchor.terms.iter().take(terms).map(|&t| t.into()).collect();
    if let Some(i) = oeis::first_divergence(&computed, &embedded) {
        writeln!(out, "embedded: mismatch at index {i}: computed {} expected {}", computed[i], embedded[i])?;
        return Err(Error::Verification(format!("{} diverges from the embedded terms at index {i}", anchor.id)));
    }
    writeln!(out, "embedded: match on {} terms", embedded.len())?;
    if terms > embedded.len() && !a.fetch {
        eprintln!("note: only {} terms are embedded; pass --fetch to compare {terms}", embedded.len());
    }
    if a.fetch {
        match oeis::fetch_bfile(anchor.id) {
            Err(e) => eprintln!("warning: {e}; compared against embedded terms only"),
            Ok(bfile) => match oeis::align(&computed, &bfile, anchor.offset) {
                Ok(start) => writeln!(out, "b-file: match on {terms} terms starting at index {start}")?,
                Err((start, i)) => {
                    writeln!(out, "b-file: best alignment starts at index {start}, diverges at term {i}")?;
                    return Err(Error::Verification(format!("{} diverges from the b-file at term {i}", anchor.id)));
                }
            },
        }
    }
    Ok(())
}

fn automaton(a: AutomatonArgs, out: &mut impl Write) -> Result<(), Error> {
    let spec = build_automaton(a.variant.variant, a.cap);
    serde_json::to_writer_pretty(&mut *out, &format::automaton_to_json(&spec))?;
    writeln!(out)?;
    Ok(())
}
