//! Command-line front end.
//!
//! Exit codes: 0 on success (and on all checks passing), 1 when a requested
//! verification fails, 2 on usage or input errors.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::canonical::{canonical, family, Style};
use crate::error::Error;
use crate::group::Group;
use crate::perm::SignedPermutation;
use crate::stats::StatisticsRecord;
use crate::structure::{descent_free_factor, phi, FactorCase};
use crate::verify::{
    generating_function, verify_all, CheckId, GfQuery, NegConstraint, Statistic,
    VerificationReport, VerifyOptions, DEFAULT_BUDGET,
};
use crate::word::GeneratorWord;

#[derive(Parser)]
#[command(
    name = "signed-perms",
    about = "Signed permutation statistics, canonical presentations, and equidistribution checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every statistic of a window
    Stats {
        /// Window, e.g. 5,-1,2,-3,4 (brackets allowed)
        window: String,
        #[arg(long)]
        json: bool,
    },
    /// Canonical presentation of a window in one of the styles s, b, a, l
    Canon {
        window: String,
        #[arg(long)]
        style: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a word in the generators s0, s1, ..., a0, a1, a1^-1, a2, ...
    Eval {
        /// Degree of the ambient group
        #[arg(short = 'm', long)]
        degree: usize,
        /// Word tokens, either quoted as one argument or separate
        tokens: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Apply the major-index-exchanging involution
    Phi {
        window: String,
        #[arg(long)]
        json: bool,
    },
    /// Factor a signed even permutation into a descent-free part and an
    /// even unsigned part
    Decompose {
        window: String,
        #[arg(long)]
        json: bool,
    },
    /// Generating function of a statistic over a group
    Gf(GfArgs),
    /// Run equidistribution and structure checks
    Verify(VerifyArgs),
    /// List the words of the factor family R_j of a style
    Families {
        #[arg(long)]
        style: String,
        #[arg(long)]
        j: usize,
        #[arg(short = 'm', long)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GfArgs {
    /// Group tag: s, a, b, d, l or ld
    #[arg(long)]
    group: String,
    /// Degree (window length)
    #[arg(long)]
    n: usize,
    /// Statistic name, e.g. ell_l, nrmaj_l, dmaj
    #[arg(long)]
    stat: String,
    /// Restrict to Neg(pi^{-1}) contained in this set, e.g. 1,3
    #[arg(long, conflicts_with_all = ["neg_equal", "neg_card"])]
    neg_subset: Option<String>,
    /// Restrict to Neg(pi^{-1}) equal to this set
    #[arg(long, conflicts_with = "neg_card")]
    neg_equal: Option<String>,
    /// Restrict to |Neg(pi^{-1})| equal to this count
    #[arg(long)]
    neg_card: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every default check (implied when --check is absent)
    #[arg(long)]
    all: bool,
    /// Comma-separated check ids, e.g. l_equidist,structure
    #[arg(long, value_delimiter = ',')]
    check: Vec<String>,
    /// Largest degree to test
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Seed for subset sampling at degrees with more than 32 subsets
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: machine parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Enumeration budget per check, in elements
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Also run the exploratory bivariate refinement
    #[arg(long)]
    bivariate: bool,
    #[arg(long)]
    json: bool,
    /// Also write the JSON report array to a file
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `argv` and runs the command, writing the primary output to `out`.
/// Returns the process exit code.
pub fn run<W: Write>(argv: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version to stdout and usage errors to stderr,
            // with exit code 0 or 2 respectively.
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn run_std() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run(&argv, &mut lock)
}

fn dispatch<W: Write>(command: Command, out: &mut W) -> Result<i32, Error> {
    match command {
        Command::Stats { window, json } => cmd_stats(&window, json, out),
        Command::Canon {
            window,
            style,
            json,
        } => cmd_canon(&window, &style, json, out),
        Command::Eval {
            degree,
            tokens,
            json,
        } => cmd_eval(degree, &tokens, json, out),
        Command::Phi { window, json } => cmd_phi(&window, json, out),
        Command::Decompose { window, json } => cmd_decompose(&window, json, out),
        Command::Gf(args) => cmd_gf(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Families {
            style,
            j,
            degree,
            json,
        } => cmd_families(&style, j, degree, json, out),
    }
}

fn write_line<W: Write>(out: &mut W, text: &str) -> Result<i32, Error> {
    writeln!(out, "{text}").expect("write to output");
    Ok(0)
}

fn write_json<W: Write>(out: &mut W, value: &serde_json::Value) -> Result<i32, Error> {
    let text = serde_json::to_string_pretty(value).expect("serializable value");
    write_line(out, &text)
}

fn set_line(values: &[usize]) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn cmd_stats<W: Write>(window: &str, json: bool, out: &mut W) -> Result<i32, Error> {
    let sigma: SignedPermutation = window.parse()?;
    if !Group::L.contains(&sigma) {
        eprintln!(
            "note: {sigma} is not a signed even permutation; des_A uses the \
             extension of ell_L to all signed permutations"
        );
    }
    let record = StatisticsRecord::of(&sigma);
    if json {
        return write_json(out, &serde_json::to_value(&record).expect("serializable"));
    }
    let members: Vec<String> = Group::ALL
        .into_iter()
        .filter(|g| g.contains(&sigma))
        .map(|g| g.to_string())
        .collect();
    writeln!(out, "window   {} (degree {})", record.window, record.m).expect("write");
    writeln!(out, "member of {}", members.join(", ")).expect("write");
    let mut line = |name: &str, value: String| {
        writeln!(out, "{name:<8} = {value}").expect("write");
    };
    line("inv", record.inv.to_string());
    line("ltrm", set_line(&record.ltrm));
    line("del_B", record.del_b.to_string());
    line("neg", set_line(&record.neg));
    line("neg_inv", set_line(&record.neg_inv));
    line("ell_B", record.ell_b.to_string());
    line("ell_L", record.ell_l.to_string());
    let mut opt = |name: &str, value: Option<u64>| {
        if let Some(v) = value {
            writeln!(out, "{name:<8} = {v}").expect("write");
        }
    };
    opt("ell_S", record.ell_s);
    opt("ell_A", record.ell_a);
    opt("ell_D", record.ell_d);
    opt("ell_LD", record.ell_ld);
    let mut line = |name: &str, value: String| {
        writeln!(out, "{name:<8} = {value}").expect("write");
    };
    line("des_S", set_line(&record.des_s));
    line("des_B", set_line(&record.des_b));
    line("des_A", set_line(&record.des_a));
    line("maj_B", record.maj_b.to_string());
    line("rmaj_B", record.rmaj_b.to_string());
    let mut opt = |name: &str, value: Option<u64>| {
        if let Some(v) = value {
            writeln!(out, "{name:<8} = {v}").expect("write");
        }
    };
    opt("rmaj_L", record.rmaj_l);
    opt("nrmaj_L", record.nrmaj_l);
    opt("dmaj", record.dmaj);
    opt("drmaj_D", record.drmaj_d);
    opt("drmaj_LD", record.drmaj_ld);
    Ok(0)
}

fn cmd_canon<W: Write>(window: &str, style: &str, json: bool, out: &mut W) -> Result<i32, Error> {
    let g: SignedPermutation = window.parse()?;
    let style: Style = style.parse()?;
    let pres = canonical(style, &g)?;
    if json {
        let factors: Vec<String> = pres.factors().iter().map(|f| f.to_string()).collect();
        return write_json(
            out,
            &json!({
                "window": g.to_string(),
                "style": style.name(),
                "factors": factors,
                "flattened": pres.flattened().to_string(),
                "tokens": pres.flattened().len(),
            }),
        );
    }
    write_line(out, &pres.to_string())
}

fn cmd_eval<W: Write>(
    degree: usize,
    tokens: &[String],
    json: bool,
    out: &mut W,
) -> Result<i32, Error> {
    let text = tokens.join(" ");
    let word = GeneratorWord::parse(degree, &text)?;
    let result = word.eval();
    if json {
        return write_json(
            out,
            &json!({
                "degree": degree,
                "word": word.to_string(),
                "window": result.to_string(),
            }),
        );
    }
    write_line(out, &result.to_string())
}

fn cmd_phi<W: Write>(window: &str, json: bool, out: &mut W) -> Result<i32, Error> {
    let sigma: SignedPermutation = window.parse()?;
    let image = phi(&sigma);
    if json {
        return write_json(
            out,
            &json!({
                "window": sigma.to_string(),
                "phi": image.to_string(),
            }),
        );
    }
    write_line(out, &image.to_string())
}

fn cmd_decompose<W: Write>(window: &str, json: bool, out: &mut W) -> Result<i32, Error> {
    let pi: SignedPermutation = window.parse()?;
    let factors = descent_free_factor(&pi)?;
    let laws = factors.laws(&pi);
    let all_ok = laws.iter().all(|(_, ok)| *ok);
    let case = match factors.case {
        FactorCase::SortedInL => 1,
        FactorCase::SortedTimesS1 => 2,
    };
    if json {
        let laws_json: serde_json::Map<String, serde_json::Value> = laws
            .iter()
            .map(|(name, ok)| (name.to_string(), json!(ok)))
            .collect();
        let code = write_json(
            out,
            &json!({
                "pi": pi.to_string(),
                "sigma": factors.sigma.to_string(),
                "u": factors.u.to_string(),
                "case": case,
                "laws": laws_json,
            }),
        )?;
        return Ok(if all_ok { code } else { 1 });
    }
    writeln!(out, "pi    = {pi}").expect("write");
    writeln!(out, "sigma = {}", factors.sigma).expect("write");
    writeln!(out, "u     = {}", factors.u).expect("write");
    writeln!(out, "case  = {case}").expect("write");
    for (name, ok) in &laws {
        writeln!(out, "{}: {}", name, if *ok { "ok" } else { "FAILED" }).expect("write");
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn parse_index_set(text: &str, degree: usize) -> Result<BTreeSet<usize>, Error> {
    let mut set = BTreeSet::new();
    if text.trim().is_empty() {
        return Ok(set);
    }
    for piece in text.split(',') {
        let value: usize = piece.trim().parse().map_err(|_| {
            Error::BadWordAlphabet(format!("`{}` is not an index", piece.trim()))
        })?;
        if value == 0 || value > degree {
            return Err(Error::IndexOutOfRange {
                value,
                degree,
            });
        }
        set.insert(value);
    }
    Ok(set)
}

fn cmd_gf<W: Write>(args: GfArgs, out: &mut W) -> Result<i32, Error> {
    let group: Group = args.group.parse()?;
    let stat: Statistic = args.stat.parse()?;
    let constraint = if let Some(text) = &args.neg_subset {
        NegConstraint::SubsetOf(parse_index_set(text, args.n)?)
    } else if let Some(text) = &args.neg_equal {
        NegConstraint::EqualTo(parse_index_set(text, args.n)?)
    } else if let Some(k) = args.neg_card {
        NegConstraint::Cardinality(k)
    } else {
        NegConstraint::None
    };
    let query = GfQuery {
        group,
        degree: args.n,
        stat,
        constraint,
    };
    let gf = generating_function(&query, args.budget)?;
    if args.json {
        return write_json(
            out,
            &json!({
                "group": group.to_string(),
                "degree": args.n,
                "stat": stat.name(),
                "constraint": query.constraint.to_string(),
                "coeffs": gf.coeffs(),
                "text": gf.to_string(),
            }),
        );
    }
    write_line(out, &gf.to_string())
}

fn cmd_verify<W: Write>(args: VerifyArgs, out: &mut W) -> Result<i32, Error> {
    if let Some(threads) = args.threads {
        // Ignore failure: the global pool may already exist (tests, repeat
        // invocations in one process).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let mut checks: Vec<CheckId> = if args.check.is_empty() {
        CheckId::DEFAULT.to_vec()
    } else {
        args.check
            .iter()
            .map(|name| name.parse())
            .collect::<Result<_, _>>()?
    };
    if args.bivariate && !checks.contains(&CheckId::AEquidistBivariate) {
        checks.push(CheckId::AEquidistBivariate);
    }
    let options = VerifyOptions {
        max_degree: args.max_n,
        seed: args.seed,
        budget: args.budget,
        checks,
    };
    let reports = verify_all(&options)?;
    if let Some(path) = &args.out {
        let text =
            serde_json::to_string_pretty(&reports).expect("reports serialize");
        std::fs::write(path, text).map_err(|e| {
            Error::BadWordAlphabet(format!("cannot write {}: {e}", path.display()))
        })?;
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    if args.json {
        let value = serde_json::to_value(&reports).expect("reports serialize");
        write_json(out, &value)?;
    } else {
        print_report_table(&reports, out);
        writeln!(
            out,
            "summary: {} checks, {} passed, {} failed",
            reports.len(),
            reports.len() - failed,
            failed
        )
        .expect("write");
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn print_report_table<W: Write>(reports: &[VerificationReport], out: &mut W) {
    let id_width = reports
        .iter()
        .map(|r| r.identity.len())
        .max()
        .unwrap_or(8)
        .max("identity".len());
    let params_width = reports
        .iter()
        .map(|r| r.params.len())
        .max()
        .unwrap_or(6)
        .max("params".len());
    writeln!(
        out,
        "{:<id_width$}  {:<params_width$}  {:>5}  {:<6}  {:>8}",
        "identity", "params", "cases", "result", "time"
    )
    .expect("write");
    for r in reports {
        writeln!(
            out,
            "{:<id_width$}  {:<params_width$}  {:>5}  {:<6}  {:>5} ms",
            r.identity,
            r.params,
            r.cases,
            if r.pass { "pass" } else { "FAIL" },
            r.elapsed_ms
        )
        .expect("write");
        if let Some(ce) = &r.counterexample {
            if !r.pass {
                writeln!(out, "    -> {ce}").expect("write");
            }
        }
    }
}

fn cmd_families<W: Write>(
    style: &str,
    j: usize,
    degree: usize,
    json: bool,
    out: &mut W,
) -> Result<i32, Error> {
    let style: Style = style.parse()?;
    let words = family(style, j, degree)?;
    if json {
        let texts: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        return write_json(
            out,
            &json!({
                "style": style.name(),
                "j": j,
                "degree": degree,
                "size": words.len(),
                "words": texts,
            }),
        );
    }
    for word in &words {
        writeln!(out, "{word}").expect("write");
    }
    Ok(0)
}
