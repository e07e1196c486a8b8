//! `lahlab`: tables, polynomials, derivative closed forms, generating-function
//! checks and the identity suite, all in exact arithmetic.
//!
//! Exit codes: 0 when every printed check passes, 1 when any check fails,
//! 2 for usage or domain errors.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use lahlab_core::derivatives::{
    derive_brychkov, derive_via_exppoly, derive_via_laguerre, derive_via_lah, derive_via_schwatt,
    evaluate_form, taylor_oracle,
};
use lahlab_core::exact::{fmt as fmt_rational, int, parse_rational};
use lahlab_core::identities::run_suite;
use lahlab_core::polynomials::{bell_poly, laguerre};
use lahlab_core::series::{bell_gf_check, laguerre_m1_gf_check, lah_column_gf_check, GfCheck};
use lahlab_core::{
    Coefficient, DerivClosedForm, DerivSpec, Error, Poly, Rational, Suite, Tables, Triangle,
    TriangleKind,
};

use output::{Emitter, Format, Record};

#[derive(Parser)]
#[command(
    name = "lahlab",
    version,
    about = "Exact Lah, Stirling, Laguerre and Bell computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=nmax of an integer triangle.
    #[command(allow_negative_numbers = true)]
    Table(TableArgs),
    /// Print the ascending coefficient list of a polynomial.
    #[command(allow_negative_numbers = true)]
    Poly(PolyArgs),
    /// Closed forms of D^n [x^lambda exp(c x^p)] in the normal form
    /// e^(c x^p) x^(lambda-n) sum_k a_k x^(p k).
    #[command(allow_negative_numbers = true)]
    Derive(DeriveArgs),
    /// Run identity checks and print one report per check.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
    /// Extract generating-function coefficients and compare with references.
    #[command(allow_negative_numbers = true)]
    Series(SeriesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Lah,
    Stirling1,
    Stirling2,
}

#[derive(Args)]
struct TableArgs {
    kind: TableKind,
    #[arg(long)]
    nmax: usize,
    /// Print |s(n,k)| for the first-kind triangle.
    #[arg(long)]
    unsigned: bool,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Laguerre,
    Bell,
}

#[derive(Args)]
struct PolyArgs {
    kind: PolyKind,
    #[arg(long)]
    n: usize,
    /// Laguerre order; required for `laguerre`.
    #[arg(long, value_parser = rational_arg)]
    alpha: Option<Rational>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Lah,
    Laguerre,
    Schwatt,
    Exppoly,
    Brychkov,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Lah => "lah",
            Method::Laguerre => "laguerre",
            Method::Schwatt => "schwatt",
            Method::Exppoly => "exppoly",
            Method::Brychkov => "brychkov",
            Method::All => "all",
        }
    }
}

#[derive(Args)]
struct DeriveArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = rational_arg, default_value = "1")]
    c: Rational,
    #[arg(long, value_parser = rational_arg, default_value = "-1")]
    p: Rational,
    #[arg(long, value_parser = rational_arg, default_value = "0")]
    lambda: Rational,
    #[arg(long, value_enum, default_value = "all")]
    method: Method,
    /// Also evaluate at this point and compare with the Taylor oracle.
    #[arg(long, value_parser = rational_arg)]
    x0: Option<Rational>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = suite_arg)]
    suite: Suite,
    #[arg(long, default_value_t = 12)]
    nmax: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Adds one to L(N,K) before running, as `N:K`.
    #[arg(long, hide = true, value_parser = pair_arg)]
    corrupt_lah: Option<(usize, usize)>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Lahgf,
    Laguerregf,
    Bellgf,
}

#[derive(Args)]
struct SeriesArgs {
    kind: SeriesKind,
    /// Lah column; required for `lahgf`.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 12)]
    order: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn suite_arg(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn pair_arg(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or("expected N:K")?;
    Ok((
        a.parse().map_err(|_| "bad N")?,
        b.parse().map_err(|_| "bad K")?,
    ))
}

/// Result of a command that ran to completion.
enum Outcome {
    Pass,
    Fail,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn cmd_table(args: TableArgs) -> Result<(Outcome, Emitter), Error> {
    let (kind, name) = match args.kind {
        TableKind::Lah => (TriangleKind::Lah, "lah"),
        TableKind::Stirling1 => (TriangleKind::StirlingFirstSigned, "stirling1"),
        TableKind::Stirling2 => (TriangleKind::StirlingSecond, "stirling2"),
    };
    let triangle = Triangle::build(kind, args.nmax);
    let mut out = Emitter::new(args.format);
    for (n, row) in triangle.rows().iter().enumerate() {
        let values: Vec<String> = row
            .iter()
            .map(|v| if args.unsigned { v.abs() } else { v.clone() }.to_string())
            .collect();
        let plain = values.join(", ");
        out.emit(
            Record::new(name, vec![n.to_string()], values.clone()),
            plain,
            values,
        );
    }
    Ok((Outcome::Pass, out))
}

fn cmd_poly(args: PolyArgs) -> Result<(Outcome, Emitter), Error> {
    let (name, params, poly) = match args.kind {
        PolyKind::Laguerre => {
            let alpha = args
                .alpha
                .ok_or_else(|| usage("`poly laguerre` needs --alpha"))?;
            let p = laguerre(&alpha, args.n);
            (
                "laguerre",
                vec![fmt_rational(&alpha), args.n.to_string()],
                p,
            )
        }
        PolyKind::Bell => ("bell", vec![args.n.to_string()], bell_poly(args.n)),
    };
    let values = poly_coeffs(&poly);
    let mut out = Emitter::new(args.format);
    out.emit(
        Record::new(name, params, values.clone()),
        values.join(", "),
        values,
    );
    out.note(format!("= {poly}"));
    Ok((Outcome::Pass, out))
}

fn poly_coeffs(p: &Poly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(fmt_rational).collect()
}

fn forms_for(args: &DeriveArgs) -> Result<Vec<(Method, DerivClosedForm)>, Error> {
    let (n, c, p, lambda) = (args.n, &args.c, &args.p, &args.lambda);
    if num_traits::Zero::is_zero(p) {
        return Err(Error::Degenerate(
            "p = 0 makes exp(c x^p) constant; choose p != 0".into(),
        ));
    }
    let exp_inverse = *c == int(1) && *p == int(-1) && *lambda == int(0);
    let plain_exp = *lambda == int(0);
    let brychkov_ok = *p == int(-1);
    let single = |m: Method| -> Result<DerivClosedForm, Error> {
        match m {
            Method::Lah | Method::Laguerre if !exp_inverse => Err(usage(format!(
                "method {} needs c = 1, p = -1, lambda = 0",
                m.name()
            ))),
            Method::Lah => Ok(derive_via_lah(n)),
            Method::Laguerre => Ok(derive_via_laguerre(n)),
            Method::Schwatt | Method::Exppoly if !plain_exp => {
                Err(usage(format!("method {} needs lambda = 0", m.name())))
            }
            Method::Schwatt => derive_via_schwatt(n, c, p),
            Method::Exppoly => derive_via_exppoly(n, c, p),
            Method::Brychkov if !brychkov_ok => Err(usage("method brychkov needs p = -1")),
            Method::Brychkov => Ok(derive_brychkov(n, lambda, &-c)),
            Method::All => unreachable!(),
        }
    };
    let methods: Vec<Method> = if args.method == Method::All {
        let mut m = Vec::new();
        if exp_inverse {
            m.extend([Method::Lah, Method::Laguerre]);
        }
        if plain_exp {
            m.extend([Method::Schwatt, Method::Exppoly]);
        }
        if brychkov_ok {
            m.push(Method::Brychkov);
        }
        if m.is_empty() {
            return Err(usage("no closed form applies: lambda != 0 needs p = -1"));
        }
        m
    } else {
        vec![args.method]
    };
    methods
        .into_iter()
        .map(|m| single(m).map(|f| (m, f)))
        .collect()
}

fn cmd_derive(args: DeriveArgs) -> Result<(Outcome, Emitter), Error> {
    let forms = forms_for(&args)?;
    let spec = DerivSpec::new(args.n, args.c.clone(), args.p.clone(), args.lambda.clone());
    let spec_params = vec![
        args.n.to_string(),
        fmt_rational(&spec.c),
        fmt_rational(&spec.p),
        fmt_rational(&spec.lambda),
    ];
    // computed before printing so that a domain error leaves stdout empty
    let evaluations = match &args.x0 {
        Some(x0) => {
            let values = forms
                .iter()
                .map(|(_, f)| evaluate_form(f, x0))
                .collect::<Result<Vec<_>, _>>()?;
            Some((x0, values, taylor_oracle(&spec, x0)?))
        }
        None => None,
    };

    let mut out = Emitter::new(args.format);
    let mut ok = true;
    for (m, form) in &forms {
        let values: Vec<String> = form.coeffs.iter().map(fmt_rational).collect();
        let mut params = vec![m.name().to_string()];
        params.extend(spec_params.iter().cloned());
        let mut csv = vec![m.name().to_string()];
        csv.extend(values.iter().cloned());
        out.emit(
            Record::new("derive", params, values.clone()),
            format!("{}: ({})", m.name(), values.join(", ")),
            csv,
        );
    }
    if forms.len() > 1 {
        let agree = forms.windows(2).all(|w| w[0].1.coeffs == w[1].1.coeffs);
        ok &= agree;
        let word = if agree { "AGREE" } else { "DISAGREE" };
        out.emit(
            Record::new("verdict", spec_params.clone(), vec![word.into()]).with_status(agree),
            format!("verdict: {word}"),
            vec!["verdict".into(), word.into()],
        );
    }
    if let Some((x0, values, oracle)) = evaluations {
        let x0s = fmt_rational(x0);
        for ((m, _), v) in forms.iter().zip(&values) {
            let v = fmt_rational(v);
            out.emit(
                Record::new("value", vec![m.name().into(), x0s.clone()], vec![v.clone()]),
                format!("value {}: {v}", m.name()),
                vec!["value".into(), m.name().into(), v],
            );
        }
        let matched = values.iter().all(|v| *v == oracle);
        ok &= matched;
        let word = if matched { "MATCH" } else { "MISMATCH" };
        let o = fmt_rational(&oracle);
        out.emit(
            Record::new("oracle", vec![x0s], vec![o.clone()]).with_status(matched),
            format!("oracle: {o}\n{word}"),
            vec!["oracle".into(), o, word.into()],
        );
    }
    Ok((verdict(ok), out))
}

fn cmd_verify(args: VerifyArgs) -> Result<(Outcome, Emitter), Error> {
    if args.nmax == 0 {
        return Err(usage("--nmax must be >= 1"));
    }
    let mut tables = Tables::new(args.nmax);
    if let Some((n, k)) = args.corrupt_lah {
        if k > n || n > args.nmax {
            return Err(usage(format!("--corrupt-lah {n}:{k} outside the table")));
        }
        tables.corrupt_lah(n, k);
    }
    let reports = run_suite(&tables, args.suite, args.nmax)?;
    let mut out = Emitter::new(args.format);
    let mut failed = 0usize;
    for r in &reports {
        if !r.passed() {
            failed += 1;
        }
        let tag = if r.passed() { "PASS" } else { "FAIL" };
        let rel = if r.passed() { "=" } else { "!=" };
        let plain = format!(
            "{tag} {} ({}): {} {rel} {}",
            r.id,
            r.params.join(", "),
            r.lhs,
            r.rhs
        );
        let csv = vec![
            r.id.to_string(),
            r.params.join(" "),
            r.status.as_str().into(),
            r.lhs.clone(),
            r.rhs.clone(),
        ];
        out.emit(
            Record::new(
                r.id.name(),
                r.params.clone(),
                vec![r.lhs.clone(), r.rhs.clone()],
            )
            .with_status(r.passed()),
            plain,
            csv,
        );
    }
    eprintln!("{} checks, {failed} failed", reports.len());
    Ok((verdict(failed == 0), out))
}

fn emit_gf<C: Coefficient>(
    out: &mut Emitter,
    name: &str,
    head: &[String],
    check: &GfCheck<C>,
) -> bool
where
    for<'a> &'a C: std::ops::Add<&'a C, Output = C>
        + std::ops::Sub<&'a C, Output = C>
        + std::ops::Mul<&'a C, Output = C>,
{
    for e in &check.entries {
        let (got, want) = (e.extracted.render(), e.expected.render());
        let word = if e.passed() { "PASS" } else { "FAIL" };
        let mut params = head.to_vec();
        params.push(e.index.to_string());
        out.emit(
            Record::new(name, params, vec![got.clone(), want.clone()]).with_status(e.passed()),
            format!("{}: {got} | {want} | {word}", e.index),
            vec![e.index.to_string(), got, want, word.into()],
        );
    }
    check.passed()
}

fn cmd_series(args: SeriesArgs) -> Result<(Outcome, Emitter), Error> {
    if args.order == 0 {
        return Err(usage("--order must be >= 1"));
    }
    let mut out = Emitter::new(args.format);
    let ok = match args.kind {
        SeriesKind::Lahgf => {
            let k = args.k.ok_or_else(|| usage("`series lahgf` needs --k"))?;
            let check = lah_column_gf_check(k, args.order)?;
            emit_gf(&mut out, "lahgf", &[k.to_string()], &check)
        }
        SeriesKind::Laguerregf => emit_gf(
            &mut out,
            "laguerregf",
            &[],
            &laguerre_m1_gf_check(args.order)?,
        ),
        SeriesKind::Bellgf => emit_gf(&mut out, "bellgf", &[], &bell_gf_check(args.order)?),
    };
    Ok((verdict(ok), out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Poly(a) => cmd_poly(a),
        Command::Derive(a) => cmd_derive(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Series(a) => cmd_series(a),
    };
    match result {
        Ok((outcome, out)) => {
            if let Err(e) = out.finish() {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
                eprintln!("lahlab: writing output: {e}");
                return ExitCode::from(2);
            }
            match outcome {
                Outcome::Pass => ExitCode::SUCCESS,
                Outcome::Fail => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("lahlab: {e}");
            ExitCode::from(2)
        }
    }
}
