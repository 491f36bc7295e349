//! Command-line entry point: subcommands, point-set file loading, reports,
//! and the self-test battery.
//!
//! Exit codes: 0 success, 1 runtime error, 2 usage error, 3 failed
//! check/trace/red-flag finding, 4 budget exceeded.

pub mod file;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::budget::{Budget, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::grassmann::{enumerate_subspaces, gaussian_binomial};
use crate::linalg::BilinearForm;
use crate::proofcheck::{
    scan_threshold, sharpness_demo, trace_base_case, trace_induction_step, verify_theorem,
    ProofTrace,
};
use crate::sets::{
    bstar, cor24_bound_holds, cross_product_set, dot_product_set, incidence_count, volume_set,
    CrossMode, PointSet, VolumeMode,
};
use report::{emit_report, fmt_ratio, fmt_scalars, fmt_tuple, fmt_vector, Report, ReportFormat, Table};

#[derive(Parser, Debug)]
#[command(name = "volset", version, about = "Exact volume-set computations over F_q^d")]
pub struct Cli {
    /// Write the report to this path instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Report serialization format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Naive,
    Wedge,
    Decomposed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CrossArg {
    Enumerated,
    Decomposed,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Compute vol(E) for a point-set file
    Volset {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Wedge)]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Compute the cross-product set F*_E
    Cross {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CrossArg::Decomposed)]
        mode: CrossArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Incidence counts nu_t over E x F for a bilinear form
    Nu {
        e_file: PathBuf,
        f_file: Option<PathBuf>,
        /// Use the standard dot product as the form
        #[arg(long)]
        dot: bool,
        /// d*d Gram matrix entries, row-major, comma separated
        #[arg(long)]
        form: Option<String>,
        /// Focus one target value t
        #[arg(long)]
        t: Option<u64>,
    },
    /// B*(E) for a planar set, with the exact size bound check
    Bstar {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        form: Option<String>,
    },
    /// Count or enumerate the Grassmannian G(k, d) (here --k is the
    /// subspace dimension; the field degree is --ext)
    Grass {
        #[arg(long)]
        count: bool,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        ext: u32,
        #[arg(long = "mod")]
        modulus: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Search witnesses for vol(E) = F_q and certify coverage
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Replay the three-dimensional inequality chain on E
    TraceBase {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Replay the induction-step inequality chain (d >= 4) on E
    TraceInduct {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Coverage frequency of random subsets across a size range
    Scan {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long = "mod")]
        modulus: Option<String>,
        #[arg(long)]
        d: usize,
        /// Comma-separated subset sizes
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// The hyperplane construction: q^(d-1) points, volume set {0}
    Sharp {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long = "mod")]
        modulus: Option<String>,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run the invariant battery at q in {3, 5}, d in {2, 3}
    Selftest,
}

/// The report of a finished command plus its pass/fail verdict.
#[derive(Debug)]
pub struct CommandOutcome {
    pub report: Report,
    pub checks_failed: bool,
}

/// Parses an argv (including the program name) and runs the command,
/// returning the serialized report bytes and the outcome.
pub fn execute<I, S>(argv: I) -> Result<(Vec<u8>, CommandOutcome)>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::Usage(e.to_string()))?;
    let format = match cli.format {
        FormatArg::Text => ReportFormat::Text,
        FormatArg::Csv => ReportFormat::Csv,
    };
    let outcome = run_command(cli.command)?;
    let bytes = emit_report(&outcome.report, format);
    Ok((bytes, outcome))
}

fn load(path: &Path) -> Result<(Field, PointSet)> {
    let text = std::fs::read_to_string(path)?;
    file::parse_pointset(&text)
}

fn field_params(r: &mut Report, f: &Field, d: usize) {
    r.param("p", f.p());
    r.param("k", f.k());
    r.param("d", d);
    if let Some(m) = f.modulus() {
        let coeffs: Vec<String> = m.iter().map(|c| c.to_string()).collect();
        r.param("mod", coeffs.join(","));
    }
}

fn parse_form(f: &Field, d: usize, dot: bool, form: &Option<String>) -> Result<BilinearForm> {
    match (dot, form) {
        (true, None) => Ok(BilinearForm::dot_form(d)),
        (false, Some(s)) => {
            let entries: std::result::Result<Vec<u64>, _> =
                s.split(',').map(|x| x.trim().parse::<u64>()).collect();
            let entries = entries.map_err(|_| Error::Usage("bad --form entries".into()))?;
            if entries.len() != d * d {
                return Err(Error::Usage(format!("--form needs {} entries, got {}", d * d, entries.len())));
            }
            let gram = entries.chunks(d).map(|c| c.to_vec()).collect();
            BilinearForm::new(f, gram)
        }
        (true, Some(_)) => Err(Error::Usage("pass either --dot or --form, not both".into())),
        (false, None) => Err(Error::Usage("a form is required: pass --dot or --form".into())),
    }
}

fn parse_modulus(modulus: &Option<String>) -> Result<Option<Vec<u64>>> {
    match modulus {
        None => Ok(None),
        Some(s) => {
            let coeffs: std::result::Result<Vec<u64>, _> =
                s.split(',').map(|x| x.trim().parse::<u64>()).collect();
            Ok(Some(coeffs.map_err(|_| Error::Usage("bad --mod coefficients".into()))?))
        }
    }
}

fn trace_report(command: &str, trace: &ProofTrace) -> (Report, bool) {
    let mut r = Report::new(command);
    let mut table = Table {
        columns: vec!["step".into(), "lhs".into(), "relation".into(), "rhs".into(), "pass".into(), "label".into()],
        rows: Vec::new(),
    };
    for (i, s) in trace.steps.iter().enumerate() {
        table.rows.push(vec![
            (i + 1).to_string(),
            s.lhs.to_string(),
            s.relation.symbol().to_string(),
            s.rhs.to_string(),
            if s.pass { "pass".into() } else { "FAIL".into() },
            s.label.clone(),
        ]);
    }
    r.result("steps", trace.steps.len());
    r.result("overall", if trace.overall { "pass" } else { "FAIL" });
    r.table = Some(table);
    (r, !trace.overall)
}

pub fn run_command(cmd: Cmd) -> Result<CommandOutcome> {
    match cmd {
        Cmd::Volset { file, mode, budget } => {
            let (f, e) = load(&file)?;
            let mut r = Report::new("volset");
            r.param("file", file.display());
            field_params(&mut r, &f, e.dim());
            let mode_name = match mode {
                ModeArg::Naive => "naive",
                ModeArg::Wedge => "wedge",
                ModeArg::Decomposed => "decomposed",
            };
            r.param("mode", mode_name);
            r.param("budget", budget);
            let vmode = match mode {
                ModeArg::Naive => VolumeMode::Naive,
                ModeArg::Wedge => VolumeMode::Wedge,
                ModeArg::Decomposed => VolumeMode::Decomposed,
            };
            let meter = Budget::new(budget);
            let v = volume_set(&f, &e, vmode, &meter)?;
            r.result("set_size", e.len());
            r.result("vol_size", v.len());
            r.result("vol", fmt_scalars(&v.elements));
            Ok(CommandOutcome { report: r, checks_failed: false })
        }
        Cmd::Cross { file, mode, budget } => {
            let (f, e) = load(&file)?;
            let mut r = Report::new("cross");
            r.param("file", file.display());
            field_params(&mut r, &f, e.dim());
            r.param("mode", match mode {
                CrossArg::Enumerated => "enumerated",
                CrossArg::Decomposed => "decomposed",
            });
            r.param("budget", budget);
            let cmode = match mode {
                CrossArg::Enumerated => CrossMode::Enumerated,
                CrossArg::Decomposed => CrossMode::Decomposed,
            };
            let meter = Budget::new(budget);
            let c = cross_product_set(&f, &e, cmode, &meter)?;
            r.result("set_size", e.len());
            r.result("cross_size", c.len());
            let vecs: Vec<String> = c.vectors.iter().map(|v| fmt_vector(v)).collect();
            r.result("cross", if vecs.is_empty() { "-".into() } else { vecs.join(" ") });
            Ok(CommandOutcome { report: r, checks_failed: false })
        }
        Cmd::Nu { e_file, f_file, dot, form, t } => {
            let (f, e) = load(&e_file)?;
            let (f2, g) = match &f_file {
                Some(p) => load(p)?,
                None => (f.clone(), e.clone()),
            };
            if f != f2 {
                return Err(Error::Usage("E and F files disagree on the field".into()));
            }
            let b = parse_form(&f, e.dim(), dot, &form)?;
            let mut r = Report::new("nu");
            r.param("e_file", e_file.display());
            if let Some(p) = &f_file {
                r.param("f_file", p.display());
            }
            field_params(&mut r, &f, e.dim());
            r.param("form", if dot { "dot".to_string() } else { form.clone().unwrap_or_default() });
            let table = incidence_count(&f, &e, &g, &b)?;
            r.result("e_size", e.len());
            r.result("f_size", g.len());
            r.result("pairs", e.len() as u64 * g.len() as u64);
            r.result("main_term", format!("{}/{}", e.len() as u64 * g.len() as u64, f.q()));
            if let Some(t) = t {
                f.check(t)?;
                r.param("t", t);
                r.result("nu_t", table.nu(t));
            }
            let mut out = Table {
                columns: vec!["t".into(), "nu".into(), "q_scaled_deviation".into(), "bound_ok".into()],
                rows: Vec::new(),
            };
            let mut failed = false;
            for t in f.elements() {
                let bound = if t == 0 {
                    "-".to_string()
                } else {
                    let ok = table.bound_holds(t, e.dim());
                    failed |= !ok;
                    if ok { "yes".into() } else { "NO".into() }
                };
                out.rows.push(vec![
                    t.to_string(),
                    table.nu(t).to_string(),
                    table.deviation_scaled(t).to_string(),
                    bound,
                ]);
            }
            r.table = Some(out);
            Ok(CommandOutcome { report: r, checks_failed: failed })
        }
        Cmd::Bstar { file, dot, form } => {
            let (f, e) = load(&file)?;
            let b = parse_form(&f, 2, dot, &form)?;
            let mut r = Report::new("bstar");
            r.param("file", file.display());
            field_params(&mut r, &f, e.dim());
            r.param("form", if dot { "dot".to_string() } else { form.clone().unwrap_or_default() });
            let s = bstar(&f, &e, &b)?;
            let ok = cor24_bound_holds(f.q(), e.len() as u64, s.len() as u64);
            r.result("set_size", e.len());
            r.result("bstar_size", s.len());
            r.result("bstar", fmt_scalars(&s.elements));
            r.result("size_bound_ok", if ok { "yes" } else { "NO" });
            Ok(CommandOutcome { report: r, checks_failed: !ok })
        }
        Cmd::Grass { count, k, d, p, ext, modulus, budget } => {
            let m = parse_modulus(&modulus)?;
            let f = Field::new(p, ext, m.as_deref())?;
            let mut r = Report::new("grass");
            r.param("p", p);
            r.param("ext", ext);
            if let Some(m) = f.modulus() {
                let coeffs: Vec<String> = m.iter().map(|c| c.to_string()).collect();
                r.param("mod", coeffs.join(","));
            }
            r.param("k", k);
            r.param("d", d);
            let n = gaussian_binomial(k, d, f.q())?;
            r.result("count", n);
            if !count {
                let meter = Budget::new(budget);
                meter.charge(u64::try_from(n).map_err(|_| Error::BudgetExceeded { cap: budget })?)?;
                let fam = enumerate_subspaces(&f, k, d)?;
                let mut table =
                    Table { columns: vec!["index".into(), "basis".into()], rows: Vec::new() };
                for (i, h) in fam.members.iter().enumerate() {
                    table.rows.push(vec![i.to_string(), fmt_tuple(h.basis())]);
                }
                r.result("enumerated", fam.members.len());
                r.table = Some(table);
            }
            Ok(CommandOutcome { report: r, checks_failed: false })
        }
        Cmd::Verify { file, seed, budget } => {
            let (f, e) = load(&file)?;
            let mut r = Report::new("verify");
            r.param("file", file.display());
            field_params(&mut r, &f, e.dim());
            r.param("seed", seed);
            r.param("budget", budget);
            let meter = Budget::new(budget);
            let cert = verify_theorem(&f, &e, seed, &meter)?;
            r.result("set_size", e.len());
            r.result("hypothesis_met", cert.hypothesis_met);
            r.result("in_proof_range", cert.in_proof_range);
            r.result("covered", fmt_scalars(&cert.covered()));
            r.result("missing", fmt_scalars(&cert.missing));
            r.result("exhaustive", cert.exhaustive);
            r.result("red_flag", cert.red_flag);
            r.result("samples_used", cert.samples_used);
            r.result("budget_used", meter.used());
            let mut table = Table { columns: vec!["t".into(), "witness".into()], rows: Vec::new() };
            for (t, tuple) in &cert.witnesses {
                table.rows.push(vec![t.to_string(), fmt_tuple(tuple)]);
            }
            r.table = Some(table);
            Ok(CommandOutcome { report: r, checks_failed: cert.red_flag })
        }
        Cmd::TraceBase { file, seed, budget } => {
            let (f, e) = load(&file)?;
            let meter = Budget::new(budget);
            let trace = trace_base_case(&f, &e, seed, &meter)?;
            let (mut r, failed) = trace_report("trace-base", &trace);
            r.param("file", file.display());
            field_params(&mut r, &f, e.dim());
            r.param("seed", seed);
            r.param("budget", budget);
            Ok(CommandOutcome { report: r, checks_failed: failed })
        }
        Cmd::TraceInduct { file, seed, budget } => {
            let (f, e) = load(&file)?;
            let meter = Budget::new(budget);
            let trace = trace_induction_step(&f, &e, seed, &meter)?;
            let (mut r, failed) = trace_report("trace-induct", &trace);
            r.param("file", file.display());
            field_params(&mut r, &f, e.dim());
            r.param("seed", seed);
            r.param("budget", budget);
            Ok(CommandOutcome { report: r, checks_failed: failed })
        }
        Cmd::Scan { p, k, modulus, d, sizes, trials, seed, budget } => {
            let m = parse_modulus(&modulus)?;
            let f = Field::new(p, k, m.as_deref())?;
            let sizes: std::result::Result<Vec<u64>, _> =
                sizes.split(',').map(|s| s.trim().parse::<u64>()).collect();
            let sizes = sizes.map_err(|_| Error::Usage("bad --sizes list".into()))?;
            let mut r = Report::new("scan");
            field_params(&mut r, &f, d);
            r.param("sizes", sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(","));
            r.param("trials", trials);
            r.param("seed", seed);
            r.param("budget", budget);
            let meter = Budget::new(budget);
            let table = scan_threshold(&f, d, &sizes, trials, seed, &meter)?;
            let mut out = Table {
                columns: vec!["size".into(), "trials".into(), "covered".into(), "frequency".into()],
                rows: Vec::new(),
            };
            for row in &table.rows {
                out.rows.push(vec![
                    row.size.to_string(),
                    row.trials.to_string(),
                    row.covered.to_string(),
                    fmt_ratio(row.covered as u64, row.trials as u64),
                ]);
            }
            r.result("seed", table.seed);
            r.table = Some(out);
            Ok(CommandOutcome { report: r, checks_failed: false })
        }
        Cmd::Sharp { p, k, modulus, d, budget } => {
            let m = parse_modulus(&modulus)?;
            let f = Field::new(p, k, m.as_deref())?;
            let mut r = Report::new("sharp");
            field_params(&mut r, &f, d);
            r.param("budget", budget);
            let meter = Budget::new(budget);
            let demo = sharpness_demo(&f, d, &meter)?;
            r.result("set_size", demo.set_size);
            r.result("vol", fmt_scalars(&demo.certificate.covered()));
            r.result("missing_count", demo.certificate.missing.len());
            r.result("exhaustive", demo.certificate.exhaustive);
            r.result("pass", if demo.pass { "yes" } else { "NO" });
            Ok(CommandOutcome { report: r, checks_failed: !demo.pass })
        }
        Cmd::Selftest => selftest(),
    }
}

/// Entry point for the binary: runs, writes the report (stdout or --out,
/// atomically), prints elapsed time to stderr, and maps the exit code.
pub fn main_entry() -> i32 {
    let start = std::time::Instant::now();
    let cli = match Cli::try_parse_from(std::env::args_os()) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text and uses exit code 2.
            let _ = e.print();
            return 2;
        }
    };
    let format = match cli.format {
        FormatArg::Text => ReportFormat::Text,
        FormatArg::Csv => ReportFormat::Csv,
    };
    let out = cli.out.clone();
    match run_command(cli.command) {
        Ok(outcome) => {
            let bytes = emit_report(&outcome.report, format);
            if let Err(e) = write_output(&out, &bytes) {
                eprintln!("error: {e}");
                return 1;
            }
            eprintln!("elapsed_ms={}", start.elapsed().as_millis());
            if outcome.checks_failed {
                3
            } else {
                0
            }
        }
        Err(Error::BudgetExceeded { cap }) => {
            eprintln!("error: budget exceeded (cap {cap}); lower q/d, pick a faster mode, or raise --budget");
            4
        }
        Err(Error::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn write_output(out: &Option<PathBuf>, bytes: &[u8]) -> Result<()> {
    match out {
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
        Some(path) => {
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, bytes)?;
            std::fs::rename(&tmp, path)?;
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// selftest

type Suite = fn() -> Result<bool>;

fn selftest() -> Result<CommandOutcome> {
    let mut r = Report::new("selftest");
    let mut table = Table { columns: vec!["suite".into(), "status".into()], rows: Vec::new() };
    let mut all_ok = true;
    let suites: Vec<(&str, Suite)> = vec![
        ("field_axioms", suite_field_axioms),
        ("vol_equals_det", suite_vol_equals_det),
        ("volume_mode_agreement", suite_volume_mode_agreement),
        ("cross_decomposition", suite_cross_decomposition),
        ("incidence_counts", suite_incidence),
        ("grassmannian_counts", suite_grassmannian_counts),
        ("file_roundtrip", suite_file_roundtrip),
    ];
    for (name, run) in suites {
        let ok = run()?;
        all_ok &= ok;
        table.rows.push(vec![name.into(), if ok { "pass".into() } else { "FAIL".into() }]);
    }
    r.result("overall", if all_ok { "pass" } else { "FAIL" });
    r.table = Some(table);
    Ok(CommandOutcome { report: r, checks_failed: !all_ok })
}

fn selftest_fields() -> Result<Vec<Field>> {
    Ok(vec![Field::new(3, 1, None)?, Field::new(5, 1, None)?])
}

fn random_subset(f: &Field, d: usize, size: u64, seed: u64) -> PointSet {
    let total = (f.q() as u128).pow(d as u32) as u64;
    let mut rng = crate::sample::rng_from(seed);
    PointSet::from_indices(f, d, &crate::sample::distinct_indices(&mut rng, total, size.min(total)))
}

fn suite_field_axioms() -> Result<bool> {
    for f in selftest_fields()? {
        let q = f.q();
        for a in 0..q {
            if f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0 {
                return Ok(false);
            }
            if a != 0 && (f.mul(a, f.inv(a)?) != 1 || f.pow(a, q - 1) != 1) {
                return Ok(false);
            }
            for b in 0..q {
                if f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) {
                    return Ok(false);
                }
                for c in 0..q {
                    if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn suite_vol_equals_det() -> Result<bool> {
    use rand::Rng;
    for f in selftest_fields()? {
        for d in [2usize, 3] {
            let mut rng = crate::sample::rng_from(f.q() * 10 + d as u64);
            for _ in 0..200 {
                let rows: Vec<Vec<u64>> =
                    (0..d).map(|_| (0..d).map(|_| rng.gen_range(0..f.q())).collect()).collect();
                if crate::linalg::vol(&f, &rows)? != crate::linalg::det(&f, &rows)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn suite_volume_mode_agreement() -> Result<bool> {
    let meter = Budget::unlimited();
    for f in selftest_fields()? {
        for d in [2usize, 3] {
            for trial in 0..5 {
                let e = random_subset(&f, d, 3 + 2 * trial, 1000 + f.q() * 10 + trial);
                if e.is_empty() {
                    continue;
                }
                let naive = volume_set(&f, &e, VolumeMode::Naive, &meter)?;
                let wedge = volume_set(&f, &e, VolumeMode::Wedge, &meter)?;
                let dec = volume_set(&f, &e, VolumeMode::Decomposed, &meter)?;
                if naive != wedge || naive != dec {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn suite_cross_decomposition() -> Result<bool> {
    let meter = Budget::unlimited();
    let f = Field::new(3, 1, None)?;
    for trial in 0..10 {
        let e = random_subset(&f, 3, 2 + trial, 2000 + trial);
        let a = cross_product_set(&f, &e, CrossMode::Enumerated, &meter)?;
        let b = cross_product_set(&f, &e, CrossMode::Decomposed, &meter)?;
        if a != b {
            return Ok(false);
        }
        // Cardinality identity: |F*| = sum over hyperplanes of |D*|.
        let fam = enumerate_subspaces(&f, 2, 3)?;
        let mut total = 0;
        for h in &fam.members {
            let inside = e.intersect(&f, h);
            total += crate::sets::determinant_set_star(&f, h, &inside, &meter)?.len();
        }
        if total != a.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn suite_incidence() -> Result<bool> {
    for f in selftest_fields()? {
        for d in [2usize, 3] {
            for trial in 0..5 {
                let e = random_subset(&f, d, 4 + trial, 3000 + f.q() + trial);
                let g = random_subset(&f, d, 5 + trial, 4000 + f.q() + trial);
                let table = incidence_count(&f, &e, &g, &BilinearForm::dot_form(d))?;
                let sum: u64 = table.counts().iter().sum();
                if sum != (e.len() * g.len()) as u64 {
                    return Ok(false);
                }
                for t in 1..f.q() {
                    if !table.bound_holds(t, d) {
                        return Ok(false);
                    }
                }
                // E . F covers the nonzero values once |E||F| > q^(d+1).
                if (e.len() * g.len()) as u128 > (f.q() as u128).pow(d as u32 + 1) {
                    let s = dot_product_set(&f, &e, &g)?;
                    for t in 1..f.q() {
                        if !s.contains(t) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

fn suite_grassmannian_counts() -> Result<bool> {
    let f = Field::new(3, 1, None)?;
    for d in 1..=3usize {
        for k in 0..=d {
            let fam = enumerate_subspaces(&f, k, d)?;
            if fam.members.len() as u128 != gaussian_binomial(k, d, 3)? {
                return Ok(false);
            }
        }
    }
    // Each nonzero vector lies in (q^(d-1)-1)/(q-1) hyperplanes at d = 3.
    let fam = enumerate_subspaces(&f, 2, 3)?;
    for idx in 1..27u64 {
        let v = crate::sets::decode_point(&f, 3, idx);
        let count = fam.members.iter().filter(|h| h.contains(&f, &v)).count();
        if count != 4 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn suite_file_roundtrip() -> Result<bool> {
    let text = "volset-pointset v1\np=5 k=1 d=3\n0 1 2\n1 2 3\n4 4 4\n";
    let (f, e) = file::parse_pointset(text)?;
    Ok(file::emit_pointset(&f, &e) == text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes() {
        let outcome = selftest().unwrap();
        assert!(!outcome.checks_failed);
    }

    #[test]
    fn grass_count_example() {
        let (_, outcome) =
            execute(["volset", "grass", "--count", "--k", "2", "--d", "3", "--p", "3"]).unwrap();
        assert!(!outcome.checks_failed);
        let count = outcome.report.results.iter().find(|(k, _)| k == "count").unwrap();
        assert_eq!(count.1, "13");
    }

    #[test]
    fn sharp_example_reports_zero_volume() {
        let (bytes, outcome) =
            execute(["volset", "sharp", "--p", "3", "--k", "1", "--d", "3"]).unwrap();
        assert!(!outcome.checks_failed);
        let text = String::from_utf8(bytes).unwrap();
        assert!(text.contains("vol = 0\n"));
        assert!(text.contains("pass = yes"));
    }

    #[test]
    fn unknown_subcommand_is_a_usage_error() {
        assert!(matches!(execute(["volset", "frobnicate"]), Err(Error::Usage(_))));
    }
}
