//! `frobcode`: exact homogeneous-weight bounds for linear codes over finite rings.

pub mod genfile;
pub mod report;
pub mod spec_parse;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use frobcode_core::bounds::{check_all, BoundName, BoundReport, Relation};
use frobcode_core::families::{hjelmslev_line, octacode, residual_chain, simplex, ChainCertificate};
use frobcode_core::homweight::{hom_weight_table, preset_gamma, HomWeightTable};
use frobcode_core::lincode::build_code;
use frobcode_core::rational::{int, parse as parse_rational, Rational};
use frobcode_core::ring::{build_ring, Elem, Ring};
use frobcode_core::LinearCode;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use genfile::{format_generator, parse_generator, GenError};
pub use report::{CodeParameters, Report, Verdict};
pub use spec_parse::{parse_ring_spec, SpecError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "frobcode", version, about = "Exact homogeneous weights and bounds for linear codes over finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ring structure
    #[command(subcommand)]
    Ring(RingCmd),
    /// Print the homogeneous weight table
    Weight {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        gamma: GammaArg,
    },
    /// Code parameters
    #[command(subcommand)]
    Code(CodeCmd),
    /// Evaluate every bound on a code
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Build a named code family
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Residual-chain certificate of a code
    Chain {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        json: bool,
    },
    /// Check bounds and chains on seeded random codes
    Certify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum RingCmd {
    Info {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum CodeCmd {
    Analyze {
        #[command(flatten)]
        input: CodeInput,
    },
}

#[derive(Debug, Subcommand)]
enum BoundsCmd {
    Check {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyCmd {
    Simplex {
        #[arg(long)]
        ring: String,
        #[arg(short = 'm', long = "m")]
        m: usize,
        #[command(flatten)]
        out: FamilyOutput,
    },
    Octacode {
        #[command(flatten)]
        out: FamilyOutput,
    },
    Hjelmslev {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        out: FamilyOutput,
    },
}

#[derive(Debug, Args)]
struct GammaArg {
    /// Average value gamma: `p/q`, an integer, or `preset`
    #[arg(long, default_value = "1")]
    gamma: String,
}

#[derive(Debug, Args)]
struct CodeInput {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    gen: PathBuf,
    #[command(flatten)]
    gamma: GammaArg,
}

#[derive(Debug, Args)]
struct FamilyOutput {
    #[command(flatten)]
    gamma: GammaArg,
    /// Write the generator matrix to this file
    #[arg(long)]
    emit_gen: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn with_verdict(stdout: String, ok: bool) -> Self {
        Outcome { code: if ok { EXIT_OK } else { EXIT_VIOLATION }, stdout, stderr: String::new() }
    }
}

/// Runs one command line (including the program name) without touching the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome::ok(text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}

fn dispatch(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Ring(RingCmd::Info { ring, json }) => ring_info(&ring, json),
        Command::Weight { ring, gamma } => weight(&ring, &gamma.gamma),
        Command::Code(CodeCmd::Analyze { input }) => {
            let code = load_code(&input)?;
            Ok(Outcome::ok(to_json(&CodeParameters::of(&code))?))
        }
        Command::Bounds(BoundsCmd::Check { input, json }) => {
            let code = load_code(&input)?;
            let reports = check_all(&code);
            let ok = reports.iter().all(BoundReport::ok);
            let text = if json { to_json(&reports)? } else { bounds_text(&code, &reports) };
            Ok(Outcome::with_verdict(text, ok))
        }
        Command::Family(cmd) => family(cmd),
        Command::Chain { input, json } => {
            let code = load_code(&input)?;
            let cert = residual_chain(&code).certificate;
            let ok = !cert.checks.n_at_most_d_over_gamma || cert.verified();
            let text = if json { to_json(&cert)? } else { chain_text(&cert) };
            Ok(Outcome::with_verdict(text, ok))
        }
        Command::Certify { seed, count, json } => certify(seed, count, json),
    }
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn load_ring(text: &str) -> anyhow::Result<Arc<Ring>> {
    let spec = parse_ring_spec(text)?;
    Ok(Arc::new(build_ring(&spec)?))
}

fn gamma_for(ring: &Arc<Ring>, text: &str) -> anyhow::Result<Rational> {
    if text.eq_ignore_ascii_case("preset") {
        return Ok(preset_gamma(ring.clone())?);
    }
    match parse_rational(text) {
        Some(g) if g > int(0) => Ok(g),
        _ => bail!("invalid gamma {text:?}: expected a positive p/q, an integer, or `preset`"),
    }
}

fn load_table(ring: &str, gamma: &str) -> anyhow::Result<Arc<HomWeightTable>> {
    let ring = load_ring(ring)?;
    let gamma = gamma_for(&ring, gamma)?;
    Ok(Arc::new(hom_weight_table(ring, gamma)?))
}

fn load_code(input: &CodeInput) -> anyhow::Result<LinearCode> {
    let table = load_table(&input.ring, &input.gamma.gamma)?;
    let text = std::fs::read_to_string(&input.gen).with_context(|| format!("reading {}", input.gen.display()))?;
    let rows = parse_generator(table.ring(), &text).with_context(|| format!("in {}", input.gen.display()))?;
    Ok(build_code(table, rows)?)
}

#[derive(Serialize)]
struct RingInfo {
    ring: String,
    size: usize,
    units: usize,
    character_order: u32,
    local: bool,
    residue_field: Option<usize>,
    radical: usize,
    minimal_left_ideals: Vec<usize>,
}

fn ring_info(text: &str, json: bool) -> anyhow::Result<Outcome> {
    let r = load_ring(text)?;
    let info = RingInfo {
        ring: r.spec().to_string(),
        size: r.size(),
        units: r.units().len(),
        character_order: r.add_exponent(),
        local: r.is_local(),
        residue_field: r.residue_field_size().ok(),
        radical: r.radical().len(),
        minimal_left_ideals: r.minimal_left_ideals().iter().map(|i| i.len()).collect(),
    };
    if json {
        return Ok(Outcome::ok(to_json(&info)?));
    }
    let mut s = String::new();
    writeln!(s, "ring: {}", info.ring)?;
    writeln!(s, "size: {}", info.size)?;
    writeln!(s, "units: {}", info.units)?;
    writeln!(s, "N: {}", info.character_order)?;
    writeln!(s, "local: {}", info.local)?;
    if let Some(q) = info.residue_field {
        writeln!(s, "residue field: {q}")?;
    }
    writeln!(s, "radical: {}", info.radical)?;
    writeln!(s, "minimal left ideals: {:?}", info.minimal_left_ideals)?;
    Ok(Outcome::ok(s))
}

fn weight(ring: &str, gamma: &str) -> anyhow::Result<Outcome> {
    let t = load_table(ring, gamma)?;
    let r = t.ring();
    let mut s = String::new();
    for x in r.elements() {
        writeln!(s, "{}: {}", r.format_elem(x), t.weight(x))?;
    }
    Ok(Outcome::ok(s))
}

fn show(r: &Option<Rational>) -> String {
    r.as_ref().map_or("-".into(), Rational::to_string)
}

fn code_line(code: &LinearCode) -> String {
    let p = CodeParameters::of(code);
    format!(
        "n={} M={} ell_C={} min_hamming={} d/gamma={}",
        p.n,
        p.size,
        p.ell,
        p.min_hamming.map_or("-".into(), |l| l.to_string()),
        show(&p.d_over_gamma)
    )
}

fn bounds_text(code: &LinearCode, reports: &[BoundReport]) -> String {
    let mut s = format!("{}\n", code_line(code));
    for r in reports {
        let rel = match r.relation {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        };
        let status = match (r.applicable, r.satisfied, r.sharp) {
            (false, _, _) => "inapplicable",
            (true, false, _) => "VIOLATED",
            (true, true, true) => "sharp",
            (true, true, false) => "satisfied",
        };
        let _ = write!(s, "{:<22} {:<12}", r.bound.as_str(), status);
        if r.applicable {
            let _ = write!(s, " {} {rel} {}", show(&r.lhs), show(&r.rhs));
        } else {
            let failed: Vec<&str> =
                r.preconditions.iter().filter(|p| !p.holds).map(|p| p.description.as_str()).collect();
            let _ = write!(s, " needs: {}", failed.join("; "));
        }
        if let Some(note) = &r.note {
            let _ = write!(s, " ({note})");
        }
        s.push('\n');
    }
    s
}

fn chain_text(cert: &ChainCertificate) -> String {
    let mut s = format!("ring {}, gamma {}, r = {}\n", cert.ring, cert.gamma, cert.r);
    for (i, st) in cert.stages.iter().enumerate() {
        let _ = write!(s, "stage {i}: n={} M={} d/gamma={}", st.n, st.size, show(&st.d_over_gamma));
        if let Some(c) = &st.chosen {
            let _ = write!(s, "  c={} ell={} |Rc|={}", c.word, c.ell, c.rc_size);
        }
        s.push('\n');
    }
    let k = &cert.checks;
    let rows = [
        ("n <= d/gamma", k.n_at_most_d_over_gamma),
        ("|C_i+1| |Rc^i| = |C_i|", k.quotient_sizes),
        ("d_i+1 >= d_i - ell_i > 0", k.weight_drop),
        ("final code has constant Hamming weight", k.final_constant_hamming),
        ("|C_r| <= |R|", k.final_size_at_most_ring),
        ("|C| = prod |Rc^i| |C_r|", k.product_formula),
        ("n = sum ell_i + n_r", k.length_decomposition),
    ];
    for (what, holds) in rows {
        let _ = writeln!(s, "{:<40} {}", what, if holds { "holds" } else { "fails" });
    }
    let ci = &k.chain_inequality;
    let _ = writeln!(
        s,
        "{:<40} {} ({} >= {})",
        "chain inequality",
        if ci.holds { "holds" } else { "fails" },
        ci.n,
        ci.rhs
    );
    s
}

fn family(cmd: FamilyCmd) -> anyhow::Result<Outcome> {
    let (code, label, out) = match cmd {
        FamilyCmd::Simplex { ring, m, out } => {
            let table = load_table(&ring, &out.gamma.gamma)?;
            let label = format!("simplex code over {}, m = {m}", table.ring().spec());
            (simplex(table, m)?, label, out)
        }
        FamilyCmd::Octacode { out } => {
            let base = octacode();
            let gamma = gamma_for(base.table().ring_arc(), &out.gamma.gamma)?;
            let table = Arc::new(base.table().with_gamma(gamma)?);
            let rows: Vec<Vec<Elem>> = base.generators().iter().map(|w| w.0.clone()).collect();
            (build_code(table, rows)?, "octacode over Z4".to_string(), out)
        }
        FamilyCmd::Hjelmslev { ring, out } => {
            let table = load_table(&ring, &out.gamma.gamma)?;
            let label = format!("Hjelmslev line code over {}", table.ring().spec());
            (hjelmslev_line(table)?, label, out)
        }
    };
    if let Some(path) = &out.emit_gen {
        let rows: Vec<Vec<Elem>> = code.generators().iter().map(|w| w.0.clone()).collect();
        std::fs::write(path, format_generator(code.ring(), &rows, &label))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let report = Report::of(&code);
    let ok = report.verdict.ok();
    let text = if out.json {
        to_json(&report)?
    } else {
        let mut s = format!("{label}\n{}", bounds_text(&code, &report.bounds));
        if let Some(v) = report.verdict.chain_verified {
            let _ = writeln!(s, "residual chain: r = {}, {}", report.chain.as_ref().map_or(0, |c| c.r), if v { "verified" } else { "FAILED" });
        }
        s
    };
    Ok(Outcome::with_verdict(text, ok))
}

#[derive(Debug, Default, Serialize)]
struct Tally {
    applicable: usize,
    satisfied: usize,
    sharp: usize,
    violated: usize,
}

#[derive(Debug, Serialize)]
struct Certification {
    seed: u64,
    codes: usize,
    bounds: BTreeMap<BoundName, Tally>,
    chains_checked: usize,
    chains_failed: usize,
    violations: Vec<String>,
}

const CERTIFY_RINGS: [&str; 9] = ["Z4", "Z6", "Z8", "Z9", "GF(4)", "GF(5)", "CHAIN(2)", "M2(GF(2))", "Z2xZ3"];

fn certify(seed: u64, count: usize, json: bool) -> anyhow::Result<Outcome> {
    let tables: Vec<Arc<HomWeightTable>> =
        CERTIFY_RINGS.iter().map(|r| load_table(r, "1")).collect::<anyhow::Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Certification {
        seed,
        codes: count,
        bounds: BTreeMap::new(),
        chains_checked: 0,
        chains_failed: 0,
        violations: Vec::new(),
    };
    for _ in 0..count {
        let table = &tables[rng.gen_range(0..tables.len())];
        let q = table.ring().size();
        let n = rng.gen_range(1..=5);
        let k = rng.gen_range(1..=2);
        let rows: Vec<Vec<Elem>> = (0..k).map(|_| (0..n).map(|_| Elem(rng.gen_range(0..q) as u16)).collect()).collect();
        let code = build_code(table.clone(), rows)?;
        let describe = || {
            let gens: Vec<String> = code.generators().iter().map(|w| w.format(code.ring())).collect();
            format!("{} [{}]", code.ring().spec(), gens.join(", "))
        };
        for r in check_all(&code) {
            let t = out.bounds.entry(r.bound).or_default();
            if r.applicable {
                t.applicable += 1;
                t.satisfied += r.satisfied as usize;
                t.sharp += r.sharp as usize;
                if !r.satisfied {
                    t.violated += 1;
                    out.violations.push(format!("{}: {}", r.bound, describe()));
                }
            }
        }
        let cert = residual_chain(&code).certificate;
        if cert.checks.n_at_most_d_over_gamma {
            out.chains_checked += 1;
            if !cert.verified() {
                out.chains_failed += 1;
                out.violations.push(format!("residual chain: {}", describe()));
            }
        }
    }
    let ok = out.violations.is_empty();
    let text = if json {
        to_json(&out)?
    } else {
        let mut s = format!("seed {seed}, {count} codes\n");
        for (name, t) in &out.bounds {
            let _ = writeln!(
                s,
                "{:<22} applicable {:>4}  satisfied {:>4}  sharp {:>4}  violated {:>4}",
                name.as_str(),
                t.applicable,
                t.satisfied,
                t.sharp,
                t.violated
            );
        }
        let _ = writeln!(s, "residual chains checked {}, failed {}", out.chains_checked, out.chains_failed);
        for v in &out.violations {
            let _ = writeln!(s, "violation: {v}");
        }
        s
    };
    Ok(Outcome::with_verdict(text, ok))
}
