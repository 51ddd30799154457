//! Command-line front end. Exit status 0 means success, 1 means the command
//! ran but a requested property is false, 2 means it could not run.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::algebra::{commuting_report, commutes, frierson9_suite, order3_phase_suite, run_suite};
use crate::construct::{frierson9, lucas, FriersonParams, LucasParams};
use crate::enumerate::{
    census, enumerate_fundamental, fnc_integer_solutions, fnc_natural_solutions,
    natural_parameter_assignments, sample_verify, EnumerateOptions, Family, DEFAULT_CEILING,
};
use crate::error::{Error, Result};
use crate::exactmat::{serde_int, SquareMatrix};
use crate::format::{rational_to_json_value, read_matrix, to_grid, to_json_value};
use crate::radical::Radical;
use crate::spectra::{lucas3_inverse, matrix_power, spectral_row, spectrum_report};
use crate::verify::{recover_lucas_params, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lucas-magic", version, about = "Exact compound Lucas and Frierson magic squares")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a square from parameters.
    Generate(GenerateArgs),
    /// Check magic, regular, natural and norm properties of a matrix file.
    Verify(VerifyArgs),
    /// Eigenvalues, singular values and decomposition residuals.
    Spectra(SpectraArgs),
    /// Count or list natural squares of a level.
    Enumerate(EnumerateArgs),
    /// Integer power of a square.
    Power(PowerArgs),
    /// Exact inverse of an order-3 square.
    Inverse(InverseArgs),
    /// Exact commutator test between two squares, or a fixture suite.
    Commute(CommuteArgs),
    /// Markdown tables of order-9 spectra or per-level constants.
    Tables(TablesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Lucas,
    Frierson,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Lucas => Family::Lucas,
            FamilyArg::Frierson => Family::Frierson,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    Grid,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Markdown,
}

#[derive(Args, Debug)]
struct ParamSource {
    /// Parameter family of `--params`.
    #[arg(long, value_enum, default_value = "lucas")]
    family: FamilyArg,
    /// `c,v,y;c,v,y;...` for Lucas, `v,y;v,y;...` for Frierson, innermost level first.
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// Expected level, checked against the parameters.
    #[arg(long)]
    level: Option<usize>,
}

impl ParamSource {
    fn resolve(&self) -> Result<LucasParams> {
        let text = self
            .params
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("--params is required".into()))?;
        let p = parse_params(self.family, text)?;
        if let Some(level) = self.level {
            if level != p.level() {
                return Err(Error::InvalidArgument(format!(
                    "--level {level} but the parameters have {} levels",
                    p.level()
                )));
            }
        }
        Ok(p)
    }
}

fn parse_params(family: FamilyArg, text: &str) -> Result<LucasParams> {
    Ok(match family {
        FamilyArg::Lucas => text.parse::<LucasParams>()?,
        FamilyArg::Frierson => text.parse::<FriersonParams>()?.to_lucas(),
    })
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    source: ParamSource,
    #[arg(long, value_enum, default_value = "grid")]
    format: MatrixFormat,
    /// Write here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Magic,
    Regular,
    Natural,
    Fnc,
    /// A member of the compound Lucas family.
    Family,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,
    /// Exit 1 unless every listed property holds.
    #[arg(long, value_enum, value_delimiter = ',')]
    expect: Vec<Property>,
    /// Print only the recovered parameters (exit 1 if there are none).
    #[arg(long)]
    recover_params: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct SpectraArgs {
    #[command(flatten)]
    source: ParamSource,
    /// Matrix file of a family member, instead of `--params`.
    #[arg(long, conflicts_with = "params")]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    level: usize,
    #[arg(long, value_enum, default_value = "lucas")]
    family: FamilyArg,
    /// Deduplicate up to phase.
    #[arg(long)]
    fundamental: bool,
    /// Counts only; above the ceiling they come from closed formulas.
    #[arg(long)]
    count_only: bool,
    /// Directory receiving `parameters.txt`, one parameter string per line.
    #[arg(long)]
    emit: Option<PathBuf>,
    /// With `--emit`, also write one grid file per square.
    #[arg(long, requires = "emit")]
    matrices: bool,
    /// Highest level enumerated square by square.
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
    /// Print per-level constants for levels 1..=LEVEL instead.
    #[arg(long, conflicts_with_all = ["fundamental", "emit"])]
    census: bool,
    /// Verify this many random natural squares of the level instead.
    #[arg(long, conflicts_with_all = ["census", "fundamental", "emit"])]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Solve the squared-norm equation on the parameter values instead.
    #[arg(long, conflicts_with_all = ["census", "sample", "fundamental", "emit"])]
    norm_search: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct PowerArgs {
    #[command(flatten)]
    source: ParamSource,
    /// Exponent, at least 1.
    #[arg(short, long)]
    k: u32,
    #[arg(long, value_enum, default_value = "grid")]
    format: MatrixFormat,
}

#[derive(Args, Debug)]
struct InverseArgs {
    /// `c,v,y`
    #[arg(long, allow_hyphen_values = true)]
    params: String,
    #[arg(long, value_enum, default_value = "grid")]
    format: MatrixFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// The twelve order-9 Frierson fundamentals and their `·R` phases.
    Fier9,
    /// The eight phases of the natural order-3 square.
    Order3,
}

#[derive(Args, Debug)]
struct CommuteArgs {
    #[arg(num_args = 2, required_unless_present = "suite", conflicts_with = "suite")]
    files: Vec<PathBuf>,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
}

#[derive(Args, Debug)]
struct TablesArgs {
    /// 1: order-9 Frierson spectra, 2: per-level constants.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    which: u8,
}

/// Parses `argv` (program name first), runs and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        // A closed downstream pipe (`| head`) is not a failure.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Generate(a) => generate(a, out),
        Command::Verify(a) => verify_cmd(a, out),
        Command::Spectra(a) => spectra_cmd(a, out),
        Command::Enumerate(a) => enumerate_cmd(a, out),
        Command::Power(a) => power_cmd(a, out),
        Command::Inverse(a) => inverse_cmd(a, out),
        Command::Commute(a) => commute_cmd(a, out),
        Command::Tables(a) => tables_cmd(a, out),
    }
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn render_matrix(m: &SquareMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Grid => to_grid(m),
        MatrixFormat::Json => format!("{}\n", to_json_value(m)),
    }
}

fn generate(a: GenerateArgs, out: &mut dyn Write) -> Result<i32> {
    let text = render_matrix(&lucas(&a.source.resolve()?), a.format);
    match a.output {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn params_json(p: &LucasParams) -> Value {
    json!({
        "lucas": p.to_string(),
        "frierson": p.as_frierson().map(|f| f.to_string()),
    })
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let m = read_matrix(&a.file)?;
    if a.recover_params {
        return Ok(match recover_lucas_params(&m) {
            Some(p) => {
                write_json(out, &params_json(&p))?;
                EXIT_OK
            }
            None => {
                write_json(out, &Value::Null)?;
                EXIT_PROPERTY_FALSE
            }
        });
    }
    let r = verify(&m);
    let mut v = serde_json::to_value(&r)?;
    v["lucas_params"] = r.lucas_params.as_ref().map_or(Value::Null, params_json);
    match a.format {
        ReportFormat::Json => write_json(out, &v)?,
        ReportFormat::Markdown => {
            writeln!(out, "| property | value |\n|---|---|")?;
            for (k, val) in v.as_object().expect("report is an object") {
                let shown = match val {
                    Value::String(s) => s.clone(),
                    Value::Null => "-".into(),
                    Value::Object(o) => o["lucas"].as_str().unwrap_or("-").to_string(),
                    other => other.to_string(),
                };
                writeln!(out, "| {k} | {shown} |")?;
            }
        }
    }
    let holds = |p: &Property| match p {
        Property::Magic => r.is_magic,
        Property::Regular => r.is_regular,
        Property::Natural => r.is_natural,
        Property::Fnc => r.fnc_pass,
        Property::Family => r.lucas_params.is_some(),
    };
    Ok(if a.expect.iter().all(holds) {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FALSE
    })
}

/// Exact string first, float approximation alongside.
fn radical_json(r: &Radical) -> Value {
    let z = r.to_complex();
    let approx = if r.is_imaginary() {
        json!({ "im": z.im })
    } else {
        json!(z.re)
    };
    json!({ "exact": r.to_string(), "approx": approx })
}

fn rational_str(q: &BigRational) -> String {
    q.to_string()
}

fn spectra_cmd(a: SpectraArgs, out: &mut dyn Write) -> Result<i32> {
    let params = match &a.file {
        Some(path) => recover_lucas_params(&read_matrix(path)?).ok_or_else(|| {
            Error::InvalidArgument(format!("{} is not a compound Lucas square", path.display()))
        })?,
        None => a.source.resolve()?,
    };
    let report = spectrum_report(&params);
    let row = spectral_row(&params);
    match a.format {
        ReportFormat::Json => {
            let v = json!({
                "params": params_json(&params),
                "order": report.order,
                "mu": serde_int::to_json(&report.mu),
                "eigenvalues": report.eigenvalues.iter().map(radical_json).collect::<Vec<_>>(),
                "singular_values": report.singular_values.iter().map(radical_json).collect::<Vec<_>>(),
                "rank": report.rank,
                "jcf_residual": report.jcf_residual,
                "svd_residual": report.svd_residual,
                "u_orthogonality": report.u_orthogonality,
                "v_orthogonality": report.v_orthogonality,
                "row": {
                    "eigenvalue_magnitudes": row.eigenvalue_magnitudes.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                    "sigma_over_sqrt3": row.sigma_over_sqrt3.iter().map(rational_str).collect::<Vec<_>>(),
                },
            });
            write_json(out, &v)?;
        }
        ReportFormat::Markdown => {
            let level = params.level();
            let mut head: Vec<String> = (1..=level).map(|i| format!("\\|λ{i}\\|")).collect();
            head.extend((2..=2 * level + 1).map(|i| format!("σ{i}/√3")));
            let mut cells: Vec<String> = row.eigenvalue_magnitudes.iter().map(|r| r.to_string()).collect();
            cells.extend(row.sigma_over_sqrt3.iter().map(rational_str));
            writeln!(out, "| {} |", head.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(head.len()))?;
            writeln!(out, "| {} |", cells.join(" | "))?;
        }
    }
    Ok(EXIT_OK)
}

fn param_line(p: &LucasParams, family: Family) -> String {
    match family {
        Family::Lucas => p.to_string(),
        Family::Frierson => p.as_frierson().map_or_else(|| p.to_string(), |f| f.to_string()),
    }
}

fn emit_squares(dir: &Path, lines: &[(String, LucasParams)], matrices: bool) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut text = String::new();
    for (line, _) in lines {
        text.push_str(line);
        text.push('\n');
    }
    fs::write(dir.join("parameters.txt"), text)?;
    if matrices {
        let width = lines.len().to_string().len().max(4);
        for (i, (_, p)) in lines.iter().enumerate() {
            fs::write(dir.join(format!("{:0width$}.txt", i + 1)), to_grid(&lucas(p)))?;
        }
    }
    Ok(())
}

fn enumerate_cmd(a: EnumerateArgs, out: &mut dyn Write) -> Result<i32> {
    let family: Family = a.family.into();
    if a.census {
        return census_cmd(a.level, a.format, out);
    }
    if a.norm_search {
        if !(1..=2).contains(&a.level) {
            return Err(Error::InvalidArgument("the norm search runs for levels 1 and 2".into()));
        }
        let v = json!({
            "level": a.level,
            "norm_only": fnc_integer_solutions(a.level),
            "with_element_sum": fnc_natural_solutions(a.level),
        });
        write_json(out, &v)?;
        return Ok(EXIT_OK);
    }
    if let Some(k) = a.sample {
        let r = sample_verify(a.level, k, a.seed);
        write_json(out, &serde_json::to_value(&r)?)?;
        let ok = r.all_natural && r.all_magic && r.all_regular;
        return Ok(if ok { EXIT_OK } else { EXIT_PROPERTY_FALSE });
    }
    let listing = !a.count_only || a.emit.is_some();
    let opts = EnumerateOptions {
        emit: listing,
        ceiling: a.ceiling,
    };
    let res = enumerate_fundamental(a.level, family, opts)?;
    let squares: Vec<(String, LucasParams)> = if !listing {
        Vec::new()
    } else if a.fundamental {
        res.representatives
            .clone()
            .unwrap_or_default()
            .into_iter()
            .map(|p| (param_line(&p, family), p))
            .collect()
    } else {
        natural_parameter_assignments(a.level, family)
            .map(|p| (param_line(&p, family), p))
            .collect()
    };
    if let Some(dir) = &a.emit {
        emit_squares(dir, &squares, a.matrices)?;
    }
    let mut v = serde_json::to_value(&res)?;
    v.as_object_mut().expect("object").remove("representatives");
    if listing && a.emit.is_none() {
        v["squares"] = json!(squares.iter().map(|(l, _)| l.clone()).collect::<Vec<_>>());
    }
    write_json(out, &v)?;
    Ok(EXIT_OK)
}

fn census_cmd(max_level: usize, format: ReportFormat, out: &mut dyn Write) -> Result<i32> {
    let rows = (1..=max_level).map(census).collect::<Result<Vec<_>>>()?;
    match format {
        ReportFormat::Json => write_json(out, &serde_json::to_value(&rows)?)?,
        ReportFormat::Markdown => out.write_all(census_markdown(&rows).as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn census_markdown(rows: &[crate::enumerate::CensusRow]) -> String {
    let mut s = String::from("| ℓ | n | μ | N_L | N_F | Rank | N_SV |\n|---|---|---|---|---|---|---|\n");
    for r in rows {
        s.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            r.level, r.order, r.mu, r.lucas_fundamentals, r.frierson_fundamentals, r.rank, r.sv_classes
        ));
    }
    s
}

fn power_cmd(a: PowerArgs, out: &mut dyn Write) -> Result<i32> {
    let res = matrix_power(&a.source.resolve()?, a.k)?;
    match a.format {
        MatrixFormat::Grid => out.write_all(to_grid(&res.matrix).as_bytes())?,
        MatrixFormat::Json => write_json(
            out,
            &json!({ "method": res.method, "k": a.k, "matrix": to_json_value(&res.matrix) }),
        )?,
    }
    Ok(EXIT_OK)
}

fn inverse_cmd(a: InverseArgs, out: &mut dyn Write) -> Result<i32> {
    let p: LucasParams = a.params.parse()?;
    let [t] = p.triples() else {
        return Err(Error::InvalidArgument("inverse takes a single c,v,y triple".into()));
    };
    let inv = lucas3_inverse(&t.c, &t.v, &t.y)?;
    match a.format {
        MatrixFormat::Grid => {
            for row in inv.rows() {
                let cells: Vec<String> = row.iter().map(rational_str).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
        MatrixFormat::Json => write_json(out, &rational_to_json_value(&inv))?,
    }
    Ok(EXIT_OK)
}

fn commute_cmd(a: CommuteArgs, out: &mut dyn Write) -> Result<i32> {
    if let Some(suite) = a.suite {
        let squares = match suite {
            Suite::Fier9 => frierson9_suite(),
            Suite::Order3 => order3_phase_suite(),
        };
        let r = run_suite(&squares)?;
        write_json(out, &serde_json::to_value(&r)?)?;
        return Ok(if r.all_consistent { EXIT_OK } else { EXIT_PROPERTY_FALSE });
    }
    let (ma, mb) = (read_matrix(&a.files[0])?, read_matrix(&a.files[1])?);
    match (recover_lucas_params(&ma), recover_lucas_params(&mb)) {
        (Some(p), Some(q)) if p.level() == q.level() => {
            let r = commuting_report(&p, &q)?;
            let mut v = serde_json::to_value(&r)?;
            v["left"] = params_json(&r.left);
            v["right"] = params_json(&r.right);
            write_json(out, &v)?;
            Ok(if r.consistent { EXIT_OK } else { EXIT_PROPERTY_FALSE })
        }
        _ => {
            write_json(out, &json!({ "observed": commutes(&ma, &mb)? }))?;
            Ok(EXIT_OK)
        }
    }
}

/// Rows pairing squares with identical spectral columns.
const TABLE1_ROWS: [(char, char); 6] = [
    ('A', 'G'),
    ('D', 'J'),
    ('B', 'H'),
    ('E', 'K'),
    ('C', 'I'),
    ('F', 'L'),
];

pub fn table1_markdown() -> Result<String> {
    let mut s = String::from(
        "| v,y,s,t | \\|λ1\\| | \\|λ2\\| | σ2/√3 | σ3/√3 | σ4/√3 | σ5/√3 |\n|---|---|---|---|---|---|---|\n",
    );
    for (a, b) in TABLE1_ROWS {
        let row = |l: char| spectral_row(&frierson9(l).expect("fixture letter").to_lucas());
        let (ra, rb) = (row(a), row(b));
        if ra != rb {
            return Err(Error::Degenerate(format!("rows {a} and {b} differ")));
        }
        let mut cells: Vec<String> = ra.eigenvalue_magnitudes.iter().map(|r| r.to_string()).collect();
        cells.extend(ra.sigma_over_sqrt3.iter().map(rational_str));
        s.push_str(&format!("| {a}, {b} | {} |\n", cells.join(" | ")));
    }
    Ok(s)
}

pub fn table2_markdown() -> Result<String> {
    let rows = (1..=6).map(census).collect::<Result<Vec<_>>>()?;
    Ok(census_markdown(&rows))
}

fn tables_cmd(a: TablesArgs, out: &mut dyn Write) -> Result<i32> {
    let text = match a.which {
        1 => table1_markdown()?,
        _ => table2_markdown()?,
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}
