//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a check fails or a precondition of the
//! requested construction does not hold, 2 on usage or parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::beilinson::{
    alpha_table, build_monad, build_resolution, chi_defects, default_probe_window, evaluate_criteria, AlphaTable,
    ComplexTerm,
};
use crate::cohomology::{serialize_count, serialize_signed, CohomologyVector};
use crate::error::Error;
use crate::expr::{parse_sheaf, parse_variety};
use crate::sheaf::{FormalSheaf, ProductRule};
use crate::ulrich::{classify_ulrich_lines, classify_ulrich_omega_atoms, is_ulrich, verify_regularity};
use crate::variety::SegreVeronese;

pub const SCHEMA_ID: &str = "segre-ulrich/output/v1";

#[derive(Debug, Parser)]
#[command(name = "segre-ulrich", version, about = "Cohomology, Ulrich bundles and Beilinson monads on Segre-Veronese varieties")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// How to evaluate products of two cotangent factors.
    #[arg(long, value_enum, default_value_t = RuleArg::Strict, global = true)]
    product_rule: RuleArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    Strict,
    Schur,
}

impl From<RuleArg> for ProductRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Strict => ProductRule::Strict,
            RuleArg::Schur => ProductRule::Schur,
        }
    }
}

#[derive(Debug, Args)]
struct VarietyArg {
    /// e.g. "n=2,1;k=1,3"
    #[arg(long)]
    variety: String,
}

#[derive(Debug, Args)]
struct SheafArgs {
    #[command(flatten)]
    variety: VarietyArg,
    /// e.g. "2*O(0)xO(1) + Om(a=1;t=2)xO(0)"
    #[arg(long, allow_hyphen_values = true)]
    sheaf: String,
}

#[derive(Debug, Clone, Copy)]
enum QArg {
    Top,
    Index(usize),
}

fn parse_q(s: &str) -> std::result::Result<QArg, String> {
    if s == "d" {
        Ok(QArg::Top)
    } else {
        s.parse().map(QArg::Index).map_err(|_| format!("expected a nonnegative integer or `d`, got `{s}`"))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cohomology vector of a sheaf, optionally twisted.
    Cohom {
        #[command(flatten)]
        sheaf: SheafArgs,
        /// Comma separated twist c_1,..,c_s.
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<String>,
    },
    /// Ulrich checks and classifications.
    #[command(subcommand)]
    Ulrich(UlrichCommand),
    /// Full alpha table with the naturality flag.
    AlphaTable {
        #[command(flatten)]
        sheaf: SheafArgs,
    },
    /// Resolution of V(-qh) read off the alpha table.
    Resolution {
        #[command(flatten)]
        sheaf: SheafArgs,
        /// 0, 1, d or any q whose complex is one-sided.
        #[arg(long, value_parser = parse_q)]
        q: QArg,
    },
    /// Monad with homology V(-qh).
    Monad {
        #[command(flatten)]
        sheaf: SheafArgs,
        #[arg(long, value_parser = parse_q)]
        q: QArg,
    },
    /// Regularity vanishings on the grid |j| <= J.
    Regularity {
        #[command(flatten)]
        sheaf: SheafArgs,
        #[arg(long, default_value_t = 3)]
        grid: u32,
    },
    /// Splitting criteria hypotheses on two-factor varieties.
    Criteria {
        #[command(flatten)]
        sheaf: SheafArgs,
    },
    /// Ambient variety data.
    #[command(subcommand)]
    Variety(VarietyCommand),
}

#[derive(Debug, Subcommand)]
enum UlrichCommand {
    /// Ulrich certificate; exit 1 when the sheaf is not Ulrich.
    Check {
        #[command(flatten)]
        sheaf: SheafArgs,
    },
    /// All Ulrich line bundles.
    ClassifyLines {
        #[command(flatten)]
        variety: VarietyArg,
    },
    /// All Ulrich box products of twisted cotangent powers.
    ClassifyOmega {
        #[command(flatten)]
        variety: VarietyArg,
    },
}

#[derive(Debug, Subcommand)]
enum VarietyCommand {
    /// Degree, dimension, canonical class and collection size.
    Info {
        #[command(flatten)]
        variety: VarietyArg,
    },
}

/// One command's result in all three renderings.
struct Rendered {
    command: &'static str,
    json: serde_json::Value,
    text: String,
    csv: Vec<Vec<String>>,
    status: i32,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: &'a str,
    command: &'a str,
    status: i32,
    result: &'a serde_json::Value,
}

/// Runs the command line `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let rendered = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let body = match cli.format {
        Format::Json => {
            let env = Envelope {
                schema: SCHEMA_ID,
                command: rendered.command,
                status: rendered.status,
                result: &rendered.json,
            };
            serde_json::to_string_pretty(&env).expect("serializable") + "\n"
        }
        Format::Text => rendered.text,
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            for row in &rendered.csv {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf8")
        }
    };
    if out.write_all(body.as_bytes()).is_err() {
        return 1;
    }
    rendered.status
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::InvalidVariety(_)
        | Error::InvalidFactor { .. }
        | Error::ArityMismatch { .. }
        | Error::DimensionMismatch { .. }
        | Error::TwistLength { .. }
        | Error::QOutOfRange { .. } => 2,
        _ => 1,
    }
}

fn dispatch(cli: &Cli) -> crate::Result<Rendered> {
    let rule = ProductRule::from(cli.product_rule);
    match &cli.command {
        Command::Cohom { sheaf, twist } => {
            let (x, v) = load(sheaf)?;
            let twist = match twist {
                Some(s) => parse_twist(s, x.factors())?,
                None => vec![0; x.factors()],
            };
            cohom(&v.twist(&twist), &twist)
        }
        Command::Ulrich(UlrichCommand::Check { sheaf }) => {
            let (x, v) = load(sheaf)?;
            ulrich_check(&x, &v)
        }
        Command::Ulrich(UlrichCommand::ClassifyLines { variety }) => classify_lines(&parse_variety(&variety.variety)?),
        Command::Ulrich(UlrichCommand::ClassifyOmega { variety }) => classify_omega(&parse_variety(&variety.variety)?),
        Command::AlphaTable { sheaf } => {
            let (x, v) = load(sheaf)?;
            Ok(render_table(&alpha_table(&v, &x, rule)?))
        }
        Command::Resolution { sheaf, q } => {
            let (x, v) = load(sheaf)?;
            let table = alpha_table(&v, &x, rule)?;
            resolution(&table, resolve_q(*q, &x)?)
        }
        Command::Monad { sheaf, q } => {
            let (x, v) = load(sheaf)?;
            let table = alpha_table(&v, &x, rule)?;
            monad(&table, resolve_q(*q, &x)?)
        }
        Command::Regularity { sheaf, grid } => {
            let (x, v) = load(sheaf)?;
            regularity(&x, &v, *grid, rule)
        }
        Command::Criteria { sheaf } => {
            let (x, v) = load(sheaf)?;
            criteria(&x, &v, rule)
        }
        Command::Variety(VarietyCommand::Info { variety }) => Ok(variety_info(&parse_variety(&variety.variety)?)),
    }
}

fn load(args: &SheafArgs) -> crate::Result<(SegreVeronese, FormalSheaf)> {
    let x = parse_variety(&args.variety.variety)?;
    let v = parse_sheaf(&args.sheaf, &x)?;
    Ok((x, v))
}

fn parse_twist(s: &str, len: usize) -> crate::Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        let v = part.trim().parse().map_err(|_| Error::Syntax {
            offset,
            message: format!("expected an integer, got `{part}`"),
        })?;
        out.push(v);
        offset += part.len() + 1;
    }
    if out.len() != len {
        return Err(Error::TwistLength {
            expected: len,
            got: out.len(),
        });
    }
    Ok(out)
}

fn resolve_q(q: QArg, x: &SegreVeronese) -> crate::Result<usize> {
    let d = x.dim();
    match q {
        QArg::Top => Ok(d),
        QArg::Index(q) if q <= d => Ok(q),
        QArg::Index(q) => Err(Error::QOutOfRange { q, d }),
    }
}

/// Left-aligned columns separated by two spaces.
fn align(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; width];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn cells<T: ToString>(v: impl IntoIterator<Item = T>) -> Vec<String> {
    v.into_iter().map(|x| x.to_string()).collect()
}

fn twist_label(t: &[i64]) -> String {
    format!("O({})", cells(t).join(","))
}

fn cohom(v: &FormalSheaf, twist: &[i64]) -> crate::Result<Rendered> {
    let h = v.kunneth_cohomology();
    #[derive(Serialize)]
    struct Out<'a> {
        sheaf: &'a FormalSheaf,
        twist: &'a [i64],
        cohomology: &'a CohomologyVector,
        #[serde(serialize_with = "serialize_signed")]
        euler_characteristic: BigInt,
    }
    let chi = h.euler_characteristic();
    let mut rows = vec![
        vec!["sheaf".to_string(), v.to_string()],
        vec!["twist".to_string(), cells(twist).join(",")],
        vec!["cohomology".to_string(), h.to_string()],
        vec!["chi".to_string(), chi.to_string()],
    ];
    rows.extend(h.dims().iter().enumerate().map(|(i, x)| vec![format!("h^{i}"), x.to_string()]));
    let mut csv = vec![cells(["degree", "dim"])];
    csv.extend(h.dims().iter().enumerate().map(|(i, x)| vec![i.to_string(), x.to_string()]));
    Ok(Rendered {
        command: "cohom",
        json: json(&Out {
            sheaf: v,
            twist,
            cohomology: &h,
            euler_characteristic: chi,
        }),
        text: align(&rows),
        csv,
        status: 0,
    })
}

fn ulrich_check(x: &SegreVeronese, v: &FormalSheaf) -> crate::Result<Rendered> {
    let cert = is_ulrich(v, x)?;
    let mut rows = vec![
        vec!["variety".to_string(), x.to_string()],
        vec!["sheaf".to_string(), v.to_string()],
        vec!["ulrich".to_string(), cert.verdict.to_string()],
    ];
    if let Some(w) = &cert.witness {
        rows.push(vec!["witness".to_string(), format!("h^{}(V(-{}h)) = {}", w.degree, w.twist, w.dim)]);
    }
    rows.push(vec!["h^0".to_string(), cert.h0.to_string()]);
    rows.push(vec!["rank*deg".to_string(), cert.degree_rank_product.to_string()]);
    let mut text = align(&rows);
    let mut table = vec![cells(["t", "cohomology of V(-th)"])];
    table.extend(cert.table.iter().enumerate().map(|(i, h)| vec![(i + 1).to_string(), h.to_string()]));
    text.push('\n');
    text.push_str(&align(&table));
    let mut csv = vec![std::iter::once("t".to_string())
        .chain((0..=x.dim()).map(|i| format!("h{i}")))
        .collect::<Vec<_>>()];
    for (i, h) in cert.table.iter().enumerate() {
        csv.push(std::iter::once((i + 1).to_string()).chain(cells(h.dims())).collect());
    }
    Ok(Rendered {
        command: "ulrich check",
        status: if cert.verdict { 0 } else { 1 },
        json: json(&cert),
        text,
        csv,
    })
}

fn classify_lines(x: &SegreVeronese) -> crate::Result<Rendered> {
    let c = classify_ulrich_lines(x)?;
    let mut text: String = c.members.iter().map(|m| twist_label(m) + "\n").collect();
    if c.members.is_empty() {
        text.push_str("none\n");
    }
    text.push_str(&format!(
        "searched 0 <= a <= ({}), {} candidates, {} shell points\n",
        cells(&c.upper).join(","),
        c.tested,
        c.shell_tested
    ));
    let mut csv = vec![(1..=x.factors()).map(|i| format!("a{i}")).collect::<Vec<_>>()];
    csv.extend(c.members.iter().map(cells));
    Ok(Rendered {
        command: "ulrich classify-lines",
        json: json(&c),
        text,
        csv,
        status: 0,
    })
}

fn classify_omega(x: &SegreVeronese) -> crate::Result<Rendered> {
    let c = classify_ulrich_omega_atoms(x)?;
    let mut text: String = c.members.iter().map(|m| format!("{m}\n")).collect();
    if c.members.is_empty() {
        text.push_str("none\n");
    }
    text.push_str(&format!("{} candidates, {} shell points\n", c.tested, c.shell_tested));
    let mut csv = vec![(1..=x.factors()).flat_map(|i| [format!("a{i}"), format!("t{i}")]).collect::<Vec<_>>()];
    csv.extend(c.members.iter().map(|m| {
        m.factors()
            .iter()
            .flat_map(|f| [f.p().to_string(), f.t().to_string()])
            .collect()
    }));
    Ok(Rendered {
        command: "ulrich classify-omega",
        json: json(&c),
        text,
        csv,
        status: 0,
    })
}

fn render_table(t: &AlphaTable) -> Rendered {
    let mut rows = vec![std::iter::once("i".to_string()).chain(t.indices.iter().map(ToString::to_string)).collect()];
    for (i, row) in t.entries.iter().enumerate() {
        rows.push(std::iter::once(i.to_string()).chain(cells(row)).collect());
    }
    let text = format!("{}natural  {}\n", align(&rows), t.natural);
    let s = t.variety.factors();
    let mut csv = vec![std::iter::once("i".to_string())
        .chain((1..=s).map(|r| format!("a{r}")))
        .chain(std::iter::once("alpha".to_string()))
        .collect::<Vec<_>>()];
    for (i, row) in t.entries.iter().enumerate() {
        for (idx, v) in t.indices.iter().zip(row) {
            csv.push(
                std::iter::once(i.to_string())
                    .chain(cells(&idx.0))
                    .chain(std::iter::once(v.to_string()))
                    .collect(),
            );
        }
    }
    Rendered {
        command: "alpha-table",
        json: json(t),
        text,
        csv,
        status: 0,
    }
}

fn term_rows(terms: &[ComplexTerm], s: usize) -> Vec<Vec<String>> {
    let mut csv = vec![cells(["degree", "weight"])
        .into_iter()
        .chain((1..=s).map(|r| format!("a{r}")))
        .chain(std::iter::once("multiplicity".to_string()))
        .collect::<Vec<_>>()];
    for t in terms {
        for sm in &t.summands {
            csv.push(
                [t.degree.to_string(), t.weight.to_string()]
                    .into_iter()
                    .chain(cells(&sm.index.0))
                    .chain(std::iter::once(sm.multiplicity.to_string()))
                    .collect(),
            );
        }
    }
    csv
}

#[derive(Serialize)]
struct Checks {
    #[serde(serialize_with = "serialize_count")]
    rank: BigUint,
    #[serde(serialize_with = "serialize_signed")]
    rank_sum: BigInt,
    chi_window: [i64; 2],
    chi_defects: Vec<i64>,
}

fn checks(c: &crate::beilinson::BeilinsonComplex) -> Checks {
    let window = default_probe_window(&c.variety);
    Checks {
        rank: c.target.rank(),
        rank_sum: c.rank_sum(),
        chi_window: [*window.start(), *window.end()],
        chi_defects: chi_defects(c, window),
    }
}

fn check_text(ch: &Checks) -> String {
    let chi = if ch.chi_defects.is_empty() {
        "ok".to_string()
    } else {
        format!("fails at t = {}", cells(&ch.chi_defects).join(","))
    };
    align(&[
        vec!["rank sum".to_string(), format!("{} (rank {})", ch.rank_sum, ch.rank)],
        vec![format!("chi on [{},{}]", ch.chi_window[0], ch.chi_window[1]), chi],
    ])
}

fn resolution(table: &AlphaTable, q: usize) -> crate::Result<Rendered> {
    let r = build_resolution(table, q)?;
    let ch = checks(&r.complex);
    #[derive(Serialize)]
    struct Out<'a> {
        q: usize,
        side: crate::beilinson::TargetSide,
        display: String,
        terms: &'a [ComplexTerm],
        checks: &'a Checks,
    }
    let status = if ch.chi_defects.is_empty() { 0 } else { 1 };
    Ok(Rendered {
        command: "resolution",
        json: json(&Out {
            q,
            side: r.side,
            display: r.to_string(),
            terms: &r.terms,
            checks: &ch,
        }),
        text: format!("{r}\n{}", check_text(&ch)),
        csv: term_rows(&r.terms, table.variety.factors()),
        status,
    })
}

fn monad(table: &AlphaTable, q: usize) -> crate::Result<Rendered> {
    let m = build_monad(table, q)?;
    let ch = checks(&m.complex);
    #[derive(Serialize)]
    struct Out<'a> {
        #[serde(flatten)]
        shape: &'a crate::beilinson::MonadShape,
        split: bool,
        checks: &'a Checks,
    }
    let status = if ch.chi_defects.is_empty() { 0 } else { 1 };
    Ok(Rendered {
        command: "monad",
        json: json(&Out {
            shape: &m,
            split: m.is_split(),
            checks: &ch,
        }),
        text: format!("{m}\n{}", check_text(&ch)),
        csv: term_rows(&m.complex.terms, table.variety.factors()),
        status,
    })
}

fn regularity(x: &SegreVeronese, v: &FormalSheaf, grid: u32, rule: ProductRule) -> crate::Result<Rendered> {
    let r = verify_regularity(v, x, grid, rule)?;
    let mut text = align(&[
        vec!["grid".to_string(), grid.to_string()],
        vec!["checks".to_string(), r.checks.to_string()],
        vec!["violations".to_string(), r.violations.len().to_string()],
        vec!["passed".to_string(), r.passed.to_string()],
    ]);
    let mut csv = vec![cells(["family", "degree", "shift", "tensor", "dim"])];
    for vi in &r.violations {
        let family = json(&vi.family).as_str().unwrap_or_default().to_string();
        text.push_str(&format!(
            "  {family}: h^{}(V({}h) (x) {}) = {}\n",
            vi.degree, vi.shift, vi.tensor, vi.dim
        ));
        csv.push(vec![family, vi.degree.to_string(), vi.shift.to_string(), vi.tensor.to_string(), vi.dim.to_string()]);
    }
    Ok(Rendered {
        command: "regularity",
        status: if r.passed { 0 } else { 1 },
        json: json(&r),
        text,
        csv,
    })
}

fn criteria(x: &SegreVeronese, v: &FormalSheaf, rule: ProductRule) -> crate::Result<Rendered> {
    let r = evaluate_criteria(v, x, rule)?;
    let mut text = format!("ulrich  {}\n", r.ulrich);
    let mut csv = vec![cells(["criterion", "applicable", "hypothesis", "input_matches_conclusion"])];
    let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
    for c in &r.criteria {
        let name = json(&c.criterion).as_str().unwrap_or_default().to_string();
        text.push_str(&format!("\n{name}\n"));
        let mut rows = Vec::new();
        match &c.scope {
            Some(scope) => rows.push(vec!["  scope".into(), scope.clone()]),
            None => {
                rows.push(vec!["  hypothesis".into(), opt(c.hypothesis)]);
                for nv in &c.values {
                    rows.push(vec![format!("  {}", nv.name), nv.value.to_string()]);
                }
            }
        }
        rows.push(vec!["  conclusion".into(), c.conclusion.clone()]);
        if c.applicable {
            rows.push(vec!["  input matches".into(), opt(c.input_matches_conclusion)]);
        }
        text.push_str(&align(&rows));
        csv.push(vec![name, c.applicable.to_string(), opt(c.hypothesis), opt(c.input_matches_conclusion)]);
    }
    Ok(Rendered {
        command: "criteria",
        json: json(&r),
        text,
        csv,
        status: 0,
    })
}

fn variety_info(x: &SegreVeronese) -> Rendered {
    #[derive(Serialize)]
    struct Out<'a> {
        variety: &'a SegreVeronese,
        descriptor: String,
        dimension: usize,
        #[serde(serialize_with = "serialize_count")]
        degree: BigUint,
        canonical: Vec<i64>,
        collection_size: usize,
    }
    let out = Out {
        variety: x,
        descriptor: x.to_string(),
        dimension: x.dim(),
        degree: x.degree(),
        canonical: x.canonical(),
        collection_size: x.collection_indices().len(),
    };
    let rows = vec![
        vec!["variety".to_string(), out.descriptor.clone()],
        vec!["dimension".to_string(), out.dimension.to_string()],
        vec!["degree".to_string(), out.degree.to_string()],
        vec!["canonical".to_string(), twist_label(&out.canonical)],
        vec!["collection size".to_string(), out.collection_size.to_string()],
    ];
    let csv = vec![
        cells(["descriptor", "dimension", "degree", "canonical", "collection_size"]),
        vec![
            out.descriptor.clone(),
            out.dimension.to_string(),
            out.degree.to_string(),
            cells(&out.canonical).join(" "),
            out.collection_size.to_string(),
        ],
    ];
    Rendered {
        command: "variety info",
        json: json(&out),
        text: align(&rows),
        csv,
        status: 0,
    }
}
