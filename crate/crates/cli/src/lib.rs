//! Argument grammar, dispatch and output schemas for the `weylcert` binary.
//!
//! [`run`] never exits the process; it returns the exit status together with
//! whatever would have been written to stdout and stderr.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use weylcert::bounds::{
    bounds_table, cpsk_constants, filtration_cutoff_b, BoundContext, CpskRequirement, NamedValue,
    SmallnessBound,
};
use weylcert::genericity::{
    certify_shifted_generic, classify_weight, cpsk_check, digit_vanishing_check,
    enumerate_filtration_sections, large_prime_collapse, qprime_stability, ChainLink,
    Classification, CollapsePart, CollapseReport, CpskReport, DigitVanishing, FiltrationSection,
    QPrimeReport, RouteKind, ShiftCertificate, ThresholdRecord, Verdict,
};
use weylcert::kostant::{appendix_dimension, AppendixDimension, KostantTable};
use weylcert::weights::digit_expand;
use weylcert::weyl::{alcove_representative, linked_wp, AffineElement, DEFAULT_WEYL_CAP};
use weylcert::{bounds, cite, CartanType, Error, RootSystem, Weight, WeylGroup};

/// Process exit status.
pub const EXIT_OK: i32 = 0;
pub const EXIT_HYPOTHESIS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "weylcert",
    version,
    about = "Root-system bounds and genericity certificates"
)]
struct Cli {
    /// Emit JSON instead of a text table.
    #[arg(long, global = true)]
    json: bool,
    /// Largest Weyl group that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_WEYL_CAP)]
    cap: u128,
    /// Step budget for searches over small conjugates.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Pr {
    #[arg(short = 'p')]
    p: u64,
    #[arg(short = 'r')]
    r: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root datum of a Cartan type.
    Info { cartan: CartanType },
    /// p-adic digits of a dominant weight.
    Digits {
        cartan: CartanType,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'r')]
        r: Option<u32>,
        weight: Weight,
    },
    /// Frobenius q-shift: rotate the r digits by e.
    Shift {
        cartan: CartanType,
        #[command(flatten)]
        pr: Pr,
        #[arg(short = 'e')]
        e: u64,
        weight: Weight,
    },
    /// Digit bounds, thresholds and smallness bounds.
    Bounds {
        cartan: CartanType,
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'p')]
        p: Option<u64>,
        #[arg(short = 'r')]
        r: Option<u32>,
        #[arg(long = "eps", default_value_t = 0)]
        eps: u32,
        /// Smallness of an input module.
        #[arg(short = 'b')]
        b: Option<i64>,
        #[arg(long)]
        sharp: bool,
        /// Choose m' from 3m'+2h-2 >= 6m+6h-8.
        #[arg(long)]
        alt_mprime: bool,
    },
    /// Restriction-isomorphism requirements for given (e, f).
    Cpsk {
        cartan: CartanType,
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'e')]
        e: u32,
        #[arg(short = 'f')]
        f: u32,
        #[arg(required = true)]
        weights: Vec<Weight>,
    },
    /// Shifted-generic certificate for Ext between L(lambda) and L(mu).
    Certify {
        cartan: CartanType,
        #[command(flatten)]
        pr: Pr,
        #[arg(short = 'm')]
        m: u32,
        #[arg(long = "eps", default_value_t = 0)]
        eps: u32,
        lambda: Weight,
        mu: Weight,
    },
    /// Routes identifying H^m(G(q), L(mu)) with algebraic-group cohomology.
    Classify {
        cartan: CartanType,
        #[command(flatten)]
        pr: Pr,
        #[arg(short = 'm')]
        m: u32,
        mu: Weight,
    },
    /// Large-prime decomposition and collapse.
    Collapse {
        cartan: CartanType,
        #[command(flatten)]
        pr: Pr,
        #[arg(short = 'm')]
        m: u32,
        lambda: Weight,
        mu: Weight,
    },
    /// Digit-difference vanishing test.
    Vanishing {
        cartan: CartanType,
        #[command(flatten)]
        pr: Pr,
        #[arg(short = 'm')]
        m: u32,
        lambda: Weight,
        mu: Weight,
    },
    /// Stability at q' = p^(r+1).
    Qprime {
        cartan: CartanType,
        #[command(flatten)]
        pr: Pr,
        #[arg(short = 'm')]
        m: u32,
        lambda: Weight,
        mu: Weight,
    },
    /// W_p dot-linkage with a witness.
    Linkage {
        cartan: CartanType,
        #[arg(short = 'p')]
        p: u64,
        lambda: Weight,
        mu: Weight,
    },
    /// Large-prime dimension formula for H^m(G(p), L(mu)).
    Dimension {
        cartan: CartanType,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'm')]
        m: u32,
        mu: Weight,
    },
    /// Graded Kostant partition function; NU is in simple-root coordinates.
    Kostant {
        cartan: CartanType,
        /// Number of parts; the ungraded count when omitted.
        #[arg(short = 'j')]
        j: Option<u32>,
        nu: Weight,
    },
    /// Sections of the good filtration up to the cutoff.
    Filtration {
        cartan: CartanType,
        #[command(flatten)]
        pr: Pr,
        #[arg(short = 'm', default_value_t = 0)]
        m: u32,
        /// Override the cutoff b(m, p^r).
        #[arg(short = 'b')]
        b: Option<i64>,
    },
}

// ---------------------------------------------------------------------------
// JSON schemas

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoOutput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: usize,
    pub weyl_order: u64,
    pub h: i64,
    pub t: u64,
    pub c: i64,
    pub c2rho: i64,
    pub rho: Weight,
    pub alpha0: Vec<i64>,
    pub alpha0_coroot: Vec<i64>,
    pub highest_root: Vec<i64>,
    pub dual_permutation: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitsOutput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub p: u64,
    pub r: Option<u32>,
    pub weight: Weight,
    pub digits: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftOutput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub p: u64,
    pub r: u32,
    pub e: u64,
    pub weight: Weight,
    pub digits: Vec<Weight>,
    pub shifted: Weight,
    pub shifted_digits: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsOutput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub context: BoundContext,
    pub constants: Vec<NamedValue>,
    pub smallness: Vec<SmallnessBound>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpskOutput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub requirement: CpskRequirement,
    pub report: CpskReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageOutput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub p: u64,
    pub lambda: Weight,
    pub mu: Weight,
    pub linked: bool,
    /// `lambda = witness . mu` under the dot action.
    pub witness: Option<AffineElement>,
    pub lambda_representative: Weight,
    pub mu_representative: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionOutput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub dimension: AppendixDimension,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantOutput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub nu: Vec<i64>,
    pub j: Option<u32>,
    pub value: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationOutput {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub p: u64,
    pub r: u32,
    pub m: u32,
    pub b_cutoff: i64,
    pub sections: Vec<FiltrationSection>,
}

// ---------------------------------------------------------------------------
// Text tables

const MAX_ALIGNED_WIDTH: usize = 32;

/// Rows of cells; the last cell of every row is a citation tag. Lines in
/// `header` start with `#` and carry only the inputs.
struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: impl Into<String>) -> Self {
        Table {
            header: vec![header.into()],
            rows: Vec::new(),
        }
    }

    fn row(&mut self, cells: &[&dyn ToString]) -> &mut Self {
        self.rows
            .push(cells.iter().map(|c| c.to_string()).collect());
        self
    }

    fn thresholds(&mut self, records: &[ThresholdRecord], tag: &str) -> &mut Self {
        for t in records {
            let status = if t.holds { "holds" } else { "fails" };
            let cmp = format!("{} {} {} ({status})", t.lhs, t.relation, t.rhs);
            self.row(&[&t.name, &cmp, &tag]);
        }
        self
    }

    fn chain(&mut self, links: &[ChainLink]) -> &mut Self {
        for c in links {
            self.row(&[&"iso", &c.iso, &c.cite]);
        }
        self
    }

    fn render(&self) -> String {
        let ncols = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut widths = vec![0usize; ncols];
        for row in &self.rows {
            // The citation column is never padded, and long cells overflow
            // instead of widening every row.
            for (i, cell) in row.iter().enumerate().take(row.len().saturating_sub(1)) {
                let n = cell.chars().count();
                if n <= MAX_ALIGNED_WIDTH {
                    widths[i] = widths[i].max(n);
                }
            }
        }
        let mut out = String::new();
        for h in &self.header {
            let _ = writeln!(out, "# {h}");
        }
        for row in &self.rows {
            let last = row.len() - 1;
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i == last {
                    let _ = write!(line, "[{cell}]");
                } else {
                    let pad = widths[i].saturating_sub(cell.chars().count());
                    let _ = write!(line, "{cell}{}  ", " ".repeat(pad));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn digits_literal(digits: &[Weight]) -> String {
    let parts: Vec<String> = digits.iter().map(Weight::to_string).collect();
    format!("({})", parts.join(" "))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), T::to_string)
}

fn route_cite(route: RouteKind) -> &'static str {
    match route {
        RouteKind::ShiftedGeneric => cite::SHIFTED_GENERIC,
        RouteKind::NonregularVanishing => cite::NONREGULAR_VANISHING,
        RouteKind::FiniteException | RouteKind::NoExceptionForm => cite::FINITE_EXCEPTION_FORM,
        RouteKind::ZeroDigitGeneric => cite::ZERO_DIGIT_GENERIC,
        RouteKind::DegreeZero => cite::DEGREE_ZERO,
    }
}

fn certificate_rows(t: &mut Table, c: &ShiftCertificate) {
    let tag = cite::SHIFTED_GENERIC;
    t.row(&[&"verdict", &c.verdict.as_str(), &tag])
        .row(&[
            &"lambda digits",
            &digits_literal(&c.lambda_digits),
            &cite::DIGIT_EXPANSION,
        ])
        .row(&[
            &"mu digits",
            &digits_literal(&c.mu_digits),
            &cite::DIGIT_EXPANSION,
        ])
        .row(&[&"r0", &c.r0, &tag])
        .row(&[&"d'", &c.d_prime, &tag])
        .row(&[&"e0", &c.e0, &cite::COARSE_CPSK])
        .row(&[&"f0", &c.f0, &cite::COARSE_CPSK])
        .row(&[&"g", &c.g, &tag]);
    if let Some(d) = c.deficit {
        t.row(&[&"deficit r0 - r", &d, &tag]);
    }
    if let Some(d) = c.digit_difference {
        t.row(&[&"digit difference", &d, &cite::DIGIT_BOUND_FINITE]);
    }
    if let Some(z) = c.longest_run {
        t.row(&[
            &"longest zero run",
            &format!("start {} length {}", z.start, z.length),
            &tag,
        ]);
    }
    if let Some(z) = c.zero_run {
        t.row(&[
            &"chosen zero run",
            &format!("start {} length {}", z.start, z.length),
            &tag,
        ]);
    }
    if c.verdict == Verdict::ShiftedGeneric {
        t.row(&[&"s", &opt(&c.s), &tag])
            .row(&[&"e_raw", &opt(&c.e_raw), &tag])
            .row(&[&"e", &opt(&c.e), &cite::Q_SHIFT])
            .row(&[&"lambda'", &opt(&c.lambda_prime), &cite::Q_SHIFT])
            .row(&[&"mu'", &opt(&c.mu_prime), &cite::Q_SHIFT]);
    }
    t.thresholds(&c.thresholds, tag).chain(&c.chain);
}

fn collapse_part_rows(t: &mut Table, label: &str, part: &CollapsePart, tag: &str) {
    t.row(&[&label, &serde_plain(&part.status), &tag]);
    if let Some(e) = part.e {
        t.row(&[&format!("{label} e"), &e, &cite::Q_SHIFT]);
    }
    if let Some(l) = &part.lambda_prime {
        t.row(&[&format!("{label} lambda'"), l, &cite::Q_SHIFT]);
    }
    if let Some(m) = &part.mu_prime {
        t.row(&[&format!("{label} mu'"), m, &cite::Q_SHIFT]);
    }
    if let Some(nu) = &part.nu {
        t.row(&[&format!("{label} nu"), &nu.nu, &cite::LINKAGE])
            .row(&[&format!("{label} tau"), &nu.tau, &cite::LINKAGE]);
    }
    if part.summand_vanishes {
        t.row(&[&format!("{label} summand"), &"vanishes", &tag]);
    }
    if let Some(n) = &part.note {
        t.row(&[&format!("{label} note"), n, &tag]);
    }
    t.chain(&part.chain);
}

/// The kebab-case serde name of a unit enum variant.
fn serde_plain<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::from("?"),
    }
}

// ---------------------------------------------------------------------------
// Dispatch

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Lib(Error),
    /// The command ran and produced output, but its hypothesis fails.
    Hypothesis,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::UnknownType(_) => "unknown-type",
        Error::RankOutOfRange { .. } => "rank-out-of-range",
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::NotDominant(_) => "not-dominant",
        Error::NotRestricted { .. } => "not-restricted",
        Error::NotPrime(_) => "not-prime",
        Error::Overflow(_) => "overflow",
        Error::WeylCapExceeded { .. } => "weyl-cap-exceeded",
        Error::MissingField(_) => "missing-field",
        Error::Precondition(_) => "precondition",
        Error::ThresholdNotMet { .. } => "threshold-not-met",
        Error::BudgetExhausted(_) => "budget-exhausted",
        Error::MemoCapExceeded(_) => "memo-cap-exceeded",
        Error::NotInRootLattice(_) => "not-in-root-lattice",
        Error::Parse(_) => "parse",
        Error::CertificateRejected(_) => "certificate-rejected",
        Error::Internal(_) => "internal",
    }
}

/// Malformed input exits with 2; every other library error is a failed
/// precondition or threshold and exits with 1.
fn error_status(e: &Error) -> i32 {
    match e {
        Error::UnknownType(_)
        | Error::RankOutOfRange { .. }
        | Error::DimensionMismatch { .. }
        | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_HYPOTHESIS,
    }
}

fn error_json(kind: &str, message: String) -> String {
    let body = ErrorOutput {
        error: ErrorBody {
            kind: kind.into(),
            message,
        },
    };
    serde_json::to_string(&body).expect("error body serializes") + "\n"
}

/// Accept the single-dash spelling `-eps` used in documentation.
fn normalize_args<I, S>(args: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    args.into_iter()
        .map(Into::into)
        .map(|a| {
            if a == "-eps" {
                "--eps".into()
            } else if let Some(rest) = a.strip_prefix("-eps=") {
                format!("--eps={rest}")
            } else {
                a
            }
        })
        .collect()
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let cli = match Cli::try_parse_from(normalize_args(args)) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Outcome {
                    status: EXIT_OK,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                },
                _ => Outcome {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: error_json("usage", e.render().to_string().trim_end().to_string()),
                },
            };
        }
    };
    let mut out = String::new();
    match dispatch(&cli, &mut out) {
        Ok(()) => Outcome {
            status: EXIT_OK,
            stdout: out,
            stderr: String::new(),
        },
        Err(Failure::Hypothesis) => Outcome {
            status: EXIT_HYPOTHESIS,
            stdout: out,
            stderr: error_json(
                "hypothesis-fails",
                "hypothesis not satisfied; see output".into(),
            ),
        },
        Err(Failure::Lib(e)) => Outcome {
            status: error_status(&e),
            stdout: out,
            stderr: error_json(error_kind(&e), e.to_string()),
        },
    }
}

fn emit<T: Serialize>(json: bool, out: &mut String, value: &T, table: impl FnOnce() -> Table) {
    if json {
        out.push_str(&serde_json::to_string_pretty(value).expect("output serializes"));
        out.push('\n');
    } else {
        out.push_str(&table().render());
    }
}

fn hypothesis(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Hypothesis)
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Info { cartan } => {
            let rs = RootSystem::new(*cartan)?;
            let o = InfoOutput {
                cartan_type: rs.label(),
                rank: rs.rank(),
                cartan: rs.cartan.clone(),
                positive_roots: rs.positive_roots.len(),
                weyl_order: cartan.weyl_order() as u64,
                h: rs.h,
                t: rs.t,
                c: rs.c,
                c2rho: rs.c2rho,
                rho: rs.rho.clone(),
                alpha0: rs.alpha0.clone(),
                alpha0_coroot: rs.alpha0_coroot.clone(),
                highest_root: rs.alpha_tilde.clone(),
                dual_permutation: rs.w0_perm.clone(),
            };
            emit(json, out, &o, || {
                let tag = cite::ROOT_DATUM;
                let mut t = Table::new(&o.cartan_type);
                t.row(&[&"rank", &o.rank, &tag])
                    .row(&[&"positive roots", &o.positive_roots, &tag])
                    .row(&[&"|W|", &o.weyl_order, &tag])
                    .row(&[&"h", &o.h, &tag])
                    .row(&[&"t", &o.t, &tag])
                    .row(&[&"c", &o.c, &tag])
                    .row(&[&"c(2rho)", &o.c2rho, &tag])
                    .row(&[&"rho", &o.rho, &tag])
                    .row(&[&"alpha0", &Weight::new(o.alpha0.clone()), &tag])
                    .row(&[
                        &"alpha0 coroot",
                        &Weight::new(o.alpha0_coroot.clone()),
                        &tag,
                    ])
                    .row(&[&"highest root", &Weight::new(o.highest_root.clone()), &tag]);
                let perm: Vec<i64> = o.dual_permutation.iter().map(|&i| i as i64 + 1).collect();
                t.row(&[&"-w0 permutation", &Weight::new(perm), &tag]);
                for (i, row) in o.cartan.iter().enumerate() {
                    t.row(&[
                        &format!("cartan row {}", i + 1),
                        &Weight::new(row.clone()),
                        &tag,
                    ]);
                }
                t
            });
        }
        Command::Digits {
            cartan,
            p,
            r,
            weight,
        } => {
            let rs = RootSystem::new(*cartan)?;
            let exp = digit_expand(&rs, weight, *p, *r)?;
            let o = DigitsOutput {
                cartan_type: rs.label(),
                p: *p,
                r: *r,
                weight: weight.clone(),
                digits: exp.digits,
            };
            emit(json, out, &o, || {
                let mut t = Table::new(format!(
                    "{} p={} r={} {}",
                    o.cartan_type,
                    o.p,
                    opt(&o.r),
                    o.weight
                ));
                for (i, d) in o.digits.iter().enumerate() {
                    t.row(&[&format!("digit {i}"), d, &cite::DIGIT_EXPANSION]);
                }
                t
            });
        }
        Command::Shift {
            cartan,
            pr,
            e,
            weight,
        } => {
            let rs = RootSystem::new(*cartan)?;
            let exp = digit_expand(&rs, weight, pr.p, Some(pr.r))?;
            let rot = exp.rotate(*e);
            let o = ShiftOutput {
                cartan_type: rs.label(),
                p: pr.p,
                r: pr.r,
                e: *e,
                weight: weight.clone(),
                shifted: rot.value(rs.rank())?,
                digits: exp.digits,
                shifted_digits: rot.digits,
            };
            emit(json, out, &o, || {
                let mut t = Table::new(format!(
                    "{} p={} r={} e={} {}",
                    o.cartan_type, o.p, o.r, o.e, o.weight
                ));
                t.row(&[
                    &"digits",
                    &digits_literal(&o.digits),
                    &cite::DIGIT_EXPANSION,
                ])
                .row(&[
                    &"shifted digits",
                    &digits_literal(&o.shifted_digits),
                    &cite::Q_SHIFT,
                ])
                .row(&[&"shifted", &o.shifted, &cite::Q_SHIFT]);
                t
            });
        }
        Command::Bounds {
            cartan,
            m,
            p,
            r,
            eps,
            b,
            sharp,
            alt_mprime,
        } => {
            let rs = RootSystem::new(*cartan)?;
            if let Some(p) = p {
                weylcert::arith::require_prime(*p)?;
            }
            let mut ctx = BoundContext::new(*m)
                .with_epsilon(*eps)
                .sharp(*sharp)
                .alt_mprime(*alt_mprime);
            if let Some(p) = p {
                ctx = ctx.with_p(*p);
            }
            if let Some(r) = r {
                ctx = ctx.with_r(*r);
            }
            if let Some(b) = b {
                ctx = ctx.with_input_smallness(*b);
            }
            let o = BoundsOutput {
                cartan_type: rs.label(),
                constants: bounds_table(&rs, &ctx),
                smallness: bounds::smallness_bounds(&rs, &ctx),
                context: ctx,
            };
            emit(json, out, &o, || {
                let c = &o.context;
                let mut t = Table::new(format!(
                    "{} m={} p={} r={} eps={}{}",
                    o.cartan_type,
                    c.m,
                    opt(&c.p),
                    opt(&c.r),
                    c.epsilon,
                    if c.sharp { " sharp" } else { "" }
                ));
                for v in &o.constants {
                    t.row(&[&v.name, &v.value, &v.cite]);
                }
                for s in &o.smallness {
                    let value = s.value.map_or_else(|| "overflow".into(), |v| v.to_string());
                    t.row(&[&s.name, &value, &s.formula, &s.cite]);
                }
                t
            });
        }
        Command::Cpsk {
            cartan,
            m,
            p,
            e,
            f,
            weights,
        } => {
            let rs = RootSystem::new(*cartan)?;
            let requirement = cpsk_constants(&rs, *m, *p, weights)?;
            let report = cpsk_check(&rs, weights, *m, *p, *e, *f)?;
            let passed = report.passed;
            let o = CpskOutput {
                cartan_type: rs.label(),
                requirement,
                report,
            };
            emit(json, out, &o, || {
                let q = &o.requirement;
                let mut t = Table::new(format!(
                    "{} m={} p={} e={} f={}",
                    o.cartan_type, q.m, q.p, o.report.e, o.report.f
                ));
                let tag = cite::CPSK_RESTRICTION;
                t.row(&[&"e(ctm)", &q.e_ctm, &tag])
                    .row(&[&"e_min", &q.e_min, &tag])
                    .row(&[&"f_min", &q.f_min, &tag])
                    .row(&[&"e0", &q.coarse.e0, &cite::COARSE_CPSK])
                    .row(&[&"f0", &q.coarse.f0, &cite::COARSE_CPSK]);
                for w in &q.per_weight {
                    t.row(&[&format!("c(bar {})", w.weight), &w.c_bar, &tag])
                        .row(&[&format!("t_p({})", w.weight), &w.t_p, &tag]);
                }
                t.row(&[&"passed", &o.report.passed, &tag])
                    .thresholds(&o.report.checks, tag)
                    .chain(&o.report.chain);
                t
            });
            hypothesis(passed)?;
        }
        Command::Certify {
            cartan,
            pr,
            m,
            eps,
            lambda,
            mu,
        } => {
            let rs = RootSystem::new(*cartan)?;
            let c = certify_shifted_generic(&rs, lambda, mu, pr.p, pr.r, *m, *eps)?;
            emit(json, out, &c, || {
                let mut t = Table::new(format!(
                    "{} p={} r={} m={} eps={} lambda={} mu={}",
                    c.cartan_type, c.p, c.r, c.m, c.epsilon, c.lambda, c.mu
                ));
                certificate_rows(&mut t, &c);
                t
            });
            hypothesis(c.verdict != Verdict::ThresholdNotMet)?;
        }
        Command::Classify { cartan, pr, m, mu } => {
            let rs = RootSystem::new(*cartan)?;
            let weyl = WeylGroup::new(&rs, cli.cap).ok();
            let c = classify_weight(&rs, weyl.as_ref(), mu, pr.p, pr.r, *m, cli.budget)?;
            emit(json, out, &c, || classification_table(&c));
            hypothesis(c.primary.is_some())?;
        }
        Command::Collapse {
            cartan,
            pr,
            m,
            lambda,
            mu,
        } => {
            let rs = RootSystem::new(*cartan)?;
            let weyl = WeylGroup::new(&rs, cli.cap).ok();
            let c =
                large_prime_collapse(&rs, weyl.as_ref(), lambda, mu, pr.p, pr.r, *m, cli.budget)?;
            emit(json, out, &c, || collapse_table(&rs, &c, lambda, mu));
            hypothesis(c.any_applies())?;
        }
        Command::Vanishing {
            cartan,
            pr,
            m,
            lambda,
            mu,
        } => {
            let rs = RootSystem::new(*cartan)?;
            let v = digit_vanishing_check(&rs, lambda, mu, pr.p, pr.r, *m)?;
            emit(json, out, &v, || {
                vanishing_table(&rs, &v, pr, *m, lambda, mu)
            });
        }
        Command::Qprime {
            cartan,
            pr,
            m,
            lambda,
            mu,
        } => {
            let rs = RootSystem::new(*cartan)?;
            let q = qprime_stability(&rs, lambda, mu, pr.p, pr.r, *m)?;
            emit(json, out, &q, || qprime_table(&rs, &q, lambda, mu));
        }
        Command::Linkage {
            cartan,
            p,
            lambda,
            mu,
        } => {
            let rs = RootSystem::new(*cartan)?;
            weylcert::arith::require_prime(*p)?;
            let l = linked_wp(&rs, lambda, mu, *p)?;
            let o = LinkageOutput {
                cartan_type: rs.label(),
                p: *p,
                lambda: lambda.clone(),
                mu: mu.clone(),
                linked: l.linked,
                witness: l.witness,
                lambda_representative: alcove_representative(&rs, lambda, *p)?,
                mu_representative: alcove_representative(&rs, mu, *p)?,
            };
            emit(json, out, &o, || {
                let tag = cite::LINKAGE;
                let mut t = Table::new(format!(
                    "{} p={} lambda={} mu={}",
                    o.cartan_type, o.p, o.lambda, o.mu
                ));
                t.row(&[&"linked", &o.linked, &tag])
                    .row(&[
                        &"lambda alcove representative",
                        &o.lambda_representative,
                        &tag,
                    ])
                    .row(&[&"mu alcove representative", &o.mu_representative, &tag]);
                if let Some(w) = &o.witness {
                    let rows: Vec<String> = w
                        .linear
                        .iter()
                        .map(|r| Weight::new(r.clone()).to_string())
                        .collect();
                    t.row(&[&"witness linear part", &rows.join(" "), &tag])
                        .row(&[&"witness translation", &w.translation, &tag]);
                }
                t
            });
        }
        Command::Dimension { cartan, p, m, mu } => {
            let rs = RootSystem::new(*cartan)?;
            weylcert::arith::require_prime(*p)?;
            let weyl = WeylGroup::new(&rs, cli.cap)?;
            let mut table = KostantTable::new(&rs);
            let d = appendix_dimension(&rs, &weyl, &mut table, mu, *m, *p)?;
            let mut notes = Vec::new();
            if d.m_odd {
                notes.push("m odd".to_string());
            }
            if !d.validity.prime_large {
                notes.push("p <= 12m+13h-16: formula not guaranteed".into());
            }
            if !d.validity.prime_above_weight {
                notes.push("p < (mu, alpha0^v) + h - 1: formula not guaranteed".into());
            }
            if !d.validity.lowest_alcove {
                notes.push("mu outside the closed lowest alcove: formula not guaranteed".into());
            }
            let o = DimensionOutput {
                cartan_type: rs.label(),
                dimension: d,
                notes,
            };
            emit(json, out, &o, || {
                let d = &o.dimension;
                let tag = cite::APPENDIX_DIMENSION;
                let mut t =
                    Table::new(format!("{} p={} m={} mu={}", o.cartan_type, d.p, d.m, d.mu));
                t.row(&[&"dim H^m(G(p),L(mu))", &d.value, &tag])
                    .row(&[&"p > 12m+13h-16", &d.validity.prime_large, &tag])
                    .row(&[
                        &"p >= (mu,alpha0^v)+h-1",
                        &d.validity.prime_above_weight,
                        &tag,
                    ])
                    .row(&[
                        &"mu in closed lowest alcove",
                        &d.validity.lowest_alcove,
                        &tag,
                    ]);
                for n in &o.notes {
                    t.row(&[&"note", n, &tag]);
                }
                t
            });
        }
        Command::Kostant { cartan, j, nu } => {
            let rs = RootSystem::new(*cartan)?;
            let mut table = KostantTable::new(&rs);
            let value = match j {
                Some(j) => table.graded(nu.coords(), *j)?,
                None => table.ungraded(nu.coords())?,
            };
            let o = KostantOutput {
                cartan_type: rs.label(),
                nu: nu.coords().to_vec(),
                j: *j,
                value,
            };
            emit(json, out, &o, || {
                let mut t = Table::new(format!(
                    "{} nu={} (simple-root coordinates) j={}",
                    o.cartan_type,
                    Weight::new(o.nu.clone()),
                    opt(&o.j)
                ));
                let label = if o.j.is_some() { "p_j(nu)" } else { "p(nu)" };
                t.row(&[&label, &o.value, &cite::KOSTANT_PARTITION]);
                t
            });
        }
        Command::Filtration { cartan, pr, m, b } => {
            let rs = RootSystem::new(*cartan)?;
            weylcert::arith::require_prime(pr.p)?;
            let b_cutoff = match b {
                Some(b) if *b < 0 => {
                    return Err(Error::Precondition(format!("cutoff {b} is negative")).into())
                }
                Some(b) => *b,
                None => filtration_cutoff_b(&rs, *m, Some((pr.p, pr.r))),
            };
            let o = FiltrationOutput {
                cartan_type: rs.label(),
                p: pr.p,
                r: pr.r,
                m: *m,
                b_cutoff,
                sections: enumerate_filtration_sections(&rs, b_cutoff)?,
            };
            emit(json, out, &o, || {
                let tag = cite::FILTRATION_CUTOFF;
                let mut t = Table::new(format!("{} p={} r={} m={}", o.cartan_type, o.p, o.r, o.m));
                t.row(&[&"b", &o.b_cutoff, &tag])
                    .row(&[&"sections", &o.sections.len(), &tag]);
                for s in &o.sections {
                    t.row(&[
                        &format!("gamma={} gamma*={}", s.gamma, s.gamma_star),
                        &format!("layer {}", s.layer),
                        &format!("dim {}", s.dim_product),
                        &cite::WEYL_DIMENSION,
                    ]);
                }
                t
            });
        }
    }
    Ok(())
}

fn classification_table(c: &Classification) -> Table {
    let mut t = Table::new(format!(
        "{} p={} r={} m={} mu={}",
        c.cartan_type, c.p, c.r, c.m, c.mu
    ));
    let primary = c.primary.map_or("none", |r| r.as_str());
    let primary_tag = c.primary.map_or(cite::SHIFTED_GENERIC, route_cite);
    t.row(&[&"primary route", &primary, &primary_tag]);
    for route in &c.routes {
        let tag = route_cite(route.route);
        let name = route.route.as_str();
        t.row(&[&format!("{name}: mu'"), &route.mu_prime, &tag])
            .row(&[&format!("{name}: vanishes"), &route.vanishes, &tag]);
        if let Some(e) = route.e {
            t.row(&[&format!("{name}: e"), &e, &cite::Q_SHIFT]);
        }
        if let Some(nu) = &route.nu {
            t.row(&[&format!("{name}: nu"), &nu.nu, &cite::LINKAGE]);
        }
        t.thresholds(&route.thresholds, tag).chain(&route.chain);
    }
    for n in &c.notes {
        t.row(&[&"note", n, &cite::SHIFTED_GENERIC]);
    }
    t
}

fn collapse_table(rs: &RootSystem, c: &CollapseReport, lambda: &Weight, mu: &Weight) -> Table {
    let mut t = Table::new(format!(
        "{} p={} r={} m={} lambda={} mu={}",
        rs.label(),
        c.p,
        c.r,
        c.m,
        lambda,
        mu
    ));
    t.row(&[&"b", &c.b, &cite::FILTRATION_CUTOFF])
        .row(&[
            &"index set size",
            &c.index_set.len(),
            &cite::LARGE_PRIME_DECOMPOSITION,
        ])
        .row(&[
            &"decomposition",
            &serde_plain(&c.decomposition),
            &cite::LARGE_PRIME_DECOMPOSITION,
        ])
        .thresholds(&c.thresholds, cite::LARGE_PRIME_DECOMPOSITION);
    collapse_part_rows(
        &mut t,
        "single summand",
        &c.single_summand,
        cite::LARGE_PRIME_COLLAPSE,
    );
    collapse_part_rows(
        &mut t,
        "common zero digit",
        &c.common_zero,
        cite::COMMON_ZERO_DIGIT,
    );
    t
}

fn vanishing_table(
    rs: &RootSystem,
    v: &DigitVanishing,
    pr: &Pr,
    m: u32,
    lambda: &Weight,
    mu: &Weight,
) -> Table {
    let mut t = Table::new(format!(
        "{} p={} r={} m={} lambda={} mu={}",
        rs.label(),
        pr.p,
        pr.r,
        m,
        lambda,
        mu
    ));
    t.row(&[
        &"digit difference",
        &v.digit_difference,
        &cite::DIGIT_EXPANSION,
    ])
    .row(&[&"d", &v.d, &cite::DIGIT_BOUND_FINITE])
    .row(&[&"delta(p)", &v.delta_p, &cite::DIGIT_BOUND_ALGEBRAIC])
    .row(&[&"phi(p)", &v.phi_p, &cite::DIGIT_BOUND_ALGEBRAIC])
    .row(&[&"Ext over G(q)", &v.verdict(), &cite::DIGIT_BOUND_FINITE])
    .row(&[
        &"Ext over G vanishes",
        &v.algebraic_group_vanishes,
        &cite::DIGIT_BOUND_ALGEBRAIC,
    ])
    .thresholds(&v.thresholds, cite::DIGIT_BOUND_FINITE);
    t
}

fn qprime_table(rs: &RootSystem, q: &QPrimeReport, lambda: &Weight, mu: &Weight) -> Table {
    let mut t = Table::new(format!(
        "{} p={} r={} m={} lambda={} mu={}",
        rs.label(),
        q.p,
        q.r,
        q.m,
        lambda,
        mu
    ));
    t.row(&[&"r'", &q.r_prime, &cite::QPRIME_STABILITY])
        .row(&[&"lambda'", &q.lambda_prime, &cite::Q_SHIFT])
        .row(&[&"mu'", &q.mu_prime, &cite::Q_SHIFT])
        .thresholds(&q.thresholds, cite::QPRIME_STABILITY)
        .chain(&q.chain);
    t
}
