use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use warping_core::generators::{braid_closure, chain, pretzel_odd, random_braid_closure, random_diagram, torus_2p};
use warping_core::matrix::{build_matrix, ld_min_matrix_with, LinkingMatrix};
use warping_core::normalize::{normalize, OuWord};
use warping_core::split::{complete_splitting_bounds, splitting_bounds, BoundInterval};
use warping_core::verify::{
    census_min, linking_numbers, property_c, summary, total_linking_number, verify_all, CensusMetric, Claim,
    VerificationReport,
};
use warping_core::warping::{d_unoriented_with, warping_report, BaseSequence, Limits, DEFAULT_MAX_COMPONENTS};
use warping_core::{Error, LinkDiagram};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "warping",
    version,
    about = "Warping degrees, linking numbers and splitting bounds of knot and link diagrams"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of components searched over.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COMPONENTS)]
    max_r: usize,
    /// Seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts, warping degrees, the linking matrix and linking numbers.
    Compute {
        /// Diagram file, or `-` for stdin.
        path: String,
        /// Component order for a based report, 1-based, e.g. `2,1,3`.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Base position per component for a based report, 1-based.
        #[arg(long, value_delimiter = ',')]
        base: Option<Vec<usize>>,
    },
    /// Checks the inequalities; exits 1 if any fails.
    Verify {
        path: String,
        /// Claims to check, by name; all applicable claims by default.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
    },
    /// Cancels `ou` factors of an o/u word.
    Normalize { word: String },
    /// Minimizes the upper-triangular sum of a square matrix over orders.
    Matrix {
        /// Rows separated by `;`, entries by spaces or commas.
        rows: String,
    },
    /// Interval bounds for splitting numbers.
    Split { path: String },
    /// Generates a diagram in the text format.
    Gen(GenArgs),
    /// Minimum of a metric over several diagrams of the same link.
    Census {
        paths: Vec<String>,
        /// `e` (d + d(-D) at minimal crossing number), `f` (d + d(-D) + sr) or `sr`.
        #[arg(long, default_value = "f")]
        metric: String,
    },
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// Odd-type pretzel knot, e.g. `3,-3,5`.
    Pretzel {
        #[arg(value_delimiter = ',', allow_hyphen_values = true)]
        entries: Vec<i32>,
    },
    /// `(2, p)` torus knot or link.
    Torus {
        #[arg(allow_hyphen_values = true)]
        p: i32,
    },
    /// Chain of `n` circles.
    Chain { n: usize },
    /// Closure of a braid word such as `1,-2,1`.
    Braid {
        #[arg(long)]
        strands: usize,
        #[arg(value_delimiter = ',', allow_hyphen_values = true)]
        word: Vec<i32>,
    },
    /// Random braid closure; uses `--seed`.
    RandomBraid {
        #[arg(long, default_value_t = 3)]
        strands: usize,
        #[arg(long, default_value_t = 8)]
        length: usize,
    },
    /// Random abstract code; uses `--seed`.
    Random {
        /// Largest crossing count.
        #[arg(long, default_value_t = 6)]
        c: usize,
        /// Number of components.
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
}

enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let limits = Limits {
        max_components: cli.max_r,
    };
    match &cli.command {
        Command::Compute { path, order, base } => {
            compute(cli, &load(path)?, order.as_deref(), base.as_deref(), &limits)
        }
        Command::Verify { path, claims } => verify(cli, &load(path)?, claims.as_deref(), &limits),
        Command::Normalize { word } => normalize_cmd(cli, word),
        Command::Matrix { rows } => matrix_cmd(cli, rows, &limits),
        Command::Split { path } => split_cmd(cli, &load(path)?, &limits),
        Command::Gen(args) => gen(cli, &args.family),
        Command::Census { paths, metric } => census(cli, paths, metric, &limits),
    }
}

fn load(path: &str) -> std::result::Result<LinkDiagram, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?
    };
    let diagram = LinkDiagram::parse(&text)?;
    for w in diagram.warnings() {
        eprintln!("warning: {w}");
    }
    Ok(diagram)
}

fn emit(cli: &Cli, command: &str, mut body: Value, text: impl FnOnce() -> String) {
    if cli.json {
        body["schema_version"] = json!(SCHEMA_VERSION);
        body["command"] = json!(command);
        let _ = writeln!(
            io::stdout().lock(),
            "{}",
            serde_json::to_string_pretty(&body).expect("values serialize")
        );
    } else {
        let _ = write!(io::stdout().lock(), "{}", text());
    }
}

fn one_based(v: &[usize]) -> String {
    v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn to_zero_based(v: &[usize], what: &str) -> std::result::Result<Vec<usize>, Failure> {
    v.iter()
        .map(|&i| {
            i.checked_sub(1)
                .ok_or_else(|| Failure::Input(format!("{what} entries are 1-based")))
        })
        .collect()
}

fn matrix_text(m: &LinkingMatrix) -> String {
    m.rows()
        .iter()
        .map(|row| format!("  {}\n", row.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")))
        .collect()
}

fn compute(cli: &Cli, d: &LinkDiagram, order: Option<&[usize]>, base: Option<&[usize]>, limits: &Limits) -> Outcome {
    let s = summary(d, limits)?;
    let unoriented = d_unoriented_with(d, limits)?;
    let component_degrees = warping_core::verify::component_degrees(d)?;
    let r = d.component_count();
    let min_base = BaseSequence::new(s.ld_order.clone(), vec![0; r]);
    let matrix = build_matrix(d, &min_base)?;
    let links = linking_numbers(d);
    let total = total_linking_number(d);
    let pc = property_c(d);
    let f = s.d + s.d_inverse + s.sr;

    let based = if order.is_some() || base.is_some() {
        let order = match order {
            Some(o) => to_zero_based(o, "order")?,
            None => (0..r).collect(),
        };
        let positions = match base {
            Some(b) => to_zero_based(b, "base")?,
            None => vec![0; r],
        };
        let a = BaseSequence::new(order, positions);
        a.validate(d)?;
        Some((warping_report(d, &a)?, build_matrix(d, &a)?, a))
    } else {
        None
    };

    let body = json!({
        "crossings": s.crossings,
        "linking_crossings": s.linking_crossings,
        "sr": s.sr,
        "component_degrees": component_degrees,
        "ld": s.ld,
        "ld_order": s.ld_order.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "d": s.d,
        "d_inverse": s.d_inverse,
        "d_unoriented": unoriented.value,
        "linking_matrix": matrix.rows(),
        "linking_numbers": links.iter().map(|(i, j, l)| json!({"i": i + 1, "j": j + 1, "link": l})).collect::<Vec<_>>(),
        "total_linking": total,
        "crossing_bound": {"lhs": f, "rhs": s.crossings, "equality": f == s.crossings, "property_c": pc.holds},
        "based": based.as_ref().map(|(report, m, a)| json!({
            "order": a.order().iter().map(|i| i + 1).collect::<Vec<_>>(),
            "positions": a.positions().iter().map(|i| i + 1).collect::<Vec<_>>(),
            "warping_degree": report.warping_degree,
            "linking_warping_degree": report.linking_warping_degree,
            "linking_matrix": m.rows(),
        })),
        "warnings": d.warnings().iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    emit(cli, "compute", body, || {
        let mut out = format!("c = {}, lc = {}, sr = {}\n", s.crossings, s.linking_crossings, s.sr);
        for (i, v) in component_degrees.iter().enumerate() {
            out += &format!("d(D^{}) = {v}\n", i + 1);
        }
        out += &format!("ld(D) = {} at order ({})\n", s.ld, one_based(&s.ld_order));
        out += &format!(
            "d(D) = {}\nd(-D) = {}\nd(|D|) = {}\n",
            s.d, s.d_inverse, unoriented.value
        );
        out += &format!(
            "d(D) + d(-D) + sr = {f} {} c = {}{}\n",
            if f == s.crossings { "=" } else { "<" },
            s.crossings,
            if pc.holds { " (property C holds)" } else { "" }
        );
        out += &format!(
            "linking matrix at order ({}):\n{}",
            one_based(&s.ld_order),
            matrix_text(&matrix)
        );
        for (i, j, l) in &links {
            out += &format!("Link({},{}) = {l}\n", i + 1, j + 1);
        }
        out += &format!("total linking = {total}\n");
        if let Some((report, m, a)) = &based {
            out += &format!(
                "based at order ({}) positions ({}): d(D_a) = {}, ld(D_a) = {}\n{}",
                one_based(a.order()),
                one_based(a.positions()),
                report.warping_degree,
                report.linking_warping_degree,
                matrix_text(m)
            );
        }
        out
    });
    Ok(())
}

fn report_line(r: &VerificationReport) -> String {
    let rel = match r.relation {
        warping_core::verify::Relation::AtMost => "<=",
        warping_core::verify::Relation::Equal => "==",
        warping_core::verify::Relation::CongruentMod2 => "≡ (mod 2)",
    };
    let mut line = format!(
        "{}: {} ({} {rel} {})",
        r.claim,
        if r.holds { "holds" } else { "FAILS" },
        r.lhs,
        r.rhs
    );
    if let Some(e) = r.equality {
        line += &format!(", equality {}", if e { "yes" } else { "no" });
    }
    if let Some(c) = r.condition {
        line += &format!(", condition {}", if c { "yes" } else { "no" });
    }
    line + "\n"
}

fn verify(cli: &Cli, d: &LinkDiagram, filter: Option<&[String]>, limits: &Limits) -> Outcome {
    let claims: Vec<Claim> = match filter {
        Some(names) => names.iter().map(|n| n.parse::<Claim>()).collect::<Result<_, _>>()?,
        None => Claim::ALL.to_vec(),
    };
    let reports = verify_all(d, &claims, limits)?;
    let all_hold = reports.iter().all(|r| r.holds);
    emit(cli, "verify", json!({"all_hold": all_hold, "reports": reports}), || {
        reports.iter().map(report_line).collect()
    });
    if all_hold {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn normalize_cmd(cli: &Cli, word: &str) -> Outcome {
    let w: OuWord = word.parse()?;
    let n = normalize(&w);
    emit(
        cli,
        "normalize",
        json!({"input": w, "normalized": n, "length": n.len()}),
        || format!("{n} (len {})\n", n.len()),
    );
    Ok(())
}

fn matrix_cmd(cli: &Cli, rows: &str, limits: &Limits) -> Outcome {
    let m: LinkingMatrix = rows.parse()?;
    let best = ld_min_matrix_with(&m, limits)?;
    let order: Vec<usize> = best.permutation.iter().map(|i| i + 1).collect();
    emit(
        cli,
        "matrix",
        json!({"ld": best.value, "order": order, "upper_sum": m.upper_sum()}),
        || format!("ld={}, order=({})\n", best.value, one_based(&best.permutation)),
    );
    Ok(())
}

fn interval_json(b: &BoundInterval) -> Value {
    json!({
        "lower": b.lower,
        "upper": b.upper,
        "exact": b.exact(),
        "lower_certificate": b.lower_certificate,
        "upper_certificate": b.upper_certificate,
        "target": b.target,
    })
}

fn interval_text(name: &str, b: &BoundInterval) -> String {
    let ids: Vec<String> = b.upper_certificate.iter().map(ToString::to_string).collect();
    let exact = b.exact().map(|v| format!(" exact {v}")).unwrap_or_default();
    format!(
        "{name}: [{}, {}]{exact}\n  lower: {}\n  upper: change {{{}}}\n",
        b.lower,
        b.upper,
        b.lower_certificate,
        ids.join(", ")
    )
}

fn split_cmd(cli: &Cli, d: &LinkDiagram, limits: &Limits) -> Outcome {
    let complete = complete_splitting_bounds(d, limits)?;
    let partial = splitting_bounds(d, limits)?;
    emit(
        cli,
        "split",
        json!({"complete": interval_json(&complete), "partial": interval_json(&partial)}),
        || interval_text("complete (lsplit, split)", &complete) + &interval_text("partial (lSplit, Split)", &partial),
    );
    Ok(())
}

fn gen(cli: &Cli, family: &Family) -> Outcome {
    let d = match family {
        Family::Pretzel { entries } => pretzel_odd(entries)?,
        Family::Torus { p } => torus_2p(*p)?,
        Family::Chain { n } => chain(*n)?,
        Family::Braid { strands, word } => braid_closure(*strands, word)?,
        Family::RandomBraid { strands, length } => random_braid_closure(cli.seed, *strands, *length)?,
        Family::Random { c, r } => random_diagram(cli.seed, *c, *r)?,
    };
    let text = d.to_text();
    emit(
        cli,
        "gen",
        json!({"diagram": d.canonical().to_json(), "text": text}),
        || text.clone(),
    );
    Ok(())
}

fn census(cli: &Cli, paths: &[String], metric: &str, limits: &Limits) -> Outcome {
    let metric: CensusMetric = metric.parse()?;
    let diagrams = paths.iter().map(|p| load(p)).collect::<Result<Vec<_>, _>>()?;
    let best = census_min(&diagrams, metric, limits)?;
    emit(
        cli,
        "census",
        json!({"metric": metric, "value": best.value, "path": paths[best.index]}),
        || format!("min = {} attained by {}\n", best.value, paths[best.index]),
    );
    Ok(())
}
