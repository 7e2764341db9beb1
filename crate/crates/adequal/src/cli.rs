//! Command-line front end: argument types, command execution, and the text
//! and JSON renderers.
//!
//! JSON output is a single object {command, input, result, exact_flags}.
//! Every exact rational is serialized as a "num/den" string so it
//! round-trips bit-exactly; every approximate value carries both its
//! decimal and the exact bracket it was certified by. Text mode prints the
//! same decimal tokens as the JSON encoder, so the two modes never disagree
//! on a numeric value.

use crate::cubic::{
    classify, depress, discriminant_value, solve_cubic, vieta_expand, Cubic, CubicSolution,
};
use crate::error::Error;
use crate::monotonicity::{monotonicity_intervals, IntervalEndpoint, MonotonicityDecomposition};
use crate::parse::{parse_polynomial_capped, parse_rational, DEFAULT_MAX_DEGREE};
use crate::quotient::fermat_quotient;
use crate::sturm::RootValue;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "adequal",
    version,
    about = "Exact monotonicity analysis and cubic root triples over the rationals"
)]
pub struct Cli {
    /// Width bound for certified brackets around irrational values
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tolerance: f64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest accepted polynomial degree
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose the real line into maximal strict-monotonicity intervals
    Monotone {
        /// Polynomial in t, e.g. "t^3 - 3*t"
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
    },
    /// Classify t^3 - a*t^2 + b*t - c and recover its real root triple
    Solve {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Expand a root triple (x, y, z) into cubic coefficients by Vieta
    Vieta {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Print the difference quotient phi(t1, t2) and its diagonal
    Quotient {
        /// Polynomial in t of degree at least 1
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
    },
}

/// One executed command: the machine-readable record plus its text form.
#[derive(Clone, Debug)]
pub struct OutputRecord {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub exact_flags: Value,
}

impl OutputRecord {
    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "exact_flags": self.exact_flags,
        })
    }
}

/// Runs a parsed command line and returns what should be printed.
pub fn execute(cli: &Cli) -> Result<String, Error> {
    let (record, text) = match &cli.command {
        Command::Monotone { polynomial } => {
            cmd_monotone(polynomial, cli.tolerance, cli.max_degree)?
        }
        Command::Solve { a, b, c } => cmd_solve(a, b, c, cli.tolerance)?,
        Command::Vieta { x, y, z } => cmd_vieta(x, y, z)?,
        Command::Quotient { polynomial } => cmd_quotient(polynomial, cli.max_degree)?,
    };
    Ok(match cli.format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&record.to_value())
            .expect("record serialization cannot fail"),
    })
}

/// Process exit code for a failed command: 2 for violated internal
/// invariants, 1 for everything the user can fix.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Invariant(_) | Error::IterationCap(_) => 2,
        _ => 1,
    }
}

pub fn cmd_monotone(
    polynomial: &str,
    tolerance: f64,
    max_degree: usize,
) -> Result<(OutputRecord, String), Error> {
    let f = parse_polynomial_capped(polynomial, max_degree)?;
    let d = monotonicity_intervals(&f, tolerance)?;
    let text = render_decomposition(&d);
    let segments: Vec<Value> = d
        .segments
        .iter()
        .map(|s| {
            json!({
                "left": endpoint_value(&s.left),
                "right": endpoint_value(&s.right),
                "direction": s.direction.to_string(),
            })
        })
        .collect();
    let boundary_flags: Vec<bool> = d
        .boundaries()
        .iter()
        .map(|e| matches!(e, IntervalEndpoint::Exact(_)))
        .collect();
    let record = OutputRecord {
        command: "monotone".into(),
        input: json!({ "polynomial": f.to_string(), "tolerance": tolerance }),
        result: json!({ "decomposition": text, "segments": segments }),
        exact_flags: json!({ "boundaries": boundary_flags }),
    };
    Ok((record, text))
}

pub fn cmd_solve(
    a: &str,
    b: &str,
    c: &str,
    tolerance: f64,
) -> Result<(OutputRecord, String), Error> {
    let (a, b, c) = (parse_rational(a)?, parse_rational(b)?, parse_rational(c)?);
    let cub = Cubic::new(a.clone(), b.clone(), c.clone());
    let class = classify(&cub);
    let solution = solve_cubic(&cub, tolerance)?;
    let mut text = format!(
        "classification: {}\ndiscriminant D = {}\n",
        class.name(),
        class.discriminant()
    );
    let (roots_value, roots_flags) = match &solution {
        CubicSolution::Triple(triple) => {
            let rendered: Vec<String> = triple.roots.iter().map(root_text).collect();
            text.push_str(&format!("roots: {}", rendered.join(", ")));
            let values: Vec<Value> = triple.roots.iter().map(root_value).collect();
            let flags: Vec<bool> = triple.roots.iter().map(RootValue::is_exact).collect();
            (Value::from(values), Value::from(flags))
        }
        CubicSolution::NoRealTriple { .. } => {
            text.push_str("no real triple (D > 0)");
            (Value::Null, Value::Null)
        }
    };
    let record = OutputRecord {
        command: "solve".into(),
        input: json!({
            "a": a.to_string(),
            "b": b.to_string(),
            "c": c.to_string(),
            "tolerance": tolerance,
        }),
        result: json!({
            "classification": class.name(),
            "discriminant": class.discriminant().to_string(),
            "roots": roots_value,
        }),
        exact_flags: json!({ "discriminant": true, "roots": roots_flags }),
    };
    Ok((record, text))
}

pub fn cmd_vieta(x: &str, y: &str, z: &str) -> Result<(OutputRecord, String), Error> {
    let (x, y, z) = (parse_rational(x)?, parse_rational(y)?, parse_rational(z)?);
    let cub = vieta_expand(&x, &y, &z);
    let discriminant = discriminant_value(&depress(&cub));
    let text = format!(
        "a = {}, b = {}, c = {}\ncubic: {}\ndiscriminant D = {}",
        cub.a, cub.b, cub.c, cub, discriminant
    );
    let record = OutputRecord {
        command: "vieta".into(),
        input: json!({
            "x": x.to_string(),
            "y": y.to_string(),
            "z": z.to_string(),
        }),
        result: json!({
            "a": cub.a.to_string(),
            "b": cub.b.to_string(),
            "c": cub.c.to_string(),
            "cubic": cub.to_string(),
            "discriminant": discriminant.to_string(),
        }),
        exact_flags: json!({
            "a": true, "b": true, "c": true, "discriminant": true,
        }),
    };
    Ok((record, text))
}

pub fn cmd_quotient(polynomial: &str, max_degree: usize) -> Result<(OutputRecord, String), Error> {
    let f = parse_polynomial_capped(polynomial, max_degree)?;
    let phi = fermat_quotient(&f)?;
    let diagonal = phi.diagonal();
    let text = format!("phi = {}\ndiagonal = {}", phi, diagonal);
    let record = OutputRecord {
        command: "quotient".into(),
        input: json!({ "polynomial": f.to_string() }),
        result: json!({
            "phi": phi.to_string(),
            "diagonal": diagonal.to_string(),
        }),
        exact_flags: json!({ "phi": true, "diagonal": true }),
    };
    Ok((record, text))
}

/// The exact decimal token the JSON encoder would emit for this double;
/// using it in text mode keeps the two formats literally equal.
fn decimal_token(x: f64) -> String {
    serde_json::to_string(&x).expect("finite decimal")
}

fn root_text(r: &RootValue) -> String {
    match r {
        RootValue::Exact(v) => v.to_string(),
        RootValue::Approx { value, .. } => format!("~{}", decimal_token(*value)),
    }
}

fn root_value(r: &RootValue) -> Value {
    match r {
        RootValue::Exact(v) => Value::from(v.to_string()),
        RootValue::Approx { value, lo, hi } => json!({
            "decimal": value,
            "bracket": [lo.to_string(), hi.to_string()],
        }),
    }
}

fn endpoint_text(e: &IntervalEndpoint) -> String {
    match e {
        IntervalEndpoint::NegInfinity => "-inf".into(),
        IntervalEndpoint::PosInfinity => "+inf".into(),
        IntervalEndpoint::Exact(r) => r.to_string(),
        IntervalEndpoint::Approx { value, .. } => format!("~{}", decimal_token(*value)),
    }
}

fn endpoint_value(e: &IntervalEndpoint) -> Value {
    match e {
        IntervalEndpoint::NegInfinity => Value::from("-inf"),
        IntervalEndpoint::PosInfinity => Value::from("+inf"),
        IntervalEndpoint::Exact(r) => Value::from(r.to_string()),
        IntervalEndpoint::Approx { value, radius, lo, hi } => json!({
            "decimal": value,
            "radius": radius,
            "bracket": [lo.to_string(), hi.to_string()],
        }),
    }
}

/// Interval notation, one segment per clause: `(-inf,-1] increasing;
/// [-1,1] decreasing; [1,+inf) increasing`.
pub fn render_decomposition(d: &MonotonicityDecomposition) -> String {
    let mut parts = Vec::with_capacity(d.segments.len());
    for s in &d.segments {
        let open = if s.left.is_finite() { "[" } else { "(" };
        let close = if s.right.is_finite() { "]" } else { ")" };
        parts.push(format!(
            "{}{},{}{} {}",
            open,
            endpoint_text(&s.left),
            endpoint_text(&s.right),
            close,
            s.direction
        ));
    }
    parts.join("; ")
}
