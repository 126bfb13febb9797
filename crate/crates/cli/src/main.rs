use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use classgen::certify::{self, CertifyOptions, Verdict};
use classgen::generators::{self, check_conditions, search_parameter, Strategy};
use classgen::groupcalc::{self, BsgsOptions, Enumeration};
use classgen::sweep::{proof_identity_sweep, special_polynomials};
use classgen::table::check_unitary_table;
use classgen::{Elem, Error, Family, FieldRef, FieldSpec, Matrix};

#[derive(Parser)]
#[command(name = "classgen", version, about = "Explicit (2,3)-generators for classical groups, with certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator pair.
    Build {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate the parameter conditions at `a`.
    Conditions {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Find the first parameter satisfying the conditions.
    Search {
        #[command(flatten)]
        pair: PairArgs,
        /// exhaustive, primitive-first or alpha-squared-plus-one
        #[arg(long)]
        strategy: Option<Strategy>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the verification pipeline and emit a certificate.
    Certify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = certify::DEFAULT_SEED)]
        seed: u64,
        /// Largest number of nonzero vectors the order computation may act on.
        #[arg(long, default_value_t = groupcalc::DEFAULT_BUDGET)]
        bsgs_budget: u64,
        /// Run every check instead of stopping at the first failure.
        #[arg(long)]
        keep_going: bool,
        /// Skip the order computation.
        #[arg(long)]
        no_generation: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check the closed-form identities over every small field.
    Sweep {
        #[arg(long, default_value_t = 13)]
        qmax: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Replay the unitary minimum-polynomial table.
    Table {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Count the group by brute-force closure.
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 2_000_000)]
        cap: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    family: Family,
    /// Order of the target group's field (GF(q^2) is used for the unitary family).
    #[arg(long, conflicts_with = "field")]
    q: Option<u64>,
    /// Explicit field as "p^n/c0,c1,...,1" (ascending modulus coefficients).
    #[arg(long)]
    field: Option<String>,
    /// Parameter as comma-separated coefficients c0,c1,... of the field generator.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

/// Failure modes that map to exit codes.
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<bool, Failure>;

impl PairArgs {
    fn field(&self) -> Result<Option<FieldRef>, Failure> {
        let f = match (&self.field, self.q) {
            (Some(s), _) => Some(FieldSpec::parse(s)?),
            (None, Some(q)) => Some(certify::field_for(self.family, q)?),
            (None, None) if !self.family.is_parametric() => None,
            (None, None) => {
                return Err(Failure::Usage(format!("family {} needs --q or --field", self.family)));
            }
        };
        if let Some(f) = &f {
            self.family.validate_field(f)?;
        }
        Ok(f)
    }

    fn parameter(&self, field: Option<&FieldRef>) -> Result<Option<Elem>, Failure> {
        match (&self.a, field) {
            (Some(s), Some(f)) => Ok(Some(f.parse_elem(s)?)),
            (Some(_), None) => Err(Failure::Usage(format!("family {} takes no parameter", self.family))),
            (None, _) => Ok(None),
        }
    }

    fn required_parameter(&self, field: &FieldRef) -> Result<Elem, Failure> {
        self.parameter(Some(field))?
            .ok_or_else(|| Failure::Usage(format!("family {} needs --a", self.family)))
    }
}

impl OutputArgs {
    fn emit(&self, text: String, json: Value) -> Result<(), Failure> {
        let body = if self.json {
            serde_json::to_string_pretty(&json).expect("serializable") + "\n"
        } else {
            text
        };
        match &self.output {
            Some(path) => std::fs::write(path, body)?,
            None => print!("{body}"),
        }
        Ok(())
    }
}

fn matrix_text(name: &str, m: &Matrix) -> String {
    let mut s = format!("{name} =\n");
    for row in m.to_strings() {
        s.push_str(&format!("  [{}]\n", row.join(" ")));
    }
    s
}

fn field_label(f: &FieldSpec) -> String {
    let m: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
    format!("{}^{}/{}", f.characteristic(), f.degree(), m.join(","))
}

fn build(pair: &PairArgs, out: &OutputArgs) -> Outcome {
    let field = pair.field()?;
    let a = pair.parameter(field.as_ref())?;
    let g = generators::build(pair.family, field.as_ref(), a)?;
    let text = format!(
        "family {} over GF({})\n{}{}",
        g.family,
        g.field.order(),
        matrix_text("x", &g.x),
        matrix_text("y", &g.y)
    );
    let j = json!({
        "family": g.family.name(),
        "field": field_label(&g.field),
        "a": pair.family.is_parametric().then(|| g.field.format_elem(g.a)),
        "b": pair.family.is_parametric().then(|| g.field.format_elem(g.b)),
        "x": g.x.to_strings(),
        "y": g.y.to_strings(),
    });
    out.emit(text, j)?;
    Ok(true)
}

fn conditions(pair: &PairArgs, out: &OutputArgs) -> Outcome {
    let field = pair.field()?.ok_or_else(|| Failure::Usage("fixed pairs have no conditions".into()))?;
    let a = pair.required_parameter(&field)?;
    let report = check_conditions(pair.family, &field, a);
    let mut text = String::new();
    for c in &report.clauses {
        text.push_str(&format!("CHECK {}: {} {}\n", c.name, if c.passed { "PASS" } else { "FAIL" }, c.detail));
    }
    out.emit(text, json!({ "family": pair.family.name(), "field": field_label(&field), "a": field.format_elem(a), "clauses": report.clauses, "passed": report.all_pass() }))?;
    Ok(report.all_pass())
}

fn search(pair: &PairArgs, strategy: Option<Strategy>, out: &OutputArgs) -> Outcome {
    let field = pair.field()?.ok_or_else(|| Failure::Usage("fixed pairs have no parameter".into()))?;
    let strategy = strategy.unwrap_or_else(|| pair.family.default_strategy());
    let found = search_parameter(pair.family, &field, strategy)?;
    let shown = found.map(|a| field.format_elem(a));
    let text = match &shown {
        Some(a) => format!("a = {a}\n"),
        None => "not found\n".to_string(),
    };
    out.emit(text, json!({ "family": pair.family.name(), "field": field_label(&field), "strategy": format!("{strategy:?}"), "a": shown }))?;
    Ok(found.is_some())
}

fn certify_cmd(pair: &PairArgs, opts: CertifyOptions, out: &OutputArgs) -> Outcome {
    let field = pair.field()?;
    let mut a = pair.parameter(field.as_ref())?;
    if let (None, Some(f), true) = (a, &field, pair.family.is_parametric()) {
        a = search_parameter(pair.family, f, pair.family.default_strategy())?;
        if a.is_none() {
            return Err(Failure::Usage(format!(
                "no admissible parameter for {} over GF({}); pass --a explicitly",
                pair.family,
                f.order()
            )));
        }
    }
    let cert = certify::certify(pair.family, field.as_ref(), a, &opts)?;
    out.emit(cert.to_text(), serde_json::to_value(&cert).expect("serializable"))?;
    Ok(cert.overall == Verdict::Pass)
}

fn sweep(qmax: u64, out: &OutputArgs) -> Outcome {
    let report = proof_identity_sweep(qmax);
    let specials = special_polynomials();
    let mut text = String::new();
    for item in &report.items {
        text.push_str(&format!(
            "CHECK {} over {}: {} {} cases{}\n",
            item.name,
            item.field,
            if item.passed() { "PASS" } else { "FAIL" },
            item.cases,
            item.mismatches.first().map(|m| format!(" ({m})")).unwrap_or_default()
        ));
    }
    for s in &specials {
        text.push_str(&format!(
            "CHECK char poly of {} at p={} a={}: {} [{}]\n",
            s.element,
            s.p,
            s.a,
            if s.matches { "PASS" } else { "FAIL" },
            s.computed.join(" ")
        ));
    }
    let ok = report.all_pass() && specials.iter().all(|s| s.matches && s.discriminant_nonzero);
    out.emit(text, json!({ "qmax": qmax, "items": report.items, "special_polynomials": specials, "passed": ok }))?;
    Ok(ok)
}

fn table(out: &OutputArgs) -> Outcome {
    let rows = check_unitary_table();
    let mut text = String::new();
    for r in &rows {
        let detail = match &r.error {
            Some(e) => e.clone(),
            None => r
                .clauses
                .iter()
                .map(|c| format!("{}={}", c.name, if c.passed { "ok" } else { "fails" }))
                .collect::<Vec<_>>()
                .join(", "),
        };
        text.push_str(&format!(
            "ROW q={} m_a={}: {} {}\n",
            r.q,
            r.min_poly,
            if r.passed { "PASS" } else { "FAIL" },
            detail
        ));
    }
    let ok = rows.iter().all(|r| r.passed);
    out.emit(text, json!({ "rows": rows, "passed": ok }))?;
    Ok(ok)
}

fn enumerate(pair: &PairArgs, cap: u64, out: &OutputArgs) -> Outcome {
    let field = pair.field()?;
    let a = pair.parameter(field.as_ref())?;
    let g = generators::build(pair.family, field.as_ref(), a)?;
    let result = groupcalc::bfs_enumerate(&g.gens(), cap)?;
    let (count, exceeded) = match result {
        Enumeration::Count(n) => (n, false),
        Enumeration::Exceeded(n) => (n, true),
    };
    let text = if exceeded {
        format!("more than {count} elements\n")
    } else {
        format!("order {count}\n")
    };
    out.emit(text, json!({ "family": g.family.name(), "field": field_label(&g.field), "count": count, "exceeded": exceeded }))?;
    Ok(!exceeded)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Build { pair, out } => build(&pair, &out),
        Command::Conditions { pair, out } => conditions(&pair, &out),
        Command::Search { pair, strategy, out } => search(&pair, strategy, &out),
        Command::Certify {
            pair,
            seed,
            bsgs_budget,
            keep_going,
            no_generation,
            out,
        } => {
            let opts = CertifyOptions {
                seed,
                bsgs: BsgsOptions {
                    budget: bsgs_budget,
                    ..BsgsOptions::default()
                },
                keep_going,
                generation: !no_generation,
            };
            certify_cmd(&pair, opts, &out)
        }
        Command::Sweep { qmax, out } => sweep(qmax, &out),
        Command::Table { out } => table(&out),
        Command::Enumerate { pair, cap, out } => enumerate(&pair, cap, &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
