use std::path::PathBuf;

use circint_core::ffcircle::{self, FiniteCircleError};
use circint_core::functional::FunctionalError;
use circint_core::{
    canonicalize, check_identities, cross_check, interpret, omega, psi, psi_general, super_catalan,
    verify_axioms, CircleSpec, CrossCheckReport, Polynomial, Rational,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::expr::{format_poly, parse_poly, parse_rational, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "circint",
    version,
    about = "Exact circular integral functional and super Catalan numbers"
)]
pub struct Cli {
    /// Emit a single JSON document.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV with a header row.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Cli {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Text
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integrate a polynomial over the unit circle, or over --circle r,a,b.
    Psi {
        /// Polynomial in x, y, e.g. "3/2*x^2 - y + 1".
        expr: String,
        /// Radius and center as "r,a,b".
        #[arg(long, value_name = "R,A,B", allow_hyphen_values = true)]
        circle: Option<String>,
        /// Exit with status 1 unless the value equals this rational.
        #[arg(long, value_name = "VALUE", allow_hyphen_values = true)]
        expect: Option<String>,
    },
    /// Reduce modulo x^2 + y^2 - 1 and print rho, omega.
    Reduce {
        expr: String,
        /// Exit with status 1 unless the polynomial lies in the circle ideal.
        #[arg(long)]
        expect_member: bool,
    },
    /// Tabulate S(m,n), or Omega(m,n) with --omega.
    Table {
        #[arg(long)]
        max_m: u32,
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        omega: bool,
    },
    /// Check Normalization, Locality and Invariance on seeded random inputs.
    Verify(VerifyArgs),
    /// Compare the finite-field character sum with psi mod p.
    Ffcheck {
        #[arg(
            long,
            required_unless_present = "all_primes_up_to",
            conflicts_with = "all_primes_up_to"
        )]
        prime: Option<u64>,
        /// Check every odd prime up to N.
        #[arg(long, value_name = "N")]
        all_primes_up_to: Option<u64>,
    },
    /// Compare psi over the radius-2 circle with 2*S(m,n).
    Interpret {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Check the super Catalan identities on a grid.
    Identities {
        #[arg(long)]
        max_m: u32,
        #[arg(long)]
        max_n: u32,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 12)]
    pub max_degree: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("malformed expression: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    FiniteCircle(#[from] FiniteCircleError),
    #[error(transparent)]
    Functional(#[from] FunctionalError),
    #[error("{0}")]
    Invalid(String),
}

/// Rendered output and whether every check in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

/// The JSON document emitted with `--json`.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
}

struct Rendered {
    record: OutputRecord,
    text: String,
    csv: Vec<Vec<String>>,
}

impl Rendered {
    fn passed(&self) -> bool {
        self.record.passed.unwrap_or(true)
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CommandError> {
    let rendered = match &cli.command {
        Command::Psi {
            expr,
            circle,
            expect,
        } => psi_command(expr, circle.as_deref(), expect.as_deref())?,
        Command::Reduce {
            expr,
            expect_member,
        } => reduce_command(expr, *expect_member)?,
        Command::Table {
            max_m,
            max_n,
            omega,
        } => table_command(*max_m, *max_n, *omega),
        Command::Verify(args) => verify_command(args),
        Command::Ffcheck {
            prime,
            all_primes_up_to,
        } => ffcheck_command(*prime, *all_primes_up_to)?,
        Command::Interpret { m, n } => interpret_command(*m, *n),
        Command::Identities { max_m, max_n } => identities_command(*max_m, *max_n),
    };
    let passed = rendered.passed();
    let text = match cli.format() {
        Format::Text => rendered.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rendered.record).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Csv => to_csv(&rendered.csv),
    };
    Ok(Outcome { text, passed })
}

fn to_csv(rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.write_record(row).expect("in-memory csv");
    }
    String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn parse_circle(spec: &str) -> Result<CircleSpec, CommandError> {
    let parts: Vec<_> = spec.split(',').collect();
    let [r, a, b] = parts.as_slice() else {
        return Err(CommandError::Invalid(format!(
            "--circle expects r,a,b (three rationals), got '{spec}'"
        )));
    };
    Ok(CircleSpec::new(
        parse_rational(r)?,
        parse_rational(a)?,
        parse_rational(b)?,
    )?)
}

fn psi_command(
    expr: &str,
    circle: Option<&str>,
    expect: Option<&str>,
) -> Result<Rendered, CommandError> {
    let p = parse_poly(expr)?;
    let circle = circle.map(parse_circle).transpose()?;
    let expected = expect.map(parse_rational).transpose()?;
    let value = match &circle {
        Some(c) => psi_general(c, &p),
        None => psi(&p),
    };
    let circle_text = circle.as_ref().map(|c| {
        let (a, b) = c.center();
        format!("{},{},{}", c.radius(), a, b)
    });
    let passed = expected.as_ref().map(|e| *e == value);
    let mut text = format!("{value}\n");
    if let (Some(e), Some(ok)) = (&expected, passed) {
        text.push_str(&format!("expected {e}: {}\n", pass_word(ok)));
    }
    Ok(Rendered {
        record: OutputRecord {
            command: "psi",
            inputs: json!({
                "expr": format_poly(&p),
                "circle": circle_text,
                "expect": expected.as_ref().map(Rational::to_string),
            }),
            result: json!(value.to_string()),
            passed,
        },
        text,
        csv: vec![
            vec!["expr".into(), "circle".into(), "value".into()],
            vec![
                format_poly(&p),
                circle_text.unwrap_or_default(),
                value.to_string(),
            ],
        ],
    })
}

fn reduce_command(expr: &str, expect_member: bool) -> Result<Rendered, CommandError> {
    let p = parse_poly(expr)?;
    let canon = canonicalize(&p);
    let member = canon.is_zero();
    let rho = format_poly(&canon.rho);
    let omega = format_poly(&canon.omega);
    let passed = expect_member.then_some(member);
    let mut text = format!("rho = {rho}\nomega = {omega}\nideal member: {member}\n");
    if let Some(ok) = passed {
        text.push_str(&format!("expected ideal member: {}\n", pass_word(ok)));
    }
    Ok(Rendered {
        record: OutputRecord {
            command: "reduce",
            inputs: json!({ "expr": format_poly(&p), "expect_member": expect_member }),
            result: json!({ "rho": rho, "omega": omega, "member": member }),
            passed,
        },
        text,
        csv: vec![
            vec!["expr".into(), "rho".into(), "omega".into(), "member".into()],
            vec![format_poly(&p), rho, omega, member.to_string()],
        ],
    })
}

fn table_command(max_m: u32, max_n: u32, use_omega: bool) -> Rendered {
    let label = if use_omega { "Omega" } else { "S" };
    let value = |m: u32, n: u32| {
        if use_omega {
            omega(m, n).to_string()
        } else {
            super_catalan(m, n).to_string()
        }
    };
    let grid: Vec<Vec<String>> = (0..=max_m)
        .map(|m| (0..=max_n).map(|n| value(m, n)).collect())
        .collect();

    let mut rows = Vec::new();
    let mut csv = vec![vec!["m".to_string(), "n".to_string(), label.to_string()]];
    for (m, row) in grid.iter().enumerate() {
        for (n, v) in row.iter().enumerate() {
            rows.push(json!({ "m": m, "n": n, "value": v }));
            csv.push(vec![m.to_string(), n.to_string(), v.clone()]);
        }
    }

    let width = grid
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(1)
        .max(3);
    let mut text = format!("{label}(m,n): rows m = 0..={max_m}, columns n = 0..={max_n}\n");
    text.push_str(&format!("{:>4}", "m\\n"));
    for n in 0..=max_n {
        text.push_str(&format!(" {n:>width$}"));
    }
    text.push('\n');
    for (m, row) in grid.iter().enumerate() {
        text.push_str(&format!("{m:>4}"));
        for v in row {
            text.push_str(&format!(" {v:>width$}"));
        }
        text.push('\n');
    }

    Rendered {
        record: OutputRecord {
            command: "table",
            inputs: json!({ "max_m": max_m, "max_n": max_n, "omega": use_omega }),
            result: json!(rows),
            passed: None,
        },
        text,
        csv,
    }
}

fn verify_command(args: &VerifyArgs) -> Rendered {
    let report = verify_axioms(args.trials as usize, args.max_degree, args.seed);
    let passed = report.passed();
    let checks = [
        ("normalization", &report.normalization),
        ("locality", &report.locality),
        ("invariance", &report.invariance),
    ];
    let mut text = format!(
        "seed {}, max degree {}, {} trials\n",
        args.seed, args.max_degree, args.trials
    );
    let mut csv = vec![vec![
        "axiom".to_string(),
        "trials".to_string(),
        "failures".to_string(),
        "passed".to_string(),
    ]];
    for (name, tally) in checks {
        text.push_str(&format!(
            "{name}: {} ({} trial{}, {} failures)\n",
            pass_word(tally.passed()),
            tally.trials,
            if tally.trials == 1 { "" } else { "s" },
            tally.failures.len()
        ));
        for f in &tally.failures {
            text.push_str(&format!("  {f}\n"));
        }
        csv.push(vec![
            name.to_string(),
            tally.trials.to_string(),
            tally.failures.len().to_string(),
            tally.passed().to_string(),
        ]);
    }
    Rendered {
        record: OutputRecord {
            command: "verify",
            inputs: json!({ "trials": args.trials, "max_degree": args.max_degree, "seed": args.seed }),
            result: serde_json::to_value(&report).expect("report serializes"),
            passed: Some(passed),
        },
        text,
        csv,
    }
}

fn ffcheck_command(prime: Option<u64>, up_to: Option<u64>) -> Result<Rendered, CommandError> {
    let primes = match (prime, up_to) {
        (Some(p), _) => vec![p],
        (None, Some(n)) => {
            let ps = ffcircle::odd_primes_up_to(n);
            if ps.is_empty() {
                return Err(CommandError::Invalid(format!("no odd primes up to {n}")));
            }
            ps
        }
        (None, None) => {
            return Err(CommandError::Invalid(
                "give --prime or --all-primes-up-to".into(),
            ))
        }
    };
    let reports = primes
        .iter()
        .map(|&p| cross_check(p))
        .collect::<Result<Vec<CrossCheckReport>, _>>()?;
    let passed = reports.iter().all(CrossCheckReport::passed);

    let mut text = String::new();
    let mut csv = vec![["prime", "k", "l", "finite", "expected", "agrees"]
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
    for r in &reports {
        let agree = r.comparisons.iter().filter(|c| c.agrees).count();
        text.push_str(&format!(
            "p = {}: |S^1| = {}, {} comparisons, {} agree: {}\n",
            r.prime,
            r.circle_size,
            r.comparisons.len(),
            agree,
            pass_word(r.passed())
        ));
        for c in r.mismatches() {
            text.push_str(&format!(
                "  mismatch at (k,l) = ({},{}): finite {} vs expected {}\n",
                c.k, c.l, c.finite, c.expected
            ));
        }
        for c in &r.comparisons {
            csv.push(vec![
                r.prime.to_string(),
                c.k.to_string(),
                c.l.to_string(),
                c.finite.to_string(),
                c.expected.to_string(),
                c.agrees.to_string(),
            ]);
        }
    }
    Ok(Rendered {
        record: OutputRecord {
            command: "ffcheck",
            inputs: json!({ "primes": primes }),
            result: serde_json::to_value(&reports).expect("reports serialize"),
            passed: Some(passed),
        },
        text,
        csv,
    })
}

fn interpret_command(m: u32, n: u32) -> Rendered {
    let i = interpret(m, n);
    let ok = i.holds();
    let monomial = format_poly(&Polynomial::monomial(
        circint_core::Monomial::new(2 * m, 2 * n),
        circint_core::coeff::int(1),
    ));
    Rendered {
        record: OutputRecord {
            command: "interpret",
            inputs: json!({ "m": m, "n": n }),
            result: json!({
                "via_functional": i.via_functional.to_string(),
                "via_factorials": i.via_factorials.to_string(),
            }),
            passed: Some(ok),
        },
        text: format!(
            "psi_{{2,[0,0]}}({monomial}) = {}, 2*S({m},{n}) = {}: {}\n",
            i.via_functional,
            i.via_factorials,
            pass_word(ok)
        ),
        csv: vec![
            ["m", "n", "via_functional", "via_factorials", "passed"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            vec![
                m.to_string(),
                n.to_string(),
                i.via_functional.to_string(),
                i.via_factorials.to_string(),
                ok.to_string(),
            ],
        ],
    }
}

fn identities_command(max_m: u32, max_n: u32) -> Rendered {
    let report = check_identities(max_m, max_n);
    let ok = report.passed();
    let mut text = format!(
        "identities on 0..={max_m} x 0..={max_n}: {} checks, {} failures: {}\n",
        report.checked,
        report.failures.len(),
        pass_word(ok)
    );
    for f in &report.failures {
        text.push_str(&format!("  {f}\n"));
    }
    Rendered {
        record: OutputRecord {
            command: "identities",
            inputs: json!({ "max_m": max_m, "max_n": max_n }),
            result: serde_json::to_value(&report).expect("report serializes"),
            passed: Some(ok),
        },
        text,
        csv: vec![
            ["max_m", "max_n", "checked", "failures", "passed"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            vec![
                max_m.to_string(),
                max_n.to_string(),
                report.checked.to_string(),
                report.failures.len().to_string(),
                ok.to_string(),
            ],
        ],
    }
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}
