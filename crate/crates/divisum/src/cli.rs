//! Command-line front end: a stable plain-text and JSON surface over the
//! expression parser, the summation engine, the special-number tables, and
//! the numeric oracle.
//!
//! stdout is the data channel and stderr the diagnostics channel, so output
//! can be piped without filtering.  Exit codes are part of the contract:
//!
//!   0  success
//!   2  unparseable expression or bad usage
//!   3  provably not Cauchy-summable and no Dirichlet-tier certificate found
//!      (`classify`), or a pole at 1 (`abel`)
//!   4  a value was requested but the certificate search exhausted its
//!      support bound (`sum`, `explain`); raising `--max-support` may help
//!   5  expression outside the decidable class: `H` anywhere except the
//!      harmonic demonstration, or `os` with two infinite operands

use serde_json::{json, Value};

use crate::dsl::{elaborate, parse, pretty, Elaborated, ParseError, SeqExpr};
use crate::engine::{
    classify_with_support, explain_with_support, Certificate, Classification, Derivation,
    DerivationStep, ExplainError, DEFAULT_MAX_SUPPORT,
};
use crate::numbers::{bernoulli_plus, zeta_neg};
use crate::oracle::{abel_estimate, harmonic_demo, harmonic_demo_terms, DEFAULT_ABEL_TERMS};
use crate::rational::{format_rat, Rat};
use crate::seq::{FiniteSeq, GfSeq};

/// Everything a command run produces.  The binary prints the two streams
/// and exits with the code; tests assert on the struct directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

const USAGE: &str = "\
usage: divisum <command> [options]

commands:
  sum <expr>            generalized sum of the sequence, as an exact rational
  classify <expr>       convergence/summability tier, with certificate
  terms <expr> -n <N>   first N terms (default 8)
  gf <expr>             generating function, printed `num / den`
  explain <expr>        step-by-step derivation of the sum; each step is
                        re-verified before printing
  abel <expr>           numeric cross-check: Abel evaluation near x = 1
  bernoulli <n>         Bernoulli number B(n), B(1) = +1/2 convention
  zeta <s>              zeta at a nonpositive integer, zeta(-n) = -B(n+1)/(n+1)
  demo harmonic         the one sanctioned use of H: numeric evaluation of
                        H os (e(0) - e(1)), converging to ln 2

options:
  --json                machine-readable output on stdout
  --max-support <J>     Dirichlet-tier certificate search bound (default 8)
  -n <N>                number of terms for `terms`

expressions:
  P(n) AP(n) T(n) G(q) e(k) H, rational literals, + - * (or ox, \u{2297}) and
  os (or \u{229b}), parentheses.  Example: divisum sum 'P(1) - P(0)'
";

pub fn run(args: &[String]) -> CliOutput {
    let mut it = args.iter();
    let command = match it.next() {
        Some(c) => c.as_str(),
        None => return usage_error("missing command"),
    };
    if command == "help" || command == "--help" {
        return ok(USAGE.to_string());
    }

    // Flag scan.  Only `--`-prefixed tokens are reserved; anything else is
    // positional, so `zeta -1` and `sum -P(1)` keep their arguments.
    let mut json = false;
    let mut max_support = DEFAULT_MAX_SUPPORT;
    let mut n_terms: Option<usize> = None;
    let mut positional: Vec<&str> = Vec::new();
    let rest: Vec<&String> = it.collect();
    let mut i = 0;
    while i < rest.len() {
        match rest[i].as_str() {
            "--json" => json = true,
            "--max-support" => {
                i += 1;
                max_support = match rest.get(i).and_then(|v| v.parse().ok()) {
                    Some(j) => j,
                    None => return usage_error("--max-support needs a nonnegative integer"),
                };
            }
            "-n" => {
                i += 1;
                n_terms = match rest.get(i).and_then(|v| v.parse().ok()) {
                    Some(n) => Some(n),
                    None => return usage_error("-n needs a nonnegative integer"),
                };
            }
            other if other.starts_with("--") => {
                return usage_error(&format!("unknown option '{other}'"));
            }
            other => positional.push(other),
        }
        i += 1;
    }

    match command {
        "sum" | "classify" | "terms" | "gf" | "explain" | "abel" => {
            // Unquoted expressions arrive as several argv words; stitch
            // them back together.
            if positional.is_empty() {
                return usage_error(&format!("{command} needs an expression"));
            }
            let text = positional.join(" ");
            let ast = match parse(&text) {
                Ok(ast) => ast,
                Err(e) => return parse_failure(&text, &e),
            };
            let elaborated = match elaborate(&ast) {
                Ok(el) => el,
                Err(e) => return fail(5, &format!("not in class: {e}")),
            };
            match command {
                "sum" => cmd_sum(&ast, &elaborated, max_support, json),
                "classify" => cmd_classify(&ast, &elaborated, max_support, json),
                "terms" => cmd_terms(&ast, &elaborated, n_terms.unwrap_or(8), json),
                "gf" => cmd_gf(&ast, &elaborated, json),
                "explain" => cmd_explain(&ast, &elaborated, max_support, json),
                "abel" => cmd_abel(&ast, &elaborated, json),
                _ => unreachable!(),
            }
        }
        "bernoulli" => cmd_bernoulli(&positional, json),
        "zeta" => cmd_zeta(&positional, json),
        "demo" => cmd_demo(&positional, json),
        other => usage_error(&format!("unknown command '{other}'")),
    }
}

fn cmd_sum(ast: &SeqExpr, el: &Elaborated, max_support: usize, json: bool) -> CliOutput {
    let u = match demand_sequence(el) {
        Ok(u) => u,
        Err(out) => return out,
    };
    let cls = classify_with_support(u, max_support);
    let (code, plain, stderr) = match cls.value() {
        Some(v) => (0, format!("{}\n", format_rat(v)), String::new()),
        None => (4, String::new(), format!("no value: {cls}\n")),
    };
    if json {
        let obj = pipeline_json(ast, u, &cls, None);
        CliOutput {
            exit_code: code,
            stdout: format!("{obj}\n"),
            stderr,
        }
    } else {
        CliOutput {
            exit_code: code,
            stdout: plain,
            stderr,
        }
    }
}

fn cmd_classify(ast: &SeqExpr, el: &Elaborated, max_support: usize, json: bool) -> CliOutput {
    let u = match demand_sequence(el) {
        Ok(u) => u,
        Err(out) => return out,
    };
    let cls = classify_with_support(u, max_support);
    let code = match cls {
        Classification::NotCauchySummable { .. } => 3,
        _ => 0,
    };
    let stdout = if json {
        format!("{}\n", pipeline_json(ast, u, &cls, None))
    } else {
        format!("{cls}\n")
    };
    CliOutput {
        exit_code: code,
        stdout,
        stderr: String::new(),
    }
}

fn cmd_terms(ast: &SeqExpr, el: &Elaborated, n: usize, json: bool) -> CliOutput {
    let terms = match el {
        Elaborated::Sequence(u) => u.terms(n),
        // the demonstration transform has exact terms even though its
        // generating function is not rational
        Elaborated::HarmonicDemo => harmonic_demo_terms(n),
    };
    if json {
        let obj = json!({
            "schema": 1,
            "expr": pretty(ast),
            "terms": terms.iter().map(rat_json).collect::<Vec<_>>(),
        });
        ok(format!("{obj}\n"))
    } else {
        let line = terms
            .iter()
            .map(format_rat)
            .collect::<Vec<_>>()
            .join(", ");
        ok(format!("{line}\n"))
    }
}

fn cmd_gf(ast: &SeqExpr, el: &Elaborated, json: bool) -> CliOutput {
    let u = match demand_sequence(el) {
        Ok(u) => u,
        Err(out) => return out,
    };
    if json {
        let obj = json!({
            "schema": 1,
            "expr": pretty(ast),
            "gf": gf_json(u),
        });
        ok(format!("{obj}\n"))
    } else {
        ok(format!("{}\n", u.gf()))
    }
}

fn cmd_explain(ast: &SeqExpr, el: &Elaborated, max_support: usize, json: bool) -> CliOutput {
    let u = match demand_sequence(el) {
        Ok(u) => u,
        Err(out) => return out,
    };
    let derivation = match explain_with_support(u, max_support) {
        Ok(d) => d,
        Err(ExplainError::NotSummable(cls)) => {
            return fail(4, &format!("no value: {cls}"));
        }
    };
    // Contract: nothing is printed that has not just been re-derived.
    for step in &derivation.steps {
        if !step.replay() {
            return fail(1, "internal error: a derivation step failed re-verification");
        }
    }
    if json {
        let cls = classify_with_support(u, max_support);
        let obj = pipeline_json(ast, u, &cls, Some(&derivation));
        ok(format!("{obj}\n"))
    } else {
        let mut out = String::new();
        for (i, step) in derivation.steps.iter().enumerate() {
            out.push_str(&render_step(i + 1, step));
            out.push('\n');
        }
        out.push_str(&format!("sigma = {}\n", format_rat(&derivation.value)));
        ok(out)
    }
}

fn cmd_abel(ast: &SeqExpr, el: &Elaborated, json: bool) -> CliOutput {
    let u = match el {
        Elaborated::Sequence(u) => u,
        Elaborated::HarmonicDemo => {
            return fail(
                5,
                "not in class: the harmonic transform has no rational generating function; run `divisum demo harmonic`",
            )
        }
    };
    let est = match abel_estimate(u, DEFAULT_ABEL_TERMS) {
        Ok(e) => e,
        Err(e) => return fail(3, &e.to_string()),
    };
    if json {
        let obj = json!({
            "schema": 1,
            "expr": pretty(ast),
            "abel": {
                "value": est.value,
                "points": est.points,
                "terms_per_point": est.terms_per_point,
            },
        });
        ok(format!("{obj}\n"))
    } else {
        ok(format!("{:.10}\n", est.value))
    }
}

fn cmd_bernoulli(positional: &[&str], json: bool) -> CliOutput {
    let n: usize = match single_int(positional) {
        Some(n) if n >= 0 => n as usize,
        _ => return usage_error("bernoulli needs one nonnegative integer"),
    };
    let b = bernoulli_plus(n);
    if json {
        ok(format!(
            "{}\n",
            json!({"schema": 1, "n": n, "value": format_rat(&b)})
        ))
    } else {
        ok(format!("{}\n", format_rat(&b)))
    }
}

fn cmd_zeta(positional: &[&str], json: bool) -> CliOutput {
    let s: i64 = match single_int(positional) {
        Some(s) if s <= 0 => s,
        _ => return usage_error("zeta takes a nonpositive integer argument"),
    };
    let v = zeta_neg((-s) as usize);
    if json {
        ok(format!(
            "{}\n",
            json!({"schema": 1, "s": s, "value": format_rat(&v)})
        ))
    } else {
        ok(format!("{}\n", format_rat(&v)))
    }
}

fn cmd_demo(positional: &[&str], json: bool) -> CliOutput {
    if positional != ["harmonic"] {
        return usage_error("the only demo is `demo harmonic`");
    }
    let value = harmonic_demo();
    let reference = std::f64::consts::LN_2;
    if json {
        ok(format!(
            "{}\n",
            json!({"schema": 1, "demo": "harmonic", "value": value, "reference": reference})
        ))
    } else {
        let head = harmonic_demo_terms(6)
            .iter()
            .map(format_rat)
            .collect::<Vec<_>>()
            .join(", ");
        ok(format!(
            "H os (e(0) - e(1)): {head}, ...\nestimate = {value:.10}\nln 2     = {reference:.10}\n"
        ))
    }
}

/// The commands that need a rational generating function reject the
/// harmonic demonstration with the `not in class` exit code.
fn demand_sequence<'a>(el: &'a Elaborated) -> Result<&'a GfSeq, CliOutput> {
    match el {
        Elaborated::Sequence(u) => Ok(u),
        Elaborated::HarmonicDemo => Err(fail(
            5,
            "not in class: the harmonic transform has no rational generating function and no rational sum; run `divisum demo harmonic`",
        )),
    }
}

fn single_int(positional: &[&str]) -> Option<i64> {
    match positional {
        [one] => one.parse().ok(),
        _ => None,
    }
}

/// One derivation step as a verifiable identity line.
fn render_step(i: usize, step: &DerivationStep) -> String {
    match step {
        DerivationStep::Cauchy {
            sequence,
            multiplier,
            product,
            value,
        } => format!(
            "{i}. ({multiplier}) ox ({}) = ({product}); sigma = ({})/({}) = {}",
            sequence.gf(),
            format_rat(&product.coefficient_sum()),
            format_rat(&multiplier.coefficient_sum()),
            format_rat(value),
        ),
        DerivationStep::Dirichlet {
            sequence,
            factor,
            transformed,
            transformed_value,
            value,
        } => format!(
            "{i}. ({}) os ({factor}) = ({}); sigma = ({})/({}) = {}",
            sequence.gf(),
            transformed.gf(),
            format_rat(transformed_value),
            format_rat(&factor.coefficient_sum()),
            format_rat(value),
        ),
    }
}

/// The versioned object shared by `sum`, `classify`, and `explain`.
fn pipeline_json(
    ast: &SeqExpr,
    u: &GfSeq,
    cls: &Classification,
    derivation: Option<&Derivation>,
) -> Value {
    json!({
        "schema": 1,
        "expr": pretty(ast),
        "gf": gf_json(u),
        "classification": cls.tag(),
        "sum": cls.value().map(|v| rat_json(v)).unwrap_or(Value::Null),
        "certificate": cls.certificate().map(|c| cert_json(&c)).unwrap_or(Value::Null),
        "derivation": derivation.map(derivation_json).unwrap_or(Value::Null),
    })
}

fn rat_json(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

fn finite_json(p: &FiniteSeq) -> Value {
    Value::Array(p.coeffs().iter().map(rat_json).collect())
}

fn gf_json(u: &GfSeq) -> Value {
    json!({"num": u.gf().num().to_string(), "den": u.gf().den().to_string()})
}

fn cert_json(c: &Certificate) -> Value {
    match c {
        Certificate::Cauchy(c) => json!({
            "kind": "cauchy",
            "multiplier": finite_json(&c.multiplier),
            "product": finite_json(&c.product),
        }),
        Certificate::Dirichlet(c) => json!({
            "kind": "dirichlet",
            "factor": finite_json(&c.factor),
            "transformed": gf_json(&c.transformed),
            "inner": cert_json(&Certificate::Cauchy(c.inner.clone())),
        }),
        Certificate::NonMembership(w) => json!({
            "kind": "non_membership",
            "multiplier": finite_json(&w.multiplier),
            "product": finite_json(&w.product),
        }),
    }
}

fn derivation_json(d: &Derivation) -> Value {
    let steps: Vec<Value> = d
        .steps
        .iter()
        .map(|s| match s {
            DerivationStep::Cauchy {
                sequence,
                multiplier,
                product,
                value,
            } => json!({
                "kind": "cauchy",
                "sequence": gf_json(sequence),
                "multiplier": finite_json(multiplier),
                "product": finite_json(product),
                "value": format_rat(value),
            }),
            DerivationStep::Dirichlet {
                sequence,
                factor,
                transformed,
                transformed_value,
                value,
            } => json!({
                "kind": "dirichlet",
                "sequence": gf_json(sequence),
                "factor": finite_json(factor),
                "transformed": gf_json(transformed),
                "transformed_value": format_rat(transformed_value),
                "value": format_rat(value),
            }),
        })
        .collect();
    json!({"steps": steps, "value": format_rat(&d.value)})
}

fn ok(stdout: String) -> CliOutput {
    CliOutput {
        exit_code: 0,
        stdout,
        stderr: String::new(),
    }
}

fn fail(code: i32, msg: &str) -> CliOutput {
    CliOutput {
        exit_code: code,
        stdout: String::new(),
        stderr: format!("{msg}\n"),
    }
}

fn usage_error(msg: &str) -> CliOutput {
    CliOutput {
        exit_code: 2,
        stdout: String::new(),
        stderr: format!("error: {msg}\n\n{USAGE}"),
    }
}

fn parse_failure(text: &str, err: &ParseError) -> CliOutput {
    let caret = format!("{}^", " ".repeat(err.position));
    fail(
        2,
        &format!("parse error: {}\n  {text}\n  {caret}", err.message),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cmd(args: &[&str]) -> CliOutput {
        run(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    }

    #[test]
    fn sum_of_the_power_sequence() {
        let out = run_cmd(&["sum", "P(1)"]);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "-1/12\n");
        assert_eq!(out.stderr, "");
    }

    #[test]
    fn terms_of_an_interleaved_product() {
        let out = run_cmd(&["terms", "P(1) os (e(0) - 4*e(1))", "-n", "4"]);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "1, -2, 3, -4\n");
    }

    #[test]
    fn bare_harmonic_is_rejected() {
        let out = run_cmd(&["sum", "H"]);
        assert_eq!(out.exit_code, 5);
        assert_eq!(out.stdout, "");
        assert!(out.stderr.starts_with("not in class:"), "{}", out.stderr);
    }

    #[test]
    fn difference_of_power_sequences() {
        let out = run_cmd(&["sum", "P(1) - P(0)"]);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "5/12\n");
    }

    #[test]
    fn multiword_expressions_are_joined() {
        let out = run_cmd(&["sum", "P(1)", "-", "P(0)"]);
        assert_eq!(out.stdout, "5/12\n");
    }

    #[test]
    fn classify_reports_the_tier() {
        let out = run_cmd(&["classify", "G(1/2)"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("absolutely convergent"), "{}", out.stdout);

        let out = run_cmd(&["classify", "G(-1)"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("Cauchy-product extension"), "{}", out.stdout);

        let out = run_cmd(&["classify", "P(0)"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("Dirichlet-product extension"), "{}", out.stdout);
    }

    #[test]
    fn classify_flags_exhausted_searches() {
        // support 0 leaves the Dirichlet tier no candidates at all
        let out = run_cmd(&["classify", "--max-support", "0", "P(0)"]);
        assert_eq!(out.exit_code, 3);
        assert!(out.stdout.contains("provably not Cauchy-summable"), "{}", out.stdout);
    }

    #[test]
    fn sum_distinguishes_bound_exhaustion() {
        let out = run_cmd(&["sum", "--max-support", "0", "P(0)"]);
        assert_eq!(out.exit_code, 4);
        assert_eq!(out.stdout, "");
        assert!(out.stderr.starts_with("no value:"), "{}", out.stderr);
    }

    #[test]
    fn gf_prints_the_rational_function() {
        let out = run_cmd(&["gf", "P(1)"]);
        assert_eq!(out.stdout, "1 / 1 - 2*x + x^2\n");
    }

    #[test]
    fn explain_prints_verified_steps() {
        let out = run_cmd(&["explain", "P(1)"]);
        assert_eq!(out.exit_code, 0);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines.len(), 3, "{}", out.stdout);
        assert!(lines[0].starts_with("1. "));
        assert!(lines[1].starts_with("2. "));
        assert_eq!(lines[2], "sigma = -1/12");
    }

    #[test]
    fn abel_estimates_numerically() {
        let out = run_cmd(&["abel", "G(-1)"]);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "0.5000000000\n");

        let out = run_cmd(&["abel", "P(0)"]);
        assert_eq!(out.exit_code, 3);
        assert!(out.stderr.contains("pole at 1"), "{}", out.stderr);
    }

    #[test]
    fn special_number_commands() {
        assert_eq!(run_cmd(&["bernoulli", "1"]).stdout, "1/2\n");
        assert_eq!(run_cmd(&["bernoulli", "12"]).stdout, "-691/2730\n");
        assert_eq!(run_cmd(&["zeta", "-1"]).stdout, "-1/12\n");
        assert_eq!(run_cmd(&["zeta", "0"]).stdout, "-1/2\n");
        // negative arguments survive the flag scan
        assert_eq!(run_cmd(&["zeta", "-3"]).stdout, "1/120\n");
        assert_eq!(run_cmd(&["zeta", "1"]).exit_code, 2);
    }

    #[test]
    fn demo_harmonic_reaches_ln_2() {
        let out = run_cmd(&["demo", "harmonic"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("1, -1/2, 1/3"), "{}", out.stdout);
        assert!(out.stdout.contains("0.6931471806"), "{}", out.stdout);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_cmd(&[]).exit_code, 2);
        assert_eq!(run_cmd(&["frobnicate"]).exit_code, 2);
        assert_eq!(run_cmd(&["sum"]).exit_code, 2);
        assert_eq!(run_cmd(&["sum", "--frobnicate", "P(1)"]).exit_code, 2);
        assert_eq!(run_cmd(&["demo", "entropy"]).exit_code, 2);

        let out = run_cmd(&["sum", "P(1) +"]);
        assert_eq!(out.exit_code, 2);
        assert!(out.stderr.contains("parse error"), "{}", out.stderr);
    }

    #[test]
    fn dirichlet_of_two_infinite_operands_is_out_of_class() {
        let out = run_cmd(&["sum", "P(0) os P(0)"]);
        assert_eq!(out.exit_code, 5);
        assert!(out.stderr.contains("not in class"), "{}", out.stderr);
    }

    #[test]
    fn json_output_is_versioned_and_agrees_with_plain() {
        let out = run_cmd(&["sum", "--json", "P(1)"]);
        assert_eq!(out.exit_code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["expr"], "P(1)");
        assert_eq!(v["sum"], "-1/12");
        assert_eq!(v["classification"], "dirichlet_ext_summable");
        assert_eq!(v["gf"]["num"], "1");
        assert_eq!(v["gf"]["den"], "1 - 2*x + x^2");
        assert_eq!(v["certificate"]["kind"], "dirichlet");
        assert_eq!(v["certificate"]["factor"], json!(["1", "-4"]));
        assert!(v["derivation"].is_null());

        let out = run_cmd(&["explain", "--json", "P(1)"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["derivation"]["value"], "-1/12");
        assert_eq!(v["derivation"]["steps"].as_array().unwrap().len(), 2);

        let out = run_cmd(&["classify", "--json", "G(-1)"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["classification"], "cauchy_ext_summable");
        assert_eq!(v["sum"], "1/2");
        assert_eq!(v["certificate"]["kind"], "cauchy");
    }

    #[test]
    fn json_sum_is_null_when_no_value_is_forced() {
        let out = run_cmd(&["sum", "--json", "--max-support", "0", "P(0)"]);
        assert_eq!(out.exit_code, 4);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert!(v["sum"].is_null());
        assert_eq!(v["classification"], "not_cauchy_summable");
        assert_eq!(v["certificate"]["kind"], "non_membership");
    }

    #[test]
    fn help_is_a_success() {
        let out = run_cmd(&["help"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("usage: divisum"));
    }
}
