//! The `mtorsion` command line.
//!
//! Every subcommand writes one JSON document to stdout. Exit status is 0
//! when a result was produced (whatever the verdict), 2 on input errors and
//! 3 when an internal consistency check fails.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codec::{self, MatrixFormat};
use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::mpp;
use crate::numtheory;
use crate::poly::IntPoly;
use crate::torsion::{self, BoundMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mtorsion",
    version,
    about = "Exact matrix torsion decisions and certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MatrixInput {
    /// Matrix file, or `-` for stdin (the default)
    #[arg(conflicts_with = "matrix")]
    pub input: Option<PathBuf>,
    /// Inline matrix instead of a file
    #[arg(long, short = 'm')]
    pub matrix: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: MatrixFormat,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum PiRoute {
    /// γ_1 ⋯ γ_n
    #[default]
    Product,
    /// ν_n / gcd(ν_n, ν_n')
    Gcd,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide torsion (minimal-polynomial certificate by default)
    Decide {
        #[command(flatten)]
        input: MatrixInput,
        /// Use the annihilation test with z^d·π_(2d²)
        #[arg(long)]
        faithful: bool,
    },
    /// Emit the torsion certificate
    Certificate {
        #[command(flatten)]
        input: MatrixInput,
    },
    /// Check a certificate against a matrix
    Verify {
        #[command(flatten)]
        input: MatrixInput,
        /// Certificate file, or inline JSON object
        #[arg(long, short = 'c')]
        certificate: String,
    },
    /// π_n, the product of the first n cyclotomic polynomials
    Pi {
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        route: PiRoute,
    },
    /// The n-th cyclotomic polynomial
    Cyclotomic { n: u64 },
    /// ν_n = ∏ (z^j - 1), j = 1..n
    Nu { n: u64 },
    /// Euler's totient
    Totient { n: u64 },
    /// lcm(1, …, n)
    Ell { n: u64 },
    /// Least n with φ(m) > d for all m > n
    Bound {
        d: u64,
        /// Report the closed form 2d² instead
        #[arg(long)]
        faithful: bool,
    },
    /// Longest eventual period of a d×d rational torsion matrix
    Maxperiod { d: u64 },
    /// Build the matrix power problem instance (A, B)
    ReduceMpp {
        #[command(flatten)]
        input: MatrixInput,
        /// Also search for A^n = B with n up to this cap
        #[arg(long)]
        search: Option<u64>,
    },
    /// Look for two equal powers among M, M², …, M^cap
    Powers {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, default_value_t = 64)]
        cap: u64,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn document(doc: Value) -> Self {
        Self {
            status: EXIT_OK,
            stdout: format!("{doc}\n"),
            stderr: String::new(),
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Self {
            status: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdin),
        Err(e) => {
            let status = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    match execute(&cli.command, stdin) {
        Ok(doc) => Outcome::document(doc),
        Err(msg) => Outcome::input_error(msg),
    }
}

fn read_source(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Vec<u8>, String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut buf = Vec::new();
            stdin
                .read_to_end(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn load_matrix(input: &MatrixInput, stdin: &mut dyn Read) -> Result<RatMatrix, String> {
    let bytes = match &input.matrix {
        Some(inline) => inline.clone().into_bytes(),
        None => read_source(input.input.as_ref(), stdin)?,
    };
    codec::parse_matrix(&bytes, input.format).map_err(|e| e.to_string())
}

fn poly_doc(key: &str, n: u64, p: &IntPoly) -> Value {
    json!({
        key: n,
        "degree": p.degree().finite(),
        "coeffs": codec::poly_to_json(&p.to_rat()),
    })
}

fn lib_err(e: Error) -> String {
    e.to_string()
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<Value, String> {
    Ok(match command {
        Command::Decide { input, faithful } => {
            let m = load_matrix(input, stdin)?;
            let d = m.order();
            if *faithful {
                let mode = BoundMode::Faithful;
                json!({
                    "torsion": torsion::decide_torsion_annihilation(&m, mode),
                    "d": d,
                    "method": "annihilation",
                    "bound": mode.index(d as u64),
                })
            } else {
                let c = torsion::torsion_certificate(&m);
                json!({
                    "torsion": c.torsion,
                    "d": d,
                    "method": "certificate",
                    "preperiod": c.preperiod,
                    "period": c.period.as_ref().map(codec::json_integer),
                })
            }
        }
        Command::Certificate { input } => {
            let m = load_matrix(input, stdin)?;
            codec::certificate_to_json(&torsion::torsion_certificate(&m))
        }
        Command::Verify { input, certificate } => {
            let m = load_matrix(input, stdin)?;
            let text = if certificate.trim_start().starts_with('{') {
                certificate.clone()
            } else {
                std::fs::read_to_string(certificate)
                    .map_err(|e| format!("cannot read {certificate}: {e}"))?
            };
            let c = codec::certificate_from_json(&text).map_err(|e| e.to_string())?;
            match torsion::verify_certificate(&m, &c) {
                Ok(()) => json!({ "valid": true, "reason": null }),
                Err(r) => json!({ "valid": false, "reason": r.code() }),
            }
        }
        Command::Pi { n, route } => {
            let p = match route {
                PiRoute::Product => numtheory::pi_poly_product(*n),
                PiRoute::Gcd => numtheory::pi_poly_gcd(*n),
            }
            .map_err(lib_err)?;
            let mut doc = poly_doc("n", *n, &p);
            doc["route"] = json!(match route {
                PiRoute::Product => "product",
                PiRoute::Gcd => "gcd",
            });
            doc
        }
        Command::Cyclotomic { n } => {
            poly_doc("n", *n, &numtheory::cyclotomic(*n).map_err(lib_err)?)
        }
        Command::Nu { n } => poly_doc("n", *n, &numtheory::nu_poly(*n).map_err(lib_err)?),
        Command::Totient { n } => {
            json!({ "n": n, "totient": numtheory::totient(*n).map_err(lib_err)? })
        }
        Command::Ell { n } => {
            json!({ "n": n, "ell": codec::json_integer(numtheory::lcm_upto(*n).map_err(lib_err)?) })
        }
        Command::Bound { d, faithful } => {
            numtheory::torsion_bound(*d).map_err(lib_err)?;
            let mode = if *faithful {
                BoundMode::Faithful
            } else {
                BoundMode::Tight
            };
            json!({ "d": d, "mode": mode.name(), "bound": mode.index(*d) })
        }
        Command::Maxperiod { d } => {
            let mp = numtheory::max_torsion_period(*d).map_err(lib_err)?;
            json!({
                "d": d,
                "period": codec::json_integer(&mp.period),
                "witness": mp.witness.iter().collect::<Vec<_>>(),
            })
        }
        Command::ReduceMpp { input, search } => {
            let m = load_matrix(input, stdin)?;
            let inst = mpp::build_mpp_instance(&m);
            let mut doc = json!({
                "d": inst.source_order,
                "a": codec::matrix_to_json(&inst.a),
                "b": codec::matrix_to_json(&inst.b),
            });
            if let Some(cap) = search {
                let found = mpp::search_matrix_power(&inst.a, &inst.b, *cap).map_err(lib_err)?;
                doc["cap"] = json!(cap);
                doc["power"] = json!(found);
            }
            doc
        }
        Command::Powers { input, cap } => {
            let m = load_matrix(input, stdin)?;
            let repeat =
                torsion::oracle_cycle_detect(&m, *cap).map(|(p, q)| json!({ "p": p, "q": q }));
            json!({ "cap": cap, "repeat": repeat })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        let mut full = vec!["mtorsion"];
        full.extend_from_slice(args);
        run_args(full, &mut std::io::empty())
    }

    fn doc(args: &[&str]) -> Value {
        let out = call(args);
        assert_eq!(out.status, EXIT_OK, "{out:?}");
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn decide_rotation() {
        let d = doc(&["decide", "-m", "[[0,-1],[1,0]]"]);
        assert_eq!(d["torsion"], json!(true));
        assert_eq!(d["preperiod"], json!(0));
        assert_eq!(d["period"].to_string(), "4");
        let f = doc(&["decide", "--faithful", "-m", "[[0,-1],[1,0]]"]);
        assert_eq!(f["torsion"], json!(true));
        assert_eq!(f["bound"], json!(8));
    }

    #[test]
    fn scalar_commands() {
        assert_eq!(doc(&["totient", "9"])["totient"], json!(6));
        assert_eq!(doc(&["ell", "4"])["ell"].to_string(), "12");
        assert_eq!(doc(&["bound", "2"])["bound"], json!(6));
        assert_eq!(doc(&["bound", "2", "--faithful"])["bound"], json!(8));
        let mp = doc(&["maxperiod", "4"]);
        assert_eq!(mp["period"].to_string(), "12");
        assert_eq!(mp["witness"], json!([12]));
    }

    #[test]
    fn polynomial_commands() {
        assert_eq!(doc(&["cyclotomic", "6"])["coeffs"].to_string(), "[1,-1,1]");
        assert_eq!(doc(&["nu", "2"])["coeffs"].to_string(), "[1,-1,-1,1]");
        let a = doc(&["pi", "5"]);
        let b = doc(&["pi", "5", "--route", "gcd"]);
        assert_eq!(a["coeffs"], b["coeffs"]);
        assert_eq!(a["degree"], json!(10));
    }

    #[test]
    fn input_errors_exit_with_two() {
        let out = call(&["decide", "-m", "[[1,2],[3]]"]);
        assert_eq!(out.status, EXIT_INPUT);
        assert_eq!(out.stderr, "error: ragged row 2\n");
        assert_eq!(call(&["totient", "0"]).status, EXIT_INPUT);
        assert_eq!(call(&["maxperiod", "99"]).status, EXIT_INPUT);
        assert_eq!(call(&["decide", "--bogus"]).status, EXIT_INPUT);
        assert_eq!(call(&["frobnicate"]).status, EXIT_INPUT);
        assert_eq!(
            call(&["decide", "/nonexistent/file.json"]).status,
            EXIT_INPUT
        );
        assert_eq!(call(&["--help"]).status, EXIT_OK);
    }

    #[test]
    fn stdin_and_text_format() {
        let mut input: &[u8] = b"0 1\n0 0\n";
        let out = run_args(["mtorsion", "certificate", "--format", "text"], &mut input);
        assert_eq!(out.status, EXIT_OK);
        assert_eq!(
            out.stdout,
            "{\"torsion\":true,\"d\":2,\"k\":2,\"J\":[],\"preperiod\":2,\"period\":1,\"mu\":[0,0,1]}\n"
        );
    }

    #[test]
    fn verify_round_trip_and_tamper() {
        let m = "[[0,-1],[1,1]]";
        let cert = call(&["certificate", "-m", m]).stdout;
        let v = doc(&["verify", "-m", m, "-c", cert.trim()]);
        assert_eq!(v, json!({ "valid": true, "reason": null }));
        let bad = cert.replace("\"J\":[6]", "\"J\":[3]");
        let v = doc(&["verify", "-m", m, "-c", bad.trim()]);
        assert_eq!(v, json!({ "valid": false, "reason": "mu mismatch" }));
        assert_eq!(
            call(&["verify", "-m", m, "-c", "{\"x\":1}"]).status,
            EXIT_INPUT
        );
    }

    #[test]
    fn reduce_and_powers() {
        let r = doc(&["reduce-mpp", "-m", "[[0,-1],[1,0]]", "--search", "20"]);
        assert_eq!(r["a"].as_array().unwrap().len(), 4);
        assert_eq!(r["power"], json!(3));
        let p = doc(&["powers", "-m", "[[0,-1],[1,0]]", "--cap", "10"]);
        assert_eq!(p["repeat"], json!({ "p": 1, "q": 5 }));
        let p = doc(&["powers", "-m", "[[2]]"]);
        assert_eq!(p["repeat"], Value::Null);
    }
}
