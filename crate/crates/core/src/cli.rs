//! The `lrb` command line. Every verb parses flags, calls one library
//! function and prints its result; nothing is computed here.

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bz4::{bz_grading, lift_to_gl4, reproduce_sl4_table, BZAssignment};
use crate::error::{Error, Result};
use crate::hwv::{delta, delta_mt, delta_ty, CoeffSpec};
use crate::oracle::{lr_coefficient, schur_polynomial};
use crate::polyring::Polynomial;
use crate::shapes::{validate_triple, LRTriple, Partition};
use crate::tableaux::{
    enumerate_lr, monomial_big_e, monomial_e, monomial_e1, monomial_m, standard_peeling, LRTableau,
};
use crate::verify::{basis_report, check_hwv, check_leading_term, weight_profile, WeightProfile};

#[derive(Parser, Debug)]
#[command(name = "lrb", version, about = "Littlewood–Richardson tableaux and determinantal highest weight vectors")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for determinant expansion (default: LRB_THREADS, else all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
struct TripleArgs {
    #[arg(long = "D", value_name = "PARTITION")]
    d: Partition,
    #[arg(long = "E", value_name = "PARTITION")]
    e: Partition,
    #[arg(long = "F", value_name = "PARTITION")]
    f: Partition,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
}

impl TripleArgs {
    fn triple(&self) -> Result<LRTriple> {
        let min = LRTriple::minimal(self.d.clone(), self.e.clone(), self.f.clone())?;
        if self.n.is_none() && self.k.is_none() && self.ell.is_none() {
            return Ok(min);
        }
        validate_triple(
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
            self.n.unwrap_or(min.n()),
            self.k.unwrap_or(min.k()),
            self.ell.unwrap_or(min.ell()),
        )
    }
}

#[derive(Args, Debug, Clone)]
struct TableauArgs {
    /// Tableau JSON ({"outer","inner","rows"}); `-` reads stdin.
    #[arg(long, conflicts_with = "index")]
    tableau: Option<String>,
    /// 1-based position in the enumeration order of `lrb tableaux`.
    #[arg(long)]
    index: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of LR tableaux, and the Schur-function count.
    Count(TripleArgs),
    /// All LR tableaux of shape F^t − D^t and content E^t.
    Tableaux(TripleArgs),
    /// Standard peeling of one tableau.
    Peel {
        #[command(flatten)]
        triple: TripleArgs,
        #[command(flatten)]
        tab: TableauArgs,
    },
    /// M(T), e(T), e_1(T) and 𝓔(T) of one tableau.
    Monomials {
        #[command(flatten)]
        triple: TripleArgs,
        #[command(flatten)]
        tab: TableauArgs,
    },
    /// The full symbolic Δ, or with --coeff the coefficient Δ_{M(T)}.
    Delta {
        #[command(flatten)]
        triple: TripleArgs,
        #[command(flatten)]
        tab: TableauArgs,
        #[arg(long)]
        coeff: bool,
    },
    /// δ_{T,Y}, the M(T)-coefficient of det Ỹ_o.
    DeltaTy {
        #[command(flatten)]
        triple: TripleArgs,
        #[command(flatten)]
        tab: TableauArgs,
    },
    /// Highest-weight, weight, leading-term and basis checks.
    Verify {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long)]
        hwv: bool,
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        leading: bool,
        #[arg(long)]
        basis: bool,
        #[arg(long)]
        all: bool,
    },
    /// Schur-function oracle.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Rebuild the SL_4 generator table.
    Sl4Table,
    /// Grading of an SL_4 BZ diagram given by its dotted triangles.
    BzGrade {
        /// Comma list such as x21,z12,y11,y22,x13.
        #[arg(long, value_delimiter = ',')]
        dots: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// c^{F^t}_{D^t,E^t} from s_{D^t}·s_{E^t}.
    Lrcoef(TripleArgs),
    /// s_λ(z_1, …, z_n).
    Schur {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        nvars: usize,
    },
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn load_tableau(triple: &LRTriple, args: &TableauArgs) -> Result<LRTableau> {
    let t = match (&args.tableau, args.index) {
        (Some(path), _) => {
            let text = if path == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
            };
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let t = LRTableau::from_json(&v)?;
            LRTableau::for_triple(triple, t.rows().to_vec())?
        }
        (None, i) => {
            let i = i.unwrap_or(1);
            let all = enumerate_lr(triple);
            let n = all.len();
            all.into_iter().nth(i.wrapping_sub(1)).ok_or_else(|| {
                Error::IndexError(format!("tableau index {i} outside 1..={n}"))
            })?
        }
    };
    Ok(t)
}

fn poly_json(p: &Polynomial) -> Value {
    json!({ "num_terms": p.len(), "polynomial": p.to_string() })
}

fn dispatch(cmd: Command) -> Result<Value> {
    Ok(match cmd {
        Command::Count(a) => {
            let t = a.triple()?;
            json!({ "lr_count": enumerate_lr(&t).len(), "oracle_count": lr_coefficient(&t)? })
        }
        Command::Tableaux(a) => {
            let tabs = enumerate_lr(&a.triple()?);
            json!({
                "count": tabs.len(),
                "tableaux": tabs.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
            })
        }
        Command::Peel { triple, tab } => {
            let t = load_tableau(&triple.triple()?, &tab)?;
            standard_peeling(&t)?.to_json()
        }
        Command::Monomials { triple, tab } => {
            let t = load_tableau(&triple.triple()?, &tab)?;
            json!({
                "tableau": t.to_json(),
                "M": monomial_m(&t)?.rows(),
                "e": monomial_e(&t)?.to_string(),
                "e1": monomial_e1(&t)?.to_string(),
                "E": monomial_big_e(&t)?.to_string(),
            })
        }
        Command::Delta { triple, tab, coeff } => {
            let tr = triple.triple()?;
            if coeff {
                poly_json(&delta_mt(&tr, &load_tableau(&tr, &tab)?)?)
            } else {
                poly_json(&delta(&tr, &CoeffSpec::Symbolic, &CoeffSpec::Symbolic)?)
            }
        }
        Command::DeltaTy { triple, tab } => {
            let tr = triple.triple()?;
            poly_json(&delta_ty(&tr, &load_tableau(&tr, &tab)?)?)
        }
        Command::Verify {
            triple,
            hwv,
            weights,
            leading,
            basis,
            all,
        } => {
            let tr = triple.triple()?;
            let (hwv, weights, leading, basis) = if all || !(hwv || weights || leading || basis) {
                (true, true, true, true)
            } else {
                (hwv, weights, leading, basis)
            };
            let tabs = enumerate_lr(&tr);
            let deltas = if hwv || weights || basis {
                tabs.iter().map(|t| delta_mt(&tr, t)).collect::<Result<Vec<_>>>()?
            } else {
                Vec::new()
            };
            let mut out = Map::new();
            let mut pass = true;
            if hwv {
                let ok = deltas.iter().all(|p| check_hwv(p, &tr));
                pass &= ok;
                out.insert("hwv".into(), json!(ok));
            }
            if weights {
                let want = WeightProfile::expected(&tr);
                let ok = deltas
                    .iter()
                    .map(|p| weight_profile(p).map(|w| w == want))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .all(|b| b);
                pass &= ok;
                out.insert("weights".into(), json!(ok));
            }
            if leading {
                let ok = tabs
                    .iter()
                    .map(|t| check_leading_term(&tr, t))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .all(|b| b);
                pass &= ok;
                out.insert("leading".into(), json!(ok));
            }
            if basis {
                let r = basis_report(&tr, &tabs, &deltas)?;
                pass &= r.pass;
                out.insert("rank".into(), json!(r.rank));
            }
            out.insert("pass".into(), json!(pass));
            Value::Object(out)
        }
        Command::Oracle { which } => match which {
            OracleCommand::Lrcoef(a) => json!({ "lr_coefficient": lr_coefficient(&a.triple()?)? }),
            OracleCommand::Schur { shape, nvars } => poly_json(&schur_polynomial(&shape, nvars)?),
        },
        Command::Sl4Table => {
            let rows = reproduce_sl4_table();
            json!({ "pass": rows.iter().all(|r| r.pass), "rows": rows })
        }
        Command::BzGrade { dots } => {
            let a = BZAssignment::from_dots(&dots)?;
            let (dt, et, ft) = bz_grading(&a)?;
            json!({
                "Dt": dt,
                "Et": et,
                "Ft": ft,
                "hexagon_condition": a.hexagon_condition(),
                "Ft_gl4": lift_to_gl4(&dt, &et, &ft).ok(),
            })
        }
    })
}

/// Flat `key: value` lines for objects, compact JSON for everything nested.
fn to_text(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn threads_from_env() -> Option<usize> {
    std::env::var("LRB_THREADS").ok()?.trim().parse().ok()
}

/// Runs one command line (`argv[0]` is the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let format = cli.format;
    let threads = cli.threads.or_else(threads_from_env);
    let work = move || dispatch(cli.command);
    let result = match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(e) => {
                return Outcome { code: 2, stdout: String::new(), stderr: format!("--threads: {e}\n") };
            }
        },
        None => work(),
    };
    match result {
        Ok(v) => {
            let body = match format {
                Format::Json => v.to_string(),
                Format::Text => to_text(&v),
            };
            Outcome { code: 0, stdout: body + "\n", stderr: String::new() }
        }
        Err(e) => {
            let v = json!({ "error": e.kind(), "message": e.to_string() });
            Outcome {
                code: 1,
                stdout: v.to_string() + "\n",
                stderr: format!("lrb: {e}\n"),
            }
        }
    }
}
