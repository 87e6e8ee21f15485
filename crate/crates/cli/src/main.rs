mod cache;
mod expr;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};
use sympair::error::{Mod2Error, PairingError, ParseError, SchurError};
use sympair::mod2::{nilpotency_a1, nilpotency_alpha, table1};
use sympair::pairings::{
    b1_pairing, cn_d, cn_delta, cn_tangent, cn_xi, cn_z, delta_monomial_in_xi, pairing_newstead,
    ClassPoly, CnPolynomial,
};
use sympair::rational::rat;
use sympair::schur::{kostka_ssyt, skew_schur, JtRoute, SkewShape};
use sympair::symcore::{Basis, Partition};
use sympair::Rational;

use crate::expr::Monomial;
use crate::output::{partition, rational, rational_text, Format, Rendered};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Mod2(#[from] Mod2Error),
    #[error(transparent)]
    Schur(#[from] SchurError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        let pairing = match self {
            CliError::Pairing(e) | CliError::Mod2(Mod2Error::Pairing(e)) => Some(e),
            _ => None,
        };
        match pairing {
            Some(PairingError::GenusOutOfRange { .. }) => 3,
            Some(
                PairingError::DegreeMismatch { .. }
                | PairingError::InvalidGenus { .. }
                | PairingError::InvalidIndex(_)
                | PairingError::AsPrintedNotRequested,
            ) => 2,
            Some(_) => 1,
            None => match self {
                CliError::Mod2(
                    Mod2Error::InternalParityFault(_) | Mod2Error::EvenDenominator(_),
                ) => 1,
                _ => 2,
            },
        }
    }
}

#[derive(Parser)]
#[command(
    name = "sympair",
    version,
    about = "Exact intersection pairings on moduli of rank-two bundles"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceArg {
    #[value(alias = "n")]
    N,
    #[value(alias = "m")]
    M,
    Tangent,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    M,
    E,
    H,
}

impl BasisArg {
    fn basis(self) -> Basis {
        match self {
            BasisArg::M => Basis::M,
            BasisArg::E => Basis::E,
            BasisArg::H => Basis::H,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Alpha,
    A1,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    E,
    H,
}

#[derive(Subcommand)]
enum Command {
    /// Chern number polynomial on N_k, M_k, or of the tangent bundle of N_g.
    Cn {
        #[arg(value_enum, ignore_case = true)]
        space: SpaceArg,
        g: u32,
        /// Defaults to g; ignored for the tangent bundle.
        k: Option<u32>,
        #[arg(long, value_enum, default_value = "m")]
        basis: BasisArg,
        /// Use the twisted classes delta and d instead of xi and z.
        #[arg(long)]
        twisted: bool,
    },
    /// Pairing of a monomial such as "a^5 d[2] d[8]" on N_k.
    Pair {
        expression: String,
        g: u32,
        /// Defaults to g minus the number of psi pairs in the expression.
        k: Option<u32>,
    },
    /// Partitions with odd pairings, for each genus up to gmax.
    Table1 {
        #[arg(long, default_value_t = 4)]
        gmax: u32,
    },
    /// Certificate for the nilpotency degree of alpha on N_g or a1 on M_g.
    Nilpotency {
        #[arg(value_enum)]
        target: Target,
        g: u32,
    },
    /// Skew Schur function in the monomial basis.
    Schur {
        outer: String,
        #[arg(default_value = "[]")]
        inner: String,
        #[arg(long, value_enum, default_value = "e")]
        route: RouteArg,
    },
    /// Number of semistandard tableaux of a skew shape with given content.
    Kostka {
        outer: String,
        inner: String,
        content: String,
    },
    /// Pairings with b-class pairs on M_k from the closed b1 formula.
    B1 {
        g: u32,
        k: u32,
        j: u32,
        lambda: String,
        /// Serve the closed formula even though it is internally inconsistent.
        #[arg(long)]
        as_printed: bool,
    },
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse::<Partition>()?)
}

fn cn_result(cn: &CnPolynomial, basis: Basis, params: &Value) -> Rendered {
    let f = cn.in_basis(basis);
    let result = json!({
        "space": cn.space().name(),
        "classes": cn.family.symbol(),
        "g": params["g"],
        "k": params["k"],
        "degree": cn.degree(),
        "basis": basis.symbol(),
        "terms": output::terms(&f),
    });
    Rendered {
        result,
        text: f.to_string(),
        csv: output::terms_csv(&f),
    }
}

fn scalar(result: Value, text: String) -> Rendered {
    let csv = output::fields_csv(&result);
    Rendered { result, text, csv }
}

fn degree_error(m: &Monomial, k: u32) -> CliError {
    CliError::Pairing(PairingError::DegreeMismatch {
        lhs: 2 * m.degree() as i64,
        rhs: 6 * k as i64 - 6,
        detail: format!("real degree of {m} against the real dimension of N_{k}"),
    })
}

fn evaluate(m: &Monomial, g: u32, k: u32) -> Result<Rational, CliError> {
    if k == 0 || k > g {
        return Err(PairingError::InvalidGenus { g, k }.into());
    }
    if m.degree() != 3 * k - 3 {
        return Err(degree_error(m, k));
    }
    if let Some([i, j, c]) = m.newstead {
        // A block of psi pairs restricts the Newstead monomial to N_k.
        return Ok(pairing_newstead(k, i, j, c)?);
    }
    let cn = cn_xi(g, k)?;
    let delta = Partition::from_parts(m.delta.iter().copied());
    let xi = ClassPoly::monomial(0, Partition::from_parts(m.xi.iter().copied()), rat(1));
    let expanded = delta_monomial_in_xi(g, &delta, m.alpha).mul(&xi);
    Ok(expanded
        .terms()
        .iter()
        .map(|((_, classes), c)| c * cn.coeff(classes))
        .fold(Rational::zero(), |a, b| a + b))
}

fn run(
    command: &Command,
) -> Result<
    (
        String,
        Value,
        Box<dyn FnOnce() -> Result<Rendered, CliError> + '_>,
    ),
    CliError,
> {
    Ok(match command {
        Command::Cn {
            space,
            g,
            k,
            basis,
            twisted,
        } => {
            let k = match space {
                SpaceArg::Tangent => *g,
                _ => k.unwrap_or(*g),
            };
            let params = json!({
                "space": format!("{space:?}"),
                "g": g,
                "k": k,
                "basis": basis.basis().symbol(),
                "twisted": twisted,
            });
            let (g, space, basis, twisted) = (*g, *space, basis.basis(), *twisted);
            let p = params.clone();
            (
                "cn".into(),
                params,
                Box::new(move || {
                    let cn = match (space, twisted) {
                        (SpaceArg::N, false) => cn_xi(g, k)?,
                        (SpaceArg::N, true) => cn_delta(g, k)?,
                        (SpaceArg::M, false) => cn_z(g, k)?,
                        (SpaceArg::M, true) => cn_d(g, k)?,
                        (SpaceArg::Tangent, _) => cn_tangent(g)?,
                    };
                    Ok(cn_result(&cn, basis, &p))
                }),
            )
        }
        Command::Pair { expression, g, k } => {
            let mut m = Monomial::parse(expression)?;
            let k = match k {
                Some(k) => {
                    if m.psi_pairs > 0 && m.psi_pairs + k != *g {
                        return Err(CliError::Invalid(format!(
                            "{} psi pairs on N_{g} restrict to N_{}, not N_{k}",
                            m.psi_pairs,
                            g.saturating_sub(m.psi_pairs)
                        )));
                    }
                    *k
                }
                None => g.checked_sub(m.psi_pairs).ok_or_else(|| {
                    CliError::Invalid(format!("{} psi pairs exceed g = {g}", m.psi_pairs))
                })?,
            };
            m.psi_pairs = g - k.min(*g);
            let params = json!({ "expression": m.to_string(), "g": g, "k": k });
            let g = *g;
            (
                "pair".into(),
                params,
                Box::new(move || {
                    let v = evaluate(&m, g, k)?;
                    Ok(scalar(
                        json!({ "expression": m.to_string(), "g": g, "k": k, "value": rational(&v) }),
                        rational_text(&v),
                    ))
                }),
            )
        }
        Command::Table1 { gmax } => {
            if *gmax == 0 || *gmax > 8 {
                return Err(CliError::Invalid(format!(
                    "gmax must be in 1..=8, got {gmax}"
                )));
            }
            let gmax = *gmax;
            (
                "table1".into(),
                json!({ "gmax": gmax }),
                Box::new(move || {
                    let rows: Vec<_> = table1(gmax)?.into_iter().flatten().collect();
                    let result = json!({
                        "rows": rows.iter().map(|r| json!({
                            "g": r.g,
                            "k": r.psi_pairs,
                            "odd_partitions": r.odd_partitions.iter().map(partition).collect::<Vec<_>>(),
                        })).collect::<Vec<_>>(),
                    });
                    let text = rows.iter().map(|r| format!("{r}\n")).collect();
                    let csv = output::csv_table(
                        &["g", "k", "partition"],
                        rows.iter().flat_map(|r| {
                            r.odd_partitions.iter().map(move |l| {
                                vec![r.g.to_string(), r.psi_pairs.to_string(), l.to_string()]
                            })
                        }),
                    );
                    Ok(Rendered { result, text, csv })
                }),
            )
        }
        Command::Nilpotency { target, g } => {
            let (target, g) = (*target, *g);
            (
                "nilpotency".into(),
                json!({ "target": format!("{target:?}").to_lowercase(), "g": g }),
                Box::new(move || {
                    let (result, text) = match target {
                        Target::Alpha => {
                            let c = nilpotency_alpha(g)?;
                            let witness = format!("a^{} d[{}]", g - 1, 2 * g - 2);
                            let text = format!(
                                "alpha^{g} = 0 mod 2 on N_{g}: {}\nwitness {witness} = {} ({})\nchecked {} completions",
                                c.certified(),
                                rational_text(&c.witness),
                                if c.witness_odd { "odd" } else { "even" },
                                c.checked
                            );
                            let result = json!({
                                "target": "alpha",
                                "g": g,
                                "certified": c.certified(),
                                "witness": witness,
                                "witness_value": rational(&c.witness),
                                "witness_odd": c.witness_odd,
                                "checked": c.checked,
                                "odd_completion": c.odd_completion.as_ref().map(|(p, l)| json!({"psi_pairs": p, "partition": partition(l)})),
                            });
                            (result, text)
                        }
                        Target::A1 => {
                            let c = nilpotency_a1(g)?;
                            let witness = format!("a1^{} d[{}]", 2 * g - 1, 2 * g - 2);
                            let text = format!(
                                "witness {witness} = {} ({})\nodd window {:?}\nchecked {} pairings, odd: {}\n{}",
                                rational_text(&c.witness),
                                if c.witness_odd { "odd" } else { "even" },
                                c.odd_window,
                                c.checked,
                                c.odd_completion.is_some(),
                                c.coverage
                            );
                            let result = json!({
                                "target": "a1",
                                "g": g,
                                "certified": c.certified(),
                                "witness": witness,
                                "witness_value": rational(&c.witness),
                                "witness_odd": c.witness_odd,
                                "odd_window": c.odd_window,
                                "window_matches": c.window_matches(),
                                "checked": c.checked,
                                "odd_completion": c.odd_completion.as_ref().map(|(k, l)| json!({"k": k, "partition": partition(l)})),
                                "coverage": c.coverage,
                            });
                            (result, text)
                        }
                    };
                    Ok(scalar(result, text))
                }),
            )
        }
        Command::Schur {
            outer,
            inner,
            route,
        } => {
            let shape = SkewShape::new(parse_partition(outer)?, parse_partition(inner)?)?;
            let via = match route {
                RouteArg::E => JtRoute::E,
                RouteArg::H => JtRoute::H,
            };
            (
                "schur".into(),
                json!({
                    "outer": partition(shape.outer()),
                    "inner": partition(shape.inner()),
                    "route": format!("{via:?}"),
                }),
                Box::new(move || {
                    let f = skew_schur(&shape, via);
                    let result = json!({
                        "shape": shape.to_string(),
                        "size": shape.size(),
                        "basis": "m",
                        "terms": output::terms(&f),
                    });
                    Ok(Rendered {
                        result,
                        text: f.to_string(),
                        csv: output::terms_csv(&f),
                    })
                }),
            )
        }
        Command::Kostka {
            outer,
            inner,
            content,
        } => {
            let shape = SkewShape::new(parse_partition(outer)?, parse_partition(inner)?)?;
            let content = parse_partition(content)?;
            (
                "kostka".into(),
                json!({
                    "outer": partition(shape.outer()),
                    "inner": partition(shape.inner()),
                    "content": partition(&content),
                }),
                Box::new(move || {
                    let n = kostka_ssyt(&shape, &content)?;
                    Ok(scalar(
                        json!({ "shape": shape.to_string(), "content": partition(&content), "count": n.to_string() }),
                        n.to_string(),
                    ))
                }),
            )
        }
        Command::B1 {
            g,
            k,
            j,
            lambda,
            as_printed,
        } => {
            let lambda = parse_partition(lambda)?;
            if *as_printed {
                eprintln!(
                    "warning: the closed b1 formula is internally inconsistent (prefactor, \
                     j = 0 reduction and degree condition); see the discrepancies field"
                );
            }
            let (g, k, j, as_printed) = (*g, *k, *j, *as_printed);
            (
                "b1".into(),
                json!({ "g": g, "k": k, "j": j, "lambda": partition(&lambda), "as_printed": as_printed }),
                Box::new(move || {
                    let r = b1_pairing(g, k, j, &lambda, as_printed)?;
                    let value = r.as_printed.as_ref().or(r.mg_route.as_ref());
                    let text = match value {
                        Some(v) => rational_text(v),
                        None => "none".into(),
                    };
                    let result = json!({
                        "g": g,
                        "k": k,
                        "j": j,
                        "lambda": partition(&r.lambda),
                        "printed_degree_ok": r.printed_degree_ok,
                        "dimension_degree_ok": r.dimension_degree_ok,
                        "as_printed": r.as_printed.as_ref().map(rational),
                        "mg_route": r.mg_route.as_ref().map(rational),
                        "discrepancies": r.discrepancies,
                    });
                    Ok(scalar(result, text))
                }),
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, params, compute) = match run(&cli.command) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let cache = if cli.no_cache {
        None
    } else {
        cache::Cache::open()
    };
    let key = cache::key(sympair::VERSION, &name, &params);
    let hit = cache.as_ref().and_then(|c| c.get(&key));
    let rendered = match hit {
        Some(r) => r,
        None => match compute() {
            Ok(r) => {
                if let Some(c) = &cache {
                    c.put(&key, &r);
                }
                r
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(e.exit_code());
            }
        },
    };
    let ms = start.elapsed().as_millis();
    let body = match cli.format {
        Format::Json => {
            let env = output::envelope(&name, &params, &rendered.result, ms);
            serde_json::to_string_pretty(&env).expect("json") + "\n"
        }
        Format::Csv => rendered.csv,
        Format::Text => format!("{}\n", rendered.text.trim_end()),
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    ExitCode::SUCCESS
}
