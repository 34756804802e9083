use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use super::{ProblemFile, Report};
use crate::algebra::{AffinePoint, MonomialOrder, Ring};
use crate::error::{Error, Result};
use crate::groebner::{krull_dimension, IdealRep};
use crate::intersect::{
    circ_index, divisor_cut, implicitize, proper_intersect, tworzewski_index,
    tworzewski_point_part, CycleRep, ExtendedIndex,
};
use crate::local::{colength, local_dim_mult};
use crate::vogel::{self, Aggregate, TrialConfig, DEFAULT_SEED};

/// Local intersection invariants of polynomial ideals and cycles.
#[derive(Parser, Debug, Clone)]
#[command(name = "segre", version)]
pub struct Invocation {
    /// Problem file.
    pub file: PathBuf,

    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = 4)]
    pub trials: usize,

    /// Random coefficients are drawn from [-B, B].
    #[arg(long = "coeff-bound", global = true, default_value_t = 99)]
    pub coeff_bound: i64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    #[arg(skip)]
    echo: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct VogelArgs {
    /// Ideal whose generators define the tuple f.
    #[arg(long)]
    pub ideal: String,
    #[arg(long)]
    pub point: String,
    /// Ideal of the space X; defaults to the file's `space:` line.
    #[arg(long)]
    pub space: Option<String>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Reduced Gröbner basis.
    Gb {
        #[arg(long)]
        ideal: String,
        /// grevlex, lex or elim:K
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Krull dimension.
    Dim {
        #[arg(long)]
        ideal: String,
    },
    /// Local dimension and Hilbert–Samuel multiplicity at a point.
    Mult {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        point: String,
    },
    /// Colength of a zero-dimensional local ideal.
    Colength {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        point: Option<String>,
    },
    /// Segre numbers e_0..e_n at a point.
    Segre(VogelArgs),
    /// Polar multiplicities m_0..m_n at a point.
    Polar(VogelArgs),
    /// Full trace of every trial.
    Vogel(VogelArgs),
    /// Fixed Vogel components per codimension.
    Fixed {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        space: Option<String>,
    },
    /// Cut a cycle by a divisor.
    Cut {
        /// Polynomial text.
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        cycle: String,
    },
    /// Proper intersection of cycles.
    Intersect {
        #[arg(long, num_args = 1.., required = true)]
        cycles: Vec<String>,
        #[arg(long)]
        point: String,
    },
    /// Extended index of A∘Z.
    Circ {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        cycle: String,
        #[arg(long)]
        point: String,
    },
    /// Extended index of the Tworzewski product.
    Tworzewski {
        #[arg(long, num_args = 2.., required = true)]
        cycles: Vec<String>,
        #[arg(long)]
        point: String,
    },
    /// Tworzewski product split into fixed components and a point part.
    PointPart {
        #[arg(long, num_args = 2.., required = true)]
        cycles: Vec<String>,
        #[arg(long)]
        point: String,
    },
    /// Ideal of the image of a parametrization.
    Implicitize {
        #[arg(long)]
        map: String,
    },
    /// Replay the file's `expect` lines.
    Check,
}

impl Invocation {
    /// Parses `FILE COMMAND [FLAGS]` (without the program name).
    pub fn from_args<I, S>(args: I) -> std::result::Result<Invocation, clap::Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let args: Vec<String> = args.into_iter().map(Into::into).collect();
        let mut inv = Invocation::try_parse_from(
            std::iter::once("segre".to_string()).chain(args.iter().cloned()),
        )?;
        inv.echo = args.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
        Ok(inv)
    }

    /// Parses a command line that refers to an already loaded problem.
    pub fn for_problem<S: AsRef<str>>(args: &[S]) -> Result<Invocation> {
        let mut full = vec!["-".to_string()];
        full.extend(args.iter().map(|s| s.as_ref().to_string()));
        Invocation::from_args(full)
            .map_err(|e| Error::InvalidArgument(e.to_string().trim().to_string()))
    }

    pub fn config(&self) -> TrialConfig {
        TrialConfig {
            trials: self.trials,
            seed: self.seed,
            coeff_bound: self.coeff_bound,
            ..TrialConfig::default()
        }
    }
}

fn ideal_json(ring: &Ring, ideal: &IdealRep) -> Value {
    Value::from(
        ideal
            .grevlex_basis()
            .iter()
            .map(|g| ring.format(g))
            .collect::<Vec<_>>(),
    )
}

fn cycle_json(ring: &Ring, cycle: &CycleRep) -> Value {
    Value::from(
        cycle
            .parts()
            .iter()
            .map(|(i, c)| json!({ "coeff": c, "ideal": ideal_json(ring, i) }))
            .collect::<Vec<_>>(),
    )
}

fn index_json(out: &mut Map<String, Value>, e: &ExtendedIndex) {
    out.insert("by_codim".into(), json!(e.by_codim));
    out.insert("by_dim".into(), json!(e.by_dim));
    out.insert("total".into(), json!(e.total()));
}

fn aggregate_json(out: &mut Map<String, Value>, key: &str, a: &Aggregate) {
    out.insert(key.into(), json!(a.value));
    out.insert("per_trial".into(), json!(a.per_trial));
}

/// Resolves a cycle argument; `A.B` stands for the cycle `A • B` at `x`.
fn cycle_arg(
    problem: &ProblemFile,
    expr: &str,
    x: Option<&AffinePoint>,
    cfg: &TrialConfig,
) -> Result<CycleRep> {
    if !expr.contains('.') {
        return problem.cycle(expr);
    }
    let x = x.ok_or_else(|| Error::InvalidArgument(format!("`{expr}` needs a point")))?;
    let factors = expr
        .split('.')
        .map(|name| problem.cycle(name))
        .collect::<Result<Vec<_>>>()?;
    tworzewski_point_part(&factors, x, cfg)?.to_cycle(x)
}

fn space_arg(problem: &ProblemFile, space: &Option<String>) -> Result<IdealRep> {
    match space {
        Some(name) => Ok(problem.ideal(name)?.clone()),
        None => Ok(problem.space.clone()),
    }
}

fn generators(ideal: &IdealRep) -> Vec<crate::algebra::Polynomial> {
    if ideal.generators().is_empty() {
        vec![crate::algebra::Polynomial::zero(ideal.nvars())]
    } else {
        ideal.generators().to_vec()
    }
}

/// Runs one command against a loaded problem.
pub fn execute(problem: &ProblemFile, inv: &Invocation) -> Result<Report> {
    let started = Instant::now();
    let cfg = inv.config();
    let ring = &problem.ring;
    let mut out = Map::new();
    let mut stable = None;
    let mut flag = None;
    match &inv.command {
        Command::Gb { ideal, order } => {
            let order = MonomialOrder::parse(order).ok_or_else(|| {
                Error::InvalidArgument(format!("unknown monomial order `{order}`"))
            })?;
            let basis = problem.ideal(ideal)?.basis(order);
            out.insert(
                "basis".into(),
                Value::from(basis.iter().map(|g| ring.format(g)).collect::<Vec<_>>()),
            );
        }
        Command::Dim { ideal } => {
            out.insert(
                "dimension".into(),
                json!(krull_dimension(problem.ideal(ideal)?)),
            );
        }
        Command::Mult { ideal, point } => {
            let m = local_dim_mult(problem.ideal(ideal)?, problem.point(point)?)?;
            out.insert("local_dim".into(), json!(m.local_dim));
            out.insert("mult".into(), json!(m.mult));
        }
        Command::Colength { ideal, point } => {
            let mut i = problem.ideal(ideal)?.clone();
            if let Some(p) = point {
                i = i.translate(problem.point(p)?)?;
            }
            out.insert("colength".into(), json!(colength(&i)?));
        }
        Command::Segre(a) | Command::Polar(a) | Command::Vogel(a) => {
            let f = generators(problem.ideal(&a.ideal)?);
            let space = space_arg(problem, &a.space)?;
            let x = problem.point(&a.point)?;
            let runs = vogel::vogel_trials(&f, &space, x, &cfg)?;
            let segre = Aggregate::from_trials(runs.iter().map(|r| r.mult_z.clone()).collect());
            let polar = Aggregate::from_trials(runs.iter().map(|r| r.mult_off.clone()).collect());
            match &inv.command {
                Command::Segre(_) => {
                    aggregate_json(&mut out, "segre", &segre);
                    stable = Some(segre.stable);
                }
                Command::Polar(_) => {
                    aggregate_json(&mut out, "polar", &polar);
                    stable = Some(polar.stable);
                }
                _ => {
                    out.insert("segre".into(), json!(segre.value));
                    out.insert("polar".into(), json!(polar.value));
                    let traces: Vec<Value> = runs
                        .iter()
                        .map(|r| {
                            json!({
                                "alpha": r.sequence.alpha,
                                "h": r.sequence.elements.iter().map(|h| ring.format(h)).collect::<Vec<_>>(),
                                "mult_z": r.mult_z,
                                "mult_off": r.mult_off,
                                "steps": r.steps.iter().enumerate().map(|(k, s)| json!({
                                    "codim": k,
                                    "ideal": ideal_json(ring, &s.ideal),
                                    "off": ideal_json(ring, &s.off),
                                    "inner": ideal_json(ring, &s.inner),
                                    "local": s.local,
                                    "local_off": s.local_off,
                                })).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    out.insert("runs".into(), Value::from(traces));
                    stable = Some(segre.stable);
                }
            }
        }
        Command::Fixed { ideal, space } => {
            let f = generators(problem.ideal(ideal)?);
            let fs = vogel::fixed_support(&f, &space_arg(problem, space)?, &cfg)?;
            out.insert("fixed_codims".into(), json!(fs.fixed_codims()));
            let codims: Vec<Value> = fs
                .codims
                .iter()
                .map(|c| {
                    json!({
                        "codim": c.codim,
                        "fixed": c.is_fixed,
                        "dimension": c.dimension,
                        "support": ideal_json(ring, &c.sum),
                        "kinds": c.kinds,
                    })
                })
                .collect();
            out.insert("codims".into(), Value::from(codims));
        }
        Command::Cut { divisor, cycle } => {
            let h = ring.parse(divisor)?;
            let z = cycle_arg(problem, cycle, None, &cfg)?;
            out.insert("cycle".into(), cycle_json(ring, &divisor_cut(&h, &z)?));
        }
        Command::Intersect { cycles, point } => {
            let x = problem.point(point)?;
            let zs = cycles
                .iter()
                .map(|c| cycle_arg(problem, c, Some(x), &cfg))
                .collect::<Result<Vec<_>>>()?;
            let p = proper_intersect(&zs, x, &cfg)?;
            out.insert("multiplicity".into(), json!(p.multiplicity));
            out.insert("cycle".into(), cycle_json(ring, &p.cycle));
        }
        Command::Circ {
            ideal,
            cycle,
            point,
        } => {
            let x = problem.point(point)?;
            let z = cycle_arg(problem, cycle, Some(x), &cfg)?;
            let e = circ_index(problem.ideal(ideal)?, &z, x, &cfg)?;
            index_json(&mut out, &e);
            stable = Some(e.stable);
        }
        Command::Tworzewski { cycles, point } => {
            let x = problem.point(point)?;
            let zs = cycles
                .iter()
                .map(|c| cycle_arg(problem, c, Some(x), &cfg))
                .collect::<Result<Vec<_>>>()?;
            let e = tworzewski_index(&zs, x, &cfg)?;
            index_json(&mut out, &e);
            stable = Some(e.stable);
        }
        Command::PointPart { cycles, point } => {
            let x = problem.point(point)?;
            let zs = cycles
                .iter()
                .map(|c| cycle_arg(problem, c, Some(x), &cfg))
                .collect::<Result<Vec<_>>>()?;
            let b = tworzewski_point_part(&zs, x, &cfg)?;
            out.insert("total".into(), json!(b.total));
            out.insert("point".into(), json!(b.point));
            let fixed: Vec<Value> = b
                .fixed
                .iter()
                .map(|f| {
                    json!({
                        "ideal": ideal_json(ring, &f.ideal),
                        "dimension": f.dimension,
                        "coefficient": f.coefficient,
                        "local_mult": f.local_mult,
                    })
                })
                .collect();
            out.insert("fixed".into(), Value::from(fixed));
            out.insert("by_codim".into(), json!(b.index.by_codim));
            out.insert("by_dim".into(), json!(b.index.by_dim));
            out.insert("resolved".into(), json!(b.is_resolved()));
            if !b.is_resolved() {
                out.insert("unresolved_codims".into(), json!(b.unresolved));
                flag = Some(
                    Error::UnresolvedMovingSupport(String::new())
                        .code()
                        .to_string(),
                );
            }
            stable = Some(b.index.stable);
        }
        Command::Implicitize { map } => {
            let def = problem.map(map)?;
            out.insert(
                "ideal".into(),
                ideal_json(ring, &implicitize(&def.components)?),
            );
        }
        Command::Check => {
            let outcomes = check(problem)?;
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            out.insert("passed".into(), json!(outcomes.len() - failed));
            out.insert("failed".into(), json!(failed));
            let detail: Vec<Value> = outcomes
                .iter()
                .map(
                    |o| json!({ "line": o.line, "command": o.command, "mismatches": o.mismatches }),
                )
                .collect();
            out.insert("expectations".into(), Value::from(detail));
            if failed > 0 {
                flag = Some("expectation_mismatch".into());
            }
        }
    }
    Ok(Report {
        command: inv.echo.clone(),
        seed: inv.seed,
        trials: inv.trials,
        coeff_bound: inv.coeff_bound,
        results: out,
        stable,
        flag,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Result of replaying one `expect` line.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub line: usize,
    pub command: String,
    pub mismatches: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Replays every `expect` line of the problem.
///
/// The key `error` matches the machine-readable code of a failing command.
pub fn check(problem: &ProblemFile) -> Result<Vec<CheckOutcome>> {
    let mut outcomes = Vec::new();
    for e in &problem.expectations {
        let inv = Invocation::for_problem(&e.args)?;
        if matches!(inv.command, Command::Check) {
            return Err(Error::InvalidArgument(format!(
                "line {}: `check` cannot be expected",
                e.line
            )));
        }
        let result = execute(problem, &inv);
        let mut mismatches = Vec::new();
        for (key, want) in &e.expected {
            let got = match (&result, key.as_str()) {
                (Err(err), "error") => Some(Value::from(err.code())),
                (Err(err), _) => {
                    mismatches.push(format!("{key}: command failed with {}: {err}", err.code()));
                    continue;
                }
                (Ok(_), "error") => None,
                (Ok(r), _) => r.lookup(key),
            };
            if got.as_ref() != Some(want) {
                mismatches.push(format!(
                    "{key}: expected {want}, got {}",
                    got.map(|v| v.to_string())
                        .unwrap_or_else(|| "nothing".into())
                ));
            }
        }
        outcomes.push(CheckOutcome {
            line: e.line,
            command: e.args.join(" "),
            mismatches,
        });
    }
    Ok(outcomes)
}

#[cfg(test)]
mod tests {
    use super::super::parse_problem;
    use super::*;

    const HAK1: &str = "ring t1 t2 t3\nideal F: t3*t1, t3*t2, t3^2\npoint P: 0, 0, 0\n";

    #[test]
    fn segre_command() {
        let p = parse_problem(HAK1).unwrap();
        let inv = Invocation::for_problem(&[
            "segre", "--ideal", "F", "--point", "P", "--trials", "4", "--seed", "7",
        ])
        .unwrap();
        let r = execute(&p, &inv).unwrap();
        assert_eq!(r.results["segre"], json!([0, 1, 1, 2]));
        assert_eq!(r.stable, Some(true));
        assert_eq!(r.seed, 7);
        assert_eq!(r.command, "segre --ideal F --point P --trials 4 --seed 7");
    }

    #[test]
    fn reports_are_reproducible() {
        let p = parse_problem(HAK1).unwrap();
        let inv = Invocation::for_problem(&["vogel", "--ideal", "F", "--point", "P"]).unwrap();
        let a = execute(&p, &inv).unwrap();
        let b = execute(&p, &inv).unwrap();
        assert_eq!(a.body(), b.body());
        assert_eq!(
            a.lookup("runs.0.mult_z").unwrap().as_array().unwrap().len(),
            4
        );
    }

    #[test]
    fn mult_of_cusp() {
        let p = parse_problem("ring z1 z2\nideal C: z1^2 - z2^3\npoint P: 0, 0").unwrap();
        let inv = Invocation::for_problem(&["mult", "--ideal", "C", "--point", "P"]).unwrap();
        let r = execute(&p, &inv).unwrap();
        assert_eq!(r.results["local_dim"], json!(1));
        assert_eq!(r.results["mult"], json!(2));
    }

    #[test]
    fn expectations_replay() {
        let text = format!(
            "{HAK1}expect polar --ideal F --point P => polar=[1,1,1,0]\n\
             expect colength --ideal F => error=\"positive_dimensional\"\n\
             expect dim --ideal F => dimension=3\n"
        );
        let p = parse_problem(&text).unwrap();
        let outcomes = check(&p).unwrap();
        assert!(outcomes[0].passed());
        assert!(outcomes[1].passed());
        assert!(!outcomes[2].passed());
    }
}
