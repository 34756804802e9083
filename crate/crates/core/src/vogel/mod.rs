//! Vogel sequences, Vogel cycles, Segre numbers and polar multiplicities.
//!
//! A run starts from `I_0 = X` and alternates two moves: split `I_k` into the
//! part off `Z = V(J)`, `I_k^off = I_k : J^∞`, and cut that part with the next
//! element `h_{k+1}` of the sequence. The local multiplicity of `I_k` at `x`
//! minus that of `I_k^off` is the multiplicity of the codimension-`k` Vogel
//! cycle; the Segre numbers are the lexicographic minimum of these vectors
//! over random sequences.

pub(crate) mod fixed;
mod reduce;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{rational, AffinePoint, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{krull_dimension, saturate, IdealRep};
use crate::local::{local_dim_mult, LocalMult};

pub use fixed::{fixed_support, FixedCodim, FixedSupport, PartKind};
pub(crate) use reduce::LinearReduction;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5EC2_E000_0001;

/// Non-negative integers indexed by codimension, compared lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MultiplicitySeq(pub Vec<u64>);

impl MultiplicitySeq {
    pub fn zeros(len: usize) -> Self {
        MultiplicitySeq(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl From<Vec<u64>> for MultiplicitySeq {
    fn from(v: Vec<u64>) -> Self {
        MultiplicitySeq(v)
    }
}

impl fmt::Display for MultiplicitySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// How trials are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub trials: usize,
    pub seed: u64,
    /// Coefficients are drawn uniformly from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    /// Redraws allowed per trial before giving up.
    pub retries: usize,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            trials: 4,
            seed: DEFAULT_SEED,
            coeff_bound: 99,
            retries: 16,
        }
    }
}

impl TrialConfig {
    pub fn with_trials(self, trials: usize) -> Self {
        TrialConfig { trials, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        TrialConfig { seed, ..self }
    }
}

/// `h_j = Σ_l alpha[j][l] f_l` for `j = 1..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VogelSequence {
    pub alpha: Vec<Vec<i64>>,
    pub elements: Vec<Polynomial>,
    pub seed: u64,
    /// Trial index; each trial draws from its own stream of the seed.
    pub stream: u64,
    pub certified: bool,
}

/// One step of a run: `I_k`, `I_k^off = I_k : J^∞` and `I_k^in = I_k : (I_k^off)^∞`.
#[derive(Clone, Debug)]
pub struct VogelStep {
    pub ideal: IdealRep,
    pub off: IdealRep,
    pub inner: IdealRep,
    pub local: LocalMult,
    pub local_off: LocalMult,
}

/// The full trace of one trial.
#[derive(Clone, Debug)]
pub struct VogelRun {
    pub sequence: VogelSequence,
    pub steps: Vec<VogelStep>,
    /// Multiplicities at `x` of the Vogel cycle `X_k^Z`.
    pub mult_z: MultiplicitySeq,
    /// Multiplicities at `x` of the part off `Z`, `X_k^{X∖Z}`.
    pub mult_off: MultiplicitySeq,
    pub(crate) reduced: Vec<ReducedStep>,
}

#[derive(Clone, Debug)]
pub(crate) struct ReducedStep {
    pub(crate) ideal: IdealRep,
    pub(crate) off: IdealRep,
    pub(crate) inner: Option<IdealRep>,
}

/// Result of a Vogel condition check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VogelCheck {
    pub passed: bool,
    pub failing_codim: Option<usize>,
}

/// Lexicographic minimum over trials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub value: MultiplicitySeq,
    /// At least two trials attained the minimum.
    pub stable: bool,
    pub per_trial: Vec<MultiplicitySeq>,
}

impl Aggregate {
    pub(crate) fn from_trials(per_trial: Vec<MultiplicitySeq>) -> Aggregate {
        let value = per_trial.iter().min().cloned().unwrap_or_default();
        let hits = per_trial.iter().filter(|m| **m == value).count();
        Aggregate {
            value,
            stable: hits >= 2,
            per_trial,
        }
    }
}

/// `f` and `X` in reduced coordinates, shared by all trials.
pub(crate) struct Setup {
    pub(crate) nvars: usize,
    pub(crate) reduction: LinearReduction,
    pub(crate) space: IdealRep,
    pub(crate) f: Vec<Polynomial>,
    pub(crate) j: IdealRep,
    pub(crate) dim: usize,
}

impl Setup {
    pub(crate) fn new(f: &[Polynomial], space: &IdealRep) -> Result<Setup> {
        if f.is_empty() {
            return Err(Error::InvalidArgument("the generator list is empty".into()));
        }
        for g in f {
            g.check_arity(space.nvars())?;
        }
        let dim = krull_dimension(space);
        if dim < 0 {
            return Err(Error::InvalidArgument("the space X is empty".into()));
        }
        let (reduction, reduced_space) = LinearReduction::new(space);
        let f_red: Vec<Polynomial> = f.iter().map(|g| reduction.reduce(g)).collect();
        let j = reduced_space.with_generators(&f_red);
        Ok(Setup {
            nvars: space.nvars(),
            reduction,
            space: reduced_space,
            f: f_red,
            j,
            dim: dim as usize,
        })
    }

    pub(crate) fn combine(&self, row: &[i64]) -> Polynomial {
        combine(&self.f, row, self.reduction.reduced_nvars())
    }

    /// `I : J^∞`, where `J = (0)` removes everything.
    pub(crate) fn off_part(&self, ideal: &IdealRep) -> Result<IdealRep> {
        if self.j.is_zero() {
            return Ok(IdealRep::unit(ideal.nvars()));
        }
        saturate(ideal, &self.j)
    }

    fn draw(&self, rng: &mut ChaCha8Rng, bound: i64) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|_| {
                (0..self.f.len())
                    .map(|_| rng.gen_range(-bound..=bound))
                    .collect()
            })
            .collect()
    }

    /// Runs the construction for the coefficient matrix `alpha`.
    ///
    /// Fails with a genericity error at the first step whose part off `Z`
    /// has the wrong dimension.
    pub(crate) fn run_reduced(
        &self,
        alpha: &[Vec<i64>],
        with_inner: bool,
    ) -> Result<Vec<ReducedStep>> {
        let n = self.dim;
        let mut steps: Vec<ReducedStep> = Vec::with_capacity(n + 1);
        let mut current = self.space.clone();
        for k in 0..=n {
            let off = self.off_part(&current)?;
            if k > 0 && !off.is_unit() && krull_dimension(&off) != (n - k) as i64 {
                return Err(Error::Genericity { codim: k });
            }
            let inner = if with_inner {
                Some(inner_part(&current, &off)?)
            } else {
                None
            };
            let next = alpha
                .get(k)
                .filter(|_| k < n)
                .map(|row| off.with_generators(&[self.combine(row)]));
            steps.push(ReducedStep {
                ideal: current.clone(),
                off,
                inner,
            });
            if let Some(next) = next {
                current = next;
            }
        }
        Ok(steps)
    }

    fn locals(
        &self,
        steps: &[ReducedStep],
        x: Option<&AffinePoint>,
    ) -> Result<Vec<(LocalMult, LocalMult)>> {
        steps
            .iter()
            .map(|s| match x {
                None => Ok((LocalMult::OFF, LocalMult::OFF)),
                Some(p) => Ok((local_dim_mult(&s.ideal, p)?, local_dim_mult(&s.off, p)?)),
            })
            .collect()
    }

    /// Builds the public run record from reduced steps.
    pub(crate) fn finish(
        &self,
        sequence: VogelSequence,
        steps: Vec<ReducedStep>,
        x: &AffinePoint,
    ) -> Result<VogelRun> {
        let point = self.reduction.reduce_point(x);
        let locals = self.locals(&steps, point.as_ref())?;
        let n = self.dim as i64;
        let mut mult_z = Vec::with_capacity(steps.len());
        let mut mult_off = Vec::with_capacity(steps.len());
        for (k, (total, off)) in locals.iter().enumerate() {
            let expected = n - k as i64;
            let t = total.guarded(expected);
            let o = off.guarded(expected);
            debug_assert!(t >= o, "part off Z exceeds the whole at step {k}");
            mult_z.push(t.saturating_sub(o));
            mult_off.push(o);
        }
        let public_steps = steps
            .iter()
            .zip(&locals)
            .map(|(s, (l, lo))| VogelStep {
                ideal: self.reduction.lift(&s.ideal),
                off: self.reduction.lift(&s.off),
                inner: match &s.inner {
                    Some(i) => self.reduction.lift(i),
                    None => IdealRep::zero(self.nvars),
                },
                local: *l,
                local_off: *lo,
            })
            .collect();
        Ok(VogelRun {
            sequence,
            steps: public_steps,
            mult_z: MultiplicitySeq(mult_z),
            mult_off: MultiplicitySeq(mult_off),
            reduced: steps,
        })
    }

    /// Trial `stream`: draw until the run passes the dimension checks.
    pub(crate) fn trial(
        &self,
        cfg: &TrialConfig,
        stream: u64,
        with_inner: bool,
    ) -> Result<(Vec<Vec<i64>>, Vec<ReducedStep>)> {
        let mut rng = trial_rng(cfg.seed, stream);
        let mut last = 0;
        for _ in 0..cfg.retries.max(1) {
            let alpha = self.draw(&mut rng, cfg.coeff_bound);
            match self.run_reduced(&alpha, with_inner) {
                Ok(steps) => return Ok((alpha, steps)),
                Err(Error::Genericity { codim }) => last = codim,
                Err(e) => return Err(e),
            }
        }
        Err(Error::Genericity { codim: last })
    }

    pub(crate) fn sequence(
        &self,
        f: &[Polynomial],
        alpha: Vec<Vec<i64>>,
        seed: u64,
        stream: u64,
    ) -> VogelSequence {
        let elements = alpha
            .iter()
            .map(|row| combine(f, row, self.nvars))
            .collect();
        VogelSequence {
            alpha,
            elements,
            seed,
            stream,
            certified: true,
        }
    }

    /// All trials, in stream order.
    pub(crate) fn trials(
        &self,
        f: &[Polynomial],
        x: &AffinePoint,
        cfg: &TrialConfig,
        with_inner: bool,
    ) -> Result<Vec<VogelRun>> {
        if cfg.trials == 0 {
            return Err(Error::InvalidArgument(
                "at least one trial is required".into(),
            ));
        }
        if x.arity() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: x.arity(),
            });
        }
        (0..cfg.trials as u64)
            .into_par_iter()
            .map(|t| {
                let (alpha, steps) = self.trial(cfg, t, with_inner)?;
                self.finish(self.sequence(f, alpha, cfg.seed, t), steps, x)
            })
            .collect()
    }
}

fn combine(f: &[Polynomial], row: &[i64], nvars: usize) -> Polynomial {
    let mut h = Polynomial::zero(nvars);
    for (g, &a) in f.iter().zip(row) {
        if a != 0 {
            h = &h + &g.scale(&rational(a));
        }
    }
    h
}

/// `I : (I^off)^∞`, the part of `I` supported in `Z`.
pub(crate) fn inner_part(ideal: &IdealRep, off: &IdealRep) -> Result<IdealRep> {
    if off.is_zero() {
        return Ok(IdealRep::unit(ideal.nvars()));
    }
    saturate(ideal, off)
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Checks that `X + (h_1..h_k)` has dimension `dim X - k` off `V(J)` for every
/// `k`, or is empty there.
pub fn verify_vogel_condition(
    h: &[Polynomial],
    space: &IdealRep,
    j: &IdealRep,
) -> Result<VogelCheck> {
    let n = krull_dimension(space);
    let mut current = space.clone();
    for (k, hk) in h.iter().enumerate() {
        let k = k + 1;
        hk.check_arity(space.nvars())?;
        current = current.with_generators(std::slice::from_ref(hk));
        if j.is_zero() {
            continue;
        }
        let sat = saturate(&current, j)?;
        if !sat.is_unit() && krull_dimension(&sat) != n - k as i64 {
            return Ok(VogelCheck {
                passed: false,
                failing_codim: Some(k),
            });
        }
    }
    Ok(VogelCheck {
        passed: true,
        failing_codim: None,
    })
}

/// Draws `h_j = α_j·f`, `j = 1..n`, redrawing until the Vogel condition holds.
pub fn random_vogel_sequence(
    f: &[Polynomial],
    space: &IdealRep,
    n: usize,
    seed: u64,
    coeff_bound: i64,
) -> Result<VogelSequence> {
    if f.is_empty() {
        return Err(Error::InvalidArgument("the generator list is empty".into()));
    }
    let nvars = space.nvars();
    let j = space.with_generators(f);
    let mut rng = trial_rng(seed, 0);
    let mut last = 0;
    for _ in 0..TrialConfig::default().retries {
        let alpha: Vec<Vec<i64>> = (0..n)
            .map(|_| {
                (0..f.len())
                    .map(|_| rng.gen_range(-coeff_bound..=coeff_bound))
                    .collect()
            })
            .collect();
        let elements: Vec<Polynomial> = alpha.iter().map(|row| combine(f, row, nvars)).collect();
        let check = verify_vogel_condition(&elements, space, &j)?;
        if check.passed {
            return Ok(VogelSequence {
                alpha,
                elements,
                seed,
                stream: 0,
                certified: true,
            });
        }
        last = check.failing_codim.unwrap_or(0);
    }
    Err(Error::Genericity { codim: last })
}

/// Runs the construction for a given sequence and reads off multiplicities at `x`.
pub fn vogel_run(
    f: &[Polynomial],
    space: &IdealRep,
    x: &AffinePoint,
    seq: &VogelSequence,
) -> Result<VogelRun> {
    let setup = Setup::new(f, space)?;
    if seq.alpha.len() != setup.dim || seq.alpha.iter().any(|r| r.len() != f.len()) {
        return Err(Error::InvalidArgument(format!(
            "coefficient matrix must be {} x {}",
            setup.dim,
            f.len()
        )));
    }
    let steps = setup.run_reduced(&seq.alpha, true)?;
    setup.finish(seq.clone(), steps, x)
}

/// Independent certified runs, one per trial, in trial order.
pub fn vogel_trials(
    f: &[Polynomial],
    space: &IdealRep,
    x: &AffinePoint,
    cfg: &TrialConfig,
) -> Result<Vec<VogelRun>> {
    Setup::new(f, space)?.trials(f, x, cfg, true)
}

/// Segre numbers `e_0(x), ..., e_n(x)` of `(f)` on `X`.
pub fn segre_at(
    f: &[Polynomial],
    space: &IdealRep,
    x: &AffinePoint,
    cfg: &TrialConfig,
) -> Result<Aggregate> {
    let runs = Setup::new(f, space)?.trials(f, x, cfg, false)?;
    Ok(Aggregate::from_trials(
        runs.into_iter().map(|r| r.mult_z).collect(),
    ))
}

/// Polar multiplicities `m_0(x), ..., m_n(x)` of `(f)` on `X`.
pub fn polar_at(
    f: &[Polynomial],
    space: &IdealRep,
    x: &AffinePoint,
    cfg: &TrialConfig,
) -> Result<Aggregate> {
    let runs = Setup::new(f, space)?.trials(f, x, cfg, false)?;
    Ok(Aggregate::from_trials(
        runs.into_iter().map(|r| r.mult_off).collect(),
    ))
}
