//! Fixed and moving Vogel components.
//!
//! The codimension-`k` part of a run lying in `Z` is cut out by `I_k^in`. A
//! component is fixed when it appears for every choice of sequence, so the
//! candidates are the codimension-`k` components of `V(F_k)` where `F_k` is
//! the sum of the `I_k^in` over independent trials.

use serde::Serialize;

use super::{ReducedStep, Setup, TrialConfig, VogelSequence};
use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::{krull_dimension, saturate, IdealRep};

/// How a trial's codimension-`k` Vogel cycle relates to the fixed support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartKind {
    Empty,
    Fixed,
    Moving,
    Mixed,
}

#[derive(Clone, Debug)]
pub struct FixedCodim {
    pub codim: usize,
    /// `F_k`, the sum over trials of `I_k^in`.
    pub sum: IdealRep,
    pub dimension: i64,
    /// `V(F_k)` has a component of codimension exactly `k`.
    pub is_fixed: bool,
    pub kinds: Vec<PartKind>,
}

#[derive(Clone, Debug)]
pub struct FixedSupport {
    pub codims: Vec<FixedCodim>,
    pub sequences: Vec<VogelSequence>,
}

impl FixedSupport {
    /// Codimensions that carry fixed support.
    pub fn fixed_codims(&self) -> Vec<usize> {
        self.codims
            .iter()
            .filter(|c| c.is_fixed)
            .map(|c| c.codim)
            .collect()
    }
}

pub(crate) struct ReducedFixed {
    pub(crate) sum: IdealRep,
    pub(crate) is_fixed: bool,
    pub(crate) kinds: Vec<PartKind>,
}

/// Per-codimension fixed data in reduced coordinates.
pub(crate) fn classify(setup: &Setup, runs: &[Vec<ReducedStep>]) -> Result<Vec<ReducedFixed>> {
    let n = setup.dim;
    let m = setup.reduction.reduced_nvars();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let expected = (n - k) as i64;
        let parts: Vec<&IdealRep> = runs
            .iter()
            .map(|r| r[k].inner.as_ref().expect("runs carry inner parts"))
            .collect();
        let mut gens: Vec<Polynomial> = Vec::new();
        for p in &parts {
            gens.extend(p.generators().iter().cloned());
        }
        let sum = IdealRep::from_generators(m, gens);
        let is_fixed = !sum.is_unit() && krull_dimension(&sum) == expected;
        let mut kinds = Vec::with_capacity(parts.len());
        for z in parts {
            let kind = if z.is_unit() || krull_dimension(z) != expected {
                PartKind::Empty
            } else if !is_fixed {
                PartKind::Moving
            } else if sum.is_zero() {
                PartKind::Fixed
            } else {
                let moving = saturate(z, &sum)?;
                if !moving.is_unit() && krull_dimension(&moving) == expected {
                    PartKind::Mixed
                } else {
                    PartKind::Fixed
                }
            };
            kinds.push(kind);
        }
        out.push(ReducedFixed {
            sum,
            is_fixed,
            kinds,
        });
    }
    Ok(out)
}

/// Fixed supports `F_k` per codimension, with each trial's classification.
pub fn fixed_support(
    f: &[Polynomial],
    space: &IdealRep,
    cfg: &TrialConfig,
) -> Result<FixedSupport> {
    if cfg.trials < 2 {
        return Err(Error::InvalidArgument(
            "fixed support needs at least two trials".into(),
        ));
    }
    let setup = Setup::new(f, space)?;
    let trials: Vec<(Vec<Vec<i64>>, Vec<ReducedStep>)> = {
        use rayon::prelude::*;
        (0..cfg.trials as u64)
            .into_par_iter()
            .map(|t| setup.trial(cfg, t, true))
            .collect::<Result<_>>()?
    };
    let steps: Vec<Vec<ReducedStep>> = trials.iter().map(|(_, s)| s.clone()).collect();
    let classified = classify(&setup, &steps)?;
    let n = setup.dim;
    let codims = classified
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let sum = setup.reduction.lift(&c.sum);
            let dimension = krull_dimension(&sum);
            debug_assert!(!c.is_fixed || dimension == (n - k) as i64);
            FixedCodim {
                codim: k,
                sum,
                dimension,
                is_fixed: c.is_fixed,
                kinds: c.kinds,
            }
        })
        .collect();
    let sequences = trials
        .into_iter()
        .enumerate()
        .map(|(t, (alpha, _))| setup.sequence(f, alpha, cfg.seed, t as u64))
        .collect();
    Ok(FixedSupport { codims, sequences })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    fn ideal(r: &Ring, text: &str) -> IdealRep {
        IdealRep::new(r.nvars(), r.parse_list(text).unwrap()).unwrap()
    }

    #[test]
    fn hak1_fixed_divisor_and_moving_curve() {
        let r = Ring::new(["t1", "t2", "t3"]).unwrap();
        let f = r.parse_list("t3*t1, t3*t2, t3^2").unwrap();
        let fs = fixed_support(&f, &IdealRep::zero(3), &TrialConfig::default()).unwrap();
        assert_eq!(fs.fixed_codims(), vec![1, 3]);
        assert_eq!(fs.codims[1].sum, ideal(&r, "t3"));
        assert!(fs.codims[2].kinds.iter().all(|k| *k == PartKind::Moving));
        assert!(fs.codims[3].kinds.iter().all(|k| *k == PartKind::Fixed));
    }

    #[test]
    fn ex1_fixed_curve() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let x = ideal(&r, "x2*x1^2 - x3^2");
        let fs = fixed_support(
            &r.parse_list("x2, x3").unwrap(),
            &x,
            &TrialConfig::default(),
        )
        .unwrap();
        assert!(fs.codims[1].is_fixed);
        assert_eq!(fs.codims[1].sum, ideal(&r, "x2, x3"));
    }

    #[test]
    fn principal_ideal() {
        let r = Ring::new(["x", "y"]).unwrap();
        let fs = fixed_support(
            &r.parse_list("x").unwrap(),
            &IdealRep::zero(2),
            &TrialConfig::default(),
        )
        .unwrap();
        assert_eq!(fs.fixed_codims(), vec![1]);
        assert_eq!(fs.codims[1].sum, ideal(&r, "x"));
    }

    #[test]
    fn needs_two_trials() {
        let r = Ring::new(["x", "y"]).unwrap();
        let cfg = TrialConfig::default().with_trials(1);
        assert!(fixed_support(&r.parse_list("x").unwrap(), &IdealRep::zero(2), &cfg).is_err());
    }
}
