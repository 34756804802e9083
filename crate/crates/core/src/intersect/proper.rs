//! Proper intersections by iterated cuts with sheared diagonal forms.
//!
//! The product cycle `Z_1 × ... × Z_r` is cut `(r-1)·n` times by random
//! integer combinations of the diagonal forms. Every cut is linear, so after
//! removing the components inside the hyperplane one variable is solved for
//! and substituted away; the rings shrink as the cuts proceed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_cycles, diagonal_forms, part_combinations, product_ideal, CycleRep};
use crate::algebra::{rational, AffinePoint, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{krull_dimension, saturate_by, IdealRep};
use crate::local::local_dim_mult;
use crate::vogel::{LinearReduction, TrialConfig};

#[derive(Clone, Debug)]
pub struct ProperIntersection {
    /// `mult_x` of the intersection cycle.
    pub multiplicity: u64,
    pub cycle: CycleRep,
}

/// An ideal in a ring whose variables are a subset of the product variables,
/// together with every product variable written in that ring.
struct LinearChart {
    ideal: IdealRep,
    kept: Vec<usize>,
    images: Vec<Polynomial>,
}

impl LinearChart {
    fn new(product: &IdealRep) -> LinearChart {
        let (reduction, ideal) = LinearReduction::new(product);
        LinearChart {
            ideal,
            kept: reduction.kept().to_vec(),
            images: reduction.images(),
        }
    }

    fn nvars(&self) -> usize {
        self.kept.len()
    }

    /// `[h] ∧ ·` followed by elimination of one variable of `h`.
    ///
    /// `None` when the cut is degenerate: `h` vanishes identically or a
    /// top-dimensional component lies in `V(h)`.
    fn cut(&self, h: &Polynomial) -> Result<Option<LinearChart>> {
        let m = self.nvars();
        let h = h.substitute(
            &self.images.iter().cloned().map(Some).collect::<Vec<_>>(),
            m,
        )?;
        if h.is_constant() {
            return Ok(None);
        }
        let dim = krull_dimension(&self.ideal);
        let off = saturate_by(&self.ideal, &h)?;
        if off.is_unit() || krull_dimension(&off) != dim {
            return Ok(None);
        }
        // solve for the highest variable occurring in h
        let v = *h.variables().iter().max().expect("nonconstant");
        let coeff = h
            .terms()
            .iter()
            .find(|(mono, _)| mono.exponent(v) == 1)
            .map(|(_, c)| c.clone())
            .expect("linear in v");
        let down = drop_index(m, v);
        let solved = (&Polynomial::var(m, v) - &h.scale(&coeff.recip())).remap(m - 1, &down);
        let bindings: Vec<Option<Polynomial>> = (0..m)
            .map(|u| {
                Some(if u == v {
                    solved.clone()
                } else {
                    Polynomial::var(m - 1, down[u])
                })
            })
            .collect();
        let ideal = off.substitute(&bindings, m - 1)?;
        if !ideal.is_unit() && krull_dimension(&ideal) != dim - 1 {
            return Ok(None);
        }
        let images = self
            .images
            .iter()
            .map(|p| p.substitute(&bindings, m - 1))
            .collect::<Result<Vec<_>>>()?;
        let mut kept = self.kept.clone();
        kept.remove(v);
        Ok(Some(LinearChart {
            ideal,
            kept,
            images,
        }))
    }

    /// The ideal in `Y` once every diagonal form has been cut.
    fn to_base(&self, n: usize) -> IdealRep {
        let m = self.nvars();
        let to_y: Vec<usize> = self.kept.iter().map(|&v| v % n).collect();
        let mut gens: Vec<Polynomial> = self
            .ideal
            .generators()
            .iter()
            .map(|g| g.remap(n, &to_y))
            .collect();
        for (v, image) in self.images.iter().enumerate() {
            let y = Polynomial::var(n, v % n);
            let rel = &y - &image.remap(n, &to_y);
            if !rel.is_zero() {
                gens.push(rel);
            }
        }
        debug_assert_eq!(m, to_y.len());
        IdealRep::from_generators(n, gens)
    }
}

/// Index map removing variable `v`; `v` itself must not occur.
fn drop_index(m: usize, v: usize) -> Vec<usize> {
    (0..m).map(|u| if u > v { u - 1 } else { u }).collect()
}

/// The proper intersection `Z_1 · ... · Z_r` and its multiplicity at `x`.
pub fn proper_intersect(
    cycles: &[CycleRep],
    x: &AffinePoint,
    cfg: &TrialConfig,
) -> Result<ProperIntersection> {
    let n = check_cycles(cycles, x, 1)?;
    let r = cycles.len();
    let mut cycle = CycleRep::empty(n);
    let mut multiplicity = 0;
    for (index, (parts, coeff)) in part_combinations(cycles).into_iter().enumerate() {
        let dims: Vec<i64> = parts.iter().map(|p| krull_dimension(p)).collect();
        let expected = dims.iter().sum::<i64>() - ((r - 1) * n) as i64;
        let mut support = IdealRep::zero(n);
        for p in &parts {
            support = support.sum(p);
        }
        if support.is_unit() {
            continue;
        }
        let found = krull_dimension(&support);
        if found != expected {
            return Err(Error::ImproperIntersection { found, expected });
        }
        let ideal = if r == 1 {
            parts[0].clone()
        } else {
            cut_diagonal(&parts, n, cfg, index as u64)?
        };
        if ideal.is_unit() {
            continue;
        }
        multiplicity += coeff * local_dim_mult(&ideal, x)?.guarded(expected);
        cycle = cycle.with_part(ideal, coeff);
    }
    Ok(ProperIntersection {
        multiplicity,
        cycle,
    })
}

fn cut_diagonal(parts: &[&IdealRep], n: usize, cfg: &TrialConfig, stream: u64) -> Result<IdealRep> {
    let r = parts.len();
    let forms = diagonal_forms(r, n);
    let start = LinearChart::new(&product_ideal(parts, n));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    let mut failed_at = 0;
    'retry: for _ in 0..cfg.retries.max(1) {
        let mut chart = LinearChart {
            ideal: start.ideal.clone(),
            kept: start.kept.clone(),
            images: start.images.clone(),
        };
        for i in 0..forms.len() {
            let mut h = Polynomial::zero(r * n);
            for d in &forms {
                h = &h + &d.scale(&rational(rng.gen_range(-cfg.coeff_bound..=cfg.coeff_bound)));
            }
            if chart.ideal.is_unit() {
                break;
            }
            match chart.cut(&h)? {
                Some(next) => chart = next,
                None => {
                    failed_at = i + 1;
                    continue 'retry;
                }
            }
        }
        return Ok(chart.to_base(n));
    }
    Err(Error::Genericity { codim: failed_at })
}
