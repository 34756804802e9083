//! `A∘Z` and the Tworzewski product `Z_1 • ... • Z_r`.
//!
//! Both are read off from Segre numbers: of the ideal of `A` on `Z`, and of
//! the diagonal ideal on `Z_1 × ... × Z_r` at `(x, ..., x)`. The bullet
//! product as a cycle is split into fixed Vogel components through `x` and a
//! multiple of the point.

use super::{
    check_cycles, diagonal_forms, part_combinations, product_ideal, restrict_to_diagonal, CycleRep,
    ExtendedIndex,
};
use crate::algebra::AffinePoint;
use crate::error::{Error, Result};
use crate::groebner::{krull_dimension, saturate, IdealRep};
use crate::local::local_dim_mult;
use crate::vogel::{fixed, segre_at, Aggregate, Setup, TrialConfig};

/// `A∘Z`: Segre numbers of the ideal of `A` on each part of `Z`, combined linearly.
pub fn circ_index(
    a: &IdealRep,
    z: &CycleRep,
    x: &AffinePoint,
    cfg: &TrialConfig,
) -> Result<ExtendedIndex> {
    check_cycles(std::slice::from_ref(z), x, 1)?;
    if a.nvars() != z.nvars() {
        return Err(Error::ArityMismatch {
            expected: z.nvars(),
            found: a.nvars(),
        });
    }
    let gens = if a.generators().is_empty() {
        vec![crate::algebra::Polynomial::zero(a.nvars())]
    } else {
        a.generators().to_vec()
    };
    let mut items = Vec::new();
    for (part, c) in z.parts() {
        let dim = krull_dimension(part);
        let agg = segre_at(&gens, part, x, cfg)?;
        items.push((dim as usize, *c, agg.value, agg.stable));
    }
    Ok(ExtendedIndex::from_contributions(&items))
}

/// Extended index of `Z_1 • ... • Z_r` at `x`.
pub fn tworzewski_index(
    cycles: &[CycleRep],
    x: &AffinePoint,
    cfg: &TrialConfig,
) -> Result<ExtendedIndex> {
    let n = check_cycles(cycles, x, 2)?;
    let r = cycles.len();
    let forms = diagonal_forms(r, n);
    let point = x.repeat(r);
    let mut items = Vec::new();
    for (parts, c) in part_combinations(cycles) {
        let product = product_ideal(&parts, n);
        if product.is_unit() {
            continue;
        }
        let dim = krull_dimension(&product);
        let agg = segre_at(&forms, &product, &point, cfg)?;
        items.push((dim as usize, c, agg.value, agg.stable));
    }
    Ok(ExtendedIndex::from_contributions(&items))
}

/// A fixed Vogel component of the diagonal ideal through `x`.
#[derive(Clone, Debug)]
pub struct FixedComponent {
    /// Ideal in the base space whose top-dimensional cycle is the support.
    pub ideal: IdealRep,
    pub dimension: i64,
    /// `None` when `local_mult` is not a multiple of `mult_x` of the support.
    pub coefficient: Option<u64>,
    /// Contribution of the component to `Σ e_k(x)`.
    pub local_mult: u64,
}

/// `Z_1 • ... • Z_r` near `x`, split into fixed components and a point part.
#[derive(Clone, Debug)]
pub struct BulletProduct {
    pub index: ExtendedIndex,
    /// `Σ_k e_k(x)`.
    pub total: u64,
    /// Coefficient of `{x}`; negative values are reported as they come.
    pub point: i64,
    pub fixed: Vec<FixedComponent>,
    /// Codimensions in the product whose moving components share a
    /// positive-dimensional set through `x`.
    pub unresolved: Vec<usize>,
}

impl BulletProduct {
    pub fn is_resolved(&self) -> bool {
        self.unresolved.is_empty()
    }

    /// The product as a cycle in the base space.
    pub fn to_cycle(&self, x: &AffinePoint) -> Result<CycleRep> {
        if !self.is_resolved() {
            return Err(Error::UnresolvedMovingSupport(format!(
                "moving components share positive-dimensional support in codimension {:?}",
                self.unresolved
            )));
        }
        if self.point < 0 {
            return Err(Error::UnresolvedMovingSupport(format!(
                "negative point coefficient {}",
                self.point
            )));
        }
        let mut out = CycleRep::empty(x.arity());
        for f in &self.fixed {
            let Some(c) = f.coefficient else {
                return Err(Error::UnresolvedMovingSupport(
                    "fixed component multiplicity does not divide its contribution".into(),
                ));
            };
            out = out.with_part(f.ideal.clone(), c);
        }
        Ok(out.with_part(IdealRep::maximal(x), self.point as u64))
    }
}

/// `Z_1 • ... • Z_r` at `x` with its fixed components and point coefficient.
pub fn tworzewski_point_part(
    cycles: &[CycleRep],
    x: &AffinePoint,
    cfg: &TrialConfig,
) -> Result<BulletProduct> {
    let n = check_cycles(cycles, x, 2)?;
    if cfg.trials < 2 {
        return Err(Error::InvalidArgument(
            "the point part needs at least two trials".into(),
        ));
    }
    let r = cycles.len();
    let forms = diagonal_forms(r, n);
    let point = x.repeat(r);
    let mut items = Vec::new();
    let mut total = 0u64;
    let mut fixed_total: i64 = 0;
    let mut fixed_parts: Vec<FixedComponent> = Vec::new();
    let mut unresolved: Vec<usize> = Vec::new();
    for (parts, c) in part_combinations(cycles) {
        let product = product_ideal(&parts, n);
        if product.is_unit() {
            continue;
        }
        let setup = Setup::new(&forms, &product)?;
        let runs = setup.trials(&forms, &point, cfg, true)?;
        let agg = Aggregate::from_trials(runs.iter().map(|r| r.mult_z.clone()).collect());
        items.push((setup.dim, c, agg.value.clone(), agg.stable));
        total += c * agg.value.total();
        let Some(p) = setup.reduction.reduce_point(&point) else {
            continue;
        };
        let best = runs
            .iter()
            .position(|r| r.mult_z == agg.value)
            .expect("minimum is attained");
        let reduced: Vec<_> = runs.iter().map(|r| r.reduced.clone()).collect();
        let classes = fixed::classify(&setup, &reduced)?;
        for (k, class) in classes.iter().enumerate() {
            let d = setup.dim - k;
            if d == 0 {
                continue;
            }
            let expected = d as i64;
            let mut moving = Vec::new();
            for run in &reduced {
                let inner = run[k].inner.as_ref().expect("inner parts requested");
                if inner.is_unit() || krull_dimension(inner) != expected {
                    moving.push(None);
                    continue;
                }
                let m = moving_part(inner, &class.sum, class.is_fixed)?;
                moving.push(if !m.is_unit() && krull_dimension(&m) == expected {
                    Some(m)
                } else {
                    None
                });
            }
            let present: Vec<&IdealRep> = moving.iter().flatten().collect();
            if !present.is_empty() {
                let shared = present
                    .iter()
                    .skip(1)
                    .fold(present[0].clone(), |acc, m| acc.sum(m));
                if local_dim_mult(&shared, &p)?.local_dim > 0 {
                    unresolved.push(k);
                }
            }
            if !class.is_fixed {
                continue;
            }
            let support = local_dim_mult(&class.sum, &p)?;
            if support.local_dim != expected {
                continue;
            }
            let inner = reduced[best][k]
                .inner
                .as_ref()
                .expect("inner parts requested");
            let whole = local_dim_mult(inner, &p)?.guarded(expected);
            let mov = match &moving[best] {
                Some(m) => local_dim_mult(m, &p)?.guarded(expected),
                None => 0,
            };
            let contribution = whole.saturating_sub(mov);
            let ideal = restrict_to_diagonal(&setup.reduction.lift(&class.sum), n);
            let base_mult = local_dim_mult(&ideal, x)?.guarded(expected);
            let coefficient = (base_mult > 0 && contribution % base_mult == 0)
                .then(|| c * contribution / base_mult);
            fixed_total += (c * contribution) as i64;
            fixed_parts.push(FixedComponent {
                ideal,
                dimension: expected,
                coefficient,
                local_mult: c * contribution,
            });
        }
    }
    unresolved.sort_unstable();
    unresolved.dedup();
    Ok(BulletProduct {
        index: ExtendedIndex::from_contributions(&items),
        total,
        point: total as i64 - fixed_total,
        fixed: fixed_parts,
        unresolved,
    })
}

fn moving_part(inner: &IdealRep, sum: &IdealRep, is_fixed: bool) -> Result<IdealRep> {
    if !is_fixed {
        return Ok(inner.clone());
    }
    if sum.is_zero() {
        return Ok(IdealRep::unit(inner.nvars()));
    }
    saturate(inner, sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;
    use crate::vogel::MultiplicitySeq;

    fn ideal(r: &Ring, text: &str) -> IdealRep {
        IdealRep::new(r.nvars(), r.parse_list(text).unwrap()).unwrap()
    }

    #[test]
    fn circ_examples() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let o = AffinePoint::origin(3);
        let cfg = TrialConfig::default();
        let a = ideal(&r, "x2, x3");
        let z = CycleRep::from_ideal(ideal(&r, "x2*x1^2 - x3^2"));
        assert_eq!(
            circ_index(&a, &z, &o, &cfg).unwrap().by_codim,
            MultiplicitySeq(vec![0, 1, 2])
        );
        let r2 = Ring::new(["x", "y"]).unwrap();
        let a = ideal(&r2, "x");
        let e = circ_index(
            &a,
            &CycleRep::from_ideal(a.clone()),
            &AffinePoint::origin(2),
            &cfg,
        )
        .unwrap();
        assert_eq!(e.by_codim, MultiplicitySeq(vec![1, 0]));
        let m = IdealRep::maximal(&o);
        let e = circ_index(&m, &z, &o, &cfg).unwrap();
        assert_eq!(e.by_codim, MultiplicitySeq(vec![0, 0, 2]));
    }

    #[test]
    fn bullet_of_point_and_surface() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let o = AffinePoint::origin(3);
        let z = CycleRep::from_ideal(ideal(&r, "x2*x1^2 - x3^2"));
        let b =
            tworzewski_point_part(&[CycleRep::point(&o), z], &o, &TrialConfig::default()).unwrap();
        assert_eq!(b.total, 2);
        assert_eq!(b.point, 2);
        assert!(b.fixed.is_empty());
    }

    #[test]
    fn bullet_of_line_and_surface() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let o = AffinePoint::origin(3);
        let a = CycleRep::from_ideal(ideal(&r, "x2, x3"));
        let z = CycleRep::from_ideal(ideal(&r, "x2*x1^2 - x3^2"));
        let b = tworzewski_point_part(&[a, z], &o, &TrialConfig::default()).unwrap();
        assert_eq!(b.total, 3);
        assert_eq!(b.point, 2);
        assert_eq!(b.fixed.len(), 1);
        assert_eq!(b.fixed[0].ideal, ideal(&r, "x2, x3"));
        assert_eq!(b.fixed[0].coefficient, Some(1));
        let cycle = b.to_cycle(&o).unwrap();
        assert_eq!(cycle.parts().len(), 2);
    }

    #[test]
    fn nested_linear_subspaces() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let o = AffinePoint::origin(3);
        let a = CycleRep::from_ideal(ideal(&r, "y, z"));
        let b = CycleRep::from_ideal(ideal(&r, "z"));
        let e = tworzewski_index(&[a.clone(), b.clone()], &o, &TrialConfig::default()).unwrap();
        assert_eq!(e.by_dim, MultiplicitySeq(vec![0, 1, 0, 0]));
        let p = tworzewski_point_part(&[a, b], &o, &TrialConfig::default()).unwrap();
        assert_eq!(p.point, 0);
        assert_eq!(p.fixed[0].ideal, ideal(&r, "y, z"));
    }
}
