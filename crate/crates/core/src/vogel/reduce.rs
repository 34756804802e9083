//! Removal of variables that the space `X` fixes linearly.
//!
//! If the reduced grevlex basis of `X` contains linear polynomials, their
//! leading variables are affine functions of the remaining variables on `X`.
//! Substituting them away is an isomorphism of `X` onto a variety in fewer
//! variables, so local multiplicities, Segre and polar numbers are unchanged.

use crate::algebra::{AffinePoint, MonomialOrder, Polynomial};
use crate::groebner::IdealRep;

#[derive(Clone, Debug)]
pub(crate) struct LinearReduction {
    nvars: usize,
    kept: Vec<usize>,
    /// Image of every original variable in the reduced ring.
    images: Vec<Option<Polynomial>>,
    relations: Vec<Polynomial>,
}

impl LinearReduction {
    /// Returns the reduction together with `X` expressed in the reduced ring.
    pub(crate) fn new(space: &IdealRep) -> (LinearReduction, IdealRep) {
        let n = space.nvars();
        let basis = space.grevlex_basis();
        let mut eliminated: Vec<(usize, Polynomial)> = Vec::new();
        let mut rest: Vec<Polynomial> = Vec::new();
        for g in basis.iter() {
            if g.total_degree() == 1 {
                let lead = g.lead_monomial().expect("nonzero");
                let v = lead.support().next().expect("linear lead");
                // g is monic: v = v - g
                eliminated.push((v, &Polynomial::var(n, v) - g));
            } else {
                rest.push(g.clone());
            }
        }
        let is_eliminated = |v: usize| eliminated.iter().any(|(e, _)| *e == v);
        let kept: Vec<usize> = (0..n).filter(|&v| !is_eliminated(v)).collect();
        let m = kept.len();
        let mut to_new = vec![usize::MAX; n];
        for (new, &old) in kept.iter().enumerate() {
            to_new[old] = new;
        }
        // kept variables never include eliminated leads, so a remap is exact
        let remap = |p: &Polynomial| -> Polynomial {
            debug_assert!(eliminated.iter().all(|(v, _)| !p.depends_on(*v)));
            let map: Vec<usize> = (0..n)
                .map(|v| {
                    if to_new[v] == usize::MAX {
                        0
                    } else {
                        to_new[v]
                    }
                })
                .collect();
            p.remap(m, &map)
        };
        let mut images: Vec<Option<Polynomial>> = vec![None; n];
        for &v in &kept {
            images[v] = Some(Polynomial::var(m, to_new[v]));
        }
        for (v, expr) in &eliminated {
            images[*v] = Some(remap(expr));
        }
        let relations: Vec<Polynomial> = basis
            .iter()
            .filter(|g| g.total_degree() == 1)
            .cloned()
            .collect();
        let reduced_space = IdealRep::from_generators(m, rest.iter().map(remap).collect());
        (
            LinearReduction {
                nvars: n,
                kept,
                images,
                relations,
            },
            reduced_space,
        )
    }

    pub(crate) fn reduced_nvars(&self) -> usize {
        self.kept.len()
    }

    /// Original indices of the variables that survive.
    pub(crate) fn kept(&self) -> &[usize] {
        &self.kept
    }

    /// Every original variable as a polynomial in the reduced ring.
    pub(crate) fn images(&self) -> Vec<Polynomial> {
        self.images
            .iter()
            .map(|p| p.clone().expect("all variables bound"))
            .collect()
    }

    pub(crate) fn reduce(&self, p: &Polynomial) -> Polynomial {
        p.substitute(&self.images, self.kept.len())
            .expect("arity checked at construction")
            .with_order(MonomialOrder::Grevlex)
    }

    /// The point in reduced coordinates; `None` when `x` violates a linear
    /// relation of `X`.
    pub(crate) fn reduce_point(&self, x: &AffinePoint) -> Option<AffinePoint> {
        for r in &self.relations {
            if !r.evaluate(x).expect("arity").eq(&num_traits::Zero::zero()) {
                return None;
            }
        }
        Some(AffinePoint::new(
            self.kept.iter().map(|&v| x.coords()[v].clone()).collect(),
        ))
    }

    /// Pull an ideal of the reduced ring back to the original ring.
    pub(crate) fn lift(&self, ideal: &IdealRep) -> IdealRep {
        let mut gens: Vec<Polynomial> = ideal
            .generators()
            .iter()
            .map(|g| g.remap(self.nvars, &self.kept))
            .collect();
        gens.extend(self.relations.iter().cloned());
        IdealRep::from_generators(self.nvars, gens)
    }
}
