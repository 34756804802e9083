//! Local invariants at a point: tangent cones, local dimension, Hilbert–Samuel
//! multiplicity and colength.
//!
//! Standard bases for the local degree order are obtained by homogenizing
//! with an extra variable `t`, computing a Gröbner basis for
//! [`MonomialOrder::DegreeThenVar`] and setting `t = 1`. The lowest-degree
//! forms of that standard basis generate the tangent cone, and their leading
//! monomials generate the leading ideal of the associated graded ring.

use serde::Serialize;

use crate::algebra::{AffinePoint, Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{hilbert_data, monomial_dimension, IdealRep};

/// Local dimension and Hilbert–Samuel multiplicity at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LocalMult {
    /// `-1` when the point is not on the variety.
    pub local_dim: i64,
    pub mult: u64,
}

impl LocalMult {
    pub const OFF: LocalMult = LocalMult {
        local_dim: -1,
        mult: 0,
    };

    /// The multiplicity if the local dimension is `expected`, else 0.
    pub fn guarded(&self, expected: i64) -> u64 {
        if self.local_dim == expected {
            self.mult
        } else {
            0
        }
    }
}

/// Standard basis at the origin for the local degree order.
fn local_standard_basis(ideal: &IdealRep) -> Vec<Polynomial> {
    let n = ideal.nvars();
    let homogenized: Vec<Polynomial> = ideal.generators().iter().map(|g| g.homogenize()).collect();
    let lifted = IdealRep::from_generators(n + 1, homogenized);
    let basis = lifted.basis(MonomialOrder::DegreeThenVar { var: n });
    basis.iter().map(|g| g.dehomogenize_last()).collect()
}

/// Lowest forms of a local standard basis; `None` when the origin is off `V(I)`.
fn initial_forms(ideal: &IdealRep) -> Option<Vec<Polynomial>> {
    if ideal.is_zero() {
        return Some(Vec::new());
    }
    let mut forms = Vec::new();
    for g in local_standard_basis(ideal) {
        let low = g.lowest_form().with_order(MonomialOrder::Grevlex);
        if low.is_unit() {
            return None;
        }
        forms.push(low);
    }
    Some(forms)
}

fn initial_leads(forms: &[Polynomial]) -> Vec<Monomial> {
    forms
        .iter()
        .map(|f| f.lead_monomial().expect("nonzero form").clone())
        .collect()
}

/// Tangent cone at the origin: the ideal of lowest-degree forms of `I`.
///
/// Returns the unit ideal when the origin is not on `V(I)`.
pub fn tangent_cone(ideal: &IdealRep) -> IdealRep {
    match initial_forms(ideal) {
        None => IdealRep::unit(ideal.nvars()),
        Some(forms) => IdealRep::from_generators(ideal.nvars(), forms),
    }
}

/// Local dimension and multiplicity at the origin.
pub fn local_dim_mult_at_origin(ideal: &IdealRep) -> LocalMult {
    let n = ideal.nvars();
    match initial_forms(ideal) {
        None => LocalMult::OFF,
        Some(forms) => {
            let h = hilbert_data(&initial_leads(&forms), n);
            if h.dimension < 0 {
                return LocalMult::OFF;
            }
            LocalMult {
                local_dim: h.dimension,
                mult: h.degree,
            }
        }
    }
}

/// Local dimension of `V(I)` at `x` and the Hilbert–Samuel multiplicity of
/// `(O/I)_x`, which equals the multiplicity at `x` of the top-dimensional
/// fundamental cycle through `x`.
pub fn local_dim_mult(ideal: &IdealRep, x: &AffinePoint) -> Result<LocalMult> {
    let local = ideal.translate(x)?;
    Ok(local_dim_mult_at_origin(&local))
}

/// `dim_Q O/I` for the local ring `O` at the origin.
///
/// Errors when the origin is not an isolated point of `V(I)`; returns 0 when
/// the origin is not on `V(I)`.
pub fn colength(ideal: &IdealRep) -> Result<u64> {
    let n = ideal.nvars();
    match initial_forms(ideal) {
        None => Ok(0),
        Some(forms) => {
            let leads = initial_leads(&forms);
            let dim = monomial_dimension(&leads, n);
            if dim != 0 {
                return Err(Error::PositiveDimensional(dim));
            }
            Ok(hilbert_data(&leads, n).degree)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    fn ideal(r: &Ring, text: &str) -> IdealRep {
        IdealRep::new(r.nvars(), r.parse_list(text).unwrap()).unwrap()
    }

    #[test]
    fn tangent_cone_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(tangent_cone(&ideal(&r, "y - x^2")), ideal(&r, "y"));
        let r = Ring::new(["z1", "z2"]).unwrap();
        assert_eq!(tangent_cone(&ideal(&r, "z1^2 - z2^3")), ideal(&r, "z1^2"));
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        assert_eq!(
            tangent_cone(&ideal(&r, "x2*x1^2 - x3^2")),
            ideal(&r, "x3^2")
        );
        assert!(tangent_cone(&ideal(&r, "x1 - 1")).is_unit());
    }

    #[test]
    fn local_dim_mult_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let o = AffinePoint::origin(2);
        assert_eq!(
            local_dim_mult(&ideal(&r, "x, y"), &o).unwrap(),
            LocalMult {
                local_dim: 0,
                mult: 1
            }
        );
        assert_eq!(
            local_dim_mult(&ideal(&r, "x^2, x*y"), &o).unwrap(),
            LocalMult {
                local_dim: 1,
                mult: 1
            }
        );
        for (a, b) in [(2u32, 3u32), (3, 4), (5, 7), (3, 2)] {
            let i = ideal(&r, &format!("x^{a} - y^{b}"));
            assert_eq!(
                local_dim_mult(&i, &o).unwrap(),
                LocalMult {
                    local_dim: 1,
                    mult: a.min(b) as u64
                }
            );
        }
    }

    #[test]
    fn off_point_and_units() {
        let r = Ring::new(["x", "y"]).unwrap();
        let p = AffinePoint::from_integers(&[1, 1]);
        assert_eq!(
            local_dim_mult(&ideal(&r, "x, y"), &p).unwrap(),
            LocalMult::OFF
        );
        // the other branch of xy = 0 through (1, 0)
        let q = AffinePoint::from_integers(&[1, 0]);
        assert_eq!(
            local_dim_mult(&ideal(&r, "x*y"), &q).unwrap(),
            LocalMult {
                local_dim: 1,
                mult: 1
            }
        );
    }

    #[test]
    fn unit_in_local_ring_is_ignored() {
        // x(1 - x) generates (x) locally at the origin
        let r = Ring::new(["x", "y"]).unwrap();
        let m = local_dim_mult_at_origin(&ideal(&r, "x - x^2, y^3"));
        assert_eq!(
            m,
            LocalMult {
                local_dim: 0,
                mult: 3
            }
        );
    }

    #[test]
    fn colength_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(colength(&ideal(&r, "x, y")).unwrap(), 1);
        assert_eq!(colength(&ideal(&r, "x^3, y^4")).unwrap(), 12);
        assert_eq!(colength(&ideal(&r, "x^2, x*y, y^2")).unwrap(), 3);
        assert_eq!(
            colength(&ideal(&r, "x*y")),
            Err(Error::PositiveDimensional(1))
        );
        // other points of V(I) do not count
        assert_eq!(colength(&ideal(&r, "x*(x - 1), y")).unwrap(), 1);
    }
}
