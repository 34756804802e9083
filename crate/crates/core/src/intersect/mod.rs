//! Cycle-level intersection products.
//!
//! Cycles are integer combinations of ideals, each standing for the
//! top-dimensional fundamental cycle of its scheme. Products of several
//! cycles are formed on the product space `Y^r` and intersected with the
//! diagonal, either properly by iterated linear cuts or, in the Tworzewski
//! sense, through the Segre numbers of the diagonal ideal.

mod bullet;
mod proper;

use serde::Serialize;

use crate::algebra::{AffinePoint, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, krull_dimension, saturate_by, IdealRep};
use crate::local::local_dim_mult;
use crate::vogel::MultiplicitySeq;

pub use bullet::{
    circ_index, tworzewski_index, tworzewski_point_part, BulletProduct, FixedComponent,
};
pub use proper::{proper_intersect, ProperIntersection};

/// `Σ c_i [I_i]` in a ring of `nvars` variables, inside the space `X`.
#[derive(Clone, Debug)]
pub struct CycleRep {
    nvars: usize,
    parts: Vec<(IdealRep, u64)>,
    space: IdealRep,
}

impl CycleRep {
    pub fn empty(nvars: usize) -> CycleRep {
        CycleRep {
            nvars,
            parts: Vec::new(),
            space: IdealRep::zero(nvars),
        }
    }

    pub fn from_ideal(ideal: IdealRep) -> CycleRep {
        CycleRep::empty(ideal.nvars()).with_part(ideal, 1)
    }

    /// The reduced point `{x}`.
    pub fn point(x: &AffinePoint) -> CycleRep {
        CycleRep::from_ideal(IdealRep::maximal(x))
    }

    /// Adds `coeff · [ideal]`; zero coefficients and unit ideals are dropped
    /// and repeated ideals merge.
    pub fn with_part(mut self, ideal: IdealRep, coeff: u64) -> CycleRep {
        assert_eq!(ideal.nvars(), self.nvars, "cycle parts live in one ring");
        if coeff == 0 || ideal.is_unit() {
            return self;
        }
        match self.parts.iter_mut().find(|(i, _)| *i == ideal) {
            Some((_, c)) => *c += coeff,
            None => self.parts.push((ideal, coeff)),
        }
        self
    }

    pub fn with_space(mut self, space: IdealRep) -> CycleRep {
        self.space = space;
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn parts(&self) -> &[(IdealRep, u64)] {
        &self.parts
    }

    pub fn space(&self) -> &IdealRep {
        &self.space
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn add(&self, other: &CycleRep) -> CycleRep {
        other
            .parts
            .iter()
            .fold(self.clone(), |acc, (i, c)| acc.with_part(i.clone(), *c))
    }

    pub fn scale(&self, k: u64) -> CycleRep {
        let mut out = CycleRep::empty(self.nvars).with_space(self.space.clone());
        for (i, c) in &self.parts {
            out = out.with_part(i.clone(), c * k);
        }
        out
    }

    /// Largest dimension of a part; `-1` for the empty cycle.
    pub fn dimension(&self) -> i64 {
        self.parts
            .iter()
            .map(|(i, _)| krull_dimension(i))
            .max()
            .unwrap_or(-1)
    }

    /// `mult_x` of the cycle: each part counts through its top-dimensional
    /// components only.
    pub fn local_mult(&self, x: &AffinePoint) -> Result<u64> {
        let mut total = 0;
        for (i, c) in &self.parts {
            let lm = local_dim_mult(i, x)?;
            total += c * lm.guarded(krull_dimension(i));
        }
        Ok(total)
    }
}

/// Intersection numbers indexed by codimension and by dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExtendedIndex {
    /// Codimension relative to the largest product dimension.
    pub by_codim: MultiplicitySeq,
    /// Entry `d` collects the numbers of dimension-`d` cycles.
    pub by_dim: MultiplicitySeq,
    pub stable: bool,
}

impl ExtendedIndex {
    /// Aggregates `(top dimension, coefficient, Segre tuple, stable)` contributions.
    pub(crate) fn from_contributions(
        items: &[(usize, u64, MultiplicitySeq, bool)],
    ) -> ExtendedIndex {
        let top = items.iter().map(|(d, ..)| *d).max().unwrap_or(0);
        let mut by_dim = vec![0u64; top + 1];
        for (d, c, e, _) in items {
            for (k, v) in e.0.iter().enumerate() {
                if *v > 0 {
                    by_dim[d - k] += c * v;
                }
            }
        }
        let by_codim: Vec<u64> = by_dim.iter().rev().copied().collect();
        ExtendedIndex {
            by_codim: MultiplicitySeq(by_codim),
            by_dim: MultiplicitySeq(by_dim),
            stable: items.iter().all(|(.., s)| *s),
        }
    }

    pub fn total(&self) -> u64 {
        self.by_dim.total()
    }
}

/// `[h] ∧ Z`: each part loses its components inside `V(h)` and the rest is
/// cut by `h`.
pub fn divisor_cut(h: &Polynomial, z: &CycleRep) -> Result<CycleRep> {
    if h.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    h.check_arity(z.nvars)?;
    let mut out = CycleRep::empty(z.nvars).with_space(z.space.clone());
    for (i, c) in &z.parts {
        let off = saturate_by(i, h)?;
        if off.is_unit() {
            continue;
        }
        out = out.with_part(off.with_generators(std::slice::from_ref(h)), *c);
    }
    Ok(out)
}

/// Ideal of the closure of the image of `t ↦ (γ_1(t), ..., γ_N(t))`.
pub fn implicitize(map: &[Polynomial]) -> Result<IdealRep> {
    let Some(first) = map.first() else {
        return Err(Error::InvalidArgument("the map has no components".into()));
    };
    let p = first.nvars();
    for g in map {
        g.check_arity(p)?;
    }
    let n = map.len();
    let front: Vec<usize> = (0..p).collect();
    let gens: Vec<Polynomial> = map
        .iter()
        .enumerate()
        .map(|(i, g)| &Polynomial::var(p + n, p + i) - &g.extend(p + n))
        .collect();
    let graph = IdealRep::from_generators(p + n, gens);
    let image = eliminate(&graph, &front)?;
    let down: Vec<usize> = (0..p + n).map(|v| v.saturating_sub(p)).collect();
    debug_assert!(image
        .generators()
        .iter()
        .all(|g| !front.iter().any(|&v| g.depends_on(v))));
    Ok(image.remap(n, &down))
}

/// `I_1 × ... × I_r` in `r·n` variables; block `j` holds variables `j·n..(j+1)·n`.
pub(crate) fn product_ideal(parts: &[&IdealRep], n: usize) -> IdealRep {
    let r = parts.len();
    let mut gens = Vec::new();
    for (j, ideal) in parts.iter().enumerate() {
        let map: Vec<usize> = (0..n).map(|l| j * n + l).collect();
        gens.extend(ideal.generators().iter().map(|g| g.remap(r * n, &map)));
    }
    IdealRep::from_generators(r * n, gens)
}

/// `z_{j,l} - z_{0,l}` for `j = 1..r`, `l = 0..n`.
pub(crate) fn diagonal_forms(r: usize, n: usize) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity((r - 1) * n);
    for j in 1..r {
        for l in 0..n {
            out.push(&Polynomial::var(r * n, j * n + l) - &Polynomial::var(r * n, l));
        }
    }
    out
}

/// Pull an ideal of `Y^r` back along the diagonal embedding `Y → Y^r`.
pub(crate) fn restrict_to_diagonal(ideal: &IdealRep, n: usize) -> IdealRep {
    let map: Vec<usize> = (0..ideal.nvars()).map(|v| v % n).collect();
    ideal.remap(n, &map)
}

/// All choices of one part per cycle, with the product of coefficients.
pub(crate) fn part_combinations(cycles: &[CycleRep]) -> Vec<(Vec<&IdealRep>, u64)> {
    let mut out: Vec<(Vec<&IdealRep>, u64)> = vec![(Vec::new(), 1)];
    for z in cycles {
        let mut next = Vec::new();
        for (chosen, c) in &out {
            for (i, ci) in z.parts() {
                let mut v = chosen.clone();
                v.push(i);
                next.push((v, c * ci));
            }
        }
        out = next;
    }
    out
}

pub(crate) fn check_cycles(cycles: &[CycleRep], x: &AffinePoint, min: usize) -> Result<usize> {
    if cycles.len() < min {
        return Err(Error::InvalidArgument(format!(
            "at least {min} cycles are required"
        )));
    }
    let n = cycles[0].nvars();
    for z in cycles {
        if z.nvars() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: z.nvars(),
            });
        }
    }
    if x.arity() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: x.arity(),
        });
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;
    use crate::local::colength;

    fn ideal(r: &Ring, text: &str) -> IdealRep {
        IdealRep::new(r.nvars(), r.parse_list(text).unwrap()).unwrap()
    }

    #[test]
    fn divisor_cut_is_not_commutative() {
        let r = Ring::new(["x", "y"]).unwrap();
        let xy = r.parse("x*y").unwrap();
        let x = r.parse("x").unwrap();
        assert!(divisor_cut(&xy, &CycleRep::from_ideal(ideal(&r, "x")))
            .unwrap()
            .is_empty());
        let c = divisor_cut(&x, &CycleRep::from_ideal(ideal(&r, "x*y"))).unwrap();
        assert_eq!(c.parts().len(), 1);
        assert_eq!(c.parts()[0], (ideal(&r, "x, y"), 1));
    }

    #[test]
    fn divisor_cut_examples() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let c = divisor_cut(
            &r.parse("x1").unwrap(),
            &CycleRep::from_ideal(IdealRep::zero(2)),
        )
        .unwrap();
        assert_eq!(c.parts()[0], (ideal(&r, "x1"), 1));
        let r = Ring::new(["x", "y"]).unwrap();
        let c = divisor_cut(
            &r.parse("y").unwrap(),
            &CycleRep::from_ideal(ideal(&r, "y - x^2")),
        )
        .unwrap();
        assert_eq!(c.parts()[0].0, ideal(&r, "y, x^2"));
        assert_eq!(colength(&c.parts()[0].0).unwrap(), 2);
        assert_eq!(c.local_mult(&AffinePoint::origin(2)).unwrap(), 2);
    }

    #[test]
    fn divisor_cut_is_linear() {
        let r = Ring::new(["x", "y"]).unwrap();
        let h = r.parse("y - x").unwrap();
        let a = CycleRep::from_ideal(ideal(&r, "y - x^2"));
        let b = CycleRep::from_ideal(ideal(&r, "x")).with_part(ideal(&r, "y"), 2);
        let lhs = divisor_cut(&h, &a.add(&b)).unwrap();
        let rhs = divisor_cut(&h, &a)
            .unwrap()
            .add(&divisor_cut(&h, &b).unwrap());
        let o = AffinePoint::origin(2);
        assert_eq!(lhs.local_mult(&o).unwrap(), rhs.local_mult(&o).unwrap());
        assert_eq!(lhs.local_mult(&o).unwrap(), 4);
    }

    #[test]
    fn implicitize_examples() {
        let t = Ring::new(["t"]).unwrap();
        let r = Ring::new(["x", "y"]).unwrap();
        let cusp = implicitize(&t.parse_list("t^2, t^3").unwrap()).unwrap();
        assert_eq!(cusp, ideal(&r, "y^2 - x^3"));
        assert!(implicitize(&t.parse_list("t").unwrap()).unwrap().is_zero());
    }

    #[test]
    fn extended_index_views() {
        let e = ExtendedIndex::from_contributions(&[
            (1, 1, MultiplicitySeq(vec![0, 1]), true),
            (0, 2, MultiplicitySeq(vec![1]), true),
        ]);
        assert_eq!(e.by_dim, MultiplicitySeq(vec![3, 0]));
        assert_eq!(e.by_codim, MultiplicitySeq(vec![0, 3]));
        assert_eq!(e.total(), 3);
    }
}
