//! Gröbner bases and ideal arithmetic.
//!
//! Ideals are [`IdealRep`] values: a generator list plus a per-order cache of
//! reduced Gröbner bases. Equality of ideals is equality of reduced grevlex
//! bases.

mod hilbert;
mod kernel;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::algebra::{AffinePoint, Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

pub use hilbert::{hilbert_data, monomial_dimension, HilbertData};

type BasisCache = Arc<RwLock<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>;

/// An ideal of `Q[x_0, ..., x_{n-1}]` given by generators.
#[derive(Clone)]
pub struct IdealRep {
    nvars: usize,
    generators: Vec<Polynomial>,
    cache: BasisCache,
}

impl std::fmt::Debug for IdealRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.generators.iter()).finish()
    }
}

impl PartialEq for IdealRep {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && *self.grevlex_basis() == *other.grevlex_basis()
    }
}

impl Eq for IdealRep {}

impl IdealRep {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<IdealRep> {
        for g in &generators {
            g.check_arity(nvars)?;
        }
        Ok(IdealRep::from_generators(nvars, generators))
    }

    pub(crate) fn from_generators(nvars: usize, generators: Vec<Polynomial>) -> IdealRep {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        IdealRep {
            nvars,
            generators,
            cache: Arc::default(),
        }
    }

    pub fn zero(nvars: usize) -> IdealRep {
        IdealRep::from_generators(nvars, Vec::new())
    }

    pub fn unit(nvars: usize) -> IdealRep {
        IdealRep::from_generators(nvars, vec![Polynomial::one(nvars)])
    }

    /// The maximal ideal of the point `x`.
    pub fn maximal(x: &AffinePoint) -> IdealRep {
        let n = x.arity();
        let gens = (0..n)
            .map(|i| &Polynomial::var(n, i) - &Polynomial::constant(n, x.coords()[i].clone()))
            .collect();
        IdealRep::from_generators(n, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Nonzero generators.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis for `order`, computed once and cached.
    pub fn basis(&self, order: MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(b) = self.cache.read().expect("cache lock").get(&order) {
            return b.clone();
        }
        let b = Arc::new(kernel::groebner_basis(&self.generators, self.nvars, order));
        // last writer wins; all writers store the same basis
        self.cache
            .write()
            .expect("cache lock")
            .insert(order, b.clone());
        b
    }

    pub fn grevlex_basis(&self) -> Arc<Vec<Polynomial>> {
        self.basis(MonomialOrder::Grevlex)
    }

    pub fn is_unit(&self) -> bool {
        if self.generators.iter().any(|g| g.is_unit()) {
            return true;
        }
        let b = self.grevlex_basis();
        b.len() == 1 && b[0].is_unit()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        let basis = self.grevlex_basis();
        let ib: Vec<_> = basis
            .iter()
            .map(|g| kernel::IntPoly::from_polynomial(g, MonomialOrder::Grevlex))
            .collect();
        kernel::reduces_to_zero(p, &ib, MonomialOrder::Grevlex)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &IdealRep) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &IdealRep) -> IdealRep {
        assert_eq!(self.nvars, other.nvars);
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealRep::from_generators(self.nvars, gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> IdealRep {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        IdealRep::from_generators(self.nvars, gens)
    }

    pub fn product(&self, other: &IdealRep) -> IdealRep {
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        IdealRep::from_generators(self.nvars, gens)
    }

    /// Generators of the reduced grevlex basis, a canonical generating set.
    pub fn canonical(&self) -> IdealRep {
        let b = self.grevlex_basis();
        let ideal = IdealRep::from_generators(self.nvars, b.to_vec());
        ideal
            .cache
            .write()
            .expect("cache lock")
            .insert(MonomialOrder::Grevlex, b.clone());
        ideal
    }

    pub fn translate(&self, x: &AffinePoint) -> Result<IdealRep> {
        if x.arity() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: x.arity(),
            });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.translate(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealRep::from_generators(self.nvars, gens))
    }

    pub fn substitute(
        &self,
        bindings: &[Option<Polynomial>],
        target_nvars: usize,
    ) -> Result<IdealRep> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.substitute(bindings, target_nvars))
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealRep::from_generators(target_nvars, gens))
    }

    pub fn remap(&self, nvars: usize, map: &[usize]) -> IdealRep {
        IdealRep::from_generators(
            nvars,
            self.generators
                .iter()
                .map(|g| g.remap(nvars, map))
                .collect(),
        )
    }

    /// Leading monomials of the reduced grevlex basis.
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.grevlex_basis()
            .iter()
            .map(|g| g.lead_monomial().expect("nonzero basis element").clone())
            .collect()
    }
}

/// Remainder of `p` under multivariate division by `basis` in `order`;
/// canonical when `basis` is a Gröbner basis.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let divisors: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order))
        .collect();
    let mut rest = p.with_order(order);
    let mut rem: Vec<(Monomial, crate::algebra::Rational)> = Vec::new();
    while let Some((m, c)) = rest.lead_term().cloned() {
        match divisors
            .iter()
            .find(|g| g.lead_monomial().expect("nonzero").divides(&m))
        {
            Some(g) => {
                let (gm, gc) = g.lead_term().expect("nonzero");
                rest = &rest - &g.mul_term(&m.div(gm), &(&c / gc));
            }
            None => {
                rem.push((m.clone(), c.clone()));
                rest = &rest - &Polynomial::monomial(m, c).with_order(order);
            }
        }
    }
    Polynomial::from_terms(p.nvars(), order, rem)
}

/// Reduced Gröbner basis of `ideal` for `order` (cached on the ideal).
pub fn buchberger(ideal: &IdealRep, order: MonomialOrder) -> Arc<Vec<Polynomial>> {
    ideal.basis(order)
}

/// `I ∩ Q[x \ front_vars]`, computed with a block elimination order.
pub fn eliminate(ideal: &IdealRep, front_vars: &[usize]) -> Result<IdealRep> {
    let n = ideal.nvars;
    for &v in front_vars {
        if v >= n {
            return Err(Error::InvalidArgument(format!(
                "variable index {v} out of range"
            )));
        }
    }
    if front_vars.is_empty() {
        return Ok(ideal.clone());
    }
    // permutation putting the eliminated variables first
    let mut perm: Vec<usize> = front_vars.to_vec();
    perm.sort_unstable();
    perm.dedup();
    let k = perm.len();
    perm.extend((0..n).filter(|v| !front_vars.contains(v)));
    let mut to_new = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        to_new[old] = new;
    }
    let moved = ideal.remap(n, &to_new);
    let basis = moved.basis(MonomialOrder::Elimination { block: k });
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| (0..k).all(|v| !g.depends_on(v)))
        .map(|g| g.remap(n, &perm).with_order(MonomialOrder::Grevlex))
        .collect();
    Ok(IdealRep::from_generators(n, kept))
}

/// Embed into a ring with one extra variable placed first.
fn shift_up(p: &Polynomial) -> Polynomial {
    let n = p.nvars();
    let map: Vec<usize> = (1..=n).collect();
    p.remap(n + 1, &map)
}

fn shift_down(p: &Polynomial) -> Polynomial {
    let n = p.nvars() - 1;
    let mut map = vec![0usize; n + 1];
    for (i, m) in map.iter_mut().enumerate().skip(1) {
        *m = i - 1;
    }
    // variable 0 must not occur
    debug_assert!(!p.depends_on(0));
    Polynomial::from_terms(
        n,
        MonomialOrder::Grevlex,
        p.terms()
            .iter()
            .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[1..]), c.clone())),
    )
}

/// `I ∩ K` via elimination of `t` from `t·I + (1-t)·K`.
pub fn intersect(i: &IdealRep, k: &IdealRep) -> IdealRep {
    assert_eq!(i.nvars, k.nvars, "ideals from different rings");
    if i.is_unit() {
        return k.clone();
    }
    if k.is_unit() {
        return i.clone();
    }
    if i.is_zero() || k.is_zero() {
        return IdealRep::zero(i.nvars);
    }
    let n = i.nvars;
    let t = Polynomial::var(n + 1, 0);
    let one_minus_t = &Polynomial::one(n + 1) - &t;
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(&t * &shift_up(g));
    }
    for g in k.generators() {
        gens.push(&one_minus_t * &shift_up(g));
    }
    let big = IdealRep::from_generators(n + 1, gens);
    let basis = big.basis(MonomialOrder::Elimination { block: 1 });
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.depends_on(0))
        .map(|g| shift_down(g).with_order(MonomialOrder::Grevlex))
        .collect();
    IdealRep::from_generators(n, kept)
}

/// `I : g = {p : p·g ∈ I}`.
pub fn quotient(i: &IdealRep, g: &Polynomial) -> Result<IdealRep> {
    if g.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    g.check_arity(i.nvars)?;
    if i.contains(g) {
        return Ok(IdealRep::unit(i.nvars));
    }
    if g.is_unit() {
        return Ok(i.clone());
    }
    let inter = intersect(i, &IdealRep::from_generators(i.nvars, vec![g.clone()]));
    let gens = inter
        .generators()
        .iter()
        .map(|p| {
            p.exact_div(g)
                .expect("elements of I ∩ (g) are multiples of g")
        })
        .collect();
    Ok(IdealRep::from_generators(i.nvars, gens))
}

/// `I : g^∞ = (I + (1 - t·g)) ∩ k[x]`.
pub fn saturate_by(i: &IdealRep, g: &Polynomial) -> Result<IdealRep> {
    if g.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    g.check_arity(i.nvars)?;
    if g.is_unit() || i.is_zero() {
        return Ok(i.clone());
    }
    if i.contains(g) {
        return Ok(IdealRep::unit(i.nvars));
    }
    let n = i.nvars;
    let t = Polynomial::var(n + 1, 0);
    let mut gens: Vec<Polynomial> = i.generators().iter().map(shift_up).collect();
    gens.push(&Polynomial::one(n + 1) - &(&t * &shift_up(g)));
    let big = IdealRep::from_generators(n + 1, gens);
    let basis = big.basis(MonomialOrder::Elimination { block: 1 });
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|p| !p.depends_on(0))
        .map(|p| shift_down(p).with_order(MonomialOrder::Grevlex))
        .collect();
    Ok(IdealRep::from_generators(n, kept))
}

/// `I : J^∞ = ∩_g (I : g^∞)` over the generators `g` of `J`.
///
/// Removes exactly the primary components of `I` whose variety lies in `V(J)`.
pub fn saturate(i: &IdealRep, j: &IdealRep) -> Result<IdealRep> {
    if i.nvars != j.nvars {
        return Err(Error::ArityMismatch {
            expected: i.nvars,
            found: j.nvars,
        });
    }
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if i.is_unit() {
        return Ok(i.clone());
    }
    let mut result: Option<IdealRep> = None;
    for g in j.generators() {
        if i.contains(g) {
            // I : g^∞ = (1)
            continue;
        }
        let s = saturate_by(i, g)?;
        if s.is_unit() {
            continue;
        }
        result = Some(match result {
            None => s,
            Some(r) => intersect(&r, &s),
        });
    }
    Ok(result.unwrap_or_else(|| IdealRep::unit(i.nvars)))
}

/// Whether `g` vanishes on `V(I)`: `1 ∈ I + (1 - t·g)`.
pub fn radical_member(g: &Polynomial, i: &IdealRep) -> bool {
    if g.is_zero() || i.is_unit() {
        return true;
    }
    let n = i.nvars;
    let t = Polynomial::var(n + 1, 0);
    let mut gens: Vec<Polynomial> = i.generators().iter().map(shift_up).collect();
    gens.push(&Polynomial::one(n + 1) - &(&t * &shift_up(g)));
    IdealRep::from_generators(n + 1, gens).is_unit()
}

/// Dimension of `V(I)` from the leading-term ideal of a grevlex basis;
/// `-1` for the unit ideal.
pub fn krull_dimension(i: &IdealRep) -> i64 {
    if i.is_zero() {
        return i.nvars as i64;
    }
    monomial_dimension(&i.lead_monomials(), i.nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    fn ring3() -> Ring {
        Ring::new(["x", "y", "z"]).unwrap()
    }

    fn ideal(r: &Ring, text: &str) -> IdealRep {
        IdealRep::new(r.nvars(), r.parse_list(text).unwrap()).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, "x^2 - y, y^2 - 1");
        let gb = i.grevlex_basis();
        let p = r.parse("x^2*y").unwrap();
        assert_eq!(
            normal_form(&p, &gb, MonomialOrder::Grevlex),
            r.parse("1").unwrap()
        );
        assert!(normal_form(&Polynomial::zero(2), &gb, MonomialOrder::Grevlex).is_zero());
        let g = r.parse("x^3 + y").unwrap();
        assert!(normal_form(&g, std::slice::from_ref(&g), MonomialOrder::Grevlex).is_zero());
    }

    #[test]
    fn buchberger_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert!(buchberger(&IdealRep::zero(2), MonomialOrder::Grevlex).is_empty());
        let i = ideal(&r, "x^2, x*y");
        let b = buchberger(&i, MonomialOrder::Grevlex);
        let got: Vec<String> = b.iter().map(|g| r.format(g)).collect();
        assert_eq!(got, vec!["x*y", "x^2"]);
    }

    #[test]
    fn eliminate_examples() {
        let r = ring3();
        let i = ideal(&r, "y - x^2, z - x^3");
        let e = eliminate(&i, &[0]).unwrap();
        assert_eq!(e, ideal(&r, "y^3 - z^2"));
        assert!(eliminate(&ideal(&r, "x"), &[0])
            .unwrap()
            .grevlex_basis()
            .is_empty());
        assert_eq!(
            eliminate(&ideal(&r, "x - 1, y - x"), &[0]).unwrap(),
            ideal(&r, "y - 1")
        );
    }

    #[test]
    fn intersect_examples() {
        let r = ring3();
        assert_eq!(
            intersect(&ideal(&r, "x"), &ideal(&r, "y")),
            ideal(&r, "x*y")
        );
        assert_eq!(
            intersect(&ideal(&r, "x, y"), &ideal(&r, "z")),
            ideal(&r, "x*z, y*z")
        );
        let i = ideal(&r, "x^2 - y, z^3");
        assert_eq!(intersect(&i, &IdealRep::unit(3)), i);
    }

    #[test]
    fn quotient_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let x = r.parse("x").unwrap();
        assert_eq!(quotient(&ideal(&r, "x*y"), &x).unwrap(), ideal(&r, "y"));
        assert!(quotient(&ideal(&r, "x"), &x).unwrap().is_unit());
        assert_eq!(
            quotient(&ideal(&r, "x^2, x*y"), &x).unwrap(),
            ideal(&r, "x, y")
        );
        assert_eq!(
            quotient(&ideal(&r, "x"), &Polynomial::zero(2)),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn saturate_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, "x^2, x*y");
        assert!(saturate(&i, &ideal(&r, "x")).unwrap().is_unit());
        assert_eq!(saturate(&i, &ideal(&r, "y")).unwrap(), ideal(&r, "x"));
        assert_eq!(saturate(&i, &IdealRep::unit(2)).unwrap(), i);
        assert_eq!(saturate(&i, &IdealRep::zero(2)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn radical_member_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert!(radical_member(&r.parse("x").unwrap(), &ideal(&r, "x^2")));
        assert!(!radical_member(
            &r.parse("y").unwrap(),
            &ideal(&r, "x^2, x*y")
        ));
        assert!(radical_member(&Polynomial::zero(2), &ideal(&r, "x")));
    }

    #[test]
    fn krull_dimension_examples() {
        let r = ring3();
        assert_eq!(krull_dimension(&IdealRep::zero(3)), 3);
        assert_eq!(krull_dimension(&ideal(&r, "x*z, y*z")), 2);
        assert_eq!(krull_dimension(&IdealRep::unit(3)), -1);
    }
}
