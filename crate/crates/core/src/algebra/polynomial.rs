use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational};
use crate::error::{Error, Result};

/// A point of affine space with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffinePoint {
    coords: Vec<Rational>,
}

impl AffinePoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        AffinePoint { coords }
    }

    pub fn origin(nvars: usize) -> Self {
        AffinePoint {
            coords: vec![Rational::zero(); nvars],
        }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        AffinePoint {
            coords: coords
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn neg(&self) -> AffinePoint {
        AffinePoint {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// The point repeated `times` times, a point of the `times`-fold product.
    pub fn repeat(&self, times: usize) -> AffinePoint {
        let mut coords = Vec::with_capacity(self.coords.len() * times);
        for _ in 0..times {
            coords.extend(self.coords.iter().cloned());
        }
        AffinePoint { coords }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept strictly decreasing with respect to `order` and carry no
/// zero coefficients, so the representation is canonical per order.
#[derive(Clone)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            order: MonomialOrder::Grevlex,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Polynomial::from_terms(nvars, MonomialOrder::Grevlex, [(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Polynomial::constant(nvars, Rational::from_integer(c.into()))
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Polynomial::monomial(Monomial::var(nvars, var, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let n = m.nvars();
        Polynomial::from_terms(n, MonomialOrder::Grevlex, [(m, c)])
    }

    /// Build from arbitrary terms: like monomials are combined, zeros dropped.
    pub fn from_terms<I>(nvars: usize, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            nvars,
            order,
            terms,
        }
    }

    /// Terms already sorted (strictly decreasing) and nonzero.
    pub(crate) fn from_sorted(
        nvars: usize,
        order: MonomialOrder,
        terms: Vec<(Monomial, Rational)>,
    ) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            nvars,
            order,
            terms,
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant: generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Order of vanishing at the origin (lowest total degree); `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .cloned()
                .collect(),
        }
    }

    /// Lowest-degree homogeneous component (the initial form at the origin).
    pub fn lowest_form(&self) -> Polynomial {
        match self.min_degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    /// Variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.depends_on(v)).collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars).with_order(self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * m * self`; the order is preserved since orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars).with_order(self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars).with_order(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divide by the rational content: the result has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut factor = Rational::new(den_lcm, num_gcd);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn evaluate(&self, point: &AffinePoint) -> Result<Rational> {
        self.check_arity(point.arity())?;
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow(point.coords()[i].clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    pub(crate) fn check_arity(&self, n: usize) -> Result<()> {
        if self.nvars != n {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: n,
            });
        }
        Ok(())
    }

    /// Simultaneous substitution `x_i -> bindings[i]` for every bound variable.
    ///
    /// All bound polynomials must live in the same ring as the result, which
    /// has `target_nvars` variables. Unbound variables are kept in place, so
    /// `target_nvars` must then be at least `self.nvars()`.
    pub fn substitute(
        &self,
        bindings: &[Option<Polynomial>],
        target_nvars: usize,
    ) -> Result<Polynomial> {
        if bindings.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: bindings.len(),
            });
        }
        for (i, b) in bindings.iter().enumerate() {
            match b {
                Some(p) => p.check_arity(target_nvars)?,
                None if i >= target_nvars => {
                    return Err(Error::ArityMismatch {
                        expected: self.nvars,
                        found: target_nvars,
                    })
                }
                None => {}
            }
        }
        let order = self.order;
        // cache of powers per bound variable
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); self.nvars];
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut fixed = Monomial::one(target_nvars);
            let mut prod: Option<Polynomial> = None;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &bindings[i] {
                    None => fixed.exps_mut()[i] += e,
                    Some(b) => {
                        let cache = &mut powers[i];
                        if cache.is_empty() {
                            cache.push(Polynomial::one(target_nvars).with_order(order));
                        }
                        while cache.len() <= e as usize {
                            let next = &cache[cache.len() - 1] * b;
                            cache.push(next.with_order(order));
                        }
                        let pe = &cache[e as usize];
                        prod = Some(match prod {
                            None => pe.clone(),
                            Some(p) => &p * pe,
                        });
                    }
                }
            }
            match prod {
                None => *acc.entry(fixed).or_insert_with(Rational::zero) += c,
                Some(p) => {
                    for (t, a) in p.terms() {
                        *acc.entry(t.mul(&fixed)).or_insert_with(Rational::zero) += a * c;
                    }
                }
            }
        }
        Ok(Polynomial::from_terms(target_nvars, order, acc))
    }

    /// `p(z + x)`: the origin of the result corresponds to `x`.
    pub fn translate(&self, x: &AffinePoint) -> Result<Polynomial> {
        self.check_arity(x.arity())?;
        if x.is_origin() {
            return Ok(self.clone());
        }
        let n = self.nvars;
        let bindings: Vec<Option<Polynomial>> = (0..n)
            .map(|i| {
                let c = &x.coords()[i];
                if c.is_zero() {
                    None
                } else {
                    Some(&Polynomial::var(n, i) + &Polynomial::constant(n, c.clone()))
                }
            })
            .collect();
        self.substitute(&bindings, n)
    }

    /// Re-index variables into a ring with `nvars` variables (`map[i]` is the
    /// new index of variable `i`). Ring-changing operations return grevlex-sorted terms.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            MonomialOrder::Grevlex,
            self.terms
                .iter()
                .map(|(m, c)| (m.remap(nvars, map), c.clone())),
        )
    }

    /// Embed into a larger ring whose first variables are those of `self`.
    pub fn extend(&self, nvars: usize) -> Polynomial {
        debug_assert!(nvars >= self.nvars);
        let map: Vec<usize> = (0..self.nvars).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(nvars, &map), c.clone()))
            .collect::<Vec<_>>();
        Polynomial::from_terms(nvars, MonomialOrder::Grevlex, terms)
    }

    /// Homogenize with respect to the extra variable `var` (index in a ring
    /// with `nvars = self.nvars() + 1` variables, placed last).
    pub fn homogenize(&self) -> Polynomial {
        let n = self.nvars + 1;
        let d = self.total_degree().max(0) as u32;
        let map: Vec<usize> = (0..self.nvars).collect();
        Polynomial::from_terms(
            n,
            MonomialOrder::Grevlex,
            self.terms.iter().map(|(m, c)| {
                let mut h = m.remap(n, &map);
                h.exps_mut()[self.nvars] = d - m.degree();
                (h, c.clone())
            }),
        )
    }

    /// Set the last variable to one and drop it.
    pub fn dehomogenize_last(&self) -> Polynomial {
        let n = self.nvars - 1;
        Polynomial::from_terms(
            n,
            MonomialOrder::Grevlex,
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[..n]), c.clone())),
        )
    }

    /// Exact division by `d`; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let d = d.with_order(self.order);
        let (dm, dc) = d.lead_term()?.clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((m, c)) = rem.lead_term().cloned() {
            if !dm.divides(&m) {
                return None;
            }
            let qm = m.div(&dm);
            let qc = &c / &dc;
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.push((qm, qc));
        }
        Some(Polynomial::from_terms(self.nvars, self.order, quot))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "polynomials from different rings");
        let other = if other.order == self.order {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.with_order(self.order))
        };
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })),
        );
        Polynomial {
            nvars: self.nvars,
            order,
            terms: out,
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * rhs.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        Polynomial::from_terms(self.nvars, self.order, acc)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", super::ring::format_polynomial(self, &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn arithmetic_basics() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = &(&x + &y) * &(&x - &y);
        let expected = &x.pow(2) - &y.pow(2);
        assert_eq!(p, expected);
        assert!((&p - &expected).is_zero());
    }

    #[test]
    fn translate_linear_shift() {
        let z1 = Polynomial::var(2, 0);
        let t = z1.translate(&AffinePoint::from_integers(&[1, 0])).unwrap();
        assert_eq!(t, &z1 + &Polynomial::one(2));
    }

    #[test]
    fn translate_identity() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = &y - &x.pow(2);
        assert_eq!(p.translate(&AffinePoint::origin(2)).unwrap(), p);
    }

    #[test]
    fn translate_expands_binomials() {
        // (z1+1)^2 - (z2+1)^3 = z1^2 + 2 z1 + 1 - z2^3 - 3 z2^2 - 3 z2 - 1
        let z1 = Polynomial::var(2, 0);
        let z2 = Polynomial::var(2, 1);
        let p = &z1.pow(2) - &z2.pow(3);
        let t = p.translate(&AffinePoint::from_integers(&[1, 1])).unwrap();
        let m = |a: u32, b: u32| Monomial::from_exponents(&[a, b]);
        let expected = Polynomial::from_terms(
            2,
            MonomialOrder::Grevlex,
            [
                (m(2, 0), q(1)),
                (m(1, 0), q(2)),
                (m(0, 3), q(-1)),
                (m(0, 2), q(-3)),
                (m(0, 1), q(-3)),
            ],
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn translate_arity_mismatch() {
        let x = Polynomial::var(2, 0);
        assert!(matches!(
            x.translate(&AffinePoint::origin(3)),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn substitute_examples() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let xy = &x * &y;
        assert_eq!(
            xy.substitute(&[None, Some(x.clone())], 2).unwrap(),
            x.pow(2)
        );
        let diff = &y - &x;
        assert!(diff
            .substitute(&[None, Some(x.clone())], 2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn cusp_parametrization_vanishes() {
        // y^2 - x^3 under x = t^2, y = t^3 with t a fresh variable
        let x = Polynomial::var(3, 0);
        let y = Polynomial::var(3, 1);
        let t = Polynomial::var(3, 2);
        let p = &y.pow(2) - &x.pow(3);
        let r = p
            .substitute(&[Some(t.pow(2)), Some(t.pow(3)), None], 3)
            .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn primitive_and_exact_division() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = (&x * &y).scale(&Rational::new(3.into(), 2.into()));
        let p = &p - &y.scale(&q(6));
        let pr = p.primitive();
        assert_eq!(pr.lead_coeff().unwrap(), &q(1));
        assert_eq!(pr.exact_div(&y).unwrap(), &x - &Polynomial::from_int(2, 4));
        assert!(pr.exact_div(&x).is_none());
    }

    #[test]
    fn homogenize_roundtrip() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = &y - &x.pow(2);
        let h = p.homogenize();
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize_last(), p);
    }
}
