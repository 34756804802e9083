//! Buchberger's algorithm over primitive integer polynomials.
//!
//! Reductions are fraction-free (`b*p - a*m*g`) followed by content removal,
//! which keeps coefficients small without changing the ideal.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Rational};

#[derive(Clone, Debug)]
pub(crate) struct IntPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IntPoly {
    pub(crate) fn from_polynomial(p: &Polynomial, order: MonomialOrder) -> IntPoly {
        let p = p.with_order(order);
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
            .collect();
        let mut ip = IntPoly { terms };
        ip.make_primitive();
        ip
    }

    pub(crate) fn to_polynomial(
        &self,
        nvars: usize,
        order: MonomialOrder,
        monic: bool,
    ) -> Polynomial {
        let lc = self
            .terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(BigInt::one);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let q = if monic {
                    Rational::new(c.clone(), lc.clone())
                } else {
                    Rational::from_integer(c.clone())
                };
                (m.clone(), q)
            })
            .collect();
        Polynomial::from_sorted(nvars, order, terms)
    }

    #[inline]
    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub(crate) fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
        }
    }
}

/// `sa * a[skip_a..] - sb * shift * b[skip_b..]` merged in `order`.
fn combine(
    a: &[(Monomial, BigInt)],
    sa: &BigInt,
    b: &[(Monomial, BigInt)],
    sb: &BigInt,
    shift: &Monomial,
    order: MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Monomial> = b.first().map(|t| t.0.mul(shift));
    while i < a.len() {
        let Some(bm) = bj.as_ref() else { break };
        match order.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push((a[i].0.clone(), sa * &a[i].1));
                i += 1;
            }
            Ordering::Less => {
                out.push((bm.clone(), -(sb * &b[j].1)));
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(shift));
            }
            Ordering::Equal => {
                let c = sa * &a[i].1 - sb * &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(shift));
            }
        }
    }
    for t in &a[i..] {
        out.push((t.0.clone(), sa * &t.1));
    }
    while j < b.len() {
        out.push((b[j].0.mul(shift), -(sb * &b[j].1)));
        j += 1;
    }
    out
}

/// One reduction step of `p` (whose leading term is divisible by `lead(g)`).
fn reduce_step(p: &IntPoly, g: &IntPoly, order: MonomialOrder) -> (IntPoly, BigInt) {
    let (pm, pc) = &p.terms[0];
    let (gm, gc) = &g.terms[0];
    let shift = pm.div(gm);
    let d = pc.gcd(gc);
    let sa = gc / &d;
    let sb = pc / &d;
    let terms = combine(&p.terms[1..], &sa, &g.terms[1..], &sb, &shift, order);
    (IntPoly { terms }, sa)
}

fn find_reducer<'b>(
    m: &Monomial,
    basis: &'b [IntPoly],
    active: Option<&[bool]>,
) -> Option<&'b IntPoly> {
    basis
        .iter()
        .enumerate()
        .find(|(i, g)| active.is_none_or(|a| a[*i]) && !g.is_zero() && g.lead().divides(m))
        .map(|(_, g)| g)
}

/// Reduce the leading term until it is irreducible.
pub(crate) fn reduce_top(
    mut p: IntPoly,
    basis: &[IntPoly],
    active: Option<&[bool]>,
    order: MonomialOrder,
) -> IntPoly {
    let mut steps = 0usize;
    while !p.is_zero() {
        let Some(g) = find_reducer(p.lead(), basis, active) else {
            break;
        };
        p = reduce_step(&p, g, order).0;
        steps += 1;
        if steps.is_multiple_of(8) {
            p.make_primitive();
        }
    }
    p.make_primitive();
    p
}

/// Full reduction: no term of the result is divisible by a basis lead.
pub(crate) fn reduce_full(
    mut p: IntPoly,
    basis: &[IntPoly],
    active: Option<&[bool]>,
    order: MonomialOrder,
) -> IntPoly {
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut steps = 0usize;
    while !p.is_zero() {
        match find_reducer(p.lead(), basis, active) {
            Some(g) => {
                let (np, scale) = reduce_step(&p, g, order);
                if !scale.is_one() {
                    for (_, c) in rem.iter_mut() {
                        *c *= &scale;
                    }
                }
                p = np;
                steps += 1;
                if steps.is_multiple_of(8) {
                    // joint content of remainder and the rest
                    let mut g = BigInt::zero();
                    for (_, c) in rem.iter().chain(p.terms.iter()) {
                        g = g.gcd(c);
                        if g.is_one() {
                            break;
                        }
                    }
                    if !g.is_zero() && !g.is_one() {
                        for (_, c) in rem.iter_mut().chain(p.terms.iter_mut()) {
                            *c /= &g;
                        }
                    }
                }
            }
            None => {
                let t = p.terms.remove(0);
                rem.push(t);
            }
        }
    }
    let mut r = IntPoly { terms: rem };
    r.make_primitive();
    r
}

fn spoly(a: &IntPoly, b: &IntPoly, order: MonomialOrder) -> IntPoly {
    let (am, ac) = &a.terms[0];
    let (bm, bc) = &b.terms[0];
    let l = am.lcm(bm);
    let sa_m = l.div(am);
    let sb_m = l.div(bm);
    let d = ac.gcd(bc);
    let ka = bc / &d;
    let kb = ac / &d;
    // ka * sa_m * a - kb * sb_m * b
    let left: Vec<(Monomial, BigInt)> = a.terms[1..]
        .iter()
        .map(|(m, c)| (m.mul(&sa_m), c.clone()))
        .collect();
    let terms = combine(&left, &ka, &b.terms[1..], &kb, &sb_m, order);
    let mut p = IntPoly { terms };
    p.make_primitive();
    p
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis (monic, sorted by increasing leading monomial).
pub(crate) fn groebner_basis(
    gens: &[Polynomial],
    nvars: usize,
    order: MonomialOrder,
) -> Vec<Polynomial> {
    let mut basis: Vec<IntPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<IntPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IntPoly::from_polynomial(g, order))
        .collect();
    if inputs.iter().any(|p| p.lead().is_one()) {
        return vec![Polynomial::one(nvars).with_order(order)];
    }
    // smaller inputs first gives cheaper early reductions
    inputs.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    for p in inputs {
        let h = reduce_top(p, &basis, Some(&active), order);
        if h.is_zero() {
            continue;
        }
        if h.lead().is_one() {
            return vec![Polynomial::one(nvars).with_order(order)];
        }
        update(&mut basis, &mut active, &mut pairs, h);
    }

    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first
        let mut best = 0;
        for k in 1..pairs.len() {
            let o = order.cmp(&pairs[k].lcm, &pairs[best].lcm);
            if o == Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = spoly(&basis[pair.i], &basis[pair.j], order);
        let h = reduce_top(s, &basis, Some(&active), order);
        if h.is_zero() {
            continue;
        }
        if h.lead().is_one() {
            return vec![Polynomial::one(nvars).with_order(order)];
        }
        update(&mut basis, &mut active, &mut pairs, h);
    }

    // minimalize
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        if !active[i] {
            continue;
        }
        let redundant = (0..basis.len()).any(|j| {
            j != i
                && active[j]
                && basis[j].lead().divides(basis[i].lead())
                && (basis[j].lead() != basis[i].lead() || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<IntPoly> = keep.into_iter().map(|i| basis[i].clone()).collect();
    let mut reduced: Vec<IntPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<IntPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = minimal[i].terms[0].clone();
        let tail = IntPoly {
            terms: minimal[i].terms[1..].to_vec(),
        };
        let tail = reduce_full_keep_scale(tail, &others, order, &lead);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    reduced
        .into_iter()
        .map(|p| p.to_polynomial(nvars, order, true))
        .collect()
}

/// Reduce `lead + tail` where only the tail may be rewritten.
fn reduce_full_keep_scale(
    tail: IntPoly,
    others: &[IntPoly],
    order: MonomialOrder,
    lead: &(Monomial, BigInt),
) -> IntPoly {
    let mut rem: Vec<(Monomial, BigInt)> = vec![lead.clone()];
    let mut p = tail;
    while !p.is_zero() {
        match find_reducer(p.lead(), others, None) {
            Some(g) => {
                let (np, scale) = reduce_step(&p, g, order);
                if !scale.is_one() {
                    for (_, c) in rem.iter_mut() {
                        *c *= &scale;
                    }
                }
                p = np;
            }
            None => {
                let t = p.terms.remove(0);
                rem.push(t);
            }
        }
    }
    let mut r = IntPoly { terms: rem };
    r.make_primitive();
    r
}

fn update(basis: &mut Vec<IntPoly>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: IntPoly) {
    let hidx = basis.len();
    let hl = h.lead().clone();

    // candidate pairs (g, h) with active g
    let cands: Vec<(usize, Monomial)> = (0..basis.len())
        .filter(|&g| active[g])
        .map(|g| (g, basis[g].lead().lcm(&hl)))
        .collect();

    // Gebauer–Möller: drop (g1,h) if some other (g2,h) has an lcm dividing it
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    for (k, (g1, l1)) in cands.iter().enumerate() {
        let coprime = basis[*g1].lead().is_coprime(&hl);
        let dominated = cands
            .iter()
            .enumerate()
            .any(|(k2, (_, l2))| k2 != k && l2.divides(l1) && (l2 != l1 || k2 < k));
        if coprime || !dominated {
            kept.push((*g1, l1.clone()));
        }
    }
    // product criterion on the survivors
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|(g, _)| !basis[*g].lead().is_coprime(&hl))
        .map(|(g, lcm)| Pair { i: g, j: hidx, lcm })
        .collect();

    // chain criterion on old pairs
    pairs.retain(|p| {
        if !hl.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].lead().lcm(&hl);
        let lj = basis[p.j].lead().lcm(&hl);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(new_pairs);

    for g in 0..basis.len() {
        if active[g] && hl.divides(basis[g].lead()) {
            active[g] = false;
        }
    }
    basis.push(h);
    active.push(true);
}

/// True when `p` reduces to zero modulo `basis` (a Gröbner basis for `order`).
pub(crate) fn reduces_to_zero(p: &Polynomial, basis: &[IntPoly], order: MonomialOrder) -> bool {
    if p.is_zero() {
        return true;
    }
    let ip = IntPoly::from_polynomial(p, order);
    reduce_full(ip, basis, None, order).is_zero()
}
