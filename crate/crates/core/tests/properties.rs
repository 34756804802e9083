use proptest::prelude::*;

use segre::algebra::{rational, Ring};
use segre::groebner::{krull_dimension, saturate};
use segre::intersect::{circ_index, divisor_cut, proper_intersect, tworzewski_index};
use segre::local::{colength, local_dim_mult};
use segre::vogel::{segre_at, vogel_run, vogel_trials};
use segre::{AffinePoint, CycleRep, IdealRep, Monomial, MonomialOrder, Polynomial, TrialConfig};

const N: usize = 3;

fn monomial(max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, N).prop_map(|e| Monomial::from_exponents(&e))
}

fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(max_deg), -6i64..=6), 0..=max_terms).prop_map(|terms| {
        Polynomial::from_terms(
            N,
            MonomialOrder::Grevlex,
            terms.into_iter().map(|(m, c)| (m, rational(c))),
        )
    })
}

fn point() -> impl Strategy<Value = AffinePoint> {
    prop::collection::vec(-3i64..=3, N).prop_map(|c| AffinePoint::from_integers(&c))
}

fn ring() -> Ring {
    Ring::new(["x", "y", "z"]).unwrap()
}

fn ideal(text: &str) -> IdealRep {
    let r = ring();
    IdealRep::new(N, r.parse_list(text).unwrap()).unwrap()
}

/// `(x^a, y^b, z^c)` plus optional mixed terms, in the local ring at the origin.
fn monomial_ideal() -> impl Strategy<Value = (Vec<Monomial>, IdealRep)> {
    (
        prop::collection::vec(1u32..=3, N),
        prop::collection::vec(monomial(2), 0..=2),
    )
        .prop_map(|(pure, mixed)| {
            let mut gens: Vec<Monomial> = (0..N).map(|v| Monomial::var(N, v, pure[v])).collect();
            gens.extend(mixed.into_iter().filter(|m| !m.is_one()));
            let polys = gens
                .iter()
                .map(|m| Polynomial::monomial(m.clone(), rational(1)))
                .collect();
            (gens, IdealRep::new(N, polys).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(3, 4), b in poly(3, 4), c in poly(3, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn translation_round_trip(p in poly(3, 4), x in point()) {
        let moved = p.translate(&x).unwrap();
        prop_assert_eq!(moved.translate(&x.neg()).unwrap(), p.clone());
        prop_assert_eq!(moved.evaluate(&AffinePoint::origin(N)).unwrap(), p.evaluate(&x).unwrap());
    }

    #[test]
    fn orders_are_total_and_multiplicative(a in monomial(4), b in monomial(4), c in monomial(4)) {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let ab = order.cmp(&a, &b);
            prop_assert_eq!(ab, order.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
            prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(order.cmp(&Monomial::one(N), &a), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn format_parse_round_trip(p in poly(4, 5)) {
        let r = ring();
        prop_assert_eq!(r.parse(&r.format(&p)).unwrap(), p);
    }

    #[test]
    fn reduced_basis_is_canonical(f in prop::collection::vec(poly(2, 3), 1..=3), k in -4i64..=4, shuffle in any::<bool>()) {
        let i = IdealRep::new(N, f.clone()).unwrap();
        let mut g = f.clone();
        if shuffle {
            g.reverse();
        }
        let combo = f.iter().fold(Polynomial::zero(N), |acc, p| acc + p.scale(&rational(k)));
        g.push(combo);
        let j = IdealRep::new(N, g).unwrap();
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            prop_assert_eq!(i.basis(order), j.basis(order));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn saturation_is_idempotent(f in prop::collection::vec(poly(2, 3), 1..=2), g in prop::collection::vec(poly(2, 2), 1..=2)) {
        let i = IdealRep::new(N, f).unwrap();
        let j = IdealRep::new(N, g).unwrap();
        prop_assume!(!j.is_zero());
        let once = saturate(&i, &j).unwrap();
        prop_assert_eq!(saturate(&once, &j).unwrap(), once.clone());
        prop_assert!(once.contains_ideal(&i));
    }

    #[test]
    fn colength_matches_staircase((gens, i) in monomial_ideal()) {
        let bound = 4u32;
        let mut count = 0u64;
        for a in 0..bound {
            for b in 0..bound {
                for c in 0..bound {
                    let m = Monomial::from_exponents(&[a, b, c]);
                    if !gens.iter().any(|g| g.divides(&m)) {
                        count += 1;
                    }
                }
            }
        }
        prop_assert_eq!(colength(&i).unwrap(), count);
    }

    #[test]
    fn multiplicity_is_translation_invariant(p in poly(3, 4), x in point()) {
        prop_assume!(!p.is_zero() && !p.is_constant());
        let i = IdealRep::new(N, vec![p.clone()]).unwrap();
        let shifted = i.translate(&x).unwrap();
        prop_assert_eq!(local_dim_mult(&i, &x).unwrap(), local_dim_mult(&shifted, &AffinePoint::origin(N)).unwrap());
    }

    #[test]
    fn runs_split_exhaustively((_, i) in monomial_ideal(), seed in any::<u64>()) {
        let o = AffinePoint::origin(N);
        let cfg = TrialConfig::default().with_trials(1).with_seed(seed);
        let zero = IdealRep::zero(N);
        let runs = vogel_trials(i.generators(), &zero, &o, &cfg).unwrap();
        for run in &runs {
            for (k, step) in run.steps.iter().enumerate() {
                let expected = (N - k) as i64;
                prop_assert_eq!(run.mult_z.get(k) + run.mult_off.get(k), step.local.guarded(expected));
            }
            let again = vogel_run(i.generators(), &zero, &o, &run.sequence).unwrap();
            prop_assert_eq!(&again.mult_z, &run.mult_z);
            prop_assert_eq!(&again.mult_off, &run.mult_off);
        }
    }

    #[test]
    fn vanishing_below_codimension((_, i) in monomial_ideal(), seed in any::<u64>()) {
        // an m-primary ideal only has a top Segre number
        let o = AffinePoint::origin(N);
        let cfg = TrialConfig::default().with_seed(seed);
        let e = segre_at(i.generators(), &IdealRep::zero(N), &o, &cfg).unwrap().value;
        let len = colength(&i).unwrap();
        prop_assert!(e.0[..N].iter().all(|v| *v == 0));
        // e(I) is the colength of a minimal reduction, so it bounds the colength of I
        prop_assert!(e.get(N) >= len);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn divisor_cut_is_linear(h in poly(2, 3), a in 1u64..=3, b in 1u64..=3) {
        prop_assume!(!h.is_zero());
        let z1 = ideal("x - y");
        let z2 = ideal("z^2 - x*y");
        let sum = CycleRep::from_ideal(z1.clone()).scale(a).add(&CycleRep::from_ideal(z2.clone()).scale(b));
        let whole = divisor_cut(&h, &sum).unwrap();
        let parts = divisor_cut(&h, &CycleRep::from_ideal(z1)).unwrap().scale(a)
            .add(&divisor_cut(&h, &CycleRep::from_ideal(z2)).unwrap().scale(b));
        let o = AffinePoint::origin(N);
        prop_assert_eq!(whole.local_mult(&o).unwrap(), parts.local_mult(&o).unwrap());
        prop_assert_eq!(whole.parts().len(), parts.parts().len());
    }

    #[test]
    fn proper_intersection_is_symmetric(a in 1u32..=3, b in 1u32..=3, seed in any::<u64>()) {
        let cfg = TrialConfig::default().with_seed(seed);
        let o = AffinePoint::origin(N);
        let p = CycleRep::from_ideal(ideal(&format!("y - x^{a}")));
        let q = CycleRep::from_ideal(ideal(&format!("z - y^{b}")));
        let r = CycleRep::from_ideal(ideal("x + y + z"));
        let abc = proper_intersect(&[p.clone(), q.clone(), r.clone()], &o, &cfg).unwrap().multiplicity;
        let cba = proper_intersect(&[r, q, p], &o, &cfg).unwrap().multiplicity;
        prop_assert_eq!(abc, cba);
        prop_assert_eq!(abc, 1);
    }

    #[test]
    fn bullet_is_symmetric_and_matches_circ(m in 1u32..=3, seed in any::<u64>()) {
        let cfg = TrialConfig::default().with_seed(seed);
        let o = AffinePoint::origin(N);
        let a = ideal("y, z");
        let z = CycleRep::from_ideal(ideal(&format!("y*x^{m} - z^2")));
        let ac = CycleRep::from_ideal(a.clone());
        let ab = tworzewski_index(&[ac.clone(), z.clone()], &o, &cfg).unwrap();
        let ba = tworzewski_index(&[z.clone(), ac], &o, &cfg).unwrap();
        prop_assert_eq!(&ab.by_dim, &ba.by_dim);
        let circ = circ_index(&a, &z, &o, &cfg).unwrap();
        prop_assert_eq!(ab.total(), circ.total());
        let mut reversed = ab.by_dim.0.clone();
        reversed.reverse();
        prop_assert_eq!(reversed, ab.by_codim.0.clone());
    }
}

#[test]
fn krull_dimension_of_products() {
    assert_eq!(krull_dimension(&ideal("x*y, x*z")), 2);
    assert_eq!(krull_dimension(&ideal("x, y, z")), 0);
    assert_eq!(krull_dimension(&IdealRep::unit(N)), -1);
}
