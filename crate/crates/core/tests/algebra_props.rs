//! Property tests for the exact algebra layer: ring laws on the sparse
//! two-variable polynomials, quadratic-extension arithmetic, and the
//! integrality of generalized binomials along random integer parameters.

use num_traits::One;
use proptest::prelude::*;
use stfib::fib::FibCache;
use stfib::poly::Poly2;
use stfib::quad::{Quad, StContext};
use stfib::ring::{Int, Rat, Ring};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(Int::from(n), Int::from(d)))
}

fn poly() -> impl Strategy<Value = Poly2> {
    proptest::collection::vec(((0u32..=3, 0u32..=3), small_rat()), 0..=4).prop_map(|terms| {
        let mut p = Poly2::new();
        for (e, c) in terms {
            p = p.add(&Poly2::monomial(e, c));
        }
        p
    })
}

fn quad() -> impl Strategy<Value = Quad<Rat>> {
    (small_rat(), small_rat()).prop_map(|(a, b)| Quad::new(a, b))
}

fn nonzero_ctx() -> impl Strategy<Value = StContext<Rat>> {
    ((1i64..=5), (-3i64..=3).prop_filter("t nonzero", |t| *t != 0))
        .prop_map(|(s, t)| StContext::new(Rat::from_integer(s.into()), Rat::from_integer(t.into())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn poly_add_commutes(a in poly(), b in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn poly_mul_commutes(a in poly(), b in poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn poly_mul_associates(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn poly_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn poly_exact_div_round_trips(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        let q = prod.exact_div(&b);
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn quad_mul_matches_conjugate_norm(x in quad(), ctx in nonzero_ctx()) {
        // x * conj(x) must land in the base ring and equal the norm
        let prod = x.mul(&x.conj(&ctx), &ctx);
        prop_assert!(prod.is_base());
        prop_assert_eq!(prod.base_part().unwrap().clone(), x.norm(&ctx));
    }

    #[test]
    fn quad_mul_associates(x in quad(), y in quad(), z in quad(), ctx in nonzero_ctx()) {
        prop_assert_eq!(x.mul(&y, &ctx).mul(&z, &ctx), x.mul(&y.mul(&z, &ctx), &ctx));
    }

    #[test]
    fn fibonomials_are_integers_for_integer_params(
        s in 1i64..=4,
        t in (-3i64..=3).prop_filter("t nonzero", |t| *t != 0),
        n in 0i64..=14,
    ) {
        let fc = FibCache::new(StContext::new(
            Rat::from_integer(s.into()),
            Rat::from_integer(t.into()),
        ));
        for k in 0..=n {
            let v = fc.fibonomial(n, k).expect("dual routes agree");
            prop_assert!(
                v.denom().is_one(),
                "non-integer fibonomial ({},{}) at s={}, t={}: {}", n, k, s, t, v
            );
        }
    }
}
