use proptest::prelude::*;
use sl2loop::arith_a::{AElem, AMonomial};
use sl2loop::central_extension::{cocycle, pi_projection, CentralVec, LElem, LHatElem};
use sl2loop::expression::{evaluate, parse, EvalOptions, Value};
use sl2loop::scalar::{ratio, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

fn aelem(max_degree: u32) -> impl Strategy<Value = AElem> {
    let basis = AMonomial::up_to_degree(max_degree);
    prop::collection::vec((0..basis.len(), scalar()), 0..5).prop_map(move |terms| {
        let mut out = AElem::zero();
        for (i, c) in terms {
            out += &AElem::monomial(basis[i], c);
        }
        out
    })
}

fn lhat(max_degree: u32) -> impl Strategy<Value = LHatElem> {
    (
        aelem(max_degree),
        aelem(max_degree),
        aelem(max_degree),
        scalar(),
        scalar(),
    )
        .prop_map(|(x, y, z, c, cp)| LHatElem::new(LElem::new(x, y, z), CentralVec::new(c, cp)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_commutative_and_associative(a in aelem(4), b in aelem(4), c in aelem(3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in aelem(4), b in aelem(4), c in aelem(4)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn prime_is_an_order_three_homomorphism(a in aelem(5), b in aelem(5)) {
        prop_assert_eq!((&a * &b).prime(), &a.prime() * &b.prime());
        prop_assert_eq!((&a + &b).prime(), &a.prime() + &b.prime());
        prop_assert_eq!(a.prime().prime().prime(), a);
    }

    #[test]
    fn symmetric_coordinates_round_trip(a in aelem(8)) {
        prop_assert_eq!(AElem::from_sym(&a.to_sym()), a);
    }

    #[test]
    fn cocycle_is_skew(a in aelem(6), b in aelem(6)) {
        prop_assert!((&cocycle(&a, &b) + &cocycle(&b, &a)).is_zero());
    }

    #[test]
    fn cocycle_cyclic_identity(a in aelem(3), b in aelem(3), c in aelem(3)) {
        let sum = &(&cocycle(&(&a * &b), &c) + &cocycle(&(&b * &c), &a)) + &cocycle(&(&c * &a), &b);
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(u in lhat(3), v in lhat(3), w in lhat(3), s in scalar()) {
        prop_assert!((&u.bracket(&v) + &v.bracket(&u)).is_zero());
        prop_assert_eq!((&u.scale(&s) + &w).bracket(&v), &u.bracket(&v).scale(&s) + &w.bracket(&v));
    }

    #[test]
    fn center_is_central(u in lhat(4), c in scalar(), cp in scalar()) {
        let z: LHatElem = CentralVec::new(c, cp).into();
        prop_assert!(u.bracket(&z).is_zero());
    }

    #[test]
    fn projection_is_a_homomorphism(u in lhat(4), v in lhat(4)) {
        prop_assert_eq!(pi_projection(&u.bracket(&v)), pi_projection(&u).bracket(&pi_projection(&v)));
    }

    #[test]
    fn parse_inverts_rendering(u in lhat(5)) {
        let text = u.to_string();
        let value = evaluate(&parse(&text).unwrap(), &EvalOptions::default()).unwrap();
        match value {
            Value::LoopHat(back) => prop_assert_eq!(back, u),
            Value::Scalar(s) => prop_assert!(u.is_zero() && s == ratio(0, 1)),
            other => prop_assert!(false, "{} evaluated to {:?}", text, other),
        }
    }

    #[test]
    fn parse_inverts_rendering_in_a(a in aelem(6)) {
        let text = a.to_string();
        let value = evaluate(&parse(&text).unwrap(), &EvalOptions::default()).unwrap();
        let back = match value {
            Value::A(b) => b,
            Value::Scalar(s) => AElem::constant(s),
            other => panic!("{text} evaluated to {other:?}"),
        };
        prop_assert_eq!(back, a);
    }
}
