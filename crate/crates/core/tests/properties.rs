//! Algebraic laws checked on generated inputs.

use bspin_core::clifford::{blade_mul, pin_sample, rho, CliffordElement, GaussRat, MAX_DIM};
use bspin_core::dsl::{eval, parse, parse_bytes, render, ExprAst, Func};
use bspin_core::finite::{g_mu2_model, random_element, u_mu2_model, FqActionModel, Fp};
use bspin_core::lefschetz::{cyclotomic, IntPoly, LefschetzClass};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn unit_strategy() -> impl Strategy<Value = LefschetzClass> {
    (any::<bool>(), -4i64..=4, prop::collection::vec((1u64..=12, -2i64..=2), 0..4)).prop_map(|(neg, a, factors)| {
        let mut u = LefschetzClass::l_pow(a);
        for (i, e) in factors {
            u = &u * &LefschetzClass::l_pow_minus_one(i).pow(e).unwrap();
        }
        if neg {
            -u
        } else {
            u
        }
    })
}

fn class_strategy() -> impl Strategy<Value = LefschetzClass> {
    (prop::collection::vec(-4i64..=4, 1..6), unit_strategy())
        .prop_map(|(coeffs, u)| &LefschetzClass::from_poly(IntPoly::from_i64(&coeffs)) * &u)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in class_strategy(), b in class_strategy(), c in class_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LefschetzClass::zero());
        for x in [&a + &b, &a * &b, &a - &c] {
            prop_assert!(x.is_canonical(), "{} is not canonical", x);
        }
    }

    #[test]
    fn canonical_equality_matches_cross_multiplication(a in class_strategy(), b in class_strategy(), u in unit_strategy()) {
        prop_assert_eq!(a == b, a.eq_by_cross_multiplication(&b));
        let same = &(&a * &u) * &u.inv().unwrap();
        prop_assert_eq!(&same, &a);
        prop_assert!(same.eq_by_cross_multiplication(&a));
    }

    #[test]
    fn unit_inverse_round_trip(u in unit_strategy(), k in -3i64..=3) {
        let inv = u.inv().unwrap();
        prop_assert!((&u * &inv).is_one());
        prop_assert_eq!(inv.inv().unwrap(), u.clone());
        prop_assert_eq!(u.pow(k).unwrap().pow(-1).unwrap(), u.pow(-k).unwrap());
    }

    #[test]
    fn specialization_is_a_homomorphism(a in class_strategy(), b in class_strategy(), q in 2u64..=7) {
        prop_assert_eq!((&a * &b).eval_at(q), a.eval_at(q) * b.eval_at(q));
        prop_assert_eq!((&a + &b).eval_at(q), a.eval_at(q) + b.eval_at(q));
    }

    #[test]
    fn cyclotomic_factorization(n in 1u64..=64) {
        let product = (1..=n).filter(|d| n % d == 0).fold(IntPoly::one(), |acc, d| &acc * &cyclotomic(d));
        prop_assert_eq!(product, IntPoly::x_pow_minus_one(n as usize));
    }
}

fn clifford_strategy(n: u32) -> impl Strategy<Value = CliffordElement> {
    prop::collection::vec((0u32..(1 << n), -3i64..=3, -3i64..=3), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(CliffordElement::zero(n), |acc, (b, re, im)| {
            &acc + &CliffordElement::blade(n, b, GaussRat::from_ints(re, im))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn clifford_associativity(
        (a, b, c) in (1u32..=4).prop_flat_map(|n| (clifford_strategy(n), clifford_strategy(n), clifford_strategy(n)))
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn clifford_anti_involution(
        (a, b) in (1u32..=5).prop_flat_map(|n| (clifford_strategy(n), clifford_strategy(n)))
    ) {
        prop_assert_eq!((&a * &b).bar(), &b.bar() * &a.bar());
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
        prop_assert_eq!((&a * &b).epsilon(), &a.epsilon() * &b.epsilon());
        prop_assert_eq!(a.bar().bar(), a.clone());
    }

    #[test]
    /// With `e_i² = -1`, `e_S² = (-1)^{k(k+1)/2}` for `|S| = k`.
    fn blade_products_square_to_signs(s in 0u32..(1 << MAX_DIM.min(10)), t in 0u32..(1 << MAX_DIM.min(10))) {
        let (sign, blade) = blade_mul(s, t);
        prop_assert_eq!(blade, s ^ t);
        prop_assert!(sign == 1 || sign == -1);
        let (ss, sb) = blade_mul(s, s);
        prop_assert_eq!(sb, 0);
        let k = s.count_ones();
        prop_assert_eq!(ss, if (k * (k + 1) / 2) % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn rho_is_multiplicative(seed in any::<u64>(), n in 2usize..=5, ka in 1usize..=3, kb in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let support: Vec<usize> = (1..=n).collect();
        let a = pin_sample(&mut rng, n, &support, ka).unwrap();
        let b = pin_sample(&mut rng, n, &support, kb).unwrap();
        let lhs = rho(&(&a * &b)).unwrap();
        let rhs = &rho(&a).unwrap() * &rho(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn ast_strategy() -> impl Strategy<Value = ExprAst> {
    let leaf = prop_oneof![
        (0u32..50).prop_map(|n| ExprAst::Int(BigInt::from(n))),
        Just(ExprAst::L),
        (1i64..=9).prop_map(|n| ExprAst::Call(Func::BSpin, vec![n])),
        (1i64..=9).prop_map(|n| ExprAst::Call(Func::BDelta, vec![n])),
        (2i64..=8).prop_map(|n| ExprAst::Call(Func::Spin, vec![n])),
        (1i64..=30).prop_map(|n| ExprAst::Call(Func::Cyclo, vec![n])),
        Just(ExprAst::Call(Func::G2, vec![])),
    ];
    leaf.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| ExprAst::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprAst::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprAst::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprAst::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprAst::Div(Box::new(a), Box::new(b))),
            (inner, -3i64..=3).prop_map(|(a, k)| ExprAst::Pow(Box::new(a), k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parser_never_panics_on_bytes(input in prop::collection::vec(any::<u8>(), 0..4096)) {
        let _ = parse_bytes(&input);
    }

    #[test]
    fn parser_never_panics_on_grammar_soup(input in "[L0-9+*/^(), GSpinBDltacyo-]{0,512}") {
        let _ = parse(&input);
    }

    #[test]
    fn syntax_trees_print_and_reparse(ast in ast_strategy()) {
        prop_assert_eq!(parse(&ast.to_string()).unwrap(), ast);
    }

    #[test]
    fn rendering_is_a_fixpoint(ast in ast_strategy()) {
        if let Ok(value) = eval(&ast) {
            let text = render(&value);
            let again = eval(&parse(&text).unwrap()).unwrap();
            prop_assert_eq!(render(&again), text);
            prop_assert_eq!(again, value);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finite_actions_compose(seed in any::<u64>(), x in 0u32..15625, q in prop_oneof![Just(5u32), Just(13u32)]) {
        let f = Fp::new(q as u64).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for model in [g_mu2_model(f), u_mu2_model(f)] {
            let x = x % model.carrier_size() as u32;
            let g = random_element(&model, &mut rng, 6);
            let h = random_element(&model, &mut rng, 6);
            prop_assert_eq!(model.apply(&model.compose(&g, &h), x), model.apply(&g, model.apply(&h, x)));
            prop_assert_eq!(model.apply(&model.identity(), x), x);
        }
    }
}
