use num_bigint::BigInt;
use proptest::prelude::*;
use zeroset::exactnum::{gcd, rat, Dyadic};
use zeroset::resultant::{bezout_from_adjugate, resultant, sylvester, Determinant};
use zeroset::{ComplexBall, DiscreteRing, GaussianRational, ModInt, Polynomial};

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-6i64..6, 1i64..4, -6i64..6, 1i64..4).prop_map(|(a, b, c, d)| GaussianRational::new(rat(a, b), rat(c, d)))
}

fn roots(max: usize) -> impl Strategy<Value = Vec<GaussianRational>> {
    prop::collection::vec(gaussian(), 1..=max)
}

fn monic(rs: &[GaussianRational]) -> Polynomial<GaussianRational> {
    Polynomial::from_roots(rs, &GaussianRational::one())
}

fn adjugate_identity<R: Determinant + DiscreteRing>(a: &Polynomial<R>, b: &Polynomial<R>) -> Result<(), TestCaseError> {
    let res = resultant(a, b).unwrap();
    let (s, t) = bezout_from_adjugate(a, b).unwrap();
    let lhs = &(&s * a) + &(&t * b);
    prop_assert!((&lhs - &Polynomial::constant(res)).is_zero());
    Ok(())
}

fn int_poly(max: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..10, 2..=max + 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_formula(q in roots(5), r in roots(5)) {
        let expected = q.iter().flat_map(|x| r.iter().map(move |y| x - y)).fold(GaussianRational::one(), |acc, d| &acc * &d);
        prop_assert_eq!(resultant(&monic(&q), &monic(&r)).unwrap(), expected);
    }

    #[test]
    fn adjugate_over_z(a in int_poly(5), b in int_poly(5)) {
        let p = |c: &[i64]| Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect());
        adjugate_identity(&p(&a), &p(&b))?;
    }

    #[test]
    fn adjugate_over_z8(a in int_poly(5), b in int_poly(5)) {
        let p = |c: &[i64]| Polynomial::new(c.iter().map(|&x| ModInt::new(x, 8)).collect());
        adjugate_identity(&p(&a), &p(&b))?;
    }

    #[test]
    fn adjugate_over_gaussian(q in roots(4), r in roots(4), c in gaussian()) {
        adjugate_identity(&monic(&q).scale(&c), &monic(&r))?;
    }

    #[test]
    fn unit_determinant_forces_comaximal_leads(
        m in prop::sample::select(vec![4u64, 6, 8, 9, 12, 16]),
        a in int_poly(4),
        b in int_poly(4),
    ) {
        let p = |c: &[i64]| Polynomial::new(c.iter().map(|&x| ModInt::new(x, m)).collect::<Vec<_>>());
        let (a, b) = (p(&a), p(&b));
        let det = ModInt::determinant(&sylvester(&a, &b).unwrap().matrix);
        if det.inverse().is_some() {
            prop_assert_eq!(gcd(gcd(a.leading().value(), b.leading().value()), m), 1);
        }
    }

    #[test]
    fn ball_resultant_contains_exact(
        q in roots(4),
        r in roots(4),
        shifts in prop::collection::vec((-100i64..100, -100i64..100), 10),
    ) {
        let (a, b) = (monic(&q), monic(&r));
        let exact = resultant(&a, &b).unwrap();
        let radius = Dyadic::pow2(-20);
        let widen = |p: &Polynomial<GaussianRational>, salt: usize| {
            let cs = p.coeffs().iter().enumerate().map(|(k, c)| {
                let (dx, dy) = shifts[(k + salt) % shifts.len()];
                let off = GaussianRational::new(rat(dx, 1 << 28), rat(dy, 1 << 28));
                ComplexBall::from_gaussian(&(c + &off), 128).inflate(&radius)
            });
            Polynomial::new(cs.collect())
        };
        let ball = resultant(&widen(&a, 0), &widen(&b, 5)).unwrap();
        prop_assert!(ball.contains(&exact));
    }
}
