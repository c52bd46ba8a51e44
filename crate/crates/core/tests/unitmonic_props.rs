use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zeroset::exactnum::gcd;
use zeroset::unitmonic::{
    factor_unit_monic, factor_unit_monic_random, factor_unit_monic_with, is_unit_poly, uniqueness_check, Elimination,
};
use zeroset::{ModInt, Polynomial};

fn radical(m: u64) -> u64 {
    (2..=m).filter(|p| m % p == 0 && (2..*p).all(|d| p % d != 0)).product()
}

fn units(m: u64) -> Vec<i64> {
    (1..m as i64).filter(|u| gcd(*u as u64, m) == 1).collect()
}

fn poly(cs: Vec<i64>, m: u64) -> Polynomial<ModInt> {
    Polynomial::new(cs.into_iter().map(|c| ModInt::new(c, m)).collect())
}

/// `(p, m)` with a unit at index `m` and nilpotent coefficients above it.
fn eligible() -> impl Strategy<Value = (Polynomial<ModInt>, usize)> {
    (prop::sample::select(vec![8u64, 9, 16]), 0usize..=8)
        .prop_flat_map(|(modulus, deg)| (Just(modulus), Just(deg), 0..=deg))
        .prop_flat_map(|(modulus, deg, m)| {
            let r = radical(modulus) as i64;
            (
                Just(modulus),
                Just(m),
                prop::collection::vec(0..modulus as i64, m),
                prop::sample::select(units(modulus)),
                prop::collection::vec(0..modulus as i64 / r, deg - m),
            )
        })
        .prop_map(|(modulus, m, low, u, high)| {
            let r = radical(modulus) as i64;
            let mut cs = low;
            cs.push(u);
            cs.extend(high.into_iter().map(|h| h * r));
            (poly(cs, modulus), m)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn roundtrip_and_order_independence((p, m) in eligible(), seed in any::<u64>()) {
        let f = factor_unit_monic(&p, m).unwrap();
        prop_assert!(f.verify(&p));
        prop_assert_eq!(f.monic.formal_degree(), m);
        prop_assert!(is_unit_poly(&f.unit).is_some());
        for order in [Elimination::HighestFirst, Elimination::LowestFirst] {
            prop_assert!(uniqueness_check(&f, &factor_unit_monic_with(&p, m, order).unwrap()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert!(uniqueness_check(&f, &factor_unit_monic_random(&p, m, &mut rng).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn premultiplied_unit_is_absorbed(
        (p, m) in eligible(),
        u0 in 0usize..64,
        tail in prop::collection::vec(0i64..16, 0..3),
    ) {
        let modulus = p.coeff(0).modulus();
        let us = units(modulus);
        let r = radical(modulus) as i64;
        let mut cs = vec![us[u0 % us.len()]];
        cs.extend(tail.iter().map(|c| c * r));
        let u = poly(cs, modulus);
        let f = factor_unit_monic(&p, m).unwrap();
        let g = factor_unit_monic(&(&u * &p), m).unwrap();
        prop_assert!(g.monic.eq_normalized(&f.monic));
        prop_assert!(g.unit.eq_normalized(&(&u * &f.unit)));
    }
}

/// Inverse search over Z_8, fixing one coefficient of the candidate at a
/// time and pruning as soon as a product coefficient is wrong.
fn search_inverse(p: &[u64], max_len: usize) -> bool {
    fn product_coeff(p: &[u64], q: &[u64], k: usize) -> u64 {
        (0..=k).filter(|&i| i < p.len() && k - i < q.len()).map(|i| p[i] * q[k - i]).sum::<u64>() % 8
    }
    fn go(p: &[u64], q: &mut Vec<u64>, max_len: usize) -> bool {
        let k = q.len();
        if k == max_len {
            return (0..p.len() + max_len).all(|j| product_coeff(p, q, j) == u64::from(j == 0));
        }
        for c in 0..8 {
            q.push(c);
            if product_coeff(p, q, k) == u64::from(k == 0) && go(p, q, max_len) {
                return true;
            }
            q.pop();
        }
        false
    }
    go(p, &mut Vec::new(), max_len)
}

#[test]
fn unit_recognition_matches_inverse_search_z8() {
    for code in 0..8u64.pow(4) {
        let cs: Vec<u64> = (0..4).map(|i| (code / 8u64.pow(i)) % 8).collect();
        let p = poly(cs.iter().map(|&c| c as i64).collect(), 8);
        assert_eq!(is_unit_poly(&p).is_some(), search_inverse(&cs, 10), "{p}");
    }
}

#[test]
fn z8_pair_has_no_common_monic_linear_factor() {
    let (a, b) = (poly(vec![4, 0, 1], 8), poly(vec![0, 4, 1], 8));
    for c in 0..8 {
        let d = poly(vec![-c, 1], 8);
        let divides = |p: &Polynomial<ModInt>| d.divides(p) == Some(true);
        assert!(!(divides(&a) && divides(&b)), "X - {c} divides both");
    }
    assert_eq!(poly(vec![-2, 1], 8).divides(&a), Some(true));
}
