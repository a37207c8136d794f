//! Cross-module invariants, checked exhaustively at small sizes and by
//! proptest beyond them.

use std::collections::{BTreeSet, HashSet};

use num_integer::gcd;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use ratcount::factor_bijections::*;
use ratcount::numerics::*;
use ratcount::oracles::*;
use ratcount::pairings::*;
use ratcount::sequences::*;

fn q(p: u64, d: u64) -> PositiveRational {
    PositiveRational::from_u64(p, d).unwrap()
}

fn n(x: u64) -> Natural {
    Natural::from(x)
}

fn reduced(max_p: u64, max_q: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=max_p).flat_map(move |p| {
        (1..=max_q)
            .filter(move |&d| gcd(p, d) == 1)
            .map(move |d| (p, d))
    })
}

/// Counts quotient sequences (a0 >= 0, aj >= 1, total <= max_sum) whose
/// trailing-1 continued fraction equals a/b. Evaluation bounds prune the
/// search: with a0..aj fixed and the tail y >= 1 free, the value lies between
/// [a0; ..., aj, 1] and [a0; ..., aj].
fn cf_representation_count(a: i128, b: i128, max_sum: i128) -> u64 {
    // Convergent recurrences: h_j = a_j h_{j-1} + h_{j-2}.
    fn walk(a: i128, b: i128, left: i128, h: (i128, i128), k: (i128, i128), first: bool) -> u64 {
        let mut count = 0;
        let start = if first { 0 } else { 1 };
        for aj in start..=left {
            let (h1, k1) = (aj * h.0 + h.1, aj * k.0 + k.1);
            // value with the closing 1/1: (h1 + h.0) / (k1 + k.0)
            let (hv, kv) = (h1 + h.0, k1 + k.0);
            if hv * b == a * kv {
                count += 1;
            }
            // tail y in [1, inf): value between hv/kv and h1/k1
            let lo_ok = |num: i128, den: i128| den == 0 || num * b >= a * den;
            let hi_ok = |num: i128, den: i128| num * b <= a * den;
            let inside = (lo_ok(hv, kv) && (k1 == 0 || hi_ok(h1, k1)))
                || (hi_ok(hv, kv) && (k1 == 0 || lo_ok(h1, k1)));
            if inside && left - aj >= 1 {
                count += walk(a, b, left - aj, (h1, h.0), (k1, k.0), false);
            }
        }
        count
    }
    walk(a, b, max_sum, (1, 0), (0, 1), true)
}

#[test]
fn continued_fraction_representation_is_unique() {
    for (p, d) in reduced(30, 30) {
        let count = cf_representation_count(p as i128, d as i128, (p + d) as i128);
        assert_eq!(count, 1, "{p}/{d}");
        let cf = cf_expand(&q(p, d));
        let total: u64 = cf.quotients().iter().map(|a| a.to_u64().unwrap()).sum();
        assert!(total <= p + d);
    }
}

#[test]
fn representation_oracle_sees_both_regular_forms() {
    // Without the closing 1/1, 3/2 = [1; 2] = [1; 1, 1]; with it only (1, 1)
    // remains, so the oracle finds exactly one.
    assert_eq!(cf_representation_count(3, 2, 10), 1);
    assert_eq!(
        cf_eval(&ContinuedFraction::from_u64s(&[1, 1]).unwrap()),
        q(3, 2)
    );
}

#[test]
fn factor_fold_round_trips() {
    for codec in IntFoldCodec::ALL {
        for k in 1..=100_000u64 {
            let r = factor_unfold(&n(k), codec).unwrap();
            assert_eq!(factor_fold(&r, codec).unwrap(), n(k), "{codec} {k}");
        }
        for (p, d) in reduced(100, 100) {
            let r = q(p, d);
            let k = factor_fold(&r, codec).unwrap();
            assert_eq!(factor_unfold(&k, codec).unwrap(), r);
        }
    }
}

#[test]
fn polynomial_route_agrees_with_factor_route() {
    for codec in IntFoldCodec::ALL {
        for (p, d) in reduced(100, 100) {
            let r = q(p, d);
            assert_eq!(
                poly_route_fold(&r, codec).unwrap(),
                factor_fold(&r, codec).unwrap(),
                "{codec} {r}"
            );
        }
    }
}

#[test]
fn cf_code_round_trips_and_is_injective() {
    for k in 1..=100_000u64 {
        assert_eq!(cf_encode(&cf_decode(&n(k)).unwrap()).unwrap(), n(k));
    }
    for (p, d) in reduced(100, 100) {
        let r = q(p, d);
        assert_eq!(cf_decode(&cf_encode(&r).unwrap()).unwrap(), r);
    }
    let values: HashSet<_> = (1..=1u64 << 14)
        .map(|k| cf_decode(&n(k)).unwrap())
        .collect();
    assert_eq!(values.len(), 1 << 14);
}

/// The displayed continued fraction 1/(a1 + 1/(... + 1/(an + 1/1))).
fn rho(seq: &[u64]) -> PositiveRational {
    let mut quotients = vec![0];
    quotients.extend_from_slice(seq);
    cf_eval(&ContinuedFraction::from_u64s(&quotients).unwrap())
}

#[test]
fn ting_matches_set_construction() {
    for k in 1..=1u64 << 12 {
        let sets = ting_sets(&n(k)).unwrap();
        let partial: BTreeSet<u64> = sets
            .seq_s
            .iter()
            .scan(0, |acc, &a| {
                *acc += a;
                Some(*acc)
            })
            .collect();
        assert_eq!(partial, sets.set_m);
        let rho = rho(&sets.seq_s);
        // gamma = 1/rho - 1
        let gamma = rho.recip().checked_sub(&PositiveRational::one());
        let expected = ting_gamma(&n(k)).unwrap();
        assert_eq!(gamma.as_ref(), Some(&expected), "k = {k}");
    }
}

#[test]
fn ting_sets_enumerate_subsets() {
    for size in 1..=12u32 {
        let family: HashSet<BTreeSet<u64>> = (1..1u64 << size)
            .map(|j| ting_sets(&n(j)).unwrap().set_m)
            .collect();
        assert_eq!(family.len(), (1usize << size) - 1);
        let all_subsets: HashSet<BTreeSet<u64>> = (1..1u64 << size)
            .map(|mask| {
                (1..=size as u64)
                    .filter(|i| mask >> (i - 1) & 1 == 1)
                    .collect()
            })
            .collect();
        assert_eq!(family, all_subsets, "size {size}");
    }
}

#[test]
fn ting_is_a_bijection_prefix() {
    let values: HashSet<_> = (1..=1u64 << 14)
        .map(|k| ting_gamma(&n(k)).unwrap())
        .collect();
    assert_eq!(values.len(), 1 << 14);
    for (p, d) in reduced(25, 25) {
        let r = q(p, d);
        assert_eq!(ting_gamma(&ting_rank(&r).unwrap()).unwrap(), r);
    }
}

#[test]
fn hyperbinary_matches_brute_force() {
    for x in 0..=5000u64 {
        assert_eq!(hyperbinary(&n(x)), n(hyperbinary_brute(x).unwrap()), "{x}");
    }
}

#[test]
fn calkin_wilf_invariants() {
    let mut seen = HashSet::new();
    for k in 1..=100_000u64 {
        let (prev, cur) = (hyperbinary(&n(k - 1)), hyperbinary(&n(k)));
        assert_eq!(num_integer::Integer::gcd(&prev, &cur), n(1));
        let r = calkin_wilf(&n(k)).unwrap();
        assert_eq!(calkin_wilf_rank(&r).unwrap(), n(k));
        assert!(seen.insert(r));
    }
}

#[test]
fn lauwerier_is_filtered_l2() {
    let filtered: Vec<_> = L2Iter::new()
        .filter(|p| gcd(p.n, p.m) == 1)
        .take(10_000)
        .map(|p| q(p.n, p.m))
        .collect();
    for (i, r) in filtered.iter().enumerate() {
        assert_eq!(
            &lauwerier_unrank(&n(i as u64 + 1)).unwrap(),
            r,
            "position {}",
            i + 1
        );
    }
}

#[test]
fn engel_uniqueness_oracle() {
    let mut out_of_bounds = 0;
    for (p, d) in reduced(29, 30).filter(|&(p, d)| p < d) {
        let r = q(p, d);
        let e = engel_expand(&r).unwrap();
        let fits = e.denoms().len() <= 4 && e.denoms().iter().all(|x| *x <= n(30));
        let expected = u64::from(fits);
        out_of_bounds += 1 - expected;
        assert_eq!(engel_unique_brute(&r, 4, 30).unwrap(), expected, "{p}/{d}");
        let len = e.denoms().len() as u32;
        let max_den = e.denoms().iter().max().unwrap().to_u64().unwrap();
        assert_eq!(engel_unique_brute(&r, len, max_den).unwrap(), 1, "{p}/{d}");
    }
    // 6/7 = (2, 2, 3, 4, 7) is the first reduced fraction needing five terms.
    assert_eq!(out_of_bounds, 56);
}

#[test]
fn cohen_bijection() {
    for k in 1..=100_000u64 {
        assert_eq!(cohen_encode(&cohen_decode(&n(k)).unwrap()).unwrap(), n(k));
    }
    for (p, d) in reduced(40, 40) {
        let r = q(p, d);
        assert_eq!(cohen_decode(&cohen_encode(&r).unwrap()).unwrap(), r);
    }
}

#[test]
fn grant_priest_is_onto() {
    for (p, d) in reduced(50, 50) {
        let r = q(p, d);
        assert_eq!(
            grant_priest(&grant_priest_preimage(&r).unwrap()).unwrap(),
            r
        );
    }
}

#[test]
fn ginsberg_is_injective() {
    let mut seen = HashSet::new();
    let mut values = vec![SignedRational::zero()];
    for (a, b) in reduced(60, 60) {
        values.push(SignedRational::positive(q(a, b)));
        values.push(SignedRational::negative(q(a, b)));
    }
    for v in values {
        let code = ginsberg_encode(&v);
        assert!(seen.insert(code.clone()), "{v}");
        assert_eq!(ginsberg_decode(&code).unwrap(), v);
    }
}

#[test]
fn pairings_are_injective() {
    for s in PairingScheme::ALL {
        let mut seen = HashSet::new();
        for a in 1..=200 {
            for b in 1..=200 {
                let code = encode_pair(s, LatticePair::new(a, b).unwrap()).unwrap();
                assert!(seen.insert(code), "{s} ({a},{b})");
            }
        }
    }
}

fn small_rational() -> impl Strategy<Value = PositiveRational> {
    (1u64..=1000, 1u64..=1000).prop_map(|(p, d)| q(p, d))
}

proptest! {
    #[test]
    fn polynomial_is_a_homomorphism(r in small_rational(), s in small_rational()) {
        let lhs = to_polynomial(&(&r * &s)).unwrap();
        let rhs = &to_polynomial(&r).unwrap() + &to_polynomial(&s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn polynomial_round_trips(r in small_rational()) {
        prop_assert_eq!(from_polynomial(&to_polynomial(&r).unwrap()).unwrap(), r);
    }

    #[test]
    fn fold_round_trips(a in any::<i64>()) {
        for codec in IntFoldCodec::ALL {
            let alpha = SignedInt::from(a);
            prop_assert_eq!(unfold_int(codec, &fold_int(codec, &alpha)), alpha);
        }
    }

    #[test]
    fn cantor_and_box_l_invert(k in 1u64..u64::MAX / 2) {
        for s in [PairingScheme::Cantor, PairingScheme::BoxL, PairingScheme::OddPow2] {
            let pair = decode_pair(s, &n(k)).unwrap();
            prop_assert_eq!(encode_pair(s, pair).unwrap(), n(k));
        }
    }

    #[test]
    fn calkin_wilf_round_trips_big_indices(bits in prop::collection::vec(any::<bool>(), 1..300)) {
        let mut k = n(1);
        for b in bits {
            k = (k << 1u32) + u32::from(b);
        }
        let r = calkin_wilf(&k).unwrap();
        prop_assert_eq!(calkin_wilf_rank(&r).unwrap(), k.clone());
        let t = ting_gamma(&k).unwrap();
        prop_assert_eq!(ting_rank(&t).unwrap(), k);
    }

    #[test]
    fn engel_expansion_inverts(p in 1u64..10_000, extra in 1u64..10_000) {
        let r = q(p, p + extra);
        let e = engel_expand(&r).unwrap();
        prop_assert!(e.denoms().windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(engel_eval(&e), r);
    }
}
