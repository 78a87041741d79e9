//! Cross-module invariants: evaluation homomorphisms between the symbolic
//! and numeric paths, scale covariance of verdicts, normalization
//! bookkeeping identities, and the limit schedules of the extremal lists.

mod common;

use newtonineq::esf::elem_sym_all;
use newtonineq::extremal::{
    imaginary_pairs_plus_unit, odd_chain_equality_list, random_list, Profile,
};
use newtonineq::ineq::{check_combined_chain, check_t14, in_range_indices, Family};
use newtonineq::scalar::{binomial, rat, rat_int, Rational};
use newtonineq::sym::SymEngine;
use newtonineq::SelfConjugateList;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_point(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| rat(rng.gen_range(0..9), rng.gen_range(1..4)))
        .collect()
}

#[test]
fn gap_poly_evaluation_matches_numeric_products() {
    let engine = SymEngine::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (m, s) in [
        (1usize, 1usize),
        (2, 0),
        (1, 2),
        (2, 1),
        (3, 0),
        (2, 2),
        (3, 1),
        (1, 5),
        (4, 0),
        (2, 4),
    ] {
        let n = 2 * m + s;
        for k in 1..n {
            for l in k + 1..n {
                if k % 2 == l % 2 {
                    continue;
                }
                let f = engine.gap_poly(m, s, k, l, 1).unwrap();
                for _ in 0..4 {
                    let point = random_point(&mut rng, 2 * m + s);
                    let pairs = (0..m)
                        .map(|i| (point[i].clone(), point[m + i].clone()))
                        .collect();
                    let reals = point[2 * m..].to_vec();
                    let list = SelfConjugateList::new(pairs, reals).unwrap();
                    let seq = elem_sym_all(&list);
                    let e = |i: isize| seq.e_numeric(i).unwrap();
                    let (ik, il) = (k as isize, l as isize);
                    let expected = e(ik) * e(il) - e(ik - 1) * e(il + 1);
                    assert_eq!(f.eval(&point), expected, "m={m} s={s} k={k} l={l}");
                }
            }
        }
    }
}

#[test]
fn theta_lower_bound_holds_numerically_beyond_symbolic_sizes() {
    // Independent numeric route: evaluate the subset sum
    // Θ = Σ_r 4^r Σ_{|S|=r} (∏_S a²b²) e_{k−r}(V_{U\S})² directly from
    // rational entries and check e_{2k}² − e_{2k−1}e_{2k+1} ≥ Θ on pair
    // lists larger than the symbolic expansion bound.
    use itertools::Itertools;
    let numeric_esf = |vals: &[Rational], upto: usize| -> Vec<Rational> {
        let mut e = vec![rat_int(1)];
        for v in vals {
            if e.len() <= upto {
                e.push(Rational::zero());
            }
            for i in (1..e.len()).rev() {
                let add = e[i - 1].clone() * v;
                e[i] += add;
            }
        }
        while e.len() <= upto {
            e.push(Rational::zero());
        }
        e
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x7E7A);
    for m in [6usize, 7] {
        for _ in 0..6 {
            let pairs: Vec<(Rational, Rational)> = (0..m)
                .map(|_| {
                    (
                        rat(rng.gen_range(0..6), rng.gen_range(1..3)),
                        rat(rng.gen_range(0..6), 1),
                    )
                })
                .collect();
            let list = SelfConjugateList::new(pairs.clone(), vec![]).unwrap();
            let seq = elem_sym_all(&list);
            for k in 1..m {
                let mut theta = Rational::zero();
                for r in 0..k {
                    let weight = rat_int(1i64 << (2 * r));
                    for subset in (0..m).combinations(r) {
                        let mut prod = rat_int(1);
                        for &i in &subset {
                            let (a, b) = &pairs[i];
                            prod *= a * a * b * b;
                        }
                        let v_entries: Vec<Rational> = (0..m)
                            .filter(|i| !subset.contains(i))
                            .map(|i| {
                                let (a, b) = &pairs[i];
                                a * a - b * b
                            })
                            .collect();
                        let ev = numeric_esf(&v_entries, k - r);
                        theta += &weight * &prod * &ev[k - r] * &ev[k - r];
                    }
                }
                let ik = 2 * k as isize;
                let gap = seq.product(&[ik, ik]).unwrap() - seq.product(&[ik - 1, ik + 1]).unwrap();
                assert!(
                    gap >= theta,
                    "theta bound violated at m={m} k={k}: gap {gap} < theta {theta}"
                );
                assert!(!theta.is_negative());
            }
        }
    }
}

#[test]
fn verdicts_are_scale_covariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for i in 0..60u64 {
        let n = (i as usize % 9) + 3;
        let list = random_list(n, i, Profile::UniformBox, None);
        let c = rat(rng.gen_range(1..7), rng.gen_range(1..5));
        let scaled = list.scale(&c);
        let seq = elem_sym_all(&list);
        let seq_c = elem_sym_all(&scaled);
        for family in [Family::T14I, Family::T14II, Family::T14III, Family::T14IV] {
            for (k, l) in in_range_indices(family, n) {
                let base = check_t14(&seq, family, k, l).unwrap();
                let scal = check_t14(&seq_c, family, k, l).unwrap();
                assert_eq!(base.holds, scal.holds);
                // Margins scale by c^(sum of the two product indices).
                let degree = match family {
                    Family::T14I => 2 * k + 2 * l,
                    Family::T14II => 2 * k + 2 * l + 2,
                    Family::T14III => 2 * k - 1 + 2 * l,
                    Family::T14IV => 2 * k + 2 * l + 1,
                    _ => unreachable!(),
                };
                assert_eq!(
                    scal.margin,
                    base.margin.clone() * c.pow(degree as i32),
                    "family {family} k={k} l={l}"
                );
            }
        }
        if list.is_pair_only() {
            for (k, l) in in_range_indices(Family::T14V, n) {
                let base = check_t14(&seq, Family::T14V, k, l).unwrap();
                let scal = check_t14(&seq_c, Family::T14V, k, l).unwrap();
                assert_eq!(base.holds, scal.holds);
                let degree = 2 * (2 * k + 2 * l);
                assert_eq!(scal.margin, base.margin.clone() * c.pow(degree as i32));
            }
        }
    }
}

#[test]
fn even_and_odd_chain_verdicts_match_direct_p_comparison() {
    // Independent route: the chain families are exactly the statements
    // P_{2k}P_{2l} ≥ P_{2k−2}P_{2l+2} and the odd analogue, so the
    // product-form margins must agree in sign with a direct comparison of
    // normalized values.
    for i in 0..200u64 {
        let n = (i as usize % 11) + 4;
        let list = random_list(n, 0x9C ^ i, Profile::ALL[(i % 3) as usize], None);
        let seq = elem_sym_all(&list);
        let p = |j: usize| seq.norm_p_numeric(j).unwrap();
        for (k, l) in in_range_indices(Family::T14I, n) {
            let direct = p(2 * k) * p(2 * l) - p(2 * k - 2) * p(2 * l + 2);
            let report = check_t14(&seq, Family::T14I, k, l).unwrap();
            assert_eq!(
                report.holds,
                !direct.is_negative(),
                "i on {}",
                list.to_json()
            );
            assert!(!direct.is_negative());
        }
        for (k, l) in in_range_indices(Family::T14II, n) {
            let direct = p(2 * k + 1) * p(2 * l + 1) - p(2 * k - 1) * p(2 * l + 3);
            let report = check_t14(&seq, Family::T14II, k, l).unwrap();
            assert_eq!(
                report.holds,
                !direct.is_negative(),
                "ii on {}",
                list.to_json()
            );
            assert!(!direct.is_negative());
        }
    }
}

#[test]
fn family_i_constant_matches_p_normalization() {
    // (l+1)(M−k+1)/(k(M−l)) with M = ⌊n/2⌋ is exactly the factor that
    // turns the e-product bound into P_{2k}P_{2l} ≥ P_{2k−2}P_{2l+2}:
    // cross-multiplied binomial identity, checked for every n ≤ 20.
    for n in 4..=20usize {
        let m = n / 2;
        for (k, l) in in_range_indices(Family::T14I, n) {
            let constant = Rational::new(((l + 1) * (m - k + 1)).into(), (k * (m - l)).into());
            let lhs =
                constant * binomial(m as u64, k as i64 - 1) * binomial(m as u64, l as i64 + 1);
            let rhs = binomial(m as u64, k as i64) * binomial(m as u64, l as i64);
            assert_eq!(lhs, rhs, "n={n} k={k} l={l}");
        }
    }
}

#[test]
fn even_chain_bound_implies_unit_constant_bound() {
    // The P-normalized bound is the stronger statement: whenever it holds
    // the plain product inequality e_{2k}e_{2l} ≥ e_{2k−2}e_{2l+2} must
    // hold too (the constant is ≥ 1 in range).
    for i in 0..300u64 {
        let n = (i as usize % 10) + 4;
        let list = random_list(n, 0xBEEF ^ i, Profile::ALL[(i % 3) as usize], None);
        let seq = elem_sym_all(&list);
        for (k, l) in in_range_indices(Family::T14I, n) {
            let strong = check_t14(&seq, Family::T14I, k, l).unwrap();
            assert!(strong.constant >= rat_int(1));
            if strong.holds {
                let weak = &strong.lhs - &strong.rhs;
                assert!(
                    !weak.is_negative(),
                    "hierarchy broken on {}",
                    list.to_json()
                );
            }
        }
    }
}

#[test]
fn p_ratio_identity_and_chain_on_random_odd_lists() {
    // For odd n: P_{2k−1}P_{2k+2}/(P_{2k−2}P_{2k+3}) equals
    // e_{2k−1}e_{2k+2}/(e_{2k−2}e_{2k+3}), cross-multiplied exactly, and
    // both links of the combined chain hold.
    let mut count = 0u32;
    for i in 0..100u64 {
        let n = [5usize, 7, 9][(i % 3) as usize];
        let list = random_list(n, 0x0DD ^ i, Profile::ALL[(i % 3) as usize], None);
        let seq = elem_sym_all(&list);
        for k in 1..=(n - 3) / 2 {
            let p = |j: usize| seq.norm_p_numeric(j).unwrap();
            let e = |j: isize| seq.e_numeric(j).unwrap();
            let ik = k as isize;
            assert_eq!(
                p(2 * k - 1) * p(2 * k + 2) * e(2 * ik - 2) * e(2 * ik + 3),
                p(2 * k - 2) * p(2 * k + 3) * e(2 * ik - 1) * e(2 * ik + 2),
                "identity failed on {}",
                list.to_json()
            );
            let chain = check_combined_chain(&seq, k).unwrap();
            assert!(chain.holds, "chain failed on {}", list.to_json());
            count += 1;
        }
    }
    assert!(count >= 100);
}

#[test]
fn eps_schedule_ratio_collapses_monotonically() {
    // Along eps = 2^{-j} the (even, even, h = 1) product ratio shrinks
    // monotonically to zero: each step divides the cross-multiplied
    // margin by an exact factor of 4.
    for m in [2usize, 4, 7] {
        for k in 1..=m {
            let mut last: Option<Rational> = None;
            for j in 1..=20 {
                let eps = Rational::new(1.into(), (1i64 << j).into());
                let list = imaginary_pairs_plus_unit(m, &eps).unwrap();
                let seq = elem_sym_all(&list);
                let e = |i: isize| seq.e_numeric(i).unwrap();
                let ik = 2 * k as isize;
                // ratio = lhs/rhs with rhs > 0 on this family
                let lhs = e(ik) * e(ik);
                let rhs = e(ik - 1) * e(ik + 1);
                assert!(rhs.is_positive());
                let ratio = lhs / rhs;
                if let Some(prev) = &last {
                    assert_eq!(&ratio * rat_int(4), prev.clone(), "m={m} k={k} j={j}");
                }
                last = Some(ratio);
            }
            assert!(last.unwrap() < rat(1, 1000));
        }
    }
}

#[test]
fn tau_schedules_drive_mixed_parity_ratios_to_one() {
    // As tau → 0 the ratio e_{2k'−1}e_{2l'}/(e_{2k'−2}e_{2l'+1}) tends to
    // 1, and as tau → ∞ so does e_{2k'}e_{2l'+1}/(e_{2k'−1}e_{2l'+2}).
    // The formal t cancels (one odd factor in numerator and denominator),
    // so the ratios are exact rationals; |ratio − 1| must shrink
    // monotonically along the geometric schedules.
    for m in [3usize, 5, 8] {
        for kp in 1..m {
            for lp in kp..m {
                // tau = 2^{-j} → 0, mixed-parity shift-down ratio.
                let mut last_gap: Option<Rational> = None;
                for j in 1..=15 {
                    let tau = Rational::new(1.into(), (1i64 << j).into());
                    let seq = elem_sym_all(&odd_chain_equality_list(m, &tau).unwrap());
                    let (a, b) = (2 * kp as isize - 1, 2 * lp as isize);
                    let (c, d) = (2 * kp as isize - 2, 2 * lp as isize + 1);
                    // ratio = e_a e_b / (e_c e_d) = (e_a e_d)·e_b / (e_c·e_d²)
                    let denom = seq.product(&[c]).unwrap() * seq.product(&[d, d]).unwrap();
                    assert!(denom.is_positive());
                    let ratio = seq.product(&[a, d]).unwrap() * seq.product(&[b]).unwrap() / denom;
                    let gap = (ratio - rat_int(1)).abs();
                    if let Some(prev) = &last_gap {
                        assert!(&gap <= prev, "m={m} k'={kp} l'={lp} j={j}");
                    }
                    last_gap = Some(gap);
                }
                assert!(last_gap.unwrap() < rat(1, 100), "m={m} k'={kp} l'={lp}");

                // tau = 2^{j} → ∞, mixed-parity shift-up ratio.
                let mut last_gap: Option<Rational> = None;
                for j in 1..=15 {
                    let tau = Rational::from_integer((1i64 << j).into());
                    let seq = elem_sym_all(&odd_chain_equality_list(m, &tau).unwrap());
                    let (a, b) = (2 * kp as isize, 2 * lp as isize + 1);
                    let (c, d) = (2 * kp as isize - 1, 2 * lp as isize + 2);
                    // ratio = e_a e_b / (e_c e_d) = e_a·(e_b e_c) / (e_c²·e_d)
                    let denom = seq.product(&[c, c]).unwrap() * seq.product(&[d]).unwrap();
                    assert!(denom.is_positive());
                    let ratio = seq.product(&[a]).unwrap() * seq.product(&[b, c]).unwrap() / denom;
                    let gap = (ratio - rat_int(1)).abs();
                    if let Some(prev) = &last_gap {
                        assert!(&gap <= prev, "m={m} k'={kp} l'={lp} j={j}");
                    }
                    last_gap = Some(gap);
                }
                assert!(last_gap.unwrap() < rat(1, 100), "m={m} k'={kp} l'={lp}");
            }
        }
    }
}

#[test]
fn unpaired_real_list_gives_mixed_parity_equality() {
    // On the eps-list the mixed-parity family is an exact equality for
    // every eps, so margin/product is identically zero along the
    // shrinking schedule.
    for m in [2usize, 5, 9] {
        for j in 1..=12 {
            let eps = Rational::new(1.into(), (1i64 << j).into());
            let seq = elem_sym_all(&imaginary_pairs_plus_unit(m, &eps).unwrap());
            for (k, l) in in_range_indices(Family::T14III, 2 * m + 1) {
                let r = check_t14(&seq, Family::T14III, k, l).unwrap();
                assert!(r.holds);
                assert!(r.margin.is_zero(), "m={m} j={j} k={k} l={l}");
            }
        }
    }
}

#[test]
fn conjugate_pair_merge_matches_complex_expansion() {
    // Appending a pair via the three-term step equals appending the two
    // conjugate roots one at a time in complex-rational arithmetic.
    for i in 0..50u64 {
        let list = random_list((i as usize % 6) + 2, 0xFACE ^ i, Profile::UniformBox, None);
        let expected = common::brute_force_esf(&list);
        assert_eq!(elem_sym_all(&list).raw(), &expected[..]);
    }
}
