use ftl::family::{jumping_numbers_sum, tau_power, tau_sum, Level, SigmaSet};
use ftl::geometry::rational::int;
use ftl::geometry::{
    dominates, format_rational, hull_normalize, min_max_ratio, parse_rational, rat, staircase_antichain, Extended,
    Rational, StaircaseMode, StaircaseRegion,
};
use ftl::minors::{gamma, preset_generic, MinorShape};
use ftl::monomial::{integral_closure, monomial_family, nu_e, nu_e_table, MonomialIdeal};
use proptest::prelude::*;

fn exponent_rows(n: usize, rows: std::ops::RangeInclusive<usize>, max: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max, n), rows)
}

fn monomial_ideal(n: usize, max: u32) -> impl Strategy<Value = MonomialIdeal> {
    exponent_rows(n, 1..=3, max).prop_map(move |gens| MonomialIdeal::new(n, gens).unwrap())
}

fn proper_ideal(n: usize, max: u32) -> impl Strategy<Value = MonomialIdeal> {
    monomial_ideal(n, max).prop_filter("proper", |i| !i.is_unit())
}

fn lambda() -> impl Strategy<Value = Rational> {
    (0i64..=40, 1i64..=8).prop_map(|(a, b)| rat(a, b))
}

fn rationals(points: &[Vec<u32>]) -> Vec<Vec<Rational>> {
    points.iter().map(|p| p.iter().map(|&x| int(x as i64)).collect()).collect()
}

fn is_antichain(vectors: &[Vec<u32>]) -> bool {
    vectors.iter().enumerate().all(|(i, a)| vectors.iter().enumerate().all(|(j, b)| i == j || !dominates(b, a)))
}

/// Every monomial in the box `[0, bound]^n`.
fn monomials(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=bound).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn divides(g: &[u32], m: &[u32]) -> bool {
    g.iter().zip(m).all(|(a, b)| a <= b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_literals_round_trip(a in -500i64..500, b in 1i64..500) {
        let r = rat(a, b);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn min_max_ratio_on_segments_matches_a_grid(
        a in prop::collection::vec(0u32..=5, 2),
        b in prop::collection::vec(0u32..=5, 2),
        d in prop::collection::vec(1i64..=5, 2),
    ) {
        let polytope = hull_normalize(&rationals(&[a.clone(), b.clone()])).unwrap();
        let weights: Vec<Rational> = d.iter().map(|&x| int(x)).collect();
        // the optimum sits at an endpoint or a crossing with denominator <= 50
        let mut best: Option<Rational> = None;
        for den in 1..=64i64 {
            for num in 0..=den {
                let t = rat(num, den);
                let value = (0..2)
                    .map(|k| {
                        let x = int(a[k] as i64) + &t * int(b[k] as i64 - a[k] as i64);
                        x / &weights[k]
                    })
                    .max()
                    .unwrap();
                if best.as_ref().is_none_or(|b| value < *b) {
                    best = Some(value);
                }
            }
        }
        prop_assert_eq!(min_max_ratio(&polytope, &weights).unwrap(), Extended::Finite(best.unwrap()));
    }

    #[test]
    fn min_max_ratio_is_homogeneous(
        points in exponent_rows(3, 1..=4, 6),
        d in prop::collection::vec(1i64..=6, 3),
        c in 1i64..=5,
    ) {
        let polytope = hull_normalize(&rationals(&points)).unwrap();
        let weights: Vec<Rational> = d.iter().map(|&x| int(x)).collect();
        let scaled_weights: Vec<Rational> = weights.iter().map(|w| w * int(c)).collect();
        let base = min_max_ratio(&polytope, &weights).unwrap();
        let Extended::Finite(base) = base else { return Err(TestCaseError::fail("finite weights")) };
        prop_assert_eq!(min_max_ratio(&polytope, &scaled_weights).unwrap(), Extended::Finite(&base / int(c)));
        prop_assert_eq!(
            min_max_ratio(&polytope.scaled(&int(c)), &weights).unwrap(),
            Extended::Finite(&base * int(c))
        );
    }

    #[test]
    fn staircases_are_minimal(
        points in exponent_rows(2, 1..=3, 4),
        heights in prop::collection::vec(1u32..=3, 2),
        l in lambda(),
        floor in any::<bool>(),
    ) {
        let mode = if floor { StaircaseMode::Floor } else { StaircaseMode::Ceil };
        let polytope = hull_normalize(&rationals(&points)).unwrap();
        let antichain = staircase_antichain(&polytope, &l, &heights, mode).unwrap();
        let region = StaircaseRegion::new(&polytope, &l, &heights, mode).unwrap();
        prop_assert!(is_antichain(&antichain));
        for w in &antichain {
            prop_assert!(region.contains(w).unwrap());
            for k in 0..w.len() {
                if w[k] > 0 {
                    let mut smaller = w.clone();
                    smaller[k] -= 1;
                    prop_assert!(!region.contains(&smaller).unwrap());
                }
            }
        }
    }

    #[test]
    fn tau_shrinks_as_lambda_grows(rows in exponent_rows(2, 1..=3, 4), a in lambda(), b in lambda()) {
        let (low, high) = if a <= b { (a, b) } else { (b, a) };
        let family = preset_generic(2, 3).unwrap();
        let sigmas = SigmaSet::new(rows).unwrap();
        let small = tau_sum(&family, &sigmas, &low).unwrap().vectors();
        let large = tau_sum(&family, &sigmas, &high).unwrap().vectors();
        prop_assert!(large.iter().all(|w| small.iter().any(|v| dominates(w, v))));
    }

    #[test]
    fn tau_is_constant_between_jumps(rows in exponent_rows(2, 1..=3, 3)) {
        let family = monomial_family(2).unwrap();
        let sigmas = SigmaSet::new(rows).unwrap();
        let jumps = jumping_numbers_sum(&family, &sigmas, &int(3), Level::Representation).unwrap();
        for pair in jumps.windows(2) {
            let mid = (&pair[0].0 + &pair[1].0) / int(2);
            prop_assert_eq!(tau_sum(&family, &sigmas, &pair[0].0).unwrap().vectors(), pair[0].1.vectors());
            prop_assert_eq!(tau_sum(&family, &sigmas, &mid).unwrap().vectors(), pair[0].1.vectors());
        }
    }

    #[test]
    fn singleton_sums_are_powers(sigma in prop::collection::vec(0u32..=5, 2), l in lambda()) {
        let family = preset_generic(2, 4).unwrap();
        let single = tau_sum(&family, &SigmaSet::singleton(sigma.clone()), &l).unwrap().vectors();
        prop_assert_eq!(single, vec![tau_power(&family, &sigma, &l).unwrap().0]);
    }

    #[test]
    fn closure_is_idempotent_and_extensive(i in monomial_ideal(2, 5), j in monomial_ideal(2, 4)) {
        let ci = integral_closure(&i).unwrap();
        prop_assert!(i.is_subset_of(&ci).unwrap());
        prop_assert_eq!(integral_closure(&ci).unwrap(), ci.clone());
        let cj = integral_closure(&j).unwrap();
        let product = integral_closure(&i.product(&j).unwrap()).unwrap();
        prop_assert!(ci.product(&cj).unwrap().is_subset_of(&product).unwrap());
    }

    #[test]
    fn ideal_operations_match_membership(i in monomial_ideal(2, 4), j in monomial_ideal(2, 4)) {
        let sum = i.sum(&j).unwrap();
        let meet = i.intersect(&j).unwrap();
        let product = i.product(&j).unwrap();
        let colon = i.colon(&j).unwrap();
        let member = |ideal: &MonomialIdeal, m: &[u32]| ideal.gens().iter().any(|g| divides(g, m));
        for m in monomials(2, 9) {
            prop_assert_eq!(sum.contains(&m).unwrap(), member(&i, &m) || member(&j, &m));
            prop_assert_eq!(meet.contains(&m).unwrap(), member(&i, &m) && member(&j, &m));
            let in_colon = j.gens().iter().all(|g| {
                let shifted: Vec<u32> = g.iter().zip(&m).map(|(a, b)| a + b).collect();
                member(&i, &shifted)
            });
            prop_assert_eq!(colon.contains(&m).unwrap(), in_colon);
            let in_product = i.gens().iter().any(|a| {
                j.gens().iter().any(|b| {
                    let ab: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    divides(&ab, &m)
                })
            });
            prop_assert_eq!(product.contains(&m).unwrap(), in_product);
        }
    }

    #[test]
    fn roots_undo_brackets_and_are_smallest(i in monomial_ideal(3, 6), q in 1u32..=6) {
        prop_assert_eq!(i.bracket_power(q).unwrap().qth_root(q).unwrap(), i.clone());
        let root = i.qth_root(q).unwrap();
        prop_assert!(i.is_subset_of(&root.bracket_power(q).unwrap()).unwrap());
        // raising any exponent of a root generator loses I ⊆ J^[q]
        for (index, g) in root.gens().iter().enumerate() {
            for k in 0..g.len() {
                let mut gens = root.gens().to_vec();
                gens[index][k] += 1;
                let smaller = MonomialIdeal::new(3, gens).unwrap();
                prop_assert!(!i.is_subset_of(&smaller.bracket_power(q).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn nu_grows_by_at_least_p(i in proper_ideal(2, 4), p in prop::sample::select(vec![2u64, 3, 5])) {
        let mut previous = None;
        for e in 1..=3 {
            let nu = nu_e(&i, p, e).unwrap();
            prop_assert_eq!(nu, nu_e_table(&i, p, e).unwrap());
            if let Some(prev) = previous {
                prop_assert!(nu >= p * prev);
            }
            previous = Some(nu);
        }
    }

    #[test]
    fn gamma_is_additive(a in prop::collection::vec(1u32..=5, 0..=6), b in prop::collection::vec(1u32..=5, 0..=6), k in 1u32..=5) {
        let (sa, sb) = (MinorShape::new(a), MinorShape::new(b));
        prop_assert_eq!(gamma(&sa.join(&sb), k), gamma(&sa, k) + gamma(&sb, k));
    }

    #[test]
    fn family_documents_round_trip(m in 1usize..=4, extra in 0usize..=3) {
        let family = preset_generic(m, m + extra).unwrap();
        let text = family.to_json();
        prop_assert_eq!(ftl::family::PrimeFamily::from_json(&text).unwrap().to_json(), text);
    }
}
