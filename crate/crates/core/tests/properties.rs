//! Structural properties checked exhaustively on small grids or by
//! randomized search, including agreement with the independent oracles
//! in `common`.

mod common;

use common::{brute_force_coefficient, dense_lattice_points};
use proptest::prelude::*;

use equimatch::formulas::{
    expand_product, grouped_factor, pieri_expand, Ambient,
};
use equimatch::matchings::{
    coefficient_via_matchings, coefficient_via_matchings_seq, group_by_subset, Edge, Matching,
};
use equimatch::newton::{dilated_polytope_lattice_points, minkowski_power, PolytopeSpec};
use equimatch::polyring::{ExponentVector, Family, Polynomial};

#[test]
fn brute_force_oracle_agrees_with_the_streamed_fold() {
    for i in 0..=4u32 {
        for j in 0..=4u32 {
            for k in i.max(j)..=i + j {
                let oracle = brute_force_coefficient(i, j, k);
                assert_eq!(
                    coefficient_via_matchings_seq(i, j, k),
                    oracle,
                    "streamed fold at ({i},{j},{k})"
                );
                assert_eq!(
                    coefficient_via_matchings(i, j, k),
                    oracle,
                    "dispatching fold at ({i},{j},{k})"
                );
            }
        }
    }
}

#[test]
fn dense_scan_oracle_agrees_with_the_bounded_search() {
    for i in 0..=3u32 {
        for j in 0..=3u32 {
            for k in i.max(j)..=i + j {
                let spec = PolytopeSpec::new(i, j, k).unwrap();
                for n in 1..=3u32 {
                    assert_eq!(
                        dilated_polytope_lattice_points(&spec, n),
                        dense_lattice_points(i, k, i + j - k, n),
                        "lattice points at ({i},{j},{k}) N={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn per_subset_weight_sums_equal_the_grouped_factor() {
    for i in 0..=5u32 {
        for j in 0..=5u32 {
            for r in 0..=i.min(j) {
                let groups = group_by_subset(i, j, r);
                for (p, members) in &groups {
                    let mut sum = Polynomial::zero(Family::Beta);
                    for m in members {
                        sum = sum.add(&m.weight()).unwrap();
                    }
                    assert_eq!(
                        sum.beta_to_t().unwrap(),
                        grouped_factor(p, j),
                        "subset {p} in G^{i}_{j}"
                    );
                }
            }
        }
    }
}

#[test]
fn expansions_cover_exactly_the_window() {
    for ambient in [Ambient::Finite(5), Ambient::Finite(8), Ambient::Infinite] {
        for i in 0..=5u32 {
            for j in 0..=5u32 {
                let expansion = expand_product(i, j, ambient, Family::T).unwrap();
                let expected: Vec<u32> = (i.max(j)..=i + j)
                    .filter(|&k| ambient.contains_class(k))
                    .collect();
                let classes: Vec<u32> = expansion.classes().map(|(k, _)| k).collect();
                assert_eq!(classes, expected, "{ambient} classes for ({i},{j})");
                for (k, coeff) in expansion.classes() {
                    assert!(!coeff.is_zero(), "zero in-window coefficient at k={k}");
                }
            }
        }
    }
}

#[test]
fn pieri_is_the_expansion_of_sigma_one() {
    for k in 0..=6u32 {
        let pieri = pieri_expand(k, 7).unwrap();
        let general = expand_product(1, k, Ambient::Finite(7), Family::T).unwrap();
        let collect = |e: &equimatch::formulas::ExpansionResult| {
            e.classes()
                .map(|(k, c)| (k, c.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(collect(&pieri), collect(&general), "k={k}");
    }
}

fn arb_exponents() -> impl Strategy<Value = ExponentVector> {
    proptest::collection::vec((1u32..=5, 1u32..=3), 0..=3).prop_map(ExponentVector::new)
}

fn arb_poly(family: Family, coeffs: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((arb_exponents(), coeffs), 0..=4).prop_map(move |terms| {
        let mut poly = Polynomial::zero(family);
        for (exps, coeff) in terms {
            poly.add_assign_term(exps, coeff);
        }
        poly
    })
}

fn arb_matching() -> impl Strategy<Value = Matching> {
    (1..=6u32, 1..=6u32)
        .prop_flat_map(|(i, j)| {
            let max_r = i.min(j) as usize;
            let tops = proptest::sample::subsequence((1..=i).collect::<Vec<_>>(), 0..=max_r);
            (Just(i), Just(j), tops)
        })
        .prop_flat_map(|(i, j, tops)| {
            let bottoms = proptest::sample::subsequence((1..=j).collect::<Vec<_>>(), tops.len())
                .prop_shuffle();
            (Just(i), Just(j), Just(tops), bottoms)
        })
        .prop_map(|(i, j, tops, bottoms)| {
            let edges = tops
                .iter()
                .zip(&bottoms)
                .map(|(&g, &h)| Edge { g, h })
                .collect();
            Matching::new(i, j, edges).expect("construction is valid")
        })
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(
        a in arb_poly(Family::T, -4..=4),
        b in arb_poly(Family::T, -4..=4),
        c in arb_poly(Family::T, -4..=4),
    ) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn multiplication_commutes_associates_distributes(
        a in arb_poly(Family::T, -4..=4),
        b in arb_poly(Family::T, -4..=4),
        c in arb_poly(Family::T, -4..=4),
    ) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn beta_substitution_is_a_ring_homomorphism(
        a in arb_poly(Family::Beta, -4..=4),
        b in arb_poly(Family::Beta, -4..=4),
    ) {
        let map = |p: &Polynomial| p.beta_to_t().unwrap();
        prop_assert_eq!(map(&a.add(&b).unwrap()), map(&a).add(&map(&b)).unwrap());
        prop_assert_eq!(map(&a.mul(&b).unwrap()), map(&a).mul(&map(&b)).unwrap());
    }

    #[test]
    fn term_order_is_a_total_order(
        a in arb_exponents(),
        b in arb_exponents(),
        c in arb_exponents(),
    ) {
        prop_assert_eq!(a.cmp(&b) == std::cmp::Ordering::Equal, a == b);
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }

    #[test]
    fn ordered_terms_follow_the_family_direction(p in arb_poly(Family::Beta, 1..=4)) {
        let terms = p.ordered_terms();
        for pair in terms.windows(2) {
            prop_assert!(pair[0].0 > pair[1].0, "beta terms must descend");
        }
    }

    #[test]
    fn rotation_is_a_weight_preserving_involution(m in arb_matching()) {
        let rotated = m.rotate180();
        prop_assert_eq!(rotated.rotate180(), m.clone());
        prop_assert_eq!(rotated.weight(), m.weight());
        for e in m.edges() {
            let image = Edge { g: e.h, h: e.g };
            prop_assert_eq!(
                rotated.weight_index(image).unwrap(),
                m.weight_index(*e).unwrap()
            );
        }
    }

    #[test]
    fn power_support_is_the_minkowski_power(
        p in arb_poly(Family::Beta, 1..=4),
        n in 0u32..=3,
    ) {
        // Positive coefficients rule out cancellation, so supports add.
        prop_assert_eq!(p.pow(n).support(), minkowski_power(&p.support(), n));
    }
}
