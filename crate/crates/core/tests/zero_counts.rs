//! Brute-force zero counts against the closed forms for paths and forms on
//! even cycles.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toricode_core::formulas::{complete_max, equality_condition, incomplete_max, path_zero_count};
use toricode_core::graph::Graph;
use toricode_core::poly::Polynomial;
use toricode_core::zeros::{
    linear_zeros, max_zeros_search, path_form, projective_linear_forms, z_count, zeros_via_pullback,
    FormClass,
};
use toricode_core::{Elem, FiniteField, ToricSet, DEFAULT_BUDGET};

fn random_unit(field: &FiniteField, rng: &mut ChaCha8Rng) -> Elem {
    Elem::new(rng.random_range(1..field.order()) as u16)
}

#[test]
fn path_lemma_is_coefficient_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (k, q) in [(2u32, 3u32), (2, 4), (3, 3)] {
        let field = FiniteField::with_order(q).unwrap();
        let n = 2 * k as usize;
        for r in 2..=2 * k {
            let expected = path_zero_count(r, q, k).unwrap();
            for _ in 0..5 {
                let betas: Vec<Elem> = (0..r - 1).map(|_| random_unit(&field, &mut rng)).collect();
                let g = path_form(&field, &betas, n).unwrap();
                let z = z_count(&[g], n, &field, DEFAULT_BUDGET).unwrap();
                assert_eq!(BigUint::from(z), expected, "k={k} q={q} r={r}");
            }
        }
    }
}

#[test]
fn complete_argmax_is_equality_locus() {
    for (k, q) in [(2u32, 3u32), (2, 4), (2, 5), (3, 3)] {
        let field = FiniteField::with_order(q).unwrap();
        let x = ToricSet::enumerate(&Graph::cycle(2 * k as usize).unwrap(), &field, DEFAULT_BUDGET)
            .unwrap();
        let found = max_zeros_search(&x, FormClass::Complete, DEFAULT_BUDGET).unwrap();
        assert_eq!(BigUint::from(found.max), complete_max(k, q).unwrap());
        let locus: Vec<Vec<Elem>> = projective_linear_forms(&field, 2 * k as usize)
            .filter(|a| FormClass::Complete.contains(a))
            .filter(|a| equality_condition(&field, a).unwrap())
            .collect();
        assert_eq!(found.maximizers, locus, "k={k} q={q}");

        let inc = max_zeros_search(&x, FormClass::Incomplete, DEFAULT_BUDGET).unwrap();
        assert_eq!(BigUint::from(inc.max), incomplete_max(k, q).unwrap());
    }
}

#[test]
fn rotation_by_two_preserves_zero_count() {
    for (k, q) in [(2usize, 5u32), (3, 3), (3, 4)] {
        let field = FiniteField::with_order(q).unwrap();
        let x = ToricSet::enumerate(&Graph::cycle(2 * k).unwrap(), &field, DEFAULT_BUDGET).unwrap();
        for a in projective_linear_forms(&field, 2 * k).step_by(3) {
            let mut rotated = a.clone();
            rotated.rotate_left(2);
            assert_eq!(linear_zeros(&field, &a, &x), linear_zeros(&field, &rotated, &x));
        }
    }
}

#[test]
fn pullback_route_agrees_beyond_cycles() {
    // Fibers are uniform for every graph, so the pullback route works in general.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let graphs = [
        Graph::complete_bipartite(2, 3).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::path(4).unwrap(),
        Graph::cycle(3).unwrap().disjoint_union(&Graph::path(2).unwrap()),
    ];
    for g in &graphs {
        for q in [3, 4] {
            let field = FiniteField::with_order(q).unwrap();
            let x = ToricSet::enumerate(g, &field, DEFAULT_BUDGET).unwrap();
            for _ in 0..10 {
                let coeffs: Vec<Elem> = (0..g.edge_count())
                    .map(|_| Elem::new(rng.random_range(0..q) as u16))
                    .collect();
                let form = Polynomial::linear(&field, &coeffs);
                assert_eq!(
                    zeros_via_pullback(&form, &x, DEFAULT_BUDGET).unwrap() as usize,
                    linear_zeros(&field, &coeffs, &x)
                );
            }
        }
    }
}
