use proptest::prelude::*;
use toricode_core::evalcode::{hilbert_function, regularity_index, LinearCode};
use toricode_core::graph::Graph;
use toricode_core::linalg::{row_reduce, Matrix};
use toricode_core::{Elem, FiniteField, ToricSet, DEFAULT_BUDGET};

fn field_strategy() -> impl Strategy<Value = FiniteField> {
    prop::sample::select(vec![3u32, 4, 5, 7, 8, 9, 11, 16, 25, 27, 49, 64, 121, 128, 243, 256, 289, 512])
        .prop_map(|q| FiniteField::with_order(q).unwrap())
}

proptest! {
    #[test]
    fn field_laws_hold(f in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let q = f.order();
        let (a, b, c) = (Elem::new((a % q) as u16), Elem::new((b % q) as u16), Elem::new((c % q) as u16));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.pow(a, q as u64), a);
        if !b.is_zero() {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
    }

    #[test]
    fn rref_ignores_row_order(
        rows in prop::collection::vec(prop::collection::vec(0u16..5, 6), 1..8),
        seed in any::<u64>(),
    ) {
        let f = FiniteField::new(5, 1).unwrap();
        let to_rows = |rs: &[Vec<u16>]| rs.iter().map(|r| r.iter().map(|&v| Elem::new(v)).collect()).collect::<Vec<Vec<Elem>>>();
        let mut shuffled = rows.clone();
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        shuffled.reverse();
        let a = row_reduce(&f, &Matrix::from_rows(6, to_rows(&rows)));
        let b = row_reduce(&f, &Matrix::from_rows(6, to_rows(&shuffled)));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn codeword_weight_is_scale_invariant(
        msg in prop::collection::vec(0u16..4, 6),
        unit in 1u16..4,
    ) {
        let f = FiniteField::with_order(4).unwrap();
        let x = ToricSet::enumerate(&Graph::cycle(6).unwrap(), &f, DEFAULT_BUDGET).unwrap();
        let code = LinearCode::from_toric(&x, 1).unwrap();
        let g = code.generator();
        let word: Vec<Elem> = (0..g.cols())
            .map(|c| msg.iter().enumerate().fold(Elem::ZERO, |acc, (r, &m)| f.add(acc, f.mul(Elem::new(m), g.get(r, c)))))
            .collect();
        let scaled: Vec<Elem> = word.iter().map(|&w| f.mul(Elem::new(unit), w)).collect();
        let weight = |w: &[Elem]| w.iter().filter(|e| !e.is_zero()).count();
        prop_assert_eq!(weight(&word), weight(&scaled));
    }
}

#[test]
fn singleton_bound_on_small_codes() {
    let cases = [
        (Graph::cycle(4).unwrap(), 3u32, 1u32),
        (Graph::cycle(4).unwrap(), 5, 1),
        (Graph::cycle(4).unwrap(), 4, 2),
        (Graph::cycle(6).unwrap(), 3, 2),
        (Graph::complete_bipartite(2, 3).unwrap(), 3, 1),
        (Graph::path(4).unwrap(), 5, 2),
        (Graph::cycle(5).unwrap(), 3, 1),
    ];
    for (g, q, d) in cases {
        let f = FiniteField::with_order(q).unwrap();
        let x = ToricSet::enumerate(&g, &f, DEFAULT_BUDGET).unwrap();
        let code = LinearCode::from_toric(&x, d).unwrap();
        let dist = code.minimum_distance(DEFAULT_BUDGET).unwrap();
        assert!(code.satisfies_singleton(dist), "{g:?} q={q} d={d}: [{}, {}, {dist}]", code.length(), code.dimension());
    }
}

#[test]
fn hilbert_function_saturates_and_stays() {
    for (g, q) in [(Graph::cycle(4).unwrap(), 4u32), (Graph::cycle(6).unwrap(), 3), (Graph::path(4).unwrap(), 4)] {
        let f = FiniteField::with_order(q).unwrap();
        let x = ToricSet::enumerate(&g, &f, DEFAULT_BUDGET).unwrap();
        let reg = regularity_index(&x, DEFAULT_BUDGET).unwrap();
        let values: Vec<usize> = (0..=reg + 3).map(|d| hilbert_function(&x, d)).collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
        assert!(values[reg as usize..].iter().all(|&h| h == x.len()));
        if reg > 0 {
            assert!(values[reg as usize - 1] < x.len());
        }
    }
}
