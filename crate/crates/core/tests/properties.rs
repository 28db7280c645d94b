mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropval::exact::{ExactMatrix, Field, Scalar};
use tropval::matroid::RankMatroid;
use tropval::oracle::plain_rank;
use tropval::tropical::{ExtNat, SupportSet, ValVector};

fn matrix(field: Field, rows: usize, cols: usize, entries: &[i64]) -> ExactMatrix {
    let e = entries.iter().take(rows * cols).map(|&v| Scalar::from_i64(field, v)).collect();
    ExactMatrix::new(field, rows, cols, e).unwrap()
}

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn ext() -> impl Strategy<Value = ExtNat> {
    prop_oneof![4 => (0u64..8).prop_map(ExtNat::Fin), 1 => Just(ExtNat::Inf)]
}

fn vector(r: usize) -> impl Strategy<Value = ValVector> {
    prop::collection::vec(ext(), r).prop_map(ValVector::new)
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(5)), Just(Field::Prime(7))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matches_transpose_and_plain_elimination(field in fields(), (r, c, e) in small_matrix()) {
        let m = matrix(field, r, c, &e);
        let rank = m.rank().unwrap();
        prop_assert_eq!(rank, m.transpose().rank().unwrap());
        prop_assert_eq!(rank, plain_rank(&m.to_rows(), c));
        prop_assert!(rank <= r.min(c));
    }

    #[test]
    fn kernel_has_complementary_size_and_is_annihilated(field in fields(), (r, c, e) in small_matrix()) {
        let m = matrix(field, r, c, &e);
        let ker = m.kernel_basis().unwrap();
        prop_assert_eq!(ker.len() + m.rank().unwrap(), c);
        for k in &ker {
            prop_assert!(m.mul_vec(k).iter().all(Scalar::is_zero));
        }
        let stacked = ExactMatrix::from_rows(field, ker.clone()).ok();
        if let Some(s) = stacked {
            prop_assert_eq!(s.rank().unwrap(), ker.len());
        }
    }

    #[test]
    fn determinant_vanishes_iff_rank_deficient(field in fields(), n in 1usize..5, e in prop::collection::vec(-3i64..=3, 16)) {
        let m = matrix(field, n, n, &e);
        let det = m.determinant().unwrap();
        prop_assert_eq!(det.is_zero(), m.rank().unwrap() < n);
    }

    #[test]
    fn semiring_laws(a in vector(4), b in vector(4), c in vector(4)) {
        let plus = |x: &ValVector, y: &ValVector| x.oplus(y).unwrap();
        let times = |x: &ValVector, y: &ValVector| x.odot(y).unwrap();
        prop_assert_eq!(plus(&a, &b), plus(&b, &a));
        prop_assert_eq!(times(&a, &b), times(&b, &a));
        prop_assert_eq!(plus(&plus(&a, &b), &c), plus(&a, &plus(&b, &c)));
        prop_assert_eq!(times(&times(&a, &b), &c), times(&a, &times(&b, &c)));
        prop_assert_eq!(times(&a, &plus(&b, &c)), plus(&times(&a, &b), &times(&a, &c)));
        prop_assert_eq!(plus(&a, &a), a.clone());
        prop_assert_eq!(plus(&a, &ValVector::infinity(4)), a.clone());
        prop_assert_eq!(times(&a, &ValVector::zero(4)), a.clone());
        prop_assert_eq!(times(&a, &ValVector::infinity(4)), ValVector::infinity(4));
        prop_assert!(plus(&a, &b).leq(&a).unwrap());
    }

    #[test]
    fn support_and_decomposition(a in vector(5)) {
        let parts = a.homogeneous_decomposition();
        prop_assert_eq!(ValVector::from_decomposition(5, &parts), a.clone());
        let mut union = SupportSet::empty(5);
        for (d, s) in &parts {
            prop_assert!(!s.is_empty());
            prop_assert!(union.intersection(s).is_empty());
            prop_assert!(s.indices().all(|i| a.get(i) == ExtNat::Fin(*d)));
            union = union.union(s);
        }
        prop_assert_eq!(union, a.support());
    }

    #[test]
    fn matroid_rank_is_submodular(cols in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..7), x in any::<u64>(), y in any::<u64>()) {
        let r = cols.len();
        let m = RankMatroid::new(Field::Rational, 3, cols.iter().map(|c| c.iter().map(|&v| common::q(v)).collect()).collect()).unwrap();
        let mask = (1u64 << r) - 1;
        let (a, b) = (SupportSet::from_bits(r, x & mask), SupportSet::from_bits(r, y & mask));
        prop_assert!(m.rank(a) + m.rank(b) >= m.rank(a.union(&b)) + m.rank(a.intersection(&b)));
        prop_assert!(m.rank(a) <= a.len());
        if a.is_subset(&b) {
            prop_assert!(m.rank(a) <= m.rank(b));
        }
    }

    #[test]
    fn simplification_preserves_rank(cols in prop::collection::vec(prop::collection::vec(-1i64..=1, 3), 1..7), x in any::<u64>()) {
        let r = cols.len();
        let m = RankMatroid::new(Field::Rational, 3, cols.iter().map(|c| c.iter().map(|&v| common::q(v)).collect()).collect()).unwrap();
        let (simple, map) = m.simplify();
        prop_assert!(simple.is_simple());
        let mut s = SupportSet::from_bits(r, x & ((1u64 << r) - 1));
        let full_rank = m.rank(s);
        for &l in &map.loops {
            s.remove(l);
        }
        prop_assert_eq!(simple.rank(map.image(s)), full_rank);
    }
}

/// Runs `body` on a fresh seeded RNG for each golden arrangement.
fn for_golden(cases: u64, mut body: impl FnMut(&str, &tropval::arrangement::ToricArrangement, &mut ChaCha8Rng)) {
    for (name, arr) in common::golden() {
        for seed in 0..cases {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            body(name, &arr, &mut rng);
        }
    }
}

#[test]
fn valuation_is_multiplicative_and_ultrametric() {
    for_golden(60, |name, arr, rng| {
        let f = common::random_structured_polynomial(rng, arr);
        let g = common::random_structured_polynomial(rng, arr);
        let (of, og) = (arr.ord_a(&f), arr.ord_a(&g));
        assert_eq!(arr.ord_a(&f.mul(&g)), of.odot(&og).unwrap(), "{name}: {f} * {g}");
        let sum = arr.ord_a(&f.add(&g));
        let lower = of.oplus(&og).unwrap();
        assert!(lower.leq(&sum).unwrap(), "{name}: {f} + {g}");
        for i in 0..arr.r() {
            if of.get(i) != og.get(i) {
                assert_eq!(sum.get(i), lower.get(i), "{name}: branch {i} of {f} + {g}");
            }
        }
    });
}

#[test]
fn series_map_is_a_ring_homomorphism() {
    for_golden(20, |name, arr, rng| {
        let f = common::random_polynomial(rng, arr, 3, 4);
        let g = common::random_polynomial(rng, arr, 3, 4);
        let t = 9;
        assert_eq!(arr.mu_a(&f.mul(&g), t), arr.mu_a(&f, t).mul_truncated(&arr.mu_a(&g, t)), "{name}");
    });
}

#[test]
fn valuations_of_polynomials_are_members() {
    for (name, arr) in common::golden() {
        let p = common::engine(arr.clone());
        for seed in 0..25 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = common::random_structured_polynomial(&mut rng, &arr);
            let g = common::random_structured_polynomial(&mut rng, &arr);
            let (a, b) = (arr.ord_a(&f), arr.ord_a(&g));
            assert!(p.is_member(&a).unwrap(), "{name}: ord of {f} = {a}");
            assert!(p.is_member(&a.odot(&b).unwrap()).unwrap(), "{name}: {a} ⊙ {b}");
            assert!(p.is_member(&a.oplus(&b).unwrap()).unwrap(), "{name}: {a} ⊕ {b}");
        }
    }
}

#[test]
fn layer_witnesses_are_homogeneous_on_their_circuit() {
    for (name, arr) in common::golden() {
        let p = common::engine(arr.clone());
        let top = p.stabilization_degree().unwrap_or(4);
        for d in 0..=top {
            let layer = p.layer(d).unwrap();
            for (c, w) in layer.circuits().iter().zip(&layer.witnesses) {
                assert_eq!(arr.ord_a(w), ValVector::homogeneous(d, *c), "{name} degree {d}: {w}");
            }
        }
    }
}
