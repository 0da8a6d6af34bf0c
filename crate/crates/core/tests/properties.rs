use injword::complex::{build_complex, complex_on_letters, verify_dd_zero};
use injword::homology::{
    betti_table, boundary_smith_forms, smith_dense, smith_normal_form, DenseIntMatrix,
};
use injword::words::{words_over, Alphabet, LabeledWord};
use injword::wreath::{derangement_formula, elements, FiniteGroup};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = DenseIntMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix_of(r, c))
}

fn square_matrix() -> impl Strategy<Value = DenseIntMatrix> {
    (1usize..6).prop_flat_map(|n| matrix_of(n, n))
}

fn matrix_of(r: usize, c: usize) -> impl Strategy<Value = DenseIntMatrix> {
    prop::collection::vec(-6i64..=6, r * c).prop_map(move |v| {
        let rows: Vec<Vec<BigInt>> = v
            .chunks(c)
            .map(|ch| ch.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        DenseIntMatrix::from_rows(rows)
    })
}

fn injective_word(max_len: usize) -> impl Strategy<Value = LabeledWord> {
    (
        Just((1..=6u32).collect::<Vec<_>>()).prop_shuffle(),
        0..=max_len,
        prop::collection::vec(0u32..3, max_len),
    )
        .prop_map(|(letters, len, labels)| {
            LabeledWord::new(letters[..len].to_vec(), labels[..len].to_vec()).unwrap()
        })
}

proptest! {
    #[test]
    fn smith_transforms_reproduce_the_diagonal(m in small_matrix()) {
        let sparse = m.to_sparse();
        let form = smith_normal_form(&sparse, true);
        prop_assert!(form.divisibility_chain_holds());
        prop_assert!(form.verify_transforms(&sparse));
        // the sparse route is an independent computation of the same invariants
        prop_assert_eq!(&smith_normal_form(&sparse, false).diag, &form.diag);
    }

    #[test]
    fn product_of_invariant_factors_is_the_determinant(m in square_matrix()) {
        let form = smith_dense(m.clone(), false);
        let det = m.determinant();
        if form.rank() == m.rows() {
            let prod: BigInt = form.diag.iter().product();
            prop_assert_eq!(prod, det.magnitude().clone().into());
        } else {
            prop_assert_eq!(det, BigInt::from(0));
        }
    }

    #[test]
    fn face_identity(w in injective_word(5)) {
        let r = w.len();
        for j in 0..r {
            for i in 0..j {
                prop_assert_eq!(w.face(j).unwrap().face(i).unwrap(), w.face(i).unwrap().face(j - 1).unwrap());
            }
            let f = w.face(j).unwrap();
            prop_assert_eq!(f.len(), r - 1);
            prop_assert!(LabeledWord::new(f.letters().to_vec(), f.labels().to_vec()).is_ok());
        }
    }

    #[test]
    fn text_form_round_trips(w in injective_word(6)) {
        prop_assert_eq!(w.to_string().parse::<LabeledWord>().unwrap(), w);
    }
}

#[test]
fn every_constructed_complex_squares_to_zero() {
    for n in 0..=5 {
        for l in 1..=3 {
            let alpha = Alphabet::new(n, l).unwrap();
            if alpha.total_generators() > 50_000 {
                continue;
            }
            assert!(verify_dd_zero(&build_complex(alpha)), "n={n} l={l}");
        }
    }
}

#[test]
fn exactness_bookkeeping_and_euler_principle() {
    for n in 0..=4 {
        for l in 1..=3 {
            let c = build_complex(Alphabet::new(n, l).unwrap());
            let forms = boundary_smith_forms(&c);
            for r in 0..n {
                assert!(forms[r].rank() + forms[r + 1].rank() <= c.rank_of(r));
            }
            assert!(forms.iter().all(|f| f.divisibility_chain_holds()));
            let table = betti_table(&c);
            let homology_chi: i64 = table
                .iter()
                .enumerate()
                .map(|(r, h)| {
                    if r % 2 == 0 {
                        h.free_rank as i64
                    } else {
                        -(h.free_rank as i64)
                    }
                })
                .sum();
            assert_eq!(homology_chi, c.euler_characteristic());
            assert!(table[n].is_free());
        }
    }
}

/// The vanishing statement at the largest size that fits the generator
/// budget: five letters with three labels (29160 top generators).
#[test]
fn vanishing_below_the_top_for_five_letters_three_labels() {
    let c = build_complex(Alphabet::new(5, 3).unwrap());
    let table = betti_table(&c);
    assert!(table[..5].iter().all(|h| h.is_zero()), "{table:?}");
    assert!(table[5].is_free());
    assert_eq!(BigInt::from(table[5].free_rank), derangement_formula(3, 5));
}

#[test]
fn complexes_on_other_letter_sets_match_relabeled_ones() {
    let a = betti_table(&complex_on_letters(&[2, 5, 7], 2));
    let b = betti_table(&build_complex(Alphabet::new(3, 2).unwrap()));
    assert_eq!(a, b);
}

#[test]
fn word_action_is_a_left_action_and_commutes_with_faces() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let all: Vec<_> = elements(3, &g).collect();
    let words: Vec<LabeledWord> = (0..=3).flat_map(|r| words_over(&[1, 2, 3], 2, r)).collect();
    for u in &all {
        for w in &words {
            let uw = u.act_on_word(&g, w).unwrap();
            for j in 0..w.len() {
                assert_eq!(
                    u.act_on_word(&g, &w.face(j).unwrap()).unwrap(),
                    uw.face(j).unwrap()
                );
            }
        }
        for v in &all {
            let uv = u.multiply(v, &g).unwrap();
            for w in &words {
                let lhs = uv.act_on_word(&g, w).unwrap();
                let rhs = u.act_on_word(&g, &v.act_on_word(&g, w).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn orbit_of_a_single_letter_is_every_labeled_letter() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let orbit = injword::wreath::orbit(&g, 3, &"(1|0)".parse().unwrap()).unwrap();
    assert_eq!(orbit.len(), 6);
    assert_eq!(
        orbit.into_iter().collect::<Vec<_>>(),
        words_over(&[1, 2, 3], 2, 1)
    );
}
