use freebraid::*;
use proptest::prelude::*;

fn word_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((any::<bool>(), 1..n), 0..=max_len).prop_map(move |ls| {
            let letters = ls.into_iter().map(|(c, i)| if c { Letter::classical(i) } else { Letter::virt(i) }).collect();
            BraidWord::new(n, letters).unwrap()
        })
    })
}

fn words_with_move(moveset: MoveSet) -> impl Strategy<Value = (BraidWord, MoveInstance)> {
    (word_strategy(5, 12), any::<prop::sample::Index>()).prop_map(move |(w, ix)| {
        let moves = applicable_moves(&w, moveset);
        let m = moves[ix.index(moves.len())];
        (w, m)
    })
}

proptest! {
    #[test]
    fn text_round_trip(w in word_strategy(6, 20)) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w.clone());
        prop_assert_eq!(parse_any(&w.serialize(Format::Json)).unwrap(), w);
    }

    #[test]
    fn permutation_is_a_homomorphism(a in word_strategy(5, 10), b in word_strategy(5, 10)) {
        let b = BraidWord::new(a.strands(), b.letters().iter().copied().filter(|l| l.index() < a.strands()).collect()).unwrap();
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(permutation(&ab), permutation(&a).then(&permutation(&b)).unwrap());
    }

    #[test]
    fn moves_preserve_permutation((w, m) in words_with_move(MoveSet::FB)) {
        let (after, _) = apply_move(&w, &m).unwrap();
        prop_assert_eq!(permutation(&after), permutation(&w));
    }

    #[test]
    fn inverse_move_restores((w, m) in words_with_move(MoveSet::FB)) {
        let (after, _) = apply_move(&w, &m).unwrap();
        let (back, _) = apply_move(&after, &m.inverse()).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn strong_moves_keep_canonical_code((w, m) in words_with_move(MoveSet::Strong)) {
        let (after, _) = apply_move(&w, &m).unwrap();
        prop_assert!(strongly_equal(&w, &after).unwrap());
    }

    #[test]
    fn f_moves_keep_f_class((w, m) in words_with_move(MoveSet::F)) {
        let (after, _) = apply_move(&w, &m).unwrap();
        prop_assert!(f_equal(&w, &after).unwrap());
    }

    #[test]
    fn linking_symmetric_and_rotation_invariant(w in word_strategy(5, 16), k in 0usize..40) {
        prop_assume!(permutation(&w).is_cyclic());
        let d = chord_diagram(&w).unwrap();
        let r = d.rotated(k);
        for a in d.chords() {
            for b in d.chords() {
                prop_assert_eq!(d.linked(a, b).unwrap(), d.linked(b, a).unwrap());
                prop_assert_eq!(d.linked(a, b).unwrap(), r.linked(a, b).unwrap());
            }
        }
    }

    #[test]
    fn irreducible_form_has_no_bigons(w in word_strategy(5, 16)) {
        let r = irreducible_form(&w);
        prop_assert!(find_bigons(&r).is_empty());
        prop_assert!(f_equal(&w, &r).unwrap());
    }

    #[test]
    fn renders_are_deterministic(w in word_strategy(5, 10)) {
        prop_assert_eq!(render_ascii(&w), render_ascii(&w.clone()));
        prop_assert_eq!(render_ascii(&w).lines().count(), w.len() + 1);
        prop_assert_eq!(render_svg(&w), render_svg(&w.clone()));
    }
}
