//! Oriented framed link diagrams in the annulus: the slice-word DSL, the
//! compiled crossing graph, the descending-diagram evaluator, and the
//! template builders used by the relative module.

pub mod build;
pub mod eval;
pub mod slice;
pub mod tangle;
pub mod text;

pub use build::{
    braid_closure, closure_with_loop, partial_closure, relative_template, ArcStyle, Orient,
    RelTemplate,
};
pub use eval::{
    evaluate_closed, evaluate_relative_raw, raw_add, raw_scale, standard_arc_writhe,
    standard_writhe, Evaluator, RawElement, RawKey,
};
pub use slice::{kink_events, SliceEvent, SliceWord};
pub use tangle::{FreeLoop, Tangle, Target, Xing};
pub use text::{
    parse_diagram_file, sliceword_from_text, sliceword_to_text, tangle_from_text, tangle_to_text,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::BraidWord;
    use crate::scalar::{parse_scalar, Scalar};

    fn key(blob: &[i64], arc: Option<i64>) -> RawKey {
        let mut b = blob.to_vec();
        b.sort();
        (b, arc)
    }

    fn sc(s: &str) -> Scalar {
        parse_scalar(s).unwrap()
    }

    fn eval_word(letters: Vec<i32>, n: usize, orient: Orient) -> RawElement {
        let w = BraidWord::new(n, letters).unwrap();
        let t = braid_closure(&w, orient).compile().unwrap();
        evaluate_closed(&t).unwrap()
    }

    #[test]
    fn standard_closures_are_basis_monomials() {
        // A_j: closure of the positive coxeter braid, clockwise
        for j in 1..=4i64 {
            let letters: Vec<i32> = (1..j as i32).rev().collect();
            let got = eval_word(letters, j as usize, Orient::Clockwise);
            let mut expect = RawElement::new();
            raw_add(&mut expect, key(&[j], None), &Scalar::one());
            assert_eq!(got, expect, "A_{j}");
        }
        // A_{-j}: negative coxeter braid, counterclockwise
        for j in 1..=4i64 {
            let letters: Vec<i32> = (1..j as i32).rev().map(|i| -i).collect();
            let got = eval_word(letters, j as usize, Orient::Counterclockwise);
            let mut expect = RawElement::new();
            raw_add(&mut expect, key(&[-j], None), &Scalar::one());
            assert_eq!(got, expect, "A_-{j}");
        }
    }

    #[test]
    fn identity_closure_splits() {
        let got = eval_word(vec![], 2, Orient::Clockwise);
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[1, 1], None), &Scalar::one());
        assert_eq!(got, expect);
    }

    #[test]
    fn single_skein_step() {
        // closure of sigma_1^{-1} clockwise = x^-2 A_2 - x^-1(s - s^-1) A_1^2
        let got = eval_word(vec![-1], 2, Orient::Clockwise);
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[2], None), &sc("x^-2"));
        raw_add(
            &mut expect,
            key(&[1, 1], None),
            &(&sc("-x^-1") * &sc("s - s^-1")),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn zero_winding_unknot_gives_delta() {
        let sw = SliceWord {
            top: vec![],
            events: vec![
                SliceEvent::Cup {
                    pos: 0,
                    left_down: true,
                },
                SliceEvent::Cap { pos: 0 },
            ],
        };
        let t = sw.compile().unwrap();
        let got = evaluate_closed(&t).unwrap();
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[], None), &Scalar::delta());
        assert_eq!(got, expect);
    }

    #[test]
    fn curl_contributes_framing_factor() {
        // A_1 with one positive curl = (x v^-1) A_1
        let mut events = Vec::new();
        kink_events(&mut events, 0, true, true);
        let sw = SliceWord {
            top: vec![true],
            events,
        };
        let got = evaluate_closed(&sw.compile().unwrap()).unwrap();
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[1], None), &sc("x*v^-1"));
        assert_eq!(got, expect);
        // negative curl on a counterclockwise strand
        let mut events = Vec::new();
        kink_events(&mut events, 0, false, false);
        let sw = SliceWord {
            top: vec![false],
            events,
        };
        let got = evaluate_closed(&sw.compile().unwrap()).unwrap();
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[-1], None), &sc("x^-1*v"));
        assert_eq!(got, expect);
    }

    #[test]
    fn markov_moves_fix_the_class() {
        // conjugation invariance: closure(w1 w2) = closure(w2 w1)
        let pairs = [
            (vec![1, -2], vec![2, 1], 3usize),
            (vec![1, 1], vec![-2, 1], 3),
            (vec![1], vec![2, -1, 2], 3),
        ];
        for (w1, w2, n) in pairs {
            let a = eval_word(
                w1.iter().chain(w2.iter()).copied().collect(),
                n,
                Orient::Clockwise,
            );
            let b = eval_word(
                w2.iter().chain(w1.iter()).copied().collect(),
                n,
                Orient::Clockwise,
            );
            assert_eq!(a, b, "trace property for {w1:?}, {w2:?}");
        }
        // positive stabilization: closure on n+1 strands of w * sigma_n
        // equals (x v^-1) times the closure of w
        for (letters, n) in [(vec![1, 1], 2usize), (vec![1, -2, 1], 3)] {
            let plain = eval_word(letters.clone(), n, Orient::Clockwise);
            let mut stab = letters.clone();
            stab.push(n as i32);
            let stabbed = eval_word(stab, n + 1, Orient::Clockwise);
            assert_eq!(stabbed, raw_scale(&plain, &sc("x*v^-1")));
        }
    }

    #[test]
    fn reversal_on_small_windings() {
        // reversing A_1 gives A_{-1}; reversing A_2 gives the expansion of
        // the reversed diagram, x^2 A_{-2} + x(s - s^-1) A_{-1}^2
        let w = BraidWord::new(1, vec![]).unwrap();
        let t = braid_closure(&w, Orient::Clockwise).compile().unwrap();
        let r = evaluate_closed(&t.reverse().unwrap()).unwrap();
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[-1], None), &Scalar::one());
        assert_eq!(r, expect);

        let w = BraidWord::new(2, vec![1]).unwrap();
        let t = braid_closure(&w, Orient::Clockwise).compile().unwrap();
        let r = evaluate_closed(&t.reverse().unwrap()).unwrap();
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[-2], None), &sc("x^2"));
        raw_add(
            &mut expect,
            key(&[-1, -1], None),
            &(&sc("x") * &sc("s - s^-1")),
        );
        assert_eq!(r, expect);
        // reverse is an involution
        assert_eq!(t.reverse().unwrap().reverse().unwrap(), t);
    }

    #[test]
    fn nest_multiplies_monomials() {
        let a1 = braid_closure(&BraidWord::new(1, vec![]).unwrap(), Orient::Clockwise)
            .compile()
            .unwrap();
        let nested = a1.nest(&a1).unwrap();
        let got = evaluate_closed(&nested).unwrap();
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[1, 1], None), &Scalar::one());
        assert_eq!(got, expect);
    }

    #[test]
    fn relative_templates_are_unit_keys() {
        for arc in [1i64, 2, 3, 0, -1, -2, -3] {
            for blob in [vec![], vec![-1], vec![-1, -2], vec![1], vec![2, -1]] {
                if blob.len() + arc.unsigned_abs() as usize > 4 {
                    continue;
                }
                let tpl = relative_template(&blob, arc, ArcStyle::Standard).unwrap();
                let t = tpl.sliceword().compile().unwrap();
                let got = evaluate_relative_raw(&t).unwrap();
                let mut expect = RawElement::new();
                raw_add(&mut expect, key(&blob, Some(arc)), &Scalar::one());
                assert_eq!(got, expect, "template blob={blob:?} arc={arc}");
            }
        }
    }

    #[test]
    fn straight_capping_of_standard_arcs() {
        // capping A'_i with the straight segment gives A_i; capping A'_{-i}
        // gives x^-1 v A_{-i}; capping A'_0 gives delta
        for i in 1..=3i64 {
            let tpl = relative_template(&[], i, ArcStyle::Standard).unwrap();
            let capped = evaluate_closed(&tpl.cap_short().compile().unwrap()).unwrap();
            let mut expect = RawElement::new();
            raw_add(&mut expect, key(&[i], None), &Scalar::one());
            assert_eq!(capped, expect, "cap A'_{i}");

            let tpl = relative_template(&[], -i, ArcStyle::Standard).unwrap();
            let capped = evaluate_closed(&tpl.cap_short().compile().unwrap()).unwrap();
            let mut expect = RawElement::new();
            raw_add(&mut expect, key(&[-i], None), &sc("x^-1*v"));
            assert_eq!(capped, expect, "cap A'_-{i}");
        }
        let tpl = relative_template(&[], 0, ArcStyle::Standard).unwrap();
        let capped = evaluate_closed(&tpl.cap_short().compile().unwrap()).unwrap();
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[], None), &Scalar::delta());
        assert_eq!(capped, expect, "cap A'_0");
    }

    #[test]
    fn long_capping_of_trivial_arcs() {
        // the far capping of the trivial arc closes the attaching curve:
        // still delta, no framing residue
        let tpl = relative_template(&[], 0, ArcStyle::Standard).unwrap();
        let capped = evaluate_closed(&tpl.cap_long().compile().unwrap()).unwrap();
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[], None), &Scalar::delta());
        assert_eq!(capped, expect, "long cap of A'_0");
        // the far capping of A'_1 carries the handle framing (x v^-1)^2
        let tpl = relative_template(&[], 1, ArcStyle::Standard).unwrap();
        let capped = evaluate_closed(&tpl.cap_long().compile().unwrap()).unwrap();
        let mut expect = RawElement::new();
        raw_add(&mut expect, key(&[1], None), &sc("x^2*v^-2"));
        assert_eq!(capped, expect, "long cap of A'_1");
    }

    #[test]
    fn wiring_shifts_the_arc_winding() {
        // blob * A'_i wired with m extra windings evaluates to a unit scalar
        // times blob * A_{i+m}
        for (blob, arc, m) in [
            (vec![], 1i64, 1usize),
            (vec![-1], 1, 2),
            (vec![], 2, 1),
            (vec![-1], 0, 2),
            (vec![], -1, 3),
        ] {
            let tpl = relative_template(&blob, arc, ArcStyle::Standard).unwrap();
            let wired = tpl.wire(m).unwrap();
            let got = evaluate_closed(&wired.compile().unwrap()).unwrap();
            assert_eq!(got.len(), 1, "wired blob={blob:?} arc={arc} m={m}: {got:?}");
            let ((b, a), c) = got.iter().next().unwrap();
            assert_eq!(*a, None);
            let mut eb = blob.clone();
            eb.push(arc + m as i64);
            eb.sort();
            assert_eq!(*b, eb);
            assert!(!c.is_zero());
            // unit scalar: a single monomial over 1
            assert_eq!(c.num().num_terms(), 1, "unit coefficient, got {c}");
            assert!(c.den().is_one());
        }
    }

    #[test]
    fn evaluation_is_traversal_order_independent() {
        use rand::{Rng, SeedableRng};
        let mut seed_rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let words = [
            (vec![1, -2, 1, -2], 3usize),
            (vec![1, 2, -1, 2, 1], 3),
            (vec![-1, -1, 2, -3, 2], 4),
        ];
        for (letters, n) in words {
            let w = BraidWord::new(n, letters.clone()).unwrap();
            let t = braid_closure(&w, Orient::Clockwise).compile().unwrap();
            let reference = evaluate_closed(&t).unwrap();
            for _ in 0..5 {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed_rng.gen());
                let mut ev =
                    Evaluator::with_random_order(Box::new(move |k| rng.gen_range(0..k)));
                let got = ev.eval(&t).unwrap();
                assert_eq!(got, reference, "traversal invariance for {letters:?}");
            }
        }
    }

    #[test]
    fn diagram_text_round_trips() {
        let tpl = relative_template(&[-1], 2, ArcStyle::Standard).unwrap();
        let sw = tpl.sliceword();
        let text = sliceword_to_text(sw);
        let back = sliceword_from_text(&text).unwrap();
        assert_eq!(&back, sw);

        let t = sw.compile().unwrap();
        let text = tangle_to_text(&t);
        let back = tangle_from_text(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(
            evaluate_relative_raw(&back).unwrap(),
            evaluate_relative_raw(&t).unwrap()
        );
        let via_file = parse_diagram_file(&sliceword_to_text(sw)).unwrap();
        assert_eq!(via_file, t);
    }
}
