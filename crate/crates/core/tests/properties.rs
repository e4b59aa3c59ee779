use andreev::hypergeom::{hfma1, TruncationPolicy};
use andreev::pfaffian::pfaffian;
use andreev::symfunc::{jack_eval, schur_eval};
use andreev::{JackIndex, Partition};
use nalgebra::DMatrix;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..6, 0..5).prop_map(Partition::from_unsorted)
}

fn alpha() -> impl Strategy<Value = JackIndex> {
    prop::sample::select(vec![JackIndex::HALF, JackIndex::ONE, JackIndex::TWO])
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.weight(), p.weight());
    }

    #[test]
    fn jack_is_symmetric_and_homogeneous(p in partition(), a in alpha(), x in prop::collection::vec(-1.0f64..1.0, 5), t in 0.2f64..2.0) {
        let v = jack_eval(&p, a, &x);
        let mut y = x.clone();
        y.reverse();
        y.swap(0, 2);
        prop_assert!((jack_eval(&p, a, &y) - v).abs() <= 1e-10 * v.abs().max(1.0));
        let scaled: Vec<f64> = x.iter().map(|xi| t * xi).collect();
        let want = t.powi(p.weight() as i32) * v;
        prop_assert!((jack_eval(&p, a, &scaled) - want).abs() <= 1e-9 * want.abs().max(1.0));
    }

    #[test]
    fn jack_at_alpha_one_is_schur(p in partition(), x in prop::collection::vec(-1.0f64..1.0, 4)) {
        prop_assume!(p.len() <= 4);
        let (j, s) = (jack_eval(&p, JackIndex::ONE, &x), schur_eval(&p, &x));
        prop_assert!((j - s).abs() <= 1e-10 * s.abs().max(1.0));
    }

    #[test]
    fn hfma_is_symmetric_in_its_argument(a in -2.0f64..2.0, b in 0.1f64..2.0, c in 0.6f64..3.0, x in prop::collection::vec(-0.5f64..0.5, 3)) {
        // values near zero cannot reach the default relative tolerance by weight 60
        let pol = TruncationPolicy { max_weight: 80, rel_tol: 1e-9, ..TruncationPolicy::default() };
        let mut y = x.clone();
        y.rotate_left(1);
        let (u, v) = (hfma1(a, b, c, JackIndex::TWO, &x, &pol).unwrap(), hfma1(a, b, c, JackIndex::TWO, &y, &pol).unwrap());
        prop_assert!((u.value - v.value).abs() <= 1e-10 * u.value.abs().max(1.0) + u.tail_estimate + v.tail_estimate);
    }

    #[test]
    fn pfaffian_squares_to_determinant(half in 1usize..6, entries in prop::collection::vec(-1.0f64..1.0, 66)) {
        let n = 2 * half;
        let mut m = DMatrix::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                m[(i, j)] = entries[k];
                m[(j, i)] = -entries[k];
                k += 1;
            }
        }
        let pf = pfaffian(&m).unwrap();
        let det = m.determinant();
        prop_assert!((pf * pf - det).abs() <= 1e-9 * det.abs().max(1e-3));
    }
}
