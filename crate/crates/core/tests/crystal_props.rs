use proptest::prelude::*;

use kr_paths::crystal::{
    affine_r, all_paths, combinatorial_r, energy_h, is_highest, kashiwara, pair_energies, r_propagate,
    weight, AffineElement, Direction, RectTableau, TensorPath,
};
use kr_paths::statistics::maj;
use kr_paths::tableaux::{all_words, Letter};

const SHAPES: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)];

fn rect(n: Letter) -> impl Strategy<Value = RectTableau> {
    (0..SHAPES.len(), any::<prop::sample::Index>()).prop_map(move |(k, ix)| {
        let (r, s) = SHAPES[k];
        let all = RectTableau::all(r, s, n);
        all[ix.index(all.len())].clone()
    })
}

fn path(n: Letter, len: usize) -> impl Strategy<Value = TensorPath> {
    prop::collection::vec(rect(n), 1..=len).prop_map(move |f| TensorPath::new(f, n).unwrap())
}

/// Tensor-product rule peeled one letter at a time: `f_i(x ⊗ y) = f_i x ⊗ y`
/// when `φ_i(x) > ε_i(y)`, else `x ⊗ f_i y`; `e_i(x ⊗ y) = e_i x ⊗ y` when
/// `φ_i(x) ≥ ε_i(y)`, else `x ⊗ e_i y`.
fn word_op(w: &[Letter], i: Letter, lower: bool) -> Option<Vec<Letter>> {
    fn eps_phi(w: &[Letter], i: Letter) -> (usize, usize) {
        let (mut e, mut p) = (0usize, 0usize);
        for &x in w {
            let (ex, px) = (usize::from(x == i + 1), usize::from(x == i));
            let cancel = p.min(ex);
            e += ex - cancel;
            p = p - cancel + px;
        }
        (e, p)
    }
    let (head, tail) = w.split_first()?;
    let phi_x = usize::from(*head == i);
    let (eps_y, _) = eps_phi(tail, i);
    let on_head = if lower { phi_x > eps_y } else { phi_x >= eps_y };
    if on_head {
        let new = match (lower, *head) {
            (true, x) if x == i => i + 1,
            (false, x) if x == i + 1 => i,
            _ => return None,
        };
        let mut out = vec![new];
        out.extend_from_slice(tail);
        Some(out)
    } else {
        let rest = word_op(tail, i, lower)?;
        let mut out = vec![*head];
        out.extend(rest);
        Some(out)
    }
}

#[test]
fn kashiwara_matches_tensor_rule_on_words() {
    for len in 1..=5 {
        for w in all_words(4, len) {
            let p = TensorPath::from_word(&w).unwrap().with_rank(4).unwrap();
            for i in 1..4 {
                for (dir, lower) in [(Direction::Lower, true), (Direction::Raise, false)] {
                    let got = kashiwara(&p, i, dir).unwrap().map(|q| q.as_word().unwrap());
                    assert_eq!(got, word_op(&w, i, lower), "{w:?} i={i} lower={lower}");
                }
            }
        }
    }
}

#[test]
fn kashiwara_index_out_of_range() {
    let p = TensorPath::parse("1213").unwrap();
    assert!(kashiwara(&p, 0, Direction::Raise).is_err());
    assert!(kashiwara(&p, 3, Direction::Lower).is_err());
}

#[test]
fn r_involution_exhaustive() {
    for &(r, s) in &[(2, 1), (1, 2)] {
        for &(r2, s2) in &[(2, 1), (1, 2)] {
            for b in RectTableau::all(r, s, 3) {
                for b2 in RectTableau::all(r2, s2, 3) {
                    let x = combinatorial_r(&b, &b2);
                    let y = combinatorial_r(&x.left, &x.right);
                    assert_eq!((y.left, y.right), (b.clone(), b2.clone()));
                }
            }
        }
    }
}

#[test]
fn highest_paths_are_killed_by_all_raising() {
    for p in all_paths(&[(1, 2), (2, 1), (1, 1)], 3) {
        let killed = (1..3).all(|i| kashiwara(&p, i, Direction::Raise).unwrap().is_none());
        assert_eq!(killed, is_highest(&p), "{p}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn raise_inverts_lower(p in path(4, 4), i in 1u32..4) {
        if let Some(q) = kashiwara(&p, i, Direction::Lower).unwrap() {
            prop_assert_eq!(kashiwara(&q, i, Direction::Raise).unwrap(), Some(p.clone()));
            let (wp, wq) = (weight(&p), weight(&q));
            let k = i as usize - 1;
            prop_assert_eq!(wq.part(k) + 1, wp.part(k));
            prop_assert_eq!(wq.part(k + 1), wp.part(k + 1) + 1);
        }
        if let Some(q) = kashiwara(&p, i, Direction::Raise).unwrap() {
            prop_assert_eq!(kashiwara(&q, i, Direction::Lower).unwrap(), Some(p));
        }
    }

    #[test]
    fn r_commutes_with_operators(b in rect(4), b2 in rect(4), i in 1u32..4) {
        let x = TensorPath::new(vec![b.clone(), b2.clone()], 4).unwrap();
        let img = combinatorial_r(&b, &b2);
        let y = TensorPath::new(vec![img.left, img.right], 4).unwrap();
        prop_assert_eq!(weight(&x), weight(&y));
        for dir in [Direction::Lower, Direction::Raise] {
            let fx = kashiwara(&x, i, dir).unwrap();
            let fy = kashiwara(&y, i, dir).unwrap();
            match (fx, fy) {
                (None, None) => {}
                (Some(fx), Some(fy)) => {
                    let f = fx.factors();
                    let r = combinatorial_r(&f[0], &f[1]);
                    prop_assert_eq!(&r.left, &fy.factors()[0]);
                    prop_assert_eq!(&r.right, &fy.factors()[1]);
                    prop_assert_eq!(r.h, img.h, "energy is constant on components");
                }
                (a, b) => prop_assert!(false, "{a:?} vs {b:?}"),
            }
        }
    }

    #[test]
    fn affine_mode_sum_conserved(b in rect(4), b2 in rect(4), d in -5i64..5, d2 in -5i64..5) {
        let (x, y) = affine_r(&AffineElement { b: b.clone(), d }, &AffineElement { b: b2.clone(), d: d2 });
        prop_assert_eq!(x.d + y.d, d + d2);
        prop_assert_eq!(x.b.s(), b2.s());
        prop_assert_eq!(y.d - d, energy_h(&b, &b2) as i64);
    }

    #[test]
    fn r_propagate_shapes_and_maj(p in path(4, 5)) {
        let f = p.factors();
        let mut total = 0;
        for i in 0..p.len() {
            let moved = r_propagate(&p, i).unwrap();
            prop_assert_eq!(&moved[0], &f[i]);
            for (k, x) in moved.iter().enumerate() {
                prop_assert_eq!((x.r(), x.s()), (f[i + k].r(), f[i + k].s()));
            }
            if i + 1 < p.len() {
                let next = r_propagate(&p, i + 1).unwrap();
                for x in next {
                    total += energy_h(&f[i], &x);
                }
            }
        }
        prop_assert_eq!(total, maj(&p));
        let pe: usize = pair_energies(&p).iter().flatten().sum();
        prop_assert_eq!(pe, total);
    }

    #[test]
    fn maj_by_full_reshuffling(p in path(3, 4)) {
        // Route two: physically move factor j next to factor i by R-swaps
        // on the whole path, then read off the local energy.
        let f = p.factors().to_vec();
        let mut total = 0;
        for j in 1..f.len() {
            for i in 0..j {
                let mut v = f.clone();
                for k in (i + 1..j).rev() {
                    let img = combinatorial_r(&v[k], &v[k + 1]);
                    v[k] = img.left;
                    v[k + 1] = img.right;
                }
                prop_assert_eq!(weight(&TensorPath::new(v.clone(), 3).unwrap()), weight(&p));
                total += energy_h(&v[i], &v[i + 1]);
            }
        }
        prop_assert_eq!(total, maj(&p));
    }
}
