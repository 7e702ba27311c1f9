use proptest::prelude::*;

use kr_paths::tableaux::{
    all_words, content, enumerate_ssyt, gt_from_ssyt, kostka_number, macmahon_count, macmahon_product,
    matrix_from_tabloid_cols, plane_partition_from_pair, row_insert, rsk, tabloid_from_matrix,
    Composition, Letter, TransportationMatrix,
};
use kr_paths::{Partition, Ssyt};

fn word(max: Letter, len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(1..=max, 0..=len)
}

fn matrix() -> impl Strategy<Value = TransportationMatrix> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(a, b)| prop::collection::vec(prop::collection::vec(0usize..=2, b), a))
        .prop_map(|m| TransportationMatrix::new(m).unwrap())
}

/// Schensted insertion done from scratch: bump the leftmost strictly larger entry.
fn naive_insert(rows: &mut Vec<Vec<Letter>>, mut x: Letter) {
    for r in rows.iter_mut() {
        match r.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut r[k], x),
            None => {
                r.push(x);
                return;
            }
        }
    }
    rows.push(vec![x]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn insertion_matches_naive_bumping(w in word(5, 12)) {
        let t = row_insert(&Ssyt::empty(), &w);
        let mut rows = Vec::new();
        for &x in &w {
            naive_insert(&mut rows, x);
        }
        prop_assert_eq!(t.rows(), rows.as_slice());
        let mut c = content(&w).parts().to_vec();
        c.resize(5, 0);
        prop_assert_eq!(t.content(5), Composition::new(c));
    }

    #[test]
    fn inverse_bump_undoes_insertion(w in word(5, 12)) {
        let mut t = Ssyt::empty();
        let mut cells = Vec::new();
        for &x in &w {
            cells.push(t.insert(x));
        }
        let full = t.clone();
        let mut out = Vec::new();
        for &(r, c) in cells.iter().rev() {
            let before = t.clone();
            let x = t.inverse_bump(r, c).unwrap();
            prop_assert_eq!(row_insert(&t, &[x]), before);
            out.push(x);
        }
        out.reverse();
        prop_assert_eq!(out, w);
        prop_assert_eq!(t, Ssyt::empty());
        prop_assert!(full.corners().iter().all(|&(r, c)| full.rows()[r].len() == c + 1));
    }

    #[test]
    fn rsk_margins_and_tabloid_round_trip(m in matrix()) {
        let (p, q) = rsk(&m);
        prop_assert_eq!(p.shape(), q.shape());
        let cols = m.entries()[0].len();
        prop_assert_eq!(p.content(cols), m.col_sums());
        prop_assert_eq!(q.content(m.entries().len()), m.row_sums());
        let t = tabloid_from_matrix(&m);
        prop_assert_eq!(matrix_from_tabloid_cols(&t, cols).unwrap(), m);
    }

    #[test]
    fn plane_partition_diagonal_sums(m in matrix()) {
        let (p, q) = rsk(&m);
        prop_assume!(p.size() > 0);
        let pp = plane_partition_from_pair(&p, &q).unwrap();
        prop_assert!(pp.is_valid());
        // Diagonal k below (above) the main one sums the letters ≤ N − k of P (Q).
        let n = pp.entries().len();
        let mut beta = m.col_sums().parts().to_vec();
        let mut alpha = m.row_sums().parts().to_vec();
        beta.resize(n, 0);
        alpha.resize(n, 0);
        for k in 0..n {
            prop_assert_eq!(pp.diagonal_sum(-(k as isize)), beta[..n - k].iter().sum::<usize>());
            prop_assert_eq!(pp.diagonal_sum(k as isize), alpha[..n - k].iter().sum::<usize>());
        }
    }

    #[test]
    fn gt_pattern_interlaces(w in word(4, 10)) {
        let t = row_insert(&Ssyt::empty(), &w);
        let g = gt_from_ssyt(&t, 4).unwrap();
        prop_assert!(g.is_interlacing());
        let mut top: Vec<usize> = t.shape().parts().to_vec();
        top.resize(4, 0);
        prop_assert_eq!(g.row(4), top.as_slice());
    }
}

#[test]
fn kostka_numbers_symmetric_in_weight() {
    for n in 1..=6 {
        for lam in Partition::all(n) {
            for alpha in Composition::all_strong(n) {
                let sorted = alpha.sorted().to_composition();
                assert_eq!(
                    kostka_number(&lam, &alpha).unwrap(),
                    kostka_number(&lam, &sorted).unwrap(),
                    "{lam} {alpha}"
                );
            }
        }
    }
}

#[test]
fn words_count_rsk_pairs() {
    // n^L words biject with pairs (P, Q), Q standard, P over n letters.
    for len in 1..=5 {
        let words = all_words(3, len);
        let pairs: usize = Partition::all(len)
            .iter()
            .map(|l| {
                let f = enumerate_ssyt(l, &Composition::new(vec![1; len])).unwrap().len();
                let p: usize = Composition::all_weak(len, 3).iter().map(|a| kostka_number(l, a).unwrap()).sum();
                f * p
            })
            .sum();
        assert_eq!(words.len(), pairs);
    }
}

#[test]
fn macmahon_small_boxes() {
    let brute = |n: usize| -> usize {
        // 2×2 arrays, weakly decreasing rows and columns, entries ≤ n.
        let mut c = 0;
        for a in 0..=n {
            for b in 0..=a {
                for d in 0..=a {
                    c += b.min(d) + 1;
                }
            }
        }
        c
    };
    assert_eq!(macmahon_count(2, 2, 2).unwrap().eval_one(), brute(2).into());
    assert_eq!(macmahon_count(2, 2, 2).unwrap(), macmahon_product(2, 2, 2));
    assert!(macmahon_count(3, 3, 4).is_err());
}
