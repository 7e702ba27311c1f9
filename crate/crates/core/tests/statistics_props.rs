use proptest::prelude::*;

use kr_paths::crystal::{energy_h, RectTableau, TensorPath};
use kr_paths::polynomials::{kostka_foulkes, parabolic_kostka, RectangleSequence};
use kr_paths::statistics::{
    charge, ebar, haglund_des, haglund_des_path, haglund_inv_count, haglund_inv_count_path, maj,
    pair_box_sum, tau, tau_rs, tau_word,
};
use kr_paths::tableaux::Letter;
use kr_paths::verify::sweep_regularization;
use kr_paths::{Partition, QPoly};

fn q_int(n: usize) -> QPoly {
    QPoly::from_exponents((0..n as i64).collect::<Vec<_>>())
}

/// `q^{n(λ')} [n]_q! / Π_cells [hook]_q`.
fn q_hook(lam: &Partition) -> QPoly {
    let n = lam.size();
    let conj = lam.conjugate();
    let mut num = QPoly::one();
    for k in 1..=n {
        num = num * q_int(k);
    }
    for i in 0..lam.len() {
        for j in 0..lam.part(i) {
            let hook = lam.part(i) - j + conj.part(j) - i - 1;
            num = num.div_exact(&q_int(hook)).unwrap();
        }
    }
    num.shift(conj.n() as i64)
}

#[test]
fn kostka_foulkes_standard_weight_is_q_hook() {
    for n in 1..=6 {
        let ones = Partition::new(vec![1; n]).unwrap();
        for lam in Partition::all(n) {
            assert_eq!(kostka_foulkes(&lam, &ones).unwrap(), q_hook(&lam), "{lam}");
        }
    }
}

#[test]
fn parabolic_with_rows_is_kostka_foulkes() {
    for n in 1..=6 {
        for mu in Partition::all(n) {
            let rows = RectangleSequence::rows_of(&mu);
            for lam in Partition::all(n) {
                assert_eq!(parabolic_kostka(&lam, &rows).unwrap(), kostka_foulkes(&lam, &mu).unwrap(), "{lam} {mu}");
            }
        }
    }
}

#[test]
fn charge_rejects_non_partition_content() {
    assert!(charge(&[2, 2, 1]).is_err());
    assert_eq!(charge(&[2, 1, 1]).unwrap(), 1);
}

#[test]
fn highest_carrier_has_zero_energy() {
    let shapes = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)];
    for &(r2, s2) in &shapes {
        for n in 1..=4 {
            for b in RectTableau::all(r2, s2, n) {
                let top = b.max_letter() as usize;
                for r in top.max(1)..=top + 1 {
                    for s in s2..=s2 + 1 {
                        assert_eq!(energy_h(&RectTableau::highest(r, s), &b), 0, "{r}x{s} against {b}");
                    }
                }
            }
        }
    }
}

fn mixed_path() -> impl Strategy<Value = TensorPath> {
    let shapes = [(1, 1), (1, 2), (2, 1), (2, 2)];
    prop::collection::vec((0..shapes.len(), any::<prop::sample::Index>()), 1..=4).prop_map(move |v| {
        let f = v
            .into_iter()
            .map(|(k, ix)| {
                let all = RectTableau::all(shapes[k].0, shapes[k].1, 4);
                all[ix.index(all.len())].clone()
            })
            .collect();
        TensorPath::new(f, 4).unwrap()
    })
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all(n);
    any::<prop::sample::Index>().prop_map(move |ix| all[ix.index(all.len())].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tau_by_energy_matches_word_formula(w in prop::collection::vec(1u32..=4, 1..=9)) {
        let p = TensorPath::from_word(&w).unwrap();
        prop_assert_eq!(tau(&p).unwrap(), tau_word(&w));
    }

    #[test]
    fn energy_and_coenergy_sum_to_box_count(p in mixed_path()) {
        prop_assert_eq!(maj(&p) + ebar(&p), pair_box_sum(&p.shapes()));
    }

    #[test]
    fn tau_stabilizes_in_r(p in mixed_path(), s in 2usize..=3) {
        let n = p.max_letter() as usize;
        let smax = p.shapes().iter().map(|x| x.1).max().unwrap();
        let s = s.max(smax);
        let base = tau_rs(&p, n, s);
        prop_assert_eq!(tau_rs(&p, n + 1, s), base);
        prop_assert_eq!(tau_rs(&p, n + 3, s + 1), base);
        prop_assert_eq!(base + ebar(&p), pair_box_sum(&p.shapes()));
    }

    #[test]
    fn haglund_tableau_and_path_agree(
        (mu, w) in (3usize..=7).prop_flat_map(|n| (partition_of(n), prop::collection::vec(1 as Letter..=4, n)))
    ) {
        prop_assert_eq!(haglund_inv_count(&w, &mu).unwrap(), haglund_inv_count_path(&w, &mu).unwrap());
        prop_assert_eq!(haglund_des(&w, &mu).unwrap(), haglund_des_path(&w, &mu).unwrap());
    }
}

#[test]
fn regularization_shift_is_constant() {
    let reports = sweep_regularization(5).unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        assert!(r.verdict.passed(), "{r}");
    }
}
