//! Checkers for the generating-function identities among path statistics
//! and Kostka-type polynomials. Each checker computes both sides exactly and
//! returns a [`VerificationReport`].

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{highest_paths, paths_of_weight, TensorPath};
use crate::error::{Error, Result};
use crate::poly::{QPoly, QTPoly};
use crate::polynomials::{
    hhl_highest_gf, kostka_foulkes, kostka_macdonald, kostka_macdonald_table, kostka_number, parabolic_kostka,
    RectangleSequence,
};
use crate::statistics::{block_maj, ebar, pair_box_sum, regularize, tau_mu, tau_rs, tau_word};
use crate::tableaux::{words_with_content, Composition, Letter, Partition};

/// Outcome of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Both sides equal exactly.
    #[serde(rename = "PASS")]
    Pass,
    /// Equal after multiplying the right side by `q^shift`.
    #[serde(rename = "PASS_AFTER_SHIFT")]
    PassAfterShift,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self != Verdict::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "PASS",
            Verdict::PassAfterShift => "PASS after shift",
            Verdict::Fail => "FAIL",
        };
        write!(f, "{s}")
    }
}

/// One side of a comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Side {
    Q(QPoly),
    QT(QTPoly),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Q(p) => write!(f, "{p}"),
            Side::QT(p) => write!(f, "{p}"),
        }
    }
}

/// Both sides of an identity with the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub lhs: Side,
    pub rhs: Side,
    pub verdict: Verdict,
    /// Power of `q` applied to the right side, when one was fitted.
    pub fitted_shift: Option<i64>,
    /// Whether the identity was expected to hold, for classified conjectures.
    pub predicted: Option<bool>,
    /// A witness when the check failed pathwise.
    pub counterexample: Option<String>,
}

impl VerificationReport {
    fn new(identity: &str, params: &[(&str, String)], lhs: Side, rhs: Side, verdict: Verdict) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            lhs,
            rhs,
            verdict,
            fitted_shift: None,
            predicted: None,
            counterexample: None,
        }
    }

    /// Canonical JSON value (object keys sorted).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn summary_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut s = format!("{:<6} {} {}", self.verdict.to_string().split(' ').next().unwrap(), self.identity, params.join(" "));
        if let Some(k) = self.fitted_shift {
            s.push_str(&format!(" shift={k}"));
        }
        if let Some(p) = self.predicted {
            s.push_str(&format!(" predicted={}", if p { "holds" } else { "fails" }));
        }
        s
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary_line())?;
        writeln!(f, "  lhs: {}", self.lhs)?;
        write!(f, "  rhs: {}", self.rhs)?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}

fn exact(lhs: &QPoly, rhs: &QPoly) -> Verdict {
    if lhs == rhs {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Finds `k` with `lhs = q^k rhs`, matching lowest degrees.
fn fit_shift(lhs: &QPoly, rhs: &QPoly) -> (Verdict, Option<i64>) {
    match (lhs.min_degree(), rhs.min_degree()) {
        (None, None) => (Verdict::Pass, Some(0)),
        (Some(a), Some(b)) => {
            let k = a - b;
            if *lhs != rhs.shift(k) {
                (Verdict::Fail, Some(k))
            } else if k == 0 {
                (Verdict::Pass, Some(0))
            } else {
                (Verdict::PassAfterShift, Some(k))
            }
        }
        _ => (Verdict::Fail, None),
    }
}

/// `Σ_η K_{ηα} K̃_{ημ}(q,1)`.
fn hhl_schur_side(alpha: &Composition, mu: &Partition) -> Result<QPoly> {
    let table = kostka_macdonald_table(mu)?;
    let mut rhs = QPoly::zero();
    for (eta, k) in table.iter() {
        let kn = kostka_number(eta, alpha)?;
        if kn > 0 {
            rhs += &k.at_t_one().scale(&kn.into());
        }
    }
    Ok(rhs)
}

fn size_check(a: usize, b: usize, what: &str) -> Result<()> {
    if a != b {
        return Err(Error::SizeMismatch(format!("{what}: {a} vs {b}")));
    }
    Ok(())
}

/// `Σ_{p ∈ P(α)} q^{Σ_i maj(p_{[i]})}` against `Σ_η K_{ηα} K̃_{ημ}(q,1)`.
pub fn check_theorem_main(alpha: &Composition, mu: &Partition) -> Result<VerificationReport> {
    size_check(alpha.size(), mu.size(), "|α| vs |μ|")?;
    let mc = mu.to_composition();
    let lhs = QPoly::from_exponents(
        words_with_content(alpha).iter().map(|w| block_maj(w, &mc).map(|x| x as i64)).collect::<Result<Vec<_>>>()?,
    );
    let rhs = hhl_schur_side(alpha, mu)?;
    let v = exact(&lhs, &rhs);
    Ok(VerificationReport::new(
        "theorem-main",
        &[("alpha", alpha.to_string()), ("mu", mu.to_string())],
        Side::Q(lhs),
        Side::Q(rhs),
        v,
    ))
}

/// `q^{−Σ_{i≥2} α_i} Σ_{p ∈ P(α)} q^{τ_μ(p)}` against `Σ_η K_{ηα} K̃_{ημ}(q,1)`.
pub fn check_conjecture_main(alpha: &Composition, mu: &Partition) -> Result<VerificationReport> {
    size_check(alpha.size(), mu.size(), "|α| vs |μ|")?;
    let mc = mu.to_composition();
    let pre = -((alpha.size() - alpha.part(0)) as i64);
    let lhs = QPoly::from_exponents(
        words_with_content(alpha)
            .iter()
            .map(|w| tau_mu(w, &mc).map(|x| x as i64 + pre))
            .collect::<Result<Vec<_>>>()?,
    );
    let rhs = hhl_schur_side(alpha, mu)?;
    let v = exact(&lhs, &rhs);
    Ok(VerificationReport::new(
        "conjecture-main",
        &[("alpha", alpha.to_string()), ("mu", mu.to_string())],
        Side::Q(lhs),
        Side::Q(rhs),
        v,
    ))
}

/// Whether the highest-path formula for `K̃_{λμ}` is expected to hold:
/// `(μ_1 ≤ 3 and μ_2 ≤ 2)` or `λ` a hook.
pub fn hhl_kostka_predicted(lambda: &Partition, mu: &Partition) -> bool {
    (mu.part(0) <= 3 && mu.part(1) <= 2) || lambda.is_hook()
}

/// `K̃_{λμ}(q,t)` against `Σ_{highest p of weight λ} q^{inv_μ} t^{maj_μ}`.
pub fn check_hhl_kostka(lambda: &Partition, mu: &Partition) -> Result<VerificationReport> {
    size_check(lambda.size(), mu.size(), "|λ| vs |μ|")?;
    let lhs = kostka_macdonald(lambda, mu)?;
    let rhs = hhl_highest_gf(mu, lambda)?;
    let v = if lhs == rhs { Verdict::Pass } else { Verdict::Fail };
    let mut r = VerificationReport::new(
        "hhl-kostka",
        &[("lambda", lambda.to_string()), ("mu", mu.to_string())],
        Side::QT(lhs),
        Side::QT(rhs),
        v,
    );
    r.predicted = Some(hhl_kostka_predicted(lambda, mu));
    Ok(r)
}

/// `Σ_η K_{η,R}(q^{-1}) K_{ηλ}`, or with `q` when `invert` is false.
fn parabolic_schur_side(r: &RectangleSequence, lambda: &Composition, invert: bool) -> Result<QPoly> {
    let mut rhs = QPoly::zero();
    for eta in Partition::all(lambda.size()) {
        if eta.len() > lambda.len() {
            continue;
        }
        let kn = kostka_number(&eta, lambda)?;
        if kn == 0 {
            continue;
        }
        let k = parabolic_kostka(&eta, r)?;
        let k = if invert { k.invert() } else { k };
        rhs += &k.scale(&kn.into());
    }
    Ok(rhs)
}

/// `Σ_{wt p = λ} q^{τ^{r,s}(p)}` against `q^{φ} Σ_η K_{η,R}(q^{-1}) K_{ηλ}`
/// with `φ` fitted.
pub fn check_conj_tau(rects: &RectangleSequence, lambda: &Composition, r: usize, s: usize) -> Result<VerificationReport> {
    size_check(rects.size(), lambda.size(), "|R| vs |λ|")?;
    let paths = paths_of_weight(rects.rects(), lambda);
    let lhs = QPoly::from_exponents(paths.par_iter().map(|p| tau_rs(p, r, s) as i64).collect::<Vec<_>>());
    let rhs = parabolic_schur_side(rects, lambda, true)?;
    let (v, k) = fit_shift(&lhs, &rhs);
    let mut rep = VerificationReport::new(
        "conj-tau",
        &[
            ("rects", rects.to_string()),
            ("lambda", lambda.to_string()),
            ("r", r.to_string()),
            ("s", s.to_string()),
        ],
        Side::Q(lhs),
        Side::Q(rhs),
        v,
    );
    rep.fitted_shift = k;
    Ok(rep)
}

/// `Σ_{wt p = λ} q^{Ē(p)}` against `Σ_η K_{η,R}(q) K_{ηλ}`.
pub fn check_conj_ebar(rects: &RectangleSequence, lambda: &Composition) -> Result<VerificationReport> {
    size_check(rects.size(), lambda.size(), "|R| vs |λ|")?;
    let paths = paths_of_weight(rects.rects(), lambda);
    let lhs = QPoly::from_exponents(paths.par_iter().map(|p| ebar(p) as i64).collect::<Vec<_>>());
    let rhs = parabolic_schur_side(rects, lambda, false)?;
    let v = exact(&lhs, &rhs);
    Ok(VerificationReport::new(
        "conj-ebar",
        &[("rects", rects.to_string()), ("lambda", lambda.to_string())],
        Side::Q(lhs),
        Side::Q(rhs),
        v,
    ))
}

/// `Ē(p) = C − τ^{r,s}(p)` with `C = Σ_{i<j} min(r_i,r_j) min(s_i,s_j)` on
/// every given path. Requires `r` at least the largest letter and `s` at
/// least every factor width.
pub fn check_e_tau(paths: &[TensorPath], r: usize, s: usize) -> Result<VerificationReport> {
    for p in paths {
        if (p.max_letter() as usize) > r || p.factors().iter().any(|b| b.s() > s) {
            return Err(Error::Precondition(format!("τ^({r},{s}) needs r ≥ max letter and s ≥ widths for {p}")));
        }
    }
    let rows: Vec<(usize, i64)> = paths
        .par_iter()
        .map(|p| (ebar(p), pair_box_sum(&p.shapes()) as i64 - tau_rs(p, r, s) as i64))
        .collect();
    let lhs = QPoly::from_exponents(rows.iter().map(|&(e, _)| e as i64));
    let rhs = QPoly::from_exponents(rows.iter().map(|&(_, c)| c));
    let bad = rows.iter().position(|&(e, c)| e as i64 != c);
    let mut rep = VerificationReport::new(
        "e-tau",
        &[("paths", paths.len().to_string()), ("r", r.to_string()), ("s", s.to_string())],
        Side::Q(lhs),
        Side::Q(rhs),
        if bad.is_some() { Verdict::Fail } else { Verdict::Pass },
    );
    rep.counterexample = bad.map(|i| paths[i].to_string());
    Ok(rep)
}

/// `τ(reg(p)) − τ(p)` over all `B^{1,1}` paths of weight `λ`. The left side
/// collects `q^{τ(reg p) − τ(p)}`; it passes when a single exponent occurs,
/// reported as the fitted shift.
pub fn check_regularization(lambda: &Composition) -> Result<VerificationReport> {
    if lambda.parts().contains(&0) || lambda.is_empty() {
        return Err(Error::Precondition(format!("weight {lambda} needs positive parts")));
    }
    let words = words_with_content(lambda);
    let diffs: Vec<i64> = words
        .iter()
        .map(|w| tau_word(&regularize(w)) as i64 - tau_word(w) as i64)
        .collect();
    let lhs = QPoly::from_exponents(diffs.iter().copied());
    let c = diffs[0];
    let rhs = QPoly::monomial(c, words.len());
    let mut rep = VerificationReport::new("regularization", &[("lambda", lambda.to_string())], Side::Q(lhs.clone()), Side::Q(rhs.clone()), exact(&lhs, &rhs));
    rep.fitted_shift = Some(c);
    Ok(rep)
}

/// `K_{λ,R}(q)` against `q^{n(R)} K_{λ',R'}(q^{-1})`, `R'` the transposed
/// rectangles in dominant order.
pub fn check_duality(lambda: &Partition, rects: &RectangleSequence) -> Result<VerificationReport> {
    let lhs = parabolic_kostka(lambda, rects)?;
    let dual = rects.transpose().dominant();
    let rhs = parabolic_kostka(&lambda.conjugate(), &dual)?.invert().shift(rects.n() as i64);
    let v = exact(&lhs, &rhs);
    Ok(VerificationReport::new(
        "duality",
        &[("lambda", lambda.to_string()), ("rects", rects.to_string())],
        Side::Q(lhs),
        Side::Q(rhs),
        v,
    ))
}

/// The partitions `Λ` and rectangles `κ` attached to a rectangle sequence:
/// `r_i` rows of length `Σ_{a≥i} s_a`, and `r_i × Σ_{a>i} s_a` rectangles.
pub fn lambda_kappa(r1: &RectangleSequence) -> (Partition, Vec<(usize, usize)>) {
    let rs = r1.rects();
    let mut big = Vec::new();
    let mut kappa = Vec::new();
    for (i, &(r, _)) in rs.iter().enumerate() {
        let tail: usize = rs[i..].iter().map(|x| x.1).sum();
        let tail1: usize = rs[i + 1..].iter().map(|x| x.1).sum();
        big.extend(std::iter::repeat_n(tail, r));
        if tail1 > 0 {
            kappa.push((r, tail1));
        }
    }
    (Partition::new(big).expect("tails decrease"), kappa)
}

/// `K_{Λ,(κ,R)}(q)` summed over Littlewood-Richardson paths: highest paths
/// of weight `Λ` in `⊗_i B^{κ_i} ⊗ B^R` whose `κ` factors stack into the
/// superstandard tableau (row `k` of the stack filled with the letter `k`).
fn lr_kostka(big: &Partition, kappa: &[(usize, usize)], rest: &[(usize, usize)]) -> QPoly {
    let mut seq = kappa.to_vec();
    seq.extend_from_slice(rest);
    let superstandard = |p: &TensorPath| {
        let mut row = 0;
        p.factors()[..kappa.len()].iter().all(|b| {
            b.rows().iter().all(|r| {
                row += 1;
                r.iter().all(|&x| x as usize == row)
            })
        })
    };
    QPoly::from_exponents(
        highest_paths(&seq, &big.to_composition())
            .iter()
            .filter(|p| superstandard(p))
            .map(|p| ebar(p) as i64),
    )
}

/// `Σ_η K_{η,R_1}(1) K_{η,R_2}(q)` against `q^C K_{Λ,(κ,R_2)}(q^{-1})` with
/// `C` fitted; the right side is restricted as in [`lr_kostka`].
pub fn check_conj_genmainth(r1: &RectangleSequence, r2: &RectangleSequence) -> Result<VerificationReport> {
    size_check(r1.size(), r2.size(), "|R1| vs |R2|")?;
    let mut lhs = QPoly::zero();
    for eta in Partition::all(r1.size()) {
        let a = parabolic_kostka(&eta, r1)?.eval_one();
        if a != 0.into() {
            lhs += &parabolic_kostka(&eta, r2)?.scale(&a);
        }
    }
    let (big, kappa) = lambda_kappa(r1);
    let rhs = lr_kostka(&big, &kappa, r2.rects()).invert();
    let (v, k) = fit_shift(&lhs, &rhs);
    let mut rep = VerificationReport::new(
        "conj-genmainth",
        &[("r1", r1.to_string()), ("r2", r2.to_string())],
        Side::Q(lhs),
        Side::Q(rhs),
        v,
    );
    rep.fitted_shift = k;
    Ok(rep)
}

/// `Σ_η K_{ημ} K_{ηλ}(q)` against `q^{C} K_{Λ,(κ,λ)}(q^{-1})` with `C`
/// fitted; the right side is restricted as in [`lr_kostka`].
pub fn check_cor_rows(mu: &Partition, lambda: &Partition) -> Result<VerificationReport> {
    size_check(mu.size(), lambda.size(), "|μ| vs |λ|")?;
    let mut lhs = QPoly::zero();
    for eta in Partition::all(mu.size()) {
        let a = kostka_number(&eta, &mu.to_composition())?;
        if a > 0 {
            lhs += &kostka_foulkes(&eta, lambda)?.scale(&a.into());
        }
    }
    let (big, kappa) = lambda_kappa(&RectangleSequence::rows_of(mu));
    let rows: Vec<(usize, usize)> = lambda.parts().iter().map(|&l| (1, l)).collect();
    let rhs = lr_kostka(&big, &kappa, &rows).invert();
    let (v, k) = fit_shift(&lhs, &rhs);
    let mut rep = VerificationReport::new(
        "cor-rows",
        &[("mu", mu.to_string()), ("lambda", lambda.to_string())],
        Side::Q(lhs),
        Side::Q(rhs),
        v,
    );
    rep.fitted_shift = k;
    Ok(rep)
}

/// Every `(α, μ)` with `α` a composition (positive parts) and `μ` a
/// partition of the same size `1..=max`, in a fixed order.
pub fn alpha_mu_grid(max_size: usize) -> Vec<(Composition, Partition)> {
    let mut v = Vec::new();
    for n in 1..=max_size {
        for mu in Partition::all(n) {
            for a in Composition::all_strong(n) {
                v.push((a, mu.clone()));
            }
        }
    }
    v
}

/// Every `(λ, μ)` of equal size `1..=max`.
pub fn lambda_mu_grid(max_size: usize) -> Vec<(Partition, Partition)> {
    let mut v = Vec::new();
    for n in 1..=max_size {
        let ps = Partition::all(n);
        for mu in &ps {
            for l in &ps {
                v.push((l.clone(), mu.clone()));
            }
        }
    }
    v
}

fn warm_tables(max_size: usize) -> Result<()> {
    let mus: Vec<Partition> = (1..=max_size).flat_map(Partition::all).collect();
    mus.par_iter().map(kostka_macdonald_table).collect::<Result<Vec<_>>>()?;
    Ok(())
}

/// [`check_theorem_main`] over [`alpha_mu_grid`].
pub fn sweep_theorem_main(max_size: usize) -> Result<Vec<VerificationReport>> {
    warm_tables(max_size)?;
    alpha_mu_grid(max_size).par_iter().map(|(a, m)| check_theorem_main(a, m)).collect()
}

/// [`check_conjecture_main`] over [`alpha_mu_grid`].
pub fn sweep_conjecture_main(max_size: usize) -> Result<Vec<VerificationReport>> {
    warm_tables(max_size)?;
    alpha_mu_grid(max_size).par_iter().map(|(a, m)| check_conjecture_main(a, m)).collect()
}

/// [`check_hhl_kostka`] over [`lambda_mu_grid`], optionally restricted to `μ_1 ≤ 2`.
pub fn sweep_hhl_kostka(max_size: usize, narrow_only: bool) -> Result<Vec<VerificationReport>> {
    warm_tables(max_size)?;
    lambda_mu_grid(max_size)
        .into_iter()
        .filter(|(_, m)| !narrow_only || m.part(0) <= 2)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(l, m)| check_hhl_kostka(l, m))
        .collect()
}

/// [`check_regularization`] over every composition with positive parts of size `1..=max`.
pub fn sweep_regularization(max_size: usize) -> Result<Vec<VerificationReport>> {
    (1..=max_size)
        .flat_map(Composition::all_strong)
        .collect::<Vec<_>>()
        .par_iter()
        .map(check_regularization)
        .collect()
}

/// [`check_conj_ebar`] over every composition with positive parts of size `|R|`.
pub fn sweep_conj_ebar(rects: &RectangleSequence) -> Result<Vec<VerificationReport>> {
    Composition::all_strong(rects.size())
        .par_iter()
        .map(|l| check_conj_ebar(rects, l))
        .collect()
}

/// Words of a given weight as `B^{1,1}` paths.
pub fn word_paths(alpha: &Composition) -> Vec<Vec<Letter>> {
    words_with_content(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn test_theorem_main_anchor() {
        let r = check_theorem_main(&Composition::new(vec![4, 1, 1]), &part(&[4, 2])).unwrap();
        let want = QPoly::from_terms([(5, 1), (4, 4), (3, 7), (2, 7), (1, 7), (0, 4)]);
        assert_eq!(r.lhs, Side::Q(want.clone()));
        assert_eq!(r.rhs, Side::Q(want));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn test_conjecture_main_anchor() {
        let r = check_conjecture_main(&Composition::new(vec![4, 1, 1]), &part(&[4, 2])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let r = check_conjecture_main(&Composition::new(vec![5]), &part(&[3, 2])).unwrap();
        assert_eq!(r.lhs, Side::Q(QPoly::one()));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn test_regularization_constant() {
        let r = check_regularization(&Composition::new(vec![1, 3, 3])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.fitted_shift, Some(39));
        let r = check_regularization(&Composition::new(vec![4])).unwrap();
        assert_eq!(r.fitted_shift, Some(0));
    }

    #[test]
    fn test_lambda_kappa() {
        let (b, k) = lambda_kappa(&RectangleSequence::parse("1x3,1x2,1x1").unwrap());
        assert_eq!(b.parts(), &[6, 3, 1]);
        assert_eq!(k, vec![(1, 3), (1, 1)]);
    }
}
