//! Kostka-type polynomials: Kostka numbers, Kostka-Foulkes polynomials via
//! charge, parabolic Kostka polynomials via energy on highest paths,
//! monomial coefficients of modified Macdonald polynomials via the
//! Haglund-Haiman-Loehr statistics, and the modified Kostka-Macdonald
//! polynomials extracted from them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::crystal::highest_paths;
use crate::error::{Error, Result};
use crate::poly::{QPoly, QTPoly};
use crate::statistics::{charge, ebar, inv_mu, maj_mu};
use crate::tableaux::{enumerate_ssyt, words_with_content, Composition, Letter, Partition};

/// A sequence of rectangles `(r_i, s_i)`: `s_i` columns and `r_i` rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectangleSequence(Vec<(usize, usize)>);

impl RectangleSequence {
    pub fn new(rects: Vec<(usize, usize)>) -> Result<Self> {
        if rects.iter().any(|&(r, s)| r == 0 || s == 0) {
            return Err(Error::Precondition("rectangles need r, s ≥ 1".into()));
        }
        Ok(RectangleSequence(rects))
    }

    /// Parses comma-joined `RxS` tokens such as `3x2,2x2,2x2`.
    pub fn parse(s: &str) -> Result<Self> {
        let rects = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (r, c) = tok.split_once(['x', 'X']).ok_or_else(|| Error::Parse(tok.to_string()))?;
                let r: usize = r.parse().map_err(|_| Error::Parse(tok.to_string()))?;
                let c: usize = c.parse().map_err(|_| Error::Parse(tok.to_string()))?;
                if r == 0 || c == 0 {
                    return Err(Error::Parse(tok.to_string()));
                }
                Ok((r, c))
            })
            .collect::<Result<Vec<_>>>()?;
        RectangleSequence::new(rects)
    }

    pub fn rects(&self) -> &[(usize, usize)] {
        &self.0
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().map(|(r, s)| r * s).sum()
    }

    /// `n(R) = Σ_{a<b} min(r_a,r_b)·min(s_a,s_b)`.
    pub fn n(&self) -> usize {
        crate::statistics::pair_box_sum(&self.0)
    }

    /// Each rectangle transposed.
    pub fn transpose(&self) -> Self {
        RectangleSequence(self.0.iter().map(|&(r, s)| (s, r)).collect())
    }

    /// Rearranged by width descending, then height descending.
    pub fn dominant(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        RectangleSequence(v)
    }

    /// Single-row rectangles `(1, μ_i)`.
    pub fn rows_of(mu: &Partition) -> Self {
        RectangleSequence(mu.parts().iter().map(|&m| (1, m)).collect())
    }
}

impl fmt::Display for RectangleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|(r, s)| format!("{r}x{s}")).collect();
        write!(f, "{}", v.join(","))
    }
}

/// `n(μ) = Σ (i−1) μ_i`.
pub fn n_of(mu: &Partition) -> usize {
    mu.n()
}

/// `n(R)`.
pub fn n_of_r(r: &RectangleSequence) -> usize {
    r.n()
}

/// Number of SSYT of shape `λ` and content `α`.
pub fn kostka_number(lambda: &Partition, alpha: &Composition) -> Result<usize> {
    crate::tableaux::kostka_number(lambda, alpha)
}

/// `K_{λμ}(q) = Σ_T q^{charge(T)}` over SSYT of shape `λ` and content `μ`;
/// a tableau is read row by row from the top, each row right to left.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    let ts = enumerate_ssyt(lambda, &mu.to_composition())?;
    let mut p = QPoly::zero();
    for t in ts {
        let w: Vec<Letter> = t.rows().iter().flat_map(|r| r.iter().rev().copied()).collect();
        p.add_monomial(charge(&w)? as i64, BigInt::from(1));
    }
    Ok(p)
}

/// `K_{λ,R}(q) = Σ q^{Ē(p)}` over highest paths of weight `λ` in `⊗ B^{r_i,s_i}`.
pub fn parabolic_kostka(lambda: &Partition, r: &RectangleSequence) -> Result<QPoly> {
    if lambda.size() != r.size() {
        return Err(Error::SizeMismatch(format!("|λ| = {} vs |R| = {}", lambda.size(), r.size())));
    }
    Ok(QPoly::from_exponents(
        highest_paths(r.rects(), &lambda.to_composition()).iter().map(|p| ebar(p) as i64),
    ))
}

fn check_size(mu: &Partition, alpha: &Composition) -> Result<()> {
    if mu.size() != alpha.size() {
        return Err(Error::SizeMismatch(format!("|μ| = {} vs |α| = {}", mu.size(), alpha.size())));
    }
    Ok(())
}

/// `Σ_{p ∈ P(α)} q^{inv_μ(p)} t^{maj_μ(p)}`.
pub fn hhl_monomial_gf(mu: &Partition, alpha: &Composition) -> Result<QTPoly> {
    check_size(mu, alpha)?;
    hhl_sum(mu, words_with_content(alpha))
}

/// As [`hhl_monomial_gf`], restricted to highest paths (lattice words).
pub fn hhl_highest_gf(mu: &Partition, lambda: &Partition) -> Result<QTPoly> {
    check_size(mu, &lambda.to_composition())?;
    let words = words_with_content(&lambda.to_composition())
        .into_iter()
        .filter(|w| crate::crystal::is_lattice_word(w));
    hhl_sum(mu, words)
}

fn hhl_sum(mu: &Partition, words: impl IntoIterator<Item = Vec<Letter>>) -> Result<QTPoly> {
    let mut counts: HashMap<(i64, i64), u64> = HashMap::new();
    for w in words {
        let key = (inv_mu(&w, mu)? as i64, maj_mu(&w, mu)? as i64);
        *counts.entry(key).or_default() += 1;
    }
    Ok(QTPoly::from_terms(counts))
}

/// Monomial coefficients of `H̃_μ` in `nvars` variables, keyed by exponent vector.
pub fn modified_macdonald(mu: &Partition, nvars: usize) -> Result<BTreeMap<Composition, QTPoly>> {
    Composition::all_weak(mu.size(), nvars)
        .into_iter()
        .map(|a| Ok((a.clone(), hhl_monomial_gf(mu, &a)?)))
        .collect()
}

type Table = Arc<BTreeMap<Partition, QTPoly>>;

fn table_cache() -> &'static Mutex<HashMap<Partition, Table>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Table>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `K̃_{λμ}(q,t)` for every `λ ⊢ |μ|`.
///
/// Monomial coefficients `c_λ = Σ_η K̃_{ημ} K_{ηλ}` are inverted against the
/// unitriangular Kostka matrix, walking `λ` from `(n)` down in reverse
/// lexicographic order. Results are memoized per `μ`.
pub fn kostka_macdonald_table(mu: &Partition) -> Result<Table> {
    if let Some(t) = table_cache().lock().unwrap().get(mu) {
        return Ok(t.clone());
    }
    let lams = Partition::all(mu.size());
    let mut out: BTreeMap<Partition, QTPoly> = BTreeMap::new();
    for (k, lam) in lams.iter().enumerate() {
        let lc = lam.to_composition();
        let mut c = hhl_monomial_gf(mu, &lc)?;
        for (j, eta) in lams.iter().enumerate() {
            let kn = kostka_number(eta, &lc)?;
            if j > k {
                if kn != 0 {
                    return Err(Error::Precondition(format!("Kostka matrix not triangular at {eta}, {lam}")));
                }
                continue;
            }
            if j == k {
                if kn != 1 {
                    return Err(Error::Precondition(format!("K_{{{lam},{lam}}} = {kn}")));
                }
                continue;
            }
            if kn != 0 {
                c -= &out[eta].scale(&BigInt::from(kn));
            }
        }
        out.insert(lam.clone(), c);
    }
    let t = Arc::new(out);
    table_cache().lock().unwrap().insert(mu.clone(), t.clone());
    Ok(t)
}

/// `K̃_{λμ}(q,t)`.
pub fn kostka_macdonald(lambda: &Partition, mu: &Partition) -> Result<QTPoly> {
    check_size(mu, &lambda.to_composition())?;
    Ok(kostka_macdonald_table(mu)?[lambda].clone())
}
