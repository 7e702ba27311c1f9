//! Rectangular crystals `B^{r,s}`, tensor paths, Kashiwara operators, the
//! combinatorial R-matrix with its energy function, and R-propagation.
//!
//! Tensor products follow the Kashiwara convention: on a word, a letter `i`
//! to the left of a letter `i+1` cancels with it, `e_i` changes the
//! rightmost uncancelled `i+1` and `f_i` the leftmost uncancelled `i`. A
//! tableau enters a word through its reading rows right to left, from the
//! top row down.

use std::fmt;

use crate::error::{Error, Result};
use crate::tableaux::{format_rows, format_word, parse_rows, parse_word, row_insert, Composition, Letter, Ssyt};

/// An element of `B^{r,s}`: a semistandard tableau of rectangular shape `(s^r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectTableau {
    rows: Vec<Vec<Letter>>,
}

impl RectTableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let s = rows.first().map_or(0, |r| r.len());
        if s == 0 || rows.iter().any(|r| r.len() != s) {
            return Err(Error::InvalidTableau(format!("{} is not a rectangle", format_rows(&rows))));
        }
        Ssyt::new(rows.clone())?;
        Ok(RectTableau { rows })
    }

    pub fn parse(s: &str) -> Result<Self> {
        RectTableau::new(parse_rows(s)?)
    }

    /// A single letter, as an element of `B^{1,1}`.
    pub fn letter(x: Letter) -> Self {
        assert!(x >= 1, "letters start at 1");
        RectTableau { rows: vec![vec![x]] }
    }

    /// The highest element `u^{(r)}_s`: row `i` filled with `i`.
    pub fn highest(r: usize, s: usize) -> Self {
        assert!(r >= 1 && s >= 1);
        RectTableau { rows: (1..=r).map(|i| vec![i as Letter; s]).collect() }
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn s(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn max_letter(&self) -> Letter {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn to_ssyt(&self) -> Ssyt {
        Ssyt::new(self.rows.clone()).expect("rectangular tableau is semistandard")
    }

    fn from_ssyt(t: Ssyt, r: usize, s: usize) -> Self {
        let rows = t.into_rows();
        debug_assert!(rows.len() == r && rows.iter().all(|x| x.len() == s));
        RectTableau { rows }
    }

    /// Row word: rows from bottom to top, each left to right.
    pub fn row_word(&self) -> Vec<Letter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Crystal reading: rows from top to bottom, each right to left.
    pub fn crystal_word(&self) -> Vec<Letter> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    /// All elements of `B^{r,s}` with letters at most `n`.
    pub fn all(r: usize, s: usize, n: Letter) -> Vec<RectTableau> {
        fn rec(r: usize, s: usize, n: Letter, idx: usize, g: &mut Vec<Vec<Letter>>, out: &mut Vec<RectTableau>) {
            if idx == r * s {
                out.push(RectTableau { rows: g.clone() });
                return;
            }
            let (i, j) = (idx / s, idx % s);
            let mut lo = 1;
            if j > 0 {
                lo = lo.max(g[i][j - 1]);
            }
            if i > 0 {
                lo = lo.max(g[i - 1][j] + 1);
            }
            // Leave room for the rows below in this column.
            let hi = n.saturating_sub((r - 1 - i) as Letter);
            for v in lo..=hi {
                g[i][j] = v;
                rec(r, s, n, idx + 1, g, out);
            }
        }
        let mut out = Vec::new();
        let mut g = vec![vec![0; s]; r];
        rec(r, s, n, 0, &mut g, &mut out);
        out
    }
}

impl fmt::Display for RectTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rows(&self.rows))
    }
}

/// Raising (`e_i`) or lowering (`f_i`) operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// A path: an ordered tensor product of rectangular tableaux over the
/// alphabet `1..=rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorPath {
    factors: Vec<RectTableau>,
    rank: Letter,
}

impl TensorPath {
    /// Path over the alphabet `1..=rank`.
    pub fn new(factors: Vec<RectTableau>, rank: Letter) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        let m = factors.iter().map(|b| b.max_letter()).max().unwrap();
        if m > rank {
            return Err(Error::InvalidPath(format!("letter {m} exceeds alphabet bound {rank}")));
        }
        Ok(TensorPath { factors, rank })
    }

    /// Path whose alphabet bound is its largest letter.
    pub fn from_factors(factors: Vec<RectTableau>) -> Result<Self> {
        let m = factors.iter().map(|b| b.max_letter()).max().unwrap_or(1);
        TensorPath::new(factors, m)
    }

    /// Path of `B^{1,1}` factors.
    pub fn from_word(w: &[Letter]) -> Result<Self> {
        if w.contains(&0) {
            return Err(Error::InvalidPath("letter 0".into()));
        }
        TensorPath::from_factors(w.iter().map(|&x| RectTableau::letter(x)).collect())
    }

    /// Parses either factors joined by `|` (each a bracketed row list) or a
    /// word of `B^{1,1}` letters.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            let factors = s.split('|').map(RectTableau::parse).collect::<Result<Vec<_>>>()?;
            TensorPath::from_factors(factors)
        } else {
            TensorPath::from_word(&parse_word(s)?)
        }
    }

    pub fn factors(&self) -> &[RectTableau] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn rank(&self) -> Letter {
        self.rank
    }

    /// Same factors over a larger alphabet.
    pub fn with_rank(&self, rank: Letter) -> Result<Self> {
        TensorPath::new(self.factors.clone(), rank)
    }

    /// `(r_i, s_i)` of each factor.
    pub fn shapes(&self) -> Vec<(usize, usize)> {
        self.factors.iter().map(|b| (b.r(), b.s())).collect()
    }

    pub fn is_single_boxes(&self) -> bool {
        self.factors.iter().all(|b| b.r() == 1 && b.s() == 1)
    }

    /// The letters of a `B^{1,1}` path.
    pub fn as_word(&self) -> Option<Vec<Letter>> {
        self.is_single_boxes().then(|| self.factors.iter().map(|b| b.rows[0][0]).collect())
    }

    pub fn max_letter(&self) -> Letter {
        self.factors.iter().map(|b| b.max_letter()).max().unwrap_or(0)
    }

    /// Concatenated crystal readings of the factors.
    pub fn crystal_word(&self) -> Vec<Letter> {
        self.factors.iter().flat_map(|b| b.crystal_word()).collect()
    }

    /// Prepends a factor.
    pub fn prepend(&self, b: RectTableau) -> Self {
        let mut f = Vec::with_capacity(self.factors.len() + 1);
        f.push(b);
        f.extend(self.factors.iter().cloned());
        let rank = self.rank.max(f[0].max_letter());
        TensorPath { factors: f, rank }
    }

    /// Concatenation `self ⊗ other`.
    pub fn concat(&self, other: &TensorPath) -> Self {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        TensorPath { factors: f, rank: self.rank.max(other.rank) }
    }

    /// Consecutive blocks with the given lengths.
    pub fn blocks(&self, lengths: &[usize]) -> Result<Vec<TensorPath>> {
        if lengths.iter().sum::<usize>() != self.len() {
            return Err(Error::SizeMismatch(format!("blocks {lengths:?} vs path length {}", self.len())));
        }
        let mut out = Vec::new();
        let mut at = 0;
        for &l in lengths {
            if l > 0 {
                out.push(TensorPath::from_factors(self.factors[at..at + l].to_vec())?.with_rank(self.rank)?);
            }
            at += l;
        }
        Ok(out)
    }
}

impl fmt::Display for TensorPath {
    /// Digit string for small `B^{1,1}` paths, else factors joined by `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_word() {
            Some(w) if w.iter().all(|&x| x <= 9) => write!(f, "{}", format_word(&w)),
            _ => {
                let s: Vec<String> = self.factors.iter().map(|b| b.to_string()).collect();
                write!(f, "{}", s.join("|"))
            }
        }
    }
}

/// Weight: entry `i` counts the letter `i+1` over all factors; `rank` parts.
pub fn weight(p: &TensorPath) -> Composition {
    let mut c = vec![0; p.rank as usize];
    for b in &p.factors {
        for &x in b.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
    }
    Composition::new(c)
}

/// Positions of the uncancelled `i+1`s and `i`s in a word.
fn signature(w: &[Letter], i: Letter) -> (Vec<usize>, Vec<usize>) {
    let mut open: Vec<usize> = Vec::new();
    let mut raise = Vec::new();
    for (k, &x) in w.iter().enumerate() {
        if x == i {
            open.push(k);
        } else if x == i + 1 && open.pop().is_none() {
            raise.push(k);
        }
    }
    (raise, open)
}

/// `ε_i` and `φ_i` of a path.
pub fn epsilon_phi(p: &TensorPath, i: Letter) -> (usize, usize) {
    let (a, b) = signature(&p.crystal_word(), i);
    (a.len(), b.len())
}

/// Applies `e_i` or `f_i`. Returns `Ok(None)` when the operator kills the
/// path; errors when `i` is outside `1..rank`.
pub fn kashiwara(p: &TensorPath, i: Letter, dir: Direction) -> Result<Option<TensorPath>> {
    if i == 0 || i >= p.rank {
        return Err(Error::IndexOutOfRange(i as usize));
    }
    let w = p.crystal_word();
    let (raise, lower) = signature(&w, i);
    let (pos, new) = match dir {
        Direction::Raise => match raise.last() {
            Some(&k) => (k, i),
            None => return Ok(None),
        },
        Direction::Lower => match lower.first() {
            Some(&k) => (k, i + 1),
            None => return Ok(None),
        },
    };
    let mut q = p.clone();
    let mut k = pos;
    for b in q.factors.iter_mut() {
        let n = b.r() * b.s();
        if k < n {
            let s = b.s();
            let (row, back) = (k / s, k % s);
            b.rows[row][s - 1 - back] = new;
            break;
        }
        k -= n;
    }
    Ok(Some(q))
}

/// True when every raising operator kills the path.
pub fn is_highest(p: &TensorPath) -> bool {
    is_lattice_word(&p.crystal_word())
}

/// Every prefix has weakly decreasing content.
pub(crate) fn is_lattice_word(w: &[Letter]) -> bool {
    let mut c: Vec<usize> = Vec::new();
    for &x in w {
        let x = x as usize;
        if c.len() < x {
            c.resize(x, 0);
        }
        c[x - 1] += 1;
        if x > 1 && c[x - 1] > c[x - 2] {
            return false;
        }
    }
    true
}

/// Output of the combinatorial R-matrix on `b ⊗ b2`: `left ⊗ right` with
/// `left` of the shape of `b2` and `right` of the shape of `b`, plus the
/// energy `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RImage {
    pub left: RectTableau,
    pub right: RectTableau,
    pub h: usize,
}

/// Combinatorial R-matrix `B^{r,s} ⊗ B^{r',s'} → B^{r',s'} ⊗ B^{r,s}`.
///
/// Inserts the row word of `b` into `b2`, then peels off `s'` vertical
/// `r'`-strips outside the `(s^r)` corner by reverse bumping. The ejected
/// letters, inserted in reverse, give the new left factor; what remains is
/// the new right factor.
pub fn combinatorial_r(b: &RectTableau, b2: &RectTableau) -> RImage {
    let (r, s) = (b.r(), b.s());
    let (r2, s2) = (b2.r(), b2.s());
    let mut y = row_insert(&b2.to_ssyt(), &b.row_word());
    let lam: Vec<usize> = y.rows().iter().map(|x| x.len()).collect();

    let h = lam
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let conc = if i < r { s } else { 0 } + if i < r2 { s2 } else { 0 };
            l.saturating_sub(conc)
        })
        .sum();

    let mut cur = lam;
    let mut order = Vec::with_capacity(r2 * s2);
    for _ in 0..s2 {
        let strip = upper_strip(&cur, r, s, r2).expect("vertical strip exists");
        for &i in strip.iter().rev() {
            order.push(i);
        }
        for &i in &strip {
            cur[i] -= 1;
        }
    }

    let mut ejected = Vec::with_capacity(order.len());
    for &i in &order {
        let col = y.rows()[i].len() - 1;
        ejected.push(y.inverse_bump(i, col).expect("labelled cell is a corner"));
    }
    ejected.reverse();
    let left = row_insert(&Ssyt::empty(), &ejected);
    RImage {
        left: RectTableau::from_ssyt(left, r2, s2),
        right: RectTableau::from_ssyt(y, r, s),
        h,
    }
}

/// The topmost set of `k` rows (lexicographically smallest, ascending) whose
/// last cells lie outside the `(s^r)` rectangle and whose removal leaves a
/// partition.
fn upper_strip(lens: &[usize], r: usize, s: usize, k: usize) -> Option<Vec<usize>> {
    fn rec(lens: &[usize], r: usize, s: usize, i: usize, k: usize, prev: usize, chosen: &mut Vec<usize>) -> bool {
        if i == lens.len() {
            return k == 0;
        }
        let l = lens[i];
        let eligible = k > 0 && l > 0 && (i >= r || l > s);
        if eligible && l - 1 <= prev {
            chosen.push(i);
            if rec(lens, r, s, i + 1, k - 1, l - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        l <= prev && rec(lens, r, s, i + 1, k, l, chosen)
    }
    let mut chosen = Vec::with_capacity(k);
    rec(lens, r, s, 0, k, usize::MAX, &mut chosen).then_some(chosen)
}

/// Energy `H(b ⊗ b2)`.
pub fn energy_h(b: &RectTableau, b2: &RectTableau) -> usize {
    combinatorial_r(b, b2).h
}

/// `H̄(b ⊗ b2) = min(r,r')·min(s,s') − H(b ⊗ b2)`.
pub fn energy_hbar(b: &RectTableau, b2: &RectTableau) -> usize {
    b.r().min(b2.r()) * b.s().min(b2.s()) - energy_h(b, b2)
}

/// Element `b[d]` of the affinization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineElement {
    pub b: RectTableau,
    pub d: i64,
}

/// Affine R: `b[d] ⊗ b'[d'] ↦ b̃'[d' − H] ⊗ b̃[d + H]`.
pub fn affine_r(x: &AffineElement, y: &AffineElement) -> (AffineElement, AffineElement) {
    let img = combinatorial_r(&x.b, &y.b);
    let h = img.h as i64;
    (
        AffineElement { b: img.left, d: y.d - h },
        AffineElement { b: img.right, d: x.d + h },
    )
}

/// `b_j^{(i)}` for `j = i..len`: factor `j` moved left through
/// `b_{j-1}, …, b_i` by R. The first entry is `b_i` itself. Positions are
/// 0-based.
pub fn r_propagate(p: &TensorPath, i: usize) -> Result<Vec<RectTableau>> {
    if i >= p.len() {
        return Err(Error::IndexOutOfRange(i));
    }
    let f = &p.factors;
    Ok((i..f.len())
        .map(|j| {
            let mut x = f[j].clone();
            for k in (i..j).rev() {
                x = combinatorial_r(&f[k], &x).left;
            }
            x
        })
        .collect())
}

/// `H(b_i ⊗ b_j^{(i+1)})` for all `i < j`, indexed `[j][i]`.
pub fn pair_energies(p: &TensorPath) -> Vec<Vec<usize>> {
    let f = &p.factors;
    (0..f.len())
        .map(|j| {
            let mut hs = vec![0; j];
            let mut x = f[j].clone();
            for k in (0..j).rev() {
                let img = combinatorial_r(&f[k], &x);
                hs[k] = img.h;
                x = img.left;
            }
            hs
        })
        .collect()
}

/// All paths with the given factor shapes and weight (letters `1..=len`).
pub fn paths_of_weight(shapes: &[(usize, usize)], wt: &Composition) -> Vec<TensorPath> {
    enumerate_paths(shapes, wt, false)
}

/// Highest paths with the given factor shapes and weight.
pub fn highest_paths(shapes: &[(usize, usize)], wt: &Composition) -> Vec<TensorPath> {
    enumerate_paths(shapes, wt, true)
}

fn enumerate_paths(shapes: &[(usize, usize)], wt: &Composition, highest: bool) -> Vec<TensorPath> {
    let n = wt.len() as Letter;
    let boxes: usize = shapes.iter().map(|(r, s)| r * s).sum();
    if boxes != wt.size() || n == 0 || shapes.is_empty() {
        return Vec::new();
    }
    let pools: Vec<Vec<(RectTableau, Vec<usize>)>> = shapes
        .iter()
        .map(|&(r, s)| {
            RectTableau::all(r, s, n)
                .into_iter()
                .map(|b| {
                    let mut c = vec![0; n as usize];
                    for &x in b.rows.iter().flatten() {
                        c[x as usize - 1] += 1;
                    }
                    (b, c)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut left = wt.parts().to_vec();
    let mut cur = Vec::with_capacity(shapes.len());
    let mut word = Vec::new();
    paths_rec(&pools, 0, &mut left, &mut cur, &mut word, highest, n, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn paths_rec(
    pools: &[Vec<(RectTableau, Vec<usize>)>],
    k: usize,
    left: &mut Vec<usize>,
    cur: &mut Vec<RectTableau>,
    word: &mut Vec<Letter>,
    highest: bool,
    n: Letter,
    out: &mut Vec<TensorPath>,
) {
    if k == pools.len() {
        out.push(TensorPath { factors: cur.clone(), rank: n });
        return;
    }
    for (b, c) in &pools[k] {
        if c.iter().zip(left.iter()).any(|(a, l)| a > l) {
            continue;
        }
        let wl = word.len();
        if highest {
            word.extend(b.crystal_word());
            if !is_lattice_word(word) {
                word.truncate(wl);
                continue;
            }
        }
        for (l, a) in left.iter_mut().zip(c) {
            *l -= a;
        }
        cur.push(b.clone());
        paths_rec(pools, k + 1, left, cur, word, highest, n, out);
        cur.pop();
        for (l, a) in left.iter_mut().zip(c) {
            *l += a;
        }
        word.truncate(wl);
    }
}

/// All paths with the given factor shapes over the alphabet `1..=n`.
pub fn all_paths(shapes: &[(usize, usize)], n: Letter) -> Vec<TensorPath> {
    let pools: Vec<Vec<RectTableau>> = shapes.iter().map(|&(r, s)| RectTableau::all(r, s, n)).collect();
    let mut out: Vec<Vec<RectTableau>> = vec![Vec::new()];
    for pool in &pools {
        out = out
            .into_iter()
            .flat_map(|f| {
                pool.iter().map(move |b| {
                    let mut g = f.clone();
                    g.push(b.clone());
                    g
                })
            })
            .collect();
    }
    out.into_iter().map(|factors| TensorPath { factors, rank: n }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) -> RectTableau {
        RectTableau::parse(s).unwrap()
    }

    #[test]
    fn test_r_matrix_worked_pair() {
        let img = combinatorial_r(&rt("[[1,1,4],[2,3,5]]"), &rt("[[2,3],[3,4],[4,5]]"));
        assert_eq!(img.left, rt("[[1,1],[2,2],[3,4]]"));
        assert_eq!(img.right, rt("[[3,3,4],[4,5,5]]"));
        assert_eq!(img.h, 3);
        assert_eq!(energy_hbar(&rt("[[1,1,4],[2,3,5]]"), &rt("[[2,3],[3,4],[4,5]]")), 1);
    }

    #[test]
    fn test_r_on_single_boxes() {
        for a in 1..=3 {
            for b in 1..=3 {
                let img = combinatorial_r(&RectTableau::letter(a), &RectTableau::letter(b));
                assert_eq!((img.left.rows()[0][0], img.right.rows()[0][0]), (a, b));
                assert_eq!(img.h, usize::from(a < b));
            }
        }
    }

    #[test]
    fn test_upper_strip_choice() {
        assert_eq!(upper_strip(&[4, 3, 2, 2, 1], 2, 3, 3), Some(vec![0, 2, 3]));
        assert_eq!(upper_strip(&[3, 3, 1, 1, 1], 2, 3, 3), Some(vec![2, 3, 4]));
    }

    #[test]
    fn test_weight_and_highest() {
        let p = TensorPath::parse("[[1,2],[2,4],[3,5]]|[[1,2],[3,3]]|[[1,1],[4,5]]").unwrap();
        assert_eq!(weight(&p).parts(), &[4, 3, 3, 2, 2]);
        assert_eq!(weight(&TensorPath::from_factors(vec![RectTableau::highest(3, 4)]).unwrap()).parts(), &[4, 4, 4]);
        assert_eq!(weight(&TensorPath::parse("4221343").unwrap()).parts(), &[1, 2, 2, 2]);
        assert!(is_highest(&TensorPath::parse("112233").unwrap()));
        assert!(is_highest(&TensorPath::parse("121233").unwrap()));
        assert!(!is_highest(&TensorPath::parse("211123").unwrap()));
        let wt = Composition::new(vec![2, 2, 2]);
        assert_eq!(highest_paths(&[(1, 1); 6], &wt).len(), 5);
    }

    #[test]
    fn test_kashiwara_basics() {
        let p = TensorPath::new(vec![RectTableau::letter(2)], 2).unwrap();
        let q = kashiwara(&p, 1, Direction::Raise).unwrap().unwrap();
        assert_eq!(q.to_string(), "1");
        let u = TensorPath::new(vec![RectTableau::highest(2, 3)], 4).unwrap();
        for i in 1..4 {
            assert_eq!(kashiwara(&u, i, Direction::Raise).unwrap(), None);
        }
        assert!(kashiwara(&u, 4, Direction::Raise).is_err());
    }

    #[test]
    fn test_affine_modes() {
        let x = AffineElement { b: rt("[[1,1,4],[2,3,5]]"), d: 0 };
        let y = AffineElement { b: rt("[[2,3],[3,4],[4,5]]"), d: 0 };
        let (a, b) = affine_r(&x, &y);
        assert_eq!((a.d, b.d), (-3, 3));
    }

    #[test]
    fn test_rect_enumeration_counts() {
        // |B^{1,1}| = n, |B^{1,2}| = C(n+1,2), |B^{2,1}| = C(n,2).
        assert_eq!(RectTableau::all(1, 1, 3).len(), 3);
        assert_eq!(RectTableau::all(1, 2, 3).len(), 6);
        assert_eq!(RectTableau::all(2, 1, 3).len(), 3);
        assert_eq!(RectTableau::all(2, 2, 3).len(), 6);
    }
}
