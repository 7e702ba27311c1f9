//! Partitions, words, tableaux, tabloids, transportation matrices, plane
//! partitions and the bijections among them: Schensted insertion, inverse
//! bumping, RSK and Gelfand-Tsetlin gluing.

use std::fmt;

use crate::crystal::TensorPath;
use crate::error::{Error, Result};
use crate::poly::QPoly;

/// A letter of a word or an entry of a tableau. Letters start at 1.
pub type Letter = u32;

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

/// Composition: a finite sequence of nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Partition {
    /// Validates the parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    /// Dominance order `self ⊵ other` for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The parts as a partition, if they already are weakly decreasing
    /// (trailing zeros allowed).
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }

    /// The parts sorted into a partition.
    pub fn sorted(&self) -> Partition {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Compositions of `n` with exactly `k` nonnegative parts.
    pub fn all_weak(n: usize, k: usize) -> Vec<Composition> {
        fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if k == 1 {
                cur.push(n);
                out.push(Composition(cur.clone()));
                cur.pop();
                return;
            }
            for p in (0..=n).rev() {
                cur.push(p);
                rec(n - p, k - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k == 0 {
            if n == 0 {
                out.push(Composition(Vec::new()));
            }
            return out;
        }
        rec(n, k, &mut Vec::new(), &mut out);
        out
    }

    /// Compositions of `n` with positive parts.
    pub fn all_strong(n: usize) -> Vec<Composition> {
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if n == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in (1..=n).rev() {
                cur.push(p);
                rec(n - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0, ","))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0, ","))
    }
}

pub(crate) fn join<T: fmt::Display>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Content of a word: entry `i` counts the letter `i+1`.
pub fn content(w: &[Letter]) -> Composition {
    let n = w.iter().copied().max().unwrap_or(0) as usize;
    let mut c = vec![0; n];
    for &x in w {
        c[x as usize - 1] += 1;
    }
    Composition(c)
}

/// Parses a word: either a digit string like `4221343` or space/comma
/// separated integers.
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    let seps = |c: char| c == ' ' || c == ',';
    let w: Vec<Letter> = if s.contains(seps) {
        s.split(seps)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Letter>().map_err(|_| Error::Parse(t.to_string())))
            .collect::<Result<_>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(c.to_string())))
            .collect::<Result<_>>()?
    };
    if let Some(bad) = w.iter().find(|&&x| x == 0) {
        return Err(Error::Parse(bad.to_string()));
    }
    Ok(w)
}

/// Formats a word as a digit string when every letter is a single digit,
/// otherwise space separated.
pub fn format_word(w: &[Letter]) -> String {
    if w.iter().all(|&x| x <= 9) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        join(w, " ")
    }
}

/// Parses a bracketed list of rows such as `[[1,1,4],[2,3,5]]`.
pub fn parse_rows(s: &str) -> Result<Vec<Vec<Letter>>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(s.to_string()))?;
    let mut rows = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let r = rest.strip_prefix('[').ok_or_else(|| Error::Parse(rest.to_string()))?;
        let end = r.find(']').ok_or_else(|| Error::Parse(rest.to_string()))?;
        let body = &r[..end];
        let row = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|x| x.parse::<Letter>().map_err(|_| Error::Parse(x.to_string())))
                .collect::<Result<Vec<_>>>()?
        };
        rows.push(row);
        rest = &r[end + 1..];
        rest = rest.strip_prefix(',').unwrap_or(rest);
    }
    Ok(rows)
}

pub(crate) fn format_rows(rows: &[Vec<Letter>]) -> String {
    let inner: Vec<String> = rows.iter().map(|r| format!("[{}]", join(r, ","))).collect();
    format!("[{}]", inner.join(","))
}

/// Semistandard Young tableau in English notation: rows weakly increase,
/// columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Ssyt {
    rows: Vec<Vec<Letter>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidTableau(format!("{}: {m}", format_rows(&rows))));
        if rows.iter().any(|r| r.is_empty()) {
            return bad("empty row");
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths increase");
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return bad("letter 0");
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return bad("row decreases");
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(b, a)| b <= a) {
                return bad("column not strict");
            }
        }
        Ok(Ssyt { rows })
    }

    pub fn empty() -> Self {
        Ssyt { rows: Vec::new() }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let rows = parse_rows(s)?;
        Ssyt::new(rows.into_iter().filter(|r| !r.is_empty()).collect())
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Letter>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn max_letter(&self) -> Letter {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Content as a composition with `n` parts (`n` at least the max letter).
    pub fn content(&self, n: usize) -> Composition {
        let mut c = vec![0; n.max(self.max_letter() as usize)];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        Composition(c)
    }

    /// Row word: rows from bottom to top, each read left to right.
    pub fn row_word(&self) -> Vec<Letter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Schensted row insertion of one letter. Returns the (row, col) of the
    /// new cell, 0-based.
    pub fn insert(&mut self, x: Letter) -> (usize, usize) {
        let mut x = x;
        for (i, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&y| y > x) {
                Some(j) => x = std::mem::replace(&mut row[j], x),
                None => {
                    row.push(x);
                    return (i, row.len() - 1);
                }
            }
        }
        self.rows.push(vec![x]);
        (self.rows.len() - 1, 0)
    }

    /// Removes the corner cell `(row, col)` (0-based) by reverse bumping and
    /// returns the ejected letter.
    pub fn inverse_bump(&mut self, row: usize, col: usize) -> Result<Letter> {
        let removable = row < self.rows.len()
            && col + 1 == self.rows[row].len()
            && self.rows.get(row + 1).is_none_or(|r| r.len() <= col);
        if !removable {
            return Err(Error::NotRemovable(row, col));
        }
        let mut x = self.rows[row].pop().unwrap();
        if self.rows[row].is_empty() {
            self.rows.pop();
        }
        for i in (0..row).rev() {
            let r = &mut self.rows[i];
            let j = r.iter().rposition(|&y| y < x).expect("semistandard invariant");
            x = std::mem::replace(&mut r[j], x);
        }
        Ok(x)
    }

    /// Cells of the tableau `(row, col)` that are removable corners.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.rows.len())
            .filter(|&i| self.rows.get(i + 1).is_none_or(|r| r.len() < self.rows[i].len()))
            .map(|i| (i, self.rows[i].len() - 1))
            .collect()
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rows(&self.rows))
    }
}

/// `(t ← w)`: inserts the letters of `w` from left to right.
pub fn row_insert(t: &Ssyt, w: &[Letter]) -> Ssyt {
    let mut t = t.clone();
    for &x in w {
        t.insert(x);
    }
    t
}

/// Functional form of [`Ssyt::inverse_bump`] with a 0-based cell.
pub fn inverse_bump(t: &Ssyt, cell: (usize, usize)) -> Result<(Ssyt, Letter)> {
    let mut t = t.clone();
    let x = t.inverse_bump(cell.0, cell.1)?;
    Ok((t, x))
}

/// All SSYT of the given shape and content. Entries use the letters
/// `1..=weight.len()`.
pub fn enumerate_ssyt(shape: &Partition, weight: &Composition) -> Result<Vec<Ssyt>> {
    if shape.size() != weight.size() {
        return Err(Error::SizeMismatch(format!("shape {shape} vs weight {weight}")));
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    ssyt_rec(shape, weight.parts(), 0, &mut rows, &mut out);
    Ok(out)
}

fn ssyt_rec(
    shape: &Partition,
    weight: &[usize],
    k: usize,
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<Ssyt>,
) {
    if k == weight.len() {
        let done = (0..shape.len()).all(|i| rows.get(i).map_or(0, |r| r.len()) == shape.part(i));
        if done {
            out.push(Ssyt { rows: rows.iter().filter(|r| !r.is_empty()).cloned().collect() });
        }
        return;
    }
    // Add a horizontal strip of weight[k] copies of letter k+1.
    let cur: Vec<usize> = (0..shape.len()).map(|i| rows.get(i).map_or(0, |r| r.len())).collect();
    let mut add = vec![0usize; shape.len()];
    strip_rec(shape, weight, k, &cur, 0, weight[k], &mut add, rows, out);
}

#[allow(clippy::too_many_arguments)]
fn strip_rec(
    shape: &Partition,
    weight: &[usize],
    k: usize,
    cur: &[usize],
    i: usize,
    left: usize,
    add: &mut Vec<usize>,
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<Ssyt>,
) {
    if i == cur.len() {
        if left > 0 {
            return;
        }
        while rows.len() < cur.len() {
            rows.push(Vec::new());
        }
        for (r, &a) in add.iter().enumerate() {
            rows[r].extend(std::iter::repeat_n(k as Letter + 1, a));
        }
        ssyt_rec(shape, weight, k + 1, rows, out);
        for (r, &a) in add.iter().enumerate() {
            let l = rows[r].len();
            rows[r].truncate(l - a);
        }
        return;
    }
    // Row i may grow up to the previous row's old length (horizontal strip)
    // and up to the target shape.
    let cap_above = if i == 0 { usize::MAX } else { cur[i - 1] };
    let max_len = shape.part(i).min(cap_above);
    let room = max_len.saturating_sub(cur[i]);
    for a in (0..=room.min(left)).rev() {
        add[i] = a;
        strip_rec(shape, weight, k, cur, i + 1, left - a, add, rows, out);
    }
    add[i] = 0;
}

/// Number of SSYT of shape `shape` and content `weight`.
pub fn kostka_number(shape: &Partition, weight: &Composition) -> Result<usize> {
    Ok(enumerate_ssyt(shape, weight)?.len())
}

/// A tabloid: rows of arbitrary lengths (possibly empty) of positive letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tabloid {
    rows: Vec<Vec<Letter>>,
}

impl Tabloid {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidTableau("letter 0 in tabloid".into()));
        }
        Ok(Tabloid { rows })
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn shape(&self) -> Composition {
        Composition(self.rows.iter().map(|r| r.len()).collect())
    }

    /// Every row weakly increasing.
    pub fn is_row_weakly_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    /// Reading word: each row right to left, rows from top to bottom.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rows(&self.rows))
    }
}

/// Nonnegative integer matrix with `rows × cols` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TransportationMatrix {
    entries: Vec<Vec<usize>>,
}

impl TransportationMatrix {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(r) = entries.first() {
            if entries.iter().any(|x| x.len() != r.len()) {
                return Err(Error::InvalidTableau("ragged matrix".into()));
            }
        }
        Ok(TransportationMatrix { entries })
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn row_sums(&self) -> Composition {
        Composition(self.entries.iter().map(|r| r.iter().sum()).collect())
    }

    pub fn col_sums(&self) -> Composition {
        let c = self.entries.first().map_or(0, |r| r.len());
        Composition((0..c).map(|j| self.entries.iter().map(|r| r[j]).sum()).collect())
    }

    /// All matrices with the given row and column sums.
    pub fn all_with_margins(rows: &Composition, cols: &Composition) -> Vec<TransportationMatrix> {
        fn rec(
            i: usize,
            rows: &[usize],
            left: &mut Vec<usize>,
            cur: &mut Vec<Vec<usize>>,
            out: &mut Vec<TransportationMatrix>,
        ) {
            if i == rows.len() {
                if left.iter().all(|&x| x == 0) {
                    out.push(TransportationMatrix { entries: cur.clone() });
                }
                return;
            }
            let mut row = vec![0; left.len()];
            fill(0, rows[i], i, rows, left, &mut row, cur, out);
        }
        #[allow(clippy::too_many_arguments)]
        fn fill(
            j: usize,
            need: usize,
            i: usize,
            rows: &[usize],
            left: &mut Vec<usize>,
            row: &mut Vec<usize>,
            cur: &mut Vec<Vec<usize>>,
            out: &mut Vec<TransportationMatrix>,
        ) {
            if j == left.len() {
                if need == 0 {
                    cur.push(row.clone());
                    rec(i + 1, rows, left, cur, out);
                    cur.pop();
                }
                return;
            }
            for a in 0..=need.min(left[j]) {
                row[j] = a;
                left[j] -= a;
                fill(j + 1, need - a, i, rows, left, row, cur, out);
                left[j] += a;
            }
            row[j] = 0;
        }
        let mut out = Vec::new();
        let mut left = cols.parts().to_vec();
        rec(0, rows.parts(), &mut left, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for TransportationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.entries.iter().map(|r| format!("[{}]", join(r, ","))).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

/// Tabloid of a path of single-row factors: row `k` lists the positions
/// (1-based) of the factors containing letter `k`, once per occurrence.
pub fn tabloid_from_path(p: &TensorPath) -> Result<Tabloid> {
    if let Some(b) = p.factors().iter().find(|b| b.r() != 1) {
        return Err(Error::InvalidPath(format!("factor {b} has more than one row")));
    }
    let n = p.rank() as usize;
    let mut rows = vec![Vec::new(); n];
    for (j, b) in p.factors().iter().enumerate() {
        for &x in &b.rows()[0] {
            rows[x as usize - 1].push(j as Letter + 1);
        }
    }
    Ok(Tabloid { rows })
}

/// Matrix whose entry `(i, j)` counts the letter `j+1` in row `i`. The
/// number of columns is the largest letter.
pub fn matrix_from_tabloid(t: &Tabloid) -> Result<TransportationMatrix> {
    let cols = t.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
    matrix_from_tabloid_cols(t, cols)
}

/// As [`matrix_from_tabloid`] with an explicit column count.
pub fn matrix_from_tabloid_cols(t: &Tabloid, cols: usize) -> Result<TransportationMatrix> {
    if !t.is_row_weakly_strict() {
        return Err(Error::InvalidTableau(format!("row of {t} is not weakly increasing")));
    }
    let mut m = vec![vec![0; cols]; t.rows.len()];
    for (i, r) in t.rows.iter().enumerate() {
        for &x in r {
            let j = x as usize - 1;
            if j >= cols {
                return Err(Error::IndexOutOfRange(x as usize));
            }
            m[i][j] += 1;
        }
    }
    Ok(TransportationMatrix { entries: m })
}

/// Inverse of [`matrix_from_tabloid`]: row `i` lists `j+1` repeated `m[i][j]` times.
pub fn tabloid_from_matrix(m: &TransportationMatrix) -> Tabloid {
    Tabloid {
        rows: m
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .flat_map(|(j, &c)| std::iter::repeat_n(j as Letter + 1, c))
                    .collect()
            })
            .collect(),
    }
}

/// RSK correspondence. The biword lists `(i+1, j+1)` with multiplicity
/// `m[i][j]` in lexicographic order; the `j`s are inserted into `P` and the
/// `i`s recorded in `Q`.
pub fn rsk(m: &TransportationMatrix) -> (Ssyt, Ssyt) {
    let mut p = Ssyt::empty();
    let mut q = Ssyt::empty();
    for (i, r) in m.entries.iter().enumerate() {
        for (j, &c) in r.iter().enumerate() {
            for _ in 0..c {
                let (a, _) = p.insert(j as Letter + 1);
                if a == q.rows.len() {
                    q.rows.push(Vec::new());
                }
                q.rows[a].push(i as Letter + 1);
            }
        }
    }
    (p, q)
}

/// Gelfand-Tsetlin pattern. `rows[k-1]` is the shape of the entries `≤ k`,
/// padded with zeros to length `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GtPattern {
    rows: Vec<Vec<usize>>,
}

impl GtPattern {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `x^{(k)}` for `k` in `1..=n`.
    pub fn row(&self, k: usize) -> &[usize] {
        &self.rows[k - 1]
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn is_interlacing(&self) -> bool {
        self.rows.windows(2).all(|w| {
            (0..w[0].len()).all(|i| w[1][i] >= w[0][i] && w[0][i] >= w[1][i + 1])
        })
    }
}

impl fmt::Display for GtPattern {
    /// Rows from `x^{(n)}` down to `x^{(1)}`, separated by `/`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.rows.iter().rev().map(|r| join(r, " ")).collect();
        write!(f, "{}", s.join(" / "))
    }
}

/// GT pattern of `t` over the alphabet `1..=n`.
pub fn gt_from_ssyt(t: &Ssyt, n: usize) -> Result<GtPattern> {
    if (t.max_letter() as usize) > n || t.rows.len() > n {
        return Err(Error::Precondition(format!("tableau {t} does not fit alphabet {n}")));
    }
    let rows = (1..=n)
        .map(|k| {
            let mut r: Vec<usize> =
                t.rows.iter().map(|row| row.iter().filter(|&&x| x as usize <= k).count()).collect();
            r.resize(k, 0);
            r.truncate(k);
            r
        })
        .collect();
    Ok(GtPattern { rows })
}

/// Plane partition stored as a square array; zeros mark empty cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePartition {
    entries: Vec<Vec<usize>>,
}

impl PlanePartition {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        let pp = PlanePartition { entries };
        if !pp.is_valid() {
            return Err(Error::InvalidTableau("rows or columns not weakly decreasing".into()));
        }
        Ok(pp)
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    pub fn is_valid(&self) -> bool {
        let e = &self.entries;
        e.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]))
            && e.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| b <= a))
    }

    /// Sum along the diagonal `π(i, i+k)` for `k ≥ 0` or `π(i-k, i)` for `k < 0`.
    pub fn diagonal_sum(&self, k: isize) -> usize {
        let n = self.entries.len();
        (0..n)
            .filter_map(|i| {
                let (a, b) = if k >= 0 { (i, i + k as usize) } else { (i + (-k) as usize, i) };
                self.entries.get(a).and_then(|r| r.get(b)).copied()
            })
            .sum()
    }

    /// Array with trailing zero rows and columns removed.
    pub fn trimmed(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self
            .entries
            .iter()
            .map(|r| {
                let mut r = r.clone();
                while r.last() == Some(&0) {
                    r.pop();
                }
                r
            })
            .collect();
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.trimmed().iter().map(|r| format!("[{}]", join(r, ","))).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

/// Glues the GT patterns of `p` (on and below the diagonal) and `q` (above
/// it) over the alphabet `1..=N`, `N` being the largest letter of either
/// tableau or the number of rows, whichever is bigger.
pub fn plane_partition_from_pair(p: &Ssyt, q: &Ssyt) -> Result<PlanePartition> {
    if p.shape() != q.shape() {
        return Err(Error::SizeMismatch(format!("shapes {} and {}", p.shape(), q.shape())));
    }
    let n = (p.max_letter().max(q.max_letter()) as usize).max(p.rows.len()).max(1);
    let gp = gt_from_ssyt(p, n)?;
    let gq = gt_from_ssyt(q, n)?;
    let mut e = vec![vec![0; n]; n];
    for k in 0..n {
        let xp = gp.row(n - k);
        let xq = gq.row(n - k);
        for i in 0..n - k {
            e[i + k][i] = xp[i];
            e[i][i + k] = xq[i];
        }
    }
    PlanePartition::new(e)
}

/// Generating function `Σ q^{|π|}` over plane partitions fitting in an
/// `l × m` array with entries at most `n`, by enumeration.
pub fn macmahon_count(l: usize, m: usize, n: usize) -> Result<QPoly> {
    const LIMIT: usize = 27;
    if l * m * n > LIMIT {
        return Err(Error::BoundExceeded(format!("l*m*n = {} > {LIMIT}", l * m * n)));
    }
    let mut out = QPoly::zero();
    let mut grid = vec![vec![0usize; m]; l];
    macmahon_rec(&mut grid, 0, n, &mut out);
    Ok(out)
}

fn macmahon_rec(grid: &mut Vec<Vec<usize>>, idx: usize, n: usize, out: &mut QPoly) {
    let l = grid.len();
    let m = grid.first().map_or(0, |r| r.len());
    if idx == l * m {
        let s: usize = grid.iter().flatten().sum();
        out.add_monomial(s as i64, 1.into());
        return;
    }
    let (i, j) = (idx / m, idx % m);
    let mut cap = n;
    if i > 0 {
        cap = cap.min(grid[i - 1][j]);
    }
    if j > 0 {
        cap = cap.min(grid[i][j - 1]);
    }
    for v in 0..=cap {
        grid[i][j] = v;
        macmahon_rec(grid, idx + 1, n, out);
    }
    grid[i][j] = 0;
}

/// `∏_{i,j,k} (1 - q^{i+j+k-1}) / (1 - q^{i+j+k-2})` over the box, computed
/// by exact polynomial division.
pub fn macmahon_product(l: usize, m: usize, n: usize) -> QPoly {
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for i in 1..=l {
        for j in 1..=m {
            for k in 1..=n {
                let e = (i + j + k) as i64;
                num = &num * &QPoly::from_terms([(0, 1), (e - 1, -1)]);
                den = &den * &QPoly::from_terms([(0, 1), (e - 2, -1)]);
            }
        }
    }
    num.div_exact(&den).expect("box product is a polynomial")
}

/// All words with the given content (letter `i+1` used `alpha[i]` times),
/// in lexicographic order.
pub fn words_with_content(alpha: &Composition) -> Vec<Vec<Letter>> {
    fn rec(left: &mut Vec<usize>, cur: &mut Vec<Letter>, total: usize, out: &mut Vec<Vec<Letter>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as Letter + 1);
                rec(left, cur, total, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut left = alpha.parts().to_vec();
    rec(&mut left, &mut Vec::new(), alpha.size(), &mut out);
    out
}

/// All words of length `len` over `1..=n`, in lexicographic order.
pub fn all_words(n: Letter, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=n).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}
