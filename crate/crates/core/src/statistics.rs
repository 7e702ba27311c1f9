//! Path statistics: charge and cocharge, energy sums `maj` and `Ē`, the tau
//! family, the tabloid charge `c_μ`, Haglund's `inv_μ` and `maj_μ`, and the
//! regularization map.
//!
//! Statistics that only make sense on `B^{1,1}` paths take the path as a
//! word of letters.

use crate::crystal::{pair_energies, RectTableau, TensorPath};
use crate::error::{Error, Result};
use crate::tableaux::{content, Composition, Letter, Partition};

/// Charge of a standard word: the letter 1 has index 0, and `k+1` keeps the
/// index of `k` when it stands to the right of `k`, otherwise gains one.
fn standard_charge(w: &[Letter]) -> usize {
    let n = w.len();
    let mut pos = vec![0; n + 1];
    for (i, &x) in w.iter().enumerate() {
        pos[x as usize] = i;
    }
    let mut idx = 0;
    let mut total = 0;
    for k in 2..=n {
        if pos[k] < pos[k - 1] {
            idx += 1;
        }
        total += idx;
    }
    total
}

/// Charge of a word with partition content. Standard subwords are split off
/// by scanning cyclically from the left for `1, 2, …`.
pub fn charge(w: &[Letter]) -> Result<usize> {
    let c = content(w);
    if c.as_partition().is_none() {
        return Err(Error::NonPartitionContent(format!("{c}")));
    }
    let mut live: Vec<(usize, Letter)> = w.iter().copied().enumerate().collect();
    let mut total = 0;
    while !live.is_empty() {
        let k = live.iter().map(|&(_, x)| x).max().unwrap();
        let mut picked = Vec::with_capacity(k as usize);
        let mut at = 0;
        for letter in 1..=k {
            let m = live.len();
            let j = (0..m)
                .map(|d| (at + d) % m)
                .find(|&j| live[j].1 == letter && !picked.contains(&j))
                .expect("partition content has every smaller letter");
            picked.push(j);
            at = j;
        }
        let mut sub: Vec<(usize, Letter)> = picked.iter().map(|&j| live[j]).collect();
        sub.sort();
        total += standard_charge(&sub.iter().map(|&(_, x)| x).collect::<Vec<_>>());
        picked.sort_unstable();
        for j in picked.into_iter().rev() {
            live.remove(j);
        }
    }
    Ok(total)
}

/// `n(content) − charge`.
pub fn cocharge(w: &[Letter]) -> Result<usize> {
    let ch = charge(w)?;
    Ok(content(w).sorted().n() - ch)
}

/// `Σ_{i<j} H(b_i ⊗ b_j^{(i+1)})`.
pub fn maj(p: &TensorPath) -> usize {
    pair_energies(p).iter().flatten().sum()
}

/// `Σ_{i<j} H̄(b_i ⊗ b_j^{(i+1)})`.
pub fn ebar(p: &TensorPath) -> usize {
    let sh = p.shapes();
    pair_energies(p)
        .iter()
        .enumerate()
        .flat_map(|(j, hs)| {
            let sh = &sh;
            hs.iter().enumerate().map(move |(i, h)| {
                sh[i].0.min(sh[j].0) * sh[i].1.min(sh[j].1) - h
            })
        })
        .sum()
}

/// `Σ_{i<j} min(r_i,r_j)·min(s_i,s_j)`, the value of `maj + Ē`.
pub fn pair_box_sum(shapes: &[(usize, usize)]) -> usize {
    let mut c = 0;
    for j in 0..shapes.len() {
        for i in 0..j {
            c += shapes[i].0.min(shapes[j].0) * shapes[i].1.min(shapes[j].1);
        }
    }
    c
}

/// `maj` of a `B^{1,1}` path: `Σ_i (L − i) χ(a_i < a_{i+1})`.
pub fn maj_word(w: &[Letter]) -> usize {
    let l = w.len();
    (0..l.saturating_sub(1)).filter(|&i| w[i] < w[i + 1]).map(|i| l - 1 - i).sum()
}

/// `τ^{r,s}(p) = maj(u^{(r)}_s ⊗ p)`.
pub fn tau_rs(p: &TensorPath, r: usize, s: usize) -> usize {
    maj(&p.prepend(RectTableau::highest(r, s)))
}

/// `τ(a) = maj(1 ⊗ a)` computed through the R-matrix.
pub fn tau(p: &TensorPath) -> Result<usize> {
    if !p.is_single_boxes() {
        return Err(Error::InvalidPath(format!("{p} has a factor other than B^(1,1)")));
    }
    Ok(maj(&p.prepend(RectTableau::letter(1))))
}

/// `τ(a) = maj(a) + L(1 − δ_{1,a_1})` on a word.
pub fn tau_word(w: &[Letter]) -> usize {
    match w.first() {
        None => 0,
        Some(&a) => maj_word(w) + if a == 1 { 0 } else { w.len() },
    }
}

fn blocks<'a>(w: &'a [Letter], mu: &[usize]) -> Result<Vec<&'a [Letter]>> {
    if mu.iter().sum::<usize>() != w.len() {
        return Err(Error::SizeMismatch(format!("|μ| = {} vs length {}", mu.iter().sum::<usize>(), w.len())));
    }
    let mut out = Vec::with_capacity(mu.len());
    let mut at = 0;
    for &m in mu {
        out.push(&w[at..at + m]);
        at += m;
    }
    Ok(out)
}

/// `τ_μ(a) = Σ_i τ(a_{[i]})` over consecutive blocks of lengths `μ_i`.
pub fn tau_mu(w: &[Letter], mu: &Composition) -> Result<usize> {
    Ok(blocks(w, mu.parts())?.into_iter().map(tau_word).sum())
}

/// `Σ_i maj(a_{[i]})` over consecutive blocks of lengths `μ_i`.
pub fn block_maj(w: &[Letter], mu: &Composition) -> Result<usize> {
    Ok(blocks(w, mu.parts())?.into_iter().map(maj_word).sum())
}

/// Charge of the reading word of the tabloid of a `B^{1,1}` path (row `k`
/// lists the positions of the letter `k`). The reading word is standard.
pub fn path_charge(w: &[Letter]) -> usize {
    let n = w.iter().copied().max().unwrap_or(0);
    let mut word = Vec::with_capacity(w.len());
    for k in 1..=n {
        let mut row: Vec<Letter> =
            w.iter().enumerate().filter(|&(_, &x)| x == k).map(|(j, _)| j as Letter + 1).collect();
        row.reverse();
        word.extend(row);
    }
    standard_charge(&word)
}

/// `c_μ(a) = Σ_i c(a_{[i]})`.
pub fn c_mu(w: &[Letter], mu: &Composition) -> Result<usize> {
    Ok(blocks(w, mu.parts())?.into_iter().map(path_charge).sum())
}

/// Filling of shape `μ` whose row `i` is the `i`-th block written right to left.
pub fn haglund_filling(w: &[Letter], mu: &Partition) -> Result<Vec<Vec<Letter>>> {
    Ok(blocks(w, mu.parts())?
        .into_iter()
        .map(|b| b.iter().rev().copied().collect())
        .collect())
}

/// `|Inv_μ|` on the filling: for each cell, the cells to its left in its
/// row and to its right in the row below holding a larger entry.
pub fn haglund_inv_count(w: &[Letter], mu: &Partition) -> Result<usize> {
    let t = haglund_filling(w, mu)?;
    let mut n = 0;
    for i in 0..t.len() {
        for j in 0..t[i].len() {
            let x = t[i][j];
            n += t[i][..j].iter().filter(|&&y| y > x).count();
            if let Some(below) = t.get(i + 1) {
                n += below.iter().skip(j + 1).filter(|&&y| y > x).count();
            }
        }
    }
    Ok(n)
}

/// `Des_μ`: sum of arm lengths of cells strictly larger than the cell above.
pub fn haglund_des(w: &[Letter], mu: &Partition) -> Result<usize> {
    let t = haglund_filling(w, mu)?;
    let mut d = 0;
    for i in 1..t.len() {
        for j in 0..t[i].len() {
            if t[i - 1][j] < t[i][j] {
                d += t[i].len() - 1 - j;
            }
        }
    }
    Ok(d)
}

/// `inv_μ = |Inv_μ| − Des_μ`.
pub fn inv_mu(w: &[Letter], mu: &Partition) -> Result<usize> {
    Ok(haglund_inv_count(w, mu)? - haglund_des(w, mu)?)
}

/// `maj_μ`: sum over the columns of the filling of the `B^{1,1}` maj of the
/// column read from top to bottom.
pub fn maj_mu(w: &[Letter], mu: &Partition) -> Result<usize> {
    let t = haglund_filling(w, mu)?;
    Ok((0..mu.part(0))
        .map(|j| {
            let col: Vec<Letter> = t.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect();
            maj_word(&col)
        })
        .sum())
}

/// `Inv_{(m,m)}(x, y)` for two words of length `m`.
fn inv_pair(x: &[Letter], y: &[Letter]) -> usize {
    let m = x.len();
    let a: Vec<Letter> = x.iter().chain(y).copied().collect();
    (0..m)
        .map(|k| (k + 1..k + m).filter(|&i| a[k] < a[i]).count())
        .sum()
}

/// `|Inv_μ|` computed block by block on the path: each block against the
/// next one left-padded with 1's, the last block against 1's.
pub fn haglund_inv_count_path(w: &[Letter], mu: &Partition) -> Result<usize> {
    let b = blocks(w, mu.parts())?;
    Ok((0..b.len())
        .map(|i| {
            let m = b[i].len();
            let next: &[Letter] = b.get(i + 1).copied().unwrap_or(&[]);
            let mut y = vec![1; m - next.len()];
            y.extend_from_slice(next);
            inv_pair(b[i], &y)
        })
        .sum())
}

/// `Des_μ` computed on consecutive pairs of blocks of the path.
pub fn haglund_des_path(w: &[Letter], mu: &Partition) -> Result<usize> {
    let b = blocks(w, mu.parts())?;
    let mut d = 0;
    for i in 0..b.len().saturating_sub(1) {
        let (m1, m2) = (b[i].len(), b[i + 1].len());
        let a: Vec<Letter> = b[i].iter().chain(b[i + 1]).copied().collect();
        for k in m1 - m2 + 1..=m1 {
            if a[k - 1] < a[k + m2 - 1] {
                d += k - (m1 - m2) - 1;
            }
        }
    }
    Ok(d)
}

/// Prepends `(1⋯n−1)^{λ_n} ⋯ (12)^{λ_3} 1^{λ_2}` to a `B^{1,1}` path of
/// weight `λ` with `n` the largest letter.
pub fn regularize(w: &[Letter]) -> Vec<Letter> {
    let lam = content(w);
    let n = lam.len();
    let mut out = Vec::new();
    for k in (2..=n).rev() {
        for _ in 0..lam.part(k - 1) {
            out.extend(1..k as Letter);
        }
    }
    out.extend_from_slice(w);
    out
}
