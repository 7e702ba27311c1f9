//! Box-ball dynamics. A letter 1 is an empty box, a letter `k > 1` a ball
//! of colour `k`. Time evolution threads a carrier `u^{(a)}_l` through the
//! path with the combinatorial R-matrix.

use std::fmt;

use crate::crystal::{combinatorial_r, RectTableau, TensorPath};
use crate::error::{Error, Result};
use crate::tableaux::{format_word, Letter};

/// Result of one carrier pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarrierPass {
    /// `T_l^{(a)}(p)`.
    pub image: TensorPath,
    /// Carrier states `u_0, u_1, …, u_L`.
    pub trace: Vec<RectTableau>,
}

/// `T_l^{(a)}`: threads `u^{(a)}_l` through `p` from left to right using
/// `R(u ⊗ b_j) = b_j' ⊗ u'`.
pub fn carrier_step(p: &TensorPath, a: usize, l: usize) -> Result<CarrierPass> {
    if a == 0 || l == 0 || a > p.rank() as usize {
        return Err(Error::Precondition(format!("carrier B^({a},{l}) over alphabet {}", p.rank())));
    }
    let mut u = RectTableau::highest(a, l);
    let mut trace = vec![u.clone()];
    let mut out = Vec::with_capacity(p.len());
    for b in p.factors() {
        let img = combinatorial_r(&u, b);
        out.push(img.left);
        u = img.right;
        trace.push(u.clone());
    }
    Ok(CarrierPass { image: TensorPath::new(out, p.rank())?, trace })
}

/// `T_∞^{(a)}`: increases the carrier width until two consecutive widths
/// give the same image, and confirms it against the widest allowed carrier.
/// Returns the stable width and the image.
pub fn t_infinity_with_width(p: &TensorPath, a: usize) -> Result<(usize, TensorPath)> {
    let smax = p.factors().iter().map(|b| b.s()).max().unwrap_or(1);
    let cap = p.len() * smax + 1;
    let top = carrier_step(p, a, cap)?.image;
    let mut prev = carrier_step(p, a, 1)?.image;
    for l in 1..cap {
        let next = carrier_step(p, a, l + 1)?.image;
        if next == prev && next == top {
            return Ok((l, next));
        }
        prev = next;
    }
    Err(Error::BoundExceeded(format!("carrier width did not stabilize below {cap}")))
}

/// `T_∞^{(a)}(p)`.
pub fn t_infinity(p: &TensorPath, a: usize) -> Result<TensorPath> {
    Ok(t_infinity_with_width(p, a)?.1)
}

fn ts_core(w: &[Letter], strict: bool) -> Result<Vec<Letter>> {
    let mut st = w.to_vec();
    let mut moved = vec![false; st.len()];
    let top = st.iter().copied().max().unwrap_or(1);
    for colour in (2..=top).rev() {
        while let Some(i) = (0..st.len()).find(|&i| st[i] == colour && !moved[i]) {
            st[i] = 1;
            match (i + 1..st.len()).find(|&j| st[j] == 1 && !moved[j]) {
                Some(j) => {
                    st[j] = colour;
                    moved[j] = true;
                }
                None if strict => {
                    return Err(Error::BoundExceeded(format!(
                        "ball {colour} at position {} has no empty box to its right",
                        i + 1
                    )))
                }
                None => {}
            }
        }
    }
    Ok(st)
}

/// Ball-moving rule on a word: colours from the largest down, each ball
/// leftmost first, moves once to the nearest empty box on its right. A ball
/// with no empty box to its right leaves the system.
pub fn takahashi_satsuma_word(w: &[Letter]) -> Vec<Letter> {
    ts_core(w, false).expect("open boundary never fails")
}

/// As [`takahashi_satsuma_word`], but a ball with nowhere to go is an error.
pub fn takahashi_satsuma_strict(w: &[Letter]) -> Result<Vec<Letter>> {
    ts_core(w, true)
}

/// Ball-moving rule on a `B^{1,1}` path.
pub fn takahashi_satsuma(p: &TensorPath) -> Result<TensorPath> {
    let w = p
        .as_word()
        .ok_or_else(|| Error::InvalidPath(format!("{p} has a factor other than B^(1,1)")))?;
    TensorPath::from_word(&takahashi_satsuma_word(&w))?.with_rank(p.rank())
}

/// Number of balls in `p, T(p), …, T^{L−1}(p)`.
pub fn soliton_tau(w: &[Letter]) -> usize {
    let mut st = w.to_vec();
    let mut total = 0;
    for _ in 0..w.len() {
        total += st.iter().filter(|&&x| x > 1).count();
        st = takahashi_satsuma_word(&st);
    }
    total
}

/// Time evolution rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// `T_∞^{(1)}` via carriers.
    Carrier,
    /// Ball-moving rule.
    BallMoving,
}

/// Rows `p, T(p), …, T^{steps}(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvolutionTable {
    pub rows: Vec<TensorPath>,
}

impl fmt::Display for EvolutionTable {
    /// One row per time step, letters separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let w = r.as_word().expect("box-ball rows are words");
            let s: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// Evolves a `B^{1,1}` path for `steps` time steps.
pub fn evolution_table(p: &TensorPath, steps: usize, alg: Algorithm) -> Result<EvolutionTable> {
    if !p.is_single_boxes() {
        return Err(Error::InvalidPath(format!("{p} has a factor other than B^(1,1)")));
    }
    let mut rows = vec![p.clone()];
    for _ in 0..steps {
        let last = rows.last().unwrap();
        let next = match alg {
            Algorithm::Carrier => t_infinity(last, 1)?,
            Algorithm::BallMoving => takahashi_satsuma(last)?,
        };
        rows.push(next);
    }
    Ok(EvolutionTable { rows })
}

/// Number of maximal runs of balls.
pub fn soliton_blocks(w: &[Letter]) -> usize {
    (0..w.len()).filter(|&i| w[i] > 1 && (i == 0 || w[i - 1] == 1)).count()
}

/// Digit-string form of a box-ball row.
pub fn format_row(p: &TensorPath) -> String {
    format_word(&p.as_word().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::parse_word;

    fn p(s: &str) -> TensorPath {
        TensorPath::parse(s).unwrap()
    }

    fn rows(t: &EvolutionTable) -> Vec<String> {
        t.rows.iter().map(format_row).collect()
    }

    #[test]
    fn test_single_step_examples() {
        assert_eq!(t_infinity(&p("4312111"), 1).unwrap().to_string(), "1141321");
        assert_eq!(t_infinity(&p("4321111"), 1).unwrap().to_string(), "1114321");
        assert_eq!(takahashi_satsuma(&p("4312111")).unwrap().to_string(), "1141321");
        assert_eq!(takahashi_satsuma(&p("3223123")).unwrap().to_string(), "1112312");
        assert_eq!(takahashi_satsuma(&p("1111")).unwrap().to_string(), "1111");
    }

    #[test]
    fn test_vacuum_carrier_returns() {
        let v = p("1111111").with_rank(3).unwrap();
        let pass = carrier_step(&v, 2, 3).unwrap();
        assert_eq!(pass.image, v);
        assert!(pass.trace.iter().all(|u| *u == RectTableau::highest(2, 3)));
    }

    #[test]
    fn test_tables() {
        let t = evolution_table(&p("4312111"), 6, Algorithm::Carrier).unwrap();
        assert_eq!(rows(&t), ["4312111", "1141321", "1114113", "1111411", "1111141", "1111114", "1111111"]);
        let t = evolution_table(&p("4321111"), 3, Algorithm::BallMoving).unwrap();
        assert_eq!(rows(&t), ["4321111", "1114321", "1111114", "1111111"]);
        let t = evolution_table(&p("3223123"), 6, Algorithm::BallMoving).unwrap();
        assert_eq!(
            rows(&t),
            ["3223123", "1112312", "1111231", "1111123", "1111112", "1111111", "1111111"]
        );
    }

    #[test]
    fn test_soliton_tau_examples() {
        assert_eq!(soliton_tau(&parse_word("4312111").unwrap()), 11);
        assert_eq!(soliton_tau(&parse_word("4321111").unwrap()), 7);
        assert_eq!(soliton_tau(&parse_word("11111").unwrap()), 0);
    }

    #[test]
    fn test_strict_overflow() {
        assert!(takahashi_satsuma_strict(&[1, 2]).is_err());
        assert_eq!(takahashi_satsuma_strict(&[2, 1]).unwrap(), vec![1, 2]);
        assert_eq!(takahashi_satsuma_word(&[1, 2]), vec![1, 1]);
    }
}
