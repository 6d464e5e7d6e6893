//! Semistandard tableaux, cyclage and the charge statistic (type A).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::TPoly;

/// A semistandard tableau in English notation; letters start at 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let bad = |msg: &str| Err(Error::InvalidTableau(format!("{msg}: {rows:?}")));
        if rows.iter().flatten().any(|&x| x == 0) {
            return bad("letters start at 1");
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("shape is not a partition");
        }
        if rows.iter().any(|r| r.windows(2).any(|p| p[0] > p[1])) {
            return bad("rows must weakly increase");
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return bad("columns must strictly increase");
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Letter multiplicities, indexed from letter 1 up to the largest letter.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }

    /// Row reading word, bottom row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Schensted row insertion.
    pub fn row_insert(&self, x: u32) -> Tableau {
        let mut rows = self.rows.clone();
        let mut carry = x;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > carry) {
                Some(p) => carry = std::mem::replace(&mut row[p], carry),
                None => {
                    row.push(carry);
                    return Tableau { rows };
                }
            }
        }
        rows.push(vec![carry]);
        Tableau { rows }
    }

    /// Remove the first cell of the bottom row and insert its letter into
    /// what is left.
    pub fn cyclage(&self) -> Result<Tableau> {
        if self.rows.len() <= 1 {
            return Err(Error::AlreadyRowTableau);
        }
        let mut rows = self.rows.clone();
        let last = rows.last_mut().expect("at least two rows");
        let x = last.remove(0);
        if last.is_empty() {
            rows.pop();
        }
        Ok(Tableau { rows }.row_insert(x))
    }

    fn dominant_content(&self) -> Result<Vec<usize>> {
        let c = self.content();
        if c.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonDominantContent(c));
        }
        Ok(c)
    }

    /// Number of cyclages needed to reach a single row.
    pub fn cocharge(&self) -> Result<usize> {
        let norm = content_norm(&self.dominant_content()?);
        let mut cur = self.clone();
        let mut steps = 0;
        while cur.rows.len() > 1 {
            if steps > norm {
                return Err(Error::CyclageDiverged(steps));
            }
            cur = cur.cyclage()?;
            steps += 1;
        }
        Ok(steps)
    }

    pub fn charge(&self) -> Result<usize> {
        let norm = content_norm(&self.dominant_content()?);
        let co = self.cocharge()?;
        Ok(norm - co)
    }

    /// The sequence `T, C(T), C^2(T), ...` down to the row tableau.
    pub fn cyclage_orbit(&self) -> Result<Vec<Tableau>> {
        let norm = content_norm(&self.dominant_content()?);
        let mut out = vec![self.clone()];
        while out.last().expect("non-empty").rows.len() > 1 {
            if out.len() > norm + 1 {
                return Err(Error::CyclageDiverged(out.len() - 1));
            }
            let next = out.last().expect("non-empty").cyclage()?;
            out.push(next);
        }
        Ok(out)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// `sum_i (i - 1) mu_i` over all parts.
pub fn content_norm(mu: &[usize]) -> usize {
    mu.iter().enumerate().map(|(i, m)| i * m).sum()
}

/// Insertion tableau of a word.
pub fn insertion_tableau(word: &[u32]) -> Tableau {
    word.iter().fold(Tableau::empty(), |t, &x| t.row_insert(x))
}

/// Semistandard tableaux of shape `lambda` and content `mu`.
pub fn tableaux(lambda: &[usize], mu: &[usize]) -> Vec<Tableau> {
    fn go(
        letter: usize,
        lambda: &[usize],
        mu: &[usize],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if letter == mu.len() {
            if rows.iter().map(Vec::len).eq(lambda.iter().copied()) {
                out.push(Tableau {
                    rows: rows.iter().filter(|r| !r.is_empty()).cloned().collect(),
                });
            }
            return;
        }
        let old: Vec<usize> = rows.iter().map(Vec::len).collect();
        strip(0, mu[letter], letter, &old, lambda, mu, rows, out);
    }

    // distribute `left` copies of the letter over rows r.. as a horizontal strip
    #[allow(clippy::too_many_arguments)]
    fn strip(
        r: usize,
        left: usize,
        letter: usize,
        old: &[usize],
        lambda: &[usize],
        mu: &[usize],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if left == 0 {
            go(letter + 1, lambda, mu, rows, out);
            return;
        }
        if r >= lambda.len() {
            return;
        }
        let cap_above = if r == 0 { usize::MAX } else { old[r - 1] };
        let room = lambda[r].min(cap_above).saturating_sub(old[r]);
        for k in (0..=room.min(left)).rev() {
            rows[r].extend(std::iter::repeat_n(letter as u32 + 1, k));
            strip(r + 1, left - k, letter, old, lambda, mu, rows, out);
            let len = rows[r].len();
            rows[r].truncate(len - k);
        }
    }

    if lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    go(0, lambda, mu, &mut rows, &mut out);
    out.sort();
    out
}

/// `K_{lambda,mu}(t)` as the charge generating function of tableaux.
pub fn kostka_via_charge(lambda: &[usize], mu: &[usize], n: usize) -> Result<TPoly> {
    let lambda: Vec<usize> = lambda.iter().copied().filter(|&x| x > 0).collect();
    let mu_trim: Vec<usize> = {
        let mut m = mu.to_vec();
        while m.last() == Some(&0) {
            m.pop();
        }
        m
    };
    let (a, b) = (lambda.iter().sum::<usize>(), mu_trim.iter().sum::<usize>());
    if a != b {
        return Err(Error::SizeMismatch(a, b));
    }
    for p in [&lambda, &mu_trim] {
        if p.len() > n {
            let w = crate::weight::Weight(p.iter().map(|&x| x as i64).collect());
            return Err(Error::TooManyRows(w, n));
        }
    }
    if mu_trim.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonDominantContent(mu_trim));
    }
    let mut total = TPoly::zero();
    for t in tableaux(&lambda, &mu_trim) {
        total += &TPoly::monomial(1, t.charge()?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion_examples() {
        let t = Tableau::empty().row_insert(3);
        assert_eq!(t.rows(), &[vec![3]]);
        let t = tab(&[&[1, 2]]).row_insert(1);
        assert_eq!(t, tab(&[&[1, 1], &[2]]));
        assert_eq!(
            insertion_tableau(&[1, 1, 2, 2, 3, 4]),
            tab(&[&[1, 1, 2, 2, 3, 4]])
        );
        let t = tab(&[&[1, 1, 4], &[2, 2], &[3]]);
        assert_eq!(insertion_tableau(&t.reading_word()), t);
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 1], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn cyclage_sequence() {
        let t = tab(&[&[1, 1, 4], &[2, 2], &[3]]);
        let orbit = t.cyclage_orbit().unwrap();
        let expected = [
            tab(&[&[1, 1, 4], &[2, 2], &[3]]),
            tab(&[&[1, 1, 3], &[2, 2, 4]]),
            tab(&[&[1, 1, 2], &[2, 3], &[4]]),
            tab(&[&[1, 1, 2, 4], &[2, 3]]),
            tab(&[&[1, 1, 2, 2], &[3, 4]]),
            tab(&[&[1, 1, 2, 2, 3], &[4]]),
            tab(&[&[1, 1, 2, 2, 3, 4]]),
        ];
        assert_eq!(orbit, expected);
        assert_eq!(t.cocharge().unwrap(), 6);
        assert_eq!(t.charge().unwrap(), 1);
        let row = tab(&[&[1, 1, 2]]);
        assert_eq!(row.cocharge().unwrap(), 0);
        assert!(matches!(row.cyclage(), Err(Error::AlreadyRowTableau)));
    }

    #[test]
    fn yamanouchi_has_charge_zero() {
        for lam in [vec![2, 1], vec![3, 2, 1], vec![2, 2, 1, 1], vec![4]] {
            let rows: Vec<Vec<u32>> = lam
                .iter()
                .enumerate()
                .map(|(r, &k)| vec![r as u32 + 1; k])
                .collect();
            assert_eq!(Tableau::new(rows).unwrap().charge().unwrap(), 0);
        }
    }

    #[test]
    fn non_dominant_content_is_rejected() {
        let t = tab(&[&[1, 2, 2]]);
        assert!(matches!(t.cocharge(), Err(Error::NonDominantContent(_))));
    }

    #[test]
    fn charge_kostka_examples() {
        assert_eq!(
            kostka_via_charge(&[2, 1], &[2, 1], 3).unwrap(),
            TPoly::one()
        );
        assert_eq!(
            kostka_via_charge(&[2, 1], &[1, 1, 1], 3).unwrap(),
            TPoly::from(vec![0, 1, 1])
        );
        let k = kostka_via_charge(&[3, 2, 1], &[2, 2, 1, 1], 4).unwrap();
        // four tableaux; the Lusztig sum gives the same polynomial
        assert_eq!(k, TPoly::from(vec![0, 1, 2, 1]));
        assert_eq!(k.eval_at_one(), 4);
        assert!(matches!(
            kostka_via_charge(&[2, 1], &[1, 1], 3),
            Err(Error::SizeMismatch(3, 2))
        ));
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(tableaux(&[2, 1], &[1, 1, 1]).len(), 2);
        assert_eq!(tableaux(&[3, 2, 1], &[1, 1, 1, 1, 1, 1]).len(), 16);
        assert_eq!(tableaux(&[2, 2], &[2, 1, 1]).len(), 1);
    }
}
