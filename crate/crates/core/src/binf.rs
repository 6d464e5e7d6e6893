//! Type A marginally large tableaux, multisegments and the atoms of
//! `B(infinity)`.
//!
//! The multisegment is the working representation. A marginally large
//! tableau on the letters `1..=n` has `n - 1` rows; row `i` holds
//! `1 + len(row i+1)` letters `i` followed by the letters `j > i`, one for
//! each copy of `e_i - e_j` in the multisegment.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::charge::Tableau;
use crate::error::{Error, Result};
use crate::poly::TPoly;

/// A multiset of positive roots `e_i - e_j`, `1 <= i < j <= n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<SegmentEntry>", try_from = "SegmentList")]
pub struct Multisegment {
    n: usize,
    mult: BTreeMap<(usize, usize), u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentEntry {
    pub i: usize,
    pub j: usize,
    pub mult: u32,
}

#[derive(Deserialize)]
#[serde(transparent)]
struct SegmentList(Vec<SegmentEntry>);

impl From<Multisegment> for Vec<SegmentEntry> {
    fn from(m: Multisegment) -> Self {
        m.mult
            .into_iter()
            .map(|((i, j), mult)| SegmentEntry { i, j, mult })
            .collect()
    }
}

impl TryFrom<SegmentList> for Multisegment {
    type Error = String;
    fn try_from(list: SegmentList) -> std::result::Result<Self, String> {
        let n = list.0.iter().map(|e| e.j).max().unwrap_or(2).max(2);
        let mut m = Multisegment::empty(n);
        for e in list.0 {
            if e.i == 0 || e.i >= e.j {
                return Err(format!("bad segment ({}, {})", e.i, e.j));
            }
            m.add(e.i, e.j, e.mult);
        }
        Ok(m)
    }
}

impl Multisegment {
    pub fn empty(n: usize) -> Self {
        Multisegment {
            n,
            mult: BTreeMap::new(),
        }
    }

    pub fn from_entries(n: usize, entries: &[((usize, usize), u32)]) -> Self {
        let mut m = Multisegment::empty(n);
        for &((i, j), k) in entries {
            m.add(i, j, k);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Multiplicity of `e_i - e_j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.mult.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, k: u32) {
        assert!(
            1 <= i && i < j && j <= self.n,
            "segment ({i}, {j}) out of range"
        );
        if k > 0 {
            *self.mult.entry((i, j)).or_insert(0) += k;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.mult.iter().map(|(&k, &v)| (k, v))
    }

    /// Number of segments.
    pub fn size(&self) -> u32 {
        self.mult.values().sum()
    }

    /// `sum m_a a` in simple-root coordinates (length `n - 1`).
    pub fn degree(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.n - 1];
        for (&(i, j), &k) in &self.mult {
            for x in &mut c[i - 1..j - 1] {
                *x += k as i64;
            }
        }
        c
    }

    pub fn height(&self) -> i64 {
        self.degree().iter().sum()
    }

    /// No simple root occurs.
    pub fn is_source(&self) -> bool {
        (1..self.n).all(|i| self.get(i, i + 1) == 0)
    }

    /// `F_i`: add one copy of the simple root `alpha_i`.
    pub fn modified_f(&self, i: usize) -> Multisegment {
        let mut m = self.clone();
        m.add(i, i + 1, 1);
        m
    }

    /// `E_i`: remove one copy of `alpha_i`, if present.
    pub fn modified_e(&self, i: usize) -> Option<Multisegment> {
        let k = self.get(i, i + 1);
        if k == 0 {
            return None;
        }
        let mut m = self.clone();
        if k == 1 {
            m.mult.remove(&(i, i + 1));
        } else {
            m.mult.insert((i, i + 1), k - 1);
        }
        Some(m)
    }

    /// The source of the atom containing `self`: strip every simple root.
    pub fn source(&self) -> Multisegment {
        let mut m = self.clone();
        m.mult.retain(|&(i, j), _| j > i + 1);
        m
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .mult
            .iter()
            .map(|(&(i, j), &k)| {
                if k == 1 {
                    format!("a{i}{j}")
                } else {
                    format!("{k}a{i}{j}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A marginally large tableau of type `A_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarginallyLargeTableau {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl MarginallyLargeTableau {
    /// Validate rows `1..=n-1` of a marginally large tableau.
    pub fn from_rows(n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if n < 2 || rows.len() != n - 1 {
            return bad(format!(
                "expected {} rows, got {}",
                n.saturating_sub(1),
                rows.len()
            ));
        }
        for (k, row) in rows.iter().enumerate() {
            let i = k as u32 + 1;
            let below = rows.get(k + 1).map_or(0, Vec::len);
            let own = row.iter().filter(|&&x| x == i).count();
            if own != below + 1 {
                return bad(format!(
                    "row {i} has {own} letters {i}, expected {}",
                    below + 1
                ));
            }
            if row.iter().any(|&x| x < i || x as usize > n) {
                return bad(format!("row {i} has a letter outside {i}..={n}"));
            }
        }
        Tableau::new(rows.clone())?;
        Ok(MarginallyLargeTableau { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `F_i` at the tableau level: change the rightmost `i` of row `i` into
    /// `i + 1`, then renormalise.
    pub fn modified_f(&self, i: usize) -> MarginallyLargeTableau {
        MarginallyLargeTableau {
            n: self.n,
            rows: f_rows(&self.rows, i),
        }
    }
}

impl fmt::Display for MarginallyLargeTableau {
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

impl fmt::Debug for MarginallyLargeTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Change the rightmost `i` of row `i` into `i + 1` and add a letter `k` at
/// the start of every row `k <= i`.
pub fn f_rows(rows: &[Vec<u32>], i: usize) -> Vec<Vec<u32>> {
    let mut out = rows.to_vec();
    let letter = i as u32;
    let row = &mut out[i - 1];
    let pos = row
        .iter()
        .rposition(|&x| x == letter)
        .expect("marginally large rows start with their own letter");
    row[pos] = letter + 1;
    for (k, row) in out.iter_mut().enumerate().take(i) {
        row.insert(0, k as u32 + 1);
    }
    out
}

/// Count letters `j > i` in row `i`, reading rows as given.
pub fn xi_of_rows(rows: &[Vec<u32>]) -> Multisegment {
    let n = rows
        .iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(2)
        .max(rows.len() as u32 + 1) as usize;
    let mut m = Multisegment::empty(n);
    for (k, row) in rows.iter().enumerate() {
        let i = k + 1;
        for &x in row {
            if x as usize > i {
                m.add(i, x as usize, 1);
            }
        }
    }
    m
}

pub fn xi(t: &MarginallyLargeTableau) -> Multisegment {
    let mut m = xi_of_rows(&t.rows);
    m.n = t.n;
    m
}

pub fn xi_inverse(m: &Multisegment) -> MarginallyLargeTableau {
    let n = m.n;
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n - 1];
    let mut below = 0;
    for i in (1..n).rev() {
        let mut row = vec![i as u32; below + 1];
        for j in i + 1..=n {
            row.extend(std::iter::repeat_n(j as u32, m.get(i, j) as usize));
        }
        below = row.len();
        rows[i - 1] = row;
    }
    MarginallyLargeTableau { n, rows }
}

pub fn is_source(t: &MarginallyLargeTableau) -> bool {
    xi(t).is_source()
}

fn nonsimple_roots(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 2..=n).map(move |j| (i, j)))
        .collect()
}

fn all_roots(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Multisets drawn from `roots` with at most `max_size` elements and
/// height at most `max_height`.
fn multisets(
    n: usize,
    roots: &[(usize, usize)],
    max_size: u32,
    max_height: i64,
) -> Vec<Multisegment> {
    fn go(
        k: usize,
        roots: &[(usize, usize)],
        size: u32,
        height: i64,
        cur: &mut Multisegment,
        out: &mut Vec<Multisegment>,
    ) {
        if k == roots.len() {
            out.push(cur.clone());
            return;
        }
        let (i, j) = roots[k];
        let h = (j - i) as i64;
        let mut used = 0;
        loop {
            go(
                k + 1,
                roots,
                size - used,
                height - used as i64 * h,
                cur,
                out,
            );
            if used + 1 > size || (used as i64 + 1) * h > height {
                break;
            }
            cur.add(i, j, 1);
            used += 1;
        }
        if used > 0 {
            let left = cur.get(i, j) - used;
            if left == 0 {
                cur.mult.remove(&(i, j));
            } else {
                cur.mult.insert((i, j), left);
            }
        }
    }
    let mut out = Vec::new();
    go(
        0,
        roots,
        max_size,
        max_height,
        &mut Multisegment::empty(n),
        &mut out,
    );
    out.sort();
    out
}

/// Every multisegment whose degree has height at most `max_height`.
pub fn multisegments_up_to_height(n: usize, max_height: i64) -> Vec<Multisegment> {
    multisets(n, &all_roots(n), u32::MAX, max_height)
}

/// Sources with at most `max_size` segments.
pub fn sources_up_to(n: usize, max_size: u32) -> Vec<Multisegment> {
    multisets(n, &nonsimple_roots(n), max_size, i64::MAX / 4)
}

/// An atom truncated to the vertices with at most `max_size` segments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedAtom {
    pub source: Multisegment,
    pub vertices: Vec<Multisegment>,
}

impl TruncatedAtom {
    /// Whether the vertex weights `-degree` are pairwise distinct.
    pub fn weights_distinct(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.vertices.iter().all(|v| seen.insert(v.degree()))
    }
}

pub fn atoms_up_to(n: usize, max_size: u32) -> Vec<TruncatedAtom> {
    sources_up_to(n, max_size)
        .into_iter()
        .map(|s| {
            let budget = max_size - s.size();
            let mut vertices = vec![s.clone()];
            // apply F_1, ..., F_{n-1} in turn with total count <= budget
            for i in 1..n {
                let mut next = Vec::new();
                for v in &vertices {
                    let mut cur = v.clone();
                    next.push(cur.clone());
                    while cur.size() < s.size() + budget {
                        cur = cur.modified_f(i);
                        next.push(cur.clone());
                    }
                }
                vertices = next;
            }
            vertices.sort();
            TruncatedAtom {
                source: s,
                vertices,
            }
        })
        .collect()
}

pub const DEFAULT_HEIGHT_BOUND: i64 = 12;

/// `M_t(beta)` as a sum of `t^{|S|}` over sources of degree `beta`, with
/// `beta` in simple-root coordinates.
pub fn mt_via_sources(n: usize, beta: &[i64], bound: i64) -> Result<TPoly> {
    let height: i64 = beta.iter().sum();
    if height > bound {
        return Err(Error::BoundExceeded { height, bound });
    }
    if beta.len() != n - 1 || beta.iter().any(|&c| c < 0) {
        return Ok(TPoly::zero());
    }
    let mut total = TPoly::zero();
    for s in multisets(n, &nonsimple_roots(n), u32::MAX, height) {
        if s.degree() == beta {
            total += &TPoly::monomial(1, s.size() as usize);
        }
    }
    Ok(total)
}

/// Truncated power series in `e^{-alpha_i}` with coefficients in `Z[t]`,
/// keyed by simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    max_height: i64,
    terms: HashMap<Vec<i64>, TPoly>,
}

impl Series {
    pub fn one(rank: usize, max_height: i64) -> Self {
        Series {
            max_height,
            terms: HashMap::from([(vec![0; rank], TPoly::one())]),
        }
    }

    pub fn coeff(&self, beta: &[i64]) -> TPoly {
        self.terms.get(beta).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, beta: Vec<i64>, p: &TPoly) {
        if beta.iter().sum::<i64>() <= self.max_height && !p.is_zero() {
            let e = self.terms.entry(beta).or_default();
            *e += p;
        }
    }

    /// Multiply by `1 / (1 - t e^{-root})`.
    pub fn times_geometric(&self, root: &[i64]) -> Series {
        let h: i64 = root.iter().sum();
        let mut out = Series {
            max_height: self.max_height,
            terms: HashMap::new(),
        };
        for (beta, p) in &self.terms {
            let mut cur = beta.clone();
            let mut k = 0;
            while cur.iter().sum::<i64>() <= self.max_height {
                out.add_term(cur.clone(), &p.shift(k));
                cur.iter_mut().zip(root).for_each(|(c, r)| *c += r);
                k += 1;
                if h == 0 {
                    break;
                }
            }
        }
        out
    }

    pub fn times(&self, other: &Series) -> Series {
        let mut out = Series {
            max_height: self.max_height,
            terms: HashMap::new(),
        };
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(sum, &(p * q));
            }
        }
        out
    }

    pub fn keys(&self) -> Vec<Vec<i64>> {
        let mut k: Vec<Vec<i64>> = self.terms.keys().cloned().collect();
        k.sort();
        k
    }
}

/// Compare `sum_beta M_t(beta) e^{-beta} / prod_simple (1 - t e^{-alpha})`
/// with `1 / prod_{alpha > 0} (1 - t e^{-alpha})` up to the given height.
/// Returns the degrees at which they differ.
pub fn product_identity_mismatches(n: usize, max_height: i64) -> Result<Vec<Vec<i64>>> {
    let rank = n - 1;
    let coords = |(i, j): (usize, usize)| {
        let mut c = vec![0i64; rank];
        for x in &mut c[i - 1..j - 1] {
            *x += 1;
        }
        c
    };
    let mut rhs = Series::one(rank, max_height);
    for r in all_roots(n) {
        rhs = rhs.times_geometric(&coords(r));
    }
    let mut mt = Series {
        max_height,
        terms: HashMap::new(),
    };
    for s in multisets(n, &nonsimple_roots(n), u32::MAX, max_height) {
        mt.add_term(s.degree(), &TPoly::monomial(1, s.size() as usize));
    }
    let mut lhs = mt;
    for i in 1..n {
        lhs = lhs.times_geometric(&coords((i, i + 1)));
    }
    let mut keys = lhs.keys();
    keys.extend(rhs.keys());
    keys.sort();
    keys.dedup();
    Ok(keys
        .into_iter()
        .filter(|k| lhs.coeff(k) != rhs.coeff(k))
        .collect())
}
