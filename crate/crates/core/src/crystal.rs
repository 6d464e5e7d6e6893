//! Crystals `B(lambda)` realised inside tensor powers of the vector
//! representation.
//!
//! Letters are signed integers: `k` for `k`, `-k` for `k-bar`, and `0` for
//! the middle letter of type B. Their order is
//! `1 < 2 < ... < n < 0 < -n < ... < -1`.
//!
//! Tensor rule: scanning a word left to right, each letter contributes
//! `phi_i` plus signs followed by `eps_i` minus signs. A plus cancels the
//! nearest uncancelled minus to its left. `f_i` acts on the letter carrying
//! the rightmost surviving plus, `e_i` on the letter carrying the leftmost
//! surviving minus. With this orientation the row reading word of a
//! tableau (bottom row first) behaves like the tableau itself.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem};
use crate::weight::Weight;
use crate::weyl::WeylElement;

pub type Letter = i8;

pub const DEFAULT_VERTEX_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Lower,
    Raise,
}

/// The letters of the vector representation in crystal order.
pub fn alphabet(rs: &RootSystem) -> Vec<Letter> {
    let n = rs.dim() as Letter;
    let mut out: Vec<Letter> = (1..=n).collect();
    match rs.family() {
        Family::A => {}
        Family::B => {
            out.push(0);
            out.extend((1..=n).rev().map(|k| -k));
        }
        Family::C | Family::D => out.extend((1..=n).rev().map(|k| -k)),
    }
    out
}

/// Position of a letter in the crystal order.
pub fn letter_rank(n: usize, l: Letter) -> i32 {
    let n = n as i32;
    let l = l as i32;
    match l.signum() {
        1 => l,
        0 => n + 1,
        _ => 2 * n + 2 + l,
    }
}

fn letter_f(rs: &RootSystem, l: Letter, i: usize) -> Option<Letter> {
    let n = rs.dim() as Letter;
    let i = i as Letter;
    if rs.family() == Family::A || i < n {
        return if l == i {
            Some(i + 1)
        } else if l == -(i + 1) {
            Some(-i)
        } else {
            None
        };
    }
    match rs.family() {
        Family::B => match l {
            x if x == n => Some(0),
            0 => Some(-n),
            _ => None,
        },
        Family::C => (l == n).then_some(-n),
        Family::D => {
            if l == n - 1 {
                Some(-n)
            } else if l == n {
                Some(-(n - 1))
            } else {
                None
            }
        }
        Family::A => unreachable!(),
    }
}

fn letter_e(rs: &RootSystem, l: Letter, i: usize) -> Option<Letter> {
    alphabet(rs)
        .into_iter()
        .find(|&m| letter_f(rs, m, i) == Some(l))
}

/// `(phi_i, eps_i)` of a single letter.
fn letter_string(rs: &RootSystem, l: Letter, i: usize) -> (usize, usize) {
    let mut phi = 0;
    let mut cur = l;
    while let Some(next) = letter_f(rs, cur, i) {
        phi += 1;
        cur = next;
    }
    let mut eps = 0;
    let mut cur = l;
    while let Some(prev) = letter_e(rs, cur, i) {
        eps += 1;
        cur = prev;
    }
    (phi, eps)
}

/// `(phi, eps, f, e)` of one letter for one index.
type LetterData = (u8, u8, Option<Letter>, Option<Letter>);

/// Precomputed letter data for one root system.
struct LetterTable {
    n: usize,
    offset: i32,
    /// `[letter][i-1] -> (phi, eps, f, e)`
    data: Vec<Vec<LetterData>>,
}

impl LetterTable {
    fn new(rs: &RootSystem) -> Self {
        let n = rs.dim();
        let offset = n as i32;
        let mut data = vec![Vec::new(); 2 * n + 1];
        for l in alphabet(rs) {
            data[(l as i32 + offset) as usize] = (1..=rs.rank())
                .map(|i| {
                    let (phi, eps) = letter_string(rs, l, i);
                    (phi as u8, eps as u8, letter_f(rs, l, i), letter_e(rs, l, i))
                })
                .collect();
        }
        LetterTable { n, offset, data }
    }

    fn get(&self, l: Letter, i: usize) -> LetterData {
        self.data[(l as i32 + self.offset) as usize][i - 1]
    }
}

/// A word in the letters of the vector representation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrystalVertex(pub Vec<Letter>);

impl CrystalVertex {
    pub fn new(word: Vec<Letter>) -> Self {
        CrystalVertex(word)
    }

    pub fn word(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self, n: usize) -> Weight {
        let mut w = vec![0i64; n];
        for &l in &self.0 {
            if l > 0 {
                w[l as usize - 1] += 1;
            } else if l < 0 {
                w[(-l) as usize - 1] -= 1;
            }
        }
        Weight(w)
    }

    /// Sort key following the crystal order of letters.
    pub fn order_key(&self, n: usize) -> Vec<i32> {
        self.0.iter().map(|&l| letter_rank(n, l)).collect()
    }
}

impl fmt::Display for CrystalVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| (1..10).contains(&l)) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            return Ok(());
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| {
                if l < 0 {
                    format!("{}\u{0304}", -l)
                } else {
                    l.to_string()
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for CrystalVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<Letter>> for CrystalVertex {
    fn from(w: Vec<Letter>) -> Self {
        CrystalVertex(w)
    }
}

/// Kashiwara operators on words for one root system.
pub struct CrystalOps<'a> {
    rs: &'a RootSystem,
    letters: LetterTable,
}

impl<'a> CrystalOps<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        CrystalOps {
            rs,
            letters: LetterTable::new(rs),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn weight(&self, b: &CrystalVertex) -> Weight {
        b.weight(self.letters.n)
    }

    /// Positions of the surviving plus (f) or minus (e) letters, with the
    /// counts `(phi, eps)` of the word.
    fn reduced_signature(&self, word: &[Letter], i: usize) -> (Vec<usize>, Vec<usize>) {
        let mut minus: Vec<usize> = Vec::new();
        let mut plus: Vec<usize> = Vec::new();
        for (pos, &l) in word.iter().enumerate() {
            let (phi, eps, _, _) = self.letters.get(l, i);
            for _ in 0..phi {
                if minus.pop().is_none() {
                    plus.push(pos);
                }
            }
            for _ in 0..eps {
                minus.push(pos);
            }
        }
        (plus, minus)
    }

    pub fn phi(&self, b: &CrystalVertex, i: usize) -> usize {
        self.reduced_signature(&b.0, i).0.len()
    }

    pub fn eps(&self, b: &CrystalVertex, i: usize) -> usize {
        self.reduced_signature(&b.0, i).1.len()
    }

    pub fn f(&self, b: &CrystalVertex, i: usize) -> Option<CrystalVertex> {
        let (plus, _) = self.reduced_signature(&b.0, i);
        let pos = *plus.last()?;
        let mut w = b.0.clone();
        w[pos] = self.letters.get(w[pos], i).2.expect("letter with phi > 0");
        Some(CrystalVertex(w))
    }

    pub fn e(&self, b: &CrystalVertex, i: usize) -> Option<CrystalVertex> {
        let (_, minus) = self.reduced_signature(&b.0, i);
        let pos = *minus.first()?;
        let mut w = b.0.clone();
        w[pos] = self.letters.get(w[pos], i).3.expect("letter with eps > 0");
        Some(CrystalVertex(w))
    }

    pub fn kashiwara(&self, b: &CrystalVertex, i: usize, dir: Direction) -> Option<CrystalVertex> {
        match dir {
            Direction::Lower => self.f(b, i),
            Direction::Raise => self.e(b, i),
        }
    }

    pub fn is_highest_weight(&self, b: &CrystalVertex) -> bool {
        (1..=self.rs.rank()).all(|i| self.eps(b, i) == 0)
    }

    /// Reflect `b` inside its `i`-string.
    pub fn simple_reflection(&self, b: &CrystalVertex, i: usize) -> CrystalVertex {
        let (plus, minus) = self.reduced_signature(&b.0, i);
        let k = plus.len() as i64 - minus.len() as i64;
        let mut cur = b.clone();
        if k >= 0 {
            for _ in 0..k {
                cur = self.f(&cur, i).expect("inside the string");
            }
        } else {
            for _ in 0..-k {
                cur = self.e(&cur, i).expect("inside the string");
            }
        }
        cur
    }

    /// Kashiwara action of a Weyl group element.
    pub fn weyl_action(&self, g: &WeylElement, b: &CrystalVertex) -> CrystalVertex {
        g.reduced_word()
            .iter()
            .rev()
            .fold(b.clone(), |acc, &i| self.simple_reflection(&acc, i))
    }

    /// Index of the simple root that a modified operator for `alpha` is
    /// conjugated from.
    pub fn base_index(&self, alpha: &Weight) -> usize {
        if self.rs.family() == Family::B && alpha.dot(alpha) == 1 {
            self.rs.rank()
        } else {
            1
        }
    }

    /// `f_alpha` (or `e_alpha`) for a root `alpha`; negative roots swap the
    /// direction.
    pub fn modified(
        &self,
        alpha: &Weight,
        b: &CrystalVertex,
        dir: Direction,
    ) -> Result<Option<CrystalVertex>> {
        let (alpha, dir) = self.normalise(alpha, dir)?;
        let base = self.base_index(&alpha);
        let table = self.rs.conjugator_table(base);
        let w = table.get(&alpha)?;
        Ok(self.conjugated(w, base, b, dir))
    }

    fn normalise(&self, alpha: &Weight, dir: Direction) -> Result<(Weight, Direction)> {
        if self.rs.is_positive_root(alpha) {
            Ok((alpha.clone(), dir))
        } else if self.rs.is_positive_root(&-alpha) {
            let flipped = match dir {
                Direction::Lower => Direction::Raise,
                Direction::Raise => Direction::Lower,
            };
            Ok((-alpha, flipped))
        } else {
            Err(Error::NotARoot(alpha.clone()))
        }
    }

    fn conjugated(
        &self,
        w: &WeylElement,
        base: usize,
        b: &CrystalVertex,
        dir: Direction,
    ) -> Option<CrystalVertex> {
        let moved = self.weyl_action(&w.inverse(), b);
        let acted = self.kashiwara(&moved, base, dir)?;
        Some(self.weyl_action(w, &acted))
    }

    /// Like [`CrystalOps::modified`], but applies every minimal-length
    /// conjugator and fails if they disagree.
    pub fn modified_checked(
        &self,
        alpha: &Weight,
        b: &CrystalVertex,
        dir: Direction,
    ) -> Result<Option<CrystalVertex>> {
        let (alpha, dir) = self.normalise(alpha, dir)?;
        let base = self.base_index(&alpha);
        let table = self.rs.conjugator_table(base);
        let all = table.all(&alpha)?;
        let first = self.conjugated(&all[0], base, b, dir);
        for w in &all[1..] {
            if self.conjugated(w, base, b, dir) != first {
                return Err(Error::ConjugatorDisagreement(format!(
                    "{alpha} on {b:?}: {:?} vs {w:?}",
                    all[0]
                )));
            }
        }
        Ok(first)
    }

    pub fn f_alpha(&self, alpha: &Weight, b: &CrystalVertex) -> Result<Option<CrystalVertex>> {
        self.modified(alpha, b, Direction::Lower)
    }

    pub fn e_alpha(&self, alpha: &Weight, b: &CrystalVertex) -> Result<Option<CrystalVertex>> {
        self.modified(alpha, b, Direction::Raise)
    }
}

pub fn kashiwara(
    rs: &RootSystem,
    b: &CrystalVertex,
    i: usize,
    dir: Direction,
) -> Option<CrystalVertex> {
    CrystalOps::new(rs).kashiwara(b, i, dir)
}

pub fn weyl_action_vertex(rs: &RootSystem, g: &WeylElement, b: &CrystalVertex) -> CrystalVertex {
    CrystalOps::new(rs).weyl_action(g, b)
}

pub fn modified_op(
    rs: &RootSystem,
    alpha: &Weight,
    b: &CrystalVertex,
    dir: Direction,
) -> Result<Option<CrystalVertex>> {
    CrystalOps::new(rs).modified(alpha, b, dir)
}

/// Number of letters in a word of weight `lambda` built from its rows.
fn check_shape(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.len() != rs.dim() {
        return Err(Error::DimensionMismatch(lambda.clone(), rs.dim()));
    }
    rs.check_dominant(lambda)?;
    if rs.family() == Family::A && lambda.0.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(())
}

/// Partition given as a list of parts, padded to the ambient dimension.
pub fn partition_weight(rs: &RootSystem, parts: &[i64]) -> Result<Weight> {
    let nonzero = parts.iter().filter(|&&p| p != 0).count();
    if nonzero > rs.dim() {
        return Err(Error::TooManyRows(Weight(parts.to_vec()), rs.dim()));
    }
    let mut v: Vec<i64> = parts.iter().copied().filter(|&p| p != 0).collect();
    v.resize(rs.dim(), 0);
    Ok(Weight(v))
}

/// A highest weight word of weight `lambda`: the row reading word of the
/// tableau whose row `r` is filled with `r`, bottom row first.
pub fn highest_weight_vertex(rs: &RootSystem, lambda: &Weight) -> Result<CrystalVertex> {
    check_shape(rs, lambda)?;
    let ops = CrystalOps::new(rs);
    let mut word = Vec::new();
    for r in (0..rs.dim()).rev() {
        let part = lambda[r];
        let letter = if part < 0 {
            -(r as Letter + 1)
        } else {
            r as Letter + 1
        };
        word.extend(std::iter::repeat_n(letter, part.unsigned_abs() as usize));
    }
    let b = CrystalVertex(word);
    if ops.is_highest_weight(&b) && ops.weight(&b) == *lambda {
        return Ok(b);
    }
    search_highest_weight(&ops, lambda)
}

fn search_highest_weight(ops: &CrystalOps<'_>, lambda: &Weight) -> Result<CrystalVertex> {
    let rs = ops.root_system();
    let len = lambda
        .0
        .iter()
        .map(|c| c.unsigned_abs() as usize)
        .sum::<usize>();
    let letters = alphabet(rs);
    let mut found: Option<CrystalVertex> = None;
    let mut stack = vec![Vec::new()];
    while let Some(w) = stack.pop() {
        if w.len() == len {
            let b = CrystalVertex(w);
            if ops.weight(&b) == *lambda && ops.is_highest_weight(&b) {
                let better = found
                    .as_ref()
                    .is_none_or(|f| b.order_key(rs.dim()) < f.order_key(rs.dim()));
                if better {
                    found = Some(b);
                }
            }
            continue;
        }
        for &l in &letters {
            let mut next = w.clone();
            next.push(l);
            stack.push(next);
        }
    }
    found.ok_or_else(|| Error::SpinWeightUnsupported(lambda.clone()))
}

/// `B(lambda)` with its Kashiwara edges.
pub struct CrystalGraph {
    lambda: Weight,
    n: usize,
    rank: usize,
    vertices: Vec<CrystalVertex>,
    index: HashMap<CrystalVertex, usize>,
    /// `f_edges[v][i-1]`
    f_edges: Vec<Vec<Option<u32>>>,
}

impl CrystalGraph {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in breadth-first order from the highest weight vertex.
    pub fn vertices(&self) -> &[CrystalVertex] {
        &self.vertices
    }

    pub fn highest_weight_vertex(&self) -> &CrystalVertex {
        &self.vertices[0]
    }

    pub fn index_of(&self, b: &CrystalVertex) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn contains(&self, b: &CrystalVertex) -> bool {
        self.index.contains_key(b)
    }

    pub fn weight(&self, k: usize) -> Weight {
        self.vertices[k].weight(self.n)
    }

    pub fn f_edge(&self, k: usize, i: usize) -> Option<usize> {
        self.f_edges[k][i - 1].map(|x| x as usize)
    }

    /// All `(source, i, target)` Kashiwara edges.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (k, row) in self.f_edges.iter().enumerate() {
            for i in 1..=self.rank {
                if let Some(t) = row[i - 1] {
                    out.push((k, i, t as usize));
                }
            }
        }
        out
    }

    /// Number of vertices of each weight.
    pub fn character(&self) -> HashMap<Weight, usize> {
        let mut out = HashMap::new();
        for k in 0..self.len() {
            *out.entry(self.weight(k)).or_insert(0) += 1;
        }
        out
    }

    /// Indices of the vertices whose weight is dominant.
    pub fn dominant_vertices(&self, rs: &RootSystem) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| rs.is_dominant(&self.weight(k)))
            .collect()
    }
}

pub fn generate_crystal(rs: &RootSystem, lambda: &Weight) -> Result<CrystalGraph> {
    generate_crystal_capped(rs, lambda, DEFAULT_VERTEX_CAP)
}

pub fn generate_crystal_capped(
    rs: &RootSystem,
    lambda: &Weight,
    cap: usize,
) -> Result<CrystalGraph> {
    let hw = highest_weight_vertex(rs, lambda)?;
    let ops = CrystalOps::new(rs);
    let rank = rs.rank();
    let mut vertices = vec![hw.clone()];
    let mut index = HashMap::from([(hw, 0usize)]);
    let mut f_edges: Vec<Vec<Option<u32>>> = vec![vec![None; rank]];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 1..=rank {
            let Some(next) = ops.f(&vertices[k], i) else {
                continue;
            };
            let target = match index.get(&next) {
                Some(&t) => t,
                None => {
                    if vertices.len() >= cap {
                        return Err(Error::BudgetExceeded(cap));
                    }
                    let t = vertices.len();
                    index.insert(next.clone(), t);
                    vertices.push(next);
                    f_edges.push(vec![None; rank]);
                    queue.push_back(t);
                    t
                }
            };
            f_edges[k][i - 1] = Some(target as u32);
        }
    }
    Ok(CrystalGraph {
        lambda: lambda.clone(),
        n: rs.dim(),
        rank,
        vertices,
        index,
        f_edges,
    })
}

/// Weyl dimension formula, as an independent count of `B(lambda)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> u128 {
    let top = &lambda.scale(2) + rs.rho2();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for a in rs.positive_roots() {
        num *= top.dot(a) as u128;
        den *= rs.rho2().dot(a) as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    num / den
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::new(f, r).unwrap()
    }

    fn v(w: &[Letter]) -> CrystalVertex {
        CrystalVertex(w.to_vec())
    }

    #[test]
    fn letter_crystals() {
        let a2 = rs(Family::A, 2);
        assert_eq!(kashiwara(&a2, &v(&[1]), 1, Direction::Lower), Some(v(&[2])));
        let c2 = rs(Family::C, 2);
        assert_eq!(
            kashiwara(&c2, &v(&[2]), 2, Direction::Lower),
            Some(v(&[-2]))
        );
        let b2 = rs(Family::B, 2);
        let ops = CrystalOps::new(&b2);
        assert_eq!(ops.f(&v(&[2]), 2), Some(v(&[0])));
        assert_eq!(ops.f(&v(&[0]), 2), Some(v(&[-2])));
        assert_eq!(ops.f(&v(&[-2]), 1), Some(v(&[-1])));
        let d4 = rs(Family::D, 4);
        let ops = CrystalOps::new(&d4);
        assert_eq!(ops.f(&v(&[3]), 4), Some(v(&[-4])));
        assert_eq!(ops.f(&v(&[4]), 4), Some(v(&[-3])));
        assert_eq!(ops.f(&v(&[4]), 3), None);
        for r in [b2, c2, d4] {
            let total = alphabet(&r).iter().fold(Weight::zero(r.dim()), |acc, &l| {
                &acc + &v(&[l]).weight(r.dim())
            });
            assert!(total.is_zero());
        }
        assert_eq!(alphabet(&rs(Family::B, 3)).len(), 7);
    }

    #[test]
    fn two_letter_string() {
        let a2 = rs(Family::A, 2);
        let ops = CrystalOps::new(&a2);
        let b = ops.f(&v(&[1, 1]), 1).unwrap();
        assert_eq!(b, v(&[1, 2]));
        let b = ops.f(&b, 1).unwrap();
        assert_eq!(b, v(&[2, 2]));
        assert_eq!(ops.f(&b, 1), None);
    }

    #[test]
    fn highest_weight_words() {
        let a2 = rs(Family::A, 2);
        assert_eq!(highest_weight_vertex(&a2, &wt![1, 0, 0]).unwrap(), v(&[1]));
        let ops = CrystalOps::new(&a2);
        let b = highest_weight_vertex(&a2, &wt![2, 1, 0]).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(ops.weight(&b), wt![2, 1, 0]);
        assert!(ops.is_highest_weight(&b));
        let c3 = rs(Family::C, 3);
        let b = highest_weight_vertex(&c3, &wt![2, 1, 1]).unwrap();
        assert_eq!(b.len(), 4);
        assert!(CrystalOps::new(&c3).is_highest_weight(&b));
        let d4 = rs(Family::D, 4);
        let b = highest_weight_vertex(&d4, &wt![1, 1, 1, -1]).unwrap();
        assert!(CrystalOps::new(&d4).is_highest_weight(&b));
        assert!(matches!(
            partition_weight(&a2, &[1, 1, 1, 1]),
            Err(Error::TooManyRows(..))
        ));
    }

    #[test]
    fn crystal_sizes_match_weyl_dimension() {
        let a2 = rs(Family::A, 2);
        assert_eq!(generate_crystal(&a2, &wt![1, 0, 0]).unwrap().len(), 3);
        assert_eq!(generate_crystal(&a2, &wt![2, 1, 0]).unwrap().len(), 8);
        let c2 = rs(Family::C, 2);
        assert_eq!(generate_crystal(&c2, &wt![1, 1]).unwrap().len(), 5);
        for (r, lam) in [
            (rs(Family::A, 3), wt![2, 1, 1, 0]),
            (rs(Family::B, 2), wt![1, 0]),
            (rs(Family::B, 3), wt![2, 1, 0]),
            (rs(Family::C, 3), wt![2, 1, 1]),
            (rs(Family::D, 4), wt![2, 1, 0, 0]),
            (rs(Family::D, 4), wt![1, 1, 1, -1]),
            (rs(Family::D, 4), wt![1, 1, 1, 1]),
        ] {
            let g = generate_crystal(&r, &lam).unwrap();
            assert_eq!(g.len() as u128, weyl_dimension(&r, &lam), "{r:?} {lam}");
            let hw: Vec<_> = g
                .vertices()
                .iter()
                .filter(|b| CrystalOps::new(&r).is_highest_weight(b))
                .collect();
            assert_eq!(hw.len(), 1);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let a2 = rs(Family::A, 2);
        assert!(matches!(
            generate_crystal_capped(&a2, &wt![2, 1, 0], 5),
            Err(Error::BudgetExceeded(5))
        ));
    }

    #[test]
    fn weyl_action_examples() {
        let a2 = rs(Family::A, 2);
        let ops = CrystalOps::new(&a2);
        let hw = highest_weight_vertex(&a2, &wt![2, 1, 0]).unwrap();
        let s1 = WeylElement::simple_reflection(&a2, 1);
        assert_eq!(ops.weight(&ops.weyl_action(&s1, &hw)), wt![1, 2, 0]);
        // pairing zero: fixed
        let b = v(&[1, 2]);
        assert_eq!(ops.simple_reflection(&b, 2), ops.f(&b, 2).unwrap());
        let b = v(&[2, 1]);
        assert_eq!(ops.simple_reflection(&b, 1), b);
    }

    #[test]
    fn modified_examples() {
        let a2 = rs(Family::A, 2);
        let ops = CrystalOps::new(&a2);
        let b = v(&[1, 1]);
        let r = ops.f_alpha(&wt![1, 0, -1], &b).unwrap().unwrap();
        assert_eq!(r, v(&[1, 3]));
        assert_eq!(ops.weight(&r), wt![1, 0, 1]);
        assert_eq!(ops.f_alpha(&wt![1, -1, 0], &b).unwrap(), ops.f(&b, 1));
        assert_eq!(
            ops.modified(&wt![-1, 0, 1], &r, Direction::Lower).unwrap(),
            Some(b)
        );
        let c3 = rs(Family::C, 3);
        assert!(matches!(
            CrystalOps::new(&c3).f_alpha(&wt![0, 0, 2], &v(&[3])),
            Err(Error::NotInOrbit(..))
        ));
        let b3 = rs(Family::B, 3);
        let ops = CrystalOps::new(&b3);
        assert_eq!(ops.f_alpha(&wt![1, 0, 0], &v(&[1])).unwrap(), Some(v(&[0])));
    }
}
