//! Classical root systems in epsilon coordinates.
//!
//! Conventions, with `n` the ambient dimension:
//!
//! | family | rank | simple roots | last simple root |
//! |--------|------|--------------|------------------|
//! | `A_{n-1}` | `n-1` | `e_i - e_{i+1}` | `e_{n-1} - e_n` |
//! | `B_n` | `n` | `e_i - e_{i+1}`, `i < n` | `e_n` |
//! | `C_n` | `n` | `e_i - e_{i+1}`, `i < n` | `2e_n` |
//! | `D_n` | `n` | `e_i - e_{i+1}`, `i < n` | `e_{n-1} + e_n` |
//!
//! Positive roots are listed for `i = 1..n` as `e_i - e_j` then `e_i + e_j`
//! for each `j > i` in increasing order, followed by `e_i` (type B) or
//! `2e_i` (type C). This order is part of the public contract: memo tables
//! and exports depend on it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::weyl::{ConjugatorTable, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }

    /// Ambient dimension for a given rank.
    pub fn dim(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            _ => rank,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

pub struct RootSystem {
    family: Family,
    rank: usize,
    dim: usize,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    /// Twice the fundamental weights (they are half-integral for spin nodes).
    fundamental_weights2: Vec<Weight>,
    rho2: Weight,
    rho_check2: Weight,
    positive_index: HashMap<Weight, usize>,
    weyl: OnceLock<Vec<WeylElement>>,
    conjugators: Mutex<HashMap<usize, Arc<ConjugatorTable>>>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::RankTooSmall {
                family: family.letter(),
                rank,
                min: family.min_rank(),
            });
        }
        let n = family.dim(rank);
        let e = |i: usize| Weight::unit(n, i);

        let mut simple_roots: Vec<Weight> = (0..n - 1).map(|i| &e(i) - &e(i + 1)).collect();
        match family {
            Family::A => {}
            Family::B => simple_roots.push(e(n - 1)),
            Family::C => simple_roots.push(e(n - 1).scale(2)),
            Family::D => simple_roots.push(&e(n - 2) + &e(n - 1)),
        }

        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive_roots.push(&e(i) - &e(j));
                if family != Family::A {
                    positive_roots.push(&e(i) + &e(j));
                }
            }
            match family {
                Family::B => positive_roots.push(e(i)),
                Family::C => positive_roots.push(e(i).scale(2)),
                _ => {}
            }
        }

        let fundamental_weights2 = (0..rank)
            .map(|i| {
                let ones = |k: usize| {
                    let mut v = vec![0; n];
                    v[..k].iter_mut().for_each(|c| *c = 2);
                    Weight(v)
                };
                match family {
                    Family::A | Family::C => ones(i + 1),
                    Family::B if i + 1 < n => ones(i + 1),
                    Family::B => Weight(vec![1; n]),
                    Family::D if i + 2 < n => ones(i + 1),
                    Family::D if i + 2 == n => {
                        let mut v = vec![1; n];
                        v[n - 1] = -1;
                        Weight(v)
                    }
                    Family::D => Weight(vec![1; n]),
                }
            })
            .collect();

        let rho2 = positive_roots
            .iter()
            .fold(Weight::zero(n), |acc, a| &acc + a);

        // 2 * rho_check, pairing every simple root to 2.
        let rho_check2 = Weight(
            (0..n)
                .map(|i| {
                    let i = i as i64;
                    let n = n as i64;
                    match family {
                        Family::A => 2 * (n - 1 - i),
                        Family::B => 2 * (n - i),
                        Family::C => 2 * (n - i) - 1,
                        Family::D => 2 * (n - 1 - i),
                    }
                })
                .collect(),
        );

        let positive_index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();

        Ok(RootSystem {
            family,
            rank,
            dim: n,
            simple_roots,
            positive_roots,
            fundamental_weights2,
            rho2,
            rho_check2,
            positive_index,
            weyl: OnceLock::new(),
            conjugators: Mutex::new(HashMap::new()),
        })
    }

    /// Parse a family letter and build the root system.
    pub fn parse(family: &str, rank: usize) -> Result<Self> {
        RootSystem::new(family.parse()?, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of epsilon coordinates.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// Simple root `alpha_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i - 1]
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// All roots: the positive ones followed by their negatives.
    pub fn roots(&self) -> Vec<Weight> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|r| -r));
        all
    }

    pub fn positive_root_index(&self, root: &Weight) -> Option<usize> {
        self.positive_index.get(root).copied()
    }

    pub fn is_positive_root(&self, v: &Weight) -> bool {
        self.positive_index.contains_key(v)
    }

    pub fn is_root(&self, v: &Weight) -> bool {
        self.is_positive_root(v) || self.is_positive_root(&-v)
    }

    pub fn is_simple_root(&self, v: &Weight) -> bool {
        self.simple_roots.contains(v)
    }

    /// Twice the fundamental weights.
    pub fn fundamental_weights2(&self) -> &[Weight] {
        &self.fundamental_weights2
    }

    /// Fundamental weight `omega_i` (1-based) when it has integer coordinates.
    pub fn fundamental_weight(&self, i: usize) -> Option<Weight> {
        halve(&self.fundamental_weights2[i - 1])
    }

    /// Twice the half sum of the positive roots (always integral).
    pub fn rho2(&self) -> &Weight {
        &self.rho2
    }

    /// `rho` itself, when integral (types A with even rank, C, D).
    pub fn rho(&self) -> Option<Weight> {
        halve(&self.rho2)
    }

    /// Twice the functional `rho_check` in epsilon coordinates.
    pub fn rho_check2(&self) -> &Weight {
        &self.rho_check2
    }

    fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.len() != self.dim {
            return Err(Error::DimensionMismatch(w.clone(), self.dim));
        }
        Ok(())
    }

    /// `<w, a^vee> = 2<w,a>/<a,a>` for a root `a`.
    pub fn pair(&self, w: &Weight, a: &Weight) -> Result<i64> {
        self.check_dim(w)?;
        if !self.is_root(a) {
            return Err(Error::NotARoot(a.clone()));
        }
        let num = 2 * w.dot(a);
        let den = a.dot(a);
        if num % den != 0 {
            return Err(Error::NonIntegralWeight(format!(
                "<{w}, {a}^vee> = {num}/{den}"
            )));
        }
        Ok(num / den)
    }

    /// Pairing against the simple coroot `alpha_i^vee` (1-based).
    pub fn pair_simple(&self, w: &Weight, i: usize) -> i64 {
        let a = &self.simple_roots[i - 1];
        2 * w.dot(a) / a.dot(a)
    }

    /// Coordinates of `w` in the basis of fundamental weights.
    pub fn omega_coords(&self, w: &Weight) -> Result<Vec<i64>> {
        self.check_dim(w)?;
        (1..=self.rank)
            .map(|i| {
                let a = &self.simple_roots[i - 1];
                let num = 2 * w.dot(a);
                let den = a.dot(a);
                if num % den != 0 {
                    Err(Error::NonIntegralWeight(format!("{w}")))
                } else {
                    Ok(num / den)
                }
            })
            .collect()
    }

    /// The weight `sum_i seq_i omega_i`, rejected if not integral in epsilon
    /// coordinates.
    pub fn from_omega(&self, seq: &[i64]) -> Result<Weight> {
        if seq.len() != self.rank {
            return Err(Error::DimensionMismatch(Weight(seq.to_vec()), self.rank));
        }
        let doubled = seq
            .iter()
            .zip(&self.fundamental_weights2)
            .fold(Weight::zero(self.dim), |acc, (&k, w)| &acc + &w.scale(k));
        halve(&doubled).ok_or_else(|| {
            Error::NonIntegralWeight(format!("half-integral epsilon coordinates for {seq:?}"))
        })
    }

    /// Coefficients of `beta` in the basis of simple roots, or `None` when
    /// `beta` is not in the root lattice.
    pub fn simple_coords(&self, beta: &Weight) -> Option<Vec<i64>> {
        if beta.len() != self.dim {
            return None;
        }
        let n = self.dim;
        let prefix: Vec<i64> = beta
            .0
            .iter()
            .scan(0, |s, &c| {
                *s += c;
                Some(*s)
            })
            .collect();
        let total = prefix[n - 1];
        let coords = match self.family {
            Family::A => {
                if total != 0 {
                    return None;
                }
                prefix[..n - 1].to_vec()
            }
            Family::B => prefix,
            Family::C => {
                if total % 2 != 0 {
                    return None;
                }
                let mut c = prefix[..n - 1].to_vec();
                c.push(total / 2);
                c
            }
            Family::D => {
                if total % 2 != 0 {
                    return None;
                }
                let mut c = prefix[..n - 2].to_vec();
                c.push((prefix[n - 2] - beta[n - 1]) / 2);
                c.push(total / 2);
                c
            }
        };
        debug_assert_eq!(&self.from_simple_coords(&coords), beta);
        Some(coords)
    }

    pub fn from_simple_coords(&self, coords: &[i64]) -> Weight {
        coords
            .iter()
            .zip(&self.simple_roots)
            .fold(Weight::zero(self.dim), |acc, (&c, a)| &acc + &a.scale(c))
    }

    /// Whether `beta` is a non-negative integer combination of simple roots.
    pub fn in_positive_cone(&self, beta: &Weight) -> bool {
        self.simple_coords(beta)
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// `<beta, rho_check>` for `beta` in the root lattice.
    pub fn height(&self, beta: &Weight) -> Option<i64> {
        self.simple_coords(beta).map(|c| c.iter().sum())
    }

    /// Height of a positive root: the number of simple roots in it.
    pub fn root_height(&self, root: &Weight) -> Result<i64> {
        if !self.is_positive_root(root) {
            return Err(Error::NotAPositiveRoot(root.clone()));
        }
        Ok(self.height(root).expect("roots lie in the root lattice"))
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.len() == self.dim && (1..=self.rank).all(|i| self.pair_simple(w, i) >= 0)
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_dim(w)?;
        if !self.is_dominant(w) {
            return Err(Error::NotDominant(w.clone()));
        }
        Ok(())
    }

    /// The highest root.
    pub fn highest_root(&self) -> Weight {
        self.positive_roots
            .iter()
            .max_by_key(|r| self.height(r).unwrap())
            .cloned()
            .expect("non-empty root system")
    }

    /// Long roots in types B and C are the ones of squared length 2 (B) or 4 (C).
    pub fn is_long(&self, root: &Weight) -> bool {
        match self.family {
            Family::A | Family::D => true,
            Family::B => root.dot(root) == 2,
            Family::C => root.dot(root) == 4,
        }
    }

    /// The Weyl group, enumerated once and cached. Elements are sorted by
    /// length, then by reduced word.
    pub fn weyl_group(&self) -> &[WeylElement] {
        self.weyl.get_or_init(|| crate::weyl::enumerate(self))
    }

    /// Minimal-length conjugators for the W-orbit of the simple root `base`.
    pub fn conjugator_table(&self, base: usize) -> Arc<ConjugatorTable> {
        let mut guard = self.conjugators.lock().expect("conjugator table lock");
        guard
            .entry(base)
            .or_insert_with(|| Arc::new(ConjugatorTable::build(self, base)))
            .clone()
    }
}

fn halve(w: &Weight) -> Option<Weight> {
    if w.0.iter().all(|c| c % 2 == 0) {
        Some(Weight(w.0.iter().map(|c| c / 2).collect()))
    } else {
        None
    }
}
