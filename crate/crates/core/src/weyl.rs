//! Weyl groups of classical type as signed permutations.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem};
use crate::weight::Weight;

/// A signed permutation: `images[k] = s * (j + 1)` means `w(e_{k+1}) = s e_{j+1}`.
///
/// `reduced_word = [a_1, ..., a_l]` means `w = s_{a_1} s_{a_2} ... s_{a_l}`, so
/// when acting on anything the last letter is applied first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    images: Vec<i32>,
    reduced_word: Vec<usize>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reduced_word.is_empty() {
            return write!(f, "id");
        }
        let word: Vec<String> = self.reduced_word.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", word.join("·"))
    }
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            images: (1..=n as i32).collect(),
            reduced_word: Vec::new(),
        }
    }

    /// The simple reflection `s_i` (1-based).
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        WeylElement {
            images: simple_images(rs, i),
            reduced_word: vec![i],
        }
    }

    /// Build from images, validating membership in the Weyl group of `rs`.
    pub fn from_images(rs: &RootSystem, images: Vec<i32>) -> Result<Self> {
        let n = rs.dim();
        let bad = || Error::InvalidTableau(format!("not a signed permutation: {images:?}"));
        if images.len() != n {
            return Err(Error::DimensionMismatch(
                Weight(images.iter().map(|&x| x as i64).collect()),
                n,
            ));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let j = x.unsigned_abs() as usize;
            if j == 0 || j > n || seen[j - 1] {
                return Err(bad());
            }
            seen[j - 1] = true;
        }
        let negatives = images.iter().filter(|&&x| x < 0).count();
        let ok = match rs.family() {
            Family::A => negatives == 0,
            Family::D => negatives % 2 == 0,
            _ => true,
        };
        if !ok {
            return Err(bad());
        }
        let reduced_word = greedy_reduced_word(rs, &images);
        Ok(WeylElement {
            images,
            reduced_word,
        })
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn reduced_word(&self) -> &[usize] {
        &self.reduced_word
    }

    pub fn length(&self) -> usize {
        self.reduced_word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.reduced_word.is_empty()
    }

    /// Number of sign changes.
    pub fn negatives(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    pub fn act(&self, w: &Weight) -> Weight {
        act_images(&self.images, w)
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let images = compose_images(&self.images, &other.images);
        let reduced_word = greedy_reduced_word(rs, &images);
        WeylElement {
            images,
            reduced_word,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut images = vec![0; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            let j = x.unsigned_abs() as usize - 1;
            images[j] = x.signum() * (k as i32 + 1);
        }
        let mut reduced_word = self.reduced_word.clone();
        reduced_word.reverse();
        WeylElement {
            images,
            reduced_word,
        }
    }

    /// `#{a > 0 : w(a) < 0}`, computed directly on the positive roots.
    pub fn inversion_count(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|a| is_negative(&self.act(a)))
            .count()
    }
}

/// `g . w`.
pub fn weyl_act(g: &WeylElement, w: &Weight) -> Weight {
    g.act(w)
}

fn act_images(images: &[i32], w: &Weight) -> Weight {
    let mut out = vec![0; w.len()];
    for (k, &x) in images.iter().enumerate() {
        let j = x.unsigned_abs() as usize - 1;
        out[j] = x.signum() as i64 * w[k];
    }
    Weight(out)
}

fn compose_images(a: &[i32], b: &[i32]) -> Vec<i32> {
    b.iter()
        .map(|&x| {
            let j = x.unsigned_abs() as usize - 1;
            x.signum() * a[j]
        })
        .collect()
}

fn simple_images(rs: &RootSystem, i: usize) -> Vec<i32> {
    let n = rs.dim();
    let mut images: Vec<i32> = (1..=n as i32).collect();
    if i < n && (rs.family() == Family::A || i < rs.rank()) {
        images.swap(i - 1, i);
        return images;
    }
    match rs.family() {
        Family::B | Family::C => images[n - 1] = -(n as i32),
        Family::D => {
            images[n - 2] = -(n as i32);
            images[n - 1] = -(n as i32 - 1);
        }
        Family::A => unreachable!("type A has no special node"),
    }
    images
}

/// Roots are negative exactly when their first non-zero coordinate is.
fn is_negative(v: &Weight) -> bool {
    v.0.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
}

/// Strip the smallest right descent until the identity is reached.
fn greedy_reduced_word(rs: &RootSystem, images: &[i32]) -> Vec<usize> {
    let mut cur = images.to_vec();
    let reflections: Vec<Vec<i32>> = (1..=rs.rank()).map(|i| simple_images(rs, i)).collect();
    let mut word = Vec::new();
    loop {
        let descent = (1..=rs.rank()).find(|&i| is_negative(&act_images(&cur, rs.simple_root(i))));
        match descent {
            None => break,
            Some(i) => {
                cur = compose_images(&cur, &reflections[i - 1]);
                word.push(i);
            }
        }
    }
    word.reverse();
    word
}

/// Every element of W, sorted by length and then by reduced word.
pub(crate) fn enumerate(rs: &RootSystem) -> Vec<WeylElement> {
    let n = rs.dim();
    let gens: Vec<Vec<i32>> = (1..=rs.rank()).map(|i| simple_images(rs, i)).collect();
    let start: Vec<i32> = (1..=n as i32).collect();
    let mut seen: HashSet<Vec<i32>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for g in &gens {
            let next = compose_images(&cur, g);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut all: Vec<WeylElement> = seen
        .into_iter()
        .map(|images| {
            let reduced_word = greedy_reduced_word(rs, &images);
            WeylElement {
                images,
                reduced_word,
            }
        })
        .collect();
    all.sort_by(|a, b| {
        (a.length(), &a.reduced_word, &a.images).cmp(&(b.length(), &b.reduced_word, &b.images))
    });
    all
}

/// For each root in the orbit of a simple root, the minimal-length Weyl
/// elements carrying the simple root to it.
pub struct ConjugatorTable {
    base: usize,
    minima: HashMap<Weight, Vec<WeylElement>>,
}

impl ConjugatorTable {
    pub(crate) fn build(rs: &RootSystem, base: usize) -> Self {
        let alpha = rs.simple_root(base);
        let mut minima: HashMap<Weight, Vec<WeylElement>> = HashMap::new();
        for w in rs.weyl_group() {
            let v = w.act(alpha);
            let entry = minima.entry(v).or_default();
            if entry.first().is_none_or(|m| m.length() == w.length()) {
                entry.push(w.clone());
            }
        }
        ConjugatorTable { base, minima }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Roots of the orbit, sorted.
    pub fn orbit(&self) -> Vec<Weight> {
        let mut v: Vec<Weight> = self.minima.keys().cloned().collect();
        v.sort();
        v
    }

    pub fn contains(&self, root: &Weight) -> bool {
        self.minima.contains_key(root)
    }

    /// All minimal-length solutions, the canonical one first.
    pub fn all(&self, target: &Weight) -> Result<&[WeylElement]> {
        self.minima
            .get(target)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::NotInOrbit(target.clone(), self.base))
    }

    /// The minimal-length solution with the lexicographically smallest
    /// reduced word.
    pub fn get(&self, target: &Weight) -> Result<&WeylElement> {
        Ok(&self.all(target)?[0])
    }
}

/// Shortest `w` with `w(alpha_base) = target`; ties broken by the
/// lexicographically smallest reduced word.
pub fn minimal_conjugator(rs: &RootSystem, target: &Weight, base: usize) -> Result<WeylElement> {
    rs.conjugator_table(base).get(target).cloned()
}

pub fn all_minimal_conjugators(
    rs: &RootSystem,
    target: &Weight,
    base: usize,
) -> Result<Vec<WeylElement>> {
    Ok(rs.conjugator_table(base).all(target)?.to_vec())
}
