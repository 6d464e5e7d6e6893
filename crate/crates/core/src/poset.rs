//! Dominance order on dominant weights.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem};
use crate::weight::Weight;

/// `nu <= mu` in dominance order. Type A weights of different sizes are
/// first brought to the same size by adding full columns.
pub fn dominance_leq(rs: &RootSystem, nu: &Weight, mu: &Weight) -> Result<bool> {
    for w in [nu, mu] {
        if w.len() != rs.dim() {
            return Err(Error::DimensionMismatch(w.clone(), rs.dim()));
        }
    }
    let diff = if rs.family() == Family::A {
        let n = rs.dim() as i64;
        let gap = mu.size() - nu.size();
        if gap % n != 0 {
            return Err(Error::IncomparableLattice(nu.clone(), mu.clone()));
        }
        let shift = Weight(vec![gap / n; rs.dim()]);
        &(mu - nu) - &shift
    } else {
        mu - nu
    };
    Ok(rs.in_positive_cone(&diff))
}

/// The dominant weights below `lambda`, with all cocover relations.
#[derive(Clone, Debug)]
pub struct DominantInterval {
    lambda: Weight,
    elements: Vec<Weight>,
    heights: Vec<i64>,
    index: HashMap<Weight, usize>,
    /// For each element, the elements it covers with the labelling root.
    cocovers: Vec<Vec<(usize, Weight)>>,
    bottom: usize,
}

impl DominantInterval {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// Elements in the fixed linear extension: height below lambda, then
    /// coordinates.
    pub fn elements(&self) -> &[Weight] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> &Weight {
        &self.elements[self.bottom]
    }

    pub fn index_of(&self, nu: &Weight) -> Option<usize> {
        self.index.get(nu).copied()
    }

    pub fn contains(&self, nu: &Weight) -> bool {
        self.index.contains_key(nu)
    }

    /// `<lambda - nu, rho_check>` for the element at position `k`.
    pub fn depth(&self, k: usize) -> i64 {
        self.heights[k]
    }

    /// Cocovers `(nu, alpha)` of the element `mu` (which must belong to the
    /// interval).
    pub fn cocovers_of(&self, mu: &Weight) -> Vec<(Weight, Weight)> {
        match self.index_of(mu) {
            None => Vec::new(),
            Some(k) => self.cocovers[k]
                .iter()
                .map(|(j, a)| (self.elements[*j].clone(), a.clone()))
                .collect(),
        }
    }

    /// Every cocover relation `(from, to, root)` in linear-extension order.
    pub fn cocover_edges(&self) -> Vec<(Weight, Weight, Weight)> {
        self.cocovers
            .iter()
            .enumerate()
            .flat_map(|(k, list)| {
                list.iter().map(move |(j, a)| {
                    (
                        self.elements[k].clone(),
                        self.elements[*j].clone(),
                        a.clone(),
                    )
                })
            })
            .collect()
    }

    pub fn to_export(&self) -> IntervalExport {
        IntervalExport {
            lambda: self.lambda.clone(),
            bottom: self.bottom().clone(),
            elements: self.elements.clone(),
            cocovers: self
                .cocover_edges()
                .into_iter()
                .map(|(from, to, root)| CocoverExport { from, to, root })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_export()).expect("serializable")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalExport {
    pub lambda: Weight,
    pub bottom: Weight,
    pub elements: Vec<Weight>,
    pub cocovers: Vec<CocoverExport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocoverExport {
    pub from: Weight,
    pub to: Weight,
    pub root: Weight,
}

/// All dominant `nu <= lambda`. Found by walking down from `lambda` along
/// positive roots; covers in the dominant order are always differences of
/// positive roots, so no element is missed.
pub fn interval(rs: &RootSystem, lambda: &Weight) -> Result<DominantInterval> {
    rs.check_dominant(lambda)?;
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(cur) = queue.pop_front() {
        for a in rs.positive_roots() {
            let next = &cur - a;
            if rs.is_dominant(&next) && !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut keyed: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|nu| (rs.height(&(lambda - &nu)).expect("below lambda"), nu))
        .collect();
    keyed.sort();
    let (heights, elements): (Vec<i64>, Vec<Weight>) = keyed.into_iter().unzip();
    let index: HashMap<Weight, usize> = elements
        .iter()
        .enumerate()
        .map(|(k, w)| (w.clone(), k))
        .collect();

    let n = elements.len();
    let below = |a: usize, b: usize| a != b && rs.in_positive_cone(&(&elements[b] - &elements[a]));
    let mut cocovers = vec![Vec::new(); n];
    for (k, list) in cocovers.iter_mut().enumerate() {
        // candidates strictly below k sit later in the linear extension
        let lower: Vec<usize> = (k + 1..n).filter(|&j| below(j, k)).collect();
        for &j in &lower {
            if !lower.iter().any(|&m| below(j, m)) {
                list.push((j, &elements[k] - &elements[j]));
            }
        }
    }
    let minimal: Vec<usize> = (0..n).filter(|&k| cocovers[k].is_empty()).collect();
    debug_assert_eq!(minimal.len(), 1, "unique bottom below {lambda}");
    Ok(DominantInterval {
        lambda: lambda.clone(),
        elements,
        heights,
        index,
        cocovers,
        bottom: minimal[0],
    })
}

/// Cocovers `(nu, mu - nu)` of a dominant weight.
pub fn cocovers(rs: &RootSystem, mu: &Weight) -> Result<Vec<(Weight, Weight)>> {
    Ok(interval(rs, mu)?.cocovers_of(mu))
}

/// Greatest lower bound of two interval elements, if it exists.
pub fn meet(iv: &DominantInterval, rs: &RootSystem, a: &Weight, b: &Weight) -> Option<Weight> {
    let lower: Vec<&Weight> = iv
        .elements()
        .iter()
        .filter(|c| rs.in_positive_cone(&(a - *c)) && rs.in_positive_cone(&(b - *c)))
        .collect();
    let top: Vec<&&Weight> = lower
        .iter()
        .filter(|c| lower.iter().all(|d| rs.in_positive_cone(&(**c - *d))))
        .collect();
    match top.as_slice() {
        [one] => Some((**one).clone()),
        _ => None,
    }
}

/// Size condition under which all cocovers below `lambda` come from roots
/// in the orbit of the first simple root (or the short roots in type B).
pub fn stable_range(rs: &RootSystem, lambda: &Weight) -> bool {
    let size = lambda.size();
    let n = rs.dim() as i64;
    match rs.family() {
        Family::A => true,
        Family::B => 2 * n > size,
        Family::C => 2 * n > size + 1,
        Family::D => n > size,
    }
}

/// Smallest rank in the stable range for a partition of the given size.
pub fn min_stable_rank(family: Family, size: usize) -> usize {
    let r = match family {
        Family::A => 1,
        Family::B => size / 2 + 1,
        Family::C => size.div_ceil(2) + 1,
        Family::D => size + 1,
    };
    r.max(family.min_rank())
}

/// `w_mu^+(t)` as a list of `(nu, exponent)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerSum {
    pub mu: Weight,
    pub terms: Vec<(Weight, i64)>,
}

impl LayerSum {
    pub fn exponent(&self, nu: &Weight) -> Option<i64> {
        self.terms.iter().find(|(w, _)| w == nu).map(|(_, e)| *e)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

pub fn layer_sum(rs: &RootSystem, mu: &Weight) -> Result<LayerSum> {
    let iv = interval(rs, mu)?;
    Ok(LayerSum {
        mu: mu.clone(),
        terms: iv
            .elements()
            .iter()
            .enumerate()
            .map(|(k, nu)| (nu.clone(), iv.depth(k)))
            .collect(),
    })
}

/// Partitions of `size` with at most `parts` parts, in reverse lex order.
pub fn partitions(size: usize, parts: usize) -> Vec<Vec<i64>> {
    fn go(rest: usize, max: usize, parts: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p as i64);
            go(rest - p, p, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, parts, &mut Vec::new(), &mut out);
    out
}

/// Pad a partition with zeros to length `n`.
pub fn padded(parts: &[i64], n: usize) -> Weight {
    let mut v = parts.to_vec();
    v.resize(n, 0);
    Weight(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::new(f, r).unwrap()
    }

    #[test]
    fn dominance_examples() {
        let a3 = rs(Family::A, 3);
        assert!(dominance_leq(&a3, &wt![2, 2, 1, 1], &wt![3, 2, 1, 0]).unwrap());
        assert!(dominance_leq(&a3, &wt![3, 2, 1, 0], &wt![3, 2, 1, 0]).unwrap());
        assert!(dominance_leq(&a3, &wt![1, 1, 0, 0], &wt![3, 2, 1, 0]).unwrap());
        assert!(matches!(
            dominance_leq(&a3, &wt![1, 0, 0, 0], &wt![3, 2, 1, 0]),
            Err(Error::IncomparableLattice(..))
        ));
        let c3 = rs(Family::C, 3);
        assert!(!dominance_leq(&c3, &wt![2, 2, 0], &wt![2, 1, 1]).unwrap());
    }

    #[test]
    fn interval_examples() {
        let a3 = rs(Family::A, 3);
        let iv = interval(&a3, &wt![3, 2, 1, 0]).unwrap();
        assert_eq!(
            iv.elements(),
            &[
                wt![3, 2, 1, 0],
                wt![2, 2, 2, 0],
                wt![3, 1, 1, 1],
                wt![2, 2, 1, 1]
            ]
        );
        assert_eq!(iv.bottom(), &wt![2, 2, 1, 1]);

        let c3 = rs(Family::C, 3);
        let iv = interval(&c3, &wt![2, 1, 1]).unwrap();
        let mut els = iv.elements().to_vec();
        els.sort();
        assert_eq!(
            els,
            vec![wt![0, 0, 0], wt![1, 1, 0], wt![2, 0, 0], wt![2, 1, 1]]
        );
        assert_eq!(iv.bottom(), &wt![0, 0, 0]);

        let zero = interval(&c3, &wt![0, 0, 0]).unwrap();
        assert_eq!(zero.elements(), &[wt![0, 0, 0]]);
        assert!(matches!(
            interval(&c3, &wt![0, 1, 0]),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn cocover_examples() {
        let a3 = rs(Family::A, 3);
        let mut cc = cocovers(&a3, &wt![3, 2, 1, 0]).unwrap();
        cc.sort();
        assert_eq!(
            cc,
            vec![
                (wt![2, 2, 2, 0], wt![1, 0, -1, 0]),
                (wt![3, 1, 1, 1], wt![0, 1, 0, -1]),
            ]
        );
        let c3 = rs(Family::C, 3);
        assert_eq!(
            cocovers(&c3, &wt![1, 1, 0]).unwrap(),
            vec![(wt![0, 0, 0], wt![1, 1, 0])]
        );
        let b2 = rs(Family::B, 2);
        assert_eq!(
            cocovers(&b2, &wt![1, 0]).unwrap(),
            vec![(wt![0, 0], wt![1, 0])]
        );
    }

    #[test]
    fn stable_range_examples() {
        assert!(stable_range(&rs(Family::C, 3), &wt![2, 1, 1]));
        assert!(!stable_range(&rs(Family::D, 4), &wt![4, 2, 0, 0]));
        // 2 > 2/2, so (1,1) is already in range for B2
        assert!(stable_range(&rs(Family::B, 2), &wt![1, 1]));
        assert!(!stable_range(&rs(Family::B, 2), &wt![2, 2]));
        assert!(stable_range(&rs(Family::B, 3), &wt![1, 1, 0]));
        for f in [Family::B, Family::C, Family::D] {
            for size in 0..8 {
                let r = min_stable_rank(f, size);
                let r_sys = rs(f, r);
                let lam = padded(&[size as i64], r);
                assert!(stable_range(&r_sys, &lam), "{f}{r} size {size}");
                if r > f.min_rank() {
                    let smaller = rs(f, r - 1);
                    assert!(!stable_range(&smaller, &padded(&[size as i64], r - 1)));
                }
            }
        }
    }

    #[test]
    fn layer_sum_examples() {
        let a2 = rs(Family::A, 2);
        let ls = layer_sum(&a2, &wt![2, 1, 0]).unwrap();
        assert_eq!(ls.terms, vec![(wt![2, 1, 0], 0), (wt![1, 1, 1], 2)]);
        let c3 = rs(Family::C, 3);
        assert_eq!(
            layer_sum(&c3, &wt![0, 0, 0]).unwrap().terms,
            vec![(wt![0, 0, 0], 0)]
        );
        let ls = layer_sum(&c3, &wt![1, 1, 0]).unwrap();
        // <e1 + e2, rho_check> with rho_check = (5/2, 3/2, 1/2)
        assert_eq!(wt![1, 1, 0].dot(c3.rho_check2()), 2 * 4);
        assert_eq!(ls.terms, vec![(wt![1, 1, 0], 0), (wt![0, 0, 0], 4)]);
    }

    #[test]
    fn partitions_enumerate() {
        assert_eq!(partitions(4, 4).len(), 5);
        assert_eq!(partitions(6, 4).len(), 9);
        assert_eq!(partitions(0, 3), vec![Vec::<i64>::new()]);
    }
}
