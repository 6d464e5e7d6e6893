//! Kostant partition functions, Kostka–Foulkes polynomials and atomic
//! polynomials.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::TPoly;
use crate::poset::{interval, DominantInterval};
use crate::root_system::{Family, RootSystem};
use crate::weight::Weight;

/// Memoised `t`-analogue of the Kostant partition function, over all
/// positive roots or over the non-simple ones only.
pub struct PartitionFunction {
    /// Root vectors in simple-root coordinates; simple roots last.
    roots: Vec<Vec<i64>>,
    /// Index of the first simple root in `roots`, or `roots.len()` when the
    /// simple roots are excluded.
    simple_from: usize,
    include_simple: bool,
    memo: HashMap<(usize, Vec<i64>), TPoly>,
}

impl PartitionFunction {
    /// `P_t`: every positive root may be used.
    pub fn new(rs: &RootSystem) -> Self {
        PartitionFunction::build(rs, true)
    }

    /// `M_t`: only the non-simple positive roots may be used.
    pub fn nonsimple(rs: &RootSystem) -> Self {
        PartitionFunction::build(rs, false)
    }

    fn build(rs: &RootSystem, include_simple: bool) -> Self {
        let coords = |r: &Weight| rs.simple_coords(r).expect("roots lie in the root lattice");
        let mut roots: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .filter(|r| !rs.is_simple_root(r))
            .map(coords)
            .collect();
        let simple_from = roots.len();
        if include_simple {
            roots.extend(rs.simple_roots().iter().map(coords));
        }
        PartitionFunction {
            roots,
            simple_from,
            include_simple,
            memo: HashMap::new(),
        }
    }

    /// Evaluate at `beta` given in epsilon coordinates.
    pub fn eval(&mut self, rs: &RootSystem, beta: &Weight) -> TPoly {
        match rs.simple_coords(beta) {
            Some(c) => self.eval_coords(&c),
            None => TPoly::zero(),
        }
    }

    /// Evaluate at `beta` given in simple-root coordinates.
    pub fn eval_coords(&mut self, beta: &[i64]) -> TPoly {
        if beta.iter().any(|&c| c < 0) {
            return TPoly::zero();
        }
        self.go(0, beta.to_vec())
    }

    fn go(&mut self, cursor: usize, beta: Vec<i64>) -> TPoly {
        if cursor >= self.simple_from {
            // only simple roots remain: a single decomposition
            let h: i64 = beta.iter().sum();
            return if self.include_simple {
                TPoly::monomial(1, h as usize)
            } else if h == 0 {
                TPoly::one()
            } else {
                TPoly::zero()
            };
        }
        let key = (cursor, beta);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let (cursor, beta) = key;
        let root = self.roots[cursor].clone();
        let mut total = TPoly::zero();
        let mut rest = beta.clone();
        let mut k = 0;
        loop {
            let sub = self.go(cursor + 1, rest.clone());
            total += &sub.shift(k);
            rest.iter_mut().zip(&root).for_each(|(b, r)| *b -= r);
            if rest.iter().any(|&c| c < 0) {
                break;
            }
            k += 1;
        }
        self.memo.insert((cursor, beta), total.clone());
        total
    }
}

pub fn kostant_partition_t(rs: &RootSystem, beta: &Weight) -> TPoly {
    PartitionFunction::new(rs).eval(rs, beta)
}

/// Number of ways to write `beta` as a sum of non-simple positive roots,
/// graded by the number of summands.
pub fn m_t(rs: &RootSystem, beta: &Weight) -> TPoly {
    PartitionFunction::nonsimple(rs).eval(rs, beta)
}

/// Computes many Kostka–Foulkes polynomials for one root system with a
/// shared partition-function memo.
pub struct KostkaEngine<'a> {
    rs: &'a RootSystem,
    pf: PartitionFunction,
}

impl<'a> KostkaEngine<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        KostkaEngine {
            rs,
            pf: PartitionFunction::new(rs),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    /// Lusztig's alternating sum over the whole Weyl group.
    pub fn kostka(&mut self, lambda: &Weight, mu: &Weight) -> Result<TPoly> {
        let rs = self.rs;
        rs.check_dominant(lambda)?;
        rs.check_dominant(mu)?;
        let mu = match align_columns(rs, lambda, mu) {
            Some(m) => m,
            None => return Ok(TPoly::zero()),
        };
        let top = &lambda.scale(2) + rs.rho2();
        let shift = &mu.scale(2) + rs.rho2();
        let mut total = TPoly::zero();
        for w in rs.weyl_group() {
            let diff2 = &w.act(&top) - &shift;
            if diff2.0.iter().any(|c| c % 2 != 0) {
                continue;
            }
            let beta = Weight(diff2.0.iter().map(|c| c / 2).collect());
            let Some(coords) = rs.simple_coords(&beta) else {
                continue;
            };
            if coords.iter().any(|&c| c < 0) {
                continue;
            }
            let p = self.pf.eval_coords(&coords);
            if w.length() % 2 == 0 {
                total += &p;
            } else {
                total -= &p;
            }
        }
        Ok(total)
    }

    pub fn kostka_tilde(&mut self, lambda: &Weight, mu: &Weight) -> Result<TPoly> {
        let k = self.kostka(lambda, mu)?;
        if k.is_zero() {
            return Ok(k);
        }
        let mu = align_columns(self.rs, lambda, mu).expect("non-zero K implies comparable");
        let d = self.rs.height(&(lambda - &mu)).expect("comparable weights");
        k.reverse(d as usize)
    }
}

/// Type A: shift `mu` by full columns to the size of `lambda`.
fn align_columns(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Option<Weight> {
    if rs.family() != Family::A {
        return Some(mu.clone());
    }
    let n = rs.dim() as i64;
    let gap = lambda.size() - mu.size();
    if gap % n != 0 {
        return None;
    }
    Some(mu + &Weight(vec![gap / n; rs.dim()]))
}

pub fn kostka_foulkes(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<TPoly> {
    KostkaEngine::new(rs).kostka(lambda, mu)
}

/// `t^{<lambda - mu, rho_check>} K_{lambda,mu}(1/t)`.
pub fn kostka_tilde(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<TPoly> {
    KostkaEngine::new(rs).kostka_tilde(lambda, mu)
}

/// `K_{lambda,mu}(t)` for every dominant `mu <= lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantCharacter {
    pub lambda: Weight,
    pub entries: Vec<(Weight, TPoly)>,
}

impl DominantCharacter {
    pub fn get(&self, mu: &Weight) -> Option<&TPoly> {
        self.entries.iter().find(|(w, _)| w == mu).map(|(_, p)| p)
    }
}

pub fn dominant_character_t(rs: &RootSystem, lambda: &Weight) -> Result<DominantCharacter> {
    let iv = interval(rs, lambda)?;
    let mut engine = KostkaEngine::new(rs);
    character_on(&mut engine, &iv, false)
}

fn character_on(
    engine: &mut KostkaEngine<'_>,
    iv: &DominantInterval,
    tilde: bool,
) -> Result<DominantCharacter> {
    let lambda = iv.lambda();
    let entries = iv
        .elements()
        .iter()
        .map(|mu| {
            let p = if tilde {
                engine.kostka_tilde(lambda, mu)?
            } else {
                engine.kostka(lambda, mu)?
            };
            Ok((mu.clone(), p))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DominantCharacter {
        lambda: lambda.clone(),
        entries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AtomicVariant {
    /// `K = sum t^{<mu - nu, rho_check>} A_mu`
    Plain,
    /// `K~ = sum A~_mu`
    Tilde,
}

/// Atomic polynomials `A_{lambda,mu}(t)` (or their tilde variant) for every
/// `mu` in the interval below `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomicExpansion {
    pub lambda: Weight,
    pub variant: AtomicVariant,
    pub entries: Vec<(Weight, TPoly)>,
}

impl AtomicExpansion {
    pub fn get(&self, mu: &Weight) -> Option<&TPoly> {
        self.entries.iter().find(|(w, _)| w == mu).map(|(_, p)| p)
    }

    /// Values at `t = 1`.
    pub fn at_one(&self) -> Vec<(Weight, i64)> {
        self.entries
            .iter()
            .map(|(w, p)| (w.clone(), p.eval_at_one()))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|(_, p)| p.is_nonnegative())
    }
}

pub fn atomic_polys(
    rs: &RootSystem,
    lambda: &Weight,
    variant: AtomicVariant,
) -> Result<AtomicExpansion> {
    let iv = interval(rs, lambda)?;
    let mut engine = KostkaEngine::new(rs);
    let ch = character_on(&mut engine, &iv, variant == AtomicVariant::Tilde)?;
    Ok(solve_atomic(rs, &ch, variant))
}

/// Solve the unitriangular system top-down along the linear extension.
pub fn solve_atomic(
    rs: &RootSystem,
    ch: &DominantCharacter,
    variant: AtomicVariant,
) -> AtomicExpansion {
    let mut entries: Vec<(Weight, TPoly)> = Vec::with_capacity(ch.entries.len());
    for (nu, k) in &ch.entries {
        let mut a = k.clone();
        for (mu, a_mu) in &entries {
            let diff = mu - nu;
            let Some(c) = rs.simple_coords(&diff) else {
                continue;
            };
            if c.iter().any(|&x| x < 0) {
                continue;
            }
            match variant {
                AtomicVariant::Plain => {
                    let h: i64 = c.iter().sum();
                    a -= &a_mu.shift(h as usize);
                }
                AtomicVariant::Tilde => a -= a_mu,
            }
        }
        entries.push((nu.clone(), a));
    }
    AtomicExpansion {
        lambda: ch.lambda.clone(),
        variant,
        entries,
    }
}

/// Re-sum an atomic expansion into the character it came from.
pub fn resum_atomic(rs: &RootSystem, ex: &AtomicExpansion) -> DominantCharacter {
    let entries = ex
        .entries
        .iter()
        .map(|(nu, _)| {
            let mut k = TPoly::zero();
            for (mu, a_mu) in &ex.entries {
                let Some(c) = rs.simple_coords(&(mu - nu)) else {
                    continue;
                };
                if c.iter().any(|&x| x < 0) {
                    continue;
                }
                match ex.variant {
                    AtomicVariant::Plain => k += &a_mu.shift(c.iter().sum::<i64>() as usize),
                    AtomicVariant::Tilde => k += a_mu,
                }
            }
            (nu.clone(), k)
        })
        .collect();
    DominantCharacter {
        lambda: ex.lambda.clone(),
        entries,
    }
}

/// Parse a weight given either in epsilon or in fundamental-weight
/// coordinates.
pub fn weight_from_omega_or_eps(
    rs: &RootSystem,
    eps: Option<&[i64]>,
    omega: Option<&[i64]>,
) -> Result<Weight> {
    match (eps, omega) {
        (Some(e), None) => {
            if e.len() != rs.dim() {
                return Err(Error::DimensionMismatch(Weight(e.to_vec()), rs.dim()));
            }
            Ok(Weight(e.to_vec()))
        }
        (None, Some(o)) => rs.from_omega(o),
        _ => Err(Error::NonIntegralWeight(
            "exactly one coordinate system must be given".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::new(f, r).unwrap()
    }

    /// Enumerate multisets of positive roots directly, as an oracle.
    fn multisets(rs: &RootSystem, beta: &Weight, roots: &[Weight]) -> TPoly {
        fn go(beta: &Weight, roots: &[Weight], k: usize, rs: &RootSystem) -> TPoly {
            if beta.is_zero() {
                return TPoly::monomial(1, k);
            }
            let Some((first, rest)) = roots.split_first() else {
                return TPoly::zero();
            };
            let mut total = TPoly::zero();
            let mut cur = beta.clone();
            let mut used = 0;
            while rs.in_positive_cone(&cur) {
                total += &go(&cur, rest, k + used, rs);
                cur = &cur - first;
                used += 1;
            }
            total
        }
        go(beta, roots, 0, rs)
    }

    #[test]
    fn partition_function_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(kostant_partition_t(&a2, &wt![0, 0, 0]), TPoly::one());
        assert_eq!(
            kostant_partition_t(&a2, &wt![1, 0, -1]),
            TPoly::from(vec![0, 1, 1])
        );
        let c2 = rs(Family::C, 2);
        assert_eq!(
            kostant_partition_t(&c2, &wt![2, 0]),
            TPoly::from(vec![0, 1, 1, 1])
        );
        assert!(kostant_partition_t(&c2, &wt![-1, 1]).is_zero());
    }

    #[test]
    fn partition_function_matches_enumeration() {
        for r in [
            rs(Family::A, 3),
            rs(Family::B, 3),
            rs(Family::C, 3),
            rs(Family::D, 4),
        ] {
            let mut pf = PartitionFunction::new(&r);
            let mut mf = PartitionFunction::nonsimple(&r);
            let nonsimple: Vec<Weight> = r
                .positive_roots()
                .iter()
                .filter(|a| !r.is_simple_root(a))
                .cloned()
                .collect();
            for c in [[1, 1, 1], [2, 1, 0], [1, 2, 1], [2, 2, 2], [0, 1, 3]] {
                let mut coords = c.to_vec();
                coords.resize(r.rank(), 1);
                let beta = r.from_simple_coords(&coords);
                assert_eq!(pf.eval(&r, &beta), multisets(&r, &beta, r.positive_roots()));
                assert_eq!(mf.eval(&r, &beta), multisets(&r, &beta, &nonsimple));
            }
        }
    }

    #[test]
    fn m_t_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(m_t(&a2, &wt![0, 0, 0]), TPoly::one());
        assert!(m_t(&a2, &wt![1, -1, 0]).is_zero());
        assert_eq!(m_t(&a2, &wt![1, 0, -1]), TPoly::monomial(1, 1));
    }

    #[test]
    fn kostka_examples() {
        let a2 = rs(Family::A, 2);
        let lam = wt![2, 1, 0];
        assert_eq!(kostka_foulkes(&a2, &lam, &lam).unwrap(), TPoly::one());
        assert_eq!(
            kostka_foulkes(&a2, &lam, &wt![1, 1, 1]).unwrap(),
            TPoly::from(vec![0, 1, 1])
        );
        assert_eq!(
            kostka_tilde(&a2, &lam, &wt![1, 1, 1]).unwrap(),
            TPoly::from(vec![1, 1])
        );
        assert!(kostka_foulkes(&a2, &wt![1, 1, 1], &lam).unwrap().is_zero());
        assert!(matches!(
            kostka_foulkes(&a2, &wt![0, 1, 0], &lam),
            Err(Error::NotDominant(_))
        ));
        let c3 = rs(Family::C, 3);
        let k = kostka_foulkes(&c3, &wt![2, 1, 1], &wt![0, 0, 0]).unwrap();
        assert_eq!(k.eval_at_one(), 4);
        assert!(k.degree().unwrap() as i64 <= c3.height(&wt![2, 1, 1]).unwrap());
    }

    #[test]
    fn character_examples() {
        let c3 = rs(Family::C, 3);
        let ch = dominant_character_t(&c3, &wt![0, 0, 0]).unwrap();
        assert_eq!(ch.entries, vec![(wt![0, 0, 0], TPoly::one())]);
        let ch = dominant_character_t(&c3, &wt![2, 1, 1]).unwrap();
        assert_eq!(ch.entries.len(), 4);
        let a2 = rs(Family::A, 2);
        let ch = dominant_character_t(&a2, &wt![2, 1, 0]).unwrap();
        assert_eq!(
            ch.entries,
            vec![
                (wt![2, 1, 0], TPoly::one()),
                (wt![1, 1, 1], TPoly::from(vec![0, 1, 1]))
            ]
        );
    }

    #[test]
    fn atomic_examples() {
        let a2 = rs(Family::A, 2);
        let ex = atomic_polys(&a2, &wt![2, 1, 0], AtomicVariant::Plain).unwrap();
        assert_eq!(ex.get(&wt![1, 1, 1]), Some(&TPoly::monomial(1, 1)));

        let c3 = rs(Family::C, 3);
        let ex = atomic_polys(&c3, &wt![2, 1, 1], AtomicVariant::Plain).unwrap();
        let at1: HashMap<Weight, i64> = ex.at_one().into_iter().collect();
        assert_eq!(at1[&wt![2, 1, 1]], 1);
        assert_eq!(at1[&wt![2, 0, 0]], 0);
        assert_eq!(at1[&wt![1, 1, 0]], 2);
        assert_eq!(at1[&wt![0, 0, 0]], 1);
    }

    #[test]
    fn atomic_resummation_and_relation() {
        for (r, lam) in [
            (rs(Family::A, 3), wt![3, 2, 1, 0]),
            (rs(Family::C, 3), wt![2, 1, 1]),
            (rs(Family::B, 3), wt![2, 1, 0]),
            (rs(Family::D, 4), wt![2, 1, 1, 0]),
        ] {
            let plain = atomic_polys(&r, &lam, AtomicVariant::Plain).unwrap();
            let tilde = atomic_polys(&r, &lam, AtomicVariant::Tilde).unwrap();
            let ch = dominant_character_t(&r, &lam).unwrap();
            assert_eq!(resum_atomic(&r, &plain), ch);
            for ((mu, a), (mu2, at)) in plain.entries.iter().zip(&tilde.entries) {
                assert_eq!(mu, mu2);
                let d = r.height(&(&lam - mu)).unwrap() as usize;
                assert_eq!(&a.reverse(d).unwrap(), at, "{r:?} {mu}");
            }
        }
    }
}
