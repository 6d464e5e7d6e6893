//! The graph `B(lambda)+` on dominant-weight vertices, its components and
//! their verification as atoms.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::charge::insertion_tableau;
use crate::crystal::{generate_crystal, CrystalOps, CrystalVertex};
use crate::error::{Error, Result};
use crate::kostka::{AtomicExpansion, AtomicVariant, KostkaEngine};
use crate::poly::TPoly;
use crate::poset::{interval, DominantInterval};
use crate::root_system::{Family, RootSystem};
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub root: Weight,
}

/// One weakly connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub nodes: Vec<usize>,
    pub heads: Vec<usize>,
    pub feet: Vec<usize>,
}

impl Atom {
    pub fn head(&self) -> Option<usize> {
        match self.heads.as_slice() {
            [h] => Some(*h),
            _ => None,
        }
    }

    pub fn foot(&self) -> Option<usize> {
        match self.feet.as_slice() {
            [f] => Some(*f),
            _ => None,
        }
    }
}

pub struct AtomicGraph {
    family: Family,
    lambda: Weight,
    interval: DominantInterval,
    vertices: Vec<CrystalVertex>,
    weights: Vec<Weight>,
    edges: Vec<Edge>,
    /// Cocovers of vertex weights for which no edge could be drawn.
    violations: Vec<String>,
    components: Vec<Atom>,
}

impl AtomicGraph {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn interval(&self) -> &DominantInterval {
        &self.interval
    }

    pub fn vertices(&self) -> &[CrystalVertex] {
        &self.vertices
    }

    pub fn weight(&self, k: usize) -> &Weight {
        &self.weights[k]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn violations(&self) -> &[String] {
        &self.violations
    }

    pub fn components(&self) -> &[Atom] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, b: &CrystalVertex) -> Option<usize> {
        self.vertices.iter().position(|v| v == b)
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.components.iter().map(|c| c.nodes.len()).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

/// Build `B(lambda)+`. Cocovers whose root is not conjugate to the base
/// simple root are reported as a [`Error::StableRangeViolation`].
pub fn build_bplus(rs: &RootSystem, lambda: &Weight) -> Result<AtomicGraph> {
    let (g, not_in_orbit) = build_inner(rs, lambda)?;
    if !not_in_orbit.is_empty() {
        return Err(Error::StableRangeViolation(not_in_orbit.join("; ")));
    }
    Ok(g)
}

/// Like [`build_bplus`], but cocovers without a modified operator are only
/// recorded in [`AtomicGraph::violations`].
pub fn build_bplus_lenient(rs: &RootSystem, lambda: &Weight) -> Result<AtomicGraph> {
    Ok(build_inner(rs, lambda)?.0)
}

fn build_inner(rs: &RootSystem, lambda: &Weight) -> Result<(AtomicGraph, Vec<String>)> {
    let iv = interval(rs, lambda)?;
    let crystal = generate_crystal(rs, lambda)?;
    let ops = CrystalOps::new(rs);
    let n = rs.dim();

    let mut keyed: Vec<(usize, Vec<i32>, CrystalVertex)> = crystal
        .dominant_vertices(rs)
        .into_iter()
        .map(|k| {
            let b = crystal.vertices()[k].clone();
            let pos = iv
                .index_of(&b.weight(n))
                .expect("dominant weights lie in the interval");
            (pos, b.order_key(n), b)
        })
        .collect();
    keyed.sort();
    let vertices: Vec<CrystalVertex> = keyed.into_iter().map(|(_, _, b)| b).collect();
    let weights: Vec<Weight> = vertices.iter().map(|b| b.weight(n)).collect();
    let index: HashMap<&CrystalVertex, usize> =
        vertices.iter().enumerate().map(|(k, b)| (b, k)).collect();

    let mut edges = Vec::new();
    let mut violations = Vec::new();
    let mut not_in_orbit = Vec::new();
    for (k, b) in vertices.iter().enumerate() {
        for (nu, alpha) in iv.cocovers_of(&weights[k]) {
            match ops.f_alpha(&alpha, b) {
                Ok(Some(next)) => {
                    let to = *index.get(&next).expect("f_alpha stays in B(lambda)");
                    debug_assert_eq!(weights[to], nu);
                    edges.push(Edge {
                        from: k,
                        to,
                        root: alpha,
                    });
                }
                Ok(None) => violations.push(format!("f_{alpha}({b}) = 0")),
                Err(Error::NotInOrbit(..)) => {
                    let msg = format!("{} > {nu} by {alpha}", weights[k]);
                    if !not_in_orbit.contains(&msg) {
                        not_in_orbit.push(msg.clone());
                    }
                    violations.push(format!("no operator for {alpha} at {b}"));
                }
                Err(e) => return Err(e),
            }
        }
    }

    let components = find_components(vertices.len(), &edges);
    Ok((
        AtomicGraph {
            family: rs.family(),
            lambda: lambda.clone(),
            interval: iv,
            vertices,
            weights,
            edges,
            violations,
            components,
        },
        not_in_orbit,
    ))
}

fn find_components(count: usize, edges: &[Edge]) -> Vec<Atom> {
    let mut uf: UnionFind<usize> = UnionFind::new(count);
    for e in edges {
        uf.union(e.from, e.to);
    }
    let mut has_in = vec![false; count];
    let mut has_out = vec![false; count];
    for e in edges {
        has_out[e.from] = true;
        has_in[e.to] = true;
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..count {
        groups.entry(uf.find(k)).or_default().push(k);
    }
    let mut atoms: Vec<Atom> = groups
        .into_values()
        .map(|nodes| Atom {
            heads: nodes.iter().copied().filter(|&k| !has_in[k]).collect(),
            feet: nodes.iter().copied().filter(|&k| !has_out[k]).collect(),
            nodes,
        })
        .collect();
    // vertices are already in linear-extension order, so the smallest node
    // of each component orders components by their tops
    atoms.sort_by_key(|a| a.nodes[0]);
    atoms
}

pub fn components(g: &AtomicGraph) -> &[Atom] {
    g.components()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub head_weight: Option<Weight>,
    pub size: usize,
    pub weights: Vec<Weight>,
    pub unique_head: bool,
    pub unique_foot: bool,
    pub weights_distinct: bool,
    pub equals_interval: bool,
    pub charge: Option<usize>,
}

impl ComponentReport {
    pub fn passes(&self) -> bool {
        self.unique_head && self.unique_foot && self.weights_distinct && self.equals_interval
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomReport {
    pub lambda: Weight,
    pub components: Vec<ComponentReport>,
    pub violations: Vec<String>,
    /// Number of components per head weight, in linear-extension order.
    pub coefficients: Vec<(Weight, usize)>,
    /// Whether the layer sums of the heads add up to the character at `t = 1`.
    pub character_matches: bool,
    pub verdict: bool,
}

pub fn verify_atomic(rs: &RootSystem, g: &AtomicGraph) -> Result<AtomReport> {
    let mut reports = Vec::new();
    let mut intervals: HashMap<Weight, DominantInterval> = HashMap::new();
    for atom in &g.components {
        let weights: Vec<Weight> = atom.nodes.iter().map(|&k| g.weights[k].clone()).collect();
        let distinct: HashSet<&Weight> = weights.iter().collect();
        let weights_distinct = distinct.len() == weights.len();
        let head_weight = atom.head().map(|h| g.weights[h].clone());
        let equals_interval = match &head_weight {
            Some(mu) => {
                let iv = match intervals.get(mu) {
                    Some(iv) => iv,
                    None => intervals.entry(mu.clone()).or_insert(interval(rs, mu)?),
                };
                weights_distinct
                    && iv.len() == weights.len()
                    && iv.elements().iter().all(|w| distinct.contains(w))
            }
            None => false,
        };
        let charge = match (g.family, atom.head()) {
            (Family::A, Some(h)) => vertex_charge(&g.vertices[h]).ok(),
            _ => None,
        };
        reports.push(ComponentReport {
            head_weight,
            size: atom.nodes.len(),
            weights,
            unique_head: atom.heads.len() == 1,
            unique_foot: atom.feet.len() == 1,
            weights_distinct,
            equals_interval,
            charge,
        });
    }

    let mut coefficients: Vec<(Weight, usize)> = g
        .interval
        .elements()
        .iter()
        .map(|w| (w.clone(), 0))
        .collect();
    for r in &reports {
        if let Some(w) = &r.head_weight {
            let pos = g.interval.index_of(w).expect("head weight in interval");
            coefficients[pos].1 += 1;
        }
    }

    // layer sums of the heads against K_{lambda,nu}(1)
    let mut engine = KostkaEngine::new(rs);
    let mut character_matches = true;
    for nu in g.interval.elements() {
        let k1 = engine.kostka(&g.lambda, nu)?.eval_at_one();
        let layered: i64 = reports
            .iter()
            .filter_map(|r| r.head_weight.as_ref())
            .filter(|mu| rs.in_positive_cone(&(*mu - nu)))
            .count() as i64;
        if k1 != layered {
            character_matches = false;
        }
    }

    let verdict =
        g.violations.is_empty() && character_matches && reports.iter().all(ComponentReport::passes);
    Ok(AtomReport {
        lambda: g.lambda.clone(),
        components: reports,
        violations: g.violations.clone(),
        coefficients,
        character_matches,
        verdict,
    })
}

/// Charge of the insertion tableau of a type A vertex word.
pub fn vertex_charge(b: &CrystalVertex) -> Result<usize> {
    let word: Vec<u32> = b
        .word()
        .iter()
        .map(|&l| {
            if l > 0 {
                Ok(l as u32)
            } else {
                Err(Error::NotTypeA)
            }
        })
        .collect::<Result<_>>()?;
    insertion_tableau(&word).charge()
}

/// Atomic polynomials read off the heads, together with the statistic
/// `c(b) = c(h) + <wt(h) - wt(b), rho_check>` on every vertex.
pub struct TAtomic {
    pub expansion: AtomicExpansion,
    pub statistic: Vec<usize>,
}

pub fn t_atomic_type_a(rs: &RootSystem, g: &AtomicGraph) -> Result<TAtomic> {
    t_atomic_with(rs, g, vertex_charge)
}

pub fn t_atomic_with(
    rs: &RootSystem,
    g: &AtomicGraph,
    charge_fn: impl Fn(&CrystalVertex) -> Result<usize>,
) -> Result<TAtomic> {
    if g.family != Family::A || rs.family() != Family::A {
        return Err(Error::NotTypeA);
    }
    if !verify_atomic(rs, g)?.verdict {
        return Err(Error::NotAtomic);
    }
    let mut entries: Vec<(Weight, TPoly)> = g
        .interval
        .elements()
        .iter()
        .map(|w| (w.clone(), TPoly::zero()))
        .collect();
    let mut statistic = vec![0; g.len()];
    for atom in &g.components {
        let h = atom.head().ok_or(Error::NotAtomic)?;
        let ch = charge_fn(&g.vertices[h])?;
        let pos = g.interval.index_of(&g.weights[h]).expect("in interval");
        entries[pos].1 += &TPoly::monomial(1, ch);
        for &k in &atom.nodes {
            let drop = rs
                .height(&(&g.weights[h] - &g.weights[k]))
                .expect("same root lattice coset");
            statistic[k] = ch + drop as usize;
        }
    }
    Ok(TAtomic {
        expansion: AtomicExpansion {
            lambda: g.lambda.clone(),
            variant: AtomicVariant::Plain,
            entries,
        },
        statistic,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeExport {
    pub id: usize,
    pub word: CrystalVertex,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeExport {
    pub from: usize,
    pub to: usize,
    pub root: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentExport {
    pub head: Option<usize>,
    pub foot: Option<usize>,
    pub node_ids: Vec<usize>,
    pub head_weight: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub charge: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BplusExport {
    pub lambda: Weight,
    pub nodes: Vec<NodeExport>,
    pub edges: Vec<EdgeExport>,
    pub components: Vec<ComponentExport>,
}

pub fn to_export(g: &AtomicGraph) -> BplusExport {
    BplusExport {
        lambda: g.lambda.clone(),
        nodes: g
            .vertices
            .iter()
            .enumerate()
            .map(|(id, b)| NodeExport {
                id,
                word: b.clone(),
                weight: g.weights[id].clone(),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|e| EdgeExport {
                from: e.from,
                to: e.to,
                root: e.root.clone(),
            })
            .collect(),
        components: g
            .components
            .iter()
            .map(|a| ComponentExport {
                head: a.head(),
                foot: a.foot(),
                node_ids: a.nodes.clone(),
                head_weight: a.head().map(|h| g.weights[h].clone()),
                charge: match (g.family, a.head()) {
                    (Family::A, Some(h)) => vertex_charge(&g.vertices[h]).ok(),
                    _ => None,
                },
            })
            .collect(),
    }
}

pub fn export(g: &AtomicGraph, format: &str) -> Result<String> {
    match format {
        "json" => Ok(serde_json::to_string_pretty(&to_export(g)).expect("serializable")),
        "dot" => Ok(to_dot(g)),
        other => Err(Error::UnknownFormat(other.to_string())),
    }
}

fn to_dot(g: &AtomicGraph) -> String {
    let mut s = String::from("digraph bplus {\n");
    for (c, atom) in g.components.iter().enumerate() {
        let _ = writeln!(s, "  subgraph cluster_{c} {{");
        for &k in &atom.nodes {
            let _ = writeln!(
                s,
                "    n{k} [label=\"{}\\n{}\"];",
                g.vertices[k], g.weights[k]
            );
        }
        s.push_str("  }\n");
    }
    for e in &g.edges {
        let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.root);
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    #[test]
    fn a3_321_graph() {
        let a3 = RootSystem::new(Family::A, 3).unwrap();
        let g = build_bplus(&a3, &wt![3, 2, 1, 0]).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.component_sizes(), vec![4, 2, 2, 1]);
        let report = verify_atomic(&a3, &g).unwrap();
        assert!(report.verdict);
        let heads: HashSet<Weight> = report
            .components
            .iter()
            .map(|c| c.head_weight.clone().unwrap())
            .collect();
        assert_eq!(
            heads,
            HashSet::from([
                wt![3, 2, 1, 0],
                wt![2, 2, 2, 0],
                wt![3, 1, 1, 1],
                wt![2, 2, 1, 1]
            ])
        );
        assert!(report.coefficients.iter().all(|(_, c)| *c == 1));
    }

    #[test]
    fn c3_211_graph() {
        let c3 = RootSystem::new(Family::C, 3).unwrap();
        let g = build_bplus(&c3, &wt![2, 1, 1]).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.component_sizes(), vec![4, 2, 2, 1]);
        let report = verify_atomic(&c3, &g).unwrap();
        assert!(report.verdict);
        let coeffs: HashMap<Weight, usize> = report.coefficients.into_iter().collect();
        assert_eq!(coeffs[&wt![2, 1, 1]], 1);
        assert_eq!(coeffs[&wt![2, 0, 0]], 0);
        assert_eq!(coeffs[&wt![1, 1, 0]], 2);
        assert_eq!(coeffs[&wt![0, 0, 0]], 1);
    }

    #[test]
    fn singleton_graph() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let g = build_bplus(&a2, &wt![1, 1, 1]).unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.edges().is_empty());
        assert_eq!(g.components()[0].head(), g.components()[0].foot());
        let dot = export(&g, "dot").unwrap();
        assert_eq!(dot.matches("->").count(), 0);
        assert!(matches!(export(&g, "svg"), Err(Error::UnknownFormat(_))));
    }

    #[test]
    fn t_atomic_small() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let g = build_bplus(&a2, &wt![2, 1, 0]).unwrap();
        let ta = t_atomic_type_a(&a2, &g).unwrap();
        assert_eq!(
            ta.expansion.get(&wt![1, 1, 1]),
            Some(&TPoly::monomial(1, 1))
        );
        assert_eq!(ta.expansion.get(&wt![2, 1, 0]), Some(&TPoly::one()));
        let c3 = RootSystem::new(Family::C, 3).unwrap();
        let g = build_bplus(&c3, &wt![2, 1, 1]).unwrap();
        assert!(matches!(t_atomic_type_a(&c3, &g), Err(Error::NotTypeA)));
    }
}
