//! Automorphism groups, canonical forms and transitivity classification.
//!
//! The engine individualizes vertices and refines to equitable partitions.
//! Generators are found along the first path of the search tree, level by
//! level from the bottom, so the group order is the product of the orbit
//! lengths met along the way. The canonical form is the relabelled graph at
//! the least leaf under (trace, sorted edge list), with subtrees pruned by
//! the automorphisms already known.

mod refine;
mod search;

pub use search::AutomorphismSearch;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bicayley::BiCayleyGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};
use search::Engine;

/// Largest graph the engine accepts.
pub const VERTEX_BUDGET: usize = 5000;

/// Union-find with union by size; `find` does not compress, so queries
/// need only a shared reference.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    pub fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    pub fn same(&self, x: u32, y: u32) -> bool {
        self.find(x) == self.find(y)
    }

    pub fn union(&mut self, x: u32, y: u32) {
        let (mut a, mut b) = (self.find(x), self.find(y));
        if a == b {
            return;
        }
        if self.size[a as usize] < self.size[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
    }

    /// Merges every point with its image under `p`.
    pub fn absorb(&mut self, p: &Permutation) {
        for x in 0..p.degree() as u32 {
            self.union(x, p.apply(x));
        }
    }

    pub fn class_count(&self) -> usize {
        (0..self.parent.len() as u32).filter(|&x| self.parent[x as usize] == x).count()
    }

    pub fn class_size(&self, x: u32) -> usize {
        self.size[self.find(x) as usize] as usize
    }
}

fn check_budget(graph: &Graph) -> Result<()> {
    if graph.vertex_count() > VERTEX_BUDGET {
        return Err(Error::Budget(format!(
            "{} vertices exceeds the automorphism engine budget {VERTEX_BUDGET}",
            graph.vertex_count()
        )));
    }
    Ok(())
}

/// Generators and order of the full automorphism group.
pub fn automorphism_search(graph: &Graph) -> Result<AutomorphismSearch> {
    check_budget(graph)?;
    Ok(Engine::new(graph).automorphisms())
}

/// The full automorphism group.
pub fn aut_group(graph: &Graph) -> Result<PermGroup> {
    let search = automorphism_search(graph)?;
    PermGroup::new(graph.vertex_count(), search.generators)
}

/// A relabelling `v -> labelling(v)` taking `graph` to its canonical form.
pub fn canonical_labelling(graph: &Graph) -> Result<Permutation> {
    let group = aut_group(graph)?;
    Ok(canonical_with(graph, &group).0)
}

fn canonical_with(graph: &Graph, group: &PermGroup) -> (Permutation, Graph) {
    let (labelling, edges) = Engine::new(graph).canonical(group);
    let labelling = if graph.vertex_count() == 0 {
        Permutation::identity(0)
    } else {
        Permutation::from_images_unchecked(labelling)
    };
    let canonical = Graph::from_edges(graph.vertex_count(), &edges).expect("relabelled simple graph");
    (labelling, canonical)
}

/// The canonically labelled graph.
pub fn canonical_graph(graph: &Graph) -> Result<Graph> {
    let group = aut_group(graph)?;
    Ok(canonical_with(graph, &group).1)
}

/// The graph6 bytes of the canonical graph: equal exactly for isomorphic
/// graphs.
pub fn canonical_form(graph: &Graph) -> Result<Vec<u8>> {
    Ok(canonical_graph(graph)?.to_graph6().into_bytes())
}

/// The transitivity class of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    ArcTransitive,
    /// Vertex- and edge-transitive but not arc-transitive.
    HalfArcTransitive,
    VertexNotEdgeTransitive,
    /// Regular, edge-transitive, not vertex-transitive.
    Semisymmetric,
    None,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::ArcTransitive => "arc-transitive",
            Classification::HalfArcTransitive => "half-arc-transitive",
            Classification::VertexNotEdgeTransitive => "vertex-not-edge-transitive",
            Classification::Semisymmetric => "semisymmetric",
            Classification::None => "none",
        })
    }
}

/// Orbit data of a graph under its automorphism group. Serialized with
/// keys in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub vertices: usize,
    pub edges: usize,
    /// Common valency, or `null` for irregular graphs.
    pub valency: Option<usize>,
    pub connected: bool,
    pub aut_order: u128,
    pub vertex_orbits: usize,
    pub edge_orbits: usize,
    pub arc_orbits: usize,
    /// Order of the stabilizer of vertex 0.
    pub stabilizer_order: u128,
    pub classification: Classification,
}

impl SymmetryReport {
    pub fn is_edge_transitive(&self) -> bool {
        self.edge_orbits == 1
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_orbits == 1
    }
}

/// Orbit counts of the group generated by `generators`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitCounts {
    pub vertex_orbits: usize,
    pub edge_orbits: usize,
    pub arc_orbits: usize,
    /// Size of the orbit of vertex 0 (0 for the empty graph).
    pub vertex_zero_orbit: usize,
}

fn arc_union_find(graph: &Graph, generators: &[Permutation]) -> (UnionFind, Vec<usize>) {
    let n = graph.vertex_count();
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + graph.degree(v as u32);
    }
    let mut uf = UnionFind::new(offset[n]);
    for g in generators {
        for u in 0..n as u32 {
            let gu = g.apply(u);
            for (k, &v) in graph.neighbors(u).iter().enumerate() {
                let gv = g.apply(v);
                let j = graph.neighbors(gu).binary_search(&gv).expect("generator is an automorphism");
                uf.union((offset[u as usize] + k) as u32, (offset[gu as usize] + j) as u32);
            }
        }
    }
    (uf, offset)
}

/// Vertex, edge and arc orbit counts under the group generated by
/// automorphisms `generators`.
pub fn orbit_counts(graph: &Graph, generators: &[Permutation]) -> Result<OrbitCounts> {
    if let Some(k) = generators.iter().position(|g| !graph.is_automorphism(g)) {
        return Err(Error::NotAutomorphism(format!("generator {k}")));
    }
    let n = graph.vertex_count();
    let mut vertices = UnionFind::new(n);
    for g in generators {
        vertices.absorb(g);
    }
    let (arcs, offset) = arc_union_find(graph, generators);
    // An edge orbit is one or two arc orbits; merge each arc with its reverse.
    let mut edges = arcs.clone();
    for u in 0..n as u32 {
        for (k, &v) in graph.neighbors(u).iter().enumerate() {
            let j = graph.neighbors(v).binary_search(&u).expect("symmetric adjacency");
            edges.union((offset[u as usize] + k) as u32, (offset[v as usize] + j) as u32);
        }
    }
    Ok(OrbitCounts {
        vertex_orbits: vertices.class_count(),
        edge_orbits: edges.class_count(),
        arc_orbits: arcs.class_count(),
        vertex_zero_orbit: if n == 0 { 0 } else { vertices.class_size(0) },
    })
}

/// Sizes of the arc orbits under the group generated by `generators`,
/// largest first.
pub fn arc_orbit_sizes(graph: &Graph, generators: &[Permutation]) -> Result<Vec<usize>> {
    if let Some(k) = generators.iter().position(|g| !graph.is_automorphism(g)) {
        return Err(Error::NotAutomorphism(format!("generator {k}")));
    }
    let (arcs, offset) = arc_union_find(graph, generators);
    let total = *offset.last().unwrap_or(&0);
    let mut sizes: Vec<usize> = (0..total as u32)
        .filter(|&x| arcs.find(x) == x)
        .map(|x| arcs.class_size(x))
        .collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sizes)
}

fn classify_counts(graph: &Graph, counts: &OrbitCounts) -> Classification {
    let vertex_transitive = counts.vertex_orbits <= 1;
    if vertex_transitive && counts.arc_orbits <= 1 {
        Classification::ArcTransitive
    } else if vertex_transitive && counts.edge_orbits <= 1 {
        Classification::HalfArcTransitive
    } else if vertex_transitive {
        Classification::VertexNotEdgeTransitive
    } else if graph.regular_degree().is_some() && counts.edge_orbits == 1 {
        Classification::Semisymmetric
    } else {
        Classification::None
    }
}

/// A report built from an existing automorphism search.
pub fn report_from(graph: &Graph, search: &AutomorphismSearch) -> Result<SymmetryReport> {
    let order = search
        .order
        .ok_or_else(|| Error::Overflow("automorphism group order exceeds u128".into()))?;
    let counts = orbit_counts(graph, &search.generators)?;
    let stabilizer_order = if counts.vertex_zero_orbit == 0 {
        order
    } else {
        order / counts.vertex_zero_orbit as u128
    };
    Ok(SymmetryReport {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        valency: graph.regular_degree(),
        connected: graph.is_connected(),
        aut_order: order,
        vertex_orbits: counts.vertex_orbits,
        edge_orbits: counts.edge_orbits,
        arc_orbits: counts.arc_orbits,
        stabilizer_order,
        classification: classify_counts(graph, &counts),
    })
}

pub fn classify(graph: &Graph) -> Result<SymmetryReport> {
    let search = automorphism_search(graph)?;
    report_from(graph, &search)
}

/// Everything the census needs from one graph, sharing a single search.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub report: SymmetryReport,
    pub group: PermGroup,
    pub canonical_form: Vec<u8>,
}

pub fn analyze(graph: &Graph) -> Result<Analysis> {
    let search = automorphism_search(graph)?;
    let report = report_from(graph, &search)?;
    let group = PermGroup::new(graph.vertex_count(), search.generators)?;
    let canonical_form = canonical_with(graph, &group).1.to_graph6().into_bytes();
    Ok(Analysis { report, group, canonical_form })
}

/// Whether `n = 2^r * 3` for some `r >= 0`.
pub fn is_two_power_times_three(n: u128) -> bool {
    n % 3 == 0 && (n / 3).is_power_of_two()
}

/// For a cubic edge-transitive graph, whether the vertex stabilizer has
/// order `2^r * 3`.
pub fn check_stabilizer_law(graph: &Graph) -> Result<bool> {
    if !graph.is_cubic() {
        return Err(Error::Precondition("graph is not cubic".into()));
    }
    let report = classify(graph)?;
    if !report.is_edge_transitive() {
        return Err(Error::Precondition("graph is not edge-transitive".into()));
    }
    Ok(is_two_power_times_three(report.stabilizer_order))
}

/// Whether the right translations `R(H)` form a normal subgroup of the full
/// automorphism group.
pub fn check_normal_bicayley(graph: &BiCayleyGraph) -> Result<bool> {
    let aut = aut_group(graph.graph())?;
    aut.is_normal(&graph.right_group()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn k33() -> Graph {
        let edges: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(classify(&cycle(6)).unwrap().aut_order, 12);
        assert_eq!(classify(&k33()).unwrap().aut_order, 72);
        assert_eq!(classify(&Graph::empty(4)).unwrap().aut_order, 24);
        assert_eq!(classify(&Graph::empty(0)).unwrap().aut_order, 1);
        let petersen_edges = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ];
        let petersen = Graph::from_edges(10, &petersen_edges).unwrap();
        let report = classify(&petersen).unwrap();
        assert_eq!(report.aut_order, 120);
        assert_eq!(report.classification, Classification::ArcTransitive);
        assert!(check_stabilizer_law(&petersen).unwrap());
    }

    #[test]
    fn path_is_unclassified() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let report = classify(&p3).unwrap();
        assert_eq!(report.vertex_orbits, 2);
        assert_eq!(report.edge_orbits, 1);
        assert_eq!(report.classification, Classification::None);
    }

    #[test]
    fn stabilizer_law_preconditions() {
        assert!(matches!(check_stabilizer_law(&cycle(6)), Err(Error::Precondition(_))));
        assert!(check_stabilizer_law(&k33()).unwrap());
        assert_eq!(classify(&k33()).unwrap().stabilizer_order, 12);
        assert!(is_two_power_times_three(48));
        assert!(!is_two_power_times_three(2));
        assert!(!is_two_power_times_three(9));
    }

    #[test]
    fn canonical_forms_detect_isomorphism() {
        let c6 = cycle(6);
        let p = Permutation::from_images(vec![3, 0, 4, 1, 5, 2]).unwrap();
        assert_eq!(canonical_form(&c6).unwrap(), canonical_form(&c6.relabel(&p).unwrap()).unwrap());
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&two_triangles).unwrap());
        assert_ne!(canonical_form(&k33()).unwrap(), canonical_form(&c6).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(classify(&Graph::empty(VERTEX_BUDGET + 1)), Err(Error::Budget(_))));
    }

    #[test]
    fn report_json_key_order() {
        let json = serde_json::to_string(&classify(&cycle(6)).unwrap()).unwrap();
        assert_eq!(
            json,
            "{\"vertices\":6,\"edges\":6,\"valency\":2,\"connected\":true,\"aut_order\":12,\
             \"vertex_orbits\":1,\"edge_orbits\":1,\"arc_orbits\":1,\"stabilizer_order\":2,\
             \"classification\":\"arc-transitive\"}"
        );
    }
}
