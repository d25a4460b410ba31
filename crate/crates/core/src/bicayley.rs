//! Bi-Cayley graphs `BiCay(H, R, L, S)`.
//!
//! The vertex set is `H_0 ∪ H_1`, two copies of `H`. Vertex `h_0` has index
//! `rank(h)` and `h_1` has index `|H| + rank(h)`, with `rank` the
//! lexicographic position of the normal form `(j, i)`. Edges are
//!
//! * right edges `{h_0, (rh)_0}` for `r` in `R`,
//! * left edges `{h_1, (lh)_1}` for `l` in `L`,
//! * spokes `{h_0, (sh)_1}` for `s` in `S`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metacyclic::{Element, GroupMap, MetacyclicGroup};
use crate::perm::{PermGroup, Permutation, MAX_DEGREE};

/// The set equation a `σ` or `δ` candidate failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// `R^f = R`.
    SigmaRight,
    /// `L^f = g^-1 L g`.
    SigmaLeft,
    /// `S^f = g^-1 S`.
    SigmaSpoke,
    /// `R^f = x^-1 L x`.
    DeltaRight,
    /// `L^f = y^-1 R y`.
    DeltaLeft,
    /// `S^f = y^-1 S^-1 x`.
    DeltaSpoke,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::SigmaRight => "R^f = R",
            Condition::SigmaLeft => "L^f = g^-1 L g",
            Condition::SigmaSpoke => "S^f = g^-1 S",
            Condition::DeltaRight => "R^f = x^-1 L x",
            Condition::DeltaLeft => "L^f = y^-1 R y",
            Condition::DeltaSpoke => "S^f = y^-1 S^-1 x",
        })
    }
}

/// A `σ` or `δ` candidate: the automorphism, or the condition it violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Candidate {
    Valid(Permutation),
    Invalid(Condition),
}

impl Candidate {
    pub fn is_valid(&self) -> bool {
        matches!(self, Candidate::Valid(_))
    }

    pub fn permutation(&self) -> Option<&Permutation> {
        match self {
            Candidate::Valid(p) => Some(p),
            Candidate::Invalid(_) => None,
        }
    }

    pub fn condition(&self) -> Option<Condition> {
        match self {
            Candidate::Valid(_) => None,
            Candidate::Invalid(c) => Some(*c),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BiCayleyGraph {
    group: MetacyclicGroup,
    right: Vec<Element>,
    left: Vec<Element>,
    spokes: Vec<Element>,
    graph: Graph,
}

fn sorted_set(items: &[Element]) -> Vec<Element> {
    items.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
}

impl BiCayleyGraph {
    /// Builds `BiCay(H, R, L, S)`. `R` and `L` must be inverse-closed and
    /// avoid the identity; duplicates in any set are ignored.
    pub fn build(group: &MetacyclicGroup, r: &[Element], l: &[Element], s: &[Element]) -> Result<Self> {
        let order = group.order();
        if order.saturating_mul(2) > MAX_DEGREE as u64 {
            return Err(Error::Budget(format!(
                "bi-Cayley graph on {} vertices exceeds the vertex limit {MAX_DEGREE}",
                order.saturating_mul(2)
            )));
        }
        for (name, set) in [("R", r), ("L", l), ("S", s)] {
            if let Some(g) = set.iter().find(|g| !group.is_canonical(**g)) {
                return Err(Error::Parameter(format!("{name} contains non-canonical element {g}")));
            }
        }
        let (right, left, spokes) = (sorted_set(r), sorted_set(l), sorted_set(s));
        for (name, set) in [("R", &right), ("L", &left)] {
            if set.iter().any(Element::is_identity) {
                return Err(Error::SetCondition(format!("{name} contains the identity")));
            }
            if set.iter().any(|g| set.binary_search(&group.inv(*g)).is_err()) {
                return Err(Error::SetCondition(format!("{name} is not closed under inverses")));
            }
        }

        let n = order as u32;
        let mut edges = Vec::new();
        for rank in 0..n {
            let h = group.unrank(rank as u64);
            for &x in &right {
                let v = group.rank(group.mul(x, h)) as u32;
                if rank < v {
                    edges.push((rank, v));
                }
            }
            for &x in &left {
                let v = group.rank(group.mul(x, h)) as u32;
                if rank < v {
                    edges.push((n + rank, n + v));
                }
            }
            for &x in &spokes {
                edges.push((rank, n + group.rank(group.mul(x, h)) as u32));
            }
        }
        let graph = Graph::from_edges(2 * n as usize, &edges)?;
        Ok(BiCayleyGraph { group: group.clone(), right, left, spokes, graph })
    }

    pub fn group(&self) -> &MetacyclicGroup {
        &self.group
    }

    pub fn right_set(&self) -> &[Element] {
        &self.right
    }

    pub fn left_set(&self) -> &[Element] {
        &self.left
    }

    pub fn spoke_set(&self) -> &[Element] {
        &self.spokes
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Index of `h_part`.
    pub fn vertex(&self, h: Element, part: u8) -> u32 {
        (self.group.rank(h) + part as u64 * self.group.order()) as u32
    }

    /// The element and part of a vertex index.
    pub fn element_of(&self, v: u32) -> (Element, u8) {
        let order = self.group.order();
        let part = (v as u64 >= order) as u8;
        (self.group.unrank(v as u64 % order), part)
    }

    fn permutation_from(&self, image: impl Fn(Element, u8) -> (Element, u8)) -> Result<Permutation> {
        let images = (0..self.vertex_count() as u32)
            .map(|v| {
                let (h, part) = self.element_of(v);
                let (g, q) = image(h, part);
                self.vertex(g, q)
            })
            .collect();
        let p = Permutation::from_images_unchecked(images);
        if self.graph.is_automorphism(&p) {
            Ok(p)
        } else {
            Err(Error::NotAutomorphism("constructed map does not preserve adjacency".into()))
        }
    }

    /// `R(g): h_i -> (hg)_i`.
    pub fn right_translation(&self, g: Element) -> Result<Permutation> {
        self.permutation_from(|h, part| (self.group.mul(h, g), part))
    }

    /// `R(H)`, generated by `R(a)` and `R(b)`.
    pub fn right_group(&self) -> Result<PermGroup> {
        self.translation_group(&[self.group.a(), self.group.b()])
    }

    /// The right translations by the subgroup generated by `generators`.
    pub fn translation_group(&self, generators: &[Element]) -> Result<PermGroup> {
        let gens = generators
            .iter()
            .map(|&g| self.right_translation(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.vertex_count(), gens)
    }

    fn image_set(&self, f: &GroupMap, set: &[Element]) -> Result<Vec<Element>> {
        let mapped = set.iter().map(|&x| self.group.apply_map(f, x)).collect::<Result<Vec<_>>>()?;
        Ok(sorted_set(&mapped))
    }

    fn transform(&self, set: &[Element], left: Element, right: Element) -> Vec<Element> {
        let g = &self.group;
        sorted_set(&set.iter().map(|&x| g.mul(g.mul(left, x), right)).collect::<Vec<_>>())
    }

    fn inverses(&self, set: &[Element]) -> Vec<Element> {
        sorted_set(&set.iter().map(|&x| self.group.inv(x)).collect::<Vec<_>>())
    }

    /// `σ_{f,g}: h_0 -> (h^f)_0, h_1 -> (g h^f)_1`.
    pub fn sigma_map(&self, f: &GroupMap, g: Element) -> Result<Candidate> {
        if !f.is_validated() {
            return Err(Error::InvalidMap);
        }
        let grp = &self.group;
        let id = grp.identity();
        let g_inv = grp.inv(g);
        let checks = [
            (Condition::SigmaRight, self.image_set(f, &self.right)?, self.right.clone()),
            (Condition::SigmaLeft, self.image_set(f, &self.left)?, self.transform(&self.left, g_inv, g)),
            (Condition::SigmaSpoke, self.image_set(f, &self.spokes)?, self.transform(&self.spokes, g_inv, id)),
        ];
        if let Some((c, _, _)) = checks.iter().find(|(_, lhs, rhs)| lhs != rhs) {
            return Ok(Candidate::Invalid(*c));
        }
        let p = self.permutation_from(|h, part| {
            let hf = grp.apply_map(f, h).expect("map validated above");
            match part {
                0 => (hf, 0),
                _ => (grp.mul(g, hf), 1),
            }
        })?;
        Ok(Candidate::Valid(p))
    }

    /// `δ_{f,x,y}: h_0 -> (x h^f)_1, h_1 -> (y h^f)_0`.
    pub fn delta_map(&self, f: &GroupMap, x: Element, y: Element) -> Result<Candidate> {
        if !f.is_validated() {
            return Err(Error::InvalidMap);
        }
        let grp = &self.group;
        let (x_inv, y_inv) = (grp.inv(x), grp.inv(y));
        let checks = [
            (Condition::DeltaRight, self.image_set(f, &self.right)?, self.transform(&self.left, x_inv, x)),
            (Condition::DeltaLeft, self.image_set(f, &self.left)?, self.transform(&self.right, y_inv, y)),
            (
                Condition::DeltaSpoke,
                self.image_set(f, &self.spokes)?,
                self.transform(&self.inverses(&self.spokes), y_inv, x),
            ),
        ];
        if let Some((c, _, _)) = checks.iter().find(|(_, lhs, rhs)| lhs != rhs) {
            return Ok(Candidate::Invalid(*c));
        }
        let p = self.permutation_from(|h, part| {
            let hf = grp.apply_map(f, h).expect("map validated above");
            match part {
                0 => (grp.mul(x, hf), 1),
                _ => (grp.mul(y, hf), 0),
            }
        })?;
        Ok(Candidate::Valid(p))
    }

    /// Connectivity by breadth-first search, cross-checked against the
    /// generation criterion `<s R s^-1 ∪ L ∪ S s^-1> = H` for the smallest
    /// `s` in `S`.
    pub fn is_connected(&self) -> Result<bool> {
        let searched = self.graph.is_connected();
        let predicate = if self.spokes.is_empty() {
            false
        } else {
            let normal = self.normalize_spokes();
            let mut gens = normal.right.clone();
            gens.extend(&normal.left);
            gens.extend(&normal.spokes);
            self.group.generates(&gens)?
        };
        if searched != predicate {
            return Err(Error::Precondition(format!(
                "connectivity search ({searched}) disagrees with the generation criterion ({predicate})"
            )));
        }
        Ok(searched)
    }

    /// `BiCay(H, L, R, S^-1)`, isomorphic via `h_0 <-> h_1`.
    pub fn swap_parts(&self) -> Result<BiCayleyGraph> {
        BiCayleyGraph::build(&self.group, &self.left, &self.right, &self.inverses(&self.spokes))
    }

    /// `BiCay(H, R^f, L^f, S^f)` for an automorphism `f`.
    pub fn apply_group_automorphism(&self, f: &GroupMap) -> Result<BiCayleyGraph> {
        BiCayleyGraph::build(
            &self.group,
            &self.image_set(f, &self.right)?,
            &self.image_set(f, &self.left)?,
            &self.image_set(f, &self.spokes)?,
        )
    }

    fn normalize_spokes(&self) -> BiCayleyGraph {
        let grp = &self.group;
        let Some(&s0) = self.spokes.first() else {
            return self.clone();
        };
        if s0.is_identity() {
            return self.clone();
        }
        let s0_inv = grp.inv(s0);
        let right = self.transform(&self.right, s0, s0_inv);
        let spokes = self.transform(&self.spokes, grp.identity(), s0_inv);
        BiCayleyGraph::build(grp, &right, &self.left, &spokes).expect("conjugation preserves the set conditions")
    }

    /// An isomorphic bi-Cayley graph whose spoke set contains the identity:
    /// `S` becomes `S s^-1` and `R` becomes `s R s^-1`, with `s` the smallest
    /// element of `S`. Unchanged when `S` already contains the identity or
    /// is empty.
    pub fn normalize_s(&self) -> BiCayleyGraph {
        if self.spokes.contains(&self.group.identity()) {
            return self.clone();
        }
        self.normalize_spokes()
    }
}

/// A quotient graph together with facts about the action that produced it.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Vertices are the orbits, numbered by smallest member.
    pub graph: Graph,
    pub orbits: Vec<Vec<u32>>,
    pub semiregular: bool,
    /// `(valency, number of quotient vertices with that valency)`, by valency.
    pub valency_profile: Vec<(usize, usize)>,
    pub cubic: bool,
}

/// The quotient of `graph` by the orbits of `group`. Edges inside an orbit
/// are dropped; parallel edges between two orbits merge.
pub fn quotient_graph(graph: &Graph, group: &PermGroup) -> Result<Quotient> {
    if group.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch { left: graph.vertex_count(), right: group.degree() });
    }
    if let Some(k) = group.generators().iter().position(|g| !graph.is_automorphism(g)) {
        return Err(Error::NotAutomorphism(format!("generator {k} does not preserve adjacency")));
    }
    let orbits = group.orbits();
    let mut label = vec![0u32; graph.vertex_count()];
    for (k, orbit) in orbits.iter().enumerate() {
        for &v in orbit {
            label[v as usize] = k as u32;
        }
    }
    let edges: BTreeSet<(u32, u32)> = graph
        .edges()
        .into_iter()
        .map(|(u, v)| (label[u as usize], label[v as usize]))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    let quotient = Graph::from_edges(orbits.len(), &edges.into_iter().collect::<Vec<_>>())?;
    let mut profile = BTreeMap::new();
    for v in 0..quotient.vertex_count() as u32 {
        *profile.entry(quotient.degree(v)).or_insert(0usize) += 1;
    }
    Ok(Quotient {
        cubic: quotient.is_cubic(),
        semiregular: group.is_semiregular(),
        valency_profile: profile.into_iter().collect(),
        orbits,
        graph: quotient,
    })
}
