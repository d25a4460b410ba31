//! Backtracking search over the refinement tree: automorphism generators
//! along the first path, then a pruned search for the canonical leaf.

use std::cmp::Ordering;

use super::refine::{Partition, Scratch, Stop, Trace};
use super::UnionFind;
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};

struct Level {
    /// Partition before individualizing at this level.
    partition: Partition,
    /// Trace length before individualizing at this level.
    trace_len: usize,
    target: u32,
    vertex: u32,
}

/// Automorphism generators with the group order they generate.
#[derive(Clone, Debug)]
pub struct AutomorphismSearch {
    pub generators: Vec<Permutation>,
    /// `None` when the order does not fit in a `u128`.
    pub order: Option<u128>,
    /// The individualized vertices along the first path; a base for the group.
    pub base: Vec<u32>,
}

pub(crate) struct Engine<'g> {
    graph: &'g Graph,
    scratch: Scratch,
}

impl<'g> Engine<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Engine { graph, scratch: Scratch::new(graph.vertex_count()) }
    }

    fn root(&mut self, trace: &mut Trace) -> Partition {
        let mut p = Partition::unit(self.graph.vertex_count());
        if self.graph.vertex_count() > 0 {
            let ok = p.refine(self.graph, &[0], trace, &mut self.scratch);
            debug_assert!(ok);
        }
        p
    }

    /// The map sending the first leaf to `leaf`, if it is an automorphism.
    fn leaf_map(&self, first: &[u32], leaf: &[u32]) -> Option<Permutation> {
        let mut images = vec![0u32; first.len()];
        for (&x, &y) in first.iter().zip(leaf) {
            images[x as usize] = y;
        }
        let p = Permutation::from_images_unchecked(images);
        self.graph.is_automorphism(&p).then_some(p)
    }

    pub fn automorphisms(&mut self) -> AutomorphismSearch {
        let n = self.graph.vertex_count();
        let mut trace = Trace::recording();
        let mut partition = self.root(&mut trace);
        let mut levels = Vec::new();
        while let Some(target) = partition.target_cell() {
            let vertex = partition.cell(target)[0];
            levels.push(Level { partition: partition.clone(), trace_len: trace.data.len(), target, vertex });
            let ok = partition.individualize(self.graph, vertex, &mut trace, &mut self.scratch);
            debug_assert!(ok);
        }
        let first_leaf = partition.lab.clone();
        let first_trace = trace.data;

        let mut generators = Vec::new();
        let mut orbits = UnionFind::new(n);
        let mut order = Some(1u128);
        for (k, level) in levels.iter().enumerate().rev() {
            let v = level.vertex;
            let cell = level.partition.cell(level.target).to_vec();
            let mut failed: Vec<u32> = Vec::new();
            for &w in &cell {
                if orbits.same(w, v) || failed.iter().any(|&f| orbits.same(f, w)) {
                    continue;
                }
                let mut trace = Trace::against(Some(first_trace.clone()), Stop::Differ);
                trace.data.extend_from_slice(&first_trace[..level.trace_len]);
                match self.match_below(&levels, k, level.partition.clone(), w, &mut trace, &first_leaf) {
                    Some(gamma) => {
                        orbits.absorb(&gamma);
                        generators.push(gamma);
                    }
                    None => failed.push(w),
                }
            }
            let orbit = cell.iter().filter(|&&x| orbits.same(x, v)).count();
            order = order.and_then(|o| o.checked_mul(orbit as u128));
        }
        AutomorphismSearch { generators, order, base: levels.iter().map(|l| l.vertex).collect() }
    }

    /// Depth-first search below `partition` (at first-path depth `depth`)
    /// after individualizing `w`, for a leaf with the first path's trace that
    /// yields an automorphism.
    fn match_below(
        &mut self,
        levels: &[Level],
        depth: usize,
        mut partition: Partition,
        w: u32,
        trace: &mut Trace,
        first_leaf: &[u32],
    ) -> Option<Permutation> {
        if !partition.individualize(self.graph, w, trace, &mut self.scratch) {
            return None;
        }
        if partition.is_discrete() {
            return if trace.matches_target() { self.leaf_map(first_leaf, &partition.lab) } else { None };
        }
        let next = depth + 1;
        let target = partition.target_cell().expect("not discrete");
        if levels.get(next).is_none_or(|l| l.target != target) {
            return None;
        }
        let saved = trace.data.len();
        for &u in &partition.cell(target).to_vec() {
            let found = self.match_below(levels, next, partition.clone(), u, trace, first_leaf);
            trace.data.truncate(saved);
            trace.state = Ordering::Equal;
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// The canonical labelling (vertex `v` gets label `labelling[v]`) and
    /// the canonically relabelled edge list, using `group` for pruning.
    pub fn canonical(&mut self, group: &PermGroup) -> (Vec<u32>, Vec<(u32, u32)>) {
        let mut trace = Trace::against(None, Stop::Greater);
        let root = self.root(&mut trace);
        let mut best = Best { labelling: Vec::new(), edges: Vec::new(), generation: 0 };
        let mut prefix = Vec::new();
        self.canonical_below(root, &mut prefix, &mut trace, group, &mut best);
        (best.labelling, best.edges)
    }

    fn canonical_below(
        &mut self,
        partition: Partition,
        prefix: &mut Vec<u32>,
        trace: &mut Trace,
        group: &PermGroup,
        best: &mut Best,
    ) {
        let Some(target) = partition.target_cell() else {
            self.consider_leaf(&partition, trace, best);
            return;
        };
        // Orbits of the generators fixing the prefix pointwise. Along the
        // first path these form a strong generating set, so the orbits are
        // exact there; elsewhere they may be finer, which is still sound.
        let orbits = {
            let mut uf = UnionFind::new(self.graph.vertex_count());
            for g in group.generators().iter().filter(|g| prefix.iter().all(|&x| g.apply(x) == x)) {
                uf.absorb(g);
            }
            uf
        };
        let cell = partition.cell(target).to_vec();
        let mut explored: Vec<u32> = Vec::new();
        for &u in &cell {
            if explored.iter().any(|&x| orbits.same(x, u)) {
                continue;
            }
            explored.push(u);
            let saved = (trace.data.len(), trace.state, best.generation);
            let mut child = partition.clone();
            if child.individualize(self.graph, u, trace, &mut self.scratch) {
                prefix.push(u);
                self.canonical_below(child, prefix, trace, group, best);
                prefix.pop();
            }
            trace.data.truncate(saved.0);
            // A new best leaf below this node extends the current prefix.
            trace.state = if best.generation != saved.2 { Ordering::Equal } else { saved.1 };
        }
    }

    fn consider_leaf(&self, partition: &Partition, trace: &mut Trace, best: &mut Best) {
        let labelling = partition.positions();
        let mut edges: Vec<(u32, u32)> = self
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (labelling[u as usize], labelling[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        let better = match trace.state {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => {
                let target_len = trace.target().map_or(0, <[u32]>::len);
                match trace.data.len().cmp(&target_len) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => edges < best.edges,
                }
            }
        };
        if better {
            best.labelling = labelling.to_vec();
            best.edges = edges;
            best.generation += 1;
            trace.set_target(trace.data.clone());
            trace.state = Ordering::Equal;
        }
    }
}

struct Best {
    labelling: Vec<u32>,
    edges: Vec<(u32, u32)>,
    generation: u64,
}
