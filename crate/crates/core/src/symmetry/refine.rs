//! Ordered partitions and equitable refinement.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::graph::Graph;

const SPLITTER: u32 = u32::MAX;
const INDIVIDUALIZE: u32 = u32::MAX - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    /// Abort as soon as the trace leaves the target.
    Differ,
    /// Abort once the trace is known to exceed the target.
    Greater,
}

/// The sequence of refinement events along a search path, optionally
/// compared on the fly against a target sequence.
#[derive(Clone, Debug)]
pub(crate) struct Trace {
    pub data: Vec<u32>,
    target: Option<Vec<u32>>,
    /// Comparison of `data` with the prefix of `target` seen so far.
    pub state: Ordering,
    stop: Stop,
}

impl Trace {
    pub fn recording() -> Self {
        Trace { data: Vec::new(), target: None, state: Ordering::Equal, stop: Stop::Differ }
    }

    pub fn against(target: Option<Vec<u32>>, stop: Stop) -> Self {
        let state = if target.is_some() { Ordering::Equal } else { Ordering::Less };
        Trace { data: Vec::new(), target, state, stop }
    }

    pub fn target(&self) -> Option<&[u32]> {
        self.target.as_deref()
    }

    pub fn set_target(&mut self, target: Vec<u32>) {
        self.target = Some(target);
    }

    fn push(&mut self, x: u32) -> bool {
        if self.state == Ordering::Equal {
            if let Some(t) = &self.target {
                self.state = match t.get(self.data.len()) {
                    None => Ordering::Greater,
                    Some(&y) => x.cmp(&y),
                };
            }
        }
        self.data.push(x);
        self.alive()
    }

    pub fn alive(&self) -> bool {
        match self.stop {
            Stop::Differ => self.state == Ordering::Equal,
            Stop::Greater => self.state != Ordering::Greater,
        }
    }

    /// Whether the recorded sequence equals the whole target.
    pub fn matches_target(&self) -> bool {
        self.state == Ordering::Equal && self.target.as_ref().is_some_and(|t| t.len() == self.data.len())
    }
}

/// Reusable per-graph buffers.
pub(crate) struct Scratch {
    count: Vec<u32>,
    cell_mark: Vec<bool>,
    in_queue: Vec<bool>,
    touched: Vec<u32>,
    cells: Vec<u32>,
}

impl Scratch {
    pub fn new(n: usize) -> Self {
        Scratch {
            count: vec![0; n],
            cell_mark: vec![false; n],
            in_queue: vec![false; n],
            touched: Vec::new(),
            cells: Vec::new(),
        }
    }
}

/// An ordered partition of the vertices. Cells are contiguous ranges of
/// `lab` and are named by their starting position.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub lab: Vec<u32>,
    pos: Vec<u32>,
    /// Start of the cell containing each vertex.
    start: Vec<u32>,
    /// End (exclusive) of the cell starting at each position.
    end: Vec<u32>,
    cells: usize,
}

impl Partition {
    pub fn unit(n: usize) -> Self {
        Partition {
            lab: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            start: vec![0; n],
            end: {
                let mut end = vec![0; n];
                if n > 0 {
                    end[0] = n as u32;
                }
                end
            },
            cells: usize::from(n > 0),
        }
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    #[cfg(test)]
    pub fn cell_of(&self, v: u32) -> u32 {
        self.start[v as usize]
    }

    pub fn cell(&self, start: u32) -> &[u32] {
        &self.lab[start as usize..self.end[start as usize] as usize]
    }

    /// Position of each vertex; at a discrete partition this is a labelling.
    pub fn positions(&self) -> &[u32] {
        &self.pos
    }

    /// The first smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        let mut c = 0usize;
        while c < self.lab.len() {
            let e = self.end[c] as usize;
            let size = (e - c) as u32;
            if size > 1 && best.is_none_or(|(s, _)| size < s) {
                best = Some((size, c as u32));
            }
            c = e;
        }
        best.map(|(_, c)| c)
    }

    /// Splits `v` off the front of its cell and refines.
    pub fn individualize(&mut self, g: &Graph, v: u32, trace: &mut Trace, scratch: &mut Scratch) -> bool {
        let c = self.start[v as usize] as usize;
        let e = self.end[c] as usize;
        if !trace.push(INDIVIDUALIZE) || !trace.push(c as u32) {
            return false;
        }
        if e - c == 1 {
            return true;
        }
        let p = self.pos[v as usize] as usize;
        let other = self.lab[c];
        self.lab.swap(c, p);
        self.pos[v as usize] = c as u32;
        self.pos[other as usize] = p as u32;
        self.end[c] = c as u32 + 1;
        self.end[c + 1] = e as u32;
        for &u in &self.lab[c + 1..e] {
            self.start[u as usize] = c as u32 + 1;
        }
        self.cells += 1;
        self.refine(g, &[c as u32], trace, scratch)
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// starting from the given splitter cells. Returns `false` if the trace
    /// aborted, leaving the partition unusable.
    pub fn refine(&mut self, g: &Graph, initial: &[u32], trace: &mut Trace, scratch: &mut Scratch) -> bool {
        let mut queue: VecDeque<u32> = VecDeque::new();
        for &c in initial {
            if !scratch.in_queue[c as usize] {
                scratch.in_queue[c as usize] = true;
                queue.push_back(c);
            }
        }
        let mut alive = true;
        while let Some(w) = queue.pop_front() {
            scratch.in_queue[w as usize] = false;
            if self.is_discrete() {
                continue;
            }
            alive = self.split_by(g, w, &mut queue, trace, scratch);
            if !alive {
                break;
            }
        }
        for c in queue {
            scratch.in_queue[c as usize] = false;
        }
        alive
    }

    fn split_by(
        &mut self,
        g: &Graph,
        w: u32,
        queue: &mut VecDeque<u32>,
        trace: &mut Trace,
        scratch: &mut Scratch,
    ) -> bool {
        let w_end = self.end[w as usize];
        for idx in w..w_end {
            let u = self.lab[idx as usize];
            for &v in g.neighbors(u) {
                if scratch.count[v as usize] == 0 {
                    scratch.touched.push(v);
                }
                scratch.count[v as usize] += 1;
            }
        }
        for &v in &scratch.touched {
            let c = self.start[v as usize];
            if !scratch.cell_mark[c as usize] {
                scratch.cell_mark[c as usize] = true;
                scratch.cells.push(c);
            }
        }
        scratch.cells.sort_unstable();
        let mut alive = trace.push(SPLITTER) && trace.push(w);
        let cells = std::mem::take(&mut scratch.cells);
        for &c in &cells {
            scratch.cell_mark[c as usize] = false;
            if alive {
                alive = self.split_cell(c, queue, trace, scratch);
            }
        }
        scratch.cells = cells;
        scratch.cells.clear();
        for &v in &scratch.touched {
            scratch.count[v as usize] = 0;
        }
        scratch.touched.clear();
        alive
    }

    fn split_cell(&mut self, c: u32, queue: &mut VecDeque<u32>, trace: &mut Trace, scratch: &mut Scratch) -> bool {
        let (cs, ce) = (c as usize, self.end[c as usize] as usize);
        if ce - cs == 1 {
            return true;
        }
        let count = &scratch.count;
        let cell = &mut self.lab[cs..ce];
        cell.sort_by_key(|&v| count[v as usize]);
        let first = count[cell[0] as usize];
        let last = count[cell[ce - cs - 1] as usize];
        if first == last {
            return true;
        }
        // Fragment boundaries, by increasing neighbour count.
        let mut fragments: Vec<(usize, usize, u32)> = Vec::new();
        let mut s = cs;
        for k in cs + 1..=ce {
            if k == ce || count[self.lab[k] as usize] != count[self.lab[s] as usize] {
                fragments.push((s, k, count[self.lab[s] as usize]));
                s = k;
            }
        }
        let mut alive = trace.push(c) && trace.push(fragments.len() as u32);
        for &(fs, fe, k) in &fragments {
            alive = alive && trace.push(k) && trace.push((fe - fs) as u32);
            self.end[fs] = fe as u32;
            for idx in fs..fe {
                let v = self.lab[idx];
                self.start[v as usize] = fs as u32;
                self.pos[v as usize] = idx as u32;
            }
        }
        self.cells += fragments.len() - 1;
        let keep = if scratch.in_queue[cs] {
            None
        } else {
            // The first largest fragment need not be queued.
            let largest = fragments.iter().map(|f| f.1 - f.0).max().expect("nonempty");
            fragments.iter().position(|f| f.1 - f.0 == largest)
        };
        for (k, &(fs, _, _)) in fragments.iter().enumerate() {
            if Some(k) == keep || scratch.in_queue[fs] {
                continue;
            }
            scratch.in_queue[fs] = true;
            queue.push_back(fs as u32);
        }
        alive
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_refines_by_degree_and_distance() {
        // Path 0-1-2-3-4: equitable refinement separates ends, next-to-ends
        // and the middle.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let mut p = Partition::unit(5);
        let mut scratch = Scratch::new(5);
        let mut trace = Trace::recording();
        assert!(p.refine(&g, &[0], &mut trace, &mut scratch));
        assert_eq!(p.cells, 3);
        assert_eq!(p.cell_of(0), p.cell_of(4));
        assert_eq!(p.cell_of(1), p.cell_of(3));
        assert_ne!(p.cell_of(2), p.cell_of(0));
        assert!(p.individualize(&g, 0, &mut trace, &mut scratch));
        assert!(p.is_discrete());
    }

    #[test]
    fn regular_graph_is_already_equitable() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let mut p = Partition::unit(4);
        let mut scratch = Scratch::new(4);
        let mut trace = Trace::recording();
        assert!(p.refine(&g, &[0], &mut trace, &mut scratch));
        assert_eq!(p.cells, 1);
        assert_eq!(p.target_cell(), Some(0));
    }

    #[test]
    fn trace_comparison() {
        let mut t = Trace::against(Some(vec![1, 2, 3]), Stop::Greater);
        assert!(t.push(1));
        assert!(t.push(1));
        assert_eq!(t.state, Ordering::Less);
        assert!(t.push(9));
        let mut t = Trace::against(Some(vec![1, 2]), Stop::Differ);
        assert!(t.push(1) && t.push(2));
        assert!(t.matches_target());
        assert!(!t.push(0));
    }
}
