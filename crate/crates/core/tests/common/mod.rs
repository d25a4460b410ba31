//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's arithmetic, refinement or Schreier-Sims code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use bicay::{Element, Graph};

/// Naive model of `<a, b | a^M = b^N = 1, b^-1 a b = a^t>`: products are
/// computed by pushing each `a` through each `b` with `a b = b a^t`.
#[derive(Clone, Copy, Debug)]
pub struct NaiveGroup {
    pub m: u64,
    pub n: u64,
    pub t: u64,
}

impl NaiveGroup {
    pub fn pgroup(p: u64, m: u32, n: u32, r: u32) -> Self {
        NaiveGroup { m: p.pow(m), n: p.pow(n), t: 1 + p.pow(r) }
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn elements(&self) -> Vec<Element> {
        (0..self.n).flat_map(|j| (0..self.m).map(move |i| Element::new(j, i))).collect()
    }

    /// `a^i b^j` rewritten as `b^j a^?`, one letter at a time.
    fn push_through(&self, i: u64, j: u64) -> u64 {
        let mut exp = i % self.m;
        for _ in 0..j {
            exp = exp * self.t % self.m;
        }
        exp
    }

    pub fn mul(&self, g: Element, h: Element) -> Element {
        let moved = self.push_through(g.i, h.j);
        Element::new((g.j + h.j) % self.n, (moved + h.i) % self.m)
    }

    pub fn pow(&self, g: Element, k: u64) -> Element {
        (0..k).fold(Element::new(0, 0), |acc, _| self.mul(acc, g))
    }

    pub fn inv(&self, g: Element) -> Element {
        self.elements()
            .into_iter()
            .find(|&h| self.mul(g, h) == Element::new(0, 0))
            .expect("every element has an inverse")
    }

    pub fn rank(&self, g: Element) -> usize {
        (g.j * self.m + g.i) as usize
    }

    /// Right multiplication by `g` on ranks.
    pub fn right_mult(&self, g: Element) -> Vec<u32> {
        self.elements().into_iter().map(|h| self.rank(self.mul(h, g)) as u32).collect()
    }

    /// Subgroup generated by `gens`, by breadth-first closure.
    pub fn closure(&self, gens: &[Element]) -> BTreeSet<Element> {
        let mut seen = BTreeSet::from([Element::new(0, 0)]);
        let mut queue = VecDeque::from([Element::new(0, 0)]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Derived subgroup as the closure of all commutators.
    pub fn derived(&self) -> BTreeSet<Element> {
        let els = self.elements();
        let mut comms = Vec::new();
        for &x in &els {
            for &y in &els {
                let c = self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y));
                comms.push(c);
            }
        }
        comms.sort();
        comms.dedup();
        self.closure(&comms)
    }
}

/// Applies `q` after `p` on image vectors.
pub fn then(p: &[u32], q: &[u32]) -> Vec<u32> {
    p.iter().map(|&x| q[x as usize]).collect()
}

/// Number of elements of the permutation group generated by `gens`,
/// by breadth-first closure over all elements.
pub fn closure_order(degree: usize, gens: &[Vec<u32>]) -> usize {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = then(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

fn adjacency(edges: &[(u32, u32)], n: usize) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    adj
}

/// All automorphisms of a connected graph, by backtracking over a
/// breadth-first vertex order with adjacency consistency checks.
pub fn brute_automorphisms(graph: &Graph) -> Vec<Vec<u32>> {
    let n = graph.vertex_count();
    let adj = adjacency(&graph.edges(), n);
    let has = |u: u32, v: u32| adj[u as usize].contains(&v);
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut order = vec![0u32];
    let mut placed = vec![false; n];
    placed[0] = true;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in &adj[x as usize] {
            if !placed[y as usize] {
                placed[y as usize] = true;
                order.push(y);
            }
        }
    }
    assert_eq!(order.len(), n, "brute force oracle needs a connected graph");
    let mut image = vec![u32::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    fn go(
        k: usize,
        order: &[u32],
        adj: &[Vec<u32>],
        has: &dyn Fn(u32, u32) -> bool,
        image: &mut Vec<u32>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if k == order.len() {
            out.push(image.clone());
            return;
        }
        let v = order[k];
        for w in 0..image.len() as u32 {
            if used[w as usize] || adj[w as usize].len() != adj[v as usize].len() {
                continue;
            }
            let consistent = order[..k].iter().all(|&u| has(u, v) == has(image[u as usize], w));
            if !consistent {
                continue;
            }
            image[v as usize] = w;
            used[w as usize] = true;
            go(k + 1, order, adj, has, image, used, out);
            used[w as usize] = false;
            image[v as usize] = u32::MAX;
        }
    }
    go(0, &order, &adj, &has, &mut image, &mut used, &mut out);
    out
}

/// Graph from LCF notation: a Hamiltonian cycle plus chords `v -- v + jump`.
pub fn lcf(jumps: &[i64], repeats: usize) -> Graph {
    let n = jumps.len() * repeats;
    let mut edges = BTreeSet::new();
    for v in 0..n {
        let w = (v + 1) % n;
        edges.insert((v.min(w) as u32, v.max(w) as u32));
        let j = jumps[v % jumps.len()];
        let w = (v as i64 + j).rem_euclid(n as i64) as usize;
        edges.insert((v.min(w) as u32, v.max(w) as u32));
    }
    Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>()).unwrap()
}

pub fn gray() -> Graph {
    lcf(&[-25, 7, -7, 13, -13, 25], 9)
}

pub fn pappus() -> Graph {
    lcf(&[5, 7, -7, 7, -7, -5], 3)
}

pub fn heawood() -> Graph {
    lcf(&[5, -5], 7)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    let edges: Vec<(u32, u32)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    Graph::from_edges(10, &edges).unwrap()
}

/// Number of orbits of `gens` on arcs, computed by closure of each arc.
pub fn arc_orbit_count(graph: &Graph, gens: &[Vec<u32>]) -> usize {
    let arcs: Vec<(u32, u32)> = graph.edges().into_iter().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
    let mut seen = HashSet::new();
    let mut count = 0;
    for &arc in &arcs {
        if seen.contains(&arc) {
            continue;
        }
        count += 1;
        let mut queue = VecDeque::from([arc]);
        seen.insert(arc);
        while let Some((u, v)) = queue.pop_front() {
            for g in gens {
                let next = (g[u as usize], g[v as usize]);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    count
}
