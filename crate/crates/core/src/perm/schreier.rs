//! Deterministic Schreier-Sims.
//!
//! Base points are chosen as the smallest point moved by the first
//! generator that fixes the current base. Transversals are stored as
//! Schreier trees (the generator index that reached each orbit point), so
//! memory stays linear in the degree per level.

use super::Permutation;

const ROOT: u32 = u32::MAX - 1;
const ABSENT: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    /// For each point of the basic orbit, the index of the generator whose
    /// application reached it; `ROOT` for the base point.
    label: Vec<u32>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        let mut level = Level {
            point,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            label: vec![ABSENT; degree],
            orbit: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn set_gens(&mut self, gens: Vec<Permutation>) {
        self.inv_gens = gens.iter().map(Permutation::inverse).collect();
        self.gens = gens;
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        self.label.iter_mut().for_each(|l| *l = ABSENT);
        self.label[self.point as usize] = ROOT;
        self.orbit.clear();
        self.orbit.push(self.point);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for (k, g) in self.gens.iter().enumerate() {
                let y = g.apply(x);
                if self.label[y as usize] == ABSENT {
                    self.label[y as usize] = k as u32;
                    self.orbit.push(y);
                }
            }
        }
    }

    fn in_orbit(&self, x: u32) -> bool {
        self.label[x as usize] != ABSENT
    }

    /// A coset representative mapping the base point to `x`.
    fn representative(&self, mut x: u32) -> Permutation {
        let mut path = Vec::new();
        while self.label[x as usize] != ROOT {
            let k = self.label[x as usize] as usize;
            path.push(k);
            x = self.inv_gens[k].apply(x);
        }
        let degree = self.label.len();
        path.iter().rev().fold(Permutation::identity(degree), |acc, &k| acc.then(&self.gens[k]))
    }

    /// `h` followed by the inverse of the representative of `x`.
    fn strip(&self, h: &Permutation, mut x: u32) -> Permutation {
        let mut out = h.clone();
        while self.label[x as usize] != ROOT {
            let k = self.label[x as usize] as usize;
            out = out.then(&self.inv_gens[k]);
            x = self.inv_gens[k].apply(x);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    strong: Vec<Permutation>,
}

impl StabChain {
    /// Builds a chain whose base begins with `prefix`.
    pub(crate) fn build(degree: usize, generators: &[Permutation], prefix: &[u32]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new(), strong: Vec::new() };
        for &p in prefix {
            chain.levels.push(Level::new(p, degree));
        }
        for g in generators {
            if g.is_identity() || chain.strong.contains(g) {
                continue;
            }
            chain.strong.push(g.clone());
            if chain.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let p = g.first_moved().expect("non-identity");
                chain.levels.push(Level::new(p, degree));
            }
        }
        chain.refresh_from(0);
        chain.complete();
        chain
    }

    fn gens_fixing_prefix(&self, depth: usize) -> Vec<Permutation> {
        self.strong
            .iter()
            .filter(|g| self.levels[..depth].iter().all(|l| g.apply(l.point) == l.point))
            .cloned()
            .collect()
    }

    fn refresh_from(&mut self, start: usize) {
        for depth in start..self.levels.len() {
            let gens = self.gens_fixing_prefix(depth);
            self.levels[depth].set_gens(gens);
        }
    }

    /// Sifts `h` from level `from`; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it passed every level).
    fn sift(&self, h: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = h.clone();
        for depth in from..self.levels.len() {
            let level = &self.levels[depth];
            let x = h.apply(level.point);
            if !level.in_orbit(x) {
                return (h, depth);
            }
            h = level.strip(&h, x);
        }
        (h, self.levels.len())
    }

    fn complete(&mut self) {
        let mut depth = self.levels.len();
        while depth > 0 {
            let i = depth - 1;
            match self.find_missing(i) {
                None => depth -= 1,
                Some((h, stop)) => {
                    let mut stop = stop;
                    if stop == self.levels.len() {
                        let p = h.first_moved().expect("residue is not the identity");
                        self.levels.push(Level::new(p, self.degree));
                        stop = self.levels.len() - 1;
                    }
                    self.strong.push(h);
                    self.refresh_from(i + 1);
                    depth = stop + 1;
                }
            }
        }
    }

    /// A Schreier generator at level `i` that does not sift through the
    /// levels below it.
    fn find_missing(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &x in &level.orbit {
            let ux = level.representative(x);
            for g in &level.gens {
                let y = g.apply(x);
                // u_x g u_y^-1 fixes the base point of this level.
                let schreier = level.strip(&ux.then(g), y);
                if schreier.is_identity() {
                    continue;
                }
                let (residue, stop) = self.sift(&schreier, i + 1);
                if !residue.is_identity() {
                    return Some((residue, stop));
                }
            }
        }
        None
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    pub(crate) fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub(crate) fn contains(&self, p: &Permutation) -> bool {
        let (residue, _) = self.sift(p, 0);
        residue.is_identity()
    }

    /// Strong generators fixing the first `depth` base points; they
    /// generate the pointwise stabilizer of those points.
    pub(crate) fn strong_generators_fixing(&self, depth: usize) -> Vec<Permutation> {
        match self.levels.get(depth) {
            Some(level) => level.gens.clone(),
            None => self.gens_fixing_prefix(depth.min(self.levels.len())),
        }
    }
}
