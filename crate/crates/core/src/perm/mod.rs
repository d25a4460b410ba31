//! Permutations on `{0, ..., n-1}` and permutation groups given by
//! generators.
//!
//! Permutations act on the right: `compose(p, q)` applies `p` first, so the
//! image of `x` under `compose(p, q)` is `q(p(x))`. This matches the right
//! translations `h_i -> (hg)_i`, for which `R(g) R(h) = R(gh)`.

mod schreier;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use schreier::StabChain;

/// Largest degree accepted by [`Permutation::from_images`] and [`PermGroup::new`].
pub const MAX_DEGREE: usize = 100_000;

/// A bijection of `{0, ..., degree-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Validates that `images` is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.len() > MAX_DEGREE {
            return Err(Error::Parameter(format!("degree {} exceeds {MAX_DEGREE}", images.len())));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            match seen.get_mut(x as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(Error::Parameter(format!("images are not a bijection (at {x})"))),
            }
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees bijectivity.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.then(other))
    }

    /// Unchecked [`compose`](Self::compose).
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Permutation { images }
    }

    /// Smallest point not fixed.
    pub fn first_moved(&self) -> Option<u32> {
        self.images.iter().enumerate().find(|(x, &y)| *x as u32 != y).map(|(x, _)| x as u32)
    }

    /// Cycle lengths, fixed points included, in increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }
}

/// A permutation group given by generators, with a lazily built stabilizer
/// chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::Parameter(format!("degree {degree} exceeds {MAX_DEGREE}")));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
        }
        Ok(PermGroup { degree, generators, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new(), chain: OnceLock::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    /// The orbit of `point`, in breadth-first discovery order.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut out = vec![point];
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// All orbits, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut label = vec![u32::MAX; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree as u32 {
            if label[start as usize] != u32::MAX {
                continue;
            }
            let mut orbit = self.orbit(start);
            for &x in &orbit {
                label[x as usize] = out.len() as u32;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Group order, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    /// Base points of the stabilizer chain.
    pub fn base(&self) -> Vec<u32> {
        self.chain().base()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.chain().contains(p)
    }

    /// The stabilizer of `point`, generated by the strong generators of a
    /// chain whose base starts at `point`.
    pub fn stabilizer(&self, point: u32) -> PermGroup {
        self.pointwise_stabilizer(&[point])
    }

    /// The subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> PermGroup {
        if points.is_empty() {
            return self.clone();
        }
        let chain = StabChain::build(self.degree, &self.generators, points);
        let generators = chain.strong_generators_fixing(points.len());
        PermGroup::new(self.degree, generators).expect("degrees agree")
    }

    /// Every orbit has size equal to the group order.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| o.len() as u128 == order)
    }

    /// Semiregular on an invariant subset of points.
    pub fn is_semiregular_on(&self, domain: &[u32]) -> Result<bool> {
        self.check_invariant(domain)?;
        let mut sub = domain.to_vec();
        sub.sort_unstable();
        sub.dedup();
        let order = self.order();
        let mut done = vec![false; self.degree];
        for &x in &sub {
            if done[x as usize] {
                continue;
            }
            let orbit = self.orbit(x);
            if orbit.len() as u128 != order {
                return Ok(false);
            }
            for y in orbit {
                done[y as usize] = true;
            }
        }
        Ok(true)
    }

    /// Whether a nonempty invariant `subset` is a single orbit.
    pub fn is_transitive_on(&self, subset: &[u32]) -> Result<bool> {
        if subset.is_empty() {
            return Err(Error::Parameter("subset must be nonempty".into()));
        }
        self.check_invariant(subset)?;
        let mut sub = subset.to_vec();
        sub.sort_unstable();
        sub.dedup();
        Ok(self.orbit(sub[0]).len() == sub.len())
    }

    fn check_invariant(&self, subset: &[u32]) -> Result<()> {
        let mut member = vec![false; self.degree];
        for &x in subset {
            *member
                .get_mut(x as usize)
                .ok_or_else(|| Error::Parameter(format!("point {x} out of range")))? = true;
        }
        let invariant = subset
            .iter()
            .all(|&x| self.generators.iter().all(|g| member[g.apply(x) as usize]));
        if invariant {
            Ok(())
        } else {
            Err(Error::InvariantViolation)
        }
    }

    /// Whether `sub` is normal in `self`; `sub` must be a subgroup.
    pub fn is_normal(&self, sub: &PermGroup) -> Result<bool> {
        if sub.degree != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: sub.degree });
        }
        if !sub.generators.iter().all(|n| self.contains(n)) {
            return Err(Error::Containment);
        }
        for g in &self.generators {
            let g_inv = g.inverse();
            for n in &sub.generators {
                let conj = g_inv.then(n).then(g);
                if !sub.contains(&conj) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
