//! Subgroup enumeration: closures, derived and Frattini subgroups, centre,
//! and the inner-abelian test.

use std::collections::{BTreeSet, VecDeque};

use super::{Element, MetacyclicGroup, ENUMERATION_BUDGET};
use crate::error::{Error, Result};

impl MetacyclicGroup {
    /// The subgroup generated by `generators`, by breadth-first closure under
    /// right multiplication.
    pub fn closure(&self, generators: &[Element]) -> Result<BTreeSet<Element>> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    if seen.len() as u64 > ENUMERATION_BUDGET {
                        return Err(Error::Budget(format!(
                            "subgroup exceeds the enumeration budget {ENUMERATION_BUDGET}"
                        )));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(seen)
    }

    /// Whether `generators` generate the whole group.
    pub fn generates(&self, generators: &[Element]) -> Result<bool> {
        Ok(self.closure(generators)?.len() as u64 == self.order())
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Element]) -> Result<BTreeSet<Element>> {
        let conjugators = [self.a(), self.b()];
        let mut gens: Vec<Element> = seeds.to_vec();
        loop {
            let closed = self.closure(&gens)?;
            let missing = gens
                .iter()
                .flat_map(|&s| conjugators.iter().map(move |&c| (s, c)))
                .map(|(s, c)| self.conj(s, c))
                .find(|x| !closed.contains(x));
            match missing {
                Some(x) => gens.push(x),
                None => return Ok(closed),
            }
        }
    }

    /// The derived subgroup: the normal closure of `[a, b]`.
    pub fn derived_subgroup(&self) -> Result<BTreeSet<Element>> {
        self.normal_closure(&[self.commutator(self.a(), self.b())])
    }

    fn require_p_group(&self) -> Result<u64> {
        self.prime
            .ok_or_else(|| Error::Precondition("group is not of prime-power order".into()))
    }

    /// The Frattini subgroup, computed as `G^p G'` (valid for `p`-groups).
    pub fn frattini_subgroup(&self) -> Result<BTreeSet<Element>> {
        let p = self.require_p_group()?;
        let mut gens: Vec<Element> = self
            .elements()?
            .map(|g| self.pow_u(g, p))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        gens.push(self.commutator(self.a(), self.b()));
        self.normal_closure(&gens)
    }

    /// Elements commuting with both generators.
    pub fn center(&self) -> Result<BTreeSet<Element>> {
        let (a, b) = (self.a(), self.b());
        Ok(self
            .elements()?
            .filter(|&g| self.mul(g, a) == self.mul(a, g) && self.mul(g, b) == self.mul(b, g))
            .collect())
    }

    /// A small generating set of the subgroup with the given elements,
    /// chosen greedily by decreasing element order.
    pub fn generating_set(&self, subgroup: &BTreeSet<Element>) -> Result<Vec<Element>> {
        let mut candidates: Vec<Element> = subgroup.iter().copied().collect();
        candidates.sort_by_key(|&g| (std::cmp::Reverse(self.element_order(g)), g));
        let mut gens = Vec::new();
        let mut span = self.closure(&gens)?;
        for g in candidates {
            if span.len() == subgroup.len() {
                break;
            }
            if !span.contains(&g) {
                gens.push(g);
                span = self.closure(&gens)?;
            }
        }
        Ok(gens)
    }

    /// Generating sets of all maximal subgroups, obtained from hyperplanes of
    /// the elementary abelian quotient `G / Phi(G)`.
    pub fn maximal_subgroup_generators(&self) -> Result<Vec<Vec<Element>>> {
        let p = self.require_p_group()?;
        let frattini = self.frattini_subgroup()?;
        let frattini_gens = self.generating_set(&frattini)?;

        // Lift a basis of G / Phi from the group generators.
        let mut basis: Vec<Element> = Vec::new();
        let mut span = frattini.clone();
        for g in [self.a(), self.b()] {
            if !span.contains(&g) {
                basis.push(g);
                let mut gens = frattini_gens.clone();
                gens.extend(&basis);
                span = self.closure(&gens)?;
            }
        }
        debug_assert_eq!(span.len() as u64, self.order());

        let d = basis.len();
        let mut out = Vec::new();
        // Normalised functionals c with c[pivot] = 1 and zeros before it.
        for pivot in 0..d {
            let free = d - pivot - 1;
            let count = p.pow(free as u32);
            for code in 0..count {
                let mut coeffs = vec![0u64; d];
                coeffs[pivot] = 1;
                let mut rest = code;
                for c in coeffs.iter_mut().skip(pivot + 1) {
                    *c = rest % p;
                    rest /= p;
                }
                // Kernel basis: e_l for l < pivot, and e_l * e_pivot^(-c_l) for l > pivot.
                let mut gens = frattini_gens.clone();
                for l in 0..d {
                    if l == pivot {
                        continue;
                    }
                    let shift = (p - coeffs[l] % p) % p;
                    let lift = self.mul(basis[l], self.pow_u(basis[pivot], shift));
                    gens.push(lift);
                }
                out.push(gens);
            }
        }
        Ok(out)
    }

    /// Non-abelian with every maximal subgroup abelian.
    pub fn is_inner_abelian(&self) -> Result<bool> {
        if self.is_abelian() {
            return Ok(false);
        }
        for gens in self.maximal_subgroup_generators()? {
            let commuting = gens.iter().enumerate().all(|(k, &x)| {
                gens[k + 1..].iter().all(|&y| self.mul(x, y) == self.mul(y, x))
            });
            if !commuting {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
