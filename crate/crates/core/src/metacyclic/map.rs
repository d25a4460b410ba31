//! Group endomorphisms given by the images of the two generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Element, MetacyclicGroup};
use crate::error::{Error, Result};

/// A candidate map `a -> image_a`, `b -> image_b`.
///
/// Only maps produced by [`MetacyclicGroup::automorphism`] (or the identity
/// and inversion constructors) are marked validated; every operation that
/// extends the map multiplicatively refuses unvalidated maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupMap {
    pub image_a: Element,
    pub image_b: Element,
    validated: bool,
}

impl GroupMap {
    /// An unvalidated candidate.
    pub fn candidate(image_a: Element, image_b: Element) -> Self {
        GroupMap { image_a, image_b, validated: false }
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }
}

/// One of the defining relations a generator pair has to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `x^M = 1`.
    OrderA,
    /// `y^N = 1`.
    OrderB,
    /// `y^-1 x y = x^t`.
    Twist,
    /// `<x, y>` is the whole group.
    Generation,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::OrderA => "x^M = 1",
            Relation::OrderB => "y^N = 1",
            Relation::Twist => "y^-1 x y = x^t",
            Relation::Generation => "<x, y> = H",
        })
    }
}

/// Outcome of testing whether `a -> x`, `b -> y` extends to an automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheck {
    /// The first relation (in declaration order) that fails, if any.
    pub violated: Option<Relation>,
    /// The element that the failed relation would force to be trivial:
    /// `x^M`, `y^N`, or `(y^-1 x y) (x^t)^-1`. `None` for generation failures.
    pub forced: Option<Element>,
}

impl PairCheck {
    pub fn holds(&self) -> bool {
        self.violated.is_none()
    }
}

impl MetacyclicGroup {
    /// Tests the three defining relations and generation for the pair `(x, y)`.
    pub fn check_automorphism_pair(&self, x: Element, y: Element) -> Result<PairCheck> {
        let fail = |relation, forced| Ok(PairCheck { violated: Some(relation), forced });
        let xm = self.pow_u(x, self.order_a());
        if !xm.is_identity() {
            return fail(Relation::OrderA, Some(xm));
        }
        let yn = self.pow_u(y, self.order_b());
        if !yn.is_identity() {
            return fail(Relation::OrderB, Some(yn));
        }
        let lhs = self.conj(x, y);
        let rhs = self.pow_u(x, self.twist());
        if lhs != rhs {
            return fail(Relation::Twist, Some(self.mul(lhs, self.inv(rhs))));
        }
        if !self.generates(&[x, y])? {
            return fail(Relation::Generation, None);
        }
        Ok(PairCheck { violated: None, forced: None })
    }

    /// Whether `a -> x`, `b -> y` extends to an automorphism.
    pub fn is_automorphism_pair(&self, x: Element, y: Element) -> Result<bool> {
        Ok(self.check_automorphism_pair(x, y)?.holds())
    }

    /// The validated automorphism `a -> x`, `b -> y`.
    pub fn automorphism(&self, x: Element, y: Element) -> Result<GroupMap> {
        let check = self.check_automorphism_pair(x, y)?;
        match check.violated {
            None => Ok(GroupMap { image_a: x, image_b: y, validated: true }),
            Some(rel) => Err(Error::Parameter(format!(
                "a -> {x}, b -> {y} is not an automorphism: {rel} fails"
            ))),
        }
    }

    /// Validates a candidate map.
    pub fn validate(&self, f: GroupMap) -> Result<GroupMap> {
        self.automorphism(f.image_a, f.image_b)
    }

    pub fn identity_map(&self) -> GroupMap {
        GroupMap { image_a: self.a(), image_b: self.b(), validated: true }
    }

    /// `g -> g^-1`, an automorphism exactly when the group is abelian.
    pub fn inversion_map(&self) -> Result<GroupMap> {
        if !self.is_abelian() {
            return Err(Error::Precondition("inversion is an automorphism only of abelian groups".into()));
        }
        Ok(GroupMap { image_a: self.inv(self.a()), image_b: self.inv(self.b()), validated: true })
    }

    /// `(b^j a^i)^f = (b^f)^j (a^f)^i`.
    pub fn apply_map(&self, f: &GroupMap, g: Element) -> Result<Element> {
        if !f.validated {
            return Err(Error::InvalidMap);
        }
        Ok(self.mul(self.pow_u(f.image_b, g.j), self.pow_u(f.image_a, g.i)))
    }

    /// The map applying `f1` first, then `f2`.
    pub fn compose_maps(&self, f1: &GroupMap, f2: &GroupMap) -> Result<GroupMap> {
        Ok(GroupMap {
            image_a: self.apply_map(f2, f1.image_a)?,
            image_b: self.apply_map(f2, f1.image_b)?,
            validated: f1.validated && f2.validated,
        })
    }

    /// Smallest `k >= 1` with `f^k` the identity.
    pub fn map_order(&self, f: &GroupMap) -> Result<u64> {
        let id = self.identity_map();
        let mut power = *f;
        let mut k = 1u64;
        while (power.image_a, power.image_b) != (id.image_a, id.image_b) {
            power = self.compose_maps(&power, f)?;
            k += 1;
            if k > self.order() * self.order() {
                return Err(Error::Precondition("map order exceeds the number of generator pairs".into()));
            }
        }
        Ok(k)
    }

    /// Every automorphism, by testing all generator-image pairs.
    pub fn automorphisms(&self) -> Result<Vec<GroupMap>> {
        let elements: Vec<Element> = self.elements()?.collect();
        let x_candidates: Vec<Element> = elements
            .iter()
            .copied()
            .filter(|&x| self.element_order(x) == self.element_order(self.a()))
            .collect();
        let y_candidates: Vec<Element> = elements
            .iter()
            .copied()
            .filter(|&y| self.element_order(y) == self.element_order(self.b()))
            .collect();
        let mut out = Vec::new();
        for &x in &x_candidates {
            for &y in &y_candidates {
                if self.is_automorphism_pair(x, y)? {
                    out.push(GroupMap { image_a: x, image_b: y, validated: true });
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g27() -> MetacyclicGroup {
        MetacyclicGroup::new(3, 2, 1, 1).unwrap()
    }

    #[test]
    fn claim_pairs_in_smallest_group() {
        let g = g27();
        let x = g.parse_element("a^-2*b").unwrap();
        let y = g.parse_element("a^0*b").unwrap();
        assert_eq!(x, Element::new(1, 1));
        assert!(g.is_automorphism_pair(x, y).unwrap());

        let check = g.check_automorphism_pair(g.element(0, -1), g.parse_element("a^3*b^-1").unwrap()).unwrap();
        assert_eq!(check.violated, Some(Relation::Twist));
        assert_eq!(check.forced, Some(Element::new(0, 6)));

        let check = g.check_automorphism_pair(g.parse_element("b^-1*a").unwrap(), g.element(-1, 0)).unwrap();
        assert_eq!(check.violated, Some(Relation::Twist));
        assert_eq!(check.forced, Some(Element::new(0, 3)));
    }

    #[test]
    fn order_and_generation_failures() {
        let g = g27();
        let check = g.check_automorphism_pair(g.element(0, 3), g.identity()).unwrap();
        assert_eq!(check.violated, Some(Relation::Generation));
        assert_eq!(check.forced, None);
        let check = g.check_automorphism_pair(g.a(), g.element(1, 1)).unwrap();
        assert_eq!(check.violated, Some(Relation::OrderB));
    }

    #[test]
    fn apply_and_compose() {
        let g = g27();
        let f = g.automorphism(Element::new(1, 1), Element::new(1, 0)).unwrap();
        assert_eq!(g.apply_map(&f, g.identity()).unwrap(), g.identity());
        assert_eq!(g.apply_map(&f, g.a()).unwrap(), Element::new(1, 1));
        let a_inv_b = g.parse_element("a^-1*b").unwrap();
        assert_eq!(g.apply_map(&f, a_inv_b).unwrap(), g.element(0, -1));
        assert_eq!(g.compose_maps(&f, &g.identity_map()).unwrap(), f);
        assert_eq!(g.map_order(&f).unwrap(), 3);
        assert_eq!(g.map_order(&g.identity_map()).unwrap(), 1);
    }

    #[test]
    fn unvalidated_maps_are_refused() {
        let g = g27();
        let f = GroupMap::candidate(g.a(), g.b());
        assert_eq!(g.apply_map(&f, g.a()), Err(Error::InvalidMap));
        assert!(g.validate(f).unwrap().is_validated());
    }

    #[test]
    fn inversion_only_for_abelian() {
        assert!(g27().inversion_map().is_err());
        let z = MetacyclicGroup::abelian(9, 3).unwrap();
        let iota = z.inversion_map().unwrap();
        assert_eq!(z.apply_map(&iota, Element::new(1, 2)).unwrap(), Element::new(2, 7));
    }

    #[test]
    fn automorphism_count_of_smallest_group() {
        // |Aut| of the non-abelian group of order 27 and exponent 9 is 54.
        assert_eq!(g27().automorphisms().unwrap().len(), 54);
    }
}
