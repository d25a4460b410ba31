//! Exact arithmetic in split metacyclic groups
//! `<a, b | a^M = b^N = 1, b^-1 a b = a^t>`.
//!
//! Every element has a unique normal form `b^j a^i` with `0 <= j < N` and
//! `0 <= i < M`. Multiplication, powers and inverses are closed formulas in
//! the exponents:
//!
//! * `a^i b^j = b^j a^(i t^j)`
//! * `(b^j1 a^i1)(b^j2 a^i2) = b^(j1+j2) a^(i1 t^j2 + i2)`
//! * `(b^j a^i)^k = b^(kj) a^(i (1 + t^j + ... + t^((k-1)j)))`
//!
//! The main constructor, [`MetacyclicGroup::new`], builds the `p`-group with
//! `M = p^m`, `N = p^n` and `t = 1 + p^r`. [`MetacyclicGroup::abelian`] builds
//! the degenerate handle `Z_M x Z_N` (trivial twist), which is how abelian
//! groups enter the graph builders.

mod map;
mod subgroup;

pub use map::{GroupMap, PairCheck, Relation};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{geometric_sum, is_prime, mul_mod, pow_mod, prime_factors, prime_power_base};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Largest number of elements any enumeration (closure, subgroup
/// computations, regular representation) is allowed to produce: `3^12`.
pub const ENUMERATION_BUDGET: u64 = 531_441;

/// Moduli must stay below `2^63`.
const WORD_LIMIT: u64 = 1 << 63;

/// Twist powers are tabulated while the multiplicative period of the twist
/// stays below this; beyond it they are computed by fast exponentiation.
const TWIST_TABLE_LIMIT: u64 = 1 << 20;

/// An element `b^j a^i` in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u64, u64)", into = "(u64, u64)")]
pub struct Element {
    /// Exponent of `b`.
    pub j: u64,
    /// Exponent of `a`.
    pub i: u64,
}

impl Element {
    pub const IDENTITY: Element = Element { j: 0, i: 0 };

    pub const fn new(j: u64, i: u64) -> Self {
        Element { j, i }
    }

    pub fn is_identity(&self) -> bool {
        self.j == 0 && self.i == 0
    }
}

impl From<(u64, u64)> for Element {
    fn from((j, i): (u64, u64)) -> Self {
        Element { j, i }
    }
}

impl From<Element> for (u64, u64) {
    fn from(e: Element) -> Self {
        (e.j, e.i)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b^{}*a^{}", self.j, self.i)
    }
}

/// The parameters a group handle was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Presentation {
    /// `a^(p^m) = b^(p^n) = 1`, `b^-1 a b = a^(1 + p^r)`.
    PGroup { p: u64, m: u32, n: u32, r: u32 },
    /// `Z_{order_a} x Z_{order_b}` with `a`, `b` the two cyclic generators.
    Abelian { order_a: u64, order_b: u64 },
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Presentation::PGroup { p, m, n, r } => write!(f, "({p},{m},{n},{r})"),
            Presentation::Abelian { order_a, order_b } => write!(f, "Z{order_a}xZ{order_b}"),
        }
    }
}

/// A split metacyclic group handle. Immutable after construction.
#[derive(Clone, Debug)]
pub struct MetacyclicGroup {
    presentation: Presentation,
    order_a: u64,
    order_b: u64,
    twist: u64,
    /// `twist^k mod order_a` for `k` in one full period; empty when the
    /// period exceeds [`TWIST_TABLE_LIMIT`].
    twist_table: Vec<u64>,
    prime: Option<u64>,
}

impl PartialEq for MetacyclicGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order_a == other.order_a && self.order_b == other.order_b && self.twist == other.twist
    }
}

impl Eq for MetacyclicGroup {}

fn checked_power(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .filter(|&v| v < WORD_LIMIT)
        .ok_or_else(|| Error::Overflow(format!("{p}^{e} does not fit below 2^63")))
}

impl MetacyclicGroup {
    /// The group `<a, b | a^(p^m) = b^(p^n) = 1, b^-1 a b = a^(1+p^r)>`,
    /// for an odd prime `p` and `r < m <= n + r`.
    pub fn new(p: u64, m: u32, n: u32, r: u32) -> Result<Self> {
        if p % 2 == 0 || !is_prime(p) {
            return Err(Error::Parameter(format!("p = {p} is not an odd prime")));
        }
        if m == 0 || n == 0 || r == 0 {
            return Err(Error::Parameter("m, n and r must be positive".into()));
        }
        if r >= m {
            return Err(Error::Parameter(format!("need r < m, got r = {r}, m = {m}")));
        }
        if m > n + r {
            return Err(Error::Parameter(format!("need m <= n + r, got m = {m}, n + r = {}", n + r)));
        }
        let order_a = checked_power(p, m)?;
        let order_b = checked_power(p, n)?;
        let twist = 1 + checked_power(p, r)?;
        Self::build(Presentation::PGroup { p, m, n, r }, order_a, order_b, twist, Some(p))
    }

    /// The abelian group `Z_{order_a} x Z_{order_b}` as a handle with trivial twist.
    pub fn abelian(order_a: u64, order_b: u64) -> Result<Self> {
        if order_a == 0 || order_b == 0 {
            return Err(Error::Parameter("cyclic factor orders must be positive".into()));
        }
        if order_a >= WORD_LIMIT || order_b >= WORD_LIMIT {
            return Err(Error::Overflow("factor order does not fit below 2^63".into()));
        }
        order_a
            .checked_mul(order_b)
            .filter(|&v| v < WORD_LIMIT)
            .ok_or_else(|| Error::Overflow("group order does not fit below 2^63".into()))?;
        let prime = prime_power_base(order_a * order_b);
        Self::build(Presentation::Abelian { order_a, order_b }, order_a, order_b, 1 % order_a, prime)
    }

    fn build(
        presentation: Presentation,
        order_a: u64,
        order_b: u64,
        twist: u64,
        prime: Option<u64>,
    ) -> Result<Self> {
        if order_a
            .checked_mul(order_b)
            .filter(|&v| v < WORD_LIMIT)
            .is_none()
        {
            return Err(Error::Overflow("group order does not fit below 2^63".into()));
        }
        let twist = twist % order_a;
        if pow_mod(twist, order_b, order_a) != 1 % order_a {
            return Err(Error::Parameter(format!(
                "twist {twist} does not satisfy t^{order_b} = 1 mod {order_a}"
            )));
        }
        let mut twist_table = vec![1 % order_a];
        let mut current = twist;
        while current != 1 % order_a {
            if twist_table.len() as u64 >= TWIST_TABLE_LIMIT {
                twist_table.clear();
                break;
            }
            twist_table.push(current);
            current = mul_mod(current, twist, order_a);
        }
        Ok(MetacyclicGroup { presentation, order_a, order_b, twist, twist_table, prime })
    }

    pub fn presentation(&self) -> Presentation {
        self.presentation
    }

    /// Order of `a` (the modulus of the `i` exponent).
    pub fn order_a(&self) -> u64 {
        self.order_a
    }

    /// Order of `b` (the modulus of the `j` exponent).
    pub fn order_b(&self) -> u64 {
        self.order_b
    }

    /// The twist `t` in `b^-1 a b = a^t`.
    pub fn twist(&self) -> u64 {
        self.twist
    }

    pub fn order(&self) -> u64 {
        self.order_a * self.order_b
    }

    /// The prime `p` when the group is a `p`-group.
    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    /// Multiplicative period of the twist modulo `order_a`, when tabulated.
    pub fn twist_period(&self) -> Option<u64> {
        (!self.twist_table.is_empty()).then_some(self.twist_table.len() as u64)
    }

    /// `t^k mod order_a`.
    pub fn twist_pow(&self, k: u64) -> u64 {
        if self.twist_table.is_empty() {
            pow_mod(self.twist, k, self.order_a)
        } else {
            self.twist_table[(k % self.twist_table.len() as u64) as usize]
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.twist == 1 % self.order_a
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn a(&self) -> Element {
        Element::new(0, 1 % self.order_a)
    }

    pub fn b(&self) -> Element {
        Element::new(1 % self.order_b, 0)
    }

    /// The element `b^j a^i`, with exponents reduced into range.
    pub fn element(&self, j: i64, i: i64) -> Element {
        Element::new(
            j.rem_euclid(self.order_b as i64) as u64,
            i.rem_euclid(self.order_a as i64) as u64,
        )
    }

    pub fn is_canonical(&self, g: Element) -> bool {
        g.j < self.order_b && g.i < self.order_a
    }

    /// Position of `g` in lexicographic `(j, i)` order.
    pub fn rank(&self, g: Element) -> u64 {
        g.j * self.order_a + g.i
    }

    pub fn unrank(&self, rank: u64) -> Element {
        Element::new(rank / self.order_a, rank % self.order_a)
    }

    pub fn mul(&self, g: Element, h: Element) -> Element {
        let j = (g.j + h.j) % self.order_b;
        let i = (mul_mod(g.i, self.twist_pow(h.j), self.order_a) + h.i) % self.order_a;
        Element::new(j, i)
    }

    pub fn inv(&self, g: Element) -> Element {
        let j = (self.order_b - g.j) % self.order_b;
        // i' = -i t^(-j), and t^(-j) = t^(N - j) because t^N = 1.
        let i = mul_mod(g.i, self.twist_pow(j), self.order_a);
        Element::new(j, (self.order_a - i) % self.order_a)
    }

    /// `g^k` by the closed geometric-sum formula; negative `k` inverts first.
    pub fn pow(&self, g: Element, k: i64) -> Element {
        let base = if k < 0 { self.inv(g) } else { g };
        self.pow_u(base, k.unsigned_abs())
    }

    pub(crate) fn pow_u(&self, g: Element, k: u64) -> Element {
        let j = mul_mod(g.j, k, self.order_b);
        let q = self.twist_pow(g.j);
        let i = mul_mod(g.i, geometric_sum(q, k, self.order_a), self.order_a);
        Element::new(j, i)
    }

    /// `g^-1 h^-1 g h`.
    pub fn commutator(&self, g: Element, h: Element) -> Element {
        let gi = self.inv(g);
        let hi = self.inv(h);
        self.mul(self.mul(gi, hi), self.mul(g, h))
    }

    /// `h^-1 g h`.
    pub fn conj(&self, g: Element, h: Element) -> Element {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// Smallest `k >= 1` with `g^k = 1`.
    pub fn element_order(&self, g: Element) -> u64 {
        let mut order = self.order();
        for q in prime_factors(order) {
            while order % q == 0 && self.pow_u(g, order / q).is_identity() {
                order /= q;
            }
        }
        order
    }

    fn check_budget(&self) -> Result<()> {
        if self.order() > ENUMERATION_BUDGET {
            return Err(Error::Budget(format!(
                "group of order {} exceeds the enumeration budget {ENUMERATION_BUDGET}",
                self.order()
            )));
        }
        Ok(())
    }

    /// All elements in lexicographic `(j, i)` order.
    pub fn elements(&self) -> Result<impl Iterator<Item = Element> + '_> {
        self.check_budget()?;
        Ok((0..self.order()).map(move |r| self.unrank(r)))
    }

    /// Right-multiplication permutations of `a` and `b` on the elements in
    /// rank order.
    pub fn regular_representation(&self) -> Result<PermGroup> {
        self.check_budget()?;
        let n = self.order() as usize;
        let right = |s: Element| {
            let images = (0..n as u64)
                .map(|r| self.rank(self.mul(self.unrank(r), s)) as u32)
                .collect();
            Permutation::from_images(images)
        };
        PermGroup::new(n, vec![right(self.a())?, right(self.b())?])
    }

    /// Parses a word such as `b^2*a^-1`, `a^-2*b`, `1` or `b^1*a^4`.
    ///
    /// Factors are `a`, `b` or `1`, optionally raised to a signed integer
    /// power, joined by `*`; the word is evaluated in the group.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let mut acc = self.identity();
        let mut offset = 0usize;
        for factor in text.split('*') {
            let trimmed = factor.trim();
            let at = offset + factor.len() - factor.trim_start().len();
            offset += factor.len() + 1;
            let (base, exp) = match trimmed.split_once('^') {
                Some((base, exp)) => {
                    let exp: i64 = exp.trim().parse().map_err(|_| Error::Parse {
                        offset: at,
                        message: format!("bad exponent in `{trimmed}`"),
                    })?;
                    (base.trim(), exp)
                }
                None => (trimmed, 1),
            };
            let g = match base {
                "a" => self.a(),
                "b" => self.b(),
                "1" | "e" => self.identity(),
                _ => {
                    return Err(Error::Parse {
                        offset: at,
                        message: format!("unknown generator `{base}`"),
                    })
                }
            };
            acc = self.mul(acc, self.pow(g, exp));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g27() -> MetacyclicGroup {
        MetacyclicGroup::new(3, 2, 1, 1).unwrap()
    }

    #[test]
    fn construction_examples() {
        assert_eq!(g27().order(), 27);
        assert_eq!(MetacyclicGroup::new(3, 2, 2, 1).unwrap().order(), 81);
        assert!(matches!(MetacyclicGroup::new(3, 1, 1, 1), Err(Error::Parameter(_))));
        assert!(matches!(MetacyclicGroup::new(2, 2, 1, 1), Err(Error::Parameter(_))));
        assert!(matches!(MetacyclicGroup::new(9, 2, 1, 1), Err(Error::Parameter(_))));
        assert!(matches!(MetacyclicGroup::new(3, 4, 1, 2), Err(Error::Parameter(_))));
        assert!(matches!(MetacyclicGroup::new(3, 41, 41, 1), Err(Error::Overflow(_))));
    }

    #[test]
    fn twist_period_is_p_power() {
        let g = MetacyclicGroup::new(3, 4, 3, 1).unwrap();
        // 1 + 3 has order 3^3 modulo 3^4.
        assert_eq!(g.twist_period(), Some(27));
        assert_eq!(g.twist_pow(27), 1);
        assert_eq!(g.twist_pow(2), 16);
    }

    #[test]
    fn large_group_uses_fast_exponentiation() {
        let g = MetacyclicGroup::new(3, 18, 18, 1).unwrap();
        assert_eq!(g.twist_period(), None);
        let x = g.element(5, 7);
        assert_eq!(g.mul(x, g.inv(x)), g.identity());
        assert_eq!(g.pow(x, g.element_order(x) as i64), g.identity());
    }

    #[test]
    fn mul_examples() {
        let g = g27();
        assert_eq!(g.mul(Element::new(0, 1), Element::new(1, 0)), Element::new(1, 4));
        assert_eq!(g.mul(g.identity(), Element::new(2, 5)), Element::new(2, 5));
        assert_eq!(g.mul(Element::new(1, 1), Element::new(2, 2)), g.identity());
    }

    #[test]
    fn pow_examples() {
        let g = g27();
        let x = Element::new(1, 1);
        assert_eq!(g.pow(x, 2), Element::new(2, 5));
        assert_eq!(g.pow(x, 3), Element::new(0, 3));
        assert_eq!(g.pow(x, 0), g.identity());
        assert_eq!(g.pow(x, -1), g.inv(x));
        assert_eq!(g.pow(x, -2), g.inv(g.pow(x, 2)));
    }

    #[test]
    fn inv_examples() {
        let g = g27();
        assert_eq!(g.inv(Element::new(0, 1)), Element::new(0, 8));
        assert_eq!(g.inv(Element::new(1, 0)), Element::new(2, 0));
        assert_eq!(g.inv(Element::new(1, 1)), Element::new(2, 2));
    }

    #[test]
    fn commutator_and_conjugate() {
        let g = g27();
        assert_eq!(g.commutator(g.a(), g.b()), Element::new(0, 3));
        assert_eq!(g.commutator(g.b(), g.b()), g.identity());
        assert_eq!(g.conj(g.a(), g.b()), Element::new(0, 4));
    }

    #[test]
    fn orders() {
        let g = g27();
        assert_eq!(g.element_order(g.a()), 9);
        assert_eq!(g.element_order(g.identity()), 1);
        assert_eq!(g.element_order(Element::new(1, 1)), 9);
        assert_eq!(g.element_order(g.b()), 3);
        let z = MetacyclicGroup::abelian(6, 3).unwrap();
        assert_eq!(z.element_order(z.element(1, 2)), 3);
        assert_eq!(z.element_order(z.element(0, 1)), 6);
    }

    #[test]
    fn parse_words() {
        let g = g27();
        assert_eq!(g.parse_element("b^1*a^4").unwrap(), Element::new(1, 4));
        assert_eq!(g.parse_element("a*b").unwrap(), Element::new(1, 4));
        assert_eq!(g.parse_element("a^-2*b").unwrap(), g.mul(g.pow(g.a(), -2), g.b()));
        assert_eq!(g.parse_element("1").unwrap(), g.identity());
        let err = g.parse_element("a*c").unwrap_err();
        assert_eq!(err, Error::Parse { offset: 2, message: "unknown generator `c`".into() });
        assert_eq!(Element::new(2, 7).to_string(), "b^2*a^7");
    }

    #[test]
    fn element_json_is_a_pair() {
        let text = serde_json::to_string(&Element::new(1, 4)).unwrap();
        assert_eq!(text, "[1,4]");
        let back: Element = serde_json::from_str(&text).unwrap();
        assert_eq!(back, Element::new(1, 4));
    }

    #[test]
    fn abelian_handle() {
        let z = MetacyclicGroup::abelian(9, 3).unwrap();
        assert!(z.is_abelian());
        assert_eq!(z.prime(), Some(3));
        assert_eq!(z.order(), 27);
        let x = z.element(2, 5);
        let y = z.element(1, 7);
        assert_eq!(z.mul(x, y), z.mul(y, x));
        assert_eq!(MetacyclicGroup::abelian(6, 1).unwrap().prime(), None);
    }
}
