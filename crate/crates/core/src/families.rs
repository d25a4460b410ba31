//! The graph families `Γ_t`, `Σ_t` and `Γ_{m,n,λ}`, verifiers for their
//! symmetry claims, and the census of cubic bi-Cayley graphs over small
//! groups.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::gcd;
use crate::bicayley::{BiCayleyGraph, Candidate};
use crate::error::{Error, Result};
use crate::metacyclic::{Element, GroupMap, MetacyclicGroup, Presentation, Relation};
use crate::perm::Permutation;
use crate::symmetry::{self, arc_orbit_sizes, Classification, SymmetryReport};

/// Largest `t` accepted by [`gamma_t`] and [`sigma_t`].
pub const MAX_T: u32 = 3;

/// Largest `t` for which [`verify_lemma_5_1`] computes the full
/// automorphism group of `Γ_t`.
pub const LEMMA_5_1_FULL_T: u32 = 2;

/// Largest `t` accepted by [`verify_lemma_5_2`]; only `t = 1` gets the full
/// automorphism group.
pub const LEMMA_5_2_MAX_T: u32 = 2;

/// Largest group order the census accepts.
pub const CENSUS_ORDER_LIMIT: u64 = 243;

/// A member of one of the three families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `BiCay(H, ∅, ∅, {1, a, a^-1 b})` over `(3, t+1, t, t)`.
    Gamma { t: u32 },
    /// `BiCay(H, ∅, ∅, {1, b, b^-1 a})` over `(3, t+1, t+1, t)`.
    Sigma { t: u32 },
    /// `BiCay(Z_{nm} x Z_m, ∅, ∅, {1, x, x^λ y})`.
    Abelian { m: u64, n: u64, lambda: u64 },
}

impl FamilySpec {
    pub fn build(&self) -> Result<BiCayleyGraph> {
        match *self {
            FamilySpec::Gamma { t } => gamma_t(t),
            FamilySpec::Sigma { t } => sigma_t(t),
            FamilySpec::Abelian { m, n, lambda } => abelian_family_with(m, n, lambda),
        }
    }
}

fn check_t(t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::Parameter("t must be positive".into()));
    }
    if t > MAX_T {
        return Err(Error::Budget(format!("t = {t} exceeds the family limit {MAX_T}")));
    }
    Ok(())
}

/// The group `(3, t+1, t, t)`.
pub fn gamma_group(t: u32) -> Result<MetacyclicGroup> {
    MetacyclicGroup::new(3, t + 1, t, t)
}

/// The group `(3, t+1, t+1, t)`.
pub fn sigma_group(t: u32) -> Result<MetacyclicGroup> {
    MetacyclicGroup::new(3, t + 1, t + 1, t)
}

pub fn gamma_t(t: u32) -> Result<BiCayleyGraph> {
    check_t(t)?;
    let h = gamma_group(t)?;
    let s = [h.identity(), h.a(), h.mul(h.inv(h.a()), h.b())];
    BiCayleyGraph::build(&h, &[], &[], &s)
}

pub fn sigma_t(t: u32) -> Result<BiCayleyGraph> {
    check_t(t)?;
    let h = sigma_group(t)?;
    let s = [h.identity(), h.b(), h.mul(h.inv(h.b()), h.a())];
    BiCayleyGraph::build(&h, &[], &[], &s)
}

/// The smallest unit `λ` with `λ^2 - λ + 1 = 0 (mod n)`; `0` when `n = 1`.
pub fn find_lambda(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Parameter("n must be positive".into()));
    }
    if n == 1 {
        return Ok(0);
    }
    (1..n)
        .filter(|&l| gcd(l, n) == 1)
        .find(|&l| ((l as u128 * l as u128 + 1 + n as u128 - l as u128) % n as u128) == 0)
        .ok_or(Error::NoLambda(n))
}

/// `Γ_{m,n,λ}` with the smallest admissible `λ`.
pub fn abelian_family(m: u64, n: u64) -> Result<(BiCayleyGraph, u64)> {
    if m == 0 || n == 0 {
        return Err(Error::Parameter("m and n must be positive".into()));
    }
    let lambda = find_lambda(n)?;
    Ok((abelian_family_with(m, n, lambda)?, lambda))
}

/// `Γ_{m,n,λ}` for a given `λ`, which must satisfy the defining congruence.
pub fn abelian_family_with(m: u64, n: u64, lambda: u64) -> Result<BiCayleyGraph> {
    if m == 0 || n == 0 {
        return Err(Error::Parameter("m and n must be positive".into()));
    }
    if n.checked_mul(m).and_then(|v| v.checked_mul(m)).is_none_or(|v| v < 3) {
        return Err(Error::Parameter("need n m^2 >= 3".into()));
    }
    let valid = if n == 1 {
        lambda == 0
    } else {
        lambda < n
            && gcd(lambda, n) == 1
            && (lambda as u128 * lambda as u128 + 1 + n as u128 - lambda as u128) % n as u128 == 0
    };
    if !valid {
        return Err(Error::Parameter(format!("λ = {lambda} is not a root of x^2 - x + 1 in Z_{n}*")));
    }
    let h = MetacyclicGroup::abelian(n * m, m)?;
    let s = [h.identity(), h.a(), h.element(1, lambda as i64)];
    BiCayleyGraph::build(&h, &[], &[], &s)
}

/// One generator-image pair from a claim, with the expected and observed
/// outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub name: String,
    /// Images of `a` and `b`, as `b^j*a^i`.
    pub image_a: String,
    pub image_b: String,
    pub expected_automorphism: bool,
    pub automorphism: bool,
    pub violated: Option<Relation>,
    /// The element a failed relation forces to be trivial.
    pub forced: Option<String>,
    pub expected_forced: Option<String>,
    pub passed: bool,
}

fn claim_check(
    h: &MetacyclicGroup,
    name: &str,
    x: Element,
    y: Element,
    expected_forced: Option<Element>,
) -> Result<ClaimCheck> {
    let check = h.check_automorphism_pair(x, y)?;
    let expected_automorphism = expected_forced.is_none();
    let passed = match expected_forced {
        None => check.holds(),
        Some(f) => check.violated == Some(Relation::Twist) && check.forced == Some(f),
    };
    Ok(ClaimCheck {
        name: name.into(),
        image_a: x.to_string(),
        image_b: y.to_string(),
        expected_automorphism,
        automorphism: check.holds(),
        violated: check.violated,
        forced: check.forced.map(|e| e.to_string()),
        expected_forced: expected_forced.map(|e| e.to_string()),
        passed,
    })
}

/// How a symmetry classification was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    /// Computed from the full automorphism group.
    FullAutomorphismGroup,
    /// Only the algebraic checks were run.
    AlgebraicCertificate,
}

/// A named boolean check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
}

fn named(name: &str, passed: bool) -> NamedCheck {
    NamedCheck { name: name.into(), passed }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma51Report {
    pub t: u32,
    pub group: Presentation,
    pub vertices: usize,
    pub claims: Vec<ClaimCheck>,
    pub checks: Vec<NamedCheck>,
    pub classification: Option<Classification>,
    pub evidence: Evidence,
    pub passed: bool,
}

/// Whether `p` fixes `v` and permutes its neighbours in a single 3-cycle.
fn three_cycles_neighbours(graph: &BiCayleyGraph, p: &Permutation, v: u32) -> bool {
    let nbrs = graph.graph().neighbors(v);
    if p.apply(v) != v || nbrs.len() != 3 {
        return false;
    }
    let x = nbrs[0];
    let (y, z) = (p.apply(x), p.apply(p.apply(x)));
    y != x && z != x && z != y && p.apply(z) == x && nbrs.contains(&y) && nbrs.contains(&z)
}

/// Semisymmetry of `Γ_t`: the automorphism of Claim 1, the failure of the
/// two candidate maps with `S^f = S^-1` (Claims 2 and 3), the `σ` map
/// fixing `1_0`, and for small `t` the full classification.
pub fn verify_lemma_5_1(t: u32) -> Result<Lemma51Report> {
    check_t(t)?;
    let h = gamma_group(t)?;
    let three_t = 3i64.pow(t);
    let (a, b) = (h.a(), h.b());
    let a_inv = h.inv(a);
    let b_inv = h.inv(b);

    let x1 = h.mul(h.pow(a, -2), b);
    let y1 = h.mul(h.pow(a, three_t - 3), b);
    let x2 = a_inv;
    let y2 = h.mul(h.pow(a, three_t), b_inv);
    let x3 = h.mul(b_inv, a);
    let y3 = b_inv;
    let claims = vec![
        claim_check(&h, "claim-1", x1, y1, None)?,
        claim_check(&h, "claim-2", x2, y2, Some(h.pow(a, 2 * three_t)))?,
        claim_check(&h, "claim-3", x3, y3, Some(h.pow(a, -2 * three_t)))?,
    ];

    // The only maps with S^f = S^-1 send {a, a^-1 b} onto {a^-1, b^-1 a}.
    let spoke = h.mul(a_inv, b);
    let target = [a_inv, h.mul(b_inv, a)];
    let derived: Vec<(Element, Element)> = [(target[0], target[1]), (target[1], target[0])]
        .iter()
        .map(|&(fa, fs)| (fa, h.mul(fa, fs)))
        .collect();
    let mut checks = vec![named(
        "candidates-from-inverse-spokes",
        derived == vec![(x2, y2), (x3, y3)] && h.mul(a, spoke) == b,
    )];

    let graph = gamma_t(t)?;
    let alpha = h.automorphism(x1, y1)?;
    let sigma = graph.sigma_map(&alpha, a)?;
    let identity = graph.vertex(h.identity(), 0);
    checks.push(named(
        "sigma-fixes-identity-and-rotates-neighbours",
        sigma.permutation().is_some_and(|p| three_cycles_neighbours(&graph, p, identity)),
    ));
    checks.push(named("alpha-has-order-3", h.map_order(&alpha)? == 3));

    let (classification, evidence) = if t <= LEMMA_5_1_FULL_T {
        let report = symmetry::classify(graph.graph())?;
        checks.push(named("classified-semisymmetric", report.classification == Classification::Semisymmetric));
        (Some(report.classification), Evidence::FullAutomorphismGroup)
    } else {
        (None, Evidence::AlgebraicCertificate)
    };
    let passed = claims.iter().all(|c| c.passed) && checks.iter().all(|c| c.passed);
    Ok(Lemma51Report {
        t,
        group: h.presentation(),
        vertices: graph.vertex_count(),
        claims,
        checks,
        classification,
        evidence,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma52Report {
    pub t: u32,
    pub group: Presentation,
    pub vertices: usize,
    pub claims: Vec<ClaimCheck>,
    pub checks: Vec<NamedCheck>,
    /// Arc orbit sizes of `<R(H), σ, δ>`, largest first.
    pub arc_orbit_sizes: Vec<usize>,
    pub classification: Option<Classification>,
    pub evidence: Evidence,
    pub passed: bool,
}

/// Symmetry of `Σ_t`: the two automorphisms of the claims, `σ_{α,b}` fixing
/// `1_0`, `δ_{β,1,1}` swapping `1_0` and `1_1`, and a single arc orbit of the
/// group they generate with `R(H)`.
pub fn verify_lemma_5_2(t: u32) -> Result<Lemma52Report> {
    check_t(t)?;
    if t > LEMMA_5_2_MAX_T {
        return Err(Error::Budget(format!("t = {t} exceeds {LEMMA_5_2_MAX_T} for this verifier")));
    }
    let h = sigma_group(t)?;
    let three_t = 3i64.pow(t);
    let (a, b) = (h.a(), h.b());
    let lead = h.pow(a, 2 * three_t + 1);
    let x1 = h.mul(lead, h.pow(b, -3));
    let y1 = h.mul(lead, h.pow(b, -2));
    let x2 = h.inv(a);
    let y2 = h.mul(h.inv(a), b);
    let claims = vec![
        claim_check(&h, "claim-1", x1, y1, None)?,
        claim_check(&h, "claim-2", x2, y2, None)?,
    ];

    let graph = sigma_t(t)?;
    let mut checks = Vec::new();
    let mut arc_sizes = Vec::new();
    if claims.iter().all(|c| c.automorphism) {
        let alpha = h.automorphism(x1, y1)?;
        let beta = h.automorphism(x2, y2)?;
        let one_0 = graph.vertex(h.identity(), 0);
        let one_1 = graph.vertex(h.identity(), 1);
        let sigma = graph.sigma_map(&alpha, b)?;
        let delta = graph.delta_map(&beta, h.identity(), h.identity())?;
        checks.push(named(
            "sigma-fixes-identity-and-rotates-neighbours",
            sigma.permutation().is_some_and(|p| three_cycles_neighbours(&graph, p, one_0)),
        ));
        checks.push(named(
            "delta-swaps-identity-vertices",
            delta.permutation().is_some_and(|p| p.apply(one_0) == one_1 && p.apply(one_1) == one_0),
        ));
        if let (Candidate::Valid(s), Candidate::Valid(d)) = (&sigma, &delta) {
            let mut gens = graph.right_group()?.generators().to_vec();
            gens.push(s.clone());
            gens.push(d.clone());
            arc_sizes = arc_orbit_sizes(graph.graph(), &gens)?;
        }
        let arcs = 2 * graph.graph().edge_count();
        checks.push(named("single-arc-orbit", arc_sizes == vec![arcs]));
    }
    let (classification, evidence) = if t == 1 {
        let report = symmetry::classify(graph.graph())?;
        checks.push(named("classified-arc-transitive", report.classification == Classification::ArcTransitive));
        (Some(report.classification), Evidence::FullAutomorphismGroup)
    } else {
        (None, Evidence::AlgebraicCertificate)
    };
    let passed = !checks.is_empty() && claims.iter().all(|c| c.passed) && checks.iter().all(|c| c.passed);
    Ok(Lemma52Report {
        t,
        group: h.presentation(),
        vertices: graph.vertex_count(),
        claims,
        checks,
        arc_orbit_sizes: arc_sizes,
        classification,
        evidence,
        passed,
    })
}

/// One isomorphism class of cubic bi-Cayley graphs found by the census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClass {
    /// The first pair `(x, y)` in enumeration order giving this class;
    /// the spoke set is `{1, x, y}`.
    pub representative: (String, String),
    pub representative_elements: (Element, Element),
    /// How many enumerated pairs fall into this class.
    pub pairs: usize,
    /// SHA-256 of the canonical graph6 form, in hex.
    pub digest: String,
    pub canonical_graph6: String,
    pub report: SymmetryReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub group: Presentation,
    pub order: u64,
    pub connected_only: bool,
    pub pairs_examined: usize,
    /// All isomorphism classes, ordered by digest.
    pub classes: Vec<CensusClass>,
    /// The edge-transitive classes, ordered by digest.
    pub edge_transitive_classes: Vec<CensusClass>,
}

/// Lower-case hex SHA-256 of `bytes`.
pub fn digest_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Enumerates `S = {1, x, y}` over unordered pairs of distinct non-identity
/// elements (by rank, `x < y`), optionally only those generating the group,
/// and classifies the resulting graphs up to isomorphism.
pub fn census(group: &MetacyclicGroup, connected_only: bool) -> Result<CensusReport> {
    if group.order() > CENSUS_ORDER_LIMIT {
        return Err(Error::Budget(format!(
            "census is limited to groups of order at most {CENSUS_ORDER_LIMIT}"
        )));
    }
    if !group.is_inner_abelian()? {
        return Err(Error::Precondition("census requires an inner-abelian group".into()));
    }
    let elements: Vec<Element> = group.elements()?.filter(|g| !g.is_identity()).collect();
    let mut by_form: BTreeMap<Vec<u8>, CensusClass> = BTreeMap::new();
    let mut pairs_examined = 0usize;
    for (k, &x) in elements.iter().enumerate() {
        for &y in &elements[k + 1..] {
            if connected_only && !group.generates(&[x, y])? {
                continue;
            }
            pairs_examined += 1;
            let graph = BiCayleyGraph::build(group, &[], &[], &[group.identity(), x, y])?;
            let analysis = symmetry::analyze(graph.graph())?;
            by_form
                .entry(analysis.canonical_form.clone())
                .and_modify(|c| c.pairs += 1)
                .or_insert_with(|| CensusClass {
                    representative: (x.to_string(), y.to_string()),
                    representative_elements: (x, y),
                    pairs: 1,
                    digest: digest_hex(&analysis.canonical_form),
                    canonical_graph6: String::from_utf8(analysis.canonical_form).expect("graph6 is ASCII"),
                    report: analysis.report,
                });
        }
    }
    let mut classes: Vec<CensusClass> = by_form.into_values().collect();
    classes.sort_by(|p, q| p.digest.cmp(&q.digest));
    let edge_transitive_classes = classes.iter().filter(|c| c.report.is_edge_transitive()).cloned().collect();
    Ok(CensusReport {
        group: group.presentation(),
        order: group.order(),
        connected_only,
        pairs_examined,
        classes,
        edge_transitive_classes,
    })
}

/// Randomized cross-checks of the group arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticReport {
    pub group: Presentation,
    pub trials: u64,
    pub seed: u64,
    pub checks: Vec<ArithmeticCheck>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticCheck {
    pub name: String,
    pub failures: u64,
    /// The first failing input, if any.
    pub example: Option<String>,
    pub passed: bool,
}

/// Samples `trials` random inputs (seeded ChaCha8) and checks
/// associativity, inverses, the commutation rule `a^i b^j = b^j a^(i t^j)`,
/// the closed power formula against repeated multiplication, and (for
/// groups within the enumeration budget) agreement with the regular
/// representation.
pub fn verify_arithmetic(group: &MetacyclicGroup, trials: u64, seed: u64) -> Result<ArithmeticReport> {
    const POWER_CAP: u64 = 4096;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, n) = (group.order_a(), group.order_b());
    let random = |rng: &mut ChaCha8Rng| Element::new(rng.random_range(0..n), rng.random_range(0..m));
    let regular = if group.order() <= 3u64.pow(8) { Some(group.regular_representation()?) } else { None };
    let mut tally: Vec<(&str, u64, Option<String>)> = vec![
        ("associativity", 0, None),
        ("inverse", 0, None),
        ("commutation-rule", 0, None),
        ("power-formula", 0, None),
        ("regular-representation", 0, None),
    ];
    let record = |tally: &mut Vec<(&str, u64, Option<String>)>, k: usize, ok: bool, example: String| {
        if !ok {
            tally[k].1 += 1;
            tally[k].2.get_or_insert(example);
        }
    };
    for _ in 0..trials {
        let (g, h, k) = (random(&mut rng), random(&mut rng), random(&mut rng));
        let lhs = group.mul(group.mul(g, h), k);
        let rhs = group.mul(g, group.mul(h, k));
        record(&mut tally, 0, lhs == rhs, format!("({g})({h})({k})"));

        let gi = group.inv(g);
        let ok = group.mul(g, gi).is_identity() && group.mul(gi, g).is_identity();
        record(&mut tally, 1, ok, format!("{g}"));

        let i = rng.random_range(0..m);
        let j = rng.random_range(0..n);
        let ai = Element::new(0, i);
        let bj = Element::new(j, 0);
        let twisted = Element::new(0, crate::arith::mul_mod(i, group.twist_pow(j), m));
        record(&mut tally, 2, group.mul(ai, bj) == group.mul(bj, twisted), format!("a^{i}, b^{j}"));

        let e = rng.random_range(0..=group.order().min(POWER_CAP));
        let mut iterated = group.identity();
        for _ in 0..e {
            iterated = group.mul(iterated, g);
        }
        record(&mut tally, 3, group.pow(g, e as i64) == iterated, format!("({g})^{e}"));

        if let Some(reg) = &regular {
            // Right multiplication by g, h as permutations of ranks.
            let word = |x: Element| -> Permutation {
                let images = (0..group.order())
                    .map(|r| group.rank(group.mul(group.unrank(r), x)) as u32)
                    .collect();
                Permutation::from_images(images).expect("right multiplication is a bijection")
            };
            let gh = word(g).compose(&word(h)).expect("same degree");
            let ok = gh == word(group.mul(g, h)) && reg.contains(&gh);
            record(&mut tally, 4, ok, format!("({g})({h})"));
        }
    }
    let checks: Vec<ArithmeticCheck> = tally
        .into_iter()
        .filter(|(name, _, _)| regular.is_some() || *name != "regular-representation")
        .map(|(name, failures, example)| ArithmeticCheck {
            name: name.into(),
            failures,
            example,
            passed: failures == 0,
        })
        .collect();
    Ok(ArithmeticReport {
        group: group.presentation(),
        trials,
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Reports whether a validated map is an automorphism of `graph`'s group
/// that yields a `δ` with `x = y = 1`.
pub fn delta_identity(graph: &BiCayleyGraph, f: &GroupMap) -> Result<Candidate> {
    let h = graph.group();
    graph.delta_map(f, h.identity(), h.identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let g1 = gamma_t(1).unwrap();
        assert_eq!(g1.vertex_count(), 54);
        assert!(g1.graph().is_cubic());
        let s1 = sigma_t(1).unwrap();
        assert_eq!(s1.vertex_count(), 162);
        assert!(s1.is_connected().unwrap());
        assert!(matches!(gamma_t(0), Err(Error::Parameter(_))));
        assert!(matches!(gamma_t(4), Err(Error::Budget(_))));
    }

    #[test]
    fn lambda_search() {
        assert_eq!(find_lambda(1).unwrap(), 0);
        assert_eq!(find_lambda(3).unwrap(), 2);
        assert_eq!(find_lambda(7).unwrap(), 3);
        assert_eq!(find_lambda(9), Err(Error::NoLambda(9)));
        assert!(matches!(abelian_family(3, 9), Err(Error::NoLambda(9))));
        let (g, lambda) = abelian_family(3, 1).unwrap();
        assert_eq!(lambda, 0);
        assert_eq!(g.vertex_count(), 18);
        assert!(abelian_family_with(1, 7, 2).is_err());
        assert!(abelian_family(1, 1).is_err());
    }

    #[test]
    fn lemma_5_1_small() {
        let report = verify_lemma_5_1(1).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.classification, Some(Classification::Semisymmetric));
        assert_eq!(report.claims[1].forced.as_deref(), Some("b^0*a^6"));
    }

    #[test]
    fn lemma_5_2_claim_images() {
        let report = verify_lemma_5_2(1).unwrap();
        assert_eq!(report.claims[0].image_a, "b^6*a^7");
        assert_eq!(report.claims[0].image_b, "b^7*a^1");
        assert!(report.passed, "{report:?}");
        assert_eq!(report.arc_orbit_sizes, vec![486]);
    }

    #[test]
    fn arithmetic_report() {
        let h = MetacyclicGroup::new(3, 2, 1, 1).unwrap();
        let report = verify_arithmetic(&h, 200, 0).unwrap();
        assert!(report.passed);
        assert_eq!(report.checks.len(), 5);
        assert_eq!(report, verify_arithmetic(&h, 200, 0).unwrap());
    }

    #[test]
    fn digest_format() {
        assert_eq!(
            digest_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
