//! Linking numbers, property C, and mechanical checks of the inequalities
//! relating warping degrees, crossing counts and linking numbers.
//!
//! Every check produces a [`VerificationReport`] whose `holds` flag can be
//! recomputed from the stored sides, relation and predicted equality
//! condition (see [`VerificationReport::rederive`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::diagram::{LinkDiagram, Strand};
use crate::error::{Error, Result};
use crate::normalize::ou_word;
use crate::warping::{
    component_warping_degree, d_min_with, d_unoriented_with, ld_min_with, linking_warping_degree_for_order, sr,
    under_table, warping_points, BaseSequence, Limits, WarpKind,
};

/// An exact multiple of one half, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger(i64);

impl HalfInteger {
    pub fn from_twice(twice: i64) -> Self {
        HalfInteger(twice)
    }

    pub fn from_integer(value: i64) -> Self {
        HalfInteger(2 * value)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInteger(self.0.abs())
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl std::ops::Add for HalfInteger {
    type Output = HalfInteger;

    fn add(self, rhs: Self) -> Self {
        HalfInteger(self.0 + rhs.0)
    }
}

impl std::iter::Sum for HalfInteger {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(HalfInteger::default(), |a, b| a + b)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInteger {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.to_f64())
    }
}

/// `Link(D^i, D^j)`: half the signed count of the crossings between `i` and `j`.
pub fn linking_number(diagram: &LinkDiagram, i: usize, j: usize) -> Result<HalfInteger> {
    diagram.check_component(i)?;
    diagram.check_component(j)?;
    if i == j {
        return Err(Error::SameComponent);
    }
    Ok(HalfInteger(diagram.pair_crossings(i, j).map(|c| c.sign.value()).sum()))
}

/// All pairwise linking numbers `(i, j, Link)` with `i < j`.
pub fn linking_numbers(diagram: &LinkDiagram) -> Vec<(usize, usize, HalfInteger)> {
    let r = diagram.component_count();
    (0..r)
        .tuple_combinations()
        .map(|(i, j)| (i, j, linking_number(diagram, i, j).expect("indices in range")))
        .collect()
}

pub fn total_linking_number(diagram: &LinkDiagram) -> HalfInteger {
    linking_numbers(diagram).into_iter().map(|(_, _, l)| l).sum()
}

pub fn absolute_linking_sum(diagram: &LinkDiagram) -> HalfInteger {
    linking_numbers(diagram).into_iter().map(|(_, _, l)| l.abs()).sum()
}

/// Signed count of the non-self warping crossing points of `D_a`.
pub fn total_linking_via_warping(diagram: &LinkDiagram, base: &BaseSequence) -> Result<i64> {
    Ok(warping_points(diagram, base)?
        .into_iter()
        .filter(|p| matches!(p.kind, WarpKind::Between { .. }))
        .map(|p| diagram.crossing(p.crossing).expect("point is a crossing").sign.value())
        .sum())
}

/// Whether the self-passages of a component alternate over/under around the
/// whole (cyclic) component. Vacuously true without self-crossings.
pub fn is_component_alternating(diagram: &LinkDiagram, component: usize) -> Result<bool> {
    let knot = diagram.subdiagram(&[component])?;
    let word = ou_word(&knot, 0)?;
    let letters = word.letters();
    Ok(letters.iter().zip(letters.iter().cycle().skip(1)).all(|(a, b)| a != b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairBalance {
    pub first: usize,
    pub second: usize,
    /// Crossings of the pair at which `first` is under.
    pub first_under: usize,
    /// Crossings of the pair at which `second` is under.
    pub second_under: usize,
}

impl PairBalance {
    pub fn is_balanced(&self) -> bool {
        self.first_under == self.second_under
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyC {
    pub holds: bool,
    pub alternating: Vec<bool>,
    pub pairs: Vec<PairBalance>,
}

pub fn pair_balances(diagram: &LinkDiagram) -> Vec<PairBalance> {
    let table = under_table(diagram);
    (0..diagram.component_count())
        .tuple_combinations()
        .map(|(i, j)| PairBalance {
            first: i,
            second: j,
            first_under: table[i][j],
            second_under: table[j][i],
        })
        .collect()
}

pub fn all_pairs_balanced(diagram: &LinkDiagram) -> bool {
    pair_balances(diagram).iter().all(PairBalance::is_balanced)
}

/// Every component alternating on its self-passages, and every pair balanced.
pub fn property_c(diagram: &LinkDiagram) -> PropertyC {
    let alternating: Vec<bool> = (0..diagram.component_count())
        .map(|i| is_component_alternating(diagram, i).expect("index in range"))
        .collect();
    let pairs = pair_balances(diagram);
    let holds = alternating.iter().all(|&a| a) && pairs.iter().all(PairBalance::is_balanced);
    PropertyC {
        holds,
        alternating,
        pairs,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// Knot diagrams with a crossing: `d(D) + d(-D) + 1 <= c(D)`, equality iff alternating.
    KnotCrossingBound,
    /// `d(D) + d(-D) + sr(D) <= c(D)`, equality iff property C.
    LinkCrossingBound,
    /// Self-crossing diagrams: `d(D) + d(-D) + r <= c(D)`, equality iff property C.
    SelfCrossingBound,
    /// `ld(D) <= lc(D) / 2`, equality iff every pair is balanced.
    LinkingWarpingHalfBound,
    /// `ld(D_a) + ld(D_ã) = lc(D)` for every order and its reverse.
    ReversalIdentity,
    /// `d(D) + d(-D)` is the same for every orientation.
    OrientationIndependence,
    /// `Σ|Link| <= ld(D)`, equality iff some order has constant-sign under-crossings per pair.
    LinkingLowerBound,
    /// `Σ|Link| ≡ ld(D) (mod 2)`.
    LinkingParity,
    /// The signed count of non-self warping points equals the total linking number for every order.
    TotalLinkingFromWarping,
    /// `2 Σ|Link| + sr(D) <= d(D) + d(-D) + sr(D)`, the computable side of the unlinking bound.
    UnlinkingSurrogate,
    /// `d(|D|) <= c(D) / 2`, equality iff no self-crossings and every pair balanced.
    UnorientedHalfCrossingBound,
    /// Knot diagrams with a crossing: `d(|D|) <= (c(D) - 1) / 2`.
    KnotUnorientedBound,
    /// `Split <= split <= lsplit <= ld <= lc/2 <= c/2` and `split <= d(|D|)` on certified intervals.
    SplittingChain,
}

impl Claim {
    pub const ALL: [Claim; 13] = [
        Claim::KnotCrossingBound,
        Claim::LinkCrossingBound,
        Claim::SelfCrossingBound,
        Claim::LinkingWarpingHalfBound,
        Claim::ReversalIdentity,
        Claim::OrientationIndependence,
        Claim::LinkingLowerBound,
        Claim::LinkingParity,
        Claim::TotalLinkingFromWarping,
        Claim::UnlinkingSurrogate,
        Claim::UnorientedHalfCrossingBound,
        Claim::KnotUnorientedBound,
        Claim::SplittingChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::KnotCrossingBound => "knot-crossing-bound",
            Claim::LinkCrossingBound => "link-crossing-bound",
            Claim::SelfCrossingBound => "self-crossing-bound",
            Claim::LinkingWarpingHalfBound => "linking-warping-half-bound",
            Claim::ReversalIdentity => "reversal-identity",
            Claim::OrientationIndependence => "orientation-independence",
            Claim::LinkingLowerBound => "linking-lower-bound",
            Claim::LinkingParity => "linking-parity",
            Claim::TotalLinkingFromWarping => "total-linking-from-warping",
            Claim::UnlinkingSurrogate => "unlinking-surrogate",
            Claim::UnorientedHalfCrossingBound => "unoriented-half-crossing-bound",
            Claim::KnotUnorientedBound => "knot-unoriented-bound",
            Claim::SplittingChain => "splitting-chain",
        }
    }

    /// Claims about linking numbers only hold for codes with consistent linking signs.
    pub fn needs_linking_consistency(self) -> bool {
        matches!(
            self,
            Claim::LinkingLowerBound
                | Claim::LinkingParity
                | Claim::TotalLinkingFromWarping
                | Claim::UnlinkingSurrogate
                | Claim::SplittingChain
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::NotApplicable(format!("unknown claim `{s}`")))
    }
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    AtMost,
    Equal,
    CongruentMod2,
}

impl Relation {
    pub fn holds(self, lhs: f64, rhs: f64) -> bool {
        match self {
            Relation::AtMost => lhs <= rhs,
            Relation::Equal => lhs == rhs,
            Relation::CongruentMod2 => {
                let diff = lhs - rhs;
                diff.fract() == 0.0 && diff.rem_euclid(2.0) == 0.0
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub holds: bool,
    /// Whether the two sides are equal, for claims with an equality characterization.
    pub equality: Option<bool>,
    /// The structural condition that should coincide with equality.
    pub condition: Option<bool>,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    pub witnesses: BTreeMap<String, Value>,
}

impl VerificationReport {
    fn new(claim: Claim, lhs: f64, relation: Relation, rhs: f64, condition: Option<bool>) -> Self {
        let equality = condition.map(|_| lhs == rhs);
        let mut report = VerificationReport {
            claim,
            holds: false,
            equality,
            condition,
            lhs,
            rhs,
            relation,
            witnesses: BTreeMap::new(),
        };
        report.holds = report.rederive();
        report
    }

    fn witness(mut self, key: &str, value: Value) -> Self {
        self.witnesses.insert(key.to_string(), value);
        self
    }

    /// Recomputes `holds` from the sides, the relation and the equality condition.
    pub fn rederive(&self) -> bool {
        let equality_matches = match (self.equality, self.condition) {
            (Some(e), Some(c)) => e == (self.lhs == self.rhs) && e == c,
            _ => true,
        };
        self.relation.holds(self.lhs, self.rhs) && equality_matches
    }
}

/// The pieces most checks are built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub crossings: usize,
    pub linking_crossings: usize,
    pub sr: usize,
    pub d: usize,
    pub d_inverse: usize,
    pub ld: usize,
    pub ld_order: Vec<usize>,
}

pub fn summary(diagram: &LinkDiagram, limits: &Limits) -> Result<Summary> {
    let forward = d_min_with(diagram, limits)?;
    let inverse = d_min_with(&diagram.reverse_all(), limits)?;
    Ok(Summary {
        crossings: diagram.crossing_count(),
        linking_crossings: diagram.linking_crossing_count(),
        sr: sr(diagram),
        d: forward.value,
        d_inverse: inverse.value,
        ld: forward.linking_warping_degree,
        ld_order: forward.witness.order().to_vec(),
    })
}

fn one_based(order: &[usize]) -> Value {
    json!(order.iter().map(|k| k + 1).collect::<Vec<_>>())
}

pub fn verify_knot_crossing_bound(knot: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    if knot.component_count() != 1 {
        return Err(Error::NotAKnot(knot.component_count()));
    }
    if knot.crossing_count() == 0 {
        return Err(Error::NoCrossings);
    }
    let s = summary(knot, limits)?;
    let alternating = is_component_alternating(knot, 0)?;
    Ok(VerificationReport::new(
        Claim::KnotCrossingBound,
        (s.d + s.d_inverse + 1) as f64,
        Relation::AtMost,
        s.crossings as f64,
        Some(alternating),
    )
    .witness("d", json!(s.d))
    .witness("d_inverse", json!(s.d_inverse))
    .witness("alternating", json!(alternating)))
}

pub fn verify_link_crossing_bound(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    let s = summary(diagram, limits)?;
    let c = property_c(diagram);
    Ok(VerificationReport::new(
        Claim::LinkCrossingBound,
        (s.d + s.d_inverse + s.sr) as f64,
        Relation::AtMost,
        s.crossings as f64,
        Some(c.holds),
    )
    .witness("d", json!(s.d))
    .witness("d_inverse", json!(s.d_inverse))
    .witness("sr", json!(s.sr))
    .witness("property_c", json!(c)))
}

pub fn verify_self_crossing_bound(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    let s = summary(diagram, limits)?;
    let r = diagram.component_count();
    if s.sr != r {
        return Err(Error::NotApplicable(format!(
            "only {} of {} components have self-crossings",
            s.sr, r
        )));
    }
    let c = property_c(diagram);
    Ok(VerificationReport::new(
        Claim::SelfCrossingBound,
        (s.d + s.d_inverse + r) as f64,
        Relation::AtMost,
        s.crossings as f64,
        Some(c.holds),
    )
    .witness("property_c", json!(c.holds)))
}

pub fn verify_linking_warping_half_bound(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    let ld = ld_min_with(diagram, limits)?;
    let lc = diagram.linking_crossing_count();
    let pairs = pair_balances(diagram);
    let unbalanced: Vec<_> = pairs
        .iter()
        .filter(|p| !p.is_balanced())
        .map(|p| json!([p.first + 1, p.second + 1]))
        .collect();
    Ok(VerificationReport::new(
        Claim::LinkingWarpingHalfBound,
        ld.value as f64,
        Relation::AtMost,
        lc as f64 / 2.0,
        Some(unbalanced.is_empty()),
    )
    .witness("order", one_based(&ld.order))
    .witness("unbalanced_pairs", Value::Array(unbalanced)))
}

pub fn verify_reversal_identity(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    limits.check(diagram)?;
    let r = diagram.component_count();
    let lc = diagram.linking_crossing_count();
    let mut violations = Vec::new();
    for order in (0..r).permutations(r) {
        let reversed: Vec<usize> = order.iter().rev().copied().collect();
        let sum =
            linking_warping_degree_for_order(diagram, &order)? + linking_warping_degree_for_order(diagram, &reversed)?;
        if sum != lc {
            violations.push(one_based(&order));
        }
    }
    Ok(VerificationReport::new(
        Claim::ReversalIdentity,
        violations.len() as f64,
        Relation::Equal,
        0.0,
        None,
    )
    .witness("violating_orders", Value::Array(violations)))
}

pub fn verify_orientation_independence(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    limits.check(diagram)?;
    let r = diagram.component_count();
    let mut values = BTreeMap::new();
    for mask in 0u32..(1 << r) {
        let flags: Vec<bool> = (0..r).map(|i| mask & (1 << i) != 0).collect();
        let oriented = diagram.with_orientation(&flags)?;
        let total = d_min_with(&oriented, limits)?.value + d_min_with(&oriented.reverse_all(), limits)?.value;
        values.insert(mask, total);
    }
    let max = *values.values().max().expect("at least one orientation");
    let min = *values.values().min().expect("at least one orientation");
    Ok(VerificationReport::new(
        Claim::OrientationIndependence,
        max as f64,
        Relation::Equal,
        min as f64,
        None,
    )
    .witness("orientations", json!(values.len())))
}

/// Per-pair sign constancy of the under-crossings of either side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairConstancy {
    pub first: usize,
    pub second: usize,
    /// Under-crossings of `first` against `second` all share one sign.
    pub first_under_constant: bool,
    /// Under-crossings of `second` against `first` all share one sign.
    pub second_under_constant: bool,
}

pub fn pair_constancy(diagram: &LinkDiagram) -> Vec<PairConstancy> {
    let constant = |i: usize, j: usize| {
        diagram
            .pair_crossings(i, j)
            .filter(|c| c.under.component == i)
            .map(|c| c.sign)
            .all_equal()
    };
    (0..diagram.component_count())
        .tuple_combinations()
        .map(|(i, j)| PairConstancy {
            first: i,
            second: j,
            first_under_constant: constant(i, j),
            second_under_constant: constant(j, i),
        })
        .collect()
}

/// An order (lexicographically smallest) in which, for every pair, the
/// under-crossings of the earlier component all have one sign.
pub fn constant_sign_order(diagram: &LinkDiagram, limits: &Limits) -> Result<Option<Vec<usize>>> {
    limits.check(diagram)?;
    let r = diagram.component_count();
    let mut constant = vec![vec![true; r]; r];
    for p in pair_constancy(diagram) {
        constant[p.first][p.second] = p.first_under_constant;
        constant[p.second][p.first] = p.second_under_constant;
    }
    Ok((0..r).permutations(r).find(|order| {
        order
            .iter()
            .enumerate()
            .all(|(x, &i)| order[x + 1..].iter().all(|&j| constant[i][j]))
    }))
}

pub fn verify_linking_lower_bound(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    let ld = ld_min_with(diagram, limits)?;
    let links = absolute_linking_sum(diagram);
    let global = constant_sign_order(diagram, limits)?;
    let pairs = pair_constancy(diagram);
    let per_pair = pairs.iter().all(|p| p.first_under_constant || p.second_under_constant);
    Ok(VerificationReport::new(
        Claim::LinkingLowerBound,
        links.to_f64(),
        Relation::AtMost,
        ld.value as f64,
        Some(global.is_some()),
    )
    .witness("ld_order", one_based(&ld.order))
    .witness(
        "constant_sign_order",
        global.as_deref().map(one_based).unwrap_or(Value::Null),
    )
    .witness("per_pair_constant", json!(per_pair))
    .witness("pairs", json!(pairs)))
}

pub fn verify_linking_parity(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    let ld = ld_min_with(diagram, limits)?;
    let links = absolute_linking_sum(diagram);
    Ok(VerificationReport::new(
        Claim::LinkingParity,
        links.to_f64(),
        Relation::CongruentMod2,
        ld.value as f64,
        None,
    ))
}

/// Checks the signed warping count against the total linking number for
/// every order. Non-self warping points do not depend on base positions.
pub fn verify_total_linking_from_warping(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    limits.check(diagram)?;
    let r = diagram.component_count();
    let total = total_linking_number(diagram);
    let mut worst = (0i64, None::<Vec<usize>>, total.twice());
    for order in (0..r).permutations(r) {
        let base = BaseSequence::new(order.clone(), vec![0; r]);
        let twice = 2 * total_linking_via_warping(diagram, &base)?;
        let gap = (twice - total.twice()).abs();
        if gap > worst.0 {
            worst = (gap, Some(order), twice);
        }
    }
    Ok(VerificationReport::new(
        Claim::TotalLinkingFromWarping,
        total.to_f64(),
        Relation::Equal,
        worst.2 as f64 / 2.0,
        None,
    )
    .witness(
        "violating_order",
        worst.1.as_deref().map(one_based).unwrap_or(Value::Null),
    ))
}

pub fn verify_unlinking_surrogate(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    let s = summary(diagram, limits)?;
    let lower = absolute_linking_sum(diagram);
    Ok(VerificationReport::new(
        Claim::UnlinkingSurrogate,
        2.0 * lower.to_f64() + s.sr as f64,
        Relation::AtMost,
        (s.d + s.d_inverse + s.sr) as f64,
        None,
    )
    .witness("unlinking_lower_bound", json!(lower))
    .witness("unlinking_upper_bound", json!(s.d.min(s.d_inverse))))
}

pub fn verify_unoriented_half_crossing_bound(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    let unoriented = d_unoriented_with(diagram, limits)?;
    let no_self = (0..diagram.component_count()).all(|i| diagram.self_crossing_count(i) == 0);
    Ok(VerificationReport::new(
        Claim::UnorientedHalfCrossingBound,
        unoriented.value as f64,
        Relation::AtMost,
        diagram.crossing_count() as f64 / 2.0,
        Some(no_self && all_pairs_balanced(diagram)),
    )
    .witness("reversed", json!(unoriented.reversed)))
}

pub fn verify_knot_unoriented_bound(knot: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    if knot.component_count() != 1 {
        return Err(Error::NotAKnot(knot.component_count()));
    }
    if knot.crossing_count() == 0 {
        return Err(Error::NoCrossings);
    }
    let unoriented = d_unoriented_with(knot, limits)?;
    Ok(VerificationReport::new(
        Claim::KnotUnorientedBound,
        unoriented.value as f64,
        Relation::AtMost,
        (knot.crossing_count() as f64 - 1.0) / 2.0,
        None,
    ))
}

pub fn verify_claim(diagram: &LinkDiagram, claim: Claim, limits: &Limits) -> Result<VerificationReport> {
    if claim.needs_linking_consistency() && !diagram.is_linking_consistent() {
        return Err(Error::NotApplicable("linking signs are not diagram-consistent".into()));
    }
    match claim {
        Claim::KnotCrossingBound => verify_knot_crossing_bound(diagram, limits),
        Claim::LinkCrossingBound => verify_link_crossing_bound(diagram, limits),
        Claim::SelfCrossingBound => verify_self_crossing_bound(diagram, limits),
        Claim::LinkingWarpingHalfBound => verify_linking_warping_half_bound(diagram, limits),
        Claim::ReversalIdentity => verify_reversal_identity(diagram, limits),
        Claim::OrientationIndependence => verify_orientation_independence(diagram, limits),
        Claim::LinkingLowerBound => verify_linking_lower_bound(diagram, limits),
        Claim::LinkingParity => verify_linking_parity(diagram, limits),
        Claim::TotalLinkingFromWarping => verify_total_linking_from_warping(diagram, limits),
        Claim::UnlinkingSurrogate => verify_unlinking_surrogate(diagram, limits),
        Claim::UnorientedHalfCrossingBound => verify_unoriented_half_crossing_bound(diagram, limits),
        Claim::KnotUnorientedBound => verify_knot_unoriented_bound(diagram, limits),
        Claim::SplittingChain => crate::split::chain_check(diagram, limits),
    }
}

/// Runs every applicable claim. Claims whose preconditions fail (wrong
/// component count, no crossings, inconsistent linking signs) are skipped.
pub fn verify_all(diagram: &LinkDiagram, claims: &[Claim], limits: &Limits) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for &claim in claims {
        match verify_claim(diagram, claim, limits) {
            Ok(report) => out.push(report),
            Err(Error::NotAKnot(_) | Error::NoCrossings | Error::NotApplicable(_) | Error::TooFewComponents) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusMetric {
    /// `d(D) + d(-D)`, over the diagrams of minimal crossing count in the set.
    DPlusDInverse,
    /// `d(D) + d(-D) + sr(D)`.
    FValue,
    Sr,
}

impl FromStr for CensusMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d-plus-dinverse" | "e" => Ok(CensusMetric::DPlusDInverse),
            "f" | "f-value" => Ok(CensusMetric::FValue),
            "sr" => Ok(CensusMetric::Sr),
            other => Err(Error::NotApplicable(format!("unknown census metric `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub value: usize,
    /// Index of the first diagram in the set attaining the value.
    pub index: usize,
}

/// Minimum of a metric over a caller-supplied set of diagrams of one link.
pub fn census_min(diagrams: &[LinkDiagram], metric: CensusMetric, limits: &Limits) -> Result<CensusResult> {
    if diagrams.is_empty() {
        return Err(Error::EmptyCensus);
    }
    let min_c = diagrams
        .iter()
        .map(LinkDiagram::crossing_count)
        .min()
        .expect("nonempty");
    let mut best: Option<CensusResult> = None;
    for (index, d) in diagrams.iter().enumerate() {
        let value = match metric {
            CensusMetric::DPlusDInverse => {
                if d.crossing_count() != min_c {
                    continue;
                }
                let s = summary(d, limits)?;
                s.d + s.d_inverse
            }
            CensusMetric::FValue => {
                let s = summary(d, limits)?;
                s.d + s.d_inverse + s.sr
            }
            CensusMetric::Sr => sr(d),
        };
        if best.as_ref().is_none_or(|b| value < b.value) {
            best = Some(CensusResult { value, index });
        }
    }
    Ok(best.expect("some diagram has minimal crossing count"))
}

/// Minimal self warping degree of each component, as used on the diagonal
/// of the linking matrix.
pub fn component_degrees(diagram: &LinkDiagram) -> Result<Vec<usize>> {
    (0..diagram.component_count())
        .map(|i| component_warping_degree(diagram, i).map(|(v, _)| v))
        .collect()
}

/// Over/under counts of `i` against `j`, useful when building fixtures.
pub fn strand_counts(diagram: &LinkDiagram, i: usize, j: usize) -> (usize, usize) {
    let over = diagram
        .pair_crossings(i, j)
        .filter(|c| c.strand_of(i) == Some(Strand::Over))
        .count();
    let under = diagram
        .pair_crossings(i, j)
        .filter(|c| c.strand_of(i) == Some(Strand::Under))
        .count();
    (over, under)
}
