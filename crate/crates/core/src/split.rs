//! Certified intervals for the number of crossing changes needed to reach a
//! diagram of a (completely) splittable link.
//!
//! Upper bounds come with an explicit change set whose result passes a
//! structural test: stacked (completely splittable) or one side entirely
//! over the other across a bipartition (splittable). Lower bounds come from
//! linking numbers, since one crossing change moves one pairwise linking
//! number by exactly one. Exact values are reported only when the two meet.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;
use serde_json::json;

use crate::diagram::{CrossingId, LinkDiagram};
use crate::error::{Error, Result};
use crate::verify::{linking_number, Claim, HalfInteger, Relation, VerificationReport};
use crate::warping::{
    d_unoriented_with, is_stacked_diagram, ld_min_with, warping_points, BaseSequence, Limits, WarpKind,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SplitTarget {
    /// The changed diagram is stacked.
    Stacked,
    /// Across the bipartition, `side` is entirely over or entirely under the rest.
    Bipartition { side: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundInterval {
    pub lower: u64,
    pub upper: u64,
    pub lower_certificate: String,
    /// Crossings to change; the result passes the `target` test.
    pub upper_certificate: BTreeSet<CrossingId>,
    pub target: SplitTarget,
}

impl BoundInterval {
    pub fn exact(&self) -> Option<u64> {
        (self.lower == self.upper).then_some(self.lower)
    }

    /// Applies the change set and runs the structural test.
    pub fn certificate_is_valid(&self, diagram: &LinkDiagram) -> Result<bool> {
        if self.upper_certificate.len() as u64 != self.upper {
            return Ok(false);
        }
        let changed = diagram.change_crossings(&self.upper_certificate);
        match &self.target {
            SplitTarget::Stacked => is_stacked_diagram(&changed),
            SplitTarget::Bipartition { side } => Ok(is_bipartition_split(&changed, side)),
        }
    }
}

fn require_link(diagram: &LinkDiagram) -> Result<()> {
    if diagram.component_count() < 2 {
        Err(Error::TooFewComponents)
    } else {
        Ok(())
    }
}

fn ceil_half(value: HalfInteger) -> u64 {
    ((value.twice() + 1) / 2) as u64
}

/// Whether every crossing between `side` and the other components has the
/// `side` strand on the same level.
pub fn is_bipartition_split(diagram: &LinkDiagram, side: &[usize]) -> bool {
    let inside: BTreeSet<usize> = side.iter().copied().collect();
    diagram
        .crossings()
        .filter(|c| inside.contains(&c.over.component) != inside.contains(&c.under.component))
        .map(|c| inside.contains(&c.over.component))
        .all_equal()
}

/// Bounds for `lsplit(D)` (and `split(D)`, which uses the same certificates).
pub fn complete_splitting_bounds(diagram: &LinkDiagram, limits: &Limits) -> Result<BoundInterval> {
    require_link(diagram)?;
    let ld = ld_min_with(diagram, limits)?;
    let base = BaseSequence::new(ld.order.clone(), vec![0; diagram.component_count()]);
    let upper_certificate: BTreeSet<CrossingId> = warping_points(diagram, &base)?
        .into_iter()
        .filter(|p| matches!(p.kind, WarpKind::Between { .. }))
        .map(|p| p.crossing)
        .collect();
    let (lower, lower_certificate) = if diagram.is_linking_consistent() {
        let sum: HalfInteger = (0..diagram.component_count())
            .tuple_combinations()
            .map(|(i, j)| linking_number(diagram, i, j).expect("indices in range").abs())
            .sum();
        (ceil_half(sum), format!("sum of |Link| over pairs = {sum}"))
    } else {
        (0, "linking signs are not diagram-consistent; trivial bound".to_string())
    };
    Ok(BoundInterval {
        lower,
        upper: ld.value as u64,
        lower_certificate,
        upper_certificate,
        target: SplitTarget::Stacked,
    })
}

/// Bounds for `Split(D)` / `lSplit(D)`: the cheapest bipartition to pull apart.
pub fn splitting_bounds(diagram: &LinkDiagram, limits: &Limits) -> Result<BoundInterval> {
    require_link(diagram)?;
    limits.check(diagram)?;
    let r = diagram.component_count();
    let consistent = diagram.is_linking_consistent();
    let mut upper: Option<(usize, Vec<usize>, BTreeSet<CrossingId>)> = None;
    let mut lower: Option<(HalfInteger, Vec<usize>)> = None;
    // bipartitions with component 0 on the chosen side
    for mask in (1u32..(1 << r)).filter(|m| m & 1 == 1 && m.count_ones() < r as u32) {
        let side: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
        let inside = |k: usize| mask & (1 << k) != 0;
        let across: Vec<_> = diagram
            .crossings()
            .filter(|c| inside(c.over.component) != inside(c.under.component))
            .collect();
        let side_under: BTreeSet<CrossingId> = across
            .iter()
            .filter(|c| inside(c.under.component))
            .map(|c| c.id)
            .collect();
        let side_over: BTreeSet<CrossingId> = across
            .iter()
            .filter(|c| inside(c.over.component))
            .map(|c| c.id)
            .collect();
        let changes = if side_over.len() < side_under.len() {
            side_over
        } else {
            side_under
        };
        if upper.as_ref().is_none_or(|(n, _, _)| changes.len() < *n) {
            upper = Some((changes.len(), side.clone(), changes));
        }
        if consistent {
            let links: HalfInteger = side
                .iter()
                .cartesian_product((0..r).filter(|&j| !inside(j)))
                .map(|(&i, j)| linking_number(diagram, i, j).expect("indices in range").abs())
                .sum();
            if lower.as_ref().is_none_or(|(v, _)| links < *v) {
                lower = Some((links, side));
            }
        }
    }
    let (count, side, upper_certificate) = upper.expect("at least one bipartition when r >= 2");
    let (lower, lower_certificate) = match lower {
        Some((value, side)) => (
            ceil_half(value),
            format!(
                "min over bipartitions of cross |Link| = {value} at side {:?}",
                side.iter().map(|k| k + 1).collect::<Vec<_>>()
            ),
        ),
        None => (0, "linking signs are not diagram-consistent; trivial bound".to_string()),
    };
    Ok(BoundInterval {
        lower,
        upper: count as u64,
        lower_certificate,
        upper_certificate,
        target: SplitTarget::Bipartition { side },
    })
}

/// Smallest set of non-self crossing changes making the diagram stacked,
/// found by search over subsets of increasing size. `None` when the diagram
/// has more than `max_linking_crossings` non-self crossings.
pub fn exhaustive_stacking_changes(
    diagram: &LinkDiagram,
    max_linking_crossings: usize,
) -> Result<Option<BTreeSet<CrossingId>>> {
    let candidates: Vec<CrossingId> = diagram.crossings().filter(|c| !c.is_self()).map(|c| c.id).collect();
    if candidates.len() > max_linking_crossings {
        return Ok(None);
    }
    for size in 0..=candidates.len() {
        for subset in candidates.iter().copied().combinations(size) {
            let subset: BTreeSet<CrossingId> = subset.into_iter().collect();
            if is_stacked_diagram(&diagram.change_crossings(&subset))? {
                return Ok(Some(subset));
            }
        }
    }
    unreachable!("changing every under-crossing of the earlier component in some order stacks the diagram")
}

/// Consistency of the splitting chain on the computed intervals.
pub fn chain_check(diagram: &LinkDiagram, limits: &Limits) -> Result<VerificationReport> {
    let complete = complete_splitting_bounds(diagram, limits)?;
    let partial = splitting_bounds(diagram, limits)?;
    let ld = ld_min_with(diagram, limits)?.value as f64;
    let lc = diagram.linking_crossing_count() as f64;
    let c = diagram.crossing_count() as f64;
    let unoriented = d_unoriented_with(diagram, limits)?.value as f64;
    let links = [
        ("Split.lower <= Split.upper", partial.lower as f64, partial.upper as f64),
        (
            "split.lower <= split.upper",
            complete.lower as f64,
            complete.upper as f64,
        ),
        (
            "Split.lower <= split.upper",
            partial.lower as f64,
            complete.upper as f64,
        ),
        (
            "split.lower <= lsplit.upper",
            complete.lower as f64,
            complete.upper as f64,
        ),
        ("lsplit.lower <= ld", complete.lower as f64, ld),
        ("ld <= lc/2", ld, lc / 2.0),
        ("lc/2 <= c/2", lc / 2.0, c / 2.0),
        ("split.upper <= d(|D|)", complete.upper as f64, unoriented),
    ];
    let mut violations: Vec<&str> = links
        .iter()
        .filter(|(_, a, b)| a > b)
        .map(|(name, _, _)| *name)
        .collect();
    if !complete.certificate_is_valid(diagram)? {
        violations.push("complete splitting certificate");
    }
    if !partial.certificate_is_valid(diagram)? {
        violations.push("bipartition certificate");
    }
    let mut report = VerificationReport {
        claim: Claim::SplittingChain,
        holds: false,
        equality: None,
        condition: None,
        lhs: violations.len() as f64,
        rhs: 0.0,
        relation: Relation::Equal,
        witnesses: Default::default(),
    };
    report.witnesses.insert("complete".into(), json!(complete));
    report.witnesses.insert("partial".into(), json!(partial));
    report.witnesses.insert("violations".into(), json!(violations));
    report.holds = report.rederive();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> LinkDiagram {
        LinkDiagram::parse(s).unwrap()
    }

    const HOPF: &str = "O1+ U2+\nU1+ O2+";
    // middle circle clasped once with each end circle
    const CHAIN: &str = "O1+ U2+\nU1+ O2+ O3+ U4+\nU3+ O4+";

    #[test]
    fn hopf_is_exact() {
        let hopf = d(HOPF);
        let complete = complete_splitting_bounds(&hopf, &Limits::default()).unwrap();
        assert_eq!((complete.lower, complete.upper), (1, 1));
        assert_eq!(complete.exact(), Some(1));
        assert!(complete.certificate_is_valid(&hopf).unwrap());
        let partial = splitting_bounds(&hopf, &Limits::default()).unwrap();
        assert_eq!((partial.lower, partial.upper), (1, 1));
        assert!(partial.certificate_is_valid(&hopf).unwrap());
    }

    #[test]
    fn chain_of_three() {
        let chain = d(CHAIN);
        let partial = splitting_bounds(&chain, &Limits::default()).unwrap();
        assert_eq!((partial.lower, partial.upper), (1, 1));
        assert_eq!(partial.target, SplitTarget::Bipartition { side: vec![0] });
        assert!(partial.certificate_is_valid(&chain).unwrap());
        let complete = complete_splitting_bounds(&chain, &Limits::default()).unwrap();
        assert_eq!((complete.lower, complete.upper), (2, 2));
    }

    #[test]
    fn crossing_free_link() {
        let split = d(".\n.");
        let complete = complete_splitting_bounds(&split, &Limits::default()).unwrap();
        assert_eq!((complete.lower, complete.upper), (0, 0));
        let partial = splitting_bounds(&split, &Limits::default()).unwrap();
        assert_eq!((partial.lower, partial.upper), (0, 0));
        // a Hopf pair next to a separate circle splits for free
        let partial = splitting_bounds(&d("O1+ U2+\nU1+ O2+\n."), &Limits::default()).unwrap();
        assert_eq!(partial.exact(), Some(0));
    }

    #[test]
    fn knots_are_rejected() {
        let knot = d("O1+ U1+");
        assert_eq!(
            complete_splitting_bounds(&knot, &Limits::default()),
            Err(Error::TooFewComponents)
        );
        assert_eq!(
            splitting_bounds(&knot, &Limits::default()),
            Err(Error::TooFewComponents)
        );
    }

    #[test]
    fn cancelling_pair_leaves_a_gap() {
        let pair = d("O1+ U2+ O3- U4-\nU1+ O2+ U3- O4-");
        let complete = complete_splitting_bounds(&pair, &Limits::default()).unwrap();
        assert_eq!((complete.lower, complete.upper), (0, 2));
        assert_eq!(complete.exact(), None);
        assert!(complete.certificate_is_valid(&pair).unwrap());
    }

    #[test]
    fn exhaustive_search_matches_ld() {
        for code in [HOPF, CHAIN, "O1+ U2+ O3- U4-\nU1+ O2+ U3- O4-"] {
            let diagram = d(code);
            let set = exhaustive_stacking_changes(&diagram, 12).unwrap().unwrap();
            assert_eq!(set.len(), ld_min_with(&diagram, &Limits::default()).unwrap().value);
        }
        assert_eq!(exhaustive_stacking_changes(&d(HOPF), 1).unwrap(), None);
    }

    #[test]
    fn chain_check_holds() {
        for code in [HOPF, CHAIN, ".\n."] {
            let report = chain_check(&d(code), &Limits::default()).unwrap();
            assert!(report.holds, "{code}: {:?}", report.witnesses["violations"]);
        }
    }
}
