//! Warping crossing points and the minimal warping degrees built from them.
//!
//! For a based diagram `D_a` the warping crossing points split into two
//! kinds: self-crossings of a component that are first met as an under
//! passage when walking from that component's base point, and crossings
//! between two components at which the component earlier in the order is
//! under. The self counts depend only on the base positions and the pair
//! counts only on the order, so the minimum over all base sequences is the
//! sum of the two separate minima.

use itertools::Itertools;
use serde::Serialize;

use crate::diagram::{Crossing, CrossingId, LinkDiagram, Strand};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_COMPONENTS: usize = 8;

/// Enumeration limits for searches over component orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_components: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_components: DEFAULT_MAX_COMPONENTS,
        }
    }
}

impl Limits {
    pub fn check(&self, diagram: &LinkDiagram) -> Result<()> {
        let count = diagram.component_count();
        if count > self.max_components {
            Err(Error::TooManyComponents {
                count,
                max: self.max_components,
            })
        } else {
            Ok(())
        }
    }
}

/// A component order plus one base position per component.
///
/// `positions[i]` is indexed by component, not by order rank; the base point
/// of component `i` sits immediately before word index `positions[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BaseSequence {
    order: Vec<usize>,
    positions: Vec<usize>,
}

impl BaseSequence {
    pub fn new(order: Vec<usize>, positions: Vec<usize>) -> Self {
        BaseSequence { order, positions }
    }

    /// Identity order, every base point before word index 0.
    pub fn standard(diagram: &LinkDiagram) -> Self {
        let r = diagram.component_count();
        BaseSequence {
            order: (0..r).collect(),
            positions: vec![0; r],
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Same positions with the order reversed.
    pub fn reversed_order(&self) -> Self {
        BaseSequence {
            order: self.order.iter().rev().copied().collect(),
            positions: self.positions.clone(),
        }
    }

    pub fn validate(&self, diagram: &LinkDiagram) -> Result<()> {
        let r = diagram.component_count();
        validate_order(&self.order, r)?;
        if self.positions.len() != r {
            return Err(Error::InconsistentBase(format!(
                "{} positions for {} components",
                self.positions.len(),
                r
            )));
        }
        for (component, &position) in self.positions.iter().enumerate() {
            let len = diagram.word(component).len();
            if position >= len.max(1) {
                return Err(Error::InconsistentBase(format!(
                    "position {position} out of range for component {} of length {len}",
                    component + 1
                )));
            }
        }
        Ok(())
    }

    /// Rank of each component in the order.
    fn ranks(&self) -> Vec<usize> {
        ranks(&self.order)
    }
}

pub(crate) fn validate_order(order: &[usize], r: usize) -> Result<()> {
    let mut seen = vec![false; r];
    if order.len() != r {
        return Err(Error::InconsistentBase(format!(
            "order has {} entries for {} components",
            order.len(),
            r
        )));
    }
    for &k in order {
        if k >= r || seen[k] {
            return Err(Error::InconsistentBase(format!(
                "order {:?} is not a permutation",
                order
            )));
        }
        seen[k] = true;
    }
    Ok(())
}

pub(crate) fn ranks(order: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; order.len()];
    for (r, &k) in order.iter().enumerate() {
        rank[k] = r;
    }
    rank
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WarpKind {
    SelfCrossing { component: usize },
    Between { earlier: usize, later: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WarpingPoint {
    pub crossing: CrossingId,
    pub kind: WarpKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub earlier: usize,
    pub later: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WarpingReport {
    /// Self warping counts, indexed by component.
    pub self_counts: Vec<usize>,
    /// Warping counts between components, for each pair in the order of the base sequence.
    pub pair_counts: Vec<PairCount>,
    /// Total number of warping crossing points.
    pub warping_degree: usize,
    /// Number of non-self warping crossing points.
    pub linking_warping_degree: usize,
}

/// Distance walked from the base point to `position`.
fn offset(position: usize, base: usize, len: usize) -> usize {
    (position + len - base) % len
}

fn self_point_is_warping(crossing: &Crossing, base: usize, len: usize) -> bool {
    offset(crossing.under.position, base, len) < offset(crossing.over.position, base, len)
}

fn classify(crossing: &Crossing, diagram: &LinkDiagram, base: &BaseSequence, rank: &[usize]) -> Option<WarpKind> {
    if crossing.is_self() {
        let component = crossing.over.component;
        let len = diagram.word(component).len();
        self_point_is_warping(crossing, base.positions[component], len).then_some(WarpKind::SelfCrossing { component })
    } else {
        let (a, b) = (crossing.over.component, crossing.under.component);
        let (earlier, later) = if rank[a] < rank[b] { (a, b) } else { (b, a) };
        (crossing.strand_of(earlier) == Some(Strand::Under)).then_some(WarpKind::Between { earlier, later })
    }
}

/// All warping crossing points of the based diagram, sorted by crossing id.
pub fn warping_points(diagram: &LinkDiagram, base: &BaseSequence) -> Result<Vec<WarpingPoint>> {
    base.validate(diagram)?;
    let rank = base.ranks();
    Ok(diagram
        .crossings()
        .filter_map(|c| classify(c, diagram, base, &rank).map(|kind| WarpingPoint { crossing: c.id, kind }))
        .collect())
}

pub fn warping_report(diagram: &LinkDiagram, base: &BaseSequence) -> Result<WarpingReport> {
    let points = warping_points(diagram, base)?;
    let r = diagram.component_count();
    let mut self_counts = vec![0; r];
    let mut pair = vec![vec![0; r]; r];
    for p in &points {
        match p.kind {
            WarpKind::SelfCrossing { component } => self_counts[component] += 1,
            WarpKind::Between { earlier, later } => pair[earlier][later] += 1,
        }
    }
    let order = base.order();
    let pair_counts: Vec<PairCount> = order
        .iter()
        .enumerate()
        .flat_map(|(x, &i)| order[x + 1..].iter().map(move |&j| (i, j)))
        .map(|(earlier, later)| PairCount {
            earlier,
            later,
            count: pair[earlier][later],
        })
        .collect();
    let linking_warping_degree = pair_counts.iter().map(|p| p.count).sum();
    Ok(WarpingReport {
        warping_degree: self_counts.iter().sum::<usize>() + linking_warping_degree,
        self_counts,
        pair_counts,
        linking_warping_degree,
    })
}

/// Self warping count of one component from a given base position.
pub fn self_warping_count(diagram: &LinkDiagram, component: usize, base: usize) -> Result<usize> {
    diagram.check_component(component)?;
    let len = diagram.word(component).len();
    if base >= len.max(1) {
        return Err(Error::InconsistentBase(format!(
            "position {base} out of range for length {len}"
        )));
    }
    Ok(diagram
        .crossings()
        .filter(|c| c.is_self() && c.over.component == component)
        .filter(|c| self_point_is_warping(c, base, len))
        .count())
}

/// Minimal self warping count of a component over all its base positions,
/// with the smallest position attaining it.
pub fn component_warping_degree(diagram: &LinkDiagram, component: usize) -> Result<(usize, usize)> {
    let len = diagram.word(component).len().max(1);
    let mut best = (usize::MAX, 0);
    for position in 0..len {
        let count = self_warping_count(diagram, component, position)?;
        if count < best.0 {
            best = (count, position);
        }
    }
    Ok(best)
}

/// `table[i][j]`: crossings of `i` with `j` at which `i` is under.
pub fn under_table(diagram: &LinkDiagram) -> Vec<Vec<usize>> {
    let r = diagram.component_count();
    let mut table = vec![vec![0; r]; r];
    for c in diagram.crossings().filter(|c| !c.is_self()) {
        table[c.under.component][c.over.component] += 1;
    }
    table
}

pub(crate) fn order_cost(table: &[Vec<usize>], order: &[usize]) -> usize {
    order
        .iter()
        .enumerate()
        .map(|(x, &i)| order[x + 1..].iter().map(|&j| table[i][j]).sum::<usize>())
        .sum()
}

/// Linking warping degree of the diagram under a given order.
pub fn linking_warping_degree_for_order(diagram: &LinkDiagram, order: &[usize]) -> Result<usize> {
    validate_order(order, diagram.component_count())?;
    Ok(order_cost(&under_table(diagram), order))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderMinimum {
    pub value: usize,
    pub order: Vec<usize>,
}

/// Minimal linking warping degree over all component orders; ties go to the
/// lexicographically smallest order.
pub fn ld_min(diagram: &LinkDiagram) -> Result<OrderMinimum> {
    ld_min_with(diagram, &Limits::default())
}

pub fn ld_min_with(diagram: &LinkDiagram, limits: &Limits) -> Result<OrderMinimum> {
    limits.check(diagram)?;
    let table = under_table(diagram);
    let r = diagram.component_count();
    let mut best = OrderMinimum {
        value: usize::MAX,
        order: (0..r).collect(),
    };
    for order in (0..r).permutations(r) {
        let value = order_cost(&table, &order);
        if value < best.value {
            best = OrderMinimum { value, order };
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WarpingMinimum {
    pub value: usize,
    /// Lexicographically smallest (order, positions) attaining the minimum.
    pub witness: BaseSequence,
    pub component_degrees: Vec<usize>,
    pub linking_warping_degree: usize,
}

/// Warping degree `d(D)`: the minimum of `d(D_a)` over all base sequences.
pub fn d_min(diagram: &LinkDiagram) -> Result<WarpingMinimum> {
    d_min_with(diagram, &Limits::default())
}

pub fn d_min_with(diagram: &LinkDiagram, limits: &Limits) -> Result<WarpingMinimum> {
    let linking = ld_min_with(diagram, limits)?;
    let mut component_degrees = Vec::with_capacity(diagram.component_count());
    let mut positions = Vec::with_capacity(diagram.component_count());
    for component in 0..diagram.component_count() {
        let (value, position) = component_warping_degree(diagram, component)?;
        component_degrees.push(value);
        positions.push(position);
    }
    Ok(WarpingMinimum {
        value: component_degrees.iter().sum::<usize>() + linking.value,
        witness: BaseSequence::new(linking.order, positions),
        component_degrees,
        linking_warping_degree: linking.value,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnorientedMinimum {
    pub value: usize,
    /// Which components are reversed relative to the input orientation.
    pub reversed: Vec<bool>,
}

/// `d(|D|)`: minimal warping degree over all `2^r` orientations.
pub fn d_unoriented(diagram: &LinkDiagram) -> Result<UnorientedMinimum> {
    d_unoriented_with(diagram, &Limits::default())
}

pub fn d_unoriented_with(diagram: &LinkDiagram, limits: &Limits) -> Result<UnorientedMinimum> {
    limits.check(diagram)?;
    let r = diagram.component_count();
    // ld does not depend on orientation, so only the component terms vary.
    let linking = ld_min_with(diagram, limits)?.value;
    let reversed_all = diagram.reverse_all();
    let mut reversed = Vec::with_capacity(r);
    let mut value = linking;
    for component in 0..r {
        let forward = component_warping_degree(diagram, component)?.0;
        let backward = component_warping_degree(&reversed_all, component)?.0;
        reversed.push(backward < forward);
        value += forward.min(backward);
    }
    Ok(UnorientedMinimum { value, reversed })
}

/// Number of components with at least one self-crossing.
pub fn sr(diagram: &LinkDiagram) -> usize {
    (0..diagram.component_count())
        .filter(|&i| diagram.self_crossing_count(i) > 0)
        .count()
}

pub fn is_monotone(diagram: &LinkDiagram, base: &BaseSequence) -> Result<bool> {
    Ok(warping_points(diagram, base)?.is_empty())
}

pub fn is_stacked(diagram: &LinkDiagram, base: &BaseSequence) -> Result<bool> {
    Ok(warping_report(diagram, base)?.linking_warping_degree == 0)
}

pub fn is_stacked_diagram(diagram: &LinkDiagram) -> Result<bool> {
    Ok(ld_min(diagram)?.value == 0)
}

pub fn is_self_crossing_diagram(diagram: &LinkDiagram) -> bool {
    sr(diagram) == diagram.component_count()
}
