//! Independent brute-force oracles and shared corpora for the integration
//! tests. Nothing here calls the library's counting code.

#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use proptest::prelude::*;
use warping_core::diagram::{LinkDiagram, Passage, Sign, Strand};
use warping_core::generators::{braid_closure, chain, pretzel_odd, random_braid_closure, torus_2p};

/// Walks the components in `order` from `positions` and counts crossings
/// first met from below. Returns (all such crossings, the non-self ones).
pub fn walk_count(d: &LinkDiagram, order: &[usize], positions: &[usize]) -> (usize, usize) {
    let owner = |p: &Passage| -> Vec<usize> {
        (0..d.component_count())
            .filter(|&k| d.word(k).iter().any(|q| q.crossing == p.crossing))
            .collect()
    };
    let mut seen = HashSet::new();
    let (mut all, mut between) = (0, 0);
    for &k in order {
        let w = d.word(k);
        for t in 0..w.len() {
            let p = w[(positions[k] + t) % w.len()];
            if seen.insert(p.crossing) && p.strand == Strand::Under {
                all += 1;
                if owner(&p).len() == 2 {
                    between += 1;
                }
            }
        }
    }
    (all, between)
}

fn all_positions(d: &LinkDiagram) -> Vec<Vec<usize>> {
    (0..d.component_count())
        .map(|k| 0..d.word(k).len().max(1))
        .multi_cartesian_product()
        .collect()
}

fn all_orders(r: usize) -> Vec<Vec<usize>> {
    (0..r).permutations(r).collect()
}

/// `d(D)` as the minimum over every order and every choice of base positions.
pub fn brute_d(d: &LinkDiagram) -> usize {
    let positions = all_positions(d);
    all_orders(d.component_count())
        .iter()
        .flat_map(|o| positions.iter().map(move |p| walk_count(d, o, p).0))
        .min()
        .unwrap_or(0)
}

/// `ld(D)` as the minimum over orders; base positions do not matter.
pub fn brute_ld(d: &LinkDiagram) -> usize {
    let zero = vec![0; d.component_count()];
    all_orders(d.component_count())
        .iter()
        .map(|o| walk_count(d, o, &zero).1)
        .min()
        .unwrap_or(0)
}

/// Minimum over base positions of the first-met-under count of a knot.
pub fn brute_knot_d(d: &LinkDiagram) -> usize {
    let n = d.word(0).len().max(1);
    (0..n).map(|b| walk_count(d, &[0], &[b]).0).min().unwrap()
}

/// Twice the linking number of components `i` and `j` from the raw words.
pub fn twice_link(d: &LinkDiagram, i: usize, j: usize) -> i64 {
    let ids_i: HashSet<_> = d.word(i).iter().map(|p| p.crossing).collect();
    d.word(j)
        .iter()
        .filter(|p| ids_i.contains(&p.crossing))
        .map(|p| p.sign.value())
        .sum::<i64>()
}

pub fn sum_abs_twice_link(d: &LinkDiagram) -> i64 {
    let r = d.component_count();
    (0..r)
        .tuple_combinations()
        .map(|(i, j)| twice_link(d, i, j).abs())
        .sum()
}

/// Whether each component's self o/u sequence alternates cyclically.
pub fn alternating(d: &LinkDiagram, k: usize) -> bool {
    let w = d.word(k);
    let selfs: Vec<Strand> = w
        .iter()
        .filter(|p| w.iter().filter(|q| q.crossing == p.crossing).count() == 2)
        .map(|p| p.strand)
        .collect();
    let n = selfs.len();
    (0..n).all(|t| selfs[t] != selfs[(t + 1) % n])
}

pub fn balanced(d: &LinkDiagram, i: usize, j: usize) -> bool {
    let ids_j: HashSet<_> = d.word(j).iter().map(|p| p.crossing).collect();
    let shared: Vec<_> = d.word(i).iter().filter(|p| ids_j.contains(&p.crossing)).collect();
    let over = shared.iter().filter(|p| p.strand == Strand::Over).count();
    2 * over == shared.len()
}

pub fn property_c(d: &LinkDiagram) -> bool {
    let r = d.component_count();
    (0..r).all(|k| alternating(d, k)) && (0..r).tuple_combinations().all(|(i, j)| balanced(d, i, j))
}

pub fn sr(d: &LinkDiagram) -> usize {
    (0..d.component_count())
        .filter(|&k| {
            let w = d.word(k);
            w.iter()
                .any(|p| w.iter().filter(|q| q.crossing == p.crossing).count() == 2)
        })
        .count()
}

/// Proptest strategy for abstract codes with up to `c_max` crossings and
/// `1..=r_max` components, built without the library's generators.
pub fn code(c_max: usize, r_max: usize) -> impl Strategy<Value = LinkDiagram> {
    (0..=c_max, 1..=r_max)
        .prop_flat_map(|(c, r)| {
            let passages = prop::collection::vec(any::<(bool, bool)>(), c).prop_map(|flags| {
                flags
                    .into_iter()
                    .enumerate()
                    .flat_map(|(k, (first_over, positive))| {
                        let sign = if positive { Sign::Positive } else { Sign::Negative };
                        let id = k as u32 + 1;
                        let (a, b) = if first_over {
                            (Strand::Over, Strand::Under)
                        } else {
                            (Strand::Under, Strand::Over)
                        };
                        [Passage::new(id, a, sign), Passage::new(id, b, sign)]
                    })
                    .collect::<Vec<_>>()
            });
            (passages.prop_shuffle(), prop::collection::vec(0..=2 * c, r - 1))
        })
        .prop_map(|(passages, mut cuts)| {
            cuts.sort_unstable();
            let mut words = Vec::new();
            let mut start = 0;
            for cut in cuts.into_iter().chain([passages.len()]) {
                words.push(passages[start..cut].to_vec());
                start = cut;
            }
            LinkDiagram::from_words(words).expect("strategy builds valid codes")
        })
}

pub fn parse(s: &str) -> LinkDiagram {
    LinkDiagram::parse(s).unwrap()
}

pub const HOPF: &str = "O1+ U2+\nU1+ O2+";
pub const TREFOIL_PLUS_CLASP: &str = "O1+ U2+ O3+ U1+ O2+ U3+ O4+ U5+\nU4+ O5+";

/// Realizable diagrams: braid closures, pretzels and fixtures. Every member
/// has consistent linking signs.
pub fn realizable_corpus() -> Vec<(String, LinkDiagram)> {
    let mut out = vec![
        ("hopf".to_string(), parse(HOPF)),
        ("trefoil with clasped circle".to_string(), parse(TREFOIL_PLUS_CLASP)),
    ];
    for p in [-8, -6, -5, -4, -3, -2, 2, 3, 4, 5, 6, 7, 8] {
        out.push((format!("torus(2,{p})"), torus_2p(p).unwrap()));
    }
    for n in 2..=4 {
        out.push((format!("chain {n}"), chain(n).unwrap()));
    }
    for entries in [[1, 1, 1], [1, -1, 1], [3, -1, 1], [-1, 1, 3]] {
        out.push((format!("pretzel {entries:?}"), pretzel_odd(&entries).unwrap()));
    }
    out.push((
        "borromean".to_string(),
        braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap(),
    ));
    out.push((
        "whitehead-like".to_string(),
        braid_closure(3, &[1, 1, -2, 1, -2]).unwrap(),
    ));
    for seed in 0..120 {
        let strands = 2 + (seed as usize % 3);
        let length = 2 + (seed as usize % 7);
        out.push((
            format!("braid seed {seed}"),
            random_braid_closure(seed, strands, length).unwrap(),
        ));
    }
    out
}
