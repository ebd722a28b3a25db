//! Acceptance suite: one line per criterion, with pinned sizes, tolerances
//! and time limits. Runs without the libtest harness so the lines always
//! print; exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use warping_core::diagram::LinkDiagram;
use warping_core::generators::{chain, pretzel_odd, random_diagram, random_diagram_exact, torus_2p};
use warping_core::matrix::{ld_min_matrix, LinkingMatrix};
use warping_core::normalize::{degree_from_parts, knot_warping_degree, normalize, OuWord};
use warping_core::split::{complete_splitting_bounds, splitting_bounds};
use warping_core::verify::{
    absolute_linking_sum, all_pairs_balanced, property_c as library_property_c, total_linking_number,
    total_linking_via_warping, verify_claim, Claim,
};
use warping_core::warping::{d_min, d_min_with, ld_min, linking_warping_degree_for_order, BaseSequence, Limits};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    match failures.first() {
        None => Outcome {
            pass: true,
            detail: summary,
        },
        Some(first) => Outcome {
            pass: false,
            detail: format!("{} failures, first: {first}", failures.len()),
        },
    }
}

fn crossing_sum(d: &LinkDiagram) -> usize {
    d_min(d).unwrap().value + d_min(&d.reverse_all()).unwrap().value
}

fn normalizer_fixture() -> Outcome {
    let word: OuWord = "oouuouuouuouoouoou".parse().unwrap();
    let n = normalize(&word);
    let d = degree_from_parts(4, &n);
    let pass = n.to_string() == "uuoo" && d == 2;
    Outcome {
        pass,
        detail: format!("normalized {n}, d(D) = {d}"),
    }
}

fn matrix_fixture() -> Outcome {
    let first: LinkingMatrix = "0 1 0;1 0 0;2 2 0".parse().unwrap();
    let second: LinkingMatrix = "0 2 2;0 0 1;0 1 0".parse().unwrap();
    let ld = ld_min_matrix(&first).unwrap().value;
    let sum = second.upper_sum();
    Outcome {
        pass: ld == 1 && sum == 5,
        detail: format!("ld = {ld}, upper sum = {sum}"),
    }
}

/// Nonempty sequences of odd positive integers with sum at most `budget`.
fn odd_sequences(budget: i32) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for first in (1..=budget).step_by(2) {
        out.push(vec![first]);
        for rest in odd_sequences(budget - first) {
            out.push([vec![first], rest].concat());
        }
    }
    out
}

fn knot_crossing_bound() -> Outcome {
    let mut failures = Vec::new();
    let mut family = Vec::new();
    for p in [3, 5, 7, 9, 11] {
        family.push((format!("torus(2,{p})"), torus_2p(p).unwrap()));
    }
    for entries in odd_sequences(11).into_iter().filter(|e| e.len() % 2 == 1) {
        family.push((format!("pretzel {entries:?}"), pretzel_odd(&entries).unwrap()));
    }
    for (name, d) in &family {
        let lhs = crossing_sum(d) + 1;
        let report = verify_claim(d, Claim::KnotCrossingBound, &Limits::default()).unwrap();
        if lhs != d.crossing_count() || !report.holds || report.equality != Some(true) {
            failures.push(format!("{name}: {lhs} vs c = {}", d.crossing_count()));
        }
    }
    let mut strict = 0;
    let mut seed = 0u64;
    while strict < 100 {
        let c = 1 + (seed as usize % 10);
        let d = random_diagram_exact(seed, c, 1).unwrap();
        seed += 1;
        if alternating(&d, 0) {
            continue;
        }
        strict += 1;
        let lhs = brute_knot_d(&d) + brute_knot_d(&d.reverse_all()) + 1;
        let report = verify_claim(&d, Claim::KnotCrossingBound, &Limits::default()).unwrap();
        if lhs >= d.crossing_count() || !report.holds || report.equality != Some(false) {
            failures.push(format!("{}: {lhs} vs c = {}", d.to_text().trim(), d.crossing_count()));
        }
    }
    outcome(
        &failures,
        format!(
            "{} alternating equalities, {strict} strict non-alternating",
            family.len()
        ),
    )
}

fn link_crossing_bound() -> Outcome {
    let mut failures = Vec::new();
    let mut equalities = 0;
    for seed in 0..500u64 {
        let r = 1 + (seed as usize % 3);
        let d = random_diagram(seed, 10, r).unwrap();
        let f = crossing_sum(&d) + sr(&d);
        let c = d.crossing_count();
        let pc = property_c(&d);
        if pc != library_property_c(&d).holds {
            failures.push(format!("seed {seed}: property C oracle disagrees"));
        }
        if f > c || (f == c) != pc {
            failures.push(format!("seed {seed}: f = {f}, c = {c}, property C {pc}"));
        }
        let report = verify_claim(&d, Claim::LinkCrossingBound, &Limits::default()).unwrap();
        if !report.holds {
            failures.push(format!("seed {seed}: report does not hold"));
        }
        equalities += usize::from(f == c);
    }
    outcome(
        &failures,
        format!("500 diagrams, {equalities} equalities, 0 discrepancies"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..200u64 {
        let d = random_diagram(1_000 + seed, 12, 1).unwrap();
        let expected = brute_knot_d(&d);
        let got = knot_warping_degree(&d, 0).unwrap();
        if got != expected {
            failures.push(format!("knot seed {seed}: {got} vs {expected}"));
        }
    }
    for seed in 0..200u64 {
        let r = 2 + (seed as usize % 3);
        let d = random_diagram(2_000 + seed, 8, r).unwrap();
        let got = d_min(&d).unwrap().value;
        let expected = brute_d(&d);
        if got != expected {
            failures.push(format!("link seed {seed}: {got} vs {expected}"));
        }
    }
    outcome(
        &failures,
        "200 knots (c <= 12), 200 links (r <= 4), 0 discrepancies".into(),
    )
}

fn reversal_identity() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let r = 2 + (seed as usize % 2);
        let d = random_diagram(3_000 + seed, 10, r).unwrap();
        let lc = d.linking_crossing_count();
        for order in (0..r).permutations(r) {
            let rev: Vec<usize> = order.iter().rev().copied().collect();
            let sum = linking_warping_degree_for_order(&d, &order).unwrap()
                + linking_warping_degree_for_order(&d, &rev).unwrap();
            if sum != lc {
                failures.push(format!("seed {seed} order {order:?}: {sum} vs lc = {lc}"));
            }
        }
        let ld = ld_min(&d).unwrap().value;
        let balanced = (0..r).tuple_combinations().all(|(i, j)| balanced(&d, i, j));
        if (2 * ld == lc) != balanced || balanced != all_pairs_balanced(&d) {
            failures.push(format!("seed {seed}: ld = {ld}, lc = {lc}, balanced {balanced}"));
        }
    }
    outcome(&failures, "100 diagrams, every order, 0 discrepancies".into())
}

fn orientation_independence() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let r = 1 + (seed as usize % 3);
        let d = random_diagram(4_000 + seed, 10, r).unwrap();
        let values: Vec<usize> = (0..1u32 << r)
            .map(|mask| {
                let flags: Vec<bool> = (0..r).map(|k| mask >> k & 1 == 1).collect();
                crossing_sum(&d.with_orientation(&flags).unwrap())
            })
            .collect();
        if values.iter().any(|&v| v != values[0]) {
            failures.push(format!("seed {seed}: {values:?}"));
        }
    }
    outcome(&failures, "100 diagrams, all 2^r orientations agree".into())
}

fn linking_from_warping() -> Outcome {
    let mut failures = Vec::new();
    let mut exhaustive = 0;
    let corpus = realizable_corpus();
    for (name, d) in &corpus {
        let ld = ld_min(d).unwrap().value as i64;
        let twice_abs = sum_abs_twice_link(d);
        if twice_abs != absolute_linking_sum(d).twice() {
            failures.push(format!("{name}: linking oracle disagrees"));
        }
        if twice_abs % 2 != 0 || twice_abs / 2 > ld || (ld - twice_abs / 2) % 2 != 0 {
            failures.push(format!("{name}: sum |Link| = {}/2, ld = {ld}", twice_abs));
        }
        if d.crossing_count() > 8 {
            continue;
        }
        exhaustive += 1;
        let total = total_linking_number(d).twice();
        let r = d.component_count();
        let positions: Vec<Vec<usize>> = (0..r)
            .map(|k| 0..d.word(k).len().max(1))
            .multi_cartesian_product()
            .collect();
        for order in (0..r).permutations(r) {
            for p in &positions {
                let via = total_linking_via_warping(d, &BaseSequence::new(order.clone(), p.clone())).unwrap();
                if 2 * via != total {
                    failures.push(format!("{name} at {order:?} {p:?}: {via} vs {total}/2"));
                }
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{} realizable diagrams, {exhaustive} exhaustive over base sequences",
            corpus.len()
        ),
    )
}

fn splitting() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    let hopf = complete_splitting_bounds(&parse(HOPF), &limits).unwrap();
    if (hopf.lower, hopf.upper) != (1, 1) {
        failures.push(format!("hopf complete interval [{}, {}]", hopf.lower, hopf.upper));
    }
    let three = splitting_bounds(&chain(3).unwrap(), &limits).unwrap();
    if (three.lower, three.upper) != (1, 1) {
        failures.push(format!("3-chain partial interval [{}, {}]", three.lower, three.upper));
    }
    let mut links = 0;
    for (name, d) in realizable_corpus() {
        if d.component_count() < 2 {
            continue;
        }
        links += 1;
        let report = verify_claim(&d, Claim::SplittingChain, &limits).unwrap();
        if !report.holds {
            failures.push(format!("{name}: chain violated {:?}", report.witnesses));
        }
        for b in [
            complete_splitting_bounds(&d, &limits).unwrap(),
            splitting_bounds(&d, &limits).unwrap(),
        ] {
            if !b.certificate_is_valid(&d).unwrap() || b.lower > b.upper {
                failures.push(format!("{name}: bad interval {:?}", b));
            }
        }
    }
    outcome(
        &failures,
        format!("hopf [1,1], 3-chain [1,1], chain and certificates on {links} links"),
    )
}

fn pretzels() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let m = [1, 3, 5][rng.gen_range(0..3)];
        let entries: Vec<i32> = (0..m)
            .map(|_| {
                let n = [1, 3, 5][rng.gen_range(0..3)];
                if rng.gen_bool(0.5) {
                    n
                } else {
                    -n
                }
            })
            .collect();
        let d = pretzel_odd(&entries).unwrap();
        let (fwd, bwd) = (brute_knot_d(&d), brute_knot_d(&d.reverse_all()));
        if fwd != bwd || fwd != d_min(&d).unwrap().value {
            failures.push(format!("{entries:?}: d = {fwd}, d(-D) = {bwd}"));
        }
    }
    for (entries, expected) in [([3, 3, 3], 4), ([1, 1, 1], 1)] {
        let d = pretzel_odd(&entries).unwrap();
        let got = d_min_with(&d, &Limits::default()).unwrap().value;
        if got != expected || 2 * got + 1 != d.crossing_count() {
            failures.push(format!("{entries:?}: d = {got}, expected {expected}"));
        }
    }
    outcome(
        &failures,
        "20 sampled pretzels symmetric, P(3,3,3) = 4, P(1,1,1) = 1".into(),
    )
}

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let ms = Duration::from_millis;
    let criteria: [Criterion; 10] = [
        (1, "normalizer fixture", ms(1), normalizer_fixture),
        (2, "linking matrix fixture", ms(1), matrix_fixture),
        (3, "knot crossing bound", ms(10_000), knot_crossing_bound),
        (4, "link crossing bound and property C", ms(60_000), link_crossing_bound),
        (5, "oracle equivalence", ms(60_000), oracle_equivalence),
        (6, "reversal identity", ms(60_000), reversal_identity),
        (7, "orientation independence", ms(60_000), orientation_independence),
        (8, "linking numbers from warping", ms(60_000), linking_from_warping),
        (9, "splitting intervals", ms(60_000), splitting),
        (10, "pretzel symmetry", ms(60_000), pretzels),
    ];
    let mut all = true;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let pass = result.pass && elapsed <= limit;
        all &= pass;
        println!(
            "criterion {id:>2} {} {name}: {} ({:.3} ms, limit {} ms)",
            if pass { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64() * 1e3,
            limit.as_millis()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
