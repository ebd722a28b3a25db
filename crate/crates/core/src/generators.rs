//! Deterministic diagram families: odd pretzel knots, braid closures (which
//! include the `(2, p)` torus knots and links, Hopf links and chains) and
//! random abstract codes.
//!
//! Sign conventions: a positive braid generator `σ_i` has the strand at
//! position `i` passing over to position `i + 1` and carries sign `+1`. In a
//! pretzel column with sign `ε` every crossing has sign `ε`; both conventions
//! are planar-consistent, so linking numbers of braid closures are genuine.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{LinkDiagram, Passage, Sign, Strand};
use crate::error::{Error, Result};

/// Odd-type pretzel knot `P(ε_1 n_1, ..., ε_m n_m)`.
///
/// Column `i` is a vertical twist of `n_i` crossings. The strand entering a
/// column at its top left leaves at the bottom right; it is traversed
/// downwards, its partner upwards, so the two strands of a column are
/// anti-parallel. The base point sits where the top-left strand of the first
/// column enters. Within a column with `ε = +1` the strand moving left to
/// right (going down) is over.
pub fn pretzel_odd(entries: &[i32]) -> Result<LinkDiagram> {
    if entries.is_empty() || entries.len().is_multiple_of(2) {
        return Err(Error::Generator(format!(
            "pretzel needs an odd number of columns, got {}",
            entries.len()
        )));
    }
    if let Some(bad) = entries.iter().find(|e| e.rem_euclid(2) == 0) {
        return Err(Error::Generator(format!("pretzel entries must be odd, got {bad}")));
    }
    let mut first_id = Vec::with_capacity(entries.len());
    let mut next = 1u32;
    for e in entries {
        first_id.push(next);
        next += e.unsigned_abs();
    }
    // strand entering top-left is over at crossing k (1-based, counted downwards)
    let left_over = |positive: bool, k: u32| (k % 2 == 1) == positive;
    let column = |col: usize, downwards_left: bool| -> Vec<Passage> {
        let e = entries[col];
        let n = e.unsigned_abs();
        let positive = e > 0;
        let sign = if positive { Sign::Positive } else { Sign::Negative };
        let ks: Vec<u32> = if downwards_left {
            (1..=n).collect()
        } else {
            (1..=n).rev().collect()
        };
        ks.into_iter()
            .map(|k| {
                let over = left_over(positive, k) == downwards_left;
                let strand = if over { Strand::Over } else { Strand::Under };
                Passage::new(first_id[col] + k - 1, strand, sign)
            })
            .collect()
    };
    let mut word = Vec::new();
    for col in 0..entries.len() {
        word.extend(column(col, col % 2 == 0));
    }
    for col in 0..entries.len() {
        word.extend(column(col, col % 2 == 1));
    }
    LinkDiagram::from_words(vec![word])
}

/// Closure of a braid word on `strands` strands. Generator `g` is `σ_{|g|}`
/// when positive and its inverse when negative. Components follow the
/// cycles of the braid permutation, starting from the lowest position.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram> {
    if strands == 0 {
        return Err(Error::Generator("braid needs at least one strand".into()));
    }
    if let Some(bad) = word.iter().find(|g| **g == 0 || g.unsigned_abs() as usize >= strands) {
        return Err(Error::Generator(format!(
            "generator {bad} out of range for {strands} strands"
        )));
    }
    let mut visited = vec![false; strands];
    let mut components = Vec::new();
    for start in 0..strands {
        if visited[start] {
            continue;
        }
        let mut passages = Vec::new();
        let mut pos = start;
        loop {
            visited[pos] = true;
            for (k, &g) in word.iter().enumerate() {
                let left = g.unsigned_abs() as usize - 1;
                if pos != left && pos != left + 1 {
                    continue;
                }
                let positive = g > 0;
                let sign = if positive { Sign::Positive } else { Sign::Negative };
                let from_left = pos == left;
                let strand = if from_left == positive {
                    Strand::Over
                } else {
                    Strand::Under
                };
                passages.push(Passage::new(k as u32 + 1, strand, sign));
                pos = if from_left { left + 1 } else { left };
            }
            if pos == start {
                break;
            }
        }
        components.push(passages);
    }
    LinkDiagram::from_words(components)
}

/// Standard alternating diagram of the `(2, p)` torus knot or link: the
/// closure of `σ_1^p` (or `σ_1^{-|p|}` for negative `p`). Odd `p` gives a
/// knot, even `p` a two-component link.
pub fn torus_2p(p: i32) -> Result<LinkDiagram> {
    if p == 0 {
        return Err(Error::Generator("torus parameter must be nonzero".into()));
    }
    let g = p.signum();
    braid_closure(2, &vec![g; p.unsigned_abs() as usize])
}

/// Chain of `n` circles, each clasped once with the next.
pub fn chain(n: usize) -> Result<LinkDiagram> {
    let word: Vec<i32> = (1..n as i32).flat_map(|i| [i, i]).collect();
    braid_closure(n, &word)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random abstract signed code: `c` drawn from `0..=c_max`, passages
/// shuffled and cut into `r` (possibly empty) components. Not necessarily
/// realizable.
pub fn random_diagram(seed: u64, c_max: usize, r: usize) -> Result<LinkDiagram> {
    let mut rng = rng(seed);
    let c = rng.gen_range(0..=c_max);
    random_code(&mut rng, c, r)
}

/// As [`random_diagram`] with exactly `c` crossings.
pub fn random_diagram_exact(seed: u64, c: usize, r: usize) -> Result<LinkDiagram> {
    random_code(&mut rng(seed), c, r)
}

fn random_code(rng: &mut ChaCha8Rng, c: usize, r: usize) -> Result<LinkDiagram> {
    if r == 0 {
        return Err(Error::Generator("need at least one component".into()));
    }
    let mut passages = Vec::with_capacity(2 * c);
    for id in 1..=c as u32 {
        let sign = if rng.gen_bool(0.5) {
            Sign::Positive
        } else {
            Sign::Negative
        };
        passages.push(Passage::over(id, sign));
        passages.push(Passage::under(id, sign));
    }
    passages.shuffle(rng);
    let mut cuts: Vec<usize> = (1..r).map(|_| rng.gen_range(0..=passages.len())).collect();
    cuts.sort_unstable();
    let mut components = Vec::with_capacity(r);
    let mut start = 0;
    for cut in cuts.into_iter().chain(std::iter::once(passages.len())) {
        components.push(passages[start..cut].to_vec());
        start = cut;
    }
    LinkDiagram::from_words(components)
}

/// Closure of a random braid word; always realizable.
pub fn random_braid_closure(seed: u64, strands: usize, length: usize) -> Result<LinkDiagram> {
    if strands < 2 && length > 0 {
        return Err(Error::Generator(
            "a nonempty braid word needs at least two strands".into(),
        ));
    }
    let mut rng = rng(seed);
    let word: Vec<i32> = (0..length)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    braid_closure(strands, &word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::warping::d_min;

    #[test]
    fn pretzel_one_one_one_is_the_trefoil_code() {
        let p = pretzel_odd(&[1, 1, 1]).unwrap();
        assert_eq!(p.to_text(), "O1+ U2+ O3+ U1+ O2+ U3+\n");
        assert_eq!(d_min(&p).unwrap().value, 1);
    }

    #[test]
    fn pretzel_three_three_three() {
        let p = pretzel_odd(&[3, 3, 3]).unwrap();
        assert_eq!(p.crossing_count(), 9);
        assert!(crate::verify::is_component_alternating(&p, 0).unwrap());
        assert_eq!(d_min(&p).unwrap().value, 4);
    }

    #[test]
    fn pretzel_rejects_even() {
        assert!(pretzel_odd(&[2, 3, 3]).is_err());
        assert!(pretzel_odd(&[3, 3]).is_err());
        assert!(pretzel_odd(&[]).is_err());
    }

    #[test]
    fn pretzel_signs_follow_columns() {
        let p = pretzel_odd(&[1, -3, 5]).unwrap();
        let negative = p.crossings().filter(|c| c.sign == Sign::Negative).count();
        assert_eq!(negative, 3);
        assert_eq!(p.crossing_count(), 9);
    }

    #[test]
    fn small_torus_diagrams() {
        assert_eq!(torus_2p(2).unwrap().to_text(), "O1+ U2+\nU1+ O2+\n");
        assert_eq!(torus_2p(3).unwrap().to_text(), "O1+ U2+ O3+ U1+ O2+ U3+\n");
        let t5 = torus_2p(5).unwrap();
        assert_eq!((t5.component_count(), t5.crossing_count()), (1, 5));
        assert_eq!(d_min(&t5).unwrap().value, 2);
        assert!(torus_2p(0).is_err());
        assert!(torus_2p(-3).unwrap().crossings().all(|c| c.sign == Sign::Negative));
    }

    #[test]
    fn chain_of_three() {
        let c = chain(3).unwrap();
        assert_eq!(c.component_count(), 3);
        assert_eq!(c.linking_crossing_count(), 4);
        assert_eq!(c.under_count(0, 2), 0);
    }

    #[test]
    fn braid_closure_validation() {
        assert!(braid_closure(2, &[2]).is_err());
        assert!(braid_closure(2, &[0]).is_err());
        let trivial = braid_closure(3, &[]).unwrap();
        assert_eq!(trivial.component_count(), 3);
    }

    #[test]
    fn random_codes_are_deterministic_and_valid() {
        assert_eq!(random_diagram(7, 10, 3).unwrap(), random_diagram(7, 10, 3).unwrap());
        let empty = random_diagram(1, 0, 4).unwrap();
        assert_eq!((empty.component_count(), empty.crossing_count()), (4, 0));
        for seed in 0..50 {
            let d = random_diagram(seed, 8, 3).unwrap();
            assert_eq!(d.component_count(), 3);
            assert_eq!(LinkDiagram::parse(&d.to_text()).unwrap(), d.canonical());
        }
        assert!(random_diagram(0, 3, 0).is_err());
    }

    #[test]
    fn braid_closures_are_linking_consistent() {
        for seed in 0..50 {
            let d = random_braid_closure(seed, 4, 10).unwrap();
            assert!(d.warnings().is_empty(), "seed {seed}: {:?}", d.warnings());
        }
    }
}
