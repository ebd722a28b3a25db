//! Warping degree of a knot diagram from its o/u word.
//!
//! Walking a single-component diagram from a base point and writing `o` or
//! `u` at each passage gives a word with as many `o` as `u`. Cancelling `ou`
//! factors until none remain leaves `u^k o^k`, and
//! `d(D) = d(D_a) - k` for every base point `a`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::diagram::{LinkDiagram, Strand};
use crate::error::{Error, Result};
use crate::warping::self_warping_count;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    O,
    U,
}

impl From<Strand> for Letter {
    fn from(strand: Strand) -> Self {
        match strand {
            Strand::Over => Letter::O,
            Strand::Under => Letter::U,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OuWord(Vec<Letter>);

impl OuWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        OuWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the leading run of `u` and of the trailing run of `o`.
    pub fn shape(&self) -> (usize, usize) {
        let u = self.0.iter().take_while(|&&l| l == Letter::U).count();
        let o = self.0.iter().rev().take_while(|&&l| l == Letter::O).count();
        (u, o)
    }
}

impl FromStr for OuWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'o' | 'O' => Ok(Letter::O),
                'u' | 'U' => Ok(Letter::U),
                other => Err(Error::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(OuWord)
    }
}

impl fmt::Display for OuWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::O => "o",
                Letter::U => "u",
            })?;
        }
        Ok(())
    }
}

impl Serialize for OuWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn single_component(diagram: &LinkDiagram) -> Result<()> {
    match diagram.component_count() {
        1 => Ok(()),
        n => Err(Error::NotAKnot(n)),
    }
}

/// The o/u word of a knot diagram read from `base`.
pub fn ou_word(knot: &LinkDiagram, base: usize) -> Result<OuWord> {
    single_component(knot)?;
    let word = knot.word(0);
    if base >= word.len().max(1) {
        return Err(Error::InconsistentBase(format!(
            "position {base} out of range for length {}",
            word.len()
        )));
    }
    let n = word.len();
    Ok(OuWord(
        (0..n).map(|k| Letter::from(word[(base + k) % n].strand)).collect(),
    ))
}

/// Deletes `ou` factors until none is left, in one stack pass.
pub fn normalize(word: &OuWord) -> OuWord {
    let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
    for &letter in &word.0 {
        if letter == Letter::U && stack.last() == Some(&Letter::O) {
            stack.pop();
        } else {
            stack.push(letter);
        }
    }
    OuWord(stack)
}

/// `d(D_a) - #⌊D_a⌋ / 2` for the given base position.
pub fn knot_warping_degree(knot: &LinkDiagram, base: usize) -> Result<usize> {
    let word = ou_word(knot, base)?;
    let based = self_warping_count(knot, 0, base)?;
    let value = degree_from_parts(based, &normalize(&word));
    debug_assert!(
        sample_bases(word.len()).all(|b| {
            let w = ou_word(knot, b).expect("sampled base is in range");
            degree_from_parts(
                self_warping_count(knot, 0, b).expect("sampled base is in range"),
                &normalize(&w),
            ) == value
        }),
        "normalized degree depends on the base point"
    );
    Ok(value)
}

/// Applies the formula to a based degree and a normalized word.
pub fn degree_from_parts(based_degree: usize, normalized: &OuWord) -> usize {
    based_degree - normalized.len() / 2
}

fn sample_bases(len: usize) -> impl Iterator<Item = usize> {
    let len = len.max(1);
    [0, len / 2, len - 1].into_iter()
}

/// Minimal self warping count of one component of a link, computed from the
/// o/u word of its self-passages.
pub fn component_degree(diagram: &LinkDiagram, component: usize) -> Result<usize> {
    let knot = diagram.subdiagram(&[component])?;
    knot_warping_degree(&knot, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> OuWord {
        s.parse().unwrap()
    }

    #[test]
    fn example_word_normalizes_to_uuoo() {
        let n = normalize(&word("oouuouuouuouoouoou"));
        assert_eq!(n.to_string(), "uuoo");
        assert_eq!(degree_from_parts(4, &n), 2);
    }

    #[test]
    fn small_words() {
        assert_eq!(normalize(&word("ou")), OuWord::default());
        assert_eq!(normalize(&word("uo")).to_string(), "uo");
        assert_eq!(normalize(&word("")), OuWord::default());
        assert_eq!(normalize(&word("oouu")), OuWord::default());
        assert_eq!(normalize(&word("uouo")).to_string(), "uo");
        assert_eq!(normalize(&word("uuoo")).shape(), (2, 2));
    }

    #[test]
    fn rejects_other_letters() {
        assert_eq!("oxu".parse::<OuWord>(), Err(Error::InvalidLetter('x')));
    }

    #[test]
    fn trefoil_word() {
        let d = LinkDiagram::parse("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        assert_eq!(ou_word(&d, 0).unwrap().to_string(), "ououou");
        assert_eq!(ou_word(&d, 1).unwrap().to_string(), "uououo");
        for base in 0..6 {
            assert_eq!(knot_warping_degree(&d, base).unwrap(), 1);
        }
    }

    #[test]
    fn kink_and_empty() {
        let kink = LinkDiagram::parse("O1+ U1+").unwrap();
        assert_eq!(knot_warping_degree(&kink, 0).unwrap(), 0);
        let circle = LinkDiagram::parse(".").unwrap();
        assert!(ou_word(&circle, 0).unwrap().is_empty());
        assert_eq!(knot_warping_degree(&circle, 0).unwrap(), 0);
    }

    #[test]
    fn multi_component_rejected() {
        let hopf = LinkDiagram::parse("O1+ U2+\nU1+ O2+").unwrap();
        assert_eq!(ou_word(&hopf, 0), Err(Error::NotAKnot(2)));
        assert_eq!(knot_warping_degree(&hopf, 0), Err(Error::NotAKnot(2)));
        assert_eq!(component_degree(&hopf, 1).unwrap(), 0);
    }
}
