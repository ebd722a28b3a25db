//! Signed, oriented, multi-component Gauss codes.
//!
//! A [`LinkDiagram`] is a list of components, each a cyclic word of
//! [`Passage`]s read in the direction of the component's orientation. Every
//! crossing id appears exactly twice in the whole diagram: once as an over
//! passage and once as an under passage, both carrying the crossing's sign.
//!
//! Realizability is not checked. Codes that no planar diagram could produce
//! are accepted; [`LinkDiagram::warnings`] reports the two symptoms that the
//! linking-number results depend on.
//!
//! Text format: one component per line, tokens `O<id><sign>` / `U<id><sign>`
//! separated by whitespace, `#` comment lines and blank lines ignored. A
//! component without crossings is written as a single `.`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strand {
    Over,
    Under,
}

impl Strand {
    pub fn flip(self) -> Self {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }

    fn token_char(self) -> char {
        match self {
            Strand::Over => 'O',
            Strand::Under => 'U',
        }
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strand::Over => "over",
            Strand::Under => "under",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn token_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// One visit of a component to a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Passage {
    pub crossing: CrossingId,
    pub strand: Strand,
    pub sign: Sign,
}

impl Passage {
    pub fn new(crossing: u32, strand: Strand, sign: Sign) -> Self {
        Passage {
            crossing: CrossingId(crossing),
            strand,
            sign,
        }
    }

    pub fn over(crossing: u32, sign: Sign) -> Self {
        Self::new(crossing, Strand::Over, sign)
    }

    pub fn under(crossing: u32, sign: Sign) -> Self {
        Self::new(crossing, Strand::Under, sign)
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            self.strand.token_char(),
            self.crossing,
            self.sign.token_char()
        )
    }
}

/// Location of a passage: component index and word index, both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Site {
    pub component: usize,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub id: CrossingId,
    pub sign: Sign,
    pub over: Site,
    pub under: Site,
}

impl Crossing {
    pub fn is_self(&self) -> bool {
        self.over.component == self.under.component
    }

    /// The strand that `component` takes at this crossing, if it passes through it.
    /// For a self-crossing the answer is ambiguous and `None` is returned.
    pub fn strand_of(&self, component: usize) -> Option<Strand> {
        if self.is_self() {
            None
        } else if self.over.component == component {
            Some(Strand::Over)
        } else if self.under.component == component {
            Some(Strand::Under)
        } else {
            None
        }
    }

    pub fn joins(&self, i: usize, j: usize) -> bool {
        (self.over.component == i && self.under.component == j)
            || (self.over.component == j && self.under.component == i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Warning {
    /// The number of non-self crossings is odd, which no closed planar diagram has.
    OddLinkingCrossings { count: usize },
    /// The signed sums over the under-crossings of each side of a pair differ,
    /// so the pair's linking number is not diagram-consistent.
    InconsistentLinking {
        first: usize,
        second: usize,
        first_under_sum: i64,
        second_under_sum: i64,
    },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::OddLinkingCrossings { count } => {
                write!(f, "odd number of non-self crossings ({count}); code is not realizable")
            }
            Warning::InconsistentLinking {
                first,
                second,
                first_under_sum,
                second_under_sum,
            } => write!(
                f,
                "components {} and {}: under-crossing sign sums differ ({} vs {}); code is not realizable",
                first + 1,
                second + 1,
                first_under_sum,
                second_under_sum
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    components: Vec<Vec<Passage>>,
    crossings: BTreeMap<CrossingId, Crossing>,
}

impl LinkDiagram {
    /// Builds and validates a diagram from component words.
    pub fn from_words(components: Vec<Vec<Passage>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        let mut sites: BTreeMap<CrossingId, Vec<(Site, Passage)>> = BTreeMap::new();
        for (component, word) in components.iter().enumerate() {
            for (position, passage) in word.iter().enumerate() {
                sites
                    .entry(passage.crossing)
                    .or_default()
                    .push((Site { component, position }, *passage));
            }
        }
        let mut crossings = BTreeMap::new();
        for (id, visits) in sites {
            if visits.len() != 2 {
                return Err(Error::CrossingOccurrence {
                    id,
                    count: visits.len(),
                });
            }
            let (a_site, a) = visits[0];
            let (b_site, b) = visits[1];
            if a.strand == b.strand {
                return Err(Error::DuplicateStrand { id, strand: a.strand });
            }
            if a.sign != b.sign {
                return Err(Error::SignMismatch(id));
            }
            let (over, under) = if a.strand == Strand::Over {
                (a_site, b_site)
            } else {
                (b_site, a_site)
            };
            crossings.insert(
                id,
                Crossing {
                    id,
                    sign: a.sign,
                    over,
                    under,
                },
            );
        }
        Ok(LinkDiagram { components, crossings })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut components = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line == "." {
                components.push(Vec::new());
                continue;
            }
            let word = line
                .split_whitespace()
                .map(|token| {
                    parse_token(token).ok_or_else(|| Error::MalformedToken {
                        line: index + 1,
                        token: token.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            components.push(word);
        }
        Self::from_words(components)
    }

    /// Canonical text form: crossings renumbered `1..=c` in order of first
    /// appearance, single spaces between tokens, one line per component.
    pub fn to_text(&self) -> String {
        let canonical = self.canonical();
        let mut out = String::new();
        for word in &canonical.components {
            if word.is_empty() {
                out.push('.');
            } else {
                let tokens: Vec<String> = word.iter().map(|p| p.to_string()).collect();
                out.push_str(&tokens.join(" "));
            }
            out.push('\n');
        }
        out
    }

    /// The same diagram with crossing ids renumbered `1..=c` in first-appearance order.
    pub fn canonical(&self) -> LinkDiagram {
        let mut renumber: BTreeMap<CrossingId, u32> = BTreeMap::new();
        let mut next = 1;
        let components = self
            .components
            .iter()
            .map(|word| {
                word.iter()
                    .map(|p| {
                        let id = *renumber.entry(p.crossing).or_insert_with(|| {
                            next += 1;
                            next - 1
                        });
                        Passage {
                            crossing: CrossingId(id),
                            ..*p
                        }
                    })
                    .collect()
            })
            .collect();
        LinkDiagram::from_words(components).expect("renumbering preserves validity")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let components: Vec<Vec<JsonPassage>> = self
            .components
            .iter()
            .map(|word| {
                word.iter()
                    .map(|p| JsonPassage {
                        o: p.strand == Strand::Over,
                        id: p.crossing.0,
                        sign: p.sign.value(),
                    })
                    .collect()
            })
            .collect();
        serde_json::to_value(JsonDiagram { components }).expect("diagram serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: JsonDiagram = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let components = raw
            .components
            .into_iter()
            .map(|word| {
                word.into_iter()
                    .map(|p| {
                        let sign = match p.sign {
                            1 => Sign::Positive,
                            -1 => Sign::Negative,
                            other => return Err(Error::Json(format!("sign must be 1 or -1, got {other}"))),
                        };
                        if p.id == 0 {
                            return Err(Error::Json("crossing id must be positive".into()));
                        }
                        let strand = if p.o { Strand::Over } else { Strand::Under };
                        Ok(Passage::new(p.id, strand, sign))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_words(components)
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of crossings whose two passages lie on different components.
    pub fn linking_crossing_count(&self) -> usize {
        self.crossings.values().filter(|c| !c.is_self()).count()
    }

    pub fn self_crossing_count(&self, component: usize) -> usize {
        self.crossings
            .values()
            .filter(|c| c.is_self() && c.over.component == component)
            .count()
    }

    pub fn word(&self, component: usize) -> &[Passage] {
        &self.components[component]
    }

    pub fn words(&self) -> &[Vec<Passage>] {
        &self.components
    }

    pub fn crossing(&self, id: CrossingId) -> Option<&Crossing> {
        self.crossings.get(&id)
    }

    pub fn crossings(&self) -> impl Iterator<Item = &Crossing> {
        self.crossings.values()
    }

    /// Crossings between two distinct components.
    pub fn pair_crossings(&self, i: usize, j: usize) -> impl Iterator<Item = &Crossing> {
        self.crossings.values().filter(move |c| i != j && c.joins(i, j))
    }

    /// Number of crossings of `i` with `j` at which `i` is the under strand.
    pub fn under_count(&self, i: usize, j: usize) -> usize {
        self.pair_crossings(i, j).filter(|c| c.under.component == i).count()
    }

    pub fn check_component(&self, index: usize) -> Result<()> {
        if index < self.components.len() {
            Ok(())
        } else {
            Err(Error::ComponentOutOfRange {
                index,
                count: self.components.len(),
            })
        }
    }

    /// Every component reversed. Both strands of every crossing change
    /// direction, so all signs are preserved.
    pub fn reverse_all(&self) -> LinkDiagram {
        let components = self
            .components
            .iter()
            .map(|w| w.iter().rev().copied().collect())
            .collect();
        LinkDiagram::from_words(components).expect("reversal preserves validity")
    }

    /// Component `index` reversed. Crossings between it and another component
    /// change sign; all other signs are preserved.
    pub fn reverse_component(&self, index: usize) -> Result<LinkDiagram> {
        self.check_component(index)?;
        let flipped: BTreeSet<CrossingId> = self
            .crossings
            .values()
            .filter(|c| !c.is_self() && (c.over.component == index || c.under.component == index))
            .map(|c| c.id)
            .collect();
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(k, word)| {
                let mut word: Vec<Passage> = word
                    .iter()
                    .map(|p| {
                        let sign = if flipped.contains(&p.crossing) {
                            p.sign.flip()
                        } else {
                            p.sign
                        };
                        Passage { sign, ..*p }
                    })
                    .collect();
                if k == index {
                    word.reverse();
                }
                word
            })
            .collect();
        Ok(LinkDiagram::from_words(components).expect("reversal preserves validity"))
    }

    /// Reverses every component whose flag is set.
    pub fn with_orientation(&self, reversed: &[bool]) -> Result<LinkDiagram> {
        let mut out = self.clone();
        for (index, _) in reversed.iter().enumerate().filter(|(_, r)| **r) {
            out = out.reverse_component(index)?;
        }
        Ok(out)
    }

    /// The components in `selection` (kept in their original relative order)
    /// and the crossings among them.
    pub fn subdiagram(&self, selection: &[usize]) -> Result<LinkDiagram> {
        if selection.is_empty() {
            return Err(Error::EmptySelection);
        }
        let keep: BTreeSet<usize> = selection.iter().copied().collect();
        for &index in &keep {
            self.check_component(index)?;
        }
        let internal = |id: &CrossingId| {
            let c = &self.crossings[id];
            keep.contains(&c.over.component) && keep.contains(&c.under.component)
        };
        let components = keep
            .iter()
            .map(|&k| {
                self.components[k]
                    .iter()
                    .filter(|p| internal(&p.crossing))
                    .copied()
                    .collect()
            })
            .collect();
        LinkDiagram::from_words(components)
    }

    /// Crossing changes at the given crossings: over and under swap, sign flips.
    pub fn change_crossings(&self, ids: &BTreeSet<CrossingId>) -> LinkDiagram {
        let components = self
            .components
            .iter()
            .map(|word| {
                word.iter()
                    .map(|p| {
                        if ids.contains(&p.crossing) {
                            Passage {
                                crossing: p.crossing,
                                strand: p.strand.flip(),
                                sign: p.sign.flip(),
                            }
                        } else {
                            *p
                        }
                    })
                    .collect()
            })
            .collect();
        LinkDiagram::from_words(components).expect("crossing change preserves validity")
    }

    /// Sum of crossing signs over the crossings of `i` with `j` where `i` is under.
    pub fn under_sign_sum(&self, i: usize, j: usize) -> i64 {
        self.pair_crossings(i, j)
            .filter(|c| c.under.component == i)
            .map(|c| c.sign.value())
            .sum()
    }

    /// True when every pair of components has equal signed sums over the
    /// under-crossings of either side, as every planar diagram does.
    pub fn is_linking_consistent(&self) -> bool {
        !self
            .warnings()
            .iter()
            .any(|w| matches!(w, Warning::InconsistentLinking { .. }))
    }

    pub fn warnings(&self) -> Vec<Warning> {
        let mut out = Vec::new();
        let lc = self.linking_crossing_count();
        if lc % 2 == 1 {
            out.push(Warning::OddLinkingCrossings { count: lc });
        }
        let r = self.component_count();
        for i in 0..r {
            for j in i + 1..r {
                let (a, b) = (self.under_sign_sum(i, j), self.under_sign_sum(j, i));
                if a != b {
                    out.push(Warning::InconsistentLinking {
                        first: i,
                        second: j,
                        first_under_sum: a,
                        second_under_sum: b,
                    });
                }
            }
        }
        out
    }
}

impl FromStr for LinkDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LinkDiagram::parse(s)
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_token(token: &str) -> Option<Passage> {
    let mut chars = token.chars();
    let strand = match chars.next()? {
        'O' | 'o' => Strand::Over,
        'U' | 'u' => Strand::Under,
        _ => return None,
    };
    let rest = chars.as_str();
    let (digits, sign) = rest.split_at(rest.len().checked_sub(1)?);
    let sign = match sign {
        "+" => Sign::Positive,
        "-" => Sign::Negative,
        _ => return None,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let id: u32 = digits.parse().ok()?;
    (id > 0).then(|| Passage::new(id, strand, sign))
}

#[derive(Serialize, Deserialize)]
struct JsonDiagram {
    components: Vec<Vec<JsonPassage>>,
}

#[derive(Serialize, Deserialize)]
struct JsonPassage {
    o: bool,
    id: u32,
    sign: i64,
}
