//! The linking matrix of a based link diagram and the search over component
//! orders that it supports.
//!
//! Rows and columns are indexed by rank in the base sequence's order. An
//! off-diagonal entry `(i, j)` counts the crossings of the `i`-th and `j`-th
//! components at which the `i`-th is under; the diagonal holds each
//! component's own (minimal) warping degree. The linking warping degree of
//! the order is the strict upper-triangular sum, and swapping two adjacent
//! components is conjugation by the corresponding transposition.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::normalize::component_degree;
use crate::warping::{BaseSequence, Limits};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinkingMatrix {
    size: usize,
    entries: Vec<u64>,
}

impl LinkingMatrix {
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let size = rows.len();
        if let Some(bad) = rows.iter().position(|row| row.len() != size) {
            return Err(Error::InvalidMatrix(format!(
                "row {} has {} entries, expected {}",
                bad + 1,
                rows[bad].len(),
                size
            )));
        }
        Ok(LinkingMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(size: usize) -> Self {
        LinkingMatrix {
            size,
            entries: vec![0; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.size + j]
    }

    fn set(&mut self, i: usize, j: usize, value: u64) {
        self.entries[i * self.size + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries
            .chunks(self.size.max(1))
            .map(<[u64]>::to_vec)
            .take(self.size)
            .collect()
    }

    /// `P_k M P_k^{-1}` for the transposition of ranks `k` and `k + 1` (0-based).
    pub fn conjugate(&self, k: usize) -> Result<Self> {
        if k + 1 >= self.size {
            return Err(Error::TranspositionOutOfRange {
                index: k,
                size: self.size,
            });
        }
        let mut out = self.clone();
        out.swap_in_place(k);
        Ok(out)
    }

    fn swap_in_place(&mut self, k: usize) {
        let n = self.size;
        for j in 0..n {
            self.entries.swap(k * n + j, (k + 1) * n + j);
        }
        for i in 0..n {
            self.entries.swap(i * n + k, i * n + k + 1);
        }
    }

    /// The matrix with rows and columns rearranged so that new rank `p` is old rank `perm[p]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = LinkingMatrix::zeros(self.size);
        for (p, &i) in perm.iter().enumerate() {
            for (q, &j) in perm.iter().enumerate() {
                out.set(p, q, self.get(i, j));
            }
        }
        out
    }

    /// Linking warping degree of the order: sum of entries strictly above the diagonal.
    pub fn upper_sum(&self) -> u64 {
        (0..self.size)
            .flat_map(|i| (i + 1..self.size).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .sum()
    }

    /// Warping degree: sum of entries on or above the diagonal.
    pub fn upper_sum_with_diagonal(&self) -> u64 {
        self.upper_sum() + (0..self.size).map(|i| self.get(i, i)).sum::<u64>()
    }

    pub fn off_diagonal_sum(&self) -> u64 {
        self.entries.iter().sum::<u64>() - (0..self.size).map(|i| self.get(i, i)).sum::<u64>()
    }

    fn cost(&self, perm: &[usize]) -> u64 {
        perm.iter()
            .enumerate()
            .map(|(p, &i)| perm[p + 1..].iter().map(|&j| self.get(i, j)).sum::<u64>())
            .sum()
    }
}

impl FromStr for LinkingMatrix {
    type Err = Error;

    /// Rows separated by `;` or newlines, entries by whitespace or commas.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split([';', '\n'])
            .map(str::trim)
            .filter(|row| !row.is_empty())
            .map(|row| {
                row.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<u64>()
                            .map_err(|_| Error::InvalidMatrix(format!("bad entry `{t}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        LinkingMatrix::from_rows(rows)
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows().iter().map(|r| r.iter().join(" ")).collect();
        f.write_str(&rows.join("; "))
    }
}

/// `M(D_a)`. Off-diagonal entries depend only on the order of `base`.
pub fn build_matrix(diagram: &LinkDiagram, base: &BaseSequence) -> Result<LinkingMatrix> {
    base.validate(diagram)?;
    let order = base.order();
    let r = order.len();
    let mut m = LinkingMatrix::zeros(r);
    for (p, &i) in order.iter().enumerate() {
        for (q, &j) in order.iter().enumerate() {
            let value = if p == q {
                component_degree(diagram, i)?
            } else {
                diagram.under_count(i, j)
            };
            m.set(p, q, value as u64);
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixMinimum {
    pub value: u64,
    /// New rank `p` holds old rank `permutation[p]`.
    pub permutation: Vec<usize>,
}

fn check_size(m: &LinkingMatrix, limits: &Limits) -> Result<()> {
    if m.size() > limits.max_components {
        Err(Error::TooManyComponents {
            count: m.size(),
            max: limits.max_components,
        })
    } else {
        Ok(())
    }
}

/// Minimal upper-triangular sum over all simultaneous row/column
/// permutations, by direct enumeration. Ties go to the lexicographically
/// smallest permutation.
pub fn ld_min_matrix(m: &LinkingMatrix) -> Result<MatrixMinimum> {
    ld_min_matrix_with(m, &Limits::default())
}

pub fn ld_min_matrix_with(m: &LinkingMatrix, limits: &Limits) -> Result<MatrixMinimum> {
    check_size(m, limits)?;
    let n = m.size();
    let mut best = MatrixMinimum {
        value: u64::MAX,
        permutation: (0..n).collect(),
    };
    for perm in (0..n).permutations(n) {
        let value = m.cost(&perm);
        if value < best.value {
            best = MatrixMinimum {
                value,
                permutation: perm,
            };
        }
    }
    if n == 0 {
        best.value = 0;
    }
    Ok(best)
}

/// Choice vectors `k = (k_1, ..., k_{r-1})` with `n <= k_n <= r` (1-based).
/// `k_n = r` stands for the identity factor.
pub fn transposition_choices(r: usize) -> Vec<Vec<usize>> {
    if r < 2 {
        return vec![Vec::new()];
    }
    (1..r).map(|n| n..=r).multi_cartesian_product().collect()
}

/// The sequence of adjacent transpositions (0-based `k`) that
/// `Q_k = P^{r-1} ... P^1` applies to `M`, first conjugation first, where
/// `P^n = P_n P_{n+1} ... P_{k_n}`.
pub fn transposition_sequence(choice: &[usize]) -> Vec<usize> {
    let r = choice.len() + 1;
    let mut seq = Vec::new();
    for (idx, &k_n) in choice.iter().enumerate() {
        let n = idx + 1;
        if k_n < r {
            seq.extend((n..=k_n).rev().map(|k| k - 1));
        }
    }
    seq
}

/// Walks every `Q_k` product, updating the linking warping degree one
/// transposition at a time with `ld' = ld - m[k][k+1] + m[k+1][k]`.
pub fn ld_min_by_transpositions(m: &LinkingMatrix) -> Result<MatrixMinimum> {
    ld_min_by_transpositions_with(m, &Limits::default())
}

pub fn ld_min_by_transpositions_with(m: &LinkingMatrix, limits: &Limits) -> Result<MatrixMinimum> {
    check_size(m, limits)?;
    let n = m.size();
    let start = m.upper_sum();
    let mut best = MatrixMinimum {
        value: start,
        permutation: (0..n).collect(),
    };
    for choice in transposition_choices(n) {
        let mut current = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut value = start as i64;
        for k in transposition_sequence(&choice) {
            value += current.get(k + 1, k) as i64 - current.get(k, k + 1) as i64;
            current.swap_in_place(k);
            perm.swap(k, k + 1);
        }
        let value = value as u64;
        if value < best.value || (value == best.value && perm < best.permutation) {
            best = MatrixMinimum {
                value,
                permutation: perm,
            };
        }
    }
    Ok(best)
}

/// The permutations reached by all `Q_k` products.
pub fn transposition_products(r: usize) -> Vec<Vec<usize>> {
    transposition_choices(r)
        .into_iter()
        .map(|choice| {
            let mut perm: Vec<usize> = (0..r).collect();
            for k in transposition_sequence(&choice) {
                perm.swap(k, k + 1);
            }
            perm
        })
        .collect()
}
