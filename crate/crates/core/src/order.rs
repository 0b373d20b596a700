//! The rank-matrix partial order on placements, the root order, and the
//! permutation side (`w_D`, inversion length, Bruhat comparison).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{RookPlacement, Root};

/// Dense `n × n` matrix `R_D`: entry `(i, j)` with `i > j` counts the roots
/// `(r, c) ∈ D` with `c <= j` and `r >= i`; all other entries are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl RankMatrix {
    pub fn of(d: &RookPlacement) -> Self {
        let n = d.n();
        let mut entries = vec![0u32; n * n];
        for root in d.roots() {
            // Every (i, j) with i <= row, j >= col and i > j gets one.
            for i in 2..=root.row() {
                for j in root.col()..i {
                    entries[(i - 1) * n + (j - 1)] += 1;
                }
            }
        }
        RankMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based access.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[u32]>::to_vec)
            .collect()
    }

    /// Entrywise `self <= other`.
    pub fn dominated_by(&self, other: &RankMatrix) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::Mismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&x| u64::from(x)).sum()
    }
}

impl Serialize for RankMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn r_matrix(d: &RookPlacement) -> RankMatrix {
    RankMatrix::of(d)
}

/// `D1 <= D2` iff `R_{D1} <= R_{D2}` entrywise.
pub fn leq_placement(d1: &RookPlacement, d2: &RookPlacement) -> Result<bool> {
    RankMatrix::of(d1).dominated_by(&RankMatrix::of(d2))
}

pub fn root_leq(a: Root, b: Root) -> bool {
    a.root_le(b)
}

/// Roots of `D` that are minimal in the root order.
pub fn minimal_roots(d: &RookPlacement) -> Vec<Root> {
    d.roots()
        .iter()
        .copied()
        .filter(|&r| !d.roots().iter().any(|&p| p.root_lt(r)))
        .collect()
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x < 1 || x > n || seen[x] {
                return Err(Error::Domain(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(k)`, 1-based.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// Swaps the values at positions `a` and `b`, i.e. `w ↦ w · (a b)`.
    pub fn swap_positions(&mut self, a: usize, b: usize) {
        self.images.swap(a - 1, b - 1);
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&k| self.apply(k)).collect(),
        }
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &x)| self.images[x - 1] == k + 1)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.images.iter().map(usize::to_string).collect();
        write!(f, "[{}]", cells.join(","))
    }
}

/// `w_D`, the product of the transpositions `(i, j)` over the roots of an
/// orthogonal placement.
pub fn involution_of(d: &RookPlacement) -> Result<Permutation> {
    d.require_orthogonal()?;
    let mut w = Permutation::identity(d.n());
    for r in d.roots() {
        w.swap_positions(r.row(), r.col());
    }
    Ok(w)
}

/// Number of pairs `a < b` with `w(a) > w(b)`.
pub fn inversion_length(w: &Permutation) -> usize {
    let v = w.images();
    (0..v.len())
        .map(|a| v[a + 1..].iter().filter(|&&x| x < v[a]).count())
        .sum()
}

// counts[i][j] = #{k <= i : w(k) <= j}, 0-based with a zero border.
fn rank_counts(w: &Permutation) -> Vec<Vec<u32>> {
    let n = w.n();
    let mut counts = vec![vec![0u32; n + 1]; n + 1];
    for i in 1..=n {
        let wi = w.apply(i);
        let (above, row) = counts.split_at_mut(i);
        for (j, (cell, &prev)) in row[0].iter_mut().zip(&above[i - 1]).enumerate().skip(1) {
            *cell = prev + u32::from(wi <= j);
        }
    }
    counts
}

/// Bruhat order via dominance of rank functions:
/// `u <= v` iff `#{k <= i : u(k) <= j} >= #{k <= i : v(k) <= j}` for all `i, j`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::Mismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let (cu, cv) = (rank_counts(u), rank_counts(v));
    Ok(cu
        .iter()
        .zip(&cv)
        .all(|(ru, rv)| ru.iter().zip(rv).all(|(a, b)| a >= b)))
}
