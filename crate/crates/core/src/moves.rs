//! Immediate predecessors of a placement, generated by explicit move families.
//!
//! For `R(n)` the predecessors of `D` are the union of
//! * removals of minimal roots whose strip `j < k < i` is full in rows and columns,
//! * slides of one rook to the right or upward,
//! * crosses of two comparable rooks `(i,j) < (α,β)` into `(i,β), (α,j)`,
//! * splits of one rook `(i,j)` into `(i,β), (α,j)`.
//!
//! For `I(n)` the conditions use the union `R_k ∪ C_k` instead of separate
//! rows and columns, and there is an extra interleaved cross family.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::order::minimal_roots;
use crate::roots::{format_roots, Kind, RookPlacement, Root};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Remove,
    SlideRight,
    SlideUp,
    CrossGeneral,
    CrossOrthogonal,
    SplitGeneral,
    SplitOrthogonal,
}

impl MoveKind {
    /// Change in `|D|` caused by a move of this kind.
    pub fn size_delta(self) -> isize {
        match self {
            MoveKind::Remove => -1,
            MoveKind::SlideRight
            | MoveKind::SlideUp
            | MoveKind::CrossGeneral
            | MoveKind::CrossOrthogonal => 0,
            MoveKind::SplitGeneral | MoveKind::SplitOrthogonal => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::Remove => "remove",
            MoveKind::SlideRight => "slide_right",
            MoveKind::SlideUp => "slide_up",
            MoveKind::CrossGeneral => "cross_general",
            MoveKind::CrossOrthogonal => "cross_orthogonal",
            MoveKind::SplitGeneral => "split_general",
            MoveKind::SplitOrthogonal => "split_orthogonal",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One application of a move family: `result = (D \ source) ∪ target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverMove {
    pub kind: MoveKind,
    pub source: Vec<Root>,
    pub target: Vec<Root>,
    pub result: RookPlacement,
}

impl CoverMove {
    fn build(d: &RookPlacement, kind: MoveKind, source: Vec<Root>, target: Vec<Root>) -> Self {
        let result = d
            .replace(&source, &target)
            .unwrap_or_else(|e| panic!("{kind} move on {d} produced an invalid placement: {e}"));
        CoverMove {
            kind,
            source,
            target,
            result,
        }
    }
}

impl fmt::Display for CoverMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {} => {}",
            self.kind,
            format_roots(&self.source),
            format_roots(&self.target),
            self.result
        )
    }
}

impl Serialize for CoverMove {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            kind: MoveKind,
            source: String,
            target: String,
            result: String,
        }
        Wire {
            kind: self.kind,
            source: format_roots(&self.source),
            target: format_roots(&self.target),
            result: self.result.to_string(),
        }
        .serialize(s)
    }
}

fn root(row: usize, col: usize) -> Root {
    Root::new(row, col).expect("move targets are positive roots")
}

/// No `p ∈ D` with `p < from` and `p ≮ to`.
fn nothing_escapes(d: &RookPlacement, from: Root, to: Root) -> bool {
    d.roots()
        .iter()
        .all(|&p| !(p.root_lt(from) && !p.root_lt(to)))
}

/// Every `p ∈ D` with `p < (i,j)` and `p ≮ (α,j)` satisfies `p < (i,β)`.
fn split_implication(d: &RookPlacement, ij: Root, alpha_j: Root, i_beta: Root) -> bool {
    d.roots()
        .iter()
        .all(|&p| !(p.root_lt(ij) && !p.root_lt(alpha_j)) || p.root_lt(i_beta))
}

// ---------------------------------------------------------------------------
// R(n)
// ---------------------------------------------------------------------------

/// `M_R(D)`: minimal roots `(i,j)` with every row and column `j < k < i` occupied.
pub fn removal_candidates_general(d: &RookPlacement) -> Vec<Root> {
    minimal_roots(d)
        .into_iter()
        .filter(|r| (r.col() + 1..r.row()).all(|k| d.row_occupied(k) && d.col_occupied(k)))
        .collect()
}

pub fn removal_moves_general(d: &RookPlacement) -> Vec<CoverMove> {
    removal_candidates_general(d)
        .into_iter()
        .map(|r| CoverMove::build(d, MoveKind::Remove, vec![r], vec![]))
        .collect()
}

pub fn slide_right_general(d: &RookPlacement) -> Vec<CoverMove> {
    let mut moves = Vec::new();
    for &r in d.roots() {
        let (i, j) = (r.row(), r.col());
        let Some(m) = (j + 1..i).find(|&k| !d.col_occupied(k)) else {
            continue;
        };
        if !(j + 1..=m).all(|k| d.row_occupied(k)) {
            continue;
        }
        let to = root(i, m);
        if nothing_escapes(d, r, to) {
            moves.push(CoverMove::build(d, MoveKind::SlideRight, vec![r], vec![to]));
        }
    }
    moves
}

pub fn slide_up_general(d: &RookPlacement) -> Vec<CoverMove> {
    let mut moves = Vec::new();
    for &r in d.roots() {
        let (i, j) = (r.row(), r.col());
        let Some(m) = (j + 1..i).rev().find(|&k| !d.row_occupied(k)) else {
            continue;
        };
        // Columns m..i-1 must be occupied, m included (mirror of the row
        // condition j+1..=m for slides to the right).
        if !(m..i).all(|k| d.col_occupied(k)) {
            continue;
        }
        let to = root(m, j);
        if nothing_escapes(d, r, to) {
            moves.push(CoverMove::build(d, MoveKind::SlideUp, vec![r], vec![to]));
        }
    }
    moves
}

/// `B^R_{(i,j)}(D)`: roots of `D` covering `(i,j)` in the root order restricted to `D`.
pub fn cross_partners_general(d: &RookPlacement, ij: Root) -> Vec<Root> {
    d.roots()
        .iter()
        .copied()
        .filter(|&ab| ij.root_lt(ab) && !d.roots().iter().any(|&p| ij.root_lt(p) && p.root_lt(ab)))
        .collect()
}

pub fn cross_moves_general(d: &RookPlacement) -> Vec<CoverMove> {
    let mut moves = Vec::new();
    for &ij in d.roots() {
        for ab in cross_partners_general(d, ij) {
            let target = vec![root(ij.row(), ab.col()), root(ab.row(), ij.col())];
            moves.push(CoverMove::build(
                d,
                MoveKind::CrossGeneral,
                vec![ij, ab],
                target,
            ));
        }
    }
    moves
}

/// `C^R_{(i,j)}(D)` as `(α, β)` pairs.
pub fn split_pairs_general(d: &RookPlacement, ij: Root) -> Vec<(usize, usize)> {
    let (i, j) = (ij.row(), ij.col());
    let mut pairs = Vec::new();
    for alpha in j + 1..i {
        if d.row_occupied(alpha) {
            continue;
        }
        for beta in alpha..i {
            if d.col_occupied(beta) {
                continue;
            }
            if !(alpha + 1..beta).all(|k| d.row_occupied(k) && d.col_occupied(k)) {
                continue;
            }
            if alpha != beta && !(d.row_occupied(beta) && d.col_occupied(alpha)) {
                continue;
            }
            if split_implication(d, ij, root(alpha, j), root(i, beta)) {
                pairs.push((alpha, beta));
            }
        }
    }
    pairs
}

pub fn split_moves_general(d: &RookPlacement) -> Vec<CoverMove> {
    let mut moves = Vec::new();
    for &ij in d.roots() {
        for (alpha, beta) in split_pairs_general(d, ij) {
            let target = vec![root(ij.row(), beta), root(alpha, ij.col())];
            moves.push(CoverMove::build(
                d,
                MoveKind::SplitGeneral,
                vec![ij],
                target,
            ));
        }
    }
    moves
}

/// All moves producing immediate predecessors of `D` in `R(n)`.
pub fn moves_general(d: &RookPlacement) -> Vec<CoverMove> {
    let mut moves = removal_moves_general(d);
    moves.extend(slide_right_general(d));
    moves.extend(slide_up_general(d));
    moves.extend(cross_moves_general(d));
    moves.extend(split_moves_general(d));
    moves
}

/// Immediate predecessors of `D` in `R(n)`, deduplicated and sorted.
pub fn predecessors_general(d: &RookPlacement) -> Vec<RookPlacement> {
    distinct_results(moves_general(d))
}

// ---------------------------------------------------------------------------
// I(n)
// ---------------------------------------------------------------------------

/// `M_I(D)`: minimal roots `(i,j)` with every index `j < k < i` used by `D`.
pub fn removal_candidates_orthogonal(d: &RookPlacement) -> Result<Vec<Root>> {
    d.require_orthogonal()?;
    Ok(minimal_roots(d)
        .into_iter()
        .filter(|r| (r.col() + 1..r.row()).all(|k| d.index_used(k)))
        .collect())
}

pub fn removal_moves_orthogonal(d: &RookPlacement) -> Result<Vec<CoverMove>> {
    Ok(removal_candidates_orthogonal(d)?
        .into_iter()
        .map(|r| CoverMove::build(d, MoveKind::Remove, vec![r], vec![]))
        .collect())
}

pub fn slide_right_orthogonal(d: &RookPlacement) -> Result<Vec<CoverMove>> {
    d.require_orthogonal()?;
    let mut moves = Vec::new();
    for &r in d.roots() {
        let (i, j) = (r.row(), r.col());
        let Some(m) = (j + 1..i).find(|&k| !d.index_used(k)) else {
            continue;
        };
        let to = root(i, m);
        if nothing_escapes(d, r, to) {
            moves.push(CoverMove::build(d, MoveKind::SlideRight, vec![r], vec![to]));
        }
    }
    Ok(moves)
}

pub fn slide_up_orthogonal(d: &RookPlacement) -> Result<Vec<CoverMove>> {
    d.require_orthogonal()?;
    let mut moves = Vec::new();
    for &r in d.roots() {
        let (i, j) = (r.row(), r.col());
        let Some(m) = (j + 1..i).rev().find(|&k| !d.index_used(k)) else {
            continue;
        };
        let to = root(m, j);
        if nothing_escapes(d, r, to) {
            moves.push(CoverMove::build(d, MoveKind::SlideUp, vec![r], vec![to]));
        }
    }
    Ok(moves)
}

/// `B^I_{(i,j)}(D)`: roots `(α,β) ∈ D` interleaved as `j < β < i < α`.
pub fn cross_partners_orthogonal(d: &RookPlacement, ij: Root) -> Vec<Root> {
    let (i, j) = (ij.row(), ij.col());
    d.roots()
        .iter()
        .copied()
        .filter(|ab| {
            let (alpha, beta) = (ab.row(), ab.col());
            j < beta
                && beta < i
                && i < alpha
                && (beta + 1..i).all(|r| d.index_used(r))
                && !d.roots().iter().any(|&pq| {
                    // Root-order form: this also rules out arcs nested inside (β, i),
                    // which the bare inequalities j<q<β<p<i, β<q<i<p<α miss.
                    (pq.root_lt(ij) && !pq.root_lt(root(beta, j)))
                        || (pq.root_lt(*ab) && !pq.root_lt(root(alpha, i)))
                })
        })
        .collect()
}

pub fn cross_moves_orthogonal(d: &RookPlacement) -> Result<Vec<CoverMove>> {
    d.require_orthogonal()?;
    let mut moves = Vec::new();
    for &ij in d.roots() {
        for ab in cross_partners_orthogonal(d, ij) {
            let target = vec![root(ab.col(), ij.col()), root(ab.row(), ij.row())];
            moves.push(CoverMove::build(
                d,
                MoveKind::CrossOrthogonal,
                vec![ij, ab],
                target,
            ));
        }
    }
    Ok(moves)
}

/// `C^I_{(i,j)}(D)` as `(α, β)` pairs, `i > β > α > j`.
pub fn split_pairs_orthogonal(d: &RookPlacement, ij: Root) -> Vec<(usize, usize)> {
    let (i, j) = (ij.row(), ij.col());
    let mut pairs = Vec::new();
    for alpha in j + 1..i {
        if d.index_used(alpha) {
            continue;
        }
        for beta in alpha + 1..i {
            if d.index_used(beta) {
                continue;
            }
            if !(alpha + 1..beta).all(|k| d.index_used(k)) {
                continue;
            }
            if split_implication(d, ij, root(alpha, j), root(i, beta)) {
                pairs.push((alpha, beta));
            }
        }
    }
    pairs
}

pub fn split_moves_orthogonal(d: &RookPlacement) -> Result<Vec<CoverMove>> {
    d.require_orthogonal()?;
    let mut moves = Vec::new();
    for &ij in d.roots() {
        for (alpha, beta) in split_pairs_orthogonal(d, ij) {
            let target = vec![root(ij.row(), beta), root(alpha, ij.col())];
            moves.push(CoverMove::build(
                d,
                MoveKind::SplitOrthogonal,
                vec![ij],
                target,
            ));
        }
    }
    Ok(moves)
}

/// All moves producing immediate predecessors of an orthogonal `D` in `I(n)`.
pub fn moves_orthogonal(d: &RookPlacement) -> Result<Vec<CoverMove>> {
    let mut moves = removal_moves_orthogonal(d)?;
    moves.extend(slide_right_orthogonal(d)?);
    moves.extend(slide_up_orthogonal(d)?);
    moves.extend(cross_moves_general(d));
    moves.extend(cross_moves_orthogonal(d)?);
    moves.extend(split_moves_orthogonal(d)?);
    Ok(moves)
}

/// Immediate predecessors of `D` in `I(n)`, deduplicated and sorted.
pub fn predecessors_orthogonal(d: &RookPlacement) -> Result<Vec<RookPlacement>> {
    Ok(distinct_results(moves_orthogonal(d)?))
}

pub fn moves(d: &RookPlacement, kind: Kind) -> Result<Vec<CoverMove>> {
    match kind {
        Kind::General => Ok(moves_general(d)),
        Kind::Orthogonal => moves_orthogonal(d),
    }
}

pub fn predecessors(d: &RookPlacement, kind: Kind) -> Result<Vec<RookPlacement>> {
    match kind {
        Kind::General => Ok(predecessors_general(d)),
        Kind::Orthogonal => predecessors_orthogonal(d),
    }
}

fn distinct_results(moves: Vec<CoverMove>) -> Vec<RookPlacement> {
    let mut out: Vec<RookPlacement> = moves.into_iter().map(|m| m.result).collect();
    out.sort_unstable();
    out.dedup();
    out
}
