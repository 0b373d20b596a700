//! Positive roots of `A_{n-1}` and rook placements built from them.
//!
//! A root `ε_j − ε_i` with `i > j` is written as the pair `(i, j)`: `i` is its
//! row and `j` its column on the strictly lower-triangular `n × n` board.
//! Indices are 1-based throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on the number of placements an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// A positive root `(row, col)` with `row > col >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    row: usize,
    col: usize,
}

impl Root {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if col < 1 || row <= col {
            return Err(Error::InvalidRoot { row, col });
        }
        Ok(Root { row, col })
    }

    #[inline]
    pub fn row(self) -> usize {
        self.row
    }

    #[inline]
    pub fn col(self) -> usize {
        self.col
    }

    /// Root order: `self <= other` iff `other - self` is a sum of positive
    /// roots, i.e. `other.row >= self.row` and `other.col <= self.col`.
    #[inline]
    pub fn root_le(self, other: Root) -> bool {
        other.row >= self.row && other.col <= self.col
    }

    /// Strict root order.
    #[inline]
    pub fn root_lt(self, other: Root) -> bool {
        self != other && self.root_le(other)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parse_err = |reason: &str| Error::Parse {
            token: s.trim().to_string(),
            reason: reason.to_string(),
        };
        let (row, col) = cleaned
            .split_once(',')
            .ok_or_else(|| parse_err("expected \"i,j\""))?;
        let row: usize = row
            .parse()
            .map_err(|_| parse_err("row is not a positive integer"))?;
        let col: usize = col
            .parse()
            .map_err(|_| parse_err("column is not a positive integer"))?;
        Root::new(row, col)
    }
}

/// Whether a placement ranges over all of `R(n)` or only the orthogonal ones `I(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    General,
    Orthogonal,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::General => "general",
            Kind::Orthogonal => "orthogonal",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" | "R" => Ok(Kind::General),
            "orthogonal" | "I" => Ok(Kind::Orthogonal),
            other => Err(Error::Parse {
                token: other.to_string(),
                reason: "expected \"general\" or \"orthogonal\"".to_string(),
            }),
        }
    }
}

/// A set of pairwise non-attacking roots in `A_{n-1}`, stored in canonical
/// (ascending `(row, col)`) order together with its ambient `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "PlacementJson", try_from = "PlacementJson")]
pub struct RookPlacement {
    n: usize,
    roots: Vec<Root>,
}

#[derive(Serialize, Deserialize)]
struct PlacementJson {
    n: usize,
    roots: Vec<[usize; 2]>,
}

impl From<RookPlacement> for PlacementJson {
    fn from(d: RookPlacement) -> Self {
        PlacementJson {
            n: d.n,
            roots: d.roots.iter().map(|r| [r.row, r.col]).collect(),
        }
    }
}

impl TryFrom<PlacementJson> for RookPlacement {
    type Error = Error;

    fn try_from(json: PlacementJson) -> Result<Self> {
        let roots = json
            .roots
            .iter()
            .map(|&[i, j]| Root::new(i, j))
            .collect::<Result<Vec<_>>>()?;
        RookPlacement::new(json.n, roots)
    }
}

impl RookPlacement {
    /// Validates `roots` as a rook placement in `A_{n-1}`.
    pub fn new(n: usize, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let mut roots: Vec<Root> = roots.into_iter().collect();
        roots.sort_unstable();
        roots.dedup();
        if let Some(&bad) = roots.iter().find(|r| r.row > n) {
            return Err(Error::OutOfRange { root: bad, n });
        }
        for (a, &first) in roots.iter().enumerate() {
            for &second in &roots[a + 1..] {
                if first.row == second.row {
                    return Err(Error::Attack {
                        first,
                        second,
                        line: "row",
                    });
                }
                if first.col == second.col {
                    return Err(Error::Attack {
                        first,
                        second,
                        line: "column",
                    });
                }
            }
        }
        Ok(RookPlacement { n, roots })
    }

    pub fn empty(n: usize) -> Self {
        RookPlacement {
            n,
            roots: Vec::new(),
        }
    }

    /// Parses the semicolon-separated text format, e.g. `"3,1;6,2;5,3"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        RookPlacement::new(n, parse_roots(text)?)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let roots = pairs
            .iter()
            .map(|&(i, j)| Root::new(i, j))
            .collect::<Result<Vec<_>>>()?;
        RookPlacement::new(n, roots)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: Root) -> bool {
        self.roots.binary_search(&root).is_ok()
    }

    /// `D ∩ R_k ≠ ∅`.
    pub fn row_occupied(&self, k: usize) -> bool {
        self.roots.iter().any(|r| r.row == k)
    }

    /// `D ∩ C_k ≠ ∅`.
    pub fn col_occupied(&self, k: usize) -> bool {
        self.roots.iter().any(|r| r.col == k)
    }

    /// `D ∩ (R_k ∪ C_k) ≠ ∅`.
    pub fn index_used(&self, k: usize) -> bool {
        self.roots.iter().any(|r| r.row == k || r.col == k)
    }

    /// True iff all `2·|D|` row and column indices are pairwise distinct.
    pub fn is_orthogonal(&self) -> bool {
        self.first_shared_index().is_none()
    }

    pub(crate) fn first_shared_index(&self) -> Option<usize> {
        let mut seen = vec![false; self.n + 1];
        for r in &self.roots {
            for k in [r.row, r.col] {
                if seen[k] {
                    return Some(k);
                }
                seen[k] = true;
            }
        }
        None
    }

    pub fn require_orthogonal(&self) -> Result<()> {
        match self.first_shared_index() {
            None => Ok(()),
            Some(index) => Err(Error::NotOrthogonal { index }),
        }
    }

    pub fn kind(&self) -> Kind {
        if self.is_orthogonal() {
            Kind::Orthogonal
        } else {
            Kind::General
        }
    }

    /// `(D \ remove) ∪ add`, validated.
    pub fn replace(&self, remove: &[Root], add: &[Root]) -> Result<Self> {
        let kept = self.roots.iter().copied().filter(|r| !remove.contains(r));
        RookPlacement::new(self.n, kept.chain(add.iter().copied()))
    }

    /// The same roots viewed in a different ambient size.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        RookPlacement::new(n, self.roots.iter().copied())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("placement serializes")
    }
}

impl fmt::Display for RookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_roots(f, &self.roots)
    }
}

/// Writes roots in the text exchange format (`i,j` pairs joined by `;`).
pub fn format_roots(roots: &[Root]) -> String {
    roots
        .iter()
        .map(Root::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn write_roots(f: &mut fmt::Formatter<'_>, roots: &[Root]) -> fmt::Result {
    for (k, r) in roots.iter().enumerate() {
        if k > 0 {
            f.write_str(";")?;
        }
        write!(f, "{r}")?;
    }
    Ok(())
}

/// Parses roots in input order without validating them as a placement.
pub fn parse_roots(text: &str) -> Result<Vec<Root>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .filter(|tok| !tok.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// Number of elements of `R(n)` (Bell numbers) or `I(n)` (involution counts).
pub fn placement_count(n: usize, kind: Kind) -> u128 {
    match kind {
        Kind::General => {
            // Bell triangle.
            let mut row = vec![1u128];
            for _ in 1..n.max(1) {
                let mut next = Vec::with_capacity(row.len() + 1);
                next.push(*row.last().unwrap());
                for &x in &row {
                    let prev = *next.last().unwrap();
                    next.push(prev.saturating_add(x));
                }
                row = next;
            }
            *row.last().unwrap()
        }
        Kind::Orthogonal => {
            let (mut a, mut b) = (1u128, 1u128);
            for k in 2..=n {
                let c = b.saturating_add(((k - 1) as u128).saturating_mul(a));
                a = b;
                b = c;
            }
            b
        }
    }
}

/// Every placement of the given kind in `A_{n-1}`, sorted by their root sequences.
pub fn enumerate_placements(n: usize, kind: Kind) -> Result<Vec<RookPlacement>> {
    enumerate_placements_capped(n, kind, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_placements_capped(n: usize, kind: Kind, cap: u128) -> Result<Vec<RookPlacement>> {
    if n < 1 {
        return Err(Error::Domain("enumeration needs n >= 1".into()));
    }
    let count = placement_count(n, kind);
    if count > cap {
        return Err(Error::TooLarge { count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut used = vec![false; n + 1];
    let mut stack = Vec::new();
    place_rows(n, 2, kind, &mut used, &mut stack, &mut out);
    out.sort_unstable();
    Ok(out)
}

// Rows are filled in ascending order, so any index > row is still unused when
// `row` is processed; `used` marks columns (and rows too, for orthogonal).
fn place_rows(
    n: usize,
    row: usize,
    kind: Kind,
    used: &mut [bool],
    stack: &mut Vec<Root>,
    out: &mut Vec<RookPlacement>,
) {
    if row > n {
        out.push(RookPlacement {
            n,
            roots: stack.clone(),
        });
        return;
    }
    place_rows(n, row + 1, kind, used, stack, out);
    if kind == Kind::Orthogonal && used[row] {
        return;
    }
    for col in 1..row {
        if used[col] {
            continue;
        }
        used[col] = true;
        if kind == Kind::Orthogonal {
            used[row] = true;
        }
        stack.push(Root { row, col });
        place_rows(n, row + 1, kind, used, stack, out);
        stack.pop();
        used[col] = false;
        if kind == Kind::Orthogonal {
            used[row] = false;
        }
    }
}

/// Symbol used for rooks when drawing a board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoardStyle {
    #[default]
    Ascii,
    Unicode,
}

/// Draws `D` on the `n × n` chessboard: one line per row, a rook at `(row, col)`.
pub fn render_board(d: &RookPlacement, style: BoardStyle) -> String {
    let rook = match style {
        BoardStyle::Ascii => 'X',
        BoardStyle::Unicode => '⊗',
    };
    let mut out = String::new();
    for i in 1..=d.n {
        let line: Vec<String> = (1..=d.n)
            .map(|j| {
                if d.roots.iter().any(|r| r.row == i && r.col == j) {
                    rook.to_string()
                } else {
                    ".".to_string()
                }
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
