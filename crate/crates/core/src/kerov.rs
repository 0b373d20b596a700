//! The Kerov map `R(n) → I(2n−2)` and the rank functions on both posets.

use crate::error::{Error, Result};
use crate::moves::{predecessors_general, predecessors_orthogonal};
use crate::order::{inversion_length, involution_of, leq_placement, Permutation};
use crate::roots::{RookPlacement, Root};

/// Image of a single root: `(i, j) ↦ (2i − 2, 2j − 1)`.
pub fn kerov_root(r: Root) -> Root {
    Root::new(2 * r.row() - 2, 2 * r.col() - 1).expect("2i-2 > 2j-1 whenever i > j")
}

/// `K(D)`, an orthogonal placement in ambient `2n − 2`. Defined for `n >= 2`.
pub fn kerov_map(d: &RookPlacement) -> Result<RookPlacement> {
    if d.n() < 2 {
        return Err(Error::Domain(format!(
            "the Kerov map needs n >= 2, got n = {}",
            d.n()
        )));
    }
    let image = RookPlacement::new(2 * d.n() - 2, d.roots().iter().map(|&r| kerov_root(r)))?;
    debug_assert!(image.is_orthogonal());
    Ok(image)
}

/// Source and image of the Kerov map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KerovImage {
    pub source: RookPlacement,
    pub image: RookPlacement,
}

impl KerovImage {
    pub fn of(d: &RookPlacement) -> Result<Self> {
        Ok(KerovImage {
            source: d.clone(),
            image: kerov_map(d)?,
        })
    }

    pub fn involution(&self) -> Permutation {
        involution_of(&self.image).expect("Kerov images are orthogonal")
    }

    /// Even rows, odd columns.
    pub fn has_kerov_shape(&self) -> bool {
        self.image
            .roots()
            .iter()
            .all(|r| r.row() % 2 == 0 && r.col() % 2 == 1)
    }
}

fn same_n(a: &RookPlacement, b: &RookPlacement) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::Mismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// `T <= D` iff `K(T) <= K(D)`; returns whether the two sides agree.
pub fn check_order_preservation(t: &RookPlacement, d: &RookPlacement) -> Result<bool> {
    same_n(t, d)?;
    let direct = leq_placement(t, d)?;
    let mapped = leq_placement(&kerov_map(t)?, &kerov_map(d)?)?;
    Ok(direct == mapped)
}

/// `T` is an immediate predecessor of `D` iff `K(T)` is one of `K(D)`;
/// returns whether the two sides agree.
pub fn check_cover_preservation(t: &RookPlacement, d: &RookPlacement) -> Result<bool> {
    same_n(t, d)?;
    let direct = predecessors_general(d).contains(t);
    let mapped = predecessors_orthogonal(&kerov_map(d)?)?.contains(&kerov_map(t)?);
    Ok(direct == mapped)
}

fn halve(numerator: usize, d: &RookPlacement) -> Result<usize> {
    if !numerator.is_multiple_of(2) {
        return Err(Error::Parity {
            numerator,
            placement: d.to_string(),
        });
    }
    Ok(numerator / 2)
}

/// `ρ(D) = (l(w_{K(D)}) + |D|) / 2` on `R(n)`.
pub fn rank_general(d: &RookPlacement) -> Result<usize> {
    let w = involution_of(&kerov_map(d)?)?;
    halve(inversion_length(&w) + d.len(), d)
}

/// `ρ(D) = (l(w_D) + |D|) / 2` on `I(n)`.
pub fn rank_orthogonal(d: &RookPlacement) -> Result<usize> {
    let w = involution_of(d)?;
    halve(inversion_length(&w) + d.len(), d)
}
