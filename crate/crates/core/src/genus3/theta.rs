//! Theta characteristics as vectors of `F₂^{2g}`, with parity given by the
//! refinement `q₀(x) = Σ xᵢx_{g+i}` of the standard symplectic form.
//!
//! A vector is stored as a bitmask: bit `i` is coordinate `i`, the first `g`
//! bits are the `a` half and the next `g` the `b` half.

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const MAX_THETA_GENUS: u32 = 6;
pub const MAX_PLANE_GENUS: u32 = 5;

fn half_mask(g: u32) -> u64 {
    (1u64 << g) - 1
}

/// `⟨x, y⟩ = Σ xᵢy_{g+i} + x_{g+i}yᵢ`.
pub fn symplectic(g: u32, x: u64, y: u64) -> u32 {
    let m = half_mask(g);
    (((x & m) & (y >> g)).count_ones() + ((x >> g) & (y & m)).count_ones()) & 1
}

pub fn reference_form(g: u32, x: u64) -> u32 {
    ((x & half_mask(g)) & (x >> g)).count_ones() & 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaChar {
    genus: u32,
    bits: u64,
}

impl ThetaChar {
    pub fn new(genus: u32, bits: u64) -> Result<Self> {
        if genus == 0 || genus > 31 {
            return Err(Error::invalid(format!("genus {genus} out of range")));
        }
        if bits >> (2 * genus) != 0 {
            return Err(Error::invalid(format!(
                "vector {bits:#b} does not fit in F2^{}",
                2 * genus
            )));
        }
        Ok(ThetaChar { genus, bits })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn parity(&self) -> Parity {
        if reference_form(self.genus, self.bits) == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Parity from the Arf invariant of `x ↦ q₀(x) + ⟨v, x⟩`, found by
    /// counting its zeros over all of `F₂^{2g}`.
    pub fn arf_parity(&self) -> Parity {
        let g = self.genus;
        let zeros = (0..1u64 << (2 * g))
            .filter(|&x| (reference_form(g, x) + symplectic(g, self.bits, x)) & 1 == 0)
            .count() as u64;
        if zeros == (1 << (g - 1)) * ((1 << g) + 1) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaCounts {
    pub total: u64,
    pub even: u64,
    pub odd: u64,
}

/// Enumerates every characteristic and classifies it by its Arf invariant.
pub fn count_theta_chars(g: u32) -> Result<ThetaCounts> {
    if g == 0 || g > MAX_THETA_GENUS {
        return Err(Error::invalid(format!(
            "genus must be in 1..={MAX_THETA_GENUS}"
        )));
    }
    let total = 1u64 << (2 * g);
    let odd = (0..total)
        .into_par_iter()
        .filter(|&v| ThetaChar { genus: g, bits: v }.arf_parity() == Parity::Odd)
        .count() as u64;
    Ok(ThetaCounts {
        total,
        even: total - odd,
        odd,
    })
}

/// Number of isotropic 2-planes `{0, x, y, x+y}` in `F₂^{2g}`, each counted
/// once via `x < y < x+y`.
pub fn count_isotropic_planes(g: u32) -> Result<u64> {
    if g == 0 || g > MAX_PLANE_GENUS {
        return Err(Error::invalid(format!(
            "genus must be in 1..={MAX_PLANE_GENUS}"
        )));
    }
    let n = 1u64 << (2 * g);
    Ok((1..n)
        .into_par_iter()
        .map(|x| {
            (x + 1..n)
                .filter(|&y| (x ^ y) > y && symplectic(g, x, y) == 0)
                .count() as u64
        })
        .sum())
}

/// Four characteristics summing to zero whose differences span an
/// isotropic plane.
pub fn check_syzygetic(chars: &[ThetaChar]) -> Result<bool> {
    if chars.len() != 4 {
        return Err(Error::invalid(format!(
            "a tetrad has 4 characteristics, got {}",
            chars.len()
        )));
    }
    let g = chars[0].genus;
    if chars.iter().any(|c| c.genus != g) {
        return Err(Error::invalid("characteristics of different genus"));
    }
    if chars.iter().fold(0, |acc, c| acc ^ c.bits) != 0 {
        return Ok(false);
    }
    let d: Vec<u64> = chars[1..].iter().map(|c| c.bits ^ chars[0].bits).collect();
    if span_dim(&d) != 2 {
        return Ok(false);
    }
    Ok(d.iter()
        .all(|&x| d.iter().all(|&y| symplectic(g, x, y) == 0)))
}

fn span_dim(v: &[u64]) -> u32 {
    let mut basis: Vec<u64> = Vec::new();
    for &x in v {
        let mut r = x;
        for &b in &basis {
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len() as u32
}
