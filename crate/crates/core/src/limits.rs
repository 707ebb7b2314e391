use crate::error::{Error, Result};

/// Size guards for the exhaustive operations.
///
/// The defaults keep every operation at desk scale. Callers that know their
/// inputs are small but oddly shaped can raise them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted group order.
    pub group_order: usize,
    /// Candidate generator assignments tried by homomorphism enumeration.
    pub hom_candidates: u128,
    /// Candidate maps (`|Y|^|X|`) for continuous-map enumeration.
    pub map_candidates: u128,
    /// Largest carrier produced by a product construction.
    pub product_vertices: usize,
    /// `|N(a)| * |D(X,Y)|` budget for the differential oracle.
    pub oracle_work: u128,
    /// Largest hypercube dimension.
    pub cube_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_order: 1024,
            hom_candidates: 1_000_000,
            map_candidates: 10_000_000,
            product_vertices: 1 << 20,
            oracle_work: 1_000_000,
            cube_dim: 20,
        }
    }
}

impl Limits {
    pub(crate) fn check(what: &'static str, needed: u128, limit: u128) -> Result<()> {
        if needed > limit {
            Err(Error::guard(what, needed, limit))
        } else {
            Ok(())
        }
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}
