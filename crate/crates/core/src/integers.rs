//! The integers with generator `{1}` and the plane `Z ⊕ Z`, handled
//! symbolically.
//!
//! A homomorphism out of `Z` is fixed by the image of `1`, and continuity at
//! `0` forces that image into `N(0) = {0, 1}`. The generator `1` has
//! infinite order, so no two members are linked and both spaces are
//! discrete.

use serde::{Deserialize, Serialize};

/// Members of `D(Z, Z)`: `n ↦ k·n` for the admissible slopes `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IntegerHom {
    ZeroMap,
    IdentityMap,
}

/// `N(n)` in the Cayley graph of `Z` for `{1}`.
pub fn integer_nbhd(n: i64) -> [i64; 2] {
    [n, n + 1]
}

impl IntegerHom {
    pub fn from_slope(k: i64) -> Option<Self> {
        match k {
            0 => Some(IntegerHom::ZeroMap),
            1 => Some(IntegerHom::IdentityMap),
            _ => None,
        }
    }

    pub fn slope(self) -> i64 {
        match self {
            IntegerHom::ZeroMap => 0,
            IntegerHom::IdentityMap => 1,
        }
    }

    pub fn apply(self, n: i64) -> i64 {
        self.slope() * n
    }

    /// `self ∘ inner`.
    pub fn after(self, inner: IntegerHom) -> IntegerHom {
        IntegerHom::from_slope(self.slope() * inner.slope()).expect("slopes in {0,1} are closed under product")
    }

    /// Every member is isolated: linking two would need a generator of order two.
    pub fn is_isolated(self) -> bool {
        true
    }
}

/// Slopes `k` whose homomorphism `n ↦ kn` sends `N(0)` into `N(0)`.
fn admissible_slopes() -> impl Iterator<Item = i64> {
    let n0 = integer_nbhd(0);
    // |k| > 1 already maps 1 outside N(0)
    (-1..=1).filter(move |&k| n0.iter().all(|&x| n0.contains(&(k * x))))
}

/// `D(Z, Z) = {λn.0, identity}`.
pub fn integers_diff_space() -> Vec<IntegerHom> {
    admissible_slopes().filter_map(IntegerHom::from_slope).collect()
}

/// Members of `D(Z², Z)` where `Z²` carries the box-product structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PlaneHom {
    Zero,
    Proj1,
    Proj2,
    Sum,
}

impl PlaneHom {
    fn from_slopes(j: i64, k: i64) -> Option<Self> {
        match (j, k) {
            (0, 0) => Some(PlaneHom::Zero),
            (1, 0) => Some(PlaneHom::Proj1),
            (0, 1) => Some(PlaneHom::Proj2),
            (1, 1) => Some(PlaneHom::Sum),
            _ => None,
        }
    }

    pub fn slopes(self) -> (i64, i64) {
        match self {
            PlaneHom::Zero => (0, 0),
            PlaneHom::Proj1 => (1, 0),
            PlaneHom::Proj2 => (0, 1),
            PlaneHom::Sum => (1, 1),
        }
    }

    pub fn apply(self, (a, b): (i64, i64)) -> i64 {
        let (j, k) = self.slopes();
        j * a + k * b
    }

    /// Checks `f(N(p)) ⊆ N(f(p))` at every `p` of the square window
    /// `[lo, hi]²`, with `N(a, b) = {(a,b), (a+1,b), (a,b+1)}`.
    pub fn is_continuous_on_window(self, lo: i64, hi: i64) -> bool {
        (lo..=hi).all(|a| {
            (lo..=hi).all(|b| {
                let fp = self.apply((a, b));
                [(a, b), (a + 1, b), (a, b + 1)]
                    .iter()
                    .all(|&q| integer_nbhd(fp).contains(&self.apply(q)))
            })
        })
    }
}

/// `D(Z², Z)`: images of the two generators `(1,0)` and `(0,1)` each lie in
/// `N(0) = {0, 1}`.
pub fn integers_plane_diff_space() -> Vec<PlaneHom> {
    let slopes: Vec<i64> = admissible_slopes().collect();
    let mut out: Vec<PlaneHom> = slopes
        .iter()
        .flat_map(|&j| slopes.iter().map(move |&k| (j, k)))
        .filter_map(|(j, k)| PlaneHom::from_slopes(j, k))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_space() {
        let d = integers_diff_space();
        assert_eq!(d, vec![IntegerHom::ZeroMap, IntegerHom::IdentityMap]);
        assert!(d.iter().all(|l| l.is_isolated()));
        assert_eq!(IntegerHom::ZeroMap.after(IntegerHom::IdentityMap), IntegerHom::ZeroMap);
        assert_eq!(IntegerHom::IdentityMap.apply(-7), -7);
    }

    #[test]
    fn plane_space() {
        let d = integers_plane_diff_space();
        assert_eq!(d, vec![PlaneHom::Zero, PlaneHom::Proj1, PlaneHom::Proj2, PlaneHom::Sum]);
        assert_eq!(PlaneHom::Proj1.apply((3, -4)), 3);
        assert_eq!(PlaneHom::Sum.apply((3, -4)), -1);
        assert!(d.iter().all(|h| h.is_continuous_on_window(-5, 5)));
    }
}
