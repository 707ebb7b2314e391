//! Finite reflexive digraphs as convergence spaces.
//!
//! On a finite carrier every filter is principal, so a filter is stored as
//! the nonempty set generating it, and `[A]` converges to `v` exactly when
//! `A ⊆ N(v)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{saturating_pow, Limits};

/// A reflexive digraph, stored as the sorted graph neighborhood of each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReflexiveDigraph {
    nbhd: Vec<Vec<usize>>,
}

impl ReflexiveDigraph {
    /// Neighborhoods are sorted and deduplicated; every vertex must be its
    /// own neighbor.
    pub fn new(nbhd: Vec<Vec<usize>>) -> Result<Self> {
        let n = nbhd.len();
        let mut out = Vec::with_capacity(n);
        for (v, mut set) in nbhd.into_iter().enumerate() {
            if let Some(&u) = set.iter().find(|&&u| u >= n) {
                return Err(Error::OutOfRange(u, n));
            }
            set.sort_unstable();
            set.dedup();
            if set.binary_search(&v).is_err() {
                return Err(Error::NotReflexive(v));
            }
            out.push(set);
        }
        Ok(ReflexiveDigraph { nbhd: out })
    }

    /// Adds the reflexive loops missing from `nbhd`.
    pub fn reflexive_closure(mut nbhd: Vec<Vec<usize>>) -> Result<Self> {
        for (v, set) in nbhd.iter_mut().enumerate() {
            set.push(v);
        }
        Self::new(nbhd)
    }

    pub fn from_edges(size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut nbhd: Vec<Vec<usize>> = (0..size).map(|v| vec![v]).collect();
        for &(v, u) in edges {
            if v >= size {
                return Err(Error::OutOfRange(v, size));
            }
            nbhd[v].push(u);
        }
        Self::new(nbhd)
    }

    pub fn discrete(size: usize) -> Self {
        ReflexiveDigraph {
            nbhd: (0..size).map(|v| vec![v]).collect(),
        }
    }

    pub fn complete(size: usize) -> Self {
        ReflexiveDigraph {
            nbhd: (0..size).map(|_| (0..size).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.nbhd.len()
    }

    /// `N(v)`, sorted.
    pub fn nbhd(&self, v: usize) -> &[usize] {
        &self.nbhd[v]
    }

    pub fn neighborhoods(&self) -> &[Vec<usize>] {
        &self.nbhd
    }

    #[inline]
    pub fn is_neighbor(&self, v: usize, u: usize) -> bool {
        self.nbhd[v].binary_search(&u).is_ok()
    }

    /// Edges `(v, u)` with `u ∈ N(v)`, loops included.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nbhd
            .iter()
            .enumerate()
            .flat_map(|(v, set)| set.iter().map(move |&u| (v, u)))
    }

    /// Returns a copy with the edge `v -> u` removed. Loops cannot be removed.
    pub fn without_edge(&self, v: usize, u: usize) -> Result<Self> {
        if v == u {
            return Err(Error::NotReflexive(v));
        }
        let mut nbhd = self.nbhd.clone();
        nbhd[v].retain(|&w| w != u);
        Ok(ReflexiveDigraph { nbhd })
    }
}

/// The principal filter `[A]` on a finite carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrincipalFilter {
    minset: Vec<usize>,
}

impl PrincipalFilter {
    pub fn new(mut minset: Vec<usize>) -> Result<Self> {
        minset.sort_unstable();
        minset.dedup();
        if minset.is_empty() {
            return Err(Error::EmptyFilter);
        }
        Ok(PrincipalFilter { minset })
    }

    /// The point filter `[p]`; on a finite carrier these are the ultrafilters.
    pub fn point(p: usize) -> Self {
        PrincipalFilter { minset: vec![p] }
    }

    pub fn minset(&self) -> &[usize] {
        &self.minset
    }

    /// Whether `set` belongs to the filter, i.e. contains the generating set.
    pub fn contains_set(&self, set: &[usize]) -> bool {
        self.minset.iter().all(|x| set.contains(x))
    }
}

/// A function between finite carriers `0..dom_size -> 0..cod_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteMap {
    dom_size: usize,
    cod_size: usize,
    values: Vec<usize>,
}

impl FiniteMap {
    pub fn new(dom_size: usize, cod_size: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != dom_size {
            return Err(Error::DimMismatch {
                expected: dom_size,
                got: values.len(),
            });
        }
        if let Some(&v) = values.iter().find(|&&v| v >= cod_size) {
            return Err(Error::OutOfRange(v, cod_size));
        }
        Ok(FiniteMap {
            dom_size,
            cod_size,
            values,
        })
    }

    pub fn identity(size: usize) -> Self {
        FiniteMap {
            dom_size: size,
            cod_size: size,
            values: (0..size).collect(),
        }
    }

    pub fn constant(dom_size: usize, cod_size: usize, value: usize) -> Result<Self> {
        Self::new(dom_size, cod_size, vec![value; dom_size])
    }

    /// `a ↦ (a, a)` into a product carrier indexed `a * size + b`.
    pub fn diagonal(size: usize) -> Self {
        FiniteMap {
            dom_size: size,
            cod_size: size * size,
            values: (0..size).map(|a| a * size + a).collect(),
        }
    }

    pub fn dom_size(&self) -> usize {
        self.dom_size
    }

    pub fn cod_size(&self) -> usize {
        self.cod_size
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &FiniteMap) -> Result<FiniteMap> {
        if inner.cod_size != self.dom_size {
            return Err(Error::DimMismatch {
                expected: self.dom_size,
                got: inner.cod_size,
            });
        }
        Ok(FiniteMap {
            dom_size: inner.dom_size,
            cod_size: self.cod_size,
            values: inner.values.iter().map(|&x| self.values[x]).collect(),
        })
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

/// `[F]` converges to `v` iff `N(v) ∈ [F]`.
pub fn converges(x: &ReflexiveDigraph, filter: &PrincipalFilter, v: usize) -> bool {
    filter.minset.iter().all(|&u| x.is_neighbor(v, u))
}

fn check_map(x: &ReflexiveDigraph, y: &ReflexiveDigraph, f: &FiniteMap) -> Result<()> {
    if f.dom_size != x.size() {
        return Err(Error::DimMismatch {
            expected: x.size(),
            got: f.dom_size,
        });
    }
    if f.cod_size != y.size() {
        return Err(Error::DimMismatch {
            expected: y.size(),
            got: f.cod_size,
        });
    }
    Ok(())
}

/// `f(N(v)) ⊆ N(f(v))`.
pub fn is_continuous_at(x: &ReflexiveDigraph, y: &ReflexiveDigraph, f: &FiniteMap, v: usize) -> bool {
    let fv = f.apply(v);
    x.nbhd(v).iter().all(|&u| y.is_neighbor(fv, f.apply(u)))
}

/// Continuity everywhere, i.e. `f` is a graph homomorphism.
pub fn is_continuous(x: &ReflexiveDigraph, y: &ReflexiveDigraph, f: &FiniteMap) -> bool {
    f.dom_size == x.size() && f.cod_size == y.size() && (0..x.size()).all(|v| is_continuous_at(x, y, f, v))
}

fn first_discontinuity(x: &ReflexiveDigraph, y: &ReflexiveDigraph, f: &FiniteMap) -> Option<usize> {
    (0..x.size()).find(|&v| !is_continuous_at(x, y, f, v))
}

/// Adjacency in the exponential digraph of continuous maps: `f ∈ N(g)` iff
/// `f(a) ∈ N(g(b))` whenever `a ∈ N(b)`.
pub fn hom_neighbor(x: &ReflexiveDigraph, y: &ReflexiveDigraph, f: &FiniteMap, g: &FiniteMap) -> Result<bool> {
    check_map(x, y, f)?;
    check_map(x, y, g)?;
    if let Some(v) = first_discontinuity(x, y, f).or_else(|| first_discontinuity(x, y, g)) {
        return Err(Error::NotContinuous(v));
    }
    Ok(hom_neighbor_unchecked(x, y, f, g))
}

pub(crate) fn hom_neighbor_unchecked(x: &ReflexiveDigraph, y: &ReflexiveDigraph, f: &FiniteMap, g: &FiniteMap) -> bool {
    (0..x.size()).all(|b| {
        let gb = g.apply(b);
        x.nbhd(b).iter().all(|&a| y.is_neighbor(gb, f.apply(a)))
    })
}

/// All continuous maps `X -> Y` in lexicographic order of their values.
pub fn continuous_maps(x: &ReflexiveDigraph, y: &ReflexiveDigraph) -> Result<Vec<FiniteMap>> {
    continuous_maps_with_limits(x, y, &Limits::default())
}

pub fn continuous_maps_with_limits(
    x: &ReflexiveDigraph,
    y: &ReflexiveDigraph,
    limits: &Limits,
) -> Result<Vec<FiniteMap>> {
    let (n, m) = (x.size(), y.size());
    Limits::check("candidate maps", saturating_pow(m, n), limits.map_candidates)?;
    let mut out = Vec::new();
    let mut values = vec![0usize; n];
    // depth-first in vertex order; values ascend, so output is lexicographic
    fn extend(v: usize, x: &ReflexiveDigraph, y: &ReflexiveDigraph, values: &mut Vec<usize>, out: &mut Vec<FiniteMap>) {
        let n = x.size();
        if v == n {
            out.push(FiniteMap {
                dom_size: n,
                cod_size: y.size(),
                values: values.clone(),
            });
            return;
        }
        for c in 0..y.size() {
            values[v] = c;
            let ok = (0..=v).all(|w| {
                let ok_out = !x.is_neighbor(v, w) || y.is_neighbor(c, values[w]);
                let ok_in = !x.is_neighbor(w, v) || y.is_neighbor(values[w], c);
                ok_out && ok_in
            });
            if ok {
                extend(v + 1, x, y, values, out);
            }
        }
    }
    if n == 0 {
        return Ok(vec![FiniteMap::new(0, m, vec![])?]);
    }
    extend(0, x, y, &mut values, &mut out);
    Ok(out)
}

/// Graph Cartesian product: `N(a,b) = {a}×N(b) ∪ N(a)×{b}`, with `(a, b)`
/// at index `a * |Y| + b`.
pub fn box_product(x: &ReflexiveDigraph, y: &ReflexiveDigraph) -> Result<ReflexiveDigraph> {
    box_product_with_limits(x, y, &Limits::default())
}

pub fn box_product_with_limits(
    x: &ReflexiveDigraph,
    y: &ReflexiveDigraph,
    limits: &Limits,
) -> Result<ReflexiveDigraph> {
    let m = y.size();
    let size = x.size() as u128 * m as u128;
    Limits::check("product vertices", size, limits.product_vertices as u128)?;
    let mut nbhd = Vec::with_capacity(size as usize);
    for a in 0..x.size() {
        for b in 0..m {
            let mut set: Vec<usize> = y.nbhd(b).iter().map(|&d| a * m + d).collect();
            set.extend(x.nbhd(a).iter().map(|&c| c * m + b));
            set.sort_unstable();
            set.dedup();
            nbhd.push(set);
        }
    }
    Ok(ReflexiveDigraph { nbhd })
}

/// Product in the category of reflexive digraphs: `N(a,b) = N(a) × N(b)`.
pub fn categorical_product(x: &ReflexiveDigraph, y: &ReflexiveDigraph) -> Result<ReflexiveDigraph> {
    categorical_product_with_limits(x, y, &Limits::default())
}

pub fn categorical_product_with_limits(
    x: &ReflexiveDigraph,
    y: &ReflexiveDigraph,
    limits: &Limits,
) -> Result<ReflexiveDigraph> {
    let m = y.size();
    let size = x.size() as u128 * m as u128;
    Limits::check("product vertices", size, limits.product_vertices as u128)?;
    let mut nbhd = Vec::with_capacity(size as usize);
    for a in 0..x.size() {
        for b in 0..m {
            nbhd.push(
                x.nbhd(a)
                    .iter()
                    .flat_map(|&c| y.nbhd(b).iter().map(move |&d| c * m + d))
                    .collect(),
            );
        }
    }
    Ok(ReflexiveDigraph { nbhd })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceProperties {
    pub is_t0: bool,
    pub is_t1: bool,
    pub is_discrete: bool,
    pub is_topological: bool,
}

pub fn space_properties(x: &ReflexiveDigraph) -> SpaceProperties {
    let n = x.size();
    let mut seen = std::collections::HashSet::new();
    let is_t0 = x.nbhd.iter().all(|set| seen.insert(set.as_slice()));
    // T1 read off the convergence: [u] converges to v only for u = v
    let is_t1 = (0..n).all(|v| (0..n).all(|u| u == v || !converges(x, &PrincipalFilter::point(u), v)));
    let is_discrete = (0..n).all(|v| x.nbhd(v) == [v]);
    let is_topological = (0..n).all(|v| {
        x.nbhd(v)
            .iter()
            .all(|&u| x.nbhd(u).iter().all(|&w| x.is_neighbor(v, w)))
    });
    SpaceProperties {
        is_t0,
        is_t1,
        is_discrete,
        is_topological,
    }
}

/// The pentacle: five points, `N(p)` is everything except `p + 3 mod 5`.
pub fn pentacle() -> ReflexiveDigraph {
    ReflexiveDigraph {
        nbhd: (0..5).map(|p| (0..5).filter(|&q| q != (p + 3) % 5).collect()).collect(),
    }
}

/// A subspace of the continuous maps `X -> Y` together with its neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSpace {
    domain: ReflexiveDigraph,
    codomain: ReflexiveDigraph,
    maps: Vec<FiniteMap>,
    nbhd: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl MapSpace {
    /// The subspace on `maps` of the exponential digraph, neighborhoods from
    /// [`hom_neighbor`]. Duplicate maps are dropped; order is preserved.
    pub fn subspace(domain: ReflexiveDigraph, codomain: ReflexiveDigraph, maps: Vec<FiniteMap>) -> Result<Self> {
        let maps = dedup_maps(maps);
        for f in &maps {
            check_map(&domain, &codomain, f)?;
            if let Some(v) = first_discontinuity(&domain, &codomain, f) {
                return Err(Error::NotContinuous(v));
            }
        }
        let nbhd = (0..maps.len())
            .map(|i| {
                (0..maps.len())
                    .filter(|&j| hom_neighbor_unchecked(&domain, &codomain, &maps[j], &maps[i]))
                    .collect()
            })
            .collect();
        Ok(Self::assemble(domain, codomain, maps, nbhd))
    }

    /// A caller-chosen neighborhood structure over continuous maps. Each
    /// neighborhood is made to contain its own map.
    pub fn with_neighborhoods(
        domain: ReflexiveDigraph,
        codomain: ReflexiveDigraph,
        maps: Vec<FiniteMap>,
        nbhd: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if nbhd.len() != maps.len() {
            return Err(Error::DimMismatch {
                expected: maps.len(),
                got: nbhd.len(),
            });
        }
        if dedup_maps(maps.clone()).len() != maps.len() {
            return Err(Error::Invalid("duplicate maps in map space".into()));
        }
        for f in &maps {
            check_map(&domain, &codomain, f)?;
            if let Some(v) = first_discontinuity(&domain, &codomain, f) {
                return Err(Error::NotContinuous(v));
            }
        }
        let nbhd = ReflexiveDigraph::reflexive_closure(nbhd)?.nbhd;
        Ok(Self::assemble(domain, codomain, maps, nbhd))
    }

    pub(crate) fn assemble(
        domain: ReflexiveDigraph,
        codomain: ReflexiveDigraph,
        maps: Vec<FiniteMap>,
        nbhd: Vec<Vec<usize>>,
    ) -> Self {
        let index = maps.iter().enumerate().map(|(i, f)| (f.values.clone(), i)).collect();
        MapSpace {
            domain,
            codomain,
            maps,
            nbhd,
            index,
        }
    }

    pub fn domain(&self) -> &ReflexiveDigraph {
        &self.domain
    }

    pub fn codomain(&self) -> &ReflexiveDigraph {
        &self.codomain
    }

    pub fn maps(&self) -> &[FiniteMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn map(&self, i: usize) -> &FiniteMap {
        &self.maps[i]
    }

    /// Indices of the neighbors of map `i`, sorted, including `i`.
    pub fn nbhd(&self, i: usize) -> &[usize] {
        &self.nbhd[i]
    }

    pub fn neighborhoods(&self) -> &[Vec<usize>] {
        &self.nbhd
    }

    pub fn is_isolated(&self, i: usize) -> bool {
        self.nbhd[i] == [i]
    }

    pub fn index_of(&self, f: &FiniteMap) -> Option<usize> {
        if f.dom_size != self.domain.size() || f.cod_size != self.codomain.size() {
            return None;
        }
        self.index.get(&f.values).copied()
    }

    /// The neighborhood structure as a reflexive digraph on map indices.
    pub fn as_digraph(&self) -> ReflexiveDigraph {
        ReflexiveDigraph {
            nbhd: self.nbhd.clone(),
        }
    }
}

fn dedup_maps(maps: Vec<FiniteMap>) -> Vec<FiniteMap> {
    let mut seen = std::collections::HashSet::new();
    maps.into_iter().filter(|f| seen.insert(f.values.clone())).collect()
}

/// Pairs `(i, j)` with `outer[j] ∘ inner[i]` missing from `composite`.
pub fn composition_gaps(inner: &MapSpace, outer: &MapSpace, composite: &MapSpace) -> Vec<(usize, usize)> {
    let mut gaps = Vec::new();
    for (i, g) in inner.maps.iter().enumerate() {
        for (j, f) in outer.maps.iter().enumerate() {
            let ok = f.after(g).ok().and_then(|h| composite.index_of(&h)).is_some();
            if !ok {
                gaps.push((i, j));
            }
        }
    }
    gaps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> ReflexiveDigraph {
        // symmetric path window 0 - 1 - ... - (n-1)
        let edges: Vec<_> = (0..n - 1).flat_map(|i| [(i, i + 1), (i + 1, i)]).collect();
        ReflexiveDigraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            ReflexiveDigraph::new(vec![vec![1], vec![1]]),
            Err(Error::NotReflexive(0))
        );
        assert_eq!(ReflexiveDigraph::new(vec![vec![0, 3]]), Err(Error::OutOfRange(3, 1)));
        assert_eq!(PrincipalFilter::new(vec![]), Err(Error::EmptyFilter));
        assert!(FiniteMap::new(2, 2, vec![0, 2]).is_err());
        assert!(FiniteMap::new(2, 2, vec![0]).is_err());
    }

    #[test]
    fn convergence_examples() {
        let p = pentacle();
        assert!(converges(&p, &PrincipalFilter::point(3), 3));
        assert!(converges(&p, &PrincipalFilter::new(vec![0, 1]).unwrap(), 0));
        assert!(!converges(&p, &PrincipalFilter::point(3), 0));
        let d = ReflexiveDigraph::discrete(3);
        assert!(!converges(&d, &PrincipalFilter::point(1), 0));
    }

    #[test]
    fn pentacle_neighborhoods() {
        let p = pentacle();
        assert_eq!(p.nbhd(0), [0, 1, 2, 4]);
        assert_eq!(p.nbhd(2), [1, 2, 3, 4]);
        assert!((0..5).all(|v| p.nbhd(v).len() == 4));
        let props = space_properties(&p);
        assert!(props.is_t0 && !props.is_t1 && !props.is_discrete && !props.is_topological);
    }

    #[test]
    fn discrete_properties() {
        let props = space_properties(&ReflexiveDigraph::discrete(4));
        assert!(props.is_t0 && props.is_t1 && props.is_discrete && props.is_topological);
    }

    #[test]
    fn continuity_basics() {
        let p = pentacle();
        let id = FiniteMap::identity(5);
        assert!(is_continuous(&p, &p, &id));
        for c in 0..5 {
            assert!(is_continuous(&p, &p, &FiniteMap::constant(5, 5, c).unwrap()));
        }
        assert!(hom_neighbor(&p, &p, &id, &id).unwrap());
        let not_cont = FiniteMap::new(5, 5, vec![0, 3, 0, 0, 0]).unwrap();
        assert_eq!(hom_neighbor(&p, &p, &not_cont, &id), Err(Error::NotContinuous(0)));
    }

    #[test]
    fn constant_maps_are_neighbors_iff_values_are() {
        let p = pentacle();
        for y in 0..5 {
            for y2 in 0..5 {
                let f = FiniteMap::constant(5, 5, y).unwrap();
                let g = FiniteMap::constant(5, 5, y2).unwrap();
                assert_eq!(hom_neighbor(&p, &p, &f, &g).unwrap(), p.is_neighbor(y2, y));
            }
        }
    }

    #[test]
    fn path_window_hom_neighbors_match_definition() {
        let x = path(5);
        let maps = continuous_maps(&x, &x).unwrap();
        for f in &maps {
            for g in &maps {
                let mut expected = true;
                for b in 0..5 {
                    for a in 0..5 {
                        if x.nbhd(b).contains(&a) && !x.nbhd(g.apply(b)).contains(&f.apply(a)) {
                            expected = false;
                        }
                    }
                }
                assert_eq!(hom_neighbor(&x, &x, f, g).unwrap(), expected);
            }
        }
    }

    #[test]
    fn continuous_map_counts() {
        let one = ReflexiveDigraph::discrete(1);
        let p = pentacle();
        assert_eq!(continuous_maps(&one, &p).unwrap().len(), 5);
        let d2 = ReflexiveDigraph::discrete(2);
        assert_eq!(continuous_maps(&d2, &d2).unwrap().len(), 4);
        // frozen from an exhaustive filter of all 5^5 maps
        assert_eq!(continuous_maps(&p, &p).unwrap().len(), 185);
        let big = ReflexiveDigraph::discrete(8);
        assert!(matches!(
            continuous_maps(&big, &big),
            Err(Error::SizeGuardExceeded { .. })
        ));
    }

    #[test]
    fn continuous_maps_are_sorted() {
        let p = pentacle();
        let maps = continuous_maps(&p, &p).unwrap();
        assert!(maps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn products() {
        let one = ReflexiveDigraph::discrete(1);
        assert_eq!(box_product(&one, &one).unwrap().size(), 1);
        let b1 = ReflexiveDigraph::complete(2);
        let b2 = box_product(&b1, &b1).unwrap();
        assert_eq!(b2.nbhd(3), [1, 2, 3]);
        let cat = categorical_product(&b1, &b1).unwrap();
        assert_eq!(cat.nbhd(3), [0, 1, 2, 3]);
        let d = ReflexiveDigraph::discrete(3);
        assert!(space_properties(&categorical_product(&d, &d).unwrap()).is_discrete);
    }

    #[test]
    fn grid_neighborhoods() {
        let x = path(3);
        let grid = box_product(&x, &x).unwrap();
        for a in 0..3usize {
            for b in 0..3usize {
                let mut expected = vec![];
                for c in 0..3usize {
                    for d in 0..3usize {
                        let step = a.abs_diff(c) + b.abs_diff(d);
                        if step <= 1 {
                            expected.push(c * 3 + d);
                        }
                    }
                }
                assert_eq!(grid.nbhd(a * 3 + b), expected.as_slice());
            }
        }
    }

    #[test]
    fn diagonal_into_categorical_product_is_continuous() {
        let p = pentacle();
        let cat = categorical_product(&p, &p).unwrap();
        assert!(is_continuous(&p, &cat, &FiniteMap::diagonal(5)));
        let boxed = box_product(&p, &p).unwrap();
        assert!(!is_continuous(&p, &boxed, &FiniteMap::diagonal(5)));
    }

    #[test]
    fn map_space_subspace_and_gaps() {
        let x = path(3);
        let maps = continuous_maps(&x, &x).unwrap();
        let space = MapSpace::subspace(x.clone(), x.clone(), maps).unwrap();
        for i in 0..space.len() {
            assert!(space.nbhd(i).contains(&i));
            assert_eq!(space.index_of(space.map(i)), Some(i));
        }
        assert!(composition_gaps(&space, &space, &space).is_empty());
        let id_only = MapSpace::subspace(x.clone(), x.clone(), vec![FiniteMap::identity(3)]).unwrap();
        let flip = MapSpace::subspace(x.clone(), x, vec![FiniteMap::new(3, 3, vec![2, 1, 0]).unwrap()]).unwrap();
        assert_eq!(composition_gaps(&flip, &flip, &id_only), vec![]);
        assert_eq!(composition_gaps(&flip, &id_only, &flip), vec![]);
        assert_eq!(composition_gaps(&id_only, &id_only, &flip), vec![(0, 0)]);
    }

    #[test]
    fn explicit_neighborhoods_are_made_reflexive() {
        let x = ReflexiveDigraph::discrete(2);
        let maps = continuous_maps(&x, &x).unwrap();
        let space = MapSpace::with_neighborhoods(x.clone(), x, maps, vec![vec![1], vec![], vec![], vec![]]).unwrap();
        assert_eq!(space.nbhd(0), [0, 1]);
        assert!(space.is_isolated(3));
    }
}
