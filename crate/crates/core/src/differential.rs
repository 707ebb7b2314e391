//! Differentials of arbitrary maps between finite convergence spaces.
//!
//! `L` is a differential of `f` at `a` when for every filter converging to
//! `a` there is a filter converging to `L` whose members approximate `f`
//! on members of the first. On reflexive digraphs this reduces to: every
//! `x ∈ N(a)` is matched by some `k ∈ N(L)` with `k(x) = f(x)`.
//!
//! Three routes are provided and are expected to agree:
//!
//! * [`differentials_at`]: the neighborhood criterion above;
//! * [`differentials_by_theorem`]: a case split on whether `L` is isolated
//!   and whether it is constant, using only group structure (Cayley graphs);
//! * [`differential_oracle`]: the filter definition evaluated directly.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cayley::DiffSpace;
use crate::error::{Error, Result};
use crate::integers::{integer_nbhd, integers_diff_space, IntegerHom};
use crate::limits::Limits;
use crate::space::{is_continuous_at, space_properties, FiniteMap, MapSpace};

/// Where candidate differentials come from.
#[derive(Debug, Clone, Copy)]
pub enum Candidates<'a> {
    /// Continuous homomorphisms between Cayley graphs.
    Cayley(&'a DiffSpace),
    /// A caller-chosen subspace of continuous maps between reflexive digraphs.
    Explicit(&'a MapSpace),
}

impl<'a> Candidates<'a> {
    pub fn space(&self) -> &'a MapSpace {
        match self {
            Candidates::Cayley(ds) => ds.space(),
            Candidates::Explicit(space) => space,
        }
    }
}

impl<'a> From<&'a DiffSpace> for Candidates<'a> {
    fn from(ds: &'a DiffSpace) -> Self {
        Candidates::Cayley(ds)
    }
}

impl<'a> From<&'a MapSpace> for Candidates<'a> {
    fn from(space: &'a MapSpace) -> Self {
        Candidates::Explicit(space)
    }
}

/// A function `f: X -> Y`, a point `a`, and the candidate space `D(X, Y)`.
#[derive(Debug, Clone, Copy)]
pub struct DifferentialQuery<'a> {
    candidates: Candidates<'a>,
    f: &'a FiniteMap,
    at: usize,
}

impl<'a> DifferentialQuery<'a> {
    pub fn new(candidates: impl Into<Candidates<'a>>, f: &'a FiniteMap, at: usize) -> Result<Self> {
        let candidates = candidates.into();
        let space = candidates.space();
        let (n, m) = (space.domain().size(), space.codomain().size());
        if f.dom_size() != n {
            return Err(Error::DimMismatch {
                expected: n,
                got: f.dom_size(),
            });
        }
        if f.cod_size() != m {
            return Err(Error::DimMismatch {
                expected: m,
                got: f.cod_size(),
            });
        }
        if at >= n {
            return Err(Error::OutOfRange(at, n));
        }
        Ok(DifferentialQuery { candidates, f, at })
    }

    pub fn candidates(&self) -> Candidates<'a> {
        self.candidates
    }

    pub fn space(&self) -> &'a MapSpace {
        self.candidates.space()
    }

    pub fn function(&self) -> &'a FiniteMap {
        self.f
    }

    pub fn point(&self) -> usize {
        self.at
    }
}

/// Indices `L` such that every `x ∈ N(a)` has some `k ∈ N(L)` with
/// `k(x) = f(x)`. Sorted; empty when `f` is not differentiable at `a`.
pub fn differentials_at(q: &DifferentialQuery<'_>) -> Vec<usize> {
    let space = q.space();
    let nbhd_a = space.domain().nbhd(q.at);
    (0..space.len())
        .filter(|&l| {
            nbhd_a.iter().all(|&x| {
                let fx = q.f.apply(x);
                space.nbhd(l).iter().any(|&k| space.map(k).apply(x) == fx)
            })
        })
        .collect()
}

fn cayley_space<'a>(q: &DifferentialQuery<'a>) -> Result<&'a DiffSpace> {
    match q.candidates {
        Candidates::Cayley(ds) => Ok(ds),
        Candidates::Explicit(_) => Err(Error::NotCayley),
    }
}

/// Classifies each candidate `L ∈ D(C, D)`:
///
/// 1. `L` isolated: `f(aγ) = L(a)L(γ)` for every `γ ∈ N(e)`.
/// 2. `L` not isolated, constant: each `f(x)`, `x ∈ N(a)`, is `e` or an
///    order-two generator, and `f(x) = e` whenever `x` lies in the subgroup
///    generated by squares.
/// 3. `L` not isolated, not constant, `L(C) = {e, δ}` for a unique order-two
///    generator `δ`: `f(N(a)) ⊆ {e, δ}`, and `f(x) = e` whenever `x` lies in
///    the subgroup generated by squares.
///
/// The squares subgroup is where every homomorphism onto a group of order
/// two vanishes, so no neighbor of `L` can reach `δ` there.
pub fn differentials_by_theorem(q: &DifferentialQuery<'_>) -> Result<Vec<usize>> {
    let ds = cayley_space(q)?;
    let squares = ds.domain().group().squares_subgroup();
    let in_squares = |x: usize| squares.contains(&x);
    Ok(classify(q, ds, in_squares, in_squares))
}

/// The same classification with the parity clauses taken literally: case 2
/// only forces `f(e) = e` (when `e ∈ N(a)`), case 3 only forces `f(aγ) = e`
/// for `aγ` of odd order. Agrees with [`differentials_by_theorem`] whenever
/// the squares subgroup meets `N(a)` only in the identity and odd-order
/// elements (e.g. on Boolean hypercubes), and can accept too much otherwise.
pub fn differentials_by_odd_order_clause(q: &DifferentialQuery<'_>) -> Result<Vec<usize>> {
    let ds = cayley_space(q)?;
    let g = ds.domain().group();
    Ok(classify(q, ds, |x| x == 0, |x| x == 0 || g.element_order(x) % 2 == 1))
}

fn classify(
    q: &DifferentialQuery<'_>,
    ds: &DiffSpace,
    forced_trivial_constant: impl Fn(usize) -> bool,
    forced_trivial_nonconstant: impl Fn(usize) -> bool,
) -> Vec<usize> {
    let g = ds.domain().group();
    let h = ds.codomain().group();
    let involutions = ds.codomain().involutive_generators();
    let e_nbhd = ds.domain().digraph().nbhd(0);
    let a = q.at;
    let f = q.f;
    (0..ds.len())
        .filter(|&l| {
            let lmap = &ds.maps()[l];
            if ds.is_isolated(l) {
                return e_nbhd
                    .iter()
                    .all(|&gamma| f.apply(g.mul(a, gamma)) == h.mul(lmap.apply(a), lmap.apply(gamma)));
            }
            if lmap.is_constant() {
                return e_nbhd.iter().all(|&gamma| {
                    let x = g.mul(a, gamma);
                    let y = f.apply(x);
                    y == 0 || (involutions.contains(&y) && !forced_trivial_constant(x))
                });
            }
            let image: BTreeSet<usize> = lmap.values().iter().copied().collect();
            let Some(&delta) = image.iter().find(|&&y| y != 0) else {
                return false;
            };
            let unique = image.len() == 2
                && involutions
                    .iter()
                    .filter(|&&d| image.iter().all(|&y| y == 0 || y == d))
                    .count()
                    == 1;
            unique
                && e_nbhd.iter().all(|&gamma| {
                    let x = g.mul(a, gamma);
                    let y = f.apply(x);
                    y == 0 || (y == delta && !forced_trivial_nonconstant(x))
                })
        })
        .collect()
}

/// How [`differential_oracle`] evaluates the filter definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleMode {
    /// Smallest neighborhoods only: `U = N(a)`, `V = N(L)`.
    SmallestNeighborhoods,
    /// Every principal filter `[A] → a` (all nonempty `A ⊆ N(a)`) against a
    /// search over every principal filter `[K₀] → L` (nonempty `K₀ ⊆ N(L)`),
    /// each filter tested through its generating set.
    FilterSweep,
    /// As `FilterSweep`, but also ranging over every member `K ⊇ K₀` of the
    /// filter at `L` and every member `A' ⊇ A` of the filter at `a`. Only for
    /// tiny carriers.
    FilterMembers,
}

pub fn differential_oracle(q: &DifferentialQuery<'_>, mode: OracleMode) -> Result<Vec<usize>> {
    differential_oracle_with_limits(q, mode, &Limits::default())
}

const MEMBER_SWEEP_BITS: usize = 16;

pub fn differential_oracle_with_limits(
    q: &DifferentialQuery<'_>,
    mode: OracleMode,
    limits: &Limits,
) -> Result<Vec<usize>> {
    let space = q.space();
    let x = space.domain();
    let nbhd_a = x.nbhd(q.at);
    Limits::check(
        "oracle work",
        nbhd_a.len() as u128 * space.len() as u128,
        limits.oracle_work,
    )?;
    // matching[i]: which maps agree with f at the i-th point of N(a)
    let agrees = |k: usize, pt: usize| space.map(k).apply(pt) == q.f.apply(pt);
    match mode {
        OracleMode::SmallestNeighborhoods => Ok((0..space.len())
            .filter(|&l| {
                nbhd_a.iter().all(|&pt| {
                    // f(x) ∈ V·{x}
                    let image: BTreeSet<usize> = space.nbhd(l).iter().map(|&k| space.map(k).apply(pt)).collect();
                    image.contains(&q.f.apply(pt))
                })
            })
            .collect()),
        OracleMode::FilterSweep => {
            if nbhd_a.len() > 20 {
                return Err(Error::guard("filter sweep neighborhood", nbhd_a.len() as u128, 20));
            }
            Ok((0..space.len())
                .filter(|&l| {
                    let nl = space.nbhd(l);
                    // cover[i]: bitmask over N(a) of points matched by nl[i]
                    let cover: Vec<u32> = nl
                        .iter()
                        .map(|&k| {
                            nbhd_a
                                .iter()
                                .enumerate()
                                .filter(|&(_, &pt)| agrees(k, pt))
                                .fold(0u32, |m, (i, _)| m | 1 << i)
                        })
                        .collect();
                    let full = (1u32 << nbhd_a.len()) - 1;
                    (1..=full).all(|a_mask| exists_base(&cover, a_mask))
                })
                .collect())
        }
        OracleMode::FilterMembers => {
            let (n, d) = (x.size(), space.len());
            if n + d > MEMBER_SWEEP_BITS {
                return Err(Error::guard(
                    "filter member sweep bits",
                    (n + d) as u128,
                    MEMBER_SWEEP_BITS as u128,
                ));
            }
            // matches[x]: bitmask over D of maps agreeing with f at x
            let matches: Vec<u32> = (0..n)
                .map(|pt| (0..d).filter(|&k| agrees(k, pt)).fold(0u32, |m, k| m | 1 << k))
                .collect();
            let a_base: u32 = nbhd_a.iter().fold(0, |m, &pt| m | 1 << pt);
            let x_full = (1u32 << n) - 1;
            let d_full = (1u32 << d) - 1;
            let good = |set_a: u32, set_k: u32| (0..n).all(|pt| set_a & (1 << pt) == 0 || matches[pt] & set_k != 0);
            Ok((0..d)
                .filter(|&l| {
                    let l_base: u32 = space.nbhd(l).iter().fold(0, |m, &k| m | 1 << k);
                    submasks(a_base).all(|a_min| {
                        submasks(l_base).any(|k_min| {
                            supermasks(k_min, d_full)
                                .all(|k_set| supermasks(a_min, x_full).any(|a_set| good(a_set, k_set)))
                        })
                    })
                })
                .collect())
        }
    }
}

/// Whether some nonempty subset of `cover` jointly covers `target`; a
/// depth-first search over subsets, including elements first and pruning
/// branches whose remaining elements cannot complete the cover.
fn exists_base(cover: &[u32], target: u32) -> bool {
    fn go(cover: &[u32], i: usize, chosen: u32, nonempty: bool, target: u32, suffix: &[u32]) -> bool {
        if chosen & target == target && nonempty {
            return true;
        }
        if i == cover.len() || (chosen | suffix[i]) & target != target {
            return false;
        }
        go(cover, i + 1, chosen | cover[i], true, target, suffix) || go(cover, i + 1, chosen, nonempty, target, suffix)
    }
    let mut suffix = vec![0u32; cover.len() + 1];
    for i in (0..cover.len()).rev() {
        suffix[i] = suffix[i + 1] | cover[i];
    }
    go(cover, 0, 0, false, target, &suffix)
}

/// Nonempty submasks of `mask`.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut cur = mask;
    let mut done = mask == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        cur = (cur - 1) & mask;
        done = cur == 0;
        Some(out)
    })
}

/// Masks `s` with `base ⊆ s ⊆ full`.
fn supermasks(base: u32, full: u32) -> impl Iterator<Item = u32> {
    let free = full & !base;
    std::iter::once(base).chain(submasks(free).map(move |s| s | base))
}

/// On a T1 (hence discrete) codomain, checks `L(a) = f(a)` for every
/// differential `L`. Errors with [`Error::NotT1`] otherwise.
pub fn t1_forces_value_check(q: &DifferentialQuery<'_>) -> Result<bool> {
    if !space_properties(q.space().codomain()).is_t1 {
        return Err(Error::NotT1);
    }
    let fa = q.f.apply(q.at);
    Ok(differentials_at(q)
        .into_iter()
        .all(|l| q.space().map(l).apply(q.at) == fa))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRuleReport {
    pub holds: bool,
    /// Number of `(L_g, L_f)` pairs whose composite was checked.
    pub checked: usize,
    /// `(L_g, L_f)` whose composite is in the composite space but is not a
    /// differential of `f ∘ g`.
    pub violations: Vec<(usize, usize)>,
    /// `(L_g, L_f)` whose composite is missing from the composite space.
    pub missing_composites: Vec<(usize, usize)>,
}

/// For `g: X -> Y` continuous at `a` and `f: Y -> Z`, checks that
/// `L_f ∘ L_g` is a differential of `f ∘ g` at `a` for every differential
/// `L_g` of `g` at `a` and `L_f` of `f` at `g(a)`.
pub fn chain_rule_check(
    inner: &MapSpace,
    outer: &MapSpace,
    composite: &MapSpace,
    g: &FiniteMap,
    f: &FiniteMap,
    a: usize,
) -> Result<ChainRuleReport> {
    let g_query = DifferentialQuery::new(inner, g, a)?;
    if !is_continuous_at(inner.domain(), inner.codomain(), g, a) {
        return Err(Error::HypothesisViolated(a));
    }
    let f_query = DifferentialQuery::new(outer, f, g.apply(a))?;
    let fg = f.after(g)?;
    let fg_query = DifferentialQuery::new(composite, &fg, a)?;
    let fg_diffs: BTreeSet<usize> = differentials_at(&fg_query).into_iter().collect();

    let mut report = ChainRuleReport {
        holds: true,
        checked: 0,
        violations: Vec::new(),
        missing_composites: Vec::new(),
    };
    let f_diffs = differentials_at(&f_query);
    for lg in differentials_at(&g_query) {
        for &lf in &f_diffs {
            let comp = outer.map(lf).after(inner.map(lg))?;
            match composite.index_of(&comp) {
                None => report.missing_composites.push((lg, lf)),
                Some(idx) => {
                    report.checked += 1;
                    if !fg_diffs.contains(&idx) {
                        report.violations.push((lg, lf));
                    }
                }
            }
        }
    }
    report.holds = report.violations.is_empty();
    Ok(report)
}

/// Values of a function on the integers over the window `start..start+len`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerWindow {
    pub start: i64,
    pub values: Vec<i64>,
}

impl IntegerWindow {
    pub fn get(&self, n: i64) -> Option<i64> {
        let i = n.checked_sub(self.start)?;
        usize::try_from(i).ok().and_then(|i| self.values.get(i).copied())
    }
}

/// Differentials at `n` of a function on the integers known on a window
/// around `n`. The space `D(Z, Z)` is discrete, so `L` qualifies iff it
/// agrees with `f` on `N(n) = {n, n+1}`.
pub fn integers_differentiable_at(window: &IntegerWindow, n: i64) -> Result<Vec<IntegerHom>> {
    let values: Vec<(i64, i64)> = integer_nbhd(n)
        .iter()
        .map(|&x| window.get(x).map(|v| (x, v)).ok_or(Error::WindowTooSmall(n)))
        .collect::<Result<_>>()?;
    Ok(integers_diff_space()
        .into_iter()
        .filter(|l| values.iter().all(|&(x, fx)| l.apply(x) == fx))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{diff_space, CayleyGraph};
    use crate::group::GroupKind;
    use crate::space::ReflexiveDigraph;

    fn cayley(kind: GroupKind) -> CayleyGraph {
        let g = kind.build(&Limits::default()).unwrap();
        CayleyGraph::from_generators(g, &kind.default_generators()).unwrap()
    }

    #[test]
    fn members_differentiate_themselves() {
        let s3 = cayley(GroupKind::Symmetric(3));
        let ds = diff_space(&s3, &s3).unwrap();
        for (i, f) in ds.maps().iter().enumerate() {
            for a in 0..6 {
                let q = DifferentialQuery::new(&ds, f, a).unwrap();
                assert!(differentials_at(&q).contains(&i));
            }
        }
    }

    #[test]
    fn odd_order_clause_overshoots_on_z4() {
        let z4 = cayley(GroupKind::Cyclic(4));
        let z2 = cayley(GroupKind::Cyclic(2));
        let ds = diff_space(&z4, &z2).unwrap();
        // f(1) = f(2) = 1; 2 is a square, so no neighbor of L reaches 1 there
        let f = FiniteMap::new(4, 2, vec![0, 1, 1, 0]).unwrap();
        let q = DifferentialQuery::new(&ds, &f, 1).unwrap();
        assert!(differentials_at(&q).is_empty());
        assert!(differentials_by_theorem(&q).unwrap().is_empty());
        assert_eq!(differentials_by_odd_order_clause(&q).unwrap(), vec![0, 1]);
    }

    #[test]
    fn odd_order_clause_overshoots_at_identity_of_s3() {
        let s3 = cayley(GroupKind::Symmetric(3));
        let ds = diff_space(&s3, &s3).unwrap();
        // f(e) = e, f(r) = t, f(t) = e: r is a square
        let f = FiniteMap::new(6, 6, vec![0, 3, 0, 0, 0, 0]).unwrap();
        let q = DifferentialQuery::new(&ds, &f, 0).unwrap();
        assert!(differentials_at(&q).is_empty());
        assert!(differentials_by_theorem(&q).unwrap().is_empty());
        assert_eq!(differentials_by_odd_order_clause(&q).unwrap(), vec![0]);
    }

    #[test]
    fn explicit_space_is_not_cayley() {
        let x = ReflexiveDigraph::discrete(2);
        let space = MapSpace::subspace(x.clone(), x, vec![FiniteMap::identity(2)]).unwrap();
        let f = FiniteMap::identity(2);
        let q = DifferentialQuery::new(&space, &f, 0).unwrap();
        assert_eq!(differentials_by_theorem(&q), Err(Error::NotCayley));
        assert_eq!(differentials_at(&q), vec![0]);
        assert!(t1_forces_value_check(&q).unwrap());
    }

    #[test]
    fn query_validation() {
        let x = ReflexiveDigraph::discrete(2);
        let space = MapSpace::subspace(x.clone(), x, vec![]).unwrap();
        let f = FiniteMap::identity(2);
        assert!(DifferentialQuery::new(&space, &f, 2).is_err());
        let g = FiniteMap::identity(3);
        assert!(DifferentialQuery::new(&space, &g, 0).is_err());
        // no candidates: never differentiable, never an error
        let q = DifferentialQuery::new(&space, &f, 0).unwrap();
        assert!(differentials_at(&q).is_empty());
        for mode in [
            OracleMode::SmallestNeighborhoods,
            OracleMode::FilterSweep,
            OracleMode::FilterMembers,
        ] {
            assert!(differential_oracle(&q, mode).unwrap().is_empty());
        }
    }

    #[test]
    fn t1_check_refuses_non_t1_codomain() {
        let z2 = cayley(GroupKind::Cyclic(2));
        let ds = diff_space(&z2, &z2).unwrap();
        let f = FiniteMap::identity(2);
        let q = DifferentialQuery::new(&ds, &f, 0).unwrap();
        assert_eq!(t1_forces_value_check(&q), Err(Error::NotT1));
    }

    #[test]
    fn t1_check_vacuous_when_not_differentiable() {
        let x = ReflexiveDigraph::from_edges(2, &[(0, 1)]).unwrap();
        let y = ReflexiveDigraph::discrete(2);
        let c0 = FiniteMap::constant(2, 2, 0).unwrap();
        let space = MapSpace::subspace(x, y, vec![c0]).unwrap();
        let f = FiniteMap::new(2, 2, vec![1, 1]).unwrap();
        let q = DifferentialQuery::new(&space, &f, 0).unwrap();
        assert!(differentials_at(&q).is_empty());
        assert!(t1_forces_value_check(&q).unwrap());
    }

    #[test]
    fn chain_rule_requires_continuity() {
        let z3 = cayley(GroupKind::Cyclic(3));
        let ds = diff_space(&z3, &z3).unwrap();
        let g = FiniteMap::new(3, 3, vec![0, 2, 0]).unwrap();
        let f = FiniteMap::identity(3);
        assert_eq!(
            chain_rule_check(ds.space(), ds.space(), ds.space(), &g, &f, 0),
            Err(Error::HypothesisViolated(0))
        );
        let report = chain_rule_check(ds.space(), ds.space(), ds.space(), &f, &f, 0).unwrap();
        assert!(report.holds);
        assert_eq!(report.checked, 1);
    }

    #[test]
    fn subset_iterators() {
        assert_eq!(submasks(0b101).collect::<Vec<_>>(), vec![0b101, 0b100, 0b001]);
        assert_eq!(submasks(0).count(), 0);
        let mut s: Vec<u32> = supermasks(0b001, 0b111).collect();
        s.sort_unstable();
        assert_eq!(s, vec![0b001, 0b011, 0b101, 0b111]);
        assert!(exists_base(&[0b01, 0b10], 0b11));
        assert!(!exists_base(&[0b01, 0b01], 0b11));
    }

    #[test]
    fn integer_window_cases() {
        let ident = IntegerWindow {
            start: -1,
            values: vec![-1, 0, 1, 2],
        };
        assert_eq!(
            integers_differentiable_at(&ident, 0).unwrap(),
            vec![IntegerHom::IdentityMap]
        );
        let zero = IntegerWindow {
            start: 4,
            values: vec![7, 0, 0, -3],
        };
        assert_eq!(integers_differentiable_at(&zero, 5).unwrap(), vec![IntegerHom::ZeroMap]);
        // f(0) = 0, f(1) = 1: only the identity
        let w = IntegerWindow {
            start: -1,
            values: vec![2, 0, 1, 2],
        };
        assert_eq!(
            integers_differentiable_at(&w, 0).unwrap(),
            vec![IntegerHom::IdentityMap]
        );
        let w = IntegerWindow {
            start: 0,
            values: vec![1, 0],
        };
        assert!(integers_differentiable_at(&w, 1).is_err());
        let w = IntegerWindow {
            start: 2,
            values: vec![2, 0],
        };
        assert!(integers_differentiable_at(&w, 2).unwrap().is_empty());
    }
}
