//! Cayley graphs of finite groups and their spaces of continuous
//! homomorphisms.

use crate::error::{Error, Result};
use crate::group::{enumerate_homomorphisms_with_limits, FiniteGroup, GeneratingSet};
use crate::limits::Limits;
use crate::space::{hom_neighbor, is_continuous, FiniteMap, MapSpace, ReflexiveDigraph};

/// The Cayley graph of a group for a non-redundant generating set:
/// `N(g) = {g} ∪ {gγ : γ ∈ Γ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    group: FiniteGroup,
    gens: GeneratingSet,
    digraph: ReflexiveDigraph,
}

impl CayleyGraph {
    pub fn new(group: FiniteGroup, gens: GeneratingSet) -> Self {
        let nbhd = (0..group.order())
            .map(|g| {
                let mut set: Vec<usize> = std::iter::once(g)
                    .chain(gens.elements().iter().map(|&s| group.mul(g, s)))
                    .collect();
                set.sort_unstable();
                set.dedup();
                set
            })
            .collect();
        let digraph = ReflexiveDigraph::new(nbhd).expect("Cayley neighborhoods are reflexive");
        CayleyGraph { group, gens, digraph }
    }

    /// Validates `gens` and builds the graph.
    pub fn from_generators(group: FiniteGroup, gens: &[usize]) -> Result<Self> {
        let gens = group.validate_generating_set(gens)?;
        Ok(Self::new(group, gens))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn generators(&self) -> &GeneratingSet {
        &self.gens
    }

    pub fn digraph(&self) -> &ReflexiveDigraph {
        &self.digraph
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Generators of order two, the only ones that can link distinct
    /// continuous homomorphisms.
    pub fn involutive_generators(&self) -> Vec<usize> {
        self.gens
            .elements()
            .iter()
            .copied()
            .filter(|&d| self.group.element_order(d) == 2)
            .collect()
    }

    /// Checks that every left multiplication `x ↦ vx` is a digraph
    /// automorphism; see [`left_mult_automorphism_witness`].
    pub fn left_mult_automorphism_check(&self) -> LeftMultCheck {
        left_mult_automorphism_witness(&self.group, &self.digraph)
    }
}

/// Result of the left-multiplication automorphism check. The witness is
/// `(v, x)`: left multiplication by `v` fails to preserve the
/// edges out of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeftMultCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

/// Left multiplication by any `v` is a bijection with inverse `x ↦ v⁻¹x`, so
/// all of them are automorphisms iff all of them are continuous.
pub fn left_mult_automorphism_witness(group: &FiniteGroup, digraph: &ReflexiveDigraph) -> LeftMultCheck {
    let n = group.order();
    assert_eq!(n, digraph.size(), "digraph must live on the group's carrier");
    for v in 0..n {
        for x in 0..n {
            let vx = group.mul(v, x);
            if !digraph
                .nbhd(x)
                .iter()
                .all(|&u| digraph.is_neighbor(vx, group.mul(v, u)))
            {
                return LeftMultCheck {
                    holds: false,
                    witness: Some((v, x)),
                };
            }
        }
    }
    LeftMultCheck {
        holds: true,
        witness: None,
    }
}

/// The continuous homomorphisms between two Cayley graphs, with the
/// neighborhood structure given by the order-two-generator criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffSpace {
    domain: CayleyGraph,
    codomain: CayleyGraph,
    space: MapSpace,
}

impl DiffSpace {
    pub fn domain(&self) -> &CayleyGraph {
        &self.domain
    }

    pub fn codomain(&self) -> &CayleyGraph {
        &self.codomain
    }

    pub fn space(&self) -> &MapSpace {
        &self.space
    }

    pub fn maps(&self) -> &[FiniteMap] {
        self.space.maps()
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    pub fn nbhd(&self, i: usize) -> &[usize] {
        self.space.nbhd(i)
    }

    pub fn is_isolated(&self, i: usize) -> bool {
        self.space.is_isolated(i)
    }

    /// Whether every map is isolated.
    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|i| self.is_isolated(i))
    }

    pub fn index_of(&self, f: &FiniteMap) -> Option<usize> {
        self.space.index_of(f)
    }

    /// Recomputes every neighborhood from [`hom_neighbor`] and returns the
    /// first pair `(i, j)` where the two disagree.
    pub fn cross_check(&self) -> Result<Option<(usize, usize)>> {
        let (x, y) = (self.domain.digraph(), self.codomain.digraph());
        for i in 0..self.len() {
            for j in 0..self.len() {
                let generic = hom_neighbor(x, y, self.space.map(j), self.space.map(i))?;
                if generic != self.space.nbhd(i).contains(&j) {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}

/// Distinct continuous homomorphisms `φ, ψ` are neighbors iff there is
/// exactly one generator `δ` of order two with `φ(C) ∪ ψ(C) ⊆ {e, δ}`.
pub fn order_two_neighbors(codomain: &CayleyGraph, phi: &FiniteMap, psi: &FiniteMap) -> bool {
    if phi == psi {
        return true;
    }
    let image_ok = |d: usize| phi.values().iter().chain(psi.values()).all(|&y| y == 0 || y == d);
    codomain
        .involutive_generators()
        .into_iter()
        .filter(|&d| image_ok(d))
        .count()
        == 1
}

pub fn diff_space(domain: &CayleyGraph, codomain: &CayleyGraph) -> Result<DiffSpace> {
    diff_space_with_limits(domain, codomain, &Limits::default())
}

/// `D(C, D)`: homomorphisms continuous at the identity, which for
/// homomorphisms is the same as continuity everywhere.
pub fn diff_space_with_limits(domain: &CayleyGraph, codomain: &CayleyGraph, limits: &Limits) -> Result<DiffSpace> {
    let e_nbhd_dom = domain.digraph().nbhd(0);
    let maps: Vec<FiniteMap> = enumerate_homomorphisms_with_limits(domain.group(), codomain.group(), limits)?
        .into_iter()
        .filter(|phi| {
            e_nbhd_dom
                .iter()
                .all(|&g| codomain.digraph().is_neighbor(0, phi.apply(g)))
        })
        .collect();
    let nbhd = (0..maps.len())
        .map(|i| {
            (0..maps.len())
                .filter(|&j| order_two_neighbors(codomain, &maps[i], &maps[j]))
                .collect()
        })
        .collect();
    let space = MapSpace::assemble(domain.digraph().clone(), codomain.digraph().clone(), maps, nbhd);
    debug_assert!(space
        .maps()
        .iter()
        .all(|f| is_continuous(domain.digraph(), codomain.digraph(), f)));
    Ok(DiffSpace {
        domain: domain.clone(),
        codomain: codomain.clone(),
        space,
    })
}

/// Like [`diff_space`], but fails with [`Error::Invalid`] if the lemma-based
/// neighborhoods disagree with the definition.
pub fn diff_space_checked(domain: &CayleyGraph, codomain: &CayleyGraph) -> Result<DiffSpace> {
    let ds = diff_space(domain, codomain)?;
    if let Some((i, j)) = ds.cross_check()? {
        return Err(Error::Invalid(format!(
            "order-two criterion disagrees with the exponential structure at maps {i}, {j}"
        )));
    }
    Ok(ds)
}
