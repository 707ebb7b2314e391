//! Shared fixtures and brute-force references for the integration tests.
#![allow(dead_code)]

use convdiff::cayley::CayleyGraph;
use convdiff::group::{FiniteGroup, GroupKind};
use convdiff::space::{FiniteMap, ReflexiveDigraph};
use convdiff::Limits;
use rand::Rng;

pub fn cayley(kind: GroupKind) -> CayleyGraph {
    let gens = kind.default_generators();
    cayley_with(kind, &gens)
}

pub fn cayley_with(kind: GroupKind, gens: &[usize]) -> CayleyGraph {
    let g = kind.build(&Limits::default()).unwrap();
    CayleyGraph::from_generators(g, gens).unwrap()
}

/// The eight Cayley graphs of the equivalence matrix, with display labels.
pub fn cayley_matrix() -> Vec<(&'static str, CayleyGraph)> {
    vec![
        ("Z2", cayley(GroupKind::Cyclic(2))),
        ("Z3", cayley(GroupKind::Cyclic(3))),
        ("Z4", cayley(GroupKind::Cyclic(4))),
        // (1,0) and (1,1), with (a,b) at index 2a+b
        ("Z2^2{(1,0),(1,1)}", cayley_with(GroupKind::Z2Power(2), &[2, 3])),
        ("S3", cayley(GroupKind::Symmetric(3))),
        ("B1", cayley(GroupKind::Z2Power(1))),
        ("B2", cayley(GroupKind::Z2Power(2))),
        ("B3", cayley(GroupKind::Z2Power(3))),
    ]
}

/// Every map `G -> H` with `h(ab) = h(a)h(b)`, found by trying all
/// `|H|^|G|` value tables.
pub fn brute_force_homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    let (n, m) = (g.order(), h.order());
    let total = (m as u64).pow(n as u32);
    assert!(total <= 10_000_000, "brute force over {total} maps");
    let mut out = Vec::new();
    let mut values = vec![0usize; n];
    for code in 0..total {
        let mut c = code;
        for v in values.iter_mut() {
            *v = (c % m as u64) as usize;
            c /= m as u64;
        }
        let hom = (0..n).all(|a| (0..n).all(|b| values[g.mul(a, b)] == h.mul(values[a], values[b])));
        if hom {
            out.push(values.clone());
        }
    }
    out.sort();
    out
}

/// `f(N(v)) ⊆ N(f(v))` at every `v`, straight from the neighborhood lists.
pub fn brute_force_continuous(x: &ReflexiveDigraph, y: &ReflexiveDigraph, values: &[usize]) -> bool {
    (0..x.size()).all(|v| x.nbhd(v).iter().all(|&u| y.nbhd(values[v]).contains(&values[u])))
}

pub fn random_map(rng: &mut impl Rng, dom: usize, cod: usize) -> FiniteMap {
    FiniteMap::new(dom, cod, (0..dom).map(|_| rng.gen_range(0..cod)).collect()).unwrap()
}

/// A random reflexive digraph on `n` vertices with edge probability `p`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64) -> ReflexiveDigraph {
    let nbhd = (0..n)
        .map(|v| (0..n).filter(|&u| u == v || rng.gen_bool(p)).collect())
        .collect();
    ReflexiveDigraph::new(nbhd).unwrap()
}
