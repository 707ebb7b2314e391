//! Entry points shared by the fuzz targets and the corpus replay test.
//!
//! Each function must return normally for every input; errors are fine,
//! panics are findings.

#![allow(dead_code)]

use convdiff::boolean::{parse_polynomials, BoolFunction, BoolPoint, MAX_DIM};
use convdiff::io::{parse_digraph_json, parse_generators, parse_group_json, parse_map_json, GroupSpec};
use convdiff::space::space_properties;
use convdiff::Limits;

fn small_limits() -> Limits {
    Limits {
        group_order: 64,
        hom_candidates: 10_000,
        map_candidates: 10_000,
        product_vertices: 4096,
        oracle_work: 10_000,
        cube_dim: 6,
    }
}

pub fn parse_poly(data: &[u8]) {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(polys) = parse_polynomials(src) {
        let m = polys.iter().filter_map(|p| p.max_var()).max().map_or(1, |v| v + 1);
        if m <= 8 {
            if let Ok(f) = BoolFunction::from_poly(src, m) {
                assert_eq!(f.input_dim(), m);
                assert_eq!(f.output_dim(), polys.len());
            }
        }
    }
}

pub fn group_json(data: &[u8]) {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_group_json(src, &small_limits()) {
        assert!((0..g.order()).all(|x| g.mul(0, x) == x));
        let gens = g.greedy_generators();
        assert!(g.validate_generating_set(&gens).is_ok());
    }
}

pub fn digraph_json(data: &[u8]) {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(x) = parse_digraph_json(src) {
        if x.size() <= 64 {
            let p = space_properties(&x);
            assert!(!p.is_t1 || p.is_t0);
        }
    }
}

pub fn map_json(data: &[u8]) {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(file) = parse_map_json(src) {
        let cod = file
            .codomain_size
            .unwrap_or_else(|| file.values.iter().max().map_or(1, |v| v.saturating_add(1)));
        if let Ok(f) = file.into_map(cod) {
            assert!(f.values().iter().all(|&v| v < cod));
        }
    }
}

pub fn group_spec(data: &[u8]) {
    let Ok(src) = std::str::from_utf8(data) else { return };
    let (spec, gens) = src.split_once('|').unwrap_or((src, ""));
    if let Ok(GroupSpec::Builtin(kind)) = GroupSpec::parse(spec) {
        if let Ok(g) = kind.build(&small_limits()) {
            assert_eq!(g.order() as u128, kind.order());
            if !gens.is_empty() {
                if let Ok(list) = parse_generators(&g, gens) {
                    let _ = g.validate_generating_set(&list);
                }
            }
        }
    }
}

pub fn bool_point(data: &[u8]) {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(p) = BoolPoint::parse(src) {
        assert!(p.dim() >= 1 && p.dim() <= MAX_DIM);
        assert_eq!(BoolPoint::parse(&p.to_string()).unwrap(), p);
    }
}
