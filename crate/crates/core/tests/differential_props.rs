mod common;

use convdiff::cayley::diff_space;
use convdiff::differential::{
    differential_oracle, differentials_at, differentials_by_odd_order_clause, differentials_by_theorem,
    DifferentialQuery, OracleMode,
};
use convdiff::group::GroupKind;
use convdiff::space::{continuous_maps, FiniteMap, MapSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{cayley, cayley_matrix, random_digraph, random_map};

#[test]
fn filter_members_agree_on_small_digraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut queries = 0;
    while queries < 300 {
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let x = random_digraph(&mut rng, n, 0.4);
        let y = random_digraph(&mut rng, m, 0.5);
        let mut maps = continuous_maps(&x, &y).unwrap();
        while maps.len() > 8 {
            maps.remove(rng.gen_range(0..maps.len()));
        }
        if maps.is_empty() {
            continue;
        }
        let space = MapSpace::subspace(x.clone(), y.clone(), maps).unwrap();
        let f = random_map(&mut rng, n, m);
        for a in 0..n {
            let q = DifferentialQuery::new(&space, &f, a).unwrap();
            let direct = differentials_at(&q);
            for mode in [
                OracleMode::SmallestNeighborhoods,
                OracleMode::FilterSweep,
                OracleMode::FilterMembers,
            ] {
                assert_eq!(differential_oracle(&q, mode).unwrap(), direct, "{mode:?} {f:?} at {a}");
            }
            queries += 1;
        }
    }
}

#[test]
fn cayley_matrix_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let matrix = cayley_matrix();
    for (dn, dom) in &matrix {
        for (cn, cod) in &matrix {
            if dom.order() * cod.order() > 24 {
                continue;
            }
            let ds = diff_space(dom, cod).unwrap();
            let space = ds.space();
            // every candidate is a differential of itself everywhere
            for (l, map) in space.maps().iter().enumerate() {
                for a in 0..dom.order() {
                    let q = DifferentialQuery::new(&ds, map, a).unwrap();
                    assert!(differentials_at(&q).contains(&l), "{dn}->{cn}: {map:?} at {a}");
                }
            }
            for _ in 0..20 {
                let f = random_map(&mut rng, dom.order(), cod.order());
                for a in 0..dom.order() {
                    let q = DifferentialQuery::new(&ds, &f, a).unwrap();
                    let found = differentials_at(&q);
                    assert_eq!(differentials_by_theorem(&q).unwrap(), found, "{dn}->{cn}: {f:?} at {a}");
                    // an isolated candidate is a differential iff it agrees with f near a
                    for l in 0..ds.len() {
                        if ds.is_isolated(l) {
                            let agrees = dom
                                .digraph()
                                .nbhd(a)
                                .iter()
                                .all(|&x| space.map(l).apply(x) == f.apply(x));
                            assert_eq!(found.contains(&l), agrees, "{dn}->{cn}: {f:?} at {a}, L={l}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn odd_order_clause_counterexamples() {
    let z4 = cayley(GroupKind::Cyclic(4));
    let z2 = cayley(GroupKind::Cyclic(2));
    let ds = diff_space(&z4, &z2).unwrap();
    let f = FiniteMap::new(4, 2, vec![0, 1, 1, 0]).unwrap();
    let q = DifferentialQuery::new(&ds, &f, 1).unwrap();
    let truth = differentials_at(&q);
    assert_eq!(differentials_by_theorem(&q).unwrap(), truth);
    assert_ne!(differentials_by_odd_order_clause(&q).unwrap(), truth);

    let s3 = cayley(GroupKind::Symmetric(3));
    let ds = diff_space(&s3, &s3).unwrap();
    assert_eq!(ds.len(), 3);
    let f = FiniteMap::new(6, 6, vec![0, 3, 0, 0, 0, 0]).unwrap();
    let q = DifferentialQuery::new(&ds, &f, 0).unwrap();
    let truth = differentials_at(&q);
    assert_eq!(differentials_by_theorem(&q).unwrap(), truth);
    assert_ne!(differentials_by_odd_order_clause(&q).unwrap(), truth);
}

#[test]
fn odd_order_clause_holds_on_hypercubes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for m in 1..=3 {
        for n in 1..=2 {
            let dom = cayley(GroupKind::Z2Power(m));
            let cod = cayley(GroupKind::Z2Power(n));
            let ds = diff_space(&dom, &cod).unwrap();
            for _ in 0..40 {
                let f = random_map(&mut rng, dom.order(), cod.order());
                for a in 0..dom.order() {
                    let q = DifferentialQuery::new(&ds, &f, a).unwrap();
                    assert_eq!(differentials_by_odd_order_clause(&q).unwrap(), differentials_at(&q));
                }
            }
        }
    }
}

#[test]
fn query_rejects_mismatched_inputs() {
    let s3 = cayley(GroupKind::Symmetric(3));
    let ds = diff_space(&s3, &s3).unwrap();
    let short = FiniteMap::identity(5);
    assert!(DifferentialQuery::new(&ds, &short, 0).is_err());
    let id = FiniteMap::identity(6);
    assert!(DifferentialQuery::new(&ds, &id, 6).is_err());
}
