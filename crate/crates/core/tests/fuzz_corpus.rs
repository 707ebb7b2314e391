//! Replays the checked-in fuzz corpus through the fuzz entry points.

#[path = "../../../fuzz/harness.rs"]
mod harness;

use std::path::Path;

fn replay(target: &str, entry: fn(&[u8])) {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut seeds = 0;
    for entry_path in std::fs::read_dir(&dir).unwrap() {
        let path = entry_path.unwrap().path();
        let data = std::fs::read(&path).unwrap();
        if std::panic::catch_unwind(|| entry(&data)).is_err() {
            panic!("{target}: seed {} panicked", path.display());
        }
        seeds += 1;
    }
    assert!(seeds > 0, "{target}: empty corpus");
}

#[test]
fn parse_poly() {
    replay("parse_poly", harness::parse_poly);
}

#[test]
fn group_json() {
    replay("group_json", harness::group_json);
}

#[test]
fn digraph_json() {
    replay("digraph_json", harness::digraph_json);
}

#[test]
fn map_json() {
    replay("map_json", harness::map_json);
}

#[test]
fn group_spec() {
    replay("group_spec", harness::group_spec);
}

#[test]
fn bool_point() {
    replay("bool_point", harness::bool_point);
}

#[test]
fn arbitrary_bytes_do_not_panic() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xf022);
    let alphabet = b"pqrs01()+, {}[]\":ordertablesizenbhdvaluesz2^cyclic|";
    for _ in 0..4000 {
        let len = rng.gen_range(0..40);
        let data: Vec<u8> = (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
        for entry in [
            harness::parse_poly,
            harness::group_json,
            harness::digraph_json,
            harness::map_json,
            harness::group_spec,
            harness::bool_point,
        ] {
            entry(&data);
        }
    }
}
