use std::fs;

use num_bigint::BigUint;
use schurtrunc::cache::{load, save, LoadStatus};
use schurtrunc::kostant::{kostant_p, kostka};
use schurtrunc::memo::kostant_table;
use schurtrunc::partition::Partition;
use schurtrunc::weight::Weight;

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

#[test]
fn round_trip_and_corruption() {
    let dir = std::env::temp_dir().join(format!("schurtrunc-cache-test-{}", std::process::id()));
    let path = dir.join("memo.json");
    let _ = fs::remove_dir_all(&dir);

    assert_eq!(load(&path), LoadStatus::Missing);
    assert_eq!(kostant_p(&w(&[2, 0, -2])), BigUint::from(3u32));
    let lambda: Partition = "2,1".parse().unwrap();
    assert_eq!(kostka(&lambda, &w(&[1, 1, 1])).unwrap(), BigUint::from(2u32));
    save(&path).unwrap();
    let first = fs::read_to_string(&path).unwrap();
    save(&path).unwrap();
    assert_eq!(fs::read_to_string(&path).unwrap(), first);

    match load(&path) {
        LoadStatus::Loaded { kostant, kostka } => assert!(kostant > 0 && kostka > 0),
        other => panic!("unexpected {other:?}"),
    }
    assert_eq!(kostant_table().get(&w(&[2, 0, -2])), Some(BigUint::from(3u32)));

    for garbage in ["not json", r#"{"version":99,"kostant":[],"kostka":[]}"#, r#"{"version":1,"kostant":[[[1,-1],"x"]],"kostka":[]}"#] {
        fs::write(&path, garbage).unwrap();
        assert_eq!(load(&path), LoadStatus::Discarded);
    }
    assert_eq!(kostant_p(&w(&[1, 0, -1])), BigUint::from(2u32));
    fs::remove_dir_all(&dir).unwrap();
}
