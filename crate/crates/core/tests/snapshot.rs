use evenmon::engine::closure;
use evenmon::engine::snapshot::{decode, enumerate_cached, snapshot_file_name, verify};
use evenmon::named::{generating_set, GeneratingFamily, GeneratingSetSpec};

#[test]
fn cache_is_written_reused_and_repaired() {
    let dir = tempfile::tempdir().unwrap();
    let gens = generating_set(&GeneratingSetSpec::new(GeneratingFamily::DeltaMonoid, 5)).unwrap();

    let first = enumerate_cached(dir.path(), &gens, 5, 1 << 20).unwrap();
    assert!(!first.reused);
    assert_eq!(first.count, 1911);
    assert_eq!(first.path, dir.path().join(snapshot_file_name(&gens, 5)));

    let second = enumerate_cached(dir.path(), &gens, 5, 1 << 20).unwrap();
    assert!(second.reused);

    let bytes = std::fs::read(&first.path).unwrap();
    let elems = decode(&bytes).unwrap();
    let m = closure(&gens, 5, 1 << 20).unwrap();
    assert_eq!(elems, m.iter().collect::<Vec<_>>());

    // a damaged file is rebuilt rather than trusted
    let mut bad = bytes.clone();
    let last = bad.len() - 1;
    bad[last] ^= 0xff;
    std::fs::write(&first.path, &bad).unwrap();
    assert!(verify(&bad).is_err());
    let third = enumerate_cached(dir.path(), &gens, 5, 1 << 20).unwrap();
    assert!(!third.reused);
    assert_eq!(std::fs::read(&first.path).unwrap(), bytes);
}

#[test]
fn digest_depends_on_generators_not_names() {
    let a = generating_set(&GeneratingSetSpec::new(GeneratingFamily::GammaGroup, 7)).unwrap();
    let mut b = a.clone();
    b.reverse();
    assert_ne!(snapshot_file_name(&a, 7), snapshot_file_name(&b, 7));
    assert_eq!(snapshot_file_name(&a, 7), snapshot_file_name(&a.clone(), 7));
}
