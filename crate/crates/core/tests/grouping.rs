mod common;

use common::Gen;
use sympauli::{
    group_greedy, group_greedy_counted, group_greedy_parallel, validate_partition, CommutationPartition,
    PartitionViolation, PauliSum,
};
use sympauli_oracle::first_fit_groups;

fn labels_of(s: &PauliSum<2>) -> Vec<String> {
    s.terms().iter().map(|t| t.string.to_label()).collect()
}

fn random_sum(g: &mut Gen, n: usize, m: usize) -> PauliSum<2> {
    let entries: Vec<_> = (0..m).map(|_| (1.0, g.label(n))).collect();
    if m == 0 {
        return PauliSum::new(n).unwrap();
    }
    PauliSum::from_labels(n, entries).unwrap()
}

#[test]
fn matches_letter_level_first_fit() {
    let mut g = Gen::new(21);
    for _ in 0..200 {
        let s = random_sum(&mut g, 6, 64);
        let p = group_greedy(&s);
        assert_eq!(validate_partition(&s, &p), Ok(()));
        assert_eq!(p.groups(), first_fit_groups(&labels_of(&s)).as_slice());
    }
}

#[test]
fn fuzz_all_variants() {
    let mut g = Gen::new(22);
    let mut diverged = 0;
    let mut fewer = 0;
    for _ in 0..1000 {
        let n = 1 + g.below(128);
        let m = g.below(80);
        let s = random_sum(&mut g, n, m);
        let (seq, checks) = group_greedy_counted(&s);
        assert_eq!(validate_partition(&s, &seq), Ok(()));
        assert!(checks <= (m * m) as u64, "{checks} checks for {m} terms");
        if m > 0 {
            assert!(seq.num_groups() >= 1 && seq.num_groups() <= m);
        }
        assert_eq!(group_greedy_parallel(&s, 1), seq);
        for t in [2, 4, 8] {
            let par = group_greedy_parallel(&s, t);
            assert_eq!(validate_partition(&s, &par), Ok(()), "T={t}");
            assert_eq!(group_greedy_parallel(&s, t), par, "deterministic at T={t}");
            if par != seq {
                diverged += 1;
                if par.num_groups() < seq.num_groups() {
                    fewer += 1;
                }
            }
        }
        assert_eq!(validate_partition(&s.to_soa(), &seq), Ok(()));
        assert_eq!(group_greedy(&s.to_soa()), seq);
    }
    eprintln!("parallel partitions differing from sequential: {diverged} of 3000 ({fewer} with fewer groups)");
}

#[test]
fn all_commuting_any_chunks() {
    let mut g = Gen::new(23);
    let entries: Vec<_> = (0..128)
        .map(|_| (1.0, g.label(90).replace(['X', 'Y'], "Z")))
        .collect();
    let s = PauliSum::<2>::from_labels(90, entries).unwrap();
    for t in [0, 1, 2, 3, 4, 8, 200] {
        let p = group_greedy_parallel(&s, t);
        assert_eq!(p.num_groups(), 1, "T={t}");
        assert_eq!(p.groups()[0].len(), 128);
    }
}

#[test]
fn examples() {
    let s = PauliSum::<1>::from_labels(2, [(1.0, "ZI"), (1.0, "IZ"), (1.0, "ZZ")]).unwrap();
    assert_eq!(group_greedy(&s).groups(), &[vec![0, 1, 2]]);
    let s = PauliSum::<1>::from_labels(1, [(1.0, "X"), (1.0, "Z")]).unwrap();
    assert_eq!(group_greedy(&s).groups(), &[vec![0], vec![1]]);
    let bad = CommutationPartition::from_groups(vec![vec![0, 1]], 2);
    assert_eq!(
        validate_partition(&s, &bad),
        Err(PartitionViolation::Anticommuting { group: 0, a: 0, b: 1 })
    );
    let empty = PauliSum::<1>::new(3).unwrap();
    assert_eq!(group_greedy(&empty).num_groups(), 0);
    assert_eq!(group_greedy_parallel(&empty, 4).num_groups(), 0);
}

#[test]
fn validator_rejects_malformed() {
    let s = PauliSum::<1>::from_labels(1, [(1.0, "Z"), (1.0, "Z"), (1.0, "Z")]).unwrap();
    let p = |g: Vec<Vec<usize>>, m| CommutationPartition::from_groups(g, m);
    assert_eq!(validate_partition(&s, &p(vec![vec![0, 1, 2]], 3)), Ok(()));
    assert_eq!(
        validate_partition(&s, &p(vec![vec![0, 1]], 3)),
        Err(PartitionViolation::Missing(2))
    );
    assert_eq!(
        validate_partition(&s, &p(vec![vec![0, 1], vec![1, 2]], 3)),
        Err(PartitionViolation::Duplicate(1))
    );
    assert_eq!(
        validate_partition(&s, &p(vec![vec![0, 1, 2, 3]], 3)),
        Err(PartitionViolation::IndexOutOfRange(3))
    );
    assert!(matches!(
        validate_partition(&s, &p(vec![vec![0, 1, 2]], 4)),
        Err(PartitionViolation::SourceLength { expected: 3, found: 4 })
    ));
}

#[test]
fn text_round_trip() {
    let mut g = Gen::new(24);
    let s = random_sum(&mut g, 10, 50);
    let p = group_greedy(&s);
    let text = p.to_text();
    assert_eq!(CommutationPartition::from_text(&text).unwrap(), p);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    p.write(&path).unwrap();
    assert_eq!(CommutationPartition::read(&path).unwrap(), p);
    assert!(CommutationPartition::from_text("0 1\n2 x\n").is_err());
}
