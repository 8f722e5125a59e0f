use k5n_core::cyclic::{AntidistanceTable, CyclicPermutation, Transposition};
use k5n_core::realize::{
    black_pair_index, fragment_realizable, hub_count, induced_q, profile_exists, scan_hub_counts,
    QMap, Realizability, BLACK_PAIRS,
};

fn cp(s: &str) -> CyclicPermutation {
    CyclicPermutation::parse(s).unwrap()
}

fn t(s: &str) -> Transposition {
    Transposition::parse(s).unwrap()
}

fn q_of(entries: &[((u8, u8), &[&str])]) -> QMap {
    let mut q: QMap = Default::default();
    for &((k, l), ts) in entries {
        let mut set: Vec<Transposition> = ts.iter().map(|s| t(s)).collect();
        set.sort();
        q[black_pair_index(k, l)] = set;
    }
    q
}

/// Labels 1 from vertex 0 and 2 among the others.
fn hub_labels() -> Vec<Vec<u32>> {
    vec![
        vec![0, 1, 1, 1],
        vec![1, 0, 2, 2],
        vec![1, 2, 0, 2],
        vec![1, 2, 2, 0],
    ]
}

/// A 4-cycle of label 1 with both diagonals 2.
fn cycle_labels() -> Vec<Vec<u32>> {
    vec![
        vec![0, 1, 2, 1],
        vec![1, 0, 1, 2],
        vec![2, 1, 0, 1],
        vec![1, 2, 1, 0],
    ]
}

fn hub_rotations() -> Vec<CyclicPermutation> {
    vec![cp("01234"), cp("01432"), cp("04312"), cp("03421")]
}

fn chimera_rotations() -> Vec<CyclicPermutation> {
    vec![cp("01234"), cp("01432"), cp("03241"), cp("04231")]
}

#[test]
fn hub_fragment_is_refuted_after_four_combinations() {
    let verdict = fragment_realizable(&hub_rotations(), &hub_labels());
    assert_eq!(verdict.combinations, 4);
    assert_eq!(verdict.examined, 4);
    let Realizability::Refuted(cert) = verdict.outcome else {
        panic!("hub fragment must be refuted");
    };
    assert!(cert.verify());
    // Combination (a): the first options of both free pairs.
    let a = &cert.combinations[0];
    let expected = q_of(&[
        ((0, 1), &["01", "23"]),
        ((0, 2), &["12", "23", "13"]),
        ((1, 2), &["02", "13"]),
        ((3, 4), &["03", "12"]),
    ]);
    assert_eq!(a.q, expected);
    assert!(profile_exists(&a.q, 4).is_none());
}

#[test]
fn chimera_fragment_is_refuted_after_four_combinations() {
    let verdict = fragment_realizable(&chimera_rotations(), &cycle_labels());
    assert_eq!(verdict.combinations, 4);
    let Realizability::Refuted(cert) = verdict.outcome else {
        panic!("fragment must be refuted");
    };
    assert!(cert.verify());
    let expected = q_of(&[
        ((0, 1), &["01", "23"]),
        ((0, 4), &["02", "13"]),
        ((1, 4), &["02", "13"]),
        ((2, 3), &["03", "12"]),
    ]);
    assert!(cert.combinations.iter().any(|c| c.q == expected));
}

#[test]
fn tampered_certificate_fails_verification() {
    let Realizability::Refuted(mut cert) =
        fragment_realizable(&hub_rotations(), &hub_labels()).outcome
    else {
        panic!("refuted");
    };
    cert.combinations.pop();
    assert!(!cert.verify());
}

#[test]
fn four_cycle_of_bag_rotations_is_realizable() {
    let rots = vec![cp("01234"), cp("04231"), cp("01342"), cp("04312")];
    let verdict = fragment_realizable(&rots, &cycle_labels());
    assert!(verdict.is_realizable());
    if let Realizability::Realizable { assignment, profile } = verdict.outcome {
        assert!(profile.is_consistent());
        assert_eq!(induced_q(&assignment), profile.q);
    }
}

#[test]
fn coupling_is_symmetric_on_every_combination() {
    let Realizability::Refuted(cert) =
        fragment_realizable(&hub_rotations(), &hub_labels()).outcome
    else {
        panic!("refuted");
    };
    let total: u32 = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).map(|(i, j)| hub_labels()[i][j]).sum();
    for record in &cert.combinations {
        let mut size = 0;
        for ((i, j), options) in &cert.route_options {
            let idx = cert.route_options.iter().position(|(p, _)| p == &(*i, *j)).unwrap();
            let route = &options[record.choice[idx]];
            size += route.len();
            for (b, &(k, l)) in BLACK_PAIRS.iter().enumerate() {
                let in_p = route.contains(Transposition::new(k, l).unwrap());
                let in_q = record.q[b].contains(&Transposition::new(*i as u8, *j as u8).unwrap());
                assert_eq!(in_p, in_q);
            }
        }
        assert_eq!(size as u32, total);
    }
}

#[test]
fn unique_hub() {
    let table = AntidistanceTable::new();
    assert_eq!(hub_count(&table, &cp("01432"), &cp("04312"), &cp("03421")), 1);
    let (triples, max) = scan_hub_counts(&table);
    assert_eq!(triples, 2024);
    assert_eq!(max, 1);
}
