use std::collections::BTreeSet;

use k5n_core::classify::{
    candidate_keys, classify_antipodal_free_optimal, completion_labels, enumerate_feasible_cores,
    labels_triangle_valid, parity_cuts, realize_core_rotations, realize_key_rotations,
    verify_decomposition_theorem, CoreShape, Elimination, Filter, Verdict,
};
use k5n_core::construct::{add_antipodal_pair, build_drs, build_zarankiewicz, drs_rotations, DRS_LABELS};
use k5n_core::cyclic::{AntidistanceTable, CyclicPermutation, Relabelling};
use k5n_core::graph::{graphs_up_to_isomorphism, SimpleGraph};
use k5n_core::keycore::build_key;

fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 0..m {
            if !cur.contains(&v) {
                cur.push(v);
                go(m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut out);
    out
}

fn canonical_labels(labels: &[Vec<u32>], perms: &[Vec<usize>]) -> Vec<u32> {
    let m = labels.len();
    perms
        .iter()
        .map(|p| {
            let mut code = Vec::new();
            for i in 0..m {
                for j in i + 1..m {
                    code.push(labels[p[i]][p[j]]);
                }
            }
            code
        })
        .min()
        .unwrap()
}

/// Every triangle-valid labelling by {1,2,3}, up to isomorphism, by brute force.
fn brute_force_keys(m: usize) -> BTreeSet<Vec<u32>> {
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let perms = permutations(m);
    let mut out = BTreeSet::new();
    for code in 0..3usize.pow(pairs.len() as u32) {
        let mut labels = vec![vec![0u32; m]; m];
        let mut c = code;
        for &(i, j) in &pairs {
            let l = (c % 3) as u32 + 1;
            c /= 3;
            labels[i][j] = l;
            labels[j][i] = l;
        }
        if labels_triangle_valid(&labels) {
            out.insert(canonical_labels(&labels, &perms));
        }
    }
    out
}

#[test]
fn parity_completions_match_brute_force() {
    for m in 1..=5 {
        let perms = permutations(m);
        let mut from_cores = BTreeSet::new();
        let mut count = 0;
        for g in graphs_up_to_isomorphism(m) {
            for side in parity_cuts(&g) {
                let labels = completion_labels(&g, side);
                assert!(labels_triangle_valid(&labels));
                from_cores.insert(canonical_labels(&labels, &perms));
                count += 1;
            }
        }
        assert_eq!(count, from_cores.len(), "duplicate completions for m = {m}");
        assert_eq!(from_cores, brute_force_keys(m), "m = {m}");
    }
}

#[test]
fn non_bipartite_cores_fail_the_triangle_condition() {
    let c5 = SimpleGraph::cycle(5);
    assert!(parity_cuts(&c5).is_empty());
    let c = candidate_keys(5)
        .into_iter()
        .find(|c| c.core.is_isomorphic(&c5))
        .unwrap();
    assert!(c.labels.is_none());
}

#[test]
fn structural_filters_leave_two_cores() {
    for n in [4u64, 8, 12, 16] {
        let all = enumerate_feasible_cores(n).unwrap();
        let shapes: BTreeSet<CoreShape> = all
            .iter()
            .filter(|c| c.survived())
            .map(|c| CoreShape::of(&c.core).expect("known core"))
            .collect();
        let expected: BTreeSet<CoreShape> = if n == 4 {
            [CoreShape::FourCycle].into()
        } else {
            [CoreShape::FourCycle, CoreShape::C6Bar].into()
        };
        assert_eq!(shapes, expected, "n = {n}");
    }
    for n in [2u64, 6, 10, 14] {
        let all = enumerate_feasible_cores(n).unwrap();
        assert!(all.iter().all(|c| !c.survived()));
    }
}

#[test]
fn survivors_of_the_structure_are_killed_only_by_the_linear_system_at_n_2_mod_4() {
    let all = enumerate_feasible_cores(10).unwrap();
    let linear: Vec<_> = all
        .iter()
        .filter(|c| matches!(c.eliminated, Some(Elimination::NoPositiveSolution { n: 10 })))
        .collect();
    assert_eq!(linear.len(), 2);
}

#[test]
fn every_certificate_replays() {
    for n in [6u64, 12] {
        let result = classify_antipodal_free_optimal(n).unwrap();
        assert!(result.replay_all());
        for c in &result.candidates {
            let index = c.eliminated.as_ref().map(|e| Filter::ALL.iter().position(|&f| f == e.filter()).unwrap());
            let passed: Vec<Filter> = Filter::ALL[..index.unwrap_or(c.passed.len())].to_vec();
            assert_eq!(c.passed, passed);
        }
    }
}

#[test]
fn certificates_do_not_replay_on_other_candidates() {
    let result = classify_antipodal_free_optimal(12).unwrap();
    let survivor = result.survivors().next().unwrap();
    let mut wrong = 0;
    for c in &result.candidates {
        if let Some(e) = &c.eliminated {
            if !matches!(e, Elimination::NoPositiveSolution { .. }) && !e.replay(survivor) {
                wrong += 1;
            }
        }
    }
    assert_eq!(wrong, result.candidates.len() - 2);
}

#[test]
fn drs_keys_pass_every_filter() {
    let table = AntidistanceTable::new();
    for (r, s) in [(1, 0), (1, 1), (2, 1), (3, 2)] {
        let key = build_key(&build_drs(r, s)).unwrap();
        let core = key.core().graph;
        let n = 4 * (r + s) as u64;
        let result = classify_antipodal_free_optimal(n).unwrap();
        let hit = result
            .survivors()
            .find(|c| c.core.is_isomorphic(&core))
            .expect("drs core survives");
        assert_eq!(hit.passed, Filter::ALL.to_vec());
        for i in 0..key.vertex_count() {
            for j in 0..key.vertex_count() {
                if i != j {
                    let ad = table.antidistance(&key.vertices()[i], &key.vertices()[j]);
                    assert_eq!(ad, key.label(i, j));
                }
            }
        }
    }
}

/// Whether `rep` is `σ(paper ∘ φ)` for a relabelling σ and a vertex bijection
/// φ carrying `labels` onto `paper_labels`.
fn same_up_to_relabelling(
    rep: &[CyclicPermutation],
    labels: &[Vec<u32>],
    paper: &[CyclicPermutation],
    paper_labels: &[Vec<u32>],
) -> bool {
    let m = rep.len();
    let perms = permutations(m);
    let relabellings = Relabelling::all(5);
    perms.iter().any(|phi| {
        (0..m).all(|i| (0..m).all(|j| i == j || labels[i][j] == paper_labels[phi[i]][phi[j]]))
            && relabellings
                .iter()
                .any(|sigma| (0..m).all(|i| paper[phi[i]].relabel(sigma).unwrap() == rep[i]))
    })
}

fn parse(words: &[&str]) -> Vec<CyclicPermutation> {
    words.iter().map(|w| CyclicPermutation::parse(w).unwrap()).collect()
}

#[test]
fn four_cycle_normal_form() {
    let reps = realize_core_rotations(CoreShape::FourCycle);
    assert_eq!(reps.len(), 1);
    let labels = CoreShape::FourCycle.key_labels();
    let paper_labels = vec![
        vec![0, 1, 2, 1],
        vec![1, 0, 1, 2],
        vec![2, 1, 0, 1],
        vec![1, 2, 1, 0],
    ];
    for pair in [["04231", "04312"], ["04312", "04231"]] {
        let paper = parse(&["01234", pair[0], "01342", pair[1]]);
        assert!(same_up_to_relabelling(&reps[0], &labels, &paper, &paper_labels));
    }
    assert_eq!(reps[0][0], CyclicPermutation::parse("01234").unwrap());
}

#[test]
fn c6_bar_normal_form() {
    let reps = realize_core_rotations(CoreShape::C6Bar);
    assert_eq!(reps.len(), 1);
    let paper_labels: Vec<Vec<u32>> = DRS_LABELS.iter().map(|r| r.to_vec()).collect();
    let labels = CoreShape::C6Bar.key_labels();
    assert!(same_up_to_relabelling(&reps[0], &labels, &drs_rotations(), &paper_labels));
    let swapped = parse(&["01234", "01432", "02314", "04312", "04231", "01342"]);
    let swapped_labels: Vec<Vec<u32>> = [0usize, 4, 5, 3, 1, 2]
        .iter()
        .map(|&i| [0usize, 4, 5, 3, 1, 2].iter().map(|&j| DRS_LABELS[i][j]).collect())
        .collect();
    assert!(same_up_to_relabelling(&reps[0], &labels, &swapped, &swapped_labels));
}

#[test]
fn exact_antidistance_assignments_before_fragments() {
    assert_eq!(realize_key_rotations(&CoreShape::FourCycle.key_labels()).len(), 2);
    assert_eq!(realize_key_rotations(&CoreShape::C6Bar.key_labels()).len(), 4);
    let t = AntidistanceTable::new();
    for shape in [CoreShape::FourCycle, CoreShape::C6Bar] {
        let labels = shape.key_labels();
        for a in realize_key_rotations(&labels) {
            for i in 0..a.len() {
                for j in 0..a.len() {
                    if i != j {
                        assert_eq!(t.antidistance(&a[i], &a[j]), labels[i][j]);
                    }
                }
            }
        }
    }
}

#[test]
fn classification_small_cases() {
    for n in [2u64, 6, 10] {
        let r = classify_antipodal_free_optimal(n).unwrap();
        assert_eq!(r.verdict, Verdict::NoAntipodalFreeDrawing);
        assert!(r.is_consistent());
    }
    let r = classify_antipodal_free_optimal(4).unwrap();
    assert_eq!(r.family_parameters(), vec![(1, 0)]);
    let r = classify_antipodal_free_optimal(8).unwrap();
    assert_eq!(r.family_parameters(), vec![(2, 0), (1, 1)]);
    let Verdict::Families(f) = &r.verdict else { panic!() };
    assert_eq!(f[0].core, CoreShape::FourCycle);
    assert_eq!(f[1].core, CoreShape::C6Bar);
    assert_eq!(f[1].classes, vec![(1, 1)]);
    let r = classify_antipodal_free_optimal(12).unwrap();
    let Verdict::Families(f) = &r.verdict else { panic!() };
    assert_eq!(f[1].classes, vec![(2, 1), (1, 2)]);
    assert!(r.is_consistent());
}

#[test]
fn decomposition_theorem_reports() {
    let report = verify_decomposition_theorem(&add_antipodal_pair(&build_drs(1, 1)).unwrap());
    assert!(report.holds());
    assert_eq!(report.steps.len(), 1);
    assert_eq!(report.identified, Some((1, 1)));
    let report = verify_decomposition_theorem(&build_zarankiewicz(6));
    assert!(report.holds());
    assert_eq!(report.steps.len(), 3);
    assert_eq!(report.identified, Some((0, 0)));
    let report = verify_decomposition_theorem(&build_drs(3, 0));
    assert!(report.holds() && report.steps.is_empty());
    assert_eq!(report.identified, Some((3, 0)));
    let mut bad = build_drs(1, 1);
    bad.set_label(0, 4, 3);
    let report = verify_decomposition_theorem(&bad);
    assert!(!report.holds());
    assert!(report.error.is_some());
}
