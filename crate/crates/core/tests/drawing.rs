use k5n_core::construct::{build_drs, build_zarankiewicz, drs_rotations, from_bags, DRS_LABELS};
use k5n_core::cyclic::{white_rotation, Relabelling};
use k5n_core::drawing::{are_isomorphic, optimal_crossings, zarankiewicz_number, AbstractDrawing};

fn floor_product(m: u64, n: u64) -> u64 {
    let f = |x: u64| (x / 2) * (x.saturating_sub(1) / 2);
    f(m) * f(n)
}

#[test]
fn zarankiewicz_numbers() {
    assert_eq!(zarankiewicz_number(5, 6), 24);
    assert_eq!(zarankiewicz_number(5, 3), 4);
    assert_eq!(zarankiewicz_number(5, 0), 0);
    for n in (0..=100u64).step_by(2) {
        assert_eq!(zarankiewicz_number(5, n), n * n.saturating_sub(2));
    }
    for n in (1..=99u64).step_by(2) {
        assert_eq!(zarankiewicz_number(5, n), (n - 1) * (n - 1));
    }
    for m in 0..12 {
        for n in 0..12 {
            assert_eq!(zarankiewicz_number(m, n), floor_product(m, n));
        }
    }
    assert_eq!(optimal_crossings(12), 120);
}

#[test]
fn fig_two_drawing_has_two_antipodal_pairs() {
    let rotations = ["04321", "04321", "01234", "02431"].map(|w| white_rotation(w).unwrap());
    let d = AbstractDrawing::new(
        rotations.to_vec(),
        &[
            vec![0, 4, 0, 2],
            vec![4, 0, 0, 2],
            vec![0, 0, 0, 2],
            vec![2, 2, 2, 0],
        ],
    )
    .unwrap();
    assert_eq!(d.antipodal_pairs(), vec![(0, 2), (1, 2)]);
    assert!(d.validate().is_valid());
}

#[test]
fn star_witness_has_one_crossing_too_many() {
    let labels: Vec<Vec<u32>> = DRS_LABELS.iter().map(|r| r.to_vec()).collect();
    let d = from_bags(&drs_rotations(), &labels, &[1; 6]);
    assert_eq!(d.total_crossings(), 25);
    assert_eq!(d.total_crossings(), zarankiewicz_number(5, 6) + 1);
    assert!(d.antipodal_pairs().is_empty());
    assert!(!d.is_optimal());
}

#[test]
fn crossings_of_constructions() {
    assert_eq!(build_drs(2, 1).total_crossings(), 120);
    assert_eq!(build_zarankiewicz(6).total_crossings(), 24);
    assert_eq!(build_zarankiewicz(4).antipodal_pairs().len(), 4);
    assert!(build_drs(1, 1).antipodal_pairs().is_empty());
}

#[test]
fn cleaning() {
    let p = white_rotation("01234").unwrap();
    let q = white_rotation("01432").unwrap();
    let d = AbstractDrawing::new(vec![p, p], &[vec![0, 6], vec![6, 0]]).unwrap();
    let report = d.clean_report();
    assert_eq!(report.same_rotation_not_four, vec![(0, 1)]);
    assert_eq!(report.above_four, vec![(0, 1)]);
    let c = d.clean();
    assert_eq!(c.label(0, 1), 4);
    assert_eq!(d.total_crossings() - c.total_crossings(), 2);

    let d = build_drs(2, 1);
    assert_eq!(d.clean(), d);

    let uneven = AbstractDrawing::new(
        vec![p, p, q],
        &[vec![0, 4, 1], vec![4, 0, 3], vec![1, 3, 0]],
    )
    .unwrap();
    assert!(!uneven.is_clean());
    let c = uneven.clean();
    assert!(c.is_clean());
    assert_eq!((c.label(0, 2), c.label(1, 2)), (1, 1));

    let distinct = AbstractDrawing::new(vec![p, q], &[vec![0, 3], vec![3, 0]]).unwrap();
    assert!(distinct.is_clean());
}

#[test]
fn isomorphism_examples() {
    let d = build_drs(2, 1);
    assert_eq!(are_isomorphic(&d, &d), Some(Relabelling::identity(5)));
    assert!(are_isomorphic(&build_drs(1, 0), &build_drs(0, 1)).is_some());
    assert!(are_isomorphic(&build_drs(1, 1), &build_zarankiewicz(8)).is_none());
    let sigma = Relabelling::shift(5, 2);
    let moved = d.relabel(&sigma).unwrap();
    let w = are_isomorphic(&d, &moved).unwrap();
    let mut a: Vec<_> = d.relabel(&w).unwrap().rotations().to_vec();
    let mut b = moved.rotations().to_vec();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn validation_catches_each_violation() {
    let p = white_rotation("01234").unwrap();
    let q = white_rotation("01432").unwrap();
    let r = white_rotation("02143").unwrap();
    let odd = AbstractDrawing::new(
        vec![p, q, r],
        &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]],
    )
    .unwrap();
    assert!(!odd.validate().triangle.is_empty());
    let low = AbstractDrawing::new(vec![p, r], &[vec![0, 0], vec![0, 0]]).unwrap();
    assert_eq!(low.validate().below_antidistance, vec![(0, 1)]);
    let skew = AbstractDrawing::new(vec![p, q], &[vec![0, 1], vec![3, 0]]).unwrap();
    assert_eq!(skew.validate().asymmetric, vec![(0, 1)]);
    let diagonal = AbstractDrawing::new(vec![p, q], &[vec![2, 1], vec![1, 0]]).unwrap();
    assert_eq!(diagonal.validate().nonzero_diagonal, vec![0]);
    for r in 0..=6usize {
        for s in 0..=6 - r {
            assert!(build_drs(r, s).validate().is_valid());
        }
    }
}

#[test]
fn optimal_clean_rows_sum_to_two_n_minus_four() {
    for n in [2usize, 4, 6, 8] {
        let d = build_zarankiewicz(n);
        assert!(d.is_optimal() && d.is_clean());
        for i in 0..n {
            assert_eq!(d.row_sum(i), 2 * n as u64 - 4);
        }
    }
}

#[test]
fn removing_an_antipodal_pair() {
    for n in [4usize, 6, 8] {
        let d = build_zarankiewicz(n);
        let (i, j) = d.antipodal_pairs()[0];
        let smaller = d.without(&[i, j]);
        assert_eq!(smaller.total_crossings(), zarankiewicz_number(5, n as u64) + 8 - 4 * n as u64);
        assert!(smaller.is_optimal());
    }
}
