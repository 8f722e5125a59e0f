//! Generators shared by the property suites.

use proptest::prelude::*;

use k5n_core::cyclic::{AntidistanceTable, CyclicPermutation, Relabelling};
use k5n_core::drawing::AbstractDrawing;

pub fn rotation() -> impl Strategy<Value = CyclicPermutation> {
    (0usize..24).prop_map(|i| CyclicPermutation::all(5)[i])
}

pub fn relabelling() -> impl Strategy<Value = Relabelling> {
    (0usize..120).prop_map(|i| Relabelling::all(5)[i].clone())
}

/// A valid drawing: each label is the antidistance plus 0, 2 or 4, then
/// raised by 2 on triangles that still sum below 4.
pub fn drawing() -> impl Strategy<Value = AbstractDrawing> {
    (1usize..=7).prop_flat_map(|n| {
        (
            prop::collection::vec(0usize..6, n),
            prop::collection::vec(0u32..=2, n * (n - 1) / 2),
        )
            .prop_map(move |(rots, extra)| {
                let table = AntidistanceTable::new();
                let pool = CyclicPermutation::all(5);
                let rotations: Vec<_> = rots.iter().map(|&i| pool[i * 4]).collect();
                let mut lambda = vec![vec![0u32; n]; n];
                let mut it = extra.into_iter();
                for i in 0..n {
                    for j in i + 1..n {
                        let x = table.antidistance(&rotations[i], &rotations[j]) + 2 * it.next().unwrap();
                        lambda[i][j] = x;
                        lambda[j][i] = x;
                    }
                }
                let mut d = AbstractDrawing::new(rotations, &lambda).unwrap();
                while let Some(&(i, j, _)) = d.validate_with(&table).triangle.first() {
                    d.set_label(i, j, d.label(i, j) + 2);
                }
                d
            })
    })
}
