//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use catkit_core::builders::{poset_category, PosetData};
use catkit_core::finset::finset_skeleton;
use catkit_core::nattrans::all_functors;
use catkit_core::topo::{IntMatrix, SimplicialComplex};
use catkit_core::Functor;

/// Six-vertex triangulation of the projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let facets = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
        [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
    ];
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_indices(6, &facets).expect("valid complex")
}

/// Full simplex on `n` vertices, whose top boundary matrices are dense.
pub fn simplex(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_indices(n, &[(0..n).collect()]).expect("valid complex")
}

/// Deterministic dense integer matrix with entries in `-4..=4`.
pub fn dense_matrix(rows: usize, cols: usize) -> IntMatrix {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    (state % 9) as i64 - 4
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&data)
}

/// Cospan diagrams `a -> c <- b` in finite sets of size at most 3.
pub fn cospans() -> Vec<Functor> {
    let shape = Arc::new(poset_category(&PosetData::new(&["a", "b", "c"], &[("a", "c"), ("b", "c")])).expect("poset"));
    let target = Arc::new(finset_skeleton(3).expect("skeleton"));
    all_functors(&shape, &target, 1_000_000).expect("within bound")
}
