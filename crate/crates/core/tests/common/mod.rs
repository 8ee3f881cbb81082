#![allow(dead_code)]

use toric_puzzle::{CharMatrix, Ring};

pub fn z2(rows: &[&[i64]]) -> CharMatrix {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    CharMatrix::from_i64(Ring::Z2, &rows).unwrap()
}

/// The eleven named hexagon maps.
pub fn hexagon_maps() -> Vec<(&'static str, CharMatrix)> {
    vec![
        ("1", z2(&[&[1, 0, 1, 0, 1, 0], &[0, 1, 0, 1, 0, 1]])),
        ("2,1", z2(&[&[1, 0, 1, 0, 1, 0], &[0, 1, 1, 1, 1, 1]])),
        ("2,2", z2(&[&[1, 0, 1, 1, 1, 1], &[0, 1, 0, 1, 0, 1]])),
        ("2,3", z2(&[&[1, 0, 1, 0, 1, 0], &[0, 1, 1, 1, 0, 1]])),
        ("2,4", z2(&[&[1, 0, 1, 1, 1, 0], &[0, 1, 0, 1, 0, 1]])),
        ("2,5", z2(&[&[1, 0, 1, 0, 1, 0], &[0, 1, 0, 1, 1, 1]])),
        ("2,6", z2(&[&[1, 0, 1, 0, 1, 1], &[0, 1, 0, 1, 0, 1]])),
        ("3,1", z2(&[&[1, 0, 1, 1, 1, 0], &[0, 1, 1, 0, 1, 1]])),
        ("3,2", z2(&[&[1, 0, 1, 1, 0, 1], &[0, 1, 0, 1, 1, 1]])),
        ("3,3", z2(&[&[1, 0, 1, 0, 1, 1], &[0, 1, 1, 1, 0, 1]])),
        ("4", z2(&[&[1, 0, 1, 1, 0, 1], &[0, 1, 1, 0, 1, 1]])),
    ]
}

/// The two maps over the cyclic 4-polytope with 7 vertices, in another vertex order.
pub fn cyclic_maps() -> Vec<CharMatrix> {
    vec![
        z2(&[
            &[1, 0, 0, 0, 1, 0, 1],
            &[0, 1, 0, 0, 0, 1, 1],
            &[0, 0, 1, 0, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1],
        ]),
        z2(&[
            &[1, 0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 0, 1, 0, 1],
            &[0, 0, 1, 0, 0, 1, 1],
            &[0, 0, 0, 1, 1, 1, 0],
        ]),
    ]
}

/// Class index of a named hexagon map in a pre-diagram.
pub fn hex_index(pre: &toric_puzzle::PreDiagram, name: &str) -> usize {
    let (_, m) = hexagon_maps()
        .into_iter()
        .find(|(n, _)| *n == name)
        .expect("known name");
    pre.index_of(&m).expect("listed class")
}
