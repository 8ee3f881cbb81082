mod common;

use std::collections::BTreeSet;

use common::{cyclic_maps, hex_index, hexagon_maps};
use toric_puzzle::charmap::enumerate_z2;
use toric_puzzle::diagram::{
    build_diagram, build_prediagram, edge_exists, edge_lift, edge_row, lambda_power,
    square_realizable, RealizableSquare,
};
use toric_puzzle::puzzle::{
    enumerate_realizable, is_realizable, is_realizable_by_squares, is_realizable_by_subcubes,
    reducibility_report, Puzzle, WedgeContext,
};
use toric_puzzle::simplicial::{cyclic_boundary, ngon};
use toric_puzzle::{Ring, VertexSet, WedgeVector};

#[test]
fn hexagon_classes_are_the_named_eleven() {
    let k = ngon(6).unwrap();
    let got: BTreeSet<_> = enumerate_z2(&k)
        .unwrap()
        .into_iter()
        .map(|c| c.canonical)
        .collect();
    let want: BTreeSet<_> = hexagon_maps()
        .into_iter()
        .map(|(_, m)| m.canonical().unwrap())
        .collect();
    assert_eq!(got.len(), 11);
    assert_eq!(got, want);
}

#[test]
fn cyclic_classes_are_the_reference_two() {
    let k = cyclic_boundary(4, 7).unwrap();
    assert!(k.is_seed());
    let got: Vec<_> = enumerate_z2(&k)
        .unwrap()
        .into_iter()
        .map(|c| c.canonical)
        .collect();
    // the reference maps use another vertex order: our vertex i is their
    // vertex order[i]
    let order = [0, 1, 4, 2, 3, 5, 6];
    let mut want: Vec<_> = cyclic_maps()
        .iter()
        .map(|m| m.select_columns(&order).canonical().unwrap())
        .collect();
    want.sort();
    assert_eq!(got, want);
    let pre = build_prediagram(&k, Ring::Z2).unwrap();
    assert!(pre.edges().is_empty());
}

/// Known pre-diagram edges: (name, name, colors).
fn reference_edges() -> Vec<(&'static str, &'static str, Vec<usize>)> {
    let red = vec![2, 4, 6];
    let blue = vec![1, 3, 5];
    vec![
        ("1", "2,1", red.clone()),
        ("1", "2,3", red.clone()),
        ("1", "2,5", red.clone()),
        ("2,1", "2,5", red.clone()),
        ("2,1", "2,3", red.clone()),
        ("2,5", "2,3", red.clone()),
        ("1", "2,2", blue.clone()),
        ("1", "2,4", blue.clone()),
        ("1", "2,6", blue.clone()),
        ("2,4", "2,2", blue.clone()),
        ("2,4", "2,6", blue.clone()),
        ("2,2", "2,6", blue.clone()),
        ("3,1", "2,1", vec![3, 5]),
        ("3,1", "2,4", vec![2, 6]),
        ("3,2", "2,2", vec![4, 6]),
        ("3,2", "2,5", vec![1, 3]),
        ("3,3", "2,3", vec![1, 5]),
        ("3,3", "2,6", vec![2, 4]),
        ("4", "3,1", vec![1, 4]),
        ("4", "3,2", vec![2, 5]),
        ("4", "3,3", vec![3, 6]),
    ]
}

#[test]
fn hexagon_prediagram_matches_reference_edges() {
    let pre = build_prediagram(&ngon(6).unwrap(), Ring::Z2).unwrap();
    let mut want = BTreeSet::new();
    for (a, b, colors) in reference_edges() {
        let (a, b) = (hex_index(&pre, a), hex_index(&pre, b));
        for c in colors {
            want.insert((a.min(b), a.max(b), c - 1));
        }
    }
    let got: BTreeSet<_> = pre.edges().iter().map(|e| (e.a, e.b, e.color)).collect();
    assert_eq!(want.len(), 54);
    assert_eq!(got, want);

    let l1 = hex_index(&pre, "1");
    for (name, colors) in [("2,1", [1, 3, 5]), ("2,3", [1, 3, 5]), ("2,5", [1, 3, 5])] {
        assert_eq!(pre.colors_between(l1, hex_index(&pre, name)), colors);
    }
    for (name, colors) in [("2,2", [0, 2, 4]), ("2,4", [0, 2, 4]), ("2,6", [0, 2, 4])] {
        assert_eq!(pre.colors_between(l1, hex_index(&pre, name)), colors);
    }
    let l4 = hex_index(&pre, "4");
    let joined: BTreeSet<usize> = (0..6).flat_map(|v| pre.neighbors(l4, v).to_vec()).collect();
    let threes: BTreeSet<usize> = ["3,1", "3,2", "3,3"]
        .iter()
        .map(|n| hex_index(&pre, n))
        .collect();
    assert_eq!(joined, threes);
}

#[test]
fn edge_criterion_examples() {
    let maps = hexagon_maps();
    let get = |n: &str| maps.iter().find(|(x, _)| *x == n).unwrap().1.clone();
    let (l1, l21, l4) = (get("1"), get("2,1"), get("4"));
    for v in 0..6 {
        assert!(edge_exists(&l1, &l1, v).unwrap());
        assert!(!edge_exists(&l1, &l4, v).unwrap());
    }
    assert!(edge_exists(&l1, &l21, 1).unwrap());
    assert!(edge_row(&l1, &l4, 0).is_err());
}

#[test]
fn hexagon_edge_lift_projects_back() {
    let k = ngon(6).unwrap();
    let maps = hexagon_maps();
    let get = |n: &str| maps.iter().find(|(x, _)| *x == n).unwrap().1.clone();
    let (l1, l21) = (get("1"), get("2,1"));
    let v = 1;
    let row = edge_row(&l1, &l21, v).unwrap();
    assert!(row.is_reduced() && !row.is_zero());
    assert_eq!(lambda_power(&l1, &row).unwrap(), l21.canonical().unwrap());
    let wedge = k.wedge(v).unwrap();
    let lift = edge_lift(&k, &l1, &l21, v).unwrap();
    assert_eq!((lift.nrows(), lift.ncols()), (3, 7));
    assert!(lift.is_characteristic(&wedge).unwrap());
    // v_1 = column v, v_2 = column v + 1
    let at_v2 = lift.project(&wedge, VertexSet::singleton(v + 1)).unwrap();
    let at_v1 = lift.project(&wedge, VertexSet::singleton(v)).unwrap();
    assert_eq!(at_v2.matrix, l1.canonical().unwrap());
    assert_eq!(at_v1.matrix, l21.canonical().unwrap());

    // loop: canonical extension with bottom row (-1, 1) at (v_1, v_2)
    let ext = edge_lift(&k, &l1, &l1, v).unwrap();
    let mut rows: Vec<Vec<i64>> = l1
        .to_i64_rows()
        .unwrap()
        .into_iter()
        .map(|mut r| {
            r.insert(v + 1, 0);
            r
        })
        .collect();
    let mut bottom = vec![0; 7];
    bottom[v] = -1;
    bottom[v + 1] = 1;
    rows.push(bottom);
    let want = toric_puzzle::CharMatrix::from_i64(Ring::Z2, &rows)
        .unwrap()
        .canonical()
        .unwrap();
    assert_eq!(ext, want);
}

#[test]
fn reference_squares_are_realizable() {
    let k = ngon(6).unwrap();
    let d = build_diagram(&k, Ring::Z2).unwrap();
    let pre = d.prediagram();
    let ix = |n: &str| hex_index(pre, n);
    // (center, v, v-neighbor, w, w-neighbor, corner), colors 1-based
    let shown = [
        ("1", 4, "2,5", 6, "2,3", "2,1"),
        ("1", 2, "2,3", 1, "2,6", "3,3"),
        ("2,1", 3, "3,1", 5, "2,1", "3,1"),
    ];
    for (c, v, nv, w, nw, corner) in shown {
        let (c, nv, nw, corner) = (ix(c), ix(nv), ix(nw), ix(corner));
        let (v, w) = (v - 1, w - 1);
        let rv = pre.row(c, nv, v).unwrap();
        let rw = pre.row(c, nw, w).unwrap();
        assert!(square_realizable(
            &k,
            pre.class(c),
            (&rv, pre.class(nv)),
            (&rw, pre.class(nw)),
            pre.class(corner)
        )
        .unwrap());
        assert!(d.contains(v, w, [c, nv, nw, corner]));
    }
}

#[test]
fn three_equal_corners_never_close_on_a_fourth() {
    let k = ngon(6).unwrap();
    let d = build_diagram(&k, Ring::Z2).unwrap();
    let pre = d.prediagram();
    for c in 0..pre.len() {
        for v in 0..6 {
            for w in 0..6 {
                if v == w {
                    continue;
                }
                let z_v = pre.row(c, c, v).unwrap();
                let z_w = pre.row(c, c, w).unwrap();
                for other in (0..pre.len()).filter(|&o| o != c) {
                    let l = pre.class(c);
                    assert!(
                        !square_realizable(&k, l, (&z_v, l), (&z_w, l), pre.class(other)).unwrap()
                    );
                    assert!(!d.contains(v, w, [c, c, c, other]));
                }
            }
        }
    }
}

#[test]
fn parallel_repeat_squares_are_realizable() {
    let d = build_diagram(&ngon(6).unwrap(), Ring::Z2).unwrap();
    for e in d.prediagram().edges() {
        for w in (0..6).filter(|&w| w != e.color) {
            assert!(d.contains(e.color, w, [e.a, e.b, e.a, e.b]));
        }
    }
}

/// Squares read off every class over `K(J)` with `J = 2` at two colors,
/// projected through the generic link machinery.
#[test]
fn hexagon_squares_match_wedge_enumeration() {
    let k = ngon(6).unwrap();
    let d = build_diagram(&k, Ring::Z2).unwrap();
    let pre = d.prediagram();
    let mut oracle = BTreeSet::new();
    for v in 0..6 {
        for w in v + 1..6 {
            let j = WedgeVector::twos_at(6, &[v, w]);
            let kj = k.expand(&j).unwrap();
            for class in enumerate_z2(&kj).unwrap() {
                let corner = |a: usize, b: usize| {
                    let mut alpha = vec![1; 6];
                    alpha[v] += a;
                    alpha[w] += b;
                    let sigma = j.sigma_face(&alpha).unwrap();
                    pre.index_of(&class.canonical.project(&kj, sigma).unwrap().matrix)
                        .unwrap()
                };
                let sq = [corner(0, 0), corner(1, 0), corner(0, 1), corner(1, 1)];
                if sq.iter().any(|&c| c != sq[0]) {
                    oracle.insert(RealizableSquare::new(v, w, sq));
                }
            }
        }
    }
    let got: BTreeSet<_> = d.squares().iter().copied().collect();
    assert_eq!(got, oracle);
}

#[test]
fn irreducible_rectangles_close_up_at_most_once() {
    let d = build_diagram(&ngon(6).unwrap(), Ring::Z2).unwrap();
    let pre = d.prediagram();
    let (mut rectangles, mut realizable) = (0, 0);
    for a in 0..pre.len() {
        for v in 0..6 {
            for w in (0..6).filter(|&w| w != v) {
                for &b in pre.neighbors(a, v) {
                    for &c in pre.neighbors(a, w) {
                        let fourth: Vec<usize> = pre
                            .neighbors(b, w)
                            .iter()
                            .copied()
                            .filter(|x| pre.neighbors(c, v).contains(x))
                            .collect();
                        let closing: Vec<usize> = fourth
                            .iter()
                            .copied()
                            .filter(|&x| d.contains(v, w, [a, b, c, x]))
                            .collect();
                        assert!(closing.len() <= 1);
                        // a realized corner never collapses an edge
                        if let Some(x) = d.complete(v, w, a, b, c) {
                            assert_eq!(closing, vec![x]);
                        }
                        rectangles += fourth.len();
                        realizable += closing.len();
                    }
                }
            }
        }
    }
    assert_eq!((rectangles, realizable), (1140, 564));
}

fn prism() -> Puzzle {
    let pre = build_prediagram(&ngon(6).unwrap(), Ring::Z2).unwrap();
    let ix = |n: &str| hex_index(&pre, n);
    // first coordinate slowest: (1,1) (1,2) (1,3) (2,1) (2,2) (2,3)
    Puzzle::new(
        WedgeVector::new(vec![2, 3, 1, 1, 1, 1]).unwrap(),
        vec![ix("2,6"), ix("3,3"), ix("2,6"), ix("1"), ix("2,3"), ix("1")],
    )
    .unwrap()
}

#[test]
fn prism_puzzle_is_realizable() {
    let k = ngon(6).unwrap();
    let d = build_diagram(&k, Ring::Z2).unwrap();
    let pre = d.prediagram();
    let p = prism();
    assert!(p.is_valid(pre).unwrap());
    let ctx = WedgeContext::new(&k, p.j()).unwrap();
    assert!(is_realizable(&ctx, pre, &p).unwrap());
    assert!(is_realizable_by_squares(&p, &d).unwrap());
    assert!(is_realizable_by_subcubes(pre, &p).unwrap());

    let board = p.board().unwrap();
    let squares = board.squares();
    let reducible = squares
        .iter()
        .filter(|s| {
            let c = s.corners.map(|i| p.at(i));
            c[0] == c[1] || c[0] == c[2] || c[1] == c[3] || c[2] == c[3]
        })
        .count();
    assert_eq!((squares.len(), reducible), (3, 1));
    let report = reducibility_report(&p).unwrap();
    assert!(report.is_reducible() && report.parallel_condition);

    let all = enumerate_realizable(pre, p.j()).unwrap();
    assert_eq!(all.count(), 119);
    assert!(all.puzzles.binary_search(&p).is_ok());
}

#[test]
fn cyclic_puzzles_are_two_for_several_j() {
    let pre = build_prediagram(&cyclic_boundary(4, 7).unwrap(), Ring::Z2).unwrap();
    for j in [
        vec![2, 2, 1, 1, 1, 1, 1],
        vec![1, 1, 3, 1, 1, 1, 1],
        vec![2, 1, 1, 2, 1, 1, 2],
    ] {
        let e = enumerate_realizable(&pre, &WedgeVector::new(j).unwrap()).unwrap();
        assert_eq!(e.count(), 2);
        assert!(e.puzzles.iter().all(Puzzle::is_constant));
    }
}
