use crate::error::{Error, Result};
use crate::simplicial::WedgeVector;

pub const MAX_BOARD: usize = 100_000;

/// The board `G(J)`: the 1-skeleton of `Δ^{j_1−1} × … × Δ^{j_m−1}`.
/// Vertices are 0-based copy tuples `α`, numbered lexicographically
/// (first coordinate slowest); vertex 0 is the center `(1, …, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Board {
    j: WedgeVector,
    strides: Vec<usize>,
    size: usize,
}

/// Board edge `{a, b}` with `a < b`, colored by the coordinate in which
/// the endpoints differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoardEdge {
    pub a: usize,
    pub b: usize,
    pub color: usize,
}

/// Square sub-board on colors `v < w`; corners `[c00, c10, c01, c11]` as
/// board indices, with `c10` across the `v` edge from `c00`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoardSquare {
    pub v: usize,
    pub w: usize,
    pub corners: [usize; 4],
}

/// Cube sub-board: `colors` in increasing order, one pair of copies
/// `lo < hi` per color. `corners[mask]` is the vertex taking `hi` exactly
/// on the colors whose bit is set in `mask`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcube {
    pub colors: Vec<usize>,
    pub copies: Vec<(usize, usize)>,
    pub corners: Vec<usize>,
}

impl Board {
    pub fn new(j: &WedgeVector) -> Result<Self> {
        let size = j.board_size();
        if size > MAX_BOARD {
            return Err(Error::SizeLimit(format!(
                "board has {size} vertices, at most {MAX_BOARD}"
            )));
        }
        let m = j.len();
        let mut strides = vec![1usize; m];
        for v in (0..m.saturating_sub(1)).rev() {
            strides[v] = strides[v + 1] * j.get(v + 1);
        }
        Ok(Board {
            j: j.clone(),
            strides,
            size,
        })
    }

    pub fn j(&self) -> &WedgeVector {
        &self.j
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn index(&self, alpha0: &[usize]) -> usize {
        alpha0.iter().zip(&self.strides).map(|(a, s)| a * s).sum()
    }

    pub fn alpha(&self, index: usize) -> Vec<usize> {
        (0..self.j.len())
            .map(|v| index / self.strides[v] % self.j.get(v))
            .collect()
    }

    pub fn coordinate(&self, index: usize, v: usize) -> usize {
        index / self.strides[v] % self.j.get(v)
    }

    /// The vertex obtained from `index` by setting coordinate `v` to `copy`.
    pub fn moved(&self, index: usize, v: usize, copy: usize) -> usize {
        let cur = self.coordinate(index, v);
        index - cur * self.strides[v] + copy * self.strides[v]
    }

    pub fn edges(&self) -> Vec<BoardEdge> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for v in 0..self.j.len() {
                for c in self.coordinate(a, v) + 1..self.j.get(v) {
                    out.push(BoardEdge {
                        a,
                        b: self.moved(a, v, c),
                        color: v,
                    });
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn squares(&self) -> Vec<BoardSquare> {
        let m = self.j.len();
        let mut out = Vec::new();
        for a in 0..self.size {
            for v in 0..m {
                for w in v + 1..m {
                    for cv in self.coordinate(a, v) + 1..self.j.get(v) {
                        for cw in self.coordinate(a, w) + 1..self.j.get(w) {
                            let b = self.moved(a, v, cv);
                            let c = self.moved(a, w, cw);
                            let d = self.moved(b, w, cw);
                            out.push(BoardSquare {
                                v,
                                w,
                                corners: [a, b, c, d],
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Every cube sub-board of dimension at least `min_dim`.
    pub fn subcubes(&self, min_dim: usize) -> Vec<Subcube> {
        let wide: Vec<usize> = (0..self.j.len()).filter(|&v| self.j.get(v) >= 2).collect();
        let mut out = Vec::new();
        for bits in 1u32..(1 << wide.len()) {
            let colors: Vec<usize> = wide
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if colors.len() < min_dim.max(1) {
                continue;
            }
            for base in 0..self.size {
                // the base takes the low copy of every chosen color
                let lows: Vec<usize> = colors.iter().map(|&v| self.coordinate(base, v)).collect();
                let mut his: Vec<usize> = lows.iter().map(|l| l + 1).collect();
                if his.iter().zip(&colors).any(|(&h, &v)| h >= self.j.get(v)) {
                    continue;
                }
                loop {
                    let corners = (0..1usize << colors.len())
                        .map(|mask| {
                            colors.iter().enumerate().fold(base, |idx, (i, &v)| {
                                if mask >> i & 1 == 1 {
                                    self.moved(idx, v, his[i])
                                } else {
                                    idx
                                }
                            })
                        })
                        .collect();
                    out.push(Subcube {
                        colors: colors.clone(),
                        copies: lows.iter().copied().zip(his.iter().copied()).collect(),
                        corners,
                    });
                    let mut i = 0;
                    while i < colors.len() {
                        his[i] += 1;
                        if his[i] < self.j.get(colors[i]) {
                            break;
                        }
                        his[i] = lows[i] + 1;
                        i += 1;
                    }
                    if i == colors.len() {
                        break;
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prism_board() {
        let b = Board::new(&WedgeVector::new(vec![2, 3, 1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!(b.len(), 6);
        let edges = b.edges();
        assert_eq!(edges.iter().filter(|e| e.color == 0).count(), 3);
        assert_eq!(edges.iter().filter(|e| e.color == 1).count(), 6);
        assert_eq!(b.squares().len(), 3);
        assert_eq!(b.subcubes(2).len(), 3);
        for i in 0..b.len() {
            assert_eq!(b.index(&b.alpha(i)), i);
        }
    }

    #[test]
    fn trivial_and_cycle_boards() {
        let b = Board::new(&WedgeVector::ones(4)).unwrap();
        assert_eq!(b.len(), 1);
        assert!(b.edges().is_empty());
        let c = Board::new(&WedgeVector::new(vec![2, 2]).unwrap()).unwrap();
        let e = c.edges();
        assert_eq!(e.len(), 4);
        assert_eq!(e.iter().filter(|x| x.color == 0).count(), 2);
        assert_eq!(
            c.squares(),
            vec![BoardSquare {
                v: 0,
                w: 1,
                corners: [0, 2, 1, 3]
            }]
        );
    }

    #[test]
    fn cube_counts() {
        // Δ² × Δ² × Δ¹: 9·2 squares on (1,2), 3·3 on (1,3) and on (2,3), 3·3 cubes
        let b = Board::new(&WedgeVector::new(vec![3, 3, 2]).unwrap()).unwrap();
        let cubes = b.subcubes(2);
        assert_eq!(cubes.iter().filter(|c| c.colors.len() == 2).count(), 36);
        assert_eq!(cubes.iter().filter(|c| c.colors.len() == 3).count(), 9);
        assert_eq!(b.squares().len(), 36);
        assert!(Board::new(&WedgeVector::new(vec![400, 400]).unwrap()).is_err());
    }
}
