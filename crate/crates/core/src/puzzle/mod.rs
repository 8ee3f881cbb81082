//! Boards, standard forms, realizable puzzles and their enumeration.

mod board;
mod standard_form;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use board::{Board, BoardEdge, BoardSquare, Subcube, MAX_BOARD};
pub use standard_form::{is_realizable_direct, row_slot, row_slots, StandardForm, WedgeContext};

use crate::charmap::CharMatrix;
pub use crate::diagram::{marked_row_compose, Composition};
use crate::diagram::{Diagram, MarkedRow, PreDiagram};
use crate::error::{Error, Result};
use crate::simplicial::WedgeVector;

/// Cap on the number of (center, neighbor tuple) candidates.
pub const MAX_CANDIDATES: u64 = 100_000_000;

/// An assignment of class indices to the vertices of `G(J)`, in board
/// order. Ordered lexicographically by assignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Puzzle {
    j: WedgeVector,
    assignment: Vec<usize>,
}

impl Puzzle {
    pub fn new(j: WedgeVector, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != j.board_size() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for a board with {} vertices",
                assignment.len(),
                j.board_size()
            )));
        }
        Ok(Puzzle { j, assignment })
    }

    pub fn constant(j: WedgeVector, class: usize) -> Self {
        let n = j.board_size();
        Puzzle {
            j,
            assignment: vec![class; n],
        }
    }

    pub fn j(&self) -> &WedgeVector {
        &self.j
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn board(&self) -> Result<Board> {
        Board::new(&self.j)
    }

    pub fn at(&self, index: usize) -> usize {
        self.assignment[index]
    }

    pub fn center(&self) -> usize {
        self.assignment[0]
    }

    pub fn is_constant(&self) -> bool {
        self.assignment.iter().all(|&c| c == self.assignment[0])
    }

    /// Color-preserving homomorphism into the pre-diagram.
    pub fn is_valid(&self, pre: &PreDiagram) -> Result<bool> {
        if self.j.len() != pre.complex().m() {
            return Err(Error::DimensionMismatch(
                "puzzle and pre-diagram disagree on m".into(),
            ));
        }
        if self.assignment.iter().any(|&c| c >= pre.len()) {
            return Ok(false);
        }
        let board = self.board()?;
        Ok(board
            .edges()
            .iter()
            .all(|e| pre.has_edge(self.assignment[e.a], self.assignment[e.b], e.color)))
    }

    /// Relabels copies: coordinate `v` value `c` moves to `perms[v][c]`.
    pub fn relabel(&self, perms: &[Vec<usize>]) -> Result<Puzzle> {
        let board = self.board()?;
        for (v, p) in perms.iter().enumerate() {
            let mut seen = p.clone();
            seen.sort_unstable();
            if v >= self.j.len() || seen != (0..self.j.get(v)).collect::<Vec<_>>() {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation of the copies of {}",
                    v + 1
                )));
            }
        }
        if perms.len() != self.j.len() {
            return Err(Error::DimensionMismatch("one permutation per color".into()));
        }
        let mut out = vec![0; self.assignment.len()];
        for (i, &c) in self.assignment.iter().enumerate() {
            let alpha: Vec<usize> = board
                .alpha(i)
                .iter()
                .enumerate()
                .map(|(v, &a)| perms[v][a])
                .collect();
            out[board.index(&alpha)] = c;
        }
        Ok(Puzzle {
            j: self.j.clone(),
            assignment: out,
        })
    }

    /// Restriction to the sub-board keeping the listed copies of each color
    /// (in the given order).
    pub fn restrict(&self, keep: &[Vec<usize>]) -> Result<Puzzle> {
        if keep.len() != self.j.len() || keep.iter().any(Vec::is_empty) {
            return Err(Error::DimensionMismatch(
                "one non-empty copy list per color".into(),
            ));
        }
        let board = self.board()?;
        let sub_j = WedgeVector::new(keep.iter().map(Vec::len).collect())?;
        let sub = Board::new(&sub_j)?;
        let mut out = Vec::with_capacity(sub.len());
        for i in 0..sub.len() {
            let alpha: Vec<usize> = sub
                .alpha(i)
                .iter()
                .enumerate()
                .map(|(v, &a)| keep[v][a])
                .collect();
            if alpha.iter().enumerate().any(|(v, &a)| a >= self.j.get(v)) {
                return Err(Error::InvalidArgument("copy out of range".into()));
            }
            out.push(self.assignment[board.index(&alpha)]);
        }
        Ok(Puzzle {
            j: sub_j,
            assignment: out,
        })
    }

    pub fn to_file(&self) -> PuzzleFile {
        let board = Board::new(&self.j).expect("puzzle boards are within limits");
        let assignment = (0..board.len())
            .map(|i| {
                let alpha: Vec<String> =
                    board.alpha(i).iter().map(|a| (a + 1).to_string()).collect();
                (format!("({})", alpha.join(",")), self.assignment[i])
            })
            .collect();
        PuzzleFile {
            j: self.j.entries().to_vec(),
            assignment,
        }
    }

    pub fn from_file(file: &PuzzleFile) -> Result<Self> {
        let j = WedgeVector::new(file.j.clone())?;
        let board = Board::new(&j)?;
        let mut out = vec![None; board.len()];
        for (key, &c) in &file.assignment {
            let inner = key
                .strip_prefix('(')
                .and_then(|k| k.strip_suffix(')'))
                .ok_or_else(|| Error::Format(format!("bad board index {key:?}")))?;
            let alpha: Vec<usize> = inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Format(format!("bad board index {key:?}")))
                })
                .collect::<Result<_>>()?;
            if alpha.len() != j.len()
                || alpha
                    .iter()
                    .enumerate()
                    .any(|(v, &a)| a == 0 || a > j.get(v))
            {
                return Err(Error::Format(format!("board index {key:?} outside G(J)")));
            }
            let a0: Vec<usize> = alpha.iter().map(|a| a - 1).collect();
            out[board.index(&a0)] = Some(c);
        }
        let assignment = out
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Format("assignment does not cover the board".into()))?;
        Ok(Puzzle { j, assignment })
    }
}

/// JSON form: `{"J": [2,3,1], "assignment": {"(1,1,1)": 0, ...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PuzzleFile {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub assignment: BTreeMap<String, usize>,
}

pub fn board(j: &WedgeVector) -> Result<Board> {
    Board::new(j)
}

/// The puzzle of a characteristic map over `K(J)`: vertex `α` gets the class
/// of `proj_{σ(α)} Λ`.
pub fn puzzle_from_standard_form(
    ctx: &WedgeContext,
    pre: &PreDiagram,
    lambda: &CharMatrix,
) -> Result<Puzzle> {
    let board = Board::new(ctx.j())?;
    let assignment = (0..board.len())
        .map(|i| {
            let proj = ctx.project_at(lambda, &board.alpha(i))?;
            pre.index_of_canonical(&proj).ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "projection {proj} at vertex {i} is not a listed class"
                ))
            })
        })
        .collect::<Result<_>>()?;
    Ok(Puzzle {
        j: ctx.j().clone(),
        assignment,
    })
}

/// A center class and one neighbor class per extra copy, in slot order
/// (see [`row_slots`]); the neighbor in slot `(v, c)` sits at the center
/// index with coordinate `v` set to `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Candidate {
    pub center: usize,
    pub neighbors: Vec<usize>,
}

impl Candidate {
    /// Reduced rows from the cached edges, `None` if some edge is missing.
    pub fn rows(&self, pre: &PreDiagram, j: &WedgeVector) -> Option<Vec<MarkedRow>> {
        let m = pre.complex().m();
        row_slots(j)
            .iter()
            .zip(&self.neighbors)
            .map(|(&(v, _), &nb)| {
                if nb == self.center {
                    Some(MarkedRow::zero(pre.ring(), m, v))
                } else {
                    pre.row_ref(self.center, nb, v).cloned()
                }
            })
            .collect()
    }

    pub fn of_puzzle(p: &Puzzle) -> Result<Candidate> {
        let board = p.board()?;
        let neighbors = row_slots(p.j())
            .iter()
            .map(|&(v, c)| p.at(board.moved(0, v, c)))
            .collect();
        Ok(Candidate {
            center: p.center(),
            neighbors,
        })
    }
}

/// Realizes a candidate directly: assemble, test every facet of `K(J)`,
/// read the puzzle off the projections and check it reproduces the
/// candidate.
pub fn realize_candidate(
    ctx: &WedgeContext,
    pre: &PreDiagram,
    cand: &Candidate,
) -> Result<Option<(CharMatrix, Puzzle)>> {
    let Some(rows) = cand.rows(pre, ctx.j()) else {
        return Ok(None);
    };
    let Some(lam) = ctx.realize(pre.class(cand.center), &rows)? else {
        return Ok(None);
    };
    let p = puzzle_from_standard_form(ctx, pre, &lam)?;
    if Candidate::of_puzzle(&p)? != *cand {
        return Err(Error::InvariantViolation(format!(
            "standard form for {cand:?} projects to a different center or neighbors"
        )));
    }
    Ok(Some((lam, p)))
}

/// Direct realizability of a whole puzzle: its center and neighbors must
/// realize, and the realized puzzle must be `p` itself.
pub fn is_realizable(ctx: &WedgeContext, pre: &PreDiagram, p: &Puzzle) -> Result<bool> {
    if p.j() != ctx.j() {
        return Err(Error::DimensionMismatch(
            "puzzle and context use different J".into(),
        ));
    }
    if !p.is_valid(pre)? {
        return Ok(false);
    }
    let cand = Candidate::of_puzzle(p)?;
    Ok(matches!(realize_candidate(ctx, pre, &cand)?, Some((_, q)) if q == *p))
}

/// Subsquare criterion: `p` is a puzzle and every square sub-board maps
/// to a realizable square. Invalid puzzles give `false`.
pub fn is_realizable_by_squares(p: &Puzzle, diagram: &Diagram) -> Result<bool> {
    if !p.is_valid(diagram.prediagram())? {
        return Ok(false);
    }
    let board = p.board()?;
    Ok(board.squares().iter().all(|s| {
        let [a, b, c, d] = s.corners.map(|i| p.at(i));
        diagram.contains(s.v, s.w, [a, b, c, d])
    }))
}

/// Fills the board from a candidate using only the square list: a vertex
/// with two or more non-center coordinates is the fourth corner of a square
/// whose other corners are already placed. `None` if some square has no
/// realizable completion or the result fails the subsquare criterion.
pub fn complete_by_squares(
    diagram: &Diagram,
    j: &WedgeVector,
    cand: &Candidate,
) -> Result<Option<Puzzle>> {
    let board = Board::new(j)?;
    let slots = row_slots(j);
    if cand.neighbors.len() != slots.len() {
        return Err(Error::DimensionMismatch(
            "candidate does not match J".into(),
        ));
    }
    let mut order: Vec<usize> = (0..board.len()).collect();
    order.sort_by_key(|&i| (board.alpha(i).iter().filter(|&&a| a != 0).count(), i));
    let mut out: Vec<Option<usize>> = vec![None; board.len()];
    out[0] = Some(cand.center);
    for (&(v, c), &nb) in slots.iter().zip(&cand.neighbors) {
        out[board.moved(0, v, c)] = Some(nb);
    }
    for &i in &order {
        if out[i].is_some() {
            continue;
        }
        let alpha = board.alpha(i);
        let mut moved = alpha
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(v, _)| v);
        let (v, w) = (
            moved.next().expect("two moved"),
            moved.next().expect("two moved"),
        );
        let c11 = i;
        let c10 = board.moved(i, w, 0);
        let c01 = board.moved(i, v, 0);
        let c00 = board.moved(c10, v, 0);
        let get = |x: usize| out[x].expect("placed earlier");
        match diagram.complete(v, w, get(c00), get(c10), get(c01)) {
            Some(d) => out[c11] = Some(d),
            None => return Ok(None),
        }
    }
    let p = Puzzle {
        j: j.clone(),
        assignment: out.into_iter().map(|x| x.expect("filled")).collect(),
    };
    Ok(is_realizable_by_squares(&p, diagram)?.then_some(p))
}

/// Subcube criterion: every cube sub-board of dimension at least 2 is
/// realized by the standard form built from its low corner.
pub fn is_realizable_by_subcubes(pre: &PreDiagram, p: &Puzzle) -> Result<bool> {
    if !p.is_valid(pre)? {
        return Ok(false);
    }
    let board = p.board()?;
    let m = pre.complex().m();
    let mut contexts: HashMap<Vec<usize>, WedgeContext> = HashMap::new();
    for cube in board.subcubes(2) {
        let ctx = match contexts.get(&cube.colors) {
            Some(c) => c,
            None => {
                let c = WedgeContext::new(pre.complex(), &WedgeVector::twos_at(m, &cube.colors))?;
                contexts.entry(cube.colors.clone()).or_insert(c)
            }
        };
        let center = p.at(cube.corners[0]);
        let neighbors = (0..cube.colors.len())
            .map(|i| p.at(cube.corners[1 << i]))
            .collect();
        let cand = Candidate { center, neighbors };
        let Some(rows) = cand.rows(pre, ctx.j()) else {
            return Ok(false);
        };
        let Some(lam) = ctx.realize(pre.class(center), &rows)? else {
            return Ok(false);
        };
        for (mask, &corner) in cube.corners.iter().enumerate() {
            let alpha: Vec<usize> = (0..m)
                .map(|v| {
                    cube.colors
                        .iter()
                        .position(|&c| c == v)
                        .map_or(0, |i| mask >> i & 1)
                })
                .collect();
            let proj = ctx.project_at(&lam, &alpha)?;
            if pre.index_of_canonical(&proj) != Some(p.at(corner)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Edges of one color joining the same pair of copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelClass {
    pub color: usize,
    pub copies: (usize, usize),
    pub edges: usize,
    pub trivial: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialEdgeReport {
    /// Edges whose endpoints carry the same class.
    pub trivial_edges: Vec<BoardEdge>,
    pub parallel_classes: Vec<ParallelClass>,
    /// Every edge parallel to a trivial edge is trivial.
    pub parallel_condition: bool,
    /// Copies kept per color in a maximal irreducible sub-board; `None`
    /// when the parallel condition fails.
    pub core: Option<Vec<Vec<usize>>>,
}

impl TrivialEdgeReport {
    pub fn is_reducible(&self) -> bool {
        !self.trivial_edges.is_empty()
    }
}

pub fn reducibility_report(p: &Puzzle) -> Result<TrivialEdgeReport> {
    let board = p.board()?;
    let edges = board.edges();
    let trivial_edges: Vec<BoardEdge> = edges
        .iter()
        .copied()
        .filter(|e| p.at(e.a) == p.at(e.b))
        .collect();
    let mut classes: BTreeMap<(usize, usize, usize), (usize, usize)> = BTreeMap::new();
    for e in &edges {
        let key = (
            e.color,
            board.coordinate(e.a, e.color),
            board.coordinate(e.b, e.color),
        );
        let entry = classes.entry(key).or_default();
        entry.0 += 1;
        entry.1 += usize::from(p.at(e.a) == p.at(e.b));
    }
    let parallel_classes: Vec<ParallelClass> = classes
        .into_iter()
        .map(|((color, a, b), (edges, trivial))| ParallelClass {
            color,
            copies: (a, b),
            edges,
            trivial,
        })
        .collect();
    let parallel_condition = parallel_classes
        .iter()
        .all(|c| c.trivial == 0 || c.trivial == c.edges);
    let core = parallel_condition.then(|| {
        (0..p.j().len())
            .map(|v| {
                let mut parent: Vec<usize> = (0..p.j().get(v)).collect();
                fn find(parent: &mut [usize], x: usize) -> usize {
                    let mut r = x;
                    while parent[r] != r {
                        r = parent[r];
                    }
                    parent[x] = r;
                    r
                }
                for c in parallel_classes
                    .iter()
                    .filter(|c| c.color == v && c.trivial > 0)
                {
                    let (ra, rb) = (find(&mut parent, c.copies.0), find(&mut parent, c.copies.1));
                    parent[ra.max(rb)] = ra.min(rb);
                }
                (0..p.j().get(v))
                    .filter(|&c| find(&mut parent, c) == c)
                    .collect()
            })
            .collect()
    });
    Ok(TrivialEdgeReport {
        trivial_edges,
        parallel_classes,
        parallel_condition,
        core,
    })
}

/// Whether `Λ` over `K(J)` is a canonical extension along two copies of one
/// vertex: the row space contains `e_{v_b} − e_{v_a}`.
pub fn is_canonical_extension(lambda: &CharMatrix, j: &WedgeVector) -> bool {
    for v in 0..j.len() {
        for a in 0..j.get(v) {
            for b in a + 1..j.get(v) {
                let mut x = vec![BigInt::from(0); j.total()];
                x[j.column(v, a)] = -BigInt::one();
                x[j.column(v, b)] = BigInt::one();
                if lambda.row_space_contains(&x) {
                    return true;
                }
            }
        }
    }
    false
}

/// Number of candidates per center.
pub fn candidate_counts(pre: &PreDiagram, j: &WedgeVector) -> Result<Vec<u64>> {
    j.check_len(pre.complex().m())?;
    let slots = row_slots(j);
    let counts: Vec<u64> = (0..pre.len())
        .map(|c| {
            slots.iter().fold(1u64, |acc, &(v, _)| {
                acc.saturating_mul(pre.neighbors(c, v).len() as u64 + 1)
            })
        })
        .collect();
    let total = counts.iter().fold(0u64, |a, &b| a.saturating_add(b));
    if total > MAX_CANDIDATES {
        return Err(Error::SizeLimit(format!(
            "{total} candidates, at most {MAX_CANDIDATES}"
        )));
    }
    Ok(counts)
}

/// The `index`-th candidate at `center`: slot 0 varies slowest over the
/// loop followed by the neighbors along its color.
pub fn candidate_at(pre: &PreDiagram, j: &WedgeVector, center: usize, mut index: u64) -> Candidate {
    let slots = row_slots(j);
    let mut neighbors = vec![0; slots.len()];
    for (s, &(v, _)) in slots.iter().enumerate().rev() {
        let nb = pre.neighbors(center, v);
        let k = index % (nb.len() as u64 + 1);
        index /= nb.len() as u64 + 1;
        neighbors[s] = if k == 0 { center } else { nb[k as usize - 1] };
    }
    Candidate { center, neighbors }
}

/// Every candidate, in (center, index) order.
pub fn candidates(pre: &PreDiagram, j: &WedgeVector) -> Result<Vec<Candidate>> {
    let counts = candidate_counts(pre, j)?;
    Ok(counts
        .iter()
        .enumerate()
        .flat_map(|(c, &n)| (0..n).map(move |i| candidate_at(pre, j, c, i)))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub j: WedgeVector,
    /// Sorted, distinct.
    pub puzzles: Vec<Puzzle>,
    /// Realizable puzzles per center class.
    pub per_center: Vec<usize>,
    pub candidates: u64,
}

impl Enumeration {
    pub fn count(&self) -> usize {
        self.puzzles.len()
    }
}

/// All realizable puzzles on `G(J)`: every center with every ordered tuple
/// of incident edges (loops included), kept when the standard form is
/// characteristic over `K(J)`.
pub fn enumerate_realizable(pre: &PreDiagram, j: &WedgeVector) -> Result<Enumeration> {
    Board::new(j)?;
    let counts = candidate_counts(pre, j)?;
    let ctx = WedgeContext::new(pre.complex(), j)?;
    let found: Vec<Puzzle> = (0..pre.len())
        .into_par_iter()
        .flat_map(|c| {
            let ctx = &ctx;
            (0..counts[c]).into_par_iter().filter_map(move |i| {
                let cand = candidate_at(pre, j, c, i);
                realize_candidate(ctx, pre, &cand)
                    .map(|r| r.map(|(_, p)| p))
                    .transpose()
            })
        })
        .collect::<Result<_>>()?;
    let mut puzzles = found;
    puzzles.sort_unstable();
    if puzzles.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvariantViolation(
            "two candidates produced the same puzzle".into(),
        ));
    }
    let mut per_center = vec![0; pre.len()];
    for p in &puzzles {
        per_center[p.center()] += 1;
    }
    Ok(Enumeration {
        j: j.clone(),
        puzzles,
        per_center,
        candidates: counts.iter().sum(),
    })
}

/// Every puzzle (realizable or not) on `G(J)` by backtracking over board
/// vertices; fails with a size error beyond `limit` puzzles.
pub fn all_puzzles(pre: &PreDiagram, j: &WedgeVector, limit: usize) -> Result<Vec<Puzzle>> {
    j.check_len(pre.complex().m())?;
    let board = Board::new(j)?;
    // earlier neighbors of each vertex with the connecting color
    let mut back: Vec<Vec<(usize, usize)>> = vec![Vec::new(); board.len()];
    for e in board.edges() {
        back[e.b].push((e.a, e.color));
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; board.len()];
    fn go(
        i: usize,
        pre: &PreDiagram,
        back: &[Vec<(usize, usize)>],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> Result<()> {
        if i == cur.len() {
            if out.len() == limit {
                return Err(Error::SizeLimit(format!("more than {limit} puzzles")));
            }
            out.push(cur.clone());
            return Ok(());
        }
        for c in 0..pre.len() {
            if back[i].iter().all(|&(a, v)| pre.has_edge(cur[a], c, v)) {
                cur[i] = c;
                go(i + 1, pre, back, cur, out, limit)?;
            }
        }
        Ok(())
    }
    go(0, pre, &back, &mut cur, &mut out, limit)?;
    Ok(out
        .into_iter()
        .map(|assignment| Puzzle {
            j: j.clone(),
            assignment,
        })
        .collect())
}
