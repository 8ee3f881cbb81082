use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{build_prediagram, lambda_power, EdgeRecord, MarkedRow, PreDiagram};
use crate::charmap::{CharMatrix, CharMatrixFile, Ring};
use crate::error::{Error, Result};
use crate::puzzle::WedgeContext;
use crate::simplicial::{SimplicialComplex, WedgeVector};

/// A realizable square on colors `v < w`. Corners are
/// `[c00, c10, c01, c11]`: `c10` is across the `v` edge from `c00`, `c01`
/// across the `w` edge, `c11` opposite. Stored as the least of the four
/// orientations obtained by swapping the two `v` sides or the two `w` sides.
/// Constant squares are always realizable and stay implicit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealizableSquare {
    pub v: usize,
    pub w: usize,
    pub corners: [usize; 4],
}

impl RealizableSquare {
    pub fn new(v: usize, w: usize, corners: [usize; 4]) -> Self {
        let [a, b, c, d] = corners;
        let (v, w, base) = if v < w {
            (v, w, [a, b, c, d])
        } else {
            (w, v, [a, c, b, d])
        };
        let best = orientations(base)
            .into_iter()
            .min()
            .expect("four orientations");
        RealizableSquare {
            v,
            w,
            corners: best,
        }
    }

    pub fn is_reducible(&self) -> bool {
        let [a, b, c, d] = self.corners;
        a == b || a == c || b == d || c == d
    }

    fn to_record(self) -> [usize; 6] {
        let [a, b, c, d] = self.corners;
        [a, b, c, d, self.v + 1, self.w + 1]
    }
}

fn is_constant(c: [usize; 4]) -> bool {
    c.iter().all(|&x| x == c[0])
}

fn orientations([a, b, c, d]: [usize; 4]) -> [[usize; 4]; 4] {
    [[a, b, c, d], [b, a, d, c], [c, d, a, b], [d, c, b, a]]
}

fn ordered_rows(
    center: &CharMatrix,
    r_v: &MarkedRow,
    r_w: &MarkedRow,
) -> Result<(WedgeVector, Vec<MarkedRow>)> {
    let (v, w) = (r_v.marking(), r_w.marking());
    if v == w {
        return Err(Error::SameMarking(v + 1));
    }
    let j = WedgeVector::twos_at(center.ncols(), &[v, w]);
    let rows = if v < w {
        vec![r_v.clone(), r_w.clone()]
    } else {
        vec![r_w.clone(), r_v.clone()]
    };
    Ok((j, rows))
}

fn opposite(m: usize, v: usize, w: usize) -> Vec<usize> {
    (0..m).map(|i| usize::from(i == v || i == w)).collect()
}

/// The class at the corner opposite `center` in the square spanned by the
/// edges with rows `r_v`, `r_w`, or `None` when `⟨λ; r_v; r_w⟩` is not
/// characteristic.
pub fn square_corner(
    k: &SimplicialComplex,
    center: &CharMatrix,
    r_v: &MarkedRow,
    r_w: &MarkedRow,
) -> Result<Option<CharMatrix>> {
    let (j, rows) = ordered_rows(center, r_v, r_w)?;
    let ctx = WedgeContext::new(k, &j)?;
    corner_in(&ctx, center, &rows, r_v.marking(), r_w.marking())
}

fn corner_in(
    ctx: &WedgeContext,
    center: &CharMatrix,
    rows: &[MarkedRow],
    v: usize,
    w: usize,
) -> Result<Option<CharMatrix>> {
    match ctx.realize(center, rows)? {
        None => Ok(None),
        Some(lam) => Ok(Some(ctx.project_at(&lam, &opposite(center.ncols(), v, w))?)),
    }
}

/// Whether the square `λ -v- λ_v`, `λ -w- λ_w` with the given rows closes
/// up at `corner`.
pub fn square_realizable(
    k: &SimplicialComplex,
    center: &CharMatrix,
    (r_v, l_v): (&MarkedRow, &CharMatrix),
    (r_w, l_w): (&MarkedRow, &CharMatrix),
    corner: &CharMatrix,
) -> Result<bool> {
    for (r, l) in [(r_v, l_v), (r_w, l_w)] {
        if lambda_power(center, r)? != l.canonical()? {
            return Err(Error::NoEdge {
                between: "the center and the given neighbor with this row".into(),
                color: r.marking() + 1,
            });
        }
    }
    Ok(square_corner(k, center, r_v, r_w)? == Some(corner.canonical()?))
}

#[derive(Clone, Debug)]
pub struct Diagram {
    pre: PreDiagram,
    squares: Vec<RealizableSquare>,
    /// `(v, w, c00, c10, c01) → c11` with `v < w`, every orientation.
    completion: HashMap<(usize, usize, usize, usize, usize), usize>,
}

/// Diagram over `Z2`.
pub fn build_diagram(k: &SimplicialComplex, ring: Ring) -> Result<Diagram> {
    Diagram::from_prediagram(build_prediagram(k, ring)?)
}

impl Diagram {
    /// All realizable squares over every center, pair of colors and pair of
    /// incident edges (loops included).
    pub fn from_prediagram(pre: PreDiagram) -> Result<Self> {
        let k = pre.complex().clone();
        let m = k.m();
        let color_pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|v| (v + 1..m).map(move |w| (v, w)))
            .collect();
        let contexts: Vec<WedgeContext> = color_pairs
            .iter()
            .map(|&(v, w)| WedgeContext::new(&k, &WedgeVector::twos_at(m, &[v, w])))
            .collect::<Result<_>>()?;
        let jobs: Vec<(usize, usize)> = (0..color_pairs.len())
            .flat_map(|p| (0..pre.len()).map(move |c| (p, c)))
            .collect();
        let found: Vec<Vec<[usize; 4]>> = jobs
            .par_iter()
            .map(|&(p, c)| {
                let (v, w) = color_pairs[p];
                let mut out = Vec::new();
                for nv in pre.incident(c, v) {
                    for nw in pre.incident(c, w) {
                        let rows = [pre.row(c, nv, v)?, pre.row(c, nw, w)?];
                        let Some(corner) = corner_in(&contexts[p], pre.class(c), &rows, v, w)?
                        else {
                            continue;
                        };
                        match pre.index_of_canonical(&corner) {
                            Some(d) => out.push([c, nv, nw, d]),
                            None if pre.ring() == Ring::Z => {}
                            None => {
                                return Err(Error::InvariantViolation(format!(
                                    "square corner {corner} is not a listed class"
                                )))
                            }
                        }
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut completion = HashMap::new();
        for (&(p, _), list) in jobs.iter().zip(&found) {
            let (v, w) = color_pairs[p];
            for &[a, b, c, d] in list {
                completion.insert((v, w, a, b, c), d);
            }
        }
        let mut squares = Vec::new();
        for (&(p, _), list) in jobs.iter().zip(&found) {
            let (v, w) = color_pairs[p];
            for &sq in list {
                for [a, b, c, d] in orientations(sq) {
                    if completion.get(&(v, w, a, b, c)) != Some(&d) && pre.ring() == Ring::Z2 {
                        return Err(Error::InvariantViolation(format!(
                            "square {sq:?} on colors {} {} is not realizable from every corner",
                            v + 1,
                            w + 1
                        )));
                    }
                }
                if !is_constant(sq) {
                    squares.push(RealizableSquare::new(v, w, sq));
                }
            }
        }
        squares.sort_unstable();
        squares.dedup();
        for q in &squares {
            for [a, b, c, d] in orientations(q.corners) {
                completion.insert((q.v, q.w, a, b, c), d);
            }
        }
        Ok(Diagram {
            pre,
            squares,
            completion,
        })
    }

    pub fn prediagram(&self) -> &PreDiagram {
        &self.pre
    }

    pub fn squares(&self) -> &[RealizableSquare] {
        &self.squares
    }

    /// The fourth corner of the realizable square through `c00`, its
    /// `v`-neighbor `c10` and its `w`-neighbor `c01`, if any.
    pub fn complete(
        &self,
        v: usize,
        w: usize,
        c00: usize,
        c10: usize,
        c01: usize,
    ) -> Option<usize> {
        if c00 == c10 && c00 == c01 && v != w {
            Some(c00)
        } else if v < w {
            self.completion.get(&(v, w, c00, c10, c01)).copied()
        } else {
            self.completion.get(&(w, v, c00, c01, c10)).copied()
        }
    }

    /// Membership of the square with corners `[c00, c10, c01, c11]`.
    pub fn contains(&self, v: usize, w: usize, corners: [usize; 4]) -> bool {
        let [a, b, c, d] = corners;
        v != w && self.complete(v, w, a, b, c) == Some(d)
    }

    /// The standard form realizing `sq` centered at its first corner.
    pub fn standard_form(&self, sq: &RealizableSquare) -> Result<CharMatrix> {
        let [a, b, c, _] = sq.corners;
        let rows = [self.pre.row(a, b, sq.v)?, self.pre.row(a, c, sq.w)?];
        let ctx = WedgeContext::new(
            self.pre.complex(),
            &WedgeVector::twos_at(self.pre.complex().m(), &[sq.v, sq.w]),
        )?;
        ctx.realize(self.pre.class(a), &rows)?.ok_or_else(|| {
            Error::InvariantViolation(format!("stored square {sq:?} does not realize"))
        })
    }

    pub fn to_file(&self) -> DiagramFile {
        let pf = self.pre.to_file();
        DiagramFile {
            classes: pf.classes,
            edges: pf.edges,
            squares: self.squares.iter().map(|q| q.to_record()).collect(),
        }
    }

    /// Rebuilds the pre-diagram from the classes; squares are taken from
    /// the file after checking their shape and edges.
    pub fn from_file(k: &SimplicialComplex, file: &DiagramFile) -> Result<Self> {
        let pre = PreDiagram::from_records(k, &file.classes, &file.edges)?;
        let m = k.m();
        let mut squares = Vec::with_capacity(file.squares.len());
        for rec in &file.squares {
            let [a, b, c, d, v, w] = *rec;
            if v == 0 || w == 0 || v > m || w > m || v >= w {
                return Err(Error::Format(format!("bad square colors in {rec:?}")));
            }
            let q = RealizableSquare::new(v - 1, w - 1, [a, b, c, d]);
            if q.corners != [a, b, c, d]
                || is_constant(q.corners)
                || [a, b, c, d].iter().any(|&x| x >= pre.len())
            {
                return Err(Error::Format(format!(
                    "square {rec:?} is not in canonical form"
                )));
            }
            let edges_ok = pre.has_edge(a, b, q.v)
                && pre.has_edge(c, d, q.v)
                && pre.has_edge(a, c, q.w)
                && pre.has_edge(b, d, q.w);
            if !edges_ok {
                return Err(Error::Format(format!("square {rec:?} uses a missing edge")));
            }
            squares.push(q);
        }
        if squares.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::Format("squares are not sorted and distinct".into()));
        }
        let mut completion = HashMap::new();
        for q in &squares {
            for [a, b, c, d] in orientations(q.corners) {
                if completion
                    .insert((q.v, q.w, a, b, c), d)
                    .is_some_and(|old| old != d)
                {
                    return Err(Error::Format(format!(
                        "two squares share three corners: {q:?}"
                    )));
                }
            }
        }
        Ok(Diagram {
            pre,
            squares,
            completion,
        })
    }

    pub fn to_dot(&self) -> String {
        self.pre.dot_with(&self.squares)
    }
}

/// JSON form: classes, edges with 1-based colors, and squares
/// `[c00, c10, c01, c11, v, w]` with 1-based colors `v < w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub classes: Vec<CharMatrixFile>,
    pub edges: Vec<EdgeRecord>,
    pub squares: Vec<[usize; 6]>,
}
