use super::{SimplicialComplex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// Boundary of a `k`-gon: facets `{i, i+1 mod k}`.
pub fn ngon(k: usize) -> Result<SimplicialComplex> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "ngon needs k >= 3, got {k}"
        )));
    }
    if k > MAX_VERTICES {
        return Err(Error::SizeLimit(format!("{k}-gon")));
    }
    let facets = (0..k)
        .map(|i| VertexSet::from_indices([i, (i + 1) % k]))
        .collect();
    SimplicialComplex::from_masks(k, facets)
}

/// Boundary of the `d`-simplex on `d + 1` vertices.
pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex> {
    if d < 1 {
        return Err(Error::InvalidArgument(
            "simplex boundary needs d >= 1".into(),
        ));
    }
    if d + 1 > MAX_VERTICES {
        return Err(Error::SizeLimit(format!("boundary of the {d}-simplex")));
    }
    let all = VertexSet::full(d + 1);
    let facets = (0..=d).map(|v| all.remove(v)).collect();
    SimplicialComplex::from_masks(d + 1, facets)
}

/// Boundary complex of the cyclic polytope with `m` vertices whose facets
/// have `n` vertices, via Gale's evenness condition: an `n`-subset is a facet
/// iff between any two non-members there is an even number of members.
pub fn cyclic_boundary(n: usize, m: usize) -> Result<SimplicialComplex> {
    if n < 2 || m <= n {
        return Err(Error::InvalidArgument(format!(
            "cyclic polytope needs m > n >= 2, got n={n}, m={m}"
        )));
    }
    if m > MAX_VERTICES {
        return Err(Error::SizeLimit(format!(
            "cyclic polytope with {m} vertices"
        )));
    }
    let mut facets = Vec::new();
    for bits in 0u32..(1 << m) {
        let s = VertexSet(bits);
        if s.len() == n && satisfies_evenness(s, m) {
            facets.push(s);
        }
    }
    SimplicialComplex::from_masks(m, facets)
}

fn satisfies_evenness(s: VertexSet, m: usize) -> bool {
    let outside: Vec<usize> = (0..m).filter(|&v| !s.contains(v)).collect();
    outside.windows(2).all(|w| {
        let between = (w[0] + 1..w[1]).filter(|&v| s.contains(v)).count();
        between % 2 == 0
    })
}
