use num_bigint::BigInt;
use num_traits::Zero;

use super::{CharMatrix, Ring};
use crate::error::{Error, Result};
use crate::simplicial::{SimplicialComplex, VertexSet};

/// `φ: [m] → R^{m−n}` as an `(m − n) × m` matrix whose rows span the kernel
/// of a characteristic matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualMap {
    pub matrix: CharMatrix,
}

/// Kernel basis of `λ`, built from the pinned facet: with `λ` normalized to
/// the identity there, each other vertex `o` contributes `e_o − Σ λ[k][o] e_{F_k}`.
pub fn gale_dual(k: &SimplicialComplex, lambda: &CharMatrix) -> Result<DualMap> {
    if !lambda.is_characteristic(k)? {
        return Err(Error::InvalidArgument(
            "gale_dual needs a characteristic map".into(),
        ));
    }
    let pinned = k.first_facet().to_vec();
    let normal = lambda.normalize_columns(&pinned)?;
    let others: Vec<usize> = (0..k.m()).filter(|v| !pinned.contains(v)).collect();
    let rows: Vec<Vec<BigInt>> = others
        .iter()
        .map(|&o| {
            let mut row = vec![BigInt::zero(); k.m()];
            row[o] = BigInt::from(1);
            for (i, &f) in pinned.iter().enumerate() {
                row[f] = -normal.get(i, o).clone();
            }
            row
        })
        .collect();
    let matrix = if rows.is_empty() {
        CharMatrix::zero(lambda.ring(), 0, k.m())
    } else {
        CharMatrix::new(lambda.ring(), rows)?
    };
    Ok(DualMap { matrix })
}

/// The dual non-singularity condition: for every facet, the columns of `φ`
/// off that facet form a basis.
pub fn verify_dual(k: &SimplicialComplex, phi: &DualMap) -> bool {
    let m = &phi.matrix;
    if m.ncols() != k.m() || m.nrows() != k.picard() {
        return false;
    }
    let all = VertexSet::full(k.m());
    k.facets()
        .iter()
        .all(|&f| m.columns_form_basis(all.difference(f)))
}

/// `λ · φᵀ = 0` over the ring.
pub fn annihilates(lambda: &CharMatrix, phi: &DualMap) -> bool {
    let p = &phi.matrix;
    if lambda.ncols() != p.ncols() {
        return false;
    }
    (0..lambda.nrows()).all(|r| {
        (0..p.nrows()).all(|s| {
            let dot: BigInt = (0..p.ncols()).map(|c| lambda.get(r, c) * p.get(s, c)).sum();
            match lambda.ring() {
                Ring::Z => dot.is_zero(),
                Ring::Z2 => (dot % 2u32).is_zero(),
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmap::enumerate_z2;
    use crate::simplicial::{cyclic_boundary, ngon, simplex_boundary};

    #[test]
    fn triangle_dual() {
        let t = simplex_boundary(2).unwrap();
        let l = CharMatrix::from_i64(Ring::Z2, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let phi = gale_dual(&t, &l).unwrap();
        assert_eq!(
            phi.matrix,
            CharMatrix::from_i64(Ring::Z2, &[vec![1, 1, 1]]).unwrap()
        );
        assert!(verify_dual(&t, &phi));
        assert!(annihilates(&l, &phi));
    }

    #[test]
    fn square_dual() {
        let sq = ngon(4).unwrap();
        let l = CharMatrix::from_i64(Ring::Z2, &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]]).unwrap();
        let phi = gale_dual(&sq, &l).unwrap();
        assert_eq!(phi.matrix.rank(), 2);
        assert!(verify_dual(&sq, &phi));
    }

    #[test]
    fn every_enumerated_map_has_a_valid_dual() {
        for k in [
            ngon(5).unwrap(),
            ngon(6).unwrap(),
            cyclic_boundary(4, 7).unwrap(),
        ] {
            for c in enumerate_z2(&k).unwrap() {
                let phi = gale_dual(&k, &c.canonical).unwrap();
                assert!(annihilates(&c.canonical, &phi));
                assert!(verify_dual(&k, &phi));
            }
        }
    }

    #[test]
    fn z_dual_of_hirzebruch_square() {
        let sq = ngon(4).unwrap();
        for a in -3..=3 {
            let l = CharMatrix::from_i64(Ring::Z, &[vec![1, 0, -1, a], vec![0, 1, 0, -1]]).unwrap();
            assert!(l.is_characteristic(&sq).unwrap());
            let phi = gale_dual(&sq, &l).unwrap();
            assert!(annihilates(&l, &phi));
            assert!(verify_dual(&sq, &phi));
        }
    }
}
