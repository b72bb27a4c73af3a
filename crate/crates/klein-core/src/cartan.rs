//! The Cartan projection nu: G -> a, canonicalized to the dominant
//! chamber.
//!
//! For GL(n,R) the projection of g is half the logs of the eigenvalues of
//! `g^t g` in nonincreasing order.  Every other catalog family runs the
//! same computation on its real matrix realization and folds the
//! exponents down to the group's restricted rank via the catalog's
//! multiplicity data; products project block by block.  The projection is
//! canonically defined only up to the Weyl group; this module fixes the
//! dominant-chamber representative (nonincreasing for GL/SL,
//! nonincreasing and nonnegative for the other families), and all cone
//! comparisons downstream happen in that chamber.

use serde::{Deserialize, Serialize};

use crate::catalog::{GroupDescriptor, MEMBERSHIP_TOL};
use crate::error::{Error, Result};
use crate::linalg::{gram, sym_eigen, Matrix};
use crate::par;

/// A point of the flat, tagged with its chamber normalization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CartanVector {
    pub coords: Vec<f64>,
    pub chamber_canonical: bool,
}

impl CartanVector {
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.coords.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }
}

/// Eigenvalues of the Gram matrix below this threshold are treated as a
/// singular input rather than producing -inf logs.
const EIGENVALUE_FLOOR: f64 = 1e-14;

/// The Cartan projection of `g` in `group`, chamber-canonical.
///
/// Fails with a membership error (carrying the residual) when `g` does
/// not satisfy the group's defining equations to 1e-9, and with a
/// singular-input error when `g` is singular within tolerance.
pub fn nu(group: &GroupDescriptor, g: &Matrix) -> Result<CartanVector> {
    let residual = group.membership_residual(g)?;
    if residual > MEMBERSHIP_TOL {
        return Err(Error::Membership {
            group: group.to_string(),
            residual,
            tol: MEMBERSHIP_TOL,
        });
    }
    let coords = nu_coords(group, g)?;
    Ok(CartanVector {
        coords: group.canonicalize_chamber(&coords),
        chamber_canonical: true,
    })
}

/// Raw (pre-canonicalization) coordinates; products recurse per block and
/// return intrinsic coordinates.
fn nu_coords(group: &GroupDescriptor, g: &Matrix) -> Result<Vec<f64>> {
    if let Some(factors) = group.product_factors() {
        let mut out = Vec::with_capacity(group.cartan_dim());
        let mut off = 0;
        for f in factors {
            let block = g.diagonal_block(off, f.ambient_size())?;
            let full = nu_coords(f, &block)?;
            let canon = f.canonicalize_chamber(&full);
            out.extend(f.full_to_intrinsic(&canon));
            off += f.ambient_size();
        }
        return Ok(out);
    }
    let gm = gram(g)?;
    let (eigenvalues, _) = sym_eigen(&gm, 1e-12)?;
    if eigenvalues.iter().any(|&l| l < EIGENVALUE_FLOOR) {
        return Err(Error::SingularInput(format!(
            "gram eigenvalue {:.3e} below {:.0e}",
            eigenvalues.last().copied().unwrap_or(0.0),
            EIGENVALUE_FLOOR
        )));
    }
    let exponents: Vec<f64> = eigenvalues.iter().map(|l| 0.5 * l.ln()).collect();
    group.fold_exponents(&exponents)
}

/// The opposition involution on chamber-canonical vectors, realizing
/// nu(g^-1) = involution(nu(g)).
pub fn chamber_involution(group: &GroupDescriptor, v: &CartanVector) -> Result<CartanVector> {
    if !v.chamber_canonical {
        return Err(Error::Contract(
            "chamber_involution requires a chamber-canonical vector".into(),
        ));
    }
    if v.coords.len() != group.cartan_dim() {
        return Err(Error::DimensionMismatch {
            expected: group.cartan_dim(),
            got: v.coords.len(),
        });
    }
    Ok(CartanVector {
        coords: group.chamber_involution(&v.coords),
        chamber_canonical: true,
    })
}

/// Batch projection with deterministic output order.
pub fn nu_batch(group: &GroupDescriptor, mats: &[Matrix]) -> Result<Vec<CartanVector>> {
    let results = par::map_slice(mats, |m| nu(group, m));
    results.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::GroupDescriptor;

    #[test]
    fn diagonal_gl2() {
        let g = GroupDescriptor::gl(2);
        let v = nu(&g, &Matrix::diagonal(&[2.0, 0.5])).unwrap();
        assert!((v.coords[0] - 2.0f64.ln()).abs() < 1e-12);
        assert!((v.coords[1] + 2.0f64.ln()).abs() < 1e-12);
        assert!(v.chamber_canonical);
    }

    #[test]
    fn orthogonal_projects_to_zero() {
        let g = GroupDescriptor::gl(3);
        let th = 0.35f64;
        let k = Matrix::from_rows(&[
            vec![th.cos(), -th.sin(), 0.0],
            vec![th.sin(), th.cos(), 0.0],
            vec![0.0, 0.0, 1.0],
        ])
        .unwrap();
        let v = nu(&g, &k).unwrap();
        assert!(v.max_abs() < 1e-12);
    }

    // Hand oracle: for the unipotent [[1,1],[0,1]], g^t g = [[1,1],[1,2]]
    // has characteristic polynomial l^2 - 3l + 1, so the top eigenvalue is
    // (3+sqrt5)/2 and nu = (log((3+sqrt5)/2)/2, -log((3+sqrt5)/2)/2).
    #[test]
    fn unipotent_sl2_hand_oracle() {
        let g = GroupDescriptor::sl(2);
        let u = Matrix::from_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        let v = nu(&g, &u).unwrap();
        let expect = 0.5 * ((3.0 + 5.0f64.sqrt()) / 2.0).ln();
        assert!((v.coords[0] - expect).abs() < 1e-12);
        assert!((v.coords[1] + expect).abs() < 1e-12);
    }

    #[test]
    fn membership_enforced() {
        let o21 = GroupDescriptor::o(2, 1);
        let not_member = Matrix::diagonal(&[2.0, 1.0, 1.0]);
        match nu(&o21, &not_member) {
            Err(Error::Membership { residual, .. }) => assert!(residual > 0.1),
            other => panic!("expected membership error, got {:?}", other),
        }
    }

    #[test]
    fn singular_input_rejected() {
        let g = GroupDescriptor::gl(2);
        let s = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert!(matches!(nu(&g, &s), Err(Error::SingularInput(_))));
    }

    #[test]
    fn involution_examples() {
        let gl3 = GroupDescriptor::gl(3);
        let v = CartanVector {
            coords: vec![3.0, 1.0, -2.0],
            chamber_canonical: true,
        };
        let w = chamber_involution(&gl3, &v).unwrap();
        assert_eq!(w.coords, vec![2.0, -1.0, -3.0]);

        let sl2 = GroupDescriptor::sl(2);
        let v = CartanVector {
            coords: vec![0.7, -0.7],
            chamber_canonical: true,
        };
        assert_eq!(chamber_involution(&sl2, &v).unwrap().coords, vec![0.7, -0.7]);

        let o21 = GroupDescriptor::o(2, 1);
        let v = CartanVector {
            coords: vec![1.25],
            chamber_canonical: true,
        };
        assert_eq!(chamber_involution(&o21, &v).unwrap().coords, vec![1.25]);
    }

    #[test]
    fn o21_boost_folds_to_rank_one() {
        let o21 = GroupDescriptor::o(2, 1);
        let boost = Matrix::from_rows(&[
            vec![1.25, 0.0, 0.75],
            vec![0.0, 1.0, 0.0],
            vec![0.75, 0.0, 1.25],
        ])
        .unwrap();
        let v = nu(&o21, &boost).unwrap();
        assert_eq!(v.coords.len(), 1);
        // Boost eigenvalues are exactly 2 and 1/2.
        assert!((v.coords[0] - 2.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn product_projects_blockwise() {
        let sl2 = GroupDescriptor::sl(2);
        let prod = GroupDescriptor::product(vec![sl2.clone(), sl2]).unwrap();
        let g = Matrix::block_diagonal(&[
            Matrix::diagonal(&[2.0, 0.5]),
            Matrix::diagonal(&[4.0, 0.25]),
        ]);
        let v = nu(&prod, &g).unwrap();
        assert_eq!(v.coords.len(), 2);
        assert!((v.coords[0] - 2.0f64.ln()).abs() < 1e-12);
        assert!((v.coords[1] - 4.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn off_block_matrix_rejected_for_product() {
        let sl2 = GroupDescriptor::sl(2);
        let prod = GroupDescriptor::product(vec![sl2.clone(), sl2]).unwrap();
        let mut g = Matrix::block_diagonal(&[
            Matrix::diagonal(&[2.0, 0.5]),
            Matrix::diagonal(&[4.0, 0.25]),
        ]);
        g[(0, 2)] = 0.5;
        assert!(matches!(nu(&prod, &g), Err(Error::Membership { .. })));
    }

    #[test]
    fn u11_boost_folds_with_multiplicity_two() {
        let u11 = GroupDescriptor::u(1, 1);
        // Realified complex boost: eigenvalues 2, 2, 1/2, 1/2.
        let b = Matrix::from_rows(&[
            vec![1.25, 0.0, 0.75, 0.0],
            vec![0.0, 1.25, 0.0, 0.75],
            vec![0.75, 0.0, 1.25, 0.0],
            vec![0.0, 0.75, 0.0, 1.25],
        ])
        .unwrap();
        let v = nu(&u11, &b).unwrap();
        assert_eq!(v.coords.len(), 1);
        assert!((v.coords[0] - 2.0f64.ln()).abs() < 1e-12);
    }
}
