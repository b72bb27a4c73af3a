//! Euclidean distance from a point to a cone union.
//!
//! Powers the empirical properness test.  Per convex piece the projection
//! is found by enumerating generator subsets: the projection onto the
//! cone lies in the conic hull of some linearly independent subset of
//! generators with nonnegative coefficients (Caratheodory), so the
//! minimum over all such candidate faces is exact up to floating point.

use crate::error::{Error, Result};
use crate::linalg::Matrix;

use super::{ConeUnion, ConvexCone};

/// Hard cap on generators per piece; enumeration is exponential in this.
pub const MAX_PIECE_GENERATORS: usize = 12;

/// Distance from `x` to the union, the minimum over pieces.  Ties at
/// tolerance boundaries resolve toward the smaller distance, so the
/// empirical verdicts err toward reporting a near miss.
pub fn distance_to_cone(x: &[f64], cone: &ConeUnion) -> Result<f64> {
    if x.len() != cone.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: cone.ambient_dim,
            got: x.len(),
        });
    }
    let norm = |v: &[f64]| v.iter().map(|a| a * a).sum::<f64>().sqrt();
    let mut best = norm(x); // projection onto {0}, a member of every piece
    for piece in &cone.pieces {
        best = best.min(piece_distance(x, piece)?);
    }
    Ok(best)
}

fn piece_distance(x: &[f64], piece: &ConvexCone) -> Result<f64> {
    let k = piece.generators.len();
    if k > MAX_PIECE_GENERATORS {
        return Err(Error::GeneratorCount {
            got: k,
            limit: MAX_PIECE_GENERATORS,
        });
    }
    let dim = x.len();
    let gens: Vec<Vec<f64>> = piece.generators.iter().map(|g| g.to_f64()).collect();
    let max_size = k.min(dim);
    let mut best = x.iter().map(|a| a * a).sum::<f64>().sqrt();

    // Iterate subsets by bitmask, skipping those larger than the ambient
    // dimension (dependent subsets never improve on their independent
    // subfaces).
    for mask in 1u32..(1u32 << k) {
        let size = mask.count_ones() as usize;
        if size > max_size {
            continue;
        }
        let idx: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        // Normal equations G^t G c = G^t x on the subset.
        let mut gtg = Matrix::zeros(size, size);
        let mut gtx = vec![0.0; size];
        for (a, &ia) in idx.iter().enumerate() {
            for (b, &ib) in idx.iter().enumerate() {
                gtg[(a, b)] = dot(&gens[ia], &gens[ib]);
            }
            gtx[a] = dot(&gens[ia], x);
        }
        let Ok(inv) = gtg.inverse() else {
            continue; // dependent subset; covered by smaller faces
        };
        let c = inv.mul_vec(&gtx)?;
        if c.iter().any(|&ci| ci < -1e-12) {
            continue;
        }
        let mut proj = vec![0.0; dim];
        for (a, &ia) in idx.iter().enumerate() {
            let ci = c[a].max(0.0);
            for (p, g) in proj.iter_mut().zip(&gens[ia]) {
                *p += ci * g;
            }
        }
        let d = x
            .iter()
            .zip(&proj)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        best = best.min(d);
    }
    Ok(best)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::ConeUnion;
    use crate::linalg::RationalVector;

    #[test]
    fn member_has_distance_zero() {
        let wedge = ConeUnion::from_int_rays(2, &[&[1, 0], &[1, 2]]).unwrap();
        assert!(distance_to_cone(&[2.0, 1.0], &wedge).unwrap() < 1e-12);
    }

    #[test]
    fn orthogonal_projection_onto_axis() {
        let x_axis = ConeUnion::from_int_rays(2, &[&[1, 0], &[-1, 0]]).unwrap();
        let d = distance_to_cone(&[0.0, 1.0], &x_axis).unwrap();
        assert!((d - 1.0).abs() < 1e-12);
    }

    // Hand oracle: projection of (1,1) onto the ray through (1,0) is
    // (1,0), distance 1.
    #[test]
    fn ray_projection_hand_oracle() {
        let ray = ConeUnion::from_int_rays(2, &[&[1, 0]]).unwrap();
        let d = distance_to_cone(&[1.0, 1.0], &ray).unwrap();
        assert!((d - 1.0).abs() < 1e-12);
        // Behind the ray the nearest point is the origin.
        let d = distance_to_cone(&[-3.0, 4.0], &ray).unwrap();
        assert!((d - 5.0).abs() < 1e-12);
    }

    #[test]
    fn generator_budget_enforced() {
        let gens: Vec<RationalVector> = (0..13)
            .map(|i| RationalVector::from_ints(&[1, i]))
            .collect();
        let cone = ConeUnion::new(
            2,
            vec![super::super::ConvexCone::from_rays(gens)],
            super::super::Provenance::Exact,
        )
        .unwrap();
        assert!(matches!(
            distance_to_cone(&[1.0, 0.0], &cone),
            Err(Error::GeneratorCount { .. })
        ));
    }
}
