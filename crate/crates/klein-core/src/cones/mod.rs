//! Polyhedral cone geometry for the flat `a` of a reductive group.
//!
//! Implements the proper-pair and coarse-equivalence relations for
//! subsets of the Abelian group R^n, specialized to the two shapes the
//! properness criterion actually compares: finite unions of closed
//! convex polyhedral cones with rational generators (nu-images of
//! subgroups) and finite point clouds (nu-images of sampled discrete
//! groups).
//!
//! For closed cones, "L meets every bounded thickening of H in a bounded
//! set" collapses to trivial intersection, and mutual bounded-containment
//! collapses to equality; both reformulations are validated against a
//! unit-sphere grid oracle in the test suite.

mod distance;
mod evidence;
pub(crate) mod lp;
mod subspace;

pub use distance::distance_to_cone;
pub use evidence::{
    subset_proper_evidence, EvidenceVerdict, LengthBucket, NearConeCounts, NearWitness,
};
pub use subspace::{sign_vector_family, subspace_discontinuous_dual, Subspace};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Rat, RationalVector};
use crate::par;

/// Whether cone data is exact catalog data or an empirical hull of
/// sampled points.  Exact decision procedures refuse empirical input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Provenance {
    Exact,
    Empirical,
}

/// One convex polyhedral cone: the conic hull of `generators`, optionally
/// cut by linear equalities (each generator must satisfy them).
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexCone {
    pub generators: Vec<RationalVector>,
    pub equalities: Vec<RationalVector>,
}

impl ConvexCone {
    pub fn from_rays(generators: Vec<RationalVector>) -> Self {
        Self {
            generators,
            equalities: Vec::new(),
        }
    }

    /// The cone `{0}`.
    pub fn origin() -> Self {
        Self {
            generators: Vec::new(),
            equalities: Vec::new(),
        }
    }
}

/// Finite union of convex polyhedral cones in a fixed ambient dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeUnion {
    pub ambient_dim: usize,
    pub pieces: Vec<ConvexCone>,
    pub provenance: Provenance,
    /// When set, the stored pieces explicitly contain all Weyl images.
    /// Catalog cones are chamber representatives and leave this unset;
    /// the decision procedures are chamber-side either way.
    pub weyl_saturated: bool,
}

impl ConeUnion {
    pub fn new(ambient_dim: usize, pieces: Vec<ConvexCone>, provenance: Provenance) -> Result<Self> {
        for piece in &pieces {
            for g in &piece.generators {
                if g.dim() != ambient_dim {
                    return Err(Error::DimensionMismatch {
                        expected: ambient_dim,
                        got: g.dim(),
                    });
                }
                if g.is_zero() {
                    return Err(Error::Contract(
                        "cone generators must be nonzero".into(),
                    ));
                }
            }
            for e in &piece.equalities {
                if e.dim() != ambient_dim {
                    return Err(Error::DimensionMismatch {
                        expected: ambient_dim,
                        got: e.dim(),
                    });
                }
            }
        }
        Ok(Self {
            ambient_dim,
            pieces,
            provenance,
            weyl_saturated: false,
        })
    }

    /// The trivial cone `{0}`; the nu-image of every compact subgroup.
    pub fn origin(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            pieces: vec![ConvexCone::origin()],
            provenance: Provenance::Exact,
            weyl_saturated: true,
        }
    }

    /// A single convex piece from integer ray data.
    pub fn from_int_rays(ambient_dim: usize, rays: &[&[i64]]) -> Result<Self> {
        let gens = rays
            .iter()
            .map(|r| RationalVector::from_ints(r))
            .collect::<Vec<_>>();
        Self::new(ambient_dim, vec![ConvexCone::from_rays(gens)], Provenance::Exact)
    }

    pub fn is_origin_only(&self) -> bool {
        self.pieces.iter().all(|p| p.generators.is_empty())
    }

    /// Canonicalizes for serialization: primitive generators in
    /// lexicographic order, pieces ordered lexicographically as well.
    pub fn canonicalized(&self) -> Self {
        let mut pieces: Vec<ConvexCone> = self
            .pieces
            .iter()
            .map(|p| {
                let mut gens: Vec<RationalVector> =
                    p.generators.iter().map(|g| g.primitive()).collect();
                gens.sort_by(|a, b| a.lex_cmp(b));
                gens.dedup();
                let mut eqs: Vec<RationalVector> =
                    p.equalities.iter().map(|e| e.primitive()).collect();
                eqs.sort_by(|a, b| a.lex_cmp(b));
                eqs.dedup();
                ConvexCone {
                    generators: gens,
                    equalities: eqs,
                }
            })
            .collect();
        pieces.sort_by(|a, b| {
            let key = |p: &ConvexCone| p.generators.clone();
            let (ka, kb) = (key(a), key(b));
            for (x, y) in ka.iter().zip(kb.iter()) {
                match x.lex_cmp(y) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            ka.len().cmp(&kb.len())
        });
        Self {
            ambient_dim: self.ambient_dim,
            pieces,
            provenance: self.provenance,
            weyl_saturated: self.weyl_saturated,
        }
    }

    /// Exact membership of a rational point in the union.
    pub fn contains_point(&self, x: &RationalVector) -> Result<bool> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: x.dim(),
            });
        }
        if x.is_zero() {
            return Ok(true);
        }
        for piece in &self.pieces {
            if piece.equalities.iter().any(|e| !e.dot(x).unwrap().is_zero()) {
                continue;
            }
            if piece.generators.is_empty() {
                continue; // the origin piece holds only 0
            }
            // Feasibility of G c = x, c >= 0.
            let dim = self.ambient_dim;
            let mut rows: Vec<Vec<Rat>> = vec![Vec::with_capacity(piece.generators.len()); dim];
            for g in &piece.generators {
                for (i, row) in rows.iter_mut().enumerate() {
                    row.push(g.get(i).clone());
                }
            }
            let rhs: Vec<Rat> = x.coords().to_vec();
            if lp::feasible_point(&rows, &rhs).is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn require_exact(c: &ConeUnion, role: &str) -> Result<()> {
    if c.provenance == Provenance::Empirical {
        return Err(Error::EmpiricalInput(format!(
            "{} cone is an empirical hull",
            role
        )));
    }
    Ok(())
}

fn require_same_dim(a: &ConeUnion, b: &ConeUnion) -> Result<()> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            got: b.ambient_dim,
        });
    }
    Ok(())
}

/// Searches one pair of convex pieces for a common nonzero point.
///
/// Existence of a nonzero `x` in both conic hulls is an LP family: for
/// each probe coordinate `i` and sign `s`, feasibility of
/// `A c = B d, (A c)_i = s, c, d >= 0` over the generator coefficients.
/// Any nonzero common point has a nonzero coordinate and scales onto one
/// of the probes, so the family is exhaustive.
fn piece_common_direction(
    dim: usize,
    a: &ConvexCone,
    b: &ConvexCone,
) -> Option<RationalVector> {
    if a.generators.is_empty() || b.generators.is_empty() {
        return None;
    }
    let ga = a.generators.len();
    let gb = b.generators.len();
    let cols = ga + gb;

    // Shared rows: A c - B d = 0, plus equality cuts from both pieces.
    let mut base_rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..dim {
        let mut row = Vec::with_capacity(cols);
        for g in &a.generators {
            row.push(g.get(i).clone());
        }
        for g in &b.generators {
            row.push(-g.get(i));
        }
        base_rows.push(row);
    }
    for e in &a.equalities {
        let mut row = Vec::with_capacity(cols);
        for g in &a.generators {
            row.push(e.dot(g).unwrap());
        }
        row.extend(std::iter::repeat(Rat::zero()).take(gb));
        base_rows.push(row);
    }
    for e in &b.equalities {
        let mut row = vec![Rat::zero(); ga];
        for g in &b.generators {
            row.push(e.dot(g).unwrap());
        }
        base_rows.push(row);
    }
    let mut base_rhs = vec![Rat::zero(); base_rows.len()];

    for i in 0..dim {
        for sign in [1i64, -1] {
            let mut rows = base_rows.clone();
            let mut row = Vec::with_capacity(cols);
            for g in &a.generators {
                row.push(g.get(i) * crate::linalg::rat_int(sign));
            }
            row.extend(std::iter::repeat(Rat::zero()).take(gb));
            rows.push(row);
            base_rhs.push(Rat::one());
            let rhs = base_rhs.clone();
            base_rhs.pop();

            if let Some(x) = lp::feasible_point(&rows, &rhs) {
                // Witness: the common point A c.
                let mut w = vec![Rat::zero(); dim];
                for (j, g) in a.generators.iter().enumerate() {
                    for (k, wk) in w.iter_mut().enumerate() {
                        *wk += g.get(k) * &x[j];
                    }
                }
                let witness = RationalVector::new(w).unwrap();
                debug_assert!(!witness.is_zero());
                return Some(witness.primitive());
            }
        }
    }
    None
}

/// A nonzero common direction of two exact cone unions, if any exists.
/// Piece pairs are probed in parallel; the reported witness is the one
/// from the first pair in deterministic piece order.
pub fn common_direction(a: &ConeUnion, b: &ConeUnion) -> Result<Option<RationalVector>> {
    require_same_dim(a, b)?;
    require_exact(a, "left")?;
    require_exact(b, "right")?;
    let pairs: Vec<(usize, usize)> = (0..a.pieces.len())
        .flat_map(|i| (0..b.pieces.len()).map(move |j| (i, j)))
        .collect();
    let hits = par::map_slice(&pairs, |&(i, j)| {
        piece_common_direction(a.ambient_dim, &a.pieces[i], &b.pieces[j])
    });
    Ok(hits.into_iter().flatten().next())
}

/// The proper-pair relation for exact cone unions: true iff the unions
/// intersect only at the origin.
pub fn cones_proper(a: &ConeUnion, b: &ConeUnion) -> Result<bool> {
    Ok(common_direction(a, b)?.is_none())
}

/// The coarse-equivalence relation for exact cone unions: set equality,
/// decided by exact mutual containment of generators.
pub fn cones_equiv(a: &ConeUnion, b: &ConeUnion) -> Result<bool> {
    require_same_dim(a, b)?;
    require_exact(a, "left")?;
    require_exact(b, "right")?;
    for piece in &a.pieces {
        for g in &piece.generators {
            if !b.contains_point(g)? {
                return Ok(false);
            }
        }
    }
    for piece in &b.pieces {
        for g in &piece.generators {
            if !a.contains_point(g)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Finite point cloud with word metadata, the sampled stand-in for the
/// nu-image of a discrete group.
#[derive(Debug, Clone)]
pub struct PointCloud {
    pub ambient_dim: usize,
    pub points: Vec<Vec<f64>>,
    pub labels: Vec<PointLabel>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PointLabel {
    pub word: String,
    pub length: usize,
}

impl PointCloud {
    pub fn new(ambient_dim: usize, points: Vec<Vec<f64>>, labels: Vec<PointLabel>) -> Result<Self> {
        if points.iter().any(|p| p.len() != ambient_dim) {
            return Err(Error::Contract(
                "point cloud entries must match the ambient dimension".into(),
            ));
        }
        if labels.len() != points.len() {
            return Err(Error::Contract("one label per point required".into()));
        }
        Ok(Self {
            ambient_dim,
            points,
            labels,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axis(dim: usize, i: usize, sign: i64) -> Vec<i64> {
        let mut v = vec![0i64; dim];
        v[i] = sign;
        v
    }

    fn line_x() -> ConeUnion {
        ConeUnion::from_int_rays(2, &[&axis(2, 0, 1), &axis(2, 0, -1)]).unwrap()
    }

    fn line_y() -> ConeUnion {
        ConeUnion::from_int_rays(2, &[&axis(2, 1, 1), &axis(2, 1, -1)]).unwrap()
    }

    #[test]
    fn axes_are_proper() {
        assert!(cones_proper(&line_x(), &line_y()).unwrap());
    }

    #[test]
    fn anything_vs_origin_is_proper() {
        let a = ConeUnion::from_int_rays(2, &[&[1, 0], &[1, 2]]).unwrap();
        assert!(cones_proper(&a, &ConeUnion::origin(2)).unwrap());
    }

    // Oracle: a dense scan of unit directions finds (1,1) in both cones.
    #[test]
    fn overlapping_cones_are_not_proper() {
        let ray = ConeUnion::from_int_rays(2, &[&[1, 1]]).unwrap();
        let wedge = ConeUnion::from_int_rays(2, &[&[1, 0], &[1, 2]]).unwrap();
        assert!(!cones_proper(&ray, &wedge).unwrap());
        let w = common_direction(&ray, &wedge).unwrap().unwrap();
        assert_eq!(w, RationalVector::from_ints(&[1, 1]));
    }

    #[test]
    fn equiv_reflexive_and_axes_differ() {
        let a = ConeUnion::from_int_rays(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(cones_equiv(&a, &a).unwrap());
        assert!(!cones_equiv(&line_x(), &line_y()).unwrap());
    }

    // Oracle: containment grid scan; the middle ray is redundant.
    #[test]
    fn equiv_ignores_redundant_generator() {
        let a = ConeUnion::from_int_rays(2, &[&[1, 0], &[0, 1]]).unwrap();
        let b = ConeUnion::from_int_rays(2, &[&[1, 0], &[1, 1], &[0, 1]]).unwrap();
        assert!(cones_equiv(&a, &b).unwrap());
    }

    #[test]
    fn proper_is_symmetric_on_samples() {
        let cones = [
            line_x(),
            line_y(),
            ConeUnion::from_int_rays(2, &[&[1, 1]]).unwrap(),
            ConeUnion::from_int_rays(2, &[&[1, 0], &[1, 2]]).unwrap(),
            ConeUnion::origin(2),
        ];
        for a in &cones {
            for b in &cones {
                assert_eq!(
                    cones_proper(a, b).unwrap(),
                    cones_proper(b, a).unwrap()
                );
            }
        }
    }

    #[test]
    fn empirical_input_refused() {
        let mut a = line_x();
        a.provenance = Provenance::Empirical;
        let err = cones_proper(&a, &line_y()).unwrap_err();
        assert!(err.to_string().contains("subset_proper_evidence"));
    }

    #[test]
    fn dimension_mismatch_refused() {
        let a = line_x();
        let b = ConeUnion::from_int_rays(3, &[&[1, 0, 0]]).unwrap();
        assert!(cones_proper(&a, &b).is_err());
    }

    #[test]
    fn contains_point_exact() {
        let wedge = ConeUnion::from_int_rays(2, &[&[1, 0], &[1, 2]]).unwrap();
        assert!(wedge
            .contains_point(&RationalVector::from_ints(&[2, 1]))
            .unwrap());
        assert!(!wedge
            .contains_point(&RationalVector::from_ints(&[0, 1]))
            .unwrap());
        assert!(wedge
            .contains_point(&RationalVector::from_ints(&[0, 0]))
            .unwrap());
    }
}
