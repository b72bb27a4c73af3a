//! Named standard embeddings H < G with exact generator matrices and
//! precomputed nu-image cone data.
//!
//! The nu-image of each subgroup ships as exact rational generators in
//! the ambient dominant chamber.  The criterion this feeds never says how
//! to compute these images, so they are catalog data: derived from the
//! restricted root structure of each embedding and cross-validated at
//! test time against the sampled-word oracle (every sampled element's
//! nu must lie in the cone, and every extreme ray must be realized by an
//! explicit subgroup element, the "ray witness").
//!
//! Rational generator recipe: hyperbolic boosts use the Pythagorean-like
//! point cosh t = 5/4, sinh t = 3/4, whose matrix has exact eigenvalues
//! 2 and 1/2 (so nu lands exactly on log 2 times a chamber ray); compact
//! rotations use cos = 3/5, sin = 4/5.

use crate::cones::{ConeUnion, ConvexCone, Provenance};
use crate::error::{Error, Result};
use crate::linalg::{rat_frac, rat_int, RatMatrix, RationalVector};

use super::families::{realify_complex, realify_quaternion, Family, GroupDescriptor};
use super::spin::spin_eight_one;

/// A catalog embedding: subgroup generators inside the ambient group,
/// plus the exact nu-image cone in the ambient chamber coordinates.
#[derive(Debug, Clone)]
pub struct NamedEmbedding {
    pub ambient: GroupDescriptor,
    pub subgroup: GroupDescriptor,
    pub name: String,
    /// Generator matrices, ambient-sized, exact rationals.
    pub generators: Vec<RatMatrix>,
    /// Closure of the nu-image, chamber representatives, exact.
    pub nu_cone: ConeUnion,
    /// One subgroup element per extreme ray of the cone (same order as
    /// the canonicalized generators), realizing that ray exactly.
    pub ray_witnesses: Vec<RatMatrix>,
}

impl NamedEmbedding {
    pub fn key(&self) -> String {
        format!("{} < {} [{}]", self.subgroup, self.ambient, self.name)
    }
}

fn ones_vector(dim: usize, k: usize) -> RationalVector {
    let mut v = vec![0i64; dim];
    for x in v.iter_mut().take(k) {
        *x = 1;
    }
    RationalVector::from_ints(&v)
}

/// The face of the O-type chamber spanned by the first `sub_rank`
/// coordinates: { x_1 >= ... >= x_r >= 0, rest 0 }.
fn chamber_face_cone(ambient_dim: usize, sub_rank: usize) -> ConeUnion {
    if sub_rank == 0 {
        return ConeUnion::origin(ambient_dim.max(1));
    }
    let gens = (1..=sub_rank).map(|k| ones_vector(ambient_dim, k)).collect();
    ConeUnion::new(
        ambient_dim,
        vec![ConvexCone::from_rays(gens)],
        Provenance::Exact,
    )
    .unwrap()
}

fn ray_cone(ambient_dim: usize, ray: RationalVector) -> ConeUnion {
    ConeUnion::new(
        ambient_dim,
        vec![ConvexCone::from_rays(vec![ray])],
        Provenance::Exact,
    )
    .unwrap()
}

// ---------------------------------------------------------------------
// Real orthogonal generators
// ---------------------------------------------------------------------

/// Boost in the mixed plane (i, p+j) of O(p,q): cosh = 5/4, sinh = 3/4.
fn o_boost(p: usize, q: usize, i: usize, j: usize) -> RatMatrix {
    assert!(i < p && j < q);
    let n = p + q;
    let mut m = RatMatrix::identity(n);
    m[(i, i)] = rat_frac(5, 4);
    m[(i, p + j)] = rat_frac(3, 4);
    m[(p + j, i)] = rat_frac(3, 4);
    m[(p + j, p + j)] = rat_frac(5, 4);
    m
}

/// Rotation with cos = 3/5 in the plane (a, b) of O(p,q); both indices
/// are absolute coordinates and must carry the same form sign.
fn o_rotation(n: usize, a: usize, b: usize) -> RatMatrix {
    let mut m = RatMatrix::identity(n);
    m[(a, a)] = rat_frac(3, 5);
    m[(a, b)] = rat_frac(-4, 5);
    m[(b, a)] = rat_frac(4, 5);
    m[(b, b)] = rat_frac(3, 5);
    m
}

fn o_generators(p: usize, q: usize) -> Vec<RatMatrix> {
    let r = p.min(q);
    let mut gens = Vec::new();
    for i in 0..r {
        gens.push(o_boost(p, q, i, i));
    }
    if p >= 2 {
        gens.push(o_rotation(p + q, 0, 1));
    }
    if q >= 2 {
        gens.push(o_rotation(p + q, p, p + 1));
    }
    gens
}

/// Extends an m x m matrix to n x n by the identity on the new trailing
/// coordinates.
fn extend_identity(m: &RatMatrix, n: usize) -> RatMatrix {
    let mut out = RatMatrix::identity(n);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out[(r, c)] = m[(r, c)].clone();
        }
    }
    out
}

/// O(p,q) < O(p,q+1) as the standard block fixing the last negative
/// coordinate.  The nu-image is the rank-r chamber face.
pub fn o_in_o(p: usize, q: usize) -> Result<NamedEmbedding> {
    let subgroup = GroupDescriptor::o(p, q);
    let ambient = GroupDescriptor::o(p, q + 1);
    let n = p + q + 1;
    let r = p.min(q);
    let generators: Vec<RatMatrix> = o_generators(p, q)
        .iter()
        .map(|g| extend_identity(g, n))
        .collect();
    let nu_cone = chamber_face_cone(ambient.cartan_dim(), r);
    let mut ray_witnesses = Vec::new();
    for k in 1..=r {
        let mut w = RatMatrix::identity(n);
        for i in 0..k {
            w = w.mul(&extend_identity(&o_boost(p, q, i, i), n));
        }
        ray_witnesses.push(w);
    }
    Ok(NamedEmbedding {
        ambient,
        subgroup,
        name: "standard".into(),
        generators,
        nu_cone,
        ray_witnesses,
    })
}

// ---------------------------------------------------------------------
// Unitary generators (complex entries held as re/im pairs, realified)
// ---------------------------------------------------------------------

struct ComplexMat {
    re: RatMatrix,
    im: RatMatrix,
}

impl ComplexMat {
    fn identity(n: usize) -> Self {
        Self {
            re: RatMatrix::identity(n),
            im: RatMatrix::zeros(n, n),
        }
    }

    fn realify(&self) -> RatMatrix {
        realify_complex(&self.re, &self.im)
    }
}

/// U(p,q) boost in the complex plane (i, p+j); real entries.
fn u_boost(p: usize, q: usize, i: usize, j: usize) -> ComplexMat {
    let mut m = ComplexMat::identity(p + q);
    m.re[(i, i)] = rat_frac(5, 4);
    m.re[(i, p + j)] = rat_frac(3, 4);
    m.re[(p + j, i)] = rat_frac(3, 4);
    m.re[(p + j, p + j)] = rat_frac(5, 4);
    m
}

/// Diagonal phase 3/5 + 4/5 i at complex coordinate a.
fn u_phase(n: usize, a: usize) -> ComplexMat {
    let mut m = ComplexMat::identity(n);
    m.re[(a, a)] = rat_frac(3, 5);
    m.im[(a, a)] = rat_frac(4, 5);
    m
}

fn u_rotation(n: usize, a: usize, b: usize) -> ComplexMat {
    let mut m = ComplexMat::identity(n);
    m.re[(a, a)] = rat_frac(3, 5);
    m.re[(a, b)] = rat_frac(-4, 5);
    m.re[(b, a)] = rat_frac(4, 5);
    m.re[(b, b)] = rat_frac(3, 5);
    m
}

/// U(n,1) < O(2n,2) by realification (interleaved coordinates put the
/// negative complex line's two real coordinates last, so the realified
/// matrices land directly in the standard O(2n,2)).  The nu-image is the
/// diagonal ray (1,1) of the rank-2 chamber.
pub fn u_in_o(n: usize) -> Result<NamedEmbedding> {
    let subgroup = GroupDescriptor::u(n, 1);
    let ambient = GroupDescriptor::o(2 * n, 2);
    let m = n + 1;
    let mut gens_c = vec![u_boost(n, 1, 0, 0), u_phase(m, 0), u_phase(m, n)];
    if n >= 2 {
        gens_c.push(u_rotation(m, 0, 1));
    }
    let generators: Vec<RatMatrix> = gens_c.iter().map(|g| g.realify()).collect();
    let nu_cone = ray_cone(2, RationalVector::from_ints(&[1, 1]));
    let ray_witnesses = vec![u_boost(n, 1, 0, 0).realify()];
    Ok(NamedEmbedding {
        ambient,
        subgroup,
        name: "realification".into(),
        generators,
        nu_cone,
        ray_witnesses,
    })
}

// ---------------------------------------------------------------------
// Quaternionic generators
// ---------------------------------------------------------------------

struct QuatMat {
    a: RatMatrix,
    b: RatMatrix,
    c: RatMatrix,
    d: RatMatrix,
}

impl QuatMat {
    fn identity(n: usize) -> Self {
        Self {
            a: RatMatrix::identity(n),
            b: RatMatrix::zeros(n, n),
            c: RatMatrix::zeros(n, n),
            d: RatMatrix::zeros(n, n),
        }
    }

    fn realify(&self) -> RatMatrix {
        realify_quaternion(&self.a, &self.b, &self.c, &self.d)
    }
}

fn sp_boost(p: usize, q: usize, i: usize, j: usize) -> QuatMat {
    let mut m = QuatMat::identity(p + q);
    m.a[(i, i)] = rat_frac(5, 4);
    m.a[(i, p + j)] = rat_frac(3, 4);
    m.a[(p + j, i)] = rat_frac(3, 4);
    m.a[(p + j, p + j)] = rat_frac(5, 4);
    m
}

/// Unit quaternion (1 + i + j + k)/2 at coordinate a.
fn sp_unit(n: usize, a: usize) -> QuatMat {
    let mut m = QuatMat::identity(n);
    let h = rat_frac(1, 2);
    m.a[(a, a)] = h.clone();
    m.b[(a, a)] = h.clone();
    m.c[(a, a)] = h.clone();
    m.d[(a, a)] = h;
    m
}

fn sp_phase(n: usize, a: usize) -> QuatMat {
    let mut m = QuatMat::identity(n);
    m.a[(a, a)] = rat_frac(3, 5);
    m.b[(a, a)] = rat_frac(4, 5);
    m
}

/// Sp(N,1) < O(4N,4) by realification.  The nu-image is the ray through
/// (1,1,1,1) in the rank-4 chamber.
pub fn sp_in_o(n: usize) -> Result<NamedEmbedding> {
    let subgroup = GroupDescriptor::sp(n, 1);
    let ambient = GroupDescriptor::o(4 * n, 4);
    let m = n + 1;
    let mut gens_q = vec![
        sp_boost(n, 1, 0, 0),
        sp_unit(m, 0),
        sp_unit(m, n),
        sp_phase(m, 0),
    ];
    if n >= 2 {
        let mut rot = QuatMat::identity(m);
        rot.a[(0, 0)] = rat_frac(3, 5);
        rot.a[(0, 1)] = rat_frac(-4, 5);
        rot.a[(1, 0)] = rat_frac(4, 5);
        rot.a[(1, 1)] = rat_frac(3, 5);
        gens_q.push(rot);
    }
    let generators: Vec<RatMatrix> = gens_q.iter().map(|g| g.realify()).collect();
    let nu_cone = ray_cone(4, RationalVector::from_ints(&[1, 1, 1, 1]));
    let ray_witnesses = vec![sp_boost(n, 1, 0, 0).realify()];
    Ok(NamedEmbedding {
        ambient,
        subgroup,
        name: "realification".into(),
        generators,
        nu_cone,
        ray_witnesses,
    })
}

/// Spin(8,1) < O(8,8) through the 16-dimensional real spin
/// representation.  The single restricted root spreads each boost
/// eigenvalue over all sixteen spinor coordinates, so the nu-image is the
/// full diagonal ray (1,...,1) of the rank-8 chamber.
pub fn spin_in_o() -> Result<NamedEmbedding> {
    let spin = spin_eight_one();
    let subgroup = GroupDescriptor::spin81();
    let ambient = GroupDescriptor::o(8, 8);
    let generators = vec![
        spin.boost(0),
        spin.boost(1),
        spin.rotation(0, 1),
        spin.rotation(1, 2),
        spin.rotation(0, 7),
    ];
    let nu_cone = ray_cone(8, ones_vector(8, 8));
    let ray_witnesses = vec![spin.boost(0)];
    Ok(NamedEmbedding {
        ambient,
        subgroup,
        name: "spin".into(),
        generators,
        nu_cone,
        ray_witnesses,
    })
}

// ---------------------------------------------------------------------
// Special linear blocks
// ---------------------------------------------------------------------

fn sl_generators(m: usize) -> Vec<RatMatrix> {
    let mut gens = Vec::new();
    for i in 0..(m - 1) {
        let mut up = RatMatrix::identity(m);
        up[(i, i + 1)] = rat_int(1);
        gens.push(up);
        let mut low = RatMatrix::identity(m);
        low[(i + 1, i)] = rat_int(1);
        gens.push(low);
    }
    let mut d = RatMatrix::identity(m);
    d[(0, 0)] = rat_int(2);
    d[(1, 1)] = rat_frac(1, 2);
    gens.push(d);
    gens
}

/// nu-image of the upper-left SL(m) block inside SL(n), in the n
/// log-eigenvalue coordinates.  A block element contributes a zero-sum
/// nonincreasing m-vector merged with n-m zeros; sorting splits the image
/// into one convex piece per count j of positive entries, with extreme
/// rays w_{k,l} = (l,...,l, 0,...,0, -k,...,-k) (k leading, l trailing).
fn sl_block_cone(n: usize, m: usize) -> ConeUnion {
    let mut pieces = Vec::new();
    for j in 1..m {
        let mut gens = Vec::new();
        for k in 1..=j {
            for l in 1..=(m - j) {
                let mut v = vec![0i64; n];
                for x in v.iter_mut().take(k) {
                    *x = l as i64;
                }
                for x in v.iter_mut().rev().take(l) {
                    *x = -(k as i64);
                }
                gens.push(RationalVector::from_ints(&v));
            }
        }
        pieces.push(ConvexCone::from_rays(gens));
    }
    ConeUnion::new(n, pieces, Provenance::Exact).unwrap()
}

/// SL(m,R) < SL(n,R) as the upper-left block.
pub fn sl_in_sl(n: usize, m: usize) -> Result<NamedEmbedding> {
    if !(2 <= m && m < n) {
        return Err(Error::UnknownEmbedding(format!(
            "SL({},R) block in SL({},R)",
            m, n
        )));
    }
    let subgroup = GroupDescriptor::sl(m);
    let ambient = GroupDescriptor::sl(n);
    let generators: Vec<RatMatrix> = sl_generators(m)
        .iter()
        .map(|g| extend_identity(g, n))
        .collect();
    let nu_cone = sl_block_cone(n, m).canonicalized();
    // Witness for each canonical ray: read off (k, l) from the ray shape
    // and build diag(2^l x k, 1, ..., 2^-k x l) inside the block.
    let mut ray_witnesses = Vec::new();
    for piece in &nu_cone.pieces {
        for g in &piece.generators {
            let coords = g.coords();
            let k = coords.iter().filter(|x| x > &&num_traits::Zero::zero()).count();
            let l = coords.iter().filter(|x| x < &&num_traits::Zero::zero()).count();
            let mut w = RatMatrix::identity(n);
            let two_l = rat_int(1 << l);
            let half_k = rat_frac(1, 1 << k);
            for i in 0..k {
                w[(i, i)] = two_l.clone();
            }
            for i in 0..l {
                w[(m - 1 - i, m - 1 - i)] = half_k.clone();
            }
            ray_witnesses.push(w);
        }
    }
    Ok(NamedEmbedding {
        ambient,
        subgroup,
        name: "block".into(),
        generators,
        nu_cone,
        ray_witnesses,
    })
}

// ---------------------------------------------------------------------
// Diagonal, torus, compact, factor embeddings
// ---------------------------------------------------------------------

/// Intrinsic chamber rays of a factor together with witnesses in the
/// factor group.  Supported for the families the diagonal embeddings
/// need.
fn intrinsic_chamber_rays(g: &GroupDescriptor) -> Result<Vec<(RationalVector, RatMatrix)>> {
    match g.family() {
        Family::SL(2) => Ok(vec![(
            RationalVector::from_ints(&[1]),
            {
                let mut d = RatMatrix::identity(2);
                d[(0, 0)] = rat_int(2);
                d[(1, 1)] = rat_frac(1, 2);
                d
            },
        )]),
        Family::GL(n) => {
            let n = *n;
            let mut out = Vec::new();
            for k in 1..=n {
                let mut d = RatMatrix::identity(n);
                for i in 0..k {
                    d[(i, i)] = rat_int(2);
                }
                out.push((ones_vector(n, k), d));
            }
            let mut dneg = RatMatrix::identity(n);
            for i in 0..n {
                dneg[(i, i)] = rat_frac(1, 2);
            }
            out.push((ones_vector(n, n).neg(), dneg));
            Ok(out)
        }
        Family::O(p, q) => {
            let r = p.min(q);
            let mut out = Vec::new();
            for k in 1..=*r {
                let mut w = RatMatrix::identity(p + q);
                for i in 0..k {
                    w = w.mul(&o_boost(*p, *q, i, i));
                }
                out.push((ones_vector(*r, k), w));
            }
            Ok(out)
        }
        _ => Err(Error::UnknownEmbedding(format!(
            "diagonal embedding not stocked for factor {}",
            g
        ))),
    }
}

fn factor_generators(g: &GroupDescriptor) -> Result<Vec<RatMatrix>> {
    match g.family() {
        Family::SL(m) => Ok(sl_generators(*m)),
        Family::GL(n) => {
            let mut gens = Vec::new();
            for k in 0..*n {
                let mut d = RatMatrix::identity(*n);
                d[(k, k)] = rat_int(2);
                gens.push(d);
            }
            if *n >= 2 {
                gens.push(o_rotation(*n, 0, 1));
            }
            Ok(gens)
        }
        Family::O(p, q) => Ok(o_generators(*p, *q)),
        _ => Err(Error::UnknownEmbedding(format!(
            "no generator recipe for factor {}",
            g
        ))),
    }
}

/// diag(G') < G' x G'.  The nu-image is the diagonal of the product
/// chamber in intrinsic coordinates.
pub fn diag_in_square(factor: &GroupDescriptor) -> Result<NamedEmbedding> {
    let ambient = GroupDescriptor::product(vec![factor.clone(), factor.clone()])?;
    let k = factor.intrinsic_dim();
    let rays = intrinsic_chamber_rays(factor)?;
    let mut gens = Vec::new();
    for g in factor_generators(factor)? {
        gens.push(RatMatrix::block_diagonal(&[g.clone(), g]));
    }
    let mut cone_gens = Vec::new();
    let mut ray_witnesses = Vec::new();
    for (ray, witness) in &rays {
        let mut v = ray.coords().to_vec();
        v.extend(ray.coords().iter().cloned());
        cone_gens.push(RationalVector::new(v).unwrap());
        ray_witnesses.push(RatMatrix::block_diagonal(&[witness.clone(), witness.clone()]));
    }
    let nu_cone = ConeUnion::new(
        2 * k,
        vec![ConvexCone::from_rays(cone_gens)],
        Provenance::Exact,
    )?;
    Ok(NamedEmbedding {
        ambient,
        subgroup: factor.clone(),
        name: "diagonal".into(),
        generators: gens,
        nu_cone,
        ray_witnesses,
    })
}

/// The diagonal torus of SL(2,R), catalogued as a copy of O(1,1); its
/// nu-image is the ray (1,-1) of the SL(2) chamber.
pub fn torus_in_sl2() -> Result<NamedEmbedding> {
    let mut d = RatMatrix::identity(2);
    d[(0, 0)] = rat_int(2);
    d[(1, 1)] = rat_frac(1, 2);
    Ok(NamedEmbedding {
        ambient: GroupDescriptor::sl(2),
        subgroup: GroupDescriptor::o(1, 1),
        name: "diagonal".into(),
        generators: vec![d.clone()],
        nu_cone: ray_cone(2, RationalVector::from_ints(&[1, -1])),
        ray_witnesses: vec![d],
    })
}

/// Maximal compact O(n) inside GL(n,R) or SL(n,R); nu-image exactly {0}.
pub fn maxcompact_in(ambient: GroupDescriptor) -> Result<NamedEmbedding> {
    let n = match ambient.family() {
        Family::GL(n) | Family::SL(n) => *n,
        _ => {
            return Err(Error::UnknownEmbedding(format!(
                "maximal-compact embedding stocked only for GL/SL, got {}",
                ambient
            )))
        }
    };
    let mut generators = Vec::new();
    for i in 0..n.saturating_sub(1) {
        generators.push(o_rotation(n, i, i + 1));
    }
    if generators.is_empty() {
        generators.push(RatMatrix::identity(n));
    }
    Ok(NamedEmbedding {
        ambient: ambient.clone(),
        subgroup: GroupDescriptor::o(n, 0),
        name: "maximal-compact".into(),
        generators,
        nu_cone: ConeUnion::origin(ambient.cartan_dim()),
        ray_witnesses: Vec::new(),
    })
}

/// GL(1,R) as the left factor of GL(1,R) x GL(1,R); the nu-image is the
/// full line y = 0 (the subspace example of the proper-pair relation on
/// the Abelian group R^2).
pub fn factor_left_gl1() -> Result<NamedEmbedding> {
    let gl1 = GroupDescriptor::gl(1);
    let ambient = GroupDescriptor::product(vec![gl1.clone(), gl1.clone()])?;
    let mut two = RatMatrix::identity(2);
    two[(0, 0)] = rat_int(2);
    let mut half = RatMatrix::identity(2);
    half[(0, 0)] = rat_frac(1, 2);
    let cone = ConeUnion::new(
        2,
        vec![ConvexCone::from_rays(vec![
            RationalVector::from_ints(&[1, 0]),
            RationalVector::from_ints(&[-1, 0]),
        ])],
        Provenance::Exact,
    )?;
    Ok(NamedEmbedding {
        ambient,
        subgroup: gl1,
        name: "factor-left".into(),
        generators: vec![two.clone()],
        nu_cone: cone,
        ray_witnesses: vec![half, two],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl_block_cone_small_cases() {
        // SL(2) in SL(3): single ray (1, 0, -1).
        let c = sl_block_cone(3, 2);
        assert_eq!(c.pieces.len(), 1);
        assert_eq!(c.pieces[0].generators.len(), 1);
        assert_eq!(
            c.pieces[0].generators[0],
            RationalVector::from_ints(&[1, 0, -1])
        );
        // SL(3) in SL(4): two pieces.
        let c = sl_block_cone(4, 3);
        assert_eq!(c.pieces.len(), 2);
    }

    #[test]
    fn embedding_generators_land_in_ambient() {
        let embeds = [
            o_in_o(2, 1).unwrap(),
            u_in_o(2).unwrap(),
            sp_in_o(1).unwrap(),
            sl_in_sl(3, 2).unwrap(),
            torus_in_sl2().unwrap(),
            maxcompact_in(GroupDescriptor::sl(2)).unwrap(),
            diag_in_square(&GroupDescriptor::sl(2)).unwrap(),
            factor_left_gl1().unwrap(),
        ];
        for e in &embeds {
            for g in &e.generators {
                let gf = g.to_matrix();
                let res = e.ambient.membership_residual(&gf).unwrap();
                assert!(res < 1e-9, "{}: residual {}", e.key(), res);
            }
        }
    }

    #[test]
    fn spin_embedding_lands_in_o88() {
        let e = spin_in_o().unwrap();
        for g in &e.generators {
            let res = e.ambient.membership_residual(&g.to_matrix()).unwrap();
            assert!(res < 1e-12, "residual {}", res);
        }
    }

    #[test]
    fn compact_subgroup_cone_is_origin() {
        let e = maxcompact_in(GroupDescriptor::gl(3)).unwrap();
        assert!(e.nu_cone.is_origin_only());
    }
}
