//! Exact linear subspaces of R^n and the discontinuous dual on them.
//!
//! Subspaces are the shapes where the proper-pair relation is classical:
//! two subspaces pair properly iff they intersect trivially, and the dual
//! `H -> { L : L proper with H }` determines H within a finite family.

use crate::error::Result;
use crate::linalg::{rank, rat_int, Rat, RationalVector};

use super::{cones_proper, ConeUnion, ConvexCone, Provenance};

/// Linear subspace given by an exact spanning set (possibly empty = {0}).
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<RationalVector>,
}

impl Subspace {
    pub fn new(ambient_dim: usize, spanning: Vec<RationalVector>) -> Self {
        // Reduce the spanning set to a basis via row reduction.
        let mut rows: Vec<Vec<Rat>> = spanning.iter().map(|v| v.coords().to_vec()).collect();
        crate::linalg::row_reduce(&mut rows);
        let basis = rows
            .into_iter()
            .map(|r| RationalVector::new(r).unwrap().primitive())
            .collect();
        Self { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![0i64; ambient_dim];
                v[i] = 1;
                RationalVector::from_ints(&v)
            })
            .collect();
        Self { ambient_dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical key: reduced row echelon basis rendered as strings.
    fn canonical_key(&self) -> String {
        let mut rows: Vec<Vec<Rat>> = self.basis.iter().map(|v| v.coords().to_vec()).collect();
        crate::linalg::row_reduce(&mut rows);
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(crate::linalg::rat_to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// The subspace as a cone union: one piece generated by +-basis.
    pub fn to_cone(&self) -> ConeUnion {
        if self.basis.is_empty() {
            return ConeUnion::origin(self.ambient_dim);
        }
        let mut gens = Vec::with_capacity(2 * self.basis.len());
        for b in &self.basis {
            gens.push(b.clone());
            gens.push(b.neg());
        }
        ConeUnion::new(
            self.ambient_dim,
            vec![ConvexCone::from_rays(gens)],
            Provenance::Exact,
        )
        .unwrap()
    }

    /// Exact trivial-intersection test via rank counting.
    pub fn intersects_trivially(&self, other: &Subspace) -> bool {
        let mut all: Vec<RationalVector> = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        rank(&all) == self.dim() + other.dim()
    }
}

/// Filters `candidates` to those pairing properly with `h`, decided by
/// the exact cone engine on the +-generator cones.
pub fn subspace_discontinuous_dual(
    h: &Subspace,
    candidates: &[Subspace],
) -> Result<Vec<usize>> {
    let h_cone = h.to_cone();
    let mut out = Vec::new();
    for (i, cand) in candidates.iter().enumerate() {
        if cones_proper(&cand.to_cone(), &h_cone)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// All distinct subspaces of R^dim spanned by vectors with entries in
/// {-1, 0, 1}, from {0} up to the full space.
pub fn sign_vector_family(dim: usize) -> Vec<Subspace> {
    assert!(dim <= 3, "sign-vector family enumerated only up to R^3");
    // Directions up to sign: first nonzero entry positive.
    let mut dirs: Vec<RationalVector> = Vec::new();
    let mut v = vec![-1i64; dim];
    loop {
        if v.iter().any(|&x| x != 0) {
            let first = v.iter().find(|&&x| x != 0).unwrap();
            if *first > 0 {
                dirs.push(RationalVector::from_ints(&v));
            }
        }
        // Odometer over {-1,0,1}^dim.
        let mut i = 0;
        loop {
            if i == dim {
                break;
            }
            if v[i] < 1 {
                v[i] += 1;
                break;
            }
            v[i] = -1;
            i += 1;
        }
        if i == dim {
            break;
        }
    }

    let mut seen = std::collections::BTreeMap::new();
    for mask in 0u32..(1u32 << dirs.len()) {
        let spanning: Vec<RationalVector> = (0..dirs.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| dirs[i].clone())
            .collect();
        let sub = Subspace::new(dim, spanning);
        seen.entry(sub.canonical_key()).or_insert(sub);
    }
    let mut family: Vec<Subspace> = seen.into_values().collect();
    family.sort_by_key(|s| s.dim());
    family
}

#[allow(dead_code)]
fn unused_rat_int_guard() -> Rat {
    rat_int(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        // R^2: {0}, 4 lines, R^2.
        assert_eq!(sign_vector_family(2).len(), 6);
        // R^3 contains the 13 sign lines.
        let fam = sign_vector_family(3);
        assert_eq!(fam.iter().filter(|s| s.dim() == 1).count(), 13);
        assert_eq!(fam.iter().filter(|s| s.dim() == 0).count(), 1);
        assert_eq!(fam.iter().filter(|s| s.dim() == 3).count(), 1);
    }

    #[test]
    fn dual_of_x_axis_in_r2() {
        let fam = sign_vector_family(2);
        let x_axis = Subspace::new(2, vec![RationalVector::from_ints(&[1, 0])]);
        let dual = subspace_discontinuous_dual(&x_axis, &fam).unwrap();
        // Every line except the x-axis itself, plus {0}; not R^2.
        let members: Vec<&Subspace> = dual.iter().map(|&i| &fam[i]).collect();
        assert_eq!(members.iter().filter(|s| s.dim() == 0).count(), 1);
        assert_eq!(members.iter().filter(|s| s.dim() == 1).count(), 3);
        assert_eq!(members.iter().filter(|s| s.dim() == 2).count(), 0);
        assert!(!members.iter().any(|s| **s == x_axis));
    }

    #[test]
    fn dual_of_zero_is_everything() {
        let fam = sign_vector_family(2);
        let zero = Subspace::zero(2);
        let dual = subspace_discontinuous_dual(&zero, &fam).unwrap();
        assert_eq!(dual.len(), fam.len());
    }

    #[test]
    fn dual_of_full_space_is_zero_only() {
        let fam = sign_vector_family(2);
        let full = Subspace::full(2);
        let dual = subspace_discontinuous_dual(&full, &fam).unwrap();
        let members: Vec<&Subspace> = dual.iter().map(|&i| &fam[i]).collect();
        assert_eq!(members.len(), 1);
        assert_eq!(members[0].dim(), 0);
    }

    // Independent oracle: rank-based trivial intersection agrees with the
    // LP path.
    #[test]
    fn lp_agrees_with_rank_oracle() {
        let fam = sign_vector_family(2);
        for a in &fam {
            for b in &fam {
                let via_lp = cones_proper(&a.to_cone(), &b.to_cone()).unwrap();
                assert_eq!(via_lp, a.intersects_trivially(b));
            }
        }
    }
}
