//! The 16-dimensional real spin representation behind the Spin(8,1)
//! catalog entry.
//!
//! Construction: a Jordan-Wigner family on (R^2)^{tensor 4} gives four
//! symmetric involutions a_k and four antisymmetric b_k (b_k^2 = -1), all
//! pairwise anticommuting.  With c = b1 b2 b3 b4 (symmetric, c^2 = 1,
//! commuting with the a_k and anticommuting with the b_k), the family
//! { a_1..a_4, b_1 c, .., b_4 c } consists of eight pairwise-anticommuting
//! symmetric involutions e_i with integer entries.  These generate a
//! Clifford algebra on R^16; the even elements e_i e_j span the compact
//! part and the e_i themselves the noncompact part of a copy of the
//! rank-one Lie algebra with 36 = 28 + 8 dimensions.
//!
//! The invariant bilinear form of the representation is the volume
//! element omega = e_1 ... e_8 (symmetric, trace zero, anticommuting with
//! every e_i).  In the Jordan-Wigner basis omega is the diagonal sign
//! matrix of bit parity; sorting even-parity coordinates first turns it
//! into diag(I_8, -I_8), so after that permutation the whole image lands
//! in the standard O(8,8) and all generator entries stay rational.

use num_traits::One;

use crate::linalg::{rat_frac, Rat, RatMatrix};

fn sigma_z() -> RatMatrix {
    RatMatrix::from_ints(&[&[1, 0], &[0, -1]])
}

fn sigma_x() -> RatMatrix {
    RatMatrix::from_ints(&[&[0, 1], &[1, 0]])
}

fn eps() -> RatMatrix {
    RatMatrix::from_ints(&[&[0, -1], &[1, 0]])
}

fn id2() -> RatMatrix {
    RatMatrix::identity(2)
}

/// Tensor chain with `head` copies of sigma_z, then `mid`, then identity.
fn jw_chain(head: usize, mid: RatMatrix) -> RatMatrix {
    let mut m = RatMatrix::identity(1);
    for _ in 0..head {
        m = m.kron(&sigma_z());
    }
    m = m.kron(&mid);
    for _ in 0..(3 - head) {
        m = m.kron(&id2());
    }
    m
}

/// The eight generators and the basis permutation into standard O(8,8).
pub struct SpinData {
    /// Symmetric anticommuting involutions in the permuted basis.
    pub e: Vec<RatMatrix>,
    /// Permutation applied (new index -> old index).
    pub perm: Vec<usize>,
}

pub fn spin_eight_one() -> SpinData {
    let a: Vec<RatMatrix> = (0..4).map(|k| jw_chain(k, sigma_x())).collect();
    let b: Vec<RatMatrix> = (0..4).map(|k| jw_chain(k, eps())).collect();
    let c = b[0].mul(&b[1]).mul(&b[2]).mul(&b[3]);

    let mut e: Vec<RatMatrix> = a.clone();
    for bk in &b {
        e.push(bk.mul(&c));
    }

    // Volume element; diagonal +-1 by construction of the chains.
    let mut omega = RatMatrix::identity(16);
    for ei in &e {
        omega = omega.mul(ei);
    }
    let mut perm: Vec<usize> = (0..16).collect();
    perm.sort_by_key(|&i| if omega[(i, i)] == Rat::one() { 0 } else { 1 });
    debug_assert_eq!(
        (0..16).filter(|&i| omega[(i, i)] == Rat::one()).count(),
        8
    );

    let permuted = e
        .iter()
        .map(|m| {
            let mut out = RatMatrix::zeros(16, 16);
            for r in 0..16 {
                for cidx in 0..16 {
                    out[(r, cidx)] = m[(perm[r], perm[cidx])].clone();
                }
            }
            out
        })
        .collect();
    SpinData { e: permuted, perm }
}

impl SpinData {
    /// Hyperbolic one-parameter generator exp(t e_i / 2) at the rational
    /// point cosh(t/2) = 5/4: eigenvalues 2 and 1/2 with multiplicity 8.
    pub fn boost(&self, i: usize) -> RatMatrix {
        let five_quarters = RatMatrix::identity(16).scale(&rat_frac(5, 4));
        five_quarters.add(&self.e[i].scale(&rat_frac(3, 4)))
    }

    /// Compact one-parameter generator exp(theta e_i e_j / 2) at the
    /// rational point cos(theta/2) = 3/5.
    pub fn rotation(&self, i: usize, j: usize) -> RatMatrix {
        let three_fifths = RatMatrix::identity(16).scale(&rat_frac(3, 5));
        three_fifths.add(&self.e[i].mul(&self.e[j]).scale(&rat_frac(4, 5)))
    }

    /// Lie algebra basis in the permuted realization: the 28 compact
    /// elements e_i e_j / 2 followed by the 8 noncompact e_i / 2.
    pub fn lie_algebra_basis(&self) -> Vec<RatMatrix> {
        let half = rat_frac(1, 2);
        let mut basis = Vec::with_capacity(36);
        for i in 0..8 {
            for j in (i + 1)..8 {
                basis.push(self.e[i].mul(&self.e[j]).scale(&half));
            }
        }
        for i in 0..8 {
            basis.push(self.e[i].scale(&half));
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn is_symmetric(m: &RatMatrix) -> bool {
        m == &m.transpose()
    }

    fn anticommute(x: &RatMatrix, y: &RatMatrix) -> bool {
        let mut s = x.mul(y);
        s = s.add(&y.mul(x));
        (0..16).all(|r| (0..16).all(|c| s[(r, c)].is_zero()))
    }

    #[test]
    fn generators_are_symmetric_anticommuting_involutions() {
        let spin = spin_eight_one();
        assert_eq!(spin.e.len(), 8);
        let id = RatMatrix::identity(16);
        for (i, ei) in spin.e.iter().enumerate() {
            assert!(is_symmetric(ei), "e_{} not symmetric", i);
            assert_eq!(ei.mul(ei), id, "e_{} not an involution", i);
            for ej in spin.e.iter().skip(i + 1) {
                assert!(anticommute(ei, ej));
            }
        }
    }

    #[test]
    fn volume_element_is_standard_form() {
        let spin = spin_eight_one();
        let mut omega = RatMatrix::identity(16);
        for ei in &spin.e {
            omega = omega.mul(ei);
        }
        // After the permutation the invariant form is diag(I_8, -I_8).
        for r in 0..16 {
            for c in 0..16 {
                let expect = if r != c {
                    Rat::zero()
                } else if r < 8 {
                    Rat::one()
                } else {
                    -Rat::one()
                };
                assert_eq!(omega[(r, c)], expect, "omega[{},{}]", r, c);
            }
        }
    }

    #[test]
    fn boost_has_eigenvalues_two_and_half() {
        let spin = spin_eight_one();
        let b = spin.boost(0);
        // (b - 2)(b - 1/2) = 0 since e_0 is an involution.
        let two = RatMatrix::identity(16).scale(&crate::linalg::rat_int(2));
        let half = RatMatrix::identity(16).scale(&rat_frac(1, 2));
        let prod = b.add(&two.scale(&crate::linalg::rat_int(-1)))
            .mul(&b.add(&half.scale(&crate::linalg::rat_int(-1))));
        assert!((0..16).all(|r| (0..16).all(|c| prod[(r, c)].is_zero())));
    }

    #[test]
    fn group_elements_preserve_the_form() {
        let spin = spin_eight_one();
        let j = crate::catalog::families::indefinite_form(8, 8, 1);
        for g in [spin.boost(0), spin.boost(3), spin.rotation(0, 1), spin.rotation(2, 5)] {
            let gf = g.to_matrix();
            let res = gf.transpose().mul(&j).unwrap().mul(&gf).unwrap().max_abs_diff(&j);
            assert!(res < 1e-12, "residual {}", res);
        }
    }
}
