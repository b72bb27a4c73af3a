//! Classical reductive matrix group families and their numerical
//! invariants.
//!
//! Every family is realized as a group of real matrices stable under
//! transpose, so one Cartan-projection pipeline (eigenvalues of `g^t g`)
//! serves all of them.  Unitary and quaternionic groups are stored as
//! real matrices of doubled/quadrupled size with interleaved coordinates;
//! the flat coordinates are then folded back to the group's own restricted
//! rank by the multiplicity data below.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rat_int, Matrix, Rat, RatMatrix};

/// A catalog group family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// GL(n, R)
    GL(usize),
    /// SL(n, R)
    SL(usize),
    /// O(p, q), the full orthogonal group of signature (p, q)
    O(usize, usize),
    /// U(p, q), realized as real matrices of size 2(p+q)
    U(usize, usize),
    /// Sp(p, q), realized as real matrices of size 4(p+q)
    Sp(usize, usize),
    /// Spin(p, q) in its real spin representation; only (8, 1) is stocked
    Spin(usize, usize),
    Product(Vec<GroupDescriptor>),
}

/// A catalog group: family plus the derived numerical invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    family: Family,
    ambient_size: usize,
    real_rank: usize,
    d_dim: usize,
}

impl std::fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.family {
            Family::GL(n) => write!(f, "GL({},R)", n),
            Family::SL(n) => write!(f, "SL({},R)", n),
            Family::O(p, q) => write!(f, "O({},{})", p, q),
            Family::U(p, q) => write!(f, "U({},{})", p, q),
            Family::Sp(p, q) => write!(f, "Sp({},{})", p, q),
            Family::Spin(p, q) => write!(f, "Spin({},{})", p, q),
            Family::Product(factors) => {
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{}", g)?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for GroupDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_group(&s).map_err(serde::de::Error::custom)
    }
}

impl GroupDescriptor {
    pub fn new(family: Family) -> Result<Self> {
        let (ambient_size, real_rank, d_dim) = match &family {
            Family::GL(n) => {
                if *n == 0 {
                    return Err(Error::UnsupportedGroup("GL(0,R)".into()));
                }
                (*n, *n, n * (n + 1) / 2)
            }
            Family::SL(n) => {
                if *n < 2 {
                    return Err(Error::UnsupportedGroup(format!("SL({},R)", n)));
                }
                (*n, n - 1, n * (n + 1) / 2 - 1)
            }
            Family::O(p, q) => {
                if p + q == 0 {
                    return Err(Error::UnsupportedGroup("O(0,0)".into()));
                }
                (p + q, *p.min(q), p * q)
            }
            Family::U(p, q) => {
                if p + q == 0 {
                    return Err(Error::UnsupportedGroup("U(0,0)".into()));
                }
                (2 * (p + q), *p.min(q), 2 * p * q)
            }
            Family::Sp(p, q) => {
                if p + q == 0 {
                    return Err(Error::UnsupportedGroup("Sp(0,0)".into()));
                }
                (4 * (p + q), *p.min(q), 4 * p * q)
            }
            Family::Spin(p, q) => {
                // Only the one exceptional entry needed by the q = 7 space
                // forms; its 16-dimensional real spin representation.
                if (*p, *q) != (8, 1) {
                    return Err(Error::UnsupportedGroup(format!(
                        "Spin({},{}) (only Spin(8,1) is stocked)",
                        p, q
                    )));
                }
                (16, 1, 8)
            }
            Family::Product(factors) => {
                if factors.is_empty() {
                    return Err(Error::UnsupportedGroup("empty product".into()));
                }
                (
                    factors.iter().map(|g| g.ambient_size).sum(),
                    factors.iter().map(|g| g.real_rank).sum(),
                    factors.iter().map(|g| g.d_dim).sum(),
                )
            }
        };
        Ok(Self {
            family,
            ambient_size,
            real_rank,
            d_dim,
        })
    }

    pub fn gl(n: usize) -> Self {
        Self::new(Family::GL(n)).unwrap()
    }
    pub fn sl(n: usize) -> Self {
        Self::new(Family::SL(n)).unwrap()
    }
    pub fn o(p: usize, q: usize) -> Self {
        Self::new(Family::O(p, q)).unwrap()
    }
    pub fn u(p: usize, q: usize) -> Self {
        Self::new(Family::U(p, q)).unwrap()
    }
    pub fn sp(p: usize, q: usize) -> Self {
        Self::new(Family::Sp(p, q)).unwrap()
    }
    pub fn spin81() -> Self {
        Self::new(Family::Spin(8, 1)).unwrap()
    }
    pub fn product(factors: Vec<GroupDescriptor>) -> Result<Self> {
        Self::new(Family::Product(factors))
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Size of the real matrix realization.
    pub fn ambient_size(&self) -> usize {
        self.ambient_size
    }

    /// dim of a maximal Abelian subspace of the p-part.
    pub fn real_rank(&self) -> usize {
        self.real_rank
    }

    /// dim of the p-part of the Cartan decomposition.
    pub fn d_dim(&self) -> usize {
        self.d_dim
    }

    /// Length of the Cartan vector this group's projection produces.
    /// GL(n) and SL(n) keep all n log-eigenvalue coordinates (SL carries
    /// an implicit zero-sum); the other families use their restricted
    /// rank.  Products concatenate the factors' intrinsic coordinates.
    pub fn cartan_dim(&self) -> usize {
        match &self.family {
            Family::GL(n) | Family::SL(n) => *n,
            Family::O(p, q) | Family::U(p, q) | Family::Sp(p, q) | Family::Spin(p, q) => {
                *p.min(q)
            }
            Family::Product(factors) => factors.iter().map(|g| g.intrinsic_dim()).sum(),
        }
    }

    /// Coordinate count this group contributes inside a product: the
    /// restricted rank (SL(n) drops its redundant last coordinate).
    pub fn intrinsic_dim(&self) -> usize {
        match &self.family {
            Family::SL(n) => *n - 1,
            _ => self.cartan_dim(),
        }
    }

    /// Eigenvalue multiplicity of the real realization over the group's
    /// own flat: 1 for real families, 2 complex, 4 quaternionic, 8 for
    /// the 16-dimensional spin representation.
    pub fn fold_multiplicity(&self) -> usize {
        match &self.family {
            Family::GL(_) | Family::SL(_) | Family::O(..) => 1,
            Family::U(..) => 2,
            Family::Sp(..) => 4,
            Family::Spin(..) => 8,
            Family::Product(_) => 1, // products fold per factor
        }
    }

    /// Folds the GL-level exponent vector (length `ambient_size`, sorted
    /// nonincreasing) down to this group's Cartan coordinates.
    pub fn fold_exponents(&self, exps: &[f64]) -> Result<Vec<f64>> {
        if exps.len() != self.ambient_size {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_size,
                got: exps.len(),
            });
        }
        match &self.family {
            Family::GL(_) | Family::SL(_) => Ok(exps.to_vec()),
            Family::O(..) | Family::U(..) | Family::Sp(..) | Family::Spin(..) => {
                let r = self.cartan_dim();
                let m = self.fold_multiplicity();
                // The spectrum of the realization repeats each restricted
                // value m times; averaging each run absorbs roundoff.
                Ok((0..r)
                    .map(|i| exps[i * m..(i + 1) * m].iter().sum::<f64>() / m as f64)
                    .collect())
            }
            Family::Product(_) => Err(Error::Contract(
                "products fold per diagonal block, not via fold_exponents".into(),
            )),
        }
    }

    /// Dominant-chamber canonicalization of folded coordinates.
    pub fn canonicalize_chamber(&self, coords: &[f64]) -> Vec<f64> {
        match &self.family {
            Family::GL(_) | Family::SL(_) => {
                let mut v = coords.to_vec();
                v.sort_by(|a, b| b.partial_cmp(a).unwrap());
                v
            }
            Family::O(..) | Family::U(..) | Family::Sp(..) | Family::Spin(..) => {
                let mut v: Vec<f64> = coords
                    .iter()
                    .map(|&x| if x.abs() < 1e-12 { 0.0 } else { x.abs() })
                    .collect();
                v.sort_by(|a, b| b.partial_cmp(a).unwrap());
                v
            }
            Family::Product(factors) => {
                let mut out = Vec::with_capacity(self.cartan_dim());
                let mut off = 0;
                for f in factors {
                    let k = f.intrinsic_dim();
                    let full = f.intrinsic_to_full(&coords[off..off + k]);
                    let canon = f.canonicalize_chamber(&full);
                    out.extend(f.full_to_intrinsic(&canon));
                    off += k;
                }
                out
            }
        }
    }

    /// Expands intrinsic coordinates to the standalone convention
    /// (SL regains its zero-sum last coordinate).
    pub fn intrinsic_to_full(&self, v: &[f64]) -> Vec<f64> {
        match &self.family {
            Family::SL(_) => {
                let mut out = v.to_vec();
                out.push(-v.iter().sum::<f64>());
                out
            }
            _ => v.to_vec(),
        }
    }

    pub fn full_to_intrinsic(&self, v: &[f64]) -> Vec<f64> {
        match &self.family {
            Family::SL(n) => v[..n - 1].to_vec(),
            _ => v.to_vec(),
        }
    }

    /// The opposition involution on chamber-canonical coordinates:
    /// reverse-and-negate for GL/SL, identity for the families whose
    /// chamber is self-opposed.
    pub fn chamber_involution(&self, coords: &[f64]) -> Vec<f64> {
        match &self.family {
            Family::GL(_) | Family::SL(_) => {
                let mut v: Vec<f64> = coords.iter().rev().map(|x| -x).collect();
                v.sort_by(|a, b| b.partial_cmp(a).unwrap());
                v
            }
            Family::O(..) | Family::U(..) | Family::Sp(..) | Family::Spin(..) => coords.to_vec(),
            Family::Product(factors) => {
                let mut out = Vec::with_capacity(coords.len());
                let mut off = 0;
                for f in factors {
                    let k = f.intrinsic_dim();
                    let full = f.intrinsic_to_full(&coords[off..off + k]);
                    let inv = f.chamber_involution(&full);
                    out.extend(f.full_to_intrinsic(&inv));
                    off += k;
                }
                out
            }
        }
    }

    /// Defining-equation residual of `g` for this group's realization.
    /// Zero (up to float noise) exactly on group members.
    pub fn membership_residual(&self, g: &Matrix) -> Result<f64> {
        if g.rows() != self.ambient_size || g.cols() != self.ambient_size {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_size,
                got: g.rows(),
            });
        }
        let res = match &self.family {
            Family::GL(_) => 0.0,
            Family::SL(_) => (g.det()? - 1.0).abs(),
            Family::O(p, q) => form_residual(g, &indefinite_form(*p, *q, 1)),
            Family::U(p, q) => {
                let s = indefinite_form(*p, *q, 2);
                let jc = complex_structure(p + q);
                form_residual(g, &s) + commutator_residual(g, &jc)
            }
            Family::Sp(p, q) => {
                let s = indefinite_form(*p, *q, 4);
                let ri = quaternion_right_i(p + q);
                let rj = quaternion_right_j(p + q);
                form_residual(g, &s) + commutator_residual(g, &ri) + commutator_residual(g, &rj)
            }
            // Membership in the spin group itself is not cut out by
            // bilinear equations; we check the invariant (8,8) form the
            // representation preserves.
            Family::Spin(..) => form_residual(g, &indefinite_form(8, 8, 1)),
            Family::Product(factors) => {
                let sizes: Vec<usize> = factors.iter().map(|f| f.ambient_size).collect();
                let mut res = g.off_block_residual(&sizes);
                let mut off = 0;
                for f in factors {
                    let block = g.diagonal_block(off, f.ambient_size)?;
                    res = res.max(f.membership_residual(&block)?);
                    off += f.ambient_size;
                }
                res
            }
        };
        Ok(res)
    }

    /// Factor sizes when this is a product.
    pub fn product_factors(&self) -> Option<&[GroupDescriptor]> {
        match &self.family {
            Family::Product(f) => Some(f),
            _ => None,
        }
    }
}

/// Signature form of the real realization: identity on the first
/// `p*blow` coordinates, minus identity on the last `q*blow`.
pub fn indefinite_form(p: usize, q: usize, blow: usize) -> Matrix {
    let mut entries = vec![1.0; p * blow];
    entries.extend(vec![-1.0; q * blow]);
    Matrix::diagonal(&entries)
}

/// max |g^t S g - S|.
fn form_residual(g: &Matrix, s: &Matrix) -> f64 {
    g.transpose()
        .mul(s)
        .unwrap()
        .mul(g)
        .unwrap()
        .max_abs_diff(s)
}

fn commutator_residual(g: &Matrix, j: &Matrix) -> f64 {
    g.mul(j).unwrap().max_abs_diff(&j.mul(g).unwrap())
}

/// Block-diagonal complex structure for m interleaved complex coordinates.
pub fn complex_structure(m: usize) -> Matrix {
    let e = Matrix::from_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
    Matrix::block_diagonal(&vec![e; m])
}

/// Right multiplication by the quaternion i on m interleaved quaternionic
/// coordinates (basis order 1, i, j, k per coordinate).
pub fn quaternion_right_i(m: usize) -> Matrix {
    let b = Matrix::from_rows(&[
        vec![0.0, -1.0, 0.0, 0.0],
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 1.0],
        vec![0.0, 0.0, -1.0, 0.0],
    ])
    .unwrap();
    Matrix::block_diagonal(&vec![b; m])
}

/// Right multiplication by the quaternion j.
pub fn quaternion_right_j(m: usize) -> Matrix {
    let b = Matrix::from_rows(&[
        vec![0.0, 0.0, -1.0, 0.0],
        vec![0.0, 0.0, 0.0, -1.0],
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0],
    ])
    .unwrap();
    Matrix::block_diagonal(&vec![b; m])
}

/// Interleaved realification of a complex matrix given as (re, im):
/// entry a+bi becomes the 2x2 block [[a, -b], [b, a]].
pub fn realify_complex(re: &RatMatrix, im: &RatMatrix) -> RatMatrix {
    let n = re.rows();
    let mut out = RatMatrix::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let a = re[(r, c)].clone();
            let b = im[(r, c)].clone();
            out[(2 * r, 2 * c)] = a.clone();
            out[(2 * r, 2 * c + 1)] = -b.clone();
            out[(2 * r + 1, 2 * c)] = b;
            out[(2 * r + 1, 2 * c + 1)] = a;
        }
    }
    out
}

/// Interleaved realification of a quaternionic matrix with components
/// (a, b, c, d) = a + bi + cj + dk, each entry becoming the 4x4 left
/// multiplication block.
pub fn realify_quaternion(
    a: &RatMatrix,
    b: &RatMatrix,
    c: &RatMatrix,
    d: &RatMatrix,
) -> RatMatrix {
    let n = a.rows();
    let mut out = RatMatrix::zeros(4 * n, 4 * n);
    for r in 0..n {
        for s in 0..n {
            let (pa, pb, pc, pd) = (
                a[(r, s)].clone(),
                b[(r, s)].clone(),
                c[(r, s)].clone(),
                d[(r, s)].clone(),
            );
            let block: [[Rat; 4]; 4] = [
                [pa.clone(), -pb.clone(), -pc.clone(), -pd.clone()],
                [pb.clone(), pa.clone(), -pd.clone(), pc.clone()],
                [pc.clone(), pd.clone(), pa.clone(), -pb.clone()],
                [pd, -pc, pb, pa],
            ];
            for (i, row) in block.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    out[(4 * r + i, 4 * s + j)] = x.clone();
                }
            }
        }
    }
    out
}

/// Parses group syntax: `FAMILY(n)` or `FAMILY(p,q)`, products joined by
/// `x` or `*`.  Whitespace-insensitive; a trailing `,R` in GL/SL argument
/// lists is accepted and ignored ("SL(2,R)").
pub fn parse_group(input: &str) -> Result<GroupDescriptor> {
    let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::UnsupportedGroup("empty group expression".into()));
    }
    // Split on product separators at top level (no nested parens in this
    // grammar, so a plain split is enough; 'x' only separates after ')').
    let mut parts: Vec<String> = Vec::new();
    let mut current = String::new();
    let mut prev_close = false;
    for ch in cleaned.chars() {
        if (ch == 'x' || ch == 'X' || ch == '*') && prev_close {
            parts.push(std::mem::take(&mut current));
            prev_close = false;
            continue;
        }
        prev_close = ch == ')';
        current.push(ch);
    }
    parts.push(current);

    let mut factors = Vec::new();
    for part in &parts {
        factors.push(parse_atom(part)?);
    }
    if factors.len() == 1 {
        Ok(factors.pop().unwrap())
    } else {
        GroupDescriptor::product(factors)
    }
}

fn parse_atom(s: &str) -> Result<GroupDescriptor> {
    let open = s
        .find('(')
        .ok_or_else(|| Error::UnsupportedGroup(format!("{:?}: missing parameter list", s)))?;
    if !s.ends_with(')') {
        return Err(Error::UnsupportedGroup(format!(
            "{:?}: missing closing parenthesis",
            s
        )));
    }
    let name = &s[..open];
    let args: Vec<&str> = s[open + 1..s.len() - 1]
        .split(',')
        .filter(|a| !a.is_empty() && *a != "R" && *a != "\u{211d}")
        .collect();
    let parse_num = |a: &str| -> Result<usize> {
        a.parse::<usize>()
            .map_err(|_| Error::UnsupportedGroup(format!("{:?}: bad parameter {:?}", s, a)))
    };
    let family = match (name, args.len()) {
        ("GL", 1) => Family::GL(parse_num(args[0])?),
        ("SL", 1) => Family::SL(parse_num(args[0])?),
        ("O" | "SO", 2) => Family::O(parse_num(args[0])?, parse_num(args[1])?),
        ("O" | "SO", 1) => Family::O(parse_num(args[0])?, 0),
        ("U" | "SU", 2) => Family::U(parse_num(args[0])?, parse_num(args[1])?),
        ("Sp", 2) => Family::Sp(parse_num(args[0])?, parse_num(args[1])?),
        ("Spin", 2) => Family::Spin(parse_num(args[0])?, parse_num(args[1])?),
        _ => {
            return Err(Error::UnsupportedGroup(format!(
                "{:?}: unknown family {:?} (supported: GL, SL, O, U, Sp, Spin, products with x)",
                s, name
            )))
        }
    };
    GroupDescriptor::new(family)
}

#[allow(dead_code)]
fn unused() -> Rat {
    rat_int(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_formulas() {
        assert_eq!(GroupDescriptor::gl(3).real_rank(), 3);
        assert_eq!(GroupDescriptor::gl(3).d_dim(), 6); // (n+1 choose 2)
        assert_eq!(GroupDescriptor::o(3, 2).real_rank(), 2);
        assert_eq!(GroupDescriptor::o(3, 2).d_dim(), 6);
        assert_eq!(GroupDescriptor::sp(1, 1).d_dim(), 4);
        assert_eq!(GroupDescriptor::spin81().d_dim(), 8);
        assert_eq!(GroupDescriptor::u(2, 1).d_dim(), 4);
        let prod = GroupDescriptor::product(vec![
            GroupDescriptor::sl(2),
            GroupDescriptor::sl(2),
        ])
        .unwrap();
        assert_eq!(prod.real_rank(), 2);
        assert_eq!(prod.cartan_dim(), 2);
        assert_eq!(prod.d_dim(), 4);
    }

    #[test]
    fn rank_bounded_by_d() {
        let groups = [
            GroupDescriptor::gl(4),
            GroupDescriptor::sl(3),
            GroupDescriptor::o(4, 2),
            GroupDescriptor::u(2, 1),
            GroupDescriptor::sp(2, 1),
            GroupDescriptor::spin81(),
        ];
        for g in groups {
            assert!(g.real_rank() <= g.d_dim(), "{}", g);
        }
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["GL(3,R)", "SL(2,R)", "O(4,2)", "U(2,1)", "Sp(1,1)", "Spin(8,1)"] {
            let g = parse_group(s).unwrap();
            assert_eq!(g.to_string(), s);
        }
        let prod = parse_group("SL(2,R) x SL(2,R)").unwrap();
        assert_eq!(prod.to_string(), "SL(2,R) x SL(2,R)");
        assert_eq!(parse_group("sl(2)").is_err(), true);
        assert!(parse_group("O( 3 , 2 )").is_ok());
        assert_eq!(parse_group("SO(3,2)").unwrap(), GroupDescriptor::o(3, 2));
    }

    #[test]
    fn spin_only_eight_one() {
        assert!(GroupDescriptor::new(Family::Spin(7, 1)).is_err());
    }

    #[test]
    fn membership_residuals() {
        // A hyperbolic boost is in O(1,1).
        let boost =
            Matrix::from_rows(&[vec![1.25, 0.75], vec![0.75, 1.25]]).unwrap();
        let o11 = GroupDescriptor::o(1, 1);
        assert!(o11.membership_residual(&boost).unwrap() < 1e-15);
        // A rotation is not.
        let rot = Matrix::from_rows(&[vec![0.6, -0.8], vec![0.8, 0.6]]).unwrap();
        assert!(o11.membership_residual(&rot).unwrap() > 0.1);
    }

    #[test]
    fn realified_unitary_satisfies_equations() {
        // diag(3/5 + 4/5 i, 1) in U(1,1).
        let re = RatMatrix::from_ints(&[&[0, 0], &[0, 1]]);
        let mut re = re;
        re[(0, 0)] = crate::linalg::rat_frac(3, 5);
        let mut im = RatMatrix::zeros(2, 2);
        im[(0, 0)] = crate::linalg::rat_frac(4, 5);
        let g = realify_complex(&re, &im).to_matrix();
        let u11 = GroupDescriptor::u(1, 1);
        assert!(u11.membership_residual(&g).unwrap() < 1e-15);
    }

    #[test]
    fn realified_quaternion_is_group_homomorphism() {
        // Left multiplication realification must respect products.
        let q1 = (
            RatMatrix::from_ints(&[&[1]]),
            RatMatrix::from_ints(&[&[2]]),
            RatMatrix::from_ints(&[&[3]]),
            RatMatrix::from_ints(&[&[4]]),
        );
        let q2 = (
            RatMatrix::from_ints(&[&[5]]),
            RatMatrix::from_ints(&[&[-1]]),
            RatMatrix::from_ints(&[&[2]]),
            RatMatrix::from_ints(&[&[0]]),
        );
        let l1 = realify_quaternion(&q1.0, &q1.1, &q1.2, &q1.3);
        let l2 = realify_quaternion(&q2.0, &q2.1, &q2.2, &q2.3);
        // (1+2i+3j+4k)(5-i+2j) computed by hand:
        // scalar: 5 - 2*(-1)... do it via the matrix product instead and
        // check the first column encodes the product quaternion.
        let prod = l1.mul(&l2);
        let first_col: Vec<Rat> = (0..4).map(|r| prod[(r, 0)].clone()).collect();
        // q1*q2 by hand: (5 + 2 - 6 - 0) + (10-1+8-... ) -- verify through
        // the defining identity L_{q1 q2} = L_q1 L_q2 applied to 1 instead:
        // column 0 of L_q is q itself, so first_col must be q1*q2.
        // Compute q1*q2 independently with the multiplication table.
        let (a1, b1, c1, d1) = (1.0, 2.0, 3.0, 4.0);
        let (a2, b2, c2, d2) = (5.0, -1.0, 2.0, 0.0);
        let expect = [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ];
        for (got, want) in first_col.iter().zip(expect) {
            assert_eq!(crate::linalg::rat_to_f64(got), want);
        }
    }
}
