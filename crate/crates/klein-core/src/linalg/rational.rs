//! Exact rational vectors and matrices.
//!
//! The cone predicates are decided over exact arithmetic, so cone
//! generators, catalog embedding matrices and LP tableaux all live here.
//! Floating data enters through a continued-fraction snap with a bounded
//! denominator; the snap error is reported back to the caller.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Out of f64 range only for astronomically large intermediates.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Canonical "p/q" rendering (plain integer when q = 1).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_string(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Contract(format!("bad rational literal {:?}", s)))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d.trim())?;
            if den.is_zero() {
                return Err(Error::Contract(format!("zero denominator in {:?}", s)));
            }
            Ok(Rat::new(parse_int(n.trim())?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Best rational approximation to `x` with denominator at most `max_den`,
/// by continued fractions.  Returns the value and the absolute snap error.
pub fn rationalize(x: f64, max_den: u64) -> (Rat, f64) {
    assert!(x.is_finite());
    let negative = x < 0.0;
    let mut x_abs = x.abs();
    // Continued fraction expansion with convergent tracking.
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let bound = BigInt::from(max_den);
    for _ in 0..64 {
        let a = x_abs.floor();
        if a > 1e18 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > bound {
            break;
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let frac = x_abs - a;
        if frac < 1e-18 {
            break;
        }
        x_abs = 1.0 / frac;
    }
    let mut r = Rat::new(p1, q1);
    if negative {
        r = -r;
    }
    let err = (rat_to_f64(&r) - x).abs();
    (r, err)
}

/// Outcome of snapping a float vector to exact rationals.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SnapReport {
    pub max_denominator: u64,
    pub max_error: f64,
}

pub const SNAP_DENOMINATOR_BOUND: u64 = 1_000_000;

/// Exact vector of arbitrary-precision rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalVector {
    coords: Vec<Rat>,
}

impl std::fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rat_to_string(c))?;
        }
        write!(f, ")")
    }
}

impl RationalVector {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Contract("zero-dimensional vector".into()));
        }
        Ok(Self { coords })
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self {
            coords: v.iter().map(|&x| rat_int(x)).collect(),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coords: vec![Rat::zero(); dim],
        }
    }

    /// Snap a float vector to rationals with the default denominator bound.
    pub fn from_floats(v: &[f64], max_den: u64) -> (Self, SnapReport) {
        let mut max_error = 0.0f64;
        let coords = v
            .iter()
            .map(|&x| {
                let (r, e) = rationalize(x, max_den);
                max_error = max_error.max(e);
                r
            })
            .collect();
        (
            Self { coords },
            SnapReport {
                max_denominator: max_den,
                max_error,
            },
        )
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn dot(&self, other: &Self) -> Result<Rat> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, x| acc + x))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(rat_to_f64).collect()
    }

    /// Divides out the gcd of numerators over lcm of denominators, keeping
    /// direction; canonical form for ray comparison and serialization.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in &self.coords {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for i in &ints {
            gcd = num_integer::gcd(gcd, i.abs());
        }
        Self {
            coords: ints.iter().map(|i| Rat::from_integer(i / &gcd)).collect(),
        }
    }

    /// Lexicographic order; the canonical generator ordering for cone files.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.cmp(b) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.dim().cmp(&other.dim())
    }
}

/// Dense rational matrix; used for exact catalog data and test oracles.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", rat_to_string(&self[(r, c)]))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = rat_int(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self[(r, k)].is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = &self[(r, k)] * &other[(k, c)];
                    out[(r, c)] += add;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rat) -> RatMatrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= s;
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        out
    }

    pub fn block_diagonal(blocks: &[RatMatrix]) -> RatMatrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = RatMatrix::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(off + r, off + c)] = b[(r, c)].clone();
                }
            }
            off += b.rows;
        }
        out
    }

    /// Kronecker (tensor) product.
    pub fn kron(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                if self[(r1, c1)].is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out[(r1 * other.rows + r2, c1 * other.cols + c2)] =
                            &self[(r1, c1)] * &other[(r2, c2)];
                    }
                }
            }
        }
        out
    }

    pub fn to_matrix(&self) -> super::matrix::Matrix {
        let data: Vec<f64> = self.data.iter().map(rat_to_f64).collect();
        super::matrix::Matrix::new(self.rows, self.cols, data).expect("finite rational matrix")
    }

    pub fn row_vec(&self, r: usize) -> RationalVector {
        RationalVector::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec()).unwrap()
    }
}

/// Row-reduces in place; returns the rank.  Rows are `Vec<Rat>` of equal
/// length.  Exact Gauss-Jordan, the workhorse behind subspace predicates
/// and the Lie-algebra dimension oracles.
pub fn row_reduce(rows: &mut Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let p = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x /= &p;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..ncols {
                    let sub = &f * &rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rank
}

pub fn rank(rows: &[RationalVector]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    row_reduce(&mut m)
}

/// Basis of the nullspace of the matrix whose rows are `rows`.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let rank = row_reduce(&mut m);
    // Locate pivot columns.
    let mut pivots = Vec::with_capacity(rank);
    let mut col = 0;
    for row in m.iter() {
        while col < ncols && row[col].is_zero() {
            col += 1;
        }
        if col < ncols {
            pivots.push(col);
            col += 1;
        }
    }
    let is_pivot = |c: usize| pivots.binary_search(&c).is_ok();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -m[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continued_fraction_snap_hits_simple_fractions() {
        let (r, err) = rationalize(0.5, SNAP_DENOMINATOR_BOUND);
        assert_eq!(r, rat_frac(1, 2));
        assert_eq!(err, 0.0);
        let (r, _) = rationalize(1.0 / 3.0, SNAP_DENOMINATOR_BOUND);
        assert_eq!(r, rat_frac(1, 3));
        let (r, err) = rationalize(-2.75, 100);
        assert_eq!(r, rat_frac(-11, 4));
        assert_eq!(err, 0.0);
    }

    #[test]
    fn snap_respects_denominator_bound() {
        let (r, err) = rationalize(std::f64::consts::PI, 1000);
        assert!(r.denom() <= &BigInt::from(1000));
        assert!(err < 1e-6); // 355/113 territory
    }

    #[test]
    fn rational_string_roundtrip() {
        for s in ["3/4", "-7", "22/7", "0"] {
            let r = rat_from_string(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
    }

    #[test]
    fn primitive_normalizes_rays() {
        let v = RationalVector::new(vec![rat_frac(1, 2), rat_frac(3, 2)]).unwrap();
        assert_eq!(v.primitive(), RationalVector::from_ints(&[1, 3]));
    }

    #[test]
    fn nullspace_of_sum_constraint() {
        // x + y + z = 0 has a 2-dimensional solution space.
        let rows = vec![vec![rat_int(1), rat_int(1), rat_int(1)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s = v.iter().fold(Rat::zero(), |a, b| a + b);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn rank_detects_dependence() {
        let rows = vec![
            RationalVector::from_ints(&[1, 2, 3]),
            RationalVector::from_ints(&[2, 4, 6]),
            RationalVector::from_ints(&[0, 1, 0]),
        ];
        assert_eq!(rank(&rows), 2);
    }
}
