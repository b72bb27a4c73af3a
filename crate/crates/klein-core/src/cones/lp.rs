//! Exact rational linear programming, feasibility form.
//!
//! Phase-1 simplex over `BigRational` with Bland's rule, so the cone
//! predicates are decided exactly and termination is guaranteed.  Problem
//! sizes here are tiny (tens of variables), which keeps the exact
//! arithmetic cheap.

use num_traits::{One, Signed, Zero};

use crate::linalg::Rat;

/// Decides feasibility of `A x = b, x >= 0` and returns a feasible point
/// if one exists.  `a` is row-major, `m` rows by `n` cols.
pub fn feasible_point(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Tableau with artificial variables: columns 0..n original,
    // n..n+m artificial, last column the rhs.  Rows normalized to b >= 0.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for j in 0..n {
            row.push(if flip { -&a[i][j] } else { a[i][j].clone() });
        }
        for j in 0..m {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Objective: minimize sum of artificials.  Reduced-cost row starts as
    // minus the sum of constraint rows over the original columns.
    let mut obj = vec![Rat::zero(); width];
    for row in &t {
        for j in 0..width {
            obj[j] -= &row[j];
        }
    }
    for j in n..n + m {
        obj[j] = Rat::zero();
    }

    loop {
        // Bland: entering = lowest-index column with negative reduced cost.
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Ratio test, ties broken by lowest basis index (Bland).
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        // Phase-1 objective is bounded below by zero, so a pivot row exists.
        let leave = leave?;
        pivot(&mut t, &mut obj, leave, enter);
        basis[leave] = enter;
    }

    // Feasible iff the phase-1 optimum is zero, i.e. -obj[rhs] == 0.
    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
        // A basic artificial at value zero (degenerate) contributes nothing.
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rat>], obj: &mut [Rat], leave: usize, enter: usize) {
    let width = t[0].len();
    let p = t[leave][enter].clone();
    for x in t[leave].iter_mut() {
        *x /= &p;
    }
    for i in 0..t.len() {
        if i == leave || t[i][enter].is_zero() {
            continue;
        }
        let f = t[i][enter].clone();
        for j in 0..width {
            let sub = &f * &t[leave][j];
            t[i][j] -= sub;
        }
    }
    if !obj[enter].is_zero() {
        let f = obj[enter].clone();
        for j in 0..width {
            let sub = &f * &t[leave][j];
            obj[j] -= sub;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat_frac, rat_int};

    #[test]
    fn feasible_simple() {
        // x0 + x1 = 2, x0 - x1 = 0 -> x = (1, 1).
        let a = vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(-1)],
        ];
        let b = vec![rat_int(2), rat_int(0)];
        let x = feasible_point(&a, &b).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(1)]);
    }

    #[test]
    fn infeasible_by_sign() {
        // x0 = -1 with x0 >= 0 is infeasible.
        let a = vec![vec![rat_int(1)]];
        let b = vec![rat_int(-1)];
        assert!(feasible_point(&a, &b).is_none());
    }

    #[test]
    fn degenerate_system_feasible() {
        // Redundant rows must not confuse the pivot rule.
        let a = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ];
        let b = vec![rat_int(3), rat_int(6)];
        let x = feasible_point(&a, &b).unwrap();
        let lhs0 = &x[0] + &x[1] * rat_int(2);
        assert_eq!(lhs0, rat_int(3));
    }

    #[test]
    fn fractional_solution() {
        let a = vec![vec![rat_int(2), rat_int(0)]];
        let b = vec![rat_int(1)];
        let x = feasible_point(&a, &b).unwrap();
        assert_eq!(x[0], rat_frac(1, 2));
    }
}
