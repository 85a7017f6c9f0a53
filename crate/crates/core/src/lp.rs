//! Exact linear programming over rationals: dense-tableau primal
//! simplex with Bland's rule, for packing programs with nonnegative
//! right-hand sides. Returns primal and dual solutions; optimality is
//! certified inside the solver by complementary values (value = b.y,
//! A^T y >= c, y >= 0), which exact arithmetic makes a hard check.

use crate::combin::Rational;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LpError {
    #[error("right-hand side must be nonnegative (row {row})")]
    NegativeRhs { row: usize },
    #[error("objective is unbounded above")]
    Unbounded,
    #[error("row {row} references variable {var} outside 0..{nvars}")]
    BadIndex { row: usize, var: usize, nvars: usize },
}

/// Maximize c.x subject to A x <= b, x >= 0. Rows are sparse
/// (variable, coefficient) lists; b must be entrywise nonnegative so
/// the slack basis starts feasible.
pub fn maximize(
    costs: &[Rational],
    rows: &[Vec<(usize, Rational)>],
    rhs: &[Rational],
) -> Result<LpSolution, LpError> {
    let n = costs.len();
    let m = rows.len();
    assert_eq!(m, rhs.len(), "one rhs entry per row");
    for (i, b) in rhs.iter().enumerate() {
        if b.is_negative() {
            return Err(LpError::NegativeRhs { row: i });
        }
    }
    for (i, row) in rows.iter().enumerate() {
        if let Some(&(v, _)) = row.iter().find(|&&(v, _)| v >= n) {
            return Err(LpError::BadIndex { row: i, var: v, nvars: n });
        }
    }

    // tableau: m rows x (n + m + 1) columns, slacks then rhs;
    // z-row holds reduced costs, starting at -c
    let width = n + m + 1;
    let mut tab: Vec<Vec<Rational>> = vec![vec![Rational::zero(); width]; m + 1];
    for (i, row) in rows.iter().enumerate() {
        for &(v, ref coef) in row {
            tab[i][v] = &tab[i][v] + coef;
        }
        tab[i][n + i] = Rational::one();
        tab[i][n + m] = rhs[i].clone();
    }
    for (j, c) in costs.iter().enumerate() {
        tab[m][j] = -c;
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Bland: entering = lowest-index improving column
        let Some(enter) = (0..n + m).find(|&j| tab[m][j].is_negative()) else {
            break;
        };
        // leaving: min ratio, ties to the smallest basis variable
        let mut pick: Option<(usize, Rational)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][n + m] / &tab[i][enter];
                let better = match &pick {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
                };
                if better {
                    pick = Some((i, ratio));
                }
            }
        }
        let Some((leave, _)) = pick else {
            return Err(LpError::Unbounded);
        };
        let piv = tab[leave][enter].clone();
        for x in tab[leave].iter_mut() {
            *x = &*x / &piv;
        }
        let pivot_row = tab[leave].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != leave && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = &f * p;
                    *x = &*x - &delta;
                }
            }
        }
        basis[leave] = enter;
    }

    let mut primal = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            primal[b] = tab[i][n + m].clone();
        }
    }
    let dual: Vec<Rational> = (0..m).map(|i| tab[m][n + i].clone()).collect();
    let value = tab[m][n + m].clone();

    // certificate check: feasible dual with matching value
    debug_assert!(dual.iter().all(|y| !y.is_negative()));
    debug_assert_eq!(
        value,
        rhs.iter().zip(&dual).map(|(b, y)| b * y).sum::<Rational>()
    );
    #[cfg(debug_assertions)]
    {
        let mut col_sums = vec![Rational::zero(); n];
        for (i, row) in rows.iter().enumerate() {
            for &(v, ref coef) in row {
                col_sums[v] = &col_sums[v] + &(coef * &dual[i]);
            }
        }
        for (j, c) in costs.iter().enumerate() {
            debug_assert!(col_sums[j] >= *c, "dual infeasible at column {j}");
        }
    }

    Ok(LpSolution { value, primal, dual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::{rational, rational_int};

    #[test]
    fn small_lp_with_binding_sum() {
        // max x + y, x <= 1, y <= 1, x + y <= 3/2
        let sol = maximize(
            &[rational_int(1), rational_int(1)],
            &[
                vec![(0, rational_int(1))],
                vec![(1, rational_int(1))],
                vec![(0, rational_int(1)), (1, rational_int(1))],
            ],
            &[rational_int(1), rational_int(1), rational(3, 2)],
        )
        .unwrap();
        assert_eq!(sol.value, rational(3, 2));
        assert_eq!(&sol.primal[0] + &sol.primal[1], rational(3, 2));
    }

    #[test]
    fn degenerate_start_terminates() {
        // x - y <= 0 is tight at the origin; Bland must still leave
        let sol = maximize(
            &[rational_int(1), rational_int(1)],
            &[
                vec![(0, rational_int(1)), (1, rational_int(-1))],
                vec![(0, rational_int(1))],
                vec![(1, rational_int(1))],
            ],
            &[rational_int(0), rational_int(1), rational_int(1)],
        )
        .unwrap();
        assert_eq!(sol.value, rational_int(2));
    }

    #[test]
    fn unbounded_detected() {
        let r = maximize(
            &[rational_int(1), rational_int(0)],
            &[vec![(1, rational_int(1))]],
            &[rational_int(5)],
        );
        assert_eq!(r, Err(LpError::Unbounded));
    }

    #[test]
    fn negative_rhs_rejected() {
        let r = maximize(
            &[rational_int(1)],
            &[vec![(0, rational_int(1))]],
            &[rational_int(-1)],
        );
        assert_eq!(r, Err(LpError::NegativeRhs { row: 0 }));
    }

    #[test]
    fn dual_certifies_fractional_matching() {
        // triangle edge cover: max matching LP on K_3 has value 3/2,
        // dual puts 1/2 on every vertex
        let sol = maximize(
            &[rational_int(1), rational_int(1), rational_int(1)],
            &[
                vec![(0, rational_int(1)), (1, rational_int(1))],
                vec![(0, rational_int(1)), (2, rational_int(1))],
                vec![(1, rational_int(1)), (2, rational_int(1))],
            ],
            &[rational_int(1), rational_int(1), rational_int(1)],
        )
        .unwrap();
        assert_eq!(sol.value, rational(3, 2));
        assert_eq!(sol.dual, vec![rational(1, 2), rational(1, 2), rational(1, 2)]);
    }

    #[test]
    fn fully_slack_objective() {
        let sol = maximize(
            &[rational_int(-1)],
            &[vec![(0, rational_int(1))]],
            &[rational_int(4)],
        )
        .unwrap();
        assert_eq!(sol.value, rational_int(0));
        assert_eq!(sol.primal[0], rational_int(0));
    }
}
