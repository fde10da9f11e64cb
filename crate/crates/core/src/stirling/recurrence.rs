//! Recurrences in an extra parameter `s` that specialize to the Stirling
//! numbers at `s = 0`. Results are polynomials in `s`, stored as
//! [`ParamPoly`].

use crate::error::{Error, Result};
use crate::scalar::{int, ParamPoly};

fn check(m: usize, j: usize) -> Result<()> {
    if j > m {
        Err(Error::StirlingOutOfRange { m, n: j })
    } else {
        Ok(())
    }
}

/// Solves the triangle `rows[m][j]`, `j <= m <= top`, given the boundary
/// column `j = 0` and the interior weight applied to `T(m-1, j)`.
fn solve(
    top: usize,
    boundary: impl Fn(usize) -> ParamPoly,
    weight: impl Fn(usize, usize) -> ParamPoly,
) -> Vec<Vec<ParamPoly>> {
    let mut rows: Vec<Vec<ParamPoly>> = Vec::with_capacity(top + 1);
    for m in 0..=top {
        let mut row = vec![ParamPoly::zero(); m + 1];
        row[m] = ParamPoly::one();
        if m > 0 {
            row[0] = boundary(m);
        }
        for j in 1..m {
            row[j] = &(&weight(m, j) * &rows[m - 1][j]) + &rows[m - 1][j - 1];
        }
        rows.push(row);
    }
    rows
}

/// `M(m,j) = (m-1-s) M(m-1,j) + M(m-1,j-1)` with
/// `M(m,0) = (-s)(1-s)...(m-1-s)` and `M(m,m) = 1`.
pub fn recurrence_m(m: usize, j: usize) -> Result<ParamPoly> {
    check(m, j)?;
    let shifted = |k: usize| ParamPoly::linear(int(-1), int(k as i64));
    let rows = solve(
        m,
        |m| (0..m).fold(ParamPoly::one(), |acc, k| &acc * &shifted(k)),
        |m, _| shifted(m - 1),
    );
    Ok(rows[m][j].clone())
}

/// `N(m,j) = (s+j) N(m-1,j) + N(m-1,j-1)` with `N(m,0) = s^m` and
/// `N(m,m) = 1`.
pub fn recurrence_n(m: usize, j: usize) -> Result<ParamPoly> {
    check(m, j)?;
    let rows = solve(
        m,
        |m| ParamPoly::var().pow(m),
        |_, j| ParamPoly::linear(int(1), int(j as i64)),
    );
    Ok(rows[m][j].clone())
}
