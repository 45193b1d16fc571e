//! Convex-hull membership with certificates in both directions: a convex
//! combination using at most d+1 generators when inside, a separating
//! inequality when outside.

use super::lp::{feasible_point, Feasibility};
use super::{LinearConstraint, Point};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaratheodoryResult<S> {
    /// Positive rational coefficients, indexed into the generator list,
    /// summing to one and reproducing the query point exactly. At most
    /// dim + 1 entries.
    Decomposition { coefficients: Vec<(usize, S)> },
    /// A constraint satisfied by every generator and violated strictly by
    /// the query point.
    Outside { separator: LinearConstraint<S> },
}

/// Decide `x in conv(generators)` with an exact certificate either way.
pub fn caratheodory_decompose<S: Scalar>(
    x: &Point<S>,
    generators: &[Point<S>],
) -> Result<CaratheodoryResult<S>> {
    if generators.is_empty() {
        return Err(Error::precondition("generators must be nonempty"));
    }
    let d = x.dim();
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    for g in generators {
        if g.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: g.dim(),
            });
        }
    }
    let m = generators.len();

    // Feasibility in the coefficient space: sum mu_i g_i = x, sum mu_i = 1,
    // mu >= 0, written as inequalities over mu in R^m. Row order matters for
    // decoding the Farkas certificate below.
    let mut rows: Vec<LinearConstraint<S>> = Vec::with_capacity(2 * d + 2 + m);
    for k in 0..d {
        let coeffs: Vec<S> = generators.iter().map(|g| g.coords()[k].clone()).collect();
        rows.push(LinearConstraint::new(
            coeffs.clone(),
            x.coords()[k].clone(),
            false,
        ));
        rows.push(LinearConstraint::new(
            coeffs.iter().map(|c| -c.clone()).collect(),
            -x.coords()[k].clone(),
            false,
        ));
    }
    rows.push(LinearConstraint::new(vec![S::one(); m], S::one(), false));
    rows.push(LinearConstraint::new(vec![-S::one(); m], -S::one(), false));
    for i in 0..m {
        let mut e = vec![S::zero(); m];
        e[i] = -S::one();
        rows.push(LinearConstraint::new(e, S::zero(), false));
    }

    match feasible_point(m, &rows)? {
        Feasibility::Feasible(mu) => {
            let coefficients = reduce_support(x, generators, mu.into_coords())?;
            Ok(CaratheodoryResult::Decomposition { coefficients })
        }
        Feasibility::Infeasible(lam) => {
            // Decode: y_k = lam[2k] - lam[2k+1], gamma = lam[2d] - lam[2d+1].
            // Then <y,g_i> + gamma >= 0 for all i and <y,x> + gamma < 0, so
            // <-y, .> <= gamma separates.
            let y: Vec<S> = (0..d)
                .map(|k| lam[2 * k].clone() - lam[2 * k + 1].clone())
                .collect();
            let gamma = lam[2 * d].clone() - lam[2 * d + 1].clone();
            let mut separator = LinearConstraint::new(
                y.iter().map(|v| -v.clone()).collect(),
                gamma,
                false,
            );
            separator.normalize();
            for g in generators {
                if !separator.satisfied_by(g) {
                    return Err(Error::Internal(
                        "separator must be valid for all generators".into(),
                    ));
                }
            }
            if separator.slack(x) >= S::zero() {
                return Err(Error::Internal(
                    "separator must cut the query point strictly".into(),
                ));
            }
            Ok(CaratheodoryResult::Outside { separator })
        }
    }
}

/// Convenience wrapper: membership only.
pub fn in_convex_hull<S: Scalar>(x: &Point<S>, generators: &[Point<S>]) -> Result<bool> {
    Ok(matches!(
        caratheodory_decompose(x, generators)?,
        CaratheodoryResult::Decomposition { .. }
    ))
}

/// Shrink the support of a convex combination to an affinely independent set
/// (at most d+1 generators) by cancelling affine dependences, then verify the
/// combination reproduces `x` exactly.
fn reduce_support<S: Scalar>(
    x: &Point<S>,
    generators: &[Point<S>],
    mut mu: Vec<S>,
) -> Result<Vec<(usize, S)>> {
    let d = x.dim();
    loop {
        let support: Vec<usize> = (0..mu.len()).filter(|&i| mu[i] > S::zero()).collect();
        if support.len() <= d + 1 {
            break;
        }
        // columns (g_i, 1) for i in support are dependent: find nu != 0 with
        // sum nu_i g_i = 0 and sum nu_i = 0
        let mut matrix: Vec<Vec<S>> = Vec::with_capacity(d + 1);
        for k in 0..d {
            matrix.push(
                support
                    .iter()
                    .map(|&i| generators[i].coords()[k].clone())
                    .collect(),
            );
        }
        matrix.push(vec![S::one(); support.len()]);
        let nu = kernel_vector(matrix, support.len()).ok_or_else(|| {
            Error::Internal("dependent columns must have a kernel vector".into())
        })?;
        // nu sums to zero and is nonzero, so it has a positive entry
        let mut step: Option<S> = None;
        for (pos, &i) in support.iter().enumerate() {
            if nu[pos] > S::zero() {
                let ratio = mu[i].clone() / nu[pos].clone();
                if step.as_ref().is_none_or(|s| ratio < *s) {
                    step = Some(ratio);
                }
            }
        }
        let step = step.ok_or_else(|| {
            Error::Internal("zero-sum kernel vector must have a positive entry".into())
        })?;
        for (pos, &i) in support.iter().enumerate() {
            mu[i] = mu[i].clone() - step.clone() * nu[pos].clone();
        }
    }

    let coefficients: Vec<(usize, S)> = (0..mu.len())
        .filter(|&i| mu[i] > S::zero())
        .map(|i| (i, mu[i].clone()))
        .collect();

    // substitution check: exact reproduction and exact unit mass
    let mut total = S::zero();
    let mut recon = vec![S::zero(); d];
    for (i, c) in &coefficients {
        total += c.clone();
        for (acc, g) in recon.iter_mut().zip(generators[*i].coords()) {
            *acc += c.clone() * g.clone();
        }
    }
    if !total.is_one() || recon != x.coords() {
        return Err(Error::Internal(
            "convex combination must reproduce the point exactly".into(),
        ));
    }
    Ok(coefficients)
}

/// A nontrivial kernel vector of the matrix (rows x cols), or None when the
/// columns are independent.
fn kernel_vector<S: Scalar>(mut rows: Vec<Vec<S>>, cols: usize) -> Option<Vec<S>> {
    let nrows = rows.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut is_pivot = vec![false; cols];
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let head = rows[r][col].clone();
        for i in 0..nrows {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone() / head.clone();
            for c in col..cols {
                let delta = factor.clone() * rows[r][c].clone();
                rows[i][c] = rows[i][c].clone() - delta;
            }
        }
        pivot_col_of_row.push(col);
        is_pivot[col] = true;
        r += 1;
        if r == nrows {
            break;
        }
    }
    let free = (0..cols).find(|&c| !is_pivot[c])?;
    let mut nu = vec![S::zero(); cols];
    nu[free] = S::one();
    for (row, &pc) in pivot_col_of_row.iter().enumerate().rev() {
        // row reads: rows[row][pc] * nu[pc] + sum_{c>pc, free} rows[row][c] * nu[c] = 0
        let mut acc = S::zero();
        for c in (pc + 1)..cols {
            if !rows[row][c].is_zero() && !nu[c].is_zero() {
                acc += rows[row][c].clone() * nu[c].clone();
            }
        }
        nu[pc] = -acc / rows[row][pc].clone();
    }
    Some(nu)
}
