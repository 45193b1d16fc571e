//! Vertex enumeration for desk-scale polyhedra (ambient dimension <= 4) by
//! pivoting through d-subsets of constraints. Internal helper; callers that
//! need V-representations at larger scale are out of scope.

use super::{HPolyhedron, Point};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

const MAX_VERTEX_DIM: usize = 4;

/// All vertices of `p`. Unbounded polyhedra simply yield the vertices they
/// have (possibly none).
pub fn vertices<S: Scalar>(p: &HPolyhedron<S>) -> Result<Vec<Point<S>>> {
    let d = p.ambient_dim();
    if d > MAX_VERTEX_DIM {
        return Err(Error::UnsupportedShape(format!(
            "vertex enumeration supports dimension <= {MAX_VERTEX_DIM}, got {d}"
        )));
    }
    let clean = p.cleaned();
    let cs = clean.constraints();
    if cs.len() < d {
        return Ok(Vec::new());
    }
    let mut found: Vec<Point<S>> = Vec::new();
    let mut choice: Vec<usize> = (0..d).collect();
    loop {
        let rows: Vec<&[S]> = choice.iter().map(|&i| cs[i].normal.as_slice()).collect();
        let rhs: Vec<S> = choice.iter().map(|&i| cs[i].bound.clone()).collect();
        if let Some(x) = solve_square(&rows, &rhs) {
            let x = Point::new(x);
            if clean.contains(&x) && !found.contains(&x) {
                found.push(x);
            }
        }
        // next d-combination in lexicographic order
        let mut k = d;
        loop {
            if k == 0 {
                return Ok(found);
            }
            k -= 1;
            if choice[k] + (d - k) < cs.len() {
                choice[k] += 1;
                for j in (k + 1)..d {
                    choice[j] = choice[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Solve the square system `rows * x = rhs`; None when singular.
pub(crate) fn solve_square<S: Scalar>(rows: &[&[S]], rhs: &[S]) -> Option<Vec<S>> {
    let n = rows.len();
    let mut a: Vec<Vec<S>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.to_vec();
            row.push(b.clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        let head = a[col][col].clone();
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone() / head.clone();
            for c in col..=n {
                let delta = factor.clone() * a[col][c].clone();
                a[i][c] = a[i][c].clone() - delta;
            }
        }
    }
    Some(
        (0..n)
            .map(|i| a[i][n].clone() / a[i][i].clone())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::LinearConstraint;
    use num_rational::BigRational;

    type Q = BigRational;

    fn le(normal: &[i64], bound: i64) -> LinearConstraint<Q> {
        LinearConstraint::from_ints(normal, bound, false)
    }

    #[test]
    fn square_has_four_vertices() {
        let p = HPolyhedron::new(
            2,
            vec![le(&[1, 0], 1), le(&[0, 1], 1), le(&[-1, 0], 0), le(&[0, -1], 0)],
        )
        .unwrap();
        let vs = vertices(&p).unwrap();
        assert_eq!(vs.len(), 4);
        for v in &vs {
            assert!(p.contains(v));
        }
    }

    #[test]
    fn halfspace_has_no_vertices() {
        let p = HPolyhedron::new(2, vec![le(&[1, 0], 1)]).unwrap();
        assert!(vertices(&p).unwrap().is_empty());
    }

    #[test]
    fn segment_endpoints() {
        let p = HPolyhedron::new(
            2,
            vec![le(&[1, 0], 0), le(&[-1, 0], 0), le(&[0, 1], 1), le(&[0, -1], 0)],
        )
        .unwrap();
        let vs = vertices(&p).unwrap();
        assert_eq!(vs.len(), 2);
    }

    #[test]
    fn refuses_high_dimension() {
        let p = HPolyhedron::<Q>::whole_space(5);
        assert!(matches!(
            vertices(&p).unwrap_err(),
            Error::UnsupportedShape(_)
        ));
    }
}
