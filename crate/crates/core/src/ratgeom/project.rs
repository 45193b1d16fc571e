//! Block elimination (Fourier-Motzkin) for mixed strict/nonstrict systems.
//!
//! Elimination is exact for strict systems as well: a combined row is strict
//! iff one of its parents is. Each elimination step is followed by an
//! LP-based redundancy sweep, which keeps desk-scale projections small.

use super::lp::feasible_point;
use super::LinearConstraint;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Eliminate the variables listed in `drop_vars` and return the projection
/// onto the remaining coordinates (in ascending original order).
pub fn eliminate_vars<S: Scalar>(
    dim: usize,
    constraints: &[LinearConstraint<S>],
    drop_vars: &[usize],
) -> Result<Vec<LinearConstraint<S>>> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    for c in constraints {
        if c.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: c.dim(),
            });
        }
    }
    for &v in drop_vars {
        if v >= dim {
            return Err(Error::IndexOutOfRange {
                index: v,
                len: dim,
            });
        }
    }
    let mut rows: Vec<LinearConstraint<S>> = constraints.to_vec();
    let mut dropped = vec![false; dim];
    for &var in drop_vars {
        if dropped[var] {
            continue;
        }
        rows = eliminate_one(dim, rows, var)?;
        dropped[var] = true;
    }
    let keep: Vec<usize> = (0..dim).filter(|&v| !dropped[v]).collect();
    if keep.is_empty() {
        return Err(Error::precondition("cannot eliminate every variable"));
    }
    Ok(rows
        .into_iter()
        .map(|c| {
            debug_assert!(drop_vars.iter().all(|&v| c.normal[v].is_zero()));
            LinearConstraint::new(
                keep.iter().map(|&v| c.normal[v].clone()).collect(),
                c.bound,
                c.strict,
            )
        })
        .collect())
}

fn eliminate_one<S: Scalar>(
    dim: usize,
    rows: Vec<LinearConstraint<S>>,
    var: usize,
) -> Result<Vec<LinearConstraint<S>>> {
    let mut zero = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for r in rows {
        let a = &r.normal[var];
        if a.is_zero() {
            zero.push(r);
        } else if a.is_positive() {
            pos.push(r);
        } else {
            neg.push(r);
        }
    }
    let mut out = zero;
    for p in &pos {
        for n in &neg {
            // scale so the var column cancels: |a_n| * p + a_p * n
            let wp = -n.normal[var].clone();
            let wn = p.normal[var].clone();
            let normal: Vec<S> = (0..dim)
                .map(|k| {
                    wp.clone() * p.normal[k].clone() + wn.clone() * n.normal[k].clone()
                })
                .collect();
            debug_assert!(normal[var].is_zero());
            let bound = wp.clone() * p.bound.clone() + wn.clone() * n.bound.clone();
            let mut c = LinearConstraint::new(normal, bound, p.strict || n.strict);
            c.normalize();
            if c.is_trivially_true() {
                continue;
            }
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    prune_redundant(dim, out)
}

/// Remove rows whose deletion keeps the solution set unchanged. Sequential:
/// row i goes if (others so far kept) plus the negation of row i is
/// infeasible.
pub(crate) fn prune_redundant<S: Scalar>(
    dim: usize,
    rows: Vec<LinearConstraint<S>>,
) -> Result<Vec<LinearConstraint<S>>> {
    let mut kept: Vec<bool> = vec![true; rows.len()];
    for i in 0..rows.len() {
        let mut probe: Vec<LinearConstraint<S>> = Vec::new();
        for (j, r) in rows.iter().enumerate() {
            if j != i && kept[j] {
                probe.push(r.clone());
            }
        }
        probe.push(rows[i].negation());
        if !feasible_point(dim, &probe)?.is_feasible() {
            kept[i] = false;
        }
    }
    Ok(rows
        .into_iter()
        .zip(kept)
        .filter(|(_, k)| *k)
        .map(|(r, _)| r)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::Point;
    use crate::scalar::int;
    use num_rational::BigRational;

    type Q = BigRational;

    fn le(normal: &[i64], bound: i64) -> LinearConstraint<Q> {
        LinearConstraint::from_ints(normal, bound, false)
    }

    fn lt(normal: &[i64], bound: i64) -> LinearConstraint<Q> {
        LinearConstraint::from_ints(normal, bound, true)
    }

    fn satisfied(rows: &[LinearConstraint<Q>], p: &Point<Q>) -> bool {
        rows.iter().all(|c| c.satisfied_by(p))
    }

    #[test]
    fn box_projects_to_interval() {
        // [0,1] x [2,5] projected to x1
        let rows = vec![le(&[1, 0], 1), le(&[-1, 0], 0), le(&[0, 1], 5), le(&[0, -1], -2)];
        let proj = eliminate_vars(2, &rows, &[1]).unwrap();
        assert!(satisfied(&proj, &Point::from_ints(&[0])));
        assert!(satisfied(&proj, &Point::from_ints(&[1])));
        assert!(!satisfied(&proj, &Point::from_ints(&[2])));
        assert!(!satisfied(&proj, &Point::from_ints(&[-1])));
    }

    #[test]
    fn coupled_constraints_project_exactly() {
        // { x + y <= 3, x - y <= 1, -x <= 0 } projected onto x gives [0, 2]
        let rows = vec![le(&[1, 1], 3), le(&[1, -1], 1), le(&[-1, 0], 0)];
        let proj = eliminate_vars(2, &rows, &[1]).unwrap();
        assert!(satisfied(&proj, &Point::from_ints(&[2])));
        assert!(satisfied(&proj, &Point::from_ints(&[0])));
        assert!(!satisfied(&proj, &Point::from_ints(&[3])));
    }

    #[test]
    fn strictness_propagates() {
        // { x + y < 2, x - y <= 0 } projected onto x: x < 1
        let rows = vec![lt(&[1, 1], 2), le(&[1, -1], 0)];
        let proj = eliminate_vars(2, &rows, &[1]).unwrap();
        assert!(!satisfied(&proj, &Point::from_ints(&[1])));
        assert!(satisfied(
            &proj,
            &Point::new(vec![int::<Q>(1) - int::<Q>(1) / int::<Q>(100)])
        ));
    }

    #[test]
    fn empty_system_projects_empty() {
        let rows = vec![le(&[1, 0], 0), le(&[-1, 0], -1)];
        let proj = eliminate_vars(2, &rows, &[1]).unwrap();
        assert!(!feasible_point(1, &proj).unwrap().is_feasible());
    }

    #[test]
    fn projection_agrees_with_lp_feasibility() {
        // nontrivial 3d system projected to 1 variable; sample points and
        // compare against direct feasibility of the lifted system
        let rows = vec![
            le(&[1, 1, 1], 4),
            le(&[-1, 1, 0], 1),
            le(&[0, -1, 2], 3),
            le(&[-1, -1, -1], 0),
            lt(&[1, 0, -1], 2),
        ];
        let proj = eliminate_vars(3, &rows, &[1, 2]).unwrap();
        for v in -4..=6 {
            let p1 = Point::from_ints(&[v]);
            let projected_ok = satisfied(&proj, &p1);
            // lift: fix x1 = v and test the remaining 2-variable system
            let mut lifted: Vec<LinearConstraint<Q>> = Vec::new();
            for c in &rows {
                lifted.push(LinearConstraint::new(
                    vec![c.normal[1].clone(), c.normal[2].clone()],
                    c.bound.clone() - c.normal[0].clone() * int::<Q>(v),
                    c.strict,
                ));
            }
            let lifted_ok = feasible_point(2, &lifted).unwrap().is_feasible();
            assert_eq!(projected_ok, lifted_ok, "mismatch at x1 = {v}");
        }
    }
}
