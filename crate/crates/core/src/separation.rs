//! Facet-preserving separation of polyhedra.
//!
//! Given a full-dimensional polyhedron `P`, a nonempty polyhedron `Q` with
//! `int(P) /\ Q` empty, and a facet `G` of `P` whose relative interior
//! misses `Q`, there is a halfspace `H` with `P <= H`,
//! `relint(G) <= int(H)` and `Q /\ int(H)` empty. The construction follows
//! the difference body `P - Q`: if the origin lies outside, a violated
//! constraint separates strictly (case 1); otherwise the origin sits on the
//! boundary and the sum of the tight constraint normals exposes a face of
//! `P - Q` whose support functional does the job (case 2).
//!
//! Every result is re-verified by exact feasibility checks before it is
//! returned; a `SeparationResult` with a failed check cannot exist.

use crate::error::{Error, Result};
use crate::ratgeom::{
    eliminate_vars, feasible_point, normalize_primitive, solve_lp, Feasibility, HPolyhedron,
    LinearConstraint, LpResult, Sense,
};
use crate::scalar::Scalar;

/// Maximum ambient dimension for which the difference body is materialized.
const MAX_SEPARATION_DIM: usize = 4;

/// A support face `F(P, u)`: the subset of `P` maximizing `<u, .>`.
#[derive(Debug, Clone)]
pub struct Face<S> {
    pub of: HPolyhedron<S>,
    pub functional: Vec<S>,
    pub face_polyhedron: HPolyhedron<S>,
    pub support_value: S,
}

/// The face of `p` maximizing `<u, .>`, as `p` with the tight constraint
/// added. Errors with a ray certificate when unbounded in direction `u`.
pub fn support_face<S: Scalar>(p: &HPolyhedron<S>, u: &[S]) -> Result<Face<S>> {
    if u.len() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            got: u.len(),
        });
    }
    match solve_lp(u, Sense::Max, p.constraints())? {
        LpResult::Optimal { value, .. } => {
            let tight = LinearConstraint::new(
                u.iter().map(|c| -c.clone()).collect(),
                -value.clone(),
                false,
            );
            Ok(Face {
                of: p.clone(),
                functional: u.to_vec(),
                face_polyhedron: p.with_constraint(tight)?,
                support_value: value,
            })
        }
        LpResult::Unbounded { ray } => Err(Error::precondition_with(
            "support functional is unbounded over the polyhedron",
            format!("ray ({})", join(&ray)),
        )),
        LpResult::Infeasible { .. } => Err(Error::EmptyPolyhedron),
        LpResult::InfimumUnattained { .. } => Err(Error::Internal(
            "closed polyhedra attain finite suprema".into(),
        )),
    }
}

fn join<S: Scalar>(values: &[S]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Which proof branch produced the halfspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparationCase {
    /// Origin outside the difference body: strict separation, with the
    /// stronger guarantees `P <= int(H)` and `H /\ Q` empty.
    StrictSeparation,
    /// Origin on the boundary of the difference body: boundary-face
    /// separation through a support functional.
    BoundaryFace,
}

impl SeparationCase {
    pub fn tag(&self) -> &'static str {
        match self {
            SeparationCase::StrictSeparation => "strict-separation",
            SeparationCase::BoundaryFace => "boundary-face",
        }
    }
}

/// A verified separating halfspace. Construction re-checks all three
/// postconditions exactly; the accessors expose the stored outcome.
#[derive(Debug, Clone)]
pub struct SeparationResult<S> {
    halfspace: LinearConstraint<S>,
    case: SeparationCase,
    checks: [bool; 3],
}

impl<S: Scalar> SeparationResult<S> {
    pub fn halfspace(&self) -> &LinearConstraint<S> {
        &self.halfspace
    }

    pub fn case_tag(&self) -> SeparationCase {
        self.case
    }

    /// (P inside H, relint(G) inside int(H), Q misses int(H)); all true.
    pub fn checks(&self) -> [bool; 3] {
        self.checks
    }
}

/// Separate `q` from the facet `facet_index` of `p`.
pub fn separate_with_facet<S: Scalar>(
    p: &HPolyhedron<S>,
    q: &HPolyhedron<S>,
    facet_index: usize,
) -> Result<SeparationResult<S>> {
    let d = p.ambient_dim();
    if q.ambient_dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: q.ambient_dim(),
        });
    }
    if d > MAX_SEPARATION_DIM {
        return Err(Error::UnsupportedShape(format!(
            "separation materializes the difference body; dimension {d} exceeds {MAX_SEPARATION_DIM}"
        )));
    }
    if p.dim()? != d as i64 {
        return Err(Error::precondition(
            "separation requires a full-dimensional polyhedron",
        ));
    }
    let Some(_) = q.any_point()? else {
        return Err(Error::precondition("the polyhedron to separate is empty"));
    };

    // int(p) /\ q must be empty
    let mut probe: Vec<LinearConstraint<S>> = p
        .constraints()
        .iter()
        .map(LinearConstraint::strict_version)
        .collect();
    probe.extend(q.constraints().iter().cloned());
    if let Feasibility::Feasible(w) = feasible_point(d, &probe)? {
        return Err(Error::precondition_with(
            "interior of the polyhedron meets the set to separate",
            w.to_string(),
        ));
    }

    let facets = p.facets()?;
    if facet_index >= facets.len() {
        return Err(Error::IndexOutOfRange {
            index: facet_index,
            len: facets.len(),
        });
    }
    let facet = &facets[facet_index];

    // relint(G) /\ q must be empty
    let mut probe = facet.face.relint_system()?;
    probe.extend(q.constraints().iter().cloned());
    if let Feasibility::Feasible(w) = feasible_point(d, &probe)? {
        return Err(Error::precondition_with(
            "relative interior of the facet meets the set to separate",
            w.to_string(),
        ));
    }

    // difference body p - q in variables (z, y): p constrains z + y, q
    // constrains y; eliminate the y block
    let mut lifted: Vec<LinearConstraint<S>> = Vec::new();
    for c in p.constraints() {
        let mut normal = c.normal.clone();
        normal.extend(c.normal.iter().cloned());
        lifted.push(LinearConstraint::new(normal, c.bound.clone(), false));
    }
    for c in q.constraints() {
        let mut normal = vec![S::zero(); d];
        normal.extend(c.normal.iter().cloned());
        lifted.push(LinearConstraint::new(normal, c.bound.clone(), false));
    }
    let drop_vars: Vec<usize> = (d..2 * d).collect();
    let difference = eliminate_vars(2 * d, &lifted, &drop_vars)?;

    // position of the origin relative to the difference body
    let violated = difference.iter().find(|c| c.bound < S::zero());
    let (mut normal, bound, case) = match violated {
        Some(row) => {
            // case 1: the row separates o from p - q strictly
            let u = row.normal.clone();
            let sup_p = maximize(&u, p)?;
            let inf_q = -maximize(&u.iter().map(|c| -c.clone()).collect::<Vec<_>>(), q)?;
            if sup_p >= inf_q {
                return Err(Error::Internal(
                    "strict separation bound collapsed".into(),
                ));
            }
            let two = S::one() + S::one();
            let beta = (sup_p + inf_q) / two;
            (u, beta, SeparationCase::StrictSeparation)
        }
        None => {
            // case 2: origin on the boundary; sum the tight normals
            let mut u = vec![S::zero(); d];
            for row in &difference {
                if row.bound.is_zero() {
                    for (acc, c) in u.iter_mut().zip(&row.normal) {
                        *acc += c.clone();
                    }
                }
            }
            if u.iter().all(|c| c.is_zero()) {
                return Err(Error::Internal(
                    "origin cannot be interior to the difference body".into(),
                ));
            }
            let beta = maximize(&u, p)?;
            (u, beta, SeparationCase::BoundaryFace)
        }
    };

    let mut all = normal.clone();
    all.push(bound.clone());
    normalize_primitive(&mut all);
    let bound = all.pop().expect("bound present");
    normal = all;
    let halfspace = LinearConstraint::new(normal, bound, false);

    verify_separation(p, q, &facet.face, &halfspace, case)?;
    Ok(SeparationResult {
        halfspace,
        case,
        checks: [true, true, true],
    })
}

fn maximize<S: Scalar>(u: &[S], p: &HPolyhedron<S>) -> Result<S> {
    match solve_lp(u, Sense::Max, p.constraints())? {
        LpResult::Optimal { value, .. } => Ok(value),
        LpResult::Unbounded { ray } => Err(Error::Internal(format!(
            "support value unexpectedly unbounded along ({})",
            join(&ray)
        ))),
        other => Err(Error::Internal(format!(
            "support LP returned {other:?} on a nonempty polyhedron"
        ))),
    }
}

/// The three postconditions, plus the stronger case-1 pair, all checked by
/// exact infeasibility.
fn verify_separation<S: Scalar>(
    p: &HPolyhedron<S>,
    q: &HPolyhedron<S>,
    facet_face: &HPolyhedron<S>,
    halfspace: &LinearConstraint<S>,
    case: SeparationCase,
) -> Result<()> {
    let d = p.ambient_dim();
    let inside = |probe: Vec<LinearConstraint<S>>| -> Result<bool> {
        Ok(!feasible_point(d, &probe)?.is_feasible())
    };

    // P <= H
    let mut probe = p.constraints().to_vec();
    probe.push(halfspace.negation());
    if !inside(probe)? {
        return Err(Error::Internal("separation check failed: P <= H".into()));
    }
    // relint(G) <= int(H): no relint point with <u,x> >= beta
    let mut probe = facet_face.relint_system()?;
    probe.push(LinearConstraint::new(
        halfspace.normal.iter().map(|c| -c.clone()).collect(),
        -halfspace.bound.clone(),
        false,
    ));
    if !inside(probe)? {
        return Err(Error::Internal(
            "separation check failed: relint(G) <= int(H)".into(),
        ));
    }
    // Q /\ int(H) empty
    let mut probe = q.constraints().to_vec();
    probe.push(halfspace.strict_version());
    if !inside(probe)? {
        return Err(Error::Internal(
            "separation check failed: Q misses int(H)".into(),
        ));
    }
    if case == SeparationCase::StrictSeparation {
        // stronger: P <= int(H) and H /\ Q empty
        let mut probe = p.constraints().to_vec();
        probe.push(LinearConstraint::new(
            halfspace.normal.iter().map(|c| -c.clone()).collect(),
            -halfspace.bound.clone(),
            false,
        ));
        if !inside(probe)? {
            return Err(Error::Internal(
                "strict separation check failed: P <= int(H)".into(),
            ));
        }
        let mut probe = q.constraints().to_vec();
        probe.push(halfspace.clone());
        if !inside(probe)? {
            return Err(Error::Internal(
                "strict separation check failed: H /\\ Q empty".into(),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::Point;
    use crate::scalar::int;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn le(normal: &[i64], bound: i64) -> LinearConstraint<Q> {
        LinearConstraint::from_ints(normal, bound, false)
    }

    fn interval(lo: i64, hi: i64) -> HPolyhedron<Q> {
        HPolyhedron::new(1, vec![le(&[1], hi), le(&[-1], -lo)]).unwrap()
    }

    fn unit_square() -> HPolyhedron<Q> {
        HPolyhedron::bounding_box(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
            .unwrap()
    }

    fn facet_index_by_normal(p: &HPolyhedron<Q>, normal: &[i64]) -> usize {
        let target: Vec<Q> = normal.iter().map(|&c| int(c)).collect();
        p.facets()
            .unwrap()
            .iter()
            .position(|f| f.constraint.normalized().normal == target)
            .expect("facet with the given normal")
    }

    #[test]
    fn support_face_facet_and_vertex() {
        let p = unit_square();
        let facet = support_face(&p, &[int::<Q>(1), Q::zero()]).unwrap();
        assert_eq!(facet.support_value, int::<Q>(1));
        assert_eq!(facet.face_polyhedron.dim().unwrap(), 1);
        let vertex = support_face(&p, &[int::<Q>(1), int::<Q>(1)]).unwrap();
        assert_eq!(vertex.support_value, int::<Q>(2));
        assert_eq!(vertex.face_polyhedron.dim().unwrap(), 0);
    }

    #[test]
    fn support_face_unbounded_direction() {
        let p = HPolyhedron::new(2, vec![le(&[-1, 0], 0)]).unwrap();
        let err = support_face(&p, &[int::<Q>(1), Q::zero()]).unwrap_err();
        match err {
            Error::Precondition { witness, .. } => {
                assert!(witness.unwrap().contains("ray"));
            }
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn strict_separation_in_one_dimension() {
        // p = [0,1], q = {2}, facet {1}
        let p = interval(0, 1);
        let q = interval(2, 2);
        let g = facet_index_by_normal(&p, &[1]);
        let sep = separate_with_facet(&p, &q, g).unwrap();
        assert_eq!(sep.case_tag(), SeparationCase::StrictSeparation);
        assert_eq!(sep.checks(), [true, true, true]);
        // the halfspace bound lies strictly between 1 and 2
        let h = sep.halfspace();
        let at_one = h.slack(&Point::from_ints(&[1]));
        let at_two = h.slack(&Point::from_ints(&[2]));
        assert!(at_one > Q::zero());
        assert!(at_two < Q::zero());
    }

    #[test]
    fn boundary_face_separation_in_the_plane() {
        // p = unit square, q = [1,2] x [-1,2], facet = top edge
        let p = unit_square();
        let q = HPolyhedron::new(
            2,
            vec![le(&[1, 0], 2), le(&[-1, 0], -1), le(&[0, 1], 2), le(&[0, -1], 1)],
        )
        .unwrap();
        let g = facet_index_by_normal(&p, &[0, 1]);
        let sep = separate_with_facet(&p, &q, g).unwrap();
        assert_eq!(sep.case_tag(), SeparationCase::BoundaryFace);
        let h = sep.halfspace().normalized();
        assert_eq!(h.normal, vec![int::<Q>(1), Q::zero()]);
        assert_eq!(h.bound, int::<Q>(1));
    }

    #[test]
    fn boundary_face_in_one_dimension() {
        // p = [0,1], q = {1}, facet {0}: H = { x <= 1 }
        let p = interval(0, 1);
        let q = interval(1, 1);
        let g = facet_index_by_normal(&p, &[-1]);
        let sep = separate_with_facet(&p, &q, g).unwrap();
        assert_eq!(sep.case_tag(), SeparationCase::BoundaryFace);
        let h = sep.halfspace().normalized();
        assert_eq!(h.normal, vec![int::<Q>(1)]);
        assert_eq!(h.bound, int::<Q>(1));
    }

    #[test]
    fn preconditions_are_reported_with_witnesses() {
        let p = unit_square();
        // q meets the interior of p
        let q = HPolyhedron::bounding_box(
            &Point::from_ints(&[0, 0]),
            &Point::from_ints(&[1, 1]),
        )
        .unwrap();
        let err = separate_with_facet(&p, &q, 0).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));

        // empty q
        let empty = HPolyhedron::new(2, vec![le(&[1, 0], 0), le(&[-1, 0], -1)]).unwrap();
        let err = separate_with_facet(&p, &empty, 0).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));

        // facet whose relative interior touches q
        let touching = HPolyhedron::new(
            2,
            vec![
                le(&[1, 0], 2),
                le(&[-1, 0], 0),
                le(&[0, 1], 2),
                le(&[0, -1], -1),
            ],
        )
        .unwrap();
        // top facet of the square has relint inside the touching set? the
        // top edge [0,1] x {1} lies on the boundary of `touching`, which
        // contains it; preconditions must reject this facet
        let g = facet_index_by_normal(&p, &[0, 1]);
        let err = separate_with_facet(&p, &touching, g).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
    }

    #[test]
    fn refuses_high_dimensions() {
        let p = HPolyhedron::<Q>::whole_space(5);
        let q = HPolyhedron::<Q>::whole_space(5);
        assert!(matches!(
            separate_with_facet(&p, &q, 0).unwrap_err(),
            Error::UnsupportedShape(_)
        ));
    }
}
