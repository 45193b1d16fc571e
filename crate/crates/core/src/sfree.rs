//! Freeness with respect to a ground set, the blocking/redundancy
//! maximalization procedure for finite ground sets, maximality certificates
//! and one-step enlargement via separation.
//!
//! Vocabulary (also used verbatim in CLI traces): a strict constraint of a
//! system with no solution in S is *redundant* if removing it leaves the
//! system unsolvable in S, *blocked* if some point of S meets it with
//! equality while satisfying the others strictly, and *tightenable*
//! otherwise, with the new bound being the minimum of the constraint's value
//! over the points that satisfy the other constraints strictly.

use std::fmt;

use crate::error::{Error, Result};
use crate::ratgeom::{
    feasible_point, Feasibility, HPolyhedron, LinearConstraint, Point, StrictSystem,
};
use crate::sconvex::{helly_number, FinitePointSet, HellyWitness};
use crate::scalar::Scalar;
use crate::separation::separate_with_facet;

/// Finite union of nonempty polyhedra; the polyhedral ground sets of the
/// separation-based routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeUnion<S> {
    ambient_dim: usize,
    pieces: Vec<HPolyhedron<S>>,
}

impl<S: Scalar> PolytopeUnion<S> {
    /// Every piece must be nonempty (checked exactly).
    pub fn new(ambient_dim: usize, pieces: Vec<HPolyhedron<S>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for (i, p) in pieces.iter().enumerate() {
            if p.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: p.ambient_dim(),
                });
            }
            if !p.is_nonempty()? {
                return Err(Error::precondition(format!("piece {i} is empty")));
            }
        }
        Ok(PolytopeUnion {
            ambient_dim,
            pieces,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn pieces(&self) -> &[HPolyhedron<S>] {
        &self.pieces
    }
}

/// Ground set argument shared by the freeness routines.
#[derive(Debug, Clone)]
pub enum GroundSet<S> {
    Points(FinitePointSet<S>),
    Union(PolytopeUnion<S>),
}

impl<S: Scalar> GroundSet<S> {
    pub fn ambient_dim(&self) -> usize {
        match self {
            GroundSet::Points(p) => p.ambient_dim(),
            GroundSet::Union(u) => u.ambient_dim(),
        }
    }
}

/// Is the interior of `l` disjoint from the ground set? `false` comes with
/// an explicit point of the ground set interior to `l`.
pub fn is_s_free<S: Scalar>(l: &HPolyhedron<S>, ground: &GroundSet<S>) -> Result<Option<Point<S>>> {
    if l.ambient_dim() != ground.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: l.ambient_dim(),
            got: ground.ambient_dim(),
        });
    }
    match ground {
        GroundSet::Points(s) => Ok(s
            .points()
            .iter()
            .find(|p| l.interior_contains(p))
            .cloned()),
        GroundSet::Union(u) => {
            for piece in u.pieces() {
                // int(l) /\ piece as a mixed system
                let mut rows: Vec<LinearConstraint<S>> = l
                    .constraints()
                    .iter()
                    .map(LinearConstraint::strict_version)
                    .collect();
                rows.extend(piece.constraints().iter().cloned());
                if let Feasibility::Feasible(witness) = feasible_point(l.ambient_dim(), &rows)? {
                    return Ok(Some(witness));
                }
            }
            Ok(None)
        }
    }
}

/// Status of one constraint of a strict system relative to a finite ground
/// set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockedStatus<S> {
    /// Removing the constraint leaves the system without solutions in S.
    Redundant,
    /// A point of S meets the constraint with equality and satisfies every
    /// other constraint strictly.
    Blocked { witness: Point<S> },
    /// The bound can move to the minimum value of the constraint over the
    /// qualifying points of S.
    Tightenable { new_bound: S },
}

/// Classify constraint `j` of `sys` against `s`. Total over all inputs: for
/// systems with no solution in `s` this is exactly the redundant / blocked /
/// raise-the-bound trichotomy; for solvable systems the returned bound may
/// shrink the region (one such tightening makes the system unsolvable in
/// `s`), which is what the maximalization procedure relies on.
pub fn blocked_status<S: Scalar>(
    sys: &StrictSystem<S>,
    j: usize,
    s: &FinitePointSet<S>,
) -> Result<BlockedStatus<S>> {
    let cs = sys.constraints();
    if j >= cs.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: cs.len(),
        });
    }
    if sys.ambient_dim() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.ambient_dim(),
            got: s.ambient_dim(),
        });
    }
    let qualifying: Vec<&Point<S>> = s
        .points()
        .iter()
        .filter(|p| {
            cs.iter()
                .enumerate()
                .all(|(i, c)| i == j || c.satisfied_by(p))
        })
        .collect();
    if qualifying.is_empty() {
        return Ok(BlockedStatus::Redundant);
    }
    let mut min_value: Option<(S, &Point<S>)> = None;
    for p in qualifying {
        let v = cs[j].eval(p);
        match &min_value {
            None => min_value = Some((v, p)),
            Some((best, _)) => {
                if v < *best {
                    min_value = Some((v, p));
                }
            }
        }
    }
    let (value, witness) = min_value.expect("qualifying set is nonempty");
    if value == cs[j].bound {
        Ok(BlockedStatus::Blocked {
            witness: witness.clone(),
        })
    } else {
        Ok(BlockedStatus::Tightenable { new_bound: value })
    }
}

/// One entry of the maximalization trace, in the procedure's vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProcessingAction<S> {
    RemovedRedundant { constraint: usize },
    Tightened { constraint: usize, old: S, new: S },
    AlreadyBlocked { constraint: usize },
}

impl<S: fmt::Display> fmt::Display for ProcessingAction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProcessingAction::RemovedRedundant { constraint } => {
                write!(f, "constraint {}: redundant, removed", constraint + 1)
            }
            ProcessingAction::Tightened {
                constraint,
                old,
                new,
            } => write!(
                f,
                "constraint {}: tightened {} -> {} (now blocked)",
                constraint + 1,
                old,
                new
            ),
            ProcessingAction::AlreadyBlocked { constraint } => {
                write!(f, "constraint {}: already blocked", constraint + 1)
            }
        }
    }
}

/// Output of the maximalization procedure: a free polyhedron with a ground
/// point in the relative interior of every facet.
#[derive(Debug, Clone)]
pub struct MaximalSFreeResult<S> {
    pub polyhedron: HPolyhedron<S>,
    /// One witness per final constraint, aligned with the polyhedron's
    /// constraint order.
    pub facet_witnesses: Vec<(usize, Point<S>)>,
    pub processing_log: Vec<ProcessingAction<S>>,
    /// Constraints of the seed dropped before processing (zero normals).
    pub stripped_trivial: usize,
}

/// Run the maximalization procedure: process constraints in `order`
/// (default: input order), removing the currently redundant ones and
/// tightening the rest until blocked. The result contains the closure of
/// the seed region whenever the seed had no solution in `s`, is free with
/// respect to `s`, is full-dimensional, and carries a witness point of `s`
/// in the relative interior of every facet.
pub fn maximalize_finite<S: Scalar>(
    sys: &StrictSystem<S>,
    s: &FinitePointSet<S>,
    order: Option<&[usize]>,
) -> Result<MaximalSFreeResult<S>> {
    if s.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if sys.ambient_dim() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.ambient_dim(),
            got: s.ambient_dim(),
        });
    }
    let d = sys.ambient_dim();

    // strip zero-normal constraints (trivial or absurd); they can be neither
    // blocked nor meaningfully tightened
    let mut constraints: Vec<LinearConstraint<S>> = Vec::new();
    let mut kept_original: Vec<usize> = Vec::new();
    for (i, c) in sys.constraints().iter().enumerate() {
        if c.is_zero_normal() {
            continue;
        }
        constraints.push(c.clone());
        kept_original.push(i);
    }
    let stripped = sys.constraints().len() - constraints.len();
    if constraints.is_empty() {
        return Err(Error::precondition(
            "seed system has no constraints with nonzero normals",
        ));
    }

    let order_vec: Vec<usize> = match order {
        None => (0..sys.constraints().len()).collect(),
        Some(o) => {
            let mut seen = vec![false; sys.constraints().len()];
            for &i in o {
                if i >= sys.constraints().len() {
                    return Err(Error::IndexOutOfRange {
                        index: i,
                        len: sys.constraints().len(),
                    });
                }
                if seen[i] {
                    return Err(Error::precondition("processing order repeats an index"));
                }
                seen[i] = true;
            }
            if !seen.iter().all(|&b| b) {
                return Err(Error::precondition(
                    "processing order must be a permutation of all constraint indices",
                ));
            }
            o.to_vec()
        }
    };

    let mut alive: Vec<bool> = vec![true; constraints.len()];
    let mut log: Vec<ProcessingAction<S>> = Vec::new();
    for &orig_idx in &order_vec {
        let Some(j) = kept_original.iter().position(|&k| k == orig_idx) else {
            continue; // stripped constraint
        };
        if !alive[j] {
            continue;
        }
        // qualifying points: satisfy all other live constraints strictly
        let mut min_value: Option<(S, usize)> = None;
        let mut any = false;
        for p in s.points() {
            let ok = constraints
                .iter()
                .enumerate()
                .all(|(i, c)| i == j || !alive[i] || c.satisfied_by(p));
            if !ok {
                continue;
            }
            any = true;
            let v = constraints[j].eval(p);
            match &min_value {
                None => min_value = Some((v, 0)),
                Some((best, _)) => {
                    if v < *best {
                        min_value = Some((v, 0));
                    }
                }
            }
        }
        if !any {
            alive[j] = false;
            log.push(ProcessingAction::RemovedRedundant {
                constraint: orig_idx,
            });
            continue;
        }
        let (new_bound, _) = min_value.expect("qualifying set nonempty");
        if new_bound == constraints[j].bound {
            log.push(ProcessingAction::AlreadyBlocked {
                constraint: orig_idx,
            });
        } else {
            log.push(ProcessingAction::Tightened {
                constraint: orig_idx,
                old: constraints[j].bound.clone(),
                new: new_bound.clone(),
            });
            constraints[j].bound = new_bound;
        }
    }

    // assemble the final polyhedron and its witnesses
    let final_cs: Vec<LinearConstraint<S>> = constraints
        .iter()
        .zip(&alive)
        .filter(|(_, a)| **a)
        .map(|(c, _)| c.closure())
        .collect();
    if final_cs.is_empty() {
        return Err(Error::Internal(
            "procedure removed every constraint although the ground set is nonempty".into(),
        ));
    }
    let polyhedron = HPolyhedron::new(d, final_cs)?;

    let mut facet_witnesses = Vec::new();
    for (fi, c) in polyhedron.constraints().iter().enumerate() {
        let witness = s.points().iter().find(|p| {
            c.tight_at(p)
                && polyhedron
                    .constraints()
                    .iter()
                    .enumerate()
                    .all(|(i, other)| i == fi || other.strict_version().satisfied_by(p))
        });
        match witness {
            Some(p) => facet_witnesses.push((fi, p.clone())),
            None => {
                return Err(Error::Internal(format!(
                    "constraint {fi} of the output is not blocked"
                )))
            }
        }
    }

    // final soundness: no ground point interior to the output
    if let Some(p) = s.points().iter().find(|p| polyhedron.interior_contains(p)) {
        return Err(Error::Internal(format!(
            "output interior contains ground point {p}"
        )));
    }

    Ok(MaximalSFreeResult {
        polyhedron,
        facet_witnesses,
        processing_log: log,
        stripped_trivial: stripped,
    })
}

/// Maximality certificate: either a ground point in the relative interior of
/// every facet, or the index of the first facet without one.
#[derive(Debug, Clone)]
pub enum MaximalityCertificate<S> {
    CertifiedMaximal {
        witnesses: Vec<(usize, Point<S>)>,
    },
    NotMaximal {
        open_facet: usize,
        witnesses: Vec<(usize, Point<S>)>,
    },
}

impl<S> MaximalityCertificate<S> {
    pub fn is_maximal(&self) -> bool {
        matches!(self, MaximalityCertificate::CertifiedMaximal { .. })
    }
}

/// Check the facet-witness condition on a full-dimensional free polyhedron:
/// for finite ground sets and finite unions of polyhedra this is necessary
/// and sufficient for maximality.
pub fn maximality_certificate<S: Scalar>(
    l: &HPolyhedron<S>,
    ground: &GroundSet<S>,
) -> Result<MaximalityCertificate<S>> {
    let d = l.ambient_dim();
    if let Some(p) = is_s_free(l, ground)? {
        return Err(Error::precondition_with(
            "polyhedron must be free with respect to the ground set",
            p.to_string(),
        ));
    }
    if l.dim()? != d as i64 {
        return Err(Error::precondition(
            "polyhedron must be full-dimensional",
        ));
    }
    let facets = l.facets()?;
    let mut witnesses = Vec::new();
    for (fi, facet) in facets.iter().enumerate() {
        let found = facet_relint_ground_point(&facet.face, ground)?;
        match found {
            Some(p) => witnesses.push((fi, p)),
            None => {
                return Ok(MaximalityCertificate::NotMaximal {
                    open_facet: fi,
                    witnesses,
                })
            }
        }
    }
    Ok(MaximalityCertificate::CertifiedMaximal { witnesses })
}

/// A ground point in the relative interior of the given face, if any.
fn facet_relint_ground_point<S: Scalar>(
    face: &HPolyhedron<S>,
    ground: &GroundSet<S>,
) -> Result<Option<Point<S>>> {
    match ground {
        GroundSet::Points(s) => {
            for p in s.points() {
                if face.relint_contains(p)? {
                    return Ok(Some(p.clone()));
                }
            }
            Ok(None)
        }
        GroundSet::Union(u) => {
            let relint = face.relint_system()?;
            for piece in u.pieces() {
                let mut rows = relint.clone();
                rows.extend(piece.constraints().iter().cloned());
                if let Feasibility::Feasible(p) = feasible_point(face.ambient_dim(), &rows)? {
                    return Ok(Some(p));
                }
            }
            Ok(None)
        }
    }
}

/// The facet-complexity value for a finite ground set; equals its Helly
/// number by the discrete-case equality.
pub fn f_finite<S: Scalar>(s: &FinitePointSet<S>, cap: usize) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    Ok(helly_number(s, cap)?.0)
}

/// Re-export used by reports: the Helly witness type.
pub type FacetComplexityWitness = HellyWitness;

/// Outcome of one enlargement attempt.
#[derive(Debug, Clone)]
pub enum ImproveOutcome<S> {
    /// Strictly larger free polyhedron, with the separating halfspaces that
    /// produced it and a point interior to the new set but not to the old.
    Enlarged {
        polyhedron: HPolyhedron<S>,
        open_facet: usize,
        added_halfspaces: Vec<LinearConstraint<S>>,
        growth_witness: Point<S>,
    },
    CertifiedMaximal {
        witnesses: Vec<(usize, Point<S>)>,
    },
}

/// One enlargement step for a free polyhedron against a union of polytopes:
/// if some facet's relative interior misses the ground set, separate every
/// piece from that facet and intersect the halfspaces with the remaining
/// facet constraints. The result strictly contains the input and stays free.
pub fn improve_via_separation<S: Scalar>(
    l: &HPolyhedron<S>,
    union: &PolytopeUnion<S>,
) -> Result<ImproveOutcome<S>> {
    let ground = GroundSet::Union(union.clone());
    let certificate = maximality_certificate(l, &ground)?;
    let open_facet = match certificate {
        MaximalityCertificate::CertifiedMaximal { witnesses } => {
            return Ok(ImproveOutcome::CertifiedMaximal { witnesses })
        }
        MaximalityCertificate::NotMaximal { open_facet, .. } => open_facet,
    };

    let facets = l.facets()?;
    let mut added = Vec::new();
    for piece in union.pieces() {
        let sep = separate_with_facet(l, piece, open_facet)?;
        added.push(sep.halfspace().clone());
    }
    // remaining facet constraints of l plus the separating halfspaces
    let mut cs: Vec<LinearConstraint<S>> = facets
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != open_facet)
        .map(|(_, f)| f.constraint.clone())
        .collect();
    cs.extend(added.iter().cloned());
    let enlarged = HPolyhedron::new(l.ambient_dim(), cs)?;

    // verification: still free, and strictly larger via a relint point of
    // the dropped facet
    if let Some(p) = is_s_free(&enlarged, &ground)? {
        return Err(Error::Internal(format!(
            "enlarged polyhedron lost freeness at {p}"
        )));
    }
    let growth_witness = facets[open_facet].face.relint_point()?.point;
    if !enlarged.interior_contains(&growth_witness) || l.interior_contains(&growth_witness) {
        return Err(Error::Internal(
            "enlargement witness must be interior to the new set only".into(),
        ));
    }
    Ok(ImproveOutcome::Enlarged {
        polyhedron: enlarged,
        open_facet,
        added_halfspaces: added,
        growth_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::sconvex::DEFAULT_ENUM_CAP;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn q(p: i64, d: i64) -> Q {
        int::<Q>(p) / int::<Q>(d)
    }

    fn le(normal: &[i64], bound: i64) -> LinearConstraint<Q> {
        LinearConstraint::from_ints(normal, bound, false)
    }

    fn lt(normal: &[i64], bound: i64) -> LinearConstraint<Q> {
        LinearConstraint::from_ints(normal, bound, true)
    }

    fn ltq(normal: &[i64], bound: Q) -> LinearConstraint<Q> {
        LinearConstraint::new(normal.iter().map(|&c| int(c)).collect(), bound, true)
    }

    fn pset(dim: usize, rows: &[&[i64]]) -> FinitePointSet<Q> {
        FinitePointSet::from_int_rows(dim, rows).unwrap()
    }

    fn z2_window(t: i64) -> FinitePointSet<Q> {
        let mut rows = Vec::new();
        for x in -t..=t {
            for y in -t..=t {
                rows.push(Point::from_ints(&[x, y]));
            }
        }
        FinitePointSet::new(2, rows).unwrap()
    }

    #[test]
    fn unit_square_is_free_for_integers() {
        let l = HPolyhedron::bounding_box(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
            .unwrap();
        let ground = GroundSet::Points(z2_window(2));
        assert!(is_s_free(&l, &ground).unwrap().is_none());
    }

    #[test]
    fn shifted_square_traps_a_lattice_point() {
        let l = HPolyhedron::new(
            2,
            vec![
                LinearConstraint::new(vec![int(1), Q::zero()], q(3, 2), false),
                LinearConstraint::new(vec![int(-1), Q::zero()], q(1, 2), false),
                LinearConstraint::new(vec![Q::zero(), int(1)], q(3, 2), false),
                LinearConstraint::new(vec![Q::zero(), int(-1)], q(1, 2), false),
            ],
        )
        .unwrap();
        let ground = GroundSet::Points(z2_window(2));
        let violation = is_s_free(&l, &ground).unwrap().unwrap();
        assert!(l.interior_contains(&violation));
    }

    #[test]
    fn union_pieces_avoiding_open_square() {
        // [0,2]^2 against the union of segment [0,1]x{0} and point {(2,2)}
        let l = HPolyhedron::bounding_box(&Point::from_ints(&[0, 0]), &Point::from_ints(&[2, 2]))
            .unwrap();
        let segment = HPolyhedron::new(
            2,
            vec![le(&[1, 0], 1), le(&[-1, 0], 0), le(&[0, 1], 0), le(&[0, -1], 0)],
        )
        .unwrap();
        let point = HPolyhedron::bounding_box(
            &Point::from_ints(&[2, 2]),
            &Point::from_ints(&[2, 2]),
        )
        .unwrap();
        let union = PolytopeUnion::new(2, vec![segment, point]).unwrap();
        assert!(is_s_free(&l, &GroundSet::Union(union)).unwrap().is_none());
    }

    #[test]
    fn blocked_status_trichotomy() {
        // sys = { x < 1/2, -x < 1/2 }, S = {0, 2}: constraint 0 tightens to 0
        let sys = StrictSystem::new(1, vec![ltq(&[1], q(1, 2)), ltq(&[-1], q(1, 2))]).unwrap();
        let s = pset(1, &[&[0], &[2]]);
        assert_eq!(
            blocked_status(&sys, 0, &s).unwrap(),
            BlockedStatus::Tightenable { new_bound: Q::zero() }
        );

        // sys = { x < 1, -x < 1 }, S = {-1, 1}: constraint 0 blocked by 1
        let sys = StrictSystem::new(1, vec![lt(&[1], 1), lt(&[-1], 1)]).unwrap();
        let s = pset(1, &[&[-1], &[1]]);
        assert_eq!(
            blocked_status(&sys, 0, &s).unwrap(),
            BlockedStatus::Blocked {
                witness: Point::from_ints(&[1])
            }
        );

        // sys = { x < 0, -x < 1/2 }, S = {0, 2}: constraint 1 redundant
        let sys = StrictSystem::new(1, vec![lt(&[1], 0), ltq(&[-1], q(1, 2))]).unwrap();
        let s = pset(1, &[&[0], &[2]]);
        assert_eq!(
            blocked_status(&sys, 1, &s).unwrap(),
            BlockedStatus::Redundant
        );

        assert!(matches!(
            blocked_status(&sys, 5, &s).unwrap_err(),
            Error::IndexOutOfRange { .. }
        ));
    }

    #[test]
    fn maximalize_already_blocked_pair() {
        let sys = StrictSystem::new(1, vec![lt(&[1], 1), lt(&[-1], 1)]).unwrap();
        let s = pset(1, &[&[-1], &[1]]);
        let result = maximalize_finite(&sys, &s, None).unwrap();
        assert_eq!(result.polyhedron.constraints().len(), 2);
        let witnesses: Vec<i64> = result
            .facet_witnesses
            .iter()
            .map(|(_, p)| {
                let c = p.coords()[0].clone();
                if c == int::<Q>(1) { 1 } else { -1 }
            })
            .collect();
        assert_eq!(witnesses.len(), 2);
        assert!(witnesses.contains(&1) && witnesses.contains(&-1));
    }

    #[test]
    fn maximalize_order_dependence_regression() {
        // the two processing orders give (-inf, 0] and [0, 2]
        let s = pset(1, &[&[0], &[2]]);
        let seed = StrictSystem::new(1, vec![ltq(&[1], q(1, 2)), ltq(&[-1], q(1, 2))]).unwrap();

        let forward = maximalize_finite(&seed, &s, Some(&[0, 1])).unwrap();
        assert_eq!(forward.polyhedron.constraints().len(), 1);
        assert_eq!(forward.polyhedron.constraints()[0].normal, vec![int::<Q>(1)]);
        assert_eq!(forward.polyhedron.constraints()[0].bound, Q::zero());
        assert!(matches!(
            forward.processing_log[0],
            ProcessingAction::Tightened { constraint: 0, .. }
        ));
        assert!(matches!(
            forward.processing_log[1],
            ProcessingAction::RemovedRedundant { constraint: 1 }
        ));

        let backward = maximalize_finite(&seed, &s, Some(&[1, 0])).unwrap();
        assert_eq!(backward.polyhedron.constraints().len(), 2);
        let bounds: Vec<Q> = backward
            .polyhedron
            .constraints()
            .iter()
            .map(|c| c.bound.clone())
            .collect();
        assert!(bounds.contains(&int(2)) && bounds.contains(&Q::zero()));

        // both outputs certified maximal
        for result in [&forward, &backward] {
            let cert = maximality_certificate(
                &result.polyhedron,
                &GroundSet::Points(s.clone()),
            )
            .unwrap();
            assert!(cert.is_maximal());
        }
    }

    #[test]
    fn maximalize_square_seed_against_unit_cell() {
        // interior of [1/4, 3/4]^2 against {0,1}^2, order (x1<=, x2<=, x1>=, x2>=)
        let s = pset(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let seed = StrictSystem::new(
            2,
            vec![
                ltq(&[1, 0], q(3, 4)),
                ltq(&[0, 1], q(3, 4)),
                ltq(&[-1, 0], q(-1, 4)),
                ltq(&[0, -1], q(-1, 4)),
            ],
        )
        .unwrap();
        let result = maximalize_finite(&seed, &s, None).unwrap();
        // slab { 0 <= x2 <= 1 }
        assert_eq!(result.polyhedron.constraints().len(), 2);
        for c in result.polyhedron.constraints() {
            assert_eq!(c.normal[0], Q::zero());
        }
        let removed = result
            .processing_log
            .iter()
            .filter(|a| matches!(a, ProcessingAction::RemovedRedundant { .. }))
            .count();
        let tightened = result
            .processing_log
            .iter()
            .filter(|a| matches!(a, ProcessingAction::Tightened { .. }))
            .count();
        assert_eq!((removed, tightened), (2, 2));
        let witness_pts: Vec<Vec<i64>> = result
            .facet_witnesses
            .iter()
            .map(|(_, p)| p.coords().iter().map(|c| if c.is_zero() { 0 } else { 1 }).collect())
            .collect();
        assert!(witness_pts.contains(&vec![0, 1]) && witness_pts.contains(&vec![0, 0]));
    }

    #[test]
    fn maximalize_rejects_empty_ground_set() {
        let sys = StrictSystem::new(1, vec![lt(&[1], 0)]).unwrap();
        let s = FinitePointSet::<Q>::new(1, vec![]).unwrap();
        assert!(matches!(
            maximalize_finite(&sys, &s, None).unwrap_err(),
            Error::EmptyPointSet
        ));
    }

    #[test]
    fn maximalize_strips_zero_normals() {
        let sys = StrictSystem::new(
            1,
            vec![LinearConstraint::new(vec![Q::zero()], int(1), true), lt(&[1], 0)],
        )
        .unwrap();
        let s = pset(1, &[&[1]]);
        let result = maximalize_finite(&sys, &s, None).unwrap();
        assert_eq!(result.stripped_trivial, 1);
        assert_eq!(result.polyhedron.constraints().len(), 1);
        assert_eq!(result.polyhedron.constraints()[0].bound, int(1));
    }

    #[test]
    fn certificate_slab_vs_square() {
        let ground = GroundSet::Points(z2_window(2));
        let slab = HPolyhedron::new(2, vec![le(&[0, 1], 1), le(&[0, -1], 0)]).unwrap();
        let cert = maximality_certificate(&slab, &ground).unwrap();
        assert!(cert.is_maximal());

        let square =
            HPolyhedron::bounding_box(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
                .unwrap();
        let cert = maximality_certificate(&square, &ground).unwrap();
        assert!(!cert.is_maximal());
    }

    #[test]
    fn certificate_interval_endpoints() {
        let l = HPolyhedron::new(1, vec![le(&[1], 1), le(&[-1], 1)]).unwrap();
        let ground = GroundSet::Points(pset(1, &[&[-1], &[1]]));
        assert!(maximality_certificate(&l, &ground).unwrap().is_maximal());
    }

    #[test]
    fn certificate_rejects_non_free_input() {
        let l = HPolyhedron::bounding_box(&Point::from_ints(&[-1, -1]), &Point::from_ints(&[1, 1]))
            .unwrap();
        let ground = GroundSet::Points(z2_window(1));
        assert!(matches!(
            maximality_certificate(&l, &ground).unwrap_err(),
            Error::Precondition { .. }
        ));
    }

    #[test]
    fn f_equals_helly_on_small_sets() {
        assert_eq!(
            f_finite(&pset(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), DEFAULT_ENUM_CAP).unwrap(),
            4
        );
        assert_eq!(f_finite(&pset(1, &[&[-1], &[1]]), DEFAULT_ENUM_CAP).unwrap(), 2);
        assert_eq!(f_finite(&pset(1, &[&[3]]), DEFAULT_ENUM_CAP).unwrap(), 1);
    }

    #[test]
    fn improve_enlarges_unit_square() {
        // 49 integer points as degenerate polytopes
        let mut pieces: Vec<HPolyhedron<Q>> = Vec::new();
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                pieces.push(
                    HPolyhedron::bounding_box(
                        &Point::from_ints(&[x, y]),
                        &Point::from_ints(&[x, y]),
                    )
                    .unwrap(),
                );
            }
        }
        let union = PolytopeUnion::new(2, pieces).unwrap();
        let square =
            HPolyhedron::bounding_box(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
                .unwrap();
        match improve_via_separation(&square, &union).unwrap() {
            ImproveOutcome::Enlarged {
                polyhedron,
                growth_witness,
                ..
            } => {
                assert!(polyhedron.interior_contains(&growth_witness));
                assert!(!square.interior_contains(&growth_witness));
            }
            other => panic!("expected enlargement, got {other:?}"),
        }
    }

    #[test]
    fn improve_certifies_maximal_slab() {
        let mut pieces: Vec<HPolyhedron<Q>> = Vec::new();
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                pieces.push(
                    HPolyhedron::bounding_box(
                        &Point::from_ints(&[x, y]),
                        &Point::from_ints(&[x, y]),
                    )
                    .unwrap(),
                );
            }
        }
        let union = PolytopeUnion::new(2, pieces).unwrap();
        let slab = HPolyhedron::new(2, vec![le(&[0, 1], 1), le(&[0, -1], 0)]).unwrap();
        assert!(matches!(
            improve_via_separation(&slab, &union).unwrap(),
            ImproveOutcome::CertifiedMaximal { .. }
        ));
    }

    #[test]
    fn improve_certifies_interval() {
        let a = HPolyhedron::bounding_box(&Point::from_ints(&[-1]), &Point::from_ints(&[-1]))
            .unwrap();
        let b = HPolyhedron::bounding_box(&Point::from_ints(&[1]), &Point::from_ints(&[1]))
            .unwrap();
        let union = PolytopeUnion::new(1, vec![a, b]).unwrap();
        let l = HPolyhedron::new(1, vec![le(&[1], 1), le(&[-1], 1)]).unwrap();
        assert!(matches!(
            improve_via_separation(&l, &union).unwrap(),
            ImproveOutcome::CertifiedMaximal { .. }
        ));
    }
}
