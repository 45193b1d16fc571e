//! Faces of H-polyhedra: affine dimension, irredundant facet lists and
//! relative-interior tests.
//!
//! The workhorse notion is the set of implicit equalities: constraints that
//! hold with equality on the whole polyhedron. The affine hull is the
//! intersection of their hyperplanes, so `dim = ambient - rank(implicit
//! normals)`, and a point is in the relative interior iff it satisfies every
//! non-implicit constraint strictly.

use super::lp::{feasible_point, Feasibility};
use super::{HPolyhedron, LinearConstraint, Point};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One facet: its defining constraint (normalized, from the irredundant
/// representation) and the facet itself as a polyhedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet<S> {
    pub constraint: LinearConstraint<S>,
    pub face: HPolyhedron<S>,
}

/// A relative-interior sample point together with the strict system that
/// produced it; used by callers that must exhibit enlargement witnesses.
#[derive(Debug, Clone)]
pub struct RelintPoint<S> {
    pub point: Point<S>,
}

impl<S: Scalar> HPolyhedron<S> {
    /// True iff the polyhedron has at least one point.
    pub fn is_nonempty(&self) -> Result<bool> {
        Ok(feasible_point(self.ambient_dim(), self.constraints())?.is_feasible())
    }

    /// Any point of the polyhedron, or None when empty.
    pub fn any_point(&self) -> Result<Option<Point<S>>> {
        match feasible_point(self.ambient_dim(), self.constraints())? {
            Feasibility::Feasible(p) => Ok(Some(p)),
            Feasibility::Infeasible(_) => Ok(None),
        }
    }

    /// Indices (into `constraints()`) of the implicit equalities: constraints
    /// tight on every point. Empty polyhedron reported as an error by any
    /// caller that needs it; here the polyhedron is assumed nonempty.
    fn implicit_equalities(&self) -> Result<Vec<usize>> {
        let cs = self.constraints();
        let mut implicit = Vec::new();
        for i in 0..cs.len() {
            if cs[i].is_trivially_true() {
                continue;
            }
            // tight everywhere iff no point satisfies constraint i strictly
            let mut probe: Vec<LinearConstraint<S>> = cs.to_vec();
            probe[i] = cs[i].strict_version();
            if !feasible_point(self.ambient_dim(), &probe)?.is_feasible() {
                implicit.push(i);
            }
        }
        Ok(implicit)
    }

    /// Affine dimension; -1 for the empty polyhedron.
    pub fn dim(&self) -> Result<i64> {
        if !self.is_nonempty()? {
            return Ok(-1);
        }
        let implicit = self.implicit_equalities()?;
        let normals: Vec<&[S]> = implicit
            .iter()
            .map(|&i| self.constraints()[i].normal.as_slice())
            .collect();
        Ok(self.ambient_dim() as i64 - matrix_rank(&normals, self.ambient_dim()) as i64)
    }

    /// Irredundant facet list. Each entry pairs the surviving constraint
    /// with the facet polyhedron (the parent's constraints plus the pinned
    /// equality). Errors with `EmptyPolyhedron` on the empty set.
    pub fn facets(&self) -> Result<Vec<Facet<S>>> {
        let clean = self.cleaned();
        if !clean.is_nonempty()? {
            return Err(Error::EmptyPolyhedron);
        }
        let implicit = clean.implicit_equalities()?;
        let is_implicit = |i: usize| implicit.contains(&i);

        // Sequential redundancy removal among the non-implicit constraints:
        // i is redundant iff dropping it and demanding its violation is
        // infeasible against the current survivors.
        let cs = clean.constraints();
        let mut kept: Vec<bool> = vec![true; cs.len()];
        for i in 0..cs.len() {
            if is_implicit(i) {
                continue;
            }
            let mut probe: Vec<LinearConstraint<S>> = Vec::new();
            for (j, c) in cs.iter().enumerate() {
                if j != i && kept[j] {
                    probe.push(c.clone());
                }
            }
            probe.push(cs[i].negation());
            if !feasible_point(clean.ambient_dim(), &probe)?.is_feasible() {
                kept[i] = false;
            }
        }

        let survivors: Vec<LinearConstraint<S>> = cs
            .iter()
            .enumerate()
            .filter(|(j, _)| kept[*j])
            .map(|(_, c)| c.clone())
            .collect();
        let base = HPolyhedron::new(clean.ambient_dim(), survivors.clone())?;

        let mut facets = Vec::new();
        for (j, c) in cs.iter().enumerate() {
            if !kept[j] || is_implicit(j) {
                continue;
            }
            // pin the equality: add the reversed inequality
            let mut face_cs = base.constraints().to_vec();
            face_cs.push(LinearConstraint::new(
                c.normal.iter().map(|v| -v.clone()).collect(),
                -c.bound.clone(),
                false,
            ));
            facets.push(Facet {
                constraint: c.clone(),
                face: HPolyhedron::new(clean.ambient_dim(), face_cs)?,
            });
        }
        Ok(facets)
    }

    /// True iff `x` lies in the face and satisfies strictly every constraint
    /// that is not tight on the whole face. Errors on the empty face.
    pub fn relint_contains(&self, x: &Point<S>) -> Result<bool> {
        if x.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: x.dim(),
            });
        }
        if !self.is_nonempty()? {
            return Err(Error::EmptyPolyhedron);
        }
        if !self.contains(x) {
            return Ok(false);
        }
        let implicit = self.implicit_equalities()?;
        for (i, c) in self.constraints().iter().enumerate() {
            if implicit.contains(&i) || c.is_trivially_true() {
                continue;
            }
            if c.tight_at(x) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A point in the relative interior; errors on the empty polyhedron.
    pub fn relint_point(&self) -> Result<RelintPoint<S>> {
        if !self.is_nonempty()? {
            return Err(Error::EmptyPolyhedron);
        }
        let implicit = self.implicit_equalities()?;
        let mut probe: Vec<LinearConstraint<S>> = Vec::new();
        for (i, c) in self.constraints().iter().enumerate() {
            if implicit.contains(&i) {
                probe.push(c.clone());
            } else {
                probe.push(c.strict_version());
            }
        }
        match feasible_point(self.ambient_dim(), &probe)? {
            Feasibility::Feasible(point) => Ok(RelintPoint { point }),
            Feasibility::Infeasible(_) => Err(Error::Internal(
                "nonempty polyhedron has a nonempty relative interior".into(),
            )),
        }
    }

    /// The relative interior as a mixed system (implicit equalities stay
    /// nonstrict, the rest become strict).
    pub fn relint_system(&self) -> Result<Vec<LinearConstraint<S>>> {
        if !self.is_nonempty()? {
            return Err(Error::EmptyPolyhedron);
        }
        let implicit = self.implicit_equalities()?;
        Ok(self
            .constraints()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if implicit.contains(&i) {
                    c.clone()
                } else {
                    c.strict_version()
                }
            })
            .collect())
    }
}

/// Rank of a list of vectors by exact Gaussian elimination.
pub fn matrix_rank<S: Scalar>(vectors: &[&[S]], dim: usize) -> usize {
    let mut rows: Vec<Vec<S>> = vectors.iter().map(|v| v.to_vec()).collect();
    let mut r = 0;
    for col in 0..dim {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let head = rows[r][col].clone();
        for i in (r + 1)..rows.len() {
            let factor = rows[i][col].clone() / head.clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..dim {
                let delta = factor.clone() * rows[r][c].clone();
                rows[i][c] = rows[i][c].clone() - delta;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
