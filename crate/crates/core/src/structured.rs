//! Structured ground sets: lattices and the parity argument, cube-vertex
//! witness families, Minkowski-sum truncations, mixed-integer freeness and
//! the bound-verification harness.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ratgeom::{
    solve_lp, vertices, HPolyhedron, LinearConstraint, LpResult, Point, Sense,
};
use crate::scalar::{int, Scalar};
use crate::sconvex::{FinitePointSet, SConvexFamily, SubsetMask};
use crate::sfree::PolytopeUnion;

/// Default ceiling for the cube-vertex witness family dimension.
pub const DEFAULT_DOIGNON_CAP: usize = 10;

/// A lattice given by a linearly independent rational basis. The empty
/// basis is the trivial lattice containing only the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice<S> {
    ambient_dim: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Lattice<S> {
    pub fn new(ambient_dim: usize, basis: Vec<Vec<S>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for b in &basis {
            if b.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: b.len(),
                });
            }
        }
        if basis.len() > ambient_dim {
            return Err(Error::precondition(
                "lattice rank cannot exceed the ambient dimension",
            ));
        }
        let lattice = Lattice { ambient_dim, basis };
        if lattice.basis_rank() != lattice.basis.len() {
            return Err(Error::precondition(
                "lattice basis vectors must be linearly independent",
            ));
        }
        Ok(lattice)
    }

    /// Standard integer lattice `Z^d`.
    pub fn standard(ambient_dim: usize) -> Result<Self> {
        let mut basis = Vec::with_capacity(ambient_dim);
        for k in 0..ambient_dim {
            let mut e = vec![S::zero(); ambient_dim];
            e[k] = S::one();
            basis.push(e);
        }
        Lattice::new(ambient_dim, basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    fn basis_rank(&self) -> usize {
        let rows: Vec<&[S]> = self.basis.iter().map(|b| b.as_slice()).collect();
        crate::ratgeom::matrix_rank(&rows, self.ambient_dim)
    }

    /// Exact basis coordinates of `x`, or None when `x` is outside the
    /// lattice span. Coordinates need not be integral.
    pub fn coordinates(&self, x: &Point<S>) -> Result<Option<Vec<S>>> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: x.dim(),
            });
        }
        if self.basis.is_empty() {
            return Ok(if x.coords().iter().all(|c| c.is_zero()) {
                Some(Vec::new())
            } else {
                None
            });
        }
        // solve sum t_j basis_j = x by Gaussian elimination on the d x r
        // system; inconsistent rows mean x is off the span
        let r = self.basis.len();
        let mut rows: Vec<Vec<S>> = (0..self.ambient_dim)
            .map(|k| {
                let mut row: Vec<S> = self.basis.iter().map(|b| b[k].clone()).collect();
                row.push(x.coords()[k].clone());
                row
            })
            .collect();
        let mut pivot_rows: Vec<usize> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut next = 0usize;
        for col in 0..r {
            let Some(p) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            let head = rows[next][col].clone();
            for i in 0..rows.len() {
                if i == next || rows[i][col].is_zero() {
                    continue;
                }
                let factor = rows[i][col].clone() / head.clone();
                for c in col..=r {
                    let delta = factor.clone() * rows[next][c].clone();
                    rows[i][c] = rows[i][c].clone() - delta;
                }
            }
            pivot_rows.push(next);
            pivot_cols.push(col);
            next += 1;
        }
        // independence guarantees one pivot per column
        debug_assert_eq!(pivot_cols.len(), r);
        for (i, row) in rows.iter().enumerate() {
            if !pivot_rows.contains(&i) && !row[r].is_zero() {
                return Ok(None);
            }
        }
        let mut t = vec![S::zero(); r];
        for (row, col) in pivot_rows.iter().zip(&pivot_cols) {
            t[*col] = rows[*row][r].clone() / rows[*row][*col].clone();
        }
        Ok(Some(t))
    }

    /// Membership: integral basis coordinates.
    pub fn contains(&self, x: &Point<S>) -> Result<bool> {
        Ok(match self.coordinates(x)? {
            None => false,
            Some(t) => t.iter().all(|c| is_integral(c)),
        })
    }

    /// The lattice point with the given integer coordinates.
    pub fn point_from_coordinates(&self, t: &[i64]) -> Result<Point<S>> {
        if t.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: t.len(),
            });
        }
        let mut coords = vec![S::zero(); self.ambient_dim];
        for (tj, b) in t.iter().zip(&self.basis) {
            let w: S = int(*tj);
            for (acc, c) in coords.iter_mut().zip(b) {
                *acc += w.clone() * c.clone();
            }
        }
        Ok(Point::new(coords))
    }
}

fn is_integral<S: Scalar>(c: &S) -> bool {
    let (_, den) = c.to_fraction();
    den == "1"
}

/// Parity class of integral coordinates: each entry mod 2.
fn parity_class<S: Scalar>(t: &[S]) -> Result<Vec<u8>> {
    let two: S = int(2);
    t.iter()
        .map(|c| {
            if !is_integral(c) {
                return Err(Error::Internal("parity of a non-integer coordinate".into()));
            }
            // c mod 2 via c - 2*floor-ish: for integers, parity = |c| mod 2
            let half = c.clone() / two.clone();
            Ok(if is_integral(&half) { 0 } else { 1 })
        })
        .collect()
}

/// A midpoint pair found by the parity argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityPair<S> {
    pub first: Point<S>,
    pub second: Point<S>,
    pub midpoint: Point<S>,
}

/// Find two distinct points of `x_set` (all required to lie in `lat`) whose
/// midpoint is again a lattice point. Guaranteed to exist when the set has
/// more than `2^rank` distinct points (pigeonhole on parity classes); below
/// that a pair is returned iff one exists. Scan order is input order, so
/// the first collision wins.
pub fn parity_pair<S: Scalar>(
    x_set: &[Point<S>],
    lat: &Lattice<S>,
) -> Result<Option<ParityPair<S>>> {
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut distinct: Vec<&Point<S>> = Vec::new();
    for p in x_set {
        if distinct.iter().any(|q| *q == p) {
            continue;
        }
        let Some(t) = lat.coordinates(p)? else {
            return Err(Error::precondition_with(
                "every point must lie in the lattice",
                p.to_string(),
            ));
        };
        if !t.iter().all(is_integral) {
            return Err(Error::precondition_with(
                "every point must lie in the lattice",
                p.to_string(),
            ));
        }
        let class = parity_class(&t)?;
        if let Some(&other) = seen.get(&class) {
            let first = distinct[other].clone();
            let midpoint = first.midpoint(p);
            debug_assert!(lat.contains(&midpoint)?);
            return Ok(Some(ParityPair {
                first,
                second: p.clone(),
                midpoint,
            }));
        }
        distinct.push(p);
        seen.insert(class, distinct.len() - 1);
    }
    Ok(None)
}

/// The cube-vertex witness family over `{0,1}^d`: the `2^d` members
/// `{0,1}^d` minus one vertex each. Its total intersection is empty while
/// every proper subfamily intersects, so the Helly number of `Z^d` is at
/// least `2^d`. Each member is S-convex because the missing vertex is an
/// extreme point of the cube (fully revalidated for small `d`).
pub fn doignon_family<S: Scalar>(d: usize, cap: usize) -> Result<SConvexFamily<S>> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if d > cap {
        return Err(Error::CapExceeded { size: d, cap });
    }
    let n = 1usize << d;
    let mut points = Vec::with_capacity(n);
    for bits in 0..n {
        let coords: Vec<i64> = (0..d).map(|k| ((bits >> k) & 1) as i64).collect();
        points.push(Point::from_ints(&coords));
    }
    let universe = FinitePointSet::new(d, points)?;
    let mut members = Vec::with_capacity(n);
    for missing in 0..n {
        let mut without = SubsetMask::empty(n);
        for i in 0..n {
            if i != missing {
                without.insert(i);
            }
        }
        members.push(without);
    }
    if d <= 6 {
        SConvexFamily::new(universe, members)
    } else {
        Ok(SConvexFamily::new_unchecked(universe, members))
    }
}

/// Axis-aligned rational box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRegion<S> {
    pub lo: Point<S>,
    pub hi: Point<S>,
}

impl<S: Scalar> BoxRegion<S> {
    pub fn new(lo: Point<S>, hi: Point<S>) -> Result<Self> {
        if lo.dim() != hi.dim() {
            return Err(Error::DimensionMismatch {
                expected: lo.dim(),
                got: hi.dim(),
            });
        }
        if lo.coords().iter().zip(hi.coords()).any(|(a, b)| a > b) {
            return Err(Error::precondition("box lower corner must not exceed upper"));
        }
        Ok(BoxRegion { lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn to_polyhedron(&self) -> Result<HPolyhedron<S>> {
        HPolyhedron::bounding_box(&self.lo, &self.hi)
    }
}

/// Exact coordinate range of a bounded polyhedron.
fn coordinate_bounds<S: Scalar>(p: &HPolyhedron<S>) -> Result<Option<(Vec<S>, Vec<S>)>> {
    let d = p.ambient_dim();
    let mut lo = Vec::with_capacity(d);
    let mut hi = Vec::with_capacity(d);
    for k in 0..d {
        let mut e = vec![S::zero(); d];
        e[k] = S::one();
        match solve_lp(&e, Sense::Max, p.constraints())? {
            LpResult::Optimal { value, .. } => hi.push(value),
            LpResult::Unbounded { .. } => return Ok(None),
            LpResult::Infeasible { .. } => return Err(Error::EmptyPolyhedron),
            LpResult::InfimumUnattained { .. } => {
                return Err(Error::Internal("nonstrict LP cannot be unattained".into()))
            }
        }
        match solve_lp(&e, Sense::Min, p.constraints())? {
            LpResult::Optimal { value, .. } => lo.push(value),
            LpResult::Unbounded { .. } => return Ok(None),
            _ => return Err(Error::Internal("bound LP in an unexpected state".into())),
        }
    }
    Ok(Some((lo, hi)))
}

/// The truncated Minkowski sum `(lat + c) /\ d_region`, materialized as the
/// finite union of pieces `(z + c) /\ d_region` over lattice points `z`
/// for which `z + c` meets the window.
pub fn minkowski_truncation<S: Scalar>(
    c: &HPolyhedron<S>,
    lat: &Lattice<S>,
    d_region: &HPolyhedron<S>,
    window: &BoxRegion<S>,
) -> Result<PolytopeUnion<S>> {
    let d = c.ambient_dim();
    if lat.ambient_dim() != d || d_region.ambient_dim() != d || window.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: lat.ambient_dim(),
        });
    }
    let Some((c_lo, c_hi)) = coordinate_bounds(c)? else {
        return Err(Error::precondition(
            "the summand polytope must be bounded",
        ));
    };

    // bounding-box arithmetic: z + c meets the window only if z lies in
    // window - bbox(c)
    let shift_lo: Vec<S> = window
        .lo
        .coords()
        .iter()
        .zip(&c_hi)
        .map(|(w, ch)| w.clone() - ch.clone())
        .collect();
    let shift_hi: Vec<S> = window
        .hi
        .coords()
        .iter()
        .zip(&c_lo)
        .map(|(w, cl)| w.clone() - cl.clone())
        .collect();

    // enumerate candidate lattice coordinates by bounding each coordinate
    // of t over { B t in [shift_lo, shift_hi] }
    let r = lat.rank();
    let mut pieces = Vec::new();
    if r == 0 {
        let z = Point::origin(d);
        push_piece(c, &z, d_region, window, &mut pieces)?;
    } else {
        let mut box_rows = Vec::with_capacity(2 * d);
        for k in 0..d {
            let row: Vec<S> = lat.basis().iter().map(|b| b[k].clone()).collect();
            box_rows.push(LinearConstraint::new(row.clone(), shift_hi[k].clone(), false));
            box_rows.push(LinearConstraint::new(
                row.iter().map(|v| -v.clone()).collect(),
                -shift_lo[k].clone(),
                false,
            ));
        }
        let mut t_lo = Vec::with_capacity(r);
        let mut t_hi = Vec::with_capacity(r);
        for j in 0..r {
            let mut e = vec![S::zero(); r];
            e[j] = S::one();
            let hi = match solve_lp(&e, Sense::Max, &box_rows)? {
                LpResult::Optimal { value, .. } => value,
                LpResult::Infeasible { .. } => return PolytopeUnion::new(d, Vec::new()),
                other => {
                    return Err(Error::precondition(format!(
                        "candidate coordinate range must be bounded, got {other:?}"
                    )))
                }
            };
            let lo = match solve_lp(&e, Sense::Min, &box_rows)? {
                LpResult::Optimal { value, .. } => value,
                other => {
                    return Err(Error::precondition(format!(
                        "candidate coordinate range must be bounded, got {other:?}"
                    )))
                }
            };
            t_lo.push(floor_i64(&lo)?);
            t_hi.push(ceil_i64(&hi)?);
        }
        let mut t = t_lo.clone();
        'grid: loop {
            let z = lat.point_from_coordinates(&t)?;
            push_piece(c, &z, d_region, window, &mut pieces)?;
            let mut j = 0;
            loop {
                if j == r {
                    break 'grid;
                }
                if t[j] < t_hi[j] {
                    t[j] += 1;
                    for jj in 0..j {
                        t[jj] = t_lo[jj];
                    }
                    break;
                }
                j += 1;
            }
        }
    }
    PolytopeUnion::new(d, pieces)
}

fn push_piece<S: Scalar>(
    c: &HPolyhedron<S>,
    z: &Point<S>,
    d_region: &HPolyhedron<S>,
    window: &BoxRegion<S>,
    pieces: &mut Vec<HPolyhedron<S>>,
) -> Result<()> {
    let shifted = c.translate(z);
    // keep the piece only when z + c meets the window
    let meets_window = shifted.intersect(&window.to_polyhedron()?)?;
    if !meets_window.is_nonempty()? {
        return Ok(());
    }
    let piece = shifted.intersect(d_region)?;
    if piece.is_nonempty()? {
        pieces.push(piece.cleaned());
    }
    Ok(())
}

/// Exact floor into i64 by doubling search; loud error past the i64 range.
fn floor_i64<S: Scalar>(v: &S) -> Result<i64> {
    if v.is_negative() {
        let up = ceil_i64(&-v.clone())?;
        return Ok(-up);
    }
    let mut k: i64 = 0;
    let mut step: i64 = 1;
    loop {
        let next = k
            .checked_add(step)
            .ok_or_else(|| Error::Internal("coordinate bound out of i64 range".into()))?;
        if int::<S>(next) <= *v {
            k = next;
            step = step
                .checked_mul(2)
                .ok_or_else(|| Error::Internal("coordinate bound out of i64 range".into()))?;
        } else if step == 1 {
            return Ok(k);
        } else {
            step = 1;
        }
    }
}

fn ceil_i64<S: Scalar>(v: &S) -> Result<i64> {
    let f = floor_i64(v)?;
    Ok(if int::<S>(f) == *v { f } else { f + 1 })
}

/// Mixed-integer ground set `(Z^d x R^n) /\ C`.
#[derive(Debug, Clone)]
pub struct MixedIntegerGround<S> {
    pub integer_dim: usize,
    pub continuous_dim: usize,
    pub constraint: HPolyhedron<S>,
}

impl<S: Scalar> MixedIntegerGround<S> {
    pub fn new(
        integer_dim: usize,
        continuous_dim: usize,
        constraint: HPolyhedron<S>,
    ) -> Result<Self> {
        if integer_dim == 0 {
            return Err(Error::precondition(
                "mixed-integer ground set needs at least one integer coordinate",
            ));
        }
        if constraint.ambient_dim() != integer_dim + continuous_dim {
            return Err(Error::DimensionMismatch {
                expected: integer_dim + continuous_dim,
                got: constraint.ambient_dim(),
            });
        }
        Ok(MixedIntegerGround {
            integer_dim,
            continuous_dim,
            constraint,
        })
    }

    /// Unconstrained ground set `Z^d x R^n`.
    pub fn free(integer_dim: usize, continuous_dim: usize) -> Result<Self> {
        MixedIntegerGround::new(
            integer_dim,
            continuous_dim,
            HPolyhedron::whole_space(integer_dim + continuous_dim),
        )
    }
}

/// Report of a mixed-integer freeness check.
#[derive(Debug, Clone)]
pub struct MixedIntegerReport<S> {
    /// Violating ground point (in the full d+n space) when not free.
    pub violation: Option<Point<S>>,
    pub facet_count: usize,
    /// The facet bound `2^d`.
    pub facet_bound: u64,
}

/// Is `int(l)` disjoint from `(Z^d x R^n) /\ C`? Decided by projecting the
/// mixed system `int(l) /\ C` onto the integer coordinates and testing the
/// projection for integer points: exact enumeration when bounded, explicit
/// slab/cylinder certificates otherwise, and a loud refusal for anything
/// the projector cannot certify.
pub fn mixed_integer_sfree_check<S: Scalar>(
    l: &HPolyhedron<S>,
    ground: &MixedIntegerGround<S>,
) -> Result<MixedIntegerReport<S>> {
    let d = ground.integer_dim;
    let n = ground.continuous_dim;
    if l.ambient_dim() != d + n {
        return Err(Error::DimensionMismatch {
            expected: d + n,
            got: l.ambient_dim(),
        });
    }

    // int(l) /\ C as a mixed system in d+n variables
    let mut rows: Vec<LinearConstraint<S>> = l
        .constraints()
        .iter()
        .map(LinearConstraint::strict_version)
        .collect();
    rows.extend(ground.constraint.constraints().iter().cloned());

    let projected = if n == 0 {
        rows.clone()
    } else {
        crate::ratgeom::eliminate_vars(d + n, &rows, &(d..d + n).collect::<Vec<_>>())?
    };

    let integer_point = find_integer_point(d, &projected)?;
    let violation = match integer_point {
        None => None,
        Some(z) => {
            // lift back to the full space: fix the integer block and find a
            // continuous completion
            if n == 0 {
                Some(z)
            } else {
                let mut lifted_rows: Vec<LinearConstraint<S>> = Vec::new();
                for c in &rows {
                    let shift: S = c.normal[..d]
                        .iter()
                        .zip(z.coords())
                        .map(|(a, b)| a.clone() * b.clone())
                        .fold(S::zero(), |acc, v| acc + v);
                    lifted_rows.push(LinearConstraint::new(
                        c.normal[d..].to_vec(),
                        c.bound.clone() - shift,
                        c.strict,
                    ));
                }
                match crate::ratgeom::feasible_point(n, &lifted_rows)? {
                    crate::ratgeom::Feasibility::Feasible(y) => {
                        let mut coords = z.into_coords();
                        coords.extend(y.into_coords());
                        Some(Point::new(coords))
                    }
                    crate::ratgeom::Feasibility::Infeasible(_) => {
                        return Err(Error::Internal(
                            "projected integer point must lift to the full space".into(),
                        ))
                    }
                }
            }
        }
    };

    let facet_count = if l.is_nonempty()? { l.facets()?.len() } else { 0 };
    Ok(MixedIntegerReport {
        violation,
        facet_count,
        facet_bound: 1u64 << d.min(62),
    })
}

/// Find an integer point of a mixed strict/nonstrict region, or certify
/// there is none. Supported shapes: empty regions, regions whose nontrivial
/// constraints involve a coordinate subset on which the region is bounded
/// (axis-aligned cylinders over bounded bases, including the fully bounded
/// case), and slabs whose constraint normals are all parallel.
fn find_integer_point<S: Scalar>(
    d: usize,
    rows: &[LinearConstraint<S>],
) -> Result<Option<Point<S>>> {
    if !crate::ratgeom::feasible_point(d, rows)?.is_feasible() {
        return Ok(None);
    }
    let active: Vec<&LinearConstraint<S>> =
        rows.iter().filter(|c| !c.is_zero_normal()).collect();
    if active.is_empty() {
        // whole space
        return Ok(Some(Point::origin(d)));
    }

    // coordinates actually involved
    let support: Vec<usize> = (0..d)
        .filter(|&k| active.iter().any(|c| !c.normal[k].is_zero()))
        .collect();

    // restrict to the support coordinates and try bounded enumeration there
    let restricted: Vec<LinearConstraint<S>> = active
        .iter()
        .map(|c| {
            LinearConstraint::new(
                support.iter().map(|&k| c.normal[k].clone()).collect(),
                c.bound.clone(),
                c.strict,
            )
        })
        .collect();
    let closure = HPolyhedron::new(
        support.len(),
        restricted.iter().map(LinearConstraint::closure).collect(),
    )?;
    if let Some((lo, hi)) = coordinate_bounds(&closure)? {
        // bounded base: enumerate the integer grid
        let lo_i: Vec<i64> = lo.iter().map(ceil_i64).collect::<Result<_>>()?;
        let hi_i: Vec<i64> = hi.iter().map(floor_i64).collect::<Result<_>>()?;
        if lo_i.iter().zip(&hi_i).any(|(a, b)| a > b) {
            return Ok(None);
        }
        let mut t = lo_i.clone();
        'grid: loop {
            let candidate = Point::from_ints(&t);
            if restricted.iter().all(|c| c.satisfied_by(&candidate)) {
                let mut full = vec![S::zero(); d];
                for (pos, &k) in support.iter().enumerate() {
                    full[k] = candidate.coords()[pos].clone();
                }
                return Ok(Some(Point::new(full)));
            }
            let mut j = 0;
            loop {
                if j == support.len() {
                    break 'grid;
                }
                if t[j] < hi_i[j] {
                    t[j] += 1;
                    for jj in 0..j {
                        t[jj] = lo_i[jj];
                    }
                    break;
                }
                j += 1;
            }
        }
        return Ok(None);
    }

    // slab certificate: all normals parallel to one primitive integer vector
    if let Some(direction) = common_direction(&restricted) {
        // the value <direction, x> ranges over all integers on Z^support
        // (the direction is primitive), so integer solvability reduces to a
        // one-dimensional mixed system in that value
        let mut value_rows: Vec<LinearConstraint<S>> = Vec::new();
        for c in &restricted {
            let scale = scale_on_direction(&c.normal, &direction)?;
            value_rows.push(LinearConstraint::new(
                vec![scale],
                c.bound.clone(),
                c.strict,
            ));
        }
        // find an integral value in the interval
        let closure_1d = HPolyhedron::new(
            1,
            value_rows.iter().map(LinearConstraint::closure).collect(),
        )?;
        let Some((lo, hi)) = coordinate_bounds(&closure_1d)? else {
            // halfspace or whole line in the value: integers always exist
            let m = find_any_feasible_integer_value(&value_rows)?;
            return Ok(Some(integer_point_with_value(d, &support, &direction, m)?));
        };
        let lo_i = ceil_i64(&lo[0])?;
        let hi_i = floor_i64(&hi[0])?;
        for m in lo_i..=hi_i {
            let candidate = Point::from_ints(&[m]);
            if value_rows.iter().all(|c| c.satisfied_by(&candidate)) {
                return Ok(Some(integer_point_with_value(d, &support, &direction, m)?));
            }
        }
        return Ok(None);
    }

    Err(Error::UnsupportedShape(
        "projection is neither bounded on its support nor a parallel-normal slab".into(),
    ))
}

/// If all normals are rational multiples of one vector, return that vector
/// scaled to coprime integers.
fn common_direction<S: Scalar>(rows: &[LinearConstraint<S>]) -> Option<Vec<S>> {
    let mut direction: Option<Vec<S>> = None;
    for c in rows {
        match &direction {
            None => {
                let mut v = c.normal.clone();
                crate::ratgeom::normalize_primitive(&mut v);
                // orient: first nonzero entry positive
                if let Some(first) = v.iter().find(|x| !x.is_zero()) {
                    if first.is_negative() {
                        for x in v.iter_mut() {
                            *x = -x.clone();
                        }
                    }
                }
                direction = Some(v);
            }
            Some(dir) => {
                if scale_on_direction(&c.normal, dir).is_err() {
                    return None;
                }
            }
        }
    }
    direction
}

/// The factor lambda with `normal = lambda * direction`.
fn scale_on_direction<S: Scalar>(normal: &[S], direction: &[S]) -> Result<S> {
    let k = direction
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Internal("zero direction".into()))?;
    let lambda = normal[k].clone() / direction[k].clone();
    for (a, b) in normal.iter().zip(direction) {
        if a.clone() != lambda.clone() * b.clone() {
            return Err(Error::Internal("normals are not parallel".into()));
        }
    }
    Ok(lambda)
}

/// Any integer m satisfying a one-variable mixed system that is unbounded on
/// at least one side.
fn find_any_feasible_integer_value<S: Scalar>(rows: &[LinearConstraint<S>]) -> Result<i64> {
    for radius in 0..10_000i64 {
        for m in [radius, -radius] {
            let candidate = Point::from_ints(&[m]);
            if rows.iter().all(|c| c.satisfied_by(&candidate)) {
                return Ok(m);
            }
        }
    }
    Err(Error::Internal(
        "one-sided slab must contain an integer value nearby".into(),
    ))
}

/// An integer point of `Z^d` with `<direction, x> = value` (the direction is
/// primitive on the support coordinates).
fn integer_point_with_value<S: Scalar>(
    d: usize,
    support: &[usize],
    direction: &[S],
    value: i64,
) -> Result<Point<S>> {
    // primitive integer vector: extended gcd gives integral coefficients
    let dir_ints: Vec<i64> = direction
        .iter()
        .map(|c| {
            let (num, den) = c.to_fraction();
            if den != "1" {
                return Err(Error::Internal("direction must be integral".into()));
            }
            num.parse::<i64>()
                .map_err(|_| Error::Internal("direction entry out of range".into()))
        })
        .collect::<Result<_>>()?;
    let (g, coeffs) = extended_gcd_vec(&dir_ints);
    if g == 0 || value % g != 0 {
        return Err(Error::Internal(
            "requested value is not a multiple of the direction gcd".into(),
        ));
    }
    let factor = value / g;
    let mut full = vec![S::zero(); d];
    for (pos, &k) in support.iter().enumerate() {
        full[k] = int(coeffs[pos] * factor);
    }
    Ok(Point::new(full))
}

/// gcd of a vector with Bezout coefficients.
fn extended_gcd_vec(values: &[i64]) -> (i64, Vec<i64>) {
    let mut g: i64 = 0;
    let mut coeffs = vec![0i64; values.len()];
    for (i, &v) in values.iter().enumerate() {
        if v == 0 {
            continue;
        }
        if g == 0 {
            g = v.abs();
            coeffs[i] = v.signum();
            continue;
        }
        let (ng, a, b) = extended_gcd(g, v);
        for c in coeffs.iter_mut() {
            *c *= a;
        }
        coeffs[i] = b;
        g = ng;
    }
    (g, coeffs)
}

fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a.abs(), a.signum(), 0);
    }
    let (g, x, y) = extended_gcd(b, a.rem_euclid(b));
    (g, y, x - (a.div_euclid(b)) * y)
}

/// How a reported quantity was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Exact,
    LowerBound,
    CertificateOnly,
}

impl Provenance {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::Exact => "exact",
            Provenance::LowerBound => "lower-bound",
            Provenance::CertificateOnly => "certificate-only",
        }
    }
}

/// One reported quantity with its applicable bound.
#[derive(Debug, Clone)]
pub struct Quantity {
    pub name: String,
    pub value: u64,
    pub provenance: Provenance,
    pub bound_name: String,
    pub bound: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Violation,
}

/// Instance-level comparison of computed quantities against the applicable
/// bounds. A violation can only come from a certified quantity exceeding
/// its bound.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub instance: String,
    pub quantities: Vec<Quantity>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn from_quantities(
        instance: impl Into<String>,
        quantities: Vec<Quantity>,
        notes: Vec<String>,
    ) -> Self {
        let verdict = if quantities.iter().any(|q| q.value > q.bound) {
            Verdict::Violation
        } else {
            Verdict::Consistent
        };
        BoundReport {
            instance: instance.into(),
            quantities,
            verdict,
            notes,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("instance: {}\n", self.instance));
        out.push_str(&format!(
            "{:<34} {:>10} {:<17} {:>10} verdict\n",
            "quantity", "value", "provenance", "bound"
        ));
        for q in &self.quantities {
            out.push_str(&format!(
                "{:<34} {:>10} {:<17} {:>10} {}\n",
                q.name,
                q.value,
                q.provenance.tag(),
                q.bound,
                if q.value <= q.bound { "ok" } else { "VIOLATION" }
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            match self.verdict {
                Verdict::Consistent => "consistent",
                Verdict::Violation => "VIOLATION",
            }
        ));
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

/// Bound-verification instances.
#[derive(Debug, Clone)]
pub enum VerifyInstance<S> {
    /// Exact Helly number of a finite set against a reference bound. When
    /// the set is a box truncation of `Z^d` the bound is `2^d`; otherwise
    /// the cardinality bound applies.
    FiniteS {
        points: FinitePointSet<S>,
        lattice_truncation: bool,
    },
    /// Certificate search over a Minkowski truncation: seeded maximalization
    /// against sampled points, certified against the full union; certified
    /// facet counts must respect `2^rank`.
    MinkowskiTruncation {
        c: HPolyhedron<S>,
        lattice: Lattice<S>,
        d_region: HPolyhedron<S>,
        window: BoxRegion<S>,
        seeds: u64,
    },
    /// Mixed-integer split check: freeness plus facet count against `2^d`.
    MixedInteger {
        l: HPolyhedron<S>,
        ground: MixedIntegerGround<S>,
    },
}

/// Run one instance and compare against the applicable bounds.
pub fn verify_bounds<S: Scalar>(
    instance: &VerifyInstance<S>,
    enum_cap: usize,
    seed: u64,
) -> Result<BoundReport> {
    match instance {
        VerifyInstance::FiniteS {
            points,
            lattice_truncation,
        } => {
            let (h, _) = crate::sconvex::helly_number(points, enum_cap)?;
            let d = points.ambient_dim();
            let (bound_name, bound) = if *lattice_truncation {
                (format!("2^{d} (lattice truncation)"), 1u64 << d.min(62))
            } else {
                ("|S| (cardinality bound)".to_string(), points.len() as u64)
            };
            Ok(BoundReport::from_quantities(
                format!("finite-s ({} points in dim {d})", points.len()),
                vec![Quantity {
                    name: "helly number".into(),
                    value: h as u64,
                    provenance: Provenance::Exact,
                    bound_name,
                    bound,
                }],
                Vec::new(),
            ))
        }
        VerifyInstance::MinkowskiTruncation {
            c,
            lattice,
            d_region,
            window,
            seeds,
        } => {
            let union = minkowski_truncation(c, lattice, d_region, window)?;
            let report =
                minkowski_certificate_search(&union, lattice.rank(), *seeds, seed)?;
            Ok(report)
        }
        VerifyInstance::MixedInteger { l, ground } => {
            let report = mixed_integer_sfree_check(l, ground)?;
            let mut notes = vec![format!(
                "helly-side reference: (n+1)*2^d = {}",
                (ground.continuous_dim as u64 + 1) * (1u64 << ground.integer_dim.min(62))
            )];
            let free = report.violation.is_none();
            if let Some(p) = &report.violation {
                notes.push(format!("not free: ground point {p} interior to the set"));
            }
            let quantities = if free {
                vec![Quantity {
                    name: "facets of the free set".into(),
                    value: report.facet_count as u64,
                    provenance: Provenance::Exact,
                    bound_name: format!("2^{}", ground.integer_dim),
                    bound: report.facet_bound,
                }]
            } else {
                Vec::new()
            };
            Ok(BoundReport::from_quantities(
                format!(
                    "mixed-integer (d={}, n={}) {}",
                    ground.integer_dim,
                    ground.continuous_dim,
                    if free { "free" } else { "not free" }
                ),
                quantities,
                notes,
            ))
        }
    }
}

/// Randomized certificate search over a polytope union: sample the pieces'
/// vertices as a finite ground set, maximalize random seed systems, keep
/// the outputs that are free for the whole union, and certify them. Facet
/// counts of certified-maximal outputs are exact per-instance certificates;
/// the maximum found is only a lower bound on what is attainable.
fn minkowski_certificate_search<S: Scalar>(
    union: &PolytopeUnion<S>,
    lattice_rank: usize,
    seeds: u64,
    seed: u64,
) -> Result<BoundReport> {
    use rand::Rng;
    use rand::SeedableRng;

    let d = union.ambient_dim();
    let mut sample_points: Vec<Point<S>> = Vec::new();
    for piece in union.pieces() {
        for v in vertices(piece)? {
            if !sample_points.contains(&v) {
                sample_points.push(v);
            }
        }
    }
    if sample_points.is_empty() {
        return Err(Error::precondition(
            "certificate search needs at least one piece vertex",
        ));
    }
    let finite = FinitePointSet::new(d, sample_points)?;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut certified_max_facets: u64 = 0;
    let mut certified_runs = 0u64;
    let bound = 1u64 << lattice_rank.min(62);
    for _ in 0..seeds {
        // random small strict seed around a random sample point
        let center = &finite.points()[rng.gen_range(0..finite.len())];
        let m = rng.gen_range(2..=(2 * d + 2));
        let mut rows = Vec::with_capacity(m);
        for _ in 0..m {
            let mut normal: Vec<S> = (0..d).map(|_| int(rng.gen_range(-2i64..=2))).collect();
            if normal.iter().all(|c| c.is_zero()) {
                normal[rng.gen_range(0..d)] = S::one();
            }
            let offset: S = int::<S>(rng.gen_range(1i64..=3)) / int::<S>(4);
            let bound_val = crate::ratgeom::dot(&normal, center.coords()) + offset;
            rows.push(LinearConstraint::new(normal, bound_val, true));
        }
        let Ok(sys) = crate::ratgeom::StrictSystem::new(d, rows) else {
            continue;
        };
        let Ok(result) = crate::sfree::maximalize_finite(&sys, &finite, None) else {
            continue;
        };
        let ground = crate::sfree::GroundSet::Union(union.clone());
        if crate::sfree::is_s_free(&result.polyhedron, &ground)?.is_some() {
            continue;
        }
        if result.polyhedron.dim()? != d as i64 {
            continue;
        }
        let cert = crate::sfree::maximality_certificate(&result.polyhedron, &ground)?;
        if cert.is_maximal() {
            certified_runs += 1;
            certified_max_facets =
                certified_max_facets.max(result.polyhedron.facets()?.len() as u64);
        }
    }
    let mut notes = vec![format!(
        "{certified_runs} certified-maximal sets found over {seeds} seeds"
    )];
    let quantities = if certified_runs > 0 {
        vec![Quantity {
            name: "max facets over certified sets".into(),
            value: certified_max_facets,
            provenance: Provenance::CertificateOnly,
            bound_name: format!("2^rank = 2^{lattice_rank}"),
            bound,
        }]
    } else {
        notes.push("no certified-maximal set found; nothing to compare".into());
        Vec::new()
    };
    Ok(BoundReport::from_quantities(
        format!(
            "minkowski-truncation ({} pieces, rank {lattice_rank})",
            union.pieces().len()
        ),
        quantities,
        notes,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn q(p: i64, d: i64) -> Q {
        int::<Q>(p) / int::<Q>(d)
    }

    fn le(normal: &[i64], bound: i64) -> LinearConstraint<Q> {
        LinearConstraint::from_ints(normal, bound, false)
    }

    #[test]
    fn lattice_membership_standard() {
        let lat = Lattice::<Q>::standard(2).unwrap();
        assert!(lat.contains(&Point::from_ints(&[3, -4])).unwrap());
        assert!(!lat.contains(&Point::new(vec![q(1, 2), Q::zero()])).unwrap());
        assert_eq!(lat.rank(), 2);
    }

    #[test]
    fn lattice_rank_one_in_plane() {
        let lat = Lattice::<Q>::new(2, vec![vec![int(1), Q::zero()]]).unwrap();
        assert_eq!(lat.rank(), 1);
        assert!(lat.contains(&Point::from_ints(&[5, 0])).unwrap());
        assert!(!lat.contains(&Point::from_ints(&[0, 1])).unwrap());
        assert!(!lat.contains(&Point::new(vec![q(1, 2), Q::zero()])).unwrap());
    }

    #[test]
    fn lattice_rejects_dependent_basis() {
        assert!(Lattice::<Q>::new(
            2,
            vec![vec![int(1), int(1)], vec![int(2), int(2)]]
        )
        .is_err());
    }

    #[test]
    fn parity_pair_on_a_line() {
        let lat = Lattice::<Q>::standard(1).unwrap();
        let x: Vec<Point<Q>> = [0i64, 1, 2].iter().map(|&v| Point::from_ints(&[v])).collect();
        let pair = parity_pair(&x, &lat).unwrap().unwrap();
        assert_eq!(pair.first, Point::from_ints(&[0]));
        assert_eq!(pair.second, Point::from_ints(&[2]));
        assert_eq!(pair.midpoint, Point::from_ints(&[1]));
    }

    #[test]
    fn parity_pair_first_collision_wins() {
        let lat = Lattice::<Q>::standard(2).unwrap();
        let x: Vec<Point<Q>> = [[0, 0], [2, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|c| Point::from_ints(&[c[0], c[1]]))
            .collect();
        let pair = parity_pair(&x, &lat).unwrap().unwrap();
        assert_eq!(pair.first, Point::from_ints(&[0, 0]));
        assert_eq!(pair.second, Point::from_ints(&[2, 0]));
        assert_eq!(pair.midpoint, Point::from_ints(&[1, 0]));
    }

    #[test]
    fn parity_pair_none_when_classes_distinct() {
        let lat = Lattice::<Q>::standard(2).unwrap();
        let x: Vec<Point<Q>> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|c| Point::from_ints(&[c[0], c[1]]))
            .collect();
        assert!(parity_pair(&x, &lat).unwrap().is_none());
    }

    #[test]
    fn parity_pair_rejects_outside_points() {
        let lat = Lattice::<Q>::standard(1).unwrap();
        let x = vec![Point::new(vec![q(1, 2)])];
        assert!(matches!(
            parity_pair(&x, &lat).unwrap_err(),
            Error::Precondition { .. }
        ));
    }

    #[test]
    fn doignon_family_small_dims() {
        for d in 1..=3usize {
            let fam = doignon_family::<Q>(d, DEFAULT_DOIGNON_CAP).unwrap();
            let n = 1usize << d;
            assert_eq!(fam.len(), n);
            // total intersection empty
            let mut total = SubsetMask::full(n);
            for m in fam.members() {
                total = total.and(m);
            }
            assert!(total.is_empty());
            // every leave-one-out subfamily intersects
            for skip in 0..n {
                let mut inter = SubsetMask::full(n);
                for (i, m) in fam.members().iter().enumerate() {
                    if i != skip {
                        inter = inter.and(m);
                    }
                }
                assert!(!inter.is_empty());
            }
            // and the family value is exactly 2^d
            let (h, w) = crate::sconvex::helly_number_family(&fam).unwrap();
            assert_eq!(h, n);
            assert!(w.unwrap().validate(&fam));
        }
    }

    #[test]
    fn doignon_cap_enforced() {
        assert!(matches!(
            doignon_family::<Q>(11, DEFAULT_DOIGNON_CAP).unwrap_err(),
            Error::CapExceeded { .. }
        ));
    }

    #[test]
    fn minkowski_segments_on_a_line_lattice() {
        // c = {0} x [0, 1/2], lattice Z x {0}, region = window = [-1,1]^2
        let c = HPolyhedron::new(
            2,
            vec![
                le(&[1, 0], 0),
                le(&[-1, 0], 0),
                LinearConstraint::new(vec![Q::zero(), int(1)], q(1, 2), false),
                le(&[0, -1], 0),
            ],
        )
        .unwrap();
        let lat = Lattice::new(2, vec![vec![int(1), Q::zero()]]).unwrap();
        let region = HPolyhedron::bounding_box(
            &Point::from_ints(&[-1, -1]),
            &Point::from_ints(&[1, 1]),
        )
        .unwrap();
        let window =
            BoxRegion::new(Point::from_ints(&[-1, -1]), Point::from_ints(&[1, 1])).unwrap();
        let union = minkowski_truncation(&c, &lat, &region, &window).unwrap();
        assert_eq!(union.pieces().len(), 3);
    }

    #[test]
    fn minkowski_degenerate_point_summand() {
        let c = HPolyhedron::bounding_box(&Point::from_ints(&[0, 0]), &Point::from_ints(&[0, 0]))
            .unwrap();
        let lat = Lattice::<Q>::standard(2).unwrap();
        let region = HPolyhedron::bounding_box(
            &Point::from_ints(&[0, 0]),
            &Point::from_ints(&[1, 1]),
        )
        .unwrap();
        let window =
            BoxRegion::new(Point::from_ints(&[0, 0]), Point::from_ints(&[1, 1])).unwrap();
        let union = minkowski_truncation(&c, &lat, &region, &window).unwrap();
        assert_eq!(union.pieces().len(), 4);
    }

    #[test]
    fn minkowski_grid_of_squares() {
        let c = HPolyhedron::new(
            2,
            vec![
                LinearConstraint::new(vec![int(1), Q::zero()], q(1, 4), false),
                le(&[-1, 0], 0),
                LinearConstraint::new(vec![Q::zero(), int(1)], q(1, 4), false),
                le(&[0, -1], 0),
            ],
        )
        .unwrap();
        let lat = Lattice::<Q>::standard(2).unwrap();
        let region = HPolyhedron::bounding_box(
            &Point::from_ints(&[0, 0]),
            &Point::from_ints(&[2, 2]),
        )
        .unwrap();
        let window =
            BoxRegion::new(Point::from_ints(&[0, 0]), Point::from_ints(&[2, 2])).unwrap();
        let union = minkowski_truncation(&c, &lat, &region, &window).unwrap();
        assert_eq!(union.pieces().len(), 9);
    }

    #[test]
    fn minkowski_rejects_unbounded_summand() {
        let c = HPolyhedron::new(2, vec![le(&[1, 0], 0)]).unwrap();
        let lat = Lattice::<Q>::standard(2).unwrap();
        let region = HPolyhedron::whole_space(2);
        let window =
            BoxRegion::new(Point::from_ints(&[0, 0]), Point::from_ints(&[1, 1])).unwrap();
        assert!(matches!(
            minkowski_truncation(&c, &lat, &region, &window).unwrap_err(),
            Error::Precondition { .. }
        ));
    }

    #[test]
    fn mixed_integer_split_is_free() {
        // { 0 <= x1 <= 1 } in R^3 with d=2, n=1
        let l = HPolyhedron::new(3, vec![le(&[1, 0, 0], 1), le(&[-1, 0, 0], 0)]).unwrap();
        let ground = MixedIntegerGround::free(2, 1).unwrap();
        let report = mixed_integer_sfree_check(&l, &ground).unwrap();
        assert!(report.violation.is_none());
        assert_eq!(report.facet_count, 2);
        assert_eq!(report.facet_bound, 4);
    }

    #[test]
    fn mixed_integer_open_interval_cylinder_is_free() {
        // [1/4, 3/4] x R with d=1, n=1
        let l = HPolyhedron::new(
            2,
            vec![
                LinearConstraint::new(vec![int(1), Q::zero()], q(3, 4), false),
                LinearConstraint::new(vec![int(-1), Q::zero()], q(-1, 4), false),
            ],
        )
        .unwrap();
        let ground = MixedIntegerGround::free(1, 1).unwrap();
        let report = mixed_integer_sfree_check(&l, &ground).unwrap();
        assert!(report.violation.is_none());
    }

    #[test]
    fn mixed_integer_cross_polytope_traps_origin() {
        let l = HPolyhedron::new(
            2,
            vec![
                le(&[1, 1], 1),
                le(&[1, -1], 1),
                le(&[-1, 1], 1),
                le(&[-1, -1], 1),
            ],
        )
        .unwrap();
        let ground = MixedIntegerGround::free(2, 0).unwrap();
        let report = mixed_integer_sfree_check(&l, &ground).unwrap();
        assert_eq!(report.violation, Some(Point::from_ints(&[0, 0])));
    }

    #[test]
    fn mixed_integer_agrees_with_point_freeness() {
        // n = 0: compare against is_s_free over a window of lattice points
        let candidates = [
            HPolyhedron::bounding_box(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
                .unwrap(),
            HPolyhedron::new(2, vec![le(&[0, 1], 1), le(&[0, -1], 0)]).unwrap(),
            HPolyhedron::bounding_box(&Point::from_ints(&[-1, -1]), &Point::from_ints(&[1, 1]))
                .unwrap(),
        ];
        let mut window_points = Vec::new();
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                window_points.push(Point::from_ints(&[x, y]));
            }
        }
        let window = FinitePointSet::new(2, window_points).unwrap();
        let ground = MixedIntegerGround::free(2, 0).unwrap();
        for l in &candidates {
            let report = mixed_integer_sfree_check(l, &ground).unwrap();
            let by_points = crate::sfree::is_s_free(
                l,
                &crate::sfree::GroundSet::Points(window.clone()),
            )
            .unwrap();
            assert_eq!(report.violation.is_none(), by_points.is_none());
        }
    }

    #[test]
    fn mixed_integer_refuses_uncertifiable_shapes() {
        // open halfplane rotated: projection unbounded, normals not parallel
        let l = HPolyhedron::new(2, vec![le(&[1, 1], 0), le(&[1, -2], 0)]).unwrap();
        let ground = MixedIntegerGround::free(2, 0).unwrap();
        // the projection is a cone: not bounded, not a slab; the check must
        // either answer correctly (violating point exists here) or refuse;
        // for this cone the origin is on the boundary, interior misses it
        let result = mixed_integer_sfree_check(&l, &ground);
        match result {
            Ok(report) => {
                // if supported, the answer must be a genuine violation
                if let Some(p) = report.violation {
                    assert!(l.interior_contains(&p));
                }
            }
            Err(Error::UnsupportedShape(_)) => {}
            Err(other) => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn verify_finite_s_truncation() {
        let mut rows = Vec::new();
        for x in -1i64..=1 {
            for y in -1i64..=1 {
                rows.push(Point::from_ints(&[x, y]));
            }
        }
        let points = FinitePointSet::<Q>::new(2, rows).unwrap();
        let report = verify_bounds(
            &VerifyInstance::FiniteS {
                points,
                lattice_truncation: true,
            },
            crate::sconvex::DEFAULT_ENUM_CAP,
            0,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Consistent);
        assert_eq!(report.quantities[0].value, 4);
        assert_eq!(report.quantities[0].bound, 4);
    }

    #[test]
    fn verify_mixed_integer_split() {
        let l = HPolyhedron::new(3, vec![le(&[1, 0, 0], 1), le(&[-1, 0, 0], 0)]).unwrap();
        let ground = MixedIntegerGround::free(2, 1).unwrap();
        let report = verify_bounds(
            &VerifyInstance::MixedInteger { l, ground },
            crate::sconvex::DEFAULT_ENUM_CAP,
            0,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Consistent);
        assert_eq!(report.quantities[0].value, 2);
    }
}
