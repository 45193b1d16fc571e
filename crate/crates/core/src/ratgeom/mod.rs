//! Exact rational linear algebra and polyhedral primitives.
//!
//! Everything here is representation-first: polyhedra are finite systems of
//! linear inequalities `<u,x> <= b` (or `< b` for strict systems) with exact
//! scalar data, and every answer that matters carries a certificate that can
//! be replayed by substitution.

mod faces;
mod hull;
mod lp;
mod project;
mod vertices;

pub use faces::{matrix_rank, Facet, RelintPoint};
pub use hull::{caratheodory_decompose, in_convex_hull, CaratheodoryResult};
pub use lp::{
    check_infeasibility_certificate, feasible_point, solve_lp, Feasibility, LpResult, Sense,
};
pub use project::eliminate_vars;
pub use vertices::vertices;

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// A point of the ambient space, stored as exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Point<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Point { coords }
    }

    pub fn origin(dim: usize) -> Self {
        Point {
            coords: vec![S::zero(); dim],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn dot(&self, other: &[S]) -> S {
        dot(&self.coords, other)
    }

    pub fn add(&self, other: &Point<S>) -> Point<S> {
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Point<S>) -> Point<S> {
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, factor: &S) -> Point<S> {
        Point::new(
            self.coords
                .iter()
                .map(|a| a.clone() * factor.clone())
                .collect(),
        )
    }

    pub fn midpoint(&self, other: &Point<S>) -> Point<S> {
        let half = S::one() / int::<S>(2);
        self.add(other).scale(&half)
    }
}

impl<S: Scalar> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Exact inner product.
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x.clone() * y.clone();
    }
    acc
}

/// gcd over rationals: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2). Used to
/// rescale vectors to coprime integer entries.
fn rational_gcd<S: Scalar>(a: &S, b: &S) -> S {
    // Euclidean algorithm works verbatim on rationals with this gcd meaning.
    let mut x = a.abs();
    let mut y = b.abs();
    while !y.is_zero() {
        let q = (x.clone() / y.clone()).floor_int();
        let r = x - q * y.clone();
        x = y;
        y = r;
    }
    x
}

/// Scale a vector by a positive rational so its entries become coprime
/// integers. The zero vector is returned unchanged.
pub fn normalize_primitive<S: Scalar>(values: &mut [S]) {
    let mut g = S::zero();
    for v in values.iter() {
        if !v.is_zero() {
            g = if g.is_zero() {
                v.abs()
            } else {
                rational_gcd(&g, v)
            };
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in values.iter_mut() {
        *v = v.clone() / g.clone();
    }
}

/// One linear inequality `<normal, x> <= bound` (or `< bound` when strict).
///
/// `normal == 0` is allowed and encodes the whole space (satisfiable bound)
/// or the empty set (unsatisfiable bound).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearConstraint<S> {
    pub normal: Vec<S>,
    pub bound: S,
    pub strict: bool,
}

impl<S: Scalar> LinearConstraint<S> {
    pub fn new(normal: Vec<S>, bound: S, strict: bool) -> Self {
        LinearConstraint {
            normal,
            bound,
            strict,
        }
    }

    pub fn from_ints(normal: &[i64], bound: i64, strict: bool) -> Self {
        LinearConstraint {
            normal: normal.iter().map(|&c| int(c)).collect(),
            bound: int(bound),
            strict,
        }
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn eval(&self, x: &Point<S>) -> S {
        dot(&self.normal, x.coords())
    }

    /// Slack `bound - <normal,x>`; nonnegative (positive) iff satisfied
    /// (strictly).
    pub fn slack(&self, x: &Point<S>) -> S {
        self.bound.clone() - self.eval(x)
    }

    pub fn satisfied_by(&self, x: &Point<S>) -> bool {
        let s = self.slack(x);
        if self.strict {
            s > S::zero()
        } else {
            s >= S::zero()
        }
    }

    pub fn tight_at(&self, x: &Point<S>) -> bool {
        self.slack(x).is_zero()
    }

    pub fn is_zero_normal(&self) -> bool {
        self.normal.iter().all(|c| c.is_zero())
    }

    /// A zero-normal constraint that every point satisfies.
    pub fn is_trivially_true(&self) -> bool {
        self.is_zero_normal()
            && if self.strict {
                self.bound > S::zero()
            } else {
                self.bound >= S::zero()
            }
    }

    /// A zero-normal constraint that no point satisfies.
    pub fn is_trivially_false(&self) -> bool {
        self.is_zero_normal() && !self.is_trivially_true()
    }

    pub fn closure(&self) -> LinearConstraint<S> {
        LinearConstraint {
            normal: self.normal.clone(),
            bound: self.bound.clone(),
            strict: false,
        }
    }

    pub fn strict_version(&self) -> LinearConstraint<S> {
        LinearConstraint {
            normal: self.normal.clone(),
            bound: self.bound.clone(),
            strict: true,
        }
    }

    /// The complementary halfspace `<normal,x> >= bound` (strictly when
    /// `strict_negation`), as a `<=` constraint on the negated normal.
    pub fn negation(&self) -> LinearConstraint<S> {
        LinearConstraint {
            normal: self.normal.iter().map(|c| -c.clone()).collect(),
            bound: -self.bound.clone(),
            // complement of `<= b` is `> b`, i.e. strict on the flipped side
            strict: !self.strict,
        }
    }

    /// Canonical form: coefficients scaled to coprime integers. Scaling is
    /// always by a positive rational, which preserves the inequality
    /// direction; zero-normal constraints reduce their bound to -1, 0 or 1.
    pub fn normalize(&mut self) {
        if self.is_zero_normal() {
            let sign = if self.bound > S::zero() {
                S::one()
            } else if self.bound < S::zero() {
                -S::one()
            } else {
                S::zero()
            };
            self.bound = sign;
            return;
        }
        let mut all = self.normal.clone();
        all.push(self.bound.clone());
        normalize_primitive(&mut all);
        self.bound = all.pop().expect("bound present");
        self.normal = all;
    }

    pub fn normalized(&self) -> LinearConstraint<S> {
        let mut c = self.clone();
        c.normalize();
        c
    }
}

impl<S: Scalar> fmt::Display for LinearConstraint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " {} {}", if self.strict { "<" } else { "<=" }, self.bound)
    }
}

/// Closed polyhedron `{ x : <u_i,x> <= b_i for all i }`. An empty constraint
/// list is the whole space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolyhedron<S> {
    ambient_dim: usize,
    constraints: Vec<LinearConstraint<S>>,
}

impl<S: Scalar> HPolyhedron<S> {
    pub fn new(ambient_dim: usize, constraints: Vec<LinearConstraint<S>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for c in &constraints {
            if c.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: c.dim(),
                });
            }
            if c.strict {
                return Err(Error::precondition(
                    "HPolyhedron takes nonstrict constraints only",
                ));
            }
        }
        Ok(HPolyhedron {
            ambient_dim,
            constraints,
        })
    }

    pub fn whole_space(ambient_dim: usize) -> Self {
        HPolyhedron {
            ambient_dim,
            constraints: Vec::new(),
        }
    }

    /// Axis-aligned box `[lo, hi]`.
    pub fn bounding_box(lo: &Point<S>, hi: &Point<S>) -> Result<Self> {
        if lo.dim() != hi.dim() {
            return Err(Error::DimensionMismatch {
                expected: lo.dim(),
                got: hi.dim(),
            });
        }
        let d = lo.dim();
        let mut cs = Vec::with_capacity(2 * d);
        for k in 0..d {
            let mut up = vec![S::zero(); d];
            up[k] = S::one();
            cs.push(LinearConstraint::new(up, hi.coords()[k].clone(), false));
            let mut down = vec![S::zero(); d];
            down[k] = -S::one();
            cs.push(LinearConstraint::new(down, -lo.coords()[k].clone(), false));
        }
        HPolyhedron::new(d, cs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn constraints(&self) -> &[LinearConstraint<S>] {
        &self.constraints
    }

    pub fn contains(&self, x: &Point<S>) -> bool {
        self.constraints.iter().all(|c| c.satisfied_by(x))
    }

    /// Membership in the topological interior (all inequalities strict).
    pub fn interior_contains(&self, x: &Point<S>) -> bool {
        self.constraints
            .iter()
            .all(|c| c.strict_version().satisfied_by(x))
    }

    /// The interior as a strict system.
    pub fn interior_system(&self) -> StrictSystem<S> {
        StrictSystem {
            ambient_dim: self.ambient_dim,
            constraints: self
                .constraints
                .iter()
                .map(LinearConstraint::strict_version)
                .collect(),
        }
    }

    /// Append one constraint, returning a new polyhedron.
    pub fn with_constraint(&self, c: LinearConstraint<S>) -> Result<Self> {
        let mut cs = self.constraints.clone();
        cs.push(c);
        HPolyhedron::new(self.ambient_dim, cs)
    }

    /// Normalized, syntactically deduplicated copy with trivially true
    /// constraints dropped.
    pub fn cleaned(&self) -> Self {
        let mut seen: Vec<LinearConstraint<S>> = Vec::new();
        for c in &self.constraints {
            let n = c.normalized();
            if n.is_trivially_true() {
                continue;
            }
            if !seen.contains(&n) {
                seen.push(n);
            }
        }
        HPolyhedron {
            ambient_dim: self.ambient_dim,
            constraints: seen,
        }
    }

    /// Translate by `shift`: constraints keep normals, bounds move.
    pub fn translate(&self, shift: &Point<S>) -> Self {
        HPolyhedron {
            ambient_dim: self.ambient_dim,
            constraints: self
                .constraints
                .iter()
                .map(|c| {
                    LinearConstraint::new(
                        c.normal.clone(),
                        c.bound.clone() + dot(&c.normal, shift.coords()),
                        false,
                    )
                })
                .collect(),
        }
    }

    /// Intersection: union of the constraint lists.
    pub fn intersect(&self, other: &HPolyhedron<S>) -> Result<Self> {
        if other.ambient_dim != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        let mut cs = self.constraints.clone();
        cs.extend(other.constraints.iter().cloned());
        HPolyhedron::new(self.ambient_dim, cs)
    }
}

impl<S: Scalar> fmt::Display for HPolyhedron<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constraints.is_empty() {
            return write!(f, "{{ R^{} }}", self.ambient_dim);
        }
        write!(f, "{{ ")?;
        for (i, c) in self.constraints.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " }}")
    }
}

/// System of strict inequalities `<u_i,x> < b_i`. Solution set equals the
/// interior of the corresponding closed polyhedron whenever that polyhedron
/// is full-dimensional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictSystem<S> {
    ambient_dim: usize,
    constraints: Vec<LinearConstraint<S>>,
}

impl<S: Scalar> StrictSystem<S> {
    pub fn new(ambient_dim: usize, constraints: Vec<LinearConstraint<S>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for c in &constraints {
            if c.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: c.dim(),
                });
            }
            if !c.strict {
                return Err(Error::precondition(
                    "StrictSystem takes strict constraints only",
                ));
            }
        }
        Ok(StrictSystem {
            ambient_dim,
            constraints,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn constraints(&self) -> &[LinearConstraint<S>] {
        &self.constraints
    }

    pub fn satisfied_by(&self, x: &Point<S>) -> bool {
        self.constraints.iter().all(|c| c.satisfied_by(x))
    }

    /// Closure: the same constraints, nonstrict.
    pub fn closure(&self) -> HPolyhedron<S> {
        HPolyhedron {
            ambient_dim: self.ambient_dim,
            constraints: self.constraints.iter().map(LinearConstraint::closure).collect(),
        }
    }
}

impl<S: Scalar> fmt::Display for StrictSystem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{ ")?;
        for (i, c) in self.constraints.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " }}")
    }
}

/// Internal: floor of a nonnegative rational as a rational (used by the
/// rational Euclidean algorithm).
trait FloorInt {
    fn floor_int(&self) -> Self;
}

impl<S: Scalar> FloorInt for S {
    fn floor_int(&self) -> S {
        // floor for nonnegative values: repeated subtraction is wasteful, so
        // go through the fraction representation implicitly: q = a - (a mod 1)
        // computed via Euclid on (a, 1).
        let one = S::one();
        let mut q = S::zero();
        let mut step = one.clone();
        let mut rem = self.clone();
        // exponential search keeps this logarithmic in the value
        while rem >= step {
            let next = step.clone() + step.clone();
            if rem >= next {
                step = next;
                continue;
            }
            rem = rem - step.clone();
            q += step.clone();
            step = one.clone();
        }
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type Q = BigRational;

    fn q(p: i64, d: i64) -> Q {
        int::<Q>(p) / int::<Q>(d)
    }

    #[test]
    fn normalize_scales_to_coprime_integers() {
        let mut c = LinearConstraint::new(vec![q(1, 2), q(1, 3)], q(5, 6), false);
        c.normalize();
        assert_eq!(c.normal, vec![int::<Q>(3), int::<Q>(2)]);
        assert_eq!(c.bound, int::<Q>(5));
        assert!(!c.strict);
    }

    #[test]
    fn normalize_zero_normal() {
        let mut t = LinearConstraint::new(vec![Q::zero()], q(7, 3), false);
        t.normalize();
        assert_eq!(t.bound, Q::one());
        assert!(t.is_trivially_true());

        let mut e = LinearConstraint::<Q>::new(vec![Q::zero()], Q::zero(), true);
        e.normalize();
        assert!(e.is_trivially_false());
    }

    #[test]
    fn rational_gcd_examples() {
        assert_eq!(rational_gcd(&q(1, 2), &q(1, 3)), q(1, 6));
        assert_eq!(rational_gcd(&q(4, 1), &q(6, 1)), q(2, 1));
        assert_eq!(rational_gcd(&q(0, 1), &q(5, 7)), q(5, 7));
    }

    #[test]
    fn cleaned_dedups_scaled_duplicates() {
        let c1 = LinearConstraint::from_ints(&[1, 0], 1, false);
        let c2 = LinearConstraint::new(vec![q(2, 1), q(0, 1)], q(2, 1), false);
        let p = HPolyhedron::new(2, vec![c1, c2]).unwrap();
        assert_eq!(p.cleaned().constraints().len(), 1);
    }

    #[test]
    fn box_membership() {
        let p = HPolyhedron::bounding_box(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]))
            .unwrap();
        assert!(p.contains(&Point::new(vec![q(1, 2), q(1, 2)])));
        assert!(!p.interior_contains(&Point::from_ints(&[0, 0])));
        assert!(p.contains(&Point::from_ints(&[0, 0])));
        assert!(!p.contains(&Point::from_ints(&[2, 0])));
    }
}
