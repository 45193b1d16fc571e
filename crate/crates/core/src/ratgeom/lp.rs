//! Exact linear programming over mixed strict/nonstrict systems.
//!
//! The engine is a dense two-phase simplex with Bland's rule over exact
//! scalars, so it terminates and never rounds. Strict inequalities are
//! handled by a margin variable: the region `{<u_i,x> < b_i}` is nonempty
//! iff `max { eps : <u_i,x> + eps <= b_i, eps <= 1 }` is positive.
//!
//! Infeasibility always comes with nonnegative multipliers that recombine
//! the constraints into `0 <= -1` or `0 < 0`; optima come with a witness
//! point; unboundedness comes with a ray. Certificates are verified by
//! substitution before being returned.

use super::{dot, normalize_primitive, LinearConstraint, Point};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// Outcome of `solve_lp` over a (possibly strict) feasible region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult<S> {
    /// Attained exact optimum with a witness in the region.
    Optimal { value: S, witness: Point<S> },
    /// The bound is approached on the strict region but not attained.
    InfimumUnattained { value: S },
    /// Motzkin-style multipliers: nonnegative, one per input constraint,
    /// recombining to `0 <= rhs < 0` or `0 < rhs <= 0` (strict mass present).
    Infeasible { certificate: Vec<S> },
    /// Recession direction along which the objective improves forever.
    Unbounded { ray: Vec<S> },
}

/// Feasibility of a mixed system, with witness or certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility<S> {
    Feasible(Point<S>),
    Infeasible(Vec<S>),
}

impl<S> Feasibility<S> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Verify that `certificate` recombines `constraints` into a contradiction.
/// Exact: the weighted normals must cancel to zero and the combined bound
/// must be negative (or nonpositive with strict multiplier mass).
pub fn check_infeasibility_certificate<S: Scalar>(
    constraints: &[LinearConstraint<S>],
    certificate: &[S],
) -> bool {
    if constraints.len() != certificate.len() || constraints.is_empty() {
        return false;
    }
    let d = constraints[0].dim();
    let mut combined = vec![S::zero(); d];
    let mut rhs = S::zero();
    let mut strict_mass = false;
    let mut any_positive = false;
    for (c, lam) in constraints.iter().zip(certificate) {
        if lam.is_negative() {
            return false;
        }
        if lam.is_zero() {
            continue;
        }
        any_positive = true;
        if c.strict {
            strict_mass = true;
        }
        for (acc, u) in combined.iter_mut().zip(&c.normal) {
            *acc += lam.clone() * u.clone();
        }
        rhs += lam.clone() * c.bound.clone();
    }
    if !any_positive || combined.iter().any(|v| !v.is_zero()) {
        return false;
    }
    // combination reads `0 (<|<=) rhs`; contradiction iff it is false
    if strict_mass {
        rhs <= S::zero()
    } else {
        rhs < S::zero()
    }
}

/// Solve min/max of `objective` over a mixed list of constraints.
///
/// For strict regions whose optimum is approached on the boundary the result
/// is `InfimumUnattained` carrying the exact bound (the closure optimum; it
/// equals the strict-region infimum whenever the strict region is nonempty).
pub fn solve_lp<S: Scalar>(
    objective: &[S],
    sense: Sense,
    constraints: &[LinearConstraint<S>],
) -> Result<LpResult<S>> {
    let d = objective.len();
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    for c in constraints {
        if c.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: c.dim(),
            });
        }
    }
    let min_objective: Vec<S> = match sense {
        Sense::Min => objective.to_vec(),
        Sense::Max => objective.iter().map(|c| -c.clone()).collect(),
    };
    let fix = |v: S| match sense {
        Sense::Min => v,
        Sense::Max => -v,
    };

    let witness = match feasible_point(d, constraints)? {
        Feasibility::Infeasible(certificate) => return Ok(LpResult::Infeasible { certificate }),
        Feasibility::Feasible(w) => w,
    };

    let closure: Vec<LinearConstraint<S>> =
        constraints.iter().map(LinearConstraint::closure).collect();
    match simplex_min(&min_objective, &closure)? {
        SimplexOutcome::Unbounded { ray } => Ok(LpResult::Unbounded { ray }),
        SimplexOutcome::Infeasible { .. } => Err(Error::Internal(
            "closure infeasible although the strict region has a witness".into(),
        )),
        SimplexOutcome::Optimal { value, .. } => {
            // Attainment: pin the objective to the closure optimum and ask
            // for a point of the strict region.
            let mut pinned = constraints.to_vec();
            pinned.push(LinearConstraint::new(
                min_objective.clone(),
                value.clone(),
                false,
            ));
            match feasible_point(d, &pinned)? {
                Feasibility::Feasible(w) => Ok(LpResult::Optimal {
                    value: fix(value),
                    witness: w,
                }),
                Feasibility::Infeasible(_) => {
                    // sanity: the region is nonempty, so the bound is real
                    debug_assert!(constraints.iter().all(|c| c.satisfied_by(&witness)));
                    Ok(LpResult::InfimumUnattained { value: fix(value) })
                }
            }
        }
    }
}

/// Find a point of the mixed system or a Motzkin certificate.
pub fn feasible_point<S: Scalar>(
    dim: usize,
    constraints: &[LinearConstraint<S>],
) -> Result<Feasibility<S>> {
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
    let has_strict = constraints.iter().any(|c| c.strict);
    if !has_strict {
        return match simplex_min(&vec![S::zero(); dim], constraints)? {
            SimplexOutcome::Optimal { witness, .. } => Ok(Feasibility::Feasible(witness)),
            SimplexOutcome::Infeasible { certificate } => {
                finish_certificate(constraints, certificate)
            }
            SimplexOutcome::Unbounded { .. } => {
                Err(Error::Internal("zero objective cannot be unbounded".into()))
            }
        };
    }

    // margin LP in (x, eps): maximize eps subject to
    //   <u_i,x> + eps <= b_i   (strict i)
    //   <u_i,x>       <= b_i   (nonstrict i)
    //   eps <= 1
    let ext = dim + 1;
    let mut rows: Vec<LinearConstraint<S>> = Vec::with_capacity(constraints.len() + 1);
    for c in constraints {
        let mut normal = c.normal.clone();
        normal.push(if c.strict { S::one() } else { S::zero() });
        rows.push(LinearConstraint::new(normal, c.bound.clone(), false));
    }
    let mut cap = vec![S::zero(); ext];
    cap[dim] = S::one();
    rows.push(LinearConstraint::new(cap, S::one(), false));

    let mut objective = vec![S::zero(); ext];
    objective[dim] = -S::one(); // maximize eps
    match simplex_min(&objective, &rows)? {
        SimplexOutcome::Infeasible { certificate } => {
            // closure itself infeasible; the eps column forces zero mass on
            // strict rows and the cap row, so the certificate restricts
            let lam = &certificate[..constraints.len()];
            finish_certificate(constraints, lam.to_vec())
        }
        SimplexOutcome::Optimal {
            value,
            witness,
            slack_duals,
        } => {
            let eps = -value;
            if eps > S::zero() {
                let coords = witness.coords()[..dim].to_vec();
                let p = Point::new(coords);
                debug_assert!(constraints.iter().all(|c| c.satisfied_by(&p)));
                Ok(Feasibility::Feasible(p))
            } else {
                let lam = slack_duals[..constraints.len()].to_vec();
                finish_certificate(constraints, lam)
            }
        }
        SimplexOutcome::Unbounded { .. } => Err(Error::Internal(
            "margin LP is bounded by construction".into(),
        )),
    }
}

fn finish_certificate<S: Scalar>(
    constraints: &[LinearConstraint<S>],
    mut lam: Vec<S>,
) -> Result<Feasibility<S>> {
    normalize_primitive(&mut lam);
    if !check_infeasibility_certificate(constraints, &lam) {
        return Err(Error::Internal(
            "simplex produced an invalid infeasibility certificate".into(),
        ));
    }
    Ok(Feasibility::Infeasible(lam))
}

enum SimplexOutcome<S> {
    Optimal {
        value: S,
        witness: Point<S>,
        /// Reduced cost of the slack column per input row at the final
        /// tableau; these are the dual multipliers used for certificates.
        slack_duals: Vec<S>,
    },
    Infeasible {
        /// Dual multipliers of phase one (one per input row).
        certificate: Vec<S>,
    },
    Unbounded {
        ray: Vec<S>,
    },
}

/// Dense exact simplex: min c.x over { A x <= b } with free variables.
/// Never called with strict constraints.
fn simplex_min<S: Scalar>(
    objective: &[S],
    constraints: &[LinearConstraint<S>],
) -> Result<SimplexOutcome<S>> {
    let d = objective.len();
    let m = constraints.len();
    if m == 0 {
        if objective.iter().all(|c| c.is_zero()) {
            return Ok(SimplexOutcome::Optimal {
                value: S::zero(),
                witness: Point::origin(d),
                slack_duals: Vec::new(),
            });
        }
        let mut ray: Vec<S> = objective.iter().map(|c| -c.clone()).collect();
        normalize_primitive(&mut ray);
        return Ok(SimplexOutcome::Unbounded { ray });
    }

    let mut t = Tableau::new(objective, constraints);
    t.set_phase_one_costs();
    if let Pivoting::Unbounded { .. } = t.optimize() {
        return Err(Error::Internal("phase one cannot be unbounded".into()));
    }
    let phase_one = t.objective_value();
    if phase_one > S::zero() {
        let lam = t.slack_reduced_costs();
        return Ok(SimplexOutcome::Infeasible { certificate: lam });
    }
    t.drive_out_artificials();
    t.set_phase_two_costs(objective);
    match t.optimize() {
        Pivoting::Optimal => Ok(SimplexOutcome::Optimal {
            value: t.objective_value(),
            witness: Point::new(t.structural_solution()),
            slack_duals: t.slack_reduced_costs(),
        }),
        Pivoting::Unbounded { entering } => {
            let mut ray = t.ray_for(entering);
            normalize_primitive(&mut ray);
            // substitution check: a ray must keep every constraint and
            // improve the objective
            let ok = constraints
                .iter()
                .all(|c| dot(&c.normal, &ray) <= S::zero())
                && dot(objective, &ray) < S::zero();
            if !ok {
                return Err(Error::Internal("invalid unboundedness ray".into()));
            }
            Ok(SimplexOutcome::Unbounded { ray })
        }
    }
}

enum Pivoting {
    Optimal,
    Unbounded { entering: usize },
}

/// Column layout: structural pairs (x_j = p_j - n_j) occupy 2d columns,
/// then m slack columns, then m artificial columns.
struct Tableau<S> {
    d: usize,
    m: usize,
    rows: Vec<Vec<S>>,
    rhs: Vec<S>,
    basis: Vec<usize>,
    costs: Vec<S>,
    artificials_barred: bool,
}

impl<S: Scalar> Tableau<S> {
    fn new(objective: &[S], constraints: &[LinearConstraint<S>]) -> Self {
        let d = objective.len();
        let m = constraints.len();
        let ncols = 2 * d + 2 * m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for (i, c) in constraints.iter().enumerate() {
            // row: sigma * (<u, p - n> + s_i) = sigma * b_i with sigma
            // flipping the sign so the right-hand side is nonnegative
            let flip = c.bound < S::zero();
            let sigma = if flip { -S::one() } else { S::one() };
            let mut row = vec![S::zero(); ncols];
            for (j, a) in c.normal.iter().enumerate() {
                row[2 * j] = sigma.clone() * a.clone();
                row[2 * j + 1] = -(sigma.clone() * a.clone());
            }
            row[2 * d + i] = sigma.clone();
            row[2 * d + m + i] = S::one();
            rows.push(row);
            rhs.push(sigma * c.bound.clone());
            basis.push(2 * d + m + i);
        }
        Tableau {
            d,
            m,
            rows,
            rhs,
            basis,
            costs: vec![S::zero(); ncols],
            artificials_barred: false,
        }
    }

    fn ncols(&self) -> usize {
        2 * self.d + 2 * self.m
    }

    fn set_phase_one_costs(&mut self) {
        for c in self.costs.iter_mut() {
            *c = S::zero();
        }
        for a in 0..self.m {
            self.costs[2 * self.d + self.m + a] = S::one();
        }
        self.artificials_barred = false;
    }

    fn set_phase_two_costs(&mut self, objective: &[S]) {
        for c in self.costs.iter_mut() {
            *c = S::zero();
        }
        for (j, cj) in objective.iter().enumerate() {
            self.costs[2 * j] = cj.clone();
            self.costs[2 * j + 1] = -cj.clone();
        }
        self.artificials_barred = true;
    }

    fn reduced_cost(&self, col: usize) -> S {
        let mut r = self.costs[col].clone();
        for (row, b) in self.rows.iter().zip(&self.basis) {
            let cb = &self.costs[*b];
            if !cb.is_zero() && !row[col].is_zero() {
                r -= cb.clone() * row[col].clone();
            }
        }
        r
    }

    fn objective_value(&self) -> S {
        let mut v = S::zero();
        for (b, x) in self.basis.iter().zip(&self.rhs) {
            let cb = &self.costs[*b];
            if !cb.is_zero() {
                v += cb.clone() * x.clone();
            }
        }
        v
    }

    /// Bland's rule: entering = lowest-index column with negative reduced
    /// cost; leaving = min ratio, ties broken by lowest basic column index.
    fn optimize(&mut self) -> Pivoting {
        loop {
            let mut entering = None;
            for col in 0..self.ncols() {
                if self.artificials_barred && col >= 2 * self.d + self.m {
                    break;
                }
                if self.basis.contains(&col) {
                    continue;
                }
                if self.reduced_cost(col) < S::zero() {
                    entering = Some(col);
                    break;
                }
            }
            let Some(col) = entering else {
                return Pivoting::Optimal;
            };
            let mut leaving: Option<(usize, S)> = None;
            for r in 0..self.m {
                let a = &self.rows[r][col];
                if *a <= S::zero() {
                    continue;
                }
                let ratio = self.rhs[r].clone() / a.clone();
                match &leaving {
                    None => leaving = Some((r, ratio)),
                    Some((best_r, best)) => {
                        if ratio < *best
                            || (ratio == *best && self.basis[r] < self.basis[*best_r])
                        {
                            leaving = Some((r, ratio));
                        }
                    }
                }
            }
            let Some((row, _)) = leaving else {
                return Pivoting::Unbounded { entering: col };
            };
            self.pivot(row, col);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        debug_assert!(!pivot.is_zero());
        for v in self.rows[row].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        self.rhs[row] = self.rhs[row].clone() / pivot;
        for r in 0..self.m {
            if r == row {
                continue;
            }
            let factor = self.rows[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..self.ncols() {
                let delta = factor.clone() * self.rows[row][c].clone();
                if !delta.is_zero() {
                    self.rows[r][c] = self.rows[r][c].clone() - delta;
                }
            }
            self.rhs[r] = self.rhs[r].clone() - factor * self.rhs[row].clone();
        }
        self.basis[row] = col;
    }

    /// After a successful phase one, pivot basic artificials out wherever a
    /// nonzero real entry exists; rows that are zero on all real columns are
    /// redundant and stay inert with their artificial basic at zero.
    fn drive_out_artificials(&mut self) {
        let art_start = 2 * self.d + self.m;
        for r in 0..self.m {
            if self.basis[r] < art_start {
                continue;
            }
            debug_assert!(self.rhs[r].is_zero());
            let col = (0..art_start).find(|&c| !self.rows[r][c].is_zero());
            if let Some(col) = col {
                self.pivot(r, col);
            }
        }
    }

    /// x_j = value(p_j) - value(n_j) from the current basic solution.
    fn structural_solution(&self) -> Vec<S> {
        let mut vals = vec![S::zero(); self.ncols()];
        for (row, b) in self.basis.iter().enumerate() {
            vals[*b] = self.rhs[row].clone();
        }
        (0..self.d)
            .map(|j| vals[2 * j].clone() - vals[2 * j + 1].clone())
            .collect()
    }

    /// Reduced costs of the slack columns; at a terminal tableau these are
    /// exactly the nonnegative row multipliers of the active certificate.
    fn slack_reduced_costs(&self) -> Vec<S> {
        (0..self.m)
            .map(|i| self.reduced_cost(2 * self.d + i))
            .collect()
    }

    /// Improving ray when `entering` has no blocking row, mapped back to the
    /// structural variables.
    fn ray_for(&self, entering: usize) -> Vec<S> {
        let mut delta = vec![S::zero(); self.ncols()];
        delta[entering] = S::one();
        for (row, b) in self.basis.iter().enumerate() {
            delta[*b] = -self.rows[row][entering].clone();
        }
        (0..self.d)
            .map(|j| delta[2 * j].clone() - delta[2 * j + 1].clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
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

    #[test]
    fn max_with_tight_bound_is_attained() {
        let r = solve_lp(&[int::<Q>(1)], Sense::Max, &[le(&[1], 1)]).unwrap();
        match r {
            LpResult::Optimal { value, witness } => {
                assert_eq!(value, int::<Q>(1));
                assert_eq!(witness, Point::from_ints(&[1]));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn contradictory_strict_pair_yields_unit_multipliers() {
        // x < 0 and -x < -1 recombine with (1,1) into 0 < -1
        let cs = vec![lt(&[1], 0), lt(&[-1], -1)];
        let r = solve_lp(&[int::<Q>(0)], Sense::Min, &cs).unwrap();
        match r {
            LpResult::Infeasible { certificate } => {
                assert_eq!(certificate, vec![int::<Q>(1), int::<Q>(1)]);
                assert!(check_infeasibility_certificate(&cs, &certificate));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn strict_bound_is_not_attained() {
        let r = solve_lp(&[int::<Q>(1)], Sense::Max, &[lt(&[1], 1)]).unwrap();
        assert_eq!(r, LpResult::InfimumUnattained { value: int::<Q>(1) });
    }

    #[test]
    fn unbounded_direction_reported_as_ray() {
        let r = solve_lp(&[int::<Q>(1), int::<Q>(0)], Sense::Max, &[le(&[0, 1], 3)]).unwrap();
        match r {
            LpResult::Unbounded { ray } => {
                assert!(dot(&[int::<Q>(1), int::<Q>(0)], &ray) > Q::zero());
                assert!(dot(&[int::<Q>(0), int::<Q>(1)], &ray) <= Q::zero());
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn bounded_polytope_optimum() {
        // max x + y over the unit square
        let cs = vec![le(&[1, 0], 1), le(&[0, 1], 1), le(&[-1, 0], 0), le(&[0, -1], 0)];
        let r = solve_lp(&[int::<Q>(1), int::<Q>(1)], Sense::Max, &cs).unwrap();
        match r {
            LpResult::Optimal { value, witness } => {
                assert_eq!(value, int::<Q>(2));
                assert_eq!(witness, Point::from_ints(&[1, 1]));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn closure_feasible_strict_empty() {
        // x <= 0 and x >= 0 intersect in a point; x < 0, x >= 0 is empty
        let cs = vec![lt(&[1], 0), le(&[-1], 0)];
        match feasible_point(1, &cs).unwrap() {
            Feasibility::Infeasible(lam) => {
                assert!(check_infeasibility_certificate(&cs, &lam));
            }
            Feasibility::Feasible(p) => panic!("unexpected witness {p}"),
        }
    }

    #[test]
    fn strict_witness_has_positive_slack() {
        let cs = vec![lt(&[1, 0], 1), lt(&[-1, 0], 0), lt(&[0, 1], 1), lt(&[0, -1], 0)];
        match feasible_point(2, &cs).unwrap() {
            Feasibility::Feasible(p) => {
                for c in &cs {
                    assert!(c.slack(&p) > Q::zero());
                }
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_closure_certificate() {
        let cs = vec![le(&[1], 0), le(&[-1], -1)];
        match feasible_point(1, &cs).unwrap() {
            Feasibility::Infeasible(lam) => {
                assert!(check_infeasibility_certificate(&cs, &lam));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_zero_normal_rows() {
        // 0x <= 1 is vacuous; 0x <= -1 is absurd
        let ok = vec![le(&[0], 1), le(&[1], 5)];
        assert!(feasible_point(1, &ok).unwrap().is_feasible());
        let bad = vec![le(&[0], -1)];
        match feasible_point(1, &bad).unwrap() {
            Feasibility::Infeasible(lam) => {
                assert!(check_infeasibility_certificate(&bad, &lam));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn fractional_data_stays_exact() {
        // max x s.t. 3x <= 1 -> 1/3
        let r = solve_lp(&[int::<Q>(1)], Sense::Max, &[le(&[3], 1)]).unwrap();
        match r {
            LpResult::Optimal { value, .. } => assert_eq!(value, q(1, 3)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn rejects_dimension_mismatch() {
        let err = solve_lp(&[int::<Q>(1)], Sense::Min, &[le(&[1, 0], 1)]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        assert!(matches!(
            solve_lp::<Q>(&[], Sense::Min, &[]).unwrap_err(),
            Error::ZeroDimension
        ));
    }
}
