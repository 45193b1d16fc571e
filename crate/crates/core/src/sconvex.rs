//! Relative convexity over finite ground sets and exact Helly numbers.
//!
//! A subset `A` of the finite ground set `S` is S-convex iff
//! `conv(A) /\ S = A`. The Helly number of a finite family is computed as
//! the maximum cardinality of an irreducible empty-intersection subfamily
//! (one whose every leave-one-out subfamily still intersects); the
//! definitional oracle that justifies this reformulation lives in the test
//! suites and must stay independent of this module.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ratgeom::{in_convex_hull, HPolyhedron, Point};
use crate::scalar::{int, Scalar};

/// Default ceiling for exact enumeration (number of ground-set points).
pub const DEFAULT_ENUM_CAP: usize = 16;

/// Deduplicated finite point set with a fixed ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePointSet<S> {
    ambient_dim: usize,
    points: Vec<Point<S>>,
    duplicates_removed: usize,
}

impl<S: Scalar> FinitePointSet<S> {
    /// Build from a list of points; duplicates are removed silently (the
    /// count is kept so front ends can warn).
    pub fn new(ambient_dim: usize, points: Vec<Point<S>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut unique: Vec<Point<S>> = Vec::with_capacity(points.len());
        let mut dropped = 0;
        for p in points {
            if p.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: p.dim(),
                });
            }
            if unique.contains(&p) {
                dropped += 1;
            } else {
                unique.push(p);
            }
        }
        Ok(FinitePointSet {
            ambient_dim,
            points: unique,
            duplicates_removed: dropped,
        })
    }

    pub fn from_int_rows(ambient_dim: usize, rows: &[&[i64]]) -> Result<Self> {
        FinitePointSet::new(
            ambient_dim,
            rows.iter().map(|r| Point::from_ints(r)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }

    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }

    pub fn index_of(&self, p: &Point<S>) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// Points selected by a mask, in ground-set order.
    pub fn select(&self, mask: &SubsetMask) -> Vec<Point<S>> {
        mask.iter_indices().map(|i| self.points[i].clone()).collect()
    }

    /// Ground set intersected with a polyhedron (the paper-side `S /\ C`).
    pub fn restrict(&self, region: &HPolyhedron<S>) -> Result<Self> {
        if region.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: region.ambient_dim(),
            });
        }
        FinitePointSet::new(
            self.ambient_dim,
            self.points
                .iter()
                .filter(|p| region.contains(p))
                .cloned()
                .collect(),
        )
    }

    /// Image under an affine map, deduplicated.
    pub fn map(&self, phi: &AffineMap<S>) -> Result<Self> {
        let mapped: Result<Vec<Point<S>>> =
            self.points.iter().map(|p| phi.apply(p)).collect();
        FinitePointSet::new(phi.output_dim(), mapped?)
    }

    /// Points with every coordinate in `[-t, t]`.
    pub fn truncate_box(&self, t: i64) -> Self {
        let bound: S = int(t);
        let keep: Vec<Point<S>> = self
            .points
            .iter()
            .filter(|p| p.coords().iter().all(|c| c.abs() <= bound))
            .cloned()
            .collect();
        FinitePointSet {
            ambient_dim: self.ambient_dim,
            points: keep,
            duplicates_removed: 0,
        }
    }
}

/// Affine map `x -> M x + offset` with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap<S> {
    matrix: Vec<Vec<S>>,
    offset: Point<S>,
}

impl<S: Scalar> AffineMap<S> {
    pub fn new(matrix: Vec<Vec<S>>, offset: Point<S>) -> Result<Self> {
        if matrix.len() != offset.dim() {
            return Err(Error::DimensionMismatch {
                expected: offset.dim(),
                got: matrix.len(),
            });
        }
        if matrix.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let in_dim = matrix[0].len();
        if in_dim == 0 || matrix.iter().any(|r| r.len() != in_dim) {
            return Err(Error::precondition("affine map rows must share a dimension"));
        }
        Ok(AffineMap { matrix, offset })
    }

    pub fn input_dim(&self) -> usize {
        self.matrix[0].len()
    }

    pub fn output_dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, p: &Point<S>) -> Result<Point<S>> {
        if p.dim() != self.input_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim(),
                got: p.dim(),
            });
        }
        Ok(Point::new(
            self.matrix
                .iter()
                .zip(self.offset.coords())
                .map(|(row, off)| p.dot(row) + off.clone())
                .collect(),
        ))
    }
}

/// Subset of a ground set as a block bitmask.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask {
    universe: usize,
    blocks: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(universe: usize) -> Self {
        SubsetMask {
            universe,
            blocks: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut m = SubsetMask::empty(universe);
        for i in 0..universe {
            m.insert(i);
        }
        m
    }

    pub fn from_indices(universe: usize, indices: &[usize]) -> Result<Self> {
        let mut m = SubsetMask::empty(universe);
        for &i in indices {
            if i >= universe {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: universe,
                });
            }
            m.insert(i);
        }
        Ok(m)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.blocks[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn and(&self, other: &SubsetMask) -> SubsetMask {
        SubsetMask {
            universe: self.universe,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|b| *b == 0)
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn iter_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(|&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter_indices().collect()
    }
}

/// The family of all S-convex subsets of a finite ground set, or any
/// explicitly constructed family of S-convex members.
#[derive(Debug, Clone)]
pub struct SConvexFamily<S> {
    universe: FinitePointSet<S>,
    members: Vec<SubsetMask>,
}

impl<S: Scalar> SConvexFamily<S> {
    /// Checked construction: every member must satisfy `conv(A) /\ S = A`.
    pub fn new(universe: FinitePointSet<S>, members: Vec<SubsetMask>) -> Result<Self> {
        for m in &members {
            if m.universe() != universe.len() {
                return Err(Error::precondition(
                    "member mask universe must match the ground set",
                ));
            }
            if !is_s_convex_mask(m, &universe)? {
                return Err(Error::precondition(format!(
                    "member {:?} is not S-convex",
                    m.indices()
                )));
            }
        }
        Ok(SConvexFamily { universe, members })
    }

    /// Construction for families whose S-convexity holds by proof (e.g. the
    /// cube-vertex witness family); spot-checked in tests.
    pub(crate) fn new_unchecked(universe: FinitePointSet<S>, members: Vec<SubsetMask>) -> Self {
        SConvexFamily { universe, members }
    }

    pub fn universe(&self) -> &FinitePointSet<S> {
        &self.universe
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Pairwise intersections must again be members. Quadratic; callers gate
    /// it by family size.
    pub fn is_intersection_closed(&self) -> bool {
        for a in &self.members {
            for b in &self.members {
                let i = a.and(b);
                if !self.members.contains(&i) {
                    return false;
                }
            }
        }
        true
    }
}

/// Machine-checkable Helly witness: an irreducible empty-intersection
/// subfamily, stored as indices into the family's member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HellyWitness {
    pub family_indices: Vec<usize>,
}

impl HellyWitness {
    /// Total intersection empty, every leave-one-out intersection nonempty.
    pub fn validate<S: Scalar>(&self, family: &SConvexFamily<S>) -> bool {
        let n = family.universe().len();
        if self.family_indices.is_empty() {
            return false;
        }
        let masks: Vec<&SubsetMask> = self
            .family_indices
            .iter()
            .filter_map(|&i| family.members().get(i))
            .collect();
        if masks.len() != self.family_indices.len() {
            return false;
        }
        let mut total = SubsetMask::full(n);
        for m in &masks {
            total = total.and(m);
        }
        if !total.is_empty() {
            return false;
        }
        for skip in 0..masks.len() {
            let mut inter = SubsetMask::full(n);
            for (j, m) in masks.iter().enumerate() {
                if j != skip {
                    inter = inter.and(m);
                }
            }
            if inter.is_empty() {
                return false;
            }
        }
        true
    }
}

/// Is `a` (a sub-point-set of `s`) S-convex? `a` must be a subset of `s`.
pub fn is_s_convex<S: Scalar>(a: &FinitePointSet<S>, s: &FinitePointSet<S>) -> Result<bool> {
    let mut mask = SubsetMask::empty(s.len());
    for p in a.points() {
        match s.index_of(p) {
            Some(i) => mask.insert(i),
            None => return Err(Error::NotSubset(p.to_string())),
        }
    }
    is_s_convex_mask(&mask, s)
}

fn is_s_convex_mask<S: Scalar>(mask: &SubsetMask, s: &FinitePointSet<S>) -> Result<bool> {
    if mask.is_empty() {
        return Ok(true);
    }
    let members = s.select(mask);
    // bounding box of the members: anything outside cannot be in the hull
    let d = s.ambient_dim();
    let mut lo = members[0].coords().to_vec();
    let mut hi = lo.clone();
    for p in &members[1..] {
        for k in 0..d {
            let c = &p.coords()[k];
            if *c < lo[k] {
                lo[k] = c.clone();
            }
            if *c > hi[k] {
                hi[k] = c.clone();
            }
        }
    }
    for z in 0..s.len() {
        if mask.contains(z) {
            continue;
        }
        let p = &s.points()[z];
        let inside_box = (0..d).all(|k| lo[k] <= p.coords()[k] && p.coords()[k] <= hi[k]);
        if !inside_box {
            continue;
        }
        if in_convex_hull(p, &members)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hull-closure table over all subsets of a small ground set:
/// `table[mask] = { z : z in conv(points of mask) }` as bit masks. The
/// closure operator is monotone and idempotent, so each entry is seeded from
/// a sub-mask entry and only the remaining points need hull tests.
fn closure_table<S: Scalar>(s: &FinitePointSet<S>) -> Result<Vec<u64>> {
    let n = s.len();
    debug_assert!(n < 48);

    // points trapped on an open segment between two others: membership
    // follows without an LP call
    let mut trapped: Vec<(usize, usize, u64)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut bits = 0u64;
            for k in 0..n {
                if k != i
                    && k != j
                    && on_open_segment(&s.points()[k], &s.points()[i], &s.points()[j])
                {
                    bits |= 1 << k;
                }
            }
            if bits != 0 {
                trapped.push((i, j, bits));
            }
        }
    }

    let mut table = vec![0u64; 1usize << n];
    for bits in 1u64..(1u64 << n) {
        let low = bits & bits.wrapping_neg();
        let mut known = table[(bits ^ low) as usize] | bits;
        for &(i, j, caught) in &trapped {
            if bits & (1 << i) != 0 && bits & (1 << j) != 0 {
                known |= caught;
            }
        }
        let mut members: Option<Vec<Point<S>>> = None;
        let mut closure = known;
        for z in 0..n {
            if closure & (1 << z) != 0 {
                continue;
            }
            let members = members.get_or_insert_with(|| {
                (0..n)
                    .filter(|&i| bits & (1 << i) != 0)
                    .map(|i| s.points()[i].clone())
                    .collect()
            });
            if in_convex_hull(&s.points()[z], members)? {
                closure |= 1 << z;
            }
        }
        table[bits as usize] = closure;
    }
    Ok(table)
}

/// Enumerate every S-convex subset of `s`. Exactly the subsets `A` with
/// `conv(A) /\ S = A`; the result is intersection-closed (for small families
/// this is revalidated, beyond that it holds because intersections of
/// S-convex sets are S-convex).
pub fn enumerate_s_convex<S: Scalar>(
    s: &FinitePointSet<S>,
    cap: usize,
) -> Result<SConvexFamily<S>> {
    let n = s.len();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    if n >= 48 {
        return Err(Error::CapExceeded { size: n, cap: 47 });
    }
    let table = closure_table(s)?;
    let mut members = Vec::new();
    for bits in 0u64..(1u64 << n) {
        if table[bits as usize] == bits {
            let mut mask = SubsetMask::empty(n);
            for i in 0..n {
                if bits & (1 << i) != 0 {
                    mask.insert(i);
                }
            }
            members.push(mask);
        }
    }
    // deterministic search order: large members first
    members.sort_by(|a, b| b.count().cmp(&a.count()).then_with(|| a.cmp(b)));

    let family = SConvexFamily::new_unchecked(s.clone(), members);
    debug_assert!(family.len() > 2048 || family.is_intersection_closed());
    Ok(family)
}

fn on_open_segment<S: Scalar>(p: &Point<S>, a: &Point<S>, b: &Point<S>) -> bool {
    // p = a + t (b - a) for some t in (0,1), checked coordinatewise
    let mut t: Option<S> = None;
    for k in 0..p.dim() {
        let num = p.coords()[k].clone() - a.coords()[k].clone();
        let den = b.coords()[k].clone() - a.coords()[k].clone();
        if den.is_zero() {
            if !num.is_zero() {
                return false;
            }
            continue;
        }
        let tk = num / den;
        match &t {
            None => t = Some(tk),
            Some(t0) => {
                if *t0 != tk {
                    return false;
                }
            }
        }
    }
    matches!(t, Some(t) if t > S::zero() && t < S::one())
}

/// Helly number of a finite family: the maximum cardinality of an
/// irreducible empty-intersection subfamily. `{empty}` has Helly number 0;
/// a family with nonempty total intersection has Helly number 1.
pub fn helly_number_family<S: Scalar>(
    family: &SConvexFamily<S>,
) -> Result<(usize, Option<HellyWitness>)> {
    if family.is_empty() {
        return Err(Error::precondition("family must be nonempty"));
    }
    let n = family.universe().len();

    // search over distinct members only; remember one original index per mask
    let mut distinct: Vec<(SubsetMask, usize)> = Vec::new();
    for (i, m) in family.members().iter().enumerate() {
        if !distinct.iter().any(|(d, _)| d == m) {
            distinct.push((m.clone(), i));
        }
    }
    if distinct.len() == 1 && distinct[0].0.is_empty() {
        return Ok((0, None));
    }

    let masks: Vec<SubsetMask> = distinct.iter().map(|(m, _)| m.clone()).collect();
    let mut search = IrreducibleSearch {
        masks: &masks,
        best: 0,
        best_family: Vec::new(),
    };
    let full = SubsetMask::full(n);
    let mut chosen = Vec::new();
    search.dfs(0, &mut chosen, &full);

    if search.best == 0 {
        // no empty-intersection subfamily at all
        return Ok((1, None));
    }
    let witness = HellyWitness {
        family_indices: search
            .best_family
            .iter()
            .map(|&pos| distinct[pos].1)
            .collect(),
    };
    if !witness.validate(family) {
        return Err(Error::Internal("irreducible witness failed validation".into()));
    }
    Ok((search.best, Some(witness)))
}

struct IrreducibleSearch<'a> {
    masks: &'a [SubsetMask],
    best: usize,
    best_family: Vec<usize>,
}

/// One chosen member during the depth-first growth: its index and the
/// intersection of all the *other* chosen members minus the member itself
/// (the region where its private witness point must come from).
struct ChosenMember {
    idx: usize,
    witness_region: SubsetMask,
}

impl IrreducibleSearch<'_> {
    /// Depth-first growth of candidate subfamilies. Invariant: every chosen
    /// member keeps a nonempty witness region (points in all other chosen
    /// members but not in it). When the running intersection hits empty the
    /// candidate is irreducible by that invariant; branches where a member
    /// loses its witness region can never become irreducible and are cut.
    fn dfs(&mut self, start: usize, chosen: &mut Vec<ChosenMember>, inter: &SubsetMask) {
        'candidates: for idx in start..self.masks.len() {
            let candidate = &self.masks[idx];
            let ni = inter.and(candidate);
            if &ni == inter {
                // no strict shrink: the new member could never get a witness
                continue;
            }
            if ni.is_empty() {
                // the older members' witness regions survive (they exclude
                // the new member's points by the update rule checked below)
                if chosen.len() + 1 > self.best
                    && chosen
                        .iter()
                        .all(|c| !c.witness_region.and(candidate).is_empty())
                {
                    self.best = chosen.len() + 1;
                    self.best_family = chosen.iter().map(|c| c.idx).collect();
                    self.best_family.push(idx);
                }
                continue;
            }
            // growth bound: each further member removes at least one point
            if chosen.len() + 1 + ni.count() <= self.best {
                continue;
            }
            let mut updated: Vec<SubsetMask> = Vec::with_capacity(chosen.len());
            for c in chosen.iter() {
                let region = c.witness_region.and(candidate);
                if region.is_empty() {
                    // an earlier member lost all potential witnesses
                    continue 'candidates;
                }
                updated.push(region);
            }
            // the new member's witnesses live in inter minus the member
            let mut new_region = SubsetMask::empty(inter.universe());
            for i in inter.iter_indices() {
                if !candidate.contains(i) {
                    new_region.insert(i);
                }
            }
            debug_assert!(!new_region.is_empty());
            let saved: Vec<SubsetMask> = chosen
                .iter_mut()
                .zip(updated)
                .map(|(c, next)| std::mem::replace(&mut c.witness_region, next))
                .collect();
            chosen.push(ChosenMember {
                idx,
                witness_region: new_region,
            });
            self.dfs(idx + 1, chosen, &ni);
            chosen.pop();
            for (c, old) in chosen.iter_mut().zip(saved) {
                c.witness_region = old;
            }
        }
    }
}

/// Helly number of a finite ground set: the family Helly number of all its
/// S-convex subsets.
///
/// Semantically this is `helly_number_family(enumerate_s_convex(s))`; the
/// computation uses the intersection-closedness of the complete family: an
/// irreducible subfamily of maximum size can always be taken in the
/// canonical form `{ cl(P - p) : p in P }` for a set `P` of witness points,
/// so the search runs over point subsets instead of member subsets. The
/// returned witness is validated against the enumerated family, and the
/// equivalence of both routes with the raw definition is pinned by the
/// definitional oracle in the test suites.
pub fn helly_number<S: Scalar>(
    s: &FinitePointSet<S>,
    cap: usize,
) -> Result<(usize, Option<HellyWitness>)> {
    let n = s.len();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    if n == 0 {
        return Ok((0, None));
    }
    let table = closure_table(s)?;

    let mut best: u32 = 0;
    let mut best_points: u64 = 0;
    for pts in 1u64..(1u64 << n) {
        let k = pts.count_ones();
        if k <= best {
            continue;
        }
        let mut inter = u64::MAX;
        let mut valid = true;
        let mut rest = pts;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let cl = table[(pts ^ bit) as usize];
            if cl & bit != 0 {
                // the point is not extreme relative to the others
                valid = false;
                break;
            }
            inter &= cl;
        }
        if valid && inter & ((1u64 << n) - 1) == 0 {
            best = k;
            best_points = pts;
        }
    }

    // map the canonical members cl(P - p) back to family indices
    let family = enumerate_s_convex(s, cap)?;
    if best == 0 {
        return helly_number_family(&family);
    }
    let mut index_of_mask: HashMap<u64, usize> = HashMap::new();
    for (i, m) in family.members().iter().enumerate() {
        let mut bits = 0u64;
        for b in m.iter_indices() {
            bits |= 1 << b;
        }
        index_of_mask.insert(bits, i);
    }
    let mut family_indices = Vec::with_capacity(best as usize);
    let mut rest = best_points;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        let member = table[(best_points ^ bit) as usize];
        let idx = index_of_mask.get(&member).copied().ok_or_else(|| {
            Error::Internal("closure of a point set must be an enumerated member".into())
        })?;
        family_indices.push(idx);
    }
    family_indices.sort_unstable();
    family_indices.dedup();
    let witness = HellyWitness { family_indices };
    if witness.family_indices.len() != best as usize || !witness.validate(&family) {
        return Err(Error::Internal(
            "canonical point witness failed family validation".into(),
        ));
    }
    Ok((best as usize, Some(witness)))
}

/// Randomized lower bound for ground sets beyond the enumeration cap: sample
/// subsets, close them into S-convex members, and search the sampled family.
/// The result is a certified lower bound, never an exact value.
pub fn helly_lower_bound<S: Scalar>(
    s: &FinitePointSet<S>,
    seed: u64,
    samples: usize,
) -> Result<(usize, Option<HellyWitness>)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = s.len();
    if n == 0 {
        return Ok((0, None));
    }
    let mut members: Vec<SubsetMask> = vec![SubsetMask::empty(n)];
    for _ in 0..samples {
        let mut mask = SubsetMask::empty(n);
        for i in 0..n {
            if rng.gen_bool(0.5) {
                mask.insert(i);
            }
        }
        let closed = close_mask(&mask, s)?;
        if !members.contains(&closed) {
            members.push(closed);
        }
    }
    members.sort_by(|a, b| b.count().cmp(&a.count()).then_with(|| a.cmp(b)));
    let family = SConvexFamily::new_unchecked(s.clone(), members);
    helly_number_family(&family)
}

/// S-convex closure of a subset: `conv(A) /\ S`.
fn close_mask<S: Scalar>(mask: &SubsetMask, s: &FinitePointSet<S>) -> Result<SubsetMask> {
    if mask.is_empty() {
        return Ok(mask.clone());
    }
    let members = s.select(mask);
    let mut closed = mask.clone();
    for z in 0..s.len() {
        if closed.contains(z) {
            continue;
        }
        if in_convex_hull(&s.points()[z], &members)? {
            closed.insert(z);
        }
    }
    Ok(closed)
}

/// Ground-set generators for truncation profiles.
#[derive(Debug, Clone)]
pub enum SetGenerator<S> {
    /// The integer lattice `Z^dim`.
    IntegerLattice { dim: usize },
    /// An explicit finite set (truncation just filters it).
    Explicit(FinitePointSet<S>),
}

impl<S: Scalar> SetGenerator<S> {
    /// The truncation `S /\ [-t, t]^d`.
    pub fn truncate(&self, t: i64) -> Result<FinitePointSet<S>> {
        if t < 0 {
            return Err(Error::precondition("truncation radius must be nonnegative"));
        }
        match self {
            SetGenerator::Explicit(s) => Ok(s.truncate_box(t)),
            SetGenerator::IntegerLattice { dim } => {
                let d = *dim;
                if d == 0 {
                    return Err(Error::ZeroDimension);
                }
                let width = (2 * t + 1) as usize;
                let count = width.checked_pow(d as u32).ok_or_else(|| {
                    Error::CapExceeded {
                        size: usize::MAX,
                        cap: DEFAULT_ENUM_CAP,
                    }
                })?;
                let mut points = Vec::with_capacity(count);
                let mut coords = vec![-t; d];
                loop {
                    points.push(Point::from_ints(&coords));
                    let mut k = 0;
                    loop {
                        if k == d {
                            return FinitePointSet::new(d, points);
                        }
                        if coords[k] < t {
                            coords[k] += 1;
                            for c in coords.iter_mut().take(k) {
                                *c = -t;
                            }
                            break;
                        }
                        k += 1;
                    }
                }
            }
        }
    }
}

/// Exact Helly numbers of box truncations, stopping at the cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationProfile {
    pub entries: Vec<(i64, usize)>,
    /// First radius whose truncation exceeded the cap, if any.
    pub truncated_at: Option<i64>,
}

pub fn truncation_profile<S: Scalar>(
    generator: &SetGenerator<S>,
    t_from: i64,
    t_to: i64,
    cap: usize,
) -> Result<TruncationProfile> {
    let mut entries = Vec::new();
    let mut truncated_at = None;
    for t in t_from..=t_to {
        let s = generator.truncate(t)?;
        if s.len() > cap {
            truncated_at = Some(t);
            break;
        }
        let (h, _) = helly_number(&s, cap)?;
        entries.push((t, h));
    }
    Ok(TruncationProfile {
        entries,
        truncated_at,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type Q = BigRational;

    fn pset(dim: usize, rows: &[&[i64]]) -> FinitePointSet<Q> {
        FinitePointSet::from_int_rows(dim, rows).unwrap()
    }

    #[test]
    fn gap_point_breaks_convexity() {
        let s = pset(1, &[&[0], &[1], &[2]]);
        let a = pset(1, &[&[0], &[2]]);
        assert!(!is_s_convex(&a, &s).unwrap());
        let b = pset(1, &[&[0], &[1]]);
        assert!(is_s_convex(&b, &s).unwrap());
        let empty = FinitePointSet::new(1, vec![]).unwrap();
        assert!(is_s_convex(&empty, &s).unwrap());
    }

    #[test]
    fn subset_precondition_enforced() {
        let s = pset(1, &[&[0], &[1]]);
        let a = pset(1, &[&[5]]);
        assert!(matches!(
            is_s_convex(&a, &s).unwrap_err(),
            Error::NotSubset(_)
        ));
    }

    #[test]
    fn two_point_line_family() {
        let s = pset(1, &[&[0], &[1]]);
        let fam = enumerate_s_convex(&s, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(fam.len(), 4);
        assert!(fam.is_intersection_closed());
    }

    #[test]
    fn three_point_line_family_excludes_gap_pair() {
        let s = pset(1, &[&[0], &[1], &[2]]);
        let fam = enumerate_s_convex(&s, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(fam.len(), 7);
        // {0,2} is the only non-convex subset
        for m in fam.members() {
            let idx = m.indices();
            assert_ne!(idx, vec![0, 2].iter().map(|&i| s.index_of(&Point::from_ints(&[i as i64])).unwrap()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn unit_square_vertices_all_subsets_convex() {
        let s = pset(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let fam = enumerate_s_convex(&s, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(fam.len(), 16);
        assert!(fam.is_intersection_closed());
    }

    #[test]
    fn helly_of_singleton_family_of_empty_set() {
        let s = pset(1, &[&[0]]);
        let fam = SConvexFamily::new(s, vec![SubsetMask::empty(1)]).unwrap();
        let (h, w) = helly_number_family(&fam).unwrap();
        assert_eq!(h, 0);
        assert!(w.is_none());
    }

    #[test]
    fn helly_of_disjoint_singletons_is_two() {
        let s = pset(1, &[&[0], &[5], &[10]]);
        let members = vec![
            SubsetMask::from_indices(3, &[0]).unwrap(),
            SubsetMask::from_indices(3, &[1]).unwrap(),
            SubsetMask::from_indices(3, &[2]).unwrap(),
        ];
        let fam = SConvexFamily::new(s, members).unwrap();
        let (h, w) = helly_number_family(&fam).unwrap();
        assert_eq!(h, 2);
        assert!(w.unwrap().validate(&fam));
    }

    #[test]
    fn helly_singleton_ground_set() {
        let s = pset(1, &[&[7]]);
        let (h, _) = helly_number(&s, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(h, 1);
    }

    #[test]
    fn helly_one_dimensional_window() {
        let s = pset(1, &[&[-1], &[0], &[1]]);
        let (h, w) = helly_number(&s, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(h, 2);
        let fam = enumerate_s_convex(&s, DEFAULT_ENUM_CAP).unwrap();
        assert!(w.unwrap().validate(&fam));
    }

    #[test]
    fn helly_unit_square_is_four() {
        let s = pset(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let (h, w) = helly_number(&s, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(h, 4);
        let fam = enumerate_s_convex(&s, DEFAULT_ENUM_CAP).unwrap();
        assert!(w.unwrap().validate(&fam));
    }

    #[test]
    fn helly_respects_cardinality_bound() {
        for rows in [vec![&[0i64][..], &[3][..]], vec![&[0][..], &[2][..], &[7][..]]] {
            let s = pset(1, &rows);
            let (h, _) = helly_number(&s, DEFAULT_ENUM_CAP).unwrap();
            assert!(h <= s.len());
            assert!(h >= 1);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let rows: Vec<Vec<i64>> = (0..5).map(|i| vec![i]).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let s = pset(1, &refs);
        assert!(matches!(
            helly_number(&s, 4).unwrap_err(),
            Error::CapExceeded { size: 5, cap: 4 }
        ));
    }

    #[test]
    fn truncation_profile_z1() {
        let generator: SetGenerator<Q> = SetGenerator::IntegerLattice { dim: 1 };
        let profile = truncation_profile(&generator, 1, 3, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(profile.entries, vec![(1, 2), (2, 2), (3, 2)]);
        assert!(profile.truncated_at.is_none());
    }

    #[test]
    fn truncation_profile_marks_cap() {
        let generator: SetGenerator<Q> = SetGenerator::IntegerLattice { dim: 2 };
        let profile = truncation_profile(&generator, 1, 2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(profile.entries, vec![(1, 4)]);
        assert_eq!(profile.truncated_at, Some(2));
    }

    #[test]
    fn restriction_monotone_helly() {
        let s = pset(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 2]]);
        let box01 = HPolyhedron::bounding_box(
            &Point::from_ints(&[0, 0]),
            &Point::from_ints(&[1, 1]),
        )
        .unwrap();
        let restricted = s.restrict(&box01).unwrap();
        assert_eq!(restricted.len(), 4);
        let (h_full, _) = helly_number(&s, DEFAULT_ENUM_CAP).unwrap();
        let (h_restricted, _) = helly_number(&restricted, DEFAULT_ENUM_CAP).unwrap();
        assert!(h_restricted <= h_full);
    }

    #[test]
    fn affine_image_monotone_helly() {
        let s = pset(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        // project onto the first coordinate
        let phi = AffineMap::new(vec![vec![Q::one(), Q::zero()]], Point::from_ints(&[0]))
            .unwrap();
        let image = s.map(&phi).unwrap();
        assert_eq!(image.len(), 2);
        let (h_s, _) = helly_number(&s, DEFAULT_ENUM_CAP).unwrap();
        let (h_img, _) = helly_number(&image, DEFAULT_ENUM_CAP).unwrap();
        assert!(h_img <= h_s);
    }

    #[test]
    fn lower_bound_mode_is_a_lower_bound() {
        let s = pset(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let (exact, _) = helly_number(&s, DEFAULT_ENUM_CAP).unwrap();
        let (lower, _) = helly_lower_bound(&s, 0, 64).unwrap();
        assert!(lower <= exact);
        assert!(lower >= 1);
    }

    #[test]
    fn duplicates_are_removed() {
        let s: FinitePointSet<Q> = FinitePointSet::from_int_rows(1, &[&[0], &[0], &[1]]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.duplicates_removed(), 1);
    }
}
