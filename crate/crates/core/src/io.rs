//! JSON instance formats shared between the library and the command-line
//! tool.
//!
//! Rationals serialize as exact strings `"p/q"` (or `"p"` when the
//! denominator is one); floating-point literals are rejected on input.
//! Files may be either a bare payload or wrapped as
//! `{"kind": ..., "format_version": 1, "payload": ...}`; writers always
//! produce the wrapped form.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ratgeom::{HPolyhedron, LinearConstraint, Point, StrictSystem};
use crate::scalar::parse_exact;
use crate::sconvex::{FinitePointSet, HellyWitness, SConvexFamily};
use crate::sfree::PolytopeUnion;
use crate::structured::{BoxRegion, Lattice, MixedIntegerGround, VerifyInstance};
use crate::Rat;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    PointSet,
    Polyhedron,
    StrictSystem,
    Lattice,
    PolytopeUnion,
    MixedInteger,
    BoundsInstance,
}

impl InstanceKind {
    pub fn tag(&self) -> &'static str {
        match self {
            InstanceKind::PointSet => "point-set",
            InstanceKind::Polyhedron => "polyhedron",
            InstanceKind::StrictSystem => "strict-system",
            InstanceKind::Lattice => "lattice",
            InstanceKind::PolytopeUnion => "polytope-union",
            InstanceKind::MixedInteger => "mixed-integer",
            InstanceKind::BoundsInstance => "bounds-instance",
        }
    }
}

fn parse_error(message: impl Into<String>) -> Error {
    Error::Precondition {
        condition: format!("invalid instance file: {}", message.into()),
        witness: None,
    }
}

/// Unwrap an instance file: either a bare payload or a `kind`-tagged
/// wrapper, whose kind must match.
pub fn unwrap_instance(text: &str, expected: InstanceKind) -> Result<Value> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| parse_error(format!("not valid JSON: {e}")))?;
    let Some(obj) = value.as_object() else {
        return Err(parse_error("top level must be a JSON object"));
    };
    if let Some(kind) = obj.get("kind") {
        let kind = kind
            .as_str()
            .ok_or_else(|| parse_error("\"kind\" must be a string"))?;
        if kind != expected.tag() {
            return Err(parse_error(format!(
                "kind {kind:?} does not match expected {:?}",
                expected.tag()
            )));
        }
        if let Some(v) = obj.get("format_version") {
            let v = v
                .as_u64()
                .ok_or_else(|| parse_error("\"format_version\" must be an integer"))?;
            if v != FORMAT_VERSION as u64 {
                return Err(parse_error(format!(
                    "unsupported format_version {v} (expected {FORMAT_VERSION})"
                )));
            }
        }
        obj.get("payload")
            .cloned()
            .ok_or_else(|| parse_error("wrapper is missing \"payload\""))
    } else {
        Ok(value)
    }
}

/// Wrap a payload for writing.
pub fn wrap_instance(kind: InstanceKind, payload: Value) -> Value {
    serde_json::json!({
        "kind": kind.tag(),
        "format_version": FORMAT_VERSION,
        "payload": payload,
    })
}

fn rational_to_string(r: &Rat) -> String {
    r.to_string()
}

fn rational_from_string(s: &str) -> Result<Rat> {
    parse_exact(s).map_err(parse_error)
}

fn point_to_json(p: &Point<Rat>) -> Vec<String> {
    p.coords().iter().map(rational_to_string).collect()
}

fn point_from_json(coords: &[String], dim: usize) -> Result<Point<Rat>> {
    if coords.len() != dim {
        return Err(parse_error(format!(
            "point has {} coordinates, expected {dim}",
            coords.len()
        )));
    }
    Ok(Point::new(
        coords
            .iter()
            .map(|c| rational_from_string(c))
            .collect::<Result<_>>()?,
    ))
}

#[derive(Debug, Serialize, Deserialize)]
struct PointSetDto {
    dim: usize,
    points: Vec<Vec<String>>,
}

pub fn point_set_to_json(s: &FinitePointSet<Rat>) -> Value {
    serde_json::to_value(PointSetDto {
        dim: s.ambient_dim(),
        points: s.points().iter().map(point_to_json).collect(),
    })
    .expect("serializable")
}

pub fn point_set_from_json(payload: &Value) -> Result<FinitePointSet<Rat>> {
    let dto: PointSetDto = serde_json::from_value(payload.clone())
        .map_err(|e| parse_error(format!("point set: {e}")))?;
    let points = dto
        .points
        .iter()
        .map(|p| point_from_json(p, dto.dim))
        .collect::<Result<Vec<_>>>()?;
    FinitePointSet::new(dto.dim, points)
}

#[derive(Debug, Serialize, Deserialize)]
struct IneqDto {
    u: Vec<String>,
    b: String,
    #[serde(default)]
    strict: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct PolyhedronDto {
    dim: usize,
    ineqs: Vec<IneqDto>,
}

fn constraint_to_dto(c: &LinearConstraint<Rat>) -> IneqDto {
    IneqDto {
        u: c.normal.iter().map(rational_to_string).collect(),
        b: rational_to_string(&c.bound),
        strict: c.strict,
    }
}

fn constraint_from_dto(dto: &IneqDto, dim: usize) -> Result<LinearConstraint<Rat>> {
    if dto.u.len() != dim {
        return Err(parse_error(format!(
            "inequality normal has {} entries, expected {dim}",
            dto.u.len()
        )));
    }
    Ok(LinearConstraint::new(
        dto.u
            .iter()
            .map(|c| rational_from_string(c))
            .collect::<Result<_>>()?,
        rational_from_string(&dto.b)?,
        dto.strict,
    ))
}

pub fn polyhedron_to_json(p: &HPolyhedron<Rat>) -> Value {
    serde_json::to_value(PolyhedronDto {
        dim: p.ambient_dim(),
        ineqs: p.constraints().iter().map(constraint_to_dto).collect(),
    })
    .expect("serializable")
}

pub fn polyhedron_from_json(payload: &Value) -> Result<HPolyhedron<Rat>> {
    let dto: PolyhedronDto = serde_json::from_value(payload.clone())
        .map_err(|e| parse_error(format!("polyhedron: {e}")))?;
    let cs = dto
        .ineqs
        .iter()
        .map(|c| constraint_from_dto(c, dto.dim))
        .collect::<Result<Vec<_>>>()?;
    if cs.iter().any(|c| c.strict) {
        return Err(parse_error(
            "polyhedron file contains a strict inequality (use a strict-system file)",
        ));
    }
    HPolyhedron::new(dto.dim, cs)
}

pub fn strict_system_to_json(s: &StrictSystem<Rat>) -> Value {
    serde_json::to_value(PolyhedronDto {
        dim: s.ambient_dim(),
        ineqs: s.constraints().iter().map(constraint_to_dto).collect(),
    })
    .expect("serializable")
}

pub fn strict_system_from_json(payload: &Value) -> Result<StrictSystem<Rat>> {
    let dto: PolyhedronDto = serde_json::from_value(payload.clone())
        .map_err(|e| parse_error(format!("strict system: {e}")))?;
    let cs = dto
        .ineqs
        .iter()
        .map(|c| constraint_from_dto(c, dto.dim))
        .collect::<Result<Vec<_>>>()?;
    if cs.iter().any(|c| !c.strict) {
        return Err(parse_error(
            "strict-system file contains a nonstrict inequality",
        ));
    }
    StrictSystem::new(dto.dim, cs)
}

#[derive(Debug, Serialize, Deserialize)]
struct LatticeDto {
    dim: usize,
    basis: Vec<Vec<String>>,
}

pub fn lattice_to_json(l: &Lattice<Rat>) -> Value {
    serde_json::to_value(LatticeDto {
        dim: l.ambient_dim(),
        basis: l
            .basis()
            .iter()
            .map(|b| b.iter().map(rational_to_string).collect())
            .collect(),
    })
    .expect("serializable")
}

pub fn lattice_from_json(payload: &Value) -> Result<Lattice<Rat>> {
    let dto: LatticeDto = serde_json::from_value(payload.clone())
        .map_err(|e| parse_error(format!("lattice: {e}")))?;
    let basis = dto
        .basis
        .iter()
        .map(|b| {
            if b.len() != dto.dim {
                return Err(parse_error(format!(
                    "basis vector has {} entries, expected {}",
                    b.len(),
                    dto.dim
                )));
            }
            b.iter().map(|c| rational_from_string(c)).collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Lattice::new(dto.dim, basis)
}

#[derive(Debug, Serialize, Deserialize)]
struct UnionDto {
    dim: usize,
    pieces: Vec<PolyhedronDto>,
}

pub fn union_to_json(u: &PolytopeUnion<Rat>) -> Value {
    serde_json::to_value(UnionDto {
        dim: u.ambient_dim(),
        pieces: u
            .pieces()
            .iter()
            .map(|p| PolyhedronDto {
                dim: p.ambient_dim(),
                ineqs: p.constraints().iter().map(constraint_to_dto).collect(),
            })
            .collect(),
    })
    .expect("serializable")
}

pub fn union_from_json(payload: &Value) -> Result<PolytopeUnion<Rat>> {
    let dto: UnionDto = serde_json::from_value(payload.clone())
        .map_err(|e| parse_error(format!("polytope union: {e}")))?;
    let pieces = dto
        .pieces
        .iter()
        .map(|p| {
            let cs = p
                .ineqs
                .iter()
                .map(|c| constraint_from_dto(c, p.dim))
                .collect::<Result<Vec<_>>>()?;
            HPolyhedron::new(p.dim, cs)
        })
        .collect::<Result<Vec<_>>>()?;
    PolytopeUnion::new(dto.dim, pieces)
}

#[derive(Debug, Serialize, Deserialize)]
struct MixedGroundDto {
    d: usize,
    n: usize,
    constraint: Option<PolyhedronDto>,
}

pub fn mixed_ground_to_json(g: &MixedIntegerGround<Rat>) -> Value {
    serde_json::to_value(MixedGroundDto {
        d: g.integer_dim,
        n: g.continuous_dim,
        constraint: Some(PolyhedronDto {
            dim: g.constraint.ambient_dim(),
            ineqs: g.constraint.constraints().iter().map(constraint_to_dto).collect(),
        }),
    })
    .expect("serializable")
}

pub fn mixed_ground_from_json(payload: &Value) -> Result<MixedIntegerGround<Rat>> {
    let dto: MixedGroundDto = serde_json::from_value(payload.clone())
        .map_err(|e| parse_error(format!("mixed-integer ground: {e}")))?;
    let constraint = match &dto.constraint {
        None => HPolyhedron::whole_space(dto.d + dto.n),
        Some(p) => {
            let cs = p
                .ineqs
                .iter()
                .map(|c| constraint_from_dto(c, p.dim))
                .collect::<Result<Vec<_>>>()?;
            HPolyhedron::new(p.dim, cs)?
        }
    };
    MixedIntegerGround::new(dto.d, dto.n, constraint)
}

#[derive(Debug, Serialize, Deserialize)]
struct BoxDto {
    lo: Vec<String>,
    hi: Vec<String>,
}

pub fn box_from_json(payload: &Value) -> Result<BoxRegion<Rat>> {
    let dto: BoxDto = serde_json::from_value(payload.clone())
        .map_err(|e| parse_error(format!("box: {e}")))?;
    let lo = point_from_json(&dto.lo, dto.lo.len())?;
    let hi = point_from_json(&dto.hi, dto.lo.len())?;
    BoxRegion::new(lo, hi)
}

pub fn box_to_json(b: &BoxRegion<Rat>) -> Value {
    serde_json::to_value(BoxDto {
        lo: point_to_json(&b.lo),
        hi: point_to_json(&b.hi),
    })
    .expect("serializable")
}

/// Witness families serialize with both index sets and the actual points.
pub fn witness_to_json(witness: &HellyWitness, family: &SConvexFamily<Rat>) -> Value {
    let members: Vec<Value> = witness
        .family_indices
        .iter()
        .map(|&i| {
            let mask = &family.members()[i];
            serde_json::json!({
                "member_index": i,
                "point_indices": mask.indices(),
                "points": family
                    .universe()
                    .select(mask)
                    .iter()
                    .map(point_to_json)
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({
        "kind": "irreducible-empty-intersection",
        "members": members,
    })
}

/// Bound-verification instances: tagged by "kind" inside the payload.
pub fn verify_instance_from_json(payload: &Value) -> Result<VerifyInstance<Rat>> {
    let obj = payload
        .as_object()
        .ok_or_else(|| parse_error("bounds instance must be an object"))?;
    let kind = obj
        .get("kind")
        .and_then(|v| v.as_str())
        .ok_or_else(|| parse_error("bounds instance needs a string \"kind\""))?;
    match kind {
        "finite-s" => {
            let points = point_set_from_json(
            obj.get("points")
                    .ok_or_else(|| parse_error("finite-s instance needs \"points\""))?,
            )?;
            let lattice_truncation = obj
                .get("lattice_truncation")
                .and_then(|v| v.as_bool())
                .unwrap_or(false);
            Ok(VerifyInstance::FiniteS {
                points,
                lattice_truncation,
            })
        }
        "minkowski-truncation" => {
            let c = polyhedron_from_json(
                obj.get("c")
                    .ok_or_else(|| parse_error("minkowski instance needs \"c\""))?,
            )?;
            let lattice = lattice_from_json(
                obj.get("lattice")
                    .ok_or_else(|| parse_error("minkowski instance needs \"lattice\""))?,
            )?;
            let d_region = polyhedron_from_json(
                obj.get("d_region")
                    .ok_or_else(|| parse_error("minkowski instance needs \"d_region\""))?,
            )?;
            let window = box_from_json(
                obj.get("window")
                    .ok_or_else(|| parse_error("minkowski instance needs \"window\""))?,
            )?;
            let seeds = obj.get("seeds").and_then(|v| v.as_u64()).unwrap_or(25);
            Ok(VerifyInstance::MinkowskiTruncation {
                c,
                lattice,
                d_region,
                window,
                seeds,
            })
        }
        "mixed-integer" => {
            let l = polyhedron_from_json(
                obj.get("l")
                    .ok_or_else(|| parse_error("mixed-integer instance needs \"l\""))?,
            )?;
            let ground = mixed_ground_from_json(
                obj.get("ground")
                    .ok_or_else(|| parse_error("mixed-integer instance needs \"ground\""))?,
            )?;
            Ok(VerifyInstance::MixedInteger { l, ground })
        }
        other => Err(parse_error(format!("unknown bounds-instance kind {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn point_set_round_trip() {
        let s = FinitePointSet::<Rat>::from_int_rows(2, &[&[0, 1], &[2, -3]]).unwrap();
        let json = point_set_to_json(&s);
        let back = point_set_from_json(&json).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn fractional_values_round_trip_as_strings() {
        let half: Rat = int::<Rat>(1) / int::<Rat>(2);
        let s = FinitePointSet::new(1, vec![Point::new(vec![half.clone()])]).unwrap();
        let json = point_set_to_json(&s);
        assert_eq!(json["points"][0][0], "1/2");
        let back = point_set_from_json(&json).unwrap();
        assert_eq!(back.points()[0].coords()[0], half);
    }

    #[test]
    fn floats_rejected() {
        let json = serde_json::json!({"dim": 1, "points": [["0.5"]]});
        assert!(point_set_from_json(&json).is_err());
        let json = serde_json::json!({"dim": 1, "points": [["1e3"]]});
        assert!(point_set_from_json(&json).is_err());
    }

    #[test]
    fn polyhedron_round_trip_and_strictness_guard() {
        let p = HPolyhedron::<Rat>::bounding_box(
            &Point::from_ints(&[0, 0]),
            &Point::from_ints(&[1, 1]),
        )
        .unwrap();
        let json = polyhedron_to_json(&p);
        assert_eq!(polyhedron_from_json(&json).unwrap(), p);

        let mut bad = json.clone();
        bad["ineqs"][0]["strict"] = serde_json::json!(true);
        assert!(polyhedron_from_json(&bad).is_err());
        assert!(strict_system_from_json(&json).is_err());
    }

    #[test]
    fn wrapper_kind_is_checked() {
        let p = HPolyhedron::<Rat>::whole_space(2);
        let wrapped = wrap_instance(InstanceKind::Polyhedron, polyhedron_to_json(&p));
        let text = serde_json::to_string(&wrapped).unwrap();
        assert!(unwrap_instance(&text, InstanceKind::Polyhedron).is_ok());
        assert!(unwrap_instance(&text, InstanceKind::PointSet).is_err());
        // bare payloads are accepted
        let bare = serde_json::to_string(&polyhedron_to_json(&p)).unwrap();
        assert!(unwrap_instance(&bare, InstanceKind::Polyhedron).is_ok());
    }

    #[test]
    fn lattice_round_trip() {
        let l = Lattice::<Rat>::standard(3).unwrap();
        let json = lattice_to_json(&l);
        assert_eq!(lattice_from_json(&json).unwrap(), l);
    }

    #[test]
    fn verify_instance_parses() {
        let json = serde_json::json!({
            "kind": "finite-s",
            "points": {"dim": 1, "points": [["0"], ["1"]]},
            "lattice_truncation": true,
        });
        assert!(matches!(
            verify_instance_from_json(&json).unwrap(),
            VerifyInstance::FiniteS { lattice_truncation: true, .. }
        ));
    }
}
