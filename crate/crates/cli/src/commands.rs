//! Subcommand handlers. All validation failures surface as core errors so
//! the process exits with code 2; internal invariant failures exit 1.

use std::path::Path;

use serde_json::{json, Value};

use maxfree_core::io;
use maxfree_core::ratgeom::{LinearConstraint, StrictSystem};
use maxfree_core::sconvex::{self, SetGenerator, DEFAULT_ENUM_CAP};
use maxfree_core::separation;
use maxfree_core::sfree::{self, GroundSet, ImproveOutcome, MaximalityCertificate};
use maxfree_core::structured::{self, DEFAULT_DOIGNON_CAP};
use maxfree_core::{Error, Rat, Result};

use crate::report::RunReport;
use crate::{
    Command, ConvertArgs, HellyCommand, ParityCommand, SeparateArgs, SfreeCommand, VerifyCommand,
};

pub fn dispatch(command: &Command, seed: u64, report: &mut RunReport) -> Result<()> {
    match command {
        Command::Helly { action } => match action {
            HellyCommand::Compute(args) => helly_compute(args, seed, report),
        },
        Command::Sfree { action } => match action {
            SfreeCommand::Check(args) => sfree_check(args, report),
            SfreeCommand::Maximalize(args) => sfree_maximalize(args, report),
            SfreeCommand::Certify(args) => sfree_certify(args, report),
            SfreeCommand::Improve(args) => sfree_improve(args, report),
        },
        Command::Separate(args) => separate(args, report),
        Command::Parity { action } => match action {
            ParityCommand::Find(args) => parity_find(args, report),
        },
        Command::Verify { action } => match action {
            VerifyCommand::Doignon(args) => verify_doignon(args, seed, report),
            VerifyCommand::Bounds(args) => verify_bounds(args, seed, report),
        },
        Command::Convert(args) => convert(args, report),
    }
}

/// Enumeration cap: environment override or the library default.
fn enum_cap() -> usize {
    std::env::var("MAXFREE_ENUM_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

fn read_instance(path: &Path, report: &mut RunReport) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| {
        Error::precondition(format!("cannot read {}: {e}", path.display()))
    })?;
    report.record_input(path, &bytes);
    String::from_utf8(bytes)
        .map_err(|_| Error::precondition(format!("{} is not UTF-8", path.display())))
}

fn load_points(path: &Path, report: &mut RunReport) -> Result<maxfree_core::RPointSet> {
    let text = read_instance(path, report)?;
    let payload = io::unwrap_instance(&text, io::InstanceKind::PointSet)?;
    let points = io::point_set_from_json(&payload)?;
    if points.duplicates_removed() > 0 {
        eprintln!(
            "warning: {} duplicate point(s) removed from {}",
            points.duplicates_removed(),
            path.display()
        );
    }
    Ok(points)
}

fn load_polyhedron(path: &Path, report: &mut RunReport) -> Result<maxfree_core::RPolyhedron> {
    let text = read_instance(path, report)?;
    let payload = io::unwrap_instance(&text, io::InstanceKind::Polyhedron)?;
    io::polyhedron_from_json(&payload)
}

fn load_union(path: &Path, report: &mut RunReport) -> Result<maxfree_core::RUnion> {
    let text = read_instance(path, report)?;
    let payload = io::unwrap_instance(&text, io::InstanceKind::PolytopeUnion)?;
    io::union_from_json(&payload)
}

fn load_ground(
    points: &Option<std::path::PathBuf>,
    union: &Option<std::path::PathBuf>,
    report: &mut RunReport,
) -> Result<GroundSet<Rat>> {
    match (points, union) {
        (Some(p), None) => Ok(GroundSet::Points(load_points(p, report)?)),
        (None, Some(u)) => Ok(GroundSet::Union(load_union(u, report)?)),
        _ => Err(Error::precondition(
            "exactly one of --points or --union is required",
        )),
    }
}

fn helly_compute(args: &crate::HellyComputeArgs, seed: u64, report: &mut RunReport) -> Result<()> {
    let points = load_points(&args.points, report)?;
    let cap = enum_cap();
    if args.lower_bound {
        let (k, _) = sconvex::helly_lower_bound(&points, seed, args.samples)?;
        println!(
            "h(S) >= {k} (randomized lower bound, {} samples, seed {seed})",
            args.samples
        );
        report.set_result("mode", json!("lower-bound"));
        report.set_result("helly_lower_bound", json!(k));
        report.set_result("samples", json!(args.samples));
        return Ok(());
    }
    let (k, witness) = sconvex::helly_number(&points, cap)?;
    println!("h(S) = {k}");
    report.set_result("mode", json!("exact"));
    report.set_result("helly_number", json!(k));
    if let Some(w) = witness {
        let family = sconvex::enumerate_s_convex(&points, cap)?;
        println!("witness family (irreducible, empty intersection):");
        for &i in &w.family_indices {
            let mask = &family.members()[i];
            let pts: Vec<String> = family
                .universe()
                .select(mask)
                .iter()
                .map(|p| p.to_string())
                .collect();
            println!("  member {i}: {{{}}}", pts.join(", "));
        }
        report.set_result("witness", io::witness_to_json(&w, &family));
    }
    Ok(())
}

fn sfree_check(args: &crate::SfreeCheckArgs, report: &mut RunReport) -> Result<()> {
    let l = load_polyhedron(&args.polyhedron, report)?;
    let ground = load_ground(&args.points, &args.union, report)?;
    match sfree::is_s_free(&l, &ground)? {
        None => {
            println!("S-free: the interior contains no ground point");
            report.set_result("s_free", json!(true));
        }
        Some(p) => {
            println!("NOT S-free: ground point {p} lies in the interior");
            report.set_result("s_free", json!(false));
            report.set_result(
                "violating_point",
                Value::Array(
                    p.coords()
                        .iter()
                        .map(|c| Value::String(c.to_string()))
                        .collect(),
                ),
            );
        }
    }
    Ok(())
}

fn parse_order(spec: &str, len: usize) -> Result<Vec<usize>> {
    let mut order = Vec::new();
    for part in spec.split(',') {
        let idx: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::precondition(format!("bad order entry {part:?}")))?;
        if idx == 0 || idx > len {
            return Err(Error::precondition(format!(
                "order entry {idx} out of range 1..={len}"
            )));
        }
        order.push(idx - 1);
    }
    Ok(order)
}

fn sfree_maximalize(args: &crate::SfreeMaximalizeArgs, report: &mut RunReport) -> Result<()> {
    let text = read_instance(&args.system, report)?;
    let payload = io::unwrap_instance(&text, io::InstanceKind::StrictSystem)?;
    let system = io::strict_system_from_json(&payload)?;
    let points = load_points(&args.points, report)?;
    let order = match &args.order {
        None => None,
        Some(spec) => Some(parse_order(spec, system.constraints().len())?),
    };
    let result = sfree::maximalize_finite(&system, &points, order.as_deref())?;
    if result.stripped_trivial > 0 {
        eprintln!(
            "warning: {} zero-normal constraint(s) stripped from the seed",
            result.stripped_trivial
        );
    }

    println!("trace:");
    for action in &result.processing_log {
        println!("  {action}");
    }
    println!("maximal S-free polyhedron: {}", result.polyhedron);
    println!("facet witnesses:");
    for (facet, p) in &result.facet_witnesses {
        println!("  facet {}: {} ({})", facet + 1, result.polyhedron.constraints()[*facet], p);
    }

    report.set_result("polyhedron", io::polyhedron_to_json(&result.polyhedron));
    report.set_result(
        "witnesses",
        Value::Array(
            result
                .facet_witnesses
                .iter()
                .map(|(facet, p)| {
                    json!({
                        "facet": facet,
                        "point": p.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        ),
    );
    report.set_result(
        "log",
        Value::Array(
            result
                .processing_log
                .iter()
                .map(|a| match a {
                    sfree::ProcessingAction::RemovedRedundant { constraint } => json!({
                        "constraint": constraint,
                        "action": "removed-redundant",
                    }),
                    sfree::ProcessingAction::Tightened { constraint, old, new } => json!({
                        "constraint": constraint,
                        "action": "tightened",
                        "old": old.to_string(),
                        "new": new.to_string(),
                    }),
                    sfree::ProcessingAction::AlreadyBlocked { constraint } => json!({
                        "constraint": constraint,
                        "action": "already-blocked",
                    }),
                })
                .collect(),
        ),
    );
    Ok(())
}

fn certificate_json(cert: &MaximalityCertificate<Rat>) -> Value {
    let witnesses = |ws: &[(usize, maxfree_core::RPoint)]| {
        Value::Array(
            ws.iter()
                .map(|(facet, p)| {
                    json!({
                        "facet": facet,
                        "point": p.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    };
    match cert {
        MaximalityCertificate::CertifiedMaximal { witnesses: ws } => json!({
            "status": "certified-maximal",
            "witnesses": witnesses(ws),
        }),
        MaximalityCertificate::NotMaximal { open_facet, witnesses: ws } => json!({
            "status": "not-maximal",
            "open_facet": open_facet,
            "witnesses": witnesses(ws),
        }),
    }
}

fn print_certificate(cert: &MaximalityCertificate<Rat>) {
    match cert {
        MaximalityCertificate::CertifiedMaximal { witnesses } => {
            println!("certified-maximal: every facet's relative interior holds a ground point");
            for (facet, p) in witnesses {
                println!("  facet {}: witness {p}", facet + 1);
            }
        }
        MaximalityCertificate::NotMaximal { open_facet, .. } => {
            println!(
                "not-maximal: facet {} has no ground point in its relative interior",
                open_facet + 1
            );
        }
    }
}

fn sfree_certify(args: &crate::SfreeCertifyArgs, report: &mut RunReport) -> Result<()> {
    let l = load_polyhedron(&args.polyhedron, report)?;
    let ground = load_ground(&args.points, &args.union, report)?;
    let cert = sfree::maximality_certificate(&l, &ground)?;
    print_certificate(&cert);
    report.set_result("certificate", certificate_json(&cert));
    Ok(())
}

fn sfree_improve(args: &crate::SfreeImproveArgs, report: &mut RunReport) -> Result<()> {
    let mut current = load_polyhedron(&args.polyhedron, report)?;
    let union = load_union(&args.union, report)?;
    let mut steps = Vec::new();
    let mut status = "iteration-cap-reached";
    for step in 0..args.iterations {
        match sfree::improve_via_separation(&current, &union)? {
            ImproveOutcome::CertifiedMaximal { witnesses } => {
                println!("step {}: certified-maximal", step + 1);
                status = "certified-maximal";
                steps.push(json!({
                    "step": step + 1,
                    "outcome": "certified-maximal",
                    "witnesses": witnesses.len(),
                }));
                break;
            }
            ImproveOutcome::Enlarged {
                polyhedron,
                open_facet,
                growth_witness,
                ..
            } => {
                println!(
                    "step {}: enlarged through open facet {} (witness {growth_witness})",
                    step + 1,
                    open_facet + 1
                );
                steps.push(json!({
                    "step": step + 1,
                    "outcome": "enlarged",
                    "open_facet": open_facet,
                }));
                current = polyhedron;
            }
        }
    }
    println!("final polyhedron: {current}");
    println!("status: {status}");
    report.set_result("status", json!(status));
    report.set_result("steps", Value::Array(steps));
    report.set_result("polyhedron", io::polyhedron_to_json(&current));
    Ok(())
}

fn separate(args: &SeparateArgs, report: &mut RunReport) -> Result<()> {
    let p = load_polyhedron(&args.p, report)?;
    let q = load_polyhedron(&args.q, report)?;
    let result = separation::separate_with_facet(&p, &q, args.facet)?;
    println!("case: {}", result.case_tag().tag());
    println!("halfspace: {}", result.halfspace());
    println!(
        "checks: P <= H: {}, relint(G) <= int(H): {}, Q /\\ int(H) = empty: {}",
        result.checks()[0],
        result.checks()[1],
        result.checks()[2]
    );
    report.set_result(
        "separation",
        json!({
            "case": result.case_tag().tag(),
            "halfspace": {
                "u": result
                    .halfspace()
                    .normal
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
                "b": result.halfspace().bound.to_string(),
                "strict": false,
            },
            "checks": result.checks(),
        }),
    );
    Ok(())
}

fn parity_find(args: &crate::ParityFindArgs, report: &mut RunReport) -> Result<()> {
    let text = read_instance(&args.lattice, report)?;
    let payload = io::unwrap_instance(&text, io::InstanceKind::Lattice)?;
    let lattice = io::lattice_from_json(&payload)?;
    let points = load_points(&args.points, report)?;
    match structured::parity_pair(points.points(), &lattice)? {
        Some(pair) => {
            println!(
                "pair: {} and {} with lattice midpoint {}",
                pair.first, pair.second, pair.midpoint
            );
            report.set_result(
                "pair",
                json!({
                    "first": pair.first.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "second": pair.second.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "midpoint": pair.midpoint.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }),
            );
        }
        None => {
            println!("none: all parity classes are distinct");
            report.set_result("pair", Value::Null);
        }
    }
    Ok(())
}

fn verify_doignon(args: &crate::VerifyDoignonArgs, _seed: u64, report: &mut RunReport) -> Result<()> {
    let d = args.d;
    let family = structured::doignon_family::<Rat>(d, DEFAULT_DOIGNON_CAP)?;
    let n = family.len();

    // total intersection empty, every leave-one-out subfamily intersects
    let universe = family.universe().len();
    let mut total = sconvex::SubsetMask::full(universe);
    for m in family.members() {
        total = total.and(m);
    }
    if !total.is_empty() {
        return Err(Error::Internal("witness family total intersection not empty".into()));
    }
    for skip in 0..n {
        let mut inter = sconvex::SubsetMask::full(universe);
        for (i, m) in family.members().iter().enumerate() {
            if i != skip {
                inter = inter.and(m);
            }
        }
        if inter.is_empty() {
            return Err(Error::Internal(
                "a proper subfamily of the witness family has empty intersection".into(),
            ));
        }
    }
    println!(
        "witness family over {{0,1}}^{d}: {n} members, empty total intersection, every proper subfamily intersects"
    );
    println!("h(Z^{d}) >= 2^{d} = {n}");
    report.set_result("dimension", json!(d));
    report.set_result("family_size", json!(n));
    report.set_result("lower_bound", json!(n));

    if let Some(t_max) = args.t {
        let generator: SetGenerator<Rat> = SetGenerator::IntegerLattice { dim: d };
        let profile = sconvex::truncation_profile(&generator, 1, t_max, enum_cap())?;
        println!("truncation profile of Z^{d}:");
        for (t, h) in &profile.entries {
            println!("  t = {t}: h = {h}");
        }
        if let Some(t) = profile.truncated_at {
            println!("  t = {t}: beyond the enumeration cap, stopped");
        }
        report.set_result(
            "profile",
            json!({
                "entries": profile.entries,
                "truncated_at": profile.truncated_at,
            }),
        );
    }
    Ok(())
}

fn verify_bounds(args: &crate::VerifyBoundsArgs, seed: u64, report: &mut RunReport) -> Result<()> {
    let text = read_instance(&args.instance, report)?;
    let payload = io::unwrap_instance(&text, io::InstanceKind::BoundsInstance)?;
    let instance = io::verify_instance_from_json(&payload)?;
    let bound_report = structured::verify_bounds(&instance, enum_cap(), seed)?;
    print!("{}", bound_report.render_text());
    report.set_result(
        "bound_report",
        json!({
            "instance": bound_report.instance,
            "quantities": bound_report
                .quantities
                .iter()
                .map(|q| {
                    json!({
                        "name": q.name,
                        "value": q.value,
                        "provenance": q.provenance.tag(),
                        "bound_name": q.bound_name,
                        "bound": q.bound,
                    })
                })
                .collect::<Vec<_>>(),
            "verdict": match bound_report.verdict {
                structured::Verdict::Consistent => "consistent",
                structured::Verdict::Violation => "VIOLATION",
            },
            "notes": bound_report.notes,
        }),
    );
    if bound_report.verdict == structured::Verdict::Violation {
        return Err(Error::Internal(
            "a certified quantity exceeded its paper bound".into(),
        ));
    }
    Ok(())
}

fn convert(args: &ConvertArgs, report: &mut RunReport) -> Result<()> {
    let p = load_polyhedron(&args.polyhedron, report)?;
    if p.dim()? != p.ambient_dim() as i64 {
        return Err(Error::precondition(
            "conversion to a strict system needs a full-dimensional polyhedron (its interior is empty otherwise)",
        ));
    }
    let strict: Vec<LinearConstraint<Rat>> = p
        .constraints()
        .iter()
        .map(LinearConstraint::strict_version)
        .collect();
    let system = StrictSystem::new(p.ambient_dim(), strict)?;
    let payload = io::strict_system_to_json(&system);
    let wrapped = io::wrap_instance(io::InstanceKind::StrictSystem, payload.clone());
    let text = serde_json::to_string_pretty(&wrapped).expect("serializable");
    match &args.output {
        Some(path) => {
            std::fs::write(path, text + "\n").map_err(|e| {
                Error::precondition(format!("cannot write {}: {e}", path.display()))
            })?;
            println!("strict system written to {}", path.display());
        }
        None => println!("{text}"),
    }
    report.set_result("strict_system", payload);
    Ok(())
}
