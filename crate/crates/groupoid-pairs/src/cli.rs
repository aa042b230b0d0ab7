//! Batch command-line surface.
//!
//! Subcommands: `validate`, `example`, `double`, `dual`, `gendouble`,
//! `enumerate-braidings`, `build-hopf`, `check-hopf`, `r-matrix`,
//! `drinfeld-double`, `report`. Flags: `--max-cells N`, `--max-candidates N`,
//! `--out FILE`, `--pretty`. Exit codes: 0 all checks pass, 1 a mathematical
//! law is violated (the report carries witnesses), 2 malformed input or
//! usage error. Size guards skip expensive sections with explicit markers,
//! never silently.

use crate::double::{double, generalized_double};
use crate::error::Error;
use crate::fleet;
use crate::hopf::drinfeld::{
    certify_double_algebra, certify_drinfeld_iso, certify_duality_pairing, certify_vanishing_rule,
    drinfeld_iso, DoubleAlgebra,
};
use crate::hopf::rmatrix::{certify_drinfeld_element, certify_r_matrix, r_matrix};
use crate::hopf::WeakHopfAlgebra;
use crate::io;
use crate::matched_pair::MatchedPair;
use crate::morphism::MatchedPairMorphism;
use crate::rotation;
use serde_json::{json, Value};

const USAGE: &str = "usage: groupoid-pairs <command> [args] [--max-cells N] [--max-candidates N] [--out FILE] [--pretty]

commands:
  validate <file>                      validate a matched-pair or workspace document
  example <name> [params]              emit a built-in matched pair:
                                         initial N | terminal N | mxy NX NY
                                         group s3 c3 c2 | group c6 c2 c3
                                         bundle <groupoid>   (conjugation pair)
                                         semi v|h <groupoid>
  double <file>                        the double D(V,H) as a pair document
  dual <file>                          the dual pair document
  gendouble <file> <initial|terminal|identity>
                                       generalized double along a canonical morphism
  enumerate-braidings <file>           all matched pairs of rotations + certification
  build-hopf <file>                    dimensions and structure of k(V,H)
  check-hopf <file>                    full weak Hopf axiom certification
  r-matrix <file>                      R-matrices and Drinfeld elements per rotation pair
  drinfeld-double <file>               the double algebra and its isomorphism onto k(D(V,H))
  report <file>                        everything above in one machine-readable artifact
";

struct Opts {
    max_cells: usize,
    max_candidates: usize,
    out: Option<String>,
    pretty: bool,
    positional: Vec<String>,
}

fn parse_opts(args: &[String]) -> Result<Opts, String> {
    let mut opts = Opts {
        max_cells: 64,
        max_candidates: 2_000_000,
        out: None,
        pretty: false,
        positional: Vec::new(),
    };
    let mut it = args.iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--max-cells" => {
                opts.max_cells = it
                    .next()
                    .and_then(|v| v.parse().ok())
                    .ok_or("--max-cells needs an integer")?;
            }
            "--max-candidates" => {
                opts.max_candidates = it
                    .next()
                    .and_then(|v| v.parse().ok())
                    .ok_or("--max-candidates needs an integer")?;
            }
            "--out" => {
                opts.out = Some(it.next().ok_or("--out needs a path")?.clone());
            }
            "--pretty" => opts.pretty = true,
            _ if a.starts_with("--") => return Err(format!("unknown flag {a}")),
            _ => opts.positional.push(a.clone()),
        }
    }
    Ok(opts)
}

fn emit(value: &Value, opts: &Opts) -> Result<(), Error> {
    let text = io::to_canonical_json(value, opts.pretty)?;
    match &opts.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn load_pairs(path: &str) -> Result<Vec<(String, MatchedPair)>, Error> {
    let text = std::fs::read_to_string(path)?;
    io::pairs_from_json(&text)
}

/// Entry point used by the binary; returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    let (cmd, rest) = match args.split_first() {
        Some(x) => x,
        None => {
            eprint!("{USAGE}");
            return 2;
        }
    };
    let opts = match parse_opts(rest) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            eprint!("{USAGE}");
            return 2;
        }
    };
    let outcome = match cmd.as_str() {
        "validate" => cmd_validate(&opts),
        "example" => cmd_example(&opts),
        "double" => cmd_double(&opts, false),
        "dual" => cmd_double(&opts, true),
        "gendouble" => cmd_gendouble(&opts),
        "enumerate-braidings" => cmd_enumerate_braidings(&opts),
        "build-hopf" => cmd_build_hopf(&opts),
        "check-hopf" => cmd_check_hopf(&opts),
        "r-matrix" => cmd_r_matrix(&opts),
        "drinfeld-double" => cmd_drinfeld_double(&opts),
        "report" => cmd_report(&opts),
        "--help" | "-h" | "help" => {
            print!("{USAGE}");
            return 0;
        }
        other => {
            eprintln!("error: unknown command {other}");
            eprint!("{USAGE}");
            return 2;
        }
    };
    match outcome {
        Ok(code) => code,
        Err(Error::FailedValidation(report)) => {
            let v = json!({"status": "violation", "report": report});
            let _ = emit(
                &v,
                &Opts {
                    out: None,
                    ..default_opts()
                },
            );
            1
        }
        Err(e @ (Error::Json(_) | Error::Io(_) | Error::InvalidDocument(_))) => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn default_opts() -> Opts {
    Opts {
        max_cells: 64,
        max_candidates: 2_000_000,
        out: None,
        pretty: false,
        positional: Vec::new(),
    }
}

fn need(opts: &Opts, n: usize, what: &str) -> Result<(), Error> {
    if opts.positional.len() < n {
        Err(Error::InvalidDocument(format!("missing argument: {what}")))
    } else {
        Ok(())
    }
}

fn cmd_validate(opts: &Opts) -> Result<i32, Error> {
    need(opts, 1, "document path")?;
    let text = std::fs::read_to_string(&opts.positional[0])?;
    match io::pairs_from_json(&text) {
        Ok(pairs) => {
            let reports: Vec<Value> = pairs
                .iter()
                .map(|(name, m)| {
                    json!({
                        "name": name,
                        "cells": m.cell_count(),
                        "validation": "ok",
                        "derived_identities": if m.derived_identities().is_ok() { "ok" } else { "violated" },
                    })
                })
                .collect();
            let ok = pairs.iter().all(|(_, m)| m.derived_identities().is_ok());
            emit(
                &json!({"status": if ok { "ok" } else { "violation" }, "pairs": reports}),
                opts,
            )?;
            Ok(if ok { 0 } else { 1 })
        }
        Err(Error::FailedValidation(report)) => {
            emit(&json!({"status": "violation", "report": report}), opts)?;
            Ok(1)
        }
        Err(e) => Err(e),
    }
}

fn cmd_example(opts: &Opts) -> Result<i32, Error> {
    need(opts, 1, "example name")?;
    let args = &opts.positional;
    let parse_n = |s: &String| -> Result<usize, Error> {
        s.parse()
            .map_err(|_| Error::InvalidDocument(format!("not a size: {s}")))
    };
    let pair = match args[0].as_str() {
        "initial" => {
            need(opts, 2, "base size")?;
            MatchedPair::initial(parse_n(&args[1])?)?
        }
        "terminal" => {
            need(opts, 2, "base size")?;
            MatchedPair::terminal(parse_n(&args[1])?)?
        }
        "mxy" => {
            need(opts, 3, "factor sizes")?;
            MatchedPair::mxy(parse_n(&args[1])?, parse_n(&args[2])?)?
        }
        "group" => {
            need(opts, 4, "group and two subgroup names")?;
            let (sigma, f, g) = fleet::group_factorization_by_name(&args[1], &args[2], &args[3])
                .ok_or_else(|| {
                    Error::InvalidDocument(format!(
                        "unknown factorization {} {} {}",
                        args[1], args[2], args[3]
                    ))
                })?;
            MatchedPair::group_pair(&sigma, &f, &g)?
        }
        "bundle" => {
            need(opts, 2, "groupoid name")?;
            let h = fleet::groupoid_by_name(&args[1])
                .ok_or_else(|| Error::InvalidDocument(format!("unknown groupoid {}", args[1])))?;
            MatchedPair::conjugation(&h)
        }
        "semi" => {
            need(opts, 3, "side and groupoid name")?;
            let g = fleet::groupoid_by_name(&args[2])
                .ok_or_else(|| Error::InvalidDocument(format!("unknown groupoid {}", args[2])))?;
            match args[1].as_str() {
                "v" => MatchedPair::semi_vertical(&g),
                "h" => MatchedPair::semi_horizontal(&g),
                other => {
                    return Err(Error::InvalidDocument(format!(
                        "semi side must be v or h, got {other}"
                    )))
                }
            }
        }
        other => {
            return Err(Error::InvalidDocument(format!("unknown example {other}")));
        }
    };
    emit(&serde_json::to_value(io::pair_to_doc(&pair))?, opts)?;
    Ok(0)
}

fn cmd_double(opts: &Opts, dual: bool) -> Result<i32, Error> {
    need(opts, 1, "document path")?;
    let pairs = load_pairs(&opts.positional[0])?;
    let (_, m) = &pairs[0];
    let result = if dual { m.dual() } else { double(m).pair };
    emit(&serde_json::to_value(io::pair_to_doc(&result))?, opts)?;
    Ok(0)
}

fn cmd_gendouble(opts: &Opts) -> Result<i32, Error> {
    need(opts, 2, "document path and morphism kind")?;
    let pairs = load_pairs(&opts.positional[0])?;
    let (_, m) = &pairs[0];
    let mor = match opts.positional[1].as_str() {
        "identity" => MatchedPairMorphism::identity(m),
        "initial" => MatchedPairMorphism::from_initial(m)?,
        "terminal" => MatchedPairMorphism::to_terminal(m)?,
        other => {
            return Err(Error::InvalidDocument(format!(
                "morphism must be identity, initial or terminal; got {other}"
            )))
        }
    };
    let d = generalized_double(&mor)?;
    emit(&serde_json::to_value(io::pair_to_doc(&d.pair))?, opts)?;
    Ok(0)
}

fn rotation_pairs_json(m: &MatchedPair, max_candidates: usize) -> Result<(Value, bool), Error> {
    match rotation::enumerate_matched_rotation_pairs(m, max_candidates) {
        Ok(pairs) => {
            let mut all_ok = true;
            let listed: Vec<Value> = pairs
                .iter()
                .map(|(xi, eta)| {
                    let derived = rotation::derived_rotation_identities(m, xi, eta);
                    let fleet_reps = fleet::standard_reps(m, 32, 4);
                    let reps: Vec<_> = fleet_reps.iter().map(|(_, r)| r.clone()).collect();
                    let morphisms = fleet::standard_rep_morphisms(m, &fleet_reps);
                    let braiding = rotation::certify_braiding(m, xi, eta, &reps, &morphisms);
                    all_ok &= derived.is_ok() && braiding.is_ok();
                    json!({
                        "xi": io::arrow_map_to_pairs(xi),
                        "eta": io::arrow_map_to_pairs(eta),
                        "derived_identities": if derived.is_ok() { "ok" } else { "violated" },
                        "braiding_certified": if braiding.is_ok() { "ok" } else { "violated" },
                    })
                })
                .collect();
            Ok((json!({"count": pairs.len(), "pairs": listed}), all_ok))
        }
        Err(Error::SizeGuard { what, size, guard }) => Ok((
            json!({"skipped": format!("{what}: {size} > {guard}")}),
            true,
        )),
        Err(e) => Err(e),
    }
}

fn cmd_enumerate_braidings(opts: &Opts) -> Result<i32, Error> {
    need(opts, 1, "document path")?;
    let pairs = load_pairs(&opts.positional[0])?;
    let (name, m) = &pairs[0];
    let (value, ok) = rotation_pairs_json(m, opts.max_candidates)?;
    emit(&json!({"pair": name, "braidings": value}), opts)?;
    Ok(if ok { 0 } else { 1 })
}

fn hopf_summary(m: &MatchedPair) -> (Value, bool) {
    let w = WeakHopfAlgebra::build(m);
    let report = w.certify();
    let ok = report.is_ok();
    (
        json!({
            "dimension": w.dim(),
            "base": m.base_size(),
            "commutative": w.is_commutative(),
            "axioms": if ok { json!("ok") } else { json!(report) },
        }),
        ok,
    )
}

fn cmd_build_hopf(opts: &Opts) -> Result<i32, Error> {
    need(opts, 1, "document path")?;
    let pairs = load_pairs(&opts.positional[0])?;
    let (name, m) = &pairs[0];
    let w = WeakHopfAlgebra::build(m);
    emit(
        &json!({
            "pair": name,
            "dimension": w.dim(),
            "commutative": w.is_commutative(),
            "basis": (0..w.dim()).map(|i| w.basis_label(i)).collect::<Vec<_>>(),
        }),
        opts,
    )?;
    Ok(0)
}

fn cmd_check_hopf(opts: &Opts) -> Result<i32, Error> {
    need(opts, 1, "document path")?;
    let pairs = load_pairs(&opts.positional[0])?;
    let (name, m) = &pairs[0];
    let (value, ok) = hopf_summary(m);
    emit(&json!({"pair": name, "hopf": value}), opts)?;
    Ok(if ok { 0 } else { 1 })
}

fn r_matrix_json(m: &MatchedPair, max_candidates: usize) -> Result<(Value, bool), Error> {
    let w = WeakHopfAlgebra::build(m);
    match rotation::enumerate_matched_rotation_pairs(m, max_candidates) {
        Ok(pairs) => {
            let mut all_ok = true;
            let listed: Vec<Value> = pairs
                .iter()
                .map(|(xi, eta)| match r_matrix(&w, xi, eta) {
                    Ok(rm) => {
                        let cert = certify_r_matrix(&w, &rm);
                        let drin = certify_drinfeld_element(&w, xi, eta, &rm);
                        all_ok &= cert.is_ok() && drin.is_ok();
                        json!({
                            "r_support": rm.r.len(),
                            "r_axioms": if cert.is_ok() { "ok" } else { "violated" },
                            "drinfeld_element": if drin.is_ok() { "ok" } else { "violated" },
                        })
                    }
                    Err(e) => {
                        all_ok = false;
                        json!({"error": e.to_string()})
                    }
                })
                .collect();
            Ok((json!({"count": pairs.len(), "structures": listed}), all_ok))
        }
        Err(Error::SizeGuard { what, size, guard }) => Ok((
            json!({"skipped": format!("{what}: {size} > {guard}")}),
            true,
        )),
        Err(e) => Err(e),
    }
}

fn cmd_r_matrix(opts: &Opts) -> Result<i32, Error> {
    need(opts, 1, "document path")?;
    let pairs = load_pairs(&opts.positional[0])?;
    let (name, m) = &pairs[0];
    let (value, ok) = r_matrix_json(m, opts.max_candidates)?;
    emit(&json!({"pair": name, "quasitriangular": value}), opts)?;
    Ok(if ok { 0 } else { 1 })
}

fn drinfeld_double_json(m: &MatchedPair) -> (Value, bool) {
    let da = DoubleAlgebra::build(m);
    let d = double(m);
    let dw = WeakHopfAlgebra::build(&d.pair);
    let duality = certify_duality_pairing(&da.hopf, &da.dual, &da.transpose);
    let algebra = certify_double_algebra(&da);
    let vanishing = certify_vanishing_rule(&da);
    let (iso_ok, dim_match) = match drinfeld_iso(&da, &d) {
        Ok(psi) => (certify_drinfeld_iso(&da, &dw, &psi).is_ok(), true),
        Err(_) => (false, false),
    };
    let ok = duality.is_ok() && algebra.is_ok() && vanishing.is_ok() && iso_ok;
    (
        json!({
            "dimension": da.dim(),
            "cells_of_double_pair": d.pair.cell_count(),
            "duality_pairing": if duality.is_ok() { "ok" } else { "violated" },
            "associative_unital": if algebra.is_ok() { "ok" } else { "violated" },
            "vanishing_rule": if vanishing.is_ok() { "ok" } else { "violated" },
            "iso_onto_double_pair_algebra": if iso_ok { "ok" } else { "violated" },
            "dimension_matches": dim_match,
        }),
        ok,
    )
}

fn cmd_drinfeld_double(opts: &Opts) -> Result<i32, Error> {
    need(opts, 1, "document path")?;
    let pairs = load_pairs(&opts.positional[0])?;
    let (name, m) = &pairs[0];
    if !fleet::within_cell_guard(m, opts.max_cells) {
        emit(
            &json!({"pair": name, "skipped": format!("cells {} > --max-cells {}", m.cell_count(), opts.max_cells)}),
            opts,
        )?;
        return Ok(0);
    }
    let (value, ok) = drinfeld_double_json(m);
    emit(&json!({"pair": name, "drinfeld_double": value}), opts)?;
    Ok(if ok { 0 } else { 1 })
}

fn cmd_report(opts: &Opts) -> Result<i32, Error> {
    need(opts, 1, "document path")?;
    let pairs = load_pairs(&opts.positional[0])?;
    let mut all_ok = true;
    let mut sections = Vec::new();
    for (name, m) in &pairs {
        let validation = m.validate();
        let derived = m.derived_identities();
        all_ok &= validation.is_ok() && derived.is_ok();

        let dual_ok = m.dual().validate().is_ok() && m.dual().dual() == *m;
        let d = double(m);
        let double_ok = d.pair.validate().is_ok() && d.pair.derived_identities().is_ok();
        all_ok &= dual_ok && double_ok;

        let (braidings, b_ok) = rotation_pairs_json(m, opts.max_candidates)?;
        all_ok &= b_ok;

        let within = fleet::within_cell_guard(m, opts.max_cells);
        let (hopf, rmat, ddbl) = if within {
            let (h, h_ok) = hopf_summary(m);
            let (r, r_ok) = r_matrix_json(m, opts.max_candidates)?;
            let (dd, dd_ok) = drinfeld_double_json(m);
            all_ok &= h_ok && r_ok && dd_ok;
            (h, r, dd)
        } else {
            let marker = json!({"skipped": format!("cells {} > --max-cells {}", m.cell_count(), opts.max_cells)});
            (marker.clone(), marker.clone(), marker)
        };
        sections.push(json!({
            "pair": name,
            "cells": m.cell_count(),
            "validation": if validation.is_ok() { json!("ok") } else { json!(validation) },
            "derived_identities": if derived.is_ok() { json!("ok") } else { json!(derived) },
            "dual_involution": dual_ok,
            "double_valid": double_ok,
            "braidings": braidings,
            "weak_hopf": hopf,
            "quasitriangular": rmat,
            "drinfeld_double": ddbl,
        }));
    }
    emit(
        &json!({"status": if all_ok { "ok" } else { "violation" }, "pairs": sections}),
        opts,
    )?;
    Ok(if all_ok { 0 } else { 1 })
}
