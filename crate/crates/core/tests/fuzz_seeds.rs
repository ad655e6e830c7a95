//! Replays the fuzz corpus seeds through the parsers so a stable toolchain
//! exercises the same entry points.

use std::fs;
use std::path::PathBuf;

use ringlink::enumerate::{parse_catalog, CatalogSet, ClassCatalog};
use ringlink::linkpoly::LinkPolynomial;
use ringlink::netplan::NetworkSpec;
use ringlink::qla::{parse_matrix_file, write_matrix_file, Tolerances};
use ringlink::synth::StateRecipe;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| {
            let path = e.unwrap().path();
            (path.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

fn accepted(target: &str, parse: impl Fn(&str) -> bool) -> Vec<String> {
    seeds(target)
        .into_iter()
        .filter(|(_, text)| parse(text))
        .map(|(name, _)| name)
        .collect()
}

#[test]
fn polynomial_seeds() {
    let ok = accepted("parse_polynomial", |t| {
        LinkPolynomial::parse(t).is_ok_and(|p| LinkPolynomial::parse_with_rings(&p.to_string(), p.rings()) == Ok(p))
    });
    assert_eq!(ok, ["hopf", "reducible", "spaced", "three_groups"]);
}

#[test]
fn density_matrix_seeds() {
    let tol = Tolerances::default();
    let ok = accepted("parse_density_matrix", |t| {
        parse_matrix_file(t, false, &tol).is_ok_and(|rho| {
            parse_matrix_file(&write_matrix_file(rho.operator()), false, &tol).unwrap().matrix() == rho.matrix()
        })
    });
    assert_eq!(ok, ["bell", "qubit_complex", "qutrit"]);
    let raw = accepted("parse_density_matrix", |t| parse_matrix_file(t, true, &tol).is_ok());
    assert_eq!(raw.len(), 4);
}

#[test]
fn network_spec_seeds() {
    let ok = accepted("parse_network_spec", |t| {
        NetworkSpec::parse_json(t).is_ok_and(|s| s.polynomial().is_ok())
    });
    assert_eq!(ok, ["four_party", "pair"]);
}

#[test]
fn catalog_seeds() {
    let lower = CatalogSet::embedded();
    let ok = accepted("parse_catalog", |t| {
        parse_catalog(t).is_ok_and(|f| ClassCatalog::from_file(f, &lower).is_ok())
    });
    assert_eq!(ok, ["three_rings", "two_rings"]);
}

#[test]
fn recipe_seeds() {
    let ok = accepted("parse_recipe", |t| {
        StateRecipe::parse(t).is_ok_and(|r| StateRecipe::parse(&r.to_string()) == Ok(r))
    });
    assert_eq!(ok, ["bell", "halved", "three_terms"]);
}
