use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ringlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlink"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn enumerate_four_rings() {
    let o = ringlink(&["enumerate", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "40\n");
}

#[test]
fn enumerate_writes_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c3.tsv");
    let o = ringlink(&["enumerate", "3", "--output", path(&file)]);
    assert_eq!(stdout(&o), "4\n");
    let text = fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("# ringlink catalog v1 rings=3 classes=4\n"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn five_ring_catalog_is_cached() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let first = ringlink(&["--cache-dir", path(&cache), "enumerate", "5"]);
    assert_eq!(code(&first), 0);
    let cached = cache.join("catalog-5.tsv");
    let text = fs::read_to_string(&cached).unwrap();
    let second = ringlink(&["--cache-dir", path(&cache), "enumerate", "5"]);
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(fs::read_to_string(&cached).unwrap(), text);

    fs::write(&cached, text.replacen("5^1\t", "5^9999\t", 1)).unwrap();
    let corrupt = ringlink(&["--cache-dir", path(&cache), "enumerate", "5"]);
    assert_eq!(code(&corrupt), 3);
}

#[test]
fn reduce_and_equiv() {
    assert_eq!(stdout(&ringlink(&["reduce", "ab+bc+abc"])), "ab+bc\n");
    assert_eq!(stdout(&ringlink(&["reduce", "ab + ac"])), "ab+ac\n");
    assert_eq!(stdout(&ringlink(&["equiv", "ab+ac", "bc+ab"])), "equivalent\n");
    assert_eq!(stdout(&ringlink(&["equiv", "ab+ac", "abc"])), "distinct\n");
}

#[test]
fn diagram_chain() {
    let o = ringlink(&["diagram", "3^3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "digraph \"3^3\" {\n  \"3^3\";\n  \"3^3\" -> \"0\" [label=\"1\"];\n  \"3^3\" -> \"2^1\" [label=\"2\"];\n}\n"
    );
    assert_eq!(stdout(&ringlink(&["diagram", "ab+bc"])), stdout(&o));
}

#[test]
fn diagram_to_file_and_blocks() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.dot");
    let o = ringlink(&["diagram", "4^34", "-o", path(&file)]);
    assert_eq!(stdout(&o), "");
    let dot = fs::read_to_string(&file).unwrap();
    assert!(dot.contains("\"4^34\" -> \"3^2\" [label=\"4\"];"));

    let blocks = stdout(&ringlink(&["diagram", "abcd", "--blocks"]));
    assert!(blocks.contains("  B1 abcd arity=4\n"));
}

#[test]
fn synthesize_and_classify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = dir.path().join("m.json");
    let recipe = dir.path().join("r.txt");
    let o = ringlink(&[
        "synthesize",
        "abc+abd+ac",
        "--matrix-out",
        path(&matrix),
        "--recipe-out",
        path(&recipe),
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("polynomial=abc+abd+ac\nclass=4^20\nrecipe source=catalog\n"));
    assert!(text.ends_with(&fs::read_to_string(&recipe).unwrap()));

    let c = ringlink(&["classify", path(&matrix)]);
    assert_eq!(code(&c), 0);
    let report = stdout(&c);
    assert!(report.contains("subset=bd bipartitions=b|d:PPT verdict=absent\n"));
    assert!(report.contains("\nclass=4^20\n"));
}

#[test]
fn synthesize_falls_back_to_search() {
    let o = ringlink(&["synthesize", "3^4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("recipe source=search\n"));
}

#[test]
fn classify_product_state_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.json");
    fs::write(
        &file,
        r#"{"dims":[2,2],"matrix":[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]]]}"#,
    )
    .unwrap();
    let o = ringlink(&["classify", path(&file)]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("\nclass=inconclusive\n"));
}

#[test]
fn classify_rejects_bad_trace_unless_raw() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bell2.json");
    let h = "[0.5,0]";
    let z = "[0,0]";
    fs::write(
        &file,
        format!(
            r#"{{"dims":[2,2],"matrix":[[{h},{z},{z},{h}],[{z},{z},{z},{z}],[{z},{z},{z},{z}],[{h},{z},{z},{h}]]}}"#
        ),
    )
    .unwrap();
    assert_eq!(code(&ringlink(&["classify", path(&file)])), 0);

    let doubled = fs::read_to_string(&file).unwrap().replace("0.5", "1.0");
    fs::write(&file, doubled).unwrap();
    assert_eq!(code(&ringlink(&["classify", path(&file)])), 3);
    let raw = ringlink(&["classify", "--raw", path(&file)]);
    assert_eq!(code(&raw), 0);
    assert!(stdout(&raw).contains("\nclass=2^1\n"));
}

#[test]
fn plan_network() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("net.json");
    fs::write(
        &spec,
        r#"{"parties":["Alice","Bob","Charlie","Diana"],
            "groups":[["Alice","Bob","Charlie"],["Alice","Bob","Diana"],["Alice","Charlie"]]}"#,
    )
    .unwrap();
    let matrix = dir.path().join("net-m.json");
    let o = ringlink(&["plan", path(&spec), "--matrix-out", path(&matrix)]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("polynomial=abc+abd+ac\nclass=4^20\n"));
    assert!(text.contains("verify Bob,Diana separable\n"));
    assert!(text.contains("verify Alice,Charlie entangled\n"));
    assert!(text.contains("verify Alice,Bob,Charlie entangled\n"));
    assert!(text.contains("verify Alice,Bob,Diana entangled\n"));
    assert!(fs::read_to_string(&matrix).unwrap().starts_with("{\"dims\": [2, 2, 2, 2],"));
}

#[test]
fn outputs_are_deterministic() {
    for args in [&["synthesize", "4^40"][..], &["diagram", "4^25"], &["enumerate", "4"]] {
        assert_eq!(stdout(&ringlink(args)), stdout(&ringlink(args)));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&ringlink(&[])), 64);
    assert_eq!(code(&ringlink(&["frobnicate"])), 64);
    assert_eq!(code(&ringlink(&["enumerate", "four"])), 64);
    assert_eq!(code(&ringlink(&["--eps-neg=-1", "reduce", "ab"])), 64);
    assert_eq!(code(&ringlink(&["--eps-psd", "0", "reduce", "ab"])), 64);
    assert_eq!(code(&ringlink(&["--help"])), 0);

    assert_eq!(code(&ringlink(&["reduce", "ab+a"])), 3);
    assert_eq!(code(&ringlink(&["reduce", "aab"])), 3);
    assert_eq!(code(&ringlink(&["enumerate", "1"])), 3);
    assert_eq!(code(&ringlink(&["classify", "/no/such/file.json"])), 3);
    assert_eq!(code(&ringlink(&["synthesize", "ab+cd"])), 3);

    assert_eq!(code(&ringlink(&["diagram", "4^41"])), 4);
    assert_eq!(code(&ringlink(&["synthesize", "3^4", "--budget", "3"])), 4);
}
