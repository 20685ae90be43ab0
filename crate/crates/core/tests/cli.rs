use std::path::Path;

use stacksphere::cli::{run, EXIT_NODE_CAP, EXIT_OK, EXIT_USAGE, EXIT_VIOLATED};
use stacksphere::constructions::path_ball;
use stacksphere::io;
use stacksphere::solver::brute_force_tau;

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("stacksphere").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn field<'a>(line: &'a str, key: &str) -> &'a str {
    line.split_whitespace()
        .find_map(|kv| kv.strip_prefix(key).and_then(|v| v.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in {line}"))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn tetrahedron() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.txt");
    let (code, _) = call(&["gen", "path", "--d", "2", "--m", "1", "--out", p(&file)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), "ball 2 1\n1 2 3 4\n");
    let (code, out) = call(&["tau", p(&file)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("method=exact tau=2 "), "{out}");
}

#[test]
fn general_lower_bound_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.json");
    let (code, out) = call(&["gen", "general-lb", "--d", "3", "--k", "1", "--out", p(&file)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "n"), "25");

    let file = dir.path().join("g2.txt");
    call(&["gen", "general-lb-2", "--k", "1", "--out", p(&file)]);
    let (code, out) = call(&["tau", "--exact", p(&file)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "tau"), "6");
    assert_eq!(field(&out, "optimal"), "true");

    let (_, greedy) = call(&["tau", "--greedy", p(&file)]);
    let upper: usize = field(&greedy, "tau<").trim_start_matches('=').parse().unwrap();
    assert!(upper >= 6);

    let (_, brute) = call(&["tau", "--brute", "5", p(&file)]);
    assert!(brute.starts_with("method=brute tau>5"));
}

#[test]
fn cover37_on_extremal_and_random() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("l.txt");
    call(&["gen", "linear-lb", "--d", "2", "--k", "1", "--out", p(&file)]);
    let (code, out) = call(&["cover37", p(&file)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "size"), "6");
    assert_eq!(field(&out, "bound"), "6");

    let file = dir.path().join("r.txt");
    call(&["gen", "random-linear", "--m", "197", "--seed", "11", "--out", p(&file)]);
    let (code, out) = call(&["cover37", p(&file)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "n"), "200");
    assert_eq!(field(&out, "bound"), "86");
    let t1: Vec<&str> = field(&out, "t1").split(',').collect();
    assert!(t1.len() <= 86);

    let file = dir.path().join("p.txt");
    call(&["gen", "path", "--m", "4", "--out", p(&file)]);
    let (_, out) = call(&["cover37", p(&file)]);
    assert!(field(&out, "size").parse::<usize>().unwrap() <= 3);
}

#[test]
fn enumerate_counts() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = call(&["enumerate", "--d", "2", "--m", "2", p(dir.path())]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 4);

    let dir = tempfile::tempdir().unwrap();
    call(&["enumerate", "--d", "2", "--m", "7", p(dir.path())]);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 972);
    let one = io::read(&files[0].as_ref().unwrap().path()).unwrap();
    assert_eq!(one.ball().unwrap().len(), 7);
}

#[test]
fn bench_tau_column() {
    let (code, out) = call(&["bench", "--sizes", "14,21,28"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split(',').collect()).collect();
    let tau: Vec<usize> = rows.iter().map(|r| r[2].parse().unwrap()).collect();
    let cover: Vec<usize> = rows.iter().map(|r| r[3].parse().unwrap()).collect();
    assert_eq!(cover, vec![6, 9, 12]);
    assert!(tau.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(tau[0], 6);
    assert_eq!(tau[2], 12);
    // the 21-vertex interpolant is a path ball; brute force gives its exact value
    let h = path_ball(2, 18).unwrap().boundary().to_hypergraph();
    assert_eq!(brute_force_tau(&h, 21), Some(tau[1]));
}

#[test]
fn verify_flags_corrupted_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g2.txt");
    call(&["gen", "general-lb-2", "--k", "1", "--out", p(&file)]);
    let (code, _) = call(&["verify", "--instance", p(&file), "--claim-tau", "6"]);
    assert_eq!(code, EXIT_OK);

    // drop a third of the facets: the file still parses as a sphere file,
    // but six vertices are no longer needed
    let text = std::fs::read_to_string(&file).unwrap();
    let ball = io::parse(&text).unwrap();
    let sphere = ball.sphere().unwrap();
    let kept: Vec<String> = sphere
        .facets()
        .iter()
        .step_by(3)
        .map(|f| f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    let n: std::collections::BTreeSet<&str> = kept.iter().flat_map(|l| l.split(' ')).collect();
    let corrupted = format!("sphere 2 {} {}\n{}\n", n.len(), kept.len(), kept.join("\n"));
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, corrupted).unwrap();
    let (code, out) = call(&["verify", "--instance", p(&bad), "--claim-tau", "6"]);
    assert_eq!(code, EXIT_VIOLATED, "{out}");
    assert!(out.contains("status=VIOLATED"));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["gen", "linear-lb"]).0, EXIT_USAGE);
    assert_eq!(call(&["gen", "random-linear", "--m", "5"]).0, EXIT_USAGE);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "ball 2 2\n1 2 3 4\n5 6 7 8\n").unwrap();
    assert_eq!(call(&["tau", p(&bad)]).0, EXIT_USAGE);

    let file = dir.path().join("g.txt");
    call(&["gen", "general-lb", "--d", "3", "--k", "1", "--out", p(&file)]);
    let (code, out) = call(&["tau", "--node-cap", "1", p(&file)]);
    assert_eq!(code, EXIT_NODE_CAP);
    assert_eq!(field(&out, "optimal"), "false");
}

#[test]
fn removing_a_facet_on_the_command_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.txt");
    call(&["gen", "path", "--m", "1", "--out", p(&file)]);
    let (code, out) = call(&["tau", "--remove", "1,2,3", "--remove", "1,2,4", p(&file)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("method=exact tau=1 "), "{out}");
    assert_eq!(call(&["tau", "--remove", "1,2,9", p(&file)]).0, EXIT_USAGE);
}
