use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn trilie(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trilie"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn trilie");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn emit(name: &str) -> String {
    let o = trilie(&["examples", "emit", name], None);
    assert_eq!(code(&o), 0);
    stdout(&o)
}

#[test]
fn examples_list_names_the_catalog() {
    let out = stdout(&trilie(&["examples", "list"], None));
    let names: Vec<&str> = out.lines().filter_map(|l| l.split('\t').next()).collect();
    for n in ["L0", "A4", "TDER"] {
        assert!(names.contains(&n), "{out}");
    }
}

#[test]
fn examples_validate() {
    for n in ["L0", "A4", "TDER"] {
        let o = trilie(&["validate", "-"], Some(&emit(n)));
        assert_eq!(code(&o), 0, "{n}: {}", stdout(&o));
        assert!(stdout(&o).contains(&format!("pass  {n}.rinehart.bracket")));
    }
}

#[test]
fn unknown_example_is_an_input_error() {
    let o = trilie(&["examples", "emit", "B7"], None);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("B7"));
}

#[test]
fn mutated_a4_fails_with_a_five_tuple_witness() {
    let text = emit("A4").replace("c 1 2 3 -> 4 : 1", "c 1 2 3 -> 4 : 1\nc 1 2 3 -> 1 : 1");
    let o = trilie(&["--format", "machine", "validate", "-"], Some(&text));
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("LAW=A4.3lie.fundamental ")).unwrap();
    assert!(line.contains("STATUS=fail"));
    let witness = line.split("WITNESS=").nth(1).unwrap();
    let tuple = witness.split(':').next().unwrap();
    assert_eq!(tuple.split(',').count(), 5, "{line}");
}

#[test]
fn witness_limit_is_respected() {
    let text = emit("A4").replace("c 1 2 3 -> 4 : 1", "c 1 2 3 -> 4 : 1\nc 1 2 3 -> 1 : 1");
    let o = trilie(&["--format", "machine", "--witness-limit", "1", "validate", "-"], Some(&text));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("LAW=A4.3lie.fundamental ")).unwrap();
    assert_eq!(line.matches("WITNESS=").count(), 1);
}

#[test]
fn parse_errors_carry_a_position() {
    let o = trilie(&["validate", "-"], Some("@3lie X dim=2\nc 1 2 3 -> 1 : 1\n"));
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("2:7"), "{}", stderr(&o));

    let o = trilie(&["validate", "-"], Some("@action Q on X\n"));
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("1:9") && stderr(&o).contains('Q'));

    let o = trilie(&["validate", "-"], Some("@3lie X dim=2\nc 1 2 -> 1 : 1/0\n"));
    assert_eq!(code(&o), 2);

    let o = trilie(&["validate", "/nonexistent/file.tl"], None);
    assert_eq!(code(&o), 2);
}

#[test]
fn violated_hypothesis_is_a_precondition_error() {
    let e = trilie(&["construct", "e-ext", "-"], Some(&emit("TDER")));
    assert_eq!(code(&e), 0);
    let o = trilie(&["construct", "crossed-wedge", "-"], Some(&stdout(&e)));
    assert_eq!(code(&o), 3, "{}", stderr(&o));
}

fn construct_then_validate(kind: &str, input: &str) -> String {
    let c = trilie(&["construct", kind, "-"], Some(input));
    assert_eq!(code(&c), 0, "construct {kind}: {}{}", stdout(&c), stderr(&c));
    let v = trilie(&["validate", "-"], Some(&stdout(&c)));
    assert_eq!(code(&v), 0, "validate {kind}: {}", stdout(&v));
    stdout(&v)
}

#[test]
fn constructions_validate_again() {
    for n in ["L0", "A4", "TDER"] {
        for kind in ["tensor", "e-ext", "wedge", "w-space", "quotient-w"] {
            construct_then_validate(kind, &emit(n));
        }
    }
    for n in ["A4", "TDER"] {
        let out = construct_then_validate("crossed-wedge", &emit(n));
        assert!(out.contains("d.crossed."));
    }
}

#[test]
fn semidirect_with_the_anchor_module() {
    let text = format!("{}\n@3lie R dim=2\n\n@action A on R\na 1 . 1 -> 1 : 1\na 1 . 2 -> 2 : 1\na 2 . 1 -> 2 : 1\n\n@beta TDER on R\nb 1 2 . 2 -> 2 : 1\n", emit("TDER"));
    let v = trilie(&["validate", "-"], Some(&text));
    assert_eq!(code(&v), 0, "{}", stdout(&v));
    let out = construct_then_validate("semidirect", &text);
    assert!(out.contains("TDER_R.rinehart.bracket"));

    let bad = text.replace("b 1 2 . 2 -> 2 : 1", "b 1 2 . 2 -> 2 : 2");
    assert_eq!(code(&trilie(&["validate", "-"], Some(&bad))), 1);
    let c = trilie(&["construct", "semidirect", "-"], Some(&bad));
    let v = trilie(&["--format", "machine", "validate", "-"], Some(&stdout(&c)));
    assert_eq!(code(&v), 1);
    assert!(stdout(&v).contains("LAW=TDER_R.rinehart.bracket STATUS=fail"));
}

#[test]
fn quotient_by_an_ideal() {
    let text = format!("{}\n@subspace B in L0\nv : 1 0 0\n", emit("L0"));
    let out = construct_then_validate("quotient", &text);
    assert!(out.contains("L0_quotient"));
}

#[test]
fn crossed_modules_from_an_ideal_and_an_epimorphism() {
    let ideal = format!("{}\n@subspace I in A4\nv : 1 0 0 0\nv : 0 1 0 0\nv : 0 0 1 0\nv : 0 0 0 1\n", emit("A4"));
    construct_then_validate("crossed-ideal", &ideal);

    let a4 = emit("A4");
    let copy = a4.replace("A4", "B4").replace("@assoc F dim=1 unit=1\nm 1 1 -> 1 : 1\n", "");
    let epi = format!("{a4}\n{copy}\n@hom f : A4 -> B4\nh 1 -> 1 : 1\nh 2 -> 2 : 1\nh 3 -> 3 : 1\nh 4 -> 4 : 1\n");
    let v = trilie(&["validate", "-"], Some(&epi));
    assert_eq!(code(&v), 0, "{}{}", stdout(&v), stderr(&v));
    construct_then_validate("crossed-epi", &epi);
    let a = trilie(&["analyze", "hom", "-"], Some(&epi));
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    assert!(stdout(&a).contains("induced bijective: true"));
}

#[test]
fn output_file_receives_the_structure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tensor.tl");
    let o = trilie(&["construct", "tensor", "-", "-o", path.to_str().unwrap()], Some(&emit("TDER")));
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("pass  TDER_tensor.rinehart.bracket"));
    assert!(Path::new(&path).exists());
    assert_eq!(code(&trilie(&["validate", path.to_str().unwrap()], None)), 0);
}

#[test]
fn derivation_dimensions() {
    let o = trilie(&["--format", "machine", "derive", "der", "-"], Some(&emit("A4")));
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "DER_DIMENSION=6"), "{}", stdout(&o));
    let o = trilie(&["--format", "machine", "derive", "inner", "-"], Some(&emit("A4")));
    assert!(stdout(&o).lines().any(|l| l == "INNER_DIMENSION=6"), "{}", stdout(&o));
}

#[test]
fn centers_of_tder() {
    let o = trilie(&["analyze", "centers", "-"], Some(&emit("TDER")));
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("z_rho dimension"));
}
