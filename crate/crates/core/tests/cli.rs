use std::path::PathBuf;
use std::process::Command;

use iterop::cli::run;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("iterop").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn counts_running_example() {
    let series = data("chaotic_series.json");
    let (code, out, _) = call(&["q", "count", "--series", &series, "--pd", "dim=2:[[oo][o][][oooo]]"]);
    assert_eq!((code, out.trim()), (0, "4"));
}

#[test]
fn boundary_of_a_path() {
    let (code, out, _) = call(&["pd", "boundary", "--pd", "dim=1:[oooo]"]);
    assert_eq!((code, out.trim()), (0, "dim=0:o"));
}

#[test]
fn magma_series_is_not_contractible() {
    let series = data("magma_series.json");
    let (code, out, _) = call(&["q", "contractible", "--series", &series]);
    assert_eq!(code, 1);
    assert!(out.contains("P_1(0) empty"), "{out}");
    let (code, out, _) = call(&["q", "contractible", "--series", &series, "--max-vertices", "4", "--json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lifting"]["contractible"], false);
}

#[test]
fn usage_and_data_errors_exit_two() {
    assert_eq!(call(&["pd", "dim", "--pd", "dim=1:[o"]).0, 2);
    assert_eq!(call(&["pd", "boundary", "--pd", "dim=0:o"]).0, 2);
    assert_eq!(call(&["q", "count"]).0, 2);
    assert_eq!(call(&["nonsense"]).0, 2);
    assert_eq!(call(&["q", "count", "--series", "/no/such/file", "--pd", "dim=0:o"]).0, 2);
}

#[test]
fn subst_and_enumerate() {
    let labels = r#"[["dim=0:o","dim=0:o"],["dim=1:[oo]","dim=1:[oo]","dim=1:[oo]"],["dim=2:[[o][o]]","dim=2:[[o][o]]"]]"#;
    let (code, out, _) = call(&["pd", "subst", "--pd", "dim=2:[[oo]]", "--labels", labels]);
    assert_eq!((code, out.trim()), (0, "dim=2:[[oo][oo]]"));
    let (code, out, _) = call(&["pd", "enumerate", "--dim", "1", "--max-vertices", "3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"["dim=1:[]","dim=1:[o]","dim=1:[oo]"]"#);
    let (_, out, _) = call(&["pd", "nodes", "--pd", "dim=2:[[oo][o][][oooo]]"]);
    assert_eq!(out.trim(), "(0, 4) (1, 2) (1, 1) (1, 0) (1, 4)");
}

#[test]
fn operad_commands() {
    let cyc = r#"{"kind":"chaotic","n":1,"base":{"kind":"cyclic","r":2}}"#;
    let (code, out, _) = call(&["operad", "check", "--operad", cyc, "--max-arity", "3"]);
    assert_eq!(code, 0, "{out}");
    let disc = r#"{"kind":"discrete","n":1,"base":{"kind":"cyclic","r":2}}"#;
    let (code, out, _) = call(&["operad", "contractible", "--operad", disc]);
    assert_eq!(code, 1);
    assert!(out.contains("not contractible"), "{out}");
}

#[test]
fn interchange_and_apply() {
    let series = data("chaotic_series.json");
    let (code, out, _) = call(&["q", "interchange", "--series", &series]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 8);
    let (code, _, err) = call(&["q", "interchange", "--series", &series, "--f", "0", "--g", "2"]);
    assert_eq!(code, 2, "{err}");
    let lp = r#"{"n":1,"cells":[[0],[0]],"src":[[0]],"tgt":[[0]]}"#;
    let terminal = r#"{"operads":[{"kind":"terminal","n":0}]}"#;
    let (code, out, _) = call(&["q", "apply", "--series", terminal, "--gset", lp, "--max-vertices", "5", "--json"]);
    assert_eq!((code, out.trim()), (0, r#"{"counts":[1,5]}"#));
}

#[test]
fn enriched_commands() {
    let graph = r#"{"objects":1,"n":1,"hom":[[{"n":1,"cells":[[0],[0]],"src":[[0]],"tgt":[[0]]}]]}"#;
    let op = r#"{"kind":"loops","r":2,"n":1}"#;
    let (code, out, _) = call(&["e", "check", "--graph", graph, "--operad", op, "--max-len", "2"]);
    assert_eq!(code, 0, "{out}");
    let c = iterop::enrich::ordinary_category(1, &[3], |_| 0, |_, _, _, f, g| (f + g) % 3, 2).unwrap();
    let json = c.to_json();
    let (code, out, _) = call(&["e", "check", "--category", &json]);
    assert_eq!(code, 0, "{out}");
    let path = r#"{"objects":[0,0,0],"label":0,"cells":[2,2]}"#;
    let (code, out, _) = call(&["e", "compose", "--category", &json, "--path", path]);
    assert_eq!((code, out.trim()), (0, "1"));
}

#[test]
fn binary_is_deterministic_under_thread_cap() {
    let series = data("chaotic_series.json");
    let run_bin = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_iterop"))
            .args(["q", "contractible", "--series", &series, "--max-vertices", "5", "--json"])
            .env("GW_THREADS", threads)
            .output()
            .unwrap()
    };
    let a = run_bin("1");
    let b = run_bin("4");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
