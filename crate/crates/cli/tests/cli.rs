use convdiff_cli::{run_with_env, CayleyReport, DiffReport, DiffSpaceReport, GroupReport, SpaceReport};

fn invoke(args: &[&str]) -> (i32, String, String) {
    invoke_env(args, &[])
}

fn invoke_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let env: Vec<(String, String)> = env.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    let lookup = move |k: &str| env.iter().find(|(key, _)| key == k).map(|(_, v)| v.clone());
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("convdiff").chain(args.iter().copied());
    let code = run_with_env(argv, lookup, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = invoke(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("convdiff-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

const INVOCATIONS: &[&[&str]] = &[
    &["group", "--group", "s:3"],
    &["group", "--group", "z2^2+cyclic:3", "--json"],
    &["cayley", "--group", "s:3", "--gens", "r,t", "dot"],
    &["cayley", "--group", "cyclic:6", "json"],
    &["space", "--pentacle", "--props"],
    &["space", "--pentacle", "--dot"],
    &["space", "--cayley", "z2^3", "--json", "--props"],
    &["diffspace", "--dom", "s:3", "--cod", "s:3"],
    &[
        "diff",
        "--dom",
        "z2^2",
        "--cod",
        "z2^3",
        "--f",
        "(p,(1+p)(1+q),q)",
        "--at",
        "(1,1)",
        "--oracle",
    ],
    &[
        "diff",
        "--dom",
        "s:3",
        "--cod",
        "s:3+s:3",
        "--builtin",
        "diagonal",
        "--at",
        "0",
        "--json",
    ],
    &[
        "bool",
        "diff",
        "--m",
        "3",
        "--f",
        "((1+q)(1+p+pr), (1+r)q)",
        "--at",
        "101",
        "--json",
    ],
    &["bool", "census", "--m", "3", "--f", "pq+r"],
    &["bool", "leibniz", "--m", "2", "--f", "p", "--g", "q", "--at", "11"],
    &["examples", "--suite", "paper"],
];

#[test]
fn output_is_deterministic() {
    for args in INVOCATIONS {
        let first = ok(args);
        assert!(!first.is_empty(), "{args:?}");
        assert_eq!(first, ok(args), "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    fn check<T: serde::de::DeserializeOwned + serde::Serialize>(args: &[&str]) {
        let out = ok(args);
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        let typed: T = serde_json::from_value(value.clone()).unwrap();
        assert_eq!(serde_json::to_value(&typed).unwrap(), value, "{args:?}");
        assert_eq!(serde_json::to_string_pretty(&typed).unwrap() + "\n", out, "{args:?}");
    }
    check::<GroupReport>(&["group", "--group", "s:3", "--json"]);
    check::<CayleyReport>(&["cayley", "--group", "s:3", "json"]);
    check::<SpaceReport>(&["space", "--pentacle", "--json", "--props"]);
    check::<DiffSpaceReport>(&["diffspace", "--dom", "z2^2", "--cod", "z2^2"]);
    check::<DiffReport>(&[
        "diff",
        "--dom",
        "z2^2",
        "--cod",
        "z2^3",
        "--f",
        "(p,(1+p)(1+q),q)",
        "--at",
        "3",
        "--json",
    ]);
    check::<convdiff::boolean::CensusReport>(&["bool", "census", "--m", "2", "--f", "1", "--json"]);
    check::<convdiff::boolean::LeibnizReport>(&[
        "bool", "leibniz", "--m", "2", "--f", "p", "--g", "q", "--at", "11", "--json",
    ]);
    check::<Vec<convdiff_cli::suite::ScenarioResult>>(&["examples", "--json"]);
}

#[test]
fn worked_boolean_example() {
    let out = ok(&[
        "diff",
        "--dom",
        "z2^2",
        "--cod",
        "z2^3",
        "--f",
        "(p,(1+p)(1+q),q)",
        "--at",
        "(1,1)",
    ]);
    assert!(out.contains("(p,q) -> (p,0,q)"), "{out}");
    let out = ok(&[
        "bool",
        "diff",
        "--m",
        "2",
        "--n",
        "3",
        "--f",
        "(p, (1+p)(1+q), q)",
        "--at",
        "11",
    ]);
    assert!(out.contains("[[1,0],[0,0],[0,1]]"), "{out}");
}

#[test]
fn pentacle_properties() {
    let out = ok(&["space", "--pentacle", "--props"]);
    assert!(out.contains("T0=true") && out.contains("topological=false"));
}

#[test]
fn dot_counts() {
    let s3 = ok(&["cayley", "--group", "s:3", "--gens", "r,t", "dot"]);
    assert_eq!(convdiff_cli::dot::count_dot_edges(&s3), (3, 6));
    assert_eq!(s3.matches("label=").count(), 6);
    let p = ok(&["space", "--pentacle", "--dot"]);
    assert_eq!(convdiff_cli::dot::count_dot_edges(&p), (5, 5));
}

#[test]
fn diagonal_has_no_differentials() {
    let out = ok(&[
        "diff",
        "--dom",
        "cyclic:6",
        "--cod",
        "cyclic:6+cyclic:6",
        "--builtin",
        "diagonal",
        "--at",
        "2",
    ]);
    assert!(
        out.contains("differentials: 0") && out.contains("continuous at point: false"),
        "{out}"
    );
}

#[test]
fn file_inputs() {
    let group = temp_file("z3.json", r#"{"order":3,"table":[[0,1,2],[1,2,0],[2,0,1]]}"#);
    let out = ok(&["group", "--group", &format!("file:{group}")]);
    assert!(out.contains("order: 3"));
    let digraph = temp_file("d.json", r#"{"size":2,"nbhd":[[0,1],[1]]}"#);
    assert!(ok(&["space", "--digraph", &digraph, "--props"]).contains("topological=true"));
    let map = temp_file("f.json", r#"{"values":[0,0,0,3,3,3]}"#);
    let out = ok(&[
        "diff",
        "--dom",
        "s:3",
        "--cod",
        "s:3",
        "--fn",
        &format!("file:{map}"),
        "--at",
        "0",
        "--oracle",
    ]);
    assert!(out.contains("differentials: 2"), "{out}");
}

#[test]
fn user_errors_exit_one() {
    for (args, code) in [
        (&["group", "--group", "q:3"][..], "error[parse]"),
        (&["group", "--group", "s:6"], "error[size-guard]"),
        (
            &["cayley", "--group", "s:3", "--gens", "r,r2,t"],
            "error[redundant-generator]",
        ),
        (&["group", "--group", "file:/nonexistent/g.json"], "error[invalid]"),
        (
            &["diff", "--dom", "s:3", "--cod", "s:3", "--builtin", "zero", "--at", "9"],
            "error[out-of-range]",
        ),
        (
            &["diff", "--dom", "s:3", "--cod", "s:3", "--f", "p", "--at", "0"],
            "error[usage]",
        ),
        (
            &["bool", "leibniz", "--m", "1", "--f", "1", "--g", "p", "--at", "0"],
            "error[not-differentiable]",
        ),
        (&["space", "--pentacle", "--bogus"], "error[usage]"),
        (&["examples", "--suite", "other"], "error[usage]"),
    ] {
        let (status, out, err) = invoke(args);
        assert_eq!(status, 1, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(err.starts_with(code), "{args:?}: {err}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn env_guard_overrides() {
    let args = ["group", "--group", "cyclic:2000"];
    assert_eq!(invoke(&args).0, 1);
    assert_eq!(invoke_env(&args, &[("CONVDIFF_MAX_GROUP_ORDER", "4000")]).0, 0);
    let (code, _, err) = invoke_env(&args, &[("CONVDIFF_MAX_GROUP_ORDER", "many")]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[env]"));
    let (code, _, err) = invoke_env(
        &["bool", "diff", "--m", "3", "--f", "p", "--at", "000"],
        &[("CONVDIFF_MAX_ORACLE_WORK", "3")],
    );
    assert_eq!(code, 1);
    assert!(err.starts_with("error[size-guard]"), "{err}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("diffspace"));
}
