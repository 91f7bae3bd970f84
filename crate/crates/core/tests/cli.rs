use std::path::{Path, PathBuf};

use dpcolor::cli::run;
use dpcolor::cover::{hard_cover, HardFamily};
use dpcolor::io::read_cover;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dpcolor").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("dpcolor-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, contents).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> String {
        self.0.join(name).to_str().unwrap().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

const TABLE: &str = "  k       Ga       KY       Ra       DP
  5   4.0909   4.5000   4.1176   4.1666
  6   5.0909   5.6000   5.1214   5.1666
  7   6.0869   6.6666   6.1296   6.1666
  8   7.0819   7.7142   7.1260   7.1428
  9   8.0769   8.7500   8.1213   8.1428
 10   9.0721   9.7777   9.1162   9.1250
 15  14.0540  14.8571  14.0930  14.1000
 20  19.0428  19.8947  19.0762  19.0833
";

#[test]
fn bounds_table_golden() {
    let (code, out, _) = invoke(&["bounds", "--table", "--k", "5,6,7,8,9,10,15,20"]);
    assert_eq!(code, 0);
    assert_eq!(out, TABLE);
    let (code, csv, _) = invoke(&["--format", "csv", "bounds", "--table", "--k", "5"]);
    assert_eq!(code, 0);
    assert_eq!(
        csv,
        "k,gallai,ky,rabern,dp\n5,4.0909,4.5000,4.1176,4.1666\n"
    );
    let (_, json, _) = invoke(&[
        "--format",
        "json",
        "bounds",
        "--table",
        "--k",
        "5",
        "--rounding",
        "half-even",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rows"][0]["dp"], "4.1667");
}

#[test]
fn single_bound_queries() {
    let (code, out, _) = invoke(&["bounds", "--source", "dp", "--k", "5", "--n", "10"]);
    assert_eq!(code, 0);
    assert_eq!(out, "dp k=5 n=10: edges >= 21 (21.0000)\n");
    let (code, _, err) = invoke(&["bounds", "--source", "nope", "--k", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown bound source"));
}

#[test]
fn k5_is_critical() {
    let s = Scratch::new("k5");
    let k5 = s.file("k5.g6", "D~{\n");
    let (code, out, _) = invoke(&["critical", "--k", "5", "--graph", &k5]);
    assert_eq!(code, 0);
    assert_eq!(out, "DP 5-critical (exceptional: K_k)\n");
    let c4 = s.file("c4.g6", "Cr\n");
    let (code, out, _) = invoke(&["critical", "--k", "5", "--graph", &c4]);
    assert_eq!(code, 1);
    assert!(out.starts_with("not DP 5-critical"));
}

#[test]
fn c4_bad_cover_certificate_round_trips() {
    let s = Scratch::new("c4");
    let c4 = s.file("c4.g6", "Cr\n");
    let cert = s.path("bad.json");
    let (code, out, _) = invoke(&[
        "dpcolor",
        "--h",
        "2",
        "--graph",
        &c4,
        "--certificate",
        &cert,
    ]);
    assert_eq!(code, 1, "{out}");
    let cover = read_cover(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(cover.conflict_components(), vec![(8, 8)]);
    let (code, out, _) = invoke(&["solve", "--cover", &cert]);
    assert_eq!(code, 1);
    assert_eq!(out, "not colorable\n");

    let cycle = s.file(
        "c4.json",
        "{\"n\": 4, \"edges\": [[0, 1, 1], [1, 2, 1], [2, 3, 1], [0, 3, 1]]}",
    );
    let cert2 = s.path("bad2.json");
    assert_eq!(
        invoke(&[
            "dpcolor",
            "--h",
            "2",
            "--graph",
            &cycle,
            "--certificate",
            &cert2
        ])
        .0,
        1
    );
    let cover = read_cover(&std::fs::read_to_string(&cert2).unwrap()).unwrap();
    assert!(cover.is_relabeling_of(&hard_cover(HardFamily::EvenCycle, 2, 1).unwrap()));
}

#[test]
fn colorable_instances_exit_zero_with_witness() {
    let s = Scratch::new("col");
    let g = s.file(
        "g.json",
        "{\"n\": 3, \"edges\": [[0, 1, 2], [1, 2, 1]], \"h\": [3, 3, 2]}",
    );
    let (code, out, _) = invoke(&["--format", "json", "dpcolor", "--graph", &g]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "colorable");
    let hfile = s.file("h.txt", "1 1 1\n");
    let (code, _, _) = invoke(&["dpcolor", "--graph", &g, "--h", &hfile]);
    assert_eq!(code, 1);
}

#[test]
fn budget_exhaustion_exits_three() {
    let s = Scratch::new("budget");
    let k5_minus = s.file("k5m.json", "{\"n\":5,\"edges\":[[0,2,1],[0,3,1],[0,4,1],[1,2,1],[1,3,1],[1,4,1],[2,3,1],[2,4,1],[3,4,1]],\"h\":[3,3,4,4,4]}");
    let (code, out, _) = invoke(&["--max-covers", "100", "dpcolor", "--graph", &k5_minus]);
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("undecided"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let s = Scratch::new("err");
    assert_eq!(invoke(&["frobnicate"]).0, 2);
    assert_eq!(invoke(&["dpcolor"]).0, 2);
    assert_eq!(invoke(&["--help"]).0, 0);
    let bad = s.file("bad.json", "{\"n\": 2,\n \"edges\": [[0, 1, 1],]}");
    let (code, _, err) = invoke(&["chidp", "--graph", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column"), "{err}");
    let g = s.file("k2.g6", "A_\n");
    let (code, _, err) = invoke(&["dpcolor", "--graph", &g]);
    assert_eq!(code, 2);
    assert!(err.contains("--h"));
    let (code, _, _) = invoke(&["--format", "csv", "chidp", "--graph", &g]);
    assert_eq!(code, 2);
    assert_eq!(
        invoke(&[
            "--format",
            "json",
            "chidp",
            "--graph",
            &s.path("missing.g6")
        ])
        .0,
        2
    );
}

#[test]
fn reports_are_stable_across_runs_and_thread_counts() {
    let s = Scratch::new("stable");
    let c5 = s.file("c5.g6", "Dhc\n");
    let a = invoke(&["--format", "json", "dpcolor", "--h", "2", "--graph", &c5]);
    let b = invoke(&["--format", "json", "dpcolor", "--h", "2", "--graph", &c5]);
    let c = invoke(&[
        "--jobs", "3", "--format", "json", "dpcolor", "--h", "2", "--graph", &c5,
    ]);
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(a.0, 1);
}

#[test]
fn every_subcommand_runs() {
    let s = Scratch::new("all");
    let k5 = s.file("k5.g6", "D~{\n");
    let k24 = s.file(
        "k24.json",
        "{\"n\": 2, \"edges\": [[0, 1, 4]], \"h\": [4, 4]}",
    );
    let path = s.file("p3.json", "{\"n\": 3, \"edges\": [[0, 1, 1], [1, 2, 1]]}");
    let lists = s.file(
        "lists.json",
        "[[\"a\", \"b\"], [\"a\", \"b\"], [\"b\", \"c\"]]",
    );
    let cover = s.path("p3-cover.json");

    assert_eq!(
        invoke(&["chidp", "--graph", &k5]),
        (0, "chi_DP = 5\n".into(), String::new())
    );
    assert_eq!(
        invoke(&["potential", "--graph", &k24]).1,
        "k = 5, lambda = 6\nrho([0, 1]) = -1\n"
    );
    assert_eq!(
        invoke(&["critical", "--graph", &k24, "--k", "5", "--h", "4"]).0,
        0
    );
    assert_eq!(
        invoke(&["phi", "--graph", &path, "--h", "3", "--k", "5"]).0,
        0
    );
    let (code, out, _) = invoke(&["classify", "--graph", &k24]);
    assert_eq!(code, 0);
    assert!(out.contains("K_2^4"));
    let (code, out, _) = invoke(&["audit", "--graph", &k24, "--k", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("K_2^4 or double cycle"));
    assert_eq!(invoke(&["audit", "--graph", &path, "--k", "5"]).0, 1);
    let (code, csv, _) = invoke(&["--format", "csv", "discharge", "--graph", &k24]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().count(), 3);
    let (code, out, _) = invoke(&["lemma31", "--family", "odd-cycle", "--t", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("pass"));
    assert_eq!(
        invoke(&[
            "listcover",
            "--graph",
            &path,
            "--lists",
            &lists,
            "--output",
            &cover
        ])
        .0,
        0
    );
    assert!(Path::new(&cover).exists());
    let (code, out, _) = invoke(&["solve", "--cover", &cover]);
    assert_eq!(code, 0);
    assert_eq!(out, "colorable\nwitness: [0, 1, 1]\n");
}
