// Drive the command-line interface in-process.

use dpcolor::cli::run;

fn invoke(args: &[&str]) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dpcolor").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    println!("$ dpcolor {}", args.join(" "));
    print!(
        "{}{}",
        String::from_utf8_lossy(&out),
        String::from_utf8_lossy(&err)
    );
    println!("[exit {code}]");
}

fn main() {
    let dir = std::env::temp_dir().join(format!("dpcolor-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let k5 = dir.join("k5.g6");
    let c4 = dir.join("c4.g6");
    let cert = dir.join("c4-bad.json");
    std::fs::write(&k5, "D~{\n").unwrap();
    std::fs::write(&c4, "Cr\n").unwrap();
    let p = |x: &std::path::Path| x.to_str().unwrap().to_string();

    invoke(&["bounds", "--table", "--k", "5,6,7,8,9,10,15,20"]);
    invoke(&["critical", "--k", "5", "--graph", &p(&k5)]);
    invoke(&[
        "dpcolor",
        "--h",
        "2",
        "--graph",
        &p(&c4),
        "--certificate",
        &p(&cert),
    ]);
    invoke(&["solve", "--cover", &p(&cert)]);
    invoke(&[
        "--format",
        "json",
        "potential",
        "--graph",
        &p(&k5),
        "--h",
        "4",
    ]);
    invoke(&["lemma31", "--family", "even-cycle", "--t", "2"]);
    std::fs::remove_dir_all(&dir).unwrap();
}
