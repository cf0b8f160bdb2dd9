use krdenom::cli::run;
use serde_json::Value;

fn ok(args: &[&str]) -> String {
    let mut argv = vec!["krdenom"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn code(args: &[&str]) -> i32 {
    let mut argv = vec!["krdenom"];
    argv.extend_from_slice(args);
    run(argv).code
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    serde_json::from_str(&ok(&a)).unwrap()
}

#[test]
fn denom_example() {
    assert_eq!(ok(&["denom", "--type", "A3~1", "--left", "1^2", "--right", "2^2"]), "(z - (-q)^3)(z - (-q)^5)\n");
    let v = json(&["denom", "--type", "A3~1", "--left", "1^2", "--right", "2^2"]);
    assert_eq!(v["ambiguous"], Value::Array(vec![]));
    assert_eq!(v["certain"]["roots"].as_array().unwrap().len(), 2);
}

#[test]
fn conjecture_flag_removes_ambiguity() {
    let off = ok(&["denom", "--type", "C3~1", "--left", "2^3", "--right", "2^5"]);
    assert!(off.contains("e in {0,1}"));
    let on = ok(&["denom", "--type", "C3~1", "--left", "2^3", "--right", "2^5", "--conjecture"]);
    assert_eq!(on, "(z - qs^4)(z - qs^6)^2(z - qs^8)^3(z - qs^10)^3(z - qs^12)^2(z - qs^14)\n");
}

#[test]
fn simple_example() {
    assert_eq!(ok(&["simple", "--type", "A3~1", "--modules", "1^2@(-q)^-2,2^2@(-q)^1"]), "false\n");
    assert_eq!(ok(&["simple", "--type", "A3~1", "--modules", "1@(-q)^-3,2@(-q)^10"]), "true\n");
    let v = json(&["simple", "--type", "A3~1", "--modules", "1^2@(-q)^-2,2^2@(-q)^1"]);
    assert_eq!(v["simple"], Value::Bool(false));
    assert_eq!(v["modules"][1]["mult"], 2);
}

#[test]
fn invariants_and_coefficients() {
    assert_eq!(ok(&["dinv", "--type", "A3~1", "--left", "1^2@(-q)^-2", "--right", "2^2@(-q)"]), "1\n");
    assert_eq!(ok(&["lambda", "--type", "A3~1", "--left", "1^2@(-q)^-2", "--right", "2^2@(-q)"]), "lambda 0\nlambda_inf 2\n");
    let a = ok(&["univcoeff", "--type", "A4~1", "--left", "1^2", "--right", "2^3"]);
    let b = ok(&["univcoeff", "--type", "A4~1", "--left", "1^2", "--right", "2^3", "--closed"]);
    assert_eq!(a, b);
    assert!(a.starts_with("base (-q)^10\n"));
}

#[test]
fn ibox_example() {
    let s = ok(&["ibox", "--type", "B3~1", "--reading", "NE", "--box", "0:3", "--show", "reach,exrch=3,module"]);
    assert_eq!(s, "box [0,3]\nreach [-1,1]\nexrch_3 [-3,3]\nmodule W(3)^2@-1\n");
    assert_eq!(code(&["ibox", "--type", "B3~1", "--box", "0:1"]), 1);
    assert_eq!(code(&["ibox", "--type", "B3~1", "--box", "0:3", "--show", "nope"]), 2);
}

#[test]
fn catalog_commands() {
    let s = ok(&["dorey", "--type", "C4~1", "--rule", "spin-C", "--l", "2", "--m", "2"]);
    assert_eq!(s, "W(4)^2@qs^-3 (x) W(4)^2@qs^3 ->> W(2)^4@1\n");
    let s = ok(&["tsystem", "--type", "A3~1", "--l", "3", "--b", "2", "--m", "2", "--check"]);
    assert!(s.ends_with("check: PASS (78 test modules)\n"), "{s}");
    let v = json(&["dorey", "--type", "C4~1", "--rule", "spin-C", "--l", "2", "--m", "2"]);
    assert_eq!(v["kind"], "higher-dorey");
    assert_eq!(v["tag"], "higher-dorey:spin-C");
    assert_eq!(code(&["dorey", "--type", "C4~1", "--rule", "sideways", "--l", "2", "--m", "2"]), 2);
}

#[test]
fn crystal_and_dimension_commands() {
    assert_eq!(ok(&["crystal", "hw", "--g0", "A5", "--tensor", "2L1,2L2", "--target", "2L3"]), "3⊗3⊗2⊗1⊗2⊗1  2L3\ncount 1\n");
    assert_eq!(ok(&["dim", "--g0", "A3", "--weight", "L1+2L2"]), "60\n");
    assert_eq!(ok(&["crystal", "size", "--g0", "G2", "--weight", "L2"]), "size 14 weyl 14\n");
    assert_eq!(ok(&["crystal", "mult-one", "--part", "b", "--g0", "A5", "--k", "2", "--l", "1", "--m", "1"]), "multiplicity one\n");
    let v = json(&["dim", "--g0", "A9", "--weight", "30L1"]);
    assert_eq!(v["dim"], "211915132");
}

#[test]
fn qchar_command() {
    let s = ok(&["qchar-b", "--n", "3", "--shape", "4x1", "--param", "(-1)*qs^0", "--dominant"]);
    assert_eq!(s.lines().count(), 1);
    let v = json(&["qchar-b", "--n", "3", "--shape", "2x1"]);
    assert_eq!(v["monomials"], 22);
    assert_eq!(code(&["qchar-b", "--n", "3", "--shape", "4by1"]), 2);
    assert_eq!(code(&["qchar-b", "--n", "3", "--shape", "6x1"]), 1);
}

#[test]
fn verify_prime_socle() {
    let s = ok(&["verify", "--suite", "prime-socle"]);
    assert!(s.starts_with("PASS "));
    assert!(s.contains("190"));
    let demo = ok(&["prime-socle-demo"]);
    assert!(demo.ends_with("socle dimension 190\nprime\n"));
    assert_eq!(code(&["verify", "--suite", "nothing"]), 2);
}

#[test]
fn verify_all_passes() {
    let s = ok(&["verify"]);
    assert!(s.lines().count() >= 10);
    assert!(s.lines().all(|l| l.starts_with("PASS ")), "{s}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["bogus"]), 2);
    assert_eq!(code(&["denom", "--type", "A3~1", "--left", "1^2"]), 2);
    assert_eq!(code(&["denom", "--type", "A3~1", "--left", "x^2", "--right", "1"]), 2);
    assert_eq!(code(&["denom", "--type", "A3~1", "--left", "9", "--right", "1"]), 1);
    assert_eq!(code(&["dim", "--g0", "A3", "--weight", "L1+?"]), 2);
    assert_eq!(code(&["dim", "--g0", "A3", "--weight", "L1-L2"]), 1);
    assert_eq!(code(&["--help"]), 0);
    let out = run(["krdenom", "denom", "--type", "A3~1", "--left", "9", "--right", "1"]);
    assert!(out.stderr.contains("node 9 out of range"));
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let args = ["verify", "--suite", "crystals", "--json"];
    assert_eq!(ok(&args), ok(&args));
    let path = std::env::temp_dir().join(format!("krdenom-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let text = ok(&["dim", "--g0", "B4", "--weight", "L4", "--out", p]);
    assert_eq!(text, "16\n");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["dim"], "16");
}
