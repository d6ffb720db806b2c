use std::process::Command;

use merolib::suite::crossing_corpus;

fn merolib(args: &[&str], caps: Option<&str>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_merolib"));
    cmd.args(args).env_remove("MEROLIB_CAPS");
    if let Some(c) = caps {
        cmd.env("MEROLIB_CAPS", c);
    }
    let out = cmd.output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("JSON output")
}

#[test]
fn hh0_of_the_cyclic_quiver() {
    let (code, out) = merolib(&["hh0", "--quiver", "cyclic:3", "--max-len", "7"], None);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["dimension"], 5);
}

#[test]
fn negative_corpus_words_exit_1() {
    for entry in crossing_corpus().into_iter().filter(|e| !e.labeled_positive) {
        let arg = format!("--crossings={}", entry.text);
        let (code, _) = merolib(&["lift", &arg], None);
        assert_eq!(code, 1, "{}", entry.text);
    }
}

#[test]
fn positive_lift_exits_0() {
    let (code, out) = merolib(&["lift", "--crossings=+1,+2,-2,+1"], None);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["class"], "[a1 a2]");
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(merolib(&["no-such-command"], None).0, 3);
    assert_eq!(merolib(&["hh0", "--quiver", "cyclic:3", "--max-len", "7"], Some("bad")).0, 3);
    assert_eq!(merolib(&["lift", "--crossings=1"], None).0, 3);
}

#[test]
fn caps_give_exit_2() {
    let (code, _) = merolib(&["hopf", "census", "--q", "101"], Some("enum=10"));
    assert_eq!(code, 2);
}

#[test]
fn regularity_verdicts() {
    let (code, out) = merolib(&["regular", "--ring", "builtin:hopf", "--num", "y", "--den", "1 + x*y"], None);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["status"], "regular");
    let (code, out) = merolib(&["regular", "--ring", "builtin:hopf", "--num", "1", "--den", "x"], None);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["status"], "not_regular");
}

#[test]
fn braid_variety_round_trip() {
    let dir = std::env::temp_dir().join(format!("merolib-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hopf.json");
    let p = path.to_str().unwrap();
    let (code, _) = merolib(&["braid", "variety", "--strands", "2", "--word", "1,1,1", "--out", p], None);
    assert_eq!(code, 0);
    let (code, out) = merolib(&["braid", "count", "--pres", p, "--q", "5"], None);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["count"], 21);
    let (code, _) = merolib(&["braid", "variety", "--strands", "3", "--word", "1,2", "--out", p], None);
    assert_eq!(code, 1);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--crossings=+1,+2,+3", "--rank", "1", "--q", "7", "--samples", "10"];
    let (a, out_a) = merolib(&args, None);
    let (b, out_b) = merolib(&args, None);
    assert_eq!((a, b), (0, 0));
    assert_eq!(out_a, out_b);
}
