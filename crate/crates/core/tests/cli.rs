use std::path::PathBuf;
use std::process::{Command, Output};

fn loco(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loco"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("loco-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn capacity_and_cardinality() {
    let o = loco(&["capacity", "--config", "configs/op8.json"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "C=2.9129 Cn=0.9710");
    let o = loco(&["capacity", "--family", "np"]);
    assert!(stdout(&o).contains("scheme C=2.8325 Cn=0.9442"));
    let o = loco(&["cardinality", "--family", "np", "--m", "6"]);
    assert_eq!(stdout(&o).trim(), "2536");
    let o = loco(&[
        "cardinality",
        "--config",
        "configs/os8.json",
        "--m",
        "2,3,4",
    ]);
    assert_eq!(stdout(&o), "m=2 N=64\nm=3 N=510\nm=4 N=4064\n");
}

#[test]
fn rate_table_rows() {
    let o = loco(&["rate-table", "--family", "op", "--m", "13,89"]);
    let text = stdout(&o);
    assert!(text.contains("    13   2.7143   0.9048     38"), "{text}");
    assert!(text.contains("    89   2.8778   0.9593    259"), "{text}");
}

#[test]
fn encode_bits_literal() {
    let o = loco(&[
        "encode",
        "--family",
        "os",
        "--m",
        "5",
        "--bits",
        "00010110101000",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "02765");
    let o = loco(&["encode", "--family", "os", "--m", "5", "--bits", "0101"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn file_round_trip_and_verify() {
    let msg: Vec<u8> = (0..210u32).map(|k| (k * 37 % 251) as u8).collect();
    let input = scratch("msg.bin");
    std::fs::write(&input, &msg).unwrap();
    for family in ["os", "op", "np"] {
        let grid = scratch(&format!("{family}.grid"));
        let back = scratch(&format!("{family}.back"));
        let (i, g, b) = (
            input.to_str().unwrap(),
            grid.to_str().unwrap(),
            back.to_str().unwrap(),
        );
        let base = ["--family", family, "--m", "5", "--format", "grid"];
        let run = |cmd: &str, extra: &[&str]| {
            let mut args = vec![cmd];
            args.extend(base);
            args.extend(extra);
            loco(&args)
        };
        assert!(run("encode", &["--in", i, "--out", g]).status.success());
        assert!(run("decode", &["--in", g, "--out", b]).status.success());
        assert_eq!(std::fs::read(&back).unwrap(), msg, "{family}");
        let v = run("verify", &["--in", g]);
        assert!(v.status.success(), "{}", stdout(&v));
        assert!(stdout(&v).contains("stream ok"));
    }
}

#[test]
fn corrupted_stream_exits_one() {
    let stream = scratch("bad.sym");
    // Frame 1 holds 020, a forbidden OS-LOCO pattern.
    std::fs::write(&stream, "02765|3|00200|3|02765\n").unwrap();
    let s = stream.to_str().unwrap();
    let o = loco(&["verify", "--family", "os", "--m", "5", "--in", s]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("constraint_violation=1"));
    let o = loco(&["decode", "--family", "os", "--m", "5", "--in", s]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("frame 1: constraint_violation"));
}

#[test]
fn enumerate_and_usage_errors() {
    let o = loco(&["enumerate", "--family", "lorll", "--d", "1", "--m", "3"]);
    assert_eq!(stdout(&o), "0\t000\n1\t001\n2\t010\n3\t100\n4\t101\n");
    assert_eq!(loco(&["capacity"]).status.code(), Some(2));
    assert_eq!(loco(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        loco(&["encode", "--family", "os", "--m", "1", "--bits", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn selftest_passes() {
    let o = loco(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(),
        9
    );
}
