use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::io::Write;

use permstego_cli::run;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], input: &str) -> Outcome {
    let mut argv = vec!["permstego"];
    argv.extend_from_slice(args);
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = run(argv, &mut input.as_bytes(), &mut stdout, &mut stderr);
    Outcome { code, stdout: String::from_utf8(stdout).unwrap(), stderr: String::from_utf8(stderr).unwrap() }
}

fn testdata(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata").join(name).display().to_string()
}

fn movies_presented() -> String {
    std::fs::read_to_string(testdata("movies.txt"))
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

#[test]
fn raw_encode() {
    assert_eq!(invoke(&["encode"], "hello world\n").stdout, "[1,17,13,5,4,0,3,12,8,15,14,11,16,7,9,10,2,6]\n");
    assert_eq!(invoke(&["encode"], "a\n").stdout, "[0]\n");
    assert_eq!(invoke(&["encode"], "hi").stdout, "[1,5,2,0,4,3]\n");
    assert_eq!(invoke(&["encode"], "hi\r\n").stdout, "[1,5,2,0,4,3]\n");
    assert_eq!(invoke(&["encode", "--lowercase"], "HI\n").stdout, "[1,5,2,0,4,3]\n");

    let upper = invoke(&["encode"], "Hi\n");
    assert_eq!(upper.code, 2);
    assert!(upper.stderr.contains("not in the alphabet"), "{}", upper.stderr);
}

#[test]
fn raw_decode() {
    assert_eq!(invoke(&["decode"], "[3,8,6,5,1,7,0,4,10,2,12,9,11]\n").stdout, "test me\n");
    assert_eq!(invoke(&["decode"], "[0]\n").stdout, "\n");
    assert_eq!(invoke(&["decode"], " [1, 0] \n").stdout, "b\n");
    assert_eq!(invoke(&["decode"], "[1,1]\n").code, 2);
    assert_eq!(invoke(&["decode"], "1,0\n").code, 2);
    assert_eq!(invoke(&["decode"], "[0,-1]\n").code, 2);
}

#[test]
fn raw_roundtrip() {
    for msg in ["hello world", "test me", "zebras", " leading space", "bury him"] {
        let code = invoke(&["encode"], &format!("{msg}\n")).stdout;
        assert_eq!(invoke(&["decode"], &code).stdout, format!("{msg}\n"));
    }
}

#[test]
fn raw_mode_drops_trailing_zero_symbols() {
    let code = invoke(&["encode"], "zebra\n").stdout;
    assert_eq!(code, invoke(&["encode"], "zebr\n").stdout);
    assert_eq!(invoke(&["decode"], &code).stdout, "zebr\n");
}

#[test]
fn custom_alphabets() {
    let out = invoke(&["encode", "--alphabet", "01"], "11\n").stdout;
    assert_eq!(invoke(&["decode", "--alphabet", "01"], &out).stdout, "11\n");
    assert_eq!(invoke(&["encode", "--alphabet", "aa"], "a").code, 2);

    let table = testdata("../../core/data/english_letters.tsv");
    let out = invoke(&["encode", "--freq-table", &table], "e\n");
    assert_eq!(out.stdout, "[0]\n");
    assert_eq!(invoke(&["encode", "--freq-table", "/no/such/file"], "e").code, 5);
}

#[test]
fn cover_bury_him() {
    let movies = testdata("movies.txt");
    let enc = invoke(&["encode-cover", "--cover", &movies, "--sort-lex", "--sentinel", "off"], "bury him\n");
    assert_eq!(enc.code, 0, "{}", enc.stderr);
    assert_eq!(enc.stdout, movies_presented());

    let dec = invoke(&["decode-cover", "--cover", &movies, "--sort-lex", "--sentinel", "off"], &enc.stdout);
    assert_eq!(dec.stdout, "bury him\n");
    assert!(dec.stderr.is_empty());

    let warned = invoke(&["decode-cover", "--cover", &movies, "--sort-lex"], &enc.stdout);
    assert_eq!(warned.code, 0);
    assert_eq!(warned.stdout, "bury him\n");
    assert!(warned.stderr.contains("no sentinel"));
}

#[test]
fn cover_with_keys_and_sentinel() {
    let dir = tempfile::tempdir().unwrap();
    let cover = dir.path().join("cover.txt");
    std::fs::write(&cover, (0..11).map(|k| format!("player {k:02}\n")).collect::<String>()).unwrap();
    let cover = cover.display().to_string();
    let key = testdata("key11.txt");

    let enc = invoke(&["encode-cover", "--cover", &cover, "--key", &key], "aaa\n");
    assert_eq!(enc.code, 0, "{}", enc.stderr);
    assert_eq!(invoke(&["decode-cover", "--cover", &cover, "--key", &key], &enc.stdout).stdout, "aaa\n");

    let enc = invoke(&["encode-cover", "--cover", &cover, "--key-seed", "9"], "hey\n");
    assert_eq!(invoke(&["decode-cover", "--cover", &cover, "--key-seed", "9"], &enc.stdout).stdout, "hey\n");

    // canonical sender, keyed receiver
    let enc = invoke(&["encode-cover", "--cover", &cover, "--sentinel", "off"], "hello\n");
    let dec = invoke(&["decode-cover", "--cover", &cover, "--key", &key, "--sentinel", "off"], &enc.stdout);
    assert_eq!(dec.stdout, "cbhwdc\n");

    let short_key = dir.path().join("short.txt");
    std::fs::write(&short_key, "[1,0]\n").unwrap();
    assert_eq!(invoke(&["encode-cover", "--cover", &cover, "--key", &short_key.display().to_string()], "hi").code, 4);
    let bad_key = dir.path().join("bad.txt");
    std::fs::write(&bad_key, "[1,1,0]\n").unwrap();
    assert_eq!(invoke(&["encode-cover", "--cover", &cover, "--key", &bad_key.display().to_string()], "hi").code, 4);
    assert_eq!(invoke(&["encode-cover", "--cover", &cover, "--key", &key, "--key-seed", "1"], "hi").code, 2);
}

#[test]
fn cover_errors() {
    let dir = tempfile::tempdir().unwrap();
    let small = dir.path().join("small.txt");
    std::fs::write(&small, "one\ntwo\nthree\n").unwrap();
    let small = small.display().to_string();
    let out = invoke(&["encode-cover", "--cover", &small], "xyz\n");
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("at least 8"), "{}", out.stderr);

    let movies = testdata("movies.txt");
    let mut tampered = movies_presented().replace("SCARFACE\n", "SCARFACE II\n");
    assert_eq!(invoke(&["decode-cover", "--cover", &movies, "--sort-lex"], &tampered).code, 2);
    tampered = movies_presented().replace("SCARFACE\n", "");
    assert_eq!(invoke(&["decode-cover", "--cover", &movies, "--sort-lex"], &tampered).code, 2);

    let dup = dir.path().join("dup.txt");
    std::fs::write(&dup, "a\nb\na\n").unwrap();
    assert_eq!(invoke(&["encode-cover", "--cover", &dup.display().to_string()], "").code, 2);
    assert_eq!(invoke(&["encode-cover", "--cover", "/no/such/cover"], "hi").code, 5);
}

#[test]
fn keygen() {
    let a = invoke(&["keygen", "-n", "5", "--seed", "7"], "");
    assert_eq!(a.stdout, "[4,3,2,0,1]\n");
    assert_eq!(invoke(&["keygen", "-n", "1"], "").stdout, "[0]\n");
    assert_eq!(invoke(&["keygen", "-n", "0"], "").code, 2);
}

#[test]
fn analyze_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();

    let r = invoke(&["analyze", "--fig", "2", "--max-n", "12", "--samples", "2000", "--seed", "7", "--out", &out], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    let fig2 = std::fs::read_to_string(dir.path().join("fig2.csv")).unwrap();
    let lines: Vec<_> = fig2.lines().collect();
    assert_eq!(lines[0], "n,total_bits,max_bits");
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[1], "1,0.000000,0.000000");
    assert!(r.stdout.starts_with("fig2: 12 rows"));

    let r = invoke(&["analyze", "--fig", "1", "--max-n", "2", "--samples", "100", "--out", &out], "");
    assert_eq!(r.code, 0);
    let fig1 = std::fs::read_to_string(dir.path().join("fig1.csv")).unwrap();
    assert_eq!(fig1, "n,position,entropy_bits\n1,0,0.000000\n2,0,0.000000\n2,1,0.000000\n");

    let r = invoke(&["analyze", "--fig", "3", "--max-len", "5", "--samples", "100", "--out", &out], "");
    assert_eq!(r.code, 0);
    let fig3 = std::fs::read_to_string(dir.path().join("fig3.csv")).unwrap();
    assert_eq!(fig3.lines().count(), 6);
    assert_eq!(fig3.lines().next(), Some("L,mean_items,ci95_halfwidth"));

    // Byte-stable output for equal flags.
    invoke(&["analyze", "--fig", "3", "--max-len", "5", "--samples", "100", "--out", &out], "");
    assert_eq!(std::fs::read_to_string(dir.path().join("fig3.csv")).unwrap(), fig3);

    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "").unwrap();
    let bad = blocker.join("sub").display().to_string();
    assert_eq!(invoke(&["analyze", "--fig", "1", "--max-n", "2", "--out", &bad], "").code, 5);
    assert_eq!(invoke(&["analyze", "--fig", "4"], "").code, 2);
}

#[test]
fn binary_exit_codes() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_permstego"))
        .arg("encode")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"hello world\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(out.stdout, b"[1,17,13,5,4,0,3,12,8,15,14,11,16,7,9,10,2,6]\n");

    let out = Command::new(env!("CARGO_BIN_EXE_permstego"))
        .args(["encode-cover", "--cover", "/no/such/file"])
        .stdin(Stdio::null())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
}
