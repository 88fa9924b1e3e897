use std::path::Path;
use std::process::{Command, Output};

const EXAMPLE_ALIST: &str = "10 5\n2 4\n2 2 2 2 2 2 2 2 2 2\n4 4 4 4 4\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n1 2 3 4\n1 5 6 7\n2 5 8 9\n3 6 8 10\n4 7 9 10\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ldpc-dsss"))
}

fn run(args: &[&str]) -> Output {
    let out = bin().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "ldpc-dsss {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn girth_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "h.alist", EXAMPLE_ALIST);
    let out = run(&["girth", "--matrix", &m]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "6\n");
}

#[test]
fn construct_then_girth() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("peg.alist");
    run(&["construct", "--peg", "4,2,1", "--seed", "3", "--out", path.to_str().unwrap()]);
    let out = run(&["girth", "--matrix", path.to_str().unwrap()]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "acyclic\n");

    let a = run(&["construct", "--peg", "64,32,3,9"]).stdout;
    let b = run(&["construct", "--peg", "64,32,3", "--seed", "9"]).stdout;
    assert_eq!(a, b);
    let h = ldpc_dsss::gf2::parse_alist(std::str::from_utf8(&a).unwrap()).unwrap();
    assert!(h.col_weights().iter().all(|&w| w == 3));
}

#[test]
fn encode_then_decode() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "h.alist", EXAMPLE_ALIST);
    let info = write(dir.path(), "info.txt", "101101\n");
    let word = String::from_utf8(run(&["encode", "--matrix", &m, "--input", &info]).stdout).unwrap();
    let word = word.trim();
    assert_eq!(word.len(), 10);

    let h = ldpc_dsss::gf2::parse_alist(EXAMPLE_ALIST).unwrap();
    let c: ldpc_dsss::BitBlock = word.chars().map(|c| c == '1').collect();
    assert!(h.syndrome(&c).unwrap().is_zero());

    // Soft, mostly-correct LLRs with one weak wrong bit.
    let mut llrs: Vec<f64> = word.chars().map(|c| if c == '1' { -3.0 } else { 3.0 }).collect();
    llrs[4] = -llrs[4] * 0.2;
    let text: String = llrs.iter().map(|l| format!("{l}\n")).collect();
    let llr_path = write(dir.path(), "llr.txt", &text);
    let out = run(&["decode", "--matrix", &m, "--input", &llr_path]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), word);
    assert!(String::from_utf8(out.stderr).unwrap().contains("converged=true"));

    let out = run(&["decode", "--matrix", &m, "--input", &llr_path, "--form", "signmag", "--info"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "101101");
}

#[test]
fn errors_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.alist", &EXAMPLE_ALIST.replace("4 7 9 10\n", "4 7 9 11\n"));
    let out = bin().args(["girth", "--matrix", &bad]).output().unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 19") && err.contains("index out of range"), "{err}");

    let m = write(dir.path(), "h.alist", EXAMPLE_ALIST);
    let info = write(dir.path(), "info.txt", "10110\n");
    let out = bin().args(["encode", "--matrix", &m, "--input", &info]).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn simulate_writes_csv_and_plot_data() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let plot = dir.path().join("plot.csv");
    run(&[
        "simulate", "--peg", "64,32,3", "--snr-db", "-2:1:0", "--pg", "1,4", "--runs", "20",
        "--min-errors", "20", "--max-frames", "200", "--out", csv.to_str().unwrap(),
        "--plot-data", plot.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.contains("# snr_ref=chip"));
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "snr_db,snr_ref,pg,frames,info_bits,bit_errors,frame_errors,ber,fer,avg_iters,seed");
    assert_eq!(rows.len(), 1 + 3 * 2);
    let plot = std::fs::read_to_string(&plot).unwrap();
    assert_eq!(plot.lines().next().unwrap(), "snr_db,ber_pg1,ber_pg4");
    assert_eq!(plot.lines().count(), 4);
}

#[test]
fn simulate_noiseless_and_not_mode() {
    let out = run(&[
        "simulate", "--peg", "64,32,3", "--noiseless", "--pg", "4", "--spread-mode", "not",
        "--spread-cols", "3", "--runs", "30", "--max-frames", "30",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().last().unwrap();
    assert!(row.starts_with("inf,chip,4,30,"), "{row}");
    assert!(row.contains(",0,0,0.00000e0,0.00000e0,"), "{row}");
}
