use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subcubic-pack")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn color_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["k4", "petersen", "prism_5", "cycle_7", "path_3"] {
        let prefix = dir.path().join(name);
        let p = prefix.to_str().unwrap();
        let o = bin(&["color", "--named", name, "--out", p, "--verify-level", "every-step"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).starts_with("VALID "));
        let good = bin(&["verify", "--named", name, "--coloring", &format!("{p}.good"), "--mode", "good"]);
        assert_eq!(good.status.code(), Some(0), "{}", stdout(&good));
        let packing =
            bin(&["verify", &format!("{p}.subdivision"), "--coloring", &format!("{p}.packing"), "--mode", "packing"]);
        assert_eq!(packing.status.code(), Some(0), "{}", stdout(&packing));
    }
}

#[test]
fn corrupted_coloring_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("c");
    let p = prefix.to_str().unwrap();
    assert_eq!(bin(&["color", "--named", "cycle_6", "--out", p]).status.code(), Some(0));
    let text = std::fs::read_to_string(format!("{p}.good")).unwrap();
    let first = text.lines().next().unwrap().split(' ').nth(1).unwrap().to_string();
    let corrupted: String =
        text.lines().enumerate().map(|(i, l)| if i == 1 { format!("1 {first}\n") } else { format!("{l}\n") }).collect();
    let path = dir.path().join("bad.good");
    std::fs::write(&path, &corrupted).unwrap();
    let o = bin(&["verify", "--named", "cycle_6", "--coloring", path.to_str().unwrap(), "--mode", "good"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("vertices 0 and 1 at distance 1"), "{}", stdout(&o));
}

#[test]
fn feasible_and_sequence_modes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.txt");
    std::fs::write(&path, "0 1a\n1 1b\n2 2a\n").unwrap();
    let f = path.to_str().unwrap();
    assert_eq!(bin(&["verify", "--named", "path_3", "--coloring", f, "--mode", "feasible"]).status.code(), Some(0));
    std::fs::write(&path, "0 1\n1 2\n2 1\n").unwrap();
    let o = bin(&["verify", "--named", "path_3", "--coloring", f, "--mode", "s-spec", "--spec", "1,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = bin(&["verify", "--named", "path_3", "--coloring", f, "--mode", "s-spec", "--spec", "2,2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let star = dir.path().join("star.txt");
    std::fs::write(&star, "5 4\n0 1\n0 2\n0 3\n0 4\n").unwrap();
    let o = bin(&["color", star.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not subcubic"));
    let two = dir.path().join("two.txt");
    std::fs::write(&two, "4 2\n0 1\n2 3\n").unwrap();
    assert_eq!(bin(&["color", two.to_str().unwrap()]).status.code(), Some(2));
    let o = bin(&["color", two.to_str().unwrap(), "--per-component"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    std::fs::write(&two, "4 9\n0 1\n").unwrap();
    assert_eq!(bin(&["color", two.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bin(&["fuzz", "--n-range", "9..2"]).status.code(), Some(2));
}

#[test]
fn graph6_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.g6");
    std::fs::write(&path, "C~\n").unwrap();
    let o = bin(&["color", path.to_str().unwrap(), "--format", "graph6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("VALID n=4 subdivision_n=10"));
}

#[test]
fn chi_p_command() {
    assert!(stdout(&bin(&["chi-p", "--named", "k4"])).starts_with("chi_p=4 "));
    assert!(stdout(&bin(&["chi-p", "--named", "path_1"])).starts_with("chi_p=1 "));
    assert!(stdout(&bin(&["chi-p", "--named", "cycle_5", "--subdivide"])).starts_with("chi_p=4 "));
    assert!(stdout(&bin(&["chi-p", "--named", "k4", "--max-k", "3"])).starts_with("chi_p>3 "));
}

#[test]
fn fuzz_campaigns_pass() {
    let o = bin(&["fuzz", "--family", "cubic", "--n-range", "4..16", "--count", "1000", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("pipeline Cubic: instances=1000 failures=0"));
    assert!(stdout(&o).contains("T5-Case1"));
    let o = bin(&["fuzz", "--family", "2deg", "--n-range", "1..50", "--count", "1000", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("T2-Case2.1"));
    for campaign in ["repair", "lemma-pair", "lemma-three"] {
        let o = bin(&["fuzz", "--campaign", campaign, "--count", "200", "--seed", "3"]);
        assert_eq!(o.status.code(), Some(0), "{campaign}: {}", stdout(&o));
    }
}
