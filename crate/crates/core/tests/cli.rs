use std::collections::BTreeSet;

use selfsim::cli::dispatch;
use selfsim::family::{build_family, build_over_family, FamilyId};
use selfsim::partition::{Overpartition, Partition};
use selfsim::sequence::{write_bfile, SequenceId};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("selfsim").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn seq_csv() {
    let r = run(&["seq", "sf", "--from", "0", "--to", "12", "--format", "csv"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "1,1,1,2,1,3,2,5,1,6,3,9,2\n");
}

#[test]
fn seq_bfile_is_byte_stable() {
    let a = run(&["seq", "sl", "--to", "40"]);
    let b = run(&["seq", "sl", "--to", "40"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    let mut direct = Vec::new();
    write_bfile(SequenceId::Sl, 1, 40, &mut direct).unwrap();
    assert_eq!(a.out.as_bytes(), direct);
    assert!(a.out.starts_with("1 2\n2 1\n"));
}

#[test]
fn seq_json() {
    let r = run(&["seq", "psp", "--from", "10", "--to", "11", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v[0]["id"], "psp");
    assert_eq!(v[0]["n"], 10);
    assert_eq!(v[1]["value"], 126);
}

#[test]
fn set_lines() {
    let r = run(&["set", "SB", "9"]);
    assert_eq!(r.code, 0);
    let got: BTreeSet<&str> = r.out.lines().collect();
    assert_eq!(got, BTreeSet::from(["9", "5+4", "7+2", "8+1"]));
    let p = run(&["set", "SB", "9", "--predicate"]);
    assert_eq!(p.out, r.out);
}

#[test]
fn set_json() {
    let r = run(&["set", "OBbar_star", "5", "--json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["family"], "OBbar_star");
    assert_eq!(v["n"], 5);
    assert_eq!(v["members"].as_array().unwrap().len(), 4);
}

#[test]
fn map_both_ways() {
    let r = run(&["map", "theta_sb", "5+4"]);
    assert_eq!((r.code, r.out.as_str()), (0, "4+4\n"));
    let r = run(&["map", "theta_sb", "4+2+2+1", "--backward"]);
    assert_eq!((r.code, r.out.as_str()), (0, "8+2\n"));
    let r = run(&["map", "h_st", "40+12+6+4+4+3+1+1", "--backward"]);
    assert_eq!(r.out, "8+8+8+8+8+4*+4+4+4+4+2+2+2+1*+1+1+1+1\n");
    let r = run(&["map", "theta_sb", "5+3"]);
    assert_eq!(r.code, 2);
    assert!(r.err.starts_with("error:"));
}

#[test]
fn gf_and_compare() {
    let r = run(&["gf", "sb", "--order", "4"]);
    assert_eq!(r.out, "0 0\n1 1\n2 1\n3 2\n4 1\n");
    let r = run(&["gf", "st", "--order", "2048", "--compare"]);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("pass series_st"));
    assert_eq!(run(&["gf", "psf", "--order", "4"]).code, 2);
}

#[test]
fn verify_and_oracle() {
    let r = run(&["verify", "sb_mod3", "--max-n", "12"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "pass sb_mod3 (n <= 12)\n");
    let r = run(&["verify", "spa_mod7", "--max-n", "100", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v[0]["status"], "pass");
    let r = run(&["oracle", "ST", "--max-n", "15"]);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("pass oracle_ST"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["seq", "nope", "--to", "3"][..],
        &["seq", "sf"],
        &["set", "SL", "1"],
        &["set", "ST", "31", "--predicate"],
        &["verify", "missing", "--max-n", "3"],
        &["map", "nope", "1"],
        &["frobnicate"],
        &["seq", "sl", "--from", "0", "--to", "3"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(!r.err.is_empty(), "{args:?}");
        assert!(r.out.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("Usage"));
    assert_eq!(run(&["--version"]).code, 0);
}

#[test]
fn listed_members_parse_back() {
    for fid in FamilyId::ALL {
        for n in fid.min_weight()..=50 {
            if fid.is_overpartition() {
                let set = build_over_family(fid, n).unwrap();
                for (s, o) in set.to_strings().iter().zip(set.iter()) {
                    assert_eq!(&s.parse::<Overpartition>().unwrap(), o);
                }
            } else {
                let set = build_family(fid, n).unwrap();
                for (s, l) in set.to_strings().iter().zip(set.iter()) {
                    assert_eq!(&s.parse::<Partition>().unwrap(), l);
                }
            }
        }
    }
    let r = run(&["set", "OBbar_dag", "21"]);
    let want = build_over_family(FamilyId::ObBarDag, 21).unwrap().to_strings();
    assert_eq!(r.out.lines().collect::<Vec<_>>(), want);
}
