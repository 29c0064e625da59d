//! Piping `map X P` into `map X-inverse --m M --n N` with `(M, N)` taken from
//! `P` must give back `P`.

use std::process::Command;

fn alladi(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_alladi"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap().trim().to_string(),
    )
}

fn statistics(partition: &str) -> (u32, u32) {
    let parts: Vec<u32> = if partition == "0" {
        Vec::new()
    } else {
        partition.split('+').map(|x| x.parse().unwrap()).collect()
    };
    let even = parts.iter().filter(|x| *x % 2 == 0).count() as u32;
    (parts.len() as u32 + even, parts.iter().sum())
}

fn round_trip(map: &str, partition: &str) {
    let (code, image) = alladi(&["map", map, partition]);
    assert_eq!(code, 0, "map {map} {partition}");
    let (m, n) = statistics(partition);
    let inverse = format!("{map}-inverse");
    let (code, back) = alladi(&[
        "map",
        &inverse,
        &image,
        "--m",
        &m.to_string(),
        "--n",
        &n.to_string(),
    ]);
    assert_eq!(code, 0, "map {inverse} {image}");
    assert_eq!(back, partition, "{map} then {inverse}");
}

#[test]
fn schur_side_round_trips() {
    for p in [
        "0",
        "1",
        "2",
        "1+4",
        "3+7+14",
        "7+11+14+18",
        "2+5+11",
        "4+8+11+15",
        "1+5+10",
        "12+17+21+25+28+31+34+37+42+60+70+73",
    ] {
        round_trip("f", p);
        round_trip("phi", p);
        round_trip("G", p);
    }
}

#[test]
fn alladi_side_round_trips() {
    for p in [
        "0",
        "1",
        "1+1",
        "1+3",
        "1+1+7",
        "3+5+5+11",
        "1+1+3+3+9",
        "3+5+7+7+11+17",
    ] {
        round_trip("G-prime", p);
        round_trip("phi-prime", p);
    }
}

#[test]
fn segment_round_trips() {
    for p in [
        "5+10+14",
        "5+9+14",
        "7+11+14+18",
        "23+27+31+34+37+40+44+48+52+56",
    ] {
        round_trip("rho", p);
    }
}

#[test]
fn grouping_inverse_requires_domain() {
    for verb in [
        "G-inverse",
        "G-prime-inverse",
        "phi-inverse",
        "phi-prime-inverse",
    ] {
        let (code, _) = alladi(&["map", verb, "3"]);
        assert_eq!(code, 2, "{verb} without --m/--n");
        let (code, _) = alladi(&["map", verb, "3", "--m", "1"]);
        assert_eq!(code, 2, "{verb} with only --m");
    }
}

#[test]
fn mismatched_domain_is_a_domain_error() {
    let (code, out) = alladi(&[
        "--json",
        "map",
        "f-inverse",
        "3+5+5+11",
        "--m",
        "3",
        "--n",
        "24",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("\"kind\":\"domain-index\""), "{out}");
}

#[test]
fn verify_exit_codes() {
    let (code, out) = alladi(&["verify", "--suite", "all", "--max-n", "16"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("15 of 15 suites passed"), "{out}");
    let (code, _) = alladi(&["verify", "--suite", "no-such-suite", "--max-n", "5"]);
    assert_eq!(code, 2);
    let (code, out) = alladi(&["--json", "verify", "--suite", "eq6", "--max-n", "10"]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with('{') && out.contains("\"passed\":true"),
        "{out}"
    );
}

#[test]
fn five_column_diagram() {
    let top = ["3+7+14", "1+5+10", "5+10", "2+7", "7"];
    let bottom = ["3+5+5+11", "1+3+3+9", "3+3+9", "1+1+7", "7"];
    for (i, w) in top.windows(2).enumerate() {
        let verb = if i % 2 == 0 { "psi" } else { "G" };
        assert_eq!(alladi(&["map", verb, w[0]]).1, w[1]);
    }
    for (i, w) in bottom.windows(2).enumerate() {
        let verb = if i % 2 == 0 {
            "alladi-reduce"
        } else {
            "G-prime"
        };
        assert_eq!(alladi(&["map", verb, w[0]]).1, w[1]);
    }
    for (t, b) in top.iter().zip(bottom) {
        assert_eq!(alladi(&["map", "f", t]).1, b);
    }
}
