use std::process::{Command, Output};

const D: &str = "107887196930872715055177987172922818560000000000000000000";
const D1: &str = "290623844184270796846629126144000000000000000000";

fn hypvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypvol"))
        .args(args)
        .env_remove("HYPVOL_FORMAT")
        .env_remove("HYPVOL_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Vec<serde_json::Value> {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = hypvol(&all);
    serde_json::from_slice::<serde_json::Value>(&out.stdout)
        .expect("valid json")
        .as_array()
        .expect("array")
        .clone()
}

#[test]
fn euler_table_is_golden() {
    let out = hypvol(&["table", "euler", "4..18"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = " n | |chi(M^n)|
 4 | 10
 6 | 910
 8 | 3171350
10 | 725639764850
12 | 16654568229539490250
14 | 54376724439679967985482572750
16 | 33998109351372684068956597092378802073750
18 | 5272397653068183031816584035192902513000228940543011250
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn volume_table_rows() {
    let out = hypvol(&["table", "volume", "4..20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("12 | 98579836734072034892.809\n"), "{text}");
    assert!(text.contains(" 4 | 131.594\n"));
    assert!(text.contains("20 | 3.734 E70\n"));
    assert_eq!(text.lines().count(), 18);

    let single = hypvol(&["table", "volume", "14..14"]);
    assert_eq!(stdout(&single), " n | vol(M^n)\n14 | 1.555 E29\n");
}

#[test]
fn half_even_rounding_is_available() {
    let out = hypvol(&["--rounding", "half-even", "table", "volume", "14"]);
    assert_eq!(stdout(&out), " n | vol(M^n)\n14 | 1.556 E29\n");
}

#[test]
fn table_range_is_checked() {
    assert_eq!(hypvol(&["table", "euler", "2..8"]).status.code(), Some(64));
    assert_eq!(hypvol(&["table", "volume", "4..61"]).status.code(), Some(64));
}

#[test]
fn verify_32_prints_denominator() {
    let out = hypvol(&["verify", "32"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains(D));
    assert!(text.contains("DENOMINATOR"));
    assert!(text.lines().last().unwrap().contains("VERIFIED"));

    let rows = json(&["verify", "32"]);
    let chi = rows.iter().find(|r| r["quantity"] == "chi_compact").unwrap();
    assert_eq!(chi["exact_denominator"], D);
    let verdict = rows.last().unwrap();
    assert_eq!(verdict["verdict"], "VERIFIED");
}

#[test]
fn verify_below_range_is_usage_error() {
    let out = hypvol(&["verify", "29"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_needs_a_dimension() {
    assert_eq!(hypvol(&["verify"]).status.code(), Some(64));
}

#[test]
fn low_precision_exits_2() {
    let out = hypvol(&["--precision", "64", "verify", "31"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("precision"), "{err}");
    assert!(!stdout(&out).contains("VERIFIED"));
    assert!(!stdout(&out).contains("UNDECIDED"));
}

#[test]
fn precision_flag_bounds() {
    assert_eq!(hypvol(&["--precision", "32", "verify", "31"]).status.code(), Some(64));
}

#[test]
fn json_and_text_agree() {
    let args = ["verify", "31"];
    let text = stdout(&hypvol(&args));
    let rows = json(&args);
    assert_eq!(text.lines().count(), rows.len());
    for (line, row) in text.lines().zip(&rows) {
        let display = row["display"].as_str().unwrap();
        assert!(line.contains(display), "{line} vs {display}");
        if let Some(mid) = row["midpoint"].as_str() {
            if row["exact_denominator"].is_null() {
                assert!(line.contains(mid), "{line} vs {mid}");
            }
        }
    }
}

#[test]
fn csv_matches_json() {
    let args = ["table", "volume", "4..8"];
    let out = hypvol(&[&["--format", "csv"][..], &args[..]].concat());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "dimension,quantity,midpoint,radius,exact_numerator,exact_denominator,verdict,display"
    );
    let rows = json(&args);
    for (line, row) in lines.zip(&rows) {
        assert!(line.starts_with(&format!(
            "{},vol_noncompact,{}",
            row["dimension"],
            row["midpoint"].as_str().unwrap()
        )));
    }
    assert!(text.ends_with('\n'));
}

#[test]
fn environment_is_overridden_by_flags() {
    let env_only = Command::new(env!("CARGO_BIN_EXE_hypvol"))
        .args(["value", "bernoulli", "--n", "2"])
        .env("HYPVOL_FORMAT", "json")
        .output()
        .unwrap();
    assert!(stdout(&env_only).trim_start().starts_with('['));

    let flag_wins = Command::new(env!("CARGO_BIN_EXE_hypvol"))
        .args(["--format", "text", "value", "bernoulli", "--n", "2"])
        .env("HYPVOL_FORMAT", "json")
        .output()
        .unwrap();
    assert!(stdout(&flag_wins).contains("1/6"));
    assert!(!stdout(&flag_wins).contains('['));
}

#[test]
fn value_examples() {
    let z = json(&["value", "zeta-k-neg", "--j", "1"]);
    assert_eq!(z[0]["exact_numerator"], "1");
    assert_eq!(z[0]["exact_denominator"], "30");
    assert!(stdout(&hypvol(&["value", "zeta-k-neg", "--j", "1"])).contains("1/30"));

    let chi = json(&["value", "chi-noncompact", "--n", "8"]);
    assert_eq!(chi[0]["display"], "3171350");

    let sub = json(&["value", "suborbifold-chi"]);
    assert_eq!(sub[0]["exact_denominator"], D1);
}

#[test]
fn value_quantities() {
    let one = |args: &[&str]| json(args)[0]["display"].as_str().unwrap().to_string();
    assert_eq!(one(&["value", "bernoulli", "--n", "12"]), "-691/2730");
    assert_eq!(one(&["value", "zeta-neg", "--j", "1"]), "-1/12");
    assert_eq!(one(&["value", "c-constant", "--r", "1"]), "(1/4)*pi^-2");
    assert_eq!(
        one(&["value", "lambda", "--kind", "bar", "--q", "4", "--r", "3"]),
        "63/2"
    );
    assert_eq!(
        one(&["value", "index", "--form", "br-hyperspecial", "--q", "2", "--r", "2"]),
        "45"
    );
    let chi32 = json(&["value", "chi-compact", "--n", "32"]);
    assert_eq!(chi32[0]["exact_denominator"], D);
    let lam = json(&["value", "chi-compact", "--n", "32", "--lambda-q", "4"]);
    assert_eq!(
        lam[0]["exact_denominator"].as_str().unwrap(),
        format!("{}", num_bigint::BigInt::parse_bytes(D.as_bytes(), 10).unwrap() * 2)
    );
    let vol = json(&["value", "vol-compact", "--n", "31"]);
    assert!(vol[0]["midpoint"].as_str().unwrap().starts_with("2.415"));
    assert!(vol[0]["exact_numerator"].is_null());
    let vol_m = json(&["value", "vol-noncompact", "--n", "31", "--digits", "4"]);
    assert_eq!(vol_m[0]["midpoint"], "3.113e202");
}

#[test]
fn value_argument_errors() {
    assert_eq!(hypvol(&["value", "bernoulli"]).status.code(), Some(64));
    assert_eq!(hypvol(&["value", "chi-noncompact", "--n", "7"]).status.code(), Some(64));
    assert_eq!(hypvol(&["value", "no-such-thing"]).status.code(), Some(64));
    assert_eq!(hypvol(&["value", "zeta-neg", "--j", "0"]).status.code(), Some(64));
}

#[test]
fn help_exits_zero() {
    assert_eq!(hypvol(&["--help"]).status.code(), Some(0));
    assert_eq!(hypvol(&["--version"]).status.code(), Some(0));
}
