use std::time::Instant;

use hypvol_core::verdicts::{verify_dimension, verify_dimensions, Config, Method, Verdict};
use hypvol_core::{Error, PrecisionPolicy};

#[test]
fn full_range_is_verified() {
    let start = Instant::now();
    let dims: Vec<u32> = (30..=60).collect();
    let reports = verify_dimensions(&dims, &Config::default());
    for (n, report) in dims.iter().zip(reports) {
        let report = report.unwrap_or_else(|e| panic!("n = {n}: {e}"));
        assert_eq!(report.dimension, *n);
        assert_eq!(
            report.verdict,
            Verdict::Verified,
            "n = {n}: {:?}",
            report.failing_check()
        );
        let expected = match n {
            30 | 32 => Method::Denominator,
            31 => Method::Suborbifold,
            _ => Method::Ratio,
        };
        assert_eq!(report.method, expected, "n = {n}");
    }
    eprintln!("verified 30..=60 in {:?}", start.elapsed());
}

#[test]
fn low_precision_fails_loudly() {
    let config = Config {
        policy: PrecisionPolicy::fixed(64),
        ..Config::default()
    };
    match verify_dimension(31, &config) {
        Err(e) => assert!(e.is_precision(), "{e}"),
        Ok(r) => panic!("expected a precision failure, got {}", r.verdict),
    }
    assert!(matches!(
        verify_dimension(29, &Config::default()),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn escalation_recovers_from_low_start() {
    let config = Config {
        policy: PrecisionPolicy { start: 64, max: 1024 },
        ..Config::default()
    };
    let report = verify_dimension(31, &config).unwrap();
    assert_eq!(report.verdict, Verdict::Verified);
    assert!(report.precision > 64);
}
