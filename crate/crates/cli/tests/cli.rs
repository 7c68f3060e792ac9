use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use charseq::pointlab::construct::line_through;
use charseq::pointlab::curve::{random_points_on_curve, rational_points};
use charseq::pointlab::io::{format_curve, format_points, parse_points};
use charseq::pointlab::{measure_rcs, PlaneCurve, PrimeField};
use charseq::realize::split_lines;
use charseq_cli::ROUTES;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

struct Fixture {
    dir: PathBuf,
    curve: PathBuf,
    points: PathBuf,
    cutter: PathBuf,
}

/// A Fermat quartic over F_101, six of its points and a totally split line.
fn fixture(name: &str) -> Fixture {
    let dir = std::env::temp_dir().join(format!("charseq-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = PrimeField::new(101).unwrap();
    let x = PlaneCurve::fermat(f, 4);
    let y = random_points_on_curve(&x, 6, 1, true).unwrap();
    let pool = rational_points(&x).unwrap();
    let line = &split_lines(&x, &pool, 1, &mut ChaCha8Rng::seed_from_u64(0))[0];
    let h = PlaneCurve::new(line_through(f, &line[0], &line[1]), true).unwrap();
    let fx = Fixture {
        curve: dir.join("curve.txt"),
        points: dir.join("points.txt"),
        cutter: dir.join("cutter.txt"),
        dir,
    };
    std::fs::write(&fx.curve, format_curve(&x)).unwrap();
    std::fs::write(&fx.points, format_points(&y)).unwrap();
    std::fs::write(&fx.cutter, format_curve(&h)).unwrap();
    fx
}

impl Fixture {
    fn arg(&self, a: &str) -> String {
        let path = |p: &Path| p.to_str().unwrap().to_string();
        match a {
            "{curve}" => path(&self.curve),
            "{points}" => path(&self.points),
            "{cutter}" => path(&self.cutter),
            other => other.to_string(),
        }
    }
}

fn charseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charseq"))
        .args(args)
        .env_remove("CHARSEQ_MODULUS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let cases: [(&[&str], &str); 3] = [
        (&["link", "--ambient", "0,1,2,3", "--rel", "2,2,3,3", "--s", "2"], "2,2,3,3"),
        (&["minimal", "--d", "6", "--alpha", "13"], "3,3,4,5,6,7"),
        (&["macaulay", "--c", "5", "--d", "2", "--next"], "7"),
    ];
    for (args, want) in cases {
        let mut argv = args.to_vec();
        argv.extend(["--format", "table"]);
        let o = charseq(&argv);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
    let o = charseq(&["minimal", "--d", "6", "--alpha", "13"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["op"], "liaison::minimal_delta_seq");
    assert_eq!(v["result"]["entries"], serde_json::json!([3, 3, 4, 5, 6, 7]));
}

#[test]
fn every_operation_has_exactly_one_route() {
    let expected = [
        "macaulay::macaulay_rep",
        "macaulay::macaulay_next",
        "macaulay::is_zero_sequence",
        "seqcalc::phi_from_charseq",
        "seqcalc::charseq_from_phi",
        "seqcalc::validate_abs",
        "seqcalc::bound_codim2",
        "seqcalc::aligned_bound",
        "seqcalc::separation_index",
        "seqcalc::ci_charseq",
        "seqcalc::is_gorenstein_symmetric",
        "seqcalc::seq_included",
        "liaison::rel_degree",
        "liaison::abs_from_rel",
        "liaison::rel_from_abs",
        "liaison::link",
        "liaison::add_section",
        "liaison::split_on_gap",
        "liaison::minimal_delta_seq",
        "liaison::phi_rel",
        "liaison::genus_acm_curve",
        "liaison::halphen_bound",
        "pointlab::monomial_basis",
        "pointlab::phi_points",
        "pointlab::phi_plane_curve",
        "pointlab::measure_rcs",
        "pointlab::measure_abs",
        "pointlab::random_points_on_curve",
        "pointlab::section_points",
        "pointlab::dim_linear_system",
        "linsys::r_alpha",
        "linsys::classify_equal_phi",
        "linsys::classify_maximal",
        "realize::is_admissible",
        "realize::add_case",
        "realize::filtration_points",
        "realize::can_add_at_level",
        "realize::realize",
        "realize::conjecture_scan",
        "verify::run_all",
    ];
    let routed: Vec<&str> = ROUTES.iter().map(|r| r.op).collect();
    let unique: BTreeSet<&str> = routed.iter().copied().collect();
    assert_eq!(unique.len(), routed.len(), "an operation is routed twice");
    assert_eq!(unique, expected.iter().copied().collect::<BTreeSet<_>>());

    let fx = fixture("routes");
    for route in ROUTES {
        let argv: Vec<String> = route.argv.iter().map(|a| fx.arg(a)).collect();
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        let o = charseq(&argv);
        assert!(
            o.status.success(),
            "{}: {}",
            route.op,
            String::from_utf8_lossy(&o.stderr)
        );
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["op"], route.op);
    }
    std::fs::remove_dir_all(&fx.dir).ok();
}

#[test]
fn exit_codes() {
    let usage = [
        &["link", "--rel", "1,2"][..],
        &["charseq", "--op", "phi", "--l", "2"],
        &["charseq", "--op", "phi", "--seq", "1,x", "--l", "2"],
        &["no-such-command"],
        &["genus"],
    ];
    for args in usage {
        assert_eq!(charseq(args).status.code(), Some(2), "{args:?}");
    }
    let domain = [
        &["link", "--rel", "1,2", "--s", "0"][..],
        &["minimal", "--d", "0", "--alpha", "3"],
        &["charseq", "--op", "from-phi", "--values", "1,3,2"],
        &["rcs", "--curve", "/nonexistent/curve.txt", "--points", "/nonexistent/p.txt"],
    ];
    for args in domain {
        let o = charseq(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = charseq(&["link", "--rel", "1,2", "--s", "0"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("s must be positive"));
}

#[test]
fn modulus_checks_and_environment_override() {
    let fx = fixture("modulus");
    let (c, p) = (fx.arg("{curve}"), fx.arg("{points}"));
    let args = ["rcs", "--curve", c.as_str(), "--points", p.as_str()];
    assert!(charseq(&args).status.success());

    let mut with_flag = args.to_vec();
    with_flag.extend(["--modulus", "103"]);
    let o = charseq(&with_flag);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("modulus mismatch"));

    let run_env = |argv: &[&str], value: &str| {
        Command::new(env!("CARGO_BIN_EXE_charseq"))
            .args(argv)
            .env("CHARSEQ_MODULUS", value)
            .output()
            .unwrap()
    };
    assert_eq!(run_env(&args, "103").status.code(), Some(1));
    assert!(run_env(&with_flag, "101").status.success());
    std::fs::remove_dir_all(&fx.dir).ok();
}

#[test]
fn realize_writes_points_and_is_reproducible() {
    let fx = fixture("realize");
    let out = fx.dir.join("realized.txt");
    let (c, o) = (fx.arg("{curve}"), out.to_str().unwrap().to_string());
    let args = [
        "realize", "--curve", c.as_str(), "--target", "2,3,3,4", "--seed", "3", "--out", o.as_str(),
    ];
    let first = charseq(&args);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let second = charseq(&args);
    assert_eq!(first.stdout, second.stdout);

    let y = parse_points(&std::fs::read_to_string(&out).unwrap(), Some(101)).unwrap();
    let x = PlaneCurve::fermat(PrimeField::new(101).unwrap(), 4);
    assert_eq!(measure_rcs(&x, &y).unwrap().entries, vec![2, 3, 3, 4]);

    let m = charseq(&["rcs", "--curve", c.as_str(), "--points", o.as_str(), "--format", "table"]);
    assert_eq!(stdout(&m).trim(), "2,3,3,4");

    let bad = charseq(&["realize", "--curve", c.as_str(), "--target", "2,4,4,4"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("inadmissible target"));
    std::fs::remove_dir_all(&fx.dir).ok();
}

#[test]
fn sampling_depends_only_on_the_seed() {
    let fx = fixture("sample");
    let c = fx.arg("{curve}");
    let run = |seed: &str| {
        stdout(&charseq(&[
            "rcs", "--op", "sample", "--curve", c.as_str(), "--count", "7", "--seed", seed, "--format", "table",
        ]))
    };
    assert_eq!(run("5"), run("5"));
    assert_ne!(run("5"), run("6"));
    assert!(run("5").starts_with("p=101"));
    std::fs::remove_dir_all(&fx.dir).ok();
}

#[test]
fn verify_prints_a_table() {
    let o = charseq(&["verify", "--quick", "--format", "table"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().all(|l| l.contains("PASS")));
}
