//! End-to-end runs of the `csr` binary over the fixture files, pinning
//! exit codes and printed output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    path.display().to_string()
}

fn csr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csr"))
        .env_remove("SEMIRING_MAX_ORDER")
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is text")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is text")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("the binary exits normally")
}

#[test]
fn validate_accepts_the_stock_algebras() {
    for name in [
        "triv.alg",
        "z2.alg",
        "bool.alg",
        "nstar.alg",
        "c3.alg",
        "z4.alg",
        "d4.alg",
    ] {
        let out = csr(&["validate", &fixture(name)]);
        assert_eq!(code(&out), 0, "{name}: {}", stderr(&out));
        assert!(
            stdout(&out).contains("a valid commutative semiring of order"),
            "{name}: {}",
            stdout(&out)
        );
    }
}

#[test]
fn validate_accepts_based_algebras() {
    let out = csr(&["validate", &fixture("d4-over-z2.alg")]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("D4: a valid algebra of order 4 over Z2"));
}

#[test]
fn validate_rejects_axiom_failures_with_exit_1() {
    let out = csr(&["validate", &fixture("bad-axiom.alg")]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("invalid"), "{text}");
    assert!(text.contains("absorption"), "{text}");
}

#[test]
fn syntax_errors_exit_2_with_their_position() {
    let out = csr(&["validate", &fixture("bad-syntax.alg")]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains(":5:3:"), "{}", stderr(&out));
}

#[test]
fn missing_files_exit_2() {
    let out = csr(&["validate", &fixture("no-such.alg")]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("cannot read"), "{}", stderr(&out));
}

#[test]
fn usage_errors_exit_2() {
    let out = csr(&["validate"]);
    assert_eq!(code(&out), 2);
    let out = csr(&["frobnicate"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn classify_names_the_equational_classes() {
    let out = csr(&["classify", &fixture("z2.alg")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "Z2: CRings2 BRings CSRstar\n");

    let out = csr(&["classify", &fixture("z4.alg")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "Z4: -\n");
}

#[test]
fn coreflect_extracts_the_largest_star_subalgebra() {
    let out = csr(&["coreflect", &fixture("d4.alg")]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("semiring D4'"), "{text}");
    assert!(text.contains("order 2"), "{text}");
    assert!(text.contains("hom D4' -> D4"), "{text}");
    assert!(text.contains("0 -> 0"), "{text}");
    assert!(text.contains("1 -> 1"), "{text}");
}

#[test]
fn coreflect_needs_an_algebra_over_the_initial_object() {
    let out = csr(&["coreflect", &fixture("z4.alg")]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("not an algebra over the initial object"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn initial_over_the_naturals_is_the_three_element_quotient() {
    let out = csr(&["initial", "--naturals"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "semiring NSTAR\norder 3\nadd\n0 1 2\n1 2 1\n2 1 2\nmul\n0 0 0\n0 1 2\n0 2 2\n"
    );
}

#[test]
fn initial_over_a_finite_base_is_presented_by_a_congruence() {
    let out = csr(&["initial", &fixture("z4.alg")]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("base Z4\n"), "{text}");
    assert!(text.contains("semiring I(Z4)"), "{text}");
    assert!(text.contains("order 2"), "{text}");
    assert!(text.contains("hom Z4 -> I(Z4)"), "{text}");
    assert!(text.contains("2 -> 0"), "{text}");
    assert!(text.contains("3 -> 1"), "{text}");
}

#[test]
fn coproduct_of_the_two_order_two_algebras_collapses() {
    let out = csr(&["coproduct", &fixture("z2.alg"), &fixture("bool.alg")]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("order 1"), "{}", stdout(&out));
}

#[test]
fn coproduct_rejects_mismatched_bases() {
    let out = csr(&["coproduct", &fixture("d4-over-z2.alg"), &fixture("d4.alg")]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("different bases"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn coeq_folds_the_chain_onto_two_elements() {
    let out = csr(&[
        "coeq",
        &fixture("c3.alg"),
        &fixture("c3.alg"),
        &fixture("c3-id.map"),
        &fixture("c3-fold.map"),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("semiring C3/~"), "{text}");
    assert!(text.contains("order 2"), "{text}");
    assert!(text.contains("hom C3 -> C3/~"), "{text}");
    assert!(text.contains("2 -> 1"), "{text}");
}

#[test]
fn pushout_along_an_identity_leg_returns_the_other_leg() {
    let out = csr(&[
        "pushout",
        &fixture("nstar.alg"),
        &fixture("c3.alg"),
        &fixture("nstar.alg"),
        &fixture("nstar-to-c3.map"),
        &fixture("nstar-id.map"),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("order 3"), "{}", stdout(&out));
}

#[test]
fn colimit_of_an_arrow_diagram_is_its_target() {
    let out = csr(&["colimit", &fixture("pair.diag")]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("semiring colim"), "{text}");
    assert!(text.contains("order 3"), "{text}");
    assert_eq!(text.matches("hom C3 -> colim").count(), 2, "{text}");
}

#[test]
fn an_empty_diagram_exits_2() {
    let out = csr(&["colimit", &fixture("empty.diag")]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("a diagram needs at least one object"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn enumerate_lists_one_entry_per_isomorphism_class() {
    let out = csr(&["enumerate", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("# 1 of 2: Z2 [CRings2 BRings CSRstar]"), "{text}");
    assert!(text.contains("# 2 of 2: BOOL [AICSR DLat CSRstar]"), "{text}");
}

#[test]
fn enumerate_tsv_rows_carry_the_tables() {
    let out = csr(&["--format", "tsv", "enumerate", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "Z2\t2\tCRings2 BRings CSRstar\t0 1 1 0\t0 0 0 1\n\
         BOOL\t2\tAICSR DLat CSRstar\t0 1 1 1\t0 0 0 1\n"
    );
}

#[test]
fn the_enumeration_cap_is_enforced() {
    let out = csr(&["enumerate", "5"]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("exceeds the enumeration cap"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn order_zero_is_a_usage_error() {
    let out = csr(&["enumerate", "0"]);
    assert_eq!(code(&out), 2, "{}", stderr(&out));

    let out = csr(&["check", "coreflection", "--max-order", "0"]);
    assert_eq!(code(&out), 2, "{}", stderr(&out));
}

#[test]
fn the_cap_env_var_overrides_the_default() {
    let lowered = Command::new(env!("CARGO_BIN_EXE_csr"))
        .env("SEMIRING_MAX_ORDER", "2")
        .args(["enumerate", "3"])
        .output()
        .expect("the binary runs");
    assert_eq!(code(&lowered), 2);

    let allowed = Command::new(env!("CARGO_BIN_EXE_csr"))
        .env("SEMIRING_MAX_ORDER", "2")
        .args(["enumerate", "2"])
        .output()
        .expect("the binary runs");
    assert_eq!(code(&allowed), 0);
}

#[test]
fn check_closure_small_passes() {
    let out = csr(&["check", "closure", "CSRstar", "--max-order", "2"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("suite: closure CSRstar"), "{text}");
    assert!(text.contains("summary:"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn check_closure_rejects_unknown_classes() {
    let out = csr(&["check", "closure", "Bogus"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown class"), "{}", stderr(&out));
}

#[test]
fn check_coreflection_small_passes() {
    let out = csr(&["check", "coreflection", "--max-order", "2"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("suite: coreflection"));
}

#[test]
fn check_section3_runs_the_specialization_suite() {
    let out = csr(&["check", "section3", "--max-order", "2"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("suite: specialization"));
}

#[test]
fn tsv_reports_end_with_a_summary_row() {
    let out = csr(&[
        "check", "closure", "CSRstar", "--max-order", "2", "--format", "tsv",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    let last = text.lines().last().expect("a summary row");
    assert!(
        last.starts_with("closure CSRstar\tsummary\tPASS"),
        "{last}"
    );
    for line in text.lines() {
        assert_eq!(line.split('\t').count(), 4, "{line}");
    }
}
