//! Determinism and exit-code contract: every documented subcommand, run
//! twice on the bundled example files, must produce byte-identical stdout
//! and the documented exit code — success paths and every error class.

mod common;

use std::time::{Duration, Instant};

use common::{exit_code, run};

const INVOCATIONS: &[(&[&str], i32)] = &[
    // ok
    (&["lattice", "validate", "--lattice", "data/luk5.json"], 0),
    (&["lattice", "validate", "--lattice", "data/custom_bool2.json"], 0),
    (&["lattice", "classify", "--lattice", "data/goedel3.json"], 0),
    (&["lattice", "classify", "--lattice", "data/luk3.json"], 0),
    (
        &["op", "apply", "--relation", "data/rel_luk3_2x2.json", "--kind", "phi", "--vector", "1,1/2"],
        0,
    ),
    (&["op", "apply", "--operator", "data/op_join_half.json", "--vector", "0"], 0),
    (&["op", "galois", "--relation", "data/rel_luk3_2x2.json"], 0),
    (&["op", "classify", "--operator", "data/op_join_half.json"], 0),
    (&["op", "classify", "--relation", "data/rel_luk3_2x2.json", "--kind", "rho"], 0),
    (&["op", "adjoint", "--operator", "data/op_join_half.json", "--kind", "right_of_monotone"], 0),
    (&["op", "recover", "--relation", "data/rel_luk3_2x2.json", "--kind", "from_phi"], 0),
    (&["op", "recover", "--relation", "data/rel_luk3_2x2.json", "--kind", "from_delta"], 0),
    (&["op", "recover", "--relation", "data/rel_luk3_2x2.json", "--kind", "from_rho"], 0),
    (&["op", "decompose", "--operator", "data/op_join_half.json", "--kind", "closure"], 0),
    (&["fca", "concepts", "--context", "data/ctx_identity.csv", "--lattice", "data/bool2.json"], 0),
    (
        &[
            "fca", "concepts", "--context", "data/ctx_all_ones.csv", "--lattice", "data/bool2.json",
            "--format", "dot",
        ],
        0,
    ),
    (&["fca", "concepts", "--context", "data/ctx_luk3.json"], 0),
    (&["fca", "export", "--context", "data/ctx_luk3.json"], 0),
    (&["tense", "check", "--relation", "data/frame_bool_2pt.json", "--suite", "boolean_B"], 0),
    (&["tense", "check", "--relation", "data/frame_bool_2pt.json", "--suite", "mv_T"], 0),
    (&["tense", "check", "--relation", "data/frame_luk3_equiv.json", "--suite", "pavelka_PT"], 0),
    (&["tense", "correspondence", "--relation", "data/frame_luk3_equiv.json"], 0),
    (&["tense", "correspondence", "--relation", "data/frame_luk3_half.json"], 0),
    (&["monadic", "check", "--relation", "data/frame_luk3_equiv.json", "--suite", "monadic_new"], 0),
    (&["monadic", "bridge", "--relation", "data/frame_luk3_equiv.json"], 0),
    // law_violation
    (&["lattice", "validate", "--lattice", "data/lattice_broken_prod.json"], 1),
    (&["tense", "check", "--relation", "data/frame_luk3_half.json", "--suite", "mv_T"], 1),
    (
        &["monadic", "check", "--relation", "data/frame_luk3_equiv.json", "--suite", "monadic_original"],
        1,
    ),
    (&["monadic", "check", "--relation", "data/frame_bool_2pt.json", "--suite", "monadic_new"], 1),
    (&["op", "decompose", "--operator", "data/op_jump_closure.json", "--kind", "closure"], 1),
    (&["op", "recover", "--operator", "data/op_join_half.json", "--kind", "from_phi"], 1),
    // precondition_error
    (&["tense", "check", "--relation", "data/frame_luk3_equiv.json", "--suite", "boolean_B"], 2),
    (&["lattice", "validate", "--lattice", "data/luk3.json", "--format", "dot"], 2),
    (
        &["op", "apply", "--relation", "data/rel_luk3_2x2.json", "--kind", "phi", "--vector", "1,2/3"],
        2,
    ),
    // budget_exceeded
    (&["op", "galois", "--relation", "data/rel_luk3_2x2.json", "--budget", "5"], 3),
    // io_error
    (&["lattice", "validate", "--lattice", "data/no_such_file.json"], 4),
    (&["fca", "concepts", "--context", "data/ctx_identity.csv"], 4),
];

#[test]
fn criterion_10_documented_subcommands_are_deterministic() {
    let start = Instant::now();

    for (args, expected_code) in INVOCATIONS {
        let first = run(args);
        let second = run(args);
        assert_eq!(
            exit_code(&first),
            *expected_code,
            "`{}` exit code (stdout: {})",
            args.join(" "),
            String::from_utf8_lossy(&first.stdout),
        );
        assert_eq!(exit_code(&second), *expected_code, "`{}` rerun exit code", args.join(" "));
        assert_eq!(
            first.stdout,
            second.stdout,
            "`{}` must print byte-identical output on rerun",
            args.join(" "),
        );
    }

    let elapsed = start.elapsed();
    assert!(
        elapsed <= Duration::from_secs(10),
        "criterion 10 took {elapsed:?}, bound is 10 s"
    );
    println!("criterion 10 (subcommand determinism and exit codes): pass in {elapsed:?}");
}
