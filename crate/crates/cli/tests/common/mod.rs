#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// Workspace root, so invocations can use the same `data/...` paths a user
/// would.
pub fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

/// Runs the binary with inherited state stripped: the budget env var is
/// cleared so only flags set in the test apply.
pub fn run(args: &[&str]) -> Output {
    run_with(args, &[])
}

pub fn run_with(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_galois-kit"));
    cmd.args(args).current_dir(root()).env_remove("GALOIS_KIT_BUDGET");
    for (key, value) in env {
        cmd.env(key, value);
    }
    cmd.output().expect("binary must spawn")
}

pub fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("binary must exit, not be signalled")
}

pub fn stdout_str(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout must be utf-8")
}
