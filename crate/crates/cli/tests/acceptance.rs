//! Acceptance criterion for the reproduction command.

use std::process::Command;
use std::time::Instant;

#[test]
fn criterion_12_reproduce_all() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_sigdefect"))
        .arg("reproduce-all")
        .output()
        .expect("spawn");
    let elapsed = start.elapsed().as_secs_f64();
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(
        out.status.success(),
        "reproduce-all exited {:?}:\n{stdout}",
        out.status.code()
    );
    assert!(stdout.contains("0 failures"), "{stdout}");
    assert!(elapsed < 60.0, "reproduce-all took {elapsed:.1} s");

    // byte-identical on repetition
    let again = Command::new(env!("CARGO_BIN_EXE_sigdefect"))
        .arg("reproduce-all")
        .output()
        .expect("spawn");
    assert_eq!(stdout, String::from_utf8(again.stdout).unwrap());

    println!("ACCEPTANCE 12: PASS ({elapsed:.2} s) - reproduce-all exits 0 with 0 failures");
}
