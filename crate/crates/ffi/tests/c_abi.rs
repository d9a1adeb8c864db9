use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn header() -> String {
    std::fs::read_to_string(crate_dir().join("include/logpoly.h")).expect("header generated by build.rs")
}

#[test]
fn header_declares_the_api() {
    let h = header();
    for name in [
        "lp_mapping_from_json",
        "lp_mapping_free",
        "lp_mapping_degree_cap",
        "lp_mapping_order",
        "lp_eval",
        "lp_eval_f",
        "lp_jacobian_direct",
        "lp_jacobian_closed",
        "lp_indicator",
        "lp_convexity_radius",
        "lp_last_error_message",
        "lp_version",
        "typedef struct LpMapping LpMapping;",
        "LP_STATUS_OK = 0",
        "LP_STATUS_SINGULAR",
    ] {
        assert!(h.contains(name), "header is missing {name}");
    }
    assert!(h.starts_with("#ifndef LOGPOLY_H"));
}

// target/<profile>/deps/<test-binary> -> target/<profile>
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = profile_dir().join("liblogpoly_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("smoke");
    let status = Command::new(&cc)
        .arg(crate_dir().join("tests/smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    let Ok(status) = status else {
        eprintln!("skipping: no C compiler ({cc})");
        return;
    };
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&exe).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(
        run.status.success(),
        "smoke program failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(stdout.contains("ffi smoke ok"));
}
