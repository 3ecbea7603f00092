//! Compiles a C program against the generated header and the static library.

use std::path::{Path, PathBuf};
use std::process::Command;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/dfrft.h"))
            .unwrap();
    for name in [
        "typedef struct DfrftMatrix DfrftMatrix;",
        "DFRFT_STATUS_SINGULAR = 5",
        "dfrft_matrix_new(",
        "dfrft_matrix_new_rational(",
        "dfrft_real_power(",
        "dfrft_matrix_free(",
        "dfrft_matrix_entries(",
        "dfrft_matrix_apply(",
        "dfrft_apply_fast(",
        "dfrft_coefficients(",
        "dfrft_multiplicities(",
        "dfrft_status_message(",
    ] {
        assert!(header.contains(name), "header is missing {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let lib = target_dir().join("libdfrft_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let Ok(cc) = which_cc() else {
        eprintln!("skipping: no C compiler");
        return;
    };
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let out_dir = tempfile::tempdir().unwrap();
    let exe = out_dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}

fn which_cc() -> Result<String, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc)
            .arg("--version")
            .output()
            .is_ok_and(|o| o.status.success())
        {
            return Ok(cc.to_string());
        }
    }
    Err(())
}
