//! Compiles and runs a small C program against the generated header and the
//! static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "torsion3.h"

int main(void) {
    T3Quartic *q = NULL;
    if (t3_quartic_new("x^4+2*x^2-12", NULL, &q) != T3_STATUS_OK) return 10;
    T3Verdict v;
    if (t3_quartic_obstruction(q, &v, NULL) != T3_STATUS_OK || v != T3_VERDICT_PLUS) return 11;
    T3Solutions *s = NULL;
    if (t3_solve(q, 2, &s) != T3_STATUS_OK || t3_solutions_len(s) != 2) return 12;
    char *json = NULL;
    if (t3_solutions_record_json(s, 0, &json) != T3_STATUS_OK) return 13;
    if (strstr(json, "\"D4\"") == NULL) return 14;
    t3_string_free(json);
    bool ok = false;
    if (t3_solutions_verify(q, s, 1, &ok) != T3_STATUS_OK || !ok) return 15;
    t3_solutions_free(s);
    t3_quartic_free(q);
    if (t3_quartic_new("x^4+", NULL, &q) != T3_STATUS_INVALID || q != NULL) return 16;
    printf("%s\n", t3_last_error());
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include/torsion3.h");
    assert!(header.exists(), "header not generated");
    let lib = target_dir().join("libtorsion3_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("torsion3-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    let exe = dir.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("unexpected end of input"));
    let _ = std::fs::remove_dir_all(&dir);
}
