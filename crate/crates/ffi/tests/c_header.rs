//! Compiles and runs a small C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "sturmian_lab.h"

int main(void) {
    SlWord *w = NULL;
    if (sl_word_new_characteristic("[0;(1)]", &w) != SL_STATUS_OK) return 1;
    uint8_t buf[8];
    if (sl_word_prefix(w, 8, buf, sizeof buf) != SL_STATUS_OK) return 2;
    for (int i = 0; i < 8; i++) putchar('0' + buf[i]);
    putchar('\n');
    sl_word_free(w);
    double v = 0;
    char *q = NULL;
    if (sl_rep_exact("(b2a2)", &v, &q) != SL_STATUS_OK) return 3;
    printf("%.6f %s\n", v, q);
    sl_string_free(q);
    if (sl_rep_exact("((", &v, NULL) != SL_STATUS_PARSE) return 4;
    if (sl_last_error() == NULL) return 5;
    return 0;
}
"#;

#[test]
fn c_program_links() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler; skipped");
        return;
    };
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libsturmian_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipped", lib.display());
        return;
    }
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = tmp.join("smoke.c");
    let bin = tmp.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let st = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(st.success(), "compile failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "10110101\n1.440036 quad:(5,10,19,5)\n");
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
