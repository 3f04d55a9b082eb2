use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use cubewalk_ffi::*;

fn hypercube(n: u32) -> *mut CwGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cw_graph_hypercube(n, &mut g) }, CwStatus::Ok);
    g
}

#[test]
fn q2_walk_reaches_the_antipode() {
    let g = hypercube(2);
    let mut w = ptr::null_mut();
    let mut probs = [0.0; 4];
    unsafe {
        assert_eq!(cw_walk_new(g, 0, CwCoin::Padded, &mut w), CwStatus::Ok);
        assert_eq!(cw_walk_evolve(w, 1), CwStatus::Ok);
        assert_eq!(
            cw_walk_probabilities(w, probs.as_mut_ptr(), 4),
            CwStatus::Ok
        );
        assert!((probs[1] - 0.5).abs() < 1e-12 && (probs[2] - 0.5).abs() < 1e-12);
        assert_eq!(cw_walk_evolve(w, 1), CwStatus::Ok);
        let mut p = 0.0;
        assert_eq!(cw_walk_probability_at(w, 0b11, &mut p), CwStatus::Ok);
        assert!((p - 1.0).abs() < 1e-12);
        assert_eq!(
            cw_walk_probabilities(w, probs.as_mut_ptr(), 3),
            CwStatus::BufferTooSmall
        );
        cw_walk_free(w);
        cw_graph_free(g);
    }
}

#[test]
fn hitting_time_defaults() {
    let g = hypercube(4);
    let mut r = CwHittingRecord::default();
    unsafe {
        assert_eq!(
            cw_find_hitting_time(g, CwCoin::Padded, 0, ptr::null(), 0, 0, &mut r),
            CwStatus::Ok
        );
        cw_graph_free(g);
    }
    assert_eq!(
        (r.steps, r.target, r.window_lo, r.window_hi),
        (6, 0b1111, 1, 12)
    );
    assert!((r.probability - 0.5625).abs() < 1e-9);
}

#[test]
fn empty_window_is_rejected() {
    let g = hypercube(3);
    let mut r = CwHittingRecord::default();
    unsafe {
        let status = cw_find_hitting_time(g, CwCoin::Padded, 0, ptr::null(), 5, 4, &mut r);
        assert_eq!(status, CwStatus::InvalidArgument);
        let msg = CStr::from_ptr(cw_last_error_message()).to_str().unwrap();
        assert!(msg.contains("window"));
        cw_graph_free(g);
    }
}

#[test]
fn custom_generators_and_counts() {
    let values = [0b0101u64, 0b0111, 0b1001, 0b1010];
    let mut g = ptr::null_mut();
    let mut p = ptr::null_mut();
    let mut counts = CwGateCounts::default();
    unsafe {
        assert_eq!(
            cw_graph_from_generators(4, values.as_ptr(), 4, true, &mut g),
            CwStatus::Ok
        );
        assert_eq!(cw_graph_degree(g), 4);
        assert_eq!(cw_graph_coin_width(g), 2);
        assert_eq!(
            cw_compile_step(g, CwStrategy::PaperDiffusion, &mut p),
            CwStatus::Ok
        );
        assert_eq!(cw_program_counts(p, &mut counts), CwStatus::Ok);
        cw_program_free(p);
        cw_graph_free(g);
    }
    // shift 6 X + 9 MCX, coin 4 X + 1 MCX
    assert_eq!((counts.x, counts.mcx, counts.phase), (10, 10, 2));
}

#[test]
fn identity_generator_is_rejected() {
    let values = [0u64, 1];
    let mut g = ptr::null_mut();
    let status = unsafe { cw_graph_from_generators(2, values.as_ptr(), 2, true, &mut g) };
    assert_eq!(status, CwStatus::InvalidArgument);
    assert!(g.is_null());
}

#[test]
fn status_codes_for_limits_and_strategies() {
    let mut g = ptr::null_mut();
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(cw_graph_complete(16, &mut g), CwStatus::ResourceLimit);
        let g = hypercube(3);
        assert_eq!(
            cw_compile_step(g, CwStrategy::PaperDiffusion, &mut p),
            CwStatus::Unsupported
        );
        assert_eq!(cw_compile_step(g, CwStrategy::Auto, &mut p), CwStatus::Ok);
        cw_program_free(p);
        cw_graph_free(g);
    }
}

#[test]
fn qasm_string_round_trip() {
    let mut g = ptr::null_mut();
    let mut p = ptr::null_mut();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(cw_graph_complete(3, &mut g), CwStatus::Ok);
        assert_eq!(cw_compile_step(g, CwStrategy::Auto, &mut p), CwStatus::Ok);
        assert_eq!(
            cw_program_qasm(p, CwLowering::AncillaLadder, &mut s),
            CwStatus::Ok
        );
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        cw_string_free(s);
        cw_program_free(p);
        cw_graph_free(g);
        assert!(text.contains("qreg anc[2];"));
        let back = cubewalk::parse_qasm(&text).unwrap();
        assert_eq!(back.ancillas(), 2);
    }
}

#[test]
fn full_register_complete_graph() {
    let mut g = ptr::null_mut();
    let mut p = 0.0;
    unsafe {
        assert_eq!(cw_graph_complete(4, &mut g), CwStatus::Ok);
        let target = cw_graph_target_vertex(g);
        assert_eq!(
            cw_one_shot_probability(g, CwCoin::FullRegister, 4, 0, target, &mut p),
            CwStatus::Ok
        );
        cw_graph_free(g);
    }
    assert!(p >= 0.999);
}

#[test]
fn null_handles() {
    unsafe {
        assert_eq!(cw_graph_dimension(ptr::null()), 0);
        assert_eq!(cw_walk_evolve(ptr::null_mut(), 1), CwStatus::NullPointer);
        cw_graph_free(ptr::null_mut());
        cw_string_free(ptr::null_mut());
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/cubewalk.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "typedef struct CwGraph CwGraph;",
        "CwStatus cw_graph_hypercube(uint32_t n, CwGraph **out);",
        "const char *cw_last_error_message(void);",
        "CW_STATUS_RESOURCE_LIMIT = 3",
    ] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = target_dir().join("libcubewalk_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cubewalk_smoke");
    let status = Command::new("cc")
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
