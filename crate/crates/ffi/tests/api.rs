use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use chroma_ffi::*;

fn graph(n: usize, edges: &[u32]) -> *mut ChromaGraph {
    let mut g = ptr::null_mut();
    let st = unsafe { chroma_graph_new(n, edges.as_ptr(), edges.len() / 2, &mut g) };
    assert_eq!(st, ChromaStatus::Ok);
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(chroma_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn k4_colouring() {
    let g = graph(4, &[0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3]);
    unsafe {
        let mut d = ptr::null_mut();
        let st = chroma_solve_colouring(g, ChromaFamily::S, 1, 2, 3, 0, false, &mut d);
        assert_eq!(st, ChromaStatus::Ok);
        assert_eq!(chroma_decision_verdict(d), ChromaVerdict::No);
        let mut n = 0;
        let st = chroma_decision_certificate(d, ptr::null_mut(), 0, &mut n);
        assert_eq!(st, ChromaStatus::InvalidParams);
        chroma_decision_free(d);

        let mut d = ptr::null_mut();
        chroma_solve_colouring(g, ChromaFamily::H, 1, 2, 4, 0, false, &mut d);
        assert_eq!(chroma_decision_verdict(d), ChromaVerdict::Yes);
        let mut buf = [0u32; 2];
        let st = chroma_decision_certificate(d, buf.as_mut_ptr(), buf.len(), &mut n);
        assert_eq!((st, n), (ChromaStatus::BufferTooSmall, 4));
        let mut buf = [0u32; 4];
        let st = chroma_decision_certificate(d, buf.as_mut_ptr(), buf.len(), &mut n);
        assert_eq!(st, ChromaStatus::Ok);
        buf.sort_unstable();
        assert_eq!(buf, [1, 2, 3, 4]);
        chroma_decision_free(d);
        chroma_graph_free(g);
    }
}

#[test]
fn stable_cut_and_freeness() {
    let p3 = graph(3, &[0, 1, 1, 2]);
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(
            chroma_solve_stable_cut(p3, 0, false, &mut d),
            ChromaStatus::Ok
        );
        let mut cut = [0u32; 3];
        let mut n = 0;
        chroma_decision_certificate(d, cut.as_mut_ptr(), 3, &mut n);
        assert_eq!(&cut[..n], &[1]);
        chroma_decision_free(d);

        let mut free = false;
        let spec = CString::new("C(3)").unwrap();
        assert_eq!(
            chroma_is_free(p3, spec.as_ptr(), &mut free),
            ChromaStatus::Ok
        );
        assert!(free);
        let spec = CString::new("nonsense").unwrap();
        assert_eq!(
            chroma_is_free(p3, spec.as_ptr(), &mut free),
            ChromaStatus::InvalidParams
        );
        assert!(!last_error().is_empty());
        chroma_graph_free(p3);
    }
}

#[test]
fn errors_and_nulls() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            chroma_graph_new(2, [0u32, 5].as_ptr(), 1, &mut g),
            ChromaStatus::InvalidInput
        );
        assert!(g.is_null());
        assert_eq!(
            chroma_graph_new(2, ptr::null(), 1, &mut g),
            ChromaStatus::NullPointer
        );
        assert_eq!(
            chroma_graph_new(2, ptr::null(), 0, &mut g),
            ChromaStatus::Ok
        );
        assert_eq!(chroma_graph_vertex_count(g), 2);
        let mut d = ptr::null_mut();
        let st = chroma_solve_stable_cut(g, 0, false, &mut d);
        assert_eq!(st, ChromaStatus::InvalidParams);
        chroma_graph_free(g);
        chroma_graph_free(ptr::null_mut());
        assert_eq!(chroma_graph_edge_count(ptr::null()), 0);
        assert!(chroma_decision_json(ptr::null()).is_null());
        let mut td = 0;
        assert_eq!(
            chroma_treedepth(ptr::null(), 3, &mut td),
            ChromaStatus::NullPointer
        );

        let text = CString::new("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(
            chroma_graph_from_dimacs(text.as_ptr(), &mut g),
            ChromaStatus::Ok
        );
        assert_eq!(chroma_graph_edge_count(g), 2);
        chroma_graph_free(g);
    }
}

#[test]
fn header_compiles_and_links_from_c() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(crate_dir.join("include/chroma.h")).unwrap();
    for f in [
        "chroma_graph_new",
        "chroma_solve_colouring",
        "chroma_decision_free",
    ] {
        assert!(header.contains(f), "header lacks {f}");
    }
    // target/<profile>/deps/<test binary>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libchroma_ffi.a");
    assert!(
        lib.exists(),
        "static library not built at {}",
        lib.display()
    );
    let exe = std::env::temp_dir().join(format!("chroma_smoke_{}", std::process::id()));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap_or_else(|e| panic!("cannot run {cc}: {e}"));
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
