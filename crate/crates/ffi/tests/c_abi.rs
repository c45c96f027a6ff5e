use k3pairs_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { k3p_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(k3p_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn session_round_trip() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { k3p_session_new(1, 0, 6, 4, &mut s) }, K3pStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { k3p_syst(s, 1, 1, 0, &mut out) }, K3pStatus::Ok);
    assert_eq!(take(out), "24");
    assert_eq!(unsafe { k3p_syst(s, 0, 1, 1, &mut out) }, K3pStatus::Ok);
    assert_eq!(take(out), "1");
    assert_eq!(unsafe { k3p_series_json(s, 1, &mut out) }, K3pStatus::Ok);
    let rows: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert!(rows.as_array().unwrap().iter().any(|r| r["q"] == 1 && r["y"] == 0 && r["value"] == "2"));
    unsafe { k3p_session_free(s) };
}

#[test]
fn fit_report() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { k3p_session_new(1, 0, 6, 4, &mut s) }, K3pStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { k3p_fit_json(s, 2, 12, 10, 16, &mut out) }, K3pStatus::Ok);
    let rep: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(rep["combination"][0]["monomial"], "E2");
    assert_eq!(unsafe { k3p_fit_json(s, 2, 0, 10, 16, &mut out) }, K3pStatus::IdentityFailure);
    assert!(last_error().contains("no solution"), "{}", last_error());
    unsafe { k3p_session_free(s) };
}

#[test]
fn error_codes() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { k3p_session_new(2, 3, 6, 4, &mut s) }, K3pStatus::Unsupported);
    assert!(s.is_null());
    assert!(last_error().contains("r = 3"));
    assert_eq!(unsafe { k3p_session_new(2, 1, -1, 4, &mut s) }, K3pStatus::InvalidArgument);
    assert_eq!(unsafe { k3p_session_new(2, 1, 6, 4, ptr::null_mut()) }, K3pStatus::NullPointer);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { k3p_syst(ptr::null(), 0, 0, 0, &mut out) }, K3pStatus::NullPointer);
    unsafe { k3p_session_free(ptr::null_mut()) };
    unsafe { k3p_string_free(ptr::null_mut()) };
}

#[test]
fn verify_suites() {
    let suite = CString::new("routes").unwrap();
    assert_eq!(unsafe { k3p_verify(suite.as_ptr(), 2, 10, 5, 5, 4) }, K3pStatus::Ok);
    assert_eq!(last_error(), "");
    let bad = CString::new("bogus").unwrap();
    assert_eq!(unsafe { k3p_verify(bad.as_ptr(), 2, 10, 5, 5, 4) }, K3pStatus::InvalidArgument);
    assert_eq!(unsafe { k3p_verify(ptr::null(), 2, 10, 5, 5, 4) }, K3pStatus::NullPointer);
    let v = unsafe { CStr::from_ptr(k3p_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_abi_and_compiles() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/k3pairs.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "k3p_session_new",
        "k3p_session_free",
        "k3p_syst",
        "k3p_series_json",
        "k3p_fit_json",
        "k3p_verify",
        "k3p_string_free",
        "k3p_last_error",
        "typedef struct K3pSession K3pSession",
        "K3pStatus_IdentityFailure = 3",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
    let dir = std::env::temp_dir().join(format!("k3pairs-hdr-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(
        &src,
        format!(
            "#include \"{header}\"\nint main(void) {{ K3pSession *s = 0; K3pStatus st = k3p_session_new(1, 0, 4, 4, &s); k3p_session_free(s); return st == K3pStatus_Ok ? 0 : 1; }}\n"
        ),
    )
    .unwrap();
    let status = Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"]).arg(&src).status().expect("cc");
    assert!(status.success());
}
