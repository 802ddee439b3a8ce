use std::ffi::{CStr, CString};
use std::ptr;

use graphcurv_ffi::*;

fn last_error() -> String {
    let p = gc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn paper3() -> *mut GcGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { gc_graph_paper_example(0.01, &mut g) }, GcStatus::Ok);
    g
}

fn two_vertex() -> *mut GcGraph {
    let json =
        CString::new(r#"{"vertices":[{"id":"a","m":1},{"id":"b","m":1}],"edges":[{"u":"a","v":"b","w":1}]}"#).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { gc_graph_from_json(json.as_ptr(), &mut g) }, GcStatus::Ok);
    g
}

#[test]
fn graph_lifecycle_and_round_trip() {
    let g = paper3();
    let mut n = 0;
    assert_eq!(unsafe { gc_graph_vertex_count(g, &mut n) }, GcStatus::Ok);
    assert_eq!(n, 3);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gc_graph_to_json(g, &mut s) }, GcStatus::Ok);
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { gc_graph_from_json(s, &mut back) }, GcStatus::Ok);
    let mut n2 = 0;
    assert_eq!(unsafe { gc_graph_vertex_count(back, &mut n2) }, GcStatus::Ok);
    assert_eq!(n2, 3);
    unsafe {
        gc_string_free(s);
        gc_graph_free(back);
        gc_graph_free(g);
        gc_graph_free(ptr::null_mut());
        gc_string_free(ptr::null_mut());
    }
}

#[test]
fn spectral_quantities_on_two_vertices() {
    let g = two_vertex();
    let mut rho = [0.0; 2];
    assert_eq!(
        unsafe { gc_curvature(g, f64::INFINITY, 1e-10, rho.as_mut_ptr(), 2) },
        GcStatus::Ok
    );
    assert!(rho.iter().all(|r| (r - 2.0).abs() < 1e-9));
    assert_eq!(
        unsafe { gc_curvature(g, 2.0, 1e-10, rho.as_mut_ptr(), 2) },
        GcStatus::Ok
    );
    assert!(rho.iter().all(|r| (r - 1.0).abs() < 1e-9));

    let mut l1 = 0.0;
    assert_eq!(unsafe { gc_lambda1(g, &mut l1) }, GcStatus::Ok);
    assert!((l1 - 2.0).abs() < 1e-12);

    let mut h = 0.0;
    assert_eq!(unsafe { gc_cheeger(g, &mut h) }, GcStatus::Ok);
    assert_eq!(h, 1.0);

    let potential = [0.0, 2.0];
    let (mut e, mut phi) = (0.0, [0.0; 2]);
    assert_eq!(
        unsafe { gc_ground_state(g, potential.as_ptr(), 2, &mut e, phi.as_mut_ptr()) },
        GcStatus::Ok
    );
    assert!((e - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-12);
    assert!(phi.iter().all(|p| *p > 0.0));
    assert_eq!(
        unsafe { gc_ground_state(g, potential.as_ptr(), 2, &mut e, ptr::null_mut()) },
        GcStatus::Ok
    );

    let (a, t) = (1.5, 0.7);
    let mut k = 0.0;
    assert_eq!(
        unsafe { gc_kato_constant(g, [a, 0.0].as_ptr(), 2, t, &mut k) },
        GcStatus::Ok
    );
    let exact = 0.5 * a * (t + 0.5 * (1.0 - (-2.0 * t).exp()));
    assert!((k - exact).abs() < 1e-9);
    unsafe { gc_graph_free(g) };
}

#[test]
fn kato_check_on_paper_example() {
    let g = paper3();
    let mut rho = [0.0; 3];
    assert_eq!(
        unsafe { gc_curvature(g, f64::INFINITY, 1e-10, rho.as_mut_ptr(), 3) },
        GcStatus::Ok
    );
    let (mut ok, mut value) = (false, 0.0);
    let status = unsafe {
        gc_kato_check(
            g,
            rho.as_ptr(),
            3,
            1.0,
            1.0,
            GcKatoVariant::B,
            false,
            &mut ok,
            &mut value,
        )
    };
    assert_eq!(status, GcStatus::Ok);
    assert!(ok);
    assert!(value > 0.0);
    unsafe { gc_graph_free(g) };
}

#[test]
fn verify_status_mirrors_cli_exit_codes() {
    let g = two_vertex();
    let all = CString::new("all").unwrap();
    let lich = CString::new("lichnerowicz").unwrap();
    let mut out = ptr::null_mut();

    let status = unsafe { gc_verify(g, all.as_ptr(), ptr::null(), 0, 1.0, 1.0, f64::INFINITY, 5, 7, &mut out) };
    assert_eq!(
        status,
        GcStatus::Ok,
        "{}",
        unsafe { CStr::from_ptr(out) }.to_string_lossy()
    );
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    assert_eq!(text.lines().count(), 9);
    unsafe { gc_string_free(out) };

    let zero = [0.0, 0.0];
    let status = unsafe {
        gc_verify(
            g,
            lich.as_ptr(),
            zero.as_ptr(),
            2,
            1.0,
            1.0,
            f64::INFINITY,
            5,
            7,
            &mut out,
        )
    };
    assert_eq!(status, GcStatus::HypothesisUnsatisfied);
    assert!(unsafe { CStr::from_ptr(out) }
        .to_str()
        .unwrap()
        .contains("\"hypotheses_satisfied\":false"));
    unsafe { gc_string_free(out) };
    unsafe { gc_graph_free(g) };
}

#[test]
fn errors_set_status_and_message() {
    let g = two_vertex();
    let mut out = ptr::null_mut();

    let bad = CString::new("{\"vertices\":[]}").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { gc_graph_from_json(bad.as_ptr(), &mut h) },
        GcStatus::InvalidInput
    );
    assert!(h.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(
        unsafe { gc_graph_from_json(ptr::null(), &mut h) },
        GcStatus::NullPointer
    );
    assert!(last_error().contains("null"));

    let mut rho = [0.0; 3];
    assert_eq!(
        unsafe { gc_curvature(g, f64::INFINITY, 1e-10, rho.as_mut_ptr(), 3) },
        GcStatus::InvalidInput
    );
    assert!(last_error().contains("length"));

    assert_eq!(
        unsafe { gc_curvature(g, 0.0, 1e-10, rho.as_mut_ptr(), 2) },
        GcStatus::InvalidInput
    );

    let suite = CString::new("nope").unwrap();
    assert_eq!(
        unsafe {
            gc_verify(
                g,
                suite.as_ptr(),
                ptr::null(),
                0,
                1.0,
                1.0,
                f64::INFINITY,
                5,
                7,
                &mut out,
            )
        },
        GcStatus::InvalidInput
    );
    let all = CString::new("all").unwrap();
    assert_eq!(
        unsafe {
            gc_verify(
                g,
                all.as_ptr(),
                ptr::null(),
                0,
                -1.0,
                1.0,
                f64::INFINITY,
                5,
                7,
                &mut out,
            )
        },
        GcStatus::InvalidInput
    );

    let mut l1 = 0.0;
    assert_eq!(unsafe { gc_lambda1(ptr::null(), &mut l1) }, GcStatus::NullPointer);
    assert_eq!(unsafe { gc_lambda1(g, &mut l1) }, GcStatus::Ok);
    assert!(gc_last_error_message().is_null());
    unsafe { gc_graph_free(g) };
}
