use std::ffi::{c_char, CStr, CString};
use std::ptr;

use specht_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    specht_string_free(s);
    owned
}

fn last_error() -> String {
    unsafe {
        CStr::from_ptr(specht_last_error_message())
            .to_str()
            .unwrap()
            .to_owned()
    }
}

#[test]
fn partitions() {
    unsafe {
        let mut yes = false;
        assert_eq!(
            specht_dominates(c("3,1").as_ptr(), c("2,2").as_ptr(), &mut yes),
            SpechtStatus::Ok
        );
        assert!(yes);
        assert_eq!(
            specht_dominates(c("2,2").as_ptr(), c("3,1").as_ptr(), &mut yes),
            SpechtStatus::Ok
        );
        assert!(!yes);
        assert_eq!(last_error(), "");

        let mut s = ptr::null_mut();
        assert_eq!(
            specht_conjugate(c("3,1").as_ptr(), &mut s),
            SpechtStatus::Ok
        );
        assert_eq!(take(s), "2,1,1");
        assert_eq!(specht_mu(4, c("x1*x2").as_ptr(), &mut s), SpechtStatus::Ok);
        assert_eq!(take(s), "2,2");
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut yes = false;
        assert_eq!(
            specht_dominates(c("3,x").as_ptr(), c("2,2").as_ptr(), &mut yes),
            SpechtStatus::ParseError
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            specht_dominates(ptr::null(), c("2,2").as_ptr(), &mut yes),
            SpechtStatus::NullPointer
        );
        assert_eq!(last_error(), "lhs is null");
        assert_eq!(
            specht_dominates(c("3,1").as_ptr(), c("2,2").as_ptr(), ptr::null_mut()),
            SpechtStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            specht_dominates(bad.as_ptr() as *const c_char, c("1").as_ptr(), &mut yes),
            SpechtStatus::InvalidUtf8
        );
        let mut s = ptr::null_mut();
        assert_eq!(
            specht_isotypic_json(4, c("1").as_ptr(), &mut s),
            SpechtStatus::Precondition
        );
        assert!(s.is_null());
    }
}

#[test]
fn membership() {
    unsafe {
        let mut inside = true;
        let x = [1i64, 1, 2, 2];
        assert_eq!(
            specht_point_in_variety(c("2,2").as_ptr(), x.as_ptr(), 4, &mut inside),
            SpechtStatus::Ok
        );
        assert!(!inside);
        assert_eq!(
            specht_point_in_variety(c("3,1").as_ptr(), x.as_ptr(), 4, &mut inside),
            SpechtStatus::Ok
        );
        assert!(!inside);
        assert_eq!(
            specht_point_in_variety(c("1,1,1,1").as_ptr(), x.as_ptr(), 4, &mut inside),
            SpechtStatus::Ok
        );
        assert!(inside);
    }
}

#[test]
fn polynomial_handles() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            specht_polynomial_parse(c("x2*x1 - 1").as_ptr(), c("gf:5").as_ptr(), 4, &mut p),
            SpechtStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(specht_polynomial_to_string(p, &mut s), SpechtStatus::Ok);
        assert_eq!(take(s), "x1*x2 + 4");
        specht_polynomial_free(p);
        specht_polynomial_free(ptr::null_mut());

        assert_eq!(
            specht_polynomial_parse(c("x9").as_ptr(), c("q").as_ptr(), 4, &mut p),
            SpechtStatus::ParseError
        );
        assert_eq!(
            specht_polynomial_parse(c("x1").as_ptr(), c("gf:4").as_ptr(), 4, &mut p),
            SpechtStatus::ParseError
        );
    }
}

#[test]
fn certificates() {
    unsafe {
        let mut cert = ptr::null_mut();
        assert_eq!(
            specht_certificate_dominance(
                c("1,2|3,4").as_ptr(),
                c("3,1").as_ptr(),
                c("q").as_ptr(),
                4,
                &mut cert
            ),
            SpechtStatus::Ok
        );
        assert_eq!(specht_certificate_verify(cert), SpechtStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(
            specht_certificate_to_json(cert, &mut json),
            SpechtStatus::Ok
        );
        let json = take(json);
        specht_certificate_free(cert);

        let mut back = ptr::null_mut();
        assert_eq!(
            specht_certificate_from_json(c(&json).as_ptr(), &mut back),
            SpechtStatus::Ok
        );
        assert_eq!(specht_certificate_verify(back), SpechtStatus::Ok);
        specht_certificate_free(back);

        assert_eq!(
            specht_certificate_dominance(
                c("1,2|3,4").as_ptr(),
                c("1,1,1,1").as_ptr(),
                c("q").as_ptr(),
                4,
                &mut cert
            ),
            SpechtStatus::Precondition
        );
        assert_eq!(
            specht_certificate_from_json(c("{").as_ptr(), &mut back),
            SpechtStatus::ParseError
        );
    }
}

#[test]
fn symmetric_certificates() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            specht_polynomial_parse(c("x1^2").as_ptr(), c("gf:2").as_ptr(), 3, &mut p),
            SpechtStatus::Ok
        );
        let mut cert = ptr::null_mut();
        // 2! vanishes mod 2, so only the general construction applies.
        assert_eq!(
            specht_certificate_symmetric(p, ptr::null(), false, &mut cert),
            SpechtStatus::Precondition
        );
        assert_eq!(
            specht_certificate_symmetric(p, ptr::null(), true, &mut cert),
            SpechtStatus::Ok
        );
        assert_eq!(specht_certificate_verify(cert), SpechtStatus::Ok);
        specht_certificate_free(cert);
        specht_polynomial_free(p);

        assert_eq!(
            specht_polynomial_parse(c("x1*x2 + x3").as_ptr(), c("q").as_ptr(), 4, &mut p),
            SpechtStatus::Ok
        );
        assert_eq!(
            specht_certificate_symmetric(p, c("x1*x2").as_ptr(), false, &mut cert),
            SpechtStatus::Ok
        );
        let mut len = 0;
        assert_eq!(specht_certificate_len(cert, &mut len), SpechtStatus::Ok);
        assert_eq!(len, 4);
        assert_eq!(specht_certificate_verify(cert), SpechtStatus::Ok);
        specht_certificate_free(cert);
        specht_polynomial_free(p);
    }
}

#[test]
fn solve_and_isotypic() {
    unsafe {
        let system = c(r#"{"n":4,"field":"gf:5","generators":["x1*x2 - 1"]}"#);
        let mut s = ptr::null_mut();
        assert_eq!(
            specht_solve_json(system.as_ptr(), true, 10_000_000, &mut s),
            SpechtStatus::Ok
        );
        let report: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(report["mu_perp"], "2,2");
        assert_eq!(report["orbits"].as_array().unwrap().len(), 2);
        assert_eq!(report["verified_against_bruteforce"], true);

        assert_eq!(
            specht_solve_json(system.as_ptr(), true, 10, &mut s),
            SpechtStatus::Precondition
        );
        assert!(last_error().contains("budget"));
        let rational = c(r#"{"n":4,"field":"q","generators":["x1*x2 - 1"]}"#);
        assert_eq!(
            specht_solve_json(rational.as_ptr(), false, 100, &mut s),
            SpechtStatus::Precondition
        );

        assert_eq!(
            specht_isotypic_json(4, c("x1*x2").as_ptr(), &mut s),
            SpechtStatus::Ok
        );
        let report: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(report["killed_total"], 14);
    }
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/specht.h")).unwrap();
    for name in [
        "SPECHT_STATUS_OK = 0",
        "SPECHT_STATUS_VERIFICATION_FAILED = 1",
        "SPECHT_STATUS_PARSE_ERROR = 2",
        "SPECHT_STATUS_PRECONDITION = 3",
        "typedef struct SpechtPolynomial SpechtPolynomial;",
        "typedef struct SpechtCertificate SpechtCertificate;",
        "specht_last_error_message(void)",
        "specht_solve_json(",
        "specht_isotypic_json(",
        "specht_certificate_verify(",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}
