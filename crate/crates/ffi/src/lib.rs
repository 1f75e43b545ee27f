//! C interface to `specht-core`.
//!
//! Every function returns a [`SpechtStatus`]; results come back through out
//! parameters. Polynomials and certificates are opaque handles released with
//! their `_free` function, and strings returned by the library are released
//! with [`specht_string_free`]. After a non-OK status,
//! [`specht_last_error_message`] describes the failure on the calling thread.
//!
//! Fields are named as on the command line: `"q"` for the rationals,
//! `"gf:P"` for the prime field with `P` elements.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use specht_core::combinatorics::{mu_of_monomial, Partition};
use specht_core::isotypic::pruning_report;
use specht_core::polyring::{parse_monomial, parse_polynomial, FieldSpec, Polynomial};
use specht_core::reduction::{solve, SymmetricSystem};
use specht_core::specht::{
    dominance_certificate, point_in_variety, symmetric_certificate_char0,
    symmetric_certificate_general, Certificate, ColumnBlocks,
};
use specht_core::Error;

/// Outcome of a call. The first four values match the command-line exit
/// codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpechtStatus {
    Ok = 0,
    VerificationFailed = 1,
    ParseError = 2,
    Precondition = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Internal = 6,
}

/// Opaque polynomial handle.
pub struct SpechtPolynomial(Polynomial);

/// Opaque certificate handle.
pub struct SpechtCertificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let clean = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = clean);
}

struct Failure(SpechtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.exit_code() {
            1 => SpechtStatus::VerificationFailed,
            2 => SpechtStatus::ParseError,
            _ => SpechtStatus::Precondition,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `body`, turning errors and panics into a status plus a message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SpechtStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            SpechtStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal error");
            SpechtStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(
            SpechtStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SpechtStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure(SpechtStatus::NullPointer, format!("{what} is null")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(SpechtStatus::NullPointer, format!("{what} is null")))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library output has no NUL")
        .into_raw()
}

fn field(name: &str) -> Result<FieldSpec, Failure> {
    Ok(name.parse::<FieldSpec>()?)
}

/// Message describing the last failure on this thread; empty after a
/// success. Owned by the library and valid until the next call.
#[no_mangle]
pub extern "C" fn specht_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn specht_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether `lhs` dominates `rhs` (both like `"3,1"`).
#[no_mangle]
pub unsafe extern "C" fn specht_dominates(
    lhs: *const c_char,
    rhs: *const c_char,
    result: *mut bool,
) -> SpechtStatus {
    guard(|| {
        let a: Partition = text(lhs, "lhs")?.parse()?;
        let b: Partition = text(rhs, "rhs")?.parse()?;
        *out(result, "result")? = a.dominates(&b)?;
        Ok(())
    })
}

/// The conjugate partition, as a newly allocated string.
#[no_mangle]
pub unsafe extern "C" fn specht_conjugate(
    partition: *const c_char,
    result: *mut *mut c_char,
) -> SpechtStatus {
    guard(|| {
        let lambda: Partition = text(partition, "partition")?.parse()?;
        *out(result, "result")? = owned_string(lambda.conjugate().to_string());
        Ok(())
    })
}

/// `μ(m)` for a monomial in `n` variables, as a newly allocated string.
#[no_mangle]
pub unsafe extern "C" fn specht_mu(
    n: usize,
    monomial: *const c_char,
    result: *mut *mut c_char,
) -> SpechtStatus {
    guard(|| {
        let m = parse_monomial(text(monomial, "monomial")?, n)?;
        *out(result, "result")? = owned_string(mu_of_monomial(&m, n)?.to_string());
        Ok(())
    })
}

/// Whether the integer point `point[0..len]` lies in the Specht variety of
/// `shape`, decided from its orbit type.
#[no_mangle]
pub unsafe extern "C" fn specht_point_in_variety(
    shape: *const c_char,
    point: *const i64,
    len: usize,
    result: *mut bool,
) -> SpechtStatus {
    guard(|| {
        let shape: Partition = text(shape, "shape")?.parse()?;
        let coords: &[i64] = if len == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(handle(point, "point")?, len)
        };
        *out(result, "result")? = point_in_variety(coords, &shape)?;
        Ok(())
    })
}

/// Parses a polynomial like `"x1^2*x2 - 3/2"` over `field` in `nvars`
/// variables.
#[no_mangle]
pub unsafe extern "C" fn specht_polynomial_parse(
    source: *const c_char,
    field_name: *const c_char,
    nvars: usize,
    result: *mut *mut SpechtPolynomial,
) -> SpechtStatus {
    guard(|| {
        let f = field(text(field_name, "field")?)?;
        let p = parse_polynomial(text(source, "source")?, f, nvars)?;
        *out(result, "result")? = Box::into_raw(Box::new(SpechtPolynomial(p)));
        Ok(())
    })
}

/// Canonical text form of a polynomial, newly allocated.
#[no_mangle]
pub unsafe extern "C" fn specht_polynomial_to_string(
    polynomial: *const SpechtPolynomial,
    result: *mut *mut c_char,
) -> SpechtStatus {
    guard(|| {
        let p = handle(polynomial, "polynomial")?;
        *out(result, "result")? = owned_string(p.0.to_string());
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn specht_polynomial_free(polynomial: *mut SpechtPolynomial) {
    if !polynomial.is_null() {
        drop(Box::from_raw(polynomial));
    }
}

fn certificate_out(cert: Certificate, result: *mut *mut SpechtCertificate) -> Result<(), Failure> {
    let slot = unsafe { out(result, "result")? };
    *slot = Box::into_raw(Box::new(SpechtCertificate(cert)));
    Ok(())
}

/// Certificate that the Specht polynomial with the given columns (like
/// `"1,3|2|4"`) lies in the Specht ideal of the dominating shape `upper`.
#[no_mangle]
pub unsafe extern "C" fn specht_certificate_dominance(
    columns: *const c_char,
    upper: *const c_char,
    field_name: *const c_char,
    n: usize,
    result: *mut *mut SpechtCertificate,
) -> SpechtStatus {
    guard(|| {
        let cols: ColumnBlocks = text(columns, "columns")?.parse()?;
        let upper: Partition = text(upper, "upper")?.parse()?;
        let f = field(text(field_name, "field")?)?;
        certificate_out(dominance_certificate(&cols, &upper, f, n)?, result)
    })
}

/// Certificate that the symmetric ideal generated by `polynomial` contains a
/// Specht polynomial of shape `μ(m)^⊥`. `monomial` may be null to use the
/// leading monomial. `general` selects the construction valid in every
/// characteristic instead of the factorial-normalized one.
#[no_mangle]
pub unsafe extern "C" fn specht_certificate_symmetric(
    polynomial: *const SpechtPolynomial,
    monomial: *const c_char,
    general: bool,
    result: *mut *mut SpechtCertificate,
) -> SpechtStatus {
    guard(|| {
        let p = &handle(polynomial, "polynomial")?.0;
        let n = p.nvars();
        let m = if monomial.is_null() {
            p.leading_term()
                .map(|(m, _)| m.clone())
                .ok_or_else(|| Failure(SpechtStatus::Precondition, "zero polynomial".into()))?
        } else {
            parse_monomial(text(monomial, "monomial")?, n)?
        };
        let cert = if general {
            symmetric_certificate_general(p, &m, n)?
        } else {
            symmetric_certificate_char0(p, &m, n)?
        };
        certificate_out(cert, result)
    })
}

#[no_mangle]
pub unsafe extern "C" fn specht_certificate_from_json(
    json: *const c_char,
    result: *mut *mut SpechtCertificate,
) -> SpechtStatus {
    guard(|| certificate_out(Certificate::from_json(text(json, "json")?)?, result))
}

#[no_mangle]
pub unsafe extern "C" fn specht_certificate_to_json(
    certificate: *const SpechtCertificate,
    result: *mut *mut c_char,
) -> SpechtStatus {
    guard(|| {
        let c = handle(certificate, "certificate")?;
        *out(result, "result")? = owned_string(c.0.to_json());
        Ok(())
    })
}

/// `SPECHT_STATUS_OK` if the certificate expands to its target,
/// `SPECHT_STATUS_VERIFICATION_FAILED` if it does not.
#[no_mangle]
pub unsafe extern "C" fn specht_certificate_verify(
    certificate: *const SpechtCertificate,
) -> SpechtStatus {
    guard(|| {
        let c = handle(certificate, "certificate")?;
        if c.0.verify(None)? {
            Ok(())
        } else {
            Err(Failure(
                SpechtStatus::VerificationFailed,
                "expansion differs from the target".into(),
            ))
        }
    })
}

/// Number of entries in the certificate.
#[no_mangle]
pub unsafe extern "C" fn specht_certificate_len(
    certificate: *const SpechtCertificate,
    result: *mut usize,
) -> SpechtStatus {
    guard(|| {
        *out(result, "result")? = handle(certificate, "certificate")?.0.entries().len();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn specht_certificate_free(certificate: *mut SpechtCertificate) {
    if !certificate.is_null() {
        drop(Box::from_raw(certificate));
    }
}

/// Solves a system given as JSON (`{"n", "field", "generators"}`) and
/// returns the solution report as JSON. With `verify`, a disagreement with
/// brute force yields `SPECHT_STATUS_VERIFICATION_FAILED` (the report is
/// still returned).
#[no_mangle]
pub unsafe extern "C" fn specht_solve_json(
    system_json: *const c_char,
    verify: bool,
    budget: u64,
    result: *mut *mut c_char,
) -> SpechtStatus {
    guard(|| {
        let slot = out(result, "result")?;
        let system = SymmetricSystem::from_json(text(system_json, "system_json")?)?;
        let report = solve(&system, verify, budget as u128)?;
        *slot = owned_string(report.to_json());
        if report.verified_against_bruteforce == Some(false) {
            return Err(Failure(
                SpechtStatus::VerificationFailed,
                "brute force disagrees".into(),
            ));
        }
        Ok(())
    })
}

/// Isotypic pruning report for a monomial in `n` variables, as JSON.
#[no_mangle]
pub unsafe extern "C" fn specht_isotypic_json(
    n: usize,
    monomial: *const c_char,
    result: *mut *mut c_char,
) -> SpechtStatus {
    guard(|| {
        let m = parse_monomial(text(monomial, "monomial")?, n)?;
        *out(result, "result")? = owned_string(pruning_report(n, &m)?.to_json());
        Ok(())
    })
}
