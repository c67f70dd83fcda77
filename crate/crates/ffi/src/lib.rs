//! C ABI over the core toolkit.
//!
//! Specs and QCA cross the boundary as opaque handles. Every fallible call
//! returns a [`PauliIsaStatus`]; on failure the message is available from
//! [`pauli_isa_last_error`] until the next call on the same thread. Strings
//! returned through `char **` out-parameters are owned by the caller and
//! must be released with [`pauli_isa_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pauli_isa::pauli::{self, SubalgebraSpec};
use pauli_isa::qca::{self, CliffordQCA};
use pauli_isa::Error;

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliIsaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidSpec = 4,
    NotInvertible = 5,
    Unsupported = 6,
    Usage = 7,
    Internal = 8,
}

/// Opaque translation-invariant Pauli subalgebra.
pub struct PauliIsaSpec(SubalgebraSpec);

/// Opaque translation-invariant Clifford QCA.
pub struct PauliIsaQca(CliffordQCA);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PauliIsaStatus {
    match e {
        Error::Parse { .. } => PauliIsaStatus::Parse,
        Error::NotPrime(_)
        | Error::NotAntihermitian
        | Error::InvalidSpec(_)
        | Error::Shape(_)
        | Error::IncompatibleRing(_) => PauliIsaStatus::InvalidSpec,
        Error::NotInvertible(_) | Error::NotInvertibleSubalgebra => PauliIsaStatus::NotInvertible,
        Error::UnsupportedReduction => PauliIsaStatus::Unsupported,
        Error::Usage(_) => PauliIsaStatus::Usage,
        _ => PauliIsaStatus::Internal,
    }
}

enum Failure {
    Status(PauliIsaStatus, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PauliIsaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PauliIsaStatus::Ok,
        Ok(Err(Failure::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            PauliIsaStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(PauliIsaStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure::Status(PauliIsaStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_str(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure::Status(PauliIsaStatus::Internal, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn spec_ref<'a>(spec: *const PauliIsaSpec) -> Result<&'a SubalgebraSpec, Failure> {
    spec.as_ref().map(|s| &s.0).ok_or_else(|| null("spec"))
}

unsafe fn qca_ref<'a>(u: *const PauliIsaQca) -> Result<&'a CliffordQCA, Failure> {
    u.as_ref().map(|s| &s.0).ok_or_else(|| null("qca"))
}

unsafe fn write_spec(out: *mut *mut PauliIsaSpec, s: SubalgebraSpec) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(PauliIsaSpec(s)));
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pauli_isa_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn pauli_isa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_spec_from_json(json: *const c_char, out: *mut *mut PauliIsaSpec) -> PauliIsaStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        write_spec(out, SubalgebraSpec::from_json(text)?)
    })
}

/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_spec_builtin(name: *const c_char, out: *mut *mut PauliIsaSpec) -> PauliIsaStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        write_spec(out, pauli::builtin_spec(name)?)
    })
}

/// # Safety
/// `spec` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_spec_free(spec: *mut PauliIsaSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_spec_to_json(spec: *const PauliIsaSpec, out: *mut *mut c_char) -> PauliIsaStatus {
    guard(|| write_str(out, spec_ref(spec)?.to_json()))
}

/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_spec_spread(spec: *const PauliIsaSpec, out: *mut u32) -> PauliIsaStatus {
    guard(|| {
        let s = spec_ref(spec)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = s.spread();
        Ok(())
    })
}

/// Decides invertibility. `certificate` may be null; otherwise it receives
/// the certificate as JSON.
///
/// # Safety
/// `spec` must be a live handle and `invertible` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_check_invertible(
    spec: *const PauliIsaSpec,
    invertible: *mut bool,
    certificate: *mut *mut c_char,
) -> PauliIsaStatus {
    guard(|| {
        let c = pauli::check_invertible(spec_ref(spec)?)?;
        *invertible.as_mut().ok_or_else(|| null("invertible"))? = c.invertible;
        if !certificate.is_null() {
            write_str(certificate, to_json(&c))?;
        }
        Ok(())
    })
}

/// Decomposition projector as a JSON matrix of polynomial strings.
///
/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_projector(spec: *const PauliIsaSpec, out: *mut *mut c_char) -> PauliIsaStatus {
    guard(|| {
        let pi = pauli::build_projector(spec_ref(spec)?)?;
        write_str(out, to_json(&pi.matrix.to_strings()))
    })
}

/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_commutant(spec: *const PauliIsaSpec, out: *mut *mut PauliIsaSpec) -> PauliIsaStatus {
    guard(|| write_spec(out, pauli::commutant_generators(spec_ref(spec)?)?))
}

/// Whether two specs generate the same module.
///
/// # Safety
/// Both handles must be live and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_same_span(
    a: *const PauliIsaSpec,
    b: *const PauliIsaSpec,
    out: *mut bool,
) -> PauliIsaStatus {
    guard(|| {
        let same = pauli::same_span(spec_ref(a)?, spec_ref(b)?)?;
        *out.as_mut().ok_or_else(|| null("out"))? = same;
        Ok(())
    })
}

/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_lift(spec: *const PauliIsaSpec, out: *mut *mut PauliIsaQca) -> PauliIsaStatus {
    guard(|| {
        let u = qca::lift_to_qca(spec_ref(spec)?)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(PauliIsaQca(u)));
        Ok(())
    })
}

/// # Safety
/// `u` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_qca_free(u: *mut PauliIsaQca) {
    if !u.is_null() {
        drop(Box::from_raw(u));
    }
}

/// # Safety
/// `u` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_qca_to_json(u: *const PauliIsaQca, out: *mut *mut c_char) -> PauliIsaStatus {
    guard(|| write_str(out, qca_ref(u)?.to_json()))
}

/// # Safety
/// `u` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pauli_isa_qca_is_symplectic(u: *const PauliIsaQca, out: *mut bool) -> PauliIsaStatus {
    guard(|| {
        let u = qca_ref(u)?;
        *out.as_mut().ok_or_else(|| null("out"))? = qca::is_symplectic(u.q(), u.matrix());
        Ok(())
    })
}
