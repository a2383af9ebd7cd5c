//! C ABI for `amalgam-order`.
//!
//! Every handle is opaque and owned by the caller until passed to its
//! `*_free` function. Functions return an [`AoStatus`]; on failure the message
//! is available from [`ao_last_error`] on the same thread. Outputs are only
//! written on success.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use amalgam_order::{load_tower, parse_word, Element, Error, Group, OrderedGroup, Tower};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// A tower file or word did not parse.
    ParseError = 3,
    /// An argument is outside the operation's domain, e.g. elements of
    /// different groups, or an amalgam-only query on a cyclic group.
    DomainError = 4,
    /// The group has no minimal positive element.
    NotDiscrete = 5,
    /// The construction's hypotheses do not hold.
    ConstructionError = 6,
    /// An internal invariant broke; please report it.
    EngineError = 7,
    NotFound = 8,
    Panic = 9,
}

/// A parsed tower of group definitions.
pub struct AoTower(Tower);

/// A group from a tower.
pub struct AoGroup(Group);

/// An element, tied to the group it came from.
pub struct AoElement {
    group: Group,
    value: Element,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(AoStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Domain(_) | Error::Precondition(_) | Error::MissingCharSet(_) => AoStatus::DomainError,
            Error::NotDiscrete(_) => AoStatus::NotDiscrete,
            Error::Assumption { .. } | Error::Construction(_) | Error::BallOverflow { .. } => {
                AoStatus::ConstructionError
            }
            Error::Engine(_) => AoStatus::EngineError,
        };
        Fail(status, e.to_string())
    }
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            AoStatus::Ok
        }
        Ok(Err(Fail(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {message}"));
            AoStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(AoStatus::NullPointer, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(AoStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(AoStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(AoStatus::NullPointer, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

fn same_group(a: &AoElement, b: &AoElement) -> Result<(), Fail> {
    if a.group.same_as(&b.group) {
        Ok(())
    } else {
        Err(Fail(AoStatus::DomainError, "elements belong to different groups".into()))
    }
}

fn element(group: &Group, value: Element) -> AoElement {
    AoElement {
        group: group.clone(),
        value,
    }
}

fn ordering(o: Ordering) -> c_int {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Message of the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn ao_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses and validates a tower definition.
///
/// # Safety
/// `source` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ao_tower_parse(source: *const c_char, out: *mut *mut AoTower) -> AoStatus {
    guard(|| {
        let src = text(source, "source")?;
        let tower = load_tower(src).map_err(|d| Fail(AoStatus::ParseError, d.to_string()))?;
        put(out, AoTower(tower))
    })
}

/// # Safety
/// `tower` must come from [`ao_tower_parse`] and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ao_tower_free(tower: *mut AoTower) {
    if !tower.is_null() {
        drop(Box::from_raw(tower));
    }
}

/// Looks up a group by name, or the last declared group when `name` is null.
/// The group stays valid after the tower is freed.
///
/// # Safety
/// `tower` must be a live handle; `name` null or nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_tower_group(
    tower: *const AoTower,
    name: *const c_char,
    out: *mut *mut AoGroup,
) -> AoStatus {
    guard(|| {
        let t = &deref(tower, "tower")?.0;
        let g = if name.is_null() {
            t.last_group()
        } else {
            let id = text(name, "name")?;
            t.group(id)
        };
        let g = g.ok_or_else(|| Fail(AoStatus::NotFound, "no such group in the tower".into()))?;
        put(out, AoGroup(g.clone()))
    })
}

/// # Safety
/// `group` must come from [`ao_tower_group`] and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ao_group_free(group: *mut AoGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Parses a word such as `y^-2*x` into an element of `group`.
///
/// # Safety
/// `group` must be a live handle; `word` nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_element_parse(
    group: *const AoGroup,
    word: *const c_char,
    out: *mut *mut AoElement,
) -> AoStatus {
    guard(|| {
        let g = &deref(group, "group")?.0;
        let w = text(word, "word")?;
        let value = parse_word(w, g).map_err(|e| Fail(AoStatus::ParseError, format!("word `{w}`: {e}")))?;
        put(out, element(g, value))
    })
}

/// # Safety
/// `x` must come from this library and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ao_element_free(x: *mut AoElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Renders the normal form of `x`. Free the result with [`ao_string_free`].
///
/// # Safety
/// `x` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_element_to_string(x: *const AoElement, out: *mut *mut c_char) -> AoStatus {
    guard(|| {
        let x = deref(x, "element")?;
        if out.is_null() {
            return Err(Fail(AoStatus::NullPointer, "output pointer is null".into()));
        }
        let s = CString::new(x.group.render(&x.value)).expect("rendered words have no nul");
        *out = s.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from [`ao_element_to_string`]; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ao_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes -1, 0 or 1 as `a` is below, equal to or above `b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_compare(a: *const AoElement, b: *const AoElement, out: *mut c_int) -> AoStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        same_group(a, b)?;
        let o = a.group.compare(&a.value, &b.value)?;
        *out.as_mut().ok_or_else(|| Fail(AoStatus::NullPointer, "output pointer is null".into()))? = ordering(o);
        Ok(())
    })
}

/// Writes -1, 0 or 1 for the sign of `x`.
///
/// # Safety
/// `x` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_sign(x: *const AoElement, out: *mut c_int) -> AoStatus {
    guard(|| {
        let x = deref(x, "element")?;
        let o = x.group.sign(&x.value)?;
        *out.as_mut().ok_or_else(|| Fail(AoStatus::NullPointer, "output pointer is null".into()))? = ordering(o);
        Ok(())
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_mul(a: *const AoElement, b: *const AoElement, out: *mut *mut AoElement) -> AoStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        same_group(a, b)?;
        put(out, element(&a.group, a.group.mul(&a.value, &b.value)))
    })
}

/// # Safety
/// `x` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_inv(x: *const AoElement, out: *mut *mut AoElement) -> AoStatus {
    guard(|| {
        let x = deref(x, "element")?;
        put(out, element(&x.group, x.group.inv(&x.value)))
    })
}

/// The least positive element of `group`.
///
/// # Safety
/// `group` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_min_positive(group: *const AoGroup, out: *mut *mut AoElement) -> AoStatus {
    guard(|| {
        let g = &deref(group, "group")?.0;
        let m = g.require_min_positive()?;
        put(out, element(g, m))
    })
}

/// Filtration level of `x`, doubled so that half-levels are integers.
/// Only defined in an amalgam.
///
/// # Safety
/// `x` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_level_twice(x: *const AoElement, out: *mut i64) -> AoStatus {
    guard(|| {
        let x = deref(x, "element")?;
        let level = x.group.require_amalgam()?.level(&x.value).twice();
        *out.as_mut().ok_or_else(|| Fail(AoStatus::NullPointer, "output pointer is null".into()))? = level;
        Ok(())
    })
}

/// The largest element of the amalgamated subgroup not above `x`.
///
/// # Safety
/// `x` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ao_floor(x: *const AoElement, out: *mut *mut AoElement) -> AoStatus {
    guard(|| {
        let x = deref(x, "element")?;
        let f = x.group.require_amalgam()?.a_floor(&x.value)?;
        put(out, element(&x.group, f))
    })
}
