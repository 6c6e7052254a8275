//! C ABI over `latgroup`.
//!
//! Every fallible function returns an [`LgStatus`] and writes its result through an
//! out-pointer. Handles are opaque and owned by the caller once returned; release
//! them with the matching `*_free` function. Strings returned by the library are
//! NUL-terminated and released with [`lg_string_free`]. After a non-`Ok` status,
//! [`lg_last_error_message`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use latgroup::json;
use latgroup::{
    decompose_cycle, evaluate_path, fox_image, heis_eval, met_from_word, Cocycle, Error, HeisenbergElem,
    MetabelianElem, Point, SatelliteElem, Subgroup, Word,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    IndexOutOfRange = 4,
    RankMismatch = 5,
    NotACycle = 6,
    InvalidArgument = 7,
    Overflow = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LgSubgroup {
    N = 0,
    M = 1,
    Commutant = 2,
}

/// A freely reduced word in the free group of some rank.
pub struct LgWord(Word);

/// An element of the free metabelian group: endpoint plus edge flow.
pub struct LgMetElem(MetabelianElem);

/// An element of the free 2-step nilpotent group.
pub struct LgHeisElem(HeisenbergElem);

/// An element of a satellite group at a fixed level.
pub struct LgSatElem(SatelliteElem);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(LgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Syntax { .. }
            | Error::ZeroExponent(_)
            | Error::ExponentTooLarge { .. }
            | Error::UnknownGenerator(_)
            | Error::BadVector(_)
            | Error::Json(_) => LgStatus::Syntax,
            Error::IndexOutOfRange { .. } => LgStatus::IndexOutOfRange,
            Error::RankMismatch { .. } | Error::LevelMismatch { .. } => LgStatus::RankMismatch,
            Error::NotACycle | Error::NonCycleValue { .. } => LgStatus::NotACycle,
            _ => LgStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn null(what: &str) -> Failure {
    Failure(LgStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status and the thread's last error.
fn guard(f: impl FnOnce() -> Outcome) -> LgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LgStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_last_error(format!("internal panic: {msg}"));
            LgStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(LgStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_box<T>(out: *mut *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|e| Failure(LgStatus::InvalidArgument, e.to_string()))?;
    out.write(c.into_raw());
    Ok(())
}

unsafe fn free_box<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message for the most recent failure on this thread, or null if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// words

/// Parses `text` (tokens `x<i>` or `x<i>^<n>`) as a reduced word of the given rank.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_word_parse(text: *const c_char, rank: usize, out: *mut *mut LgWord) -> LgStatus {
    guard(|| {
        let w = Word::parse(str_arg(text, "text")?, rank)?;
        put_box(out, LgWord(w))
    })
}

/// # Safety
/// `w` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lg_word_free(w: *mut LgWord) {
    free_box(w)
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_word_len(w: *const LgWord, out: *mut usize) -> LgStatus {
    guard(|| put(out, handle(w, "word")?.0.len()))
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_word_to_string(w: *const LgWord, out: *mut *mut c_char) -> LgStatus {
    guard(|| put_string(out, handle(w, "word")?.0.to_string()))
}

/// Reduced concatenation `a b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_word_concat(a: *const LgWord, b: *const LgWord, out: *mut *mut LgWord) -> LgStatus {
    guard(|| {
        let w = handle(a, "a")?.0.concat(&handle(b, "b")?.0)?;
        put_box(out, LgWord(w))
    })
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_word_invert(w: *const LgWord, out: *mut *mut LgWord) -> LgStatus {
    guard(|| put_box(out, LgWord(handle(w, "word")?.0.invert())))
}

/// Endpoint and edge flow of the lattice path spelled by `w`, as JSON.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_word_eval_json(w: *const LgWord, out: *mut *mut c_char) -> LgStatus {
    guard(|| {
        put_string(
            out,
            json::path_evaluation(&evaluate_path(&handle(w, "word")?.0)).to_string(),
        )
    })
}

/// Plaquette decomposition of the flow of a closed word, as JSON.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_word_decompose_json(w: *const LgWord, out: *mut *mut c_char) -> LgStatus {
    guard(|| {
        let s = decompose_cycle(&evaluate_path(&handle(w, "word")?.0).flow)?;
        put_string(out, json::plaquette_sum(&s).to_string())
    })
}

/// Abelianized Fox derivatives of `w`, as JSON.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_word_fox_json(w: *const LgWord, out: *mut *mut c_char) -> LgStatus {
    guard(|| put_string(out, json::fox(&fox_image(&handle(w, "word")?.0)).to_string()))
}

// metabelian

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_met_from_word(w: *const LgWord, out: *mut *mut LgMetElem) -> LgStatus {
    guard(|| put_box(out, LgMetElem(met_from_word(&handle(w, "word")?.0))))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_met_mul(a: *const LgMetElem, b: *const LgMetElem, out: *mut *mut LgMetElem) -> LgStatus {
    guard(|| {
        let p = handle(a, "a")?.0.mul(&handle(b, "b")?.0)?;
        put_box(out, LgMetElem(p))
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_met_inv(a: *const LgMetElem, out: *mut *mut LgMetElem) -> LgStatus {
    guard(|| put_box(out, LgMetElem(handle(a, "a")?.0.inv())))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_met_eq(a: *const LgMetElem, b: *const LgMetElem, out: *mut bool) -> LgStatus {
    guard(|| {
        let (a, b) = (&handle(a, "a")?.0, &handle(b, "b")?.0);
        if a.rank() != b.rank() {
            return Err(Error::RankMismatch {
                left: a.rank(),
                right: b.rank(),
            }
            .into());
        }
        put(out, a == b)
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_met_is_identity(a: *const LgMetElem, out: *mut bool) -> LgStatus {
    guard(|| put(out, handle(a, "a")?.0.is_identity()))
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_met_to_json(a: *const LgMetElem, out: *mut *mut c_char) -> LgStatus {
    guard(|| put_string(out, json::metabelian(&handle(a, "a")?.0).to_string()))
}

/// # Safety
/// `a` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lg_met_free(a: *mut LgMetElem) {
    free_box(a)
}

// heisenberg

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_heis_from_word(w: *const LgWord, out: *mut *mut LgHeisElem) -> LgStatus {
    guard(|| put_box(out, LgHeisElem(heis_eval(&handle(w, "word")?.0))))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_heis_mul(
    a: *const LgHeisElem,
    b: *const LgHeisElem,
    out: *mut *mut LgHeisElem,
) -> LgStatus {
    guard(|| {
        let p = handle(a, "a")?.0.mul(&handle(b, "b")?.0)?;
        put_box(out, LgHeisElem(p))
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_heis_inv(a: *const LgHeisElem, out: *mut *mut LgHeisElem) -> LgStatus {
    guard(|| put_box(out, LgHeisElem(handle(a, "a")?.0.inv())))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_heis_eq(a: *const LgHeisElem, b: *const LgHeisElem, out: *mut bool) -> LgStatus {
    guard(|| {
        let (a, b) = (&handle(a, "a")?.0, &handle(b, "b")?.0);
        if a.rank() != b.rank() {
            return Err(Error::RankMismatch {
                left: a.rank(),
                right: b.rank(),
            }
            .into());
        }
        put(out, a == b)
    })
}

/// Signed area `A_ij` for `1 <= i < j <= rank`, as a decimal string.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_heis_area(a: *const LgHeisElem, i: usize, j: usize, out: *mut *mut c_char) -> LgStatus {
    guard(|| {
        let h = &handle(a, "a")?.0;
        if !(1 <= i && i < j && j <= h.rank()) {
            return Err(Error::BadAxes {
                axes: vec![i, j],
                rank: h.rank(),
            }
            .into());
        }
        put_string(out, h.area(i, j).to_string())
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_heis_to_json(a: *const LgHeisElem, out: *mut *mut c_char) -> LgStatus {
    guard(|| put_string(out, json::heisenberg(&handle(a, "a")?.0).to_string()))
}

/// # Safety
/// `a` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lg_heis_free(a: *mut LgHeisElem) {
    free_box(a)
}

// satellite

/// Parses a word over `x`, `y`, `z` (with optional exponents) at level `k`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_sat_parse(text: *const c_char, k: i64, out: *mut *mut LgSatElem) -> LgStatus {
    guard(|| {
        let e = SatelliteElem::from_word(str_arg(text, "text")?, k)?;
        put_box(out, LgSatElem(e))
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_sat_mul(a: *const LgSatElem, b: *const LgSatElem, out: *mut *mut LgSatElem) -> LgStatus {
    guard(|| {
        let p = handle(a, "a")?.0.mul(&handle(b, "b")?.0)?;
        put_box(out, LgSatElem(p))
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_sat_inv(a: *const LgSatElem, out: *mut *mut LgSatElem) -> LgStatus {
    guard(|| put_box(out, LgSatElem(handle(a, "a")?.0.inv())))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_sat_eq(a: *const LgSatElem, b: *const LgSatElem, out: *mut bool) -> LgStatus {
    guard(|| {
        let (a, b) = (&handle(a, "a")?.0, &handle(b, "b")?.0);
        if a.k != b.k {
            return Err(Error::LevelMismatch {
                left: a.k.to_string(),
                right: b.k.to_string(),
            }
            .into());
        }
        put(out, a == b)
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_sat_is_member(a: *const LgSatElem, sub: LgSubgroup, out: *mut bool) -> LgStatus {
    guard(|| {
        let sub = match sub {
            LgSubgroup::N => Subgroup::N,
            LgSubgroup::M => Subgroup::M,
            LgSubgroup::Commutant => Subgroup::Commutant,
        };
        put(out, handle(a, "a")?.0.is_member(sub))
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_sat_to_json(a: *const LgSatElem, out: *mut *mut c_char) -> LgStatus {
    guard(|| put_string(out, json::satellite(&handle(a, "a")?.0).to_string()))
}

/// # Safety
/// `a` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lg_sat_free(a: *mut LgSatElem) {
    free_box(a)
}

// cocycles

/// Canonical cocycle value for two comma-separated vectors such as `"1,-2"`, as JSON.
///
/// # Safety
/// `g1`, `g2` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_cocycle_json(g1: *const c_char, g2: *const c_char, out: *mut *mut c_char) -> LgStatus {
    guard(|| {
        let g1 = Point::parse(str_arg(g1, "g1")?)?;
        let g2 = Point::parse(str_arg(g2, "g2")?)?;
        put_string(
            out,
            json::edge_flow(&latgroup::canonical_cocycle(&g1, &g2)?).to_string(),
        )
    })
}

/// Invariant of `k` times the canonical rank-2 cocycle.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lg_beta_scaled(k: i64, out: *mut i64) -> LgStatus {
    guard(|| {
        let b = latgroup::beta(&Cocycle::scaled(2, k))?;
        let b = i64::try_from(&b).map_err(|_| Failure(LgStatus::Overflow, format!("{b} does not fit in 64 bits")))?;
        put(out, b)
    })
}
