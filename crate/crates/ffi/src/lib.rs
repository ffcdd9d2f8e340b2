//! C ABI over `grasscoh`.
//!
//! Every function returns a [`GcStatus`]; results go through out-pointers.
//! Objects are opaque handles owned by the caller and released with the
//! matching `*_free` function. After a non-`OK` status,
//! [`gc_last_error_message`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use grasscoh::admissible::hat;
use grasscoh::bounds::{n_s_count, BoundInput};
use grasscoh::extremal::maximize;
use grasscoh::grassmann::cohomology_table;
use grasscoh::{Error, Partition};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotAPartition = 3,
    /// The closed formula is not asserted at these parameters.
    OutsideValidity = 4,
    OutOfRange = 5,
    BufferTooSmall = 6,
    Internal = 99,
}

/// A partition.
pub struct GcPartition(Partition);

/// A cohomology table of `Λ^p Ω ⊗ O(l)` on a Grassmannian, flattened to a
/// list of components ordered by `(p, q)`.
pub struct GcCohomologyTable {
    rows: Vec<(usize, usize, Vec<i64>, Partition)>,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(err: &Error) -> GcStatus {
    match err {
        Error::NotAPartition(_) => GcStatus::NotAPartition,
        Error::OutsideValidity { .. } => GcStatus::OutsideValidity,
        _ => GcStatus::InvalidArgument,
    }
}

fn fail(status: GcStatus, msg: impl Into<String>) -> GcStatus {
    set_error(msg);
    status
}

/// Runs `body`, mapping library errors and panics to status codes.
fn guard(body: impl FnOnce() -> Result<(), GcStatus>) -> GcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(GcStatus::Internal, "internal panic"),
    }
}

fn lib<T>(res: grasscoh::Result<T>) -> Result<T, GcStatus> {
    res.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), GcStatus> {
    if p.is_null() {
        Err(fail(GcStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

/// # Safety
/// `parts` must point to `len` readable values, or be null when `len` is 0.
unsafe fn slice<'a>(parts: *const usize, len: usize) -> Result<&'a [usize], GcStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    non_null(parts, "parts")?;
    Ok(std::slice::from_raw_parts(parts, len))
}

/// Copies `src` into `buf` when it fits; always reports the full length.
///
/// # Safety
/// `buf` must have room for `cap` values (or be null with `cap == 0`); `out_len` must be valid.
unsafe fn copy_out<T: Copy>(src: &[T], buf: *mut T, cap: usize, out_len: *mut usize) -> Result<(), GcStatus> {
    non_null(out_len, "out_len")?;
    *out_len = src.len();
    if src.len() > cap {
        return Err(fail(
            GcStatus::BufferTooSmall,
            format!("need room for {} values, have {cap}", src.len()),
        ));
    }
    if !src.is_empty() {
        non_null(buf, "buf")?;
        ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    }
    Ok(())
}

/// Copies the last error message of this thread into `buf` as a NUL-terminated
/// string, truncating to `cap − 1` bytes. Returns the untruncated length.
///
/// # Safety
/// `buf` must have room for `cap` bytes, or be null with `cap == 0`.
#[no_mangle]
pub unsafe extern "C" fn gc_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && cap > 0 {
            let n = msg.len().min(cap - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Builds a partition from `len` weakly decreasing parts; trailing zeros are dropped.
///
/// # Safety
/// `parts` must point to `len` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_partition_new(parts: *const usize, len: usize, out: *mut *mut GcPartition) -> GcStatus {
    guard(|| {
        non_null(out, "out")?;
        let p = lib(Partition::new(slice(parts, len)?.to_vec()))?;
        *out = Box::into_raw(Box::new(GcPartition(p)));
        Ok(())
    })
}

/// Parses `"4,2,1"`; `""` and `"0"` give the empty partition.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_partition_parse(text: *const c_char, out: *mut *mut GcPartition) -> GcStatus {
    guard(|| {
        non_null(text, "text")?;
        non_null(out, "out")?;
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(GcStatus::InvalidArgument, "text is not UTF-8"))?;
        let p = lib(s.parse::<Partition>())?;
        *out = Box::into_raw(Box::new(GcPartition(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gc_partition_free(p: *mut GcPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of nonzero parts.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_partition_len(p: *const GcPartition, out: *mut usize) -> GcStatus {
    guard(|| {
        non_null(p, "partition")?;
        non_null(out, "out")?;
        *out = (*p).0.len();
        Ok(())
    })
}

/// Copies the parts into `buf`. `*out_len` receives the part count even when
/// the buffer is too small.
///
/// # Safety
/// `p` must be a live handle; `buf` must have room for `cap` values; `out_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gc_partition_parts(
    p: *const GcPartition,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> GcStatus {
    guard(|| {
        non_null(p, "partition")?;
        copy_out((*p).0.parts(), buf, cap, out_len)
    })
}

/// Hook number of cell `(i, j)`, zero-based.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_partition_hook(p: *const GcPartition, i: usize, j: usize, out: *mut usize) -> GcStatus {
    guard(|| {
        non_null(p, "partition")?;
        non_null(out, "out")?;
        *out = (*p)
            .0
            .hook(i, j)
            .ok_or_else(|| fail(GcStatus::OutOfRange, format!("({i}, {j}) is not a cell")))?;
        Ok(())
    })
}

/// The `l`-admissible partition whose row counts of small hooks are `nu`,
/// a weakly decreasing sequence of at most `r` entries below `l`.
///
/// # Safety
/// `nu` must point to `len` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_hat(
    nu: *const usize,
    len: usize,
    l: usize,
    r: usize,
    out: *mut *mut GcPartition,
) -> GcStatus {
    guard(|| {
        non_null(out, "out")?;
        let nu = slice(nu, len)?;
        if nu.len() > r {
            return Err(fail(GcStatus::InvalidArgument, format!("ν has {} entries, r = {r}", nu.len())));
        }
        let mut padded = nu.to_vec();
        padded.resize(r, 0);
        let lam = lib(hat(&padded, l, r))?;
        *out = Box::into_raw(Box::new(GcPartition(lam)));
        Ok(())
    })
}

/// Computes the table for `G(r, e)` and twist `l`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_cohomology_table_new(
    r: usize,
    e: usize,
    l: usize,
    out: *mut *mut GcCohomologyTable,
) -> GcStatus {
    guard(|| {
        non_null(out, "out")?;
        let t = lib(cohomology_table(r, e, l))?;
        let rows = t
            .entries
            .into_iter()
            .flat_map(|((p, q), comps)| comps.into_iter().map(move |c| (p, q, c.weight, c.source)))
            .collect();
        *out = Box::into_raw(Box::new(GcCohomologyTable { rows }));
        Ok(())
    })
}

/// # Safety
/// `t` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gc_cohomology_table_free(t: *mut GcCohomologyTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_cohomology_table_len(t: *const GcCohomologyTable, out: *mut usize) -> GcStatus {
    guard(|| {
        non_null(t, "table")?;
        non_null(out, "out")?;
        *out = (*t).rows.len();
        Ok(())
    })
}

/// Component `index`: its bidegree and its highest weight (`e` entries).
///
/// # Safety
/// `t` must be a live handle; `p`, `q`, `out_len` must be valid; `weight` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn gc_cohomology_table_component(
    t: *const GcCohomologyTable,
    index: usize,
    p: *mut usize,
    q: *mut usize,
    weight: *mut i64,
    cap: usize,
    out_len: *mut usize,
) -> GcStatus {
    guard(|| {
        non_null(t, "table")?;
        non_null(p, "p")?;
        non_null(q, "q")?;
        let rows = &(*t).rows;
        let (pp, qq, w, _) = rows.get(index).ok_or_else(|| {
            fail(GcStatus::OutOfRange, format!("component {index} of {}", rows.len()))
        })?;
        *p = *pp;
        *q = *qq;
        copy_out(w, weight, cap, out_len)
    })
}

/// Largest weight of an `l`-admissible partition in the `r × (n−r)` box.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_pmax(r: usize, n: usize, l: usize, out: *mut usize) -> GcStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = lib(maximize(r, n, l))?.pmax;
        Ok(())
    })
}

/// `Q(p, σ)`: `H^{p,q}` vanishes for `q` above it.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_bound_q(
    n: u64,
    p: u64,
    sigma: u64,
    a: u64,
    e: u64,
    k: u64,
    out: *mut i64,
) -> GcStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = lib(BoundInput::new(n, sigma, a, e, k).bound_q(p))?;
        Ok(())
    })
}

/// Number of `s`-element subsets of `{1..r}` with sum `pi`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gc_n_s(r: u64, s: u64, pi: i64, out: *mut u64) -> GcStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = lib(n_s_count(r, s, pi))?;
        Ok(())
    })
}
