// SPDX-License-Identifier: Apache-2.0

//! C ABI over `hompoly`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns an
//! [`HpStatus`]; on failure the message is kept per thread and can be read
//! with [`hp_last_error`]. Strings returned by the library are released
//! with [`hp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hompoly::classify::classify_all;
use hompoly::coincidence::{certify_nonvanishing, enumerate_graphs};
use hompoly::constructions::{cross_polytope, cube, regular_polygon, simplex, RegularPolygonSpec};
use hompoly::hom::{build_hom, HomPolytope};
use hompoly::linalg::parse_decimal;
use hompoly::polytope::{parse_polytope, write_hrep, write_vrep, PolytopeFile};
use hompoly::regular::table_row;
use hompoly::{Error, Polytope};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    NotFullDimensional = 4,
    Geometry = 5,
    NotConvex = 6,
    UnstablePartition = 7,
    TooLarge = 8,
    Internal = 9,
    /// A Rust panic was caught at the boundary.
    Panic = 10,
    /// The caller's buffer is too small; the required length was written.
    BufferTooSmall = 11,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HpStandardKind {
    Simplex = 0,
    Cube = 1,
    CrossPolytope = 2,
    /// Rounded to the requested number of decimal digits.
    RegularNgon = 3,
}

/// Opaque polytope handle.
pub struct HpPolytope(Polytope);

/// Opaque hom-polytope handle.
pub struct HpHom(HomPolytope);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HpStatus {
    match e {
        Error::Parse { .. } => HpStatus::Parse,
        Error::NotFullDimensional { .. } => HpStatus::NotFullDimensional,
        Error::NotConvex { .. } => HpStatus::NotConvex,
        Error::UnstablePartition { .. } => HpStatus::UnstablePartition,
        Error::TooLarge { .. } => HpStatus::TooLarge,
        Error::InvalidArgument(_) | Error::DimensionMismatch { .. } | Error::IndexOutOfRange { .. } => {
            HpStatus::InvalidArgument
        }
        Error::Empty
        | Error::Unbounded
        | Error::Infeasible
        | Error::OriginNotInterior
        | Error::NotContained
        | Error::MissingRepresentation(_) => HpStatus::Geometry,
        _ => HpStatus::Internal,
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), HpStatus>) -> HpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HpStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            HpStatus::Panic
        }
    }
}

fn fail(e: Error) -> HpStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn null(what: &str) -> HpStatus {
    set_error(format!("null pointer: {what}"));
    HpStatus::NullPointer
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, HpStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        HpStatus::InvalidArgument
    })
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, HpStatus> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, HpStatus> {
    p.as_ref().ok_or_else(|| null(what))
}

/// The message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn hp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a polytope in the `V d k` / `H d k` text format.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_polytope_parse(text: *const c_char, out: *mut *mut HpPolytope) -> HpStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let text = str_arg(text, "text")?;
        let p = match parse_polytope(text).map_err(fail)? {
            PolytopeFile::V(v) => Polytope::from_vrep(v),
            PolytopeFile::H(h) => Polytope::from_hrep(h),
        }
        .map_err(fail)?;
        *out = Box::into_raw(Box::new(HpPolytope(p)));
        Ok(())
    })
}

/// Builds a standard polytope; `digits` only applies to regular polygons.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_polytope_standard(
    kind: HpStandardKind,
    n: u32,
    digits: u32,
    out: *mut *mut HpPolytope,
) -> HpStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let n = n as usize;
        let p = match kind {
            HpStandardKind::Simplex => simplex(n),
            HpStandardKind::Cube => cube(n),
            HpStandardKind::CrossPolytope => cross_polytope(n),
            HpStandardKind::RegularNgon => RegularPolygonSpec::new(n, digits).and_then(regular_polygon),
        }
        .map_err(fail)?;
        *out = Box::into_raw(Box::new(HpPolytope(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hp_polytope_free(p: *mut HpPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_polytope_dims(p: *const HpPolytope, ambient: *mut usize, dim: *mut usize) -> HpStatus {
    guard(|| {
        let p = &handle(p, "polytope")?.0;
        *out_ptr(ambient, "ambient")? = p.ambient_dim();
        *out_ptr(dim, "dim")? = p.dim();
        Ok(())
    })
}

/// Vertex and facet counts; facets are counted without redundant rows.
///
/// # Safety
/// `p` must be a live handle; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_polytope_counts(
    p: *const HpPolytope,
    vertices: *mut usize,
    facets: *mut usize,
) -> HpStatus {
    guard(|| {
        let p = handle(p, "polytope")?.0.irredundant().map_err(fail)?;
        *out_ptr(vertices, "vertices")? = p.num_vertices().unwrap_or(0);
        *out_ptr(facets, "facets")? = p.num_facets().unwrap_or(0);
        Ok(())
    })
}

/// Writes the polytope in the text format; release with [`hp_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_polytope_to_text(p: *const HpPolytope, hrep: bool, out: *mut *mut c_char) -> HpStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let p = handle(p, "polytope")?.0.irredundant().map_err(fail)?;
        let text = if hrep {
            write_hrep(p.hrep().expect("irredundant has both"))
        } else {
            write_vrep(p.vrep().expect("irredundant has both"))
        };
        *out = CString::new(text).expect("no nul bytes").into_raw();
        Ok(())
    })
}

/// # Safety
/// `p` and `q` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_hom_build(p: *const HpPolytope, q: *const HpPolytope, out: *mut *mut HpHom) -> HpStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let h = build_hom(&handle(p, "source")?.0, &handle(q, "target")?.0).map_err(fail)?;
        *out = Box::into_raw(Box::new(HpHom(h)));
        Ok(())
    })
}

/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hp_hom_free(h: *mut HpHom) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_hom_dims(h: *const HpHom, dim: *mut usize, inequalities: *mut usize) -> HpStatus {
    guard(|| {
        let h = &handle(h, "hom")?.0;
        *out_ptr(dim, "dim")? = h.dim();
        *out_ptr(inequalities, "inequalities")? = h.num_inequalities();
        Ok(())
    })
}

/// Vertex counts of the hom-polytope by rank of the map.
///
/// `counts` receives `min(d, e) + 1` entries; when `len` is smaller, nothing
/// is written except `needed`, and `BufferTooSmall` is returned.
///
/// # Safety
/// `h` must be a live handle, `counts` valid for `len` writes and `needed`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hp_hom_vertex_counts(
    h: *const HpHom,
    counts: *mut u64,
    len: usize,
    needed: *mut usize,
) -> HpStatus {
    guard(|| {
        let h = &handle(h, "hom")?.0;
        let needed = out_ptr(needed, "needed")?;
        let c = classify_all(h).map_err(fail)?;
        *needed = c.summary.by_rank.len();
        if len < *needed {
            set_error(format!("buffer holds {len} counts, {} needed", *needed));
            return Err(HpStatus::BufferTooSmall);
        }
        if counts.is_null() {
            return Err(null("counts"));
        }
        for (k, &n) in c.summary.by_rank.iter().enumerate() {
            *counts.add(k) = n as u64;
        }
        Ok(())
    })
}

/// One row of the regular polygon table: vertex counts of `Hom(P_m, P_n)` by
/// rank after clustering with every threshold in the comma-separated `eps`.
///
/// # Safety
/// `eps` must be a nul-terminated string and `counts` valid for 3 writes.
#[no_mangle]
pub unsafe extern "C" fn hp_table_row(
    m: u32,
    n: u32,
    digits: u32,
    eps: *const c_char,
    counts: *mut u64,
) -> HpStatus {
    guard(|| {
        let eps = str_arg(eps, "eps")?;
        if counts.is_null() {
            return Err(null("counts"));
        }
        let list = eps
            .split(',')
            .map(|t| {
                parse_decimal(t.trim()).ok_or_else(|| fail(Error::InvalidArgument(format!("invalid epsilon `{t}`"))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let row = table_row(m as usize, n as usize, digits, &list).map_err(fail)?;
        for (k, &c) in row.row.ranks.iter().enumerate() {
            *counts.add(k) = c;
        }
        Ok(())
    })
}

/// Enumerates the coincidence graphs and certifies each determinant;
/// `count` receives the number of certified graphs.
///
/// # Safety
/// `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_coincidence_certify(count: *mut usize) -> HpStatus {
    guard(|| {
        let count = out_ptr(count, "count")?;
        let graphs = enumerate_graphs();
        for g in &graphs {
            certify_nonvanishing(g).map_err(fail)?;
        }
        *count = graphs.len();
        Ok(())
    })
}
