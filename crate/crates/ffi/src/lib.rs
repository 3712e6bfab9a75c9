//! C ABI over `bel-core`.
//!
//! Graphs are opaque `BelGraph` handles created by `bel_graph_parse` or
//! `bel_graph_from_edges` and released with `bel_graph_free`. Every fallible
//! call returns a `BelStatus`; on failure `bel_last_error` describes the
//! error for the calling thread. Strings returned through `char **` outputs
//! are owned by the caller and released with `bel_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bel::commands::{self, Options};
use bel::{Error, FieldKind, Graph};

/// Opaque graph handle.
pub struct BelGraph {
    graph: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BelStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    SizeCap = 5,
    NotInClass = 6,
    InvalidArgument = 7,
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> BelStatus {
    match e {
        Error::Parse { .. } => BelStatus::ParseError,
        Error::EmptyGraph | Error::VertexOutOfRange { .. } | Error::Loop(_) | Error::EdgeAbsent(..) => {
            BelStatus::InvalidGraph
        }
        Error::SizeCap { .. } => BelStatus::SizeCap,
        Error::Disconnected | Error::NotCaterpillar | Error::NotGeneralizedCaterpillar | Error::NotNetFree => {
            BelStatus::NotInClass
        }
        _ => BelStatus::InvalidArgument,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (BelStatus, String)>) -> BelStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BelStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BelStatus::Panic
        }
    }
}

fn lift(e: Error) -> (BelStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (BelStatus, String) {
    (BelStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (BelStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (BelStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn graph_arg<'a>(g: *const BelGraph) -> Result<&'a Graph, (BelStatus, String)> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn field_arg(p: *const c_char) -> Result<FieldKind, (BelStatus, String)> {
    if p.is_null() {
        return Ok(FieldKind::Rational);
    }
    str_arg(p, "field")?.parse().map_err(lift)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), (BelStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = value;
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nul removed").into_raw()
}

/// Message for the last failed call on this thread; empty if none. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bel_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse a graph in the edge-list text format.
///
/// # Safety
/// `text` must be a valid nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bel_graph_parse(text: *const c_char, out: *mut *mut BelGraph) -> BelStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let graph = Graph::parse(text).map_err(lift)?;
        put(out, Box::into_raw(Box::new(BelGraph { graph })))
    })
}

/// Build a graph on `1..=n` from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is zero) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bel_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut BelGraph,
) -> BelStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let graph = Graph::from_edges(n, &pairs).map_err(lift)?;
        put(out, Box::into_raw(Box::new(BelGraph { graph })))
    })
}

/// # Safety
/// `g` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bel_graph_free(g: *mut BelGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn bel_graph_vertex_count(g: *const BelGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.n())
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn bel_graph_edge_count(g: *const BelGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.edge_count())
}

/// Graph classes answerable by `bel_graph_is`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BelClass {
    Tree = 0,
    Caterpillar = 1,
    BlockGraph = 2,
    NetFree = 3,
    GeneralizedCaterpillar = 4,
    Closed = 5,
    WeaklyClosed = 6,
    Comparability = 7,
    /// Exactly two associated primes; requires a connected graph.
    AssTwo = 8,
}

/// Membership of `g` in a graph class.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bel_graph_is(g: *const BelGraph, class: BelClass, out: *mut bool) -> BelStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let answer = match class {
            BelClass::Tree => g.is_tree(),
            BelClass::Caterpillar => g.is_caterpillar(),
            BelClass::BlockGraph => g.is_block_graph(),
            BelClass::NetFree => g.is_net_free(),
            BelClass::GeneralizedCaterpillar => g.is_generalized_caterpillar(),
            BelClass::Closed => g.is_closed().map_err(lift)?,
            BelClass::WeaklyClosed => g.is_weakly_closed(),
            BelClass::Comparability => g.is_comparability(),
            BelClass::AssTwo => g.ass_count_is_two().map_err(lift)?,
        };
        put(out, answer)
    })
}

/// Full classification report as JSON.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bel_classify_json(g: *const BelGraph, out: *mut *mut c_char) -> BelStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let opts = Options { timings: false, ..Options::default() };
        let report = commands::classify(g, &opts).map_err(lift)?;
        put(out, into_c_string(report.to_json()))
    })
}

/// Reduced Gröbner basis of `J_G`, one element per line. `field` is `"q"`,
/// `"fp:<p>"` or null for the rationals.
///
/// # Safety
/// `g` must be a live handle, `field` null or a valid string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bel_groebner_basis(
    g: *const BelGraph,
    field: *const c_char,
    out: *mut *mut c_char,
) -> BelStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let opts = Options { field: field_arg(field)?, timings: false, ..Options::default() };
        let report = commands::gb(g, commands::Relabel::None, false, &opts).map_err(lift)?;
        put(out, into_c_string(commands::render_text(&report)))
    })
}

/// Compare `J_G^t` with `J_G^(t)`. When they differ and `witness` is non-null,
/// a polynomial in the symbolic power but not the ordinary one is stored
/// there; otherwise `*witness` is set to null.
///
/// # Safety
/// `g` must be a live handle, `field` null or a valid string, `equal`
/// writable and `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn bel_powers_equal(
    g: *const BelGraph,
    t: usize,
    field: *const c_char,
    equal: *mut bool,
    witness: *mut *mut c_char,
) -> BelStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let opts = Options { field: field_arg(field)?, timings: false, ..Options::default() };
        let report = commands::powers(g, t, &opts).map_err(lift)?;
        let bel::report::Results::Powers(p) = report.results else { unreachable!("powers report") };
        put(equal, p.equal)?;
        if !witness.is_null() {
            *witness = p.witness.map_or(ptr::null_mut(), into_c_string);
        }
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bel_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
