//! C ABI for `cubewalk`.
//!
//! Objects are opaque handles created by `cw_*_new`-style constructors and
//! released with the matching `cw_*_free`. Every fallible call returns a
//! [`CwStatus`]; on failure [`cw_last_error_message`] describes the cause.
//! Vertices cross the boundary as `uint64_t` with bit `j` = coordinate `j`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cubewalk::circuit::{
    compile_step, compile_walk, emit_qasm, CoinStrategy, GateProgram, McxLowering,
};
use cubewalk::cubelike::{augmented_cube, complete_graph, hypercube, random_cubelike};
use cubewalk::hitting::{find_hitting_time_with, one_shot_probability_with, Window};
use cubewalk::{BitString, CoinModel, CubelikeGraph, Error, WalkState};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Request exceeds a wire or memory limit.
    ResourceLimit = 3,
    /// Coin strategy cannot handle this degree.
    Unsupported = 4,
    BufferTooSmall = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwCoin {
    Padded = 0,
    FullRegister = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwStrategy {
    /// Diffusion circuit when the degree is a power of two, else prepare-reflect.
    Auto = 0,
    PaperDiffusion = 1,
    PrepareReflect = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwLowering {
    Opaque = 0,
    AncillaLadder = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CwHittingRecord {
    pub steps: usize,
    pub target: u64,
    pub probability: f64,
    pub window_lo: usize,
    pub window_hi: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CwGateCounts {
    pub x: usize,
    pub mcx: usize,
    pub h: usize,
    pub phase: usize,
    pub rotations: usize,
    pub ancillas: usize,
}

/// Cubelike graph handle.
pub struct CwGraph(CubelikeGraph);

/// Walk state handle.
pub struct CwWalk(WalkState);

/// Gate program handle.
pub struct CwProgram(GateProgram);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CwStatus {
    match e {
        Error::TooManyWires { .. } | Error::TooManyExtras { .. } => CwStatus::ResourceLimit,
        Error::DegreeNotPowerOfTwo { .. } => CwStatus::Unsupported,
        _ => CwStatus::InvalidArgument,
    }
}

struct Failure(CwStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CwStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, translating errors and panics into a status and the thread's
/// last-error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CwStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            CwStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

fn vertex(g: &CubelikeGraph, value: u64) -> Result<BitString, Failure> {
    Ok(BitString::new(value, g.dimension())?)
}

fn coin_model(c: CwCoin) -> CoinModel {
    match c {
        CwCoin::Padded => CoinModel::Padded,
        CwCoin::FullRegister => CoinModel::FullRegister,
    }
}

fn strategy(s: CwStrategy, g: &CubelikeGraph) -> CoinStrategy {
    match s {
        CwStrategy::Auto => CoinStrategy::auto(g),
        CwStrategy::PaperDiffusion => CoinStrategy::PaperDiffusion,
        CwStrategy::PrepareReflect => CoinStrategy::PrepareReflect,
    }
}

/// Message for the last failed call on this thread, or NULL after a success.
/// The pointer stays valid until the next `cw_*` call on the same thread.
#[no_mangle]
pub extern "C" fn cw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn cw_graph_hypercube(n: u32, out: *mut *mut CwGraph) -> CwStatus {
    guard(|| store(out, CwGraph(hypercube(n)?)))
}

#[no_mangle]
pub unsafe extern "C" fn cw_graph_augmented(n: u32, out: *mut *mut CwGraph) -> CwStatus {
    guard(|| store(out, CwGraph(augmented_cube(n)?)))
}

#[no_mangle]
pub unsafe extern "C" fn cw_graph_complete(n: u32, out: *mut *mut CwGraph) -> CwStatus {
    guard(|| store(out, CwGraph(complete_graph(n)?)))
}

#[no_mangle]
pub unsafe extern "C" fn cw_graph_random(
    n: u32,
    extra: u64,
    seed: u64,
    out: *mut *mut CwGraph,
) -> CwStatus {
    guard(|| store(out, CwGraph(random_cubelike(n, extra, seed)?)))
}

/// Graph on `n` bits from `len` generator values. With `canonicalize` the
/// generators are sorted, otherwise their order fixes the edge labels.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_from_generators(
    n: u32,
    values: *const u64,
    len: usize,
    canonicalize: bool,
    out: *mut *mut CwGraph,
) -> CwStatus {
    guard(|| {
        if values.is_null() && len > 0 {
            return Err(null("values"));
        }
        let raw = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(values, len)
        };
        let elements = raw
            .iter()
            .map(|&v| BitString::new(v, n))
            .collect::<Result<Vec<_>, _>>()?;
        store(
            out,
            CwGraph(CubelikeGraph::new(n, &elements, canonicalize)?),
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn cw_graph_free(graph: *mut CwGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Position bits `n`; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_dimension(graph: *const CwGraph) -> u32 {
    graph.as_ref().map_or(0, |g| g.0.dimension())
}

/// Degree Δ; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_degree(graph: *const CwGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.degree())
}

/// Coin bits `m`; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_coin_width(graph: *const CwGraph) -> u32 {
    graph.as_ref().map_or(0, |g| g.0.coin_width())
}

/// XOR of all generators; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cw_graph_target_vertex(graph: *const CwGraph) -> u64 {
    graph.as_ref().map_or(0, |g| g.0.target_vertex().value())
}

/// Walk at `start` with the coin in its initial superposition.
#[no_mangle]
pub unsafe extern "C" fn cw_walk_new(
    graph: *const CwGraph,
    start: u64,
    coin: CwCoin,
    out: *mut *mut CwWalk,
) -> CwStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let state = WalkState::initial_with(g, vertex(g, start)?, coin_model(coin))?;
        store(out, CwWalk(state))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cw_walk_evolve(walk: *mut CwWalk, steps: usize) -> CwStatus {
    guard(|| {
        let w = walk.as_mut().ok_or_else(|| null("walk"))?;
        w.0.evolve(steps);
        Ok(())
    })
}

/// Writes the `2^n` position probabilities into `buffer`.
#[no_mangle]
pub unsafe extern "C" fn cw_walk_probabilities(
    walk: *const CwWalk,
    buffer: *mut f64,
    len: usize,
) -> CwStatus {
    guard(|| {
        let w = deref(walk, "walk")?;
        if buffer.is_null() {
            return Err(null("buffer"));
        }
        let dist = w.0.position_distribution();
        let probs = dist.probabilities();
        if len < probs.len() {
            return Err(Failure(
                CwStatus::BufferTooSmall,
                format!("buffer holds {len} values, need {}", probs.len()),
            ));
        }
        std::slice::from_raw_parts_mut(buffer, probs.len()).copy_from_slice(probs);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cw_walk_probability_at(
    walk: *const CwWalk,
    vertex_value: u64,
    out: *mut f64,
) -> CwStatus {
    guard(|| {
        let w = deref(walk, "walk")?;
        let v = vertex(w.0.graph(), vertex_value)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = w.0.probability_at(v.value());
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cw_walk_free(walk: *mut CwWalk) {
    if !walk.is_null() {
        drop(Box::from_raw(walk));
    }
}

#[no_mangle]
pub unsafe extern "C" fn cw_one_shot_probability(
    graph: *const CwGraph,
    coin: CwCoin,
    steps: usize,
    start: u64,
    target: u64,
    out: *mut f64,
) -> CwStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let p = one_shot_probability_with(
            g,
            coin_model(coin),
            steps,
            vertex(g, start)?,
            vertex(g, target)?,
        )?;
        *out.as_mut().ok_or_else(|| null("out"))? = p;
        Ok(())
    })
}

/// Hitting time from `start`. A null `target` selects the XOR of the
/// generators; `window_hi == 0` selects the default window.
#[no_mangle]
pub unsafe extern "C" fn cw_find_hitting_time(
    graph: *const CwGraph,
    coin: CwCoin,
    start: u64,
    target: *const u64,
    window_lo: usize,
    window_hi: usize,
    out: *mut CwHittingRecord,
) -> CwStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let target = match target.as_ref() {
            Some(&t) => Some(vertex(g, t)?),
            None => None,
        };
        let window = if window_hi == 0 {
            None
        } else {
            Some(Window::new(window_lo, window_hi)?)
        };
        let r = find_hitting_time_with(g, coin_model(coin), vertex(g, start)?, target, window)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = CwHittingRecord {
            steps: r.steps,
            target: target.unwrap_or_else(|| g.target_vertex()).value(),
            probability: r.p,
            window_lo: r.window.lo,
            window_hi: r.window.hi,
        };
        Ok(())
    })
}

/// Coin initialisation plus `steps` walk steps.
#[no_mangle]
pub unsafe extern "C" fn cw_compile_walk(
    graph: *const CwGraph,
    steps: usize,
    strat: CwStrategy,
    out: *mut *mut CwProgram,
) -> CwStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        store(out, CwProgram(compile_walk(g, steps, strategy(strat, g))?))
    })
}

/// One coin-then-shift step.
#[no_mangle]
pub unsafe extern "C" fn cw_compile_step(
    graph: *const CwGraph,
    strat: CwStrategy,
    out: *mut *mut CwProgram,
) -> CwStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        store(out, CwProgram(compile_step(g, strategy(strat, g))?))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cw_program_counts(
    program: *const CwProgram,
    out: *mut CwGateCounts,
) -> CwStatus {
    guard(|| {
        let p = &deref(program, "program")?.0;
        let c = p.counts();
        *out.as_mut().ok_or_else(|| null("out"))? = CwGateCounts {
            x: c.x_count,
            mcx: c.mcx_count,
            h: c.h_count,
            phase: c.phase_count,
            rotations: c.rotation_count,
            ancillas: p.ancillas(),
        };
        Ok(())
    })
}

/// OpenQASM 2.0 text; release it with [`cw_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cw_program_qasm(
    program: *const CwProgram,
    lowering: CwLowering,
    out: *mut *mut c_char,
) -> CwStatus {
    guard(|| {
        let p = &deref(program, "program")?.0;
        let lowering = match lowering {
            CwLowering::Opaque => McxLowering::Opaque,
            CwLowering::AncillaLadder => McxLowering::AncillaLadder,
        };
        let text = CString::new(emit_qasm(p, lowering))
            .map_err(|_| Failure(CwStatus::Internal, "QASM contains NUL".into()))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = text.into_raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cw_program_free(program: *mut CwProgram) {
    if !program.is_null() {
        drop(Box::from_raw(program));
    }
}

#[no_mangle]
pub unsafe extern "C" fn cw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_out_pointer() {
        let status = unsafe { cw_graph_hypercube(3, ptr::null_mut()) };
        assert_eq!(status, CwStatus::NullPointer);
        assert!(!cw_last_error_message().is_null());
    }

    #[test]
    fn success_clears_error() {
        let mut g = ptr::null_mut();
        unsafe {
            assert_eq!(cw_graph_hypercube(0, &mut g), CwStatus::InvalidArgument);
            assert_eq!(cw_graph_hypercube(2, &mut g), CwStatus::Ok);
            assert!(cw_last_error_message().is_null());
            cw_graph_free(g);
        }
    }
}
