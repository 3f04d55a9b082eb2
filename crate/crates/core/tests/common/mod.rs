//! Dense reference operators built with nalgebra straight from the
//! definitions, sharing no code with the crate's simulators.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;

use cubewalk::CubelikeGraph;

pub type CMatrix = DMatrix<Complex64>;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `2|d><d| - I` on `2^m` slots with `d` uniform over the first `active`.
pub fn coin_matrix(slots: usize, active: usize) -> CMatrix {
    let amp = 1.0 / (active as f64).sqrt();
    let d = DMatrix::from_fn(slots, 1, |i, _| if i < active { c(amp) } else { c(0.0) });
    &d * d.transpose() * c(2.0) - CMatrix::identity(slots, slots)
}

/// `S'`: slot `k < Δ` moves vertex `v` to `v ⊕ Ω(k+1)`, padded slots stay.
pub fn shift_matrix(g: &CubelikeGraph) -> CMatrix {
    let n = g.vertex_count();
    let dim = g.coin_slots() * n;
    let gens: Vec<u64> = g.generators().iter().map(|b| b.value()).collect();
    let mut s = CMatrix::zeros(dim, dim);
    for k in 0..g.coin_slots() {
        for v in 0..n {
            let w = gens.get(k).map_or(v, |&x| v ^ x as usize);
            s[(k * n + w, k * n + v)] = c(1.0);
        }
    }
    s
}

/// `U = S'(C' ⊗ I)` with the coin as the high (outer) factor.
pub fn step_matrix(g: &CubelikeGraph, active: usize) -> CMatrix {
    let coin = coin_matrix(g.coin_slots(), active);
    let id = CMatrix::identity(g.vertex_count(), g.vertex_count());
    let kron = coin.kronecker(&id);
    // S' is a permutation, so apply it by moving rows.
    let n = g.vertex_count();
    let gens: Vec<u64> = g.generators().iter().map(|b| b.value()).collect();
    let mut u = CMatrix::zeros(kron.nrows(), kron.ncols());
    for k in 0..g.coin_slots() {
        for v in 0..n {
            let w = gens.get(k).map_or(v, |&x| v ^ x as usize);
            u.set_row(k * n + w, &kron.row(k * n + v));
        }
    }
    u
}

/// Every generating set of `Z_2^n` with between `lo` and `hi` elements, as
/// sorted value lists. Sets that do not span `Z_2^n` are skipped.
pub fn generating_sets(n: u32, lo: usize, hi: usize) -> Vec<Vec<u64>> {
    let elems: Vec<u64> = (1..1u64 << n).collect();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << elems.len()) {
        let size = mask.count_ones() as usize;
        if size < lo || size > hi {
            continue;
        }
        let set: Vec<u64> = elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if rank(&set) == n as usize {
            out.push(set);
        }
    }
    out
}

/// Rank over GF(2).
pub fn rank(values: &[u64]) -> usize {
    // pivot[b] holds a vector whose highest set bit is b
    let mut pivot = [0u64; 64];
    let mut rank = 0;
    for &v in values {
        let mut r = v;
        while r != 0 {
            let top = 63 - r.leading_zeros() as usize;
            if pivot[top] == 0 {
                pivot[top] = r;
                rank += 1;
                break;
            }
            r ^= pivot[top];
        }
    }
    rank
}

pub fn graph(n: u32, values: &[u64]) -> CubelikeGraph {
    let elems: Vec<cubewalk::BitString> = values
        .iter()
        .map(|&v| cubewalk::BitString::new(v, n).unwrap())
        .collect();
    CubelikeGraph::new(n, &elems, true).unwrap()
}

pub fn max_deviation(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
