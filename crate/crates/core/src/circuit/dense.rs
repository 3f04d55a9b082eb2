//! Step operator `S'(C' ⊗ I)` written out entry by entry from its definition,
//! independent of both the walk engine and the gate compiler.

use num_complex::Complex64;

use crate::cubelike::CubelikeGraph;
use crate::walk::CoinModel;

/// `C'[row][col] = 2 d_row d_col - δ`, where `d` is the normalized indicator
/// of the slots the coin mixes.
pub fn coin_entry(g: &CubelikeGraph, model: CoinModel, row: usize, col: usize) -> f64 {
    let active = model.active_slots(g);
    let d = |k: usize| {
        if k < active {
            1.0 / (active as f64).sqrt()
        } else {
            0.0
        }
    };
    let identity = if row == col { 1.0 } else { 0.0 };
    2.0 * d(row) * d(col) - identity
}

/// Row where `S'` sends basis state `(coin, vertex)`.
pub fn shift_image(g: &CubelikeGraph, coin: usize, vertex: usize) -> usize {
    let generators = g.generators().values();
    let moved = match generators.get(coin) {
        Some(&w) => vertex ^ w as usize,
        None => vertex,
    };
    coin * g.vertex_count() + moved
}

/// Nonzero entries `(row, value)` of column `col = coin * 2^n + vertex` of `S'(C' ⊗ I)`.
pub fn step_column(g: &CubelikeGraph, model: CoinModel, col: usize) -> Vec<(usize, Complex64)> {
    let vertices = g.vertex_count();
    let (coin, vertex) = (col / vertices, col % vertices);
    (0..g.coin_slots())
        .filter_map(|row_coin| {
            let value = coin_entry(g, model, row_coin, coin);
            (value != 0.0).then(|| (shift_image(g, row_coin, vertex), Complex64::new(value, 0.0)))
        })
        .collect()
}
