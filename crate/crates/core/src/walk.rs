//! Structured simulation of one walk step `U = S'(C' ⊗ I)`.
//!
//! Amplitudes are stored coin-major: slot `c` owns the contiguous block
//! `c * 2^n .. (c + 1) * 2^n`, so the shift is an XOR permutation inside each
//! block and the coin is an elementwise combination of blocks. The same index
//! `c * 2^n + a` is the computational-basis index of a register whose low `n`
//! wires hold the position and whose high `m` wires hold the coin.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::cubelike::{render_bits, BitString, CubelikeGraph};
use crate::error::{Error, Result};

/// Which coin acts on the padded register.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoinModel {
    /// `C' = 2|D'><D'| - I` with `|D'>` uniform over the first Δ slots; the
    /// walk starts in `|D'>` and padded slots never fill.
    #[default]
    Padded,
    /// Grover diffusion over all `2^m` slots, starting from `H^{⊗m}|0>`. Padded
    /// slots act as self-loops since `S'` leaves them in place.
    FullRegister,
}

impl CoinModel {
    /// Number of slots the diffusion mixes.
    pub fn active_slots(self, graph: &CubelikeGraph) -> usize {
        match self {
            CoinModel::Padded => graph.degree(),
            CoinModel::FullRegister => graph.coin_slots(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WalkState {
    graph: CubelikeGraph,
    model: CoinModel,
    amplitudes: Vec<Complex64>,
}

impl WalkState {
    /// `|D'>|start>` under the padded coin.
    pub fn initial(graph: &CubelikeGraph, start: BitString) -> Result<Self> {
        Self::initial_with(graph, start, CoinModel::Padded)
    }

    pub fn initial_with(graph: &CubelikeGraph, start: BitString, model: CoinModel) -> Result<Self> {
        graph.check_vertex(start)?;
        let vertices = graph.vertex_count();
        let active = model.active_slots(graph);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); graph.coin_slots() * vertices];
        let a = Complex64::new(1.0 / (active as f64).sqrt(), 0.0);
        for slot in 0..active {
            amplitudes[slot * vertices + start.value() as usize] = a;
        }
        Ok(WalkState {
            graph: graph.clone(),
            model,
            amplitudes,
        })
    }

    /// Wraps an explicit amplitude table laid out as `coin * 2^n + vertex`.
    pub fn from_amplitudes(
        graph: &CubelikeGraph,
        model: CoinModel,
        amplitudes: Vec<Complex64>,
    ) -> Result<Self> {
        let expected = graph.coin_slots() * graph.vertex_count();
        if amplitudes.len() != expected {
            return Err(Error::InvalidGate(format!(
                "amplitude table has {} entries, expected {expected}",
                amplitudes.len()
            )));
        }
        Ok(WalkState {
            graph: graph.clone(),
            model,
            amplitudes,
        })
    }

    pub fn graph(&self) -> &CubelikeGraph {
        &self.graph
    }

    pub fn model(&self) -> CoinModel {
        self.model
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, coin: usize, vertex: u64) -> Complex64 {
        self.amplitudes[coin * self.graph.vertex_count() + vertex as usize]
    }

    pub fn apply_coin(&mut self) {
        let vertices = self.graph.vertex_count();
        let active = self.model.active_slots(&self.graph);
        let (mixed, padded) = self.amplitudes.split_at_mut(active * vertices);

        let mut sum = vec![Complex64::new(0.0, 0.0); vertices];
        for block in mixed.chunks_exact(vertices) {
            for (s, &x) in sum.iter_mut().zip(block) {
                *s += x;
            }
        }
        let scale = 2.0 / active as f64;
        for block in mixed.chunks_exact_mut(vertices) {
            for (x, &s) in block.iter_mut().zip(&sum) {
                *x = s * scale - *x;
            }
        }
        for x in padded.iter_mut() {
            *x = -*x;
        }
    }

    pub fn apply_shift(&mut self) {
        let vertices = self.graph.vertex_count();
        let generators = self.graph.generators().values();
        for (block, &w) in self.amplitudes.chunks_exact_mut(vertices).zip(generators) {
            let w = w as usize;
            let high = 1usize << (usize::BITS - 1 - w.leading_zeros());
            // every pair {a, a ^ w} has exactly one member with the top bit of w clear
            for a in 0..vertices {
                if a & high == 0 {
                    block.swap(a, a ^ w);
                }
            }
        }
    }

    pub fn step(&mut self) {
        self.apply_coin();
        self.apply_shift();
    }

    pub fn evolve(&mut self, steps: usize) {
        for _ in 0..steps {
            self.step();
        }
    }

    pub fn evolved(mut self, steps: usize) -> Self {
        self.evolve(steps);
        self
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|x| x.norm_sqr()).sum()
    }

    /// Largest modulus among the padded slots `Δ..2^m`.
    pub fn max_padding_amplitude(&self) -> f64 {
        let start = self.graph.degree() * self.graph.vertex_count();
        self.amplitudes[start..]
            .iter()
            .map(|x| x.norm())
            .fold(0.0, f64::max)
    }

    pub fn probability_at(&self, vertex: u64) -> f64 {
        let vertices = self.graph.vertex_count();
        self.amplitudes
            .iter()
            .skip(vertex as usize)
            .step_by(vertices)
            .map(|x| x.norm_sqr())
            .sum()
    }

    pub fn position_distribution(&self) -> Distribution {
        let vertices = self.graph.vertex_count();
        let mut probabilities = vec![0.0; vertices];
        for block in self.amplitudes.chunks_exact(vertices) {
            for (p, x) in probabilities.iter_mut().zip(block) {
                *p += x.norm_sqr();
            }
        }
        Distribution {
            width: self.graph.dimension(),
            probabilities,
        }
    }
}

/// Measurement statistics of the position register.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    width: u32,
    probabilities: Vec<f64>,
}

impl Distribution {
    pub fn new(width: u32, probabilities: Vec<f64>) -> Self {
        debug_assert_eq!(probabilities.len(), 1 << width);
        Distribution {
            width,
            probabilities,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn get(&self, vertex: u64) -> f64 {
        self.probabilities[vertex as usize]
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    /// Most likely vertex; the lowest label wins ties.
    pub fn argmax(&self) -> (u64, f64) {
        let mut best = (0u64, f64::NEG_INFINITY);
        for (v, &p) in self.probabilities.iter().enumerate() {
            if p > best.1 {
                best = (v as u64, p);
            }
        }
        best
    }

    pub fn max_abs_diff(&self, other: &Distribution) -> f64 {
        self.probabilities
            .iter()
            .zip(&other.probabilities)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// CSV with header `vertex,bits,probability`, vertices ascending.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex,bits,probability\n");
        for (v, &p) in self.probabilities.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{}",
                v,
                render_bits(v as u64, self.width),
                format_sig(p, 12)
            );
        }
        out
    }
}

/// Plain decimal rendering with `digits` significant digits.
pub fn format_sig(value: f64, digits: usize) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{value:.decimals$}");
    // rounding may carry into a new leading digit (0.99… -> 1.00…)
    let rounded: f64 = s.parse().unwrap_or(value);
    if decimals > 0 && rounded.abs() >= 10f64.powi(magnitude + 1) {
        format!("{value:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubelike::{augmented_cube, complete_graph, hypercube};

    const EPS: f64 = 1e-12;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn close(a: Complex64, b: f64) -> bool {
        (a - Complex64::new(b, 0.0)).norm() < EPS
    }

    #[test]
    fn initial_state_q2() {
        let g = hypercube(2).unwrap();
        let s = WalkState::initial(&g, bits("00")).unwrap();
        let r = 1.0 / 2f64.sqrt();
        assert!(close(s.amplitude(0, 0), r));
        assert!(close(s.amplitude(1, 0), r));
        assert!((s.norm_sqr() - 1.0).abs() < EPS);
    }

    #[test]
    fn initial_state_padded_slot_empty() {
        let g = hypercube(3).unwrap();
        let s = WalkState::initial(&g, bits("000")).unwrap();
        for c in 0..3 {
            assert!(close(s.amplitude(c, 0), 1.0 / 3f64.sqrt()));
        }
        assert!(close(s.amplitude(3, 0), 0.0));
        assert!(WalkState::initial(&g, bits("00")).is_err());
    }

    #[test]
    fn full_register_initial_state_is_uniform() {
        let g = hypercube(3).unwrap();
        let s = WalkState::initial_with(&g, bits("000"), CoinModel::FullRegister).unwrap();
        for c in 0..4 {
            assert!(close(s.amplitude(c, 0), 0.5));
        }
    }

    fn with_column(g: &CubelikeGraph, column: &[f64]) -> WalkState {
        let mut amps = vec![Complex64::new(0.0, 0.0); g.coin_slots() * g.vertex_count()];
        for (c, &x) in column.iter().enumerate() {
            amps[c * g.vertex_count()] = Complex64::new(x, 0.0);
        }
        WalkState::from_amplitudes(g, CoinModel::Padded, amps).unwrap()
    }

    #[test]
    fn coin_fixes_diagonal() {
        let g = hypercube(2).unwrap();
        let r = 1.0 / 2f64.sqrt();
        let mut s = with_column(&g, &[r, r]);
        s.apply_coin();
        assert!(close(s.amplitude(0, 0), r) && close(s.amplitude(1, 0), r));
    }

    #[test]
    fn coin_swaps_for_degree_two() {
        let g = hypercube(2).unwrap();
        let mut s = with_column(&g, &[1.0, 0.0]);
        s.apply_coin();
        assert!(close(s.amplitude(0, 0), 0.0) && close(s.amplitude(1, 0), 1.0));
    }

    #[test]
    fn coin_degree_three_against_dense_reflection() {
        let g = hypercube(3).unwrap();
        // dense 2|D'><D'| - I, D' uniform on 3 of 4 slots
        let d = [1.0 / 3f64.sqrt(), 1.0 / 3f64.sqrt(), 1.0 / 3f64.sqrt(), 0.0];
        let input = [1.0, 0.0, 0.0, 0.0];
        let dense: Vec<f64> = (0..4)
            .map(|r| {
                (0..4)
                    .map(|c| (2.0 * d[r] * d[c] - if r == c { 1.0 } else { 0.0 }) * input[c])
                    .sum()
            })
            .collect();
        let mut s = with_column(&g, &input);
        s.apply_coin();
        for (c, &want) in dense.iter().enumerate() {
            assert!(close(s.amplitude(c, 0), want), "slot {c}");
        }
        assert!(close(s.amplitude(0, 0), -1.0 / 3.0));
        assert!(close(s.amplitude(1, 0), 2.0 / 3.0));
    }

    #[test]
    fn shift_examples() {
        let g = hypercube(2).unwrap();
        let mut s = with_column(&g, &[1.0, 0.0]);
        s.apply_shift();
        assert!(close(s.amplitude(0, 0b01), 1.0));

        let g = CubelikeGraph::new(
            4,
            &[bits("0101"), bits("0111"), bits("1001"), bits("1010")],
            true,
        )
        .unwrap();
        let mut amps = vec![Complex64::new(0.0, 0.0); 4 * 16];
        amps[2 * 16 + 0b1101] = Complex64::new(1.0, 0.0);
        let mut s = WalkState::from_amplitudes(&g, CoinModel::Padded, amps).unwrap();
        s.apply_shift();
        assert!(close(s.amplitude(2, 0b0100), 1.0));
    }

    #[test]
    fn shift_is_an_involution() {
        let g = augmented_cube(4).unwrap();
        let mut s = WalkState::initial(&g, bits("0110")).unwrap();
        s.evolve(3);
        let before = s.clone();
        s.apply_shift();
        s.apply_shift();
        assert_eq!(s, before);
    }

    #[test]
    fn example_walk_on_q2() {
        let g = hypercube(2).unwrap();
        let s0 = WalkState::initial(&g, bits("00")).unwrap();
        let d1 = s0.clone().evolved(1).position_distribution();
        assert!((d1.get(0b01) - 0.5).abs() < EPS && (d1.get(0b10) - 0.5).abs() < EPS);
        let d2 = s0.clone().evolved(2).position_distribution();
        assert!((d2.get(0b11) - 1.0).abs() < EPS);
        assert_eq!(s0.clone().evolved(0), s0);
    }

    #[test]
    fn q3_three_steps() {
        let g = hypercube(3).unwrap();
        let d = WalkState::initial(&g, bits("000"))
            .unwrap()
            .evolved(3)
            .position_distribution();
        assert!((d.get(7) - 0.804).abs() < 0.02);
        assert!((d.total() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn point_mass_at_start() {
        let g = complete_graph(3).unwrap();
        let d = WalkState::initial(&g, bits("101"))
            .unwrap()
            .position_distribution();
        assert_eq!(d.argmax(), (5, d.get(5)));
        assert!((d.get(5) - 1.0).abs() < EPS);
    }

    #[test]
    fn hypercube_parity() {
        let g = hypercube(5).unwrap();
        let mut s = WalkState::initial(&g, bits("00000")).unwrap();
        for t in 1..=12u32 {
            s.step();
            let d = s.position_distribution();
            for (v, &p) in d.probabilities().iter().enumerate() {
                if p > 1e-20 {
                    assert_eq!((v as u64).count_ones() % 2, t % 2);
                }
            }
        }
    }

    #[test]
    fn csv_layout() {
        let g = hypercube(2).unwrap();
        let csv = WalkState::initial(&g, bits("00"))
            .unwrap()
            .evolved(1)
            .position_distribution()
            .to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "vertex,bits,probability");
        assert_eq!(lines[1], "0,00,0");
        assert_eq!(lines[2], "1,01,0.500000000000");
        assert_eq!(lines.len(), 5);
    }

    #[test]
    fn sig_formatting() {
        assert_eq!(format_sig(0.5, 12), "0.500000000000");
        assert_eq!(format_sig(1.0, 12), "1.00000000000");
        assert_eq!(format_sig(0.0123, 3), "0.0123");
        assert_eq!(format_sig(0.0, 12), "0");
        assert_eq!(format_sig(0.99999999999999, 12), "1.00000000000");
    }
}
