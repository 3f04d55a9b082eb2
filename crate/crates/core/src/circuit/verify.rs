use num_complex::Complex64;
use serde::Serialize;

use super::compile::{compile_step, compile_walk, CoinStrategy};
use super::dense::step_column;
use super::exec::{execute_program, Statevector};
use super::gate::GateProgram;
use crate::cubelike::{check_wires, BitString, CubelikeGraph};
use crate::error::{Error, Result};
use crate::walk::{CoinModel, WalkState};

/// Register size for column-by-column operator comparison.
pub const MAX_DENSE_WIRES: usize = 12;

pub const EQUIVALENCE_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub n: u32,
    pub delta: usize,
    pub m: u32,
    pub strategy: String,
    /// Largest `|program[r][c] - U[r][c]|` over all entries, phases included.
    pub step_max_deviation: f64,
    pub walk_steps: usize,
    /// Largest amplitude deviation between the compiled walk and the engine.
    pub walk_max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Largest entrywise deviation of a single-step program from `S'(C' ⊗ I)`.
///
/// Ancilla wires, if any, start in `|0>` and must return there; any amplitude
/// left on a nonzero ancilla pattern counts as deviation.
pub fn step_deviation(g: &CubelikeGraph, program: &GateProgram) -> Result<f64> {
    check_layout(g, program)?;
    check_wires(g.wires(), MAX_DENSE_WIRES)?;
    let dim = g.coin_slots() * g.vertex_count();
    let mut worst = 0.0f64;
    for col in 0..dim {
        let out = execute_program(program, col)?;
        let mut expected = vec![Complex64::new(0.0, 0.0); dim];
        for (row, value) in step_column(g, CoinModel::Padded, col) {
            expected[row] = value;
        }
        let amps = out.amplitudes();
        for (row, want) in expected.iter().enumerate() {
            worst = worst.max((amps[row] - want).norm());
        }
        for x in &amps[dim..] {
            worst = worst.max(x.norm());
        }
    }
    Ok(worst)
}

/// Largest deviation between a compiled `steps`-step walk run from `|0…0>`
/// and the structured engine started at `|D'>|0^n>`. Amplitude left on
/// nonzero ancilla patterns counts as deviation.
pub fn walk_deviation(g: &CubelikeGraph, program: &GateProgram, steps: usize) -> Result<f64> {
    check_layout(g, program)?;
    let compiled = execute_program(program, 0)?;
    let engine = WalkState::initial(g, BitString::zeros(g.dimension())?)?.evolved(steps);
    let dim = engine.amplitudes().len();
    let leak = compiled.amplitudes()[dim..]
        .iter()
        .map(|x| x.norm())
        .fold(0.0, f64::max);
    Ok(max_amplitude_deviation(&compiled, &engine).max(leak))
}

/// Checks the compiled step against the dense operator and the compiled
/// `steps`-step walk against the structured engine.
pub fn verify_equivalence(
    g: &CubelikeGraph,
    steps: usize,
    strategy: CoinStrategy,
) -> Result<EquivalenceReport> {
    let step = compile_step(g, strategy)?;
    let step_max_deviation = step_deviation(g, &step)?;

    let walk = compile_walk(g, steps, strategy)?;
    let walk_max_deviation = walk_deviation(g, &walk, steps)?;

    let pass =
        step_max_deviation < EQUIVALENCE_TOLERANCE && walk_max_deviation < EQUIVALENCE_TOLERANCE;
    Ok(EquivalenceReport {
        n: g.dimension(),
        delta: g.degree(),
        m: g.coin_width(),
        strategy: strategy.name().to_string(),
        step_max_deviation,
        walk_steps: steps,
        walk_max_deviation,
        tolerance: EQUIVALENCE_TOLERANCE,
        pass,
    })
}

fn check_layout(g: &CubelikeGraph, program: &GateProgram) -> Result<()> {
    if program.position_wires() != g.dimension() as usize
        || program.coin_wires() != g.coin_width() as usize
    {
        return Err(Error::InvalidGate(format!(
            "program registers ({}, {}) do not match graph ({}, {})",
            program.position_wires(),
            program.coin_wires(),
            g.dimension(),
            g.coin_width()
        )));
    }
    Ok(())
}

fn max_amplitude_deviation(compiled: &Statevector, engine: &WalkState) -> f64 {
    compiled
        .amplitudes()
        .iter()
        .zip(engine.amplitudes())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::gate::Gate;
    use crate::cubelike::{augmented_cube, hypercube};

    #[test]
    fn hypercube_four_passes() {
        let r =
            verify_equivalence(&hypercube(4).unwrap(), 3, CoinStrategy::PaperDiffusion).unwrap();
        assert!(r.pass);
        assert!(r.step_max_deviation < 1e-12);
    }

    #[test]
    fn augmented_three_prepare_reflect_passes() {
        let r = verify_equivalence(&augmented_cube(3).unwrap(), 4, CoinStrategy::PrepareReflect)
            .unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn dropped_x_is_detected() {
        let g = hypercube(4).unwrap();
        let mut p = compile_step(&g, CoinStrategy::PaperDiffusion).unwrap();
        let idx = p
            .gates()
            .iter()
            .rposition(|g| matches!(g, Gate::X(_)))
            .unwrap();
        p.remove(idx);
        assert!(step_deviation(&g, &p).unwrap() > 0.5);
    }

    #[test]
    fn dense_limit() {
        let g = hypercube(10).unwrap();
        assert!(matches!(
            verify_equivalence(&g, 1, CoinStrategy::PrepareReflect),
            Err(Error::TooManyWires { limit: 12, .. })
        ));
    }
}
