use num_complex::Complex64;

use super::gate::{Gate, GateProgram};
use crate::cubelike::{check_wires, CubelikeGraph};
use crate::error::{Error, Result};
use crate::walk::{CoinModel, Distribution, WalkState};

/// Register size the dense executor accepts.
pub const MAX_EXEC_WIRES: usize = 26;

/// Full statevector over every wire of a program. Basis index bit `w` is the
/// value of wire `w`, so with no ancillas the layout matches [`WalkState`].
#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    n: usize,
    m: usize,
    ancillas: usize,
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    pub fn basis(n: usize, m: usize, ancillas: usize, index: usize) -> Result<Self> {
        let wires = n + m + ancillas;
        check_wires(wires, MAX_EXEC_WIRES)?;
        let dim = 1usize << wires;
        if index >= dim {
            return Err(Error::InvalidGate(format!(
                "basis index {index} outside 0..{dim}"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Statevector {
            n,
            m,
            ancillas,
            amplitudes,
        })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|x| x.norm_sqr()).sum()
    }

    /// Marginal distribution of the position wires.
    pub fn position_distribution(&self) -> Distribution {
        let mask = (1usize << self.n) - 1;
        let mut probabilities = vec![0.0; 1 << self.n];
        for (i, x) in self.amplitudes.iter().enumerate() {
            probabilities[i & mask] += x.norm_sqr();
        }
        Distribution::new(self.n as u32, probabilities)
    }

    /// Probability that every ancilla reads `|0>`.
    pub fn ancilla_zero_probability(&self) -> f64 {
        let limit = 1usize << (self.n + self.m);
        self.amplitudes[..limit].iter().map(|x| x.norm_sqr()).sum()
    }

    /// Reinterprets an ancilla-free state as a walk state of `graph`.
    pub fn into_walk_state(self, graph: &CubelikeGraph, model: CoinModel) -> Result<WalkState> {
        if self.ancillas != 0
            || self.n != graph.dimension() as usize
            || self.m != graph.coin_width() as usize
        {
            return Err(Error::InvalidGate(
                "statevector layout does not match the graph registers".into(),
            ));
        }
        WalkState::from_amplitudes(graph, model, self.amplitudes)
    }

    pub fn apply(&mut self, gate: &Gate) {
        let amps = &mut self.amplitudes;
        match gate {
            Gate::H(w) => {
                let bit = 1usize << w;
                let r = std::f64::consts::FRAC_1_SQRT_2;
                for i in 0..amps.len() {
                    if i & bit == 0 {
                        let (a, b) = (amps[i], amps[i | bit]);
                        amps[i] = (a + b) * r;
                        amps[i | bit] = (a - b) * r;
                    }
                }
            }
            Gate::X(w) => flip(amps, 0, 1usize << w),
            Gate::Mcx { controls, target } => flip(amps, mask_of(controls), 1usize << target),
            Gate::GlobalPhase(z) => {
                for a in amps.iter_mut() {
                    *a *= z;
                }
            }
            Gate::Ry { wire, angle } => rotate(amps, 0, 1usize << wire, *angle),
            Gate::Cry {
                controls,
                wire,
                angle,
            } => rotate(amps, mask_of(controls), 1usize << wire, *angle),
        }
    }

    pub fn run(&mut self, program: &GateProgram) -> Result<()> {
        if program.wires() != self.n + self.m + self.ancillas {
            return Err(Error::InvalidGate(format!(
                "program has {} wires, state has {}",
                program.wires(),
                self.n + self.m + self.ancillas
            )));
        }
        for gate in program.gates() {
            self.apply(gate);
        }
        Ok(())
    }
}

fn mask_of(controls: &[usize]) -> usize {
    controls.iter().fold(0, |acc, &c| acc | (1usize << c))
}

fn flip(amps: &mut [Complex64], controls: usize, target: usize) {
    for i in 0..amps.len() {
        if i & controls == controls && i & target == 0 {
            amps.swap(i, i | target);
        }
    }
}

fn rotate(amps: &mut [Complex64], controls: usize, target: usize, angle: f64) {
    let (s, c) = (angle / 2.0).sin_cos();
    for i in 0..amps.len() {
        if i & controls == controls && i & target == 0 {
            let (a, b) = (amps[i], amps[i | target]);
            amps[i] = a * c - b * s;
            amps[i | target] = a * s + b * c;
        }
    }
}

/// Runs `program` on the computational basis state `initial`.
pub fn execute_program(program: &GateProgram, initial: usize) -> Result<Statevector> {
    let mut state = Statevector::basis(
        program.position_wires(),
        program.coin_wires(),
        program.ancillas(),
        initial,
    )?;
    state.run(program)?;
    Ok(state)
}
