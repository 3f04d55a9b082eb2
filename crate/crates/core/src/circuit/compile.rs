use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::gate::{Gate, GateProgram};
use crate::cubelike::{b_patterns, CubelikeGraph};
use crate::error::{Error, Result};

/// How the coin `C'` is lowered to gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoinStrategy {
    /// `H X (i) H·MCX·H (i) X H` on the coin register; needs Δ = 2^m.
    PaperDiffusion,
    /// `W R_0 W†` with `W|0^m> = |D'>` built from RY/CRY gates; any Δ.
    PrepareReflect,
}

impl CoinStrategy {
    /// Grover diffusion when the degree fills the register, otherwise prepare-reflect.
    pub fn auto(graph: &CubelikeGraph) -> Self {
        if graph.is_power_of_two_degree() {
            CoinStrategy::PaperDiffusion
        } else {
            CoinStrategy::PrepareReflect
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CoinStrategy::PaperDiffusion => "paper-diffusion",
            CoinStrategy::PrepareReflect => "prepare-reflect",
        }
    }
}

impl fmt::Display for CoinStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoinStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-diffusion" => Ok(CoinStrategy::PaperDiffusion),
            "prepare-reflect" => Ok(CoinStrategy::PrepareReflect),
            other => Err(Error::InvalidGate(format!(
                "unknown coin strategy {other:?}"
            ))),
        }
    }
}

fn empty_program(g: &CubelikeGraph) -> GateProgram {
    GateProgram::new(g.dimension() as usize, g.coin_width() as usize)
}

fn coin_wires(g: &CubelikeGraph) -> std::ops::Range<usize> {
    let n = g.dimension() as usize;
    n..n + g.coin_width() as usize
}

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `X^m (i) H·MCX·H (i) X^m` = `2|0^m><0^m| - I`.
fn push_zero_reflection(g: &CubelikeGraph, p: &mut GateProgram) {
    let wires: Vec<usize> = coin_wires(g).collect();
    let Some((&last, rest)) = wires.split_last() else {
        return;
    };
    for &w in &wires {
        p.push_unchecked(Gate::X(w));
    }
    p.push_unchecked(Gate::GlobalPhase(I));
    p.push_unchecked(Gate::H(last));
    p.push_unchecked(Gate::mcx(rest.to_vec(), last));
    p.push_unchecked(Gate::H(last));
    p.push_unchecked(Gate::GlobalPhase(I));
    for &w in &wires {
        p.push_unchecked(Gate::X(w));
    }
}

/// Gates `W` with `W|0^m> = |D'>`, the uniform superposition of the first Δ
/// coin values.
pub fn prepare_diagonal(g: &CubelikeGraph) -> GateProgram {
    let mut p = empty_program(g);
    let n = g.dimension() as usize;
    let mut gates = Vec::new();
    prepare_uniform(
        n,
        g.degree(),
        g.coin_width() as usize,
        &mut Vec::new(),
        &mut gates,
    );
    for gate in gates {
        p.push_unchecked(gate);
    }
    p
}

fn rotation(controls: &[usize], wire: usize, angle: f64) -> Gate {
    if controls.is_empty() {
        Gate::Ry { wire, angle }
    } else {
        Gate::Cry {
            controls: controls.to_vec(),
            wire,
            angle,
        }
    }
}

/// Uniform superposition over values `0..count` of the `bits` low coin wires,
/// conditioned on every wire in `controls` being `|1>`.
fn prepare_uniform(
    n: usize,
    count: usize,
    bits: usize,
    controls: &mut Vec<usize>,
    out: &mut Vec<Gate>,
) {
    if bits == 0 {
        return;
    }
    if count == 1 << bits {
        for w in n..n + bits {
            out.push(rotation(controls, w, FRAC_PI_2));
        }
        return;
    }
    let half = 1usize << (bits - 1);
    if count <= half {
        prepare_uniform(n, count, bits - 1, controls, out);
        return;
    }
    let top = n + bits - 1;
    let angle = 2.0 * (((count - half) as f64) / count as f64).sqrt().asin();
    out.push(rotation(controls, top, angle));

    controls.push(top);
    out.push(Gate::X(top));
    prepare_uniform(n, half, bits - 1, controls, out);
    out.push(Gate::X(top));
    prepare_uniform(n, count - half, bits - 1, controls, out);
    controls.pop();
}

/// Gate program for the coin operator on the coin wires.
pub fn compile_coin(g: &CubelikeGraph, strategy: CoinStrategy) -> Result<GateProgram> {
    let mut p = empty_program(g);
    match strategy {
        CoinStrategy::PaperDiffusion => {
            if !g.is_power_of_two_degree() {
                return Err(Error::DegreeNotPowerOfTwo { delta: g.degree() });
            }
            if g.coin_width() == 0 {
                return Ok(p);
            }
            for w in coin_wires(g) {
                p.push_unchecked(Gate::H(w));
            }
            push_zero_reflection(g, &mut p);
            for w in coin_wires(g) {
                p.push_unchecked(Gate::H(w));
            }
        }
        CoinStrategy::PrepareReflect => {
            if g.coin_width() == 0 {
                return Ok(p);
            }
            let w = prepare_diagonal(g);
            for gate in w.gates().iter().rev() {
                p.push_unchecked(gate.inverse());
            }
            push_zero_reflection(g, &mut p);
            p.append(&w)?;
        }
    }
    Ok(p)
}

/// Shift `S'`: for every coin value in counting order, relabel the coin so
/// that value reads `1^m`, then flip the position bits of its generator under
/// full coin control. Slots past Δ only get the relabeling.
pub fn compile_shift(g: &CubelikeGraph) -> GateProgram {
    let mut p = empty_program(g);
    let n = g.dimension() as usize;
    let controls: Vec<usize> = coin_wires(g).collect();
    let generators = g.generators().values();
    for (k, pattern) in b_patterns(g.coin_width()).into_iter().enumerate() {
        for j in 0..g.coin_width() as usize {
            if (pattern >> j) & 1 == 1 {
                p.push_unchecked(Gate::X(n + j));
            }
        }
        if let Some(&omega) = generators.get(k) {
            for pos in (0..n).filter(|&pos| (omega >> pos) & 1 == 1) {
                p.push_unchecked(Gate::mcx(controls.clone(), pos));
            }
        }
    }
    p
}

/// Coin then shift: one application of `U = S'(C' ⊗ I)`.
pub fn compile_step(g: &CubelikeGraph, strategy: CoinStrategy) -> Result<GateProgram> {
    let mut p = compile_coin(g, strategy)?;
    p.append(&compile_shift(g))?;
    Ok(p)
}

/// Coin initialisation followed by `steps` step programs, acting on `|0…0>`.
///
/// The coin starts in `|D'>`: `H` on every coin wire when Δ = 2^m, otherwise
/// the [`prepare_diagonal`] network.
pub fn compile_walk(
    g: &CubelikeGraph,
    steps: usize,
    strategy: CoinStrategy,
) -> Result<GateProgram> {
    let step = compile_step(g, strategy)?;
    let mut p = initial_coin(g);
    for _ in 0..steps {
        p.append(&step)?;
    }
    Ok(p)
}

fn initial_coin(g: &CubelikeGraph) -> GateProgram {
    if g.is_power_of_two_degree() {
        let mut p = empty_program(g);
        for w in coin_wires(g) {
            p.push_unchecked(Gate::H(w));
        }
        p
    } else {
        prepare_diagonal(g)
    }
}
