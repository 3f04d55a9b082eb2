use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Gate {
    H(usize),
    X(usize),
    /// Flips `target` when every control is `|1>`; no controls means a bare X.
    Mcx {
        controls: Vec<usize>,
        target: usize,
    },
    /// Global phase factor of unit modulus.
    GlobalPhase(Complex64),
    Ry {
        wire: usize,
        angle: f64,
    },
    /// `RY(angle)` on `wire` when every control is `|1>`.
    Cry {
        controls: Vec<usize>,
        wire: usize,
        angle: f64,
    },
}

impl Gate {
    pub fn mcx(controls: impl Into<Vec<usize>>, target: usize) -> Gate {
        Gate::Mcx {
            controls: controls.into(),
            target,
        }
    }

    /// Wires touched, targets last.
    pub fn wires(&self) -> Vec<usize> {
        match self {
            Gate::H(w) | Gate::X(w) | Gate::Ry { wire: w, .. } => vec![*w],
            Gate::Mcx { controls, target } => controls
                .iter()
                .copied()
                .chain(std::iter::once(*target))
                .collect(),
            Gate::Cry { controls, wire, .. } => controls
                .iter()
                .copied()
                .chain(std::iter::once(*wire))
                .collect(),
            Gate::GlobalPhase(_) => Vec::new(),
        }
    }

    /// Inverse gate. Every gate here is self-inverse except the rotations
    /// and non-real phases.
    pub fn inverse(&self) -> Gate {
        match self {
            Gate::Ry { wire, angle } => Gate::Ry {
                wire: *wire,
                angle: -angle,
            },
            Gate::Cry {
                controls,
                wire,
                angle,
            } => Gate::Cry {
                controls: controls.clone(),
                wire: *wire,
                angle: -angle,
            },
            Gate::GlobalPhase(z) => Gate::GlobalPhase(z.conj()),
            g => g.clone(),
        }
    }

    fn validate(&self, wires: usize) -> Result<()> {
        let touched = self.wires();
        if let Some(&w) = touched.iter().find(|&&w| w >= wires) {
            return Err(Error::InvalidGate(format!(
                "wire {w} out of range for {wires} wires"
            )));
        }
        let mut sorted = touched.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidGate(format!("repeated wire in `{self}`")));
        }
        if let Gate::GlobalPhase(z) = self {
            if (z.norm() - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidGate(format!(
                    "phase {z} is not of unit modulus"
                )));
            }
        }
        Ok(())
    }
}

fn join(wires: &[usize]) -> String {
    wires
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn format_phase(z: Complex64) -> String {
    let exact = |a: f64, b: f64| (z.re - a).abs() < 1e-15 && (z.im - b).abs() < 1e-15;
    if exact(0.0, 1.0) {
        "i".into()
    } else if exact(0.0, -1.0) {
        "-i".into()
    } else if exact(1.0, 0.0) {
        "1".into()
    } else if exact(-1.0, 0.0) {
        "-1".into()
    } else {
        format!("{},{}", z.re, z.im)
    }
}

pub(crate) fn parse_phase(s: &str) -> Option<Complex64> {
    match s.trim() {
        "i" => Some(Complex64::new(0.0, 1.0)),
        "-i" => Some(Complex64::new(0.0, -1.0)),
        "1" => Some(Complex64::new(1.0, 0.0)),
        "-1" => Some(Complex64::new(-1.0, 0.0)),
        other => {
            let (re, im) = other.split_once(',')?;
            Some(Complex64::new(
                re.trim().parse().ok()?,
                im.trim().parse().ok()?,
            ))
        }
    }
}

/// One line of the program dump format: `H 2`, `X 4`, `MCX 4,5 -> 0`,
/// `GPHASE i`, `RY 4 1.23…`, `CRY 5 -> 4 1.23…`.
impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(w) => write!(f, "H {w}"),
            Gate::X(w) => write!(f, "X {w}"),
            Gate::Mcx { controls, target } => write!(f, "MCX {} -> {target}", join(controls)),
            Gate::GlobalPhase(z) => write!(f, "GPHASE {}", format_phase(*z)),
            Gate::Ry { wire, angle } => write!(f, "RY {wire} {angle}"),
            Gate::Cry {
                controls,
                wire,
                angle,
            } => write!(f, "CRY {} -> {wire} {angle}", join(controls)),
        }
    }
}

fn parse_wire_list(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(|w| w.trim().parse().ok()).collect()
}

fn parse_gate_line(line: &str) -> Option<Gate> {
    let (op, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    let rest = rest.trim();
    match op {
        "H" => Some(Gate::H(rest.parse().ok()?)),
        "X" => Some(Gate::X(rest.parse().ok()?)),
        "GPHASE" => Some(Gate::GlobalPhase(parse_phase(rest)?)),
        "RY" => {
            let (wire, angle) = rest.split_once(char::is_whitespace)?;
            Some(Gate::Ry {
                wire: wire.parse().ok()?,
                angle: angle.trim().parse().ok()?,
            })
        }
        "MCX" => {
            let (controls, target) = rest.split_once("->")?;
            Some(Gate::Mcx {
                controls: parse_wire_list(controls)?,
                target: target.trim().parse().ok()?,
            })
        }
        "CRY" => {
            let (controls, tail) = rest.split_once("->")?;
            let (wire, angle) = tail.trim().split_once(char::is_whitespace)?;
            Some(Gate::Cry {
                controls: parse_wire_list(controls)?,
                wire: wire.parse().ok()?,
                angle: angle.trim().parse().ok()?,
            })
        }
        _ => None,
    }
}

/// Ordered gate list over `n` position wires, `m` coin wires and optional
/// ancillas. Wires `0..n` hold the position (wire `j` is bit `x_j`), wires
/// `n..n+m` hold the coin (wire `n` is its least significant bit), ancillas
/// follow.
#[derive(Clone, Debug, PartialEq)]
pub struct GateProgram {
    n: usize,
    m: usize,
    ancillas: usize,
    gates: Vec<Gate>,
}

impl GateProgram {
    pub fn new(n: usize, m: usize) -> Self {
        Self::with_ancillas(n, m, 0)
    }

    pub fn with_ancillas(n: usize, m: usize, ancillas: usize) -> Self {
        GateProgram {
            n,
            m,
            ancillas,
            gates: Vec::new(),
        }
    }

    pub fn position_wires(&self) -> usize {
        self.n
    }

    pub fn coin_wires(&self) -> usize {
        self.m
    }

    pub fn ancillas(&self) -> usize {
        self.ancillas
    }

    pub fn wires(&self) -> usize {
        self.n + self.m + self.ancillas
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.wires())?;
        self.gates.push(gate);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, gate: Gate) {
        debug_assert!(gate.validate(self.wires()).is_ok(), "{gate}");
        self.gates.push(gate);
    }

    /// Appends `other`, which must have the same register layout.
    pub fn append(&mut self, other: &GateProgram) -> Result<()> {
        if (other.n, other.m, other.ancillas) != (self.n, self.m, self.ancillas) {
            return Err(Error::InvalidGate(format!(
                "cannot append a program over ({}, {}, {}) wires to one over ({}, {}, {})",
                other.n, other.m, other.ancillas, self.n, self.m, self.ancillas
            )));
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    /// Drops the gate at `index`; used to build mutants in verification tests.
    pub fn remove(&mut self, index: usize) -> Gate {
        self.gates.remove(index)
    }

    pub fn counts(&self) -> GateCounts {
        let mut c = GateCounts::default();
        for g in &self.gates {
            match g {
                Gate::H(_) => c.h_count += 1,
                Gate::X(_) => c.x_count += 1,
                Gate::Mcx { .. } => c.mcx_count += 1,
                Gate::GlobalPhase(_) => c.phase_count += 1,
                Gate::Ry { .. } | Gate::Cry { .. } => c.rotation_count += 1,
            }
        }
        c
    }

    /// Number of X gates on each wire.
    pub fn x_per_wire(&self) -> Vec<usize> {
        let mut per = vec![0; self.wires()];
        for g in &self.gates {
            if let Gate::X(w) = g {
                per[*w] += 1;
            }
        }
        per
    }

    /// Product of all global-phase factors.
    pub fn total_phase(&self) -> Complex64 {
        self.gates
            .iter()
            .filter_map(|g| match g {
                Gate::GlobalPhase(z) => Some(*z),
                _ => None,
            })
            .fold(Complex64::new(1.0, 0.0), |acc, z| acc * z)
    }

    /// Text dump: header `# n=<n> m=<m> ancillas=<a>` then one gate per line.
    pub fn to_dump(&self) -> String {
        let mut out = format!("# n={} m={} ancillas={}\n", self.n, self.m, self.ancillas);
        for g in &self.gates {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<GateProgram> {
        let mut program: Option<GateProgram> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(header) = line.strip_prefix('#') {
                if program.is_none() {
                    program = Some(parse_header(header).ok_or_else(|| {
                        Error::parse(line_no, "expected `# n=<n> m=<m> [ancillas=<a>]`")
                    })?);
                }
                continue;
            }
            let p = program
                .as_mut()
                .ok_or_else(|| Error::parse(line_no, "gate before header"))?;
            let gate = parse_gate_line(line)
                .ok_or_else(|| Error::parse(line_no, format!("unrecognized gate {line:?}")))?;
            p.push(gate)
                .map_err(|e| Error::parse(line_no, e.to_string()))?;
        }
        program.ok_or_else(|| Error::parse(0, "empty program"))
    }
}

fn parse_header(header: &str) -> Option<GateProgram> {
    let mut n = None;
    let mut m = None;
    let mut ancillas = 0;
    for field in header.split_whitespace() {
        let (key, value) = field.split_once('=')?;
        let value: usize = value.parse().ok()?;
        match key {
            "n" => n = Some(value),
            "m" => m = Some(value),
            "ancillas" => ancillas = value,
            _ => return None,
        }
    }
    Some(GateProgram::with_ancillas(n?, m?, ancillas))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GateCounts {
    pub x_count: usize,
    pub mcx_count: usize,
    pub h_count: usize,
    pub phase_count: usize,
    pub rotation_count: usize,
}

impl GateCounts {
    pub fn total(&self) -> usize {
        self.x_count + self.mcx_count + self.h_count + self.phase_count + self.rotation_count
    }
}
