//! OpenQASM 2.0 emission and a reader for exactly the dialect emitted here.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use super::gate::{format_phase, parse_phase, Gate, GateProgram};
use super::lower::lower_ancilla_ladder;
use crate::error::{Error, Result};

/// How multi-controlled gates reach the QASM text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum McxLowering {
    /// One `opaque mcx_<k>` declaration per arity `k >= 3`.
    #[default]
    Opaque,
    /// Toffoli V-chains over an `anc` register.
    AncillaLadder,
}

impl McxLowering {
    pub fn name(self) -> &'static str {
        match self {
            McxLowering::Opaque => "opaque",
            McxLowering::AncillaLadder => "ancilla-ladder",
        }
    }
}

impl FromStr for McxLowering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "opaque" => Ok(McxLowering::Opaque),
            "ancilla-ladder" => Ok(McxLowering::AncillaLadder),
            other => Err(Error::InvalidGate(format!(
                "unknown MCX lowering {other:?}"
            ))),
        }
    }
}

const C1RY_DEF: &str = "gate c1ry(theta) c,t { ry(theta/2) t; cx c,t; ry(-theta/2) t; cx c,t; }";

struct Namer {
    base: usize,
}

impl Namer {
    fn wire(&self, w: usize) -> String {
        if w < self.base {
            format!("q[{w}]")
        } else {
            format!("anc[{}]", w - self.base)
        }
    }

    fn list(&self, wires: &[usize]) -> String {
        wires
            .iter()
            .map(|&w| self.wire(w))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn operand_names(prefix: &str, k: usize) -> String {
    (0..k)
        .map(|i| format!("{prefix}{i}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// OpenQASM 2.0 text for `program`, ending with a measurement of every
/// position wire into `c`. Global phases become `// gphase` comments; their
/// product is recorded in the header.
pub fn emit_qasm(program: &GateProgram, lowering: McxLowering) -> String {
    let lowered;
    let p = match lowering {
        McxLowering::Opaque => program,
        McxLowering::AncillaLadder => {
            lowered = lower_ancilla_ladder(program);
            &lowered
        }
    };
    let n = p.position_wires();
    let base = n + p.coin_wires();
    let namer = Namer { base };

    let mut mcx_arities = BTreeSet::new();
    let mut mcry_arities = BTreeSet::new();
    let mut needs_c1ry = false;
    for g in p.gates() {
        match g {
            Gate::Mcx { controls, .. } if controls.len() >= 3 => {
                mcx_arities.insert(controls.len());
            }
            Gate::Cry { controls, .. } if controls.len() == 1 => needs_c1ry = true,
            Gate::Cry { controls, .. } if controls.len() >= 2 => {
                mcry_arities.insert(controls.len());
            }
            _ => {}
        }
    }

    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "// global phase {}", format_phase(p.total_phase()));
    for k in &mcx_arities {
        let _ = writeln!(out, "opaque mcx_{k} {},t;", operand_names("c", *k));
    }
    for k in &mcry_arities {
        let _ = writeln!(out, "opaque mcry_{k}(theta) {},t;", operand_names("c", *k));
    }
    if needs_c1ry {
        out.push_str(C1RY_DEF);
        out.push('\n');
    }
    let _ = writeln!(out, "qreg q[{base}];");
    if p.ancillas() > 0 {
        let _ = writeln!(out, "qreg anc[{}];", p.ancillas());
    }
    let _ = writeln!(out, "creg c[{n}];");

    for g in p.gates() {
        match g {
            Gate::H(w) => {
                let _ = writeln!(out, "h {};", namer.wire(*w));
            }
            Gate::X(w) => {
                let _ = writeln!(out, "x {};", namer.wire(*w));
            }
            Gate::Mcx { controls, target } => {
                let operands = namer.list(&[controls.as_slice(), &[*target]].concat());
                let _ = match controls.len() {
                    0 => writeln!(out, "x {operands};"),
                    1 => writeln!(out, "cx {operands};"),
                    2 => writeln!(out, "ccx {operands};"),
                    k => writeln!(out, "mcx_{k} {operands};"),
                };
            }
            Gate::GlobalPhase(z) => {
                let _ = writeln!(out, "// gphase {}", format_phase(*z));
            }
            Gate::Ry { wire, angle } => {
                let _ = writeln!(out, "ry({angle:?}) {};", namer.wire(*wire));
            }
            Gate::Cry {
                controls,
                wire,
                angle,
            } => {
                let operands = namer.list(&[controls.as_slice(), &[*wire]].concat());
                let _ = match controls.len() {
                    0 => writeln!(out, "ry({angle:?}) {operands};"),
                    1 => writeln!(out, "c1ry({angle:?}) {operands};"),
                    k => writeln!(out, "mcry_{k}({angle:?}) {operands};"),
                };
            }
        }
    }
    for j in 0..n {
        let _ = writeln!(out, "measure q[{j}] -> c[{j}];");
    }
    out
}

fn parse_operand(s: &str, qsize: usize) -> Option<usize> {
    let s = s.trim();
    let (reg, rest) = s.split_once('[')?;
    let idx: usize = rest.strip_suffix(']')?.parse().ok()?;
    match reg {
        "q" if idx < qsize => Some(idx),
        "anc" => Some(qsize + idx),
        _ => None,
    }
}

fn parse_angle(s: &str) -> Option<f64> {
    s.trim().parse().ok()
}

/// Reads text produced by [`emit_qasm`] back into a program. Measurements
/// and declarations are skipped; `// gphase` comments become phase gates.
pub fn parse_qasm(text: &str) -> Result<GateProgram> {
    let mut qsize = None;
    let mut ancillas = 0usize;
    let mut csize = None;
    let mut gates = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("// gphase ") {
            let z = parse_phase(rest.trim()).ok_or_else(|| Error::parse(line_no, "bad phase"))?;
            gates.push(Gate::GlobalPhase(z));
            continue;
        }
        if line.is_empty()
            || line.starts_with("//")
            || line.starts_with("OPENQASM")
            || line.starts_with("include")
            || line.starts_with("opaque")
            || line.starts_with("gate ")
            || line.starts_with("measure")
        {
            continue;
        }
        let body = line
            .strip_suffix(';')
            .ok_or_else(|| Error::parse(line_no, "missing `;`"))?;
        let size_of = |decl: &str| -> Result<usize> {
            decl.split_once('[')
                .and_then(|(_, r)| r.strip_suffix(']'))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::parse(line_no, "bad register size"))
        };
        if let Some(decl) = body.strip_prefix("qreg ") {
            if decl.starts_with("anc") {
                ancillas = size_of(decl)?;
            } else {
                qsize = Some(size_of(decl)?);
            }
            continue;
        }
        if let Some(decl) = body.strip_prefix("creg ") {
            csize = Some(size_of(decl)?);
            continue;
        }

        let q = qsize.ok_or_else(|| Error::parse(line_no, "gate before qreg"))?;
        let (head, args) = body
            .split_once(' ')
            .ok_or_else(|| Error::parse(line_no, "expected operands"))?;
        let wires = args
            .split(',')
            .map(|a| parse_operand(a, q))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::parse(line_no, format!("bad operands {args:?}")))?;
        let (name, angle) = match head.split_once('(') {
            Some((name, rest)) => {
                let a = rest
                    .strip_suffix(')')
                    .and_then(parse_angle)
                    .ok_or_else(|| Error::parse(line_no, "bad angle"))?;
                (name, Some(a))
            }
            None => (head, None),
        };
        let (last, rest) = wires
            .split_last()
            .ok_or_else(|| Error::parse(line_no, "no operands"))?;
        let gate = match (name, angle) {
            ("h", None) if rest.is_empty() => Gate::H(*last),
            ("x", None) if rest.is_empty() => Gate::X(*last),
            ("cx", None) | ("ccx", None) => Gate::mcx(rest.to_vec(), *last),
            (name, None) if name.starts_with("mcx_") => Gate::mcx(rest.to_vec(), *last),
            ("ry", Some(angle)) if rest.is_empty() => Gate::Ry { wire: *last, angle },
            ("c1ry", Some(angle)) => Gate::Cry {
                controls: rest.to_vec(),
                wire: *last,
                angle,
            },
            (name, Some(angle)) if name.starts_with("mcry_") => Gate::Cry {
                controls: rest.to_vec(),
                wire: *last,
                angle,
            },
            _ => {
                return Err(Error::parse(
                    line_no,
                    format!("unsupported statement {line:?}"),
                ))
            }
        };
        gates.push(gate);
    }

    let q = qsize.ok_or_else(|| Error::parse(0, "missing qreg q"))?;
    let n = csize.ok_or_else(|| Error::parse(0, "missing creg c"))?;
    if n > q {
        return Err(Error::parse(0, "creg wider than qreg"));
    }
    let mut program = GateProgram::with_ancillas(n, q - n, ancillas);
    for g in gates {
        program.push(g)?;
    }
    Ok(program)
}
