use super::gate::{Gate, GateProgram};

/// Ancillas needed to AND `controls` into a single wire; two or fewer
/// controls stay native (CX, Toffoli).
fn ladder_len(controls: usize) -> usize {
    if controls >= 3 {
        controls - 1
    } else {
        0
    }
}

fn cry_ladder_len(controls: usize) -> usize {
    if controls >= 2 {
        controls - 1
    } else {
        0
    }
}

/// Toffolis computing `AND(controls)` into `anc[len - 1]`, with partial
/// products on the earlier ancillas.
fn and_chain(controls: &[usize], first_ancilla: usize) -> Vec<Gate> {
    let mut out = vec![Gate::mcx(vec![controls[0], controls[1]], first_ancilla)];
    for (i, &c) in controls.iter().enumerate().skip(2) {
        out.push(Gate::mcx(
            vec![first_ancilla + i - 2, c],
            first_ancilla + i - 1,
        ));
    }
    out
}

/// Rewrites every MCX with three or more controls as a Toffoli V-chain and
/// every CRY with two or more controls as a Toffoli chain plus a singly
/// controlled RY. The result has as many ancillas as the widest gate needs
/// (`m - 1` for compiled walk programs with `m >= 3`), appended after any
/// existing ancillas and each returned to `|0>`.
pub fn lower_ancilla_ladder(program: &GateProgram) -> GateProgram {
    let needed = program
        .gates()
        .iter()
        .map(|g| match g {
            Gate::Mcx { controls, .. } => ladder_len(controls.len()),
            Gate::Cry { controls, .. } => cry_ladder_len(controls.len()),
            _ => 0,
        })
        .max()
        .unwrap_or(0);
    let ladder = program.wires();
    let mut out = GateProgram::with_ancillas(
        program.position_wires(),
        program.coin_wires(),
        program.ancillas() + needed,
    );

    for gate in program.gates() {
        match gate {
            Gate::Mcx { controls, target } if controls.len() >= 3 => {
                let chain = and_chain(controls, ladder);
                let top = ladder + controls.len() - 2;
                for g in &chain {
                    out.push_unchecked(g.clone());
                }
                out.push_unchecked(Gate::mcx(vec![top], *target));
                for g in chain.iter().rev() {
                    out.push_unchecked(g.clone());
                }
            }
            Gate::Cry {
                controls,
                wire,
                angle,
            } if controls.len() >= 2 => {
                let chain = and_chain(controls, ladder);
                let top = ladder + controls.len() - 2;
                for g in &chain {
                    out.push_unchecked(g.clone());
                }
                out.push_unchecked(Gate::Cry {
                    controls: vec![top],
                    wire: *wire,
                    angle: *angle,
                });
                for g in chain.iter().rev() {
                    out.push_unchecked(g.clone());
                }
            }
            other => out.push_unchecked(other.clone()),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::compile::{compile_step, CoinStrategy};
    use crate::circuit::exec::execute_program;
    use crate::cubelike::{complete_graph, hypercube};

    #[test]
    fn small_coins_need_no_ancillas() {
        let p = compile_step(&hypercube(4).unwrap(), CoinStrategy::PaperDiffusion).unwrap();
        let lowered = lower_ancilla_ladder(&p);
        assert_eq!(lowered.ancillas(), 0);
        assert_eq!(lowered, p);
    }

    #[test]
    fn ladder_restores_ancillas() {
        let g = complete_graph(3).unwrap();
        assert_eq!(g.coin_width(), 3);
        let p = compile_step(&g, CoinStrategy::PrepareReflect).unwrap();
        let lowered = lower_ancilla_ladder(&p);
        assert_eq!(lowered.ancillas(), 2);
        assert!(lowered.gates().iter().all(|g| match g {
            Gate::Mcx { controls, .. } => controls.len() <= 2,
            Gate::Cry { controls, .. } => controls.len() <= 1,
            _ => true,
        }));
        for col in [0, 5, 17, 42, 63] {
            let a = execute_program(&p, col).unwrap();
            let b = execute_program(&lowered, col).unwrap();
            assert!((b.ancilla_zero_probability() - 1.0).abs() < 1e-12);
            let dev = a
                .amplitudes()
                .iter()
                .zip(b.amplitudes())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            assert!(dev < 1e-12);
        }
    }
}
