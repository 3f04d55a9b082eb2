//! Gate programs for the walk operator: compilation, execution, lowering,
//! QASM interchange and checks against the dense operator.

pub mod compile;
pub mod dense;
pub mod exec;
pub mod gate;
pub mod lower;
pub mod qasm;
pub mod verify;

pub use compile::{
    compile_coin, compile_shift, compile_step, compile_walk, prepare_diagonal, CoinStrategy,
};
pub use exec::{execute_program, Statevector, MAX_EXEC_WIRES};
pub use gate::{Gate, GateCounts, GateProgram};
pub use lower::lower_ancilla_ladder;
pub use qasm::{emit_qasm, parse_qasm, McxLowering};
pub use verify::{
    step_deviation, verify_equivalence, walk_deviation, EquivalenceReport, EQUIVALENCE_TOLERANCE,
};
