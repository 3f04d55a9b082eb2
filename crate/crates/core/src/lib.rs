//! Exact simulation and gate-level compilation of coined quantum walks on
//! cubelike graphs (Cayley graphs of `Z_2^n`).
//!
//! Bit `j` of a vertex label is position wire `j`; the coin register sits
//! above the position register, so amplitude index is `coin * 2^n + vertex`.

pub mod circuit;
pub mod cli;
pub mod cubelike;
pub mod error;
pub mod hitting;
pub mod walk;

pub use circuit::{
    compile_coin, compile_shift, compile_step, compile_walk, emit_qasm, execute_program,
    parse_qasm, verify_equivalence, CoinStrategy, Gate, GateCounts, GateProgram, McxLowering,
};
pub use cubelike::{
    augmented_cube, b_sequence, complete_graph, hypercube, random_cubelike, BitString,
    CubelikeGraph,
};
pub use error::{Error, Result};
pub use hitting::{find_hitting_time, one_shot_probability, HittingRecord, SweepReport};
pub use walk::{CoinModel, Distribution, WalkState};
