//! Monte Carlo link simulation.
//!
//! A [`Simulation`] resolves a [`SimConfig`] into a code, a generator and one
//! spreading sequence per processing gain, then runs frames through
//! encode → BPSK → spread → AWGN → despread → LLR → decode at every
//! (SNR, gain) point. Frames run in parallel in fixed-size batches; counts
//! are pooled, and every frame's randomness is keyed by
//! (seed, SNR index, frame index), so results do not depend on the number
//! of worker threads.

mod config;
mod engine;
mod output;

pub use config::{parse_degrees, Coding, MatrixSource, SimConfig, SnrSweep};
pub use engine::{run_sweep, FrameRecord, OperatingPoint, PointRecord, Simulation, SweepResult};
pub use output::{csv_string, emit_plot_data, plot_data_string, write_csv};
