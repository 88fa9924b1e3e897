//! Coded BER sweep over chip SNR for several processing gains.
//! Prints the CSV report followed by the plot table.

use ldpc_dsss::gf2::PegParams;
use ldpc_dsss::sim::{csv_string, plot_data_string, MatrixSource, SimConfig, Simulation};

fn main() -> ldpc_dsss::Result<()> {
    let mut config = SimConfig::new(MatrixSource::Peg(PegParams::regular(256, 128, 3, 1)));
    config.sweep = "-12:1:-8".parse()?;
    config.gains = vec![1, 4, 10];
    config.min_errors = 200;
    config.max_frames = 5000;
    let result = Simulation::new(config)?.run()?;
    print!("{}", csv_string(&result)?);
    println!();
    print!("{}", plot_data_string(&result)?);
    Ok(())
}
