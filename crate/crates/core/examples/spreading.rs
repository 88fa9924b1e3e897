//! Derives spreading sequences from columns of H and round-trips a frame.

use ldpc_dsss::dsss::{derive_sequence, despread, spread, SpreadingRule};
use ldpc_dsss::ParityCheckMatrix;

fn main() -> ldpc_dsss::Result<()> {
    let h = ParityCheckMatrix::from_dense(&[
        [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 0, 0, 1, 1, 0],
        [0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 0, 1, 0, 1, 1],
    ])?;
    // Columns are 0-based here; the CLI takes them 1-based.
    for rule in [
        SpreadingRule::xor(vec![0, 1], 4),
        SpreadingRule::not(0, 5),
        SpreadingRule::xor(vec![0, 1], 12),
    ] {
        let seq = derive_sequence(&h, &rule)?;
        println!("{:?} cols {:?} G={:>2}: bits {:?} chips {:?}", rule.mode, rule.columns, rule.gain, seq.bits(), seq.chips());
    }

    match derive_sequence(&h, &SpreadingRule::xor(vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9], 4)) {
        Err(e) => println!("all ten columns: {e}"),
        Ok(seq) => println!("all ten columns: {:?}", seq.bits()),
    }

    let seq = derive_sequence(&h, &SpreadingRule::xor(vec![0, 1], 4))?;
    let symbols = [1.0, -1.0, -1.0, 1.0, 0.25];
    let chips = spread(&symbols, &seq);
    let back = despread(&chips, &seq)?;
    println!("spread {} symbols into {} chips, despread exact = {}", symbols.len(), chips.len(), back == symbols);
    Ok(())
}
