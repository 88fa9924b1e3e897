//! Derives a systematic generator from H and encodes every message.

use ldpc_dsss::gf2::derive_generator;
use ldpc_dsss::{BitBlock, ParityCheckMatrix};

fn main() -> ldpc_dsss::Result<()> {
    let h = ParityCheckMatrix::from_dense(&[
        [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 0, 0, 1, 1, 0],
        [0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 0, 1, 0, 1, 1],
    ])?;
    let g = derive_generator(&h)?;
    println!("{}: rank {}, k = {}, dropped rows {:?}", h.name(), g.rank(), g.k(), g.dropped_rows());
    println!("systematic positions: {:?}", g.systematic_positions());
    for row in g.rows() {
        println!("  {row}");
    }

    let mut weights = vec![0usize; h.cols() + 1];
    for d in 0u32..1 << g.k() {
        let info: BitBlock = (0..g.k()).map(|t| (d >> t) & 1 == 1).collect();
        let c = g.encode(&info)?;
        assert!(h.is_codeword(&c)?);
        assert_eq!(g.extract_info(&c)?, info);
        weights[c.count_ones()] += 1;
    }
    println!("weight distribution: {weights:?}");
    Ok(())
}
