//! Girth of a hand-written matrix and of PEG codes with growing length.

use ldpc_dsss::gf2::{girth, peg_construct};
use ldpc_dsss::ParityCheckMatrix;

fn main() -> ldpc_dsss::Result<()> {
    let h = ParityCheckMatrix::from_dense(&[
        [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 0, 0, 1, 1, 0],
        [0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 0, 1, 0, 1, 1],
    ])?;
    println!("{}: girth {}", h.name(), girth(&h));

    let tree = ParityCheckMatrix::from_row_lists(2, 5, vec![vec![0, 1, 2], vec![2, 3, 4]])?;
    println!("{}: girth {}", tree.name(), girth(&tree));

    for m in [32, 64, 128, 256, 512, 1024] {
        let h = peg_construct(m, m / 2, &vec![3; m], 1)?;
        println!("{}: girth {}", h.name(), girth(&h));
    }
    Ok(())
}
