//! Writes a small parity-check matrix to an alist file and reads it back.

use ldpc_dsss::gf2::{load_alist, save_alist, to_alist_string};
use ldpc_dsss::ParityCheckMatrix;

fn main() -> ldpc_dsss::Result<()> {
    let h = ParityCheckMatrix::from_row_lists(
        5,
        10,
        vec![
            vec![0, 1, 2, 3],
            vec![0, 4, 5, 6],
            vec![1, 4, 7, 8],
            vec![2, 5, 7, 9],
            vec![3, 6, 8, 9],
        ],
    )?;
    print!("{}", to_alist_string(&h));

    let path = std::env::temp_dir().join("ldpc_dsss_example.alist");
    save_alist(&h, &path)?;
    let back = load_alist(&path)?;
    println!("reloaded {} from {}: identical = {}", back.name(), path.display(), back == h);

    match ldpc_dsss::gf2::parse_alist("10 5\n2 4\n") {
        Err(e) => println!("truncated file rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
