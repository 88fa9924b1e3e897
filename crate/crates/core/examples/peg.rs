//! Builds a PEG code from `cols rows degrees [seed] [out.alist]`.
//!
//! `cargo run --example peg -- 256 128 3 1 code.alist`
//! `cargo run --example peg -- 512 256 2*256+4*256`

use ldpc_dsss::gf2::{derive_generator, girth, save_alist, PegParams};
use ldpc_dsss::sim::parse_degrees;

fn main() -> ldpc_dsss::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let cols: usize = arg(0, "256").parse().expect("cols");
    let rows: usize = arg(1, "128").parse().expect("rows");
    let degrees = parse_degrees(&arg(2, "3"), cols)?;
    let seed: u64 = arg(3, "1").parse().expect("seed");

    let h = PegParams { cols, rows, column_degrees: degrees, seed }.build()?;
    let g = derive_generator(&h)?;
    let rw = h.row_weights();
    println!("{}: {} edges, girth {}", h.name(), h.num_edges(), girth(&h));
    println!("check degrees {}..={}", rw.iter().min().unwrap(), rw.iter().max().unwrap());
    println!("rank {}, k = {}, rate {:.4}", g.rank(), g.k(), g.k() as f64 / cols as f64);

    if let Some(path) = args.get(4) {
        save_alist(&h, path)?;
        println!("wrote {path}");
    }
    Ok(())
}
