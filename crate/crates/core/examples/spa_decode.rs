//! Encodes one frame, sends it over AWGN and decodes with both check-node forms.

use ldpc_dsss::channel::{awgn, bpsk_modulate, symbol_llr, ChannelParams, NoiseLevel};
use ldpc_dsss::gf2::{derive_generator, PegParams};
use ldpc_dsss::spa::{decode, CheckForm};
use ldpc_dsss::BitBlock;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> ldpc_dsss::Result<()> {
    let h = PegParams::regular(256, 128, 3, 1).build()?;
    let g = derive_generator(&h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let info: BitBlock = (0..g.k()).map(|_| rng.random::<bool>()).collect();
    let codeword = g.encode(&info)?;

    for snr_db in [-2.0, -1.0, 0.0, 1.0] {
        let noise = NoiseLevel::SnrDb(snr_db);
        let y = awgn(&bpsk_modulate(&codeword), &ChannelParams::new(noise, 5, 0, 0));
        let n0 = noise.n0().unwrap();
        let llrs = y.iter().map(|&v| symbol_llr(v, n0)).collect::<ldpc_dsss::Result<Vec<_>>>()?;
        let raw_errors = llrs.iter().zip(codeword.iter()).filter(|(l, c)| (**l < 0.0) != *c).count();
        for form in [CheckForm::Tanh, CheckForm::SignMagnitude] {
            let r = decode(&llrs, &h, 100, form)?;
            let errors = r.bits.hamming_distance(&codeword);
            println!(
                "{snr_db:>5} dB {form:?}: channel errors {raw_errors:>3}, decoded errors {errors:>3}, converged {}, iterations {}",
                r.converged, r.iterations
            );
        }
    }
    Ok(())
}
