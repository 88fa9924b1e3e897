//! Uncoded BPSK over AWGN against the closed-form bit error rate.

use ldpc_dsss::channel::{awgn, ber_bpsk_uncoded_theory, bpsk_hard_decision, bpsk_modulate, ChannelParams, NoiseLevel};
use ldpc_dsss::BitBlock;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    const FRAMES: u64 = 2000;
    const LEN: usize = 1024;
    println!("snr_db  measured    theory");
    for (k, snr_db) in [0.0, 2.0, 4.0, 6.0].into_iter().enumerate() {
        let mut errors = 0;
        for frame in 0..FRAMES {
            let mut rng = ChaCha8Rng::seed_from_u64(frame);
            let bits: BitBlock = (0..LEN).map(|_| rng.random::<bool>()).collect();
            let params = ChannelParams::new(NoiseLevel::SnrDb(snr_db), 3, k as u64, frame);
            let y = awgn(&bpsk_modulate(&bits), &params);
            errors += bpsk_hard_decision(&y).hamming_distance(&bits);
        }
        let ber = errors as f64 / (FRAMES as usize * LEN) as f64;
        println!("{snr_db:>6}  {ber:.3e}  {:.3e}", ber_bpsk_uncoded_theory(snr_db));
    }
}
