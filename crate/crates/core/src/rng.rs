//! Counter-keyed random substreams.
//!
//! Every frame draws from its own ChaCha stream keyed by the run seed, a
//! domain tag, the SNR point and the frame index, so a frame's data and
//! noise do not depend on which worker ran it or in what order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u64)]
pub enum Domain {
    Data = 0x6461_7461,
    Noise = 0x6e6f_6973,
}

pub fn substream(seed: u64, domain: Domain, snr_index: u64, frame: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(domain as u64).to_le_bytes());
    key[16..24].copy_from_slice(&snr_index.to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(frame);
    rng
}
