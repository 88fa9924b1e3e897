//! BPSK over AWGN.
//!
//! Bits map 0 → -1, 1 → +1 so that `-4y/N0` is exactly
//! `log p(y|0)/p(y|1)` for noise of variance `N0/2`. Transmitted energy is
//! one per chip, so `N0 = 10^(-snr_db/10)` with `snr_db` read as chip-level
//! Es/N0.

use crate::bits::BitBlock;
use crate::error::{Error, Result};
use crate::rng::{substream, Domain};
use rand_distr::{Distribution, StandardNormal};
use std::fmt;
use std::str::FromStr;

/// Chip-level noise setting.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NoiseLevel {
    /// No noise at all; samples pass through untouched.
    Noiseless,
    /// Chip Es/N0 in dB.
    SnrDb(f64),
}

impl NoiseLevel {
    /// Noise spectral density, `None` when noiseless.
    pub fn n0(self) -> Option<f64> {
        match self {
            NoiseLevel::Noiseless => None,
            NoiseLevel::SnrDb(db) => Some(10f64.powf(-db / 10.0)),
        }
    }

    /// Per-sample noise variance `N0/2`.
    pub fn variance(self) -> Option<f64> {
        self.n0().map(|n0| n0 / 2.0)
    }
}

/// What an SNR figure on the command line refers to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SnrReference {
    /// Es/N0 per transmitted chip, held fixed as the processing gain varies.
    #[default]
    Chip,
    /// Eb/N0 per information bit.
    EbN0,
}

impl SnrReference {
    /// Converts a figure in this reference to chip-level Es/N0 in dB.
    ///
    /// Each information bit occupies `gain / rate` chips, so for `EbN0` the
    /// chip energy is the bit energy divided by that factor.
    pub fn to_chip_db(self, snr_db: f64, rate: f64, gain: usize) -> f64 {
        match self {
            SnrReference::Chip => snr_db,
            SnrReference::EbN0 => snr_db + 10.0 * (rate / gain as f64).log10(),
        }
    }
}

impl FromStr for SnrReference {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chip" => Ok(SnrReference::Chip),
            "ebn0" => Ok(SnrReference::EbN0),
            other => Err(Error::Config(format!(
                "unknown SNR reference `{other}`, expected chip or ebn0"
            ))),
        }
    }
}

impl fmt::Display for SnrReference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SnrReference::Chip => "chip",
            SnrReference::EbN0 => "ebn0",
        })
    }
}

/// Channel state for one frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelParams {
    pub noise: NoiseLevel,
    pub seed: u64,
    pub snr_index: u64,
    pub frame: u64,
}

impl ChannelParams {
    pub fn new(noise: NoiseLevel, seed: u64, snr_index: u64, frame: u64) -> Self {
        ChannelParams {
            noise,
            seed,
            snr_index,
            frame,
        }
    }
}

pub fn bpsk_modulate(bits: &BitBlock) -> Vec<f64> {
    bits.iter().map(|b| if b { 1.0 } else { -1.0 }).collect()
}

/// Sign decision matching [`bpsk_modulate`]; zero decides 0.
pub fn bpsk_hard_decision(symbols: &[f64]) -> BitBlock {
    symbols.iter().map(|&y| y > 0.0).collect()
}

/// Adds i.i.d. Gaussian noise of variance `N0/2` from the frame's substream.
pub fn awgn(samples: &[f64], params: &ChannelParams) -> Vec<f64> {
    let Some(var) = params.noise.variance() else {
        return samples.to_vec();
    };
    let sigma = var.sqrt();
    let mut rng = substream(params.seed, Domain::Noise, params.snr_index, params.frame);
    samples
        .iter()
        .map(|&x| {
            let z: f64 = StandardNormal.sample(&mut rng);
            x + sigma * z
        })
        .collect()
}

/// Channel LLR of a despread symbol, with `N0_eff = N0 / G`.
pub fn symbol_llr(y: f64, n0_effective: f64) -> Result<f64> {
    crate::spa::init_channel_llr(y, n0_effective)
}

/// `Q(√(2·Eb/N0))`, the bit error rate of uncoded BPSK.
pub fn ber_bpsk_uncoded_theory(ebn0_db: f64) -> f64 {
    let ebn0 = 10f64.powf(ebn0_db / 10.0);
    0.5 * libm::erfc(ebn0.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spa::hard_decision;

    fn stats(v: &[f64]) -> (f64, f64) {
        let n = v.len() as f64;
        let mean = v.iter().sum::<f64>() / n;
        let var = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        (mean, var)
    }

    #[test]
    fn modulation_table() {
        let bits = BitBlock::from_bits(&[0, 1, 0]);
        assert_eq!(bpsk_modulate(&bits), vec![-1.0, 1.0, -1.0]);
        assert!(bpsk_modulate(&BitBlock::zeros(5)).iter().all(|&s| s == -1.0));
        let b = BitBlock::from_bits(&[1, 1, 0, 1, 0, 0, 1]);
        assert_eq!(bpsk_hard_decision(&bpsk_modulate(&b)), b);
    }

    #[test]
    fn noiseless_is_identity() {
        let x = vec![0.3, -1.0, 7.0];
        assert_eq!(awgn(&x, &ChannelParams::new(NoiseLevel::Noiseless, 1, 0, 0)), x);
    }

    #[test]
    fn zero_db_noise_statistics() {
        let n = 1_000_000;
        let params = ChannelParams::new(NoiseLevel::SnrDb(0.0), 42, 0, 0);
        assert_eq!(params.noise.n0(), Some(1.0));
        let noise = awgn(&vec![0.0; n], &params);
        let (mean, var) = stats(&noise);
        assert!((var - 0.5).abs() / 0.5 < 0.01, "variance {var}");
        assert!(mean.abs() < 3.0 * (0.5f64 / n as f64).sqrt(), "mean {mean}");
    }

    #[test]
    fn noise_depends_only_on_key() {
        let p = ChannelParams::new(NoiseLevel::SnrDb(3.0), 9, 2, 17);
        let x = vec![0.0; 64];
        assert_eq!(awgn(&x, &p), awgn(&x, &p));
        let q = ChannelParams { frame: 18, ..p };
        assert_ne!(awgn(&x, &p), awgn(&x, &q));
    }

    #[test]
    fn llr_after_despreading() {
        assert_eq!(symbol_llr(1.0, 1.0 / 1.0).unwrap(), -4.0);
        assert_eq!(symbol_llr(1.0, 1.0 / 4.0).unwrap(), -16.0);
        assert_eq!(symbol_llr(0.0, 0.37).unwrap(), 0.0);
    }

    #[test]
    fn sign_convention_end_to_end() {
        let n0 = 0.8;
        let zero = bpsk_modulate(&BitBlock::from_bits(&[0]))[0];
        let one = bpsk_modulate(&BitBlock::from_bits(&[1]))[0];
        let l0 = symbol_llr(zero, n0).unwrap();
        let l1 = symbol_llr(one, n0).unwrap();
        assert!(l0 > 0.0 && !hard_decision(l0));
        assert!(l1 < 0.0 && hard_decision(l1));
        assert_eq!(l0, 4.0 / n0);
    }

    #[test]
    fn uncoded_theory() {
        // Q(√2) = 0.5·erfc(1)
        let q = ber_bpsk_uncoded_theory(0.0);
        assert!((q - 0.078_649_603_525_142_57).abs() < 1e-12, "{q}");
        assert_eq!(ber_bpsk_uncoded_theory(f64::INFINITY), 0.0);
        assert_eq!(ber_bpsk_uncoded_theory(f64::NEG_INFINITY), 0.5);
        assert!(ber_bpsk_uncoded_theory(400.0) < 1e-300);
    }

    #[test]
    fn ebn0_reference_conversion() {
        assert_eq!(SnrReference::Chip.to_chip_db(5.0, 0.5, 4), 5.0);
        let chip = SnrReference::EbN0.to_chip_db(5.0, 0.5, 4);
        assert!((chip - (5.0 - 10.0 * 8f64.log10())).abs() < 1e-12);
        assert_eq!(SnrReference::EbN0.to_chip_db(2.0, 1.0, 1), 2.0);
    }
}
