use super::config::{Coding, SimConfig};
use crate::bits::BitBlock;
use crate::channel::{awgn, bpsk_hard_decision, bpsk_modulate, symbol_llr, ChannelParams, NoiseLevel, SnrReference};
use crate::dsss::{derive_sequence, despread, spread, SpreadingRule, SpreadingSequence};
use crate::error::{Error, Result};
use crate::gf2::{derive_generator, GeneratorMatrix, ParityCheckMatrix};
use crate::rng::{substream, Domain};
use crate::spa::{hard_decision, DecoderWorkspace, LLR_CLAMP};
use rand::Rng;
use rayon::prelude::*;
use std::time::{Duration, Instant};

/// Frames per batch after the initial `runs` frames. Stopping decisions are
/// only taken at batch boundaries.
const BATCH: u64 = 256;

/// One (SNR, processing gain) point of a sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OperatingPoint {
    pub snr_index: usize,
    /// SNR as configured, in the configured reference; infinite when noiseless.
    pub snr_db: f64,
    pub gain: usize,
    /// Chip-level noise actually applied.
    pub noise: NoiseLevel,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FrameRecord {
    pub info_bits: u64,
    pub bit_errors: u64,
    pub iterations: u64,
    pub converged: bool,
}

/// Pooled statistics of one operating point.
#[derive(Clone, Debug, PartialEq)]
pub struct PointRecord {
    pub snr_db: f64,
    pub snr_ref: SnrReference,
    pub gain: usize,
    pub frames: u64,
    pub info_bits: u64,
    pub bit_errors: u64,
    pub frame_errors: u64,
    pub iterations: u64,
    pub seed: u64,
    pub wall_time: Duration,
}

impl PointRecord {
    pub fn ber(&self) -> f64 {
        if self.info_bits == 0 {
            0.0
        } else {
            self.bit_errors as f64 / self.info_bits as f64
        }
    }

    pub fn fer(&self) -> f64 {
        if self.frames == 0 {
            0.0
        } else {
            self.frame_errors as f64 / self.frames as f64
        }
    }

    pub fn avg_iterations(&self) -> f64 {
        if self.frames == 0 {
            0.0
        } else {
            self.iterations as f64 / self.frames as f64
        }
    }

    fn absorb(&mut self, f: &FrameRecord) {
        self.frames += 1;
        self.info_bits += f.info_bits;
        self.bit_errors += f.bit_errors;
        self.frame_errors += u64::from(f.bit_errors > 0);
        self.iterations += f.iterations;
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepResult {
    /// Free-text description of the run, written as CSV comments.
    pub config_echo: Vec<String>,
    pub records: Vec<PointRecord>,
}

/// A configuration resolved into a code and spreading sequences.
#[derive(Debug)]
pub struct Simulation {
    config: SimConfig,
    h: ParityCheckMatrix,
    generator: Option<GeneratorMatrix>,
    sequences: Vec<SpreadingSequence>,
}

impl Simulation {
    pub fn new(config: SimConfig) -> Result<Self> {
        config.validate()?;
        let h = config.matrix.resolve()?;
        let generator = match config.coding {
            Coding::Ldpc => Some(derive_generator(&h)?),
            Coding::Uncoded => None,
        };
        let mut gains = config.gains.clone();
        gains.sort_unstable();
        gains.dedup();
        let sequences = gains
            .iter()
            .map(|&gain| {
                if gain == 1 {
                    return Ok(SpreadingSequence::unit());
                }
                let rule = SpreadingRule {
                    mode: config.spread_mode,
                    columns: config.spread_columns.clone(),
                    gain,
                };
                derive_sequence(&h, &rule)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Simulation {
            config,
            h,
            generator,
            sequences,
        })
    }

    pub fn config(&self) -> &SimConfig {
        &self.config
    }

    pub fn matrix(&self) -> &ParityCheckMatrix {
        &self.h
    }

    pub fn generator(&self) -> Option<&GeneratorMatrix> {
        self.generator.as_ref()
    }

    /// Information bits per frame.
    pub fn info_len(&self) -> usize {
        self.generator.as_ref().map_or(self.h.cols(), GeneratorMatrix::k)
    }

    pub fn rate(&self) -> f64 {
        self.info_len() as f64 / self.h.cols() as f64
    }

    pub fn sequence(&self, gain: usize) -> Option<&SpreadingSequence> {
        self.sequences.iter().find(|s| s.gain() == gain)
    }

    /// Operating points in output order: SNR-major, gains ascending.
    pub fn points(&self) -> Vec<OperatingPoint> {
        let gains: Vec<usize> = self.sequences.iter().map(SpreadingSequence::gain).collect();
        if self.config.noiseless {
            return gains
                .into_iter()
                .map(|gain| OperatingPoint {
                    snr_index: 0,
                    snr_db: f64::INFINITY,
                    gain,
                    noise: NoiseLevel::Noiseless,
                })
                .collect();
        }
        let rate = self.rate();
        self.config
            .sweep
            .points()
            .into_iter()
            .enumerate()
            .flat_map(|(snr_index, snr_db)| {
                gains.iter().map(move |&gain| OperatingPoint {
                    snr_index,
                    snr_db,
                    gain,
                    noise: NoiseLevel::SnrDb(self.config.snr_ref.to_chip_db(snr_db, rate, gain)),
                })
            })
            .collect()
    }

    /// Sends one frame through the whole link.
    pub fn run_frame(&self, point: &OperatingPoint, frame_index: u64) -> Result<FrameRecord> {
        let seq = self
            .sequence(point.gain)
            .ok_or_else(|| Error::Config(format!("processing gain {} not configured", point.gain)))?;
        let k = self.info_len();
        let info: BitBlock = if self.config.all_zero_data {
            BitBlock::zeros(k)
        } else {
            let mut rng = substream(self.config.seed, Domain::Data, point.snr_index as u64, frame_index);
            (0..k).map(|_| rng.random::<bool>()).collect()
        };
        let codeword = match &self.generator {
            Some(g) => g.encode(&info)?,
            None => info.clone(),
        };

        let chips = spread(&bpsk_modulate(&codeword), seq);
        let params = ChannelParams::new(point.noise, self.config.seed, point.snr_index as u64, frame_index);
        let received = despread(&awgn(&chips, &params), seq)?;

        let llrs: Vec<f64> = match point.noise.n0() {
            None => received.iter().map(|&y| -y * LLR_CLAMP).collect(),
            Some(n0) => {
                let n0_eff = n0 / seq.gain() as f64;
                received
                    .iter()
                    .map(|&y| symbol_llr(y, n0_eff))
                    .collect::<Result<_>>()?
            }
        };

        let (decided, iterations, converged) = match &self.generator {
            Some(g) => {
                let mut ws = DecoderWorkspace::new(&self.h, self.config.form, self.config.max_iterations)?;
                let r = ws.decode(&llrs)?;
                (g.extract_info(&r.bits)?, r.iterations, r.converged)
            }
            None => {
                let bits: BitBlock = llrs.iter().map(|&l| hard_decision(l)).collect();
                debug_assert_eq!(bits, bpsk_hard_decision(&received));
                (bits, 0, true)
            }
        };

        Ok(FrameRecord {
            info_bits: k as u64,
            bit_errors: decided.hamming_distance(&info) as u64,
            iterations: iterations as u64,
            converged,
        })
    }

    /// Runs one operating point to its stopping rule.
    pub fn run_point(&self, point: &OperatingPoint) -> Result<PointRecord> {
        let started = Instant::now();
        let cfg = &self.config;
        let mut rec = PointRecord {
            snr_db: point.snr_db,
            snr_ref: cfg.snr_ref,
            gain: point.gain,
            frames: 0,
            info_bits: 0,
            bit_errors: 0,
            frame_errors: 0,
            iterations: 0,
            seed: cfg.seed,
            wall_time: Duration::ZERO,
        };
        let mut next = 0u64;
        loop {
            let size = if next == 0 { cfg.runs } else { BATCH.min(cfg.max_frames - next) };
            let frames: Vec<FrameRecord> = (next..next + size)
                .into_par_iter()
                .map(|f| self.run_frame(point, f))
                .collect::<Result<_>>()?;
            frames.iter().for_each(|f| rec.absorb(f));
            next += size;
            if rec.bit_errors >= cfg.min_errors || next >= cfg.max_frames {
                break;
            }
        }
        rec.wall_time = started.elapsed();
        Ok(rec)
    }

    /// Runs every operating point on the current rayon pool.
    pub fn run(&self) -> Result<SweepResult> {
        let records = self
            .points()
            .iter()
            .map(|p| self.run_point(p))
            .collect::<Result<_>>()?;
        Ok(SweepResult {
            config_echo: self.config_echo(),
            records,
        })
    }

    /// Runs the sweep on a dedicated pool of `workers` threads.
    pub fn run_with_workers(&self, workers: usize) -> Result<SweepResult> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))?;
        pool.install(|| self.run())
    }

    pub fn config_echo(&self) -> Vec<String> {
        let c = &self.config;
        let mut echo = vec![
            format!("matrix: {}", c.matrix.describe()),
            format!(
                "code: {} k={} rate={:.6} coding={}",
                self.h.name(),
                self.info_len(),
                self.rate(),
                match c.coding {
                    Coding::Ldpc => "ldpc",
                    Coding::Uncoded => "uncoded",
                }
            ),
            format!(
                "spreading: mode={} columns={} pg={}",
                c.spread_mode,
                c.spread_columns.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(","),
                self.sequences.iter().map(|s| s.gain().to_string()).collect::<Vec<_>>().join(","),
            ),
        ];
        echo.push(match (c.noiseless, c.snr_ref) {
            (true, _) => "snr: noiseless".to_string(),
            (false, SnrReference::Chip) => format!(
                "snr_ref=chip: snr_db is chip-level Es/N0, held fixed across processing gains; sweep {}:{}:{}",
                c.sweep.start, c.sweep.step, c.sweep.stop
            ),
            (false, SnrReference::EbN0) => format!(
                "snr_ref=ebn0: snr_db is Eb/N0 per information bit, chip energy scaled by rate/pg; sweep {}:{}:{}",
                c.sweep.start, c.sweep.step, c.sweep.stop
            ),
        });
        echo.push(format!(
            "decoder: form={} max_iter={}",
            match c.form {
                crate::spa::CheckForm::Tanh => "tanh",
                crate::spa::CheckForm::SignMagnitude => "signmag",
            },
            c.max_iterations
        ));
        echo.push(format!(
            "stopping: runs={} min_errors={} max_frames={} data={}",
            c.runs,
            c.min_errors,
            c.max_frames,
            if c.all_zero_data { "all-zero" } else { "random" }
        ));
        echo.push(format!("seed: {}", c.seed));
        echo
    }
}

pub fn run_sweep(config: &SimConfig) -> Result<SweepResult> {
    Simulation::new(config.clone())?.run()
}
