use crate::channel::SnrReference;
use crate::dsss::SpreadMode;
use crate::error::{Error, Result};
use crate::gf2::{load_alist, ParityCheckMatrix, PegParams};
use crate::spa::{CheckForm, DEFAULT_MAX_ITERATIONS};
use std::path::PathBuf;
use std::str::FromStr;

/// Where the parity-check matrix comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixSource {
    Alist(PathBuf),
    Peg(PegParams),
    Inline(ParityCheckMatrix),
}

impl MatrixSource {
    pub fn resolve(&self) -> Result<ParityCheckMatrix> {
        match self {
            MatrixSource::Alist(path) => load_alist(path),
            MatrixSource::Peg(p) => p.build(),
            MatrixSource::Inline(h) => Ok(h.clone()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            MatrixSource::Alist(path) => format!("alist {}", path.display()),
            MatrixSource::Peg(p) => {
                format!("peg cols={} rows={} degrees={} seed={}", p.cols, p.rows, summarize_degrees(&p.column_degrees), p.seed)
            }
            MatrixSource::Inline(h) => format!("inline {}", h.name()),
        }
    }
}

/// Run-length summary such as `3*256` or `2*128+3*128`.
fn summarize_degrees(degrees: &[usize]) -> String {
    let mut parts: Vec<(usize, usize)> = Vec::new();
    for &d in degrees {
        match parts.last_mut() {
            Some((deg, n)) if *deg == d => *n += 1,
            _ => parts.push((d, 1)),
        }
    }
    parts
        .iter()
        .map(|(d, n)| format!("{d}*{n}"))
        .collect::<Vec<_>>()
        .join("+")
}

/// Parses a column-degree spec: a single degree for a regular code, or
/// `deg*count` terms joined by `+` whose counts sum to `cols`.
pub fn parse_degrees(spec: &str, cols: usize) -> Result<Vec<usize>> {
    let bad = |msg: String| Error::Config(format!("degree spec `{spec}`: {msg}"));
    let spec = spec.trim();
    if let Ok(d) = spec.parse::<usize>() {
        return Ok(vec![d; cols]);
    }
    let mut out = Vec::with_capacity(cols);
    for term in spec.split('+') {
        let (d, n) = term
            .split_once('*')
            .ok_or_else(|| bad(format!("term `{term}` is not deg*count")))?;
        let d: usize = d.trim().parse().map_err(|_| bad(format!("bad degree `{d}`")))?;
        let n: usize = n.trim().parse().map_err(|_| bad(format!("bad count `{n}`")))?;
        out.extend(std::iter::repeat_n(d, n));
    }
    if out.len() != cols {
        return Err(bad(format!("counts sum to {}, expected {cols}", out.len())));
    }
    Ok(out)
}

impl FromStr for PegParams {
    type Err = Error;

    /// `m,r,degrees` with an optional fourth `seed` field.
    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split(',').map(str::trim).collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(Error::Config(format!("PEG spec `{s}` must be m,r,degrees[,seed]")));
        }
        let num = |f: &str, what: &str| {
            f.parse::<u64>()
                .map_err(|_| Error::Config(format!("PEG spec `{s}`: bad {what} `{f}`")))
        };
        let cols = num(fields[0], "column count")? as usize;
        let rows = num(fields[1], "row count")? as usize;
        let column_degrees = parse_degrees(fields[2], cols)?;
        let seed = fields.get(3).map(|f| num(f, "seed")).transpose()?.unwrap_or(0);
        Ok(PegParams {
            cols,
            rows,
            column_degrees,
            seed,
        })
    }
}

/// Whether frames go through the LDPC code or straight onto the channel.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Coding {
    #[default]
    Ldpc,
    /// `m` raw bits per frame, hard sign decisions; `H` only supplies the
    /// spreading sequence.
    Uncoded,
}

/// SNR grid `start:step:stop`, inclusive of `stop`.
#[derive(Clone, Debug, PartialEq)]
pub struct SnrSweep {
    pub start: f64,
    pub step: f64,
    pub stop: f64,
}

impl SnrSweep {
    pub fn single(db: f64) -> Self {
        SnrSweep {
            start: db,
            step: 1.0,
            stop: db,
        }
    }

    pub fn points(&self) -> Vec<f64> {
        if self.step <= 0.0 || self.stop < self.start {
            return if self.stop == self.start { vec![self.start] } else { Vec::new() };
        }
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        // Rounded so that 0.1-style steps print cleanly.
        (0..=n)
            .map(|t| ((self.start + t as f64 * self.step) * 1e9).round() / 1e9)
            .collect()
    }
}

impl FromStr for SnrSweep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(':')
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Config(format!("bad SNR sweep `{s}`")))
            })
            .collect::<Result<_>>()?;
        match parts[..] {
            [a] => Ok(SnrSweep::single(a)),
            [a, b, c] => Ok(SnrSweep {
                start: a,
                step: b,
                stop: c,
            }),
            _ => Err(Error::Config(format!("SNR sweep `{s}` must be a or a:step:b"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimConfig {
    pub matrix: MatrixSource,
    pub coding: Coding,
    pub spread_mode: SpreadMode,
    /// 0-based columns of `H` combined into the spreading sequence.
    pub spread_columns: Vec<usize>,
    /// Processing gains to simulate, one curve each.
    pub gains: Vec<usize>,
    pub sweep: SnrSweep,
    pub snr_ref: SnrReference,
    /// Replace the sweep with a single noise-free point.
    pub noiseless: bool,
    pub max_iterations: usize,
    pub form: CheckForm,
    /// Frames run unconditionally at every point.
    pub runs: u64,
    /// Keep adding frames until this many information-bit errors...
    pub min_errors: u64,
    /// ...or this many frames in total.
    pub max_frames: u64,
    pub seed: u64,
    /// Send the all-zero word instead of random data.
    pub all_zero_data: bool,
}

impl SimConfig {
    pub fn new(matrix: MatrixSource) -> Self {
        SimConfig {
            matrix,
            coding: Coding::Ldpc,
            spread_mode: SpreadMode::XorColumns,
            spread_columns: vec![0, 1],
            gains: vec![1],
            sweep: SnrSweep::single(0.0),
            snr_ref: SnrReference::Chip,
            noiseless: false,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            form: CheckForm::Tanh,
            runs: 50,
            min_errors: 500,
            max_frames: 10_000,
            seed: 1,
            all_zero_data: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.noiseless && self.sweep.points().is_empty() {
            return Err(Error::Config("SNR sweep is empty".into()));
        }
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        if self.max_frames < self.runs {
            return Err(Error::Config(format!(
                "max frames ({}) must be at least runs ({})",
                self.max_frames, self.runs
            )));
        }
        if self.gains.is_empty() || self.gains.contains(&0) {
            return Err(Error::Config("processing gains must be a nonempty list of values >= 1".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::Config("max iterations must be at least 1".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_parsing() {
        let s: SnrSweep = "0:0.5:2".parse().unwrap();
        assert_eq!(s.points(), vec![0.0, 0.5, 1.0, 1.5, 2.0]);
        assert_eq!("3".parse::<SnrSweep>().unwrap().points(), vec![3.0]);
        assert_eq!("0:0.1:0.3".parse::<SnrSweep>().unwrap().points(), vec![0.0, 0.1, 0.2, 0.3]);
        assert!("1:2".parse::<SnrSweep>().is_err());
        assert!("x".parse::<SnrSweep>().is_err());
        assert!("3:1:0".parse::<SnrSweep>().unwrap().points().is_empty());
    }

    #[test]
    fn degree_specs() {
        assert_eq!(parse_degrees("3", 4).unwrap(), vec![3; 4]);
        assert_eq!(parse_degrees("2*2+3*1", 3).unwrap(), vec![2, 2, 3]);
        assert!(parse_degrees("2*2", 3).is_err());
        assert!(parse_degrees("2x2", 2).is_err());
        assert_eq!(summarize_degrees(&[2, 2, 3]), "2*2+3*1");
    }

    #[test]
    fn peg_spec() {
        let p: PegParams = "256,128,3".parse().unwrap();
        assert_eq!((p.cols, p.rows, p.seed), (256, 128, 0));
        assert_eq!(p.column_degrees, vec![3; 256]);
        let p: PegParams = "10,5,2,9".parse().unwrap();
        assert_eq!(p.seed, 9);
        assert!("10,5".parse::<PegParams>().is_err());
    }

    #[test]
    fn validation() {
        let h = crate::gf2::peg_construct(10, 5, &[2; 10], 0).unwrap();
        let mut c = SimConfig::new(MatrixSource::Inline(h));
        assert!(c.validate().is_ok());
        c.max_frames = 10;
        c.runs = 20;
        assert!(c.validate().is_err());
        c.runs = 0;
        assert!(c.validate().is_err());
        c.runs = 5;
        c.gains = vec![];
        assert!(c.validate().is_err());
    }
}
