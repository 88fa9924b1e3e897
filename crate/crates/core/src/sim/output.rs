use super::engine::SweepResult;
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::path::Path;

const HEADER: [&str; 11] = [
    "snr_db",
    "snr_ref",
    "pg",
    "frames",
    "info_bits",
    "bit_errors",
    "frame_errors",
    "ber",
    "fer",
    "avg_iters",
    "seed",
];

fn fmt_snr(db: f64) -> String {
    if db.is_infinite() {
        "inf".into()
    } else {
        db.to_string()
    }
}

/// Six significant digits in scientific notation.
fn fmt_rate(x: f64) -> String {
    format!("{x:.5e}")
}

fn comments(result: &SweepResult) -> String {
    result
        .config_echo
        .iter()
        .map(|l| format!("# {l}\n"))
        .collect()
}

/// CSV text: config echo as `#` comments, a header, one row per point.
pub fn csv_string(result: &SweepResult) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER)?;
    for r in &result.records {
        w.write_record([
            fmt_snr(r.snr_db),
            r.snr_ref.to_string(),
            r.gain.to_string(),
            r.frames.to_string(),
            r.info_bits.to_string(),
            r.bit_errors.to_string(),
            r.frame_errors.to_string(),
            fmt_rate(r.ber()),
            fmt_rate(r.fer()),
            format!("{:.4}", r.avg_iterations()),
            r.seed.to_string(),
        ])?;
    }
    let body = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
    Ok(comments(result) + &String::from_utf8(body).expect("csv output is ASCII"))
}

pub fn write_csv(result: &SweepResult, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, csv_string(result)?).map_err(|e| Error::io(path, e))
}

/// SNR-by-gain BER table: one row per SNR, one `ber_pg<G>` column per gain
/// in ascending order. Zero or missing BERs are left empty so the table can
/// go straight onto a log axis.
pub fn plot_data_string(result: &SweepResult) -> Result<String> {
    let gains: BTreeSet<usize> = result.records.iter().map(|r| r.gain).collect();
    let mut snrs: Vec<f64> = Vec::new();
    for r in &result.records {
        if !snrs.iter().any(|&s| s.to_bits() == r.snr_db.to_bits()) {
            snrs.push(r.snr_db);
        }
    }

    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["snr_db".to_string()];
    header.extend(gains.iter().map(|g| format!("ber_pg{g}")));
    w.write_record(&header)?;
    for &snr in &snrs {
        let mut row = vec![fmt_snr(snr)];
        for &g in &gains {
            let cell = result
                .records
                .iter()
                .find(|r| r.gain == g && r.snr_db.to_bits() == snr.to_bits())
                .filter(|r| r.bit_errors > 0)
                .map(|r| fmt_rate(r.ber()))
                .unwrap_or_default();
            row.push(cell);
        }
        w.write_record(&row)?;
    }
    let body = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
    Ok(String::from_utf8(body).expect("csv output is ASCII"))
}

pub fn emit_plot_data(result: &SweepResult, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, plot_data_string(result)?).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::SnrReference;
    use crate::sim::PointRecord;
    use std::time::Duration;

    fn record(snr_db: f64, gain: usize, bit_errors: u64) -> PointRecord {
        PointRecord {
            snr_db,
            snr_ref: SnrReference::Chip,
            gain,
            frames: 10,
            info_bits: 1280,
            bit_errors,
            frame_errors: bit_errors.min(10),
            iterations: 37,
            seed: 7,
            wall_time: Duration::from_millis(3),
        }
    }

    #[test]
    fn empty_sweep_is_header_only() {
        let s = csv_string(&SweepResult::default()).unwrap();
        assert_eq!(s, "snr_db,snr_ref,pg,frames,info_bits,bit_errors,frame_errors,ber,fer,avg_iters,seed\n");
    }

    #[test]
    fn one_record_two_lines() {
        let res = SweepResult {
            config_echo: vec![],
            records: vec![record(2.5, 4, 3)],
        };
        let s = csv_string(&res).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 2);
        // 3 / 1280 = 0.00234375
        assert_eq!(lines[1], "2.5,chip,4,10,1280,3,3,2.34375e-3,3.00000e-1,3.7000,7");
    }

    #[test]
    fn echo_becomes_comments() {
        let res = SweepResult {
            config_echo: vec!["seed: 7".into()],
            records: vec![],
        };
        assert!(csv_string(&res).unwrap().starts_with("# seed: 7\nsnr_db,"));
    }

    #[test]
    fn plot_table_layout() {
        let res = SweepResult {
            config_echo: vec![],
            records: vec![record(0.0, 4, 5), record(0.0, 1, 9), record(1.0, 4, 0), record(1.0, 1, 2)],
        };
        let s = plot_data_string(&res).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "snr_db,ber_pg1,ber_pg4");
        assert_eq!(lines[1], "0,7.03125e-3,3.90625e-3");
        assert_eq!(lines[2], "1,1.56250e-3,");
    }

    #[test]
    fn files_are_written() {
        let dir = tempfile::tempdir().unwrap();
        let res = SweepResult {
            config_echo: vec![],
            records: vec![record(0.0, 1, 1)],
        };
        write_csv(&res, dir.path().join("a.csv")).unwrap();
        emit_plot_data(&res, dir.path().join("b.csv")).unwrap();
        let a = std::fs::read_to_string(dir.path().join("a.csv")).unwrap();
        assert_eq!(a, csv_string(&res).unwrap());
        assert!(write_csv(&res, dir.path().join("missing/x.csv")).is_err());
    }
}
