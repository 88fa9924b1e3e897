//! Direct-sequence spreading with a sequence derived from `H`.
//!
//! The chip pattern comes from the parity-check matrix itself: XOR of a few
//! columns, or the complement of one column, truncated or cyclically tiled
//! to the processing gain. Both ends hold `H`, so both derive the same
//! sequence without exchanging it.

use crate::error::{Error, Result};
use crate::gf2::ParityCheckMatrix;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SpreadMode {
    /// XOR of one or more columns.
    #[default]
    XorColumns,
    /// Complement of a single column.
    NotColumn,
}

impl FromStr for SpreadMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xor" => Ok(SpreadMode::XorColumns),
            "not" => Ok(SpreadMode::NotColumn),
            other => Err(Error::InvalidSpreadingRule(format!(
                "unknown spread mode `{other}`, expected xor or not"
            ))),
        }
    }
}

impl fmt::Display for SpreadMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpreadMode::XorColumns => "xor",
            SpreadMode::NotColumn => "not",
        })
    }
}

/// How to turn `H` into a chip sequence of a given processing gain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadingRule {
    pub mode: SpreadMode,
    /// 0-based column indices of `H`.
    pub columns: Vec<usize>,
    /// Chips per symbol.
    pub gain: usize,
}

impl SpreadingRule {
    pub fn xor(columns: Vec<usize>, gain: usize) -> Self {
        SpreadingRule {
            mode: SpreadMode::XorColumns,
            columns,
            gain,
        }
    }

    pub fn not(column: usize, gain: usize) -> Self {
        SpreadingRule {
            mode: SpreadMode::NotColumn,
            columns: vec![column],
            gain,
        }
    }

    pub fn validate(&self, h: &ParityCheckMatrix) -> Result<()> {
        if self.gain == 0 {
            return Err(Error::InvalidSpreadingRule("processing gain must be at least 1".into()));
        }
        if self.columns.is_empty() {
            return Err(Error::InvalidSpreadingRule("no columns selected".into()));
        }
        if self.mode == SpreadMode::NotColumn && self.columns.len() != 1 {
            return Err(Error::InvalidSpreadingRule(format!(
                "not-column mode takes exactly one column, got {}",
                self.columns.len()
            )));
        }
        if let Some(&c) = self.columns.iter().find(|&&c| c >= h.cols()) {
            return Err(Error::InvalidSpreadingRule(format!(
                "column {} out of range for {} columns",
                c + 1,
                h.cols()
            )));
        }
        let mut sorted = self.columns.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSpreadingRule("column indices must be distinct".into()));
        }
        Ok(())
    }
}

/// A ±1 chip sequence of length equal to the processing gain.
#[derive(Clone, Debug, PartialEq)]
pub struct SpreadingSequence {
    chips: Vec<f64>,
    rule: SpreadingRule,
}

impl SpreadingSequence {
    pub fn chips(&self) -> &[f64] {
        &self.chips
    }

    pub fn gain(&self) -> usize {
        self.chips.len()
    }

    pub fn rule(&self) -> &SpreadingRule {
        &self.rule
    }

    /// The sequence as bits (chip +1 is bit 0).
    pub fn bits(&self) -> Vec<u8> {
        self.chips.iter().map(|&c| u8::from(c < 0.0)).collect()
    }

    /// Trivial length-1 sequence `(+1)`, i.e. no spreading.
    pub fn unit() -> Self {
        SpreadingSequence {
            chips: vec![1.0],
            rule: SpreadingRule::xor(vec![0], 1),
        }
    }
}

pub fn derive_sequence(h: &ParityCheckMatrix, rule: &SpreadingRule) -> Result<SpreadingSequence> {
    rule.validate(h)?;
    let r = h.rows();
    let mut pattern = vec![false; r];
    for &c in &rule.columns {
        for &j in h.col(c) {
            pattern[j] ^= true;
        }
    }
    match rule.mode {
        SpreadMode::XorColumns => {
            if pattern.iter().all(|&b| !b) {
                return Err(Error::DegenerateSequence);
            }
        }
        SpreadMode::NotColumn => pattern.iter_mut().for_each(|b| *b = !*b),
    }
    // Truncate when gain <= r, otherwise tile cyclically.
    let chips = (0..rule.gain)
        .map(|u| if pattern[u % r] { -1.0 } else { 1.0 })
        .collect();
    Ok(SpreadingSequence {
        chips,
        rule: rule.clone(),
    })
}

/// `chip[t·G + u] = symbol[t] · seq[u]`.
pub fn spread(symbols: &[f64], seq: &SpreadingSequence) -> Vec<f64> {
    let mut out = Vec::with_capacity(symbols.len() * seq.gain());
    for &s in symbols {
        out.extend(seq.chips.iter().map(|&c| s * c));
    }
    out
}

/// Correlates each block of `G` chips with the sequence and averages.
///
/// The average is a running mean, so a block of identical products returns
/// that value exactly and `despread(spread(x)) == x` bit for bit.
pub fn despread(chips: &[f64], seq: &SpreadingSequence) -> Result<Vec<f64>> {
    let g = seq.gain();
    if chips.len() % g != 0 {
        return Err(Error::ChipCount {
            chips: chips.len(),
            gain: g,
        });
    }
    Ok(chips
        .chunks_exact(g)
        .map(|block| {
            let mut mean = 0.0;
            for (n, (&x, &c)) in block.iter().zip(&seq.chips).enumerate() {
                mean += (x * c - mean) / (n + 1) as f64;
            }
            mean
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::fixtures::example_h;
    use proptest::prelude::*;

    #[test]
    fn xor_of_first_two_columns() {
        let seq = derive_sequence(&example_h(), &SpreadingRule::xor(vec![0, 1], 4)).unwrap();
        assert_eq!(seq.bits(), vec![0, 1, 1, 0]);
        assert_eq!(seq.chips(), &[1.0, -1.0, -1.0, 1.0]);
    }

    #[test]
    fn complement_of_first_column() {
        let seq = derive_sequence(&example_h(), &SpreadingRule::not(0, 5)).unwrap();
        assert_eq!(seq.bits(), vec![0, 0, 1, 1, 1]);
        assert_eq!(seq.chips(), &[1.0, 1.0, -1.0, -1.0, -1.0]);
    }

    #[test]
    fn cyclic_tiling_beyond_column_length() {
        let seq = derive_sequence(&example_h(), &SpreadingRule::xor(vec![0, 1], 12)).unwrap();
        assert_eq!(seq.bits(), vec![0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn self_xor_is_degenerate() {
        // Repeated columns are rejected outright; two identical columns of a
        // different matrix exercise the all-zero pattern itself.
        assert!(derive_sequence(&example_h(), &SpreadingRule::xor(vec![2, 2], 4)).is_err());
        let h = ParityCheckMatrix::from_dense(&[[1u8, 1, 0], [1, 1, 1]]).unwrap();
        assert!(matches!(
            derive_sequence(&h, &SpreadingRule::xor(vec![0, 1], 2)),
            Err(Error::DegenerateSequence)
        ));
    }

    #[test]
    fn invalid_rules() {
        let h = example_h();
        assert!(derive_sequence(&h, &SpreadingRule::xor(vec![0, 1], 0)).is_err());
        assert!(derive_sequence(&h, &SpreadingRule::xor(vec![10], 4)).is_err());
        assert!(derive_sequence(&h, &SpreadingRule::xor(vec![], 4)).is_err());
        let two_not = SpreadingRule {
            mode: SpreadMode::NotColumn,
            columns: vec![0, 1],
            gain: 4,
        };
        assert!(derive_sequence(&h, &two_not).is_err());
    }

    #[test]
    fn spread_examples() {
        let seq = derive_sequence(&example_h(), &SpreadingRule::xor(vec![0, 1], 4)).unwrap();
        assert_eq!(spread(&[1.0], &seq), vec![1.0, -1.0, -1.0, 1.0]);
        assert_eq!(spread(&[-1.0], &seq), vec![-1.0, 1.0, 1.0, -1.0]);
        let two = derive_sequence(&example_h(), &SpreadingRule::xor(vec![0, 1], 2)).unwrap();
        assert_eq!(two.chips(), &[1.0, -1.0]);
        assert_eq!(spread(&[1.0, -1.0], &two), vec![1.0, -1.0, -1.0, 1.0]);
    }

    #[test]
    fn despread_examples() {
        let seq = derive_sequence(&example_h(), &SpreadingRule::not(0, 5)).unwrap();
        let x = [1.0, -1.0, 1.0];
        assert_eq!(despread(&spread(&x, &seq), &seq).unwrap(), x);
        assert_eq!(despread(&[0.0; 10], &seq).unwrap(), vec![0.0, 0.0]);
        assert!(matches!(
            despread(&[0.0; 7], &seq),
            Err(Error::ChipCount { chips: 7, gain: 5 })
        ));
    }

    #[test]
    fn deterministic_per_rule() {
        let h = example_h();
        let rule = SpreadingRule::xor(vec![3, 6, 8], 7);
        assert_eq!(derive_sequence(&h, &rule).unwrap(), derive_sequence(&h, &rule).unwrap());
    }

    proptest! {
        #[test]
        fn round_trip_is_exact(
            x in prop::collection::vec(-1e6f64..1e6, 0..20),
            gain in 1usize..40,
            col in 0usize..10,
        ) {
            let seq = derive_sequence(&example_h(), &SpreadingRule::not(col, gain)).unwrap();
            prop_assert_eq!(despread(&spread(&x, &seq), &seq).unwrap(), x);
        }

        #[test]
        fn sequence_alphabet_and_length(
            gain in 1usize..64,
            a in 0usize..10,
            b in 0usize..10,
        ) {
            prop_assume!(a != b);
            let seq = derive_sequence(&example_h(), &SpreadingRule::xor(vec![a, b], gain)).unwrap();
            prop_assert_eq!(seq.chips().len(), gain);
            prop_assert!(seq.chips().iter().all(|&c| c == 1.0 || c == -1.0));
        }
    }
}
