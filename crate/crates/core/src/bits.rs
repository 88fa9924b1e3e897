use std::fmt;
use std::ops::BitXorAssign;

/// Packed bit vector used for information words and codewords.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitBlock {
    len: usize,
    words: Vec<u64>,
}

impl BitBlock {
    pub fn zeros(len: usize) -> Self {
        BitBlock {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Builds a block from `0`/`1` values; any nonzero byte is a one.
    pub fn from_bits(bits: &[u8]) -> Self {
        bits.iter().map(|&b| b != 0).collect()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of positions where `self` and `other` differ.
    pub fn hamming_distance(&self, other: &BitBlock) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(len.div_ceil(64), 0);
        if len % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % 64)) - 1;
            }
        }
        BitBlock { len, words }
    }
}

impl BitXorAssign<&BitBlock> for BitBlock {
    fn bitxor_assign(&mut self, rhs: &BitBlock) {
        assert_eq!(self.len, rhs.len, "xor of blocks with different lengths");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl FromIterator<bool> for BitBlock {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in iter {
            if len % 64 == 0 {
                words.push(0);
            }
            if bit {
                *words.last_mut().unwrap() |= 1u64 << (len % 64);
            }
            len += 1;
        }
        BitBlock { len, words }
    }
}

impl fmt::Display for BitBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitBlock({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_flip_across_word_boundary() {
        let mut b = BitBlock::zeros(130);
        b.set(0, true);
        b.set(64, true);
        b.flip(129);
        assert!(b.get(0) && b.get(64) && b.get(129));
        assert_eq!(b.count_ones(), 3);
        b.flip(64);
        assert!(!b.get(64));
    }

    #[test]
    fn collect_and_display() {
        let b = BitBlock::from_bits(&[1, 0, 1, 1]);
        assert_eq!(b.to_string(), "1011");
        assert_eq!(b.to_bits(), vec![1, 0, 1, 1]);
        let mut c = BitBlock::from_bits(&[1, 1, 0, 1]);
        c ^= &b;
        assert_eq!(c.to_string(), "0110");
        assert_eq!(b.hamming_distance(&BitBlock::from_bits(&[1, 1, 0, 1])), 2);
    }

    #[test]
    fn from_words_masks_tail() {
        let b = BitBlock::from_words(3, vec![u64::MAX]);
        assert_eq!(b.count_ones(), 3);
    }
}
