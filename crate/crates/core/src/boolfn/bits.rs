use std::cmp::Ordering;

/// Fixed-length bit vector packed into `u64` words, least significant bit first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits {
            words: vec![u64::MAX; len.div_ceil(64)],
            len,
        };
        b.clear_tail();
        b
    }

    /// The low `len` bits of `word` (`len <= 64`).
    pub fn from_word(word: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut b = Bits {
            words: vec![word; 1],
            len,
        };
        b.clear_tail();
        b
    }

    fn clear_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, idx: usize) -> bool {
        debug_assert!(idx < self.len);
        (self.words[idx / 64] >> (idx % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, idx: usize, bit: bool) {
        debug_assert!(idx < self.len);
        let w = &mut self.words[idx / 64];
        if bit {
            *w |= 1 << (idx % 64);
        } else {
            *w &= !(1 << (idx % 64));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn all(&self) -> bool {
        self.count_ones() == self.len
    }

    /// First word, for tables of at most 64 entries.
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Lexicographic order of the bit string read from index 0 upwards.
    pub fn lex_cmp(&self, other: &Bits) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                // lowest differing index decides
                let low = (a ^ b).trailing_zeros();
                return if (a >> low) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.len.cmp(&other.len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_and_tail() {
        let b = Bits::ones(70);
        assert_eq!(b.count_ones(), 70);
        assert!(b.all());
        let b = Bits::from_word(u64::MAX, 4);
        assert_eq!(b.low_word(), 0xF);
    }

    #[test]
    fn lex_order_reads_index_zero_first() {
        // "0110" < "1000" even though the packed integer of the latter is smaller
        let a = Bits::from_word(0b0110, 4);
        let b = Bits::from_word(0b0001, 4);
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
    }
}
