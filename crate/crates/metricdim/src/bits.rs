//! Fixed-capacity bitset over `u64` words, used for adjacency rows and
//! vertex sets throughout the crate.

/// A set of vertex indices in `0..len`, stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Capacity in bits (the universe size), not the number of set bits.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn unset(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// The two smallest members, if the set has at least two.
    pub fn first_pair(&self) -> Option<(usize, usize)> {
        let mut it = self.iter();
        match (it.next(), it.next()) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        }
    }

    pub fn and(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn and_count(&self, other: &Bits) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn or_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_disjoint(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl FromIterator<usize> for Bits {
    /// Collects indices into a set sized to fit the largest one.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let indices: Vec<usize> = iter.into_iter().collect();
        let len = indices.iter().max().map_or(0, |&m| m + 1);
        let mut bits = Bits::new(len);
        for i in indices {
            bits.set(i);
        }
        bits
    }
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_unset() {
        let mut b = Bits::new(130);
        assert!(!b.get(0));
        b.set(0);
        b.set(63);
        b.set(64);
        b.set(129);
        assert!(b.get(0) && b.get(63) && b.get(64) && b.get(129));
        assert!(!b.get(65));
        assert_eq!(b.count(), 4);
        b.unset(64);
        assert!(!b.get(64));
        assert_eq!(b.count(), 3);
    }

    #[test]
    fn iter_ascending_across_words() {
        let mut b = Bits::new(200);
        for i in [3, 5, 63, 64, 127, 128, 199] {
            b.set(i);
        }
        let got: Vec<usize> = b.iter().collect();
        assert_eq!(got, vec![3, 5, 63, 64, 127, 128, 199]);
        assert_eq!(b.first(), Some(3));
        assert_eq!(b.first_pair(), Some((3, 5)));
    }

    #[test]
    fn and_or_disjoint() {
        let a: Bits = [1, 2, 70].into_iter().collect();
        let mut b = Bits::new(71);
        b.set(2);
        b.set(70);
        assert_eq!(a.and(&b).iter().collect::<Vec<_>>(), vec![2, 70]);
        assert_eq!(a.and_count(&b), 2);
        let c: Bits = [0, 3].into_iter().collect();
        let mut c = {
            let mut x = Bits::new(71);
            for i in c.iter() {
                x.set(i);
            }
            x
        };
        assert!(c.is_disjoint(&b));
        c.or_assign(&b);
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![0, 2, 3, 70]);
    }

    #[test]
    fn empty_set() {
        let b = Bits::new(0);
        assert!(b.is_empty());
        assert_eq!(b.iter().next(), None);
        let b = Bits::new(65);
        assert!(b.is_empty());
        assert_eq!(b.first_pair(), None);
    }
}
