//! Small fixed-width bit rows used by the elimination-order machinery.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(n: usize) -> Self {
        BitRow {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of elements shared with `mask`.
    pub fn masked_len(&self, mask: &BitRow) -> usize {
        self.words
            .iter()
            .zip(&mask.words)
            .map(|(a, m)| (a & m).count_ones() as usize)
            .sum()
    }

    /// Is `self ∩ mask ⊆ other`?
    pub fn masked_subset_of(&self, mask: &BitRow, other: &BitRow) -> bool {
        self.words
            .iter()
            .zip(&mask.words)
            .zip(&other.words)
            .all(|((a, m), b)| a & m & !b == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut b = BitRow::new(130);
        b.insert(0);
        b.insert(64);
        b.insert(129);
        assert!(b.contains(0) && b.contains(64) && b.contains(129));
        assert!(!b.contains(1) && !b.contains(128));
        b.remove(64);
        assert!(!b.contains(64));
    }

    #[test]
    fn masked_subset() {
        let n = 70;
        let mut a = BitRow::new(n);
        let mut b = BitRow::new(n);
        let mut mask = BitRow::new(n);
        for i in [1, 3, 65] {
            a.insert(i);
        }
        for i in [1, 65] {
            b.insert(i);
        }
        for i in 0..n {
            mask.insert(i);
        }
        assert!(!a.masked_subset_of(&mask, &b));
        mask.remove(3);
        assert!(a.masked_subset_of(&mask, &b));
        assert_eq!(a.masked_len(&mask), 2);
    }
}
