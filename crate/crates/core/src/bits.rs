//! Word-slice bitset helpers shared by the dense graph types and the searches.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn test(row: &[u64], i: usize) -> bool {
    row[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i >> 6] |= 1 << (i & 63);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i >> 6] &= !(1 << (i & 63));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

#[inline]
pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Iterator over the set bit positions of a word slice, in increasing order.
pub(crate) struct Ones<'a> {
    row: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.idx];
        }
    }
}

pub(crate) fn ones(row: &[u64]) -> Ones<'_> {
    Ones { row, idx: 0, cur: row.first().copied().unwrap_or(0) }
}

pub(crate) fn from_indices(n: usize, items: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut row = vec![0u64; words_for(n)];
    for i in items {
        set(&mut row, i);
    }
    row
}

/// All-ones mask over the first `n` positions.
pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut row = vec![!0u64; words_for(n)];
    if n % 64 != 0 {
        if let Some(last) = row.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_crosses_word_boundaries() {
        let row = from_indices(200, [0, 63, 64, 127, 199]);
        assert_eq!(ones(&row).collect::<Vec<_>>(), vec![0, 63, 64, 127, 199]);
        assert_eq!(count(&row), 5);
    }

    #[test]
    fn full_masks_tail() {
        assert_eq!(count(&full(70)), 70);
        assert_eq!(count(&full(64)), 64);
        assert!(full(0).is_empty());
    }
}
