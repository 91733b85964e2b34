//! Two-block partitions of the words left after removing the focus word.
//!
//! The `m` remaining words are numbered `0..m` in synset order. A partition is
//! a bitmask over them: bit `j` set puts word `j` in the first block, clear
//! puts it in the second. Each unordered split has exactly one canonical mask,
//! the one where word 0 sits in the first block.

use crate::error::GeometryError;

/// Largest `m` representable with `u32` masks.
pub const MAX_ELEMENTS: usize = 31;

/// Number of unordered splits of `m` elements into two nonempty blocks,
/// `2^(m-1) - 1`, the Stirling number of the second kind `{m, 2}`.
pub fn partition_count(m: usize) -> u64 {
    if m < 2 {
        0
    } else {
        (1u64 << (m - 1)) - 1
    }
}

/// One split of `S \ {v}`, where `v` is the word at `focus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Partition {
    pub focus: usize,
    pub mask: u32,
}

impl Partition {
    pub fn full_mask(m: usize) -> u32 {
        if m >= 32 {
            u32::MAX
        } else {
            (1u32 << m) - 1
        }
    }

    /// Both blocks nonempty and word 0 in the first block.
    pub fn is_canonical(&self, m: usize) -> bool {
        (2..=MAX_ELEMENTS).contains(&m)
            && self.mask & 1 == 1
            && self.mask != Self::full_mask(m)
            && self.mask & !Self::full_mask(m) == 0
    }

    /// The same split with the block labels exchanged (not canonical).
    pub fn swapped(&self, m: usize) -> Partition {
        Partition {
            focus: self.focus,
            mask: !self.mask & Self::full_mask(m),
        }
    }

    /// Indices into the remaining words that belong to the first block.
    pub fn first_block(&self, m: usize) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..m).filter(move |j| mask >> j & 1 == 1)
    }

    pub fn second_block(&self, m: usize) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..m).filter(move |j| mask >> j & 1 == 0)
    }
}

/// Canonical masks over `m` elements, in ascending order.
#[derive(Debug, Clone)]
pub struct CanonicalMasks {
    next: u32,
    end: u32,
}

impl Iterator for CanonicalMasks {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.next >= self.end {
            return None;
        }
        let k = self.next;
        self.next += 1;
        Some(k << 1 | 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for CanonicalMasks {}

/// All `2^(m-1) - 1` canonical masks for `m` elements.
///
/// The free bits `1..m` count upward from zero; the all-ones pattern is left
/// out because it would empty the second block.
pub fn enumerate_partitions(m: usize) -> Result<CanonicalMasks, GeometryError> {
    if !(2..=MAX_ELEMENTS).contains(&m) {
        return Err(GeometryError::PartitionSize { m });
    }
    Ok(CanonicalMasks {
        next: 0,
        end: (1u32 << (m - 1)) - 1,
    })
}

/// Sign of `x` with a dead band: 0 when `|x| <= eps`.
pub fn sgn_eps(x: f64, eps: f64) -> i8 {
    if x > eps {
        1
    } else if x < -eps {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_partitions(2).unwrap().collect::<Vec<_>>(), [0b01]);
        assert_eq!(
            enumerate_partitions(3).unwrap().collect::<Vec<_>>(),
            [0b001, 0b011, 0b101]
        );
        assert_eq!(enumerate_partitions(5).unwrap().len(), 15);
        assert_eq!(partition_count(5), 15);
    }

    #[test]
    fn rejects_too_few_elements() {
        assert_eq!(
            enumerate_partitions(1).unwrap_err(),
            GeometryError::PartitionSize { m: 1 }
        );
        assert!(enumerate_partitions(0).is_err());
        assert!(enumerate_partitions(MAX_ELEMENTS + 1).is_err());
    }

    #[test]
    fn masks_are_canonical_and_blocks_cover() {
        for mask in enumerate_partitions(4).unwrap() {
            let p = Partition { focus: 0, mask };
            assert!(p.is_canonical(4));
            assert!(!p.swapped(4).is_canonical(4));
            let mut all: Vec<_> = p.first_block(4).chain(p.second_block(4)).collect();
            all.sort();
            assert_eq!(all, [0, 1, 2, 3]);
        }
    }

    #[test]
    fn sgn_eps_band() {
        assert_eq!(sgn_eps(0.3, 1e-9), 1);
        assert_eq!(sgn_eps(-0.3, 1e-9), -1);
        assert_eq!(sgn_eps(5e-10, 1e-9), 0);
        assert_eq!(sgn_eps(-1e-9, 1e-9), 0);
        assert_eq!(sgn_eps(0.0, 0.0), 0);
    }
}
