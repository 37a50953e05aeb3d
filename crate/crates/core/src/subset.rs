//! Bitset-encoded subsets of a ground set `{0, .., n-1}` with `n <= 16`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of the ground set, encoded as a bitset. Element `i` is present
/// exactly when bit `i` is set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 16);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        let mut bits = 0u32;
        for i in iter {
            bits |= 1 << i;
        }
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    /// Comparable under inclusion (one contains the other).
    pub fn comparable(self, other: Subset) -> bool {
        self.is_subset_of(other) || other.is_subset_of(self)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All `2^n` subsets of `{0, .., n-1}` in bitset order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << n).map(|b| Subset(b as u32))
    }

    /// Human form used in generator subscripts: elements in increasing order,
    /// concatenated while every element fits in one digit, comma-separated
    /// otherwise. The empty set prints as `{}`.
    pub fn label(self) -> String {
        if self.is_empty() {
            return "{}".to_string();
        }
        let elems: Vec<usize> = self.iter().collect();
        if elems.last().copied().unwrap_or(0) <= 9 {
            elems.iter().map(|e| e.to_string()).collect()
        } else {
            elems
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = Subset::from_elements([0, 2, 3]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 3]);
        assert!(Subset::singleton(0).is_subset_of(s));
        assert!(!s.comparable(Subset::from_elements([1, 2])));
        assert_eq!(s.label(), "023");
    }

    #[test]
    fn inclusion_implies_numeric_order() {
        for a in Subset::all(6) {
            for b in Subset::all(6) {
                if a.is_proper_subset_of(b) {
                    assert!(a.0 < b.0);
                }
            }
        }
    }
}
