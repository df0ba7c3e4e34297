//! Subsets of a ground set `[n]` stored as `u64` bitmasks.
//!
//! Element `i` (1-based) lives in bit `i - 1`.

/// A subset of `[n]`, `n <= 64`.
pub type Set = u64;

pub const MAX_GROUND: usize = 64;

#[inline]
pub fn bit(element: usize) -> Set {
    debug_assert!((1..=MAX_GROUND).contains(&element));
    1u64 << (element - 1)
}

/// The full ground set `[n]`.
#[inline]
pub fn full(n: usize) -> Set {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn contains(set: Set, element: usize) -> bool {
    set & bit(element) != 0
}

#[inline]
pub fn size(set: Set) -> usize {
    set.count_ones() as usize
}

pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Set {
    elements.into_iter().fold(0, |acc, e| acc | bit(e))
}

/// Elements of `set` in increasing order.
pub fn elements(set: Set) -> Vec<usize> {
    let mut out = Vec::with_capacity(size(set));
    let mut rest = set;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize + 1);
        rest &= rest - 1;
    }
    out
}

/// Iterates the `r`-subsets of `[n]` in increasing numeric order (Gosper's hack).
pub fn k_subsets(n: usize, r: usize) -> KSubsets {
    KSubsets {
        next: if r > n {
            None
        } else if r == 0 {
            Some(0)
        } else {
            Some(full(r))
        },
        limit: full(n),
    }
}

pub struct KSubsets {
    next: Option<Set>,
    limit: Set,
}

impl Iterator for KSubsets {
    type Item = Set;

    fn next(&mut self) -> Option<Set> {
        let current = self.next?;
        self.next = if current == 0 {
            None
        } else {
            let low = current & current.wrapping_neg();
            let ripple = current.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let ones = ((current ^ ripple) >> 2) / low;
                let candidate = ripple | ones;
                (candidate & !self.limit == 0).then_some(candidate)
            }
        };
        Some(current)
    }
}

/// Iterates every submask of `set`, including `0` and `set` itself.
pub fn submasks(set: Set) -> impl Iterator<Item = Set> {
    let mut next = Some(set);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            Some((current - 1) & set)
        };
        Some(current)
    })
}

/// Renders `set` as `{1,3,4}`.
pub fn format(set: Set) -> String {
    let parts: Vec<String> = elements(set).iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(4, 2).count(), 6);
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(k_subsets(2, 3).count(), 0);
        assert_eq!(k_subsets(64, 63).count(), 64);
        assert!(k_subsets(7, 3).all(|s| size(s) == 3 && s < 128));
    }

    #[test]
    fn submasks_cover_powerset() {
        assert_eq!(submasks(0b1011).count(), 8);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn element_round_trip() {
        let s = from_elements([1, 3, 4]);
        assert_eq!(s, 0b1101);
        assert_eq!(elements(s), vec![1, 3, 4]);
        assert_eq!(format(s), "{1,3,4}");
    }
}
