//! Multidegrees in N^k and the coordinatewise partial order.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Index};

/// Highest supported rank. Square-table validation is exhaustive over edge
/// triples, which stays tractable up to rank 4.
pub const MAX_RANK: usize = 4;

/// An element of N^k, k = rank. Addition is coordinatewise, the order is the
/// coordinatewise one (a partial order for k >= 2), and `join`/`meet` are the
/// coordinatewise max/min.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Degree {
    rank: u8,
    coords: [u32; MAX_RANK],
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<u32>::deserialize(deserializer)?;
        if coords.is_empty() || coords.len() > MAX_RANK {
            return Err(D::Error::custom(format!(
                "a degree needs 1..={MAX_RANK} coordinates, got {}",
                coords.len()
            )));
        }
        Ok(Degree::from_coords(&coords))
    }
}

impl Degree {
    pub fn zero(rank: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&rank), "rank must be in 1..={MAX_RANK}");
        Degree { rank: rank as u8, coords: [0; MAX_RANK] }
    }

    /// The generator e_i for a 0-based color `color`.
    pub fn unit(rank: usize, color: usize) -> Self {
        let mut d = Degree::zero(rank);
        assert!(color < rank);
        d.coords[color] = 1;
        d
    }

    pub fn from_coords(coords: &[u32]) -> Self {
        let mut d = Degree::zero(coords.len());
        d.coords[..coords.len()].copy_from_slice(coords);
        d
    }

    /// The constant degree (n, n, ..., n).
    pub fn uniform(rank: usize, n: u32) -> Self {
        let mut d = Degree::zero(rank);
        for i in 0..rank {
            d.coords[i] = n;
        }
        d
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords[..self.rank as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&c| c == 0)
    }

    /// Sum of the coordinates (the length of any edge sequence realizing it).
    pub fn total(&self) -> u64 {
        self.coords().iter().map(|&c| c as u64).sum()
    }

    /// Coordinatewise `<=`.
    pub fn leq(&self, other: &Degree) -> bool {
        debug_assert_eq!(self.rank, other.rank);
        self.coords().iter().zip(other.coords()).all(|(a, b)| a <= b)
    }

    /// Coordinatewise maximum.
    pub fn join(&self, other: &Degree) -> Degree {
        debug_assert_eq!(self.rank, other.rank);
        let mut d = *self;
        for i in 0..self.rank as usize {
            d.coords[i] = d.coords[i].max(other.coords[i]);
        }
        d
    }

    /// Coordinatewise minimum.
    pub fn meet(&self, other: &Degree) -> Degree {
        debug_assert_eq!(self.rank, other.rank);
        let mut d = *self;
        for i in 0..self.rank as usize {
            d.coords[i] = d.coords[i].min(other.coords[i]);
        }
        d
    }

    /// Coordinatewise difference; `None` unless `other <= self`.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        if !other.leq(self) {
            return None;
        }
        let mut d = *self;
        for i in 0..self.rank as usize {
            d.coords[i] -= other.coords[i];
        }
        Some(d)
    }

    pub fn coord(&self, i: usize) -> u32 {
        assert!(i < self.rank as usize);
        self.coords[i]
    }

    /// All degrees m with m <= self, in lexicographic order.
    pub fn downward_closure(&self) -> Vec<Degree> {
        let mut out = Vec::new();
        let mut cur = Degree::zero(self.rank());
        loop {
            out.push(cur);
            // odometer over the box [0, self]
            let mut i = self.rank() as isize - 1;
            loop {
                if i < 0 {
                    return out;
                }
                let iu = i as usize;
                if cur.coords[iu] < self.coords[iu] {
                    cur.coords[iu] += 1;
                    break;
                }
                cur.coords[iu] = 0;
                i -= 1;
            }
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        debug_assert_eq!(self.rank, rhs.rank);
        let mut d = self;
        for i in 0..self.rank as usize {
            d.coords[i] += rhs.coords[i];
        }
        d
    }
}

impl Index<usize> for Degree {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        assert!(i < self.rank as usize);
        &self.coords[i]
    }
}

/// Lexicographic order on the coordinates. This is a *total* order used for
/// canonical sorting and deterministic enumeration, not the k-graph order;
/// use [`Degree::leq`] for the coordinatewise partial order.
impl Ord for Degree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords().cmp(other.coords())
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_join_meet() {
        let a = Degree::from_coords(&[2, 0]);
        let b = Degree::from_coords(&[1, 1]);
        assert!(!a.leq(&b));
        assert!(!b.leq(&a));
        assert_eq!(a.join(&b), Degree::from_coords(&[2, 1]));
        assert_eq!(a.meet(&b), Degree::from_coords(&[1, 0]));
        assert_eq!(a + b, Degree::from_coords(&[3, 1]));
        assert!(Degree::zero(2).leq(&a));
    }

    #[test]
    fn sub_requires_dominance() {
        let a = Degree::from_coords(&[2, 1]);
        let b = Degree::from_coords(&[1, 1]);
        assert_eq!(a.checked_sub(&b), Some(Degree::from_coords(&[1, 0])));
        assert_eq!(b.checked_sub(&a), None);
    }

    #[test]
    fn downward_closure_counts() {
        let d = Degree::from_coords(&[2, 1]);
        let all = d.downward_closure();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|m| m.leq(&d)));
        // lexicographic and duplicate-free
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);
    }
}
