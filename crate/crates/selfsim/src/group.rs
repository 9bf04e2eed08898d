//! Finite groups presented by their multiplication table.
//!
//! Element 0 is always the identity. Only finite groups are supported: the
//! reachability arguments used by the fixed-path automata need finite state
//! sets, so infinite groups are rejected at the input layer.

use crate::error::ValidationReport;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Index of a group element; 0 is the identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(pub u16);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    pub fn is_identity(&self) -> bool {
        self.0 == 0
    }

    pub fn index(&self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Group {
    order: usize,
    /// table[a][b] = a * b
    table: Vec<Vec<u16>>,
    inverse: Vec<u16>,
}

impl Group {
    /// The trivial group.
    pub fn trivial() -> Group {
        Group { order: 1, table: vec![vec![0]], inverse: vec![0] }
    }

    /// Z/n with element i |-> i, identity 0.
    pub fn cyclic(n: usize) -> Group {
        let table = (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as u16).collect())
            .collect();
        Group::from_table(table).expect("cyclic table is a group")
    }

    /// Builds a group from a multiplication table, checking the identity,
    /// associativity and inverse laws. Returns the violations otherwise.
    pub fn from_table(table: Vec<Vec<u16>>) -> Result<Group, ValidationReport> {
        let mut report = ValidationReport::new();
        let n = table.len();
        if n == 0 {
            report.push("group", "empty multiplication table");
            return Err(report);
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                report.push("group", format!("table row {a} has {} entries, expected {n}", row.len()));
                return Err(report);
            }
            for &x in row {
                if x as usize >= n {
                    report.push("group", format!("table entry {x} out of range in row {a}"));
                    return Err(report);
                }
            }
        }
        for a in 0..n {
            if table[0][a] as usize != a || table[a][0] as usize != a {
                report.push("group", format!("element 0 is not an identity at {a}"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab_c = table[table[a][b] as usize][c];
                    let a_bc = table[a][table[b][c] as usize];
                    if ab_c != a_bc {
                        report.push(
                            "group",
                            format!("associativity fails at ({a},{b},{c}): ({a}{b}){c}={ab_c} but {a}({b}{c})={a_bc}"),
                        );
                    }
                }
            }
        }
        let mut inverse = vec![u16::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse[a] = b as u16,
                None => report.push("group", format!("element {a} has no two-sided inverse")),
            }
        }
        if report.is_empty() {
            Ok(Group { order: n, table, inverse })
        } else {
            Err(report)
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order as u16).map(GroupElement)
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.table[a.index()][b.index()])
    }

    pub fn inv(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inverse[a.index()])
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_validate() {
        for n in 1..6 {
            let g = Group::cyclic(n);
            assert_eq!(g.order(), n);
            for a in g.elements() {
                assert_eq!(g.mul(a, g.inv(a)), GroupElement::IDENTITY);
            }
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        // identity broken
        assert!(Group::from_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        // non-associative magma on 3 elements
        let t = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 0, 1]];
        assert!(Group::from_table(t).is_err());
    }
}
