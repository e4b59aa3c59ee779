//! Integer partitions: the index set of every series in this crate.
//!
//! A [`Partition`] is stored trimmed (no trailing zeros), so `(2,1)` and
//! `(2,1,0,0)` are the same value. Cells are addressed 1-based as `(row, col)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Arm, leg, co-arm and co-leg of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellData {
    pub arm: u32,
    pub leg: u32,
    pub coarm: u32,
    pub coleg: u32,
}

/// Partitions built from `λ`: `2λ`, `λ∪λ` and whether every part is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derived {
    pub double: Partition,
    pub union_self: Partition,
    pub is_even: bool,
}

impl Partition {
    /// Builds a partition from non-increasing parts; trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, `λ_1` (zero for the empty partition).
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let parts = (1..=width as u32)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col as u32 <= self.part(cell.row)
    }

    pub fn cell_data(&self, cell: Cell) -> Result<CellData> {
        if !self.contains_cell(cell) {
            return Err(Error::CellOutside { partition: self.clone(), row: cell.row, col: cell.col });
        }
        let column_height = self.parts.iter().take_while(|&&p| p as usize >= cell.col).count();
        Ok(CellData {
            arm: self.part(cell.row) - cell.col as u32,
            leg: (column_height - cell.row) as u32,
            coarm: cell.col as u32 - 1,
            coleg: cell.row as u32 - 1,
        })
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| Cell::new(i + 1, j)))
    }

    /// Cells together with their arm/leg data, computed without re-scanning per cell.
    pub fn cells_with_data(&self) -> Vec<(Cell, CellData)> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| {
                let data = CellData {
                    arm: self.part(c.row) - c.col as u32,
                    leg: conj.part(c.col) - c.row as u32,
                    coarm: c.col as u32 - 1,
                    coleg: c.row as u32 - 1,
                };
                (c, data)
            })
            .collect()
    }

    pub fn double(&self) -> Partition {
        Partition { parts: self.parts.iter().map(|p| 2 * p).collect() }
    }

    pub fn union_self(&self) -> Partition {
        Partition { parts: self.parts.iter().flat_map(|&p| [p, p]).collect() }
    }

    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn derived(&self) -> Derived {
        Derived { double: self.double(), union_self: self.union_self(), is_even: self.is_even() }
    }

    /// Dominance order: `self ≥ other` iff every partial sum of `self` is at least
    /// that of `other`. Only meaningful for equal weights.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Removes the last cell of the last row; `None` for the empty partition.
    pub fn without_last_cell(&self) -> Option<Partition> {
        let mut parts = self.parts.clone();
        let last = parts.last_mut()?;
        *last -= 1;
        Some(Self::from_sorted(parts))
    }

    /// Multiplicity of each part value (value, count), largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for literal partitions in tests and examples; panics on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// Partitions of exactly `weight` with at most `max_length` parts and parts at most
/// `max_part`, in reverse-lexicographic order (`(3)`, `(2,1)`, `(1,1,1)`).
pub fn partitions_of(weight: u32, max_length: usize, max_part: u32) -> Vec<Partition> {
    fn rec(remaining: u32, cap: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        // the remaining slots must be able to hold what is left
        let top = cap.min(remaining);
        for first in (1..=top).rev() {
            if (first as u64) * (slots as u64) < remaining as u64 {
                break;
            }
            prefix.push(first);
            rec(remaining - first, first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, max_part, max_length, &mut Vec::new(), &mut out);
    out
}

/// Stream of every partition with weight ≤ `max_weight` and length ≤ `max_length`,
/// grouped by ascending weight, reverse-lexicographic within a weight.
pub fn enumerate(max_weight: u32, max_length: usize) -> Enumerate {
    Enumerate { max_weight, max_length, weight: 0, layer: Vec::new().into_iter() }
}

pub struct Enumerate {
    max_weight: u32,
    max_length: usize,
    weight: u32,
    layer: std::vec::IntoIter<Partition>,
}

impl Iterator for Enumerate {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if let Some(p) = self.layer.next() {
                return Some(p);
            }
            if self.weight > self.max_weight {
                return None;
            }
            self.layer = partitions_of(self.weight, self.max_length, self.weight).into_iter();
            self.weight += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(partition![3, 1].conjugate(), partition![2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(partition![2, 2].conjugate(), partition![2, 2]);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), partition![2, 1]);
        assert_eq!(partition![2, 1].to_string(), "(2,1)");
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn cell_data_examples() {
        let d = partition![3, 1].cell_data(Cell::new(1, 1)).unwrap();
        assert_eq!((d.arm, d.leg, d.coarm, d.coleg), (2, 1, 0, 0));
        let d = partition![3, 1].cell_data(Cell::new(1, 3)).unwrap();
        assert_eq!((d.arm, d.leg, d.coarm, d.coleg), (0, 0, 2, 0));
        let d = partition![2, 2].cell_data(Cell::new(2, 1)).unwrap();
        assert_eq!((d.arm, d.leg, d.coarm, d.coleg), (1, 0, 0, 1));
        assert!(partition![3, 1].cell_data(Cell::new(2, 2)).is_err());
        assert!(partition![3, 1].cell_data(Cell::new(0, 1)).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let got: Vec<_> = enumerate(2, 2).collect();
        assert_eq!(got, vec![Partition::empty(), partition![1], partition![2], partition![1, 1]]);
        assert_eq!(enumerate(0, 5).collect::<Vec<_>>(), vec![Partition::empty()]);
    }

    #[test]
    fn derived_examples() {
        let d = partition![2, 1].derived();
        assert_eq!(d.double, partition![4, 2]);
        assert_eq!(d.union_self, partition![2, 2, 1, 1]);
        assert!(!d.is_even);
        let d = partition![2].derived();
        assert_eq!((d.double, d.union_self, d.is_even), (partition![4], partition![2, 2], true));
        let d = Partition::empty().derived();
        assert_eq!((d.double, d.union_self, d.is_even), (Partition::empty(), Partition::empty(), true));
    }

    #[test]
    fn json_is_a_plain_array() {
        let p = partition![3, 1];
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn dominance() {
        assert!(partition![3, 1].dominates(&partition![2, 2]));
        assert!(!partition![2, 2].dominates(&partition![3, 1]));
        assert!(!partition![3, 1, 1, 1].dominates(&partition![2, 2, 2]));
        assert!(!partition![2, 2, 2].dominates(&partition![3, 1, 1, 1]));
    }
}
