//! Partitions (Young diagrams), cells, hooks, contents, extreme cells, and
//! standard tableaux.
//!
//! Rows are arranged with row 1 the longest. Cells are read row-major; that
//! reading order is the canonical cell-to-strand-position order used by the
//! Hecke module.

use std::fmt;

use crate::error::{Result, SkeinError};
use crate::scalar::Scalar;

/// A partition as a weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A cell `(row, col)`, 1-based.
pub type Cell = (usize, usize);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SkeinError::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(SkeinError::InvalidPartition("zero part".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.0 >= 1 && c.0 <= self.rows() && c.1 >= 1 && c.1 <= self.parts[c.0 - 1] as usize
    }

    /// Transposed diagram.
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells in row-major reading order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p as usize {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Row-major position (1-based) of a cell.
    pub fn cell_position(&self, c: Cell) -> usize {
        let before: usize = self.parts[..c.0 - 1].iter().map(|&p| p as usize).sum();
        before + c.1
    }

    /// Hook length of a cell: arm + leg + 1.
    pub fn hook_length(&self, c: Cell) -> usize {
        let t = self.transpose();
        self.parts[c.0 - 1] as usize + t.parts[c.1 - 1] as usize - c.0 - c.1 + 1
    }

    /// Content of a cell: `col - row`.
    pub fn content(&self, c: Cell) -> i64 {
        c.1 as i64 - c.0 as i64
    }

    /// Cells whose removal leaves a partition.
    pub fn extreme_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.rows() {
            let p = self.parts[i - 1] as usize;
            let below = if i < self.rows() {
                self.parts[i] as usize
            } else {
                0
            };
            if p > below {
                out.push((i, p));
            }
        }
        out
    }

    /// Cells whose addition gives a partition.
    pub fn addable_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.rows() + 1 {
            let p = if i <= self.rows() {
                self.parts[i - 1] as usize
            } else {
                0
            };
            let above = if i == 1 {
                usize::MAX
            } else {
                self.parts[i - 2] as usize
            };
            if p < above {
                out.push((i, p + 1));
            }
        }
        out
    }

    pub fn remove_cell(&self, c: Cell) -> Result<Partition> {
        if !self.extreme_cells().contains(&c) {
            return Err(SkeinError::NotExtremeCell(c.0, c.1));
        }
        let mut parts = self.parts.clone();
        parts[c.0 - 1] -= 1;
        parts.retain(|&p| p > 0);
        Ok(Partition { parts })
    }

    /// Product of quantum hook lengths over all cells.
    pub fn hook_product(&self) -> Scalar {
        let mut out = Scalar::one();
        for c in self.cells() {
            out = &out * &Scalar::quantum_int(self.hook_length(c) as i64);
        }
        out
    }

    /// Sum of contents over all cells.
    pub fn content_sum(&self) -> i64 {
        self.cells().iter().map(|&c| self.content(c)).sum()
    }

    /// `[3,1,1]` literal form.
    pub fn parse(input: &str) -> Result<Partition> {
        let t = input.trim();
        if !t.starts_with('[') || !t.ends_with(']') {
            return Err(SkeinError::InvalidPartition(format!(
                "expected [..] literal, got {input:?}"
            )));
        }
        let inner = &t[1..t.len() - 1];
        let parts: Vec<u32> = if inner.trim().is_empty() {
            vec![]
        } else {
            inner
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| SkeinError::InvalidPartition(format!("bad part {p:?}")))
                })
                .collect::<Result<_>>()?
        };
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `n`, in reverse-lexicographic order: `(n)` first,
/// `(1,...,1)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let hi = remaining.min(max);
        for p in (1..=hi).rev() {
            current.push(p as u32);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// p(n), counted by enumeration.
pub fn partition_count(n: usize) -> usize {
    partitions(n).len()
}

/// Number of extreme cells over all partitions of `n`, by direct enumeration.
pub fn extreme_cell_count(n: usize) -> usize {
    assert!(n >= 1);
    partitions(n)
        .iter()
        .map(|p| p.extreme_cells().len())
        .sum()
}

/// A standard tableau: labels `1..n` increasing along rows and columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = StandardTableau { rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let shape = self.shape();
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &l in row {
                if l == 0 || l as usize > n || seen[l as usize] {
                    return Err(SkeinError::InvalidTableau(format!("bad labels in {self}")));
                }
                seen[l as usize] = true;
            }
        }
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(SkeinError::InvalidTableau(format!("rows not increasing: {self}")));
            }
        }
        for i in 1..self.rows.len() {
            for j in 0..self.rows[i].len() {
                if self.rows[i - 1][j] >= self.rows[i][j] {
                    return Err(SkeinError::InvalidTableau(format!(
                        "columns not increasing: {self}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len() as u32).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Cell carrying label `l`.
    pub fn cell_of(&self, l: u32) -> Option<Cell> {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &lab) in row.iter().enumerate() {
                if lab == l {
                    return Some((i + 1, j + 1));
                }
            }
        }
        None
    }

    /// Remove the cell labeled `n`; always an extreme cell.
    pub fn truncate(&self) -> StandardTableau {
        let n = self.size() as u32;
        let c = self.cell_of(n).expect("label n present");
        let mut rows = self.rows.clone();
        rows[c.0 - 1].pop();
        rows.retain(|r| !r.is_empty());
        StandardTableau { rows }
    }

    /// `[[1,3],[2]]` literal form.
    pub fn parse(input: &str) -> Result<StandardTableau> {
        let t = input.trim();
        if !t.starts_with("[[") || !t.ends_with("]]") {
            return Err(SkeinError::InvalidTableau(format!(
                "expected [[..],[..]] literal, got {input:?}"
            )));
        }
        let inner = &t[1..t.len() - 1];
        let mut rows = Vec::new();
        let mut depth = 0usize;
        let mut cur = String::new();
        for ch in inner.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    cur.clear();
                }
                ']' => {
                    depth = depth.saturating_sub(1);
                    let row: Vec<u32> = if cur.trim().is_empty() {
                        vec![]
                    } else {
                        cur.split(',')
                            .map(|p| {
                                p.trim().parse::<u32>().map_err(|_| {
                                    SkeinError::InvalidTableau(format!("bad label {p:?}"))
                                })
                            })
                            .collect::<Result<_>>()?
                    };
                    rows.push(row);
                }
                ',' if depth == 0 => {}
                c => cur.push(c),
            }
        }
        StandardTableau::new(rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All standard tableaux of a shape, ordered lexicographically by the
/// position sequence of labels 1..n.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    // grow label by label; at each step a label goes in any addable corner of
    // the sub-shape that stays inside the target shape
    let n = shape.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    fn rec(
        shape: &Partition,
        next: u32,
        n: usize,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next as usize > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        let r = rows.len();
        for i in 0..=r {
            let len_i = if i < r { rows[i].len() } else { 0 };
            let above = if i == 0 { usize::MAX } else { rows[i - 1].len() };
            if len_i < above && (i + 1 <= shape.rows()) && len_i < shape.parts()[i] as usize {
                if i == r {
                    rows.push(vec![next]);
                } else {
                    rows[i].push(next);
                }
                rec(shape, next + 1, n, rows, out);
                if rows[i].len() == 1 && i == rows.len() - 1 {
                    rows.pop();
                } else {
                    rows[i].pop();
                }
            }
        }
    }
    rec(shape, 1, n, &mut rows, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        let p3 = partitions(3);
        assert_eq!(
            p3,
            vec![
                Partition::new(vec![3]).unwrap(),
                Partition::new(vec![2, 1]).unwrap(),
                Partition::new(vec![1, 1, 1]).unwrap(),
            ]
        );
        // enumeration oracle: independent recursive counter
        fn p_count(n: usize, max: usize) -> usize {
            if n == 0 {
                return 1;
            }
            (1..=n.min(max)).map(|k| p_count(n - k, k)).sum()
        }
        for n in 0..=12 {
            assert_eq!(partitions(n).len(), p_count(n, n), "p({n})");
        }
        assert_eq!(partitions(5).len(), 7);
    }

    #[test]
    fn cell_stats_examples() {
        let l = Partition::new(vec![1]).unwrap();
        assert_eq!(l.hook_length((1, 1)), 1);
        assert_eq!(l.content((1, 1)), 0);
        assert_eq!(l.extreme_cells(), vec![(1, 1)]);

        let l = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(l.hook_length((1, 1)), 3);
        assert_eq!(l.hook_length((1, 2)), 1);
        assert_eq!(l.hook_length((2, 1)), 1);
        let contents: Vec<i64> = l.cells().iter().map(|&c| l.content(c)).collect();
        assert_eq!(contents, vec![0, 1, -1]);
        assert_eq!(l.extreme_cells(), vec![(1, 2), (2, 1)]);

        let l = Partition::new(vec![3, 3]).unwrap();
        assert_eq!(l.extreme_cells(), vec![(2, 3)]);
        // removal test on each corner cell
        assert!(l.remove_cell((2, 3)).is_ok());
        assert!(l.remove_cell((1, 3)).is_err());
    }

    #[test]
    fn hook_products() {
        assert!(Partition::empty().hook_product().is_one());
        let l21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(l21.hook_product(), Scalar::quantum_int(3));
        let l2 = Partition::new(vec![2]).unwrap();
        assert_eq!(l2.hook_product(), parse_scalar("s + s^-1").unwrap());
    }

    #[test]
    fn transpose_invariants() {
        for n in 0..=7 {
            for l in partitions(n) {
                let t = l.transpose();
                let mut h1: Vec<usize> = l.cells().iter().map(|&c| l.hook_length(c)).collect();
                let mut h2: Vec<usize> = t.cells().iter().map(|&c| t.hook_length(c)).collect();
                h1.sort();
                h2.sort();
                assert_eq!(h1, h2, "hook multiset of {l} vs transpose");
                assert_eq!(l.content_sum(), -t.content_sum());
                assert_eq!(t.transpose(), l);
            }
        }
    }

    #[test]
    fn extreme_vs_addable() {
        for n in 0..=9 {
            for l in partitions(n) {
                assert_eq!(
                    l.extreme_cells().len() + 1,
                    l.addable_corners().len(),
                    "o = i + 1 for {l}"
                );
            }
        }
    }

    #[test]
    fn tableau_enumeration() {
        for n in 1..=5 {
            let single = standard_tableaux(&Partition::new(vec![n]).unwrap());
            assert_eq!(single.len(), 1);
        }
        let t21 = standard_tableaux(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(t21.len(), 2);
        // brute-force identity: sum of squared counts = n!
        for n in 1..=6usize {
            let total: usize = partitions(n)
                .iter()
                .map(|l| standard_tableaux(l).len().pow(2))
                .sum();
            let fact: usize = (1..=n).product();
            assert_eq!(total, fact, "sum f^2 = n! at n={n}");
        }
    }

    #[test]
    fn tableau_truncation_stays_standard() {
        for n in 1..=6usize {
            for l in partitions(n) {
                for t in standard_tableaux(&l) {
                    let mut cur = t.clone();
                    while cur.size() > 0 {
                        cur.validate().unwrap();
                        cur = cur.truncate();
                    }
                }
            }
        }
    }

    #[test]
    fn extreme_count_identity() {
        assert_eq!(extreme_cell_count(1), 1);
        assert_eq!(extreme_cell_count(3), 4);
        let e6: usize = (0..6).map(partition_count).sum();
        assert_eq!(extreme_cell_count(6), e6);
        assert_eq!(e6, 19);
        for n in 1..=12 {
            let lhs = extreme_cell_count(n);
            let rhs: usize = (0..n).map(partition_count).sum();
            assert_eq!(lhs, rhs, "e({n})");
        }
    }

    #[test]
    fn literals() {
        let p = Partition::parse("[3,1,1]").unwrap();
        assert_eq!(p.to_string(), "[3,1,1]");
        assert!(Partition::parse("[1,3]").is_err());
        let t = StandardTableau::parse("[[1,3],[2]]").unwrap();
        assert_eq!(t.to_string(), "[[1,3],[2]]");
        assert!(StandardTableau::parse("[[1,1],[2]]").is_err());
    }
}
