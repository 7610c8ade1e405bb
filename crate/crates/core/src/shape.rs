//! Partitions and their Ferrers diagrams.
//!
//! A [`Partition`] is a weakly decreasing tuple of positive integers
//! `λ = (λ_1, …, λ_n)`. Its Ferrers diagram is the left-justified array of
//! cells with `λ_r` cells in row `r`; all indices are 1-based. The module
//! knows the combinatorics the rest of the crate is built on: the ascending
//! diagonals `r + s = i + 1`, the count `μ = max_j(λ_j + j − 1)` of diagonals
//! meeting the diagram, the outer corners where the part value drops, and the
//! staircase test `λ = (m, m−1, …, 1)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors from parsing or validating a partition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("EmptyInput: expected at least one part")]
    EmptyInput,
    #[error("NonPositivePart: part {index} is {value}, every part must be >= 1")]
    NonPositivePart { index: usize, value: i64 },
    #[error("NotWeaklyDecreasing: part {index} is {value} but follows {previous}")]
    NotWeaklyDecreasing {
        index: usize,
        value: u32,
        previous: u32,
    },
    #[error("MalformedToken: cannot read {token:?} as a part (expected a decimal integer fitting 32 bits)")]
    MalformedToken { token: String },
}

/// Requested diagonal index lies outside `1..=mu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("IndexOutOfRange: diagonal {index} outside 1..={mu}")]
pub struct IndexOutOfRange {
    pub index: u64,
    pub mu: u64,
}

/// A weakly decreasing tuple `λ = (λ_1, …, λ_n)` of positive integers.
///
/// Row count `n` and column count `m = λ_1` are derived. Values are immutable
/// after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A cell `(r, s)` of the Ferrers diagram, 1-based; valid when `s <= λ_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }

    /// Index of the ascending diagonal through this cell: `i = r + s − 1`.
    pub fn diagonal(&self) -> u64 {
        u64::from(self.row) + u64::from(self.col) - 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The outer corners of a Ferrers diagram: the rows `c_1 < … < c_k` where a
/// new, strictly smaller part value starts (`c_1 = 1`), together with the
/// sentinel `c_{k+1} = n + 1`. `k` equals the number of distinct part values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerProfile {
    corners: Vec<u32>,
    row_count: u32,
}

impl CornerProfile {
    /// Number of outer corners.
    pub fn k(&self) -> u32 {
        self.corners.len() as u32
    }

    /// The corner rows `c_1, …, c_k`.
    pub fn corners(&self) -> &[u32] {
        &self.corners
    }

    /// The sentinel `c_{k+1} = n + 1`.
    pub fn sentinel(&self) -> u64 {
        u64::from(self.row_count) + 1
    }
}

impl Partition {
    /// Validates a weakly decreasing sequence of positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::EmptyInput);
        }
        assert!(
            parts.len() < u32::MAX as usize,
            "row count must fit a 32-bit index"
        );
        for (idx, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(PartitionError::NonPositivePart {
                    index: idx + 1,
                    value: 0,
                });
            }
            if idx > 0 && parts[idx - 1] < part {
                return Err(PartitionError::NotWeaklyDecreasing {
                    index: idx + 1,
                    value: part,
                    previous: parts[idx - 1],
                });
            }
        }
        Ok(Partition { parts })
    }

    /// Parses `INT ("," INT)*`, decimal, with optional whitespace per token.
    pub fn parse(text: &str) -> Result<Self, PartitionError> {
        if text.trim().is_empty() {
            return Err(PartitionError::EmptyInput);
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let value: i64 = token.parse().map_err(|_| PartitionError::MalformedToken {
                token: token.to_string(),
            })?;
            if value <= 0 {
                return Err(PartitionError::NonPositivePart {
                    index: parts.len() + 1,
                    value,
                });
            }
            // Parts must fit 32 bits; anything larger is a parse error, not wraparound.
            let value = u32::try_from(value).map_err(|_| PartitionError::MalformedToken {
                token: token.to_string(),
            })?;
            parts.push(value);
        }
        Partition::new(parts)
    }

    /// The parts `λ_1, …, λ_n`.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_row` for `1 <= row <= n`.
    pub fn part(&self, row: u32) -> u32 {
        self.parts[(row - 1) as usize]
    }

    /// Row count `n`.
    pub fn row_count(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Column count `m = λ_1`.
    pub fn col_count(&self) -> u32 {
        self.parts[0]
    }

    /// Total number of cells, `Σ λ_j`.
    pub fn cell_count(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Whether `(r, s)` is a cell of the diagram.
    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.row_count()
            && cell.col <= self.part(cell.row)
    }

    /// All cells in row-major order (row ascending, then column ascending).
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.row_count())
            .flat_map(move |row| (1..=self.part(row)).map(move |col| Cell { row, col }))
    }

    /// `μ = max_{j=1..n}(λ_j + j − 1)`: the number of ascending diagonals
    /// that meet the diagram.
    pub fn mu(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(idx, &part)| u64::from(part) + idx as u64)
            .max()
            .expect("partition is nonempty")
    }

    /// The cells on the ascending diagonal `r + s = diagonal + 1`, ordered by
    /// increasing row. Nonempty for every `diagonal` in `1..=mu`.
    pub fn diagonal_cells(&self, diagonal: u64) -> Result<Vec<Cell>, IndexOutOfRange> {
        let mu = self.mu();
        if diagonal < 1 || diagonal > mu {
            return Err(IndexOutOfRange {
                index: diagonal,
                mu,
            });
        }
        let n = u64::from(self.row_count());
        let m = u64::from(self.col_count());
        let first_row = if diagonal + 1 > m {
            diagonal + 1 - m
        } else {
            1
        };
        let last_row = diagonal.min(n);
        let mut cells = Vec::new();
        for row in first_row..=last_row {
            let col = diagonal + 1 - row;
            let cell = Cell {
                row: row as u32,
                col: col as u32,
            };
            if self.contains(cell) {
                cells.push(cell);
            }
        }
        Ok(cells)
    }

    /// The outer corners: `c_1 = 1` and every row where the part value
    /// strictly drops.
    pub fn outer_corners(&self) -> CornerProfile {
        let mut corners = vec![1u32];
        for idx in 1..self.parts.len() {
            if self.parts[idx] < self.parts[idx - 1] {
                corners.push(idx as u32 + 1);
            }
        }
        CornerProfile {
            corners,
            row_count: self.row_count(),
        }
    }

    /// Whether `λ = (m, m−1, …, 2, 1)`.
    pub fn is_staircase(&self) -> bool {
        let m = self.col_count();
        self.row_count() == m
            && self
                .parts
                .iter()
                .enumerate()
                .all(|(idx, &part)| u64::from(part) + idx as u64 == u64::from(m))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::parse(s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, part) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

/// Every nonempty partition with at most `max_rows` parts, each at most
/// `max_cols`, in a deterministic order. Yields `C(max_rows + max_cols,
/// max_rows) − 1` partitions; used by the sweep-style oracles and tests.
pub fn partitions_in_box(max_rows: u32, max_cols: u32) -> Vec<Partition> {
    fn extend(prefix: &mut Vec<u32>, max_rows: usize, bound: u32, out: &mut Vec<Partition>) {
        if !prefix.is_empty() {
            out.push(Partition {
                parts: prefix.clone(),
            });
        }
        if prefix.len() == max_rows {
            return;
        }
        for next in 1..=bound {
            prefix.push(next);
            extend(prefix, max_rows, next, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_rows as usize, max_cols, &mut out);
    out
}
