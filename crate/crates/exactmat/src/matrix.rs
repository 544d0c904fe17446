//! Dense matrices over the Gaussian rationals.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_traits::Zero;

use crate::scalar::{format_gaussian, gr_one, gr_zero, parse_gaussian, GaussianRational};
use crate::MatError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![gr_zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = gr_one();
        }
        m
    }

    /// Fails if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, MatError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(MatError::Shape { expected: cols, found: r.len() });
        }
        let n = rows.len();
        Ok(ExactMatrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    /// Integer real entries, for tests and small literals.
    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self, MatError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::scalar::gr(x, 0)).collect())
                .collect(),
        )
    }

    /// Block-diagonal sum of nilpotent Jordan blocks `J_{d_1} ⊕ J_{d_2} ⊕ ⋯`, each with
    /// ones on the superdiagonal.
    pub fn jordan(blocks: &[usize]) -> Self {
        let n = blocks.iter().sum();
        let mut m = Self::zeros(n, n);
        let mut start = 0;
        for &b in blocks {
            for k in start..start + b.saturating_sub(1) {
                m[(k, k + 1)] = gr_one();
            }
            start += b;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        ExactMatrix { entries: self.entries.iter().map(|x| -x.clone()).collect(), ..self.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatError::Shape { expected: self.cols, found: other.cols });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(ExactMatrix { entries, ..self.clone() })
    }

    pub fn trace(&self) -> Result<GaussianRational, MatError> {
        self.require_square()?;
        Ok((0..self.rows).fold(gr_zero(), |acc, k| acc + &self[(k, k)]))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatError> {
        if self.cols != other.rows {
            return Err(MatError::Shape { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self, MatError> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Row-echelon form by fraction-preserving elimination; returns the rank.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for c in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&r| !a[(r, c)].is_zero()) else { continue };
            a.swap_rows(rank, p);
            let inv = gr_one() / &a[(rank, c)];
            for r in rank + 1..a.rows {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = &a[(r, c)] * &inv;
                for k in c..a.cols {
                    let v = &f * &a[(rank, k)];
                    a[(r, k)] -= v;
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        rank
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self, MatError> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero()).ok_or(MatError::Singular)?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let s = gr_one() / &a[(c, c)];
            for k in 0..n {
                a[(c, k)] *= &s;
                inv[(c, k)] *= &s;
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for k in 0..n {
                    let (x, y) = (&f * &a[(c, k)], &f * &inv[(c, k)]);
                    a[(r, k)] -= x;
                    inv[(r, k)] -= y;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.entries.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    pub(crate) fn require_square(&self) -> Result<(), MatError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &mut self.entries[r * self.cols + c]
    }
}

impl Mul for &ExactMatrix {
    type Output = Result<ExactMatrix, MatError>;
    fn mul(self, rhs: &ExactMatrix) -> Self::Output {
        ExactMatrix::mul(self, rhs)
    }
}

impl fmt::Display for ExactMatrix {
    /// The text format read by [`FromStr`]: one row per line, entries separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format_gaussian(&self[(r, c)])).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for ExactMatrix {
    type Err = MatError;

    /// Rows on separate lines, entries separated by whitespace. Blank lines and
    /// lines starting with `#` are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for (k, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(parse_gaussian)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| MatError::Parse { line: k + 1, message: e.to_string() })?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }
}
