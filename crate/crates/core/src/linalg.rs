//! Dense matrices over GF(q) and Gaussian elimination.
//!
//! Text format: a header line `rows cols q`, then one line per row of
//! space-separated canonical element encodings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Gf>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Gf::ZERO; rows * cols] }
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Gf>>) -> Matrix {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix { field: field.clone(), rows: nrows, cols, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Gf {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Gf) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Gf] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Gf>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// `self * other^T`: entry `(i, j)` is the dot product of row `i` of
    /// `self` with row `j` of `other`.
    pub fn mul_transpose(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.set(i, j, dot(f, self.row(i), other.row(j)));
            }
        }
        out
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..self.cols {
                    self.data.swap(p * self.cols + k, r * self.cols + k);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for k in c..self.cols {
                let v = f.mul(self.get(r, k), inv);
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                let neg = f.neg(factor);
                for k in c..self.cols {
                    let v = f.add(self.get(i, k), f.mul(neg, self.get(r, k)));
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Matrix) -> bool {
        self.rank() == self.stack(other).rank()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.field.q());
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.value().to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Parses the text format; `q` in the header must match the field.
    pub fn from_text(field: &Field, text: &str) -> Result<Matrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::MatrixFormat("missing header".into()))?;
        let nums: Vec<u64> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::MatrixFormat(format!("bad header token {t:?}"))))
            .collect::<Result<_>>()?;
        let [rows, cols, q] = nums[..] else {
            return Err(Error::MatrixFormat("header needs `rows cols q`".into()));
        };
        if q != field.q() as u64 {
            return Err(Error::MatrixFormat(format!("header q = {q}, field has {}", field.q())));
        }
        let mut data = Vec::with_capacity((rows * cols) as usize);
        for i in 0..rows {
            let line = lines.next().ok_or_else(|| Error::MatrixFormat(format!("missing row {i}")))?;
            let row: Vec<Gf> = line
                .split_whitespace()
                .map(|t| {
                    let v: u64 = t.parse().map_err(|_| Error::MatrixFormat(format!("bad entry {t:?}")))?;
                    field.elem(v)
                })
                .collect::<Result<_>>()?;
            if row.len() as u64 != cols {
                return Err(Error::MatrixFormat(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.extend(row);
        }
        if lines.next().is_some() {
            return Err(Error::MatrixFormat("trailing rows".into()));
        }
        Ok(Matrix { field: field.clone(), rows: rows as usize, cols: cols as usize, data })
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc {
            rows: usize,
            cols: usize,
            q: u32,
            entries: Vec<Vec<u32>>,
        }
        Doc {
            rows: self.rows,
            cols: self.cols,
            q: self.field.q(),
            entries: (0..self.rows).map(|r| self.row(r).iter().map(|x| x.value()).collect()).collect(),
        }
        .serialize(serializer)
    }
}

pub fn dot(field: &Field, a: &[Gf], b: &[Gf]) -> Gf {
    a.iter().zip(b).fold(Gf::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(field, cols, rows.iter().map(|r| r.iter().map(|&v| field.from_int(v)).collect()).collect())
    }

    #[test]
    fn rank_and_rref() {
        let f = Field::prime(5).unwrap();
        let a = m(&f, &[&[1, 2, 3], &[0, 1, 4], &[1, 3, 2]]);
        // row3 = row1 + row2 mod 5
        assert_eq!(a.rank(), 2);
        let mut r = a.clone();
        assert_eq!(r.row_reduce(), vec![0, 1]);
        assert!(r.row(2).iter().all(|x| x.is_zero()));
        assert_eq!(Matrix::zeros(&f, 0, 4).rank(), 0);
    }

    #[test]
    fn row_space_and_products() {
        let f = Field::prime(7).unwrap();
        let g = m(&f, &[&[1, 1, 1, 1]]);
        let h = m(&f, &[&[1, 6, 0, 0], &[0, 1, 6, 0], &[0, 0, 1, 6]]);
        assert!(g.mul_transpose(&h).is_zero());
        assert!(!g.row_space_contains(&h));
        assert!(h.row_space_contains(&m(&f, &[&[1, 0, 0, 6]])));
        assert_eq!(g.stack(&h).rank(), 4);
        assert_eq!(h.transpose().rows(), 4);
    }

    #[test]
    fn text_format() {
        let f = Field::prime(7).unwrap();
        let a = m(&f, &[&[1, 3, 2, 6], &[1, 5, 4, 4]]);
        let text = a.to_text();
        assert_eq!(text, "2 4 7\n1 3 2 6\n1 5 4 4\n");
        assert_eq!(Matrix::from_text(&f, &text).unwrap(), a);
        assert_eq!(Matrix::zeros(&f, 0, 4).to_text(), "0 4 7\n");
        assert!(Matrix::from_text(&f, "1 2 5\n1 1\n").is_err());
        assert!(Matrix::from_text(&f, "1 2 7\n1 9\n").is_err());
        assert!(Matrix::from_text(&f, "1 2 7\n1\n").is_err());
    }
}
