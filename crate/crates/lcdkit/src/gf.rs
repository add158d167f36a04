//! Dense matrix arithmetic over the prime fields GF(2) and GF(3).
//!
//! Everything downstream (point frames, generator matrices, Gram tests) is
//! built on [`GFMatrix`]. Matrices are small here (at most a few rows, a few
//! hundred columns), so entries are stored one byte each, row major; the
//! elimination routines are exact by construction since the fields are prime.

use crate::error::{Error, Result};

/// A prime field order, restricted to 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldOrder(u8);

impl FieldOrder {
    /// Wraps a supported field order.
    pub fn new(q: u8) -> Result<Self> {
        match q {
            2 | 3 => Ok(FieldOrder(q)),
            other => Err(Error::UnsupportedField(other)),
        }
    }

    /// The field order as an integer.
    #[inline]
    pub fn q(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.0
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        (a + self.0 - b) % self.0
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a * b) % self.0
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        (self.0 - a) % self.0
    }

    /// Multiplicative inverse of a nonzero element. For GF(2) and GF(3) every
    /// nonzero element is its own inverse.
    #[inline]
    pub fn inv(self, a: u8) -> Result<u8> {
        if a == 0 || a >= self.0 {
            return Err(Error::InvalidEntry { value: a, q: self.0 });
        }
        Ok(a)
    }

    /// Reduces an arbitrary nonnegative integer into the field.
    #[inline]
    pub fn reduce(self, a: u64) -> u8 {
        (a % self.0 as u64) as u8
    }
}

/// A dense matrix with entries in GF(q).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GFMatrix {
    q: FieldOrder,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl GFMatrix {
    /// Builds a matrix from explicit rows. All rows must have the same
    /// positive length and every entry must be a canonical field element.
    pub fn from_rows(q: FieldOrder, rows: &[Vec<u8>]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::ShapeMismatch("matrix must be nonempty".into()));
        }
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row length {} differs from {}",
                    row.len(),
                    cols
                )));
            }
            for &v in row {
                if v >= q.q() {
                    return Err(Error::InvalidEntry { value: v, q: q.q() });
                }
                data.push(v);
            }
        }
        Ok(GFMatrix { q, rows: rows.len(), cols, data })
    }

    /// The all-zero matrix of the given shape.
    pub fn zeros(q: FieldOrder, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch("matrix must be nonempty".into()));
        }
        Ok(GFMatrix { q, rows, cols, data: vec![0; rows * cols] })
    }

    /// The k-by-k identity.
    pub fn identity(q: FieldOrder, k: usize) -> Result<Self> {
        let mut m = Self::zeros(q, k, k)?;
        for i in 0..k {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> FieldOrder {
        self.q
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!(v < self.q.q());
        self.data[i * self.cols + j] = v;
    }

    /// Borrow of row `i`.
    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as an owned vector.
    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> GFMatrix {
        let mut t = GFMatrix {
            q: self.q,
            rows: self.cols,
            cols: self.rows,
            data: vec![0; self.data.len()],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Returns a copy with `col` appended on the right.
    pub fn append_column(&self, col: &[u8]) -> Result<GFMatrix> {
        if col.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "column length {} does not match row count {}",
                col.len(),
                self.rows
            )));
        }
        let mut out = GFMatrix::zeros(self.q, self.rows, self.cols + 1)?;
        for i in 0..self.rows {
            if col[i] >= self.q.q() {
                return Err(Error::InvalidEntry { value: col[i], q: self.q.q() });
            }
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            out.set(i, self.cols, col[i]);
        }
        Ok(out)
    }

    /// Inner product of two equal-length entry slices over this field.
    pub fn dot(q: FieldOrder, a: &[u8], b: &[u8]) -> u8 {
        debug_assert_eq!(a.len(), b.len());
        let mut acc: u64 = 0;
        for (&x, &y) in a.iter().zip(b) {
            acc += (x * y) as u64;
        }
        q.reduce(acc)
    }

    /// The Gram matrix G * G^T.
    pub fn gram(&self) -> GFMatrix {
        let mut g = GFMatrix::zeros(self.q, self.rows, self.rows).expect("rows >= 1");
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = Self::dot(self.q, self.row(i), self.row(j));
                g.set(i, j, v);
                g.set(j, i, v);
            }
        }
        g
    }

    /// Renders the matrix in the shared text format: a header line `q=<2|3>`
    /// followed by one line of bare digits per row.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(4 + self.rows * (self.cols + 1));
        out.push_str(&format!("q={}\n", self.q.q()));
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.push((b'0' + self.get(i, j)) as char);
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text format produced by [`GFMatrix::to_text`]. All rows must
    /// have equal length and contain only digits below q.
    pub fn from_text(s: &str) -> Result<GFMatrix> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedData("empty matrix text".into()))?;
        let q_val = header
            .trim()
            .strip_prefix("q=")
            .ok_or_else(|| Error::MalformedData(format!("expected q=<2|3> header, got {header:?}")))?
            .parse::<u8>()
            .map_err(|_| Error::MalformedData(format!("bad field order in {header:?}")))?;
        let q = FieldOrder::new(q_val)?;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for line in lines {
            let mut row = Vec::with_capacity(line.len());
            for ch in line.trim().chars() {
                let v = ch
                    .to_digit(10)
                    .ok_or_else(|| Error::MalformedData(format!("non-digit {ch:?} in matrix row")))?
                    as u8;
                if v >= q.q() {
                    return Err(Error::InvalidEntry { value: v, q: q.q() });
                }
                row.push(v);
            }
            rows.push(row);
        }
        GFMatrix::from_rows(q, &rows)
    }
}

/// Matrix product over a common field.
pub fn mat_mul(a: &GFMatrix, b: &GFMatrix) -> Result<GFMatrix> {
    if a.q != b.q {
        return Err(Error::FieldMismatch);
    }
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = GFMatrix::zeros(a.q, a.rows, b.cols)?;
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc: u64 = 0;
            for l in 0..a.cols {
                acc += (a.get(i, l) * b.get(l, j)) as u64;
            }
            out.set(i, j, a.q.reduce(acc));
        }
    }
    Ok(out)
}

/// Row echelon elimination on a copy; returns (reduced matrix, pivot columns).
///
/// The result is the reduced row echelon form: pivots are 1, pivot columns are
/// cleared above and below, pivot column indices (0-based) strictly increase.
/// Pivot choice is deterministic: the first nonzero entry scanning down the
/// current column.
pub fn rref(m: &GFMatrix) -> (GFMatrix, Vec<usize>) {
    let q = m.q;
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        let mut sel = None;
        for r in pivot_row..a.rows {
            if a.get(r, col) != 0 {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        if sel != pivot_row {
            for j in 0..a.cols {
                let t = a.get(sel, j);
                a.set(sel, j, a.get(pivot_row, j));
                a.set(pivot_row, j, t);
            }
        }
        let inv = q.inv(a.get(pivot_row, col)).expect("pivot is nonzero");
        if inv != 1 {
            for j in 0..a.cols {
                a.set(pivot_row, j, q.mul(a.get(pivot_row, j), inv));
            }
        }
        for r in 0..a.rows {
            if r == pivot_row {
                continue;
            }
            let f = a.get(r, col);
            if f != 0 {
                for j in 0..a.cols {
                    let v = q.sub(a.get(r, j), q.mul(f, a.get(pivot_row, j)));
                    a.set(r, j, v);
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    (a, pivots)
}

/// Rank via elimination.
pub fn rank(m: &GFMatrix) -> usize {
    rref(m).1.len()
}

/// Determinant of a square matrix, computed by elimination.
pub fn det(m: &GFMatrix) -> Result<u8> {
    if m.rows != m.cols {
        return Err(Error::NotSquare);
    }
    let q = m.q;
    let mut a = m.clone();
    let n = a.rows;
    let mut acc: u8 = 1;
    for col in 0..n {
        let mut sel = None;
        for r in col..n {
            if a.get(r, col) != 0 {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { return Ok(0) };
        if sel != col {
            for j in 0..n {
                let t = a.get(sel, j);
                a.set(sel, j, a.get(col, j));
                a.set(col, j, t);
            }
            acc = q.neg(acc);
        }
        let p = a.get(col, col);
        acc = q.mul(acc, p);
        let inv = q.inv(p).expect("pivot is nonzero");
        for r in col + 1..n {
            let f = q.mul(a.get(r, col), inv);
            if f != 0 {
                for j in col..n {
                    let v = q.sub(a.get(r, j), q.mul(f, a.get(col, j)));
                    a.set(r, j, v);
                }
            }
        }
    }
    Ok(acc)
}
