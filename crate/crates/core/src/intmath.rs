//! Small exact integer linear algebra helpers: floor division, 2x2 matrices,
//! and Hermite normal forms for rank-2 lattices.

/// Floor division that works for any sign of the divisor.
pub fn floor_div(n: i64, d: i64) -> i64 {
    debug_assert!(d != 0);
    let q = n / d;
    let r = n % d;
    if r != 0 && ((r < 0) != (d < 0)) {
        q - 1
    } else {
        q
    }
}

/// 2x2 integer matrix in row-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    /// Apply to a column vector.
    pub fn apply(&self, x: i64, y: i64) -> (i64, i64) {
        (self.a * x + self.b * y, self.c * x + self.d * y)
    }
}

/// Column-style Hermite normal form of the lattice spanned by columns
/// `(a1, b1)` and `(a2, b2)`.
///
/// Returns `[[h11, 0], [h21, h22]]` with `h11 > 0`, `h22 > 0` and
/// `0 <= h21 < h22`; the columns span the same lattice as the input. The
/// input must be nonsingular.
pub fn column_hnf_2x2(a1: i64, b1: i64, a2: i64, b2: i64) -> Mat2 {
    let mut m = [[a1, a2], [b1, b2]];
    // Euclid on the first row to clear m[0][1].
    while m[0][1] != 0 {
        if m[0][0] == 0 {
            let (c0, c1) = (m[0][0], m[0][1]);
            m[0][0] = c1;
            m[0][1] = c0;
            let (c0, c1) = (m[1][0], m[1][1]);
            m[1][0] = c1;
            m[1][1] = c0;
            continue;
        }
        let q = floor_div(m[0][1], m[0][0]);
        m[0][1] -= q * m[0][0];
        m[1][1] -= q * m[1][0];
        if m[0][1] != 0 {
            for r in 0..2 {
                let (c0, c1) = (m[r][0], m[r][1]);
                m[r][0] = c1;
                m[r][1] = c0;
            }
        }
    }
    if m[0][0] < 0 {
        m[0][0] = -m[0][0];
        m[1][0] = -m[1][0];
    }
    if m[1][1] < 0 {
        m[1][1] = -m[1][1];
    }
    debug_assert!(m[0][0] > 0 && m[1][1] > 0);
    // Reduce h21 into [0, h22).
    let q = floor_div(m[1][0], m[1][1]);
    m[1][0] -= q * m[1][1];
    Mat2 { a: m[0][0], b: 0, c: m[1][0], d: m[1][1] }
}

/// Row-style Hermite normal form of a 2x3 integer matrix of full row rank.
///
/// Only unimodular row operations are applied, so the row lattice is
/// preserved. The result is the unique matrix with positive pivots in
/// strictly increasing column positions and entries above each pivot reduced
/// into `[0, pivot)`.
pub fn row_hnf_2x3(rows: [[i64; 3]; 2]) -> [[i64; 3]; 2] {
    let mut m = rows;
    let mut pivot_row = 0usize;
    let mut pivot_cols = [usize::MAX; 2];
    for col in 0..3 {
        if pivot_row >= 2 {
            break;
        }
        // Euclid within the column over rows >= pivot_row.
        loop {
            let mut nonzero: Vec<usize> = (pivot_row..2).filter(|&r| m[r][col] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                let r = nonzero[0];
                m.swap(pivot_row, r);
                break;
            }
            nonzero.sort_by_key(|&r| m[r][col].unsigned_abs());
            let (small, large) = (nonzero[0], nonzero[1]);
            let q = floor_div(m[large][col], m[small][col]);
            for k in 0..3 {
                m[large][k] -= q * m[small][k];
            }
        }
        if m[pivot_row][col] != 0 {
            if m[pivot_row][col] < 0 {
                for k in 0..3 {
                    m[pivot_row][k] = -m[pivot_row][k];
                }
            }
            pivot_cols[pivot_row] = col;
            pivot_row += 1;
        }
    }
    debug_assert_eq!(pivot_row, 2, "matrix must have row rank 2");
    // Reduce the entry above the second pivot.
    let col = pivot_cols[1];
    let q = floor_div(m[0][col], m[1][col]);
    for k in 0..3 {
        m[0][k] -= q * m[1][k];
    }
    m
}
