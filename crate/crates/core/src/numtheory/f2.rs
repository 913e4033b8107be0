use alloc::vec;
use alloc::vec::Vec;

const WORD: usize = 64;

fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD)
}

/// Dense matrix over F₂ with bit-packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u64>>,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            data: vec![vec![0; words_for(cols)]; rows],
        }
    }

    /// Builds a matrix from rows of booleans; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<bool>]) -> Self {
        let mut m = F2Matrix::zero(0, cols);
        for r in rows {
            m.push_row(r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        (self.data[i][j / WORD] >> (j % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols);
        let bit = 1u64 << (j % WORD);
        if value {
            self.data[i][j / WORD] |= bit;
        } else {
            self.data[i][j / WORD] &= !bit;
        }
    }

    pub fn push_row(&mut self, row: &[bool]) {
        assert_eq!(row.len(), self.cols, "row length must equal the column count");
        let mut packed = vec![0u64; words_for(self.cols)];
        for (j, &b) in row.iter().enumerate() {
            if b {
                packed[j / WORD] |= 1u64 << (j % WORD);
            }
        }
        self.data.push(packed);
        self.rows += 1;
    }

    pub fn row(&self, i: usize) -> Vec<bool> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    /// `A·x` over F₂.
    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| self.get(i, j) && x[j]).count() % 2 == 1)
            .collect()
    }
}

/// Solves `A·x = b` over F₂ by Gaussian elimination; `None` when inconsistent.
pub fn f2_solve(a: &F2Matrix, b: &[bool]) -> Option<Vec<bool>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length must equal the row count");
    let mut system = F2System::new(a.cols());
    for (row, &rhs) in a.data.iter().zip(b) {
        system.push(row.clone(), rhs);
    }
    system.solution()
}

pub fn f2_is_consistent(a: &F2Matrix, b: &[bool]) -> bool {
    f2_solve(a, b).is_some()
}

/// Incrementally reduced system `A·x = b` over F₂.
///
/// Each pushed row is reduced against the pivots seen so far, so checking
/// consistency after every append costs `O(rank · words)`.
#[derive(Debug, Clone)]
pub struct F2System {
    cols: usize,
    // (pivot column, reduced row, rhs); pivot column is the lowest set bit
    pivots: Vec<(usize, Vec<u64>, bool)>,
    inconsistent: bool,
}

impl F2System {
    pub fn new(cols: usize) -> Self {
        F2System {
            cols,
            pivots: Vec::new(),
            inconsistent: false,
        }
    }

    pub fn push_bools(&mut self, row: &[bool], rhs: bool) -> bool {
        assert_eq!(row.len(), self.cols);
        let mut packed = vec![0u64; words_for(self.cols)];
        for (j, &b) in row.iter().enumerate() {
            if b {
                packed[j / WORD] |= 1u64 << (j % WORD);
            }
        }
        self.push(packed, rhs)
    }

    /// Adds a row; returns whether the system is still consistent.
    fn push(&mut self, mut row: Vec<u64>, mut rhs: bool) -> bool {
        for (col, prow, prhs) in &self.pivots {
            if (row[col / WORD] >> (col % WORD)) & 1 == 1 {
                for (w, pw) in row.iter_mut().zip(prow) {
                    *w ^= pw;
                }
                rhs ^= prhs;
            }
        }
        match lowest_bit(&row) {
            Some(col) => self.pivots.push((col, row, rhs)),
            None if rhs => self.inconsistent = true,
            None => {}
        }
        !self.inconsistent
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A solution with all free variables set to zero.
    pub fn solution(&self) -> Option<Vec<bool>> {
        if self.inconsistent {
            return None;
        }
        let mut x = vec![false; self.cols];
        // Later pivots were reduced against earlier ones but not vice versa,
        // so back-substitute from the last pivot.
        for (col, row, rhs) in self.pivots.iter().rev() {
            let mut v = *rhs;
            for j in 0..self.cols {
                if j != *col && (row[j / WORD] >> (j % WORD)) & 1 == 1 && x[j] {
                    v ^= true;
                }
            }
            x[*col] = v;
        }
        Some(x)
    }
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
}
