//! Longest common subsequence by the classical quadratic dynamic program.

use std::cmp::max;

/// Length of a longest common subsequence of `x` and `y`.
pub fn lcs_length<T: PartialEq>(x: &[T], y: &[T]) -> usize {
    LcsKernel::new().length(x.iter(), y)
}

/// One longest common subsequence of `x` and `y` as strictly increasing
/// index pairs `(i, j)` with `x[i] == y[j]`.
pub fn lcs_traceback<T: PartialEq>(x: &[T], y: &[T]) -> Vec<(usize, usize)> {
    LcsTable::new(x, y).traceback(x, y)
}

/// Length-only LCS with a reusable row buffer, for solvers that evaluate
/// many candidate strings against the same `y`.
#[derive(Debug, Default, Clone)]
pub struct LcsKernel {
    row: Vec<u32>,
}

impl LcsKernel {
    pub fn new() -> Self {
        Self::default()
    }

    /// LCS length of the symbols yielded by `x` against `y`. Runs in
    /// `O(|x|·|y|)` time and `O(|y|)` space.
    pub fn length<'a, T, I>(&mut self, x: I, y: &[T]) -> usize
    where
        T: PartialEq + 'a,
        I: IntoIterator<Item = &'a T>,
    {
        self.row.clear();
        self.row.resize(y.len() + 1, 0);
        let row = &mut self.row[..];
        for xs in x {
            let mut diag = 0;
            for (j, ys) in y.iter().enumerate() {
                let up = row[j + 1];
                row[j + 1] = if xs == ys { diag + 1 } else { max(up, row[j]) };
                diag = up;
            }
        }
        row[y.len()] as usize
    }
}

/// The full `(|x|+1) × (|y|+1)` dynamic-programming table.
#[derive(Debug, Clone)]
pub struct LcsTable {
    width: usize,
    cells: Vec<u32>,
}

impl LcsTable {
    pub fn new<T: PartialEq>(x: &[T], y: &[T]) -> Self {
        let width = y.len() + 1;
        let mut cells = vec![0u32; (x.len() + 1) * width];
        for i in 1..=x.len() {
            for j in 1..=y.len() {
                cells[i * width + j] = if x[i - 1] == y[j - 1] {
                    cells[(i - 1) * width + j - 1] + 1
                } else {
                    max(cells[(i - 1) * width + j], cells[i * width + j - 1])
                };
            }
        }
        LcsTable { width, cells }
    }

    pub fn rows(&self) -> usize {
        self.cells.len() / self.width
    }

    pub fn cols(&self) -> usize {
        self.width
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.width + j] as usize
    }

    pub fn length(&self) -> usize {
        self.get(self.rows() - 1, self.width - 1)
    }

    /// Walks back from the bottom-right corner. At each cell the diagonal
    /// move is taken when the symbols match, otherwise `x` is advanced when
    /// that keeps the value, otherwise `y`.
    pub fn traceback<T: PartialEq>(&self, x: &[T], y: &[T]) -> Vec<(usize, usize)> {
        debug_assert_eq!(self.rows(), x.len() + 1);
        debug_assert_eq!(self.cols(), y.len() + 1);
        let (mut i, mut j) = (x.len(), y.len());
        let mut pairs = Vec::with_capacity(self.length());
        while i > 0 && j > 0 {
            if x[i - 1] == y[j - 1] {
                pairs.push((i - 1, j - 1));
                i -= 1;
                j -= 1;
            } else if self.get(i - 1, j) == self.get(i, j) {
                i -= 1;
            } else {
                j -= 1;
            }
        }
        pairs.reverse();
        pairs
    }
}
