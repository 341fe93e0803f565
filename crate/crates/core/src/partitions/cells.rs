use serde::Serialize;

use super::Partition;

/// One box of a Young diagram, rows and columns counted from zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub hook: u64,
    /// `col - row`.
    pub content: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellData {
    pub cells: Vec<Cell>,
    /// `n(lambda) = sum_i (i-1) lambda_i`.
    pub n_lambda: u64,
}

impl CellData {
    pub fn hooks(&self) -> impl Iterator<Item = u64> + '_ {
        self.cells.iter().map(|c| c.hook)
    }

    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells.iter().map(|c| c.content)
    }
}

/// Hook lengths and contents of every cell, read row by row.
pub fn hooks_and_contents(lambda: &Partition) -> CellData {
    let conj = lambda.conjugate();
    let mut cells = Vec::with_capacity(lambda.size() as usize);
    for (row, &len) in lambda.parts().iter().enumerate() {
        for col in 0..len as usize {
            let arm = len - col as u64 - 1;
            let leg = conj.parts()[col] - row as u64 - 1;
            cells.push(Cell { row, col, hook: arm + leg + 1, content: col as i64 - row as i64 });
        }
    }
    CellData { cells, n_lambda: lambda.n_statistic() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_shape() {
        let data = hooks_and_contents(&"2,1".parse().unwrap());
        assert_eq!(data.hooks().collect::<Vec<_>>(), [3, 1, 1]);
        assert_eq!(data.contents().collect::<Vec<_>>(), [0, 1, -1]);
        assert_eq!(data.n_lambda, 1);
    }

    #[test]
    fn single_row_and_empty() {
        let data = hooks_and_contents(&Partition::row(4));
        assert_eq!(data.hooks().collect::<Vec<_>>(), [4, 3, 2, 1]);
        assert_eq!(data.contents().collect::<Vec<_>>(), [0, 1, 2, 3]);
        let empty = hooks_and_contents(&Partition::empty());
        assert!(empty.cells.is_empty());
        assert_eq!(empty.n_lambda, 0);
    }
}
