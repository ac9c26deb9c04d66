//! Sparse-table range-minimum queries.

/// O(n log n) space, O(1) query sparse table over any `Ord + Copy` keys.
///
/// Queries return the minimum value; ties resolve by `Ord` on the value
/// itself, so callers wanting a deterministic argmin store `(key, index)`.
#[derive(Debug, Clone)]
pub struct SparseTable<T> {
    table: Vec<Vec<T>>,
}

impl<T: Ord + Copy> SparseTable<T> {
    pub fn new(values: &[T]) -> Self {
        let n = values.len();
        let mut table = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= n {
            let prev = table.last().unwrap();
            let next: Vec<T> = (0..=n - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            table.push(next);
            width *= 2;
        }
        SparseTable { table }
    }

    pub fn len(&self) -> usize {
        self.table[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.table[0].is_empty()
    }

    /// Minimum over the inclusive 0-based range `[l, r]`.
    #[inline]
    pub fn min(&self, l: usize, r: usize) -> T {
        debug_assert!(l <= r && r < self.len());
        let level = (usize::BITS - 1 - (r - l + 1).leading_zeros()) as usize;
        let row = &self.table[level];
        row[l].min(row[r + 1 - (1 << level)])
    }
}
