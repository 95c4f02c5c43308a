//! Split per-component center counts between the red and blue budgets.

/// Boolean table `T[k][a][b]`: the first `k` counts can be split into a part
/// summing to at most `a` and the rest to at most `b`.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    counts: Vec<usize>,
    p: usize,
    q: usize,
    entries: Vec<bool>,
}

impl PartitionTable {
    pub fn build(counts: &[usize], p: usize, q: usize) -> Self {
        let m = counts.len();
        let mut entries = vec![false; (m + 1) * (p + 1) * (q + 1)];
        let idx = |k: usize, a: usize, b: usize| (k * (p + 1) + a) * (q + 1) + b;
        let mut prefix = 0usize;
        for k in 0..=m {
            if k > 0 {
                prefix += counts[k - 1];
            }
            for a in 0..=p {
                for b in 0..=q {
                    let value = if prefix > a + b {
                        false
                    } else if k == 0 {
                        true
                    } else {
                        let n_k = counts[k - 1];
                        let red = n_k <= a && entries[idx(k - 1, a - n_k, b)];
                        let blue = n_k <= b && entries[idx(k - 1, a, b - n_k)];
                        red || blue
                    };
                    entries[idx(k, a, b)] = value;
                }
            }
        }
        PartitionTable {
            counts: counts.to_vec(),
            p,
            q,
            entries,
        }
    }

    pub fn get(&self, k: usize, a: usize, b: usize) -> bool {
        self.entries[(k * (self.p + 1) + a) * (self.q + 1) + b]
    }

    pub fn feasible(&self) -> bool {
        self.get(self.counts.len(), self.p, self.q)
    }

    /// Walks the table back from `T[m][p][q]`, preferring the red budget.
    pub fn backtrack(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if !self.feasible() {
            return None;
        }
        let (mut a, mut b) = (self.p, self.q);
        let mut red = Vec::new();
        let mut blue = Vec::new();
        for k in (1..=self.counts.len()).rev() {
            let n_k = self.counts[k - 1];
            if n_k <= a && self.get(k - 1, a - n_k, b) {
                red.push(k - 1);
                a -= n_k;
            } else {
                debug_assert!(n_k <= b && self.get(k - 1, a, b - n_k));
                blue.push(k - 1);
                b -= n_k;
            }
        }
        red.reverse();
        blue.reverse();
        Some((red, blue))
    }
}

/// Finds index sets `(A, B)` partitioning `0..counts.len()` with
/// `sum(A) <= p` and `sum(B) <= q`, or `None` when no such split exists.
pub fn partition_components(counts: &[usize], p: usize, q: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    PartitionTable::build(counts, p, q).backtrack()
}
