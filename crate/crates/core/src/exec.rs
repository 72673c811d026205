//! Execution strategy for per-source sweeps.

/// How per-source work is scheduled. Both strategies produce identical
/// results; only wall-clock time differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Rayon work-stealing. Falls back to sequential without the `parallel` feature.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Evaluates `f` on every index in `range`, returning results in index order.
    pub fn map<T, F>(self, range: std::ops::Range<usize>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                range.into_par_iter().map(f).collect()
            }
            _ => range.map(f).collect(),
        }
    }

    pub fn join<A, B, RA, RB>(self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => rayon::join(a, b),
            _ => (a(), b()),
        }
    }

    /// Maps `f` over `0..n` in chunks and folds each result into `acc` in
    /// ascending index order, keeping at most one chunk of results alive.
    pub fn fold_ordered<T, A, F, G>(self, n: usize, chunk: usize, mut acc: A, f: F, mut fold: G) -> A
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
        G: FnMut(&mut A, T),
    {
        let chunk = chunk.max(1);
        let mut start = 0;
        while start < n {
            let end = (start + chunk).min(n);
            for item in self.map(start..end, &f) {
                fold(&mut acc, item);
            }
            start = end;
        }
        acc
    }
}
