/// Desk-scale resource caps.
///
/// All caps turn runaway computations into clean [`crate::CoreError::ResourceLimit`]
/// errors instead of silent overflow or multi-hour runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest polynomial degree any operation may produce.
    pub degree_cap: u64,
    /// Largest constant-field extension degree `k` in `GF(p^k)`.
    pub max_extension_degree: usize,
    /// Largest `n` in `q = p^n` (the admissible index set has size `2^n`).
    pub max_n: u32,
    /// Largest candidate count a brute-force search may examine.
    pub search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_cap: 1 << 40,
            max_extension_degree: 16,
            max_n: 20,
            search_budget: 1 << 28,
        }
    }
}

impl Limits {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.search_budget = budget;
        self
    }
}
