/// Budgets shared by the enumeration and lattice-point routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest side on which subsets are enumerated exhaustively.
    pub max_side: usize,
    /// Byte budget for the lattice-point layers.
    pub memory_budget: usize,
    /// Largest number of missing cross edges for supergraph enumeration.
    pub max_missing_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_side: 16,
            memory_budget: 2 << 30,
            max_missing_edges: 12,
        }
    }
}

impl Limits {
    /// Hilbert options using this memory budget and the default window.
    pub fn hilbert_options(&self) -> crate::hilbert::HilbertOptions {
        crate::hilbert::HilbertOptions::with_budget(self.memory_budget)
    }
}
