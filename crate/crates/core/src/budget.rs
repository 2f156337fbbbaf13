/// Work limits for the searches that have no a priori bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Budgets {
    /// Pollard rho iterations allowed per factorization.
    pub factor: u64,
    /// Maximal height for rational point enumeration on conics.
    pub height: u64,
    /// Retries for evenization transforms and skipped degenerate parameters.
    pub retry: u32,
}

impl Budgets {
    pub const DEFAULT_FACTOR: u64 = 10_000_000;
    pub const DEFAULT_HEIGHT: u64 = 10_000;
    pub const DEFAULT_RETRY: u32 = 64;
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            factor: Self::DEFAULT_FACTOR,
            height: Self::DEFAULT_HEIGHT,
            retry: Self::DEFAULT_RETRY,
        }
    }
}
