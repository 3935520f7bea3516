//! Enumeration caps. Most operations here are exponential in the worst case;
//! these limits keep them at desk scale and fail loudly beyond it.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest ground set for flat enumeration.
    pub flats_elements: usize,
    /// Largest ground set for exhaustive property checks.
    pub exhaustive_elements: usize,
    /// Largest ground set for the twice-attained membership test.
    pub tw_elements: usize,
    /// Largest rank for the twice-attained membership test.
    pub tw_rank: usize,
    /// Largest number of points an interval (or its DOT export) may hold.
    pub interval_points: usize,
    /// Largest box scanned by the brute-force oracles.
    pub oracle_box: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            flats_elements: 20,
            exhaustive_elements: 7,
            tw_elements: 20,
            tw_rank: 6,
            interval_points: 500,
            oracle_box: 2_000_000,
        }
    }
}
