//! Brute-force oracles for tests.
//!
//! Nothing here shares code with `rab-core`: groups are handled through
//! their integer Tits representation and chamber systems as plain panel
//! partitions, so agreement with the library is independent evidence.

pub mod chambers;
pub mod tits;

pub use chambers::{ChamberData, PosetCounts};
pub use tits::{CayleyBall, TitsGroup};

/// Reduced Euler characteristic of the join of discrete sets of the given
/// sizes: `χ̃(A * B) = −χ̃(A) χ̃(B)` and `χ̃(m points) = m − 1`.
pub fn join_reduced_euler(sizes: &[usize]) -> i64 {
    let mut chi = -1i64;
    for &m in sizes {
        chi = -chi * (m as i64 - 1);
    }
    chi
}
