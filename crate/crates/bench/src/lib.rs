//! Shared inputs for the criterion benches.

use oscpoly::XPoly;

/// Index sweep used across benches.
pub const SIZES: [usize; 3] = [8, 16, 32];

/// Radial Laguerre polynomials `0..=max_n`, the usual Gram input.
pub fn radial_family(max_n: usize) -> Vec<XPoly> {
    (0..=max_n).map(oscpoly::laguerre_radial).collect()
}
