//! Code families that meet the bounds, plus the Gray map and residual chains.

mod chain;
mod gray;

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homweight::{hom_weight_table, HomWeightTable};
use crate::lincode::{build_code, build_code_with_cap, LinearCode, DEFAULT_MESSAGE_CAP};
use crate::rational::int;
use crate::ring::{build_ring, Elem, RingSpec};
pub use chain::{residual_chain, ChainCertificate, ChainChecks, ChainInequality, ChainStage, ChosenWord, ResidualChain};
pub use gray::{gray_image, gray_map, BinaryCode, GrayWord};

/// Longest simplex code we are willing to build.
pub const SIMPLEX_LENGTH_CAP: u128 = 1 << 16;

/// The simplex code: one column for every nonzero element of `R^m`, in
/// lexicographic order of element indices (first coordinate most significant).
pub fn simplex(table: Arc<HomWeightTable>, m: usize) -> Result<LinearCode> {
    if m == 0 {
        return Err(Error::DimensionMismatch("simplex codes need m >= 1".into()));
    }
    let size = table.ring().size();
    let total = (size as u128)
        .checked_pow(m as u32)
        .filter(|&t| t - 1 <= SIMPLEX_LENGTH_CAP)
        .ok_or(Error::EnumerationCap { messages: u128::MAX, cap: SIMPLEX_LENGTH_CAP })?;
    let mut rows = vec![Vec::with_capacity(total as usize - 1); m];
    for col in 1..total as usize {
        let mut rest = col;
        for i in (0..m).rev() {
            rows[i].push(Elem((rest % size) as u16));
            rest /= size;
        }
    }
    build_code_with_cap(table, rows, DEFAULT_MESSAGE_CAP)
}

/// The Z4-linear Octacode, with the Lee weight (`gamma = 1`).
pub fn octacode() -> LinearCode {
    const ROWS: [[u16; 8]; 4] = [
        [1, 0, 0, 0, 3, 1, 2, 1],
        [0, 1, 0, 0, 1, 2, 3, 1],
        [0, 0, 1, 0, 3, 3, 3, 2],
        [0, 0, 0, 1, 2, 3, 1, 1],
    ];
    let ring = Arc::new(build_ring(&RingSpec::zm(4)).expect("Z4 builds"));
    let table = Arc::new(hom_weight_table(ring, int(1)).expect("Z4 has a homogeneous weight"));
    let rows = ROWS.iter().map(|r| r.iter().map(|&x| Elem(x)).collect()).collect();
    build_code(table, rows).expect("octacode builds")
}

/// Residue field size `q` of a chain ring of length 2; errors otherwise.
pub fn chain_length_two_q(ring: &crate::ring::Ring) -> Result<usize> {
    let not_chain = || Error::NotChainRingLength2(ring.spec().to_string());
    let q = ring.residue_field_size().map_err(|_| not_chain())?;
    let rad = ring.radical();
    let rad_squared_zero = rad.iter().all(|&a| rad.iter().all(|&b| ring.mul(a, b).is_zero()));
    if rad.len() < 2 || !rad_squared_zero || ring.size() != q * q {
        return Err(not_chain());
    }
    Ok(q)
}

/// The code whose columns are the points of the projective Hjelmslev line over
/// a chain ring of length 2: one column per cyclic right submodule `xR` with `x`
/// outside the radical of `R^2`, represented by its smallest generator.
pub fn hjelmslev_line(table: Arc<HomWeightTable>) -> Result<LinearCode> {
    let ring = table.ring_arc().clone();
    let q = chain_length_two_q(&ring)?;
    let rad = ring.radical();
    let mut points: BTreeSet<(Elem, Elem)> = BTreeSet::new();
    let mut covered: BTreeSet<(Elem, Elem)> = BTreeSet::new();
    for a in ring.elements() {
        for b in ring.elements() {
            if (rad.contains(&a) && rad.contains(&b)) || covered.contains(&(a, b)) {
                continue;
            }
            // pairs are visited in lexicographic order, so (a, b) is the
            // smallest generator of its point
            points.insert((a, b));
            for r in ring.elements() {
                covered.insert((ring.mul(a, r), ring.mul(b, r)));
            }
        }
    }
    if points.len() != q * q + q {
        return Err(Error::NotChainRingLength2(ring.spec().to_string()));
    }
    let rows = vec![
        points.iter().map(|p| p.0).collect(),
        points.iter().map(|p| p.1).collect(),
    ];
    build_code(table, rows)
}
