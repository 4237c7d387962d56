use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lincode::{LinearCode, Word};
use crate::ring::{Ring, RingSpec};

/// Binary image of a Z4 word, two bits per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrayWord(pub Vec<u8>);

impl GrayWord {
    pub fn hamming_weight(&self) -> usize {
        self.0.iter().filter(|&&b| b != 0).count()
    }

    pub fn distance(&self, other: &GrayWord) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }
}

/// A (possibly nonlinear) binary code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    pub n: usize,
    pub words: Vec<GrayWord>,
}

impl BinaryCode {
    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Minimum distance over distinct pairs; `None` with fewer than two words.
    pub fn min_distance(&self) -> Option<usize> {
        let mut best = None;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                let d = a.distance(b);
                best = Some(best.map_or(d, |m: usize| m.min(d)));
            }
        }
        best
    }
}

fn require_z4(ring: &Ring) -> Result<()> {
    if ring.spec() != &RingSpec::Zm(4) {
        return Err(Error::WrongRing { expected: "Z4".into(), actual: ring.spec().to_string() });
    }
    Ok(())
}

/// Coordinatewise `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`.
pub fn gray_map(ring: &Ring, c: &Word) -> Result<GrayWord> {
    require_z4(ring)?;
    let mut bits = Vec::with_capacity(2 * c.len());
    for &x in c.iter() {
        let pair: [u8; 2] = match ring.coordinates(x)[0] {
            0 => [0, 0],
            1 => [0, 1],
            2 => [1, 1],
            _ => [1, 0],
        };
        bits.extend_from_slice(&pair);
    }
    Ok(GrayWord(bits))
}

pub fn gray_image(code: &LinearCode) -> Result<BinaryCode> {
    let ring = code.ring();
    require_z4(ring)?;
    let mut seen = HashSet::new();
    let mut words = Vec::with_capacity(code.size());
    for c in code.words() {
        let g = gray_map(ring, c)?;
        if seen.insert(g.clone()) {
            words.push(g);
        }
    }
    Ok(BinaryCode { n: 2 * code.n(), words })
}
