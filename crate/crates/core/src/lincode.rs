//! Left-linear codes `C <= R^n`, stored as their full (deduplicated) word set.
//!
//! Words keep a canonical order: for a code built from a generator matrix it
//! is the order in which the message sweep (lexicographic, first row most
//! significant) first produces each word; codes derived by shortening or
//! projection inherit the order of their parent. "Smallest message" tie-breaks
//! elsewhere in the crate refer to this order. Positions are 0-based.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homweight::HomWeightTable;
use crate::rational::{int, Rational};
use crate::ring::{Elem, Ring};

/// Default cap on `|R|^k`, the number of messages a build may sweep.
pub const DEFAULT_MESSAGE_CAP: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Elem>);

impl Word {
    pub fn zero(n: usize) -> Word {
        Word(vec![Elem::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn support(&self) -> BTreeSet<usize> {
        support(&self.0)
    }

    /// Hamming weight.
    pub fn ell(&self) -> usize {
        ell(&self.0)
    }

    pub fn add(&self, ring: &Ring, other: &Word) -> Word {
        Word(self.0.iter().zip(&other.0).map(|(&a, &b)| ring.add(a, b)).collect())
    }

    /// Left scalar multiple `r * self`.
    pub fn scale(&self, ring: &Ring, r: Elem) -> Word {
        Word(self.0.iter().map(|&a| ring.mul(r, a)).collect())
    }

    /// Coordinates outside `positions`, in order.
    pub fn project_off(&self, positions: &BTreeSet<usize>) -> Word {
        Word(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, &x)| x)
                .collect(),
        )
    }

    pub fn format(&self, ring: &Ring) -> String {
        let parts: Vec<String> = self.0.iter().map(|&x| ring.format_elem(x)).collect();
        format!("({})", parts.join(","))
    }
}

impl From<Vec<Elem>> for Word {
    fn from(v: Vec<Elem>) -> Self {
        Word(v)
    }
}

impl std::ops::Deref for Word {
    type Target = [Elem];
    fn deref(&self) -> &[Elem] {
        &self.0
    }
}

pub fn support(c: &[Elem]) -> BTreeSet<usize> {
    c.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
}

pub fn ell(c: &[Elem]) -> usize {
    c.iter().filter(|x| !x.is_zero()).count()
}

/// `{ r c : r in R }` in order of first appearance over `r = 0, 1, ...`.
pub fn cyclic_span(ring: &Ring, c: &Word) -> Vec<Word> {
    let mut seen = HashSet::new();
    ring.elements()
        .map(|r| c.scale(ring, r))
        .filter(|w| seen.insert(w.clone()))
        .collect()
}

/// `|Rc|`.
pub fn cyclic_size(ring: &Ring, c: &Word) -> usize {
    ring.elements().map(|r| c.scale(ring, r)).collect::<HashSet<_>>().len()
}

/// The cyclic submodule `Rc` of a codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubmodule {
    pub generator: Word,
    pub members: Vec<Word>,
}

impl CyclicSubmodule {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `c_i = alpha * u_i` with units `u_i` on the support of a minimum-Hamming word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinHammingStructure {
    pub alpha: Elem,
    pub units: BTreeMap<usize, Elem>,
}

#[derive(Clone)]
pub struct LinearCode {
    table: Arc<HomWeightTable>,
    n: usize,
    generators: Vec<Word>,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    support: BTreeSet<usize>,
    min_hamming: Option<usize>,
    min_hom_scaled: Option<i64>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearCode")
            .field("ring", &self.ring().spec().to_string())
            .field("n", &self.n)
            .field("size", &self.words.len())
            .field("min_hamming", &self.min_hamming)
            .field("min_hom_norm", &self.min_hom_norm().map(|r| r.to_string()))
            .finish()
    }
}

/// Spans the rows of `generators` with the default message cap.
pub fn build_code(table: Arc<HomWeightTable>, generators: Vec<Vec<Elem>>) -> Result<LinearCode> {
    build_code_with_cap(table, generators, DEFAULT_MESSAGE_CAP)
}

pub fn build_code_with_cap(
    table: Arc<HomWeightTable>,
    generators: Vec<Vec<Elem>>,
    cap: u128,
) -> Result<LinearCode> {
    let k = generators.len();
    if k == 0 {
        return Err(Error::DimensionMismatch("generator matrix has no rows".into()));
    }
    let n = generators[0].len();
    let size = table.ring().size();
    for (i, row) in generators.iter().enumerate() {
        if row.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "row {} has length {}, expected {n}",
                i + 1,
                row.len()
            )));
        }
        if let Some(x) = row.iter().find(|x| x.index() >= size) {
            return Err(Error::DimensionMismatch(format!("entry {x} is not in a ring of size {size}")));
        }
    }
    let messages = (size as u128)
        .checked_pow(k as u32)
        .filter(|&m| m <= cap)
        .ok_or(Error::EnumerationCap {
            messages: (size as u128).checked_pow(k as u32).unwrap_or(u128::MAX),
            cap,
        })?;
    let words = sweep(table.ring(), &generators, messages as usize);
    let generators = generators.into_iter().map(Word).collect();
    Ok(LinearCode::assemble(table, n, generators, words))
}

/// All `xG`, deduplicated in order of first appearance.
fn sweep(ring: &Ring, rows: &[Vec<Elem>], messages: usize) -> Vec<Word> {
    let (k, n, size) = (rows.len(), rows[0].len(), ring.size());
    let mut digits = vec![0usize; k];
    // partial[t] = sum_{i < t} x_i g_i
    let mut partial = vec![vec![Elem::ZERO; n]; k + 1];
    let mut seen: HashSet<Word> = HashSet::new();
    let mut out = Vec::new();
    for m in 0..messages {
        let w = Word(partial[k].clone());
        if seen.insert(w.clone()) {
            out.push(w);
        }
        if m + 1 == messages {
            break;
        }
        let mut i = k;
        loop {
            i -= 1;
            digits[i] += 1;
            if digits[i] < size {
                break;
            }
            digits[i] = 0;
        }
        for t in i..k {
            let x = Elem(digits[t] as u16);
            let (lo, hi) = partial.split_at_mut(t + 1);
            for j in 0..n {
                hi[0][j] = ring.add(lo[t][j], ring.mul(x, rows[t][j]));
            }
        }
    }
    out
}

impl LinearCode {
    /// The zero code `{0}` of length `n`.
    pub fn zero(table: Arc<HomWeightTable>, n: usize) -> LinearCode {
        LinearCode::assemble(table, n, vec![Word::zero(n)], vec![Word::zero(n)])
    }

    /// A code from an ordered, deduplicated word list that is already a left
    /// submodule; generators are chosen greedily in word order.
    fn from_submodule(table: Arc<HomWeightTable>, n: usize, words: Vec<Word>) -> LinearCode {
        let ring = table.ring_arc().clone();
        let mut span: HashSet<Word> = [Word::zero(n)].into_iter().collect();
        let mut generators = Vec::new();
        for w in &words {
            if span.contains(w) {
                continue;
            }
            let multiples = cyclic_span(&ring, w);
            let mut next = HashSet::with_capacity(span.len() * multiples.len());
            for s in &span {
                for m in &multiples {
                    next.insert(s.add(&ring, m));
                }
            }
            span = next;
            generators.push(w.clone());
        }
        if generators.is_empty() {
            generators.push(Word::zero(n));
        }
        LinearCode::assemble(table, n, generators, words)
    }

    fn assemble(table: Arc<HomWeightTable>, n: usize, generators: Vec<Word>, words: Vec<Word>) -> LinearCode {
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut support = BTreeSet::new();
        let mut min_hamming = None;
        let mut min_hom_scaled: Option<i64> = None;
        for w in words.iter().filter(|w| !w.is_zero()) {
            support.extend(w.support());
            let l = w.ell();
            min_hamming = Some(min_hamming.map_or(l, |m: usize| m.min(l)));
            let s = table.extend_scaled(w);
            min_hom_scaled = Some(min_hom_scaled.map_or(s, |m| m.min(s)));
        }
        LinearCode { table, n, generators, words, index, support, min_hamming, min_hom_scaled }
    }

    pub fn table(&self) -> &Arc<HomWeightTable> {
        &self.table
    }

    pub fn ring(&self) -> &Ring {
        self.table.ring()
    }

    /// Length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of codewords `M`.
    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn nonzero_words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter().filter(|w| !w.is_zero())
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn contains(&self, c: &Word) -> bool {
        self.index.contains_key(c)
    }

    /// Position of `c` in the canonical word order.
    pub fn position(&self, c: &Word) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// `supp(C)`, the union of all word supports.
    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    /// `ell(C) = |supp(C)|`.
    pub fn ell(&self) -> usize {
        self.support.len()
    }

    /// Minimum Hamming weight over nonzero words; `None` for the zero code.
    pub fn min_hamming(&self) -> Option<usize> {
        self.min_hamming
    }

    /// Minimum homogeneous weight divided by `gamma`; `None` for the zero code.
    pub fn min_hom_norm(&self) -> Option<Rational> {
        self.min_hom_scaled.map(|s| Rational::new(s.into(), self.table.scale().into()))
    }

    /// Normalized homogeneous weight of a word.
    pub fn weight_of(&self, c: &[Elem]) -> Rational {
        self.table.extend_weight(c)
    }

    /// Exhaustive closure check under addition and left scalar multiplication.
    pub fn is_closed(&self) -> bool {
        let ring = self.ring();
        self.words.iter().all(|a| {
            ring.elements().all(|r| self.contains(&a.scale(ring, r)))
                && self.words.iter().all(|b| self.contains(&a.add(ring, b)))
        })
    }

    /// `Sho(C, S) = { c in C : supp(c) is inside S }`, kept at length `n`.
    pub fn shorten(&self, positions: &BTreeSet<usize>) -> LinearCode {
        let words = self
            .words
            .iter()
            .filter(|w| w.support().is_subset(positions))
            .cloned()
            .collect();
        LinearCode::from_submodule(self.table.clone(), self.n, words)
    }

    /// `Sho(C, supp(x))`.
    pub fn shorten_by(&self, x: &Word) -> LinearCode {
        self.shorten(&x.support())
    }

    /// `Sho(C, S)` with the coordinates outside `S` dropped.
    pub fn shorten_compact(&self, positions: &BTreeSet<usize>) -> LinearCode {
        let outside: BTreeSet<usize> = (0..self.n).filter(|i| !positions.contains(i)).collect();
        self.shorten(positions).residual(&outside)
    }

    /// `Res(C, S)`: projection onto the coordinates outside `S`.
    pub fn residual(&self, positions: &BTreeSet<usize>) -> LinearCode {
        let kept = (0..self.n).filter(|i| !positions.contains(i)).count();
        let mut seen = HashSet::new();
        let words = self
            .words
            .iter()
            .map(|w| w.project_off(positions))
            .filter(|w| seen.insert(w.clone()))
            .collect();
        LinearCode::from_submodule(self.table.clone(), kept, words)
    }

    /// `Res(C, supp(x))`.
    pub fn residual_by(&self, x: &Word) -> LinearCode {
        self.residual(&x.support())
    }

    fn check_len(&self, x: &[Elem]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch(format!("word of length {} for a code of length {}", x.len(), self.n)));
        }
        Ok(())
    }

    /// `(1/|C|) sum_{c in C} w(x + c) / gamma`, by direct enumeration.
    pub fn coset_average(&self, x: &Word) -> Result<Rational> {
        self.check_len(x)?;
        let ring = self.ring();
        let total: i64 = self.words.iter().map(|c| self.table.extend_scaled(&x.add(ring, c))).sum();
        Ok(Rational::new(total.into(), (self.table.scale() * self.words.len() as i64).into()))
    }

    /// `ell(C) + sum_{i not in supp(C)} w(x_i) / gamma`, the closed form of the coset average.
    pub fn coset_average_closed_form(&self, x: &Word) -> Result<Rational> {
        self.check_len(x)?;
        let outside: i64 = (0..self.n)
            .filter(|i| !self.support.contains(i))
            .map(|i| self.table.scaled(x[i]))
            .sum();
        Ok(int(self.ell() as i64) + Rational::new(outside.into(), self.table.scale().into()))
    }

    pub fn cyclic_submodule(&self, c: &Word) -> Result<CyclicSubmodule> {
        if !self.contains(c) {
            return Err(Error::NotACodeword);
        }
        Ok(CyclicSubmodule { generator: c.clone(), members: cyclic_span(self.ring(), c) })
    }

    /// Writes a minimum-Hamming codeword as `c_i = alpha * u_i` with units `u_i`,
    /// and confirms `|Rc| = |R alpha|`.
    pub fn min_hamming_word_structure(&self, c: &Word) -> Result<MinHammingStructure> {
        if !self.contains(c) {
            return Err(Error::NotACodeword);
        }
        if c.is_zero() || Some(c.ell()) != self.min_hamming {
            return Err(Error::NotMinimumHamming);
        }
        let ring = self.ring();
        let supp: Vec<usize> = c.support().into_iter().collect();
        let first = c[supp[0]];
        // alpha must be c_first * v for a unit v
        let mut candidates: Vec<Elem> = ring.units().iter().map(|&v| ring.mul(first, v)).collect();
        candidates.sort();
        candidates.dedup();
        for alpha in candidates {
            let units: Option<BTreeMap<usize, Elem>> = supp
                .iter()
                .map(|&i| ring.units().iter().find(|&&u| ring.mul(alpha, u) == c[i]).map(|&u| (i, u)))
                .collect();
            if let Some(units) = units {
                let ralpha = cyclic_size(ring, &Word(vec![alpha]));
                if ralpha != cyclic_size(ring, c) {
                    return Err(Error::StructureViolation);
                }
                return Ok(MinHammingStructure { alpha, units });
            }
        }
        Err(Error::StructureViolation)
    }
}
