//! Finite rings with identity as explicit operation tables.
//!
//! Elements are dense indices `0..size` with `0` the additive and `1` the
//! multiplicative identity. Every constructor also fixes a canonical additive
//! character `x -> zeta_N^{e(x)}`, stored as the exponent map `e`, and the
//! builder refuses to return a ring whose character is not generating.

mod field;
mod literal;
mod spec;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use field::Modulus;
pub use spec::{prime_power, RingSpec, DEFAULT_RING_CAP, MAX_RING_CAP};

/// Environment variable overriding [`DEFAULT_RING_CAP`].
pub const CAP_ENV: &str = "FROBCODE_CAP";

/// Ring-size cap in effect: `FROBCODE_CAP` if set and parseable, else the default.
pub fn ring_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_RING_CAP)
}

/// Index of a ring element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A principal one-sided ideal `Rx` or `xR`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub side: Side,
    pub generator: Elem,
    pub members: BTreeSet<Elem>,
}

impl Ideal {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(&x)
    }
}

/// How natural indices decompose, for literals and coordinates.
#[derive(Debug, Clone)]
enum Layout {
    Zm,
    Field(Modulus),
    Mat { n: usize, inner: Arc<Ring> },
    Prod { left: Arc<Ring>, right: Arc<Ring> },
    Chain { field: Arc<Ring> },
}

#[derive(Debug, Clone)]
pub struct Ring {
    spec: RingSpec,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    units: Vec<Elem>,
    unit_mask: Vec<bool>,
    add_exponent: u32,
    char_exp: Vec<u32>,
    layout: Layout,
    // index -> natural index and back; they differ only by moving the
    // identity to index 1.
    nat_of: Vec<u16>,
    idx_of: Vec<u16>,
}

/// Tables over natural indices, before the identity is moved to index 1.
struct Raw {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    one: usize,
    char_exp: Vec<u32>,
    order: u32,
    layout: Layout,
}

impl Raw {
    fn from_fns(
        size: usize,
        one: usize,
        order: u32,
        layout: Layout,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        char_exp: impl Fn(usize) -> u32,
    ) -> Raw {
        let mut at = Vec::with_capacity(size * size);
        let mut mt = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                at.push(add(a, b));
                mt.push(mul(a, b));
            }
        }
        Raw {
            size,
            add: at,
            mul: mt,
            one,
            char_exp: (0..size).map(char_exp).collect(),
            order,
            layout,
        }
    }
}

/// Builds a ring with the cap from [`ring_cap`].
pub fn build_ring(spec: &RingSpec) -> Result<Ring> {
    build_ring_with_cap(spec, ring_cap())
}

pub fn build_ring_with_cap(spec: &RingSpec, cap: usize) -> Result<Ring> {
    spec.validate(cap)?;
    let ring = build_unchecked(spec)?;
    if !ring.is_generating_character(&ring.char_exp, ring.add_exponent)? {
        return Err(Error::NotGenerating(spec.to_string()));
    }
    Ok(ring)
}

fn build_unchecked(spec: &RingSpec) -> Result<Ring> {
    let raw = match spec {
        RingSpec::Zm(m) => {
            let m = *m as usize;
            Raw::from_fns(m, 1, m as u32, Layout::Zm, |a, b| (a + b) % m, |a, b| (a * b) % m, |x| x as u32)
        }
        RingSpec::GF { p, k } => {
            let modulus = Modulus::smallest_irreducible(*p, *k);
            let size = modulus.size();
            let (ma, mm, mt) = (modulus.clone(), modulus.clone(), modulus.clone());
            Raw::from_fns(
                size,
                1,
                *p,
                Layout::Field(modulus),
                move |a, b| ma.add(a, b),
                move |a, b| mm.mul(a, b),
                move |x| mt.trace(x),
            )
        }
        RingSpec::Mat { n, inner } => {
            let inner = Arc::new(build_unchecked(inner)?);
            mat_raw(*n as usize, inner)
        }
        RingSpec::Prod(l, r) => {
            let left = Arc::new(build_unchecked(l)?);
            let right = Arc::new(build_unchecked(r)?);
            prod_raw(left, right)
        }
        RingSpec::ChainQuad(q) => {
            let (p, f) = prime_power(*q as u64)
                .ok_or_else(|| Error::InvalidSpec(format!("CHAIN({q}): not a prime power")))?;
            let field = Arc::new(build_unchecked(&RingSpec::GF { p, k: f })?);
            chain_raw(field)
        }
    };
    Ok(Ring::from_raw(spec.clone(), raw))
}

fn mat_raw(n: usize, inner: Arc<Ring>) -> Raw {
    let s = inner.size;
    let cells = n * n;
    let size = s.pow(cells as u32);
    let entries = move |mut x: usize| -> Vec<Elem> {
        let mut out = Vec::with_capacity(cells);
        for _ in 0..cells {
            out.push(Elem((x % s) as u16));
            x /= s;
        }
        out
    };
    let pack = move |e: &[Elem]| e.iter().rev().fold(0usize, |acc, x| acc * s + x.index());
    let one: Vec<Elem> = (0..cells).map(|c| if c / n == c % n { Elem::ONE } else { Elem::ZERO }).collect();
    let order = inner.add_exponent;
    let (ia, im, ic) = (inner.clone(), inner.clone(), inner.clone());
    let (ea, em, ec) = (entries.clone(), entries.clone(), entries);
    Raw::from_fns(
        size,
        pack(&one),
        order,
        Layout::Mat { n, inner },
        move |a, b| {
            let (x, y) = (ea(a), ea(b));
            let sum: Vec<Elem> = x.iter().zip(&y).map(|(&u, &v)| ia.add(u, v)).collect();
            pack(&sum)
        },
        move |a, b| {
            let (x, y) = (em(a), em(b));
            let mut out = vec![Elem::ZERO; cells];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = Elem::ZERO;
                    for l in 0..n {
                        acc = im.add(acc, im.mul(x[i * n + l], y[l * n + j]));
                    }
                    out[i * n + j] = acc;
                }
            }
            pack(&out)
        },
        move |a| {
            let x = ec(a);
            let tr = (0..n).fold(Elem::ZERO, |acc, i| ic.add(acc, x[i * n + i]));
            ic.char_exp(tr)
        },
    )
}

fn prod_raw(left: Arc<Ring>, right: Arc<Ring>) -> Raw {
    let (sl, sr) = (left.size, right.size);
    let order = left.add_exponent.lcm(&right.add_exponent);
    let (fl, fr) = (order / left.add_exponent, order / right.add_exponent);
    let (la, lm, lc) = (left.clone(), left.clone(), left.clone());
    let (ra, rm, rc) = (right.clone(), right.clone(), right.clone());
    let split = move |x: usize| (Elem((x % sl) as u16), Elem((x / sl) as u16));
    Raw::from_fns(
        sl * sr,
        1 + sl,
        order,
        Layout::Prod { left, right },
        move |a, b| {
            let ((a0, a1), (b0, b1)) = (split(a), split(b));
            la.add(a0, b0).index() + sl * ra.add(a1, b1).index()
        },
        move |a, b| {
            let ((a0, a1), (b0, b1)) = (split(a), split(b));
            lm.mul(a0, b0).index() + sl * rm.mul(a1, b1).index()
        },
        move |a| {
            let (a0, a1) = split(a);
            (fl * lc.char_exp(a0) + fr * rc.char_exp(a1)) % order
        },
    )
}

fn chain_raw(field: Arc<Ring>) -> Raw {
    let q = field.size;
    let order = field.add_exponent;
    let split = move |x: usize| (Elem((x % q) as u16), Elem((x / q) as u16));
    let (fa, fm, fc) = (field.clone(), field.clone(), field.clone());
    Raw::from_fns(
        q * q,
        1,
        order,
        Layout::Chain { field },
        move |a, b| {
            let ((a0, a1), (b0, b1)) = (split(a), split(b));
            fa.add(a0, b0).index() + q * fa.add(a1, b1).index()
        },
        move |a, b| {
            // (a0 + a1 u)(b0 + b1 u) = a0 b0 + (a0 b1 + a1 b0) u
            let ((a0, a1), (b0, b1)) = (split(a), split(b));
            let lin = fm.add(fm.mul(a0, b1), fm.mul(a1, b0));
            fm.mul(a0, b0).index() + q * lin.index()
        },
        move |a| {
            let (a0, a1) = split(a);
            fc.char_exp(fc.add(a0, a1))
        },
    )
}

impl Ring {
    fn from_raw(spec: RingSpec, raw: Raw) -> Ring {
        let size = raw.size;
        let mut nat_of: Vec<u16> = (0..size as u16).collect();
        nat_of.swap(1, raw.one);
        let mut idx_of = vec![0u16; size];
        for (i, &n) in nat_of.iter().enumerate() {
            idx_of[n as usize] = i as u16;
        }
        let mut add = vec![0u16; size * size];
        let mut mul = vec![0u16; size * size];
        for a in 0..size {
            let na = nat_of[a] as usize;
            for b in 0..size {
                let nb = nat_of[b] as usize;
                add[a * size + b] = idx_of[raw.add[na * size + nb]];
                mul[a * size + b] = idx_of[raw.mul[na * size + nb]];
            }
        }
        let neg = (0..size)
            .map(|a| (0..size).find(|&b| add[a * size + b] == 0).expect("additive inverse") as u16)
            .collect();
        let char_exp = (0..size).map(|i| raw.char_exp[nat_of[i] as usize]).collect();
        let mut unit_mask = vec![false; size];
        for u in 0..size {
            unit_mask[u] = (0..size).any(|v| mul[u * size + v] == 1 && mul[v * size + u] == 1);
        }
        let units = (0..size).filter(|&u| unit_mask[u]).map(|u| Elem(u as u16)).collect();
        Ring {
            spec,
            size,
            add,
            mul,
            neg,
            units,
            unit_mask,
            add_exponent: raw.order,
            char_exp,
            layout: raw.layout,
            nat_of,
            idx_of,
        }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size as u16).map(Elem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.size as u16).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.index() * self.size + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.size + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn units(&self) -> &[Elem] {
        &self.units
    }

    #[inline]
    pub fn is_unit(&self, x: Elem) -> bool {
        self.unit_mask[x.index()]
    }

    /// Exponent of the additive group; character values are `N`-th roots of unity.
    pub fn add_exponent(&self) -> u32 {
        self.add_exponent
    }

    /// Exponent of the canonical generating character at `x`.
    #[inline]
    pub fn char_exp(&self, x: Elem) -> u32 {
        self.char_exp[x.index()]
    }

    pub fn char_exps(&self) -> &[u32] {
        &self.char_exp
    }

    /// Natural coordinates of `x`: the residue for `Zm`, polynomial coefficients
    /// for fields, row-major entries for matrices, `(left, right)` for products
    /// and `(a, b)` for `a + bu` in chain rings.
    pub fn coordinates(&self, x: Elem) -> Vec<usize> {
        let nat = self.nat_of[x.index()] as usize;
        let base_digits = |base: usize, count: usize| {
            let mut v = Vec::with_capacity(count);
            let mut rest = nat;
            for _ in 0..count {
                v.push(rest % base);
                rest /= base;
            }
            v
        };
        match &self.layout {
            Layout::Zm => vec![nat],
            Layout::Field(m) => base_digits(m.p as usize, m.degree()),
            Layout::Mat { n, inner } => base_digits(inner.size, n * n),
            Layout::Prod { left, .. } => vec![nat % left.size, nat / left.size],
            Layout::Chain { field } => vec![nat % field.size, nat / field.size],
        }
    }

    /// Inverse of [`Ring::coordinates`].
    pub fn from_coordinates(&self, coords: &[usize]) -> Option<Elem> {
        let pack = |base: usize, count: usize| -> Option<usize> {
            if coords.len() != count || coords.iter().any(|&c| c >= base) {
                return None;
            }
            Some(coords.iter().rev().fold(0usize, |acc, &c| acc * base + c))
        };
        let nat = match &self.layout {
            Layout::Zm => pack(self.size, 1)?,
            Layout::Field(m) => pack(m.p as usize, m.degree())?,
            Layout::Mat { n, inner } => pack(inner.size, n * n)?,
            Layout::Prod { left, right } => {
                if coords.len() != 2 || coords[0] >= left.size || coords[1] >= right.size {
                    return None;
                }
                coords[0] + left.size * coords[1]
            }
            Layout::Chain { field } => pack(field.size, 2)?,
        };
        Some(Elem(self.idx_of[nat]))
    }

    /// Component rings: the matrix entry ring, the two factors, or the residue field.
    pub fn components(&self) -> Vec<&Ring> {
        match &self.layout {
            Layout::Zm | Layout::Field(_) => vec![],
            Layout::Mat { inner, .. } => vec![inner.as_ref()],
            Layout::Prod { left, right } => vec![left.as_ref(), right.as_ref()],
            Layout::Chain { field } => vec![field.as_ref()],
        }
    }

    /// Exhaustive check of the ring axioms; `O(|R|^3)`.
    pub fn check_ring_axioms(&self) -> std::result::Result<(), String> {
        let one = Elem::ONE;
        for a in self.elements() {
            if self.add(a, Elem::ZERO) != a || self.add(a, self.neg(a)) != Elem::ZERO {
                return Err(format!("additive identity/inverse fails at {a}"));
            }
            if self.mul(a, one) != a || self.mul(one, a) != a {
                return Err(format!("multiplicative identity fails at {a}"));
            }
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) {
                    return Err(format!("addition not commutative at {a},{b}"));
                }
                for c in self.elements() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(format!("addition not associative at {a},{b},{c}"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("multiplication not associative at {a},{b},{c}"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                        || self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c))
                    {
                        return Err(format!("distributivity fails at {a},{b},{c}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn principal_ideal(&self, x: Elem, side: Side) -> Ideal {
        let members = self
            .elements()
            .map(|r| match side {
                Side::Left => self.mul(r, x),
                Side::Right => self.mul(x, r),
            })
            .collect();
        Ideal { side, generator: x, members }
    }

    /// True iff `exps` defines a generating character: for every nonzero `x`
    /// both `Rx` and `xR` leave the kernel.
    pub fn is_generating_character(&self, exps: &[u32], order: u32) -> Result<bool> {
        if exps.len() != self.size {
            return Err(Error::DimensionMismatch(format!(
                "character has {} values for a ring of size {}",
                exps.len(),
                self.size
            )));
        }
        for a in self.elements() {
            for b in self.elements() {
                let lhs = exps[self.add(a, b).index()] % order;
                let rhs = (exps[a.index()] + exps[b.index()]) % order;
                if lhs != rhs {
                    return Err(Error::MalformedCharacter(a.index(), b.index()));
                }
            }
        }
        let escapes = |x: Elem, side: Side| {
            self.elements().any(|r| {
                let y = match side {
                    Side::Left => self.mul(r, x),
                    Side::Right => self.mul(x, r),
                };
                exps[y.index()] % order != 0
            })
        };
        Ok(self.nonzero().all(|x| escapes(x, Side::Left) && escapes(x, Side::Right)))
    }

    /// Minimal nonzero left ideals, deduplicated, ordered by smallest generator.
    pub fn minimal_left_ideals(&self) -> Vec<Ideal> {
        let sizes: Vec<usize> =
            self.elements().map(|x| self.principal_ideal(x, Side::Left).len()).collect();
        let mut out: Vec<Ideal> = Vec::new();
        for x in self.nonzero() {
            let ideal = self.principal_ideal(x, Side::Left);
            let minimal = ideal.members.iter().all(|&y| y.is_zero() || sizes[y.index()] == ideal.len());
            if minimal && !out.iter().any(|i| i.members == ideal.members) {
                out.push(ideal);
            }
        }
        out
    }

    /// Jacobson radical: all `x` with `1 - rx` left-invertible for every `r`.
    pub fn radical(&self) -> BTreeSet<Elem> {
        let left_invertible: Vec<bool> = self
            .elements()
            .map(|a| self.elements().any(|v| self.mul(v, a) == Elem::ONE))
            .collect();
        self.elements()
            .filter(|&x| {
                self.elements()
                    .all(|r| left_invertible[self.sub(Elem::ONE, self.mul(r, x)).index()])
            })
            .collect()
    }

    /// A finite ring is local iff its non-units form the radical.
    pub fn is_local(&self) -> bool {
        let rad = self.radical();
        self.elements().all(|x| rad.contains(&x) != self.is_unit(x))
    }

    /// Size `q` of the residue field of a local ring.
    pub fn residue_field_size(&self) -> Result<usize> {
        if !self.is_local() {
            return Err(Error::NotLocal(self.spec.to_string()));
        }
        Ok(self.size / self.radical().len())
    }

    /// Socle of a local ring: elements annihilated by the radical on both sides.
    pub fn socle_local(&self) -> Result<BTreeSet<Elem>> {
        if !self.is_local() {
            return Err(Error::NotLocal(self.spec.to_string()));
        }
        let rad = self.radical();
        Ok(self
            .elements()
            .filter(|&x| rad.iter().all(|&j| self.mul(x, j).is_zero() && self.mul(j, x).is_zero()))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(spec: RingSpec) -> Ring {
        build_ring_with_cap(&spec, DEFAULT_RING_CAP).unwrap()
    }

    fn set(v: &[u16]) -> BTreeSet<Elem> {
        v.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn z4_basics() {
        let r = ring(RingSpec::zm(4));
        assert_eq!(r.size(), 4);
        assert_eq!(r.units(), &[Elem(1), Elem(3)]);
        assert_eq!(r.add_exponent(), 4);
        assert_eq!(r.char_exps(), &[0, 1, 2, 3]);
    }

    // Independent count of invertible 2x2 binary matrices via the determinant.
    fn gl2_f2_count() -> usize {
        (0..16u32)
            .filter(|m| {
                let (a, b, c, d) = (m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1);
                (a * d + b * c) % 2 == 1
            })
            .count()
    }

    #[test]
    fn m2_f2_units() {
        let r = ring(RingSpec::mat(2, RingSpec::gf(2, 1)));
        assert_eq!(r.size(), 16);
        assert_eq!(gl2_f2_count(), 6);
        assert_eq!(r.units().len(), gl2_f2_count());
        for u in r.units() {
            let c = r.coordinates(*u);
            assert_eq!((c[0] * c[3] + c[1] * c[2]) % 2, 1);
        }
    }

    #[test]
    fn z2_x_z3() {
        let r = ring(RingSpec::prod(RingSpec::zm(2), RingSpec::zm(3)));
        assert_eq!(r.size(), 6);
        assert_eq!(r.add_exponent(), 6);
        // brute force over pairs: (a, b) is a unit iff a = 1 and b != 0
        let expected = (0..2).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|&(a, b)| a == 1 && b != 0).count();
        assert_eq!(r.units().len(), expected);
        assert_eq!(expected, 2);
    }

    #[test]
    fn identity_sits_at_index_one() {
        for spec in [
            RingSpec::mat(2, RingSpec::gf(2, 1)),
            RingSpec::prod(RingSpec::zm(2), RingSpec::zm(3)),
            RingSpec::chain(4),
            RingSpec::gf(3, 2),
        ] {
            let r = ring(spec);
            for x in r.elements() {
                assert_eq!(r.mul(Elem::ONE, x), x);
                assert_eq!(r.mul(x, Elem::ONE), x);
            }
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let r = ring(RingSpec::mat(2, RingSpec::zm(3)));
        for x in r.elements() {
            assert_eq!(r.from_coordinates(&r.coordinates(x)), Some(x));
        }
        assert_eq!(r.coordinates(Elem::ONE), vec![1, 0, 0, 1]);
    }

    #[test]
    fn principal_ideals() {
        let r = ring(RingSpec::zm(4));
        assert_eq!(r.principal_ideal(Elem(2), Side::Left).members, set(&[0, 2]));
        assert_eq!(r.principal_ideal(Elem(3), Side::Left).members, set(&[0, 1, 2, 3]));

        let m = ring(RingSpec::mat(2, RingSpec::gf(2, 1)));
        let e11 = m.from_coordinates(&[1, 0, 0, 0]).unwrap();
        // r * E11 keeps only the first column of r: 4 choices
        let expected: BTreeSet<Vec<usize>> =
            (0..16).map(|i| m.coordinates(m.mul(Elem(i), e11))).collect();
        assert_eq!(expected.len(), 4);
        assert_eq!(m.principal_ideal(e11, Side::Left).len(), 4);
    }

    #[test]
    fn generating_characters() {
        let r = ring(RingSpec::zm(4));
        assert!(r.is_generating_character(&[0, 1, 2, 3], 4).unwrap());
        assert!(!r.is_generating_character(&[0, 2, 0, 2], 4).unwrap());
        assert!(matches!(
            r.is_generating_character(&[0, 1, 1, 3], 4),
            Err(Error::MalformedCharacter(..))
        ));
        let m = ring(RingSpec::mat(2, RingSpec::gf(2, 1)));
        assert!(m.is_generating_character(m.char_exps(), 2).unwrap());
        // the zero character is never generating
        assert!(!m.is_generating_character(&[0; 16], 2).unwrap());
    }

    #[test]
    fn minimal_ideals() {
        let z4 = ring(RingSpec::zm(4));
        let mins = z4.minimal_left_ideals();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].members, set(&[0, 2]));

        let m = ring(RingSpec::mat(2, RingSpec::gf(2, 1)));
        let mins = m.minimal_left_ideals();
        assert_eq!(mins.len(), 3);
        assert!(mins.iter().all(|i| i.len() == 4));

        let gf4 = ring(RingSpec::gf(2, 2));
        let mins = gf4.minimal_left_ideals();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].len(), 4);
    }

    #[test]
    fn radical_and_socle() {
        let z4 = ring(RingSpec::zm(4));
        assert_eq!(z4.radical(), set(&[0, 2]));
        assert_eq!(z4.socle_local().unwrap(), set(&[0, 2]));

        let gf9 = ring(RingSpec::gf(3, 2));
        assert_eq!(gf9.radical(), set(&[0]));

        let c2 = ring(RingSpec::chain(2));
        let u = c2.from_coordinates(&[0, 1]).unwrap();
        let expected: BTreeSet<Elem> = [Elem::ZERO, u].into_iter().collect();
        assert_eq!(c2.radical(), expected);
        assert_eq!(c2.socle_local().unwrap(), expected);
        assert_eq!(c2.residue_field_size().unwrap(), 2);

        let z6 = ring(RingSpec::zm(6));
        assert!(matches!(z6.socle_local(), Err(Error::NotLocal(_))));
    }

    #[test]
    fn ring_axioms_hold() {
        for spec in [
            RingSpec::zm(6),
            RingSpec::gf(2, 3),
            RingSpec::mat(2, RingSpec::gf(2, 1)),
            RingSpec::prod(RingSpec::zm(2), RingSpec::gf(2, 2)),
            RingSpec::chain(4),
        ] {
            let r = ring(spec.clone());
            r.check_ring_axioms().unwrap_or_else(|e| panic!("{spec}: {e}"));
            assert_eq!(r.size() as u128, spec.cardinality().unwrap());
        }
    }
}
