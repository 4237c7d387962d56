use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on ring cardinality.
pub const DEFAULT_RING_CAP: usize = 512;

/// Hard ceiling: element indices are stored as `u16`.
pub const MAX_RING_CAP: usize = 1 << 16;

/// Abstract syntax of a finite ring with identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingSpec {
    /// Integers modulo `m`.
    Zm(u32),
    /// The field with `p^k` elements.
    GF { p: u32, k: u32 },
    /// `n x n` matrices over `inner`.
    Mat { n: u32, inner: Box<RingSpec> },
    /// Direct product.
    Prod(Box<RingSpec>, Box<RingSpec>),
    /// `F_q[u]/(u^2)`.
    ChainQuad(u32),
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^k` with `p` prime; `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p as u32, k))
}

impl RingSpec {
    pub fn zm(m: u32) -> Self {
        RingSpec::Zm(m)
    }

    pub fn gf(p: u32, k: u32) -> Self {
        RingSpec::GF { p, k }
    }

    /// `GF(q)` for a prime power `q`.
    pub fn gf_q(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q as u64)
            .ok_or_else(|| Error::InvalidSpec(format!("GF({q}): {q} is not a prime power")))?;
        Ok(RingSpec::GF { p, k })
    }

    pub fn mat(n: u32, inner: RingSpec) -> Self {
        RingSpec::Mat { n, inner: Box::new(inner) }
    }

    pub fn prod(left: RingSpec, right: RingSpec) -> Self {
        RingSpec::Prod(Box::new(left), Box::new(right))
    }

    pub fn chain(q: u32) -> Self {
        RingSpec::ChainQuad(q)
    }

    /// Number of elements of the denoted ring, or `None` on overflow.
    pub fn cardinality(&self) -> Option<u128> {
        match self {
            RingSpec::Zm(m) => Some(*m as u128),
            RingSpec::GF { p, k } => (*p as u128).checked_pow(*k),
            RingSpec::Mat { n, inner } => {
                let exp = n.checked_mul(*n)?;
                inner.cardinality()?.checked_pow(exp)
            }
            RingSpec::Prod(l, r) => l.cardinality()?.checked_mul(r.cardinality()?),
            RingSpec::ChainQuad(q) => (*q as u128).checked_mul(*q as u128),
        }
    }

    /// Checks leaf parameters and the cardinality cap.
    pub fn validate(&self, cap: usize) -> Result<()> {
        self.validate_leaves()?;
        let size = self
            .cardinality()
            .ok_or_else(|| Error::CapExceeded { size: u128::MAX, cap })?;
        if size > cap as u128 || size > MAX_RING_CAP as u128 {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok(())
    }

    fn validate_leaves(&self) -> Result<()> {
        match self {
            RingSpec::Zm(m) if *m < 2 => Err(Error::InvalidSpec(format!("Z{m}: modulus must be at least 2"))),
            RingSpec::Zm(_) => Ok(()),
            RingSpec::GF { p, .. } if !is_prime(*p as u64) => {
                Err(Error::InvalidSpec(format!("GF: {p} is not prime")))
            }
            RingSpec::GF { k: 0, .. } => Err(Error::InvalidSpec("GF: degree must be at least 1".into())),
            RingSpec::GF { .. } => Ok(()),
            RingSpec::Mat { n: 0, .. } => Err(Error::InvalidSpec("M0: matrix size must be at least 1".into())),
            RingSpec::Mat { inner, .. } => inner.validate_leaves(),
            RingSpec::Prod(l, r) => {
                l.validate_leaves()?;
                r.validate_leaves()
            }
            RingSpec::ChainQuad(q) => match prime_power(*q as u64) {
                Some(_) => Ok(()),
                None => Err(Error::InvalidSpec(format!("CHAIN({q}): {q} is not a prime power"))),
            },
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zm(m) => write!(f, "Z{m}"),
            RingSpec::GF { p, k: 1 } => write!(f, "GF({p})"),
            RingSpec::GF { p, k } => write!(f, "GF({p}^{k})"),
            RingSpec::Mat { n, inner } => write!(f, "M{n}({inner})"),
            RingSpec::Prod(l, r) => match **r {
                RingSpec::Prod(..) => write!(f, "{l}x({r})"),
                _ => write!(f, "{l}x{r}"),
            },
            RingSpec::ChainQuad(q) => write!(f, "CHAIN({q})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn cardinalities() {
        assert_eq!(RingSpec::mat(2, RingSpec::gf(2, 1)).cardinality(), Some(16));
        assert_eq!(RingSpec::prod(RingSpec::zm(2), RingSpec::zm(3)).cardinality(), Some(6));
        assert_eq!(RingSpec::chain(4).cardinality(), Some(16));
    }

    #[test]
    fn validation() {
        assert!(RingSpec::zm(1).validate(512).is_err());
        assert!(RingSpec::gf(4, 1).validate(512).is_err());
        assert!(RingSpec::gf(2, 0).validate(512).is_err());
        assert!(RingSpec::mat(0, RingSpec::zm(2)).validate(512).is_err());
        assert!(RingSpec::chain(6).validate(512).is_err());
        assert!(matches!(
            RingSpec::mat(3, RingSpec::zm(3)).validate(512),
            Err(Error::CapExceeded { size: 19683, cap: 512 })
        ));
        assert!(RingSpec::mat(3, RingSpec::zm(2)).validate(512).is_ok());
    }

    #[test]
    fn display() {
        let s = RingSpec::prod(RingSpec::zm(2), RingSpec::prod(RingSpec::gf(2, 2), RingSpec::zm(3)));
        assert_eq!(s.to_string(), "Z2x(GF(2^2)xZ3)");
        assert_eq!(RingSpec::mat(2, RingSpec::gf(2, 1)).to_string(), "M2(GF(2))");
    }
}
