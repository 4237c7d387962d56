//! Exact rationals and their `"p/q"` string form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Always `p/q`, including `q = 1`.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (BigInt, BigInt) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Smallest integer `t` with `base^t >= target`, by exact search.
///
/// Equals `ceil(log_base(target))`; `t` may be negative when `target < 1`.
pub fn ceil_log(base: u64, target: &Rational) -> i64 {
    assert!(base >= 2, "logarithm base must be at least 2");
    assert!(target.is_positive(), "logarithm of a non-positive number");
    let b = int(base as i64);
    let mut t = 0i64;
    let mut power = Rational::one();
    if &power >= target {
        // walk down while base^(t-1) still reaches the target
        loop {
            let lower = &power / &b;
            if &lower >= target {
                power = lower;
                t -= 1;
            } else {
                return t;
            }
        }
    }
    while &power < target {
        power = &power * &b;
        t += 1;
    }
    t
}

/// Serde adapters writing rationals as `"p/q"` strings.
pub mod serde_pq {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_pq(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }

    pub mod option {
        use serde::{Deserialize, Deserializer, Serializer};

        use super::super::Rational;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&super::super::to_pq(r)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            match Option::<String>::deserialize(d)? {
                Some(s) => super::super::parse(&s)
                    .map(Some)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}"))),
                None => Ok(None),
            }
        }
    }
}
