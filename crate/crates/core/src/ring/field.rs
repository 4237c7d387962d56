//! Polynomial-residue realization of `GF(p^k)`.
//!
//! An element is the residue of a polynomial of degree `< k` over `Z_p`; its
//! natural index is the little-endian base-`p` number of its coefficients.

/// Monic polynomial of degree `k` given by its low coefficients `c_0..c_{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus {
    pub p: u32,
    pub low: Vec<u32>,
}

fn digits(mut x: usize, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push((x % p as usize) as u32);
        x /= p as usize;
    }
    out
}

pub(crate) fn to_index(coeffs: &[u32], p: u32) -> usize {
    coeffs.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

/// Remainder of `a` modulo the monic polynomial `m` (coefficient vectors, low first).
fn poly_rem(mut a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
    let deg_m = m.len() - 1;
    while a.len() > deg_m {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - deg_m;
            for (i, &mc) in m[..deg_m].iter().enumerate() {
                let sub = (lead as u64 * mc as u64) % p as u64;
                a[shift + i] = ((a[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
    }
    a
}

fn is_irreducible(full: &[u32], p: u32) -> bool {
    let k = full.len() - 1;
    // Trial division by every monic polynomial of degree 1..=k/2.
    for d in 1..=k / 2 {
        for low in 0..(p as usize).pow(d as u32) {
            let mut divisor = digits(low, p, d);
            divisor.push(1);
            if poly_rem(full.to_vec(), &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Modulus {
    /// The monic irreducible of degree `k` whose low coefficient vector, read
    /// as `(c_{k-1}, ..., c_0)`, is lexicographically smallest.
    pub fn smallest_irreducible(p: u32, k: u32) -> Modulus {
        let k = k as usize;
        if k == 1 {
            return Modulus { p, low: vec![0] };
        }
        for low in 0..(p as usize).pow(k as u32) {
            let mut full = digits(low, p, k);
            full.push(1);
            if is_irreducible(&full, p) {
                full.pop();
                return Modulus { p, low: full };
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn degree(&self) -> usize {
        self.low.len()
    }

    pub fn size(&self) -> usize {
        (self.p as usize).pow(self.degree() as u32)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let k = self.degree();
        let (da, db) = (digits(a, self.p, k), digits(b, self.p, k));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        to_index(&sum, self.p)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let k = self.degree();
        let p = self.p as u64;
        let (da, db) = (digits(a, self.p, k), digits(b, self.p, k));
        let mut prod = vec![0u32; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        let mut full = self.low.clone();
        full.push(1);
        let rem = poly_rem(prod, &full, self.p);
        let mut rem = rem;
        rem.resize(k, 0);
        to_index(&rem, self.p)
    }

    /// Absolute trace `x + x^p + ... + x^(p^(k-1))`, as an element of `Z_p`.
    pub fn trace(&self, x: usize) -> u32 {
        let mut acc = 0usize;
        let mut power = x;
        for _ in 0..self.degree() {
            acc = self.add(acc, power);
            let mut next = 1usize;
            for _ in 0..self.p {
                next = self.mul(next, power);
            }
            power = next;
        }
        assert!(acc < self.p as usize, "trace left the prime field");
        acc as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(Modulus::smallest_irreducible(2, 2).low, vec![1, 1]); // x^2+x+1
        assert_eq!(Modulus::smallest_irreducible(2, 3).low, vec![1, 1, 0]); // x^3+x+1
        assert_eq!(Modulus::smallest_irreducible(3, 2).low, vec![1, 0]); // x^2+1
        assert_eq!(Modulus::smallest_irreducible(2, 4).low, vec![1, 1, 0, 0]); // x^4+x+1
    }

    #[test]
    fn gf4_mul() {
        let m = Modulus::smallest_irreducible(2, 2);
        // t * t = t + 1
        assert_eq!(m.mul(2, 2), 3);
        assert_eq!(m.mul(3, 3), 2);
        assert_eq!(m.mul(2, 3), 1);
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for (p, k) in [(2, 3), (3, 2), (5, 2), (2, 5)] {
            let m = Modulus::smallest_irreducible(p, k);
            for a in 1..m.size() {
                assert!((1..m.size()).any(|b| m.mul(a, b) == 1), "GF({p}^{k}) element {a}");
            }
        }
    }

    #[test]
    fn trace_is_onto_prime_field() {
        let m = Modulus::smallest_irreducible(3, 2);
        let mut counts = [0; 3];
        for x in 0..9 {
            counts[m.trace(x) as usize] += 1;
        }
        assert_eq!(counts, [3, 3, 3]);
    }
}
