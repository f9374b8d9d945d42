//! Prime-field arithmetic and small-degree root finding.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::RingError;

/// Default modulus, a prime below 2^31; products of two residues fit in a `u64`.
pub const DEFAULT_PRIME: u64 = 2_147_483_629;

/// Arithmetic context for `Z/pZ`. Residues are plain `u64` values in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, RingError> {
        if !(3..1 << 32).contains(&p) || !is_prime(p) {
            return Err(RingError::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// Maps a signed integer into the field.
    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn elem(&self, value: u64) -> FieldElem {
        FieldElem { value: value % self.p, modulus: self.p }
    }

    /// All roots in `F_p` of the polynomial with coefficients `f`
    /// (lowest degree first), sorted ascending, without multiplicity.
    pub fn roots(&self, f: &[u64]) -> Vec<u64> {
        let f = poly_trim(f.to_vec());
        if f.len() <= 1 {
            return Vec::new();
        }
        let f = self.monic(&f);
        // g = gcd(f, x^p - x) keeps exactly the distinct linear factors.
        let xp = self.powmod_x_shift(0, self.p, &f);
        let mut xp_minus_x = xp;
        while xp_minus_x.len() < 2 {
            xp_minus_x.push(0);
        }
        xp_minus_x[1] = self.sub(xp_minus_x[1], 1);
        let g = self.gcd(&f, &poly_trim(xp_minus_x));
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        self.split(&g, &mut rng, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn split(&self, g: &[u64], rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
        let g = poly_trim(g.to_vec());
        match g.len() {
            0 | 1 => {}
            2 => {
                // g = x + c (monic)
                let g = self.monic(&g);
                out.push(self.neg(g[0]));
            }
            _ => loop {
                let a = rng.random_range(0..self.p);
                // h = (x + a)^((p-1)/2) - 1 mod g
                let mut h = self.powmod_x_shift(a, (self.p - 1) / 2, &g);
                if h.is_empty() {
                    h.push(0);
                }
                h[0] = self.sub(h[0], 1);
                let d = self.gcd(&g, &poly_trim(h));
                if d.len() > 1 && d.len() < g.len() {
                    let (q, _) = self.divrem(&g, &d);
                    self.split(&d, rng, out);
                    self.split(&q, rng, out);
                    return;
                }
            },
        }
    }

    fn monic(&self, f: &[u64]) -> Vec<u64> {
        let lead = *f.last().expect("nonzero polynomial");
        let li = self.inv(lead).expect("nonzero leading coefficient");
        f.iter().map(|&c| self.mul(c, li)).collect()
    }

    fn polymul_mod(&self, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = self.add(prod[i + j], self.mul(x, y));
            }
        }
        self.divrem(&poly_trim(prod), m).1
    }

    /// `(x + a)^e mod m`.
    fn powmod_x_shift(&self, a: u64, mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut base = self.divrem(&[a % self.p, 1], m).1;
        let mut acc = self.divrem(&[1], m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.polymul_mod(&acc, &base, m);
            }
            base = self.polymul_mod(&base, &base, m);
            e >>= 1;
        }
        acc
    }

    fn divrem(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let b = poly_trim(b.to_vec());
        let mut r = poly_trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let li = self.inv(*b.last().expect("nonzero divisor")).expect("unit lead");
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = self.mul(*r.last().unwrap(), li);
            q[shift] = c;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = self.sub(r[shift + i], self.mul(c, bc));
            }
            r = poly_trim(r);
        }
        (poly_trim(q), r)
    }

    fn gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = poly_trim(a.to_vec());
        let mut b = poly_trim(b.to_vec());
        while !b.is_empty() {
            let r = self.divrem(&a, &b).1;
            a = b;
            b = r;
        }
        if a.is_empty() {
            a
        } else {
            self.monic(&a)
        }
    }
}

fn poly_trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// A residue together with its modulus, for reporting and the public API.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElem {
    pub value: u64,
    pub modulus: u64,
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest prime `q <= below` with `q = 1 (mod m)`.
pub fn prime_congruent_one(m: u64, below: u64) -> Option<u64> {
    let mut q = below - (below % m) + 1;
    if q > below {
        q = q.checked_sub(m)?;
    }
    while q > 2 {
        if is_prime(q) {
            return Some(q);
        }
        q = q.checked_sub(m)?;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_prime_is_prime_and_below_2_31() {
        assert!(is_prime(DEFAULT_PRIME));
        const { assert!(DEFAULT_PRIME < 1 << 31) };
        // 2^31 - 1 is a Mersenne prime, so the default is not the largest.
        assert!(is_prime((1 << 31) - 1));
    }

    #[test]
    fn inverse_mod_7() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(2_147_483_647 * 3).is_err());
        assert!(PrimeField::new(91).is_err());
    }

    #[test]
    fn roots_of_unity_and_square_roots() {
        let f = PrimeField::new(13).unwrap();
        // x^3 - 1 over F_13: 1, 3, 9
        assert_eq!(f.roots(&[12, 0, 0, 1]), vec![1, 3, 9]);
        // x^2 - 2 has no root mod 13
        assert!(f.roots(&[11, 0, 1]).is_empty());
        // x^2 - 10: 6^2 = 36 = 10
        assert_eq!(f.roots(&[3, 0, 1]), vec![6, 7]);
    }

    #[test]
    fn roots_at_the_default_prime() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let r = f.roots(&[f.neg(4), 0, 1]);
        assert_eq!(r, vec![2, DEFAULT_PRIME - 2]);
    }

    #[test]
    fn congruent_primes() {
        let q = prime_congruent_one(60, DEFAULT_PRIME).unwrap();
        assert!(is_prime(q) && q % 60 == 1 && q <= DEFAULT_PRIME);
    }
}
