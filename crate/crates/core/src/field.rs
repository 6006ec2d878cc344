//! Arithmetic in the prime field F_p.
//!
//! Elements are plain `u32` representatives in `[0, p)`. The modulus must be
//! below 2^31 so that sums of two residues fit in a `u32` and products fit in a
//! `u64` without overflow.

use crate::error::{Error, Result};

/// A field element, always a reduced representative in `[0, p)`.
pub type FieldScalar = u32;

/// Largest modulus accepted by [`PrimeField::new`] (exclusive).
pub const MODULUS_BOUND: u32 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Checks `p` for primality by trial division.
    pub fn new(p: u32) -> Result<Self> {
        if p >= MODULUS_BOUND {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer.
    pub fn from_i64(&self, v: i64) -> FieldScalar {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn from_u64(&self, v: u64) -> FieldScalar {
        (v % self.p as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: FieldScalar, b: FieldScalar) -> FieldScalar {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldScalar, b: FieldScalar) -> FieldScalar {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldScalar) -> FieldScalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldScalar, b: FieldScalar) -> FieldScalar {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, a: FieldScalar, mut e: u64) -> FieldScalar {
        let mut base = a;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: FieldScalar) -> Result<FieldScalar> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.from_i64(t0))
    }

    /// The unique `r` with `r^p = a`. Frobenius is the identity on F_p, so this
    /// returns `a` itself.
    #[inline]
    pub fn pth_root(&self, a: FieldScalar) -> FieldScalar {
        a
    }

    /// `C(n, k) mod p` for `n < p`, by the multiplicative formula.
    fn small_binomial(&self, n: u64, k: u64) -> FieldScalar {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut num = 1u32;
        let mut den = 1u32;
        for j in 0..k {
            num = self.mul(num, self.from_u64(n - j));
            den = self.mul(den, self.from_u64(j + 1));
        }
        // den is a product of integers in [1, p), hence invertible.
        self.mul(num, self.inv(den).expect("nonzero denominator"))
    }

    /// `C(n, k) mod p` via Lucas' theorem, digit by digit in base p.
    pub fn binomial(&self, mut n: u64, mut k: u64) -> FieldScalar {
        if k > n {
            return 0;
        }
        let p = self.p as u64;
        let mut acc = 1 % self.p;
        while k > 0 {
            let (nd, kd) = (n % p, k % p);
            if kd > nd {
                return 0;
            }
            acc = self.mul(acc, self.small_binomial(nd, kd));
            n /= p;
            k /= p;
        }
        acc
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `C(n, k) mod p` by Lucas' theorem. Returns 0 when `k > n`.
pub fn lucas_binomial(n: u64, k: u64, field: &PrimeField) -> FieldScalar {
    field.binomial(n, k)
}
