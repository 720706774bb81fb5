//! Arithmetic in the prime field `F_p`.
//!
//! Characteristics are restricted to primes `p <= 2^13` so that a product of
//! two reduced representatives always fits in 64 bits with room to spare.

use crate::error::AlgebraError;

/// Largest admissible characteristic (inclusive).
pub const MAX_CHARACTERISTIC: u32 = 1 << 13;

/// An element of `F_p`, stored as its fully reduced representative in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(pub u32);

/// The field `F_p`. Construction validates that `p` is prime and in range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if p < 2 || p > MAX_CHARACTERISTIC {
            return Err(AlgebraError::precondition(format!(
                "characteristic {p} out of range 2..={MAX_CHARACTERISTIC}"
            )));
        }
        if !is_prime(p) {
            return Err(AlgebraError::precondition(format!(
                "characteristic {p} is not prime"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Canonical representative of an arbitrary signed integer.
    pub fn elt(&self, n: i64) -> Fp {
        let p = self.p as i64;
        Fp(n.rem_euclid(p) as u32)
    }

    pub fn from_u64(&self, n: u64) -> Fp {
        Fp((n % self.p as u64) as u32)
    }

    pub fn zero(&self) -> Fp {
        Fp(0)
    }

    pub fn one(&self) -> Fp {
        Fp(1 % self.p)
    }

    pub fn add(&self, a: Fp, b: Fp) -> Fp {
        let s = a.0 + b.0;
        Fp(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(&self, a: Fp, b: Fp) -> Fp {
        Fp(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    pub fn neg(&self, a: Fp) -> Fp {
        Fp(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(&self, a: Fp, b: Fp) -> Fp {
        Fp(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(&self, a: Fp, mut k: u64) -> Fp {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; zero is rejected.
    pub fn inv(&self, a: Fp) -> Result<Fp, AlgebraError> {
        if a.0 == 0 {
            return Err(AlgebraError::precondition("inverse of zero in F_p"));
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_validates() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(8191).is_ok()); // largest prime <= 2^13
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(8192).is_err());
        assert!(PrimeField::new(8209).is_err()); // prime but out of range
    }

    #[test]
    fn arithmetic_mod_5() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.add(Fp(3), Fp(4)), Fp(2));
        assert_eq!(f.sub(Fp(1), Fp(3)), Fp(3));
        assert_eq!(f.mul(Fp(3), Fp(4)), Fp(2));
        assert_eq!(f.neg(Fp(0)), Fp(0));
        assert_eq!(f.neg(Fp(2)), Fp(3));
        assert_eq!(f.elt(-1), Fp(4));
    }

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 8191] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p.min(50) {
                let inv = f.inv(Fp(a)).unwrap();
                assert_eq!(f.mul(Fp(a), inv), f.one());
            }
        }
        let f = PrimeField::new(3).unwrap();
        assert!(f.inv(Fp(0)).is_err());
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        // a^p = a for every a in F_p.
        for p in [2u32, 3, 5, 13] {
            let f = PrimeField::new(p).unwrap();
            for a in 0..p {
                assert_eq!(f.pow(Fp(a), p as u64), Fp(a));
            }
        }
    }
}
