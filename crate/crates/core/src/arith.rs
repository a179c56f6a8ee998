//! Shared exact-arithmetic primitives: arbitrary-precision rationals,
//! verified prime orders and small modular helpers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Build a rational from an integer pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Build a rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Render a rational as `a/b`, or `a` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A verified prime group order p >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeOrder(u64);

impl PrimeOrder {
    /// Checks primality by trial division; the orders handled here stay small.
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeOrder(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }
}

impl std::fmt::Display for PrimeOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes up to and including `n`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; (n + 1) as usize];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n as usize {
        if sieve[i] {
            let mut j = i * i;
            while j <= n as usize {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Inverse of `a` mod prime `p`.
pub fn mod_inverse(a: u64, p: PrimeOrder) -> Result<u64> {
    let pv = p.get();
    let a = a % pv;
    if a == 0 {
        return Err(Error::ZeroWeight(0, pv));
    }
    // extended Euclid on (a, p)
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (pv as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    Ok(t.rem_euclid(pv as i128) as u64)
}

/// Reduce an integer into `1..p` (never zero); errors when p divides it.
pub fn nonzero_residue(q: i64, p: PrimeOrder) -> Result<u64> {
    let r = q.rem_euclid(p.as_i64());
    if r == 0 {
        Err(Error::ZeroResidue { q, p: p.get() })
    } else {
        Ok(r as u64)
    }
}

/// Mathematical floor of a rational (rounds toward negative infinity).
pub fn floor_to_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// True mathematical floor of a/b for integers, b > 0.
pub fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if r.is_negative() {
        q - BigInt::one()
    } else {
        q
    }
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn is_zero_rational(r: &Rational) -> bool {
    r.numer().is_zero()
}
