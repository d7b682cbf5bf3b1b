//! Exact integer and rational arithmetic.
//!
//! `Integer` and `Rational` are the `num` big-number types; `Ratio::new`
//! reduces on construction and every arithmetic result comes back reduced,
//! so equality and hashing operate on canonical forms. This module adds the
//! square-root machinery the search loops depend on, plus trial-division
//! factorization for the divisor enumerations in torsion and egg sieving.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(int(num), int(den))
}

pub fn rat_int(n: Integer) -> Rational {
    Rational::from_integer(n)
}

/// Returns the nonnegative root when `n` is a perfect square.
pub fn is_perfect_square(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    if let Some(small) = n.to_i128() {
        return square_root_i128(small).map(Integer::from);
    }
    // Quadratic residues mod 64 reject most non-squares before the sqrt.
    let low = (n % 64u32).to_u64().unwrap_or(0);
    if QR64 & (1u64 << low) == 0 {
        return None;
    }
    let root = n.sqrt();
    if &(&root * &root) == n {
        Some(root)
    } else {
        None
    }
}

/// Exact square root of a rational, when numerator and denominator of the
/// reduced form are both perfect squares.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let num = is_perfect_square(q.numer())?;
    let den = is_perfect_square(q.denom())?;
    Some(Rational::new(num, den))
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &Integer) -> Integer {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

const fn residue_mask(modulus: u32) -> u128 {
    let mut mask = 0u128;
    let mut i = 0u32;
    while i < modulus {
        mask |= 1u128 << ((i * i) % modulus);
        i += 1;
    }
    mask
}

const QR64: u64 = residue_mask(64) as u64;
const QR63: u128 = residue_mask(63);
const QR65: u128 = residue_mask(65);
const QR11: u128 = residue_mask(11);

fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut r = (n as f64).sqrt() as u128;
    // Newton from the float estimate, then settle the last unit.
    for _ in 0..4 {
        if r == 0 {
            r = 1;
        }
        let next = (r + n / r) >> 1;
        if next == r {
            break;
        }
        r = next;
    }
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Perfect-square test on machine integers, used in the sieve inner loops.
#[inline]
pub fn square_root_i128(n: i128) -> Option<u128> {
    if n < 0 {
        return None;
    }
    let n = n as u128;
    if QR64 & (1u64 << (n & 63)) == 0 {
        return None;
    }
    if QR63 & (1u128 << (n % 63)) == 0
        || QR65 & (1u128 << (n % 65)) == 0
        || QR11 & (1u128 << (n % 11)) == 0
    {
        return None;
    }
    let r = isqrt_u128(n);
    (r * r == n).then_some(r)
}

/// Prime factorization of a positive integer, primes in increasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Factorization(BTreeMap<Integer, u32>);

impl Factorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Trial division. Intended for the modest integers that appear as
    /// curve-coefficient factors; cost grows with the square root of the
    /// largest prime factor.
    pub fn of(n: &Integer) -> Self {
        let mut out = BTreeMap::new();
        let mut rest = n.abs();
        assert!(!rest.is_zero(), "cannot factor zero");
        if let Some(small) = rest.to_u64() {
            for (p, e) in factor_u64(small) {
                out.insert(Integer::from(p), e);
            }
            return Self(out);
        }
        let two = int(2);
        while rest.is_even() {
            *out.entry(two.clone()).or_insert(0) += 1;
            rest /= 2;
        }
        let mut p = int(3);
        while &p * &p <= rest {
            while (&rest % &p).is_zero() {
                *out.entry(p.clone()).or_insert(0) += 1;
                rest /= &p;
            }
            p += 2;
        }
        if !rest.is_one() {
            *out.entry(rest).or_insert(0) += 1;
        }
        Self(out)
    }

    pub fn times(mut self, other: &Factorization) -> Self {
        for (p, e) in &other.0 {
            *self.0.entry(p.clone()).or_insert(0) += e;
        }
        self
    }

    pub fn pow(mut self, k: u32) -> Self {
        for e in self.0.values_mut() {
            *e *= k;
        }
        self
    }

    pub fn value(&self) -> Integer {
        self.0.iter().fold(Integer::one(), |acc, (p, e)| {
            acc * num_traits::pow(p.clone(), *e as usize)
        })
    }

    pub fn primes(&self) -> impl Iterator<Item = (&Integer, u32)> {
        self.0.iter().map(|(p, e)| (p, *e))
    }

    /// All positive divisors `d` with `d^2` dividing the factored number, ascending.
    pub fn square_divisors(&self) -> Vec<Integer> {
        let halved = Factorization(self.0.iter().map(|(p, e)| (p.clone(), e / 2)).collect());
        halved.divisors()
    }

    /// All positive squarefree divisors, ascending.
    pub fn squarefree_divisors(&self) -> Vec<Integer> {
        let radical = Factorization(self.0.keys().map(|p| (p.clone(), 1)).collect());
        radical.divisors()
    }

    pub fn divisors(&self) -> Vec<Integer> {
        let mut divs = vec![Integer::one()];
        for (p, e) in &self.0 {
            let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
            for d in &divs {
                let mut pk = d.clone();
                next.push(pk.clone());
                for _ in 0..*e {
                    pk *= p;
                    next.push(pk.clone());
                }
            }
            divs = next;
        }
        divs.sort();
        divs
    }
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        push(p, &mut n);
        push(p + 2, &mut n);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Clears denominators: the lcm of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    values
        .into_iter()
        .fold(Integer::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn sign_of(q: &Rational) -> Sign {
    q.numer().sign()
}

/// Renders a rational as `num/den`, always with an explicit denominator.
pub fn fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Integer = n.trim().parse().ok()?;
            let d: Integer = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<Integer>().ok().map(rat_int),
    }
}
