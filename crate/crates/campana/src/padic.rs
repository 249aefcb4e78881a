//! Exact p-adic and integer utilities: valuations, primitive normalization,
//! CRT with coprimality steering, residue symbols, and factorization.
//!
//! All arithmetic is exact. Rationals are handled through their numerator and
//! denominator; there is no floating p-adic representation anywhere.

use crate::{Error, Result};
use num::bigint::{BigInt, BigUint};
use num::integer::Roots;
use num::rational::BigRational;
use num::traits::Pow;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

const SIEVE_BOUND: usize = 1_000_000;

/// Primes below 10^6, computed once.
pub(crate) fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut composite = vec![false; SIEVE_BOUND + 1];
        let mut out = Vec::with_capacity(78_498);
        for n in 2..=SIEVE_BOUND {
            if !composite[n] {
                out.push(n as u64);
                let mut k = n * n;
                while k <= SIEVE_BOUND {
                    composite[k] = true;
                    k += n;
                }
            }
        }
        out
    })
}

pub(crate) fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn mulmod_u128(mut a: u128, mut b: u128, m: u128) -> u128 {
    // Russian-peasant product; u128*u128 would overflow.
    a %= m;
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = acc.checked_add(a).map(|s| s % m).unwrap_or_else(|| {
                (a % m + acc % m) % m // both < m < 2^127, sum < 2^128
            });
            acc %= m;
        }
        a = a.checked_add(a).map(|s| s % m).unwrap_or((a % m * 2) % m);
        b >>= 1;
    }
    acc
}

fn powmod_u128(mut base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u128(acc, base, m);
        }
        base = mulmod_u128(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the 12-base certificate).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_prime_u128(n: u128) -> bool {
    if n <= u64::MAX as u128 {
        return is_prime(n as u64);
    }
    if n % 2 == 0 {
        return false;
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    // Fixed small-prime bases; probabilistic above 2^64 with error < 4^-40.
    'witness: for &a in FIXED_MR_BASES {
        let a = a as u128 % n;
        if a == 0 {
            continue;
        }
        let mut x = powmod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const FIXED_MR_BASES: &[u64] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

pub(crate) fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(v) = n.to_u128() {
        return is_prime_u128(v);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let bases = if n.bits() > 2_048 {
        &FIXED_MR_BASES[..12]
    } else {
        FIXED_MR_BASES
    };
    'witness: for &a in bases {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(mut n: u64) -> u64 {
    loop {
        n += 1;
        if is_prime(n) {
            return n;
        }
    }
}

/// The p-adic valuation of a rational, with `Infinity` encoding v_p(0).
///
/// `Finite` sorts below `Infinity`, so `min`/`max` behave as expected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinity)
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinity => None,
        }
    }

    /// True iff the valuation lies in {0} ∪ Z_{≥ threshold} ∪ {∞}.
    pub fn zero_or_at_least(&self, threshold: i64) -> bool {
        match self {
            Valuation::Infinity => true,
            Valuation::Finite(v) => *v == 0 || *v >= threshold,
        }
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinity => s.serialize_str("inf"),
        }
    }
}

/// v_p(n) for a nonzero integer without primality validation (p ≥ 2 assumed).
pub(crate) fn val_int_unchecked(n: &BigInt, p: u64) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let p_big = BigUint::from(p);
    let mut m = n.magnitude().clone();
    let mut v = 0i64;
    loop {
        let (q, r) = m.div_rem(&p_big);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        v += 1;
        m = q;
    }
}

pub(crate) fn val_big_prime(n: &BigInt, p: &BigUint) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let mut m = n.magnitude().clone();
    let mut v = 0i64;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        v += 1;
        m = q;
    }
}

/// Exact p-adic valuation of an integer. Rejects non-prime p.
pub fn val_int(n: &BigInt, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(val_int_unchecked(n, p))
}

/// Exact p-adic valuation of a rational. Rejects non-prime p; v_p(0) = ∞.
pub fn val(x: &BigRational, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x.is_zero() {
        return Ok(Valuation::Infinity);
    }
    let num = val_int_unchecked(x.numer(), p);
    let den = val_int_unchecked(x.denom(), p);
    match (num, den) {
        (Valuation::Finite(a), Valuation::Finite(b)) => Ok(Valuation::Finite(a - b)),
        _ => unreachable!("nonzero rational has finite valuations"),
    }
}

/// Divide a coordinate tuple by its content and fix the sign so the first
/// nonzero entry is positive.
pub fn normalize_primitive(coords: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut g = BigInt::zero();
    for c in coords {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return Err(Error::AllZero);
    }
    let mut out: Vec<BigInt> = coords.iter().map(|c| c / &g).collect();
    if let Some(first) = out.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            for c in &mut out {
                *c = -&*c;
            }
        }
    }
    Ok(out)
}

/// Clear denominators of a rational tuple and normalize to primitive integers.
pub fn normalize_primitive_rational(coords: &[BigRational]) -> Result<Vec<BigInt>> {
    let mut lcm = BigInt::one();
    for c in coords {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coords
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    normalize_primitive(&ints)
}

/// A congruence x ≡ residue (mod prime^modulus_exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTarget {
    prime: u64,
    exponent: u32,
    residue: BigUint,
}

impl ResidueTarget {
    pub fn new(prime: u64, exponent: u32, residue: BigUint) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        if exponent == 0 {
            return Err(Error::InvalidCongruence(
                "modulus exponent must be at least 1".into(),
            ));
        }
        let modulus = BigUint::from(prime).pow(exponent);
        if residue >= modulus {
            return Err(Error::InvalidCongruence(format!(
                "residue {residue} is not reduced modulo {prime}^{exponent}"
            )));
        }
        Ok(ResidueTarget {
            prime,
            exponent,
            residue,
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn modulus(&self) -> BigUint {
        BigUint::from(self.prime).pow(self.exponent)
    }
}

/// Extended gcd: returns (g, s, t) with s·a + t·b = g ≥ 0.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of a modulo m (m > 1, gcd(a, m) = 1).
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Result<BigInt> {
    let (g, s, _) = ext_gcd(a, m);
    if !g.is_one() {
        return Err(Error::InvalidCongruence(format!(
            "{a} is not invertible modulo {m}"
        )));
    }
    Ok(s.mod_floor(m))
}

fn crt_pair(r1: &BigInt, m1: &BigInt, r2: &BigInt, m2: &BigInt) -> Result<(BigInt, BigInt)> {
    let (g, s, _) = ext_gcd(m1, m2);
    if !g.is_one() {
        return Err(Error::InvalidCongruence(format!(
            "moduli {m1} and {m2} are not coprime"
        )));
    }
    let m = m1 * m2;
    // x = r1 + m1 * s * (r2 - r1)
    let x = (r1 + m1 * s * (r2 - r1)).mod_floor(&m);
    Ok((x, m))
}

/// Solve a pairwise-coprime congruence system and steer the output away from
/// the prime support of `avoid`.
///
/// For every prime q dividing an avoid element with q outside
/// `allowed_support` and outside the congruence primes, the auxiliary
/// congruence x ≡ 1 (mod q) is appended before solving, so
/// gcd(output, a) keeps its prime factors inside
/// `allowed_support ∪ {congruence primes}` for every a in `avoid`.
/// Returns the smallest positive solution.
pub fn crt_steered(
    congruences: &[ResidueTarget],
    avoid: &[BigInt],
    allowed_support: &BTreeSet<u64>,
) -> Result<BigInt> {
    let mut seen = BTreeSet::new();
    for c in congruences {
        if !seen.insert(c.prime) {
            return Err(Error::InvalidCongruence(format!(
                "two congruences share the prime {}",
                c.prime
            )));
        }
    }
    for a in avoid {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
    }

    let base_primes: BTreeSet<u64> = congruences.iter().map(|c| c.prime).collect();
    let mut steering: BTreeSet<BigUint> = BTreeSet::new();
    for a in avoid {
        for (q, _) in factor(a)? {
            let small = q.to_u64();
            let in_allowed = small.map(|v| allowed_support.contains(&v)).unwrap_or(false);
            let in_base = small.map(|v| base_primes.contains(&v)).unwrap_or(false);
            if !in_allowed && !in_base {
                steering.insert(q);
            }
        }
    }

    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for c in congruences {
        let (nx, nm) = crt_pair(&x, &m, &BigInt::from(c.residue.clone()), &c.modulus().into())?;
        x = nx;
        m = nm;
    }
    for q in &steering {
        let (nx, nm) = crt_pair(&x, &m, &BigInt::one(), &BigInt::from(q.clone()))?;
        x = nx;
        m = nm;
    }
    if x.is_zero() {
        x = m.clone();
    }
    Ok(x)
}

/// Legendre symbol (a/p) for an odd prime p: +1, −1, or 0 when p | a.
pub fn quadratic_character(a: &BigInt, p: u64) -> Result<i32> {
    if p == 2 {
        return Err(Error::EvenPrime("quadratic_character needs an odd prime"));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let r = a.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    if r == 0 {
        return Ok(0);
    }
    if powmod_u64(r, (p - 1) / 2, p) == 1 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Exact prime factorization of a nonzero integer, as sorted (prime, exponent)
/// pairs of |n|. The reconstruction ∏ p^e = |n| is verified before returning.
pub fn factor(n: &BigInt) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let magnitude = n.magnitude().clone();
    let mut map: BTreeMap<BigUint, u32> = BTreeMap::new();
    factor_into(&mut map, magnitude.clone())?;
    let mut check = BigUint::one();
    for (p, e) in &map {
        check *= p.pow(*e);
    }
    if check != magnitude {
        return Err(Error::Factorization(format!(
            "reconstruction mismatch for {n}"
        )));
    }
    Ok(map.into_iter().collect())
}

fn record(map: &mut BTreeMap<BigUint, u32>, p: BigUint, e: u32) {
    *map.entry(p).or_insert(0) += e;
}

fn factor_into(map: &mut BTreeMap<BigUint, u32>, m: BigUint) -> Result<()> {
    if m.is_one() {
        return Ok(());
    }
    if let Some(v) = m.to_u128() {
        factor_u128(map, v);
        return Ok(());
    }

    let mut m = m;
    // Strip the primes below 10^3 cheaply; for moderate sizes run the full
    // 10^6 trial division.
    let strip_bound: u64 = if m.bits() <= 4_000 { 1_000_000 } else { 1_000 };
    for &p in small_primes() {
        if p > strip_bound {
            break;
        }
        let pb = BigUint::from(p);
        loop {
            let (q, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            record(map, pb.clone(), 1);
            m = q;
        }
        if m.is_one() {
            return Ok(());
        }
        if let Some(v) = m.to_u128() {
            factor_u128(map, v);
            return Ok(());
        }
    }

    // Perfect-power reduction comes first: the screening is cheap, and the
    // large cofactors this crate produces (solver outputs of shape base^d)
    // would make a full primality test or rho run at full width hopeless.
    if let Some((base, k)) = perfect_power(&m) {
        let mut inner: BTreeMap<BigUint, u32> = BTreeMap::new();
        factor_into(&mut inner, base)?;
        for (p, e) in inner {
            record(map, p, e * k);
        }
        return Ok(());
    }
    if m.bits() > 8_192 {
        return Err(Error::Factorization(format!(
            "non-power cofactor of {} bits is beyond this toolkit",
            m.bits()
        )));
    }
    if is_probable_prime_big(&m) {
        record(map, m, 1);
        return Ok(());
    }
    if m.bits() > 2_048 {
        return Err(Error::Factorization(format!(
            "composite non-power cofactor of {} bits is beyond rho",
            m.bits()
        )));
    }
    match rho_big(&m) {
        Some(d) => {
            let q = &m / &d;
            factor_into(map, d)?;
            factor_into(map, q)
        }
        None => Err(Error::Factorization(format!(
            "could not split a {}-bit cofactor",
            m.bits()
        ))),
    }
}

fn factor_u128(map: &mut BTreeMap<BigUint, u32>, mut v: u128) {
    debug_assert!(v >= 1);
    for &p in small_primes() {
        if (p as u128) * (p as u128) > v {
            break;
        }
        if v % p as u128 == 0 {
            let mut e = 0;
            while v % p as u128 == 0 {
                v /= p as u128;
                e += 1;
            }
            record(map, BigUint::from(p), e);
        }
    }
    if v == 1 {
        return;
    }
    if v <= (SIEVE_BOUND as u128) * (SIEVE_BOUND as u128) || is_prime_u128(v) {
        // Either below the trial-division square or certified prime.
        record(map, BigUint::from(v), 1);
        return;
    }
    let mut stack = vec![v];
    while let Some(c) = stack.pop() {
        if c == 1 {
            continue;
        }
        if is_prime_u128(c) {
            record(map, BigUint::from(c), 1);
            continue;
        }
        let d = rho_u128(c);
        stack.push(d);
        stack.push(c / d);
    }
}

/// Brent-cycle Pollard rho on u128; the input is composite and has no factor
/// below 10^6.
fn rho_u128(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u128;
    loop {
        let f = |x: u128| (mulmod_u128(x, x, n) + c) % n;
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        let mut count = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u128(x.abs_diff(y), n);
            count += 1;
            if count > 1 << 26 {
                break;
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1;
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

fn rho_big(n: &BigUint) -> Option<BigUint> {
    let two = BigUint::from(2u32);
    if n.is_even() {
        return Some(two);
    }
    for c in 1u32..8 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = two.clone();
        let mut y = two.clone();
        for _ in 0..(1u32 << 18) {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            let d = diff.gcd(n);
            if d.is_one() {
                continue;
            }
            if &d != n {
                return Some(d);
            }
            break;
        }
    }
    None
}

/// Detect m = b^ℓ for a prime exponent ℓ; the input has no prime factor below
/// 10^3 and is not prime. Exactness: every candidate is confirmed with an
/// integer root extraction and re-powering.
fn perfect_power(m: &BigUint) -> Option<(BigUint, u32)> {
    let bits = m.bits();
    // base ≥ 1009 > 2^9, so the exponent is at most bits/9.
    let lmax = (bits / 9).max(2) as u64;
    for &l in small_primes() {
        if l > lmax {
            break;
        }
        if !power_screen(m, l) {
            continue;
        }
        let root = m.nth_root(l as u32);
        if root.clone().pow(l as u32) == *m {
            return Some((root, l as u32));
        }
    }
    None
}

/// Cheap sound rejection test for "m is an ℓ-th power": if r ≡ 1 (mod ℓ) is
/// prime and m mod r is neither 0 nor an ℓ-th power residue, m is no ℓ-th
/// power. Passing the screen proves nothing.
fn power_screen(m: &BigUint, l: u64) -> bool {
    let mut found = 0;
    let mut k = 1u64;
    while found < 2 && k < 4_000 {
        let r = match l.checked_mul(2 * k).and_then(|v| v.checked_add(1)) {
            Some(r) => r,
            None => break,
        };
        k += 1;
        if !is_prime(r) {
            continue;
        }
        found += 1;
        let c = (m % BigUint::from(r)).to_u64().unwrap();
        if c == 0 {
            continue; // inconclusive
        }
        if powmod_u64(c, (r - 1) / l, r) != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::Ratio;

    fn rat(n: i64, d: i64) -> BigRational {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(val(&rat(12, 1), 2).unwrap(), Valuation::Finite(2));
        assert_eq!(val(&rat(0, 1), 5).unwrap(), Valuation::Infinity);
        assert_eq!(val(&rat(2, 9), 3).unwrap(), Valuation::Finite(-2));
        assert!(matches!(val(&rat(1, 1), 6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn normalize_examples() {
        let n = |v: &[i64]| {
            normalize_primitive(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()).unwrap()
        };
        assert_eq!(n(&[4, 8, 12]), n(&[1, 2, 3]));
        assert_eq!(n(&[0, -5]), vec![BigInt::from(0), BigInt::from(1)]);
        assert_eq!(
            n(&[6, 10, 15]),
            vec![BigInt::from(6), BigInt::from(10), BigInt::from(15)]
        );
        assert!(matches!(
            normalize_primitive(&[BigInt::zero(), BigInt::zero()]),
            Err(Error::AllZero)
        ));
    }

    #[test]
    fn crt_steered_examples() {
        let c1 = ResidueTarget::new(2, 2, BigUint::from(1u32)).unwrap();
        let c2 = ResidueTarget::new(3, 2, BigUint::from(2u32)).unwrap();
        let x = crt_steered(&[c1, c2], &[BigInt::from(7)], &BTreeSet::new()).unwrap();
        assert_eq!(x, BigInt::from(29));

        let c = ResidueTarget::new(5, 1, BigUint::from(3u32)).unwrap();
        assert_eq!(
            crt_steered(&[c], &[], &BTreeSet::new()).unwrap(),
            BigInt::from(3)
        );

        let c1 = ResidueTarget::new(2, 1, BigUint::from(1u32)).unwrap();
        let c2 = ResidueTarget::new(3, 1, BigUint::from(1u32)).unwrap();
        let allowed: BTreeSet<u64> = [5].into_iter().collect();
        let x = crt_steered(&[c1, c2], &[BigInt::from(25)], &allowed).unwrap();
        assert_eq!(x, BigInt::from(1));
    }

    #[test]
    fn crt_steered_postcondition() {
        // gcd(output, a) must factor inside allowed ∪ congruence primes.
        let c1 = ResidueTarget::new(2, 3, BigUint::from(5u32)).unwrap();
        let c2 = ResidueTarget::new(5, 1, BigUint::from(2u32)).unwrap();
        let avoid = vec![BigInt::from(7 * 11 * 13), BigInt::from(9)];
        let x = crt_steered(&[c1.clone(), c2.clone()], &avoid, &BTreeSet::new()).unwrap();
        assert_eq!(x.mod_floor(&BigInt::from(8)), BigInt::from(5));
        assert_eq!(x.mod_floor(&BigInt::from(5)), BigInt::from(2));
        for a in &avoid {
            let g = x.gcd(a);
            for (p, _) in factor(&g).unwrap() {
                let p = p.to_u64().unwrap();
                assert!(p == 2 || p == 5, "stray prime {p} in gcd");
            }
        }
    }

    #[test]
    fn crt_rejects_duplicate_primes() {
        let c1 = ResidueTarget::new(3, 1, BigUint::from(1u32)).unwrap();
        let c2 = ResidueTarget::new(3, 2, BigUint::from(2u32)).unwrap();
        assert!(crt_steered(&[c1, c2], &[], &BTreeSet::new()).is_err());
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(quadratic_character(&BigInt::from(2), 7).unwrap(), 1);
        assert_eq!(quadratic_character(&BigInt::from(2), 5).unwrap(), -1);
        assert_eq!(quadratic_character(&BigInt::from(10), 5).unwrap(), 0);
        assert!(quadratic_character(&BigInt::from(3), 2).is_err());
    }

    #[test]
    fn factor_examples() {
        let f = |n: i64| factor(&BigInt::from(n)).unwrap();
        assert_eq!(
            f(360),
            vec![
                (BigUint::from(2u32), 3),
                (BigUint::from(3u32), 2),
                (BigUint::from(5u32), 1)
            ]
        );
        assert_eq!(f(1), vec![]);
        assert_eq!(f(4672), vec![(BigUint::from(2u32), 6), (BigUint::from(73u32), 1)]);
        assert!(factor(&BigInt::zero()).is_err());
    }

    #[test]
    fn factor_large_semiprime() {
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(998_244_353u64);
        let f = factor(&(&p * &q)).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].0, BigUint::from(1_000_003u64));
        assert_eq!(f[1].0, BigUint::from(998_244_353u64));
    }

    #[test]
    fn factor_huge_perfect_power() {
        // The shape produced by the weak-approximation solver: base^d times
        // small primes, far beyond rho range.
        let base = BigInt::from(9_261_041u64); // prime
        let n = BigInt::from(base.magnitude().pow(4409u32)) * BigInt::from(8 * 27);
        let f = factor(&n).unwrap();
        assert_eq!(
            f,
            vec![
                (BigUint::from(2u32), 3),
                (BigUint::from(3u32), 3),
                (BigUint::from(9_261_041u64), 4409)
            ]
        );
    }

    #[test]
    fn prime_tests() {
        assert!(is_prime(2));
        assert!(is_prime(998_244_353));
        assert!(!is_prime(1));
        assert!(!is_prime(561)); // Carmichael
        assert_eq!(next_prime(7), 11);
    }
}
