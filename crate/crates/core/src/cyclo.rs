//! Cyclotomic specialization: the integer `e`, cyclotomic polynomials and the
//! identities relating `Φ_e(u)` to cyclotomic polynomials in `v = √u`, and
//! good primes for the classical types.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{Family, WeylType};

/// Dense integer polynomial; `coeffs[i]` is the coefficient of `x^i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = -1;
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// `p(x^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        Self::new(coeffs)
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
                .collect(),
        )
    }

    /// Division by a monic divisor. Returns `(quotient, remainder)`.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert_eq!(divisor.leading(), 1, "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![0; rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = rem[shift + dd];
            if c == 0 {
                continue;
            }
            quot[shift] = c;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= c * dc;
            }
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    /// Renders in descending powers with the given variable name.
    pub fn display_in(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pow, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let abs = c.unsigned_abs();
            let term = match pow {
                0 => abs.to_string(),
                1 if abs == 1 => var.to_string(),
                1 => format!("{abs}{var}"),
                _ if abs == 1 => format!("{var}^{pow}"),
                _ => format!("{abs}{var}^{pow}"),
            };
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in('v'))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&0) + rhs.coeffs.get(i).unwrap_or(&0))
                .collect(),
        )
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial, by exact division of `x^n - 1` by
/// `Φ_d` for the proper divisors `d` of `n`. Results are memoized.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic(n: usize) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return (**hit).clone();
    }
    // computed outside the lock; concurrent fills produce identical values
    let mut poly = IntPoly::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = poly.div_rem_monic(&cyclotomic(d));
        debug_assert!(r.is_zero());
        poly = q;
    }
    cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::new(poly.clone()));
    poly
}

/// The image of `u` under a specialization, up to what matters here: its
/// multiplicative order and the characteristic of the target field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationSpec {
    order: u64,
    characteristic: u64,
}

impl SpecializationSpec {
    pub fn new(order: u64, characteristic: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidSpecialization(
                "the order must be at least 1".into(),
            ));
        }
        check_characteristic(characteristic)?;
        if characteristic > 0 && order.is_multiple_of(characteristic) {
            return Err(Error::InvalidSpecialization(format!(
                "no element of order {order} exists in characteristic {characteristic}"
            )));
        }
        Ok(Self {
            order,
            characteristic,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}

/// The least `i >= 2` with `1 + x + ... + x^(i-1) = 0`, where `x` is the
/// image of `u`; `None` when no such `i` exists (the semisimple case).
///
/// For `x != 1` the sum is `(x^i - 1)/(x - 1)`, which vanishes exactly when
/// the order of `x` divides `i`. For `x = 1` it is `i`, which vanishes
/// exactly when the characteristic divides `i`.
pub fn compute_e(spec: SpecializationSpec) -> Option<u64> {
    match (spec.order, spec.characteristic) {
        (1, 0) => None,
        (1, p) => Some(p),
        (m, _) => Some(m),
    }
}

/// Outcome of substituting `u = v^2` into `Φ_e(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiIdentityReport {
    pub e: usize,
    /// Even `e`: `Φ_e(v^2) = Φ_{2e}(v)`. Odd `e`: `Φ_e(v^2) = Φ_e(v) Φ_{2e}(v)`.
    pub factorization_holds: bool,
    /// Odd `e` only: `Φ_{2e}(v) = ±Φ_e(-v)`.
    pub negation_holds: Option<bool>,
    /// The sign realized in `Φ_{2e}(v) = ±Φ_e(-v)`, when it holds.
    pub sign: Option<i8>,
    /// `deg Φ_e(v^2)`.
    pub lhs_degree: usize,
    /// Degree of the right-hand side of the factorization.
    pub rhs_degree: usize,
}

impl PhiIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.factorization_holds && self.negation_holds.unwrap_or(true)
    }
}

pub fn check_phi_identity(e: usize) -> Result<PhiIdentityReport> {
    if e < 2 {
        return Err(Error::InvalidE(e as u32));
    }
    let lhs = cyclotomic(e).compose_power(2);
    let phi_2e = cyclotomic(2 * e);
    let lhs_degree = lhs.degree().unwrap_or(0);
    if e.is_multiple_of(2) {
        return Ok(PhiIdentityReport {
            e,
            factorization_holds: lhs == phi_2e,
            negation_holds: None,
            sign: None,
            lhs_degree,
            rhs_degree: phi_2e.degree().unwrap_or(0),
        });
    }
    let phi_e = cyclotomic(e);
    let rhs = &phi_e * &phi_2e;
    let reflected = phi_e.negate_variable();
    let sign = if phi_2e == reflected {
        Some(1)
    } else if phi_2e == -&reflected {
        Some(-1)
    } else {
        None
    };
    Ok(PhiIdentityReport {
        e,
        factorization_holds: lhs == rhs,
        negation_holds: Some(sign.is_some()),
        sign,
        lhs_degree,
        rhs_degree: rhs.degree().unwrap_or(0),
    })
}

/// Deterministic trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_characteristic(p: u64) -> Result<()> {
    if p == 0 || is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Bad primes of a classical family: none for A, only 2 for B and D.
pub fn bad_primes(family: Family) -> &'static [u64] {
    match family {
        Family::A => &[],
        Family::B | Family::D => &[2],
    }
}

/// True iff `p` (a prime) is good for `w`.
pub fn is_good_prime(w: WeylType, p: u64) -> bool {
    !bad_primes(w.family()).contains(&p)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Euler's totient by trial division.
    fn totient(n: usize) -> usize {
        let mut result = n;
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                while m.is_multiple_of(d) {
                    m /= d;
                }
                result -= result / d;
            }
            d += 1;
        }
        if m > 1 {
            result -= result / m;
        }
        result
    }

    /// `1 + x + ... + x^(i-1)` reduced modulo `Φ_m`, or the integer `i` when
    /// `m == 1`; zero iff the geometric sum vanishes at a primitive `m`-th
    /// root of unity.
    fn geometric_sum_vanishes(m: usize, i: usize, p: u64) -> bool {
        if m == 1 {
            return if p == 0 {
                false
            } else {
                (i as u64).is_multiple_of(p)
            };
        }
        let sum = IntPoly::new(vec![1; i]);
        let (_, r) = sum.div_rem_monic(&cyclotomic(m));
        if p == 0 {
            r.is_zero()
        } else {
            r.coeffs().iter().all(|&c| c.rem_euclid(p as i64) == 0)
        }
    }

    fn e_by_search(m: usize, p: u64) -> Option<u64> {
        (2..=200)
            .find(|&i| geometric_sum_vanishes(m, i, p))
            .map(|i| i as u64)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), IntPoly::new(vec![-1, 1]));
        assert_eq!(cyclotomic(6), IntPoly::new(vec![1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::new(vec![1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(12).to_string(), "v^4 - v^2 + 1");
        assert_eq!(cyclotomic(1).display_in('x'), "x - 1");
    }

    #[test]
    fn product_over_divisors_is_x_pow_minus_one() {
        for n in 1..=40 {
            let prod = (1..=n)
                .filter(|d| n % d == 0)
                .fold(IntPoly::one(), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(prod, IntPoly::x_pow_minus_one(n), "n={n}");
            assert_eq!(cyclotomic(n).degree(), Some(totient(n)));
        }
    }

    #[test]
    fn e_from_specialization() {
        let e = |m, p| compute_e(SpecializationSpec::new(m, p).unwrap());
        assert_eq!(e(5, 0), Some(5));
        assert_eq!(e(1, 3), Some(3));
        assert_eq!(e(1, 0), None);
        assert!(SpecializationSpec::new(0, 0).is_err());
        assert!(SpecializationSpec::new(3, 4).is_err());
        assert!(SpecializationSpec::new(6, 3).is_err());
    }

    #[test]
    fn e_matches_geometric_sum_search() {
        for p in [0u64, 2, 3, 5, 7] {
            for m in 1..=12usize {
                let Ok(spec) = SpecializationSpec::new(m as u64, p) else {
                    continue;
                };
                assert_eq!(compute_e(spec), e_by_search(m, p), "m={m} p={p}");
                if let Some(e) = compute_e(spec) {
                    assert!(e >= 2);
                }
            }
        }
    }

    #[test]
    fn identity_examples() {
        let two = check_phi_identity(2).unwrap();
        assert!(two.all_hold());
        assert_eq!(two.sign, None);
        let three = check_phi_identity(3).unwrap();
        assert!(three.all_hold());
        assert_eq!(three.sign, Some(1));
        assert_eq!(check_phi_identity(5).unwrap().sign, Some(1));
        assert!(check_phi_identity(1).is_err());
    }

    #[test]
    fn identities_and_degrees_up_to_thirty() {
        for e in 2..=30 {
            let report = check_phi_identity(e).unwrap();
            assert!(report.all_hold(), "e={e}: {report:?}");
            assert_eq!(report.lhs_degree, 2 * totient(e));
            assert_eq!(report.rhs_degree, 2 * totient(e));
        }
    }

    #[test]
    fn odd_sign_is_constant() {
        for e in (3..=29).step_by(2) {
            assert_eq!(check_phi_identity(e).unwrap().sign, Some(1), "e={e}");
        }
    }

    #[test]
    fn primes_and_good_primes() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        let a = WeylType::new(Family::A, 4).unwrap();
        let b = WeylType::new(Family::B, 3).unwrap();
        let d = WeylType::new(Family::D, 4).unwrap();
        assert!(is_good_prime(a, 2));
        assert!(!is_good_prime(b, 2));
        assert!(is_good_prime(d, 5));
        assert!(!is_good_prime(d, 2));
    }

    #[test]
    fn concurrent_cache_fill() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| (1..=60).map(cyclotomic).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }
}
