use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer Laurent polynomial in `v`.
///
/// Stored densely between the lowest and highest nonzero exponents; the
/// zero polynomial has no coefficients. Both ends of `coeffs` are nonzero
/// whenever it is nonempty, so derived equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * v^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            Self {
                low: exp,
                coeffs: vec![coeff],
            }
        }
    }

    /// `u = v^2`.
    pub fn u() -> Self {
        Self::monomial(1, 2)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut out = Self::zero();
        for (exp, coeff) in terms {
            out.add_shifted(&Self::one(), exp, coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        usize::try_from(exp - self.low)
            .ok()
            .and_then(|i| self.coeffs.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        match self.max_exponent() {
            None => Self::zero(),
            Some(high) => Self {
                low: -high,
                coeffs: self.coeffs.iter().rev().copied().collect(),
            },
        }
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// True iff every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|low| low >= 0)
    }

    fn ensure_range(&mut self, low: i32, high: i32) {
        if self.is_zero() {
            self.low = low;
            self.coeffs = vec![0; (high - low + 1) as usize];
            return;
        }
        if low < self.low {
            let extra = (self.low - low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(0, extra));
            self.low = low;
        }
        let top = self.low + self.coeffs.len() as i32 - 1;
        if high > top {
            self.coeffs
                .resize(self.coeffs.len() + (high - top) as usize, 0);
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
    }

    /// `self += scale * v^shift * other`.
    pub fn add_shifted(&mut self, other: &Self, shift: i32, scale: i64) {
        if other.is_zero() || scale == 0 {
            return;
        }
        let low = other.low + shift;
        let high = low + other.coeffs.len() as i32 - 1;
        self.ensure_range(low, high);
        let offset = (low - self.low) as usize;
        for (dst, &c) in self.coeffs[offset..].iter_mut().zip(&other.coeffs) {
            *dst += scale * c;
        }
        self.normalize();
    }

    /// `self += sign * a * b`.
    pub fn add_product(&mut self, a: &Self, b: &Self, sign: i64) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let low = a.low + b.low;
        let high = low + (a.coeffs.len() + b.coeffs.len()) as i32 - 2;
        self.ensure_range(low, high);
        let offset = (low - self.low) as usize;
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let row = &mut self.coeffs[offset + i..];
            for (dst, &y) in row.iter_mut().zip(&b.coeffs) {
                *dst += sign * x * y;
            }
        }
        self.normalize();
    }

    /// Sparse `exp:coeff` pairs separated by spaces, e.g. `-1:1 1:1`; the
    /// zero polynomial renders as `0`.
    pub fn to_sparse_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Ascending powers, e.g. `v^-1 + v`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.terms().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.unsigned_abs();
            match exp {
                0 => write!(f, "{abs}")?,
                _ if abs == 1 => {}
                _ => write!(f, "{abs}")?,
            }
            match exp {
                0 => {}
                1 => f.write_str("v")?,
                _ => write!(f, "v^{exp}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, 1);
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, -1);
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_product(self, rhs, 1);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i32..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    #[test]
    fn basics() {
        let p = LaurentPoly::from_terms([(-1, 1), (1, 1)]);
        assert_eq!(p.to_string(), "v^-1 + v");
        assert_eq!(p.to_sparse_string(), "-1:1 1:1");
        assert_eq!(p.min_exponent(), Some(-1));
        assert_eq!(p.max_exponent(), Some(1));
        assert_eq!(p.bar(), p);
        assert_eq!(p.eval_at_one(), 2);
        assert!(!p.is_polynomial());
        assert!(p.shift(1).is_polynomial());
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::zero().to_sparse_string(), "0");
        assert_eq!(
            LaurentPoly::from_terms([(0, 3), (2, -2)]).to_string(),
            "3 - 2v^2"
        );
    }

    #[test]
    fn cancellation_normalizes() {
        let p = LaurentPoly::from_terms([(-3, 1), (0, 2), (4, 1)]);
        let q = LaurentPoly::from_terms([(-3, 1), (4, 1)]);
        let diff = &p - &q;
        assert_eq!(diff, LaurentPoly::monomial(2, 0));
        assert!((&p - &p).is_zero());
        assert_eq!(&p - &p, LaurentPoly::zero());
    }

    #[test]
    fn quadratic_relation_coefficients() {
        // (u - 1)(u + 1) = u^2 - 1
        let u = LaurentPoly::u();
        let one = LaurentPoly::one();
        let prod = &(&u - &one) * &(&u + &one);
        assert_eq!(prod, LaurentPoly::from_terms([(4, 1), (0, -1)]));
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }

        #[test]
        fn coefficients_match_terms(a in arb_poly()) {
            for (e, c) in a.terms() {
                prop_assert_eq!(a.coeff(e), c);
                prop_assert!(c != 0);
            }
            prop_assert_eq!(a.coeff(100), 0);
        }
    }
}
