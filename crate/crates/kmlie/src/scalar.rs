//! Exact scalar fields: arbitrary-precision rationals and Gaussian rationals.

use alloc::format;
use alloc::string::String;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Scalar field interface shared by [`Rat`] and [`GaussRat`].
///
/// Division is partial (`inv` on zero is `None`); everything else is total.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(k: i64) -> Self;
    fn from_rat(r: Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Complex conjugation; the identity on rationals.
    fn conj(&self) -> Self;
    /// The imaginary unit, when the field has one.
    fn imaginary() -> Option<Self>;
    /// Exact decimal-free rendering: `p/q` or `p/q+r/s*i`.
    fn render(&self) -> String;

    fn scale_int(&self, k: i64) -> Self {
        self.mul(&Self::from_int(k))
    }

    /// Integer power, negative exponents through `inv`.
    fn pow_int(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(k: i64) -> Self {
        rat_int(k)
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn imaginary() -> Option<Self> {
        None
    }
    fn render(&self) -> String {
        format!("{self}")
    }
}

/// Gaussian rational `re + im*i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_re(re: Rat) -> Self {
        GaussRat {
            re,
            im: Zero::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRat {
            re: Zero::zero(),
            im: One::one(),
        }
    }

    /// Squared modulus `re² + im²`, a rational.
    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}*i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Scalar for GaussRat {
    fn zero() -> Self {
        GaussRat::from_re(Zero::zero())
    }
    fn one() -> Self {
        GaussRat::from_re(One::one())
    }
    fn from_int(k: i64) -> Self {
        GaussRat::from_re(rat_int(k))
    }
    fn from_rat(r: Rat) -> Self {
        GaussRat::from_re(r)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn neg(&self) -> Self {
        GaussRat::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sq();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(GaussRat::new(&self.re / &n, -&self.im / &n))
    }
    fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }
    fn imaginary() -> Option<Self> {
        Some(GaussRat::i())
    }
    fn render(&self) -> String {
        format!("{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_field_ops() {
        let i = GaussRat::i();
        assert_eq!(i.mul(&i), GaussRat::from_int(-1));
        let z = GaussRat::new(rat(1, 2), rat(-3, 4));
        let w = z.mul(&z.inv().unwrap());
        assert_eq!(w, GaussRat::one());
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn rendering_is_exact() {
        assert_eq!(rat(3, 6).render(), "1/2");
        assert_eq!(rat_int(-4).render(), "-4");
        let z = GaussRat::new(rat(1, 2), rat(-1, 3));
        assert_eq!(z.render(), "1/2-1/3*i");
        assert_eq!(GaussRat::i().render(), "1*i");
    }

    #[test]
    fn integer_powers() {
        let two = rat_int(2);
        assert_eq!(two.pow_int(-3).unwrap(), rat(1, 8));
        assert_eq!(rat_int(0).pow_int(-1), None);
        assert_eq!(GaussRat::i().pow_int(6).unwrap(), GaussRat::from_int(-1));
    }
}
