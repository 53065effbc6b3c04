//! Gaussian rationals `a + b i` with `a, b` in Q.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gauss { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Gauss {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(k: i64) -> Self {
        Gauss::real(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Gauss::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Gauss {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Gauss::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(Gauss {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// Least common multiple of the denominators of both components.
    pub fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// True iff both components lie in Z[1/2].
    pub fn is_dyadic(&self) -> bool {
        is_power_of_two(self.re.denom()) && is_power_of_two(self.im.denom())
    }
}

// Rational helpers that skip the gcd normalization when an operand is zero,
// a unit or an integer. Most coefficients in practice are small integers.
fn rat_mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() || b.is_zero() {
        return BigRational::zero();
    }
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    if a.is_integer() && b.is_integer() {
        return BigRational::from_integer(a.numer() * b.numer());
    }
    a * b
}

fn rat_add(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_integer() && b.is_integer() {
        return BigRational::from_integer(a.numer() + b.numer());
    }
    a + b
}

fn rat_add_assign(a: &mut BigRational, b: &BigRational) {
    if b.is_zero() {
        return;
    }
    if a.is_integer() && b.is_integer() {
        *a = BigRational::from_integer(a.numer() + b.numer());
    } else {
        *a += b;
    }
}

fn rat_sub_assign(a: &mut BigRational, b: &BigRational) {
    if b.is_zero() {
        return;
    }
    if a.is_integer() && b.is_integer() {
        *a = BigRational::from_integer(a.numer() - b.numer());
    } else {
        *a -= b;
    }
}

pub(crate) fn is_power_of_two(d: &BigInt) -> bool {
    let d = d.abs();
    !d.is_zero() && (&d & (&d - BigInt::one())).is_zero()
}

impl Zero for Gauss {
    fn zero() -> Self {
        Gauss::default_zero()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gauss {
    fn one() -> Self {
        Gauss::real(BigRational::one())
    }
}

impl Gauss {
    fn default_zero() -> Self {
        Gauss {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
}

impl<'a> Add<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn add(self, o: &Gauss) -> Gauss {
        Gauss {
            re: rat_add(&self.re, &o.re),
            im: rat_add(&self.im, &o.im),
        }
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        &self + &o
    }
}

impl AddAssign<&Gauss> for Gauss {
    fn add_assign(&mut self, o: &Gauss) {
        rat_add_assign(&mut self.re, &o.re);
        rat_add_assign(&mut self.im, &o.im);
    }
}

impl SubAssign<&Gauss> for Gauss {
    fn sub_assign(&mut self, o: &Gauss) {
        rat_sub_assign(&mut self.re, &o.re);
        rat_sub_assign(&mut self.im, &o.im);
    }
}

impl<'a> Sub<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn sub(self, o: &Gauss) -> Gauss {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl Sub for Gauss {
    type Output = Gauss;
    fn sub(mut self, o: Gauss) -> Gauss {
        self -= &o;
        self
    }
}

impl<'a> Mul<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn mul(self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss::real(rat_mul(&self.re, &o.re));
        }
        let mut re = rat_mul(&self.re, &o.re);
        rat_sub_assign(&mut re, &rat_mul(&self.im, &o.im));
        let im = rat_add(&rat_mul(&self.re, &o.im), &rat_mul(&self.im, &o.re));
        Gauss { re, im }
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        &self * &o
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "({}{}{}*i)", self.re, sign, self.im.abs())
        }
    }
}
