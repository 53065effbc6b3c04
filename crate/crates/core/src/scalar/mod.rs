//! Exact arithmetic in the rational function field Q(i)(u), with v = u².
//!
//! A [`Scalar`] is a reduced fraction of polynomials in `u`. The denominator
//! is kept monic, which makes the representation unique: two scalars are
//! equal as field elements iff their stored numerators and denominators are
//! equal. Everything the Hecke-Clifford computations produce lives in the
//! subfield Q(v); the tensor-space oracle is the only place where odd powers
//! of `u` and the imaginary unit appear.

mod gauss;
mod poly;

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use gauss::Gauss;
pub use poly::UPoly;

use crate::error::{Error, Result};

/// Subrings used for membership assertions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    /// Z[1/2][v, v^-1].
    A,
    /// Q(v): even powers of `u` and rational coefficients only.
    Qv,
    /// No imaginary part.
    Real,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: UPoly,
    den: UPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Scalar::from_gauss(Gauss::from_int(k))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_gauss(Gauss::from_ratio(n, d))
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Scalar::from_gauss(Gauss::real(BigRational::from_integer(k)))
    }

    pub fn from_gauss(c: Gauss) -> Self {
        Scalar {
            num: UPoly::constant(c),
            den: UPoly::one(),
        }
    }

    /// The square root `u` of `v`.
    pub fn u() -> Self {
        Scalar::from_poly(UPoly::monomial(1, Gauss::one()))
    }

    pub fn v() -> Self {
        Scalar::v_pow(1)
    }

    pub fn i() -> Self {
        Scalar::from_gauss(Gauss::i())
    }

    /// `v^k` for any integer `k`.
    pub fn v_pow(k: i64) -> Self {
        let m = UPoly::monomial(2 * k.unsigned_abs() as usize, Gauss::one());
        if k >= 0 {
            Scalar::from_poly(m)
        } else {
            Scalar {
                num: UPoly::one(),
                den: m,
            }
        }
    }

    /// Polynomial in `v` from integer coefficients, lowest degree first.
    pub fn v_poly(coeffs: &[i64]) -> Self {
        let mut c = vec![Gauss::zero(); 2 * coeffs.len()];
        for (k, &a) in coeffs.iter().enumerate() {
            c[2 * k] = Gauss::from_int(a);
        }
        Scalar::from_poly(UPoly::from_coeffs(c))
    }

    pub fn from_poly(p: UPoly) -> Self {
        Scalar {
            num: p,
            den: UPoly::one(),
        }
    }

    /// Builds `num / den`, reducing to canonical form.
    pub fn from_fraction(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Scalar::reduce(num, den))
    }

    fn reduce(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_constant() {
            let (l, _) = den.into_monic();
            let inv = l.inv().expect("nonzero denominator");
            return Scalar {
                num: num.scale(&inv),
                den: UPoly::one(),
            };
        }
        let g = UPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let (l, den) = den.into_monic();
        let num = if l.is_one() {
            num
        } else {
            num.scale(&l.inv().unwrap())
        };
        Scalar { num, den }
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a Gaussian rational when the scalar is constant.
    pub fn as_constant(&self) -> Option<Gauss> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// The value as a rational number when the scalar is a real constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_constant().filter(Gauss::is_real).map(|g| g.re)
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        if o.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self * &o.inv_unchecked())
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.inv_unchecked())
    }

    fn inv_unchecked(&self) -> Scalar {
        let (l, num) = self.num.clone().into_monic();
        let den = self.den.scale(&l.inv().unwrap());
        Scalar { num: den, den: num }
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `self` times `2^k` for any integer `k`.
    pub fn mul_pow2(&self, k: i64) -> Scalar {
        let two = BigInt::from(2).pow(k.unsigned_abs() as u32);
        let c = if k >= 0 {
            BigRational::from_integer(two)
        } else {
            BigRational::new(BigInt::one(), two)
        };
        self * &Scalar::from_gauss(Gauss::real(c))
    }

    pub fn scale(&self, c: &Gauss) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Evaluate at `u = u0`.
    pub fn specialize(&self, u0: &Gauss) -> Result<Gauss> {
        let d = self.den.eval(u0);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        let n = self.num.eval(u0);
        Ok(&n * &d.inv().unwrap())
    }

    /// Evaluate at `v = 1` (that is, `u = 1`).
    pub fn at_v_one(&self) -> Result<Gauss> {
        self.specialize(&Gauss::one())
    }

    /// The first `terms` coefficients of the power series in `v` at `v = 0`.
    pub fn series_in_v(&self, terms: usize) -> Result<Vec<Gauss>> {
        if !self.num.only_even_powers() || !self.den.only_even_powers() {
            return Err(Error::NotInQv);
        }
        let d0 = self.den.coeff(0).inv().ok_or(Error::Pole)?;
        let mut s: Vec<Gauss> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut acc = self.num.coeff(2 * k);
            for j in 1..=k {
                let dj = self.den.coeff(2 * j);
                if !dj.is_zero() {
                    acc -= &(&dj * &s[k - j]);
                }
            }
            s.push(&acc * &d0);
        }
        Ok(s)
    }

    /// Substitute `v -> v0`, keeping the result as a scalar. Only valid for
    /// elements of Q(i)(v); odd powers of `u` are rejected.
    pub fn substitute_v(&self, v0: &Scalar) -> Result<Scalar> {
        if !(self.num.only_even_powers() && self.den.only_even_powers()) {
            return Err(Error::NotInQv);
        }
        let term_wise = |p: &UPoly| -> Result<Scalar> {
            let mut acc = Scalar::zero();
            for (k, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc += &(&v0.pow((k / 2) as i64)? * &Scalar::from_gauss(c.clone()));
                }
            }
            Ok(acc)
        };
        term_wise(&self.num)?.checked_div(&term_wise(&self.den)?)
    }

    pub fn is_in(&self, ring: Ring) -> bool {
        let real = self.num.is_real() && self.den.is_real();
        match ring {
            Ring::Real => real,
            Ring::Qv => real && self.num.only_even_powers() && self.den.only_even_powers(),
            Ring::A => {
                // The denominator of a Laurent polynomial is a monic power of u.
                let den_ok = self.den.degree().is_some_and(|d| d % 2 == 0)
                    && self.den.coeffs().iter().rev().skip(1).all(Zero::is_zero);
                den_ok
                    && real
                    && self.num.only_even_powers()
                    && self.num.coeffs().iter().all(Gauss::is_dyadic)
            }
        }
    }

    /// Integer rendering data: `(numerator, denominator)` with Gaussian
    /// integer coefficients, no common integer content, and a positive
    /// leading denominator coefficient.
    fn cleared(&self) -> (Vec<(BigInt, BigInt)>, Vec<(BigInt, BigInt)>) {
        let mut l = BigInt::one();
        for c in self.num.coeffs().iter().chain(self.den.coeffs()) {
            l = l.lcm(&c.denominator_lcm());
        }
        let to_int = |c: &Gauss| -> (BigInt, BigInt) {
            let re = &c.re * BigRational::from_integer(l.clone());
            let im = &c.im * BigRational::from_integer(l.clone());
            (re.to_integer(), im.to_integer())
        };
        let mut n: Vec<_> = self.num.coeffs().iter().map(to_int).collect();
        let mut d: Vec<_> = self.den.coeffs().iter().map(to_int).collect();
        let mut g = BigInt::zero();
        for (a, b) in n.iter().chain(d.iter()) {
            g = g.gcd(a).gcd(b);
        }
        if !g.is_zero() && !g.is_one() {
            for (a, b) in n.iter_mut().chain(d.iter_mut()) {
                *a = &*a / &g;
                *b = &*b / &g;
            }
        }
        (n, d)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(k: i64) -> Self {
        Scalar::from_int(k)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Scalar::from_poly(&self.num + &o.num);
            }
            return Scalar::reduce(&self.num + &o.num, self.den.clone());
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        Scalar::reduce(num, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar::from_poly(&self.num * &o.num);
        }
        let g1 = UPoly::gcd(&self.num, &o.den);
        let g2 = UPoly::gcd(&o.num, &self.den);
        let n = &self.num.div_exact(&g1) * &o.num.div_exact(&g2);
        let d = &self.den.div_exact(&g2) * &o.den.div_exact(&g1);
        let (l, d) = d.into_monic();
        let n = if l.is_one() {
            n
        } else {
            n.scale(&l.inv().unwrap())
        };
        Scalar { num: n, den: d }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        if self.den.is_one() && o.den.is_one() {
            let n = std::mem::take(&mut self.num);
            self.num = &n + &o.num;
            return;
        }
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self += &(-o);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_gauss_int(re: &BigInt, im: &BigInt) -> (String, bool) {
    // Returns the coefficient text and whether it is a bare signed integer.
    if im.is_zero() {
        (re.to_string(), true)
    } else if re.is_zero() {
        let s = if im.is_one() {
            "i".to_string()
        } else if *im == -BigInt::one() {
            "-i".to_string()
        } else {
            format!("{im}*i")
        };
        (s, false)
    } else {
        let sign = if im.is_negative() { '-' } else { '+' };
        let ia = im.abs();
        let imt = if ia.is_one() {
            "i".to_string()
        } else {
            format!("{ia}*i")
        };
        (format!("({re}{sign}{imt})"), false)
    }
}

/// Renders a polynomial with Gaussian-integer coefficients in decreasing
/// degree. Returns the text and its number of terms.
fn fmt_poly(c: &[(BigInt, BigInt)], var: &str, step: usize) -> (String, usize) {
    let mut out = String::new();
    let mut terms = 0;
    for (k, (re, im)) in c.iter().enumerate().rev() {
        if re.is_zero() && im.is_zero() {
            continue;
        }
        let e = k / step;
        let (coef, plain) = fmt_gauss_int(re, im);
        let body = if e == 0 {
            coef
        } else {
            let mono = if e == 1 {
                var.to_string()
            } else {
                format!("{var}^{e}")
            };
            if plain && re.is_one() {
                mono
            } else if plain && *re == -BigInt::one() {
                format!("-{mono}")
            } else if coef == "i" || coef == "-i" {
                format!("{coef}*{mono}")
            } else {
                format!("{coef}*{mono}")
            }
        };
        if terms > 0 && !body.starts_with('-') {
            out.push('+');
        }
        out.push_str(&body);
        terms += 1;
    }
    if terms == 0 {
        out.push('0');
    }
    (out, terms)
}

impl fmt::Display for Scalar {
    /// Canonical text: expanded numerator over expanded denominator in
    /// decreasing degree, `/1` omitted. Uses `v` unless an odd power of `u`
    /// occurs, in which case the whole value is written in `u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let even = self.num.only_even_powers() && self.den.only_even_powers();
        let (var, step) = if even { ("v", 2) } else { ("u", 1) };
        let (n, d) = self.cleared();
        let (ns, nterms) = fmt_poly(&n, var, step);
        let den_is_one = d.len() == 1 && d[0].0.is_one() && d[0].1.is_zero();
        if den_is_one {
            return f.write_str(&ns);
        }
        let (ds, dterms) = fmt_poly(&d, var, step);
        let ns = if nterms > 1 { format!("({ns})") } else { ns };
        let simple_den = dterms == 1 && !ds.contains('*') && !ds.starts_with('(');
        let ds = if simple_den { ds } else { format!("({ds})") };
        write!(f, "{ns}/{ds}")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl std::str::FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        crate::parse::parse_scalar(s)
    }
}
