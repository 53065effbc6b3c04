//! Dense univariate polynomials in `u` over the Gaussian rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gauss::Gauss;

/// Coefficients are stored lowest degree first with no trailing zeros,
/// so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Gauss>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Gauss::one())
    }

    pub fn constant(c: Gauss) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    pub fn monomial(deg: usize, c: Gauss) -> Self {
        let mut v = vec![Gauss::zero(); deg + 1];
        v[deg] = c;
        UPoly::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Gauss>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Gauss] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Gauss {
        self.coeffs.get(k).cloned().unwrap_or_else(Gauss::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Gauss> {
        self.coeffs.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Gauss) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn only_even_powers(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Gauss::is_real)
    }

    pub fn eval(&self, x: &Gauss) -> Gauss {
        let mut acc = Gauss::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Returns `(lead, self / lead)`; the zero polynomial is returned as is.
    pub fn into_monic(self) -> (Gauss, UPoly) {
        match self.lead().cloned() {
            None => (Gauss::one(), self),
            Some(l) if l.is_one() => (l, self),
            Some(l) => {
                let inv = l.inv().expect("nonzero lead");
                let p = self.scale(&inv);
                (l, p)
            }
        }
    }

    /// Euclidean division; `d` must be nonzero.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(sd) = self.degree() else {
            return (UPoly::zero(), UPoly::zero());
        };
        if sd < dd {
            return (UPoly::zero(), self.clone());
        }
        let lead_inv = d.lead().unwrap().inv().unwrap();
        let monic_divisor = lead_inv.is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Gauss::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = if monic_divisor {
                top.clone()
            } else {
                top * &lead_inv
            };
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    let t = &q * dc;
                    rem[k + j] -= &t;
                }
            }
            quot[k] = q;
        }
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    /// Exact quotient; panics in debug builds if the remainder is nonzero.
    pub fn div_exact(&self, d: &UPoly) -> UPoly {
        if d.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_zero() {
            return b.clone().into_monic().1;
        }
        if b.is_zero() {
            return a.clone().into_monic().1;
        }
        if a.is_constant() || b.is_constant() {
            return UPoly::one();
        }
        // Strip the common power of u first; it is the usual common factor.
        let shift = a.valuation().unwrap().min(b.valuation().unwrap());
        let (mut x, mut y) = if shift > 0 {
            (a.shift_down(shift), b.shift_down(shift))
        } else {
            (a.clone(), b.clone())
        };
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = x.div_rem(&y).1;
            x = y;
            y = r.into_monic().1;
        }
        let g = x.into_monic().1;
        if shift > 0 {
            g.shift_up(shift)
        } else {
            g
        }
    }

    fn shift_down(&self, k: usize) -> UPoly {
        UPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn shift_up(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Gauss::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: c }
    }

    /// Substitute `u -> -u`.
    pub fn reflect(&self) -> UPoly {
        UPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }
}

impl<'a> Add<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(short.coeffs.iter()) {
            *a += b;
        }
        UPoly::from_coeffs(c)
    }
}

impl<'a> Sub<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut c = self.coeffs.clone();
        c.resize(n, Gauss::zero());
        for (a, b) in c.iter_mut().zip(o.coeffs.iter()) {
            *a -= b;
        }
        UPoly::from_coeffs(c)
    }
}

impl<'a> Mul<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut c = vec![Gauss::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += &(a * b);
                }
            }
        }
        UPoly::from_coeffs(c)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
