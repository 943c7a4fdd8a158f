//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros, so the zero polynomial is the empty vector and structural
//! equality is mathematical equality.  Degrees stay small in this crate
//! (generating functions of the sequences we care about), so everything is
//! schoolbook: O(n^2) multiplication, Euclidean division, and a gcd by
//! primitive pseudo-remainders to keep coefficient growth in check.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{format_rat, Int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("division by the zero polynomial")]
pub struct DivisionByZero;

/// Polynomial with rational coefficients, ascending degree order,
/// invariant: the last stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::monomial(1, Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients, ascending; convenient in tests and examples.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&n| crate::rational::int(n)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient (`None` for zero).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(k.into()))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Substitute `x -> -x`: negate odd coefficients.
    pub fn alternate(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Poly { coeffs }
    }

    /// Substitute `x -> x^m` (`m >= 1`): spread coefficients out.
    pub fn stretch(&self, m: usize) -> Poly {
        assert!(m >= 1, "stretch factor must be positive");
        if self.is_zero() || m == 1 {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); (self.coeffs.len() - 1) * m + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * m] = c.clone();
        }
        Poly { coeffs }
    }

    /// Drop the `k` lowest coefficients (divide by `x^k`, discarding any
    /// remainder — callers ensure the valuation is at least `k`).
    pub fn shift_down(&self, k: usize) -> Poly {
        if k >= self.coeffs.len() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs[k..].to_vec())
    }

    /// Multiply by `x^k`: prepend `k` zero coefficients.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Composition `self(inner)`, by Horner over polynomials.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// The first `len` coefficients `c_i` of the expansion
    /// `self = sum c_i (x - 1)^i`, by repeated synthetic division by
    /// `x - 1`: round `i` leaves `c_i` behind and the quotient above it.
    /// Costs `len` passes over the coefficients, where composing with
    /// `1 - x` outright is quadratic in the degree.
    pub fn taylor_at_one(&self, len: usize) -> Poly {
        let mut work = self.coeffs.clone();
        for i in 0..len.min(work.len()) {
            for j in (i..work.len() - 1).rev() {
                let high = work[j + 1].clone();
                work[j] += high;
            }
        }
        work.truncate(len);
        Poly::from_coeffs(work)
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Rescale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&(Rat::one() / lc)),
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly), DivisionByZero> {
        let dd = d.degree().ok_or(DivisionByZero)?;
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = dc * &factor;
                rem[k + i] -= t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) && rem.len() > dd {
                rem.pop();
            }
            quo[k] = factor;
        }
        Ok((Poly::from_coeffs(quo), Poly::from_coeffs(rem)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.  Runs a primitive pseudo-remainder
    /// sequence over the integers.  Euclid directly on rational
    /// coefficients would be shorter but explodes: every division mixes
    /// all the denominators, and on coprime inputs — the common case when
    /// reducing a fraction — the recursion runs the full depth with the
    /// coefficient sizes compounding each step.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = integer_primitive(self);
        let mut b = integer_primitive(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = make_primitive(r);
        }
        Poly::from_coeffs(a.into_iter().map(Rat::from_integer).collect()).monic()
    }

    /// Multiplicity of `point` as a root (0 if it is not one).
    pub fn root_multiplicity(&self, point: &Rat) -> usize {
        assert!(!self.is_zero(), "every point is a root of the zero polynomial");
        let linear = Poly::from_coeffs(vec![-point, Rat::one()]);
        let mut q = self.clone();
        let mut mult = 0;
        while q.eval(point).is_zero() {
            let (quo, rem) = q.divrem(&linear).unwrap();
            debug_assert!(rem.is_zero());
            q = quo;
            mult += 1;
        }
        mult
    }
}

/// Clear denominators and divide out the content: the primitive integer
/// polynomial with the same roots.  Trailing zeros are trimmed so the
/// length tracks the degree, as in `Poly` itself.
fn integer_primitive(p: &Poly) -> Vec<Int> {
    let mut lcm = Int::one();
    for c in &p.coeffs {
        lcm = &lcm / &int_gcd(&lcm, c.denom()) * c.denom();
    }
    make_primitive(p.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect())
}

/// Divide an integer polynomial by its content, making the leading
/// coefficient positive; the zero polynomial passes through.
fn make_primitive(mut v: Vec<Int>) -> Vec<Int> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let mut content = Int::zero();
    for c in &v {
        content = int_gcd(&content, c);
    }
    if v.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    for c in &mut v {
        *c /= &content;
    }
    v
}

/// Remainder of `lc(b)^(deg a - deg b + 1) * a` divided by `b`: the
/// scaling keeps the division fraction-free.
fn pseudo_rem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let coef = r.pop().unwrap();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = r.len() - db;
        for (i, bc) in b[..db].iter().enumerate() {
            r[off + i] -= bc * &coef;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

fn int_gcd(a: &Int, b: &Int) -> Int {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn add_scaled(a: &Poly, b: &Poly, s: Rat) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut coeffs = Vec::with_capacity(n);
    for k in 0..n {
        let mut c = a.coeffs.get(k).cloned().unwrap_or_else(Rat::zero);
        if let Some(bc) = b.coeffs.get(k) {
            c += bc * &s;
        }
        coeffs.push(c);
    }
    Poly::from_coeffs(coeffs)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        add_scaled(self, rhs, Rat::one())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        add_scaled(self, rhs, -Rat::one())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Prints in the form `1 - 2*x + x^2`: ascending powers, unit coefficients
/// elided, rational coefficients attached with `*`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{}", format_rat(&mag))?,
                (_, true) => {}
                (_, false) => write!(f, "{}*", format_rat(&mag))?,
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
