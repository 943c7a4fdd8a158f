//! Sequences with rational generating functions, and the two products the
//! summation theory is built on.
//!
//! A [`GfSeq`] stands for the infinite sequence `(u_0, u_1, u_2, ...)`
//! whose generating function `sum u_k x^k` is a reduced [`RatFun`] with
//! nonvanishing denominator at 0.  The representation *is* the generating
//! function, so equality of sequences is decidable and exact, and every
//! operation below is implemented as an exact operation on rational
//! functions.  [`FiniteSeq`] is the sub-ring of finitely supported
//! sequences (polynomial generating functions), kept as a plain coefficient
//! vector because certificates live there.
//!
//! Products:
//!
//! * the Cauchy product `(u (x) v)_n = sum_{k} u_k v_{n-k}` — ordinary
//!   coefficient convolution, i.e. multiplication of generating functions;
//! * the index-multiplicative product, written `(*)` here, defined on basis
//!   vectors by `e_i (*) e_j = e_k` with `k + 1 = (i + 1)(j + 1)`: a
//!   Dirichlet convolution shifted by one.  Against a *finite* right factor
//!   it maps rational generating functions to rational generating
//!   functions through `gf(u (*) p) = sum_j p_j x^j U(x^(j+1))`, which is
//!   the form [`dirichlet_product`] computes.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::rational::{format_rat, Rat};
use crate::ratfun::RatFun;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("denominator vanishes at 0, so the function is not the generating function of a sequence")]
    NotAPowerSeries,
}

/// A sequence given by its (reduced) rational generating function.
#[derive(Clone, PartialEq, Eq)]
pub struct GfSeq {
    gf: RatFun,
}

impl GfSeq {
    /// Wrap a rational function as a sequence; it must be a power series,
    /// i.e. have no pole at the origin.
    pub fn from_ratfun(gf: RatFun) -> Result<Self, SeqError> {
        if gf.den().coeff(0).is_zero() {
            return Err(SeqError::NotAPowerSeries);
        }
        Ok(GfSeq { gf })
    }

    pub fn zero() -> Self {
        GfSeq { gf: RatFun::zero() }
    }

    pub fn gf(&self) -> &RatFun {
        &self.gf
    }

    pub fn is_zero(&self) -> bool {
        self.gf.is_zero()
    }

    /// The finite-support view, if the sequence is finitely supported.
    pub fn as_finite(&self) -> Option<FiniteSeq> {
        if self.gf.is_polynomial() {
            Some(FiniteSeq::from_poly(self.gf.num()))
        } else {
            None
        }
    }

    /// First `n` terms.
    pub fn terms(&self, n: usize) -> Vec<Rat> {
        self.gf
            .power_series_coeffs(n)
            .expect("GfSeq invariant: denominator nonzero at 0")
    }

    pub fn term(&self, k: usize) -> Rat {
        self.terms(k + 1).pop().unwrap()
    }

    pub fn scale(&self, c: &Rat) -> GfSeq {
        GfSeq {
            gf: self.gf.scale(c),
        }
    }
}

impl From<&FiniteSeq> for GfSeq {
    fn from(p: &FiniteSeq) -> GfSeq {
        GfSeq {
            gf: RatFun::from_poly(p.to_poly()),
        }
    }
}

impl Add for &GfSeq {
    type Output = GfSeq;
    fn add(self, rhs: &GfSeq) -> GfSeq {
        GfSeq {
            gf: &self.gf + &rhs.gf,
        }
    }
}

impl Sub for &GfSeq {
    type Output = GfSeq;
    fn sub(self, rhs: &GfSeq) -> GfSeq {
        GfSeq {
            gf: &self.gf - &rhs.gf,
        }
    }
}

impl Neg for &GfSeq {
    type Output = GfSeq;
    fn neg(self) -> GfSeq {
        GfSeq { gf: -&self.gf }
    }
}

impl fmt::Display for GfSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gf)
    }
}

impl fmt::Debug for GfSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfSeq({})", self.gf)
    }
}

/// Finitely supported sequence: ascending coefficients, trailing zeros
/// trimmed.  These are the multipliers and certificates of the engine.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSeq {
    coeffs: Vec<Rat>,
}

impl FiniteSeq {
    pub fn zero() -> Self {
        FiniteSeq { coeffs: Vec::new() }
    }

    /// The basis sequence `e_k`: 1 in position `k`, 0 elsewhere.
    pub fn basis(k: usize) -> Self {
        FiniteSeq::from_poly(&Poly::monomial(k, Rat::one()))
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        FiniteSeq::from_poly(&Poly::from_coeffs(coeffs))
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        FiniteSeq::from_poly(&Poly::from_ints(coeffs))
    }

    pub fn from_poly(p: &Poly) -> Self {
        FiniteSeq {
            coeffs: p.coeffs().to_vec(),
        }
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest index carrying a nonzero coefficient, `None` when zero.
    pub fn support_end(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient sum — the ordinary (finite) sum of the sequence,
    /// written `sigma` in derivations.
    pub fn coefficient_sum(&self) -> Rat {
        let mut acc = Rat::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> FiniteSeq {
        FiniteSeq::from_poly(&self.to_poly().scale(c))
    }

    /// Cauchy product of two finite sequences (polynomial multiplication).
    pub fn cauchy(&self, rhs: &FiniteSeq) -> FiniteSeq {
        FiniteSeq::from_poly(&(&self.to_poly() * &rhs.to_poly()))
    }

    /// Index-multiplicative product of two finite sequences, straight from
    /// the definition on basis vectors.
    pub fn dirichlet(&self, rhs: &FiniteSeq) -> FiniteSeq {
        if self.is_zero() || rhs.is_zero() {
            return FiniteSeq::zero();
        }
        let top = (self.coeffs.len()) * (rhs.coeffs.len()) - 1;
        let mut coeffs = vec![Rat::zero(); top + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[(i + 1) * (j + 1) - 1] += a * b;
            }
        }
        FiniteSeq::from_coeffs(coeffs)
    }
}

impl Add for &FiniteSeq {
    type Output = FiniteSeq;
    fn add(self, rhs: &FiniteSeq) -> FiniteSeq {
        FiniteSeq::from_poly(&(&self.to_poly() + &rhs.to_poly()))
    }
}

impl Sub for &FiniteSeq {
    type Output = FiniteSeq;
    fn sub(self, rhs: &FiniteSeq) -> FiniteSeq {
        FiniteSeq::from_poly(&(&self.to_poly() - &rhs.to_poly()))
    }
}

impl Neg for &FiniteSeq {
    type Output = FiniteSeq;
    fn neg(self) -> FiniteSeq {
        FiniteSeq::from_poly(&(-&self.to_poly()))
    }
}

/// Prints in basis notation: `e(0) - 4*e(1)`, or `0` for the zero sequence.
impl fmt::Display for FiniteSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
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
            if mag.is_one() {
                write!(f, "e({k})")?;
            } else {
                write!(f, "{}*e({k})", format_rat(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSeq({self})")
    }
}

/// Geometric sequence `(alpha^k)`, generating function `1 / (1 - alpha x)`.
pub fn geometric(alpha: &Rat) -> GfSeq {
    let den = Poly::from_coeffs(vec![Rat::one(), -alpha]);
    GfSeq {
        gf: RatFun::new(Poly::one(), den).unwrap(),
    }
}

/// The power sequence `((k+1)^n)`: 1, 2^n, 3^n, ...  Its generating
/// function is produced by the recurrence `U_0 = 1/(1-x)`,
/// `U_{n+1} = d/dx (x U_n)`, which shifts in the extra factor of (k+1).
pub fn powers(n: usize) -> GfSeq {
    let x = RatFun::from_poly(Poly::x());
    let mut gf = RatFun::new(Poly::one(), Poly::from_ints(&[1, -1])).unwrap();
    for _ in 0..n {
        gf = (&x * &gf).derivative();
    }
    GfSeq { gf }
}

/// The alternating power sequence `((-1)^k (k+1)^n)`: the sign-alternated
/// version of [`powers`], generating function `P_n(-x)`.
pub fn alternating_powers(n: usize) -> GfSeq {
    GfSeq {
        gf: powers(n).gf.alternate(),
    }
}

/// The alternating binomial sequence `((-1)^k C(n+k, n))`, generating
/// function `1 / (1+x)^(n+1)` — the (n+1)-fold Cauchy power of the
/// alternating unit sequence.
pub fn alternating_binomial(n: usize) -> GfSeq {
    let den = Poly::from_ints(&[1, 1]).pow(n as u32 + 1);
    GfSeq {
        gf: RatFun::new(Poly::one(), den).unwrap(),
    }
}

/// Cauchy product: convolution of coefficients, multiplication of
/// generating functions.
pub fn cauchy_product(u: &GfSeq, v: &GfSeq) -> GfSeq {
    GfSeq {
        gf: &u.gf * &v.gf,
    }
}

/// Index-multiplicative product of a sequence with a *finite* sequence.
/// The result is again rational: `sum_j p_j x^j U(x^(j+1))`.
pub fn dirichlet_product(u: &GfSeq, p: &FiniteSeq) -> GfSeq {
    let mut acc = RatFun::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = u.gf.substitute_power(j + 1).shift_up(j).scale(c);
        acc = &acc + &term;
    }
    GfSeq { gf: acc }
}
