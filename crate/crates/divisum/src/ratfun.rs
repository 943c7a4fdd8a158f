//! Rational functions over the rationals, kept in a canonical reduced form,
//! plus the two expansions the summation engine needs: power-series
//! coefficients at the origin and truncated Laurent expansions at `x = 1`.
//!
//! Canonical form: numerator and denominator coprime, denominator monic,
//! the zero function stored as `0/1`.  With that, structural equality is
//! equality of functions, and two sequences have equal generating functions
//! exactly when they are the same sequence.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::rational::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RatFunError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("denominator vanishes at 0: not a power series")]
    NotAPowerSeries,
    #[error("pole at the evaluation point")]
    PoleAtPoint,
    #[error("the zero function has no vanishing order")]
    ZeroFunction,
}

/// Reduced rational function `num / den`.  Canonical scaling: the lowest
/// nonzero denominator coefficient is 1, so power-series denominators read
/// the way they are written (`1 - x`, `1 - 2*x + x^2`, ...).
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Reduce to canonical form; the only failure is a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let num = num.divrem(&g).unwrap().0;
        let den = den.divrem(&g).unwrap().0;
        let low = den.coeff(den.valuation().unwrap());
        Ok(RatFun {
            num: num.scale(&(Rat::one() / &low)),
            den: den.scale(&(Rat::one() / &low)),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        // scaling the numerator cannot break coprimality or monicity
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Quotient rule, reduced.
    pub fn derivative(&self) -> RatFun {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFun::new(num, den).unwrap()
    }

    /// Substitute `x -> x^m` for `m >= 1`.  Reducedness survives without
    /// a fresh reduction: coprime polynomials share no root, so their
    /// stretches share none, and stretching moves the lowest denominator
    /// coefficient without changing it.  (Skipping the gcd matters — on
    /// coprime inputs the Euclidean algorithm runs all the way down.)
    pub fn substitute_power(&self, m: usize) -> RatFun {
        RatFun {
            num: self.num.stretch(m),
            den: self.den.stretch(m),
        }
    }

    /// Substitute `x -> -x`.  A ring automorphism, so reducedness is
    /// kept; only the sign of the lowest denominator coefficient can
    /// drift, when its degree is odd.
    pub fn alternate(&self) -> RatFun {
        let num = self.num.alternate();
        let den = self.den.alternate();
        match den.valuation() {
            Some(v) if v % 2 == 1 => RatFun {
                num: num.scale(&-Rat::one()),
                den: den.scale(&-Rat::one()),
            },
            _ => RatFun { num, den },
        }
    }

    /// Multiply by `x^k`: cancels directly against any factor of `x` in
    /// the denominator, so no reduction pass is needed.
    pub fn shift_up(&self, k: usize) -> RatFun {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let cancel = k.min(self.den.valuation().unwrap());
        RatFun {
            num: self.num.shift_up(k - cancel),
            den: self.den.shift_down(cancel),
        }
    }

    /// Exact value at a point where the denominator does not vanish.
    pub fn eval(&self, x: &Rat) -> Result<Rat, RatFunError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(RatFunError::PoleAtPoint);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Order of vanishing at `point`: the multiplicity of `point` as a zero
    /// of the numerator minus its multiplicity in the denominator.  Negative
    /// values are pole orders.  Undefined (error) for the zero function.
    pub fn vanishing_order(&self, point: &Rat) -> Result<i64, RatFunError> {
        if self.is_zero() {
            return Err(RatFunError::ZeroFunction);
        }
        let up = self.num.root_multiplicity(point) as i64;
        let down = self.den.root_multiplicity(point) as i64;
        // reduced form: at most one of the two is nonzero
        debug_assert!(up == 0 || down == 0);
        Ok(up - down)
    }

    /// First `count` coefficients of the Laurent expansion around `x = 1`,
    /// starting at the vanishing order.  Computed by substituting
    /// `x = 1 - t` and dividing truncated power series in `t` exactly.
    /// Each part is only expanded `count` places past its own vanishing
    /// order — the tail of a full composition would be thrown away by the
    /// series division anyway.
    pub fn laurent_at_one(&self, count: usize) -> Result<LaurentSlice, RatFunError> {
        assert!(count >= 1, "requested an empty Laurent slice");
        if self.is_zero() {
            return Err(RatFunError::ZeroFunction);
        }
        let one = Rat::one();
        let a = self.num.root_multiplicity(&one);
        let b = self.den.root_multiplicity(&one);
        // `alternate` turns the expansion in x - 1 into one in t = 1 - x
        let nt = self.num.taylor_at_one(a + count).alternate();
        let dt = self.den.taylor_at_one(b + count).alternate();
        debug_assert_eq!((nt.valuation(), dt.valuation()), (Some(a), Some(b)));
        let coeffs = series_divide(&nt.shift_down(a), &dt.shift_down(b), count);
        Ok(LaurentSlice {
            base_order: a as i64 - b as i64,
            coeffs,
        })
    }

    /// First `n` power-series coefficients at the origin; requires a
    /// nonvanishing denominator constant term.
    pub fn power_series_coeffs(&self, n: usize) -> Result<Vec<Rat>, RatFunError> {
        if self.den.coeff(0).is_zero() {
            return Err(RatFunError::NotAPowerSeries);
        }
        Ok(series_divide(&self.num, &self.den, n))
    }
}

/// Truncated quotient of power series: `d` must have a nonzero constant
/// term; returns the first `count` coefficients of `n / d`.
fn series_divide(n: &Poly, d: &Poly, count: usize) -> Vec<Rat> {
    let d0 = d.coeff(0);
    debug_assert!(!d0.is_zero());
    let mut q: Vec<Rat> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = n.coeff(k);
        for i in 1..=k.min(d.degree().unwrap_or(0)) {
            acc -= d.coeff(i) * &q[k - i];
        }
        q.push(acc / &d0);
    }
    q
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({} / {})", self.num, self.den)
    }
}

/// A window of a Laurent expansion: coefficients of
/// `t^base_order, t^(base_order+1), ...` where `t = 1 - x`.  The first
/// coefficient is nonzero by construction (the expansion starts at the
/// vanishing order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSlice {
    base_order: i64,
    coeffs: Vec<Rat>,
}

impl LaurentSlice {
    pub fn base_order(&self) -> i64 {
        self.base_order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^order`, if it falls inside the computed window.
    /// Orders below the base are genuinely zero; orders past the window are
    /// unknown and yield `None`.
    pub fn coeff_at(&self, order: i64) -> Option<Rat> {
        if order < self.base_order {
            return Some(Rat::zero());
        }
        let idx = usize::try_from(order - self.base_order).ok()?;
        self.coeffs.get(idx).cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn normalization() {
        // (2 - 2x^2) / (2 - 4x + 2x^2) reduces to (1 + x) / (1 - x)
        let f = rf(&[2, 0, -2], &[2, -4, 2]);
        assert_eq!(f.num(), &Poly::from_ints(&[1, 1]));
        assert_eq!(f.den(), &Poly::from_ints(&[1, -1]));
        assert_eq!(f.eval(&int(0)).unwrap(), int(1));

        assert_eq!(rf(&[0], &[5, 3]), RatFun::zero());
        assert!(RatFun::new(Poly::one(), Poly::zero()).is_err());
        // equal functions, equal representations
        assert_eq!(rf(&[1, 1], &[1, -1]), rf(&[3, 3], &[3, -3]));
    }

    #[test]
    fn arithmetic() {
        let a = rf(&[1], &[1, -1]); // 1/(1-x)
        let b = rf(&[1], &[1, 1]); // 1/(1+x)
        assert_eq!(&a * &b, rf(&[1], &[1, 0, -1]));
        assert_eq!(&a + &b, rf(&[2], &[1, 0, -1]));
        assert_eq!(&a - &a, RatFun::zero());
        // d/dx 1/(1-x) = 1/(1-x)^2
        assert_eq!(a.derivative(), rf(&[1], &[1, -2, 1]));
        assert_eq!(a.substitute_power(3), rf(&[1], &[1, 0, 0, -1]));
        assert_eq!(a.alternate(), b);
    }

    #[test]
    fn evaluation_and_poles() {
        let f = rf(&[1], &[1, -1]);
        assert_eq!(f.eval(&rat(1, 2)).unwrap(), int(2));
        assert_eq!(f.eval(&int(1)), Err(RatFunError::PoleAtPoint));
        assert_eq!(f.vanishing_order(&int(1)).unwrap(), -1);
        assert_eq!(f.vanishing_order(&int(0)).unwrap(), 0);

        let g = rf(&[0, 0, 3], &[1, -2, 1]); // 3x^2/(1-x)^2
        assert_eq!(g.vanishing_order(&int(0)).unwrap(), 2);
        assert_eq!(g.vanishing_order(&int(1)).unwrap(), -2);
        assert_eq!(RatFun::zero().vanishing_order(&int(1)), Err(RatFunError::ZeroFunction));
    }

    #[test]
    fn power_series() {
        let f = rf(&[1], &[1, -1, -1]); // Fibonacci-ish: 1/(1-x-x^2)
        assert_eq!(
            f.power_series_coeffs(6).unwrap(),
            vec![int(1), int(1), int(2), int(3), int(5), int(8)]
        );
        let g = rf(&[0, 1], &[1, 1]); // x/(1+x)
        assert_eq!(
            g.power_series_coeffs(5).unwrap(),
            vec![int(0), int(1), int(-1), int(1), int(-1)]
        );
        let h = RatFun {
            num: Poly::one(),
            den: Poly::x(),
        };
        assert_eq!(h.power_series_coeffs(3), Err(RatFunError::NotAPowerSeries));
    }

    // Frozen oracle values, worked by hand via x = 1 - t:
    //   1/(1 - x^2)  =  1/(t(2-t))        -> (1/2) t^-1 + 1/4 + ...
    //   x/(1 + x)    =  (1-t)/(2-t)       ->  1/2 - (1/4) t + ...
    //   x/(1 - x)^2  =  (1-t)/t^2         ->  t^-2 - t^-1
    #[test]
    fn laurent_at_one_frozen_values() {
        let f = rf(&[1], &[1, 0, -1]);
        let s = f.laurent_at_one(2).unwrap();
        assert_eq!(s.base_order(), -1);
        assert_eq!(s.coeffs(), &[rat(1, 2), rat(1, 4)]);

        let g = rf(&[0, 1], &[1, 1]);
        let s = g.laurent_at_one(2).unwrap();
        assert_eq!(s.base_order(), 0);
        assert_eq!(s.coeffs(), &[rat(1, 2), rat(-1, 4)]);

        let h = rf(&[0, 1], &[1, -2, 1]);
        let s = h.laurent_at_one(3).unwrap();
        assert_eq!(s.base_order(), -2);
        assert_eq!(s.coeffs(), &[int(1), int(-1), int(0)]);
        assert_eq!(s.coeff_at(-3), Some(int(0)));
        assert_eq!(s.coeff_at(-2), Some(int(1)));
        assert_eq!(s.coeff_at(1), None);

        // a zero of positive order: (1-x)^2 / (1+x) at 1 is t^2 / (2-t)
        let z = rf(&[1, -2, 1], &[1, 1]);
        let s = z.laurent_at_one(2).unwrap();
        assert_eq!(s.base_order(), 2);
        assert_eq!(s.coeffs(), &[rat(1, 2), rat(1, 4)]);

        assert_eq!(RatFun::zero().laurent_at_one(1), Err(RatFunError::ZeroFunction));
    }

    fn arb_ratfun() -> impl Strategy<Value = RatFun> {
        let coeffs = || proptest::collection::vec(-5i64..6, 0..5);
        (coeffs(), coeffs()).prop_filter_map("zero denominator", |(n, d)| {
            let den = Poly::from_ints(&d);
            if den.is_zero() {
                None
            } else {
                Some(RatFun::new(Poly::from_ints(&n), den).unwrap())
            }
        })
    }

    proptest! {
        #[test]
        fn canonical_invariants(f in arb_ratfun()) {
            if f.is_zero() {
                prop_assert!(f.den().is_one());
            } else {
                prop_assert!(f.num().gcd(f.den()).is_one());
                let low = f.den().valuation().unwrap();
                prop_assert!(f.den().coeff(low).is_one());
            }
        }

        #[test]
        fn field_ops_agree_with_eval(f in arb_ratfun(), g in arb_ratfun(), p in -9i64..10) {
            let x = int(p);
            if let (Ok(fv), Ok(gv)) = (f.eval(&x), g.eval(&x)) {
                // the sum/product may cancel a pole, never create one at x
                prop_assert_eq!((&f + &g).eval(&x).unwrap(), &fv + &gv);
                prop_assert_eq!((&f * &g).eval(&x).unwrap(), &fv * &gv);
                prop_assert_eq!((&f - &g).eval(&x).unwrap(), &fv - &gv);
            }
        }

        // multiplying Laurent slices matches the slice of the product
        #[test]
        fn laurent_is_multiplicative(f in arb_ratfun(), g in arb_ratfun()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let h = &f * &g;
            prop_assume!(!h.is_zero());
            let n = 4usize;
            let sf = f.laurent_at_one(n).unwrap();
            let sg = g.laurent_at_one(n).unwrap();
            let sh = h.laurent_at_one(n).unwrap();
            prop_assert_eq!(sh.base_order(), sf.base_order() + sg.base_order());
            for k in 0..n {
                let mut acc = Rat::zero();
                for i in 0..=k {
                    acc += &sf.coeffs()[i] * &sg.coeffs()[k - i];
                }
                prop_assert_eq!(&acc, &sh.coeffs()[k]);
            }
        }

        // the power-series coefficients really expand num/den
        #[test]
        fn series_times_den_is_num(f in arb_ratfun()) {
            prop_assume!(!f.den().coeff(0).is_zero());
            let n = 8usize;
            let cs = f.power_series_coeffs(n).unwrap();
            let series = Poly::from_coeffs(cs);
            let prod = &series * f.den();
            for k in 0..n {
                prop_assert_eq!(prod.coeff(k), f.num().coeff(k));
            }
        }
    }
}
