//! The summation engine: decides summability tier by tier and produces
//! certificates that stand on their own.
//!
//! For a sequence `u` with reduced generating function `N/D`:
//!
//! * **Cauchy tier.**  `u` is summable in the Cauchy-product extension
//!   exactly when `D(1) != 0`, and then `sigma(u) = N(1)/D(1)`.  The
//!   certificate is constructive: taking `m` = the coefficients of `D`
//!   gives `m (x) u` = the coefficients of `N` (finite!), with
//!   `sigma(m) = D(1) != 0` — so any consistent summation assigning finite
//!   sequences their ordinary sums *must* give `u` the value
//!   `sigma(N)/sigma(m)`.  When instead `D(1) = 0`, the very same pair
//!   is a *witness of non-membership*: `sigma(m) = 0` but
//!   `sigma(m (x) u) = N(1) != 0`, which no consistent value for `u` can
//!   survive.  (If `u` had a sum, multiplying by `m` would force
//!   `0 * sigma(u) = N(1) != 0`.)
//!
//! * **Dirichlet tier.**  A pole at 1 of order `r` can still cancel in the
//!   index-multiplicative product: we search for a finite `p` with
//!   `sigma(p) != 0` such that `u (*) p` has no pole at 1.  Since
//!   `gf(u (*) p) = sum_j p_j x^j U(x^(j+1))`, killing the pole is a
//!   finite homogeneous linear condition on the `p_j`: the Laurent
//!   coefficients of orders `-r .. -1` at `x = 1` must all vanish.  Exact
//!   linear algebra over the rationals either produces `p` or proves there
//!   is none with the allowed support.  The sum is then forced:
//!   `sigma(u) = sigma(u (*) p) / sigma(p)`, and the theory guarantees the
//!   value does not depend on which `p` was found.
//!
//! * **Absolute convergence** is decided exactly, too: `u` converges
//!   absolutely iff all roots of `D` lie strictly outside the closed unit
//!   disk, which a Schur–Cohn sign count settles in rational arithmetic.
//!
//! Every certificate can be replayed by [`verify_certificate`] using only
//! sequence operations — no trust in the search code is required.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::rational::{sign, Rat};
#[cfg(test)]
use crate::ratfun::RatFun;
use crate::seq::{cauchy_product, dirichlet_product, FiniteSeq, GfSeq};

/// Default bound on the support of Dirichlet-tier certificates: the search
/// considers multipliers `p` supported on `e_0 .. e_J` for `J` up to this.
/// Covers every sequence in the standard zoo (the power sequences need
/// support 1) with room to spare.
pub const DEFAULT_MAX_SUPPORT: usize = 8;

/// Proof that `u` is summable in the Cauchy-product extension:
/// `multiplier (x) u = product` is finitely supported and
/// `sigma(multiplier) != 0`, forcing
/// `sigma(u) = sigma(product) / sigma(multiplier)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CauchyCertificate {
    pub multiplier: FiniteSeq,
    pub product: FiniteSeq,
}

impl CauchyCertificate {
    /// Replay the certificate against `u`.
    pub fn verify(&self, u: &GfSeq) -> bool {
        !self.multiplier.coefficient_sum().is_zero()
            && cauchy_product(&GfSeq::from(&self.multiplier), u) == GfSeq::from(&self.product)
    }

    /// The value the certificate forces.
    pub fn forced_value(&self) -> Rat {
        self.product.coefficient_sum() / self.multiplier.coefficient_sum()
    }
}

/// Proof that `u` is *not* summable in the Cauchy-product extension:
/// `multiplier (x) u = product` is finite, `sigma(multiplier) = 0`, yet
/// `sigma(product) != 0`.  Any value for `u` consistent with finite sums
/// would have to satisfy `0 = sigma(product)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonMembershipWitness {
    pub multiplier: FiniteSeq,
    pub product: FiniteSeq,
}

impl NonMembershipWitness {
    pub fn verify(&self, u: &GfSeq) -> bool {
        self.multiplier.coefficient_sum().is_zero()
            && !self.product.coefficient_sum().is_zero()
            && cauchy_product(&GfSeq::from(&self.multiplier), u) == GfSeq::from(&self.product)
    }
}

/// Proof of summability in the Dirichlet-product extension:
/// `u (*) factor = transformed` is Cauchy-summable (certified by `inner`)
/// and `sigma(factor) != 0`, forcing
/// `sigma(u) = sigma(transformed) / sigma(factor)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCertificate {
    pub factor: FiniteSeq,
    pub transformed: GfSeq,
    pub inner: CauchyCertificate,
}

impl DirichletCertificate {
    pub fn verify(&self, u: &GfSeq) -> bool {
        !self.factor.coefficient_sum().is_zero()
            && dirichlet_product(u, &self.factor) == self.transformed
            && self.inner.verify(&self.transformed)
    }

    pub fn forced_value(&self) -> Rat {
        self.inner.forced_value() / self.factor.coefficient_sum()
    }
}

/// Any of the three certificate kinds, for uniform verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Cauchy(CauchyCertificate),
    Dirichlet(DirichletCertificate),
    NonMembership(NonMembershipWitness),
}

/// Replay a certificate against a sequence using only sequence operations.
pub fn verify_certificate(u: &GfSeq, certificate: &Certificate) -> bool {
    match certificate {
        Certificate::Cauchy(c) => c.verify(u),
        Certificate::Dirichlet(c) => c.verify(u),
        Certificate::NonMembership(w) => w.verify(u),
    }
}

/// Outcome of the Cauchy-tier decision; one of the two is always produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CauchySummation {
    Summable {
        value: Rat,
        certificate: CauchyCertificate,
    },
    NotSummable {
        witness: NonMembershipWitness,
    },
}

/// Decide the Cauchy tier.  Total: every rational-generating-function
/// sequence either gets a value with a certificate or a witness.
pub fn sum_cauchy_ext(u: &GfSeq) -> CauchySummation {
    let multiplier = FiniteSeq::from_poly(u.gf().den());
    let product = FiniteSeq::from_poly(u.gf().num());
    let denom_at_one = multiplier.coefficient_sum();
    if denom_at_one.is_zero() {
        CauchySummation::NotSummable {
            witness: NonMembershipWitness { multiplier, product },
        }
    } else {
        CauchySummation::Summable {
            value: product.coefficient_sum() / denom_at_one,
            certificate: CauchyCertificate { multiplier, product },
        }
    }
}

/// Search for a finite `p` (support within `e_0 .. e_max_support`, nonzero
/// coefficient sum) cancelling the pole of `u` at 1 in `u (*) p`.
/// Deterministic: smallest support first, then the first nullspace basis
/// vector with nonzero sum, scaled so its first nonzero entry is 1.
///
/// Precondition: `u` actually has a pole at 1.
pub fn solve_pole_cancellation(u: &GfSeq, max_support: usize) -> Option<FiniteSeq> {
    let order = u
        .gf()
        .vanishing_order(&Rat::one())
        .expect("pole-cancellation search needs a nonzero sequence");
    assert!(order < 0, "sequence has no pole at 1; the Cauchy tier already decides it");
    let r = usize::try_from(-order).unwrap();

    // Laurent data of the building blocks x^j U(x^(j+1)); each has the
    // same pole order r at 1, and column j holds its coefficients of
    // orders -r .. -1.
    let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(max_support + 1);
    for j in 1..=max_support {
        while columns.len() <= j {
            let k = columns.len();
            let block = u.gf().substitute_power(k + 1).shift_up(k);
            let slice = block.laurent_at_one(r).expect("blocks of a nonzero sequence are nonzero");
            debug_assert_eq!(slice.base_order(), order);
            columns.push(slice.coeffs().to_vec());
        }
        let rows: Vec<Vec<Rat>> = (0..r)
            .map(|t| columns.iter().map(|col| col[t].clone()).collect())
            .collect();
        for vector in nullspace(rows) {
            let sum: Rat = vector.iter().fold(Rat::zero(), |acc, c| acc + c);
            if sum.is_zero() {
                continue;
            }
            let lead = vector.iter().find(|c| !c.is_zero()).unwrap().clone();
            let scaled = vector.into_iter().map(|c| c / &lead).collect();
            return Some(FiniteSeq::from_coeffs(scaled));
        }
    }
    None
}

/// The Dirichlet-tier search ran out of allowed support without finding a
/// cancelling multiplier.  Not a proof of non-summability — only that no
/// certificate exists with support up to the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no Dirichlet-tier certificate with support up to e_{max_support}")]
pub struct SearchExhausted {
    pub max_support: usize,
}

/// Decide the Dirichlet tier: either the sequence is already
/// Cauchy-summable (factor `e_0`), or a pole-cancelling factor is searched
/// for within the support bound.
pub fn sum_dirichlet_ext(u: &GfSeq, max_support: usize) -> Result<(Rat, DirichletCertificate), SearchExhausted> {
    if let CauchySummation::Summable { value, certificate } = sum_cauchy_ext(u) {
        return Ok((
            value,
            DirichletCertificate {
                factor: FiniteSeq::basis(0),
                transformed: u.clone(),
                inner: certificate,
            },
        ));
    }
    let factor = solve_pole_cancellation(u, max_support).ok_or(SearchExhausted { max_support })?;
    let transformed = dirichlet_product(u, &factor);
    match sum_cauchy_ext(&transformed) {
        CauchySummation::Summable { value, certificate } => Ok((
            value / factor.coefficient_sum(),
            DirichletCertificate {
                factor,
                transformed,
                inner: certificate,
            },
        )),
        CauchySummation::NotSummable { .. } => {
            unreachable!("the cancelled product has no pole at 1, so its denominator sum is nonzero")
        }
    }
}

/// Where a sequence sits in the summability hierarchy.  Ordered from
/// strongest to weakest claim; each value-bearing variant carries the
/// certificate that forces the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// The series converges absolutely; the generalized sum is the
    /// ordinary sum.  (All denominator roots strictly outside the closed
    /// unit disk.)
    AbsolutelyConvergent { value: Rat },
    /// Not absolutely convergent, but summable in the Cauchy-product
    /// extension.
    CauchyExtSummable {
        value: Rat,
        certificate: CauchyCertificate,
    },
    /// Provably outside the Cauchy-product extension, but summable in the
    /// Dirichlet-product extension.
    DirichletExtSummable {
        value: Rat,
        certificate: DirichletCertificate,
        cauchy_witness: NonMembershipWitness,
    },
    /// Provably outside the Cauchy-product extension, and the
    /// Dirichlet-tier search found nothing within the support bound.
    NotCauchySummable {
        witness: NonMembershipWitness,
        searched_support: usize,
    },
    /// The root-location test hit a degenerate case, so the
    /// absolute-convergence question is left open; the summability verdict
    /// (with its certificate and value) is still exact.
    ConvergenceUndetermined { verdict: Box<Classification> },
}

impl Classification {
    /// The generalized sum, when one is forced.
    pub fn value(&self) -> Option<&Rat> {
        match self {
            Classification::AbsolutelyConvergent { value } => Some(value),
            Classification::CauchyExtSummable { value, .. } => Some(value),
            Classification::DirichletExtSummable { value, .. } => Some(value),
            Classification::NotCauchySummable { .. } => None,
            Classification::ConvergenceUndetermined { verdict } => verdict.value(),
        }
    }

    /// Stable machine-readable tag (also the JSON value).
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::AbsolutelyConvergent { .. } => "absolutely_convergent",
            Classification::CauchyExtSummable { .. } => "cauchy_ext_summable",
            Classification::DirichletExtSummable { .. } => "dirichlet_ext_summable",
            Classification::NotCauchySummable { .. } => "not_cauchy_summable",
            Classification::ConvergenceUndetermined { .. } => "convergence_undetermined",
        }
    }

    /// The certificate backing the verdict, if any.
    pub fn certificate(&self) -> Option<Certificate> {
        match self {
            Classification::AbsolutelyConvergent { .. } => None,
            Classification::CauchyExtSummable { certificate, .. } => {
                Some(Certificate::Cauchy(certificate.clone()))
            }
            Classification::DirichletExtSummable { certificate, .. } => {
                Some(Certificate::Dirichlet(certificate.clone()))
            }
            Classification::NotCauchySummable { witness, .. } => {
                Some(Certificate::NonMembership(witness.clone()))
            }
            Classification::ConvergenceUndetermined { verdict } => verdict.certificate(),
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::format_rat;
        match self {
            Classification::AbsolutelyConvergent { value } => {
                write!(f, "absolutely convergent; sum = {}", format_rat(value))
            }
            Classification::CauchyExtSummable { value, .. } => write!(
                f,
                "summable in the Cauchy-product extension; sum = {}",
                format_rat(value)
            ),
            Classification::DirichletExtSummable { value, .. } => write!(
                f,
                "summable in the Dirichlet-product extension; sum = {}",
                format_rat(value)
            ),
            Classification::NotCauchySummable { searched_support, .. } => write!(
                f,
                "provably not Cauchy-summable; no Dirichlet certificate with support <= {searched_support}"
            ),
            Classification::ConvergenceUndetermined { verdict } => {
                write!(f, "convergence undetermined (degenerate root test); {verdict}")
            }
        }
    }
}

/// Classify with the default Dirichlet-tier support bound.
pub fn classify(u: &GfSeq) -> Classification {
    classify_with_support(u, DEFAULT_MAX_SUPPORT)
}

pub fn classify_with_support(u: &GfSeq, max_support: usize) -> Classification {
    match sum_cauchy_ext(u) {
        CauchySummation::Summable { value, certificate } => match unit_disk_status(u.gf().den()) {
            RootLocation::AllOutside => Classification::AbsolutelyConvergent { value },
            RootLocation::NotAllOutside => Classification::CauchyExtSummable { value, certificate },
            RootLocation::Degenerate => Classification::ConvergenceUndetermined {
                verdict: Box::new(Classification::CauchyExtSummable { value, certificate }),
            },
        },
        CauchySummation::NotSummable { witness } => match sum_dirichlet_ext(u, max_support) {
            Ok((value, certificate)) => Classification::DirichletExtSummable {
                value,
                certificate,
                cauchy_witness: witness,
            },
            Err(SearchExhausted { max_support }) => Classification::NotCauchySummable {
                witness,
                searched_support: max_support,
            },
        },
    }
}

/// Where the roots of `den` sit relative to the closed unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RootLocation {
    /// All roots strictly outside — the coefficient sequence decays
    /// geometrically, absolute convergence.
    AllOutside,
    /// At least one root on or inside the closed disk.
    NotAllOutside,
    /// The sign test degenerated (some reduced polynomial vanished at 0
    /// past the first step); no verdict.
    Degenerate,
}

/// Schur–Cohn sign count.  Let `R` be the coefficient reversal of `den`;
/// roots of `den` outside the closed disk correspond to roots of `R`
/// strictly inside the open disk.  The classical reduction
/// `f -> a_0 f - a_d f*` (with `f*` the reversal of `f`) yields constants
/// `gamma_k = f_k(0)`; with `p_k = gamma_1 ... gamma_k`, the number of
/// roots of `R` strictly inside equals the number of negative `p_k`.  So
/// `den` has all roots strictly outside iff all `d` of the `p_k` are
/// negative.  A vanishing `gamma_1` is still decisive: it says the product
/// of the root moduli of `R` is exactly 1, so not all of them can be
/// strictly inside.  A vanishing `gamma_k` for `k >= 2` leaves the count
/// undefined and we report the degeneracy instead of guessing.
fn unit_disk_status(den: &Poly) -> RootLocation {
    let d = den.degree().expect("denominator of a reduced function is nonzero");
    if d == 0 {
        return RootLocation::AllOutside;
    }
    let mut f: Vec<Rat> = den.coeffs().iter().rev().cloned().collect();
    let mut negatives = 0usize;
    let mut product_sign = 1i32;
    for k in 1..=d {
        let a0 = f[0].clone();
        let ad = f[f.len() - 1].clone();
        let next: Vec<Rat> = (0..f.len() - 1)
            .map(|i| &a0 * &f[i] - &ad * &f[f.len() - 1 - i])
            .collect();
        let gamma = next[0].clone();
        match sign(&gamma) {
            0 => {
                return if k == 1 {
                    RootLocation::NotAllOutside
                } else {
                    RootLocation::Degenerate
                };
            }
            s => product_sign *= s,
        }
        if product_sign < 0 {
            negatives += 1;
        }
        f = next;
    }
    if negatives == d {
        RootLocation::AllOutside
    } else {
        RootLocation::NotAllOutside
    }
}

/// One forced-value inference, for human-readable replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationStep {
    /// `multiplier (x) sequence = product`, so
    /// `sigma(sequence) = sigma(product) / sigma(multiplier)`.
    Cauchy {
        sequence: GfSeq,
        multiplier: FiniteSeq,
        product: FiniteSeq,
        value: Rat,
    },
    /// `sequence (*) factor = transformed`, so
    /// `sigma(sequence) = sigma(transformed) / sigma(factor)`.
    Dirichlet {
        sequence: GfSeq,
        factor: FiniteSeq,
        transformed: GfSeq,
        transformed_value: Rat,
        value: Rat,
    },
}

impl DerivationStep {
    /// Re-derive the step's identity and value from scratch; the
    /// verification path used by tests and the CLI.
    pub fn replay(&self) -> bool {
        match self {
            DerivationStep::Cauchy {
                sequence,
                multiplier,
                product,
                value,
            } => {
                let cert = CauchyCertificate {
                    multiplier: multiplier.clone(),
                    product: product.clone(),
                };
                cert.verify(sequence) && &cert.forced_value() == value
            }
            DerivationStep::Dirichlet {
                sequence,
                factor,
                transformed,
                transformed_value,
                value,
            } => {
                let sp = factor.coefficient_sum();
                !sp.is_zero()
                    && &dirichlet_product(sequence, factor) == transformed
                    && value == &(transformed_value / sp)
            }
        }
    }
}

/// A chain of forced-value steps ending at the sequence of interest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub steps: Vec<DerivationStep>,
    pub value: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExplainError {
    #[error("{0}")]
    NotSummable(Classification),
}

/// Produce the step-by-step derivation of the generalized sum, or the
/// not-summable classification if there is no value to derive.
pub fn explain(u: &GfSeq) -> Result<Derivation, ExplainError> {
    explain_with_support(u, DEFAULT_MAX_SUPPORT)
}

pub fn explain_with_support(u: &GfSeq, max_support: usize) -> Result<Derivation, ExplainError> {
    match sum_cauchy_ext(u) {
        CauchySummation::Summable { value, certificate } => Ok(Derivation {
            steps: vec![DerivationStep::Cauchy {
                sequence: u.clone(),
                multiplier: certificate.multiplier,
                product: certificate.product,
                value: value.clone(),
            }],
            value,
        }),
        CauchySummation::NotSummable { witness } => match sum_dirichlet_ext(u, max_support) {
            Ok((value, certificate)) => {
                let inner_value = certificate.inner.forced_value();
                Ok(Derivation {
                    steps: vec![
                        DerivationStep::Cauchy {
                            sequence: certificate.transformed.clone(),
                            multiplier: certificate.inner.multiplier,
                            product: certificate.inner.product,
                            value: inner_value.clone(),
                        },
                        DerivationStep::Dirichlet {
                            sequence: u.clone(),
                            factor: certificate.factor,
                            transformed: certificate.transformed,
                            transformed_value: inner_value,
                            value: value.clone(),
                        },
                    ],
                    value,
                })
            }
            Err(SearchExhausted { max_support }) => {
                Err(ExplainError::NotSummable(Classification::NotCauchySummable {
                    witness,
                    searched_support: max_support,
                }))
            }
        },
    }
}

/// Exact nullspace basis of a rational matrix (rows x columns), by
/// Gauss–Jordan elimination.  One basis vector per free column, ordered by
/// column index, each with a 1 in its free position.
fn nullspace(mut rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let width = rows[0].len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..width {
        let Some(p) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let lead = rows[row][col].clone();
        for c in rows[row].iter_mut() {
            *c /= &lead;
        }
        for i in 0..rows.len() {
            if i != row && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for c in col..width {
                    let t = &rows[row][c] * &factor;
                    rows[i][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); width];
        v[free] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -rows[i][free].clone();
        }
        basis.push(v);
    }
    basis
}
