//! divisum — exact generalized sums for divergent series.
//!
//! The objects of study are sequences with *rational generating functions*:
//! `u = (u_0, u_1, u_2, ...)` such that `sum u_k x^k = N(x) / D(x)` with
//! `N, D` polynomials over the rationals and `D(0) != 0`.  For such a
//! sequence the engine decides, exactly and with a machine-checkable
//! certificate, which of these tiers it falls into:
//!
//! 1. absolutely convergent — the ordinary sum exists (all poles of the
//!    generating function lie strictly outside the closed unit disk);
//! 2. summable in the Cauchy-product extension — some finite sequence `m`
//!    with nonzero coefficient sum has `m (x) u` finite, which forces the
//!    generalized sum `sigma(u) = sigma(m (x) u) / sigma(m)`;
//! 3. summable in the Dirichlet-product extension — a finite `p` with
//!    `sigma(p) != 0` makes `u (*) p` land in tier 2, forcing
//!    `sigma(u) = sigma(u (*) p) / sigma(p)`;
//! 4. provably not in tier 2 (a witness is produced), with no tier-3
//!    certificate found within the search bound.
//!
//! Here `(x)` is the Cauchy product (coefficient-wise convolution) and
//! `(*)` the index-multiplicative product with `e_i (*) e_j = e_k` where
//! `k + 1 = (i + 1)(j + 1)`.  Both extensions assign `1 + 2 + 3 + ... =
//! -1/12` and friends, entirely within rational arithmetic: no limits, no
//! analytic continuation, and every verdict ships a certificate that
//! [`engine::verify_certificate`] can replay independently.
//!
//! Quick start:
//!
//! ```
//! use divisum::engine::{classify, Classification};
//! use divisum::seq::powers;
//!
//! // 1 + 2 + 3 + 4 + ...
//! let u = powers(1);
//! match classify(&u) {
//!     Classification::DirichletExtSummable { value, .. } => {
//!         assert_eq!(value.to_string(), "-1/12");
//!     }
//!     other => panic!("unexpected verdict: {other}"),
//! }
//! ```
//!
//! The `examples/` directory is the guided tour: each file exercises one
//! capability (summing the integers, certificates and witnesses, the zeta
//! values at negative integers, the expression language, the floating-point
//! cross-check, ...).  A thin `divisum` binary exposes the same engine as a
//! command-line tool; see [`cli`].

pub mod rational;

pub mod poly;

pub mod ratfun;

pub mod numbers;

pub mod seq;

pub mod engine;

pub mod dsl;

pub mod oracle;

pub mod cli;

pub use rational::{rat, Int, Rat};
pub use seq::{FiniteSeq, GfSeq};
