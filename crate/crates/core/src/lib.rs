//! Exact q-series toolkit for rank-type generating functions of unimodal
//! sequences.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`], [`zeta`], [`series`], [`laurent`], [`product`], [`prefixed`]:
//!   truncated power series over exact coefficient rings, lazy Pochhammer
//!   products, and fractional prefactors.
//! * [`enumerators`]: exhaustive generation of the combinatorial objects.
//! * [`gf`]: builders for every named generating function, plus theta, eta,
//!   μ and Appell functions.
//! * [`identities`]: the verification catalog.
//! * [`parity`]: mod-2 coefficients and the norm-form predicate.
//! * [`asymptotics`]: growth, monotonicity and limit diagnostics.

pub mod asymptotics;
pub mod enumerators;
pub mod error;
pub mod gf;
pub mod identities;
pub mod laurent;
pub mod parity;
pub mod prefixed;
pub mod product;
pub mod ring;
pub mod series;
pub mod zeta;

pub use error::{Error, Result};
pub use laurent::QLaurent;
pub use prefixed::PrefixedSeries;
pub use product::{FactorProduct, Monomial, PochLength};
pub use ring::{Mod2, Ring};
pub use series::{Series, ZSeries};
pub use zeta::ZetaLaurent;
