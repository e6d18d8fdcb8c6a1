//! Builders for the named generating functions.
//!
//! Every two-variable series is produced with ζ formal; ζ = 1 values come
//! from [`ZSeries::at_zeta_one`]. The modular objects (η, ϑ, μ, Appell) are
//! returned as [`PrefixedSeries`].

pub mod bilateral;
pub mod jacobi;
pub mod rank;

use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::prefixed::PrefixedSeries;
use crate::series::ZSeries;
use jacobi::JacobiArg;
use rank::ZetaPair;

/// Stable public identifiers of the buildable series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedSeriesKey {
    /// `1/(q;q)_∞`
    P,
    /// `U(1;q)`
    U,
    /// `U(ζ;q)`
    Uzeta,
    /// `R(ζ;q)`
    R,
    /// `R̄(ζ;q)`
    Rbar,
    /// `R̄2(ζ;q)`
    Rbar2,
    /// `R2(ζ;q)`
    R2,
    /// `Ū(ζ;q)`
    Ubar,
    /// `Ū2(ζ;q)`
    Ubar2,
    /// `U2(ζ;q)`
    U2,
    /// `Ū(ζ;-q)`
    UbarNeg,
    /// `Ū2(ζ;-q)`, the generating function of `ū2(m,n)`
    Ubar2Neg,
    /// `U2(ζ;-q)`, the generating function of `u2(m,n)`
    U2Neg,
    /// `η(τ)`
    Eta,
    /// `ϑ(z;τ)`
    Theta,
    /// `2μ(z + 1/2 + τ, 1/2; 2τ)`
    Mu,
    /// `A_2(z + 1/2 + τ, 1/2 + τ; 2τ)`
    Appell,
}

impl NamedSeriesKey {
    pub const ALL: [NamedSeriesKey; 17] = [
        Self::P,
        Self::U,
        Self::Uzeta,
        Self::R,
        Self::Rbar,
        Self::Rbar2,
        Self::R2,
        Self::Ubar,
        Self::Ubar2,
        Self::U2,
        Self::UbarNeg,
        Self::Ubar2Neg,
        Self::U2Neg,
        Self::Eta,
        Self::Theta,
        Self::Mu,
        Self::Appell,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::P => "P",
            Self::U => "U",
            Self::Uzeta => "Uzeta",
            Self::R => "R",
            Self::Rbar => "Rbar",
            Self::Rbar2 => "Rbar2",
            Self::R2 => "R2",
            Self::Ubar => "Ubar",
            Self::Ubar2 => "Ubar2",
            Self::U2 => "U2",
            Self::UbarNeg => "Ubar-q",
            Self::Ubar2Neg => "Ubar2-q",
            Self::U2Neg => "U2-q",
            Self::Eta => "eta",
            Self::Theta => "theta",
            Self::Mu => "mu",
            Self::Appell => "appell",
        }
    }

    /// True for keys whose value carries a fractional prefactor.
    pub fn is_prefixed(&self) -> bool {
        matches!(self, Self::Eta | Self::Theta | Self::Mu | Self::Appell)
    }
}

impl fmt::Display for NamedSeriesKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedSeriesKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

/// Result of [`build`].
#[derive(Clone, Debug, PartialEq)]
pub enum Built {
    Series(ZSeries),
    Prefixed(PrefixedSeries),
}

impl Built {
    pub fn as_series(&self) -> Option<&ZSeries> {
        match self {
            Built::Series(s) => Some(s),
            Built::Prefixed(_) => None,
        }
    }

    pub fn as_prefixed(&self) -> Option<&PrefixedSeries> {
        match self {
            Built::Prefixed(p) => Some(p),
            Built::Series(_) => None,
        }
    }

    /// The ζ-refined series; prefixed values are given by their normalized body.
    pub fn refined_body(&self) -> Result<ZSeries> {
        match self {
            Built::Series(s) => Ok(s.clone()),
            Built::Prefixed(p) => {
                let n = p.normalized();
                let top = n.top().max(0) as usize;
                n.body.to_series(top)
            }
        }
    }

    pub fn to_json(&self, key: NamedSeriesKey, order: usize, refined: bool) -> Result<Value> {
        let mut out = serde_json::Map::new();
        out.insert("series".into(), Value::String(key.name().into()));
        out.insert("order".into(), Value::from(order));
        if let Built::Prefixed(p) = self {
            let n = p.normalized();
            let mut prefix = serde_json::Map::new();
            prefix.insert("i_power".into(), Value::from(n.unit));
            prefix.insert("zeta_half".into(), Value::from(n.zeta_half));
            prefix.insert("q_24th".into(), Value::from(n.q24));
            out.insert("prefix".into(), Value::Object(prefix));
        }
        let body = self.refined_body()?;
        let coeffs = if refined { body.to_json_refined() } else { body.at_zeta_one().to_json() };
        out.insert("coefficients".into(), coeffs);
        Ok(Value::Object(out))
    }
}

/// Builds `key` through `q^order`.
///
/// Outer sums stop once the summand's lowest possible power of q exceeds
/// `order`: `q^n` for U, Ū, Ū2 (`q^{2n}`), U2 (`q^{2n}`); `q^{n²}` for R and
/// R2; `q^{n(n+1)/2}` for R̄; `q^n` for R̄2. Each bound is asserted on the
/// expanded summand.
pub fn build(key: NamedSeriesKey, order: usize) -> Result<Built> {
    let z = ZetaPair::formal();
    let top = order as i64;
    let s = match key {
        NamedSeriesKey::P => rank::partitions(order),
        NamedSeriesKey::U => rank::strongly_unimodal(&ZetaPair::unit(), order)?.to_zeta(),
        NamedSeriesKey::Uzeta => rank::strongly_unimodal(&z, order)?,
        NamedSeriesKey::R => rank::partition_rank(&z, order)?,
        NamedSeriesKey::Rbar => rank::overpartition_rank(&z, order)?,
        NamedSeriesKey::Rbar2 => rank::overpartition_m2_rank(&z, order)?,
        NamedSeriesKey::R2 => rank::odd_distinct_m2_rank(&z, order)?,
        NamedSeriesKey::Ubar => rank::left_heavy(&z, order)?,
        NamedSeriesKey::Ubar2 => rank::m2_left_heavy_overlined(&z, order)?,
        NamedSeriesKey::U2 => rank::m2_left_heavy(&z, order)?,
        NamedSeriesKey::UbarNeg => rank::left_heavy(&z, order)?.negate_q(),
        NamedSeriesKey::Ubar2Neg => rank::m2_left_heavy_overlined(&z, order)?.negate_q(),
        NamedSeriesKey::U2Neg => rank::m2_left_heavy(&z, order)?.negate_q(),
        NamedSeriesKey::Eta => return Ok(Built::Prefixed(jacobi::eta(1, top)?)),
        NamedSeriesKey::Theta => return Ok(Built::Prefixed(jacobi::theta_product(JacobiArg::z(), 1, top)?)),
        NamedSeriesKey::Mu => {
            let (_, v) = jacobi::mu_scaled(JacobiArg::new(1, 1, 1), JacobiArg::new(0, 0, 1), 2, top)?;
            return Ok(Built::Prefixed(v));
        }
        NamedSeriesKey::Appell => {
            let v = jacobi::appell(2, JacobiArg::new(1, 1, 1), JacobiArg::new(0, 1, 1), 2, top)?;
            return Ok(Built::Prefixed(v));
        }
    };
    Ok(Built::Series(s))
}

/// Convenience: builds a key that is a plain ζ-series.
pub fn build_series(key: NamedSeriesKey, order: usize) -> Result<ZSeries> {
    match build(key, order)? {
        Built::Series(s) => Ok(s),
        Built::Prefixed(_) => Err(Error::Domain(format!("{key} carries a fractional prefactor"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn keys_round_trip() {
        for k in NamedSeriesKey::ALL {
            assert_eq!(k.name().parse::<NamedSeriesKey>().unwrap(), k);
        }
        assert!(matches!("Q".parse::<NamedSeriesKey>(), Err(Error::UnknownSeries(_))));
    }

    #[test]
    fn golden_coefficients() {
        let ub = build_series(NamedSeriesKey::Ubar, 40).unwrap().at_zeta_one();
        assert_eq!(ub.coefficient(3).unwrap(), &BigInt::from(3));
        let u2 = build_series(NamedSeriesKey::U2Neg, 40).unwrap().at_zeta_one();
        assert_eq!(u2.coefficient(6).unwrap(), &BigInt::from(5));
        let p = build_series(NamedSeriesKey::P, 10).unwrap().at_zeta_one();
        let expect: Vec<BigInt> = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42].iter().map(|&v| v.into()).collect();
        assert_eq!(p.coeffs(), &expect[..]);
    }

    #[test]
    fn rank_series_are_conjugation_symmetric() {
        for k in NamedSeriesKey::ALL.iter().filter(|k| !k.is_prefixed()) {
            assert!(build_series(*k, 40).unwrap().is_conjugation_symmetric(), "{k}");
        }
    }

    #[test]
    fn m2_series_in_minus_q_are_nonnegative() {
        for k in [NamedSeriesKey::Ubar2Neg, NamedSeriesKey::U2Neg] {
            let s = build_series(k, 40).unwrap();
            assert!(s.coeffs().iter().all(|c| c.is_nonnegative()), "{k}");
        }
    }

    #[test]
    fn eq_1_2_three_pieces() {
        // (1+ζ)(1+ζ⁻¹)U(ζ;q) = -R(-ζ;q) + (1+ζ⁻¹)/(q;q)_∞ Σ ζ^n q^{n(n+1)/2}/(1+ζ⁻¹q^n)
        use crate::zeta::ZetaLaurent;
        let n = 40;
        let u = build_series(NamedSeriesKey::Uzeta, n).unwrap();
        let lhs = u.scale_zeta(&ZetaLaurent::from_terms([(-1, 1), (0, 2), (1, 1)]));
        let r = build_series(NamedSeriesKey::R, n).unwrap().negate_zeta();
        let spec = bilateral::BilateralSpec {
            alternating: false,
            quad2: 1,
            lin2: 1,
            zeta_step: 1,
            pole_sign: -1,
            pole_zeta: -1,
            pole_step: 1,
            pole_shift: 0,
        };
        // the cleared kernel already carries the factor 1 + ζ⁻¹
        let lambert = spec.expand_cleared(n).unwrap();
        let p = build_series(NamedSeriesKey::P, n).unwrap();
        let rhs = lambert.mul(&p).unwrap().sub(&r).unwrap();
        assert_eq!(lhs, rhs);
    }
}
