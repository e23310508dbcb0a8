//! The norm exponent p, with exact tags for the endpoints 1 and infinity.
//!
//! A finite exponent carries its conjugate q = p/(p-1) from construction, so
//! `dual` is an exact involution: it swaps the stored pair instead of
//! recomputing the quotient.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Smallest accepted finite exponent. Values closer to 1 make |v|^(p-1)
/// numerically useless long before they make it interesting.
pub const MIN_FINITE: f64 = 1.0 + 1e-6;
/// Largest accepted finite exponent.
pub const MAX_FINITE: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Repr {
    One,
    Finite { p: f64, q: f64 },
    Inf,
}

/// A validated norm exponent: p = 1, p = infinity, or p in (1, infinity).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponent {
    repr: Repr,
}

impl Exponent {
    /// The exact tag p = 1.
    pub const ONE: Exponent = Exponent { repr: Repr::One };
    /// The exact tag p = infinity.
    pub const INF: Exponent = Exponent { repr: Repr::Inf };
    /// p = 2, the self-dual exponent.
    pub const TWO: Exponent = Exponent {
        repr: Repr::Finite { p: 2.0, q: 2.0 },
    };

    /// A finite exponent in (1, infinity). Rejects values outside
    /// [1+1e-6, 1e6] where the power formulas degrade.
    pub fn finite(p: f64) -> Result<Exponent> {
        if !p.is_finite() || !(MIN_FINITE..=MAX_FINITE).contains(&p) {
            return Err(Error::ExponentOutOfRange(p));
        }
        Ok(Exponent {
            repr: Repr::Finite { p, q: p / (p - 1.0) },
        })
    }

    /// The conjugate exponent: q = p/(p-1), with 1 and infinity swapped.
    /// `e.dual().dual() == e` exactly.
    pub fn dual(self) -> Exponent {
        let repr = match self.repr {
            Repr::One => Repr::Inf,
            Repr::Inf => Repr::One,
            Repr::Finite { p, q } => Repr::Finite { p: q, q: p },
        };
        Exponent { repr }
    }

    pub fn is_one(self) -> bool {
        self.repr == Repr::One
    }

    pub fn is_inf(self) -> bool {
        self.repr == Repr::Inf
    }

    pub fn is_two(self) -> bool {
        matches!(self.repr, Repr::Finite { p, .. } if p == 2.0)
    }

    /// The finite value of p, or None for the 1/infinity tags.
    pub fn finite_value(self) -> Option<f64> {
        match self.repr {
            Repr::Finite { p, .. } => Some(p),
            _ => None,
        }
    }

    /// The finite value of the conjugate q, or None for the tags.
    pub fn dual_value(self) -> Option<f64> {
        match self.repr {
            Repr::Finite { q, .. } => Some(q),
            _ => None,
        }
    }

    /// True for exponents where the duality mapping is single-valued,
    /// i.e. p strictly between 1 and infinity.
    pub fn is_smooth(self) -> bool {
        matches!(self.repr, Repr::Finite { .. })
    }

    /// The finite p, or an error naming the operation that needs it.
    pub(crate) fn require_smooth(self) -> Result<f64> {
        self.finite_value()
            .ok_or_else(|| Error::DualityUndefined(self.to_string()))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.repr {
            Repr::One => write!(f, "1"),
            Repr::Inf => write!(f, "inf"),
            Repr::Finite { p, .. } => write!(f, "{p}"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    /// Accepts "1", "inf" (case-insensitive), or a decimal in (1, 1e6].
    fn from_str(s: &str) -> Result<Exponent> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Exponent::INF);
        }
        let v: f64 = t.parse().map_err(|_| Error::ExponentOutOfRange(f64::NAN))?;
        if v == 1.0 {
            return Ok(Exponent::ONE);
        }
        Exponent::finite(v)
    }
}
