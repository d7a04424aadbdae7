//! Exact Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! [`RankPoly`] stores a coefficient vector together with the exponent of its
//! first entry, so shifted and signed difference polynomials are first-class
//! values. Rank polynomials proper (those produced by counting order ideals)
//! have offset 0 and nonnegative coefficients, but the verifiers in this crate
//! routinely subtract them, so everything is kept signed.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Laurent polynomial over the integers, kept in canonical form: either the
/// zero polynomial (empty coefficients, offset 0) or a vector whose first and
/// last entries are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RankPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl RankPoly {
    pub fn zero() -> Self {
        RankPoly::default()
    }

    pub fn one() -> Self {
        RankPoly::monomial(0)
    }

    /// The monomial q^k with coefficient 1.
    pub fn monomial(k: i64) -> Self {
        RankPoly {
            offset: k,
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from the coefficient of q^offset upward,
    /// trimming zero fringes into canonical form.
    pub fn from_coeffs(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = RankPoly { offset, coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from small integers, starting at q^0.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        RankPoly::from_coeffs(0, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the first nonzero coefficient (0 for the zero polynomial).
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Exponent of the last nonzero coefficient.
    pub fn degree(&self) -> i64 {
        self.offset + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        if k < self.offset {
            return BigInt::zero();
        }
        self.coeffs
            .get((k - self.offset) as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient sequence starting at q^0. Returns `None` when the
    /// polynomial has negative exponents.
    pub fn dense(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        if self.offset < 0 {
            return None;
        }
        let mut v = vec![BigInt::zero(); self.offset as usize];
        v.extend_from_slice(&self.coeffs);
        Some(v)
    }

    /// Dense sequence as i64s, for comparisons against small fixtures.
    pub fn dense_i64(&self) -> Option<Vec<i64>> {
        self.dense()?
            .iter()
            .map(|c| i64::try_from(c).ok())
            .collect()
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return RankPoly::zero();
        }
        RankPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Maps the coefficient of q^k to q^{total-k}; reflection about total/2.
    pub fn reversed(&self, total: i64) -> Self {
        if self.is_zero() {
            return RankPoly::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        RankPoly {
            offset: total - self.degree(),
            coeffs,
        }
    }

    /// True when the polynomial equals its reflection about total/2. The
    /// center may be half-integral; `total` is twice the center.
    pub fn is_symmetric_about(&self, total: i64) -> bool {
        *self == self.reversed(total)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Pointwise `self[k] <= other[k]` over every exponent.
    pub fn dominated_by(&self, other: &RankPoly) -> bool {
        (other - self).all_nonnegative()
    }

    /// First exponent where the two polynomials differ, if any.
    pub fn first_mismatch(&self, other: &RankPoly) -> Option<(i64, BigInt, BigInt)> {
        let d = self - other;
        if d.is_zero() {
            None
        } else {
            let k = d.offset();
            Some((k, self.coeff(k), other.coeff(k)))
        }
    }
}

/// The q-integer [n] = 1 + q + ... + q^{n-1}; empty for n = 0.
pub fn q_int(n: u32) -> RankPoly {
    RankPoly::from_coeffs(0, vec![BigInt::one(); n as usize])
}

fn add_impl(a: &RankPoly, b: &RankPoly, negate_b: bool) -> RankPoly {
    if b.is_zero() {
        return a.clone();
    }
    let offset = if a.is_zero() {
        b.offset
    } else {
        a.offset.min(b.offset)
    };
    let end = a.degree().max(b.degree());
    let mut coeffs = vec![BigInt::zero(); (end - offset + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.offset - offset) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.offset - offset) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    RankPoly::from_coeffs(offset, coeffs)
}

impl Add for &RankPoly {
    type Output = RankPoly;
    fn add(self, rhs: &RankPoly) -> RankPoly {
        add_impl(self, rhs, false)
    }
}

impl Sub for &RankPoly {
    type Output = RankPoly;
    fn sub(self, rhs: &RankPoly) -> RankPoly {
        add_impl(self, rhs, true)
    }
}

impl Mul for &RankPoly {
    type Output = RankPoly;
    fn mul(self, rhs: &RankPoly) -> RankPoly {
        if self.is_zero() || rhs.is_zero() {
            return RankPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RankPoly::from_coeffs(self.offset + rhs.offset, coeffs)
    }
}

impl fmt::Display for RankPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.offset + i as i64;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RankPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    offset: i64,
    coeffs: Vec<String>,
}

impl Serialize for RankPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyWire {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RankPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = PolyWire::deserialize(deserializer)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RankPoly::from_coeffs(wire.offset, coeffs))
    }
}

/// A polynomial in z with z^2 = q, used where half-integer q-exponents occur.
///
/// Converts losslessly back to a [`RankPoly`] in q exactly when every odd
/// z-exponent carries a zero coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfExpPoly(RankPoly);

impl HalfExpPoly {
    /// Lifts a polynomial in q to one in z by doubling every exponent.
    pub fn from_q(p: &RankPoly) -> Self {
        if p.is_zero() {
            return HalfExpPoly(RankPoly::zero());
        }
        let mut coeffs = Vec::with_capacity(p.coeffs.len() * 2 - 1);
        for (i, c) in p.coeffs.iter().enumerate() {
            if i > 0 {
                coeffs.push(BigInt::zero());
            }
            coeffs.push(c.clone());
        }
        HalfExpPoly(RankPoly::from_coeffs(p.offset * 2, coeffs))
    }

    /// The monomial z^k = q^{k/2}.
    pub fn z_monomial(k: i64) -> Self {
        HalfExpPoly(RankPoly::monomial(k))
    }

    pub fn as_z_poly(&self) -> &RankPoly {
        &self.0
    }

    pub fn mul(&self, rhs: &HalfExpPoly) -> HalfExpPoly {
        HalfExpPoly(&self.0 * &rhs.0)
    }

    pub fn add(&self, rhs: &HalfExpPoly) -> HalfExpPoly {
        HalfExpPoly(&self.0 + &rhs.0)
    }

    pub fn sub(&self, rhs: &HalfExpPoly) -> HalfExpPoly {
        HalfExpPoly(&self.0 - &rhs.0)
    }

    pub fn scale(&self, c: &BigInt) -> HalfExpPoly {
        let coeffs = self.0.coeffs.iter().map(|x| x * c).collect();
        HalfExpPoly(RankPoly::from_coeffs(self.0.offset, coeffs))
    }

    /// Divides every coefficient by `d`, failing if any is not divisible.
    pub fn exact_div_scalar(&self, d: &BigInt) -> Option<HalfExpPoly> {
        let mut coeffs = Vec::with_capacity(self.0.coeffs.len());
        for c in &self.0.coeffs {
            if !(c % d).is_zero() {
                return None;
            }
            coeffs.push(c / d);
        }
        Some(HalfExpPoly(RankPoly::from_coeffs(self.0.offset, coeffs)))
    }

    /// Folds z back to q. Fails when a nonzero coefficient sits on an odd
    /// z-exponent (a genuinely half-integral term).
    pub fn try_into_q(&self) -> Result<RankPoly, HalfExpError> {
        if self.0.is_zero() {
            return Ok(RankPoly::zero());
        }
        let start = if self.0.offset.rem_euclid(2) == 0 {
            self.0.offset
        } else {
            self.0.offset + 1
        };
        let mut coeffs = Vec::new();
        for (i, c) in self.0.coeffs.iter().enumerate() {
            let k = self.0.offset + i as i64;
            if k.rem_euclid(2) == 1 {
                if !c.is_zero() {
                    return Err(HalfExpError {
                        z_exponent: k,
                        coeff: c.to_string(),
                    });
                }
            } else {
                coeffs.push(c.clone());
            }
        }
        Ok(RankPoly::from_coeffs(start / 2, coeffs))
    }
}

/// A residual half-integer exponent left after a conversion back to q.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("residual half-exponent q^{{{z_exponent}/2}} with coefficient {coeff}")]
pub struct HalfExpError {
    pub z_exponent: i64,
    pub coeff: String,
}
