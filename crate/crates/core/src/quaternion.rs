//! Dual-complex Pell and Pell-Lucas quaternions.
//!
//! `Q_P(n) = P(n) + i·P(n+1) + ε·P(n+2) + iε·P(n+3)`, and likewise `Q_PL(n)`
//! with Pell-Lucas numbers. Any integer index is accepted; negative indices
//! use the backward extension of the sequences.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::dual_complex::DualComplex;
use crate::error::{Error, Result};
use crate::rings::{QuadRat, Ring};
use crate::sequences::{seq_at, SeqKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Pell,
    PellLucas,
}

impl Family {
    pub fn seq_kind(self) -> SeqKind {
        match self {
            Family::Pell => SeqKind::Pell,
            Family::PellLucas => SeqKind::PellLucas,
        }
    }

    pub fn name(self) -> &'static str {
        self.seq_kind().name()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "pell" => Ok(Family::Pell),
            "pell-lucas" => Ok(Family::PellLucas),
            other => Err(format!("unknown quaternion family `{other}`")),
        }
    }
}

/// A quaternion built from four consecutive terms of a Pell-family sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DCPellQuat {
    value: DualComplex<BigInt>,
    index: i64,
    family: Family,
}

impl DCPellQuat {
    pub fn new(family: Family, index: i64) -> Self {
        let kind = family.seq_kind();
        let a = seq_at(kind, index);
        let b = seq_at(kind, index + 1);
        let c = (&b << 1) + &a;
        let d = (&c << 1) + &b;
        DCPellQuat {
            value: DualComplex::new(a, b, c, d),
            index,
            family,
        }
    }

    pub fn value(&self) -> &DualComplex<BigInt> {
        &self.value
    }

    pub fn into_value(self) -> DualComplex<BigInt> {
        self.value
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The real coefficient, `P(n)` or `Q(n)`.
    pub fn scalar_part(&self) -> BigInt {
        self.value.re.clone()
    }

    /// Everything but the real coefficient.
    pub fn vector_part(&self) -> DualComplex<BigInt> {
        let mut v = self.value.clone();
        v.re = BigInt::zero();
        v
    }

    pub fn to_json(&self) -> QuatJson {
        QuatJson {
            family: self.family,
            n: self.index,
            components: self.value.to_strings(),
        }
    }
}

impl fmt::Display for DCPellQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

/// JSON form `{"family": .., "n": .., "components": [re, im, du, imdu]}`
/// with the components as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuatJson {
    pub family: Family,
    pub n: i64,
    pub components: [String; 4],
}

/// The Pell quaternion `Q_P(n)`.
pub fn qp(n: i64) -> DCPellQuat {
    DCPellQuat::new(Family::Pell, n)
}

/// The Pell-Lucas quaternion `Q_PL(n)`.
pub fn qpl(n: i64) -> DCPellQuat {
    DCPellQuat::new(Family::PellLucas, n)
}

/// `1 + i·x + ε·x² + iε·x³`, the coefficient attached to a root in the
/// closed form.
fn root_weight(x: &QuadRat) -> Result<DualComplex<QuadRat>> {
    Ok(DualComplex::new(
        QuadRat::from_ints(1, 0),
        x.clone(),
        x.pow(2)?,
        x.pow(3)?,
    ))
}

/// Evaluates `(α̂·αⁿ - β̂·βⁿ) / (α - β)` exactly in ℚ(√2) and checks that
/// every component lands on an integer.
pub fn binet_qp(n: i64) -> Result<DCPellQuat> {
    let (alpha, beta) = (QuadRat::alpha(), QuadRat::beta());
    let lhs = root_weight(&alpha)?.scale(&alpha.pow(n)?);
    let rhs = root_weight(&beta)?.scale(&beta.pow(n)?);
    let denom = (alpha - beta).inv()?;
    let q = (lhs - rhs).scale(&denom);

    const NAMES: [&str; 4] = ["re", "im", "du", "imdu"];
    let mut ints = Vec::with_capacity(4);
    for (c, name) in q.components().into_iter().zip(NAMES) {
        ints.push(c.to_integer().ok_or_else(|| Error::NonIntegral {
            n,
            component: name,
            value: c.to_string(),
        })?);
    }
    let [a, b, c, d]: [BigInt; 4] = ints.try_into().expect("four components");
    Ok(DCPellQuat {
        value: DualComplex::new(a, b, c, d),
        index: n,
        family: Family::Pell,
    })
}

fn accumulate(indices: impl Iterator<Item = i64>) -> DualComplex<BigInt> {
    indices.fold(DualComplex::zero(), |acc, k| acc + qp(k).into_value())
}

/// `Σ_{s=1}^{n} Q_P(s)` by direct accumulation.
pub fn sum_qp_first(n: u32) -> DualComplex<BigInt> {
    accumulate(1..=i64::from(n))
}

/// `Σ_{s=0}^{p} Q_P(n+s)` by direct accumulation.
pub fn sum_qp_window(n: i64, p: u32) -> DualComplex<BigInt> {
    accumulate((0..=i64::from(p)).map(|s| n + s))
}

/// `Σ_{s=1}^{n} Q_P(2s-1)`.
pub fn sum_qp_odd(n: u32) -> DualComplex<BigInt> {
    accumulate((1..=i64::from(n)).map(|s| 2 * s - 1))
}

/// `Σ_{s=1}^{n} Q_P(2s)`.
pub fn sum_qp_even(n: u32) -> DualComplex<BigInt> {
    accumulate((1..=i64::from(n)).map(|s| 2 * s))
}

/// Lifts an integer quaternion into any coefficient ring containing ℤ.
pub fn lift<R: Ring + From<BigInt>>(w: DualComplex<BigInt>) -> DualComplex<R> {
    w.map(R::from)
}
