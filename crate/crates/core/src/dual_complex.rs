//! Dual-complex numbers `z₁ + ε·z₂` over a generic coefficient ring.
//!
//! With `z₁ = x₁ + i·x₂` and `z₂ = y₁ + i·y₂` an element is stored as the four
//! coefficients of the basis `{1, i, ε, iε}`. Multiplication follows
//!
//! ```text
//!   ×  |  1    i    ε    iε
//! -----+--------------------
//!   1  |  1    i    ε    iε
//!   i  |  i   -1    iε   -ε
//!   ε  |  ε    iε   0    0
//!   iε |  iε  -ε    0    0
//! ```
//!
//! so `(z₁ + εz₂)(z₃ + εz₄) = z₁z₃ + ε(z₁z₄ + z₂z₃)`. The algebra is
//! commutative, and every element with `z₁ = 0` is a zero divisor.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rings::Ring;

/// Element `re + im·i + du·ε + imdu·iε`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DualComplex<R> {
    pub re: R,
    pub im: R,
    pub du: R,
    pub imdu: R,
}

/// The five conjugations of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConjKind {
    /// Complex conjugation `z₁* + εz₂*`.
    C1,
    /// Dual conjugation `z₁ - εz₂`.
    C2,
    /// Coupled conjugation `z₁* - εz₂*`.
    C3,
    /// Dual-complex conjugation `z₁*·(1 - ε·z₂/z₁)`; needs `z₁` invertible.
    C4,
    /// Anti-dual conjugation `z₂ - εz₁`.
    C5,
}

impl ConjKind {
    pub const ALL: [ConjKind; 5] = [
        ConjKind::C1,
        ConjKind::C2,
        ConjKind::C3,
        ConjKind::C4,
        ConjKind::C5,
    ];
}

type Cx<R> = (R, R);

fn cmul<R: Ring>((a, b): &Cx<R>, (c, d): &Cx<R>) -> Cx<R> {
    (
        a.clone() * c.clone() - b.clone() * d.clone(),
        a.clone() * d.clone() + b.clone() * c.clone(),
    )
}

fn cinv<R: Ring>((a, b): &Cx<R>) -> Option<Cx<R>> {
    let k = (a.clone() * a.clone() + b.clone() * b.clone()).checked_inv()?;
    Some((a.clone() * k.clone(), -(b.clone() * k)))
}

fn csub<R: Ring>((a, b): Cx<R>, (c, d): Cx<R>) -> Cx<R> {
    (a - c, b - d)
}

impl<R> DualComplex<R> {
    pub const fn new(re: R, im: R, du: R, imdu: R) -> Self {
        DualComplex { re, im, du, imdu }
    }

    pub fn components(&self) -> [&R; 4] {
        [&self.re, &self.im, &self.du, &self.imdu]
    }

    pub fn into_array(self) -> [R; 4] {
        [self.re, self.im, self.du, self.imdu]
    }

    pub fn map<S>(self, mut f: impl FnMut(R) -> S) -> DualComplex<S> {
        DualComplex::new(f(self.re), f(self.im), f(self.du), f(self.imdu))
    }

    /// Components rendered with `Display`, in basis order.
    pub fn to_strings(&self) -> [String; 4]
    where
        R: fmt::Display,
    {
        self.components().map(|c| c.to_string())
    }
}

impl<R: Ring> DualComplex<R> {
    pub fn from_scalar(x: R) -> Self {
        DualComplex::new(x, R::zero(), R::zero(), R::zero())
    }

    pub fn from_parts(z1: Cx<R>, z2: Cx<R>) -> Self {
        DualComplex::new(z1.0, z1.1, z2.0, z2.1)
    }

    pub fn i() -> Self {
        DualComplex::new(R::zero(), R::one(), R::zero(), R::zero())
    }

    pub fn eps() -> Self {
        DualComplex::new(R::zero(), R::zero(), R::one(), R::zero())
    }

    pub fn i_eps() -> Self {
        DualComplex::new(R::zero(), R::zero(), R::zero(), R::one())
    }

    /// The complex part `z₁ = (re, im)`.
    pub fn complex_part(&self) -> Cx<R> {
        (self.re.clone(), self.im.clone())
    }

    /// The dual part `z₂ = (du, imdu)`.
    pub fn dual_part(&self) -> Cx<R> {
        (self.du.clone(), self.imdu.clone())
    }

    pub fn scale(&self, k: &R) -> Self {
        self.clone().map(|c| c * k.clone())
    }

    pub fn conj(&self, kind: ConjKind) -> Result<Self> {
        let DualComplex { re, im, du, imdu } = self.clone();
        Ok(match kind {
            ConjKind::C1 => DualComplex::new(re, -im, du, -imdu),
            ConjKind::C2 => DualComplex::new(re, im, -du, -imdu),
            ConjKind::C3 => DualComplex::new(re, -im, -du, imdu),
            ConjKind::C5 => DualComplex::new(du, imdu, -re, -im),
            ConjKind::C4 => {
                let z1 = self.complex_part();
                let inv = cinv(&z1).ok_or(Error::NonInvertible(
                    "complex part has no inverse in the coefficient ring",
                ))?;
                let z1c = (re, -im);
                let t = cmul(&cmul(&z1c, &self.dual_part()), &inv);
                DualComplex::from_parts(z1c, (-t.0, -t.1))
            }
        })
    }

    /// The squared norm `w × w^{*kind}`, kept as an exact dual-complex value.
    ///
    /// For `*4` the product collapses to `|z₁|²`, which lies in the
    /// coefficient ring even when `z₁` has no inverse there; only `z₁ = 0`
    /// is rejected.
    pub fn norm_sq(&self, kind: ConjKind) -> Result<Self> {
        if kind == ConjKind::C4 {
            if self.re.is_zero() && self.im.is_zero() {
                return Err(Error::NonInvertible("complex part is zero"));
            }
            let m = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
            return Ok(DualComplex::from_scalar(m));
        }
        Ok(self.clone() * self.conj(kind)?)
    }

    /// `w₁ / w₂ = z₁/z₃ + ε·(z₂z₃ - z₁z₄)/z₃²`; requires `z₃` invertible.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let z3 = rhs.complex_part();
        let inv = cinv(&z3).ok_or(Error::NonInvertible(
            "divisor has no invertible complex part",
        ))?;
        let (z1, z2, z4) = (self.complex_part(), self.dual_part(), rhs.dual_part());
        let head = cmul(&z1, &inv);
        let num = csub(cmul(&z2, &z3), cmul(&z1, &z4));
        let tail = cmul(&num, &cmul(&inv, &inv));
        Ok(DualComplex::from_parts(head, tail))
    }

    pub fn inv(&self) -> Result<Self> {
        DualComplex::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(DualComplex::one(), |acc, _| acc * self.clone())
    }
}

impl<R: Ring> Add for DualComplex<R> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        DualComplex::new(
            self.re + rhs.re,
            self.im + rhs.im,
            self.du + rhs.du,
            self.imdu + rhs.imdu,
        )
    }
}

impl<R: Ring> Sub for DualComplex<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        DualComplex::new(
            self.re - rhs.re,
            self.im - rhs.im,
            self.du - rhs.du,
            self.imdu - rhs.imdu,
        )
    }
}

impl<R: Ring> Neg for DualComplex<R> {
    type Output = Self;

    fn neg(self) -> Self {
        self.map(|c| -c)
    }
}

impl<R: Ring> Mul for DualComplex<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (x1, x2, y1, y2) = (self.re, self.im, self.du, self.imdu);
        let (a1, a2, b1, b2) = (rhs.re, rhs.im, rhs.du, rhs.imdu);
        let re = x1.clone() * a1.clone() - x2.clone() * a2.clone();
        let im = x1.clone() * a2.clone() + x2.clone() * a1.clone();
        let du = x1.clone() * b1.clone() - x2.clone() * b2.clone() + y1.clone() * a1.clone()
            - y2.clone() * a2.clone();
        let imdu = x1 * b2 + x2 * b1 + y1 * a2 + y2 * a1;
        DualComplex::new(re, im, du, imdu)
    }
}

macro_rules! forward_ref_binop {
    ($($tr:ident $m:ident),*) => {$(
        impl<'a, R: Ring> $tr<&'a DualComplex<R>> for &'a DualComplex<R> {
            type Output = DualComplex<R>;

            fn $m(self, rhs: &'a DualComplex<R>) -> DualComplex<R> {
                $tr::$m(self.clone(), rhs.clone())
            }
        }
    )*};
}

forward_ref_binop!(Add add, Sub sub, Mul mul);

impl<R: Ring> Zero for DualComplex<R> {
    fn zero() -> Self {
        DualComplex::new(R::zero(), R::zero(), R::zero(), R::zero())
    }

    fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }
}

impl<R: Ring> One for DualComplex<R> {
    fn one() -> Self {
        DualComplex::from_scalar(R::one())
    }
}

impl<R: Ring> Ring for DualComplex<R> {
    fn checked_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl<R: fmt::Display> fmt::Display for DualComplex<R> {
    /// `a + b·i + c·eps + d·i·eps`, folding a leading minus into the operator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.to_strings();
        f.write_str(&a)?;
        for (s, unit) in [(b, "i"), (c, "eps"), (d, "i·eps")] {
            if s.contains(' ') {
                write!(f, " + ({s})·{unit}")?;
            } else if let Some(abs) = s.strip_prefix('-') {
                write!(f, " - {abs}·{unit}")?;
            } else {
                write!(f, " + {s}·{unit}")?;
            }
        }
        Ok(())
    }
}
