//! Pell-family integer sequences.
//!
//! All three sequences share the recurrence `x(n) = 2·x(n-1) + x(n-2)` and
//! differ only in their seeds:
//!
//! | kind           | x(0) | x(1) |
//! |----------------|------|------|
//! | `Pell`         | 0    | 1    |
//! | `PellLucas`    | 2    | 2    |
//! | `ModifiedPell` | 1    | 1    |
//!
//! Negative indices extend the recurrence backwards, which gives
//! `P(-n) = (-1)^(n+1) P(n)` and `Q(-n) = (-1)^n Q(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqKind {
    Pell,
    PellLucas,
    ModifiedPell,
}

impl SeqKind {
    pub const ALL: [SeqKind; 3] = [SeqKind::Pell, SeqKind::PellLucas, SeqKind::ModifiedPell];

    /// Values at indices 0 and 1.
    pub fn seeds(self) -> (BigInt, BigInt) {
        match self {
            SeqKind::Pell => (BigInt::zero(), BigInt::one()),
            SeqKind::PellLucas => (BigInt::from(2), BigInt::from(2)),
            SeqKind::ModifiedPell => (BigInt::one(), BigInt::one()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeqKind::Pell => "pell",
            SeqKind::PellLucas => "pell-lucas",
            SeqKind::ModifiedPell => "modified-pell",
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "pell" => Ok(SeqKind::Pell),
            "pell-lucas" => Ok(SeqKind::PellLucas),
            "modified-pell" => Ok(SeqKind::ModifiedPell),
            other => Err(format!("unknown sequence kind `{other}`")),
        }
    }
}

/// Pell pair `(P(n), P(n+1))` by fast doubling:
/// `P(2k) = 2·P(k)·(P(k+1) - P(k))`, `P(2k+1) = P(k)² + P(k+1)²`.
fn pell_pair(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if n == 0 {
        return (a, b);
    }
    let top = 63 - n.leading_zeros();
    for bit in (0..=top).rev() {
        let even = (&a << 1) * (&b - &a);
        let odd = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = (&odd << 1) + &even;
            a = odd;
        } else {
            a = even;
            b = odd;
        }
    }
    (a, b)
}

/// Returns `(x(n), x(n+1))` using `O(log n)` big-integer multiplications.
pub fn seq_pair_fast(kind: SeqKind, n: u64) -> (BigInt, BigInt) {
    let (p, p1) = pell_pair(n);
    match kind {
        SeqKind::Pell => (p, p1),
        // Q(n) = P(n+1) + P(n-1) = 2·(P(n+1) - P(n)), Q(n+1) = 2·(P(n+1) + P(n)).
        SeqKind::PellLucas => ((&p1 - &p) << 1, (p1 + p) << 1),
        SeqKind::ModifiedPell => (&p1 - &p, p1 + p),
    }
}

/// Exact value of the sequence at any signed index.
pub fn seq_at(kind: SeqKind, n: i64) -> BigInt {
    let (v, _) = seq_pair_fast(kind, n.unsigned_abs());
    if n >= 0 {
        return v;
    }
    let odd = n.unsigned_abs() % 2 == 1;
    let negate = match kind {
        SeqKind::Pell => !odd,
        SeqKind::PellLucas | SeqKind::ModifiedPell => odd,
    };
    if negate {
        -v
    } else {
        v
    }
}

/// Reference evaluation by stepping the recurrence one index at a time,
/// forwards for `n >= 0` and backwards (`x(k-2) = x(k) - 2·x(k-1)`) for `n < 0`.
pub fn seq_iterative(kind: SeqKind, n: i64) -> BigInt {
    let (mut a, mut b) = kind.seeds();
    if n >= 0 {
        for _ in 0..n {
            let next = (&b << 1) + &a;
            a = std::mem::replace(&mut b, next);
        }
        a
    } else {
        // (a, b) = (x(k), x(k+1)); walk k down to n.
        for _ in 0..n.unsigned_abs() {
            let prev = &b - (&a << 1);
            b = std::mem::replace(&mut a, prev);
        }
        a
    }
}

/// Values at `lo..=hi`.
pub fn seq_range(kind: SeqKind, lo: i64, hi: i64) -> Result<Vec<BigInt>> {
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let len = usize::try_from(hi.abs_diff(lo)).map_err(|_| Error::InvalidRange { lo, hi })? + 1;
    let mut out = Vec::with_capacity(len);
    let mut a = seq_at(kind, lo);
    let mut b = seq_at(kind, lo + 1);
    for _ in 0..len {
        let next = (&b << 1) + &a;
        out.push(std::mem::replace(&mut a, std::mem::replace(&mut b, next)));
    }
    Ok(out)
}

pub fn pell(n: i64) -> BigInt {
    seq_at(SeqKind::Pell, n)
}

pub fn pell_lucas(n: i64) -> BigInt {
    seq_at(SeqKind::PellLucas, n)
}

pub fn modified_pell(n: i64) -> BigInt {
    seq_at(SeqKind::ModifiedPell, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn point_values() {
        assert_eq!(seq_at(SeqKind::Pell, 0), BigInt::from(0));
        assert_eq!(seq_at(SeqKind::Pell, 5), BigInt::from(29));
        assert_eq!(seq_at(SeqKind::Pell, -3), BigInt::from(5));
        assert_eq!(seq_at(SeqKind::PellLucas, 3), BigInt::from(14));
    }

    #[test]
    fn fast_pairs() {
        assert_eq!(seq_pair_fast(SeqKind::Pell, 0), (0.into(), 1.into()));
        assert_eq!(seq_pair_fast(SeqKind::Pell, 7), (169.into(), 408.into()));
        assert_eq!(seq_pair_fast(SeqKind::PellLucas, 4), (34.into(), 82.into()));
    }

    #[test]
    fn ranges() {
        assert_eq!(
            seq_range(SeqKind::Pell, 0, 4).unwrap(),
            ints(&[0, 1, 2, 5, 12])
        );
        assert_eq!(
            seq_range(SeqKind::Pell, -2, 2).unwrap(),
            ints(&[-2, 1, 0, 1, 2])
        );
        assert_eq!(
            seq_range(SeqKind::ModifiedPell, 0, 5).unwrap(),
            ints(&[1, 1, 3, 7, 17, 41])
        );
        assert_eq!(seq_range(SeqKind::Pell, 7, 7).unwrap(), ints(&[169]));
        assert_eq!(
            seq_range(SeqKind::Pell, 3, 1),
            Err(Error::InvalidRange { lo: 3, hi: 1 })
        );
    }

    #[test]
    fn negative_lucas_follows_backward_recurrence() {
        assert_eq!(
            seq_range(SeqKind::PellLucas, -4, 0).unwrap(),
            ints(&[34, -14, 6, -2, 2])
        );
        for n in -60..0 {
            for kind in SeqKind::ALL {
                assert_eq!(seq_at(kind, n), seq_iterative(kind, n), "{kind} at {n}");
            }
        }
    }

    #[test]
    fn recurrence_at_all_indices() {
        for kind in SeqKind::ALL {
            for n in -80..200 {
                assert_eq!(
                    seq_at(kind, n + 2),
                    2 * seq_at(kind, n + 1) + seq_at(kind, n),
                    "{kind} at {n}"
                );
            }
        }
    }

    #[test]
    fn fast_matches_iterative() {
        for kind in SeqKind::ALL {
            let (mut a, mut b) = kind.seeds();
            for n in 0..=2000u64 {
                assert_eq!(
                    seq_pair_fast(kind, n),
                    (a.clone(), b.clone()),
                    "{kind} at {n}"
                );
                let next = (&b << 1) + &a;
                a = std::mem::replace(&mut b, next);
            }
        }
    }

    #[test]
    fn pell_sign_rule() {
        for n in 0..=200i64 {
            let sign = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(seq_iterative(SeqKind::Pell, -n), sign * pell(n));
        }
    }

    #[test]
    fn modified_is_half_of_lucas() {
        for n in -50..=200 {
            assert_eq!(modified_pell(n) * 2, pell_lucas(n));
        }
    }

    #[test]
    fn companion_relations() {
        for n in 0..=200 {
            assert_eq!(
                pell(n + 1).pow(2) - pell(n).pow(2),
                modified_pell(n) * modified_pell(n + 1)
            );
        }
        for n in 1..=200 {
            assert_eq!(pell(n + 1) + pell(n - 1), pell_lucas(n));
        }
    }

    #[test]
    fn large_values_are_exact() {
        // P(300) has 115 decimal digits.
        assert_eq!(pell(300).to_string().len(), 115);
        assert_eq!(pell(300), seq_iterative(SeqKind::Pell, 300));
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in SeqKind::ALL {
            assert_eq!(kind.name().parse::<SeqKind>(), Ok(kind));
        }
        assert!("fibonacci".parse::<SeqKind>().is_err());
    }
}
