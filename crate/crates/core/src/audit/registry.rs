//! The identity registry.
//!
//! Ids follow the numbering of the source identities (`eq66_cassini`,
//! `eq3_6`, ...). Where a statement and its derivation print different
//! right-hand sides both are registered (`eqNN` and `eqNN_proof`), and a
//! `_corrected` form accompanies every identity that fails as printed.

use num_bigint::BigInt;
use num_traits::One;

use super::{Assignment, Evaluator, Expected, IdentityRecord, IndexVar, IntValue, Value};
use crate::dual_complex::{ConjKind, DualComplex};
use crate::quaternion::{binet_qp, qp, qpl, sum_qp_even, sum_qp_first, sum_qp_odd, sum_qp_window};
use crate::rings::{BigRational, Ring};
use crate::sequences::{modified_pell, pell, pell_lucas, seq_iterative, SeqKind};

use Evaluator::{Int, Rat};
use Expected::{FailsAsPrinted, Holds};

// Default grids.
const N_MAX: i64 = 200;
const PAIR_MAX: i64 = 60;

fn p(k: i64) -> BigInt {
    pell(k)
}

fn b(k: i64) -> BigInt {
    BigInt::from(k)
}

/// `(-1)^k`
fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn lift(w: IntValue) -> Value {
    w.map(BigRational::from_integer)
}

fn scalar(x: BigInt) -> IntValue {
    DualComplex::from_scalar(x)
}

fn dc(re: BigInt, im: BigInt, du: BigInt, imdu: BigInt) -> IntValue {
    DualComplex::new(re, im, du, imdu)
}

fn w(n: i64) -> IntValue {
    qp(n).into_value()
}

fn wl(n: i64) -> IntValue {
    qpl(n).into_value()
}

fn scale(k: BigInt, v: IntValue) -> IntValue {
    v.scale(&k)
}

fn frac(num: i64, den: i64, v: IntValue) -> Value {
    lift(v).scale(&BigRational::new(num.into(), den.into()))
}

fn conj<R: Ring>(v: &DualComplex<R>, kind: ConjKind) -> DualComplex<R> {
    v.conj(kind)
        .expect("complex part of a Pell quaternion is never zero")
}

fn norm<R: Ring>(v: &DualComplex<R>, kind: ConjKind) -> DualComplex<R> {
    v.norm_sq(kind)
        .expect("complex part of a Pell quaternion is never zero")
}

/// `1 + i + 6ε + 6iε`
fn pattern() -> IntValue {
    dc(b(1), b(1), b(6), b(6))
}

fn i_unit() -> IntValue {
    DualComplex::i()
}

fn eps() -> IntValue {
    DualComplex::eps()
}

fn i_eps() -> IntValue {
    DualComplex::i_eps()
}

type Cx = (BigInt, BigInt);

fn cmul((a, b): &Cx, (c, d): &Cx) -> Cx {
    (a * c - b * d, a * d + b * c)
}

/// The complex and dual parts of `Q_P(n)` as integer pairs.
fn parts(n: i64) -> (Cx, Cx) {
    ((p(n), p(n + 1)), (p(n + 2), p(n + 3)))
}

fn n_of(a: &Assignment) -> i64 {
    a.var("n")
}

struct Rec {
    id: &'static str,
    vars: Vec<IndexVar>,
    lhs: Evaluator,
    rhs: Evaluator,
    expected: Expected,
    note: &'static str,
}

impl From<Rec> for IdentityRecord {
    fn from(r: Rec) -> Self {
        IdentityRecord {
            id: r.id,
            vars: r.vars,
            lhs: r.lhs,
            rhs: r.rhs,
            expected: r.expected,
            note: r.note,
        }
    }
}

fn single(min: i64) -> Vec<IndexVar> {
    vec![IndexVar::from("n", min, N_MAX)]
}

fn pair() -> Vec<IndexVar> {
    vec![
        IndexVar::from("n", 0, PAIR_MAX),
        IndexVar::from("m", 0, PAIR_MAX),
    ]
}

fn scalar_identities() -> Vec<Rec> {
    vec![
        Rec {
            id: "eq2",
            vars: single(1),
            lhs: Int(|a| {
                let n = n_of(a);
                scalar(p(n + 1) * p(n - 1) - p(n) * p(n))
            }),
            rhs: Int(|a| scalar(sign(n_of(a)))),
            expected: Holds,
            note: "Pell Cassini: P(n+1)P(n-1) - P(n)^2 = (-1)^n",
        },
        Rec {
            id: "eq3_1",
            vars: vec![IndexVar::from("n", 0, PAIR_MAX), IndexVar::from("r", 1, PAIR_MAX)],
            lhs: Int(|a| {
                let (n, r) = (a.var("n"), a.var("r"));
                scalar(p(r) * p(n + 1) + p(r - 1) * p(n))
            }),
            rhs: Int(|a| scalar(p(a.var("n") + a.var("r")))),
            expected: Holds,
            note: "addition formula P(r)P(n+1) + P(r-1)P(n) = P(n+r)",
        },
        Rec {
            id: "eq3_2",
            vars: single(1),
            lhs: Int(|a| {
                let n = n_of(a);
                scalar(p(n) * (p(n + 1) + p(n - 1)))
            }),
            rhs: Int(|a| scalar(p(2 * n_of(a)))),
            expected: Holds,
            note: "duplication P(n)(P(n+1) + P(n-1)) = P(2n)",
        },
        Rec {
            id: "eq3_3",
            vars: single(0),
            lhs: Int(|a| {
                let n = n_of(a);
                scalar(p(2 * n + 1) + p(2 * n))
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                scalar(b(2) * p(n + 1).pow(2) - b(2) * p(n).pow(2) - sign(n))
            }),
            expected: Holds,
            note: "P(2n+1) + P(2n) = 2P(n+1)^2 - 2P(n)^2 - (-1)^n",
        },
        Rec {
            id: "eq3_4",
            vars: single(0),
            lhs: Int(|a| {
                let n = n_of(a);
                scalar(p(n).pow(2) + p(n + 1).pow(2))
            }),
            rhs: Int(|a| scalar(p(2 * n_of(a) + 1))),
            expected: Holds,
            note: "P(n)^2 + P(n+1)^2 = P(2n+1)",
        },
        Rec {
            id: "eq3_5",
            vars: single(0),
            lhs: Int(|a| {
                let n = n_of(a);
                scalar(p(n).pow(2) + p(n + 3).pow(2))
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                scalar(b(5) * (p(n + 1).pow(2) + p(n + 2).pow(2)))
            }),
            expected: Holds,
            note: "P(n)^2 + P(n+3)^2 = 5(P(n+1)^2 + P(n+2)^2)",
        },
        Rec {
            id: "eq3_6",
            vars: vec![
                IndexVar::from("n", 1, PAIR_MAX),
                IndexVar::from("a", 1, 20),
                IndexVar::from("b", 1, 20),
            ],
            lhs: Int(eq3_6_lhs),
            rhs: Int(|x| {
                let (n, a, c) = (x.var("n"), x.var("a"), x.var("b"));
                scalar(sign(n) * p(n) * p(n + a + c))
            }),
            expected: FailsAsPrinted,
            note: "printed right-hand side (-1)^n P(n)P(n+a+b); see eq3_6_corrected",
        },
        Rec {
            id: "eq3_6_corrected",
            vars: vec![
                IndexVar::from("n", 1, PAIR_MAX),
                IndexVar::from("a", 1, 20),
                IndexVar::from("b", 1, 20),
            ],
            lhs: Int(eq3_6_lhs),
            rhs: Int(|x| {
                let (n, a, c) = (x.var("n"), x.var("a"), x.var("b"));
                scalar(sign(n) * p(a) * p(c))
            }),
            expected: Holds,
            note: "Vajda form P(n+a)P(n+b) - P(n)P(n+a+b) = (-1)^n P(a)P(b)",
        },
        Rec {
            id: "eq3_7",
            vars: single(0),
            lhs: Int(|a| scalar(seq_iterative(SeqKind::Pell, -n_of(a)))),
            rhs: Int(|a| {
                let n = n_of(a);
                scalar(sign(n + 1) * p(n))
            }),
            expected: Holds,
            note: "P(-n) = (-1)^(n+1) P(n); left side by backward recurrence",
        },
        Rec {
            id: "eq4_Q",
            vars: single(1),
            lhs: Int(|a| {
                let n = n_of(a);
                scalar(pell_lucas(n + 1) * pell_lucas(n - 1) - pell_lucas(n).pow(2))
            }),
            rhs: Int(|a| scalar(b(8) * sign(n_of(a) + 1))),
            expected: Holds,
            note: "Cassini constant 8(-1)^(n+1) read with Pell-Lucas Q(0)=Q(1)=2",
        },
        Rec {
            id: "eq4_q",
            vars: single(1),
            lhs: Int(|a| {
                let n = n_of(a);
                scalar(modified_pell(n + 1) * modified_pell(n - 1) - modified_pell(n).pow(2))
            }),
            rhs: Int(|a| scalar(b(8) * sign(n_of(a) + 1))),
            expected: FailsAsPrinted,
            note: "Cassini constant 8(-1)^(n+1) read with modified Pell q = Q/2; true constant is 2(-1)^(n+1)",
        },
    ]
}

fn eq3_6_lhs(x: &Assignment) -> IntValue {
    let (n, a, c) = (x.var("n"), x.var("a"), x.var("b"));
    scalar(p(n + a) * p(n + c) - p(n) * p(n + a + c))
}

fn qp_product(x: &Assignment) -> IntValue {
    w(x.var("n")) * w(x.var("m"))
}

fn number_identities() -> Vec<Rec> {
    vec![
        Rec {
            id: "eq16_printed",
            vars: pair(),
            lhs: Int(qp_product),
            rhs: Int(|x| {
                let ((z1, z2), (z3, z4)) = (parts(x.var("n")), parts(x.var("m")));
                let head = cmul(&z1, &z3);
                let (t1, t2) = (cmul(&z2, &z4), cmul(&z2, &z3));
                dc(head.0, head.1, t1.0 + t2.0, t1.1 + t2.1)
            }),
            expected: FailsAsPrinted,
            note: "printed product rule z1z3 + eps(z2z4 + z2z3) disagrees with the multiplication table",
        },
        Rec {
            id: "eq17_division",
            vars: pair(),
            lhs: Rat(|x| {
                let (u, v) = (lift(w(x.var("n"))), lift(w(x.var("m"))));
                u.checked_div(&v).expect("invertible complex part") * v
            }),
            rhs: Int(|x| w(x.var("n"))),
            expected: Holds,
            note: "(w1 / w2) w2 = w1 over rationals",
        },
        Rec {
            id: "eq19_n5",
            vars: single(0),
            lhs: Int(|a| norm(&w(n_of(a)), ConjKind::C5)),
            rhs: Int(|a| {
                let (z1, z2) = parts(n_of(a));
                let head = cmul(&z1, &z2);
                let (s2, s1) = (cmul(&z2, &z2), cmul(&z1, &z1));
                dc(head.0, head.1, s2.0 - s1.0, s2.1 - s1.1)
            }),
            expected: Holds,
            note: "anti-dual norm radicand z1z2 + eps(z2^2 - z1^2)",
        },
        Rec {
            id: "eq30",
            vars: single(0),
            lhs: Int(|a| {
                let v = w(n_of(a));
                v.clone() * conj(&v, ConjKind::C1)
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(p(2 * n + 1), b(0), b(2) * p(2 * n + 3), b(0))
            }),
            expected: Holds,
            note: "w w*1 = P(2n+1) + 2eps P(2n+3)",
        },
        Rec {
            id: "eq31",
            vars: single(0),
            lhs: Int(|a| {
                let v = w(n_of(a));
                v.clone() * conj(&v, ConjKind::C2)
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(-(modified_pell(n) * modified_pell(n + 1)), b(2) * p(n) * p(n + 1), b(0), b(0))
            }),
            expected: Holds,
            note: "w w*2 = -q(n)q(n+1) + 2i P(n)P(n+1)",
        },
        Rec {
            id: "eq32",
            vars: single(0),
            lhs: Int(|a| {
                let v = w(n_of(a));
                v.clone() * conj(&v, ConjKind::C3)
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(p(2 * n + 1), b(0), b(0), b(-4) * sign(n))
            }),
            expected: Holds,
            note: "w w*3 = P(2n+1) - 4i eps (-1)^n",
        },
        Rec {
            id: "eq33",
            vars: single(0),
            lhs: Rat(|a| {
                let v = lift(w(n_of(a)));
                v.clone() * conj(&v, ConjKind::C4)
            }),
            rhs: Int(|a| scalar(p(2 * n_of(a) + 1))),
            expected: Holds,
            note: "w w*4 = P(2n+1); evaluated over rationals",
        },
        Rec {
            id: "eq34",
            vars: single(0),
            lhs: Int(|a| {
                let v = w(n_of(a));
                v.clone() + conj(&v, ConjKind::C1)
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                scale(b(2), dc(p(n), b(0), p(n + 2), b(0)))
            }),
            expected: Holds,
            note: "w + w*1 = 2(P(n) + eps P(n+2))",
        },
        Rec {
            id: "eq35",
            vars: single(0),
            lhs: Int(|a| {
                let v = w(n_of(a));
                v.clone() + conj(&v, ConjKind::C2)
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                scale(b(2), dc(p(n), p(n + 1), b(0), b(0)))
            }),
            expected: Holds,
            note: "w + w*2 = 2(P(n) + i P(n+1))",
        },
        Rec {
            id: "eq36",
            vars: single(0),
            lhs: Int(|a| {
                let v = w(n_of(a));
                v.clone() + conj(&v, ConjKind::C3)
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                scale(b(2), dc(p(n), b(0), b(0), p(n + 3)))
            }),
            expected: Holds,
            note: "w + w*3 = 2(P(n) + i eps P(n+3))",
        },
        Rec {
            id: "eq37",
            vars: single(0),
            lhs: Rat(|a| {
                let n = n_of(a);
                let v = lift(w(n));
                lift(dc(p(n), p(n + 1), b(0), b(0))) * conj(&v, ConjKind::C4)
            }),
            rhs: Int(eq37_rhs),
            expected: Holds,
            note: "(P(n) + i P(n+1)) w*4 = P(2n+1) - eps P(2n+3) + 2i eps (-1)^n; *4 needs rational coefficients",
        },
        Rec {
            id: "eq37_conj2",
            vars: single(0),
            lhs: Int(|a| {
                let n = n_of(a);
                let v = w(n);
                dc(p(n), -p(n + 1), b(0), b(0)) * conj(&v, ConjKind::C2)
            }),
            rhs: Int(eq37_rhs),
            expected: Holds,
            note: "second printed form (P(n) - i P(n+1)) w*2 of the same value",
        },
        Rec {
            id: "eq38",
            vars: single(0),
            lhs: Int(|a| {
                let v = w(n_of(a));
                eps() * v.clone() + conj(&v, ConjKind::C5)
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(p(n + 2), p(n + 3), b(0), b(0))
            }),
            expected: Holds,
            note: "eps w + w*5 = P(n+2) + i P(n+3)",
        },
        Rec {
            id: "eq39",
            vars: single(0),
            lhs: Int(|a| {
                let v = w(n_of(a));
                v.clone() - eps() * conj(&v, ConjKind::C5)
            }),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(p(n), p(n + 1), b(0), b(0))
            }),
            expected: Holds,
            note: "w - eps w*5 = P(n) + i P(n+1)",
        },
        Rec {
            id: "eq40",
            vars: single(0),
            lhs: Int(|a| norm(&w(n_of(a)), ConjKind::C1)),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(p(2 * n + 1), b(0), b(2) * p(2 * n + 3), b(0))
            }),
            expected: Holds,
            note: "squared *1 norm; expanded form (P(n)^2 + P(n+1)^2) + 2eps(P(n)P(n+2) + P(n+1)P(n+3))",
        },
        Rec {
            id: "eq41",
            vars: single(0),
            lhs: Int(|a| norm(&w(n_of(a)), ConjKind::C2)),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(-(modified_pell(n) * modified_pell(n + 1)), b(2) * p(n) * p(n + 1), b(0), b(0))
            }),
            expected: Holds,
            note: "squared *2 norm as the dual-complex value -q(n)q(n+1) + 2i P(n)P(n+1)",
        },
        Rec {
            id: "eq42",
            vars: single(0),
            lhs: Int(|a| norm(&w(n_of(a)), ConjKind::C3)),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(p(2 * n + 1), b(0), b(0), b(-4) * sign(n))
            }),
            expected: Holds,
            note: "squared *3 norm P(2n+1) - 4i eps (-1)^n",
        },
        Rec {
            id: "eq43",
            vars: single(0),
            lhs: Int(|a| norm(&w(n_of(a)), ConjKind::C4)),
            rhs: Int(|a| scalar(p(2 * n_of(a) + 1))),
            expected: Holds,
            note: "squared *4 norm P(n)^2 + P(n+1)^2 = P(2n+1)",
        },
    ]
}

fn eq37_rhs(a: &Assignment) -> IntValue {
    let n = n_of(a);
    dc(p(2 * n + 1), b(0), -p(2 * n + 3), b(2) * sign(n))
}

fn sum_of_squares(a: &Assignment) -> IntValue {
    let n = n_of(a);
    w(n).pow(2) + w(n + 1).pow(2)
}

fn difference_of_squares(a: &Assignment) -> IntValue {
    let n = n_of(a);
    w(n + 1).pow(2) - w(n - 1).pow(2)
}

fn eq57_tail(n: i64) -> (BigInt, BigInt, BigInt) {
    (
        b(3) * p(2 * n + 1),
        -(p(2 * n + 2) + b(8) * p(2 * n + 3)),
        b(3) * p(2 * n + 3) - b(2) * p(2 * n) + b(12) * p(n + 1) * p(n + 2)
            - b(4) * p(n + 1) * p(n - 1),
    )
}

fn eq58_lhs(a: &Assignment) -> IntValue {
    let n = n_of(a);
    w(n) - i_unit() * conj(&w(n + 1), ConjKind::C3) - eps() * w(n + 2) - i_eps() * w(n + 3)
}

fn honsberger_lhs(x: &Assignment) -> IntValue {
    let (n, m) = (x.var("n"), x.var("m"));
    w(n) * w(m) + w(n + 1) * w(m + 1)
}

fn window_sum(x: &Assignment) -> IntValue {
    let p_len = u32::try_from(x.var("p")).expect("window length within domain");
    sum_qp_window(x.var("n"), p_len)
}

fn count(a: &Assignment) -> u32 {
    u32::try_from(n_of(a)).expect("count within domain")
}

fn quaternion_identities() -> Vec<Rec> {
    vec![
        Rec {
            id: "eq49",
            vars: pair(),
            lhs: Int(qp_product),
            rhs: Int(|x| {
                let (n, m) = (x.var("n"), x.var("m"));
                dc(
                    p(n) * p(m) - p(n + 1) * p(m + 1),
                    p(n + 1) * p(m) + p(n) * p(m + 1),
                    p(n) * p(m + 2) - p(n + 1) * p(m + 3) + p(n + 2) * p(m) - p(n + 3) * p(m + 1),
                    p(n + 1) * p(m + 2) + p(n) * p(m + 3) + p(n + 3) * p(m) + p(n + 2) * p(m + 1),
                )
            }),
            expected: Holds,
            note: "componentwise expansion of Q_P(n) Q_P(m)",
        },
        Rec {
            id: "eq49_commutes",
            vars: pair(),
            lhs: Int(qp_product),
            rhs: Int(|x| w(x.var("m")) * w(x.var("n"))),
            expected: Holds,
            note: "Q_P(n) Q_P(m) = Q_P(m) Q_P(n)",
        },
        Rec {
            id: "eq51",
            vars: single(0),
            lhs: Int(|a| {
                let n = n_of(a);
                w(n) + scale(b(2), w(n + 1))
            }),
            rhs: Int(|a| w(n_of(a) + 2)),
            expected: Holds,
            note: "Q_P(n) + 2Q_P(n+1) = Q_P(n+2)",
        },
        Rec {
            id: "eq52",
            vars: single(0),
            lhs: Int(|a| {
                let n = n_of(a);
                wl(n) + scale(b(2), wl(n + 1))
            }),
            rhs: Int(|a| wl(n_of(a) + 2)),
            expected: Holds,
            note: "Q_PL(n) + 2Q_PL(n+1) = Q_PL(n+2)",
        },
        Rec {
            id: "eq53",
            vars: single(1),
            lhs: Int(|a| {
                let n = n_of(a);
                w(n + 1) + w(n - 1)
            }),
            rhs: Int(|a| wl(n_of(a))),
            expected: Holds,
            note: "Q_P(n+1) + Q_P(n-1) = Q_PL(n)",
        },
        Rec {
            id: "eq54",
            vars: single(2),
            lhs: Int(|a| {
                let n = n_of(a);
                w(n + 2) - w(n - 2)
            }),
            rhs: Int(|a| scale(b(2), wl(n_of(a)))),
            expected: Holds,
            note: "Q_P(n+2) - Q_P(n-2) = 2Q_PL(n)",
        },
        Rec {
            id: "eq55",
            vars: single(2),
            lhs: Int(|a| {
                let n = n_of(a);
                w(n + 2) + w(n - 2)
            }),
            rhs: Int(|a| scale(b(6), w(n_of(a)))),
            expected: Holds,
            note: "Q_P(n+2) + Q_P(n-2) = 6Q_P(n)",
        },
        Rec {
            id: "eq56",
            vars: single(0),
            lhs: Int(sum_of_squares),
            rhs: Int(|a| {
                let n = n_of(a);
                w(2 * n + 1)
                    + dc(
                        b(-2) * p(2 * n + 3),
                        p(2 * n + 2),
                        b(-11) * p(2 * n + 3) + b(2) * p(2 * n + 1),
                        b(4) * (p(2 * n + 4) + p(n + 2).pow(2)),
                    )
            }),
            expected: FailsAsPrinted,
            note: "statement form of Q_P(n)^2 + Q_P(n+1)^2; see eq56_corrected",
        },
        Rec {
            id: "eq56_proof",
            vars: single(0),
            lhs: Int(sum_of_squares),
            rhs: Int(|a| {
                let n = n_of(a);
                w(2 * n + 1)
                    + dc(
                        -p(2 * n + 3),
                        p(2 * n + 2),
                        -(p(2 * n + 1) - b(11) * p(2 * n + 3)),
                        b(4) * (p(2 * n + 4) + p(n + 2).pow(2)),
                    )
            }),
            expected: FailsAsPrinted,
            note: "derivation form of Q_P(n)^2 + Q_P(n+1)^2; see eq56_corrected",
        },
        Rec {
            id: "eq56_corrected",
            vars: single(0),
            lhs: Int(sum_of_squares),
            rhs: Int(|a| {
                let n = n_of(a);
                w(2 * n + 1)
                    + dc(
                        -p(2 * n + 3),
                        p(2 * n + 2),
                        p(2 * n + 3) - b(2) * p(2 * n + 5),
                        b(3) * p(2 * n + 4),
                    )
            }),
            expected: Holds,
            note: "Honsberger identity at m = n",
        },
        Rec {
            id: "eq57",
            vars: single(1),
            lhs: Int(difference_of_squares),
            rhs: Int(|a| {
                let n = n_of(a);
                let (im, du, imdu) = eq57_tail(n);
                w(2 * n) + dc(p(2 * n) - b(2) * p(2 * n + 2), im, du, imdu)
            }),
            expected: Holds,
            note: "statement form of Q_P(n+1)^2 - Q_P(n-1)^2",
        },
        Rec {
            id: "eq57_proof",
            vars: single(1),
            lhs: Int(difference_of_squares),
            rhs: Int(|a| {
                let n = n_of(a);
                let (im, du, imdu) = eq57_tail(n);
                w(2 * n) + dc(-(p(2 * n) - b(2) * p(2 * n + 2)), im, du, imdu)
            }),
            expected: FailsAsPrinted,
            note: "derivation's final line flips the sign of (P(2n) - 2P(2n+2))",
        },
        Rec {
            id: "eq58",
            vars: single(0),
            lhs: Int(eq58_lhs),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(b(-2) * p(n + 1), b(0), b(2) * p(n + 4), b(0))
            }),
            expected: Holds,
            note: "statement form 2(-P(n+1) + eps P(n+4))",
        },
        Rec {
            id: "eq58_proof",
            vars: single(0),
            lhs: Int(eq58_lhs),
            rhs: Int(|a| {
                let n = n_of(a);
                dc(b(-2) * p(n + 1), b(0), b(-2) * p(n + 4), b(0))
            }),
            expected: FailsAsPrinted,
            note: "derivation's final line -2(P(n+1) + eps P(n+4))",
        },
        Rec {
            id: "eq59_honsberger",
            vars: pair(),
            lhs: Int(honsberger_lhs),
            rhs: Int(|x| {
                let k = x.var("n") + x.var("m");
                w(k + 1) + dc(-p(k + 3), p(k + 2), p(k + 3) - b(2) * p(k + 5), b(3) * p(k + 4))
            }),
            expected: Holds,
            note: "Honsberger identity, statement form",
        },
        Rec {
            id: "eq59_proof",
            vars: pair(),
            lhs: Int(honsberger_lhs),
            rhs: Int(|x| {
                let k = x.var("n") + x.var("m");
                w(k + 1) + dc(-p(k + 3), p(k + 2), p(k + 3) - p(k + 5), b(3) * p(k + 4))
            }),
            expected: FailsAsPrinted,
            note: "derivation's final line drops the factor 2 on P(n+m+5)",
        },
        Rec {
            id: "eq60_docagne",
            vars: pair(),
            lhs: Int(|x| {
                let (n, m) = (x.var("n"), x.var("m"));
                w(m) * w(n + 1) - w(m + 1) * w(n)
            }),
            rhs: Int(|x| {
                let (n, m) = (x.var("n"), x.var("m"));
                scale(b(2) * sign(n) * p(m - n), pattern())
            }),
            expected: Holds,
            note: "d'Ocagne identity",
        },
        Rec {
            id: "eq61",
            vars: single(1),
            lhs: Int(|a| sum_qp_first(count(a))),
            rhs: Rat(|a| frac(1, 4, wl(n_of(a) + 1) - wl(1))),
            expected: Holds,
            note: "sum_{s=1..n} Q_P(s) = (Q_PL(n+1) - Q_PL(1))/4",
        },
        Rec {
            id: "eq62",
            vars: vec![IndexVar::from("n", 1, 100), IndexVar::from("p", 0, 20)],
            lhs: Int(window_sum),
            rhs: Rat(|x| {
                let (n, q) = (x.var("n"), x.var("p"));
                frac(1, 4, wl(n + q + 1) - wl(n + 1))
            }),
            expected: FailsAsPrinted,
            note: "sum_{s=0..p} Q_P(n+s) with printed lower term Q_PL(n+1); off by Q_P(n), see eq62_corrected",
        },
        Rec {
            id: "eq62_corrected",
            vars: vec![IndexVar::from("n", 1, 100), IndexVar::from("p", 0, 20)],
            lhs: Int(window_sum),
            rhs: Rat(|x| {
                let (n, q) = (x.var("n"), x.var("p"));
                frac(1, 4, wl(n + q + 1) - wl(n))
            }),
            expected: Holds,
            note: "sum_{s=0..p} Q_P(n+s) = (Q_PL(n+p+1) - Q_PL(n))/4",
        },
        Rec {
            id: "eq63",
            vars: single(1),
            lhs: Int(|a| sum_qp_odd(count(a))),
            rhs: Rat(|a| frac(1, 2, w(2 * n_of(a)) - w(0))),
            expected: Holds,
            note: "sum_{s=1..n} Q_P(2s-1) = (Q_P(2n) - Q_P(0))/2",
        },
        Rec {
            id: "eq64",
            vars: single(1),
            lhs: Int(|a| sum_qp_even(count(a))),
            rhs: Rat(|a| frac(1, 2, w(2 * n_of(a) + 1) - w(1))),
            expected: Holds,
            note: "sum_{s=1..n} Q_P(2s) = (Q_P(2n+1) - Q_P(1))/2",
        },
        Rec {
            id: "binet_eq",
            vars: vec![IndexVar::free("n", -50, N_MAX)],
            lhs: Int(|a| {
                let q = binet_qp(n_of(a)).expect("closed form is integral");
                q.into_value()
            }),
            rhs: Int(|a| w(n_of(a))),
            expected: Holds,
            note: "closed form over Q(sqrt 2) against the recurrence",
        },
        Rec {
            id: "eq66_cassini",
            vars: vec![IndexVar::from("n", 1, 300)],
            lhs: Int(|a| {
                let n = n_of(a);
                w(n - 1) * w(n + 1) - w(n).pow(2)
            }),
            rhs: Int(|a| scale(b(2) * sign(n_of(a)), pattern())),
            expected: Holds,
            note: "Cassini identity with Pell quaternions and the final right-hand side",
        },
        Rec {
            id: "eq67_catalan",
            vars: vec![IndexVar::from("n", 2, 100), IndexVar::from("r", 1, 10).below("n")],
            lhs: Int(|x| {
                let (n, r) = (x.var("n"), x.var("r"));
                w(n).pow(2) - w(n + r) * w(n - r)
            }),
            rhs: Int(|x| {
                let (n, r) = (x.var("n"), x.var("r"));
                scale(b(2) * sign(n - r) * p(r).pow(2), pattern())
            }),
            expected: Holds,
            note: "Catalan identity",
        },
    ]
}

/// Every registered identity, in a fixed order.
pub fn registry() -> Vec<IdentityRecord> {
    scalar_identities()
        .into_iter()
        .chain(number_identities())
        .chain(quaternion_identities())
        .map(IdentityRecord::from)
        .collect()
}

/// Short names accepted in place of the full ids.
pub(super) const ALIASES: [(&str, &str); 4] = [
    ("eq59", "eq59_honsberger"),
    ("eq60", "eq60_docagne"),
    ("eq66", "eq66_cassini"),
    ("eq67", "eq67_catalan"),
];
