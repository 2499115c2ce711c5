//! Acceptance suite. Every check is exact: a residual passes only when it is
//! identically zero. Runs as a plain binary and prints one line per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dcpell::audit::{self, Assignment, Evaluator, GridOverrides, Selection, Status};
use dcpell::sequences::{modified_pell, pell};
use dcpell::{
    binet_qp, qp, qpl, seq_pair_fast, BigInt, BigRational, ConjKind, DualComplex, QuadRat, SeqKind,
};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Criteria that fail because the identity they check is false as printed.
/// 7: the windowed sum `Σ_{s=0}^{p} Q_P(n+s)` differs from
/// `¼[Q_PL(n+p+1) - Q_PL(n+1)]` by exactly `Q_P(n)`.
const KNOWN_RED: &[u32] = &[7];

const SEED: u64 = 0x5eed_d0a1;
const SAMPLES: usize = 10_000;
const COEFF_BOUND: i64 = 1_000_000;

type Dc = DualComplex<BigInt>;
type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    if took > limit {
        Err(format!(
            "took {} ms, limit {} ms",
            took.as_millis(),
            limit.as_millis()
        ))
    } else {
        Ok(took)
    }
}

fn ms(d: Duration) -> String {
    format!("{} ms", d.as_millis())
}

fn at_n(n: i64) -> Assignment {
    Assignment::from([("n", n)])
}

fn zero_residuals(id: &str, points: impl IntoIterator<Item = Assignment>) -> Result<usize, String> {
    let mut count = 0;
    for at in points {
        let r = audit::evaluate_identity(id, &at).map_err(|e| format!("{id} at {at}: {e}"))?;
        if !r.is_zero() {
            return Err(format!("{id} at {at}: residual {r}"));
        }
        count += 1;
    }
    Ok(count)
}

fn audit_one(id: &str, grid: &GridOverrides) -> Result<audit::AuditResult, String> {
    let rec = audit::find(id).map_err(|e| e.to_string())?;
    audit::audit_record(&rec, grid).map_err(|e| e.to_string())
}

fn sign(n: i64) -> BigInt {
    if n % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn dc(c: [i64; 4]) -> Dc {
    DualComplex::new(c[0].into(), c[1].into(), c[2].into(), c[3].into())
}

fn binet_matches_recurrence() -> Outcome {
    let start = Instant::now();
    for n in -50..=200 {
        let closed = binet_qp(n).map_err(|e| format!("n={n}: {e}"))?;
        if closed.value() != qp(n).value() {
            return Err(format!("n={n}: {} != {}", closed, qp(n)));
        }
    }
    let took = within(Duration::from_secs(2), start)?;
    Ok(format!(
        "binet_qp(n) == qp(n) for n in [-50, 200], 251 points, {}",
        ms(took)
    ))
}

fn cassini() -> Outcome {
    let start = Instant::now();
    let res = audit_one("eq66", &GridOverrides::new().with_max("n", 300))?;
    if res.status != Status::Pass || res.domain["n"] != [1, 300] {
        return Err(format!("status {} over {:?}", res.status, res.domain));
    }
    let base = dc([2, 2, 12, 12]);
    for n in 1..=300 {
        let lhs = qp(n - 1).into_value() * qp(n + 1).into_value() - qp(n).into_value().pow(2);
        if lhs != base.scale(&sign(n)) {
            return Err(format!("n={n}: lhs {lhs}"));
        }
    }
    let took = within(Duration::from_secs(2), start)?;
    Ok(format!(
        "zero residual for n in [1, 300]; lhs == (-1)^n (2,2,12,12); {}",
        ms(took)
    ))
}

fn catalan() -> Outcome {
    let res = audit_one("eq67", &GridOverrides::new())?;
    if res.status != Status::Pass || res.evaluations != 945 {
        return Err(format!(
            "status {} with {} points",
            res.status, res.evaluations
        ));
    }
    if res.domain["n"] != [2, 100] || res.domain["r"] != [1, 10] {
        return Err(format!("domain {:?}", res.domain));
    }
    let cat = audit::find("eq67").map_err(|e| e.to_string())?;
    let cas = audit::find("eq66").map_err(|e| e.to_string())?;
    for n in 2..=100 {
        let c = at_n(n).with("r", 1);
        let k = at_n(n);
        if cat.lhs.eval(&c) != -cas.lhs.eval(&k) || cat.rhs.eval(&c) != -cas.rhs.eval(&k) {
            return Err(format!("r=1 does not negate Cassini at n={n}"));
        }
        if !cat.residual(&c).is_zero() {
            return Err(format!("catalan residual at {c}"));
        }
    }
    Ok("zero residual on n in [2, 100], r in [1, min(10, n-1)] (945 points); r=1 negates Cassini on both sides".into())
}

fn honsberger_docagne() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for id in ["eq59", "eq60"] {
        let res = audit_one(id, &GridOverrides::new())?;
        if res.status != Status::Pass {
            return Err(format!(
                "{id}: {} at {:?}",
                res.status, res.first_counterexample
            ));
        }
        if res.domain["n"] != [0, 60] || res.domain["m"] != [0, 60] || res.evaluations != 3721 {
            return Err(format!("{id}: grid {:?}", res.domain));
        }
        total += res.evaluations;
    }
    let took = within(Duration::from_secs(5), start)?;
    Ok(format!(
        "Honsberger and d'Ocagne zero on (n, m) in [0, 60]^2, {total} points, {}",
        ms(took)
    ))
}

fn theorem_relations() -> Outcome {
    let mut total = 0;
    for id in ["eq51", "eq52", "eq53", "eq54", "eq55"] {
        total += zero_residuals(id, (2..=200).map(at_n))?;
    }
    total += zero_residuals("eq58", (0..=200).map(at_n))?;
    total += zero_residuals("eq57", (1..=100).map(at_n))?;
    Ok(format!(
        "eq51-eq55 on [2, 200], eq58 on [0, 200], eq57 on [1, 100]; {total} zero residuals"
    ))
}

fn conjugation_norms() -> Outcome {
    let integer_ids = [
        "eq30", "eq31", "eq32", "eq34", "eq35", "eq36", "eq38", "eq39", "eq40", "eq41", "eq42",
        "eq43",
    ];
    let mut total = 0;
    for id in integer_ids {
        let rec = audit::find(id).map_err(|e| e.to_string())?;
        if !matches!((rec.lhs, rec.rhs), (Evaluator::Int(_), Evaluator::Int(_))) {
            return Err(format!("{id} is not evaluated over the integers"));
        }
        total += zero_residuals(id, (0..=100).map(at_n))?;
    }
    // w·w*4 over the integers
    for n in 0..=100 {
        let norm = qp(n)
            .value()
            .norm_sq(ConjKind::C4)
            .map_err(|e| e.to_string())?;
        if norm != DualComplex::from_scalar(pell(2 * n + 1)) {
            return Err(format!("integer *4 norm at n={n}: {norm}"));
        }
    }
    for id in ["eq33", "eq37"] {
        total += zero_residuals(id, (0..=100).map(at_n))?;
    }
    // Rational oracle for the *4 conjugate itself.
    let lift = |v: Dc| v.map(BigRational::from_integer);
    for n in 0..=100 {
        let w = lift(qp(n).into_value());
        let c4 = w.conj(ConjKind::C4).map_err(|e| e.to_string())?;
        if &w * &c4 != lift(DualComplex::from_scalar(pell(2 * n + 1))) {
            return Err(format!("rational w*4 product at n={n}"));
        }
        let head = lift(DualComplex::new(pell(n), pell(n + 1), 0.into(), 0.into()));
        let expect = DualComplex::new(
            pell(2 * n + 1),
            0.into(),
            -pell(2 * n + 3),
            BigInt::from(2) * sign(n),
        );
        if head * c4 != lift(expect) {
            return Err(format!("rational (P(n) + iP(n+1)) w*4 at n={n}"));
        }
    }
    Ok(format!(
        "eq30-eq32, eq34-eq36, eq38-eq43 over integers, eq33 and eq37 over rationals, n in [0, 100]; {total} zero residuals"
    ))
}

fn accumulate(indices: impl Iterator<Item = i64>) -> Dc {
    indices.fold(Dc::zero(), |acc, k| acc + qp(k).into_value())
}

fn sum_formulas() -> Outcome {
    let four = BigInt::from(4);
    let two = BigInt::from(2);
    let mut failures = Vec::new();
    let mut checked = 0;

    let first = (1..=100).find(|&n| {
        checked += 1;
        accumulate(1..=n).scale(&four) != qpl(n + 1).into_value() - qpl(1).into_value()
    });
    let odd = (1..=100).find(|&n| {
        checked += 1;
        accumulate((1..=n).map(|s| 2 * s - 1)).scale(&two)
            != qp(2 * n).into_value() - qp(0).into_value()
    });
    let even = (1..=100).find(|&n| {
        checked += 1;
        accumulate((1..=n).map(|s| 2 * s)).scale(&two)
            != qp(2 * n + 1).into_value() - qp(1).into_value()
    });
    let mut window = None;
    'outer: for n in 1..=100 {
        for p in 0..=20 {
            checked += 1;
            let lhs = accumulate((0..=p).map(|s| n + s)).scale(&four);
            if lhs != qpl(n + p + 1).into_value() - qpl(n + 1).into_value() {
                window = Some((n, p));
                break 'outer;
            }
        }
    }
    for (id, hit) in [
        ("eq61", first.map(|n| (n, 0))),
        ("eq62", window),
        ("eq63", odd.map(|n| (n, 0))),
        ("eq64", even.map(|n| (n, 0))),
    ] {
        if let Some((n, p)) = hit {
            failures.push(if id == "eq62" {
                format!("{id} at n={n} p={p}")
            } else {
                format!("{id} at n={n}")
            });
        }
    }

    // The registered audit must agree with the independent oracle.
    let grid = GridOverrides::new().with_max("n", 100).with_max("p", 20);
    for id in ["eq61", "eq62", "eq63", "eq64"] {
        let res = audit_one(id, &grid)?;
        let oracle_failed = failures.iter().any(|f| f.starts_with(id));
        if (res.status == Status::Fail) != oracle_failed {
            return Err(format!(
                "{id}: audit says {} but the oracle disagrees",
                res.status
            ));
        }
        if let (Some(at), Some(r)) = (&res.first_counterexample, &res.residual) {
            failures.retain(|f| !f.starts_with(id));
            failures.push(format!("{id} at {at}, residual ({})", r.join(", ")));
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "eq61-eq64 on n in [1, 100], p in [0, 20]; {checked} checks"
        ))
    } else {
        Err(format!("nonzero residual: {}", failures.join("; ")))
    }
}

fn negative_results() -> Outcome {
    let ids: Vec<String> = [
        "eq56",
        "eq56_proof",
        "eq56_corrected",
        "eq3_6",
        "eq3_6_corrected",
        "eq4_Q",
        "eq4_q",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let report =
        audit::audit(&Selection::Ids(ids), &GridOverrides::new()).map_err(|e| e.to_string())?;
    let want = |id: &str, status: Status, first: Option<Assignment>| -> Result<(), String> {
        let r = report.result(id).ok_or(format!("{id} missing"))?;
        if r.status != status {
            return Err(format!("{id}: {} instead of {status}", r.status));
        }
        if first.is_some() && r.first_counterexample != first {
            return Err(format!(
                "{id}: first counterexample {:?}",
                r.first_counterexample
            ));
        }
        Ok(())
    };
    want("eq56", Status::Fail, Some(at_n(0)))?;
    want("eq56_proof", Status::Fail, Some(at_n(0)))?;
    want(
        "eq3_6",
        Status::Fail,
        Some(Assignment::from([("n", 1), ("a", 1), ("b", 1)])),
    )?;
    want("eq56_corrected", Status::Pass, None)?;
    want("eq3_6_corrected", Status::Pass, None)?;
    want("eq4_Q", Status::Pass, None)?;
    want("eq4_q", Status::Fail, None)?;

    let out = Command::new(env!("CARGO_BIN_EXE_dcpell"))
        .args(["audit", "--ids", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code();
    if code != Some(0) {
        return Err(format!("`audit --ids all` exited with {code:?}"));
    }
    let summary = String::from_utf8_lossy(&out.stdout)
        .lines()
        .last()
        .unwrap_or_default()
        .to_owned();
    Ok(format!(
        "printed failures reproduced; `audit --ids all` exit 0 ({summary})"
    ))
}

fn sample(rng: &mut StdRng) -> Dc {
    let mut c = || BigInt::from(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND));
    DualComplex::new(c(), c(), c(), c())
}

fn algebra_axioms() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let conj = |w: &Dc, k: ConjKind| w.conj(k).expect("involutive conjugations are total");
    for i in 0..SAMPLES {
        let (a, b, c) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
        let fail = |what: &str| Err(format!("sample {i}: {what} for a={a}, b={b}, c={c}"));
        if &a * &b != &b * &a {
            return fail("commutativity");
        }
        if &(&a * &b) * &c != &a * &(&b * &c) {
            return fail("associativity");
        }
        if &a * &(&b + &c) != &a * &b + &a * &c {
            return fail("distributivity");
        }
        let da = DualComplex::new(BigInt::zero(), BigInt::zero(), a.du.clone(), a.imdu.clone());
        let db = DualComplex::new(BigInt::zero(), BigInt::zero(), b.du.clone(), b.imdu.clone());
        if !(&da * &db).is_zero() {
            return fail("pure-dual product");
        }
        for k in [ConjKind::C1, ConjKind::C2, ConjKind::C3] {
            if conj(&(&a * &b), k) != &conj(&a, k) * &conj(&b, k) {
                return fail(&format!("{k:?} multiplicative"));
            }
            if conj(&(&a + &b), k) != conj(&a, k) + conj(&b, k) {
                return fail(&format!("{k:?} additive"));
            }
            if conj(&conj(&a, k), k) != a {
                return fail(&format!("{k:?} involution"));
            }
        }
        if conj(&a, ConjKind::C3) != conj(&conj(&a, ConjKind::C2), ConjKind::C1) {
            return fail("C3 = C1 after C2");
        }
        if conj(&conj(&a, ConjKind::C5), ConjKind::C5) != -a.clone() {
            return fail("C5 twice");
        }
    }
    Ok(format!(
        "{SAMPLES} seeded triples, coefficients in [-{COEFF_BOUND}, {COEFF_BOUND}]"
    ))
}

fn oracle_equivalence() -> Outcome {
    for kind in SeqKind::ALL {
        let (mut x, mut y) = kind.seeds();
        for n in 0..=2000u64 {
            let fast = seq_pair_fast(kind, n);
            if fast != (x.clone(), y.clone()) {
                return Err(format!("{kind} at n={n}"));
            }
            let next = BigInt::from(2) * &y + &x;
            x = std::mem::replace(&mut y, next);
        }
    }
    for n in 0..=100 {
        let lhs = QuadRat::alpha().pow(n).map_err(|e| e.to_string())?;
        if lhs != QuadRat::from_ints(modified_pell(n), pell(n)) {
            return Err(format!("alpha^{n} = {lhs}"));
        }
    }
    Ok("fast doubling == recurrence on [0, 2000] for all three sequences; alpha^n == q(n) + P(n)sqrt2 on [0, 100]".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "binet vs recurrence", binet_matches_recurrence),
        (2, "cassini", cassini),
        (3, "catalan", catalan),
        (4, "honsberger and d'ocagne", honsberger_docagne),
        (5, "linear relations", theorem_relations),
        (6, "conjugations and norms", conjugation_norms),
        (7, "sum formulas", sum_formulas),
        (8, "negative results", negative_results),
        (9, "algebra axioms", algebra_axioms),
        (10, "oracle equivalence", oracle_equivalence),
    ];
    println!("acceptance: exact arithmetic, tolerance 0");
    let mut failed = Vec::new();
    for (num, name, check) in criteria {
        match check() {
            Ok(detail) => println!("[{num:>2}] PASS {name}: {detail}"),
            Err(detail) => {
                let tag = if KNOWN_RED.contains(&num) {
                    " (known red)"
                } else {
                    ""
                };
                println!("[{num:>2}] FAIL{tag} {name}: {detail}");
                failed.push(num);
            }
        }
    }
    println!(
        "acceptance: {} passed, {} failed {:?}",
        criteria.len() - failed.len(),
        failed.len(),
        failed
    );
    if failed == KNOWN_RED {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing set differs from the known red set {KNOWN_RED:?}");
        ExitCode::FAILURE
    }
}
