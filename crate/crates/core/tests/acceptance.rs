//! Acceptance criteria 1–10. Prints one line per criterion; every comparison
//! is exact (tolerance 0, rational and integer arithmetic throughout).
//!
//! Criteria 3 and 4 contain claims that do not hold as stated. Their lines
//! report FAIL with the measured failure set, and the run only errors if the
//! failures differ from the recorded set.

mod common;

use std::collections::BTreeMap;
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use kschur::partition::{k_bounded_partitions, partitions_of, partitions_up_to, Partition};
use kschur::schur::{hook_plethysm, integer_coeffs, multiply, SymFunc};
use kschur::verify::{
    appendix_instances, sweep, verify_corollary, verify_irreducible_count, verify_omega_invariance,
    verify_rectangle_action, verify_rectangle_product, verify_reduction, SweepResult, VerifyReport,
};
use kschur::vertex::{apply_b_vector, hall_littlewood};

const TOLERANCE: &str = "exact";

struct Outcome {
    pass: bool,
    /// The outcome matches what is recorded for this criterion.
    expected: bool,
    summary: String,
}

impl Outcome {
    fn plain(pass: bool, summary: String) -> Self {
        Outcome {
            pass,
            expected: pass,
            summary,
        }
    }
}

fn parts(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

fn tally(reports: &[&VerifyReport]) -> (usize, usize) {
    (reports.iter().filter(|r| r.pass).count(), reports.len())
}

fn with_id<'a>(s: &'a SweepResult, id: &str) -> Vec<&'a VerifyReport> {
    s.reports.iter().filter(|r| r.id == id).collect()
}

fn param(r: &VerifyReport, key: &str) -> usize {
    r.params[key].as_u64().expect("integer parameter") as usize
}

fn hall_littlewood_triangularity() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 0..=8 {
        let shapes = partitions_of(n);
        for mu in &shapes {
            let h = hall_littlewood(mu);
            let mut ok = h.coeff(mu).is_one();
            for (lambda, c) in h.iter() {
                ok &= c.is_nonnegative() && mu.dominance_leq(lambda).unwrap_or(false);
            }
            for lambda in &shapes {
                checked += 1;
                ok &= h.coeff(lambda).eval_at_one() == common::kostka(&parts(lambda), &parts(mu));
            }
            if !ok {
                bad.push(mu.to_string());
            }
        }
    }
    Outcome::plain(
        bad.is_empty(),
        format!("{checked} coefficients for |λ| ≤ 8, failing H_λ: {bad:?}"),
    )
}

fn collapse_at_one() -> Outcome {
    let lambdas: Vec<Partition> = partitions_up_to(6)
        .into_iter()
        .filter(|l| l.length() <= 4)
        .collect();
    let mus = partitions_up_to(4);
    let pairs: Vec<(&Partition, &Partition)> = lambdas
        .iter()
        .flat_map(|l| mus.iter().map(move |m| (l, m)))
        .collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|(l, m)| {
            let s_mu = SymFunc::schur((*m).clone());
            let lhs = apply_b_vector(&l.to_vector(), &s_mu).expect("apply").at_t_one();
            let rhs = multiply(&SymFunc::schur((*l).clone()), &s_mu).expect("multiply");
            (lhs != rhs).then(|| format!("λ={l} μ={m}"))
        })
        .collect();
    Outcome::plain(
        bad.is_empty(),
        format!("{} pairs, mismatches: {bad:?}", pairs.len()),
    )
}

fn theorem1(full: &SweepResult, literal: &SweepResult) -> Outcome {
    let full_op = with_id(full, "theorem1-full");
    let full_cor = with_id(full, "corollary-full");
    let lit_op = with_id(literal, "theorem1");
    let lit_cor = with_id(literal, "corollary");
    let worked = verify_corollary(2, 1, 1, &Partition::row(1))
        .expect("corollary")
        .pass;
    let lit_fail: Vec<&&VerifyReport> = lit_op.iter().chain(&lit_cor).filter(|r| !r.pass).collect();
    let only_r_above_a = lit_fail.iter().all(|r| param(r, "r") > param(r, "a"));
    let full_ok = full_op.iter().chain(&full_cor).all(|r| r.pass);
    let (op_p, op_t) = tally(&lit_op);
    let (cor_p, cor_t) = tally(&lit_cor);
    let (fop_p, fop_t) = tally(&full_op);
    let (fcor_p, fcor_t) = tally(&full_cor);
    Outcome {
        pass: lit_fail.is_empty() && worked,
        expected: full_ok && only_r_above_a && worked && fop_t == op_t && fcor_t == cor_t,
        summary: format!(
            "stated form {op_p}/{op_t} operator, {cor_p}/{cor_t} at t=1, every failure has r > a: {only_r_above_a}; \
             all summands kept {fop_p}/{fop_t} operator, {fcor_p}/{fcor_t} at t=1; \
             s22*s1 = s2*s21 - s3*s11 holds: {worked}"
        ),
    }
}

fn identities(ids: &SweepResult, literal: &SweepResult) -> Outcome {
    let mut counts = Vec::new();
    for id in ["rect-commute", "I3", "I2", "I4-expansion", "commutation"] {
        let (p, t) = tally(&with_id(ids, id));
        counts.push(format!("{id} {p}/{t}"));
    }
    let i4 = with_id(literal, "I4");
    let (p, t) = tally(&i4);
    counts.push(format!("I4 shapes {p}/{t}"));
    let failing: Vec<(usize, usize, Vec<u64>)> = i4
        .iter()
        .filter(|r| !r.pass)
        .map(|r| {
            let nu = r.params["nu"]
                .as_array()
                .expect("nu")
                .iter()
                .filter_map(|x| x.as_u64())
                .collect();
            (param(r, "k"), param(r, "l"), nu)
        })
        .collect();
    Outcome {
        pass: ids.pass() && failing.is_empty(),
        expected: ids.pass() && failing == vec![(4, 1, vec![2])],
        summary: format!("{}; failing I4 shapes (k, ℓ, ν): {failing:?}", counts.join(", ")),
    }
}

fn run_all<T: Sync>(items: &[T], f: impl Fn(&T) -> VerifyReport + Sync + Send) -> Vec<VerifyReport> {
    items.par_iter().map(f).collect()
}

fn summarize(label: &str, reports: &[VerifyReport]) -> (bool, String) {
    let refs: Vec<&VerifyReport> = reports.iter().collect();
    let (p, t) = tally(&refs);
    (p == t, format!("{label} {p}/{t}"))
}

fn omega_invariance() -> Outcome {
    let mut cases = Vec::new();
    for k in 1..=3 {
        for deg in 0..=7 {
            for lambda in k_bounded_partitions(deg, k) {
                for ell in 1..=k {
                    cases.push((k, ell, lambda.clone()));
                }
            }
        }
    }
    let reports = run_all(&cases, |(k, ell, l)| {
        verify_omega_invariance(*k, *ell, l).expect("propnouv")
    });
    let (ok, s) = summarize("propnouv", &reports);
    Outcome::plain(ok, s)
}

fn rectangle_action() -> Outcome {
    let mut cases = Vec::new();
    for k in 1..=3 {
        for deg in 0..=6 {
            for lambda in k_bounded_partitions(deg, k) {
                for ell in 1..=k {
                    cases.push((k, ell, lambda.clone()));
                }
            }
        }
    }
    let action = run_all(&cases, |(k, ell, l)| {
        verify_rectangle_action(*k, *ell, l).expect("theorec")
    });
    let product = run_all(&cases, |(k, ell, l)| {
        verify_rectangle_product(*k, *ell, l).expect("product")
    });
    let (a, sa) = summarize("theorec", &action);
    let (b, sb) = summarize("conjrecschur", &product);
    Outcome::plain(a && b, format!("{sa}, {sb}"))
}

fn irreducibility() -> Outcome {
    let counts: Vec<VerifyReport> = (1..=5)
        .map(|k| verify_irreducible_count(k).expect("count"))
        .collect();
    let mut cases = Vec::new();
    for k in 1..=3 {
        for deg in 0..=8 {
            for lambda in k_bounded_partitions(deg, k) {
                cases.push((k, lambda));
            }
        }
    }
    let reduce = run_all(&cases, |(k, l)| verify_reduction(*k, l).expect("reduce"));
    let (a, sa) = summarize("k! irreducibles for k = 1..5", &counts);
    let (b, sb) = summarize("reduce and rebuild", &reduce);
    Outcome::plain(a && b, format!("{sa}, {sb}"))
}

fn appendix() -> Outcome {
    let checks = appendix_instances(8, 20);
    let reports = run_all(&checks, |c| c.run().expect("appendix"));
    let mut by_id: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for r in &reports {
        let e = by_id.entry(r.id.as_str()).or_default();
        e.0 += r.pass as usize;
        e.1 += 1;
    }
    let pass = reports.iter().all(|r| r.pass);
    let s: Vec<String> = by_id.iter().map(|(id, (p, t))| format!("{id} {p}/{t}")).collect();
    Outcome::plain(pass, s.join(", "))
}

fn integer_terms(f: &SymFunc) -> Vec<(Vec<usize>, BigInt)> {
    integer_coeffs(f)
        .expect("integer coefficients")
        .into_iter()
        .map(|(p, c)| (parts(&p), c))
        .collect()
}

fn cross_oracle() -> Outcome {
    let mut pairs = Vec::new();
    for n in 0..=8 {
        for j in 0..=n {
            for l in partitions_of(j) {
                for m in partitions_of(n - j) {
                    pairs.push((l.clone(), m));
                }
            }
        }
    }
    let bad_products: Vec<String> = pairs
        .par_iter()
        .filter_map(|(l, m)| {
            let lib = multiply(&SymFunc::schur(l.clone()), &SymFunc::schur(m.clone())).expect("multiply");
            let lhs = common::schur_sum_monomial_coeffs(&integer_terms(&lib));
            let rhs = common::product_monomial_coeffs(&parts(l), &parts(m));
            (lhs != rhs).then(|| format!("{l}*{m}"))
        })
        .collect();
    let mut bad_pleth = Vec::new();
    for i in 1..=6 {
        let lib: BTreeMap<Vec<usize>, Vec<BigRational>> = hook_plethysm(i)
            .iter()
            .map(|(p, c)| {
                let mut v: Vec<BigRational> = c
                    .coeffs()
                    .iter()
                    .cloned()
                    .map(BigRational::from_integer)
                    .collect();
                while v
                    .last()
                    .is_some_and(|x| x == &BigRational::from_integer(0.into()))
                {
                    v.pop();
                }
                (parts(p), v)
            })
            .collect();
        if lib != common::hook_plethysm(i) {
            bad_pleth.push(i);
        }
    }
    Outcome::plain(
        bad_products.is_empty() && bad_pleth.is_empty(),
        format!(
            "{} products with |λ|+|μ| ≤ 8, mismatches {bad_products:?}; plethysm i = 1..6, mismatches {bad_pleth:?}",
            pairs.len()
        ),
    )
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_kschur"))
            .args(["verify", "--suite", "all", "--max-degree", "6"])
            .output()
            .expect("run kschur")
    };
    let a = run();
    let b = run();
    let same = a.stdout == b.stdout;
    let codes = (a.status.code(), b.status.code());
    Outcome::plain(
        same && codes == (Some(0), Some(0)) && !a.stdout.is_empty(),
        format!(
            "{} bytes, identical: {same}, exit codes {codes:?}",
            a.stdout.len()
        ),
    )
}

type Criterion<'a> = Box<dyn FnOnce() -> Outcome + 'a>;

fn main() {
    let literal = OnceLock::new();
    let literal = || literal.get_or_init(|| sweep("literal", 8, false).expect("literal sweep"));

    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "Hall-Littlewood triangularity",
            Box::new(hall_littlewood_triangularity),
        ),
        ("t=1 collapse", Box::new(collapse_at_one)),
        (
            "product formula sweep",
            Box::new(|| theorem1(&sweep("theorem1", 8, false).expect("theorem1 sweep"), literal())),
        ),
        (
            "rectangle identities",
            Box::new(|| {
                identities(
                    &sweep("identities", 8, false).expect("identities sweep"),
                    literal(),
                )
            }),
        ),
        ("Omega invariance", Box::new(omega_invariance)),
        ("rectangle action", Box::new(rectangle_action)),
        ("irreducibility", Box::new(irreducibility)),
        ("appendix suite", Box::new(appendix)),
        ("cross-oracle", Box::new(cross_oracle)),
        ("determinism", Box::new(determinism)),
    ];
    let mut unexpected = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let note = if o.expected { "" } else { " UNEXPECTED" };
        println!(
            "criterion {:>2} {verdict}{note} [{name}; tolerance {TOLERANCE}; {:.1}s] {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.summary
        );
        unexpected += !o.expected as usize;
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria differ from their recorded outcome");
        std::process::exit(1);
    }
}
