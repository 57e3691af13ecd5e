//! Acceptance criteria 1 to 12. Each test prints one line
//! `criterion N PASS|FAIL ...` and fails if the criterion is not met.

use std::io::Write;
use std::time::{Duration, Instant};

use bnclass_core::certify::{self, Verdict};
use bnclass_core::chern;
use bnclass_core::error::Error;
use bnclass_core::pairing::{self, EngineConfig, PairingEngine, Quotient};
use bnclass_core::poly::int;
use bnclass_core::porteous;
use bnclass_core::suites::{AppendixSuite, HankelSuite, PairingSuite, SuiteParams, VerifySuite};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

/// Prints the criterion line and fails the test unless it passed in budget.
fn conclude(n: u32, title: &str, passed: bool, detail: &str, start: Instant, budget: Option<Duration>) {
    let elapsed = start.elapsed();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let ok = passed && in_time;
    let status = if ok { "PASS" } else { "FAIL" };
    let budget_note = match budget {
        Some(b) if !in_time => format!(" over budget {}s", b.as_secs()),
        _ => String::new(),
    };
    // bypass the test harness capture so every criterion line reaches the log
    let line =
        format!("criterion {n} {status} {title} [{:.2}s{budget_note}] {detail}\n", elapsed.as_secs_f64());
    std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
    assert!(ok, "criterion {n} failed: {detail}");
}

fn suite_detail(rep: &bnclass_core::suites::SuiteReport) -> String {
    rep.checks
        .iter()
        .map(|c| format!("{} {}: {}", if c.passed { "ok" } else { "FAILED" }, c.name, c.detail))
        .collect::<Vec<_>>()
        .join("; ")
}

#[test]
fn criterion_01_golden_chern_polynomials() {
    let start = Instant::now();
    let (ok, detail) = bnclass_core::suites::ChernSuite::golden().unwrap();
    conclude(1, "golden Chern polynomials", ok, &detail, start, secs(1));
}

#[test]
fn criterion_02_ideal_identities() {
    let start = Instant::now();
    let (a, da) = PairingSuite::decompositions().unwrap();
    let (b, db) = PairingSuite::memberships().unwrap();
    conclude(2, "ideal identities", a && b, &format!("{da}; {db}"), start, secs(5));
}

#[test]
fn criterion_03_factorization() {
    let start = Instant::now();
    let mut ok = true;
    let mut constants = Vec::new();
    for r in 1..=3 {
        for k in 1..=6 {
            match porteous::verify_factorization(r, k) {
                Ok(rep) => {
                    ok &= rep.verified
                        && rep.c != int(0)
                        && rep.multiplicities == porteous::predicted_roots(r, k);
                    constants.push(format!("c({r},{k}) = {}", rep.c));
                }
                Err(e) => {
                    ok = false;
                    constants.push(format!("({r},{k}): {e}"));
                }
            }
        }
    }
    conclude(3, "P_k(1, beta, 0) factorization", ok, &constants.join(", "), start, secs(120));
}

#[test]
fn criterion_04_product_formula() {
    let start = Instant::now();
    let mut ok = true;
    for r in 1..=8 {
        let c = chern::chern_table_gamma0(r, 2 * r as usize).get(2 * r as i64);
        let one = bnclass_core::poly::Poly::one(&bnclass_core::poly::Ring::canonical());
        ok &= c.specialize(&[("a", one)]) == chern::c2r_product(r);
        ok &= bnclass_core::appendix::verify_top_tilde_product(r);
    }
    for r in 1..=4 {
        for n in 0..=12 {
            ok &= bnclass_core::appendix::verify_bridge(r, n).unwrap();
        }
    }
    conclude(
        4,
        "c_2r product formula",
        ok,
        "r <= 8 via the Chern recurrence and via the integer recurrence; bridge r <= 4, n <= 12",
        start,
        secs(10),
    );
}

#[test]
fn criterion_05_vanishing_on_discriminant() {
    let start = Instant::now();
    let (ok, detail) = bnclass_core::suites::ChernSuite::discriminant_vanishing(6).unwrap();
    conclude(5, "c_n(alpha, alpha^2, 0) = 0 for r+1 <= n <= 2r+12, r <= 6", ok, &detail, start, secs(30));
}

#[test]
fn criterion_06_hankel_suite() {
    let start = Instant::now();
    let params = SuiteParams {
        r_max: Some(3),
        k_max: Some(6),
        u_max: Some(8),
        p_max: Some(97),
        n_max: Some(10),
        ..Default::default()
    };
    let rep = HankelSuite.run(&params);
    conclude(
        6,
        "closed forms, congruences, Hankel/Schur, block identity",
        rep.passed(),
        &suite_detail(&rep),
        start,
        secs(120),
    );
}

const BEST_POSSIBLE: [(u32, u32); 9] =
    [(1, 5), (1, 9), (2, 4), (2, 6), (2, 8), (2, 9), (3, 4), (3, 6), (3, 7)];

fn remark_cells() -> Vec<(u32, u32)> {
    let mut cells: Vec<(u32, u32)> = (4..=10).map(|k| (1, k)).collect();
    cells.extend((2..=3).flat_map(|r| (4..=8).map(move |k| (r, k))));
    // named cases outside the grid
    for cell in BEST_POSSIBLE {
        if !cells.contains(&cell) {
            cells.push(cell);
        }
    }
    cells
}

#[test]
fn criterion_07_certificates_at_gprime() {
    let start = Instant::now();
    let mut ok = true;
    let mut lines = Vec::new();
    for (r, k) in remark_cells() {
        let cell_start = Instant::now();
        let g = certify::thresholds(r, k).g_prime;
        let verdict = certify::certify(r, k, g, "direct").map(|c| c.verdict);
        let fast = cell_start.elapsed() <= Duration::from_secs(60);
        let good = matches!(verdict, Ok(Verdict::Nonzero)) && fast;
        ok &= good;
        if !good || BEST_POSSIBLE.contains(&(r, k)) {
            lines.push(format!("({r},{k},g={g}) {verdict:?}"));
        }
    }
    conclude(7, "direct certificates at g'", ok, &lines.join(", "), start, secs(1200));
}

fn sampled_theorem_cells() -> Vec<(u32, u32)> {
    let mut grid: Vec<(u32, u32)> = (1..=5).flat_map(|r| (1..=10).map(move |k| (r, k))).collect();
    grid.shuffle(&mut StdRng::seed_from_u64(0x5eed));
    grid.truncate(20);
    grid.sort_unstable();
    grid
}

#[test]
fn criterion_08_theorem_mode() {
    let start = Instant::now();
    let mut ok = true;
    let mut lines = Vec::new();
    for (r, k) in sampled_theorem_cells() {
        let g = certify::thresholds(r, k).g_thm;
        let t = certify::certify(r, k, g, "theorem36").map(|c| c.verdict);
        let d = certify::certify(r, k, g, "direct").map(|c| c.verdict);
        let good = matches!(t, Ok(Verdict::Nonzero)) && matches!(d, Ok(Verdict::Nonzero));
        ok &= good;
        lines.push(format!("({r},{k},g={g}){}", if good { "" } else { " disagree" }));
    }
    conclude(8, "theorem36 certificates at g_thm, direct agrees", ok, &lines.join(" "), start, None);
}

#[test]
fn criterion_09_q_congruence() {
    let start = Instant::now();
    let mut triples: Vec<(u32, u32, u64)> =
        remark_cells().into_iter().map(|(r, k)| (r, k, certify::thresholds(r, k).g_prime)).collect();
    triples.extend(sampled_theorem_cells().into_iter().map(|(r, k)| (r, k, certify::thresholds(r, k).g_thm)));
    triples.sort_unstable();
    triples.dedup();
    let mut certified = 0;
    let mut odd_k = Vec::new();
    let mut outside = Vec::new();
    let mut other = Vec::new();
    for (r, k, g) in triples {
        if certify::certify(r, k, g, "direct").unwrap().verdict != Verdict::Nonzero {
            continue;
        }
        certified += 1;
        let q = certify::fold_q(r, k, g).unwrap();
        if q.nonzero && q.literal_congruence {
            continue;
        }
        let cell = format!("({r},{k},{g})");
        if !certify::q_bound_holds(r, k, g) {
            outside.push(cell);
        } else if k % 2 == 1 && q.nonzero && q.signed_congruence {
            odd_k.push(cell);
        } else {
            other.push(cell);
        }
    }
    let ok = odd_k.is_empty() && outside.is_empty() && other.is_empty();
    let detail = format!(
        "{certified} certified triples; literal congruence fails for odd k (holds up to (-1)^k): [{}]; \
         at g = K/3+1, outside the bound on q: [{}]; other: [{}]",
        odd_k.join(" "),
        outside.join(" "),
        other.join(" ")
    );
    conclude(9, "q != 0 and q(x^2) = P_k(1, x^2, 0) mod g", ok, &detail, start, None);
}

#[test]
fn criterion_10_genus_three_pairings() {
    let start = Instant::now();
    let p2 = porteous::virtual_class(1, 2).unwrap().poly;
    let normalised = pairing::evaluate_class(&p2, 3, &Quotient).unwrap() == int(1);
    let mut ok = normalised;
    let mut values = Vec::new();
    for (m, n, p) in pairing::top_monomials(3) {
        let v = Quotient.pair(m, n, p, 3).unwrap();
        ok &= v.is_integer() && pairing::satisfies_residue_law(&v, m, n, p, 3).unwrap();
        values.push(format!("({m},{n},{p})={v}"));
    }
    let detail = format!("P_2 pairs to 1: {normalised}; {}", values.join(" "));
    conclude(10, "genus 3 pairings integral with their residues mod 3", ok, &detail, start, secs(1));
}

#[test]
fn criterion_11_appendix_suite() {
    let start = Instant::now();
    let rep = AppendixSuite.run(&SuiteParams { n_max: Some(8), r_max: Some(8), ..Default::default() });
    conclude(11, "appendix identities", rep.passed(), &suite_detail(&rep), start, secs(60));
}

#[test]
fn criterion_12_closed_form_engine() {
    let start = Instant::now();
    // the unconditional checks must not depend on the closed form
    let off = EngineConfig { thaddeus: false };
    let unavailable = matches!(pairing::thaddeus_pair(6, 0, 0, 3, off), Err(Error::EngineUnavailable(_)));
    let without = PairingSuite.run(&SuiteParams { engines: off, ..Default::default() });
    let config = EngineConfig::default();
    let (ok, detail) = if config.thaddeus {
        PairingSuite::thaddeus(config).unwrap()
    } else {
        (true, "engine not configured, criterion vacuous".to_string())
    };
    let detail = format!(
        "configured: {}; {detail}; unconfigured engine refuses: {unavailable}; quotient checks without it pass: {}",
        config.thaddeus,
        without.passed()
    );
    conclude(12, "closed-form pairing engine", ok && unavailable && without.passed(), &detail, start, None);
}
