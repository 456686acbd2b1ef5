//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use ftl::cli::suites::{self, OracleOptions};
use ftl::cli::run;
use ftl::family::{
    fpt_power, fpt_sum, jumping_numbers_power, jumping_numbers_sum, tau_power, tau_sum, Level, PrimeFamily, SigmaSet,
};
use ftl::geometry::rational::int;
use ftl::geometry::{dominates, format_rational, rat, Extended, Rational};
use ftl::minors::{delta_check, delta_polynomial, preset_generic, variable_index};
use ftl::monomial::{cu_closure, monomial_family, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 42;

struct Verdict {
    pass: bool,
    note: String,
}

fn verdict(pass: bool, note: impl Into<String>) -> Verdict {
    Verdict { pass, note: note.into() }
}

fn failed(note: impl Into<String>) -> Verdict {
    verdict(false, note)
}

fn set(rows: &[&[u32]]) -> SigmaSet {
    SigmaSet::new(rows.iter().map(|r| r.to_vec())).unwrap()
}

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
}

fn lambdas<T>(jumps: &[(Rational, T)]) -> Vec<Rational> {
    jumps.iter().map(|(l, _)| l.clone()).collect()
}

fn show(values: &[Rational]) -> String {
    values.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

fn oracle_equivalence() -> Verdict {
    let opts = OracleOptions { check_nu: false, ..OracleOptions::default() };
    let outcome = match suites::monomial_oracle(&opts) {
        Ok(o) => o,
        Err(e) => return failed(format!("error: {e}")),
    };
    let d = &outcome.details;
    let mut note = format!(
        "{} ideals, {} stabilized comparisons, {} unstabilized skipped, deepest q = 512/729/625",
        d["ideals"], d["comparisons"], d["unstabilized"]
    );
    for f in outcome.failures.iter().take(3) {
        note.push_str(&format!("\n      {f}"));
    }
    // Stopping p = 2 at q = 2^7 leaves the 512 cap unused; report that run too.
    let shallow = OracleOptions { e_max: 7, check_nu: false, ..OracleOptions::default() };
    if let Ok(o) = suites::monomial_oracle(&shallow) {
        note.push_str(&format!(
            "\n      with e <= 7 for every p: {} comparisons, {} premature stabilizations at p = 2",
            o.details["comparisons"],
            o.failures.len()
        ));
    }
    verdict(outcome.passed(), note)
}

fn fpt_values() -> Verdict {
    let mono = monomial_family(2).unwrap();
    let generic = preset_generic(2, 3).unwrap();
    let got = [
        fpt_sum(&mono, &set(&[&[2, 0], &[0, 3]])),
        fpt_power(&mono, &[1, 1]),
        fpt_power(&generic, &[0, 1]),
        fpt_sum(&generic, &set(&[&[1, 0], &[0, 1]])),
    ];
    let expected = [rat(5, 6), int(1), int(2), int(6)];
    let mut pass = true;
    let mut shown = Vec::new();
    for (g, e) in got.iter().zip(&expected) {
        match g {
            Ok(value) => {
                pass &= *value == Extended::Finite(e.clone());
                shown.push(value.to_string());
            }
            Err(err) => {
                pass = false;
                shown.push(format!("error {err}"));
            }
        }
    }
    verdict(pass, format!("(x1^2,x2^3), (x1x2), maximal minors, I1+I2: {}", shown.join(", ")))
}

fn nu_bracketing() -> Verdict {
    let opts = OracleOptions { compare_tau: false, ..OracleOptions::default() };
    match suites::monomial_oracle(&opts) {
        Ok(o) => {
            let mut note = format!("{} ν values over {} ideals", o.details["nu_checks"], o.details["ideals"]);
            for f in o.failures.iter().take(3) {
                note.push_str(&format!("\n      {f}"));
            }
            verdict(o.passed(), note)
        }
        Err(e) => failed(format!("error: {e}")),
    }
}

fn jumping_numbers() -> Verdict {
    let mono = monomial_family(2).unwrap();
    let mut pass = true;
    let mut notes = Vec::new();
    let cases: [(MonomialIdeal, Rational, Vec<Rational>); 2] = [
        (ideal(2, &[&[1, 1]]), int(3), vec![int(1), int(2), int(3)]),
        (ideal(2, &[&[2, 0], &[0, 2]]), int(2), vec![int(1), rat(3, 2), int(2)]),
    ];
    for (i, limit, expected) in cases {
        let sigmas = SigmaSet::new(i.gens().iter().cloned()).unwrap();
        let formula = match jumping_numbers_sum(&mono, &sigmas, &limit, Level::Representation) {
            Ok(j) => j,
            Err(e) => return failed(format!("error: {e}")),
        };
        let steps = (limit.clone() * int(12)).to_integer().try_into().unwrap_or(0);
        let oracle = match suites::oracle_jumps(&i, 12, steps, &[2, 3, 5], 9, 1000) {
            Ok(Some(j)) => j,
            Ok(None) => return failed(format!("{i}: some grid point never stabilized")),
            Err(e) => return failed(format!("error: {e}")),
        };
        let ideals_agree = formula.len() == oracle.len()
            && formula.iter().zip(&oracle).all(|((_, d), (_, j))| MonomialIdeal::new(2, d.vectors()).ok().as_ref() == Some(j));
        pass &= lambdas(&formula) == expected && lambdas(&oracle) == expected && ideals_agree;
        notes.push(format!("{i}: formula {{{}}}, oracle grid {{{}}}", show(&lambdas(&formula)), show(&lambdas(&oracle))));
    }
    let generic = preset_generic(2, 3).unwrap();
    match jumping_numbers_power(&generic, &[0, 1], &rat(7, 2), Level::Representation) {
        Ok(j) => {
            let got = lambdas(&j);
            pass &= got == vec![int(2), int(3), rat(7, 2)];
            notes.push(format!("generic 2x3 maximal minors {{{}}}", show(&got)));
        }
        Err(e) => return failed(format!("error: {e}")),
    }
    verdict(pass, notes.join("; "))
}

fn condition_a_plus() -> Verdict {
    match suites::aplus(SEED, 100) {
        Ok(o) => verdict(o.passed(), format!("{} checks on 100 random Σ, s = 1..3", o.checked)),
        Err(e) => failed(format!("error: {e}")),
    }
}

fn delta_construction() -> Verdict {
    let mut pass = true;
    let mut pairs = 0;
    for n in 1..=6 {
        for m in 1..=n {
            pairs += 1;
            let check = match delta_check(m, n) {
                Ok(c) => c,
                Err(e) => return failed(format!("{m}x{n}: {e}")),
            };
            pass &= check.cover_ok;
            if n <= 3 {
                let lead = delta_polynomial(m, n).and_then(|d| d.lex_leading());
                pass &= matches!(lead, Ok(ref l) if *l == vec![1; m * n]);
            }
        }
    }
    verdict(pass, format!("{pairs} grids covered, Δ expanded for n <= 3"))
}

fn remark_counterexample() -> Verdict {
    let delta = match delta_polynomial(2, 2) {
        Ok(d) => d,
        Err(e) => return failed(format!("error: {e}")),
    };
    let vars = [variable_index(1, 1, 2), variable_index(2, 1, 2), variable_index(2, 2, 2)];
    let ord = delta.ord_in_variables(&vars);
    let summary = delta_check(2, 2).map(|c| c.ord_counterexample);
    verdict(
        matches!(ord, Ok(2)) && matches!(summary, Ok(Some(2))),
        format!(
            "Δ = {}; order along (x11, x21, x22) = {}",
            delta.render_matrix(2),
            ord.as_ref().map(|o| o.to_string()).unwrap_or_else(|e| e.to_string())
        ),
    )
}

/// Antichains of subsets of an `n`-set, counted by checking every family
/// of subsets.
fn count_antichains(n: u32) -> usize {
    let subsets = 1u32 << n;
    (0u64..1u64 << subsets)
        .filter(|family| {
            let members: Vec<u32> = (0..subsets).filter(|s| family >> s & 1 == 1).collect();
            members.iter().all(|&a| members.iter().all(|&b| a == b || a & b != a))
        })
        .count()
}

fn cu_closure_counts() -> Verdict {
    let mut pass = true;
    let mut notes = Vec::new();
    for (n, expected) in [(2usize, 5usize), (3, 19)] {
        let reached = cu_closure(n).map(|c| c.len()).unwrap_or(0);
        let nonzero = count_antichains(n as u32) - 1;
        pass &= reached == expected && nonzero == expected;
        notes.push(format!("n = {n}: reached {reached}, brute force {nonzero}"));
    }
    verdict(pass, notes.join("; "))
}

fn gamma_coherence() -> Verdict {
    let mut pass = true;
    let mut notes = Vec::new();
    for (m, n) in [(2, 3), (3, 4), (4, 4)] {
        match suites::gamma_linearity(SEED, 100, m, n) {
            Ok(o) => {
                pass &= o.passed();
                notes.push(format!("generic:{m}x{n} {} checks", o.checked));
            }
            Err(e) => return failed(format!("error: {e}")),
        }
    }
    verdict(pass, format!("{}; I2^(2) ⊆ I1 confirmed", notes.join(", ")))
}

fn random_lambda(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(0..=48), rng.gen_range(1..=8))
}

fn is_antichain(vectors: &[Vec<u32>]) -> bool {
    vectors.iter().enumerate().all(|(i, a)| vectors.iter().enumerate().all(|(j, b)| i == j || !dominates(b, a)))
}

fn structural(family: &PrimeFamily, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = family.m();
    let rows: Vec<Vec<u32>> = (0..rng.gen_range(1..=3)).map(|_| (0..m).map(|_| rng.gen_range(0..=3)).collect()).collect();
    let sigmas = SigmaSet::new(rows).unwrap();
    let err = |e: ftl::Error| e.to_string();
    let (mut a, mut b) = (random_lambda(rng), random_lambda(rng));
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let low = tau_sum(family, &sigmas, &a).map_err(err)?.vectors();
    let high = tau_sum(family, &sigmas, &b).map_err(err)?.vectors();
    if !is_antichain(&low) || !is_antichain(&high) {
        return Err(format!("{}: non-minimal antichain", family.name()));
    }
    if !high.iter().all(|w| low.iter().any(|v| dominates(w, v))) {
        return Err(format!("{}: τ grows from λ = {a} to {b}", family.name()));
    }
    let jumps = jumping_numbers_sum(family, &sigmas, &int(2), Level::Representation).map_err(err)?;
    for pair in jumps.windows(2) {
        let mid = (&pair[0].0 + &pair[1].0) / int(2);
        if tau_sum(family, &sigmas, &mid).map_err(err)?.vectors() != pair[0].1.vectors() {
            return Err(format!("{}: τ not constant on [{}, {})", family.name(), pair[0].0, pair[1].0));
        }
    }
    let sigma: Vec<u32> = (0..m).map(|_| rng.gen_range(0..=4)).collect();
    let single = tau_sum(family, &SigmaSet::singleton(sigma.clone()), &a).map_err(err)?.vectors();
    if single != vec![tau_power(family, &sigma, &a).map_err(err)?.0] {
        return Err(format!("{}: singleton Σ = {{{sigma:?}}} disagrees with the power formula", family.name()));
    }
    Ok(())
}

fn structural_suites() -> Verdict {
    let rng = &mut ChaCha8Rng::seed_from_u64(SEED);
    let families = [monomial_family(2).unwrap(), monomial_family(3).unwrap(), preset_generic(2, 3).unwrap()];
    let mut cases = 0;
    for family in &families {
        for _ in 0..40 {
            cases += 1;
            if let Err(e) = structural(family, rng) {
                return failed(e);
            }
        }
    }
    for _ in 0..50 {
        let i = suites::random_monomial_ideal(rng);
        let q = rng.gen_range(1..=9);
        let back = i.bracket_power(q).and_then(|b| b.qth_root(q));
        if back.as_ref() != Ok(&i) {
            return failed(format!("q-th root of ({i})^[{q}] is {back:?}"));
        }
    }
    let commands: [&[&str]; 3] = [
        &["ftl", "--format", "json", "jumps", "--family", "monomial:2", "--Sigma", "2,0;0,2", "--limit", "2"],
        &["ftl", "--format", "json", "tau", "--family", "generic:2x3", "--sigma", "1,1", "--lambda", "7/2"],
        &["ftl", "--format", "json", "verify", "aplus", "--count", "10", "--seed", "7"],
    ];
    for args in commands {
        let (first, second) = (run(args.iter().copied()), run(args.iter().copied()));
        if first != second || first.code != 0 {
            return failed(format!("report for {args:?} is not reproducible"));
        }
    }
    verdict(true, format!("{cases} random τ cases, 50 root round trips, 3 reproducible reports"))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("fpt values", fpt_values),
        ("ν monotonicity and bracketing", nu_bracketing),
        ("jumping numbers", jumping_numbers),
        ("condition A+ in the monomial family", condition_a_plus),
        ("Δ construction", delta_construction),
        ("Δ order counterexample", remark_counterexample),
        ("C_u closure", cu_closure_counts),
        ("γ/e coherence", gamma_coherence),
        ("structural suites", structural_suites),
    ];
    let mut failures = BTreeSet::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = check();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag}  {name} ({:.1}s): {}", i + 1, start.elapsed().as_secs_f64(), v.note);
        if !v.pass {
            failures.insert(i + 1);
        }
    }
    if failures.is_empty() {
        println!("all {} criteria passed", criteria.len());
    } else {
        println!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
