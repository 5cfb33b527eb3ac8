//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use malmquist_core::bounds::count_bound;
use malmquist_core::parse::parse_equation;
use malmquist_core::resultant::{bezout_cofactors, resultant, Target};
use malmquist_core::solver::in_box;
use malmquist_core::{solve_all, BiForm, EquationKind, MonOrder, Rat, SolveOptions, UPoly};
use num_bigint::BigUint;
use num_traits::{Pow, ToPrimitive};
use rand::Rng;
use serde_json::Value;

const WORKED: &str = "(w^2 + w + 2*z^3)/w";

type Check = fn() -> Result<String, String>;

fn malmquist(args: &[&str]) -> Result<(i32, Value, Duration), String> {
    let t = Instant::now();
    let o = Command::new(env!("CARGO_BIN_EXE_malmquist"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let code = o.status.code().ok_or("killed by signal")?;
    let v = serde_json::from_slice(&o.stdout)
        .map_err(|e| format!("{e}; stderr: {}", String::from_utf8_lossy(&o.stderr)))?;
    Ok((code, v, elapsed))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn solution_set(v: &Value) -> BTreeSet<String> {
    v["solutions"]
        .as_array()
        .map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect())
        .unwrap_or_default()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn worked_example_bounds() -> Result<String, String> {
    let (code, v, t) = malmquist(&["bounds", "--kind", "difference", "--equation", WORKED])?;
    ensure(code == 0, format!("exit code {code}"))?;
    let b = &v["bounds"];
    ensure(b["degree"] == 9, format!("degree bound {}", b["degree"]))?;
    // height_magnitude is exp(H) exactly (the divisor is 1 here)
    let mag: BigUint = b["height_magnitude"].as_str().ok_or("no magnitude")?.parse().map_err(|_| "bad magnitude")?;
    let mag = mag.to_f64().unwrap();
    let rel = (mag / 8.2e40 - 1.0).abs();
    ensure(rel < 0.01, format!("exp(height) = {mag:.4e}, {:.2}% from 8.2e40", rel * 100.0))?;
    ensure(t < Duration::from_secs(1), format!("took {t:?}"))?;
    Ok(format!("degree bound 9, exp(height) = {mag:.4e} ({:.2}% from 8.2e40), {:.2} s", rel * 100.0, t.as_secs_f64()))
}

fn worked_example_solution() -> Result<String, String> {
    let (code, v, t) = malmquist(&["solve", "--kind", "difference", "--equation", WORKED, "--max-degree", "2"])?;
    ensure(code == 0, format!("k <= 2 run exit code {code}"))?;
    ensure(t < Duration::from_secs(60), format!("k <= 2 took {t:?}"))?;
    for k in 0..=2 {
        let s = &v["per_degree"][k]["status"];
        ensure(s == "resolved" || s == "no-solutions", format!("k = {k} is {s}"))?;
    }
    ensure(solution_set(&v) == set(&["z^2"]), format!("k <= 2 solutions {:?}", solution_set(&v)))?;

    let (code, _, _) = malmquist(&["verify", "--kind", "difference", "--equation", WORKED, "--f", "z^2", "--output", "json"])?;
    ensure(code == 0, "verify rejected z^2")?;

    // Full attempt over every degree up to the bound, under a global budget.
    let (code, v, full) = malmquist(&[
        "solve", "--kind", "difference", "--equation", WORKED,
        "--chart-seconds", "5", "--total-seconds", "540",
    ])?;
    ensure(code == 0 || code == 2, format!("full run exit code {code}"))?;
    ensure(full < Duration::from_secs(600), format!("full run took {full:?}"))?;
    ensure(solution_set(&v).contains("z^2"), "full run lost z^2")?;
    let mut resolved = Vec::new();
    let mut open = Vec::new();
    for k in 0..=9 {
        let d = &v["per_degree"][k];
        match d["status"].as_str() {
            Some("resolved" | "no-solutions") => resolved.push(k),
            Some("unresolved") => {
                let charts = d["charts"].as_array().cloned().unwrap_or_default();
                let bad: Vec<&str> = charts
                    .iter()
                    .filter(|c| c["status"] == "unresolved")
                    .map(|c| c["id"].as_str().unwrap_or("?"))
                    .collect();
                let explained = d["detail"].is_string()
                    || (!bad.is_empty()
                        && charts.iter().filter(|c| c["status"] == "unresolved").all(|c| c["detail"].is_string()));
                ensure(explained, format!("k = {k} unresolved without a reported reason"))?;
                open.push(format!("k={k} [{}]", bad.join(",")));
            }
            other => return Err(format!("k = {k} has status {other:?}")),
        }
    }
    ensure(code == 2 || open.is_empty(), "unresolved degrees but exit code 0")?;
    let open = if open.is_empty() { "none".to_string() } else { open.join(" ") };
    Ok(format!(
        "z^2 found and verified, k <= 2 resolved in {:.2} s; full k <= 9 run {:.0} s, resolved k = {resolved:?}, unresolved charts reported: {open}",
        t.as_secs_f64(),
        full.as_secs_f64()
    ))
}

fn degenerate(kind: &str, eq: &str, expected: &[&str]) -> Result<String, String> {
    let (code, v, t) = malmquist(&["solve", "--kind", kind, "--equation", eq])?;
    ensure(code == 0, format!("exit code {code}"))?;
    ensure(v["status"] == "resolved", format!("status {}", v["status"]))?;
    ensure(v["bounds"]["degree"] == 0, format!("degree bound {}", v["bounds"]["degree"]))?;
    let got = solution_set(&v);
    ensure(got == set(expected), format!("solutions {got:?}"))?;
    let kind_enum = if kind == "difference" { EquationKind::Difference } else { EquationKind::Differential };
    let r = parse_equation(kind_enum, eq).map_err(|e| e.to_string())?;
    let oracle = support::oracle(&r, 1, 3);
    ensure(oracle == got, format!("brute force found {oracle:?}"))?;
    ensure(t < Duration::from_secs(1), format!("took {t:?}"))?;
    Ok(format!("degree bound 0, solutions {got:?} match brute force, {:.2} s", t.as_secs_f64()))
}

fn degenerate_difference() -> Result<String, String> {
    degenerate("difference", "w^2", &["0", "1"])
}

fn degenerate_differential() -> Result<String, String> {
    degenerate("differential", "w^3 - w", &["-1", "0", "1"])
}

fn resultant_fixture() -> Result<String, String> {
    let p = BiForm::from_ints(&[&[1], &[], &[0, 1]]);
    let q = BiForm::from_ints(&[&[], &[1], &[]]);
    let res = resultant(&p, &q).map_err(|e| e.to_string())?;
    let z = UPoly::from_ints(&[0, 1]);
    ensure(res == z || res == -&z, format!("Res = {res}"))?;
    for (i, target, slot) in [(0, Target::Y, 3), (1, Target::X, 0)] {
        let (a, b) = bezout_cofactors(&p, &q, target).map_err(|e| e.to_string())?;
        let mut want = vec![UPoly::zero(); 4];
        want[slot] = res.clone();
        let lhs = a.mul(&p).add(&b.mul(&q));
        ensure(lhs == BiForm::new(want), format!("cofactor identity fails for i = {i}"))?;
    }
    Ok(format!("Res(X^2 + zY^2, XY) = {res}; A_i P + B_i Q = Res X_i^3 exactly for i = 0, 1"))
}

fn property_suites() -> Result<String, String> {
    use support::*;
    run_cases(500, 1, |g| {
        let kind = random_kind(g);
        let d = g.gen_range(2..=3);
        let r = random_req(g, kind, d, 2, 3);
        degree_lemma(&r, &random_ratfunc(g, 3, 4))
    })
    .map_err(|e| format!("degree inequality: {e}"))?;
    run_cases(200, 2, |g| {
        let f = random_ratfunc(g, 5, 50);
        shift_height(&f)?;
        derivative_height(&f)
    })
    .map_err(|e| format!("shift/derivative heights: {e}"))?;
    run_cases(100, 3, |g| {
        let kind = random_kind(g);
        let d = g.gen_range(2..=3);
        let r = random_req(g, kind, d, 2, 3);
        height_lemma(&r, &random_ratfunc(g, 3, 6))
    })
    .map_err(|e| format!("height inequality: {e}"))?;
    run_cases(200, 4, |g| {
        let kind = random_kind(g);
        let d = g.gen_range(2..=3);
        let r = random_req(g, kind, d, 2, 3);
        let k = g.gen_range(0..=2);
        let c: Vec<Rat> = (0..2 * k + 2).map(|_| Rat::from_integer(g.gen_range(-4i64..=4).into())).collect();
        phi_matches_substitution(&r, &c)
    })
    .map_err(|e| format!("coefficient forms: {e}"))?;
    let mut bases = 0;
    run_cases(200, 5, |g| {
        let gens = random_ideal(g);
        if gens.is_empty() {
            return Ok(());
        }
        let order = if g.gen_bool(0.5) { MonOrder::grevlex(3) } else { MonOrder::lex(3) };
        if groebner_closed(&gens, &order)? {
            bases += 1;
        }
        Ok(())
    })
    .map_err(|e| format!("Groebner closure: {e}"))?;
    ensure(bases >= 100, format!("only {bases} random bases computed"))?;
    let mut identities = 0;
    for kind in [EquationKind::Difference, EquationKind::Differential] {
        for d in kind.min_degree()..=6 {
            for degz in 0..=4 {
                count_identity(kind, d, degz)?;
                identities += 1;
            }
        }
    }
    Ok(format!(
        "degree 500, shift+derivative 200, height 100, forms 200 cases; {bases} random bases closed \
         (solver bases are checked by debug assertions); {identities} count identities"
    ))
}

fn oracle_equivalence() -> Result<String, String> {
    use rand::SeedableRng;
    let mut g = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let opts = SolveOptions { max_degree: Some(1), ..SolveOptions::default() };
    let n = 24;
    let mut with_solutions = 0;
    for i in 0..n {
        let kind = if i % 3 == 2 { EquationKind::Differential } else { EquationKind::Difference };
        let r = support::random_admissible_req(&mut g, kind, 1, 3);
        let rep = solve_all(&r, &opts).map_err(|e| e.to_string())?;
        ensure(!rep.any_unresolved(), format!("R = {r} left unresolved"))?;
        let got: BTreeSet<String> = rep
            .solutions
            .iter()
            .filter(|f| f.degree() <= 1 && in_box(f, 3))
            .map(|f| f.to_string())
            .collect();
        let want = support::oracle(&r, 1, 3);
        ensure(got == want, format!("R = {r} ({kind}): solver {got:?}, brute force {want:?}"))?;
        with_solutions += usize::from(!got.is_empty());
    }
    Ok(format!("{n} random equations agree ({with_solutions} with solutions in the box)"))
}

fn count_fixture() -> Result<String, String> {
    let got = count_bound(EquationKind::Difference, 2, 3).map_err(|e| e.to_string())?;
    let three = BigUint::from(3u32);
    let direct: BigUint = (0..=9u32).map(|k| Pow::pow(&three, 3 * k + 3)).sum();
    let want: BigUint = "213810021790596".parse().unwrap();
    ensure(got == want && direct == want, format!("count bound {got}, direct sum {direct}"))?;
    Ok(format!("count_bound(difference, 2, 3) = {got} = sum of 3^(3k+3) for k = 0..9"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 8] = [
        ("worked example, bounds", worked_example_bounds),
        ("worked example, solution", worked_example_solution),
        ("degenerate difference R = w^2", degenerate_difference),
        ("degenerate differential R = w^3 - w", degenerate_differential),
        ("resultant fixture and cofactor identity", resultant_fixture),
        ("property suites", property_suites),
        ("oracle equivalence", oracle_equivalence),
        ("count-bound fixture", count_fixture),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(msg) => println!("criterion {} PASS {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
