//! The acceptance criteria, each with its time budget. Prints one line per
//! criterion and exits nonzero if any fails or overruns.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_triples, int, random_nonempty_triple, random_triple, rng, running, running_tableaux};
use lrbasis::bz4::reproduce_sl4_table;
use lrbasis::hwv::{delta, delta_mt, CoeffSpec};
use lrbasis::oracle::lr_coefficient;
use lrbasis::polyring::{Integer, Monomial, VarId};
use lrbasis::shapes::LRTriple;
use lrbasis::tableaux::{
    check_lr1_filling, check_lr2_filling, enumerate_lr, monomial_e, monomial_m, standard_peeling,
};
use lrbasis::verify::{
    check_basis, check_hwv, check_leading_term, factorization_sides, factorization_sides_shared_b, weight_profile,
    WeightProfile,
};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_matrix(r: &mut impl Rng, rows: usize, cols: usize) -> Vec<Vec<Integer>> {
    (0..rows).map(|_| (0..cols).map(|_| int(r.gen_range(-5..=5))).collect()).collect()
}

fn mono(s: &str) -> Monomial {
    s.parse().unwrap()
}

fn running_count() -> Outcome {
    let tr = running();
    let found: Vec<_> = enumerate_lr(&tr).iter().map(|t| t.rows().to_vec()).collect();
    let mut drawn: Vec<_> = running_tableaux().iter().map(|t| t.rows().to_vec()).collect();
    drawn.sort();
    let mut sorted = found.clone();
    sorted.sort();
    ensure(found.len() == 4, || format!("{} tableaux", found.len()))?;
    ensure(sorted == drawn, || "tableaux differ from T, T1, T2, T3".into())?;
    let c = lr_coefficient(&tr).map_err(|e| e.to_string())?;
    ensure(c == 4, || format!("oracle gives {c}"))?;
    Ok("4 tableaux, oracle 4".into())
}

fn m_fidelity() -> Outcome {
    let [t, t1, ..] = running_tableaux();
    let want_t = vec![vec![0, 0, 1, 1], vec![0, 2, 0, 0], vec![1, 0, 1, 0], vec![1, 1, 0, 0], vec![0, 0, 0, 0], vec![1, 0, 0, 0]];
    let want_t1 = vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0], vec![0, 1, 1, 0], vec![1, 1, 0, 0], vec![0, 0, 0, 0], vec![1, 0, 0, 0]];
    for (tab, want) in [(&t, want_t), (&t1, want_t1)] {
        let m = monomial_m(tab).map_err(|e| e.to_string())?;
        ensure(m.rows() == want.as_slice(), || format!("M = {m}"))?;
        ensure(m.row_sums() == [2, 2, 2, 2, 0, 1], || format!("row sums {:?}", m.row_sums()))?;
        ensure(m.col_sums() == [3, 3, 2, 1], || format!("column sums {:?}", m.col_sums()))?;
    }
    Ok("M(T), M(T1) exact".into())
}

fn e_fidelity() -> Outcome {
    let [t, t1, ..] = running_tableaux();
    let want = [
        (t, mono("y[5,3]*y[4,3]*y[5,2]*y[4,2]*y[3,2]*y[4,1]*y[3,1]*y[2,1]*y[1,1]")),
        (t1, mono("y[5,3]^2*y[4,2]^2*y[3,2]*y[4,1]*y[3,1]*y[2,1]*y[1,1]")),
    ];
    for (tab, w) in want {
        let e = monomial_e(&tab).map_err(|e| e.to_string())?;
        ensure(e == w, || format!("e = {e}"))?;
    }
    Ok("e(T), e(T1) exact".into())
}

fn leading_terms() -> Outcome {
    let tr = running();
    for (i, t) in running_tableaux().iter().enumerate() {
        let ok = check_leading_term(&tr, t).map_err(|e| e.to_string())?;
        ensure(ok, || format!("tableau {i}: leading monomial is not e(T) with coefficient ±1"))?;
    }
    Ok("4/4 tableaux".into())
}

/// Criteria 5 and 6 share one sweep of every `Δ_{M(T)}` with `|F| ≤ 10`.
struct Sweep {
    hwv: Outcome,
    weight: Outcome,
}

fn hwv_and_weight() -> Sweep {
    let mut r = rng(5);
    let mut numeric = 0;
    let mut failures = Vec::new();
    for _ in 0..10 {
        let t = random_nonempty_triple(&mut r, 8);
        for _ in 0..5 {
            let a = CoeffSpec::Numeric(random_matrix(&mut r, t.t(), t.r()));
            let b = CoeffSpec::Numeric(random_matrix(&mut r, t.t(), t.s()));
            match delta(&t, &a, &b) {
                Ok(d) if check_hwv(&d, &t) => numeric += 1,
                Ok(_) => failures.push(format!("{t} with numeric A, B")),
                Err(e) => failures.push(format!("{t}: {e}")),
            }
        }
    }
    let mut count = 0;
    let mut weight_failures = Vec::new();
    for t in all_triples(10).into_iter().filter(LRTriple::is_contained) {
        let want = WeightProfile::expected(&t);
        for tab in enumerate_lr(&t) {
            count += 1;
            let d = match delta_mt(&t, &tab) {
                Ok(d) => d,
                Err(e) => {
                    failures.push(format!("{t} {tab}: {e}"));
                    continue;
                }
            };
            if !check_hwv(&d, &t) {
                failures.push(format!("{t} {tab}"));
            }
            match weight_profile(&d) {
                Ok(w) if w == want => {}
                Ok(w) => weight_failures.push(format!("{t} {tab}: {w:?}")),
                Err(e) => weight_failures.push(format!("{t} {tab}: {e}")),
            }
        }
    }
    let hwv = if failures.is_empty() {
        Ok(format!("{numeric} numeric deltas, {count} delta_MT"))
    } else {
        Err(format!("{} failures, first {}", failures.len(), failures[0]))
    };
    let weight = if weight_failures.is_empty() {
        Ok(format!("{count} delta_MT have weight (F^t, D^t, E^t)"))
    } else {
        Err(format!("{} failures, first {}", weight_failures.len(), weight_failures[0]))
    };
    Sweep { hwv, weight }
}

fn factorization() -> Outcome {
    let mut r = rng(7);
    let mut literal_breaks = 0;
    for _ in 0..10 {
        let t = random_nonempty_triple(&mut r, 8);
        let (tt, rr, ss) = (t.t(), t.r(), t.s());
        let l: Vec<Vec<Integer>> = (0..tt)
            .map(|i| {
                (0..rr)
                    .map(|j| {
                        if i == j {
                            int([-3, -2, 2, 3][r.gen_range(0..4)])
                        } else if i > j {
                            int(r.gen_range(-4..=4))
                        } else {
                            int(0)
                        }
                    })
                    .collect()
            })
            .collect();
        let v: Vec<Vec<Integer>> = (0..rr)
            .map(|i| (0..rr).map(|j| int(if i == j { 1 } else if i < j { r.gen_range(-4..=4) } else { 0 })).collect())
            .collect();
        let b = random_matrix(&mut r, tt, ss);
        for _ in 0..8 {
            let vals: Vec<i64> = (0..4096).map(|_| r.gen_range(-50..=50)).collect();
            let pt = move |v: VarId| int(vals[(v.family() as usize * 1031 + v.i() * 37 + v.j()) % 4096]);
            let (lhs, rhs) = factorization_sides(&t, &l, &v, &b, &pt).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("{t}: {lhs} != {rhs}"))?;
            let (lhs, rhs) = factorization_sides_shared_b(&t, &l, &v, &b, &pt).map_err(|e| e.to_string())?;
            literal_breaks += (lhs != rhs) as usize;
        }
    }
    Ok(format!(
        "80/80 evaluations equal (B transported by L; with B held fixed {literal_breaks}/80 differ)"
    ))
}

fn basis_rank() -> Outcome {
    let mut r = rng(8);
    let mut triples = vec![running()];
    triples.extend((0..20).map(|_| random_nonempty_triple(&mut r, 10)));
    let mut total = 0;
    for t in &triples {
        let rep = check_basis(t).map_err(|e| e.to_string())?;
        ensure(rep.lr_count as u64 == rep.oracle_count && rep.rank == rep.lr_count, || {
            format!("{t}: count {} oracle {} rank {}", rep.lr_count, rep.oracle_count, rep.rank)
        })?;
        ensure(rep.pass, || format!("{t}: {rep:?}"))?;
        total += rep.rank;
    }
    Ok(format!("21 triples, total rank {total}"))
}

fn sl4_table() -> Outcome {
    let rows = reproduce_sl4_table();
    ensure(rows.len() == 18, || format!("{} rows", rows.len()))?;
    let bad: Vec<_> = rows.iter().filter(|r| !r.pass).collect();
    ensure(bad.is_empty(), || format!("rows failing: {bad:?}"))?;
    Ok("18/18 rows".into())
}

/// Criteria 10 and 11 share the sweep.
struct OracleSweep {
    oracle: Outcome,
    peeling: Outcome,
}

fn oracle_and_peeling() -> OracleSweep {
    let mut r = rng(10);
    let mut triples = all_triples(6);
    let exhaustive = triples.len();
    triples.extend((0..50).map(|_| random_triple(&mut r, 10)));
    let mut mismatches = Vec::new();
    let mut peel_failures = Vec::new();
    let mut tableaux = 0;
    for t in &triples {
        let tabs = enumerate_lr(t);
        match lr_coefficient(t) {
            Ok(c) if c == tabs.len() as u64 => {}
            Ok(c) => mismatches.push(format!("{t}: {} vs {c}", tabs.len())),
            Err(e) => mismatches.push(format!("{t}: {e}")),
        }
        for tab in &tabs {
            tableaux += 1;
            match standard_peeling(tab) {
                Ok(tr) => {
                    let sound = tr.strips_are_vertical()
                        && tr.remainders_are_lr()
                        && tr.remainders.iter().all(|rem| check_lr1_filling(rem) && check_lr2_filling(rem));
                    if !sound {
                        peel_failures.push(format!("{t} {tab}"));
                    }
                }
                Err(e) => peel_failures.push(format!("{t} {tab}: {e}")),
            }
        }
    }
    let oracle = if mismatches.is_empty() {
        Ok(format!("{exhaustive} exhaustive + 50 random triples, 0 mismatches"))
    } else {
        Err(format!("{} mismatches, first {}", mismatches.len(), mismatches[0]))
    };
    let peeling = if peel_failures.is_empty() {
        Ok(format!("{tableaux} tableaux peeled soundly"))
    } else {
        Err(format!("{} failures, first {}", peel_failures.len(), peel_failures[0]))
    };
    OracleSweep { oracle, peeling }
}

fn timed<T>(f: impl FnOnce() -> T) -> (Result<T, String>, Duration) {
    let start = Instant::now();
    let out = catch_unwind(AssertUnwindSafe(f)).map_err(|e| {
        e.downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into())
    });
    (out, start.elapsed())
}

struct Report {
    all_pass: bool,
}

impl Report {
    fn line(&mut self, n: usize, name: &str, outcome: Outcome, took: Duration, budget: Duration) {
        let over = took > budget;
        let pass = outcome.is_ok() && !over;
        self.all_pass &= pass;
        let detail = match &outcome {
            Ok(s) => s.clone(),
            Err(s) => s.clone(),
        };
        let timing = format!("{:.2}s / budget {}s", took.as_secs_f64(), budget.as_secs());
        let over = if over { " OVER BUDGET" } else { "" };
        println!(
            "criterion {n:>2} {:<4} {name}: {detail} [{timing}{over}]",
            if pass { "PASS" } else { "FAIL" }
        );
    }
}

fn flatten(r: Result<Outcome, String>) -> Outcome {
    r.and_then(|o| o)
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut rep = Report { all_pass: true };

    let (o, d) = timed(running_count);
    rep.line(1, "running-example LR count", flatten(o), d, secs(1));
    let (o, d) = timed(m_fidelity);
    rep.line(2, "M(T) fidelity", flatten(o), d, secs(1));
    let (o, d) = timed(e_fidelity);
    rep.line(3, "e(T) fidelity", flatten(o), d, secs(1));
    let (o, d) = timed(leading_terms);
    rep.line(4, "leading-term lemma", flatten(o), d, secs(60));

    let (o, d) = timed(hwv_and_weight);
    let (hwv, weight) = match o {
        Ok(s) => (s.hwv, s.weight),
        Err(e) => (Err(e.clone()), Err(e)),
    };
    rep.line(5, "highest-weight property", hwv, d, secs(300));
    rep.line(6, "weight profile (same sweep)", weight, d, secs(300));

    let (o, d) = timed(factorization);
    rep.line(7, "factorization identity", flatten(o), d, secs(60));
    let (o, d) = timed(basis_rank);
    rep.line(8, "basis rank", flatten(o), d, secs(600));
    let (o, d) = timed(sl4_table);
    rep.line(9, "SL4 table", flatten(o), d, secs(120));

    let (o, d) = timed(oracle_and_peeling);
    let (oracle, peeling) = match o {
        Ok(s) => (s.oracle, s.peeling),
        Err(e) => (Err(e.clone()), Err(e)),
    };
    rep.line(10, "oracle equivalence", oracle, d, secs(300));
    rep.line(11, "peeling soundness (same sweep)", peeling, d, secs(300));

    if rep.all_pass {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
