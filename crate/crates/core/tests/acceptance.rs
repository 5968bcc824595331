//! Acceptance gate: runs every criterion of the verification plan at its
//! stated grid and prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use affine_schur::verify::{
    acceptance_plan, PlanEntry, Status, SuiteRegistry, VerificationReport, DEFAULT_LPRIMES, MORITA_LABEL,
    OUTSIDE_MORITA_LABEL,
};

type Runs = [(PlanEntry, VerificationReport)];

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Option<Duration>,
    extra: fn(&Runs) -> Result<(), String>,
}

fn window_count(n: usize, r: usize) -> usize {
    let c = (4 * n).pow(r as u32);
    if c <= 5000 {
        c
    } else {
        0
    }
}

fn trials_at_least(runs: &Runs, min: impl Fn(&PlanEntry) -> usize) -> Result<(), String> {
    for (e, rep) in runs {
        // `count` is a single closed-form case, not a vector identity.
        for res in rep.results.iter().filter(|r| r.status != Status::Skipped && r.id != "count") {
            if res.trials < min(e) {
                return Err(format!("{} {} ran {} inputs, wanted {}", rep.suite, res.id, res.trials, min(e)));
            }
        }
    }
    Ok(())
}

fn qcomb_extra(runs: &Runs) -> Result<(), String> {
    let rep = &runs[0].1;
    let trials = |id: &str| rep.results.iter().find(|r| r.id == id).map(|r| r.trials);
    for lp in 2..=12 {
        let want = [("lemma-m-t", 861), ("cor-m-l", 81), ("cor-m-injectivity", 401 * 401)];
        for (name, count) in want {
            let id = format!("{name}[l'={lp}]");
            if trials(&id) != Some(count) {
                return Err(format!("{id}: expected {count} instances, got {:?}", trials(&id)));
            }
        }
    }
    if trials("formula-x") != Some(31) {
        return Err("formula-x must cover m = 0..=30".into());
    }
    Ok(())
}

fn sampled_and_exhaustive(runs: &Runs) -> Result<(), String> {
    trials_at_least(runs, |e| 100 + window_count(e.config.n, e.config.r))
}

fn exhaustive(runs: &Runs) -> Result<(), String> {
    trials_at_least(runs, |e| window_count(e.config.n, e.config.r).max(1))?;
    for (_, rep) in runs {
        if !rep.results.iter().any(|r| r.id.starts_with("two-route") && r.status == Status::Pass) {
            return Err("missing the two-route comparison".into());
        }
    }
    Ok(())
}

fn schur_extra(runs: &Runs) -> Result<(), String> {
    for (e, rep) in runs {
        let (n, big_n, r) = (e.config.n, e.config.big_n.unwrap(), e.config.r);
        let want = if big_n >= n && n >= r { MORITA_LABEL } else { OUTSIDE_MORITA_LABEL };
        if rep.labels != [want] {
            return Err(format!("(n, N, r) = ({n}, {big_n}, {r}) labelled {:?}", rep.labels));
        }
        for id in ["rho-bijection", "rho-injective", "e-idempotent"] {
            if !rep.results.iter().any(|x| x.id == id && x.status == Status::Pass) {
                return Err(format!("({n}, {big_n}, {r}): {id} did not run"));
            }
        }
    }
    Ok(())
}

fn specialization_extra(runs: &Runs) -> Result<(), String> {
    trials_at_least(runs, |_| 100)?;
    for (_, rep) in runs {
        for lp in DEFAULT_LPRIMES {
            let tag = format!("l'={lp}]");
            if !rep.results.iter().any(|r| r.id.ends_with(&tag)) {
                return Err(format!("no checks at l' = {lp}"));
            }
        }
    }
    Ok(())
}

fn none(_: &Runs) -> Result<(), String> {
    Ok(())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "q-combinatorics lemmas", budget: Some(Duration::from_secs(60)), extra: qcomb_extra },
        Criterion { id: 2, title: "Hecke presentation", budget: Some(Duration::from_secs(120)), extra: sampled_and_exhaustive },
        Criterion { id: 3, title: "Schur-Weyl commutation", budget: Some(Duration::from_secs(120)), extra: sampled_and_exhaustive },
        Criterion { id: 4, title: "weight idempotents", budget: None, extra: exhaustive },
        Criterion { id: 5, title: "level-zero loop algebra relations", budget: None, extra: none },
        Criterion { id: 6, title: "Schur functor substrate", budget: Some(Duration::from_secs(120)), extra: schur_extra },
        Criterion { id: 7, title: "specialization naturality", budget: None, extra: specialization_extra },
        Criterion { id: 8, title: "harness sensitivity", budget: None, extra: none },
    ];
    let registry = SuiteRegistry::with_builtins();
    let plan = acceptance_plan();
    let mut all_ok = true;
    for c in &criteria {
        let start = Instant::now();
        let mut runs = Vec::new();
        let mut problem = None;
        for entry in plan.iter().filter(|e| e.criterion == c.id) {
            match registry.run(entry.suite, &entry.config) {
                Ok(rep) => {
                    if let Some(f) = rep.failures().next() {
                        problem.get_or_insert_with(|| {
                            format!(
                                "{} {:?}: {} failed: {}",
                                rep.suite,
                                (entry.config.n, entry.config.r, entry.config.lprime),
                                f.id,
                                serde_json::to_string(&f.counterexample).unwrap()
                            )
                        });
                    }
                    runs.push((entry.clone(), rep));
                }
                Err(e) => {
                    problem.get_or_insert_with(|| format!("{}: {e}", entry.suite));
                }
            }
        }
        let elapsed = start.elapsed();
        if problem.is_none() {
            problem = (c.extra)(&runs).err();
        }
        if problem.is_none() {
            if let Some(b) = c.budget {
                if elapsed > b {
                    problem = Some(format!("took {elapsed:.1?}, budget {b:?}"));
                }
            }
        }
        let checks: usize = runs.iter().map(|(_, r)| r.results.iter().map(|x| x.trials).sum::<usize>()).sum();
        match &problem {
            None => println!("criterion {}: PASS  {} ({} runs, {checks} checks, {elapsed:.1?})", c.id, c.title, runs.len()),
            Some(p) => {
                all_ok = false;
                println!("criterion {}: FAIL  {} ({elapsed:.1?}): {p}", c.id, c.title);
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
