//! The full verification grid run by `verify all`.

use super::SuiteConfig;

/// One suite run, tagged with the acceptance criterion it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanEntry {
    pub criterion: u8,
    pub suite: &'static str,
    pub config: SuiteConfig,
}

const KINDS: [Option<u32>; 6] = [None, Some(2), Some(3), Some(4), Some(5), Some(6)];

fn entry(criterion: u8, suite: &'static str, config: SuiteConfig) -> PlanEntry {
    PlanEntry { criterion, suite, config }
}

/// Every acceptance criterion at its stated grid, in criterion order, with
/// 100 seeded trials (seed 0) per identity.
pub fn acceptance_plan() -> Vec<PlanEntry> {
    let mut plan = vec![entry(1, "qcomb", SuiteConfig::new(1, 1))];
    let nr: Vec<(usize, usize)> = (1..=3).flat_map(|n| [(n, 2), (n, 3)]).collect();
    for (criterion, suite) in [(2, "hecke"), (3, "bimodule")] {
        for &(n, r) in &nr {
            for lp in KINDS {
                plan.push(entry(criterion, suite, SuiteConfig::new(n, r).with_lprime(lp)));
            }
        }
    }
    for &(n, r) in &nr {
        plan.push(entry(4, "weights", SuiteConfig::new(n, r)));
    }
    for n in 2..=3 {
        for r in 2..=3 {
            for lp in KINDS {
                plan.push(entry(5, "qla", SuiteConfig::new(n, r).with_lprime(lp)));
            }
        }
    }
    for (n, big_n, r) in [(2, 3, 2), (2, 4, 2), (3, 4, 3), (2, 3, 3)] {
        plan.push(entry(6, "schur", SuiteConfig::new(n, r).with_big_n(Some(big_n))));
    }
    for &(n, r) in &nr {
        plan.push(entry(7, "specialization", SuiteConfig::new(n, r)));
    }
    plan.push(entry(8, "self-test", SuiteConfig::new(2, 2)));
    plan
}
