//! Cross-check suites behind the `verify` subcommand.

use std::collections::BTreeSet;
use std::thread;

use vfcomb::cells::{classify_cells, transversal_cells};
use vfcomb::counting::{
    c_total, c_total_closed, catalan, coeffs_algebraic, dimension_distribution,
    dimension_distribution_closed, type_distribution, zero_dimension_entries, CountTable,
};
use vfcomb::enumerate::{brute_count, brute_force_histogram, enumerate};
use vfcomb::model::{to_separatrix, to_transversal};
use vfcomb::moduli::{burnside_count, orbit_count_by_canonical_form, rotate};
use vfcomb::{asymptotics, parse, render, BigUint, PairingConfig};

/// Largest degree accepted by `verify`.
pub const MAX_DEGREE: usize = 40;
const ENUMERATION_LIMIT: usize = 6;
const BRUTE_FORCE_LIMIT: usize = 7;
const ORBIT_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub failures: Vec<String>,
    pub detail: String,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Suite = fn(usize) -> (Vec<String>, String);

fn counts(max: usize) -> (Vec<String>, String) {
    let mut failures = Vec::new();
    let algebraic = coeffs_algebraic(max);
    for d in 1..=max {
        let di = d as i64;
        let rec = c_total(di).unwrap();
        let mut routes = vec![
            ("closed form", c_total_closed(di).unwrap()),
            ("cubic", algebraic[d - 1].clone()),
        ];
        if d <= BRUTE_FORCE_LIMIT {
            routes.push((
                "brute force",
                BigUint::from(brute_count(2 * di - 2).unwrap()),
            ));
        }
        for (name, v) in routes {
            if v != rec {
                failures.push(format!("d={d}: {name} {v}, recursion {rec}"));
            }
        }
    }
    let brute = max.min(BRUTE_FORCE_LIMIT);
    (failures, format!("d<={max}, brute force to d={brute}"))
}

fn dimensions(max: usize) -> (Vec<String>, String) {
    let mut failures = Vec::new();
    for d in 1..=max {
        let table = CountTable::build(d as i64, false).unwrap();
        failures.extend(table.check().into_iter().map(|f| format!("d={d}: {f}")));
        if d <= ENUMERATION_LIMIT {
            let hist = brute_force_histogram(2 * (d - 1));
            let mut by_q = vec![BigUint::from(0u32); 2 * d - 1];
            for ((s, h), v) in hist {
                by_q[2 * s + h] += v;
            }
            if by_q != table.by_dimension {
                failures.push(format!("d={d}: brute-force histogram differs"));
            }
        }
    }
    let bound = max.min(50);
    let zeros = zero_dimension_entries(bound);
    let positivity = if zeros.is_empty() {
        format!("all c_(d,q) positive for d<={bound}")
    } else {
        format!("zero entries for d<={bound}: {zeros:?}")
    };
    (failures, format!("d<={max}; {positivity}"))
}

fn catalan_top(max: usize) -> (Vec<String>, String) {
    let failures = (1..=max)
        .filter_map(|d| {
            let v = dimension_distribution_closed(d as i64).unwrap();
            let cat = catalan(d as i64 - 1).unwrap();
            (v[2 * (d - 1)] != cat).then(|| format!("d={d}: top {} vs {cat}", v[2 * (d - 1)]))
        })
        .collect();
    (failures, format!("d<={max}"))
}

fn types(max: usize) -> (Vec<String>, String) {
    let top = max.min(30);
    let mut failures = Vec::new();
    for d in 1..=top {
        // marginal checks run inside and panic on mismatch
        let t = type_distribution(d as i64).unwrap();
        let dims = dimension_distribution(d as i64).unwrap();
        let mut marginal = vec![BigUint::from(0u32); dims.len()];
        for (&(s, h), v) in &t {
            marginal[2 * s + h] += v;
        }
        if marginal != dims {
            failures.push(format!("d={d}: marginals differ"));
        }
    }
    (failures, format!("d<={top}"))
}

fn enumeration(max: usize) -> (Vec<String>, String) {
    let top = max.min(ENUMERATION_LIMIT);
    let mut failures = Vec::new();
    let mut total = 0;
    for d in 1..=top {
        let all: Vec<PairingConfig> = enumerate(d).unwrap().collect();
        let unique: BTreeSet<&PairingConfig> = all.iter().collect();
        if unique.len() != all.len() {
            failures.push(format!("d={d}: duplicates"));
        }
        if BigUint::from(all.len()) != c_total(d as i64).unwrap() {
            failures.push(format!("d={d}: {} configurations", all.len()));
        }
        for c in &all {
            total += 1;
            let text = render(c);
            if parse(&text).as_ref() != Ok(c) {
                failures.push(format!("{text}: render/parse mismatch"));
            }
            let t = c.to_transversal();
            let round_trip = to_separatrix(&t).and_then(|s| {
                let back = to_transversal(&s)?;
                let report = classify_cells(&s)?;
                Ok((back, report, s))
            });
            match round_trip {
                Ok((back, report, s)) => {
                    let inv = c.invariants();
                    if back != t {
                        failures.push(format!("{text}: conversion not inverse"));
                    }
                    if !c.is_empty() && report.total() != c.len() + 1 - s.classes().len() {
                        failures.push(format!("{text}: cell count {}", report.total()));
                    }
                    if transversal_cells(&t).len() != inv.h + inv.s + 1 {
                        failures.push(format!("{text}: transversal cell count"));
                    }
                }
                Err(e) => failures.push(format!("{text}: {e}")),
            }
        }
    }
    (failures, format!("{total} configurations, d<={top}"))
}

fn constants(_: usize) -> (Vec<String>, String) {
    let c = asymptotics::exact_constants();
    let mut failures = Vec::new();
    if !c.kappa_defect().is_zero() {
        failures.push("kappa identity".to_string());
    }
    if c.lambda_from_rho() != c.lambda {
        failures.push("lambda identity".to_string());
    }
    (failures, "exact in Q(sqrt 5)".to_string())
}

fn moduli(max: usize) -> (Vec<String>, String) {
    let top = max.min(ORBIT_LIMIT);
    let mut failures = Vec::new();
    for d in 2..=top {
        let di = d as i64;
        let b = burnside_count(di).unwrap();
        let o = orbit_count_by_canonical_form(di).unwrap();
        if b != o {
            failures.push(format!("d={d}: burnside {b}, orbits {o}"));
        }
        for c in enumerate(d).unwrap() {
            let r = rotate(&c, 1).unwrap();
            if r.invariants() != c.invariants() || rotate(&r, d as i64 - 2).unwrap() != c {
                failures.push(format!("d={d}: rotation law fails on {}", render(&c)));
            }
        }
    }
    (failures, format!("2<=d<={top}"))
}

const SUITES: [(&str, Suite); 7] = [
    ("counts agree", counts),
    ("dimension identities", dimensions),
    ("catalan top dimension", catalan_top),
    ("type marginals", types),
    ("enumeration, round trip and cells", enumeration),
    ("exact constants", constants),
    ("rotation and orbits", moduli),
];

/// Runs every suite concurrently; results come back in a fixed order.
pub fn run_all(max_degree: usize) -> Vec<SuiteResult> {
    thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|&(name, suite)| (name, scope.spawn(move || suite(max_degree))))
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| match h.join() {
                Ok((failures, detail)) => SuiteResult {
                    name,
                    failures,
                    detail,
                },
                Err(e) => SuiteResult {
                    name,
                    failures: vec![format!(
                        "panicked: {}",
                        e.downcast_ref::<String>()
                            .cloned()
                            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                            .unwrap_or_default()
                    )],
                    detail: String::new(),
                },
            })
            .collect()
    })
}
