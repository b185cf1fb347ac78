//! Verification suites: each scenario sets a closed form against an
//! exhaustive computation and records every comparison.

use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use toricode_core::evalcode::{hilbert_function, monomials, regularity_index};
use toricode_core::formulas::{
    complete_max, cycle_length, cycle_min_distance, equality_condition, even_cycle_regularity,
    incomplete_max, path_zero_count, theorem_branch, torus_min_distance, torus_regularity,
};
use toricode_core::poly::Polynomial;
use toricode_core::toricset::expected_length;
use toricode_core::zeros::{
    linear_zeros, max_zeros_search, path_form, projective_linear_forms, pullback, z_count,
    zeros_on_x, zeros_via_pullback, FormClass,
};
use toricode_core::{Elem, Error, FiniteField, Graph, LinearCode, ToricSet};

use crate::report::{Comparison, RunReport, StageTiming, Status, VerificationReport};
use crate::search;
use crate::spec::{parse_field, GraphSpec};

pub const SUITES: &[&str] = &[
    "length",
    "lemma-path",
    "lemma-pullback",
    "prop-incomplete",
    "prop-complete",
    "theorem",
    "dimension",
    "regularity",
    "torus",
    "duality",
    "all",
];

/// One reproducible check. Serialized inside reports so `--replay` can
/// rerun it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Scenario {
    Length { graph: String, field: String, gated: bool },
    LemmaPath { k: u32, q: u32, r: u32, samples: u32, seed: u64 },
    LemmaPullback { k: u32, q: u32 },
    PropIncomplete { k: u32, q: u32 },
    PropComplete { k: u32, q: u32 },
    Theorem { k: u32, q: u32 },
    Dimension { k: u32, q: u32 },
    CycleRegularity { k: u32, q: u32 },
    TorusRegularity { s: u32, q: u32 },
    /// C₄ = K_{2,2} distance against the square of the torus distance.
    TorusIdentity { q: u32 },
    TorusDistance { s: u32, q: u32, d: u32 },
    Duality { k: u32, q: u32, forms: u32, seed: u64 },
}

impl Scenario {
    pub fn suite(&self) -> &'static str {
        match self {
            Scenario::Length { .. } => "length",
            Scenario::LemmaPath { .. } => "lemma-path",
            Scenario::LemmaPullback { .. } => "lemma-pullback",
            Scenario::PropIncomplete { .. } => "prop-incomplete",
            Scenario::PropComplete { .. } => "prop-complete",
            Scenario::Theorem { .. } => "theorem",
            Scenario::Dimension { .. } => "dimension",
            Scenario::CycleRegularity { .. } | Scenario::TorusRegularity { .. } => "regularity",
            Scenario::TorusIdentity { .. } | Scenario::TorusDistance { .. } => "torus",
            Scenario::Duality { .. } => "duality",
        }
    }

    pub fn graph(&self) -> String {
        match self {
            Scenario::Length { graph, .. } => graph.clone(),
            Scenario::LemmaPath { k, r, .. } => format!("path:{r} in {} variables", 2 * k),
            Scenario::LemmaPullback { k, .. }
            | Scenario::PropIncomplete { k, .. }
            | Scenario::PropComplete { k, .. }
            | Scenario::Theorem { k, .. }
            | Scenario::Dimension { k, .. }
            | Scenario::CycleRegularity { k, .. }
            | Scenario::Duality { k, .. } => format!("cycle:{}", 2 * k),
            Scenario::TorusRegularity { s, .. } | Scenario::TorusDistance { s, .. } => {
                format!("path:{}", s + 1)
            }
            Scenario::TorusIdentity { .. } => "kbip:2,2".into(),
        }
    }

    pub fn field(&self) -> String {
        match self {
            Scenario::Length { field, .. } => field.clone(),
            Scenario::LemmaPath { q, .. }
            | Scenario::LemmaPullback { q, .. }
            | Scenario::PropIncomplete { q, .. }
            | Scenario::PropComplete { q, .. }
            | Scenario::Theorem { q, .. }
            | Scenario::Dimension { q, .. }
            | Scenario::CycleRegularity { q, .. }
            | Scenario::TorusRegularity { q, .. }
            | Scenario::TorusIdentity { q }
            | Scenario::TorusDistance { q, .. }
            | Scenario::Duality { q, .. } => q.to_string(),
        }
    }

    pub fn degree(&self) -> Option<u32> {
        match self {
            Scenario::Theorem { .. }
            | Scenario::Dimension { .. }
            | Scenario::TorusIdentity { .. }
            | Scenario::Duality { .. }
            | Scenario::PropIncomplete { .. }
            | Scenario::PropComplete { .. }
            | Scenario::LemmaPullback { .. } => Some(1),
            Scenario::TorusDistance { d, .. } => Some(*d),
            _ => None,
        }
    }

    pub fn gated(&self) -> bool {
        !matches!(self, Scenario::Length { gated: false, .. })
    }

    pub fn label(&self) -> String {
        match self {
            Scenario::Length { graph, field, .. } => format!("{graph} q={field}"),
            Scenario::LemmaPath { k, q, r, .. } => format!("k={k} q={q} r={r}"),
            Scenario::LemmaPullback { k, q }
            | Scenario::PropIncomplete { k, q }
            | Scenario::PropComplete { k, q }
            | Scenario::Theorem { k, q }
            | Scenario::Dimension { k, q }
            | Scenario::CycleRegularity { k, q }
            | Scenario::Duality { k, q, .. } => format!("k={k} q={q}"),
            Scenario::TorusRegularity { s, q } => format!("s={s} q={q}"),
            Scenario::TorusIdentity { q } => format!("q={q}"),
            Scenario::TorusDistance { s, q, d } => format!("s={s} q={q} d={d}"),
        }
    }
}

pub const THEOREM_GRID: [(u32, u32); 8] = [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 3), (4, 4), (5, 3)];
pub const LEMMA_GRID: [(u32, u32); 3] = [(2, 3), (2, 4), (3, 3)];
pub const PROPOSITION_GRID: [(u32, u32); 4] = [(2, 3), (2, 4), (2, 5), (3, 3)];
pub const LEMMA_SAMPLES: u32 = 20;
pub const DUALITY_FORMS: u32 = 100;

/// Graphs whose point count is reported but not gated.
pub const MIXED_GRAPHS: [&str; 5] = [
    "cycle:3+cycle:4",
    "cycle:3+cycle:3",
    "cycle:3+empty:1",
    "cycle:5+path:2",
    "cycle:3+cycle:5",
];

/// The scenarios of a suite, or `None` for an unknown suite name.
pub fn suite_scenarios(name: &str, seed: u64) -> Option<Vec<Scenario>> {
    let mut out = Vec::new();
    let all = name == "all";
    let want = |s: &str| all || name == s;
    if !SUITES.contains(&name) {
        return None;
    }
    if want("length") {
        let mut add = |graph: String, fields: &[u32], gated: bool| {
            for q in fields {
                out.push(Scenario::Length { graph: graph.clone(), field: q.to_string(), gated });
            }
        };
        for n in [4, 6, 8, 10] {
            add(format!("cycle:{n}"), &[3, 4, 5], true);
        }
        for n in 2..=5 {
            add(format!("path:{n}"), &[3, 4, 5], true);
        }
        for n in [3, 5] {
            add(format!("cycle:{n}"), &[3, 5], true);
        }
        for b in [2, 3] {
            add(format!("kbip:2,{b}"), &[3, 4], true);
        }
        for g in MIXED_GRAPHS {
            add(g.to_string(), &[3, 4, 5], false);
        }
    }
    if want("lemma-path") {
        for (k, q) in LEMMA_GRID {
            for r in 2..=2 * k {
                out.push(Scenario::LemmaPath { k, q, r, samples: LEMMA_SAMPLES, seed });
            }
        }
    }
    if want("lemma-pullback") {
        out.extend(LEMMA_GRID.map(|(k, q)| Scenario::LemmaPullback { k, q }));
    }
    if want("prop-incomplete") {
        out.extend(PROPOSITION_GRID.map(|(k, q)| Scenario::PropIncomplete { k, q }));
    }
    if want("prop-complete") {
        out.extend(PROPOSITION_GRID.map(|(k, q)| Scenario::PropComplete { k, q }));
    }
    if want("theorem") {
        out.extend(THEOREM_GRID.map(|(k, q)| Scenario::Theorem { k, q }));
    }
    if want("dimension") {
        for k in 2..=5 {
            for q in [3, 4, 5] {
                out.push(Scenario::Dimension { k, q });
            }
        }
    }
    if want("regularity") {
        for (k, q) in [(2, 3), (2, 4), (3, 3), (2, 5), (3, 4)] {
            out.push(Scenario::CycleRegularity { k, q });
        }
        for s in 1..=3 {
            for q in [3, 4, 5] {
                out.push(Scenario::TorusRegularity { s, q });
            }
        }
    }
    if want("torus") {
        for q in [3, 4, 5, 7] {
            out.push(Scenario::TorusIdentity { q });
        }
        for (s, q, top) in [(2, 3, 1), (2, 4, 2), (2, 5, 3), (2, 7, 5), (3, 3, 2), (3, 4, 4), (3, 5, 3)] {
            for d in 1..=top {
                out.push(Scenario::TorusDistance { s, q, d });
            }
        }
    }
    if want("duality") {
        out.extend(THEOREM_GRID.map(|(k, q)| Scenario::Duality { k, q, forms: DUALITY_FORMS, seed }));
    }
    Some(out)
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub budget: u64,
    pub workers: usize,
    pub seed: u64,
}

pub fn run_suite(name: &str, opts: &RunOptions) -> anyhow::Result<RunReport> {
    let scenarios = suite_scenarios(name, opts.seed)
        .ok_or_else(|| anyhow!("unknown suite {name:?}; expected one of {}", SUITES.join(", ")))?;
    Ok(run_scenarios(name, scenarios, opts))
}

/// Runs scenarios in parallel; reports come back ordered by id.
pub fn run_scenarios(suite: &str, scenarios: Vec<Scenario>, opts: &RunOptions) -> RunReport {
    let mut counters = std::collections::BTreeMap::<&str, usize>::new();
    let jobs: Vec<(String, Scenario)> = scenarios
        .into_iter()
        .map(|s| {
            let n = counters.entry(s.suite()).or_default();
            *n += 1;
            (format!("{}-{:03}", s.suite(), n), s)
        })
        .collect();
    let mut reports = search::run_ordered(&jobs, opts.workers, |(id, s)| run_scenario(id, s, opts.budget));
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    RunReport::new(suite, opts.budget, opts.seed, reports)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayCheck {
    pub id: String,
    pub identical: bool,
}

/// Reruns every recorded scenario with the recorded budget and compares
/// statuses and comparisons.
pub fn replay(recorded: &RunReport, workers: usize) -> Vec<ReplayCheck> {
    let fresh = search::run_ordered(&recorded.reports, workers, |r| {
        run_scenario(&r.id, &r.scenario, recorded.budget)
    });
    recorded
        .reports
        .iter()
        .zip(fresh)
        .map(|(old, new)| ReplayCheck { id: old.id.clone(), identical: old.same_numbers(&new) })
        .collect()
}

struct Ctx {
    budget: u64,
    comparisons: Vec<Comparison>,
    timings: Vec<StageTiming>,
    note: Option<String>,
}

impl Ctx {
    fn stage<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let micros = start.elapsed().as_micros() as u64;
        match self.timings.iter_mut().find(|t| t.stage == name) {
            Some(t) => t.micros += micros,
            None => self.timings.push(StageTiming { stage: name.to_string(), micros }),
        }
        out
    }

    fn compare(&mut self, quantity: impl Into<String>, expected: (&str, i128), computed: (&str, i128)) {
        self.comparisons.push(Comparison::new(quantity, expected, computed));
    }
}

fn int(b: &BigUint) -> anyhow::Result<i128> {
    i128::try_from(b).map_err(|_| anyhow!("{b} does not fit in 128 bits"))
}

fn gf(q: u32) -> anyhow::Result<FiniteField> {
    Ok(FiniteField::with_order(q)?)
}

fn cycle_set(ctx: &mut Ctx, k: u32, field: &FiniteField) -> anyhow::Result<ToricSet> {
    let g = Graph::cycle(2 * k as usize)?;
    let budget = ctx.budget;
    Ok(ctx.stage("enumerate", || ToricSet::enumerate(&g, field, budget))?)
}

fn rng_for(seed: u64, parts: &[u32]) -> ChaCha8Rng {
    let mixed = parts.iter().fold(seed, |acc, &p| {
        acc.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(p as u64 + 1)
    });
    ChaCha8Rng::seed_from_u64(mixed)
}

fn random_unit(field: &FiniteField, rng: &mut ChaCha8Rng) -> Elem {
    Elem::new(rng.random_range(1..field.order()) as u16)
}

fn exhaustive_distance(ctx: &mut Ctx, x: &ToricSet, d: u32) -> anyhow::Result<LinearCode> {
    let mut code = ctx.stage("evaluation matrix", || LinearCode::from_toric(x, d))?;
    let budget = ctx.budget;
    let dist = ctx.stage("minimum distance", || search::min_distance(&code, 1, budget))?;
    code.set_minimum_distance(dist);
    Ok(code)
}

pub fn run_scenario(id: &str, scenario: &Scenario, budget: u64) -> VerificationReport {
    let mut ctx = Ctx { budget, comparisons: Vec::new(), timings: Vec::new(), note: None };
    let result = execute(&mut ctx, scenario);
    let status = match &result {
        Ok(()) if !ctx.comparisons.is_empty() && ctx.comparisons.iter().all(|c| c.pass) => Status::Pass,
        Ok(()) => Status::Fail,
        Err(e) => match e.downcast_ref::<Error>() {
            Some(Error::BudgetExceeded { required, budget }) => {
                ctx.note = Some(format!("budget exceeded: needs {required}, budget is {budget}"));
                Status::Skipped
            }
            _ => {
                ctx.note = Some(format!("error: {e:#}"));
                Status::Fail
            }
        },
    };
    VerificationReport {
        id: id.to_string(),
        suite: scenario.suite().to_string(),
        label: scenario.label(),
        scenario: scenario.clone(),
        graph: scenario.graph(),
        field: scenario.field(),
        degree: scenario.degree(),
        gated: scenario.gated(),
        status,
        comparisons: ctx.comparisons,
        timings: ctx.timings,
        note: ctx.note,
    }
}

fn execute(ctx: &mut Ctx, scenario: &Scenario) -> anyhow::Result<()> {
    let budget = ctx.budget;
    match *scenario {
        Scenario::Length { ref graph, ref field, .. } => {
            let g = graph.parse::<GraphSpec>()?.build()?;
            let f = parse_field(field)?;
            let x = ctx.stage("enumerate", || ToricSet::enumerate(&g, &f, budget))?;
            let expected = ctx.stage("formula", || expected_length(&g, &f))?;
            ctx.compare("|X|", ("expected_length", int(&expected)?), ("enumeration", x.len() as i128));
        }
        Scenario::LemmaPath { k, q, r, samples, seed } => {
            let f = gf(q)?;
            let n = 2 * k as usize;
            if r < 2 || r as usize > n {
                bail!("path support r = {r} outside [2, {n}]");
            }
            let expected = int(&path_zero_count(r, q, k)?)?;
            let mut rng = rng_for(seed, &[k, q, r]);
            for i in 0..samples {
                let betas: Vec<Elem> = (1..r).map(|_| random_unit(&f, &mut rng)).collect();
                let form = path_form(&f, &betas, n)?;
                let z = ctx.stage("z_count", || z_count(&[form], n, &f, budget))?;
                ctx.compare(format!("z, sample {i}"), ("path_zero_count", expected), ("z_count", z as i128));
            }
        }
        Scenario::LemmaPullback { k, q } => {
            let f = gf(q)?;
            let x = cycle_set(ctx, k, &f)?;
            let g = x.graph().clone();
            let n = g.vertex_count();
            let scale = (q as i128 - 1).pow(2);
            let (mut bad, mut lhs, mut rhs, mut forms) = (0i128, 0i128, 0i128, 0i128);
            ctx.stage("forms", || -> anyhow::Result<()> {
                for coeffs in projective_linear_forms(&f, x.ambient_dim()) {
                    let form = Polynomial::linear(&f, &coeffs);
                    let on_x = zeros_on_x(&form, &x)? as i128;
                    let z = z_count(&[pullback(&f, &form, &g)?], n, &f, budget)? as i128;
                    forms += 1;
                    lhs += on_x * scale;
                    rhs += z;
                    bad += i128::from(on_x * scale != z);
                }
                Ok(())
            })?;
            ctx.compare("forms violating the pullback identity", ("identity", 0), ("exhaustive", bad));
            ctx.compare("total zeros over all forms", ("(q-1)^2 * zeros on X", lhs), ("z_count of pullbacks", rhs));
            ctx.note = Some(format!("{forms} projective linear forms"));
        }
        Scenario::PropIncomplete { k, q } => {
            let f = gf(q)?;
            let x = cycle_set(ctx, k, &f)?;
            let best = ctx.stage("search", || max_zeros_search(&x, FormClass::Incomplete, budget))?;
            let expected = int(&incomplete_max(k, q)?)?;
            ctx.compare("max zeros, incomplete forms", ("incomplete_max", expected), ("max_zeros_search", best.max as i128));
            let mut witness = vec![Elem::ZERO; x.ambient_dim()];
            witness[0] = Elem::ONE;
            witness[1] = f.neg(Elem::ONE);
            ctx.compare(
                "zeros of t1 - t2",
                ("incomplete_max", expected),
                ("evaluation", linear_zeros(&f, &witness, &x) as i128),
            );
            ctx.compare(
                "t1 - t2 among maximizers",
                ("witness", 1),
                ("max_zeros_search", i128::from(best.maximizers.contains(&witness))),
            );
        }
        Scenario::PropComplete { k, q } => {
            let f = gf(q)?;
            let x = cycle_set(ctx, k, &f)?;
            let best = ctx.stage("search", || max_zeros_search(&x, FormClass::Complete, budget))?;
            ctx.compare(
                "max zeros, complete forms",
                ("complete_max", int(&complete_max(k, q)?)?),
                ("max_zeros_search", best.max as i128),
            );
            let locus: BTreeSet<Vec<Elem>> = ctx.stage("equality locus", || {
                projective_linear_forms(&f, x.ambient_dim())
                    .filter(|a| FormClass::Complete.contains(a))
                    .filter(|a| equality_condition(&f, a).unwrap_or(false))
                    .collect()
            });
            let found: BTreeSet<Vec<Elem>> = best.maximizers.into_iter().collect();
            ctx.compare("maximizers", ("equality_condition", locus.len() as i128), ("max_zeros_search", found.len() as i128));
            ctx.compare(
                "symmetric difference of argmax and locus",
                ("set equality", 0),
                ("max_zeros_search", locus.symmetric_difference(&found).count() as i128),
            );
        }
        Scenario::Theorem { k, q } => {
            let f = gf(q)?;
            let x = cycle_set(ctx, k, &f)?;
            let code = exhaustive_distance(ctx, &x, 1)?;
            let dist = code.cached_minimum_distance().expect("distance computed");
            ctx.compare("length", ("cycle_length", int(&cycle_length(k, q)?)?), ("enumeration", x.len() as i128));
            ctx.compare("dimension", ("2k", 2 * k as i128), ("rank", code.dimension() as i128));
            ctx.compare(
                "minimum distance",
                ("cycle_min_distance", int(&cycle_min_distance(k, q)?)?),
                ("exhaustive", dist as i128),
            );
            ctx.compare("singleton bound", ("holds", 1), ("exhaustive", i128::from(code.satisfies_singleton(dist))));
            ctx.note = Some(format!("branch {}", theorem_branch(k, q)?));
        }
        Scenario::Dimension { k, q } => {
            let f = gf(q)?;
            let x = cycle_set(ctx, k, &f)?;
            let h = ctx.stage("rank", || hilbert_function(&x, 1));
            ctx.compare("hilbert function at 1", ("2k", 2 * k as i128), ("rank", h as i128));
        }
        Scenario::CycleRegularity { k, q } => {
            let f = gf(q)?;
            let x = cycle_set(ctx, k, &f)?;
            let reg = ctx.stage("rank saturation", || regularity_index(&x, budget))?;
            ctx.compare(
                "regularity index",
                ("even_cycle_regularity", even_cycle_regularity(k, q)? as i128),
                ("rank saturation", reg as i128),
            );
        }
        Scenario::TorusRegularity { s, q } => {
            let f = gf(q)?;
            let g = Graph::path(s as usize + 1)?;
            let x = ctx.stage("enumerate", || ToricSet::enumerate(&g, &f, budget))?;
            let reg = ctx.stage("rank saturation", || regularity_index(&x, budget))?;
            ctx.compare("|X|", ("(q-1)^(s-1)", (q as i128 - 1).pow(s - 1)), ("enumeration", x.len() as i128));
            ctx.compare(
                "regularity index",
                ("torus_regularity", torus_regularity(s, q)? as i128),
                ("rank saturation", reg as i128),
            );
        }
        Scenario::TorusIdentity { q } => {
            let f = gf(q)?;
            let square = ctx.stage("enumerate", || ToricSet::enumerate(&Graph::complete_bipartite(2, 2)?, &f, budget))?;
            let line = ctx.stage("enumerate", || ToricSet::enumerate(&Graph::path(3)?, &f, budget))?;
            let c4 = exhaustive_distance(ctx, &square, 1)?.cached_minimum_distance().unwrap_or(0) as i128;
            let t1 = exhaustive_distance(ctx, &line, 1)?.cached_minimum_distance().unwrap_or(0) as i128;
            let cycle = int(&cycle_min_distance(2, q)?)?;
            let torus = int(&torus_min_distance(2, q, 1)?)?;
            ctx.compare("closed forms", ("cycle_min_distance(2,q)", cycle), ("torus_min_distance(2,q,1)^2", torus * torus));
            ctx.compare("kbip:2,2 distance", ("cycle_min_distance", cycle), ("exhaustive", c4));
            ctx.compare("square of path:3 distance", ("torus_min_distance^2", torus * torus), ("exhaustive", t1 * t1));
        }
        Scenario::TorusDistance { s, q, d } => {
            let f = gf(q)?;
            let g = Graph::path(s as usize + 1)?;
            let x = ctx.stage("enumerate", || ToricSet::enumerate(&g, &f, budget))?;
            let dist = exhaustive_distance(ctx, &x, d)?.cached_minimum_distance().unwrap_or(0) as i128;
            ctx.compare("minimum distance", ("torus_min_distance", int(&torus_min_distance(s, q, d)?)?), ("exhaustive", dist));
        }
        Scenario::Duality { k, q, forms, seed } => {
            let f = gf(q)?;
            let x = cycle_set(ctx, k, &f)?;
            let code = ctx.stage("evaluation matrix", || LinearCode::from_toric(&x, 1))?;
            let s = x.ambient_dim();
            // Row i of the generator belongs to the i-th degree-1 monomial.
            let var_of_row: Vec<usize> = monomials(s, 1)
                .map(|e| e.iter().position(|&v| v == 1).expect("degree-one monomial"))
                .collect();
            let mut rng = rng_for(seed, &[k, q]);
            let m = x.len() as i128;
            let (mut via_code, mut via_pullback) = (0i128, 0i128);
            for _ in 0..forms {
                let coeffs = loop {
                    let c: Vec<Elem> = (0..s).map(|_| Elem::new(rng.random_range(0..q) as u16)).collect();
                    if c.iter().any(|e| !e.is_zero()) {
                        break c;
                    }
                };
                let form = Polynomial::linear(&f, &coeffs);
                let on_x = ctx.stage("evaluate", || zeros_on_x(&form, &x))? as i128;
                let weight = ctx.stage("codeword", || {
                    let mut word = vec![Elem::ZERO; x.len()];
                    for (row, &var) in var_of_row.iter().enumerate() {
                        let c = coeffs[var];
                        for (w, &g) in word.iter_mut().zip(code.generator().row(row)) {
                            *w = f.add(*w, f.mul(c, g));
                        }
                    }
                    word.iter().filter(|e| !e.is_zero()).count() as i128
                });
                let pulled = ctx.stage("pullback", || zeros_via_pullback(&form, &x, budget))? as i128;
                via_code += i128::from(m - weight != on_x);
                via_pullback += i128::from(pulled != on_x);
            }
            ctx.compare("forms violating m - weight = zeros", ("duality", 0), ("exhaustive", via_code));
            ctx.compare("forms where pullback count differs", ("duality", 0), ("exhaustive", via_pullback));
        }
    }
    Ok(())
}

/// Reads a saved run for `--replay`.
pub fn load_run(text: &str) -> anyhow::Result<RunReport> {
    serde_json::from_str(text).context("not a verification report")
}
