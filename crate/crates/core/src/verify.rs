//! The acceptance battery: closed-form values, bounds and limits checked
//! against the solvers with exact comparisons.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::corpus::{connected_graphs_up_to, trees};
use crate::families::*;
use crate::graph::Graph;
use crate::oracle::Oracle;
use crate::pursuit::{
    all_bounds, capture_time, capture_time_at_least, d_to_set_over_traps, extract_cop_strategy,
    z_set, GameTable, GameValue, SolveError,
};
use crate::scripts::hn::{
    hn_cop_move, hn_cop_worst_case, hn_robber_move, COP_ROUND_TWO_TABLE, COP_TABLE, ROBBER_TABLE,
};
use crate::scripts::*;
use crate::team::TeamConfig;
use crate::zero_visibility::{
    limit_probe, schedule_capture_time, zero_vis_cop_number, Verdict,
};

/// One compared value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub claim: String,
    pub expected: String,
    pub measured: String,
    pub passed: bool,
}

impl Check {
    fn new(claim: impl Into<String>, expected: impl ToString, measured: impl ToString, passed: bool) -> Self {
        Check {
            claim: claim.into(),
            expected: expected.to_string(),
            measured: measured.to_string(),
            passed,
        }
    }

    fn eq<T: PartialEq + ToString>(claim: impl Into<String>, expected: T, measured: T) -> Self {
        let passed = expected == measured;
        Check::new(claim, expected, measured, passed)
    }
}

/// Result of one acceptance criterion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: usize,
    pub suite: String,
    pub title: String,
    pub tolerance: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub seconds: f64,
}

impl CriterionReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `PASS`/`FAIL` line with the check count.
    pub fn line(&self) -> String {
        let failed = self.failures().count();
        format!(
            "[{}] criterion {} ({}): {} ({} checks, {} failed, tolerance: {}, {:.1}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.suite,
            self.title,
            self.checks.len(),
            failed,
            self.tolerance,
            self.seconds
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

impl VerifyReport {
    /// Summary lines, then every failing check.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            out.push_str(&c.line());
            out.push('\n');
            for f in c.failures() {
                out.push_str(&format!(
                    "    {}: expected {}, measured {}\n",
                    f.claim, f.expected, f.measured
                ));
            }
        }
        out.push_str(if self.passed { "all criteria passed\n" } else { "some criteria failed\n" });
        out
    }
}

/// Suite names in criterion order.
pub const SUITES: [&str; 9] = [
    "formulas",
    "hn",
    "bounds",
    "zerovis",
    "limits",
    "characterization",
    "properties",
    "divergence",
    "scripts",
];

/// Criterion number of a suite name.
pub fn suite_id(name: &str) -> Option<usize> {
    SUITES.iter().position(|&s| s == name).map(|i| i + 1)
}

/// Runs the named suites (all when empty), in criterion order.
pub fn run(suites: &[&str]) -> Result<VerifyReport, SolveError> {
    let mut ids = Vec::new();
    for s in suites {
        ids.push(suite_id(s).ok_or_else(|| {
            SolveError::InvalidParameter(format!("unknown suite {s:?}; expected one of {}", SUITES.join(", ")))
        })?);
    }
    if ids.is_empty() {
        ids = (1..=SUITES.len()).collect();
    }
    ids.sort_unstable();
    ids.dedup();
    let criteria = ids.into_iter().map(run_criterion).collect::<Result<Vec<_>, _>>()?;
    Ok(VerifyReport {
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    })
}

/// Runs one criterion by number.
pub fn run_criterion(id: usize) -> Result<CriterionReport, SolveError> {
    let start = Instant::now();
    let (title, checks) = match id {
        1 => ("exact capture-time formulas", formulas()?),
        2 => ("H(n) capture times, Z sets and tightness", hn()?),
        3 => ("upper bounds hold on the corpus", bounds()?),
        4 => ("0-visibility cop numbers", zerovis()?),
        5 => ("family limits equal 0-visibility times", limits()?),
        6 => ("limit exists iff c0 <= k, limit = 0-visibility time", characterization()?),
        7 => ("monotonicity, win-equivalence, retracts, oracle", properties()?),
        8 => ("lower bounds along growing robber counts", divergence()?),
        9 => ("scripted strategies replay within their claims", scripts()?),
        _ => return Err(SolveError::InvalidParameter(format!("no criterion {id}"))),
    };
    Ok(CriterionReport {
        id,
        suite: SUITES[id - 1].to_string(),
        title: title.to_string(),
        tolerance: "exact".to_string(),
        passed: checks.iter().all(|c| c.passed),
        checks,
        seconds: start.elapsed().as_secs_f64(),
    })
}

fn fin(t: usize) -> GameValue {
    GameValue::Finite(t as u32)
}

fn label(g: &Graph) -> String {
    g.name().map(str::to_string).unwrap_or_else(|| crate::io::to_graph6(g))
}

fn formulas() -> Result<Vec<Check>, SolveError> {
    let mut checks = Vec::new();
    for n in 2..=8 {
        let table = GameTable::solve(&path(n)?, 1, 3)?;
        for m in [2, 3] {
            checks.push(Check::eq(format!("capt(P{n},{m}) = n-1"), fin(n - 1), table.capture_time_for(m)?));
        }
    }
    for n in 3..=6 {
        let table = GameTable::solve(&complete(n)?, 1, n - 1)?;
        for m in 1..n {
            checks.push(Check::eq(format!("capt(K{n},{m}) = m"), fin(m), table.capture_time_for(m)?));
        }
    }
    for m in 1..=3 {
        let g = subdivided_star(m + 1)?;
        checks.push(Check::eq(format!("capt(T{},{m}) = 4m-2", m + 1), fin(4 * m - 2), capture_time(&g, 1, m)?));
    }
    Ok(checks)
}

fn hn() -> Result<Vec<Check>, SolveError> {
    let mut checks = Vec::new();
    for n in 7..=10 {
        let g = h_graph(n)?;
        checks.push(Check::eq(format!("capt(H({n})) = n-4"), fin(n - 4), capture_time(&g, 1, 1)?));
        let z: Vec<usize> = z_set(&g)?.into_iter().map(h_label).collect();
        checks.push(Check::eq(format!("Z(H({n})) = {{1,2}}"), "[1, 2]".to_string(), format!("{z:?}")));
    }
    let h10 = h_graph(10)?;
    let table = GameTable::solve(&h10, 1, 3)?;
    checks.push(Check::eq("capt(H(10),2) = l+2(n-4)", fin(14), table.capture_time_for(2)?));
    checks.push(Check::eq("capt(H(10),3) = 2l+3(n-4)", fin(22), table.capture_time_for(3)?));
    let z = z_set(&h10)?;
    checks.push(Check::eq("d_Z(H(10)) = l", 2, d_to_set_over_traps(&h10, &z)?));
    let general = crate::pursuit::bound_general(&h10, 3)?;
    checks.push(Check::eq("general bound on H(10), m=3, is tight", 22, general.bound.unwrap_or(0)));
    Ok(checks)
}

fn bound_corpus() -> Result<Vec<Graph>, SolveError> {
    let mut graphs = connected_graphs_up_to(2, 6)?;
    graphs.extend([path(7)?, path(8)?, h_graph(7)?, h_graph(8)?]);
    Ok(graphs)
}

fn bounds() -> Result<Vec<Check>, SolveError> {
    let graphs = bound_corpus()?;
    let names = ["diameter", "general", "2-dismantlable", "tree"];
    let mut applicable = [0usize; 4];
    let mut failures = Vec::new();
    for g in &graphs {
        for m in 1..=3 {
            for (i, r) in all_bounds(g, m)?.into_iter().enumerate() {
                if r.hypotheses_met {
                    applicable[i] += 1;
                }
                if !r.ok() {
                    failures.push(Check::new(
                        format!("{} bound on {}, m={m}", r.name, label(g)),
                        format!("<= {}", r.bound.unwrap_or(0)),
                        r.measured,
                        false,
                    ));
                }
            }
        }
    }
    let mut checks: Vec<Check> = names
        .iter()
        .zip(applicable)
        .map(|(name, count)| {
            let bad = failures.iter().filter(|f| f.claim.starts_with(&format!("{name} "))).count();
            Check::new(
                format!("{name} bound holds wherever its hypotheses hold"),
                format!("{count} of {count}"),
                format!("{} of {count}", count - bad),
                bad == 0 && count > 0,
            )
        })
        .collect();
    checks.extend(failures);
    Ok(checks)
}

fn zerovis() -> Result<Vec<Check>, SolveError> {
    let mut checks = Vec::new();
    for n in 2..=8 {
        checks.push(Check::eq(format!("c0(P{n}) = 1"), 1, zero_vis_cop_number(&path(n)?)?));
    }
    for n in 3..=7 {
        checks.push(Check::eq(format!("c0(C{n}) = 2"), 2, zero_vis_cop_number(&cycle(n)?)?));
    }
    for n in 2..=7usize {
        checks.push(Check::eq(format!("c0(K{n}) = ceil(n/2)"), n.div_ceil(2), zero_vis_cop_number(&complete(n)?)?));
    }
    for n in 1..=5 {
        for m in 1..=n {
            let g = complete_bipartite(m, n)?.0;
            checks.push(Check::eq(format!("c0(K{m},{n}) = m"), m, zero_vis_cop_number(&g)?));
        }
    }
    for n in 4..=7 {
        checks.push(Check::eq(format!("c0(W{n}) = 2"), 2, zero_vis_cop_number(&wheel(n)?)?));
    }
    for n in 1..=7 {
        for t in trees(n)? {
            let c0 = zero_vis_cop_number(&t)?;
            checks.push(Check::eq(
                format!("tree {}: c0 = 1 iff caterpillar", label(&t)),
                t.is_caterpillar(),
                c0 == 1,
            ));
        }
    }
    Ok(checks)
}

/// Converged limit of `capt_k(G, m)`, if any.
fn probed_limit(g: &Graph, k: usize, max_m: usize) -> Result<(Option<u32>, GameValue), SolveError> {
    let report = limit_probe(g, k, max_m)?;
    let limit = match report.verdict {
        Verdict::Converged { limit } => Some(limit),
        _ => None,
    };
    Ok((limit, report.zero_vis_time))
}

/// Two checks per family member: the limit exists and equals the
/// 0-visibility time, and it matches the closed formula.
fn limit_checks(checks: &mut Vec<Check>, name: &str, formula: &str, g: &Graph, k: usize, expected: usize, max_m: usize) -> Result<(), SolveError> {
    let (limit, zv) = probed_limit(g, k, max_m)?;
    let shown = limit.map_or("no limit by max_m".to_string(), |l| l.to_string());
    checks.push(Check::new(
        format!("lim capt_{k}({name}, m) = 0-visibility time"),
        zv,
        &shown,
        limit.is_some() && limit.map(GameValue::Finite) == Some(zv),
    ));
    checks.push(Check::new(
        format!("lim capt_{k}({name}, m) = {formula}"),
        expected,
        shown,
        limit == Some(expected as u32),
    ));
    Ok(())
}

fn limits() -> Result<Vec<Check>, SolveError> {
    let mut checks = Vec::new();
    for n in 2..=4 {
        limit_checks(&mut checks, &format!("K1,{n}"), "2n-1", &star(n)?, 1, 2 * n - 1, 12)?;
    }
    for n in 2..=7 {
        for t in trees(n)?.into_iter().filter(Graph::is_caterpillar) {
            let l = t.leaves().len();
            limit_checks(&mut checks, &format!("caterpillar {}", label(&t)), "n+l-2", &t, 1, n + l - 2, 12)?;
        }
    }
    for n in 4..=7 {
        limit_checks(&mut checks, &format!("C{n}"), "floor((n-1)/2)", &cycle(n)?, 2, (n - 1) / 2, 8)?;
    }
    for n in 5..=7 {
        limit_checks(&mut checks, &format!("W{n}"), "n-3", &wheel(n)?, 2, n - 3, 8)?;
    }
    limit_checks(&mut checks, "K4", "1", &complete(4)?, 2, 1, 8)?;
    for n in 3..=5 {
        let g = complete_bipartite(2, n)?.0;
        limit_checks(&mut checks, &format!("K2,{n}"), "2 ceil(n/2) - 2", &g, 2, 2 * n.div_ceil(2) - 2, 8)?;
    }
    Ok(checks)
}

/// Robber count up to which the characterization is probed.
pub const CHARACTERIZATION_MAX_M: usize = 10;

fn characterization() -> Result<Vec<Check>, SolveError> {
    let graphs = connected_graphs_up_to(2, 6)?;
    let mut checks = Vec::new();
    let mut agree = 0;
    let mut total = 0;
    for g in &graphs {
        let c0 = zero_vis_cop_number(g)?;
        for k in [1, 2] {
            let report = limit_probe(g, k, CHARACTERIZATION_MAX_M)?;
            let strong = c0 <= k;
            let ok = report.converged() == strong
                && match report.verdict {
                    Verdict::Converged { limit } => GameValue::Finite(limit) == report.zero_vis_time,
                    _ => true,
                };
            total += 1;
            if ok {
                agree += 1;
            } else {
                checks.push(Check::new(
                    format!("{} with k={k} (c0={c0})", label(g)),
                    format!("converged={strong}, limit {}", report.zero_vis_time),
                    format!("{:?}", report.verdict),
                    false,
                ));
            }
        }
    }
    checks.insert(
        0,
        Check::new(
            format!("probe verdict agrees with c0 <= k, max_m={CHARACTERIZATION_MAX_M}"),
            format!("{total} of {total}"),
            format!("{agree} of {total}"),
            agree == total,
        ),
    );
    Ok(checks)
}

fn properties() -> Result<Vec<Check>, SolveError> {
    let graphs = connected_graphs_up_to(2, 6)?;
    let (mut mono_m, mut mono_k, mut win_eq, mut retract) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let (mut retract_cases, mut oracle_cases) = (0, 0);
    let mut oracle = Vec::new();
    for g in &graphs {
        let tables = [GameTable::solve(g, 1, 3)?, GameTable::solve(g, 2, 3)?];
        let mut values = [[GameValue::RobbersWin; 3]; 2];
        for (k, t) in tables.iter().enumerate() {
            for m in 1..=3 {
                values[k][m - 1] = t.capture_time_for(m)?;
            }
        }
        for (k, row) in values.iter().enumerate() {
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                mono_m.push(Check::new(format!("{} k={}", label(g), k + 1), "nondecreasing in m", format!("{row:?}"), false));
            }
            if row.iter().any(|v| v.is_finite()) != row.iter().all(|v| v.is_finite()) {
                win_eq.push(Check::new(format!("{} k={}", label(g), k + 1), "same finiteness for m=1..3", format!("{row:?}"), false));
            }
        }
        for (m, (one, two)) in values[0].iter().zip(&values[1]).enumerate() {
            if two > one {
                mono_k.push(Check::new(format!("{} m={}", label(g), m + 1), format!("<= {one}"), two, false));
            }
        }
        for u in g.traps() {
            let (h, _) = g.one_point_retract(u)?;
            for k in 1..=2 {
                for m in 1..=2 {
                    retract_cases += 1;
                    let small = capture_time(&h, k, m)?;
                    let big = values[k - 1][m - 1];
                    if small > big {
                        retract.push(Check::new(format!("{} minus {u}, k={k}, m={m}", label(g)), format!("<= {big}"), small, false));
                    }
                }
            }
        }
        if g.n() <= 5 {
            let mut brute = Oracle::new(g, Oracle::safe_horizon(g, 1, 1));
            let table = &tables[0];
            for c in g.vertices() {
                for r in g.vertices() {
                    oracle_cases += 1;
                    let cops = TeamConfig::new(vec![c]);
                    let robbers = TeamConfig::new(vec![r]).without(cops.mask());
                    let expected = brute.value(&[c], robbers.as_slice());
                    let got = table.value_of(&cops, &robbers)?;
                    if expected != got {
                        oracle.push(Check::new(format!("{} cop {c} robber {r}", label(g)), expected, got, false));
                    }
                }
            }
            oracle_cases += 1;
            let expected = brute.capture_time(1, 1);
            if expected != values[0][0] {
                oracle.push(Check::new(format!("capt({})", label(g)), expected, values[0][0], false));
            }
        }
    }
    let summary = |name: &str, bad: &[Check], total: usize| {
        Check::new(name, format!("{total} of {total}"), format!("{} of {total}", total - bad.len()), bad.is_empty())
    };
    let pairs = graphs.len() * 2;
    let mut checks = vec![
        summary("capt_k(G,m) nondecreasing in m, m=1..3", &mono_m, pairs),
        summary("capt_2(G,m) <= capt_1(G,m), m=1..3", &mono_k, graphs.len() * 3),
        summary("finiteness independent of m", &win_eq, pairs),
        summary("retract monotonicity, k,m in 1..2", &retract, retract_cases),
        summary("solver equals brute force, n <= 5, k=m=1", &oracle, oracle_cases),
    ];
    for group in [mono_m, mono_k, win_eq, retract, oracle] {
        checks.extend(group);
    }
    Ok(checks)
}

fn divergence() -> Result<Vec<Check>, SolveError> {
    let mut checks = Vec::new();
    let t3 = GameTable::solve(&subdivided_star(3)?, 1, 8)?;
    for (m, lower) in [(2, 6), (4, 10), (8, 14)] {
        let v = t3.capture_time_for(m)?;
        checks.push(Check::new(format!("capt(T3,{m}) >= {lower}"), format!(">= {lower}"), v, v >= fin(lower) && v.is_finite()));
    }
    let w5 = wheel(5)?;
    for l in 1..=3u32 {
        let m = 4 << l;
        let ok = capture_time_at_least(&w5, 1, m, l)?;
        checks.push(Check::new(format!("capt(W5,{m}) >= {l}"), format!(">= {l}"), if ok { format!(">= {l}") } else { format!("< {l}") }, ok));
    }
    let k4 = GameTable::solve(&complete(4)?, 1, 27)?;
    let values: Vec<GameValue> = [3, 9, 27].iter().map(|&m| k4.capture_time_for(m)).collect::<Result<_, _>>()?;
    checks.push(Check::new(
        "capt(K4,m) strictly increases along m = 3, 9, 27",
        "strictly increasing",
        format!("{values:?}"),
        values.windows(2).all(|w| w[0] < w[1]),
    ));
    Ok(checks)
}

/// Replays a walk against optimal robbers for every `m` up to `max_m` and
/// against the contamination adversary.
fn walk_checks(checks: &mut Vec<Check>, g: &Graph, walk: WalkScript, max_m: usize) -> Result<(), SolveError> {
    let claim = walk.claimed_rounds();
    let name = format!("{} on {}", CopScript::name(&walk), label(g));
    let cleared = schedule_capture_time(g, &walk.schedule());
    checks.push(Check::new(format!("{name}: clears every robber"), format!("<= {claim}"), cleared, cleared <= fin(claim)));
    let table = GameTable::solve(g, walk.cops(), max_m)?;
    for m in 1..=max_m {
        let t = arena(g, &mut walk.clone(), &mut OptimalRobbers::new(&table), m, 4 * g.n() + 4)
            .map_err(|e| SolveError::InvalidParameter(e.to_string()))?;
        let len = t.capture_round().map_or(GameValue::RobbersWin, fin);
        checks.push(Check::new(format!("{name} vs optimal robbers, m={m}"), format!("<= {claim}"), len, len <= fin(claim)));
    }
    Ok(())
}

fn scripts() -> Result<Vec<Check>, SolveError> {
    let mut checks = Vec::new();
    let wrap = |e: String| SolveError::InvalidParameter(e);
    for n in 2..=8 {
        let g = path(n)?;
        walk_checks(&mut checks, &g, path_sweep(&g).map_err(wrap)?, 3)?;
    }
    for n in 2..=4 {
        let g = star(n)?;
        walk_checks(&mut checks, &g, star_sweep(&g).map_err(wrap)?, 6)?;
    }
    for n in 3..=7 {
        for t in trees(n)?.into_iter().filter(Graph::is_caterpillar) {
            walk_checks(&mut checks, &t, caterpillar_sweep(&t).map_err(wrap)?, 3)?;
        }
    }
    for n in 4..=7 {
        let g = cycle(n)?;
        walk_checks(&mut checks, &g, cycle_two_cop_sweep(&g).map_err(wrap)?, 3)?;
    }
    for n in 5..=7 {
        let g = wheel(n)?;
        walk_checks(&mut checks, &g, wheel_two_cop_sweep(&g).map_err(wrap)?, 3)?;
    }
    for n in 2..=5 {
        let g = complete_bipartite(2, n)?.0;
        walk_checks(&mut checks, &g, bipartite_sweep(&g, 2).map_err(wrap)?, 3)?;
    }

    let h10 = h_graph(10)?;
    for (m, claim) in [(3, 22), (2, 14)] {
        let policy = extract_cop_strategy(&h10, 1, m)?;
        let mut squad = hn_robbers_squad(&h10, m).map_err(wrap)?;
        let t = arena(&h10, &mut OptimalCop::new(&policy), &mut squad, m, 100)
            .map_err(|e| SolveError::InvalidParameter(e.to_string()))?;
        checks.push(Check::new(
            format!("hn_robbers_squad({m}) on H(10) survives the optimal cop"),
            format!(">= {claim}"),
            t.length(),
            t.length() >= claim,
        ));
    }
    for n in 7..=10 {
        let g = h_graph(n)?;
        let worst = hn_cop_worst_case(&g, n).map_err(wrap)?;
        checks.push(Check::new(format!("hn_cop_from_vertex2 on H({n}), every robber"), format!("<= {}", n - 4), worst, worst <= n - 4));
        let table = GameTable::solve(&g, 1, 1)?;
        let mut cop = hn_cop_from_vertex2(&g).map_err(wrap)?;
        let t = arena(&g, &mut cop, &mut OptimalRobbers::new(&table), 1, 2 * n)
            .map_err(|e| SolveError::InvalidParameter(e.to_string()))?;
        let len = t.capture_round().map_or(GameValue::RobbersWin, fin);
        checks.push(Check::new(format!("hn_cop_from_vertex2 on H({n}) vs optimal robber"), format!("<= {}", n - 4), len, len <= fin(n - 4)));
    }

    // table rows, replayed through the decision functions on H(16)
    let h16 = h_graph(16)?;
    for &(step, cop_step) in &COP_TABLE {
        let (cop, prev) = (4, 12);
        let robber = (prev as i64 + step) as usize;
        let got = hn_cop_move(&h16, 5, cop, robber, Some(prev), 1).map_err(wrap)?;
        checks.push(Check::eq(format!("cop table: robber R{step:+} -> cop C{cop_step:+}"), (cop as i64 + cop_step) as usize, got));
    }
    for &(step, target) in &COP_ROUND_TWO_TABLE {
        let robber = (12 + step) as usize;
        let got = hn_cop_move(&h16, 2, 1, robber, Some(12), 12).map_err(wrap)?;
        checks.push(Check::eq(format!("round-two table: robber R0{step:+} -> cop {target}"), target, got));
    }
    for &(cop_off, step) in &ROBBER_TABLE {
        let i = 8i64;
        let got = hn_robber_move(&h16, (i + cop_off) as usize, i as usize);
        checks.push(Check::eq(format!("robber table: cop i{cop_off:+} -> robber i{step:+}"), (i + step) as usize, got));
    }
    Ok(checks)
}
