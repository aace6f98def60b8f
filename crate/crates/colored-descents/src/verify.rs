//! The cross-verification matrix: for every statistic on every group in
//! range, compare each computation route against the brute-force reference
//! and report agree/disagree/skipped per cell.
//!
//! The expected-agreement set excludes the erratum-flagged routes (the
//! printed `(c,c)` closed form and generating function with r != 2); those
//! cells are listed as skipped here and documented value-by-value by the
//! erratum report, so a red verdict from this matrix always means a real
//! discrepancy.

use crate::distribution::format_counts;
use crate::egf::{expand_a, expand_g, expand_p, EgfTriple};
use crate::formulas::{cc_count, cd_count, cd_count_blocks, composition_sum_poly, pdes_count, pndes_count};
use crate::group::GroupParams;
use crate::oracle::{distribution_all_pairs, BruteConfig, OracleError};
use crate::recurrence::{a_sequence, g_sequence, p_sequence, PolySequenceTriple};
use crate::algebra::{CoeffOutcome, QPoly};
use crate::stats::DescentStatistic;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A computation route compared against brute force.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// The per-statistic closed formula.
    Formula,
    /// The two-case block-count proposition.
    FormulaBlocks,
    /// The sum over all colored compositions.
    BlocksSum,
    /// The recurrence pipeline.
    Recurrence,
    /// The generating-function expansion.
    Series,
}

impl Route {
    pub fn name(&self) -> &'static str {
        match self {
            Route::Formula => "formula",
            Route::FormulaBlocks => "formula-blocks",
            Route::BlocksSum => "blocks-sum",
            Route::Recurrence => "recurrence",
            Route::Series => "series",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CellStatus {
    Agree,
    Disagree { reference: String, candidate: String },
    Skipped { reason: String },
}

/// All route comparisons for one (r, n, statistic) against one brute
/// reference histogram.
#[derive(Clone, Debug)]
pub struct StatBlock {
    pub r: u32,
    pub n: u32,
    pub stat: DescentStatistic,
    pub reference: String,
    pub cells: Vec<(Route, CellStatus)>,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub r_max: u32,
    pub n_max: u32,
    pub blocks: Vec<StatBlock>,
}

impl VerifyReport {
    pub fn agreed(&self) -> usize {
        self.count(|s| matches!(s, CellStatus::Agree))
    }

    pub fn disagreed(&self) -> usize {
        self.count(|s| matches!(s, CellStatus::Disagree { .. }))
    }

    pub fn skipped(&self) -> usize {
        self.count(|s| matches!(s, CellStatus::Skipped { .. }))
    }

    fn count(&self, pred: impl Fn(&CellStatus) -> bool) -> usize {
        self.blocks
            .iter()
            .flat_map(|b| b.cells.iter())
            .filter(|(_, s)| pred(s))
            .count()
    }

    /// True when every expected agreement held.
    pub fn passed(&self) -> bool {
        self.disagreed() == 0
    }

    pub fn disagreements(&self) -> Vec<(&StatBlock, Route, &CellStatus)> {
        self.blocks
            .iter()
            .flat_map(|b| {
                b.cells
                    .iter()
                    .filter(|(_, s)| matches!(s, CellStatus::Disagree { .. }))
                    .map(move |(route, s)| (b, *route, s))
            })
            .collect()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "cross-method verification: r <= {}, n <= {}",
            self.r_max, self.n_max
        )?;
        for block in &self.blocks {
            writeln!(
                f,
                "[r={} n={} stat={}] brute={}",
                block.r, block.n, block.stat, block.reference
            )?;
            for (route, status) in &block.cells {
                match status {
                    CellStatus::Agree => writeln!(f, "  method={route}: agree")?,
                    CellStatus::Disagree {
                        reference,
                        candidate,
                    } => writeln!(
                        f,
                        "  method={route}: DISAGREE brute={reference} {route}={candidate}"
                    )?,
                    CellStatus::Skipped { reason } => {
                        writeln!(f, "  method={route}: skipped ({reason})")?
                    }
                }
            }
        }
        writeln!(
            f,
            "summary: {} cells, {} agree, {} disagree, {} skipped",
            self.agreed() + self.disagreed() + self.skipped(),
            self.agreed(),
            self.disagreed(),
            self.skipped()
        )?;
        write!(
            f,
            "verdict: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Per-r pipelines built once to the maximum order.
struct Pipelines {
    p_seq: Option<PolySequenceTriple>,
    a_seq: Option<Vec<QPoly>>,
    g_seq: PolySequenceTriple,
    exp_p: Option<EgfTriple>,
    exp_a: Option<Vec<QPoly>>,
    exp_g: Vec<CoeffOutcome>,
}

impl Pipelines {
    fn build(r: u32, n_max: u32) -> Pipelines {
        let two_colors = r >= 2;
        Pipelines {
            p_seq: (r == 2).then(|| p_sequence(n_max)),
            a_seq: two_colors.then(|| a_sequence(r, n_max).expect("r >= 2")),
            g_seq: g_sequence(r, n_max).expect("r >= 1"),
            exp_p: (r == 2).then(|| expand_p(n_max).expect("polynomial pipeline")),
            exp_a: two_colors.then(|| expand_a(r, n_max).expect("r >= 2")),
            exp_g: expand_g(r, n_max).expect("r >= 1"),
        }
    }
}

enum RouteResult {
    Counts(BTreeMap<u64, BigUint>),
    Skip(String),
    Broken(String),
}

fn counts_from_qpoly(poly: &QPoly) -> Result<BTreeMap<u64, BigUint>, String> {
    let mut counts = BTreeMap::new();
    for (m, coeff) in poly.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        if !coeff.is_integer() || coeff.numer().sign() == Sign::Minus {
            return Err(format!("coefficient {coeff} at q^{m} is not a count"));
        }
        counts.insert(m as u64, coeff.to_integer().into_parts().1);
    }
    Ok(counts)
}

fn counts_from_bigints(values: impl Iterator<Item = (u64, BigInt)>) -> RouteResult {
    let mut counts = BTreeMap::new();
    for (m, value) in values {
        match value.sign() {
            Sign::NoSign => {}
            Sign::Plus => {
                counts.insert(m, value.into_parts().1);
            }
            Sign::Minus => {
                return RouteResult::Broken(format!("value {value} at m={m} is negative"))
            }
        }
    }
    RouteResult::Counts(counts)
}

const QUARANTINE: &str = "erratum-quarantined; see the erratum report";

fn route_result(
    route: Route,
    r: u32,
    n: u32,
    stat: &DescentStatistic,
    pipes: &Pipelines,
) -> RouteResult {
    let nu = u64::from(n);
    let ns = n as usize;
    match (route, stat) {
        (Route::Formula, DescentStatistic::Pdes | DescentStatistic::Ndes) => {
            counts_from_bigints((0..=nu).map(|m| (m, pdes_count(nu, m))))
        }
        (Route::Formula, DescentStatistic::Pndes) => {
            counts_from_bigints((0..=nu).map(|m| (m, pndes_count(nu, m))))
        }
        (Route::Formula, DescentStatistic::DesCd { .. }) => {
            let mut values = Vec::new();
            for m in 0..=nu {
                match cd_count(r, nu, m) {
                    Ok(v) => values.push((m, v)),
                    Err(e) => return RouteResult::Broken(e.to_string()),
                }
            }
            counts_from_bigints(values.into_iter())
        }
        (Route::Formula, DescentStatistic::DesCc { .. }) => {
            if r != 2 {
                return RouteResult::Skip(QUARANTINE.into());
            }
            let mut counts = BTreeMap::new();
            for m in 0..=nu {
                let value = cc_count(r, nu, m).expect("r >= 1");
                if value.is_zero() {
                    continue;
                }
                if !value.is_integer() || value.numer().sign() == Sign::Minus {
                    return RouteResult::Broken(format!("value {value} at m={m} is not a count"));
                }
                counts.insert(m, value.to_integer().into_parts().1);
            }
            RouteResult::Counts(counts)
        }
        (Route::FormulaBlocks, DescentStatistic::Pndes | DescentStatistic::DesCd { .. }) => {
            let mut values = Vec::new();
            for m in 0..=nu {
                match cd_count_blocks(r, nu, m) {
                    Ok(v) => values.push((m, v)),
                    Err(e) => return RouteResult::Broken(e.to_string()),
                }
            }
            counts_from_bigints(values.into_iter())
        }
        (Route::BlocksSum, DescentStatistic::Pndes | DescentStatistic::DesCd { .. }) => {
            if n == 0 {
                return RouteResult::Skip("the empty word has no block composition".into());
            }
            match composition_sum_poly(r, nu) {
                Ok(poly) => match counts_from_qpoly(&poly) {
                    Ok(counts) => RouteResult::Counts(counts),
                    Err(e) => RouteResult::Broken(e),
                },
                Err(e) => RouteResult::Broken(e.to_string()),
            }
        }
        (Route::Recurrence, DescentStatistic::Pdes | DescentStatistic::Ndes) => {
            poly_route(&pipes.p_seq.as_ref().expect("r=2").total[ns])
        }
        (Route::Recurrence, DescentStatistic::Pndes | DescentStatistic::DesCd { .. }) => {
            poly_route(&pipes.a_seq.as_ref().expect("r>=2")[ns])
        }
        (Route::Recurrence, DescentStatistic::DesCc { .. }) => poly_route(&pipes.g_seq.total[ns]),
        (Route::Series, DescentStatistic::Pdes | DescentStatistic::Ndes) => {
            poly_route(&pipes.exp_p.as_ref().expect("r=2").total[ns])
        }
        (Route::Series, DescentStatistic::Pndes | DescentStatistic::DesCd { .. }) => {
            poly_route(&pipes.exp_a.as_ref().expect("r>=2")[ns])
        }
        (Route::Series, DescentStatistic::DesCc { .. }) => {
            if r != 2 {
                return RouteResult::Skip(QUARANTINE.into());
            }
            match &pipes.exp_g[ns] {
                CoeffOutcome::Polynomial(p) => poly_route(p),
                CoeffOutcome::NonPolynomial(v) => {
                    RouteResult::Broken(format!("non-polynomial coefficient {v}"))
                }
            }
        }
        _ => RouteResult::Skip("route not defined for this statistic".into()),
    }
}

fn poly_route(poly: &QPoly) -> RouteResult {
    match counts_from_qpoly(poly) {
        Ok(counts) => RouteResult::Counts(counts),
        Err(e) => RouteResult::Broken(e),
    }
}

fn stats_for(r: u32) -> Vec<DescentStatistic> {
    if r == 2 {
        vec![
            DescentStatistic::Pdes,
            DescentStatistic::Ndes,
            DescentStatistic::Pndes,
            DescentStatistic::DesCd { c: 0, d: 1 },
            DescentStatistic::DesCc { c: 0 },
            DescentStatistic::DesCc { c: 1 },
        ]
    } else {
        let mut stats = Vec::new();
        for c in 0..r {
            for d in c + 1..r {
                stats.push(DescentStatistic::DesCd { c, d });
            }
        }
        for c in 0..r {
            stats.push(DescentStatistic::DesCc { c });
        }
        stats
    }
}

fn routes_for(stat: &DescentStatistic) -> &'static [Route] {
    match stat {
        DescentStatistic::Pdes | DescentStatistic::Ndes | DescentStatistic::DesCc { .. } => {
            &[Route::Formula, Route::Recurrence, Route::Series]
        }
        DescentStatistic::Pndes | DescentStatistic::DesCd { .. } => &[
            Route::Formula,
            Route::FormulaBlocks,
            Route::BlocksSum,
            Route::Recurrence,
            Route::Series,
        ],
    }
}

fn canonical_pair(stat: &DescentStatistic) -> (u32, u32) {
    match stat.canonical() {
        DescentStatistic::DesCd { c, d } => (c, d),
        DescentStatistic::DesCc { c } => (c, c),
        _ => unreachable!("canonical form is a color pair"),
    }
}

/// Run the whole matrix. Budget refusal from any sweep aborts the run.
pub fn run_verify(
    r_max: u32,
    n_max: u32,
    config: &BruteConfig,
) -> Result<VerifyReport, OracleError> {
    let mut blocks = Vec::new();
    for r in 1..=r_max.max(1) {
        let pipes = Pipelines::build(r, n_max);
        for n in 0..=n_max {
            let params = GroupParams::new(r, n).expect("r >= 1");
            let brute = distribution_all_pairs(params, config)?;
            for stat in stats_for(r) {
                let reference = &brute[&canonical_pair(&stat)];
                let reference_counts = reference.counts();
                let cells = routes_for(&stat)
                    .iter()
                    .map(|&route| {
                        let status = match route_result(route, r, n, &stat, &pipes) {
                            RouteResult::Counts(counts) => {
                                if &counts == reference_counts {
                                    CellStatus::Agree
                                } else {
                                    CellStatus::Disagree {
                                        reference: format_counts(reference_counts),
                                        candidate: format_counts(&counts),
                                    }
                                }
                            }
                            RouteResult::Skip(reason) => CellStatus::Skipped { reason },
                            RouteResult::Broken(detail) => CellStatus::Disagree {
                                reference: format_counts(reference_counts),
                                candidate: format!("error: {detail}"),
                            },
                        };
                        (route, status)
                    })
                    .collect();
                blocks.push(StatBlock {
                    r,
                    n,
                    stat,
                    reference: format_counts(reference_counts),
                    cells,
                });
            }
        }
    }
    Ok(VerifyReport {
        r_max,
        n_max,
        blocks,
    })
}
