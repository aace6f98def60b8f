//! Ground truth by exhaustion: walk every element of the group and
//! histogram a descent statistic exactly.
//!
//! Work splits into contiguous rank ranges, one per worker; each worker
//! owns a private histogram and regenerates elements from indices instead
//! of materializing the group. Partial histograms merge in worker order,
//! so the result is identical for any job count.

use crate::distribution::{DescentDistribution, Method};
use crate::group::GroupParams;
use crate::stats::{self, DescentStatistic, StatsError};
use num_bigint::{BigUint, ToBigUint};
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use thiserror::Error;

/// Elements the sweep refuses to exceed unless the cap is raised
/// deliberately.
pub const DEFAULT_ELEMENT_CAP: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("group of order {order} exceeds the enumeration cap {cap}; raise --cap to proceed")]
    BudgetExceeded { order: BigUint, cap: u64 },

    #[error(transparent)]
    Stats(#[from] StatsError),
}

/// Budget and parallelism for a brute-force sweep.
#[derive(Clone, Copy, Debug)]
pub struct BruteConfig {
    pub max_elements: u64,
    pub jobs: usize,
}

impl Default for BruteConfig {
    fn default() -> Self {
        BruteConfig {
            max_elements: DEFAULT_ELEMENT_CAP,
            jobs: 1,
        }
    }
}

fn guarded_total(params: GroupParams, config: &BruteConfig) -> Result<u64, OracleError> {
    let order = params.order();
    let cap = config.max_elements.to_biguint().expect("cap is a u64");
    if order > cap {
        return Err(OracleError::BudgetExceeded {
            order,
            cap: config.max_elements,
        });
    }
    Ok(order.to_u64().expect("order fits u64 under the cap"))
}

fn split_ranges(total: u64, jobs: usize) -> Vec<(u64, u64)> {
    let jobs = jobs.max(1) as u64;
    let chunk = total.div_ceil(jobs).max(1);
    let mut ranges = Vec::new();
    let mut start = 0;
    while start < total {
        let len = chunk.min(total - start);
        ranges.push((start, len));
        start += len;
    }
    if ranges.is_empty() {
        ranges.push((0, 0));
    }
    ranges
}

fn sweep<H, F>(
    params: GroupParams,
    config: &BruteConfig,
    make_hist: impl Fn() -> H + Sync,
    per_element: F,
) -> Result<Vec<H>, OracleError>
where
    H: Send,
    F: Fn(&crate::group::ColoredPermutation, &mut H) + Sync,
{
    let total = guarded_total(params, config)?;
    let ranges = split_ranges(total, config.jobs);
    if ranges.len() == 1 {
        let (start, len) = ranges[0];
        let mut hist = make_hist();
        if len > 0 {
            for x in params.iter_range(&BigUint::from(start), len).expect("range in bounds") {
                per_element(&x, &mut hist);
            }
        }
        return Ok(vec![hist]);
    }
    let partials = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(start, len)| {
                let make_hist = &make_hist;
                let per_element = &per_element;
                scope.spawn(move || {
                    let mut hist = make_hist();
                    for x in params
                        .iter_range(&BigUint::from(start), len)
                        .expect("range in bounds")
                    {
                        per_element(&x, &mut hist);
                    }
                    hist
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect::<Vec<_>>()
    });
    Ok(partials)
}

fn merge_hist(partials: Vec<Vec<u64>>) -> Vec<u64> {
    let mut acc = vec![0u64; partials.iter().map(Vec::len).max().unwrap_or(1)];
    for part in partials {
        for (m, count) in part.into_iter().enumerate() {
            acc[m] += count;
        }
    }
    acc
}

fn hist_to_distribution(
    params: GroupParams,
    stat: DescentStatistic,
    hist: Vec<u64>,
) -> DescentDistribution {
    let mut dist = DescentDistribution::new(params.r(), params.n(), stat, Method::Brute);
    for (m, count) in hist.into_iter().enumerate() {
        dist.insert(m as u64, BigUint::from(count));
    }
    dist
}

/// Exact histogram of one statistic over the whole group.
pub fn distribution(
    params: GroupParams,
    stat: &DescentStatistic,
    config: &BruteConfig,
) -> Result<DescentDistribution, OracleError> {
    stat.validate(params.r())?;
    let slots = params.n() as usize + 1;
    let partials = sweep(
        params,
        config,
        || vec![0u64; slots],
        |x, hist: &mut Vec<u64>| {
            let m = stats::count(x, stat).expect("stat validated") as usize;
            hist[m] += 1;
        },
    )?;
    Ok(hist_to_distribution(params, *stat, merge_hist(partials)))
}

/// One pass over the group filling the histogram of every color pair
/// `(c, d)` with `c <= d` at once. Keys are the pairs; the diagonal holds
/// the `(c,c)` statistics.
pub fn distribution_all_pairs(
    params: GroupParams,
    config: &BruteConfig,
) -> Result<BTreeMap<(u32, u32), DescentDistribution>, OracleError> {
    let r = params.r() as usize;
    let slots = params.n() as usize + 1;
    let pairs: Vec<(u32, u32)> = (0..params.r())
        .flat_map(|c| (c..params.r()).map(move |d| (c, d)))
        .collect();
    let pair_slot: Vec<usize> = {
        // flat r*r lookup from (left color, right color) to histogram index
        let mut lookup = vec![usize::MAX; r * r];
        for (idx, &(c, d)) in pairs.iter().enumerate() {
            lookup[c as usize * r + d as usize] = idx;
        }
        lookup
    };

    let partials = sweep(
        params,
        config,
        || vec![vec![0u64; slots]; pairs.len()],
        |x, hists: &mut Vec<Vec<u64>>| {
            let mut counts = vec![0usize; pairs.len()];
            let letters = x.letters();
            for i in 1..letters.len() {
                let (left, right) = (letters[i - 1], letters[i]);
                // descents only happen when the left color class is not lower
                let is_descent = left.color < right.color
                    || (left.color == right.color && left.value > right.value);
                if is_descent {
                    counts[pair_slot[left.color as usize * r + right.color as usize]] += 1;
                }
            }
            for (idx, &m) in counts.iter().enumerate() {
                hists[idx][m] += 1;
            }
        },
    )?;

    let mut merged = vec![vec![0u64; slots]; pairs.len()];
    for part in partials {
        for (idx, hist) in part.into_iter().enumerate() {
            for (m, count) in hist.into_iter().enumerate() {
                merged[idx][m] += count;
            }
        }
    }

    Ok(pairs
        .into_iter()
        .zip(merged)
        .map(|((c, d), hist)| {
            let stat = if c == d {
                DescentStatistic::DesCc { c }
            } else {
                DescentStatistic::DesCd { c, d }
            };
            ((c, d), hist_to_distribution(params, stat, hist))
        })
        .collect())
}
