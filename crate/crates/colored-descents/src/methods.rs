//! One entry point mapping (statistic, method) requests onto the five
//! computation pipelines. Used by the CLI and the C bindings.
//!
//! Availability matrix:
//!
//! | statistic | brute | formula | blocks | recurrence | series |
//! |-----------|-------|---------|--------|------------|--------|
//! | pdes/ndes | yes   | yes     | no     | yes        | yes    |
//! | pndes     | yes   | yes     | n >= 1 | yes        | yes    |
//! | des-cd    | yes   | yes     | n >= 1 | yes        | yes    |
//! | des-cc    | yes   | yes*    | no     | yes        | yes*   |
//!
//! (*) The printed `(c,c)` closed form and its generating function are
//! faithful to the source but disagree with ground truth for r != 2; those
//! routes emit what the formulas produce (when the values are counts at
//! all) and the `erratum` command documents the discrepancies.

use crate::distribution::{DescentDistribution, DistributionError, Method};
use crate::egf::{expand_a, expand_g, expand_p};
use crate::formulas::{cc_count, cd_count, composition_sum_poly, pdes_count, pndes_count};
use crate::group::GroupParams;
use crate::oracle::{self, BruteConfig, OracleError};
use crate::recurrence::{a_sequence, g_sequence, p_sequence};
use crate::stats::DescentStatistic;
use num_bigint::{BigInt, Sign};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComputeError {
    /// The request itself is malformed: bad statistic/parameter combination
    /// or a method that does not apply. CLI exit code 2.
    #[error("{0}")]
    InvalidRequest(String),

    /// The sweep would exceed the enumeration cap. CLI exit code 3.
    #[error(transparent)]
    Budget(OracleError),

    /// The chosen route produced values that are not a distribution; only
    /// the erratum-flagged routes can do this. CLI exit code 1.
    #[error("{0}")]
    NotRepresentable(String),
}

fn bad(reason: impl Into<String>) -> ComputeError {
    ComputeError::InvalidRequest(reason.into())
}

fn dist_from_qpoly(
    r: u32,
    n: u32,
    stat: DescentStatistic,
    method: Method,
    poly: &crate::algebra::QPoly,
) -> Result<DescentDistribution, ComputeError> {
    DescentDistribution::from_qpoly(r, n, stat, method, poly).map_err(
        |DistributionError::BadCoefficient { m, value }| {
            ComputeError::NotRepresentable(format!(
                "value {value} at m={m} is not a nonnegative count; see the erratum report"
            ))
        },
    )
}

fn dist_from_bigints(
    r: u32,
    n: u32,
    stat: DescentStatistic,
    method: Method,
    values: impl Iterator<Item = (u64, BigInt)>,
) -> Result<DescentDistribution, ComputeError> {
    let mut dist = DescentDistribution::new(r, n, stat, method);
    for (m, value) in values {
        match value.sign() {
            Sign::NoSign => {}
            Sign::Plus => dist.insert(m, value.into_parts().1),
            Sign::Minus => {
                return Err(ComputeError::NotRepresentable(format!(
                    "value {value} at m={m} is not a nonnegative count"
                )))
            }
        }
    }
    Ok(dist)
}

/// Compute the distribution of `stat` on the `(r, n)` group by `method`.
pub fn compute_distribution(
    r: u32,
    n: u32,
    stat: DescentStatistic,
    method: Method,
    config: &BruteConfig,
) -> Result<DescentDistribution, ComputeError> {
    let params = GroupParams::new(r, n).map_err(|e| bad(e.to_string()))?;
    stat.validate(r).map_err(|e| bad(e.to_string()))?;
    let nu = u64::from(n);
    let ns = n as usize;

    match method {
        Method::Brute => oracle::distribution(params, &stat, config).map_err(|e| match e {
            OracleError::BudgetExceeded { .. } => ComputeError::Budget(e),
            OracleError::Stats(inner) => bad(inner.to_string()),
        }),

        Method::Formula => match stat {
            DescentStatistic::Pdes | DescentStatistic::Ndes => {
                dist_from_bigints(r, n, stat, method, (0..=nu).map(|m| (m, pdes_count(nu, m))))
            }
            DescentStatistic::Pndes => {
                dist_from_bigints(r, n, stat, method, (0..=nu).map(|m| (m, pndes_count(nu, m))))
            }
            DescentStatistic::DesCd { .. } => {
                let values = (0..=nu)
                    .map(|m| cd_count(r, nu, m).map(|v| (m, v)))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| ComputeError::NotRepresentable(e.to_string()))?;
                dist_from_bigints(r, n, stat, method, values.into_iter())
            }
            DescentStatistic::DesCc { .. } => {
                let mut dist = DescentDistribution::new(r, n, stat, method);
                for m in 0..=nu {
                    let value = cc_count(r, nu, m).map_err(|e| bad(e.to_string()))?;
                    if value.is_integer() && value.numer().sign() != Sign::Minus {
                        dist.insert(m, value.to_integer().into_parts().1);
                    } else {
                        return Err(ComputeError::NotRepresentable(format!(
                            "the printed (c,c) formula gives {value} at m={m}, which is not a \
                             count; run `erratum --r {r}` for the full comparison"
                        )));
                    }
                }
                Ok(dist)
            }
        },

        Method::Blocks => match stat.canonical() {
            DescentStatistic::DesCd { .. } => {
                if n == 0 {
                    return Err(bad(
                        "the blocks method needs n >= 1; the empty word has no block composition",
                    ));
                }
                let poly =
                    composition_sum_poly(r, nu).map_err(|e| bad(e.to_string()))?;
                dist_from_qpoly(r, n, stat, method, &poly)
            }
            _ => Err(bad(
                "the blocks method applies to pn-descents and (c,d)-descents with c < d",
            )),
        },

        Method::Recurrence => match stat {
            DescentStatistic::Pdes | DescentStatistic::Ndes => {
                let seq = p_sequence(n);
                dist_from_qpoly(r, n, stat, method, &seq.total[ns])
            }
            DescentStatistic::Pndes | DescentStatistic::DesCd { .. } => {
                let seq = a_sequence(r, n).map_err(|e| bad(e.to_string()))?;
                dist_from_qpoly(r, n, stat, method, &seq[ns])
            }
            DescentStatistic::DesCc { .. } => {
                let seq = g_sequence(r, n).map_err(|e| bad(e.to_string()))?;
                dist_from_qpoly(r, n, stat, method, &seq.total[ns])
            }
        },

        Method::Series => match stat {
            DescentStatistic::Pdes | DescentStatistic::Ndes => {
                let triple = expand_p(n).map_err(|e| bad(e.to_string()))?;
                dist_from_qpoly(r, n, stat, method, &triple.total[ns])
            }
            DescentStatistic::Pndes | DescentStatistic::DesCd { .. } => {
                let seq = expand_a(r, n).map_err(|e| bad(e.to_string()))?;
                dist_from_qpoly(r, n, stat, method, &seq[ns])
            }
            DescentStatistic::DesCc { .. } => {
                let outcomes = expand_g(r, n).map_err(|e| bad(e.to_string()))?;
                match outcomes[ns].as_polynomial() {
                    Some(p) => dist_from_qpoly(r, n, stat, method, p),
                    None => Err(ComputeError::NotRepresentable(format!(
                        "the printed (c,c) generating function has a non-polynomial \
                         coefficient at n={n} ({}); run `erratum --r {r}` for the full \
                         comparison",
                        outcomes[ns]
                    ))),
                }
            }
        },
    }
}
