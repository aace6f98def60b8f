//! Exact descent-count histograms and their serialized forms.

use crate::algebra::QPoly;
use crate::stats::DescentStatistic;
use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistributionError {
    #[error("coefficient of q^{m} is {value}, not a nonnegative integer count")]
    BadCoefficient { m: u64, value: String },
}

/// How a distribution was computed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Method {
    Brute,
    Formula,
    Blocks,
    Recurrence,
    Series,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Formula => "formula",
            Method::Blocks => "blocks",
            Method::Recurrence => "recurrence",
            Method::Series => "series",
        }
    }

    pub fn from_name(name: &str) -> Option<Method> {
        Some(match name {
            "brute" => Method::Brute,
            "formula" => Method::Formula,
            "blocks" => Method::Blocks,
            "recurrence" => Method::Recurrence,
            "series" => Method::Series,
            _ => return None,
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Map from a descent count `m` to the exact number of group elements
/// attaining it. Zero counts are never stored, so two distributions are
/// equal exactly when their maps are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DescentDistribution {
    pub r: u32,
    pub n: u32,
    pub stat: DescentStatistic,
    pub method: Method,
    counts: BTreeMap<u64, BigUint>,
}

impl DescentDistribution {
    pub fn new(r: u32, n: u32, stat: DescentStatistic, method: Method) -> Self {
        DescentDistribution {
            r,
            n,
            stat,
            method,
            counts: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, m: u64, count: BigUint) {
        if !count.is_zero() {
            self.counts.insert(m, count);
        }
    }

    pub fn add(&mut self, m: u64, delta: BigUint) {
        if !delta.is_zero() {
            *self.counts.entry(m).or_insert_with(BigUint::zero) += delta;
        }
    }

    pub fn counts(&self) -> &BTreeMap<u64, BigUint> {
        &self.counts
    }

    pub fn count(&self, m: u64) -> BigUint {
        self.counts.get(&m).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn max_statistic(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Same histogram, ignoring how it was computed or labeled.
    pub fn same_counts(&self, other: &DescentDistribution) -> bool {
        self.counts == other.counts
    }

    /// Read a distribution off a polynomial in `q`: the coefficient of
    /// `q^m` is the count of elements with statistic value `m`.
    pub fn from_qpoly(
        r: u32,
        n: u32,
        stat: DescentStatistic,
        method: Method,
        poly: &QPoly,
    ) -> Result<Self, DistributionError> {
        let mut dist = DescentDistribution::new(r, n, stat, method);
        for (m, coeff) in poly.coeffs().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if !coeff.is_integer() || coeff.numer().sign() == num_bigint::Sign::Minus {
                return Err(DistributionError::BadCoefficient {
                    m: m as u64,
                    value: coeff.to_string(),
                });
            }
            let (_, magnitude) = coeff.to_integer().into_parts();
            dist.insert(m as u64, magnitude);
        }
        Ok(dist)
    }

    pub fn to_json_string(&self) -> String {
        let (c, d) = self.stat.color_fields();
        let wire = WireDistribution {
            r: self.r,
            n: self.n,
            stat: self.stat.kind_name(),
            c,
            d,
            method: self.method.name(),
            distribution: self
                .counts
                .iter()
                .map(|(m, count)| (*m, count.to_string()))
                .collect(),
        };
        serde_json::to_string(&wire).expect("distribution serializes")
    }

    /// CSV form: header `m,count`, rows ascending in `m`.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("m,count\n");
        for (m, count) in &self.counts {
            out.push_str(&format!("{m},{count}\n"));
        }
        out
    }

    /// Compact `{m:count, ...}` form for report lines.
    pub fn counts_string(&self) -> String {
        format_counts(&self.counts)
    }
}

/// Render a histogram as `{m:count, ...}`.
pub fn format_counts(counts: &BTreeMap<u64, BigUint>) -> String {
    let body = counts
        .iter()
        .map(|(m, count)| format!("{m}:{count}"))
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{body}}}")
}

#[derive(Serialize)]
struct WireDistribution<'a> {
    r: u32,
    n: u32,
    stat: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<u32>,
    method: &'a str,
    distribution: BTreeMap<u64, String>,
}
