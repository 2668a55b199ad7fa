use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::partition::{enum_pod_partitions, Bipartition, Partition};
use crate::error::{usage, Error, Result};
use crate::pseries::BivariateSeries;

/// The three bipartition statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    /// parts of the first component minus parts of the second
    B,
    /// largest part of the first component minus largest part of the second
    C,
    /// parts of the first component
    D,
}

impl Statistic {
    pub fn eval(self, first: &Partition, second: &Partition) -> i64 {
        match self {
            Statistic::B => first.num_parts() as i64 - second.num_parts() as i64,
            Statistic::C => first.largest_part() as i64 - second.largest_part() as i64,
            Statistic::D => first.num_parts() as i64,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Statistic::B => "b",
            Statistic::C => "c",
            Statistic::D => "d",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" => Ok(Statistic::B),
            "c" => Ok(Statistic::C),
            "d" => Ok(Statistic::D),
            _ => usage(format!("unknown statistic '{s}' (expected b, c or d)")),
        }
    }
}

pub fn birank_b(pi: &Bipartition) -> i64 {
    Statistic::B.eval(&pi.first, &pi.second)
}

pub fn birank_c(pi: &Bipartition) -> i64 {
    Statistic::C.eval(&pi.first, &pi.second)
}

pub fn rank_d(pi: &Bipartition) -> i64 {
    Statistic::D.eval(&pi.first, &pi.second)
}

/// pod(0..=max): partitions with distinct odd parts, by a direct product
/// recurrence on integer vectors.
pub fn pod_counts(max: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); max + 1];
    c[0] = BigInt::from(1);
    for k in 1..=max {
        if k % 2 == 1 {
            // times (1 + q^k)
            for n in (k..=max).rev() {
                let prev = c[n - k].clone();
                c[n] += prev;
            }
        } else {
            // divided by (1 - q^k)
            for n in k..=max {
                let prev = c[n - k].clone();
                c[n] += prev;
            }
        }
    }
    c
}

/// pod_{-2}(0..=max) as the self-convolution of [`pod_counts`].
pub fn pod2_counts(max: usize) -> Vec<BigInt> {
    let pod = pod_counts(max);
    (0..=max)
        .map(|n| (0..=n).map(|a| &pod[a] * &pod[n - a]).sum())
        .collect()
}

pub fn pod2_count(n: usize) -> BigInt {
    pod2_counts(n).pop().expect("nonempty")
}

/// Counts `R(m, n)` of bipartitions of weight `n` with statistic value `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    pub stat: Statistic,
    pub max_weight: usize,
    counts: BTreeMap<(i64, usize), u64>,
}

/// One `(stat, m, n, count)` record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatRow {
    pub stat: Statistic,
    pub m: i64,
    pub n: usize,
    pub count: u64,
}

/// Tabulates a statistic over every bipartition of weight at most
/// `max_weight` by exhaustive enumeration. Weights are processed in
/// parallel; the result does not depend on scheduling.
pub fn stat_table(stat: Statistic, max_weight: usize) -> StatTable {
    let lists: Vec<Vec<Partition>> = (0..=max_weight).map(enum_pod_partitions).collect();
    let per_weight: Vec<BTreeMap<i64, u64>> = (0..=max_weight)
        .into_par_iter()
        .map(|n| {
            let mut row = BTreeMap::new();
            for a in 0..=n {
                for first in &lists[a] {
                    for second in &lists[n - a] {
                        *row.entry(stat.eval(first, second)).or_insert(0) += 1;
                    }
                }
            }
            row
        })
        .collect();
    let counts = per_weight
        .into_iter()
        .enumerate()
        .flat_map(|(n, row)| row.into_iter().map(move |(m, c)| ((m, n), c)))
        .collect();
    StatTable {
        stat,
        max_weight,
        counts,
    }
}

impl StatTable {
    pub fn count(&self, m: i64, n: usize) -> u64 {
        self.counts.get(&(m, n)).copied().unwrap_or(0)
    }

    /// Nonzero counts of weight `n`, keyed by statistic value.
    pub fn row(&self, n: usize) -> BTreeMap<i64, u64> {
        self.counts
            .iter()
            .filter(|((_, w), _)| *w == n)
            .map(|(&(m, _), &c)| (m, c))
            .collect()
    }

    pub fn row_sum(&self, n: usize) -> u64 {
        self.row(n).values().sum()
    }

    /// `R(r, t, n)` for `r = 0..t`.
    pub fn residue_counts(&self, t: u64, n: usize) -> Result<Vec<u64>> {
        if t == 0 {
            return usage("residue modulus must be positive");
        }
        if n > self.max_weight {
            return usage(format!("weight {n} exceeds table bound {}", self.max_weight));
        }
        let mut out = vec![0u64; t as usize];
        for (m, c) in self.row(n) {
            out[m.rem_euclid(t as i64) as usize] += c;
        }
        Ok(out)
    }

    /// Records ordered by weight, then statistic value.
    pub fn rows(&self) -> Vec<StatRow> {
        let mut rows: Vec<StatRow> = self
            .counts
            .iter()
            .map(|(&(m, n), &count)| StatRow {
                stat: self.stat,
                m,
                n,
                count,
            })
            .collect();
        rows.sort_by_key(|r| (r.n, r.m));
        rows
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in self.rows() {
            w.serialize(row).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("ascii")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.rows()).expect("rows serialize")
    }

    pub fn to_bivariate(&self) -> BivariateSeries {
        let entries = self
            .counts
            .iter()
            .map(|(&k, &c)| (k, BigInt::from(c)))
            .collect();
        BivariateSeries::from_entries(self.max_weight, &entries).expect("statistics are bounded by the weight")
    }
}

/// Free-function form of [`StatTable::residue_counts`].
pub fn residue_counts(table: &StatTable, t: u64, n: usize) -> Result<Vec<u64>> {
    table.residue_counts(t, n)
}
