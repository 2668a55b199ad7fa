use std::fmt;

use crate::error::{usage, Result};

/// A partition, parts stored in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return usage("partition parts must be positive");
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return usage(format!("parts {parts:?} are not non-increasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts; zero for the empty partition.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Largest part; zero for the empty partition.
    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// True if no odd part repeats.
    pub fn has_distinct_odd_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] % 2 == 0 || w[0] != w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An ordered pair of partitions, each with distinct odd parts. The two
/// components may share an odd part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Result<Self> {
        if !first.has_distinct_odd_parts() || !second.has_distinct_odd_parts() {
            return usage(format!("({first}, {second}) repeats an odd part within a component"));
        }
        Ok(Bipartition { first, second })
    }

    pub fn weight(&self) -> usize {
        self.first.weight() + self.second.weight()
    }

    pub fn swapped(&self) -> Self {
        Bipartition {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// All partitions of `n` with distinct odd parts, in decreasing
/// lexicographic order: `(4), (3,1), (2,2)` for `n = 4`.
pub fn enum_pod_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            if p % 2 == 1 && cur.last() == Some(&(p as u32)) {
                continue;
            }
            cur.push(p as u32);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n` with distinct odd parts in each component.
///
/// Ordered by the first component (heavier first, then decreasing
/// lexicographic), and for a fixed first component by the second in
/// increasing lexicographic order.
pub fn enum_pod_bipartitions(n: usize) -> Vec<Bipartition> {
    let lists: Vec<Vec<Partition>> = (0..=n).map(enum_pod_partitions).collect();
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for first in &lists[a] {
            for second in lists[n - a].iter().rev() {
                out.push(Bipartition {
                    first: first.clone(),
                    second: second.clone(),
                });
            }
        }
    }
    out
}
