use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CoxeterError;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
/// Serialized as the comma list `"3,1"`.
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition, CoxeterError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoxeterError::InvalidPartition(format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Partition {
        if n == 0 {
            Partition(Vec::new())
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Partition {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((0..cols).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }

    /// Partial sums `lambda_1^+, lambda_2^+, ...`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    /// Dominance `self ⊴ other`: every partial sum of `self` is at most the
    /// corresponding partial sum of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let a = self.partial_sums();
        let b = other.partial_sums();
        let total_a = a.last().copied().unwrap_or(0);
        let total_b = b.last().copied().unwrap_or(0);
        if total_a != total_b {
            return false;
        }
        (0..a.len().max(b.len())).all(|i| {
            let x = a.get(i).copied().unwrap_or(total_a);
            let y = b.get(i).copied().unwrap_or(total_b);
            x <= y
        })
    }

    /// Strict dominance `self ◁ other`.
    pub fn strictly_dominated_by(&self, other: &Partition) -> bool {
        self != other && self.dominated_by(other)
    }

    /// Number of standard tableaux by the hook-length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.n() as u128).product();
        let mut den: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                den *= (row - j - 1 + conj.0[j] - i - 1 + 1) as u128;
            }
        }
        num /= den;
        num
    }

    /// All partitions of `n`, in decreasing lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, &mut cur, &mut out);
        out
    }
}

fn gen_partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for k in (1..=rest.min(max)).rev() {
        cur.push(k);
        gen_partitions(rest - k, k, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CoxeterError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl TryFrom<String> for Partition {
    type Error = CoxeterError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> Self {
        p.to_string()
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Comma list, e.g. `3,1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = CoxeterError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| CoxeterError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if parts.contains(&0) {
            return Err(CoxeterError::InvalidPartition(s.to_string()));
        }
        Partition::new(parts)
    }
}
