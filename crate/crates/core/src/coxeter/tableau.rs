use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{CoxeterError, Partition, Perm};

/// Standard tableau stored as rows of entries `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StdTableau {
    rows: Vec<Vec<usize>>,
}

impl StdTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<StdTableau, CoxeterError> {
        let bad = || CoxeterError::InvalidTableau(format!("{rows:?}"));
        let shape: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        if shape.contains(&0) {
            return Err(bad());
        }
        Partition::new(shape).map_err(|_| bad())?;
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for r in &rows {
            for &x in r {
                if x == 0 || x > n || seen[x] {
                    return Err(bad());
                }
                seen[x] = true;
            }
            if r.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad());
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| above >= below) {
                return Err(bad());
            }
        }
        Ok(StdTableau { rows })
    }

    /// The tableau `t^λ` with `1..n` entered along the rows.
    pub fn row_reading(shape: &Partition) -> StdTableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let r: Vec<usize> = (next..next + len).collect();
                next += len;
                r
            })
            .collect();
        StdTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn transpose(&self) -> StdTableau {
        let cols = self.rows.first().map_or(0, |r| r.len());
        let rows = (0..cols)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect();
        StdTableau { rows }
    }

    /// Entries in row-reading order (top row first).
    fn reading(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The unique `d` with `d . t^λ = self`, where `w . t` replaces each
    /// entry `i` by `w(i)`.
    pub fn d(&self) -> Perm {
        Perm::from_one_line(&self.reading()).unwrap()
    }

    /// `w . t^λ` for `w` such that the result is row-standard and
    /// column-standard; `None` otherwise.
    pub fn from_d(shape: &Partition, d: &Perm) -> Option<StdTableau> {
        let base = StdTableau::row_reading(shape);
        let rows = base.rows.iter().map(|r| r.iter().map(|&k| d.apply(k)).collect()).collect();
        StdTableau::new(rows).ok()
    }

    /// All standard tableaux of the given shape, in canonical order: by the
    /// length of `d(t)`, then lexicographically on its one-line notation.
    /// The row-reading tableau comes first.
    pub fn all(shape: &Partition) -> Vec<StdTableau> {
        let n = shape.n();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.num_rows()];
        fill_tableaux(shape.parts(), 1, n, &mut rows, &mut out);
        out.sort_by_key(|t| t.d());
        out
    }
}

fn fill_tableaux(
    shape: &[usize],
    next: usize,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StdTableau>,
) {
    if next > n {
        out.push(StdTableau { rows: rows.clone() });
        return;
    }
    for i in 0..shape.len() {
        let len = rows[i].len();
        if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
            rows[i].push(next);
            fill_tableaux(shape, next + 1, n, rows, out);
            rows[i].pop();
        }
    }
}

impl TryFrom<Vec<Vec<usize>>> for StdTableau {
    type Error = CoxeterError;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        StdTableau::new(rows)
    }
}

impl From<StdTableau> for Vec<Vec<usize>> {
    fn from(t: StdTableau) -> Self {
        t.rows
    }
}

/// Row list, e.g. `[[1,2,3],[4]]`.
impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let entries: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", entries.join(","))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for StdTableau {
    type Err = CoxeterError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows: Vec<Vec<usize>> =
            serde_json::from_str(s).map_err(|_| CoxeterError::Parse(s.to_string()))?;
        StdTableau::new(rows)
    }
}

/// Output of row insertion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RskResult {
    pub shape: Partition,
    pub p: StdTableau,
    pub q: StdTableau,
}

/// Row-inserts `w(1), ..., w(n)`; `P` holds the values, `Q` records at
/// which step each box appeared.
pub fn rsk(w: &Perm) -> RskResult {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, x) in w.one_line().into_iter().enumerate() {
        let mut carry = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > carry) {
                Some(k) => {
                    std::mem::swap(&mut p[row][k], &mut carry);
                    row += 1;
                }
                None => {
                    p[row].push(carry);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    let shape = Partition::new(p.iter().map(|r| r.len()).collect()).unwrap();
    RskResult { shape, p: StdTableau { rows: p }, q: StdTableau { rows: q } }
}

/// Inverse of [`rsk`]: recovers `w` from a pair of equal-shape tableaux.
pub fn rsk_inverse(p: &StdTableau, q: &StdTableau) -> Result<Perm, CoxeterError> {
    if p.shape() != q.shape() {
        return Err(CoxeterError::ShapeMismatch(p.shape(), q.shape()));
    }
    let n = p.n();
    let mut rows = p.rows.clone();
    let mut qrows = q.rows.clone();
    let mut images = vec![0; n];
    for step in (1..=n).rev() {
        let mut row = qrows.iter().position(|r| r.last() == Some(&step)).unwrap();
        qrows[row].pop();
        let mut carry = rows[row].pop().unwrap();
        if rows[row].is_empty() {
            rows.pop();
            qrows.pop();
        }
        while row > 0 {
            row -= 1;
            let k = rows[row].iter().rposition(|&y| y < carry).unwrap();
            std::mem::swap(&mut rows[row][k], &mut carry);
        }
        images[step - 1] = carry;
    }
    Perm::from_one_line(&images)
}
