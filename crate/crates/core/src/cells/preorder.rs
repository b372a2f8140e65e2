use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::Perm;
use crate::hecke::KlTable;

use super::CellError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
    Two,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Two => "two",
        })
    }
}

impl FromStr for Side {
    type Err = CellError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" | "L" => Ok(Side::Left),
            "right" | "R" => Ok(Side::Right),
            "two" | "two-sided" | "LR" => Ok(Side::Two),
            _ => Err(CellError::UnknownSide(s.to_string())),
        }
    }
}

/// Bitset rows: `reach[y]` holds every `x` with `x <= y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    side: Side,
    size: usize,
    reach: Vec<Vec<u64>>,
}

/// Targets of the left arrows out of `y`: every `x` such that `C'_x`
/// occurs in `C'_s C'_y` for some generator `s`.
pub fn left_arrows(kl: &KlTable, y: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (1..kl.n())
        .flat_map(|i| kl.cprime_s_action(i, y).into_iter().map(|(x, _)| x))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

impl Preorder {
    pub fn new(kl: &KlTable, side: Side) -> Preorder {
        let g = kl.group();
        let size = g.size();
        let left: Vec<Vec<usize>> = (0..size).map(|y| left_arrows(kl, y)).collect();
        let mut arrows: Vec<Vec<usize>> = vec![Vec::new(); size];
        for y in 0..size {
            if side != Side::Right {
                arrows[y].extend(&left[y]);
            }
            if side != Side::Left {
                // x <=_R y  iff  x^{-1} <=_L y^{-1}
                arrows[y].extend(left[g.inv(y)].iter().map(|&x| g.inv(x)));
            }
            arrows[y].sort_unstable();
            arrows[y].dedup();
        }
        let words = size.div_ceil(64);
        let mut reach = vec![vec![0u64; words]; size];
        let mut queue = VecDeque::new();
        for (y, row) in reach.iter_mut().enumerate() {
            row[y / 64] |= 1 << (y % 64);
            queue.push_back(y);
            while let Some(u) = queue.pop_front() {
                for &x in &arrows[u] {
                    if row[x / 64] >> (x % 64) & 1 == 0 {
                        row[x / 64] |= 1 << (x % 64);
                        queue.push_back(x);
                    }
                }
            }
        }
        Preorder { side, size, reach }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `x <= y` by index.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.reach[y][x / 64] >> (x % 64) & 1 == 1
    }

    #[inline]
    pub fn equiv(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    /// All `x <= y`, ascending.
    pub fn below(&self, y: usize) -> Vec<usize> {
        (0..self.size).filter(|&x| self.leq(x, y)).collect()
    }
}

/// `x <= y` in the preorder of the given side.
pub fn preorder_leq(x: &Perm, y: &Perm, side: Side, kl: &KlTable) -> bool {
    let g = kl.group();
    Preorder::new(kl, side).leq(g.index_of(x), g.index_of(y))
}

/// Cells of one side with their induced partial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPartition {
    pub side: Side,
    /// Cells as ascending index lists, ordered by their smallest element.
    pub cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
    /// `leq[a][b]`: cell `a` lies below cell `b`.
    pub leq: Vec<Vec<bool>>,
}

impl CellPartition {
    pub fn new(pre: &Preorder) -> CellPartition {
        let size = pre.size();
        let mut cell_of = vec![usize::MAX; size];
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for x in 0..size {
            if cell_of[x] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = (x..size).filter(|&y| pre.equiv(x, y)).collect();
            for &m in &members {
                cell_of[m] = cells.len();
            }
            cells.push(members);
        }
        let leq = cells
            .iter()
            .map(|a| cells.iter().map(|b| pre.leq(a[0], b[0])).collect())
            .collect();
        CellPartition { side: pre.side(), cells, cell_of, leq }
    }

    pub fn cell_of(&self, x: usize) -> usize {
        self.cell_of[x]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn same_cell(&self, x: usize, y: usize) -> bool {
        self.cell_of[x] == self.cell_of[y]
    }

    /// Cells as permutation lists.
    pub fn cell_perms(&self, kl: &KlTable) -> Vec<Vec<Perm>> {
        let g = kl.group();
        self.cells.iter().map(|c| c.iter().map(|&x| g.elt(x)).collect()).collect()
    }
}

/// All three preorders and their cell partitions.
#[derive(Debug, Clone)]
pub struct CellStructure {
    pub left: Preorder,
    pub right: Preorder,
    pub two: Preorder,
    pub left_cells: CellPartition,
    pub right_cells: CellPartition,
    pub two_cells: CellPartition,
}

impl CellStructure {
    pub fn new(kl: &KlTable) -> CellStructure {
        let left = Preorder::new(kl, Side::Left);
        let right = Preorder::new(kl, Side::Right);
        let two = Preorder::new(kl, Side::Two);
        let left_cells = CellPartition::new(&left);
        let right_cells = CellPartition::new(&right);
        let two_cells = CellPartition::new(&two);
        CellStructure { left, right, two, left_cells, right_cells, two_cells }
    }

    pub fn preorder(&self, side: Side) -> &Preorder {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
            Side::Two => &self.two,
        }
    }

    pub fn partition(&self, side: Side) -> &CellPartition {
        match side {
            Side::Left => &self.left_cells,
            Side::Right => &self.right_cells,
            Side::Two => &self.two_cells,
        }
    }
}
