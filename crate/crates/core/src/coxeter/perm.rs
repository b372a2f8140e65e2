use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::CoxeterError;

/// Largest rank a [`Perm`] can hold.
pub const MAX_N: usize = 12;

/// Element of `S_n` in one-line notation.
///
/// Entry `k` of the one-line notation is the image of `k`. Composition
/// follows function composition: `(x * y)(k) = x(y(k))`, so `s_i * w`
/// swaps the values `i, i+1` in `w` and `w * s_i` swaps positions `i, i+1`.
///
/// The ordering compares rank, then length, then one-line notation
/// lexicographically. Sorting a group by it yields the canonical
/// length-lex enumeration used throughout the crate.
#[derive(Clone, Copy)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_N],
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n <= MAX_N, "rank {n} exceeds {MAX_N}");
        let mut img = [0u8; MAX_N];
        for (k, slot) in img.iter_mut().enumerate().take(n) {
            *slot = k as u8;
        }
        Perm { n: n as u8, img }
    }

    /// The simple reflection `s_i = (i, i+1)`, `1 <= i < n`.
    pub fn generator(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "generator s{i} not in S_{n}");
        let mut p = Perm::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Perm, CoxeterError> {
        let n = images.len();
        if n > MAX_N {
            return Err(CoxeterError::RankTooLarge(n));
        }
        let mut seen = [false; MAX_N];
        let mut img = [0u8; MAX_N];
        for (k, &x) in images.iter().enumerate() {
            if x == 0 || x > n || seen[x - 1] {
                return Err(CoxeterError::InvalidPermutation(format!("{images:?}")));
            }
            seen[x - 1] = true;
            img[k] = (x - 1) as u8;
        }
        Ok(Perm { n: n as u8, img })
    }

    /// The product `s_{i_1} s_{i_2} ... s_{i_k}` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Perm, CoxeterError> {
        if n > MAX_N {
            return Err(CoxeterError::RankTooLarge(n));
        }
        let mut p = Perm::identity(n);
        for &i in word.iter().rev() {
            if i == 0 || i >= n {
                return Err(CoxeterError::InvalidGenerator { n, index: i });
            }
            p = p.lmul_gen(i);
        }
        Ok(p)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images0().iter().map(|&x| x as usize + 1).collect()
    }

    /// 0-based images, the internal representation.
    #[inline]
    pub fn images0(&self) -> &[u8] {
        &self.img[..self.n as usize]
    }

    /// Image of `k` (1-based).
    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.img[k - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images0().iter().enumerate().all(|(k, &x)| k == x as usize)
    }

    pub fn inverse(&self) -> Perm {
        let mut img = [0u8; MAX_N];
        for (k, &x) in self.images0().iter().enumerate() {
            img[x as usize] = k as u8;
        }
        Perm { n: self.n, img }
    }

    /// `self * other`, i.e. `k -> self(other(k))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut img = [0u8; MAX_N];
        for (k, slot) in img.iter_mut().enumerate().take(self.n()) {
            *slot = self.img[other.img[k] as usize];
        }
        Perm { n: self.n, img }
    }

    /// `s_i * self`.
    pub fn lmul_gen(&self, i: usize) -> Perm {
        let mut p = *self;
        for x in p.img[..self.n()].iter_mut() {
            if *x as usize == i - 1 {
                *x = i as u8;
            } else if *x as usize == i {
                *x = (i - 1) as u8;
            }
        }
        p
    }

    /// `self * s_i`.
    pub fn rmul_gen(&self, i: usize) -> Perm {
        let mut p = *self;
        p.img.swap(i - 1, i);
        p
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = self.images0();
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `(-1)^length`.
    pub fn sign(&self) -> i32 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `l(w s_i) < l(w)`.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    /// `l(s_i w) < l(w)`: the value `i+1` sits left of `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let v = self.images0();
        let a = v.iter().position(|&x| x as usize == i - 1).unwrap();
        let b = v.iter().position(|&x| x as usize == i).unwrap();
        b < a
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_left_descent(i)).collect()
    }

    /// Lexicographically smallest reduced word, found by repeatedly
    /// stripping the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = *self;
        let mut word = Vec::with_capacity(w.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.lmul_gen(i);
        }
        word
    }

    /// Reduced word rendered as `s1 s2 s1`; the identity renders as `1`.
    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
        }
    }

    /// Bruhat order, decided by the lifting property along a reduced word
    /// of `w`: if `w s < w` then `y <= w` iff `min(y, y s) <= w s`.
    pub fn bruhat_leq(&self, w: &Perm) -> bool {
        assert_eq!(self.n, w.n, "rank mismatch");
        let mut y = *self;
        let mut w = *w;
        loop {
            if y.length() > w.length() {
                return false;
            }
            match (1..w.n()).find(|&i| w.has_right_descent(i)) {
                None => return y.is_identity(),
                Some(s) => {
                    if y.has_right_descent(s) {
                        y = y.rmul_gen(s);
                    }
                    w = w.rmul_gen(s);
                }
            }
        }
    }

    /// Cycle type as a weakly decreasing list of cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = [false; MAX_N];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.img[k] as usize;
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    /// Parses one-line notation (`[3,2,1,4]` or `3,2,1,4`) or, when a rank
    /// is supplied, a reduced word such as `s1 s2 s1` (`1` is the identity).
    pub fn parse(s: &str, n: Option<usize>) -> Result<Perm, CoxeterError> {
        let t = s.trim();
        let err = || CoxeterError::Parse(s.to_string());
        if t.starts_with('[') || t.contains(',') {
            let inner = t.trim_start_matches('[').trim_end_matches(']');
            let images = inner
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| err()))
                .collect::<Result<Vec<_>, _>>()?;
            let p = Perm::from_one_line(&images)?;
            if let Some(n) = n {
                if p.n() != n {
                    return Err(CoxeterError::RankMismatch { expected: n, found: p.n() });
                }
            }
            return Ok(p);
        }
        let n = n.ok_or_else(err)?;
        if t == "1" || t == "e" || t.is_empty() {
            return Ok(Perm::identity(n));
        }
        let word = t
            .split(|c: char| c.is_whitespace() || c == '*' || c == '.')
            .filter(|x| !x.is_empty())
            .map(|x| x.strip_prefix('s').ok_or_else(err)?.parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        Perm::from_word(n, &word)
    }
}

impl PartialEq for Perm {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.images0() == other.images0()
    }
}

impl Eq for Perm {}

impl Hash for Perm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.images0().hash(state);
    }
}

impl Ord for Perm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.length().cmp(&other.length()))
            .then_with(|| self.images0().cmp(other.images0()))
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.one_line().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Serialized as the one-line string `[3,2,1,4]`, usable as a map key.
impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Perm::parse(&s, None).map_err(de::Error::custom)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All elements of `S_n` in length-lex order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=n).collect();
    permute(&mut current, 0, &mut out);
    out.sort();
    out
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k == v.len() {
        out.push(Perm::from_one_line(v).unwrap());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}
