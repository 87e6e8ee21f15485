use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// An integer partition, stored as a nonincreasing list of positive parts.
///
/// The ordering sorts by size first and then in *descending* lexicographic
/// order on the parts, so iterating a `BTreeMap<Partition, _>` walks each
/// degree from `(n)` down to `(1^n)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates that `parts` are positive and nonincreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self, ParseError> {
        if parts.contains(&0) {
            return Err(ParseError::Partition(
                format!("{parts:?}"),
                "parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError::Partition(
                format!("{parts:?}"),
                "parts must be nonincreasing".into(),
            ));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Builds `(1^{m_1} 2^{m_2} ...)` from `(part, multiplicity)` pairs.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Self::from_parts(
            pairs
                .into_iter()
                .flat_map(|(p, m)| std::iter::repeat_n(p, m as usize)),
        )
    }

    pub fn single(n: u32) -> Self {
        Self::from_parts([n])
    }

    /// `(1^n)`
    pub fn ones(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.0.iter().filter(|&&p| p == part).count() as u32
    }

    /// `(part, multiplicity)` pairs in increasing order of part.
    pub fn exponents(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let n = self.largest();
        Partition(
            (1..=n)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        Partition(v)
    }

    pub fn with_part(&self, part: u32) -> Self {
        self.union(&Partition::single(part))
    }

    /// Removes one copy of `part`, if present.
    pub fn without_part(&self, part: u32) -> Option<Self> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }

    /// The parts greater than one, with the number of ones removed.
    pub fn split_ones(&self) -> (Partition, u32) {
        let ones = self.multiplicity(1);
        let rest = self.0.iter().copied().filter(|&p| p > 1).collect();
        (Partition(rest), ones)
    }

    /// Number of parts strictly greater than one.
    pub fn big_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p > 1).count()
    }

    /// Part `i` (0-based), or zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// True if `other` fits inside `self` as a Young diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.0[i] <= self.0[i])
    }

    pub fn exponent_string(&self) -> String {
        self.exponents()
            .iter()
            .rev()
            .map(|(p, m)| format!("{p}^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `[4,2,1,1]`, `(4,2,1,1)`, `4,2,1,1`, `4 2 1 1`, the exponent form
/// `4^1 2^1 1^2`, and `[]` / `()` / `0` for the empty partition.
impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| ParseError::Partition(s.to_string(), why.to_string());
        let body = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        if body.is_empty() || body == "0" {
            return Ok(Partition::empty());
        }
        let tokens: Vec<&str> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.iter().any(|t| t.contains('^')) {
            let mut parts = Vec::new();
            for t in tokens {
                let (p, m) = t.split_once('^').unwrap_or((t, "1"));
                let p: u32 = p.parse().map_err(|_| bad("bad part"))?;
                let m: u32 = m.parse().map_err(|_| bad("bad exponent"))?;
                if p == 0 {
                    return Err(bad("parts must be positive"));
                }
                parts.extend(std::iter::repeat_n(p, m as usize));
            }
            return Ok(Partition::from_parts(parts));
        }
        let parts = tokens
            .iter()
            .map(|t| t.parse::<u32>().map_err(|_| bad("bad part")))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|_| bad("parts must be positive and nonincreasing"))
    }
}

/// All partitions of `n`, optionally bounded by `max_part` and restricted to
/// parts drawn from `parts_from`, in descending lexicographic order.
pub fn partitions_of(
    n: u32,
    max_part: Option<u32>,
    parts_from: Option<&BTreeSet<u32>>,
) -> Vec<Partition> {
    let mut allowed: Vec<u32> = match parts_from {
        Some(set) => set.iter().copied().filter(|&p| p > 0 && p <= n).collect(),
        None => (1..=n).collect(),
    };
    if let Some(m) = max_part {
        allowed.retain(|&p| p <= m);
    }
    allowed.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, &allowed, 0, &mut cur, &mut out);
    out
}

fn fill(rem: u32, allowed: &[u32], from: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for (i, &p) in allowed.iter().enumerate().skip(from) {
        if p <= rem {
            cur.push(p);
            fill(rem - p, allowed, i, cur, out);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_lists() {
        assert_eq!(partitions_of(0, None, None), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(3, None, None),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        let pow2: BTreeSet<u32> = [1, 2, 4, 8].into_iter().collect();
        assert_eq!(
            partitions_of(6, None, Some(&pow2)),
            vec![
                p(&[4, 2]),
                p(&[4, 1, 1]),
                p(&[2, 2, 2]),
                p(&[2, 2, 1, 1]),
                p(&[2, 1, 1, 1, 1]),
                p(&[1; 6]),
            ]
        );
        assert_eq!(partitions_of(12, None, None).len(), 77);
    }

    #[test]
    fn ordering_matches_listing() {
        let mut v = partitions_of(7, None, None);
        let listed = v.clone();
        v.sort();
        assert_eq!(v, listed);
        assert!(p(&[5]) < p(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn text_forms() {
        let a: Partition = "[4,2,1,1]".parse().unwrap();
        let b: Partition = "4^1 2^1 1^2".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[4,2,1,1]");
        assert_eq!(a.exponent_string(), "4^1 2^1 1^2");
        assert_eq!(a.exponent_string().parse::<Partition>().unwrap(), a);
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[2,0]".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 2, 2, 1]).conjugate(), p(&[4, 3]));
        assert_eq!(p(&[4, 3]).conjugate(), p(&[2, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }
}
