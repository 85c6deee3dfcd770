use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Part sizes `(n_1, ..., n_m)` of one complete multipartite block.
///
/// Order is significant (it fixes the vertex order of the distance matrix);
/// use [`MultipartiteSpec::canonical`] where only the multiset matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidSpec(format!(
                "a multipartite block needs at least two parts, got {}",
                parts.len()
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidSpec("every part must have at least one vertex".into()));
        }
        Ok(Self { parts })
    }

    /// `K_m`, all parts of size one.
    pub fn complete(m: usize) -> Result<Self> {
        Self::new(vec![1; m])
    }

    /// `T_n = K_{1,1,n-2}`: `n - 2` triangles on a common base edge.
    pub fn t(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSpec(format!("T_n needs n >= 3, got {n}")));
        }
        Self::new(vec![1, 1, n - 2])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `m`.
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// Number of vertices `|V|`.
    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Sorted ascending.
    pub fn canonical(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable();
        Self { parts }
    }

    /// Index of the part holding the `offset`-th vertex in part order.
    pub fn part_of_offset(&self, offset: usize) -> Option<usize> {
        let mut start = 0;
        for (i, &n) in self.parts.iter().enumerate() {
            if offset < start + n {
                return Some(i);
            }
            start += n;
        }
        None
    }

    /// Part index of every vertex, in part order.
    pub fn part_labels(&self) -> Vec<usize> {
        self.parts.iter().enumerate().flat_map(|(i, &n)| std::iter::repeat_n(i, n)).collect()
    }
}

impl TryFrom<Vec<usize>> for MultipartiteSpec {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<MultipartiteSpec> for Vec<usize> {
    fn from(s: MultipartiteSpec) -> Self {
        s.parts
    }
}

impl fmt::Display for MultipartiteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for MultipartiteSpec {
    type Err = Error;

    /// Accepts `2,3,4`, `K2,3,4`, `(2,3,4)` and `T7`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(n) = s.strip_prefix('T').or_else(|| s.strip_prefix('t')) {
            let n = n.parse().map_err(|_| Error::Parse(format!("bad T_n spec {s:?}")))?;
            return Self::t(n);
        }
        let body = s.trim_start_matches('K').trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad multipartite spec {s:?}")))?;
        Self::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(MultipartiteSpec::new(vec![3]).is_err());
        assert!(MultipartiteSpec::new(vec![1, 0]).is_err());
        assert_eq!(MultipartiteSpec::new(vec![2, 3]).unwrap().order(), 5);
        assert_eq!(MultipartiteSpec::t(7).unwrap().parts(), &[1, 1, 5]);
        assert!(MultipartiteSpec::t(2).is_err());
    }

    #[test]
    fn parsing() {
        let s: MultipartiteSpec = "K1,1,4".parse().unwrap();
        assert_eq!(s.parts(), &[1, 1, 4]);
        assert_eq!("(2, 3)".parse::<MultipartiteSpec>().unwrap().parts(), &[2, 3]);
        assert_eq!("T6".parse::<MultipartiteSpec>().unwrap().to_string(), "1,1,4");
        assert!("1,x".parse::<MultipartiteSpec>().is_err());
        let json: MultipartiteSpec = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(json.canonical().parts(), &[1, 3]);
        assert!(serde_json::from_str::<MultipartiteSpec>("[3]").is_err());
    }

    #[test]
    fn part_lookup() {
        let s = MultipartiteSpec::new(vec![2, 1, 3]).unwrap();
        assert_eq!(s.part_labels(), vec![0, 0, 1, 2, 2, 2]);
        assert_eq!(s.part_of_offset(2), Some(1));
        assert_eq!(s.part_of_offset(6), None);
    }
}
