use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Cartan-Killing family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn rank_bound(self) -> &'static str {
        match self {
            Family::A => "A needs n >= 1",
            Family::B => "B needs n >= 1",
            Family::C => "C needs n >= 1",
            Family::D => "D needs n >= 3",
            Family::E => "E needs n in {6, 7, 8}",
            Family::F => "F needs n = 4",
            Family::G => "G needs n = 2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One simple complex Lie algebra, normalized so that each isomorphism
/// class has exactly one representative (B1 = C1 = A1, C2 = B2, D3 = A3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = || Error::InvalidRank {
            family,
            rank,
            bound: family.rank_bound(),
        };
        if rank == 0 {
            return Err(invalid());
        }
        let (family, rank) = match (family, rank) {
            (Family::B, 1) | (Family::C, 1) => (Family::A, 1),
            (Family::C, 2) => (Family::B, 2),
            (Family::D, 2) => return Err(Error::D2NotSimple),
            (Family::D, 1) => return Err(invalid()),
            (Family::D, 3) => (Family::A, 3),
            (Family::E, 6..=8) => (Family::E, rank),
            (Family::E, _) => return Err(invalid()),
            (Family::F, 4) => (Family::F, 4),
            (Family::F, _) => return Err(invalid()),
            (Family::G, 2) => (Family::G, 2),
            (Family::G, _) => return Err(invalid()),
            other => other,
        };
        Ok(Self { family, rank })
    }

    /// Type A_n; panics on n = 0.
    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("A_n needs n >= 1")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_type_a(&self) -> bool {
        self.family == Family::A
    }

    /// Dimension of the Lie algebra.
    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Number of roots, from the classical tables.
    pub fn root_count(&self) -> usize {
        self.dim() - self.rank
    }

    /// Order of the Weyl group, from the classical tables.
    pub fn classical_weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Every valid simple type with rank at most `max_rank`, in canonical order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let mut out: Vec<SimpleType> = Family::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |n| SimpleType::new(f, n).ok()))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses `"E8"`, `"a4"`, ... (a letter followed by a decimal rank).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Invalid(format!("expected a family letter A-G in {s:?}")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Invalid(format!("expected a decimal rank in {s:?}")))?;
        SimpleType::new(family, rank)
    }
}

/// A complex semisimple Lie algebra as a multiset of simple factors.
///
/// Factors are kept sorted (family, then rank) so that derived equality is
/// multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemisimpleAlgebra {
    factors: Vec<SimpleType>,
}

impl SemisimpleAlgebra {
    pub fn new(mut factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyAlgebra);
        }
        factors.sort();
        Ok(Self { factors })
    }

    pub fn simple(t: SimpleType) -> Self {
        Self { factors: vec![t] }
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(SimpleType::rank).sum()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(SimpleType::dim).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_type_a(&self) -> bool {
        self.factors.iter().all(SimpleType::is_type_a)
    }

    /// Number of factors equal to `t`.
    pub fn count(&self, t: SimpleType) -> usize {
        self.factors.iter().filter(|&&f| f == t).count()
    }

    /// Direct sum.
    pub fn product(&self, other: &SemisimpleAlgebra) -> SemisimpleAlgebra {
        let mut f = self.factors.clone();
        f.extend_from_slice(&other.factors);
        f.sort();
        SemisimpleAlgebra { factors: f }
    }

    /// True if `sub` is a sub-multiset of the factors.
    pub fn contains_all(&self, sub: &[SimpleType]) -> bool {
        let mut pool = self.factors.clone();
        for t in sub {
            match pool.iter().position(|x| x == t) {
                Some(i) => {
                    pool.swap_remove(i);
                }
                None => return false,
            }
        }
        true
    }

    /// Removes the sub-multiset `remove` and adds `add`. `None` if `remove`
    /// is not contained, or if nothing would be left.
    pub fn replace(&self, remove: &[SimpleType], add: &[SimpleType]) -> Option<SemisimpleAlgebra> {
        let mut pool = self.factors.clone();
        for t in remove {
            let i = pool.iter().position(|x| x == t)?;
            pool.remove(i);
        }
        pool.extend_from_slice(add);
        SemisimpleAlgebra::new(pool).ok()
    }
}

impl From<SimpleType> for SemisimpleAlgebra {
    fn from(t: SimpleType) -> Self {
        SemisimpleAlgebra::simple(t)
    }
}

impl fmt::Display for SemisimpleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_rank_coincidences_normalize() {
        assert_eq!(SimpleType::new(Family::B, 1).unwrap(), SimpleType::a(1));
        assert_eq!(SimpleType::new(Family::C, 1).unwrap(), SimpleType::a(1));
        assert_eq!(
            SimpleType::new(Family::C, 2).unwrap(),
            SimpleType::new(Family::B, 2).unwrap()
        );
        assert_eq!(SimpleType::new(Family::D, 3).unwrap(), SimpleType::a(3));
        assert_eq!(SimpleType::new(Family::D, 2), Err(Error::D2NotSimple));
    }

    #[test]
    fn rank_bounds_are_enforced() {
        assert!(SimpleType::new(Family::A, 0).is_err());
        assert!(SimpleType::new(Family::D, 1).is_err());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::F, 3).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
        assert!(SimpleType::new(Family::E, 7).is_ok());
    }

    #[test]
    fn multiset_equality_ignores_order() {
        let e7 = SimpleType::new(Family::E, 7).unwrap();
        let a1 = SimpleType::a(1);
        let g = SemisimpleAlgebra::new(vec![e7, a1]).unwrap();
        let h = SemisimpleAlgebra::new(vec![a1, e7]).unwrap();
        assert_eq!(g, h);
        assert_eq!(g.to_string(), "A1xE7");
        assert_eq!(g.rank(), 8);
        assert_eq!(g.dim(), 136);
    }

    #[test]
    fn empty_algebra_rejected() {
        assert_eq!(SemisimpleAlgebra::new(vec![]), Err(Error::EmptyAlgebra));
    }

    #[test]
    fn replace_sub_multiset() {
        let a1 = SimpleType::a(1);
        let g = SemisimpleAlgebra::new(vec![a1, a1, SimpleType::a(2)]).unwrap();
        let h = g.replace(&[a1, a1], &[SimpleType::a(2)]).unwrap();
        assert_eq!(h.to_string(), "A2xA2");
        assert!(g.replace(&[SimpleType::a(3)], &[]).is_none());
    }

    #[test]
    fn simple_type_from_str() {
        assert_eq!("e8".parse::<SimpleType>().unwrap().to_string(), "E8");
        assert_eq!("C2".parse::<SimpleType>().unwrap().to_string(), "B2");
        assert!("X3".parse::<SimpleType>().is_err());
        assert!("A".parse::<SimpleType>().is_err());
    }
}
