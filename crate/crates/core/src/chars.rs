//! Formal characters: finite weight multisets over a semisimple algebra's
//! weight lattice.
//!
//! A character is stored sparsely as `weight -> multiplicity`. Weights use
//! the algebra's ambient coordinates (see [`Layout`]); exact rationals make
//! the map keys canonical.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{Signed, ToPrimitive, Zero};

use crate::rootsys::{Layout, RootSystem, SemisimpleAlgebra, SimpleType, Weight};
use crate::{q, Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    algebra: SemisimpleAlgebra,
    weights: BTreeMap<Weight, u64>,
    dim: u64,
}

impl FormalCharacter {
    /// Builds a character from `(weight, multiplicity)` pairs, merging
    /// repeats and dropping zero multiplicities. Every weight must have the
    /// algebra's ambient dimension and lie in its weight lattice.
    pub fn from_weights<I>(algebra: &SemisimpleAlgebra, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, u64)>,
    {
        let layout = algebra.layout();
        let mut map = BTreeMap::new();
        for (w, m) in weights {
            layout.check_dim(&w)?;
            if !layout.is_in_lattice(&w) {
                return Err(Error::Invalid(format!("{w} is not in the weight lattice of {algebra}")));
            }
            if m > 0 {
                *map.entry(w).or_insert(0) += m;
            }
        }
        Ok(Self::from_map(algebra.clone(), map))
    }

    fn from_map(algebra: SemisimpleAlgebra, weights: BTreeMap<Weight, u64>) -> Self {
        let dim = weights.values().sum();
        Self {
            algebra,
            weights,
            dim,
        }
    }

    /// The zero character (no weights).
    pub fn empty(algebra: &SemisimpleAlgebra) -> Self {
        Self::from_map(algebra.clone(), BTreeMap::new())
    }

    /// The one-dimensional trivial character.
    pub fn trivial(algebra: &SemisimpleAlgebra) -> Self {
        let mut m = BTreeMap::new();
        m.insert(Weight::zero(algebra.rank()), 1);
        Self::from_map(algebra.clone(), m)
    }

    /// All roots with multiplicity 1 plus the zero weight with
    /// multiplicity `rank`.
    pub fn adjoint(algebra: &SemisimpleAlgebra) -> Self {
        let layout = algebra.layout();
        let mut m: BTreeMap<Weight, u64> = layout.roots().into_iter().map(|r| (r, 1)).collect();
        m.insert(Weight::zero(layout.dim()), algebra.rank() as u64);
        Self::from_map(algebra.clone(), m)
    }

    pub fn algebra(&self) -> &SemisimpleAlgebra {
        &self.algebra
    }

    /// Total multiplicity.
    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// Number of distinct weights.
    pub fn support_size(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &BTreeMap<Weight, u64> {
        &self.weights
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.weights.iter().map(|(w, &m)| (w, m))
    }

    fn require_same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch {
                left: self.algebra.to_string(),
                right: other.algebra.to_string(),
            });
        }
        Ok(())
    }

    /// Multiset union.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.require_same_algebra(other)?;
        let mut m = self.weights.clone();
        for (w, &k) in &other.weights {
            *m.entry(w.clone()).or_insert(0) += k;
        }
        Ok(Self::from_map(self.algebra.clone(), m))
    }

    /// Character of the tensor product: all pairwise sums of weights.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.require_same_algebra(other)?;
        let mut m: HashMap<Weight, u64> = HashMap::new();
        for (a, &x) in &self.weights {
            for (b, &y) in &other.weights {
                *m.entry(a + b).or_insert(0) += x * y;
            }
        }
        Ok(Self::from_map(self.algebra.clone(), m.into_iter().collect()))
    }

    /// Character of the dual representation.
    pub fn dual(&self) -> Self {
        let m = self.weights.iter().map(|(w, &k)| (-w, k)).collect();
        Self::from_map(self.algebra.clone(), m)
    }

    /// Character of `V (x) V*`, which contains the adjoint representation
    /// whenever `V` is faithful.
    pub fn saturate(&self) -> Result<Self> {
        if !self.is_faithful() {
            return Err(Error::NotFaithful);
        }
        self.tensor(&self.dual())
    }

    /// A representation of a semisimple algebra is faithful iff no simple
    /// ideal acts trivially, i.e. every factor's coordinate block is
    /// nonzero on some weight.
    pub fn is_faithful(&self) -> bool {
        let layout = self.algebra.layout();
        (0..layout.num_factors()).all(|f| {
            let (off, len) = layout.block(f);
            self.weights
                .keys()
                .any(|w| w.coords()[off..off + len].iter().any(|c| !c.is_zero()))
        })
    }

    /// True if every simple reflection fixes the multiset.
    pub fn is_weyl_invariant(&self) -> bool {
        let layout = self.algebra.layout();
        (0..layout.dim()).all(|i| {
            self.weights
                .iter()
                .all(|(w, &m)| self.multiplicity(&layout.reflect(i, w)) == m)
        })
    }

    /// True if every root of the algebra occurs as a weight.
    pub fn contains_all_roots(&self) -> bool {
        self.algebra
            .layout()
            .roots()
            .iter()
            .all(|r| self.weights.contains_key(r))
    }

    /// True if `other` is a sub-multiset of `self`.
    pub fn contains(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && other
                .weights
                .iter()
                .all(|(w, &m)| self.multiplicity(w) >= m)
    }

    /// Re-labels the weights by an arbitrary map into another algebra's
    /// coordinates. Used by character restriction.
    pub(crate) fn map_weights<F>(&self, target: &SemisimpleAlgebra, f: F) -> Self
    where
        F: Fn(&Weight) -> Weight,
    {
        let mut m = BTreeMap::new();
        for (w, &k) in &self.weights {
            *m.entry(f(w)).or_insert(0) += k;
        }
        Self::from_map(target.clone(), m)
    }
}

type DominantTable = Arc<Vec<(Weight, u64)>>;

static FREUDENTHAL: OnceLock<RwLock<HashMap<(SimpleType, Weight), DominantTable>>> = OnceLock::new();

/// Dominant weights of the irreducible module with highest weight `hw`
/// together with their multiplicities, ordered from `hw` downwards.
///
/// Only dominant weights are visited: the dominant weights below `hw` are
/// reached from `hw` by subtracting positive roots without leaving the
/// dominant chamber, and every multiplicity needed by Freudenthal's
/// recursion is read off the dominant conjugate.
pub fn dominant_multiplicities(rs: &RootSystem, hw: &Weight) -> Result<DominantTable> {
    rs.check_dim(hw)?;
    let labels = rs.dynkin_labels(hw);
    if labels.iter().any(|c| !c.is_integer()) {
        return Err(Error::NotIntegral);
    }
    if labels.iter().any(|c| c.is_negative()) {
        return Err(Error::NotDominant);
    }
    let key = (rs.simple_type(), hw.clone());
    let cache = FREUDENTHAL.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("cache poisoned").get(&key) {
        return Ok(t.clone());
    }
    let table = Arc::new(freudenthal(rs, hw));
    cache
        .write()
        .expect("cache poisoned")
        .entry(key)
        .or_insert_with(|| table.clone());
    Ok(table)
}

fn freudenthal(rs: &RootSystem, hw: &Weight) -> Vec<(Weight, u64)> {
    let pos = rs.positive_roots();
    let depth = |w: &Weight| -> i128 {
        rs.simple_root_expansion(&(hw - w))
            .iter()
            .map(|c| c.to_integer())
            .sum()
    };

    let mut dominant = vec![hw.clone()];
    let mut seen: std::collections::HashSet<Weight> = dominant.iter().cloned().collect();
    let mut i = 0;
    while i < dominant.len() {
        let mu = dominant[i].clone();
        for a in pos {
            let nu = &mu - a;
            if rs.is_dominant(&nu) && seen.insert(nu.clone()) {
                dominant.push(nu);
            }
        }
        i += 1;
    }
    let mut dominant: Vec<(i128, Weight)> = dominant.into_iter().map(|w| (depth(&w), w)).collect();
    dominant.sort();

    let shifted = hw + rs.rho();
    let top = rs.inner(&shifted, &shifted);
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    let mut out = Vec::with_capacity(dominant.len());
    for (d, mu) in dominant {
        let m = if d == 0 {
            1
        } else {
            let mut acc = Rational::zero();
            for a in pos {
                let mut k = 1;
                loop {
                    let nu = mu.add_scaled(q(k), a);
                    let mn = mult.get(&rs.to_dominant(&nu)).copied().unwrap_or(0);
                    if mn == 0 {
                        break;
                    }
                    acc += q(mn as i128) * rs.inner(&nu, a);
                    k += 1;
                }
            }
            let s = &mu + rs.rho();
            let denom = top - rs.inner(&s, &s);
            let m = q(2) * acc / denom;
            debug_assert!(m.is_integer() && !m.is_negative());
            m.to_integer().to_u64().expect("multiplicity fits in u64")
        };
        if m > 0 {
            mult.insert(mu.clone(), m);
            out.push((mu, m));
        }
    }
    out
}

/// Irreducible character of a simple factor, as a full weight list.
fn simple_irreducible(rs: &RootSystem, hw: &Weight) -> Result<Vec<(Weight, u64)>> {
    let table = dominant_multiplicities(rs, hw)?;
    let mut out = Vec::new();
    for (mu, m) in table.iter() {
        for w in rs.weyl_orbit(mu)? {
            out.push((w, *m));
        }
    }
    Ok(out)
}

/// Character of the irreducible representation of `g` with highest weight
/// `hw` (ambient coordinates). Multiplicities come from Freudenthal's
/// formula on each simple factor; the factors are then tensored.
pub fn irreducible_character(g: &SemisimpleAlgebra, hw: &Weight) -> Result<FormalCharacter> {
    let layout = g.layout();
    layout.check_dim(hw)?;
    let mut acc: Vec<(Vec<Rational>, u64)> = vec![(Vec::new(), 1)];
    for f in 0..layout.num_factors() {
        let part = simple_irreducible(layout.system(f), &layout.restrict(f, hw))?;
        let mut next = Vec::with_capacity(acc.len() * part.len());
        for (prefix, m) in &acc {
            for (w, k) in &part {
                let mut c = prefix.clone();
                c.extend_from_slice(w.coords());
                next.push((c, m * k));
            }
        }
        acc = next;
    }
    let map = acc.into_iter().map(|(c, m)| (Weight::new(c), m)).collect();
    Ok(FormalCharacter::from_map(g.clone(), map))
}

/// Irreducible character from Dynkin labels.
pub fn irreducible_from_labels(g: &SemisimpleAlgebra, labels: &[i64]) -> Result<FormalCharacter> {
    let labels: Vec<Rational> = labels.iter().map(|&x| q(x as i128)).collect();
    let hw = g.layout().weight_from_dynkin(&labels)?;
    irreducible_character(g, &hw)
}

/// Convenience wrapper over [`Layout::weight_from_dynkin`].
pub fn highest_weight(layout: &Layout, labels: &[i64]) -> Result<Weight> {
    let labels: Vec<Rational> = labels.iter().map(|&x| q(x as i128)).collect();
    layout.weight_from_dynkin(&labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn alg(ts: &[(Family, usize)]) -> SemisimpleAlgebra {
        SemisimpleAlgebra::new(ts.iter().map(|&(f, n)| SimpleType::new(f, n).unwrap()).collect()).unwrap()
    }

    fn std_a1() -> FormalCharacter {
        let g = alg(&[(Family::A, 1)]);
        irreducible_from_labels(&g, &[1]).unwrap()
    }

    #[test]
    fn adjoint_a1() {
        let g = alg(&[(Family::A, 1)]);
        let c = FormalCharacter::adjoint(&g);
        assert_eq!(c.dim(), 3);
        assert_eq!(c.multiplicity(&Weight::from_ints(&[2])), 1);
        assert_eq!(c.multiplicity(&Weight::from_ints(&[0])), 1);
        assert_eq!(c.multiplicity(&Weight::from_ints(&[-2])), 1);
    }

    #[test]
    fn adjoint_a2_and_product() {
        let c = FormalCharacter::adjoint(&alg(&[(Family::A, 2)]));
        assert_eq!(c.dim(), 8);
        assert_eq!(c.multiplicity(&Weight::zero(2)), 2);
        let c = FormalCharacter::adjoint(&alg(&[(Family::A, 1), (Family::A, 1)]));
        assert_eq!(c.dim(), 6);
        let nonzero: Vec<_> = c.weights().keys().filter(|w| !w.is_zero()).collect();
        assert_eq!(nonzero.len(), 4);
        assert!(nonzero
            .iter()
            .all(|w| w.coords().iter().filter(|x| !x.is_zero()).count() == 1));
    }

    #[test]
    fn std_tensor_dual_is_adjoint_plus_trivial() {
        let v = std_a1();
        assert_eq!(v.dim(), 2);
        let t = v.tensor(&v.dual()).unwrap();
        let g = v.algebra().clone();
        let expected = FormalCharacter::adjoint(&g).sum(&FormalCharacter::trivial(&g)).unwrap();
        assert_eq!(t, expected);
        assert_eq!(v.saturate().unwrap(), expected);
    }

    #[test]
    fn dual_of_adjoint_and_empty_sum() {
        let c = FormalCharacter::adjoint(&alg(&[(Family::A, 2)]));
        assert_eq!(c.dual(), c);
        assert_eq!(c.sum(&FormalCharacter::empty(c.algebra())).unwrap(), c);
    }

    #[test]
    fn saturate_adjoint_a2() {
        let c = FormalCharacter::adjoint(&alg(&[(Family::A, 2)]));
        let s = c.saturate().unwrap();
        assert_eq!(s.dim(), 64);
        assert!(s.contains_all_roots());
        assert!(s.is_faithful());
    }

    #[test]
    fn faithfulness() {
        let g = alg(&[(Family::A, 1), (Family::A, 1)]);
        assert!(FormalCharacter::adjoint(&g).is_faithful());
        assert!(!FormalCharacter::empty(&g).is_faithful());
        let v = irreducible_from_labels(&g, &[1, 0]).unwrap();
        assert_eq!(v.dim(), 2);
        assert!(!v.is_faithful());
        assert_eq!(v.saturate(), Err(Error::NotFaithful));
    }

    #[test]
    fn rank_one_irreducibles() {
        let g = alg(&[(Family::A, 1)]);
        for m in 0..6 {
            let c = irreducible_from_labels(&g, &[m]).unwrap();
            assert_eq!(c.support_size() as i64, m + 1);
            assert!(c.weights().values().all(|&k| k == 1));
        }
    }

    #[test]
    fn small_irreducibles() {
        let a2 = alg(&[(Family::A, 2)]);
        let c = irreducible_from_labels(&a2, &[1, 1]).unwrap();
        assert_eq!(c, FormalCharacter::adjoint(&a2));
        let a3 = alg(&[(Family::A, 3)]);
        assert_eq!(irreducible_from_labels(&a3, &[0, 1, 0]).unwrap().dim(), 6);
        let g2 = alg(&[(Family::G, 2)]);
        assert_eq!(irreducible_from_labels(&g2, &[1, 0]).unwrap().dim(), 7);
        assert_eq!(irreducible_from_labels(&g2, &[0, 1]).unwrap().dim(), 14);
        let f4 = alg(&[(Family::F, 4)]);
        assert_eq!(irreducible_from_labels(&f4, &[0, 0, 0, 1]).unwrap().dim(), 26);
        assert_eq!(irreducible_from_labels(&f4, &[1, 0, 0, 0]).unwrap().dim(), 52);
    }

    #[test]
    fn bad_highest_weights() {
        let a1 = alg(&[(Family::A, 1)]);
        assert_eq!(irreducible_from_labels(&a1, &[-1]), Err(Error::NotDominant));
        let w = Weight::new(vec![crate::qq(1, 2)]);
        assert_eq!(irreducible_character(&a1, &w), Err(Error::NotIntegral));
    }

    #[test]
    fn algebra_mismatch() {
        let a = FormalCharacter::adjoint(&alg(&[(Family::A, 2)]));
        let b = FormalCharacter::adjoint(&alg(&[(Family::G, 2)]));
        assert!(matches!(a.tensor(&b), Err(Error::AlgebraMismatch { .. })));
    }
}
