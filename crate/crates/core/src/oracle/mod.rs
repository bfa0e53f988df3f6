//! Brute-force engines used to cross-check the rest of the crate on small
//! instances.

pub mod suite;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::dioph::{projection_term, DSolution};
use crate::equiv::instances;
use crate::rootsys::{SemisimpleAlgebra, SimpleType, Weight};
use crate::{q, qq, Error, Rational, Result};

/// An equal-rank containment `right ⊂ left` usable in either direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRelation {
    pub left: SemisimpleAlgebra,
    pub right: SemisimpleAlgebra,
    pub source: String,
}

impl fmt::Display for RewriteRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {} [{}]", self.left, self.right, self.source)
    }
}

/// Relations from the maximal-rank table for ambients of rank at most
/// `max_rank`. Low-rank coincidences (B2 = C2, D3 = A3, ...) are already
/// built into [`SimpleType`] normalization.
pub fn relations(max_rank: usize) -> Vec<RewriteRelation> {
    instances(max_rank)
        .into_iter()
        .map(|i| RewriteRelation {
            left: SemisimpleAlgebra::simple(i.ambient),
            source: i.citation(),
            right: i.sub,
        })
        .collect()
}

/// States reachable from `g` by one relation application.
pub fn neighbors(g: &SemisimpleAlgebra, rels: &[RewriteRelation]) -> Vec<SemisimpleAlgebra> {
    let mut out = Vec::new();
    for r in rels {
        if let Some(x) = g.replace(r.left.factors(), r.right.factors()) {
            out.push(x);
        }
        if let Some(x) = g.replace(r.right.factors(), r.left.factors()) {
            out.push(x);
        }
    }
    out
}

/// BFS distance from `g` to `h` in the rewrite graph, if at most
/// `max_depth`.
pub fn rewrite_distance(g: &SemisimpleAlgebra, h: &SemisimpleAlgebra, max_depth: usize) -> Option<usize> {
    if g == h {
        return Some(0);
    }
    if g.rank() != h.rank() {
        return None;
    }
    let rels = relations(g.rank());
    let mut seen: HashSet<SemisimpleAlgebra> = HashSet::from([g.clone()]);
    let mut frontier = vec![g.clone()];
    for depth in 1..=max_depth {
        let mut next = Vec::new();
        for s in &frontier {
            for x in neighbors(s, &rels) {
                if &x == h {
                    return Some(depth);
                }
                if seen.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    None
}

/// Bounded certifier: `true` means `g` and `h` are connected by at most
/// `max_depth` relation applications. `false` claims nothing.
pub fn rewrite_reachable(g: &SemisimpleAlgebra, h: &SemisimpleAlgebra, max_depth: usize) -> bool {
    rewrite_distance(g, h, max_depth).is_some()
}

/// Distances from `g` to every state within `max_depth` (unbounded when
/// `None`).
pub fn bfs_distances(
    g: &SemisimpleAlgebra,
    rels: &[RewriteRelation],
    max_depth: Option<usize>,
) -> HashMap<SemisimpleAlgebra, usize> {
    let mut dist = HashMap::from([(g.clone(), 0usize)]);
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        if max_depth.is_some_and(|m| d >= m) {
            continue;
        }
        for x in neighbors(&s, rels) {
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    dist
}

/// Exhaustive sweep for `2 = m/(m+1) + (l-k)(k+1)/(l+1)` with
/// `m, l <= bound`, matching `2 - term` against the set of `m/(m+1)`.
pub fn brute_force_d(bound: u64) -> BTreeSet<DSolution> {
    let table: HashMap<Rational, u64> = (1..=bound).map(|m| (qq(m as i128, m as i128 + 1), m)).collect();
    let mut out = BTreeSet::new();
    for l in 1..=bound {
        for k in 1..l {
            if let Some(&m) = table.get(&(q(2) - projection_term(l, k))) {
                out.insert(DSolution::new(m, l, k));
            }
        }
    }
    out
}

/// Weyl's dimension formula `prod_{a > 0} <hw + rho, a> / <rho, a>`.
pub fn weyl_dim_formula(g: &SemisimpleAlgebra, hw: &Weight) -> Result<u128> {
    let layout = g.layout();
    layout.check_dim(hw)?;
    let labels = layout.dynkin_labels(hw);
    if labels.iter().any(|c| !c.is_integer()) {
        return Err(Error::NotIntegral);
    }
    if labels.iter().any(|c| c.is_negative()) {
        return Err(Error::NotDominant);
    }
    let rho = layout.rho();
    let shifted = hw + &rho;
    let mut d = q(1);
    for a in layout.positive_roots() {
        d *= layout.inner(&shifted, &a) / layout.inner(&rho, &a);
    }
    debug_assert!(d.is_integer());
    Ok(d.to_integer().to_u128().expect("dimension is positive"))
}

/// All multisets of `1..=max_factors` simple types of rank at most
/// `max_factor_rank`.
pub fn catalog(max_factors: usize, max_factor_rank: usize) -> Vec<SemisimpleAlgebra> {
    let types = SimpleType::all_up_to_rank(max_factor_rank);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(types: &[SimpleType], start: usize, left: usize, cur: &mut Vec<SimpleType>, out: &mut Vec<SemisimpleAlgebra>) {
        if !cur.is_empty() {
            out.push(SemisimpleAlgebra::new(cur.clone()).expect("nonempty"));
        }
        if left == 0 {
            return;
        }
        for i in start..types.len() {
            cur.push(types[i]);
            rec(types, i, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(&types, 0, max_factors, &mut cur, &mut out);
    out
}

/// All semisimple algebras of total rank at most `max_rank`.
pub fn catalog_up_to_rank(max_rank: usize) -> Vec<SemisimpleAlgebra> {
    let types = SimpleType::all_up_to_rank(max_rank);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(types: &[SimpleType], start: usize, left: usize, cur: &mut Vec<SimpleType>, out: &mut Vec<SemisimpleAlgebra>) {
        if !cur.is_empty() {
            out.push(SemisimpleAlgebra::new(cur.clone()).expect("nonempty"));
        }
        for i in start..types.len() {
            if types[i].rank() <= left {
                cur.push(types[i]);
                rec(types, i, left - types[i].rank(), cur, out);
                cur.pop();
            }
        }
    }
    rec(&types, 0, max_rank, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::highest_weight;
    use crate::dioph::solve_d;

    fn p(s: &str) -> SemisimpleAlgebra {
        SemisimpleAlgebra::new(s.split('x').map(|t| t.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn reachability_examples() {
        assert_eq!(rewrite_distance(&p("A2"), &p("A1xA1"), 2), Some(2));
        assert!(rewrite_reachable(&p("E8"), &p("E8"), 0));
        assert!(!rewrite_reachable(&p("A4"), &p("A2xA2"), 6));
        assert!(!rewrite_reachable(&p("A1"), &p("A1xA1"), 6));
    }

    #[test]
    fn brute_force_d_matches() {
        assert_eq!(brute_force_d(10), solve_d());
        assert!(brute_force_d(3).is_empty());
    }

    #[test]
    fn weyl_dims() {
        let a1 = p("A1");
        assert_eq!(weyl_dim_formula(&a1, &highest_weight(&a1.layout(), &[1]).unwrap()).unwrap(), 2);
        let a2 = p("A2");
        assert_eq!(weyl_dim_formula(&a2, &highest_weight(&a2.layout(), &[1, 1]).unwrap()).unwrap(), 8);
        let a3 = p("A3");
        assert_eq!(weyl_dim_formula(&a3, &highest_weight(&a3.layout(), &[0, 1, 0]).unwrap()).unwrap(), 6);
        let e8 = p("E8");
        let theta = crate::rootsys::highest_root("E8".parse().unwrap());
        assert_eq!(weyl_dim_formula(&e8, &theta).unwrap(), 248);
    }

    #[test]
    fn catalogs() {
        assert_eq!(catalog(1, 2).len(), 4);
        assert_eq!(catalog(2, 1).len(), 2);
        let r2: Vec<String> = catalog_up_to_rank(2).iter().map(ToString::to_string).collect();
        assert_eq!(r2, vec!["A1", "A1xA1", "A2", "B2", "G2"]);
    }
}
