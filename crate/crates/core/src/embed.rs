//! Equal-rank root-subsystem embeddings and restriction of characters
//! along them.
//!
//! Subsystems come from the extended Dynkin diagram: append the negated
//! highest root to the simple roots and delete one node. Deleting a node
//! whose mark is prime gives the maximal ones.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_integer::Integer;

use crate::chars::FormalCharacter;
use crate::linalg::Matrix;
use crate::metric::FactorRoots;
use crate::rootsys::{Family, RootSystem, SemisimpleAlgebra, SimpleType, Weight};
use crate::{q, Error, Rational, Result};

/// A semisimple subalgebra of full rank in a simple algebra, given by a
/// base of its root system in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualRankEmbedding {
    ambient: SimpleType,
    sub: SemisimpleAlgebra,
    /// Column `k` is the `k`-th simple root of `sub` (factors in `sub`'s
    /// order, standard numbering inside each factor).
    sub_simple_roots: Matrix,
    /// Ambient coordinates -> sub coordinates.
    to_sub: Matrix,
    to_ambient: Matrix,
    /// Extended-diagram node removed (0 is the negated highest root).
    deleted_node: Option<usize>,
}

impl EqualRankEmbedding {
    /// Builds the embedding spanned by `base`, a set of `rank(ambient)`
    /// linearly independent ambient roots with pairwise non-positive
    /// Cartan integers.
    pub fn from_base(ambient: SimpleType, base: &[Weight]) -> Result<Self> {
        let rs = RootSystem::get(ambient);
        let n = rs.rank();
        if base.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: base.len(),
            });
        }
        for b in base {
            rs.check_dim(b)?;
            if rs.roots().binary_search(b).is_err() {
                return Err(Error::Invalid(format!("{b} is not a root of {ambient}")));
            }
        }
        let cartan = cartan_of(&rs, base);
        for i in 0..n {
            for j in 0..n {
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::Invalid("base has a positive Cartan integer".into()));
                }
            }
        }
        let mut comps: Vec<(SimpleType, Vec<usize>)> = Vec::new();
        for comp in components(&cartan) {
            comps.push(identify(&cartan, &comp)?);
        }
        comps.sort_by(|a, b| a.0.cmp(&b.0));
        let sub = SemisimpleAlgebra::new(comps.iter().map(|c| c.0).collect())?;
        let ordered: Vec<Weight> = comps
            .iter()
            .flat_map(|(_, idx)| idx.iter().map(|&i| base[i].clone()))
            .collect();
        let sub_simple_roots = Matrix::from_cols(&ordered.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>());
        if sub_simple_roots.rank() != n {
            return Err(Error::Invalid("base roots are linearly dependent".into()));
        }

        // Row k of `labels` pairs an ambient vector with the coroot of beta_k.
        let labels = Matrix::from_rows(
            &ordered
                .iter()
                .map(|b| {
                    let gb = rs.gram().mul_vec(b.coords());
                    let len = rs.inner(b, b);
                    gb.iter().map(|x| q(2) * x / len).collect()
                })
                .collect::<Vec<_>>(),
        );
        let fw_blocks: Vec<Matrix> = sub
            .factors()
            .iter()
            .map(|&t| {
                let frs = RootSystem::get(t);
                let cols: Vec<Vec<Rational>> =
                    frs.fundamental_weights().iter().map(|w| w.coords().to_vec()).collect();
                Matrix::from_cols(&cols)
            })
            .collect();
        let to_sub = &Matrix::block_diag(&fw_blocks) * &labels;
        let to_ambient = to_sub.inverse().ok_or(Error::DegenerateForm)?;
        Ok(Self {
            ambient,
            sub,
            sub_simple_roots,
            to_sub,
            to_ambient,
            deleted_node: None,
        })
    }

    pub fn ambient(&self) -> SimpleType {
        self.ambient
    }

    pub fn ambient_algebra(&self) -> SemisimpleAlgebra {
        SemisimpleAlgebra::simple(self.ambient)
    }

    pub fn sub(&self) -> &SemisimpleAlgebra {
        &self.sub
    }

    pub fn sub_simple_roots(&self) -> &Matrix {
        &self.sub_simple_roots
    }

    pub fn deleted_node(&self) -> Option<usize> {
        self.deleted_node
    }

    /// Ambient coordinates to sub coordinates.
    pub fn to_sub(&self, w: &Weight) -> Weight {
        Weight::new(self.to_sub.mul_vec(w.coords()))
    }

    /// Sub coordinates to ambient coordinates.
    pub fn to_ambient(&self, w: &Weight) -> Weight {
        Weight::new(self.to_ambient.mul_vec(w.coords()))
    }

    /// Simple roots of the sub in ambient coordinates.
    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.sub_simple_roots.ncols())
            .map(|j| Weight::new(self.sub_simple_roots.col(j)))
            .collect()
    }

    /// Roots of each sub factor, in ambient coordinates.
    pub fn sub_factor_roots(&self) -> Vec<FactorRoots> {
        let layout = self.sub.layout();
        let simple = self.simple_roots();
        (0..layout.num_factors())
            .map(|f| {
                let (off, _) = layout.block(f);
                let frs = layout.system(f);
                let roots = frs
                    .roots()
                    .iter()
                    .map(|r| {
                        let mut w = Weight::zero(simple[0].dim());
                        for (k, c) in frs.simple_root_expansion(r).iter().enumerate() {
                            w = w.add_scaled(*c, &simple[off + k]);
                        }
                        w
                    })
                    .collect();
                FactorRoots {
                    ty: layout.factor(f),
                    roots,
                }
            })
            .collect()
    }

    /// All sub roots in ambient coordinates.
    pub fn sub_roots(&self) -> Vec<Weight> {
        self.sub_factor_roots().into_iter().flat_map(|f| f.roots).collect()
    }

    /// Cartan matrix of the columns, `2<b_i, b_j>/<b_j, b_j>`.
    pub fn column_cartan(&self) -> Matrix {
        let rs = RootSystem::get(self.ambient);
        let c = cartan_of(&rs, &self.simple_roots());
        Matrix::from_int_rows(&c)
    }

    /// Plain-text description: ambient, sub, and the simple-root matrix.
    pub fn report(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ambient {}", self.ambient);
        let _ = writeln!(s, "sub {}", self.sub);
        if let Some(d) = self.deleted_node {
            let _ = writeln!(s, "deleted node {d}");
        }
        for (k, b) in self.simple_roots().iter().enumerate() {
            let _ = writeln!(s, "beta_{} = {}", k + 1, b);
        }
        s
    }
}

fn cartan_of(rs: &RootSystem, base: &[Weight]) -> Vec<Vec<i64>> {
    base.iter()
        .map(|bi| {
            base.iter()
                .map(|bj| {
                    let c = q(2) * rs.inner(bi, bj) / rs.inner(bj, bj);
                    assert!(c.is_integer(), "roots pair integrally");
                    c.to_integer() as i64
                })
                .collect()
        })
        .collect()
}

fn components(c: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = c.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let a = comp[i];
            for b in 0..n {
                if !seen[b] && c[a][b] != 0 {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            i += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Finds the simple type of a connected component and the order of its
/// nodes matching the standard numbering.
fn identify(c: &[Vec<i64>], comp: &[usize]) -> Result<(SimpleType, Vec<usize>)> {
    let r = comp.len();
    for f in Family::ALL {
        let Ok(t) = SimpleType::new(f, r) else { continue };
        if t.rank() != r || t.family() != f {
            continue;
        }
        let std = RootSystem::get(t);
        let sc: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| std.cartan()[(i, j)].to_integer() as i64).collect())
            .collect();
        let mut assign = vec![usize::MAX; r];
        let mut used = vec![false; r];
        if backtrack(0, c, comp, &sc, &mut assign, &mut used) {
            return Ok((t, assign.iter().map(|&k| comp[k]).collect()));
        }
    }
    Err(Error::Invalid("component matches no simple type".into()))
}

fn backtrack(
    i: usize,
    c: &[Vec<i64>],
    comp: &[usize],
    sc: &[Vec<i64>],
    assign: &mut [usize],
    used: &mut [bool],
) -> bool {
    let r = comp.len();
    if i == r {
        return true;
    }
    for k in 0..r {
        if used[k] {
            continue;
        }
        let ok = (0..i).all(|j| {
            c[comp[k]][comp[assign[j]]] == sc[i][j] && c[comp[assign[j]]][comp[k]] == sc[j][i]
        });
        if ok {
            assign[i] = k;
            used[k] = true;
            if backtrack(i + 1, c, comp, sc, assign, used) {
                return true;
            }
            used[k] = false;
        }
    }
    assign[i] = usize::MAX;
    false
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(&d))
}

/// Extended-diagram nodes with their marks: node 0 is `-theta` (mark 1),
/// node `i >= 1` is `alpha_i`.
fn extended_nodes(rs: &RootSystem) -> Vec<(Weight, i64)> {
    let mut v = vec![(-rs.highest_root(), 1)];
    for (a, &m) in rs.simple_roots().iter().zip(rs.marks()) {
        v.push((a.clone(), m));
    }
    v
}

fn delete_node(t: SimpleType, node: usize) -> Result<EqualRankEmbedding> {
    let rs = RootSystem::get(t);
    let base: Vec<Weight> = extended_nodes(&rs)
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != node)
        .map(|(_, (w, _))| w)
        .collect();
    let mut e = EqualRankEmbedding::from_base(t, &base)?;
    e.deleted_node = Some(node);
    Ok(e)
}

/// Maximal semisimple subalgebras of full rank, one per isomorphism type,
/// from deleting extended-diagram nodes with prime marks. Empty for type A.
pub fn maximal_equal_rank_subalgebras(t: SimpleType) -> Vec<EqualRankEmbedding> {
    subsystems(t, true)
}

/// Every node deletion with mark at least 2 (maximal or not), one per
/// isomorphism type.
pub fn node_deletion_subalgebras(t: SimpleType) -> Vec<EqualRankEmbedding> {
    subsystems(t, false)
}

fn subsystems(t: SimpleType, prime_only: bool) -> Vec<EqualRankEmbedding> {
    let rs = RootSystem::get(t);
    let mut out: Vec<EqualRankEmbedding> = Vec::new();
    for (i, (_, m)) in extended_nodes(&rs).into_iter().enumerate().skip(1) {
        let keep = if prime_only { is_prime(m) } else { m >= 2 };
        if !keep {
            continue;
        }
        let e = delete_node(t, i).expect("extended diagram minus a node is a base");
        if !out.iter().any(|x| x.sub == e.sub) {
            out.push(e);
        }
    }
    out
}

/// Isomorphism types of all proper full-rank semisimple subalgebras of
/// `g` reachable by repeated node deletion on its factors.
pub fn equal_rank_subalgebra_types(g: &SemisimpleAlgebra) -> BTreeSet<SemisimpleAlgebra> {
    let mut memo: BTreeMap<SimpleType, Vec<SemisimpleAlgebra>> = BTreeMap::new();
    let mut out = BTreeSet::new();
    let mut frontier = vec![g.clone()];
    while let Some(cur) = frontier.pop() {
        for &t in cur.factors() {
            let subs = memo
                .entry(t)
                .or_insert_with(|| node_deletion_subalgebras(t).into_iter().map(|e| e.sub).collect())
                .clone();
            for s in subs {
                let next = cur.replace(&[t], s.factors()).expect("factor present");
                if out.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    out
}

fn require_algebra(c: &FormalCharacter, expected: &SemisimpleAlgebra) -> Result<()> {
    if c.algebra() != expected {
        return Err(Error::AlgebraMismatch {
            left: c.algebra().to_string(),
            right: expected.to_string(),
        });
    }
    Ok(())
}

/// Restriction of an ambient character to the sub: the same weights,
/// re-expressed in the sub's coordinates.
pub fn restrict_character(c: &FormalCharacter, e: &EqualRankEmbedding) -> Result<FormalCharacter> {
    require_algebra(c, &e.ambient_algebra())?;
    Ok(c.map_weights(&e.sub, |w| e.to_sub(w)))
}

/// The weight multiset of a sub character in ambient coordinates.
pub fn ambient_multiset(c: &FormalCharacter, e: &EqualRankEmbedding) -> Result<BTreeMap<Weight, u64>> {
    require_algebra(c, &e.sub)?;
    let mut m = BTreeMap::new();
    for (w, k) in c.iter() {
        *m.entry(e.to_ambient(w)).or_insert(0) += k;
    }
    Ok(m)
}

/// True iff the two characters have identical weight multisets in the
/// shared ambient coordinates.
pub fn same_formal_character(
    c1: &FormalCharacter,
    e1: &EqualRankEmbedding,
    c2: &FormalCharacter,
    e2: &EqualRankEmbedding,
) -> Result<bool> {
    if e1.ambient != e2.ambient {
        return Err(Error::AlgebraMismatch {
            left: e1.ambient.to_string(),
            right: e2.ambient.to_string(),
        });
    }
    Ok(ambient_multiset(c1, e1)? == ambient_multiset(c2, e2)?)
}
