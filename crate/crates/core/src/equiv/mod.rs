//! Equal-rank subalgebra equivalence: reduction to type A, the complete
//! class invariant, canonical representatives, and the determinant
//! square-class check for a pair of root bases.

mod table;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

pub use table::{
    instances, instances_for, so_even, so_odd, sp, table_text, TableInstance, TableRow, MAXIMAL_RANK_TABLE,
};

use crate::linalg::Matrix;
use crate::metric::CharacterMetric;
use crate::rootsys::{Family, RootSystem, SemisimpleAlgebra, SimpleType};
use crate::{q, Error, Rational, Result};

/// `A_n` ranks whose multiplicities are invariants: 6 and every `n >= 9`.
pub fn is_protected(n: usize) -> bool {
    n == 6 || n >= 9
}

/// Ranks whose `A_n` counts every reduction step must preserve.
pub fn is_reduction_preserved(n: usize) -> bool {
    n == 4 || is_protected(n)
}

/// Complete invariant of an equivalence class: rank, the protected `A_n`
/// multiplicities, and the parity of the `A_4` multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivClassInvariant {
    pub rank: usize,
    pub a_counts: BTreeMap<usize, usize>,
    pub a4_odd: bool,
}

impl EquivClassInvariant {
    /// Component-wise sum (invariant of a direct sum).
    pub fn combine(&self, other: &Self) -> Self {
        let mut a_counts = self.a_counts.clone();
        for (&n, &c) in &other.a_counts {
            *a_counts.entry(n).or_insert(0) += c;
        }
        Self {
            rank: self.rank + other.rank,
            a_counts,
            a4_odd: self.a4_odd ^ other.a4_odd,
        }
    }

    /// Human-readable names of the components that differ.
    pub fn differences(&self, other: &Self) -> Vec<String> {
        let mut out = Vec::new();
        if self.rank != other.rank {
            out.push(format!("rank {} vs {}", self.rank, other.rank));
        }
        let keys: BTreeSet<usize> = self.a_counts.keys().chain(other.a_counts.keys()).copied().collect();
        for n in keys {
            let (a, b) = (
                self.a_counts.get(&n).copied().unwrap_or(0),
                other.a_counts.get(&n).copied().unwrap_or(0),
            );
            if a != b {
                out.push(format!("A{n} count {a} vs {b}"));
            }
        }
        if self.a4_odd != other.a4_odd {
            out.push(format!(
                "A4 parity {} vs {}",
                parity_name(self.a4_odd),
                parity_name(other.a4_odd)
            ));
        }
        out
    }

    fn protected_rank(&self) -> usize {
        self.a_counts.iter().map(|(n, c)| n * c).sum::<usize>() + if self.a4_odd { 4 } else { 0 }
    }
}

fn parity_name(odd: bool) -> &'static str {
    if odd {
        "odd"
    } else {
        "even"
    }
}

impl fmt::Display for EquivClassInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.a_counts.iter().map(|(n, c)| format!("A{n}: {c}")).collect();
        write!(
            f,
            "(rank {}, {{{}}}, A4 {})",
            self.rank,
            counts.join(", "),
            parity_name(self.a4_odd)
        )
    }
}

/// One application of an equal-rank containment during reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub before: SemisimpleAlgebra,
    pub after: SemisimpleAlgebra,
    pub replaced: SimpleType,
    pub rule: &'static str,
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} [{}]", self.before, self.after, self.rule)
    }
}

/// The equal-rank subalgebra used to reduce a non-A simple factor.
fn reduction_rule(t: SimpleType) -> (Vec<SimpleType>, &'static str) {
    let l = t.rank();
    let st = |f, n| SimpleType::new(f, n).expect("valid");
    match t.family() {
        Family::A => (vec![t], "identity"),
        Family::B if l == 2 => (so_even(2), "so(5) ⊃ so(4)"),
        Family::B => (so_even(l), "so(2l+1) ⊃ so(2l)"),
        Family::C => {
            let mut v = sp(1);
            v.extend(sp(l - 1));
            (v, "sp(2l) ⊃ sp(2) + sp(2l-2)")
        }
        Family::D => {
            let mut v = so_even(2);
            v.extend(so_even(l - 2));
            (v, "so(2l) ⊃ so(4) + so(2l-4)")
        }
        Family::E => match l {
            6 => (vec![SimpleType::a(2); 3], "E6 ⊃ sl(3) + sl(3) + sl(3)"),
            7 => (vec![SimpleType::a(7)], "E7 ⊃ sl(8)"),
            _ => (vec![SimpleType::a(8)], "E8 ⊃ sl(9)"),
        },
        Family::F => (vec![SimpleType::a(2), SimpleType::a(2)], "F4 ⊃ sl(3) + sl(3)"),
        Family::G => (vec![st(Family::A, 2)], "G2 ⊃ sl(3)"),
    }
}

/// Rewrites `g` into an all-`A` algebra of the same rank by repeatedly
/// replacing the first non-A factor with an equal-rank subalgebra.
pub fn a_type_reduction(g: &SemisimpleAlgebra) -> (SemisimpleAlgebra, Vec<ReductionStep>) {
    let mut cur = g.clone();
    let mut steps = Vec::new();
    while let Some(&t) = cur.factors().iter().find(|t| !t.is_type_a()) {
        let (sub, rule) = reduction_rule(t);
        let next = cur.replace(&[t], &sub).expect("factor is present");
        steps.push(ReductionStep {
            before: cur,
            after: next.clone(),
            replaced: t,
            rule,
        });
        cur = next;
    }
    (cur, steps)
}

/// Invariant read off an all-`A` algebra.
fn invariant_of_a_type(g: &SemisimpleAlgebra) -> EquivClassInvariant {
    let mut a_counts = BTreeMap::new();
    let mut a4 = 0usize;
    for t in g.factors() {
        debug_assert!(t.is_type_a());
        let n = t.rank();
        if is_protected(n) {
            *a_counts.entry(n).or_insert(0) += 1;
        } else if n == 4 {
            a4 += 1;
        }
    }
    EquivClassInvariant {
        rank: g.rank(),
        a_counts,
        a4_odd: a4 % 2 == 1,
    }
}

pub fn invariant(g: &SemisimpleAlgebra) -> EquivClassInvariant {
    invariant_of_a_type(&a_type_reduction(g).0)
}

pub fn equal_rank_equivalent(g: &SemisimpleAlgebra, h: &SemisimpleAlgebra) -> bool {
    invariant(g) == invariant(h)
}

/// The representative `prod A_n^{count} x A_4^{parity} x A_1^{rest}`.
pub fn canonical_form(g: &SemisimpleAlgebra) -> SemisimpleAlgebra {
    canonical_of_invariant(&invariant(g))
}

pub fn canonical_of_invariant(inv: &EquivClassInvariant) -> SemisimpleAlgebra {
    let mut f = Vec::new();
    for (&n, &c) in &inv.a_counts {
        f.extend(std::iter::repeat(SimpleType::a(n)).take(c));
    }
    if inv.a4_odd {
        f.push(SimpleType::a(4));
    }
    let rest = inv.rank - inv.protected_rank();
    f.extend(std::iter::repeat(SimpleType::a(1)).take(rest));
    SemisimpleAlgebra::new(f).expect("rank is positive")
}

/// Prime factorization of a positive integer as `prime -> exponent`.
pub fn factorize(mut n: u128) -> BTreeMap<u128, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2u128;
    while p * p <= n {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

/// Primes `p >= 5` with odd exponent in a nonzero rational, i.e. its class
/// in `Q* / (Q*)^2 2^Z 3^Z` up to sign.
pub fn square_class_primes(x: Rational) -> BTreeSet<u64> {
    assert!(!x.is_zero(), "square class of zero");
    let mut exps: BTreeMap<u128, i64> = BTreeMap::new();
    for (p, e) in factorize(x.numer().unsigned_abs()) {
        *exps.entry(p).or_insert(0) += e as i64;
    }
    for (p, e) in factorize(x.denom().unsigned_abs()) {
        *exps.entry(p).or_insert(0) -= e as i64;
    }
    exps.into_iter()
        .filter(|&(p, e)| p >= 5 && e.is_odd())
        .map(|(p, _)| p as u64)
        .collect()
}

/// Square class of `prod (n_i + 1)` over the `A_{n_i}` factors of the
/// A-type reduction, as the set of primes `p >= 5` with odd exponent.
pub fn square_class_invariant(g: &SemisimpleAlgebra) -> BTreeSet<u64> {
    let (a, _) = a_type_reduction(g);
    let prod: i128 = a.factors().iter().map(|t| t.rank() as i128 + 1).product();
    square_class_primes(q(prod))
}

/// Result of checking `A^T Q A = blockdiag(mu_j C_j D_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetIdentityReport {
    /// `A^T Q A` is block diagonal along `h`'s factors and each block is a
    /// positive multiple of that factor's simple-root Gram matrix.
    pub block_identity: bool,
    /// Per factor of `h`, the ratio `mu_j` when it exists.
    pub mu: Vec<Option<Rational>>,
    /// Per factor of `g`, the block scalars of `Q`.
    pub gamma: Vec<Rational>,
    pub det_a: Rational,
    /// `det(A)^2 det(Q)`.
    pub lhs: Rational,
    /// `prod_j mu_j^{r_j} det(C_j D_j)`.
    pub rhs: Rational,
    pub lhs_square_class: BTreeSet<u64>,
    pub rhs_square_class: BTreeSet<u64>,
    /// Every `gamma_i` and `mu_j` lies in `2^Z 3^Z`.
    pub scalars_in_2_3: bool,
    /// The two square classes equal [`square_class_invariant`] of `g` and
    /// `h` respectively.
    pub matches_invariants: bool,
    /// Block identity and the determinant equation both hold exactly.
    pub holds: bool,
}

fn in_2_3(x: Rational) -> bool {
    if !x.is_positive() {
        return false;
    }
    let only_2_3 = |n: i128| factorize(n.unsigned_abs()).keys().all(|&p| p == 2 || p == 3);
    only_2_3(*x.numer()) && only_2_3(*x.denom())
}

/// Checks the block identity `A^T Q A = blockdiag(mu_j C_j D_j)` where the
/// columns of `a` are simple roots of `h` written in `g`'s coordinates
/// (grouped by `h`'s factors in order, standard numbering within each), `Q`
/// is a metric on `g`, `C_j` the Cartan matrix of `h`'s `j`-th factor and
/// `D_j = diag(|beta|^2 / 2)` its normalized half root lengths (the identity
/// for simply-laced factors). Then takes determinants and compares square
/// classes.
pub fn verify_det_identity(
    g: &SemisimpleAlgebra,
    h: &SemisimpleAlgebra,
    a: &Matrix,
    qm: &CharacterMetric,
) -> Result<DetIdentityReport> {
    let n = g.rank();
    if qm.algebra() != g {
        return Err(Error::AlgebraMismatch {
            left: g.to_string(),
            right: qm.algebra().to_string(),
        });
    }
    if h.rank() != n {
        return Err(Error::Dimension {
            expected: n,
            got: h.rank(),
        });
    }
    if a.nrows() != n || a.ncols() != n {
        return Err(Error::Dimension {
            expected: n,
            got: if a.nrows() != n { a.nrows() } else { a.ncols() },
        });
    }
    let b = &(&a.transpose() * qm.form()) * a;
    let hl = h.layout();
    let mut block_identity = true;
    let mut mu = Vec::with_capacity(hl.num_factors());
    for f in 0..hl.num_factors() {
        let (off, len) = hl.block(f);
        for i in off..off + len {
            for j in 0..n {
                if (j < off || j >= off + len) && !b[(i, j)].is_zero() {
                    block_identity = false;
                }
            }
        }
        let cd = RootSystem::get(hl.factor(f)).simple_gram().clone();
        let m = b[(off, off)] / cd[(0, 0)];
        let proportional = m.is_positive()
            && (0..len).all(|i| (0..len).all(|j| b[(off + i, off + j)] == m * cd[(i, j)]));
        if proportional {
            mu.push(Some(m));
        } else {
            block_identity = false;
            mu.push(None);
        }
    }

    let det_a = a.determinant();
    let lhs = det_a * det_a * qm.form().determinant();
    let mut rhs = q(1);
    for f in 0..hl.num_factors() {
        let cd = RootSystem::get(hl.factor(f)).simple_gram().determinant();
        let m = mu[f].unwrap_or_else(|| q(1));
        rhs *= cd * num_traits::pow(m, hl.block(f).1);
    }
    let gamma = qm.block_scalars().to_vec();
    let scalars_in_2_3 = gamma.iter().all(|&x| in_2_3(x)) && mu.iter().all(|m| m.map_or(false, in_2_3));
    let (lhs_square_class, rhs_square_class) = if lhs.is_zero() || rhs.is_zero() {
        (BTreeSet::new(), BTreeSet::new())
    } else {
        (square_class_primes(lhs), square_class_primes(rhs))
    };
    let matches_invariants = !lhs.is_zero()
        && lhs_square_class == square_class_invariant(g)
        && rhs_square_class == square_class_invariant(h);
    let holds = block_identity && !det_a.is_zero() && lhs == rhs;
    Ok(DetIdentityReport {
        block_identity,
        mu,
        gamma,
        det_a,
        lhs,
        rhs,
        lhs_square_class,
        rhs_square_class,
        scalars_in_2_3,
        matches_invariants,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SemisimpleAlgebra {
        let f: Vec<SimpleType> = s.split('x').map(|t| t.parse().unwrap()).collect();
        SemisimpleAlgebra::new(f).unwrap()
    }

    #[test]
    fn reductions() {
        let (r, steps) = a_type_reduction(&p("B2"));
        assert_eq!(r, p("A1xA1"));
        assert_eq!(steps.len(), 1);
        assert_eq!(a_type_reduction(&p("E8")).0, p("A8"));
        assert!(a_type_reduction(&p("A5")).1.is_empty());
        assert_eq!(a_type_reduction(&p("D5")).0, p("A1xA1xA3"));
        assert_eq!(a_type_reduction(&p("C4")).0, p("A1xA1xA1xA1"));
        assert_eq!(a_type_reduction(&p("G2")).0, p("A2"));
        for s in a_type_reduction(&p("E6xF4xC5xB7xD9")).1 {
            assert_eq!(s.before.rank(), s.after.rank());
        }
    }

    #[test]
    fn invariants() {
        let i = invariant(&p("A6xA4"));
        assert_eq!(i.rank, 10);
        assert_eq!(i.a_counts, BTreeMap::from([(6, 1)]));
        assert!(i.a4_odd);
        let e8 = invariant(&p("E8"));
        assert_eq!((e8.rank, e8.a_counts.is_empty(), e8.a4_odd), (8, true, false));
        assert_eq!(invariant(&p("A7")).a_counts.len(), 0);
    }

    #[test]
    fn equivalences() {
        assert!(equal_rank_equivalent(&p("E7xA1"), &p("A4xA4")));
        assert!(!equal_rank_equivalent(&p("A4"), &p("A2xA2")));
        assert!(equal_rank_equivalent(&p("A3"), &p("A1xA1xA1")));
        assert!(!equal_rank_equivalent(&p("A1"), &p("A1xA1")));
        let d = invariant(&p("A4")).differences(&invariant(&p("A2xA2")));
        assert_eq!(d, vec!["A4 parity odd vs even".to_string()]);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonical_form(&p("A8")), p("A1xA1xA1xA1xA1xA1xA1xA1"));
        assert_eq!(canonical_form(&p("A6xA4")), p("A6xA4"));
        assert_eq!(canonical_form(&p("G2")), p("A1xA1"));
        let c = canonical_form(&p("A10xA4xA4xA4xE6"));
        assert_eq!(c, p(&format!("A10xA4{}", "xA1".repeat(14))));
        assert_eq!(canonical_form(&c), c);
    }

    #[test]
    fn square_classes() {
        assert!(square_class_invariant(&p("A4xA4")).is_empty());
        assert_eq!(square_class_invariant(&p("A4")), BTreeSet::from([5]));
        assert!(square_class_invariant(&p("A8")).is_empty());
        assert_eq!(square_class_invariant(&p("A6")), BTreeSet::from([7]));
        assert_eq!(square_class_primes(crate::qq(50, 7)), BTreeSet::from([7]));
    }

    #[test]
    fn det_identity_trivial_case() {
        for s in ["A3", "G2", "B3", "A2xF4"] {
            let g = p(s);
            let l = g.layout();
            let cols: Vec<Vec<Rational>> = l.simple_roots().into_iter().map(|w| w.into_coords()).collect();
            let a = Matrix::from_cols(&cols);
            let qm = CharacterMetric::normalized(&g);
            let r = verify_det_identity(&g, &g, &a, &qm).unwrap();
            assert!(r.holds, "{s}");
            assert!(r.mu.iter().all(|m| *m == Some(q(1))));
            assert!(r.matches_invariants, "{s}: {r:?}");

            let mut bad = a.clone();
            bad[(0, 0)] += q(1);
            assert!(!verify_det_identity(&g, &g, &bad, &qm).unwrap().holds);
        }
    }

    #[test]
    fn det_identity_dimension_error() {
        let g = p("A2");
        let qm = CharacterMetric::normalized(&g);
        assert!(verify_det_identity(&g, &g, &Matrix::identity(3), &qm).is_err());
        assert!(verify_det_identity(&g, &p("A1"), &Matrix::identity(2), &qm).is_err());
    }
}
