//! The inner product a faithful character induces on the weight space, and
//! the angle / length / projection geometry built on it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::chars::FormalCharacter;
use crate::linalg::{dot, Matrix};
use crate::rootsys::{SemisimpleAlgebra, SimpleType, Weight};
use crate::{q, qq, Error, Rational, Result};

/// Exact W-invariant inner product on the weight space of an algebra.
///
/// `dual_form` is the sum of `w w^T` over the weights of a character (a form
/// on the dual space), and `form` is its inverse. Block `i` of `form` equals
/// `block_scalars[i]` times factor `i`'s normalized Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterMetric {
    algebra: SemisimpleAlgebra,
    dual_form: Matrix,
    form: Matrix,
    block_scalars: Vec<Rational>,
}

impl CharacterMetric {
    /// The metric of a faithful, W-invariant character.
    pub fn from_character(c: &FormalCharacter) -> Result<Self> {
        if !c.is_faithful() {
            return Err(Error::DegenerateForm);
        }
        let n = c.algebra().rank();
        let mut dual_form = Matrix::zeros(n, n);
        for (w, m) in c.iter() {
            let m = q(m as i128);
            let x = w.coords();
            for i in 0..n {
                if x[i].is_zero() {
                    continue;
                }
                for j in 0..n {
                    dual_form[(i, j)] += m * x[i] * x[j];
                }
            }
        }
        if !dual_form.is_positive_definite() {
            return Err(Error::DegenerateForm);
        }
        let form = dual_form.inverse().ok_or(Error::DegenerateForm)?;
        let block_scalars = block_scalars(c.algebra(), &form).ok_or(Error::NotWeylInvariant)?;
        Ok(Self {
            algebra: c.algebra().clone(),
            dual_form,
            form,
            block_scalars,
        })
    }

    /// The block-diagonal normalized Gram form (all `gamma_i = 1`).
    pub fn normalized(g: &SemisimpleAlgebra) -> Self {
        let form = g.layout().normalized_gram();
        let dual_form = form.inverse().expect("Gram matrices are invertible");
        Self {
            algebra: g.clone(),
            dual_form,
            form,
            block_scalars: vec![Rational::one(); g.num_factors()],
        }
    }

    pub fn algebra(&self) -> &SemisimpleAlgebra {
        &self.algebra
    }

    pub fn dual_form(&self) -> &Matrix {
        &self.dual_form
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn block_scalars(&self) -> &[Rational] {
        &self.block_scalars
    }

    pub fn dim(&self) -> usize {
        self.form.nrows()
    }

    fn check(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: w.dim(),
            });
        }
        Ok(())
    }

    pub fn inner(&self, u: &Weight, v: &Weight) -> Rational {
        self.form.bilinear(u.coords(), v.coords())
    }

    /// Same value as [`inner`](Self::inner), computed on the dual side:
    /// `<u, v> = (F u)^T D (F v)` with `D` the dual form.
    pub fn inner_via_dual(&self, u: &Weight, v: &Weight) -> Rational {
        let fu = self.form.mul_vec(u.coords());
        let fv = self.form.mul_vec(v.coords());
        self.dual_form.bilinear(&fu, &fv)
    }

    pub fn norm_sq(&self, u: &Weight) -> Rational {
        self.inner(u, u)
    }

    /// True if every reflection matrix `S` satisfies `S^T F S = F`.
    pub fn is_weyl_invariant(&self) -> bool {
        let layout = self.algebra.layout();
        (0..layout.dim()).all(|i| {
            let s = layout.reflection_matrix(i);
            &(&s.transpose() * &self.form) * &s == self.form
        })
    }

    /// True if off-diagonal blocks vanish and block `i` is exactly
    /// `block_scalars[i]` times the normalized Gram matrix.
    pub fn is_block_proportional(&self) -> bool {
        block_scalars(&self.algebra, &self.form).as_deref() == Some(&self.block_scalars[..])
    }
}

/// Per-factor ratios of `form` to the normalized Gram blocks, if `form` is
/// block diagonal and exactly proportional on each block.
fn block_scalars(g: &SemisimpleAlgebra, form: &Matrix) -> Option<Vec<Rational>> {
    let layout = g.layout();
    let n = layout.dim();
    let mut out = Vec::with_capacity(layout.num_factors());
    for f in 0..layout.num_factors() {
        let (off, len) = layout.block(f);
        for i in off..off + len {
            for j in 0..n {
                if (j < off || j >= off + len) && !form[(i, j)].is_zero() {
                    return None;
                }
            }
        }
        let gram = layout.system(f).gram();
        let gamma = form[(off, off)] / gram[(0, 0)];
        for i in 0..len {
            for j in 0..len {
                if form[(off + i, off + j)] != gamma * gram[(i, j)] {
                    return None;
                }
            }
        }
        if !gamma.is_positive() {
            return None;
        }
        out.push(gamma);
    }
    Some(out)
}

/// Metric induced by a faithful character.
pub fn character_metric(c: &FormalCharacter) -> Result<CharacterMetric> {
    CharacterMetric::from_character(c)
}

/// Angle between two vectors, when it is one of the crystallographic values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AngleClass {
    Deg0,
    Deg30,
    Deg45,
    Deg60,
    Deg90,
    Deg120,
    Deg135,
    Deg150,
    Deg180,
    Other,
}

impl AngleClass {
    pub fn degrees(self) -> Option<u32> {
        Some(match self {
            AngleClass::Deg0 => 0,
            AngleClass::Deg30 => 30,
            AngleClass::Deg45 => 45,
            AngleClass::Deg60 => 60,
            AngleClass::Deg90 => 90,
            AngleClass::Deg120 => 120,
            AngleClass::Deg135 => 135,
            AngleClass::Deg150 => 150,
            AngleClass::Deg180 => 180,
            AngleClass::Other => return None,
        })
    }

    /// Classifies by `4 cos^2` and the sign of the inner product.
    pub fn from_four_cos_sq(c: Rational, sign: i32) -> AngleClass {
        if !c.is_integer() {
            return AngleClass::Other;
        }
        match (c.to_integer(), sign.signum()) {
            (0, _) => AngleClass::Deg90,
            (1, 1) => AngleClass::Deg60,
            (2, 1) => AngleClass::Deg45,
            (3, 1) => AngleClass::Deg30,
            (4, 1) => AngleClass::Deg0,
            (1, -1) => AngleClass::Deg120,
            (2, -1) => AngleClass::Deg135,
            (3, -1) => AngleClass::Deg150,
            (4, -1) => AngleClass::Deg180,
            _ => AngleClass::Other,
        }
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degrees() {
            Some(d) => write!(f, "{d}deg"),
            None => write!(f, "other"),
        }
    }
}

/// `4 <u,v>^2 / (<u,u> <v,v>)`.
pub fn four_cos_sq(u: &Weight, v: &Weight, m: &CharacterMetric) -> Result<Rational> {
    m.check(u)?;
    m.check(v)?;
    let (uu, vv) = (m.norm_sq(u), m.norm_sq(v));
    if uu.is_zero() || vv.is_zero() {
        return Err(Error::ZeroVector);
    }
    let uv = m.inner(u, v);
    Ok(q(4) * uv * uv / (uu * vv))
}

/// [`four_cos_sq`] evaluated through the dual form.
pub fn four_cos_sq_via_dual(u: &Weight, v: &Weight, m: &CharacterMetric) -> Result<Rational> {
    m.check(u)?;
    m.check(v)?;
    let (uu, vv) = (m.inner_via_dual(u, u), m.inner_via_dual(v, v));
    if uu.is_zero() || vv.is_zero() {
        return Err(Error::ZeroVector);
    }
    let uv = m.inner_via_dual(u, v);
    Ok(q(4) * uv * uv / (uu * vv))
}

pub fn angle_class(u: &Weight, v: &Weight, m: &CharacterMetric) -> Result<AngleClass> {
    let c = four_cos_sq(u, v, m)?;
    let s = m.inner(u, v);
    let sign = if s.is_positive() {
        1
    } else if s.is_negative() {
        -1
    } else {
        0
    };
    Ok(AngleClass::from_four_cos_sq(c, sign))
}

/// `<u,u> / <v,v>`.
pub fn ratio_square(u: &Weight, v: &Weight, m: &CharacterMetric) -> Result<Rational> {
    m.check(u)?;
    m.check(v)?;
    let vv = m.norm_sq(v);
    if vv.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(m.norm_sq(u) / vv)
}

/// Squared-length ratios allowed between two roots at a non-right angle.
pub fn allowed_ratios() -> [Rational; 7] {
    [qq(1, 4), qq(1, 3), qq(1, 2), q(1), q(2), q(3), q(4)]
}

/// Orthogonal projection of `u` onto factor `factor`'s coordinate block:
/// the unique `u'` in the block with `<u', y> = <u, y>` for all `y` there.
pub fn project_to_factor(u: &Weight, factor: usize, m: &CharacterMetric) -> Result<Weight> {
    m.check(u)?;
    let layout = m.algebra().layout();
    layout.check_factor(factor)?;
    let (off, len) = layout.block(factor);
    let rows: Vec<Vec<Rational>> = (off..off + len).map(|i| m.form().row(i)).collect();
    let rhs: Vec<Rational> = rows.iter().map(|r| dot(r, u.coords())).collect();
    let fqq = m.form().block(off, len);
    let x = fqq.inverse().ok_or(Error::DegenerateForm)?.mul_vec(&rhs);
    Ok(layout.embed(factor, &Weight::new(x)))
}

/// Squared length of `a_1 e_1 + ... + a_n e_n` in `A_n`:
/// `(sum a_i^2 + sum_{i<j} (a_i - a_j)^2) / (n + 1)`.
pub fn length_sq_a(coeffs: &[Rational], n: usize) -> Result<Rational> {
    if coeffs.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: coeffs.len(),
        });
    }
    let mut s: Rational = coeffs.iter().map(|a| a * a).sum();
    for i in 0..n {
        for j in i + 1..n {
            let d = coeffs[i] - coeffs[j];
            s += d * d;
        }
    }
    Ok(s / q(n as i128 + 1))
}

/// Which angle a root makes with the target factor's roots, and which root
/// length that factor is assumed to carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionCase {
    /// 60 degrees; factor roots of squared length 2.
    Deg60,
    /// 45 degrees; factor roots twice as long as the root (squared length 4).
    Deg45Long,
    /// 45 degrees; factor roots of squared length 1, with the root rescaled
    /// to squared length 4 before projecting.
    Deg45Short,
}

/// Squared length of the projection onto an `A_{n'}` factor when it has
/// `k'` zero coordinates: `(n'-k')(k'+1)/(n'+1)`, doubled in both 45-degree
/// cases.
pub fn projection_length_case(n: usize, k: usize, case: ProjectionCase) -> Result<Rational> {
    if k >= n {
        return Err(Error::Invalid(format!("need 0 <= k' < n', got k' = {k}, n' = {n}")));
    }
    let base = qq(((n - k) * (k + 1)) as i128, n as i128 + 1);
    Ok(match case {
        ProjectionCase::Deg60 => base,
        ProjectionCase::Deg45Long | ProjectionCase::Deg45Short => q(2) * base,
    })
}

/// A simple factor of the reference algebra, given by its roots in the
/// shared coordinates.
#[derive(Debug, Clone)]
pub struct FactorRoots {
    pub ty: SimpleType,
    pub roots: Vec<Weight>,
}

/// Position of a root relative to a factor's span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SpanStatus {
    Contained,
    Perpendicular,
    Mixed,
}

#[derive(Debug, Clone)]
pub struct RootFactorRecord {
    pub root: Weight,
    pub factor: usize,
    pub angles: BTreeSet<AngleClass>,
    pub status: SpanStatus,
}

#[derive(Debug, Clone)]
pub struct GeometryReport {
    pub records: Vec<RootFactorRecord>,
    /// Per root: number of factors it projects nontrivially onto.
    pub components: Vec<(Weight, usize)>,
    pub violations: Vec<String>,
}

impl GeometryReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Every angle class observed anywhere in the report.
    pub fn angles_seen(&self) -> BTreeSet<AngleClass> {
        self.records.iter().flat_map(|r| r.angles.iter().copied()).collect()
    }

    /// Counts of records per span status.
    pub fn status_counts(&self) -> BTreeMap<SpanStatus, usize> {
        let mut m = BTreeMap::new();
        for r in &self.records {
            *m.entry(r.status).or_insert(0) += 1;
        }
        m
    }
}

fn independent_subset(vs: &[Weight]) -> Vec<Weight> {
    let mut basis: Vec<Weight> = Vec::new();
    for v in vs {
        let mut rows: Vec<Vec<Rational>> = basis.iter().map(|b| b.coords().to_vec()).collect();
        rows.push(v.coords().to_vec());
        if Matrix::from_rows(&rows).rank() == rows.len() {
            basis.push(v.clone());
        }
    }
    basis
}

fn project_onto_span(u: &Weight, basis: &[Weight], m: &CharacterMetric) -> Result<Weight> {
    let k = basis.len();
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = m.inner(&basis[i], &basis[j]);
        }
    }
    let rhs: Vec<Rational> = basis.iter().map(|b| m.inner(b, u)).collect();
    let c = g.inverse().ok_or(Error::DegenerateForm)?.mul_vec(&rhs);
    let mut p = Weight::zero(u.dim());
    for (ci, b) in c.iter().zip(basis) {
        p = p.add_scaled(*ci, b);
    }
    Ok(p)
}

/// Checks a second root system against the factors of a reference one in
/// a shared metrized space.
///
/// Flags: any angle outside the crystallographic table; a squared-length
/// ratio outside `{1/4, 1/3, 1/2, 1, 2, 3, 4}` at a non-right angle; for a
/// root neither inside nor perpendicular to an `A_n` factor (`n >= 2`), an
/// angle outside `{45, 60, 90, 120, 135}`; such a root for `A_n` with
/// `n in {6} or n >= 8`; and such a root (for `A_n`, `n >= 4`) projecting
/// nontrivially onto more than two factors.
pub fn validate_cross_geometry(
    factors_g: &[FactorRoots],
    roots_h: &[Weight],
    m: &CharacterMetric,
) -> Result<GeometryReport> {
    let bases: Vec<Vec<Weight>> = factors_g.iter().map(|f| independent_subset(&f.roots)).collect();
    let lemma_angles = [
        AngleClass::Deg45,
        AngleClass::Deg60,
        AngleClass::Deg90,
        AngleClass::Deg120,
        AngleClass::Deg135,
    ];
    let ratios = allowed_ratios();
    let mut records = Vec::new();
    let mut components = Vec::new();
    let mut violations = Vec::new();
    for u in roots_h {
        let mut nonzero = 0;
        let mut mixed_big_a = false;
        for (fi, f) in factors_g.iter().enumerate() {
            let mut angles = BTreeSet::new();
            for v in &f.roots {
                let a = angle_class(u, v, m)?;
                if a != AngleClass::Deg90 && a != AngleClass::Other {
                    let r = ratio_square(u, v, m)?;
                    if !ratios.contains(&r) {
                        violations.push(format!("{u} vs {v} ({}): squared-length ratio {r}", f.ty));
                    }
                }
                angles.insert(a);
            }
            let p = project_onto_span(u, &bases[fi], m)?;
            let status = if p.is_zero() {
                SpanStatus::Perpendicular
            } else if &p == u {
                SpanStatus::Contained
            } else {
                SpanStatus::Mixed
            };
            if !p.is_zero() {
                nonzero += 1;
            }
            if angles.contains(&AngleClass::Other) {
                violations.push(format!("{u} vs factor {fi} ({}): angle outside the table", f.ty));
            }
            if status == SpanStatus::Mixed && f.ty.is_type_a() {
                let n = f.ty.rank();
                if n >= 2 && angles.iter().any(|a| !lemma_angles.contains(a)) {
                    violations.push(format!("{u} vs factor {fi} ({}): forbidden angle for a mixed root", f.ty));
                }
                if n == 6 || n >= 8 {
                    violations.push(format!("{u} is neither inside nor perpendicular to factor {fi} ({})", f.ty));
                }
                if n >= 4 {
                    mixed_big_a = true;
                }
            }
            records.push(RootFactorRecord {
                root: u.clone(),
                factor: fi,
                angles,
                status,
            });
        }
        if mixed_big_a && nonzero > 2 {
            violations.push(format!("{u} projects onto {nonzero} factors"));
        }
        components.push((u.clone(), nonzero));
    }
    Ok(GeometryReport {
        records,
        components,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::irreducible_from_labels;
    use crate::rootsys::{Family, Layout};

    fn simple(f: Family, n: usize) -> SemisimpleAlgebra {
        SemisimpleAlgebra::simple(SimpleType::new(f, n).unwrap())
    }

    #[test]
    fn std_a1_metric() {
        let g = simple(Family::A, 1);
        let c = irreducible_from_labels(&g, &[1]).unwrap();
        let m = character_metric(&c).unwrap();
        assert_eq!(m.dual_form()[(0, 0)], q(2));
        assert_eq!(m.form()[(0, 0)], qq(1, 2));
        assert_eq!(m.norm_sq(&Weight::from_ints(&[2])), q(2));
        assert_eq!(m.block_scalars(), &[q(1)]);
    }

    #[test]
    fn adjoint_a2_metric_is_proportional() {
        let g = simple(Family::A, 2);
        let m = character_metric(&FormalCharacter::adjoint(&g)).unwrap();
        assert!(m.is_block_proportional());
        assert!(m.is_weyl_invariant());
        assert_eq!(m.form() * m.dual_form(), Matrix::identity(2));
        // sum over A_2 roots of (e_i - e_j)(e_i - e_j)^T in e-coordinates is
        // 6 * identity-like; the resulting scalar is 1/6.
        assert_eq!(m.block_scalars(), &[qq(1, 6)]);
    }

    #[test]
    fn non_faithful_rejected() {
        let g = SemisimpleAlgebra::new(vec![SimpleType::a(1), SimpleType::a(1)]).unwrap();
        let c = irreducible_from_labels(&g, &[1, 0]).unwrap();
        assert_eq!(character_metric(&c), Err(Error::DegenerateForm));
    }

    #[test]
    fn angles_in_a2() {
        let g = simple(Family::A, 2);
        let m = CharacterMetric::normalized(&g);
        let l = Layout::new(&g);
        let s = l.simple_roots();
        assert_eq!(angle_class(&s[0], &s[0], &m).unwrap(), AngleClass::Deg0);
        assert_eq!(angle_class(&s[0], &s[1], &m).unwrap(), AngleClass::Deg120);
        assert_eq!(ratio_square(&s[0], &s[1], &m).unwrap(), q(1));
        assert_eq!(
            angle_class(&s[0], &Weight::zero(2), &m),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn distinct_factors_are_orthogonal() {
        let g = SemisimpleAlgebra::new(vec![SimpleType::a(1), SimpleType::a(2)]).unwrap();
        let m = CharacterMetric::normalized(&g);
        let l = g.layout();
        let r = l.roots();
        let u = r.iter().find(|w| !w.coords()[0].is_zero()).unwrap();
        let v = r.iter().find(|w| w.coords()[0].is_zero()).unwrap();
        assert_eq!(angle_class(u, v, &m).unwrap(), AngleClass::Deg90);
    }

    #[test]
    fn fundamental_weight_ratio() {
        let g = simple(Family::A, 4);
        let m = CharacterMetric::normalized(&g);
        let e1 = Weight::from_ints(&[1, 0, 0, 0]);
        let root = Weight::from_ints(&[1, -1, 0, 0]);
        assert_eq!(ratio_square(&e1, &root, &m).unwrap(), qq(2, 5));
    }

    #[test]
    fn projection_basics() {
        let g = SemisimpleAlgebra::new(vec![SimpleType::a(1), SimpleType::a(2)]).unwrap();
        let m = character_metric(&FormalCharacter::adjoint(&g)).unwrap();
        let u = Weight::from_ints(&[0, 1, -1]);
        assert_eq!(project_to_factor(&u, 1, &m).unwrap(), u);
        assert!(project_to_factor(&u, 0, &m).unwrap().is_zero());
        assert!(matches!(
            project_to_factor(&u, 2, &m),
            Err(Error::FactorIndex { .. })
        ));
    }

    #[test]
    fn length_formula() {
        assert_eq!(length_sq_a(&[q(1), q(0), q(0), q(0)], 4).unwrap(), qq(4, 5));
        assert_eq!(length_sq_a(&[q(1), q(1), q(0), q(0)], 4).unwrap(), qq(6, 5));
        assert_eq!(length_sq_a(&[q(0); 4], 4).unwrap(), q(0));
        assert!(length_sq_a(&[q(1)], 4).is_err());
    }

    #[test]
    fn projection_cases() {
        assert_eq!(projection_length_case(5, 2, ProjectionCase::Deg60).unwrap(), qq(3, 2));
        assert_eq!(projection_length_case(1, 0, ProjectionCase::Deg45Long).unwrap(), q(1));
        assert_eq!(projection_length_case(1, 0, ProjectionCase::Deg60).unwrap(), qq(1, 2));
        assert!(projection_length_case(3, 3, ProjectionCase::Deg60).is_err());
    }

    #[test]
    fn self_geometry_is_clean() {
        let g = SemisimpleAlgebra::new(vec![SimpleType::a(2), SimpleType::new(Family::G, 2).unwrap()]).unwrap();
        let l = g.layout();
        let m = CharacterMetric::normalized(&g);
        let factors: Vec<FactorRoots> = (0..l.num_factors())
            .map(|f| FactorRoots {
                ty: l.factor(f),
                roots: l.factor_roots(f),
            })
            .collect();
        let rep = validate_cross_geometry(&factors, &l.roots(), &m).unwrap();
        assert!(rep.is_clean(), "{:?}", rep.violations);
        assert!(rep.components.iter().all(|(_, k)| *k == 1));
        assert!(rep.records.iter().all(|r| r.status != SpanStatus::Mixed));
    }

    #[test]
    fn perturbed_root_is_flagged() {
        let g = simple(Family::A, 2);
        let l = g.layout();
        let m = CharacterMetric::normalized(&g);
        let factors = vec![FactorRoots {
            ty: l.factor(0),
            roots: l.roots(),
        }];
        let bad = Weight::from_ints(&[3, 1]);
        let rep = validate_cross_geometry(&factors, &[bad], &m).unwrap();
        assert!(rep.angles_seen().contains(&AngleClass::Other));
        assert!(!rep.is_clean());
    }
}
