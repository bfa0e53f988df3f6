use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use super::{Family, SimpleType, Weight};
use crate::linalg::{dot, Matrix};
use crate::{q, qq, Error, Rational, Result};

/// Exact combinatorial data of one simple root system.
///
/// Coordinates: a type `A_n` factor is written in the basis `e_1, ..., e_n`
/// of its weight lattice (with `e_{n+1} = -(e_1 + ... + e_n)`), so the simple
/// roots are `e_i - e_{i+1}`. Every other family uses fundamental-weight
/// coordinates, i.e. a weight's coordinates are its Dynkin labels. In both
/// cases lattice weights are exactly the integral vectors, and `gram` is the
/// Gram matrix of the coordinate basis with long roots of squared length 2.
#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    simple_roots: Vec<Weight>,
    roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_expansions: Vec<Vec<i64>>,
    cartan: Matrix,
    simple_gram: Matrix,
    gram: Matrix,
    /// Row `i` pairs a coordinate vector with the coroot of `alpha_i`.
    coroot_rows: Matrix,
    /// Inverse of the simple-root coordinate matrix (coordinates -> expansion).
    expansion_map: Matrix,
    fundamental_weights: Vec<Weight>,
    highest_root: Weight,
    marks: Vec<i64>,
    rho: Weight,
    weyl_order: u128,
}

/// Gram matrix of the simple roots, Bourbaki numbering, long roots of
/// squared length 2.
fn simple_root_gram(t: SimpleType) -> Matrix {
    let n = t.rank();
    let mut b = Matrix::zeros(n, n);
    let bond = |b: &mut Matrix, i: usize, j: usize, v: Rational| {
        b[(i, j)] = v;
        b[(j, i)] = v;
    };
    match t.family() {
        Family::A | Family::D | Family::E => {
            for i in 0..n {
                b[(i, i)] = q(2);
            }
            let edges: Vec<(usize, usize)> = match t.family() {
                Family::A => (0..n - 1).map(|i| (i, i + 1)).collect(),
                Family::D => {
                    let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                    e.push((n - 3, n - 1));
                    e
                }
                _ => [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
                    .into_iter()
                    .filter(|&(i, j)| i < n && j < n)
                    .collect(),
            };
            for (i, j) in edges {
                bond(&mut b, i, j, q(-1));
            }
        }
        Family::B => {
            for i in 0..n {
                b[(i, i)] = if i + 1 == n { q(1) } else { q(2) };
            }
            for i in 0..n - 1 {
                bond(&mut b, i, i + 1, q(-1));
            }
        }
        Family::C => {
            for i in 0..n {
                b[(i, i)] = if i + 1 == n { q(2) } else { q(1) };
            }
            for i in 0..n - 1 {
                let v = if i + 2 == n { q(-1) } else { qq(-1, 2) };
                bond(&mut b, i, i + 1, v);
            }
        }
        Family::F => {
            for (i, len) in [2, 2, 1, 1].into_iter().enumerate() {
                b[(i, i)] = q(len);
            }
            bond(&mut b, 0, 1, q(-1));
            bond(&mut b, 1, 2, q(-1));
            bond(&mut b, 2, 3, qq(-1, 2));
        }
        Family::G => {
            b[(0, 0)] = qq(2, 3);
            b[(1, 1)] = q(2);
            bond(&mut b, 0, 1, q(-1));
        }
    }
    b
}

/// Builds the root system of `t` from scratch (no caching).
///
/// Roots are generated by closing the simple roots under simple
/// reflections; the Weyl group order comes from an orbit-stabilizer chain.
pub fn build_root_system(t: SimpleType) -> RootSystem {
    let n = t.rank();
    let simple_gram = simple_root_gram(t);
    let mut cartan = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            cartan[(i, j)] = q(2) * simple_gram[(i, j)] / simple_gram[(j, j)];
        }
    }

    // Coordinate basis and its Gram matrix; rows of `simple` are the simple
    // roots in that basis.
    let (gram, simple) = if t.family() == Family::A {
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = if i == j {
                    qq(n as i128, n as i128 + 1)
                } else {
                    qq(-1, n as i128 + 1)
                };
            }
        }
        let mut s = Matrix::zeros(n, n);
        for i in 0..n - 1 {
            s[(i, i)] = q(1);
            s[(i, i + 1)] = q(-1);
        }
        // e_n - e_{n+1} = e_1 + ... + e_{n-1} + 2 e_n
        for j in 0..n {
            s[(n - 1, j)] = q(1);
        }
        s[(n - 1, n - 1)] = q(2);
        (g, s)
    } else {
        let mut half_len = Matrix::zeros(n, n);
        for i in 0..n {
            half_len[(i, i)] = simple_gram[(i, i)] / q(2);
        }
        let ct_inv = cartan.transpose().inverse().expect("Cartan matrix is invertible");
        (&half_len * &ct_inv, cartan.clone())
    };

    let simple_roots: Vec<Weight> = (0..n).map(|i| Weight::new(simple.row(i))).collect();
    let coroot_rows = Matrix::from_rows(
        &simple_roots
            .iter()
            .map(|a| {
                let ga = gram.mul_vec(a.coords());
                let len = dot(a.coords(), &ga);
                ga.iter().map(|x| q(2) * x / len).collect()
            })
            .collect::<Vec<_>>(),
    );
    let fw_cols = coroot_rows.inverse().expect("coroots are independent");
    let fundamental_weights: Vec<Weight> = (0..n).map(|j| Weight::new(fw_cols.col(j))).collect();
    let expansion_map = simple.inverse().expect("simple roots are independent");

    // Close the simple roots under simple reflections, working with integer
    // expansions in the simple roots: s_i(b) = b - <b, alpha_i^vee> alpha_i.
    let cartan_int: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| cartan[(i, j)].to_integer() as i64).collect())
        .collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(e) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| e[j] * cartan_int[j][i]).sum();
            if pairing == 0 {
                continue;
            }
            let mut r = e.clone();
            r[i] -= pairing;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let to_coords = |e: &[i64]| -> Weight {
        let mut w = Weight::zero(n);
        for (i, &c) in e.iter().enumerate() {
            if c != 0 {
                w = w.add_scaled(q(c as i128), &simple_roots[i]);
            }
        }
        w
    };
    let mut pos: Vec<Vec<i64>> = seen.iter().filter(|e| e.iter().all(|&c| c >= 0)).cloned().collect();
    pos.sort_by_key(|e| (e.iter().sum::<i64>(), e.clone()));
    let marks = pos.last().expect("nonempty root system").clone();
    let positive_roots: Vec<Weight> = pos.iter().map(|e| to_coords(e)).collect();
    let mut roots: Vec<Weight> = seen.iter().map(|e| to_coords(e)).collect();
    roots.sort();
    let highest_root = to_coords(&marks);

    let rho = fundamental_weights
        .iter()
        .fold(Weight::zero(n), |acc, w| &acc + w);

    let mut rs = RootSystem {
        simple_type: t,
        simple_roots,
        roots,
        positive_roots,
        positive_expansions: pos,
        cartan,
        simple_gram,
        gram,
        coroot_rows,
        expansion_map,
        fundamental_weights,
        highest_root,
        marks,
        rho,
        weyl_order: 0,
    };
    rs.weyl_order = rs.weyl_order_by_orbits();
    rs
}

static CACHE: OnceLock<RwLock<HashMap<SimpleType, Arc<RootSystem>>>> = OnceLock::new();

impl RootSystem {
    /// Shared, cached root system of `t`.
    pub fn get(t: SimpleType) -> Arc<RootSystem> {
        let cache = CACHE.get_or_init(Default::default);
        if let Some(rs) = cache.read().expect("root system cache poisoned").get(&t) {
            return Arc::clone(rs);
        }
        let built = Arc::new(build_root_system(t));
        let mut w = cache.write().expect("root system cache poisoned");
        Arc::clone(w.entry(t).or_insert(built))
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Simple-root expansions of the positive roots, same order as
    /// [`Self::positive_roots`].
    pub fn positive_root_expansions(&self) -> &[Vec<i64>] {
        &self.positive_expansions
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn cartan(&self) -> &Matrix {
        &self.cartan
    }

    /// Gram matrix of the simple roots.
    pub fn simple_gram(&self) -> &Matrix {
        &self.simple_gram
    }

    /// Gram matrix of the coordinate basis.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    /// Coefficients of the highest root in the simple roots.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    pub fn inner(&self, u: &Weight, v: &Weight) -> Rational {
        self.gram.bilinear(u.coords(), v.coords())
    }

    pub fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                got: w.dim(),
            });
        }
        Ok(())
    }

    /// `<w, alpha_i^vee>` for every simple root.
    pub fn dynkin_labels(&self, w: &Weight) -> Vec<Rational> {
        self.coroot_rows.mul_vec(w.coords())
    }

    /// Coefficients of `w` in the simple roots.
    pub fn simple_root_expansion(&self, w: &Weight) -> Vec<Rational> {
        self.expansion_map.transpose().mul_vec(w.coords())
    }

    pub fn weight_from_dynkin(&self, labels: &[Rational]) -> Result<Weight> {
        if labels.len() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                got: labels.len(),
            });
        }
        let mut w = Weight::zero(self.rank());
        for (l, fw) in labels.iter().zip(&self.fundamental_weights) {
            w = w.add_scaled(*l, fw);
        }
        Ok(w)
    }

    pub fn is_in_lattice(&self, w: &Weight) -> bool {
        self.dynkin_labels(w).iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.dynkin_labels(w).iter().all(|c| !c.is_negative())
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let c = dot(self.coroot_rows.row(i).as_slice(), w.coords());
        w.add_scaled(-c, &self.simple_roots[i])
    }

    /// The dominant element of the Weyl orbit of `w`.
    pub fn to_dominant(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        loop {
            let labels = self.dynkin_labels(&cur);
            match labels.iter().position(|c| c.is_negative()) {
                Some(i) => cur = cur.add_scaled(-labels[i], &self.simple_roots[i]),
                None => return cur,
            }
        }
    }

    pub fn weyl_orbit(&self, w: &Weight) -> Result<BTreeSet<Weight>> {
        self.check_dim(w)?;
        let gens: Vec<usize> = (0..self.rank()).collect();
        Ok(self.orbit_under(w, &gens).into_iter().collect())
    }

    fn orbit_under(&self, w: &Weight, gens: &[usize]) -> HashSet<Weight> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for &i in gens {
                let y = self.reflect(i, &x);
                if y != x && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// |W| as a product of fundamental-weight orbit sizes along a chain of
    /// parabolic subgroups: |W_S| = |W_S . omega_j| * |W_{S - j}|.
    fn weyl_order_by_orbits(&self) -> u128 {
        let mut nodes: Vec<usize> = (0..self.rank()).collect();
        let mut order: u128 = 1;
        while let Some(&j) = nodes.last() {
            order *= self.orbit_under(&self.fundamental_weights[j], &nodes).len() as u128;
            nodes.pop();
        }
        order
    }

    fn require_type_a(&self) -> Result<usize> {
        if !self.simple_type.is_type_a() {
            return Err(Error::UnsupportedBasis(self.simple_type.to_string()));
        }
        Ok(self.rank())
    }

    /// The weight `e_i`, `1 <= i <= n + 1`, of an `A_n` system.
    pub fn e(&self, i: usize) -> Result<Weight> {
        let n = self.require_type_a()?;
        match i {
            0 => Err(Error::Invalid("e-basis index starts at 1".into())),
            i if i <= n => {
                let mut c = vec![Rational::zero(); n];
                c[i - 1] = Rational::one();
                Ok(Weight::new(c))
            }
            i if i == n + 1 => Ok(Weight::new(vec![q(-1); n])),
            _ => Err(Error::Invalid(format!("e-basis index {i} exceeds n + 1 = {}", n + 1))),
        }
    }

    /// Coefficients `a_1, ..., a_n` of `w = a_1 e_1 + ... + a_n e_n`.
    pub fn e_basis_coords(&self, w: &Weight) -> Result<Vec<Rational>> {
        self.require_type_a()?;
        self.check_dim(w)?;
        Ok(w.coords().to_vec())
    }

    pub fn from_e_basis(&self, v: &[Rational]) -> Result<Weight> {
        let n = self.require_type_a()?;
        if v.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: v.len(),
            });
        }
        Ok(Weight::new(v.to_vec()))
    }
}

/// Highest root of `t` in its ambient coordinates.
pub fn highest_root(t: SimpleType) -> Weight {
    RootSystem::get(t).highest_root().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(f: Family, n: usize) -> SimpleType {
        SimpleType::new(f, n).unwrap()
    }

    #[test]
    fn a1_roots_and_gram() {
        let rs = build_root_system(SimpleType::a(1));
        assert_eq!(rs.roots(), &[Weight::from_ints(&[-2]), Weight::from_ints(&[2])]);
        assert_eq!(rs.gram()[(0, 0)], qq(1, 2));
        assert_eq!(rs.highest_root(), &Weight::from_ints(&[2]));
    }

    #[test]
    fn a2_cartan_and_determinant() {
        let rs = build_root_system(SimpleType::a(2));
        assert_eq!(rs.cartan(), &Matrix::from_int_rows(&[vec![2, -1], vec![-1, 2]]));
        assert_eq!(rs.cartan().determinant(), q(3));
        assert_eq!(rs.highest_root(), &Weight::from_ints(&[2, 1]));
    }

    #[test]
    fn e8_counts() {
        let rs = build_root_system(st(Family::E, 8));
        assert_eq!(rs.roots().len(), 240);
        assert_eq!(rs.weyl_order(), 696_729_600);
        assert_eq!(rs.marks(), &[2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn g2_highest_root_is_long_and_dominant() {
        let rs = build_root_system(st(Family::G, 2));
        let hr = rs.highest_root();
        assert_eq!(rs.inner(hr, hr), q(2));
        assert!(rs.is_dominant(hr));
        let orbit = rs.weyl_orbit(hr).unwrap();
        assert_eq!(orbit.len(), 6);
        assert!(orbit.iter().all(|r| rs.inner(r, r) == q(2)));
    }

    #[test]
    fn e_basis_conventions() {
        let rs = build_root_system(SimpleType::a(2));
        assert_eq!(rs.e_basis_coords(&rs.simple_roots()[0]).unwrap(), vec![q(1), q(-1)]);
        assert_eq!(rs.e(3).unwrap(), Weight::from_ints(&[-1, -1]));
        assert_eq!(rs.e_basis_coords(&Weight::zero(2)).unwrap(), vec![q(0), q(0)]);
        let b2 = build_root_system(st(Family::B, 2));
        assert!(matches!(
            b2.e_basis_coords(&Weight::zero(2)),
            Err(Error::UnsupportedBasis(_))
        ));
    }

    #[test]
    fn orbit_of_e1_in_a2() {
        let rs = build_root_system(SimpleType::a(2));
        let orbit = rs.weyl_orbit(&rs.e(1).unwrap()).unwrap();
        let expected: BTreeSet<Weight> = [rs.e(1), rs.e(2), rs.e(3)]
            .into_iter()
            .map(|w| w.unwrap())
            .collect();
        assert_eq!(orbit, expected);
        assert_eq!(rs.weyl_orbit(&Weight::zero(2)).unwrap().len(), 1);
        assert!(rs.weyl_orbit(&Weight::zero(3)).is_err());
    }
}
