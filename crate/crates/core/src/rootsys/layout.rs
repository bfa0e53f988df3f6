use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use num_traits::Signed;

use super::{RootSystem, SemisimpleAlgebra, SimpleType, Weight};
use crate::linalg::Matrix;
use crate::{Error, Rational, Result};

/// Coordinate layout of a semisimple algebra: the concatenation of its
/// factors' ambient bases, in factor order.
#[derive(Debug, Clone)]
pub struct Layout {
    algebra: SemisimpleAlgebra,
    systems: Vec<Arc<RootSystem>>,
    offsets: Vec<usize>,
    dim: usize,
}

impl SemisimpleAlgebra {
    pub fn layout(&self) -> Layout {
        Layout::new(self)
    }
}

impl Layout {
    pub fn new(algebra: &SemisimpleAlgebra) -> Self {
        let systems: Vec<_> = algebra.factors().iter().map(|&t| RootSystem::get(t)).collect();
        let mut offsets = Vec::with_capacity(systems.len());
        let mut dim = 0;
        for rs in &systems {
            offsets.push(dim);
            dim += rs.rank();
        }
        Self {
            algebra: algebra.clone(),
            systems,
            offsets,
            dim,
        }
    }

    pub fn algebra(&self) -> &SemisimpleAlgebra {
        &self.algebra
    }

    /// Total ambient dimension (= rank).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_factors(&self) -> usize {
        self.systems.len()
    }

    pub fn factor(&self, i: usize) -> SimpleType {
        self.systems[i].simple_type()
    }

    pub fn system(&self, i: usize) -> &RootSystem {
        &self.systems[i]
    }

    /// `(offset, len)` of factor `i`'s coordinate block.
    pub fn block(&self, i: usize) -> (usize, usize) {
        (self.offsets[i], self.systems[i].rank())
    }

    pub fn check_factor(&self, i: usize) -> Result<()> {
        if i >= self.num_factors() {
            return Err(Error::FactorIndex {
                index: i,
                count: self.num_factors(),
            });
        }
        Ok(())
    }

    pub fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: w.dim(),
            });
        }
        Ok(())
    }

    /// Global simple-root index -> (factor, local index).
    pub fn locate_simple(&self, i: usize) -> (usize, usize) {
        let f = self.offsets.partition_point(|&o| o <= i) - 1;
        (f, i - self.offsets[f])
    }

    /// Places a factor-local vector into the full ambient space.
    pub fn embed(&self, factor: usize, local: &Weight) -> Weight {
        let (off, len) = self.block(factor);
        debug_assert_eq!(local.dim(), len);
        let mut c = vec![Rational::default(); self.dim];
        c[off..off + len].clone_from_slice(local.coords());
        Weight::new(c)
    }

    /// Factor `i`'s block of `w`, as a factor-local vector.
    pub fn restrict(&self, factor: usize, w: &Weight) -> Weight {
        let (off, len) = self.block(factor);
        w.slice(off, len)
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.num_factors())
            .flat_map(|f| self.systems[f].simple_roots().iter().map(move |a| self.embed(f, a)))
            .collect()
    }

    pub fn roots(&self) -> Vec<Weight> {
        (0..self.num_factors())
            .flat_map(|f| self.systems[f].roots().iter().map(move |a| self.embed(f, a)))
            .collect()
    }

    pub fn positive_roots(&self) -> Vec<Weight> {
        (0..self.num_factors())
            .flat_map(|f| {
                self.systems[f]
                    .positive_roots()
                    .iter()
                    .map(move |a| self.embed(f, a))
            })
            .collect()
    }

    /// Roots of factor `i`, embedded.
    pub fn factor_roots(&self, i: usize) -> Vec<Weight> {
        self.systems[i].roots().iter().map(|a| self.embed(i, a)).collect()
    }

    pub fn rho(&self) -> Weight {
        let parts: Vec<&Weight> = self.systems.iter().map(|rs| rs.rho()).collect();
        Weight::concat(&parts)
    }

    /// Block-diagonal Gram matrix with every factor normalized to long roots
    /// of squared length 2.
    pub fn normalized_gram(&self) -> Matrix {
        let blocks: Vec<Matrix> = self.systems.iter().map(|rs| rs.gram().clone()).collect();
        Matrix::block_diag(&blocks)
    }

    pub fn inner(&self, u: &Weight, v: &Weight) -> Rational {
        (0..self.num_factors())
            .map(|f| self.systems[f].inner(&self.restrict(f, u), &self.restrict(f, v)))
            .sum()
    }

    pub fn dynkin_labels(&self, w: &Weight) -> Vec<Rational> {
        (0..self.num_factors())
            .flat_map(|f| self.systems[f].dynkin_labels(&self.restrict(f, w)))
            .collect()
    }

    pub fn weight_from_dynkin(&self, labels: &[Rational]) -> Result<Weight> {
        if labels.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: labels.len(),
            });
        }
        let mut parts = Vec::with_capacity(self.num_factors());
        for f in 0..self.num_factors() {
            let (off, len) = self.block(f);
            parts.push(self.systems[f].weight_from_dynkin(&labels[off..off + len])?);
        }
        Ok(Weight::concat(&parts.iter().collect::<Vec<_>>()))
    }

    pub fn is_in_lattice(&self, w: &Weight) -> bool {
        self.dynkin_labels(w).iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.dynkin_labels(w).iter().all(|c| !c.is_negative())
    }

    /// Simple reflection for global simple root `i`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let (f, local) = self.locate_simple(i);
        let r = self.systems[f].reflect(local, &self.restrict(f, w));
        let (off, len) = self.block(f);
        let mut c = w.coords().to_vec();
        c[off..off + len].clone_from_slice(r.coords());
        Weight::new(c)
    }

    /// Matrix of the simple reflection `i` acting on coordinate columns.
    pub fn reflection_matrix(&self, i: usize) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| {
                let mut e = vec![Rational::default(); self.dim];
                e[j] = Rational::from_integer(1);
                self.reflect(i, &Weight::new(e)).into_coords()
            })
            .collect();
        Matrix::from_cols(&cols)
    }

    pub fn to_dominant(&self, w: &Weight) -> Weight {
        let parts: Vec<Weight> = (0..self.num_factors())
            .map(|f| self.systems[f].to_dominant(&self.restrict(f, w)))
            .collect();
        Weight::concat(&parts.iter().collect::<Vec<_>>())
    }

    pub fn weyl_orbit(&self, w: &Weight) -> Result<BTreeSet<Weight>> {
        self.check_dim(w)?;
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.dim {
                let y = self.reflect(i, &x);
                if y != x && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn weyl_order(&self) -> u128 {
        self.systems.iter().map(|rs| rs.weyl_order()).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn two_factor_layout() {
        let g = SemisimpleAlgebra::new(vec![SimpleType::a(1), SimpleType::a(2)]).unwrap();
        let l = g.layout();
        assert_eq!(l.dim(), 3);
        assert_eq!(l.block(1), (1, 2));
        assert_eq!(l.locate_simple(0), (0, 0));
        assert_eq!(l.locate_simple(2), (1, 1));
        assert_eq!(l.roots().len(), 8);
        assert_eq!(l.weyl_order(), 12);
        let r = l.reflection_matrix(0);
        assert_eq!(r[(0, 0)], q(-1));
        assert_eq!(r[(1, 1)], q(1));
    }
}
