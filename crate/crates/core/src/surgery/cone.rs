use std::ops::RangeInclusive;

use super::{Slope, SurgeryContext};
use crate::error::{Error, Result};
use crate::f2linalg::{BitVec, F2Matrix};

pub(crate) fn bound(genus: i64, slope: Slope) -> i64 {
    genus + 1 + slope.ceil() as i64
}

/// Index bookkeeping for a truncated cone at level `c`: `A` columns run over
/// `-qc+1 ..= qc-1`, `B` columns over `-qc+p+1 ..= qc-1`. Column `j` of the
/// `A` side holds `A_{floor(j/q)}`; its vertical map lands in `B_j` and its
/// horizontal map in `B_{j+p}`, whenever those columns exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnLayout {
    slope: Slope,
    level: i64,
    a_offsets: Vec<usize>,
    b_offsets: Vec<usize>,
}

impl ColumnLayout {
    fn new(slope: Slope, level: i64, a_width: impl Fn(i64) -> usize, b_width: usize) -> Self {
        let prefix = |widths: Vec<usize>| {
            let mut offsets = vec![0];
            for w in widths {
                offsets.push(offsets.last().unwrap() + w);
            }
            offsets
        };
        let q = slope.qi();
        let mut layout = ColumnLayout {
            slope,
            level,
            a_offsets: Vec::new(),
            b_offsets: Vec::new(),
        };
        layout.a_offsets = prefix(layout.a_columns().map(|j| a_width(j.div_euclid(q))).collect());
        layout.b_offsets = prefix(layout.b_columns().map(|_| b_width).collect());
        layout
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn a_columns(&self) -> RangeInclusive<i64> {
        let qc = self.slope.qi() * self.level;
        (-qc + 1)..=(qc - 1)
    }

    pub fn b_columns(&self) -> RangeInclusive<i64> {
        let qc = self.slope.qi() * self.level;
        (-qc + self.slope.pi() + 1)..=(qc - 1)
    }

    /// The `A_s` held by column `j`.
    pub fn level_of(&self, j: i64) -> i64 {
        j.div_euclid(self.slope.qi())
    }

    pub fn has_a(&self, j: i64) -> bool {
        self.a_columns().contains(&j)
    }

    pub fn has_b(&self, j: i64) -> bool {
        self.b_columns().contains(&j)
    }

    pub fn a_offset(&self, j: i64) -> usize {
        self.a_offsets[(j - self.a_columns().start()) as usize]
    }

    pub fn a_width(&self, j: i64) -> usize {
        let k = (j - self.a_columns().start()) as usize;
        self.a_offsets[k + 1] - self.a_offsets[k]
    }

    pub fn b_offset(&self, j: i64) -> usize {
        self.b_offsets[(j - self.b_columns().start()) as usize]
    }

    pub fn a_total(&self) -> usize {
        *self.a_offsets.last().unwrap()
    }

    pub fn b_total(&self) -> usize {
        *self.b_offsets.last().unwrap()
    }

    pub fn a_column_count(&self) -> usize {
        self.a_offsets.len() - 1
    }

    pub fn b_column_count(&self) -> usize {
        self.b_offsets.len() - 1
    }

    /// The part of an `A`-side vector lying in column `j`.
    pub fn a_part(&self, v: &BitVec, j: i64) -> BitVec {
        v.slice(self.a_offset(j), self.a_width(j))
    }
}

/// The truncated cone at chain level, as a single complex with the `A`
/// columns first and the `B` columns after.
#[derive(Clone, Debug)]
pub struct MappingCone {
    layout: ColumnLayout,
    differential: F2Matrix,
}

impl MappingCone {
    pub fn layout(&self) -> &ColumnLayout {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.differential.rows()
    }

    pub fn a_dim(&self) -> usize {
        self.layout.a_total()
    }

    pub fn b_dim(&self) -> usize {
        self.layout.b_total()
    }

    pub fn differential(&self) -> &F2Matrix {
        &self.differential
    }

    pub fn is_square_zero(&self) -> bool {
        self.differential
            .mul(&self.differential)
            .map(|m| m.is_zero())
            .unwrap_or(false)
    }

    pub fn homology_dim(&self) -> usize {
        self.dim() - 2 * self.differential.rank()
    }
}

/// The cone map `D_*` on homology, from `H(A)` columns to `H(B)` columns.
#[derive(Clone, Debug)]
pub struct BlockMap {
    layout: ColumnLayout,
    matrix: F2Matrix,
}

impl BlockMap {
    pub fn layout(&self) -> &ColumnLayout {
        &self.layout
    }

    pub fn matrix(&self) -> &F2Matrix {
        &self.matrix
    }

    pub fn kernel_dim(&self) -> usize {
        self.matrix.cols() - self.matrix.rank()
    }

    pub fn cokernel_dim(&self) -> usize {
        self.matrix.rows() - self.matrix.rank()
    }

    /// `dim ker + dim coker`, which over a field is the homology of the cone.
    pub fn cone_rank(&self) -> usize {
        let r = self.matrix.rank();
        self.matrix.cols() + self.matrix.rows() - 2 * r
    }
}

impl SurgeryContext {
    pub fn truncation_bound(&self, slope: Slope) -> i64 {
        bound(self.genus, slope)
    }

    fn check_level(&self, slope: Slope, level: i64) -> Result<()> {
        let bound = self.truncation_bound(slope);
        if level < bound {
            return Err(Error::TruncationTooSmall { level, bound });
        }
        Ok(())
    }

    pub fn build_cone(&self, slope: Slope, level: i64) -> Result<MappingCone> {
        self.check_level(slope, level)?;
        let p = slope.pi();
        let b_dim = self.hat_b().dim();
        let layout = ColumnLayout::new(slope, level, |s| self.hat_a(s).dim(), b_dim);
        let base = layout.a_total();
        let n = base + layout.b_total();
        let mut d = F2Matrix::zeros(n, n);
        for j in layout.a_columns() {
            let s = layout.level_of(j);
            let col = layout.a_offset(j);
            d.add_block(col, col, self.hat_a(s).boundary());
            if layout.has_b(j) {
                d.add_block(base + layout.b_offset(j), col, self.v(s).chain());
            }
            if layout.has_b(j + p) {
                d.add_block(base + layout.b_offset(j + p), col, self.h(s).chain());
            }
        }
        for j in layout.b_columns() {
            let at = base + layout.b_offset(j);
            d.add_block(at, at, self.hat_b().boundary());
        }
        Ok(MappingCone {
            layout,
            differential: d,
        })
    }

    pub fn block_map(&self, slope: Slope, level: i64) -> Result<BlockMap> {
        self.check_level(slope, level)?;
        let p = slope.pi();
        let layout = ColumnLayout::new(
            slope,
            level,
            |s| self.hat_a(s).homology_dim(),
            self.b_rank(),
        );
        let mut m = F2Matrix::zeros(layout.b_total(), layout.a_total());
        for j in layout.a_columns() {
            let s = layout.level_of(j);
            let col = layout.a_offset(j);
            if layout.has_b(j) {
                m.add_block(layout.b_offset(j), col, self.v(s).induced());
            }
            if layout.has_b(j + p) {
                m.add_block(layout.b_offset(j + p), col, self.h(s).induced());
            }
        }
        Ok(BlockMap { layout, matrix: m })
    }

    /// Homology of the chain-level cone at the truncation bound.
    pub fn cone_rank_chain(&self, slope: Slope) -> usize {
        self.cone_rank_chain_at_level(slope, self.truncation_bound(slope))
            .expect("the bound is admissible")
    }

    pub fn cone_rank_chain_at_level(&self, slope: Slope, level: i64) -> Result<usize> {
        Ok(self.build_cone(slope, level)?.homology_dim())
    }

    /// `dim ker D_* + dim coker D_*` at the truncation bound.
    pub fn cone_rank_homological(&self, slope: Slope) -> usize {
        self.cone_rank_homological_at_level(slope, self.truncation_bound(slope))
            .expect("the bound is admissible")
    }

    pub fn cone_rank_homological_at_level(&self, slope: Slope, level: i64) -> Result<usize> {
        Ok(self.block_map(slope, level)?.cone_rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots;

    fn ctx(name: &str) -> SurgeryContext {
        SurgeryContext::new(&knots::builtin(name).unwrap()).unwrap()
    }

    fn slope(p: u64, q: u64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn truncation_bounds() {
        assert_eq!(ctx("unknot").truncation_bound(slope(1, 1)), 2);
        assert_eq!(ctx("trefoil_rh").truncation_bound(slope(1, 1)), 3);
        assert_eq!(ctx("t25").truncation_bound(slope(7, 2)), 7);
    }

    #[test]
    fn column_counts() {
        let cone = ctx("unknot").build_cone(slope(1, 1), 2).unwrap();
        assert_eq!((cone.layout().a_column_count(), cone.layout().b_column_count()), (3, 2));
        let t = ctx("trefoil_rh");
        let cone = t.build_cone(slope(1, 1), 3).unwrap();
        assert_eq!((cone.layout().a_column_count(), cone.layout().b_column_count()), (5, 4));
        let cone = t.build_cone(slope(1, 2), 3).unwrap();
        assert_eq!((cone.layout().a_column_count(), cone.layout().b_column_count()), (11, 10));
        let expected: usize = cone
            .layout()
            .a_columns()
            .map(|j| t.hat_a(j.div_euclid(2)).dim())
            .sum();
        assert_eq!(cone.a_dim(), expected);
        assert!(cone.is_square_zero());
    }

    #[test]
    fn level_below_bound_is_rejected() {
        assert_eq!(
            ctx("trefoil_rh").build_cone(slope(1, 1), 2).unwrap_err(),
            Error::TruncationTooSmall { level: 2, bound: 3 }
        );
    }

    #[test]
    fn boundary_columns_carry_one_block() {
        // At the left end only h is present, at the right end only v.
        let layout = ctx("unknot").block_map(slope(2, 1), 4).unwrap().layout;
        let (a, b) = (layout.a_columns(), layout.b_columns());
        assert_eq!(*b.start(), a.start() + 2);
        assert_eq!(b.end(), a.end());
    }

    #[test]
    fn chain_oracle_examples() {
        let u = ctx("unknot");
        for (p, q) in [(1, 1), (2, 1), (5, 3), (3, 4)] {
            assert_eq!(u.cone_rank_chain(slope(p, q)), p as usize);
        }
        assert_eq!(ctx("trefoil_rh").cone_rank_chain(slope(1, 1)), 1);
        assert_eq!(ctx("figure_eight").cone_rank_chain(slope(1, 1)), 3);
    }

    #[test]
    fn homological_oracle_examples() {
        assert_eq!(ctx("unknot").cone_rank_homological(slope(5, 3)), 5);
        assert_eq!(ctx("trefoil_rh").cone_rank_homological(slope(1, 2)), 3);
        assert_eq!(ctx("figure_eight").cone_rank_homological(slope(2, 1)), 4);
    }

    #[test]
    fn oracles_agree_and_are_stable() {
        for name in ["trefoil_rh", "trefoil_lh", "figure_eight"] {
            let c = ctx(name);
            for s in Slope::grid(3, 3) {
                let at = c.truncation_bound(s);
                let chain = c.cone_rank_chain(s);
                assert_eq!(chain, c.cone_rank_homological(s), "{name} {s}");
                for extra in [1, 3] {
                    assert_eq!(c.cone_rank_chain_at_level(s, at + extra).unwrap(), chain);
                }
            }
        }
    }
}
