//! Explicit kernel of the cone map `D_*`.
//!
//! A class in the kernel of `(v_s)_*` at column `j >= 0` still has a
//! horizontal image in `B_{j+p}`; under the image containments that image is
//! hit by some `(v)_*` at column `j+p`, whose own horizontal image is then
//! cancelled further right, and so on until it vanishes or the cone ends.
//! Kernel classes of `(h_s)_*` at `j < 0` are completed leftward the same way.
//! The remaining classes come from the overlap of vertical and horizontal
//! images in `B_j` for `0 <= j < p`.

use serde::Serialize;

use super::{BlockMap, ColumnLayout, Slope, SurgeryContext};
use crate::error::{Error, Result};
use crate::f2linalg::{image_intersection_basis, BitVec, F2Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelElementKind {
    /// Seeded by `ker (v)_*` at a column `j >= 0`.
    VerticalKernel,
    /// Seeded by `ker (h)_*` at a column `j < 0`.
    HorizontalKernel,
    /// A pair `(y, z)` with `(v)_* y = (h)_* z` in `B_j`, `0 <= j < p`.
    Matched,
}

/// A kernel class of `D_*`, in the homology coordinates of a [`BlockMap`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelElement {
    pub kind: KernelElementKind,
    /// The column the construction started from.
    pub column: i64,
    pub vector: BitVec,
}

struct Builder<'a> {
    ctx: &'a SurgeryContext,
    layout: &'a ColumnLayout,
    p: i64,
}

impl Builder<'_> {
    fn vertical(&self, j: i64) -> &F2Matrix {
        self.ctx.v(self.layout.level_of(j)).induced()
    }

    fn horizontal(&self, j: i64) -> &F2Matrix {
        self.ctx.h(self.layout.level_of(j)).induced()
    }

    fn stuck(&self, j: i64) -> Error {
        Error::CancellationFailed(format!(
            "{} at column {j} of {}",
            self.ctx.complex().name(),
            self.layout.slope()
        ))
    }

    /// Cancels the horizontal image of `x` (sitting at column `j`) by
    /// vertical preimages further right.
    fn right_tail(&self, mut j: i64, mut x: BitVec, vector: &mut BitVec) -> Result<()> {
        loop {
            let next = j + self.p;
            if !self.layout.has_b(next) {
                return Ok(());
            }
            let w = self.horizontal(j).apply(&x);
            if w.is_zero() {
                return Ok(());
            }
            let y = self.vertical(next).solve(&w).ok_or_else(|| self.stuck(next))?;
            vector.xor_at(self.layout.a_offset(next), &y);
            (j, x) = (next, y);
        }
    }

    /// Cancels the vertical image of `x` (sitting at column `j`) by
    /// horizontal preimages further left.
    fn left_tail(&self, mut j: i64, mut x: BitVec, vector: &mut BitVec) -> Result<()> {
        loop {
            if !self.layout.has_b(j) {
                return Ok(());
            }
            let w = self.vertical(j).apply(&x);
            if w.is_zero() {
                return Ok(());
            }
            let prev = j - self.p;
            let z = self.horizontal(prev).solve(&w).ok_or_else(|| self.stuck(prev))?;
            vector.xor_at(self.layout.a_offset(prev), &z);
            (j, x) = (prev, z);
        }
    }

    fn seed(&self, j: i64, x: &BitVec) -> BitVec {
        let mut vector = BitVec::zeros(self.layout.a_total());
        vector.xor_at(self.layout.a_offset(j), x);
        vector
    }
}

impl SurgeryContext {
    pub fn kernel_basis_construction(&self, slope: Slope) -> Result<Vec<KernelElement>> {
        self.kernel_basis_at_level(slope, self.truncation_bound(slope))
    }

    pub fn kernel_basis_at_level(&self, slope: Slope, level: i64) -> Result<Vec<KernelElement>> {
        if !self.hypothesis().holds {
            return Err(Error::FormulaNotApplicable(self.complex().name().to_string()));
        }
        let block: BlockMap = self.block_map(slope, level)?;
        let builder = Builder {
            ctx: self,
            layout: block.layout(),
            p: slope.pi(),
        };
        let mut out = Vec::new();
        for j in block.layout().a_columns() {
            let (kind, seeds) = if j >= 0 {
                (KernelElementKind::VerticalKernel, builder.vertical(j).kernel_basis())
            } else {
                (KernelElementKind::HorizontalKernel, builder.horizontal(j).kernel_basis())
            };
            for x in seeds {
                let mut vector = builder.seed(j, &x);
                if j >= 0 {
                    builder.right_tail(j, x, &mut vector)?;
                } else {
                    builder.left_tail(j, x, &mut vector)?;
                }
                out.push(KernelElement {
                    kind,
                    column: j,
                    vector,
                });
            }
        }
        for j in 0..builder.p {
            let v = builder.vertical(j);
            let h = builder.horizontal(j - builder.p);
            for w in image_intersection_basis(v, h)? {
                let y = v.solve(&w).ok_or_else(|| builder.stuck(j))?;
                let z = h.solve(&w).ok_or_else(|| builder.stuck(j - builder.p))?;
                let mut vector = builder.seed(j, &y);
                vector.xor_at(block.layout().a_offset(j - builder.p), &z);
                builder.right_tail(j, y, &mut vector)?;
                builder.left_tail(j - builder.p, z, &mut vector)?;
                out.push(KernelElement {
                    kind: KernelElementKind::Matched,
                    column: j,
                    vector,
                });
            }
        }
        Ok(out)
    }
}
