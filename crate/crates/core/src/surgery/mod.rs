//! Rank of HF-hat of `p/q` surgery.
//!
//! Two routes are provided. The truncated mapping cone is assembled at chain
//! level and its homology counted directly; independently, the same cone is
//! assembled from the induced maps `(v_s)_*`, `(h_s)_*` and its kernel and
//! cokernel counted. The closed-form rank formula is then checked against
//! both.
//!
//! Every computation goes through a [`SurgeryContext`], which extracts the
//! complexes `A_s` and the maps `v_s`, `h_s` once. For `s` above the top
//! Alexander grading (or below the bottom one) these are all identical, so
//! the table only covers one level past each end and clamps.

mod cone;
mod formula;
mod kernel;
mod report;
mod slope;

use std::sync::Arc;

use crate::cfk::{CfkComplex, FilteredChainMap, Region, RegionComplex};
use crate::error::Result;
use crate::obstructions::HypothesisReport;

pub use cone::{BlockMap, ColumnLayout, MappingCone};
pub use kernel::{KernelElement, KernelElementKind};
pub use report::{Method, RankReport, Timings, TSV_HEADER};
pub use slope::Slope;

/// Region complexes and maps of one complex, shared across slopes.
#[derive(Clone, Debug)]
pub struct SurgeryContext {
    complex: CfkComplex,
    lo: i64,
    hi: i64,
    hat_b: Arc<RegionComplex>,
    vertical: Vec<FilteredChainMap>,
    horizontal: Vec<FilteredChainMap>,
    genus: i64,
    hypothesis: HypothesisReport,
}

impl SurgeryContext {
    pub fn new(c: &CfkComplex) -> Result<Self> {
        c.require_flip()?;
        let lo = c.min_alexander() - 1;
        let hi = c.max_alexander() + 1;
        let hat_b = Arc::new(c.region_complex(Region::HatB));
        let mut vertical = Vec::new();
        let mut horizontal = Vec::new();
        for s in lo..=hi {
            let a = Arc::new(c.region_complex(Region::HatA(s)));
            vertical.push(FilteredChainMap::vertical(s, a.clone(), hat_b.clone()));
            horizontal.push(FilteredChainMap::horizontal(c, s, a, hat_b.clone())?);
        }
        let mut ctx = SurgeryContext {
            complex: c.clone(),
            lo,
            hi,
            hat_b,
            vertical,
            horizontal,
            genus: 0,
            hypothesis: HypothesisReport::default(),
        };
        ctx.genus = (1..=hi)
            .rev()
            .find(|&s| !ctx.v(s - 1).is_isomorphism())
            .unwrap_or(0);
        ctx.hypothesis = HypothesisReport::from_context(&ctx);
        Ok(ctx)
    }

    pub fn complex(&self) -> &CfkComplex {
        &self.complex
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// `b = dim H(B)`.
    pub fn b_rank(&self) -> usize {
        self.hat_b.homology_dim()
    }

    pub fn hypothesis(&self) -> &HypothesisReport {
        &self.hypothesis
    }

    fn slot(&self, s: i64) -> usize {
        (s.clamp(self.lo, self.hi) - self.lo) as usize
    }

    pub fn v(&self, s: i64) -> &FilteredChainMap {
        &self.vertical[self.slot(s)]
    }

    pub fn h(&self, s: i64) -> &FilteredChainMap {
        &self.horizontal[self.slot(s)]
    }

    pub fn hat_a(&self, s: i64) -> &RegionComplex {
        self.v(s).source()
    }

    pub fn hat_b(&self) -> &RegionComplex {
        &self.hat_b
    }
}

/// `ceil(g + p/q + 1)` for the genus of `c`.
pub fn truncation_bound(c: &CfkComplex, slope: Slope) -> i64 {
    cone::bound(c.genus(), slope)
}

pub fn build_cone(c: &CfkComplex, slope: Slope, level: i64) -> Result<MappingCone> {
    SurgeryContext::new(c)?.build_cone(slope, level)
}

pub fn cone_rank_chain(c: &CfkComplex, slope: Slope) -> Result<usize> {
    Ok(SurgeryContext::new(c)?.cone_rank_chain(slope))
}

pub fn cone_rank_homological(c: &CfkComplex, slope: Slope) -> Result<usize> {
    Ok(SurgeryContext::new(c)?.cone_rank_homological(slope))
}

pub fn t_invariant(c: &CfkComplex, slope: Slope) -> Result<usize> {
    Ok(SurgeryContext::new(c)?.t_invariant(slope))
}

pub fn rank_formula(c: &CfkComplex, slope: Slope) -> Result<usize> {
    SurgeryContext::new(c)?.rank_formula(slope)
}

pub fn nu_surrogate(c: &CfkComplex) -> Result<i64> {
    SurgeryContext::new(c)?.nu_surrogate()
}

pub fn t_closed_form(c: &CfkComplex, slope: Slope) -> Result<usize> {
    SurgeryContext::new(c)?.t_closed_form(slope)
}

pub fn kernel_rank(c: &CfkComplex, slope: Slope) -> Result<usize> {
    SurgeryContext::new(c)?.kernel_rank(slope)
}

pub fn kernel_basis_construction(c: &CfkComplex, slope: Slope) -> Result<Vec<KernelElement>> {
    SurgeryContext::new(c)?.kernel_basis_construction(slope)
}
