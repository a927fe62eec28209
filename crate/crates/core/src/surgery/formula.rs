use super::{Slope, SurgeryContext};
use crate::error::{Error, Result};
use crate::f2linalg::image_intersection_rank;

impl SurgeryContext {
    /// `dim ker (v_s)_* + b - rank (v_s)_*`.
    fn defect(&self, s: i64) -> i64 {
        let v = self.v(s);
        (v.kernel_dim() + self.b_rank()) as i64 - v.rank() as i64
    }

    fn require_hypothesis(&self) -> Result<()> {
        if self.hypothesis().holds {
            Ok(())
        } else {
            Err(Error::FormulaNotApplicable(self.complex().name().to_string()))
        }
    }

    /// Sum over `j = 0..p-1` of the dimension of
    /// `im (v_{floor(j/q)})_* ∩ im (h_{floor((j-p)/q)})_*`.
    pub fn t_invariant(&self, slope: Slope) -> usize {
        let (p, q) = (slope.pi(), slope.qi());
        (0..p)
            .map(|j| {
                let v = self.v(j.div_euclid(q)).induced();
                let h = self.h((j - p).div_euclid(q)).induced();
                image_intersection_rank(v, h).expect("both maps land in H(B)")
            })
            .sum()
    }

    /// The closed-form rank, evaluated whether or not its hypothesis holds.
    pub fn rank_formula_unchecked(&self, slope: Slope) -> i64 {
        let (p, q) = (slope.pi(), slope.qi());
        let middle: i64 = (1..self.genus()).map(|s| self.defect(s)).sum();
        q * self.defect(0) + 2 * q * middle + 2 * self.t_invariant(slope) as i64
            - p * self.b_rank() as i64
    }

    /// The closed-form rank; an error when the image containments fail.
    pub fn rank_formula(&self, slope: Slope) -> Result<usize> {
        self.require_hypothesis()?;
        let value = self.rank_formula_unchecked(slope);
        usize::try_from(value).map_err(|_| {
            Error::FormulaNotApplicable(format!("{}: negative value {value}", self.complex().name()))
        })
    }

    /// `q dim ker (v_0)_* + 2q sum_{s=1}^{g-1} dim ker (v_s)_* + t`.
    pub fn kernel_rank(&self, slope: Slope) -> Result<usize> {
        self.require_hypothesis()?;
        let q = slope.q() as usize;
        let middle: usize = (1..self.genus()).map(|s| self.v(s).kernel_dim()).sum();
        Ok(q * self.v(0).kernel_dim() + 2 * q * middle + self.t_invariant(slope))
    }

    fn require_b_one(&self) -> Result<()> {
        match self.b_rank() {
            1 => Ok(()),
            b => Err(Error::NotApplicable(format!(
                "nu is only defined when b = 1, here b = {b}"
            ))),
        }
    }

    /// The least `s >= 0` with `(v_s)_*` surjective.
    pub fn nu_surrogate(&self) -> Result<i64> {
        self.require_b_one()?;
        Ok((0..)
            .find(|&s| self.v(s).is_surjective())
            .expect("v_s is an isomorphism past the top grading"))
    }

    /// `max(0, p - (2 nu - 1) q)` when `nu > 0`, and `p` when `nu = 0`.
    pub fn t_closed_form(&self, slope: Slope) -> Result<usize> {
        let nu = self.nu_surrogate()?;
        let (p, q) = (slope.pi(), slope.qi());
        Ok(if nu == 0 {
            p as usize
        } else {
            (p - (2 * nu - 1) * q).max(0) as usize
        })
    }
}
