//! Image-containment checks and the rank obstructions built on them.
//!
//! Total rank of HF-hat does not see orientation, so every verdict here is
//! one-sided: differing ranks obstruct, equal ranks only fail to.

use serde::{Deserialize, Serialize};

use crate::cfk::CfkComplex;
use crate::error::Result;
use crate::f2linalg::image_intersection_rank;
use crate::surgery::{Slope, SurgeryContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    /// `im (h_s)_* ⊆ im (v_s)_*`, checked for `s >= 0`.
    HorizontalInVertical,
    /// `im (v_s)_* ⊆ im (h_s)_*`, checked for `s <= 0`.
    VerticalInHorizontal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentCheck {
    pub s: i64,
    pub containment: Containment,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub checks: Vec<ContainmentCheck>,
    pub holds: bool,
}

impl HypothesisReport {
    pub(crate) fn from_context(ctx: &SurgeryContext) -> Self {
        let g = ctx.genus();
        let contained = |s: i64, containment: Containment| {
            let (v, h) = (ctx.v(s).induced(), ctx.h(s).induced());
            let common = image_intersection_rank(v, h).expect("both maps land in H(B)");
            let inner = match containment {
                Containment::HorizontalInVertical => h.rank(),
                Containment::VerticalInHorizontal => v.rank(),
            };
            ContainmentCheck {
                s,
                containment,
                holds: common == inner,
            }
        };
        let checks: Vec<ContainmentCheck> = (0..=g)
            .map(|s| contained(s, Containment::HorizontalInVertical))
            .chain((-g..=0).map(|s| contained(s, Containment::VerticalInHorizontal)))
            .collect();
        let holds = checks.iter().all(|c| c.holds);
        HypothesisReport { checks, holds }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ContainmentCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

pub fn hypothesis_check(c: &CfkComplex) -> Result<HypothesisReport> {
    Ok(SurgeryContext::new(c)?.hypothesis().clone())
}

/// True iff every `(v_s)_*`, `s >= 0`, is an isomorphism.
pub fn detect_unknot(c: &CfkComplex) -> bool {
    c.genus() == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Obstructed,
    Consistent,
    NotApplicable,
}

/// The outcome of one obstruction test. `ranks` lines up with the compared
/// quantities: one rank per slope, plus `b` last for complement checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub name: String,
    pub slopes: Vec<Slope>,
    pub ranks: Vec<usize>,
    pub verdict: Verdict,
    pub reason: String,
}

impl ObstructionVerdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }
}

/// Compares the ranks at `r` and `s`. Slopes with different numerators are
/// already told apart by first homology and are not compared.
pub fn cosmetic_pair_check(ctx: &SurgeryContext, r: Slope, s: Slope) -> ObstructionVerdict {
    let name = ctx.complex().name().to_string();
    if r == s {
        return ObstructionVerdict {
            name,
            slopes: vec![r, s],
            ranks: vec![],
            verdict: Verdict::NotApplicable,
            reason: "the two slopes coincide".into(),
        };
    }
    if r.p() != s.p() {
        return ObstructionVerdict {
            name,
            slopes: vec![r, s],
            ranks: vec![],
            verdict: Verdict::NotApplicable,
            reason: format!(
                "first homology already differs (Z/{} vs Z/{})",
                r.p(),
                s.p()
            ),
        };
    }
    let (a, b) = (ctx.cone_rank_chain(r), ctx.cone_rank_chain(s));
    let (verdict, reason) = if a != b {
        (Verdict::Obstructed, format!("ranks differ: {a} at {r}, {b} at {s}"))
    } else if detect_unknot(ctx.complex()) {
        (
            Verdict::Consistent,
            format!("ranks agree ({a}); the complex is that of the unknot"),
        )
    } else {
        (
            Verdict::Consistent,
            format!("ranks agree ({a}); for a nontrivial knot this forces both slopes above 1"),
        )
    };
    ObstructionVerdict {
        name,
        slopes: vec![r, s],
        ranks: vec![a, b],
        verdict,
        reason,
    }
}

/// Compares the rank at `1/q` with `b`, the rank of the ambient manifold.
pub fn complement_check(ctx: &SurgeryContext, q: u64) -> Result<ObstructionVerdict> {
    let slope = Slope::new(1, q)?;
    let rank = ctx.cone_rank_chain(slope);
    let b = ctx.b_rank();
    let (verdict, reason) = if rank != b {
        (
            Verdict::Obstructed,
            format!("rank {rank} at {slope} differs from b = {b}"),
        )
    } else {
        (
            Verdict::Consistent,
            format!("rank {rank} at {slope} equals b = {b}"),
        )
    };
    Ok(ObstructionVerdict {
        name: ctx.complex().name().to_string(),
        slopes: vec![slope],
        ranks: vec![rank, b],
        verdict,
        reason,
    })
}

/// Oracle ranks at `p/q` for every `q <= qmax` coprime to `p`.
pub fn monotonicity_scan(ctx: &SurgeryContext, p: u64, qmax: u64) -> Vec<(u64, usize)> {
    (1..=qmax)
        .filter_map(|q| Slope::new(p, q).ok())
        .map(|s| (s.q(), ctx.cone_rank_chain(s)))
        .collect()
}
