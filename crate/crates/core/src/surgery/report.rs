use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{Slope, SurgeryContext};

/// Which rank computations to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    Formula,
    #[default]
    Both,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Timings {
    pub oracle: Option<Duration>,
    pub formula: Option<Duration>,
}

pub const TSV_HEADER: &str = "name\tp\tq\toracle\tformula\tt\tnu\thypothesis\tb\tgenus";

/// Ranks at one slope. `formula` is absent when not requested or when the
/// image containments fail; `nu` is absent unless `b = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub name: String,
    pub p: u64,
    pub q: u64,
    pub oracle: Option<usize>,
    pub formula: Option<usize>,
    pub t: usize,
    pub nu: Option<i64>,
    pub hypothesis: bool,
    pub b: usize,
    pub genus: i64,
    #[serde(skip)]
    pub timings: Timings,
}

impl RankReport {
    pub fn compute(ctx: &SurgeryContext, slope: Slope, method: Method) -> Self {
        let mut timings = Timings::default();
        let oracle = (method != Method::Formula).then(|| {
            let start = Instant::now();
            let rank = ctx.cone_rank_chain(slope);
            timings.oracle = Some(start.elapsed());
            rank
        });
        let formula = if method != Method::Oracle {
            let start = Instant::now();
            let rank = ctx.rank_formula(slope).ok();
            timings.formula = Some(start.elapsed());
            rank
        } else {
            None
        };
        RankReport {
            name: ctx.complex().name().to_string(),
            p: slope.p(),
            q: slope.q(),
            oracle,
            formula,
            t: ctx.t_invariant(slope),
            nu: ctx.nu_surrogate().ok(),
            hypothesis: ctx.hypothesis().holds,
            b: ctx.b_rank(),
            genus: ctx.genus(),
            timings,
        }
    }

    /// False only when both ranks were computed and differ.
    pub fn agrees(&self) -> bool {
        match (self.oracle, self.formula) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// The rank, preferring the oracle.
    pub fn rank(&self) -> Option<usize> {
        self.oracle.or(self.formula)
    }

    pub fn to_tsv(&self) -> String {
        fn cell<T: ToString>(v: Option<T>) -> String {
            v.map_or_else(|| "-".to_string(), |v| v.to_string())
        }
        [
            self.name.clone(),
            self.p.to_string(),
            self.q.to_string(),
            cell(self.oracle),
            cell(self.formula),
            self.t.to_string(),
            cell(self.nu),
            self.hypothesis.to_string(),
            self.b.to_string(),
            self.genus.to_string(),
        ]
        .join("\t")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(o) = self.oracle {
            parts.push(format!("oracle={o}"));
        }
        match self.formula {
            Some(r) => parts.push(format!("formula={r}")),
            None if !self.hypothesis => parts.push("formula=-".into()),
            None => {}
        }
        write!(f, "{} {}/{}: {}", self.name, self.p, self.q, parts.join(" "))
    }
}
