use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::CfkData;

/// One violated invariant of a knot Floer complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValidationIssue {
    DuplicateGenerator { id: String },
    UnknownGenerator { id: String, context: String },
    DuplicateTerm { from: String, to: String, upower: u32 },
    FiltrationIncrease { from: String, to: String, upower: u32 },
    NotReduced { from: String, to: String },
    BoundarySquareNonzero { from: String, to: String, upower: i64 },
    FlipConflict { id: String },
    FlipMissing { id: String },
    FlipAlexanderMismatch { from: String, to: String },
    FlipNotChainMap { id: String },
    HfkAsymmetric { alexander: i64, count: usize, mirror_count: usize },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ValidationIssue::*;
        match self {
            DuplicateGenerator { id } => write!(f, "generator `{id}` defined more than once"),
            UnknownGenerator { id, context } => write!(f, "unknown generator `{id}` in {context}"),
            DuplicateTerm { from, to, upower } => {
                write!(f, "term {from} -> U^{upower} {to} listed more than once")
            }
            FiltrationIncrease { from, to, upower } => {
                write!(f, "term {from} -> U^{upower} {to} raises the j filtration")
            }
            NotReduced { from, to } => {
                write!(f, "term {from} -> {to} preserves both filtrations (complex not reduced)")
            }
            BoundarySquareNonzero { from, to, upower } => {
                write!(f, "d^2({from}) contains U^{upower} {to}")
            }
            FlipConflict { id } => write!(f, "flip pairs `{id}` inconsistently"),
            FlipMissing { id } => write!(f, "flip does not cover generator `{id}`"),
            FlipAlexanderMismatch { from, to } => {
                write!(f, "flip {from} <-> {to} does not negate the Alexander grading")
            }
            FlipNotChainMap { id } => {
                write!(f, "flip does not commute with the differential at `{id}`")
            }
            HfkAsymmetric {
                alexander,
                count,
                mirror_count,
            } => write!(
                f,
                "HFK-hat not symmetric: {count} generators at {alexander}, {mirror_count} at {}",
                -alexander
            ),
        }
    }
}

/// Outcome of [`validate`]: every violation found, never short-circuited.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub name: String,
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "{}: valid", self.name);
        }
        write!(f, "{}: invalid ({} issues)", self.name, self.issues.len())?;
        for issue in &self.issues {
            write!(f, "\n  - {issue}")?;
        }
        Ok(())
    }
}

/// Checks every structural invariant of `data`.
pub fn validate(data: &CfkData) -> ValidationReport {
    let mut issues = Vec::new();

    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, g) in data.generators.iter().enumerate() {
        if index.insert(g.id.as_str(), i).is_some() {
            issues.push(ValidationIssue::DuplicateGenerator { id: g.id.clone() });
        }
    }
    let alexander = |i: usize| data.generators[i].alexander;

    // (from, to, upower) over indices; only well-formed terms are kept for
    // the algebraic checks below.
    let mut terms: Vec<(usize, usize, i64)> = Vec::new();
    let mut seen = HashSet::new();
    for t in &data.differential {
        let lookup = |id: &str| index.get(id).copied();
        let (Some(from), Some(to)) = (lookup(&t.from), lookup(&t.to)) else {
            for id in [&t.from, &t.to] {
                if !index.contains_key(id.as_str()) {
                    issues.push(ValidationIssue::UnknownGenerator {
                        id: id.clone(),
                        context: "differential".into(),
                    });
                }
            }
            continue;
        };
        if !seen.insert((from, to, t.upower)) {
            issues.push(ValidationIssue::DuplicateTerm {
                from: t.from.clone(),
                to: t.to.clone(),
                upower: t.upower,
            });
            continue;
        }
        let k = i64::from(t.upower);
        if alexander(to) - k > alexander(from) {
            issues.push(ValidationIssue::FiltrationIncrease {
                from: t.from.clone(),
                to: t.to.clone(),
                upower: t.upower,
            });
        } else if k == 0 && alexander(to) == alexander(from) {
            issues.push(ValidationIssue::NotReduced {
                from: t.from.clone(),
                to: t.to.clone(),
            });
        }
        terms.push((from, to, k));
    }

    let mut outgoing: Vec<Vec<(usize, i64)>> = vec![Vec::new(); data.generators.len()];
    for &(from, to, k) in &terms {
        outgoing[from].push((to, k));
    }

    for (x, out) in outgoing.iter().enumerate() {
        let mut parity: BTreeMap<(usize, i64), bool> = BTreeMap::new();
        for &(y, a) in out {
            for &(z, b) in &outgoing[y] {
                *parity.entry((z, a + b)).or_default() ^= true;
            }
        }
        for ((z, k), odd) in parity {
            if odd {
                issues.push(ValidationIssue::BoundarySquareNonzero {
                    from: data.generators[x].id.clone(),
                    to: data.generators[z].id.clone(),
                    upower: k,
                });
            }
        }
    }

    if let Some(pairs) = &data.flip {
        let n = data.generators.len();
        let mut partner: Vec<Option<usize>> = vec![None; n];
        let mut consistent = true;
        for pair in pairs {
            let (Some(&a), Some(&b)) = (index.get(pair.from.as_str()), index.get(pair.to.as_str()))
            else {
                for id in [&pair.from, &pair.to] {
                    if !index.contains_key(id.as_str()) {
                        issues.push(ValidationIssue::UnknownGenerator {
                            id: id.clone(),
                            context: "flip".into(),
                        });
                    }
                }
                consistent = false;
                continue;
            };
            for (x, y) in [(a, b), (b, a)] {
                match partner[x] {
                    Some(existing) if existing != y => {
                        issues.push(ValidationIssue::FlipConflict {
                            id: data.generators[x].id.clone(),
                        });
                        consistent = false;
                    }
                    _ => partner[x] = Some(y),
                }
            }
            if alexander(a) != -alexander(b) {
                issues.push(ValidationIssue::FlipAlexanderMismatch {
                    from: pair.from.clone(),
                    to: pair.to.clone(),
                });
                consistent = false;
            }
        }
        for (x, p) in partner.iter().enumerate() {
            if p.is_none() {
                issues.push(ValidationIssue::FlipMissing {
                    id: data.generators[x].id.clone(),
                });
                consistent = false;
            }
        }
        if consistent {
            let flip: Vec<usize> = partner.into_iter().map(Option::unwrap).collect();
            for x in 0..n {
                // iota(U^m x) = U^(m - A(x)) flip(x); compare iota(dx) with d(iota x).
                let mut lhs: BTreeMap<(usize, i64), bool> = BTreeMap::new();
                for &(y, k) in &outgoing[x] {
                    *lhs.entry((flip[y], k - alexander(y))).or_default() ^= true;
                }
                let mut rhs: BTreeMap<(usize, i64), bool> = BTreeMap::new();
                for &(z, m) in &outgoing[flip[x]] {
                    *rhs.entry((z, m - alexander(x))).or_default() ^= true;
                }
                lhs.retain(|_, odd| *odd);
                rhs.retain(|_, odd| *odd);
                if lhs != rhs {
                    issues.push(ValidationIssue::FlipNotChainMap {
                        id: data.generators[x].id.clone(),
                    });
                }
            }

            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for g in &data.generators {
                *counts.entry(g.alexander).or_default() += 1;
            }
            for (&s, &count) in &counts {
                let mirror_count = counts.get(&-s).copied().unwrap_or(0);
                if s > 0 && count != mirror_count {
                    issues.push(ValidationIssue::HfkAsymmetric {
                        alexander: s,
                        count,
                        mirror_count,
                    });
                }
            }
            for (&s, &count) in &counts {
                if s < 0 && !counts.contains_key(&-s) {
                    issues.push(ValidationIssue::HfkAsymmetric {
                        alexander: s,
                        count,
                        mirror_count: 0,
                    });
                }
            }
        }
    }

    ValidationReport {
        name: data.name.clone(),
        issues,
    }
}
