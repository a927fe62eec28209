//! Bifiltered knot Floer complexes.
//!
//! A complex is given by finitely many generators, each sitting at lattice
//! point `(0, alexander)`, and a differential whose terms `x -> U^k y` land at
//! `(-k, alexander(y) - k)`. Multiplication by `U` translates by `(-1, -1)`,
//! so the whole `Z[U, U^-1]`-module is determined by this finite data.
//!
//! The finite region complexes `A_s`, `B`, `C{j = s}` and the quadrant
//! `C{i < 0, j >= s}` are extracted as GF(2) complexes, together with the
//! vertical and horizontal maps `v_s, h_s : A_s -> B`.

mod region;
mod validate;

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use region::{FilteredChainMap, LatticeElement, Region, RegionComplex};
pub use validate::{validate, ValidationIssue, ValidationReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub id: String,
    pub alexander: i64,
    /// Carried through for reference; never used in computations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maslov: Option<i64>,
}

/// The differential of `from` contains `U^upower * to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffTerm {
    pub from: String,
    pub to: String,
    pub upower: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipPair {
    pub from: String,
    pub to: String,
}

/// Raw complex data, exactly as read from or written to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfkData {
    pub name: String,
    pub generators: Vec<Generator>,
    pub differential: Vec<DiffTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flip: Option<Vec<FlipPair>>,
}

impl CfkData {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Canonical JSON: pretty-printed, fields in declaration order, trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("complex data serializes");
        out.push('\n');
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub from: usize,
    pub to: usize,
    pub upower: i64,
}

/// A validated knot Floer complex. Immutable once constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfkComplex {
    data: CfkData,
    index: HashMap<String, usize>,
    terms: Vec<Term>,
    flip: Option<Vec<usize>>,
}

impl Serialize for CfkComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.data.serialize(s)
    }
}

impl TryFrom<CfkData> for CfkComplex {
    type Error = Error;

    fn try_from(data: CfkData) -> Result<Self> {
        Self::new(data)
    }
}

impl CfkComplex {
    pub fn new(data: CfkData) -> Result<Self> {
        let report = validate(&data);
        if !report.is_valid() {
            return Err(Error::InvalidComplex(report));
        }
        let index: HashMap<String, usize> = data
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.id.clone(), i))
            .collect();
        let terms = data
            .differential
            .iter()
            .map(|t| Term {
                from: index[&t.from],
                to: index[&t.to],
                upower: i64::from(t.upower),
            })
            .collect();
        let flip = data.flip.as_ref().map(|pairs| {
            let mut f = vec![usize::MAX; data.generators.len()];
            for pair in pairs {
                let (a, b) = (index[&pair.from], index[&pair.to]);
                f[a] = b;
                f[b] = a;
            }
            f
        });
        Ok(CfkComplex {
            data,
            index,
            terms,
            flip,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::new(CfkData::from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        self.data.to_json()
    }

    pub fn data(&self) -> &CfkData {
        &self.data
    }

    pub fn into_data(self) -> CfkData {
        self.data
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    /// The same complex under a different name.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.data.name = name.into();
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.data.generators
    }

    pub fn generator_count(&self) -> usize {
        self.data.generators.len()
    }

    pub fn generator_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn alexander(&self, generator: usize) -> i64 {
        self.data.generators[generator].alexander
    }

    pub(crate) fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn has_flip(&self) -> bool {
        self.flip.is_some()
    }

    /// Index of the flip partner of `generator`.
    pub fn flip_partner(&self, generator: usize) -> Option<usize> {
        self.flip.as_ref().map(|f| f[generator])
    }

    pub(crate) fn require_flip(&self) -> Result<&[usize]> {
        self.flip
            .as_deref()
            .ok_or_else(|| Error::FlipRequired(self.name().to_string()))
    }

    pub fn max_alexander(&self) -> i64 {
        self.data.generators.iter().map(|g| g.alexander).max().unwrap_or(0)
    }

    pub fn min_alexander(&self) -> i64 {
        self.data.generators.iter().map(|g| g.alexander).min().unwrap_or(0)
    }

    pub fn region_complex(&self, region: Region) -> RegionComplex {
        RegionComplex::extract(self, region)
    }

    /// The vertical projection `v_s : A_s -> B`.
    pub fn v_hat(&self, s: i64) -> FilteredChainMap {
        let source = Arc::new(self.region_complex(Region::HatA(s)));
        let target = Arc::new(self.region_complex(Region::HatB));
        FilteredChainMap::vertical(s, source, target)
    }

    /// The horizontal map `h_s : A_s -> B`: project to `j = s`, multiply by
    /// `U^s`, then apply the flip.
    pub fn h_hat(&self, s: i64) -> Result<FilteredChainMap> {
        let source = Arc::new(self.region_complex(Region::HatA(s)));
        let target = Arc::new(self.region_complex(Region::HatB));
        FilteredChainMap::horizontal(self, s, source, target)
    }

    /// Rank of `HFK-hat(K, s)`: for a reduced complex, the number of
    /// generators in Alexander grading `s`.
    pub fn hfk_hat(&self, s: i64) -> usize {
        self.data
            .generators
            .iter()
            .filter(|g| g.alexander == s)
            .count()
    }

    /// `hfk_hat` for every grading from `-max` to `max`.
    pub fn hfk_profile(&self) -> Vec<(i64, usize)> {
        let top = self.max_alexander().max(-self.min_alexander());
        (-top..=top).map(|s| (s, self.hfk_hat(s))).collect()
    }

    /// `b = dim H(B)`, the rank of HF-hat of the ambient manifold.
    pub fn b_rank(&self) -> usize {
        self.region_complex(Region::HatB).homology_dim()
    }

    /// Genus read off from the vertical maps: the largest `s` such that
    /// `(v_{s-1})_*` fails to be an isomorphism, or 0 if there is none.
    pub fn genus(&self) -> i64 {
        let b = self.region_complex(Region::HatB);
        let b = Arc::new(b);
        let top = self.max_alexander() + 1;
        (1..=top)
            .rev()
            .find(|&s| {
                let a = Arc::new(self.region_complex(Region::HatA(s - 1)));
                !FilteredChainMap::vertical(s - 1, a, b.clone()).is_isomorphism()
            })
            .unwrap_or(0)
    }

    /// Homology of the quadrant `C{i < 0, j >= g - 1}`, which collapses to
    /// the single lattice point `(-1, g - 1)`.
    pub fn single_point_region_rank(&self) -> Result<usize> {
        let g = self.genus();
        if g == 0 {
            return Err(Error::UndefinedRegion(
                "the quadrant C{i<0, j>=g-1} needs genus at least 1".into(),
            ));
        }
        Ok(self
            .region_complex(Region::Quadrant { j_min: g - 1 })
            .homology_dim())
    }

    /// The complex with the `i` and `j` filtrations exchanged.
    ///
    /// Generator `x` is replaced by `U^{A(x)} x`, which sits at `(-A(x), 0)`
    /// and so becomes a generator of Alexander grading `-A(x)` once the
    /// coordinates are swapped. The flip pairing is carried along unchanged.
    pub fn reflected(&self) -> Result<CfkComplex> {
        self.require_flip()?;
        let generators = self
            .data
            .generators
            .iter()
            .map(|g| Generator {
                id: g.id.clone(),
                alexander: -g.alexander,
                maslov: g.maslov,
            })
            .collect();
        let differential = self
            .terms
            .iter()
            .map(|t| DiffTerm {
                from: self.data.generators[t.from].id.clone(),
                to: self.data.generators[t.to].id.clone(),
                upower: u32::try_from(t.upower + self.alexander(t.from) - self.alexander(t.to))
                    .expect("filtered terms reflect to nonnegative powers"),
            })
            .collect();
        CfkComplex::new(CfkData {
            name: self.data.name.clone(),
            generators,
            differential,
            flip: self.data.flip.clone(),
        })
    }
}
