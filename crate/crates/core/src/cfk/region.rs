use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::CfkComplex;
use crate::error::{Error, Result};
use crate::f2linalg::{induced_map, F2Complex, F2Matrix, Homology};

/// A named finite region of the `(i, j)` lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// `max(i, j - s) = 0`
    HatA(i64),
    /// `i = 0`
    HatB,
    /// `j = s`
    JLevel(i64),
    /// `i < 0` and `j >= j_min`
    Quadrant { j_min: i64 },
}

impl Region {
    pub fn contains(&self, i: i64, j: i64) -> bool {
        match *self {
            Region::HatA(s) => i.max(j - s) == 0,
            Region::HatB => i == 0,
            Region::JLevel(s) => j == s,
            Region::Quadrant { j_min } => i < 0 && j >= j_min,
        }
    }

    /// The `U` powers `k` for which `U^k x` lies in the region, where `x`
    /// has Alexander grading `alexander`. Always a finite range.
    fn upowers(&self, alexander: i64) -> std::ops::RangeInclusive<i64> {
        match *self {
            Region::HatA(s) => {
                let k = (alexander - s).max(0);
                k..=k
            }
            Region::HatB => 0..=0,
            Region::JLevel(s) => (alexander - s)..=(alexander - s),
            Region::Quadrant { j_min } => 1..=(alexander - j_min),
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::HatA(s) => write!(f, "A({s})"),
            Region::HatB => write!(f, "B"),
            Region::JLevel(s) => write!(f, "J({s})"),
            Region::Quadrant { j_min } => write!(f, "Q({j_min})"),
        }
    }
}

impl FromStr for Region {
    type Err = Error;

    /// Parses the `Display` form: `A(s)`, `B`, `J(s)`, `Q(s)`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "B" {
            return Ok(Region::HatB);
        }
        let unknown = || Error::UnknownRegion(text.to_string());
        let (tag, rest) = text.split_once('(').ok_or_else(unknown)?;
        let value: i64 = rest
            .strip_suffix(')')
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(unknown)?;
        match tag {
            "A" => Ok(Region::HatA(value)),
            "J" => Ok(Region::JLevel(value)),
            "Q" => Ok(Region::Quadrant { j_min: value }),
            _ => Err(unknown()),
        }
    }
}

/// The element `U^upower * generator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeElement {
    pub generator: usize,
    pub upower: i64,
}

impl LatticeElement {
    pub fn position(&self, complex: &CfkComplex) -> (i64, i64) {
        (-self.upower, complex.alexander(self.generator) - self.upower)
    }
}

/// The finite GF(2) complex spanned by the lattice elements inside a region,
/// with differential components leaving the region dropped.
#[derive(Clone, Debug)]
pub struct RegionComplex {
    region: Region,
    basis: Vec<LatticeElement>,
    positions: HashMap<LatticeElement, usize>,
    complex: F2Complex,
    homology: Homology,
}

impl RegionComplex {
    pub(crate) fn extract(c: &CfkComplex, region: Region) -> Self {
        let basis: Vec<LatticeElement> = (0..c.generator_count())
            .flat_map(|g| {
                region
                    .upowers(c.alexander(g))
                    .map(move |upower| LatticeElement {
                        generator: g,
                        upower,
                    })
            })
            .collect();
        let positions: HashMap<LatticeElement, usize> =
            basis.iter().enumerate().map(|(i, e)| (*e, i)).collect();

        let mut outgoing: Vec<Vec<(usize, i64)>> = vec![Vec::new(); c.generator_count()];
        for t in c.terms() {
            outgoing[t.from].push((t.to, t.upower));
        }
        let mut boundary = F2Matrix::zeros(basis.len(), basis.len());
        for (col, e) in basis.iter().enumerate() {
            for &(to, k) in &outgoing[e.generator] {
                let target = LatticeElement {
                    generator: to,
                    upower: e.upower + k,
                };
                if let Some(&row) = positions.get(&target) {
                    boundary.toggle(row, col);
                }
            }
        }
        let complex = F2Complex::new(boundary)
            .expect("regions are subquotients of a valid complex, so d^2 = 0");
        let homology = complex.homology();
        RegionComplex {
            region,
            basis,
            positions,
            complex,
            homology,
        }
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn basis(&self) -> &[LatticeElement] {
        &self.basis
    }

    pub fn position(&self, element: LatticeElement) -> Option<usize> {
        self.positions.get(&element).copied()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn complex(&self) -> &F2Complex {
        &self.complex
    }

    pub fn boundary(&self) -> &F2Matrix {
        self.complex.boundary()
    }

    pub fn homology(&self) -> &Homology {
        &self.homology
    }

    pub fn homology_dim(&self) -> usize {
        self.homology.dim()
    }

    /// Basis elements as `(generator id, U power)` pairs.
    pub fn labels(&self, c: &CfkComplex) -> Vec<(String, i64)> {
        self.basis
            .iter()
            .map(|e| (c.generators()[e.generator].id.clone(), e.upower))
            .collect()
    }
}

/// A chain map between region complexes with its induced map on homology.
#[derive(Clone, Debug)]
pub struct FilteredChainMap {
    source: Arc<RegionComplex>,
    target: Arc<RegionComplex>,
    chain: F2Matrix,
    induced: F2Matrix,
}

impl FilteredChainMap {
    pub fn new(
        source: Arc<RegionComplex>,
        target: Arc<RegionComplex>,
        chain: F2Matrix,
    ) -> Result<Self> {
        let induced = induced_map(
            source.complex(),
            source.homology(),
            target.complex(),
            target.homology(),
            &chain,
        )?;
        Ok(FilteredChainMap {
            source,
            target,
            chain,
            induced,
        })
    }

    /// `v_s`: elements with `i = 0` map to themselves, the rest to zero.
    pub(crate) fn vertical(
        s: i64,
        source: Arc<RegionComplex>,
        target: Arc<RegionComplex>,
    ) -> Self {
        debug_assert_eq!(source.region(), Region::HatA(s));
        let mut chain = F2Matrix::zeros(target.dim(), source.dim());
        for (col, e) in source.basis().iter().enumerate() {
            if e.upower == 0 {
                let row = target.position(*e).expect("i = 0 elements lie in B");
                chain.set(row, col, true);
            }
        }
        Self::new(source, target, chain).expect("vertical projection is a chain map")
    }

    /// `h_s`: project onto `j = s`, multiply by `U^s`, apply the flip.
    pub(crate) fn horizontal(
        c: &CfkComplex,
        s: i64,
        source: Arc<RegionComplex>,
        target: Arc<RegionComplex>,
    ) -> Result<Self> {
        debug_assert_eq!(source.region(), Region::HatA(s));
        let flip = c.require_flip()?;
        let mut chain = F2Matrix::zeros(target.dim(), source.dim());
        for (col, e) in source.basis().iter().enumerate() {
            let (_, j) = e.position(c);
            if j != s {
                continue;
            }
            // U^s maps j = s to j = 0; the flip sends U^m x to
            // U^(m - A(x)) flip(x), landing on i = 0.
            let shifted = e.upower + s;
            let image = LatticeElement {
                generator: flip[e.generator],
                upower: shifted - c.alexander(e.generator),
            };
            let row = target
                .position(image)
                .expect("the flip carries j = 0 onto i = 0");
            chain.set(row, col, true);
        }
        Self::new(source, target, chain)
    }

    pub fn source(&self) -> &RegionComplex {
        &self.source
    }

    pub fn target(&self) -> &RegionComplex {
        &self.target
    }

    pub fn chain(&self) -> &F2Matrix {
        &self.chain
    }

    /// Matrix of the map on homology in the representative bases.
    pub fn induced(&self) -> &F2Matrix {
        &self.induced
    }

    pub fn rank(&self) -> usize {
        self.induced.rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.induced.cols() - self.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.induced.rows()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.induced.rows() == self.induced.cols() && self.is_surjective()
    }
}
