use super::{BitVec, F2Matrix};
use crate::error::{Error, Result};

/// Incremental echelon basis that remembers how each reduced row was built
/// from the inserted vectors.
#[derive(Clone, Debug)]
struct SpanReducer {
    dim: usize,
    /// (reduced vector, combination of inserted vectors), ordered by leading bit.
    rows: Vec<(BitVec, BitVec)>,
    inserted: usize,
    capacity: usize,
}

impl SpanReducer {
    fn new(dim: usize, capacity: usize) -> Self {
        SpanReducer {
            dim,
            rows: Vec::new(),
            inserted: 0,
            capacity,
        }
    }

    /// Reduces `v` against the stored rows; returns the residual and the
    /// combination of inserted vectors that was subtracted.
    fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut residual = v.clone();
        let mut combo = BitVec::zeros(self.capacity);
        for (row, row_combo) in &self.rows {
            let lead = row.first_one().expect("stored rows are nonzero");
            if residual.get(lead) {
                residual.xor_assign(row);
                combo.xor_assign(row_combo);
            }
        }
        (residual, combo)
    }

    /// Inserts `v`; returns its label if it was independent of the span.
    fn insert(&mut self, v: &BitVec) -> Option<usize> {
        assert_eq!(v.len(), self.dim);
        let (residual, mut combo) = self.reduce(v);
        let lead = residual.first_one()?;
        let label = self.inserted;
        self.inserted += 1;
        combo.toggle(label);
        // Keep rows with distinct leading bits; clear the new lead from
        // existing rows so reduction order stays valid.
        for (row, row_combo) in self.rows.iter_mut() {
            if row.get(lead) {
                row.xor_assign(&residual);
                row_combo.xor_assign(&combo);
            }
        }
        let pos = self
            .rows
            .partition_point(|(row, _)| row.first_one().unwrap() < lead);
        self.rows.insert(pos, (residual, combo));
        Some(label)
    }
}

/// An ungraded finite chain complex: a GF(2) vector space with a square-zero
/// differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Complex {
    boundary: F2Matrix,
}

impl F2Complex {
    pub fn new(boundary: F2Matrix) -> Result<Self> {
        if boundary.rows() != boundary.cols() {
            return Err(Error::DimensionMismatch(format!(
                "differential must be square, got {}x{}",
                boundary.rows(),
                boundary.cols()
            )));
        }
        if !boundary.mul(&boundary)?.is_zero() {
            return Err(Error::NotSquareZero(String::new()));
        }
        Ok(F2Complex { boundary })
    }

    pub fn zero(dim: usize) -> Self {
        F2Complex {
            boundary: F2Matrix::zeros(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.boundary.rows()
    }

    pub fn boundary(&self) -> &F2Matrix {
        &self.boundary
    }

    /// Dimension of homology, `dim - 2 * rank(boundary)`.
    pub fn homology_dim(&self) -> usize {
        self.dim() - 2 * self.boundary.rank()
    }

    pub fn homology(&self) -> Homology {
        Homology::new(self)
    }
}

/// Homology of an [`F2Complex`] with a fixed, pivot-determined basis of cycle
/// representatives.
#[derive(Clone, Debug)]
pub struct Homology {
    boundary_rank: usize,
    representatives: Vec<BitVec>,
    reducer: SpanReducer,
}

impl Homology {
    fn new(complex: &F2Complex) -> Self {
        let n = complex.dim();
        let boundaries = complex.boundary.image_basis();
        let cycles = complex.boundary.kernel_basis();
        let mut reducer = SpanReducer::new(n, cycles.len());
        for b in &boundaries {
            reducer
                .insert(b)
                .expect("image basis vectors are independent");
        }
        let representatives = cycles
            .into_iter()
            .filter(|z| reducer.insert(z).is_some())
            .collect();
        Homology {
            boundary_rank: boundaries.len(),
            representatives,
            reducer,
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.reducer.dim
    }

    pub fn representatives(&self) -> &[BitVec] {
        &self.representatives
    }

    /// Coordinates of the class of the cycle `z` in the representative basis.
    pub fn coordinates(&self, z: &BitVec) -> Result<BitVec> {
        if z.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "chain of length {} in a complex of dimension {}",
                z.len(),
                self.ambient_dim()
            )));
        }
        let (residual, combo) = self.reducer.reduce(z);
        if !residual.is_zero() {
            return Err(Error::NotACycle);
        }
        Ok(combo.slice(self.boundary_rank, self.dim()))
    }

    /// A cycle representing the class with the given coordinates.
    pub fn lift(&self, coordinates: &BitVec) -> BitVec {
        assert_eq!(coordinates.len(), self.dim());
        let mut out = BitVec::zeros(self.ambient_dim());
        for i in coordinates.iter_ones() {
            out.xor_assign(&self.representatives[i]);
        }
        out
    }
}

/// Matrix of the map induced on homology by the chain map `f`, with respect
/// to the representative bases of `source` and `target`.
pub fn induced_map(
    source: &F2Complex,
    source_homology: &Homology,
    target: &F2Complex,
    target_homology: &Homology,
    f: &F2Matrix,
) -> Result<F2Matrix> {
    if f.cols() != source.dim() || f.rows() != target.dim() {
        return Err(Error::DimensionMismatch(format!(
            "chain map is {}x{} between complexes of dimension {} and {}",
            f.rows(),
            f.cols(),
            source.dim(),
            target.dim()
        )));
    }
    if f.mul(source.boundary())? != target.boundary().mul(f)? {
        return Err(Error::NotChainMap);
    }
    let columns = source_homology
        .representatives()
        .iter()
        .map(|z| target_homology.coordinates(&f.apply(z)))
        .collect::<Result<Vec<_>>>()?;
    F2Matrix::from_columns(target_homology.dim(), &columns)
}

/// [`induced_map`] computing both homologies on the fly.
pub fn induced_map_on_homology(
    source: &F2Complex,
    target: &F2Complex,
    f: &F2Matrix,
) -> Result<F2Matrix> {
    induced_map(source, &source.homology(), target, &target.homology(), f)
}

/// A graded finite chain complex. `boundaries[k]` maps degree `k + 1` to
/// degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<F2Matrix>,
}

impl F2ChainComplex {
    pub fn new(dims: Vec<usize>, boundaries: Vec<F2Matrix>) -> Result<Self> {
        if boundaries.len() + 1 != dims.len().max(1) {
            return Err(Error::DimensionMismatch(format!(
                "{} degrees need {} boundary matrices, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, d) in boundaries.iter().enumerate() {
            if d.rows() != dims[k] || d.cols() != dims[k + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "boundary out of degree {} is {}x{}, expected {}x{}",
                    k + 1,
                    d.rows(),
                    d.cols(),
                    dims[k],
                    dims[k + 1]
                )));
            }
        }
        for (k, pair) in boundaries.windows(2).enumerate() {
            if !pair[0].mul(&pair[1])?.is_zero() {
                return Err(Error::NotSquareZero(format!(
                    " from degree {} to degree {k}",
                    k + 2
                )));
            }
        }
        Ok(F2ChainComplex { dims, boundaries })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn boundaries(&self) -> &[F2Matrix] {
        &self.boundaries
    }

    /// Homology dimension per degree: `dim ker(out) - rank(in)`.
    pub fn homology_dimensions(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(F2Matrix::rank).collect();
        (0..self.dims.len())
            .map(|k| {
                let outgoing = if k == 0 { 0 } else { ranks[k - 1] };
                let incoming = ranks.get(k).copied().unwrap_or(0);
                self.dims[k] - outgoing - incoming
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.dims)
    }

    /// The same complex with the grading forgotten.
    pub fn total(&self) -> F2Complex {
        let n: usize = self.dims.iter().sum();
        let mut offsets = vec![0];
        for d in &self.dims {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut boundary = F2Matrix::zeros(n, n);
        for (k, d) in self.boundaries.iter().enumerate() {
            boundary.add_block(offsets[k], offsets[k + 1], d);
        }
        F2Complex { boundary }
    }
}

fn alternating_sum(values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}
