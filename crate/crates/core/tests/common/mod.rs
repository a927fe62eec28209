#![allow(dead_code)]

use hfsurgery::f2linalg::{image_intersection_rank, BitVec, F2Matrix};
use hfsurgery::knots::{self, RandomSpec, StaircaseSpec};
use hfsurgery::{CfkComplex, Slope, SurgeryContext};

pub fn slope(p: u64, q: u64) -> Slope {
    Slope::new(p, q).unwrap()
}

pub fn builtins() -> Vec<CfkComplex> {
    knots::BUILTIN_NAMES
        .iter()
        .map(|n| knots::builtin(n).unwrap())
        .collect()
}

fn small_staircase(seed: u64) -> CfkComplex {
    let a = 1 + (seed / 4) % 2;
    let b = 1 + (seed / 8) % 2;
    let steps = if (seed / 16).is_multiple_of(2) {
        vec![a as u32, a as u32]
    } else {
        vec![a as u32, b as u32, b as u32, a as u32]
    };
    knots::staircase(&StaircaseSpec::new(steps).unwrap()).unwrap()
}

/// 100 seeded complexes: plain dot-and-box sums, sums with a staircase or a
/// mirrored staircase, and tensor products with the trefoil.
pub fn corpus() -> Vec<CfkComplex> {
    (0..100u64)
        .map(|seed| {
            let base = knots::random_complex(&RandomSpec {
                seed,
                dots: 1 + (seed % 2) as usize,
                boxes: (seed % 3) as usize,
                max_side: 2,
                max_offset: 1,
            });
            let name = format!("corpus-{seed}");
            match seed % 4 {
                0 => base.renamed(name),
                1 => knots::direct_sum(&[base, small_staircase(seed)], &name),
                2 => knots::direct_sum(&[base, knots::mirror(&small_staircase(seed))], &name),
                _ => {
                    let small = knots::random_complex(&RandomSpec {
                        seed,
                        dots: 1,
                        boxes: (seed % 2) as usize,
                        max_side: 1,
                        max_offset: 1,
                    });
                    knots::tensor(&small, &knots::builtin("trefoil_rh").unwrap()).renamed(name)
                }
            }
        })
        .collect()
}

fn contains(outer: &F2Matrix, inner: &F2Matrix) -> bool {
    image_intersection_rank(outer, inner).unwrap() == inner.rank()
}

/// The homology-level invariants every knot-like complex satisfies.
pub fn structural_invariants(ctx: &SurgeryContext) -> Result<(), String> {
    let c = ctx.complex();
    let name = c.name();
    let g = ctx.genus();
    let b = ctx.b_rank();
    let span = g + 2;
    for s in -span..=span {
        if ctx.v(s).rank() != ctx.h(-s).rank() {
            return Err(format!("{name}: rank v_{s} != rank h_{}", -s));
        }
        if !contains(ctx.v(s + 1).induced(), ctx.v(s).induced()) {
            return Err(format!("{name}: im v_{s} not inside im v_{}", s + 1));
        }
        if !contains(ctx.h(s).induced(), ctx.h(s + 1).induced()) {
            return Err(format!("{name}: im h_{} not inside im h_{s}", s + 1));
        }
    }
    for s in g..=span {
        if !ctx.v(s).is_isomorphism() || !ctx.h(-s).is_isomorphism() {
            return Err(format!("{name}: v_{s} or h_{} not an isomorphism", -s));
        }
        if ctx.hat_a(s).homology_dim() != b || ctx.hat_a(-s).homology_dim() != b {
            return Err(format!("{name}: dim H(A_+-{s}) != b"));
        }
    }
    for s in (g + 1)..=span {
        if !ctx.v(-s).induced().is_zero() || !ctx.h(s).induced().is_zero() {
            return Err(format!("{name}: v_{} or h_{s} nonzero past the genus", -s));
        }
    }
    if g >= 1 {
        let top = c.single_point_region_rank().map_err(|e| e.to_string())?;
        if top != c.hfk_hat(g) {
            return Err(format!("{name}: quadrant rank {top} != hfk_hat({g})"));
        }
    }
    let reflected = SurgeryContext::new(&c.reflected().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    for s in -span..=span {
        if reflected.v(s).rank() != ctx.h(-s).rank() {
            return Err(format!("{name}: reflected v_{s} disagrees with h_{}", -s));
        }
    }
    Ok(())
}

/// Oracle stability under deeper truncation and the full kernel basis check.
pub fn cone_invariants(ctx: &SurgeryContext, s: Slope) -> Result<(), String> {
    let name = ctx.complex().name();
    let bound = ctx.truncation_bound(s);
    let chain = ctx.cone_rank_chain(s);
    for extra in [1, 3] {
        let deeper = ctx.cone_rank_chain_at_level(s, bound + extra).unwrap();
        if deeper != chain {
            return Err(format!("{name} {s}: rank {chain} at bound, {deeper} at +{extra}"));
        }
    }
    let basis = ctx.kernel_basis_construction(s).map_err(|e| e.to_string())?;
    let block = ctx.block_map(s, bound).unwrap();
    let expected = ctx.kernel_rank(s).map_err(|e| e.to_string())?;
    if basis.len() != expected || block.kernel_dim() != expected {
        return Err(format!(
            "{name} {s}: basis {} / kernel_rank {expected} / dim ker {}",
            basis.len(),
            block.kernel_dim()
        ));
    }
    if basis.iter().any(|e| !block.matrix().apply(&e.vector).is_zero()) {
        return Err(format!("{name} {s}: basis element outside ker D"));
    }
    let vectors: Vec<BitVec> = basis.iter().map(|e| e.vector.clone()).collect();
    let m = F2Matrix::from_columns(block.matrix().cols(), &vectors).unwrap();
    if m.rank() != basis.len() {
        return Err(format!("{name} {s}: basis is dependent"));
    }
    Ok(())
}
