//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{builtins, corpus, slope};
use hfsurgery::knots;
use hfsurgery::obstructions::{complement_check, detect_unknot, monotonicity_scan, Verdict};
use hfsurgery::{Slope, SurgeryContext};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ctx(name: &str) -> SurgeryContext {
    SurgeryContext::new(&knots::builtin(name).unwrap()).unwrap()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn formula_matches_oracles() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for c in builtins() {
        let ctx = SurgeryContext::new(&c).unwrap();
        for s in Slope::grid(8, 8) {
            let chain = ctx.cone_rank_chain(s);
            let homological = ctx.cone_rank_homological(s);
            let formula = ctx.rank_formula(s).map_err(|e| e.to_string())?;
            if chain != homological || chain != formula {
                return Err(format!(
                    "{} {s}: chain {chain}, homological {homological}, formula {formula}",
                    c.name()
                ));
            }
            checked += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 30.0 {
        return Err(format!("{checked} cases took {secs:.1}s"));
    }
    Ok(format!("{checked} cases in {secs:.2}s"))
}

fn unknot_lens_count() -> Outcome {
    let u = ctx("unknot");
    let grid = Slope::grid(12, 12);
    for &s in &grid {
        expect_eq(&format!("unknot {s}"), u.cone_rank_chain(s), s.p() as usize)?;
    }
    Ok(format!("{} slopes", grid.len()))
}

fn trefoil_goldens() -> Outcome {
    let t = ctx("trefoil_rh");
    // Every H(A_s) and H(B) is one-dimensional, and the truncated cone has p
    // more A columns than B columns, so rank = 2 dim ker D_* - p. The kernel
    // is the A_0 class in each of the q columns holding A_0 (v_0 = h_0 = 0)
    // plus max(0, p - q) matched classes: 1/q gives 2q - 1, n/1 gives n.
    let goldens = [((1, 1), 1), ((1, 2), 3), ((3, 1), 3), ((5, 1), 5)];
    for ((p, q), rank) in goldens {
        expect_eq(&format!("trefoil {p}/{q}"), t.cone_rank_chain(slope(p, q)), rank)?;
    }
    for q in 1..=5 {
        expect_eq(&format!("trefoil 1/{q}"), t.cone_rank_chain(slope(1, q)), 2 * q as usize - 1)?;
    }
    Ok("1/1, 1/2, 3/1, 5/1 and 1/q for q <= 5".into())
}

fn figure_eight_goldens() -> Outcome {
    let e = ctx("figure_eight");
    expect_eq("figure-eight 1/1", e.cone_rank_chain(slope(1, 1)), 3)?;
    let grid = Slope::grid(6, 6);
    for &s in &grid {
        let want = (2 * s.q() + s.p()) as usize;
        expect_eq(&format!("figure-eight {s}"), e.cone_rank_chain(s), want)?;
    }
    Ok(format!("{} slopes", grid.len()))
}

fn t_consistency() -> Outcome {
    let grid = Slope::grid(8, 8);
    let t = ctx("trefoil_rh");
    let nu = t.nu_surrogate().map_err(|e| e.to_string())?;
    expect_eq("trefoil nu", nu, 1)?;
    for &s in &grid {
        let (p, q) = (s.p() as i64, s.q() as i64);
        let want = (p - (2 * nu - 1) * q).max(0) as usize;
        expect_eq(&format!("trefoil t at {s}"), t.t_invariant(s), want)?;
        for name in ["figure_eight", "unknot"] {
            expect_eq(&format!("{name} t at {s}"), ctx(name).t_invariant(s), s.p() as usize)?;
        }
    }
    Ok(format!("{} slopes on three knots", grid.len()))
}

fn complement_suite() -> Outcome {
    for c in builtins() {
        let ctx = SurgeryContext::new(&c).unwrap();
        let trivial = detect_unknot(&c);
        for q in 1..=5 {
            let v = complement_check(&ctx, q).map_err(|e| e.to_string())?;
            let want = if trivial {
                Verdict::Consistent
            } else if q >= 2 || ctx.genus() >= 2 || ctx.hat_a(0).homology_dim() > ctx.b_rank() {
                Verdict::Obstructed
            } else {
                continue;
            };
            expect_eq(&format!("{} q={q}", c.name()), v.verdict, want)?;
        }
    }
    for name in ["t25", "t27", "figure_eight"] {
        let v = complement_check(&ctx(name), 1).map_err(|e| e.to_string())?;
        expect_eq(&format!("{name} q=1"), v.verdict, Verdict::Obstructed)?;
    }
    Ok("q in 1..=5 on all built-ins".into())
}

fn cosmetic_suite() -> Outcome {
    for c in builtins().into_iter().filter(|c| !detect_unknot(c)) {
        let ctx = SurgeryContext::new(&c).unwrap();
        for p in 1..=3 {
            let tail: Vec<usize> = monotonicity_scan(&ctx, p, 8)
                .into_iter()
                .filter(|&(q, _)| q >= p)
                .map(|(_, r)| r)
                .collect();
            if tail.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("{} p={p}: ranks {tail:?} not strictly increasing", c.name()));
            }
        }
    }
    for name in ["trefoil_rh", "figure_eight"] {
        let ctx = ctx(name);
        for (p, q, q2) in [(3, 1, 4), (3, 2, 4), (5, 2, 7)] {
            let (low, high) = (ctx.cone_rank_chain(slope(p, q)), ctx.cone_rank_chain(slope(p, q2)));
            if high <= low {
                return Err(format!("{name}: rank {high} at {p}/{q2} vs {low} at {p}/{q}"));
            }
        }
    }
    let mut pairs = 0;
    for c in corpus() {
        let ctx = SurgeryContext::new(&c).unwrap();
        if !ctx.hypothesis().holds {
            continue;
        }
        for p in [1, 2] {
            let ranks = monotonicity_scan(&ctx, p, 6);
            for (i, a) in ranks.iter().enumerate() {
                for b in &ranks[i + 1..] {
                    pairs += 1;
                    if a.1 == b.1 && !detect_unknot(&c) {
                        return Err(format!(
                            "{}: equal ranks at {p}/{} and {p}/{} on a nontrivial complex",
                            c.name(),
                            a.0,
                            b.0
                        ));
                    }
                }
            }
        }
    }
    Ok(format!("monotone scans, three triples, {pairs} corpus slope pairs"))
}

fn structural_suite() -> Outcome {
    let all: Vec<_> = builtins().into_iter().chain(corpus()).collect();
    for c in &all {
        let ctx = SurgeryContext::new(c).unwrap();
        common::structural_invariants(&ctx)?;
    }
    let mut cones = 0;
    for c in builtins() {
        let ctx = SurgeryContext::new(&c).unwrap();
        for s in Slope::grid(4, 4) {
            common::cone_invariants(&ctx, s)?;
            cones += 1;
        }
    }
    for c in corpus() {
        let ctx = SurgeryContext::new(&c).unwrap();
        for s in [slope(1, 2), slope(2, 1)] {
            common::cone_invariants(&ctx, s)?;
            cones += 1;
        }
    }
    Ok(format!("{} complexes, {cones} truncated cones", all.len()))
}

fn genus_detection() -> Outcome {
    let expected = [
        ("unknot", 0),
        ("trefoil_rh", 1),
        ("trefoil_lh", 1),
        ("figure_eight", 1),
        ("t25", 2),
        ("t27", 3),
    ];
    for (name, g) in expected {
        expect_eq(name, knots::builtin(name).unwrap().genus(), g)?;
    }
    let t = knots::builtin("trefoil_rh").unwrap();
    expect_eq("trefoil#trefoil", knots::tensor(&t, &t).genus(), 2)?;
    Ok("built-ins and trefoil#trefoil".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("formula = chain oracle = homological oracle", formula_matches_oracles),
        ("unknot surgeries have rank p", unknot_lens_count),
        ("right-handed trefoil goldens", trefoil_goldens),
        ("figure-eight rank 2q + p", figure_eight_goldens),
        ("t agrees with its closed form", t_consistency),
        ("complement obstruction", complement_suite),
        ("cosmetic surgery obstruction", cosmetic_suite),
        ("structural invariants", structural_suite),
        ("genus detection", genus_detection),
    ];
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}: {title} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {title}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
