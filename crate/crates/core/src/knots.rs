//! Built-in complexes and constructors: staircases, boxes, mirrors, tensor
//! products and a seeded generator of random flip-symmetric complexes.
//!
//! Chirality convention: `trefoil_rh` is the staircase whose vertical map
//! `v_0` vanishes on homology (so `nu = 1`); `trefoil_lh` is its mirror.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cfk::{CfkComplex, CfkData, DiffTerm, FlipPair, Generator};
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 6] = [
    "unknot",
    "trefoil_rh",
    "trefoil_lh",
    "figure_eight",
    "t25",
    "t27",
];

fn gen(id: &str, alexander: i64) -> Generator {
    Generator {
        id: id.to_string(),
        alexander,
        maslov: None,
    }
}

fn term(from: &str, to: &str, upower: u32) -> DiffTerm {
    DiffTerm {
        from: from.to_string(),
        to: to.to_string(),
        upower,
    }
}

fn pair(from: &str, to: &str) -> FlipPair {
    FlipPair {
        from: from.to_string(),
        to: to.to_string(),
    }
}

fn build(data: CfkData) -> CfkComplex {
    CfkComplex::new(data).expect("constructed complexes are valid")
}

pub fn builtin(name: &str) -> Result<CfkComplex> {
    let c = match name {
        "unknot" => build(CfkData {
            name: "unknot".into(),
            generators: vec![gen("x", 0)],
            differential: vec![],
            flip: Some(vec![pair("x", "x")]),
        }),
        "trefoil_rh" => build(CfkData {
            name: "trefoil_rh".into(),
            generators: vec![gen("a", 1), gen("b", 0), gen("c", -1)],
            differential: vec![term("b", "a", 1), term("b", "c", 0)],
            flip: Some(vec![pair("a", "c"), pair("b", "b")]),
        }),
        "trefoil_lh" => mirror(&builtin("trefoil_rh")?).renamed("trefoil_lh"),
        "figure_eight" => build(CfkData {
            name: "figure_eight".into(),
            generators: vec![
                gen("b3", 1),
                gen("b1", 0),
                gen("b4", 0),
                gen("b2", -1),
                gen("e", 0),
            ],
            differential: vec![
                term("b1", "b2", 0),
                term("b1", "b3", 1),
                term("b2", "b4", 1),
                term("b3", "b4", 0),
            ],
            flip: Some(vec![
                pair("b3", "b2"),
                pair("b1", "b1"),
                pair("b4", "b4"),
                pair("e", "e"),
            ]),
        }),
        "t25" => staircase(&StaircaseSpec::new(vec![1; 4])?)?.renamed("t25"),
        "t27" => staircase(&StaircaseSpec::new(vec![1; 6])?)?.renamed("t27"),
        other => return Err(Error::UnknownKnot(other.to_string())),
    };
    Ok(c)
}

/// Alternating horizontal/vertical step lengths of a staircase, starting
/// from the top generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseSpec {
    steps: Vec<u32>,
}

impl StaircaseSpec {
    pub fn new(steps: Vec<u32>) -> Result<Self> {
        if !steps.len().is_multiple_of(2) {
            return Err(Error::InvalidStaircase(format!(
                "{} steps; horizontal and vertical steps must pair up",
                steps.len()
            )));
        }
        if steps.contains(&0) {
            return Err(Error::InvalidStaircase("step lengths must be positive".into()));
        }
        if steps.iter().ne(steps.iter().rev()) {
            return Err(Error::InvalidStaircase(format!(
                "steps {steps:?} are not palindromic"
            )));
        }
        Ok(StaircaseSpec { steps })
    }

    pub fn steps(&self) -> &[u32] {
        &self.steps
    }
}

/// The staircase complex: corners `a0, ..., an` and `b1, ..., bn` with
/// `d b_k = U^{h_k} a_{k-1} + a_k`.
pub fn staircase(spec: &StaircaseSpec) -> Result<CfkComplex> {
    let pairs: Vec<(u32, u32)> = spec.steps.chunks(2).map(|c| (c[0], c[1])).collect();
    let n = pairs.len();
    let top: i64 = pairs.iter().map(|(h, _)| i64::from(*h)).sum();

    let mut generators = vec![gen("a0", top)];
    let mut differential = Vec::new();
    let mut a = top;
    for (k, &(h, v)) in pairs.iter().enumerate() {
        let k = k + 1;
        let b = a - i64::from(h);
        a = b - i64::from(v);
        generators.push(gen(&format!("b{k}"), b));
        generators.push(gen(&format!("a{k}"), a));
        differential.push(term(&format!("b{k}"), &format!("a{}", k - 1), h));
        differential.push(term(&format!("b{k}"), &format!("a{k}"), 0));
    }
    let mut flip = Vec::new();
    for k in 0..=n / 2 {
        if k <= n - k {
            flip.push(pair(&format!("a{k}"), &format!("a{}", n - k)));
        }
    }
    for k in 1..=n.div_ceil(2) {
        flip.push(pair(&format!("b{k}"), &format!("b{}", n + 1 - k)));
    }
    let name = format!(
        "staircase({})",
        spec.steps.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    );
    CfkComplex::new(CfkData {
        name,
        generators,
        differential,
        flip: Some(flip),
    })
}

/// The dual complex: every term `x -> U^k y` becomes `y -> U^k x` and
/// Alexander gradings are negated. The flip pairing carries over.
pub fn mirror(c: &CfkComplex) -> CfkComplex {
    let data = c.data();
    build(CfkData {
        name: data.name.clone(),
        generators: data
            .generators
            .iter()
            .map(|g| Generator {
                id: g.id.clone(),
                alexander: -g.alexander,
                maslov: g.maslov.map(|m| -m),
            })
            .collect(),
        differential: data
            .differential
            .iter()
            .map(|t| term(&t.to, &t.from, t.upower))
            .collect(),
        flip: data.flip.clone(),
    })
}

/// Tensor product over `F[U, U^-1]`; Alexander gradings add, the flip is the
/// product of the flips (kept only when both factors have one).
pub fn tensor(c1: &CfkComplex, c2: &CfkComplex) -> CfkComplex {
    let (d1, d2) = (c1.data(), c2.data());
    let id = |x: &str, y: &str| format!("{x}*{y}");
    let mut generators = Vec::new();
    for g in &d1.generators {
        for h in &d2.generators {
            generators.push(Generator {
                id: id(&g.id, &h.id),
                alexander: g.alexander + h.alexander,
                maslov: g.maslov.zip(h.maslov).map(|(a, b)| a + b),
            });
        }
    }
    let mut differential = Vec::new();
    for g in &d1.generators {
        for h in &d2.generators {
            for t in d1.differential.iter().filter(|t| t.from == g.id) {
                differential.push(term(&id(&g.id, &h.id), &id(&t.to, &h.id), t.upower));
            }
            for t in d2.differential.iter().filter(|t| t.from == h.id) {
                differential.push(term(&id(&g.id, &h.id), &id(&g.id, &t.to), t.upower));
            }
        }
    }
    let flip = match (c1.has_flip(), c2.has_flip()) {
        (true, true) => {
            let mut pairs = Vec::new();
            for (i, g) in d1.generators.iter().enumerate() {
                for (j, h) in d2.generators.iter().enumerate() {
                    let fi = c1.flip_partner(i).unwrap();
                    let fj = c2.flip_partner(j).unwrap();
                    // List each unordered pair once.
                    if (fi, fj) >= (i, j) {
                        pairs.push(pair(
                            &id(&g.id, &h.id),
                            &id(&d1.generators[fi].id, &d2.generators[fj].id),
                        ));
                    }
                }
            }
            Some(pairs)
        }
        _ => None,
    };
    build(CfkData {
        name: format!("{}#{}", d1.name, d2.name),
        generators,
        differential,
        flip,
    })
}

/// Direct sum; generator ids are prefixed with the summand index.
pub fn direct_sum(parts: &[CfkComplex], name: &str) -> CfkComplex {
    let mut generators = Vec::new();
    let mut differential = Vec::new();
    let mut flip = Some(Vec::new());
    for (k, c) in parts.iter().enumerate() {
        let id = |x: &str| format!("s{k}.{x}");
        let d = c.data();
        generators.extend(d.generators.iter().map(|g| Generator {
            id: id(&g.id),
            alexander: g.alexander,
            maslov: g.maslov,
        }));
        differential.extend(
            d.differential
                .iter()
                .map(|t| term(&id(&t.from), &id(&t.to), t.upower)),
        );
        flip = match (flip, &d.flip) {
            (Some(mut acc), Some(pairs)) => {
                acc.extend(pairs.iter().map(|p| pair(&id(&p.from), &id(&p.to))));
                Some(acc)
            }
            _ => None,
        };
    }
    build(CfkData {
        name: name.to_string(),
        generators,
        differential,
        flip,
    })
}

/// A rectangular box: corner `x` at Alexander grading `offset` with
/// `d x = y + U^h z`, `d y = U^h w`, `d z = w`, vertical side `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSpec {
    pub horizontal: u32,
    pub vertical: u32,
    pub offset: i64,
}

impl BoxSpec {
    /// The box the flip pairs this one with.
    pub fn partner(&self) -> BoxSpec {
        BoxSpec {
            horizontal: self.vertical,
            vertical: self.horizontal,
            offset: -self.offset,
        }
    }

    pub fn is_self_symmetric(&self) -> bool {
        *self == self.partner()
    }

    /// (x, y, z, w) Alexander gradings.
    fn gradings(&self) -> [i64; 4] {
        let (h, v, a) = (i64::from(self.horizontal), i64::from(self.vertical), self.offset);
        [a, a - v, a + h, a + h - v]
    }
}

fn push_box(
    spec: &BoxSpec,
    ids: [String; 4],
    generators: &mut Vec<Generator>,
    differential: &mut Vec<DiffTerm>,
) {
    let grading = spec.gradings();
    for (id, a) in ids.iter().zip(grading) {
        generators.push(gen(id, a));
    }
    let [x, y, z, w] = &ids;
    differential.push(term(x, y, 0));
    differential.push(term(x, z, spec.horizontal));
    differential.push(term(y, w, spec.horizontal));
    differential.push(term(z, w, 0));
}

/// `dots` generators at Alexander grading 0 plus each listed box together
/// with its flip partner (a self-symmetric box is added once).
pub fn box_sum(dots: usize, boxes: &[BoxSpec]) -> CfkComplex {
    let mut generators = Vec::new();
    let mut differential = Vec::new();
    let mut flip = Vec::new();
    for d in 1..=dots {
        let id = format!("d{d}");
        generators.push(gen(&id, 0));
        flip.push(pair(&id, &id));
    }
    for (k, spec) in boxes.iter().enumerate() {
        let ids = |suffix: &str| ["x", "y", "z", "w"].map(|l| format!("{l}{k}{suffix}"));
        let own = ids("");
        push_box(spec, own.clone(), &mut generators, &mut differential);
        let [x, y, z, w] = &own;
        if spec.is_self_symmetric() {
            flip.push(pair(x, x));
            flip.push(pair(y, z));
            flip.push(pair(w, w));
        } else {
            let other = ids("f");
            push_box(&spec.partner(), other.clone(), &mut generators, &mut differential);
            let [x2, y2, z2, w2] = &other;
            flip.push(pair(x, x2));
            flip.push(pair(y, z2));
            flip.push(pair(z, y2));
            flip.push(pair(w, w2));
        }
    }
    let name = std::iter::once(format!("dots{dots}"))
        .chain(
            boxes
                .iter()
                .map(|b| format!("box{}x{}@{}", b.horizontal, b.vertical, b.offset)),
        )
        .collect::<Vec<_>>()
        .join("+");
    build(CfkData {
        name,
        generators,
        differential,
        flip: Some(flip),
    })
}

/// Parameters of [`random_complex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub dots: usize,
    pub boxes: usize,
    pub max_side: u32,
    pub max_offset: i64,
}

impl RandomSpec {
    pub fn with_seed(seed: u64) -> Self {
        RandomSpec {
            seed,
            dots: 1,
            boxes: 2,
            max_side: 2,
            max_offset: 2,
        }
    }

    /// Box layouts drawn from the seed.
    pub fn box_specs(&self) -> Vec<BoxSpec> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.boxes)
            .map(|_| BoxSpec {
                horizontal: rng.gen_range(1..=self.max_side.max(1)),
                vertical: rng.gen_range(1..=self.max_side.max(1)),
                offset: rng.gen_range(-self.max_offset..=self.max_offset),
            })
            .collect()
    }
}

/// A direct sum of dots and flip-symmetric boxes; deterministic in the seed.
pub fn random_complex(spec: &RandomSpec) -> CfkComplex {
    box_sum(spec.dots.max(1), &spec.box_specs()).renamed(format!("random-{}", spec.seed))
}

/// The seeded corpus used for property checks: dot counts cycle through
/// 1..=3 and box counts through 0..=2.
pub fn random_corpus(count: u64) -> Vec<CfkComplex> {
    (0..count)
        .map(|seed| {
            random_complex(&RandomSpec {
                seed,
                dots: 1 + (seed % 3) as usize,
                boxes: (seed % 3) as usize,
                max_side: 2,
                max_offset: 2,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_valid_and_flip_equipped() {
        for name in BUILTIN_NAMES {
            let c = builtin(name).unwrap();
            assert!(c.has_flip(), "{name}");
            assert_eq!(c.name(), name);
        }
        assert!(matches!(builtin("trefoil"), Err(Error::UnknownKnot(_))));
    }

    #[test]
    fn unknot_basics() {
        let u = builtin("unknot").unwrap();
        assert_eq!((u.generator_count(), u.genus(), u.b_rank()), (1, 0, 1));
    }

    #[test]
    fn t25_profile() {
        let t = builtin("t25").unwrap();
        assert_eq!(t.genus(), 2);
        for s in -2..=2 {
            assert_eq!(t.hfk_hat(s), 1);
        }
        let d = &t.data().differential;
        assert!(d.contains(&term("b1", "a0", 1)) && d.contains(&term("b1", "a1", 0)));
        assert!(d.contains(&term("b2", "a1", 1)) && d.contains(&term("b2", "a2", 0)));
    }

    #[test]
    fn staircase_validation() {
        assert!(StaircaseSpec::new(vec![1, 2]).is_err());
        assert!(StaircaseSpec::new(vec![1]).is_err());
        assert!(StaircaseSpec::new(vec![0, 0]).is_err());
        let s = staircase(&StaircaseSpec::new(vec![1, 2, 2, 1]).unwrap()).unwrap();
        assert_eq!(s.genus(), 3);
        assert_eq!(s.b_rank(), 1);
    }

    #[test]
    fn empty_staircase_is_unknot() {
        let s = staircase(&StaircaseSpec::new(vec![]).unwrap()).unwrap();
        assert_eq!(s.generator_count(), 1);
        assert_eq!(s.genus(), 0);
    }

    #[test]
    fn mirror_trefoil() {
        let lh = builtin("trefoil_lh").unwrap();
        let a = lh.generator_index("a").unwrap();
        assert_eq!(lh.alexander(a), -1);
        let d = &lh.data().differential;
        assert!(d.contains(&term("a", "b", 1)));
        assert!(d.contains(&term("c", "b", 0)));
        let rh = builtin("trefoil_rh").unwrap();
        assert_eq!(mirror(&mirror(&rh)), rh);
    }

    #[test]
    fn tensor_profiles() {
        let rh = builtin("trefoil_rh").unwrap();
        let lh = builtin("trefoil_lh").unwrap();
        let u = builtin("unknot").unwrap();
        for c in [tensor(&rh, &rh), tensor(&rh, &lh)] {
            let profile: Vec<usize> = (-2..=2).map(|s| c.hfk_hat(s)).collect();
            assert_eq!(profile, vec![1, 2, 3, 2, 1]);
            assert_eq!(c.b_rank(), 1);
            assert!(c.has_flip());
        }
        assert_eq!(tensor(&rh, &rh).genus(), 2);
        assert_eq!(tensor(&u, &rh).generator_count(), 3);
    }

    #[test]
    fn random_is_reproducible() {
        let spec = RandomSpec::with_seed(7);
        assert_eq!(random_complex(&spec).to_json(), random_complex(&spec).to_json());
    }

    #[test]
    fn dots_only() {
        let one = box_sum(1, &[]);
        assert_eq!((one.genus(), one.b_rank()), (0, 1));
        let two = box_sum(2, &[]);
        assert_eq!(two.b_rank(), 2);
        for s in -2..=2 {
            assert!(two.v_hat(s).is_isomorphism() || s < 0);
        }
    }

    #[test]
    fn unit_box_matches_figure_eight_profile() {
        let c = box_sum(
            1,
            &[BoxSpec {
                horizontal: 1,
                vertical: 1,
                offset: 0,
            }],
        );
        assert_eq!(c.v_hat(0).source().homology_dim(), 3);
        assert_eq!(c.b_rank(), 1);
    }

    #[test]
    fn random_corpus_b_equals_dots() {
        for (seed, c) in random_corpus(30).iter().enumerate() {
            assert_eq!(c.b_rank(), 1 + seed % 3, "{}", c.name());
        }
    }
}
