#![allow(dead_code)]

use rand::Rng;
use turan::hstruct::BasePattern;
use turan::setfam::{GeneralFamily, UniformFamily, VertexSet};

pub fn random_family(rng: &mut impl Rng, n: u32, k: u32, density: f64) -> UniformFamily {
    let sets = VertexSet::full(n).subsets_of_size(k).into_iter().filter(|_| rng.gen_bool(density)).collect();
    UniformFamily::new(n, k, sets).unwrap()
}

pub fn random_general(rng: &mut impl Rng, n: u32, density: f64) -> GeneralFamily {
    let sets = VertexSet::full(n).all_subsets().filter(|_| rng.gen_bool(density)).collect();
    GeneralFamily::new(n, sets).unwrap()
}

/// Literal base pattern with `h` edges of size at most `d` on labels `1..=4`.
pub fn random_pattern(rng: &mut impl Rng, h: usize, d: u32) -> BasePattern {
    let edges = (0..h)
        .map(|_| {
            let size = rng.gen_range(0..=d);
            let mut e = VertexSet::EMPTY;
            while e.len() < size {
                e.insert(rng.gen_range(1..=4));
            }
            e
        })
        .collect();
    BasePattern::new(edges).unwrap()
}

/// Family of the sets whose bit is set in `mask`, over `cands`.
pub fn from_mask(n: u32, k: u32, cands: &[VertexSet], mask: u64) -> UniformFamily {
    let sets = (0..cands.len()).filter(|&i| mask >> i & 1 == 1).map(|i| cands[i]).collect();
    UniformFamily::new(n, k, sets).unwrap()
}

/// All up-sets of `P([n])`.
pub fn monotone_families(n: u32) -> Vec<GeneralFamily> {
    let all: Vec<VertexSet> = VertexSet::full(n).all_subsets().collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << all.len() {
        let sets = (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]).collect();
        let f = GeneralFamily::new(n, sets).unwrap();
        if f.is_monotone() {
            out.push(f);
        }
    }
    out
}
