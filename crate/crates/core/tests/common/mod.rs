//! Deterministic random generators for expression-level property tests.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use zeroconc::{KnotExpr, ThreeManifold, TwoKnotExpr};

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5e1f_e475 ^ salt)
}

/// Random catalog knot with fully supported 2-fold covers.
pub fn random_knot(rng: &mut ChaCha8Rng) -> KnotExpr {
    let k = match rng.gen_range(0..4) {
        0 => KnotExpr::Unknot,
        1 => {
            let p = 2 * rng.gen_range(1..=6) + 1;
            KnotExpr::torus(2, p).unwrap()
        }
        _ => loop {
            let p = 2 * rng.gen_range(1..=7) + 1;
            let q = rng.gen_range(1..p);
            if num_integer::Integer::gcd(&p, &q) == 1 {
                break KnotExpr::two_bridge(p, q).unwrap();
            }
        },
    };
    if rng.gen_bool(0.3) {
        KnotExpr::mirror(k)
    } else {
        k
    }
}

/// Random formal 3-manifold from the catalog grammar.
pub fn random_manifold(rng: &mut ChaCha8Rng) -> ThreeManifold {
    let n = rng.gen_range(1..=4);
    let mut m = ThreeManifold::sphere();
    for _ in 0..n {
        let prime = match rng.gen_range(0..4) {
            0 => loop {
                let p = rng.gen_range(2..=11);
                let q = rng.gen_range(1..p);
                if num_integer::Integer::gcd(&p, &q) == 1 {
                    break ThreeManifold::lens(p, q).unwrap();
                }
            },
            1 => ThreeManifold::brieskorn(2, 3, 5).unwrap(),
            _ => ThreeManifold::s1_x_s2(),
        };
        let prime = if rng.gen_bool(0.3) {
            prime.orientation_reverse()
        } else {
            prime
        };
        m = m.connected_sum(prime);
    }
    m
}

/// Random 2-knot expression whose invariants are all computable (supported
/// covers, unambiguous spin data); grammar-expressible, so it also feeds the
/// parser round-trip suite.
pub fn random_two_knot(rng: &mut ChaCha8Rng, depth: u32) -> TwoKnotExpr {
    let top = if depth == 0 { 4 } else { 6 };
    match rng.gen_range(0..top) {
        0 => TwoKnotExpr::UnknotS2,
        1 => {
            // Supported twist spins: n in {0, 2} for any catalog knot, plus
            // the Brieskorn cases.
            match rng.gen_range(0..4) {
                0 => TwoKnotExpr::twist_spin(0, random_knot(rng)),
                1 => TwoKnotExpr::twist_spin(5, KnotExpr::torus(2, 3).unwrap()),
                2 => TwoKnotExpr::twist_spin(3, KnotExpr::torus(2, 5).unwrap()),
                _ => TwoKnotExpr::twist_spin(2, random_knot(rng)),
            }
        }
        2 => TwoKnotExpr::ribbon(rng.gen_range(1..=4)).unwrap(),
        3 => {
            let m = random_manifold(rng);
            let spins = m.spin_structures().unwrap();
            let idx = rng.gen_range(0..spins.len());
            TwoKnotExpr::asserted(m, Some(spins[idx].clone()), "").unwrap()
        }
        4 => TwoKnotExpr::reverse(random_two_knot(rng, depth - 1)),
        _ => {
            let n = rng.gen_range(2..=3);
            TwoKnotExpr::conn_sum((0..n).map(|_| random_two_knot(rng, depth - 1)).collect())
        }
    }
}
