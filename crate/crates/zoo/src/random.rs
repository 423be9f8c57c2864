//! Seeded random representations for exercising oracles.
//!
//! Reproducibility matters more than statistical quality here: the same
//! seed must produce byte-identical modules on every platform, so the
//! stream cipher generator is fixed and all sampling goes through it in a
//! fixed order.

use lincat_core::{LinCat, Rep, Side};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scalar_linalg::{Field, Scalar};

fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    let p = field.characteristic();
    let n = if p == 0 {
        rng.gen_range(-2i64..=2)
    } else {
        rng.gen_range(0i64..p as i64)
    };
    Scalar::from_i64(field, n)
}

fn random_vector(field: Field, dim: usize, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    (0..dim).map(|_| random_scalar(field, rng)).collect()
}

/// A random quotient of a random sum of representable modules, shrunk until
/// every value has dimension at most `max_dim`.  Deterministic in `seed`.
pub fn random_rep(cat: &LinCat, side: Side, max_dim: usize, seed: u64) -> Rep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = cat.n_objects();

    // Start from a sum of representables with multiplicities in {0, 1},
    // at least one of them present.
    let mut picks: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    if picks.iter().all(|&b| !b) {
        let x = rng.gen_range(0..n);
        picks[x] = true;
    }
    let summands: Vec<Rep> = (0..n)
        .filter(|&x| picks[x])
        .map(|x| Rep::representable(cat, x, side))
        .collect();
    let refs: Vec<&Rep> = summands.iter().collect();
    let mut rep = Rep::direct_sum(cat, &refs);

    // Quotient by cyclic submodules at oversized objects until small enough.
    loop {
        let oversized: Vec<usize> =
            (0..n).filter(|&x| rep.dim_at(x) > max_dim).collect();
        let Some(&x) = oversized.first() else { break };
        let dim = rep.dim_at(x);
        let mut v = random_vector(cat.field(), dim, &mut rng);
        while v.iter().all(|s| s.is_zero()) {
            v = random_vector(cat.field(), dim, &mut rng);
        }
        let mut gens: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n];
        gens[x].push(v);
        let closure = rep.span_closure(cat, &gens);
        let (q, _) = rep
            .quotient_rep(cat, &closure)
            .expect("span closure is an invariant family");
        rep = q;
    }
    rep
}

/// `count` independent random modules with seeds `seed, seed+1, ...`.
pub fn battery(cat: &LinCat, side: Side, max_dim: usize, count: usize, seed: u64) -> Vec<Rep> {
    (0..count)
        .map(|i| random_rep(cat, side, max_dim, seed + i as u64))
        .collect()
}
