//! Randomized (seeded, reproducible) consistency checks for the exact linear
//! algebra layer, plus a handful of frozen worked examples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scalar_linalg::{Field, Mat, QuotientSpace, Scalar, Subspace};

fn random_mat(rng: &mut ChaCha8Rng, field: Field, rows: usize, cols: usize) -> Mat {
    Mat::from_fn(field, rows, cols, |_, _| field.from_i64(rng.gen_range(-4..=4)))
}

fn random_vec(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| field.from_i64(rng.gen_range(-4..=4))).collect()
}

#[test]
fn solve_round_trips_on_random_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for field in [Field::Rational, Field::Fp(5)] {
        for _ in 0..40 {
            let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            let a = random_mat(&mut rng, field, r, c);
            let x = random_mat(&mut rng, field, c, 2);
            let rhs = a.mul(&x);
            let sol = a.solve(&rhs).expect("rhs is in the image by construction");
            assert_eq!(
                a.mul(&sol.particular),
                rhs,
                "particular solution must reproduce the right-hand side exactly"
            );
            for k in &sol.kernel {
                assert!(
                    a.mul_vec(k).iter().all(Scalar::is_zero),
                    "kernel vectors must be annihilated"
                );
            }
            assert_eq!(
                sol.kernel.len(),
                c - a.rank(),
                "kernel dimension must equal cols - rank"
            );
        }
    }
}

#[test]
fn rank_is_invariant_under_transpose() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for field in [Field::Rational, Field::Fp(3)] {
        for _ in 0..40 {
            let (r, c) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
            let a = random_mat(&mut rng, field, r, c);
            assert_eq!(a.rank(), a.transpose().rank());
        }
    }
}

#[test]
fn rref_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for _ in 0..30 {
        let a = random_mat(&mut rng, Field::Rational, 4, 5);
        let r = a.rref().mat;
        assert_eq!(r.rref().mat, r);
    }
}

#[test]
fn quotient_round_trips_up_to_ambient_dimension_twelve() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for field in [Field::Rational, Field::Fp(7)] {
        for ambient in [1usize, 3, 6, 12] {
            for _ in 0..10 {
                let n_span = rng.gen_range(0..=ambient);
                let vectors: Vec<Vec<Scalar>> =
                    (0..n_span).map(|_| random_vec(&mut rng, field, ambient)).collect();
                let sub = Subspace::from_spanning(field, ambient, &vectors);
                let quot = QuotientSpace::new(sub.clone());

                assert_eq!(sub.dim() + quot.dim(), ambient, "dimension count");
                assert_eq!(
                    quot.projection().mul(quot.section()),
                    Mat::identity(field, quot.dim()),
                    "projection . section = id"
                );
                for i in 0..sub.dim() {
                    assert!(
                        quot.project(sub.basis_vec(i)).iter().all(Scalar::is_zero),
                        "the subspace must project to zero"
                    );
                }
                // lift-then-project is the identity on quotient vectors.
                let qv = random_vec(&mut rng, field, quot.dim());
                assert_eq!(quot.project(&quot.lift(&qv)), qv);
                // v - lift(project(v)) always lies in the subspace.
                let v = random_vec(&mut rng, field, ambient);
                let lifted = quot.lift(&quot.project(&v));
                let diff: Vec<Scalar> =
                    v.iter().zip(&lifted).map(|(a, b)| a - b).collect();
                assert!(sub.contains(&diff), "projection error must lie in the subspace");
            }
        }
    }
}

#[test]
fn subspace_operations_satisfy_dimension_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for _ in 0..25 {
        let field = Field::Rational;
        let ambient = rng.gen_range(2..=8);
        let u = Subspace::from_spanning(
            field,
            ambient,
            &(0..rng.gen_range(1..=ambient))
                .map(|_| random_vec(&mut rng, field, ambient))
                .collect::<Vec<_>>(),
        );
        let w = Subspace::from_spanning(
            field,
            ambient,
            &(0..rng.gen_range(1..=ambient))
                .map(|_| random_vec(&mut rng, field, ambient))
                .collect::<Vec<_>>(),
        );
        let sum = u.sum(&w);
        let inter = u.intersect(&w);
        assert_eq!(sum.dim() + inter.dim(), u.dim() + w.dim(), "modular law");
        assert!(inter.is_subspace_of(&u) && inter.is_subspace_of(&w));
        assert!(u.is_subspace_of(&sum) && w.is_subspace_of(&sum));
        for i in 0..inter.dim() {
            let v = inter.basis_vec(i);
            assert!(u.contains(v) && w.contains(v));
        }
    }
}

#[test]
fn coords_of_reconstructs_vectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for _ in 0..25 {
        let field = Field::Fp(11);
        let ambient = rng.gen_range(1..=9);
        let sub = Subspace::from_spanning(
            field,
            ambient,
            &(0..rng.gen_range(1..=ambient))
                .map(|_| random_vec(&mut rng, field, ambient))
                .collect::<Vec<_>>(),
        );
        let coeffs = random_vec(&mut rng, field, sub.dim());
        let v = sub.lincomb(&coeffs);
        let back = sub.coords_of(&v).expect("linear combination is in the span");
        assert_eq!(sub.lincomb(&back), v);
    }
}
