#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use switchlogic::logic::LogicalNetwork;
use switchlogic::model::{Mode, SwitchedLinearSystem};
use switchlogic::stp::{LogicalMatrix, Matrix, Rational, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// (k, state nodes) giving N = k^nodes.
pub const SHAPES_UP_TO_4: [(usize, usize); 4] = [(2, 1), (3, 1), (2, 2), (4, 1)];

pub fn random_net(rng: &mut impl Rng, k: usize, state_nodes: usize, input_nodes: usize, q: usize) -> LogicalNetwork {
    let n = k.pow(state_nodes as u32);
    let mn = n * k.pow(input_nodes as u32);
    let l = (0..mn).map(|_| rng.gen_range(1..=n)).collect();
    let r = (0..mn).map(|_| rng.gen_range(1..=q)).collect();
    LogicalNetwork::new(
        k,
        state_nodes,
        input_nodes,
        LogicalMatrix::new(n, l).unwrap(),
        LogicalMatrix::new(q, r).unwrap(),
    )
    .unwrap()
}

/// Random network with N ≤ 4 and M ≤ 2.
pub fn small_net(rng: &mut impl Rng, q: usize) -> LogicalNetwork {
    let (k, nodes) = SHAPES_UP_TO_4[rng.gen_range(0..SHAPES_UP_TO_4.len())];
    let inputs = if k == 2 { rng.gen_range(0..=1) } else { 0 };
    random_net(rng, k, nodes, inputs, q)
}

pub fn random_matrix<T: Scalar>(rng: &mut impl Rng, rows: usize, cols: usize, zero_prob: f64) -> Matrix<T> {
    let entries: Vec<i64> = (0..rows * cols)
        .map(|_| if rng.gen_bool(zero_prob) { 0 } else { rng.gen_range(-3..=3) })
        .collect();
    Matrix::from_ints(rows, cols, &entries).unwrap()
}

pub fn random_sls<T: Scalar>(rng: &mut impl Rng, n: usize, m: usize, p: usize, q: usize) -> SwitchedLinearSystem<T> {
    let modes = (0..q)
        .map(|_| {
            Mode::new(
                random_matrix(rng, n, n, 0.5),
                random_matrix(rng, n, m, 0.6),
                random_matrix(rng, p, n, 0.6),
            )
        })
        .collect();
    SwitchedLinearSystem::new(modes).unwrap()
}

/// Random modes with invertible state matrices.
pub fn random_invertible_sls(rng: &mut impl Rng, n: usize, q: usize) -> SwitchedLinearSystem<Rational> {
    let modes = (0..q)
        .map(|_| {
            let a = loop {
                let a: Matrix<Rational> = random_matrix(rng, n, n, 0.3);
                if a.rank() == n {
                    break a;
                }
            };
            Mode::new(a, random_matrix(rng, n, 1, 0.5), random_matrix(rng, 1, n, 0.5))
        })
        .collect();
    SwitchedLinearSystem::new(modes).unwrap()
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn random_vec(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| rat(rng.gen_range(-5..=5))).collect()
}

/// The network and system of the worked example in the README.
pub fn example_net() -> LogicalNetwork {
    LogicalNetwork::from_columns(2, 2, 1, 2, vec![1, 1, 2, 4, 4, 4, 3, 3], vec![2, 2, 1, 1, 1, 2, 2, 1]).unwrap()
}

pub fn example_sls<T: Scalar>() -> SwitchedLinearSystem<T> {
    let m = |r, c, v: &[i64]| Matrix::from_ints(r, c, v).unwrap();
    SwitchedLinearSystem::new(vec![
        Mode::new(m(3, 3, &[1, 2, -1, 0, 1, 0, 1, -4, 3]), m(3, 1, &[1, 0, 0]), m(1, 3, &[0, 0, 1])),
        Mode::new(m(3, 3, &[-2, 2, 1, 0, -2, 0, 1, -4, 0]), m(3, 1, &[0, 1, 0]), m(1, 3, &[0, 1, 0])),
    ])
    .unwrap()
}
