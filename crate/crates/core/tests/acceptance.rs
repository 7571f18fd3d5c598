//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration as Elapsed, Instant};

use rand::Rng;

use common::{random_net, random_sls, random_vec, rng, small_net};
use switchlogic::analysis::{
    check_property, feasible_input_sequences, lexicographic_sequences, passing_sequences, AlphaSelection,
    SearchOptions,
};
use switchlogic::logic::{
    control_attractors, set_reachability, set_reachability_counts, AttractorId, InputStateSubset, LogicalNetwork,
    SubsetClass,
};
use switchlogic::model::{merge, merge_dual, SwitchedLinearSystem};
use switchlogic::oracle::{brute_fot_failures, brute_track, kalman_oracle, EnumerationBudget};
use switchlogic::realization::{check_fot_realizable, check_trackable, Duration, FotSpec, TrackingProblem};
use switchlogic::stp::{khatri_rao, power_reducing_matrix, stp, swap_matrix, Matrix, Rational};
use switchlogic::Property;

type Q = Matrix<Rational>;
type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn class(sets: &[&[usize]]) -> SubsetClass {
    SubsetClass::new(sets.iter().map(|s| InputStateSubset::new(s.iter().copied()).unwrap()).collect()).unwrap()
}

fn within(start: Instant, limit: Elapsed) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        return Err(format!("took {took:.2?}, limit {limit:?}"));
    }
    Ok(())
}

fn example_set_reachability() -> Outcome {
    let start = Instant::now();
    let net = common::example_net();
    // Ω1 = {1×(2,2), 2×(1,2)}, Ω2 = {2×(1,1), 2×(2,1), 2×(2,2)}, Ω3 = {1×(1,1), 1×(1,2), 1×(2,1)}.
    let omega0 = class(&[&[4, 6]]);
    let omega_d = class(&[&[5, 7, 8], &[1, 2, 3]]);
    let c1 = set_reachability_counts(&net, &omega0, &omega_d, 1).map_err(|e| e.to_string())?;
    let c2 = set_reachability_counts(&net, &omega0, &omega_d, 2).map_err(|e| e.to_string())?;
    ensure!(c1.to_rows() == vec![vec![2], vec![0]], "C~1 = {:?}", c1.to_rows());
    ensure!(c2.to_rows() == vec![vec![4], vec![2]], "C~2 = {:?}", c2.to_rows());
    let b2 = set_reachability(&net, &omega0, &omega_d, 2).map_err(|e| e.to_string())?;
    ensure!(b2 == c2.support(), "Boolean C2 differs from support of C~2");
    within(start, Elapsed::from_secs(1))?;
    Ok("C~1 = [2;0], C~2 = [4;2]".into())
}

fn seqs(list: &[[usize; 3]]) -> BTreeSet<Vec<usize>> {
    list.iter().map(|s| s.to_vec()).collect()
}

fn example_verdicts() -> Outcome {
    let start = Instant::now();
    let net = common::example_net();
    let sls = common::example_sls::<Rational>();
    let ms = merge(&sls, &net).map_err(|e| e.to_string())?;
    let dual = merge_dual(&sls, &net).map_err(|e| e.to_string())?;

    let attractors = control_attractors(&net);
    ensure!(attractors.representatives == vec![4], "representatives {:?}", attractors.representatives);
    let fp4 = attractors.fixed_points.iter().position(|f| f.state == 4).ok_or("state 4 is not a fixed point")?;
    let basin = attractors.basin_of(AttractorId::FixedPoint(fp4)).ok_or("no basin for state 4")?;
    ensure!(basin.members.len() == 4, "basin of state 4 has {} members", basin.members.len());

    for property in Property::ALL {
        let v = check_property(&ms, &dual, property, &SearchOptions::default()).map_err(|e| e.to_string())?;
        ensure!(v.holds, "{property} reported false");
        ensure!(v.checked_alphas == vec![4], "{property} checked {:?}", v.checked_alphas);
    }

    let at_four = AlphaSelection::Explicit(vec![4]);
    let feasible = seqs(&[[2, 2, 2], [2, 2, 1], [2, 1, 2], [2, 1, 1], [1, 2, 2]]);
    let search = feasible_input_sequences(&ms, 3, &at_four).map_err(|e| e.to_string())?;
    ensure!(search.length == Some(3), "feasible length {:?}", search.length);
    let found: BTreeSet<Vec<usize>> = search.sequences.iter().map(|s| s.gammas.clone()).collect();
    ensure!(found == feasible, "feasible set {found:?}");

    let mut all_but_last: BTreeSet<Vec<usize>> = lexicographic_sequences(2, 3).collect();
    all_but_last.remove(&vec![2, 2, 2]);
    for (property, want) in [
        (Property::Reachability, &feasible),
        (Property::Controllability, &feasible),
        (Property::Observability, &all_but_last),
        (Property::Reconstructibility, &all_but_last),
    ] {
        let got: BTreeSet<Vec<usize>> =
            passing_sequences(&ms, &dual, property, 3, &at_four).map_err(|e| e.to_string())?.into_iter().collect();
        ensure!(&got == want, "{property} passing set {got:?}");
    }
    within(start, Elapsed::from_secs(5))?;
    Ok("all four properties hold at α=4; feasible and passing sets exact".into())
}

#[rustfmt::skip]
const G1: [i64; 144] = [
    -2, 2, 1, -2, 2, 1, 0, 0, 0, 0, 0, 0,
    0, -2, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0,
    1, -4, 0, 1, -4, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 1, 2, -1, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 1, -4, 3, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, -1,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -4, 3,
];

#[rustfmt::skip]
const G2: [i64; 144] = [
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, -2, 2, 1, 1, 2, -1,
    0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 1, 0,
    0, 0, 0, 0, 0, 0, 1, -4, 0, 1, -4, 3,
    1, 2, -1, -2, 2, 1, 0, 0, 0, 0, 0, 0,
    0, 1, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0,
    1, -4, 3, 1, -4, 0, 0, 0, 0, 0, 0, 0,
];

fn example_structure() -> Outcome {
    let net = common::example_net();
    let ms = merge(&common::example_sls::<Rational>(), &net).map_err(|e| e.to_string())?;
    for (gamma, entries) in [(1, &G1), (2, &G2)] {
        let want = Q::from_ints(12, 12, entries).unwrap();
        let got = ms.g_input(gamma).map_err(|e| e.to_string())?;
        if got != want {
            let diffs: Vec<(usize, usize)> = (0..12)
                .flat_map(|i| (0..12).map(move |j| (i, j)))
                .filter(|&(i, j)| got.get(i, j) != want.get(i, j))
                .collect();
            return Err(format!("G_{gamma} differs at (row, col) {diffs:?}"));
        }
        let pattern = ms.compressed_pattern(gamma).map_err(|e| e.to_string())?;
        let l_block = net.l_block(gamma).map_err(|e| e.to_string())?.to_boolean();
        ensure!(pattern == l_block, "block pattern of G_{gamma} is not L_{gamma}");
    }
    Ok("G_1, G_2 equal entry for entry; patterns equal L_1, L_2".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut r = rng(9001);
    let budget = EnumerationBudget::default();
    let systems = 60;
    let mut checks = 0;
    let mut positives = 0;
    for case in 0..systems {
        let q = r.gen_range(1..=3);
        let (n, m, p) = (r.gen_range(1..=3), r.gen_range(1..=2), r.gen_range(1..=2));
        let sls: SwitchedLinearSystem<Rational> = random_sls(&mut r, n, m, p, q);
        let net = small_net(&mut r, q);
        let ms = merge(&sls, &net).map_err(|e| e.to_string())?;
        let dual = merge_dual(&sls, &net).map_err(|e| e.to_string())?;
        for selection in [AlphaSelection::All, AlphaSelection::Attractors] {
            let alphas = selection.resolve(&net).map_err(|e| e.to_string())?;
            let opts = SearchOptions::default().with_t_max(n).with_alphas(selection.clone());
            for property in Property::ALL {
                let v = check_property(&ms, &dual, property, &opts).map_err(|e| e.to_string())?;
                let o = kalman_oracle(&sls, &net, property, n, &alphas, &budget).map_err(|e| e.to_string())?;
                ensure!(v.holds == o.holds, "system {case} {property} {selection:?}: block {} oracle {}", v.holds, o.holds);
                if v.holds {
                    ensure!(v.witness.as_ref() == o.passing.first(), "system {case} {property}: witness differs");
                    positives += 1;
                }
                checks += 1;
            }
        }
    }
    within(start, Elapsed::from_secs(60))?;
    Ok(format!("{systems} systems, {checks}/{checks} verdicts agree ({positives} positive)"))
}

fn delta(n: usize, i: usize) -> Q {
    Q::delta(n, i).unwrap()
}

fn random_q(r: &mut impl Rng, rows: usize, cols: usize) -> Q {
    common::random_matrix(r, rows, cols, 0.3)
}

fn stp_identities() -> Outcome {
    let mut r = rng(9002);
    let dims = 1..=4usize;
    for _ in 0..200 {
        let mut d = || r.gen_range(dims.clone());
        let (a_r, a_c, b_r, b_c, c_r, c_c) = (d(), d(), d(), d(), d(), d());
        let (a, b, c) = (random_q(&mut r, a_r, a_c), random_q(&mut r, b_r, b_c), random_q(&mut r, c_r, c_c));
        let left = stp(&stp(&a, &b).unwrap(), &c).unwrap();
        let right = stp(&a, &stp(&b, &c).unwrap()).unwrap();
        ensure!(left == right, "associativity fails for {a_r}x{a_c}, {b_r}x{b_c}, {c_r}x{c_c}");
        let shared = r.gen_range(dims.clone());
        let (x, y) = (random_q(&mut r, a_r, shared), random_q(&mut r, shared, b_c));
        ensure!(stp(&x, &y).unwrap() == x.matmul(&y).unwrap(), "STP differs from the ordinary product");
    }
    for m in 1..=6 {
        for n in 1..=6 {
            for i in 1..=m {
                for j in 1..=n {
                    ensure!(stp(&delta(m, i), &delta(n, j)).unwrap() == delta(m * n, (i - 1) * n + j), "δ_{m}^{i} ⋉ δ_{n}^{j}");
                }
            }
        }
    }
    for m in 1..=4 {
        for n in 1..=4 {
            let w = swap_matrix(m, n).unwrap().to_dense::<Rational>();
            for i in 1..=m {
                for j in 1..=n {
                    let lhs = stp(&stp(&w, &delta(m, i)).unwrap(), &delta(n, j)).unwrap();
                    ensure!(lhs == stp(&delta(n, j), &delta(m, i)).unwrap(), "swap W[{m},{n}] on ({i},{j})");
                }
            }
        }
    }
    for n in 1..=8 {
        let phi = power_reducing_matrix(n).unwrap().to_dense::<Rational>();
        for i in 1..=n {
            let x = delta(n, i);
            ensure!(phi.matmul(&x).unwrap() == stp(&x, &x).unwrap(), "Φ_{n} on δ_{n}^{i}");
        }
    }
    let (a, b) = (random_q(&mut r, 2, 3), random_q(&mut r, 3, 3));
    let kr = khatri_rao(&a, &b).unwrap();
    for j in 0..3 {
        ensure!(kr.column(j) == a.column(j).kron(&b.column(j)).unwrap(), "Khatri-Rao column {j}");
    }
    Ok("associativity, degeneration, stacking, swap (m,n≤4), power reduction (n≤8)".into())
}

fn mergence_equivalence() -> Outcome {
    let mut r = rng(9003);
    let systems = 30;
    for case in 0..systems {
        let q = r.gen_range(1..=3);
        let net = if case % 3 == 0 { random_net(&mut r, 2, 3, 1, q) } else { small_net(&mut r, q) };
        let (n, m, p) = (r.gen_range(1..=3), r.gen_range(1..=2), r.gen_range(1..=2));
        let sls: SwitchedLinearSystem<Rational> = random_sls(&mut r, n, m, p, q);
        let ms = merge(&sls, &net).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let gamma = r.gen_range(1..=net.n_inputs());
            let theta = r.gen_range(1..=net.n_states());
            let x = random_vec(&mut r, n);
            let u = random_vec(&mut r, m);
            let (theta_next, sigma) = net.step(gamma, theta).map_err(|e| e.to_string())?;
            let want = (theta_next, sls.step(sigma, &x, &u).map_err(|e| e.to_string())?);
            let got = ms.step_merged(gamma, theta, &x, &u).map_err(|e| e.to_string())?;
            ensure!(got == want, "system {case}: step differs at γ={gamma}, θ={theta}");
        }
    }
    Ok(format!("{systems} systems × 100 draws equal"))
}

const NET_SHAPES: [(usize, usize, usize); 10] =
    [(2, 1, 0), (2, 1, 1), (2, 2, 1), (2, 3, 1), (2, 2, 2), (3, 1, 1), (2, 4, 2), (4, 1, 1), (2, 3, 3), (2, 5, 1)];

fn random_nets(r: &mut impl Rng, count: usize) -> Vec<LogicalNetwork> {
    let mut nets = vec![common::example_net()];
    nets.extend((0..count).map(|_| {
        let (k, n, m) = NET_SHAPES[r.gen_range(0..NET_SHAPES.len())];
        let q = r.gen_range(1..=3);
        random_net(r, k, n, m, q)
    }));
    nets
}

fn realization_suite() -> Outcome {
    let mut r = rng(9004);
    let budget = EnumerationBudget::default();
    let nets = random_nets(&mut r, 120);
    let mut fot_checks = 0;
    for (i, net) in nets.iter().enumerate() {
        ensure!(net.input_state_count() <= 64, "net {i} too large");
        let brute = brute_fot_failures(net);
        for _ in 0..4 {
            let durations = (0..net.q())
                .map(|_| match r.gen_range(0..3) {
                    0 => Duration::Finite(1),
                    1 => Duration::Finite(r.gen_range(2..6)),
                    _ => Duration::Infinite,
                })
                .collect();
            let rep = check_fot_realizable(net, &FotSpec::new(durations).unwrap()).map_err(|e| e.to_string())?;
            let mut expected = true;
            for (check, (leave, stay)) in rep.signals.iter().zip(&brute) {
                if let Some(c) = &check.leave {
                    ensure!(&c.failing == leave, "net {i} signal {}: leave failures differ", check.sigma);
                    expected &= leave.is_empty();
                }
                if let Some(c) = &check.stay {
                    ensure!(&c.failing == stay, "net {i} signal {}: stay failures differ", check.sigma);
                    expected &= stay.is_empty();
                }
            }
            ensure!(rep.realizable == expected, "net {i}: FOT verdict differs");
            fot_checks += 1;
        }
    }

    let mut tracks = 0;
    let mut witnesses = 0;
    for (i, net) in nets.iter().enumerate() {
        let max_len = (1..=16).take_while(|&l| net.n_inputs().pow(l as u32) <= 100_000).last().unwrap();
        for _ in 0..5 {
            let len = r.gen_range(1..=max_len.min(10));
            let theta0 = r.gen_range(1..=net.n_states());
            let reference: Vec<usize> = (0..len).map(|_| r.gen_range(1..=net.q())).collect();
            let rep = check_trackable(net, &TrackingProblem { theta0, reference: reference.clone() })
                .map_err(|e| e.to_string())?;
            let brute = brute_track(net, theta0, &reference, &budget).map_err(|e| e.to_string())?;
            ensure!(rep.trackable == brute.is_some(), "net {i}: tracking verdict differs for {reference:?}");
            if let Some(w) = &rep.witness {
                let mut theta = theta0;
                let mut replayed = Vec::with_capacity(w.len());
                for &g in w {
                    let (next, s) = net.step(g, theta).map_err(|e| e.to_string())?;
                    replayed.push(s);
                    theta = next;
                }
                ensure!(replayed == reference, "net {i}: witness replay {replayed:?} != {reference:?}");
                witnesses += 1;
            }
            tracks += 1;
        }
    }
    Ok(format!("{fot_checks} FOT checks, {tracks} tracking checks, {witnesses} witnesses replayed"))
}

fn run(label: &str, f: fn() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let took = start.elapsed();
    match outcome {
        Ok(detail) => {
            println!("[PASS] {label}: {detail} ({took:.2?})");
            true
        }
        Err(detail) => {
            println!("[FAIL] {label}: {detail} ({took:.2?})");
            false
        }
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 set reachability counts on the four-state example", example_set_reachability),
        ("2 worked example verdicts and sequence sets", example_verdicts),
        ("3 worked example merged matrices", example_structure),
        ("4 block criteria vs Kalman oracle", oracle_equivalence),
        ("5 STP identities", stp_identities),
        ("6 merged step vs two-system step", mergence_equivalence),
        ("7 realization vs exhaustive enumeration", realization_suite),
    ];
    let mut passed = 0;
    for (label, f) in criteria {
        passed += usize::from(run(label, f));
    }
    let all = passed == criteria.len();
    println!(
        "[{}] 8 criteria 1-7 together: {passed}/{} passed",
        if all { "PASS" } else { "FAIL" },
        criteria.len()
    );
    if !all {
        std::process::exit(1);
    }
}
