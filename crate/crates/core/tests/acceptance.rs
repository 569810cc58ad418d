//! Exit criteria, one PASS/FAIL line each. Built without the test harness so
//! the report shows up in plain `cargo test` output.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use turan_vdc::closed_forms::{solve_gamma, turan_value};
use turan_vdc::extremal::{build_extremal, verify_membership};
use turan_vdc::kernels::{fejer, fejer_closed};
use turan_vdc::lp::{delta_grid_lp, delta_periodic_lp, turan_relaxed_lp};
use turan_vdc::properties::{
    check_dilation, check_divisibility_bound, check_monotonicity, check_supermultiplicative,
    pairing_check,
};
use turan_vdc::{make_cutoff, Error, RationalCutoff, SupportSet};

fn report(id: u32, name: &str, failures: &[String]) -> bool {
    if failures.is_empty() {
        println!("[PASS] criterion {id}: {name}");
    } else {
        println!("[FAIL] criterion {id}: {name}");
        for f in failures {
            println!("       {f}");
        }
    }
    failures.is_empty()
}

/// Every cutoff with p <= 3 and q <= qmax that has an explicit extremal polynomial.
fn admissible(qmax: usize) -> Vec<RationalCutoff> {
    let mut out = Vec::new();
    for p in 1..=3 {
        for q in 2 * p..=qmax {
            if let Ok(h) = make_cutoff(p, q) {
                out.push(h);
            }
        }
    }
    out
}

fn finite(v: impl IntoIterator<Item = usize>) -> SupportSet {
    SupportSet::finite(v).unwrap()
}

fn primes_below(n: usize) -> Vec<usize> {
    (2..n)
        .filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0))
        .collect()
}

fn criterion_01_closed_form_cross_check() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for q in 2..=50 {
        let v = turan_value(make_cutoff(1, q).unwrap()).unwrap();
        let exact = 1.0 / q as f64;
        if (v - exact).abs() > 1e-15 * exact {
            failures.push(format!("A(1/{q}) = {v} != {exact}"));
        }
    }
    // 2/3 violates 2p <= q and is rejected at construction.
    if make_cutoff(2, 3) != Err(Error::OutOfRange { p: 2, q: 3 }) {
        failures.push("2/3 was not rejected".into());
    }
    let cases = (5..=51)
        .step_by(2)
        .map(|q| (2, q))
        .chain((7..=50).filter(|q| q % 3 != 0).map(|q| (3, q)));
    for (p, q) in cases {
        let h = make_cutoff(p, q).unwrap();
        let a = turan_value(h).unwrap();
        let g = solve_gamma(h).unwrap();
        let via_gamma = 1.0 / (q as f64 * g.gammas[0]);
        if (a - via_gamma).abs() > 1e-12 {
            failures.push(format!("{p}/{q}: A = {a}, 1/(q g0) = {via_gamma}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        failures.push(format!("took {elapsed:?}"));
    }
    report(1, "A(p/q) closed forms agree with 1/(q g0)", &failures)
}

fn criterion_02_residue_block_example() -> bool {
    let mut failures = Vec::new();
    for q in [2usize, 3, 4, 5, 8] {
        let v = delta_grid_lp(&finite(1..q), 2048).unwrap().value;
        if (v - 1.0 / q as f64).abs() > 2e-3 {
            failures.push(format!("delta({{1..{}}}) = {v}", q - 1));
        }
    }
    report(2, "delta({1..q-1}) = 1/q within 2e-3", &failures)
}

fn criterion_03_two_three_example() -> bool {
    let v = delta_grid_lp(&finite([2, 3]), 2048).unwrap().value;
    let c = (PI / 5.0).cos();
    let mut failures = Vec::new();
    if (v - 0.44721).abs() > 2e-3 || (v - c / (1.0 + c)).abs() > 2e-3 {
        failures.push(format!("delta({{2,3}}) = {v}"));
    }
    report(3, "delta({2,3}) = 0.44721 within 2e-3", &failures)
}

fn criterion_04_extremal_membership() -> bool {
    let mut failures = Vec::new();
    for h in admissible(30) {
        let t = build_extremal(h).unwrap();
        let r = verify_membership(&t, &SupportSet::block(h), 4096);
        let a = turan_value(h).unwrap();
        if !r.passes()
            || r.certified_min < -1e-9
            || (r.t_at_zero - 1.0).abs() > 1e-10
            || (r.t0 - a).abs() > 1e-12
        {
            failures.push(format!("{h}: {r:?}, A = {a}"));
        }
    }
    report(
        4,
        "T* is a member of T(K0_{p,q}) with t0 = A(p/q)",
        &failures,
    )
}

fn criterion_05_sandwich() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for h in admissible(30) {
        let a = turan_value(h).unwrap();
        let t0 = build_extremal(h).unwrap().t0();
        let values: Vec<f64> = (0..=2)
            .map(|n| delta_periodic_lp(h, n, 4096).unwrap().value)
            .collect();
        if values.windows(2).any(|w| w[1] > w[0] + 1e-9) {
            failures.push(format!("{h}: not nonincreasing in periods: {values:?}"));
        }
        if values.iter().any(|&v| v < a - 2e-3 || v > t0 + 1e-9) {
            failures.push(format!(
                "{h}: {values:?} outside [{}, {}]",
                a - 2e-3,
                t0 + 1e-9
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}"));
    }
    report(
        5,
        "A - 2e-3 <= delta_LP(K_{p,q} truncated) <= t0(T*)",
        &failures,
    )
}

fn criterion_06_fejer_identity() -> bool {
    let mut failures = Vec::new();
    for q in 2..=64 {
        let f = fejer(q);
        let n = 10 * q;
        let worst = (0..=n)
            .map(|j| j as f64 / n as f64)
            .map(|x| (f.eval(x) - fejer_closed(q, x)).abs())
            .fold(0.0, f64::max);
        if worst > 1e-10 {
            failures.push(format!("q = {q}: deviation {worst:e}"));
        }
        for v in 1..q {
            let z = fejer_closed(q, v as f64 / q as f64);
            if z > 1e-18 {
                failures.push(format!("F_{q}({v}/{q}) = {z:e}"));
            }
        }
    }
    report(
        6,
        "Fejér coefficient form equals closed form; zeros at v/q",
        &failures,
    )
}

fn criterion_07_properties() -> bool {
    let mut failures = Vec::new();
    let mut expect = |label: &str, pass: bool, values: &[f64]| {
        if !pass {
            failures.push(format!("{label}: {values:?}"));
        }
    };

    for (k1, k2) in [
        (vec![2, 3], vec![1, 2, 3]),
        (vec![2, 3], vec![2, 3]),
        (vec![3], vec![2, 3]),
    ] {
        let r = check_monotonicity(&finite(k1), &finite(k2), 1024).unwrap();
        expect("monotonicity", r.pass, &r.values);
    }
    for (k, m) in [(vec![2, 3], 3), (vec![1], 5), (vec![2, 3], 1)] {
        let r = check_dilation(&finite(k), m, 1024).unwrap();
        expect("dilation", r.pass, &r.values);
    }
    let squares: Vec<usize> = (1..=15).map(|n| n * n + 1).collect();
    for (k, m, grid) in [
        (vec![1, 2, 4, 5], 3, 1024),
        (squares.clone(), 3, 2048),
        (vec![6, 9], 3, 1024),
    ] {
        let r = check_divisibility_bound(&finite(k), m, grid).unwrap();
        expect("divisibility", r.pass, &r.values);
    }
    for (k1, k2) in [
        (vec![1], vec![2]),
        (vec![2, 5], vec![2, 5]),
        (vec![2, 3], vec![1]),
    ] {
        let r = check_supermultiplicative(&finite(k1), &finite(k2), 1024).unwrap();
        expect("supermultiplicativity", r.pass, &r.values);
    }

    let q_prefix = delta_grid_lp(&finite(squares), 2048).unwrap().value;
    expect(
        "delta(Q prefix) >= 1/3 - 2e-3",
        q_prefix >= 1.0 / 3.0 - 2e-3,
        &[q_prefix],
    );
    let p_prefix = delta_grid_lp(&finite(primes_below(50)), 2048)
        .unwrap()
        .value;
    expect(
        "delta(P prefix) >= 1/4 - 2e-3",
        p_prefix >= 0.25 - 2e-3,
        &[p_prefix],
    );

    report(7, "properties 1-4 and the Q, P lower bounds", &failures)
}

fn criterion_08_pairing_identity() -> bool {
    let mut failures = Vec::new();
    for h in admissible(30) {
        let t = build_extremal(h).unwrap();
        let p = pairing_check(&t, &fejer(h.q()), h).unwrap();
        if (p.lhs - p.rhs).abs() > 1e-9 || p.a0 > p.lhs + 1e-9 {
            failures.push(format!("{h}: {p:?}"));
        }
    }
    report(8, "T0 = sum a_n T(n/q) and a0 <= T0", &failures)
}

fn criterion_09_turan_estimator() -> bool {
    let mut failures = Vec::new();
    let third = make_cutoff(1, 3).unwrap();
    let two_fifths = make_cutoff(2, 5).unwrap();
    for (h, degree) in [(third, 60), (two_fifths, 80)] {
        let v = turan_relaxed_lp(h, degree, 512, 1e-3).unwrap().value;
        let a = turan_value(h).unwrap();
        if (v - a).abs() > 5e-3 {
            failures.push(format!("{h}: estimate {v}, closed form {a}"));
        }
        let by_eps: Vec<f64> = [5e-4, 1e-3, 2e-3, 5e-3]
            .iter()
            .map(|&eps| turan_relaxed_lp(h, degree, 512, eps).unwrap().value)
            .collect();
        if by_eps.windows(2).any(|w| w[1] < w[0] - 1e-9) {
            failures.push(format!("{h}: not nondecreasing in eps: {by_eps:?}"));
        }
    }
    report(
        9,
        "relaxed Turán LP within 5e-3 and monotone in eps",
        &failures,
    )
}

fn criterion_10_determinism() -> bool {
    let dir = std::env::temp_dir().join(format!("turan-vdc-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let commands: Vec<Vec<String>> = [
        "turan --p 1 --q 7",
        "turan --p 3 --q 10",
        "delta --set 2,3 --grid 2048 --certify",
        "delta --pq 1,4 --periods 1 --grid 1024",
        "table --p 3 --qmin 7 --qmax 20 --with-lp --format json",
        "estimate --p 2 --q 5 --degree 80",
        "check --property super --k1 1 --k2 2 --grid 1024",
        "check --property vdc --set 2,3",
    ]
    .iter()
    .map(|c| c.split(' ').map(String::from).collect())
    .chain((0..2).map(|i| {
        let out = dir.join(format!("t{i}.json")).display().to_string();
        vec!["extremal", "--p", "3", "--q", "11", "--out", &out]
            .into_iter()
            .map(String::from)
            .collect()
    }))
    .collect();

    let run = |args: &[String]| {
        Command::new(env!("CARGO_BIN_EXE_turan-vdc"))
            .args(args)
            .output()
            .unwrap()
    };
    let mut failures = Vec::new();
    for (i, args) in commands.iter().enumerate() {
        let (a, b) = (run(args), run(args));
        if a.stdout != b.stdout || a.status != b.status || a.stdout.is_empty() {
            failures.push(format!("command {i} {args:?} differs between runs"));
        }
    }
    let (f0, f1) = (
        std::fs::read(dir.join("t0.json")).unwrap(),
        std::fs::read(dir.join("t1.json")).unwrap(),
    );
    if f0 != f1 {
        failures.push("extremal --out files differ".into());
    }
    std::fs::remove_dir_all(&dir).ok();
    report(10, "identical flags give byte-identical output", &failures)
}

fn main() {
    let criteria: [fn() -> bool; 10] = [
        criterion_01_closed_form_cross_check,
        criterion_02_residue_block_example,
        criterion_03_two_three_example,
        criterion_04_extremal_membership,
        criterion_05_sandwich,
        criterion_06_fejer_identity,
        criterion_07_properties,
        criterion_08_pairing_identity,
        criterion_09_turan_estimator,
        criterion_10_determinism,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
