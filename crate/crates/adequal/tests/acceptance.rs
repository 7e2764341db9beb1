//! Acceptance gate: twelve numbered criteria, one test and one printed
//! pass/fail line each. Run with `--nocapture` to see the lines for passing
//! criteria too. Randomized criteria use a fixed seed and pinned sample
//! counts so every run checks the same instances.

use adequal::cubic::{
    classify, discriminant_value, sign_product_at_critical, solve_cubic, vieta_expand,
    Classification, Cubic, CubicSolution, DepressedCubic,
};
use adequal::monotonicity::{monotonicity_intervals, Direction, IntervalEndpoint};
use adequal::quotient::{fermat_derivative, fermat_quotient};
use adequal::sturm::{isolate_real_roots, sturm_count, ExtendedRational, RootValue};
use adequal::{cli, Polynomial, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x0dd_c0ffee;

fn report(number: u32, description: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("criterion {number:02}: PASS - {description}"),
        Err(why) => println!("criterion {number:02}: FAIL - {description} ({why})"),
    }
    if let Err(why) = outcome {
        panic!("criterion {number:02} failed: {why}");
    }
}

fn ensure(condition: bool, why: &str) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(why.to_string())
    }
}

fn rand_rational(rng: &mut ChaCha8Rng, range: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(-range..=range), rng.gen_range(1..=max_den))
}

fn rand_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Polynomial {
    loop {
        let len = rng.gen_range(2..=max_deg + 1);
        let coeffs: Vec<Rational> = (0..len).map(|_| rand_rational(rng, 50, 9)).collect();
        let f = Polynomial::from_coeffs(coeffs);
        if f.degree().unwrap_or(0) >= 1 {
            return f;
        }
    }
}

fn whole_line_count(f: &Polynomial) -> usize {
    sturm_count(f, &ExtendedRational::NegInfinity, &ExtendedRational::PosInfinity).unwrap()
}

#[test]
fn c01_cubic_decomposition_is_bit_exact() {
    let run = || -> Result<(), String> {
        let (_, text) = cli::cmd_monotone("t^3 - 3*t", 1e-12, 64).map_err(|e| e.to_string())?;
        ensure(
            text == "(-inf,-1] increasing; [-1,1] decreasing; [1,+inf) increasing",
            &format!("got {text:?}"),
        )?;
        let d = monotonicity_intervals(&adequal::parse_polynomial("t^3 - 3*t").unwrap(), 1e-12)
            .map_err(|e| e.to_string())?;
        ensure(d.segments.len() == 3, "expected three segments")?;
        let bounds = d.boundaries();
        ensure(
            *bounds[0] == IntervalEndpoint::Exact(Rational::from_integer(-1))
                && *bounds[1] == IntervalEndpoint::Exact(Rational::from_integer(1)),
            "boundaries must be exact -1 and 1",
        )?;
        let dirs: Vec<Direction> = d.segments.iter().map(|s| s.direction).collect();
        ensure(
            dirs == [
                Direction::StrictlyIncreasing,
                Direction::StrictlyDecreasing,
                Direction::StrictlyIncreasing,
            ],
            "directions must alternate up, down, up",
        )
    };
    report(
        1,
        "t^3 - 3*t decomposes into (-inf,-1] / [-1,1] / [1,+inf) exactly",
        run(),
    );
}

#[test]
fn c02_quotient_formula_reproduction() {
    let run = || -> Result<(), String> {
        let f = Polynomial::from_ints(&[0, -3, 0, 1]);
        let phi = fermat_quotient(&f).map_err(|e| e.to_string())?;
        ensure(phi.term_count() == 4, "expected four terms")?;
        let one = Rational::one();
        ensure(
            phi.coeff(2, 0) == one
                && phi.coeff(1, 1) == one
                && phi.coeff(0, 2) == one
                && phi.coeff(0, 0) == Rational::from_integer(-3),
            "coefficients must be t1^2 + t1*t2 + t2^2 - 3",
        )
    };
    report(
        2,
        "difference quotient of t^3 - 3*t is t1^2 + t1*t2 + t2^2 - 3 coefficient-exactly",
        run(),
    );
}

#[test]
fn c03_critical_product_identity() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..1000 {
            let c = rand_rational(&mut rng, 10, 10);
            let dep = DepressedCubic::new(Rational::from_integer(-3), c.clone(), Rational::zero());
            let product = sign_product_at_critical(&dep).map_err(|e| e.to_string())?;
            let expected = &c.pow(2) - &Rational::from_integer(4);
            ensure(product == expected, &format!("product mismatch at c = {c}"))?;
            ensure(
                &product * &Rational::from_integer(27) == discriminant_value(&dep),
                &format!("27 * product != D at c = {c}"),
            )?;
        }
        Ok(())
    };
    report(
        3,
        "f(-1)f(1) = c^2 - 4 = D/27 for (p, q) = (-3, c), 1000 exact instances",
        run(),
    );
}

#[test]
fn c04_planted_triples_are_recovered() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
        let slack = Rational::from_f64(1e-9).unwrap();
        for _ in 0..1000 {
            let x = rand_rational(&mut rng, 10, 10);
            let y = rand_rational(&mut rng, 10, 10);
            let z = rand_rational(&mut rng, 10, 10);
            let cub = vieta_expand(&x, &y, &z);
            let class = classify(&cub);
            ensure(
                !class.discriminant().is_positive(),
                &format!("D > 0 for planted ({x}, {y}, {z})"),
            )?;
            let triple = match solve_cubic(&cub, 1e-12).map_err(|e| e.to_string())? {
                CubicSolution::Triple(t) => t,
                CubicSolution::NoRealTriple { .. } => {
                    return Err(format!("no triple for planted ({x}, {y}, {z})"));
                }
            };
            let mut planted = [x.clone(), y.clone(), z.clone()];
            planted.sort();
            for (found, want) in triple.roots.iter().zip(&planted) {
                match found {
                    RootValue::Exact(v) => {
                        ensure(v == want, &format!("exact root {v} != planted {want}"))?;
                    }
                    RootValue::Approx { .. } => {
                        let err = (&found.estimate() - want).abs();
                        ensure(err <= slack, &format!("|{} - {want}| > 1e-9", found.estimate()))?;
                    }
                }
            }
        }
        Ok(())
    };
    report(
        4,
        "1000 planted rational triples give D <= 0 and are recovered sorted",
        run(),
    );
}

#[test]
fn c05_positive_discriminant_means_one_root() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
        let mut checked = 0;
        while checked < 1000 {
            let a = rand_rational(&mut rng, 10, 10);
            let b = rand_rational(&mut rng, 10, 10);
            let c = rand_rational(&mut rng, 10, 10);
            let cub = Cubic::new(a, b, c);
            let class = classify(&cub);
            if !class.discriminant().is_positive() {
                continue;
            }
            match solve_cubic(&cub, 1e-12).map_err(|e| e.to_string())? {
                CubicSolution::NoRealTriple { .. } => {}
                CubicSolution::Triple(_) => {
                    return Err(format!("triple returned although D > 0 for {cub}"));
                }
            }
            ensure(
                whole_line_count(&cub.polynomial()) == 1,
                &format!("Sturm count != 1 for {cub}"),
            )?;
            checked += 1;
        }
        Ok(())
    };
    report(
        5,
        "1000 cubics with D > 0: no real triple and exactly one real root",
        run(),
    );
}

#[test]
fn c06_degenerate_cases_are_exact() {
    let run = || -> Result<(), String> {
        let expect = |a: i64, b: i64, c: i64, want: [i64; 3]| -> Result<(), String> {
            let cub = Cubic::new(
                Rational::from_integer(a),
                Rational::from_integer(b),
                Rational::from_integer(c),
            );
            let triple = match solve_cubic(&cub, 1e-12).map_err(|e| e.to_string())? {
                CubicSolution::Triple(t) => t,
                CubicSolution::NoRealTriple { .. } => return Err(format!("no triple for {cub}")),
            };
            for (found, want) in triple.roots.iter().zip(want) {
                match found {
                    RootValue::Exact(v) => {
                        ensure(
                            *v == Rational::from_integer(want),
                            &format!("root {v} != {want}"),
                        )?;
                    }
                    RootValue::Approx { .. } => {
                        return Err(format!("root of {cub} not exact"));
                    }
                }
            }
            Ok(())
        };
        expect(0, -3, 2, [-1, -1, 2])?;
        expect(0, -3, -2, [-2, 1, 1])
    };
    report(
        6,
        "solve(0,-3,2) = (-1,-1,2) and solve(0,-3,-2) = (-2,1,1), bit-exact",
        run(),
    );
}

#[test]
fn c07_nonnegative_b_needs_b_and_c_zero() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
        for i in 0..200 {
            let (b, c) = match i % 10 {
                0 => (Rational::zero(), Rational::zero()),
                1 => (rand_rational(&mut rng, 10, 10).abs() + Rational::one(), Rational::zero()),
                2 => (
                    Rational::zero(),
                    rand_rational(&mut rng, 10, 10) + Rational::new(1, 17),
                ),
                _ => (
                    rand_rational(&mut rng, 10, 10).abs(),
                    rand_rational(&mut rng, 10, 10),
                ),
            };
            let cub = Cubic::new(Rational::zero(), b.clone(), c.clone());
            let got_triple = matches!(
                solve_cubic(&cub, 1e-12).map_err(|e| e.to_string())?,
                CubicSolution::Triple(_)
            );
            let expected = b.is_zero() && c.is_zero();
            ensure(
                got_triple == expected,
                &format!("b = {b}, c = {c}: triple = {got_triple}, expected {expected}"),
            )?;
        }
        Ok(())
    };
    report(
        7,
        "solve(0, b, c) with b >= 0 has a real triple iff b = c = 0, 200 instances",
        run(),
    );
}

#[test]
fn c08_diagonal_matches_formal_derivative() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
        for _ in 0..500 {
            let f = rand_poly(&mut rng, 8);
            let diag = fermat_derivative(&f).map_err(|e| e.to_string())?;
            ensure(
                diag == f.derivative(),
                &format!("diagonal != derivative for {f}"),
            )?;
        }
        Ok(())
    };
    report(
        8,
        "quotient diagonal equals the formal derivative on 500 random polynomials",
        run(),
    );
}

#[test]
fn c09_quartic_boundary_is_exact_one() {
    let run = || -> Result<(), String> {
        let (_, text) = cli::cmd_monotone("t^4 - 4*t", 1e-12, 64).map_err(|e| e.to_string())?;
        ensure(
            text == "(-inf,1] decreasing; [1,+inf) increasing",
            &format!("got {text:?}"),
        )?;
        let d = monotonicity_intervals(&adequal::parse_polynomial("t^4 - 4*t").unwrap(), 1e-12)
            .map_err(|e| e.to_string())?;
        let bounds = d.boundaries();
        ensure(bounds.len() == 1, "expected one boundary")?;
        ensure(
            *bounds[0] == IntervalEndpoint::Exact(Rational::one()),
            "boundary must be Exact(1)",
        )
    };
    report(
        9,
        "t^4 - 4*t: decreasing then increasing with exact boundary 1",
        run(),
    );
}

/// Plain double-precision bisection, sharing no code with the library.
fn oracle_bisect(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let eval = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
    assert!(eval(lo) < 0.0 && eval(hi) > 0.0);
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        if eval(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / 2.0
}

#[test]
fn c10_quartic_bracket_contains_oracle_value() {
    let run = || -> Result<(), String> {
        let tol = 1e-12;
        let f = adequal::parse_polynomial("t^4 - 12*t^3 + 22*t^2 - 24*t + 10").unwrap();
        let d = monotonicity_intervals(&f, tol).map_err(|e| e.to_string())?;
        let bounds = d.boundaries();
        ensure(bounds.len() == 1, "expected exactly one boundary")?;
        let (lo, hi) = match bounds[0] {
            IntervalEndpoint::Approx { lo, hi, .. } => (lo.clone(), hi.clone()),
            other => return Err(format!("expected a certified bracket, got {other:?}")),
        };
        ensure(
            &hi - &lo <= adequal::exact_tolerance(tol).unwrap(),
            "bracket wider than the tolerance",
        )?;
        ensure(
            lo > Rational::from_integer(7) && hi < Rational::from_integer(8),
            "bracket must lie inside (7, 8)",
        )?;
        // Independent check: refine the same crossing of the derivative
        // 4t^3 - 36t^2 + 44t - 24 in pure f64 arithmetic.
        let value = oracle_bisect(&[-24.0, 44.0, -36.0, 4.0], 7.0, 8.0);
        let value = Rational::from_f64(value).unwrap();
        ensure(
            lo <= value && value <= hi,
            &format!("oracle value {} outside [{lo}, {hi}]", value.to_f64()),
        )
    };
    report(
        10,
        "hard quartic: single boundary in (7,8), bracket within tolerance and containing the oracle value",
        run(),
    );
}

#[test]
fn c11_discriminant_scaling_covariance() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11);
        let mut checked = 0;
        while checked < 200 {
            let p = rand_rational(&mut rng, 10, 10);
            let q = rand_rational(&mut rng, 10, 10);
            let k = rand_rational(&mut rng, 10, 10);
            if k.is_zero() {
                continue;
            }
            let dep = DepressedCubic::new(p.clone(), q.clone(), Rational::zero());
            let scaled = DepressedCubic::new(&p / &k.pow(2), &q / &k.pow(3), Rational::zero());
            let want = &discriminant_value(&dep) / &k.pow(6);
            ensure(
                discriminant_value(&scaled) == want,
                &format!("D covariance fails at p = {p}, q = {q}, k = {k}"),
            )?;
            let base = classify(&Cubic::new(Rational::zero(), p, q));
            let after = classify(&Cubic::new(
                Rational::zero(),
                scaled.p.clone(),
                scaled.q.clone(),
            ));
            ensure(
                base.name() == after.name(),
                &format!("classification changed under scaling by {k}"),
            )?;
            checked += 1;
        }
        Ok(())
    };
    report(
        11,
        "D(p/k^2, q/k^3) = D/k^6 exactly and classification is scale-invariant, 200 instances",
        run(),
    );
}

#[test]
fn c12_classification_agrees_with_sturm_oracle() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 12);
        for i in 0..1000u32 {
            // Mix plain random coefficients with planted degenerate shapes
            // so every variant occurs.
            let cub = if i % 125 == 0 {
                let x = rand_rational(&mut rng, 10, 10);
                vieta_expand(&x, &x, &x)
            } else if i % 25 == 0 {
                let x = rand_rational(&mut rng, 10, 10);
                let z = rand_rational(&mut rng, 10, 10);
                vieta_expand(&x, &x, &z)
            } else if i % 5 == 0 {
                let x = rand_rational(&mut rng, 10, 10);
                let y = rand_rational(&mut rng, 10, 10);
                let z = rand_rational(&mut rng, 10, 10);
                vieta_expand(&x, &y, &z)
            } else {
                Cubic::new(
                    rand_rational(&mut rng, 10, 10),
                    rand_rational(&mut rng, 10, 10),
                    rand_rational(&mut rng, 10, 10),
                )
            };
            let class = classify(&cub);
            let expected_distinct = match class {
                Classification::TripleRoot { .. } => 1,
                Classification::DoubleAndSingle { .. } => 2,
                Classification::ThreeDistinct { .. } => 3,
                Classification::OneRealRoot { .. } => 1,
            };
            let distinct = whole_line_count(&cub.polynomial());
            ensure(
                distinct == expected_distinct,
                &format!("{}: Sturm found {distinct} roots, class {} expects {expected_distinct}", cub, class.name()),
            )?;
            let with_multiplicity: usize = isolate_real_roots(&cub.polynomial())
                .map_err(|e| e.to_string())?
                .iter()
                .map(|r| r.multiplicity)
                .sum();
            let expected_total = match class {
                Classification::OneRealRoot { .. } => 1,
                _ => 3,
            };
            ensure(
                with_multiplicity == expected_total,
                &format!("{cub}: multiplicities sum to {with_multiplicity}, expected {expected_total}"),
            )?;
        }
        Ok(())
    };
    report(
        12,
        "classification matches Sturm distinct-root counts and multiplicity totals, 1000 cubics",
        run(),
    );
}
