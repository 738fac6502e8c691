//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Runs without the libtest harness so the lines are always shown.

use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;

use leonard_lab::leonard::{
    candidate_orderings, d1_condition, d2_condition, d2_roots, is_dual_almost_bipartite,
    lstar_shift_square, lstar_shift_square_entries, verify_leonard_pair_square,
};
use leonard_lab::params::check_closed_forms;
use leonard_lab::racah::{
    build_racah_params, check_barred_recurrence, check_barred_representations, check_index_mapping,
    check_orthogonality_reindexing, check_racah_orthogonality, check_starred_products,
    check_table_permutation, check_unbarred_identities, eval_table_4f3, eval_table_varphi_sum,
    varphi_from_quotient,
};
use leonard_lab::rational::q;
use leonard_lab::repr::{
    check_degrees, check_difference_eq, check_orthogonality, eval_table_hypergeometric,
    eval_table_recurrence, matrix_l_u_basis, matrix_lstar_u_basis, matrix_lstar_ustar_basis,
};
use leonard_lab::sl2mod::{build_even_module, example_pair, verify_example_match, ModuleKind};
use leonard_lab::{build_params, DualHahnParams, Rational, RationalMatrix};

const D_MAX: usize = 12;

fn rs_grid() -> Vec<Rational> {
    vec![
        q(-3, 4),
        q(-1, 2),
        q(-1, 4),
        q(1, 4),
        q(1, 2),
        q(3, 4),
        q(1, 1),
        q(2, 1),
    ]
}

fn theorem_rs() -> Vec<Rational> {
    vec![q(-3, 4), q(-1, 2), q(-1, 4), q(1, 4), q(1, 2), q(3, 4)]
}

/// Every `(d, r, s)` with `d <= 12` and `r, s` from the main grid.
fn full_grid() -> Vec<DualHahnParams> {
    let mut out = Vec::new();
    for d in 0..=D_MAX {
        for r in rs_grid() {
            for s in rs_grid() {
                out.push((d, r.clone(), s));
            }
        }
    }
    out.into_par_iter()
        .map(|(d, r, s)| build_params(d, r, s).expect("grid inside the domain"))
        .collect()
}

fn half(x: Rational) -> Rational {
    x / Rational::from(2usize)
}

/// Failures are collected as descriptions of the offending points.
type Check = Result<(), String>;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

/// Runs `check` at every point in parallel; a point fails when the check
/// returns `false` or an error.
fn all_points<T, D, F>(items: &[T], describe: D, check: F) -> Check
where
    T: Sync,
    D: Fn(&T) -> String + Sync,
    F: Fn(&T) -> leonard_lab::Result<bool> + Sync,
{
    let failures: Vec<String> = items
        .par_iter()
        .filter_map(|item| match check(item) {
            Ok(true) => None,
            Ok(false) => Some(describe(item)),
            Err(e) => Some(format!("{}: {e}", describe(item))),
        })
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(format!(
            "{} failing point(s), first: {}",
            failures.len(),
            failures[0]
        ))
    }
}

fn tag(p: &DualHahnParams) -> String {
    format!("d={} r={} s={}", p.d, p.r, p.s)
}

fn tag_lambda((p, lambda): &(DualHahnParams, Rational)) -> String {
    format!("{} lambda={lambda}", tag(p))
}

fn tag_theorem((d, r): &(usize, Rational)) -> String {
    format!("d={d} r={r} s={}", -r)
}

fn closed_forms(grid: &[DualHahnParams]) -> Check {
    all_points(grid, tag, |p| Ok(check_closed_forms(p)))
}

fn dual_evaluation(grid: &[DualHahnParams]) -> Check {
    all_points(grid, tag, |p| {
        let hyper = eval_table_hypergeometric(p)?;
        Ok(hyper == eval_table_recurrence(p)? && check_degrees(p, &hyper)?)
    })
}

fn orthogonality(grid: &[DualHahnParams]) -> Check {
    all_points(grid, tag, |p| {
        let t = eval_table_hypergeometric(p)?;
        Ok(check_orthogonality(p, &t) && check_difference_eq(p, &t))
    })?;
    let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
    let t = eval_table_hypergeometric(&p).unwrap();
    let sum: Rational = (0..=2)
        .map(|h| t.get(2, h) * t.get(2, h) * &p.k_star[h])
        .sum();
    if sum != Rational::from(16usize) || &p.nu / &p.k[2] != sum {
        return Err(format!("worked instance gives {sum}, expected 16"));
    }
    Ok(())
}

fn square_entries(grid: &[DualHahnParams]) -> Check {
    let points: Vec<(DualHahnParams, Rational)> = grid
        .iter()
        .flat_map(|p| {
            [Rational::zero(), q(1, 2), q(-1, 2), p.canonical_lambda()]
                .into_iter()
                .map(move |lambda| (p.clone(), lambda))
        })
        .collect();
    all_points(&points, tag_lambda, |(p, lambda)| {
        let direct = lstar_shift_square(p, lambda);
        let sums_ok = direct.column_sums().iter().all(|c| *c == lambda.square());
        Ok(sums_ok && direct == lstar_shift_square_entries(p, lambda))
    })
}

fn theorem_points() -> Vec<(usize, Rational)> {
    (1..=D_MAX)
        .flat_map(|d| theorem_rs().into_iter().map(move |r| (d, r)))
        .collect()
}

fn main_theorem() -> Check {
    all_points(&theorem_points(), tag_theorem, |(d, r)| {
        let p = build_params(*d, r.clone(), -r)?;
        let report = verify_leonard_pair_square(&p, &p.canonical_lambda(), false);
        let first = candidate_orderings(*d)?.remove(0);
        Ok(report.verdict && report.witness == Some(first))
    })?;
    let perturbed: Vec<(usize, Rational)> = theorem_points()
        .into_iter()
        .filter(|(d, _)| (3..=10).contains(d))
        .collect();
    all_points(&perturbed, tag_theorem, |(d, r)| {
        let moved_s = build_params(*d, r.clone(), -r + q(1, 2))?;
        let s_verdict =
            verify_leonard_pair_square(&moved_s, &moved_s.canonical_lambda(), false).verdict;
        let p = build_params(*d, r.clone(), -r)?;
        let lambda_verdict =
            verify_leonard_pair_square(&p, &(p.canonical_lambda() + Rational::one()), false)
                .verdict;
        Ok(!s_verdict && !lambda_verdict)
    })
}

fn exhaustive_oracle() -> Check {
    let mut points = Vec::new();
    for d in 1..=7usize {
        for r in theorem_rs() {
            for s in [-&r, r.clone(), q(1, 2)] {
                let p = build_params(d, r.clone(), s).unwrap();
                let canonical = p.canonical_lambda();
                for lambda in [
                    canonical.clone(),
                    &canonical + Rational::one(),
                    Rational::zero(),
                    q(-1, 2),
                ] {
                    points.push((p.clone(), lambda));
                }
                if d == 2 {
                    for root in d2_roots(&p).unwrap() {
                        points.push((p.clone(), root));
                    }
                }
            }
        }
    }
    all_points(&points, tag_lambda, |(p, lambda)| {
        let report = verify_leonard_pair_square(p, lambda, true);
        Ok(report.exhaustive.is_some() && !report.is_inconsistent())
    })?;
    let hits = points
        .par_iter()
        .filter(|(p, l)| verify_leonard_pair_square(p, l, false).verdict)
        .count();
    if hits == 0 {
        return Err("no Leonard pairs among the tested points".into());
    }
    Ok(())
}

fn small_diameter_corollaries() -> Check {
    let mut points = Vec::new();
    for d in [1usize, 2] {
        for r in rs_grid() {
            for s in rs_grid() {
                let p = build_params(d, r.clone(), s).unwrap();
                let mut lambdas = vec![
                    q(-1, 2),
                    Rational::zero(),
                    q(1, 2),
                    q(-1, 1),
                    p.canonical_lambda(),
                ];
                if d == 2 {
                    lambdas.extend(d2_roots(&p).unwrap());
                }
                for lambda in lambdas {
                    points.push((p.clone(), lambda));
                }
            }
        }
    }
    all_points(&points, tag_lambda, |(p, lambda)| {
        let expected = if p.d == 1 {
            d1_condition(p, lambda)?
        } else {
            d2_condition(p, lambda)?
        };
        Ok(verify_leonard_pair_square(p, lambda, false).verdict == expected)
    })?;
    let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
    let roots = d2_roots(&p).unwrap();
    let expected = [q(-3, 4), q(-9, 8)];
    for (root, want) in roots.iter().zip(expected.iter()) {
        if root != want || !verify_leonard_pair_square(&p, root, false).verdict {
            return Err(format!("root {root} at (2, 1/2, -1/2)"));
        }
    }
    Ok(())
}

fn racah_identification() -> Check {
    all_points(&theorem_points(), tag_theorem, |(d, r)| {
        let qp = build_racah_params(*d, r.clone())?;
        let p = build_params(*d, r.clone(), -r)?;
        let u = eval_table_hypergeometric(&p)?;
        let v = eval_table_4f3(&qp)?;
        Ok(check_index_mapping(&p, &qp)?
            && check_unbarred_identities(&p, &qp)?
            && check_starred_products(&p, &qp)?
            && check_table_permutation(&u, &v)
            && eval_table_varphi_sum(&qp)? == v
            && varphi_from_quotient(&qp) == qp.bar_varphi
            && check_racah_orthogonality(&qp, &v)
            && check_orthogonality_reindexing(&p, &qp, &u, &v)?
            && check_barred_recurrence(&qp, &v)
            && check_barred_representations(&p, &qp)?)
    })
}

fn sl2_examples() -> Check {
    let points: Vec<(ModuleKind, usize)> = [ModuleKind::Zero, ModuleKind::One]
        .into_iter()
        .flat_map(|k| (1..=25).step_by(2).map(move |n| (k, n)))
        .collect();
    all_points(
        &points,
        |(kind, n)| format!("kind={} n={n}", kind.index()),
        |&(kind, n)| {
            let m = build_even_module(kind, n)?;
            Ok(verify_example_match(kind, n)?
                && m.check_weight_relations()
                && m.check_casimir()
                && m.check_shape())
        },
    )?;
    let (tri, diag) = example_pair(ModuleKind::Zero, 3).map_err(|e| e.to_string())?;
    let want_tri =
        RationalMatrix::from_rows(vec![vec![q(1, 2), q(1, 2)], vec![q(3, 2), q(3, 2)]]).unwrap();
    let want_diag = RationalMatrix::diagonal(&[q(0, 1), q(1, 1)]);
    let p = build_params(1, q(-1, 2), q(1, 2)).unwrap();
    if tri != want_tri
        || diag != want_diag
        || matrix_l_u_basis(&p) != want_tri
        || matrix_lstar_u_basis(&p) != want_diag
    {
        return Err("n = 3 kind 0 matrices differ".into());
    }
    Ok(())
}

fn dual_almost_bipartite() -> Check {
    all_points(&theorem_points(), tag_theorem, |(d, r)| {
        let p = build_params(*d, r.clone(), -r)?;
        let lambda = p.canonical_lambda();
        let m = matrix_lstar_ustar_basis(&p).shift(&lambda);
        let last = half(r * Rational::from(d + 1));
        Ok((0..*d).all(|i| m[(i, i)].is_zero())
            && m[(*d, *d)] == last
            && is_dual_almost_bipartite(&p, &lambda))
    })
}

fn main() -> ExitCode {
    let grid = full_grid();
    let criteria: Vec<Criterion> = vec![
        (
            "closed-form consistency of k, k*, nu",
            Box::new(|| closed_forms(&grid)),
        ),
        (
            "3F2 table equals recurrence table; degrees",
            Box::new(|| dual_evaluation(&grid)),
        ),
        (
            "orthogonality and difference equations",
            Box::new(|| orthogonality(&grid)),
        ),
        (
            "square entries and column sums",
            Box::new(|| square_entries(&grid)),
        ),
        ("main theorem forward and converse", Box::new(main_theorem)),
        (
            "exhaustive permutation oracle agrees",
            Box::new(exhaustive_oracle),
        ),
        (
            "d = 1 and d = 2 corollaries",
            Box::new(small_diameter_corollaries),
        ),
        ("Racah identification", Box::new(racah_identification)),
        ("sl2 examples", Box::new(sl2_examples)),
        ("dual almost bipartite", Box::new(dual_almost_bipartite)),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS criterion {}: {name} ({secs:.2}s)", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.2}s): {why}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
