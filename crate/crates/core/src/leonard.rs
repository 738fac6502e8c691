//! Leonard-pair tests for `L, (L* + lambda)^2`.
//!
//! Condition (i) of a Leonard pair asks for *some* basis in which `L` is
//! diagonal and `(L* + lambda)^2` is irreducible tridiagonal. The `theta_i`
//! are distinct, so every eigenvector of `L` is a multiple of some `u*_i`,
//! and any such basis is a rescaled reordering of `{u*_i}`. Rescaling by a
//! diagonal matrix `S` maps `M` to `S^{-1} M S`, which keeps every zero entry
//! zero and every nonzero entry nonzero. Irreducible tridiagonality depends
//! only on that pattern, so it suffices to scan reorderings of `{u*_i}`.

use std::collections::HashSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::params::{build_params, DualHahnParams};
use crate::rational::Rational;
use crate::repr::{
    matrix_l_u_basis, matrix_l_ustar_basis, matrix_lstar_u_basis, matrix_lstar_ustar_basis,
};

/// Above this diameter the permutation scan is skipped.
pub const EXHAUSTIVE_MAX_D: usize = 8;

/// An ordering `ubar*_i = u*_{perm[i]}` of the `u*` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BasisOrdering {
    perm: Vec<usize>,
}

impl BasisOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &x in &perm {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        Ok(BasisOrdering { perm })
    }

    pub fn identity(n: usize) -> Self {
        BasisOrdering {
            perm: (0..n).collect(),
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }
}

pub fn is_irreducible_tridiagonal(m: &RationalMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::InvalidArgument(format!(
            "{}x{} matrix is not square",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    Ok((0..n).all(|i| {
        (0..n).all(|j| match i.abs_diff(j) {
            0 => true,
            1 => !m[(i, j)].is_zero(),
            _ => m[(i, j)].is_zero(),
        })
    }))
}

/// Same test on a zero/nonzero pattern, viewed through `perm`.
fn pattern_is_irreducible_tridiagonal(nonzero: &[Vec<bool>], perm: &[usize]) -> bool {
    let n = perm.len();
    (0..n).all(|i| {
        (0..n).all(|j| match i.abs_diff(j) {
            0 => true,
            1 => nonzero[perm[i]][perm[j]],
            _ => !nonzero[perm[i]][perm[j]],
        })
    })
}

/// `([L*]_{u*} + lambda I)^2` by explicit multiplication.
pub fn lstar_shift_square(p: &DualHahnParams, lambda: &Rational) -> RationalMatrix {
    let shifted = matrix_lstar_ustar_basis(p).shift(lambda);
    &shifted * &shifted
}

/// The same matrix from the five-case entry formula, with `b*_{-1}` and
/// `c*_{d+1}` taken as zero.
pub fn lstar_shift_square_entries(p: &DualHahnParams, lambda: &Rational) -> RationalMatrix {
    let d = p.d;
    let zero = Rational::zero();
    let b = |i: isize| -> &Rational {
        if (0..=d as isize).contains(&i) {
            &p.b_star[i as usize]
        } else {
            &zero
        }
    };
    let c = |i: isize| -> &Rational {
        if (0..=d as isize).contains(&i) {
            &p.c_star[i as usize]
        } else {
            &zero
        }
    };
    let a = |i: isize| &p.a_star[i as usize];
    let two_lambda = lambda * &Rational::from(2usize);
    RationalMatrix::from_fn(d + 1, d + 1, |i, j| {
        let (i, j) = (i as isize, j as isize);
        match j - i {
            2 => c(i + 1) * c(i + 2),
            1 => c(i + 1) * (&two_lambda + a(i) + a(i + 1)),
            0 => b(i) * c(i + 1) + b(i - 1) * c(i) + (lambda + a(i)).square(),
            -1 => b(i - 1) * (&two_lambda + a(i) + a(i - 1)),
            -2 => b(i - 1) * b(i - 2),
            _ => Rational::zero(),
        }
    })
}

/// The four reorderings under which `(L* + lambda)^2` can be irreducible
/// tridiagonal, in order: evens up then odds down; odds up then evens down;
/// and the two mirror images starting from `u*_d`.
pub fn candidate_orderings(d: usize) -> Result<Vec<BasisOrdering>> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "candidate orderings need d >= 1".into(),
        ));
    }
    let floor_half = d / 2;
    let ceil_half = d.div_ceil(2);
    let first = (0..=d)
        .map(|i| {
            if i <= floor_half {
                2 * i
            } else {
                2 * (d - i) + 1
            }
        })
        .collect();
    let second = (0..=d)
        .map(|i| {
            if i < ceil_half {
                2 * i + 1
            } else {
                2 * (d - i)
            }
        })
        .collect();
    let third = (0..=d)
        .map(|i| {
            if i <= floor_half {
                d - 2 * i
            } else {
                2 * i - d - 1
            }
        })
        .collect();
    let fourth = (0..=d)
        .map(|i| {
            if i < ceil_half {
                d - 2 * i - 1
            } else {
                2 * i - d
            }
        })
        .collect();
    [first, second, third, fourth]
        .into_iter()
        .map(BasisOrdering::new)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExhaustiveScan {
    pub permutations_scanned: usize,
    pub witnesses: Vec<BasisOrdering>,
    /// Every witness found by brute force is one of the candidate orderings.
    pub witnesses_are_candidates: bool,
    /// Brute-force verdict equals the candidate-ordering verdict.
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LeonardPairReport {
    pub verdict: bool,
    pub witness: Option<BasisOrdering>,
    pub condition_trace: Vec<ConditionCheck>,
    pub lambda: Rational,
    pub exhaustive: Option<ExhaustiveScan>,
}

impl LeonardPairReport {
    /// The brute-force scan ran and contradicted the candidate check.
    pub fn is_inconsistent(&self) -> bool {
        self.exhaustive
            .as_ref()
            .is_some_and(|e| !e.agrees || !e.witnesses_are_candidates)
    }

    pub fn first_failed(&self) -> Option<&'static str> {
        self.condition_trace
            .iter()
            .find(|c| !c.holds)
            .map(|c| c.name)
    }
}

fn pairwise_distinct(xs: &[Rational]) -> bool {
    xs.iter().collect::<HashSet<_>>().len() == xs.len()
}

/// Decides whether `L, (L* + lambda)^2` is a Leonard pair.
///
/// Condition (ii) is checked in the `u` basis: `[L]` irreducible
/// tridiagonal and `[(L* + lambda)^2]` diagonal with distinct entries
/// `(i + lambda)^2`. Condition (i) is checked over the four candidate
/// orderings; with `exhaustive` and `d <= EXHAUSTIVE_MAX_D` every
/// permutation is also scanned and compared.
pub fn verify_leonard_pair_square(
    p: &DualHahnParams,
    lambda: &Rational,
    exhaustive: bool,
) -> LeonardPairReport {
    let d = p.d;
    let mut trace = Vec::new();
    let mut push = |name, holds| trace.push(ConditionCheck { name, holds });

    let l_u = matrix_l_u_basis(p);
    push(
        "u_basis_L_irreducible_tridiagonal",
        is_irreducible_tridiagonal(&l_u).unwrap_or(false),
    );
    let shifted_u = matrix_lstar_u_basis(p).shift(lambda);
    let square_u = &shifted_u * &shifted_u;
    push("u_basis_square_diagonal", square_u.is_diagonal());
    push(
        "u_basis_square_simple",
        pairwise_distinct(&square_u.diagonal_entries()),
    );
    let l_ustar = matrix_l_ustar_basis(p);
    push(
        "ustar_basis_L_diagonal_simple",
        l_ustar.is_diagonal() && pairwise_distinct(&l_ustar.diagonal_entries()),
    );

    let square = lstar_shift_square(p, lambda);
    let candidates = if d == 0 {
        vec![BasisOrdering::identity(1)]
    } else {
        candidate_orderings(d).expect("d >= 1")
    };
    let witness = candidates.iter().find(|o| {
        square
            .permuted(o.as_slice())
            .and_then(|m| is_irreducible_tridiagonal(&m))
            .unwrap_or(false)
    });
    push(
        "candidate_ordering_irreducible_tridiagonal",
        witness.is_some(),
    );

    let verdict = trace.iter().all(|c| c.holds);
    let exhaustive_scan = (exhaustive && d <= EXHAUSTIVE_MAX_D).then(|| {
        let nonzero: Vec<Vec<bool>> = square
            .to_rows()
            .iter()
            .map(|row| row.iter().map(|x| !x.is_zero()).collect())
            .collect();
        let mut scanned = 0usize;
        let mut witnesses = Vec::new();
        for perm in (0..=d).permutations(d + 1) {
            scanned += 1;
            if pattern_is_irreducible_tridiagonal(&nonzero, &perm) {
                witnesses.push(BasisOrdering { perm });
            }
        }
        let witnesses_are_candidates = witnesses.iter().all(|w| candidates.contains(w));
        let agrees = witnesses.is_empty() != witness.is_some();
        ExhaustiveScan {
            permutations_scanned: scanned,
            witnesses,
            witnesses_are_candidates,
            agrees,
        }
    });

    LeonardPairReport {
        verdict,
        witness: if verdict { witness.cloned() } else { None },
        condition_trace: trace,
        lambda: lambda.clone(),
        exhaustive: exhaustive_scan,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremConditions {
    pub r_nonzero: bool,
    pub r_plus_s_zero: bool,
    pub two_lambda_eq_r_minus_d: bool,
}

impl TheoremConditions {
    pub fn all(&self) -> bool {
        self.r_nonzero && self.r_plus_s_zero && self.two_lambda_eq_r_minus_d
    }
}

/// `r != 0`, `r + s = 0`, `2 lambda = r - d`.
pub fn theorem_conditions(p: &DualHahnParams, lambda: &Rational) -> TheoremConditions {
    TheoremConditions {
        r_nonzero: !p.r.is_zero(),
        r_plus_s_zero: (&p.r + &p.s).is_zero(),
        two_lambda_eq_r_minus_d: lambda * &Rational::from(2usize) == &p.r - &Rational::from(p.d),
    }
}

/// Closed condition for `d = 1`: `2 lambda != -1`.
pub fn d1_condition(p: &DualHahnParams, lambda: &Rational) -> Result<bool> {
    if p.d != 1 {
        return Err(Error::InvalidArgument(format!(
            "d1_condition needs d = 1, got {}",
            p.d
        )));
    }
    Ok(lambda * &Rational::from(2usize) != -1)
}

/// Closed condition for `d = 2`: `r != s` and
/// `2(lambda + 1)` is `(r - s)/(r + s + 2)` or `(s - r)/(r + s + 4)`.
pub fn d2_condition(p: &DualHahnParams, lambda: &Rational) -> Result<bool> {
    if p.d != 2 {
        return Err(Error::InvalidArgument(format!(
            "d2_condition needs d = 2, got {}",
            p.d
        )));
    }
    if p.r == p.s {
        return Ok(false);
    }
    let target = (lambda + &Rational::one()) * Rational::from(2usize);
    let sum = &p.r + &p.s;
    let first = (&p.r - &p.s) / (&sum + &Rational::from(2usize));
    let second = (&p.s - &p.r) / (&sum + &Rational::from(4usize));
    Ok(target == first || target == second)
}

/// The two `lambda` values singled out by [`d2_condition`].
pub fn d2_roots(p: &DualHahnParams) -> Result<[Rational; 2]> {
    if p.d != 2 {
        return Err(Error::InvalidArgument(format!(
            "d2_roots needs d = 2, got {}",
            p.d
        )));
    }
    let sum = &p.r + &p.s;
    let half = Rational::new(1, 2);
    let one = Rational::one();
    let first = (&p.r - &p.s) / (&sum + &Rational::from(2usize)) * &half - &one;
    let second = (&p.s - &p.r) / (&sum + &Rational::from(4usize)) * &half - &one;
    Ok([first, second])
}

/// `[L*]_{u*} + lambda I` is irreducible tridiagonal with every diagonal
/// entry zero except a nonzero last one.
pub fn is_dual_almost_bipartite(p: &DualHahnParams, lambda: &Rational) -> bool {
    let m = matrix_lstar_ustar_basis(p).shift(lambda);
    let d = p.d;
    is_irreducible_tridiagonal(&m).unwrap_or(false)
        && (0..d).all(|i| m[(i, i)].is_zero())
        && !m[(d, d)].is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SValues {
    List(Vec<Rational>),
    /// `s = -r` at every point.
    NegateR,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaMode {
    /// `lambda = (r - d) / 2` at every point.
    Canonical,
    List(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchGrid {
    pub ds: Vec<usize>,
    pub rs: Vec<Rational>,
    pub ss: SValues,
    pub lambdas: LambdaMode,
    pub exhaustive: bool,
}

impl SearchGrid {
    /// Every `(d, r, s, lambda)` tuple, sorted. Points with `r` or `s`
    /// outside `(-1, inf)` are rejected.
    pub fn points(&self) -> Result<Vec<(usize, Rational, Rational, Rational)>> {
        let mut out = Vec::new();
        for &d in &self.ds {
            for r in &self.rs {
                let ss = match &self.ss {
                    SValues::List(v) => v.clone(),
                    SValues::NegateR => vec![-r],
                };
                for s in ss {
                    if *r <= -1 || s <= -1 {
                        return Err(Error::ParameterDomain(format!(
                            "grid point r = {r}, s = {s} leaves (-1, inf)"
                        )));
                    }
                    let lambdas = match &self.lambdas {
                        LambdaMode::Canonical => {
                            vec![(r - &Rational::from(d)) / Rational::from(2usize)]
                        }
                        LambdaMode::List(v) => v.clone(),
                    };
                    for lambda in lambdas {
                        out.push((d, r.clone(), s.clone(), lambda));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchRecord {
    pub d: usize,
    pub r: Rational,
    pub s: Rational,
    pub lambda: Rational,
    pub verdict: bool,
    pub witness: Option<BasisOrdering>,
    /// The point satisfies all three theorem conditions.
    pub theorem_predicted: bool,
    pub report: LeonardPairReport,
}

/// Runs the pair check at every grid point, in parallel; output is sorted
/// by `(d, r, s, lambda)`.
pub fn scan_grid(grid: &SearchGrid) -> Result<Vec<SearchRecord>> {
    let points = grid.points()?;
    points
        .into_par_iter()
        .map(|(d, r, s, lambda)| {
            let p = build_params(d, r.clone(), s.clone())?;
            let report = verify_leonard_pair_square(&p, &lambda, grid.exhaustive);
            Ok(SearchRecord {
                d,
                theorem_predicted: theorem_conditions(&p, &lambda).all(),
                verdict: report.verdict,
                witness: report.witness.clone(),
                r,
                s,
                lambda,
                report,
            })
        })
        .collect()
}

/// Grid points where `L, (L* + lambda)^2` is a Leonard pair, i.e. where the
/// pair `L, L*` is square-preserving through its second member.
pub fn search_square_preserving(grid: &SearchGrid) -> Result<Vec<SearchRecord>> {
    Ok(scan_grid(grid)?.into_iter().filter(|r| r.verdict).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn perms(d: usize) -> Vec<Vec<usize>> {
        candidate_orderings(d)
            .unwrap()
            .into_iter()
            .map(|o| o.as_slice().to_vec())
            .collect()
    }

    #[test]
    fn irreducible_tridiagonal_cases() {
        let diag = RationalMatrix::diagonal(&[q(1, 1), q(2, 1), q(3, 1)]);
        assert!(!is_irreducible_tridiagonal(&diag).unwrap());
        let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
        assert!(is_irreducible_tridiagonal(&matrix_l_u_basis(&p)).unwrap());
        assert!(is_irreducible_tridiagonal(&RationalMatrix::diagonal(&[q(0, 1)])).unwrap());
        assert!(is_irreducible_tridiagonal(&RationalMatrix::zeros(2, 3)).is_err());
        let mut corner = matrix_l_u_basis(&p);
        corner[(0, 2)] = q(1, 1);
        assert!(!is_irreducible_tridiagonal(&corner).unwrap());
    }

    #[test]
    fn orderings() {
        assert_eq!(perms(4)[0], vec![0, 2, 4, 3, 1]);
        assert_eq!(perms(3)[0], vec![0, 2, 3, 1]);
        assert_eq!(
            perms(1),
            vec![vec![0, 1], vec![1, 0], vec![1, 0], vec![0, 1]]
        );
        assert_eq!(
            perms(4),
            vec![
                vec![0, 2, 4, 3, 1],
                vec![1, 3, 4, 2, 0],
                vec![4, 2, 0, 1, 3],
                vec![3, 1, 0, 2, 4],
            ]
        );
        assert!(candidate_orderings(0).is_err());
        assert!(BasisOrdering::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn square_entry_and_column_sums() {
        let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
        for lambda in [q(0, 1), q(1, 2), q(-1, 2), p.canonical_lambda()] {
            let m = lstar_shift_square(&p, &lambda);
            assert_eq!(m[(0, 2)], q(5, 8));
            assert_eq!(m, lstar_shift_square_entries(&p, &lambda));
            assert!(m.column_sums().iter().all(|x| *x == lambda.square()));
        }
        let p0 = build_params(0, q(1, 2), q(1, 3)).unwrap();
        let m = lstar_shift_square(&p0, &q(3, 7));
        assert_eq!(m, RationalMatrix::diagonal(&[q(9, 49)]));
    }

    #[test]
    fn theorem_instance_and_converse() {
        let p = build_params(3, q(1, 2), q(-1, 2)).unwrap();
        let lambda = q(-5, 4);
        assert_eq!(p.canonical_lambda(), lambda);
        let report = verify_leonard_pair_square(&p, &lambda, true);
        assert!(report.verdict);
        assert_eq!(report.witness.as_ref().unwrap().as_slice(), &[0, 2, 3, 1]);
        assert!(!report.is_inconsistent());
        let sums = crate::params::direct_astar_sums(&p);
        let two_lambda = &lambda * &q(2, 1);
        assert_eq!(&two_lambda + &sums[2], q(1, 1));
        assert!((&two_lambda + &sums[0]).is_zero() && (&two_lambda + &sums[1]).is_zero());

        let report = verify_leonard_pair_square(&p, &q(0, 1), true);
        assert!(!report.verdict);
        assert!(report.witness.is_none());
        assert_eq!(
            report.first_failed(),
            Some("candidate_ordering_irreducible_tridiagonal")
        );
        assert!(!report.is_inconsistent());
    }

    #[test]
    fn d1_half_shift_fails() {
        let p = build_params(1, q(1, 4), q(1, 4)).unwrap();
        assert_eq!(crate::params::direct_astar_sums(&p), vec![q(1, 1)]);
        let report = verify_leonard_pair_square(&p, &q(-1, 2), true);
        assert!(!report.verdict);
        assert!(!d1_condition(&p, &q(-1, 2)).unwrap());
        assert!(d1_condition(&p, &q(0, 1)).unwrap());
    }

    #[test]
    fn conditions() {
        let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
        let c = theorem_conditions(&p, &q(-3, 4));
        assert!(c.r_nonzero && c.r_plus_s_zero && c.two_lambda_eq_r_minus_d);
        let c = theorem_conditions(&p, &q(0, 1));
        assert_eq!(
            (c.r_nonzero, c.r_plus_s_zero, c.two_lambda_eq_r_minus_d),
            (true, true, false)
        );
        let p2 = build_params(2, q(1, 2), q(-1, 4)).unwrap();
        let c = theorem_conditions(&p2, &q(-3, 4));
        assert_eq!(
            (c.r_nonzero, c.r_plus_s_zero, c.two_lambda_eq_r_minus_d),
            (true, false, true)
        );
    }

    #[test]
    fn d2_corollary() {
        let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
        assert_eq!(d2_roots(&p).unwrap(), [q(-3, 4), q(-9, 8)]);
        assert!(d2_condition(&p, &q(-3, 4)).unwrap());
        assert!(d2_condition(&p, &q(-9, 8)).unwrap());
        assert!(!d2_condition(&p, &q(0, 1)).unwrap());
        assert!(!d2_condition(&p, &q(-8, 7)).unwrap());
        for lambda in [q(-3, 4), q(-9, 8)] {
            assert!(verify_leonard_pair_square(&p, &lambda, true).verdict);
        }
        assert!(!verify_leonard_pair_square(&p, &q(-8, 7), true).verdict);
        let same = build_params(2, q(1, 2), q(1, 2)).unwrap();
        assert!(!d2_condition(&same, &q(-3, 4)).unwrap());
        assert!(d2_condition(&build_params(3, q(1, 2), q(1, 2)).unwrap(), &q(0, 1)).is_err());
    }

    #[test]
    fn dual_almost_bipartite() {
        let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
        assert!(is_dual_almost_bipartite(&p, &q(-3, 4)));
        let m = matrix_lstar_ustar_basis(&p).shift(&q(-3, 4));
        assert_eq!(m[(2, 2)], q(3, 4));
        assert!(!is_dual_almost_bipartite(&p, &q(0, 1)));
    }

    #[test]
    fn search_examples() {
        let grid = SearchGrid {
            ds: (3..=6).collect(),
            rs: vec![q(-1, 2), q(1, 2)],
            ss: SValues::NegateR,
            lambdas: LambdaMode::Canonical,
            exhaustive: false,
        };
        let hits = search_square_preserving(&grid).unwrap();
        assert_eq!(hits.len(), 8);
        assert!(hits.iter().all(|h| h.theorem_predicted));

        let grid = SearchGrid {
            ds: vec![3],
            rs: vec![q(1, 2)],
            ss: SValues::List(vec![q(1, 2)]),
            lambdas: LambdaMode::List(vec![q(-5, 4), q(-1, 2), q(0, 1), q(1, 2), q(-3, 2)]),
            exhaustive: true,
        };
        assert!(search_square_preserving(&grid).unwrap().is_empty());

        let grid = SearchGrid {
            ds: vec![2],
            rs: vec![q(1, 2)],
            ss: SValues::List(vec![q(-1, 2)]),
            lambdas: LambdaMode::List(vec![q(-9, 8)]),
            exhaustive: true,
        };
        let hits = search_square_preserving(&grid).unwrap();
        assert_eq!(hits.len(), 1);
        assert!(!hits[0].theorem_predicted);
    }

    #[test]
    fn grid_rejects_out_of_domain_points() {
        let grid = SearchGrid {
            ds: vec![2],
            rs: vec![q(-1, 1)],
            ss: SValues::NegateR,
            lambdas: LambdaMode::Canonical,
            exhaustive: false,
        };
        assert!(grid.points().is_err());
    }
}
