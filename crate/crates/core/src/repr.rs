//! Value tables `U[i][j] = u_i(theta_j)` and the two matrix representations
//! of the pair `L, L*`.
//!
//! A polynomial of degree at most `d` is stored only through its values at
//! the `d + 1` distinct nodes `theta_0..theta_d`; that determines it
//! uniquely, and its degree is read off from Newton divided differences.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyper::hypergeom_terminating;
use crate::matrix::{poly_from_roots, RationalMatrix};
use crate::params::DualHahnParams;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ValueTable {
    pub u: RationalMatrix,
}

impl ValueTable {
    pub fn dim(&self) -> usize {
        self.u.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.u[(i, j)]
    }

    /// Comma-separated, one row per polynomial, with a header naming the
    /// node columns.
    pub fn to_csv(&self) -> String {
        let n = self.dim();
        let mut out = String::from("i");
        for j in 0..n {
            let _ = write!(out, ",theta_{j}");
        }
        out.push('\n');
        for i in 0..n {
            let _ = write!(out, "{i}");
            for x in self.u.row(i) {
                let _ = write!(out, ",{x}");
            }
            out.push('\n');
        }
        out
    }
}

/// `U[i][j] = 3F2(-i, -j, j-r-s-2d-1; -s-d, -d; 1)`.
pub fn eval_table_hypergeometric(p: &DualHahnParams) -> Result<ValueTable> {
    let d = p.d;
    let dd = Rational::from(d);
    let rs = &p.r + &p.s;
    let lower = [-&p.s - &dd, -dd.clone()];
    let mut u = RationalMatrix::zeros(d + 1, d + 1);
    for i in 0..=d {
        for j in 0..=d {
            let jj = Rational::from(j);
            let upper = [
                -Rational::from(i),
                -jj.clone(),
                &jj - &rs - Rational::from(2 * d + 1),
            ];
            u[(i, j)] = hypergeom_terminating(&upper, &lower, i)
                .map_err(|e| Error::Internal(format!("3F2 for u_{i}(theta_{j}) failed: {e}")))?;
        }
    }
    Ok(ValueTable { u })
}

/// Table from the three-term recurrence, rows `0..=d`. The top (`i = d`)
/// recurrence is not used here; see [`check_top_row`].
pub fn eval_table_recurrence(p: &DualHahnParams) -> Result<ValueTable> {
    let d = p.d;
    let mut u = RationalMatrix::zeros(d + 1, d + 1);
    for j in 0..=d {
        u[(0, j)] = Rational::one();
    }
    for i in 0..d {
        if p.b[i].is_zero() {
            return Err(Error::InvalidArgument(format!("b[{i}] is zero")));
        }
        for j in 0..=d {
            let mut next = (&p.theta[j] - &p.a[i]) * &u[(i, j)];
            if i > 0 {
                next -= &(&p.c[i] * &u[(i - 1, j)]);
            }
            u[(i + 1, j)] = next / &p.b[i];
        }
    }
    Ok(ValueTable { u })
}

/// The recurrence at `i = d`, where `b_d = 0` removes the `u_{d+1}` term.
pub fn check_top_row(p: &DualHahnParams, table: &ValueTable) -> bool {
    let d = p.d;
    (0..=d).all(|j| {
        let lhs = &p.theta[j] * table.get(d, j);
        let mut rhs = &p.a[d] * table.get(d, j);
        if d > 0 {
            rhs += &p.c[d] * table.get(d - 1, j);
        }
        lhs == rhs
    })
}

/// `sum_h U[i][h] U[j][h] k*_h` equals `nu / k_i` on the diagonal and 0 off it.
pub fn check_orthogonality(p: &DualHahnParams, table: &ValueTable) -> bool {
    let d = p.d;
    (0..=d).all(|i| {
        (0..=d).all(|j| {
            let sum = inner_product(table, &p.k_star, i, j);
            if i == j {
                sum == &p.nu / &p.k[i]
            } else {
                sum.is_zero()
            }
        })
    })
}

pub(crate) fn inner_product(
    table: &ValueTable,
    weights: &[Rational],
    i: usize,
    j: usize,
) -> Rational {
    weights
        .iter()
        .enumerate()
        .map(|(h, w)| table.get(i, h) * table.get(j, h) * w)
        .sum()
}

/// `theta*_i u_i(theta_j) = b*_j u_i(theta_{j+1}) + a*_j u_i(theta_j) + c*_j u_i(theta_{j-1})`
/// for all `i, j`; the out-of-range neighbours carry zero coefficients and
/// are skipped.
pub fn check_difference_eq(p: &DualHahnParams, table: &ValueTable) -> bool {
    let d = p.d;
    (0..=d).all(|i| {
        (0..=d).all(|j| {
            let lhs = &p.theta_star[i] * table.get(i, j);
            let mut rhs = &p.a_star[j] * table.get(i, j);
            if j < d {
                rhs += &p.b_star[j] * table.get(i, j + 1);
            }
            if j > 0 {
                rhs += &p.c_star[j] * table.get(i, j - 1);
            }
            lhs == rhs
        })
    })
}

/// Newton divided differences `f[x_0], f[x_0,x_1], ..., f[x_0..x_n]`.
pub fn divided_differences(nodes: &[Rational], values: &[Rational]) -> Result<Vec<Rational>> {
    if nodes.len() != values.len() {
        return Err(Error::InvalidArgument(
            "nodes and values differ in length".into(),
        ));
    }
    let n = nodes.len();
    let mut work = values.to_vec();
    let mut out = Vec::with_capacity(n);
    for order in 0..n {
        out.push(work[0].clone());
        for m in 0..n - order - 1 {
            let span = &nodes[m + order + 1] - &nodes[m];
            work[m] = (&work[m + 1] - &work[m])
                .checked_div(&span)
                .ok_or_else(|| Error::InvalidArgument("repeated interpolation node".into()))?;
        }
    }
    Ok(out)
}

/// Degree of the interpolating polynomial, `None` for the zero polynomial.
pub fn degree_from_values(nodes: &[Rational], values: &[Rational]) -> Result<Option<usize>> {
    let dd = divided_differences(nodes, values)?;
    Ok(dd.iter().rposition(|x| !x.is_zero()))
}

/// Every row `i` of the table has exact degree `i`.
pub fn check_degrees(p: &DualHahnParams, table: &ValueTable) -> Result<bool> {
    for i in 0..=p.d {
        if degree_from_values(&p.theta, table.u.row(i))? != Some(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[L]` in the basis `{u_i}`: diagonal `a`, subdiagonal `b_0..b_{d-1}`,
/// superdiagonal `c_1..c_d`.
pub fn matrix_l_u_basis(p: &DualHahnParams) -> RationalMatrix {
    RationalMatrix::tridiagonal(&p.a, &p.b[..p.d], &p.c[1..])
        .expect("lengths match by construction")
}

/// `[L*]` in the basis `{u_i}`: `diag(theta*)`.
pub fn matrix_lstar_u_basis(p: &DualHahnParams) -> RationalMatrix {
    RationalMatrix::diagonal(&p.theta_star)
}

/// `[L]` in the basis `{u*_i}`: `diag(theta)`.
pub fn matrix_l_ustar_basis(p: &DualHahnParams) -> RationalMatrix {
    RationalMatrix::diagonal(&p.theta)
}

/// `[L*]` in the basis `{u*_i}`: diagonal `a*`, subdiagonal `b*`,
/// superdiagonal `c*`.
pub fn matrix_lstar_ustar_basis(p: &DualHahnParams) -> RationalMatrix {
    RationalMatrix::tridiagonal(&p.a_star, &p.b_star[..p.d], &p.c_star[1..])
        .expect("lengths match by construction")
}

/// The two representations describe the same operators: the characteristic
/// polynomials of `[L]` and `[L*]` in each basis are `prod (x - theta_i)` and
/// `prod (x - theta*_i)` respectively.
pub fn check_characteristic_polynomials(p: &DualHahnParams) -> Result<bool> {
    let l_poly = poly_from_roots(&p.theta);
    let lstar_poly = poly_from_roots(&p.theta_star);
    Ok(matrix_l_u_basis(p).characteristic_polynomial()? == l_poly
        && matrix_l_ustar_basis(p).characteristic_polynomial()? == l_poly
        && matrix_lstar_u_basis(p).characteristic_polynomial()? == lstar_poly
        && matrix_lstar_ustar_basis(p).characteristic_polynomial()? == lstar_poly)
}

/// Intertwining check without inversion. With `P = U^T` (column `i` holds
/// the node values of `u_i`) and `T` the action of `L*` on node values,
/// `diag(theta) P = P [L]_u` and `T P = P [L*]_u`.
pub fn check_intertwining(p: &DualHahnParams, table: &ValueTable) -> Result<bool> {
    let d = p.d;
    let change = table.u.transpose();
    let node_lstar = RationalMatrix::from_fn(d + 1, d + 1, |i, j| {
        if j == i + 1 {
            p.b_star[i].clone()
        } else if j == i {
            p.a_star[i].clone()
        } else if j + 1 == i {
            p.c_star[i].clone()
        } else {
            Rational::zero()
        }
    });
    let l_ok = matrix_l_ustar_basis(p).checked_mul(&change)?
        == change.checked_mul(&matrix_l_u_basis(p))?;
    let lstar_ok =
        node_lstar.checked_mul(&change)? == change.checked_mul(&matrix_lstar_u_basis(p))?;
    Ok(l_ok && lstar_ok)
}
