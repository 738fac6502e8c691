//! The barred (Racah) parameter array for `s = -r`, and the identities that
//! tie it back to the dual Hahn array.
//!
//! Index map: `sigma(i) = 2i` for `i <= floor(d/2)` and `2(d-i)+1` above.
//! It is the first candidate ordering, and `theta_bar[i] = theta[sigma(i)]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyper::hypergeom_terminating;
use crate::leonard::lstar_shift_square;
use crate::matrix::RationalMatrix;
use crate::params::{diagonal_from, ratio_products, DualHahnParams};
use crate::rational::{is_even, Rational};
use crate::repr::{
    inner_product, matrix_l_u_basis, matrix_l_ustar_basis, matrix_lstar_u_basis, ValueTable,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RacahParams {
    pub d: usize,
    pub r: Rational,
    pub bar_theta: Vec<Rational>,
    pub bar_theta_star: Vec<Rational>,
    pub bar_b: Vec<Rational>,
    pub bar_c: Vec<Rational>,
    pub bar_a: Vec<Rational>,
    pub bar_k: Vec<Rational>,
    pub bar_nu: Rational,
    pub bar_b_star: Vec<Rational>,
    pub bar_c_star: Vec<Rational>,
    pub bar_a_star: Vec<Rational>,
    pub bar_k_star: Vec<Rational>,
    /// `bar_varphi[i]` for `i = 1..=d`; entry 0 is unused and zero.
    pub bar_varphi: Vec<Rational>,
}

pub fn index_map(d: usize, i: usize) -> usize {
    if i <= d / 2 {
        2 * i
    } else {
        2 * (d - i) + 1
    }
}

/// Lower parameters of the 4F3: `-d`, `(r-d)/2`, `(r-d+1)/2`.
fn lower_parameters(d: usize, r: &Rational) -> [Rational; 3] {
    let dd = Rational::from(d);
    let half = Rational::new(1, 2);
    [
        -dd.clone(),
        (r - &dd) * &half,
        (r - &dd + Rational::one()) * &half,
    ]
}

pub fn build_racah_params(d: usize, r: Rational) -> Result<RacahParams> {
    if r.is_zero() || r <= -1 || r >= 1 {
        return Err(Error::ParameterDomain(format!(
            "r = {r} must satisfy r != 0 and -1 < r < 1"
        )));
    }
    // No lower Pochhammer factor of the 4F3 may vanish for term indices
    // 1..=d (shifts 0..d).
    for (k, beta) in lower_parameters(d, &r).iter().enumerate().skip(1) {
        for m in 0..d {
            if (beta + &Rational::from(m)).is_zero() {
                return Err(Error::ParameterDomain(format!(
                    "lower parameter {k} of the 4F3 vanishes at shift {m} for r = {r}"
                )));
            }
        }
    }

    let n = |x: usize| Rational::from(x);
    let z = |x: i64| Rational::from(x);
    let di = d as i64;
    let two = n(2);
    let shift = (&r - &n(d)) / &two;

    let bar_theta: Vec<Rational> = (0..=di)
        .map(|i| z((di - 2 * i) * (di - 2 * i + 1)))
        .collect();
    let bar_theta_star: Vec<Rational> = (0..=d).map(|i| (n(i) + &shift).square()).collect();
    let bar_b: Vec<Rational> = (0..=d)
        .map(|i| {
            if i == d {
                Rational::zero()
            } else {
                n(d - i) * (n(d - i) - &r)
            }
        })
        .collect();
    let bar_c: Vec<Rational> = (0..=d).map(|i| n(i) * (n(i) + &r)).collect();
    let bar_a = diagonal_from(&bar_theta[0], &bar_b, &bar_c);
    let bar_k = ratio_products(&bar_b, &bar_c);
    let bar_nu = bar_theta[1..]
        .iter()
        .map(|t| &bar_theta[0] - t)
        .product::<Rational>()
        / bar_c[1..].iter().product::<Rational>();

    let bar_b_star: Vec<Rational> = (0..=di)
        .map(|i| {
            if i == di {
                return Rational::zero();
            }
            let num =
                z(di - i) * z(2 * di - 2 * i + 1) * (z(di - 2 * i - 1) - &r) * (z(di - 2 * i) - &r);
            num / (&two * z((2 * di - 4 * i - 1) * (2 * di - 4 * i + 1)))
        })
        .collect();
    let bar_c_star: Vec<Rational> = (0..=di)
        .map(|i| {
            if i == 0 {
                return Rational::zero();
            }
            let num = z(i) * z(2 * i - 1) * (z(di - 2 * i + 1) + &r) * (z(di - 2 * i + 2) + &r);
            num / (&two * z((2 * di - 4 * i + 1) * (2 * di - 4 * i + 3)))
        })
        .collect();
    let bar_a_star = diagonal_from(&bar_theta_star[0], &bar_b_star, &bar_c_star);
    let bar_k_star = ratio_products(&bar_b_star, &bar_c_star);
    let bar_varphi: Vec<Rational> = (0..=di)
        .map(|i| {
            if i == 0 {
                return Rational::zero();
            }
            z(i * (i - di - 1)) * (z(di - 2 * i + 1) - &r) * (z(di - 2 * i + 2) - &r)
        })
        .collect();

    Ok(RacahParams {
        d,
        r,
        bar_theta,
        bar_theta_star,
        bar_b,
        bar_c,
        bar_a,
        bar_k,
        bar_nu,
        bar_b_star,
        bar_c_star,
        bar_a_star,
        bar_k_star,
        bar_varphi,
    })
}

fn require_shared(p: &DualHahnParams, q: &RacahParams) -> Result<()> {
    if p.d != q.d || p.r != q.r || p.s != -&q.r {
        return Err(Error::InvalidArgument(format!(
            "dual Hahn (d={}, r={}, s={}) does not match Racah (d={}, r={}, s=-r)",
            p.d, p.r, p.s, q.d, q.r
        )));
    }
    Ok(())
}

/// `theta_bar[i] = theta[sigma(i)]` and
/// `theta_bar*[i] = (theta*_i + (r-d)/2)^2`.
pub fn check_index_mapping(p: &DualHahnParams, q: &RacahParams) -> Result<bool> {
    require_shared(p, q)?;
    let shift = p.canonical_lambda();
    Ok((0..=p.d).all(|i| {
        q.bar_theta[i] == p.theta[index_map(p.d, i)]
            && q.bar_theta_star[i] == (&p.theta_star[i] + &shift).square()
    }))
}

/// `b_bar = b`, `c_bar = c`, `a_bar = a`, `k_bar = k`, `nu_bar = nu`.
pub fn check_unbarred_identities(p: &DualHahnParams, q: &RacahParams) -> Result<bool> {
    require_shared(p, q)?;
    Ok(q.bar_b == p.b && q.bar_c == p.c && q.bar_a == p.a && q.bar_k == p.k && q.bar_nu == p.nu)
}

/// `b_bar*` in terms of the dual Hahn `b*`, `c*`, including the parity
/// dependent middle entry.
pub fn bar_b_star_from_products(p: &DualHahnParams) -> Vec<Rational> {
    let d = p.d;
    let h = d / 2;
    let middle = Rational::from(d + 1) * &p.r / Rational::from(2usize);
    (0..=d)
        .map(|i| {
            if i == d {
                Rational::zero()
            } else if i < h {
                &p.b_star[2 * i] * &p.b_star[2 * i + 1]
            } else if i == h {
                if is_even(d) {
                    &middle * &p.c_star[d]
                } else {
                    &middle * &p.b_star[d - 1]
                }
            } else {
                &p.c_star[2 * (d - i)] * &p.c_star[2 * (d - i) + 1]
            }
        })
        .collect()
}

/// `c_bar*` in terms of the dual Hahn `b*`, `c*`.
pub fn bar_c_star_from_products(p: &DualHahnParams) -> Vec<Rational> {
    let d = p.d;
    let h = d / 2;
    let middle = Rational::from(d + 1) * &p.r / Rational::from(2usize);
    (0..=d)
        .map(|i| {
            if i == 0 {
                Rational::zero()
            } else if i <= h {
                &p.c_star[2 * i] * &p.c_star[2 * i - 1]
            } else if i == h + 1 {
                if is_even(d) {
                    &middle * &p.b_star[d - 1]
                } else {
                    &middle * &p.c_star[d]
                }
            } else {
                &p.b_star[2 * (d - i + 1)] * &p.b_star[2 * (d - i) + 1]
            }
        })
        .collect()
}

/// The three starred clauses: `b_bar*`, `c_bar*` as products of dual Hahn
/// starred coefficients, and `k_bar*[i] = k*[sigma(i)]`.
pub fn check_starred_products(p: &DualHahnParams, q: &RacahParams) -> Result<bool> {
    require_shared(p, q)?;
    let k_ok = (0..=p.d).all(|i| q.bar_k_star[i] == p.k_star[index_map(p.d, i)]);
    Ok(q.bar_b_star == bar_b_star_from_products(p)
        && q.bar_c_star == bar_c_star_from_products(p)
        && k_ok)
}

/// `V[i][j] = 4F3(-i, i-d+r, -j, j-d-1/2; -d, (r-d)/2, (r-d+1)/2; 1)`,
/// the values `u_i(theta_bar_j)`.
pub fn eval_table_4f3(q: &RacahParams) -> Result<ValueTable> {
    let d = q.d;
    let dd = Rational::from(d);
    let half = Rational::new(1, 2);
    let lower = lower_parameters(d, &q.r);
    let mut v = RationalMatrix::zeros(d + 1, d + 1);
    for i in 0..=d {
        let ii = Rational::from(i);
        for j in 0..=d {
            let jj = Rational::from(j);
            let upper = [
                -ii.clone(),
                &ii - &dd + &q.r,
                -jj.clone(),
                &jj - &dd - &half,
            ];
            v[(i, j)] = hypergeom_terminating(&upper, &lower, i)?;
        }
    }
    Ok(ValueTable { u: v })
}

/// Third route to `u_i(theta_bar_j)`: the sum over `h <= i` of
/// `prod_{l<h} (theta_bar*_i - theta_bar*_l)(theta_bar_j - theta_bar_l)`
/// divided by `varphi_bar_1 ... varphi_bar_h`.
pub fn eval_table_varphi_sum(q: &RacahParams) -> Result<ValueTable> {
    let d = q.d;
    let mut v = RationalMatrix::zeros(d + 1, d + 1);
    for i in 0..=d {
        for j in 0..=d {
            let mut term = Rational::one();
            let mut sum = Rational::one();
            for h in 1..=i {
                let l = h - 1;
                let num = (&q.bar_theta_star[i] - &q.bar_theta_star[l])
                    * (&q.bar_theta[j] - &q.bar_theta[l]);
                term = (term * num)
                    .checked_div(&q.bar_varphi[h])
                    .ok_or(Error::DivisionByZero { index: h })?;
                sum += &term;
            }
            v[(i, j)] = sum;
        }
    }
    Ok(ValueTable { u: v })
}

/// `V[i][j] = U[i][sigma(j)]`.
pub fn check_table_permutation(u: &ValueTable, v: &ValueTable) -> bool {
    let d = u.dim() - 1;
    u.dim() == v.dim() && (0..=d).all(|i| (0..=d).all(|j| v.get(i, j) == u.get(i, index_map(d, j))))
}

/// Barred orthogonality: `sum_h V[i][h] V[j][h] k_bar*_h = delta_ij nu_bar / k_bar_i`.
pub fn check_racah_orthogonality(q: &RacahParams, v: &ValueTable) -> bool {
    let d = q.d;
    (0..=d).all(|i| {
        (0..=d).all(|j| {
            let sum = inner_product(v, &q.bar_k_star, i, j);
            if i == j {
                sum == &q.bar_nu / &q.bar_k[i]
            } else {
                sum.is_zero()
            }
        })
    })
}

/// Each barred orthogonality summand at `h` equals the dual Hahn summand at
/// `sigma(h)`, so the two relations are the same sum reordered.
pub fn check_orthogonality_reindexing(
    p: &DualHahnParams,
    q: &RacahParams,
    u: &ValueTable,
    v: &ValueTable,
) -> Result<bool> {
    require_shared(p, q)?;
    let d = p.d;
    Ok((0..=d).all(|i| {
        (0..=d).all(|j| {
            (0..=d).all(|h| {
                let s = index_map(d, h);
                v.get(i, h) * v.get(j, h) * &q.bar_k_star[h]
                    == u.get(i, s) * u.get(j, s) * &p.k_star[s]
            })
        })
    }))
}

/// `x u_i(x) = b_bar_i u_{i+1}(x) + a_bar_i u_i(x) + c_bar_i u_{i-1}(x)` at
/// every barred node.
pub fn check_barred_recurrence(q: &RacahParams, v: &ValueTable) -> bool {
    let d = q.d;
    (0..=d).all(|i| {
        (0..=d).all(|j| {
            let lhs = &q.bar_theta[j] * v.get(i, j);
            let mut rhs = &q.bar_a[i] * v.get(i, j);
            if i < d {
                rhs += &q.bar_b[i] * v.get(i + 1, j);
            }
            if i > 0 {
                rhs += &q.bar_c[i] * v.get(i - 1, j);
            }
            lhs == rhs
        })
    })
}

/// Both barred representation pairs, rebuilt from the dual Hahn matrices:
/// in the `u` basis `[L] = tridiag(a_bar, b_bar, c_bar)` and
/// `[(L* + (r-d)/2)^2] = diag(theta_bar*)`; in the first-ordering basis
/// `[L] = diag(theta_bar)` and `[(L* + (r-d)/2)^2] = tridiag(a_bar*, b_bar*, c_bar*)`.
pub fn check_barred_representations(p: &DualHahnParams, q: &RacahParams) -> Result<bool> {
    require_shared(p, q)?;
    let d = p.d;
    let lambda = p.canonical_lambda();
    let sigma: Vec<usize> = (0..=d).map(|i| index_map(d, i)).collect();

    let l_u_ok =
        matrix_l_u_basis(p) == RationalMatrix::tridiagonal(&q.bar_a, &q.bar_b[..d], &q.bar_c[1..])?;
    let shifted = matrix_lstar_u_basis(p).shift(&lambda);
    let square_u_ok = shifted.checked_mul(&shifted)? == RationalMatrix::diagonal(&q.bar_theta_star);

    let l_bar_ok =
        matrix_l_ustar_basis(p).permuted(&sigma)? == RationalMatrix::diagonal(&q.bar_theta);
    let square_bar_ok = lstar_shift_square(p, &lambda).permuted(&sigma)?
        == RationalMatrix::tridiagonal(&q.bar_a_star, &q.bar_b_star[..d], &q.bar_c_star[1..])?;
    Ok(l_u_ok && square_u_ok && l_bar_ok && square_bar_ok)
}

/// `varphi_bar_i` from its defining quotient
/// `b_bar_{i-1} prod_{l<i}(theta_bar*_i - theta_bar*_l) / prod_{l<i-1}(theta_bar*_{i-1} - theta_bar*_l)`.
pub fn varphi_from_quotient(q: &RacahParams) -> Vec<Rational> {
    let ts = &q.bar_theta_star;
    (0..=q.d)
        .map(|i| {
            if i == 0 {
                return Rational::zero();
            }
            let num: Rational = (0..i).map(|l| &ts[i] - &ts[l]).product();
            let den: Rational = (0..i - 1).map(|l| &ts[i - 1] - &ts[l]).product();
            &q.bar_b[i - 1] * num / den
        })
        .collect()
}

/// `x -> scale * x + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineMap {
    pub scale: Rational,
    pub offset: Rational,
}

impl AffineMap {
    pub fn apply(&self, x: &Rational) -> Rational {
        &self.scale * x + &self.offset
    }
}

/// `aff1: x -> x + d(d+r+s+1)` carries textbook dual Hahn nodes to `theta_j`.
pub fn dual_hahn_affine(d: usize, r: &Rational, s: &Rational) -> AffineMap {
    let dd = Rational::from(d);
    AffineMap {
        scale: Rational::one(),
        offset: &dd * (&dd + r + s + Rational::one()),
    }
}

/// `aff2: x -> 4x + d(d+1)` carries textbook Racah nodes to `theta_bar_j`.
pub fn racah_affine(d: usize) -> AffineMap {
    AffineMap {
        scale: Rational::from(4usize),
        offset: Rational::from(d * (d + 1)),
    }
}

/// `(aff1, aff2)` with `s = -r`.
pub fn affine_maps(d: usize, r: &Rational) -> (AffineMap, AffineMap) {
    (dual_hahn_affine(d, r, &-r), racah_affine(d))
}

/// Textbook Racah parameters `(alpha, beta, gamma, delta)` with `N = d`:
/// `(-d-1, r, (r-d-1)/2, -(r+d)/2 - 1)`.
pub fn racah_standard_parameters(d: usize, r: &Rational) -> [Rational; 4] {
    let dd = Rational::from(d);
    let one = Rational::one();
    let half = Rational::new(1, 2);
    [
        -&dd - &one,
        r.clone(),
        (r - &dd - &one) * &half,
        -(r + &dd) * &half - &one,
    ]
}

/// Textbook Racah node `lambda(x) = x (x + gamma + delta + 1)`.
pub fn racah_node(d: usize, r: &Rational, x: &Rational) -> Rational {
    let [_, _, gamma, delta] = racah_standard_parameters(d, r);
    x * &(x + &gamma + &delta + Rational::one())
}

/// Textbook Racah polynomial of degree `i` at `lambda(x)`:
/// `4F3(-i, i+alpha+beta+1, -x, x+gamma+delta+1; alpha+1, beta+delta+1, gamma+1; 1)`.
pub fn standard_racah_eval(d: usize, r: &Rational, i: usize, x: &Rational) -> Result<Rational> {
    let [alpha, beta, gamma, delta] = racah_standard_parameters(d, r);
    let one = Rational::one();
    let ii = Rational::from(i);
    let upper = [
        -ii.clone(),
        &ii + &alpha + &beta + &one,
        -x.clone(),
        x + &gamma + &delta + &one,
    ];
    let lower = [&alpha + &one, &beta + &delta + &one, &gamma + &one];
    hypergeom_terminating(&upper, &lower, i)
}

/// Textbook dual Hahn node `lambda(x) = x (x + gamma + delta + 1)` with
/// `(gamma, delta) = (-s-d-1, -r-d-1)`.
pub fn dual_hahn_node(d: usize, r: &Rational, s: &Rational, x: &Rational) -> Rational {
    let dd = Rational::from(d);
    let gamma_delta_1 = -s - r - &dd - &dd - Rational::one();
    x * &(x + &gamma_delta_1)
}

/// Textbook dual Hahn polynomial of degree `i` at `lambda(x)`:
/// `3F2(-i, -x, x+gamma+delta+1; gamma+1, -N; 1)`.
pub fn standard_dual_hahn_eval(
    d: usize,
    r: &Rational,
    s: &Rational,
    i: usize,
    x: &Rational,
) -> Result<Rational> {
    let dd = Rational::from(d);
    let one = Rational::one();
    let gamma = -s - &dd - &one;
    let delta = -r - &dd - &one;
    let upper = [-Rational::from(i), -x.clone(), x + &gamma + &delta + &one];
    let lower = [&gamma + &one, -dd];
    hypergeom_terminating(&upper, &lower, i)
}
