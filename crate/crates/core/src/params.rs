//! The dual Hahn parameter array built from `(d, r, s)`.
//!
//! Every sequence is indexed `0..=d`. Boundary entries that the formulas
//! leave undefined (`b[d]`, `c[0]`, `b_star[d]`, `c_star[0]`) are stored as
//! zero, which is what makes `a[i] = theta[0] - b[i] - c[i]` uniform.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyper::{binomial, pochhammer};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DualHahnParams {
    pub d: usize,
    pub r: Rational,
    pub s: Rational,
    pub theta: Vec<Rational>,
    pub theta_star: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    pub a: Vec<Rational>,
    pub k: Vec<Rational>,
    pub nu: Rational,
    pub b_star: Vec<Rational>,
    pub c_star: Vec<Rational>,
    pub a_star: Vec<Rational>,
    pub k_star: Vec<Rational>,
}

pub(crate) fn check_domain(name: &str, x: &Rational) -> Result<()> {
    if *x <= -1 {
        return Err(Error::ParameterDomain(format!(
            "{name} = {x} violates {name} > -1"
        )));
    }
    Ok(())
}

/// `b_0 ... b_{i-1} / (c_1 ... c_i)` for every `i`, the shared shape of the
/// weight sequences.
pub(crate) fn ratio_products(b: &[Rational], c: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(b.len());
    let mut acc = Rational::one();
    out.push(acc.clone());
    for i in 1..b.len() {
        acc = acc * &b[i - 1] / &c[i];
        out.push(acc.clone());
    }
    out
}

pub(crate) fn diagonal_from(theta0: &Rational, b: &[Rational], c: &[Rational]) -> Vec<Rational> {
    b.iter().zip(c).map(|(bi, ci)| theta0 - bi - ci).collect()
}

/// Builds the full array from the product-form definitions.
pub fn build_params(d: usize, r: Rational, s: Rational) -> Result<DualHahnParams> {
    check_domain("r", &r)?;
    check_domain("s", &s)?;

    let n = |x: usize| Rational::from(x);
    let dd = n(d);
    let one = Rational::one();
    let two = n(2);
    let rs = &r + &s;

    let theta: Vec<Rational> = (0..=d)
        .map(|i| n(d - i) * (n(d - i) + &rs + &one))
        .collect();
    let theta_star: Vec<Rational> = (0..=d).map(n).collect();

    let b: Vec<Rational> = (0..=d)
        .map(|i| {
            if i == d {
                Rational::zero()
            } else {
                n(d - i) * (n(d - i) + &s)
            }
        })
        .collect();
    let c: Vec<Rational> = (0..=d).map(|i| n(i) * (n(i) + &r)).collect();
    let a = diagonal_from(&theta[0], &b, &c);
    let k = ratio_products(&b, &c);

    let nu_num: Rational = theta[1..].iter().map(|t| &theta[0] - t).product();
    let nu_den: Rational = c[1..].iter().product();
    let nu = nu_num / nu_den;

    let b_star: Vec<Rational> = (0..=d)
        .map(|i| {
            if i == d {
                return Rational::zero();
            }
            let two_gap = &two * &n(d - i);
            n(d - i) * (n(i) - &dd - &s) * pochhammer(&(&two_gap + &rs + &two), i)
                / pochhammer(&(&two_gap + &rs), i + 1)
        })
        .collect();
    let c_star: Vec<Rational> = (0..=d)
        .map(|i| {
            if i == 0 {
                return Rational::zero();
            }
            n(i) * (n(i) - &dd - &r - &one) * pochhammer(&(n(d - i) + &rs + &one), d - i)
                / pochhammer(&(n(d - i) + &rs + &two), d - i + 1)
        })
        .collect();
    let a_star = diagonal_from(&theta_star[0], &b_star, &c_star);
    let k_star = ratio_products(&b_star, &c_star);

    Ok(DualHahnParams {
        d,
        r,
        s,
        theta,
        theta_star,
        b,
        c,
        a,
        k,
        nu,
        b_star,
        c_star,
        a_star,
        k_star,
    })
}

impl DualHahnParams {
    pub fn new(d: usize, r: Rational, s: Rational) -> Result<Self> {
        build_params(d, r, s)
    }

    /// `(r - d) / 2`, the shift under which `(L* + shift)^2` pairs with `L`.
    pub fn canonical_lambda(&self) -> Rational {
        (&self.r - &Rational::from(self.d)) / Rational::from(2usize)
    }

    /// Closed-form weights `k_i`.
    pub fn k_closed_form(&self) -> Vec<Rational> {
        let d = self.d;
        let one = Rational::one();
        (0..=d)
            .map(|i| {
                binomial(d, i).expect("i <= d")
                    * pochhammer(&(Rational::from(d - i) + &self.s + &one), i)
                    / pochhammer(&(&self.r + &one), i)
            })
            .collect()
    }

    /// Closed-form dual weights `k*_i`.
    pub fn k_star_closed_form(&self) -> Vec<Rational> {
        let d = self.d;
        let n = |x: usize| Rational::from(x);
        let one = Rational::one();
        let rs = &self.r + &self.s;
        let shared = pochhammer(&(n(d) + &rs + &one), d);
        (0..=d)
            .map(|i| {
                let num =
                    binomial(d, i).expect("i <= d") * pochhammer(&(-n(d) - &self.s), i) * &shared;
                let den = pochhammer(&(-n(d) - &self.r), i)
                    * pochhammer(&(n(2 * d - 2 * i) + &rs + n(2)), i)
                    * pochhammer(&(n(d - i) + &rs + &one), d - i);
                num / den
            })
            .collect()
    }

    pub fn nu_closed_form(&self) -> Rational {
        let d = Rational::from(self.d);
        let one = Rational::one();
        pochhammer(&(&d + &self.r + &self.s + &one), self.d) / pochhammer(&(&self.r + &one), self.d)
    }

    /// Lists every violated structural invariant; empty when the array is
    /// well formed.
    pub fn invariant_violations(&self) -> Vec<String> {
        let d = self.d;
        let mut out = Vec::new();
        for i in 0..=d {
            for j in 0..i {
                if self.theta[i] == self.theta[j] {
                    out.push(format!("theta[{j}] = theta[{i}]"));
                }
            }
        }
        let positive = [("k", &self.k), ("kStar", &self.k_star)];
        for (name, seq) in positive {
            for (i, x) in seq.iter().enumerate() {
                if !x.is_positive() {
                    out.push(format!("{name}[{i}] = {x} is not positive"));
                }
            }
        }
        if !self.nu.is_positive() {
            out.push(format!("nu = {} is not positive", self.nu));
        }
        let nonzero = [
            ("b", &self.b, 0..d),
            ("c", &self.c, 1..d + 1),
            ("bStar", &self.b_star, 0..d),
            ("cStar", &self.c_star, 1..d + 1),
        ];
        for (name, seq, range) in nonzero {
            for i in range {
                if seq[i].is_zero() {
                    out.push(format!("{name}[{i}] is zero"));
                }
            }
        }
        for (name, seq, last) in [
            ("b", &self.b, d),
            ("c", &self.c, 0),
            ("bStar", &self.b_star, d),
            ("cStar", &self.c_star, 0),
        ] {
            if !seq[last].is_zero() {
                out.push(format!("boundary {name}[{last}] is not zero"));
            }
        }
        for i in 0..=d {
            if self.a[i] != &self.theta[0] - &self.b[i] - &self.c[i] {
                out.push(format!("a[{i}] != theta0 - b - c"));
            }
            if self.a_star[i] != &self.theta_star[0] - &self.b_star[i] - &self.c_star[i] {
                out.push(format!("aStar[{i}] != thetaStar0 - bStar - cStar"));
            }
        }
        out
    }
}

/// True iff the product-form `k`, `k*` and `nu` equal their closed forms.
pub fn check_closed_forms(p: &DualHahnParams) -> bool {
    p.k == p.k_closed_form() && p.k_star == p.k_star_closed_form() && p.nu == p.nu_closed_form()
}

/// `a*_i + a*_{i+1}` for `i = 0..d-1`, from the two-branch closed form.
/// Empty for `d = 0`.
pub fn build_astar_sums(p: &DualHahnParams) -> Vec<Rational> {
    let d = p.d;
    let n = |x: usize| Rational::from(x);
    let dd = n(d);
    let diff = &p.r - &p.s;
    let sum = &p.r + &p.s;
    (0..d)
        .map(|i| {
            if i + 1 == d {
                &dd + n(d - 1) * &diff / (&sum + n(4))
            } else {
                let gap = n(2 * d - 2 * i) + &sum;
                &dd - &diff / n(2)
                    + &diff * &sum * (n(2 * d) + &sum + n(2))
                        / (n(2) * (&gap - n(2)) * (&gap + n(2)))
            }
        })
        .collect()
}

/// `a*_i + a*_{i+1}` summed directly from the array.
pub fn direct_astar_sums(p: &DualHahnParams) -> Vec<Rational> {
    p.a_star.windows(2).map(|w| &w[0] + &w[1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn d1_half() {
        let p = build_params(1, q(1, 2), q(-1, 2)).unwrap();
        assert_eq!(p.theta, ints(&[2, 0]));
        assert_eq!(p.b[0], q(1, 2));
        assert_eq!(p.c[1], q(3, 2));
        assert_eq!(p.a, vec![q(3, 2), q(1, 2)]);
    }

    #[test]
    fn d2_half() {
        let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
        assert_eq!(p.theta, ints(&[6, 2, 0]));
        assert_eq!(p.b, vec![q(3, 1), q(1, 2), q(0, 1)]);
        assert_eq!(p.c, vec![q(0, 1), q(3, 2), q(5, 1)]);
        assert_eq!(p.a, ints(&[3, 4, 1]));
        assert_eq!(p.k, vec![q(1, 1), q(2, 1), q(1, 5)]);
        assert_eq!(p.nu, q(16, 5));
        assert_eq!(p.k_star, vec![q(1, 1), q(9, 5), q(2, 5)]);
        assert_eq!(p.b_star, vec![q(-3, 4), q(-1, 3), q(0, 1)]);
        assert_eq!(p.c_star, vec![q(0, 1), q(-5, 12), q(-3, 2)]);
        assert!(p.invariant_violations().is_empty());
    }

    #[test]
    fn d0_is_all_empty_products() {
        let p = build_params(0, q(1, 4), q(1, 4)).unwrap();
        assert_eq!(p.theta, ints(&[0]));
        assert_eq!(p.k, ints(&[1]));
        assert_eq!(p.nu, q(1, 1));
        assert_eq!(p.k_star, ints(&[1]));
        assert_eq!(p.a_star, ints(&[0]));
        assert!(check_closed_forms(&p));
        assert!(build_astar_sums(&p).is_empty());
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(matches!(
            build_params(2, q(-1, 1), q(0, 1)),
            Err(Error::ParameterDomain(_))
        ));
        assert!(matches!(
            build_params(2, q(0, 1), q(-2, 1)),
            Err(Error::ParameterDomain(_))
        ));
        assert!(build_params(2, q(-99, 100), q(-99, 100)).is_ok());
    }

    #[test]
    fn closed_forms_agree() {
        let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
        assert_eq!(p.k_closed_form()[2], q(1, 5));
        assert!(check_closed_forms(&p));
        assert!(check_closed_forms(
            &build_params(5, q(3, 4), q(1, 4)).unwrap()
        ));
        assert!(check_closed_forms(
            &build_params(0, q(2, 1), q(-1, 3)).unwrap()
        ));
    }

    #[test]
    fn astar_sums_examples() {
        let p = build_params(1, q(1, 3), q(7, 5)).unwrap();
        assert_eq!(build_astar_sums(&p), vec![q(1, 1)]);

        let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
        assert_eq!(p.a_star, vec![q(3, 4), q(3, 4), q(3, 2)]);
        assert_eq!(build_astar_sums(&p), vec![q(3, 2), q(9, 4)]);
        assert_eq!(direct_astar_sums(&p), build_astar_sums(&p));

        let p = build_params(6, q(2, 3), q(2, 3)).unwrap();
        assert!(build_astar_sums(&p).iter().all(|x| *x == 6));
    }

    #[test]
    fn serializes_with_expected_keys() {
        let p = build_params(2, q(1, 2), q(-1, 2)).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        for key in [
            "theta",
            "thetaStar",
            "b",
            "c",
            "a",
            "k",
            "nu",
            "bStar",
            "cStar",
            "aStar",
            "kStar",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["nu"], "16/5");
    }
}
