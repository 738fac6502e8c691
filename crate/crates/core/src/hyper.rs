//! Pochhammer symbols, binomials and terminating hypergeometric series at 1.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Rising factorial `x (x+1) ... (x+i-1)`; the empty product is 1.
pub fn pochhammer(x: &Rational, i: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    let one = Rational::one();
    for _ in 0..i {
        acc *= &factor;
        factor += &one;
    }
    acc
}

pub fn binomial(n: usize, i: usize) -> Result<Rational> {
    if i > n {
        return Err(Error::InvalidArgument(format!(
            "binomial({n}, {i}): lower index exceeds upper"
        )));
    }
    let i = i.min(n - i);
    let mut acc = Rational::one();
    for m in 0..i {
        acc *= Rational::from(n - m);
        acc = acc / Rational::from(m + 1);
    }
    Ok(acc)
}

/// Evaluates the terminating series
///
/// ```text
/// sum_{i=0}^{terms} prod_k (alpha_k)_i / prod_k (beta_k)_i * 1/i!
/// ```
///
/// One of `numerators` must be a non-positive integer `-t` with
/// `t <= terms`, so the series is finite inside the window. The sum stops at
/// the first index whose numerator Pochhammer product vanishes; that test
/// runs before the denominator at the same index is looked at, so a
/// simultaneous zero upstairs and downstairs truncates cleanly.
pub fn hypergeom_terminating(
    numerators: &[Rational],
    denominators: &[Rational],
    terms: usize,
) -> Result<Rational> {
    let terminates = numerators
        .iter()
        .filter_map(Rational::as_nonpositive_integer)
        .any(|t| t <= terms as u64);
    if !terminates {
        return Err(Error::InvalidArgument(format!(
            "no numerator parameter is a non-positive integer -t with t <= {terms}"
        )));
    }

    let mut term = Rational::one();
    let mut sum = Rational::one();
    for i in 1..=terms {
        let shift = Rational::from(i - 1);
        let up: Rational = numerators.iter().map(|a| a + &shift).product();
        if up.is_zero() {
            break;
        }
        let down: Rational = denominators
            .iter()
            .map(|b| b + &shift)
            .product::<Rational>()
            * Rational::from(i);
        if down.is_zero() {
            return Err(Error::DivisionByZero { index: i });
        }
        term = term * up / down;
        sum += &term;
    }
    Ok(sum)
}
