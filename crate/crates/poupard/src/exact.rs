//! Exact rational arithmetic and truncated exponential generating functions.
//!
//! All series are EGF-normalized: a coefficient `a_m` is the value of the
//! m-th derivative at 0, i.e. the series is `sum a_m u^m / m!`. Products
//! therefore combine coefficients by binomial convolution and the tangent
//! and secant numbers appear directly as integer coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// The scalar used everywhere: an arbitrary-precision rational, always
/// reduced, denominator positive.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Truncated univariate EGF: `sum_{m=0..=order} coeffs[m] u^m / m!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateEgf {
    coeffs: Vec<Rational>,
}

impl UnivariateEgf {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        UnivariateEgf { coeffs }
    }

    /// The constant series `c` truncated at `order`.
    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        UnivariateEgf { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &Rational {
        &self.coeffs[m]
    }

    /// Coefficient as an integer; panics if the denominator is not 1.
    pub fn integer_coeff(&self, m: usize) -> BigInt {
        let c = &self.coeffs[m];
        assert!(c.is_integer(), "coefficient a_{} = {} is not integral", m, c);
        c.to_integer()
    }
}

/// EGF of cos through `u^order`: a_{2m} = (-1)^m, odd coefficients 0.
pub fn series_cos(order: usize) -> UnivariateEgf {
    let coeffs = (0..=order)
        .map(|m| {
            if m % 2 != 0 {
                Rational::zero()
            } else if (m / 2) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            }
        })
        .collect();
    UnivariateEgf::new(coeffs)
}

/// EGF of sin through `u^order`: a_{2m+1} = (-1)^m, even coefficients 0.
pub fn series_sin(order: usize) -> UnivariateEgf {
    let coeffs = (0..=order)
        .map(|m| {
            if m % 2 == 0 {
                Rational::zero()
            } else if ((m - 1) / 2) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            }
        })
        .collect();
    UnivariateEgf::new(coeffs)
}

/// EGF of sec = 1/cos; a_{2n} is the secant number E_{2n}.
pub fn series_sec(order: usize) -> UnivariateEgf {
    egf_inverse(&series_cos(order))
}

/// EGF of tan = sin/cos; a_{2n+1} is the tangent number T_{2n+1}.
pub fn series_tan(order: usize) -> UnivariateEgf {
    egf_mul(&series_sin(order), &series_sec(order))
}

/// Tangent number T_m (m odd) as an integer, from the tan series.
pub fn tangent_number(m: usize) -> BigInt {
    assert!(m % 2 == 1, "tangent numbers are indexed by odd m");
    series_tan(m).integer_coeff(m)
}

/// Secant number E_m (m even) as an integer, from the sec series.
pub fn secant_number(m: usize) -> BigInt {
    assert!(m % 2 == 0, "secant numbers are indexed by even m");
    series_sec(m).integer_coeff(m)
}

/// EGF product: c_m = sum_p C(m,p) a_p b_{m-p}, truncated at the common order.
pub fn egf_mul(a: &UnivariateEgf, b: &UnivariateEgf) -> UnivariateEgf {
    assert_eq!(a.order(), b.order(), "egf_mul: order mismatch");
    let n = a.order();
    let coeffs = (0..=n)
        .map(|m| {
            (0..=m)
                .map(|p| Rational::from_integer(binomial(m, p)) * a.coeff(p) * b.coeff(m - p))
                .sum()
        })
        .collect();
    UnivariateEgf::new(coeffs)
}

/// Multiplicative inverse: b with egf_mul(a, b) = 1 through the order.
///
/// Solves incrementally: C(m,0) a_0 b_m = -sum_{p>=1} C(m,p) a_p b_{m-p}.
pub fn egf_inverse(a: &UnivariateEgf) -> UnivariateEgf {
    assert!(!a.coeff(0).is_zero(), "egf_inverse: zero constant term");
    let n = a.order();
    let mut b = vec![Rational::zero(); n + 1];
    b[0] = a.coeff(0).recip();
    for m in 1..=n {
        let mut s = Rational::zero();
        for p in 1..=m {
            s += Rational::from_integer(binomial(m, p)) * a.coeff(p) * &b[m - p];
        }
        b[m] = -s / a.coeff(0);
    }
    UnivariateEgf::new(b)
}

/// Truncated bivariate EGF: `sum c_{i,j} x^i y^j / (i! j!)` over i+j <= order.
/// Absent keys are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    order: usize,
    coeffs: BTreeMap<(usize, usize), Rational>,
}

impl BivariateSeries {
    pub fn new(order: usize) -> Self {
        BivariateSeries { order, coeffs: BTreeMap::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: Rational) {
        assert!(i + j <= self.order, "coefficient ({},{}) beyond truncation", i, j);
        if c.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), c);
        }
    }

    /// True iff c_{i,j} = c_{j,i} for all stored coefficients.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&(i, j), c)| self.coeff(j, i) == *c)
    }

    /// Partial derivative: EGF differentiation is an index shift,
    /// c_{i,j} of the result is c_{i+dx, j+dy} of self. The truncation
    /// order drops by dx + dy.
    pub fn derivative(&self, dx: usize, dy: usize) -> BivariateSeries {
        let shift = dx + dy;
        assert!(self.order >= shift, "derivative drops below order 0");
        let mut out = BivariateSeries::new(self.order - shift);
        for i in 0..=out.order {
            for j in 0..=(out.order - i) {
                out.set_coeff(i, j, self.coeff(i + dx, j + dy));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> BivariateSeries {
        let mut out = BivariateSeries::new(self.order);
        for (&(i, j), v) in &self.coeffs {
            out.set_coeff(i, j, v * c);
        }
        out
    }

    pub fn add(&self, other: &BivariateSeries) -> BivariateSeries {
        assert_eq!(self.order, other.order, "bivariate add: order mismatch");
        let mut out = self.clone();
        for (&(i, j), v) in &other.coeffs {
            let c = out.coeff(i, j) + v;
            out.set_coeff(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &BivariateSeries) -> BivariateSeries {
        out_sub(self, other)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|c| c.is_zero())
    }

    /// Substitute y := sign * x and read off the univariate EGF in x:
    /// a_m = sum_{i+j=m} C(m, j) sign^j c_{i,j}.
    pub fn diagonal(&self, sign: i64) -> UnivariateEgf {
        assert!(sign == 1 || sign == -1);
        let coeffs = (0..=self.order)
            .map(|m| {
                let mut s = Rational::zero();
                for j in 0..=m {
                    let mut term = Rational::from_integer(binomial(m, j)) * self.coeff(m - j, j);
                    if sign < 0 && j % 2 == 1 {
                        term = -term;
                    }
                    s += term;
                }
                s
            })
            .collect();
        UnivariateEgf::new(coeffs)
    }
}

fn out_sub(a: &BivariateSeries, b: &BivariateSeries) -> BivariateSeries {
    assert_eq!(a.order(), b.order(), "bivariate sub: order mismatch");
    let mut out = a.clone();
    for (&(i, j), v) in &b.coeffs {
        let c = out.coeff(i, j) - v;
        out.set_coeff(i, j, c);
    }
    out
}

/// Bivariate series of f(x+y) (sign = +1) or f(x-y) (sign = -1).
///
/// By the EGF substitution law c_{i,j} = a_{i+j} for x+y, and
/// c_{i,j} = (-1)^j a_{i+j} for x-y.
pub fn bivar_from_sum(f: &UnivariateEgf, sign: i64) -> BivariateSeries {
    assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
    let n = f.order();
    let mut out = BivariateSeries::new(n);
    for i in 0..=n {
        for j in 0..=(n - i) {
            let mut c = f.coeff(i + j).clone();
            if sign < 0 && j % 2 == 1 {
                c = -c;
            }
            out.set_coeff(i, j, c);
        }
    }
    out
}

/// Bivariate EGF product:
/// c_{i,j} = sum_{p,q} C(i,p) C(j,q) a_{p,q} b_{i-p,j-q}.
pub fn bivar_mul(a: &BivariateSeries, b: &BivariateSeries) -> BivariateSeries {
    assert_eq!(a.order(), b.order(), "bivar_mul: order mismatch");
    let n = a.order();
    let mut out = BivariateSeries::new(n);
    for i in 0..=n {
        for j in 0..=(n - i) {
            let mut s = Rational::zero();
            for p in 0..=i {
                let bi = Rational::from_integer(binomial(i, p));
                for q in 0..=j {
                    let apq = a.coeff(p, q);
                    if apq.is_zero() {
                        continue;
                    }
                    s += &bi * Rational::from_integer(binomial(j, q)) * apq * b.coeff(i - p, j - q);
                }
            }
            out.set_coeff(i, j, s);
        }
    }
    out
}

/// True iff every coefficient is a non-negative integer.
pub fn all_nonneg_integers(f: &UnivariateEgf) -> bool {
    f.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
}
