//! The Gamma matrix of a triangle and its bivariate generating function.
//!
//! A triangle f_n(k) rearranges into the matrix gamma_{i,j} = f_n(k) with
//! k = j + 1 and 2n = 2 + i + j on even anti-diagonals, zero on odd ones.
//! Its bivariate EGF Z(x,y) satisfies a PDE equivalent to the triangle
//! recurrence and has the closed forms sec(x+y)cos(x-y) (tan case) and
//! sec^2(x+y)cos(x-y) (sec case).

use crate::exact::{
    binomial, bivar_from_sum, bivar_mul, egf_mul, rat, series_cos, series_sec, BivariateSeries,
    Rational, UnivariateEgf,
};
use crate::triangle::{Kind, Triangle};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Anti-diagonal truncation of the infinite Gamma matrix: entries
/// gamma_{i,j} for i + j <= order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaMatrix {
    order: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl GammaMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i + j <= self.order, "entry ({},{}) beyond truncation", i, j);
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }
}

/// Places the triangle entries per the index map i = 2n-1-k, j = k-1;
/// odd anti-diagonals stay zero.
pub fn gamma_from_triangle(t: &Triangle, order: usize) -> GammaMatrix {
    let needed = (2 + order) / 2;
    assert!(
        t.n_max() >= needed,
        "triangle has {} rows but order {} needs {}",
        t.n_max(),
        order,
        needed
    );
    let mut g = GammaMatrix { order, entries: BTreeMap::new() };
    for s in (0..=order).step_by(2) {
        let n = (2 + s) / 2;
        for j in 0..=s {
            let i = s - j;
            let k = j + 1;
            g.set_entry(i, j, t.entry(n, k).clone());
        }
    }
    g
}

/// True iff gamma_{i,j} = 2 gamma_{i-1,j-1} + (gamma_{i-1,j+1} +
/// gamma_{i+1,j-1}) / 2 wherever all four indices fit the truncation.
pub fn check_gamma_recurrence(g: &GammaMatrix) -> bool {
    let n = g.order();
    let half = rat(1) / rat(2);
    for i in 1..=n {
        for j in 1..=n {
            if i + j > n || (i - 1) + (j + 1) > n || (i + 1) + (j - 1) > n {
                continue;
            }
            let rhs = rat(2) * g.entry(i - 1, j - 1)
                + &half * (g.entry(i - 1, j + 1) + g.entry(i + 1, j - 1));
            if g.entry(i, j) != rhs {
                return false;
            }
        }
    }
    true
}

/// The bivariate EGF with c_{i,j} = gamma_{i,j}.
pub fn z_series(g: &GammaMatrix) -> BivariateSeries {
    let mut z = BivariateSeries::new(g.order());
    for (&(i, j), v) in &g.entries {
        z.set_coeff(i, j, v.clone());
    }
    z
}

/// The closed-form right-hand side: sec(x+y)cos(x-y) for the tan triangle,
/// sec^2(x+y)cos(x-y) for the sec triangle.
pub fn closed_form(kind: Kind, order: usize) -> BivariateSeries {
    let sec = series_sec(order);
    let cos_diff = bivar_from_sum(&series_cos(order), -1);
    let front = match kind {
        Kind::Tan => bivar_from_sum(&sec, 1),
        Kind::Sec => bivar_from_sum(&egf_mul(&sec, &sec), 1),
    };
    bivar_mul(&front, &cos_diff)
}

/// True iff d2Z/dxdy = 2Z + (d2Z/dx2 + d2Z/dy2) / 2 through order N-2.
/// Differentiation shifts indices, so the top two anti-diagonals are lost.
pub fn check_pde(z: &BivariateSeries) -> bool {
    assert!(z.order() >= 2, "pde check needs order >= 2");
    let lhs = z.derivative(1, 1);
    let target = lhs.order();
    let half = rat(1) / rat(2);
    let rhs = z
        .derivative(2, 0)
        .add(&z.derivative(0, 2))
        .scale(&half)
        .add(&shrink(z, target).scale(&rat(2)));
    lhs.sub(&rhs).is_zero()
}

fn shrink(z: &BivariateSeries, order: usize) -> BivariateSeries {
    let mut out = BivariateSeries::new(order);
    for i in 0..=order {
        for j in 0..=(order - i) {
            out.set_coeff(i, j, z.coeff(i, j));
        }
    }
    out
}

/// Rebuilds Gamma from its first row and column alone (f(x) = 1 for tan,
/// f(x) = sec x for sec) using only the recurrence and parity relations:
/// each even anti-diagonal solves a small tridiagonal system with the
/// previous anti-diagonal on the right-hand side.
pub fn reconstruct_gamma(kind: Kind, order: usize) -> GammaMatrix {
    let sec = series_sec(order);
    let border = |m: usize| -> Rational {
        match kind {
            Kind::Tan => {
                if m == 0 {
                    rat(1)
                } else {
                    rat(0)
                }
            }
            Kind::Sec => sec.coeff(m).clone(),
        }
    };
    let mut g = GammaMatrix { order, entries: BTreeMap::new() };
    for s in (0..=order).step_by(2) {
        g.set_entry(0, s, border(s));
        if s == 0 {
            continue;
        }
        g.set_entry(s, 0, border(s));
        // Unknowns u_i = gamma_{i, s-i}, 1 <= i <= s-1. The recurrence at
        // (i, s-i) reads u_{i-1} - 2 u_i + u_{i+1} = -4 gamma_{i-1, s-i-1}
        // after doubling; borders u_0 and u_s move to the right-hand side.
        let m = s - 1;
        let mut rhs: Vec<Rational> = (1..=m)
            .map(|i| rat(-4) * g.entry(i - 1, s - i - 1))
            .collect();
        rhs[0] -= g.entry(0, s);
        rhs[m - 1] -= g.entry(s, 0);
        let sol = solve_unit_tridiagonal(&rhs);
        for (idx, v) in sol.into_iter().enumerate() {
            let i = idx + 1;
            g.set_entry(i, s - i, v);
        }
    }
    g
}

// Same band structure as the triangle solver (-2 diagonal, 1 off); kept
// local so the reconstruction shares no code with gamma_from_triangle's
// input path.
fn solve_unit_tridiagonal(rhs: &[Rational]) -> Vec<Rational> {
    let m = rhs.len();
    let mut pivot: Vec<Rational> = Vec::with_capacity(m);
    let mut r = rhs.to_vec();
    pivot.push(rat(-2));
    for i in 1..m {
        let p = rat(-2) - pivot[i - 1].recip();
        let carry = r[i - 1].clone() / &pivot[i - 1];
        r[i] -= carry;
        pivot.push(p);
    }
    let mut x = vec![Rational::zero(); m];
    x[m - 1] = r[m - 1].clone() / &pivot[m - 1];
    for i in (0..m - 1).rev() {
        x[i] = (&r[i] - &x[i + 1]) / &pivot[i];
    }
    x
}

/// One binomial identity instance with both sides evaluated.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// The four binomial identities relating rows n+1 of the triangles to
/// 4^n E_{2n}, 4^n T_{2n+1} and (-1)^n 4^n, for n = 1..=n_max.
///
/// The alternating sums carry the sign (-1)^{k+1}: the literal (-1)^k
/// version is off by a global sign, pinned here by the n = 1 cases
/// (g_2 = (0,2,0) and h_2 = (1,3,1) both give -4 = (-1)^1 4^1).
pub fn check_identities(
    g_triangle: &Triangle,
    h_triangle: &Triangle,
    n_max: usize,
) -> Vec<IdentityCheck> {
    use crate::exact::{secant_number, tangent_number};
    assert_eq!(g_triangle.kind, Kind::Tan);
    assert_eq!(h_triangle.kind, Kind::Sec);
    assert!(
        g_triangle.n_max() > n_max && h_triangle.n_max() > n_max,
        "triangles must be solved through n_max + 1"
    );
    let mut out = Vec::new();
    let mut push = |name: &str, n: usize, lhs: BigInt, rhs: BigInt| {
        out.push(IdentityCheck {
            name: name.to_string(),
            n,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass: lhs == rhs,
        });
    };
    for n in 1..=n_max {
        let pow4 = BigInt::from(4).pow(n as u32);
        let signed_pow4 = if n % 2 == 1 { -pow4.clone() } else { pow4.clone() };
        let sums = |t: &Triangle| -> (BigInt, BigInt) {
            let mut plain = BigInt::zero();
            let mut alternating = BigInt::zero();
            for k in 1..=(2 * n + 1) {
                let term = binomial(2 * n, k - 1) * t.entry(n + 1, k).to_integer();
                if k % 2 == 1 {
                    alternating += &term;
                } else {
                    alternating -= &term;
                }
                plain += term;
            }
            (plain, alternating)
        };
        let (g_plain, g_alt) = sums(g_triangle);
        let (h_plain, h_alt) = sums(h_triangle);
        push(
            "sum C(2n,k-1) g_{n+1}(k) = 4^n E_{2n}",
            n,
            g_plain,
            &pow4 * secant_number(2 * n),
        );
        push(
            "sum (-1)^{k+1} C(2n,k-1) g_{n+1}(k) = (-1)^n 4^n",
            n,
            g_alt,
            signed_pow4.clone(),
        );
        push(
            "sum C(2n,k-1) h_{n+1}(k) = 4^n T_{2n+1}",
            n,
            h_plain,
            &pow4 * tangent_number(2 * n + 1),
        );
        push(
            "sum (-1)^{k+1} C(2n,k-1) h_{n+1}(k) = (-1)^n 4^n",
            n,
            h_alt,
            signed_pow4,
        );
    }
    out
}

/// Diagonal specializations of the closed form, each as a univariate EGF
/// comparison: Z^tan(x,x) = sec 2x, Z^tan(x,-x) = cos 2x,
/// Z^sec(x,x) = sec^2 2x, Z^sec(x,-x) = cos 2x.
pub fn check_diagonal_specializations(kind: Kind, z: &BivariateSeries) -> bool {
    let order = z.order();
    let scale_arg = |f: &UnivariateEgf| -> UnivariateEgf {
        // f(2x): a_m picks up a factor 2^m
        let coeffs = (0..=order)
            .map(|m| f.coeff(m) * Rational::from_integer(BigInt::one() << m))
            .collect();
        UnivariateEgf::new(coeffs)
    };
    let sec2x = scale_arg(&series_sec(order));
    let cos2x = scale_arg(&series_cos(order));
    let expected_sum = match kind {
        Kind::Tan => sec2x,
        Kind::Sec => {
            let sec = series_sec(order);
            scale_arg(&egf_mul(&sec, &sec))
        }
    };
    z.diagonal(1) == expected_sum && z.diagonal(-1) == cos2x
}
