//! The finite-difference triangles.
//!
//! Solves `delta^2 f_n(k) + 4 f_{n-1}(k) = 0` under the four boundary
//! regimes, by forward propagation and by exact tridiagonal elimination,
//! producing the tangent triangle `g_n(k)` and the secant triangle
//! `h_n(k)`. Indexing is 1-based to match `f_n(k)`, n = 1..=n_max,
//! k = 1..=2n-1; the conversion to 0-based storage happens only at the
//! access boundary.

use crate::exact::{rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Tan,
    Sec,
}

/// Which pair of boundary conditions produced the triangle:
/// `R1` = [tan1]/[sec1] (first two entries of each row given),
/// `R2` = [tan2]/[sec2] (the two bordered diagonals given).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    R1,
    R2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub kind: Kind,
    pub regime: Regime,
    rows: Vec<Vec<Rational>>,
}

/// First difference delta f(k) = row[k+1] - row[k], 1-based k.
pub fn delta(row: &[Rational], k: usize) -> Rational {
    assert!(k >= 1 && k <= row.len() - 1, "delta: index {} out of range", k);
    &row[k] - &row[k - 1]
}

/// Second difference row[k+2] - 2 row[k+1] + row[k], 1-based k.
pub fn delta2(row: &[Rational], k: usize) -> Rational {
    assert!(k >= 1 && k + 1 < row.len(), "delta2: index {} out of range", k);
    &row[k + 1] - rat(2) * &row[k] + &row[k - 1]
}

impl Triangle {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Row n (1-based); has exactly 2n-1 entries.
    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n - 1]
    }

    /// Entry f_n(k), 1-based in both indices.
    pub fn entry(&self, n: usize, k: usize) -> &Rational {
        &self.rows[n - 1][k - 1]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Per-row sums; row n of the tan triangle sums to T_{2n-1},
    /// row n of the sec triangle to E_{2n}.
    pub fn row_sums(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// True iff every row is palindromic (g_n(k) = g_n(2n-k)).
    pub fn check_symmetry(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.iter().zip(r.iter().rev()).all(|(a, b)| a == b))
    }

    /// True iff 2^{n-1} divides every entry of row n. Only meaningful for
    /// the tan triangle.
    pub fn check_divisibility(&self) -> bool {
        assert_eq!(self.kind, Kind::Tan, "divisibility check applies to the tan triangle");
        self.rows.iter().enumerate().all(|(i, row)| {
            let divisor = BigInt::one() << i;
            row.iter().all(|e| {
                e.is_integer() && (e.to_integer() % &divisor).is_zero()
            })
        })
    }

    /// True iff delta^2 f_n(k) + 4 f_{n-1}(k) = 0 for all n >= 2,
    /// 1 <= k <= 2n-3.
    pub fn check_recurrence(&self) -> bool {
        (2..=self.n_max()).all(|n| {
            (1..=(2 * n - 3)).all(|k| {
                (delta2(self.row(n), k) + rat(4) * self.entry(n - 1, k)).is_zero()
            })
        })
    }

    /// True iff every entry is a non-negative integer.
    pub fn check_integrality(&self) -> bool {
        self.rows
            .iter()
            .flatten()
            .all(|e| e.is_integer() && !e.is_negative())
    }

    /// CSV: one row per line, comma-separated values, LF terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON with stable key order: {"kind", "regime", "rows"}.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Repr {
            kind: Kind,
            regime: Regime,
            rows: Vec<Vec<String>>,
        }
        let repr = Repr {
            kind: self.kind,
            regime: self.regime,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect(),
        };
        serde_json::to_string(&repr).expect("triangle serialization cannot fail")
    }
}

fn row_sum(row: &[Rational]) -> Rational {
    row.iter().sum()
}

/// Solve under [tan1]/[sec1]: the first two entries of each row come from
/// the regime, the rest propagate left to right through the recurrence
/// f_n(k+2) = 2 f_n(k+1) - f_n(k) - 4 f_{n-1}(k).
pub fn solve_forward(kind: Kind, n_max: usize) -> Triangle {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut rows: Vec<Vec<Rational>> = vec![vec![rat(1)]];
    for n in 2..=n_max {
        let prev = &rows[n - 2];
        let s = row_sum(prev);
        let mut row = Vec::with_capacity(2 * n - 1);
        match kind {
            Kind::Tan => {
                row.push(rat(0));
                row.push(rat(2) * &s);
            }
            Kind::Sec => {
                row.push(s.clone());
                row.push(rat(3) * &s);
            }
        }
        for k in 1..=(2 * n - 3) {
            let next = rat(2) * &row[k] - &row[k - 1] - rat(4) * &prev[k - 1];
            row.push(next);
        }
        rows.push(row);
    }
    Triangle { kind, regime: Regime::R1, rows }
}

/// Exact Thomas elimination for the tridiagonal system with -2 on the
/// diagonal, 1 on both off-diagonals. Returns the solution and |det|.
///
/// The pivots of the forward sweep are d_1 = -2, d_i = -2 - 1/d_{i-1};
/// the determinant is their product, (-1)^m (m+1) for size m.
fn solve_trigonal(rhs: &[Rational]) -> (Vec<Rational>, BigInt) {
    let m = rhs.len();
    assert!(m >= 1);
    let mut pivot = Vec::with_capacity(m);
    let mut rhs = rhs.to_vec();
    pivot.push(rat(-2));
    for i in 1..m {
        let p = rat(-2) - pivot[i - 1].recip();
        let carry = rhs[i - 1].clone() / &pivot[i - 1];
        rhs[i] -= carry;
        pivot.push(p);
    }
    let mut x = vec![Rational::zero(); m];
    x[m - 1] = rhs[m - 1].clone() / &pivot[m - 1];
    for i in (0..m - 1).rev() {
        x[i] = (&rhs[i] - &x[i + 1]) / &pivot[i];
    }
    let det: Rational = pivot.iter().product();
    assert!(det.is_integer(), "trigonal determinant must be integral");
    (x, det.to_integer().abs())
}

/// Solve under [tan2]/[sec2]: the two bordered diagonals come from the
/// regime; the interior of each row solves the trigonal linear system
/// formed by the recurrence, by exact elimination.
pub fn solve_diagonal(kind: Kind, n_max: usize) -> Triangle {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut rows: Vec<Vec<Rational>> = vec![vec![rat(1)]];
    for n in 2..=n_max {
        let prev = &rows[n - 2];
        let border = match kind {
            Kind::Tan => rat(0),
            Kind::Sec => row_sum(prev),
        };
        let width = 2 * n - 1;
        let interior = width - 2;
        // Equation k (1 <= k <= 2n-3):
        //   f_n(k) - 2 f_n(k+1) + f_n(k+2) = -4 f_{n-1}(k),
        // with f_n(1) = f_n(2n-1) = border moved to the right-hand side.
        let mut rhs: Vec<Rational> = (1..=interior)
            .map(|k| rat(-4) * &prev[k - 1])
            .collect();
        rhs[0] -= &border;
        rhs[interior - 1] -= &border;
        let (solution, det) = solve_trigonal(&rhs);
        // |det F| = size + 1 for this tridiagonal family.
        assert_eq!(det, BigInt::from(interior + 1), "unexpected trigonal determinant");
        let mut row = Vec::with_capacity(width);
        row.push(border.clone());
        row.extend(solution);
        row.push(border);
        rows.push(row);
    }
    Triangle { kind, regime: Regime::R2, rows }
}
