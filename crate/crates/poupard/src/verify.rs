//! Verification suites, one per family of invariants. Each suite returns
//! a report with both sides of every check recorded.

use crate::alternating::{
    alternating_permutations, check_distribution_recurrence, grn_distribution, special_values,
};
use crate::exact::{secant_number, tangent_number};
use crate::genfun::{
    check_diagonal_specializations, check_gamma_recurrence, check_identities, check_pde,
    closed_form, gamma_from_triangle, reconstruct_gamma, z_series,
};
use crate::report::VerifyReport;
use crate::trees::{enumerate_trees, eoc_distribution, pom_distribution, spreading_out};
use crate::triangle::{solve_diagonal, solve_forward, Kind};

/// Regime equivalence, recurrence residuals, integrality, row sums against
/// the series module, border values, symmetry, divisibility.
pub fn triangle_suite(n_max: usize) -> VerifyReport {
    let mut r = VerifyReport::new("triangle");
    for kind in [Kind::Tan, Kind::Sec] {
        let label = match kind {
            Kind::Tan => "tan",
            Kind::Sec => "sec",
        };
        let forward = solve_forward(kind, n_max);
        let diagonal = solve_diagonal(kind, n_max);
        r.push_bool(
            "regime equivalence (forward = diagonal)",
            format!("kind={label}, n_max={n_max}"),
            forward.rows() == diagonal.rows(),
        );
        r.push_bool(
            "recurrence residual zero",
            format!("kind={label}, n_max={n_max}"),
            forward.check_recurrence(),
        );
        r.push_bool(
            "entries are non-negative integers",
            format!("kind={label}, n_max={n_max}"),
            forward.check_integrality(),
        );
        r.push_bool(
            "row symmetry",
            format!("kind={label}, n_max={n_max}"),
            forward.check_symmetry(),
        );
        for (i, sum) in forward.row_sums().iter().enumerate() {
            let n = i + 1;
            let expected = match kind {
                Kind::Tan => tangent_number(2 * n - 1),
                Kind::Sec => secant_number(2 * n),
            };
            r.push(
                "row sum equals series coefficient",
                format!("kind={label}, n={n}"),
                sum.to_integer().to_string(),
                expected.to_string(),
            );
        }
        for n in 2..=n_max {
            let expected = match kind {
                Kind::Tan => "0".to_string(),
                Kind::Sec => secant_number(2 * n - 2).to_string(),
            };
            r.push(
                "border values",
                format!("kind={label}, n={n}"),
                format!("{},{}", forward.entry(n, 1), forward.entry(n, 2 * n - 1)),
                format!("{expected},{expected}"),
            );
        }
        if kind == Kind::Tan {
            r.push_bool(
                "2^{n-1} divides g_n(k)",
                format!("n_max={n_max}"),
                forward.check_divisibility(),
            );
        }
    }
    r
}

/// grn distributions against triangle rows, closed-form special values,
/// the distribution recurrence, and cardinalities.
pub fn special_values_suite(m_max: usize) -> VerifyReport {
    let mut r = VerifyReport::new("special-values");
    let rows = m_max / 2 + 1;
    let g = solve_forward(Kind::Tan, rows);
    let h = solve_forward(Kind::Sec, rows);
    let mut dists = Vec::new();
    for m in 1..=m_max {
        let dist = grn_distribution(m);
        let expected = if m % 2 == 1 {
            tangent_number(m)
        } else {
            secant_number(m)
        };
        r.push(
            "cardinality of A_m",
            format!("m={m}"),
            dist.total().to_string(),
            expected.to_string(),
        );
        if m % 2 == 1 {
            let n = (m + 1) / 2;
            let ok = (1..=(2 * n - 1)).all(|k| {
                g.entry(n, k).to_integer() == dist.count(k - 1).into()
            });
            r.push_bool("g_n(k) = #A_{2n-1,k-1}", format!("m={m}"), ok);
        } else {
            let n = m / 2;
            let ok = (1..=(2 * n - 1)).all(|k| {
                h.entry(n, k).to_integer() == dist.count(k).into()
            });
            r.push_bool("h_n(k) = #A_{2n,k}", format!("m={m}"), ok);
        }
        for sv in special_values(m) {
            r.push(&sv.relation, format!("m={m}"), sv.lhs, sv.rhs);
        }
        dists.push(dist);
    }
    for m in 7..=m_max {
        r.push_bool(
            "delta^2 #A_{m,k} + 4 #A_{m-2,k} = 0",
            format!("m={m}"),
            check_distribution_recurrence(&dists[m - 1], &dists[m - 3]),
        );
    }
    r
}

/// Projection / spreading-out inverses, pom = grn of the projection, equidistribution of
/// eoc - 1 with pom, and the arity axiom, over fully enumerated T_n.
pub fn bijection_suite(n_max: usize) -> VerifyReport {
    let mut r = VerifyReport::new("bijection");
    for n in 1..=n_max {
        let mut trees_seen = 0u64;
        let mut roundtrip = true;
        let mut pom_matches_grn = true;
        let mut arity = true;
        enumerate_trees(n, |t| {
            trees_seen += 1;
            let sigma = t.projection();
            roundtrip &= spreading_out(&sigma) == *t;
            pom_matches_grn &= t.pom() == sigma.grn();
            arity &= t.check_arity_axiom();
        });
        let expected = if n % 2 == 1 {
            tangent_number(n)
        } else {
            secant_number(n)
        };
        r.push("cardinality of T_n", format!("n={n}"), trees_seen.to_string(), expected.to_string());
        r.push_bool("spreading_out after projection is identity", format!("n={n}"), roundtrip);
        r.push_bool("pom(t) = grn(projection(t))", format!("n={n}"), pom_matches_grn);
        r.push_bool("arity axiom holds on every tree", format!("n={n}"), arity);

        let perm_roundtrip = alternating_permutations(n)
            .iter()
            .all(|p| spreading_out(p).projection() == *p);
        r.push_bool("projection after spreading_out is identity", format!("n={n}"), perm_roundtrip);

        r.push_bool(
            "eoc - 1 equidistributed with pom",
            format!("n={n}"),
            eoc_distribution(n) == pom_distribution(n),
        );
    }
    r
}

/// The closed form at truncation, the PDE, symmetry of Z, the diagonal
/// specializations, the Gamma recurrence and the border reconstruction.
pub fn genfun_suite(order: usize) -> VerifyReport {
    let mut r = VerifyReport::new("genfun");
    for kind in [Kind::Tan, Kind::Sec] {
        let label = match kind {
            Kind::Tan => "tan",
            Kind::Sec => "sec",
        };
        let t = solve_forward(kind, (2 + order) / 2);
        let gamma = gamma_from_triangle(&t, order);
        let z = z_series(&gamma);
        r.push_bool(
            "Z from triangle equals closed form",
            format!("kind={label}, order={order}"),
            z == closed_form(kind, order),
        );
        r.push_bool("Gamma recurrence", format!("kind={label}, order={order}"), check_gamma_recurrence(&gamma));
        r.push_bool("PDE residual zero", format!("kind={label}, order={order}"), check_pde(&z));
        r.push_bool("Z symmetric in x and y", format!("kind={label}, order={order}"), z.is_symmetric());
        r.push_bool(
            "diagonal specializations",
            format!("kind={label}, order={order}"),
            check_diagonal_specializations(kind, &z),
        );
        r.push_bool(
            "border reconstruction matches",
            format!("kind={label}, order={order}"),
            reconstruct_gamma(kind, order) == gamma,
        );
    }
    r
}

/// The four binomial identities for n = 1..=n_max.
pub fn identities_suite(n_max: usize) -> VerifyReport {
    let mut r = VerifyReport::new("identities");
    let g = solve_forward(Kind::Tan, n_max + 1);
    let h = solve_forward(Kind::Sec, n_max + 1);
    for check in check_identities(&g, &h, n_max) {
        r.push(&check.name, format!("n={}", check.n), check.lhs, check.rhs);
    }
    r
}

/// Direct enumeration against the filter-all-permutations oracle.
pub fn enumeration_oracle_suite(n_max: usize) -> VerifyReport {
    let mut r = VerifyReport::new("enumeration-oracle");
    for n in 1..=n_max {
        let direct: Vec<Vec<usize>> = alternating_permutations(n)
            .into_iter()
            .map(|p| p.values().to_vec())
            .collect();
        let filtered = filter_oracle(n);
        r.push_bool(
            "backtracking enumeration equals filtered n!",
            format!("n={n}"),
            direct == filtered,
        );
    }
    r
}

/// Brute-force oracle: generate all n! permutations in lexicographic order
/// and keep the alternating ones. Independent of the backtracking path.
fn filter_oracle(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        if crate::alternating::is_alternating(&current) {
            out.push(current.clone());
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Default desk-scale budgets per suite.
pub mod defaults {
    pub const TRIANGLE_N_MAX: usize = 20;
    pub const PERM_M_MAX: usize = 11;
    pub const TREE_N_MAX: usize = 11;
    pub const SERIES_ORDER: usize = 16;
    pub const IDENTITIES_N_MAX: usize = 10;
    pub const ORACLE_N_MAX: usize = 8;
}

/// Everything, at the default budgets.
pub fn all_suites() -> VerifyReport {
    let mut r = VerifyReport::new("all");
    r.merge(triangle_suite(defaults::TRIANGLE_N_MAX));
    r.merge(special_values_suite(defaults::PERM_M_MAX));
    r.merge(bijection_suite(defaults::TREE_N_MAX));
    r.merge(genfun_suite(defaults::SERIES_ORDER));
    r.merge(identities_suite(defaults::IDENTITIES_N_MAX));
    r.merge(enumeration_oracle_suite(defaults::ORACLE_N_MAX));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(triangle_suite(8).all_pass());
        assert!(special_values_suite(8).all_pass());
        assert!(bijection_suite(7).all_pass());
        assert!(genfun_suite(10).all_pass());
        assert!(identities_suite(5).all_pass());
        assert!(enumeration_oracle_suite(6).all_pass());
    }

    #[test]
    fn summary_counts_tally() {
        let r = triangle_suite(5);
        assert_eq!(r.summary.pass + r.summary.fail, r.checks.len());
    }
}
