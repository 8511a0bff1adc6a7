//! Closed-form Betti numbers and upper bounds for balanced complexes.
//!
//! Everything here is plain integer arithmetic: no complex is ever built, so
//! these evaluators serve as independent cross-checks for the enumeration
//! engine. Binomials follow the convention C(a, b) = 0 for b < 0 or a < b.

use itertools::Itertools;

use crate::combinatorics::{binom, binom_u64, compositions, elementary_symmetric};
use crate::error::{Error, Result};
use crate::hochster::BettiTable;
use crate::lex::{bth_largest_deg2, bth_largest_sqfree_deg2};

/// Upper bound for `beta_{i,i+j}` of any Cohen-Macaulay complex of dimension
/// `d-1` on `n` vertices.
pub fn bound_general_cm(n: usize, d: usize, i: usize, j: usize) -> u64 {
    if i == 0 {
        return u64::from(j == 0);
    }
    let (n, d, i, j) = (n as i64, d as i64, i as i64, j as i64);
    binom_u64(i - 1 + j, j) * binom_u64(n - d + j, i + j)
}

/// Exact `beta_{i,i+j}` for the clique complex of the complete multipartite
/// graph with class sizes `sizes`.
pub fn betti_clique_multipartite(sizes: &[usize], i: usize, j: usize) -> u64 {
    let d = sizes.len();
    if j == 0 {
        return u64::from(i == 0);
    }
    if j > d {
        return 0;
    }
    let mut total = 0u64;
    for classes in (0..d).combinations(j) {
        for comp in compositions(i, j) {
            let mut term = 1u64;
            for (slot, &c) in comp.iter().enumerate() {
                term *= c as u64 * binom_u64(sizes[classes[slot]] as i64, c as i64 + 1);
                if term == 0 {
                    break;
                }
            }
            total += term;
        }
    }
    total
}

/// Variant of [`betti_clique_multipartite`] with the inner binomial shifted
/// down by two. Disagrees with the join computation; kept for comparison.
#[cfg(test)]
fn clique_multipartite_shifted_variant(sizes: &[usize], i: usize, j: usize) -> u64 {
    let d = sizes.len();
    if j == 0 {
        return u64::from(i == 0);
    }
    let mut total = 0u64;
    for classes in (0..d).combinations(j.min(d)) {
        for comp in compositions(i, j) {
            let mut term = 1u64;
            for (slot, &c) in comp.iter().enumerate() {
                term *= c as u64 * binom_u64(sizes[classes[slot]] as i64, c as i64 - 1);
            }
            total += term;
        }
    }
    total
}

/// `beta_{i,i+j}` of the (d-s-1)-skeleton of a Cohen-Macaulay complex with
/// Betti table `base` and face counts `f` (indexed by face size, `f[0] = 1`)
/// on `n` vertices, `dim = d-1`.
pub fn skeleton_betti_cm(
    base: &BettiTable,
    f: &[u64],
    n: usize,
    d: usize,
    s: usize,
    i: usize,
    j: usize,
) -> Result<u64> {
    if s < 1 || s >= d {
        return Err(Error::InvalidParams(format!(
            "skeleton codimension {s} must lie in 1..{d}"
        )));
    }
    if f.len() != d + 1 || base.num_vertices() != n {
        return Err(Error::DimensionMismatch);
    }
    let cut = d - s;
    if j < cut {
        return Ok(base.get(i, j));
    }
    if j > cut {
        return Ok(0);
    }
    let mut total: i128 = 0;
    for k in 0..=s {
        if k > i {
            break;
        }
        let term = base.get(i - k, j + k) as i128;
        total += if k % 2 == 0 { term } else { -term };
    }
    let (n_i, d_i, s_i, i_i) = (n as i64, d as i64, s as i64, i as i64);
    for t in 0..s as i64 {
        let term = binom(n_i - d_i + t, i_i - s_i + t) * f[(d_i - t) as usize] as i128;
        total += if (s_i - t - 1) % 2 == 0 { term } else { -term };
    }
    assert!(total >= 0, "skeleton formula went negative at i={i} j={j}");
    Ok(total as u64)
}

/// Full Betti table of the clique complex of a complete multipartite graph,
/// filled for homological indices up to `imax`.
fn clique_table(sizes: &[usize], imax: usize) -> BettiTable {
    let n: usize = sizes.iter().sum();
    let d = sizes.len();
    let mut table = BettiTable::zero(n, d);
    for j in 0..=d {
        for i in 0..=imax.min(n) {
            table.add(i, j, betti_clique_multipartite(sizes, i, j));
        }
    }
    table
}

/// Upper bound for `beta_{i,i+j}` of every balanced complex whose color
/// classes have sizes `sizes`; exact for strands `j >= d`.
pub fn bound_any_balanced(sizes: &[usize], i: usize, j: usize) -> u64 {
    let d = sizes.len();
    if j == 0 {
        return u64::from(i == 0);
    }
    if j >= d {
        return betti_clique_multipartite(sizes, i, j);
    }
    let n: usize = sizes.iter().sum();
    let base = clique_table(sizes, i);
    let f: Vec<u64> = (0..=d).map(|t| elementary_symmetric(sizes, t)).collect();
    skeleton_betti_cm(&base, &f, n, d, d - j, i, j)
        .expect("clique table and f-vector are built consistently")
}

/// Sharp upper bound for `h_2` of a balanced complex with the given vertex
/// partition.
pub fn h2_upper_bound(n: usize, d: usize, sizes: &[usize]) -> Result<u64> {
    check_partition(n, d, sizes)?;
    let squares: i128 = sizes.iter().map(|&s| binom(s as i64, 2)).sum();
    let total = binom(n as i64 - d as i64 + 1, 2) - squares;
    assert!(total >= 0);
    Ok(total as u64)
}

fn check_partition(n: usize, d: usize, sizes: &[usize]) -> Result<()> {
    if sizes.len() != d || sizes.iter().sum::<usize>() != n || sizes.iter().any(|&s| s == 0) {
        return Err(Error::InvalidParams(format!(
            "class sizes {sizes:?} do not partition {n} vertices into {d} nonempty classes"
        )));
    }
    Ok(())
}

/// Upper bound for `beta_{i,i+j}`, `j >= 2`, of an Artinian quotient of a
/// polynomial ring in `m` variables by an ideal with no linear forms and at
/// least `b` degree-2 generators.
pub fn bound_cm_deg2(m: usize, b: u64, i: usize, j: usize) -> Result<u64> {
    if j < 2 {
        return Err(Error::InvalidParams(format!(
            "strand {j} is below the degree-2 machinery range"
        )));
    }
    let (p, q) = bth_largest_deg2(m, b)?;
    let (m, p, q, i, j) = (m as i64, p as i64, q as i64, i as i64, j as i64);
    let mut total = 0u64;
    for l in (p + 1)..=m {
        total += binom_u64(l - p + j - 1, j) * binom_u64(l - 1, i - 1);
    }
    for l in (q + 1)..=m {
        total += binom_u64(l - q + j - 2, j - 1) * binom_u64(l - 1, i - 1);
    }
    Ok(total)
}

/// Upper bound for `beta_{i,i+j}`, `2 <= j <= d`, of a balanced
/// Cohen-Macaulay complex with vertex partition `sizes`.
pub fn bound_balanced_cm(n: usize, d: usize, sizes: &[usize], i: usize, j: usize) -> Result<u64> {
    check_partition(n, d, sizes)?;
    if j < 2 || j > d {
        return Err(Error::InvalidParams(format!(
            "strand {j} outside the bounded range 2..={d}"
        )));
    }
    let b: u64 = sizes.iter().map(|&s| binom_u64(s as i64, 2)).sum();
    if b == 0 {
        return Err(Error::InvalidParams(
            "every color class is a singleton; no degree-2 information".into(),
        ));
    }
    bound_cm_deg2(n - d, b, i, j)
}

/// Upper bound for `beta_{i,i+j}`, `i >= 1`, `j >= 2`, of an Artinian
/// quotient by an ideal containing all squares of the `m` variables and at
/// least `b` further squarefree degree-2 generators.
pub fn bound_lps(m: usize, b: u64, i: usize, j: usize) -> Result<u64> {
    if j < 2 {
        return Err(Error::InvalidParams(format!(
            "bound defined for strands j >= 2, got j={j}"
        )));
    }
    if i == 0 {
        return Ok(0);
    }
    let (p, q) = bth_largest_sqfree_deg2(m, b)?;
    let (m, p, q, i, j) = (m as i64, p as i64, q as i64, i as i64, j as i64);
    let mut total = 0u64;
    for k in 0..j {
        let left = binom_u64(m - p, k);
        if left > 0 {
            let mut inner = 0u64;
            for l in (p + j - k + 1)..=(m - k) {
                inner += binom_u64(l - p - 1, j - k) * binom_u64(l - j + k - 1, i - k - 1);
            }
            total += left * inner;
        }
        let mid = binom_u64(m - q, k);
        if mid > 0 {
            let mut inner = 0u64;
            for l in (q + j - k)..=(m - k) {
                inner += binom_u64(l - q - 1, j - k - 1) * binom_u64(l - j + k - 1, i - k - 1);
            }
            total += mid * inner;
        }
        let right = binom_u64(m - q, k - 1);
        if right > 0 {
            let mut inner = 0u64;
            for l in (q + j - k)..=(m - k) {
                inner += binom_u64(l - q, j - k) * binom_u64(l - j + k - 1, i - k - 1);
            }
            total += right * inner;
        }
    }
    total += binom_u64(m - j, i - j) * (binom_u64(m - p, j) + binom_u64(m - q, j - 1));
    Ok(total)
}

/// Upper bound for `beta_{i,i+j}`, `i >= 1`, `j >= 2`, of a balanced
/// Cohen-Macaulay complex, via the squares hiding in its colored linear
/// system of parameters.
pub fn bound_balanced_cm_lps(
    n: usize,
    d: usize,
    sizes: &[usize],
    i: usize,
    j: usize,
) -> Result<u64> {
    check_partition(n, d, sizes)?;
    let b: u64 = sizes.iter().map(|&s| binom_u64(s as i64 - 1, 2)).sum();
    if b == 0 {
        return Err(Error::InvalidParams(
            "no color class has three vertices; no squarefree degree-2 information".into(),
        ));
    }
    bound_lps(n - d, b, i, j)
}

/// Upper bound for the linear strand `beta_{i,i+1}` of a balanced normal
/// pseudomanifold of dimension `d-1 >= 2` on `n` vertices.
pub fn bound_pseudo_linear(n: usize, d: usize, i: usize) -> Result<u64> {
    if d < 3 {
        return Err(Error::InvalidParams(format!(
            "pseudomanifold bound needs d >= 3, got {d}"
        )));
    }
    let (n_i, d_i) = (n as i64, d as i64);
    let b = (n_i - d_i) * (n_i - 2 * d_i + 2) / 2;
    if n_i - d_i - 1 < 1 || b < 1 {
        return Err(Error::InvalidParams(format!(
            "{n} vertices is too small for the degree-2 count at d={d}"
        )));
    }
    let (p, q) = bth_largest_deg2(n - d - 1, b as u64)?;
    let (p, q, i) = (p as i64, q as i64, i as i64);
    let total = (p - 1) as i128 * binom(n_i - d_i - 1, i) - binom(p, i + 1) + binom(q, i);
    assert!(total >= 0, "pseudomanifold bound went negative at i={i}");
    Ok(total as u64)
}

/// Upper bound for the linear strand of any normal pseudomanifold of
/// dimension `d-1 >= 2`; attained by stacked spheres.
pub fn bound_pseudo_general(n: usize, d: usize, i: usize) -> u64 {
    i as u64 * binom_u64(n as i64 - d as i64, i as i64 + 1)
}

/// Exact linear strand of the join of a `(d-2)`-simplex with `n-d+1`
/// isolated points.
pub fn betti_cone_join_linear(n: usize, d: usize, i: usize) -> u64 {
    i as u64 * binom_u64(n as i64 - d as i64 + 1, i as i64 + 1)
}

/// Exact `beta_{i,i+j}` of any stacked cross-polytopal sphere built from
/// `k-1` copies of the boundary of the `d`-dimensional cross-polytope.
pub fn betti_cross_stacked_closed(k: usize, d: usize, i: usize, j: usize) -> Result<u64> {
    check_cross_stacked_params(k, d)?;
    let pd = (k - 1) * d;
    if i > pd || j > d {
        return Ok(0);
    }
    if j == 0 {
        return Ok(u64::from(i == 0));
    }
    if j == d {
        return Ok(u64::from(i == pd));
    }
    let (k_i, d_i, i_i) = (k as i64, d as i64, i as i64);
    let value: i128 = if j == 1 {
        (k_i - 2) as i128 * binom(d_i * (k_i - 1), i_i + 1)
            - (k_i - 1) as i128 * binom(d_i * (k_i - 2), i_i + 1)
            + (d_i * (k_i - 1)) as i128 * binom(d_i * (k_i - 2), i_i - 1)
    } else if j == d - 1 {
        (k_i - 2) as i128 * binom(d_i * (k_i - 1), i_i - 1)
            - (k_i - 1) as i128 * binom(d_i * (k_i - 2), i_i - d_i - 1)
            + (d_i * (k_i - 1)) as i128 * binom(d_i * (k_i - 2), i_i - d_i + 1)
    } else {
        (k_i - 1) as i128 * binom(d_i, j as i64) * binom(d_i * (k_i - 2), i_i - j as i64)
    };
    assert!(value >= 0, "cross-polytopal formula went negative at i={i} j={j}");
    Ok(value as u64)
}

/// Same numbers as [`betti_cross_stacked_closed`] for strands
/// `1 <= j <= d-2`, evaluated by peeling off one cross-polytope at a time.
pub fn betti_cross_stacked_recursive(k: usize, d: usize, i: usize, j: usize) -> Result<u64> {
    check_cross_stacked_params(k, d)?;
    if j < 1 || j > d - 2 {
        return Err(Error::InvalidParams(format!(
            "recursion covers strands 1..={}, got {j}",
            d - 2
        )));
    }
    let pd = (k - 1) * d;
    let mut row = vec![0u64; pd + 2];
    row[j] = binom_u64(d as i64, j as i64);
    for step in 3..=k {
        let prev = row;
        let mut next = vec![0u64; pd + 2];
        let rest = (step as i64 - 2) * d as i64;
        for (ti, slot) in next.iter_mut().enumerate() {
            let ti_i = ti as i64;
            let mut v = 0u64;
            for l in 0..=d.min(ti) {
                v += binom_u64(d as i64, l as i64) * prev[ti - l];
            }
            if j == 1 {
                v += d as u64 * binom_u64(rest, ti_i - 1);
                for l in 1..=d.min(ti) {
                    v += binom_u64(d as i64, l as i64) * binom_u64(rest, ti_i + 1 - l as i64);
                }
            } else {
                v += binom_u64(d as i64, j as i64) * binom_u64(rest, ti_i - j as i64);
            }
            *slot = v;
        }
        row = next;
    }
    Ok(row.get(i).copied().unwrap_or(0))
}

fn check_cross_stacked_params(k: usize, d: usize) -> Result<()> {
    if d < 3 || k < 2 {
        return Err(Error::InvalidParams(format!(
            "stacked cross-polytopal formulas need d >= 3 and k >= 2, got d={d} k={k}"
        )));
    }
    Ok(())
}

/// Full Betti table of a stacked cross-polytopal sphere on `k*d` vertices.
pub fn cross_stacked_table(k: usize, d: usize) -> Result<BettiTable> {
    check_cross_stacked_params(k, d)?;
    let n = k * d;
    let mut table = BettiTable::zero(n, d);
    for j in 0..=d {
        for i in 0..=(k - 1) * d {
            table.add(i, j, betti_cross_stacked_closed(k, d, i, j)?);
        }
    }
    Ok(table)
}
