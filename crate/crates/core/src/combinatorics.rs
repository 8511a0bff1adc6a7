//! Exact integer combinatorics shared by the bound formulas, the lex
//! machinery and the subset enumeration core.

/// Binomial coefficient with the convention used by every closed formula in
/// this crate: `binom(a, k) = 0` whenever `k < 0` or `a < k` (including all
/// negative `a`), and `binom(a, 0) = 1` for `a >= 0`.
pub fn binom(a: i64, k: i64) -> i128 {
    if k < 0 || a < k {
        return 0;
    }
    let (a, k) = (a as u128, k as u128);
    let k = k.min(a - k);
    let mut r: u128 = 1;
    for t in 1..=k {
        r = r * (a - k + t) / t;
    }
    r as i128
}

/// `binom` coerced to u64 for formulas that are nonnegative by construction.
pub fn binom_u64(a: i64, k: i64) -> u64 {
    u64::try_from(binom(a, k)).expect("binomial exceeds u64")
}

pub fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r.saturating_mul(r) > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Largest `s >= 0` with `s(s+1)/2 <= x`.
pub fn max_triangular_leq(x: u128) -> u64 {
    let mut s = (isqrt(8 * x + 1).saturating_sub(1) / 2) as u64;
    while (s as u128 + 1) * (s as u128 + 2) / 2 <= x {
        s += 1;
    }
    while (s as u128) * (s as u128 + 1) / 2 > x {
        s -= 1;
    }
    s
}

/// Next bitmask with the same popcount in increasing numeric order
/// (Gosper's hack). The caller must not step past the last combination.
pub fn next_same_popcount(mask: u64) -> u64 {
    let u = mask & mask.wrapping_neg();
    let v = mask + u;
    v | (((v ^ mask) / u) >> 2)
}

/// The `rank`-th (0-based) c-subset of `0..n` in increasing numeric mask
/// order, i.e. colexicographic order on vertex sets. Pairs with
/// [`next_same_popcount`] for chunked enumeration.
pub fn unrank_colex(n: usize, c: usize, rank: u64) -> u64 {
    debug_assert!(c <= n);
    let mut remaining = rank as i128;
    let mut mask = 0u64;
    let mut upper = n as i64 - 1;
    for j in (1..=c as i64).rev() {
        let mut v = upper;
        while binom(v, j) > remaining {
            v -= 1;
        }
        remaining -= binom(v, j);
        mask |= 1 << v;
        upper = v - 1;
    }
    debug_assert_eq!(remaining, 0);
    mask
}

/// All ordered tuples `(c_1, ..., c_parts)` of positive integers summing to
/// `total`, i.e. compositions of `total` with exactly `parts` parts.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = Vec::with_capacity(parts);
    fn rec(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if total >= 1 {
                cur.push(total);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 1..=total.saturating_sub(parts - 1) {
            cur.push(first);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, &mut cur, &mut out);
    out
}

/// Elementary symmetric polynomial e_k of the given values.
pub fn elementary_symmetric(values: &[usize], k: usize) -> u64 {
    let mut e = vec![0u64; k + 1];
    e[0] = 1;
    for &v in values {
        for j in (1..=k).rev() {
            e[j] += e[j - 1] * v as u64;
        }
    }
    e[k]
}
