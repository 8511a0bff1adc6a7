//! Monomials over a fixed variable set, lexicographic segments, and the
//! generator-counting formulas for Betti numbers of stable monomial ideals.
//!
//! Variables are `x1 > x2 > ... > xm`. Everything here is exact integer
//! arithmetic; segment ranks are cross-checked against enumeration in tests.

use std::cmp::Ordering;
use std::fmt;

use crate::combinatorics::{binom_u64, max_triangular_leq};
use crate::complex::pext;
use crate::error::{Error, Result};

/// A monomial in `m` variables, stored as an exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The variable `x_p` (1-based) in `m` variables.
    pub fn var(m: usize, p: usize) -> Self {
        let mut exps = vec![0; m];
        exps[p - 1] = 1;
        Monomial { exps }
    }

    /// The degree-2 monomial `x_p x_q` (1-based, `p = q` giving a square).
    pub fn deg2(m: usize, p: usize, q: usize) -> Self {
        let mut exps = vec![0; m];
        exps[p - 1] += 1;
        exps[q - 1] += 1;
        Monomial { exps }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Largest index (1-based) of a variable dividing the monomial; 0 for 1.
    pub fn max_var(&self) -> usize {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |idx| idx + 1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn exponent(&self, p: usize) -> u32 {
        self.exps[p - 1]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Support as a bit mask (variable `x_p` at bit `p-1`).
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (idx, _)| acc | (1 << idx))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", idx + 1)?;
            } else {
                write!(f, "x{}^{}", idx + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Lexicographic comparison with `x1 > x2 > ... > xm`.
///
/// Returns `Greater` when `u` is lex-larger than `v`. Total on equal degrees,
/// and still a total order across degrees (plain vector comparison).
pub fn lex_compare(u: &Monomial, v: &Monomial) -> Result<Ordering> {
    if u.exps.len() != v.exps.len() {
        return Err(Error::DimensionMismatch);
    }
    for (a, b) in u.exps.iter().zip(&v.exps) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            ord => return Ok(ord),
        }
    }
    Ok(Ordering::Equal)
}

/// Generating set of a monomial ideal, graded by degree and sorted
/// lex-descending within each degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    m: usize,
    by_degree: Vec<Vec<Monomial>>,
}

impl MonomialSet {
    pub fn empty(m: usize) -> Self {
        MonomialSet {
            m,
            by_degree: Vec::new(),
        }
    }

    pub fn from_monomials(m: usize, monomials: Vec<Monomial>) -> Result<Self> {
        let mut by_degree: Vec<Vec<Monomial>> = Vec::new();
        for mono in monomials {
            if mono.num_vars() != m {
                return Err(Error::DimensionMismatch);
            }
            let d = mono.degree() as usize;
            if by_degree.len() <= d {
                by_degree.resize(d + 1, Vec::new());
            }
            by_degree[d].push(mono);
        }
        for bucket in &mut by_degree {
            bucket.sort_by(|a, b| lex_compare(b, a).expect("equal variable counts"));
            bucket.dedup();
        }
        Ok(MonomialSet { m, by_degree })
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    pub fn of_degree(&self, degree: usize) -> &[Monomial] {
        self.by_degree.get(degree).map_or(&[], |b| b.as_slice())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.by_degree.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_degree.iter().map(|b| b.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_degree.iter().all(|b| b.is_empty())
    }

    /// True if some member divides `mono`.
    pub fn contains_divisor_of(&self, mono: &Monomial) -> bool {
        self.iter().any(|g| g.divides(mono))
    }
}

fn push_monomials_desc(
    m: usize,
    degree: u32,
    squarefree: bool,
    limit: usize,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if out.len() == limit {
        return;
    }
    let var = prefix.len();
    if var == m {
        if degree == 0 {
            out.push(Monomial::new(prefix.clone()));
        }
        return;
    }
    let remaining_cap = if squarefree {
        (m - var - 1) as u32
    } else {
        u32::MAX
    };
    let top = if squarefree { degree.min(1) } else { degree };
    for e in (0..=top).rev() {
        if degree - e > remaining_cap && var + 1 < m {
            continue;
        }
        if var + 1 == m && e != degree {
            continue;
        }
        prefix.push(e);
        push_monomials_desc(m, degree - e, squarefree, limit, prefix, out);
        prefix.pop();
        if out.len() == limit {
            return;
        }
    }
}

/// All degree-`degree` monomials in `m` variables, lex-descending.
pub fn all_monomials(m: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    push_monomials_desc(m, degree, false, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// All squarefree degree-`degree` monomials in `m` variables, lex-descending.
pub fn all_sqfree_monomials(m: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    push_monomials_desc(m, degree, true, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// The `count` lex-largest monomials of the given degree.
pub fn lex_segment(m: usize, degree: u32, count: u64) -> Result<MonomialSet> {
    let max = binom_u64(m as i64 + degree as i64 - 1, degree as i64);
    if count > max {
        return Err(Error::MonomialIndexOutOfRange { b: count, max });
    }
    let mut out = Vec::new();
    push_monomials_desc(m, degree, false, count as usize, &mut Vec::new(), &mut out);
    MonomialSet::from_monomials(m, out)
}

/// The `count` lex-largest squarefree monomials of the given degree.
pub fn sqfree_lex_segment(m: usize, degree: u32, count: u64) -> Result<MonomialSet> {
    let max = binom_u64(m as i64, degree as i64);
    if count > max {
        return Err(Error::MonomialIndexOutOfRange { b: count, max });
    }
    let mut out = Vec::new();
    push_monomials_desc(m, degree, true, count as usize, &mut Vec::new(), &mut out);
    MonomialSet::from_monomials(m, out)
}

/// Generators of the power ideal: every monomial of the given degree.
pub fn power_ideal_generators(m: usize, degree: u32) -> MonomialSet {
    MonomialSet::from_monomials(m, all_monomials(m, degree)).expect("uniform variable count")
}

/// Index pair `(p, q)`, `p <= q`, of the b-th lex-largest degree-2 monomial
/// `x_p x_q` in `m` variables, squares included.
pub fn bth_largest_deg2(m: usize, b: u64) -> Result<(usize, usize)> {
    let max = binom_u64(m as i64 + 1, 2);
    if b < 1 || b > max {
        return Err(Error::MonomialIndexOutOfRange { b, max });
    }
    let m_i = m as i64;
    let s = max_triangular_leq((max - b) as u128) as i64;
    let p = m_i - s;
    let q = b as i64 + (p - 1) * (p - 2 * m_i) / 2;
    Ok((p as usize, q as usize))
}

/// Index pair `(p, q)`, `p < q`, of the b-th lex-largest squarefree degree-2
/// monomial `x_p x_q` in `m` variables.
pub fn bth_largest_sqfree_deg2(m: usize, b: u64) -> Result<(usize, usize)> {
    let max = binom_u64(m as i64, 2);
    if b < 1 || b > max {
        return Err(Error::MonomialIndexOutOfRange { b, max });
    }
    let m_i = m as i64;
    let s = max_triangular_leq((max - b) as u128) as i64;
    let p = m_i - 1 - s;
    let q = b as i64 + p * (p + 1) / 2 - (p - 1) * m_i;
    Ok((p as usize, q as usize))
}

/// Minimal generators of the ideal spanned by the `b` lex-largest degree-2
/// monomials together with all monomials of degree `power_degree`.
pub fn lex_plus_power_generators(m: usize, b: u64, power_degree: u32) -> Result<MonomialSet> {
    let seg = lex_segment(m, 2, b)?;
    let mut gens: Vec<Monomial> = seg.iter().cloned().collect();
    if power_degree <= 2 {
        return Err(Error::InvalidParams(
            "power degree must exceed the segment degree 2".into(),
        ));
    }
    for mono in all_monomials(m, power_degree) {
        if !seg.contains_divisor_of(&mono) {
            gens.push(mono);
        }
    }
    MonomialSet::from_monomials(m, gens)
}

/// Minimal generators of the squarefree lex ideal `L` in `m` variables for
/// which `S/(L + P)`, with `P` spanned by the squares of the variables, has
/// the prescribed Hilbert function. `quotient_dims[t]` is the dimension in
/// degree `t`; degrees past the end of the slice are zero.
///
/// Built greedily degree by degree, always pushing the lex-largest
/// squarefree monomials still outside the ideal into it. Fails if the
/// prescribed dimensions are not realizable.
pub fn sqfree_lex_ideal_matching(m: usize, quotient_dims: &[u64]) -> Result<MonomialSet> {
    if quotient_dims.first().copied().unwrap_or(0) != 1 {
        return Err(Error::InvalidParams(
            "quotient dimension in degree 0 must be 1".into(),
        ));
    }
    if quotient_dims.get(1).copied().unwrap_or(0) != m as u64 {
        return Err(Error::InvalidParams(
            "quotient dimension in degree 1 must equal the variable count".into(),
        ));
    }
    if quotient_dims.iter().skip(m + 1).any(|&dim| dim != 0) {
        return Err(Error::InvalidParams(
            "quotient dimensions past the variable count must vanish".into(),
        ));
    }
    let mut gens: Vec<Monomial> = Vec::new();
    for t in 2..=m as u32 {
        let want = quotient_dims.get(t as usize).copied().unwrap_or(0);
        let lower = MonomialSet::from_monomials(m, gens.clone())?;
        let free: Vec<Monomial> = all_sqfree_monomials(m, t)
            .into_iter()
            .filter(|u| !lower.contains_divisor_of(u))
            .collect();
        if want > free.len() as u64 {
            return Err(Error::InvalidParams(format!(
                "degree-{t} dimension {want} exceeds the {} monomials available",
                free.len()
            )));
        }
        let new = free.len() - want as usize;
        gens.extend(free.into_iter().take(new));
    }
    MonomialSet::from_monomials(m, gens)
}

/// True if the monomial set generates a stable ideal: swapping any variable
/// of a generator for a smaller-index one lands back in the ideal.
pub fn is_stable_set(g: &MonomialSet) -> bool {
    g.iter().all(|u| {
        (1..=u.num_vars()).all(|t| {
            if u.exponent(t) == 0 {
                return true;
            }
            let mut exps = u.exps.clone();
            exps[t - 1] -= 1;
            (1..t).all(|s| {
                let mut swapped = exps.clone();
                swapped[s - 1] += 1;
                g.contains_divisor_of(&Monomial::new(swapped))
            })
        })
    })
}

/// Squarefree analog of [`is_stable_set`]: swaps respect squarefreeness.
pub fn is_sqfree_stable_set(g: &MonomialSet) -> bool {
    g.iter().all(|u| {
        (1..=u.num_vars()).all(|t| {
            if u.exponent(t) == 0 {
                return true;
            }
            (1..t).filter(|&s| u.exponent(s) == 0).all(|s| {
                let mut exps = u.exps.clone();
                exps[t - 1] -= 1;
                exps[s - 1] += 1;
                g.contains_divisor_of(&Monomial::new(exps))
            })
        })
    })
}

/// Betti number `beta_{i,i+j}` of `S/I` for a stable monomial ideal with
/// minimal generators `g`, counted from generator supports.
///
/// Stability is the caller's responsibility; debug builds verify it.
pub fn ek_betti(g: &MonomialSet, i: usize, j: usize) -> u64 {
    debug_assert!(is_stable_set(g));
    if i == 0 {
        return u64::from(j == 0);
    }
    g.of_degree(j + 1)
        .iter()
        .map(|u| binom_u64(u.max_var() as i64 - 1, i as i64 - 1))
        .sum()
}

/// Betti number `beta_{i,i+j}` of `S/I` for a squarefree stable ideal.
pub fn sqfree_ek_betti(g: &MonomialSet, i: usize, j: usize) -> Result<u64> {
    if let Some(bad) = g.iter().find(|u| !u.is_squarefree()) {
        return Err(Error::NotSquarefree(bad.to_string()));
    }
    debug_assert!(is_sqfree_stable_set(g));
    if i == 0 {
        return Ok(u64::from(j == 0));
    }
    Ok(g.of_degree(j + 1)
        .iter()
        .map(|u| binom_u64(u.max_var() as i64 - j as i64 - 1, i as i64 - 1))
        .sum())
}

/// Checks that `g` is squarefree and, degree by degree, consists of the
/// lex-largest squarefree monomials not already in the ideal.
fn check_sqfree_lex_closed(g: &MonomialSet) -> Result<()> {
    if let Some(bad) = g.iter().find(|u| !u.is_squarefree()) {
        return Err(Error::NotSquarefree(bad.to_string()));
    }
    for degree in 0..g.by_degree.len() as u32 {
        let bucket = g.of_degree(degree as usize);
        if bucket.is_empty() {
            continue;
        }
        let lower = MonomialSet::from_monomials(
            g.m,
            g.iter()
                .filter(|u| u.degree() < degree)
                .cloned()
                .collect(),
        )?;
        let mut want = bucket.iter();
        for candidate in all_sqfree_monomials(g.m, degree) {
            if lower.contains_divisor_of(&candidate) {
                continue;
            }
            match want.next() {
                Some(u) if *u == candidate => continue,
                Some(_) => {
                    return Err(Error::NotLexClosed {
                        witness: candidate.to_string(),
                    })
                }
                None => break,
            }
        }
    }
    Ok(())
}

fn minimalize_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for mask in masks {
        if !kept.iter().any(|k| k & mask == *k) {
            kept.push(mask);
        }
    }
    kept
}

/// `beta_{i,i+j}` of `S/J` where `J` is generated by the squarefree set
/// `gens` (as support masks over `m` compacted variables), required to be
/// squarefree lex. Returns `None`-like 0 for the unit ideal.
fn colon_quotient_betti(gens: &[u64], m: usize, i: usize, j: usize) -> u64 {
    if gens.contains(&0) {
        return 0;
    }
    if i == 0 {
        return u64::from(j == 0);
    }
    let _ = m;
    gens.iter()
        .filter(|u| u.count_ones() as usize == j + 1)
        .map(|u| {
            let max = 64 - u.leading_zeros() as i64;
            binom_u64(max - 1 - j as i64, i as i64 - 1)
        })
        .sum()
}

/// Graded Betti number `beta_{i,i+j}` of `S/(L + P)` where `L` is a
/// squarefree lex ideal in `m` variables and `P` is generated by the squares
/// of all variables.
///
/// Evaluated by splitting the resolution along the square generators: each
/// subset `F` of the variables contributes the Betti numbers of the colon
/// ideal `(L : x_F)`, which is again squarefree lex in the remaining
/// variables.
pub fn lex_plus_squares_betti(l: &MonomialSet, m: usize, i: usize, j: usize) -> Result<u64> {
    if l.num_vars() != m {
        return Err(Error::DimensionMismatch);
    }
    if m >= 26 {
        return Err(Error::InvalidParams(format!(
            "{m} variables is past the subset-enumeration scale this evaluator is built for"
        )));
    }
    check_sqfree_lex_closed(l)?;
    let gen_masks: Vec<u64> = l
        .iter()
        .filter(|u| u.degree() > 0)
        .map(|u| u.support_mask())
        .collect();
    let kmax = i.min(j);
    let mut total = 0u64;
    for f in 0u64..(1 << m) {
        let k = f.count_ones() as usize;
        if k > kmax {
            continue;
        }
        if gen_masks.iter().any(|u| u & !f == 0) {
            continue;
        }
        let colon = minimalize_masks(gen_masks.iter().map(|u| u & !f).collect());
        let compacted: Vec<u64> = colon.iter().map(|&u| pext(u, !f)).collect();
        total += colon_quotient_betti(&compacted, m - k, i - k, j - k);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn display_forms() {
        assert_eq!(mono(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(mono(&[0, 0, 0]).to_string(), "1");
        assert_eq!(Monomial::deg2(4, 2, 2).to_string(), "x2^2");
        assert_eq!(Monomial::var(3, 3).to_string(), "x3");
    }

    #[test]
    fn lex_order_basics() {
        let x1x1 = Monomial::deg2(3, 1, 1);
        let x1x2 = Monomial::deg2(3, 1, 2);
        let x1x3 = Monomial::deg2(3, 1, 3);
        let x2x2 = Monomial::deg2(3, 2, 2);
        assert_eq!(lex_compare(&x1x1, &x1x2).unwrap(), Ordering::Greater);
        assert_eq!(lex_compare(&x1x3, &x2x2).unwrap(), Ordering::Greater);
        assert_eq!(lex_compare(&x1x2, &x1x2).unwrap(), Ordering::Equal);
        assert!(lex_compare(&x1x2, &Monomial::deg2(4, 1, 2)).is_err());
    }

    #[test]
    fn descending_enumeration() {
        let all = all_monomials(3, 2);
        let names: Vec<String> = all.iter().map(|u| u.to_string()).collect();
        assert_eq!(names, ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
        let sq = all_sqfree_monomials(4, 2);
        assert_eq!(sq.len(), 6);
        assert_eq!(sq[0].to_string(), "x1*x2");
        assert_eq!(sq[5].to_string(), "x3*x4");
        for w in sq.windows(2) {
            assert_eq!(lex_compare(&w[0], &w[1]).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn segments() {
        let seg = lex_segment(8, 2, 12).unwrap();
        assert_eq!(seg.len(), 12);
        let deg2 = seg.of_degree(2);
        assert_eq!(deg2[11], Monomial::deg2(8, 2, 5));
        assert!(deg2.contains(&Monomial::deg2(8, 2, 2)));
        assert!(lex_segment(2, 3, 4).unwrap().len() == 4);
        assert!(lex_segment(2, 3, 5).is_err());
        assert!(lex_segment(5, 2, 0).unwrap().is_empty());
        let sq = sqfree_lex_segment(4, 2, 3).unwrap();
        assert_eq!(
            sq.of_degree(2).last().unwrap(),
            &Monomial::deg2(4, 1, 4)
        );
    }

    #[test]
    fn deg2_index_formula_matches_enumeration() {
        for m in 1..=12usize {
            let all = all_monomials(m, 2);
            for (idx, u) in all.iter().enumerate() {
                let (p, q) = bth_largest_deg2(m, idx as u64 + 1).unwrap();
                assert!(p <= q);
                assert_eq!(u, &Monomial::deg2(m, p, q), "m={m} b={}", idx + 1);
            }
            assert!(bth_largest_deg2(m, 0).is_err());
            assert!(bth_largest_deg2(m, all.len() as u64 + 1).is_err());
        }
        assert_eq!(bth_largest_deg2(8, 12).unwrap(), (2, 5));
        assert_eq!(bth_largest_deg2(7, 24).unwrap(), (5, 6));
        assert_eq!(bth_largest_deg2(9, 1).unwrap(), (1, 1));
    }

    #[test]
    fn sqfree_deg2_index_formula_matches_enumeration() {
        for m in 2..=12usize {
            let all = all_sqfree_monomials(m, 2);
            for (idx, u) in all.iter().enumerate() {
                let (p, q) = bth_largest_sqfree_deg2(m, idx as u64 + 1).unwrap();
                assert!(p < q);
                assert_eq!(u, &Monomial::deg2(m, p, q), "m={m} b={}", idx + 1);
            }
            assert!(bth_largest_sqfree_deg2(m, all.len() as u64 + 1).is_err());
        }
        assert_eq!(bth_largest_sqfree_deg2(8, 4).unwrap(), (1, 5));
        assert_eq!(bth_largest_sqfree_deg2(4, 6).unwrap(), (3, 4));
        assert_eq!(bth_largest_sqfree_deg2(8, 7).unwrap(), (1, 8));
        assert_eq!(bth_largest_sqfree_deg2(5, 1).unwrap(), (1, 2));
    }

    #[test]
    fn ek_on_deg2_segment() {
        let seg = lex_segment(8, 2, 12).unwrap();
        let row: Vec<u64> = (0..=8).map(|i| ek_betti(&seg, i, 1)).collect();
        assert_eq!(row, [0, 12, 38, 66, 75, 57, 28, 8, 1]);
        assert_eq!(ek_betti(&seg, 1, 2), 0);
        let empty = MonomialSet::empty(8);
        assert_eq!(ek_betti(&empty, 0, 0), 1);
        assert_eq!(ek_betti(&empty, 3, 1), 0);
    }

    #[test]
    fn ek_on_power_ideal() {
        let g = power_ideal_generators(5, 3);
        for i in 1..=8usize {
            let expect = binom_u64(i as i64 + 1, 2) * binom_u64(7, i as i64 + 2);
            assert_eq!(ek_betti(&g, i, 2), expect);
            assert_eq!(ek_betti(&g, i, 1), 0);
        }
    }

    #[test]
    fn completed_power_generators_are_minimal() {
        let g = lex_plus_power_generators(8, 12, 3).unwrap();
        assert_eq!(g.of_degree(2).len(), 12);
        let gens: Vec<&Monomial> = g.iter().collect();
        for (a_idx, a) in gens.iter().enumerate() {
            for (b_idx, b) in gens.iter().enumerate() {
                if a_idx != b_idx {
                    assert!(!a.divides(b), "{a} divides {b}");
                }
            }
        }
        for u in all_monomials(8, 3) {
            assert!(g.contains_divisor_of(&u));
        }
        assert!(lex_plus_power_generators(8, 12, 2).is_err());
    }

    #[test]
    fn completion_stays_below_segment_corner() {
        let (p, q) = bth_largest_deg2(8, 12).unwrap();
        for j in 2..=4u32 {
            let g = lex_plus_power_generators(8, 12, j + 1).unwrap();
            let mut corner = vec![0u32; 8];
            corner[p - 1] += 1;
            corner[q - 1] += 1;
            corner[7] += j - 1;
            let corner = Monomial::new(corner);
            for u in g.of_degree(j as usize + 1) {
                assert_eq!(lex_compare(&corner, u).unwrap(), Ordering::Greater);
            }
        }
    }

    #[test]
    fn sqfree_ek_counts() {
        let g = MonomialSet::from_monomials(3, vec![Monomial::deg2(3, 1, 2)]).unwrap();
        assert_eq!(sqfree_ek_betti(&g, 1, 1).unwrap(), 1);
        assert_eq!(sqfree_ek_betti(&g, 2, 1).unwrap(), 0);
        let full = MonomialSet::from_monomials(4, all_sqfree_monomials(4, 2)).unwrap();
        assert_eq!(sqfree_ek_betti(&full, 1, 1).unwrap(), 6);
        let bad = MonomialSet::from_monomials(3, vec![Monomial::deg2(3, 2, 2)]).unwrap();
        assert!(sqfree_ek_betti(&bad, 1, 1).is_err());
    }

    #[test]
    fn lps_koszul_diagonal() {
        for m in 1..=8usize {
            let l = MonomialSet::empty(m);
            for i in 0..=m {
                for j in 0..=m {
                    let got = lex_plus_squares_betti(&l, m, i, j).unwrap();
                    let expect = if i == j { binom_u64(m as i64, i as i64) } else { 0 };
                    assert_eq!(got, expect, "m={m} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn lps_principal_example() {
        let l = MonomialSet::from_monomials(3, vec![Monomial::deg2(3, 1, 2)]).unwrap();
        let mut table = Vec::new();
        for i in 0..=5usize {
            for j in 0..=5usize {
                let v = lex_plus_squares_betti(&l, 3, i, j).unwrap();
                if v > 0 {
                    table.push((i, j, v));
                }
            }
        }
        assert_eq!(
            table,
            [(0, 0, 1), (1, 1, 4), (2, 1, 2), (2, 2, 3), (3, 2, 2)]
        );
    }

    #[test]
    fn matching_ideal_realizes_prescribed_dimensions() {
        let l = sqfree_lex_ideal_matching(4, &[1, 4, 4]).unwrap();
        let expect = vec![
            Monomial::deg2(4, 1, 2),
            Monomial::deg2(4, 1, 3),
            Monomial::new(vec![0, 1, 1, 1]),
        ];
        assert_eq!(l.iter().cloned().collect::<Vec<_>>(), expect);

        let dims = [1u64, 6, 12, 8];
        let l = sqfree_lex_ideal_matching(6, &dims).unwrap();
        for t in 0..=6u32 {
            let free = all_sqfree_monomials(6, t)
                .iter()
                .filter(|u| !l.contains_divisor_of(u))
                .count() as u64;
            assert_eq!(free, dims.get(t as usize).copied().unwrap_or(0), "degree {t}");
        }
        assert!(lex_plus_squares_betti(&l, 6, 1, 1).is_ok());
    }

    #[test]
    fn matching_ideal_rejects_unrealizable_dimensions() {
        assert!(sqfree_lex_ideal_matching(4, &[2, 4]).is_err());
        assert!(sqfree_lex_ideal_matching(4, &[1, 3]).is_err());
        assert!(sqfree_lex_ideal_matching(4, &[1, 4, 7]).is_err());
        assert!(sqfree_lex_ideal_matching(3, &[1, 3, 3, 1, 1]).is_err());
    }

    #[test]
    fn lps_rejects_non_lex_input() {
        let skip = MonomialSet::from_monomials(3, vec![Monomial::deg2(3, 1, 3)]).unwrap();
        assert!(matches!(
            lex_plus_squares_betti(&skip, 3, 1, 1),
            Err(Error::NotLexClosed { .. })
        ));
        let square = MonomialSet::from_monomials(3, vec![Monomial::deg2(3, 1, 1)]).unwrap();
        assert!(matches!(
            lex_plus_squares_betti(&square, 3, 1, 1),
            Err(Error::NotSquarefree(_))
        ));
    }
}
