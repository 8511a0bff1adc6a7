//! Graded Betti tables of Stanley-Reisner rings, computed exactly by
//! summing reduced homology of vertex-induced subcomplexes over all vertex
//! subsets.
//!
//! The entry in column `i` of row `j` is the Betti number of homological
//! degree `i` and internal degree `i + j`: the sum, over all subsets `W` of
//! `i + j` vertices, of the dimension of the reduced homology of the
//! subcomplex induced on `W` in degree `j - 1`. Row 0 is the single entry 1
//! at `i = 0` (the ring itself), row 1 the linear strand, and so on up to
//! row `dim + 1`.
//!
//! Subsets are enumerated in fixed-size chunks addressed through the
//! combinatorial number system, so the work splits into independent tasks.
//! With the `parallel` feature (default) the tasks run on rayon; without it
//! the same tasks run in order. Either way each table entry is an exact sum
//! of `u64` values, so results are identical bit for bit.

use crate::bitset::VertexSubset;
use crate::combinatorics::{binom_u64, next_same_popcount, unrank_colex};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{homology_dims_of_masks, FieldSpec};
use std::collections::HashMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Subsets handled per enumeration task.
const CHUNK: u64 = 512;

/// A table of graded Betti numbers, stored densely: `get(i, j)` is the
/// Betti number in homological degree `i` and internal degree `i + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: Vec<Vec<u64>>,
}

impl BettiTable {
    /// Zero table with rows `j = 0 ..= max_j` and columns `i = 0 ..= n`.
    pub fn zero(n: usize, max_j: usize) -> Self {
        BettiTable {
            n,
            entries: vec![vec![0; n + 1]; max_j + 1],
        }
    }

    /// Number of vertices of the underlying complex (the largest possible
    /// total degree).
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Largest row index held by the table.
    pub fn max_j(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries
            .get(j)
            .and_then(|row| row.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        self.entries[j][i] += value;
    }

    /// Nonzero entries as `(i, j, value)`, ordered by `(i, j)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for i in 0..=self.n {
            for (j, row) in self.entries.iter().enumerate() {
                if row[i] != 0 {
                    out.push((i, j, row[i]));
                }
            }
        }
        out
    }

    /// CSV with header `i,j,beta`, one line per nonzero entry, ordered by
    /// `(i, j)`.
    pub fn csv_string(&self) -> String {
        let mut s = String::from("i,j,beta\n");
        for (i, j, v) in self.nonzero() {
            s.push_str(&format!("{i},{j},{v}\n"));
        }
        s
    }

    /// Parses the format written by [`csv_string`](Self::csv_string).
    pub fn parse_csv(n: usize, max_j: usize, text: &str) -> Result<Self> {
        let mut table = BettiTable::zero(n, max_j);
        let bad = |line: &str| Error::InvalidParams(format!("bad table line: {line}"));
        for line in text.lines().skip(1) {
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split(',');
            let next = |part: &mut std::str::Split<'_, char>| -> Result<u64> {
                part.next()
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| bad(line))
            };
            let i = next(&mut parts)? as usize;
            let j = next(&mut parts)? as usize;
            let v = next(&mut parts)?;
            if i > n || j > max_j || parts.next().is_some() {
                return Err(bad(line));
            }
            table.entries[j][i] = v;
        }
        Ok(table)
    }

    /// Markdown table, one row per strand `j`, zero entries shown as dots.
    /// Trailing all-zero rows and columns are trimmed.
    pub fn markdown_string(&self) -> String {
        let max_i = (0..=self.n)
            .rev()
            .find(|&i| self.entries.iter().any(|row| row[i] != 0))
            .unwrap_or(0);
        let max_j = (0..self.entries.len())
            .rev()
            .find(|&j| self.entries[j].iter().any(|&v| v != 0))
            .unwrap_or(0);
        let mut s = String::from("| j\\i |");
        for i in 0..=max_i {
            s.push_str(&format!(" {i} |"));
        }
        s.push('\n');
        s.push_str("|---|");
        s.push_str(&"---|".repeat(max_i + 1));
        s.push('\n');
        for j in 0..=max_j {
            s.push_str(&format!("| {j} |"));
            for i in 0..=max_i {
                match self.entries[j][i] {
                    0 => s.push_str(" . |"),
                    v => s.push_str(&format!(" {v} |")),
                }
            }
            s.push('\n');
        }
        s
    }

    /// Checks the alternating-sum identity linking the table to the face
    /// numbers: for every total degree `t`, the alternating sum of column
    /// entries on the antidiagonal `i + j = t` must match the coefficient
    /// determined by the f-vector (`f[s]` = number of faces with `s`
    /// vertices). Holds only for untruncated tables.
    pub fn verify_hilbert_identity(&self, f: &[u64]) -> bool {
        let n = self.n as i64;
        for t in 0..=self.n {
            let mut lhs: i128 = 0;
            for i in 0..=t {
                let j = t - i;
                let sign = if i % 2 == 0 { 1 } else { -1 };
                lhs += sign * self.get(i, j) as i128;
            }
            let mut rhs: i128 = 0;
            for (s, &fs) in f.iter().enumerate().take(t + 1) {
                let sign = if (t - s) % 2 == 0 { 1 } else { -1 };
                rhs += sign
                    * crate::combinatorics::binom(n - s as i64, (t - s) as i64)
                    * fs as i128;
            }
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// Whether the table has the symmetry of the Betti table of a sphere:
    /// writing `jt` for the top nonzero strand and `c = n - jt`, entry
    /// `(i, j)` must equal entry `(c - i, jt - j)`.
    pub fn is_poincare_self_dual(&self) -> bool {
        let Some(jt) = (0..self.entries.len())
            .rev()
            .find(|&j| self.entries[j].iter().any(|&v| v != 0))
        else {
            return false;
        };
        if jt > self.n {
            return false;
        }
        let c = self.n - jt;
        for j in 0..=jt {
            for i in 0..=self.n {
                let dual = if i <= c { self.get(c - i, jt - j) } else { 0 };
                if self.get(i, j) != dual {
                    return false;
                }
            }
        }
        true
    }
}

/// Options for [`graded_betti`].
#[derive(Clone, Copy, Debug)]
pub struct GradedBettiOptions {
    /// Compute only strands `j <= max_j` (the full table when `None`).
    pub max_j: Option<usize>,
    /// Refuse complexes with more vertices than this: the subset
    /// enumeration is exponential in the vertex count.
    pub cap: usize,
}

impl Default for GradedBettiOptions {
    fn default() -> Self {
        GradedBettiOptions {
            max_j: None,
            cap: 16,
        }
    }
}

/// The graded Betti table of the Stanley-Reisner ring of `cx` over `field`,
/// by enumeration of all vertex subsets.
pub fn graded_betti(
    cx: &SimplicialComplex,
    field: FieldSpec,
    opts: &GradedBettiOptions,
) -> Result<BettiTable> {
    let n = cx.num_vertices();
    if n > opts.cap {
        return Err(Error::EnumerationCapExceeded { n, cap: opts.cap });
    }
    let full_rows = (cx.dim() + 1) as usize;
    let max_j = opts.max_j.map_or(full_rows, |mj| mj.min(full_rows));

    let mut tasks: Vec<(usize, u64, u64)> = Vec::new();
    for c in 0..=n {
        let total = binom_u64(n as i64, c as i64);
        let mut start = 0;
        while start < total {
            let end = (start + CHUNK).min(total);
            tasks.push((c, start, end));
            start = end;
        }
    }

    let run_task = |&(c, start, end): &(usize, u64, u64)| -> Vec<Vec<u64>> {
        let mut local = vec![vec![0u64; n + 1]; max_j + 1];
        let mut memo: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
        let jcap = max_j.min(c);
        let mut w = unrank_colex(n, c, start);
        for step in start..end {
            let key = cx.induced_facet_masks(VertexSubset(w));
            let dims = memo
                .entry(key)
                .or_insert_with_key(|k| homology_dims_of_masks(k, field, Some(jcap + 1)));
            for (j, &dim) in dims.iter().enumerate().take(jcap + 1) {
                local[j][c - j] += dim as u64;
            }
            if step + 1 < end {
                w = next_same_popcount(w);
            }
        }
        local
    };

    #[cfg(feature = "parallel")]
    let locals: Vec<Vec<Vec<u64>>> = tasks.par_iter().map(run_task).collect();
    #[cfg(not(feature = "parallel"))]
    let locals: Vec<Vec<Vec<u64>>> = tasks.iter().map(run_task).collect();

    let mut table = BettiTable::zero(n, max_j);
    for local in locals {
        for (j, row) in local.into_iter().enumerate() {
            for (i, v) in row.into_iter().enumerate() {
                if v != 0 {
                    table.add(i, j, v);
                }
            }
        }
    }
    Ok(table)
}

/// The linear strand `j = 1` of the Betti table, entry `i` being the Betti
/// number of total degree `i + 1`. Only graph connectivity of induced
/// subcomplexes matters here, so this is field-independent and much faster
/// than a full table; the enumeration is still exponential, hence the cap.
pub fn linear_strand(cx: &SimplicialComplex, cap: usize) -> Result<Vec<u64>> {
    let n = cx.num_vertices();
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    let adjacency = cx.adjacency();
    let mut strand = vec![0u64; n + 1];
    for c in 2..=n {
        let total = binom_u64(n as i64, c as i64);
        let mut w = unrank_colex(n, c, 0);
        for step in 0..total {
            strand[c - 1] += (components_within(w, &adjacency) - 1) as u64;
            if step + 1 < total {
                w = next_same_popcount(w);
            }
        }
    }
    Ok(strand)
}

/// Number of connected components of the graph induced on the vertex set
/// `w` (assumed nonempty).
fn components_within(w: u64, adjacency: &[u64]) -> usize {
    let mut remaining = w;
    let mut components = 0;
    while remaining != 0 {
        components += 1;
        let seed = remaining & remaining.wrapping_neg();
        let mut comp = seed;
        loop {
            let mut grown = comp;
            let mut scan = comp;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                grown |= adjacency[v] & w;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        remaining &= !comp;
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex_multipartite, cross_polytope_boundary, full_simplex};

    fn cycle(n: usize) -> SimplicialComplex {
        let facets: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        SimplicialComplex::from_facets(n, &facets, None).unwrap()
    }

    fn table(cx: &SimplicialComplex, field: FieldSpec) -> BettiTable {
        graded_betti(cx, field, &GradedBettiOptions::default()).unwrap()
    }

    #[test]
    fn polynomial_ring_has_trivial_table() {
        let t = table(&full_simplex(5).unwrap(), FieldSpec::Gf2);
        assert_eq!(t.nonzero(), vec![(0, 0, 1)]);
    }

    #[test]
    fn octahedron_table_is_koszul() {
        // three missing edges form a complete intersection
        for field in [FieldSpec::Gf2, FieldSpec::Gfp(32003), FieldSpec::Rationals] {
            let t = table(&cross_polytope_boundary(3).unwrap(), field);
            assert_eq!(
                t.nonzero(),
                vec![(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)]
            );
        }
    }

    #[test]
    fn pentagon_table() {
        let t = table(&cycle(5), FieldSpec::Gf2);
        assert_eq!(
            t.nonzero(),
            vec![(0, 0, 1), (1, 1, 5), (2, 1, 5), (3, 2, 1)]
        );
        assert!(t.is_poincare_self_dual());
        assert!(t.verify_hilbert_identity(&cycle(5).f_vector()));
    }

    #[test]
    fn hexagon_table_is_self_dual() {
        let t = table(&cycle(6), FieldSpec::Rationals);
        assert_eq!(t.get(1, 1), 9);
        assert!(t.is_poincare_self_dual());
        assert!(t.verify_hilbert_identity(&cycle(6).f_vector()));
    }

    #[test]
    fn max_j_truncates_but_agrees() {
        let cx = clique_complex_multipartite(&[2, 2, 3]).unwrap();
        let full = table(&cx, FieldSpec::Gf2);
        let opts = GradedBettiOptions {
            max_j: Some(1),
            ..GradedBettiOptions::default()
        };
        let lin = graded_betti(&cx, FieldSpec::Gf2, &opts).unwrap();
        assert_eq!(lin.max_j(), 1);
        for i in 0..=cx.num_vertices() {
            assert_eq!(lin.get(i, 0), full.get(i, 0));
            assert_eq!(lin.get(i, 1), full.get(i, 1));
        }
        assert!(full.verify_hilbert_identity(&cx.f_vector()));
        assert!(!lin.verify_hilbert_identity(&cx.f_vector()));
    }

    #[test]
    fn linear_strand_matches_table_row() {
        for cx in [
            cycle(6),
            clique_complex_multipartite(&[3, 2, 2]).unwrap(),
            cross_polytope_boundary(3).unwrap(),
        ] {
            let t = table(&cx, FieldSpec::Gf2);
            let strand = linear_strand(&cx, 16).unwrap();
            for (i, &v) in strand.iter().enumerate() {
                assert_eq!(v, t.get(i, 1), "i = {i}");
            }
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let cx = crate::complex::isolated_points(17).unwrap();
        assert!(matches!(
            graded_betti(&cx, FieldSpec::Gf2, &GradedBettiOptions::default()),
            Err(Error::EnumerationCapExceeded { n: 17, cap: 16 })
        ));
        assert!(linear_strand(&cx, 16).is_err());
    }

    #[test]
    fn csv_roundtrip_and_markdown() {
        let t = table(&cycle(5), FieldSpec::Gf2);
        let csv = t.csv_string();
        assert!(csv.starts_with("i,j,beta\n"));
        let back = BettiTable::parse_csv(5, t.max_j(), &csv).unwrap();
        assert_eq!(back, t);
        let md = t.markdown_string();
        assert!(md.contains("| j\\i |"));
        assert!(md.lines().count() >= 4);
        assert!(BettiTable::parse_csv(5, 2, "i,j,beta\n9,9,9\n").is_err());
    }

    #[test]
    fn field_dependence_shows_up_in_tables() {
        // the projective plane has 2-torsion
        let rp2 = SimplicialComplex::from_facets(
            6,
            &[
                vec![0, 1, 2],
                vec![0, 2, 3],
                vec![0, 3, 4],
                vec![0, 4, 5],
                vec![0, 1, 5],
                vec![1, 2, 4],
                vec![2, 4, 5],
                vec![2, 3, 5],
                vec![1, 3, 5],
                vec![1, 3, 4],
            ],
            None,
        )
        .unwrap();
        let t2 = table(&rp2, FieldSpec::Gf2);
        let tq = table(&rp2, FieldSpec::Rationals);
        assert_ne!(t2, tq);
        // both tables still resolve the same Hilbert function
        assert!(t2.verify_hilbert_identity(&rp2.f_vector()));
        assert!(tq.verify_hilbert_identity(&rp2.f_vector()));
        // torsion lengthens the resolution over GF(2)
        assert_eq!(tq.get(4, 2), 0);
        assert!(t2.get(4, 2) > 0);
    }
}
