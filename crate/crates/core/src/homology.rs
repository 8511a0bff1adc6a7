//! Exact reduced simplicial homology over a choice of coefficient field.
//!
//! Dimensions are computed from boundary-matrix ranks: with `f_s` faces of
//! size `s` and `r_s` the rank of the boundary map from size-`s` faces to
//! size-`s-1` faces, the reduced homology in degree `s - 1` has dimension
//! `f_s - r_s - r_{s+1}`. The chain complex is the reduced one: the empty
//! face spans the degree -1 chain group and every vertex maps to it.

use crate::bitset::VertexSubset;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

/// Coefficient field for homology and Betti computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// GF(2); boundary matrices are bit-packed.
    Gf2,
    /// GF(p) for an odd prime p < 2^16.
    Gfp(u16),
    /// The rational numbers, via fraction-free integer elimination.
    Rationals,
}

impl FieldSpec {
    /// GF(p) with a primality check; p = 2 normalises to the packed variant.
    pub fn prime(p: u32) -> Result<Self> {
        if p == 2 {
            return Ok(FieldSpec::Gf2);
        }
        if p < 2 || p >= 1 << 16 || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(FieldSpec::Gfp(p as u16))
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "gf2" => Ok(FieldSpec::Gf2),
            "qq" | "q" => Ok(FieldSpec::Rationals),
            _ => {
                let digits = lower
                    .strip_prefix("gf")
                    .ok_or_else(|| Error::BadFieldSpec(s.to_string()))?;
                let p: u32 = digits
                    .parse()
                    .map_err(|_| Error::BadFieldSpec(s.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Gf2 => write!(f, "gf2"),
            FieldSpec::Gfp(p) => write!(f, "gf{p}"),
            FieldSpec::Rationals => write!(f, "qq"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u32;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

/// Dimensions of the reduced homology of `cx`, indexed by face size:
/// `dims[s]` is the dimension in homological degree `s - 1`. The vector has
/// `dim + 2` entries; `dims[0] = 1` exactly for the empty complex.
pub fn reduced_homology_dims(cx: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    let masks: Vec<u64> = cx.facets().iter().map(|f| f.0).collect();
    homology_dims_of_masks(&masks, field, None)
}

/// Reduced homology dimensions of the complex generated by `facet_masks`
/// (vertices are the set bits). `max_size` truncates the answer: only
/// degrees `s - 1` with `s < max_size` are computed and returned.
///
/// This is the inner loop of the Betti table computation, so it works on
/// raw masks rather than a [`SimplicialComplex`].
pub(crate) fn homology_dims_of_masks(
    facet_masks: &[u64],
    field: FieldSpec,
    max_size: Option<usize>,
) -> Vec<usize> {
    let top = facet_masks
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let want = max_size.map_or(top + 1, |ms| ms.min(top + 1));
    // faces by size, one size beyond `want` for the outgoing rank
    let enum_top = want.min(top);
    let mut sizes: Vec<Vec<u64>> = vec![Vec::new(); enum_top + 1];
    {
        let mut seen: Vec<HashSet<u64>> = vec![HashSet::new(); enum_top + 1];
        seen[0].insert(0);
        for &m in facet_masks {
            let mut sub = m;
            loop {
                let size = sub.count_ones() as usize;
                if size <= enum_top {
                    seen[size].insert(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
        for (set, out) in seen.into_iter().zip(sizes.iter_mut()) {
            let mut faces: Vec<u64> = set.into_iter().collect();
            faces.sort_unstable();
            *out = faces;
        }
    }

    // ranks[s] = rank of the boundary map from size-s to size-(s-1) faces
    let mut ranks = vec![0usize; enum_top + 2];
    for s in 1..=enum_top {
        ranks[s] = boundary_rank(&sizes[s - 1], &sizes[s], field);
    }

    (0..want)
        .map(|s| {
            let f_s = sizes.get(s).map_or(0, |v| v.len());
            f_s - ranks[s] - ranks[s + 1]
        })
        .collect()
}

/// Rank of the boundary matrix from the faces `high` (each of size s) to
/// the faces `low` (size s - 1, sorted ascending as masks).
fn boundary_rank(low: &[u64], high: &[u64], field: FieldSpec) -> usize {
    if high.is_empty() || low.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = low.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    // one row per size-s face: its boundary, as (column, sign) pairs
    let rows: Vec<Vec<(usize, i8)>> = high
        .iter()
        .map(|&m| {
            let face = VertexSubset(m);
            face.iter()
                .map(|v| {
                    let col = index[&(m & !(1 << v))];
                    let sign = if face.rank_of(v) % 2 == 0 { 1 } else { -1 };
                    (col, sign)
                })
                .collect()
        })
        .collect();
    match field {
        FieldSpec::Gf2 => rank_gf2(&rows, low.len()),
        FieldSpec::Gfp(p) => rank_gfp(&rows, low.len(), p as u64),
        FieldSpec::Rationals => rank_rational(&rows, low.len()),
    }
}

fn rank_gf2(rows: &[Vec<(usize, i8)>], width: usize) -> usize {
    let words = width.div_ceil(64);
    // pivots[c] = reduced row whose leading bit is column c
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; width];
    let mut rank = 0;
    let mut packed = vec![0u64; words];
    for row in rows {
        packed.iter_mut().for_each(|w| *w = 0);
        for &(c, _) in row {
            packed[c / 64] ^= 1 << (c % 64);
        }
        while let Some(lead) = first_set_bit(&packed) {
            match &pivots[lead] {
                Some(p) => {
                    for (w, pw) in packed.iter_mut().zip(p) {
                        *w ^= pw;
                    }
                }
                None => {
                    pivots[lead] = Some(packed.clone());
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn first_set_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + words[i].trailing_zeros() as usize)
}

fn rank_gfp(rows: &[Vec<(usize, i8)>], width: usize, p: u64) -> usize {
    // pivot rows normalised to leading 1, kept sorted by leading column
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in rows {
        let mut dense = vec![0u64; width];
        for &(c, s) in row {
            dense[c] = if s > 0 { 1 } else { p - 1 };
        }
        for (lead, pivot_row) in &pivots {
            let factor = dense[*lead];
            if factor != 0 {
                for (x, &pv) in dense.iter_mut().zip(pivot_row) {
                    *x = (*x + (p - factor) * pv) % p;
                }
            }
        }
        if let Some(lead) = dense.iter().position(|&x| x != 0) {
            let inv = mod_inverse(dense[lead], p);
            for x in dense.iter_mut() {
                *x = *x * inv % p;
            }
            let at = pivots.partition_point(|(l, _)| *l < lead);
            pivots.insert(at, (lead, dense));
        }
    }
    pivots.len()
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_rational(rows: &[Vec<(usize, i8)>], width: usize) -> usize {
    // Bareiss fraction-free elimination on a dense integer matrix
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); width];
            for &(c, s) in row {
                dense[c] = BigInt::from(s);
            }
            dense
        })
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..width {
        let Some(pivot_row) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in rest.iter_mut() {
            for j in (col..width).rev() {
                let num = &row[j] * &pivot[col] - &row[col] * &pivot[j];
                debug_assert!((&num % &prev).is_zero());
                row[j] = num / &prev;
            }
        }
        prev = pivot[col].clone();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

impl SimplicialComplex {
    /// Reisner's criterion over the given field: every face link (including
    /// the link of the empty face, the complex itself) must have vanishing
    /// reduced homology below its dimension.
    pub fn is_cohen_macaulay(&self, field: FieldSpec) -> bool {
        for faces in self.faces_by_size(None) {
            for face in faces {
                let link: Vec<u64> = self
                    .facets()
                    .iter()
                    .filter(|f| face.is_subset_of(**f))
                    .map(|f| f.0 & !face.0)
                    .collect();
                let link_dim = link
                    .iter()
                    .map(|m| m.count_ones() as isize)
                    .max()
                    .unwrap_or(0)
                    - 1;
                if link_dim <= 0 {
                    continue;
                }
                // vanishing below the top degree: check H in degrees
                // -1 .. link_dim - 1, i.e. face sizes 0 ..= link_dim
                let dims = homology_dims_of_masks(&link, field, Some(link_dim as usize + 1));
                if dims.iter().any(|&d| d != 0) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{
        clique_complex_multipartite, cone_points_join, cross_polytope_boundary, full_simplex,
        isolated_points, simplex_boundary, stacked_sphere,
    };

    const ALL_FIELDS: [FieldSpec; 4] = [
        FieldSpec::Gf2,
        FieldSpec::Gfp(3),
        FieldSpec::Gfp(32003),
        FieldSpec::Rationals,
    ];

    fn dims_all_fields(cx: &SimplicialComplex) -> Vec<usize> {
        let base = reduced_homology_dims(cx, FieldSpec::Gf2);
        for f in ALL_FIELDS {
            assert_eq!(reduced_homology_dims(cx, f), base, "field {f}");
        }
        base
    }

    fn projective_plane() -> SimplicialComplex {
        SimplicialComplex::from_facets(
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
        .unwrap()
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::Gf2);
        assert_eq!("GF2".parse::<FieldSpec>().unwrap(), FieldSpec::Gf2);
        assert_eq!("qq".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!(
            "gf32003".parse::<FieldSpec>().unwrap(),
            FieldSpec::Gfp(32003)
        );
        assert!(matches!(
            "gf32004".parse::<FieldSpec>(),
            Err(Error::BadPrime(32004))
        ));
        assert!(matches!(
            "gf65537".parse::<FieldSpec>(),
            Err(Error::BadPrime(_))
        ));
        assert!(matches!(
            "zz7".parse::<FieldSpec>(),
            Err(Error::BadFieldSpec(_))
        ));
        assert_eq!(FieldSpec::prime(2).unwrap(), FieldSpec::Gf2);
        assert_eq!(format!("{}", FieldSpec::Gfp(7)), "gf7");
    }

    #[test]
    fn empty_and_point() {
        let empty = SimplicialComplex::from_facets(0, &[], None).unwrap();
        assert_eq!(dims_all_fields(&empty), vec![1]);
        let point = full_simplex(1).unwrap();
        assert_eq!(dims_all_fields(&point), vec![0, 0]);
    }

    #[test]
    fn spheres_have_top_homology() {
        assert_eq!(dims_all_fields(&isolated_points(2).unwrap()), vec![0, 1]);
        for d in 2..=5 {
            let s = simplex_boundary(d).unwrap();
            let mut expect = vec![0; d + 1];
            expect[d] = 1;
            assert_eq!(dims_all_fields(&s), expect);
        }
        assert_eq!(
            dims_all_fields(&cross_polytope_boundary(3).unwrap()),
            vec![0, 0, 0, 1]
        );
        assert_eq!(
            dims_all_fields(&stacked_sphere(3, 7).unwrap()),
            vec![0, 0, 0, 1]
        );
    }

    #[test]
    fn wedges_from_joins_of_point_sets() {
        // m isolated points: wedge of m-1 copies of S^0
        assert_eq!(dims_all_fields(&isolated_points(5).unwrap()), vec![0, 4]);
        // complete bipartite graph: wedge of (a-1)(b-1) circles
        let k23 = clique_complex_multipartite(&[2, 3]).unwrap();
        assert_eq!(dims_all_fields(&k23), vec![0, 0, 2]);
        let k33 = clique_complex_multipartite(&[3, 3]).unwrap();
        assert_eq!(dims_all_fields(&k33), vec![0, 0, 4]);
        // triple join: wedge of 2*2*2 copies of S^2
        let k333 = clique_complex_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(dims_all_fields(&k333), vec![0, 0, 0, 8]);
        // cones are contractible
        let cone = cone_points_join(8, 3).unwrap();
        assert_eq!(dims_all_fields(&cone), vec![0, 0, 0, 0]);
    }

    #[test]
    fn homology_truncation_matches_full_run() {
        let cx = cross_polytope_boundary(4).unwrap();
        let masks: Vec<u64> = cx.facets().iter().map(|f| f.0).collect();
        let full = homology_dims_of_masks(&masks, FieldSpec::Gf2, None);
        for cap in 0..=5 {
            let part = homology_dims_of_masks(&masks, FieldSpec::Gf2, Some(cap));
            assert_eq!(part[..], full[..cap.min(full.len())]);
        }
    }

    #[test]
    fn projective_plane_depends_on_field() {
        let rp2 = projective_plane();
        assert!(rp2.is_normal_pseudomanifold());
        assert_eq!(
            reduced_homology_dims(&rp2, FieldSpec::Gf2),
            vec![0, 0, 1, 1]
        );
        assert_eq!(
            reduced_homology_dims(&rp2, FieldSpec::Gfp(3)),
            vec![0, 0, 0, 0]
        );
        assert_eq!(
            reduced_homology_dims(&rp2, FieldSpec::Gfp(32003)),
            vec![0, 0, 0, 0]
        );
        assert_eq!(
            reduced_homology_dims(&rp2, FieldSpec::Rationals),
            vec![0, 0, 0, 0]
        );
    }

    #[test]
    fn torus_homology() {
        // 7-vertex cyclic triangulation: triangles {i, i+1, i+3} and
        // {i, i+2, i+3} mod 7
        let mut facets = Vec::new();
        for i in 0..7usize {
            facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
            facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
        }
        let torus = SimplicialComplex::from_facets(7, &facets, None).unwrap();
        assert_eq!(torus.f_vector(), vec![1, 7, 21, 14]);
        for f in ALL_FIELDS {
            assert_eq!(reduced_homology_dims(&torus, f), vec![0, 0, 2, 1], "{f}");
        }
    }

    #[test]
    fn cohen_macaulay_checks() {
        assert!(cross_polytope_boundary(3)
            .unwrap()
            .is_cohen_macaulay(FieldSpec::Gf2));
        assert!(cone_points_join(8, 3)
            .unwrap()
            .is_cohen_macaulay(FieldSpec::Gf2));
        assert!(clique_complex_multipartite(&[3, 3, 3])
            .unwrap()
            .is_cohen_macaulay(FieldSpec::Rationals));
        // two triangles sharing one vertex: the shared vertex has a
        // disconnected link
        let bowtie =
            SimplicialComplex::from_facets(5, &[vec![0, 1, 2], vec![2, 3, 4]], None).unwrap();
        assert!(!bowtie.is_cohen_macaulay(FieldSpec::Gf2));
        // non-pure: triangle with a pendant edge
        let pendant =
            SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![2, 3]], None).unwrap();
        assert!(!pendant.is_cohen_macaulay(FieldSpec::Gf2));
        // the projective plane separates the fields
        let rp2 = projective_plane();
        assert!(rp2.is_cohen_macaulay(FieldSpec::Rationals));
        assert!(rp2.is_cohen_macaulay(FieldSpec::Gfp(3)));
        assert!(!rp2.is_cohen_macaulay(FieldSpec::Gf2));
    }
}
