//! Simplicial complexes on a small labelled vertex set.
//!
//! A complex is stored by its inclusion-maximal faces (facets), each a
//! [`VertexSubset`] bitmask. The vertex set is `0..n` with `n <= 63` and no
//! phantom vertices: every vertex lies in some facet. The complex whose only
//! face is the empty face is represented by `n = 0` with no facets; it shows
//! up as a link of a facet and as an induced subcomplex on the empty set.
//!
//! An optional proper coloring (one class id per vertex) travels with the
//! complex. Construction validates that no face meets a class twice; whether
//! the coloring is *balanced* (exactly `dim + 1` classes) is a separate
//! query, since skeleta deliberately break that property.

mod generators;

pub use generators::{
    clique_complex_multipartite, cone_points_join, connected_sum, cross_polytope_boundary,
    cycle_complex, full_simplex, isolated_points, simplex_boundary, stacked_cross_polytopal,
    stacked_sphere, GluingPlan,
};

use crate::bitset::{VertexSubset, MAX_VERTICES};
use crate::error::{Error, Result};
use std::collections::HashSet;

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSubset>,
    coloring: Option<Vec<u32>>,
}

impl SimplicialComplex {
    /// Builds a complex from facet vertex lists. Input facets may arrive in
    /// any order and may contain redundant (non-maximal or repeated) entries;
    /// the stored facet list is deduplicated, inclusion-reduced and sorted.
    pub fn from_facets(
        n: usize,
        facets: &[Vec<usize>],
        coloring: Option<Vec<u32>>,
    ) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut mask = VertexSubset::EMPTY;
            for &v in facet {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if mask.contains(v) {
                    return Err(Error::RepeatedVertex {
                        facet: facet.clone(),
                        vertex: v,
                    });
                }
                mask.insert(v);
            }
            masks.push(mask);
        }
        let masks = canonical_facets(masks);
        let mut seen = VertexSubset::EMPTY;
        for &f in &masks {
            seen = seen.union(f);
        }
        for v in 0..n {
            if !seen.contains(v) {
                return Err(Error::UnusedVertex { vertex: v });
            }
        }
        let cx = SimplicialComplex {
            n,
            facets: masks,
            coloring: None,
        };
        match coloring {
            None => Ok(cx),
            Some(colors) => cx.with_coloring(colors),
        }
    }

    /// Attaches a coloring, validating length, contiguous nonempty classes
    /// and properness (no face meets a class twice).
    pub fn with_coloring(mut self, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != self.n {
            return Err(Error::ColoringLength {
                got: colors.len(),
                n: self.n,
            });
        }
        let classes = colors.iter().copied().max().map_or(0, |c| c + 1);
        let mut class_seen = vec![false; classes as usize];
        for &c in &colors {
            class_seen[c as usize] = true;
        }
        for (class, seen) in class_seen.iter().enumerate() {
            if !seen {
                return Err(Error::EmptyColorClass {
                    class: class as u32,
                });
            }
        }
        for &facet in &self.facets {
            let mut used = vec![false; classes as usize];
            for v in facet.iter() {
                let c = colors[v] as usize;
                if used[c] {
                    return Err(Error::MonochromaticPair {
                        face: facet.to_vec(),
                        class: colors[v],
                    });
                }
                used[c] = true;
            }
        }
        self.coloring = Some(colors);
        Ok(self)
    }

    /// Internal constructor for derived complexes whose masks are already in
    /// range and reference every vertex. Still canonicalizes the facet list.
    pub(crate) fn from_masks(
        n: usize,
        masks: Vec<VertexSubset>,
        coloring: Option<Vec<u32>>,
    ) -> Self {
        let facets = canonical_facets(masks);
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!({
            let mut seen = VertexSubset::EMPTY;
            for &f in &facets {
                seen = seen.union(f);
            }
            seen == VertexSubset::full(n)
        });
        SimplicialComplex {
            n,
            facets,
            coloring,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSubset] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    pub fn coloring(&self) -> Option<&[u32]> {
        self.coloring.as_deref()
    }

    pub fn num_color_classes(&self) -> Option<usize> {
        self.coloring
            .as_ref()
            .map(|c| c.iter().copied().max().map_or(0, |m| m as usize + 1))
    }

    pub fn color_class_sizes(&self) -> Option<Vec<usize>> {
        let colors = self.coloring.as_ref()?;
        let classes = self.num_color_classes()?;
        let mut sizes = vec![0usize; classes];
        for &c in colors {
            sizes[c as usize] += 1;
        }
        Some(sizes)
    }

    /// Dimension of the complex; -1 for the complex whose only face is empty.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.len() as isize - 1 == d)
    }

    pub fn is_face(&self, face: VertexSubset) -> bool {
        self.facets.iter().any(|&f| face.is_subset_of(f))
    }

    /// All faces grouped by number of vertices: entry `s` lists the faces
    /// with `s` vertices (dimension `s - 1`), lex-sorted. Entry 0 is the
    /// empty face. `max_size` truncates the enumeration.
    pub fn faces_by_size(&self, max_size: Option<usize>) -> Vec<Vec<VertexSubset>> {
        let top = self
            .facets
            .iter()
            .map(|f| f.len())
            .max()
            .unwrap_or(0)
            .min(max_size.unwrap_or(usize::MAX));
        let mut sets: Vec<HashSet<u64>> = vec![HashSet::new(); top + 1];
        // the empty face belongs to every complex, facets or not
        sets[0].insert(0);
        for &facet in &self.facets {
            // enumerate all submasks of the facet
            let m = facet.0;
            let mut sub = m;
            loop {
                let size = sub.count_ones() as usize;
                if size <= top {
                    sets[size].insert(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
        sets.into_iter()
            .map(|set| {
                let mut faces: Vec<VertexSubset> = set.into_iter().map(VertexSubset).collect();
                faces.sort_by(|a, b| a.lex_cmp(*b));
                faces
            })
            .collect()
    }

    /// f-vector indexed by face size: `f[0] = 1` counts the empty face,
    /// `f[s]` the faces with `s` vertices.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces_by_size(None)
            .iter()
            .map(|faces| faces.len() as u64)
            .collect()
    }

    /// h-vector of length `dim + 2`, from the standard binomial transform of
    /// the f-vector. Entries can be negative for complexes that are far from
    /// Cohen-Macaulay.
    pub fn h_vector(&self) -> Vec<i64> {
        let f = self.f_vector();
        let d = (self.dim() + 1) as i64;
        (0..=d)
            .map(|j| {
                let mut h: i128 = 0;
                for i in 0..=j {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    h += sign * crate::combinatorics::binom(d - i, d - j) * f[i as usize] as i128;
                }
                i64::try_from(h).expect("h-vector entry exceeds i64")
            })
            .collect()
    }

    /// The j-skeleton: all faces of dimension at most `j`.
    pub fn skeleton(&self, j: usize) -> Result<Self> {
        let dim = self.dim();
        if (j as isize) > dim {
            return Err(Error::InvalidParams(format!(
                "skeleton dimension {j} exceeds complex dimension {dim}"
            )));
        }
        let size = j + 1;
        let mut masks = Vec::new();
        for &facet in &self.facets {
            if facet.len() <= size {
                masks.push(facet);
            } else {
                let verts = facet.to_vec();
                for comb in combinations(&verts, size) {
                    masks.push(VertexSubset::from_vertices(comb));
                }
            }
        }
        Ok(SimplicialComplex::from_masks(
            self.n,
            masks,
            self.coloring.clone(),
        ))
    }

    /// Join of two complexes on the disjoint union of their vertex sets; the
    /// second complex is relabelled upward by `self.num_vertices()`. When
    /// both sides carry colorings the classes are concatenated, so the join
    /// of balanced complexes is balanced.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let shift = self.n;
        let mut masks = Vec::with_capacity(self.facets.len() * other.facets.len());
        let self_facets: &[VertexSubset] = if self.facets.is_empty() {
            &[VertexSubset::EMPTY]
        } else {
            &self.facets
        };
        let other_facets: Vec<VertexSubset> = if other.facets.is_empty() {
            vec![VertexSubset::EMPTY]
        } else {
            other
                .facets
                .iter()
                .map(|f| VertexSubset(f.0 << shift))
                .collect()
        };
        for &f in self_facets {
            for &g in &other_facets {
                masks.push(f.union(g));
            }
        }
        let coloring = match (&self.coloring, &other.coloring) {
            (Some(a), Some(b)) => {
                let a_classes = self.num_color_classes().unwrap() as u32;
                let mut colors = a.clone();
                colors.extend(b.iter().map(|&c| c + a_classes));
                Some(colors)
            }
            _ => None,
        };
        Ok(SimplicialComplex::from_masks(n, masks, coloring))
    }

    /// Link of a face, on a compactly relabelled vertex set (increasing
    /// original labels). The coloring is not carried over.
    pub fn link(&self, face: &[usize]) -> Result<Self> {
        let mask = VertexSubset::from_vertices(face.iter().copied());
        if face.iter().any(|&v| v >= self.n) || !self.is_face(mask) {
            return Err(Error::NotAFace {
                face: face.to_vec(),
            });
        }
        let rests: Vec<VertexSubset> = self
            .facets
            .iter()
            .filter(|f| mask.is_subset_of(**f))
            .map(|f| f.difference(mask))
            .collect();
        Ok(relabel_compact(&rests))
    }

    /// Induced subcomplex on a vertex subset, compactly relabelled in
    /// increasing original label order. The coloring is not carried over.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let w = VertexSubset::from_vertices(vertices.iter().copied());
        let traces: Vec<VertexSubset> = self.facets.iter().map(|f| f.intersection(w)).collect();
        Ok(relabel_compact(&traces))
    }

    /// Facets of the induced subcomplex on `w`, relabelled to `0..w.len()`,
    /// inclusion-reduced and sorted. This is the canonical key used to
    /// memoize induced-subcomplex homology.
    pub(crate) fn induced_facet_masks(&self, w: VertexSubset) -> Vec<u64> {
        let mut traces: Vec<u64> = self
            .facets
            .iter()
            .map(|f| pext(f.0 & w.0, w.0))
            .collect();
        traces.sort_unstable();
        traces.dedup();
        // inclusion reduction; traces are numerically sorted so a superset
        // can only appear later or be equal
        let mut maximal: Vec<u64> = Vec::with_capacity(traces.len());
        'outer: for (idx, &t) in traces.iter().enumerate() {
            for &u in &traces[idx + 1..] {
                if t & !u == 0 && t != u {
                    continue 'outer;
                }
            }
            maximal.push(t);
        }
        maximal
    }

    /// Neighbor bitmask per vertex in the 1-skeleton.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &facet in &self.facets {
            for v in facet.iter() {
                adj[v] |= facet.0 & !(1 << v);
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v] & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == VertexSubset::full(self.n).0
    }

    /// A complex is balanced when it carries a proper coloring with exactly
    /// `dim + 1` classes, all nonempty.
    pub fn is_balanced(&self) -> bool {
        let Some(colors) = &self.coloring else {
            return false;
        };
        let classes = self.num_color_classes().unwrap();
        if classes as isize != self.dim() + 1 {
            return false;
        }
        let sizes = self.color_class_sizes().unwrap();
        if sizes.iter().any(|&s| s == 0) {
            return false;
        }
        self.facets.iter().all(|facet| {
            let mut used = 0u64;
            facet.iter().all(|v| {
                let bit = 1u64 << colors[v];
                let fresh = used & bit == 0;
                used |= bit;
                fresh
            })
        })
    }

    /// Normal pseudomanifold check: pure, connected, every codimension-one
    /// face lies in exactly two facets, and links of faces of codimension at
    /// least three are connected. Dimension zero is special-cased to the
    /// two-point sphere.
    pub fn is_normal_pseudomanifold(&self) -> bool {
        let dim = self.dim();
        if dim < 0 || !self.is_pure() {
            return false;
        }
        if dim == 0 {
            return self.n == 2;
        }
        if !self.is_connected() {
            return false;
        }
        let d = (dim + 1) as usize;
        let faces = self.faces_by_size(Some(d - 1));
        // ridges: size d-1
        for &ridge in &faces[d - 1] {
            let count = self
                .facets
                .iter()
                .filter(|f| ridge.is_subset_of(**f))
                .count();
            if count != 2 {
                return false;
            }
        }
        // links of faces of dimension <= d-3, i.e. size <= d-2; the empty
        // face's link is the complex itself, already checked connected
        for size in 1..=d.saturating_sub(2) {
            for &face in &faces[size] {
                let link = self
                    .link(&face.to_vec())
                    .expect("face enumerated from the complex");
                if !link.is_connected() {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=", self.n)?;
        f.debug_list().entries(self.facets.iter()).finish()?;
        write!(f, ")")
    }
}

/// Deduplicate, drop non-maximal masks, sort lexicographically. A proper
/// subset is numerically smaller than its superset, so after the numeric
/// sort any superset of `masks[idx]` sits strictly to the right.
fn canonical_facets(mut masks: Vec<VertexSubset>) -> Vec<VertexSubset> {
    masks.sort_unstable();
    masks.dedup();
    let mut maximal: Vec<VertexSubset> = Vec::with_capacity(masks.len());
    'outer: for (idx, &m) in masks.iter().enumerate() {
        for &u in &masks[idx + 1..] {
            if m.is_subset_of(u) {
                continue 'outer;
            }
        }
        maximal.push(m);
    }
    maximal.sort_by(|a, b| a.lex_cmp(*b));
    maximal
}

/// Relabels the union of the given masks to a compact vertex range and
/// returns the complex they generate.
fn relabel_compact(masks: &[VertexSubset]) -> SimplicialComplex {
    let mut support = 0u64;
    for m in masks {
        support |= m.0;
    }
    let n = support.count_ones() as usize;
    let relabeled: Vec<VertexSubset> = masks
        .iter()
        .map(|m| VertexSubset(pext(m.0, support)))
        .collect();
    SimplicialComplex::from_masks(n, relabeled, None)
}

/// Software parallel bit extract: compresses the bits of `x` selected by
/// `mask` into the low bits of the result.
pub(crate) fn pext(x: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut bit = 0u32;
    let mut m = mask;
    while m != 0 {
        let lowest = m & m.wrapping_neg();
        if x & lowest != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        m &= m - 1;
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    items.iter().copied().combinations(k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> SimplicialComplex {
        cross_polytope_boundary(3).unwrap()
    }

    #[test]
    fn from_facets_canonicalizes() {
        let cx = SimplicialComplex::from_facets(
            4,
            &[vec![2, 1], vec![0, 1], vec![1], vec![1, 2], vec![3, 0]],
            None,
        )
        .unwrap();
        assert_eq!(
            cx.facet_lists(),
            vec![vec![0, 1], vec![0, 3], vec![1, 2]]
        );
    }

    #[test]
    fn from_facets_rejects_bad_input() {
        assert!(matches!(
            SimplicialComplex::from_facets(2, &[vec![0, 2]], None),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(2, &[vec![0, 0], vec![1]], None),
            Err(Error::RepeatedVertex { .. })
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(3, &[vec![0, 1]], None),
            Err(Error::UnusedVertex { vertex: 2 })
        ));
    }

    #[test]
    fn empty_complex() {
        let cx = SimplicialComplex::from_facets(0, &[], None).unwrap();
        assert_eq!(cx.dim(), -1);
        assert_eq!(cx.f_vector(), vec![1]);
        assert_eq!(cx.h_vector(), vec![1]);
    }

    #[test]
    fn octahedron_f_and_h() {
        let cx = octahedron();
        assert_eq!(cx.f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(cx.h_vector(), vec![1, 3, 3, 1]);
        assert!(cx.is_pure());
        assert!(cx.is_balanced());
        assert!(cx.is_normal_pseudomanifold());
    }

    #[test]
    fn four_cycle_h_vector() {
        let cx = SimplicialComplex::from_facets(
            4,
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            Some(vec![0, 1, 0, 1]),
        )
        .unwrap();
        assert_eq!(cx.f_vector(), vec![1, 4, 4]);
        assert_eq!(cx.h_vector(), vec![1, 2, 1]);
        assert!(cx.is_balanced());
        assert!(cx.is_normal_pseudomanifold());
    }

    #[test]
    fn skeleton_of_octahedron() {
        let cx = octahedron();
        let skel = cx.skeleton(1).unwrap();
        assert_eq!(skel.f_vector(), vec![1, 6, 12]);
        // coloring survives but is no longer balanced for the lower skeleton
        assert!(!skel.is_balanced());
        assert!(cx.skeleton(3).is_err());
    }

    #[test]
    fn link_and_induced() {
        // 4-cycle: link of a vertex is two isolated points
        let cx = SimplicialComplex::from_facets(
            4,
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            None,
        )
        .unwrap();
        let lk = cx.link(&[0]).unwrap();
        assert_eq!(lk.num_vertices(), 2);
        assert_eq!(lk.dim(), 0);
        let ind = cx.induced(&[0, 1]).unwrap();
        assert_eq!(ind.f_vector(), vec![1, 2, 1]);
        // opposite vertices induce two isolated points
        let ind = cx.induced(&[0, 2]).unwrap();
        assert_eq!(ind.f_vector(), vec![1, 2]);
        // link of a facet is the empty complex
        let lk = cx.link(&[0, 1]).unwrap();
        assert_eq!(lk.dim(), -1);
        assert!(cx.link(&[0, 2]).is_err());
    }

    #[test]
    fn join_multiplies_f_polynomials() {
        let a = octahedron();
        let b = SimplicialComplex::from_facets(2, &[vec![0], vec![1]], Some(vec![0, 0])).unwrap();
        let j = a.join(&b).unwrap();
        let (fa, fb, fj) = (a.f_vector(), b.f_vector(), j.f_vector());
        for s in 0..fj.len() {
            let mut conv = 0u64;
            for t in 0..=s {
                let x = fa.get(t).copied().unwrap_or(0);
                let y = fb.get(s - t).copied().unwrap_or(0);
                conv += x * y;
            }
            assert_eq!(fj[s], conv);
        }
        // octahedron classes (3) then the point class shifted
        assert_eq!(j.num_color_classes(), Some(4));
    }

    #[test]
    fn balanced_needs_dim_plus_one_classes() {
        // hollow triangle with a pendant edge: contains a 3-cycle, so no
        // proper 2-coloring of the 1-skeleton exists
        let facets = vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![2, 3]];
        for bits in 0..16u32 {
            let colors: Vec<u32> = (0..4).map(|v| bits >> v & 1).collect();
            let classes = colors.iter().copied().max().unwrap() + 1;
            if classes != 2 {
                continue;
            }
            let cx = SimplicialComplex::from_facets(4, &facets, Some(colors));
            // either some edge is monochromatic (construction fails) or the
            // coloring is proper but such a coloring cannot exist
            assert!(cx.is_err());
        }
        // with 3 classes it is vertex-colorable but not balanced: 3 != dim+1
        let cx = SimplicialComplex::from_facets(4, &facets, Some(vec![0, 1, 2, 0])).unwrap();
        assert!(!cx.is_balanced());
    }

    #[test]
    fn pseudomanifold_checks() {
        // two triangles sharing an edge: boundary edges lie in one facet only
        let cx =
            SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![1, 2, 3]], None).unwrap();
        assert!(!cx.is_normal_pseudomanifold());
        // disjoint union of two 4-cycles: not connected
        let cx = SimplicialComplex::from_facets(
            8,
            &[
                vec![0, 1],
                vec![1, 2],
                vec![2, 3],
                vec![0, 3],
                vec![4, 5],
                vec![5, 6],
                vec![6, 7],
                vec![4, 7],
            ],
            None,
        )
        .unwrap();
        assert!(!cx.is_normal_pseudomanifold());
        assert!(SimplicialComplex::from_facets(2, &[vec![0], vec![1]], None)
            .unwrap()
            .is_normal_pseudomanifold());
    }

    #[test]
    fn induced_masks_are_canonical() {
        let cx = octahedron();
        // vertices 0 and 1 are the first antipodal pair
        let masks = cx.induced_facet_masks(VertexSubset::from_vertices([0, 1]));
        assert_eq!(masks, vec![0b01, 0b10]);
        let masks = cx.induced_facet_masks(VertexSubset::from_vertices([0, 2]));
        assert_eq!(masks, vec![0b11]);
    }
}
