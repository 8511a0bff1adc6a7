//! Constructions: complete multipartite clique complexes, cross-polytope
//! boundaries, connected sums, stacked spheres and cross-polytopal stacked
//! spheres driven by a gluing plan.

use super::SimplicialComplex;
use crate::bitset::{VertexSubset, MAX_VERTICES};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

const MAX_GENERATED_FACETS: u64 = 1 << 20;

/// The full simplex on `n` vertices, colored with `n` singleton classes.
pub fn full_simplex(n: usize) -> Result<SimplicialComplex> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidParams(format!(
            "simplex needs 1..=63 vertices, got {n}"
        )));
    }
    let facet: Vec<usize> = (0..n).collect();
    SimplicialComplex::from_facets(n, &[facet], Some((0..n as u32).collect()))
}

/// `m` isolated points, all in one color class.
pub fn isolated_points(m: usize) -> Result<SimplicialComplex> {
    if m == 0 || m > MAX_VERTICES {
        return Err(Error::InvalidParams(format!(
            "point set needs 1..=63 vertices, got {m}"
        )));
    }
    let facets: Vec<Vec<usize>> = (0..m).map(|v| vec![v]).collect();
    SimplicialComplex::from_facets(m, &facets, Some(vec![0; m]))
}

/// Boundary of the d-simplex: d+1 vertices, all d-subsets as facets.
pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex> {
    if d == 0 || d + 1 > MAX_VERTICES {
        return Err(Error::InvalidParams(format!(
            "simplex boundary needs dimension 1..=62, got {d}"
        )));
    }
    let full = VertexSubset::full(d + 1);
    let facets: Vec<Vec<usize>> = (0..=d)
        .map(|omit| full.difference(VertexSubset::singleton(omit)).to_vec())
        .collect();
    SimplicialComplex::from_facets(d + 1, &facets, None)
}

/// Clique complex of the complete multipartite graph with the given class
/// sizes: the join of `sizes.len()` point sets. Class `i` occupies a
/// consecutive block of labels and is color class `i`. Facets are the
/// transversals picking one vertex per class.
pub fn clique_complex_multipartite(sizes: &[usize]) -> Result<SimplicialComplex> {
    if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
        return Err(Error::InvalidParams(
            "class sizes must be a nonempty list of positive integers".into(),
        ));
    }
    let n: usize = sizes.iter().sum();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    let facet_count: u64 = sizes.iter().map(|&s| s as u64).product();
    if facet_count > MAX_GENERATED_FACETS {
        return Err(Error::InvalidParams(format!(
            "construction would produce {facet_count} facets"
        )));
    }
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        offsets.push(acc);
        acc += s;
    }
    let mut facets = Vec::with_capacity(facet_count as usize);
    let mut pick = vec![0usize; sizes.len()];
    loop {
        facets.push(
            pick.iter()
                .zip(&offsets)
                .map(|(&p, &o)| o + p)
                .collect::<Vec<_>>(),
        );
        // odometer
        let mut idx = sizes.len();
        loop {
            if idx == 0 {
                break;
            }
            idx -= 1;
            pick[idx] += 1;
            if pick[idx] < sizes[idx] {
                break;
            }
            pick[idx] = 0;
        }
        if pick.iter().all(|&p| p == 0) {
            break;
        }
    }
    let mut coloring = Vec::with_capacity(n);
    for (class, &s) in sizes.iter().enumerate() {
        coloring.extend(std::iter::repeat(class as u32).take(s));
    }
    SimplicialComplex::from_facets(n, &facets, Some(coloring))
}

/// Cycle on `len` vertices, `len` even and at least 4, with the alternating
/// 2-coloring (odd cycles admit no proper 2-coloring, so they are rejected).
pub fn cycle_complex(len: usize) -> Result<SimplicialComplex> {
    if len < 4 || len % 2 != 0 {
        return Err(Error::InvalidParams(format!(
            "balanced cycle needs an even length of at least 4, got {len}"
        )));
    }
    let facets: Vec<Vec<usize>> = (0..len).map(|v| vec![v, (v + 1) % len]).collect();
    let coloring = (0..len).map(|v| (v % 2) as u32).collect();
    SimplicialComplex::from_facets(len, &facets, Some(coloring))
}

/// Boundary complex of the d-dimensional cross-polytope: the join of d pairs
/// of points. Pair `c` is `{2c, 2c+1}` in color class `c`.
pub fn cross_polytope_boundary(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::InvalidParams(
            "cross-polytope boundary needs d >= 1".into(),
        ));
    }
    clique_complex_multipartite(&vec![2; d])
}

/// Join of a simplex on `d - 1` vertices with `n - d + 1` isolated points: a
/// Cohen-Macaulay balanced complex of dimension `d - 1` on `n` vertices whose
/// linear Betti strand is extremal among such complexes.
pub fn cone_points_join(n: usize, d: usize) -> Result<SimplicialComplex> {
    if d < 2 || n < d + 1 {
        return Err(Error::InvalidParams(format!(
            "cone over points needs d >= 2 and n >= d + 1, got n={n} d={d}"
        )));
    }
    full_simplex(d - 1)?.join(&isolated_points(n - d + 1)?)
}

/// Connected sum of two pure complexes of the same dimension along the
/// facets `fa` of `a` and `fb` of `b`, identified by the bijection `phi`
/// given as pairs `(vertex of a, vertex of b)`. The identified facet is
/// removed; the remaining vertices of `b` get fresh labels in increasing
/// order. When both complexes are colored, every color class of `b` must
/// meet `fb`, so that `phi` induces a class map into the classes of `a`;
/// otherwise the sum fails with a color mismatch.
pub fn connected_sum(
    a: &SimplicialComplex,
    fa: &[usize],
    b: &SimplicialComplex,
    fb: &[usize],
    phi: &[(usize, usize)],
) -> Result<SimplicialComplex> {
    let fa_mask = VertexSubset::from_vertices(fa.iter().copied());
    let fb_mask = VertexSubset::from_vertices(fb.iter().copied());
    if !a.facets().contains(&fa_mask) {
        return Err(Error::NotAFacet { subset: fa.to_vec() });
    }
    if !b.facets().contains(&fb_mask) {
        return Err(Error::NotAFacet { subset: fb.to_vec() });
    }
    if !a.is_pure() || !b.is_pure() || a.dim() != b.dim() {
        return Err(Error::DimensionMismatch);
    }
    let phi_a = VertexSubset::from_vertices(phi.iter().map(|p| p.0));
    let phi_b = VertexSubset::from_vertices(phi.iter().map(|p| p.1));
    if phi.len() != fa.len() || phi_a != fa_mask || phi_b != fb_mask {
        return Err(Error::BadGluingMap);
    }
    let n = a.num_vertices() + b.num_vertices() - fb.len();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }

    // map each vertex of b to its label in the sum
    let mut b_map = vec![usize::MAX; b.num_vertices()];
    for &(va, vb) in phi {
        b_map[vb] = va;
    }
    let mut fresh = a.num_vertices();
    for slot in b_map.iter_mut() {
        if *slot == usize::MAX {
            *slot = fresh;
            fresh += 1;
        }
    }

    let coloring = match (a.coloring(), b.coloring()) {
        (Some(ca), Some(cb)) => {
            let classes_b = b.num_color_classes().unwrap();
            let mut class_map = vec![None; classes_b];
            for &(va, vb) in phi {
                class_map[cb[vb] as usize] = Some(ca[va]);
            }
            let mut colors = ca.to_vec();
            colors.resize(n, 0);
            for vb in 0..b.num_vertices() {
                let target = b_map[vb];
                if target >= a.num_vertices() {
                    colors[target] =
                        class_map[cb[vb] as usize].ok_or(Error::ColorMismatch)?;
                }
            }
            Some(colors)
        }
        _ => None,
    };

    let mut masks: Vec<VertexSubset> = a
        .facets()
        .iter()
        .copied()
        .filter(|&f| f != fa_mask)
        .collect();
    for &g in b.facets() {
        if g == fb_mask {
            continue;
        }
        masks.push(VertexSubset::from_vertices(g.iter().map(|v| b_map[v])));
    }
    let summed = SimplicialComplex::from_masks(n, masks, None);
    match coloring {
        Some(colors) => summed.with_coloring(colors),
        None => Ok(summed),
    }
}

/// Stacked (d-1)-sphere on `n` vertices: iterated connected sum of copies of
/// the boundary of the d-simplex, each new copy glued onto the lex-last
/// facet of the partial complex.
pub fn stacked_sphere(d: usize, n: usize) -> Result<SimplicialComplex> {
    if d < 2 || n < d + 1 {
        return Err(Error::InvalidParams(format!(
            "stacked sphere needs d >= 2 and n >= d + 1, got d={d} n={n}"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    let block = simplex_boundary(d)?;
    let mut cx = block.clone();
    let glued_facet: Vec<usize> = (0..d).collect();
    for _ in 0..n - d - 1 {
        let target = cx.facets().last().copied().expect("sphere has facets");
        let target: Vec<usize> = target.to_vec();
        let phi: Vec<(usize, usize)> = target
            .iter()
            .copied()
            .zip(glued_facet.iter().copied())
            .collect();
        cx = connected_sum(&cx, &target, &block, &glued_facet, &phi)?;
    }
    Ok(cx)
}

/// How [`stacked_cross_polytopal`] picks the facet each new cross-polytope
/// is glued onto. All plans are deterministic for fixed inputs.
#[derive(Clone, Debug)]
pub enum GluingPlan {
    /// Chain: glue onto the antipode of the previously glued facet, so the
    /// copies form a path.
    Path,
    /// Hub: always glue onto the lex-first remaining facet of the first
    /// copy. Fails when the hub runs out of facets.
    Star,
    /// Seeded uniform choice among the current facets.
    Random { seed: u64 },
    /// Caller-specified facet (as a vertex list) for each of the `k - 2`
    /// gluing steps.
    Explicit { facets: Vec<Vec<usize>> },
}

/// Cross-polytopal stacked sphere on `k * d` vertices: the connected sum of
/// `k - 1` copies of the boundary of the d-dimensional cross-polytope, glued
/// color-compatibly along facets chosen by `plan`. The result is a balanced
/// (d-1)-sphere. Distinct plans can produce combinatorially distinct
/// complexes with identical f-vectors and graded Betti tables.
pub fn stacked_cross_polytopal(
    d: usize,
    k: usize,
    plan: &GluingPlan,
) -> Result<SimplicialComplex> {
    if d == 0 || k < 2 {
        return Err(Error::InvalidParams(format!(
            "cross-polytopal stacking needs d >= 1 and k >= 2, got d={d} k={k}"
        )));
    }
    if d == 1 && k > 2 {
        return Err(Error::InvalidParams(
            "no 0-sphere on more than two vertices exists".into(),
        ));
    }
    let n = k * d;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    if d > 20 {
        return Err(Error::InvalidParams(format!(
            "cross-polytope boundary with d={d} has too many facets"
        )));
    }
    let steps = k - 2;
    if let GluingPlan::Explicit { facets } = plan {
        if facets.len() != steps {
            return Err(Error::InvalidParams(format!(
                "plan lists {} steps, need {steps}",
                facets.len()
            )));
        }
    }

    // colors: pair c of every copy lies in class c
    let mut colors: Vec<u32> = (0..d as u32).flat_map(|c| [c, c]).collect();
    // pairs of the base copy
    let base_pairs: Vec<(usize, usize)> = (0..d).map(|c| (2 * c, 2 * c + 1)).collect();
    let mut facet_set: HashSet<u64> = HashSet::new();
    let mut hub_facets: Vec<u64> = Vec::new();
    insert_copy_facets(&base_pairs, &mut facet_set, None);
    if matches!(plan, GluingPlan::Star) {
        hub_facets = facet_set.iter().copied().collect();
        sort_masks_lex(&mut hub_facets);
    }

    let mut rng = match plan {
        GluingPlan::Random { seed } => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    // lex-first facet of the base copy seeds the path plan
    let mut newest_free: u64 = {
        let mut all: Vec<u64> = facet_set.iter().copied().collect();
        sort_masks_lex(&mut all);
        all[0]
    };
    let mut next_label = 2 * d;

    for step in 0..steps {
        let target: u64 = match plan {
            GluingPlan::Path => newest_free,
            GluingPlan::Star => {
                let pos = hub_facets
                    .iter()
                    .position(|m| facet_set.contains(m))
                    .ok_or_else(|| {
                        Error::InvalidParams(
                            "star plan exhausted the facets of the hub copy".into(),
                        )
                    })?;
                hub_facets[pos]
            }
            GluingPlan::Random { .. } => {
                let mut current: Vec<u64> = facet_set.iter().copied().collect();
                sort_masks_lex(&mut current);
                current[rng.as_mut().unwrap().gen_range(0..current.len())]
            }
            GluingPlan::Explicit { facets } => {
                let list = &facets[step];
                let mask = VertexSubset::from_vertices(list.iter().copied()).0;
                if !facet_set.contains(&mask) {
                    return Err(Error::NotAFacet {
                        subset: list.clone(),
                    });
                }
                mask
            }
        };

        // new copy: pair c = (target's class-c vertex, fresh label)
        let mut glued_by_class = vec![usize::MAX; d];
        let mut t = target;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            glued_by_class[colors[v] as usize] = v;
        }
        let mut new_pairs = Vec::with_capacity(d);
        for (c, &g) in glued_by_class.iter().enumerate() {
            debug_assert_ne!(g, usize::MAX, "facet must meet every class once");
            new_pairs.push((g, next_label));
            colors.push(c as u32);
            next_label += 1;
        }
        facet_set.remove(&target);
        insert_copy_facets(&new_pairs, &mut facet_set, Some(target));
        // the all-fresh facet is the new copy's antipode of the glued one,
        // where a path plan continues from
        newest_free = new_pairs.iter().fold(0u64, |m, p| m | 1 << p.1);
    }

    let masks: Vec<VertexSubset> = facet_set.into_iter().map(VertexSubset).collect();
    Ok(SimplicialComplex::from_masks(n, masks, Some(colors)))
}

/// Inserts the 2^d facets of a cross-polytope copy with the given vertex
/// pairs, skipping `omit` (the facet consumed by the gluing).
fn insert_copy_facets(pairs: &[(usize, usize)], facet_set: &mut HashSet<u64>, omit: Option<u64>) {
    let d = pairs.len();
    for pick in 0u32..1 << d {
        let mut mask = 0u64;
        for (c, &(x, y)) in pairs.iter().enumerate() {
            mask |= 1 << if pick >> c & 1 == 0 { x } else { y };
        }
        if omit != Some(mask) {
            facet_set.insert(mask);
        }
    }
}

fn sort_masks_lex(masks: &mut [u64]) {
    masks.sort_by(|a, b| VertexSubset(*a).lex_cmp(VertexSubset(*b)));
}
