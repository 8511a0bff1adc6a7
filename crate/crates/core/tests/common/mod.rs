//! Shared corpus and helpers for the integration suites.

use balbetti::complex::{
    clique_complex_multipartite, cone_points_join, cycle_complex, stacked_cross_polytopal,
    GluingPlan,
};
use balbetti::SimplicialComplex;

/// A corpus member: a Cohen-Macaulay complex, optionally with the color
/// class sizes justifying the balanced-complex bounds, plus the clique
/// sizes its Betti table is dominated by (for skeleta these differ from
/// the complex's own partition).
pub struct CorpusMember {
    pub name: String,
    pub cx: SimplicialComplex,
    /// Sizes of the color classes when the member is balanced (so the
    /// Cohen-Macaulay bounds for balanced complexes apply directly).
    pub balanced_sizes: Option<Vec<usize>>,
    /// Class sizes of the clique complex whose skeleton grid dominates
    /// this member's table.
    pub dominating_sizes: Vec<usize>,
    pub is_pseudomanifold: bool,
}

fn clique_member(sizes: &[usize]) -> CorpusMember {
    let cx = clique_complex_multipartite(sizes).unwrap();
    let pseudo = cx.is_normal_pseudomanifold();
    CorpusMember {
        name: format!("clique{sizes:?}"),
        cx,
        balanced_sizes: Some(sizes.to_vec()),
        dominating_sizes: sizes.to_vec(),
        is_pseudomanifold: pseudo,
    }
}

/// Cycle on `len` vertices with the alternating 2-coloring.
pub fn even_cycle(len: usize) -> SimplicialComplex {
    cycle_complex(len).unwrap()
}

/// At least thirty Cohen-Macaulay complexes on at most 14 vertices:
/// multipartite clique complexes, their skeleta, cross-polytopal stacked
/// spheres under several gluing plans, joins of even cycles, and
/// simplex-times-points cones.
pub fn corpus() -> Vec<CorpusMember> {
    let mut members = Vec::new();

    for sizes in [
        vec![2, 2],
        vec![3, 2],
        vec![3, 3],
        vec![4, 2],
        vec![4, 3],
        vec![2, 2, 2],
        vec![3, 2, 2],
        vec![3, 3, 2],
        vec![3, 3, 3],
        vec![4, 3, 2],
        vec![4, 3, 3],
        vec![4, 4, 2],
        vec![2, 2, 2, 2],
        vec![3, 2, 2, 2],
        vec![3, 3, 2, 2],
        vec![3, 3, 3, 2],
        vec![3, 3, 3, 3],
        vec![4, 3, 3, 2],
        vec![3, 3, 3, 4],
        vec![3, 3, 4, 4],
        vec![2, 2, 2, 2, 2],
        vec![3, 2, 2, 2, 2],
    ] {
        members.push(clique_member(&sizes));
    }

    for (d, k, plan, tag) in [
        (3, 3, GluingPlan::Path, "path"),
        (3, 4, GluingPlan::Path, "path"),
        (4, 3, GluingPlan::Path, "path"),
        (3, 4, GluingPlan::Random { seed: 11 }, "random11"),
        (4, 3, GluingPlan::Star, "star"),
    ] {
        let cx = stacked_cross_polytopal(d, k, &plan).unwrap();
        let sizes = vec![k; d];
        members.push(CorpusMember {
            name: format!("cross-stacked(d={d},k={k},{tag})"),
            cx,
            balanced_sizes: Some(sizes.clone()),
            dominating_sizes: sizes,
            is_pseudomanifold: true,
        });
    }

    let joins: [(&str, SimplicialComplex, Vec<usize>); 4] = [
        (
            "cycle6*cycle4",
            even_cycle(6).join(&even_cycle(4)).unwrap(),
            vec![3, 3, 2, 2],
        ),
        (
            "suspension(cycle6)",
            even_cycle(6)
                .join(&balbetti::complex::isolated_points(2).unwrap())
                .unwrap(),
            vec![3, 3, 2],
        ),
        (
            "cycle8*cycle4",
            even_cycle(8).join(&even_cycle(4)).unwrap(),
            vec![4, 4, 2, 2],
        ),
        (
            "cycle6*octahedron",
            even_cycle(6)
                .join(&clique_complex_multipartite(&[2, 2, 2]).unwrap())
                .unwrap(),
            vec![3, 3, 2, 2, 2],
        ),
    ];
    for (name, cx, sizes) in joins {
        members.push(CorpusMember {
            name: name.into(),
            cx,
            balanced_sizes: Some(sizes.clone()),
            dominating_sizes: sizes,
            is_pseudomanifold: true,
        });
    }

    for (n, d) in [(8, 3), (12, 4), (9, 4)] {
        let cx = cone_points_join(n, d).unwrap();
        let mut sizes = vec![1; d - 1];
        sizes.push(n - d + 1);
        members.push(CorpusMember {
            name: format!("cone-join(n={n},d={d})"),
            cx,
            balanced_sizes: Some(sizes.clone()),
            dominating_sizes: sizes,
            is_pseudomanifold: false,
        });
    }

    for (sizes, dim) in [
        (vec![3, 3, 3], 1),
        (vec![3, 3, 3, 3], 1),
        (vec![3, 3, 3, 3], 2),
        (vec![4, 3, 3, 2], 2),
    ] {
        let cx = clique_complex_multipartite(&sizes)
            .unwrap()
            .skeleton(dim)
            .unwrap();
        members.push(CorpusMember {
            name: format!("skel{dim}(clique{sizes:?})"),
            cx,
            balanced_sizes: None,
            dominating_sizes: sizes,
            is_pseudomanifold: false,
        });
    }

    members
}
