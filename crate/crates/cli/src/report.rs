//! Bound report: compares a computed Betti table against every closed-form
//! bound the claimed hypotheses make applicable, cell by cell, and renders
//! the comparison as markdown. An exceeded bound is a finding the report
//! states verbatim, not a program error.

use std::collections::BTreeSet;

use balbetti::bounds::{
    bound_any_balanced, bound_balanced_cm, bound_balanced_cm_lps, bound_general_cm,
    bound_pseudo_general, bound_pseudo_linear,
};
use balbetti::{BettiTable, FieldSpec, SimplicialComplex};

use crate::Failure;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Hypothesis {
    Balanced,
    Cm,
    Pseudomanifold,
}

impl Hypothesis {
    pub fn parse(tag: &str) -> Result<Self, Failure> {
        match tag.trim() {
            "balanced" => Ok(Hypothesis::Balanced),
            "cm" => Ok(Hypothesis::Cm),
            "pseudomanifold" => Ok(Hypothesis::Pseudomanifold),
            other => Err(Failure::Parse(format!(
                "unknown hypothesis '{other}'; expected balanced, cm or pseudomanifold"
            ))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Hypothesis::Balanced => "balanced",
            Hypothesis::Cm => "cm",
            Hypothesis::Pseudomanifold => "pseudomanifold",
        }
    }
}

pub struct BoundsRequest<'a> {
    pub cx: &'a SimplicialComplex,
    pub table: &'a BettiTable,
    pub id: &'a str,
    pub field: FieldSpec,
    pub claimed: &'a BTreeSet<Hypothesis>,
    pub trust: bool,
}

struct Column {
    name: &'static str,
    eval: Box<dyn Fn(usize, usize) -> Option<u64>>,
}

pub fn render_report(req: &BoundsRequest) -> Result<String, Failure> {
    let cx = req.cx;
    let n = cx.num_vertices();
    if cx.dim() < 0 {
        return Err(Failure::Hypothesis(
            "the empty complex supports no bound".into(),
        ));
    }
    let d = (cx.dim() + 1) as usize;

    let mut hypothesis_notes = Vec::new();
    for &h in req.claimed {
        let status = if req.trust {
            "trusted"
        } else {
            let holds = match h {
                Hypothesis::Balanced => cx.is_balanced(),
                Hypothesis::Cm => cx.is_cohen_macaulay(req.field),
                Hypothesis::Pseudomanifold => cx.is_normal_pseudomanifold(),
            };
            if !holds {
                return Err(Failure::Hypothesis(format!(
                    "hypothesis '{}' fails on this complex",
                    h.name()
                )));
            }
            "verified"
        };
        hypothesis_notes.push(format!("{} ({status})", h.name()));
    }

    let balanced = req.claimed.contains(&Hypothesis::Balanced);
    let cm = req.claimed.contains(&Hypothesis::Cm);
    let pseudo = req.claimed.contains(&Hypothesis::Pseudomanifold);

    let sizes = if balanced {
        let sizes = cx.color_class_sizes().ok_or_else(|| {
            Failure::Hypothesis("hypothesis 'balanced' needs a coloring recorded in the input".into())
        })?;
        if sizes.len() != d {
            return Err(Failure::Hypothesis(format!(
                "the recorded coloring has {} classes but dimension {} needs {d}",
                sizes.len(),
                d as isize - 1
            )));
        }
        Some(sizes)
    } else {
        None
    };

    let mut columns: Vec<Column> = Vec::new();
    let mut scope_notes: Vec<String> = Vec::new();

    if let Some(sizes) = &sizes {
        let s = sizes.clone();
        columns.push(Column {
            name: "any-balanced",
            eval: Box::new(move |i, j| Some(bound_any_balanced(&s, i, j))),
        });
        scope_notes.push("any-balanced (every strand)".into());
    }
    if cm {
        if let Some(sizes) = &sizes {
            let b_cm: u64 = sizes.iter().map(|&s| (s as u64) * (s as u64 - 1) / 2).sum();
            if b_cm > 0 {
                let s = sizes.clone();
                columns.push(Column {
                    name: "balanced-cm",
                    eval: Box::new(move |i, j| {
                        if j < 2 || j > d {
                            return None;
                        }
                        bound_balanced_cm(n, d, &s, i, j).ok()
                    }),
                });
                scope_notes.push(format!("balanced-cm (strands 2..={d}, b = {b_cm})"));
            } else {
                scope_notes.push("balanced-cm (inapplicable: every color class is a singleton)".into());
            }
            let b_sq: u64 = sizes
                .iter()
                .map(|&s| {
                    let t = s as u64;
                    if t >= 3 {
                        (t - 1) * (t - 2) / 2
                    } else {
                        0
                    }
                })
                .sum();
            if b_sq > 0 {
                let s = sizes.clone();
                columns.push(Column {
                    name: "squares-refined",
                    eval: Box::new(move |i, j| {
                        if j < 2 || j > d {
                            return None;
                        }
                        bound_balanced_cm_lps(n, d, &s, i, j).ok()
                    }),
                });
                scope_notes.push(format!("squares-refined (strands 2..={d}, b = {b_sq})"));
            } else {
                scope_notes
                    .push("squares-refined (inapplicable: no color class has three vertices)".into());
            }
        }
        columns.push(Column {
            name: "general-cm",
            eval: Box::new(move |i, j| (j >= 1).then(|| bound_general_cm(n, d, i, j))),
        });
        scope_notes.push("general-cm (strands 1 and up)".into());
    }
    if pseudo {
        columns.push(Column {
            name: "pseudo-general",
            eval: Box::new(move |i, j| (j == 1).then(|| bound_pseudo_general(n, d, i))),
        });
        scope_notes.push("pseudo-general (linear strand)".into());
        if sizes.is_some() && d >= 3 {
            columns.push(Column {
                name: "pseudo-linear",
                eval: Box::new(move |i, j| {
                    if j != 1 {
                        return None;
                    }
                    bound_pseudo_linear(n, d, i).ok()
                }),
            });
            scope_notes.push("pseudo-linear (linear strand, balanced)".into());
        }
    }
    if columns.is_empty() {
        return Err(Failure::Hypothesis(
            "no bound applies under the claimed hypotheses".into(),
        ));
    }

    let mut rows = Vec::new();
    let mut checked = 0usize;
    let mut deficits: Vec<String> = Vec::new();
    for j in 0..=req.table.max_j() {
        for i in 0..=n {
            let actual = req.table.get(i, j);
            if actual == 0 {
                continue;
            }
            let mut cells = String::new();
            for col in &columns {
                match (col.eval)(i, j) {
                    Some(bound) => {
                        checked += 1;
                        let slack = bound as i128 - actual as i128;
                        if slack < 0 {
                            deficits.push(format!(
                                "i={i} j={j}: actual {actual} exceeds {} {bound}",
                                col.name
                            ));
                        }
                        cells.push_str(&format!(" {bound} | {slack} |"));
                    }
                    None => cells.push_str(" . | . |"),
                }
            }
            rows.push(format!("| {i} | {j} | {actual} |{cells}"));
        }
    }

    let mut out = String::new();
    out.push_str(&format!("# bound report: {}\n\n", req.id));
    out.push_str(&format!(
        "- vertices: {n}, dimension: {}, field: {}\n",
        d as isize - 1,
        req.field
    ));
    out.push_str(&format!("- hypotheses: {}\n", hypothesis_notes.join(", ")));
    out.push_str(&format!("- bounds: {}\n\n", scope_notes.join("; ")));
    let mut header = String::from("| i | j | actual |");
    let mut rule = String::from("|---|---|---|");
    for col in &columns {
        header.push_str(&format!(" {} | slack |", col.name));
        rule.push_str("---|---|");
    }
    out.push_str(&header);
    out.push('\n');
    out.push_str(&rule);
    out.push('\n');
    for row in &rows {
        out.push_str(row);
        out.push('\n');
    }
    out.push('\n');
    out.push_str("rows with actual = 0 are suppressed; a zero row cannot exceed any bound\n");
    if deficits.is_empty() {
        out.push_str(&format!(
            "overall: PASS ({checked} cells checked, no bound exceeded)\n"
        ));
    } else {
        out.push_str(&format!(
            "overall: FAIL ({} of {checked} checked cells exceed a bound)\n",
            deficits.len()
        ));
        for deficit in &deficits {
            out.push_str(&format!("- {deficit}\n"));
        }
    }
    Ok(out)
}
