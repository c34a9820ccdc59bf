//! Cuts of decorated planar binary trees.
//!
//! A (non-total) cut is a set of edges joining two internal vertices. It is
//! admissible when every path to the root crosses at most one cut edge, i.e.
//! the edge set is an antichain for the ancestor order. Severing a cut edge
//! leaves a leaf stub in the lower component while the upper component keeps
//! its whole subtree. `R^c` is the component containing the root and `P^c` is
//! the left-to-right `∗`-product of the others.
//!
//! The total cut is added by convention with `P = T` and `R = |`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freemod::{LinComb, TensorComb};
use crate::product::star_fold;
use crate::tree::{Direction, EdgePath, Tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutKind {
    NonTotal,
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cut {
    pub edges: BTreeSet<EdgePath>,
    pub kind: CutKind,
}

impl Cut {
    pub fn new(edges: impl IntoIterator<Item = EdgePath>) -> Self {
        Cut {
            edges: edges.into_iter().collect(),
            kind: CutKind::NonTotal,
        }
    }

    pub fn empty() -> Self {
        Cut::new([])
    }

    pub fn total() -> Self {
        Cut {
            edges: BTreeSet::new(),
            kind: CutKind::Total,
        }
    }

    pub fn is_total(&self) -> bool {
        self.kind == CutKind::Total
    }

    pub fn is_empty_cut(&self) -> bool {
        self.kind == CutKind::NonTotal && self.edges.is_empty()
    }

    /// True when no edge lies above another one.
    fn is_antichain(&self) -> bool {
        let edges: Vec<&EdgePath> = self.edges.iter().collect();
        edges.iter().enumerate().all(|(i, e)| {
            edges[i + 1..]
                .iter()
                .all(|f| !e.is_prefix_of(f) && !f.is_prefix_of(e))
        })
    }
}

/// A cut together with its pair `(P^c, R^c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleCutResult {
    #[serde(flatten)]
    pub cut: Cut,
    #[serde(rename = "P")]
    pub p: LinComb,
    #[serde(rename = "R")]
    pub r: Tree,
}

/// Every non-total cut (all `2^E` subsets of the `E` internal edges, ordered
/// by bitmask over the pre-order edge list) followed by the total cut.
pub fn all_cuts(t: &Tree) -> Vec<Cut> {
    let edges = t.internal_edges();
    assert!(
        edges.len() < usize::BITS as usize,
        "too many internal edges"
    );
    let mut out: Vec<Cut> = (0usize..1 << edges.len())
        .map(|mask| {
            Cut::new(
                edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, e)| e.clone()),
            )
        })
        .collect();
    out.push(Cut::total());
    out
}

/// Whether `c` is admissible. The total cut always is.
pub fn is_admissible(_t: &Tree, c: &Cut) -> bool {
    c.is_total() || c.is_antichain()
}

/// Computes `(P^c(t), R^c(t))`.
pub fn cut_pair(t: &Tree, c: &Cut) -> Result<AdmissibleCutResult> {
    if c.is_total() {
        return Ok(AdmissibleCutResult {
            cut: c.clone(),
            p: LinComb::from(t.clone()),
            r: Tree::Leaf,
        });
    }
    if let Some(bad) = c.edges.iter().find(|e| !e.is_internal_edge_of(t)) {
        return Err(Error::InvalidEdge(bad.to_string()));
    }
    if !c.is_antichain() {
        return Err(Error::NotAdmissible);
    }
    // On an antichain the lexicographic order of paths (L < R) is the planar
    // left-to-right order of the severed components.
    let components = c
        .edges
        .iter()
        .map(|e| t.subtree(e).expect("validated edge"));
    let p = star_fold(components);
    let r = c.edges.iter().fold(t.clone(), |acc, e| {
        acc.replace_at(e.steps(), Tree::Leaf)
            .expect("validated edge")
    });
    Ok(AdmissibleCutResult {
        cut: c.clone(),
        p,
        r,
    })
}

/// Admissible cuts by depth-first search: at each internal child either cut
/// the edge leading to it (and stop descending) or keep it and recurse.
/// The empty cut comes first and the total cut last.
pub fn admissible_cuts(t: &Tree) -> Vec<Cut> {
    let mut out: Vec<Cut> = antichains_below(t, &mut Vec::new())
        .into_iter()
        .map(Cut::new)
        .collect();
    out.sort_by_key(|c| c.edges.len());
    out.push(Cut::total());
    out
}

fn antichains_below(t: &Tree, prefix: &mut Vec<Direction>) -> Vec<Vec<EdgePath>> {
    let Ok((l, _, r)) = t.decompose() else {
        return vec![Vec::new()];
    };
    let mut per_child = Vec::with_capacity(2);
    for (dir, child) in [(Direction::L, l), (Direction::R, r)] {
        if child.is_leaf() {
            per_child.push(vec![Vec::new()]);
            continue;
        }
        prefix.push(dir);
        let mut options = antichains_below(child, prefix);
        options.push(vec![EdgePath::new(prefix.clone())]);
        prefix.pop();
        per_child.push(options);
    }
    let mut out = Vec::new();
    for left in &per_child[0] {
        for right in &per_child[1] {
            out.push(left.iter().chain(right).cloned().collect());
        }
    }
    out
}

/// Admissible cuts by filtering all `2^E + 1` cuts.
pub fn admissible_cuts_brute_force(t: &Tree) -> Vec<Cut> {
    all_cuts(t)
        .into_iter()
        .filter(|c| is_admissible(t, c))
        .collect()
}

/// `Σ_{c admissible} P^c(t) ⊗ R^c(t)`, with `Δ(|) = | ⊗ |`.
pub fn coproduct_cuts(t: &Tree) -> TensorComb {
    if t.is_leaf() {
        return TensorComb::basis((Tree::Leaf, Tree::Leaf));
    }
    let mut out = TensorComb::zero();
    for c in admissible_cuts(t) {
        let pair = cut_pair(t, &c).expect("enumerated cuts are admissible");
        out += &pair.p.tensor(&LinComb::from(pair.r));
    }
    out
}
