//! Decorated planar binary trees.
//!
//! A [`Tree`] is either the leaf `|` or a node `l ∨_α r` whose root carries a
//! [`Label`] from some alphabet. Every non-leaf tree decomposes uniquely into
//! its left subtree, root label and right subtree, which is what makes the
//! recursive definitions of product, coproduct and antipode well founded.
//!
//! Trees are immutable and cheap to clone: internal nodes are shared behind an
//! [`Arc`]. Each node caches its canonical printed form, and equality, hashing
//! and ordering are all defined through that string. Printing is injective, so
//! this agrees with structural equality (labels included).

mod grammar;
mod json;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use grammar::{parse, parse_prefix};

/// Decoration of an internal vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

impl Label {
    /// Name used for the single label of the undecorated algebra.
    pub const UNDECORATED: &'static str = "o";

    pub fn new(name: &str) -> Result<Self> {
        if Self::is_valid_name(name) {
            Ok(Label(Arc::from(name)))
        } else {
            Err(Error::InvalidLabel(name.to_owned()))
        }
    }

    /// The label `o` of the classical (undecorated) Loday–Ronco trees.
    pub fn undecorated() -> Self {
        Label(Arc::from(Self::UNDECORATED))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_valid_name(name: &str) -> bool {
        !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::new(s)
    }
}

/// An ordered, duplicate-free decoration alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet(Vec<Label>);

impl Alphabet {
    pub fn new(labels: impl IntoIterator<Item = Label>) -> Result<Self> {
        let mut labels: Vec<Label> = labels.into_iter().collect();
        labels.sort();
        labels.dedup();
        if labels.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet(labels))
    }

    /// The singleton alphabet `{o}`.
    pub fn undecorated() -> Self {
        Alphabet(vec![Label::undecorated()])
    }

    /// Parses a comma separated list such as `a,b`.
    pub fn parse_list(list: &str) -> Result<Self> {
        let labels = list
            .split(',')
            .map(|s| Label::new(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        Alphabet::new(labels)
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.0.binary_search(label).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Label> {
        self.0.iter()
    }
}

impl<'a> IntoIterator for &'a Alphabet {
    type Item = &'a Label;
    type IntoIter = std::slice::Iter<'a, Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Internal vertex of a [`Tree`].
#[derive(Debug)]
pub struct Node {
    left: Tree,
    label: Label,
    right: Tree,
    interior: usize,
    depth: usize,
    text: Box<str>,
}

/// A decorated planar binary tree.
#[derive(Clone)]
pub enum Tree {
    Leaf,
    Node(Arc<Node>),
}

impl Tree {
    pub fn leaf() -> Self {
        Tree::Leaf
    }

    /// The grafting `left ∨_label right`: a new root decorated by `label`
    /// carrying `left` and `right` as its two subtrees.
    pub fn graft(left: Tree, label: Label, right: Tree) -> Self {
        let interior = 1 + left.interior_count() + right.interior_count();
        let depth = 1 + left.depth().max(right.depth());
        let text = format!("({}^{} {})", left.as_str(), label, right.as_str()).into_boxed_str();
        Tree::Node(Arc::new(Node {
            left,
            label,
            right,
            interior,
            depth,
            text,
        }))
    }

    /// The unique 1-tree `| ∨_label |`.
    pub fn single(label: Label) -> Self {
        Tree::graft(Tree::Leaf, label, Tree::Leaf)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    /// Splits a non-leaf tree into `(left, root label, right)`.
    pub fn decompose(&self) -> Result<(&Tree, &Label, &Tree)> {
        match self {
            Tree::Leaf => Err(Error::DecomposeLeaf),
            Tree::Node(node) => Ok((&node.left, &node.label, &node.right)),
        }
    }

    pub fn left(&self) -> Option<&Tree> {
        self.node().map(|n| &n.left)
    }

    pub fn right(&self) -> Option<&Tree> {
        self.node().map(|n| &n.right)
    }

    pub fn root_label(&self) -> Option<&Label> {
        self.node().map(|n| &n.label)
    }

    fn node(&self) -> Option<&Node> {
        match self {
            Tree::Leaf => None,
            Tree::Node(node) => Some(node),
        }
    }

    /// Number of internal vertices; this is the grading degree.
    pub fn interior_count(&self) -> usize {
        self.node().map_or(0, |n| n.interior)
    }

    /// Alias for [`Tree::interior_count`].
    pub fn degree(&self) -> usize {
        self.interior_count()
    }

    pub fn depth(&self) -> usize {
        self.node().map_or(0, |n| n.depth)
    }

    /// True when every internal vertex has at most one internal child.
    pub fn is_chain(&self) -> bool {
        match self {
            Tree::Leaf => true,
            Tree::Node(n) => match (n.left.is_leaf(), n.right.is_leaf()) {
                (true, _) => n.right.is_chain(),
                (_, true) => n.left.is_chain(),
                _ => false,
            },
        }
    }

    /// Canonical printed form, e.g. `((|^b |)^a |)`.
    pub fn as_str(&self) -> &str {
        match self {
            Tree::Leaf => "|",
            Tree::Node(n) => &n.text,
        }
    }

    /// Labels in pre-order.
    pub fn labels(&self) -> Vec<&Label> {
        let mut out = Vec::with_capacity(self.interior_count());
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels<'a>(&'a self, out: &mut Vec<&'a Label>) {
        if let Tree::Node(n) = self {
            out.push(&n.label);
            n.left.collect_labels(out);
            n.right.collect_labels(out);
        }
    }

    /// The subtree whose root is reached by following `path` from the root.
    pub fn subtree(&self, path: &EdgePath) -> Option<&Tree> {
        let mut cur = self;
        for step in path.steps() {
            let node = cur.node()?;
            cur = match step {
                Direction::L => &node.left,
                Direction::R => &node.right,
            };
        }
        Some(cur)
    }

    /// All edges joining two internal vertices, in pre-order of their upper
    /// endpoint.
    pub fn internal_edges(&self) -> Vec<EdgePath> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        self.collect_edges(&mut prefix, &mut out);
        out
    }

    fn collect_edges(&self, prefix: &mut Vec<Direction>, out: &mut Vec<EdgePath>) {
        let Tree::Node(n) = self else { return };
        for (dir, child) in [(Direction::L, &n.left), (Direction::R, &n.right)] {
            if !child.is_leaf() {
                prefix.push(dir);
                out.push(EdgePath(prefix.clone()));
                child.collect_edges(prefix, out);
                prefix.pop();
            }
        }
    }

    /// Replaces the subtree at `path` by `replacement`.
    pub fn replace_at(&self, path: &[Direction], replacement: Tree) -> Option<Tree> {
        match path.split_first() {
            None => Some(replacement),
            Some((dir, rest)) => {
                let (l, a, r) = self.decompose().ok()?;
                Some(match dir {
                    Direction::L => {
                        Tree::graft(l.replace_at(rest, replacement)?, a.clone(), r.clone())
                    }
                    Direction::R => {
                        Tree::graft(l.clone(), a.clone(), r.replace_at(rest, replacement)?)
                    }
                })
            }
        }
    }

    /// Applies `f` to every label.
    pub fn map_labels<F>(&self, f: &mut F) -> Result<Tree>
    where
        F: FnMut(&Label) -> Result<Label>,
    {
        match self {
            Tree::Leaf => Ok(Tree::Leaf),
            Tree::Node(n) => {
                let l = n.left.map_labels(f)?;
                let a = f(&n.label)?;
                let r = n.right.map_labels(f)?;
                Ok(Tree::graft(l, a, r))
            }
        }
    }

    /// The right comb `| ∨ (| ∨ (... ∨ |))` with `n` internal vertices.
    pub fn right_comb(n: usize, label: &Label) -> Tree {
        (0..n).fold(Tree::Leaf, |acc, _| {
            Tree::graft(Tree::Leaf, label.clone(), acc)
        })
    }

    /// The left comb `((| ∨ |) ∨ ...) ∨ |` with `n` internal vertices.
    pub fn left_comb(n: usize, label: &Label) -> Tree {
        (0..n).fold(Tree::Leaf, |acc, _| {
            Tree::graft(acc, label.clone(), Tree::Leaf)
        })
    }
}

/// Free function form of [`Tree::graft`].
pub fn graft(left: Tree, alpha: Label, right: Tree) -> Tree {
    Tree::graft(left, alpha, right)
}

/// Sort key byte: `|` sorts before every other character so the leaf comes
/// first among trees.
fn order_byte(b: u8) -> u8 {
    if b == b'|' {
        0
    } else {
        b
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Tree::Leaf, Tree::Leaf) => true,
            (Tree::Node(a), Tree::Node(b)) => Arc::ptr_eq(a, b) || a.text == b.text,
            _ => false,
        }
    }
}

impl Eq for Tree {}

impl Hash for Tree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.as_str().hash(state);
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_str()
            .bytes()
            .map(order_byte)
            .cmp(other.as_str().bytes().map(order_byte))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.as_str())
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Direction of one step away from the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    L,
    R,
}

/// An internal edge, named by the path from the root to its upper endpoint.
///
/// The last step leaves the lower endpoint towards the upper one, so the path
/// is never empty for a valid edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgePath(Vec<Direction>);

impl EdgePath {
    pub fn new(steps: Vec<Direction>) -> Self {
        EdgePath(steps)
    }

    pub fn steps(&self) -> &[Direction] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when `self` lies on the path from the root to `other` (or equals it).
    pub fn is_prefix_of(&self, other: &EdgePath) -> bool {
        other.0.starts_with(&self.0)
    }

    /// True when this names an edge of `tree` with both endpoints internal.
    pub fn is_internal_edge_of(&self, tree: &Tree) -> bool {
        !self.0.is_empty() && tree.subtree(self).is_some_and(|t| !t.is_leaf())
    }
}

impl fmt::Display for EdgePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d:?}")?;
        }
        f.write_str("]")
    }
}

/// Catalan number `(2n)! / (n! (n+1)!)`.
pub fn catalan(n: u32) -> BigUint {
    // C_{k+1} = C_k * 2(2k+1) / (k+2)
    let mut c = BigUint::from(1u32);
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

/// All trees with `n` internal vertices decorated by `alphabet`, in canonical order.
pub fn enumerate(n: usize, alphabet: &Alphabet) -> Result<Vec<Tree>> {
    if alphabet.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    let mut by_degree: Vec<Vec<Tree>> = vec![vec![Tree::Leaf]];
    for m in 1..=n {
        let mut trees = Vec::new();
        for k in 0..m {
            for l in &by_degree[k] {
                for r in &by_degree[m - 1 - k] {
                    for a in alphabet {
                        trees.push(Tree::graft(l.clone(), a.clone(), r.clone()));
                    }
                }
            }
        }
        by_degree.push(trees);
    }
    let mut out = by_degree.swap_remove(n);
    out.sort();
    Ok(out)
}

/// All trees of degree at most `n`, grouped by degree.
pub fn enumerate_up_to(n: usize, alphabet: &Alphabet) -> Result<Vec<Vec<Tree>>> {
    (0..=n).map(|k| enumerate(k, alphabet)).collect()
}
