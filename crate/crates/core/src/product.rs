//! The associative product `∗` and the graftings `∨_α` on linear combinations.
//!
//! On basis trees, with `T = T^l ∨_α T^r` and `T' = T'^l ∨_β T'^r`:
//!
//! ```text
//! | ∗ T = T ∗ | = T
//! T ∗ T' = T^l ∨_α (T^r ∗ T') + (T ∗ T'^l) ∨_β T'^r
//! ```
//!
//! Both recursive calls lower the total number of internal vertices, so the
//! recursion terminates. Basis products are memoized in a [`ProductTable`].

use std::sync::{Arc, OnceLock};

use crate::freemod::LinComb;
use crate::memo::Memo;
use crate::tree::{Label, Tree};

/// Memo table for products of basis trees.
pub struct ProductTable {
    memo: Memo<(Tree, Tree), LinComb>,
}

impl ProductTable {
    /// A table holding at most `limit` entries (`None` for no limit).
    pub fn new(limit: Option<usize>) -> Self {
        ProductTable {
            memo: Memo::new(limit),
        }
    }

    /// Process-wide table used by [`star`] and [`star_basis`].
    pub fn global() -> &'static ProductTable {
        static GLOBAL: OnceLock<ProductTable> = OnceLock::new();
        GLOBAL.get_or_init(|| ProductTable::new(None))
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn clear(&self) {
        self.memo.clear()
    }

    /// `s ∗ t` for basis trees.
    pub fn star_basis(&self, s: &Tree, t: &Tree) -> Arc<LinComb> {
        if s.is_leaf() {
            return Arc::new(LinComb::from(t.clone()));
        }
        if t.is_leaf() {
            return Arc::new(LinComb::from(s.clone()));
        }
        self.memo
            .get_or_insert_with(&(s.clone(), t.clone()), || self.expand(s, t))
    }

    fn expand(&self, s: &Tree, t: &Tree) -> LinComb {
        let (sl, alpha, sr) = s.decompose().expect("non-leaf");
        let (tl, beta, tr) = t.decompose().expect("non-leaf");
        let mut out = LinComb::zero();
        for (u, c) in self.star_basis(sr, t).iter() {
            out.add_term(c.clone(), Tree::graft(sl.clone(), alpha.clone(), u.clone()));
        }
        for (u, c) in self.star_basis(s, tl).iter() {
            out.add_term(c.clone(), Tree::graft(u.clone(), beta.clone(), tr.clone()));
        }
        out
    }

    /// Bilinear extension of [`ProductTable::star_basis`].
    pub fn star(&self, x: &LinComb, y: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (s, cs) in x.iter() {
            for (t, ct) in y.iter() {
                out.add_scaled(&(cs * ct), &self.star_basis(s, t));
            }
        }
        out
    }
}

/// `s ∗ t` for basis trees, using the global table.
pub fn star_basis(s: &Tree, t: &Tree) -> Arc<LinComb> {
    ProductTable::global().star_basis(s, t)
}

/// `x ∗ y`, using the global table.
pub fn star(x: &LinComb, y: &LinComb) -> LinComb {
    ProductTable::global().star(x, y)
}

/// Left-to-right product of a sequence of trees; the empty product is `|`.
pub fn star_fold<'a>(factors: impl IntoIterator<Item = &'a Tree>) -> LinComb {
    factors.into_iter().fold(LinComb::one(), |acc, t| {
        let mut out = LinComb::zero();
        for (s, c) in acc.iter() {
            out.add_scaled(c, &star_basis(s, t));
        }
        out
    })
}

/// Bilinear extension of grafting: `Σ x_s y_t · (s ∨_α t)`.
pub fn vee(alpha: &Label, x: &LinComb, y: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (s, cs) in x.iter() {
        for (t, ct) in y.iter() {
            out.add_term(cs * ct, Tree::graft(s.clone(), alpha.clone(), t.clone()));
        }
    }
    out
}
