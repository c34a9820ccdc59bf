//! Antipode, structure checks and universal morphisms.

mod target;
mod verify;

use std::sync::{Arc, OnceLock};

use crate::coalgebra::{coproduct_by_cuts, coproduct_rec, counit, reduced_coproduct, star_vee};
use crate::freemod::{LinComb, TensorComb};
use crate::memo::Memo;
use crate::product::{star, star_basis, vee};
use crate::tree::{enumerate, Alphabet, Label, Tree};

pub use target::{
    check_morphism, universal_morphism, vee_identity_sides, LinearTarget, RelabelTarget,
    SelfTarget, UniversalMorphism, VAlgebraTarget,
};
pub use verify::{verify_hopf, Check, Counterexample, HopfReport};

fn antipode_memo() -> &'static Memo<Tree, LinComb> {
    static MEMO: OnceLock<Memo<Tree, LinComb>> = OnceLock::new();
    MEMO.get_or_init(Memo::unbounded)
}

/// `S(|) = |` and `S(t) = −t − Σ S(t′) ∗ t″` over `Δ̃(t) = Σ t′ ⊗ t″`.
/// Memoized.
pub fn antipode(t: &Tree) -> Arc<LinComb> {
    if t.is_leaf() {
        return Arc::new(LinComb::one());
    }
    antipode_memo().get_or_insert_with(t, || {
        let mut out = -LinComb::from(t.clone());
        for ((a, b), c) in reduced_coproduct(t).expect("non-leaf").iter() {
            let sa = antipode(a);
            for (u, cu) in sa.iter() {
                out.add_scaled(&-(c * cu), &star_basis(u, b));
            }
        }
        out
    })
}

/// Linear extension of [`antipode`].
pub fn antipode_lin(x: &LinComb) -> LinComb {
    x.flat_map(|t| (*antipode(t)).clone())
}

/// `m (S ⊗ id) Δ(t)`.
pub fn convolution_left(t: &Tree) -> LinComb {
    let mut out = LinComb::zero();
    for ((a, b), c) in coproduct_rec(t).iter() {
        out.add_scaled(c, &star(&antipode(a), &LinComb::from(b.clone())));
    }
    out
}

/// `m (id ⊗ S) Δ(t)`.
pub fn convolution_right(t: &Tree) -> LinComb {
    let mut out = LinComb::zero();
    for ((a, b), c) in coproduct_rec(t).iter() {
        out.add_scaled(c, &star(&LinComb::from(a.clone()), &antipode(b)));
    }
    out
}

/// `ε(t) |`.
pub fn unit_counit(t: &Tree) -> LinComb {
    LinComb::one().scale(&counit(&LinComb::from(t.clone())))
}

/// Both antipode identities `m(S⊗id)Δ = uε = m(id⊗S)Δ` at `t`.
pub fn convolution_check(t: &Tree) -> bool {
    let target = unit_counit(t);
    convolution_left(t) == target && convolution_right(t) == target
}

/// The two sides of the cocycle condition for `v = x ∨_α y`: the coproduct of
/// `v` computed from admissible cuts, and `v ⊗ | + (∗ ⊗ ∨_α) τ₂₃ (Δx ⊗ Δy)`
/// with `Δx`, `Δy` computed by the recursion.
pub fn cocycle_sides(alpha: &Label, x: &LinComb, y: &LinComb) -> (TensorComb, TensorComb) {
    let v = vee(alpha, x, y);
    let lhs = coproduct_by_cuts(&v);
    let mut rhs = v.tensor(&LinComb::one());
    for (s, cs) in x.iter() {
        for (u, cu) in y.iter() {
            let w = coproduct_rec(s).tensor(&coproduct_rec(u));
            rhs.add_scaled(&(cs * cu), &star_vee(alpha, &w));
        }
    }
    (lhs, rhs)
}

pub fn cocycle_check(alpha: &Label, x: &LinComb, y: &LinComb) -> bool {
    let (lhs, rhs) = cocycle_sides(alpha, x, y);
    lhs == rhs
}

/// For a tree with root label `alpha`: `ε(t) = 0` and every term of `Δ(t)`
/// other than `t ⊗ |` has a second leg with root label `alpha`. Returns the
/// first offending tensor term, if any; trees with another root are skipped.
pub fn coideal_violation(alpha: &Label, t: &Tree) -> Option<(Tree, Tree)> {
    if t.root_label() != Some(alpha) {
        return None;
    }
    coproduct_rec(t)
        .keys()
        .find(|(p, r)| !((p == t && r.is_leaf()) || r.root_label() == Some(alpha)))
        .cloned()
}

/// [`coideal_violation`] over every tree of degree `1..=degree_bound`.
pub fn coideal_check(
    alpha: &Label,
    degree_bound: usize,
    alphabet: &Alphabet,
) -> crate::Result<bool> {
    for n in 1..=degree_bound {
        for t in enumerate(n, alphabet)? {
            if coideal_violation(alpha, &t).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
