//! Coproduct, counit and related maps.
//!
//! The coproduct is available by two independent routes:
//!
//! * [`coproduct_rec`] follows the recursion `Δ(|) = | ⊗ |` and
//!   `Δ(T^l ∨_α T^r) = T ⊗ | + (∗ ⊗ ∨_α) τ₂₃ (Δ(T^l) ⊗ Δ(T^r))`;
//! * [`coproduct_cuts`] sums `P^c(T) ⊗ R^c(T)` over admissible cuts.
//!
//! The two agree on every tree, which the test suites check exhaustively at
//! small degree.

mod cuts;
mod primitives;

use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freemod::{tau23, Coeff, LinComb, Tensor3, Tensor4, TensorComb};
use crate::memo::Memo;
use crate::product::{star, star_basis};
use crate::tree::{Label, Tree};

pub use cuts::{
    admissible_cuts, admissible_cuts_brute_force, all_cuts, coproduct_cuts, cut_pair,
    is_admissible, AdmissibleCutResult, Cut, CutKind,
};
pub use primitives::{primitive_basis, reduced_coproduct_matrix, CoproductMatrix};

fn rec_memo() -> &'static Memo<Tree, TensorComb> {
    static MEMO: OnceLock<Memo<Tree, TensorComb>> = OnceLock::new();
    MEMO.get_or_init(Memo::unbounded)
}

/// `(∗ ⊗ ∨_α) ∘ τ₂₃`: sends `a ⊗ b ⊗ c ⊗ d` to `(a ∗ c) ⊗ (b ∨_α d)`.
pub fn star_vee(alpha: &Label, w: &Tensor4) -> TensorComb {
    let mut out = TensorComb::zero();
    for ([a, c, b, d], coeff) in tau23(w).iter() {
        let right = Tree::graft(b.clone(), alpha.clone(), d.clone());
        for (p, cp) in star_basis(a, c).iter() {
            out.add_term(coeff * cp, (p.clone(), right.clone()));
        }
    }
    out
}

/// Coproduct of a basis tree by the grafting recursion. Memoized.
pub fn coproduct_rec(t: &Tree) -> Arc<TensorComb> {
    if t.is_leaf() {
        return Arc::new(TensorComb::basis((Tree::Leaf, Tree::Leaf)));
    }
    rec_memo().get_or_insert_with(t, || {
        let (l, alpha, r) = t.decompose().expect("non-leaf");
        let mut out = TensorComb::basis((t.clone(), Tree::Leaf));
        out += &star_vee(alpha, &coproduct_rec(l).tensor(&coproduct_rec(r)));
        out
    })
}

/// Linear extension of [`coproduct_rec`]; the default coproduct.
pub fn coproduct(x: &LinComb) -> TensorComb {
    x.flat_map(|t| (*coproduct_rec(t)).clone())
}

/// Linear extension of [`coproduct_cuts`].
pub fn coproduct_by_cuts(x: &LinComb) -> TensorComb {
    x.flat_map(coproduct_cuts)
}

/// Coefficient of the leaf.
pub fn counit(x: &LinComb) -> Coeff {
    x.coeff(&Tree::Leaf)
}

/// `Δ(t) − t ⊗ | − | ⊗ t`, computed from admissible cuts.
pub fn reduced_coproduct(t: &Tree) -> Result<TensorComb> {
    if t.is_leaf() {
        return Err(Error::LeafInput);
    }
    let mut d = coproduct_cuts(t);
    d.add_term(-1, (t.clone(), Tree::Leaf));
    d.add_term(-1, (Tree::Leaf, t.clone()));
    Ok(d)
}

/// `(Δ ⊗ id) w`.
pub fn coproduct_left(w: &TensorComb) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in w.iter() {
        for ((x, y), cd) in coproduct_rec(a).iter() {
            out.add_term(c * cd, [x.clone(), y.clone(), b.clone()]);
        }
    }
    out
}

/// `(id ⊗ Δ) w`.
pub fn coproduct_right(w: &TensorComb) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in w.iter() {
        for ((x, y), cd) in coproduct_rec(b).iter() {
            out.add_term(c * cd, [a.clone(), x.clone(), y.clone()]);
        }
    }
    out
}

/// `(ε ⊗ id) w`.
pub fn counit_left(w: &TensorComb) -> LinComb {
    w.iter()
        .filter(|((a, _), _)| a.is_leaf())
        .map(|((_, b), c)| (c.clone(), b.clone()))
        .collect()
}

/// `(id ⊗ ε) w`.
pub fn counit_right(w: &TensorComb) -> LinComb {
    w.iter()
        .filter(|((_, b), _)| b.is_leaf())
        .map(|((a, _), c)| (c.clone(), a.clone()))
        .collect()
}

/// Componentwise product in `H ⊗ H`: `(a ⊗ b)(c ⊗ d) = (a ∗ c) ⊗ (b ∗ d)`.
pub fn tensor_star(x: &TensorComb, y: &TensorComb) -> TensorComb {
    let mut out = TensorComb::zero();
    for ((a, b), cx) in x.iter() {
        for ((c, d), cy) in y.iter() {
            let coeff = cx * cy;
            let left = star_basis(a, c);
            let right = star_basis(b, d);
            for (p, cp) in left.iter() {
                for (q, cq) in right.iter() {
                    let k = &coeff * cp * cq;
                    if !k.is_zero() {
                        out.add_term(k, (p.clone(), q.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Applies `m ∘ (f ⊗ g)` where `f`, `g` act on basis trees.
pub fn multiply_legs<F, G>(w: &TensorComb, mut f: F, mut g: G) -> LinComb
where
    F: FnMut(&Tree) -> LinComb,
    G: FnMut(&Tree) -> LinComb,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in w.iter() {
        out.add_scaled(c, &star(&f(a), &g(b)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate, Alphabet};

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    /// Builds a tensor from `(coeff, left, right)` triples written as text.
    fn tensor(terms: &[(i64, &str, &str)]) -> TensorComb {
        terms
            .iter()
            .map(|(c, l, r)| (Coeff::from(*c), (t(l), t(r))))
            .collect()
    }

    #[test]
    fn leaf() {
        assert_eq!(*coproduct_rec(&Tree::Leaf), tensor(&[(1, "|", "|")]));
        assert_eq!(coproduct_cuts(&Tree::Leaf), tensor(&[(1, "|", "|")]));
        assert_eq!(reduced_coproduct(&Tree::Leaf), Err(Error::LeafInput));
    }

    #[test]
    fn single_vertex() {
        let a = "(|^a |)";
        let expect = tensor(&[(1, a, "|"), (1, "|", a)]);
        assert_eq!(*coproduct_rec(&t(a)), expect);
        assert_eq!(coproduct_cuts(&t(a)), expect);
        assert!(reduced_coproduct(&t(a)).unwrap().is_zero());
    }

    #[test]
    fn two_vertex_trees() {
        for s in ["(|^a (|^b |))", "((|^b |)^a |)"] {
            let expect = tensor(&[(1, s, "|"), (1, "|", s), (1, "(|^b |)", "(|^a |)")]);
            assert_eq!(*coproduct_rec(&t(s)), expect);
            assert_eq!(coproduct_cuts(&t(s)), expect);
            assert_eq!(
                reduced_coproduct(&t(s)).unwrap(),
                tensor(&[(1, "(|^b |)", "(|^a |)")])
            );
        }
    }

    #[test]
    fn three_vertex_trees() {
        let comb = "((|^b (|^c |))^a |)";
        let expect = tensor(&[
            (1, comb, "|"),
            (1, "|", comb),
            (1, "(|^b (|^c |))", "(|^a |)"),
            (1, "(|^c |)", "((|^b |)^a |)"),
        ]);
        assert_eq!(*coproduct_rec(&t(comb)), expect);

        let bal = "((|^b |)^a (|^c |))";
        let expect = tensor(&[
            (1, bal, "|"),
            (1, "|", bal),
            (1, "(|^b (|^c |))", "(|^a |)"),
            (1, "((|^b |)^c |)", "(|^a |)"),
            (1, "(|^b |)", "(|^a (|^c |))"),
            (1, "(|^c |)", "((|^b |)^a |)"),
        ]);
        assert_eq!(*coproduct_rec(&t(bal)), expect);
        assert_eq!(coproduct_cuts(&t(bal)), expect);
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&LinComb::one()), Coeff::from(1));
        assert_eq!(counit(&LinComb::from(t("(|^a |)"))), Coeff::from(0));
        let x = LinComb::term(3, Tree::Leaf) + LinComb::term(2, t("(|^a |)"));
        assert_eq!(counit(&x), Coeff::from(3));
    }

    #[test]
    fn counit_law_and_grading() {
        let x = Alphabet::parse_list("a,b").unwrap();
        for n in 0..=4 {
            for tree in enumerate(n, &x).unwrap() {
                let d = coproduct_rec(&tree);
                assert_eq!(counit_left(&d), LinComb::from(tree.clone()));
                assert_eq!(counit_right(&d), LinComb::from(tree.clone()));
                assert!(d.keys().all(|(p, r)| p.degree() + r.degree() == n));
            }
        }
    }

    #[test]
    fn coassociativity() {
        let x = Alphabet::parse_list("a,b").unwrap();
        for n in 0..=4 {
            for tree in enumerate(n, &x).unwrap() {
                let d = coproduct_rec(&tree);
                assert_eq!(coproduct_left(&d), coproduct_right(&d), "{tree}");
            }
        }
    }

    #[test]
    fn multiplicativity() {
        let o = Alphabet::undecorated();
        let trees: Vec<Tree> = (0..=3).flat_map(|n| enumerate(n, &o).unwrap()).collect();
        for s in &trees {
            for u in &trees {
                if s.degree() + u.degree() > 4 {
                    continue;
                }
                let lhs = coproduct(&star_basis(s, u));
                let rhs = tensor_star(&coproduct_rec(s), &coproduct_rec(u));
                assert_eq!(lhs, rhs, "{s} * {u}");
            }
        }
    }

    #[test]
    fn second_leg_carries_root_label() {
        let x = Alphabet::parse_list("a,b").unwrap();
        for n in 1..=4 {
            for tree in enumerate(n, &x).unwrap() {
                let alpha = tree.root_label().unwrap();
                for (p, r) in coproduct_rec(&tree).keys() {
                    if (p, r) == (&tree, &Tree::Leaf) {
                        continue;
                    }
                    assert_eq!(r.root_label(), Some(alpha), "{tree}: {p} (x) {r}");
                }
            }
        }
    }
}
